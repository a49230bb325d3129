//! Scalar abstraction shared by the exact and floating-point pipelines.

use std::fmt::Debug;

use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};

/// Number type the model is evaluated over.
///
/// Exact rationals keep grades, distributions and centroids free of rounding;
/// `f32`/`f64` are accepted for data that only exists in decimal form.
pub trait Scalar:
    Num + Signed + Clone + PartialOrd + Debug + FromPrimitive + ToPrimitive + Send + Sync
{
    /// Builds `num / den` from small integers.
    fn ratio(num: u64, den: u64) -> Self {
        Self::from_u64(num).expect("numerator fits the scalar type")
            / Self::from_u64(den).expect("denominator fits the scalar type")
    }

    /// Lossy view used by the logarithmic measures.
    fn as_f64(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl<T> Scalar for T where
    T: Num + Signed + Clone + PartialOrd + Debug + FromPrimitive + ToPrimitive + Send + Sync
{
}

pub(crate) fn sum<T: Scalar>(values: &[T]) -> T {
    values.iter().fold(T::zero(), |acc, v| acc + v.clone())
}

pub(crate) fn max<T: Scalar>(values: &[T]) -> Option<T> {
    values.iter().fold(None, |best: Option<T>, v| match best {
        Some(b) if b >= *v => Some(b),
        _ => Some(v.clone()),
    })
}
