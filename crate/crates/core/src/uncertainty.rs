//! Possibilistic uncertainty (strife, non-specificity) and normalized Shannon entropy.

use crate::error::{Error, Result};
use crate::profile::{ProfileDistribution, Role};
use crate::scalar::Scalar;

/// Possibility values sorted non-increasingly. A trailing zero is implied
/// after the last stored value.
#[derive(Debug, Clone, PartialEq)]
pub struct OrderedPossibility<T> {
    values: Vec<T>,
}

impl<T: Scalar> OrderedPossibility<T> {
    /// Accepts an already ordered sequence of values in `[0, 1]`.
    pub fn from_values(values: Vec<T>) -> Result<Self> {
        if let Some(v) = values.iter().find(|v| v.is_negative() || **v > T::one()) {
            return Err(Error::Domain(format!("{v:?}")));
        }
        if let Some(i) = values.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::NotOrdered(i + 1));
        }
        Ok(Self { values })
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    fn as_f64(&self) -> Vec<f64> {
        self.values.iter().map(Scalar::as_f64).collect()
    }
}

/// Sorts every profile's possibility in non-increasing order. Ties keep the
/// lexicographic order of their profiles.
pub fn ordered_possibility<T: Scalar>(
    dist: &ProfileDistribution<T>,
) -> Result<OrderedPossibility<T>> {
    if dist.role() != Role::Possibility {
        return Err(Error::RoleMismatch {
            expected: Role::Possibility,
            found: dist.role(),
        });
    }
    let mut values = dist.weights().to_vec();
    // Stable sort; weights are nonnegative rationals or finite floats.
    values.sort_by(|a, b| b.partial_cmp(a).expect("weights are comparable"));
    Ok(OrderedPossibility { values })
}

/// Sum over the jumps `r_i - r_{i+1}` for `i >= 2` (1-based), with
/// `r_{m+1} = 0`. `term(i, prefix)` receives the 1-based index and the
/// prefix sum `r_1 + ... + r_i`.
fn jump_sum(values: &[f64], term: impl Fn(f64, f64) -> f64) -> f64 {
    let mut prefix = 0.0;
    let mut total = 0.0;
    for (idx, &r) in values.iter().enumerate() {
        prefix += r;
        let i = idx + 1;
        if i < 2 {
            continue;
        }
        let next = values.get(idx + 1).copied().unwrap_or(0.0);
        let jump = r - next;
        if jump != 0.0 {
            total += jump * term(i as f64, prefix);
        }
    }
    total
}

/// Strife (discord), in bits.
pub fn strife<T: Scalar>(r: &OrderedPossibility<T>) -> f64 {
    jump_sum(&r.as_f64(), |i, prefix| (i / prefix).log2())
}

/// Non-specificity (imprecision), in bits.
pub fn nonspecificity<T: Scalar>(r: &OrderedPossibility<T>) -> f64 {
    jump_sum(&r.as_f64(), |i, _| i.log2())
}

/// Total possibilistic uncertainty: strife plus non-specificity.
pub fn total_uncertainty<T: Scalar>(r: &OrderedPossibility<T>) -> f64 {
    strife(r) + nonspecificity(r)
}

/// `-(1/ln normalizer) * sum(w ln w)` with `0 ln 0 = 0`.
pub fn entropy_of_weights<T: Scalar>(weights: &[T], normalizer: u64) -> Result<f64> {
    if normalizer < 2 {
        return Err(Error::InvalidNormalizer(normalizer));
    }
    if let Some(w) = weights.iter().find(|w| w.is_negative() || **w > T::one()) {
        return Err(Error::Domain(format!("{w:?}")));
    }
    let sum: f64 = weights
        .iter()
        .map(Scalar::as_f64)
        .filter(|&w| w > 0.0)
        .map(|w| w * w.ln())
        .sum();
    Ok(-sum / (normalizer as f64).ln())
}

/// Normalized Shannon entropy of a membership distribution.
///
/// `normalizer` defaults to the number of profiles in the space.
pub fn shannon_entropy<T: Scalar>(
    dist: &ProfileDistribution<T>,
    normalizer: Option<u64>,
) -> Result<f64> {
    if !matches!(dist.role(), Role::Membership | Role::Probability) {
        return Err(Error::RoleMismatch {
            expected: Role::Membership,
            found: dist.role(),
        });
    }
    let normalizer = normalizer.unwrap_or(dist.space().size() as u64);
    entropy_of_weights(dist.weights(), normalizer)
}

/// The scalar uncertainty measures of one distribution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UncertaintyReport {
    pub strife: f64,
    pub nonspecificity: f64,
    pub total: f64,
    pub shannon: f64,
}

impl UncertaintyReport {
    /// Possibilistic measures from `possibility`, entropy from `entropy_source`.
    pub fn compute<T: Scalar>(
        possibility: &ProfileDistribution<T>,
        entropy_source: &ProfileDistribution<T>,
        normalizer: Option<u64>,
    ) -> Result<Self> {
        let ordered = ordered_possibility(possibility)?;
        let strife = strife(&ordered);
        let nonspecificity = nonspecificity(&ordered);
        Ok(Self {
            strife,
            nonspecificity,
            total: strife + nonspecificity,
            shannon: shannon_entropy(entropy_source, normalizer)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::profile::{membership_distribution, possibilities, ProfileSpace};
    use crate::{FuzzyStageSet, Rational};
    use proptest::prelude::*;

    fn stated(halves: usize, quarters: usize) -> OrderedPossibility<f64> {
        let mut v = vec![1.0, 1.0];
        v.extend(std::iter::repeat_n(0.5, halves));
        v.extend(std::iter::repeat_n(0.258, quarters));
        v.resize(125, 0.0);
        OrderedPossibility::from_values(v).unwrap()
    }

    fn exact_first_group() -> OrderedPossibility<Rational> {
        let sets = vec![
            FuzzyStageSet::from_quarters("S1", &[0, 0, 2, 1, 1]).unwrap(),
            FuzzyStageSet::from_quarters("S2", &[0, 0, 2, 1, 0]).unwrap(),
            FuzzyStageSet::from_quarters("S3", &[1, 1, 1, 0, 0]).unwrap(),
        ];
        let d = membership_distribution::<Rational>(&sets).unwrap();
        ordered_possibility(&possibilities(&d).unwrap()).unwrap()
    }

    #[test]
    fn crisp_has_no_uncertainty() {
        let mut v = vec![0.0; 10];
        v[0] = 1.0;
        let r = OrderedPossibility::from_values(v).unwrap();
        assert_eq!(strife(&r), 0.0);
        assert_eq!(nonspecificity(&r), 0.0);
        assert_eq!(total_uncertainty(&r), 0.0);
        let empty = OrderedPossibility::<f64>::from_values(vec![]).unwrap();
        assert_eq!(total_uncertainty(&empty), 0.0);
    }

    #[test]
    fn stated_distributions() {
        let g1 = stated(6, 6);
        assert!((strife(&g1) - 0.445).abs() < 0.01);
        assert!((nonspecificity(&g1) - 2.208).abs() < 0.01);
        assert!((total_uncertainty(&g1) - 2.653).abs() < 0.02);
        let g2 = stated(6, 5);
        assert!((strife(&g2) - 0.432).abs() < 0.01);
        assert!((nonspecificity(&g2) - 2.179).abs() < 0.01);
        assert!((total_uncertainty(&g2) - 2.611).abs() < 0.02);
    }

    #[test]
    fn exact_first_group_measures() {
        let r = exact_first_group();
        let mut expected = vec![Rational::from_integer(1); 3];
        expected.extend(vec![Rational::new(1, 2); 6]);
        expected.extend(vec![Rational::new(1, 4); 6]);
        expected.resize(125, Rational::from_integer(0));
        assert_eq!(r.values(), expected.as_slice());
        // jumps at i = 3, 9, 15 with prefix sums 3, 6, 7.5
        let st = 0.25 * (9.0f64 / 6.0).log2() + 0.25 * (15.0f64 / 7.5).log2();
        let n = 0.5 * 3f64.log2() + 0.25 * 9f64.log2() + 0.25 * 15f64.log2();
        assert!((strife(&r) - st).abs() < 1e-12);
        assert!((nonspecificity(&r) - n).abs() < 1e-12);
        assert!((strife(&r) - 0.3962).abs() < 1e-4);
        assert!((nonspecificity(&r) - 2.5617).abs() < 1e-4);
    }

    #[test]
    fn constant_one_nonspecificity() {
        for m in 1..40usize {
            let r = OrderedPossibility::from_values(vec![1.0; m]).unwrap();
            assert_eq!(nonspecificity(&r), if m < 2 { 0.0 } else { (m as f64).log2() });
        }
    }

    #[test]
    fn rejects_unordered_or_out_of_range() {
        assert_eq!(
            OrderedPossibility::from_values(vec![1.0, 0.5, 0.7]),
            Err(Error::NotOrdered(2))
        );
        assert!(OrderedPossibility::from_values(vec![1.5]).is_err());
        assert!(OrderedPossibility::from_values(vec![1.0, -0.1]).is_err());
    }

    #[test]
    fn ordered_possibility_requires_role() {
        let space = ProfileSpace::new(2, 2).unwrap();
        let d = ProfileDistribution::from_weights(space, Role::Membership, vec![0.5, 0.0, 0.0, 0.0])
            .unwrap();
        assert!(matches!(
            ordered_possibility(&d),
            Err(Error::RoleMismatch { .. })
        ));
        let r = possibilities(&d).unwrap();
        assert_eq!(ordered_possibility(&r).unwrap().values(), &[1.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn shannon_examples() {
        let space = ProfileSpace::new(3, 5).unwrap();
        let mut crisp = vec![0.0; 125];
        crisp[17] = 1.0;
        let d = ProfileDistribution::from_weights(space, Role::Membership, crisp).unwrap();
        assert_eq!(shannon_entropy(&d, None).unwrap(), 0.0);

        let uniform = vec![Rational::new(1, 125); 125];
        let d = ProfileDistribution::from_weights(space, Role::Membership, uniform).unwrap();
        assert!((shannon_entropy(&d, Some(125)).unwrap() - 1.0).abs() < 1e-12);

        assert_eq!(entropy_of_weights(&[0.5, 1.5], 2), Err(Error::Domain("1.5".into())));
        assert_eq!(entropy_of_weights(&[0.5, 0.5], 1), Err(Error::InvalidNormalizer(1)));
    }

    #[test]
    fn exact_first_group_entropy() {
        let sets = vec![
            FuzzyStageSet::from_quarters("S1", &[0, 0, 2, 1, 1]).unwrap(),
            FuzzyStageSet::from_quarters("S2", &[0, 0, 2, 1, 0]).unwrap(),
            FuzzyStageSet::from_quarters("S3", &[1, 1, 1, 0, 0]).unwrap(),
        ];
        let d = membership_distribution::<Rational>(&sets).unwrap();
        let h = shannon_entropy(&d, None).unwrap();
        let brute = -(3.0 * (1.0 / 16.0) * (1.0f64 / 16.0).ln()
            + 6.0 * (1.0 / 32.0) * (1.0f64 / 32.0).ln()
            + 6.0 * (1.0 / 64.0) * (1.0f64 / 64.0).ln())
            / 125f64.ln();
        assert!((h - brute).abs() < 1e-12);
        assert!((h - 0.3230).abs() < 1e-4);
    }

    fn arb_ordered() -> impl Strategy<Value = Vec<f64>> {
        prop::collection::vec(0.0f64..=1.0, 0..60).prop_map(|mut v| {
            v.sort_by(|a, b| b.partial_cmp(a).unwrap());
            if let Some(first) = v.first_mut() {
                *first = 1.0;
            }
            v
        })
    }

    proptest! {
        #[test]
        fn measures_nonnegative(v in arb_ordered()) {
            let r = OrderedPossibility::from_values(v).unwrap();
            prop_assert!(strife(&r) >= -1e-12);
            prop_assert!(nonspecificity(&r) >= 0.0);
        }

        #[test]
        fn trailing_zeros_do_not_matter(v in arb_ordered(), pad in 0usize..20) {
            let r = OrderedPossibility::from_values(v.clone()).unwrap();
            let mut padded = v;
            padded.extend(std::iter::repeat_n(0.0, pad));
            let p = OrderedPossibility::from_values(padded).unwrap();
            prop_assert_eq!(strife(&r), strife(&p));
            prop_assert_eq!(nonspecificity(&r), nonspecificity(&p));
        }

        #[test]
        fn entropy_of_probability_vector_in_unit_interval(raw in prop::collection::vec(0.0f64..1.0, 2..50)) {
            let total: f64 = raw.iter().sum();
            prop_assume!(total > 0.0);
            let p: Vec<f64> = raw.iter().map(|x| x / total).collect();
            let h = entropy_of_weights(&p, p.len() as u64).unwrap();
            prop_assert!((-1e-12..=1.0 + 1e-12).contains(&h));
            let mut rev = p.clone();
            rev.reverse();
            prop_assert!((entropy_of_weights(&rev, p.len() as u64).unwrap() - h).abs() < 1e-12);
        }
    }
}
