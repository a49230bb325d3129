//! Center of mass of the bar graph of a fuzzy set and the centroid comparison rule.
//!
//! Bar `i` (1-based) covers `[i - 1, i]` on the x axis and has the label's
//! membership value as its height.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::fuzzy::NormalizedFuzzySet;
use crate::scalar::{self, Scalar};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CentroidPoint<T> {
    pub xc: T,
    pub yc: T,
}

impl<T> CentroidPoint<T> {
    pub fn new(xc: T, yc: T) -> Self {
        Self { xc, yc }
    }
}

impl<T: Scalar> CentroidPoint<T> {
    pub fn to_f64(&self) -> CentroidPoint<f64> {
        CentroidPoint::new(self.xc.as_f64(), self.yc.as_f64())
    }

    /// All mass on the lowest label.
    pub fn worst() -> Self {
        Self::new(T::ratio(1, 2), T::ratio(1, 2))
    }

    /// Uniform weights: the unique minimum of `yc`.
    pub fn uniform(levels: usize) -> Self {
        Self::new(T::ratio(levels as u64, 2), T::ratio(1, 2 * levels as u64))
    }

    /// All mass on the highest label.
    pub fn ideal(levels: usize) -> Self {
        Self::new(T::ratio(2 * levels as u64 - 1, 2), T::ratio(1, 2))
    }
}

fn check_heights<T: Scalar>(heights: &[T]) -> Result<T> {
    if let Some(h) = heights.iter().find(|h| h.is_negative()) {
        return Err(Error::Domain(format!("{h:?}")));
    }
    let total = scalar::sum(heights);
    if total.is_zero() {
        return Err(Error::DegenerateBars);
    }
    Ok(total)
}

/// Centroid of unit-width bars with arbitrary nonnegative heights.
pub fn centroid_general<T: Scalar>(heights: &[T]) -> Result<CentroidPoint<T>> {
    let total = check_heights(heights)?;
    let (moment_x, moment_y) = bar_moments(heights);
    let two = T::ratio(2, 1);
    Ok(CentroidPoint::new(
        moment_x / (two.clone() * total.clone()),
        moment_y / (two * total),
    ))
}

/// `(sum (2i - 1) y_i, sum y_i^2)`, i.e. twice the two first moments.
fn bar_moments<T: Scalar>(heights: &[T]) -> (T, T) {
    heights
        .iter()
        .enumerate()
        .fold((T::zero(), T::zero()), |(mx, my), (i, y)| {
            let odd = T::from_usize(2 * i + 1).expect("bar index fits the scalar type");
            (mx + odd * y.clone(), my + y.clone() * y.clone())
        })
}

/// Centroid of a normalized set; the total mass is one so no division occurs.
pub fn centroid<T: Scalar>(set: &NormalizedFuzzySet<T>) -> CentroidPoint<T> {
    let (moment_x, moment_y) = bar_moments(set.weights());
    let half = T::ratio(1, 2);
    CentroidPoint::new(half.clone() * moment_x, half * moment_y)
}

const GAUSS_NODES: [f64; 3] = [-0.774_596_669_241_483_4, 0.0, 0.774_596_669_241_483_4];
const GAUSS_WEIGHTS: [f64; 3] = [5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0];

fn gauss<F: Fn(f64) -> f64>(lo: f64, hi: f64, f: F) -> f64 {
    let mid = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    GAUSS_NODES
        .iter()
        .zip(GAUSS_WEIGHTS)
        .map(|(&t, w)| w * f(mid + half * t))
        .sum::<f64>()
        * half
}

/// Centroid by iterated Gauss–Legendre quadrature of the region under the
/// bar-graph profile `h(x)`, split at the integer breakpoints.
pub fn centroid_integral_oracle(heights: &[f64]) -> Result<CentroidPoint<f64>> {
    check_heights(heights)?;
    let profile = |x: f64| {
        let i = (x.floor() as usize).min(heights.len() - 1);
        heights[i]
    };
    let (mut area, mut mx, mut my) = (0.0, 0.0, 0.0);
    for panel in 0..heights.len() {
        let (lo, hi) = (panel as f64, panel as f64 + 1.0);
        area += gauss(lo, hi, |x| gauss(0.0, profile(x), |_| 1.0));
        mx += gauss(lo, hi, |x| gauss(0.0, profile(x), |_| x));
        my += gauss(lo, hi, |x| gauss(0.0, profile(x), |y| y));
    }
    Ok(CentroidPoint::new(mx / area, my / area))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    FirstBetter,
    SecondBetter,
    Tie,
}

impl Verdict {
    pub fn flipped(self) -> Self {
        match self {
            Verdict::FirstBetter => Verdict::SecondBetter,
            Verdict::SecondBetter => Verdict::FirstBetter,
            Verdict::Tie => Verdict::Tie,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::FirstBetter => "first-better",
            Verdict::SecondBetter => "second-better",
            Verdict::Tie => "tie",
        })
    }
}

impl FromStr for Verdict {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "first-better" => Ok(Verdict::FirstBetter),
            "second-better" => Ok(Verdict::SecondBetter),
            "tie" => Ok(Verdict::Tie),
            other => Err(Error::Domain(format!("verdict `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    BiggerXc,
    EqualXcHighBranch,
    EqualXcLowBranch,
    Identical,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::BiggerXc => "bigger-xc",
            Rule::EqualXcHighBranch => "equal-xc-high-branch",
            Rule::EqualXcLowBranch => "equal-xc-low-branch",
            Rule::Identical => "identical",
        })
    }
}

impl FromStr for Rule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bigger-xc" => Ok(Rule::BiggerXc),
            "equal-xc-high-branch" => Ok(Rule::EqualXcHighBranch),
            "equal-xc-low-branch" => Ok(Rule::EqualXcLowBranch),
            "identical" => Ok(Rule::Identical),
            other => Err(Error::Domain(format!("rule `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ComparisonOutcome {
    pub verdict: Verdict,
    pub rule: Rule,
}

/// Ranks two groups by the centroids of the same stage.
///
/// A bigger `xc` wins. With equal `xc` at or above `levels / 2` the higher
/// `yc` wins; below it the lower `yc` wins. Coordinates closer than
/// `epsilon` count as equal.
pub fn compare<T: Scalar>(
    first: &CentroidPoint<T>,
    second: &CentroidPoint<T>,
    levels: usize,
    epsilon: &T,
) -> ComparisonOutcome {
    let dx = first.xc.clone() - second.xc.clone();
    if dx.abs() > *epsilon {
        let verdict = if dx.is_positive() {
            Verdict::FirstBetter
        } else {
            Verdict::SecondBetter
        };
        return ComparisonOutcome {
            verdict,
            rule: Rule::BiggerXc,
        };
    }
    let dy = first.yc.clone() - second.yc.clone();
    if dy.abs() <= *epsilon {
        return ComparisonOutcome {
            verdict: Verdict::Tie,
            rule: Rule::Identical,
        };
    }
    // Midpoint keeps the branch choice symmetric in the two arguments.
    let shared_xc = (first.xc.clone() + second.xc.clone()) / T::ratio(2, 1);
    let first_higher = dy.is_positive();
    if shared_xc >= T::ratio(levels as u64, 2) {
        ComparisonOutcome {
            verdict: if first_higher {
                Verdict::FirstBetter
            } else {
                Verdict::SecondBetter
            },
            rule: Rule::EqualXcHighBranch,
        }
    } else {
        ComparisonOutcome {
            verdict: if first_higher {
                Verdict::SecondBetter
            } else {
                Verdict::FirstBetter
            },
            rule: Rule::EqualXcLowBranch,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{FuzzyStageSet, Rational};
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn normalized(weights: &[Rational]) -> NormalizedFuzzySet<Rational> {
        NormalizedFuzzySet::from_heights(weights.to_vec()).unwrap()
    }

    #[test]
    fn general_examples() {
        let p = centroid_general(&[0.0, 0.0, 1.0, 0.0, 0.0]).unwrap();
        assert_eq!(p, CentroidPoint::new(2.5, 0.5));
        assert_eq!(centroid_general(&[1.0, 1.0]).unwrap(), CentroidPoint::new(1.0, 0.5));
        let p = centroid_general(&[q(0, 1), q(0, 1), q(1, 2), q(1, 4), q(1, 4)]).unwrap();
        assert_eq!(p, CentroidPoint::new(q(13, 4), q(3, 16)));
    }

    #[test]
    fn general_errors() {
        assert_eq!(centroid_general::<f64>(&[0.0, 0.0]), Err(Error::DegenerateBars));
        assert_eq!(centroid_general::<f64>(&[]), Err(Error::DegenerateBars));
        assert!(matches!(centroid_general(&[1.0, -1.0]), Err(Error::Domain(_))));
    }

    #[test]
    fn normalized_examples() {
        let uniform = normalized(&[q(1, 5); 5]);
        assert_eq!(centroid(&uniform), CentroidPoint::new(q(5, 2), q(1, 10)));
        assert_eq!(centroid(&uniform), CentroidPoint::uniform(5));

        let ideal = normalized(&[q(0, 1), q(0, 1), q(0, 1), q(0, 1), q(1, 1)]);
        assert_eq!(centroid(&ideal), CentroidPoint::new(q(9, 2), q(1, 2)));
        assert_eq!(centroid(&ideal), CentroidPoint::ideal(5));

        let worst = normalized(&[q(1, 1), q(0, 1), q(0, 1), q(0, 1), q(0, 1)]);
        assert_eq!(centroid(&worst), CentroidPoint::new(q(1, 2), q(1, 2)));
        assert_eq!(centroid(&worst), CentroidPoint::worst());

        let set = FuzzyStageSet::from_quarters("S2", &[0, 0, 2, 1, 0]).unwrap();
        let p = centroid(&set.normalize::<Rational>().unwrap());
        assert_eq!(p, CentroidPoint::new(q(17, 6), q(5, 18)));
    }

    #[test]
    fn oracle_examples() {
        let p = centroid_integral_oracle(&[0.0, 0.0, 1.0, 0.0, 0.0]).unwrap();
        assert!((p.xc - 2.5).abs() < 1e-9 && (p.yc - 0.5).abs() < 1e-9);
        let p = centroid_integral_oracle(&[0.0, 0.0, 0.5, 0.25, 0.25]).unwrap();
        assert!((p.xc - 3.25).abs() < 1e-9 && (p.yc - 0.1875).abs() < 1e-9);
        assert_eq!(centroid_integral_oracle(&[0.0]), Err(Error::DegenerateBars));
    }

    #[test]
    fn comparison_examples() {
        let eps = 1e-9;
        let first = CentroidPoint::new(3.25, 0.1875);
        let second = CentroidPoint::new(2.5, 0.1875);
        assert_eq!(
            compare(&first, &second, 5, &eps),
            ComparisonOutcome { verdict: Verdict::FirstBetter, rule: Rule::BiggerXc }
        );
        let p = CentroidPoint::new(1.5, 1.0 / 6.0);
        assert_eq!(
            compare(&p, &p, 5, &eps),
            ComparisonOutcome { verdict: Verdict::Tie, rule: Rule::Identical }
        );
        assert_eq!(
            compare(&CentroidPoint::new(3.0, 0.3), &CentroidPoint::new(3.0, 0.2), 5, &eps),
            ComparisonOutcome { verdict: Verdict::FirstBetter, rule: Rule::EqualXcHighBranch }
        );
        assert_eq!(
            compare(&CentroidPoint::new(2.0, 0.3), &CentroidPoint::new(2.0, 0.2), 5, &eps),
            ComparisonOutcome { verdict: Verdict::SecondBetter, rule: Rule::EqualXcLowBranch }
        );
        let exact = compare(
            &CentroidPoint::new(q(5, 2), q(1, 4)),
            &CentroidPoint::new(q(5, 2), q(1, 5)),
            5,
            &q(0, 1),
        );
        assert_eq!(exact.rule, Rule::EqualXcHighBranch);
        assert_eq!(exact.verdict, Verdict::FirstBetter);
    }

    #[test]
    fn verdict_and_rule_parse_their_display() {
        for v in [Verdict::FirstBetter, Verdict::SecondBetter, Verdict::Tie] {
            assert_eq!(v.to_string().parse::<Verdict>().unwrap(), v);
        }
        for r in [Rule::BiggerXc, Rule::EqualXcHighBranch, Rule::EqualXcLowBranch, Rule::Identical] {
            assert_eq!(r.to_string().parse::<Rule>().unwrap(), r);
        }
        assert!("better".parse::<Verdict>().is_err());
    }

    fn arb_heights() -> impl Strategy<Value = Vec<f64>> {
        prop::collection::vec(0.0f64..10.0, 1..12).prop_filter("positive mass", |v| {
            v.iter().sum::<f64>() > 1e-6
        })
    }

    fn arb_point() -> impl Strategy<Value = CentroidPoint<Rational>> {
        (0i64..=36, 0i64..=36).prop_map(|(x, y)| CentroidPoint::new(q(x, 4), q(y, 8)))
    }

    proptest! {
        #[test]
        fn closed_form_matches_quadrature(h in arb_heights()) {
            let exact = centroid_general(&h).unwrap();
            let quad = centroid_integral_oracle(&h).unwrap();
            prop_assert!((exact.xc - quad.xc).abs() < 1e-9);
            prop_assert!((exact.yc - quad.yc).abs() < 1e-9);
        }

        #[test]
        fn scale_invariant(h in arb_heights(), k in 0.01f64..100.0) {
            let a = centroid_general(&h).unwrap();
            let scaled: Vec<f64> = h.iter().map(|x| x * k).collect();
            let b = centroid_general(&scaled).unwrap();
            prop_assert!((a.xc - b.xc).abs() < 1e-9 * a.xc.abs().max(1.0));
            // yc scales with the heights.
            prop_assert!((a.yc * k - b.yc).abs() < 1e-9 * b.yc.abs().max(1.0));
        }

        #[test]
        fn normalized_bounds(w in prop::collection::vec(0i64..20, 5)) {
            prop_assume!(w.iter().any(|&x| x > 0));
            let set = NormalizedFuzzySet::from_heights(w.iter().map(|&x| q(x, 1)).collect()).unwrap();
            let p = centroid(&set);
            prop_assert!(p.xc >= q(1, 2) && p.xc <= q(9, 2));
            prop_assert!(p.yc >= q(1, 10) && p.yc <= q(1, 2));
            let uniform = w.iter().all(|&x| x == w[0]);
            prop_assert_eq!(p.yc == q(1, 10), uniform);
            prop_assert_eq!(p, centroid_general(set.weights()).unwrap());
        }

        #[test]
        fn compare_is_antisymmetric(a in arb_point(), b in arb_point()) {
            let ab = compare(&a, &b, 5, &q(0, 1));
            let ba = compare(&b, &a, 5, &q(0, 1));
            prop_assert_eq!(ab.verdict, ba.verdict.flipped());
            prop_assert_eq!(ab.rule, ba.rule);
        }
    }
}
