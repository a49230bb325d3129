//! Fuzzy model of a multi-stage process.
//!
//! Each stage of a process is described by the number of entities that
//! reached each ordinal label. Counts are quantized into a fuzzy set per
//! stage; well-ordered profiles (one label per stage) receive the product of
//! their stage grades. From there the crate derives probability, possibility
//! and multi-group pseudo-frequency distributions, the possibilistic strife
//! and non-specificity measures, a normalized Shannon entropy, and the
//! centroid of each stage's bar graph for ranking groups.
//!
//! Everything up to the logarithmic measures is generic over [`Scalar`]; use
//! [`Rational`] for exact results and `f64` when inputs are decimal data.
//!
//! ```
//! use stagefuzz::{stage_fuzzy_set, membership_distribution, possibilities,
//!     ordered_possibility, total_uncertainty, Rational, StageCounts};
//!
//! let stages = [
//!     ("S1", vec![0, 0, 15, 12, 8]),
//!     ("S2", vec![0, 0, 20, 11, 4]),
//!     ("S3", vec![12, 12, 11, 0, 0]),
//! ];
//! let sets = stages
//!     .iter()
//!     .map(|(name, c)| stage_fuzzy_set(&StageCounts::new(35, c.clone())?, name))
//!     .collect::<Result<Vec<_>, _>>()?;
//! let m = membership_distribution::<Rational>(&sets)?;
//! let r = possibilities(&m)?;
//! let t = total_uncertainty(&ordered_possibility(&r)?);
//! assert!((t - 2.9579).abs() < 1e-4);
//! # Ok::<(), stagefuzz::Error>(())
//! ```

pub mod centroid;
pub mod error;
pub mod fuzzy;
pub mod profile;
pub mod scalar;
pub mod uncertainty;

pub use centroid::{
    centroid, centroid_general, centroid_integral_oracle, compare, CentroidPoint,
    ComparisonOutcome, Rule, Verdict,
};
pub use error::{Error, Result};
pub use fuzzy::{
    grade_from_count, stage_fuzzy_set, FuzzyStageSet, Label, LabelSet, MembershipGrade,
    NormalizedFuzzySet, StageCounts,
};
pub use profile::{
    enumerate_profiles, is_well_ordered, membership_distribution, possibilities,
    probabilities, profile_membership, pseudo_frequencies, Profile, ProfileDistribution,
    ProfileSpace, Role,
};
pub use scalar::Scalar;
pub use uncertainty::{
    entropy_of_weights, nonspecificity, ordered_possibility, shannon_entropy, strife,
    total_uncertainty, OrderedPossibility, UncertaintyReport,
};

/// Exact rational scalar.
pub type Rational = num_rational::Ratio<i64>;

pub type ExactDistribution = ProfileDistribution<Rational>;
pub type FloatDistribution = ProfileDistribution<f64>;
pub type ExactNormalizedSet = NormalizedFuzzySet<Rational>;
pub type ExactCentroid = CentroidPoint<Rational>;
pub type FloatCentroid = CentroidPoint<f64>;
pub type ExactPossibility = OrderedPossibility<Rational>;
