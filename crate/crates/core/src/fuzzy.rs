//! Linguistic labels, the count-to-grade quantizer and per-stage fuzzy sets.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

/// Ordinal performance label. Index 0 is the lowest degree of success.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label(pub usize);

impl Label {
    pub fn index(self) -> usize {
        self.0
    }
}

/// Ordered set of label names, lowest success first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelSet {
    names: Vec<String>,
}

impl Default for LabelSet {
    /// `a < b < c < d < e`: very low, low, intermediate, high, very high.
    fn default() -> Self {
        Self {
            names: ["a", "b", "c", "d", "e"].iter().map(|s| s.to_string()).collect(),
        }
    }
}

impl LabelSet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() < 2 {
            return Err(Error::TooFewLabels);
        }
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(Error::DuplicateLabel(name.clone()));
            }
        }
        Ok(Self { names })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, label: Label) -> &str {
        &self.names[label.0]
    }

    pub fn labels(&self) -> impl Iterator<Item = Label> + '_ {
        (0..self.names.len()).map(Label)
    }

    pub fn lookup(&self, name: &str) -> Result<Label> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(Label)
            .ok_or_else(|| Error::UnknownLabel(name.to_string()))
    }
}

/// How many entities of a group received each label at one stage.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StageCounts {
    group_size: u64,
    counts: Vec<u64>,
}

impl StageCounts {
    /// Checks that every count fits in the group. Whether the counts partition
    /// the group is checked when the stage set is built, so the error can
    /// name the stage.
    pub fn new(group_size: u64, counts: Vec<u64>) -> Result<Self> {
        if group_size == 0 {
            return Err(Error::EmptyGroup);
        }
        if let Some(&count) = counts.iter().find(|&&c| c > group_size) {
            return Err(Error::InvalidCount { count, group_size });
        }
        Ok(Self { group_size, counts })
    }

    pub fn group_size(&self) -> u64 {
        self.group_size
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn is_partition(&self) -> bool {
        self.total() == self.group_size
    }
}

/// One of the five quantized membership levels, stored as a number of quarters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MembershipGrade {
    Zero,
    Quarter,
    Half,
    ThreeQuarters,
    One,
}

impl MembershipGrade {
    pub const ALL: [MembershipGrade; 5] = [
        MembershipGrade::Zero,
        MembershipGrade::Quarter,
        MembershipGrade::Half,
        MembershipGrade::ThreeQuarters,
        MembershipGrade::One,
    ];

    pub fn quarters(self) -> u8 {
        self as u8
    }

    pub fn from_quarters(quarters: u8) -> Option<Self> {
        Self::ALL.get(quarters as usize).copied()
    }

    pub fn value<T: Scalar>(self) -> T {
        T::ratio(self.quarters() as u64, 4)
    }

    pub fn is_zero(self) -> bool {
        self == MembershipGrade::Zero
    }
}

impl fmt::Display for MembershipGrade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            MembershipGrade::Zero => "0",
            MembershipGrade::Quarter => "1/4",
            MembershipGrade::Half => "1/2",
            MembershipGrade::ThreeQuarters => "3/4",
            MembershipGrade::One => "1",
        };
        f.write_str(s)
    }
}

/// Quantizes the share `count / group_size` into five bands of width 1/5.
///
/// Each band is closed on the right: a share of exactly 1/5 maps to zero,
/// exactly 2/5 to a quarter, and so on. All comparisons are on integers.
pub fn grade_from_count(count: u64, group_size: u64) -> Result<MembershipGrade> {
    if group_size == 0 {
        return Err(Error::EmptyGroup);
    }
    if count > group_size {
        return Err(Error::InvalidCount { count, group_size });
    }
    let scaled = 5 * count as u128;
    let n = group_size as u128;
    // Smallest band b with scaled <= b * n.
    let band = (0..5u8).find(|&b| scaled <= b as u128 * n).unwrap_or(5);
    Ok(MembershipGrade::from_quarters(band.saturating_sub(1)).expect("band in 0..=4"))
}

/// Membership grades attached to one stage of the process.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzyStageSet {
    name: String,
    grades: Vec<MembershipGrade>,
}

impl FuzzyStageSet {
    pub fn new(name: impl Into<String>, grades: Vec<MembershipGrade>) -> Self {
        Self {
            name: name.into(),
            grades,
        }
    }

    /// Test and fixture helper: grades given as numbers of quarters.
    pub fn from_quarters(name: impl Into<String>, quarters: &[u8]) -> Result<Self> {
        let grades = quarters
            .iter()
            .map(|&q| {
                MembershipGrade::from_quarters(q).ok_or_else(|| Error::Domain(format!("{q}/4")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(name, grades))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn grades(&self) -> &[MembershipGrade] {
        &self.grades
    }

    pub fn grade(&self, label: Label) -> MembershipGrade {
        self.grades[label.0]
    }

    pub fn len(&self) -> usize {
        self.grades.len()
    }

    pub fn is_empty(&self) -> bool {
        self.grades.is_empty()
    }

    pub fn is_all_zero(&self) -> bool {
        self.grades.iter().all(|g| g.is_zero())
    }

    pub fn values<T: Scalar>(&self) -> Vec<T> {
        self.grades.iter().map(|g| g.value()).collect()
    }

    /// Divides every grade by the sum of grades.
    pub fn normalize<T: Scalar>(&self) -> Result<NormalizedFuzzySet<T>> {
        if self.is_all_zero() {
            return Err(Error::DegenerateSet(self.name.clone()));
        }
        NormalizedFuzzySet::from_heights(self.values())
    }
}

/// Builds the fuzzy set of a stage by quantizing each label's count.
pub fn stage_fuzzy_set(counts: &StageCounts, stage_name: &str) -> Result<FuzzyStageSet> {
    if !counts.is_partition() {
        return Err(Error::PartitionMismatch {
            stage: stage_name.to_string(),
            sum: counts.total(),
            expected: counts.group_size(),
        });
    }
    let grades = counts
        .counts()
        .iter()
        .map(|&c| grade_from_count(c, counts.group_size()))
        .collect::<Result<Vec<_>>>()?;
    Ok(FuzzyStageSet::new(stage_name, grades))
}

/// Nonnegative weights over the labels that sum to one.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalizedFuzzySet<T> {
    weights: Vec<T>,
}

impl<T: Scalar> NormalizedFuzzySet<T> {
    /// Rescales nonnegative heights so they sum to one. Input that already
    /// sums to one is returned unchanged (exactly so for rational scalars).
    pub fn from_heights(heights: Vec<T>) -> Result<Self> {
        if let Some(neg) = heights.iter().find(|h| h.is_negative()) {
            return Err(Error::Domain(format!("{neg:?}")));
        }
        let total = scalar::sum(&heights);
        if total.is_zero() {
            return Err(Error::DegenerateDistribution);
        }
        let weights = heights.into_iter().map(|h| h / total.clone()).collect();
        Ok(Self { weights })
    }

    pub fn weights(&self) -> &[T] {
        &self.weights
    }

    pub fn into_weights(self) -> Vec<T> {
        self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }
}
