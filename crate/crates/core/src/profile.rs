//! Profiles (one label per stage) and distributions over the full profile space.

use std::fmt;

use crate::error::{Error, Result};
use crate::fuzzy::{FuzzyStageSet, Label, LabelSet};
use crate::scalar::{self, Scalar};

/// Upper bound on `levels^stages`; distributions are stored densely.
pub const MAX_PROFILES: usize = 1 << 22;

/// A sequence of labels, one per stage.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Profile(pub Vec<Label>);

impl Profile {
    pub fn labels(&self) -> &[Label] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Success never increases from one stage to the next.
    pub fn is_well_ordered(&self) -> bool {
        is_well_ordered(self)
    }

    pub fn display<'a>(&'a self, labels: &'a LabelSet) -> impl fmt::Display + 'a {
        ProfileDisplay(self, labels)
    }

    /// Parses `c,c,a` style text against a label set.
    pub fn parse(text: &str, labels: &LabelSet) -> Result<Self> {
        text.split(',')
            .map(|s| labels.lookup(s.trim()))
            .collect::<Result<Vec<_>>>()
            .map(Profile)
    }
}

struct ProfileDisplay<'a>(&'a Profile, &'a LabelSet);

impl fmt::Display for ProfileDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.0 .0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(self.1.name(*l))?;
        }
        Ok(())
    }
}

pub fn is_well_ordered(profile: &Profile) -> bool {
    profile.0.windows(2).all(|w| w[0] >= w[1])
}

/// The set `U^k` of all profiles over `levels` labels and `stages` stages,
/// indexed in lexicographic order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ProfileSpace {
    stages: usize,
    levels: usize,
    size: usize,
}

impl fmt::Display for ProfileSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} labels ^ {} stages", self.levels, self.stages)
    }
}

impl ProfileSpace {
    pub fn new(stages: usize, levels: usize) -> Result<Self> {
        if stages < 2 {
            return Err(Error::InvalidSpace(format!("need at least 2 stages, got {stages}")));
        }
        if levels < 2 {
            return Err(Error::InvalidSpace(format!("need at least 2 labels, got {levels}")));
        }
        let size = (0..stages)
            .try_fold(1usize, |acc, _| acc.checked_mul(levels))
            .filter(|&s| s <= MAX_PROFILES)
            .ok_or_else(|| {
                Error::InvalidSpace(format!("{levels}^{stages} exceeds {MAX_PROFILES} profiles"))
            })?;
        Ok(Self {
            stages,
            levels,
            size,
        })
    }

    pub fn stages(&self) -> usize {
        self.stages
    }

    pub fn levels(&self) -> usize {
        self.levels
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn profile(&self, index: usize) -> Profile {
        debug_assert!(index < self.size);
        let mut labels = vec![Label(0); self.stages];
        let mut rest = index;
        for slot in labels.iter_mut().rev() {
            *slot = Label(rest % self.levels);
            rest /= self.levels;
        }
        Profile(labels)
    }

    pub fn index_of(&self, profile: &Profile) -> Result<usize> {
        if profile.len() != self.stages {
            return Err(Error::LengthMismatch {
                expected: self.stages,
                found: profile.len(),
            });
        }
        profile.0.iter().try_fold(0usize, |acc, l| {
            if l.0 >= self.levels {
                Err(Error::InvalidSpace(format!("label index {} out of range", l.0)))
            } else {
                Ok(acc * self.levels + l.0)
            }
        })
    }

    pub fn profiles(&self) -> impl Iterator<Item = Profile> + '_ {
        (0..self.size).map(|i| self.profile(i))
    }
}

/// All `levels^stages` profiles in lexicographic order.
pub fn enumerate_profiles(stages: usize, levels: usize) -> Result<Vec<Profile>> {
    let space = ProfileSpace::new(stages, levels)?;
    Ok(space.profiles().collect())
}

/// What the weights of a [`ProfileDistribution`] mean.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    Membership,
    Probability,
    Possibility,
    PseudoFrequency,
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Role::Membership => "membership",
            Role::Probability => "probability",
            Role::Possibility => "possibility",
            Role::PseudoFrequency => "pseudo-frequency",
        })
    }
}

/// A nonnegative weight for every profile of a space.
#[derive(Debug, Clone, PartialEq)]
pub struct ProfileDistribution<T> {
    space: ProfileSpace,
    role: Role,
    weights: Vec<T>,
}

impl<T: Scalar> ProfileDistribution<T> {
    /// Dense constructor. Probability weights must sum to one and possibility
    /// weights must peak at one.
    pub fn from_weights(space: ProfileSpace, role: Role, weights: Vec<T>) -> Result<Self> {
        if weights.len() != space.size() {
            return Err(Error::LengthMismatch {
                expected: space.size(),
                found: weights.len(),
            });
        }
        if let Some(w) = weights.iter().find(|w| w.is_negative()) {
            return Err(Error::Domain(format!("{w:?}")));
        }
        match role {
            Role::Probability if !scalar::sum(&weights).is_one() => {
                return Err(Error::Domain("probabilities do not sum to 1".into()))
            }
            Role::Possibility if !scalar::max(&weights).is_some_and(|m| m.is_one()) => {
                return Err(Error::Domain("possibilities do not peak at 1".into()))
            }
            _ => {}
        }
        Ok(Self {
            space,
            role,
            weights,
        })
    }

    /// Sparse constructor; profiles not listed get weight zero.
    pub fn from_entries<I>(space: ProfileSpace, role: Role, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Profile, T)>,
    {
        let mut weights = vec![T::zero(); space.size()];
        for (profile, w) in entries {
            weights[space.index_of(&profile)?] = w;
        }
        Self::from_weights(space, role, weights)
    }

    pub fn space(&self) -> ProfileSpace {
        self.space
    }

    pub fn role(&self) -> Role {
        self.role
    }

    pub fn weights(&self) -> &[T] {
        &self.weights
    }

    pub fn weight(&self, profile: &Profile) -> Result<&T> {
        Ok(&self.weights[self.space.index_of(profile)?])
    }

    pub fn total(&self) -> T {
        scalar::sum(&self.weights)
    }

    pub fn max_weight(&self) -> T {
        scalar::max(&self.weights).unwrap_or_else(T::zero)
    }

    /// Profiles with positive weight, in lexicographic order.
    pub fn nonzero(&self) -> impl Iterator<Item = (Profile, &T)> + '_ {
        self.weights
            .iter()
            .enumerate()
            .filter(|(_, w)| !w.is_zero())
            .map(|(i, w)| (self.space.profile(i), w))
    }

    /// Indices holding the maximum weight.
    pub fn argmax(&self) -> Vec<usize> {
        let max = self.max_weight();
        self.weights
            .iter()
            .enumerate()
            .filter(|(_, w)| **w == max)
            .map(|(i, _)| i)
            .collect()
    }

    fn rescaled(&self, role: Role, by: T) -> Self {
        Self {
            space: self.space,
            role,
            weights: self.weights.iter().map(|w| w.clone() / by.clone()).collect(),
        }
    }
}

/// Product of the stage grades along a well-ordered profile, zero otherwise.
pub fn profile_membership<T: Scalar>(profile: &Profile, stage_sets: &[FuzzyStageSet]) -> T {
    if !is_well_ordered(profile) {
        return T::zero();
    }
    profile
        .0
        .iter()
        .zip(stage_sets)
        .fold(T::one(), |acc, (&label, set)| acc * set.grade(label).value::<T>())
}

/// Membership degree of every profile given one fuzzy set per stage.
pub fn membership_distribution<T: Scalar>(
    stage_sets: &[FuzzyStageSet],
) -> Result<ProfileDistribution<T>> {
    let levels = stage_sets.first().map_or(0, FuzzyStageSet::len);
    if let Some(set) = stage_sets.iter().find(|s| s.len() != levels) {
        return Err(Error::LengthMismatch {
            expected: levels,
            found: set.len(),
        });
    }
    let space = ProfileSpace::new(stage_sets.len(), levels)?;
    let weights = space
        .profiles()
        .map(|p| profile_membership(&p, stage_sets))
        .collect();
    Ok(ProfileDistribution {
        space,
        role: Role::Membership,
        weights,
    })
}

/// Weights divided by their total.
pub fn probabilities<T: Scalar>(dist: &ProfileDistribution<T>) -> Result<ProfileDistribution<T>> {
    let total = dist.total();
    if total.is_zero() {
        return Err(Error::DegenerateDistribution);
    }
    Ok(dist.rescaled(Role::Probability, total))
}

/// Weights divided by their maximum.
pub fn possibilities<T: Scalar>(dist: &ProfileDistribution<T>) -> Result<ProfileDistribution<T>> {
    let max = dist.max_weight();
    if max.is_zero() {
        return Err(Error::DegenerateDistribution);
    }
    Ok(dist.rescaled(Role::Possibility, max))
}

/// Pointwise sum of the membership degrees of several groups.
pub fn pseudo_frequencies<T: Scalar>(
    dists: &[ProfileDistribution<T>],
) -> Result<ProfileDistribution<T>> {
    let first = match dists {
        [first, _, ..] => first,
        _ => {
            return Err(Error::TooFewDistributions {
                needed: 2,
                found: dists.len(),
            })
        }
    };
    let space = first.space;
    let mut weights = vec![T::zero(); space.size()];
    for d in dists {
        if d.space != space {
            return Err(Error::SpaceMismatch {
                left: space.to_string(),
                right: d.space.to_string(),
            });
        }
        for (acc, w) in weights.iter_mut().zip(&d.weights) {
            *acc = acc.clone() + w.clone();
        }
    }
    Ok(ProfileDistribution {
        space,
        role: Role::PseudoFrequency,
        weights,
    })
}
