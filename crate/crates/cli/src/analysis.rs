//! End-to-end pipeline for one or several groups and the report data model.

use serde::{Deserialize, Serialize};
use stagefuzz::{
    centroid, compare, membership_distribution, possibilities,
    probabilities, pseudo_frequencies, stage_fuzzy_set, ExactDistribution,
    FuzzyStageSet, LabelSet, Rational, Rule, UncertaintyReport, Verdict,
};

use crate::dataset::GroupDataset;
use crate::error::{CliError, Result};
use crate::exact::{as_text, Exact};

pub const REPORT_SCHEMA: &str = "report-v1";

#[derive(Debug, Clone)]
pub struct AnalysisOptions {
    /// Shannon normalizer; defaults to the number of profiles.
    pub normalizer: Option<u64>,
    /// Tolerance under which centroid coordinates count as equal.
    pub epsilon: f64,
    /// Scalar measures for the combined view of `combine`.
    pub combined_measures: bool,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        Self {
            normalizer: None,
            epsilon: 1e-9,
            combined_measures: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct AnalysisReport {
    pub schema: String,
    pub groups: Vec<GroupAnalysis>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub combined: Option<CombinedAnalysis>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub verdicts: Vec<StageVerdict>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GroupAnalysis {
    pub group_name: String,
    pub group_size: u64,
    pub labels: Vec<String>,
    pub stages: Vec<StageAnalysis>,
    pub profiles: Vec<ProfileRow>,
    pub uncertainty: UncertaintySummary,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct StageAnalysis {
    pub name: String,
    pub counts: Vec<u64>,
    pub grades: Vec<Exact>,
    pub normalized: Vec<Exact>,
    pub centroid: Point,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub xc: Exact,
    pub yc: Exact,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ProfileRow {
    pub profile: Vec<String>,
    pub membership: Exact,
    pub probability: Exact,
    pub possibility: Exact,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct UncertaintySummary {
    pub strife: f64,
    pub nonspecificity: f64,
    pub total: f64,
    pub shannon: f64,
    pub normalizer: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CombinedAnalysis {
    pub group_names: Vec<String>,
    pub labels: Vec<String>,
    pub profiles: Vec<CombinedRow>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub uncertainty: Option<UncertaintySummary>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CombinedRow {
    pub profile: Vec<String>,
    /// Membership degree in each group, in `groupNames` order.
    pub memberships: Vec<Exact>,
    pub pseudo_frequency: Exact,
    pub probability: Exact,
    pub possibility: Exact,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct StageVerdict {
    pub stage: String,
    pub first: String,
    pub second: String,
    #[serde(with = "as_text")]
    pub verdict: Verdict,
    #[serde(with = "as_text")]
    pub rule: Rule,
}

fn stage_sets(dataset: &GroupDataset) -> Result<Vec<FuzzyStageSet>> {
    dataset
        .stages
        .iter()
        .map(|s| stage_fuzzy_set(&s.counts, &s.name))
        .collect::<stagefuzz::Result<Vec<_>>>()
        .map_err(|e| CliError::model(format!("group `{}`", dataset.group_name), e))
}

fn labels_of(profile: &stagefuzz::Profile, labels: &LabelSet) -> Vec<String> {
    profile
        .labels()
        .iter()
        .map(|&l| labels.name(l).to_string())
        .collect()
}

fn summary(
    possibility: &ExactDistribution,
    entropy_source: &ExactDistribution,
    normalizer: Option<u64>,
) -> stagefuzz::Result<UncertaintySummary> {
    let normalizer = normalizer.unwrap_or(possibility.space().size() as u64);
    let report = UncertaintyReport::compute(possibility, entropy_source, Some(normalizer))?;
    Ok(UncertaintySummary {
        strife: report.strife,
        nonspecificity: report.nonspecificity,
        total: report.total,
        shannon: report.shannon,
        normalizer,
    })
}

struct GroupModel {
    analysis: GroupAnalysis,
    membership: ExactDistribution,
    centroids: Vec<stagefuzz::ExactCentroid>,
}

fn analyze_group(dataset: &GroupDataset, options: &AnalysisOptions) -> Result<GroupModel> {
    let context = || format!("group `{}`", dataset.group_name);
    let sets = stage_sets(dataset)?;

    let mut stages = Vec::with_capacity(sets.len());
    let mut centroids = Vec::with_capacity(sets.len());
    for (set, data) in sets.iter().zip(&dataset.stages) {
        let normalized = set
            .normalize::<Rational>()
            .map_err(|e| CliError::model(context(), e))?;
        let c = centroid(&normalized);
        stages.push(StageAnalysis {
            name: set.name().to_string(),
            counts: data.counts.counts().to_vec(),
            grades: set.values::<Rational>().into_iter().map(Exact).collect(),
            normalized: normalized.weights().iter().copied().map(Exact).collect(),
            centroid: Point {
                xc: Exact(c.xc),
                yc: Exact(c.yc),
            },
        });
        centroids.push(c);
    }

    let membership = membership_distribution::<Rational>(&sets).map_err(|e| CliError::model(context(), e))?;
    let probability = probabilities(&membership).map_err(|e| CliError::model(context(), e))?;
    let possibility = possibilities(&membership).map_err(|e| CliError::model(context(), e))?;
    let uncertainty = summary(&possibility, &membership, options.normalizer)
        .map_err(|e| CliError::model(context(), e))?;

    let profiles = membership
        .nonzero()
        .map(|(profile, m)| {
            let idx = membership.space().index_of(&profile).expect("profile from this space");
            ProfileRow {
                profile: labels_of(&profile, &dataset.labels),
                membership: Exact(*m),
                probability: Exact(probability.weights()[idx]),
                possibility: Exact(possibility.weights()[idx]),
            }
        })
        .collect();

    Ok(GroupModel {
        analysis: GroupAnalysis {
            group_name: dataset.group_name.clone(),
            group_size: dataset.group_size,
            labels: dataset.labels.names().to_vec(),
            stages,
            profiles,
            uncertainty,
        },
        membership,
        centroids,
    })
}

/// Full single-group pipeline.
pub fn analyze_command(dataset: &GroupDataset, options: &AnalysisOptions) -> Result<AnalysisReport> {
    let model = analyze_group(dataset, options)?;
    Ok(AnalysisReport {
        schema: REPORT_SCHEMA.to_string(),
        groups: vec![model.analysis],
        combined: None,
        verdicts: Vec::new(),
    })
}

fn check_shapes(datasets: &[GroupDataset]) -> Result<()> {
    let [first, rest @ ..] = datasets else {
        return Err(CliError::Invalid("no groups given".into()));
    };
    if rest.is_empty() {
        return Err(CliError::Invalid("at least two groups are required".into()));
    }
    for d in rest {
        if d.stages.len() != first.stages.len() {
            return Err(CliError::Invalid(format!(
                "group `{}` has {} stages but `{}` has {}",
                d.group_name,
                d.stages.len(),
                first.group_name,
                first.stages.len()
            )));
        }
        if d.labels != first.labels {
            return Err(CliError::Invalid(format!(
                "groups `{}` and `{}` use different label sets",
                first.group_name, d.group_name
            )));
        }
    }
    Ok(())
}

fn combined_view(
    datasets: &[GroupDataset],
    memberships: &[ExactDistribution],
    options: &AnalysisOptions,
) -> Result<CombinedAnalysis> {
    let context = |e| CliError::model("combined groups", e);
    let labels = &datasets[0].labels;
    let f = pseudo_frequencies(memberships).map_err(context)?;
    let p = probabilities(&f).map_err(context)?;
    let r = possibilities(&f).map_err(context)?;
    let uncertainty = if options.combined_measures {
        Some(summary(&r, &p, options.normalizer).map_err(context)?)
    } else {
        None
    };
    let profiles = f
        .nonzero()
        .map(|(profile, freq)| {
            let idx = f.space().index_of(&profile).expect("profile from this space");
            CombinedRow {
                profile: labels_of(&profile, labels),
                memberships: memberships.iter().map(|m| Exact(m.weights()[idx])).collect(),
                pseudo_frequency: Exact(*freq),
                probability: Exact(p.weights()[idx]),
                possibility: Exact(r.weights()[idx]),
            }
        })
        .collect();
    Ok(CombinedAnalysis {
        group_names: datasets.iter().map(|d| d.group_name.clone()).collect(),
        labels: labels.names().to_vec(),
        profiles,
        uncertainty,
    })
}

fn epsilon(options: &AnalysisOptions) -> Result<Rational> {
    if !(options.epsilon.is_finite() && options.epsilon >= 0.0) {
        return Err(CliError::Invalid(format!("epsilon must be a nonnegative number, got {}", options.epsilon)));
    }
    if options.epsilon == 0.0 {
        return Ok(Rational::from_integer(0));
    }
    num_traits::FromPrimitive::from_f64(options.epsilon)
        .ok_or_else(|| CliError::Invalid(format!("epsilon {} is not representable", options.epsilon)))
}

/// Per-group analyses, the pseudo-frequency view and pairwise per-stage verdicts.
pub fn compare_command(datasets: &[GroupDataset], options: &AnalysisOptions) -> Result<AnalysisReport> {
    check_shapes(datasets)?;
    let eps = epsilon(options)?;
    let models = datasets
        .iter()
        .map(|d| analyze_group(d, options))
        .collect::<Result<Vec<_>>>()?;
    let memberships: Vec<_> = models.iter().map(|m| m.membership.clone()).collect();
    let combined = combined_view(datasets, &memberships, options)?;

    let levels = datasets[0].labels.len();
    let mut verdicts = Vec::new();
    for (i, a) in models.iter().enumerate() {
        for b in &models[i + 1..] {
            for (stage, (ca, cb)) in a.centroids.iter().zip(&b.centroids).enumerate() {
                let outcome = compare(ca, cb, levels, &eps);
                verdicts.push(StageVerdict {
                    stage: a.analysis.stages[stage].name.clone(),
                    first: a.analysis.group_name.clone(),
                    second: b.analysis.group_name.clone(),
                    verdict: outcome.verdict,
                    rule: outcome.rule,
                });
            }
        }
    }
    Ok(AnalysisReport {
        schema: REPORT_SCHEMA.to_string(),
        groups: models.into_iter().map(|m| m.analysis).collect(),
        combined: Some(combined),
        verdicts,
    })
}

/// Pseudo-frequency view only.
pub fn combine_command(datasets: &[GroupDataset], options: &AnalysisOptions) -> Result<AnalysisReport> {
    check_shapes(datasets)?;
    let memberships = datasets
        .iter()
        .map(|d| {
            let sets = stage_sets(d)?;
            membership_distribution::<Rational>(&sets)
                .map_err(|e| CliError::model(format!("group `{}`", d.group_name), e))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(AnalysisReport {
        schema: REPORT_SCHEMA.to_string(),
        groups: Vec::new(),
        combined: Some(combined_view(datasets, &memberships, options)?),
        verdicts: Vec::new(),
    })
}

/// Parses a structured report and checks its schema tag.
pub fn parse_report(bytes: &[u8]) -> Result<AnalysisReport> {
    let report: AnalysisReport = serde_json::from_slice(bytes)?;
    if report.schema != REPORT_SCHEMA {
        return Err(CliError::Invalid(format!(
            "unsupported report schema `{}`, expected `{REPORT_SCHEMA}`",
            report.schema
        )));
    }
    Ok(report)
}
