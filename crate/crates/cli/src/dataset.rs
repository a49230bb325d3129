//! Group input files: a structured JSON summary or a per-entity CSV log.

use std::collections::{BTreeMap, HashMap, HashSet};

use serde::Deserialize;
use stagefuzz::{stage_fuzzy_set, LabelSet, StageCounts};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    /// `{"groupName", "groupSize", "stages": [{"name", "counts": {label: n}}]}`
    Structured,
    /// CSV rows `entity,stage,label`, one per entity and stage.
    Tabular,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StageData {
    pub name: String,
    pub counts: StageCounts,
}

/// A validated group: every stage's counts partition the group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupDataset {
    pub group_name: String,
    pub group_size: u64,
    pub labels: LabelSet,
    pub stages: Vec<StageData>,
}

impl GroupDataset {
    pub fn new(
        group_name: impl Into<String>,
        group_size: u64,
        labels: LabelSet,
        stages: Vec<(String, Vec<u64>)>,
    ) -> Result<Self> {
        let group_name = group_name.into();
        if stages.len() < 2 {
            return Err(CliError::Invalid(format!(
                "group `{group_name}` has {} stage(s), at least 2 are required",
                stages.len()
            )));
        }
        let stages = stages
            .into_iter()
            .map(|(name, counts)| {
                if counts.len() != labels.len() {
                    return Err(CliError::Invalid(format!(
                        "stage `{name}` has {} counts for {} labels",
                        counts.len(),
                        labels.len()
                    )));
                }
                let counts = StageCounts::new(group_size, counts)
                    .map_err(|e| CliError::model(format!("stage `{name}`"), e))?;
                // Partition check; names the stage and both sums.
                stage_fuzzy_set(&counts, &name)
                    .map_err(|e| CliError::model(format!("group `{group_name}`"), e))?;
                Ok(StageData { name, counts })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            group_name,
            group_size,
            labels,
            stages,
        })
    }

    pub fn stage_names(&self) -> Vec<&str> {
        self.stages.iter().map(|s| s.name.as_str()).collect()
    }

    /// Replaces the stage names positionally.
    pub fn rename_stages(&mut self, names: &[String]) -> Result<()> {
        if names.len() != self.stages.len() {
            return Err(CliError::Invalid(format!(
                "{} stage names given for {} stages in `{}`",
                names.len(),
                self.stages.len(),
                self.group_name
            )));
        }
        for (stage, name) in self.stages.iter_mut().zip(names) {
            stage.name = name.clone();
        }
        Ok(())
    }
}

#[derive(Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
struct StructuredGroup {
    group_name: String,
    group_size: u64,
    #[serde(default)]
    labels: Option<Vec<String>>,
    stages: Vec<StructuredStage>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct StructuredStage {
    name: String,
    counts: BTreeMap<String, u64>,
}

#[derive(Debug, Clone, Default)]
pub struct ParseOptions {
    /// Labels for tabular input, or for structured input without a `labels` field.
    pub labels: Option<LabelSet>,
    /// Group name for tabular input.
    pub group_name: Option<String>,
}

pub fn parse_group_file(
    bytes: &[u8],
    format: InputFormat,
    options: &ParseOptions,
) -> Result<GroupDataset> {
    match format {
        InputFormat::Structured => parse_structured(bytes, options),
        InputFormat::Tabular => parse_tabular(bytes, options),
    }
}

fn label_set(names: Option<Vec<String>>, options: &ParseOptions) -> Result<LabelSet> {
    match names {
        Some(names) => LabelSet::new(names).map_err(|e| CliError::model("labels", e)),
        None => Ok(options.labels.clone().unwrap_or_default()),
    }
}

fn parse_structured(bytes: &[u8], options: &ParseOptions) -> Result<GroupDataset> {
    let raw: StructuredGroup = serde_json::from_slice(bytes)?;
    let labels = label_set(raw.labels, options)?;
    let stages = raw
        .stages
        .into_iter()
        .map(|stage| {
            let mut counts = vec![0; labels.len()];
            for (label, count) in stage.counts {
                let label = labels
                    .lookup(&label)
                    .map_err(|e| CliError::model(format!("stage `{}`", stage.name), e))?;
                counts[label.index()] = count;
            }
            Ok((stage.name, counts))
        })
        .collect::<Result<Vec<_>>>()?;
    GroupDataset::new(raw.group_name, raw.group_size, labels, stages)
}

#[derive(Deserialize)]
struct Observation {
    entity: String,
    stage: String,
    label: String,
}

fn parse_tabular(bytes: &[u8], options: &ParseOptions) -> Result<GroupDataset> {
    let labels = options.labels.clone().unwrap_or_default();
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(bytes);

    let mut stage_order: Vec<String> = Vec::new();
    let mut counts: HashMap<String, Vec<u64>> = HashMap::new();
    let mut seen: HashSet<(String, String)> = HashSet::new();
    let mut entities: HashSet<String> = HashSet::new();
    for row in reader.deserialize() {
        let obs: Observation = row?;
        let label = labels
            .lookup(&obs.label)
            .map_err(|e| CliError::model(format!("entity `{}`", obs.entity), e))?;
        if !seen.insert((obs.entity.clone(), obs.stage.clone())) {
            return Err(CliError::Invalid(format!(
                "entity `{}` has more than one label at stage `{}`",
                obs.entity, obs.stage
            )));
        }
        if !counts.contains_key(&obs.stage) {
            stage_order.push(obs.stage.clone());
        }
        counts.entry(obs.stage).or_insert_with(|| vec![0; labels.len()])[label.index()] += 1;
        entities.insert(obs.entity);
    }

    let numeric: Option<Vec<u64>> = stage_order.iter().map(|s| s.parse().ok()).collect();
    if let Some(keys) = numeric {
        let mut paired: Vec<_> = keys.into_iter().zip(stage_order).collect();
        paired.sort();
        stage_order = paired.into_iter().map(|(_, s)| s).collect();
    }

    let stages = stage_order
        .into_iter()
        .map(|s| {
            let c = counts.remove(&s).unwrap_or_default();
            (s, c)
        })
        .collect();
    let group_name = options.group_name.clone().unwrap_or_else(|| "group".to_string());
    GroupDataset::new(group_name, entities.len() as u64, labels, stages)
}
