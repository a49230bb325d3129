//! Named stage-name presets, loaded from `presets.json`.

use std::collections::BTreeMap;

use crate::error::{CliError, Result};

const PRESETS: &str = include_str!("../presets.json");

pub fn presets() -> BTreeMap<String, Vec<String>> {
    serde_json::from_str(PRESETS).expect("bundled presets are valid JSON")
}

/// A preset name, or a comma-separated list of stage names.
pub fn resolve_stage_names(spec: &str) -> Result<Vec<String>> {
    if let Some(names) = presets().remove(spec) {
        return Ok(names);
    }
    let names: Vec<String> = spec.split(',').map(|s| s.trim().to_string()).collect();
    if names.len() < 2 || names.iter().any(String::is_empty) {
        return Err(CliError::Invalid(format!(
            "`{spec}` is neither a preset ({}) nor a list of at least two stage names",
            presets().keys().cloned().collect::<Vec<_>>().join(", ")
        )));
    }
    Ok(names)
}
