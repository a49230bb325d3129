//! Library side of the `stagefuzz` command: input parsing, the analysis
//! pipeline over one or more groups, and report rendering.

pub mod analysis;
pub mod dataset;
pub mod error;
pub mod exact;
pub mod presets;
pub mod render;

pub use analysis::{
    analyze_command, combine_command, compare_command, parse_report, AnalysisOptions,
    AnalysisReport, REPORT_SCHEMA,
};
pub use dataset::{parse_group_file, GroupDataset, InputFormat, ParseOptions};
pub use error::{CliError, Result};
pub use render::{render_report, OutputFormat, RenderOptions};
