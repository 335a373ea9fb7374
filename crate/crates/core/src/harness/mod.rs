//! Seeded Monte Carlo experiments over the testers.
//!
//! An [`ExperimentConfig`] names a mode, an instance and a trial count.
//! [`run`] produces an [`ExperimentReport`], which [`emit_report`] writes as
//! JSON or CSV. Equal configs give byte-identical output.

mod config;
mod report;
mod run;

pub use config::{
    parse_config, CampaignArgs, CampaignTest, Cli, Command, CommonArgs, ExperimentConfig,
    FunctionSource, GeneratorSpec, Mode, OutputFormat, DEFAULT_CAMPAIGN_GRID, DEFAULT_TRIALS,
};
pub use report::{emit_report, render_report};
pub use run::{
    least_squares_slope, run, stream_rng, CampaignPoint, CampaignSummary, DistanceEcho,
    DistanceEntry, ExperimentReport, ScheduleEcho, TrialRecord, SLOPE_BAND,
};
