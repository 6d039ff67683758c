//! Deciding and certifying whether a digraph supports a unitary matrix.

mod battery;
mod certify;
mod projection;
mod sperner;
mod survey;

pub use battery::{necessary_battery, BatteryVerdict, ConditionReport, BATTERY_NAMES};
pub use certify::{
    certify, claw_graph_unitary, dft_blocks, Certificate, CertificateKind, Certification, Verdict,
};
pub use projection::{alternating_projection, Realization, SolverConfig};
pub use sperner::{edge_entropy, sperner_capacity, SpernerMode, SpernerValue, SPERNER_OPTIMIZE_LIMIT};
pub use survey::{connected_graphs, conjecture_survey, Survey, SurveyCounts, SurveyEntry, SURVEY_MAX_N};
