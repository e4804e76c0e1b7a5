//! Case files, reports and the corpus runner behind the `hermsig` binary.

pub mod case;
pub mod human;
pub mod report;
pub mod run;

pub use case::{merge, Basis, CaseError, CaseFile, CaseOptions, CaseSpec, GroupSpec, Overrides, WeightSpec};
pub use report::{Agreement, ReportDocument};
pub use run::{dominant_weights_up_to, run_case, run_corpus, CorpusFilter, CorpusSummary};
