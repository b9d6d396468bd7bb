//! Checking machinery: a brute-force ray oracle, seeded instance
//! generators, randomized theorem suites and the eight-edge scene verifier.

mod cli;
mod oracle;
mod random;
mod section6;
mod suite;

pub use cli::{run, CliOutcome};
pub use oracle::{ray_oracle, Disagreement, Hit, OracleReport, RayRecord};
pub use random::{
    perturbed_eight_edge, random_coord, random_point, random_scene, GenError, TrialConfig,
};
pub use section6::{barycentric, verify_section6, Check, Section6Report};
pub use suite::{
    polyhedron_corpus, sample_viewpoints, sod_law_suite, theorem_suite, tight_points, SodStats,
    SuiteReport, TheoremStat, Witness,
};
