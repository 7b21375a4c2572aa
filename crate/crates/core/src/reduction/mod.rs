//! Exact-3SAT to residual-matching reduction.

pub mod calibration;
pub mod certify;
pub mod cnf;
pub mod construct;

pub use certify::{decode_matching, encode_assignment, expected_residual, verify_artifact, Certificate, VerifyOptions};
pub use cnf::{parse_dimacs, Assignment, CnfInstance, Literal};
pub use construct::{build_artifact, ReductionArtifact, Variant};
