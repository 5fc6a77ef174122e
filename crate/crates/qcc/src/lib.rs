//! Constacyclic-code constructions of MDS quantum convolutional codes.
//!
//! The crate builds two families of quantum convolutional stabilizer codes
//! over small odd prime-power alphabets, going through the full classical
//! pipeline: cyclotomic cosets and defining sets, constacyclic block codes
//! over F_{q²} with explicit parity-check matrices, a polynomial generator
//! matrix for the derived convolutional code, and the Hermitian
//! self-orthogonality and distance facts needed to read off the quantum
//! parameters. Every claimed property is re-checked computationally and the
//! evidence is bundled into a machine-readable certificate.
//!
//! Modules follow the pipeline order:
//!
//! - [`gf`]: the field tower F_q ⊂ F_{q²} ⊂ F_{q⁴}.
//! - [`cosets`]: q²-cyclotomic cosets modulo rn and defining sets.
//! - [`block`]: constacyclic block codes, parity checks, distance oracles.
//! - [`conv`]: polynomial generator matrices and their certifications.
//! - [`quantum`]: stabilizer parameters, Singleton bound, certificates.
//! - [`cli`]: the `qcc` command-line front end.

pub mod block;
pub mod cli;
pub mod conv;
pub mod cosets;
pub mod error;
pub mod gf;
pub mod linalg;
pub mod poly;
pub mod quantum;
pub mod verify;

pub use error::{Error, Result};
