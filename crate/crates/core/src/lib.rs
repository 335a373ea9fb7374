//! Simulation of quantum property testers for Boolean functions.
//!
//! The crate covers two testers built from amplitude amplification over a
//! dense statevector, together with their classical baselines:
//!
//! - linearity: repeated Bernstein–Vazirani identification followed by
//!   rounds of the operator `M = (I - 2|v_f><v_f|)(2|v_g><v_g| - I)`,
//! - permutation invariance: repeated symmetric-subspace measurements
//!   followed by rounds of `G = (I - 2|v_f><v_f|)(I - 2 P_S)`,
//! - the BLR three-query test and the same-weight pair test.
//!
//! Every simulated use of the black box is charged to an [`OracleHandle`],
//! and [`boolfn`] provides exact distances to the nearest linear and
//! nearest symmetric function so experiments can check the testers against
//! ground truth.
//!
//! Runnable walkthroughs live in the crate's `examples/` directory.

pub mod boolfn;
pub mod classical;
mod error;
pub mod harness;
pub mod oracle;
pub mod quantum;
pub mod statevec;

pub use boolfn::{Distance, DistanceReport, TruthTable, WalshSpectrum, WeightClassProfile};
pub use error::{Error, Result};
pub use oracle::OracleHandle;
pub use statevec::{ProjectorSpec, Reflection, StateVector};

/// Largest arity accepted unless a caller raises the limit explicitly.
pub const DEFAULT_N_MAX: usize = 20;

/// Hard ceiling on any arity override; beyond this a dense table no longer
/// fits a `usize` index comfortably on 64-bit hosts.
pub const HARD_N_MAX: usize = 30;
