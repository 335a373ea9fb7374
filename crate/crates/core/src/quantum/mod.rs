//! Quantum property testers.
//!
//! Both testers share a two-stage shape. The first stage repeats a single
//! cheap measurement (`m` Bernstein–Vazirani runs, or `m` measurements of
//! `P_S` on a fresh `|v_f>`), which catches functions far from the property.
//! The second stage runs amplitude amplification `rounds` times for
//! `grover_steps` iterations each and measures the property projector after
//! every round, restarting from a fresh `|v_f>`. Any violation rejects.

mod angles;
mod linearity;
mod schedule;
mod symmetry;

use serde::Serialize;

pub use angles::{grover_eigenphase, plane_matrix, predicted_rejection, AngleReport, Convention};
pub use linearity::{
    amplify_linearity, apply_linearity_iterate, bernstein_vazirani, grover_linearity_round,
    linearity_acceptance_probability, quantum_linearity_test, run_linearity_test,
};
pub use schedule::{linearity_schedule, symmetry_schedule, TestSchedule, GUARANTEE_LIMIT};
pub use symmetry::{
    amplify_symmetry, apply_symmetry_iterate, grover_symmetry_round, quantum_symmetry_test,
    run_symmetry_test, symmetry_acceptance_probability,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "coefficients", rename_all = "snake_case")]
pub enum Decision {
    /// Accepted as linear with the identified coefficient index.
    Linear(usize),
    NotLinear,
    Symmetric,
    NotSymmetric,
}

impl Decision {
    pub fn accepted(&self) -> bool {
        matches!(self, Decision::Linear(_) | Decision::Symmetric)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Phase {
    /// Bernstein–Vazirani runs or bare `P_S` measurements.
    FirstStage,
    Amplification,
}

/// One measurement in a tester run. `result` is the BV output index in the
/// linearity first stage and the projector outcome (0 or 1) elsewhere.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TraceEntry {
    pub phase: Phase,
    /// 1-based within its phase.
    pub round: u64,
    pub result: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuantumVerdict {
    pub decision: Decision,
    /// Where the run stopped on rejection.
    pub rejected_at: Option<(Phase, u64)>,
    pub trace: Vec<TraceEntry>,
    pub oracle_calls: u64,
    pub schedule: TestSchedule,
}

impl QuantumVerdict {
    pub fn accepted(&self) -> bool {
        self.decision.accepted()
    }

    pub fn guarantees_void(&self) -> bool {
        self.schedule.guarantees_void
    }
}
