use std::f64::consts::{PI, SQRT_2};

use serde::Serialize;

use crate::classical::check_eps;
use crate::Result;

/// Above this distance parameter the soundness analyses no longer apply;
/// schedules are still produced but flagged.
pub const GUARANTEE_LIMIT: f64 = 1.0 / 8.0;

/// Repetition and step counts for one run of a quantum tester.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TestSchedule {
    pub eps: f64,
    /// Bernstein–Vazirani runs, or plain `P_S` measurements.
    pub m_first_stage: u64,
    /// Amplification iterations per round.
    pub grover_steps: u64,
    /// Amplification rounds.
    pub rounds: u64,
    /// Calls when every stage runs to completion.
    pub predicted_total_calls: u64,
    /// Set when `eps >= 1/8`.
    pub guarantees_void: bool,
}

impl TestSchedule {
    fn new(eps: f64, m_first_stage: u64, grover_steps: u64, rounds: u64) -> Self {
        Self {
            eps,
            m_first_stage,
            grover_steps,
            rounds,
            predicted_total_calls: m_first_stage + rounds * (1 + 2 * grover_steps),
            guarantees_void: eps >= GUARANTEE_LIMIT,
        }
    }

    /// Calls spent by one amplification round: one preparation plus two per
    /// iteration.
    pub fn calls_per_round(&self) -> u64 {
        1 + 2 * self.grover_steps
    }
}

fn ln3() -> f64 {
    3f64.ln()
}

// ceil(ln 3 / (2 eps^{2/3})), shared by both testers.
fn first_stage_repetitions(eps: f64) -> u64 {
    (ln3() / (2.0 * eps.powf(2.0 / 3.0))).ceil() as u64
}

fn nearest_at_least_one(x: f64) -> u64 {
    x.round().max(1.0) as u64
}

/// Schedule for the linearity tester.
///
/// Steps solve `(2n + 1) sqrt(2) eps^{1/3} = pi` and the round count makes
/// `(1 - pi^2 eps^{1/3} / 8)^r` fall below 1/3.
pub fn linearity_schedule(eps: f64) -> Result<TestSchedule> {
    check_eps(eps)?;
    let cbrt = eps.cbrt();
    let steps = nearest_at_least_one((PI / (SQRT_2 * cbrt) - 1.0) / 2.0);
    let rounds = (8.0 * ln3() / (PI * PI * cbrt)).ceil() as u64;
    Ok(TestSchedule::new(
        eps,
        first_stage_repetitions(eps),
        steps,
        rounds,
    ))
}

/// Schedule for the symmetry tester: `n = 3 pi / (10 eps^{1/3})` iterations,
/// `l = ceil(ln 3 / (4 eps^{1/3}))` rounds.
pub fn symmetry_schedule(eps: f64) -> Result<TestSchedule> {
    check_eps(eps)?;
    let cbrt = eps.cbrt();
    let steps = nearest_at_least_one(3.0 * PI / (10.0 * cbrt));
    let rounds = (ln3() / (4.0 * cbrt)).ceil() as u64;
    Ok(TestSchedule::new(
        eps,
        first_stage_repetitions(eps),
        steps,
        rounds,
    ))
}
