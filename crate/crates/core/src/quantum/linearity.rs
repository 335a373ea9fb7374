use rand::Rng;

use super::angles::{predicted_rejection, Convention};
use super::schedule::{linearity_schedule, TestSchedule};
use super::{Decision, Phase, QuantumVerdict, TraceEntry};
use crate::boolfn::{TruthTable, WalshSpectrum};
use crate::oracle::OracleHandle;
use crate::statevec::{phase_state, sample_computational, Reflection, StateVector};
use crate::Result;

/// One Bernstein–Vazirani run: prepare `|v_f>`, apply `H^n`, read out the
/// computational basis. Returns the coefficient index `a`, which is exact for
/// linear `f` and distributed as `W_a^2` otherwise.
pub fn bernstein_vazirani<R: Rng + ?Sized>(o: &mut OracleHandle<'_>, rng: &mut R) -> usize {
    let mut s = o.phase_state();
    s.apply_hadamard_all();
    sample_computational(&s, rng)
}

/// One application of `M = (I - 2|v_f><v_f|)(2|v_g><v_g| - I)`; two calls.
pub fn apply_linearity_iterate(
    o: &mut OracleHandle<'_>,
    candidate: &StateVector,
    s: &mut StateVector,
) {
    s.apply_reflection(candidate, Reflection::About);
    o.reflect_across_phase_state(s);
}

/// `M^steps |v_f>`, charging `1 + 2 steps` calls.
pub fn amplify_linearity(
    o: &mut OracleHandle<'_>,
    candidate: &StateVector,
    steps: u64,
) -> StateVector {
    let mut s = o.phase_state();
    for _ in 0..steps {
        apply_linearity_iterate(o, candidate, &mut s);
    }
    s
}

fn candidate_state(n: usize, g: usize) -> Result<StateVector> {
    Ok(phase_state(&TruthTable::linear(n, g)?))
}

fn linearity_round<R: Rng + ?Sized>(
    o: &mut OracleHandle<'_>,
    candidate: &StateVector,
    steps: u64,
    rng: &mut R,
) -> bool {
    let s = amplify_linearity(o, candidate, steps);
    let p = candidate.inner(&s).norm_sqr().clamp(0.0, 1.0);
    rng.gen::<f64>() < p
}

/// Runs `steps` iterations of `M` from a fresh `|v_f>` and measures
/// `P_g = |v_g><v_g|`. `true` means the state is still consistent with the
/// linear function `g`.
pub fn grover_linearity_round<R: Rng + ?Sized>(
    o: &mut OracleHandle<'_>,
    g: usize,
    steps: u64,
    rng: &mut R,
) -> Result<bool> {
    let candidate = candidate_state(o.arity(), g)?;
    Ok(linearity_round(o, &candidate, steps, rng))
}

pub fn quantum_linearity_test<R: Rng + ?Sized>(
    o: &mut OracleHandle<'_>,
    eps: f64,
    rng: &mut R,
) -> Result<QuantumVerdict> {
    let schedule = linearity_schedule(eps)?;
    run_linearity_test(o, &schedule, rng)
}

/// Runs the linearity tester under an explicit schedule.
pub fn run_linearity_test<R: Rng + ?Sized>(
    o: &mut OracleHandle<'_>,
    schedule: &TestSchedule,
    rng: &mut R,
) -> Result<QuantumVerdict> {
    let start = o.calls();
    let mut trace = Vec::new();
    let reject = |o: &OracleHandle<'_>, trace: Vec<TraceEntry>, phase, round| QuantumVerdict {
        decision: Decision::NotLinear,
        rejected_at: Some((phase, round)),
        trace,
        oracle_calls: o.calls() - start,
        schedule: *schedule,
    };

    let mut candidate = None;
    for round in 1..=schedule.m_first_stage {
        let a = bernstein_vazirani(o, rng);
        trace.push(TraceEntry {
            phase: Phase::FirstStage,
            round,
            result: a,
        });
        match candidate {
            None => candidate = Some(a),
            Some(g) if g != a => return Ok(reject(o, trace, Phase::FirstStage, round)),
            Some(_) => {}
        }
    }
    let g = candidate.expect("first stage runs at least once");

    let axis = candidate_state(o.arity(), g)?;
    for round in 1..=schedule.rounds {
        let consistent = linearity_round(o, &axis, schedule.grover_steps, rng);
        trace.push(TraceEntry {
            phase: Phase::Amplification,
            round,
            result: consistent as usize,
        });
        if !consistent {
            return Ok(reject(o, trace, Phase::Amplification, round));
        }
    }

    Ok(QuantumVerdict {
        decision: Decision::Linear(g),
        rejected_at: None,
        trace,
        oracle_calls: o.calls() - start,
        schedule: *schedule,
    })
}

/// Exact probability that the linearity tester accepts a function with the
/// given spectrum: every BV run must return the same `b`, then every round
/// must survive, `sum_b W_b^{2m} (1 - q(|W_b|))^r`.
pub fn linearity_acceptance_probability(spectrum: &WalshSpectrum, schedule: &TestSchedule) -> f64 {
    spectrum
        .coeffs()
        .iter()
        .filter(|w| **w != 0.0)
        .map(|&w| {
            let a = w.abs().min(1.0);
            let survive =
                1.0 - predicted_rejection(a, schedule.grover_steps, Convention::Linearity).unwrap();
            (w * w).powi(schedule.m_first_stage as i32) * survive.powi(schedule.rounds as i32)
        })
        .sum()
}
