use rand::Rng;

use super::angles::{predicted_rejection, Convention};
use super::schedule::{symmetry_schedule, TestSchedule};
use super::{Decision, Phase, QuantumVerdict, TraceEntry};
use crate::oracle::OracleHandle;
use crate::statevec::{StateVector, WeightClasses};
use crate::Result;

/// One application of `G = (I - 2|v_f><v_f|)(I - 2 P_S)`; two calls.
pub fn apply_symmetry_iterate(
    o: &mut OracleHandle<'_>,
    classes: &WeightClasses,
    s: &mut StateVector,
) {
    s.apply_symmetric_reflection(classes);
    o.reflect_across_phase_state(s);
}

/// `G^steps |v_f>`, charging `1 + 2 steps` calls.
pub fn amplify_symmetry(
    o: &mut OracleHandle<'_>,
    classes: &WeightClasses,
    steps: u64,
) -> StateVector {
    let mut s = o.phase_state();
    for _ in 0..steps {
        apply_symmetry_iterate(o, classes, &mut s);
    }
    s
}

fn symmetry_round<R: Rng + ?Sized>(
    o: &mut OracleHandle<'_>,
    classes: &WeightClasses,
    steps: u64,
    rng: &mut R,
) -> bool {
    let s = amplify_symmetry(o, classes, steps);
    let p = classes.projected_norm_sq(&s).clamp(0.0, 1.0);
    rng.gen::<f64>() < p
}

/// Runs `steps` iterations of `G` from a fresh `|v_f>` and measures `P_S`.
/// `true` means the state was found in the symmetric subspace.
pub fn grover_symmetry_round<R: Rng + ?Sized>(
    o: &mut OracleHandle<'_>,
    steps: u64,
    rng: &mut R,
) -> bool {
    let classes = WeightClasses::new(o.arity());
    symmetry_round(o, &classes, steps, rng)
}

pub fn quantum_symmetry_test<R: Rng + ?Sized>(
    o: &mut OracleHandle<'_>,
    eps: f64,
    rng: &mut R,
) -> Result<QuantumVerdict> {
    let schedule = symmetry_schedule(eps)?;
    run_symmetry_test(o, &schedule, rng)
}

/// Runs the symmetry tester under an explicit schedule. The first stage is
/// the zero-step round, so it costs one call per measurement.
pub fn run_symmetry_test<R: Rng + ?Sized>(
    o: &mut OracleHandle<'_>,
    schedule: &TestSchedule,
    rng: &mut R,
) -> Result<QuantumVerdict> {
    let start = o.calls();
    let classes = WeightClasses::new(o.arity());
    let mut trace = Vec::new();
    let stages = [
        (Phase::FirstStage, schedule.m_first_stage, 0),
        (Phase::Amplification, schedule.rounds, schedule.grover_steps),
    ];
    for (phase, repetitions, steps) in stages {
        for round in 1..=repetitions {
            let inside = symmetry_round(o, &classes, steps, rng);
            trace.push(TraceEntry {
                phase,
                round,
                result: inside as usize,
            });
            if !inside {
                return Ok(QuantumVerdict {
                    decision: Decision::NotSymmetric,
                    rejected_at: Some((phase, round)),
                    trace,
                    oracle_calls: o.calls() - start,
                    schedule: *schedule,
                });
            }
        }
    }
    Ok(QuantumVerdict {
        decision: Decision::Symmetric,
        rejected_at: None,
        trace,
        oracle_calls: o.calls() - start,
        schedule: *schedule,
    })
}

/// Exact acceptance probability of the symmetry tester for a function with
/// `||P_S v_f||^2 = mu_sq`: `mu^{2m} (1 - q)^l`.
pub fn symmetry_acceptance_probability(mu_sq: f64, schedule: &TestSchedule) -> f64 {
    let mu = mu_sq.clamp(0.0, 1.0).sqrt();
    let survive =
        1.0 - predicted_rejection(mu, schedule.grover_steps, Convention::Symmetry).unwrap();
    mu_sq.clamp(0.0, 1.0).powi(schedule.m_first_stage as i32) * survive.powi(schedule.rounds as i32)
}
