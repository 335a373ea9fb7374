//! The quantum linearity tester on a linear function, a nearly linear one and
//! a random one, with the exact acceptance probability for comparison.
//!
//! cargo run --release --example linearity_tester

use qprop::boolfn::{distance_to_linear, walsh_spectrum};
use qprop::quantum::{linearity_acceptance_probability, linearity_schedule, run_linearity_test};
use qprop::{OracleHandle, TruthTable};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> qprop::Result<()> {
    let n = 10;
    let eps = 1.0 / 32.0;
    let schedule = linearity_schedule(eps)?;
    println!(
        "eps = {eps}: m = {}, steps = {}, rounds = {}, at most {} calls\n",
        schedule.m_first_stage,
        schedule.grover_steps,
        schedule.rounds,
        schedule.predicted_total_calls
    );

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let base = TruthTable::linear(n, 0b1100101011)?;
    let instances = [
        ("linear", base.clone()),
        ("linear + 64 flips", base.perturb(64, &mut rng)?),
        ("random", TruthTable::random(n, &mut rng)?),
    ];

    for (name, f) in &instances {
        let trials = 400;
        let mut accepted = 0;
        let mut calls = 0;
        for _ in 0..trials {
            let mut oracle = OracleHandle::new(f);
            let verdict = run_linearity_test(&mut oracle, &schedule, &mut rng)?;
            accepted += verdict.accepted() as u32;
            calls += verdict.oracle_calls;
        }
        let exact = linearity_acceptance_probability(&walsh_spectrum(f), &schedule);
        println!(
            "{name:18} dist = {:.4}  accepted {:.3} (exact {:.3})  mean calls {:.1}",
            distance_to_linear(f).epsilon(),
            accepted as f64 / trials as f64,
            exact,
            calls as f64 / trials as f64
        );
    }

    let mut oracle = OracleHandle::new(&instances[1].1);
    let verdict = run_linearity_test(&mut oracle, &schedule, &mut rng)?;
    println!(
        "\none run on the perturbed instance: {:?} at {:?}",
        verdict.decision, verdict.rejected_at
    );
    for entry in verdict.trace.iter().take(6) {
        println!(
            "  {:?} round {} -> {}",
            entry.phase, entry.round, entry.result
        );
    }
    Ok(())
}
