//! The quantum symmetry tester on symmetric, nearly symmetric and random
//! functions.
//!
//! cargo run --release --example symmetry_tester

use qprop::boolfn::{distance_to_symmetric, symmetric_norm_sq, weight_profile};
use qprop::quantum::{run_symmetry_test, symmetry_acceptance_probability, symmetry_schedule};
use qprop::{OracleHandle, TruthTable};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> qprop::Result<()> {
    let n = 10;
    let eps = 1.0 / 32.0;
    let schedule = symmetry_schedule(eps)?;
    println!(
        "eps = {eps}: m = {}, steps = {}, rounds = {}\n",
        schedule.m_first_stage, schedule.grover_steps, schedule.rounds
    );

    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let parity_of_weight: Vec<bool> = (0..=n).map(|w| w % 2 == 1).collect();
    let majority: Vec<bool> = (0..=n).map(|w| 2 * w > n).collect();
    let instances = [
        ("weight parity", TruthTable::symmetric(&parity_of_weight)?),
        (
            "majority + 40 flips",
            TruthTable::symmetric(&majority)?.perturb(40, &mut rng)?,
        ),
        ("x1", TruthTable::linear(n, 1 << (n - 1))?),
        ("random", TruthTable::random(n, &mut rng)?),
    ];

    for (name, f) in &instances {
        let trials = 400;
        let accepted = (0..trials)
            .filter(|_| {
                let mut oracle = OracleHandle::new(f);
                run_symmetry_test(&mut oracle, &schedule, &mut rng)
                    .unwrap()
                    .accepted()
            })
            .count();
        let mu_sq = symmetric_norm_sq(&weight_profile(f));
        println!(
            "{name:20} dist = {:.4}  ||P_S v_f||^2 = {mu_sq:.4}  accepted {:.3} (exact {:.3})",
            distance_to_symmetric(f).epsilon(),
            accepted as f64 / trials as f64,
            symmetry_acceptance_probability(mu_sq, &schedule)
        );
    }
    Ok(())
}
