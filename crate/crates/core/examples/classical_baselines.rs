//! BLR and the same-weight pair test, with the witnesses they report.
//!
//! cargo run --example classical_baselines

use qprop::classical::{blr_instance, blr_test, classical_rounds, classical_symmetry_test};
use qprop::{OracleHandle, TruthTable};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> qprop::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let eps = 0.05;
    println!("eps = {eps}: {} rounds per test\n", classical_rounds(eps)?);

    let and2 = TruthTable::from_u8s(2, &[0, 0, 0, 1])?;
    let draws = 100_000;
    let mut oracle = OracleHandle::new(&and2);
    let passed = (0..draws)
        .filter(|_| blr_instance(&mut oracle, &mut rng).is_none())
        .count();
    println!(
        "BLR single-round pass rate on AND2: {:.4} (exact 5/8)",
        passed as f64 / draws as f64
    );

    let x1 = TruthTable::linear(3, 0b100)?;
    let cases = [
        ("linear 1011", TruthTable::linear(4, 0b1011)?),
        ("random n = 6", TruthTable::random(6, &mut rng)?),
    ];
    for (name, f) in &cases {
        let verdict = blr_test(&mut OracleHandle::new(f), eps, &mut rng)?;
        println!(
            "BLR on {name}: accepted = {}, rounds = {}, calls = {}, witness = {:?}",
            verdict.accepted, verdict.rounds_run, verdict.oracle_calls, verdict.failing_witness
        );
    }

    let sym = TruthTable::symmetric(&[true, false, false, true])?;
    for (name, f) in [("symmetric 1001", &sym), ("x1", &x1)] {
        let verdict = classical_symmetry_test(&mut OracleHandle::new(f), eps, &mut rng)?;
        println!(
            "same-weight test on {name}: accepted = {}, rounds = {}, witness = {:?}",
            verdict.accepted, verdict.rounds_run, verdict.failing_witness
        );
    }
    Ok(())
}
