//! Recover the coefficient string of a linear function with one query, and
//! watch the output distribution of a non-linear one follow `W_a^2`.
//!
//! cargo run --example bernstein_vazirani

use qprop::boolfn::{format_bits, walsh_spectrum};
use qprop::quantum::bernstein_vazirani;
use qprop::{OracleHandle, TruthTable};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> qprop::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);

    let n = 6;
    for a in [0b000000, 0b101101, 0b111111] {
        let f = TruthTable::linear(n, a)?;
        let mut oracle = OracleHandle::new(&f);
        let found = bernstein_vazirani(&mut oracle, &mut rng);
        println!(
            "f(x) = a.x with a = {}  ->  BV returns {}  ({} call)",
            format_bits(a, n),
            format_bits(found, n),
            oracle.calls()
        );
    }

    let and2 = TruthTable::from_u8s(2, &[0, 0, 0, 1])?;
    let spectrum = walsh_spectrum(&and2);
    let draws = 20_000;
    let mut counts = [0u32; 4];
    let mut oracle = OracleHandle::new(&and2);
    for _ in 0..draws {
        counts[bernstein_vazirani(&mut oracle, &mut rng)] += 1;
    }
    println!("\nAND on 2 bits, {draws} runs:");
    for (a, c) in counts.iter().enumerate() {
        println!(
            "  a = {}  W_a = {:+.2}  W_a^2 = {:.3}  observed {:.3}",
            format_bits(a, 2),
            spectrum.coeff(a),
            spectrum.coeff(a).powi(2),
            *c as f64 / draws as f64
        );
    }
    Ok(())
}
