//! Exact distances to the nearest linear and nearest symmetric functions.
//!
//! cargo run --example walsh_and_distances

use qprop::boolfn::{
    distance_to_linear, distance_to_symmetric, symmetric_norm_sq, walsh_spectrum, weight_profile,
};
use qprop::TruthTable;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn describe(name: &str, f: &TruthTable) {
    let spectrum = walsh_spectrum(f);
    let lin = distance_to_linear(f);
    let sym = distance_to_symmetric(f);
    let mu_sq = symmetric_norm_sq(&weight_profile(f));
    println!("{name}  ({} inputs)", f.len());
    println!("  table            {}", f.to_bit_string());
    println!("  raw spectrum     {:?}", spectrum.raw());
    println!(
        "  nearest linear   {}  eps = {}/{} = {:.4}",
        lin.witness.to_bit_string(),
        lin.distance.disagreements(),
        lin.distance.total(),
        lin.epsilon()
    );
    println!(
        "  nearest sym.     {}  eps = {}/{} = {:.4}",
        sym.witness.to_bit_string(),
        sym.distance.disagreements(),
        sym.distance.total(),
        sym.epsilon()
    );
    println!(
        "  ||P_S v_f||^2    {mu_sq:.4}   (bound 1 - 2 eps = {:.4})\n",
        1.0 - 2.0 * sym.epsilon()
    );
}

fn main() -> qprop::Result<()> {
    describe("AND2", &TruthTable::from_u8s(2, &[0, 0, 0, 1])?);
    describe("x1 (n = 3)", &TruthTable::linear(3, 0b100)?);
    describe(
        "majority3",
        &TruthTable::symmetric(&[false, false, true, true])?,
    );
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    describe("random (n = 4)", &TruthTable::random(4, &mut rng)?);
    Ok(())
}
