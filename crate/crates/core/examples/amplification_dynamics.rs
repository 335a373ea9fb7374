//! Step-by-step amplitude amplification compared with the closed-form
//! rotation on the invariant plane.
//!
//! cargo run --example amplification_dynamics

use qprop::boolfn::{distance_to_linear, symmetric_norm_sq, weight_profile};
use qprop::quantum::{
    amplify_linearity, amplify_symmetry, grover_eigenphase, predicted_rejection, Convention,
};
use qprop::statevec::{phase_state, WeightClasses};
use qprop::{OracleHandle, TruthTable};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> qprop::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let n = 8;

    // Linearity: rotate v_f away from its nearest linear function g.
    let f = TruthTable::linear(n, 0b10110001)?.perturb(20, &mut rng)?;
    let nearest = distance_to_linear(&f);
    let a = nearest.overlap();
    let axis = phase_state(&nearest.witness);
    let angles = grover_eigenphase(a, Convention::Linearity)?;
    println!(
        "linearity: a = {a:.4}, theta = {:.4}, delta theta = {:.4}",
        angles.theta,
        angles.delta_theta.unwrap()
    );
    println!(" steps  simulated P(reject)  closed form");
    for steps in 0..=12 {
        let s = amplify_linearity(&mut OracleHandle::new(&f), &axis, steps);
        let simulated = 1.0 - axis.inner(&s).norm_sqr();
        let closed = predicted_rejection(a, steps, Convention::Linearity)?;
        println!(" {steps:5}  {simulated:19.12}  {closed:.12}");
    }

    // Symmetry: rotate v_f out of the symmetric subspace.
    let weights: Vec<bool> = (0..=n).map(|w| w % 3 == 0).collect();
    let f = TruthTable::symmetric(&weights)?.perturb(30, &mut rng)?;
    let mu = symmetric_norm_sq(&weight_profile(&f)).sqrt();
    let classes = WeightClasses::new(n);
    let angles = grover_eigenphase(mu, Convention::Symmetry)?;
    println!("\nsymmetry: mu = {mu:.4}, theta = {:.4}", angles.theta);
    println!(" steps  simulated P(reject)  closed form");
    for steps in 0..=12 {
        let s = amplify_symmetry(&mut OracleHandle::new(&f), &classes, steps);
        let simulated = 1.0 - classes.projected_norm_sq(&s);
        let closed = predicted_rejection(mu, steps, Convention::Symmetry)?;
        println!(" {steps:5}  {simulated:19.12}  {closed:.12}");
    }
    Ok(())
}
