//! Classical baselines: the BLR linearity test and the same-weight pair test
//! for symmetry. Both repeat `ceil(ln 3 / eps)` times and accept only if
//! every round accepts.

use rand::seq::index;
use rand::Rng;
use serde::Serialize;

use crate::oracle::OracleHandle;
use crate::{Error, Result};

/// Evidence that a function failed a classical round. Re-evaluating the
/// table at the recorded points reproduces the failure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// `f(z) != f(x) xor f(y)` with `z = x xor y`.
    Blr { x: usize, y: usize, z: usize },
    /// `weight(x) == weight(y)` but `f(x) != f(y)`.
    SameWeight { x: usize, y: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassicalVerdict {
    pub accepted: bool,
    pub rounds_run: u64,
    pub failing_witness: Option<Witness>,
    pub oracle_calls: u64,
}

/// `ceil(ln 3 / eps)`: enough rounds to push the acceptance probability of an
/// eps-far function below 1/3.
pub fn classical_rounds(eps: f64) -> Result<u64> {
    check_eps(eps)?;
    Ok((3f64.ln() / eps).ceil() as u64)
}

pub(crate) fn check_eps(eps: f64) -> Result<()> {
    if eps.is_finite() && eps > 0.0 && eps < 1.0 {
        Ok(())
    } else {
        Err(Error::EpsilonOutOfRange(eps))
    }
}

/// One BLR round: three queries, accept iff `f(x xor y) = f(x) xor f(y)`.
/// `x` and `y` are drawn independently, so `x == y` is possible.
pub fn blr_instance<R: Rng + ?Sized>(o: &mut OracleHandle<'_>, rng: &mut R) -> Option<Witness> {
    let size = 1usize << o.arity();
    let x = rng.gen_range(0..size);
    let y = rng.gen_range(0..size);
    let z = x ^ y;
    let (fx, fy, fz) = (o.query(x), o.query(y), o.query(z));
    if fz == (fx ^ fy) {
        None
    } else {
        Some(Witness::Blr { x, y, z })
    }
}

pub fn blr_test<R: Rng + ?Sized>(
    o: &mut OracleHandle<'_>,
    eps: f64,
    rng: &mut R,
) -> Result<ClassicalVerdict> {
    let rounds = classical_rounds(eps)?;
    Ok(repeat(o, rounds, rng, blr_instance))
}

/// One same-weight round: draw `x` uniformly among inputs that are neither
/// all zeros nor all ones, then `y != x` uniformly from the weight class of
/// `x`; accept iff `f(x) = f(y)`.
pub fn classical_symmetry_instance<R: Rng + ?Sized>(
    o: &mut OracleHandle<'_>,
    rng: &mut R,
) -> Result<Option<Witness>> {
    let n = o.arity();
    if n < 2 {
        return Err(Error::ArityTooSmall { n, required: 2 });
    }
    let size = 1usize << n;
    let x = rng.gen_range(1..size - 1);
    let y = same_weight_partner(n, x, rng);
    let (fx, fy) = (o.query(x), o.query(y));
    Ok((fx != fy).then_some(Witness::SameWeight { x, y }))
}

pub fn classical_symmetry_test<R: Rng + ?Sized>(
    o: &mut OracleHandle<'_>,
    eps: f64,
    rng: &mut R,
) -> Result<ClassicalVerdict> {
    let rounds = classical_rounds(eps)?;
    if o.arity() < 2 {
        return Err(Error::ArityTooSmall {
            n: o.arity(),
            required: 2,
        });
    }
    Ok(repeat(o, rounds, rng, |o, rng| {
        classical_symmetry_instance(o, rng).expect("arity checked above")
    }))
}

// Uniform over the weight class of `x` minus `x` itself: a uniform subset of
// bit positions is a uniform class member, and rejecting `x` leaves the rest
// equally likely. Classes here have at least `n >= 2` members.
fn same_weight_partner<R: Rng + ?Sized>(n: usize, x: usize, rng: &mut R) -> usize {
    let w = x.count_ones() as usize;
    loop {
        let y = index::sample(rng, n, w)
            .into_iter()
            .fold(0usize, |acc, bit| acc | (1 << bit));
        if y != x {
            return y;
        }
    }
}

fn repeat<R, F>(
    o: &mut OracleHandle<'_>,
    rounds: u64,
    rng: &mut R,
    mut round: F,
) -> ClassicalVerdict
where
    R: Rng + ?Sized,
    F: FnMut(&mut OracleHandle<'_>, &mut R) -> Option<Witness>,
{
    let start = o.calls();
    for k in 1..=rounds {
        if let Some(w) = round(o, rng) {
            return ClassicalVerdict {
                accepted: false,
                rounds_run: k,
                failing_witness: Some(w),
                oracle_calls: o.calls() - start,
            };
        }
    }
    ClassicalVerdict {
        accepted: true,
        rounds_run: rounds,
        failing_witness: None,
        oracle_calls: o.calls() - start,
    }
}
