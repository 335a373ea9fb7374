//! Dense statevector over `n` qubits.
//!
//! The `|->` ancilla of the f-controlled-NOT is never stored: the oracle acts
//! directly as the diagonal phase `(-1)^f(x)`. Transforms mutate in place;
//! the free functions take and return the state by value so chains read
//! naturally, and callers that need the pre-image clone first.

use num_complex::Complex64;
use rand::Rng;

use crate::boolfn::{fwht_in_place, TruthTable};
use crate::{Error, Result};

/// Observed-branch probabilities below this are treated as degenerate.
pub const DEGENERATE_BRANCH: f64 = 1e-15;

#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    pub fn from_amplitudes(n: usize, amps: Vec<Complex64>) -> Result<Self> {
        let expected = 1usize << n;
        if amps.len() != expected {
            return Err(Error::LengthMismatch {
                n,
                expected,
                actual: amps.len(),
            });
        }
        Ok(Self { n, amps })
    }

    /// Computational basis state `|x>`.
    pub fn basis(n: usize, x: usize) -> Self {
        let mut amps = vec![Complex64::new(0.0, 0.0); 1 << n];
        amps[x] = Complex64::new(1.0, 0.0);
        Self { n, amps }
    }

    pub fn uniform(n: usize) -> Self {
        let a = Complex64::new(1.0 / ((1u64 << n) as f64).sqrt(), 0.0);
        Self {
            n,
            amps: vec![a; 1 << n],
        }
    }

    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            amps: vec![Complex64::new(0.0, 0.0); 1 << n],
        }
    }

    pub fn qubits(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.amps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amps.is_empty()
    }

    pub fn amps(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn amps_mut(&mut self) -> &mut [Complex64] {
        &mut self.amps
    }

    pub fn norm_sq(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &StateVector) -> Complex64 {
        debug_assert_eq!(self.n, other.n);
        self.amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn scale(&mut self, k: f64) {
        for a in &mut self.amps {
            *a *= k;
        }
    }

    pub fn normalize(&mut self) {
        let norm = self.norm_sq().sqrt();
        self.scale(1.0 / norm);
    }

    /// `|amps[x]|^2` for every `x`.
    pub fn probabilities(&self) -> Vec<f64> {
        self.amps.iter().map(|a| a.norm_sqr()).collect()
    }

    /// `H^{(x)n}` applied in place.
    pub fn apply_hadamard_all(&mut self) {
        fwht_in_place(&mut self.amps);
        self.scale(1.0 / (self.amps.len() as f64).sqrt());
    }

    /// Applies the reflection about `axis` in place. `axis` must be normalized.
    pub fn apply_reflection(&mut self, axis: &StateVector, kind: Reflection) {
        let overlap = axis.inner(self);
        let (keep, along) = match kind {
            Reflection::About => (-1.0, 2.0 * overlap),
            Reflection::Across => (1.0, -2.0 * overlap),
        };
        for (s, a) in self.amps.iter_mut().zip(&axis.amps) {
            *s = *s * keep + a * along;
        }
    }

    /// `I - 2 P_S` applied in place.
    pub fn apply_symmetric_reflection(&mut self, classes: &WeightClasses) {
        let means = classes.class_means(self);
        for (s, &w) in self.amps.iter_mut().zip(&classes.weights) {
            *s -= 2.0 * means[w as usize];
        }
    }
}

/// Orientation of a reflection about a unit vector `|phi>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reflection {
    /// `2|phi><phi| - I`: fixes `|phi>`, negates its complement.
    About,
    /// `I - 2|phi><phi|`: negates `|phi>`, fixes its complement.
    Across,
}

/// `amps[x] = (-1)^f(x) / sqrt(N)`.
pub fn phase_state(tt: &TruthTable) -> StateVector {
    let inv = 1.0 / (tt.len() as f64).sqrt();
    StateVector {
        n: tt.arity(),
        amps: tt
            .bits()
            .iter()
            .map(|&b| Complex64::new(if b { -inv } else { inv }, 0.0))
            .collect(),
    }
}

pub fn hadamard_all(mut s: StateVector) -> StateVector {
    s.apply_hadamard_all();
    s
}

pub fn reflect_about_state(
    mut s: StateVector,
    axis: &StateVector,
    kind: Reflection,
) -> StateVector {
    s.apply_reflection(axis, kind);
    s
}

/// Hamming weight of every index, plus class sizes, for one arity.
#[derive(Debug, Clone)]
pub struct WeightClasses {
    n: usize,
    weights: Vec<u8>,
    sizes: Vec<usize>,
}

impl WeightClasses {
    pub fn new(n: usize) -> Self {
        let weights: Vec<u8> = (0..1usize << n).map(|x| x.count_ones() as u8).collect();
        let mut sizes = vec![0usize; n + 1];
        for &w in &weights {
            sizes[w as usize] += 1;
        }
        Self { n, weights, sizes }
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    pub fn weight(&self, x: usize) -> usize {
        self.weights[x] as usize
    }

    pub fn class_size(&self, m: usize) -> usize {
        self.sizes[m]
    }

    fn class_means(&self, s: &StateVector) -> Vec<Complex64> {
        assert_eq!(s.n, self.n, "weight table built for a different arity");
        let mut sums = vec![Complex64::new(0.0, 0.0); self.n + 1];
        for (a, &w) in s.amps.iter().zip(&self.weights) {
            sums[w as usize] += a;
        }
        sums.iter()
            .zip(&self.sizes)
            .map(|(sum, &c)| sum / c as f64)
            .collect()
    }

    /// Unnormalized `P_S s`: each amplitude replaced by its class mean.
    pub fn project(&self, s: &StateVector) -> StateVector {
        let means = self.class_means(s);
        StateVector {
            n: s.n,
            amps: self.weights.iter().map(|&w| means[w as usize]).collect(),
        }
    }

    /// `||P_S s||^2` without materialising the projection.
    pub fn projected_norm_sq(&self, s: &StateVector) -> f64 {
        self.class_means(s)
            .iter()
            .zip(&self.sizes)
            .map(|(m, &c)| m.norm_sqr() * c as f64)
            .sum()
    }
}

pub fn project_symmetric(s: &StateVector) -> StateVector {
    WeightClasses::new(s.n).project(s)
}

pub fn reflect_symmetric(mut s: StateVector) -> StateVector {
    s.apply_symmetric_reflection(&WeightClasses::new(s.n));
    s
}

/// A projective measurement `{P, I - P}`.
#[derive(Debug, Clone)]
pub enum ProjectorSpec {
    /// `P = |phi><phi|` for a normalized `phi`.
    State(StateVector),
    /// The symmetric subspace `P_S = sum_m |u_m><u_m|`.
    Symmetric(WeightClasses),
}

impl ProjectorSpec {
    pub fn symmetric(n: usize) -> Self {
        ProjectorSpec::Symmetric(WeightClasses::new(n))
    }

    /// `||P s||^2`.
    pub fn probability(&self, s: &StateVector) -> f64 {
        match self {
            ProjectorSpec::State(axis) => axis.inner(s).norm_sqr(),
            ProjectorSpec::Symmetric(classes) => classes.projected_norm_sq(s),
        }
    }

    /// Unnormalized `P s`.
    pub fn project(&self, s: &StateVector) -> StateVector {
        match self {
            ProjectorSpec::State(axis) => {
                let c = axis.inner(s);
                StateVector {
                    n: s.n,
                    amps: axis.amps.iter().map(|a| a * c).collect(),
                }
            }
            ProjectorSpec::Symmetric(classes) => classes.project(s),
        }
    }
}

fn draw_outcome<R: Rng + ?Sized>(p_one: f64, rng: &mut R) -> bool {
    rng.gen::<f64>() < p_one
}

/// Samples the outcome of `{P, I - P}` without computing the collapsed state.
/// Outcome `true` corresponds to `P`.
pub fn sample_projector<R: Rng + ?Sized>(s: &StateVector, p: &ProjectorSpec, rng: &mut R) -> bool {
    draw_outcome(p.probability(s).clamp(0.0, 1.0), rng)
}

/// Measures `{P, I - P}` and returns the outcome with the normalized
/// post-measurement state.
pub fn measure_projector<R: Rng + ?Sized>(
    s: &StateVector,
    p: &ProjectorSpec,
    rng: &mut R,
) -> Result<(bool, StateVector)> {
    let projected = p.project(s);
    let p_one = projected.norm_sq().clamp(0.0, 1.0);
    let outcome = draw_outcome(p_one, rng);
    let mut collapsed = if outcome {
        projected
    } else {
        let mut rest = s.clone();
        for (r, q) in rest.amps.iter_mut().zip(&projected.amps) {
            *r -= q;
        }
        rest
    };
    let branch = collapsed.norm_sq();
    if branch < DEGENERATE_BRANCH {
        return Err(Error::DegenerateCollapse(branch));
    }
    collapsed.normalize();
    Ok((outcome, collapsed))
}

/// Samples a computational-basis index with probability `|amps[x]|^2`.
pub fn sample_computational<R: Rng + ?Sized>(s: &StateVector, rng: &mut R) -> usize {
    let u: f64 = rng.gen::<f64>() * s.norm_sq();
    let mut acc = 0.0;
    let mut last_nonzero = 0;
    for (x, a) in s.amps.iter().enumerate() {
        let p = a.norm_sqr();
        if p > 0.0 {
            last_nonzero = x;
        }
        acc += p;
        if u < acc {
            return x;
        }
    }
    // Rounding left u just above the running total.
    last_nonzero
}
