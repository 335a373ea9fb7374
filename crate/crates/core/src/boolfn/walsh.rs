use std::ops::{Add, Sub};

use super::{Distance, DistanceReport, TruthTable};

/// Overlaps of `|v_f>` with every linear phase state, indexed by the
/// coefficient string `a`.
#[derive(Debug, Clone, PartialEq)]
pub struct WalshSpectrum {
    n: usize,
    /// Unnormalized integer transform `sum_x (-1)^(f(x) + a.x)`.
    raw: Vec<i64>,
}

impl WalshSpectrum {
    pub fn arity(&self) -> usize {
        self.n
    }

    /// Integer coefficients, `N` times the normalized ones.
    pub fn raw(&self) -> &[i64] {
        &self.raw
    }

    pub fn coeff(&self, a: usize) -> f64 {
        self.raw[a] as f64 / self.raw.len() as f64
    }

    pub fn coeffs(&self) -> Vec<f64> {
        let scale = 1.0 / self.raw.len() as f64;
        self.raw.iter().map(|&w| w as f64 * scale).collect()
    }

    /// Index of the largest coefficient, smallest index on ties.
    pub fn argmax(&self) -> usize {
        let mut best = 0;
        for (a, &w) in self.raw.iter().enumerate() {
            if w > self.raw[best] {
                best = a;
            }
        }
        best
    }
}

/// In-place unnormalized fast Walsh–Hadamard transform.
///
/// `data.len()` must be a power of two. Applying it twice multiplies the
/// input by `data.len()`.
pub fn fwht_in_place<T>(data: &mut [T])
where
    T: Copy + Add<Output = T> + Sub<Output = T>,
{
    let len = data.len();
    assert!(
        len.is_power_of_two(),
        "FWHT length {len} is not a power of two"
    );
    let mut half = 1;
    while half < len {
        for block in data.chunks_exact_mut(2 * half) {
            let (lo, hi) = block.split_at_mut(half);
            for (u, v) in lo.iter_mut().zip(hi.iter_mut()) {
                let (a, b) = (*u, *v);
                *u = a + b;
                *v = a - b;
            }
        }
        half *= 2;
    }
}

pub fn walsh_spectrum(tt: &TruthTable) -> WalshSpectrum {
    let mut raw: Vec<i64> = (0..tt.len()).map(|x| tt.sign(x)).collect();
    fwht_in_place(&mut raw);
    WalshSpectrum { n: tt.arity(), raw }
}

/// Exact distance to the nearest linear function.
///
/// Disagreements with `a.x` equal `(N - W_a) / 2` for the integer transform
/// `W_a`, so the nearest linear function maximises `W_a`.
pub fn distance_to_linear(tt: &TruthTable) -> DistanceReport {
    let spectrum = walsh_spectrum(tt);
    let best = spectrum.argmax();
    let total = tt.len() as i64;
    let disagreements = (total - spectrum.raw[best]) / 2;
    DistanceReport {
        distance: Distance::new(disagreements as u64, total as u64),
        witness: TruthTable::linear(tt.arity(), best).expect("arity already validated"),
    }
}
