//! Exhaustive Boolean functions and their exact analysis.
//!
//! Inputs are indexed big-endian: the string `x1 x2 ... xn` sits at index
//! `sum_j x_j * 2^(n-j)`, so `x1` is the most significant bit. The same
//! convention is used by the text file format in [`io`].

mod distance;
pub mod io;
mod symmetric;
mod walsh;

use std::fmt;

use rand::seq::index;
use rand::Rng;

use crate::{Error, Result, DEFAULT_N_MAX, HARD_N_MAX};

pub use distance::{Distance, DistanceReport};
pub use symmetric::{
    binomial, distance_to_symmetric, symmetric_norm_sq, weight_profile, WeightClassProfile,
};
pub use walsh::{distance_to_linear, fwht_in_place, walsh_spectrum, WalshSpectrum};

/// Full truth table of a Boolean function on `n` input bits.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruthTable {
    n: usize,
    bits: Vec<bool>,
}

impl TruthTable {
    /// Builds a table under the default arity limit.
    pub fn from_bits(n: usize, bits: Vec<bool>) -> Result<Self> {
        Self::from_bits_with_limit(n, bits, DEFAULT_N_MAX)
    }

    pub fn from_bits_with_limit(n: usize, bits: Vec<bool>, n_max: usize) -> Result<Self> {
        check_arity(n, n_max)?;
        let expected = 1usize << n;
        if bits.len() != expected {
            return Err(Error::LengthMismatch {
                n,
                expected,
                actual: bits.len(),
            });
        }
        Ok(Self { n, bits })
    }

    /// Convenience constructor from `0`/`1` integers.
    pub fn from_u8s(n: usize, bits: &[u8]) -> Result<Self> {
        Self::from_bits(n, bits.iter().map(|&b| b != 0).collect())
    }

    /// Evaluates `f` pointwise on every input.
    pub fn from_fn(n: usize, f: impl Fn(usize) -> bool) -> Result<Self> {
        check_arity(n, HARD_N_MAX)?;
        Ok(Self {
            n,
            bits: (0..1usize << n).map(f).collect(),
        })
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::from_fn(n, |_| false)
    }

    /// `f(x) = a . x mod 2`.
    pub fn linear(n: usize, a: usize) -> Result<Self> {
        check_arity(n, HARD_N_MAX)?;
        if a >> n != 0 {
            return Err(Error::Config(format!(
                "coefficient index {a} does not fit in {n} bits"
            )));
        }
        Self::from_fn(n, |x| (a & x).count_ones() & 1 == 1)
    }

    /// `f(x) = values[weight(x)]`; the arity is `values.len() - 1`.
    pub fn symmetric(values: &[bool]) -> Result<Self> {
        if values.len() < 2 {
            return Err(Error::ArityOutOfRange {
                n: values.len().saturating_sub(1),
                max: HARD_N_MAX,
            });
        }
        let n = values.len() - 1;
        Self::from_fn(n, |x| values[x.count_ones() as usize])
    }

    /// Uniformly random table.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Self> {
        check_arity(n, HARD_N_MAX)?;
        Ok(Self {
            n,
            bits: (0..1usize << n).map(|_| rng.gen()).collect(),
        })
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    /// Number of inputs, `2^n`.
    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    #[inline]
    pub fn eval(&self, x: usize) -> bool {
        self.bits[x]
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// `(-1)^f(x)` as an integer.
    #[inline]
    pub fn sign(&self, x: usize) -> i64 {
        if self.bits[x] {
            -1
        } else {
            1
        }
    }

    /// Number of inputs on which `self` and `other` differ.
    pub fn disagreements(&self, other: &TruthTable) -> Result<u64> {
        if self.n != other.n {
            return Err(Error::ArityMismatch {
                expected: self.n,
                actual: other.n,
            });
        }
        Ok(self
            .bits
            .iter()
            .zip(&other.bits)
            .filter(|(a, b)| a != b)
            .count() as u64)
    }

    /// Exact distance to `other` as a fraction of the input space.
    pub fn distance_to(&self, other: &TruthTable) -> Result<Distance> {
        Ok(Distance::new(self.disagreements(other)?, self.len() as u64))
    }

    /// Returns a copy with exactly `k` distinct outputs flipped, chosen
    /// uniformly at random.
    ///
    /// Flips may move the function closer to some other witness, so callers
    /// should re-measure the true distance afterwards.
    pub fn perturb<R: Rng + ?Sized>(&self, k: usize, rng: &mut R) -> Result<TruthTable> {
        if k > self.len() {
            return Err(Error::FlipCountOutOfRange {
                k,
                size: self.len(),
            });
        }
        let mut out = self.clone();
        for i in index::sample(rng, self.len(), k) {
            out.bits[i] = !out.bits[i];
        }
        Ok(out)
    }

    /// Renders the table as the `0`/`1` string used by the file format.
    pub fn to_bit_string(&self) -> String {
        self.bits
            .iter()
            .map(|&b| if b { '1' } else { '0' })
            .collect()
    }
}

impl fmt::Debug for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n <= 6 {
            write!(f, "TruthTable(n={}, {})", self.n, self.to_bit_string())
        } else {
            write!(f, "TruthTable(n={}, {} entries)", self.n, self.len())
        }
    }
}

pub(crate) fn check_arity(n: usize, n_max: usize) -> Result<()> {
    let max = n_max.min(HARD_N_MAX);
    if n == 0 || n > max {
        return Err(Error::ArityOutOfRange { n, max });
    }
    Ok(())
}

/// Formats `x` as an `n`-character bit string, `x1` first.
pub fn format_bits(x: usize, n: usize) -> String {
    (0..n)
        .map(|j| {
            if (x >> (n - 1 - j)) & 1 == 1 {
                '1'
            } else {
                '0'
            }
        })
        .collect()
}

/// Parses an `x1 x2 ... xn` bit string into its big-endian index.
pub fn parse_bits(s: &str) -> Result<(usize, usize)> {
    let n = s.len();
    if n == 0 || n > HARD_N_MAX {
        return Err(Error::Config(format!(
            "bit string {s:?} has unsupported length"
        )));
    }
    let mut x = 0usize;
    for c in s.chars() {
        x <<= 1;
        match c {
            '0' => {}
            '1' => x |= 1,
            other => {
                return Err(Error::Config(format!(
                    "invalid character {other:?} in bit string {s:?}"
                )))
            }
        }
    }
    Ok((x, n))
}
