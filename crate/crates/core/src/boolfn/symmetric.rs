use super::{Distance, DistanceReport, TruthTable};

/// `C(n, k)`; exact for every arity this crate accepts.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) as u64 / (i + 1) as u64;
    }
    acc
}

/// Per-weight-class counts of inputs where the function is 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightClassProfile {
    n: usize,
    ones: Vec<u64>,
    sizes: Vec<u64>,
}

impl WeightClassProfile {
    pub fn arity(&self) -> usize {
        self.n
    }

    /// `l_m` for `m = 0..=n`.
    pub fn ones(&self) -> &[u64] {
        &self.ones
    }

    /// `C(n, m)` for `m = 0..=n`.
    pub fn class_sizes(&self) -> &[u64] {
        &self.sizes
    }

    /// `C(n, m) - 2 l_m`, which is `sqrt(C(n,m) N) <u_m|v_f>`.
    pub fn imbalance(&self, m: usize) -> i64 {
        self.sizes[m] as i64 - 2 * self.ones[m] as i64
    }

    /// Value the nearest symmetric function takes on weight `m`: 1 only when
    /// strictly more than half the class maps to 1.
    pub fn majority(&self, m: usize) -> bool {
        2 * self.ones[m] > self.sizes[m]
    }
}

pub fn weight_profile(tt: &TruthTable) -> WeightClassProfile {
    let n = tt.arity();
    let mut ones = vec![0u64; n + 1];
    for (x, &b) in tt.bits().iter().enumerate() {
        if b {
            ones[x.count_ones() as usize] += 1;
        }
    }
    WeightClassProfile {
        n,
        ones,
        sizes: (0..=n).map(|m| binomial(n, m)).collect(),
    }
}

/// Exact distance to the nearest symmetric function.
///
/// Within each weight class the best constant is the class majority; a class
/// split exactly in half resolves to 0.
pub fn distance_to_symmetric(tt: &TruthTable) -> DistanceReport {
    let profile = weight_profile(tt);
    let disagreements: u64 = profile
        .ones
        .iter()
        .zip(&profile.sizes)
        .map(|(&l, &c)| l.min(c - l))
        .sum();
    let values: Vec<bool> = (0..=profile.n).map(|m| profile.majority(m)).collect();
    DistanceReport {
        distance: Distance::new(disagreements, tt.len() as u64),
        witness: TruthTable::symmetric(&values).expect("arity already validated"),
    }
}

/// `||P_S v_f||^2 = (1/N) sum_m (C(n,m) - 2 l_m)^2 / C(n,m)`, evaluated from
/// the weight profile alone.
pub fn symmetric_norm_sq(profile: &WeightClassProfile) -> f64 {
    let total: u64 = profile.sizes.iter().sum();
    (0..=profile.n)
        .map(|m| {
            let d = profile.imbalance(m) as f64;
            d * d / profile.sizes[m] as f64
        })
        .sum::<f64>()
        / total as f64
}
