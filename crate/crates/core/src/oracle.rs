//! Black-box access to a truth table with query accounting.

use crate::boolfn::TruthTable;
use crate::statevec::{phase_state, StateVector};

/// A truth table behind a monotone query counter.
///
/// Costs: one call per point evaluation, one per `|v_f>` preparation, two per
/// reflection about `|v_f>` (unprepare, phase flip on `|0...0>`, prepare).
#[derive(Debug)]
pub struct OracleHandle<'a> {
    table: &'a TruthTable,
    calls: u64,
}

impl<'a> OracleHandle<'a> {
    pub fn new(table: &'a TruthTable) -> Self {
        Self { table, calls: 0 }
    }

    pub fn arity(&self) -> usize {
        self.table.arity()
    }

    pub fn calls(&self) -> u64 {
        self.calls
    }

    /// Evaluates `f(x)`.
    pub fn query(&mut self, x: usize) -> bool {
        self.calls += 1;
        self.table.eval(x)
    }

    /// Prepares `|v_f>` from the uniform superposition.
    pub fn phase_state(&mut self) -> StateVector {
        self.calls += 1;
        phase_state(self.table)
    }

    /// Applies `I - 2|v_f><v_f|` in place.
    pub fn reflect_across_phase_state(&mut self, s: &mut StateVector) {
        self.calls += 2;
        let table = self.table;
        let inv = 1.0 / (table.len() as f64).sqrt();
        let overlap: num_complex::Complex64 = s
            .amps()
            .iter()
            .enumerate()
            .map(|(x, a)| a * (table.sign(x) as f64 * inv))
            .sum();
        let k = 2.0 * overlap * inv;
        for (x, a) in s.amps_mut().iter_mut().enumerate() {
            *a -= k * table.sign(x) as f64;
        }
    }
}
