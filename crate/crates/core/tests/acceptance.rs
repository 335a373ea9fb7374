//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::f64::consts::PI;
use std::time::Instant;

use num_complex::Complex64;
use qprop::boolfn::{distance_to_linear, distance_to_symmetric, symmetric_norm_sq, weight_profile};
use qprop::classical::{blr_instance, blr_test, classical_symmetry_test, Witness};
use qprop::harness::{run, stream_rng, ExperimentConfig, FunctionSource, Mode};
use qprop::quantum::{
    amplify_linearity, amplify_symmetry, apply_linearity_iterate, apply_symmetry_iterate,
    bernstein_vazirani, linearity_schedule, plane_matrix, predicted_rejection,
    quantum_linearity_test, quantum_symmetry_test, symmetry_schedule, Convention, Decision,
    TestSchedule,
};
use qprop::statevec::{hadamard_all, phase_state, WeightClasses};
use qprop::{OracleHandle, ProjectorSpec, StateVector, TruthTable};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        // Written as if/else so NaN fails the check.
        if $cond {
        } else {
            return Err(format!($($msg)+));
        }
    };
}

// Independent oracles: brute force straight from the definitions.

fn parity(x: usize) -> bool {
    x.count_ones() % 2 == 1
}

fn brute_linear_distance(f: &TruthTable) -> u64 {
    (0..f.len())
        .map(|a| (0..f.len()).filter(|&x| f.eval(x) != parity(a & x)).count() as u64)
        .min()
        .unwrap()
}

fn brute_symmetric_distance(f: &TruthTable) -> u64 {
    let n = f.arity();
    let mut ones = vec![0u64; n + 1];
    let mut sizes = vec![0u64; n + 1];
    for x in 0..f.len() {
        let w = x.count_ones() as usize;
        sizes[w] += 1;
        ones[w] += f.eval(x) as u64;
    }
    ones.iter().zip(&sizes).map(|(&l, &c)| l.min(c - l)).sum()
}

// P_S v_f by averaging amplitudes over each weight class.
fn brute_symmetric_projection(v: &StateVector) -> StateVector {
    let n = v.qubits();
    let mut sums = vec![Complex64::new(0.0, 0.0); n + 1];
    let mut sizes = vec![0.0; n + 1];
    for (x, amp) in v.amps().iter().enumerate() {
        let w = x.count_ones() as usize;
        sums[w] += amp;
        sizes[w] += 1.0;
    }
    let amps = (0..v.len())
        .map(|x| {
            let w = x.count_ones() as usize;
            sums[w] / sizes[w]
        })
        .collect();
    StateVector::from_amplitudes(n, amps).unwrap()
}

fn combine(a: &StateVector, ca: f64, b: &StateVector, cb: f64) -> StateVector {
    let amps = a
        .amps()
        .iter()
        .zip(b.amps())
        .map(|(x, y)| x * ca + y * cb)
        .collect();
    StateVector::from_amplitudes(a.qubits(), amps).unwrap()
}

fn distance_between(a: &StateVector, b: &StateVector) -> f64 {
    a.amps()
        .iter()
        .zip(b.amps())
        .map(|(x, y)| (x - y).norm_sqr())
        .sum::<f64>()
        .sqrt()
}

fn restricted_matrix(
    basis: &[StateVector; 2],
    apply: &mut dyn FnMut(&mut StateVector),
) -> ([[f64; 2]; 2], f64) {
    let mut m = [[0.0; 2]; 2];
    let mut leak: f64 = 0.0;
    for j in 0..2 {
        let mut image = basis[j].clone();
        apply(&mut image);
        let mut in_plane = StateVector::zeros(image.qubits());
        for i in 0..2 {
            let entry = basis[i].inner(&image);
            leak = leak.max(entry.im.abs());
            m[i][j] = entry.re;
            in_plane = combine(&in_plane, 1.0, &basis[i], entry.re);
        }
        leak = leak.max(distance_between(&image, &in_plane));
    }
    (m, leak)
}

fn max_entry_gap(a: [[f64; 2]; 2], b: [[f64; 2]; 2]) -> f64 {
    (0..4)
        .map(|k| (a[k / 2][k % 2] - b[k / 2][k % 2]).abs())
        .fold(0.0, f64::max)
}

fn rotation(c: f64, s: f64) -> [[f64; 2]; 2] {
    [[c, s], [-s, c]]
}

fn transpose(m: [[f64; 2]; 2]) -> [[f64; 2]; 2] {
    [[m[0][0], m[1][0]], [m[0][1], m[1][1]]]
}

// Exact acceptance of the linearity tester from the simulator alone: BV
// distribution times simulated survival of each candidate's rounds.
fn simulated_linearity_acceptance(f: &TruthTable, s: &TestSchedule) -> f64 {
    let bv = hadamard_all(phase_state(f)).probabilities();
    bv.par_iter()
        .enumerate()
        .filter(|(_, p)| **p > 1e-15)
        .map(|(b, &p)| {
            let axis = phase_state(&TruthTable::from_fn(f.arity(), |x| parity(b & x)).unwrap());
            let state = amplify_linearity(&mut OracleHandle::new(f), &axis, s.grover_steps);
            let survive = ProjectorSpec::State(axis).probability(&state);
            p.powi(s.m_first_stage as i32) * survive.powi(s.rounds as i32)
        })
        .sum()
}

fn simulated_symmetry_acceptance(f: &TruthTable, s: &TestSchedule) -> f64 {
    let classes = WeightClasses::new(f.arity());
    let mu_sq = brute_symmetric_projection(&phase_state(f)).norm_sq();
    let state = amplify_symmetry(&mut OracleHandle::new(f), &classes, s.grover_steps);
    let survive = brute_symmetric_projection(&state).norm_sq();
    mu_sq.powi(s.m_first_stage as i32) * survive.powi(s.rounds as i32)
}

fn generated(spec: &str, seed: u64) -> TruthTable {
    FunctionSource::Generator(spec.parse().unwrap())
        .load(&mut stream_rng(seed, 0), 20)
        .unwrap()
}

fn bits(values: impl Iterator<Item = bool>) -> String {
    values.map(|v| if v { '1' } else { '0' }).collect()
}

// 1
fn bv_exactness() -> Check {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut count = 0;
    let mut worst: f64 = 0.0;
    for n in 2..=8 {
        for a in 0..1usize << n {
            let f = TruthTable::linear(n, a).unwrap();
            ensure!(
                (0..f.len()).all(|x| f.eval(x) == parity(a & x)),
                "linear table wrong for a = {a}"
            );
            let p = hadamard_all(phase_state(&f)).probabilities();
            let off: f64 = p
                .iter()
                .enumerate()
                .filter(|(b, _)| *b != a)
                .map(|(_, q)| q)
                .sum();
            worst = worst.max((p[a] - 1.0).abs()).max(off);
            let mut o = OracleHandle::new(&f);
            ensure!(
                bernstein_vazirani(&mut o, &mut rng) == a,
                "BV sample wrong at n = {n}, a = {a}"
            );
            ensure!(o.calls() == 1, "BV used {} calls", o.calls());
            count += 1;
        }
    }
    let secs = start.elapsed().as_secs_f64();
    ensure!(worst <= 1e-12, "mass off the true coefficient {worst:e}");
    ensure!(secs < 10.0, "took {secs:.2}s");
    Ok(format!(
        "{count} linear functions, max mass error {worst:.1e}, {secs:.2}s"
    ))
}

// 2
fn overlap_identity() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut worst: f64 = 0.0;
    for _ in 0..10_000 {
        let f = TruthTable::random(8, &mut rng).unwrap();
        let g = TruthTable::random(8, &mut rng).unwrap();
        let d = f
            .bits()
            .iter()
            .zip(g.bits())
            .filter(|(x, y)| x != y)
            .count() as f64
            / 256.0;
        let inner = phase_state(&f).inner(&phase_state(&g));
        worst = worst
            .max((inner.re - (1.0 - 2.0 * d)).abs())
            .max(inner.im.abs());
    }
    ensure!(worst <= 1e-12, "max deviation {worst:e}");
    Ok(format!("10000 pairs at n = 8, max deviation {worst:.1e}"))
}

// 3
fn matrix_equivalence() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let n = 6;
    let classes = WeightClasses::new(n);
    let (mut worst_m, mut worst_g, mut worst_gt, mut worst_leak) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for _ in 0..100 {
        let f = TruthTable::random(n, &mut rng).unwrap();
        let vf = phase_state(&f);

        let nearest = distance_to_linear(&f);
        let a = nearest.overlap();
        ensure!(
            nearest.distance.disagreements() == brute_linear_distance(&f),
            "linear distance disagrees with brute force"
        );
        let vg = phase_state(&nearest.witness);
        let mut perp = combine(&vf, 1.0, &vg, -a);
        perp.normalize();
        let mut o = OracleHandle::new(&f);
        let (m, leak) = restricted_matrix(&[vg.clone(), perp], &mut |s| {
            apply_linearity_iterate(&mut o, &vg, s)
        });
        let expected = rotation(1.0 - 2.0 * a * a, 2.0 * a * (1.0 - a * a).sqrt());
        ensure!(
            max_entry_gap(expected, plane_matrix(a, Convention::Linearity).unwrap()) < 1e-12,
            "plane_matrix(M)"
        );
        worst_m = worst_m.max(max_entry_gap(m, expected));
        worst_leak = worst_leak.max(leak);

        let mu_sq = symmetric_norm_sq(&weight_profile(&f));
        let mu = mu_sq.sqrt();
        let mut u1 = brute_symmetric_projection(&vf);
        ensure!(
            (u1.norm_sq() - mu_sq).abs() < 1e-12,
            "mu^2 disagrees with projection"
        );
        let mut u2 = combine(&vf, 1.0, &u1, -1.0);
        u1.normalize();
        u2.normalize();
        let minus_u2 = combine(&u2, -1.0, &u2, 0.0);
        let expected = rotation(2.0 * mu_sq - 1.0, 2.0 * mu * (1.0 - mu_sq).sqrt());
        ensure!(
            max_entry_gap(expected, plane_matrix(mu, Convention::Symmetry).unwrap()) < 1e-12,
            "plane_matrix(G)"
        );
        let mut o = OracleHandle::new(&f);
        let mut apply_g = |s: &mut StateVector| apply_symmetry_iterate(&mut o, &classes, s);
        let (g, leak) = restricted_matrix(&[u1.clone(), minus_u2], &mut apply_g);
        worst_g = worst_g.max(max_entry_gap(g, expected));
        worst_leak = worst_leak.max(leak);
        let (g_plain, _) = restricted_matrix(&[u1, u2], &mut apply_g);
        worst_gt = worst_gt.max(max_entry_gap(g_plain, transpose(expected)));
    }
    ensure!(worst_m <= 1e-10, "M entries off by {worst_m:e}");
    ensure!(worst_g <= 1e-10, "G entries off by {worst_g:e}");
    ensure!(
        worst_gt <= 1e-10,
        "G in {{u1, u2}} is not the transpose: {worst_gt:e}"
    );
    ensure!(worst_leak <= 1e-10, "plane not invariant: {worst_leak:e}");
    Ok(format!(
        "100 functions at n = 6: M {worst_m:.1e}, G (basis u1, -u2) {worst_g:.1e}, G^T (basis u1, u2) {worst_gt:.1e}, leakage {worst_leak:.1e}"
    ))
}

// 4
fn closed_form_vs_simulation() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let n = 6;
    let classes = WeightClasses::new(n);
    let (mut worst_lin, mut worst_sym) = (0.0f64, 0.0f64);
    for i in 0..100 {
        let f = match i % 3 {
            0 => TruthTable::random(n, &mut rng).unwrap(),
            1 => {
                let a = rng.gen_range(0..1 << n);
                let k = rng.gen_range(1..16);
                TruthTable::linear(n, a)
                    .unwrap()
                    .perturb(k, &mut rng)
                    .unwrap()
            }
            _ => {
                let values: Vec<bool> = (0..=n).map(|_| rng.gen()).collect();
                let k = rng.gen_range(1..16);
                TruthTable::symmetric(&values)
                    .unwrap()
                    .perturb(k, &mut rng)
                    .unwrap()
            }
        };
        // A random BV outcome as the candidate, not only the nearest one.
        let g = rng.gen_range(0..1 << n);
        let vg = phase_state(&TruthTable::linear(n, g).unwrap());
        let a = vg.inner(&phase_state(&f)).re.abs();
        let mu = brute_symmetric_projection(&phase_state(&f))
            .norm_sq()
            .sqrt();
        for steps in 0..=10 {
            let s = amplify_linearity(&mut OracleHandle::new(&f), &vg, steps);
            let measured = 1.0 - ProjectorSpec::State(vg.clone()).probability(&s);
            let closed = predicted_rejection(a, steps, Convention::Linearity).unwrap();
            worst_lin = worst_lin.max((measured - closed).abs());

            let s = amplify_symmetry(&mut OracleHandle::new(&f), &classes, steps);
            let measured = 1.0 - ProjectorSpec::symmetric(n).probability(&s);
            let closed = predicted_rejection(mu, steps, Convention::Symmetry).unwrap();
            worst_sym = worst_sym.max((measured - closed).abs());
        }
    }
    ensure!(worst_lin <= 1e-9, "linearity off by {worst_lin:e}");
    ensure!(worst_sym <= 1e-9, "symmetry off by {worst_sym:e}");
    Ok(format!(
        "100 instances, steps 0..=10: linearity {worst_lin:.1e}, symmetry {worst_sym:.1e}"
    ))
}

// 5
fn completeness() -> Check {
    let mut linear = Vec::new();
    let mut symmetric = Vec::new();
    for n in 1..=6usize {
        for a in 0..1usize << n {
            linear.push((a, TruthTable::linear(n, a).unwrap()));
        }
        for code in 0..1u32 << (n + 1) {
            let values: Vec<bool> = (0..=n).map(|w| (code >> w) & 1 == 1).collect();
            symmetric.push(TruthTable::symmetric(&values).unwrap());
        }
    }
    let epsilons = [0.1, 0.05, 0.01];
    let lin_failures: usize = linear
        .par_iter()
        .map(|(a, f)| {
            let mut bad = 0;
            for &eps in &epsilons {
                for seed in 0..100 {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    let mut o = OracleHandle::new(f);
                    let v = quantum_linearity_test(&mut o, eps, &mut rng).unwrap();
                    let ok = v.decision == Decision::Linear(*a)
                        && v.oracle_calls == v.schedule.predicted_total_calls
                        && o.calls() == v.oracle_calls;
                    bad += !ok as usize;
                }
            }
            bad
        })
        .sum();
    let sym_failures: usize = symmetric
        .par_iter()
        .map(|f| {
            let mut bad = 0;
            for &eps in &epsilons {
                for seed in 0..100 {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    let v =
                        quantum_symmetry_test(&mut OracleHandle::new(f), eps, &mut rng).unwrap();
                    bad += (v.decision != Decision::Symmetric) as usize;
                }
            }
            bad
        })
        .sum();
    ensure!(lin_failures == 0, "{lin_failures} linearity failures");
    ensure!(sym_failures == 0, "{sym_failures} symmetry failures");
    Ok(format!(
        "{} linear and {} symmetric functions (n <= 6) x 3 eps x 100 seeds, 0 failures",
        linear.len(),
        symmetric.len()
    ))
}

struct SoundnessRow {
    spec: String,
    distance: f64,
    observed: f64,
    exact: f64,
}

fn soundness(mode: Mode, instances: &dyn Fn(f64) -> Vec<String>) -> Check {
    const TRIALS: u64 = 2000;
    let n = 10;
    let size = (1u64 << n) as f64;
    let mut rows = Vec::new();
    for eps in [1.0 / 32.0, 1.0 / 16.0] {
        for spec in instances(eps) {
            let mut config = ExperimentConfig::new(
                mode,
                FunctionSource::Generator(spec.parse().unwrap()),
                Some(eps),
            );
            config.trials = TRIALS;
            config.seed = 6;
            let report = run(&config).map_err(|e| e.to_string())?;
            let f = generated(&spec, config.seed);
            ensure!(f.arity() == n, "{spec} has arity {}", f.arity());
            let (distance, exact_accept) = match mode {
                Mode::Lin => (
                    brute_linear_distance(&f) as f64 / size,
                    simulated_linearity_acceptance(&f, &linearity_schedule(eps).unwrap()),
                ),
                _ => (
                    brute_symmetric_distance(&f) as f64 / size,
                    simulated_symmetry_acceptance(&f, &symmetry_schedule(eps).unwrap()),
                ),
            };
            ensure!(
                distance >= eps,
                "{spec} is only {distance}-far, needs {eps}"
            );
            let reported = match mode {
                Mode::Lin => report.distance.linear.epsilon,
                _ => report.distance.symmetric.epsilon,
            };
            ensure!(
                reported == distance,
                "report distance {reported} vs brute force {distance}"
            );
            rows.push((
                eps,
                SoundnessRow {
                    spec,
                    distance,
                    observed: 1.0 - report.acceptance_rate,
                    exact: 1.0 - exact_accept,
                },
            ));
        }
    }
    let sigma = (2.0 / 9.0 / TRIALS as f64).sqrt();
    let mut lines = Vec::new();
    let mut failures = Vec::new();
    for (eps, r) in &rows {
        let z = (r.observed - 2.0 / 3.0) / sigma;
        lines.push(format!(
            "      eps = 1/{:<2}  {:46} dist {:.4}  rejection {:.4} (exact {:.4}, z {:+.1})",
            (1.0 / eps).round(),
            r.spec,
            r.distance,
            r.observed,
            r.exact,
            z
        ));
        if r.observed < 0.66 || r.exact <= 2.0 / 3.0 || z < -3.0 {
            failures.push(r.spec.clone());
        }
    }
    let min = rows.iter().map(|(_, r)| r.observed).fold(1.0, f64::min);
    let table = lines.join("\n");
    ensure!(
        failures.is_empty(),
        "below threshold: {failures:?}\n{table}"
    );
    Ok(format!(
        "{} instance/eps pairs, {TRIALS} trials each, min rejection {min:.4}\n{table}",
        rows.len()
    ))
}

// 6
fn linearity_soundness() -> Check {
    soundness(Mode::Lin, &|eps| {
        let k = (eps * 1024.0) as usize;
        vec![
            format!("perturbed:linear:1011001110,flips={k}"),
            format!("perturbed:linear:0000000000,flips={k}"),
            format!("perturbed:linear:1111111111,flips={}", 2 * k),
            format!("perturbed:linear:0100000001,flips={}", 4 * k),
            "symmetric:00000111111".to_string(),
            "random:10".to_string(),
        ]
    })
}

// 7
fn symmetry_soundness() -> Check {
    soundness(Mode::Sym, &|eps| {
        let k = (eps * 1024.0) as usize;
        let majority = bits((0..=10).map(|w| w > 5));
        let weight_parity = bits((0..=10).map(|w| w % 2 == 1));
        let exact_half = bits((0..=10).map(|w| w == 5));
        vec![
            format!("perturbed:symmetric:{majority},flips={k}"),
            format!("perturbed:symmetric:{weight_parity},flips={}", k + k / 2),
            format!("perturbed:symmetric:{exact_half},flips={}", 2 * k),
            "linear:1000000000".to_string(),
            "linear:1111100000".to_string(),
            "random:10".to_string(),
        ]
    })
}

// 8
fn classical_baselines() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut runs = 0;
    for n in 1..=8 {
        for a in 0..1usize << n {
            let f = TruthTable::linear(n, a).unwrap();
            for _ in 0..3 {
                let v = blr_test(&mut OracleHandle::new(&f), 0.05, &mut rng).unwrap();
                ensure!(
                    v.accepted && v.failing_witness.is_none(),
                    "BLR rejected linear a = {a}, n = {n}"
                );
                runs += 1;
            }
        }
    }

    let and2 = TruthTable::from_u8s(2, &[0, 0, 0, 1]).unwrap();
    let satisfied = (0..4)
        .flat_map(|x| (0..4).map(move |y| (x, y)))
        .filter(|&(x, y)| and2.eval(x ^ y) == (and2.eval(x) ^ and2.eval(y)))
        .count();
    ensure!(
        satisfied * 8 == 16 * 5,
        "AND2 satisfies {satisfied}/16 pairs"
    );
    let draws = 100_000;
    let mut o = OracleHandle::new(&and2);
    let passed = (0..draws)
        .filter(|_| blr_instance(&mut o, &mut rng).is_none())
        .count() as f64;
    let sigma = (5.0 / 8.0 * 3.0 / 8.0 / draws as f64).sqrt();
    let rate = passed / draws as f64;
    ensure!(
        (rate - 0.625).abs() < 3.0 * sigma,
        "empirical AND2 rate {rate}"
    );

    let x1 = TruthTable::linear(2, 0b10).unwrap();
    for seed in 0..1000 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v = classical_symmetry_test(&mut OracleHandle::new(&x1), 0.05, &mut rng).unwrap();
        let witness_ok =
            matches!(v.failing_witness, Some(Witness::SameWeight { x, y }) if x ^ y == 0b11);
        ensure!(
            !v.accepted && v.rounds_run == 1 && v.oracle_calls == 2 && witness_ok,
            "x1 not rejected on round 1: {v:?}"
        );
    }
    Ok(format!(
        "BLR accepted {runs}/{runs} linear runs; AND2 exhaustive {satisfied}/16 = 5/8, sampled {rate:.4}; x1 rejected on round 1 in 1000/1000 seeds"
    ))
}

// 9
fn symmetric_subspace_bound() -> Check {
    let start = Instant::now();
    let classes = WeightClasses::new(4);
    let violations: Vec<u32> = (0..65536u32)
        .into_par_iter()
        .filter(|&code| {
            let f = TruthTable::from_fn(4, |x| (code >> x) & 1 == 1).unwrap();
            let eps = distance_to_symmetric(&f).epsilon();
            let mu_sq = classes.projected_norm_sq(&phase_state(&f));
            let brute = brute_symmetric_distance(&f) as f64 / 16.0;
            eps != brute || mu_sq >= 1.0 - 2.0 * eps + 1e-12
        })
        .collect();
    let secs = start.elapsed().as_secs_f64();
    ensure!(
        violations.is_empty(),
        "{} violations, first {:?}",
        violations.len(),
        violations.first()
    );
    ensure!(secs < 60.0, "took {secs:.2}s");
    Ok(format!(
        "all 65536 functions at n = 4 satisfy the bound, {secs:.2}s"
    ))
}

// 10
fn query_scaling() -> Check {
    let grid: [f64; 4] = [1e-2, 1e-3, 1e-4, 1e-5];
    let ln3 = 3f64.ln();
    let predicted = |eps: f64| -> u64 {
        let m = (ln3 / (2.0 * eps.powf(2.0 / 3.0))).ceil() as u64;
        let third = eps.powf(1.0 / 3.0);
        let steps = ((PI / (2f64.sqrt() * third) - 1.0) / 2.0).round().max(1.0) as u64;
        let rounds = (8.0 * ln3 / (PI * PI * third)).ceil() as u64;
        m + rounds * (1 + 2 * steps)
    };

    let mut config = ExperimentConfig::new(
        Mode::Campaign,
        FunctionSource::Generator("linear:101101".parse().unwrap()),
        None,
    );
    config.trials = 200;
    config.seed = 10;
    let report = run(&config).map_err(|e| e.to_string())?;
    let summary = report.campaign.as_ref().unwrap();
    let xs: Vec<f64> = grid.iter().map(|e| e.ln()).collect();
    let ys: Vec<f64> = grid.iter().map(|&e| (predicted(e) as f64).ln()).collect();
    let (mx, my) = (xs.iter().sum::<f64>() / 4.0, ys.iter().sum::<f64>() / 4.0);
    let oracle_slope = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| (x - mx) * (y - my))
        .sum::<f64>()
        / xs.iter().map(|x| (x - mx).powi(2)).sum::<f64>();
    ensure!(
        (summary.slope - oracle_slope).abs() < 1e-12,
        "slope {} vs oracle {oracle_slope}",
        summary.slope
    );
    ensure!(
        (-0.75..=-0.6).contains(&summary.slope),
        "slope {} outside band",
        summary.slope
    );
    for v in &report.verdicts {
        ensure!(v.accepted, "linear instance rejected in trial {}", v.trial);
        ensure!(
            v.calls == predicted(v.eps.unwrap()),
            "trial {} used {} calls",
            v.trial,
            v.calls
        );
    }

    // Rejected trials stop early; replaying a trial's stream reproduces the
    // reported count on a fresh oracle handle.
    let mut config = ExperimentConfig::new(
        Mode::Lin,
        FunctionSource::Generator("perturbed:linear:101101,flips=3".parse().unwrap()),
        Some(1e-3),
    );
    config.trials = 300;
    let report = run(&config).map_err(|e| e.to_string())?;
    let f = generated("perturbed:linear:101101,flips=3", 0);
    let schedule = linearity_schedule(1e-3).unwrap();
    let mut early = 0;
    for v in &report.verdicts {
        let mut o = OracleHandle::new(&f);
        let mut rng = stream_rng(config.seed, v.trial + 1);
        let replay = qprop::quantum::run_linearity_test(&mut o, &schedule, &mut rng).unwrap();
        ensure!(
            replay.oracle_calls == v.calls && o.calls() == v.calls,
            "trial {} count mismatch",
            v.trial
        );
        if v.accepted {
            ensure!(
                v.calls == schedule.predicted_total_calls,
                "accepted trial {} short",
                v.trial
            );
        } else {
            ensure!(
                v.calls <= schedule.predicted_total_calls,
                "rejected trial {} over budget",
                v.trial
            );
            early += (v.calls < schedule.predicted_total_calls) as u32;
        }
    }
    let means: Vec<String> = summary
        .points
        .iter()
        .map(|p| format!("{:.0}", p.mean_calls))
        .collect();
    Ok(format!(
        "slope {:.4} (band [-0.75, -0.6]), mean calls [{}]; {early} early rejections replayed exactly",
        summary.slope,
        means.join(", ")
    ))
}

// 11
fn performance() -> Check {
    let f = TruthTable::linear(20, 0xABCDE).unwrap();
    let start = Instant::now();
    let s = hadamard_all(phase_state(&f));
    let t_state = start.elapsed().as_secs_f64();
    ensure!(
        (s.amps()[0xABCDE].re - 1.0).abs() < 1e-9,
        "n = 20 transform wrong"
    );
    ensure!(
        t_state < 2.0,
        "n = 20 phase state + Hadamard took {t_state:.2}s"
    );

    let f = TruthTable::linear(16, 0x1234).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let start = Instant::now();
    let v = quantum_linearity_test(&mut OracleHandle::new(&f), 1e-3, &mut rng).unwrap();
    let t_test = start.elapsed().as_secs_f64();
    ensure!(
        v.decision == Decision::Linear(0x1234),
        "n = 16 test decided {:?}",
        v.decision
    );
    ensure!(t_test < 60.0, "n = 16 test took {t_test:.2}s");
    Ok(format!(
        "n = 20 state + Hadamard {t_state:.3}s; n = 16 linearity test at eps = 1e-3 ({} calls) {t_test:.2}s",
        v.oracle_calls
    ))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("BV exactness", bv_exactness),
        ("overlap identity", overlap_identity),
        ("matrix equivalence", matrix_equivalence),
        ("closed form vs simulation", closed_form_vs_simulation),
        ("completeness", completeness),
        ("soundness (linearity)", linearity_soundness),
        ("soundness (symmetry)", symmetry_soundness),
        ("classical baselines", classical_baselines),
        ("symmetric-subspace bound", symmetric_subspace_bound),
        ("query scaling", query_scaling),
        ("performance", performance),
    ];
    // `cargo test -- --list` and similar probes expect no work.
    if std::env::args().any(|a| a == "--list") {
        return;
    }
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = check();
        let (tag, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        failed += outcome.is_err() as usize;
        println!("criterion {:>2} [{tag}] {name}: {detail}", i + 1);
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
