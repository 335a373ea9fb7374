use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::config::{CampaignTest, ExperimentConfig, Mode};
use crate::boolfn::{
    distance_to_linear, distance_to_symmetric, format_bits, weight_profile, TruthTable,
};
use crate::classical::{blr_test, classical_rounds, classical_symmetry_test, ClassicalVerdict};
use crate::quantum::{
    bernstein_vazirani, linearity_schedule, run_linearity_test, run_symmetry_test,
    symmetry_schedule, Decision, Phase, QuantumVerdict, TestSchedule,
};
use crate::{DistanceReport, Error, OracleHandle, Result};

/// Band the fitted log-log slope of mean calls against eps should fall in.
pub const SLOPE_BAND: [f64; 2] = [-0.75, -0.6];

/// Outcome of one trial.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialRecord {
    pub trial: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eps: Option<f64>,
    pub accepted: bool,
    /// `linear:<a>`, `not_linear`, `symmetric`, `not_symmetric`, `accept`,
    /// `reject` or `output:<a>` depending on the mode.
    pub decision: String,
    pub calls: u64,
    /// `complete`, `first_stage:<k>`, `amplification:<k>`, `round:<k>` or `bv`.
    pub stage: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScheduleEcho {
    pub m: u64,
    pub steps: u64,
    pub rounds: u64,
    pub predicted_total_calls: u64,
    pub guarantees_void: bool,
}

impl From<&TestSchedule> for ScheduleEcho {
    fn from(s: &TestSchedule) -> Self {
        Self {
            m: s.m_first_stage,
            steps: s.grover_steps,
            rounds: s.rounds,
            predicted_total_calls: s.predicted_total_calls,
            guarantees_void: s.guarantees_void,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DistanceEntry {
    pub disagreements: u64,
    pub total: u64,
    pub epsilon: f64,
    pub overlap: f64,
    /// Nearest member: coefficient bits for linear, one value per weight for
    /// symmetric.
    pub nearest: String,
}

/// True distances of the instance, computed exactly.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DistanceEcho {
    pub linear: DistanceEntry,
    pub symmetric: DistanceEntry,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CampaignPoint {
    pub eps: f64,
    pub schedule: ScheduleEcho,
    pub accepted: u64,
    pub acceptance_rate: f64,
    pub mean_calls: f64,
    pub total_calls: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CampaignSummary {
    pub test: CampaignTest,
    pub points: Vec<CampaignPoint>,
    /// Least-squares slope of `ln(mean calls)` against `ln(eps)`.
    pub slope: f64,
    pub slope_band: [f64; 2],
    pub slope_within_band: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentReport {
    pub mode: Mode,
    pub instance: String,
    pub arity: usize,
    pub seed: u64,
    pub trials: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eps: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub schedule: Option<ScheduleEcho>,
    pub distance: DistanceEcho,
    pub accepted: u64,
    pub acceptance_rate: f64,
    /// `sqrt(p (1 - p) / trials)`.
    pub stderr: f64,
    pub mean_calls: f64,
    pub total_calls: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub campaign: Option<CampaignSummary>,
    pub verdicts: Vec<TrialRecord>,
    /// Not serialized, so reports for equal configs stay byte-identical.
    #[serde(skip)]
    pub wall_clock: Duration,
}

/// RNG for one stream of an experiment. Stream 0 generates the instance;
/// trial `t` of campaign point `p` uses stream `(p << 40) | (t + 1)`.
pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn trial_stream(point: usize, trial: u64) -> u64 {
    ((point as u64) << 40) | (trial + 1)
}

/// Loads the instance and runs every trial. Trials run in parallel; results
/// are independent of thread count.
pub fn run(config: &ExperimentConfig) -> Result<ExperimentReport> {
    config.validate()?;
    let started = Instant::now();
    let tt = config
        .source
        .load(&mut stream_rng(config.seed, 0), config.n_max)?;
    if config.mode == Mode::Csym && tt.arity() < 2 {
        return Err(Error::ArityTooSmall {
            n: tt.arity(),
            required: 2,
        });
    }
    let linear = distance_to_linear(&tt);
    let distance = DistanceEcho {
        linear: entry(&linear, format_bits(nearest_linear_index(&tt), tt.arity())),
        symmetric: entry(&distance_to_symmetric(&tt), symmetric_values(&tt)),
    };

    let (schedule, verdicts, campaign) = match config.mode {
        Mode::Campaign => {
            let (verdicts, summary) = run_campaign(config, &tt)?;
            (None, verdicts, Some(summary))
        }
        mode => {
            let eps = config.eps;
            let schedule = match mode {
                Mode::Lin => Some(ScheduleEcho::from(&linearity_schedule(eps.unwrap())?)),
                Mode::Sym => Some(ScheduleEcho::from(&symmetry_schedule(eps.unwrap())?)),
                Mode::Blr => Some(classical_echo(eps.unwrap(), 3)?),
                Mode::Csym => Some(classical_echo(eps.unwrap(), 2)?),
                _ => None,
            };
            let verdicts = run_trials(config, &tt, mode, eps, 0)?;
            (schedule, verdicts, None)
        }
    };

    let trials = verdicts.len() as u64;
    let accepted = verdicts.iter().filter(|v| v.accepted).count() as u64;
    let total_calls: u64 = verdicts.iter().map(|v| v.calls).sum();
    let p = accepted as f64 / trials as f64;
    Ok(ExperimentReport {
        mode: config.mode,
        instance: config.source.to_string(),
        arity: tt.arity(),
        seed: config.seed,
        trials: config.trials,
        eps: config.eps,
        schedule,
        distance,
        accepted,
        acceptance_rate: p,
        stderr: (p * (1.0 - p) / trials as f64).sqrt(),
        mean_calls: total_calls as f64 / trials as f64,
        total_calls,
        campaign,
        verdicts,
        wall_clock: started.elapsed(),
    })
}

fn nearest_linear_index(tt: &TruthTable) -> usize {
    crate::boolfn::walsh_spectrum(tt).argmax()
}

fn symmetric_values(tt: &TruthTable) -> String {
    let profile = weight_profile(tt);
    (0..=tt.arity())
        .map(|m| if profile.majority(m) { '1' } else { '0' })
        .collect()
}

fn entry(report: &DistanceReport, nearest: String) -> DistanceEntry {
    DistanceEntry {
        disagreements: report.distance.disagreements(),
        total: report.distance.total(),
        epsilon: report.epsilon(),
        overlap: report.overlap(),
        nearest,
    }
}

// Classical tests have no amplification stage; `m` carries the round count.
fn classical_echo(eps: f64, calls_per_round: u64) -> Result<ScheduleEcho> {
    let rounds = classical_rounds(eps)?;
    Ok(ScheduleEcho {
        m: rounds,
        steps: 0,
        rounds: 0,
        predicted_total_calls: calls_per_round * rounds,
        guarantees_void: false,
    })
}

fn run_trials(
    config: &ExperimentConfig,
    tt: &TruthTable,
    mode: Mode,
    eps: Option<f64>,
    point: usize,
) -> Result<Vec<TrialRecord>> {
    let n = tt.arity();
    let bv_target = nearest_linear_index(tt);
    let schedule = match (mode, eps) {
        (Mode::Lin, Some(e)) => Some(linearity_schedule(e)?),
        (Mode::Sym, Some(e)) => Some(symmetry_schedule(e)?),
        _ => None,
    };
    (0..config.trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = stream_rng(config.seed, trial_stream(point, t));
            let mut o = OracleHandle::new(tt);
            let mut record = match mode {
                Mode::Lin => quantum_record(
                    &run_linearity_test(&mut o, schedule.as_ref().unwrap(), &mut rng)?,
                    n,
                ),
                Mode::Sym => quantum_record(
                    &run_symmetry_test(&mut o, schedule.as_ref().unwrap(), &mut rng)?,
                    n,
                ),
                Mode::Blr => classical_record(&blr_test(&mut o, eps.unwrap(), &mut rng)?),
                Mode::Csym => {
                    classical_record(&classical_symmetry_test(&mut o, eps.unwrap(), &mut rng)?)
                }
                Mode::Bv => {
                    let a = bernstein_vazirani(&mut o, &mut rng);
                    TrialRecord {
                        trial: 0,
                        eps: None,
                        accepted: a == bv_target,
                        decision: format!("output:{}", format_bits(a, n)),
                        calls: o.calls(),
                        stage: "bv".into(),
                    }
                }
                Mode::Campaign => unreachable!("campaign points run a concrete tester"),
            };
            record.trial = t;
            record.eps = if config.mode == Mode::Campaign {
                eps
            } else {
                None
            };
            Ok(record)
        })
        .collect()
}

fn quantum_record(v: &QuantumVerdict, n: usize) -> TrialRecord {
    let decision = match v.decision {
        Decision::Linear(a) => format!("linear:{}", format_bits(a, n)),
        Decision::NotLinear => "not_linear".into(),
        Decision::Symmetric => "symmetric".into(),
        Decision::NotSymmetric => "not_symmetric".into(),
    };
    let stage = match v.rejected_at {
        None => "complete".into(),
        Some((Phase::FirstStage, k)) => format!("first_stage:{k}"),
        Some((Phase::Amplification, k)) => format!("amplification:{k}"),
    };
    TrialRecord {
        trial: 0,
        eps: None,
        accepted: v.accepted(),
        decision,
        calls: v.oracle_calls,
        stage,
    }
}

fn classical_record(v: &ClassicalVerdict) -> TrialRecord {
    TrialRecord {
        trial: 0,
        eps: None,
        accepted: v.accepted,
        decision: if v.accepted { "accept" } else { "reject" }.into(),
        calls: v.oracle_calls,
        stage: if v.accepted {
            "complete".into()
        } else {
            format!("round:{}", v.rounds_run)
        },
    }
}

fn run_campaign(
    config: &ExperimentConfig,
    tt: &TruthTable,
) -> Result<(Vec<TrialRecord>, CampaignSummary)> {
    let (mode, schedule_for): (Mode, fn(f64) -> Result<TestSchedule>) = match config.campaign_test {
        CampaignTest::Lin => (Mode::Lin, linearity_schedule),
        CampaignTest::Sym => (Mode::Sym, symmetry_schedule),
    };
    let mut all = Vec::new();
    let mut points = Vec::new();
    for (i, &eps) in config.campaign_grid.iter().enumerate() {
        let verdicts = run_trials(config, tt, mode, Some(eps), i)?;
        let accepted = verdicts.iter().filter(|v| v.accepted).count() as u64;
        let total_calls: u64 = verdicts.iter().map(|v| v.calls).sum();
        points.push(CampaignPoint {
            eps,
            schedule: ScheduleEcho::from(&schedule_for(eps)?),
            accepted,
            acceptance_rate: accepted as f64 / verdicts.len() as f64,
            mean_calls: total_calls as f64 / verdicts.len() as f64,
            total_calls,
        });
        all.extend(verdicts);
    }
    let xy: Vec<(f64, f64)> = points
        .iter()
        .map(|p| (p.eps.ln(), p.mean_calls.ln()))
        .collect();
    let slope = least_squares_slope(&xy);
    Ok((
        all,
        CampaignSummary {
            test: config.campaign_test,
            points,
            slope,
            slope_band: SLOPE_BAND,
            slope_within_band: (SLOPE_BAND[0]..=SLOPE_BAND[1]).contains(&slope),
        },
    ))
}

/// Ordinary least-squares slope through `(x, y)` points.
pub fn least_squares_slope(points: &[(f64, f64)]) -> f64 {
    let k = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / k;
    let my = points.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = points.iter().map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = points.iter().map(|(x, _)| (x - mx).powi(2)).sum();
    sxy / sxx
}
