//! Oracle-call budgets as eps shrinks: quantum schedules against the
//! classical `ceil(ln 3 / eps)` rounds, plus a measured campaign.
//!
//! cargo run --release --example query_scaling

use qprop::classical::classical_rounds;
use qprop::harness::{run, CampaignTest, ExperimentConfig, FunctionSource, Mode};
use qprop::quantum::{linearity_schedule, symmetry_schedule};

fn main() -> qprop::Result<()> {
    println!(
        "      eps   lin (m, steps, rounds)  calls   sym (m, steps, rounds)  calls   BLR calls"
    );
    for eps in [1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6] {
        let lin = linearity_schedule(eps)?;
        let sym = symmetry_schedule(eps)?;
        println!(
            "{eps:9.0e}   ({:5}, {:3}, {:3}) {:>11}   ({:5}, {:3}, {:3}) {:>11}   {:>9}",
            lin.m_first_stage,
            lin.grover_steps,
            lin.rounds,
            lin.predicted_total_calls,
            sym.m_first_stage,
            sym.grover_steps,
            sym.rounds,
            sym.predicted_total_calls,
            3 * classical_rounds(eps)?
        );
    }

    for test in [CampaignTest::Lin, CampaignTest::Sym] {
        let gen = match test {
            CampaignTest::Lin => "linear:101101",
            CampaignTest::Sym => "symmetric:0110100",
        };
        let mut config = ExperimentConfig::new(
            Mode::Campaign,
            FunctionSource::Generator(gen.parse()?),
            None,
        );
        config.trials = 50;
        config.campaign_test = test;
        let report = run(&config)?;
        let summary = report.campaign.expect("campaign mode");
        println!("\ncampaign {test:?} on {gen}:");
        for p in &summary.points {
            println!(
                "  eps = {:7.0e}  mean calls = {:8.1}  acceptance = {:.2}",
                p.eps, p.mean_calls, p.acceptance_rate
            );
        }
        println!(
            "  fitted slope {:.3}, band {:?}, inside = {}",
            summary.slope, summary.slope_band, summary.slope_within_band
        );
    }
    Ok(())
}
