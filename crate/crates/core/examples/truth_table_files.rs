//! Truth-table files on disk and a full harness run over one of them.
//!
//! cargo run --example truth_table_files

use qprop::boolfn::io::{parse_table, read_table_file, write_table, write_table_file};
use qprop::harness::{render_report, run, ExperimentConfig, FunctionSource, Mode, OutputFormat};
use qprop::TruthTable;

fn main() -> qprop::Result<()> {
    let and2 = parse_table("2\n0001\n")?;
    print!("AND2 round-trips as:\n{}", write_table(&and2));

    let dir = std::env::temp_dir().join(format!("qprop-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("majority5.tt");
    let majority: Vec<bool> = (0..=5).map(|w| w >= 3).collect();
    write_table_file(&path, &TruthTable::symmetric(&majority)?)?;
    let loaded = read_table_file(&path, qprop::DEFAULT_N_MAX)?;
    println!(
        "\nwrote and re-read {} ({} inputs)",
        path.display(),
        loaded.len()
    );

    match parse_table("3\n0101\n") {
        Err(e) => println!("short table rejected: {e}"),
        Ok(_) => unreachable!(),
    }

    let mut config =
        ExperimentConfig::new(Mode::Sym, FunctionSource::File(path.clone()), Some(0.05));
    config.trials = 5;
    config.seed = 99;
    let report = run(&config)?;
    print!("\n{}", render_report(&report, OutputFormat::Csv)?);

    std::fs::remove_dir_all(&dir)?;
    Ok(())
}
