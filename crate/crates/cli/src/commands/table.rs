use std::io::Write;

use dyingrabbits_core::simulator::Simulator;

use super::to_index;
use crate::args::TableArgs;
use crate::error::CliError;
use crate::format::TableWriter;

/// Census rows for generations `1..=n` from the simulator. Degenerate
/// parameters are fine here.
pub fn run(args: &TableArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let params = args.population.params()?;
    let n = to_index(args.n)?;
    let sim = Simulator::new(params);
    sim.check_steps(n)?;

    let mut writer = TableWriter::new(out, args.format, params.ages_at(n))?;
    for generation in sim.evolve().take(n) {
        let cohort = generation.cohort;
        writer.row(cohort.generation(), cohort.counts(), &cohort.total())?;
    }
    Ok(())
}
