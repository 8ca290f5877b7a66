use std::fmt::Display;
use std::io::Write;

use dyingrabbits_core::fasteval::fast_term;
use dyingrabbits_core::recurrence::{OllerTerms, Theorem1Terms};
use dyingrabbits_core::ring::{Naturals, ZMod};
use dyingrabbits_core::simulator::Simulator;
use dyingrabbits_core::{Modulus, Params};

use super::to_index;
use crate::args::{ComputeArgs, Method};
use crate::error::CliError;
use crate::format::TermWriter;

pub fn run(args: &ComputeArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    let params = args.population.params()?;
    let n = to_index(args.n)?;
    let modulus = args
        .modulus
        .map(Modulus::new)
        .transpose()
        .map_err(|e| CliError::Usage(e.to_string()))?;

    let method = match args.method {
        Some(m) => m,
        None if params.is_degenerate() => {
            writeln!(err, "warning: {params} has d < f, using the simulator")?;
            Method::Sim
        }
        None => Method::Rec,
    };
    // fail before the csv header goes out
    match method {
        Method::Sim => Simulator::new(params).check_steps(n)?,
        _ => params.require_breeding()?,
    }

    let mut writer = TermWriter::new(out, args.format)?;
    let first = if args.last { n } else { 1 };
    match (method, modulus) {
        (Method::Sim, _) => {
            let totals = Simulator::new(params).evolve().map(|g| g.cohort.total());
            match modulus {
                None => emit(&mut writer, first, totals.take(n))?,
                Some(m) => emit(&mut writer, first, totals.take(n).map(|t| m.reduce(&t)))?,
            }
        }
        (Method::Rec, None) => emit(
            &mut writer,
            first,
            Theorem1Terms::new(Naturals, &params)?.take(n),
        )?,
        (Method::Rec, Some(m)) => emit(
            &mut writer,
            first,
            Theorem1Terms::new(ZMod::new(m), &params)?.take(n),
        )?,
        (Method::Oller, None) => emit(
            &mut writer,
            first,
            OllerTerms::new(Naturals, &params)?.take(n),
        )?,
        (Method::Oller, Some(m)) => emit(
            &mut writer,
            first,
            OllerTerms::new(ZMod::new(m), &params)?.take(n),
        )?,
        (Method::Fast, _) => emit_fast(&mut writer, &params, first as u64, args.n, modulus)?,
    }
    Ok(())
}

/// Writes the terms of `values` whose index is at least `first`.
fn emit<T: Display>(
    writer: &mut TermWriter<'_>,
    first: usize,
    values: impl Iterator<Item = T>,
) -> Result<(), CliError> {
    for (i, v) in (1..).zip(values) {
        if i >= first {
            writer.term(i as u64, &v)?;
        }
    }
    Ok(())
}

fn emit_fast(
    writer: &mut TermWriter<'_>,
    params: &Params,
    first: u64,
    n: u64,
    modulus: Option<Modulus>,
) -> Result<(), CliError> {
    for i in first..=n {
        let value = fast_term(params, i, modulus.map(Modulus::get))?;
        writer.term(i, &value)?;
    }
    Ok(())
}
