use std::cmp::Ordering;
use std::io::Write;

use dyingrabbits_core::{cross_verify, Params};
use rayon::prelude::*;

use super::to_index;
use crate::args::VerifyArgs;
use crate::error::CliError;

/// Result of one parameter pair in the sweep.
#[derive(Debug, Clone)]
pub struct PairOutcome {
    pub params: Params,
    pub methods: Vec<&'static str>,
    pub mismatches: Vec<usize>,
    pub passed: bool,
}

/// Every `(f, d)` with `1 <= f <= d`, `f <= max_f`, `d <= max_d`, then
/// `(f, inf)` for `f <= max_f` when requested.
pub fn sweep_pairs(max_f: usize, max_d: usize, include_inf: bool) -> Vec<Params> {
    let finite = (1..=max_f).flat_map(|f| (f..=max_d).map(move |d| (f, Some(d))));
    let infinite = (1..=max_f).filter(|_| include_inf).map(|f| (f, None));
    finite
        .chain(infinite)
        .map(|(f, d)| Params::new(f, d).expect("sweep ages start at 1"))
        .collect()
}

fn pair_order(a: &Params, b: &Params) -> Ordering {
    // finite d before inf
    (a.fertile(), a.death().is_none(), a.death()).cmp(&(
        b.fertile(),
        b.death().is_none(),
        b.death(),
    ))
}

/// Pairs run in parallel; the result is sorted, so output is deterministic.
pub fn sweep(pairs: &[Params], max_n: usize) -> Vec<PairOutcome> {
    let mut outcomes: Vec<PairOutcome> = pairs
        .par_iter()
        .map(|p| {
            let report = cross_verify(p, max_n);
            PairOutcome {
                params: *p,
                methods: report.applicable().map(|m| m.name()).collect(),
                mismatches: report.mismatches().to_vec(),
                passed: report.passed(),
            }
        })
        .collect();
    outcomes.sort_by(|a, b| pair_order(&a.params, &b.params));
    outcomes
}

pub fn run(args: &VerifyArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let max_f = to_index(args.max_f)?;
    let max_d = to_index(args.max_d)?;
    let max_n = to_index(args.max_n)?;
    let pairs = sweep_pairs(max_f, max_d, args.include_inf);
    let outcomes = sweep(&pairs, max_n);

    for o in &outcomes {
        if o.passed {
            writeln!(
                out,
                "{} n<={max_n}: pass [{}]",
                o.params,
                o.methods.join(", ")
            )?;
        } else {
            let shown: Vec<String> = o
                .mismatches
                .iter()
                .take(10)
                .map(ToString::to_string)
                .collect();
            writeln!(
                out,
                "{} n<={max_n}: FAIL at n = {}{} [{}]",
                o.params,
                shown.join(", "),
                if o.mismatches.len() > 10 { ", ..." } else { "" },
                o.methods.join(", ")
            )?;
        }
    }

    let failed = outcomes.iter().filter(|o| !o.passed).count();
    if failed == 0 {
        writeln!(out, "all {} parameter pairs agree", outcomes.len())?;
        Ok(())
    } else {
        writeln!(
            out,
            "{failed} of {} parameter pairs disagree",
            outcomes.len()
        )?;
        Err(CliError::Mismatch(format!(
            "{failed} parameter pairs disagree"
        )))
    }
}
