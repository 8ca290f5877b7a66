use std::io::Write;
use std::time::{Duration, Instant};

use dyingrabbits_core::fasteval::fast_term_in;
use dyingrabbits_core::recurrence::theorem1_term_in;
use dyingrabbits_core::ring::ZMod;
use dyingrabbits_core::{Modulus, Params};

use super::to_index;
use crate::args::BenchArgs;
use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Timed {
    pub residue: u64,
    pub best: Duration,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BenchReport {
    pub fast: Timed,
    pub iterative: Timed,
}

impl BenchReport {
    pub fn agree(&self) -> bool {
        self.fast.residue == self.iterative.residue
    }

    pub fn speedup(&self) -> f64 {
        self.iterative.best.as_secs_f64() / self.fast.best.as_secs_f64().max(1e-9)
    }
}

fn best_of(
    repeats: u32,
    mut f: impl FnMut() -> dyingrabbits_core::Result<u64>,
) -> Result<Timed, CliError> {
    let mut best = Duration::MAX;
    let mut residue = None;
    for _ in 0..repeats.max(1) {
        let start = Instant::now();
        let r = f()?;
        best = best.min(start.elapsed());
        match residue {
            Some(prev) if prev != r => {
                return Err(CliError::Mismatch(format!(
                    "nondeterministic residue: {prev} then {r}"
                )))
            }
            _ => residue = Some(r),
        }
    }
    Ok(Timed {
        residue: residue.expect("at least one repeat"),
        best,
    })
}

/// Times `F_n mod m` by polynomial exponentiation and by walking the
/// recurrence, `repeats` times each.
pub fn measure(
    params: &Params,
    n: u64,
    modulus: Modulus,
    repeats: u32,
) -> Result<BenchReport, CliError> {
    params.require_breeding()?;
    let steps = to_index(n)?;
    let ring = ZMod::new(modulus);
    let fast = best_of(repeats, || fast_term_in(ring, params, n))?;
    let iterative = best_of(repeats, || theorem1_term_in(ring, params, steps))?;
    Ok(BenchReport { fast, iterative })
}

pub fn run(args: &BenchArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let params = args.population.params()?;
    let modulus = Modulus::new(args.modulus).map_err(|e| CliError::Usage(e.to_string()))?;
    let report = measure(&params, args.n, modulus, args.repeats)?;

    writeln!(
        out,
        "params {params}, n={}, mod {modulus}, {} repeats",
        args.n, args.repeats
    )?;
    for (name, t) in [("fast-eval", report.fast), ("iterative", report.iterative)] {
        writeln!(
            out,
            "{name:<10} residue {:<20} best {:.3} ms",
            t.residue,
            t.best.as_secs_f64() * 1e3
        )?;
    }
    writeln!(out, "speedup    {:.1}x", report.speedup())?;
    if report.agree() {
        writeln!(out, "residues agree")?;
        Ok(())
    } else {
        writeln!(out, "residues DIFFER")?;
        Err(CliError::Mismatch(format!(
            "fast-eval residue {} != iterative residue {}",
            report.fast.residue, report.iterative.residue
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_n_agrees() {
        let p = Params::new(2, Some(12)).unwrap();
        let r = measure(&p, 10, Modulus::new(97).unwrap(), 2).unwrap();
        assert!(r.agree());
        assert_eq!(r.fast.residue, 55);
    }

    #[test]
    fn degenerate_is_rejected() {
        let p = Params::new(3, Some(2)).unwrap();
        assert!(matches!(
            measure(&p, 10, Modulus::new(97).unwrap(), 1),
            Err(CliError::Compute(_))
        ));
    }
}
