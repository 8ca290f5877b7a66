//! Literal age-structured evolution of the population.
//!
//! One step: every rabbit of age at least `f` produces one newborn, every
//! rabbit ages by one generation, and rabbits that were of age `d` are gone.
//! Nothing here relies on a recurrence, which makes it the reference the
//! other evaluation routes are checked against. Degenerate parameters
//! (`d < f`) are accepted.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::census::CohortState;
use crate::error::{Error, Result};
use crate::params::Params;
use crate::window::SequenceWindow;

/// Default limit on the number of evolution steps per query.
pub const DEFAULT_STEP_CAP: usize = 1_000_000;

/// Births and deaths of one step `n -> n+1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StepStats {
    /// Rabbits of age `>= f` in the pre-step census.
    pub newborns: BigUint,
    /// Rabbits of age exactly `d` in the pre-step census (0 if `d` is infinite).
    pub deaths: BigUint,
}

/// A census together with the step that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generation {
    pub cohort: CohortState,
    /// `None` for generation 1.
    pub stats: Option<StepStats>,
}

pub fn initial(_params: &Params) -> CohortState {
    CohortState::founder()
}

/// Advances `cohort` by one generation.
pub fn step(params: &Params, cohort: &CohortState) -> (CohortState, StepStats) {
    let counts = cohort.counts();
    let newborns: BigUint = counts.iter().skip(params.fertile() - 1).sum();
    let (deaths, survivors) = match params.death() {
        Some(d) if counts.len() >= d => (counts[d - 1].clone(), d - 1),
        _ => (BigUint::zero(), counts.len()),
    };

    let mut next = Vec::with_capacity(survivors + 1);
    next.push(newborns.clone());
    next.extend_from_slice(&counts[..survivors]);

    (
        CohortState::from_parts(cohort.generation() + 1, next),
        StepStats { newborns, deaths },
    )
}

/// Simulation with a configurable step cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Simulator {
    params: Params,
    step_cap: usize,
}

impl Simulator {
    pub fn new(params: Params) -> Self {
        Self {
            params,
            step_cap: DEFAULT_STEP_CAP,
        }
    }

    pub fn with_step_cap(mut self, step_cap: usize) -> Self {
        self.step_cap = step_cap;
        self
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn step_cap(&self) -> usize {
        self.step_cap
    }

    /// Fails for `n == 0` or when reaching generation `n` needs more steps than the cap.
    pub fn check_steps(&self, n: usize) -> Result<()> {
        if n == 0 {
            return Err(Error::ZeroIndex);
        }
        if n - 1 > self.step_cap {
            return Err(Error::LimitExceeded {
                requested: n - 1,
                cap: self.step_cap,
            });
        }
        Ok(())
    }

    /// Unbounded stream of generations starting at 1. Not subject to the cap.
    pub fn evolve(&self) -> Evolution {
        Evolution {
            params: self.params,
            state: None,
        }
    }

    /// Totals `F_1..=F_n`, keeping only the current census in memory.
    pub fn run(&self, n: usize) -> Result<SequenceWindow> {
        self.check_steps(n)?;
        let mut cohort = initial(&self.params);
        let mut terms = Vec::with_capacity(n);
        terms.push(cohort.total());
        for _ in 1..n {
            cohort = step(&self.params, &cohort).0;
            terms.push(cohort.total());
        }
        SequenceWindow::from_first(terms)
    }

    /// The census at generation `n`, recomputed from generation 1.
    pub fn cohort_at(&self, n: usize) -> Result<CohortState> {
        self.check_steps(n)?;
        let mut cohort = initial(&self.params);
        for _ in 1..n {
            cohort = step(&self.params, &cohort).0;
        }
        Ok(cohort)
    }

    /// Every generation `1..=n` with the stats of the step into it.
    pub fn history(&self, n: usize) -> Result<Vec<Generation>> {
        self.check_steps(n)?;
        Ok(self.evolve().take(n).collect())
    }
}

/// Iterator over successive generations.
#[derive(Debug, Clone)]
pub struct Evolution {
    params: Params,
    state: Option<CohortState>,
}

impl Iterator for Evolution {
    type Item = Generation;

    fn next(&mut self) -> Option<Generation> {
        let generation = match &self.state {
            None => Generation {
                cohort: initial(&self.params),
                stats: None,
            },
            Some(prev) => {
                let (cohort, stats) = step(&self.params, prev);
                Generation {
                    cohort,
                    stats: Some(stats),
                }
            }
        };
        self.state = Some(generation.cohort.clone());
        Some(generation)
    }
}

/// `F_1..=F_n` with the default step cap.
pub fn run(params: &Params, n: usize) -> Result<SequenceWindow> {
    Simulator::new(*params).run(n)
}

pub fn cohort_at(params: &Params, n: usize) -> Result<CohortState> {
    Simulator::new(*params).cohort_at(n)
}
