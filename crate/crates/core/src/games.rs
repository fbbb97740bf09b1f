//! Sequential games `(ε, q, ω)` and their optimal plays.
//!
//! A position `s` is relevant while `ω(ŝ) >= |s|`. The optimal play is the
//! unbounded product started at the empty position; "optimal" is checked
//! through the two equilibrium equations
//!
//! ```text
//! α(n) = ε_[α](n)(p_[α](n))        q(α) = p_[α](n)(ε_[α](n)(p_[α](n)))
//! ```
//!
//! for every `n <= ω(α)`, where `p_s(x)` is the continuation value.

use serde::{Deserialize, Serialize};

use crate::error::{Budget, Result};
use crate::selection::{at, ControlFn, Eps, Move, Outcome, OutcomeFn, SelectionFamily};

pub struct Game<'g, X, R> {
    pub family: Box<dyn SelectionFamily<X, R> + 'g>,
    pub outcome: Box<dyn OutcomeFn<X, R> + 'g>,
    pub control: Box<dyn ControlFn<X> + 'g>,
}

impl<'g, X: Move, R: Outcome> Game<'g, X, R> {
    pub fn new(
        family: impl SelectionFamily<X, R> + 'g,
        outcome: impl OutcomeFn<X, R> + 'g,
        control: impl ControlFn<X> + 'g,
    ) -> Self {
        Game {
            family: Box::new(family),
            outcome: Box::new(outcome),
            control: Box::new(control),
        }
    }

    /// A fresh product run over this game.
    pub fn solver<'b>(&'b self, budget: &'b Budget) -> Eps<'b, X, R> {
        Eps::new(&*self.family, &*self.control, &*self.outcome, budget)
    }
}

pub fn optimal_play<X: Move, R: Outcome>(game: &Game<'_, X, R>, budget: &Budget) -> Result<Vec<X>> {
    game.solver(budget).extension(&[])
}

pub fn is_relevant<X>(s: &[X], control: &dyn ControlFn<X>) -> Result<bool> {
    Ok(control.control(s)? >= s.len())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoundCheck {
    pub index: usize,
    /// `α(n) = ε_[α](n)(p_[α](n))`
    pub move_matches: bool,
    /// `q(α) = attain(ε_[α](n), p_[α](n))`
    pub outcome_matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OptimalityReport {
    pub control: usize,
    pub rounds: Vec<RoundCheck>,
}

impl OptimalityReport {
    pub fn passed(&self) -> bool {
        self.rounds.iter().all(|r| r.move_matches && r.outcome_matches)
    }

    pub fn first_failure(&self) -> Option<usize> {
        self.rounds
            .iter()
            .find(|r| !(r.move_matches && r.outcome_matches))
            .map(|r| r.index)
    }
}

/// Checks both equilibrium equations at every `n <= ω(α)`.
pub fn verify_optimal_play<X: Move, R: Outcome>(
    game: &Game<'_, X, R>,
    play: &[X],
    budget: &Budget,
) -> Result<OptimalityReport> {
    let control = game.control.control(play)?;
    let total = game.outcome.outcome(play)?;
    let mut run = game.solver(budget);
    let mut rounds = Vec::with_capacity(control + 1);
    for n in 0..=control {
        let prefix: Vec<X> = (0..n).map(|i| at(play, i)).collect();
        let mut p = |x: &X| run.continuation_value(&prefix, x);
        let chosen = game.family.select_at(&prefix, &mut p)?;
        let attained = p(&chosen)?;
        rounds.push(RoundCheck {
            index: n,
            move_matches: chosen == at(play, n),
            outcome_matches: attained == total,
        });
    }
    Ok(OptimalityReport { control, rounds })
}
