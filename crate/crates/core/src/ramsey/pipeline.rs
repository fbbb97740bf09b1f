//! The assembled realizer: from a colouring `c` and a counterexample
//! functional `η`, a colour `x` and `F` with, for every `k <= η_x F`,
//! `F(k) >= k` and `c(F(i), F(j)) = x` whenever `i, j <= k` and
//! `F(i) < F(j)`.

use std::cell::Cell;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::colouring::PairColouring;
use super::pigeonhole::iphp_realizer;
use super::skolem::{build_beta_with_stats, SkolemApprox};
use super::tree::ErTree;
use super::wkl::{a_entry, build_alpha, PairControl};
use crate::error::{Budget, Error, Result};
use crate::oracles::{verify_ramsey_condition, VerificationReport};
use crate::selection::{at, Evaluator};

/// The closed family of counterexample functionals `η : 𝔹 × ℕ^ℕ → ℕ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CounterexampleSpec {
    /// `η_x F = k`
    Const(usize),
    /// `η_x F = k_x`
    XSwitch(usize, usize),
    /// `η_x F = min(cap, max_{i<m} F(i))`, and `0` when `m = 0`.
    FMax { m: usize, cap: usize },
}

impl CounterexampleSpec {
    pub fn eval(&self, x: u8, f: &mut Evaluator<'_, usize, usize>) -> Result<usize> {
        match *self {
            CounterexampleSpec::Const(k) => Ok(k),
            CounterexampleSpec::XSwitch(k0, k1) => Ok(if x == 0 { k0 } else { k1 }),
            CounterexampleSpec::FMax { m, cap } => {
                let mut best = 0;
                for i in 0..m {
                    best = best.max(f(&i)?);
                }
                Ok(best.min(cap))
            }
        }
    }

    /// Number of leading entries of `F` the functional inspects.
    pub fn reads(&self) -> usize {
        match *self {
            CounterexampleSpec::FMax { m, .. } => m,
            _ => 0,
        }
    }

    /// `η_x F` for a finite table; `TableTooShort` if `η` reads past it.
    pub fn eval_table(&self, x: u8, f: &[usize]) -> Result<usize> {
        self.eval(x, &mut |i: &usize| {
            f.get(*i).copied().ok_or(Error::TableTooShort {
                index: *i,
                len: f.len(),
            })
        })
    }
}

impl fmt::Display for CounterexampleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CounterexampleSpec::Const(k) => write!(f, "const:{k}"),
            CounterexampleSpec::XSwitch(k0, k1) => write!(f, "xswitch:{k0}:{k1}"),
            CounterexampleSpec::FMax { m, cap } => write!(f, "fmax:{m}:{cap}"),
        }
    }
}

impl FromStr for CounterexampleSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.trim().split(':').collect();
        let num = |t: &str| {
            t.parse::<usize>()
                .map_err(|e| Error::parse(format!("bad number {t:?} in eta spec {s:?}: {e}")))
        };
        match parts.as_slice() {
            ["const", k] => Ok(CounterexampleSpec::Const(num(k)?)),
            ["xswitch", k0, k1] => Ok(CounterexampleSpec::XSwitch(num(k0)?, num(k1)?)),
            ["fmax", m, cap] => Ok(CounterexampleSpec::FMax {
                m: num(m)?,
                cap: num(cap)?,
            }),
            _ => Err(Error::parse(format!(
                "unknown eta spec {s:?}; expected const:<k>, xswitch:<k0>:<k1> or fmax:<m>:<cap>"
            ))),
        }
    }
}

/// Outcome of running the pigeonhole game on a branch `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiRun {
    pub colour: u8,
    /// `η* = η_x(a ∘ p)`
    pub eta_value: usize,
    /// `p(η*)`
    pub range: usize,
    /// `p(0), ..., p(range)`
    pub p: Vec<usize>,
    /// `ψ a`
    pub value: usize,
}

/// Runs the pigeonhole game for the induced colouring
/// `c^a(n) = c(a(n), a(n + 1))` and `ε_x p = η_x(a ∘ p)`, and returns
/// `ψ a = max_{i <= p(η*)} p(i)`.
pub fn psi_run(
    colouring: &dyn PairColouring,
    a: &dyn Fn(usize) -> usize,
    eta: &CounterexampleSpec,
) -> Result<PsiRun> {
    let unary = |n: usize| Ok(colouring.colour(a(n), a(n + 1)) & 1);
    let demand = |x: u8, p: &mut Evaluator<'_, usize, usize>| {
        eta.eval(x, &mut |i: &usize| Ok(a(p(i)?)))
    };
    let game = iphp_realizer(&unary, &demand)?;
    let eta_value = game.demand_value()?;
    let range = game.p(eta_value)?;
    let p = (0..=range).map(|i| game.p(i)).collect::<Result<Vec<_>>>()?;
    let value = p.iter().copied().max().unwrap_or(0);
    Ok(PsiRun {
        colour: game.colour(),
        eta_value,
        range,
        p,
        value,
    })
}

pub fn psi(
    colouring: &dyn PairColouring,
    a: &dyn Fn(usize) -> usize,
    eta: &CounterexampleSpec,
) -> Result<usize> {
    psi_run(colouring, a, eta).map(|r| r.value)
}

/// `max_{i <= ψ} max{i, β(i) + 1, β(β(i) + 1) + 1}`.
pub fn omega_bound(beta: &[usize], psi: usize) -> usize {
    (0..=psi)
        .map(|i| {
            let b = at(beta, i);
            i.max(b + 1).max(at(beta, b + 1) + 1)
        })
        .max()
        .unwrap_or(0)
}

/// `ω(α, β) = omega_bound(β, ψ(a^{α,β}))`.
pub struct OmegaControl<'a> {
    pub colouring: &'a dyn PairColouring,
    pub eta: CounterexampleSpec,
}

impl PairControl for OmegaControl<'_> {
    fn control(&self, alpha: &[u8], beta: &[usize]) -> Result<usize> {
        let a = |n: usize| a_entry(alpha, beta, n).value;
        let p = psi(self.colouring, &a, &self.eta)?;
        Ok(omega_bound(beta, p))
    }
}

/// Work statistics of one pipeline run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Counters {
    pub eps_nodes: u64,
    pub depth_evaluations: u64,
    pub witness_scans: u64,
    pub prec_memo_size: usize,
    pub alpha_runs: u64,
    pub budget_used: u64,
    pub fallbacks: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RamseyWitness {
    pub colour: u8,
    /// `F(0), ..., F(len - 1)`, covering every index up to `η_x F` and every
    /// index `η` reads.
    pub f: Vec<usize>,
    pub eta_value: usize,
    pub report: VerificationReport,
    pub counters: Counters,
    pub alpha: Vec<u8>,
    pub beta: SkolemApprox,
}

fn counters_of(tree: &ErTree<'_>, alpha_runs: u64, fallbacks: usize) -> Counters {
    let t = tree.counters();
    Counters {
        eps_nodes: tree.budget().product_nodes(),
        depth_evaluations: t.depth_evaluations,
        witness_scans: t.witness_scans,
        prec_memo_size: t.nodes,
        alpha_runs,
        budget_used: tree.budget().used(),
        fallbacks,
    }
}

/// Runs the pipeline under `budget`. The counters are returned whether or
/// not the run completes.
pub fn run_pipeline(
    colouring: &dyn PairColouring,
    eta: &CounterexampleSpec,
    budget: Budget,
) -> (Result<RamseyWitness>, Counters) {
    let tree = ErTree::new(colouring, budget);
    let alpha_runs = Cell::new(0);
    let fallbacks = Cell::new(0);
    let result = pipeline_on(&tree, eta, &alpha_runs, &fallbacks);
    let counters = counters_of(&tree, alpha_runs.get(), fallbacks.get());
    match result {
        Ok(mut w) => {
            w.counters = counters;
            (Ok(w), counters)
        }
        Err(e) => (Err(e), counters),
    }
}

fn pipeline_on(
    tree: &ErTree<'_>,
    eta: &CounterexampleSpec,
    alpha_runs: &Cell<u64>,
    fallbacks: &Cell<usize>,
) -> Result<RamseyWitness> {
    let colouring = tree.colouring();
    let omega = OmegaControl {
        colouring,
        eta: *eta,
    };
    let (beta, stats) = build_beta_with_stats(tree, &omega)?;
    alpha_runs.set(stats.alpha_runs + 1);
    let alpha = build_alpha(tree, &beta.beta, &omega)?;

    let a = |n: usize| {
        let e = a_entry(&alpha, &beta.beta, n);
        if e.fallback {
            fallbacks.set(fallbacks.get() + 1);
        }
        e.value
    };
    let run = psi_run(colouring, &a, eta)?;
    let len = (run.eta_value + 1).max(eta.reads());
    let f = f_table(colouring, &a, eta, len)?;
    let report = verify_ramsey_condition(colouring, run.colour, &f, eta)?;
    Ok(RamseyWitness {
        colour: run.colour,
        f,
        eta_value: run.eta_value,
        report,
        counters: Counters::default(),
        alpha,
        beta,
    })
}

/// `F = a ∘ p` on `0..len`.
fn f_table(
    colouring: &dyn PairColouring,
    a: &dyn Fn(usize) -> usize,
    eta: &CounterexampleSpec,
    len: usize,
) -> Result<Vec<usize>> {
    let unary = |n: usize| Ok(colouring.colour(a(n), a(n + 1)) & 1);
    let demand = |x: u8, p: &mut Evaluator<'_, usize, usize>| {
        eta.eval(x, &mut |i: &usize| Ok(a(p(i)?)))
    };
    let game = iphp_realizer(&unary, &demand)?;
    (0..len).map(|k| game.p(k).map(a)).collect()
}

/// [`run_pipeline`] under the default budget.
pub fn ramsey_pipeline(
    colouring: &dyn PairColouring,
    eta: &CounterexampleSpec,
) -> Result<RamseyWitness> {
    run_pipeline(colouring, eta, Budget::default()).0
}
