//! Approximations of a monotone Skolem function `β` for the Σ⁰₁ tree, built
//! as an optimal play of the "no new branches" game over ℕ.

use std::cell::{Cell, RefCell};
use rustc_hash::FxHashMap as HashMap;

use super::tree::ErTree;
use super::wkl::{alpha_summary, PairControl};
use crate::error::{Error, Result};
use crate::selection::{at, trim, Eps, Evaluator, SelectionFamily};

/// A finite prefix of `β` (default 0 beyond), together with the control and
/// outcome values `ω̃β` and `q̃β` it was certified against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkolemApprox {
    pub beta: Vec<usize>,
    /// `ω̃β`: no word of length `n <= control` is first witnessed in `(β(n), outcome]`.
    pub control: usize,
    /// `q̃β`: the largest witness the approximation is certified against.
    pub outcome: usize,
}

impl SkolemApprox {
    pub fn get(&self, n: usize) -> usize {
        at(&self.beta, n)
    }
}

/// `δ_n p = p^i(0)` for the least `i <= 2^n` such that no word of length `n`
/// has its least witness in `(p^i(0), p^{i+1}(0)]`.
pub fn delta_sel(tree: &ErTree<'_>, n: usize, p: &mut Evaluator<'_, usize, usize>) -> Result<usize> {
    let rounds = if n >= usize::BITS as usize - 1 {
        usize::MAX
    } else {
        1usize << n
    };
    let mut current = 0usize;
    let mut i = 0usize;
    loop {
        let next = p(&current)?;
        if !tree.new_word_between(n, current, next)? {
            return Ok(current);
        }
        if i == rounds {
            return Err(Error::InternalInvariantViolation(format!(
                "δ_{n}: no stable iterate among the first 2^{n} + 1"
            )));
        }
        current = next;
        i += 1;
    }
}

/// `(N^{β,ω}, K^{β,ω})`:
///
/// ```text
/// N = max{W, |W - q - 1| + max{p0, p1} + 1}
/// K = max{W, max_{i <= N} β(i)}
/// ```
///
/// where `W = ω(α, β)` and `q = q^{β,ω}(α)`.
pub fn skolem_bounds(beta: &[usize], w: usize, q: usize, p0: usize, p1: usize) -> (usize, usize) {
    let gap = (w as i128 - q as i128 - 1).unsigned_abs() as usize;
    let n = w.max(gap + p0.max(p1) + 1);
    let k = (0..=n).map(|i| at(beta, i)).fold(w, usize::max);
    (n, k)
}

struct DeltaFamily<'t, 'c> {
    tree: &'t ErTree<'c>,
}

impl SelectionFamily<usize, usize> for DeltaFamily<'_, '_> {
    fn select_at(&self, s: &[usize], p: &mut Evaluator<'_, usize, usize>) -> Result<usize> {
        delta_sel(self.tree, s.len(), p)
    }
}

/// `ω̃` and `q̃`, each evaluation running one branch game; memoised on the
/// canonical form of `β`.
struct SkolemGame<'t, 'c> {
    tree: &'t ErTree<'c>,
    omega: &'t dyn PairControl,
    bounds: RefCell<HashMap<Vec<usize>, (usize, usize)>>,
    alpha_runs: Cell<u64>,
}

impl SkolemGame<'_, '_> {
    fn bounds(&self, beta: &[usize]) -> Result<(usize, usize)> {
        let key = trim(beta);
        if let Some(&b) = self.bounds.borrow().get(key) {
            return Ok(b);
        }
        self.alpha_runs.set(self.alpha_runs.get() + 1);
        let run = alpha_summary(self.tree, key, self.omega)?;
        let (p0, p1) = run.pivot_values;
        let b = skolem_bounds(key, run.control, run.outcome, p0, p1);
        self.bounds.borrow_mut().insert(key.to_vec(), b);
        Ok(b)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SkolemStats {
    pub alpha_runs: u64,
    pub nodes: u64,
}

/// `β^ω = EPS_⟨⟩(δ, ω̃, q̃)`.
pub fn build_beta(tree: &ErTree<'_>, omega: &dyn PairControl) -> Result<SkolemApprox> {
    build_beta_with_stats(tree, omega).map(|(b, _)| b)
}

pub fn build_beta_with_stats(
    tree: &ErTree<'_>,
    omega: &dyn PairControl,
) -> Result<(SkolemApprox, SkolemStats)> {
    let family = DeltaFamily { tree };
    let game = SkolemGame {
        tree,
        omega,
        bounds: RefCell::new(HashMap::default()),
        alpha_runs: Cell::new(0),
    };
    let control = |b: &[usize]| game.bounds(b).map(|(n, _)| n);
    let outcome = |b: &[usize]| game.bounds(b).map(|(_, k)| k);
    let mut run = Eps::new(&family, &control, &outcome, tree.budget());
    let beta = run.extension(&[])?;
    let (control, outcome) = game.bounds(&beta)?;
    let stats = SkolemStats {
        alpha_runs: game.alpha_runs.get(),
        nodes: run.stats().nodes,
    };
    Ok((
        SkolemApprox {
            beta,
            control,
            outcome,
        },
        stats,
    ))
}
