//! Approximate infinite branches of the decidable tree `T^β` (weak König's
//! lemma), and the min-monochromatic sequence `a` read off such a branch.

use std::cell::RefCell;
use rustc_hash::FxHashMap as HashMap;

use super::tree::ErTree;
use crate::error::Result;
use crate::selection::{at, trim, Eps, Evaluator, SelectionFamily};

/// Control functional `ω(α, β)` of the combined construction.
pub trait PairControl {
    fn control(&self, alpha: &[u8], beta: &[usize]) -> Result<usize>;
}

impl<F: Fn(&[u8], &[usize]) -> Result<usize>> PairControl for F {
    fn control(&self, alpha: &[u8], beta: &[usize]) -> Result<usize> {
        self(alpha, beta)
    }
}

/// `ω ≡ m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConstPairControl(pub usize);

impl PairControl for ConstPairControl {
    fn control(&self, _alpha: &[u8], _beta: &[usize]) -> Result<usize> {
        Ok(self.0)
    }
}

/// `ε^β_s p = 0` if `Depth_{p(0)+1}(T^β_s) → Depth_{p(0)}(T^β_{s*0})`, else `1`.
pub fn epsilon_wkl(
    tree: &ErTree<'_>,
    beta: &[usize],
    s: &[u8],
    p: &mut Evaluator<'_, u8, usize>,
) -> Result<u8> {
    let d = p(&0)?;
    if !tree.depth(beta, s, d + 1)? {
        return Ok(0);
    }
    let mut left = s.to_vec();
    left.push(0);
    Ok(if tree.depth(beta, &left, d)? { 0 } else { 1 })
}

/// `q^{β,ω}(α) = W - k - 1` for the least `k < W = ω(α, β)` with
/// `Depth_{W-k}(T^β_[α](k))` but not `Depth_{W-k-1}(T^β_[α](k+1))`; `0` when
/// the chain of implications holds throughout.
pub fn q_control(
    tree: &ErTree<'_>,
    beta: &[usize],
    omega: &dyn PairControl,
    alpha: &[u8],
) -> Result<usize> {
    let w = omega.control(alpha, beta)?;
    q_with_control(tree, beta, w, alpha)
}

fn q_with_control(tree: &ErTree<'_>, beta: &[usize], w: usize, alpha: &[u8]) -> Result<usize> {
    let word: Vec<u8> = (0..w).map(|i| at(alpha, i)).collect();
    let mut extends = tree.depth(beta, &[], w)?;
    for k in 0..w {
        let next = tree.depth(beta, &word[..k + 1], w - k - 1)?;
        if extends && !next {
            return Ok(w - k - 1);
        }
        extends = next;
    }
    Ok(0)
}

struct WklFamily<'t, 'c> {
    tree: &'t ErTree<'c>,
    beta: &'t [usize],
}

impl SelectionFamily<u8, usize> for WklFamily<'_, '_> {
    fn select_at(&self, s: &[u8], p: &mut Evaluator<'_, u8, usize>) -> Result<u8> {
        epsilon_wkl(self.tree, self.beta, s, p)
    }
}

/// `λα. ω(α, β)` and `q^{β,ω}`, memoised on the canonical form of `α`.
struct WklGame<'t, 'c> {
    tree: &'t ErTree<'c>,
    beta: &'t [usize],
    omega: &'t dyn PairControl,
    controls: RefCell<HashMap<Vec<u8>, usize>>,
    outcomes: RefCell<HashMap<Vec<u8>, usize>>,
}

impl WklGame<'_, '_> {
    fn control(&self, alpha: &[u8]) -> Result<usize> {
        let key = trim(alpha);
        if let Some(&w) = self.controls.borrow().get(key) {
            return Ok(w);
        }
        let w = self.omega.control(key, self.beta)?;
        self.controls.borrow_mut().insert(key.to_vec(), w);
        Ok(w)
    }

    fn outcome(&self, alpha: &[u8]) -> Result<usize> {
        let key = trim(alpha);
        if let Some(&q) = self.outcomes.borrow().get(key) {
            return Ok(q);
        }
        let w = self.control(key)?;
        let q = q_with_control(self.tree, self.beta, w, key)?;
        self.outcomes.borrow_mut().insert(key.to_vec(), q);
        Ok(q)
    }
}

/// Everything the Skolem-function construction needs from one branch run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaSummary {
    pub alpha: Vec<u8>,
    /// `ω(α, β)`
    pub control: usize,
    /// `q^{β,ω}(α)`
    pub outcome: usize,
    /// Length of the prefix `s = [α](ω - q - 1)`, clamped at 0.
    pub pivot: usize,
    /// `(p_s(0), p_s(1))`
    pub pivot_values: (usize, usize),
    pub nodes: u64,
}

/// Runs the branch game for a fixed `β` and hands the product run to `f`.
pub fn with_alpha_game<T>(
    tree: &ErTree<'_>,
    beta: &[usize],
    omega: &dyn PairControl,
    f: impl FnOnce(&mut Eps<'_, u8, usize>) -> Result<T>,
) -> Result<T> {
    let family = WklFamily { tree, beta };
    let game = WklGame {
        tree,
        beta,
        omega,
        controls: RefCell::new(HashMap::default()),
        outcomes: RefCell::new(HashMap::default()),
    };
    let control = |a: &[u8]| game.control(a);
    let outcome = |a: &[u8]| game.outcome(a);
    let mut run = Eps::new(&family, &control, &outcome, tree.budget());
    f(&mut run)
}

/// `α^{β,ω} = EPS_⟨⟩(ε^β, λα.ω(α,β), q^{β,ω})`.
pub fn build_alpha(tree: &ErTree<'_>, beta: &[usize], omega: &dyn PairControl) -> Result<Vec<u8>> {
    with_alpha_game(tree, beta, omega, |run| run.extension(&[]))
}

/// [`build_alpha`] together with `ω(α,β)`, `q^{β,ω}(α)` and the two
/// continuation values at `[α](ω - q - 1)`.
pub fn alpha_summary(
    tree: &ErTree<'_>,
    beta: &[usize],
    omega: &dyn PairControl,
) -> Result<AlphaSummary> {
    with_alpha_game(tree, beta, omega, |run| {
        let alpha = run.extension(&[])?;
        let control = omega.control(trim(&alpha), beta)?;
        let outcome = q_with_control(tree, beta, control, &alpha)?;
        let pivot = control.saturating_sub(outcome + 1);
        let s: Vec<u8> = (0..pivot).map(|i| at(&alpha, i)).collect();
        let p0 = run.continuation_value(&s, &0)?;
        let p1 = run.continuation_value(&s, &1)?;
        Ok(AlphaSummary {
            alpha,
            control,
            outcome,
            pivot,
            pivot_values: (p0, p1),
            nodes: run.stats().nodes,
        })
    })
}

/// One entry of `a`: the least `k ∈ [n, β(β(n) + 1)]` with `α(k) = 0`
/// (`a(0) = 0`). When the interval holds no zero the upper endpoint is
/// returned and `fallback` is set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AEntry {
    pub value: usize,
    pub fallback: bool,
}

pub fn a_entry(alpha: &[u8], beta: &[usize], n: usize) -> AEntry {
    if n == 0 {
        return AEntry {
            value: 0,
            fallback: false,
        };
    }
    let hi = at(beta, at(beta, n) + 1);
    match (n..=hi).find(|&k| at(alpha, k) == 0) {
        Some(k) => AEntry {
            value: k,
            fallback: false,
        },
        None => AEntry {
            value: hi,
            fallback: true,
        },
    }
}

/// `a(0), ..., a(n_max)`.
pub fn build_a(alpha: &[u8], beta: &[usize], n_max: usize) -> Vec<AEntry> {
    (0..=n_max).map(|n| a_entry(alpha, beta, n)).collect()
}
