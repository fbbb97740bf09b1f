//! Selection functions and their products.
//!
//! A selection function of type `(X -> R) -> X` picks a move given an
//! evaluator that reports the outcome of each candidate move. Evaluators and
//! selections are fallible so that a nested computation can abort on budget
//! exhaustion without unwinding.
//!
//! Plays are finite prefixes; every [`OutcomeFn`] and [`ControlFn`] receives
//! the *whole* play from the root and must treat it as default-extended. The
//! shifted outcome `q_s(t) = q(s * t)` is therefore never materialised: the
//! product always hands `s * t` to the original `q`.

use rustc_hash::FxHashMap as HashMap;
use std::fmt::Debug;
use std::hash::Hash;

use crate::error::{Budget, Result};

/// Element of a move domain. `Default` is the designated zero used to extend
/// finite prefixes.
pub trait Move: Clone + Eq + Hash + Default + Debug {}
impl<T: Clone + Eq + Hash + Default + Debug> Move for T {}

/// Element of an outcome domain.
pub trait Outcome: Clone + Eq + Debug {}
impl<T: Clone + Eq + Debug> Outcome for T {}

/// Maps a move to the outcome of playing it.
pub type Evaluator<'e, X, R> = dyn FnMut(&X) -> Result<R> + 'e;

pub trait Selection<X, R> {
    fn select(&self, p: &mut Evaluator<'_, X, R>) -> Result<X>;
}

/// Position-indexed family of selection functions.
pub trait SelectionFamily<X, R> {
    fn select_at(&self, position: &[X], p: &mut Evaluator<'_, X, R>) -> Result<X>;
}

/// Outcome of a play, given as a prefix of its canonical extension.
pub trait OutcomeFn<X, R> {
    fn outcome(&self, play: &[X]) -> Result<R>;
}

/// Relevant length of a play, given as a prefix of its canonical extension.
pub trait ControlFn<X> {
    fn control(&self, play: &[X]) -> Result<usize>;
}

impl<X, R, F> OutcomeFn<X, R> for F
where
    F: Fn(&[X]) -> Result<R>,
{
    fn outcome(&self, play: &[X]) -> Result<R> {
        self(play)
    }
}

impl<X, F> ControlFn<X> for F
where
    F: Fn(&[X]) -> Result<usize>,
{
    fn control(&self, play: &[X]) -> Result<usize> {
        self(play)
    }
}

/// Control function with a fixed value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConstControl(pub usize);

impl<X> ControlFn<X> for ConstControl {
    fn control(&self, _play: &[X]) -> Result<usize> {
        Ok(self.0)
    }
}

/// Wraps a closure as a [`Selection`].
pub struct FnSelection<F>(F);

pub fn selection<X, R, F>(f: F) -> FnSelection<F>
where
    F: Fn(&mut Evaluator<'_, X, R>) -> Result<X>,
{
    FnSelection(f)
}

impl<X, R, F> Selection<X, R> for FnSelection<F>
where
    F: Fn(&mut Evaluator<'_, X, R>) -> Result<X>,
{
    fn select(&self, p: &mut Evaluator<'_, X, R>) -> Result<X> {
        (self.0)(p)
    }
}

impl<X, R> Selection<X, R> for Box<dyn Selection<X, R> + '_> {
    fn select(&self, p: &mut Evaluator<'_, X, R>) -> Result<X> {
        (**self).select(p)
    }
}

/// Wraps a closure as a [`SelectionFamily`].
pub struct FnFamily<F>(F);

pub fn family<X, R, F>(f: F) -> FnFamily<F>
where
    F: Fn(&[X], &mut Evaluator<'_, X, R>) -> Result<X>,
{
    FnFamily(f)
}

impl<X, R, F> SelectionFamily<X, R> for FnFamily<F>
where
    F: Fn(&[X], &mut Evaluator<'_, X, R>) -> Result<X>,
{
    fn select_at(&self, position: &[X], p: &mut Evaluator<'_, X, R>) -> Result<X> {
        (self.0)(position, p)
    }
}

/// The same selection function at every position.
pub struct Uniform<S>(pub S);

impl<X, R, S: Selection<X, R>> SelectionFamily<X, R> for Uniform<S> {
    fn select_at(&self, _position: &[X], p: &mut Evaluator<'_, X, R>) -> Result<X> {
        self.0.select(p)
    }
}

/// Ignores its evaluator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constant<X>(pub X);

impl<X: Clone, R> Selection<X, R> for Constant<X> {
    fn select(&self, _p: &mut Evaluator<'_, X, R>) -> Result<X> {
        Ok(self.0.clone())
    }
}

/// First move of `domain` with maximal outcome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArgMax<X>(pub Vec<X>);

/// First move of `domain` with minimal outcome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArgMin<X>(pub Vec<X>);

impl<X: Clone, R: Ord> Selection<X, R> for ArgMax<X> {
    fn select(&self, p: &mut Evaluator<'_, X, R>) -> Result<X> {
        extremum(&self.0, p, |new, best| new > best)
    }
}

impl<X: Clone, R: Ord> Selection<X, R> for ArgMin<X> {
    fn select(&self, p: &mut Evaluator<'_, X, R>) -> Result<X> {
        extremum(&self.0, p, |new, best| new < best)
    }
}

fn extremum<X: Clone, R>(
    domain: &[X],
    p: &mut Evaluator<'_, X, R>,
    better: impl Fn(&R, &R) -> bool,
) -> Result<X> {
    let mut best: Option<(X, R)> = None;
    for x in domain {
        let r = p(x)?;
        match &best {
            Some((_, b)) if !better(&r, b) => {}
            _ => best = Some((x.clone(), r)),
        }
    }
    Ok(best.expect("selection over an empty move domain").0)
}

/// `ArgMax` over the Boolean moves `{0, 1}`.
pub fn argmax_bool() -> ArgMax<u8> {
    ArgMax(vec![0, 1])
}

/// `ArgMin` over the Boolean moves `{0, 1}`.
pub fn argmin_bool() -> ArgMin<u8> {
    ArgMin(vec![0, 1])
}

/// Bounded μ-operator: the least `i <= bound` whose outcome satisfies `pred`,
/// or `bound` when there is none.
pub struct BoundedMu<P> {
    pub bound: usize,
    pub pred: P,
}

impl<R, P: Fn(usize, &R) -> bool> Selection<usize, R> for BoundedMu<P> {
    fn select(&self, p: &mut Evaluator<'_, usize, R>) -> Result<usize> {
        for i in 0..=self.bound {
            if (self.pred)(i, &p(&i)?) {
                return Ok(i);
            }
        }
        Ok(self.bound)
    }
}

/// Attainment: the outcome `p(ε p)` of playing the selected move. The
/// selection is invoked exactly once.
pub fn attain<X, R, S>(eps: &S, p: &mut Evaluator<'_, X, R>) -> Result<R>
where
    S: Selection<X, R> + ?Sized,
{
    let x = eps.select(p)?;
    p(&x)
}

/// Binary product `ε ⊗ δ`: with `B[x] = δ(x)(y ↦ q(x, y))` and
/// `a = ε(x ↦ q(x, B[x]))`, returns `(a, B[a])`.
pub fn binary_product<X, Y, R, E, D, S, Q>(eps: &E, delta: D, q: Q) -> Result<(X, Y)>
where
    E: Selection<X, R> + ?Sized,
    D: Fn(&X) -> S,
    S: Selection<Y, R>,
    Q: Fn(&X, &Y) -> Result<R>,
{
    let reply = |x: &X| -> Result<Y> { delta(x).select(&mut |y: &Y| q(x, y)) };
    let a = eps.select(&mut |x: &X| {
        let b = reply(x)?;
        q(x, &b)
    })?;
    let b = reply(&a)?;
    Ok((a, b))
}

/// Right-nested iteration of [`binary_product`] over `selections`.
///
/// `q` sees complete plays of length `selections.len()`. The recursion is
/// deliberately unmemoised; it is the reference route that [`Eps`] with a
/// constant control is compared against.
pub fn finite_product<X, R>(
    selections: &[&dyn Selection<X, R>],
    q: &dyn Fn(&[X]) -> Result<R>,
) -> Result<Vec<X>>
where
    X: Clone,
{
    fn completion<X: Clone, R>(
        selections: &[&dyn Selection<X, R>],
        q: &dyn Fn(&[X]) -> Result<R>,
        prefix: &[X],
    ) -> Result<Vec<X>> {
        let round = prefix.len();
        if round == selections.len() {
            return Ok(prefix.to_vec());
        }
        let extend = |x: &X| {
            let mut s = prefix.to_vec();
            s.push(x.clone());
            completion(selections, q, &s)
        };
        let a = selections[round].select(&mut |x: &X| q(&extend(x)?))?;
        extend(&a)
    }
    completion(selections, q, &[])
}

/// Statistics of one unbounded-product run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EpsStats {
    pub nodes: u64,
    pub memo_hits: u64,
}

#[derive(Debug, Clone)]
struct Node<X, R> {
    choice: Option<X>,
    value: R,
}

/// One run of the explicitly controlled unbounded product.
///
/// At a position `s` the product stops (returns the default sequence) when
/// `ω(ŝ) < |s|`; otherwise it plays `a_s = ε_s(x ↦ value(s * x))` and
/// continues from `s * a_s`. Here `value(t)` is `q` applied to `t` followed by
/// the product's own extension of `t`.
///
/// Continuation values are memoised by position for the lifetime of the run;
/// drop the run to discard them.
pub struct Eps<'a, X, R> {
    family: &'a dyn SelectionFamily<X, R>,
    control: &'a dyn ControlFn<X>,
    outcome: &'a dyn OutcomeFn<X, R>,
    budget: &'a Budget,
    memo: HashMap<Vec<X>, Node<X, R>>,
    stats: EpsStats,
}

impl<'a, X: Move, R: Outcome> Eps<'a, X, R> {
    pub fn new(
        family: &'a dyn SelectionFamily<X, R>,
        control: &'a dyn ControlFn<X>,
        outcome: &'a dyn OutcomeFn<X, R>,
        budget: &'a Budget,
    ) -> Self {
        Eps {
            family,
            control,
            outcome,
            budget,
            memo: HashMap::default(),
            stats: EpsStats::default(),
        }
    }

    /// The finite extension `t` of `s` computed by the product; `s * t`
    /// default-extended is the infinite play.
    pub fn extension(&mut self, s: &[X]) -> Result<Vec<X>> {
        self.solve(s)?;
        let mut pos = s.to_vec();
        while let Some(x) = self.memo.get(&pos).and_then(|n| n.choice.clone()) {
            pos.push(x);
        }
        Ok(pos.split_off(s.len()))
    }

    /// `q(s * extension(s))`.
    pub fn value(&mut self, s: &[X]) -> Result<R> {
        self.solve(s)
    }

    /// `p_s(x)`: the outcome of playing `x` at `s` and continuing with the
    /// product.
    pub fn continuation_value(&mut self, s: &[X], x: &X) -> Result<R> {
        let mut t = s.to_vec();
        t.push(x.clone());
        self.solve(&t)
    }

    pub fn stats(&self) -> EpsStats {
        self.stats
    }

    fn solve(&mut self, s: &[X]) -> Result<R> {
        if let Some(node) = self.memo.get(s) {
            self.stats.memo_hits += 1;
            return Ok(node.value.clone());
        }
        self.budget.charge_node()?;
        self.stats.nodes += 1;
        let node = if self.control.control(s)? < s.len() {
            Node {
                choice: None,
                value: self.outcome.outcome(s)?,
            }
        } else {
            let family = self.family;
            let choice = family.select_at(s, &mut |x: &X| self.continuation_value(s, x))?;
            let value = self.continuation_value(s, &choice)?;
            Node {
                choice: Some(choice),
                value,
            }
        };
        let value = node.value.clone();
        self.memo.insert(s.to_vec(), node);
        Ok(value)
    }
}

/// `EPS_s(q_s)` as a finite extension of `s`.
pub fn eps<X: Move, R: Outcome>(
    s: &[X],
    family: &dyn SelectionFamily<X, R>,
    control: &dyn ControlFn<X>,
    outcome: &dyn OutcomeFn<X, R>,
    budget: &Budget,
) -> Result<Vec<X>> {
    Eps::new(family, control, outcome, budget).extension(s)
}

/// `p_s(x)`: the outcome of playing `x` at `s` and continuing optimally.
pub fn continuation_value<X: Move, R: Outcome>(
    s: &[X],
    x: &X,
    family: &dyn SelectionFamily<X, R>,
    control: &dyn ControlFn<X>,
    outcome: &dyn OutcomeFn<X, R>,
    budget: &Budget,
) -> Result<R> {
    Eps::new(family, control, outcome, budget).continuation_value(s, x)
}

/// Reads `s[i]`, or the default move past the end of the prefix.
pub fn at<X: Clone + Default>(s: &[X], i: usize) -> X {
    s.get(i).cloned().unwrap_or_default()
}

/// First `n` entries of the canonical extension of `s`.
pub fn initial_segment<X: Clone + Default>(s: &[X], n: usize) -> Vec<X> {
    (0..n).map(|i| at(s, i)).collect()
}

/// Shortest prefix with the same canonical extension.
pub fn trim<X: Default + PartialEq>(s: &[X]) -> &[X] {
    let zero = X::default();
    let end = s.iter().rposition(|x| *x != zero).map_or(0, |i| i + 1);
    &s[..end]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;

    fn two_bit_value(play: &[u8]) -> Result<usize> {
        Ok(2 * at(play, 0) as usize + at(play, 1) as usize)
    }

    #[test]
    fn attain_examples() {
        let mut succ = |x: &usize| Ok(x + 1);
        assert_eq!(attain(&Constant(5usize), &mut succ).unwrap(), 6);

        let table = [3usize, 7];
        let mut p = |x: &u8| Ok(table[*x as usize]);
        assert_eq!(attain(&argmax_bool(), &mut p).unwrap(), 7);

        let table = [1usize, 0, 9];
        let mu = BoundedMu {
            bound: 2,
            pred: |_, r: &usize| *r == 0,
        };
        let mut p = |x: &usize| Ok(table[*x]);
        assert_eq!(attain(&mu, &mut p).unwrap(), 0);
    }

    #[test]
    fn attain_invokes_selection_once() {
        use std::cell::Cell;
        let calls = Cell::new(0);
        let sel = selection(|_p: &mut Evaluator<'_, u8, usize>| {
            calls.set(calls.get() + 1);
            Ok(1u8)
        });
        let mut p = |x: &u8| Ok(*x as usize);
        attain(&sel, &mut p).unwrap();
        assert_eq!(calls.get(), 1);
    }

    #[test]
    fn binary_product_examples() {
        let xor = |x: &u8, y: &u8| Ok((x ^ y) as usize);
        assert_eq!(
            binary_product(&argmax_bool(), |_| argmax_bool(), xor).unwrap(),
            (0, 1)
        );
        let any = |_: &usize, _: &usize| Ok(0usize);
        assert_eq!(
            binary_product(&Constant(1usize), |_| Constant(2usize), any).unwrap(),
            (1, 2)
        );
        let zero = |_: &u8, _: &u8| Ok(0usize);
        assert_eq!(
            binary_product(&argmax_bool(), |_| argmax_bool(), zero).unwrap(),
            (0, 0)
        );
    }

    #[test]
    fn finite_product_examples() {
        let q = |_: &[usize]| Ok(0usize);
        assert!(finite_product::<usize, usize>(&[], &q).unwrap().is_empty());

        let (c4, c7) = (Constant(4usize), Constant(7usize));
        let sels: [&dyn Selection<usize, usize>; 2] = [&c4, &c7];
        assert_eq!(finite_product(&sels, &q).unwrap(), vec![4, 7]);

        let am = argmax_bool();
        let sels: [&dyn Selection<u8, usize>; 2] = [&am, &am];
        assert_eq!(finite_product(&sels, &two_bit_value).unwrap(), vec![1, 1]);
    }

    #[test]
    fn eps_examples() {
        let budget = Budget::unlimited();
        let fam = Uniform(argmax_bool());
        let ext = eps(&[7u8], &fam, &ConstControl(0), &two_bit_value, &budget).unwrap();
        assert!(ext.is_empty());

        let fam = Uniform(Constant(3u8));
        let ext = eps(&[], &fam, &ConstControl(0), &two_bit_value, &budget).unwrap();
        assert_eq!(ext, vec![3]);

        let fam = Uniform(argmax_bool());
        let ext = eps(&[], &fam, &ConstControl(1), &two_bit_value, &budget).unwrap();
        assert_eq!(ext, vec![1, 1]);
    }

    #[test]
    fn continuation_value_examples() {
        let budget = Budget::unlimited();
        let fam = Uniform(argmax_bool());
        let ctl = ConstControl(1);
        let p0 = continuation_value(&[], &0, &fam, &ctl, &two_bit_value, &budget).unwrap();
        let p1 = continuation_value(&[], &1, &fam, &ctl, &two_bit_value, &budget).unwrap();
        assert_eq!((p0, p1), (1, 3));

        let fam = Uniform(Constant(0u8));
        let q = |s: &[u8]| Ok(s.len() * 10 + at(s, 0) as usize);
        let v = continuation_value(&[], &1, &fam, &ConstControl(0), &q, &budget).unwrap();
        assert_eq!(v, q(&[1]).unwrap());
    }

    #[test]
    fn eps_reports_budget_exhaustion() {
        let budget = Budget::new(5);
        let fam = Uniform(argmax_bool());
        let err = eps(&[], &fam, &ConstControl(10), &two_bit_value, &budget).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { .. }));
    }

    #[test]
    fn eps_memo_avoids_recomputation() {
        let budget = Budget::unlimited();
        let fam = Uniform(argmax_bool());
        let q = |s: &[u8]| Ok(s.iter().map(|&b| b as usize).sum::<usize>());
        let mut run = Eps::new(&fam, &ConstControl(9), &q, &budget);
        assert_eq!(run.extension(&[]).unwrap(), vec![1; 10]);
        // Every position of length <= 11 is visited at most once.
        assert!(run.stats().nodes <= (1 << 12));
    }

    #[test]
    fn trim_and_segments() {
        assert_eq!(trim(&[1u8, 0, 2, 0, 0]), &[1, 0, 2]);
        assert_eq!(trim::<u8>(&[0, 0]), &[] as &[u8]);
        assert_eq!(initial_segment(&[4usize, 5], 4), vec![4, 5, 0, 0]);
    }
}
