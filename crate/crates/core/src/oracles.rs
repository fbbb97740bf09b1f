//! Brute-force reference computations. Nothing here shares code with the
//! memoised tree or the unbounded product; every answer is recomputed from
//! the definitions.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::games::Game;
use crate::ramsey::colouring::PairColouring;
use crate::ramsey::pipeline::CounterexampleSpec;
use crate::selection::{at, Outcome};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub k: usize,
    pub i: usize,
    pub j: usize,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub pass: bool,
    pub first_violation: Option<Violation>,
    pub checks_performed: u64,
}

/// Checks, for every `k <= η_x F`, that `F(k) >= k` and that
/// `c(F(i), F(j)) = x` for all `i, j <= k` with `F(i) < F(j)`.
///
/// Violations are reported at the least `k`; pairs first introduced at `k`
/// are those involving `k` itself.
pub fn verify_ramsey_condition(
    colouring: &dyn PairColouring,
    x: u8,
    f: &[usize],
    eta: &CounterexampleSpec,
) -> Result<VerificationReport> {
    let bound = eta.eval_table(x, f)?;
    if bound >= f.len() {
        return Err(Error::TableTooShort {
            index: bound,
            len: f.len(),
        });
    }
    let mut checks = 0u64;
    let fail = |k, i, j, reason: String, checks| VerificationReport {
        pass: false,
        first_violation: Some(Violation { k, i, j, reason }),
        checks_performed: checks,
    };
    for k in 0..=bound {
        checks += 1;
        if f[k] < k {
            return Ok(fail(k, k, k, format!("F({k}) = {} < {k}", f[k]), checks));
        }
        for other in 0..k {
            let (i, j) = if f[other] < f[k] {
                (other, k)
            } else if f[k] < f[other] {
                (k, other)
            } else {
                continue;
            };
            checks += 1;
            let got = colouring.colour(f[i], f[j]) & 1;
            if got != x {
                let reason = format!("c(F({i}), F({j})) = c({}, {}) = {got} != {x}", f[i], f[j]);
                return Ok(fail(k, i, j, reason, checks));
            }
        }
    }
    Ok(VerificationReport {
        pass: true,
        first_violation: None,
        checks_performed: checks,
    })
}

/// The Erdős–Rado order evaluated straight from its recursive definition:
/// `j ≺ i` iff `j < i` and `c(k, i) = c(k, j)` for every `k ≺ j`.
pub struct NaivePrec<'c> {
    colouring: &'c dyn PairColouring,
    // preds[i] = every j ≺ i, increasing
    preds: Vec<Vec<usize>>,
}

impl<'c> NaivePrec<'c> {
    pub fn new(colouring: &'c dyn PairColouring) -> Self {
        NaivePrec {
            colouring,
            preds: Vec::new(),
        }
    }

    fn c(&self, i: usize, j: usize) -> u8 {
        self.colouring.colour(i, j) & 1
    }

    fn extend(&mut self, upto: usize) {
        while self.preds.len() <= upto {
            let i = self.preds.len();
            let mut below = Vec::new();
            for j in 0..i {
                if self.preds[j].iter().all(|&k| self.c(k, i) == self.c(k, j)) {
                    below.push(j);
                }
            }
            self.preds.push(below);
        }
    }

    pub fn prec(&mut self, j: usize, i: usize) -> bool {
        self.extend(i);
        self.preds[i].binary_search(&j).is_ok()
    }

    /// The word `s` of length `len` with `s_i = 0` iff `i ≺ k`.
    pub fn pattern(&mut self, k: usize, len: usize) -> Vec<u8> {
        (0..len).map(|i| u8::from(!self.prec(i, k))).collect()
    }

    /// `T'(s, k)` by trying every `k' ∈ [|s|, k]`.
    pub fn t_prime(&mut self, s: &[u8], k: usize) -> bool {
        (s.len()..=k).any(|w| self.pattern(w, s.len()) == s)
    }

    /// Least witness of every word of length `len` that has one at most
    /// `bound`.
    pub fn witnesses(&mut self, len: usize, bound: usize) -> HashMap<Vec<u8>, usize> {
        let mut found = HashMap::new();
        for w in len..=bound {
            found.entry(self.pattern(w, len)).or_insert(w);
        }
        found
    }
}

/// `s` of length `n` with `s_i = 0` iff `i ≺ n`: a word with witness `n`.
pub fn canonical_branch(colouring: &dyn PairColouring, n: usize) -> Vec<u8> {
    NaivePrec::new(colouring).pattern(n, n)
}

/// `β(n)` for `n <= n_max`: the largest least witness among words of
/// length `n` that have a witness at most `cap`.
///
/// A word may first be witnessed beyond `cap`. The search is declared
/// inconclusive when some word of length `n` is first witnessed in the upper
/// half `(cap / 2, cap]` of the window, or when `cap < n_max`.
pub fn exact_beta_oracle(
    colouring: &dyn PairColouring,
    n_max: usize,
    cap: usize,
) -> Result<Vec<usize>> {
    if cap < n_max {
        return Err(Error::CapInsufficient {
            cap,
            reason: format!("cap is below the largest length {n_max}"),
        });
    }
    let mut naive = NaivePrec::new(colouring);
    let mut beta = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let latest = naive.witnesses(n, cap).into_values().max().unwrap_or(n);
        if latest > cap / 2 && latest > n {
            return Err(Error::CapInsufficient {
                cap,
                reason: format!("a word of length {n} is first witnessed at {latest}"),
            });
        }
        beta.push(latest);
    }
    Ok(beta)
}

/// No new words between two bounds: for every `s` of length `n`, `T'(s, hi) → T'(s, lo)`.
pub fn no_new_words(colouring: &dyn PairColouring, n: usize, lo: usize, hi: usize) -> bool {
    let mut naive = NaivePrec::new(colouring);
    naive
        .witnesses(n, hi.max(n))
        .values()
        .all(|&w| w > hi || w <= lo)
}

/// Failing index of the approximate Skolem property: the least `n <= n_max`
/// for which some `s` of length `n` has a witness at most `outcome` but none
/// at most `β(n)`.
pub fn skolem_violation(
    colouring: &dyn PairColouring,
    beta: &[usize],
    outcome: usize,
    n_max: usize,
) -> Option<usize> {
    (0..=n_max).find(|&n| !no_new_words(colouring, n, at(beta, n), outcome))
}

/// Backward induction over every play of length `depth` with binary moves.
/// The control is taken to be `ω ≡ depth - 1`.
pub fn brute_force_play<R: Outcome>(game: &Game<'_, u8, R>, depth: usize) -> Result<Vec<u8>> {
    const MAX_DEPTH: usize = 20;
    if depth > MAX_DEPTH {
        return Err(Error::DepthTooLarge {
            requested: depth,
            cap: MAX_DEPTH,
        });
    }
    let word = |bits: usize, len: usize| -> Vec<u8> {
        (0..len).map(|i| ((bits >> (len - 1 - i)) & 1) as u8).collect()
    };
    // values[len][bits] = value of the position encoded by `bits`
    let mut values: Vec<Vec<R>> = vec![Vec::new(); depth + 1];
    let mut choices: Vec<Vec<u8>> = vec![Vec::new(); depth];
    values[depth] = (0..1usize << depth)
        .map(|b| game.outcome.outcome(&word(b, depth)))
        .collect::<Result<_>>()?;
    for len in (0..depth).rev() {
        let mut level = Vec::with_capacity(1 << len);
        let mut picks = Vec::with_capacity(1 << len);
        for b in 0..1usize << len {
            let s = word(b, len);
            let next = &values[len + 1];
            let x = game
                .family
                .select_at(&s, &mut |x: &u8| Ok(next[2 * b + usize::from(*x & 1)].clone()))?
                & 1;
            level.push(next[2 * b + usize::from(x)].clone());
            picks.push(x);
        }
        values[len] = level;
        choices[len] = picks;
    }
    let mut bits = 0usize;
    let mut play = Vec::with_capacity(depth);
    for level in &choices {
        let x = level[bits];
        play.push(x);
        bits = 2 * bits + usize::from(x);
    }
    Ok(play)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ramsey::colouring::{ParityColouring, ZeroColouring};
    use crate::selection::{argmax_bool, ConstControl, Constant, Uniform};

    #[test]
    fn verify_examples() {
        let z = ZeroColouring;
        let p = ParityColouring;
        let r = verify_ramsey_condition(&p, 0, &[0], &CounterexampleSpec::Const(0)).unwrap();
        assert!(r.pass);
        let id: Vec<usize> = (0..6).collect();
        assert!(verify_ramsey_condition(&z, 0, &id, &CounterexampleSpec::Const(5)).unwrap().pass);
        let r = verify_ramsey_condition(&p, 0, &id, &CounterexampleSpec::Const(2)).unwrap();
        let v = r.first_violation.unwrap();
        assert_eq!((v.k, v.i, v.j), (1, 0, 1));
        assert!(matches!(
            verify_ramsey_condition(&z, 0, &id, &CounterexampleSpec::Const(6)),
            Err(Error::TableTooShort { .. })
        ));
    }

    #[test]
    fn canonical_branch_examples() {
        assert_eq!(canonical_branch(&ZeroColouring, 0), Vec::<u8>::new());
        assert_eq!(canonical_branch(&ZeroColouring, 3), vec![0, 0, 0]);
        assert_eq!(canonical_branch(&ParityColouring, 3), vec![0, 0, 1]);
    }

    #[test]
    fn exact_beta_examples() {
        let z = exact_beta_oracle(&ZeroColouring, 20, 1000).unwrap();
        assert_eq!(z[0], 0);
        assert!((1..=20).all(|n| z[n] == n));
        let p = exact_beta_oracle(&ParityColouring, 2, 1000).unwrap();
        assert_eq!(p[2], 3);
        assert!(exact_beta_oracle(&ZeroColouring, 5, 3).is_err());
    }

    #[test]
    fn brute_force_examples() {
        let g = Game::new(
            Uniform(Constant(1u8)),
            |_: &[u8]| Ok(0usize),
            ConstControl(0),
        );
        assert_eq!(brute_force_play(&g, 1).unwrap(), vec![1]);
        let g = Game::new(
            Uniform(argmax_bool()),
            |s: &[u8]| Ok(2 * at(s, 0) as usize + at(s, 1) as usize),
            ConstControl(1),
        );
        assert_eq!(brute_force_play(&g, 2).unwrap(), vec![1, 1]);
        assert!(brute_force_play(&g, 21).is_err());
    }
}
