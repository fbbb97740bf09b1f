//! Approximations to the infinite pigeonhole principle for 2-colourings of ℕ,
//! as the optimal play of a two-round game.

use crate::error::Result;
use crate::selection::{binary_product, Evaluator, Selection};

/// Colouring of single naturals.
pub trait UnaryColouring {
    fn colour(&self, n: usize) -> Result<u8>;
}

impl<F: Fn(usize) -> Result<u8>> UnaryColouring for F {
    fn colour(&self, n: usize) -> Result<u8> {
        self(n)
    }
}

/// The pair `ε_0, ε_1` of selection functions on ℕ. Each one receives a
/// candidate `p : ℕ → ℕ` and returns how far it will be checked.
pub trait Demand {
    fn demand(&self, x: u8, p: &mut Evaluator<'_, usize, usize>) -> Result<usize>;
}

impl<F> Demand for F
where
    F: Fn(u8, &mut Evaluator<'_, usize, usize>) -> Result<usize>,
{
    fn demand(&self, x: u8, p: &mut Evaluator<'_, usize, usize>) -> Result<usize> {
        self(x, p)
    }
}

/// `ε̃_x p = μ i <= ε_x p. ¬(p(i) >= i ∧ c(p(i)) = x)`, returning the bound
/// when every candidate up to it is a counterexample.
pub struct Tilde<'a> {
    pub x: u8,
    pub colouring: &'a dyn UnaryColouring,
    pub demand: &'a dyn Demand,
}

impl Selection<usize, usize> for Tilde<'_> {
    fn select(&self, p: &mut Evaluator<'_, usize, usize>) -> Result<usize> {
        let bound = self.demand.demand(self.x, p)?;
        for i in 0..=bound {
            let v = p(&i)?;
            if v < i || self.colouring.colour(v)? != self.x {
                return Ok(i);
            }
        }
        Ok(bound)
    }
}

/// Result of the two-round game: `(k0, k1) = (ε̃_0 ⊗ ε̃_1)(max)` and the colour
/// `x = c(max{k0, k1})`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PigeonholeWitness {
    pub colour: u8,
    pub k0: usize,
    pub k1: usize,
}

impl PigeonholeWitness {
    pub fn outcome(&self) -> usize {
        self.k0.max(self.k1)
    }
}

/// Builds `(x, p_x)`. Holds the selections needed to evaluate `p_0`.
pub struct Pigeonhole<'a> {
    colouring: &'a dyn UnaryColouring,
    demand: &'a dyn Demand,
    witness: PigeonholeWitness,
}

impl<'a> Pigeonhole<'a> {
    pub fn solve(colouring: &'a dyn UnaryColouring, demand: &'a dyn Demand) -> Result<Self> {
        let first = Tilde {
            x: 0,
            colouring,
            demand,
        };
        let (k0, k1) = binary_product(
            &first,
            |_: &usize| Tilde {
                x: 1,
                colouring,
                demand,
            },
            |a: &usize, b: &usize| Ok(*a.max(b)),
        )?;
        let colour = colouring.colour(k0.max(k1))?;
        Ok(Pigeonhole {
            colouring,
            demand,
            witness: PigeonholeWitness { colour, k0, k1 },
        })
    }

    pub fn witness(&self) -> PigeonholeWitness {
        self.witness
    }

    pub fn colour(&self) -> u8 {
        self.witness.colour
    }

    /// `p_x(k)`. For `x = 0` this is `max{k, ε̃_1(k' ↦ max{k, k'})}`, the
    /// outcome of answering `k` optimally; for `x = 1` it is `max{k0, k}`.
    pub fn p(&self, k: usize) -> Result<usize> {
        if self.witness.colour == 0 {
            let reply = Tilde {
                x: 1,
                colouring: self.colouring,
                demand: self.demand,
            }
            .select(&mut |k1: &usize| Ok(k.max(*k1)))?;
            Ok(k.max(reply))
        } else {
            Ok(self.witness.k0.max(k))
        }
    }

    /// `ε_x p_x`.
    pub fn demand_value(&self) -> Result<usize> {
        self.demand
            .demand(self.witness.colour, &mut |k: &usize| self.p(*k))
    }
}

/// `(x, p_x)` for a unary colouring and a pair of selection functions.
pub fn iphp_realizer<'a>(
    colouring: &'a dyn UnaryColouring,
    demand: &'a dyn Demand,
) -> Result<Pigeonhole<'a>> {
    Pigeonhole::solve(colouring, demand)
}
