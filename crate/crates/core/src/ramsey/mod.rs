//! Constructive content of the two-colour infinite Ramsey theorem for pairs.

pub mod colouring;
pub mod pigeonhole;
pub mod pipeline;
pub mod skolem;
pub mod tree;
pub mod wkl;

pub use colouring::{Colour, MatrixColouring, PairColouring, ParityColouring, SeededColouring, ZeroColouring};
pub use pipeline::{ramsey_pipeline, run_pipeline, CounterexampleSpec, Counters, RamseyWitness};
pub use tree::ErTree;
