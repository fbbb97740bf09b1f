// The Erdős–Rado order of a colouring and the tree of its branches.

use eps_ramsey::oracles::{canonical_branch, exact_beta_oracle};
use eps_ramsey::ramsey::{ErTree, ParityColouring, SeededColouring};
use eps_ramsey::Result;

pub fn run() -> Result<()> {
    let c = SeededColouring::new(7);
    let tree = ErTree::unbounded(&c);
    for i in 0..10 {
        println!("predecessors of {i}: {:?}", tree.predecessors(i));
    }

    // a word of length n is in the tree once some k >= n realises it
    let s = canonical_branch(&c, 6);
    println!("branch below 6: {s:?}, least witness {:?}", tree.min_witness(&s, 100)?);
    for len in 1..=4 {
        let words = tree.witnessed_words(len, 60)?;
        println!("length {len}: {} words witnessed below 60", words.len());
    }
    println!("some extension of [0] by 5 bits below 40: {}", tree.depth_bounded(&[0], 5, 40)?);

    let beta = exact_beta_oracle(&ParityColouring, 6, 1000)?;
    println!("parity colouring, exact β up to 6: {beta:?}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().unwrap();
}
