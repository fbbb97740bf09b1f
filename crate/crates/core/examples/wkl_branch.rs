// An approximate infinite branch of the decidable tree, and the increasing
// sequence `a` read off it.

use eps_ramsey::oracles::{exact_beta_oracle, NaivePrec};
use eps_ramsey::ramsey::wkl::{build_a, build_alpha, ConstPairControl};
use eps_ramsey::ramsey::{ErTree, SeededColouring};
use eps_ramsey::selection::initial_segment;
use eps_ramsey::Result;

pub fn run() -> Result<()> {
    let c = SeededColouring::new(11);
    let beta = exact_beta_oracle(&c, 12, 4000)?;
    let tree = ErTree::unbounded(&c);
    let mut naive = NaivePrec::new(&c);
    for m in 0..=6 {
        let alpha = build_alpha(&tree, &beta, &ConstPairControl(m))?;
        let prefix = initial_segment(&alpha, m);
        let inside = naive.t_prime(&prefix, beta[m]);
        println!("ω = {m}: [α]({m}) = {prefix:?}, in the tree: {inside}");
    }

    // a(n) searches [n, β(β(n) + 1)], so only n with that index inside the
    // table are meaningful
    let alpha = build_alpha(&tree, &beta, &ConstPairControl(12))?;
    let usable = (0..beta.len()).take_while(|&n| beta[n] + 1 < beta.len()).count();
    let a: Vec<usize> = build_a(&alpha, &beta, usable.saturating_sub(1)).iter().map(|e| e.value).collect();
    println!("β = {beta:?}");
    println!("a = {a:?}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().unwrap();
}
