// A Skolem-function approximation for the tree, built as an optimal play.

use eps_ramsey::oracles::skolem_violation;
use eps_ramsey::ramsey::skolem::{build_beta, delta_sel};
use eps_ramsey::ramsey::wkl::ConstPairControl;
use eps_ramsey::ramsey::{ErTree, SeededColouring};
use eps_ramsey::{Budget, Result};

pub fn run() -> Result<()> {
    let c = SeededColouring::new(3);
    let tree = ErTree::new(&c, Budget::default());

    // iterate x -> 2x + 3 from 0 until no word of length 3 appears in between
    let d = delta_sel(&tree, 3, &mut |x: &usize| Ok(2 * x + 3))?;
    println!("δ_3 for x -> 2x + 3: {d}");

    for w in 0..=3 {
        let beta = build_beta(&tree, &ConstPairControl(w))?;
        let bad = skolem_violation(&c, &beta.beta, beta.outcome, beta.control.min(6));
        println!(
            "ω = {w}: β = {:?}, certified up to length {} for witnesses <= {}, violation {bad:?}",
            beta.beta, beta.control, beta.outcome
        );
    }
    println!("work used: {}", tree.budget().used());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().unwrap();
}
