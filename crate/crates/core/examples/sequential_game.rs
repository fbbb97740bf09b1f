// An unbounded product over binary moves, checked against backward induction.

use eps_ramsey::games::{optimal_play, verify_optimal_play, Game};
use eps_ramsey::oracles::brute_force_play;
use eps_ramsey::selection::{at, family, argmax_bool, argmin_bool, ConstControl, Evaluator, Selection};
use eps_ramsey::{Budget, Result};

pub fn run() -> Result<()> {
    // players alternate; even rounds maximise, odd rounds minimise
    let fam = family(|s: &[u8], p: &mut Evaluator<'_, u8, i64>| {
        if s.len().is_multiple_of(2) {
            argmax_bool().select(p)
        } else {
            argmin_bool().select(p)
        }
    });
    let table = [3, 12, 8, 2, 4, 6, 14, 5];
    let outcome = move |play: &[u8]| {
        let idx = (0..3).fold(0, |acc, i| 2 * acc + usize::from(at(play, i)));
        Ok(table[idx])
    };
    let game = Game::new(fam, outcome, ConstControl(2));
    let budget = Budget::default();

    let mut solver = game.solver(&budget);
    let play = solver.extension(&[])?;
    assert_eq!(play, optimal_play(&game, &budget)?);
    let report = verify_optimal_play(&game, &play, &budget)?;
    println!("play {play:?}, value {}", game.outcome.outcome(&play)?);
    println!("equilibrium at every round: {}", report.passed());
    println!("backward induction agrees: {}", brute_force_play(&game, 3)? == play);
    println!("positions expanded: {}", solver.stats().nodes);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().unwrap();
}
