// Approximate infinite pigeonhole: a colour and a map `p` that stays in it
// for as long as the demand asks.

use eps_ramsey::ramsey::pigeonhole::iphp_realizer;
use eps_ramsey::selection::Evaluator;
use eps_ramsey::Result;

pub fn run() -> Result<()> {
    // colour 1 on multiples of 3, 0 elsewhere
    let colour = |n: usize| Ok(u8::from(n.is_multiple_of(3)));
    // the demand looks at the candidate before deciding how far to check it
    let demand = |x: u8, p: &mut Evaluator<'_, usize, usize>| Ok(if x == 0 { 4 } else { p(&1)?.min(6) });

    let game = iphp_realizer(&colour, &demand)?;
    let x = game.colour();
    let bound = game.demand_value()?;
    println!("colour {x}, witness {:?}, checked up to {bound}", game.witness());
    for i in 0..=bound {
        let v = game.p(i)?;
        println!("p({i}) = {v}, colour {}", colour(v)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().unwrap();
}
