// Selection functions and their binary and finite products.

use eps_ramsey::selection::{attain, binary_product, finite_product, ArgMax, ArgMin, BoundedMu, Selection};
use eps_ramsey::Result;

pub fn run() -> Result<()> {
    let moves: Vec<i64> = (-3..=3).collect();
    let max = ArgMax(moves.clone());
    let min = ArgMin(moves.clone());

    // attainment is the best value the selection can reach
    let v = attain(&max, &mut |x: &i64| Ok(-(x - 1) * (x - 1)))?;
    println!("max of -(x - 1)^2 over -3..=3: {v}");

    // least i <= 20 with i * i >= 50, or 20 when there is none
    let mu = BoundedMu { bound: 20, pred: |_, sq: &usize| *sq >= 50 };
    println!("least root above 50: {}", mu.select(&mut |i: &usize| Ok(i * i))?);

    // maximiser moves first, minimiser replies
    let (a, b) = binary_product(&max, |_: &i64| min.clone(), |x: &i64, y: &i64| Ok(x * y + x))?;
    println!("max-min of x*y + x: x = {a}, y = {b}, value {}", a * b + a);

    let rounds: [&dyn Selection<i64, i64>; 3] = [&max, &min, &max];
    let play = finite_product(&rounds, &|s: &[i64]| Ok(s[0] - 2 * s[1] + s[0] * s[2]))?;
    println!("three-round play: {play:?}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().unwrap();
}
