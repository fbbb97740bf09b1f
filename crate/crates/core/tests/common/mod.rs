#![allow(dead_code)]

use eps_ramsey::games::Game;
use eps_ramsey::selection::{at, family, ArgMax, ArgMin, ConstControl, Evaluator, Selection};
use rand::Rng;

/// A finite game on 𝔹 with `ω ≡ control`. Outcomes come from a random table
/// over the first `control + 1` moves; each position picks argmax, argmin or a
/// constant move at random.
pub struct RandomGame {
    pub control: usize,
    pub table: Vec<usize>,
    pub kinds: Vec<u8>,
}

impl RandomGame {
    pub fn sample(rng: &mut impl Rng, max_control: usize, max_value: usize) -> Self {
        let control = rng.gen_range(0..=max_control);
        let plays = 1usize << (control + 1);
        RandomGame {
            control,
            table: (0..plays).map(|_| rng.gen_range(0..=max_value)).collect(),
            kinds: (0..2 * plays).map(|_| rng.gen_range(0..4)).collect(),
        }
    }

    pub fn depth(&self) -> usize {
        self.control + 1
    }

    pub fn game(&self) -> Game<'_, u8, usize> {
        let depth = self.depth();
        let outcome = move |play: &[u8]| {
            let idx = (0..depth).fold(0, |acc, i| 2 * acc + usize::from(at(play, i) & 1));
            Ok(self.table[idx])
        };
        let fam = family(move |s: &[u8], p: &mut Evaluator<'_, u8, usize>| {
            let idx = s.iter().fold(1usize, |acc, &b| 2 * acc + usize::from(b & 1));
            match self.kinds[idx % self.kinds.len()] {
                0 | 1 => ArgMax(vec![0u8, 1]).select(p),
                2 => ArgMin(vec![0u8, 1]).select(p),
                _ => Ok((idx % 2) as u8),
            }
        });
        Game::new(fam, outcome, ConstControl(self.control))
    }
}

/// Every word over 𝔹 of length `n`.
pub fn words(n: usize) -> impl Iterator<Item = Vec<u8>> {
    (0..1usize << n).map(move |b| (0..n).map(|i| ((b >> (n - 1 - i)) & 1) as u8).collect())
}

/// Prints the line the acceptance target is read by.
pub fn report(id: u32, name: &str, ok: bool, detail: &str) {
    let verdict = if ok { "PASS" } else { "FAIL" };
    println!("{verdict} criterion {id:>2} {name}: {detail}");
}
