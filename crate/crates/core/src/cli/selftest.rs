use std::io::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{io, EXIT_FAILED, EXIT_OK};
use crate::error::{Budget, Error, Result};
use crate::games::{optimal_play, verify_optimal_play, Game};
use crate::oracles::{brute_force_play, canonical_branch, exact_beta_oracle, NaivePrec};
use crate::ramsey::colouring::{ParityColouring, SeededColouring, ZeroColouring};
use crate::ramsey::pipeline::{ramsey_pipeline, CounterexampleSpec};
use crate::ramsey::tree::ErTree;
use crate::selection::{at, family, ArgMax, ArgMin, ConstControl, Evaluator, Selection};

fn random_game(rng: &mut ChaCha8Rng, depth: usize) -> Game<'static, u8, usize> {
    let table: Vec<usize> = (0..1usize << depth).map(|_| rng.gen_range(0..4)).collect();
    let kinds: Vec<u8> = (0..1usize << depth).map(|_| rng.gen_range(0..3)).collect();
    let outcome = move |play: &[u8]| {
        let idx = (0..depth).fold(0, |acc, i| 2 * acc + usize::from(at(play, i)));
        Ok(table[idx])
    };
    let fam = family(move |s: &[u8], p: &mut Evaluator<'_, u8, usize>| {
        let idx = s.iter().fold(1usize, |acc, &b| 2 * acc + usize::from(b));
        match kinds[idx % kinds.len()] {
            0 => ArgMax(vec![0u8, 1]).select(p),
            1 => ArgMin(vec![0u8, 1]).select(p),
            _ => Ok(1),
        }
    });
    Game::new(fam, outcome, ConstControl(depth - 1))
}

fn games_agree(seed: u64) -> Result<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..100 {
        let depth = rng.gen_range(1..=3);
        let g = random_game(&mut rng, depth);
        let b = Budget::default();
        let play = optimal_play(&g, &b)?;
        if play != brute_force_play(&g, depth)? || !verify_optimal_play(&g, &play, &b)?.passed() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn closed_forms() -> Result<bool> {
    let z = ZeroColouring;
    let tree = ErTree::unbounded(&z);
    let chain = (0..20).all(|i| (0..i).all(|j| tree.prec(j, i)));
    let branches = (0..=20).all(|n| canonical_branch(&z, n) == vec![0; n]);
    let beta = exact_beta_oracle(&z, 20, 1000)?;
    let exact = (1..=20).all(|n| beta[n] == n);
    let w = ramsey_pipeline(&z, &CounterexampleSpec::Const(1))?;
    Ok(chain && branches && exact && w.colour == 0 && w.report.pass)
}

fn tree_laws(seed: u64) -> Result<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for colour_seed in 1..=5 {
        let c = SeededColouring::new(colour_seed);
        let tree = ErTree::unbounded(&c);
        let mut naive = NaivePrec::new(&c);
        for _ in 0..200 {
            let len = rng.gen_range(0..=6);
            let s: Vec<u8> = (0..len).map(|_| rng.gen_range(0..2)).collect();
            let cut = rng.gen_range(0..=len);
            let k = rng.gen_range(0..=20);
            let l = rng.gen_range(0..=5);
            let full = tree.t_prime(&s, k)?;
            if full && !tree.t_prime(&s[..cut], k)? {
                return Ok(false);
            }
            if full && !tree.t_prime(&s, k + l)? {
                return Ok(false);
            }
            if full != naive.t_prime(&s, k) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn pipelines() -> Result<bool> {
    let p = ParityColouring;
    let mut ok = ramsey_pipeline(&p, &CounterexampleSpec::Const(1))?.report.pass;
    for seed in 1..=3 {
        let c = SeededColouring::new(seed);
        ok &= ramsey_pipeline(&c, &CounterexampleSpec::Const(1))?.report.pass;
        ok &= ramsey_pipeline(&c, &CounterexampleSpec::FMax { m: 2, cap: 8 })?.report.pass;
    }
    Ok(ok)
}

type Check = Box<dyn Fn() -> Result<bool>>;

pub(super) fn run(seed: u64, out: &mut dyn Write) -> Result<i32, Error> {
    let checks: [(&str, Check); 4] = [
        ("product play equals backward induction", Box::new(move || games_agree(seed))),
        ("closed forms for the zero colouring", Box::new(closed_forms)),
        ("tree laws and naive agreement", Box::new(move || tree_laws(seed))),
        ("end-to-end witnesses verify", Box::new(pipelines)),
    ];
    let mut all = true;
    for (name, check) in checks.iter() {
        let ok = check()?;
        all &= ok;
        writeln!(out, "{} {name}", if ok { "PASS" } else { "FAIL" }).map_err(io)?;
    }
    Ok(if all { EXIT_OK } else { EXIT_FAILED })
}
