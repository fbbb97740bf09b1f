// The whole construction: a colour and a map `F` that is monochromatic for
// as long as a given counterexample functional can check.
//
// `cargo run --release --example ramsey_witness -- seed:4 fmax:2:8`

use eps_ramsey::cli::ColouringSpec;
use eps_ramsey::ramsey::{run_pipeline, CounterexampleSpec};
use eps_ramsey::{Budget, Error, Result};

fn solve(colouring: &str, eta: &str) -> Result<()> {
    let spec: ColouringSpec = colouring.parse()?;
    let eta: CounterexampleSpec = eta.parse()?;
    let (result, counters) = run_pipeline(spec.colouring(), &eta, Budget::new(5_000_000));
    match result {
        Ok(w) => {
            println!("{colouring} / {eta}: x = {}, F = {:?}, checked up to {}", w.colour, w.f, w.eta_value);
            println!("  verified: {} ({} checks)", w.report.pass, w.report.checks_performed);
            println!("  β = {:?}, α = {:?}", w.beta.beta, w.alpha);
        }
        Err(Error::BudgetExceeded { used, .. }) => println!("{colouring} / {eta}: gave up after {used} steps"),
        Err(e) => return Err(e),
    }
    println!("  {counters:?}");
    Ok(())
}

pub fn run() -> Result<()> {
    solve("formula:zero", "const:1")?;
    solve("formula:parity", "const:1")?;
    solve("seed:4", "fmax:2:8")?;
    solve("seed:9", "xswitch:1:2")
}

#[allow(dead_code)]
fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let outcome = match args.as_slice() {
        [c, e] => solve(c, e),
        [] => run(),
        _ => {
            eprintln!("usage: ramsey_witness [<colouring> <eta>]");
            std::process::exit(2);
        }
    };
    if let Err(e) = outcome {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
