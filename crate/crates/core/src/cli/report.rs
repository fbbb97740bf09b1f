use std::io::{self, Write};

use serde::{Deserialize, Serialize};

use super::OutputFormat;
use crate::oracles::{VerificationReport, Violation};
use crate::ramsey::pipeline::{CounterexampleSpec, Counters};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterReport {
    pub eps_nodes: u64,
    pub depth_evaluations: u64,
    pub witness_scans: u64,
    pub prec_memo_size: usize,
    pub alpha_runs: u64,
    pub budget_used: u64,
    pub fallbacks: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl CounterReport {
    pub fn new(c: Counters, elapsed_ms: Option<u64>) -> Self {
        CounterReport {
            eps_nodes: c.eps_nodes,
            depth_evaluations: c.depth_evaluations,
            witness_scans: c.witness_scans,
            prec_memo_size: c.prec_memo_size,
            alpha_runs: c.alpha_runs,
            budget_used: c.budget_used,
            fallbacks: c.fallbacks,
            elapsed_ms,
        }
    }

    fn write_text(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(out, "eps nodes:         {}", self.eps_nodes)?;
        writeln!(out, "depth evaluations: {}", self.depth_evaluations)?;
        writeln!(out, "witness scans:     {}", self.witness_scans)?;
        writeln!(out, "prec memo size:    {}", self.prec_memo_size)?;
        writeln!(out, "branch runs:       {}", self.alpha_runs)?;
        writeln!(out, "budget used:       {}", self.budget_used)?;
        writeln!(out, "fallbacks:         {}", self.fallbacks)?;
        if let Some(ms) = self.elapsed_ms {
            writeln!(out, "elapsed:           {ms} ms")?;
        }
        Ok(())
    }
}

/// The structured output of `solve`, which doubles as the witness file
/// format read back by `verify`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveReport {
    pub colouring: String,
    pub eta: String,
    pub budget: u64,
    pub x: u8,
    pub f: Vec<usize>,
    pub eta_value: usize,
    pub verified: bool,
    pub first_violation: Option<Violation>,
    pub checks_performed: u64,
    pub counters: CounterReport,
}

fn violation_text(v: &Violation) -> String {
    format!("k = {}, (i, j) = ({}, {}): {}", v.k, v.i, v.j, v.reason)
}

impl SolveReport {
    pub fn write(&self, format: OutputFormat, out: &mut dyn Write) -> io::Result<()> {
        match format {
            OutputFormat::Json => {
                serde_json::to_writer_pretty(&mut *out, self)?;
                writeln!(out)
            }
            OutputFormat::Text => {
                writeln!(out, "colouring: {}", self.colouring)?;
                writeln!(out, "eta:       {}", self.eta)?;
                writeln!(out, "x = {}", self.x)?;
                let f: Vec<String> = self.f.iter().map(ToString::to_string).collect();
                writeln!(out, "F = [{}]", f.join(", "))?;
                writeln!(out, "eta_x F = {}", self.eta_value)?;
                match &self.first_violation {
                    None => writeln!(out, "verified ({} checks)", self.checks_performed)?,
                    Some(v) => writeln!(out, "FAILED at {}", violation_text(v))?,
                }
                self.counters.write_text(out)
            }
        }
    }
}

#[derive(Serialize)]
struct Partial<'a> {
    colouring: &'a str,
    eta: String,
    budget: u64,
    error: &'static str,
    counters: &'a CounterReport,
}

pub fn write_partial(
    colouring: &str,
    eta: &CounterexampleSpec,
    budget: u64,
    counters: &CounterReport,
    format: OutputFormat,
    out: &mut dyn Write,
) -> io::Result<()> {
    match format {
        OutputFormat::Json => {
            let p = Partial {
                colouring,
                eta: eta.to_string(),
                budget,
                error: "budget exceeded",
                counters,
            };
            serde_json::to_writer_pretty(&mut *out, &p)?;
            writeln!(out)
        }
        OutputFormat::Text => {
            writeln!(out, "budget of {budget} steps exceeded")?;
            counters.write_text(out)
        }
    }
}

pub fn write_verification(
    report: &VerificationReport,
    format: OutputFormat,
    out: &mut dyn Write,
) -> io::Result<()> {
    match format {
        OutputFormat::Json => {
            serde_json::to_writer_pretty(&mut *out, report)?;
            writeln!(out)
        }
        OutputFormat::Text => match &report.first_violation {
            None => writeln!(out, "verified ({} checks)", report.checks_performed),
            Some(v) => writeln!(out, "FAILED at {}", violation_text(v)),
        },
    }
}
