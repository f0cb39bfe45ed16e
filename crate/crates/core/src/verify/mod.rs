//! Property suites over parameter grids, with pass/fail per check and the
//! first failing case as a witness.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::par::par_map;

mod coinv;
mod current;
mod kostka;
mod theta;
mod weyl;

pub use self::coinv::coinv_suite;
pub use self::current::current_suite;
pub use self::kostka::kostka_suite;
pub use self::theta::theta_suite;
pub use self::weyl::weyl_suite;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Non-gating checks are reported but do not fail the suite.
    pub gating: bool,
    pub cases: usize,
    pub witness: Option<String>,
}

impl Check {
    /// Evaluate `f` on every case; `f` returns a witness on failure. The
    /// reported witness is the first in case order.
    pub fn run<C, F>(name: &str, cases: &[C], f: F) -> Check
    where
        C: Sync,
        F: Fn(&C) -> Option<String> + Sync + Send,
    {
        let witness = par_map(cases, f).into_iter().flatten().next();
        Check {
            name: name.to_string(),
            passed: witness.is_none(),
            gating: true,
            cases: cases.len(),
            witness,
        }
    }

    pub fn advisory(mut self) -> Check {
        self.gating = false;
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Grid {
    pub n: usize,
    #[serde(rename = "N")]
    pub total: u32,
    pub cutoff: u32,
    pub jmax: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub grid: Grid,
    pub checks: Vec<Check>,
    /// Kept out of the serialized report so output is reproducible.
    #[serde(skip)]
    pub wall_ms: u64,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed || !c.gating)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = &self.grid;
        writeln!(
            f,
            "suite {} (n={}, N={}, cutoff={}, jmax={}) {} ms",
            self.suite, g.n, g.total, g.cutoff, g.jmax, self.wall_ms
        )?;
        for c in &self.checks {
            let status = match (c.passed, c.gating) {
                (true, _) => "PASS",
                (false, true) => "FAIL",
                (false, false) => "FAIL (non-gating)",
            };
            writeln!(f, "  {status:<18} {:<48} {:>7} cases", c.name, c.cases)?;
            if let Some(w) = &c.witness {
                writeln!(f, "      witness: {w}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Current,
    Theta,
    Coinv,
    Kostka,
    Weyl,
    All,
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Suite, String> {
        Ok(match s {
            "current" => Suite::Current,
            "theta" => Suite::Theta,
            "coinv" => Suite::Coinv,
            "kostka" => Suite::Kostka,
            "weyl" => Suite::Weyl,
            "all" => Suite::All,
            _ => return Err(format!("unknown suite {s:?}")),
        })
    }
}

fn timed(name: &str, grid: Grid, f: impl FnOnce() -> Vec<Check>) -> Report {
    let start = Instant::now();
    let checks = f();
    Report {
        suite: name.to_string(),
        grid,
        checks,
        wall_ms: start.elapsed().as_millis() as u64,
    }
}

/// Run one suite, or all five in a fixed order.
pub fn run(suite: Suite, grid: Grid) -> Vec<Report> {
    let one = |s: Suite| match s {
        Suite::Current => timed("current", grid, || current_suite(grid)),
        Suite::Theta => timed("theta", grid, || theta_suite(grid)),
        Suite::Coinv => timed("coinv", grid, || coinv_suite(grid)),
        Suite::Kostka => timed("kostka", grid, || kostka_suite(grid)),
        Suite::Weyl => timed("weyl", grid, || weyl_suite(grid)),
        Suite::All => unreachable!(),
    };
    match suite {
        Suite::All => [
            Suite::Current,
            Suite::Theta,
            Suite::Coinv,
            Suite::Kostka,
            Suite::Weyl,
        ]
        .into_iter()
        .map(one)
        .collect(),
        s => vec![one(s)],
    }
}
