//! Subcommand dispatch. Every command writes one document to standard output.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use polrep::coinv::{coinv_graded_dim_both, coinv_graded_dim_formula, coinv_graded_dim_linear};
use polrep::current::{apply, GeneratorSymbol, WeightVector};
use polrep::kostka::{kostka_foulkes, kostka_number};
use polrep::theta::{bubble_image, pi_image, Orientation};
use polrep::verify::{self, Grid, Suite};
use polrep::weyl::{weyl_graded_character, weyl_weight_graded_dim};
use polrep::{Composition, Error, Partition};

use crate::expr::{parse_poly, render};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "polrep",
    version,
    about = "Polynomial 2-representation of categorified sl_n"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Kostka-Foulkes polynomial K_{lambda,mu}(t), or the Kostka number.
    Kostka {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Composition,
        /// Print the number of semistandard tableaux instead.
        #[arg(long)]
        number: bool,
    },
    /// Graded dimension of the coinvariant algebra C^lambda_nu.
    CoinvDim {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        nu: Composition,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Graded character of the local Weyl module W(lambda).
    WeylChar {
        #[arg(long)]
        lambda: Partition,
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        #[arg(long)]
        csv: bool,
    },
    /// Graded dimension of one weight space of W(lambda).
    WeylDim {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        nu: Composition,
    },
    /// Apply E_{i,j}, F_{i,j} or H_{i,j} to a polynomial in P_nu.
    Act {
        #[arg(long = "gen", value_enum)]
        generator: Gen,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: u32,
        #[arg(long)]
        nu: Composition,
        #[arg(long)]
        poly: String,
    },
    /// Closed diagrams evaluated in P_nu.
    Theta {
        #[command(subcommand)]
        cmd: ThetaCmd,
    },
    /// Run property suites over all weights with n parts summing to N.
    Verify(VerifyArgs),
}

#[derive(Debug, Subcommand)]
enum ThetaCmd {
    /// Bubble of degree 2r.
    Bubble {
        #[arg(long)]
        i: usize,
        #[arg(long)]
        nu: Composition,
        #[arg(long, allow_negative_numbers = true)]
        r: i64,
        #[arg(long, value_enum)]
        orientation: Orient,
    },
    /// The element pi_{i,j}.
    Pi {
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: u32,
        #[arg(long)]
        nu: Composition,
    },
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, default_value = "all")]
    suite: Suite,
    #[arg(long)]
    n: usize,
    #[arg(long = "N")]
    total: u32,
    #[arg(long, default_value_t = 3)]
    cutoff: u32,
    #[arg(long, default_value_t = 2)]
    jmax: u32,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Method {
    Linear,
    Formula,
    Both,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Gen {
    #[value(name = "E")]
    E,
    #[value(name = "F")]
    F,
    #[value(name = "H")]
    H,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Orient {
    Cw,
    Ccw,
}

/// Exit code and the text destined for each stream.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(doc: String) -> Outcome {
        Outcome {
            code: EXIT_OK,
            stdout: doc + "\n",
            stderr: String::new(),
        }
    }

    fn usage(msg: impl std::fmt::Display) -> Outcome {
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

fn check_index(i: usize, nu: &Composition) -> Result<(), Error> {
    if i == 0 || i >= nu.n() {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: nu.n().saturating_sub(1),
        });
    }
    Ok(())
}

/// Run the command line `args` (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(text.trim_end().to_string())
            };
        }
    };
    match dispatch(cli.cmd) {
        Ok(out) => out,
        Err(e) => Outcome::usage(e),
    }
}

fn dispatch(cmd: Cmd) -> Result<Outcome, Error> {
    let doc = match cmd {
        Cmd::Kostka { lambda, mu, number } => {
            if number {
                json!(kostka_number(&lambda, &mu)?)
            } else {
                json!(kostka_foulkes(&lambda, &mu)?)
            }
        }
        Cmd::CoinvDim { lambda, nu, method } => match method {
            Method::Linear => json!(coinv_graded_dim_linear(&lambda, &nu)?),
            Method::Formula => json!(coinv_graded_dim_formula(&lambda, &nu)?),
            Method::Both => match coinv_graded_dim_both(&lambda, &nu)? {
                Ok(dim) => json!(dim),
                Err((linear, formula)) => {
                    let doc = json!({ "linear": linear, "formula": formula });
                    return Ok(Outcome {
                        code: EXIT_FAILED,
                        stdout: doc.to_string() + "\n",
                        stderr: "error: the two methods disagree\n".into(),
                    });
                }
            },
        },
        Cmd::WeylChar { lambda, csv, .. } => {
            let table = weyl_graded_character(&lambda)?;
            if csv {
                return Ok(Outcome {
                    code: EXIT_OK,
                    stdout: table.to_csv(),
                    stderr: String::new(),
                });
            }
            json!(table)
        }
        Cmd::WeylDim { lambda, nu } => json!(weyl_weight_graded_dim(&lambda, &nu)?),
        Cmd::Act {
            generator,
            i,
            j,
            nu,
            poly,
        } => {
            check_index(i, &nu)?;
            let p = parse_poly(&poly, &nu)?;
            let g = match generator {
                Gen::E => GeneratorSymbol::e(i, j),
                Gen::F => GeneratorSymbol::f(i, j),
                Gen::H => GeneratorSymbol::h(i, j),
            };
            let out = apply(g, &WeightVector::new(nu, p.poly));
            match out.nu {
                Some(nu) => json!({ "nu": nu, "poly": render(&out.p) }),
                None => json!({ "nu": null, "poly": "0" }),
            }
        }
        Cmd::Theta { cmd } => match cmd {
            ThetaCmd::Bubble {
                i,
                nu,
                r,
                orientation,
            } => {
                check_index(i, &nu)?;
                let o = match orientation {
                    Orient::Cw => Orientation::Cw,
                    Orient::Ccw => Orientation::Ccw,
                };
                json!({ "nu": nu, "poly": render(&bubble_image(i, &nu, r, o)) })
            }
            ThetaCmd::Pi { i, j, nu } => {
                check_index(i, &nu)?;
                json!({ "nu": nu, "poly": render(&pi_image(i, j, &nu)) })
            }
        },
        Cmd::Verify(a) => {
            let grid = Grid {
                n: a.n,
                total: a.total,
                cutoff: a.cutoff,
                jmax: a.jmax,
            };
            let reports = verify::run(a.suite, grid);
            let passed = reports.iter().all(|r| r.passed());
            // the human-readable table carries timings; the document does not
            let table: String = reports.iter().map(|r| r.to_string()).collect();
            let doc = json!({ "passed": passed, "reports": reports });
            return Ok(Outcome {
                code: if passed { EXIT_OK } else { EXIT_FAILED },
                stdout: doc.to_string() + "\n",
                stderr: table,
            });
        }
    };
    Ok(Outcome::ok(doc.to_string()))
}
