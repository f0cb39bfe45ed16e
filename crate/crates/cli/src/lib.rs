//! Command-line front end for `polrep`.

pub mod app;
pub mod expr;

pub use app::{run, Outcome};
pub use expr::{eval, parse_expr, parse_poly, render, Expr};
