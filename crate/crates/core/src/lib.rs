//! Exact computations with the polynomial 2-representation of categorified
//! quantum sl_n: block-symmetric rings, the bimodule images of the generating
//! 2-morphisms, the current-algebra action, coinvariant algebras,
//! Kostka–Foulkes polynomials and graded characters of local Weyl modules.

pub mod coinv;
pub mod combinat;
pub mod current;
pub mod error;
pub mod kostka;
pub mod linalg;
pub mod par;
pub mod poly;
pub mod sympoly;
pub mod theta;
pub mod tpoly;
pub mod verify;
pub mod weyl;

pub use combinat::{Composition, Partition, Sign};
pub use error::{Error, Result};
pub use poly::{MPoly, Monomial};
pub use sympoly::{BlockSymPoly, Kind};
pub use tpoly::TPoly;
