pub mod adem;
pub mod cli;
pub mod error;
pub mod f2;
pub mod matrix;
pub mod modules;
pub mod parse;
pub mod poly;
pub mod report;

pub use adem::{admissible_basis, normalize, product, AdemElement, Normalizer, SqWord};
pub use error::{Error, Result};
pub use f2::{adem_coeff, binom_mod2, FormalSum, F2};
pub use poly::{act, cup, sq, total_sq, PolyElement, PolyMonomial};
