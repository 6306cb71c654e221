//! Exact decisions about the order of synthetic channels of polar codes over
//! the binary erasure channel.
//!
//! A word over `{0, 1, 2, 3}` names a composition of the capacity maps
//! `x^2`, `1 - (1 - x)^2`, `sqrt(x)` and `1 - sqrt(1 - x)`. Words are compared
//! by deciding `I_p(x) >= I_q(x)` on `[0, 1]` exactly, either through integer
//! polynomials or through elimination of nested square roots.

pub mod error;
pub mod miner;
pub mod order;
pub mod partition;
pub mod poly;
pub mod radical;
pub mod serde_util;
pub mod verdict;
pub mod words;

pub use error::{Error, Result};
pub use poly::{IntPolynomial, Rational, Sign};
pub use verdict::{Judgement, Relation, Verdict, Witness};
pub use words::{BinaryWord, QuaternaryWord};
