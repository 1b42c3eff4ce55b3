//! Finite involutive non-degenerate set-theoretic solutions of the
//! Yang-Baxter equation.
//!
//! A solution on `X = {x_1, ..., x_n}` is stored through its left actions
//! `σ_i` and right actions `γ_j`, with `r(x_i, x_j) = (x_{σ_i(j)}, x_{γ_j(i)})`.
//! Points are 0-based in the API and 1-based in every text format.
//!
//! ```
//! use ybe::{corpus, retract, twisted};
//!
//! let s = corpus::e24();
//! assert!(s.iyb_group().is_abelian());
//! assert_eq!(retract::multipermutation_level(&s).unwrap(), Some(3));
//! assert!(twisted::find_gtu_decomposition(&s).unwrap().is_none());
//! ```

pub mod canon;
pub mod cli;
pub mod corpus;
pub mod enumerate;
pub mod error;
pub mod json;
pub mod partition;
pub mod perm;
pub mod retract;
pub mod solution;
pub mod structure;
pub mod sweep;
pub mod twisted;

pub use error::{Error, Result};
pub use partition::Partition;
pub use perm::{Perm, PermGroup};
pub use solution::{Failure, Pair, RTable, Solution, ValidationReport};
pub use structure::{StructureElem, Word};
