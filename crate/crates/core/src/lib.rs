//! Weyl alternation sets, Kostant's partition function and q-analog weight
//! multiplicities for the Lie algebra sl_{r+1} (root system A_r).
//!
//! The main entry points:
//!
//! * [`partition::kostant_q`]: the q-analog of Kostant's partition function,
//!   with a brute-force [`partition::kostant_q_oracle`] alongside it.
//! * [`alternation::alt_set_bruteforce`] and
//!   [`alternation::alt_set_characterized`]: the Weyl alternation set
//!   𝒜(α̃, μ) by group enumeration and by its nonconsecutive-generator
//!   description.
//! * [`multiplicity::q_multiplicity`]: m_q(λ, μ) by the full alternating sum,
//!   by the alternation set, or by closed-form terms.
//!
//! Loops over the Weyl group run on rayon when the `parallel` feature is
//! enabled (the default); [`Execution::Sequential`] selects the plain loop.

pub mod alternation;
pub mod combinatorics;
pub mod error;
pub mod exec;
pub mod multiplicity;
pub mod partition;
pub mod poly;
pub mod verify;
pub mod weights;
pub mod weyl;

pub use alternation::{AlternationSet, Provenance, Side};
pub use error::{Error, Result};
pub use exec::{Execution, Settings};
pub use multiplicity::{Method, MultiplicityReport};
pub use poly::{Polynomial, QPolynomial, SignedQPolynomial};
pub use weights::{RootInterval, Weight};
pub use weyl::WeylElement;
