//! Verification engine for the classification of non-polar irreducible
//! representations whose orbit space matches that of a finite extension of
//! `Sp(1)^k`.
//!
//! The crate has two layers:
//!
//! * exact combinatorics — weight multisets of `Sp(1)^k` irreducibles, the
//!   dimension-formula case scans (connected, outer, inner), and rank-4
//!   reflection groups, all in integer/rational arithmetic;
//! * numerical certificates — explicit real matrix models of the concrete
//!   representations with seeded rank computations for cohomogeneity,
//!   polarity, isotropy dimensions and fixed subspaces.
//!
//! Every case verdict is emitted as a machine-checkable certificate that can
//! be re-derived from its recorded inputs.

pub mod boundary;
pub mod cert;
pub mod coxeter;
pub mod error;
pub mod report;
pub mod reps;
pub mod weight;

pub use cert::{CaseCertificate, Justification, Verdict, ENGINE_VERSION};
pub use error::Error;
pub use weight::{IrrepSpec, RepClass, Weight, WeightMultiset};

/// Exact rational scalar used by the combinatorial scans.
pub type Rational = num_rational::Ratio<i64>;
