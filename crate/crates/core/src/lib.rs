//! Exact computation of Kostant cascades and of the index of parabolic
//! subalgebras and their nilpotent radicals.
//!
//! The crate has two independent routes to the same numbers:
//!
//! * [`index`] evaluates the closed combinatorial formulas
//!   (χ(p_S), χ(u_S), the sum formula and the equality classification)
//!   from the cascade data in [`cascade`];
//! * [`chevalley`] builds the Lie algebra from a Chevalley basis and
//!   measures the index directly as dim minus the generic rank of the
//!   skew form f([·,·]).
//!
//! [`verify`] cross-checks the two routes and the classification
//! exhaustively. All arithmetic is exact: integer root coordinates,
//! integer structure constants, and fraction-free rank computation over ℚ.
//!
//! Simple roots follow Bourbaki numbering throughout (1-based in all
//! reports and on the CLI).

pub mod cascade;
pub mod chevalley;
pub mod error;
pub mod index;
pub mod linalg;
pub mod report;
pub mod rootsys;
pub mod verify;

pub use error::Error;
