//! Separations, massed pairs, rigidity and local minimization of pairs.

mod minimal;
mod rigid;
mod separation;

pub use minimal::{is_local_minimum, minimize_pair, LoggedMove, MinimizeOptions, MinimizeOutcome, Move};
pub use rigid::{is_knitted_pair, is_rigid, KnitConvention, KnitVerdict};
pub use separation::{enumerate_separations, is_p_massed, MassedReport, Rational, Separation, SeparationStream};
