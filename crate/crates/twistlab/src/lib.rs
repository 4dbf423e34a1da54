//! twistlab: exact-arithmetic and numerical toolkit for Dehn-twist
//! infinite-order certificates.
//!
//! The crate is organised around the finite computations behind the
//! certificates: Novikov-field arithmetic (`novikov`), supertraces of
//! graded maps (`graded`), exact chain-complex homology (`homology`),
//! Picard-Lefschetz twist actions (`picard_lefschetz`), truncated A∞ bar
//! complexes (`ainfinity`), Grassmannian involution combinatorics
//! (`grassmann`), spectral-flow monodromy checks (`spectral_flow`), and
//! the report pipeline (`pipeline`) behind the `twistlab` CLI.

pub mod ainfinity;
pub mod graded;
pub mod grassmann;
pub mod homology;
pub mod matrix;
pub mod novikov;
pub mod picard_lefschetz;
pub mod pipeline;
pub mod spectral_flow;
