//! Symbolic powers of edge ideals of unicyclic graphs with a unique odd cycle.
//!
//! Given a graph `G` carrying a designated induced odd cycle `C_{2n+1}`, this
//! crate computes, in exact integer/rational arithmetic:
//!
//! - minimum edge covers for the cycle inside `G` and the counting sequences
//!   `d'`, `d''`, `d` of edge sets containing such a cover ([`covers`]);
//! - ordinary and symbolic powers of the edge ideal `I(G)` ([`edge_ideal`]);
//! - all symbolic defects `sdefect(I, s) = μ(I^(s)/I^s)` in closed form
//!   ([`sdefect`]);
//! - the Hilbert function of `I^(s)/I^s` and the least exponent `γ(s)` with
//!   `m^γ(s) · I^(s) ⊆ I^s` ([`hilbert`]);
//! - the quasi-polynomial of quasi-period `n+1` governing the defect sequence
//!   ([`quasipoly`]).
//!
//! Every closed form is paired with an independent brute-force oracle
//! (exhaustive subset enumeration, vertex-cover prime intersections, degree
//! slice counting) so that results can be cross-checked mechanically.

pub mod arith;
pub mod covers;
pub mod edge_ideal;
pub mod error;
pub mod graph;
pub mod hilbert;
pub mod monomial;
pub mod quasipoly;
pub mod sdefect;

pub use arith::{binomial, multichoose};
pub use covers::{
    brute_count, combined_counts, enumerate_min_covers, type1_counts, type2_counts,
    CoverCountTable, CoverKind, MinCover,
};
pub use edge_ideal::{
    edge_factorizations, edge_ideal, factor_into_edges, gamma_oracle, hilbert_oracle,
    ordinary_power, sdefect_oracle, symbolic_power_formula, symbolic_power_oracle,
    SymbolicPowerDecomposition,
};
pub use error::{Error, Result};
pub use graph::{CycleParams, Guards, MarkedGraph};
pub use hilbert::{gamma_closed, hilbert_closed, HilbertTable};
pub use monomial::{Monomial, MonomialIdeal};
pub use quasipoly::{fit, QuasiPolynomial, ResiduePoly};
pub use sdefect::{SdefectEngine, SdefectReport};
