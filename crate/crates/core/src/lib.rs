//! Complete sets of mutually unbiased bases built from graph states.
//!
//! For a prime `p` and `n` qupits, a symmetric `n x n` matrix `Q` over Z_p
//! with irreducible characteristic polynomial generates `p^n` adjacency
//! matrices `sum a_i Q^i`. Their graph-state bases, together with the
//! computational basis, form `p^n + 1` mutually unbiased bases.
//!
//! ```
//! use graphmub::{mub_set, verify_lemma1, MubOptions, PrimeModulus};
//!
//! let p = PrimeModulus::new(2).unwrap();
//! let set = mub_set(p, 3, &MubOptions::default()).unwrap();
//! assert_eq!(set.dimension(), 8);
//! assert!(verify_lemma1(&set).passed());
//! ```

pub mod catalog;
pub mod entangle;
pub mod error;
pub mod export;
pub mod field;
pub mod matrix;
pub mod mubset;
pub mod poly;
pub mod sim;
pub mod symrep;
pub mod walkthrough;

pub use entangle::{
    analyze, census, classify_basis, connectivity_rank, design_purity_check, purity,
    AnalysisReport, BasisLabel, Bipartition, Census, DesignCheck,
};
pub use error::{Error, Result};
pub use field::{find_nonresidue, qr_test, PrimeModulus};
pub use matrix::{companion_matrix, congruence, AdjacencyMatrix, MatZp};
pub use mubset::{
    fundamental_graphs, generate_power_set, generate_rep_set, mub_set, shift_set, verify_lemma1,
    Lemma1Outcome, MethodChoice, MubDocument, MubOptions, MubSet,
};
pub use poly::{poly_is_irreducible, poly_is_primitive, PolyZp};
pub use sim::{
    basis_element, emit_circuit, graph_state, overlap, simulate_measurement, stabilizer_check,
    verify_mu_numeric, Circuit, Gate, MuReport, StateVector, VerifyMode,
};
pub use symrep::{
    build_b0_podd, build_b_p2, choose_g, congruence_reduce_p2, congruence_reduce_podd,
    newton_identities_solve, symmetrize_companion, tridiag_char_poly, tridiag_search, GChoice,
    Method, SymRepWitness, TridiagSpec,
};
