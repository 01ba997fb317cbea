//! Solver library for abstract dominance games.
//!
//! A dominance game is a finite set of alternatives with an irreflexive
//! "beats" relation that may be incomplete (missing rounds) and
//! non-asymmetric (mutual dominances). This crate computes winner sets for
//! such games three ways:
//!
//! * **Copeland choice** — argmax of net dominance counts;
//! * **Hodge potential choice (HPC)** — decompose the dominance-difference
//!   1-form on the arrangement graph into a gradient part `dP` plus a
//!   divergence-free harmonic part, then take the argmax of the potential
//!   `P` obtained from the graph Laplacian system `L·P = δR`;
//! * **Extended HPC (EHPC)** — the same decomposition applied to the margin
//!   form of a game whose rounds carry victory margins.
//!
//! The two coincide on complete games; on incomplete ones HPC distinguishes
//! mutual dominances from unplayed rounds and is typically more decisive.
//! Supporting machinery includes the discrete differential operators, a
//! singular-consistent Laplacian solver with two independent paths, a seeded
//! generator of random connected games, and a grid experiment harness that
//! compares the two solutions over size/completeness sweeps.
//!
//! See the `book/` guide for a narrative walk-through; its code snippets are
//! compiled as doctests through the [`guide`] module.

pub mod experiment;
pub mod fixtures;
pub mod game;
pub mod gen;
pub mod guide;
pub mod hodge;
pub mod io;
pub mod solver;

pub use game::{AbstractGame, BaseSpace, Cycle, FormGame, GameError, Permutation, Rational};
pub use hodge::{
    adjointness_defect, copeland_choice, copeland_scores, copeland_scores_int, differential,
    divergence, dominance_form, ehpc, ehpc_with, hodge_decompose, hodge_decompose_with, hpc,
    hpc_with, inner0, inner1, laplacian_dense, tenseness, HodgeError, HodgeResult, MarginalGame,
    OneForm, ZeroForm,
};
pub use solver::{solve_laplacian, Method, MethodUsed, SolveError, SolveOptions, SolveReport};
