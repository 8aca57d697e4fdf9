//! Numerical companion to the finite de Finetti theorem for orthogonally
//! invariant bosonic states.
//!
//! An `n`-mode state that is unchanged by every passive linear interferometer
//! is a mixture of the normalized total-photon-number projectors `σ_p^n`.
//! Tracing such a state down to `k` modes brings it close, in trace norm, to
//! a product of `k` identical thermal states, and the distance is bounded by
//! `2 (n² / ((n-k-1)(n-k-2)) - 1)`.
//!
//! This crate computes every quantity in that statement and checks every
//! inequality used to prove it:
//!
//! - [`combinatorics`] — photon-composition counts `a_p^n = C(n+p-1, n-1)`,
//!   exact (big integer) and in the log domain.
//! - [`distributions`] — the reduced photon-number law `f(l)`, the thermal
//!   law `g(l)`, their likelihood ratio `h(l)`, L1 distances as certified
//!   intervals, and the theorem / classical bounds. Exact rationals where
//!   feasible, log-domain floats at scale.
//! - [`proof_chain`] — the partial-sum function `S(n,k)`, the convex
//!   integral `J(x)`, and a per-`(n,k,p)` verifier for the full inequality
//!   chain, with slack diagnostics.
//! - [`fock`] — an independent physical oracle: exact sector bases, Ryser
//!   permanents, interferometer lifts, Haar sampling, partial traces, and
//!   trace distances computed from first principles.
//! - [`classical_sphere`] — the classical antecedent: marginals of the
//!   uniform distribution on the sphere vs Gaussians, by quadrature and
//!   Monte Carlo, against the `2(k+3)/(n-k-3)` bound.
//! - [`cli`] — the batch front-end behind the `definetti` binary.
//!
//! Runnable walkthroughs live in `examples/`; the end-to-end checks live in
//! `tests/acceptance.rs`.

pub mod classical_sphere;
pub mod cli;
pub mod combinatorics;
pub mod distributions;
pub mod error;
pub mod fock;
pub mod proof_chain;
pub(crate) mod quadrature;

pub use error::{Error, Result};
