//! Stabilizer codes as isotropic subspaces of the symplectic space
//! `V = F_p^n × F_p^n`, with exact computation of every quantity that enters
//! the quantum Singleton bound `k + 2(d − 1) ≤ n`.
//!
//! # Overview
//!
//! - [`field_linalg`]: prime fields, canonical RREF (bit-packed for p = 2),
//!   kernels, subspace sums and intersections.
//! - [`symplectic`]: the form `⟨u, v⟩ = Σ u_X v_Z − u_Z v_X`, supports,
//!   weights, `V_C`, the restriction `r_E` and `S^⊥`.
//! - [`stabilizer`]: codes, distance, correctable erasures, `g(M)`, cleaning
//!   and the checks behind the bound.
//! - [`generation`]: seeded random codes and the fixture catalog.
//! - [`code_io`]: the on-disk text format.
//!
//! # Where each result lives
//!
//! | Statement | Function |
//! |-----------|----------|
//! | The form is nondegenerate | [`symplectic::sym_orth`] (`dim S + dim S^⊥ = 2n`) |
//! | `dim V_C = 2\|C\|` | [`symplectic::support_subspace`] |
//! | `dim(S^⊥/S) = 2k` | [`stabilizer::logical_space_dim`], [`stabilizer::check_logical_space_dim`] |
//! | Distance as a minimum weight | [`stabilizer::distance`] |
//! | Correctable erasure `S^⊥ ∩ V_E ⊆ S` | [`stabilizer::is_correctable`] |
//! | `\|E\| ≤ d − 1` ⇒ correctable | [`stabilizer::check_distance_correctability`] |
//! | `g(M) + g(M^c) = 2k` | [`stabilizer::check_cleaning_identity`] |
//! | Cleaning onto `M^c` | [`stabilizer::clean`] |
//! | Two disjoint correctable sets ⇒ `k ≤ \|C\|` | [`stabilizer::check_two_disjoint`] |
//! | `k + 2(d − 1) ≤ n` | [`stabilizer::check_singleton`] |
//!
//! # Example
//!
//! ```
//! use stabsym::generation::catalog;
//! use stabsym::stabilizer::{check_singleton, SearchLimits};
//!
//! let code = catalog("five_one_three").unwrap();
//! let report = check_singleton(&code, &SearchLimits::default()).unwrap();
//! assert_eq!((report.n, report.k, report.d, report.slack), (5, 1, Some(3), Some(0)));
//! ```

pub mod code_io;
pub mod error;
pub mod field_linalg;
pub mod generation;
pub mod stabilizer;
pub mod symplectic;

pub use error::{Error, Result};
