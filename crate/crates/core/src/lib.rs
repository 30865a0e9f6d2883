//! Combinatorics of curve neighborhoods of Schubert varieties in `G/P`.
//!
//! Everything here is exact integer arithmetic over the simple-root basis:
//! no geometry, no floats. The crate provides
//!
//! - [`rootsys`] — classical root systems (plus `F4`/`G2`) generated by
//!   Cartan-matrix-driven reflection closure, with coroots, squared length
//!   classes, root strings, and the set `Δ(α)` of simple roots that extend a
//!   positive root;
//! - [`weyl`] — Weyl group elements in matrix-action canonical form, lengths,
//!   reduced words, the Hecke (Demazure) product, Bruhat order, and minimal
//!   coset representatives modulo a parabolic subgroup;
//! - [`degrees`] — the degree lattice `H₂(X) = ZΔ∨/ZΔ∨_P`, maximal roots of
//!   a degree, and greedy decompositions;
//! - [`cosmall`] — classification of cosmall and `P`-cosmall roots, both by
//!   the maximal-root definition and by the `Δ(α) ∩ Δ_P = ∅` criterion;
//! - [`table`] — per-type summary tables of cosmall roots with their
//!   `e`-coordinate descriptions, in text and JSON renderings;
//! - [`curves`] — the Weyl-group data of curve neighborhoods `Γ_d(X(w))`,
//!   via the Hecke-product formula and via the maximal-root recursion;
//! - [`verify`] — exhaustive and seeded-random sweeps that check the
//!   structural identities listed in the README's verification catalog.
//!
//! All values are immutable after construction and every operation is a pure
//! function, so everything can be shared freely across threads.

pub mod cosmall;
pub mod curves;
pub mod degrees;
mod error;
pub mod rootsys;
pub mod table;
pub mod verify;
pub mod weyl;

pub use cosmall::{CosmallReport, ShortCosmallViolation};
pub use curves::SchubertClass;
pub use degrees::{Degree, GreedyDecomposition};
pub use error::{Error, Result};
pub use rootsys::{root_leq, root_lt, Coroot, DynkinType, Family, ParabolicSubset, Root, RootSystem};
pub use table::Table;
pub use weyl::{WeylElement, Word};
