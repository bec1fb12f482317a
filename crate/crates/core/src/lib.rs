//! Exact decision procedures for lattice-free polytopes.
//!
//! A convex body `K ⊆ R^d` is *lattice-free* with respect to the lattice
//! `Λ = sZ^d` if the interior of `K` contains no point of `Λ`; it is
//! *maximal lattice-free* if it is inclusion-maximal among lattice-free
//! convex sets. For a full-dimensional polytope the latter is equivalent to
//! lattice-freeness together with a lattice point in the relative interior
//! of every facet. Maximal lattice-free integral polytopes are the source of
//! the strongest intersection cuts in mixed-integer programming, and up to
//! lattice-preserving affine equivalence there are exactly 1, 1, and 12 of
//! them in dimensions 1, 2, and 3.
//!
//! This crate provides, in exact arbitrary-precision arithmetic throughout
//! (no floating point anywhere):
//!
//! - [`exact_arith`]: integers, rationals, integer matrices, Hermite normal
//!   form, and affine unimodular (lattice-preserving) maps;
//! - [`polyhedron`]: V- and H-representations of rational polytopes in
//!   dimension ≤ 4, conversion, facets, volume, and projection;
//! - [`lattice`]: lattice-point enumeration, interior/boundary counts,
//!   lattice width, Pick quantities, parity classes, lattice-freeness, both
//!   maximality tests, and closed-form interior-point systems for six
//!   parametrized pyramid/prism/simplex families;
//! - [`equivalence`]: equivalence of polytopes modulo lattice-preserving
//!   affine maps, explicit witnesses, and a canonical form used for
//!   deduplication;
//! - [`catalog`]: the named polytopes — the twelve maximal classes
//!   `M1`–`M12`, the planar figure classes with one or two interior points,
//!   the minimal sets `R1`–`R4`, the quadrilateral family `Q²_s`, and the
//!   doubly-exponential simplices `S_d`;
//! - [`enumeration`]: the finite searches that regenerate the planar
//!   catalogs and sweep all candidate pyramids and simplices over the
//!   admissible bases and heights;
//! - [`verify`]: the acceptance checks wired into both the test suite and
//!   the `latfree verify-catalog` subcommand;
//! - [`io`] and [`cli`]: JSON polytope files, run manifests, and the
//!   `latfree` command-line interface.
//!
//! # Design principles
//!
//! - **Exact arithmetic only.** All geometry runs on arbitrary-precision
//!   integers and rationals; results are bit-exact and platform-independent.
//! - **Brute force where brute force is right.** Working dimension is ≤ 3
//!   (ambient cap 4), vertex counts are ≤ 12; subset enumeration beats
//!   incremental double description at this scale and is far easier to
//!   trust.
//! - **Deterministic everywhere.** Canonical vertex orders, canonical facet
//!   orders, deterministic tie-breaking, and generation-order merging make
//!   every run reproducible, independent of thread count.

pub mod catalog;
pub mod cli;
pub mod enumeration;
pub mod equivalence;
pub mod error;
pub mod exact_arith;
pub mod io;
pub mod lattice;
pub mod polyhedron;
pub mod verify;

pub use error::{Error, Result};
