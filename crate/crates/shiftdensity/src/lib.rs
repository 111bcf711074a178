//! Densities of group languages inside shift spaces.
//!
//! A group language is a set of words `φ⁻¹(K)` for a morphism `φ: A* → G`
//! onto a finite group and a target set `K ⊆ G`. Given a shift space `X`
//! with an invariant measure `μ`, the density of such a language is the
//! Cesàro limit of `μ(L ∩ Aⁿ)`. This crate builds the skew product
//! `G ⋊ X`, decides its irreducibility/minimality, discovers cobounding
//! maps, and computes densities by three independent routes (exact
//! formulas, the coset-mass formula, and empirical Cesàro averaging) so
//! they can cross-validate each other.
//!
//! Modules mirror the pipeline: [`algebra`] (finite groups, morphisms,
//! cocycles), [`shifts`] (SFT / substitution / periodic backends behind a
//! language oracle), [`measures`] (cylinder-measure oracles), [`skew`]
//! (the skew product and its decision procedures), [`cobounding`]
//! (minimal invariant subsets), [`bifix`] (group codes and degrees),
//! [`subst_tools`] (skew substitutions and free-group machinery),
//! [`density`] (the density computations) and [`spec_io`] (the JSON
//! problem-spec grammar).

pub mod algebra;
pub mod bifix;
pub mod cobounding;
pub mod density;
pub mod error;
pub mod measures;
pub mod presets;
pub mod shifts;
pub mod skew;
pub mod spec_io;
pub mod subst_tools;
pub mod words;

pub use error::{Error, Result};
