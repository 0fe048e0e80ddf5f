//! Leibniz algebras over the rationals: representations, Loday-Pirashvili
//! cohomology, the Balavoine bracket, omni-representations and omni-cohomology.
//!
//! Everything is exact. Algebras are given by dense structure constants and
//! cochains by dense coefficient tables over basis multi-indices.

pub mod algebra;
pub mod balavoine;
pub mod catalog;
pub mod cochain;
pub mod cohomology;
pub mod error;
pub mod io;
pub mod linalg;
pub mod omni;
pub mod random;
pub mod rational;
pub mod rep;

pub use algebra::{LeibnizAlgebra, LeibnizViolation};
pub use balavoine::{bracket_b, circ_bar, circ_k, mc_check, shuffles, MaurerCartan, Shuffle};
pub use cochain::Cochain;
pub use cohomology::{coboundary, cohomology_dims, is_cocycle};
pub use error::{Error, Result};
pub use linalg::{rref_rank, Matrix, Rref};
pub use omni::{OmniElement, OmniRep};
pub use rational::Rational;
pub use rep::{RepAxiom, RepViolation, Representation};
