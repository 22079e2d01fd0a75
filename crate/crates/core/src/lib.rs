//! Reconstructibility certificates for finite graphs whose flag complexes are
//! homology manifolds or whose right-angled Coxeter groups are virtual
//! Poincaré duality groups.
//!
//! The pipeline runs graph → flag complex → integer homology → manifold and
//! sphere predicates → Coxeter nerve conditions → certificate, with deck
//! machinery and a brute-force hypomorphism oracle for small orders.

pub mod cli;
pub mod complex;
pub mod coxeter;
pub mod error;
pub mod format;
pub mod graph;
pub mod homology;
pub mod manifold;
pub mod matrix;
pub mod reconstruction;
pub mod report;

pub use error::{Error, Result};
