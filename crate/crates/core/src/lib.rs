//! Legendrian knot fronts as event words: validation, classical invariants,
//! the Jones polynomial of the smoothing, Legendrian Reidemeister moves,
//! bounded isotopy search and Lagrangian concordance obstructions.

pub mod catalog;
pub mod cli;
pub mod concordance;
pub mod front;
pub mod invariants;
pub mod moves;
pub mod poly;
pub mod render;
pub mod search;
