//! Exact, exhaustive verification of no-free-lunch results for
//! non-repeating black-box search over finite search spaces.
//!
//! Objective functions are value tables over canonically indexed points,
//! cost values are exact rationals, and every statement is checked
//! by enumeration rather than sampling:
//!
//! * [`space`]: search spaces, objective functions, histograms, permutation
//!   orbits (basis classes) and closure under permutation.
//! * [`search`]: non-repeating search algorithms, traces, the memoizing
//!   adapter for repeating heuristics, and performance measures.
//! * [`family`]: parsing of algorithm family strings and the built-in family.
//! * [`nfl`]: performance distributions and the uniform / weighted
//!   equality checks with their constructive counterexamples.
//! * [`combinatorics`]: counting permutation-closed subsets.
//! * [`hitting`]: mean first hitting time over desirability ensembles.
//! * [`structure`]: neighborhoods, steepness, local minima and
//!   constraint-defined function classes.
//! * [`io`]: JSON documents and rational formatting.

pub mod combinatorics;
pub mod error;
pub mod family;
pub mod hitting;
pub mod io;
pub mod nfl;
pub mod rational;
pub mod search;
pub mod space;
pub mod structure;

pub use error::{NflError, Result};
pub use rational::Rational;
