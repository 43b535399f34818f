//! Classical and quantum Cournot/Bertrand duopolies.
//!
//! The crate implements the classical linear-demand duopolies, three
//! quantum extensions (the bit-flip probability scheme, the two-mode
//! squeezing scheme, and a qubit-entanglement scheme), closed-form Nash
//! equilibria for each, and a grid-search oracle that certifies every
//! analytic claim numerically.

pub mod error;
pub mod figures;
pub mod fock;
pub mod ldm;
pub mod market;
pub mod mw;
pub mod qstate;
pub mod rsm;
pub mod solver;

pub use error::{Error, Result};
pub use market::{BertrandParams, MarketParams, Player, QuantityPair};
pub use qstate::{DiagonalObservable, SingleQubitState, TwoQubitState};
pub use solver::{EpsNashReport, EquilibriumKind, EquilibriumResult, GridSpec, PayoffPair};
