//! Operations on finite languages represented by incomplete (partial) DFAs,
//! with evaluators for their state and transition complexity bounds and
//! generators for the witness families that reach them.

pub mod bounds;
pub mod dfa;
pub mod error;
pub mod harness;
pub mod io;
pub mod language;
pub mod measures;
pub mod minimize;
pub mod nfa;
pub mod ops;
pub mod oracle;
pub mod symbol;
pub mod witnesses;

pub use dfa::{Dfa, RawDfa, StateId};
pub use error::{Error, Result};
pub use language::{FiniteLanguage, Word};
pub use measures::{measure, MeasureSet, SymbolMeasures};
pub use nfa::Nfa;
pub use symbol::{Alphabet, Symbol};
