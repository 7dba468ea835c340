//! Input symbols and ordered alphabets.
//!
//! A symbol is either an atomic letter (`a`, `b`, `c`) or a family letter
//! carrying integer indices (`a_3`, `a_2_5`). Witness families need
//! alphabets whose size grows with the parameters, which is what the
//! indexed form is for.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Symbol {
    base: String,
    indices: Vec<u32>,
}

impl Symbol {
    /// An atomic letter. Panics if `base` is not a non-empty run of `a-z`.
    pub fn letter(base: &str) -> Symbol {
        assert!(valid_base(base), "invalid symbol base {base:?}");
        Symbol {
            base: base.to_owned(),
            indices: Vec::new(),
        }
    }

    /// A family letter such as `a_2_5`.
    pub fn indexed(base: &str, indices: &[u32]) -> Symbol {
        assert!(valid_base(base), "invalid symbol base {base:?}");
        Symbol {
            base: base.to_owned(),
            indices: indices.to_vec(),
        }
    }

    pub fn base(&self) -> &str {
        &self.base
    }

    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    pub fn is_atomic(&self) -> bool {
        self.indices.is_empty()
    }
}

fn valid_base(base: &str) -> bool {
    !base.is_empty() && base.bytes().all(|b| b.is_ascii_lowercase())
}

// Atomic letters sort before family letters; within each group the order is
// (base, indices) lexicographic.
impl Ord for Symbol {
    fn cmp(&self, other: &Self) -> Ordering {
        (!self.is_atomic(), &self.base, &self.indices).cmp(&(
            !other.is_atomic(),
            &other.base,
            &other.indices,
        ))
    }
}

impl PartialOrd for Symbol {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.base)?;
        for i in &self.indices {
            write!(f, "_{i}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Symbol {
    type Err = Error;

    /// Accepts `[a-z]+(_[0-9]+)*`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || Error::InvalidSymbol(s.to_owned());
        let mut parts = s.split('_');
        let base = parts.next().unwrap_or_default();
        if !valid_base(base) {
            return Err(bad());
        }
        let mut indices = Vec::new();
        for part in parts {
            if part.is_empty() || !part.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            indices.push(part.parse().map_err(|_| bad())?);
        }
        Ok(Symbol {
            base: base.to_owned(),
            indices,
        })
    }
}

impl From<Symbol> for String {
    fn from(s: Symbol) -> String {
        s.to_string()
    }
}

impl TryFrom<String> for Symbol {
    type Error = Error;

    fn try_from(s: String) -> Result<Self, Error> {
        s.parse()
    }
}

/// A duplicate-free alphabet kept in canonical symbol order. Positions in
/// this order are the symbol ids used by transition tables.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Alphabet {
    symbols: Vec<Symbol>,
}

impl Alphabet {
    pub fn new<I: IntoIterator<Item = Symbol>>(symbols: I) -> Alphabet {
        let mut symbols: Vec<Symbol> = symbols.into_iter().collect();
        symbols.sort();
        symbols.dedup();
        Alphabet { symbols }
    }

    /// Alphabet of atomic letters, e.g. `Alphabet::letters(&["a", "b"])`.
    pub fn letters(names: &[&str]) -> Alphabet {
        Alphabet::new(names.iter().map(|n| Symbol::letter(n)))
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn get(&self, id: usize) -> &Symbol {
        &self.symbols[id]
    }

    pub fn index_of(&self, s: &Symbol) -> Option<usize> {
        self.symbols.binary_search(s).ok()
    }

    pub fn contains(&self, s: &Symbol) -> bool {
        self.index_of(s).is_some()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Symbol> {
        self.symbols.iter()
    }

    pub fn union(&self, other: &Alphabet) -> Alphabet {
        Alphabet::new(self.symbols.iter().chain(other.symbols.iter()).cloned())
    }

    /// For each symbol id of `self`, the id of the same symbol in `other`.
    pub fn projection_onto(&self, other: &Alphabet) -> Vec<Option<usize>> {
        self.symbols.iter().map(|s| other.index_of(s)).collect()
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.symbols).finish()
    }
}

impl<'a> IntoIterator for &'a Alphabet {
    type Item = &'a Symbol;
    type IntoIter = std::slice::Iter<'a, Symbol>;

    fn into_iter(self) -> Self::IntoIter {
        self.symbols.iter()
    }
}
