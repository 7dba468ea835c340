//! Explicit finite languages: the ground truth the constructions are checked
//! against.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::symbol::{Alphabet, Symbol};

/// A word as a sequence of symbol ids into some alphabet.
pub type Word = Vec<usize>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteLanguage {
    alphabet: Alphabet,
    words: BTreeSet<Word>,
}

impl FiniteLanguage {
    pub fn empty(alphabet: Alphabet) -> FiniteLanguage {
        FiniteLanguage {
            alphabet,
            words: BTreeSet::new(),
        }
    }

    /// Panics if a word uses an id outside the alphabet.
    pub fn from_ids(alphabet: Alphabet, words: BTreeSet<Word>) -> FiniteLanguage {
        let k = alphabet.len();
        assert!(words.iter().flatten().all(|&a| a < k), "word outside alphabet");
        FiniteLanguage { alphabet, words }
    }

    pub fn from_words<I, W>(alphabet: Alphabet, words: I) -> Result<FiniteLanguage>
    where
        I: IntoIterator<Item = W>,
        W: AsRef<[Symbol]>,
    {
        let mut set = BTreeSet::new();
        for w in words {
            let ids = w
                .as_ref()
                .iter()
                .map(|s| alphabet.index_of(s).ok_or_else(|| Error::UnknownSymbol(s.clone())))
                .collect::<Result<Word>>()?;
            set.insert(ids);
        }
        Ok(FiniteLanguage {
            alphabet,
            words: set,
        })
    }

    /// Words written as whitespace-separated symbols; `""` is the empty word.
    pub fn parse(alphabet: Alphabet, words: &[&str]) -> Result<FiniteLanguage> {
        let parsed = words
            .iter()
            .map(|w| w.split_whitespace().map(str::parse).collect::<Result<Vec<Symbol>>>())
            .collect::<Result<Vec<_>>>()?;
        FiniteLanguage::from_words(alphabet, parsed)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn words(&self) -> &BTreeSet<Word> {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &[usize]) -> bool {
        self.words.contains(w)
    }

    pub fn max_word_len(&self) -> Option<usize> {
        self.words.iter().map(Vec::len).max()
    }

    pub fn symbol_words(&self) -> impl Iterator<Item = Vec<Symbol>> + '_ {
        self.words
            .iter()
            .map(|w| w.iter().map(|&a| self.alphabet.get(a).clone()).collect())
    }

    /// Words rendered for display: letters run together when every symbol
    /// is a single character, space-separated otherwise.
    pub fn to_strings(&self) -> Vec<String> {
        let compact = self.alphabet.iter().all(|s| s.to_string().len() == 1);
        let sep = if compact { "" } else { " " };
        let mut out: Vec<String> = self
            .symbol_words()
            .map(|w| w.iter().map(Symbol::to_string).collect::<Vec<_>>().join(sep))
            .collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    /// The same words over a superset alphabet.
    pub fn over(&self, alphabet: &Alphabet) -> FiniteLanguage {
        let proj = self.alphabet.projection_onto(alphabet);
        assert!(proj.iter().all(Option::is_some), "alphabet must be a superset");
        FiniteLanguage {
            alphabet: alphabet.clone(),
            words: self
                .words
                .iter()
                .map(|w| w.iter().map(|&a| proj[a].unwrap()).collect())
                .collect(),
        }
    }

    fn aligned(&self, other: &FiniteLanguage) -> (FiniteLanguage, FiniteLanguage) {
        let u = self.alphabet.union(&other.alphabet);
        (self.over(&u), other.over(&u))
    }

    pub fn union(&self, other: &FiniteLanguage) -> FiniteLanguage {
        let (mut x, y) = self.aligned(other);
        x.words.extend(y.words);
        x
    }

    pub fn intersection(&self, other: &FiniteLanguage) -> FiniteLanguage {
        let (x, y) = self.aligned(other);
        FiniteLanguage {
            words: x.words.intersection(&y.words).cloned().collect(),
            alphabet: x.alphabet,
        }
    }

    pub fn concat(&self, other: &FiniteLanguage) -> FiniteLanguage {
        let (x, y) = self.aligned(other);
        let mut words = BTreeSet::new();
        for u in &x.words {
            for v in &y.words {
                let mut w = u.clone();
                w.extend_from_slice(v);
                words.insert(w);
            }
        }
        FiniteLanguage {
            alphabet: x.alphabet,
            words,
        }
    }

    pub fn reversed(&self) -> FiniteLanguage {
        FiniteLanguage {
            alphabet: self.alphabet.clone(),
            words: self
                .words
                .iter()
                .map(|w| w.iter().rev().copied().collect())
                .collect(),
        }
    }

    /// Words of length at most `max_len`.
    pub fn truncated(&self, max_len: usize) -> FiniteLanguage {
        FiniteLanguage {
            alphabet: self.alphabet.clone(),
            words: self.words.iter().filter(|w| w.len() <= max_len).cloned().collect(),
        }
    }

    /// Words of the Kleene star of length at most `max_len`.
    pub fn star_up_to(&self, max_len: usize) -> FiniteLanguage {
        let parts: Vec<&Word> = self.words.iter().filter(|w| !w.is_empty()).collect();
        let mut words = BTreeSet::from([Vec::new()]);
        let mut frontier = vec![Vec::new()];
        while let Some(w) = frontier.pop() {
            for p in &parts {
                if w.len() + p.len() <= max_len {
                    let mut x = w.clone();
                    x.extend_from_slice(p);
                    if words.insert(x.clone()) {
                        frontier.push(x);
                    }
                }
            }
        }
        FiniteLanguage {
            alphabet: self.alphabet.clone(),
            words,
        }
    }

    /// All words over the alphabet of length at most `max_len` not in this language.
    pub fn complement_up_to(&self, max_len: usize) -> FiniteLanguage {
        let k = self.alphabet.len();
        let mut words = BTreeSet::new();
        let mut layer: Vec<Word> = vec![Vec::new()];
        for len in 0..=max_len {
            for w in &layer {
                if !self.words.contains(w) {
                    words.insert(w.clone());
                }
            }
            if len == max_len || k == 0 {
                break;
            }
            layer = layer
                .iter()
                .flat_map(|w| {
                    (0..k).map(move |a| {
                        let mut x = w.clone();
                        x.push(a);
                        x
                    })
                })
                .collect();
        }
        FiniteLanguage {
            alphabet: self.alphabet.clone(),
            words,
        }
    }
}
