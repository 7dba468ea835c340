//! Reference constructions that do not share code with `ops` or `bounds`.
//!
//! [`minimal_dfa_from_words`] builds the minimal partial DFA straight from
//! the left quotients of a word set. It is exponential-tolerant and meant
//! for test-sized inputs only.

use std::collections::{BTreeMap, BTreeSet};

use crate::dfa::{Dfa, StateId};
use crate::language::{FiniteLanguage, Word};

/// Nonempty left quotients of a finite language, numbered in breadth-first
/// discovery order from the language itself.
#[derive(Clone, Debug)]
pub struct QuotientTable {
    pub quotients: Vec<BTreeSet<Word>>,
    /// `transitions[q][a]` is the quotient of `quotients[q]` by symbol `a`, if nonempty.
    pub transitions: Vec<Vec<Option<StateId>>>,
}

impl QuotientTable {
    pub fn build(lang: &FiniteLanguage) -> QuotientTable {
        let k = lang.alphabet().len();
        let mut quotients = vec![lang.words().clone()];
        let mut index: BTreeMap<BTreeSet<Word>, StateId> = BTreeMap::new();
        index.insert(lang.words().clone(), 0);
        let mut transitions = Vec::new();
        let mut head = 0;
        while head < quotients.len() {
            let mut row = vec![None; k];
            for (a, slot) in row.iter_mut().enumerate() {
                let q: BTreeSet<Word> = quotients[head]
                    .iter()
                    .filter(|w| w.first() == Some(&a))
                    .map(|w| w[1..].to_vec())
                    .collect();
                if q.is_empty() {
                    continue;
                }
                let id = match index.get(&q) {
                    Some(&id) => id,
                    None => {
                        index.insert(q.clone(), quotients.len());
                        quotients.push(q);
                        quotients.len() - 1
                    }
                };
                *slot = Some(id);
            }
            transitions.push(row);
            head += 1;
        }
        QuotientTable {
            quotients,
            transitions,
        }
    }
}

/// The minimal partial DFA of `lang`: one state per nonempty left quotient.
pub fn minimal_dfa_from_words(lang: &FiniteLanguage) -> Dfa {
    if lang.is_empty() {
        return Dfa::empty(lang.alphabet().clone());
    }
    let table = QuotientTable::build(lang);
    let mut d = Dfa::new(lang.alphabet().clone(), table.quotients.len(), 0);
    for (q, quotient) in table.quotients.iter().enumerate() {
        if quotient.contains(&Vec::new()) {
            d.set_final(q, true);
        }
        for (a, t) in table.transitions[q].iter().enumerate() {
            if let Some(t) = t {
                d.set_transition(q, a, *t);
            }
        }
    }
    d
}

/// Accepted words of length at most `max_len`.
pub fn bounded_words(d: &Dfa, max_len: usize) -> FiniteLanguage {
    let mut words = BTreeSet::new();
    let mut stack: Vec<(StateId, Word)> = vec![(d.initial(), Vec::new())];
    while let Some((q, w)) = stack.pop() {
        if d.is_final(q) {
            words.insert(w.clone());
        }
        if w.len() == max_len {
            continue;
        }
        for a in 0..d.num_symbols() {
            if let Some(t) = d.next(q, a) {
                let mut w2 = w.clone();
                w2.push(a);
                stack.push((t, w2));
            }
        }
    }
    FiniteLanguage::from_ids(d.alphabet().clone(), words)
}

/// Number of accepted words of each length `0..=max_len`.
pub fn count_words_by_length(d: &Dfa, max_len: usize) -> Vec<u128> {
    let n = d.num_states();
    let mut ways = vec![0u128; n];
    ways[d.initial()] = 1;
    let mut out = Vec::with_capacity(max_len + 1);
    for len in 0..=max_len {
        out.push(d.finals().map(|q| ways[q]).sum());
        if len == max_len {
            break;
        }
        let mut next = vec![0u128; n];
        for (p, _, q) in d.transitions() {
            next[q] += ways[p];
        }
        ways = next;
    }
    out
}

/// Whether `a` and `b` accept the same words of length at most `max_len`.
/// Both automata must share an alphabet.
pub fn agree_up_to(a: &Dfa, b: &Dfa, max_len: usize) -> bool {
    assert_eq!(a.alphabet(), b.alphabet(), "alphabets differ");
    // Pairs of partial runs; a run that falls off is tracked as None.
    let mut frontier: BTreeSet<(Option<StateId>, Option<StateId>)> =
        BTreeSet::from([(Some(a.initial()), Some(b.initial()))]);
    for len in 0..=max_len {
        for &(p, q) in &frontier {
            if p.is_some_and(|p| a.is_final(p)) != q.is_some_and(|q| b.is_final(q)) {
                return false;
            }
        }
        if len == max_len {
            break;
        }
        frontier = frontier
            .iter()
            .flat_map(|&(p, q)| {
                (0..a.num_symbols()).map(move |s| {
                    (p.and_then(|p| a.next(p, s)), q.and_then(|q| b.next(q, s)))
                })
            })
            .filter(|pair| *pair != (None, None))
            .collect();
    }
    true
}
