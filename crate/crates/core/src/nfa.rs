use std::collections::HashMap;

use crate::dfa::{Dfa, StateId};
use crate::symbol::Alphabet;

/// Nondeterministic automaton without ε-transitions, possibly with several
/// initial states.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nfa {
    alphabet: Alphabet,
    num_states: usize,
    initials: Vec<StateId>,
    finals: Vec<bool>,
    // per state, per symbol: sorted targets
    delta: Vec<Vec<Vec<StateId>>>,
}

impl Nfa {
    pub fn new(alphabet: Alphabet, num_states: usize) -> Nfa {
        let k = alphabet.len();
        Nfa {
            alphabet,
            num_states,
            initials: Vec::new(),
            finals: vec![false; num_states],
            delta: vec![vec![Vec::new(); k]; num_states],
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.num_states
    }

    pub fn add_initial(&mut self, q: StateId) {
        assert!(q < self.num_states);
        if let Err(pos) = self.initials.binary_search(&q) {
            self.initials.insert(pos, q);
        }
    }

    pub fn set_final(&mut self, q: StateId, fin: bool) {
        self.finals[q] = fin;
    }

    pub fn add_transition(&mut self, p: StateId, a: usize, q: StateId) {
        assert!(q < self.num_states);
        let targets = &mut self.delta[p][a];
        if let Err(pos) = targets.binary_search(&q) {
            targets.insert(pos, q);
        }
    }

    /// Reverses every transition of `d`: initials become `d`'s finals and the
    /// only final state is `d`'s initial.
    pub fn reverse_of(d: &Dfa) -> Nfa {
        let mut n = Nfa::new(d.alphabet().clone(), d.num_states());
        for q in d.finals() {
            n.add_initial(q);
        }
        n.set_final(d.initial(), true);
        for (p, a, q) in d.transitions() {
            n.add_transition(q, a, p);
        }
        n
    }

    /// Accessible subset construction. The empty subset is never built, and
    /// subsets from which no final state is reachable are dropped, so the
    /// result is trim and numbered in breadth-first discovery order.
    pub fn determinize(&self) -> Dfa {
        self.subset_construction().0
    }

    /// Like [`Nfa::determinize`], also returning the subset behind each state.
    pub fn subset_construction(&self) -> (Dfa, Vec<Vec<StateId>>) {
        if self.initials.is_empty() {
            return (Dfa::empty(self.alphabet.clone()), vec![Vec::new()]);
        }
        let k = self.alphabet.len();
        let mut index: HashMap<Vec<StateId>, StateId> = HashMap::new();
        let mut subsets = vec![self.initials.clone()];
        let mut edges: Vec<Vec<Option<StateId>>> = Vec::new();
        index.insert(self.initials.clone(), 0);
        let mut head = 0;
        while head < subsets.len() {
            let mut row = vec![None; k];
            for (a, slot) in row.iter_mut().enumerate() {
                let mut next: Vec<StateId> = subsets[head]
                    .iter()
                    .flat_map(|&q| self.delta[q][a].iter().copied())
                    .collect();
                if next.is_empty() {
                    continue;
                }
                next.sort_unstable();
                next.dedup();
                let id = *index.entry(next.clone()).or_insert_with(|| {
                    subsets.push(next);
                    subsets.len() - 1
                });
                *slot = Some(id);
            }
            edges.push(row);
            head += 1;
        }
        let mut d = Dfa::new(self.alphabet.clone(), subsets.len(), 0);
        for (p, row) in edges.iter().enumerate() {
            if subsets[p].iter().any(|&q| self.finals[q]) {
                d.set_final(p, true);
            }
            for (a, t) in row.iter().enumerate() {
                if let Some(t) = t {
                    d.set_transition(p, a, *t);
                }
            }
        }
        // Dropping dead subsets keeps breadth-first order because every kept
        // state is reached through kept states only.
        let trimmed = d.trim();
        if trimmed.num_states() == d.num_states() {
            return (d, subsets);
        }
        let labels = relabel_after_trim(&d, &trimmed, &subsets);
        (trimmed, labels)
    }
}

/// Maps labels of `before` onto the states of `before.trim()` by running
/// both automata in lockstep from their initial states.
pub(crate) fn relabel_after_trim<L: Clone>(before: &Dfa, after: &Dfa, labels: &[L]) -> Vec<L> {
    let mut out: Vec<Option<L>> = vec![None; after.num_states()];
    let mut stack = vec![(before.initial(), after.initial())];
    out[after.initial()] = Some(labels[before.initial()].clone());
    while let Some((p, q)) = stack.pop() {
        for a in 0..after.num_symbols() {
            if let Some(t) = after.next(q, a) {
                if out[t].is_none() {
                    let s = before.next(p, a).expect("trim only removes transitions");
                    out[t] = Some(labels[s].clone());
                    stack.push((s, t));
                }
            }
        }
    }
    out.into_iter()
        .map(|l| l.expect("trimmed states are reachable"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::language::FiniteLanguage;
    use crate::oracle;

    #[test]
    fn deterministic_input_is_preserved() {
        let alpha = Alphabet::letters(&["a", "b"]);
        let mut n = Nfa::new(alpha.clone(), 3);
        n.add_initial(0);
        n.add_transition(0, 0, 1);
        n.add_transition(1, 1, 2);
        n.set_final(2, true);
        let d = n.determinize();
        let lang = FiniteLanguage::parse(alpha, &["a b"]).unwrap();
        assert!(d.is_isomorphic(&oracle::minimal_dfa_from_words(&lang)));
    }

    #[test]
    fn two_final_initials_accept_epsilon() {
        let mut n = Nfa::new(Alphabet::letters(&["a"]), 2);
        n.add_initial(0);
        n.add_initial(1);
        n.set_final(0, true);
        n.set_final(1, true);
        let d = n.determinize();
        assert!(d.is_final(d.initial()));
        assert!(d.accepts(&[]).unwrap());
    }

    #[test]
    fn reverse_then_determinize() {
        let alpha = Alphabet::letters(&["a", "b"]);
        let lang = FiniteLanguage::parse(alpha.clone(), &["a b", "b b"]).unwrap();
        let d = oracle::minimal_dfa_from_words(&lang);
        let r = Nfa::reverse_of(&d).determinize();
        let expected = FiniteLanguage::parse(alpha, &["b a", "b b"]).unwrap();
        assert_eq!(r.enumerate_language().unwrap(), expected);
        assert!(r.minimize().is_isomorphic(&oracle::minimal_dfa_from_words(&expected)));
    }

    #[test]
    fn no_initials_is_empty() {
        let n = Nfa::new(Alphabet::letters(&["a"]), 2);
        assert_eq!(n.determinize(), Dfa::empty(Alphabet::letters(&["a"])));
    }

    #[test]
    fn drops_dead_subsets() {
        // 0 -a-> 1 (dead end, not final), 0 -b-> 2 final
        let mut n = Nfa::new(Alphabet::letters(&["a", "b"]), 3);
        n.add_initial(0);
        n.add_transition(0, 0, 1);
        n.add_transition(0, 1, 2);
        n.set_final(2, true);
        let (d, labels) = n.subset_construction();
        assert_eq!(d.num_states(), 2);
        assert_eq!(labels, vec![vec![0], vec![2]]);
    }
}
