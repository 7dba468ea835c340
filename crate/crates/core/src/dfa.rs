//! Partial-transition DFAs and the generic algorithms over them.
//!
//! A missing transition means rejection: the dead state is never stored.
//! States are dense ids in `0..num_states`; symbols are positions in the
//! automaton's [`Alphabet`].

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::language::{FiniteLanguage, Word};
use crate::symbol::{Alphabet, Symbol};

pub type StateId = usize;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dfa {
    alphabet: Alphabet,
    num_states: usize,
    initial: StateId,
    finals: Vec<bool>,
    // num_states * alphabet.len(), row-major by state
    delta: Vec<Option<StateId>>,
}

/// Unchecked description of a DFA, as read from a file or assembled by hand.
/// [`validate`] lists what is wrong with it; [`Dfa::try_from`] builds the
/// checked automaton.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawDfa {
    pub alphabet: Vec<Symbol>,
    pub num_states: usize,
    pub initial: StateId,
    pub finals: Vec<StateId>,
    pub transitions: Vec<(StateId, Symbol, StateId)>,
}

/// Every invariant violation of `raw`; empty means valid.
pub fn validate(raw: &RawDfa) -> Vec<String> {
    let mut out = Vec::new();
    let n = raw.num_states;
    if n == 0 {
        out.push("automaton has no states".to_owned());
    }
    let mut seen_symbols = BTreeSet::new();
    for s in &raw.alphabet {
        if !seen_symbols.insert(s) {
            out.push(format!("duplicate alphabet symbol {s}"));
        }
    }
    if raw.initial >= n {
        out.push(format!("initial state {} out of range", raw.initial));
    }
    for &f in &raw.finals {
        if f >= n {
            out.push(format!("final state {f} out of range"));
        }
    }
    let mut seen = std::collections::BTreeMap::new();
    for (src, sym, dst) in &raw.transitions {
        if *src >= n {
            out.push(format!("source {src} out of range"));
        }
        if *dst >= n {
            out.push("target out of range".to_owned());
        }
        if !seen_symbols.contains(sym) {
            out.push(format!("unknown symbol {sym}"));
        }
        match seen.insert((*src, sym), *dst) {
            Some(prev) if prev != *dst => {
                out.push(format!("nondeterministic on ({src},{sym})"));
            }
            _ => {}
        }
    }
    out
}

impl TryFrom<RawDfa> for Dfa {
    type Error = Error;

    fn try_from(raw: RawDfa) -> Result<Dfa> {
        let problems = validate(&raw);
        if !problems.is_empty() {
            return Err(Error::InvalidAutomaton(problems));
        }
        let mut d = Dfa::new(Alphabet::new(raw.alphabet), raw.num_states, raw.initial);
        for f in raw.finals {
            d.set_final(f, true);
        }
        for (src, sym, dst) in raw.transitions {
            let a = d.alphabet.index_of(&sym).expect("validated");
            d.set_transition(src, a, dst);
        }
        Ok(d)
    }
}

impl Dfa {
    /// `num_states` states, none final, no transitions.
    pub fn new(alphabet: Alphabet, num_states: usize, initial: StateId) -> Dfa {
        assert!(num_states > 0, "a DFA needs at least one state");
        assert!(initial < num_states);
        Dfa {
            num_states,
            initial,
            finals: vec![false; num_states],
            delta: vec![None; num_states * alphabet.len()],
            alphabet,
        }
    }

    /// The canonical representation of the empty language.
    pub fn empty(alphabet: Alphabet) -> Dfa {
        Dfa::new(alphabet, 1, 0)
    }

    /// Chain accepting exactly `word`.
    pub fn from_word(alphabet: Alphabet, word: &[Symbol]) -> Result<Dfa> {
        let mut d = Dfa::new(alphabet, word.len() + 1, 0);
        for (i, s) in word.iter().enumerate() {
            let a = d.symbol_id(s)?;
            d.set_transition(i, a, i + 1);
        }
        d.set_final(word.len(), true);
        Ok(d)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn num_symbols(&self) -> usize {
        self.alphabet.len()
    }

    pub fn num_states(&self) -> usize {
        self.num_states
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn is_final(&self, q: StateId) -> bool {
        self.finals[q]
    }

    pub fn finals(&self) -> impl Iterator<Item = StateId> + '_ {
        (0..self.num_states).filter(|&q| self.finals[q])
    }

    pub fn num_finals(&self) -> usize {
        self.finals.iter().filter(|&&f| f).count()
    }

    pub fn symbol_id(&self, s: &Symbol) -> Result<usize> {
        self.alphabet
            .index_of(s)
            .ok_or_else(|| Error::UnknownSymbol(s.clone()))
    }

    #[inline]
    pub fn next(&self, q: StateId, a: usize) -> Option<StateId> {
        self.delta[q * self.alphabet.len() + a]
    }

    pub fn set_final(&mut self, q: StateId, fin: bool) {
        self.finals[q] = fin;
    }

    pub fn set_transition(&mut self, q: StateId, a: usize, target: StateId) {
        assert!(target < self.num_states);
        let k = self.alphabet.len();
        self.delta[q * k + a] = Some(target);
    }

    pub fn clear_transition(&mut self, q: StateId, a: usize) {
        let k = self.alphabet.len();
        self.delta[q * k + a] = None;
    }

    /// Defined transitions as `(source, symbol id, target)`, by source then symbol.
    pub fn transitions(&self) -> impl Iterator<Item = (StateId, usize, StateId)> + '_ {
        let k = self.alphabet.len();
        self.delta
            .iter()
            .enumerate()
            .filter_map(move |(idx, t)| t.map(|t| (idx / k, idx % k, t)))
    }

    pub fn num_transitions(&self) -> usize {
        self.delta.iter().filter(|t| t.is_some()).count()
    }

    pub fn is_complete(&self) -> bool {
        self.delta.iter().all(Option::is_some)
    }

    pub fn to_raw(&self) -> RawDfa {
        RawDfa {
            alphabet: self.alphabet.symbols().to_vec(),
            num_states: self.num_states,
            initial: self.initial,
            finals: self.finals().collect(),
            transitions: self
                .transitions()
                .map(|(p, a, q)| (p, self.alphabet.get(a).clone(), q))
                .collect(),
        }
    }

    /// Run on a word given as symbol ids.
    pub fn run(&self, word: &[usize]) -> Option<StateId> {
        word.iter()
            .try_fold(self.initial, |q, &a| self.next(q, a))
    }

    pub fn accepts_ids(&self, word: &[usize]) -> bool {
        self.run(word).is_some_and(|q| self.finals[q])
    }

    /// Membership of a word over this automaton's alphabet.
    pub fn accepts(&self, word: &[Symbol]) -> Result<bool> {
        let ids = word
            .iter()
            .map(|s| self.symbol_id(s))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.accepts_ids(&ids))
    }

    /// Same automaton over a larger alphabet; the new symbols have no transitions.
    pub fn with_alphabet(&self, alphabet: &Alphabet) -> Dfa {
        let proj = self.alphabet.projection_onto(alphabet);
        assert!(proj.iter().all(Option::is_some), "alphabet must be a superset");
        let mut d = Dfa::new(alphabet.clone(), self.num_states, self.initial);
        d.finals.clone_from(&self.finals);
        for (p, a, q) in self.transitions() {
            d.set_transition(p, proj[a].unwrap(), q);
        }
        d
    }

    /// Adds an explicit non-final sink and routes every missing transition
    /// to it. Returns `self` unchanged if already complete.
    pub fn completed(&self) -> Dfa {
        if self.is_complete() {
            return self.clone();
        }
        let k = self.num_symbols();
        let sink = self.num_states;
        let mut d = Dfa::new(self.alphabet.clone(), self.num_states + 1, self.initial);
        d.finals[..self.num_states].copy_from_slice(&self.finals);
        for q in 0..=sink {
            for a in 0..k {
                let t = if q < sink { self.next(q, a) } else { None };
                d.set_transition(q, a, t.unwrap_or(sink));
            }
        }
        d
    }

    fn accessible(&self) -> Vec<bool> {
        let mut seen = vec![false; self.num_states];
        let mut queue = VecDeque::from([self.initial]);
        seen[self.initial] = true;
        while let Some(q) = queue.pop_front() {
            for a in 0..self.num_symbols() {
                if let Some(t) = self.next(q, a) {
                    if !seen[t] {
                        seen[t] = true;
                        queue.push_back(t);
                    }
                }
            }
        }
        seen
    }

    fn coaccessible(&self) -> Vec<bool> {
        let mut preds = vec![Vec::new(); self.num_states];
        for (p, _, q) in self.transitions() {
            preds[q].push(p);
        }
        let mut seen = self.finals.clone();
        let mut stack: Vec<StateId> = self.finals().collect();
        while let Some(q) = stack.pop() {
            for &p in &preds[q] {
                if !seen[p] {
                    seen[p] = true;
                    stack.push(p);
                }
            }
        }
        seen
    }

    /// Breadth-first renumbering from the initial state, exploring symbols
    /// in alphabet order and keeping only states for which `keep` holds.
    /// The initial state must be kept.
    fn renumber_bfs(&self, keep: &[bool]) -> Dfa {
        let mut order = Vec::new();
        let mut new_id = vec![usize::MAX; self.num_states];
        new_id[self.initial] = 0;
        order.push(self.initial);
        let mut head = 0;
        while head < order.len() {
            let q = order[head];
            head += 1;
            for a in 0..self.num_symbols() {
                if let Some(t) = self.next(q, a) {
                    if keep[t] && new_id[t] == usize::MAX {
                        new_id[t] = order.len();
                        order.push(t);
                    }
                }
            }
        }
        let mut d = Dfa::new(self.alphabet.clone(), order.len(), 0);
        for (i, &q) in order.iter().enumerate() {
            d.finals[i] = self.finals[q];
            for a in 0..self.num_symbols() {
                if let Some(t) = self.next(q, a) {
                    if keep[t] {
                        d.set_transition(i, a, new_id[t]);
                    }
                }
            }
        }
        d
    }

    /// Canonical renumbering of the accessible part.
    pub fn canonical(&self) -> Dfa {
        self.renumber_bfs(&vec![true; self.num_states])
    }

    /// Removes states that are unreachable or cannot reach a final state, and
    /// renumbers canonically. The empty language becomes [`Dfa::empty`].
    pub fn trim(&self) -> Dfa {
        let acc = self.accessible();
        let co = self.coaccessible();
        let keep: Vec<bool> = acc.iter().zip(&co).map(|(a, c)| *a && *c).collect();
        if !keep[self.initial] {
            return Dfa::empty(self.alphabet.clone());
        }
        self.renumber_bfs(&keep)
    }

    /// True iff the accessible part of the transition graph has no cycle.
    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    /// Accessible states in a topological order (Kahn's algorithm, smallest
    /// id first among ready states), or `None` when the accessible part has
    /// a cycle.
    pub fn topological_order(&self) -> Option<Vec<StateId>> {
        let acc = self.accessible();
        let mut indeg = vec![0usize; self.num_states];
        for (p, _, q) in self.transitions() {
            if acc[p] {
                indeg[q] += 1;
            }
        }
        let mut ready: BTreeSet<StateId> = (0..self.num_states)
            .filter(|&q| acc[q] && indeg[q] == 0)
            .collect();
        let mut order = Vec::new();
        while let Some(q) = ready.pop_first() {
            order.push(q);
            for a in 0..self.num_symbols() {
                if let Some(t) = self.next(q, a) {
                    indeg[t] -= 1;
                    if indeg[t] == 0 {
                        ready.insert(t);
                    }
                }
            }
        }
        let reachable = acc.iter().filter(|&&x| x).count();
        (order.len() == reachable).then_some(order)
    }

    /// Breadth-first distance of every state from the initial state;
    /// `None` for inaccessible states.
    pub fn levels(&self) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.num_states];
        dist[self.initial] = Some(0);
        let mut queue = VecDeque::from([self.initial]);
        while let Some(q) = queue.pop_front() {
            let d = dist[q].unwrap();
            for a in 0..self.num_symbols() {
                if let Some(t) = self.next(q, a) {
                    if dist[t].is_none() {
                        dist[t] = Some(d + 1);
                        queue.push_back(t);
                    }
                }
            }
        }
        dist
    }

    /// Shortest-path length from the initial state to `q`.
    pub fn level(&self, q: StateId) -> Result<usize> {
        if q >= self.num_states {
            return Err(Error::Inaccessible(q));
        }
        self.levels()[q].ok_or(Error::Inaccessible(q))
    }

    /// The accepted words. Fails on automata whose trimmed form has a cycle.
    pub fn enumerate_language(&self) -> Result<FiniteLanguage> {
        let t = self.trim();
        if !t.is_acyclic() {
            return Err(Error::InfiniteLanguage);
        }
        let mut words = BTreeSet::new();
        let mut stack: Vec<(StateId, Word)> = vec![(t.initial, Vec::new())];
        while let Some((q, w)) = stack.pop() {
            if t.finals[q] {
                words.insert(w.clone());
            }
            for a in 0..t.num_symbols() {
                if let Some(next) = t.next(q, a) {
                    let mut w2 = w.clone();
                    w2.push(a);
                    stack.push((next, w2));
                }
            }
        }
        Ok(FiniteLanguage::from_ids(self.alphabet.clone(), words))
    }

    /// Equality of canonical forms (alphabet, finals and transitions).
    pub fn is_isomorphic(&self, other: &Dfa) -> bool {
        self.num_states == other.num_states && self.canonical() == other.canonical()
    }
}

impl std::fmt::Debug for Dfa {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Dfa {{ states: {}, initial: {}, finals: {:?}, alphabet: {:?}, delta: [",
            self.num_states,
            self.initial,
            self.finals().collect::<Vec<_>>(),
            self.alphabet
        )?;
        for (i, (p, a, q)) in self.transitions().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p} {} {q}", self.alphabet.get(a))?;
        }
        f.write_str("] }")
    }
}
