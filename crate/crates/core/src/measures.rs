//! Refined descriptional measures of a minimal partial DFA.
//!
//! Position-indexed quantities (`f_at`, `t_at`, `in_at`) use a topological
//! order of the minimal DFA: Kahn's algorithm taking the smallest canonical
//! id first. For the witness families this coincides with the canonical
//! breadth-first numbering. Cyclic automata (complement results) fall back
//! to the canonical numbering.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::dfa::{Dfa, StateId};
use crate::error::Result;
use crate::language::FiniteLanguage;
use crate::oracle;
use crate::symbol::{Alphabet, Symbol};

/// Per-symbol counts for one symbol τ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymbolMeasures {
    /// Number of τ-transitions (itc_τ of the language).
    pub itc: usize,
    /// 1 iff the initial state has a τ-transition.
    pub s: usize,
    pub s_bar: usize,
    /// τ-transitions entering final states.
    pub a: usize,
    /// Final states with a τ-transition.
    pub e: usize,
    /// Final states without a τ-transition.
    pub e_bar: usize,
    /// States without a τ-transition.
    pub t_bar: usize,
    /// τ-transitions entering the initial state.
    pub in_initial: usize,
    /// By topological position: 1 iff that state has a τ-transition.
    pub t_at: Vec<usize>,
    /// By topological position: number of τ-transitions entering that state.
    pub in_at: Vec<usize>,
}

impl SymbolMeasures {
    /// Measures of a symbol that labels no transition at all.
    fn absent(m: usize, f: usize) -> SymbolMeasures {
        SymbolMeasures {
            itc: 0,
            s: 0,
            s_bar: 1,
            a: 0,
            e: 0,
            e_bar: f,
            t_bar: m,
            in_initial: 0,
            t_at: vec![0; m],
            in_at: vec![0; m],
        }
    }

    /// t̄_τ(i), the complement of `t_at` at position `i`.
    pub fn t_bar_at(&self, i: usize) -> usize {
        1 - self.t_at[i]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MeasureSet {
    /// States of the minimal partial DFA (isc).
    pub m: usize,
    /// Transitions of the minimal partial DFA (itc).
    pub itc: usize,
    /// Alphabet size.
    pub k: usize,
    #[serde(skip)]
    pub alphabet: Alphabet,
    pub f: usize,
    /// `f_at[i]` = finals among the first `i` positions; length `m + 1`.
    pub f_at: Vec<usize>,
    /// Position to canonical state id.
    pub order: Vec<StateId>,
    pub acyclic: bool,
    /// Breadth-first level of each canonical state id.
    pub levels: Vec<usize>,
    /// The unique final state without out-transitions, if there is exactly one.
    pub pre_dead: Option<StateId>,
    pub level_of_automaton: Option<usize>,
    pub per_symbol: BTreeMap<Symbol, SymbolMeasures>,
}

impl MeasureSet {
    /// Measures for τ, including symbols outside this language's alphabet.
    pub fn symbol(&self, tau: &Symbol) -> SymbolMeasures {
        self.per_symbol
            .get(tau)
            .cloned()
            .unwrap_or_else(|| SymbolMeasures::absent(self.m, self.f))
    }

    /// s(L) = Σ_τ s_τ(L).
    pub fn s_total(&self) -> usize {
        self.per_symbol.values().map(|s| s.s).sum()
    }

    /// a(L) = Σ_τ a_τ(L).
    pub fn a_total(&self) -> usize {
        self.per_symbol.values().map(|s| s.a).sum()
    }

    /// f(A, i) for position `i`.
    pub fn f_before(&self, i: usize) -> usize {
        self.f_at[i]
    }
}

/// Measures of the minimal DFA of `d`'s language (`d` is minimized first).
pub fn measure(d: &Dfa) -> MeasureSet {
    let d = d.minimize();
    let m = d.num_states();
    let k = d.num_symbols();
    let topo = d.topological_order();
    let acyclic = topo.is_some();
    let order = topo.unwrap_or_else(|| (0..m).collect());
    let mut position = vec![0; m];
    for (i, &q) in order.iter().enumerate() {
        position[q] = i;
    }

    let mut f_at = Vec::with_capacity(m + 1);
    let mut seen = 0;
    f_at.push(0);
    for &q in &order {
        seen += usize::from(d.is_final(q));
        f_at.push(seen);
    }

    let mut per_symbol = BTreeMap::new();
    for (a, sym) in d.alphabet().iter().enumerate() {
        let mut t_at = vec![0; m];
        let mut in_at = vec![0; m];
        let mut itc = 0;
        let mut acc = 0;
        for q in 0..m {
            if let Some(t) = d.next(q, a) {
                itc += 1;
                t_at[position[q]] = 1;
                in_at[position[t]] += 1;
                if d.is_final(t) {
                    acc += 1;
                }
            }
        }
        let s = usize::from(d.next(d.initial(), a).is_some());
        let e = d.finals().filter(|&q| d.next(q, a).is_some()).count();
        let f = d.num_finals();
        per_symbol.insert(
            sym.clone(),
            SymbolMeasures {
                itc,
                s,
                s_bar: 1 - s,
                a: acc,
                e,
                e_bar: f - e,
                t_bar: m - itc,
                in_initial: in_at[position[d.initial()]],
                t_at,
                in_at,
            },
        );
    }

    let levels: Vec<usize> = d.levels().into_iter().map(|l| l.unwrap_or(0)).collect();
    let dead_ends: Vec<StateId> = d
        .finals()
        .filter(|&q| (0..k).all(|a| d.next(q, a).is_none()))
        .collect();
    let pre_dead = (dead_ends.len() == 1).then(|| dead_ends[0]);

    MeasureSet {
        m,
        itc: d.num_transitions(),
        k,
        alphabet: d.alphabet().clone(),
        f: d.num_finals(),
        f_at,
        order,
        acyclic,
        level_of_automaton: pre_dead.map(|p| levels[p]),
        levels,
        pre_dead,
        per_symbol,
    }
}

/// Incomplete state complexity.
pub fn isc(d: &Dfa) -> usize {
    d.minimize().num_states()
}

/// Incomplete transition complexity.
pub fn itc(d: &Dfa) -> usize {
    d.minimize().num_transitions()
}

pub fn isc_of_words(lang: &FiniteLanguage) -> usize {
    oracle::minimal_dfa_from_words(lang).num_states()
}

pub fn itc_of_words(lang: &FiniteLanguage) -> usize {
    oracle::minimal_dfa_from_words(lang).num_transitions()
}

/// State complexity with complete DFAs: the minimal partial DFA plus the
/// dead state whenever some transition is missing.
pub fn sc(d: &Dfa) -> usize {
    let min = d.minimize();
    if min.num_finals() == 0 {
        return 1;
    }
    min.num_states() + usize::from(!min.is_complete())
}

/// Level of state `q` in `d` (breadth-first distance from the initial state).
pub fn level(d: &Dfa, q: StateId) -> Result<usize> {
    d.level(q)
}
