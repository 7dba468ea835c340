//! Constructions for union, intersection, complement, concatenation, star
//! and reversal of finite languages given by partial DFAs.
//!
//! Each construction returns a [`Construction`]: the accessible DFA built by
//! the construction itself, before minimization, with a label per state
//! naming the pair or subset it stands for.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use crate::dfa::{Dfa, StateId};
use crate::error::{Error, Result};
use crate::symbol::Alphabet;

mod complement;
mod concat;
mod product;
mod reversal;
mod star;

pub use complement::complement;
pub use concat::{concat, concat_completed};
pub use product::{intersection, union};
pub use reversal::reversal;
pub use star::star;

/// One component of a product or pair state: a state of the operand or its
/// implicit dead state.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    State(StateId),
    Dead,
}

impl Side {
    fn of(t: Option<StateId>) -> Side {
        t.map_or(Side::Dead, Side::State)
    }

    pub fn state(self) -> Option<StateId> {
        match self {
            Side::State(q) => Some(q),
            Side::Dead => None,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::State(q) => write!(f, "{q}"),
            Side::Dead => f.write_str("Ω"),
        }
    }
}

/// What a constructed state stands for.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum StateLabel {
    /// Product state of union or intersection.
    Pair(Side, Side),
    /// Concatenation state ⟨i, P⟩: a state of the left operand (or Ω) and a
    /// set of states of the right operand.
    Concat(Side, Vec<StateId>),
    /// Subset of operand states (star, reversal).
    Subset(Vec<StateId>),
    /// An operand state carried over unchanged (complement).
    Original(StateId),
    /// The sink added to complete an operand.
    Sink,
}

fn fmt_set(f: &mut fmt::Formatter<'_>, set: &[StateId]) -> fmt::Result {
    f.write_str("{")?;
    for (i, q) in set.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{q}")?;
    }
    f.write_str("}")
}

impl fmt::Display for StateLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StateLabel::Pair(x, y) => write!(f, "({x},{y})"),
            StateLabel::Concat(i, p) => {
                write!(f, "<{i},")?;
                fmt_set(f, p)?;
                f.write_str(">")
            }
            StateLabel::Subset(p) => fmt_set(f, p),
            StateLabel::Original(q) => write!(f, "{q}"),
            StateLabel::Sink => f.write_str("sink"),
        }
    }
}

/// Output of a construction before minimization.
#[derive(Clone, Debug)]
pub struct Construction {
    pub dfa: Dfa,
    pub labels: Vec<StateLabel>,
}

impl Construction {
    pub fn minimized(&self) -> Dfa {
        self.dfa.minimize()
    }

    pub fn into_dfa(self) -> Dfa {
        self.dfa
    }

    /// State carrying `label`, if the construction reached it.
    pub fn state_of(&self, label: &StateLabel) -> Option<StateId> {
        self.labels.iter().position(|l| l == label)
    }
}

/// Trims `d` and rejects infinite languages.
fn finite_operand(d: &Dfa) -> Result<Dfa> {
    let t = d.trim();
    if !t.is_acyclic() {
        return Err(Error::InfiniteLanguage);
    }
    Ok(t)
}

/// Both operands trimmed, checked finite, and lifted to the union alphabet.
fn finite_pair(a: &Dfa, b: &Dfa) -> Result<(Dfa, Dfa)> {
    let sigma: Alphabet = a.alphabet().union(b.alphabet());
    Ok((
        finite_operand(a)?.with_alphabet(&sigma),
        finite_operand(b)?.with_alphabet(&sigma),
    ))
}

/// Breadth-first exploration of the states reachable from `start` under
/// `step`, where `step(label, symbol)` yields the successor label or `None`
/// for the dead state. Ids follow discovery order with symbols explored in
/// alphabet order, which is the canonical numbering.
fn explore<L, S, F>(alphabet: &Alphabet, start: L, mut step: S, is_final: F) -> (Dfa, Vec<L>)
where
    L: Clone + Eq + Hash,
    S: FnMut(&L, usize) -> Option<L>,
    F: Fn(&L) -> bool,
{
    let k = alphabet.len();
    let mut index: HashMap<L, StateId> = HashMap::from([(start.clone(), 0)]);
    let mut labels = vec![start];
    let mut edges: Vec<(StateId, usize, StateId)> = Vec::new();
    let mut head = 0;
    while head < labels.len() {
        for a in 0..k {
            let Some(next) = step(&labels[head], a) else {
                continue;
            };
            let id = match index.get(&next) {
                Some(&id) => id,
                None => {
                    index.insert(next.clone(), labels.len());
                    labels.push(next);
                    labels.len() - 1
                }
            };
            edges.push((head, a, id));
        }
        head += 1;
    }
    let mut d = Dfa::new(alphabet.clone(), labels.len(), 0);
    for (q, l) in labels.iter().enumerate() {
        d.set_final(q, is_final(l));
    }
    for (p, a, q) in edges {
        d.set_transition(p, a, q);
    }
    (d, labels)
}
