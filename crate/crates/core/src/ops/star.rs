use super::{explore, finite_operand, Construction, StateLabel};
use crate::dfa::{Dfa, StateId};
use crate::error::Result;

/// Subset construction for L(a)*. Starts from {0}; whenever the image R of a
/// subset meets the finals of `a`, the initial state is added back. The
/// start state is final, as are subsets meeting the finals of `a`.
pub fn star(a: &Dfa) -> Result<Construction> {
    let a = finite_operand(a)?;
    let q0 = a.initial();
    let (mut dfa, labels) = explore(
        a.alphabet(),
        vec![q0],
        |p: &Vec<StateId>, s| {
            let mut r: Vec<StateId> = p.iter().filter_map(|&q| a.next(q, s)).collect();
            if r.is_empty() {
                return None;
            }
            if r.iter().any(|&q| a.is_final(q)) {
                r.push(q0);
            }
            r.sort_unstable();
            r.dedup();
            Some(r)
        },
        |p| p.iter().any(|&q| a.is_final(q)),
    );
    dfa.set_final(0, true);
    Ok(Construction {
        dfa,
        labels: labels.into_iter().map(StateLabel::Subset).collect(),
    })
}
