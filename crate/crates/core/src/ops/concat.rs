use super::{explore, finite_pair, Construction, Side, StateLabel};
use crate::dfa::{Dfa, StateId};
use crate::error::Result;

/// Pair-subset construction for L(a)·L(b).
///
/// States are ⟨i, P⟩ with i a state of `a` or Ω and P a set of states of
/// `b`. On τ the left component moves to δ_A(i, τ) (Ω when undefined) and
/// P moves to δ_B(P, τ), with b's initial state added whenever the new left
/// component is final. A state is final iff P meets b's finals; ⟨Ω, ∅⟩ is
/// never built.
pub fn concat(a: &Dfa, b: &Dfa) -> Result<Construction> {
    let (a, b) = finite_pair(a, b)?;
    Ok(pair_subset(&a, &b))
}

/// The same construction applied to the completed operands (each gets an
/// explicit sink), giving a complete DFA. Only meaningful for comparing
/// against state counts stated for complete automata.
pub fn concat_completed(a: &Dfa, b: &Dfa) -> Result<Construction> {
    let (a, b) = finite_pair(a, b)?;
    Ok(pair_subset(&a.completed(), &b.completed()))
}

fn pair_subset(a: &Dfa, b: &Dfa) -> Construction {
    let b0 = b.initial();
    let start_set = if a.is_final(a.initial()) { vec![b0] } else { Vec::new() };
    let start = (Side::State(a.initial()), start_set);
    let (dfa, labels) = explore(
        a.alphabet(),
        start,
        |(i, p): &(Side, Vec<StateId>), s| {
            let i2 = Side::of(i.state().and_then(|q| a.next(q, s)));
            let mut p2: Vec<StateId> = p.iter().filter_map(|&q| b.next(q, s)).collect();
            if i2.state().is_some_and(|q| a.is_final(q)) {
                p2.push(b0);
            }
            p2.sort_unstable();
            p2.dedup();
            (i2 != Side::Dead || !p2.is_empty()).then_some((i2, p2))
        },
        |(_, p)| p.iter().any(|&q| b.is_final(q)),
    );
    Construction {
        dfa,
        labels: labels
            .into_iter()
            .map(|(i, p)| StateLabel::Concat(i, p))
            .collect(),
    }
}
