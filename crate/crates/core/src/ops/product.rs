use super::{explore, finite_pair, Construction, Side, StateLabel};
use crate::dfa::Dfa;
use crate::error::Result;

/// Accessible product for L(a) ∪ L(b). One component may be dead; the pair
/// of two dead components is never built.
pub fn union(a: &Dfa, b: &Dfa) -> Result<Construction> {
    let (a, b) = finite_pair(a, b)?;
    let start = (Side::State(a.initial()), Side::State(b.initial()));
    let (dfa, pairs) = explore(
        a.alphabet(),
        start,
        |&(x, y), s| {
            let x2 = Side::of(x.state().and_then(|q| a.next(q, s)));
            let y2 = Side::of(y.state().and_then(|q| b.next(q, s)));
            (x2 != Side::Dead || y2 != Side::Dead).then_some((x2, y2))
        },
        |&(x, y)| {
            x.state().is_some_and(|q| a.is_final(q)) || y.state().is_some_and(|q| b.is_final(q))
        },
    );
    Ok(Construction {
        dfa,
        labels: pairs.into_iter().map(|(x, y)| StateLabel::Pair(x, y)).collect(),
    })
}

/// Standard product for L(a) ∩ L(b); a missing transition on either side
/// kills the pair.
pub fn intersection(a: &Dfa, b: &Dfa) -> Result<Construction> {
    let (a, b) = finite_pair(a, b)?;
    let (dfa, pairs) = explore(
        a.alphabet(),
        (a.initial(), b.initial()),
        |&(x, y), s| Some((a.next(x, s)?, b.next(y, s)?)),
        |&(x, y)| a.is_final(x) && b.is_final(y),
    );
    Ok(Construction {
        dfa,
        labels: pairs
            .into_iter()
            .map(|(x, y)| StateLabel::Pair(Side::State(x), Side::State(y)))
            .collect(),
    })
}
