use super::{finite_operand, Construction, StateLabel};
use crate::dfa::Dfa;
use crate::error::Result;
use crate::nfa::Nfa;

/// Reverses every transition of `a` and determinizes the resulting NFA.
pub fn reversal(a: &Dfa) -> Result<Construction> {
    let a = finite_operand(a)?;
    let (dfa, subsets) = Nfa::reverse_of(&a).subset_construction();
    Ok(Construction {
        dfa,
        labels: subsets.into_iter().map(StateLabel::Subset).collect(),
    })
}
