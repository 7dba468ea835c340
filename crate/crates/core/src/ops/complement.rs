use super::{Construction, StateLabel};
use crate::dfa::Dfa;

/// Complement over `a`'s own alphabet: trim, complete with one sink, swap
/// final and non-final states. The result is complete and cyclic.
pub fn complement(a: &Dfa) -> Construction {
    let trimmed = a.trim();
    let n = trimmed.num_states();
    let mut dfa = trimmed.completed();
    for q in 0..dfa.num_states() {
        let fin = dfa.is_final(q);
        dfa.set_final(q, !fin);
    }
    let mut labels: Vec<StateLabel> = (0..n).map(StateLabel::Original).collect();
    if dfa.num_states() > n {
        labels.push(StateLabel::Sink);
    }
    Construction { dfa, labels }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::language::FiniteLanguage;
    use crate::oracle::{self, minimal_dfa_from_words};
    use crate::symbol::Alphabet;

    fn b_power(m: usize) -> Dfa {
        let w = vec!["b"; m].join(" ");
        minimal_dfa_from_words(&FiniteLanguage::parse(Alphabet::letters(&["b"]), &[&w]).unwrap())
    }

    #[test]
    fn complement_of_b_cubed() {
        let c = complement(&b_power(3));
        assert!(c.dfa.is_complete());
        assert!(!c.dfa.is_acyclic());
        let m = c.minimized();
        assert_eq!((m.num_states(), m.num_transitions()), (5, 5));
        let expected = b_power(3).enumerate_language().unwrap().complement_up_to(8);
        assert_eq!(oracle::bounded_words(&m, 8), expected);
    }

    #[test]
    fn complement_of_empty_accepts_everything() {
        let m = complement(&Dfa::empty(Alphabet::letters(&["b"]))).minimized();
        assert_eq!(m.num_states(), 1);
        assert!(m.is_final(0));
        assert_eq!(m.next(0, 0), Some(0));
    }

    #[test]
    fn involution() {
        let a = b_power(2);
        let twice = complement(&complement(&a).dfa).minimized();
        assert!(oracle::agree_up_to(&twice, &a, a.num_states() + 2));
        assert!(twice.is_isomorphic(&a));
    }
}
