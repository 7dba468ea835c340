//! Minimization of partial DFAs by partition refinement.
//!
//! Works on cyclic automata too. The implicit dead state takes part in the
//! refinement as a block of its own, so a missing transition and a
//! transition into some live block always separate states.

use std::collections::HashMap;

use crate::dfa::Dfa;

const DEAD: usize = usize::MAX;

impl Dfa {
    /// The minimal partial DFA of the same language, canonically numbered.
    pub fn minimize(&self) -> Dfa {
        let t = self.trim();
        let n = t.num_states();
        let k = t.num_symbols();

        let mut block: Vec<usize> = (0..n).map(|q| usize::from(t.is_final(q))).collect();
        let mut num_blocks = normalize(&mut block);
        loop {
            let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
            let mut next = vec![0; n];
            for q in 0..n {
                let mut sig = Vec::with_capacity(k + 1);
                sig.push(block[q]);
                sig.extend((0..k).map(|a| t.next(q, a).map_or(DEAD, |r| block[r])));
                let fresh = ids.len();
                next[q] = *ids.entry(sig).or_insert(fresh);
            }
            let count = ids.len();
            block = next;
            if count == num_blocks {
                break;
            }
            num_blocks = count;
        }

        let mut quotient = Dfa::new(t.alphabet().clone(), num_blocks, block[t.initial()]);
        for q in 0..n {
            quotient.set_final(block[q], t.is_final(q));
            for a in 0..k {
                if let Some(r) = t.next(q, a) {
                    quotient.set_transition(block[q], a, block[r]);
                }
            }
        }
        quotient.canonical()
    }

    /// True iff no smaller partial DFA accepts the same language.
    pub fn is_minimal(&self) -> bool {
        self.minimize().num_states() == self.trim().num_states()
            && self.trim().num_states() == self.num_states()
    }
}

fn normalize(block: &mut [usize]) -> usize {
    let mut ids = HashMap::new();
    for b in block.iter_mut() {
        let fresh = ids.len();
        *b = *ids.entry(*b).or_insert(fresh);
    }
    ids.len()
}
