//! Witness families: operand DFAs on which the operation bounds are reached.
//!
//! Several families need alphabets that grow with the parameters; they use
//! indexed symbols (`a_i_j`, `a_j`).

use crate::dfa::Dfa;
use crate::error::{Error, Result};
use crate::symbol::{Alphabet, Symbol};

fn require(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParameters(what.to_owned()))
    }
}

fn id(d: &Dfa, s: &Symbol) -> usize {
    d.symbol_id(s).expect("symbol belongs to the witness alphabet")
}

/// Union witnesses over {b, c} ∪ {a_i_j | i ∈ [1,m−1], j ∈ [1,n−1], (i,j) ≠ (m−1,n−1)}.
///
/// A is a b-chain of length m−1 with δ_A(0, a_i_j) = i; B is a c-chain of
/// length n−1 with δ_B(0, a_i_j) = j. Finals are the chain ends.
pub fn union_witness(m: usize, n: usize) -> Result<(Dfa, Dfa)> {
    require(m >= 2 && n >= 2, "union witnesses need m, n >= 2")?;
    let b = Symbol::letter("b");
    let c = Symbol::letter("c");
    let mut pairs = Vec::new();
    for i in 1..m {
        for j in 1..n {
            if (i, j) != (m - 1, n - 1) {
                pairs.push((i, j, Symbol::indexed("a", &[i as u32, j as u32])));
            }
        }
    }
    let sigma = Alphabet::new(
        [b.clone(), c.clone()]
            .into_iter()
            .chain(pairs.iter().map(|p| p.2.clone())),
    );

    let mut da = Dfa::new(sigma.clone(), m, 0);
    let bi = id(&da, &b);
    for i in 0..m - 1 {
        da.set_transition(i, bi, i + 1);
    }
    let mut db = Dfa::new(sigma, n, 0);
    let ci = id(&db, &c);
    for i in 0..n - 1 {
        db.set_transition(i, ci, i + 1);
    }
    for (i, j, s) in &pairs {
        let x = id(&da, s);
        da.set_transition(0, x, *i);
        db.set_transition(0, x, *j);
    }
    da.set_final(m - 1, true);
    db.set_final(n - 1, true);
    Ok((da, db))
}

/// Intersection witnesses over {a_i_j | i ∈ [1,m−2], j ∈ [1,n−2]} ∪ {a_(m−1)_(n−1)}.
///
/// δ_A(x, a_i_j) = x + i and δ_B(x, a_i_j) = x + j wherever the target stays
/// in range; the extra symbol jumps from 0 straight to the final state.
pub fn intersection_witness(m: usize, n: usize) -> Result<(Dfa, Dfa)> {
    require(m >= 2 && n >= 2, "intersection witnesses need m, n >= 2")?;
    let jump = Symbol::indexed("a", &[(m - 1) as u32, (n - 1) as u32]);
    let mut steps = Vec::new();
    for i in 1..m.saturating_sub(1) {
        for j in 1..n.saturating_sub(1) {
            steps.push((i, j, Symbol::indexed("a", &[i as u32, j as u32])));
        }
    }
    let sigma = Alphabet::new(steps.iter().map(|s| s.2.clone()).chain([jump.clone()]));

    let mut da = Dfa::new(sigma.clone(), m, 0);
    let mut db = Dfa::new(sigma, n, 0);
    for (i, j, s) in &steps {
        let x = id(&da, s);
        for q in 0..m {
            if q + i < m {
                da.set_transition(q, x, q + i);
            }
        }
        for q in 0..n {
            if q + j < n {
                db.set_transition(q, x, q + j);
            }
        }
    }
    let x = id(&da, &jump);
    da.set_transition(0, x, m - 1);
    db.set_transition(0, x, n - 1);
    da.set_final(m - 1, true);
    db.set_final(n - 1, true);
    Ok((da, db))
}

/// The chain accepting exactly {b^m}.
pub fn complement_witness(m: usize) -> Result<Dfa> {
    require(m >= 1, "complement witness needs m >= 1")?;
    let mut d = Dfa::new(Alphabet::letters(&["b"]), m + 1, 0);
    for i in 0..m {
        d.set_transition(i, 0, i + 1);
    }
    d.set_final(m, true);
    Ok(d)
}

/// Concatenation witnesses for m + 1 ≥ n over {a, b}: A is an {a,b}-chain
/// with every state final; B takes a single b-step and then an {a,b}-chain
/// to its only final state n − 1.
pub fn concat_witness_case1(m: usize, n: usize) -> Result<(Dfa, Dfa)> {
    require(m >= 2 && n >= 2, "concatenation witnesses need m, n >= 2")?;
    let sigma = Alphabet::letters(&["a", "b"]);
    let mut da = Dfa::new(sigma.clone(), m, 0);
    for i in 0..m - 1 {
        da.set_transition(i, 0, i + 1);
        da.set_transition(i, 1, i + 1);
    }
    for i in 0..m {
        da.set_final(i, true);
    }
    let mut db = Dfa::new(sigma, n, 0);
    db.set_transition(0, 1, 1);
    for i in 1..n - 1 {
        db.set_transition(i, 0, i + 1);
        db.set_transition(i, 1, i + 1);
    }
    db.set_final(n - 1, true);
    Ok((da, db))
}

/// Concatenation witnesses for n > m + 1 over {b} ∪ {a_j | j ∈ [1,n−2]}.
///
/// A is a chain on every symbol with all states final. B is a b-chain with
/// δ_B(i, a_j) = i + j for i ≥ 1 and δ_B(0, a_j) = j for j ≥ 2.
pub fn concat_witness_case2(m: usize, n: usize) -> Result<(Dfa, Dfa)> {
    require(m >= 2 && n > m + 1, "case-2 concatenation witnesses need m >= 2 and n > m + 1")?;
    let b = Symbol::letter("b");
    let letters: Vec<Symbol> = (1..=n - 2).map(|j| Symbol::indexed("a", &[j as u32])).collect();
    let sigma = Alphabet::new([b.clone()].into_iter().chain(letters.iter().cloned()));

    let mut da = Dfa::new(sigma.clone(), m, 0);
    for i in 0..m - 1 {
        for s in 0..sigma.len() {
            da.set_transition(i, s, i + 1);
        }
    }
    for i in 0..m {
        da.set_final(i, true);
    }

    let mut db = Dfa::new(sigma, n, 0);
    let bi = id(&db, &b);
    for i in 0..n - 1 {
        db.set_transition(i, bi, i + 1);
    }
    for (j, s) in (1..).zip(&letters) {
        let x = id(&db, s);
        for i in 1..n - 1 {
            if i + j < n {
                db.set_transition(i, x, i + j);
            }
        }
        if j >= 2 {
            db.set_transition(0, x, j);
        }
    }
    db.set_final(n - 1, true);
    Ok((da, db))
}

/// Star witness over {a, b, c}: a chain 0 → 1 → … → m−1 plus δ(0, b) = m−1,
/// finals {m−2, m−1}.
///
/// Every chain edge carries a. Edges leaving states i ≥ 1 carry b, and the
/// edge leaving i carries c iff m − 2 − i is even, so the last edge always
/// carries {a, b, c}, and the first edge is {a, c} for even m and {a} for
/// odd m.
pub fn star_witness(m: usize) -> Result<Dfa> {
    require(m >= 4, "star witness needs m >= 4")?;
    let mut d = Dfa::new(Alphabet::letters(&["a", "b", "c"]), m, 0);
    let (a, b, c) = (0, 1, 2);
    for i in 0..m - 1 {
        d.set_transition(i, a, i + 1);
        if i >= 1 {
            d.set_transition(i, b, i + 1);
        }
        if (m - 2 - i) % 2 == 0 {
            d.set_transition(i, c, i + 1);
        }
    }
    d.set_transition(0, b, m - 1);
    d.set_final(m - 2, true);
    d.set_final(m - 1, true);
    Ok(d)
}

/// Reversal witness over {a, b} with h = ⌊m/2⌋: an {a,b}-chain up to h − 1,
/// a single b-edge into h, then an {a,b}-chain to m − 1. States h through
/// m − 1 are final.
///
/// For m = 2p − 1 this is h = p − 1. For m = 2p the break sits one state
/// later, at h = p, which is where the drawn even-case automaton puts it
/// once its last label 2p − 3 is read as m − 1.
pub fn reversal_witness(m: usize) -> Result<Dfa> {
    require(m >= 4, "reversal witness needs m >= 4")?;
    let h = m / 2;
    let mut d = Dfa::new(Alphabet::letters(&["a", "b"]), m, 0);
    for i in 0..m - 1 {
        if i + 1 != h {
            d.set_transition(i, 0, i + 1);
        }
        d.set_transition(i, 1, i + 1);
    }
    for i in h..m {
        d.set_final(i, true);
    }
    Ok(d)
}
