//! Grid and random verification of the bounds against constructed results.
//!
//! Every cell builds the operands, runs the construction, minimizes, and
//! compares the measured isc/itc with the bound and (for witness grids) the
//! claimed closed form. Cells are independent and run on the rayon pool;
//! output order follows the input order.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{self, Bounds, FinalProfile, StarExponent};
use crate::dfa::Dfa;
use crate::error::{Error, Result};
use crate::measures::{self, measure};
use crate::ops;
use crate::symbol::{Alphabet, Symbol};
use crate::witnesses;

/// Grids whose state bound exceeds this are refused.
pub const STATE_LIMIT: i128 = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Op {
    Union,
    Intersection,
    Complement,
    Concat,
    ConcatComplete,
    Star,
    Reversal,
}

impl Op {
    pub const ALL: [Op; 7] = [
        Op::Union,
        Op::Intersection,
        Op::Complement,
        Op::Concat,
        Op::ConcatComplete,
        Op::Star,
        Op::Reversal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Op::Union => "union",
            Op::Intersection => "intersection",
            Op::Complement => "complement",
            Op::Concat => "concat",
            Op::ConcatComplete => "concat-complete",
            Op::Star => "star",
            Op::Reversal => "reversal",
        }
    }

    pub fn is_binary(self) -> bool {
        matches!(
            self,
            Op::Union | Op::Intersection | Op::Concat | Op::ConcatComplete
        )
    }
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Op {
    type Err = Error;

    fn from_str(s: &str) -> Result<Op> {
        Op::ALL
            .into_iter()
            .find(|op| op.name() == s)
            .ok_or_else(|| Error::InvalidParameters(format!("unknown operation `{s}`")))
    }
}

/// Inclusive range written `lo..hi`, or a single value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParamRange {
    pub lo: usize,
    pub hi: usize,
}

impl ParamRange {
    pub fn new(lo: usize, hi: usize) -> ParamRange {
        ParamRange { lo, hi }
    }

    pub fn iter(self) -> std::ops::RangeInclusive<usize> {
        self.lo..=self.hi
    }
}

impl FromStr for ParamRange {
    type Err = Error;

    fn from_str(s: &str) -> Result<ParamRange> {
        let bad = || Error::InvalidParameters(format!("bad range `{s}`, expected `lo..hi`"));
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let v = num(s)?;
                (v, v)
            }
        };
        if lo > hi {
            return Err(bad());
        }
        Ok(ParamRange { lo, hi })
    }
}

impl fmt::Display for ParamRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Tight,
    SoundNotTight,
    Violated,
}

impl Verdict {
    /// VIOLATED iff measured exceeds the bound; otherwise TIGHT iff measured
    /// equals the claim (the bound itself when there is no claim).
    pub fn of(measured: usize, bound: Option<i128>, claim: Option<i128>) -> Option<Verdict> {
        let measured = measured as i128;
        if bound.is_some_and(|b| measured > b) {
            return Some(Verdict::Violated);
        }
        let target = claim.or(bound)?;
        Some(if measured == target {
            Verdict::Tight
        } else {
            Verdict::SoundNotTight
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Verdict::Tight => "TIGHT",
            Verdict::SoundNotTight => "SOUND_NOT_TIGHT",
            Verdict::Violated => "VIOLATED",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One grid cell or random instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub op: Op,
    pub m: usize,
    pub n: Option<usize>,
    pub k: usize,
    pub state_bound: Option<i128>,
    pub state_claim: Option<i128>,
    pub state_measured: usize,
    pub trans_bound: Option<i128>,
    pub trans_claim: Option<i128>,
    pub trans_measured: usize,
    pub state_verdict: Option<Verdict>,
    pub trans_verdict: Option<Verdict>,
    pub ms: u128,
}

impl BoundReport {
    #[allow(clippy::too_many_arguments)]
    fn new(
        op: Op,
        m: usize,
        n: Option<usize>,
        k: usize,
        bound: (Option<i128>, Option<i128>),
        claim: (Option<i128>, Option<i128>),
        measured: (usize, usize),
        started: Instant,
    ) -> BoundReport {
        BoundReport {
            op,
            m,
            n,
            k,
            state_bound: bound.0,
            state_claim: claim.0,
            state_measured: measured.0,
            trans_bound: bound.1,
            trans_claim: claim.1,
            trans_measured: measured.1,
            state_verdict: Verdict::of(measured.0, bound.0, claim.0),
            trans_verdict: Verdict::of(measured.1, bound.1, claim.1),
            ms: started.elapsed().as_millis(),
        }
    }

    pub fn violated(&self) -> bool {
        self.state_verdict == Some(Verdict::Violated) || self.trans_verdict == Some(Verdict::Violated)
    }
}

/// Which exponent the star witness transition count uses, per parity of m.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StarRule {
    pub even: StarExponent,
    pub odd: StarExponent,
}

impl StarRule {
    pub fn exponent_for(self, m: usize) -> StarExponent {
        if m % 2 == 0 {
            self.even
        } else {
            self.odd
        }
    }

    /// Picks, for m = 4 and m = 5, the first candidate exponent whose claimed
    /// value matches the constructed star.
    pub fn resolve() -> Result<StarRule> {
        let pick = |m: usize| -> Result<StarExponent> {
            let measured = minimized_counts(&ops::star(&witnesses::star_witness(m)?)?.dfa).1 as i128;
            StarExponent::ALL
                .into_iter()
                .find(|&e| bounds::star_witness_claim(m, e).1 == measured)
                .ok_or_else(|| {
                    Error::InvalidParameters(format!("no star exponent matches m = {m}"))
                })
        };
        Ok(StarRule {
            even: pick(4)?,
            odd: pick(5)?,
        })
    }
}

impl fmt::Display for StarRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "even m: {}, odd m: {}", self.even, self.odd)
    }
}

fn minimized_counts(d: &Dfa) -> (usize, usize) {
    let d = d.minimize();
    (d.num_states(), d.num_transitions())
}

fn pair(b: &Bounds) -> (Option<i128>, Option<i128>) {
    (Some(b.states.value), Some(b.transitions.value))
}

fn some2(v: (i128, i128)) -> (Option<i128>, Option<i128>) {
    (Some(v.0), Some(v.1))
}

fn check_scale(b: &Bounds) -> Result<()> {
    if b.states.value > STATE_LIMIT {
        return Err(Error::InvalidParameters(format!(
            "state bound {} exceeds the limit {STATE_LIMIT}",
            b.states.value
        )));
    }
    Ok(())
}

fn need_n(op: Op, n: Option<usize>) -> Result<usize> {
    n.ok_or_else(|| Error::InvalidParameters(format!("{op} needs a second parameter")))
}

/// Builds the witnesses for `op` at (m, n), runs the construction and
/// reports measured values against bounds and claims.
pub fn verify_cell(op: Op, m: usize, n: Option<usize>, star: StarRule) -> Result<BoundReport> {
    let t = Instant::now();
    match op {
        Op::Union | Op::Intersection => {
            let n = need_n(op, n)?;
            let (a, b, bounds, claim, built) = if op == Op::Union {
                let (a, b) = witnesses::union_witness(m, n)?;
                let bd = bounds::union_bounds(&measure(&a), &measure(&b))?;
                check_scale(&bd)?;
                let c = ops::union(&a, &b)?;
                (a, b, bd, bounds::union_witness_claim(m, n), c)
            } else {
                let (a, b) = witnesses::intersection_witness(m, n)?;
                let bd = bounds::intersection_bounds(&measure(&a), &measure(&b))?;
                check_scale(&bd)?;
                let c = ops::intersection(&a, &b)?;
                (a, b, bd, bounds::intersection_witness_claim(m, n), c)
            };
            let k = a.alphabet().union(b.alphabet()).len();
            let got = minimized_counts(&built.dfa);
            Ok(BoundReport::new(op, m, Some(n), k, pair(&bounds), some2(claim), got, t))
        }
        Op::Complement => {
            if m == 0 {
                return Err(Error::InvalidParameters("complement needs m >= 1".into()));
            }
            // the single word b^(m−1) has isc m
            let word = vec![Symbol::letter("b"); m - 1];
            let a = Dfa::from_word(Alphabet::letters(&["b"]), &word)?;
            let bd = bounds::complement_bounds(m, 1);
            let got = minimized_counts(&ops::complement(&a).dfa);
            let claim = bounds::complement_witness_claim(m);
            Ok(BoundReport::new(op, m, None, 1, pair(&bd), some2(claim), got, t))
        }
        Op::Concat => {
            let n = need_n(op, n)?;
            let case1 = n <= m + 1;
            let (a, b) = if case1 {
                witnesses::concat_witness_case1(m, n)?
            } else {
                witnesses::concat_witness_case2(m, n)?
            };
            let (ma, mb) = (measure(&a), measure(&b));
            let bd = bounds::concat_bounds(&ma, &mb);
            check_scale(&bd)?;
            let claim = if case1 {
                some2(bounds::concat_case1_claim(m, n))
            } else {
                pair(&bd)
            };
            let got = minimized_counts(&ops::concat(&a, &b)?.dfa);
            let k = a.alphabet().union(b.alphabet()).len();
            Ok(BoundReport::new(op, m, Some(n), k, pair(&bd), claim, got, t))
        }
        Op::ConcatComplete => {
            let n = need_n(op, n)?;
            let (a, b) = witnesses::concat_witness_case1(m, n)?;
            let (sa, sb) = (measures::sc(&a), measures::sc(&b));
            let fp = FinalProfile::of(&measure(&a));
            let k = a.alphabet().len();
            let bound = bounds::concat_state_bound_complete(sa, sb, k, &fp).value;
            if bound > STATE_LIMIT {
                return Err(Error::InvalidParameters(format!(
                    "state bound {bound} exceeds the limit {STATE_LIMIT}"
                )));
            }
            let c = ops::concat_completed(&a, &b)?.dfa;
            let got = (measures::sc(&c), c.minimize().completed().num_transitions());
            Ok(BoundReport::new(op, m, Some(n), k, (Some(bound), None), (None, None), got, t))
        }
        Op::Star => {
            let a = witnesses::star_witness(m)?;
            let bd = bounds::star_bounds(&measure(&a));
            check_scale(&bd)?;
            let claim = bounds::star_witness_claim(m, star.exponent_for(m));
            let got = minimized_counts(&ops::star(&a)?.dfa);
            Ok(BoundReport::new(op, m, None, a.num_symbols(), pair(&bd), some2(claim), got, t))
        }
        Op::Reversal => {
            let a = witnesses::reversal_witness(m)?;
            let (bd, _) = bounds::reversal_bounds(&measure(&a))?;
            check_scale(&bd)?;
            let claim = bounds::reversal_witness_claim(m);
            let got = minimized_counts(&ops::reversal(&a)?.dfa);
            Ok(BoundReport::new(op, m, None, a.num_symbols(), pair(&bd), some2(claim), got, t))
        }
    }
}

/// All cells of the grid, in row-major (m, n) order.
pub fn verify_grid(op: Op, ms: ParamRange, ns: Option<ParamRange>) -> Result<Vec<BoundReport>> {
    let cells: Vec<(usize, Option<usize>)> = match (op.is_binary(), ns) {
        (true, Some(ns)) => ms
            .iter()
            .flat_map(|m| ns.iter().map(move |n| (m, Some(n))))
            .collect(),
        (true, None) => return Err(Error::InvalidParameters(format!("{op} needs an n range"))),
        (false, None) => ms.iter().map(|m| (m, None)).collect(),
        (false, Some(_)) => {
            return Err(Error::InvalidParameters(format!("{op} takes a single range")))
        }
    };
    let star = if op == Op::Star {
        StarRule::resolve()?
    } else {
        StarRule {
            even: StarExponent::HalfMinusOne,
            odd: StarExponent::HalfMinusHalf,
        }
    };
    cells
        .into_par_iter()
        .map(|(m, n)| verify_cell(op, m, n, star))
        .collect()
}

/// A random trim-minimal DFA with a nonempty finite language: a partial
/// transition table where every edge goes forward in a fixed state order,
/// minimized. `max_states` ≥ 1.
pub fn random_dfa<R: Rng>(rng: &mut R, max_states: usize, alphabet: &Alphabet) -> Dfa {
    loop {
        let n = rng.gen_range(1..=max_states);
        let mut d = Dfa::new(alphabet.clone(), n, 0);
        for q in 0..n - 1 {
            for a in 0..alphabet.len() {
                if rng.gen_bool(0.6) {
                    d.set_transition(q, a, rng.gen_range(q + 1..n));
                }
            }
        }
        for q in 0..n {
            if rng.gen_bool(0.35) {
                d.set_final(q, true);
            }
        }
        d.set_final(n - 1, true);
        let d = d.minimize();
        if d.num_finals() > 0 {
            return d;
        }
    }
}

/// Alphabet {a, b, c} cut to its first `k` letters.
pub fn letters(k: usize) -> Alphabet {
    Alphabet::letters(&["a", "b", "c"][..k])
}

/// `count` reproducible pairs of random operands sharing an alphabet of
/// 1 to `max_symbols` letters.
pub fn random_pairs(seed: u64, count: usize, max_states: usize, max_symbols: usize) -> Vec<(Dfa, Dfa)> {
    (0..count)
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(i as u64));
            let alphabet = letters(rng.gen_range(1..=max_symbols));
            let a = random_dfa(&mut rng, max_states, &alphabet);
            let b = random_dfa(&mut rng, max_states, &alphabet);
            (a, b)
        })
        .collect()
}

/// Bound reports for every operation applicable to one random pair.
pub fn soundness_reports(a: &Dfa, b: &Dfa) -> Result<Vec<BoundReport>> {
    let (ma, mb) = (measure(a), measure(b));
    let k = a.alphabet().union(b.alphabet()).len();
    let mut out = Vec::new();
    let mut push = |op: Op, n: Option<usize>, bd: &Bounds, got: (usize, usize), t: Instant| {
        out.push(BoundReport::new(op, ma.m, n, k, pair(bd), (None, None), got, t));
    };
    if ma.m >= 2 && mb.m >= 2 {
        let t = Instant::now();
        let bd = bounds::union_bounds(&ma, &mb)?;
        push(Op::Union, Some(mb.m), &bd, minimized_counts(&ops::union(a, b)?.dfa), t);
        let t = Instant::now();
        let bd = bounds::intersection_bounds(&ma, &mb)?;
        push(Op::Intersection, Some(mb.m), &bd, minimized_counts(&ops::intersection(a, b)?.dfa), t);
    }
    let t = Instant::now();
    let bd = bounds::complement_bounds(ma.m, ma.k);
    push(Op::Complement, None, &bd, minimized_counts(&ops::complement(a).dfa), t);
    let t = Instant::now();
    let bd = bounds::concat_bounds(&ma, &mb);
    push(Op::Concat, Some(mb.m), &bd, minimized_counts(&ops::concat(a, b)?.dfa), t);
    let t = Instant::now();
    let bd = bounds::star_bounds(&ma);
    push(Op::Star, None, &bd, minimized_counts(&ops::star(a)?.dfa), t);
    if ma.k >= 2 {
        let t = Instant::now();
        let (bd, _) = bounds::reversal_bounds(&ma)?;
        push(Op::Reversal, None, &bd, minimized_counts(&ops::reversal(a)?.dfa), t);
    }
    Ok(out)
}

/// Soundness reports over `count` random pairs (at most 6 states, at most 3
/// letters), in instance order.
pub fn random_soundness(seed: u64, count: usize) -> Result<Vec<BoundReport>> {
    let pairs = random_pairs(seed, count, 6, 3);
    let per: Vec<Vec<BoundReport>> = pairs
        .par_iter()
        .map(|(a, b)| soundness_reports(a, b))
        .collect::<Result<_>>()?;
    Ok(per.into_iter().flatten().collect())
}

pub const CSV_HEADER: &str = "op,m,n,k,state_bound,state_claim,state_measured,trans_bound,trans_claim,trans_measured,state_verdict,trans_verdict,ms";

fn opt<T: fmt::Display>(v: &Option<T>) -> String {
    v.as_ref().map(ToString::to_string).unwrap_or_default()
}

fn fields(r: &BoundReport) -> [String; 13] {
    [
        r.op.to_string(),
        r.m.to_string(),
        opt(&r.n),
        r.k.to_string(),
        opt(&r.state_bound),
        opt(&r.state_claim),
        r.state_measured.to_string(),
        opt(&r.trans_bound),
        opt(&r.trans_claim),
        r.trans_measured.to_string(),
        opt(&r.state_verdict),
        opt(&r.trans_verdict),
        r.ms.to_string(),
    ]
}

pub fn to_csv(reports: &[BoundReport]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in reports {
        out.push_str(&fields(r).join(","));
        out.push('\n');
    }
    out
}

pub fn to_markdown(reports: &[BoundReport]) -> String {
    let cols: Vec<&str> = CSV_HEADER.split(',').collect();
    let mut out = format!("| {} |\n|{}\n", cols.join(" | "), "---|".repeat(cols.len()));
    for r in reports {
        out.push_str(&format!("| {} |\n", fields(r).join(" | ")));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!("2..5".parse::<ParamRange>().unwrap(), ParamRange::new(2, 5));
        assert_eq!("2..=5".parse::<ParamRange>().unwrap(), ParamRange::new(2, 5));
        assert_eq!("4".parse::<ParamRange>().unwrap(), ParamRange::new(4, 4));
        assert!("5..2".parse::<ParamRange>().is_err());
        assert!("a..2".parse::<ParamRange>().is_err());
    }

    #[test]
    fn verdicts() {
        assert_eq!(Verdict::of(5, Some(4), Some(5)), Some(Verdict::Violated));
        assert_eq!(Verdict::of(4, Some(4), Some(3)), Some(Verdict::SoundNotTight));
        assert_eq!(Verdict::of(3, Some(4), Some(3)), Some(Verdict::Tight));
        assert_eq!(Verdict::of(4, Some(4), None), Some(Verdict::Tight));
        assert_eq!(Verdict::of(4, None, None), None);
    }

    #[test]
    fn op_names_round_trip() {
        for op in Op::ALL {
            assert_eq!(op.name().parse::<Op>().unwrap(), op);
        }
        assert!("kleene".parse::<Op>().is_err());
    }

    #[test]
    fn union_cell() {
        let r = verify_cell(Op::Union, 3, Some(3), StarRule::resolve().unwrap()).unwrap();
        assert_eq!((r.state_measured, r.trans_measured), (7, 11));
        assert_eq!(r.state_verdict, Some(Verdict::Tight));
        assert_eq!(r.trans_verdict, Some(Verdict::Tight));
    }

    #[test]
    fn grid_shape_errors() {
        let r = ParamRange::new(2, 3);
        assert!(verify_grid(Op::Union, r, None).is_err());
        assert!(verify_grid(Op::Star, r, Some(r)).is_err());
    }

    #[test]
    fn scale_limit() {
        let star = StarRule::resolve().unwrap();
        assert!(verify_cell(Op::Star, 30, None, star).is_err());
    }

    #[test]
    fn random_dfas_are_minimal_and_finite() {
        for (a, b) in random_pairs(7, 50, 6, 3) {
            for d in [a, b] {
                assert!(d.is_acyclic());
                assert!(d.is_minimal());
                assert!(d.num_finals() > 0);
            }
        }
    }

    #[test]
    fn random_pairs_are_reproducible() {
        assert_eq!(random_pairs(3, 5, 6, 3), random_pairs(3, 5, 6, 3));
    }

    #[test]
    fn csv_layout() {
        let star = StarRule::resolve().unwrap();
        let r = verify_cell(Op::Star, 4, None, star).unwrap();
        let csv = to_csv(&[r]);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some(CSV_HEADER));
        let row: Vec<&str> = lines.next().unwrap().split(',').collect();
        assert_eq!(row.len(), 13);
        assert_eq!(&row[..4], ["star", "4", "", "3"]);
        assert_eq!(row[10], "TIGHT");
    }
}
