use findfa::bounds::{self, FinalProfile};
use findfa::harness::{self, Op, ParamRange};
use findfa::io::{parse_dfa, serialize_dfa};
use findfa::measures::{self, measure};
use findfa::{ops, oracle, witnesses, Alphabet, Dfa};
use proptest::prelude::*;

/// Acyclic partial DFAs over `k` letters: every edge jumps forward.
fn dfa_over(max_states: usize, k: usize) -> impl Strategy<Value = Dfa> {
    (1..=max_states).prop_flat_map(move |n| {
        (
            prop::collection::vec(prop::option::weighted(0.6, 0..n), n * k),
            prop::collection::vec(any::<bool>(), n),
        )
            .prop_map(move |(edges, finals)| {
                let mut d = Dfa::new(harness::letters(k), n, 0);
                for q in 0..n {
                    for a in 0..k {
                        let span = n - q - 1;
                        if let (Some(off), true) = (edges[q * k + a], span > 0) {
                            d.set_transition(q, a, q + 1 + off % span);
                        }
                    }
                    d.set_final(q, finals[q]);
                }
                d
            })
    })
}

fn acyclic_dfa(max_states: usize, max_symbols: usize) -> impl Strategy<Value = Dfa> {
    (1..=max_symbols).prop_flat_map(move |k| dfa_over(max_states, k))
}

fn pair() -> impl Strategy<Value = (Dfa, Dfa)> {
    (1..=3usize).prop_flat_map(|k| (dfa_over(6, k), dfa_over(6, k)))
}

fn nonempty(d: &Dfa) -> bool {
    d.minimize().num_finals() > 0
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn text_round_trip(d in acyclic_dfa(8, 3)) {
        let text = serialize_dfa(&d);
        let back = parse_dfa(&text).unwrap();
        prop_assert_eq!(&back, &d);
        prop_assert_eq!(serialize_dfa(&back), text);
    }

    #[test]
    fn minimize_is_idempotent_and_canonical(d in acyclic_dfa(8, 3)) {
        let m = d.minimize();
        prop_assert!(m.is_minimal());
        prop_assert_eq!(m.minimize(), m.clone());
        prop_assert_eq!(m.canonical(), m);
    }

    #[test]
    fn minimize_matches_quotient_oracle(d in acyclic_dfa(7, 3)) {
        let lang = d.enumerate_language().unwrap();
        prop_assert!(d.minimize().is_isomorphic(&oracle::minimal_dfa_from_words(&lang)));
    }

    #[test]
    fn measures_are_consistent(d in acyclic_dfa(7, 3)) {
        let ms = measure(&d);
        let min = d.minimize();
        prop_assert_eq!(ms.m, min.num_states());
        prop_assert_eq!(ms.itc, min.num_transitions());
        prop_assert_eq!(ms.f, min.num_finals());
        prop_assert_eq!(ms.f_at.len(), ms.m + 1);
        prop_assert_eq!(ms.per_symbol.values().map(|s| s.itc).sum::<usize>(), ms.itc);
        for s in ms.per_symbol.values() {
            prop_assert_eq!(s.s + s.s_bar, 1);
            prop_assert_eq!(s.e + s.e_bar, ms.f);
            prop_assert_eq!(s.itc + s.t_bar, ms.m);
        }
        if ms.f > 0 {
            prop_assert_eq!(measures::sc(&d), ms.m + usize::from(!min.is_complete()));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn operations_match_word_sets((a, b) in pair()) {
        let la = a.enumerate_language().unwrap();
        let lb = b.enumerate_language().unwrap();
        let words = |d: Dfa| d.enumerate_language().unwrap().words().clone();
        prop_assert_eq!(words(ops::union(&a, &b).unwrap().minimized()), la.union(&lb).words().clone());
        prop_assert_eq!(
            words(ops::intersection(&a, &b).unwrap().minimized()),
            la.intersection(&lb).words().clone()
        );
        prop_assert_eq!(words(ops::concat(&a, &b).unwrap().minimized()), la.concat(&lb).words().clone());
        prop_assert_eq!(words(ops::reversal(&a).unwrap().minimized()), la.reversed().words().clone());

        let bound = 8;
        let star = oracle::bounded_words(&ops::star(&a).unwrap().dfa, bound);
        prop_assert_eq!(star.words(), &la.star_up_to(bound).words().clone());
        let comp = oracle::bounded_words(&ops::complement(&a).dfa, 6);
        prop_assert_eq!(comp.words(), &la.complement_up_to(6).words().clone());
    }

    #[test]
    fn completed_concat_is_complete_and_equivalent((a, b) in pair()) {
        let partial = ops::concat(&a, &b).unwrap().minimized();
        let complete = ops::concat_completed(&a, &b).unwrap();
        prop_assert!(complete.dfa.is_complete());
        prop_assert_eq!(complete.minimized(), partial);
    }

    #[test]
    fn sound_bounds_hold((a, b) in pair()) {
        prop_assume!(nonempty(&a) && nonempty(&b));
        let (ma, mb) = (measure(&a), measure(&b));
        let k = a.alphabet().len();
        let c = ops::concat(&a, &b).unwrap().minimized();
        let fp = FinalProfile::of(&ma);
        prop_assert!(c.num_states() as i128 <= bounds::concat_state_bound_incomplete(ma.m, mb.m, k, &fp).value);
        prop_assert!(c.num_transitions() as i128 <= bounds::concat_transition_bound(&ma, &mb, k).value);
        if ma.m >= 2 && mb.m >= 2 {
            let u = ops::union(&a, &b).unwrap().minimized();
            let ub = bounds::union_bounds(&ma, &mb).unwrap();
            prop_assert!(u.num_states() as i128 <= ub.states.value);
            prop_assert!(u.num_transitions() as i128 <= ub.transitions.value);
        }
        let comp = ops::complement(&a).minimized();
        let cb = bounds::complement_bounds(ma.m, k);
        prop_assert!(comp.num_states() as i128 <= cb.states.value);
        prop_assert!(comp.num_transitions() as i128 <= cb.transitions.value);
    }

    #[test]
    fn uncapped_complete_form_dominates_capped(m in 1usize..9, n in 1usize..9, k in 1usize..4, finals in prop::collection::vec(any::<bool>(), 1..9)) {
        let positions: Vec<usize> = finals.iter().take(m).enumerate().filter_map(|(i, &f)| f.then_some(i)).collect();
        let fp = FinalProfile::from_positions(m, &positions);
        prop_assert!(
            bounds::concat_state_bound_complete(m, n, k, &fp).value
                >= bounds::concat_state_bound_complete_old(m, n, k, &fp).value
        );
    }
}

#[test]
fn case1_closed_form_equals_state_bound() {
    for n in 2..=7 {
        for m in (n - 1).max(2)..=7 {
            let (a, b) = witnesses::concat_witness_case1(m, n).unwrap();
            let (ma, mb) = (measure(&a), measure(&b));
            let k = a.alphabet().union(b.alphabet()).len();
            let fp = FinalProfile::of(&ma);
            let (states, transitions) = bounds::concat_case1_claim(m, n);
            assert_eq!(states, bounds::concat_state_bound_incomplete(m, n, k, &fp).value, "({m},{n})");
            if m == n {
                assert_eq!(transitions, bounds::concat_transition_bound(&ma, &mb, k).value, "({m},{n})");
            }
        }
    }
}

#[test]
fn witnesses_are_minimal_with_expected_size() {
    for m in 2..=7 {
        for n in 2..=7 {
            let (a, b) = witnesses::union_witness(m, n).unwrap();
            assert!(a.is_minimal() && b.is_minimal());
            assert_eq!((a.num_states(), b.num_states()), (m, n));
            let (a, b) = witnesses::concat_witness_case2(m, n.max(m + 2)).unwrap();
            assert!(a.is_minimal() && b.is_minimal());
        }
        let (a, b) = witnesses::intersection_witness(m.max(3), m.max(3)).unwrap();
        assert!(a.is_minimal() && b.is_minimal());
    }
    for m in 1..=9 {
        let d = witnesses::complement_witness(m).unwrap();
        assert!(d.is_minimal());
        assert_eq!(d.num_states(), m + 1);
    }
    for m in 4..=9 {
        for d in [witnesses::star_witness(m).unwrap(), witnesses::reversal_witness(m).unwrap()] {
            assert!(d.is_minimal());
            assert_eq!(d.num_states(), m);
        }
    }
}

#[test]
fn verification_is_deterministic() {
    assert_eq!(harness::random_pairs(7, 50, 6, 3), harness::random_pairs(7, 50, 6, 3));
    assert_ne!(harness::random_pairs(7, 50, 6, 3), harness::random_pairs(8, 50, 6, 3));
    let run = || {
        harness::to_csv(&harness::verify_grid(Op::Union, ParamRange::new(2, 5), Some(ParamRange::new(2, 5))).unwrap())
    };
    let strip = |s: String| s.lines().map(|l| l.rsplit_once(',').unwrap().0.to_owned()).collect::<Vec<_>>();
    assert_eq!(strip(run()), strip(run()));
    let a = harness::random_soundness(3, 40).unwrap();
    let b = harness::random_soundness(3, 40).unwrap();
    assert_eq!(a.len(), b.len());
    assert!(a.iter().zip(&b).all(|(x, y)| (x.m, x.n, x.state_measured, x.trans_measured)
        == (y.m, y.n, y.state_measured, y.trans_measured)));
}

#[test]
fn alphabet_of_letters() {
    assert_eq!(harness::letters(2), Alphabet::letters(&["a", "b"]));
}

fn document() -> impl Strategy<Value = String> {
    let token = prop::sample::select(vec![
        "alphabet:", "states:", "initial:", "finals:", "trans:", "a", "b", "a_1", "B", "0", "1", "2",
        "3", "99999999999", "-1", "#", ":", " ", " ", "\n", "\n", "\n", "..",
    ]);
    prop::collection::vec(token, 0..60).prop_map(|t| t.concat())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(3000))]

    #[test]
    fn parsers_never_panic(text in document(), raw in ".{0,40}") {
        for input in [&text, &raw] {
            if let Ok(d) = parse_dfa(input) {
                let printed = serialize_dfa(&d);
                prop_assert_eq!(parse_dfa(&printed).unwrap(), d);
            }
            if let Ok(s) = input.parse::<findfa::Symbol>() {
                prop_assert_eq!(s.to_string().parse::<findfa::Symbol>().unwrap(), s);
            }
            if let Ok(r) = input.parse::<ParamRange>() {
                prop_assert_eq!(r.to_string().parse::<ParamRange>().unwrap(), r);
            }
            let _ = input.parse::<Op>();
        }
    }

    #[test]
    fn mutated_witness_documents_never_panic(m in 2usize..6, pos in any::<prop::sample::Index>(), byte in any::<u8>()) {
        let (a, _) = witnesses::union_witness(m, m).unwrap();
        let mut bytes = serialize_dfa(&a).into_bytes();
        let i = pos.index(bytes.len());
        bytes[i] = byte;
        if let Ok(text) = String::from_utf8(bytes) {
            let _ = parse_dfa(&text);
        }
    }
}
