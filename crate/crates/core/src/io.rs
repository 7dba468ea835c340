//! Line-oriented text format for DFAs.
//!
//! ```text
//! alphabet: b c a_1_1
//! states: 4
//! initial: 0
//! finals: 2 3
//! trans:
//! 0 b 1
//! 1 c 2
//! ```
//!
//! Blank lines and lines starting with `#` are ignored. The four header
//! fields may come in any order but each exactly once, before `trans:`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::dfa::{Dfa, RawDfa, StateId};
use crate::error::{Error, Result};
use crate::symbol::Symbol;

/// Largest state count a document may declare.
pub const MAX_STATES: usize = 1 << 20;

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_state(tok: &str, line: usize, what: &str) -> Result<StateId> {
    tok.parse()
        .map_err(|_| err(line, format!("{what}: expected a state number, found `{tok}`")))
}

fn parse_symbol(tok: &str, line: usize) -> Result<Symbol> {
    tok.parse().map_err(|e: Error| err(line, e.to_string()))
}

#[derive(Default)]
struct Header {
    alphabet: Option<Vec<Symbol>>,
    states: Option<usize>,
    initial: Option<(StateId, usize)>,
    finals: Option<(Vec<StateId>, usize)>,
}

/// Parses a DFA document. Errors carry the 1-based line number.
pub fn parse_dfa(text: &str) -> Result<Dfa> {
    let mut header = Header::default();
    let mut in_trans = false;
    let mut transitions: Vec<(StateId, Symbol, StateId)> = Vec::new();
    let mut seen: BTreeMap<(StateId, Symbol), StateId> = BTreeMap::new();
    let mut last_line = 0;

    for (idx, raw_line) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let body = raw_line.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        if in_trans {
            let toks: Vec<&str> = body.split_whitespace().collect();
            let [src, sym, dst] = toks[..] else {
                return Err(err(line, "expected `<src> <symbol> <dst>`"));
            };
            let src = parse_state(src, line, "source")?;
            let sym = parse_symbol(sym, line)?;
            let dst = parse_state(dst, line, "target")?;
            let n = header.states.unwrap_or(0);
            if src >= n || dst >= n {
                return Err(err(line, format!("state out of range (states: {n})")));
            }
            if !header.alphabet.as_ref().is_some_and(|a| a.contains(&sym)) {
                return Err(err(line, format!("unknown symbol {sym}")));
            }
            match seen.insert((src, sym.clone()), dst) {
                Some(prev) if prev != dst => {
                    return Err(err(line, format!("nondeterministic on ({src},{sym})")));
                }
                Some(_) => continue,
                None => {}
            }
            transitions.push((src, sym, dst));
            continue;
        }

        let Some((key, value)) = body.split_once(':') else {
            return Err(err(line, format!("expected `key: value`, found `{body}`")));
        };
        let value = value.trim();
        match key.trim() {
            "alphabet" if header.alphabet.is_none() => {
                let syms = value
                    .split_whitespace()
                    .map(|t| parse_symbol(t, line))
                    .collect::<Result<Vec<_>>>()?;
                let mut sorted = syms.clone();
                sorted.sort();
                if sorted.windows(2).any(|w| w[0] == w[1]) {
                    return Err(err(line, "duplicate alphabet symbol"));
                }
                header.alphabet = Some(syms);
            }
            "states" if header.states.is_none() => {
                let n: usize = value
                    .parse()
                    .map_err(|_| err(line, format!("states: expected a count, found `{value}`")))?;
                if n == 0 {
                    return Err(err(line, "states: a DFA needs at least one state"));
                }
                if n > MAX_STATES {
                    return Err(err(line, format!("states: at most {MAX_STATES} supported")));
                }
                header.states = Some(n);
            }
            "initial" if header.initial.is_none() => {
                header.initial = Some((parse_state(value, line, "initial")?, line));
            }
            "finals" if header.finals.is_none() => {
                let fs = value
                    .split_whitespace()
                    .map(|t| parse_state(t, line, "finals"))
                    .collect::<Result<Vec<_>>>()?;
                header.finals = Some((fs, line));
            }
            "trans" if value.is_empty() => {
                in_trans = true;
                let missing: Vec<&str> = [
                    ("alphabet", header.alphabet.is_none()),
                    ("states", header.states.is_none()),
                    ("initial", header.initial.is_none()),
                    ("finals", header.finals.is_none()),
                ]
                .into_iter()
                .filter_map(|(k, m)| m.then_some(k))
                .collect();
                if !missing.is_empty() {
                    return Err(err(line, format!("missing header: {}", missing.join(", "))));
                }
                let n = header.states.unwrap_or(0);
                if let Some((q, l)) = header.initial {
                    if q >= n {
                        return Err(err(l, format!("initial state {q} out of range")));
                    }
                }
                if let Some((fs, l)) = &header.finals {
                    if let Some(q) = fs.iter().find(|&&q| q >= n) {
                        return Err(err(*l, format!("final state {q} out of range")));
                    }
                }
            }
            k @ ("alphabet" | "states" | "initial" | "finals") => {
                return Err(err(line, format!("duplicate header `{k}`")));
            }
            k => return Err(err(line, format!("unknown header `{k}`"))),
        }
    }
    if !in_trans {
        return Err(err(last_line.max(1), "missing `trans:` section"));
    }
    let raw = RawDfa {
        alphabet: header.alphabet.unwrap_or_default(),
        num_states: header.states.unwrap_or(0),
        initial: header.initial.map_or(0, |(q, _)| q),
        finals: header.finals.map(|(f, _)| f).unwrap_or_default(),
        transitions,
    };
    Dfa::try_from(raw)
}

/// Canonical text of `d`: symbols in alphabet order, finals ascending,
/// transitions by source then symbol. Ends with a newline.
pub fn serialize_dfa(d: &Dfa) -> String {
    let mut out = String::new();
    let alphabet: Vec<String> = d.alphabet().iter().map(ToString::to_string).collect();
    let finals: Vec<String> = d.finals().map(|q| q.to_string()).collect();
    let _ = writeln!(out, "{}", header_line("alphabet", &alphabet));
    let _ = writeln!(out, "states: {}", d.num_states());
    let _ = writeln!(out, "initial: {}", d.initial());
    let _ = writeln!(out, "{}", header_line("finals", &finals));
    out.push_str("trans:\n");
    for (p, a, q) in d.transitions() {
        let _ = writeln!(out, "{p} {} {q}", d.alphabet().get(a));
    }
    out
}

fn header_line(key: &str, items: &[String]) -> String {
    if items.is_empty() {
        format!("{key}:")
    } else {
        format!("{key}: {}", items.join(" "))
    }
}
