#![no_main]

use findfa::io::{parse_dfa, serialize_dfa};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(d) = parse_dfa(text) {
        let printed = serialize_dfa(&d);
        let back = parse_dfa(&printed).expect("serialized DFA parses");
        assert_eq!(back, d);
        assert_eq!(serialize_dfa(&back), printed);
        let _ = d.minimize();
    }
});
