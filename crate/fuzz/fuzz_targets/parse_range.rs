#![no_main]

use findfa::harness::{Op, ParamRange};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(r) = text.parse::<ParamRange>() {
        assert_eq!(r.to_string().parse::<ParamRange>().unwrap(), r);
        assert!(r.iter().next().is_some());
    }
    if let Ok(op) = text.parse::<Op>() {
        assert_eq!(op.name(), text);
    }
});
