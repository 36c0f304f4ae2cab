#![no_main]

use hecke_core::reps::parse_element;
use libfuzzer_sys::fuzz_target;

// The first byte picks the rank; the rest is the element text.
fuzz_target!(|data: &[u8]| {
    let Some((&rank, rest)) = data.split_first() else { return };
    let Ok(text) = std::str::from_utf8(rest) else { return };
    let n = usize::from(rank % 9);
    if let Ok(element) = parse_element(text, n) {
        assert_eq!(parse_element(&element.to_string(), n).unwrap(), element);
    }
});
