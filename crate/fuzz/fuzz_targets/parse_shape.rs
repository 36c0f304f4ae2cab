#![no_main]

use hecke_core::combinatorics::{parse_double_partition, parse_partition};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(shape) = parse_double_partition(text) {
        assert_eq!(parse_double_partition(&shape.to_string()).unwrap(), shape);
    }
    if let Ok(part) = parse_partition(text) {
        assert_eq!(parse_partition(&part.to_string()).unwrap(), part);
    }
});
