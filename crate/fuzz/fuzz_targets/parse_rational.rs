#![no_main]

use hecke_core::scalars::ExactScalar;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(x) = text.parse::<ExactScalar>() {
        assert_eq!(x.to_string().parse::<ExactScalar>().unwrap(), x);
    }
});
