#![no_main]

use hecke_core::report::TableReport;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(report) = TableReport::from_json(text) {
        let _ = report.normalization();
        let _ = report.shapes();
        let _ = report.to_csv();
        assert_eq!(TableReport::from_json(&report.to_json()).unwrap(), report);
    }
});
