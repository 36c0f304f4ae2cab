//! Replays the checked-in fuzz corpus through the same checks as the fuzz
//! targets, so the parsers stay covered on stable toolchains.

use std::fs;
use std::path::PathBuf;

use hecke_core::combinatorics::{parse_double_partition, parse_partition};
use hecke_core::report::TableReport;
use hecke_core::reps::parse_element;
use hecke_core::scalars::ExactScalar;

fn seeds(target: &str) -> Vec<(String, Vec<u8>)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<(String, Vec<u8>)> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|entry| {
            let path = entry.unwrap().path();
            (path.display().to_string(), fs::read(&path).unwrap())
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

/// Seeds named `bad_*` are expected to be rejected.
fn is_bad(path: &str) -> bool {
    path.rsplit('/').next().is_some_and(|f| f.starts_with("bad_"))
}

#[test]
fn shape_seeds() {
    let mut accepted = 0;
    for (name, data) in seeds("parse_shape") {
        let text = String::from_utf8(data).unwrap();
        if let Ok(shape) = parse_double_partition(&text) {
            accepted += 1;
            assert_eq!(parse_double_partition(&shape.to_string()).unwrap(), shape, "{name}");
        }
        if let Ok(part) = parse_partition(&text) {
            assert_eq!(parse_partition(&part.to_string()).unwrap(), part, "{name}");
        }
    }
    assert!(accepted >= 2);
}

#[test]
fn rational_seeds() {
    for (name, data) in seeds("parse_rational") {
        let text = String::from_utf8(data).unwrap();
        match text.parse::<ExactScalar>() {
            Ok(x) => assert_eq!(x.to_string().parse::<ExactScalar>().unwrap(), x, "{name}"),
            Err(e) => assert!(is_bad(&name), "{name}: {e}"),
        }
    }
}

#[test]
fn element_seeds() {
    for (name, data) in seeds("parse_element") {
        let (&rank, rest) = data.split_first().unwrap();
        let text = std::str::from_utf8(rest).unwrap();
        let n = usize::from(rank % 9);
        match parse_element(text, n) {
            Ok(element) => assert_eq!(parse_element(&element.to_string(), n).unwrap(), element, "{name}"),
            Err(e) => assert!(is_bad(&name), "{name}: {e}"),
        }
    }
}

#[test]
fn report_seeds() {
    for (name, data) in seeds("parse_report") {
        let text = String::from_utf8(data).unwrap();
        match TableReport::from_json(&text) {
            Ok(report) => {
                assert!(report.normalization().unwrap().is_one(), "{name}");
                assert_eq!(TableReport::from_json(&report.to_json()).unwrap(), report);
            }
            Err(_) => assert!(is_bad(&name), "{name}"),
        }
    }
}
