//! Serializable check results and weight-table reports.

use serde::{Deserialize, Serialize};

use crate::combinatorics::DoublePartition;
use crate::error::{Error, Result};
use crate::scalars::ExactScalar;

/// Outcome of one exact verification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    /// Which identity or property the check exercises.
    pub paper_ref: String,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, identity: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            paper_ref: identity.into(),
            pass,
            detail: detail.into(),
        }
    }
}

/// A titled list of checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report {
            title: title.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportParams {
    pub n: usize,
    pub r1: usize,
    pub r2: usize,
    pub q: String,
    #[serde(rename = "Q")]
    pub big_q: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightRow {
    pub shape: String,
    pub weight: String,
    pub dimension: u128,
}

/// The weight-table document emitted by the command-line tool. Rationals are
/// stored as `"p/q"` strings so that they survive JSON exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableReport {
    pub params: ReportParams,
    #[serde(rename = "z", default, skip_serializing_if = "Option::is_none")]
    pub g_factor: Option<String>,
    #[serde(rename = "y", default, skip_serializing_if = "Option::is_none")]
    pub t_factor: Option<String>,
    pub weights: Vec<WeightRow>,
    #[serde(default)]
    pub checks: Vec<Check>,
}

impl TableReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::parse(text.chars().take(40).collect::<String>(), e.to_string()))
    }

    /// `sum weight * dimension`, parsed back from the stored strings.
    pub fn normalization(&self) -> Result<ExactScalar> {
        let mut total = ExactScalar::zero();
        for row in &self.weights {
            let w: ExactScalar = row.weight.parse()?;
            total += w * ExactScalar::from_bigints(row.dimension.into(), 1.into())?;
        }
        Ok(total)
    }

    /// Type-B shapes in the table, for rows whose label is a plain double
    /// partition.
    pub fn shapes(&self) -> Vec<Option<DoublePartition>> {
        self.weights.iter().map(|row| row.shape.parse().ok()).collect()
    }

    /// CSV rendering with header `shape,weight,dimension`; every data field
    /// is quoted.
    pub fn to_csv(&self) -> String {
        let mut writer = csv::WriterBuilder::new()
            .quote_style(csv::QuoteStyle::Always)
            .from_writer(b"shape,weight,dimension\n".to_vec());
        for row in &self.weights {
            writer
                .write_record([row.shape.as_str(), row.weight.as_str(), &row.dimension.to_string()])
                .expect("in-memory write");
        }
        String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("utf-8 output")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> TableReport {
        TableReport {
            params: ReportParams {
                n: 1,
                r1: 1,
                r2: 1,
                q: "2".into(),
                big_q: "5".into(),
            },
            g_factor: Some("4/3".into()),
            t_factor: Some("8/3".into()),
            weights: vec![
                WeightRow {
                    shape: "[1]|[]".into(),
                    weight: "11/18".into(),
                    dimension: 1,
                },
                WeightRow {
                    shape: "[]|[1]".into(),
                    weight: "7/18".into(),
                    dimension: 1,
                },
            ],
            checks: vec![Check::new("normalization", "trace of the identity is 1", true, "")],
        }
    }

    #[test]
    fn json_roundtrip() {
        let report = sample();
        let text = report.to_json();
        assert!(text.contains("\"Q\": \"5\""));
        assert!(!text.contains("detail"));
        let back = TableReport::from_json(&text).unwrap();
        assert_eq!(back, report);
        assert!(back.normalization().unwrap().is_one());
        assert!(back.shapes().iter().all(Option::is_some));
    }

    #[test]
    fn csv_is_quoted() {
        let csv = sample().to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), "shape,weight,dimension");
        assert_eq!(lines.next().unwrap(), "\"[1]|[]\",\"11/18\",\"1\"");
    }

    #[test]
    fn malformed_json_is_an_error() {
        assert!(TableReport::from_json("{").is_err());
        assert!(TableReport::from_json("{\"params\": 3}").is_err());
        let mut bad = sample();
        bad.weights[0].weight = "1/0".into();
        assert!(TableReport::from_json(&bad.to_json()).unwrap().normalization().is_err());
    }

    #[test]
    fn report_summary() {
        let mut r = Report::new("x");
        r.push(Check::new("a", "b", true, ""));
        assert!(r.passed());
        r.push(Check::new("c", "d", false, "why"));
        assert!(!r.passed());
        assert_eq!(r.failures().count(), 1);
    }
}
