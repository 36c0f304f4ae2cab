//! Exact verification suites.
//!
//! Each function returns [`Check`]s rather than panicking, so the same code
//! drives the unit tests, the acceptance run and the `verify` subcommand.
//! [`run_suite`] bundles them by topic.

mod algebra;
mod traces;

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub use algebra::{
    coset_basis, dimensions, full_twist, jucys_murphy, relations_skew, relations_type_a, relations_type_b,
    restriction_rule,
};
pub use traces::{
    branching, closed_forms, double_cosets, markov_a, markov_b, schur_identities, trace_property, type_d,
    type_d_relations, weight_forms,
};

use crate::error::{Error, Result};
use crate::homcheck::{character_match_report, rho_eigenvalue_report, weight_ratio_report};
use crate::report::{Check, Report};
use crate::scalars::{admissible_point, ParameterPoint};

pub(crate) fn tag(point: &ParameterPoint) -> String {
    format!(", q = {}, Q = {}", point.q(), point.big_q())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Relations,
    Markov,
    Branching,
    Schur,
    Hom,
    TypeD,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 7] = ["relations", "markov", "branching", "schur", "hom", "typeD", "all"];

    fn parts(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![
                Suite::Relations,
                Suite::Markov,
                Suite::Branching,
                Suite::Schur,
                Suite::Hom,
                Suite::TypeD,
            ],
            one => vec![one],
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "relations" => Suite::Relations,
            "markov" => Suite::Markov,
            "branching" => Suite::Branching,
            "schur" => Suite::Schur,
            "hom" => Suite::Hom,
            "typed" | "type-d" | "d" => Suite::TypeD,
            "all" => Suite::All,
            _ => return Err(Error::parse(s, format!("expected one of {}", Suite::NAMES.join(", ")))),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = [
            Suite::Relations,
            Suite::Markov,
            Suite::Branching,
            Suite::Schur,
            Suite::Hom,
            Suite::TypeD,
            Suite::All,
        ]
        .iter()
        .position(|s| s == self)
        .expect("listed");
        f.write_str(Suite::NAMES[i])
    }
}

/// Options shared by every suite.
#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub n: usize,
    pub r1: usize,
    pub r2: usize,
    /// Number of admissible points to test at.
    pub points: usize,
    /// Random words per property.
    pub words: usize,
    pub seed: u64,
}

impl SuiteOptions {
    pub fn new(n: usize, r1: usize, r2: usize) -> Self {
        SuiteOptions {
            n,
            r1,
            r2,
            points: 3,
            words: 8,
            seed: 0,
        }
    }

    pub fn sample_points(&self) -> Result<Vec<ParameterPoint>> {
        (0..self.points.max(1) as u64)
            .map(|k| admissible_point(self.n.max(1), self.r1, self.r2, self.seed.wrapping_add(k)))
            .collect()
    }
}

fn run_one(suite: Suite, opts: &SuiteOptions, rng: &mut ChaCha8Rng) -> Result<Vec<Check>> {
    let (n, r1, r2) = (opts.n, opts.r1, opts.r2);
    let mut out = Vec::new();
    for point in opts.sample_points()? {
        let q = point.q();
        match suite {
            Suite::Relations => {
                out.extend(relations_type_a(n, &point)?);
                out.extend(relations_type_b(n, &point)?);
                out.extend(relations_skew(n, q)?);
                out.extend(jucys_murphy(n, &point)?);
                out.extend(restriction_rule(n, &point, opts.words, rng)?);
                out.extend(full_twist(n, &point)?);
                if n <= 3 {
                    out.push(coset_basis(n, &point)?);
                }
            }
            Suite::Markov => {
                for k in 1..=n {
                    out.extend(markov_b(k, r1, r2, &point, opts.words, rng)?);
                    out.push(double_cosets(k, r1, r2, &point)?);
                    out.push(trace_property(k, r1, r2, &point, opts.words, rng)?);
                }
                out.push(closed_forms(r1, r2, &point)?);
            }
            Suite::Branching => {
                out.extend(branching(n, r1, r2, &point)?);
                out.push(weight_forms(n, r1, r2, &point)?);
            }
            Suite::Schur => {
                out.extend(schur_identities(n, q)?);
                out.push(markov_a(n.max(1), r1 + r2, q, opts.words, rng)?);
            }
            Suite::Hom => {
                let (m, rows) = (n + 1, n + 1);
                out.extend(rho_eigenvalue_report(m.max(2), rows.max(2), q)?.checks);
                out.extend(character_match_report(n, m, rows, q, opts.words.max(2), opts.seed)?.checks);
                out.extend(weight_ratio_report(n, m, rows, r2, q)?.checks);
            }
            Suite::TypeD => out.extend(type_d(n, r1, r2, q, opts.words, rng)?),
            Suite::All => unreachable!("expanded by the caller"),
        }
    }
    if suite == Suite::Relations {
        out.extend(dimensions(n));
    }
    Ok(out)
}

/// Runs `suite` (or every suite for [`Suite::All`]) at `opts.points`
/// admissible points. Output is a deterministic function of the options.
pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> Result<Report> {
    if opts.r1 == 0 || opts.r2 == 0 {
        return Err(Error::pre("row bounds r1 and r2 must be at least 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut report = Report::new(format!("verify {suite}, n = {}, r1 = {}, r2 = {}", opts.n, opts.r1, opts.r2));
    for part in suite.parts() {
        for check in run_one(part, opts, &mut rng)? {
            report.push(check);
        }
    }
    Ok(report)
}
