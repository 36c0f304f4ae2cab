use hecke_core::combinatorics::double_partitions;
use hecke_core::report::{Check, ReportParams, TableReport, WeightRow};
use hecke_core::reps::parse_element;
use hecke_core::scalars::{ExactScalar, ParameterPoint};
use hecke_core::traces::{
    markov_params, type_a_weights, type_d_weight_table, weight_b, MarkovTraceA, MarkovTraceB, MarkovTraceD,
};
use hecke_core::verify::{run_suite, Suite, SuiteOptions};

use crate::{AlgebraType, Format, PointArgs, TraceArgs, VerifyArgs, WeightsArgs};

pub struct Output {
    pub text: String,
    pub passed: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, passed: true }
    }
}

type CliResult<T> = Result<T, String>;

fn rational(flag: &str, text: &str) -> CliResult<ExactScalar> {
    text.trim().parse().map_err(|e| format!("--{flag}: {e}"))
}

/// Resolved parameters: row bounds and the point. Type A and D run at `Q = 1`.
struct Resolved {
    kind: AlgebraType,
    n: usize,
    r1: usize,
    r2: usize,
    point: ParameterPoint,
}

impl Resolved {
    fn new(args: &PointArgs) -> CliResult<Self> {
        let n = args.n;
        let r1 = args.r1.unwrap_or(n + 1);
        let r2 = args.r2.unwrap_or(n + 1);
        if r1 == 0 || r2 == 0 {
            return Err("--r1 and --r2 must be at least 1".into());
        }
        let q = rational("q", &args.q)?;
        let point = match args.kind {
            AlgebraType::B => {
                let big_q = rational("Q", args.big_q.as_deref().unwrap_or("3"))?;
                ParameterPoint::new(q, big_q, n.max(r1 + r2))
            }
            AlgebraType::A | AlgebraType::D => {
                if args.big_q.is_some() {
                    return Err(format!("--Q does not apply to type {:?}, which runs at Q = 1", args.kind));
                }
                ParameterPoint::with_unit_big_q(q)
            }
        }
        .map_err(|e| e.to_string())?;
        Ok(Resolved { kind: args.kind, n, r1, r2, point })
    }

    fn params(&self) -> ReportParams {
        ReportParams {
            n: self.n,
            r1: self.r1,
            r2: self.r2,
            q: self.point.q().to_string(),
            big_q: self.point.big_q().to_string(),
        }
    }
}

fn type_a_z(q: &ExactScalar, r: usize) -> ExactScalar {
    let one = ExactScalar::one();
    q.pow(r as i64) * (&one - q) / (&one - q.pow(r as i64))
}

fn weight_report(res: &Resolved) -> CliResult<TableReport> {
    let err = |e: hecke_core::Error| e.to_string();
    let q = res.point.q();
    let (g_factor, t_factor, weights) = match res.kind {
        AlgebraType::B => {
            let (g_factor, t_factor) = markov_params(res.r1, res.r2, &res.point).map_err(err)?;
            let rows = double_partitions(res.n)
                .into_iter()
                .map(|shape| {
                    Ok(WeightRow {
                        weight: weight_b(&shape, res.r1, res.r2, &res.point).map_err(err)?.to_string(),
                        dimension: shape.dimension(),
                        shape: shape.to_string(),
                    })
                })
                .collect::<CliResult<Vec<_>>>()?;
            (Some(g_factor), Some(t_factor), rows)
        }
        AlgebraType::A => {
            let r = res.r1 + res.r2;
            let rows = type_a_weights(res.n, r, q)
                .map_err(err)?
                .into_iter()
                .map(|(mu, w)| WeightRow {
                    shape: mu.to_string(),
                    weight: w.to_string(),
                    dimension: mu.standard_count(),
                })
                .collect();
            (Some(type_a_z(q, r)), None, rows)
        }
        AlgebraType::D => {
            let rows = type_d_weight_table(res.n, res.r1, res.r2, q)
                .map_err(err)?
                .into_iter()
                .map(|row| WeightRow {
                    shape: row.label.to_string(),
                    weight: row.weight.to_string(),
                    dimension: row.dimension,
                })
                .collect();
            (Some(type_a_z(q, res.r1 + res.r2)), None, rows)
        }
    };
    let mut report = TableReport {
        params: res.params(),
        g_factor: g_factor.map(|v| v.to_string()),
        t_factor: t_factor.map(|v| v.to_string()),
        weights,
        checks: Vec::new(),
    };
    let total = report.normalization().map_err(err)?;
    report.checks.push(Check::new(
        "normalization",
        "weights times dimensions sum to 1",
        total.is_one(),
        if total.is_one() { String::new() } else { format!("sum {total}") },
    ));
    Ok(report)
}

pub fn weights(args: &WeightsArgs) -> CliResult<Output> {
    let res = Resolved::new(&args.point)?;
    let report = weight_report(&res)?;
    let passed = report.checks.iter().all(|c| c.pass);
    let text = match args.format {
        Format::Json => report.to_json() + "\n",
        Format::Csv => report.to_csv(),
    };
    Ok(Output { text, passed })
}

pub fn trace(args: &TraceArgs) -> CliResult<Output> {
    let res = Resolved::new(&args.point)?;
    let element = parse_element(&args.word, res.n).map_err(|e| e.to_string())?;
    let value = match res.kind {
        AlgebraType::B => MarkovTraceB::new(res.n, res.r1, res.r2, &res.point).and_then(|t| t.trace(&element)),
        AlgebraType::A => MarkovTraceA::new(res.n, res.r1 + res.r2, res.point.q()).and_then(|t| t.trace(&element)),
        AlgebraType::D => MarkovTraceD::new(res.n, res.r1, res.r2, res.point.q()).and_then(|t| t.trace(&element)),
    }
    .map_err(|e| e.to_string())?;
    Ok(Output::ok(format!("{value}\n")))
}

pub fn verify(args: &VerifyArgs) -> CliResult<Output> {
    let suite: Suite = args.suite.parse().map_err(|e: hecke_core::Error| format!("--suite: {e}"))?;
    let mut opts = SuiteOptions::new(args.n, args.r1.unwrap_or(args.n + 1), args.r2.unwrap_or(args.n + 1));
    opts.points = args.points;
    opts.words = args.words;
    opts.seed = args.seed;
    let report = run_suite(suite, &opts).map_err(|e| e.to_string())?;
    let text = match args.format {
        Format::Json => serde_json::to_string_pretty(&report).map_err(|e| e.to_string())? + "\n",
        Format::Csv => {
            let mut writer = csv::WriterBuilder::new()
                .quote_style(csv::QuoteStyle::Always)
                .from_writer(b"name,paper_ref,pass\n".to_vec());
            for c in &report.checks {
                writer
                    .write_record([c.name.as_str(), c.paper_ref.as_str(), if c.pass { "true" } else { "false" }])
                    .map_err(|e| e.to_string())?;
            }
            String::from_utf8(writer.into_inner().map_err(|e| e.to_string())?).map_err(|e| e.to_string())?
        }
    };
    Ok(Output {
        text,
        passed: report.passed(),
    })
}
