//! Command implementations behind the `paley` binary.
//!
//! Each command returns an [`Outcome`]: one JSON document for stdout, a short
//! human summary for stderr, and the process exit status.

use std::fs::File;
use std::io::BufWriter;
use std::path::PathBuf;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use crate::charsums::verify_xyreln;
use crate::cliques::{count_cliques, BruteForceLimits, CountMethod};
use crate::error::{Error, Result};
use crate::graph::PaleyGraph;
use crate::numtheory::check_admissible;
use crate::tables::{verify_tables, RowFilter, SuiteReport};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExitStatus {
    Success = 0,
    InvalidInput = 1,
    Mismatch = 2,
    Refused = 3,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }

    pub fn for_error(e: &Error) -> Self {
        match e {
            Error::InvalidInput(_) | Error::NotAdmissible { .. } => ExitStatus::InvalidInput,
            Error::Consistency(_) => ExitStatus::Mismatch,
            Error::CeilingExceeded { .. } => ExitStatus::Refused,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
}

#[derive(Debug)]
pub struct Outcome {
    pub report: Value,
    /// Set when a CSV rendering was requested and the command supports it.
    pub csv: Option<String>,
    pub summary: String,
    pub exit: ExitStatus,
}

impl Outcome {
    /// What goes to stdout.
    pub fn stdout(&self) -> String {
        match &self.csv {
            Some(csv) => csv.clone(),
            None => {
                let mut s = serde_json::to_string_pretty(&self.report).expect("reports are plain JSON");
                s.push('\n');
                s
            }
        }
    }
}

fn envelope(command: &[String], exit: ExitStatus, payload: Value) -> Value {
    let mut doc = json!({
        "tool": "paley",
        "tool_version": TOOL_VERSION,
        "command": command,
        "exit_code": exit.code(),
    });
    if let (Value::Object(doc), Value::Object(payload)) = (&mut doc, payload) {
        doc.extend(payload);
    }
    doc
}

/// The standard error report for a failed command.
pub fn error_outcome(command: &[String], e: &Error) -> Outcome {
    let exit = ExitStatus::for_error(e);
    let kind = match e {
        Error::InvalidInput(_) => "invalid_input",
        Error::NotAdmissible { .. } => "not_admissible",
        Error::Consistency(_) => "consistency",
        Error::CeilingExceeded { .. } => "ceiling_exceeded",
    };
    let mut error = json!({ "kind": kind, "message": e.to_string() });
    if let Error::CeilingExceeded { .. } = e {
        error["suggestion"] = json!("--method formula");
    }
    Outcome { report: envelope(command, exit, json!({ "error": error })), csv: None, summary: format!("error: {e}"), exit }
}

/// Runs `f` on a pool with `threads` workers (all cores when `None`).
pub fn with_threads<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = threads {
        if t == 0 {
            return Err(Error::invalid("--threads must be at least 1"));
        }
        builder = builder.num_threads(t);
    }
    let pool = builder.build().map_err(|e| Error::invalid(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}

pub fn cmd_check(n: u64) -> Outcome {
    let command = vec!["check".to_string(), n.to_string()];
    match check_admissible(n) {
        Ok(m) => {
            let payload = json!({
                "admissible": true,
                "n": m.n(),
                "s": m.s(),
                "k": m.k(),
                "phi": m.phi(),
                "factors": m.factors().iter().map(|&(p, a)| json!({ "p": p, "alpha": a })).collect::<Vec<_>>(),
                "factorization": m.factor_string(),
                "square_count": m.square_count(),
            });
            Outcome {
                report: envelope(&command, ExitStatus::Success, payload),
                csv: None,
                summary: format!("{n} = {} is admissible (k = {})", m.factor_string(), m.k()),
                exit: ExitStatus::Success,
            }
        }
        Err(e) => {
            let mut out = error_outcome(&command, &e);
            out.report["admissible"] = json!(false);
            if let Error::NotAdmissible { reason, .. } = &e {
                out.report["reason"] = json!(reason);
            }
            out
        }
    }
}

/// `count` options.
#[derive(Debug, Clone, Default)]
pub struct CountRequest {
    pub n: u64,
    pub order: u32,
    /// `None` means every method.
    pub method: Option<CountMethod>,
    pub limits: BruteForceLimits,
    pub emit_edges: Option<PathBuf>,
}

#[derive(Debug, Serialize)]
struct MethodResult {
    method: CountMethod,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    skipped: Option<String>,
    elapsed_ms: u64,
}

pub fn cmd_count(req: &CountRequest) -> Outcome {
    let method_name = req.method.map_or("all", CountMethod::as_str);
    let command = vec![
        "count".to_string(),
        req.n.to_string(),
        "--order".to_string(),
        req.order.to_string(),
        "--method".to_string(),
        method_name.to_string(),
    ];
    match run_count(req) {
        Ok((results, agreement, summary)) => {
            let exit = if agreement { ExitStatus::Success } else { ExitStatus::Mismatch };
            let value = results.iter().find_map(|r| r.value.clone());
            let m = check_admissible(req.n).expect("validated in run_count");
            let payload = json!({
                "inputs": {
                    "n": req.n,
                    "factorization": m.factor_string(),
                    "order": req.order,
                    "method": method_name,
                },
                "results": results,
                "agreement": agreement,
                "value": if agreement { value } else { None },
            });
            Outcome { report: envelope(&command, exit, payload), csv: None, summary, exit }
        }
        Err(e) => error_outcome(&command, &e),
    }
}

fn run_count(req: &CountRequest) -> Result<(Vec<MethodResult>, bool, String)> {
    let g = PaleyGraph::new(req.n)?;
    if req.order != 3 && req.order != 4 {
        return Err(Error::invalid(format!("--order must be 3 or 4, got {}", req.order)));
    }
    if let Some(path) = &req.emit_edges {
        let file = File::create(path).map_err(|e| Error::invalid(format!("{}: {e}", path.display())))?;
        g.write_edge_list(BufWriter::new(file)).map_err(|e| Error::invalid(format!("{}: {e}", path.display())))?;
    }
    let methods: Vec<CountMethod> = match req.method {
        Some(m) => vec![m],
        None => CountMethod::ALL.to_vec(),
    };
    let mut results = Vec::new();
    for method in methods {
        if method == CountMethod::Reduction && !g.modulus().is_odd() && req.method.is_none() {
            results.push(MethodResult {
                method,
                value: None,
                skipped: Some("reduction needs odd n".into()),
                elapsed_ms: 0,
            });
            continue;
        }
        let r = count_cliques(&g, req.order, method, &req.limits)?;
        results.push(MethodResult {
            method,
            value: Some(r.value.to_string()),
            skipped: None,
            elapsed_ms: r.elapsed.as_millis() as u64,
        });
    }
    let values: Vec<&String> = results.iter().filter_map(|r| r.value.as_ref()).collect();
    let agreement = values.windows(2).all(|w| w[0] == w[1]);
    let summary = results
        .iter()
        .map(|r| format!("{}: {}", r.method.as_str(), r.value.as_deref().or(r.skipped.as_deref()).unwrap_or("-")))
        .collect::<Vec<_>>()
        .join(", ");
    let summary = format!("K{}(G_{}) {summary}; agreement = {agreement}", req.order, req.n);
    Ok((results, agreement, summary))
}

pub fn cmd_jacobi(p: u64, alpha: u32) -> Outcome {
    let command = vec!["jacobi".to_string(), p.to_string(), alpha.to_string()];
    let start = Instant::now();
    match verify_xyreln(p, alpha) {
        Ok(rel) => {
            let exit = if rel.ok { ExitStatus::Success } else { ExitStatus::Mismatch };
            let summary = format!(
                "J = {} + {}i mod {p}^{alpha}; x^2 - y^2 = {}, p^(2a-2)(p - 2a^2) = {}, ok = {}",
                rel.x, rel.y, rel.x2_minus_y2, rel.scaled_p_minus_2a2, rel.ok
            );
            let mut payload = serde_json::to_value(&rel).expect("plain struct");
            payload["elapsed_ms"] = json!(start.elapsed().as_millis() as u64);
            Outcome { report: envelope(&command, exit, payload), csv: None, summary, exit }
        }
        Err(e) => error_outcome(&command, &e),
    }
}

pub fn cmd_verify_tables(only: Option<RowFilter>, format: OutputFormat) -> Outcome {
    let mut command = vec!["verify-tables".to_string()];
    if let Some(f) = only {
        command.push("--only".into());
        command.push(match f {
            RowFilter::Modulus(n) => format!("n={n}"),
            RowFilter::PrimePower { p, alpha } => format!("p={p},alpha={alpha}"),
        });
    }
    match verify_tables(only) {
        Ok(suite) => {
            let exit = if suite.all_pass { ExitStatus::Success } else { ExitStatus::Mismatch };
            let summary = suite_summary(&suite);
            let csv = (format == OutputFormat::Csv).then(|| suite_csv(&suite));
            let payload = serde_json::to_value(&suite).expect("plain struct");
            Outcome { report: envelope(&command, exit, payload), csv, summary, exit }
        }
        Err(e) => error_outcome(&command, &e),
    }
}

/// The suite as a standalone pretty-printed JSON document.
pub fn suite_json(suite: &SuiteReport) -> String {
    serde_json::to_string_pretty(suite).expect("plain struct")
}

fn suite_summary(suite: &SuiteReport) -> String {
    let mut lines = Vec::new();
    for c in &suite.clique_table {
        lines.push(format!(
            "[{}] n = {:>5} ({}) {}: expected {} formula {} bruteforce {} reduction {}",
            if c.pass { "PASS" } else { "FAIL" },
            c.n,
            c.row,
            c.quantity,
            c.expected,
            c.formula,
            c.bruteforce,
            c.reduction
        ));
    }
    for c in &suite.jacobi_table {
        lines.push(format!(
            "[{}] p = {:>2}, alpha = {}: J = {} + {}i (expected x = {}, |y| = {}), x^2 - y^2 = {}, x^2 + y^2 = {}",
            if c.pass { "PASS" } else { "FAIL" },
            c.p,
            c.alpha,
            c.x,
            c.y,
            c.expected_x,
            c.expected_y.abs(),
            c.x2_minus_y2,
            c.norm
        ));
    }
    let failures = suite.failures();
    lines.push(if failures.is_empty() {
        "all rows pass".to_string()
    } else {
        format!("{} failing cell(s):\n  {}", failures.len(), failures.join("\n  "))
    });
    lines.join("\n")
}

fn suite_csv(suite: &SuiteReport) -> String {
    let mut out = String::from("table,row,quantity,expected,method,computed,pass\n");
    for c in &suite.clique_table {
        for (method, value) in [("formula", &c.formula), ("bruteforce", &c.bruteforce), ("reduction", &c.reduction)] {
            out.push_str(&format!("cliques,n={},{},{},{method},{value},{}\n", c.n, c.quantity, c.expected, *value == c.expected));
        }
    }
    for c in &suite.jacobi_table {
        let row = format!("\"p={},alpha={}\"", c.p, c.alpha);
        out.push_str(&format!("jacobi,{row},x,{},jacobi_sum,{},{}\n", c.expected_x, c.x, c.x_matches));
        out.push_str(&format!("jacobi,{row},|y|,{},jacobi_sum,{},{}\n", c.expected_y.abs(), c.y.abs(), c.y_matches_up_to_sign));
        out.push_str(&format!("jacobi,{row},x^2-y^2,{},jacobi_sum,{},{}\n", c.expected_x2_minus_y2, c.x2_minus_y2, c.xyreln_ok));
        out.push_str(&format!("jacobi,{row},x^2+y^2,{},jacobi_sum,{},{}\n", (c.p as i128).pow(2 * c.alpha - 1), c.norm, c.norm_ok));
    }
    out
}
