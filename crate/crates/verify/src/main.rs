//! Command-line front end for the identity-check suite: parses bounds,
//! runs the selected checks, and emits a text table or JSON report.
//!
//! Exit codes: 0 all checks passed, 1 at least one check failed, 2
//! configuration error. JSON reports are byte-identical across runs and
//! thread counts for a fixed configuration.

use clap::{Parser, ValueEnum};
use qalg::checks::{run_all, CheckKind, CheckResult, CheckStatus, Report, SuiteConfig};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Verify the W-algebra and Yangian identities for Q(n) at block size l.
#[derive(Parser, Debug)]
#[command(name = "verify", version, about, long_about = None)]
struct Cli {
    /// Size of the queer superalgebra Q(n).
    #[arg(long)]
    n: u16,

    /// Jordan block size; must divide n.
    #[arg(long)]
    l: u16,

    /// Largest power order swept by the image checks.
    #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
    max_r: Option<u16>,

    /// Largest tensor-slot count swept by the antipode-square check.
    #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
    max_k: Option<u16>,

    /// Comma-separated check names, or "all".
    #[arg(long, default_value = "all")]
    checks: String,

    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the report to this file and print only a summary line.
    #[arg(long)]
    out: Option<PathBuf>,

    /// Worker threads; overrides the rayon environment variable.
    #[arg(long, value_parser = clap::value_parser!(usize))]
    threads: Option<usize>,
}

/// Versioned serialization envelope for JSON reports. Timings are
/// normalized to zero so identical configurations produce identical
/// bytes.
#[derive(Serialize)]
struct JsonReport<'a> {
    schema: &'a str,
    config: &'a SuiteConfig,
    results: Vec<JsonResult<'a>>,
    summary: JsonSummary,
}

#[derive(Serialize)]
struct JsonResult<'a> {
    name: &'a str,
    params: &'a BTreeMap<String, i64>,
    status: CheckStatus,
    witness: Option<&'a qalg::checks::Witness>,
    ms: u64,
}

#[derive(Serialize)]
struct JsonSummary {
    pass: usize,
    fail: usize,
}

fn parse_checks(arg: &str) -> Result<Vec<CheckKind>, String> {
    if arg.trim() == "all" {
        return Ok(CheckKind::ALL.to_vec());
    }
    let mut kinds = Vec::new();
    for name in arg.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let kind = CheckKind::parse(name).ok_or_else(|| {
            let known: Vec<&str> = CheckKind::ALL.iter().map(|k| k.id()).collect();
            format!("unknown check `{name}` (known: {}, or `all`)", known.join(", "))
        })?;
        if !kinds.contains(&kind) {
            kinds.push(kind);
        }
    }
    if kinds.is_empty() {
        return Err("no checks selected".to_string());
    }
    Ok(kinds)
}

fn render_json(report: &Report) -> String {
    let json = JsonReport {
        schema: "1",
        config: &report.config,
        results: report
            .results
            .iter()
            .map(|r| JsonResult {
                name: &r.name,
                params: &r.params,
                status: r.status,
                witness: r.witness.as_ref(),
                ms: 0,
            })
            .collect(),
        summary: JsonSummary { pass: report.summary.pass, fail: report.summary.fail },
    };
    let mut out = serde_json::to_string_pretty(&json).expect("report serializes");
    out.push('\n');
    out
}

fn render_params(params: &BTreeMap<String, i64>) -> String {
    params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ")
}

fn render_text(report: &Report) -> String {
    let rows: Vec<(&str, String, &str, String)> = report
        .results
        .iter()
        .map(|r: &CheckResult| {
            let status = match r.status {
                CheckStatus::Pass => "pass",
                CheckStatus::Fail => "FAIL",
            };
            (r.name.as_str(), render_params(&r.params), status, r.ms.to_string())
        })
        .collect();
    let name_w = rows.iter().map(|r| r.0.len()).chain(["check".len()]).max().unwrap_or(5);
    let params_w = rows.iter().map(|r| r.1.len()).chain(["params".len()]).max().unwrap_or(6);
    let status_w = "status".len();
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<name_w$}  {:<params_w$}  {:<status_w$}  {:>6}",
        "check", "params", "status", "ms"
    );
    for (result, row) in report.results.iter().zip(&rows) {
        let _ = writeln!(
            out,
            "{:<name_w$}  {:<params_w$}  {:<status_w$}  {:>6}",
            row.0, row.1, row.2, row.3
        );
        if let Some(witness) = &result.witness {
            let _ = writeln!(out, "    expected: {}", witness.expected);
            let _ = writeln!(out, "    actual:   {}", witness.actual);
        }
    }
    let _ = writeln!(
        out,
        "{} checks: {} passed, {} failed",
        report.results.len(),
        report.summary.pass,
        report.summary.fail
    );
    out
}

fn fail_config(message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.n == 0 || cli.l == 0 || cli.n % cli.l != 0 {
        return fail_config(&format!("l must divide n (n = {}, l = {})", cli.n, cli.l));
    }
    let kinds = match parse_checks(&cli.checks) {
        Ok(kinds) => kinds,
        Err(message) => return fail_config(&message),
    };
    if let Some(threads) = cli.threads {
        if threads == 0 {
            return fail_config("threads must be positive");
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            return fail_config(&format!("thread pool: {e}"));
        }
    }
    let mut cfg = SuiteConfig::new(cli.n, cli.l);
    if let Some(max_r) = cli.max_r {
        cfg.max_r = max_r;
    }
    if let Some(max_k) = cli.max_k {
        cfg.max_k = max_k;
    }
    let report = match run_all(&cfg, &kinds) {
        Ok(report) => report,
        Err(e) => return fail_config(&e.to_string()),
    };
    let rendered = match cli.format {
        Format::Json => render_json(&report),
        Format::Text => render_text(&report),
    };
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, &rendered) {
            return fail_config(&format!("cannot write {}: {e}", path.display()));
        }
        println!(
            "wrote {}: {} passed, {} failed",
            path.display(),
            report.summary.pass,
            report.summary.fail
        );
    } else {
        print!("{rendered}");
    }
    if report.summary.fail == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use qalg::checks::Witness;

    fn fake_result(name: &str, status: CheckStatus, witness: Option<Witness>) -> CheckResult {
        let mut params = BTreeMap::new();
        params.insert("n".to_string(), 2);
        params.insert("l".to_string(), 2);
        CheckResult { name: name.to_string(), params, status, witness, ms: 7 }
    }

    fn fake_report(results: Vec<CheckResult>) -> Report {
        let pass = results.iter().filter(|r| r.status == CheckStatus::Pass).count();
        let fail = results.len() - pass;
        Report {
            config: SuiteConfig::new(2, 2),
            results,
            summary: qalg::checks::Summary { pass, fail },
        }
    }

    #[test]
    fn check_list_parsing() {
        assert_eq!(parse_checks("all").unwrap(), CheckKind::ALL.to_vec());
        assert_eq!(
            parse_checks("lem1, rel").unwrap(),
            vec![CheckKind::Lem1, CheckKind::Rel]
        );
        assert_eq!(parse_checks("rel,rel").unwrap(), vec![CheckKind::Rel]);
        assert!(parse_checks("bogus").unwrap_err().contains("unknown check `bogus`"));
        assert!(parse_checks(" ").is_err());
    }

    #[test]
    fn json_normalizes_timings_and_keeps_witnesses() {
        let witness =
            Witness { expected: "0".to_string(), actual: "1 * E[1,1]".to_string() };
        let report = fake_report(vec![
            fake_result("lem1", CheckStatus::Pass, None),
            fake_result("rel", CheckStatus::Fail, Some(witness)),
        ]);
        let rendered = render_json(&report);
        let parsed: serde_json::Value = serde_json::from_str(&rendered).unwrap();
        assert_eq!(parsed["schema"], "1");
        assert_eq!(parsed["results"][0]["ms"], 0);
        assert_eq!(parsed["results"][0]["witness"], serde_json::Value::Null);
        assert_eq!(parsed["results"][1]["witness"]["actual"], "1 * E[1,1]");
        assert_eq!(parsed["summary"]["fail"], 1);
    }

    #[test]
    fn text_table_shows_witness_lines_on_failure() {
        let witness =
            Witness { expected: "0".to_string(), actual: "1 * F[1,2]".to_string() };
        let report = fake_report(vec![fake_result("t2", CheckStatus::Fail, Some(witness))]);
        let rendered = render_text(&report);
        assert!(rendered.contains("FAIL"));
        assert!(rendered.contains("expected: 0"));
        assert!(rendered.contains("actual:   1 * F[1,2]"));
        assert!(rendered.contains("1 checks: 0 passed, 1 failed"));
    }
}
