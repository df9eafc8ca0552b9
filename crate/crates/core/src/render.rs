//! Text renderers for statistics, traces, distributions, and reports.
//!
//! Every renderer returns a complete string whose last character is `\n`.
//! CSV output is stable enough to diff byte-for-byte across runs and worker
//! counts; JSON is compact single-line serde output.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::harness::{DistributionTable, KeyKind, VerificationReport};
use crate::involution::TraceRow;
use crate::perm::Permutation;
use crate::stats::{gap_profile, s10_s12, stat_quadruple, GapProfile, StatQuadruple};

/// Output encodings shared by the renderers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Plain,
    Json,
    Csv,
    Md,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "plain" => Ok(OutputFormat::Plain),
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "md" => Ok(OutputFormat::Md),
            other => Err(format!(
                "unknown format `{other}` (expected plain, json, csv, or md)"
            )),
        }
    }
}

/// Everything the statistics renderer reports about one permutation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StatsSummary {
    pub permutation: String,
    #[serde(flatten)]
    pub quadruple: StatQuadruple,
    pub s10: usize,
    pub s12: usize,
    #[serde(flatten)]
    pub profile: GapProfile,
}

impl StatsSummary {
    pub fn for_permutation(p: &Permutation) -> StatsSummary {
        let (s10, s12) = s10_s12(p);
        StatsSummary {
            permutation: p.to_string(),
            quadruple: stat_quadruple(p),
            s10,
            s12,
            profile: gap_profile(p),
        }
    }
}

/// Renders the full statistic set of one permutation.
pub fn render_stats(p: &Permutation, format: OutputFormat) -> String {
    let s = StatsSummary::for_permutation(p);
    match format {
        OutputFormat::Plain => {
            let mut out = String::new();
            let _ = writeln!(out, "p: {}", s.permutation);
            let q = &s.quadruple;
            let _ = writeln!(out, "t1={} t2={} t3={} s17={}", q.t1, q.t2, q.t3, q.s17);
            let _ = writeln!(out, "s10={} s12={}", s.s10, s.s12);
            let g = &s.profile;
            let _ = writeln!(out, "a={} b={} c={} d={} e={}", g.a, g.b, g.c, g.d, g.e);
            out
        }
        OutputFormat::Json => {
            let mut out = serde_json::to_string(&s).expect("summary serializes");
            out.push('\n');
            out
        }
        OutputFormat::Csv => {
            let q = &s.quadruple;
            let g = &s.profile;
            format!(
                "p,t1,t2,t3,s10,s12,s17,a,b,c,d,e\n{},{},{},{},{},{},{},{},{},{},{},{}\n",
                s.permutation, q.t1, q.t2, q.t3, s.s10, s.s12, q.s17, g.a, g.b, g.c, g.d, g.e
            )
        }
        OutputFormat::Md => {
            let q = &s.quadruple;
            let g = &s.profile;
            let mut out = String::new();
            out.push_str("| p | t1 | t2 | t3 | s10 | s12 | s17 | a | b | c | d | e |\n");
            out.push_str("|---|----|----|----|-----|-----|-----|---|---|---|---|---|\n");
            let _ = writeln!(
                out,
                "| {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} |",
                s.permutation, q.t1, q.t2, q.t3, s.s10, s.s12, q.s17, g.a, g.b, g.c, g.d, g.e
            );
            out
        }
    }
}

#[derive(Serialize)]
struct TraceRowRecord {
    n: usize,
    p: String,
    a: usize,
    b: usize,
    c: usize,
    d: usize,
    e: usize,
    p_prime: String,
    a_p: usize,
    b_p: usize,
    c_p: usize,
    d_p: usize,
    e_p: usize,
}

fn trace_record(row: &TraceRow) -> TraceRowRecord {
    TraceRowRecord {
        n: row.level,
        p: row.p.to_string(),
        a: row.profile.a,
        b: row.profile.b,
        c: row.profile.c,
        d: row.profile.d,
        e: row.profile.e,
        p_prime: row.image.to_string(),
        a_p: row.image_profile.a,
        b_p: row.image_profile.b,
        c_p: row.image_profile.c,
        d_p: row.image_profile.d,
        e_p: row.image_profile.e,
    }
}

/// Renders a level-by-level trace. The CSV column order matches the
/// step-table layout: level, prefix, its five gap counts, image, its five.
pub fn render_trace(rows: &[TraceRow], format: OutputFormat) -> String {
    let records: Vec<TraceRowRecord> = rows.iter().map(trace_record).collect();
    match format {
        OutputFormat::Csv => {
            let mut out = String::from("n,p,a,b,c,d,e,p_prime,a_p,b_p,c_p,d_p,e_p\n");
            for r in &records {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{},{},{},{},{},{},{}",
                    r.n, r.p, r.a, r.b, r.c, r.d, r.e, r.p_prime, r.a_p, r.b_p, r.c_p, r.d_p, r.e_p
                );
            }
            out
        }
        OutputFormat::Json => {
            let mut out = serde_json::to_string(&records).expect("rows serialize");
            out.push('\n');
            out
        }
        OutputFormat::Md => {
            let mut out = String::new();
            out.push_str("| n | p | A | B | C | D | E | p' | A' | B' | C' | D' | E' |\n");
            out.push_str("|---|---|---|---|---|---|---|----|----|----|----|----|----|\n");
            for r in &records {
                let _ = writeln!(
                    out,
                    "| {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} |",
                    r.n, r.p, r.a, r.b, r.c, r.d, r.e, r.p_prime, r.a_p, r.b_p, r.c_p, r.d_p,
                    r.e_p
                );
            }
            out
        }
        OutputFormat::Plain => {
            let p_width = records.iter().map(|r| r.p.len()).max().unwrap_or(1);
            let i_width = records.iter().map(|r| r.p_prime.len()).max().unwrap_or(1);
            let mut out = String::new();
            let _ = writeln!(
                out,
                "{:>2}  {:<p_width$}  {:<15}  {:<i_width$}  a' b' c' d' e'",
                "n", "p", "a b c d e", "p'"
            );
            for r in &records {
                let profile = format!("{} {} {} {} {}", r.a, r.b, r.c, r.d, r.e);
                let image_profile = format!("{} {} {} {} {}", r.a_p, r.b_p, r.c_p, r.d_p, r.e_p);
                let _ = writeln!(
                    out,
                    "{:>2}  {:<p_width$}  {:<15}  {:<i_width$}  {}",
                    r.n, r.p, profile, r.p_prime, image_profile
                );
            }
            out
        }
    }
}

#[derive(Serialize)]
struct DistributionEntry {
    key: Vec<usize>,
    count: u64,
}

#[derive(Serialize)]
struct DistributionRecord {
    n: usize,
    keys: &'static str,
    total: u64,
    entries: Vec<DistributionEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    swap_equal: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    first_difference: Option<crate::harness::KeyDifference>,
}

/// Renders a distribution table, optionally with the swapped-key verdict.
pub fn render_distribution(
    table: &DistributionTable,
    format: OutputFormat,
    swap: Option<&crate::harness::SwapComparison>,
) -> String {
    let kind = table.key_kind;
    let width = kind.columns().len();
    match format {
        OutputFormat::Csv => {
            let mut out = kind.columns().join(",");
            out.push_str(",count\n");
            for (key, count) in table.entries() {
                for k in &key[..width] {
                    let _ = write!(out, "{k},");
                }
                let _ = writeln!(out, "{count}");
            }
            if let Some(cmp) = swap {
                out.push_str(&swap_verdict(kind, cmp));
            }
            out
        }
        OutputFormat::Json => {
            let record = DistributionRecord {
                n: table.n,
                keys: kind.name(),
                total: table.total(),
                entries: table
                    .entries()
                    .map(|(key, count)| DistributionEntry {
                        key: key[..width].to_vec(),
                        count,
                    })
                    .collect(),
                swap_equal: swap.map(|c| c.equal),
                first_difference: swap.and_then(|c| c.first_difference.clone()),
            };
            let mut out = serde_json::to_string(&record).expect("record serializes");
            out.push('\n');
            out
        }
        OutputFormat::Md => {
            let mut out = String::from("| ");
            out.push_str(&kind.columns().join(" | "));
            out.push_str(" | count |\n|");
            for _ in 0..=width {
                out.push_str("---|");
            }
            out.push('\n');
            for (key, count) in table.entries() {
                out.push_str("| ");
                for k in &key[..width] {
                    let _ = write!(out, "{k} | ");
                }
                let _ = writeln!(out, "{count} |");
            }
            if let Some(cmp) = swap {
                out.push_str(&swap_verdict(kind, cmp));
            }
            out
        }
        OutputFormat::Plain => {
            let mut out = kind.columns().join(" ");
            out.push_str("  count\n");
            for (key, count) in table.entries() {
                let cells: Vec<String> = key[..width].iter().map(|k| k.to_string()).collect();
                let _ = writeln!(out, "{}  {}", cells.join(" "), count);
            }
            if let Some(cmp) = swap {
                out.push_str(&swap_verdict(kind, cmp));
            }
            out
        }
    }
}

fn swap_verdict(kind: KeyKind, cmp: &crate::harness::SwapComparison) -> String {
    if cmp.equal {
        return "equal\n".to_string();
    }
    let (c0, c1) = (kind.columns()[0], kind.columns()[1]);
    match &cmp.first_difference {
        Some(diff) => {
            let key: Vec<String> = diff.key.iter().map(|k| k.to_string()).collect();
            format!(
                "unequal under {c0}<->{c1} at key ({}): {} vs {}\n",
                key.join(","),
                diff.count,
                diff.swapped_count
            )
        }
        None => "unequal\n".to_string(),
    }
}

/// Renders a verification report: a pass/fail summary plus one line per
/// kept violation in plain form, or the serialized report in JSON.
pub fn render_report(report: &VerificationReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut out = serde_json::to_string(report).expect("report serializes");
            out.push('\n');
            out
        }
        _ => {
            let names: Vec<&str> = report.checks.iter().map(|c| c.name()).collect();
            let mut out = String::new();
            let _ = writeln!(
                out,
                "n={} checked={} checks=[{}] workers={} elapsed_ms={}",
                report.n,
                report.checked,
                names.join(","),
                report.workers,
                report.elapsed_ms
            );
            if report.passed() {
                out.push_str("result: pass\n");
            } else {
                let _ = writeln!(
                    out,
                    "result: FAIL ({} violation(s) kept, earliest first)",
                    report.violations.len()
                );
                for v in &report.violations {
                    let _ = writeln!(
                        out,
                        "  [{}] p={} expected {} but found {}",
                        v.check, v.permutation, v.expected, v.actual
                    );
                }
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::{joint_distribution, spot_check, verify, Check};
    use crate::involution::trace;

    #[test]
    fn formats_parse_and_reject() {
        assert_eq!("plain".parse::<OutputFormat>().unwrap(), OutputFormat::Plain);
        assert_eq!("json".parse::<OutputFormat>().unwrap(), OutputFormat::Json);
        assert_eq!("csv".parse::<OutputFormat>().unwrap(), OutputFormat::Csv);
        assert_eq!("md".parse::<OutputFormat>().unwrap(), OutputFormat::Md);
        assert!("yaml".parse::<OutputFormat>().is_err());
    }

    #[test]
    fn stats_renderings_carry_every_statistic() {
        let p: Permutation = "3 6 4 5 7 8 2 1".parse().unwrap();
        let plain = render_stats(&p, OutputFormat::Plain);
        assert_eq!(
            plain,
            "p: 3 6 4 5 7 8 2 1\nt1=0 t2=1 t3=0 s17=1\ns10=0 s12=1\na=2 b=1 c=4 d=2 e=0\n"
        );

        let json: serde_json::Value =
            serde_json::from_str(&render_stats(&p, OutputFormat::Json)).unwrap();
        assert_eq!(json["permutation"], "3 6 4 5 7 8 2 1");
        assert_eq!(json["t2"], 1);
        assert_eq!(json["s12"], 1);
        assert_eq!(json["a"], 2);
        assert_eq!(json["e"], 0);

        let csv = render_stats(&p, OutputFormat::Csv);
        assert_eq!(
            csv,
            "p,t1,t2,t3,s10,s12,s17,a,b,c,d,e\n3 6 4 5 7 8 2 1,0,1,0,0,1,1,2,1,4,2,0\n"
        );

        let md = render_stats(&p, OutputFormat::Md);
        assert!(md.starts_with("| p | t1 | t2 | t3 |"));
        assert!(md.contains("| 3 6 4 5 7 8 2 1 | 0 | 1 | 0 | 0 | 1 | 1 | 2 | 1 | 4 | 2 | 0 |"));
    }

    #[test]
    fn trace_csv_matches_the_worked_step_table() {
        let p: Permutation = "3 6 4 5 7 8 2 1".parse().unwrap();
        let csv = render_trace(&trace(&p), OutputFormat::Csv);
        assert!(csv.starts_with("n,p,a,b,c,d,e,p_prime,a_p,b_p,c_p,d_p,e_p\n"));
        assert!(csv.contains("5,3 4 5 2 1,0,2,3,1,0,2 1 4 3 5,1,1,3,1,0\n"));
        assert!(csv.ends_with("8,3 6 4 5 7 8 2 1,2,1,4,2,0,7 2 6 1 4 3 8 5,1,2,4,2,0\n"));
    }

    #[test]
    fn trace_json_and_md_share_the_csv_fields() {
        let p: Permutation = "2 1".parse().unwrap();
        let rows = trace(&p);

        let json: serde_json::Value =
            serde_json::from_str(&render_trace(&rows, OutputFormat::Json)).unwrap();
        assert_eq!(json.as_array().unwrap().len(), 2);
        assert_eq!(json[1]["n"], 2);
        assert_eq!(json[1]["p"], "2 1");
        assert_eq!(json[1]["p_prime"], "2 1");
        assert_eq!(json[1]["a_p"], 1);

        let md = render_trace(&rows, OutputFormat::Md);
        assert!(md.starts_with("| n | p | A | B | C | D | E | p' | A' | B' | C' | D' | E' |\n"));
        assert!(md.ends_with("| 2 | 2 1 | 1 | 1 | 1 | 0 | 0 | 2 1 | 1 | 1 | 1 | 0 | 0 |\n"));

        let plain = render_trace(&rows, OutputFormat::Plain);
        assert_eq!(plain.lines().count(), 3);
        assert!(plain.lines().all(|l| !l.is_empty()));
    }

    #[test]
    fn distribution_renderings_agree_with_the_table() {
        let table = joint_distribution(3, KeyKind::Quadruple, 1).unwrap();
        let csv = render_distribution(&table, OutputFormat::Csv, None);
        assert_eq!(
            csv,
            "t1,t2,t3,s17,count\n0,0,0,3,1\n0,0,1,1,1\n0,0,1,2,1\n0,1,0,1,1\n1,0,0,1,1\n1,1,0,2,1\n"
        );

        let cmp = table.compare(&table.swapped());
        let with_verdict = render_distribution(&table, OutputFormat::Csv, Some(&cmp));
        assert!(with_verdict.ends_with("1,1,0,2,1\nequal\n"));

        let json: serde_json::Value =
            serde_json::from_str(&render_distribution(&table, OutputFormat::Json, Some(&cmp)))
                .unwrap();
        assert_eq!(json["n"], 3);
        assert_eq!(json["keys"], "quadruple");
        assert_eq!(json["total"], 6);
        assert_eq!(json["entries"].as_array().unwrap().len(), 6);
        assert_eq!(json["entries"][0]["key"], serde_json::json!([0, 0, 0, 3]));
        assert_eq!(json["swap_equal"], true);
        assert!(json.get("first_difference").is_none());

        let triple = joint_distribution(3, KeyKind::Triple, 1).unwrap();
        let csv = render_distribution(&triple, OutputFormat::Csv, None);
        assert!(csv.starts_with("s10,s12,s17,count\n"));
        assert!(csv.contains("1,1,2,2\n"));

        let md = render_distribution(&triple, OutputFormat::Md, None);
        assert!(md.starts_with("| s10 | s12 | s17 | count |\n"));

        let plain = render_distribution(&triple, OutputFormat::Plain, None);
        assert!(plain.starts_with("s10 s12 s17  count\n"));
    }

    #[test]
    fn report_renderings_expose_pass_and_fail() {
        let report = verify(4, &[Check::Involution, Check::Swap], 1).unwrap();
        let plain = render_report(&report, OutputFormat::Plain);
        assert!(plain.starts_with("n=4 checked=24 checks=[involution,swap] workers=1"));
        assert!(plain.ends_with("result: pass\n"));

        let json: serde_json::Value =
            serde_json::from_str(&render_report(&report, OutputFormat::Json)).unwrap();
        assert_eq!(json["n"], 4);
        assert_eq!(json["checked"], 24);
        assert_eq!(json["checks"], serde_json::json!(["involution", "swap"]));
        assert_eq!(json["violations"], serde_json::json!([]));
        assert!(json["elapsed_ms"].is_u64());

        let sampled = spot_check(9, 32, 3, &Check::ALL).unwrap();
        let plain = render_report(&sampled, OutputFormat::Plain);
        assert!(plain.contains("checked=32"));
    }
}
