use std::fmt::Write as _;
use std::str::FromStr;

use super::{CaseReport, Status};
use crate::error::{Error, Result};

/// Output format of a rendered report.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Markdown,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "md" | "markdown" => Ok(Format::Markdown),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

fn csv(report: &CaseReport) -> String {
    let mut out = String::from("kind,level,tuple\n");
    for l in &report.levels {
        for t in &l.tuples {
            let _ = writeln!(out, "{},{},{}", l.kind, l.k, join(t, " "));
        }
    }
    out
}

fn markdown(report: &CaseReport) -> String {
    let c = &report.case;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "# {}{}, word ({}), lambda ({}), levels 1..={}\n",
        c.series,
        c.rank,
        join(&c.word, ","),
        join(&c.lambda, ","),
        c.kmax
    );
    out.push_str("## Checks\n\n| check | status | statement |\n|---|---|---|\n");
    for r in &report.checks {
        let status = match r.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Inconclusive => "inconclusive",
            Status::Skipped => "skipped",
        };
        let _ = writeln!(out, "| {} | {} | {} |", r.id, status, r.id.description());
    }
    out.push_str("\n## Valuations at level 1\n\n");
    out.push_str(&report.table.to_markdown());
    out.push_str("\n## Level sizes\n\n| k | kind | size |\n|---|---|---|\n");
    for l in &report.levels {
        let _ = writeln!(out, "| {} | {} | {} |", l.k, l.kind, l.tuples.len());
    }
    out.push_str("\n## Level-1 vertices\n\n| kind | vertices |\n|---|---|\n");
    for p in &report.polytopes {
        let verts: Vec<String> = p.vertices.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "| {} | {} |", p.kind, verts.join(" "));
    }
    out
}

/// Deterministic text for a report.
pub fn render_report(report: &CaseReport, format: Format) -> Result<String> {
    Ok(match format {
        Format::Json => {
            let mut s =
                serde_json::to_string_pretty(report).map_err(|e| Error::Domain(e.to_string()))?;
            s.push('\n');
            s
        }
        Format::Csv => csv(report),
        Format::Markdown => markdown(report),
    })
}

impl CaseReport {
    pub fn from_json(text: &str) -> Result<CaseReport> {
        serde_json::from_str(text).map_err(|e| Error::Input(format!("bad report: {e}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::Series;
    use crate::harness::{run_case, CaseSpec};

    #[test]
    fn formats() {
        assert_eq!("JSON".parse::<Format>().unwrap(), Format::Json);
        assert_eq!("md".parse::<Format>().unwrap(), Format::Markdown);
        assert_eq!(
            "xml".parse::<Format>(),
            Err(Error::UnknownFormat("xml".into()))
        );
    }

    #[test]
    fn renderings() {
        let report = run_case(&CaseSpec::new(Series::A, 2, vec![1, 2], vec![1, 1], 1)).unwrap();
        let json = render_report(&report, Format::Json).unwrap();
        assert_eq!(CaseReport::from_json(&json).unwrap(), report);
        assert_eq!(render_report(&report, Format::Json).unwrap(), json);
        let csv = render_report(&report, Format::Csv).unwrap();
        assert!(csv.starts_with("kind,level,tuple\n"));
        assert!(csv.contains("\nv_high,1,0 0\n"));
        assert!(csv.contains("\nphi,1,1 1\n"));
        let md = render_report(&report, Format::Markdown).unwrap();
        assert!(md.contains("| C4 | pass |"));
    }
}
