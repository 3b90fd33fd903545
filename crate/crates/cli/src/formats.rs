//! Text formats for diagrams.
//!
//! Triples: one crossing per line, `X over right left`, arc ids from 0.
//! PD: entries `X[a,b,c,d]` with 1-based edge labels, anywhere in the text,
//! optionally wrapped in `PD[...]`. In both, `#` starts a comment.

use std::fmt::Write;
use std::path::Path;

use knotcolor::{CrossingTriple, OrientedDiagram};

use crate::error::CliError;
use crate::schema::DiagramJson;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum DiagramFormat {
    Tri,
    Pd,
    Json,
}

impl DiagramFormat {
    pub fn from_path(path: &Path) -> Option<Self> {
        match path.extension()?.to_str()? {
            "tri" => Some(DiagramFormat::Tri),
            "pd" => Some(DiagramFormat::Pd),
            "json" => Some(DiagramFormat::Json),
            _ => None,
        }
    }

    /// Guess for inline text.
    pub fn sniff(text: &str) -> Self {
        let body = strip_comments(text);
        if body.trim_start().starts_with('{') {
            DiagramFormat::Json
        } else if body.contains('[') {
            DiagramFormat::Pd
        } else {
            DiagramFormat::Tri
        }
    }
}

fn strip_comments(text: &str) -> String {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn parse_diagram(text: &str, format: DiagramFormat) -> Result<OrientedDiagram, CliError> {
    match format {
        DiagramFormat::Tri => parse_triples(text),
        DiagramFormat::Pd => parse_pd(text),
        DiagramFormat::Json => Ok(serde_json::from_str::<DiagramJson>(text)?.to_diagram()?),
    }
}

pub fn parse_triples(text: &str) -> Result<OrientedDiagram, CliError> {
    let mut crossings = Vec::new();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut fields = content.split_whitespace();
        if fields.next() != Some("X") {
            return Err(CliError::parse(
                line,
                "expected a line of the form `X over right left`",
            ));
        }
        let ids: Vec<&str> = fields.collect();
        if ids.len() != 3 {
            return Err(CliError::parse(
                line,
                format!("expected 3 arc ids, found {}", ids.len()),
            ));
        }
        let mut parsed = [0usize; 3];
        for (slot, id) in parsed.iter_mut().zip(&ids) {
            *slot = id.parse().map_err(|_| {
                CliError::parse(line, format!("`{id}` is not a nonnegative integer"))
            })?;
        }
        crossings.push(CrossingTriple::new(parsed[0], parsed[1], parsed[2]));
    }
    if crossings.is_empty() {
        return Err(CliError::parse(last_line.max(1), "no crossings"));
    }
    Ok(OrientedDiagram::new(crossings)?)
}

pub fn write_triples(d: &OrientedDiagram) -> String {
    let mut out = String::new();
    for x in d.crossings() {
        writeln!(out, "X {} {} {}", x.over, x.right, x.left).unwrap();
    }
    out
}

pub fn parse_pd(text: &str) -> Result<OrientedDiagram, CliError> {
    let mut entries = Vec::new();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let mut rest = raw.split('#').next().unwrap_or("");
        while let Some(start) = rest.find("X[") {
            let body = &rest[start + 2..];
            let end = body
                .find(']')
                .ok_or_else(|| CliError::parse(line, "unterminated `X[`"))?;
            let labels: Vec<&str> = body[..end].split(',').map(str::trim).collect();
            if labels.len() != 4 {
                return Err(CliError::parse(
                    line,
                    format!("expected 4 edge labels, found {}", labels.len()),
                ));
            }
            let mut entry = [0usize; 4];
            for (slot, label) in entry.iter_mut().zip(&labels) {
                *slot = label.parse().map_err(|_| {
                    CliError::parse(line, format!("`{label}` is not a positive integer"))
                })?;
            }
            entries.push(entry);
            rest = &body[end + 1..];
        }
    }
    if entries.is_empty() {
        return Err(CliError::parse(last_line.max(1), "no crossings"));
    }
    Ok(OrientedDiagram::from_pd(&entries)?)
}

pub fn write_pd(pd: &[[usize; 4]]) -> String {
    let entries: Vec<String> = pd
        .iter()
        .map(|[a, b, c, d]| format!("X[{a},{b},{c},{d}]"))
        .collect();
    format!("PD[{}]\n", entries.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use knotcolor::diagram::samples::*;

    #[test]
    fn triples_round_trip() {
        for d in [trefoil(), trefoil_with_kink(false), unknot_one()] {
            assert_eq!(parse_triples(&write_triples(&d)).unwrap(), d);
        }
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# trefoil\n\nX 0 2 1  # first\nX 1 0 2\n   \nX 2 1 0\n";
        assert_eq!(parse_triples(text).unwrap(), trefoil());
    }

    #[test]
    fn triple_errors_carry_line_numbers() {
        let err = parse_triples("X 0 2 1\nX 1 0\n").unwrap_err();
        assert_eq!(err.to_string(), "line 2: expected 3 arc ids, found 2");
        let err = parse_triples("# nothing\n\n").unwrap_err();
        assert_eq!(err.to_string(), "line 2: no crossings");
        let err = parse_triples("X 0 a 1").unwrap_err();
        assert!(err.to_string().starts_with("line 1:"));
        let err = parse_triples("X 0 2 1\nX 1 0 2\nX 2 1 7\n").unwrap_err();
        assert!(err.to_string().contains("id out of range"));
    }

    #[test]
    fn pd_parsing() {
        let d = parse_pd("PD[X[4,2,5,1], X[8,6,1,5],\n X[6,3,7,4], X[2,7,3,8]]").unwrap();
        assert_eq!(d, OrientedDiagram::from_pd(&FIGURE_EIGHT_PD).unwrap());
        assert_eq!(
            parse_pd(&write_pd(&TORUS_3_5_PD)).unwrap(),
            OrientedDiagram::from_pd(&TORUS_3_5_PD).unwrap()
        );
        assert!(parse_pd("X[1,2,3]")
            .unwrap_err()
            .to_string()
            .starts_with("line 1:"));
        let hopf = parse_pd(&write_pd(&HOPF_PD)).unwrap_err();
        assert!(hopf.to_string().contains("knots only"));
    }

    #[test]
    fn format_detection() {
        assert_eq!(
            DiagramFormat::from_path(Path::new("a/b.tri")),
            Some(DiagramFormat::Tri)
        );
        assert_eq!(
            DiagramFormat::from_path(Path::new("b.pd")),
            Some(DiagramFormat::Pd)
        );
        assert_eq!(DiagramFormat::from_path(Path::new("b.txt")), None);
        assert_eq!(DiagramFormat::sniff("X 0 0 0"), DiagramFormat::Tri);
        assert_eq!(DiagramFormat::sniff("X[1,2,3,4]"), DiagramFormat::Pd);
        assert_eq!(
            DiagramFormat::sniff(" {\"crossings\": []}"),
            DiagramFormat::Json
        );
    }
}
