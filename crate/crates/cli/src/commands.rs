//! One function per subcommand. Each returns both renderings so the binary
//! only picks one.

use knotcolor::linear::{enumerate_colorings, ColoringSystem};
use knotcolor::search::{find_nonconstant_coloring, quandle_coloring_count, SearchLimits};
use knotcolor::twist::TwistKnot;
use knotcolor::{
    alexander_polynomial, minimal_linear_order, minimal_quandle_order, CatalogId, FiniteQuandle,
    LinearQuandleParams, OrientedDiagram, QuandleOrder,
};
use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::error::CliError;
use crate::schema::{polynomial_to_json, CountJson, MinOrderJson, QuandleJson, TwistRowJson};

#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub text: String,
    pub json: Value,
}

pub fn alexander(d: &OrientedDiagram) -> Result<Output, CliError> {
    let p = alexander_polynomial(d)?;
    Ok(Output {
        text: p.to_string(),
        json: json!(polynomial_to_json(&p)),
    })
}

#[derive(Debug, Clone)]
pub enum ColorTarget {
    Linear(LinearQuandleParams),
    Quandle(FiniteQuandle),
}

/// A catalog name or an inline JSON table.
pub fn resolve_quandle(spec: &str) -> Result<FiniteQuandle, CliError> {
    let spec = spec.trim();
    if spec.starts_with('{') {
        serde_json::from_str::<QuandleJson>(spec)?.to_quandle()
    } else {
        Ok(spec.parse::<CatalogId>()?.quandle())
    }
}

fn count_text(count: &BigUint, colorable: bool) -> String {
    format!(
        "count: {count}, colorable: {}",
        if colorable { "yes" } else { "no" }
    )
}

/// Counts colorings; with `list`, also returns up to that many linear
/// colorings or the first non-constant quandle coloring.
pub fn color(
    d: &OrientedDiagram,
    target: &ColorTarget,
    list: Option<usize>,
) -> Result<Output, CliError> {
    match target {
        ColorTarget::Linear(p) => {
            let count = ColoringSystem::new(d, p.ell(), p.k()).count(p.n());
            let colorable = count > BigUint::from(p.n());
            let colorings = list.map(|limit| enumerate_colorings(d, p, limit, true)
                        .expect("truncation never fails")
                        .into_iter()
                        .map(|c| c.assignment)
                        .collect::<Vec<_>>());
            let mut text = count_text(&count, colorable);
            for c in colorings.iter().flatten() {
                text.push('\n');
                text.push_str(&format_coloring(c.iter().copied()));
            }
            let body = CountJson {
                count: count.to_string(),
                colorable,
                quandle: p.label(),
                colorings,
            };
            Ok(Output {
                text,
                json: serde_json::to_value(body)?,
            })
        }
        ColorTarget::Quandle(q) => {
            let count = quandle_coloring_count(d, q)?;
            let colorable = count > BigUint::from(q.order());
            let colorings = match list {
                Some(limit) if limit > 0 => {
                    let found = find_nonconstant_coloring(d, q, SearchLimits::default())?;
                    Some(
                        found
                            .into_iter()
                            .map(|c| c.into_iter().map(|x| x as u64).collect::<Vec<u64>>())
                            .collect::<Vec<_>>(),
                    )
                }
                _ => None,
            };
            let mut text = count_text(&count, colorable);
            for c in colorings.iter().flatten() {
                text.push('\n');
                text.push_str(&format_coloring(c.iter().copied()));
            }
            let name = q.name().unwrap_or("custom").to_owned();
            let body = CountJson {
                count: count.to_string(),
                colorable,
                quandle: name,
                colorings,
            };
            Ok(Output {
                text,
                json: serde_json::to_value(body)?,
            })
        }
    }
}

fn format_coloring(c: impl Iterator<Item = u64>) -> String {
    c.map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OrderMode {
    Linear,
    Quandle,
}

pub fn min_order(d: &OrientedDiagram, mode: OrderMode) -> Result<Output, CliError> {
    match mode {
        OrderMode::Linear => {
            let delta = alexander_polynomial(d)?;
            let found = minimal_linear_order(&delta)?;
            Ok(Output {
                text: format!("{} (p={}, k={})", found.n, found.witness.p, found.witness.k),
                json: serde_json::to_value(MinOrderJson::from(found))?,
            })
        }
        OrderMode::Quandle => {
            let q = minimal_quandle_order(d)?;
            Ok(Output {
                text: q.to_string(),
                json: serde_json::to_value(MinOrderJson::from(q))?,
            })
        }
    }
}

fn q_value(q: QuandleOrder) -> String {
    match q.order() {
        Some(order) => order.to_string(),
        None => "≥8".into(),
    }
}

pub fn twist_single(c: u64) -> Result<Output, CliError> {
    let knot = TwistKnot::new(c)?;
    let q = knot.min_quandle_order();
    let witness = q
        .witness()
        .map_or_else(|| "none".to_owned(), |w| w.to_string());
    Ok(Output {
        text: format!("c={c}, q={}, witness {witness}", q_value(q)),
        json: serde_json::to_value(twist_row(knot))?,
    })
}

fn twist_row(knot: TwistKnot) -> TwistRowJson {
    TwistRowJson {
        c: knot.crossing_number(),
        delta: polynomial_to_json(&knot.alexander()),
        order: knot.min_quandle_order().into(),
    }
}

/// `A..B` or `A..=B`, both inclusive.
pub fn parse_range(spec: &str) -> Result<(u64, u64), CliError> {
    let bad = || CliError::Usage(format!("expected a range like 3..14, got `{spec}`"));
    let (a, b) = spec.split_once("..").ok_or_else(bad)?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let (a, b): (u64, u64) = (
        a.trim().parse().map_err(|_| bad())?,
        b.trim().parse().map_err(|_| bad())?,
    );
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

pub fn twist_range(first: u64, last: u64) -> Result<Output, CliError> {
    let knots = (first..=last)
        .map(TwistKnot::new)
        .collect::<Result<Vec<_>, _>>()?;
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record(["c", "delta", "q_value", "witness"])
        .expect("in-memory write");
    let mut rows = Vec::with_capacity(knots.len());
    for knot in knots {
        let q = knot.min_quandle_order();
        writer
            .write_record([
                knot.crossing_number().to_string(),
                knot.alexander().to_string(),
                q_value(q),
                q.witness().map_or_else(String::new, |w| w.to_string()),
            ])
            .expect("in-memory write");
        rows.push(twist_row(knot));
    }
    let text =
        String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("utf-8 fields");
    Ok(Output {
        text: text.trim_end().to_owned(),
        json: serde_json::to_value(rows)?,
    })
}
