//! JSON shapes for every value the command line reads or writes.

use std::str::FromStr;

use knotcolor::search::{LinearOrder, LinearVerdict, LinearWitness};
use knotcolor::{CrossingTriple, FiniteQuandle, LaurentPoly, OrientedDiagram, QuandleOrder};
use serde::{Deserialize, Serialize};
use serde_json::Number;

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuandleJson {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl QuandleJson {
    pub fn from_quandle(q: &FiniteQuandle) -> Self {
        QuandleJson {
            order: q.order(),
            table: q.rows(),
            name: q.name().map(str::to_owned),
        }
    }

    pub fn to_quandle(&self) -> Result<FiniteQuandle, CliError> {
        if self.table.len() != self.order {
            return Err(CliError::Usage(format!(
                "quandle table has {} rows but order {}",
                self.table.len(),
                self.order
            )));
        }
        Ok(FiniteQuandle::from_rows(
            self.table.clone(),
            self.name.clone(),
        )?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingJson {
    pub over: usize,
    pub right: usize,
    pub left: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    pub crossings: Vec<CrossingJson>,
}

impl DiagramJson {
    pub fn from_diagram(d: &OrientedDiagram) -> Self {
        DiagramJson {
            crossings: d
                .crossings()
                .iter()
                .map(|x| CrossingJson {
                    over: x.over,
                    right: x.right,
                    left: x.left,
                })
                .collect(),
        }
    }

    pub fn to_diagram(&self) -> Result<OrientedDiagram, CliError> {
        let crossings = self
            .crossings
            .iter()
            .map(|x| CrossingTriple::new(x.over, x.right, x.left))
            .collect();
        Ok(OrientedDiagram::new(crossings)?)
    }
}

/// Coefficients from the constant term up, as exact JSON integers.
pub fn polynomial_to_json(p: &LaurentPoly) -> Vec<Number> {
    debug_assert!(p.is_zero() || p.low_degree() == 0);
    p.coeffs()
        .iter()
        .map(|c| Number::from_str(&c.to_string()).expect("integers are numbers"))
        .collect()
}

pub fn polynomial_from_json(coeffs: &[Number]) -> Result<LaurentPoly, CliError> {
    let parsed = coeffs
        .iter()
        .map(|n| {
            n.to_string()
                .parse()
                .map_err(|_| CliError::Usage(format!("coefficient {n} is not an integer")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(LaurentPoly::new(0, parsed))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub p: u64,
    pub k: u64,
}

impl From<LinearWitness> for WitnessJson {
    fn from(w: LinearWitness) -> Self {
        WitnessJson { p: w.p, k: w.k }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictJson {
    pub colorable: bool,
    pub witness: Option<WitnessJson>,
}

impl From<LinearVerdict> for VerdictJson {
    fn from(v: LinearVerdict) -> Self {
        VerdictJson {
            colorable: v.colorable,
            witness: v.witness.map(Into::into),
        }
    }
}

/// `min_order` is a number, or the string `"geq8"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MinOrderValue {
    Order(u64),
    Label(String),
}

pub const GEQ8: &str = "geq8";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinOrderJson {
    pub min_order: MinOrderValue,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness_quandle: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
}

impl From<QuandleOrder> for MinOrderJson {
    fn from(q: QuandleOrder) -> Self {
        match q {
            QuandleOrder::Order { order, witness } => MinOrderJson {
                min_order: MinOrderValue::Order(order as u64),
                witness_quandle: Some(witness.name().to_owned()),
                witness: None,
            },
            QuandleOrder::AtLeastEight => MinOrderJson {
                min_order: MinOrderValue::Label(GEQ8.to_owned()),
                witness_quandle: None,
                witness: None,
            },
        }
    }
}

impl From<LinearOrder> for MinOrderJson {
    fn from(o: LinearOrder) -> Self {
        MinOrderJson {
            min_order: MinOrderValue::Order(o.n),
            witness_quandle: None,
            witness: Some(o.witness.into()),
        }
    }
}

impl MinOrderJson {
    pub fn to_quandle_order(&self) -> Result<QuandleOrder, CliError> {
        match (&self.min_order, &self.witness_quandle) {
            (MinOrderValue::Label(l), None) if l == GEQ8 => Ok(QuandleOrder::AtLeastEight),
            (MinOrderValue::Order(order), Some(name)) => {
                let witness: knotcolor::CatalogId = name.parse()?;
                if witness.order() as u64 != *order {
                    return Err(CliError::Usage(format!(
                        "{name} does not have order {order}"
                    )));
                }
                Ok(QuandleOrder::Order {
                    order: *order as usize,
                    witness,
                })
            }
            _ => Err(CliError::Usage("malformed minimal order".into())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountJson {
    /// Decimal string; counts grow as `n^rank`.
    pub count: String,
    pub colorable: bool,
    pub quandle: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub colorings: Option<Vec<Vec<u64>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistRowJson {
    pub c: u64,
    pub delta: Vec<Number>,
    #[serde(flatten)]
    pub order: MinOrderJson,
}
