//! Colorability searches: linear orders from the Alexander polynomial and
//! the minimal quandle order over the order-≤7 catalog.

mod backtrack;
mod linear;

pub use backtrack::{
    brute_force_quandle_count, find_nonconstant_coloring, for_each_quandle_coloring,
    is_quandle_colorable, quandle_coloring_count, quandle_coloring_count_with,
};
pub use linear::{
    colorability_bound, is_linear_n_colorable, minimal_linear_order, prime_witness,
    BoundConstruction, LinearOrder, LinearVerdict, LinearWitness,
};

use alloc::vec::Vec;
use core::fmt;

use crate::catalog::{catalog_ids, CatalogId};
use crate::diagram::OrientedDiagram;

/// Budget for the backtracking engine, counted in branch attempts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_nodes: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_nodes: 50_000_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchError {
    ScaleCapExceeded {
        max_nodes: u64,
    },
    /// `Δ = 1` admits no bound and possibly no linear coloring at all.
    ConstantPolynomial,
    BoundTooLarge,
    BoundInvariant(BoundConstruction),
    /// Two catalog quandles that must agree on colorability disagreed.
    Inconsistent {
        reason: &'static str,
    },
}

impl fmt::Display for SearchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchError::ScaleCapExceeded { max_nodes } => {
                write!(f, "search exceeded its budget of {max_nodes} nodes")
            }
            SearchError::ConstantPolynomial => {
                write!(
                    f,
                    "no bound exists for Δ = 1; the knot may not be linearly colorable"
                )
            }
            SearchError::BoundTooLarge => write!(f, "bound parameter does not fit in 64 bits"),
            SearchError::BoundInvariant(b) => {
                write!(
                    f,
                    "bound construction k = {}, n = {} violates its invariants",
                    b.k, b.n_bound
                )
            }
            SearchError::Inconsistent { reason } => write!(f, "consistency check failed: {reason}"),
        }
    }
}

impl core::error::Error for SearchError {}

/// Result of the minimal quandle order search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QuandleOrder {
    Order {
        order: usize,
        witness: CatalogId,
    },
    /// No quandle of order at most 7 in the catalog colors the knot.
    AtLeastEight,
}

impl QuandleOrder {
    pub const AT_LEAST_EIGHT_LABEL: &'static str = "≥ 8 (relative to the order-≤7 catalog)";

    pub fn order(self) -> Option<usize> {
        match self {
            QuandleOrder::Order { order, .. } => Some(order),
            QuandleOrder::AtLeastEight => None,
        }
    }

    pub fn witness(self) -> Option<CatalogId> {
        match self {
            QuandleOrder::Order { witness, .. } => Some(witness),
            QuandleOrder::AtLeastEight => None,
        }
    }
}

impl fmt::Display for QuandleOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuandleOrder::Order { order, witness } => write!(f, "{order} ({witness})"),
            QuandleOrder::AtLeastEight => f.write_str(Self::AT_LEAST_EIGHT_LABEL),
        }
    }
}

/// Pairs `(Z_p, 1*k)`, `(Z_p, 1*k')` with `k' ≡ k̄`, which color exactly the
/// same knots.
const INVERSE_PAIRS: [(CatalogId, CatalogId); 3] = [
    (CatalogId::Z5_1x3, CatalogId::Z5_1x2),
    (CatalogId::Z7_1x4, CatalogId::Z7_1x2),
    (CatalogId::Z7_1x5, CatalogId::Z7_1x3),
];

/// Tries every catalog quandle of order 3, 4, 5, 6, 7 in turn and reports
/// the first order with a nontrivial coloring. Every quandle of the winning
/// order is evaluated so the inverse pairs can be cross-checked, and an
/// order-6 hit is an error because such a knot is already 3-colorable.
pub fn minimal_quandle_order(d: &OrientedDiagram) -> Result<QuandleOrder, SearchError> {
    minimal_quandle_order_with(d, SearchLimits::default())
}

pub fn minimal_quandle_order_with(
    d: &OrientedDiagram,
    limits: SearchLimits,
) -> Result<QuandleOrder, SearchError> {
    for order in 3..=7 {
        let mut hits: Vec<CatalogId> = Vec::new();
        for id in catalog_ids(order) {
            if find_nonconstant_coloring(d, &id.quandle(), limits)?.is_some() {
                hits.push(id);
            }
        }
        for (a, b) in INVERSE_PAIRS {
            if a.order() == order && hits.contains(&a) != hits.contains(&b) {
                return Err(SearchError::Inconsistent {
                    reason: "inverse-parameter linear quandles disagree",
                });
            }
        }
        if let Some(&witness) = hits.first() {
            if order == 6 {
                return Err(SearchError::Inconsistent {
                    reason: "order-6 coloring without a 3-coloring",
                });
            }
            return Ok(QuandleOrder::Order { order, witness });
        }
    }
    Ok(QuandleOrder::AtLeastEight)
}
