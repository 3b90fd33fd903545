//! The indecomposable quandles of order 3 through 7.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::quandle::{make_linear_quandle, FiniteQuandle, LinearQuandleParams, QuandleError};

/// Operation matrices of the two order-6 indecomposable quandles, with the
/// source's 1-based labels. Entry `(i, j)` is `i * j`.
const QS6_ONE_BASED: [[usize; 6]; 6] = [
    [1, 1, 5, 6, 3, 4],
    [2, 2, 6, 5, 4, 3],
    [5, 6, 3, 3, 1, 2],
    [6, 5, 4, 4, 2, 1],
    [3, 4, 1, 2, 5, 5],
    [4, 3, 2, 1, 6, 6],
];

const QS6_PRIME_ONE_BASED: [[usize; 6]; 6] = [
    [1, 1, 6, 5, 3, 4],
    [2, 2, 5, 6, 4, 3],
    [5, 6, 3, 3, 2, 1],
    [6, 5, 4, 4, 1, 2],
    [4, 3, 1, 2, 5, 5],
    [3, 4, 2, 1, 6, 6],
];

/// The surjection `QS6 → (Z3, 1*1)` pairing `{1,2}`, `{3,4}`, `{5,6}`
/// (1-based), in 0-based form. The same map works for `QS6'`.
pub const QS6_TO_Z3: [usize; 6] = [0, 0, 1, 1, 2, 2];

/// Shifts a 1-based matrix to 0-based rows.
pub fn shift_one_based(matrix: &[[usize; 6]; 6]) -> Vec<Vec<usize>> {
    matrix
        .iter()
        .map(|row| row.iter().map(|&x| x - 1).collect())
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CatalogId {
    Z3_1x1,
    S4,
    Z5_1x1,
    Z5_1x2,
    Z5_1x3,
    QS6,
    QS6p,
    Z7_1x1,
    Z7_1x2,
    Z7_1x3,
    Z7_1x4,
    Z7_1x5,
}

impl CatalogId {
    pub const ALL: [CatalogId; 12] = [
        CatalogId::Z3_1x1,
        CatalogId::S4,
        CatalogId::Z5_1x1,
        CatalogId::Z5_1x2,
        CatalogId::Z5_1x3,
        CatalogId::QS6,
        CatalogId::QS6p,
        CatalogId::Z7_1x1,
        CatalogId::Z7_1x2,
        CatalogId::Z7_1x3,
        CatalogId::Z7_1x4,
        CatalogId::Z7_1x5,
    ];

    /// Machine name, as accepted on the command line.
    pub fn name(self) -> &'static str {
        match self {
            CatalogId::Z3_1x1 => "Z3_1x1",
            CatalogId::S4 => "S4",
            CatalogId::Z5_1x1 => "Z5_1x1",
            CatalogId::Z5_1x2 => "Z5_1x2",
            CatalogId::Z5_1x3 => "Z5_1x3",
            CatalogId::QS6 => "QS6",
            CatalogId::QS6p => "QS6p",
            CatalogId::Z7_1x1 => "Z7_1x1",
            CatalogId::Z7_1x2 => "Z7_1x2",
            CatalogId::Z7_1x3 => "Z7_1x3",
            CatalogId::Z7_1x4 => "Z7_1x4",
            CatalogId::Z7_1x5 => "Z7_1x5",
        }
    }

    pub fn order(self) -> usize {
        match self {
            CatalogId::Z3_1x1 => 3,
            CatalogId::S4 => 4,
            CatalogId::Z5_1x1 | CatalogId::Z5_1x2 | CatalogId::Z5_1x3 => 5,
            CatalogId::QS6 | CatalogId::QS6p => 6,
            _ => 7,
        }
    }

    /// `(n, 1, k)` for the linear entries.
    pub fn linear_params(self) -> Option<LinearQuandleParams> {
        let (n, k) = match self {
            CatalogId::Z3_1x1 => (3, 1),
            CatalogId::Z5_1x1 => (5, 1),
            CatalogId::Z5_1x2 => (5, 2),
            CatalogId::Z5_1x3 => (5, 3),
            CatalogId::Z7_1x1 => (7, 1),
            CatalogId::Z7_1x2 => (7, 2),
            CatalogId::Z7_1x3 => (7, 3),
            CatalogId::Z7_1x4 => (7, 4),
            CatalogId::Z7_1x5 => (7, 5),
            CatalogId::S4 | CatalogId::QS6 | CatalogId::QS6p => return None,
        };
        Some(LinearQuandleParams::new(n, 1, k).expect("catalog parameters are coprime"))
    }

    pub fn quandle(self) -> FiniteQuandle {
        let q = match self {
            CatalogId::S4 => make_tetrahedron_quandle(),
            CatalogId::QS6 => FiniteQuandle::from_rows(shift_one_based(&QS6_ONE_BASED), None)
                .expect("QS6 satisfies the quandle axioms"),
            CatalogId::QS6p => {
                FiniteQuandle::from_rows(shift_one_based(&QS6_PRIME_ONE_BASED), None)
                    .expect("QS6' satisfies the quandle axioms")
            }
            linear => make_linear_quandle(&linear.linear_params().unwrap()),
        };
        q.with_name(self.name())
    }
}

impl fmt::Display for CatalogId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogId::S4 => f.write_str("S4"),
            CatalogId::QS6 => f.write_str("QS6"),
            CatalogId::QS6p => f.write_str("QS6'"),
            linear => {
                let p = linear.linear_params().unwrap();
                write!(f, "(Z{},{}*{})", p.n(), p.ell(), p.k())
            }
        }
    }
}

impl FromStr for CatalogId {
    type Err = QuandleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CatalogId::ALL
            .into_iter()
            .find(|id| id.name() == s || (*id == CatalogId::QS6p && s == "QS6'"))
            .ok_or_else(|| QuandleError::UnknownName(s.to_string()))
    }
}

/// Multiplication by `t` in `Z2[t]/(t² + t + 1)` on the encoding
/// `c0 + c1·t ↦ c0 + 2·c1`: `t·(c0 + c1·t) = c1 + (c0 + c1)·t`.
fn times_t(x: usize) -> usize {
    let (c0, c1) = (x & 1, x >> 1);
    c1 | ((c0 ^ c1) << 1)
}

/// The tetrahedron quandle `Z2[t, t⁻¹]/(t² + t + 1)` with
/// `a * b = t·a + (1 + t)·b`; elements `0, 1, t, 1 + t` are encoded `0..4`.
pub fn make_tetrahedron_quandle() -> FiniteQuandle {
    let mut table = Vec::with_capacity(16);
    for a in 0..4 {
        for b in 0..4 {
            // addition in characteristic 2 is xor on the encoding
            table.push(times_t(a) ^ b ^ times_t(b));
        }
    }
    FiniteQuandle::from_trusted(4, table, "S4".to_string())
}

/// Catalog entries of one order, in the order the minimal-order search
/// tries them.
pub fn catalog_indecomposable(order: usize) -> Result<Vec<FiniteQuandle>, QuandleError> {
    if !(3..=7).contains(&order) {
        return Err(QuandleError::OrderOutOfRange(order));
    }
    Ok(catalog_ids(order)
        .into_iter()
        .map(CatalogId::quandle)
        .collect())
}

pub fn catalog_ids(order: usize) -> Vec<CatalogId> {
    CatalogId::ALL
        .into_iter()
        .filter(|id| id.order() == order)
        .collect()
}
