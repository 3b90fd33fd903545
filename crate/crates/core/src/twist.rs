//! Twist knots: `c − 2` half-twists closed by a two-crossing clasp.
//!
//! The diagram is built by walking the knot once. The walk leaves the clasp
//! heading north, comes back down through the twist column `T_1, …, T_m`,
//! turns through the clasp a second time and climbs the column again. The
//! directions at each visit fix the crossing signs.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::arith::{gcd, is_prime};
use crate::catalog::CatalogId;
use crate::diagram::{CrossingTriple, OrientedDiagram};
use crate::poly::LaurentPoly;
use crate::search::QuandleOrder;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TwistError {
    CrossingNumberTooSmall(u64),
    InvalidParams {
        n: u64,
        k: u64,
        reason: &'static str,
    },
}

impl fmt::Display for TwistError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TwistError::CrossingNumberTooSmall(c) => {
                write!(f, "twist knots need at least 3 crossings, got {c}")
            }
            TwistError::InvalidParams { n, k, reason } => {
                write!(f, "invalid parameters n={n}, k={k}: {reason}")
            }
        }
    }
}

impl core::error::Error for TwistError {}

/// The twist knot with `c` crossings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwistKnot {
    c: u64,
}

impl TwistKnot {
    pub fn new(c: u64) -> Result<Self, TwistError> {
        if c < 3 {
            return Err(TwistError::CrossingNumberTooSmall(c));
        }
        Ok(TwistKnot { c })
    }

    pub fn crossing_number(self) -> u64 {
        self.c
    }

    /// Number of half-twists.
    pub fn twists(self) -> u64 {
        self.c - 2
    }

    pub fn diagram(self) -> OrientedDiagram {
        let (crossings, _) = self.build();
        OrientedDiagram::new(crossings).expect("twist diagrams are well formed")
    }

    pub fn pd(self) -> Vec<[usize; 4]> {
        self.build().1
    }

    pub fn alexander(self) -> LaurentPoly {
        let c = self.c as i64;
        if c % 2 == 0 {
            let a = (c - 2) / 2;
            LaurentPoly::from_coeffs(&[-a, c - 1, -a])
        } else {
            let a = (c - 1) / 2;
            LaurentPoly::from_coeffs(&[a, -(c - 2), a])
        }
    }

    pub fn s4_colorable(self) -> bool {
        matches!(self.c % 4, 0 | 3)
    }

    pub fn min_quandle_order(self) -> QuandleOrder {
        let c = self.c as usize;
        if c.is_multiple_of(3) {
            return QuandleOrder::Order {
                order: 3,
                witness: CatalogId::Z3_1x1,
            };
        }
        if matches!(c % 12, 4 | 7 | 8 | 11) {
            return QuandleOrder::Order {
                order: 4,
                witness: CatalogId::S4,
            };
        }
        if let Some(witness) = ORDER_FIVE[c % 60] {
            return QuandleOrder::Order { order: 5, witness };
        }
        if let Some(witness) = ORDER_SEVEN[c % 420] {
            return QuandleOrder::Order { order: 7, witness };
        }
        QuandleOrder::AtLeastEight
    }

    /// Visits in walk order, then the triples and the PD code they induce.
    fn build(self) -> (Vec<CrossingTriple>, Vec<[usize; 4]>) {
        let visits = walk(self.twists() as usize);
        let c = self.c as usize;
        let edges = visits.len();

        // arcs: the counter advances at each under-visit, starting just
        // after the first visit (an under-crossing)
        let mut over_arc = vec![0usize; c];
        let mut under_in = vec![0usize; c];
        let mut over_dir = vec![(0i64, 0i64); c];
        let mut under_dir = vec![(0i64, 0i64); c];
        let mut over_visit = vec![0usize; c];
        let mut under_visit = vec![0usize; c];
        let mut arc = 0usize;
        for step in 1..=edges {
            let i = step % edges;
            let v = visits[i];
            if v.over {
                over_arc[v.crossing] = arc;
                over_dir[v.crossing] = v.dir;
                over_visit[v.crossing] = i;
            } else {
                under_in[v.crossing] = arc;
                under_dir[v.crossing] = v.dir;
                under_visit[v.crossing] = i;
                arc = (arc + 1) % c;
            }
        }

        let mut triples = Vec::with_capacity(c);
        let mut pd = Vec::with_capacity(c);
        for x in 0..c {
            let (v, u) = (over_dir[x], under_dir[x]);
            let positive = v.0 * u.1 - v.1 * u.0 > 0;
            let (a_in, a_out) = (under_in[x], (under_in[x] + 1) % c);
            triples.push(if positive {
                CrossingTriple::new(over_arc[x], a_in, a_out)
            } else {
                CrossingTriple::new(over_arc[x], a_out, a_in)
            });
            // edge i + 1 leaves visit i; labels run 1..=2c
            let label = |i: usize| (i + edges - 1) % edges + 1;
            let (in_u, out_u) = (label(under_visit[x]), label(under_visit[x] + 1));
            let (in_v, out_v) = (label(over_visit[x]), label(over_visit[x] + 1));
            pd.push(if positive {
                [in_u, out_v, out_u, in_v]
            } else {
                [in_u, in_v, out_u, out_v]
            });
        }
        (triples, pd)
    }
}

#[derive(Debug, Clone, Copy)]
struct Visit {
    crossing: usize,
    over: bool,
    dir: (i64, i64),
}

/// Crossing ids: twist `T_j` is `j − 1`, clasp crossings are `m` and `m + 1`.
fn walk(m: usize) -> Vec<Visit> {
    let (c1, c2) = (m, m + 1);
    let visit = |crossing, over, dir| Visit {
        crossing,
        over,
        dir,
    };
    let mut out = Vec::with_capacity(2 * (m + 2));
    out.push(visit(c1, false, (0, 1)));
    out.push(visit(c2, true, (0, -1)));
    for j in 1..=m {
        let odd = j % 2 == 1;
        out.push(visit(j - 1, !odd, if odd { (-1, -1) } else { (1, -1) }));
    }
    if m % 2 == 1 {
        out.push(visit(c1, true, (1, 0)));
        out.push(visit(c2, false, (1, 0)));
    } else {
        out.push(visit(c2, false, (-1, 0)));
        out.push(visit(c1, true, (-1, 0)));
    }
    for j in (1..=m).rev() {
        let odd = j % 2 == 1;
        out.push(visit(j - 1, odd, if odd { (-1, 1) } else { (1, 1) }));
    }
    out
}

pub fn twist_diagram(c: u64) -> Result<OrientedDiagram, TwistError> {
    Ok(TwistKnot::new(c)?.diagram())
}

pub fn twist_pd(c: u64) -> Result<Vec<[usize; 4]>, TwistError> {
    Ok(TwistKnot::new(c)?.pd())
}

/// `−((c−2)/2)t² + (c−1)t − (c−2)/2` for even `c`, and
/// `((c−1)/2)t² − (c−2)t + (c−1)/2` for odd `c`.
pub fn twist_alexander(c: u64) -> Result<LaurentPoly, TwistError> {
    Ok(TwistKnot::new(c)?.alexander())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwistLinearVerdict {
    pub colorable: bool,
    /// Only for prime `n` does a failed congruence rule out a coloring.
    pub iff_guaranteed: bool,
}

/// Tests `(k+1)²·p ≡ k² + k + 1 (mod n)` with `p = c/2` for even `c`, and
/// `(k+1)²·p ≡ k (mod n)` with `p = (c−1)/2` for odd `c`. Both say
/// `n | Δ(−k)`, which suffices for a nontrivial `(Z_n, 1*k)`-coloring and
/// is necessary when `n` is prime.
pub fn twist_linear_colorable(c: u64, n: u64, k: u64) -> Result<TwistLinearVerdict, TwistError> {
    TwistKnot::new(c)?;
    let invalid = |reason| TwistError::InvalidParams { n, k, reason };
    if n < 2 {
        return Err(invalid("modulus must be at least 2"));
    }
    if k == 0 || gcd(n, k) != 1 {
        return Err(invalid("k must be a unit mod n"));
    }
    if (k + 1).is_multiple_of(n) {
        return Err(invalid("n divides k + 1"));
    }
    let (n128, k128) = (u128::from(n), u128::from(k % n));
    let square = (k128 + 1) * (k128 + 1) % n128;
    let (p, target) = if c.is_multiple_of(2) {
        (u128::from(c / 2) % n128, (k128 * k128 + k128 + 1) % n128)
    } else {
        (u128::from((c - 1) / 2) % n128, k128)
    };
    Ok(TwistLinearVerdict {
        colorable: square * p % n128 == target,
        iff_guaranteed: is_prime(n),
    })
}

pub fn twist_s4_colorable(c: u64) -> Result<bool, TwistError> {
    Ok(TwistKnot::new(c)?.s4_colorable())
}

pub fn twist_min_quandle_order(c: u64) -> Result<QuandleOrder, TwistError> {
    Ok(TwistKnot::new(c)?.min_quandle_order())
}

/// `c = 10·(6j + r) + s` families: `(r values, s values, witness)`.
const FIVE_FAMILIES: [(&[usize], &[usize]); 2] = [(&[1, 3], &[4, 7]), (&[2, 4], &[6, 9])];

/// `c = 14·(30j + r) + s` families.
const SEVEN_FAMILIES: [(&[usize], &[usize]); 5] = [
    (&[0, 4, 10, 12, 22, 24], &[5]),
    (&[1, 3, 13, 15, 21, 25], &[11]),
    (&[4, 8, 14, 16, 26, 28], &[6]),
    (&[5, 7, 13, 17, 23, 25], &[0, 3]),
    (&[5, 7, 17, 19, 25, 29], &[12]),
];

const fn five_witness(s: usize) -> CatalogId {
    match s {
        4 | 9 => CatalogId::Z5_1x1,
        _ => CatalogId::Z5_1x2,
    }
}

const fn seven_witness(s: usize) -> CatalogId {
    match s {
        5 | 12 => CatalogId::Z7_1x1,
        0 | 3 => CatalogId::Z7_1x2,
        _ => CatalogId::Z7_1x3,
    }
}

/// Residues `c mod 60` with minimal quandle order 5, keyed to the witness.
const ORDER_FIVE: [Option<CatalogId>; 60] = expand_five();
/// Residues `c mod 420` with minimal quandle order 7.
const ORDER_SEVEN: [Option<CatalogId>; 420] = expand_seven();

const fn expand_five() -> [Option<CatalogId>; 60] {
    let mut table = [None; 60];
    let mut f = 0;
    while f < FIVE_FAMILIES.len() {
        let (rs, ss) = FIVE_FAMILIES[f];
        let mut i = 0;
        while i < rs.len() {
            let mut j = 0;
            while j < ss.len() {
                table[10 * rs[i] + ss[j]] = Some(five_witness(ss[j]));
                j += 1;
            }
            i += 1;
        }
        f += 1;
    }
    table
}

const fn expand_seven() -> [Option<CatalogId>; 420] {
    let mut table = [None; 420];
    let mut f = 0;
    while f < SEVEN_FAMILIES.len() {
        let (rs, ss) = SEVEN_FAMILIES[f];
        let mut i = 0;
        while i < rs.len() {
            let mut j = 0;
            while j < ss.len() {
                table[14 * rs[i] + ss[j]] = Some(seven_witness(ss[j]));
                j += 1;
            }
            i += 1;
        }
        f += 1;
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alexander::{abs_value_at, alexander_polynomial};
    use crate::diagram::samples::*;
    use crate::diagram::validate;

    #[test]
    fn small_members() {
        assert_eq!(twist_diagram(3).unwrap().crossing_count(), 3);
        assert_eq!(
            alexander_polynomial(&twist_diagram(3).unwrap()).unwrap(),
            alexander_polynomial(&trefoil()).unwrap()
        );
        assert_eq!(
            twist_alexander(4).unwrap(),
            LaurentPoly::from_coeffs(&[-1, 3, -1])
        );
        assert_eq!(
            twist_alexander(5).unwrap(),
            LaurentPoly::from_coeffs(&[2, -3, 2])
        );
        assert_eq!(twist_diagram(2), Err(TwistError::CrossingNumberTooSmall(2)));
    }

    #[test]
    fn diagrams_match_formula() {
        for c in 3..=40 {
            let d = twist_diagram(c).unwrap();
            validate(d.crossings()).unwrap();
            assert_eq!(
                alexander_polynomial(&d).unwrap(),
                twist_alexander(c).unwrap(),
                "c={c}"
            );
            assert_eq!(twist_alexander(c).unwrap().value_at_one(), 1.into());
        }
    }

    #[test]
    fn pd_round_trips() {
        for c in 3..=20 {
            let from_pd = OrientedDiagram::from_pd(&twist_pd(c).unwrap()).unwrap();
            assert_eq!(
                alexander_polynomial(&from_pd).unwrap(),
                twist_alexander(c).unwrap()
            );
        }
    }

    #[test]
    fn linear_examples() {
        assert!(twist_linear_colorable(4, 5, 1).unwrap().colorable);
        assert!(twist_linear_colorable(6, 5, 2).unwrap().colorable);
        assert!(!twist_linear_colorable(5, 3, 1).unwrap().colorable);
        assert!(!twist_linear_colorable(9, 15, 1).unwrap().iff_guaranteed);
        assert!(twist_linear_colorable(5, 7, 6).is_err());
        assert!(twist_linear_colorable(5, 9, 3).is_err());
    }

    #[test]
    fn congruence_is_divisibility() {
        for c in 3..60u64 {
            let delta = twist_alexander(c).unwrap();
            for n in 2..30u64 {
                for k in 1..n {
                    if let Ok(v) = twist_linear_colorable(c, n, k) {
                        let divides = (abs_value_at(&delta, -(k as i64)) % n) == 0.into();
                        assert_eq!(v.colorable, divides, "c={c} n={n} k={k}");
                    }
                }
            }
        }
    }

    #[test]
    fn s4_residues() {
        assert!(twist_s4_colorable(3).unwrap());
        assert!(twist_s4_colorable(4).unwrap());
        assert!(!twist_s4_colorable(5).unwrap());
    }

    #[test]
    fn classifier_spot_values() {
        let order = |c| twist_min_quandle_order(c).unwrap();
        assert_eq!(
            order(3),
            QuandleOrder::Order {
                order: 3,
                witness: CatalogId::Z3_1x1
            }
        );
        assert_eq!(
            order(4),
            QuandleOrder::Order {
                order: 4,
                witness: CatalogId::S4
            }
        );
        assert_eq!(
            order(5),
            QuandleOrder::Order {
                order: 7,
                witness: CatalogId::Z7_1x1
            }
        );
        assert_eq!(
            order(6),
            QuandleOrder::Order {
                order: 3,
                witness: CatalogId::Z3_1x1
            }
        );
        assert_eq!(
            order(14),
            QuandleOrder::Order {
                order: 5,
                witness: CatalogId::Z5_1x1
            }
        );
        assert_eq!(order(13), QuandleOrder::AtLeastEight);
        assert_eq!(order(10), QuandleOrder::AtLeastEight);
    }

    /// Direct reading of the family conditions: search all quotients.
    fn literal_five(c: usize) -> Option<CatalogId> {
        for (rs, ss) in FIVE_FAMILIES {
            for &r in rs {
                for &s in ss {
                    let mut j = 0;
                    while 10 * (6 * j + r) + s <= c {
                        if 10 * (6 * j + r) + s == c {
                            return Some(five_witness(s));
                        }
                        j += 1;
                    }
                }
            }
        }
        None
    }

    fn literal_seven(c: usize) -> Option<CatalogId> {
        for (rs, ss) in SEVEN_FAMILIES {
            for &r in rs {
                for &s in ss {
                    let mut j = 0;
                    while 14 * (30 * j + r) + s <= c {
                        if 14 * (30 * j + r) + s == c {
                            return Some(seven_witness(s));
                        }
                        j += 1;
                    }
                }
            }
        }
        None
    }

    #[test]
    fn residue_tables_match_literal_search() {
        for c in 3..=2000 {
            assert_eq!(ORDER_FIVE[c % 60], literal_five(c), "c={c}");
            assert_eq!(ORDER_SEVEN[c % 420], literal_seven(c), "c={c}");
        }
    }

    #[test]
    fn exactly_one_case_fires() {
        for c in 3..=2000usize {
            let cases = [
                c % 3 == 0,
                matches!(c % 12, 4 | 7 | 8 | 11),
                ORDER_FIVE[c % 60].is_some(),
                ORDER_SEVEN[c % 420].is_some(),
            ];
            let fired = cases.iter().filter(|&&b| b).count();
            assert!(fired <= 1, "c={c} fires {cases:?}");
        }
    }
}
