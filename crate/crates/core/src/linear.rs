//! Counting and listing `(Z_n, ℓ*k)`-colorings.
//!
//! A coloring is a solution of `ℓ·φ(r) + k·φ(l) ≡ (ℓ + k)·φ(o) (mod n)` at
//! every crossing. The solution group of `Mx ≡ 0 (mod n)` is read off the
//! Smith form of the integer relation matrix `M`, which does not depend on
//! `n`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;

use crate::alexander::eval_mod;
use crate::arith::{mod_inverse, odd_prime_divisors};
use crate::diagram::OrientedDiagram;
use crate::poly::LaurentPoly;
use crate::quandle::LinearQuandleParams;
use crate::smith::{smith_normal_form, IntMatrix, SnfResult};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColoringError {
    /// More colorings exist than the caller allowed for.
    LimitExceeded { count: BigUint, limit: usize },
}

impl fmt::Display for ColoringError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColoringError::LimitExceeded { count, limit } => {
                write!(f, "{count} colorings exceed the limit of {limit}")
            }
        }
    }
}

impl core::error::Error for ColoringError {}

/// Row per crossing: `+ℓ` at `r`, `+k` at `l`, `−(ℓ + k)` at `o`.
pub fn relation_matrix_ints(d: &OrientedDiagram, ell: u64, k: u64) -> IntMatrix {
    let c = d.crossing_count();
    let (ell, k) = (ell as i64, k as i64);
    let mut m = IntMatrix::zeros(c, c);
    for (i, x) in d.crossings().iter().enumerate() {
        m.add_to(i, x.right, ell);
        m.add_to(i, x.left, k);
        m.add_to(i, x.over, -(ell + k));
    }
    m
}

pub fn relation_matrix(d: &OrientedDiagram, params: &LinearQuandleParams) -> IntMatrix {
    relation_matrix_ints(d, params.ell(), params.k())
}

/// An assignment of residues to arcs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub assignment: Vec<u64>,
    pub params: LinearQuandleParams,
}

impl Coloring {
    pub fn satisfies(&self, d: &OrientedDiagram) -> bool {
        satisfies(d, &self.params, &self.assignment)
    }

    pub fn is_constant(&self) -> bool {
        self.assignment.windows(2).all(|w| w[0] == w[1])
    }
}

pub(crate) fn satisfies(d: &OrientedDiagram, params: &LinearQuandleParams, phi: &[u64]) -> bool {
    let n = u128::from(params.n());
    let (ell, k) = (u128::from(params.ell()), u128::from(params.k()));
    d.crossings().iter().all(|x| {
        let lhs = ell * u128::from(phi[x.right]) + k * u128::from(phi[x.left]);
        let rhs = (ell + k) * u128::from(phi[x.over]);
        lhs % n == rhs % n
    })
}

/// The Smith form of one `(ℓ, k)` relation matrix, reusable for every `n`.
#[derive(Debug, Clone)]
pub struct ColoringSystem {
    ell: u64,
    k: u64,
    snf: SnfResult,
}

impl ColoringSystem {
    pub fn new(d: &OrientedDiagram, ell: u64, k: u64) -> Self {
        ColoringSystem {
            ell,
            k,
            snf: smith_normal_form(&relation_matrix_ints(d, ell, k)),
        }
    }

    pub fn divisors(&self) -> &[BigInt] {
        &self.snf.divisors
    }

    pub fn snf(&self) -> &SnfResult {
        &self.snf
    }

    /// `Π gcd(d_i, n)`. Only `ℓ` and `k` mod `n` matter, so the system may
    /// be built from any representatives.
    pub fn count(&self, n: u64) -> BigUint {
        self.snf
            .solution_orders(n)
            .into_iter()
            .map(BigUint::from)
            .product()
    }

    pub fn is_colorable(&self, n: u64) -> bool {
        self.count(n) > BigUint::from(n)
    }

    pub fn ell(&self) -> u64 {
        self.ell
    }

    pub fn k(&self) -> u64 {
        self.k
    }
}

pub fn coloring_count(d: &OrientedDiagram, params: &LinearQuandleParams) -> BigUint {
    ColoringSystem::new(d, params.ell(), params.k()).count(params.n())
}

pub fn is_colorable(d: &OrientedDiagram, params: &LinearQuandleParams) -> bool {
    coloring_count(d, params) > BigUint::from(params.n())
}

/// A prime `p | n` with `Δ(residue) ≡ 0 (mod p)`, `residue = −ℓ̄k mod p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlexanderWitness {
    pub p: u64,
    pub residue: u64,
}

/// The smallest odd prime `p | n` with `Δ(−ℓ̄k) ≡ 0 (mod p)`, if any.
pub fn colorable_by_alexander(
    delta: &LaurentPoly,
    params: &LinearQuandleParams,
) -> Option<AlexanderWitness> {
    odd_prime_divisors(params.n()).into_iter().find_map(|p| {
        let ell_inv = mod_inverse(params.ell() % p, p).expect("ℓ is coprime to n");
        let residue = (p - (ell_inv * (params.k() % p)) % p) % p;
        (eval_mod(delta, residue as i64, p) == 0).then_some(AlexanderWitness { p, residue })
    })
}

/// Lists every coloring, or the first `limit` of them when `truncate` is
/// set. Solutions are `x = V·y (mod n)` where `y_i` runs over multiples of
/// `n / gcd(d_i, n)`.
pub fn enumerate_colorings(
    d: &OrientedDiagram,
    params: &LinearQuandleParams,
    limit: usize,
    truncate: bool,
) -> Result<Vec<Coloring>, ColoringError> {
    let system = ColoringSystem::new(d, params.ell(), params.k());
    let n = params.n();
    let count = system.count(n);
    let total = count.to_usize().unwrap_or(usize::MAX);
    if total > limit && !truncate {
        return Err(ColoringError::LimitExceeded { count, limit });
    }
    let orders = system.snf.solution_orders(n);
    let steps: Vec<u64> = orders.iter().map(|&g| n / g).collect();
    let v = system.snf.col_transform.reduced_mod(n);
    let c = orders.len();

    // mixed-radix counter over y, last coordinate fastest
    let mut digits = vec![0u64; c];
    let mut out = Vec::with_capacity(total.min(limit));
    for _ in 0..total.min(limit) {
        let assignment = (0..c)
            .map(|i| {
                let s: u128 = (0..c)
                    .map(|j| u128::from(v[i][j]) * u128::from(digits[j] * steps[j] % n))
                    .sum();
                (s % u128::from(n)) as u64
            })
            .collect();
        out.push(Coloring {
            assignment,
            params: *params,
        });
        for i in (0..c).rev() {
            digits[i] += 1;
            if digits[i] < orders[i] {
                break;
            }
            digits[i] = 0;
        }
    }
    Ok(out)
}

/// Exhaustive count over all `n^c` assignments.
pub fn brute_force_count(d: &OrientedDiagram, params: &LinearQuandleParams) -> u64 {
    let mut count = 0;
    for_each_assignment(d.arc_count(), params.n(), |phi| {
        if satisfies(d, params, phi) {
            count += 1;
        }
    });
    count
}

/// Exhaustive list of colorings in lexicographic order.
pub fn brute_force_colorings(d: &OrientedDiagram, params: &LinearQuandleParams) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    for_each_assignment(d.arc_count(), params.n(), |phi| {
        if satisfies(d, params, phi) {
            out.push(phi.to_vec());
        }
    });
    out
}

fn for_each_assignment(arcs: usize, n: u64, mut f: impl FnMut(&[u64])) {
    let mut phi = vec![0u64; arcs];
    loop {
        f(&phi);
        let mut i = arcs;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            phi[i] += 1;
            if phi[i] < n {
                break;
            }
            phi[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alexander::alexander_polynomial;
    use crate::diagram::samples::*;
    use alloc::collections::BTreeSet;
    use num_traits::Zero;

    fn params(n: u64, ell: u64, k: u64) -> LinearQuandleParams {
        LinearQuandleParams::new(n, ell, k).unwrap()
    }

    #[test]
    fn trefoil_matrix() {
        let m = relation_matrix(&trefoil(), &params(3, 1, 1));
        let rows: Vec<Vec<i64>> = (0..3)
            .map(|i| {
                (0..3)
                    .map(|j| i64::try_from(m.get(i, j)).unwrap())
                    .collect()
            })
            .collect();
        for row in &rows {
            let mut sorted = row.clone();
            sorted.sort();
            assert_eq!(sorted, vec![-2, 1, 1]);
        }
        for (i, x) in trefoil().crossings().iter().enumerate() {
            assert_eq!(rows[i][x.over], -2);
        }
        assert!(m.mul_vec(&[1, 1, 1]).iter().all(Zero::is_zero));
        let unknot = relation_matrix(&unknot_one(), &params(5, 1, 2));
        assert!(unknot.get(0, 0).is_zero());
    }

    #[test]
    fn trefoil_counts() {
        let d = trefoil();
        assert_eq!(coloring_count(&d, &params(3, 1, 1)), BigUint::from(9u32));
        assert_eq!(brute_force_count(&d, &params(3, 1, 1)), 9);
        assert!(is_colorable(&d, &params(3, 1, 1)));
        assert!(!is_colorable(&d, &params(5, 1, 1)));
        assert_eq!(brute_force_count(&d, &params(5, 1, 1)), 5);
        assert!(coloring_count(&d, &params(15, 1, 1)) > BigUint::from(15u32));
    }

    #[test]
    fn unknot_counts_constants() {
        for (n, ell, k) in [(5, 1, 2), (7, 3, 2), (9, 2, 4)] {
            assert_eq!(
                coloring_count(&unknot_one(), &params(n, ell, k)),
                BigUint::from(n)
            );
            assert_eq!(
                coloring_count(&unknot_two(), &params(n, ell, k)),
                BigUint::from(n)
            );
        }
    }

    #[test]
    fn alexander_criterion_examples() {
        let tre = alexander_polynomial(&trefoil()).unwrap();
        assert_eq!(
            colorable_by_alexander(&tre, &params(15, 1, 1)),
            Some(AlexanderWitness { p: 3, residue: 2 })
        );
        assert_eq!(colorable_by_alexander(&tre, &params(5, 1, 1)), None);
        for n in [2, 4, 8, 16, 32] {
            assert_eq!(colorable_by_alexander(&tre, &params(n, 1, 1)), None);
        }
        let torus =
            alexander_polynomial(&OrientedDiagram::from_pd(&TORUS_3_5_PD).unwrap()).unwrap();
        let w = colorable_by_alexander(&torus, &params(31, 3, 1)).unwrap();
        assert_eq!(w.p, 31);
        assert_eq!(eval_mod(&torus, w.residue as i64, 31), 0);
    }

    #[test]
    fn enumeration_matches_brute_force() {
        let d = trefoil();
        let p = params(3, 1, 1);
        let listed = enumerate_colorings(&d, &p, 9, false).unwrap();
        assert_eq!(listed.len(), 9);
        assert!(listed.iter().all(|c| c.satisfies(&d)));
        assert_eq!(listed.iter().filter(|c| c.is_constant()).count(), 3);
        let surjective = listed
            .iter()
            .filter(|c| c.assignment.iter().collect::<BTreeSet<_>>().len() == 3)
            .count();
        assert_eq!(surjective, 6);
        let a: BTreeSet<Vec<u64>> = listed.into_iter().map(|c| c.assignment).collect();
        let b: BTreeSet<Vec<u64>> = brute_force_colorings(&d, &p).into_iter().collect();
        assert_eq!(a, b);
    }

    #[test]
    fn enumeration_edge_cases() {
        let unknot = enumerate_colorings(&unknot_one(), &params(5, 1, 2), 10, false).unwrap();
        assert_eq!(unknot.len(), 5);
        assert!(unknot.iter().all(Coloring::is_constant));
        let two = enumerate_colorings(&trefoil(), &params(2, 1, 1), 10, false).unwrap();
        assert_eq!(two.len(), 2);
        assert!(two.iter().all(Coloring::is_constant));
        assert!(matches!(
            enumerate_colorings(&trefoil(), &params(3, 1, 1), 5, false),
            Err(ColoringError::LimitExceeded { .. })
        ));
        assert_eq!(
            enumerate_colorings(&trefoil(), &params(3, 1, 1), 5, true)
                .unwrap()
                .len(),
            5
        );
    }

    #[test]
    fn composite_modulus_enumeration() {
        let d = OrientedDiagram::from_pd(&FIGURE_EIGHT_PD).unwrap();
        for (n, ell, k) in [(15, 1, 1), (25, 1, 1), (9, 1, 4), (10, 3, 7)] {
            let p = params(n, ell, k);
            let a: BTreeSet<Vec<u64>> = enumerate_colorings(&d, &p, 100_000, false)
                .unwrap()
                .into_iter()
                .map(|c| c.assignment)
                .collect();
            let b: BTreeSet<Vec<u64>> = brute_force_colorings(&d, &p).into_iter().collect();
            assert_eq!(a, b, "n={n} ell={ell} k={k}");
        }
    }
}
