//! Linear colorability from the Alexander polynomial alone.

use alloc::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::SearchError;
use crate::alexander::{abs_value_at, eval_mod};
use crate::arith::odd_prime_divisors;
use crate::poly::LaurentPoly;

/// An odd prime `p` and `k ∈ 1..p` with `Δ(−k) ≡ 0 (mod p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LinearWitness {
    pub p: u64,
    pub k: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LinearVerdict {
    pub colorable: bool,
    pub witness: Option<LinearWitness>,
}

impl From<Option<LinearWitness>> for LinearVerdict {
    fn from(witness: Option<LinearWitness>) -> Self {
        LinearVerdict {
            colorable: witness.is_some(),
            witness,
        }
    }
}

/// Smallest `k ∈ 1..p` with `p | Δ(−k)`.
pub fn prime_witness(delta: &LaurentPoly, p: u64) -> Option<u64> {
    (1..p).find(|&k| eval_mod(delta, -(k as i64), p) == 0)
}

/// Decides whether some `(Z_n, ℓ*k)` colors the knot nontrivially: primes
/// ascending, then `k` ascending; the first hit is the witness.
pub fn is_linear_n_colorable(delta: &LaurentPoly, n: u64) -> LinearVerdict {
    odd_prime_divisors(n)
        .into_iter()
        .find_map(|p| prime_witness(delta, p).map(|k| LinearWitness { p, k }))
        .into()
}

/// A modulus `n = |Δ(−k)|` at which the knot is guaranteed to be linearly
/// colorable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundConstruction {
    pub k: u64,
    pub n_bound: BigInt,
}

impl BoundConstruction {
    /// `n` odd, `gcd(n, k) = 1` and `n > k + 1`.
    pub fn invariants_hold(&self) -> bool {
        let n = &self.n_bound;
        let k = BigInt::from(self.k);
        n.bit(0) && n.gcd(&k).is_one() && *n > &k + 1
    }
}

/// The least `k ≥ 1` with `gcd(k, a_0) = 1` and `(k − 1)·|a_d| ≥ |a_i|`
/// for every interior coefficient, together with `|Δ(−k)|`.
pub fn colorability_bound(delta: &LaurentPoly) -> Result<BoundConstruction, SearchError> {
    if delta.width() <= 1 {
        return Err(SearchError::ConstantPolynomial);
    }
    let coeffs = delta.coeffs();
    let d = coeffs.len() - 1;
    let a0 = coeffs[0].abs();
    let ad = coeffs[d].abs();
    let widest = coeffs[1..d]
        .iter()
        .map(Signed::abs)
        .max()
        .unwrap_or_else(BigInt::zero);
    // smallest k with (k − 1)·|a_d| ≥ max |a_i|
    let floor = (&widest + &ad - 1u32) / &ad + 1u32;
    let mut k = floor.to_u64().ok_or(SearchError::BoundTooLarge)?.max(1);
    while !a0.gcd(&BigInt::from(k)).is_one() {
        k += 1;
    }
    let bound = BoundConstruction {
        k,
        n_bound: abs_value_at(delta, -(k as i64)),
    };
    if !bound.invariants_hold() {
        return Err(SearchError::BoundInvariant(bound));
    }
    Ok(bound)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LinearOrder {
    pub n: u64,
    pub witness: LinearWitness,
}

/// The least `n ≥ 3` admitting a nontrivial linear coloring, found by
/// trying `n = 3, 4, 5, …`; the search never passes the bound above.
pub fn minimal_linear_order(delta: &LaurentPoly) -> Result<LinearOrder, SearchError> {
    let bound = colorability_bound(delta)?;
    let limit = bound.n_bound.to_u64().unwrap_or(u64::MAX);
    let mut per_prime: BTreeMap<u64, Option<u64>> = BTreeMap::new();
    for n in 3..=limit {
        for p in odd_prime_divisors(n) {
            let hit = *per_prime
                .entry(p)
                .or_insert_with(|| prime_witness(delta, p));
            if let Some(k) = hit {
                return Ok(LinearOrder {
                    n,
                    witness: LinearWitness { p, k },
                });
            }
        }
    }
    Err(SearchError::BoundInvariant(bound))
}
