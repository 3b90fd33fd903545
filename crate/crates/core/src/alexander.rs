//! Alexander polynomials from the crossing-relation matrix over `Z[t, t⁻¹]`.
//!
//! Each crossing `(o, r, l)` contributes the row `+1` at `r`, `t − 1` at
//! `o` and `−t` at `l` (coinciding columns add). Substituting `t = −k`
//! recovers the linear coloring relation with `ℓ = 1`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use crate::arith::{mod_inverse, mul_mod, reduce};
use crate::diagram::OrientedDiagram;
use crate::poly::LaurentPoly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlexanderError {
    /// The chosen `(c−1)`-minor vanished; the input is not a knot diagram.
    ZeroMinor,
    /// After removing units the polynomial does not evaluate to ±1 at 1.
    NotKnot {
        value_at_one: BigInt,
    },
    MinorOutOfRange {
        row: usize,
        col: usize,
        size: usize,
    },
}

impl fmt::Display for AlexanderError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlexanderError::ZeroMinor => write!(f, "minor determinant is identically zero"),
            AlexanderError::NotKnot { value_at_one } => {
                write!(f, "not a knot polynomial: value at t = 1 is {value_at_one}")
            }
            AlexanderError::MinorOutOfRange { row, col, size } => {
                write!(
                    f,
                    "minor ({row}, {col}) out of range for a {size}x{size} matrix"
                )
            }
        }
    }
}

impl core::error::Error for AlexanderError {}

/// Square matrix of Laurent polynomials, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    size: usize,
    entries: Vec<LaurentPoly>,
}

impl PolyMatrix {
    pub fn zeros(size: usize) -> Self {
        PolyMatrix {
            size,
            entries: vec![LaurentPoly::zero(); size * size],
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.size + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: LaurentPoly) {
        self.entries[i * self.size + j] = value;
    }

    fn add_to(&mut self, i: usize, j: usize, value: &LaurentPoly) {
        let slot = &mut self.entries[i * self.size + j];
        *slot = &*slot + value;
    }

    /// Deletes one row and one column.
    pub fn minor(&self, row: usize, col: usize) -> PolyMatrix {
        let size = self.size - 1;
        let mut entries = Vec::with_capacity(size * size);
        for i in (0..self.size).filter(|&i| i != row) {
            for j in (0..self.size).filter(|&j| j != col) {
                entries.push(self.get(i, j).clone());
            }
        }
        PolyMatrix { size, entries }
    }

    /// Entries evaluated at `t = x` and reduced into `0..m`.
    pub fn eval_mod(&self, x: i64, m: u64) -> Vec<Vec<u64>> {
        (0..self.size)
            .map(|i| {
                (0..self.size)
                    .map(|j| eval_mod(self.get(i, j), x, m))
                    .collect()
            })
            .collect()
    }
}

pub fn relation_matrix_t(d: &OrientedDiagram) -> PolyMatrix {
    let c = d.crossing_count();
    let mut m = PolyMatrix::zeros(c);
    let one = LaurentPoly::one();
    let t_minus_one = LaurentPoly::from_coeffs(&[-1, 1]);
    let minus_t = LaurentPoly::monomial(-1, 1);
    for (i, x) in d.crossings().iter().enumerate() {
        m.add_to(i, x.right, &one);
        m.add_to(i, x.over, &t_minus_one);
        m.add_to(i, x.left, &minus_t);
    }
    m
}

/// Fraction-free (Bareiss) determinant; every division is exact.
pub fn determinant(m: &PolyMatrix) -> LaurentPoly {
    let n = m.size();
    if n == 0 {
        return LaurentPoly::one();
    }
    let mut a: Vec<Vec<LaurentPoly>> = (0..n)
        .map(|i| (0..n).map(|j| m.get(i, j).clone()).collect())
        .collect();
    let mut negate = false;
    let mut prev = LaurentPoly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return LaurentPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            a[i][k] = LaurentPoly::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Laplace expansion along the first row. Exponential; meant as an
/// independent check on small matrices.
pub fn determinant_cofactor(m: &PolyMatrix) -> LaurentPoly {
    let n = m.size();
    if n == 0 {
        return LaurentPoly::one();
    }
    let mut total = LaurentPoly::zero();
    for j in 0..n {
        let entry = m.get(0, j);
        if entry.is_zero() {
            continue;
        }
        let term = entry * &determinant_cofactor(&m.minor(0, j));
        total = if j % 2 == 0 {
            &total + &term
        } else {
            &total - &term
        };
    }
    total
}

/// Removes the unit `±t^i`: lowest term at degree 0 and value `+1` at `t = 1`.
pub fn normalize_alexander(p: &LaurentPoly) -> Result<LaurentPoly, AlexanderError> {
    if p.is_zero() {
        return Err(AlexanderError::ZeroMinor);
    }
    let shifted = p.shift(-p.low_degree());
    let value = shifted.value_at_one();
    if value.is_one() {
        Ok(shifted)
    } else if (-&value).is_one() {
        Ok(-shifted)
    } else {
        Err(AlexanderError::NotKnot {
            value_at_one: value,
        })
    }
}

/// Normalized polynomial from the minor with `row` and `col` deleted.
pub fn alexander_from_minor(
    d: &OrientedDiagram,
    row: usize,
    col: usize,
) -> Result<LaurentPoly, AlexanderError> {
    let c = d.crossing_count();
    if row >= c || col >= c {
        return Err(AlexanderError::MinorOutOfRange { row, col, size: c });
    }
    let minor = relation_matrix_t(d).minor(row, col);
    normalize_alexander(&determinant(&minor))
}

/// The normalized Alexander polynomial, from the minor with the last row
/// and column deleted.
pub fn alexander_polynomial(d: &OrientedDiagram) -> Result<LaurentPoly, AlexanderError> {
    let last = d.crossing_count() - 1;
    alexander_from_minor(d, last, last)
}

/// `p(x) mod m` by Horner's rule with reduction at every step.
pub fn eval_mod(p: &LaurentPoly, x: i64, m: u64) -> u64 {
    assert!(m >= 1, "modulus must be positive");
    let xm = reduce(i128::from(x), m);
    let mut acc = 0u64;
    for c in p.coeffs().iter().rev() {
        acc = (mul_mod(acc, xm, m) + bigint_mod(c, m)) % m;
    }
    let low = p.low_degree();
    let base = if low >= 0 {
        xm
    } else {
        mod_inverse(xm, m).expect("negative exponents need an invertible evaluation point")
    };
    for _ in 0..low.unsigned_abs() {
        acc = mul_mod(acc, base, m);
    }
    acc
}

pub(crate) fn bigint_mod(c: &BigInt, m: u64) -> u64 {
    c.mod_floor(&BigInt::from(m))
        .to_u64()
        .expect("residue fits the modulus")
}

/// The classical constraints on a knot's normalized Alexander polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlexanderShape {
    pub lowest_term_at_zero: bool,
    pub value_at_one_is_one: bool,
    pub palindromic: bool,
    pub even_degree: bool,
    pub middle_coefficient_odd: bool,
}

impl AlexanderShape {
    pub fn of(p: &LaurentPoly) -> Self {
        let d = p.width();
        let middle = p.coefficient(p.low_degree() + (d / 2) as i64);
        AlexanderShape {
            lowest_term_at_zero: !p.is_zero() && p.low_degree() == 0,
            value_at_one_is_one: p.value_at_one().is_one(),
            palindromic: p.is_palindromic(),
            even_degree: d.is_multiple_of(2),
            middle_coefficient_odd: middle.is_odd(),
        }
    }

    pub fn all(&self) -> bool {
        self.lowest_term_at_zero
            && self.value_at_one_is_one
            && self.palindromic
            && self.even_degree
            && self.middle_coefficient_odd
    }
}

/// Absolute value of `p(x)`.
pub(crate) fn abs_value_at(p: &LaurentPoly, x: i64) -> BigInt {
    p.eval(&BigInt::from(x))
        .expect("normalized polynomials have no negative exponents")
        .abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::samples::*;

    fn poly(cs: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(cs)
    }

    #[test]
    fn kink_collapses() {
        let m = relation_matrix_t(&unknot_one());
        assert!(m.get(0, 0).is_zero());
        assert_eq!(
            alexander_polynomial(&unknot_one()).unwrap(),
            LaurentPoly::one()
        );
    }

    #[test]
    fn trefoil_matrix_rows() {
        // (o, r, l) = (0,2,1), (1,0,2), (2,1,0): row i has t−1 at i, 1 at i+2, −t at i+1
        let m = relation_matrix_t(&trefoil());
        for i in 0..3 {
            assert_eq!(m.get(i, i), &poly(&[-1, 1]));
            assert_eq!(m.get(i, (i + 1) % 3), &LaurentPoly::monomial(-1, 1));
            assert_eq!(m.get(i, (i + 2) % 3), &LaurentPoly::one());
        }
    }

    #[test]
    fn rows_sum_to_zero() {
        for d in [trefoil(), trefoil_with_kink(true), unknot_two()] {
            let m = relation_matrix_t(&d);
            for i in 0..m.size() {
                let sum = (0..m.size()).fold(LaurentPoly::zero(), |acc, j| &acc + m.get(i, j));
                assert!(sum.is_zero());
            }
        }
    }

    #[test]
    fn trefoil_polynomial() {
        let p = alexander_polynomial(&trefoil()).unwrap();
        assert_eq!(p, poly(&[1, -1, 1]));
        assert_eq!(p.to_string(), "t^2 - t + 1");
        assert!(AlexanderShape::of(&p).all());
    }

    #[test]
    fn figure_eight_polynomial() {
        let d = OrientedDiagram::from_pd(&FIGURE_EIGHT_PD).unwrap();
        assert_eq!(alexander_polynomial(&d).unwrap(), poly(&[-1, 3, -1]));
    }

    #[test]
    fn torus_knot_polynomial() {
        // (t^15 − 1)(t − 1) / ((t^3 − 1)(t^5 − 1))
        let d = OrientedDiagram::from_pd(&TORUS_3_5_PD).unwrap();
        assert_eq!(
            alexander_polynomial(&d).unwrap(),
            poly(&[1, -1, 0, 1, -1, 1, 0, -1, 1])
        );
    }

    #[test]
    fn kinks_do_not_change_polynomial() {
        for positive in [true, false] {
            assert_eq!(
                alexander_polynomial(&trefoil_with_kink(positive)).unwrap(),
                poly(&[1, -1, 1])
            );
        }
        assert_eq!(
            alexander_polynomial(&unknot_two()).unwrap(),
            LaurentPoly::one()
        );
    }

    #[test]
    fn bareiss_matches_cofactor() {
        let d = OrientedDiagram::from_pd(&TORUS_3_5_PD).unwrap();
        let m = relation_matrix_t(&d).minor(0, 0).minor(0, 0);
        assert_eq!(determinant(&m), determinant_cofactor(&m));
        let full = relation_matrix_t(&trefoil());
        assert!(determinant(&full).is_zero());
        assert!(determinant_cofactor(&full).is_zero());
    }

    #[test]
    fn pivoting_needed() {
        let mut m = PolyMatrix::zeros(2);
        m.set(0, 1, LaurentPoly::one());
        m.set(1, 0, poly(&[0, 1]));
        assert_eq!(determinant(&m), LaurentPoly::monomial(-1, 1));
    }

    #[test]
    fn normalization() {
        assert_eq!(
            normalize_alexander(&(-poly(&[1, -1, 1])).shift(-3)).unwrap(),
            poly(&[1, -1, 1])
        );
        assert_eq!(
            normalize_alexander(&LaurentPoly::zero()),
            Err(AlexanderError::ZeroMinor)
        );
        assert!(matches!(
            normalize_alexander(&poly(&[1, 1])),
            Err(AlexanderError::NotKnot { .. })
        ));
    }

    #[test]
    fn modular_evaluation() {
        let tre = poly(&[1, -1, 1]);
        assert_eq!(eval_mod(&tre, -1, 3), 0);
        assert_eq!(eval_mod(&tre, -1, 5), 3);
        for m in 2..20 {
            assert_eq!(eval_mod(&tre, 1, m), 1 % m);
        }
        let torus = poly(&[1, -1, 0, 1, -1, 1, 0, -1, 1]);
        assert_eq!(eval_mod(&torus, -21, 31), 0);
        assert_eq!(eval_mod(&LaurentPoly::monomial(1, -1), 2, 5), 3);
    }

    #[test]
    fn minor_out_of_range() {
        assert_eq!(
            alexander_from_minor(&trefoil(), 3, 0),
            Err(AlexanderError::MinorOutOfRange {
                row: 3,
                col: 0,
                size: 3
            })
        );
    }
}
