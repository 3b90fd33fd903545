//! Exact integer Laurent polynomials in one variable `t`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// `Σ coeffs[i]·t^(low + i)`. Stored trimmed: the first and last
/// coefficients are nonzero, and the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            low: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        LaurentPoly::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        LaurentPoly::new(0, vec![BigInt::from(c)])
    }

    /// `c·t^exp`.
    pub fn monomial(c: i64, exp: i64) -> Self {
        LaurentPoly::new(exp, vec![BigInt::from(c)])
    }

    pub fn new(low: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = LaurentPoly { low, coeffs };
        p.trim();
        p
    }

    /// Coefficients from degree 0 upward.
    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        LaurentPoly::new(0, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn low_degree(&self) -> i64 {
        self.low
    }

    pub fn high_degree(&self) -> i64 {
        self.low + self.coeffs.len() as i64 - 1
    }

    /// Span between the highest and lowest exponents.
    pub fn width(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Coefficients from the lowest exponent upward.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coefficient(&self, exp: i64) -> BigInt {
        let i = exp - self.low;
        if i < 0 || i as usize >= self.coeffs.len() {
            BigInt::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    /// Multiplies by `t^shift`.
    pub fn shift(&self, shift: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        LaurentPoly {
            low: self.low + shift,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Sum of the coefficients.
    pub fn value_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Exact value at an integer point; `None` when a negative exponent
    /// meets `x = 0` or the value is not an integer.
    pub fn eval(&self, x: &BigInt) -> Option<BigInt> {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        if self.low >= 0 {
            Some(acc * num_traits::pow(x.clone(), self.low as usize))
        } else {
            let den = num_traits::pow(x.clone(), (-self.low) as usize);
            if den.is_zero() {
                return None;
            }
            let (q, r) = acc.div_rem(&den);
            r.is_zero().then_some(q)
        }
    }

    /// `self / divisor` when the division is exact in `Z[t, t⁻¹]`.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        let b = &divisor.coeffs;
        let db = b.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() < b.len() {
            return None;
        }
        let dq = rem.len() - 1 - db;
        let mut quot = vec![BigInt::zero(); dq + 1];
        for i in (0..=dq).rev() {
            let top = &rem[i + db];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&b[db]);
            if !r.is_zero() {
                return None;
            }
            for (j, bj) in b.iter().enumerate() {
                rem[i + j] -= &q * bj;
            }
            quot[i] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(LaurentPoly::new(self.low - divisor.low, quot))
    }

    /// `a_{d-i} = a_i` for the stored coefficient run.
    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    /// Substitutes `t ↦ t⁻¹`.
    pub fn reflect(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        LaurentPoly {
            low: -self.high_degree(),
            coeffs,
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = self.high_degree().max(rhs.high_degree());
        let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.low - low) as usize + i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[(rhs.low - low) as usize + i] += c;
        }
        LaurentPoly::new(low, coeffs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::new(self.low + rhs.low, coeffs)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

/// Highest degree first, e.g. `-t^2 + 3t - 1`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let exp = self.low + i as i64;
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            if exp == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match exp {
                0 => {}
                1 => f.write_str("t")?,
                e => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;

    #[test]
    fn display() {
        assert_eq!(
            LaurentPoly::from_coeffs(&[1, -1, 1]).to_string(),
            "t^2 - t + 1"
        );
        assert_eq!(
            LaurentPoly::from_coeffs(&[-1, 3, -1]).to_string(),
            "-t^2 + 3t - 1"
        );
        assert_eq!(
            LaurentPoly::from_coeffs(&[2, -3, 2]).to_string(),
            "2t^2 - 3t + 2"
        );
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(LaurentPoly::monomial(-1, -2).to_string(), "-t^-2");
    }

    #[test]
    fn trimming() {
        let p = LaurentPoly::new(-1, vec![0.into(), 0.into(), 5.into(), 0.into()]);
        assert_eq!(p.low_degree(), 1);
        assert_eq!(p.coeffs(), &[BigInt::from(5)]);
        assert!(LaurentPoly::from_coeffs(&[0, 0]).is_zero());
    }

    #[test]
    fn evaluation() {
        let p = LaurentPoly::from_coeffs(&[1, -1, 1]);
        assert_eq!(p.eval(&BigInt::from(-1)), Some(BigInt::from(3)));
        assert_eq!(p.eval(&BigInt::from(-2)), Some(BigInt::from(7)));
        assert_eq!(p.value_at_one(), BigInt::from(1));
        assert_eq!(LaurentPoly::monomial(1, -1).eval(&BigInt::from(2)), None);
        assert_eq!(
            LaurentPoly::monomial(4, -1).eval(&BigInt::from(2)),
            Some(BigInt::from(2))
        );
    }

    #[test]
    fn exact_division() {
        let a = LaurentPoly::from_coeffs(&[1, -1, 1]);
        let b = LaurentPoly::from_coeffs(&[-3, 0, 2, 7]);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&b), Some(a.clone()));
        assert_eq!(prod.shift(3).div_exact(&a.shift(-2)), Some(b.shift(5)));
        assert_eq!(a.div_exact(&LaurentPoly::from_coeffs(&[1, 1])), None);
        assert_eq!(a.div_exact(&LaurentPoly::constant(2)), None);
        assert_eq!(a.div_exact(&LaurentPoly::zero()), None);
    }

    #[test]
    fn reflect_palindrome() {
        let p = LaurentPoly::from_coeffs(&[1, -1, 1]);
        assert!(p.is_palindromic());
        assert_eq!(p.reflect().shift(2), p);
        assert!(!LaurentPoly::from_coeffs(&[1, 2]).is_palindromic());
    }

    fn small_poly() -> impl Strategy<Value = LaurentPoly> {
        (-3i64..3, proptest::collection::vec(-20i64..20, 0..6))
            .prop_map(|(low, cs)| LaurentPoly::new(low, cs.into_iter().map(BigInt::from).collect()))
    }

    proptest! {
        #[test]
        fn ring_laws(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn product_divides(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
        }
    }
}
