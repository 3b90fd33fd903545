//! Smith normal form over `Z` with exact integers.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::alexander::bigint_mod;

/// Dense integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size, size);
        for i in 0..size {
            m.entries[i * size + i] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        IntMatrix {
            rows: rows.len(),
            cols,
            entries: rows.iter().flatten().map(|&x| BigInt::from(x)).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.entries[i * self.cols + j] = value;
    }

    pub(crate) fn add_to(&mut self, i: usize, j: usize, value: i64) {
        self.entries[i * self.cols + j] += value;
    }

    /// Entries reduced into `0..n`.
    pub fn reduced_mod(&self, n: u64) -> Vec<Vec<u64>> {
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| bigint_mod(self.get(i, j), n))
                    .collect()
            })
            .collect()
    }

    /// `M·x`, with `x` given as residues or plain integers.
    pub fn mul_vec(&self, x: &[u64]) -> Vec<BigInt> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * x[j]).sum())
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.entries.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.entries.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// `row[target] -= q · row[source]`
    fn row_axpy(&mut self, target: usize, source: usize, q: &BigInt) {
        for j in 0..self.cols {
            let delta = q * self.get(source, j);
            self.entries[target * self.cols + j] -= delta;
        }
    }

    /// `col[target] -= q · col[source]`
    fn col_axpy(&mut self, target: usize, source: usize, q: &BigInt) {
        for i in 0..self.rows {
            let delta = q * self.get(i, source);
            self.entries[i * self.cols + target] -= delta;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let e = &mut self.entries[i * self.cols + j];
            *e = -core::mem::take(e);
        }
    }
}

/// Elementary divisors together with the column transform `V` such that
/// `U·M·V = diag(divisors)` for some unimodular `U`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    /// `d_1 | d_2 | …`, nonnegative, zeros last; one per column.
    pub divisors: Vec<BigInt>,
    pub col_transform: IntMatrix,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        self.divisors.iter().filter(|d| !d.is_zero()).count()
    }

    /// `gcd(d_i, n)` per column, with `gcd(0, n) = n`.
    pub fn solution_orders(&self, n: u64) -> Vec<u64> {
        self.divisors
            .iter()
            .map(|d| {
                if d.is_zero() {
                    n
                } else {
                    crate::arith::gcd(bigint_mod(d, n), n)
                }
            })
            .collect()
    }

    pub fn chain_holds(&self) -> bool {
        self.divisors.windows(2).all(|w| {
            if w[0].is_zero() {
                w[1].is_zero()
            } else {
                w[1].is_multiple_of(&w[0])
            }
        })
    }
}

/// Diagonalizes by unimodular row and column operations. The pivot at each
/// stage is the nonzero entry of least absolute value in the remaining
/// block, ties going to the lowest row-major index.
pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let mut a = m.clone();
    let mut v = IntMatrix::identity(m.cols);
    let steps = m.rows.min(m.cols);
    let mut divisors = Vec::with_capacity(m.cols);

    for t in 0..steps {
        let Some((pi, pj)) = smallest_pivot(&a, t) else {
            break;
        };
        a.swap_rows(t, pi);
        a.swap_cols(t, pj);
        v.swap_cols(t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..a.rows {
                if !a.get(i, t).is_zero() {
                    let q = a.get(i, t).div_floor(a.get(t, t));
                    a.row_axpy(i, t, &q);
                    dirty |= !a.get(i, t).is_zero();
                }
            }
            for j in t + 1..a.cols {
                if !a.get(t, j).is_zero() {
                    let q = a.get(t, j).div_floor(a.get(t, t));
                    a.col_axpy(j, t, &q);
                    v.col_axpy(j, t, &q);
                    dirty |= !a.get(t, j).is_zero();
                }
            }
            if dirty {
                // a remainder is now smaller than the pivot: re-pivot within
                // row t and column t
                let (pi, pj) = smallest_in_cross(&a, t);
                a.swap_rows(t, pi);
                a.swap_cols(t, pj);
                v.swap_cols(t, pj);
                continue;
            }
            // row and column cleared; enforce divisibility of the block
            let p = a.get(t, t).clone();
            let offender =
                (t + 1..a.rows).find(|&i| (t + 1..a.cols).any(|j| !a.get(i, j).is_multiple_of(&p)));
            match offender {
                Some(i) => a.row_axpy(t, i, &-BigInt::one()),
                None => break,
            }
        }
        if a.get(t, t).is_negative() {
            a.negate_row(t);
        }
        divisors.push(a.get(t, t).clone());
    }
    divisors.resize(m.cols, BigInt::zero());
    SnfResult {
        divisors,
        col_transform: v,
    }
}

fn smallest_pivot(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..a.rows {
        for j in t..a.cols {
            let e = a.get(i, j);
            if e.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| e.abs() < a.get(bi, bj).abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn smallest_in_cross(a: &IntMatrix, t: usize) -> (usize, usize) {
    let mut best = (t, t);
    let cells = (t + 1..a.cols)
        .map(|j| (t, j))
        .chain((t + 1..a.rows).map(|i| (i, t)));
    for (i, j) in cells {
        let e = a.get(i, j);
        if !e.is_zero()
            && (a.get(best.0, best.1).is_zero() || e.abs() < a.get(best.0, best.1).abs())
        {
            best = (i, j);
        }
    }
    best
}
