//! Finite quandles stored as operation tables.
//!
//! Elements are always `0..order`. The table entry at `(a, b)` is `a * b`,
//! so each column `a ↦ a * b` is the right translation by `b`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::arith::{gcd, mod_inverse, mul_mod};

/// Upper bound on the order accepted by [`brute_force_isomorphic`].
pub const ISOMORPHISM_ORDER_CAP: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuandleError {
    /// A linear quandle was requested with a modulus or coefficient that
    /// does not define one.
    InvalidParams {
        n: u64,
        ell: u64,
        k: u64,
        reason: &'static str,
    },
    ModulusMismatch {
        left: u64,
        right: u64,
    },
    Malformed(TableError),
    Axiom(AxiomReport),
    OrderOutOfRange(usize),
    TooLarge {
        order: usize,
        cap: usize,
    },
    UnknownName(String),
}

impl fmt::Display for QuandleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuandleError::InvalidParams { n, ell, k, reason } => {
                write!(
                    f,
                    "invalid linear quandle parameters (n={n}, ell={ell}, k={k}): {reason}"
                )
            }
            QuandleError::ModulusMismatch { left, right } => {
                write!(f, "modulus mismatch: {left} vs {right}")
            }
            QuandleError::Malformed(e) => write!(f, "malformed table: {e}"),
            QuandleError::Axiom(report) => write!(f, "quandle axioms violated: {report}"),
            QuandleError::OrderOutOfRange(q) => {
                write!(f, "no catalog for order {q} (expected 3..=7)")
            }
            QuandleError::TooLarge { order, cap } => {
                write!(
                    f,
                    "order {order} exceeds the exhaustive search cap of {cap}"
                )
            }
            QuandleError::UnknownName(name) => write!(f, "unknown quandle name `{name}`"),
        }
    }
}

impl core::error::Error for QuandleError {}

/// Structural problems with a raw table, reported before any axiom check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TableError {
    Empty,
    NotSquare {
        row: usize,
        len: usize,
        order: usize,
    },
    EntryOutOfRange {
        a: usize,
        b: usize,
        value: usize,
    },
}

impl fmt::Display for TableError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableError::Empty => write!(f, "table has no rows"),
            TableError::NotSquare { row, len, order } => {
                write!(f, "row {row} has {len} entries, expected {order}")
            }
            TableError::EntryOutOfRange { a, b, value } => {
                write!(f, "entry ({a}, {b}) = {value} is out of range")
            }
        }
    }
}

/// Outcome of checking the three quandle axioms. Each field holds the
/// lexicographically first counterexample, if any.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AxiomReport {
    /// `a` with `a * a != a`.
    pub idempotency: Option<usize>,
    /// `(a, a2, b)` with `a < a2` and `a * b == a2 * b`.
    pub right_invertibility: Option<(usize, usize, usize)>,
    /// `(a, b, c)` with `(a * b) * c != (a * c) * (b * c)`.
    pub self_distributivity: Option<(usize, usize, usize)>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.idempotency.is_none()
            && self.right_invertibility.is_none()
            && self.self_distributivity.is_none()
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "all axioms hold");
        }
        let mut sep = "";
        if let Some(a) = self.idempotency {
            write!(f, "{sep}idempotency fails at a={a}")?;
            sep = "; ";
        }
        if let Some((a, a2, b)) = self.right_invertibility {
            write!(
                f,
                "{sep}right translation by {b} is not injective ({a}*{b} = {a2}*{b})"
            )?;
            sep = "; ";
        }
        if let Some((a, b, c)) = self.self_distributivity {
            write!(f, "{sep}self-distributivity fails at ({a}, {b}, {c})")?;
        }
        Ok(())
    }
}

fn check_shape(rows: &[Vec<usize>]) -> Result<usize, TableError> {
    let order = rows.len();
    if order == 0 {
        return Err(TableError::Empty);
    }
    for (a, row) in rows.iter().enumerate() {
        if row.len() != order {
            return Err(TableError::NotSquare {
                row: a,
                len: row.len(),
                order,
            });
        }
        if let Some((b, &value)) = row.iter().enumerate().find(|(_, &v)| v >= order) {
            return Err(TableError::EntryOutOfRange { a, b, value });
        }
    }
    Ok(order)
}

fn axiom_report(order: usize, op: impl Fn(usize, usize) -> usize) -> AxiomReport {
    let idempotency = (0..order).find(|&a| op(a, a) != a);

    let mut right_invertibility = None;
    'outer: for a in 0..order {
        for a2 in a + 1..order {
            for b in 0..order {
                if op(a, b) == op(a2, b) {
                    right_invertibility = Some((a, a2, b));
                    break 'outer;
                }
            }
        }
    }

    let mut self_distributivity = None;
    'dist: for a in 0..order {
        for b in 0..order {
            for c in 0..order {
                if op(op(a, b), c) != op(op(a, c), op(b, c)) {
                    self_distributivity = Some((a, b, c));
                    break 'dist;
                }
            }
        }
    }

    AxiomReport {
        idempotency,
        right_invertibility,
        self_distributivity,
    }
}

/// Checks a raw operation table (rows indexed by the left operand).
pub fn verify_quandle_axioms(rows: &[Vec<usize>]) -> Result<AxiomReport, TableError> {
    let order = check_shape(rows)?;
    Ok(axiom_report(order, |a, b| rows[a][b]))
}

/// A finite quandle. Construction guarantees the table is well formed and
/// satisfies all three axioms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteQuandle {
    order: usize,
    table: Vec<usize>,
    name: Option<String>,
}

impl FiniteQuandle {
    pub fn from_rows(rows: Vec<Vec<usize>>, name: Option<String>) -> Result<Self, QuandleError> {
        let report = verify_quandle_axioms(&rows).map_err(QuandleError::Malformed)?;
        if !report.passed() {
            return Err(QuandleError::Axiom(report));
        }
        let order = rows.len();
        let table = rows.into_iter().flatten().collect();
        Ok(FiniteQuandle { order, table, name })
    }

    /// Builds from a flat row-major table whose validity is known by
    /// construction.
    pub(crate) fn from_trusted(order: usize, table: Vec<usize>, name: String) -> Self {
        debug_assert_eq!(table.len(), order * order);
        FiniteQuandle {
            order,
            table,
            name: Some(name),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    /// `a * b`.
    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    /// The unique `x` with `x * b == c`.
    pub fn left_divide(&self, c: usize, b: usize) -> usize {
        (0..self.order)
            .find(|&x| self.op(x, b) == c)
            .expect("right translations of a quandle are bijections")
    }

    /// Table `inv[c * order + b]` = the unique `x` with `x * b == c`.
    pub fn division_table(&self) -> Vec<usize> {
        let q = self.order;
        let mut inv = vec![0; q * q];
        for x in 0..q {
            for b in 0..q {
                inv[self.op(x, b) * q + b] = x;
            }
        }
        inv
    }

    pub fn verify_axioms(&self) -> AxiomReport {
        axiom_report(self.order, |a, b| self.op(a, b))
    }

    /// Orbits under the right translations `b ↦ b * x`, each sorted, listed
    /// by smallest element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let q = self.order;
        let mut parent: Vec<usize> = (0..q).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for b in 0..q {
            for x in 0..q {
                let (ra, rb) = (find(&mut parent, b), find(&mut parent, self.op(b, x)));
                if ra != rb {
                    parent[ra.max(rb)] = ra.min(rb);
                }
            }
        }
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        let mut slot = vec![usize::MAX; q];
        for a in 0..q {
            let root = find(&mut parent, a);
            if slot[root] == usize::MAX {
                slot[root] = orbits.len();
                orbits.push(Vec::new());
            }
            orbits[slot[root]].push(a);
        }
        orbits
    }

    pub fn is_trivial(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.op(a, b) == a))
    }
}

/// Parameters `(n, ℓ, k)` of the linear quandle `(Z_n, ℓ*k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LinearQuandleParams {
    n: u64,
    ell: u64,
    k: u64,
    ell_inv: u64,
    k_inv: u64,
}

impl LinearQuandleParams {
    pub fn new(n: u64, ell: u64, k: u64) -> Result<Self, QuandleError> {
        let invalid = |reason| QuandleError::InvalidParams { n, ell, k, reason };
        if n < 2 {
            return Err(invalid("modulus must be at least 2"));
        }
        if ell == 0 || k == 0 {
            return Err(invalid("ell and k must be positive"));
        }
        let k_inv = mod_inverse(k, n).ok_or(invalid("gcd(n, k) != 1"))?;
        let ell_inv = mod_inverse(ell, n).ok_or(invalid("gcd(n, ell) != 1"))?;
        Ok(LinearQuandleParams {
            n,
            ell,
            k,
            ell_inv,
            k_inv,
        })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn ell(&self) -> u64 {
        self.ell
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn ell_inv(&self) -> u64 {
        self.ell_inv
    }

    pub fn k_inv(&self) -> u64 {
        self.k_inv
    }

    /// `ℓ̄k mod n`, the coefficient of the equivalent `(Z_n, 1*·)` quandle.
    pub fn reduced_k(&self) -> u64 {
        mul_mod(self.ell_inv, self.k % self.n, self.n)
    }

    /// The representative `(n, 1, ℓ̄k)` of this parameter class.
    pub fn canonical(&self) -> Self {
        LinearQuandleParams::new(self.n, 1, self.reduced_k()).expect("a product of units is a unit")
    }

    /// `a ℓ*k b = ((ℓ+k)b − ℓa)·k̄ mod n`.
    pub fn operate(&self, a: u64, b: u64) -> u64 {
        let n = self.n;
        let sum = (self.ell % n + self.k % n) % n;
        let lhs = mul_mod(sum, b % n, n);
        let rhs = mul_mod(self.ell % n, a % n, n);
        mul_mod((lhs + n - rhs) % n, self.k_inv, n)
    }

    pub fn label(&self) -> String {
        format!("Z{}_{}x{}", self.n, self.ell, self.k)
    }
}

/// Table of `(Z_n, ℓ*k)`.
pub fn make_linear_quandle(params: &LinearQuandleParams) -> FiniteQuandle {
    let n = params.n() as usize;
    let mut table = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            table.push(params.operate(a as u64, b as u64) as usize);
        }
    }
    FiniteQuandle::from_trusted(n, table, params.label())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitDecomposition {
    /// `d = gcd(n, ℓ + k)`.
    pub orbit_count: u64,
    /// `C_i = {i, d + i, 2d + i, …}` for `i in 0..d`.
    pub orbits: Vec<Vec<u64>>,
}

impl OrbitDecomposition {
    pub fn is_trivial_quandle(&self) -> bool {
        self.orbits.iter().all(|o| o.len() == 1)
    }

    pub fn is_indecomposable(&self) -> bool {
        self.orbit_count == 1
    }
}

pub fn orbit_decomposition(params: &LinearQuandleParams) -> OrbitDecomposition {
    let n = params.n();
    let d = gcd(n, params.ell() + params.k());
    let orbits = (0..d)
        .map(|i| (0..n / d).map(|m| m * d + i).collect())
        .collect();
    OrbitDecomposition {
        orbit_count: d,
        orbits,
    }
}

/// Sufficient condition for `(Z_n, ℓ₁*k₁) ≅ (Z_n, ℓ₂*k₂)`: `ℓ₁k̄₁ ≡ ℓ₂k̄₂`.
/// A `false` result says nothing about non-isomorphism.
pub fn linear_isomorphic_sufficient(
    p1: &LinearQuandleParams,
    p2: &LinearQuandleParams,
) -> Result<bool, QuandleError> {
    if p1.n() != p2.n() {
        return Err(QuandleError::ModulusMismatch {
            left: p1.n(),
            right: p2.n(),
        });
    }
    let n = p1.n();
    let lhs = mul_mod(p1.ell() % n, p1.k_inv(), n);
    let rhs = mul_mod(p2.ell() % n, p2.k_inv(), n);
    Ok(lhs == rhs)
}

pub fn is_homomorphism(f: &[usize], q1: &FiniteQuandle, q2: &FiniteQuandle) -> bool {
    if f.len() != q1.order() || f.iter().any(|&x| x >= q2.order()) {
        return false;
    }
    (0..q1.order()).all(|a| (0..q1.order()).all(|b| f[q1.op(a, b)] == q2.op(f[a], f[b])))
}

/// Elements whose images determine any homomorphism out of `q`: greedily
/// adds the least element outside the subquandle generated so far.
pub fn generating_set(q: &FiniteQuandle) -> Vec<usize> {
    let n = q.order();
    let mut generated = vec![false; n];
    let mut members: Vec<usize> = Vec::new();
    let mut gens = Vec::new();
    while let Some(g) = (0..n).find(|&a| !generated[a]) {
        gens.push(g);
        generated[g] = true;
        members.push(g);
        // close under the operation
        let mut changed = true;
        while changed {
            changed = false;
            for i in 0..members.len() {
                for j in 0..members.len() {
                    let c = q.op(members[i], members[j]);
                    if !generated[c] {
                        generated[c] = true;
                        members.push(c);
                        changed = true;
                    }
                }
            }
        }
    }
    gens
}

/// Exhaustive isomorphism test. The map is fixed on a generating set of
/// `q1` and extended by `f(a * b) = f(a) *' f(b)`; branches die as soon as
/// the extension is inconsistent or non-injective.
pub fn brute_force_isomorphic(
    q1: &FiniteQuandle,
    q2: &FiniteQuandle,
) -> Result<bool, QuandleError> {
    let n = q1.order();
    if n != q2.order() {
        return Ok(false);
    }
    if n > ISOMORPHISM_ORDER_CAP {
        return Err(QuandleError::TooLarge {
            order: n,
            cap: ISOMORPHISM_ORDER_CAP,
        });
    }
    let gens = generating_set(q1);
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(extend_isomorphism(q1, q2, &gens, 0, &mut map, &mut used))
}

fn extend_isomorphism(
    q1: &FiniteQuandle,
    q2: &FiniteQuandle,
    gens: &[usize],
    depth: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if depth == gens.len() {
        return map.iter().all(|&x| x != usize::MAX) && is_homomorphism(map, q1, q2);
    }
    let g = gens[depth];
    if map[g] != usize::MAX {
        return extend_isomorphism(q1, q2, gens, depth + 1, map, used);
    }
    for image in 0..q2.order() {
        if used[image] {
            continue;
        }
        let saved_map = map.clone();
        let saved_used = used.clone();
        map[g] = image;
        used[image] = true;
        if close_map(q1, q2, map, used) && extend_isomorphism(q1, q2, gens, depth + 1, map, used) {
            return true;
        }
        *map = saved_map;
        *used = saved_used;
    }
    false
}

fn close_map(q1: &FiniteQuandle, q2: &FiniteQuandle, map: &mut [usize], used: &mut [bool]) -> bool {
    let n = q1.order();
    let mut changed = true;
    while changed {
        changed = false;
        for a in 0..n {
            if map[a] == usize::MAX {
                continue;
            }
            for b in 0..n {
                if map[b] == usize::MAX {
                    continue;
                }
                let c = q1.op(a, b);
                let image = q2.op(map[a], map[b]);
                if map[c] == usize::MAX {
                    if used[image] {
                        return false;
                    }
                    map[c] = image;
                    used[image] = true;
                    changed = true;
                } else if map[c] != image {
                    return false;
                }
            }
        }
    }
    true
}
