//! Exact linear algebra over finite fields GF(q), q a prime power.
//!
//! Elements are canonical integers in `[0, q)`: the base-p positional
//! encoding of the coefficient vector of the polynomial representative.
//! This gives a stable total order used for deterministic search.

use std::fmt;
use std::sync::Arc;

/// Canonical integer representative of a field element, always `< q`.
pub type FieldElement = u32;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FFieldError {
    #[error("{0} is not a prime power >= 2")]
    NotPrimePower(u32),
    #[error("field order {0} exceeds the supported maximum of 256")]
    OrderTooLarge(u32),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("entry {0} out of range for field of order {1}")]
    EntryOutOfRange(u32, u32),
}

struct FieldTables {
    p: u32,
    e: u32,
    q: u32,
    /// Monic irreducible reduction polynomial, length e+1, low degree first.
    /// For e = 1 this is [0, 1] (the polynomial x), unused by arithmetic.
    reduction: Vec<u32>,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
}

/// A finite field GF(p^e) with q = p^e <= 256, arithmetic fully tabulated.
///
/// Cheap to clone (shared tables).
#[derive(Clone)]
pub struct FieldSpec {
    t: Arc<FieldTables>,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldSpec(q={})", self.t.q)
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.t.q == other.t.q
    }
}
impl Eq for FieldSpec {}

fn factor_prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            let mut n = q;
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            return if n == 1 { Some((p, e)) } else { None };
        }
        p += 1;
    }
    Some((q, 1))
}

/// Polynomials over GF(p), low degree first, trailing zeros trimmed.
fn poly_trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + ai * bj) % p;
        }
    }
    poly_trim(out)
}

/// Remainder of a modulo the monic polynomial m.
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for (i, &mi) in m.iter().enumerate() {
                let idx = i + shift;
                r[idx] = (r[idx] + (p - lead % p) * mi) % p;
            }
        }
        r = poly_trim(r);
        if r.is_empty() {
            break;
        }
    }
    r
}

fn poly_is_irreducible(m: &[u32], p: u32) -> bool {
    let deg = m.len() - 1;
    if deg == 0 {
        return false;
    }
    // Trial division by every monic polynomial of degree 1..=deg/2.
    for d in 1..=deg / 2 {
        let count = p.pow(d as u32);
        for enc in 0..count {
            let mut div = Vec::with_capacity(d + 1);
            let mut v = enc;
            for _ in 0..d {
                div.push(v % p);
                v /= p;
            }
            div.push(1);
            if poly_rem(m, &div, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Lexicographically smallest monic irreducible of degree e over GF(p),
/// by the canonical integer encoding of the non-leading coefficients.
fn find_reduction(p: u32, e: u32) -> Vec<u32> {
    if e == 1 {
        return vec![0, 1];
    }
    let count = p.pow(e);
    for enc in 0..count {
        let mut m = Vec::with_capacity(e as usize + 1);
        let mut v = enc;
        for _ in 0..e {
            m.push(v % p);
            v /= p;
        }
        m.push(1);
        if poly_is_irreducible(&m, p) {
            return m;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists over GF(p)")
}

fn encode(coeffs: &[u32], p: u32) -> u32 {
    coeffs.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn decode(mut v: u32, p: u32, e: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(e as usize);
    for _ in 0..e {
        out.push(v % p);
        v /= p;
    }
    out
}

impl FieldSpec {
    /// Builds GF(q) for a prime power q with 2 <= q <= 256.
    pub fn new(q: u32) -> Result<FieldSpec, FFieldError> {
        let (p, e) = factor_prime_power(q).ok_or(FFieldError::NotPrimePower(q))?;
        if q > 256 {
            return Err(FFieldError::OrderTooLarge(q));
        }
        let reduction = find_reduction(p, e);
        debug_assert!(poly_is_irreducible(&reduction, p) || e == 1);

        let qs = q as usize;
        let mut add = vec![0u32; qs * qs];
        let mut mul = vec![0u32; qs * qs];
        let mut neg = vec![0u32; qs];
        let mut inv = vec![0u32; qs];
        for a in 0..q {
            let ca = decode(a, p, e);
            for b in 0..q {
                let cb = decode(b, p, e);
                let sum: Vec<u32> = ca.iter().zip(&cb).map(|(&x, &y)| (x + y) % p).collect();
                add[(a * q + b) as usize] = encode(&sum, p);
                let mut prod = poly_rem(&poly_mul(&poly_trim(ca.clone()), &poly_trim(cb.clone()), p), &reduction, p);
                prod.resize(e as usize, 0);
                mul[(a * q + b) as usize] = encode(&prod, p);
            }
            let nc: Vec<u32> = ca.iter().map(|&x| (p - x) % p).collect();
            neg[a as usize] = encode(&nc, p);
        }
        for a in 1..q {
            for b in 1..q {
                if mul[(a * q + b) as usize] == 1 {
                    inv[a as usize] = b;
                    break;
                }
            }
        }
        Ok(FieldSpec {
            t: Arc::new(FieldTables { p, e, q, reduction, add, mul, neg, inv }),
        })
    }

    pub fn p(&self) -> u32 {
        self.t.p
    }
    pub fn e(&self) -> u32 {
        self.t.e
    }
    pub fn q(&self) -> u32 {
        self.t.q
    }
    /// Reduction polynomial coefficients, low degree first, length e+1.
    pub fn reduction(&self) -> &[u32] {
        &self.t.reduction
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.t.add[(a * self.t.q + b) as usize]
    }
    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.t.mul[(a * self.t.q + b) as usize]
    }
    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        self.t.neg[a as usize]
    }
    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }
    /// Multiplicative inverse; zero has none.
    #[inline]
    pub fn inv(&self, a: FieldElement) -> Option<FieldElement> {
        if a == 0 {
            None
        } else {
            Some(self.t.inv[a as usize])
        }
    }
    pub fn contains(&self, a: FieldElement) -> bool {
        a < self.t.q
    }
}

/// Dense row-major matrix over GF(q).
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<FieldElement>,
    field: FieldSpec,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over GF({})", self.rows, self.cols, self.field.q())?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", &self.entries[r * self.cols..(r + 1) * self.cols])?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn new(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        entries: Vec<FieldElement>,
    ) -> Result<Matrix, FFieldError> {
        if entries.len() != rows * cols {
            return Err(FFieldError::DimensionMismatch(format!(
                "expected {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        if let Some(&bad) = entries.iter().find(|&&x| !field.contains(x)) {
            return Err(FFieldError::EntryOutOfRange(bad, field.q()));
        }
        Ok(Matrix { rows, cols, entries, field })
    }

    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, entries: vec![0; rows * cols], field }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Matrix {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.entries[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from nested rows.
    pub fn from_rows(field: FieldSpec, rows: &[Vec<FieldElement>]) -> Result<Matrix, FFieldError> {
        let ncols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(FFieldError::DimensionMismatch("ragged rows".into()));
        }
        let entries: Vec<FieldElement> = rows.iter().flatten().copied().collect();
        Matrix::new(field, rows.len(), ncols, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn field(&self) -> &FieldSpec {
        &self.field
    }
    #[inline]
    pub fn get(&self, r: usize, c: usize) -> FieldElement {
        self.entries[r * self.cols + c]
    }
    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: FieldElement) {
        debug_assert!(self.field.contains(v));
        self.entries[r * self.cols + c] = v;
    }
    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }
    pub fn entries(&self) -> &[FieldElement] {
        &self.entries
    }

    /// New matrix keeping the given rows, in the given order.
    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let mut entries = Vec::with_capacity(idx.len() * self.cols);
        for &r in idx {
            entries.extend_from_slice(self.row(r));
        }
        Matrix { rows: idx.len(), cols: self.cols, entries, field: self.field.clone() }
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(self.field.clone(), self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c));
            }
        }
        out
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix, FFieldError> {
        if self.cols != other.cols || self.field != other.field {
            return Err(FFieldError::DimensionMismatch("vstack column mismatch".into()));
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Ok(Matrix { rows: self.rows + other.rows, cols: self.cols, entries, field: self.field.clone() })
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &Matrix) -> Result<Matrix, FFieldError> {
        if self.rows != other.rows || self.field != other.field {
            return Err(FFieldError::DimensionMismatch("hstack row mismatch".into()));
        }
        let mut entries = Vec::with_capacity(self.entries.len() + other.entries.len());
        for r in 0..self.rows {
            entries.extend_from_slice(self.row(r));
            entries.extend_from_slice(other.row(r));
        }
        Ok(Matrix { rows: self.rows, cols: self.cols + other.cols, entries, field: self.field.clone() })
    }

    pub fn multiply(&self, other: &Matrix) -> Result<Matrix, FFieldError> {
        if self.cols != other.rows || self.field != other.field {
            return Err(FFieldError::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Matrix::zero(f.clone(), self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let v = f.add(out.get(r, c), f.mul(a, other.get(k, c)));
                    out.set(r, c, v);
                }
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form. First-nonzero pivoting; idempotent.
    pub fn row_reduce(&self) -> Matrix {
        let mut m = self.clone();
        m.row_reduce_in_place();
        m
    }

    fn row_reduce_in_place(&mut self) -> usize {
        let f = self.field.clone();
        let mut pivot_row = 0;
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            let Some(src) = (pivot_row..self.rows).find(|&r| self.get(r, col) != 0) else {
                continue;
            };
            if src != pivot_row {
                for c in 0..self.cols {
                    let a = self.get(pivot_row, c);
                    let b = self.get(src, c);
                    self.set(pivot_row, c, b);
                    self.set(src, c, a);
                }
            }
            let scale = f.inv(self.get(pivot_row, col)).unwrap();
            for c in 0..self.cols {
                let v = f.mul(self.get(pivot_row, c), scale);
                self.set(pivot_row, c, v);
            }
            for r in 0..self.rows {
                if r == pivot_row {
                    continue;
                }
                let factor = self.get(r, col);
                if factor == 0 {
                    continue;
                }
                for c in 0..self.cols {
                    let v = f.sub(self.get(r, c), f.mul(factor, self.get(pivot_row, c)));
                    self.set(r, c, v);
                }
            }
            pivot_row += 1;
        }
        pivot_row
    }

    /// Dimension of the row space.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.row_reduce_in_place()
    }

    /// True iff `v` lies in the span of the rows.
    pub fn row_space_contains(&self, v: &[FieldElement]) -> Result<bool, FFieldError> {
        if v.len() != self.cols {
            return Err(FFieldError::DimensionMismatch(format!(
                "vector length {} vs {} columns",
                v.len(),
                self.cols
            )));
        }
        let extra = Matrix::new(self.field.clone(), 1, self.cols, v.to_vec())?;
        Ok(self.vstack(&extra)?.rank() == self.rank())
    }

    pub fn invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Any solution x of self * x = b (column convention), or None.
    /// Free variables are set to zero.
    pub fn solve(&self, b: &[FieldElement]) -> Result<Option<Vec<FieldElement>>, FFieldError> {
        if b.len() != self.rows {
            return Err(FFieldError::DimensionMismatch(format!(
                "rhs length {} vs {} rows",
                b.len(),
                self.rows
            )));
        }
        let rhs = Matrix::new(self.field.clone(), self.rows, 1, b.to_vec())?;
        let mut aug = self.hstack(&rhs)?;
        aug.row_reduce_in_place();
        let mut x = vec![0; self.cols];
        for r in 0..aug.rows {
            let Some(lead) = (0..aug.cols).find(|&c| aug.get(r, c) != 0) else {
                continue;
            };
            if lead == self.cols {
                return Ok(None);
            }
            x[lead] = aug.get(r, self.cols);
        }
        Ok(Some(x))
    }

    /// Row vector times matrix: v * self, v of length rows().
    pub fn apply_row(&self, v: &[FieldElement]) -> Result<Vec<FieldElement>, FFieldError> {
        if v.len() != self.rows {
            return Err(FFieldError::DimensionMismatch(format!(
                "vector length {} vs {} rows",
                v.len(),
                self.rows
            )));
        }
        let f = &self.field;
        let mut out = vec![0; self.cols];
        for (r, &vr) in v.iter().enumerate() {
            if vr == 0 {
                continue;
            }
            for c in 0..self.cols {
                out[c] = f.add(out[c], f.mul(vr, self.get(r, c)));
            }
        }
        Ok(out)
    }
}
