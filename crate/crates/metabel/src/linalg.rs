//! Exact linear algebra over prime fields.
//!
//! Provides dense vectors and matrices, reduced row echelon form, kernels and
//! images, canonically represented subspaces, quotient transversals with
//! lexicographically minimal coset representatives, linear solving, and
//! deterministic enumeration of matrix spaces and GL(n, p).
//!
//! Canonical forms are what make classification cheap downstream: two
//! subspaces are equal iff their representations are equal, and every coset
//! has a unique lexicographically minimal representative computed by a single
//! linear reduction.

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::field::PrimeField;
use std::cmp::Ordering;

/// Dense vector with coordinates in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vector {
    field: PrimeField,
    coords: Vec<u32>,
}

impl Vector {
    pub fn new(field: PrimeField, coords: Vec<u32>) -> Result<Self> {
        if let Some(&bad) = coords.iter().find(|&&c| !field.contains(c)) {
            return Err(Error::InvariantViolation(format!(
                "vector coordinate {bad} is outside F_{}",
                field.modulus()
            )));
        }
        Ok(Vector { field, coords })
    }

    pub fn zero(field: PrimeField, dim: usize) -> Self {
        Vector { field, coords: vec![0; dim] }
    }

    /// Standard basis vector e_i (0-indexed).
    pub fn basis(field: PrimeField, dim: usize, i: usize) -> Self {
        let mut coords = vec![0; dim];
        coords[i] = 1;
        Vector { field, coords }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn get(&self, i: usize) -> u32 {
        self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Vector) -> Result<Vector> {
        self.check_compat(other)?;
        let coords =
            self.coords.iter().zip(&other.coords).map(|(&a, &b)| self.field.add(a, b)).collect();
        Ok(Vector { field: self.field, coords })
    }

    pub fn sub(&self, other: &Vector) -> Result<Vector> {
        self.check_compat(other)?;
        let coords =
            self.coords.iter().zip(&other.coords).map(|(&a, &b)| self.field.sub(a, b)).collect();
        Ok(Vector { field: self.field, coords })
    }

    pub fn scale(&self, c: u32) -> Vector {
        let coords = self.coords.iter().map(|&a| self.field.mul(a, c)).collect();
        Vector { field: self.field, coords }
    }

    /// Lexicographic comparison of coordinate strings (integer order per entry).
    pub fn cmp_lex(&self, other: &Vector) -> Ordering {
        self.coords.cmp(&other.coords)
    }

    /// Base-p integer encoding, first coordinate most significant.
    ///
    /// Panics if the encoding overflows `u128`; all supported enumeration
    /// sizes fit comfortably.
    pub fn encoding(&self) -> u128 {
        encode(self.field, &self.coords)
    }

    pub fn from_encoding(field: PrimeField, dim: usize, code: u128) -> Result<Self> {
        Ok(Vector { field, coords: decode(field, dim, code)? })
    }

    fn check_compat(&self, other: &Vector) -> Result<()> {
        if self.field != other.field || self.dim() != other.dim() {
            return Err(Error::DimensionMismatch(format!(
                "vector {} over F_{} vs vector {} over F_{}",
                self.dim(),
                self.field.modulus(),
                other.dim(),
                other.field.modulus()
            )));
        }
        Ok(())
    }
}

fn encode(field: PrimeField, entries: &[u32]) -> u128 {
    let p = field.modulus() as u128;
    let mut acc: u128 = 0;
    for &e in entries {
        acc = acc.checked_mul(p).and_then(|a| a.checked_add(e as u128)).expect("encoding overflow");
    }
    acc
}

fn decode(field: PrimeField, len: usize, mut code: u128) -> Result<Vec<u32>> {
    let p = field.modulus() as u128;
    let mut out = vec![0u32; len];
    for slot in out.iter_mut().rev() {
        *slot = (code % p) as u32;
        code /= p;
    }
    if code != 0 {
        return Err(Error::InvalidParams(format!("encoding does not fit in {len} base-p digits")));
    }
    Ok(out)
}

/// Dense row-major matrix over a prime field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    entries: Vec<u32>,
}

impl Matrix {
    pub fn new(field: PrimeField, rows: usize, cols: usize, entries: Vec<u32>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                entries.len()
            )));
        }
        if let Some(&bad) = entries.iter().find(|&&c| !field.contains(c)) {
            return Err(Error::InvariantViolation(format!(
                "matrix entry {bad} is outside F_{}",
                field.modulus()
            )));
        }
        Ok(Matrix { field, rows, cols, entries })
    }

    pub fn from_rows(field: PrimeField, rows: &[Vec<u32>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged matrix rows".into()));
        }
        Matrix::new(field, r, c, rows.concat())
    }

    /// Build from signed integer literals (entries reduced mod p); handy for
    /// catalog templates containing -1.
    pub fn from_signed_rows(field: PrimeField, rows: &[Vec<i64>]) -> Result<Self> {
        let mapped: Vec<Vec<u32>> =
            rows.iter().map(|r| r.iter().map(|&v| field.from_signed(v)).collect()).collect();
        Matrix::from_rows(field, &mapped)
    }

    pub fn zero(field: PrimeField, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, entries: vec![0; rows * cols] }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.entries[i * n + i] = 1;
        }
        m
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        debug_assert!(self.field.contains(v));
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn row_vector(&self, i: usize) -> Vector {
        Vector {
            field: self.field,
            coords: self.entries[i * self.cols..(i + 1) * self.cols].to_vec(),
        }
    }

    pub fn col_vector(&self, j: usize) -> Vector {
        let coords = (0..self.rows).map(|i| self.get(i, j)).collect();
        Vector { field: self.field, coords }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.entries[j * self.rows + i] = self.get(i, j);
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other)?;
        let entries =
            self.entries.iter().zip(&other.entries).map(|(&a, &b)| self.field.add(a, b)).collect();
        Ok(Matrix { entries, ..*self })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other)?;
        let entries =
            self.entries.iter().zip(&other.entries).map(|(&a, &b)| self.field.sub(a, b)).collect();
        Ok(Matrix { entries, ..*self })
    }

    pub fn scale(&self, c: u32) -> Matrix {
        let entries = self.entries.iter().map(|&a| self.field.mul(a, c)).collect();
        Matrix { entries, ..*self }
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field || self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let p = self.field.modulus() as u64;
        let mut out = Matrix::zero(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc: u64 = 0;
                for k in 0..self.cols {
                    acc += self.get(i, k) as u64 * other.get(k, j) as u64;
                }
                out.entries[i * other.cols + j] = (acc % p) as u32;
            }
        }
        Ok(out)
    }

    /// Matrix-vector product `m v`.
    pub fn apply(&self, v: &Vector) -> Result<Vector> {
        if self.field != v.field || self.cols != v.dim() {
            return Err(Error::DimensionMismatch(format!(
                "cannot apply {}x{} matrix to vector of dim {}",
                self.rows,
                self.cols,
                v.dim()
            )));
        }
        let p = self.field.modulus() as u64;
        let coords = (0..self.rows)
            .map(|i| {
                let mut acc: u64 = 0;
                for k in 0..self.cols {
                    acc += self.get(i, k) as u64 * v.coords[k] as u64;
                }
                (acc % p) as u32
            })
            .collect();
        Ok(Vector { field: self.field, coords })
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && rref(self).1 == self.rows
    }

    /// Inverse via Gauss-Jordan on the augmented matrix; `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zero(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, 1);
        }
        let (red, rank, _) = rref(&aug);
        if rank < n || (0..n).any(|i| red.get(i, i) != 1) {
            return None;
        }
        let mut out = Matrix::zero(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, red.get(i, n + j));
            }
        }
        Some(out)
    }

    /// Base-p integer encoding, row-major, first entry most significant.
    pub fn encoding(&self) -> u128 {
        encode(self.field, &self.entries)
    }

    pub fn from_encoding(field: PrimeField, rows: usize, cols: usize, code: u128) -> Result<Self> {
        Ok(Matrix { field, rows, cols, entries: decode(field, rows * cols, code)? })
    }

    fn check_same_shape(&self, other: &Matrix) -> Result<()> {
        if self.field != other.field || self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }
}

/// Reduced row echelon form: returns `(rref, rank, pivot columns)`.
pub fn rref(m: &Matrix) -> (Matrix, usize, Vec<usize>) {
    let f = m.field;
    let (rows, cols) = (m.rows, m.cols);
    let mut a = m.entries.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| a[i * cols + c] != 0) else { continue };
        for j in 0..cols {
            a.swap(r * cols + j, pr * cols + j);
        }
        let inv = f.inv(a[r * cols + c]).expect("pivot entry is nonzero");
        for j in 0..cols {
            a[r * cols + j] = f.mul(a[r * cols + j], inv);
        }
        for i in 0..rows {
            if i != r && a[i * cols + c] != 0 {
                let factor = a[i * cols + c];
                for j in 0..cols {
                    let t = f.mul(factor, a[r * cols + j]);
                    a[i * cols + j] = f.sub(a[i * cols + j], t);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (Matrix { field: f, rows, cols, entries: a }, r, pivots)
}

/// Null space `{v : m v = 0}` in canonical form.
pub fn kernel(m: &Matrix) -> Subspace {
    let (red, _, pivots) = rref(m);
    let f = m.field;
    let n = m.cols;
    let mut basis = Vec::new();
    let pivot_of_col: Vec<Option<usize>> = {
        let mut v = vec![None; n];
        for (row, &col) in pivots.iter().enumerate() {
            v[col] = Some(row);
        }
        v
    };
    for free in 0..n {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut coords = vec![0u32; n];
        coords[free] = 1;
        for (col, pv) in pivot_of_col.iter().enumerate() {
            if let Some(row) = pv {
                coords[col] = f.neg(red.get(*row, free));
            }
        }
        basis.push(Vector { field: f, coords });
    }
    Subspace::from_spanning(f, n, &basis).expect("kernel vectors live in the domain")
}

/// Column space in canonical form.
pub fn image(m: &Matrix) -> Subspace {
    let cols: Vec<Vector> = (0..m.cols).map(|j| m.col_vector(j)).collect();
    Subspace::from_spanning(m.field, m.rows, &cols).expect("columns live in the codomain")
}

/// Subspace of F_p^n in canonical reduced-row-echelon representation.
///
/// Equality of subspaces is literal equality of representations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: PrimeField,
    ambient_dim: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: PrimeField, ambient_dim: usize) -> Self {
        Subspace { field, ambient_dim, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: PrimeField, ambient_dim: usize) -> Self {
        let basis = (0..ambient_dim).map(|i| Vector::basis(field, ambient_dim, i)).collect();
        Subspace { field, ambient_dim, basis, pivots: (0..ambient_dim).collect() }
    }

    /// Canonicalize the span of arbitrary vectors.
    pub fn from_spanning(field: PrimeField, ambient_dim: usize, vectors: &[Vector]) -> Result<Self> {
        for v in vectors {
            if v.field != field || v.dim() != ambient_dim {
                return Err(Error::DimensionMismatch(format!(
                    "spanning vector of dim {} in ambient dim {}",
                    v.dim(),
                    ambient_dim
                )));
            }
        }
        if vectors.is_empty() {
            return Ok(Subspace::zero(field, ambient_dim));
        }
        let stacked = Matrix::from_rows(field, &vectors.iter().map(|v| v.coords.clone()).collect::<Vec<_>>())?;
        let (red, rank, pivots) = rref(&stacked);
        let basis = (0..rank).map(|i| red.row_vector(i)).collect();
        Ok(Subspace { field, ambient_dim, basis, pivots })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Canonical RREF basis, pivot columns strictly increasing.
    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Subtract the unique basis combination matching `v`'s pivot coordinates.
    ///
    /// The result has zeros at every pivot column, which makes it the
    /// lexicographically minimal element of the coset `v + self`: any nonzero
    /// element of `self` has its first nonzero coordinate (a positive value)
    /// at some pivot column, so adding it can only increase the coset element
    /// at the first position where they differ.
    pub fn reduce(&self, v: &Vector) -> Vector {
        let mut out = v.clone();
        for (b, &pc) in self.basis.iter().zip(&self.pivots) {
            let c = out.coords[pc];
            if c != 0 {
                for (o, bv) in out.coords.iter_mut().zip(&b.coords) {
                    *o = self.field.sub(*o, self.field.mul(c, *bv));
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &Vector) -> bool {
        v.dim() == self.ambient_dim && v.field == self.field && self.reduce(v).is_zero()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|b| self.contains(b))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        if self.field != other.field || self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch("subspace sum over different ambients".into()));
        }
        let mut all = self.basis.clone();
        all.extend_from_slice(&other.basis);
        Subspace::from_spanning(self.field, self.ambient_dim, &all)
    }

    /// All p^dim member vectors in lexicographic order.
    ///
    /// With an RREF basis, combinations enumerated with the first coefficient
    /// most significant come out in vector-lex order, because coordinates
    /// strictly before the k-th pivot depend only on the first k-1
    /// coefficients and the k-th pivot coordinate equals the k-th coefficient.
    pub fn vectors(&self) -> Vec<Vector> {
        let p = self.field.modulus();
        let k = self.basis.len();
        let mut out = Vec::with_capacity((p as usize).pow(k as u32));
        let mut coeffs = vec![0u32; k];
        loop {
            let mut v = Vector::zero(self.field, self.ambient_dim);
            for (c, b) in coeffs.iter().zip(&self.basis) {
                if *c != 0 {
                    for (slot, bv) in v.coords.iter_mut().zip(&b.coords) {
                        *slot = self.field.add(*slot, self.field.mul(*c, *bv));
                    }
                }
            }
            out.push(v);
            // odometer, last coefficient fastest
            let mut i = k;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                coeffs[i] += 1;
                if coeffs[i] < p {
                    break;
                }
                coeffs[i] = 0;
            }
        }
    }
}

/// Quotient of nested subspaces with a canonical transversal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientSpace {
    ambient: Subspace,
    sub: Subspace,
    transversal: Vec<Vector>,
}

/// Quotient `ambient / sub`; every coset is represented by its
/// lexicographically minimal member, listed in lexicographic order.
pub fn quotient(ambient: &Subspace, sub: &Subspace) -> Result<QuotientSpace> {
    if ambient.field != sub.field || ambient.ambient_dim != sub.ambient_dim {
        return Err(Error::DimensionMismatch("quotient over different ambients".into()));
    }
    if !ambient.contains_subspace(sub) {
        return Err(Error::NotASubspace(format!(
            "denominator (dim {}) is not contained in numerator (dim {})",
            sub.dim(),
            ambient.dim()
        )));
    }
    // reduce is linear with kernel `sub`, so the reduced ambient basis spans
    // the space of minimal representatives
    let reduced: Vec<Vector> = ambient.basis.iter().map(|b| sub.reduce(b)).collect();
    let rep_space = Subspace::from_spanning(ambient.field, ambient.ambient_dim, &reduced)?;
    debug_assert_eq!(rep_space.dim(), ambient.dim() - sub.dim());
    let mut transversal = rep_space.vectors();
    transversal.sort_by(|a, b| a.cmp_lex(b));
    Ok(QuotientSpace { ambient: ambient.clone(), sub: sub.clone(), transversal })
}

impl QuotientSpace {
    pub fn ambient(&self) -> &Subspace {
        &self.ambient
    }

    pub fn sub(&self) -> &Subspace {
        &self.sub
    }

    /// Coset representatives, pairwise non-congruent, lexicographically minimal.
    pub fn transversal(&self) -> &[Vector] {
        &self.transversal
    }

    pub fn size(&self) -> usize {
        self.transversal.len()
    }

    /// The minimal representative of `v`'s coset.
    pub fn canonical_rep(&self, v: &Vector) -> Result<Vector> {
        if !self.ambient.contains(v) {
            return Err(Error::InvalidParams("vector is outside the quotient ambient".into()));
        }
        Ok(self.sub.reduce(v))
    }
}

/// Solve `m x = rhs`; returns the lexicographically minimal solution.
pub fn solve(m: &Matrix, rhs: &Vector) -> Result<Option<Vector>> {
    if rhs.field != m.field || rhs.dim() != m.rows {
        return Err(Error::DimensionMismatch(format!(
            "rhs of dim {} for an {}x{} system",
            rhs.dim(),
            m.rows,
            m.cols
        )));
    }
    let f = m.field;
    let mut aug = Matrix::zero(f, m.rows, m.cols + 1);
    for i in 0..m.rows {
        for j in 0..m.cols {
            aug.set(i, j, m.get(i, j));
        }
        aug.set(i, m.cols, rhs.coords[i]);
    }
    let (red, rank, pivots) = rref(&aug);
    if pivots.last() == Some(&m.cols) {
        return Ok(None); // a row reads 0 = 1
    }
    let mut particular = vec![0u32; m.cols];
    for (row, &col) in pivots.iter().enumerate().take(rank) {
        particular[col] = red.get(row, m.cols);
    }
    let x0 = Vector { field: f, coords: particular };
    Ok(Some(kernel(m).reduce(&x0)))
}

/// Deterministic stream over all `rows x cols` matrices in encoding order,
/// optionally filtered to the invertible ones.
#[derive(Debug)]
pub struct MatrixStream {
    field: PrimeField,
    rows: usize,
    cols: usize,
    current: Option<Vec<u32>>,
    started: bool,
    invertible_only: bool,
}

impl Iterator for MatrixStream {
    type Item = Matrix;

    fn next(&mut self) -> Option<Matrix> {
        loop {
            if !self.started {
                self.started = true;
                self.current = Some(vec![0; self.rows * self.cols]);
            } else {
                let entries = self.current.as_mut()?;
                // odometer, last entry fastest: ascending base-p encoding
                let p = self.field.modulus();
                let mut i = entries.len();
                loop {
                    if i == 0 {
                        self.current = None;
                        return None;
                    }
                    i -= 1;
                    entries[i] += 1;
                    if entries[i] < p {
                        break;
                    }
                    entries[i] = 0;
                }
            }
            let entries = self.current.as_ref()?;
            let m = Matrix {
                field: self.field,
                rows: self.rows,
                cols: self.cols,
                entries: entries.clone(),
            };
            if !self.invertible_only || m.is_invertible() {
                return Some(m);
            }
        }
    }
}

/// All matrices of the given shape, ascending encoding order.
pub fn matrix_enumerate(
    rows: usize,
    cols: usize,
    field: PrimeField,
    budget: &Budget,
) -> Result<MatrixStream> {
    budget.admit_power(field.modulus() as u64, (rows * cols) as u32)?;
    Ok(MatrixStream { field, rows, cols, current: None, started: false, invertible_only: false })
}

/// All invertible n x n matrices, ascending encoding order.
///
/// The budget is checked against the full candidate space p^(n^2).
pub fn gl_enumerate(n: usize, field: PrimeField, budget: &Budget) -> Result<MatrixStream> {
    budget.admit_power(field.modulus() as u64, (n * n) as u32)?;
    Ok(MatrixStream { field, rows: n, cols: n, current: None, started: false, invertible_only: true })
}

/// Every subspace of F_p^dim, each in canonical form, ordered by dimension
/// and then lexicographically by basis.
///
/// Works by sweeping column spaces of all dim x dim matrices (every subspace
/// arises that way), so the budget is checked against p^(dim^2).
pub fn all_subspaces(field: PrimeField, dim: usize, budget: &Budget) -> Result<Vec<Subspace>> {
    budget.admit_power(field.modulus() as u64, (dim * dim) as u32)?;
    let mut seen: std::collections::HashSet<Vec<u128>> = std::collections::HashSet::new();
    let mut spaces = Vec::new();
    for mat in matrix_enumerate(dim, dim, field, budget)? {
        let space = image(&mat);
        let key: Vec<u128> = space.basis().iter().map(Vector::encoding).collect();
        if seen.insert(key) {
            spaces.push(space);
        }
    }
    spaces.sort_by(|a, b| {
        a.dim().cmp(&b.dim()).then_with(|| {
            a.basis()
                .iter()
                .map(Vector::encoding)
                .collect::<Vec<_>>()
                .cmp(&b.basis().iter().map(Vector::encoding).collect::<Vec<_>>())
        })
    });
    Ok(spaces)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn m(p: u32, rows: &[Vec<u32>]) -> Matrix {
        Matrix::from_rows(f(p), rows).unwrap()
    }

    #[test]
    fn rref_identity_is_fixed() {
        let i2 = Matrix::identity(f(2), 2);
        let (red, rank, pivots) = rref(&i2);
        assert_eq!(red, i2);
        assert_eq!(rank, 2);
        assert_eq!(pivots, vec![0, 1]);
    }

    #[test]
    fn rref_zero_matrix() {
        let z = Matrix::zero(f(3), 3, 3);
        let (red, rank, pivots) = rref(&z);
        assert_eq!(red, z);
        assert_eq!(rank, 0);
        assert!(pivots.is_empty());
    }

    #[test]
    fn rref_rank_one_over_f2() {
        let a = m(2, &[vec![1, 1], vec![1, 1]]);
        let (red, rank, _) = rref(&a);
        assert_eq!(red, m(2, &[vec![1, 1], vec![0, 0]]));
        assert_eq!(rank, 1);
    }

    #[test]
    fn kernel_of_zero_is_full() {
        let k = kernel(&Matrix::zero(f(2), 2, 2));
        assert_eq!(k.dim(), 2);
        assert_eq!(k, Subspace::full(f(2), 2));
    }

    #[test]
    fn kernel_and_image_of_e12() {
        let e12 = m(2, &[vec![0, 1], vec![0, 0]]);
        let span_e1 = Subspace::from_spanning(f(2), 2, &[Vector::basis(f(2), 2, 0)]).unwrap();
        assert_eq!(kernel(&e12), span_e1);
        assert_eq!(image(&e12), span_e1);
    }

    #[test]
    fn matrix_products_match_hand_computation() {
        let e12 = m(2, &[vec![0, 1], vec![0, 0]]);
        let e21 = m(2, &[vec![0, 0], vec![1, 0]]);
        let e11 = m(2, &[vec![1, 0], vec![0, 0]]);
        assert_eq!(e12.mul(&e21).unwrap(), e11);
        let ones = m(2, &[vec![1, 1], vec![1, 1]]);
        assert!(ones.mul(&ones).unwrap().is_zero());
        let v = Vector::new(f(2), vec![1, 1]).unwrap();
        assert_eq!(Matrix::identity(f(2), 2).apply(&v).unwrap(), v);
    }

    #[test]
    fn inverse_round_trip() {
        let a = m(3, &[vec![1, 2], vec![1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), Matrix::identity(f(3), 2));
        assert_eq!(inv.mul(&a).unwrap(), Matrix::identity(f(3), 2));
        let ones = m(2, &[vec![1, 1], vec![1, 1]]);
        assert!(ones.inverse().is_none());
    }

    #[test]
    fn quotient_by_zero_and_by_self() {
        let full = Subspace::full(f(2), 2);
        let q = quotient(&full, &Subspace::zero(f(2), 2)).unwrap();
        assert_eq!(q.size(), 4);
        let line = Subspace::from_spanning(f(2), 2, &[Vector::basis(f(2), 2, 0)]).unwrap();
        let q2 = quotient(&line, &line).unwrap();
        assert_eq!(q2.size(), 1);
        assert!(q2.transversal()[0].is_zero());
    }

    #[test]
    fn quotient_transversal_is_lex_minimal() {
        let full = Subspace::full(f(2), 2);
        let line = Subspace::from_spanning(f(2), 2, &[Vector::basis(f(2), 2, 0)]).unwrap();
        let q = quotient(&full, &line).unwrap();
        let reps: Vec<Vec<u32>> = q.transversal().iter().map(|v| v.coords().to_vec()).collect();
        assert_eq!(reps, vec![vec![0, 0], vec![0, 1]]);
    }

    #[test]
    fn quotient_rejects_non_subspace() {
        let line_e1 = Subspace::from_spanning(f(2), 2, &[Vector::basis(f(2), 2, 0)]).unwrap();
        let line_e2 = Subspace::from_spanning(f(2), 2, &[Vector::basis(f(2), 2, 1)]).unwrap();
        assert!(matches!(quotient(&line_e1, &line_e2), Err(Error::NotASubspace(_))));
    }

    #[test]
    fn gl_counts_match_order_formula() {
        // |GL(n, p)| = prod (p^n - p^i)
        for (n, p, expected) in [(1, 2, 1), (2, 2, 6), (2, 3, 48), (2, 5, 480), (3, 2, 168)] {
            let count = gl_enumerate(n, f(p), &Budget::default()).unwrap().count();
            assert_eq!(count, expected, "GL({n}, {p})");
        }
    }

    #[test]
    fn gl_respects_budget() {
        let tight = Budget::new(8);
        assert!(matches!(
            gl_enumerate(2, f(2), &tight),
            Err(Error::BudgetExceeded { candidates: 16, budget: 8 })
        ));
    }

    #[test]
    fn enumeration_is_encoding_ordered_and_complete() {
        let all: Vec<Matrix> = matrix_enumerate(2, 1, f(3), &Budget::default()).unwrap().collect();
        let codes: Vec<u128> = all.iter().map(Matrix::encoding).collect();
        assert_eq!(codes, vec![0, 1, 2, 3, 4, 5, 6, 7, 8]);
    }

    #[test]
    fn solve_returns_lex_minimal_solution() {
        // over F3: [[2 * E12]] r = e1 has solutions (c, 2); minimal is (0, 2)
        let a = m(3, &[vec![0, 2], vec![0, 0]]);
        let rhs = Vector::basis(f(3), 2, 0);
        let x = solve(&a, &rhs).unwrap().unwrap();
        assert_eq!(x.coords(), &[0, 2]);
        assert_eq!(a.apply(&x).unwrap(), rhs);
        // inconsistent system
        let b = m(3, &[vec![0, 0], vec![0, 0]]);
        assert!(solve(&b, &rhs).unwrap().is_none());
    }

    #[test]
    fn subspace_vectors_enumerate_in_lex_order() {
        let s = Subspace::from_spanning(
            f(2),
            3,
            &[Vector::new(f(2), vec![1, 0, 1]).unwrap(), Vector::new(f(2), vec![0, 1, 1]).unwrap()],
        )
        .unwrap();
        let vs = s.vectors();
        assert_eq!(vs.len(), 4);
        let mut sorted = vs.clone();
        sorted.sort_by(|a, b| a.cmp_lex(b));
        assert_eq!(vs, sorted);
    }

    #[test]
    fn encoding_round_trip() {
        let a = m(5, &[vec![4, 0], vec![1, 3]]);
        let code = a.encoding();
        assert_eq!(code, ((4 * 5 + 0) * 5 + 1) * 5 + 3);
        assert_eq!(Matrix::from_encoding(f(5), 2, 2, code).unwrap(), a);
    }

    #[test]
    fn subspace_census_matches_gaussian_binomial_totals() {
        // counts are sums of Gaussian binomials: 1+3+1, 1+4+1, 1+7+7+1
        assert_eq!(all_subspaces(f(2), 2, &Budget::default()).unwrap().len(), 5);
        assert_eq!(all_subspaces(f(3), 2, &Budget::default()).unwrap().len(), 6);
        let cube = all_subspaces(f(2), 3, &Budget::default()).unwrap();
        assert_eq!(cube.len(), 16);
        // canonical, deduplicated, dimension-sorted
        assert_eq!(cube.first().unwrap().dim(), 0);
        assert_eq!(cube.last().unwrap().dim(), 3);
        for w in cube.windows(2) {
            assert!(w[0] != w[1]);
            assert!(w[0].dim() <= w[1].dim());
        }
    }
}
