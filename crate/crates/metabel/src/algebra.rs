//! Structure-constant algebras and their predicates.
//!
//! An [`Algebra`] is a dense tensor `c[i][j][k]` with `e_i e_j = sum_k
//! c[i][j][k] e_k`. Associativity is a checked predicate, not a type
//! invariant: census enumeration must be able to hold candidate tensors that
//! fail it. On top of the predicates this module provides brute-force
//! isomorphism and automorphism search over GL(n, p), equivalence of
//! extensions, a verifier for the abelian-pair sum criterion, and a pruned
//! exhaustive census of associative algebras.

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::linalg::{Matrix, Subspace, Vector, gl_enumerate};
use std::collections::HashSet;

/// Finite-dimensional algebra given by structure constants.
#[derive(Debug, Clone)]
pub struct Algebra {
    field: PrimeField,
    dim: usize,
    /// Flat tensor, entry (i, j, k) at `(i*dim + j)*dim + k`.
    sc: Vec<u32>,
    labels: Option<Vec<String>>,
}

/// Labels are presentation only; equality is structural.
impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.dim == other.dim && self.sc == other.sc
    }
}

impl Eq for Algebra {}

impl Algebra {
    pub fn new(field: PrimeField, dim: usize, sc: Vec<u32>) -> Result<Self> {
        if sc.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch(format!(
                "dim {dim} needs {} structure constants, got {}",
                dim * dim * dim,
                sc.len()
            )));
        }
        if let Some(&bad) = sc.iter().find(|&&c| !field.contains(c)) {
            return Err(Error::InvariantViolation(format!(
                "structure constant {bad} is outside F_{}",
                field.modulus()
            )));
        }
        Ok(Algebra { field, dim, sc, labels: None })
    }

    /// Build from the nested tensor `c[i][j][k]`.
    pub fn from_nested(field: PrimeField, sc: &[Vec<Vec<u32>>]) -> Result<Self> {
        let dim = sc.len();
        let mut flat = Vec::with_capacity(dim * dim * dim);
        for plane in sc {
            if plane.len() != dim {
                return Err(Error::DimensionMismatch("ragged structure tensor".into()));
            }
            for row in plane {
                if row.len() != dim {
                    return Err(Error::DimensionMismatch("ragged structure tensor".into()));
                }
                flat.extend_from_slice(row);
            }
        }
        Algebra::new(field, dim, flat)
    }

    /// The abelian algebra: every product is zero.
    pub fn abelian(field: PrimeField, dim: usize) -> Self {
        Algebra { field, dim, sc: vec![0; dim * dim * dim], labels: None }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "{} labels for dimension {}",
                labels.len(),
                self.dim
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> u32 {
        self.sc[(i * self.dim + j) * self.dim + k]
    }

    /// Coordinates of the basis product `e_i e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> Vector {
        let start = (i * self.dim + j) * self.dim;
        Vector::new(self.field, self.sc[start..start + self.dim].to_vec())
            .expect("structure constants are field elements")
    }

    fn basis_product_slice(&self, i: usize, j: usize) -> &[u32] {
        let start = (i * self.dim + j) * self.dim;
        &self.sc[start..start + self.dim]
    }

    pub fn nested_sc(&self) -> Vec<Vec<Vec<u32>>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.basis_product_slice(i, j).to_vec()).collect())
            .collect()
    }

    /// Bilinear product of two elements.
    pub fn multiply(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        if x.field() != self.field || y.field() != self.field || x.dim() != self.dim || y.dim() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "vectors of dim {}/{} in an algebra of dim {}",
                x.dim(),
                y.dim(),
                self.dim
            )));
        }
        let mut out = vec![0u32; self.dim];
        self.multiply_into(x.coords(), y.coords(), &mut out);
        Ok(Vector::new(self.field, out).expect("product coordinates are reduced"))
    }

    /// `out = x * y` on raw coordinate slices (allocation-free hot path).
    fn multiply_into(&self, x: &[u32], y: &[u32], out: &mut [u32]) {
        let n = self.dim;
        let p = self.field.modulus() as u64;
        for slot in out.iter_mut() {
            *slot = 0;
        }
        let mut acc = vec![0u64; n];
        for (s, &xs) in x.iter().enumerate() {
            if xs == 0 {
                continue;
            }
            for (t, &yt) in y.iter().enumerate() {
                if yt == 0 {
                    continue;
                }
                let coef = (xs as u64 * yt as u64) % p;
                let row = self.basis_product_slice(s, t);
                for k in 0..n {
                    acc[k] += coef * row[k] as u64;
                }
            }
        }
        for k in 0..n {
            out[k] = (acc[k] % p) as u32;
        }
    }

    /// True iff `(e_i e_j) e_k = e_i (e_j e_k)` for all basis triples
    /// (sufficient by bilinearity).
    pub fn is_associative(&self) -> bool {
        let n = self.dim;
        let p = self.field.modulus() as u64;
        let mut lhs = vec![0u64; n];
        let mut rhs = vec![0u64; n];
        for a in 0..n {
            for b in 0..n {
                let ab = self.basis_product_slice(a, b);
                for d in 0..n {
                    let bd = self.basis_product_slice(b, d);
                    lhs.iter_mut().for_each(|v| *v = 0);
                    rhs.iter_mut().for_each(|v| *v = 0);
                    for l in 0..n {
                        if ab[l] != 0 {
                            let row = self.basis_product_slice(l, d);
                            for k in 0..n {
                                lhs[k] += ab[l] as u64 * row[k] as u64;
                            }
                        }
                        if bd[l] != 0 {
                            let row = self.basis_product_slice(a, l);
                            for k in 0..n {
                                rhs[k] += bd[l] as u64 * row[k] as u64;
                            }
                        }
                    }
                    if (0..n).any(|k| lhs[k] % p != rhs[k] % p) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Span of all basis products, in canonical form.
    pub fn derived_subalgebra(&self) -> Subspace {
        let rows: Vec<Vector> = (0..self.dim)
            .flat_map(|i| (0..self.dim).map(move |j| self.basis_product(i, j)))
            .collect();
        Subspace::from_spanning(self.field, self.dim, &rows)
            .expect("products live in the algebra")
    }

    /// Span of `span * A` (all products of span basis members with basis vectors).
    fn span_times_algebra(&self, span: &Subspace) -> Subspace {
        let mut rows = Vec::new();
        let mut out = vec![0u32; self.dim];
        for u in span.basis() {
            for j in 0..self.dim {
                let mut y = vec![0u32; self.dim];
                y[j] = 1;
                self.multiply_into(u.coords(), &y, &mut out);
                rows.push(Vector::new(self.field, out.clone()).expect("reduced"));
            }
        }
        Subspace::from_spanning(self.field, self.dim, &rows).expect("products live in the algebra")
    }

    /// True iff every product of `m` elements vanishes.
    ///
    /// Computed by iterating spans A, A^2 = span(A*A), ..., A^m =
    /// span(A^(m-1) * A); a single parenthesization suffices because the
    /// algebra is required to be associative (products of length m under
    /// non-associativity are refused, not guessed).
    pub fn nilpotency_index_at_most(&self, m: usize) -> Result<bool> {
        if m < 1 {
            return Err(Error::InvalidParams("product length must be at least 1".into()));
        }
        if !self.is_associative() {
            return Err(Error::NotAssociative);
        }
        Ok(self.power_span(m).is_zero())
    }

    /// A^m as a subspace (assumes associativity was already checked).
    fn power_span(&self, m: usize) -> Subspace {
        let mut span = Subspace::full(self.field, self.dim);
        for _ in 1..m {
            span = self.span_times_algebra(&span);
        }
        span
    }

    fn span_is_abelian(&self, span: &Subspace) -> bool {
        let mut out = vec![0u32; self.dim];
        for u in span.basis() {
            for v in span.basis() {
                self.multiply_into(u.coords(), v.coords(), &mut out);
                if out.iter().any(|&c| c != 0) {
                    return false;
                }
            }
        }
        true
    }

    /// True iff the derived subalgebra is abelian.
    ///
    /// Cross-checks the equivalent criterion that all length-4 products
    /// vanish; disagreement would indicate a bug and raises an internal
    /// error. Requires associativity.
    pub fn is_metabelian(&self) -> Result<bool> {
        if !self.is_associative() {
            return Err(Error::NotAssociative);
        }
        let derived_abelian = self.span_is_abelian(&self.derived_subalgebra());
        let length4_vanish = self.power_span(4).is_zero();
        if derived_abelian != length4_vanish {
            return Err(Error::InternalError(format!(
                "derived-abelian ({derived_abelian}) and length-4-vanishing ({length4_vanish}) criteria disagree"
            )));
        }
        Ok(derived_abelian)
    }

    /// Base-p encoding of the flat structure tensor (first entry most significant).
    pub fn encoding(&self) -> u128 {
        let p = self.field.modulus() as u128;
        let mut acc: u128 = 0;
        for &e in &self.sc {
            acc = acc
                .checked_mul(p)
                .and_then(|a| a.checked_add(e as u128))
                .expect("encoding overflow");
        }
        acc
    }

    pub fn from_encoding(field: PrimeField, dim: usize, mut code: u128) -> Result<Self> {
        let p = field.modulus() as u128;
        let mut sc = vec![0u32; dim * dim * dim];
        for slot in sc.iter_mut().rev() {
            *slot = (code % p) as u32;
            code /= p;
        }
        if code != 0 {
            return Err(Error::InvalidParams("encoding does not fit the tensor".into()));
        }
        Algebra::new(field, dim, sc)
    }

    /// The same multiplication written in the basis given by the columns of `c`.
    pub fn rebase(&self, c: &Matrix) -> Result<Algebra> {
        if c.rows() != self.dim || c.cols() != self.dim || c.field() != self.field {
            return Err(Error::DimensionMismatch("basis-change matrix of wrong shape".into()));
        }
        let inv = c.inverse().ok_or_else(|| {
            Error::InvalidParams("basis-change matrix is singular".into())
        })?;
        let n = self.dim;
        let mut sc = vec![0u32; n * n * n];
        let mut prod = vec![0u32; n];
        for i in 0..n {
            let fi = c.col_vector(i);
            for j in 0..n {
                let fj = c.col_vector(j);
                self.multiply_into(fi.coords(), fj.coords(), &mut prod);
                let coords = inv
                    .apply(&Vector::new(self.field, prod.clone()).expect("reduced"))
                    .expect("dimensions agree");
                sc[(i * n + j) * n..(i * n + j) * n + n].copy_from_slice(coords.coords());
            }
        }
        Algebra::new(self.field, n, sc)
    }
}

/// True iff `c` intertwines the multiplications: `c(xy) = (cx)(cy)` on basis pairs.
pub fn is_algebra_map(c: &Matrix, a: &Algebra, b: &Algebra) -> bool {
    let n = a.dim;
    if b.dim != n || c.rows() != n || c.cols() != n || a.field != b.field || c.field() != a.field {
        return false;
    }
    let p = a.field.modulus() as u64;
    let mut lhs = vec![0u64; n];
    let mut rhs = vec![0u32; n];
    let mut ci = vec![0u32; n];
    let mut cj = vec![0u32; n];
    for i in 0..n {
        for k in 0..n {
            ci[k] = c.get(k, i);
        }
        for j in 0..n {
            for k in 0..n {
                cj[k] = c.get(k, j);
            }
            // lhs = c * (e_i e_j) computed in a
            let row = a.basis_product_slice(i, j);
            for k in 0..n {
                let mut acc = 0u64;
                for l in 0..n {
                    acc += c.get(k, l) as u64 * row[l] as u64;
                }
                lhs[k] = acc % p;
            }
            // rhs = (c e_i)(c e_j) computed in b
            b.multiply_into(&ci, &cj, &mut rhs);
            if (0..n).any(|k| lhs[k] != rhs[k] as u64) {
                return false;
            }
        }
    }
    true
}

/// Brute-force isomorphism search over GL(n, p).
///
/// The identity is tried first; after that candidates stream in ascending
/// encoding order and the first algebra map wins. Returns `None` only after
/// exhausting the group.
pub fn find_isomorphism(a: &Algebra, b: &Algebra, budget: &Budget) -> Result<Option<Matrix>> {
    if a.field != b.field || a.dim != b.dim {
        return Err(Error::DimensionMismatch(
            "isomorphism search requires equal dimension and field".into(),
        ));
    }
    let identity = Matrix::identity(a.field, a.dim);
    if is_algebra_map(&identity, a, b) {
        return Ok(Some(identity));
    }
    for c in gl_enumerate(a.dim, a.field, budget)? {
        if is_algebra_map(&c, a, b) {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

/// Isomorphism search against a precomputed GL list (same verdict and witness
/// order as [`find_isomorphism`]); used by censuses that amortize GL
/// enumeration across many pairs.
pub fn find_isomorphism_with(gl: &[Matrix], a: &Algebra, b: &Algebra) -> Option<Matrix> {
    let identity = Matrix::identity(a.field, a.dim);
    if a.dim == b.dim && is_algebra_map(&identity, a, b) {
        return Some(identity);
    }
    gl.iter().find(|c| is_algebra_map(c, a, b)).cloned()
}

/// All algebra automorphisms, in ascending encoding order.
///
/// The returned list is verified to be a group: contains the identity and is
/// closed under products and inverses; a failure is an internal error.
pub fn automorphism_group(a: &Algebra, budget: &Budget) -> Result<Vec<Matrix>> {
    let mut auts = Vec::new();
    for c in gl_enumerate(a.dim, a.field, budget)? {
        if is_algebra_map(&c, a, a) {
            auts.push(c);
        }
    }
    let codes: HashSet<u128> = auts.iter().map(Matrix::encoding).collect();
    if !codes.contains(&Matrix::identity(a.field, a.dim).encoding()) {
        return Err(Error::InternalError("automorphism list misses the identity".into()));
    }
    for g in &auts {
        let inv = g.inverse().ok_or_else(|| {
            Error::InternalError("automorphism candidate is singular".into())
        })?;
        if !codes.contains(&inv.encoding()) {
            return Err(Error::InternalError("automorphism list not closed under inverse".into()));
        }
        for h in &auts {
            if !codes.contains(&g.mul(h).expect("same shape").encoding()) {
                return Err(Error::InternalError("automorphism list not closed under product".into()));
            }
        }
    }
    Ok(auts)
}

/// An algebra presented as an extension: the last `v_dim` basis vectors span
/// an embedded ideal V and the first `p_dim` coordinates project onto P.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionTriple {
    total: Algebra,
    p_dim: usize,
    v_dim: usize,
}

impl ExtensionTriple {
    pub fn new(total: Algebra, p_dim: usize, v_dim: usize) -> Result<Self> {
        if p_dim + v_dim != total.dim() {
            return Err(Error::DimensionMismatch(format!(
                "p_dim {} + v_dim {} != total dim {}",
                p_dim,
                v_dim,
                total.dim()
            )));
        }
        let n = total.dim();
        // V-span must be an ideal: products with V stay inside the V block.
        for i in 0..n {
            for k in p_dim..n {
                for l in 0..p_dim {
                    if total.structure_constant(i, k, l) != 0
                        || total.structure_constant(k, i, l) != 0
                    {
                        return Err(Error::InvariantViolation(
                            "embedded V-span is not an ideal".into(),
                        ));
                    }
                }
            }
        }
        // For metabelian totals the extension is abelian-by-abelian: V*V = 0
        // and all products drop into V.
        if total.is_associative() && total.is_metabelian()? {
            for i in p_dim..n {
                for j in p_dim..n {
                    if (0..n).any(|l| total.structure_constant(i, j, l) != 0) {
                        return Err(Error::InvariantViolation(
                            "metabelian extension with nonzero V-multiplication".into(),
                        ));
                    }
                }
            }
            for i in 0..n {
                for j in 0..n {
                    if (0..p_dim).any(|l| total.structure_constant(i, j, l) != 0) {
                        return Err(Error::InvariantViolation(
                            "metabelian extension with nonzero quotient multiplication".into(),
                        ));
                    }
                }
            }
        }
        Ok(ExtensionTriple { total, p_dim, v_dim })
    }

    pub fn total(&self) -> &Algebra {
        &self.total
    }

    pub fn p_dim(&self) -> usize {
        self.p_dim
    }

    pub fn v_dim(&self) -> usize {
        self.v_dim
    }
}

/// Search for an equivalence of extensions.
///
/// Stabilizing V and co-stabilizing P forces the shape `phi(p, x) = (p, x +
/// r(p))`, so the search runs over all linear maps `r: P -> V` only; the
/// first witness in ascending r-encoding order is returned (r = 0, the
/// identity, is tried first by construction).
pub fn extension_equivalent(e1: &ExtensionTriple, e2: &ExtensionTriple) -> Result<Option<Matrix>> {
    if e1.total.field() != e2.total.field()
        || e1.p_dim != e2.p_dim
        || e1.v_dim != e2.v_dim
    {
        return Err(Error::DimensionMismatch(
            "extension equivalence requires identical (p_dim, v_dim, field)".into(),
        ));
    }
    if !e1.total.is_metabelian()? || !e2.total.is_metabelian()? {
        return Err(Error::NotMetabelian);
    }
    let field = e1.total.field();
    let (m, d) = (e1.p_dim, e1.v_dim);
    let n = m + d;
    // the r-space is small by construction; guard all the same
    let stream = crate::linalg::matrix_enumerate(d, m, field, &Budget::default())?;
    for r in stream {
        let mut phi = Matrix::identity(field, n);
        for j in 0..m {
            for k in 0..d {
                phi.set(m + k, j, r.get(k, j));
            }
        }
        if is_algebra_map(&phi, &e1.total, &e2.total) {
            return Ok(Some(phi));
        }
    }
    Ok(None)
}

/// Outcome of the abelian-pair sum check.
///
/// Hypothesis violations are errors, so a returned report always has all
/// hypothesis fields true; the conclusion fields are plain observations and a
/// false value there is a falsified theorem, surfaced by the caller's
/// assertions rather than by this function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ItoReport {
    pub p_is_subalgebra: bool,
    pub v_is_subalgebra: bool,
    pub p_is_abelian: bool,
    pub v_is_abelian: bool,
    pub spans_sum_to_algebra: bool,
    pub conclusion_metabelian: bool,
    pub conclusion_length4_products_vanish: bool,
}

impl ItoReport {
    pub fn conclusion_holds(&self) -> bool {
        self.conclusion_metabelian && self.conclusion_length4_products_vanish
    }
}

/// Verify the abelian-pair criterion: if A = P + V for abelian subalgebras
/// P and V, then A is metabelian.
pub fn ito_check(a: &Algebra, p_span: &Subspace, v_span: &Subspace) -> Result<ItoReport> {
    if !a.is_associative() {
        return Err(Error::NotAssociative);
    }
    if p_span.ambient_dim() != a.dim() || v_span.ambient_dim() != a.dim() {
        return Err(Error::DimensionMismatch("spans of the wrong ambient dimension".into()));
    }
    let closed = |span: &Subspace| -> bool {
        span.basis().iter().all(|u| {
            span.basis().iter().all(|v| {
                span.contains(&a.multiply(u, v).expect("ambient dims checked"))
            })
        })
    };
    if !closed(p_span) {
        return Err(Error::HypothesisFailed("p_span is not a subalgebra".into()));
    }
    if !closed(v_span) {
        return Err(Error::HypothesisFailed("v_span is not a subalgebra".into()));
    }
    if !a.span_is_abelian(p_span) {
        return Err(Error::HypothesisFailed("p_span is not abelian".into()));
    }
    if !a.span_is_abelian(v_span) {
        return Err(Error::HypothesisFailed("v_span is not abelian".into()));
    }
    if p_span.sum(v_span)?.dim() != a.dim() {
        return Err(Error::HypothesisFailed("spans do not sum to the whole algebra".into()));
    }
    Ok(ItoReport {
        p_is_subalgebra: true,
        v_is_subalgebra: true,
        p_is_abelian: true,
        v_is_abelian: true,
        spans_sum_to_algebra: true,
        conclusion_metabelian: a.is_metabelian()?,
        conclusion_length4_products_vanish: a.power_span(4).is_zero(),
    })
}

/// Depth-first census of associative structure tensors.
///
/// Slots (i, j) are assigned in row-major order, one full product row
/// `c[i][j][.]` at a time, values in ascending row encoding, so algebras
/// stream in ascending tensor encoding. With pruning on, a branch dies as
/// soon as some fully determined associator is nonzero; an associator
/// (a, b, d) is fully determined once slots (a, b) and (b, d) plus every
/// value-needed slot (l, d) / (a, l) are assigned.
#[derive(Debug)]
pub struct AssociativeStream {
    field: PrimeField,
    n: usize,
    prune: bool,
    /// Per-slot value code in [0, p^n); -1 means unassigned.
    codes: Vec<i64>,
    rows: Vec<Vec<u32>>,
    depth: usize,
    finished: bool,
    counter: crate::budget::BudgetCounter,
}

/// Enumerate every associative algebra of dimension `n`, deterministically.
///
/// Without pruning the full candidate space `p^(n^3)` is budget-checked up
/// front; with pruning the budget bounds visited search nodes instead, which
/// is what makes dimension 3 over F_2 feasible.
pub fn enumerate_associative_algebras(
    n: usize,
    field: PrimeField,
    prune: bool,
    budget: &Budget,
) -> Result<AssociativeStream> {
    if !prune {
        budget.admit_power(field.modulus() as u64, (n * n * n) as u32)?;
    }
    Ok(AssociativeStream {
        field,
        n,
        prune,
        codes: vec![-1; n * n],
        rows: vec![vec![0; n]; n * n],
        depth: 0,
        finished: n == 0,
        counter: budget.counter(),
    })
}

impl AssociativeStream {
    fn row_count(&self) -> i64 {
        (self.field.modulus() as i64).pow(self.n as u32)
    }

    /// Is associator (a, b, d) fully determined by the assigned prefix?
    fn checkable(&self, assigned: usize, a: usize, b: usize, d: usize) -> bool {
        let n = self.n;
        let sab = a * n + b;
        let sbd = b * n + d;
        if sab >= assigned || sbd >= assigned {
            return false;
        }
        let ab = &self.rows[sab];
        for (l, &c) in ab.iter().enumerate() {
            if c != 0 && l * n + d >= assigned {
                return false;
            }
        }
        let bd = &self.rows[sbd];
        for (l, &c) in bd.iter().enumerate() {
            if c != 0 && a * n + l >= assigned {
                return false;
            }
        }
        true
    }

    /// Does the associator touch slot `s` (either as a product slot or as a
    /// value-needed slot)? Sound filter: an associator not touching the
    /// just-assigned slot was already verified at a shallower depth.
    fn involves(&self, s: usize, a: usize, b: usize, d: usize) -> bool {
        let n = self.n;
        if s == a * n + b || s == b * n + d {
            return true;
        }
        let (sr, sc) = (s / n, s % n);
        (sc == d && self.rows[a * n + b][sr] != 0) || (sr == a && self.rows[b * n + d][sc] != 0)
    }

    fn associator_vanishes(&self, a: usize, b: usize, d: usize) -> bool {
        let n = self.n;
        let p = self.field.modulus() as u64;
        for k in 0..n {
            let mut lhs = 0u64;
            let mut rhs = 0u64;
            for l in 0..n {
                let ab = self.rows[a * n + b][l];
                if ab != 0 {
                    lhs += ab as u64 * self.rows[l * n + d][k] as u64;
                }
                let bd = self.rows[b * n + d][l];
                if bd != 0 {
                    rhs += bd as u64 * self.rows[a * n + l][k] as u64;
                }
            }
            if lhs % p != rhs % p {
                return false;
            }
        }
        true
    }

    /// Check every associator that touches slot `s` and is fully determined.
    fn prefix_consistent(&self, s: usize) -> bool {
        let n = self.n;
        let assigned = s + 1;
        for a in 0..n {
            for b in 0..n {
                for d in 0..n {
                    if self.involves(s, a, b, d)
                        && self.checkable(assigned, a, b, d)
                        && !self.associator_vanishes(a, b, d)
                    {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn current_algebra(&self) -> Algebra {
        let n = self.n;
        let mut sc = Vec::with_capacity(n * n * n);
        for row in &self.rows {
            sc.extend_from_slice(row);
        }
        Algebra::new(self.field, n, sc).expect("rows hold reduced field elements")
    }
}

impl Iterator for AssociativeStream {
    type Item = Result<Algebra>;

    fn next(&mut self) -> Option<Result<Algebra>> {
        if self.finished {
            return None;
        }
        let slots = self.n * self.n;
        let p = self.field.modulus();
        loop {
            // advance the value at the current depth
            self.codes[self.depth] += 1;
            if self.codes[self.depth] >= self.row_count() {
                self.codes[self.depth] = -1;
                if self.depth == 0 {
                    self.finished = true;
                    return None;
                }
                self.depth -= 1;
                continue;
            }
            // decode the row (last coordinate fastest => ascending row encoding)
            let mut code = self.codes[self.depth] as u64;
            {
                let row = &mut self.rows[self.depth];
                for slot in row.iter_mut().rev() {
                    *slot = (code % p as u64) as u32;
                    code /= p as u64;
                }
            }
            if let Err(e) = self.counter.tick() {
                self.finished = true;
                return Some(Err(e));
            }
            if self.prune && !self.prefix_consistent(self.depth) {
                continue;
            }
            if self.depth + 1 < slots {
                self.depth += 1;
                continue;
            }
            // leaf
            let alg = self.current_algebra();
            if self.prune {
                debug_assert!(alg.is_associative());
                return Some(Ok(alg));
            }
            if alg.is_associative() {
                return Some(Ok(alg));
            }
        }
    }
}
