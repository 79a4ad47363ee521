//! Metabelian data: the discrete presentation of an extension of one abelian
//! algebra by another.
//!
//! A datum over F_p consists of a pair of abelian dimensions (m for P, n for
//! V), right and left action matrices `R_j`, `L_j` (one per P-basis vector)
//! and a grid `theta[j][j']` of V-vectors. The actions must satisfy the
//! flattened bimodule laws and theta the matching cocycle law; a
//! [`MetabelianDatum`] witnesses both. [`metabelian_product`] turns a datum
//! into an honest algebra and [`decompose`] inverts it up to isomorphism.

use crate::algebra::{Algebra, ExtensionTriple, is_algebra_map};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::linalg::{Matrix, Subspace, Vector};

/// Raw-parts check of the bimodule laws; shape errors are hard errors, law
/// violations land in the report.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BimoduleReport {
    /// Pairs (j', j) with `R_{j'} R_j != 0`.
    pub right_composition_violations: Vec<(usize, usize)>,
    /// Pairs (j, j') with `L_j L_{j'} != 0`.
    pub left_composition_violations: Vec<(usize, usize)>,
    /// Pairs (j, j') with `L_j R_{j'} != R_{j'} L_j`.
    pub mixed_violations: Vec<(usize, usize)>,
}

impl BimoduleReport {
    pub fn is_valid(&self) -> bool {
        self.right_composition_violations.is_empty()
            && self.left_composition_violations.is_empty()
            && self.mixed_violations.is_empty()
    }
}

fn check_action_shapes(
    field: PrimeField,
    dim_p: usize,
    dim_v: usize,
    right: &[Matrix],
    left: &[Matrix],
) -> Result<()> {
    if right.len() != dim_p || left.len() != dim_p {
        return Err(Error::DimensionMismatch(format!(
            "expected {dim_p} right and left actions, got {} and {}",
            right.len(),
            left.len()
        )));
    }
    for mat in right.iter().chain(left.iter()) {
        if mat.field() != field || mat.rows() != dim_v || mat.cols() != dim_v {
            return Err(Error::DimensionMismatch(format!(
                "action matrices must be {dim_v}x{dim_v} over F_{}",
                field.modulus()
            )));
        }
    }
    Ok(())
}

/// Check the three bimodule laws on raw action lists.
pub fn validate_bimodule(
    field: PrimeField,
    dim_p: usize,
    dim_v: usize,
    right: &[Matrix],
    left: &[Matrix],
) -> Result<BimoduleReport> {
    check_action_shapes(field, dim_p, dim_v, right, left)?;
    let mut report = BimoduleReport::default();
    for a in 0..dim_p {
        for b in 0..dim_p {
            if !right[a].mul(&right[b])?.is_zero() {
                report.right_composition_violations.push((a, b));
            }
            if !left[a].mul(&left[b])?.is_zero() {
                report.left_composition_violations.push((a, b));
            }
            if left[a].mul(&right[b])? != right[b].mul(&left[a])? {
                report.mixed_violations.push((a, b));
            }
        }
    }
    Ok(report)
}

/// Validated pair of right/left actions of an abelian P on V.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DiscreteBimodule {
    field: PrimeField,
    dim_p: usize,
    dim_v: usize,
    right: Vec<Matrix>,
    left: Vec<Matrix>,
}

impl DiscreteBimodule {
    pub fn new(
        field: PrimeField,
        dim_p: usize,
        dim_v: usize,
        right: Vec<Matrix>,
        left: Vec<Matrix>,
    ) -> Result<Self> {
        let report = validate_bimodule(field, dim_p, dim_v, &right, &left)?;
        if !report.is_valid() {
            return Err(Error::InvalidBimodule(format!(
                "law violations at (right, left, mixed) index pairs {:?} / {:?} / {:?}",
                report.right_composition_violations,
                report.left_composition_violations,
                report.mixed_violations
            )));
        }
        Ok(DiscreteBimodule { field, dim_p, dim_v, right, left })
    }

    /// The bimodule with both actions zero.
    pub fn trivial(field: PrimeField, dim_p: usize, dim_v: usize) -> Self {
        let zero = Matrix::zero(field, dim_v, dim_v);
        DiscreteBimodule {
            field,
            dim_p,
            dim_v,
            right: vec![zero.clone(); dim_p],
            left: vec![zero; dim_p],
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dim_p(&self) -> usize {
        self.dim_p
    }

    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    pub fn right(&self) -> &[Matrix] {
        &self.right
    }

    pub fn left(&self) -> &[Matrix] {
        &self.left
    }

    pub fn is_trivial(&self) -> bool {
        self.right.iter().all(Matrix::is_zero) && self.left.iter().all(Matrix::is_zero)
    }

    /// Stable identity used as a grouping key: the action matrices encoded in
    /// (right..., left...) order.
    pub fn key(&self) -> Vec<u128> {
        self.right.iter().chain(self.left.iter()).map(Matrix::encoding).collect()
    }
}

/// Cocycle-law check: violations are triples (i, j, j') where
/// `L_i theta[j][j'] != R_{j'} theta[i][j]`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CocycleReport {
    pub violations: Vec<(usize, usize, usize)>,
}

impl CocycleReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

fn check_theta_shape(bimodule: &DiscreteBimodule, theta: &[Vec<Vector>]) -> Result<()> {
    let (m, n) = (bimodule.dim_p(), bimodule.dim_v());
    if theta.len() != m || theta.iter().any(|row| row.len() != m) {
        return Err(Error::DimensionMismatch(format!("theta must be an {m}x{m} grid")));
    }
    for row in theta {
        for v in row {
            if v.field() != bimodule.field() || v.dim() != n {
                return Err(Error::DimensionMismatch(format!(
                    "theta entries must be vectors of dimension {n} over F_{}",
                    bimodule.field().modulus()
                )));
            }
        }
    }
    Ok(())
}

/// Check the cocycle law of `theta` against a validated bimodule.
pub fn validate_cocycle(bimodule: &DiscreteBimodule, theta: &[Vec<Vector>]) -> Result<CocycleReport> {
    check_theta_shape(bimodule, theta)?;
    let m = bimodule.dim_p();
    let mut report = CocycleReport::default();
    for i in 0..m {
        for j in 0..m {
            for jp in 0..m {
                let lhs = bimodule.left()[i].apply(&theta[j][jp])?;
                let rhs = bimodule.right()[jp].apply(&theta[i][j])?;
                if lhs != rhs {
                    report.violations.push((i, j, jp));
                }
            }
        }
    }
    Ok(report)
}

/// A bimodule together with a shape-checked (not yet law-checked) theta grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscreteCocycle {
    bimodule: DiscreteBimodule,
    theta: Vec<Vec<Vector>>,
}

impl DiscreteCocycle {
    pub fn new(bimodule: DiscreteBimodule, theta: Vec<Vec<Vector>>) -> Result<Self> {
        check_theta_shape(&bimodule, &theta)?;
        Ok(DiscreteCocycle { bimodule, theta })
    }

    pub fn bimodule(&self) -> &DiscreteBimodule {
        &self.bimodule
    }

    pub fn theta(&self) -> &[Vec<Vector>] {
        &self.theta
    }

    /// Theta flattened in (j, j', k) order; this is the coordinate convention
    /// shared with the cohomology solvers.
    pub fn theta_flat(&self) -> Vector {
        let n = self.bimodule.dim_v();
        let m = self.bimodule.dim_p();
        let mut coords = Vec::with_capacity(m * m * n);
        for row in &self.theta {
            for v in row {
                coords.extend_from_slice(v.coords());
            }
        }
        Vector::new(self.bimodule.field(), coords).expect("entries already reduced")
    }
}

/// A cocycle whose theta satisfies the cocycle law: everything needed to
/// build a metabelian algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetabelianDatum {
    cocycle: DiscreteCocycle,
}

impl MetabelianDatum {
    pub fn new(cocycle: DiscreteCocycle) -> Result<Self> {
        let report = validate_cocycle(cocycle.bimodule(), cocycle.theta())?;
        if !report.is_valid() {
            return Err(Error::InvalidDatum(format!(
                "cocycle law fails at (i, j, j') triples {:?}",
                report.violations
            )));
        }
        Ok(MetabelianDatum { cocycle })
    }

    pub fn from_parts(bimodule: DiscreteBimodule, theta: Vec<Vec<Vector>>) -> Result<Self> {
        MetabelianDatum::new(DiscreteCocycle::new(bimodule, theta)?)
    }

    pub fn cocycle(&self) -> &DiscreteCocycle {
        &self.cocycle
    }

    pub fn bimodule(&self) -> &DiscreteBimodule {
        self.cocycle.bimodule()
    }

    pub fn theta(&self) -> &[Vec<Vector>] {
        self.cocycle.theta()
    }

    pub fn field(&self) -> PrimeField {
        self.bimodule().field()
    }

    pub fn dim_p(&self) -> usize {
        self.bimodule().dim_p()
    }

    pub fn dim_v(&self) -> usize {
        self.bimodule().dim_v()
    }
}

/// Rebuild an m x m theta grid from its (j, j', k)-flattened coordinates.
pub fn theta_from_flat(
    field: PrimeField,
    dim_p: usize,
    dim_v: usize,
    flat: &Vector,
) -> Result<Vec<Vec<Vector>>> {
    let (m, n) = (dim_p, dim_v);
    if flat.field() != field || flat.dim() != m * m * n {
        return Err(Error::DimensionMismatch(format!(
            "flattened theta must have {} coordinates",
            m * m * n
        )));
    }
    let mut grid = Vec::with_capacity(m);
    for j in 0..m {
        let mut row = Vec::with_capacity(m);
        for jp in 0..m {
            let start = (j * m + jp) * n;
            row.push(
                Vector::new(field, flat.coords()[start..start + n].to_vec())
                    .expect("coordinates already reduced"),
            );
        }
        grid.push(row);
    }
    Ok(grid)
}

/// Structure constants of the product algebra on basis (p_1..p_m, x_1..x_n):
/// `p_j p_j' = theta[j][j']`, `p_j x_i = L_j x_i`, `x_i p_j = R_j x_i`, and
/// V-products vanish. No validity assumptions; used raw by the
/// associativity census and validated by [`metabelian_product`].
fn product_sc(
    m: usize,
    n: usize,
    right: &[Matrix],
    left: &[Matrix],
    theta: &[Vec<Vector>],
) -> Vec<u32> {
    let dim = m + n;
    let mut sc = vec![0u32; dim * dim * dim];
    for j in 0..m {
        for jp in 0..m {
            for k in 0..n {
                sc[(j * dim + jp) * dim + m + k] = theta[j][jp].get(k);
            }
        }
        for i in 0..n {
            for k in 0..n {
                sc[(j * dim + (m + i)) * dim + m + k] = left[j].get(k, i);
                sc[((m + i) * dim + j) * dim + m + k] = right[j].get(k, i);
            }
        }
    }
    sc
}

/// Build the extension algebra of a datum.
///
/// The result is always associative and metabelian; both facts are
/// re-checked and a failure is an internal error, never a verdict.
pub fn metabelian_product(datum: &MetabelianDatum) -> Result<ExtensionTriple> {
    let (m, n) = (datum.dim_p(), datum.dim_v());
    let sc = product_sc(m, n, datum.bimodule().right(), datum.bimodule().left(), datum.theta());
    let labels = (1..=m)
        .map(|j| format!("p{j}"))
        .chain((1..=n).map(|i| format!("x{i}")))
        .collect();
    let algebra = Algebra::new(datum.field(), m + n, sc)?.with_labels(labels)?;
    if !algebra.is_associative() {
        return Err(Error::InternalError("datum product failed associativity".into()));
    }
    if !algebra.is_metabelian()? {
        return Err(Error::InternalError("datum product failed the metabelian check".into()));
    }
    ExtensionTriple::new(algebra, m, n)
}

/// Tally for the datum-laws-versus-associativity sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IffReport {
    /// Number of raw (right, left, theta) triples scanned: p^(2 m n^2 + m^2 n).
    pub total: u128,
    /// How many give an associative product algebra.
    pub associative: u64,
    /// How many satisfy the bimodule and cocycle laws.
    pub valid_datums: u64,
    /// Candidates where the two verdicts differ; the claim under test is 0.
    pub disagreements: u64,
}

/// Sweep every raw action/theta triple of shape (dim_p, dim_v) and compare
/// "satisfies the datum laws" against "product algebra is associative".
///
/// This is the one place raw (unvalidated) products are formed.
pub fn associativity_iff_datum(
    dim_p: usize,
    dim_v: usize,
    field: PrimeField,
    budget: &Budget,
) -> Result<IffReport> {
    let (m, n) = (dim_p, dim_v);
    let digits = 2 * m * n * n + m * m * n;
    budget.admit_power(field.modulus() as u64, digits as u32)?;
    let p = field.modulus();
    let total = (p as u128).pow(digits as u32);

    let mut report = IffReport { total, associative: 0, valid_datums: 0, disagreements: 0 };
    let mut digits_vec = vec![0u32; digits];
    loop {
        // decode: right actions, then left actions, then theta rows
        let mut pos = 0;
        let take_matrix = |pos: &mut usize| {
            let mat = Matrix::new(field, n, n, digits_vec[*pos..*pos + n * n].to_vec())
                .expect("digits are reduced");
            *pos += n * n;
            mat
        };
        let right: Vec<Matrix> = (0..m).map(|_| take_matrix(&mut pos)).collect();
        let left: Vec<Matrix> = (0..m).map(|_| take_matrix(&mut pos)).collect();
        let mut theta = Vec::with_capacity(m);
        for _ in 0..m {
            let mut row = Vec::with_capacity(m);
            for _ in 0..m {
                let v = Vector::new(field, digits_vec[pos..pos + n].to_vec())
                    .expect("digits are reduced");
                pos += n;
                row.push(v);
            }
            theta.push(row);
        }

        let laws_hold = validate_bimodule(field, m, n, &right, &left)?.is_valid() && {
            // check the cocycle law directly on raw parts (the bimodule may
            // be invalid, in which case this branch is not reached)
            let bim = DiscreteBimodule { field, dim_p: m, dim_v: n, right: right.clone(), left: left.clone() };
            validate_cocycle(&bim, &theta)?.is_valid()
        };
        let assoc = Algebra::new(field, m + n, product_sc(m, n, &right, &left, &theta))?
            .is_associative();
        if laws_hold {
            report.valid_datums += 1;
        }
        if assoc {
            report.associative += 1;
        }
        if laws_hold != assoc {
            report.disagreements += 1;
        }

        // odometer, last digit fastest
        let mut idx = digits;
        loop {
            if idx == 0 {
                return Ok(report);
            }
            idx -= 1;
            digits_vec[idx] += 1;
            if digits_vec[idx] < p {
                break;
            }
            digits_vec[idx] = 0;
        }
    }
}

/// Result of splitting a metabelian algebra along its derived subalgebra.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub datum: MetabelianDatum,
    /// Basis-change witness: an algebra map from the datum product onto the
    /// original algebra, sending (p, x) to s(p) + x.
    pub iso: Matrix,
    /// Indices of the standard basis vectors chosen as the section of P.
    pub section_indices: Vec<usize>,
    /// Pivot columns of the derived subalgebra (V embeds along these).
    pub derived_pivots: Vec<usize>,
}

/// Coordinates of `w` (a member of the RREF-spanned subspace) in the
/// subspace basis: the coefficient of basis row t is `w[pivot_t]`.
fn coords_in(span: &Subspace, w: &Vector) -> Vector {
    debug_assert!(span.contains(w));
    let coords = span.pivots().iter().map(|&piv| w.get(piv)).collect();
    Vector::new(span.field(), coords).expect("extracted entries are reduced")
}

/// Split a metabelian algebra as an extension over its derived subalgebra.
///
/// V is the derived subalgebra in its canonical basis; the section of the
/// quotient P is greedy, taking the lowest-index standard basis vectors that
/// stay independent from V. The returned witness always satisfies
/// `a.rebase(iso) == product(datum)`, so the round trip is exact, not merely
/// up to equivalence.
pub fn decompose(a: &Algebra) -> Result<Decomposition> {
    if !a.is_metabelian()? {
        return Err(Error::NotMetabelian);
    }
    let field = a.field();
    let dim = a.dim();
    let derived = a.derived_subalgebra();
    let n = derived.dim();
    let m = dim - n;

    let mut section = Vec::with_capacity(m);
    let mut span = derived.clone();
    for t in 0..dim {
        if span.dim() == dim {
            break;
        }
        let e = Vector::basis(field, dim, t);
        if !span.contains(&e) {
            span = span.sum(&Subspace::from_spanning(field, dim, &[e])?)?;
            section.push(t);
        }
    }
    debug_assert_eq!(section.len(), m);

    let section_vec = |j: usize| Vector::basis(field, dim, section[j]);
    let mut right = Vec::with_capacity(m);
    let mut left = Vec::with_capacity(m);
    for j in 0..m {
        let s = section_vec(j);
        let mut r = Matrix::zero(field, n, n);
        let mut l = Matrix::zero(field, n, n);
        for (k, w) in derived.basis().iter().enumerate() {
            let xr = coords_in(&derived, &a.multiply(w, &s)?);
            let xl = coords_in(&derived, &a.multiply(&s, w)?);
            for row in 0..n {
                r.set(row, k, xr.get(row));
                l.set(row, k, xl.get(row));
            }
        }
        right.push(r);
        left.push(l);
    }
    let mut theta = Vec::with_capacity(m);
    for j in 0..m {
        let mut row = Vec::with_capacity(m);
        for jp in 0..m {
            row.push(coords_in(&derived, &a.multiply(&section_vec(j), &section_vec(jp))?));
        }
        theta.push(row);
    }

    let bimodule = DiscreteBimodule::new(field, m, n, right, left).map_err(|e| {
        Error::InternalError(format!("decomposition produced an invalid bimodule: {e}"))
    })?;
    let datum = MetabelianDatum::from_parts(bimodule, theta).map_err(|e| {
        Error::InternalError(format!("decomposition produced an invalid datum: {e}"))
    })?;

    let mut iso = Matrix::zero(field, dim, dim);
    for j in 0..m {
        iso.set(section[j], j, 1);
    }
    for (k, w) in derived.basis().iter().enumerate() {
        for row in 0..dim {
            iso.set(row, m + k, w.get(row));
        }
    }
    let product = metabelian_product(&datum)?;
    if !iso.is_invertible() || !is_algebra_map(&iso, product.total(), a) {
        return Err(Error::InternalError(
            "decomposition witness is not an isomorphism onto the input".into(),
        ));
    }
    debug_assert_eq!(&a.rebase(&iso)?, product.total());

    Ok(Decomposition { datum, iso, section_indices: section, derived_pivots: derived.pivots().to_vec() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn skew_theta_datum(p: u32) -> MetabelianDatum {
        // dim P = 2, dim V = 1, trivial actions, theta = [[0, 1], [-1, 0]]
        let field = f(p);
        let bim = DiscreteBimodule::trivial(field, 2, 1);
        let v = |c: i64| Vector::new(field, vec![field.from_signed(c)]).unwrap();
        let theta = vec![vec![v(0), v(1)], vec![v(-1), v(0)]];
        MetabelianDatum::from_parts(bim, theta).unwrap()
    }

    #[test]
    fn trivial_bimodule_accepts_any_theta() {
        let field = f(3);
        let bim = DiscreteBimodule::trivial(field, 2, 2);
        let theta: Vec<Vec<Vector>> = (0..2)
            .map(|j| (0..2).map(|jp| Vector::new(field, vec![j as u32, jp as u32]).unwrap()).collect())
            .collect();
        assert!(validate_cocycle(&bim, &theta).unwrap().is_valid());
    }

    #[test]
    fn bimodule_law_violation_is_reported_and_rejected() {
        let field = f(2);
        let r = Matrix::identity(field, 1);
        let report =
            validate_bimodule(field, 1, 1, &[r.clone()], &[Matrix::zero(field, 1, 1)]).unwrap();
        assert_eq!(report.right_composition_violations, vec![(0, 0)]);
        assert!(!report.is_valid());
        let err = DiscreteBimodule::new(field, 1, 1, vec![r], vec![Matrix::zero(field, 1, 1)])
            .unwrap_err();
        assert!(matches!(err, Error::InvalidBimodule(_)));
    }

    #[test]
    fn cocycle_law_violation_detected() {
        // L_1 = E_12, R_1 = 0: law forces the second theta coordinate to vanish
        let field = f(2);
        let l = Matrix::from_rows(field, &[vec![0, 1], vec![0, 0]]).unwrap();
        let bim = DiscreteBimodule::new(field, 1, 2, vec![Matrix::zero(field, 2, 2)], vec![l])
            .unwrap();
        let good = vec![vec![Vector::new(field, vec![1, 0]).unwrap()]];
        let bad = vec![vec![Vector::new(field, vec![0, 1]).unwrap()]];
        assert!(validate_cocycle(&bim, &good).unwrap().is_valid());
        let report = validate_cocycle(&bim, &bad).unwrap();
        assert_eq!(report.violations, vec![(0, 0, 0)]);
        assert!(matches!(
            MetabelianDatum::from_parts(bim, bad),
            Err(Error::InvalidDatum(_))
        ));
    }

    #[test]
    fn product_of_skew_datum_is_the_sign_flip_algebra() {
        let triple = metabelian_product(&skew_theta_datum(3)).unwrap();
        let a = triple.total();
        assert_eq!(a.dim(), 3);
        // p1 p2 = x1, p2 p1 = -x1, everything else zero
        assert_eq!(a.structure_constant(0, 1, 2), 1);
        assert_eq!(a.structure_constant(1, 0, 2), 2);
        assert!(a.is_metabelian().unwrap());
        assert_eq!(a.derived_subalgebra().dim(), 1);
    }

    #[test]
    fn iff_sweep_dim_1_1() {
        for (p, total, valid) in [(2u32, 8u128, 2u64), (3, 27, 3)] {
            let report = associativity_iff_datum(1, 1, f(p), &Budget::default()).unwrap();
            assert_eq!(report.total, total);
            assert_eq!(report.valid_datums, valid);
            assert_eq!(report.associative, valid);
            assert_eq!(report.disagreements, 0);
        }
    }

    #[test]
    fn iff_sweep_dim_1_2_over_f2() {
        let report = associativity_iff_datum(1, 2, f(2), &Budget::default()).unwrap();
        assert_eq!(report.total, 1024);
        assert_eq!(report.valid_datums, 28);
        assert_eq!(report.associative, 28);
        assert_eq!(report.disagreements, 0);
    }

    #[test]
    fn decompose_sign_flip_algebra() {
        let product = metabelian_product(&skew_theta_datum(3)).unwrap();
        let dec = decompose(product.total()).unwrap();
        assert_eq!(dec.datum.dim_p(), 2);
        assert_eq!(dec.datum.dim_v(), 1);
        assert!(dec.datum.bimodule().is_trivial());
        assert_eq!(dec.section_indices, vec![0, 1]);
        // theta reproduced exactly: the derived subalgebra is span{x1}
        assert_eq!(dec.datum.theta()[0][1].get(0), 1);
        assert_eq!(dec.datum.theta()[1][0].get(0), 2);
    }

    #[test]
    fn decompose_truncated_polynomial_line() {
        // basis (t, t^2, t^3) in t k[t]/(t^4)
        let field = f(2);
        let mut sc = vec![0u32; 27];
        sc[(0 * 3 + 0) * 3 + 1] = 1;
        sc[(0 * 3 + 1) * 3 + 2] = 1;
        sc[(1 * 3 + 0) * 3 + 2] = 1;
        let a = Algebra::new(field, 3, sc).unwrap();
        let dec = decompose(&a).unwrap();
        assert_eq!(dec.section_indices, vec![0]);
        assert_eq!(dec.derived_pivots, vec![1, 2]);
        let shift = Matrix::from_rows(field, &[vec![0, 0], vec![1, 0]]).unwrap();
        assert_eq!(dec.datum.bimodule().right()[0], shift);
        assert_eq!(dec.datum.bimodule().left()[0], shift);
        assert_eq!(dec.datum.theta()[0][0], Vector::new(field, vec![1, 0]).unwrap());
    }

    #[test]
    fn decompose_abelian_has_zero_derived_part() {
        let a = Algebra::abelian(f(5), 2);
        let dec = decompose(&a).unwrap();
        assert_eq!(dec.datum.dim_p(), 2);
        assert_eq!(dec.datum.dim_v(), 0);
        let product = metabelian_product(&dec.datum).unwrap();
        assert_eq!(product.total(), &a);
    }

    #[test]
    fn decompose_refuses_non_metabelian() {
        let idem = Algebra::new(f(2), 1, vec![1]).unwrap();
        assert!(matches!(decompose(&idem), Err(Error::NotMetabelian)));
    }

    #[test]
    fn decompose_round_trip_is_exact_on_rebased_input() {
        // start from a datum product, shuffle the basis, decompose, compare
        let product = metabelian_product(&skew_theta_datum(3)).unwrap();
        let c = Matrix::from_rows(
            f(3),
            &[vec![0, 1, 1], vec![1, 0, 2], vec![0, 0, 1]],
        )
        .unwrap();
        let shuffled = product.total().rebase(&c).unwrap();
        let dec = decompose(&shuffled).unwrap();
        let rebuilt = metabelian_product(&dec.datum).unwrap();
        assert_eq!(&shuffled.rebase(&dec.iso).unwrap(), rebuilt.total());
    }
}
