//! Algebras with a one-dimensional derived part: the family `P_theta`.
//!
//! A bilinear form theta on F_p^n determines the algebra on basis
//! (F_1..F_n, E) with `F_i F_j = theta[i][j] E` and E annihilating
//! everything. Isomorphism of two such algebras is governed by homothety of
//! forms (congruence up to a unit scalar), and the automorphism group is a
//! structured group of triples (u, lambda, psi). This module implements the
//! form-level searches, the triple group with its law verified, and a small
//! catalog of named form and algebra families.

use crate::algebra::{Algebra, find_isomorphism_with};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::linalg::{Matrix, Vector, gl_enumerate};
use std::collections::HashSet;

/// A bilinear form on F_p^n, stored as its Gram matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BilinearForm {
    matrix: Matrix,
}

impl BilinearForm {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if matrix.rows() != matrix.cols() {
            return Err(Error::DimensionMismatch("a bilinear form needs a square matrix".into()));
        }
        Ok(BilinearForm { matrix })
    }

    pub fn from_signed_rows(field: PrimeField, rows: &[Vec<i64>]) -> Result<Self> {
        BilinearForm::new(Matrix::from_signed_rows(field, rows)?)
    }

    pub fn field(&self) -> PrimeField {
        self.matrix.field()
    }

    pub fn n(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// theta(p, q) as a scalar.
    pub fn evaluate(&self, p: &Vector, q: &Vector) -> Result<u32> {
        let image = self.matrix.apply(q)?;
        if p.dim() != self.n() || p.field() != self.field() {
            return Err(Error::DimensionMismatch("form arguments of the wrong dimension".into()));
        }
        let field = self.field();
        let mut acc = 0u32;
        for i in 0..self.n() {
            acc = field.add(acc, field.mul(p.get(i), image.get(i)));
        }
        Ok(acc)
    }

    /// The pulled-back form theta(c., c.), with Gram matrix c^T theta c.
    fn pullback(&self, c: &Matrix) -> Matrix {
        self.matrix
            .mul(c)
            .and_then(|tc| c.transpose().mul(&tc))
            .expect("square shapes agree")
    }
}

/// The algebra on (F_1..F_n, E) with `F_i F_j = theta[i][j] E`.
///
/// Its derived subalgebra is spanned by E when theta is nonzero and vanishes
/// otherwise; both facts are re-checked, as is metabelianity.
pub fn build_p_theta(theta: &BilinearForm) -> Result<Algebra> {
    let n = theta.n();
    let dim = n + 1;
    let mut sc = vec![0u32; dim * dim * dim];
    for i in 0..n {
        for j in 0..n {
            sc[(i * dim + j) * dim + n] = theta.matrix().get(i, j);
        }
    }
    let labels = (1..=n).map(|i| format!("F{i}")).chain(["E".to_string()]).collect();
    let algebra = Algebra::new(theta.field(), dim, sc)?.with_labels(labels)?;
    if !algebra.is_metabelian()? {
        return Err(Error::InternalError("form algebra failed the metabelian check".into()));
    }
    let expected_derived = usize::from(!theta.is_zero());
    if algebra.derived_subalgebra().dim() != expected_derived {
        return Err(Error::InternalError("form algebra has the wrong derived dimension".into()));
    }
    Ok(algebra)
}

/// A unit u and a basis change c with `u theta_1 = c^T theta_2 c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomothetyWitness {
    pub u: u32,
    pub c: Matrix,
}

fn check_same_shape(t1: &BilinearForm, t2: &BilinearForm) -> Result<()> {
    if t1.field() != t2.field() || t1.n() != t2.n() {
        return Err(Error::DimensionMismatch(
            "forms must share dimension and field".into(),
        ));
    }
    Ok(())
}

fn homothetic_with(gl: &[Matrix], t1: &BilinearForm, t2: &BilinearForm) -> Option<HomothetyWitness> {
    let field = t1.field();
    for u in field.units() {
        let scaled = t1.matrix().scale(u);
        for c in gl {
            if t2.pullback(c) == scaled {
                return Some(HomothetyWitness { u, c: c.clone() });
            }
        }
    }
    None
}

/// Search for a homothety from `t1` to `t2`: the witness with the smallest
/// unit, then the smallest basis-change encoding.
pub fn homothetic(
    t1: &BilinearForm,
    t2: &BilinearForm,
    budget: &Budget,
) -> Result<Option<HomothetyWitness>> {
    check_same_shape(t1, t2)?;
    let field = t1.field();
    let n = t1.n();
    budget.admit(
        (field.modulus() as u128 - 1).saturating_mul((field.modulus() as u128).pow((n * n) as u32)),
    )?;
    let gl: Vec<Matrix> = gl_enumerate(n, field, budget)?.collect();
    Ok(homothetic_with(&gl, t1, t2))
}

/// Search for an isometry (a homothety with unit 1).
pub fn isometric(t1: &BilinearForm, t2: &BilinearForm, budget: &Budget) -> Result<Option<Matrix>> {
    check_same_shape(t1, t2)?;
    for c in gl_enumerate(t1.n(), t1.field(), budget)? {
        if t2.pullback(&c) == *t1.matrix() {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

/// Tally of the agreement sweep between form homothety and algebra
/// isomorphism over every ordered pair of n x n forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AgreementReport {
    pub total_pairs: u64,
    /// Pairs where the homothety verdict and the brute-force algebra
    /// isomorphism verdict differ; the claim under test is 0.
    pub disagreements: u64,
    /// Pairs where the isometry verdict differs from the homothety verdict
    /// (possible only when the field has more than one unit).
    pub isometry_differing_pairs: u64,
    pub class_count: usize,
    /// Homothety class sizes, ascending.
    pub class_sizes: Vec<usize>,
}

/// For every ordered pair of forms on F_p^n, decide homothety on the form
/// side and isomorphism on the algebra side independently, and report how
/// often they disagree.
pub fn homothety_iso_agreement(
    n: usize,
    field: PrimeField,
    budget: &Budget,
) -> Result<AgreementReport> {
    let p = field.modulus();
    let form_count = (p as u128).pow((n * n) as u32);
    budget.admit(form_count.saturating_mul(form_count))?;
    let gl_forms: Vec<Matrix> = gl_enumerate(n, field, budget)?.collect();
    let gl_algebras: Vec<Matrix> = gl_enumerate(n + 1, field, budget)?.collect();

    let forms: Vec<BilinearForm> = (0..form_count)
        .map(|code| {
            BilinearForm::new(Matrix::from_encoding(field, n, n, code).expect("code in range"))
                .expect("square")
        })
        .collect();
    let algebras: Vec<Algebra> =
        forms.iter().map(build_p_theta).collect::<Result<_>>()?;

    let mut report = AgreementReport {
        total_pairs: (forms.len() * forms.len()) as u64,
        disagreements: 0,
        isometry_differing_pairs: 0,
        class_count: 0,
        class_sizes: Vec::new(),
    };
    for (i, t1) in forms.iter().enumerate() {
        for (j, t2) in forms.iter().enumerate() {
            let hom = homothetic_with(&gl_forms, t1, t2).is_some();
            let isom = gl_forms.iter().any(|c| t2.pullback(c) == *t1.matrix());
            let iso = find_isomorphism_with(&gl_algebras, &algebras[i], &algebras[j]).is_some();
            if hom != iso {
                report.disagreements += 1;
            }
            if hom != isom {
                report.isometry_differing_pairs += 1;
            }
        }
    }

    // homothety classes by greedy assignment against the first matching rep
    let mut reps: Vec<usize> = Vec::new();
    let mut sizes: Vec<usize> = Vec::new();
    for (i, form) in forms.iter().enumerate() {
        match reps
            .iter()
            .position(|&r| homothetic_with(&gl_forms, &forms[r], form).is_some())
        {
            Some(k) => sizes[k] += 1,
            None => {
                reps.push(i);
                sizes.push(1);
            }
        }
    }
    sizes.sort_unstable();
    report.class_count = reps.len();
    report.class_sizes = sizes;
    Ok(report)
}

/// Element of the structured automorphism group of a nonzero form algebra:
/// realized as `(p, x) -> (psi p, lambda(p) + u x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GElement {
    pub u: u32,
    pub lambda: Vector,
    pub psi: Matrix,
}

impl GElement {
    fn key(&self) -> (u32, u128, u128) {
        (self.u, self.lambda.encoding(), self.psi.encoding())
    }
}

pub fn g_identity(field: PrimeField, n: usize) -> GElement {
    GElement { u: 1, lambda: Vector::zero(field, n), psi: Matrix::identity(field, n) }
}

/// Group law: `(u, l, s) . (u', l', s') = (u u', l o s' + u l', s s')`.
pub fn g_law(g1: &GElement, g2: &GElement) -> Result<GElement> {
    let field = g1.psi.field();
    if g2.psi.field() != field || g1.psi.rows() != g2.psi.rows() {
        return Err(Error::DimensionMismatch("group elements of different shapes".into()));
    }
    let composed = g2.psi.transpose().apply(&g1.lambda)?; // lambda o psi'
    let lambda = composed.add(&g2.lambda.scale(g1.u))?;
    Ok(GElement { u: field.mul(g1.u, g2.u), lambda, psi: g1.psi.mul(&g2.psi)? })
}

pub fn g_inverse(g: &GElement) -> Result<GElement> {
    let field = g.psi.field();
    let u_inv = field
        .inv(g.u)
        .ok_or_else(|| Error::InvalidParams("group element with non-unit scalar".into()))?;
    let psi_inv = g
        .psi
        .inverse()
        .ok_or_else(|| Error::InvalidParams("group element with singular psi".into()))?;
    let lambda = psi_inv.transpose().apply(&g.lambda)?.scale(field.neg(u_inv));
    Ok(GElement { u: u_inv, lambda, psi: psi_inv })
}

/// The (n+1) x (n+1) matrix of the map `(p, x) -> (psi p, lambda(p) + u x)`.
pub fn g_realize(g: &GElement) -> Matrix {
    let n = g.psi.rows();
    let field = g.psi.field();
    let mut mat = Matrix::zero(field, n + 1, n + 1);
    for j in 0..n {
        for i in 0..n {
            mat.set(i, j, g.psi.get(i, j));
        }
        mat.set(n, j, g.lambda.get(j));
    }
    mat.set(n, n, g.u);
    mat
}

/// Enumerate the structured group of a nonzero form: all (u, lambda, psi)
/// with `u theta = psi^T theta psi`, ordered by u, then psi encoding, then
/// lambda encoding.
///
/// The zero form is rejected: there the scalar of an automorphism is not
/// pinned down by theta and the triple law does not describe Aut. The
/// returned list is verified to contain the identity and to be closed under
/// the law and inversion.
pub fn aut_group_g(theta: &BilinearForm, budget: &Budget) -> Result<Vec<GElement>> {
    if theta.is_zero() {
        return Err(Error::InvalidParams(
            "the structured group is defined only for nonzero forms".into(),
        ));
    }
    let field = theta.field();
    let n = theta.n();
    let p = field.modulus() as u128;
    budget.admit((p - 1).saturating_mul(p.pow((n * n) as u32)).saturating_mul(p.pow(n as u32)))?;

    let gl: Vec<Matrix> = gl_enumerate(n, field, budget)?.collect();
    let lambda_count = (field.modulus() as u64).pow(n as u32);
    let mut elements = Vec::new();
    for u in field.units() {
        let scaled = theta.matrix().scale(u);
        for psi in &gl {
            if theta.pullback(psi) != scaled {
                continue;
            }
            for code in 0..lambda_count {
                let lambda = Vector::from_encoding(field, n, code as u128)?;
                elements.push(GElement { u, lambda, psi: psi.clone() });
            }
        }
    }

    budget.admit((elements.len() as u128).saturating_mul(elements.len() as u128))?;
    let keys: HashSet<(u32, u128, u128)> = elements.iter().map(GElement::key).collect();
    if !keys.contains(&g_identity(field, n).key()) {
        return Err(Error::InternalError("structured group misses the identity".into()));
    }
    for g in &elements {
        if !keys.contains(&g_inverse(g)?.key()) {
            return Err(Error::InternalError("structured group not closed under inversion".into()));
        }
        for h in &elements {
            if !keys.contains(&g_law(g, h)?.key()) {
                return Err(Error::InternalError("structured group not closed under the law".into()));
            }
        }
    }
    Ok(elements)
}

/// A named catalog member: a formal family instantiated over a field, with
/// its Gram matrix when the family is form-shaped.
#[derive(Debug, Clone)]
pub struct CatalogItem {
    pub family: String,
    pub params: Vec<(char, u32)>,
    pub form: Option<BilinearForm>,
    pub algebra: Algebra,
}

pub const CATALOG_FAMILIES: &[&str] = &[
    "n2:theta_ab",
    "n2:theta_skew",
    "n3:theta1_ab",
    "n3:theta2_ab",
    "n3:theta3",
    "n3:theta4",
    "n3:theta5",
    "n3:theta6",
    "alg3:k3_ab",
    "alg3:k3_minus1",
    "alg4:k4_1",
    "alg4:k4_2",
    "alg4:k4_3",
    "alg4:k4_4",
    "alg4:k4_5",
    "alg4:k4_6",
];

fn needs_params(family: &str) -> bool {
    matches!(
        family,
        "n2:theta_ab" | "n3:theta1_ab" | "n3:theta2_ab" | "alg3:k3_ab" | "alg4:k4_1" | "alg4:k4_2"
    )
}

/// Algebra on (F_1..F_n, E) from a list of products `F_i F_j = coef E`.
fn span_algebra(field: PrimeField, n: usize, products: &[(usize, usize, i64)]) -> Result<Algebra> {
    let dim = n + 1;
    let mut sc = vec![0u32; dim * dim * dim];
    for &(i, j, coef) in products {
        sc[(i * dim + j) * dim + n] = field.from_signed(coef);
    }
    let labels = (1..=n).map(|i| format!("F{i}")).chain(["E".to_string()]).collect();
    Algebra::new(field, dim, sc)?.with_labels(labels)
}

/// Instantiate a named family. Parametric families require both `a` and `b`;
/// the rest reject parameters.
pub fn catalog(
    family: &str,
    field: PrimeField,
    a: Option<i64>,
    b: Option<i64>,
) -> Result<CatalogItem> {
    if !CATALOG_FAMILIES.contains(&family) {
        return Err(Error::UnknownFamily(family.to_string()));
    }
    let parametric = needs_params(family);
    if parametric && (a.is_none() || b.is_none()) {
        return Err(Error::InvalidParams(format!(
            "family {family} requires parameters a and b"
        )));
    }
    if !parametric && (a.is_some() || b.is_some()) {
        return Err(Error::InvalidParams(format!("family {family} takes no parameters")));
    }
    let av = field.from_signed(a.unwrap_or(0)) as i64;
    let bv = field.from_signed(b.unwrap_or(0)) as i64;

    let form_rows: Option<Vec<Vec<i64>>> = match family {
        "n2:theta_ab" => Some(vec![vec![1, av], vec![bv, 0]]),
        "n2:theta_skew" => Some(vec![vec![0, 1], vec![-1, 0]]),
        "n3:theta1_ab" => Some(vec![vec![1, 0, 0], vec![0, 1, av], vec![0, bv, 0]]),
        "n3:theta2_ab" => Some(vec![vec![0, 0, 0], vec![0, 1, av], vec![0, bv, 0]]),
        "n3:theta3" => Some(vec![vec![1, 0, 0], vec![0, 0, 1], vec![0, -1, 0]]),
        "n3:theta4" => Some(vec![vec![0, 0, 0], vec![0, 0, 1], vec![0, -1, 0]]),
        "n3:theta5" => Some(vec![vec![0, 1, 0], vec![0, 0, 1], vec![0, -1, 0]]),
        "n3:theta6" => Some(vec![vec![1, 1, 0], vec![0, 1, 1], vec![0, 1, 0]]),
        _ => None,
    };

    let (form, algebra) = match form_rows {
        Some(rows) => {
            let form = BilinearForm::from_signed_rows(field, &rows)?;
            let algebra = build_p_theta(&form)?;
            (Some(form), algebra)
        }
        None => {
            let algebra = match family {
                "alg3:k3_ab" => {
                    span_algebra(field, 2, &[(0, 0, 1), (0, 1, av), (1, 0, bv)])?
                }
                "alg3:k3_minus1" => span_algebra(field, 2, &[(0, 1, 1), (1, 0, -1)])?,
                "alg4:k4_1" => span_algebra(
                    field,
                    3,
                    &[(0, 0, 1), (1, 1, 1), (1, 2, av), (2, 1, bv)],
                )?,
                "alg4:k4_2" => {
                    span_algebra(field, 3, &[(1, 1, 1), (1, 2, av), (2, 1, bv)])?
                }
                "alg4:k4_3" => span_algebra(field, 3, &[(0, 0, 1), (1, 2, 1), (2, 1, -1)])?,
                "alg4:k4_4" => span_algebra(field, 3, &[(1, 2, 1), (2, 1, -1)])?,
                "alg4:k4_5" => span_algebra(field, 3, &[(0, 1, 1), (1, 2, 1), (2, 1, -1)])?,
                "alg4:k4_6" => span_algebra(
                    field,
                    3,
                    &[(0, 0, 1), (0, 1, 1), (1, 1, 1), (1, 2, 1), (2, 1, 1)],
                )?,
                _ => unreachable!("family list is exhaustive"),
            };
            (None, algebra)
        }
    };

    let mut params = Vec::new();
    if parametric {
        params.push(('a', field.from_signed(a.unwrap())));
        params.push(('b', field.from_signed(b.unwrap())));
    }
    Ok(CatalogItem { family: family.to_string(), params, form, algebra })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{automorphism_group, is_algebra_map};

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn line_form(p: u32, c: i64) -> BilinearForm {
        BilinearForm::from_signed_rows(f(p), &[vec![c]]).unwrap()
    }

    #[test]
    fn p_theta_of_skew_form_is_the_sign_flip_algebra() {
        let theta = BilinearForm::from_signed_rows(f(3), &[vec![0, 1], vec![-1, 0]]).unwrap();
        let a = build_p_theta(&theta).unwrap();
        assert_eq!(a.structure_constant(0, 1, 2), 1);
        assert_eq!(a.structure_constant(1, 0, 2), 2);
        assert_eq!(a.derived_subalgebra().dim(), 1);
    }

    #[test]
    fn scaled_line_forms_homothetic_but_not_isometric_over_f3() {
        let t1 = line_form(3, 1);
        let t2 = line_form(3, 2);
        let w = homothetic(&t1, &t2, &Budget::default()).unwrap().unwrap();
        assert_eq!(w.u, 2);
        assert!(isometric(&t1, &t2, &Budget::default()).unwrap().is_none());
        // self-homothety picks the smallest witness: u = 1, c = identity
        let w = homothetic(&t1, &t1, &Budget::default()).unwrap().unwrap();
        assert_eq!((w.u, w.c), (1, Matrix::identity(f(3), 1)));
    }

    #[test]
    fn homothety_witness_scales_the_form() {
        let t1 = BilinearForm::from_signed_rows(f(3), &[vec![1, 1], vec![0, 1]]).unwrap();
        let t2 = BilinearForm::from_signed_rows(f(3), &[vec![2, 0], vec![1, 2]]).unwrap();
        if let Some(w) = homothetic(&t1, &t2, &Budget::default()).unwrap() {
            assert_eq!(t2.pullback(&w.c), t1.matrix().scale(w.u));
        }
    }

    #[test]
    fn agreement_line_forms_over_f3() {
        let report = homothety_iso_agreement(1, f(3), &Budget::default()).unwrap();
        assert_eq!(report.total_pairs, 9);
        assert_eq!(report.disagreements, 0);
        assert_eq!(report.isometry_differing_pairs, 2);
        assert_eq!(report.class_count, 2);
        assert_eq!(report.class_sizes, vec![1, 2]);
    }

    #[test]
    fn agreement_plane_forms_over_f2() {
        let report = homothety_iso_agreement(2, f(2), &Budget::default()).unwrap();
        assert_eq!(report.total_pairs, 256);
        assert_eq!(report.disagreements, 0);
        // one unit, so homothety and isometry cannot differ
        assert_eq!(report.isometry_differing_pairs, 0);
        assert_eq!(report.class_count, 6);
        assert_eq!(report.class_sizes, vec![1, 1, 2, 3, 3, 6]);
    }

    #[test]
    fn structured_group_of_identity_form_over_f2() {
        let theta = BilinearForm::from_signed_rows(f(2), &[vec![1, 0], vec![0, 1]]).unwrap();
        let group = aut_group_g(&theta, &Budget::default()).unwrap();
        assert_eq!(group.len(), 8);
        let auts = automorphism_group(&build_p_theta(&theta).unwrap(), &Budget::default()).unwrap();
        assert_eq!(auts.len(), 8);
        // realization is an injective map into the automorphism group
        let aut_codes: HashSet<u128> = auts.iter().map(Matrix::encoding).collect();
        let realized: HashSet<u128> = group.iter().map(|g| g_realize(g).encoding()).collect();
        assert_eq!(realized.len(), group.len());
        assert!(realized.is_subset(&aut_codes));
    }

    #[test]
    fn structured_group_rejects_zero_form() {
        let zero = BilinearForm::new(Matrix::zero(f(2), 2, 2)).unwrap();
        assert!(matches!(
            aut_group_g(&zero, &Budget::default()),
            Err(Error::InvalidParams(_))
        ));
    }

    #[test]
    fn law_matches_matrix_composition() {
        let theta = BilinearForm::from_signed_rows(f(2), &[vec![1, 0], vec![0, 1]]).unwrap();
        let group = aut_group_g(&theta, &Budget::default()).unwrap();
        for g in &group {
            assert_eq!(g_realize(&g_inverse(g).unwrap()), g_realize(g).inverse().unwrap());
            for h in &group {
                let composed = g_law(g, h).unwrap();
                assert_eq!(
                    g_realize(&composed),
                    g_realize(g).mul(&g_realize(h)).unwrap()
                );
            }
        }
        let id = g_identity(f(2), 2);
        assert_eq!(g_realize(&id), Matrix::identity(f(2), 3));
    }

    #[test]
    fn realized_elements_are_automorphisms() {
        let theta = BilinearForm::from_signed_rows(f(3), &[vec![1, 1], vec![0, 2]]).unwrap();
        let a = build_p_theta(&theta).unwrap();
        for g in aut_group_g(&theta, &Budget::default()).unwrap() {
            assert!(is_algebra_map(&g_realize(&g), &a, &a));
        }
    }

    #[test]
    fn catalog_form_and_algebra_families_agree() {
        for p in [2u32, 3] {
            let field = f(p);
            for a in 0..p as i64 {
                for b in 0..p as i64 {
                    let form_item = catalog("n2:theta_ab", field, Some(a), Some(b)).unwrap();
                    let alg_item = catalog("alg3:k3_ab", field, Some(a), Some(b)).unwrap();
                    assert_eq!(form_item.algebra, alg_item.algebra);
                }
            }
            let skew = catalog("n2:theta_skew", field, None, None).unwrap();
            let minus1 = catalog("alg3:k3_minus1", field, None, None).unwrap();
            assert_eq!(skew.algebra, minus1.algebra);
        }
    }

    #[test]
    fn catalog_rejects_bad_requests() {
        assert!(matches!(
            catalog("n5:mystery", f(2), None, None),
            Err(Error::UnknownFamily(_))
        ));
        assert!(matches!(
            catalog("n2:theta_ab", f(2), Some(1), None),
            Err(Error::InvalidParams(_))
        ));
        assert!(matches!(
            catalog("n3:theta3", f(2), Some(1), Some(0)),
            Err(Error::InvalidParams(_))
        ));
    }

    #[test]
    fn catalog_members_are_metabelian() {
        for family in CATALOG_FAMILIES {
            let item = if needs_params(family) {
                catalog(family, f(3), Some(1), Some(2)).unwrap()
            } else {
                catalog(family, f(3), None, None).unwrap()
            };
            assert!(item.algebra.is_metabelian().unwrap(), "family {family}");
        }
    }
}
