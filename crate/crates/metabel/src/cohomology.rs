//! Second cohomology of a discrete bimodule and the extension catalog
//! built on it.
//!
//! Theta grids are flattened in (j, j', k) order. The cocycle space is the
//! kernel of the linearized cocycle law and the coboundary space is the
//! image of the differential `(dr)[j][j'] = L_j r_j' + R_j' r_j`; both are
//! solved exactly, never enumerated. Class representatives are the lex-least
//! members of their cosets, so catalogs are reproducible byte for byte.

use crate::algebra::ExtensionTriple;
use crate::budget::Budget;
use crate::datum::{DiscreteBimodule, DiscreteCocycle, MetabelianDatum, metabelian_product};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::linalg::{Matrix, QuotientSpace, Subspace, Vector, image, kernel};

fn flat_index(m: usize, n: usize, j: usize, jp: usize, k: usize) -> usize {
    debug_assert!(j < m && jp < m && k < n);
    (j * m + jp) * n + k
}

/// Matrix of the cocycle law: rows are (i, j, j', c) conditions, columns are
/// flattened theta coordinates.
fn cocycle_condition_matrix(bim: &DiscreteBimodule) -> Matrix {
    let (m, n) = (bim.dim_p(), bim.dim_v());
    let field = bim.field();
    let mut mat = Matrix::zero(field, m * m * m * n, m * m * n);
    for i in 0..m {
        for j in 0..m {
            for jp in 0..m {
                for c in 0..n {
                    let row = ((i * m + j) * m + jp) * n + c;
                    for d in 0..n {
                        // + L_i acting on theta[j][j']
                        let col = flat_index(m, n, j, jp, d);
                        let val = field.add(mat.get(row, col), bim.left()[i].get(c, d));
                        mat.set(row, col, val);
                        // - R_j' acting on theta[i][j]
                        let col = flat_index(m, n, i, j, d);
                        let val = field.sub(mat.get(row, col), bim.right()[jp].get(c, d));
                        mat.set(row, col, val);
                    }
                }
            }
        }
    }
    mat
}

/// Matrix of the differential r -> dr, from flattened r (index j*n + k) to
/// flattened theta coordinates.
fn differential_matrix(bim: &DiscreteBimodule) -> Matrix {
    let (m, n) = (bim.dim_p(), bim.dim_v());
    let field = bim.field();
    let mut mat = Matrix::zero(field, m * m * n, m * n);
    for j in 0..m {
        for jp in 0..m {
            for c in 0..n {
                let row = flat_index(m, n, j, jp, c);
                for d in 0..n {
                    let col = jp * n + d;
                    let val = field.add(mat.get(row, col), bim.left()[j].get(c, d));
                    mat.set(row, col, val);
                    let col = j * n + d;
                    let val = field.add(mat.get(row, col), bim.right()[jp].get(c, d));
                    mat.set(row, col, val);
                }
            }
        }
    }
    mat
}

/// All flattened thetas satisfying the cocycle law, as a canonical subspace.
pub fn cocycle_space(bim: &DiscreteBimodule) -> Subspace {
    kernel(&cocycle_condition_matrix(bim))
}

/// All differentials of linear maps r: P -> V, as a canonical subspace.
pub fn coboundary_space(bim: &DiscreteBimodule) -> Subspace {
    image(&differential_matrix(bim))
}

/// The second cohomology of a bimodule: cocycles modulo coboundaries, with
/// lex-least class representatives.
#[derive(Debug, Clone)]
pub struct CohomologyGroup {
    bimodule: DiscreteBimodule,
    quotient: QuotientSpace,
}

/// Compute the cohomology group; the containment of coboundaries in cocycles
/// is re-derived and a failure is an internal error.
pub fn cohomology(bim: &DiscreteBimodule) -> Result<CohomologyGroup> {
    let z = cocycle_space(bim);
    let b = coboundary_space(bim);
    let quotient = crate::linalg::quotient(&z, &b).map_err(|e| {
        Error::InternalError(format!("coboundaries escape the cocycle space: {e}"))
    })?;
    Ok(CohomologyGroup { bimodule: bim.clone(), quotient })
}

impl CohomologyGroup {
    pub fn bimodule(&self) -> &DiscreteBimodule {
        &self.bimodule
    }

    pub fn cocycles(&self) -> &Subspace {
        self.quotient.ambient()
    }

    pub fn coboundaries(&self) -> &Subspace {
        self.quotient.sub()
    }

    /// Lex-least representative of each class, in ascending lex order.
    pub fn class_reps(&self) -> &[Vector] {
        self.quotient.transversal()
    }

    pub fn class_count(&self) -> usize {
        self.quotient.size()
    }

    pub fn cocycle_count(&self) -> u128 {
        (self.bimodule.field().modulus() as u128).pow(self.cocycles().dim() as u32)
    }

    pub fn coboundary_count(&self) -> u128 {
        (self.bimodule.field().modulus() as u128).pow(self.coboundaries().dim() as u32)
    }

    /// Lex-least member of the coset of a flattened cocycle.
    pub fn canonical_rep(&self, theta_flat: &Vector) -> Result<Vector> {
        self.quotient.canonical_rep(theta_flat)
    }
}

/// Search for r with dr = theta_1 - theta_2 over a shared bimodule.
///
/// Returns the lex-least such r as a dim_v x dim_p matrix; the induced map
/// (p, x) -> (p, x + r p) is then an algebra map from the product of the
/// first cocycle onto the product of the second.
pub fn cohomologous(c1: &DiscreteCocycle, c2: &DiscreteCocycle) -> Result<Option<Matrix>> {
    if c1.bimodule() != c2.bimodule() {
        return Err(Error::BimoduleMismatch);
    }
    let bim = c1.bimodule();
    let (m, n) = (bim.dim_p(), bim.dim_v());
    let diff = c1.theta_flat().sub(&c2.theta_flat())?;
    let solution = crate::linalg::solve(&differential_matrix(bim), &diff)?;
    Ok(solution.map(|x| {
        let mut r = Matrix::zero(bim.field(), n, m);
        for j in 0..m {
            for k in 0..n {
                r.set(k, j, x.get(j * n + k));
            }
        }
        r
    }))
}

/// One catalog entry: a validated datum whose theta is the class
/// representative, together with its product algebra.
#[derive(Debug, Clone)]
pub struct ExtEntry {
    datum: MetabelianDatum,
    triple: ExtensionTriple,
}

impl ExtEntry {
    pub fn datum(&self) -> &MetabelianDatum {
        &self.datum
    }

    pub fn triple(&self) -> &ExtensionTriple {
        &self.triple
    }
}

/// All entries over one bimodule, index-aligned with `class_reps`.
#[derive(Debug, Clone)]
pub struct ExtGroup {
    cohomology: CohomologyGroup,
    entries: Vec<ExtEntry>,
}

impl ExtGroup {
    pub fn cohomology(&self) -> &CohomologyGroup {
        &self.cohomology
    }

    pub fn bimodule(&self) -> &DiscreteBimodule {
        self.cohomology.bimodule()
    }

    pub fn entries(&self) -> &[ExtEntry] {
        &self.entries
    }

    /// Stable textual id: the action-matrix encodings joined by hyphens.
    pub fn bimodule_id(&self) -> String {
        self.bimodule()
            .key()
            .iter()
            .map(u128::to_string)
            .collect::<Vec<_>>()
            .join("-")
    }
}

/// The full extension catalog for dimensions (dim_p, dim_v) over one field.
#[derive(Debug, Clone)]
pub struct ExtCatalog {
    field: PrimeField,
    dim_p: usize,
    dim_v: usize,
    groups: Vec<ExtGroup>,
}

impl ExtCatalog {
    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dim_p(&self) -> usize {
        self.dim_p
    }

    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    pub fn groups(&self) -> &[ExtGroup] {
        &self.groups
    }

    pub fn total_entries(&self) -> usize {
        self.groups.iter().map(|g| g.entries.len()).sum()
    }
}

fn enumerate_valid_bimodules(
    dim_p: usize,
    dim_v: usize,
    field: PrimeField,
) -> Result<Vec<DiscreteBimodule>> {
    let (m, n) = (dim_p, dim_v);
    let digits = 2 * m * n * n;
    let p = field.modulus();
    let mut digits_vec = vec![0u32; digits];
    let mut found = Vec::new();
    loop {
        let take = |start: usize| {
            Matrix::new(field, n, n, digits_vec[start..start + n * n].to_vec())
                .expect("digits are reduced")
        };
        let right: Vec<Matrix> = (0..m).map(|j| take(j * n * n)).collect();
        let left: Vec<Matrix> = (0..m).map(|j| take((m + j) * n * n)).collect();
        match DiscreteBimodule::new(field, m, n, right, left) {
            Ok(bim) => found.push(bim),
            Err(Error::InvalidBimodule(_)) => {}
            Err(e) => return Err(e),
        }
        let mut idx = digits;
        loop {
            if idx == 0 {
                return Ok(found);
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

/// Enumerate every extension class of shape (dim_p, dim_v): all valid
/// bimodules in ascending encoding order, and over each one entry per
/// cohomology class.
///
/// The construction cross-checks itself against brute force: every cocycle
/// is extension-equivalent to exactly one entry of its bimodule group (the
/// one its canonical representative predicts), and entries are pairwise
/// inequivalent. Any mismatch is an internal error.
pub fn ext_enumerate(
    dim_p: usize,
    dim_v: usize,
    field: PrimeField,
    budget: &Budget,
) -> Result<ExtCatalog> {
    let (m, n) = (dim_p, dim_v);
    budget.admit_power(field.modulus() as u64, (2 * m * n * n) as u32)?;
    let bimodules = enumerate_valid_bimodules(m, n, field)?;

    let mut groups = Vec::with_capacity(bimodules.len());
    let mut verification_work: u128 = 0;
    for bim in bimodules {
        let cohomology = cohomology(&bim)?;
        let mut entries = Vec::with_capacity(cohomology.class_count());
        for rep in cohomology.class_reps() {
            let theta = crate::datum::theta_from_flat(field, m, n, rep)?;
            let datum = MetabelianDatum::from_parts(bim.clone(), theta).map_err(|e| {
                Error::InternalError(format!("class representative violates the cocycle law: {e}"))
            })?;
            let triple = metabelian_product(&datum)?;
            entries.push(ExtEntry { datum, triple });
        }
        let z_count = cohomology.cocycle_count();
        let entry_count = entries.len() as u128;
        let r_count = (field.modulus() as u128).pow((m * n) as u32);
        verification_work = verification_work
            .saturating_add(z_count.saturating_mul(entry_count).saturating_mul(r_count))
            .saturating_add(entry_count.saturating_mul(entry_count).saturating_mul(r_count));
        groups.push(ExtGroup { cohomology, entries });
    }

    budget.admit(verification_work)?;
    for group in &groups {
        cross_validate_group(field, m, n, group)?;
    }

    Ok(ExtCatalog { field, dim_p: m, dim_v: n, groups })
}

/// Brute-force check that the linear-algebra catalog matches extension
/// equivalence on the nose.
fn cross_validate_group(field: PrimeField, m: usize, n: usize, group: &ExtGroup) -> Result<()> {
    let bim = group.bimodule();
    for (i, e1) in group.entries().iter().enumerate() {
        for e2 in group.entries().iter().skip(i + 1) {
            if crate::algebra::extension_equivalent(e1.triple(), e2.triple())?.is_some() {
                return Err(Error::InternalError(
                    "distinct catalog entries are extension-equivalent".into(),
                ));
            }
        }
    }
    for z in group.cohomology().cocycles().vectors() {
        let predicted = group.cohomology().canonical_rep(&z)?;
        let theta = crate::datum::theta_from_flat(field, m, n, &z)?;
        let datum = MetabelianDatum::from_parts(bim.clone(), theta)?;
        let triple = metabelian_product(&datum)?;
        let mut hits = 0usize;
        for (idx, entry) in group.entries().iter().enumerate() {
            if crate::algebra::extension_equivalent(&triple, entry.triple())?.is_some() {
                hits += 1;
                if group.cohomology().class_reps()[idx] != predicted {
                    return Err(Error::InternalError(
                        "equivalence lands in a different class than the canonical representative".into(),
                    ));
                }
            }
        }
        if hits != 1 {
            return Err(Error::InternalError(format!(
                "cocycle is equivalent to {hits} catalog entries instead of exactly one"
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::datum::validate_cocycle;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn shift_bimodule(p: u32) -> DiscreteBimodule {
        // m = 1, n = 2, R = L = the nilpotent shift
        let field = f(p);
        let shift = Matrix::from_rows(field, &[vec![0, 0], vec![1, 0]]).unwrap();
        DiscreteBimodule::new(field, 1, 2, vec![shift.clone()], vec![shift]).unwrap()
    }

    #[test]
    fn trivial_bimodule_cohomology_is_all_of_theta_space() {
        let bim = DiscreteBimodule::trivial(f(2), 2, 1);
        let h = cohomology(&bim).unwrap();
        assert_eq!(h.cocycles().dim(), 4);
        assert_eq!(h.coboundaries().dim(), 0);
        assert_eq!(h.class_count(), 16);
    }

    #[test]
    fn shift_bimodule_cohomology() {
        // cocycle law is vacuous (L = R), coboundaries = image of 2R
        let h2 = cohomology(&shift_bimodule(2)).unwrap();
        assert_eq!(h2.cocycles().dim(), 2);
        assert_eq!(h2.coboundaries().dim(), 0);
        assert_eq!(h2.class_count(), 4);

        let h3 = cohomology(&shift_bimodule(3)).unwrap();
        assert_eq!(h3.cocycles().dim(), 2);
        assert_eq!(h3.coboundaries().dim(), 1);
        assert_eq!(h3.class_count(), 3);
    }

    #[test]
    fn class_reps_satisfy_the_law_and_ascend() {
        let h = cohomology(&shift_bimodule(3)).unwrap();
        let reps = h.class_reps();
        for w in reps.windows(2) {
            assert!(w[0].cmp_lex(&w[1]).is_lt());
        }
        for rep in reps {
            let theta = crate::datum::theta_from_flat(f(3), 1, 2, rep).unwrap();
            assert!(validate_cocycle(h.bimodule(), &theta).unwrap().is_valid());
        }
    }

    #[test]
    fn cohomologous_over_rigid_bimodule_means_equal() {
        let bim = DiscreteBimodule::trivial(f(2), 1, 1);
        let theta = |c: u32| vec![vec![Vector::new(f(2), vec![c]).unwrap()]];
        let c1 = DiscreteCocycle::new(bim.clone(), theta(1)).unwrap();
        let c0 = DiscreteCocycle::new(bim.clone(), theta(0)).unwrap();
        let r = cohomologous(&c1, &c1).unwrap().unwrap();
        assert!(r.is_zero());
        assert!(cohomologous(&c1, &c0).unwrap().is_none());
    }

    #[test]
    fn bimodule_mismatch_is_an_error() {
        let c1 = DiscreteCocycle::new(
            DiscreteBimodule::trivial(f(3), 1, 2),
            vec![vec![Vector::zero(f(3), 2)]],
        )
        .unwrap();
        let c2 = DiscreteCocycle::new(
            shift_bimodule(3),
            vec![vec![Vector::zero(f(3), 2)]],
        )
        .unwrap();
        assert!(matches!(cohomologous(&c1, &c2), Err(Error::BimoduleMismatch)));
    }

    #[test]
    fn cohomologous_witness_realizes_an_algebra_map() {
        let bim = shift_bimodule(3);
        let theta = |a: u32, b: u32| vec![vec![Vector::new(f(3), vec![a, b]).unwrap()]];
        let c1 = DiscreteCocycle::new(bim.clone(), theta(1, 1)).unwrap();
        let c2 = DiscreteCocycle::new(bim.clone(), theta(1, 2)).unwrap();
        let r = cohomologous(&c1, &c2).unwrap().unwrap();
        assert_eq!(r, Matrix::from_rows(f(3), &[vec![1], vec![0]]).unwrap());

        let p1 = metabelian_product(&MetabelianDatum::new(c1).unwrap()).unwrap();
        let p2 = metabelian_product(&MetabelianDatum::new(c2).unwrap()).unwrap();
        let mut phi = Matrix::identity(f(3), 3);
        phi.set(1, 0, r.get(0, 0));
        phi.set(2, 0, r.get(1, 0));
        assert!(crate::algebra::is_algebra_map(&phi, p1.total(), p2.total()));
        assert!(crate::algebra::extension_equivalent(&p1, &p2).unwrap().is_some());
    }

    #[test]
    fn ext_catalog_line_case() {
        for (p, expected) in [(2u32, 2usize), (3, 3)] {
            let catalog = ext_enumerate(1, 1, f(p), &Budget::default()).unwrap();
            assert_eq!(catalog.groups().len(), 1, "only the trivial bimodule survives");
            assert!(catalog.groups()[0].bimodule().is_trivial());
            assert_eq!(catalog.total_entries(), expected);
        }
    }

    #[test]
    fn ext_catalog_plane_by_line_over_f2() {
        let catalog = ext_enumerate(2, 1, f(2), &Budget::default()).unwrap();
        assert_eq!(catalog.groups().len(), 1);
        assert_eq!(catalog.total_entries(), 16);
    }
}
