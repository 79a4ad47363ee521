//! Algebras whose derived subalgebra has codimension 1: the family built
//! from constrained matrix pairs.
//!
//! A T-pair is (X, Y) with `X^2 = Y^2 = 0` and `XY = YX`; together with an
//! equalizer member zeta (a vector with `X zeta = Y zeta`) it is the
//! one-dimensional-P specialization of a metabelian datum, via
//! `(R_1, L_1, theta[0][0]) = (X, Y, zeta)`. Extension classes over a fixed
//! pair are the cosets of the equalizer modulo `Im(X + Y)`, and the censuses
//! here confirm that the pair dictionary, the datum laws, and the cohomology
//! catalog all count the same objects.

use crate::algebra::{ExtensionTriple, extension_equivalent};
use crate::budget::Budget;
use crate::cohomology::ext_enumerate;
use crate::datum::{DiscreteBimodule, MetabelianDatum, associativity_iff_datum, metabelian_product};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::linalg::{Matrix, Subspace, Vector, image, kernel, quotient};

/// A pair (X, Y) of square matrices with `X^2 = Y^2 = 0` and `XY = YX`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TPair {
    x: Matrix,
    y: Matrix,
}

impl TPair {
    pub fn new(x: Matrix, y: Matrix) -> Result<Self> {
        match validate_tpair(&x, &y)? {
            Some(pair) => Ok(pair),
            None => Err(Error::InvalidParams(
                "matrices violate the pair laws (squares zero, commuting)".into(),
            )),
        }
    }

    pub fn x(&self) -> &Matrix {
        &self.x
    }

    pub fn y(&self) -> &Matrix {
        &self.y
    }

    pub fn n(&self) -> usize {
        self.x.rows()
    }

    pub fn field(&self) -> PrimeField {
        self.x.field()
    }

    /// The datum bimodule with right action X and left action Y.
    pub fn bimodule(&self) -> DiscreteBimodule {
        DiscreteBimodule::new(self.field(), 1, self.n(), vec![self.x.clone()], vec![self.y.clone()])
            .expect("pair laws are the one-generator bimodule laws")
    }
}

/// Check the pair laws; shape problems are errors, law failures yield None.
///
/// For every accepted pair the identity `(X - Y)(X + Y) = 0` is re-derived;
/// it is implied by the laws, so a failure is an internal error.
pub fn validate_tpair(x: &Matrix, y: &Matrix) -> Result<Option<TPair>> {
    if x.rows() != x.cols() || y.rows() != y.cols() || x.rows() != y.rows() || x.field() != y.field() {
        return Err(Error::DimensionMismatch(
            "pair members must be square, equal-sized, same-field matrices".into(),
        ));
    }
    let laws = x.mul(x)?.is_zero() && y.mul(y)?.is_zero() && x.mul(y)? == y.mul(x)?;
    if !laws {
        return Ok(None);
    }
    let diff = x.sub(y)?;
    let sum = x.add(y)?;
    if !diff.mul(&sum)?.is_zero() {
        return Err(Error::InternalError(
            "(X - Y)(X + Y) is nonzero for a law-abiding pair".into(),
        ));
    }
    Ok(Some(TPair { x: x.clone(), y: y.clone() }))
}

/// All pairs of n x n matrices satisfying the pair laws, ordered by
/// (X encoding, Y encoding). Square-zero matrices are collected once and
/// commutation is tested pairwise.
pub fn enumerate_t(n: usize, field: PrimeField, budget: &Budget) -> Result<Vec<TPair>> {
    budget.admit_power(field.modulus() as u64, (2 * n * n) as u32)?;
    let count = (field.modulus() as u128).pow((n * n) as u32);
    let mut square_zero = Vec::new();
    for code in 0..count {
        let m = Matrix::from_encoding(field, n, n, code)?;
        if m.mul(&m)?.is_zero() {
            square_zero.push(m);
        }
    }
    let mut pairs = Vec::new();
    for x in &square_zero {
        for y in &square_zero {
            if x.mul(y)? == y.mul(x)? {
                pairs.push(validate_tpair(x, y)?.expect("laws verified"));
            }
        }
    }
    Ok(pairs)
}

/// `Ker(X - Y)`: the vectors on which the two actions agree.
pub fn equalizer(t: &TPair) -> Subspace {
    kernel(&t.x().sub(t.y()).expect("same shape"))
}

/// `Im(X + Y)`, with its containment in the equalizer re-derived.
pub fn im_sum(t: &TPair) -> Result<Subspace> {
    let im = image(&t.x().add(t.y())?);
    if !equalizer(t).contains_subspace(&im) {
        return Err(Error::InternalError(
            "Im(X + Y) escapes Ker(X - Y) for a law-abiding pair".into(),
        ));
    }
    Ok(im)
}

/// A pair together with one member of its equalizer.
///
/// Catalog representatives produced by [`ext_classes`] carry the lex-least
/// member of each coset mod `Im(X + Y)`; a hand-built rep may carry any
/// equalizer member (the algebra construction is defined for all of them).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtClassRep {
    pub pair: TPair,
    pub u: Vector,
}

impl ExtClassRep {
    pub fn new(pair: TPair, u: Vector) -> Result<Self> {
        if u.dim() != pair.n() || u.field() != pair.field() {
            return Err(Error::DimensionMismatch("coset vector of the wrong shape".into()));
        }
        if !equalizer(&pair).contains(&u) {
            return Err(Error::InvalidParams(
                "vector is not in the equalizer of the pair".into(),
            ));
        }
        Ok(ExtClassRep { pair, u })
    }

    /// Is `u` the lex-least member of its coset?
    pub fn is_canonical(&self) -> Result<bool> {
        Ok(im_sum(&self.pair)?.reduce(&self.u) == self.u)
    }
}

/// Lex-least representatives of the equalizer modulo `Im(X + Y)`.
pub fn ext_classes(t: &TPair) -> Result<Vec<ExtClassRep>> {
    let q = quotient(&equalizer(t), &im_sum(t)?)?;
    q.transversal()
        .iter()
        .map(|u| ExtClassRep::new(t.clone(), u.clone()))
        .collect()
}

/// The pair dictionary, forward direction: a rep as a one-generator datum.
pub fn rep_to_datum(rep: &ExtClassRep) -> Result<MetabelianDatum> {
    MetabelianDatum::from_parts(rep.pair.bimodule(), vec![vec![rep.u.clone()]])
}

/// The pair dictionary, backward direction; the datum must have dim P = 1.
pub fn datum_to_rep(datum: &MetabelianDatum) -> Result<ExtClassRep> {
    if datum.dim_p() != 1 {
        return Err(Error::InvalidParams(
            "the pair dictionary applies only to one-dimensional P".into(),
        ));
    }
    let pair = TPair::new(datum.bimodule().right()[0].clone(), datum.bimodule().left()[0].clone())?;
    ExtClassRep::new(pair, datum.theta()[0][0].clone())
}

/// The algebra of a rep on basis (F, E_1..E_n): `F F = sum_j u_j E_j`,
/// `F E_i = column i of Y`, `E_i F = column i of X`, E-products zero.
/// Associativity and metabelianity are re-checked downstream; failures are
/// internal errors.
pub fn build_algebra(rep: &ExtClassRep) -> Result<ExtensionTriple> {
    let triple = metabelian_product(&rep_to_datum(rep)?)?;
    let labels = ["F".to_string()]
        .into_iter()
        .chain((1..=rep.pair.n()).map(|i| format!("E{i}")))
        .collect();
    let total = triple.total().clone().with_labels(labels)?;
    ExtensionTriple::new(total, 1, rep.pair.n())
}

/// Census comparison for metabelian structures on a line plus V.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MetKvReport {
    pub t_pair_count: usize,
    /// Triples (X, Y, zeta): sum of equalizer sizes over all pairs.
    pub triple_count: u64,
    /// Valid one-generator datums found by the raw datum-law sweep.
    pub datum_count: u64,
}

/// Count metabelian datums with dim P = 1 two ways: through the raw datum
/// sweep and through pairs-with-equalizer-member; assert the counts agree
/// and that every triple validates as a datum.
pub fn met_kv_census(dim_v: usize, field: PrimeField, budget: &Budget) -> Result<MetKvReport> {
    let sweep = associativity_iff_datum(1, dim_v, field, budget)?;
    let pairs = enumerate_t(dim_v, field, budget)?;
    let mut triple_count = 0u64;
    for pair in &pairs {
        for zeta in equalizer(pair).vectors() {
            let rep = ExtClassRep::new(pair.clone(), zeta)?;
            rep_to_datum(&rep).map_err(|e| {
                Error::InternalError(format!("equalizer triple fails the datum laws: {e}"))
            })?;
            triple_count += 1;
        }
    }
    if triple_count != sweep.valid_datums {
        return Err(Error::InternalError(format!(
            "pair census ({triple_count}) and datum sweep ({}) disagree",
            sweep.valid_datums
        )));
    }
    Ok(MetKvReport { t_pair_count: pairs.len(), triple_count, datum_count: sweep.valid_datums })
}

/// Three independent counts of extension classes over a line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtKReport {
    /// Sum over T-pairs of |equalizer / Im(X+Y)|.
    pub quotient_count: u64,
    /// Entries in the cohomology catalog for (dim P, dim V) = (1, dim_v).
    pub catalog_count: u64,
    /// Brute-force extension-equivalence classes over all datums.
    pub brute_force_count: u64,
}

/// Count extension classes of V by a line three ways and assert agreement:
/// quotient sizes over the pair family, the cohomology catalog, and greedy
/// brute-force classification of every datum by extension equivalence.
pub fn ext_k_census(dim_v: usize, field: PrimeField, budget: &Budget) -> Result<ExtKReport> {
    let pairs = enumerate_t(dim_v, field, budget)?;
    let mut quotient_count = 0u64;
    let mut all_triples: Vec<ExtensionTriple> = Vec::new();
    for pair in &pairs {
        quotient_count += ext_classes(pair)?.len() as u64;
        for zeta in equalizer(pair).vectors() {
            all_triples.push(build_algebra(&ExtClassRep::new(pair.clone(), zeta)?)?);
        }
    }

    let catalog_count = ext_enumerate(1, dim_v, field, budget)?.total_entries() as u64;

    budget.admit((all_triples.len() as u128).saturating_mul(all_triples.len() as u128))?;
    let mut class_reps: Vec<usize> = Vec::new();
    for (i, triple) in all_triples.iter().enumerate() {
        let mut found = false;
        for &r in &class_reps {
            if extension_equivalent(&all_triples[r], triple)?.is_some() {
                found = true;
                break;
            }
        }
        if !found {
            class_reps.push(i);
        }
    }
    let brute_force_count = class_reps.len() as u64;

    if quotient_count != catalog_count || catalog_count != brute_force_count {
        return Err(Error::InternalError(format!(
            "class counts disagree: quotients {quotient_count}, catalog {catalog_count}, brute force {brute_force_count}"
        )));
    }
    Ok(ExtKReport { quotient_count, catalog_count, brute_force_count })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn e12(p: u32) -> Matrix {
        Matrix::from_rows(f(p), &[vec![0, 1], vec![0, 0]]).unwrap()
    }

    fn shift(p: u32) -> Matrix {
        Matrix::from_rows(f(p), &[vec![0, 0], vec![1, 0]]).unwrap()
    }

    #[test]
    fn pair_validation_verdicts() {
        let zero = Matrix::zero(f(2), 2, 2);
        assert!(validate_tpair(&zero, &zero).unwrap().is_some());
        assert!(validate_tpair(&e12(2), &e12(2)).unwrap().is_some());
        // E12 and E21 do not commute
        let e21 = shift(2);
        assert!(validate_tpair(&e12(2), &e21).unwrap().is_none());
        // identity squares to itself, not zero
        let id = Matrix::identity(f(2), 2);
        assert!(validate_tpair(&id, &zero).unwrap().is_none());
        assert!(matches!(
            validate_tpair(&zero, &Matrix::zero(f(2), 3, 3)),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn pair_counts_are_frozen() {
        assert_eq!(enumerate_t(1, f(2), &Budget::default()).unwrap().len(), 1);
        assert_eq!(enumerate_t(1, f(5), &Budget::default()).unwrap().len(), 1);
        assert_eq!(enumerate_t(2, f(2), &Budget::default()).unwrap().len(), 10);
        assert_eq!(enumerate_t(2, f(3), &Budget::default()).unwrap().len(), 33);
        assert_eq!(enumerate_t(3, f(2), &Budget::default()).unwrap().len(), 148);
    }

    #[test]
    fn equalizer_and_image_examples() {
        // X = E12, Y = 0 over F2: equalizer = im_sum = span{e1}
        let t = TPair::new(e12(2), Matrix::zero(f(2), 2, 2)).unwrap();
        let eq = equalizer(&t);
        assert_eq!(eq.dim(), 1);
        assert!(eq.contains(&Vector::basis(f(2), 2, 0)));
        assert_eq!(im_sum(&t).unwrap(), eq);
        assert_eq!(ext_classes(&t).unwrap().len(), 1);

        // X = Y = E12 over F3: equalizer full, image span{e1}, 3 classes
        let t = TPair::new(e12(3), e12(3)).unwrap();
        assert_eq!(equalizer(&t).dim(), 2);
        assert_eq!(im_sum(&t).unwrap().dim(), 1);
        assert_eq!(ext_classes(&t).unwrap().len(), 3);

        // same pair over F2: the image collapses, 4 classes
        let t = TPair::new(e12(2), e12(2)).unwrap();
        assert_eq!(im_sum(&t).unwrap().dim(), 0);
        assert_eq!(ext_classes(&t).unwrap().len(), 4);
    }

    #[test]
    fn class_reps_are_canonical_and_lex_sorted() {
        let t = TPair::new(shift(3), shift(3)).unwrap();
        let reps = ext_classes(&t).unwrap();
        assert_eq!(reps.len(), 3);
        for rep in &reps {
            assert!(rep.is_canonical().unwrap());
        }
        for w in reps.windows(2) {
            assert!(w[0].u.cmp_lex(&w[1].u).is_lt());
        }
    }

    #[test]
    fn rep_rejects_non_equalizer_vector() {
        // X = E12, Y = 0: e2 is not equalized (X e2 = e1 != 0)
        let t = TPair::new(e12(2), Matrix::zero(f(2), 2, 2)).unwrap();
        assert!(matches!(
            ExtClassRep::new(t, Vector::basis(f(2), 2, 1)),
            Err(Error::InvalidParams(_))
        ));
    }

    #[test]
    fn built_algebra_matches_the_formula() {
        // X = Y = E12, u = e1 over F2: F F = E1, F E2 = E2 F = E1
        let t = TPair::new(e12(2), e12(2)).unwrap();
        let rep = ExtClassRep::new(t, Vector::basis(f(2), 2, 0)).unwrap();
        let triple = build_algebra(&rep).unwrap();
        let a = triple.total();
        assert_eq!(a.dim(), 3);
        assert_eq!(a.basis_product(0, 0), Vector::new(f(2), vec![0, 1, 0]).unwrap());
        assert_eq!(a.basis_product(0, 2), Vector::new(f(2), vec![0, 1, 0]).unwrap());
        assert_eq!(a.basis_product(2, 0), Vector::new(f(2), vec![0, 1, 0]).unwrap());
        assert!(a.basis_product(0, 1).is_zero());
        assert_eq!(a.labels().unwrap()[0], "F");
    }

    #[test]
    fn trivial_pair_builds_abelian_or_square_line() {
        let zero = Matrix::zero(f(3), 1, 1);
        let t = TPair::new(zero.clone(), zero).unwrap();
        let rep0 = ExtClassRep::new(t.clone(), Vector::zero(f(3), 1)).unwrap();
        assert_eq!(build_algebra(&rep0).unwrap().total(), &Algebra::abelian(f(3), 2));
        let rep1 = ExtClassRep::new(t, Vector::basis(f(3), 1, 0)).unwrap();
        let a = build_algebra(&rep1).unwrap();
        assert_eq!(a.total().structure_constant(0, 0, 1), 1);
    }

    #[test]
    fn derived_subalgebra_is_spanned_by_u_and_action_columns() {
        let t = TPair::new(shift(3), Matrix::zero(f(3), 2, 2)).unwrap();
        // equalizer of (shift, 0) = ker(shift) = span{e2}
        let rep = ExtClassRep::new(t.clone(), Vector::basis(f(3), 2, 1)).unwrap();
        let a = build_algebra(&rep).unwrap();
        let derived = a.total().derived_subalgebra();
        // span{u, cols X, cols Y} = span{e2, e2} has dim 1, embedded at offset 1
        assert_eq!(derived.dim(), 1);
        assert!(derived.contains(&Vector::basis(f(3), 3, 2)));
    }

    #[test]
    fn same_coset_reps_give_equivalent_algebras() {
        let t = TPair::new(shift(3), shift(3)).unwrap();
        // coset of (1,0): add (0,2) from Im(X+Y) = span{(0,1)}
        let a1 = build_algebra(&ExtClassRep::new(t.clone(), Vector::new(f(3), vec![1, 0]).unwrap()).unwrap())
            .unwrap();
        let a2 = build_algebra(&ExtClassRep::new(t.clone(), Vector::new(f(3), vec![1, 2]).unwrap()).unwrap())
            .unwrap();
        let a3 = build_algebra(&ExtClassRep::new(t, Vector::new(f(3), vec![2, 0]).unwrap()).unwrap())
            .unwrap();
        assert!(extension_equivalent(&a1, &a2).unwrap().is_some());
        assert!(extension_equivalent(&a1, &a3).unwrap().is_none());
    }

    #[test]
    fn dictionary_round_trip() {
        let t = TPair::new(e12(3), Matrix::zero(f(3), 2, 2)).unwrap();
        let rep = ext_classes(&t).unwrap().into_iter().next().unwrap();
        let datum = rep_to_datum(&rep).unwrap();
        let back = datum_to_rep(&datum).unwrap();
        assert_eq!(back, rep);
    }

    #[test]
    fn corpus_members_with_codimension_one_derived_part_are_build_outputs() {
        // every metabelian dim-3 algebra over F2 whose derived subalgebra
        // has dimension 2 is isomorphic to an algebra built from a T-pair
        let budget = Budget::default();
        let mut checked = 0usize;
        for a in crate::algebra::enumerate_associative_algebras(3, f(2), true, &budget).unwrap() {
            let a = a.unwrap();
            if !a.is_metabelian().unwrap() || a.derived_subalgebra().dim() != 2 {
                continue;
            }
            let dec = crate::datum::decompose(&a).unwrap();
            let rep = datum_to_rep(&dec.datum).unwrap();
            let built = build_algebra(&rep).unwrap();
            assert!(
                crate::algebra::find_isomorphism(&a, built.total(), &budget).unwrap().is_some()
            );
            checked += 1;
        }
        assert!(checked > 0);
    }

    #[test]
    fn met_kv_census_frozen_counts() {
        let r = met_kv_census(1, f(2), &Budget::default()).unwrap();
        assert_eq!((r.t_pair_count, r.triple_count, r.datum_count), (1, 2, 2));
        let r = met_kv_census(1, f(3), &Budget::default()).unwrap();
        assert_eq!((r.t_pair_count, r.triple_count, r.datum_count), (1, 3, 3));
        let r = met_kv_census(2, f(2), &Budget::default()).unwrap();
        assert_eq!((r.t_pair_count, r.triple_count, r.datum_count), (10, 28, 28));
    }

    #[test]
    fn ext_k_census_frozen_counts() {
        let r = ext_k_census(1, f(2), &Budget::default()).unwrap();
        assert_eq!(r.quotient_count, 2);
        let r = ext_k_census(1, f(3), &Budget::default()).unwrap();
        assert_eq!(r.quotient_count, 3);
        let r = ext_k_census(2, f(2), &Budget::default()).unwrap();
        assert_eq!(
            (r.quotient_count, r.catalog_count, r.brute_force_count),
            (22, 22, 22)
        );
    }
}
