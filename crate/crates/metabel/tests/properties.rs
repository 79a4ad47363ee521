//! Randomized property tests over the public API. These complement the
//! exhaustive censuses with invariants that must hold at any size: RREF
//! idempotence, rank-nullity, lex-minimality of solver output and coset
//! reduction, canonical-form order independence, and preservation of
//! algebra structure under change of basis.

use metabel::algebra::is_algebra_map;
use metabel::datum::{DiscreteBimodule, MetabelianDatum, decompose, metabelian_product};
use metabel::linalg::{Matrix, Subspace, Vector, kernel, quotient, rref, solve};
use metabel::{Budget, PrimeField};
use proptest::prelude::*;
use std::cmp::Ordering;

fn small_prime() -> impl Strategy<Value = u32> {
    prop_oneof![Just(2u32), Just(3u32), Just(5u32)]
}

fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Matrix> {
    (small_prime(), 1..=max_rows, 1..=max_cols).prop_flat_map(|(p, r, c)| {
        let f = PrimeField::new(p).unwrap();
        proptest::collection::vec(0..p, r * c)
            .prop_map(move |entries| Matrix::new(f, r, c, entries).unwrap())
    })
}

fn vector(p: u32, dim: usize) -> impl Strategy<Value = Vector> {
    let f = PrimeField::new(p).unwrap();
    proptest::collection::vec(0..p, dim).prop_map(move |coords| Vector::new(f, coords).unwrap())
}

proptest! {
    #[test]
    fn rref_is_idempotent_and_rank_nullity_holds(m in matrix(4, 4)) {
        let (r, rank, pivots) = rref(&m);
        let (rr, rank2, pivots2) = rref(&r);
        prop_assert_eq!(&rr, &r);
        prop_assert_eq!(rank2, rank);
        prop_assert_eq!(&pivots2, &pivots);
        prop_assert!(pivots.windows(2).all(|w| w[0] < w[1]));
        prop_assert_eq!(kernel(&m).dim() + rank, m.cols());
    }

    #[test]
    fn matrix_encoding_round_trips(m in matrix(3, 3)) {
        let back = Matrix::from_encoding(m.field(), m.rows(), m.cols(), m.encoding()).unwrap();
        prop_assert_eq!(back, m);
    }

    #[test]
    fn solve_hits_a_lex_minimal_solution(
        (m, x0) in matrix(4, 4).prop_flat_map(|m| {
            let p = m.field().modulus();
            let cols = m.cols();
            (Just(m), vector(p, cols))
        }),
    ) {
        let b = m.apply(&x0).unwrap();
        let sol = solve(&m, &b).unwrap().expect("b is in the image by construction");
        prop_assert_eq!(m.apply(&sol).unwrap(), b);
        // x0 is a solution, so the returned one is never lex-larger
        prop_assert_ne!(sol.cmp_lex(&x0), Ordering::Greater);
    }

    #[test]
    fn reduction_picks_the_lex_min_coset_member(
        (s, v) in (prop_oneof![Just(2u32), Just(3u32)], 1..=3usize).prop_flat_map(|(p, dim)| {
            let span = proptest::collection::vec(vector(p, dim), 0..=dim);
            (span, vector(p, dim)).prop_map(move |(rows, v)| {
                let f = PrimeField::new(p).unwrap();
                (Subspace::from_spanning(f, dim, &rows).unwrap(), v)
            })
        }),
    ) {
        let r = s.reduce(&v);
        prop_assert!(s.contains(&v.sub(&r).unwrap()));
        prop_assert_eq!(s.reduce(&r), r.clone());
        for w in s.vectors() {
            let candidate = v.add(&w).unwrap();
            prop_assert_ne!(r.cmp_lex(&candidate), Ordering::Greater);
        }
    }

    #[test]
    fn canonical_subspaces_ignore_spanning_order(
        rows in (prop_oneof![Just(2u32), Just(3u32)], 1..=3usize).prop_flat_map(|(p, dim)| {
            proptest::collection::vec(vector(p, dim), 1..=2 * dim)
                .prop_map(move |rows| (p, dim, rows))
        }),
    ) {
        let (p, dim, mut rows) = rows;
        let f = PrimeField::new(p).unwrap();
        let forward = Subspace::from_spanning(f, dim, &rows).unwrap();
        rows.reverse();
        let backward = Subspace::from_spanning(f, dim, &rows).unwrap();
        prop_assert_eq!(forward, backward);
    }

    #[test]
    fn quotient_transversals_have_exact_size(
        (a, b) in (prop_oneof![Just(2u32), Just(3u32)], 1..=3usize).prop_flat_map(|(p, dim)| {
            (matrix_with(p, dim), matrix_with(p, dim))
        }),
    ) {
        let s = metabel::linalg::image(&a);
        let t = s.sum(&metabel::linalg::image(&b)).unwrap();
        let q = quotient(&t, &s).unwrap();
        let p = a.field().modulus() as usize;
        prop_assert_eq!(q.size(), p.pow((t.dim() - s.dim()) as u32));
        // reps are fixed points and constant on cosets
        for rep in q.transversal() {
            prop_assert_eq!(&q.canonical_rep(rep).unwrap(), rep);
        }
        for w in s.vectors() {
            let shifted = q.transversal()[q.transversal().len() - 1].add(&w).unwrap();
            prop_assert_eq!(
                q.canonical_rep(&shifted).unwrap(),
                q.transversal()[q.transversal().len() - 1].clone()
            );
        }
    }

    #[test]
    fn rebasing_preserves_algebra_structure(
        (datum, c) in (
            prop_oneof![Just(2u32), Just(3u32)],
            1..=2usize,
            1..=2usize,
        ).prop_flat_map(|(p, m, n)| {
            let f = PrimeField::new(p).unwrap();
            let theta = proptest::collection::vec(vector(p, n), m * m);
            let basis = proptest::collection::vec(0..p, (m + n) * (m + n));
            (theta, basis).prop_map(move |(cells, basis)| {
                let grid: Vec<Vec<Vector>> =
                    cells.chunks(m).map(|row| row.to_vec()).collect();
                let datum = MetabelianDatum::from_parts(
                    DiscreteBimodule::trivial(f, m, n),
                    grid,
                ).unwrap();
                let c = Matrix::new(f, m + n, m + n, basis).unwrap();
                (datum, c)
            })
        }),
    ) {
        prop_assume!(c.is_invertible());
        let total = metabelian_product(&datum).unwrap().total().clone();
        let moved = total.rebase(&c).unwrap();
        prop_assert!(is_algebra_map(&c, &moved, &total));
        prop_assert!(moved.is_associative());
        prop_assert!(moved.is_metabelian().unwrap());
        prop_assert_eq!(
            moved.derived_subalgebra().dim(),
            total.derived_subalgebra().dim()
        );
        // decompose recovers an exact product presentation of the moved copy
        let dec = decompose(&moved).unwrap();
        let rebuilt = metabelian_product(&dec.datum).unwrap();
        prop_assert_eq!(&moved.rebase(&dec.iso).unwrap(), rebuilt.total());
    }
}

fn matrix_with(p: u32, dim: usize) -> impl Strategy<Value = Matrix> {
    let f = PrimeField::new(p).unwrap();
    proptest::collection::vec(0..p, dim * dim)
        .prop_map(move |entries| Matrix::new(f, dim, dim, entries).unwrap())
}

#[test]
fn budget_guard_is_exercised() {
    let tiny = Budget::new(10);
    let err = metabel::linalg::matrix_enumerate(2, 2, PrimeField::new(5).unwrap(), &tiny);
    assert!(err.is_err());
}
