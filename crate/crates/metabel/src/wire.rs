//! JSON interchange structs and their conversions to validated domain types.
//!
//! Shape problems (wrong arity, ragged grids, mismatched moduli between
//! nested values) are [`Error::ParseError`]s; value problems (entries outside
//! the field, violated structure laws) surface as the domain constructors'
//! own errors, so a parsed object is always a fully validated one.

use crate::algebra::Algebra;
use crate::codim_one::TPair;
use crate::datum::{DiscreteBimodule, MetabelianDatum};
use crate::dim_one::BilinearForm;
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::linalg::{Matrix, Vector};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct VectorWire {
    pub p: u32,
    pub coords: Vec<u32>,
}

impl From<&Vector> for VectorWire {
    fn from(v: &Vector) -> Self {
        VectorWire { p: v.field().modulus(), coords: v.coords().to_vec() }
    }
}

impl TryFrom<&VectorWire> for Vector {
    type Error = Error;

    fn try_from(w: &VectorWire) -> Result<Vector> {
        Vector::new(PrimeField::new(w.p)?, w.coords.clone())
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct MatrixWire {
    pub p: u32,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<u32>>,
}

impl From<&Matrix> for MatrixWire {
    fn from(m: &Matrix) -> Self {
        MatrixWire {
            p: m.field().modulus(),
            rows: m.rows(),
            cols: m.cols(),
            entries: (0..m.rows())
                .map(|i| (0..m.cols()).map(|j| m.get(i, j)).collect())
                .collect(),
        }
    }
}

impl TryFrom<&MatrixWire> for Matrix {
    type Error = Error;

    fn try_from(w: &MatrixWire) -> Result<Matrix> {
        if w.entries.len() != w.rows || w.entries.iter().any(|r| r.len() != w.cols) {
            return Err(Error::ParseError(format!(
                "matrix entries must form a {}x{} grid",
                w.rows, w.cols
            )));
        }
        let field = PrimeField::new(w.p)?;
        let flat: Vec<u32> = w.entries.iter().flatten().copied().collect();
        Matrix::new(field, w.rows, w.cols, flat)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct AlgebraWire {
    pub p: u32,
    pub dim: usize,
    /// Nested structure tensor: sc[i][j][k].
    pub sc: Vec<Vec<Vec<u32>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl From<&Algebra> for AlgebraWire {
    fn from(a: &Algebra) -> Self {
        AlgebraWire {
            p: a.field().modulus(),
            dim: a.dim(),
            sc: a.nested_sc(),
            labels: a.labels().map(<[String]>::to_vec),
        }
    }
}

impl TryFrom<&AlgebraWire> for Algebra {
    type Error = Error;

    fn try_from(w: &AlgebraWire) -> Result<Algebra> {
        if w.sc.len() != w.dim
            || w.sc.iter().any(|plane| {
                plane.len() != w.dim || plane.iter().any(|row| row.len() != w.dim)
            })
        {
            return Err(Error::ParseError(format!(
                "structure tensor must be a {0}x{0}x{0} grid",
                w.dim
            )));
        }
        let field = PrimeField::new(w.p)?;
        let algebra = Algebra::from_nested(field, &w.sc)?;
        match &w.labels {
            Some(labels) => algebra.with_labels(labels.clone()),
            None => Ok(algebra),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct DatumWire {
    pub p: u32,
    #[serde(rename = "dimP")]
    pub dim_p: usize,
    #[serde(rename = "dimV")]
    pub dim_v: usize,
    pub right: Vec<MatrixWire>,
    pub left: Vec<MatrixWire>,
    pub theta: Vec<Vec<VectorWire>>,
}

impl From<&MetabelianDatum> for DatumWire {
    fn from(d: &MetabelianDatum) -> Self {
        DatumWire {
            p: d.field().modulus(),
            dim_p: d.dim_p(),
            dim_v: d.dim_v(),
            right: d.bimodule().right().iter().map(MatrixWire::from).collect(),
            left: d.bimodule().left().iter().map(MatrixWire::from).collect(),
            theta: d
                .theta()
                .iter()
                .map(|row| row.iter().map(VectorWire::from).collect())
                .collect(),
        }
    }
}

/// Parse the raw parts of a datum without enforcing the structure laws;
/// used by validation commands that want a report instead of an error.
pub struct RawDatumParts {
    pub field: PrimeField,
    pub dim_p: usize,
    pub dim_v: usize,
    pub right: Vec<Matrix>,
    pub left: Vec<Matrix>,
    pub theta: Vec<Vec<Vector>>,
}

impl TryFrom<&DatumWire> for RawDatumParts {
    type Error = Error;

    fn try_from(w: &DatumWire) -> Result<RawDatumParts> {
        let field = PrimeField::new(w.p)?;
        let convert_mats = |wires: &[MatrixWire], side: &str| -> Result<Vec<Matrix>> {
            wires
                .iter()
                .map(|mw| {
                    if mw.p != w.p {
                        return Err(Error::ParseError(format!(
                            "{side} action modulus {} differs from datum modulus {}",
                            mw.p, w.p
                        )));
                    }
                    Matrix::try_from(mw)
                })
                .collect()
        };
        let right = convert_mats(&w.right, "right")?;
        let left = convert_mats(&w.left, "left")?;
        if right.len() != w.dim_p || left.len() != w.dim_p {
            return Err(Error::ParseError(format!(
                "expected {} matrices per action side",
                w.dim_p
            )));
        }
        if w.theta.len() != w.dim_p || w.theta.iter().any(|row| row.len() != w.dim_p) {
            return Err(Error::ParseError(format!(
                "theta must be a {0}x{0} grid",
                w.dim_p
            )));
        }
        let theta: Vec<Vec<Vector>> = w
            .theta
            .iter()
            .map(|row| {
                row.iter()
                    .map(|vw| {
                        if vw.p != w.p {
                            return Err(Error::ParseError(format!(
                                "theta entry modulus {} differs from datum modulus {}",
                                vw.p, w.p
                            )));
                        }
                        Vector::try_from(vw)
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        Ok(RawDatumParts { field, dim_p: w.dim_p, dim_v: w.dim_v, right, left, theta })
    }
}

impl TryFrom<&DatumWire> for MetabelianDatum {
    type Error = Error;

    fn try_from(w: &DatumWire) -> Result<MetabelianDatum> {
        let parts = RawDatumParts::try_from(w)?;
        let bimodule =
            DiscreteBimodule::new(parts.field, parts.dim_p, parts.dim_v, parts.right, parts.left)?;
        MetabelianDatum::from_parts(bimodule, parts.theta)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct PairWire {
    pub p: u32,
    pub n: usize,
    pub x: MatrixWire,
    pub y: MatrixWire,
}

impl From<&TPair> for PairWire {
    fn from(t: &TPair) -> Self {
        PairWire {
            p: t.field().modulus(),
            n: t.n(),
            x: MatrixWire::from(t.x()),
            y: MatrixWire::from(t.y()),
        }
    }
}

impl TryFrom<&PairWire> for TPair {
    type Error = Error;

    fn try_from(w: &PairWire) -> Result<TPair> {
        if w.x.p != w.p || w.y.p != w.p {
            return Err(Error::ParseError("pair member modulus differs from pair modulus".into()));
        }
        if w.x.rows != w.n || w.y.rows != w.n {
            return Err(Error::ParseError(format!("pair members must be {0}x{0}", w.n)));
        }
        TPair::new(Matrix::try_from(&w.x)?, Matrix::try_from(&w.y)?)
    }
}

/// A bilinear form on the wire is just its Gram matrix.
pub fn form_from_wire(w: &MatrixWire) -> Result<BilinearForm> {
    BilinearForm::new(Matrix::try_from(w)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::datum::metabelian_product;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn vector_round_trip() {
        let v = Vector::new(f(5), vec![0, 4, 2]).unwrap();
        let json = serde_json::to_string(&VectorWire::from(&v)).unwrap();
        let wire: VectorWire = serde_json::from_str(&json).unwrap();
        assert_eq!(Vector::try_from(&wire).unwrap(), v);
    }

    #[test]
    fn matrix_round_trip_and_arity_check() {
        let m = Matrix::from_rows(f(3), &[vec![1, 2], vec![0, 1]]).unwrap();
        let json = serde_json::to_string(&MatrixWire::from(&m)).unwrap();
        let wire: MatrixWire = serde_json::from_str(&json).unwrap();
        assert_eq!(Matrix::try_from(&wire).unwrap(), m);

        let bad = MatrixWire { p: 3, rows: 2, cols: 2, entries: vec![vec![1, 2]] };
        assert!(matches!(Matrix::try_from(&bad), Err(Error::ParseError(_))));
    }

    #[test]
    fn out_of_range_entry_is_an_invariant_violation() {
        let wire = MatrixWire { p: 3, rows: 1, cols: 1, entries: vec![vec![7]] };
        assert!(matches!(Matrix::try_from(&wire), Err(Error::InvariantViolation(_))));
    }

    #[test]
    fn algebra_round_trip_keeps_labels() {
        let a = Algebra::abelian(f(2), 2)
            .with_labels(vec!["u".into(), "v".into()])
            .unwrap();
        let json = serde_json::to_string(&AlgebraWire::from(&a)).unwrap();
        let wire: AlgebraWire = serde_json::from_str(&json).unwrap();
        let back = Algebra::try_from(&wire).unwrap();
        assert_eq!(back, a);
        assert_eq!(back.labels(), a.labels());
    }

    #[test]
    fn algebra_wrong_arity_is_a_parse_error() {
        let wire = AlgebraWire { p: 2, dim: 2, sc: vec![vec![vec![0, 0]]], labels: None };
        assert!(matches!(Algebra::try_from(&wire), Err(Error::ParseError(_))));
    }

    #[test]
    fn datum_round_trip_through_json() {
        let field = f(3);
        let shift = Matrix::from_rows(field, &[vec![0, 0], vec![1, 0]]).unwrap();
        let bim = DiscreteBimodule::new(field, 1, 2, vec![shift.clone()], vec![shift]).unwrap();
        let theta = vec![vec![Vector::new(field, vec![1, 0]).unwrap()]];
        let datum = MetabelianDatum::from_parts(bim, theta).unwrap();

        let json = serde_json::to_string(&DatumWire::from(&datum)).unwrap();
        assert!(json.contains("\"dimP\":1"));
        let wire: DatumWire = serde_json::from_str(&json).unwrap();
        let back = MetabelianDatum::try_from(&wire).unwrap();
        assert_eq!(back, datum);
        assert_eq!(
            metabelian_product(&back).unwrap().total(),
            metabelian_product(&datum).unwrap().total()
        );
    }

    #[test]
    fn datum_wire_rejects_law_violations_with_typed_errors() {
        // R = identity breaks the right-composition law
        let id = MatrixWire { p: 2, rows: 1, cols: 1, entries: vec![vec![1]] };
        let zero = MatrixWire { p: 2, rows: 1, cols: 1, entries: vec![vec![0]] };
        let wire = DatumWire {
            p: 2,
            dim_p: 1,
            dim_v: 1,
            right: vec![id],
            left: vec![zero],
            theta: vec![vec![VectorWire { p: 2, coords: vec![0] }]],
        };
        assert!(matches!(
            MetabelianDatum::try_from(&wire),
            Err(Error::InvalidBimodule(_))
        ));
    }

    #[test]
    fn pair_round_trip_and_modulus_check() {
        let e12 = Matrix::from_rows(f(2), &[vec![0, 1], vec![0, 0]]).unwrap();
        let pair = TPair::new(e12.clone(), e12).unwrap();
        let json = serde_json::to_string(&PairWire::from(&pair)).unwrap();
        let wire: PairWire = serde_json::from_str(&json).unwrap();
        assert_eq!(TPair::try_from(&wire).unwrap(), pair);

        let mut bad: PairWire = serde_json::from_str(&json).unwrap();
        bad.x.p = 3;
        assert!(matches!(TPair::try_from(&bad), Err(Error::ParseError(_))));
    }
}
