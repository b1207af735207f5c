//! Vectors on a finite carrier, dense exact matrices, and the elimination
//! routines (rank, coordinates in a basis, 2×2 Cramer solve) used by every
//! structural check.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::scalar::{Scalar, ScalarField};

/// An F-valued function on the carrier S, stored as the vector of its values
/// at element indices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuncOnS {
    field: ScalarField,
    values: Vec<Scalar>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinalgError {
    MixedFields,
    LengthMismatch,
    /// A scalar is not a canonical element of the stated field.
    BadScalar { index: usize },
    Singular,
}

impl fmt::Display for LinalgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinalgError::MixedFields => write!(f, "vectors belong to different fields"),
            LinalgError::LengthMismatch => write!(f, "vector lengths differ"),
            LinalgError::BadScalar { index } => {
                write!(f, "entry {index} is not an element of the field")
            }
            LinalgError::Singular => write!(f, "singular system"),
        }
    }
}

/// Outcome of expressing a target vector in a basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoordinateError {
    DependentBasis,
    /// The target is not in the span; `residual_index` is the first carrier
    /// index where the best pivot-row reconstruction differs from the target.
    NotInSpan { residual_index: usize },
    Invalid(LinalgError),
}

impl fmt::Display for CoordinateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoordinateError::DependentBasis => write!(f, "basis is linearly dependent"),
            CoordinateError::NotInSpan { residual_index } => {
                write!(f, "target not in span (residual at index {residual_index})")
            }
            CoordinateError::Invalid(e) => write!(f, "{e}"),
        }
    }
}

impl FuncOnS {
    pub fn new(field: ScalarField, values: Vec<Scalar>) -> Result<Self, LinalgError> {
        for (index, v) in values.iter().enumerate() {
            if !field.contains(v) {
                return Err(LinalgError::BadScalar { index });
            }
        }
        Ok(FuncOnS { field, values })
    }

    pub fn zero(field: ScalarField, len: usize) -> Self {
        FuncOnS { field, values: vec![field.zero(); len] }
    }

    pub fn constant(field: ScalarField, len: usize, value: Scalar) -> Result<Self, LinalgError> {
        Self::new(field, vec![value; len])
    }

    /// Build from integer values lifted into the field.
    pub fn from_i64(field: ScalarField, values: &[i64]) -> Self {
        FuncOnS { field, values: values.iter().map(|&k| field.from_i64(k)).collect() }
    }

    pub fn field(&self) -> ScalarField {
        self.field
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn value(&self, i: usize) -> &Scalar {
        &self.values[i]
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| self.field.is_zero(v))
    }

    pub fn add(&self, other: &FuncOnS) -> Result<FuncOnS, LinalgError> {
        self.compatible(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| self.field.add(a, b))
            .collect();
        Ok(FuncOnS { field: self.field, values })
    }

    pub fn sub(&self, other: &FuncOnS) -> Result<FuncOnS, LinalgError> {
        self.compatible(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| self.field.sub(a, b))
            .collect();
        Ok(FuncOnS { field: self.field, values })
    }

    pub fn scale(&self, c: &Scalar) -> FuncOnS {
        let values = self.values.iter().map(|v| self.field.mul(c, v)).collect();
        FuncOnS { field: self.field, values }
    }

    pub fn negate(&self) -> FuncOnS {
        let values = self.values.iter().map(|v| self.field.neg(v)).collect();
        FuncOnS { field: self.field, values }
    }

    /// Precompose with an index map: `(h ∘ m)(x) = h(m(x))`.
    pub fn compose_index_map(&self, map: impl Fn(usize) -> usize) -> FuncOnS {
        let values = (0..self.values.len()).map(|x| self.values[map(x)].clone()).collect();
        FuncOnS { field: self.field, values }
    }

    fn compatible(&self, other: &FuncOnS) -> Result<(), LinalgError> {
        if self.field != other.field {
            return Err(LinalgError::MixedFields);
        }
        if self.values.len() != other.values.len() {
            return Err(LinalgError::LengthMismatch);
        }
        Ok(())
    }
}

/// Σ cᵢ·vᵢ over a common field.
pub fn linear_combination(
    terms: &[(&Scalar, &FuncOnS)],
) -> Result<FuncOnS, LinalgError> {
    let (first_c, first_v) = terms.first().expect("at least one term");
    let mut acc = first_v.scale(first_c);
    for (c, v) in &terms[1..] {
        acc = acc.add(&v.scale(c))?;
    }
    Ok(acc)
}

/// Dense exact matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixF {
    field: ScalarField,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl MatrixF {
    pub fn zero(field: ScalarField, rows: usize, cols: usize) -> Self {
        MatrixF { field, rows, cols, entries: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: ScalarField, n: usize) -> Self {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: ScalarField, rows: &[Vec<Scalar>]) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(LinalgError::LengthMismatch);
            }
            for (i, v) in row.iter().enumerate() {
                if !field.contains(v) {
                    return Err(LinalgError::BadScalar { index: i });
                }
                entries.push(v.clone());
            }
        }
        Ok(MatrixF { field, rows: r, cols: c, entries })
    }

    /// 2×2 literal.
    pub fn mat2(field: ScalarField, e: [Scalar; 4]) -> Self {
        MatrixF { field, rows: 2, cols: 2, entries: e.into() }
    }

    pub fn field(&self) -> ScalarField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn mul(&self, other: &MatrixF) -> Result<MatrixF, LinalgError> {
        if self.field != other.field {
            return Err(LinalgError::MixedFields);
        }
        if self.cols != other.rows {
            return Err(LinalgError::LengthMismatch);
        }
        let f = self.field;
        let mut out = MatrixF::zero(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let add = f.mul(a, other.get(k, j));
                    let cur = f.add(out.get(i, j), &add);
                    out.set(i, j, cur);
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> MatrixF {
        let entries = self.entries.iter().map(|v| self.field.mul(c, v)).collect();
        MatrixF { field: self.field, rows: self.rows, cols: self.cols, entries }
    }

    pub fn add(&self, other: &MatrixF) -> Result<MatrixF, LinalgError> {
        if self.field != other.field {
            return Err(LinalgError::MixedFields);
        }
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinalgError::LengthMismatch);
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| self.field.add(a, b))
            .collect();
        Ok(MatrixF { field: self.field, rows: self.rows, cols: self.cols, entries })
    }

    /// Exact inverse of a 2×2 matrix via the adjugate.
    pub fn inverse_2x2(&self) -> Result<MatrixF, LinalgError> {
        assert_eq!((self.rows, self.cols), (2, 2));
        let f = self.field;
        let (a, b, c, d) = (self.get(0, 0), self.get(0, 1), self.get(1, 0), self.get(1, 1));
        let det = f.sub(&f.mul(a, d), &f.mul(b, c));
        let inv_det = f.inv(&det).map_err(|_| LinalgError::Singular)?;
        Ok(MatrixF::mat2(
            f,
            [
                f.mul(&inv_det, d),
                f.neg(&f.mul(&inv_det, b)),
                f.neg(&f.mul(&inv_det, c)),
                f.mul(&inv_det, a),
            ],
        ))
    }
}

fn check_family(vectors: &[&FuncOnS]) -> Result<(), LinalgError> {
    if let Some(first) = vectors.first() {
        for v in &vectors[1..] {
            if v.field() != first.field() {
                return Err(LinalgError::MixedFields);
            }
            if v.len() != first.len() {
                return Err(LinalgError::LengthMismatch);
            }
        }
    }
    Ok(())
}

/// Exact rank of a family of vectors by pivoted Gaussian elimination.
pub fn rank(vectors: &[&FuncOnS]) -> Result<usize, LinalgError> {
    check_family(vectors)?;
    let Some(first) = vectors.first() else { return Ok(0) };
    let field = first.field();
    let n = first.len();
    let mut rows: Vec<Vec<Scalar>> = vectors.iter().map(|v| v.values().to_vec()).collect();
    let mut r = 0usize;
    for col in 0..n {
        let Some(pivot) = (r..rows.len()).find(|&i| !field.is_zero(&rows[i][col])) else {
            continue;
        };
        rows.swap(r, pivot);
        let inv = field.inv(&rows[r][col]).expect("pivot is nonzero");
        for c in col..n {
            rows[r][c] = field.mul(&inv, &rows[r][c]);
        }
        for i in 0..rows.len() {
            if i != r && !field.is_zero(&rows[i][col]) {
                let factor = rows[i][col].clone();
                for c in col..n {
                    let delta = field.mul(&factor, &rows[r][c]);
                    rows[i][c] = field.sub(&rows[i][c], &delta);
                }
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    Ok(r)
}

/// Express `target` as Σ cᵢ·basisᵢ exactly, or report why it cannot be done.
///
/// The returned coordinates always satisfy the round-trip identity
/// `linear_combination(c, basis) == target`; this is re-verified before
/// returning, and the first mismatching carrier index is the `NotInSpan`
/// witness.
pub fn coordinates_in_basis(
    target: &FuncOnS,
    basis: &[&FuncOnS],
) -> Result<Vec<Scalar>, CoordinateError> {
    let mut family: Vec<&FuncOnS> = basis.to_vec();
    family.push(target);
    check_family(&family).map_err(CoordinateError::Invalid)?;
    let field = target.field();
    let n = target.len();
    let k = basis.len();

    // Augmented system [basis columns | target], one row per carrier index.
    let mut rows: Vec<Vec<Scalar>> = (0..n)
        .map(|x| {
            let mut row: Vec<Scalar> = basis.iter().map(|b| b.value(x).clone()).collect();
            row.push(target.value(x).clone());
            row
        })
        .collect();

    let mut pivot_rows: Vec<usize> = Vec::with_capacity(k);
    let mut next = 0usize;
    for col in 0..k {
        let Some(p) = (next..n).find(|&i| !field.is_zero(&rows[i][col])) else {
            continue;
        };
        rows.swap(next, p);
        let inv = field.inv(&rows[next][col]).expect("pivot is nonzero");
        for c in col..=k {
            rows[next][c] = field.mul(&inv, &rows[next][c]);
        }
        for i in 0..n {
            if i != next && !field.is_zero(&rows[i][col]) {
                let factor = rows[i][col].clone();
                for c in col..=k {
                    let delta = field.mul(&factor, &rows[next][c]);
                    rows[i][c] = field.sub(&rows[i][c], &delta);
                }
            }
        }
        pivot_rows.push(next);
        next += 1;
    }
    if pivot_rows.len() < k {
        return Err(CoordinateError::DependentBasis);
    }
    let coords: Vec<Scalar> = pivot_rows.iter().map(|&r| rows[r][k].clone()).collect();

    // Exact round-trip check; its first failure is the NotInSpan witness.
    if k == 0 {
        if let Some(residual_index) = (0..n).find(|&x| !field.is_zero(target.value(x))) {
            return Err(CoordinateError::NotInSpan { residual_index });
        }
        return Ok(coords);
    }
    let terms: Vec<(&Scalar, &FuncOnS)> =
        coords.iter().zip(basis.iter().copied()).collect();
    let recombined = linear_combination(&terms).map_err(CoordinateError::Invalid)?;
    if let Some(residual_index) = (0..n).find(|&x| recombined.value(x) != target.value(x)) {
        return Err(CoordinateError::NotInSpan { residual_index });
    }
    Ok(coords)
}

/// Cramer's rule for a 2×2 system; `Singular` when the determinant vanishes.
#[allow(clippy::too_many_arguments)]
pub fn solve_2x2(
    field: ScalarField,
    a11: &Scalar,
    a12: &Scalar,
    a21: &Scalar,
    a22: &Scalar,
    b1: &Scalar,
    b2: &Scalar,
) -> Result<(Scalar, Scalar), LinalgError> {
    let det = field.sub(&field.mul(a11, a22), &field.mul(a12, a21));
    if field.is_zero(&det) {
        return Err(LinalgError::Singular);
    }
    let inv = field.inv(&det).expect("nonzero determinant");
    let x1 = field.mul(&field.sub(&field.mul(b1, a22), &field.mul(b2, a12)), &inv);
    let x2 = field.mul(&field.sub(&field.mul(a11, b2), &field.mul(a21, b1)), &inv);
    Ok((x1, x2))
}
