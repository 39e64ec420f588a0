//! Dense exact linear algebra over GF(p).
//!
//! Everything here produces canonical output: [`Matrix::rref`] is the unique
//! reduced row echelon form, nullspace bases use the free-variable convention
//! (free coordinate 1, ascending column index), and basis completion scans
//! standard basis vectors in index order.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Vector {
    field: Field,
    entries: Vec<u8>,
}

impl Vector {
    pub fn new(field: Field, entries: Vec<u8>) -> Result<Self> {
        if let Some(&e) = entries.iter().find(|&&e| e >= field.p()) {
            return Err(Error::input(format!(
                "vector entry {e} is not reduced modulo {}",
                field.p()
            )));
        }
        Ok(Vector { field, entries })
    }

    pub fn zeros(field: Field, len: usize) -> Self {
        Vector {
            field,
            entries: vec![0; len],
        }
    }

    pub fn unit(field: Field, len: usize, i: usize) -> Self {
        let mut v = Self::zeros(field, len);
        v.entries[i] = 1;
        v
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<u8> {
        self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    pub fn dot(&self, other: &Vector) -> u8 {
        debug_assert_eq!(self.len(), other.len());
        let f = self.field;
        self.entries
            .iter()
            .zip(&other.entries)
            .fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
    }

    /// Scales so that the first nonzero coordinate is 1. The zero vector is returned as is.
    pub fn projective(&self) -> Vector {
        let f = self.field;
        match self.entries.iter().find(|&&e| e != 0) {
            None => self.clone(),
            Some(&lead) => {
                let s = f.inv(lead);
                Vector {
                    field: f,
                    entries: self.entries.iter().map(|&e| f.mul(e, s)).collect(),
                }
            }
        }
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Row-major dense matrix with residues in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

/// Result of Gauss-Jordan elimination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl Matrix {
    pub fn new(field: Field, rows: usize, cols: usize, data: Vec<u8>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::input(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        if let Some(&e) = data.iter().find(|&&e| e >= field.p()) {
            return Err(Error::input(format!(
                "matrix entry {e} is not reduced modulo {}",
                field.p()
            )));
        }
        Ok(Matrix {
            field,
            rows,
            cols,
            data,
        })
    }

    /// Builds a matrix from row slices. All rows must share one length; `cols` is
    /// only consulted when there are no rows.
    pub fn from_rows<R: AsRef<[u8]>>(field: Field, rows: &[R], cols: usize) -> Result<Self> {
        let cols = rows.first().map_or(cols, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::input(format!(
                    "row {i} has {} entries, expected {cols}",
                    r.len()
                )));
            }
            data.extend_from_slice(r);
        }
        Matrix::new(field, rows.len(), cols, data)
    }

    pub fn from_columns(field: Field, rows: usize, columns: &[Vector]) -> Result<Self> {
        let mut m = Matrix::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows || c.field() != field {
                return Err(Error::input("column length or field mismatch"));
            }
            for i in 0..rows {
                m.set(i, j, c.entries[i]);
            }
        }
        Ok(m)
    }

    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[u8] {
        &self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u8) {
        debug_assert!(v < self.field.p());
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u8] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vector(&self, r: usize) -> Vector {
        Vector {
            field: self.field,
            entries: self.row(r).to_vec(),
        }
    }

    pub fn column(&self, c: usize) -> Vector {
        Vector {
            field: self.field,
            entries: (0..self.rows).map(|r| self.get(r, c)).collect(),
        }
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|r| self.row_vector(r)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows || self.field != rhs.field {
            return Err(Error::input(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let f = self.field;
        let mut out = Matrix::zeros(f, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let cur = out.get(i, j);
                    out.set(i, j, f.add(cur, f.mul(a, rhs.get(k, j))));
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vector(&self, v: &Vector) -> Result<Vector> {
        if v.len() != self.cols {
            return Err(Error::input("dimension mismatch in matrix-vector product"));
        }
        let f = self.field;
        let entries = (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v.entries())
                    .fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            })
            .collect();
        Ok(Vector { field: f, entries })
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                out.set(r, j, self.get(r, c));
            }
        }
        out
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            data.extend_from_slice(self.row(r));
        }
        Matrix {
            field: self.field,
            rows: rows.len(),
            cols: self.cols,
            data,
        }
    }

    pub fn append_row(&self, v: &Vector) -> Result<Matrix> {
        if v.len() != self.cols || v.field() != self.field {
            return Err(Error::input(format!(
                "appended row has length {}, expected {}",
                v.len(),
                self.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(v.entries());
        Ok(Matrix {
            field: self.field,
            rows: self.rows + 1,
            cols: self.cols,
            data,
        })
    }

    /// Vertical concatenation.
    pub fn stack(&self, below: &Matrix) -> Result<Matrix> {
        if below.cols != self.cols || below.field != self.field {
            return Err(Error::input("cannot stack matrices of different widths"));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&below.data);
        Ok(Matrix {
            field: self.field,
            rows: self.rows + below.rows,
            cols: self.cols,
            data,
        })
    }

    /// Horizontal concatenation.
    pub fn hstack(&self, right: &Matrix) -> Result<Matrix> {
        if right.rows != self.rows || right.field != self.field {
            return Err(Error::input("cannot join matrices of different heights"));
        }
        let mut out = Matrix::zeros(self.field, self.rows, self.cols + right.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c));
            }
            for c in 0..right.cols {
                out.set(r, self.cols + c, right.get(r, c));
            }
        }
        Ok(out)
    }

    pub fn rref(&self) -> Rref {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            m.swap_rows(r, pr);
            let s = f.inv(m.get(r, c));
            m.scale_row(r, s);
            for i in 0..m.rows {
                if i != r {
                    let factor = m.get(i, c);
                    if factor != 0 {
                        m.add_row_multiple(i, r, f.neg(factor));
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref {
            reduced: m,
            rank: pivots.len(),
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Nonzero rows of the RREF: the canonical basis of the row space.
    pub fn row_space_basis(&self) -> Matrix {
        let Rref { reduced, rank, .. } = self.rref();
        let keep: Vec<usize> = (0..rank).collect();
        reduced.select_rows(&keep)
    }

    pub fn same_row_space(&self, other: &Matrix) -> bool {
        self.cols == other.cols && self.row_space_basis() == other.row_space_basis()
    }

    /// Basis of `{x : self * x = 0}`, one vector per free column in ascending order,
    /// with the free coordinate set to 1.
    pub fn nullspace_basis(&self) -> Vec<Vector> {
        let f = self.field;
        let Rref {
            reduced, pivots, ..
        } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut x = vec![0u8; self.cols];
                x[free] = 1;
                for (i, &pc) in pivots.iter().enumerate() {
                    x[pc] = f.neg(reduced.get(i, free));
                }
                Vector {
                    field: f,
                    entries: x,
                }
            })
            .collect()
    }

    /// Matrix whose rows span the orthogonal complement of this row space.
    pub fn orthogonal_complement(&self) -> Matrix {
        let basis = self.nullspace_basis();
        let rows: Vec<&[u8]> = basis.iter().map(|v| v.entries()).collect();
        Matrix::from_rows(self.field, &rows, self.cols).expect("nullspace vectors share a length")
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let aug = self
            .hstack(&Matrix::identity(self.field, n))
            .expect("same height");
        let Rref {
            reduced, pivots, ..
        } = aug.rref();
        if pivots.iter().copied().take(n).ne(0..n) {
            return None;
        }
        let cols: Vec<usize> = (n..2 * n).collect();
        Some(reduced.select_columns(&cols))
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, s: u8) {
        let f = self.field;
        for c in 0..self.cols {
            let v = self.get(r, c);
            self.set(r, c, f.mul(v, s));
        }
    }

    /// row[dst] += s * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, s: u8) {
        let f = self.field;
        for c in 0..self.cols {
            let v = f.add(self.get(dst, c), f.mul(s, self.get(src, c)));
            self.set(dst, c, v);
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (i, e) in self.row(r).iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

fn check_same_space(target: &Vector, generators: &[Vector]) -> Result<()> {
    for g in generators {
        if g.len() != target.len() || g.field() != target.field() {
            return Err(Error::input(format!(
                "generator of length {} over {} does not match target of length {} over {}",
                g.len(),
                g.field(),
                target.len(),
                target.field()
            )));
        }
    }
    Ok(())
}

/// Coefficients `a` with `sum a_i g_i = target`, if the target lies in the span.
///
/// Free generators receive coefficient 0, so the answer is deterministic.
pub fn solve_in_span(target: &Vector, generators: &[Vector]) -> Result<Option<Vec<u8>>> {
    check_same_space(target, generators)?;
    let f = target.field();
    let dim = target.len();
    let k = generators.len();
    let mut cols: Vec<Vector> = generators.to_vec();
    cols.push(target.clone());
    let aug = Matrix::from_columns(f, dim, &cols)?;
    let Rref {
        reduced, pivots, ..
    } = aug.rref();
    if pivots.last() == Some(&k) {
        return Ok(None);
    }
    let mut coeffs = vec![0u8; k];
    for (i, &pc) in pivots.iter().enumerate() {
        coeffs[pc] = reduced.get(i, k);
    }
    Ok(Some(coeffs))
}

pub fn in_span(target: &Vector, generators: &[Vector]) -> Result<bool> {
    Ok(solve_in_span(target, generators)?.is_some())
}

/// Invertible `dim x dim` matrix whose first columns are `prefix` (which must be
/// linearly independent), completed with standard basis vectors in index order.
pub fn extend_to_basis_from(prefix: &[Vector], field: Field, dim: usize) -> Result<Matrix> {
    let mut cols: Vec<Vector> = Vec::with_capacity(dim);
    for v in prefix {
        if v.len() != dim || v.field() != field {
            return Err(Error::input("prefix vector does not live in the target space"));
        }
        cols.push(v.clone());
    }
    if Matrix::from_columns(field, dim, &cols)?.rank() != cols.len() {
        return Err(Error::input("prefix vectors are linearly dependent"));
    }
    for i in 0..dim {
        if cols.len() == dim {
            break;
        }
        let e = Vector::unit(field, dim, i);
        if !in_span(&e, &cols)? {
            cols.push(e);
        }
    }
    Matrix::from_columns(field, dim, &cols)
}

/// Invertible matrix with first column `v`.
pub fn extend_to_basis(v: &Vector, dim: usize) -> Result<Matrix> {
    if v.is_zero() {
        return Err(Error::input("cannot extend the zero vector to a basis"));
    }
    if v.len() != dim {
        return Err(Error::input(format!(
            "vector has length {}, expected {dim}",
            v.len()
        )));
    }
    extend_to_basis_from(std::slice::from_ref(v), v.field(), dim)
}

/// All projective points of `F^dim` (first nonzero coordinate 1) in lexicographic order.
pub fn projective_points(field: Field, dim: usize) -> Vec<Vector> {
    let p = field.order();
    let mut out = Vec::new();
    // lead position descending gives ascending lexicographic order
    for lead in (0..dim).rev() {
        let tail = dim - lead - 1;
        let count = p.pow(tail as u32);
        for idx in 0..count {
            let mut entries = vec![0u8; dim];
            entries[lead] = 1;
            let mut x = idx;
            for j in (lead + 1..dim).rev() {
                entries[j] = (x % p) as u8;
                x /= p;
            }
            out.push(Vector { field, entries });
        }
    }
    out
}

/// Projective points of the row space of `basis`, lexicographically sorted.
pub fn projective_points_of_span(basis: &Matrix) -> Vec<Vector> {
    let b = basis.row_space_basis();
    let f = b.field();
    let k = b.rows();
    let mut out: Vec<Vector> = projective_points(f, k)
        .into_iter()
        .map(|coeffs| {
            let mut entries = vec![0u8; b.cols()];
            for (i, &a) in coeffs.entries().iter().enumerate() {
                if a == 0 {
                    continue;
                }
                for (c, e) in entries.iter_mut().enumerate() {
                    *e = f.add(*e, f.mul(a, b.get(i, c)));
                }
            }
            Vector { field: f, entries }
        })
        .collect();
    out.sort();
    out
}

/// Number of projective points of an `dim`-dimensional space.
pub fn projective_count(field: Field, dim: usize) -> usize {
    let p = field.order();
    (0..dim).map(|i| p.pow(i as u32)).sum()
}
