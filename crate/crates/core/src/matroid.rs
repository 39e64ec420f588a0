//! Matroids represented by a matrix over GF(p), optionally modulo a contracted subspace.
//!
//! A set of columns `S` is dependent iff some nontrivial linear combination of `S`
//! lies in the span of the contracted vectors. With no contracted vectors this is
//! ordinary linear dependence. Constructors normally fold the contracted vectors
//! into the matrix (quotient representation) so that every matroid carries a
//! single matrix; [`RepMatroid::with_contracted_lazy`] keeps them separate and is
//! only meant for cross-checking the two forms.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{extend_to_basis, extend_to_basis_from, Matrix, Vector};

/// Ground-set element identifier.
pub type Label = u32;

/// Bitmask over column positions of a particular matroid.
pub type Mask = u64;

/// Default cap on ground-set size for subset enumeration (circuits, exhaustive checks).
pub const DEFAULT_SUBSET_LIMIT: usize = 20;

/// Default cap on column count for exhaustive canonical keys.
pub const DEFAULT_CANONICAL_LIMIT: usize = 8;

/// Hard ceiling for exhaustive canonical keys.
pub const CANONICAL_CEILING: usize = 12;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GroundSubset(BTreeSet<Label>);

impl GroundSubset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, l: Label) -> bool {
        self.0.contains(&l)
    }

    pub fn insert(&mut self, l: Label) -> bool {
        self.0.insert(l)
    }

    pub fn iter(&self) -> impl Iterator<Item = Label> + '_ {
        self.0.iter().copied()
    }

    pub fn min(&self) -> Option<Label> {
        self.0.first().copied()
    }
}

impl FromIterator<Label> for GroundSubset {
    fn from_iter<I: IntoIterator<Item = Label>>(iter: I) -> Self {
        GroundSubset(iter.into_iter().collect())
    }
}

impl<const N: usize> From<[Label; N]> for GroundSubset {
    fn from(a: [Label; N]) -> Self {
        a.into_iter().collect()
    }
}

impl fmt::Display for GroundSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "c{}", l + 1)?;
        }
        write!(f, "}}")
    }
}

/// Memo/dedupe key of a matroid up to row equivalence and column relabeling.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    pub bytes: Vec<u8>,
    /// `false` when the column count exceeded the exhaustive limit and the weaker
    /// sorted-column key was used. Equal weak keys still imply isomorphic matroids.
    pub exact: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepMatroid {
    field: Field,
    matrix: Matrix,
    labels: Vec<Label>,
    contracted: Vec<Vector>,
}

pub(crate) fn popcount(m: Mask) -> usize {
    m.count_ones() as usize
}

pub(crate) fn positions(mask: Mask) -> Vec<usize> {
    (0..64).filter(|&i| mask >> i & 1 == 1).collect()
}

pub(crate) fn full_mask(n: usize) -> Mask {
    if n >= 64 {
        Mask::MAX
    } else {
        (1 << n) - 1
    }
}

/// Calls `f` for every `k`-subset of `0..n` in lexicographic order.
pub(crate) fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(Mask)) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(idx.iter().fold(0, |m, &i| m | 1 << i));
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Independent basis of the span of `vs` as vectors (RREF rows).
fn independent_basis(field: Field, len: usize, vs: &[Vector]) -> Result<Vec<Vector>> {
    for v in vs {
        if v.len() != len || v.field() != field {
            return Err(Error::input(format!(
                "contracted vector has length {}, expected {len}",
                v.len()
            )));
        }
    }
    let rows: Vec<&[u8]> = vs.iter().map(|v| v.entries()).collect();
    Ok(Matrix::from_rows(field, &rows, len)?
        .row_space_basis()
        .row_vectors())
}

impl RepMatroid {
    /// Matroid of the columns of `matrix`, labelled `0..n`.
    pub fn new(matrix: Matrix) -> Self {
        let labels = (0..matrix.cols() as Label).collect();
        RepMatroid {
            field: matrix.field(),
            matrix,
            labels,
            contracted: Vec::new(),
        }
    }

    pub fn with_labels(matrix: Matrix, labels: Vec<Label>) -> Result<Self> {
        if labels.len() != matrix.cols() {
            return Err(Error::input(format!(
                "{} labels for {} columns",
                labels.len(),
                matrix.cols()
            )));
        }
        let distinct: BTreeSet<_> = labels.iter().collect();
        if distinct.len() != labels.len() {
            return Err(Error::input("labels must be distinct"));
        }
        Ok(RepMatroid {
            field: matrix.field(),
            matrix,
            labels,
            contracted: Vec::new(),
        })
    }

    /// `M(A, {v1..vk})`, folded into a quotient matrix.
    pub fn with_contracted(matrix: Matrix, contracted: &[Vector]) -> Result<Self> {
        Self::with_contracted_lazy(matrix, contracted)?.quotient()
    }

    /// `M(A, {v1..vk})` keeping the contracted vectors alongside the matrix.
    pub fn with_contracted_lazy(matrix: Matrix, contracted: &[Vector]) -> Result<Self> {
        let basis = independent_basis(matrix.field(), matrix.rows(), contracted)?;
        let mut m = RepMatroid::new(matrix);
        m.contracted = basis;
        Ok(m)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn contracted(&self) -> &[Vector] {
        &self.contracted
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn rows(&self) -> usize {
        self.matrix.rows()
    }

    pub fn full_mask(&self) -> Mask {
        full_mask(self.len())
    }

    pub fn ground(&self) -> GroundSubset {
        self.labels.iter().copied().collect()
    }

    pub fn position(&self, label: Label) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    pub fn mask_of(&self, s: &GroundSubset) -> Result<Mask> {
        self.check_mask_width()?;
        let mut mask = 0;
        for l in s.iter() {
            let i = self
                .position(l)
                .ok_or_else(|| Error::input(format!("unknown element c{}", l + 1)))?;
            mask |= 1 << i;
        }
        Ok(mask)
    }

    pub fn subset_of(&self, mask: Mask) -> GroundSubset {
        positions(mask)
            .into_iter()
            .filter(|&i| i < self.len())
            .map(|i| self.labels[i])
            .collect()
    }

    fn check_mask_width(&self) -> Result<()> {
        Error::guard("ground set size for bitmask operations", 64, self.len())
    }

    /// Rank of the columns in `mask` modulo the contracted span.
    pub fn rank_mask(&self, mask: Mask) -> usize {
        let cols = positions(mask);
        let sub = self.matrix.select_columns(&cols);
        if self.contracted.is_empty() {
            return sub.rank();
        }
        let k = Matrix::from_columns(self.field, self.rows(), &self.contracted)
            .expect("contracted vectors have the row dimension");
        sub.hstack(&k).expect("same height").rank() - self.contracted.len()
    }

    pub fn rank(&self) -> usize {
        self.rank_mask(self.full_mask())
    }

    pub fn rank_of(&self, s: &GroundSubset) -> Result<usize> {
        Ok(self.rank_mask(self.mask_of(s)?))
    }

    pub fn is_independent_mask(&self, mask: Mask) -> bool {
        self.rank_mask(mask) == popcount(mask)
    }

    pub fn is_independent(&self, s: &GroundSubset) -> Result<bool> {
        Ok(self.is_independent_mask(self.mask_of(s)?))
    }

    /// Circuits as position masks in (size, lexicographic) order.
    pub fn circuit_masks(&self, limit: usize) -> Result<Vec<Mask>> {
        let n = self.len();
        Error::guard("ground set size for circuit enumeration", limit, n)?;
        self.check_mask_width()?;
        let mut circuits: Vec<Mask> = Vec::new();
        for k in 1..=n {
            let mut found = Vec::new();
            for_each_combination(n, k, |m| {
                if circuits.iter().all(|&c| c & m != c) && !self.is_independent_mask(m) {
                    found.push(m);
                }
            });
            circuits.extend(found);
        }
        Ok(circuits)
    }

    pub fn circuits(&self) -> Result<Vec<GroundSubset>> {
        Ok(self
            .circuit_masks(DEFAULT_SUBSET_LIMIT)?
            .into_iter()
            .map(|m| self.subset_of(m))
            .collect())
    }

    /// Connected components via union-find over circuits, as masks sorted by
    /// smallest label.
    pub fn component_masks(&self, limit: usize) -> Result<Vec<Mask>> {
        let circuits = self.circuit_masks(limit)?;
        let mut uf = UnionFind::new(self.len());
        for c in circuits {
            let pos = positions(c);
            for w in pos.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
        Ok(self.classes(&mut uf))
    }

    /// Components via the fundamental circuits of a greedy basis.
    ///
    /// Agrees with [`RepMatroid::component_masks`] but needs only `O(n^2)` rank
    /// computations instead of enumerating every subset.
    pub fn component_masks_fast(&self) -> Vec<Mask> {
        let n = self.len();
        let mut basis: Mask = 0;
        for i in 0..n {
            if self.is_independent_mask(basis | 1 << i) {
                basis |= 1 << i;
            }
        }
        let mut uf = UnionFind::new(n);
        for e in 0..n {
            if basis >> e & 1 == 1 {
                continue;
            }
            for b in positions(basis) {
                if self.is_independent_mask((basis & !(1 << b)) | 1 << e) {
                    uf.union(e, b);
                }
            }
        }
        self.classes(&mut uf)
    }

    fn classes(&self, uf: &mut UnionFind) -> Vec<Mask> {
        let n = self.len();
        let mut by_root: Vec<Mask> = vec![0; n];
        for i in 0..n {
            by_root[uf.find(i)] |= 1 << i;
        }
        let mut classes: Vec<Mask> = by_root.into_iter().filter(|&m| m != 0).collect();
        classes.sort_by_key(|&m| positions(m).iter().map(|&i| self.labels[i]).min());
        classes
    }

    pub fn components(&self) -> Result<Vec<GroundSubset>> {
        Ok(self
            .component_masks(DEFAULT_SUBSET_LIMIT)?
            .into_iter()
            .map(|m| self.subset_of(m))
            .collect())
    }

    /// Exactly one component. The empty matroid is not connected.
    pub fn is_connected(&self) -> bool {
        !self.is_empty() && self.component_masks_fast().len() == 1
    }

    pub fn restrict_mask(&self, mask: Mask) -> RepMatroid {
        let cols: Vec<usize> = positions(mask).into_iter().filter(|&i| i < self.len()).collect();
        RepMatroid {
            field: self.field,
            matrix: self.matrix.select_columns(&cols),
            labels: cols.iter().map(|&i| self.labels[i]).collect(),
            contracted: self.contracted.clone(),
        }
    }

    pub fn restrict(&self, s: &GroundSubset) -> Result<RepMatroid> {
        Ok(self.restrict_mask(self.mask_of(s)?))
    }

    pub fn delete_element(&self, label: Label) -> Result<RepMatroid> {
        let i = self
            .position(label)
            .ok_or_else(|| Error::input(format!("unknown element c{}", label + 1)))?;
        Ok(self.restrict_mask(self.full_mask() & !(1 << i)))
    }

    /// Same matroid with the contracted span folded into the matrix.
    pub fn quotient(&self) -> Result<RepMatroid> {
        if self.contracted.is_empty() {
            return Ok(self.clone());
        }
        let h = self.rows();
        let k = self.contracted.len();
        let t = extend_to_basis_from(&self.contracted, self.field, h)?;
        let a = t
            .inverse()
            .expect("basis completion is invertible")
            .mul(&self.matrix)?;
        let keep: Vec<usize> = (k..h).collect();
        Ok(RepMatroid {
            field: self.field,
            matrix: a.select_rows(&keep),
            labels: self.labels.clone(),
            contracted: Vec::new(),
        })
    }

    /// `M/v`: same labels, one row fewer. `v` is given in the coordinates of the
    /// current matrix.
    pub fn contract_vector(&self, v: &Vector) -> Result<RepMatroid> {
        let m = self.quotient()?;
        if v.field() != m.field {
            return Err(Error::input("vector lives over a different field"));
        }
        if v.len() != m.rows() {
            return Err(Error::input(format!(
                "contraction vector has length {}, matrix has {} rows",
                v.len(),
                m.rows()
            )));
        }
        let t = extend_to_basis(v, m.rows())?;
        let a = t
            .inverse()
            .expect("basis completion is invertible")
            .mul(&m.matrix)?;
        let keep: Vec<usize> = (1..a.rows()).collect();
        Ok(RepMatroid {
            field: m.field,
            matrix: a.select_rows(&keep),
            labels: m.labels,
            contracted: Vec::new(),
        })
    }

    /// `M/e` in the set sense: `e` leaves the ground set.
    pub fn contract_element(&self, label: Label) -> Result<RepMatroid> {
        let m = self.quotient()?;
        let i = m
            .position(label)
            .ok_or_else(|| Error::input(format!("unknown element c{}", label + 1)))?;
        let col = m.matrix.column(i);
        let m = if col.is_zero() {
            m
        } else {
            m.contract_vector(&col)?
        };
        m.delete_element(label)
    }

    /// Column space of the (quotient) matrix as RREF rows in `F^h`.
    pub fn column_space(&self) -> Matrix {
        self.matrix.transpose().row_space_basis()
    }

    pub fn canonical_key(&self) -> CanonicalKey {
        self.canonical_key_with_limit(DEFAULT_CANONICAL_LIMIT)
    }

    /// Lexicographically least RREF over all column permutations, prefixed with
    /// `(p, rank, n)`. Beyond `limit` columns falls back to the RREF with sorted
    /// columns, flagged as inexact.
    pub fn canonical_key_with_limit(&self, limit: usize) -> CanonicalKey {
        let m = self.quotient().expect("contracted vectors are valid");
        let a = m.matrix.row_space_basis();
        let n = a.cols();
        let header = |rank: usize| {
            let mut b = vec![m.field.p()];
            b.extend_from_slice(&(rank as u16).to_be_bytes());
            b.extend_from_slice(&(n as u16).to_be_bytes());
            b
        };
        if n > limit.min(CANONICAL_CEILING) {
            let mut cols: Vec<Vec<u8>> = (0..n).map(|c| a.column(c).into_entries()).collect();
            cols.sort();
            let mut bytes = header(a.rows());
            bytes.push(0xff);
            for c in cols {
                bytes.extend(c);
            }
            return CanonicalKey {
                bytes,
                exact: false,
            };
        }
        let mut best: Option<Vec<u8>> = None;
        let mut perm: Vec<usize> = (0..n).collect();
        let mut visit = |perm: &[usize]| {
            let cand = a.select_columns(perm).row_space_basis();
            let data = cand.data();
            if best.as_deref().is_none_or(|b| data < b) {
                best = Some(data.to_vec());
            }
        };
        heap_permutations(&mut perm, &mut visit);
        let mut bytes = header(a.rows());
        bytes.extend(best.unwrap_or_default());
        CanonicalKey { bytes, exact: true }
    }

    /// Label-preserving equality of independence oracles (exhaustive).
    pub fn same_matroid(&self, other: &RepMatroid) -> bool {
        if self.labels != other.labels {
            let mut a = self.labels.clone();
            let mut b = other.labels.clone();
            a.sort_unstable();
            b.sort_unstable();
            if a != b {
                return false;
            }
        }
        let n = self.len();
        if n > DEFAULT_SUBSET_LIMIT {
            return false;
        }
        // map our positions onto theirs
        let map: Vec<usize> = self
            .labels
            .iter()
            .map(|&l| other.position(l).expect("same label set"))
            .collect();
        (0..=full_mask(n)).all(|mask| {
            let theirs = positions(mask).iter().fold(0, |acc, &i| acc | 1 << map[i]);
            self.is_independent_mask(mask) == other.is_independent_mask(theirs)
        })
    }

    /// Isomorphism by exhaustive search over bijections (at most 8 elements).
    pub fn isomorphic(&self, other: &RepMatroid) -> Result<bool> {
        let n = self.len();
        Error::guard("ground set size for isomorphism search", 8, n)?;
        if other.len() != n || self.rank() != other.rank() {
            return Ok(false);
        }
        let ours: Vec<bool> = (0..=full_mask(n)).map(|m| self.is_independent_mask(m)).collect();
        let theirs: Vec<bool> = (0..=full_mask(n)).map(|m| other.is_independent_mask(m)).collect();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut found = false;
        heap_permutations(&mut perm, &mut |perm: &[usize]| {
            if found {
                return;
            }
            found = (0..=full_mask(n)).all(|m| {
                let img = positions(m).iter().fold(0, |acc, &i| acc | 1 << perm[i]);
                ours[m as usize] == theirs[img as usize]
            });
        });
        Ok(found)
    }
}

impl fmt::Display for RepMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self.matrix, self.field)
    }
}

fn heap_permutations(perm: &mut [usize], visit: &mut impl FnMut(&[usize])) {
    let n = perm.len();
    let mut c = vec![0usize; n];
    visit(perm);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            visit(perm);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut x = x;
        while self.parent[x] != r {
            let next = self.parent[x];
            self.parent[x] = r;
            x = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}
