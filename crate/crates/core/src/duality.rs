//! Duals through orthogonal complements, and the subspace operations
//! `W -> W ∩ span(v)^⊥` (contraction•) and `W -> span(W ∪ {v})` (deletion•).

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{in_span, Matrix, Vector};
use crate::matroid::{Label, RepMatroid};

/// The matroid `M(W)` of a subspace `W ⊆ F^n`: coordinate `i` is element `labels[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceMatroid {
    basis: Matrix,
    labels: Vec<Label>,
}

/// Dual matroid on the same labels, represented by a nullspace basis of the matrix.
pub fn dual(m: &RepMatroid) -> RepMatroid {
    let q = m.quotient().expect("contracted vectors are valid");
    let comp = q.matrix().orthogonal_complement();
    RepMatroid::with_labels(comp, q.labels().to_vec()).expect("labels unchanged")
}

impl SubspaceMatroid {
    /// Row space of `basis` (any spanning set) with labels `0..n`.
    pub fn new(basis: Matrix) -> Self {
        let labels = (0..basis.cols() as Label).collect();
        SubspaceMatroid {
            basis: basis.row_space_basis(),
            labels,
        }
    }

    pub fn from_rep(m: &RepMatroid) -> Self {
        let q = m.quotient().expect("contracted vectors are valid");
        SubspaceMatroid {
            basis: q.matrix().row_space_basis(),
            labels: q.labels().to_vec(),
        }
    }

    pub fn to_rep(&self) -> RepMatroid {
        RepMatroid::with_labels(self.basis.clone(), self.labels.clone()).expect("labels distinct")
    }

    pub fn field(&self) -> Field {
        self.basis.field()
    }

    /// RREF basis of `W`.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn dual(&self) -> SubspaceMatroid {
        SubspaceMatroid {
            basis: self.basis.orthogonal_complement().row_space_basis(),
            labels: self.labels.clone(),
        }
    }

    pub fn contains(&self, v: &Vector) -> bool {
        in_span(v, &self.basis.row_vectors()).expect("dimensions checked by caller")
    }

    fn check(&self, v: &Vector) -> Result<()> {
        if v.field() != self.field() || v.len() != self.ambient_dim() {
            return Err(Error::input(format!(
                "vector of length {} does not live in F^{}",
                v.len(),
                self.ambient_dim()
            )));
        }
        if v.is_zero() {
            return Err(Error::input("operation needs a nonzero vector"));
        }
        Ok(())
    }

    /// `M(W ∩ span(v)^⊥)`, computed as the kernel of `w -> w·v` on `W`.
    pub fn contract_bullet(&self, v: &Vector) -> Result<SubspaceMatroid> {
        self.check(v)?;
        let f = self.field();
        let rows = self.basis.row_vectors();
        let functional: Vec<u8> = rows.iter().map(|w| w.dot(v)).collect();
        let kernel = Matrix::from_rows(f, &[functional], rows.len())?.nullspace_basis();
        let mut combos = Matrix::zeros(f, kernel.len(), self.ambient_dim());
        for (r, c) in kernel.iter().enumerate() {
            for (i, &a) in c.entries().iter().enumerate() {
                if a == 0 {
                    continue;
                }
                for j in 0..self.ambient_dim() {
                    let cur = combos.get(r, j);
                    combos.set(r, j, f.add(cur, f.mul(a, self.basis.get(i, j))));
                }
            }
        }
        Ok(SubspaceMatroid {
            basis: combos.row_space_basis(),
            labels: self.labels.clone(),
        })
    }

    /// `M(span(W ∪ {v}))`: appending `v` as a row.
    pub fn delete_bullet(&self, v: &Vector) -> Result<SubspaceMatroid> {
        self.check(v)?;
        Ok(SubspaceMatroid {
            basis: self.basis.append_row(v)?.row_space_basis(),
            labels: self.labels.clone(),
        })
    }

    /// Restriction to the coordinates in `mask` (projection of `W`).
    pub fn restrict_mask(&self, mask: crate::matroid::Mask) -> SubspaceMatroid {
        SubspaceMatroid::from_rep(&self.to_rep().restrict_mask(mask))
    }
}
