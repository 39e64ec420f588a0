#![allow(dead_code)]

pub mod oracle;

use matroid_depth::{Field, Matrix, RepMatroid};

pub fn gf(p: u16) -> Field {
    Field::new(p).unwrap()
}

pub fn mat(p: u16, rows: &[&[u8]]) -> Matrix {
    let cols = rows.first().map_or(0, |r| r.len());
    Matrix::from_rows(gf(p), rows, cols).unwrap()
}

pub fn rep(p: u16, rows: &[&[u8]]) -> RepMatroid {
    RepMatroid::new(mat(p, rows))
}

pub fn raw_rows(a: &Matrix) -> oracle::Rows {
    (0..a.rows())
        .map(|r| a.row(r).iter().map(|&x| x as u64).collect())
        .collect()
}

pub fn oracle_rep(a: &Matrix) -> oracle::Rep {
    oracle::Rep::new(a.field().p() as u64, raw_rows(a), a.cols())
}
