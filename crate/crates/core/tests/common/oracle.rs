//! Brute-force reference implementations, written without the library's
//! linear algebra or solvers. Matroids are plain independence tables over
//! bitmasks; depths follow the recursive definitions literally, and the
//! vector-move parameters use iterative deepening over every nonzero vector.

#![allow(dead_code)]

pub type Rows = Vec<Vec<u64>>;

pub fn inv(a: u64, p: u64) -> u64 {
    (1..p).find(|x| a * x % p == 1).expect("nonzero in a prime field")
}

/// Rank of a list of rows over GF(p) by plain Gaussian elimination.
pub fn rank(rows: &[Vec<u64>], p: u64) -> usize {
    let mut m: Rows = rows.to_vec();
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..m.len()).find(|&i| !m[i][c].is_multiple_of(p)) else {
            continue;
        };
        m.swap(r, piv);
        let s = inv(m[r][c] % p, p);
        for x in m[r].iter_mut() {
            *x = *x * s % p;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_multiple_of(p) {
                let f = m[i][c] % p;
                let pivot = m[r].clone();
                for (x, &y) in m[i].iter_mut().zip(&pivot) {
                    *x = (*x + p * p - f * y % p) % p;
                }
            }
        }
        r += 1;
    }
    r
}

pub fn column(a: &[Vec<u64>], c: usize) -> Vec<u64> {
    a.iter().map(|r| r[c]).collect()
}

/// Rank of the column vectors `vs` (each of the same length).
pub fn rank_of_vectors(vs: &[Vec<u64>], p: u64) -> usize {
    rank(vs, p)
}

/// All vectors of `F_p^len` except zero, in counter order.
pub fn nonzero_vectors(p: u64, len: usize) -> Vec<Vec<u64>> {
    let total = p.pow(len as u32);
    (1..total)
        .map(|mut i| {
            (0..len)
                .map(|_| {
                    let d = i % p;
                    i /= p;
                    d
                })
                .collect()
        })
        .collect()
}

/// A matroid as its family of independent sets over `n` positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetMatroid {
    pub n: usize,
    pub indep: Vec<bool>,
}

fn bits(mask: usize) -> Vec<usize> {
    (0..usize::BITS as usize).filter(|&i| mask >> i & 1 == 1).collect()
}

impl SetMatroid {
    /// Columns of `a` modulo the span of `contracted`.
    pub fn from_matrix(a: &[Vec<u64>], cols: usize, contracted: &[Vec<u64>], p: u64) -> Self {
        let base = rank_of_vectors(contracted, p);
        let indep = (0..1usize << cols)
            .map(|s| {
                let mut vs: Vec<Vec<u64>> = contracted.to_vec();
                vs.extend(bits(s).into_iter().map(|c| column(a, c)));
                rank_of_vectors(&vs, p) - base == s.count_ones() as usize
            })
            .collect();
        SetMatroid { n: cols, indep }
    }

    pub fn full(&self) -> usize {
        (1 << self.n) - 1
    }

    pub fn rank_of(&self, s: usize) -> usize {
        (0..1usize << self.n)
            .filter(|&t| t & !s == 0 && self.indep[t])
            .map(|t| t.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn rank(&self) -> usize {
        self.rank_of(self.full())
    }

    pub fn circuits(&self) -> Vec<usize> {
        (1..1usize << self.n)
            .filter(|&s| !self.indep[s] && bits(s).iter().all(|&i| self.indep[s & !(1 << i)]))
            .collect()
    }

    /// Components as position masks, ordered by smallest position.
    pub fn components(&self) -> Vec<usize> {
        let circuits = self.circuits();
        let mut comp: Vec<usize> = (0..self.n).map(|i| 1 << i).collect();
        loop {
            let mut changed = false;
            for c in &circuits {
                for x in comp.iter_mut() {
                    if *x & c != 0 && *x | c != *x {
                        *x |= c;
                        changed = true;
                    }
                }
                for i in 0..self.n {
                    for j in 0..self.n {
                        if comp[i] & comp[j] != 0 && comp[i] | comp[j] != comp[i] {
                            comp[i] |= comp[j];
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        let mut out: Vec<usize> = Vec::new();
        for x in comp {
            if !out.contains(&x) {
                out.push(x);
            }
        }
        out
    }

    /// Keeps the positions in `keep`, renumbered in order.
    pub fn restrict(&self, keep: usize) -> SetMatroid {
        let pos = bits(keep);
        let n = pos.len();
        let indep = (0..1usize << n)
            .map(|s| {
                let orig = bits(s).iter().fold(0, |acc, &i| acc | 1 << pos[i]);
                self.indep[orig]
            })
            .collect();
        SetMatroid { n, indep }
    }

    pub fn delete(&self, e: usize) -> SetMatroid {
        self.restrict(self.full() & !(1 << e))
    }

    pub fn contract(&self, e: usize) -> SetMatroid {
        let keep = self.full() & !(1 << e);
        let pos = bits(keep);
        let loop_e = !self.indep[1 << e];
        let indep = (0..1usize << pos.len())
            .map(|s| {
                let orig = bits(s).iter().fold(0, |acc, &i| acc | 1 << pos[i]);
                if loop_e {
                    self.indep[orig]
                } else {
                    self.indep[orig | 1 << e]
                }
            })
            .collect();
        SetMatroid {
            n: pos.len(),
            indep,
        }
    }

    /// S independent in the dual iff the complement still has full rank.
    pub fn dual(&self) -> SetMatroid {
        let r = self.rank();
        let indep = (0..1usize << self.n)
            .map(|s| self.rank_of(self.full() & !s) == r)
            .collect();
        SetMatroid { n: self.n, indep }
    }

    pub fn cd(&self) -> u32 {
        self.element_depth(true)
    }

    pub fn dd(&self) -> u32 {
        self.element_depth(false)
    }

    fn element_depth(&self, contract: bool) -> u32 {
        match self.n {
            0 => return 0,
            1 => return 1,
            _ => {}
        }
        let comps = self.components();
        if comps.len() > 1 {
            return comps
                .iter()
                .map(|&c| self.restrict(c).element_depth(contract))
                .max()
                .unwrap();
        }
        1 + (0..self.n)
            .map(|e| {
                let m = if contract { self.contract(e) } else { self.delete(e) };
                m.element_depth(contract)
            })
            .min()
            .unwrap()
    }
}

/// Represented matroid with contracted vectors, as raw rows over GF(p).
#[derive(Clone, Debug)]
pub struct Rep {
    pub p: u64,
    pub rows: Rows,
    pub cols: usize,
    pub contracted: Vec<Vec<u64>>,
}

impl Rep {
    pub fn new(p: u64, rows: Rows, cols: usize) -> Self {
        Rep {
            p,
            rows,
            cols,
            contracted: vec![],
        }
    }

    pub fn matroid(&self) -> SetMatroid {
        SetMatroid::from_matrix(&self.rows, self.cols, &self.contracted, self.p)
    }

    pub fn select(&self, keep: usize) -> Rep {
        let pos = bits(keep);
        Rep {
            p: self.p,
            rows: self
                .rows
                .iter()
                .map(|r| pos.iter().map(|&c| r[c]).collect())
                .collect(),
            cols: pos.len(),
            contracted: self.contracted.clone(),
        }
    }

    fn height(&self) -> usize {
        self.rows.len()
    }

    /// csd(M) <= d, trying every nonzero vector of `F^h` as the next move.
    fn csd_at_most(&self, d: u32) -> bool {
        let m = self.matroid();
        if m.rank() == 0 {
            return true;
        }
        let comps = m.components();
        if comps.len() > 1 {
            return comps.iter().all(|&c| self.select(c).csd_at_most(d));
        }
        if d == 0 {
            return false;
        }
        nonzero_vectors(self.p, self.height()).into_iter().any(|v| {
            let mut next = self.clone();
            next.contracted.push(v);
            // moves that change nothing cannot help
            next.matroid() != m && next.csd_at_most(d - 1)
        })
    }

    pub fn csd(&self) -> u32 {
        (0..).find(|&d| self.csd_at_most(d)).unwrap()
    }

    /// dsd(M) <= d, trying every nonzero vector of `F^n` as an extra row.
    fn dsd_at_most(&self, d: u32) -> bool {
        let m = self.matroid();
        if m.rank() == self.cols {
            return true;
        }
        let comps = m.components();
        if comps.len() > 1 {
            return comps.iter().all(|&c| self.select(c).dsd_at_most(d));
        }
        if d == 0 {
            return false;
        }
        nonzero_vectors(self.p, self.cols).into_iter().any(|v| {
            let mut next = self.clone();
            next.rows.push(v);
            next.matroid() != m && next.dsd_at_most(d - 1)
        })
    }

    pub fn dsd(&self) -> u32 {
        assert!(self.contracted.is_empty());
        (0..).find(|&d| self.dsd_at_most(d)).unwrap()
    }
}

/// Tree-depth by trying every parent array on at most a handful of vertices.
pub fn tree_depth(n: usize, edges: &[(usize, usize)]) -> usize {
    if n == 0 {
        return 0;
    }
    let mut best = usize::MAX;
    let total = (n as u64 + 1).pow(n as u32);
    for code in 0..total {
        let mut c = code;
        let parent: Vec<Option<usize>> = (0..n)
            .map(|_| {
                let d = (c % (n as u64 + 1)) as usize;
                c /= n as u64 + 1;
                (d < n).then_some(d)
            })
            .collect();
        let ancestors = |v: usize| -> Option<Vec<usize>> {
            let mut out = vec![v];
            let mut cur = parent[v];
            while let Some(x) = cur {
                if out.contains(&x) {
                    return None;
                }
                out.push(x);
                cur = parent[x];
            }
            Some(out)
        };
        let Some(chains) = (0..n).map(ancestors).collect::<Option<Vec<_>>>() else {
            continue;
        };
        let ok = edges
            .iter()
            .all(|&(a, b)| chains[a].contains(&b) || chains[b].contains(&a));
        if ok {
            best = best.min(chains.iter().map(|c| c.len()).max().unwrap());
        }
    }
    best
}

pub fn dual_graph_edges(rows: &[Vec<u64>]) -> Vec<(usize, usize)> {
    let h = rows.len();
    let cols = rows.first().map_or(0, |r| r.len());
    let mut edges = Vec::new();
    for a in 0..h {
        for b in a + 1..h {
            if (0..cols).any(|c| rows[a][c] != 0 && rows[b][c] != 0) {
                edges.push((a, b));
            }
        }
    }
    edges
}

pub fn dual_tree_depth(rows: &[Vec<u64>]) -> usize {
    tree_depth(rows.len(), &dual_graph_edges(rows))
}

/// Every invertible `h x h` matrix over GF(p).
pub fn invertible_matrices(p: u64, h: usize) -> Vec<Rows> {
    let total = p.pow((h * h) as u32);
    (0..total)
        .map(|mut i| {
            (0..h)
                .map(|_| {
                    (0..h)
                        .map(|_| {
                            let d = i % p;
                            i /= p;
                            d
                        })
                        .collect()
                })
                .collect::<Rows>()
        })
        .filter(|t| rank(t, p) == h)
        .collect()
}

pub fn mul(t: &[Vec<u64>], a: &[Vec<u64>], p: u64) -> Rows {
    let cols = a.first().map_or(0, |r| r.len());
    t.iter()
        .map(|tr| {
            (0..cols)
                .map(|c| tr.iter().zip(a).map(|(x, ar)| x * ar[c]).sum::<u64>() % p)
                .collect()
        })
        .collect()
}

pub fn min_dual_td_row_equiv(rows: &[Vec<u64>], p: u64) -> usize {
    invertible_matrices(p, rows.len())
        .iter()
        .map(|t| dual_tree_depth(&mul(t, rows, p)))
        .min()
        .unwrap()
}
