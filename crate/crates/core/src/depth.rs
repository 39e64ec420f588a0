//! Exact contraction-depth, deletion-depth, contraction*-depth and deletion*-depth,
//! with certificates that can be replayed independently.
//!
//! All four parameters share one recursion shape: a base case, a split into
//! connected components (value = max over components), and for connected
//! matroids one step of the parameter's move followed by recursion
//! (value = 1 + min over moves). Moves that leave the matroid unchanged are
//! never enumerated:
//!
//! | parameter | move                         | candidates                               |
//! |-----------|------------------------------|------------------------------------------|
//! | `cd`      | contract an element          | every element                            |
//! | `dd`      | delete an element            | every element                            |
//! | `csd`     | contract a vector `v ∈ F^h`  | projective points of the column space    |
//! | `dsd`     | append a row `v ∈ F^n`       | projective points of `F^n` outside `W`   |
//!
//! Values are memoized on [`RepMatroid::canonical_key_with_limit`], which is
//! invariant under row operations and column relabeling. Certificates are never
//! cached: they are rebuilt top-down from memoized values so that every label
//! and vector refers to the matroid actually being certified.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::duality::SubspaceMatroid;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::graph::dual_tree_depth;
use crate::linalg::{projective_count, projective_points, projective_points_of_span, Matrix, Vector};
use crate::matroid::{GroundSubset, Label, Mask, RepMatroid, DEFAULT_CANONICAL_LIMIT};

/// Size guards for the exact solvers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Ground-set size accepted by the depth solvers.
    pub max_elements: usize,
    /// Projective candidates per step (`(p^dim - 1)/(p - 1)`).
    pub max_candidates: usize,
    /// Vertices accepted by exact tree-depth.
    pub max_td_vertices: usize,
    /// Column count up to which memo keys are exhaustive canonical forms.
    pub canonical_columns: usize,
}

impl Limits {
    pub const ELEMENT_CEILING: usize = 20;
    pub const CANDIDATE_CEILING: usize = 100_000;
    pub const TD_CEILING: usize = crate::graph::TD_VERTEX_LIMIT;

    /// Clamps every guard to its hard ceiling.
    pub fn clamped(self) -> Limits {
        Limits {
            max_elements: self.max_elements.clamp(1, Self::ELEMENT_CEILING),
            max_candidates: self.max_candidates.clamp(1, Self::CANDIDATE_CEILING),
            max_td_vertices: self.max_td_vertices.clamp(1, Self::TD_CEILING),
            canonical_columns: self.canonical_columns.min(crate::matroid::CANONICAL_CEILING),
        }
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_elements: 12,
            max_candidates: 10_000,
            max_td_vertices: 18,
            canonical_columns: DEFAULT_CANONICAL_LIMIT,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Param {
    Cd,
    Dd,
    Csd,
    Dsd,
}

impl Param {
    pub const ALL: [Param; 4] = [Param::Cd, Param::Dd, Param::Csd, Param::Dsd];

    pub fn name(self) -> &'static str {
        match self {
            Param::Cd => "cd",
            Param::Dd => "dd",
            Param::Csd => "csd",
            Param::Dsd => "dsd",
        }
    }

    /// The parameter whose value on the dual matroid equals this one.
    pub fn dual(self) -> Param {
        match self {
            Param::Cd => Param::Dd,
            Param::Dd => Param::Cd,
            Param::Csd => Param::Dsd,
            Param::Dsd => Param::Csd,
        }
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Param {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cd" => Ok(Param::Cd),
            "dd" => Ok(Param::Dd),
            "csd" => Ok(Param::Csd),
            "dsd" => Ok(Param::Dsd),
            _ => Err(Error::input(format!("unknown parameter {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BaseKind {
    /// Empty ground set (cd and dd only; value 0).
    Empty,
    /// Rank 0 (csd; value 0).
    RankZero,
    /// One element (cd and dd; value 1).
    SingleElement,
    /// Rank equals ground-set size (dsd; value 0).
    FullyIndependent,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Action {
    ContractElement(Label),
    DeleteElement(Label),
    /// Contract `span(v)`, `v` in the row coordinates of the current matrix.
    ContractVector(Vec<u8>),
    /// Append `v` as a new row, `v` indexed by the current columns in order.
    AddRow(Vec<u8>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Part {
    pub elements: GroundSubset,
    pub certificate: DepthCertificate,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertNode {
    Base(BaseKind),
    Split(Vec<Part>),
    Step {
        action: Action,
        child: Box<DepthCertificate>,
    },
}

/// Decomposition tree witnessing `param(m) <= value`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DepthCertificate {
    pub value: u32,
    pub node: CertNode,
}

impl DepthCertificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::input(format!("malformed certificate: {e}")))
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        1 + match &self.node {
            CertNode::Base(_) => 0,
            CertNode::Split(parts) => parts.iter().map(|p| p.certificate.size()).sum(),
            CertNode::Step { child, .. } => child.size(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Tag {
    Param(Param),
    Cbd,
    Dbd,
}

/// Exact depth evaluator with an optional memo table.
#[derive(Debug)]
pub struct DepthSolver {
    limits: Limits,
    memo: Option<HashMap<(Tag, Vec<u8>), u32>>,
}

impl Default for DepthSolver {
    fn default() -> Self {
        DepthSolver::new(Limits::default())
    }
}

enum Shape {
    Base(BaseKind),
    Split(Vec<Mask>),
    Connected,
}

fn shape(param: Param, m: &RepMatroid) -> Shape {
    let n = m.len();
    match param {
        Param::Cd | Param::Dd if n == 0 => return Shape::Base(BaseKind::Empty),
        Param::Cd | Param::Dd if n == 1 => return Shape::Base(BaseKind::SingleElement),
        Param::Csd if m.rank() == 0 => return Shape::Base(BaseKind::RankZero),
        Param::Dsd if m.rank() == n => return Shape::Base(BaseKind::FullyIndependent),
        _ => {}
    }
    let comps = m.component_masks_fast();
    if comps.len() > 1 {
        Shape::Split(comps)
    } else {
        Shape::Connected
    }
}

fn base_value(kind: BaseKind) -> u32 {
    match kind {
        BaseKind::SingleElement => 1,
        _ => 0,
    }
}

/// Smallest value a nonempty child can take; lets the minimisation stop early.
fn child_floor(param: Param) -> u32 {
    match param {
        Param::Cd | Param::Dd => 1,
        Param::Csd | Param::Dsd => 0,
    }
}

/// Appends row `v` and re-reduces to an RREF basis (same matroid, same labels).
pub(crate) fn add_row(m: &RepMatroid, v: &Vector) -> Result<RepMatroid> {
    let a = m.quotient()?.matrix().append_row(v)?.row_space_basis();
    RepMatroid::with_labels(a, m.labels().to_vec())
}

/// Legal, non-trivial moves of a connected matroid in tie-break order.
fn moves(param: Param, m: &RepMatroid) -> Vec<Action> {
    match param {
        Param::Cd | Param::Dd => {
            let mut labels = m.labels().to_vec();
            labels.sort_unstable();
            labels
                .into_iter()
                .map(|l| {
                    if param == Param::Cd {
                        Action::ContractElement(l)
                    } else {
                        Action::DeleteElement(l)
                    }
                })
                .collect()
        }
        Param::Csd => projective_points_of_span(&m.column_space())
            .into_iter()
            .map(|v| Action::ContractVector(v.into_entries()))
            .collect(),
        Param::Dsd => {
            let w = SubspaceMatroid::from_rep(m);
            projective_points(m.field(), m.len())
                .into_iter()
                .filter(|v| !w.contains(v))
                .map(|v| Action::AddRow(v.into_entries()))
                .collect()
        }
    }
}

/// Applies a move. Fails if the move is malformed for `m`.
pub fn apply(param: Param, m: &RepMatroid, action: &Action) -> Result<RepMatroid> {
    let vector = |e: &[u8], len: usize| -> Result<Vector> {
        let v = Vector::new(m.field(), e.to_vec())?;
        if v.len() != len {
            return Err(Error::input(format!(
                "move vector has length {}, expected {len}",
                v.len()
            )));
        }
        Ok(v)
    };
    match (param, action) {
        (Param::Cd, Action::ContractElement(e)) => m.contract_element(*e),
        (Param::Dd, Action::DeleteElement(e)) => m.delete_element(*e),
        (Param::Csd, Action::ContractVector(v)) => {
            let q = m.quotient()?;
            q.contract_vector(&vector(v, q.rows())?)
        }
        (Param::Dsd, Action::AddRow(v)) => add_row(m, &vector(v, m.len())?),
        (p, a) => Err(Error::input(format!("{a:?} is not a {p} move"))),
    }
}

fn check_candidates(limits: &Limits, field: Field, dim: usize) -> Result<()> {
    let count = if dim >= 64 {
        usize::MAX
    } else {
        projective_count(field, dim)
    };
    Error::guard("candidate vectors per step", limits.max_candidates, count)
}

impl DepthSolver {
    pub fn new(limits: Limits) -> Self {
        DepthSolver {
            limits: limits.clamped(),
            memo: Some(HashMap::new()),
        }
    }

    /// Evaluates the recursions literally, without memoization.
    pub fn unmemoized(limits: Limits) -> Self {
        DepthSolver {
            limits: limits.clamped(),
            memo: None,
        }
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn memo_len(&self) -> usize {
        self.memo.as_ref().map_or(0, |m| m.len())
    }

    fn guard(&self, param: Param, m: &RepMatroid) -> Result<()> {
        Error::guard("ground set size", self.limits.max_elements, m.len())?;
        match param {
            Param::Csd => check_candidates(&self.limits, m.field(), m.rank()),
            Param::Dsd => check_candidates(&self.limits, m.field(), m.len()),
            _ => Ok(()),
        }
    }

    fn key(&self, tag: Tag, m: &RepMatroid) -> Option<(Tag, Vec<u8>)> {
        self.memo.as_ref()?;
        Some((tag, m.canonical_key_with_limit(self.limits.canonical_columns).bytes))
    }

    fn lookup(&self, key: &Option<(Tag, Vec<u8>)>) -> Option<u32> {
        let (memo, key) = (self.memo.as_ref()?, key.as_ref()?);
        memo.get(key).copied()
    }

    fn store(&mut self, key: Option<(Tag, Vec<u8>)>, v: u32) {
        if let (Some(memo), Some(key)) = (self.memo.as_mut(), key) {
            memo.entry(key).or_insert(v);
        }
    }

    /// Exact value of `param` on `m`.
    pub fn value(&mut self, param: Param, m: &RepMatroid) -> Result<u32> {
        let m = m.quotient()?;
        self.guard(param, &m)?;
        Ok(self.eval(param, &m))
    }

    fn eval(&mut self, param: Param, m: &RepMatroid) -> u32 {
        let key = self.key(Tag::Param(param), m);
        if let Some(v) = self.lookup(&key) {
            return v;
        }
        let v = match shape(param, m) {
            Shape::Base(kind) => base_value(kind),
            Shape::Split(comps) => comps
                .into_iter()
                .map(|c| self.eval(param, &m.restrict_mask(c)))
                .max()
                .unwrap_or(0),
            Shape::Connected => {
                let floor = child_floor(param);
                let mut best = u32::MAX;
                for a in moves(param, m) {
                    let child = apply(param, m, &a).expect("enumerated moves are valid");
                    best = best.min(self.eval(param, &child));
                    if best <= floor {
                        break;
                    }
                }
                1 + best
            }
        };
        self.store(key, v);
        v
    }

    /// Value together with a certificate attaining it.
    pub fn solve(&mut self, param: Param, m: &RepMatroid) -> Result<(u32, DepthCertificate)> {
        let m = m.quotient()?;
        self.guard(param, &m)?;
        let cert = self.build(param, &m);
        Ok((cert.value, cert))
    }

    fn build(&mut self, param: Param, m: &RepMatroid) -> DepthCertificate {
        match shape(param, m) {
            Shape::Base(kind) => DepthCertificate {
                value: base_value(kind),
                node: CertNode::Base(kind),
            },
            Shape::Split(comps) => {
                let parts: Vec<Part> = comps
                    .into_iter()
                    .map(|c| Part {
                        elements: m.subset_of(c),
                        certificate: self.build(param, &m.restrict_mask(c)),
                    })
                    .collect();
                DepthCertificate {
                    value: parts.iter().map(|p| p.certificate.value).max().unwrap_or(0),
                    node: CertNode::Split(parts),
                }
            }
            Shape::Connected => {
                let target = self.eval(param, m);
                for a in moves(param, m) {
                    let child = apply(param, m, &a).expect("enumerated moves are valid");
                    if 1 + self.eval(param, &child) == target {
                        let sub = self.build(param, &child);
                        return DepthCertificate {
                            value: target,
                            node: CertNode::Step {
                                action: a,
                                child: Box::new(sub),
                            },
                        };
                    }
                }
                unreachable!("the minimising move is among the enumerated moves")
            }
        }
    }

    pub fn cd(&mut self, m: &RepMatroid) -> Result<(u32, DepthCertificate)> {
        self.solve(Param::Cd, m)
    }

    pub fn dd(&mut self, m: &RepMatroid) -> Result<(u32, DepthCertificate)> {
        self.solve(Param::Dd, m)
    }

    pub fn csd(&mut self, m: &RepMatroid) -> Result<(u32, DepthCertificate)> {
        self.solve(Param::Csd, m)
    }

    pub fn dsd(&mut self, m: &RepMatroid) -> Result<(u32, DepthCertificate)> {
        self.solve(Param::Dsd, m)
    }

    /// Contraction•-depth of `M(W)`: steps `W -> W ∩ span(v)^⊥` for `v ∉ W^⊥`.
    pub fn cbd(&mut self, w: &SubspaceMatroid) -> Result<u32> {
        self.subspace_guard(w)?;
        Ok(self.eval_bullet(Tag::Cbd, w))
    }

    /// Deletion•-depth of `M(W)`: steps `W -> span(W ∪ {v})` for `v ∉ W`.
    pub fn dbd(&mut self, w: &SubspaceMatroid) -> Result<u32> {
        self.subspace_guard(w)?;
        Ok(self.eval_bullet(Tag::Dbd, w))
    }

    fn subspace_guard(&self, w: &SubspaceMatroid) -> Result<()> {
        Error::guard("ground set size", self.limits.max_elements, w.ambient_dim())?;
        check_candidates(&self.limits, w.field(), w.ambient_dim())
    }

    fn eval_bullet(&mut self, tag: Tag, w: &SubspaceMatroid) -> u32 {
        let rep = w.to_rep();
        let key = self.key(tag, &rep);
        if let Some(v) = self.lookup(&key) {
            return v;
        }
        let n = w.ambient_dim();
        let base = match tag {
            Tag::Cbd => w.dim() == 0,
            _ => w.dim() == n,
        };
        let v = if base {
            0
        } else {
            let comps = rep.component_masks_fast();
            if comps.len() > 1 {
                comps
                    .into_iter()
                    .map(|c| self.eval_bullet(tag, &w.restrict_mask(c)))
                    .max()
                    .unwrap_or(0)
            } else {
                let perp = w.dual();
                let mut best = u32::MAX;
                for v in projective_points(w.field(), n) {
                    let child = match tag {
                        Tag::Cbd if !perp.contains(&v) => w.contract_bullet(&v),
                        Tag::Dbd if !w.contains(&v) => w.delete_bullet(&v),
                        _ => continue,
                    }
                    .expect("candidate vectors are nonzero and sized");
                    best = best.min(self.eval_bullet(tag, &child));
                    if best == 0 {
                        break;
                    }
                }
                1 + best
            }
        };
        self.store(key, v);
        v
    }
}

/// Replays `cert` against `m`; `Ok(())` iff it proves `param(m) <= cert.value`.
///
/// Base cases, splits and steps are checked against the same precedence the
/// recursion uses: a split is only legal when no base case applies, and a step
/// only on a connected matroid.
pub fn verify_certificate(
    m: &RepMatroid,
    param: Param,
    cert: &DepthCertificate,
) -> std::result::Result<(), String> {
    let m = m.quotient().map_err(|e| e.to_string())?;
    verify_node(&m, param, cert, "root")
}

pub fn certificate_holds(m: &RepMatroid, param: Param, cert: &DepthCertificate) -> bool {
    verify_certificate(m, param, cert).is_ok()
}

fn verify_node(
    m: &RepMatroid,
    param: Param,
    cert: &DepthCertificate,
    path: &str,
) -> std::result::Result<(), String> {
    let expected = shape(param, m);
    match (&cert.node, expected) {
        (CertNode::Base(kind), Shape::Base(actual)) => {
            if *kind != actual {
                return Err(format!("{path}: base {kind:?} claimed, matroid is {actual:?}"));
            }
            if cert.value != base_value(actual) {
                return Err(format!(
                    "{path}: base {kind:?} has value {}, claimed {}",
                    base_value(actual),
                    cert.value
                ));
            }
            Ok(())
        }
        (CertNode::Base(kind), _) => Err(format!("{path}: base case {kind:?} does not apply")),
        (_, Shape::Base(actual)) => Err(format!(
            "{path}: matroid is a base case ({actual:?}) but the certificate recurses"
        )),
        (CertNode::Split(parts), Shape::Split(comps)) => {
            let mut claimed: Vec<GroundSubset> = parts.iter().map(|p| p.elements.clone()).collect();
            let mut actual: Vec<GroundSubset> = comps.iter().map(|&c| m.subset_of(c)).collect();
            claimed.sort();
            actual.sort();
            if claimed != actual {
                return Err(format!("{path}: split does not match the components"));
            }
            let mut max = 0;
            for (i, part) in parts.iter().enumerate() {
                let sub = m.restrict(&part.elements).map_err(|e| e.to_string())?;
                verify_node(&sub, param, &part.certificate, &format!("{path}/part{i}"))?;
                max = max.max(part.certificate.value);
            }
            if cert.value != max {
                return Err(format!("{path}: split value {} is not the maximum {max}", cert.value));
            }
            Ok(())
        }
        (CertNode::Split(_), _) => Err(format!("{path}: split claimed on a connected matroid")),
        (CertNode::Step { .. }, Shape::Split(_)) => {
            Err(format!("{path}: step taken on a disconnected matroid"))
        }
        (CertNode::Step { action, child }, Shape::Connected) => {
            let next = apply(param, m, action).map_err(|e| format!("{path}: {e}"))?;
            if let Action::ContractVector(v) | Action::AddRow(v) = action {
                if v.iter().all(|&x| x == 0) {
                    return Err(format!("{path}: zero vector"));
                }
            }
            verify_node(&next, param, child, &format!("{path}/step"))?;
            if cert.value != child.value + 1 {
                return Err(format!(
                    "{path}: step value {} is not 1 + {}",
                    cert.value, child.value
                ));
            }
            Ok(())
        }
    }
}

/// All invertible `h x h` matrices over `field`, in lexicographic order of entries.
pub fn general_linear_group(field: Field, h: usize) -> Vec<Matrix> {
    let p = field.order();
    let total = p.pow((h * h) as u32);
    (0..total)
        .filter_map(|mut idx| {
            let mut data = vec![0u8; h * h];
            for e in data.iter_mut().rev() {
                *e = (idx % p) as u8;
                idx /= p;
            }
            let t = Matrix::new(field, h, h, data).expect("reduced entries");
            t.is_invertible().then_some(t)
        })
        .collect()
}

/// Minimum dual tree-depth over all matrices row equivalent to `a` (exhaustive
/// over `GL(h, p)`; `h <= 3`, `p ∈ {2, 3}`). Returns the value and a minimising
/// transformation.
pub fn min_dual_td_row_equiv(a: &Matrix) -> Result<(usize, Matrix)> {
    let h = a.rows();
    Error::guard("rows for row-equivalence search", 3, h)?;
    if !matches!(a.field().p(), 2 | 3) {
        return Err(Error::Guard {
            what: "field order for row-equivalence search",
            limit: 3,
            actual: a.field().order(),
        });
    }
    let mut best: Option<(usize, Matrix)> = None;
    for t in general_linear_group(a.field(), h) {
        let td = dual_tree_depth(&t.mul(a)?)?;
        if best.as_ref().is_none_or(|(b, _)| td < *b) {
            best = Some((td, t));
        }
    }
    Ok(best.unwrap_or_else(|| (0, Matrix::identity(a.field(), 0))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(p: u16, rows: &[&[u8]], cols: usize) -> RepMatroid {
        RepMatroid::new(Matrix::from_rows(Field::new(p).unwrap(), rows, cols).unwrap())
    }

    fn u23() -> RepMatroid {
        m(2, &[&[1, 0, 1], &[0, 1, 1]], 3)
    }

    fn u13() -> RepMatroid {
        m(2, &[&[1, 1, 1]], 3)
    }

    fn val(param: Param, x: &RepMatroid) -> u32 {
        let mut s = DepthSolver::default();
        let (v, cert) = s.solve(param, x).unwrap();
        verify_certificate(x, param, &cert).unwrap();
        assert_eq!(v, DepthSolver::unmemoized(Limits::default()).value(param, x).unwrap());
        v
    }

    #[test]
    fn cd_examples() {
        assert_eq!(val(Param::Cd, &m(2, &[&[0]], 1)), 1);
        assert_eq!(val(Param::Cd, &m(2, &[&[1, 1]], 2)), 2);
        assert_eq!(val(Param::Cd, &u23()), 3);
    }

    #[test]
    fn dd_examples() {
        assert_eq!(val(Param::Dd, &m(2, &[&[1]], 1)), 1);
        assert_eq!(val(Param::Dd, &u23()), 2);
        assert_eq!(val(Param::Dd, &u13()), 3);
    }

    #[test]
    fn csd_examples() {
        assert_eq!(val(Param::Csd, &m(3, &[&[0, 0, 0], &[0, 0, 0]], 3)), 0);
        assert_eq!(val(Param::Csd, &u23()), 2);
        assert_eq!(val(Param::Csd, &RepMatroid::new(Matrix::identity(Field::gf2(), 2))), 1);
    }

    #[test]
    fn dsd_examples() {
        assert_eq!(val(Param::Dsd, &RepMatroid::new(Matrix::identity(Field::gf2(), 3))), 0);
        assert_eq!(val(Param::Dsd, &m(2, &[&[0]], 1)), 1);
        assert_eq!(val(Param::Dsd, &u13()), 2);
    }

    #[test]
    fn empty_matroid_is_zero_everywhere() {
        let e = m(2, &[&[]], 0);
        for p in Param::ALL {
            assert_eq!(val(p, &e), 0, "{p}");
        }
    }

    #[test]
    fn bullet_examples() {
        let mut s = DepthSolver::default();
        assert_eq!(s.cbd(&SubspaceMatroid::from_rep(&u23())).unwrap(), 2);
        let free = SubspaceMatroid::new(Matrix::identity(Field::gf2(), 3));
        assert_eq!(s.dbd(&free).unwrap(), 0);
        assert_eq!(s.dbd(&SubspaceMatroid::from_rep(&u13())).unwrap(), 2);
    }

    #[test]
    fn u23_csd_certificate_uses_the_all_ones_vector() {
        let cert = DepthSolver::default().csd(&u23()).unwrap().1;
        let CertNode::Step { action, .. } = &cert.node else {
            panic!("expected a step, got {cert:?}");
        };
        // (0,1) is lexicographically first and already optimal
        assert_eq!(action, &Action::ContractVector(vec![0, 1]));

        let handmade = DepthCertificate {
            value: 2,
            node: CertNode::Step {
                action: Action::ContractVector(vec![1, 1]),
                child: Box::new(DepthCertificate {
                    value: 1,
                    node: CertNode::Split(vec![
                        Part {
                            elements: [0, 1].into(),
                            certificate: DepthCertificate {
                                value: 1,
                                node: CertNode::Step {
                                    action: Action::ContractVector(vec![1]),
                                    child: Box::new(DepthCertificate {
                                        value: 0,
                                        node: CertNode::Base(BaseKind::RankZero),
                                    }),
                                },
                            },
                        },
                        Part {
                            elements: [2].into(),
                            certificate: DepthCertificate {
                                value: 0,
                                node: CertNode::Base(BaseKind::RankZero),
                            },
                        },
                    ]),
                }),
            },
        };
        assert_eq!(verify_certificate(&u23(), Param::Csd, &handmade), Ok(()));
    }

    #[test]
    fn bogus_certificates_fail() {
        let rank_zero = DepthCertificate {
            value: 0,
            node: CertNode::Base(BaseKind::RankZero),
        };
        assert!(verify_certificate(&u23(), Param::Csd, &rank_zero).is_err());

        let (_, mut cert) = DepthSolver::default().cd(&u23()).unwrap();
        cert.value -= 1;
        assert!(verify_certificate(&u23(), Param::Cd, &cert).is_err());

        let wrong_move = DepthCertificate {
            value: 3,
            node: CertNode::Step {
                action: Action::DeleteElement(0),
                child: Box::new(DepthCertificate {
                    value: 2,
                    node: CertNode::Base(BaseKind::SingleElement),
                }),
            },
        };
        assert!(verify_certificate(&u23(), Param::Cd, &wrong_move).is_err());
    }

    #[test]
    fn free_matroid_split_certificate() {
        let free = RepMatroid::new(Matrix::identity(Field::gf2(), 2));
        let leaf = DepthCertificate {
            value: 1,
            node: CertNode::Base(BaseKind::SingleElement),
        };
        let cert = DepthCertificate {
            value: 1,
            node: CertNode::Split(vec![
                Part {
                    elements: [0].into(),
                    certificate: leaf.clone(),
                },
                Part {
                    elements: [1].into(),
                    certificate: leaf,
                },
            ]),
        };
        assert_eq!(verify_certificate(&free, Param::Cd, &cert), Ok(()));
    }

    #[test]
    fn certificate_json_roundtrip() {
        let (_, cert) = DepthSolver::default().dsd(&u13()).unwrap();
        let back = DepthCertificate::from_json(&cert.to_json()).unwrap();
        assert_eq!(back, cert);
        assert!(DepthCertificate::from_json("{\"value\": 1}").is_err());
    }

    #[test]
    fn guards_refuse() {
        let big = RepMatroid::new(Matrix::zeros(Field::gf2(), 1, 13));
        assert!(DepthSolver::default().value(Param::Cd, &big).unwrap_err().is_guard());
        let tight = Limits {
            max_candidates: 3,
            ..Limits::default()
        };
        let free = RepMatroid::new(Matrix::identity(Field::gf2(), 3));
        assert!(DepthSolver::new(tight).value(Param::Csd, &free).unwrap_err().is_guard());
    }

    #[test]
    fn gl_sizes() {
        assert_eq!(general_linear_group(Field::gf2(), 3).len(), 168);
        assert_eq!(general_linear_group(Field::new(3).unwrap(), 2).len(), 48);
        assert_eq!(general_linear_group(Field::gf2(), 1).len(), 1);
    }

    #[test]
    fn row_equivalence_examples() {
        let f = Field::gf2();
        let a = Matrix::from_rows(f, &[[1u8, 0, 1], [0, 1, 1]], 3).unwrap();
        assert_eq!(min_dual_td_row_equiv(&a).unwrap().0, 2);
        assert_eq!(min_dual_td_row_equiv(&Matrix::identity(f, 2)).unwrap().0, 1);
        let b = Matrix::from_rows(f, &[[1u8, 1], [0, 1]], 2).unwrap();
        assert_eq!(min_dual_td_row_equiv(&b).unwrap().0, 1);
        let big = Matrix::zeros(f, 4, 2);
        assert!(min_dual_td_row_equiv(&big).unwrap_err().is_guard());
        let gf5 = Matrix::identity(Field::new(5).unwrap(), 2);
        assert!(min_dual_td_row_equiv(&gf5).unwrap_err().is_guard());
    }
}
