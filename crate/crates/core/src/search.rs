//! Exhaustive search over small represented matroids: canonical enumeration,
//! obstruction search, progressive vectors and the named property suites.
//!
//! Every parallel loop collects its results in enumeration order, and each
//! worker owns its own [`DepthSolver`], so reports do not depend on the number
//! of workers.

use std::collections::HashSet;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use rayon::prelude::*;

use crate::depth::{min_dual_td_row_equiv, verify_certificate, DepthSolver, Limits, Param};
use crate::duality::{dual, SubspaceMatroid};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::format::{parse_matrix, parse_tree, write_matrix, write_tree};
use crate::graph::dual_tree_depth;
use crate::linalg::{in_span, projective_points_of_span, Matrix, Vector};
use crate::matrix_tree::MatrixTree;
use crate::matroid::{popcount, positions, GroundSubset, RepMatroid, DEFAULT_SUBSET_LIMIT};

/// Largest number of matrices of one shape `h x n` the enumerator will visit.
pub const MAX_BLOCK_MATRICES: u64 = 1 << 24;
/// Column ceiling; keeps canonical keys exact.
pub const MAX_ENUM_COLUMNS: usize = 8;
/// Ground-set ceiling for searches over all restrictions.
pub const RESTRICTION_LIMIT: usize = 12;
/// Ground-set size up to which cd witnesses are also checked against set deletions.
pub const SET_DELETION_LIMIT: usize = 5;

const CHUNK: u64 = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationSpec {
    pub field: Field,
    pub h_max: usize,
    pub n_max: usize,
    /// Keep one matrix per canonical key; otherwise every matrix is produced.
    pub dedupe: bool,
}

impl EnumerationSpec {
    pub fn new(field: Field, h_max: usize, n_max: usize) -> Self {
        EnumerationSpec {
            field,
            h_max,
            n_max,
            dedupe: true,
        }
    }

    fn block_size(&self, h: usize, n: usize) -> Option<u64> {
        (self.field.p() as u64).checked_pow(u32::try_from(h * n).ok()?)
    }

    pub fn check(&self) -> Result<()> {
        Error::guard("enumerated columns", MAX_ENUM_COLUMNS, self.n_max)?;
        let largest = self.block_size(self.h_max, self.n_max).unwrap_or(u64::MAX);
        Error::guard(
            "matrices per enumerated shape",
            MAX_BLOCK_MATRICES as usize,
            usize::try_from(largest).unwrap_or(usize::MAX),
        )
    }
}

impl fmt::Display for EnumerationSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}, rows <= {}, columns <= {}", self.field, self.h_max, self.n_max)
    }
}

/// Lazily enumerated representatives, one per canonical key.
///
/// Shapes are visited with `n` ascending, then `h` ascending; inside a shape
/// matrices are read off a little-endian base-`p` counter over the row-major
/// entries. The first matrix met with a given key represents it.
pub struct CanonicalStream {
    spec: EnumerationSpec,
    h: usize,
    n: usize,
    next: u64,
    seen: HashSet<Vec<u8>>,
    buffer: std::vec::IntoIter<RepMatroid>,
}

pub fn enumerate_canonical(spec: &EnumerationSpec) -> Result<CanonicalStream> {
    spec.check()?;
    Ok(CanonicalStream {
        spec: *spec,
        h: 1,
        n: 1,
        next: 0,
        seen: HashSet::new(),
        buffer: Vec::new().into_iter(),
    })
}

fn matrix_at(field: Field, h: usize, n: usize, mut index: u64) -> Matrix {
    let p = field.p() as u64;
    let data = (0..h * n)
        .map(|_| {
            let d = (index % p) as u8;
            index /= p;
            d
        })
        .collect();
    Matrix::new(field, h, n, data).expect("sized")
}

impl CanonicalStream {
    /// Fills the buffer from the next chunk; false once every shape is done.
    fn refill(&mut self) -> bool {
        let s = self.spec;
        if s.h_max == 0 || self.n > s.n_max {
            return false;
        }
        let total = s.block_size(self.h, self.n).expect("checked");
        let end = (self.next + CHUNK).min(total);
        let (h, n, f) = (self.h, self.n, s.field);
        let batch: Vec<(Matrix, Option<Vec<u8>>)> = (self.next..end)
            .into_par_iter()
            .map(|i| {
                let a = matrix_at(f, h, n, i);
                let key = s.dedupe.then(|| RepMatroid::new(a.clone()).canonical_key().bytes);
                (a, key)
            })
            .collect();
        let mut out = Vec::new();
        for (a, key) in batch {
            if key.is_none_or(|k| self.seen.insert(k)) {
                out.push(RepMatroid::new(a));
            }
        }
        self.buffer = out.into_iter();
        self.next = end;
        if self.next == total {
            self.next = 0;
            self.h += 1;
            if self.h > s.h_max {
                self.h = 1;
                self.n += 1;
            }
        }
        true
    }
}

impl Iterator for CanonicalStream {
    type Item = RepMatroid;

    fn next(&mut self) -> Option<RepMatroid> {
        loop {
            if let Some(m) = self.buffer.next() {
                return Some(m);
            }
            if !self.refill() {
                return None;
            }
        }
    }
}

/// Runs `f` on a pool of `workers` threads (`0` uses the global pool).
pub fn with_workers<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    if workers == 0 {
        return Ok(f());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::Input(format!("cannot start worker pool: {e}")))?;
    Ok(pool.install(f))
}

/// Maps `items` in parallel with one solver per worker, keeping input order.
fn par_solve<T, R, F>(items: &[T], limits: Limits, f: F) -> Result<Vec<R>>
where
    T: Sync,
    R: Send,
    F: Fn(&mut DepthSolver, &T) -> Result<R> + Sync + Send,
{
    items
        .par_iter()
        .map_init(|| DepthSolver::new(limits), |s, item| f(s, item))
        .collect()
}

/// Single-element minor used by the obstruction notion of each parameter.
fn minor(param: Param, m: &RepMatroid, label: u32) -> Result<RepMatroid> {
    match param {
        Param::Csd | Param::Cd => m.delete_element(label),
        Param::Dd | Param::Dsd => m.contract_element(label),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub matrix: Matrix,
    pub value: u32,
    /// Parameter value after removing each element, in label order.
    pub minor_values: Vec<u32>,
    /// For cd on at most five elements: whether every nonempty set deletion
    /// also drops the value.
    pub set_minimal: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionReport {
    pub param: Param,
    pub depth: u32,
    pub spec: EnumerationSpec,
    pub checked: usize,
    pub witnesses: Vec<Witness>,
}

impl ObstructionReport {
    /// Largest witness ground set, 0 if there is none.
    pub fn max_size(&self) -> usize {
        self.witnesses.iter().map(|w| w.matrix.cols()).max().unwrap_or(0)
    }

    pub fn contains(&self, m: &RepMatroid) -> bool {
        let key = m.canonical_key().bytes;
        self.witnesses
            .iter()
            .any(|w| RepMatroid::new(w.matrix.clone()).canonical_key().bytes == key)
    }

    pub fn render(&self) -> String {
        let op = match self.param {
            Param::Csd | Param::Cd => "deletion",
            _ => "contraction",
        };
        let mut s = format!(
            "obstructions {} = {} under single-element {op} over {}\n",
            self.param, self.depth, self.spec
        );
        for w in &self.witnesses {
            let minors: Vec<String> = w.minor_values.iter().map(u32::to_string).collect();
            let _ = write!(
                s,
                "witness {} {} = {} minors [{}]",
                w.matrix,
                self.param,
                w.value,
                minors.join(",")
            );
            if let Some(b) = w.set_minimal {
                let _ = write!(s, " set-minimal {b}");
            }
            s.push('\n');
        }
        let _ = writeln!(
            s,
            "checked {} matroids, {} witnesses, max size {}",
            self.checked,
            self.witnesses.len(),
            self.max_size()
        );
        s
    }
}

fn obstruction_witness(
    s: &mut DepthSolver,
    param: Param,
    d: u32,
    m: &RepMatroid,
) -> Result<Option<Witness>> {
    let value = s.value(param, m)?;
    if value != d {
        return Ok(None);
    }
    let mut minor_values = Vec::with_capacity(m.len());
    for &e in m.labels() {
        let v = s.value(param, &minor(param, m, e)?)?;
        if v >= d {
            return Ok(None);
        }
        minor_values.push(v);
    }
    let set_minimal = if param == Param::Cd && m.len() <= SET_DELETION_LIMIT {
        let full = m.full_mask();
        let mut ok = true;
        for removed in 1..=full {
            if s.value(param, &m.restrict_mask(full & !removed))? >= d {
                ok = false;
                break;
            }
        }
        Some(ok)
    } else {
        None
    };
    Ok(Some(Witness {
        matrix: m.matrix().clone(),
        value,
        minor_values,
        set_minimal,
    }))
}

/// Canonical matroids with `param = d` whose value drops under every
/// single-element deletion (csd, cd) or contraction (dd, dsd).
pub fn find_obstructions(
    param: Param,
    d: u32,
    spec: &EnumerationSpec,
    limits: Limits,
) -> Result<ObstructionReport> {
    let all: Vec<RepMatroid> = enumerate_canonical(spec)?.collect();
    let found = par_solve(&all, limits, |s, m| obstruction_witness(s, param, d, m))?;
    Ok(ObstructionReport {
        param,
        depth: d,
        spec: *spec,
        checked: all.len(),
        witnesses: found.into_iter().flatten().collect(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictionCheck {
    pub elements: GroundSubset,
    /// Every progressive vector lies in the span of these columns.
    pub spans_progressive: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProgressiveReport {
    pub csd: u32,
    /// Projective vectors of the column space with `csd(M/v) < csd(M)`, in the
    /// row coordinates of the (quotient) matrix.
    pub vectors: Vec<Vector>,
    /// Deletion-minimal restrictions with the same csd.
    pub restrictions: Vec<RestrictionCheck>,
}

impl ProgressiveReport {
    pub fn smallest_restriction(&self) -> usize {
        self.restrictions.iter().map(|r| r.elements.len()).min().unwrap_or(0)
    }

    pub fn span_property_holds(&self) -> bool {
        self.restrictions.iter().all(|r| r.spans_progressive)
    }

    /// `count <= p^s` with `s` the size of the smallest restriction above.
    pub fn count_bound_holds(&self, field: Field) -> bool {
        let bound = (field.p() as u128).checked_pow(self.smallest_restriction() as u32);
        bound.is_none_or(|b| self.vectors.len() as u128 <= b)
    }
}

pub fn progressive_vectors(s: &mut DepthSolver, m: &RepMatroid) -> Result<ProgressiveReport> {
    let q = m.quotient()?;
    Error::guard("ground set size for restriction search", RESTRICTION_LIMIT, q.len())?;
    let d = s.value(Param::Csd, &q)?;
    let mut vectors = Vec::new();
    for v in projective_points_of_span(&q.column_space()) {
        if s.value(Param::Csd, &q.contract_vector(&v)?)? < d {
            vectors.push(v);
        }
    }
    let full = q.full_mask();
    let values = (0..=full)
        .map(|x| s.value(Param::Csd, &q.restrict_mask(x)))
        .collect::<Result<Vec<u32>>>()?;
    let mut restrictions = Vec::new();
    for x in 0..=full {
        let minimal = values[x as usize] == d
            && positions(x).iter().all(|&i| values[(x & !(1 << i)) as usize] < d);
        if !minimal {
            continue;
        }
        let cols: Vec<Vector> = positions(x).iter().map(|&i| q.matrix().column(i)).collect();
        let spans = vectors
            .iter()
            .map(|v| in_span(v, &cols))
            .collect::<Result<Vec<bool>>>()?
            .into_iter()
            .all(|b| b);
        restrictions.push(RestrictionCheck {
            elements: q.subset_of(x),
            spans_progressive: spans,
        });
    }
    Ok(ProgressiveReport {
        csd: d,
        vectors,
        restrictions,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Duality,
    BulletDuality,
    DepthEqualities,
    CircuitBounds,
    Monotonicity,
    Roundtrip,
    IgnoreRows,
    RowEquivTd,
    FewMovesSpan,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Duality,
        Suite::BulletDuality,
        Suite::DepthEqualities,
        Suite::CircuitBounds,
        Suite::Monotonicity,
        Suite::Roundtrip,
        Suite::IgnoreRows,
        Suite::RowEquivTd,
        Suite::FewMovesSpan,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Duality => "duality",
            Suite::BulletDuality => "bullet-duality",
            Suite::DepthEqualities => "depth-equalities",
            Suite::CircuitBounds => "circuit-bounds",
            Suite::Monotonicity => "monotonicity",
            Suite::Roundtrip => "roundtrip",
            Suite::IgnoreRows => "ignore-rows",
            Suite::RowEquivTd => "row-equiv-td",
            Suite::FewMovesSpan => "few-moves-span",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
                Error::Input(format!("unknown suite {s:?}; expected one of {}", names.join(", ")))
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceResult {
    pub matrix: Matrix,
    pub summary: String,
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub spec: EnumerationSpec,
    pub instances: Vec<InstanceResult>,
}

impl SuiteReport {
    pub fn counterexamples(&self) -> usize {
        self.instances.iter().map(|i| i.failures.len()).sum()
    }

    pub fn passed(&self) -> bool {
        self.counterexamples() == 0
    }

    pub fn render(&self) -> String {
        let mut s = format!("suite {} over {}\n", self.suite, self.spec);
        for i in &self.instances {
            let status = if i.failures.is_empty() { "ok" } else { "FAIL" };
            let _ = writeln!(s, "{} {} {status}", i.matrix, i.summary);
            for f in &i.failures {
                let _ = writeln!(s, "  counterexample: {f}");
            }
        }
        let _ = writeln!(
            s,
            "{}: {} instances, {} counterexamples",
            if self.passed() { "pass" } else { "fail" },
            self.instances.len(),
            self.counterexamples()
        );
        s
    }
}

/// Collects failed checks for one instance.
#[derive(Default)]
struct Checks(Vec<String>);

impl Checks {
    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.0.push(what());
        }
    }
}

fn nonzero_vectors(field: Field, n: usize) -> impl Iterator<Item = Vector> {
    let total = (field.p() as u64).pow(n as u32);
    (1..total).map(move |i| {
        let a = matrix_at(field, 1, n, i);
        a.row_vector(0)
    })
}

/// `c <= 2^x`, i.e. `log2(c) <= x`.
fn log2_at_most(c: usize, x: u32) -> bool {
    x >= usize::BITS || c <= 1usize << x
}

fn check_instance(suite: Suite, s: &mut DepthSolver, m: &RepMatroid) -> Result<InstanceResult> {
    let a = m.matrix();
    let mut c = Checks::default();
    let summary = match suite {
        Suite::Duality => {
            let md = dual(m);
            let (csd, dsd_d) = (s.value(Param::Csd, m)?, s.value(Param::Dsd, &md)?);
            let (cd, dd_d) = (s.value(Param::Cd, m)?, s.value(Param::Dd, &md)?);
            let (dd, cd_d) = (s.value(Param::Dd, m)?, s.value(Param::Cd, &md)?);
            c.expect(csd == dsd_d, || format!("csd(M) = {csd} but dsd(M*) = {dsd_d}"));
            c.expect(cd == dd_d, || format!("cd(M) = {cd} but dd(M*) = {dd_d}"));
            c.expect(dd == cd_d, || format!("dd(M) = {dd} but cd(M*) = {cd_d}"));
            let comps = m.component_masks(DEFAULT_SUBSET_LIMIT)?;
            let comps_d = md.component_masks(DEFAULT_SUBSET_LIMIT)?;
            c.expect(comps == comps_d, || {
                format!("components {comps:?} differ from dual components {comps_d:?}")
            });
            for &e in m.labels() {
                let lhs = dual(&m.delete_element(e)?);
                let rhs = md.contract_element(e)?;
                c.expect(lhs.same_matroid(&rhs), || format!("(M\\{e})* != M*/{e}"));
            }
            format!("csd={csd} cd={cd} dd={dd} components={}", comps.len())
        }
        Suite::BulletDuality => {
            let w = SubspaceMatroid::from_rep(m);
            let perp = w.dual();
            let mut count = 0;
            for v in nonzero_vectors(m.field(), m.len()) {
                let lhs = w.contract_bullet(&v)?.dual().to_rep();
                let rhs = perp.delete_bullet(&v)?.to_rep();
                c.expect(lhs.same_matroid(&rhs), || format!("dual(M /• {v}) != M* \\• {v}"));
                count += 1;
            }
            let (csd, cbd) = (s.value(Param::Csd, m)?, s.cbd(&w)?);
            let (dsd, dbd) = (s.value(Param::Dsd, m)?, s.dbd(&w)?);
            c.expect(csd == cbd, || format!("csd = {csd} but cbd = {cbd}"));
            c.expect(dsd == dbd, || format!("dsd = {dsd} but dbd = {dbd}"));
            format!("vectors={count} csd={csd} dsd={dsd}")
        }
        Suite::DepthEqualities => {
            let mut plain = DepthSolver::unmemoized(*s.limits());
            let mut values = Vec::new();
            for param in Param::ALL {
                let (v, cert) = s.solve(param, m)?;
                if let Err(e) = verify_certificate(m, param, &cert) {
                    c.0.push(format!("{param} certificate rejected: {e}"));
                }
                if m.len() <= 5 {
                    let u = plain.value(param, m)?;
                    c.expect(u == v, || format!("{param}: memoized {v}, definitional {u}"));
                }
                values.push(format!("{param}={v}"));
            }
            let w = SubspaceMatroid::from_rep(m);
            let (csd, cbd) = (s.value(Param::Csd, m)?, s.cbd(&w)?);
            let (dsd, dbd) = (s.value(Param::Dsd, m)?, s.dbd(&w)?);
            c.expect(csd == cbd, || format!("csd = {csd} but cbd = {cbd}"));
            c.expect(dsd == dbd, || format!("dsd = {dsd} but dbd = {dbd}"));
            values.join(" ")
        }
        Suite::CircuitBounds => {
            let circ = m
                .circuit_masks(DEFAULT_SUBSET_LIMIT)?
                .into_iter()
                .map(popcount)
                .max()
                .unwrap_or(1);
            let cd = s.value(Param::Cd, m)?;
            let csd = s.value(Param::Csd, m)?;
            let dd = s.value(Param::Dd, m)?;
            let dsd = s.value(Param::Dsd, m)?;
            let cc = circ as u64;
            c.expect(log2_at_most(circ, cd), || format!("log2({circ}) > cd = {cd}"));
            c.expect(cd as u64 <= cc * (cc + 1) / 2, || {
                format!("cd = {cd} > c(c+1)/2 for c = {circ}")
            });
            c.expect(log2_at_most(circ, csd), || format!("log2({circ}) > csd = {csd}"));
            c.expect(csd as u64 <= cc * cc, || format!("csd = {csd} > c^2 for c = {circ}"));
            c.expect(csd <= cd, || format!("csd = {csd} > cd = {cd}"));
            let f = ((1u64 << (2 * csd)) + (1u64 << csd)) / 2;
            c.expect(cd as u64 <= f, || format!("cd = {cd} > {f} for csd = {csd}"));
            c.expect(dsd <= dd, || format!("dsd = {dsd} > dd = {dd}"));
            format!("c={circ} cd={cd} csd={csd} dd={dd} dsd={dsd}")
        }
        Suite::Monotonicity => {
            let csd = s.value(Param::Csd, m)?;
            let full = m.full_mask();
            for x in 0..full {
                let v = s.value(Param::Csd, &m.restrict_mask(x))?;
                c.expect(v <= csd, || {
                    format!("csd(M[{}]) = {v} > csd(M) = {csd}", m.subset_of(x))
                });
            }
            format!("csd={csd} restrictions={}", full + 1)
        }
        Suite::Roundtrip => {
            let t = MatrixTree::encode(a)?;
            let td = dual_tree_depth(a)?;
            c.expect(t.decode()? == *a, || "decode(encode(A)) != A".to_string());
            let depth = t.depth();
            c.expect(depth <= td + 1, || format!("tree depth {depth} > td_D + 1 = {}", td + 1));
            let text = write_tree(&t);
            let back = parse_tree(&text, a.field()).map_err(Error::from)?;
            c.expect(back == t, || "tree document does not round-trip".to_string());
            let back = parse_matrix(&write_matrix(a)).map_err(Error::from)?;
            c.expect(back == *a, || "matrix document does not round-trip".to_string());
            format!("td_D={td} depth={depth}")
        }
        Suite::IgnoreRows => {
            let t = MatrixTree::encode(a)?;
            for &v in t.nodes().keys() {
                let pruned = t.prune(&[v])?.decode()?;
                let kept = t.drop_column_leaves(v)?;
                let dropped = kept.decode()?;
                let lhs = RepMatroid::new(pruned);
                let rhs = RepMatroid::new(dropped.clone());
                c.expect(lhs.same_matroid(&rhs), || {
                    format!("node {v}: pruned and column-dropped trees differ as matroids")
                });
                let sub = t.subtree(v)?;
                for (i, r) in kept.row_nodes().into_iter().enumerate() {
                    if sub.contains(&r) {
                        c.expect(dropped.row(i).iter().all(|&x| x == 0), || {
                            format!("node {v}: row node {r} is nonzero on surviving columns")
                        });
                    }
                }
            }
            format!("nodes={}", t.len())
        }
        Suite::RowEquivTd => {
            let csd = s.value(Param::Csd, m)?;
            let td = dual_tree_depth(a)?;
            c.expect(csd as usize <= td, || format!("csd = {csd} > td_D = {td}"));
            let searchable = a.rows() <= 3 && matches!(a.field().p(), 2 | 3);
            if searchable && a.rank() == a.rows() {
                let (best, t) = min_dual_td_row_equiv(a)?;
                c.expect(best == csd as usize, || {
                    format!("min td_D over row transforms = {best} (via {t}) but csd = {csd}")
                });
                format!("csd={csd} td_D={td} min_td_D={best}")
            } else {
                format!("csd={csd} td_D={td}")
            }
        }
        Suite::FewMovesSpan => {
            let r = progressive_vectors(s, m)?;
            for x in &r.restrictions {
                c.expect(x.spans_progressive, || {
                    format!("a progressive vector lies outside span {}", x.elements)
                });
            }
            let k = r.smallest_restriction();
            c.expect(r.count_bound_holds(m.field()), || {
                format!("{} progressive vectors exceed p^{k}", r.vectors.len())
            });
            format!(
                "csd={} progressive={} minimal-restrictions={} smallest={k}",
                r.csd,
                r.vectors.len(),
                r.restrictions.len()
            )
        }
    };
    Ok(InstanceResult {
        matrix: a.clone(),
        summary,
        failures: c.0,
    })
}

/// Runs one suite over every canonical matroid of `spec`.
pub fn run_suite(
    suite: Suite,
    spec: &EnumerationSpec,
    limits: Limits,
    workers: usize,
) -> Result<SuiteReport> {
    with_workers(workers, || {
        let all: Vec<RepMatroid> = enumerate_canonical(spec)?.collect();
        let instances = par_solve(&all, limits, |s, m| check_instance(suite, s, m))?;
        Ok(SuiteReport {
            suite,
            spec: *spec,
            instances,
        })
    })?
}
