//! Structural characterizations: phase partitions certifying (anti)cospectrality with the
//! underlying graph, twins and twin reduction, and the classification of mixed graphs of rank 2.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::families::{gen_family, Family};
use crate::gaussian::Gaussian;
use crate::graph::{EdgeKind, MixedGraph};
use crate::spectral::{char_poly, rank_exact, rank_of, CharPoly, HermitianMatrix};
use crate::switching::{are_switching_equivalent, Gauge, GaugePartition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CertificateKind {
    /// `S^{-1} H(D) S = H(G(D))`.
    Cospectral,
    /// `S^{-1} H(D) S = -H(G(D))`.
    Antispectral,
}

impl CertificateKind {
    // Target exponent of every switched entry: 1 = i^0, -1 = i^2.
    fn target_phase(self) -> u8 {
        match self {
            CertificateKind::Cospectral => 0,
            CertificateKind::Antispectral => 2,
        }
    }
}

/// A vertex partition into `V_1, V_{-1}, V_i, V_{-i}` with the edge structure that forces
/// `D` to be cospectral (or antispectral) with its underlying graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhaseCertificate {
    pub kind: CertificateKind,
    pub partition: GaugePartition,
}

impl PhaseCertificate {
    /// Checks the edge rules directly.
    ///
    /// Cospectral: every `V_j` induces only undirected edges and every other edge is an arc
    /// from `V_j` to `V_{-ij}`. Antispectral: every `V_j` is independent, undirected edges join
    /// `V_j` to `V_{-j}`, and every arc runs from `V_j` to `V_{ij}`.
    pub fn verify(&self, d: &MixedGraph) -> bool {
        if self.partition.len() != d.n() {
            return false;
        }
        let p = &self.partition;
        let (undirected_step, arc_step) = match self.kind {
            CertificateKind::Cospectral => (Gauge::ONE, Gauge::MINUS_I),
            CertificateKind::Antispectral => (Gauge::MINUS_ONE, Gauge::I),
        };
        d.undirected_edges().iter().all(|&(u, v)| p.get(v) == p.get(u).mul(undirected_step))
            && d.arcs().iter().all(|&(u, v)| p.get(v) == p.get(u).mul(arc_step))
    }
}

/// Phase propagation over a BFS forest: each edge `uv` with `H_{uv} = i^h` forces
/// `S_vv = S_uu * i^(target - h)`. Roots get phase `1`, so isolated vertices stay in `V_1`.
fn propagate(d: &MixedGraph, target: u8) -> GaugePartition {
    let n = d.n();
    let mut phase: Vec<Option<u8>> = vec![None; n];
    for root in 0..n {
        if phase[root].is_some() {
            continue;
        }
        phase[root] = Some(0);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let pu = phase[u].expect("queued");
            for v in d.neighbors(u) {
                if phase[v].is_none() {
                    let h = d.kind(u, v).phase().expect("adjacent");
                    phase[v] = Some((pu + target + 4 - h) % 4);
                    queue.push_back(v);
                }
            }
        }
    }
    GaugePartition::new(phase.into_iter().map(|p| Gauge::from_exponent(p.unwrap_or(0))).collect())
}

fn certificate(d: &MixedGraph, kind: CertificateKind) -> Option<PhaseCertificate> {
    let cert = PhaseCertificate { kind, partition: propagate(d, kind.target_phase()) };
    cert.verify(d).then_some(cert)
}

/// A partition certifying that `d` is cospectral with (and switching equivalent to) `G(d)`.
pub fn cospectral_partition(d: &MixedGraph) -> Option<PhaseCertificate> {
    certificate(d, CertificateKind::Cospectral)
}

/// A partition certifying that `d` is antispectral to `G(d)`.
pub fn antispectral_partition(d: &MixedGraph) -> Option<PhaseCertificate> {
    certificate(d, CertificateKind::Antispectral)
}

/// Whether rows `u` and `v` agree up to a unit `c` (row_u = c * row_v) away from `{u, v}`,
/// with `u` and `v` non-adjacent. Returns the first such `c` in [`Gauge::ALL`] order.
pub fn twin_scalar(d: &MixedGraph, u: usize, v: usize) -> Option<Gauge> {
    if u == v || d.adjacent(u, v) {
        return None;
    }
    let n = d.n();
    Gauge::ALL.into_iter().find(|&c| {
        (0..n).filter(|&w| w != u && w != v).all(|w| match (d.kind(u, w).phase(), d.kind(v, w).phase()) {
            (None, None) => true,
            (Some(hu), Some(hv)) => hu == (hv + c.exponent()) % 4,
            _ => false,
        })
    })
}

/// Twin classes, each sorted, ordered by their smallest vertex.
pub fn find_twins(d: &MixedGraph) -> Vec<Vec<usize>> {
    let n = d.n();
    let mut class_of: Vec<Option<usize>> = vec![None; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        if class_of[v].is_some() {
            continue;
        }
        let id = classes.len();
        class_of[v] = Some(id);
        let mut class = vec![v];
        for w in v + 1..n {
            if class_of[w].is_none() && twin_scalar(d, v, w).is_some() {
                class_of[w] = Some(id);
                class.push(w);
            }
        }
        classes.push(class);
    }
    classes
}

/// Quotient by the twin relation: the subgraph induced by the smallest vertex of every twin
/// class, together with the class sizes (in the same order).
pub fn twin_reduction(d: &MixedGraph) -> (MixedGraph, Vec<usize>) {
    let classes = find_twins(d);
    let reps: Vec<usize> = classes.iter().map(|c| c[0]).collect();
    let sizes = classes.iter().map(Vec::len).collect();
    (d.induced(&reps), sizes)
}

/// Shape of a connected mixed graph of rank 2, up to switching equivalence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rank2Shape {
    /// `K_{a,b}`, `a <= b`.
    Bipartite { a: usize, b: usize },
    /// `C3(a,b,c)`, `a <= b <= c`.
    TripartiteCyclic { a: usize, b: usize, c: usize },
}

/// Canonical form of a rank-2 mixed graph: a shape plus `t` isolated vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rank2Form {
    pub shape: Rank2Shape,
    pub t: usize,
}

impl Rank2Form {
    /// `K_{a,b} + tK_1` with the part sizes sorted.
    pub fn bipartite(a: usize, b: usize, t: usize) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::Precondition(format!("part sizes must be positive, got ({a},{b})")));
        }
        Ok(Rank2Form { shape: Rank2Shape::Bipartite { a: a.min(b), b: a.max(b) }, t })
    }

    /// `C3(a,b,c) + tK_1` with the part sizes sorted.
    pub fn tripartite(a: usize, b: usize, c: usize, t: usize) -> Result<Self> {
        let mut p = [a, b, c];
        p.sort_unstable();
        if p[0] == 0 {
            return Err(Error::Precondition(format!("part sizes must be positive, got ({a},{b},{c})")));
        }
        Ok(Rank2Form { shape: Rank2Shape::TripartiteCyclic { a: p[0], b: p[1], c: p[2] }, t })
    }

    /// Part sizes in ascending order.
    pub fn parts(&self) -> Vec<usize> {
        match self.shape {
            Rank2Shape::Bipartite { a, b } => vec![a, b],
            Rank2Shape::TripartiteCyclic { a, b, c } => vec![a, b, c],
        }
    }

    pub fn is_bipartite(&self) -> bool {
        matches!(self.shape, Rank2Shape::Bipartite { .. })
    }

    pub fn n(&self) -> usize {
        self.parts().iter().sum::<usize>() + self.t
    }

    pub fn edges(&self) -> usize {
        match self.shape {
            Rank2Shape::Bipartite { a, b } => a * b,
            Rank2Shape::TripartiteCyclic { a, b, c } => a * b + a * c + b * c,
        }
    }

    /// Square of the positive eigenvalue; equals the edge count.
    pub fn rho2(&self) -> usize {
        self.edges()
    }

    /// The representative graph `K_{a,b} + tK_1` or `C3(a,b,c) + tK_1`.
    pub fn realize(&self) -> MixedGraph {
        let family = match self.shape {
            Rank2Shape::Bipartite { a, b } => Family::CompleteBipartite(a, b),
            Rank2Shape::TripartiteCyclic { a, b, c } => Family::C3(a, b, c),
        };
        gen_family(&family).expect("parts are positive").with_isolated(self.t)
    }

    pub fn to_json(&self) -> Value {
        match self.shape {
            Rank2Shape::Bipartite { a, b } => {
                json!({"rank": 2, "form": "K", "a": a, "b": b, "t": self.t, "rho2": self.rho2()})
            }
            Rank2Shape::TripartiteCyclic { a, b, c } => {
                json!({"rank": 2, "form": "C3", "a": a, "b": b, "c": c, "t": self.t, "rho2": self.rho2()})
            }
        }
    }
}

impl fmt::Display for Rank2Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.shape {
            Rank2Shape::Bipartite { a, b } => write!(f, "K_{{{a},{b}}}")?,
            Rank2Shape::TripartiteCyclic { a, b, c } => write!(f, "C3({a},{b},{c})")?,
        }
        if self.t > 0 {
            write!(f, " + {}K_1", self.t)?;
        }
        Ok(())
    }
}

/// Outcome of [`classify_rank2`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rank2Classification {
    Rank2(Rank2Form),
    NotRank2 { rank: usize },
}

impl Rank2Classification {
    pub fn form(&self) -> Option<Rank2Form> {
        match self {
            Rank2Classification::Rank2(f) => Some(*f),
            Rank2Classification::NotRank2 { .. } => None,
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Rank2Classification::Rank2(f) => f.to_json(),
            Rank2Classification::NotRank2 { rank } => json!({ "rank": rank }),
        }
    }
}

/// Parts of a complete multipartite graph (vertices grouped by neighbourhood), or `None`.
fn multipartite_parts(g: &MixedGraph) -> Option<Vec<Vec<usize>>> {
    let n = g.n();
    let mut groups: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        groups.entry(g.neighbors(v).collect()).or_default().push(v);
    }
    let parts: Vec<Vec<usize>> = groups.into_values().collect();
    let mut part_of = vec![0; n];
    for (i, p) in parts.iter().enumerate() {
        for &v in p {
            part_of[v] = i;
        }
    }
    for u in 0..n {
        for v in u + 1..n {
            if g.adjacent(u, v) == (part_of[u] == part_of[v]) {
                return None;
            }
        }
    }
    let mut parts = parts;
    parts.sort();
    Some(parts)
}

/// Classifies `d` if its Hermitian rank is exactly 2.
///
/// Returns [`Error::Inconsistency`] if a rank-2 graph fails to reduce to `K_{a,b}` or
/// `C3(a,b,c)` plus isolated vertices.
pub fn classify_rank2(d: &MixedGraph) -> Result<Rank2Classification> {
    let rank = rank_of(d);
    if rank != 2 {
        return Ok(Rank2Classification::NotRank2 { rank });
    }
    let inconsistent = |what: &str| Err(Error::Inconsistency(format!("rank-2 graph {what}: {d:?}")));
    let nontrivial: Vec<Vec<usize>> = d.components().into_iter().filter(|c| c.len() > 1).collect();
    let [component] = nontrivial.as_slice() else {
        return inconsistent("has more than one nontrivial component");
    };
    let t = d.n() - component.len();
    let core = d.induced(component);
    let Some(parts) = multipartite_parts(&core.underlying()) else {
        return inconsistent("is not complete multipartite");
    };
    let mut twins = find_twins(&core);
    twins.sort();
    if twins != parts {
        return inconsistent("has twin classes different from its parts");
    }
    let (quotient, sizes) = twin_reduction(&core);
    match sizes.as_slice() {
        &[a, b] => Rank2Form::bipartite(a, b, t).map(Rank2Classification::Rank2),
        &[a, b, c] => {
            let triangle = gen_family(&Family::DirectedCycle(3))?;
            if are_switching_equivalent(&quotient, &triangle, true)?.is_none() {
                return inconsistent("reduces to a triangle that is not an odd triangle");
            }
            Rank2Form::tripartite(a, b, c, t).map(Rank2Classification::Rank2)
        }
        _ => inconsistent("has a number of parts other than 2 or 3"),
    }
}

/// An entry of the matrix `H(x,y,z)`: `0`, `i` or `-i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpecialEntry {
    Zero,
    I,
    MinusI,
}

impl SpecialEntry {
    pub const ALL: [SpecialEntry; 3] = [SpecialEntry::Zero, SpecialEntry::I, SpecialEntry::MinusI];

    pub fn to_gaussian(self) -> Gaussian<i64> {
        match self {
            SpecialEntry::Zero => Gaussian { re: 0, im: 0 },
            SpecialEntry::I => Gaussian { re: 0, im: 1 },
            SpecialEntry::MinusI => Gaussian { re: 0, im: -1 },
        }
    }

    pub fn from_gaussian(g: &Gaussian<i64>) -> Result<Self> {
        match (g.re, g.im) {
            (0, 0) => Ok(SpecialEntry::Zero),
            (0, 1) => Ok(SpecialEntry::I),
            (0, -1) => Ok(SpecialEntry::MinusI),
            _ => Err(Error::Precondition(format!("entry {g} is not one of 0, i, -i"))),
        }
    }
}

/// The 4x4 matrix with first row `(0,1,1,1)` and the remaining rows
/// `(1,0,x,-y)`, `(1,-x,0,z)`, `(1,y,-z,0)`.
pub fn special_matrix(x: SpecialEntry, y: SpecialEntry, z: SpecialEntry) -> HermitianMatrix {
    let (x, y, z) = (x.to_gaussian(), y.to_gaussian(), z.to_gaussian());
    let neg = |g: &Gaussian<i64>| Gaussian { re: -g.re, im: -g.im };
    let one = Gaussian { re: 1, im: 0 };
    let zero = Gaussian { re: 0, im: 0 };
    let entries = vec![
        zero.clone(),
        one.clone(),
        one.clone(),
        one.clone(),
        one.clone(),
        zero.clone(),
        x.clone(),
        neg(&y),
        one.clone(),
        neg(&x),
        zero.clone(),
        z.clone(),
        one,
        y,
        neg(&z),
        zero,
    ];
    HermitianMatrix::from_entries(4, entries).expect("H(x,y,z) is Hermitian for x,y,z in {0,i,-i}")
}

pub fn special_matrix_charpoly(x: SpecialEntry, y: SpecialEntry, z: SpecialEntry) -> CharPoly {
    char_poly(&special_matrix(x, y, z))
}

pub fn special_matrix_rank(x: SpecialEntry, y: SpecialEntry, z: SpecialEntry) -> usize {
    rank_exact(&special_matrix(x, y, z))
}

/// Whether the edge kinds of `d` make it an odd triangle (connected, three vertices, odd
/// number of arcs).
pub fn is_odd_triangle(d: &MixedGraph) -> bool {
    d.n() == 3 && d.edge_count() == 3 && d.arc_count() % 2 == 1
}

/// Whether `d` contains an induced path on four vertices in its underlying graph.
pub fn has_induced_p4(d: &MixedGraph) -> bool {
    let n = d.n();
    let adj = |u: usize, v: usize| d.kind(u, v) != EdgeKind::Absent;
    for a in 0..n {
        for b in 0..n {
            if b == a || !adj(a, b) {
                continue;
            }
            for c in 0..n {
                if c == a || c == b || !adj(b, c) || adj(a, c) {
                    continue;
                }
                for e in 0..n {
                    if e == a || e == b || e == c || !adj(c, e) || adj(a, e) || adj(b, e) {
                        continue;
                    }
                    return true;
                }
            }
        }
    }
    false
}
