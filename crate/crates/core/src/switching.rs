//! Four-way switching: diagonal similarities `H -> S^{-1} H S` with `S` drawn from
//! `{1, -1, i, -i}`, restricted to partitions that keep the matrix a valid adjacency matrix.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gaussian::Gaussian;
use crate::graph::{EdgeKind, MixedGraph};
use crate::iso;
use crate::spectral::HermitianMatrix;

/// Largest order for labeled equivalence and switching classes by gauge enumeration.
pub const GAUGE_CAP: usize = 16;
/// Largest order for equivalence up to isomorphism.
pub const GAUGE_ISO_CAP: usize = 8;
/// Largest order for [`switching_class`].
pub const CLASS_CAP: usize = 10;

/// An element `i^k` of the group `{1, i, -1, -i}`, stored as `k mod 4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Gauge(u8);

impl Gauge {
    pub const ONE: Gauge = Gauge(0);
    pub const I: Gauge = Gauge(1);
    pub const MINUS_ONE: Gauge = Gauge(2);
    pub const MINUS_I: Gauge = Gauge(3);
    pub const ALL: [Gauge; 4] = [Gauge::ONE, Gauge::MINUS_ONE, Gauge::I, Gauge::MINUS_I];

    pub fn from_exponent(k: u8) -> Gauge {
        Gauge(k % 4)
    }

    /// `k` with `self = i^k`.
    pub fn exponent(self) -> u8 {
        self.0
    }

    pub fn mul(self, o: Gauge) -> Gauge {
        Gauge((self.0 + o.0) % 4)
    }

    pub fn conj(self) -> Gauge {
        Gauge((4 - self.0) % 4)
    }

    pub fn inverse(self) -> Gauge {
        self.conj()
    }

    pub fn to_gaussian(self) -> Gaussian<i64> {
        match self.0 {
            0 => Gaussian { re: 1, im: 0 },
            1 => Gaussian { re: 0, im: 1 },
            2 => Gaussian { re: -1, im: 0 },
            _ => Gaussian { re: 0, im: -1 },
        }
    }
}

impl fmt::Display for Gauge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self.0 {
            0 => "1",
            1 => "i",
            2 => "-1",
            _ => "-i",
        })
    }
}

impl FromStr for Gauge {
    type Err = Error;

    fn from_str(s: &str) -> Result<Gauge> {
        match s {
            "1" => Ok(Gauge::ONE),
            "-1" => Ok(Gauge::MINUS_ONE),
            "i" => Ok(Gauge::I),
            "-i" => Ok(Gauge::MINUS_I),
            other => Err(Error::InvalidGauge(format!("unknown gauge value {other:?}"))),
        }
    }
}

/// Assignment of a [`Gauge`] to every vertex: the diagonal of `S`, equivalently the partition
/// `V = V_1 + V_{-1} + V_i + V_{-i}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaugePartition {
    values: Vec<Gauge>,
}

impl GaugePartition {
    pub fn new(values: Vec<Gauge>) -> Self {
        GaugePartition { values }
    }

    pub fn constant(n: usize, g: Gauge) -> Self {
        GaugePartition { values: vec![g; n] }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, v: usize) -> Gauge {
        self.values[v]
    }

    pub fn values(&self) -> &[Gauge] {
        &self.values
    }

    /// Vertices of the part `V_g`.
    pub fn class(&self, g: Gauge) -> Vec<usize> {
        (0..self.values.len()).filter(|&v| self.values[v] == g).collect()
    }

    /// Pointwise product.
    pub fn product(&self, other: &GaugePartition) -> GaugePartition {
        assert_eq!(self.len(), other.len());
        GaugePartition { values: self.values.iter().zip(&other.values).map(|(a, b)| a.mul(*b)).collect() }
    }

    /// Gauge for decoding index `code` in base 4 over vertices `1..n`, vertex 0 fixed to `1`.
    fn from_index(n: usize, mut code: u64) -> GaugePartition {
        let mut values = vec![Gauge::ONE; n];
        for v in values.iter_mut().skip(1) {
            *v = Gauge((code % 4) as u8);
            code /= 4;
        }
        GaugePartition { values }
    }

    /// Parses `class:vertex,vertex class:vertex ...` (for example `1:0,3 i:1 -1:2`); vertices
    /// not mentioned are put in class `1`.
    pub fn parse(spec: &str, n: usize) -> Result<GaugePartition> {
        let mut values = vec![None; n];
        for token in spec.split_whitespace() {
            let (class, verts) = token
                .split_once(':')
                .ok_or_else(|| Error::InvalidGauge(format!("expected class:vertices, got {token:?}")))?;
            let g: Gauge = class.parse()?;
            for part in verts.split(',').filter(|s| !s.is_empty()) {
                let v: usize =
                    part.parse().map_err(|_| Error::InvalidGauge(format!("invalid vertex {part:?}")))?;
                if v >= n {
                    return Err(Error::InvalidGauge(format!("vertex {v} out of range for n = {n}")));
                }
                if values[v].is_some_and(|old| old != g) {
                    return Err(Error::InvalidGauge(format!("vertex {v} assigned to two classes")));
                }
                values[v] = Some(g);
            }
        }
        Ok(GaugePartition { values: values.into_iter().map(|g| g.unwrap_or(Gauge::ONE)).collect() })
    }
}

impl fmt::Display for GaugePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for g in [Gauge::ONE, Gauge::I, Gauge::MINUS_ONE, Gauge::MINUS_I] {
            let class = self.class(g);
            if class.is_empty() {
                continue;
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            let list: Vec<String> = class.iter().map(ToString::to_string).collect();
            write!(f, "{g}:{}", list.join(","))?;
        }
        Ok(())
    }
}

/// Exponent of `H'_{uv} = H_{uv} S_{vv} / S_{uu}` for an edge of phase `h`.
#[inline]
fn switched_phase(h: u8, g: &GaugePartition, u: usize, v: usize) -> u8 {
    (h + g.values[v].0 + 4 - g.values[u].0) % 4
}

/// The similarity `S^{-1} H(D) S`, entry by entry.
pub fn transform_entrywise(d: &MixedGraph, g: &GaugePartition) -> HermitianMatrix {
    assert_eq!(d.n(), g.len(), "gauge length must equal the order");
    let n = d.n();
    let mut m = HermitianMatrix::zero(n);
    for u in 0..n {
        for v in u + 1..n {
            if let Some(h) = d.kind(u, v).phase() {
                m.set_pair(u, v, Gauge(switched_phase(h, g, u, v)).to_gaussian());
            }
        }
    }
    m
}

/// First edge whose switched entry would be `-1`.
fn first_inadmissible_edge(d: &MixedGraph, g: &GaugePartition) -> Option<(usize, usize)> {
    let n = d.n();
    for u in 0..n {
        for v in u + 1..n {
            if let Some(h) = d.kind(u, v).phase() {
                if switched_phase(h, g, u, v) == 2 {
                    return Some((u, v));
                }
            }
        }
    }
    None
}

/// Admissibility stated through the edge types: no undirected edge of type `(1,-1)` or
/// `(i,-i)`, and no arc of type `(1,i)`, `(i,-1)`, `(-1,-i)` or `(-i,1)`.
pub fn is_admissible_by_types(d: &MixedGraph, g: &GaugePartition) -> bool {
    use Gauge as G;
    const FORBIDDEN_UNDIRECTED: [(Gauge, Gauge); 4] =
        [(G::ONE, G::MINUS_ONE), (G::MINUS_ONE, G::ONE), (G::I, G::MINUS_I), (G::MINUS_I, G::I)];
    const FORBIDDEN_ARCS: [(Gauge, Gauge); 4] =
        [(G::ONE, G::I), (G::I, G::MINUS_ONE), (G::MINUS_ONE, G::MINUS_I), (G::MINUS_I, G::ONE)];
    for (u, v) in d.undirected_edges() {
        if FORBIDDEN_UNDIRECTED.contains(&(g.get(u), g.get(v))) {
            return false;
        }
    }
    for (u, v) in d.arcs() {
        if FORBIDDEN_ARCS.contains(&(g.get(u), g.get(v))) {
            return false;
        }
    }
    true
}

/// Whether switching `d` by `g` produces no `-1` entry.
pub fn is_admissible(d: &MixedGraph, g: &GaugePartition) -> bool {
    let ok = first_inadmissible_edge(d, g).is_none();
    debug_assert_eq!(ok, is_admissible_by_types(d, g));
    ok
}

/// Four-way switching of `d` with respect to `g`.
pub fn apply_four_way(d: &MixedGraph, g: &GaugePartition) -> Result<MixedGraph> {
    if g.len() != d.n() {
        return Err(Error::InvalidGauge(format!("gauge has {} entries for {} vertices", g.len(), d.n())));
    }
    if let Some((u, v)) = first_inadmissible_edge(d, g) {
        let (edge, from, to) = match d.kind(u, v) {
            EdgeKind::Undirected => (format!("{u} -- {v}"), g.get(u), g.get(v)),
            EdgeKind::ArcForward => (format!("{u} -> {v}"), g.get(u), g.get(v)),
            _ => (format!("{v} -> {u}"), g.get(v), g.get(u)),
        };
        return Err(Error::Inadmissible { edge, from: from.to_string(), to: to.to_string() });
    }
    Ok(apply_unchecked(d, g))
}

fn apply_unchecked(d: &MixedGraph, g: &GaugePartition) -> MixedGraph {
    let n = d.n();
    let mut out = MixedGraph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if let Some(h) = d.kind(u, v).phase() {
                let kind = EdgeKind::from_phase(switched_phase(h, g, u, v)).expect("admissible");
                out.set_kind(u, v, kind);
            }
        }
    }
    out
}

/// Mixed 2-way switching across the cut between `cut_side` and the remaining vertices.
///
/// The cut may hold undirected edges and arcs in a single direction. Its arcs become undirected
/// and its undirected edges become arcs pointing against the former arcs. A cut without arcs is
/// treated as if its arcs pointed out of `cut_side`, so its undirected edges end up pointing
/// into `cut_side`.
pub fn two_way_mixed(d: &MixedGraph, cut_side: &[usize]) -> Result<MixedGraph> {
    let n = d.n();
    let mut inside = vec![false; n];
    for &v in cut_side {
        if v >= n {
            return Err(Error::Precondition(format!("vertex {v} out of range for n = {n}")));
        }
        inside[v] = true;
    }
    let mut outward: Option<(usize, usize)> = None;
    let mut inward: Option<(usize, usize)> = None;
    for (u, v) in d.arcs() {
        match (inside[u], inside[v]) {
            (true, false) => outward = outward.or(Some((u, v))),
            (false, true) => inward = inward.or(Some((u, v))),
            _ => {}
        }
    }
    if let (Some((u, v)), Some((x, y))) = (outward, inward) {
        return Err(Error::MixedCutDirection { u, v, x, y });
    }
    // Arcs leaving cut_side need S_out / S_in = -i to become undirected; entering ones need i.
    let outside = if inward.is_some() { Gauge::I } else { Gauge::MINUS_I };
    let g = GaugePartition::new((0..n).map(|v| if inside[v] { Gauge::ONE } else { outside }).collect());
    apply_four_way(d, &g)
}

/// A certificate that `relabel(apply_four_way(src, gauge), perm) == target`, where `src` is the
/// first graph or (if `converse`) its converse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Equivalence {
    pub gauge: GaugePartition,
    pub converse: bool,
    pub perm: Vec<usize>,
}

impl Equivalence {
    /// Re-derives the target from the first graph; used to check witnesses independently.
    pub fn apply(&self, d1: &MixedGraph) -> Result<MixedGraph> {
        let src = if self.converse { d1.converse() } else { d1.clone() };
        Ok(apply_four_way(&src, &self.gauge)?.relabel(&self.perm))
    }
}

/// Gauge `g` with `apply_four_way(src, g) == target`, found by propagating phases along a
/// spanning forest from the smallest vertex of each component (pinned to `1`).
pub fn propagate_gauge(src: &MixedGraph, target: &MixedGraph) -> Option<GaugePartition> {
    let n = src.n();
    if n != target.n() {
        return None;
    }
    for u in 0..n {
        for v in u + 1..n {
            if src.adjacent(u, v) != target.adjacent(u, v) {
                return None;
            }
        }
    }
    let mut phase: Vec<Option<u8>> = vec![None; n];
    for root in 0..n {
        if phase[root].is_some() {
            continue;
        }
        phase[root] = Some(0);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let pu = phase[u].expect("queued vertices carry a phase");
            for v in src.neighbors(u) {
                let h = src.kind(u, v).phase().expect("adjacent");
                let want = target.kind(u, v).phase().expect("same support");
                // h + g_v - g_u = want
                let pv = (want + pu + 4 - h) % 4;
                match phase[v] {
                    None => {
                        phase[v] = Some(pv);
                        queue.push_back(v);
                    }
                    Some(existing) if existing != pv => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(GaugePartition::new(phase.into_iter().map(|p| Gauge(p.expect("all vertices reached"))).collect()))
}

/// Gauge with `apply_four_way(src, g) == target` by trying all `4^(n-1)` assignments with
/// vertex 0 fixed to `1`. Exponential; kept as an independent check of [`propagate_gauge`].
pub fn find_gauge_exhaustive(src: &MixedGraph, target: &MixedGraph) -> Result<Option<GaugePartition>> {
    let n = src.n();
    if n != target.n() {
        return Err(Error::OrderMismatch(n, target.n()));
    }
    if n > GAUGE_CAP {
        return Err(Error::CapExceeded { what: "gauge enumeration", n, cap: GAUGE_CAP });
    }
    if n == 0 {
        return Ok(Some(GaugePartition::new(Vec::new())));
    }
    let target_h = crate::spectral::hermitian_matrix(target);
    for code in 0..4u64.pow(n as u32 - 1) {
        let g = GaugePartition::from_index(n, code);
        if transform_entrywise(src, &g) == target_h {
            return Ok(Some(g));
        }
    }
    Ok(None)
}

fn identity(n: usize) -> Vec<usize> {
    (0..n).collect()
}

/// Labeled or (with `up_to_iso`) unlabeled switching equivalence, with a witness.
///
/// Single switchings of `d1` and of its converse suffice, since the diagonal gauges form a
/// group that is closed under conjugation.
pub fn are_switching_equivalent(d1: &MixedGraph, d2: &MixedGraph, up_to_iso: bool) -> Result<Option<Equivalence>> {
    let n = d1.n();
    if n != d2.n() {
        return Ok(None);
    }
    let cap = if up_to_iso { GAUGE_ISO_CAP } else { GAUGE_CAP };
    if n > cap {
        return Err(Error::CapExceeded { what: "switching equivalence", n, cap });
    }
    let sources = [(false, d1.clone()), (true, d1.converse())];
    if !up_to_iso {
        for (converse, src) in &sources {
            if let Some(gauge) = propagate_gauge(src, d2) {
                return Ok(Some(Equivalence { gauge, converse: *converse, perm: identity(n) }));
            }
        }
        return Ok(None);
    }
    let mut found = None;
    iso::for_each_underlying_isomorphism(d1, d2, |perm| {
        let mut inverse = vec![0; n];
        for (v, &p) in perm.iter().enumerate() {
            inverse[p] = v;
        }
        let pulled = d2.relabel(&inverse);
        for (converse, src) in &sources {
            if let Some(gauge) = propagate_gauge(src, &pulled) {
                found = Some(Equivalence { gauge, converse: *converse, perm: perm.to_vec() });
                return true;
            }
        }
        false
    });
    Ok(found)
}

/// Every labeled mixed graph switching equivalent to `d`, sorted and deduplicated.
pub fn switching_class(d: &MixedGraph) -> Result<Vec<MixedGraph>> {
    let n = d.n();
    if n > CLASS_CAP {
        return Err(Error::CapExceeded { what: "switching class", n, cap: CLASS_CAP });
    }
    let mut class = BTreeSet::new();
    if n == 0 {
        class.insert(d.clone());
        return Ok(class.into_iter().collect());
    }
    for src in [d.clone(), d.converse()] {
        for code in 0..4u64.pow(n as u32 - 1) {
            let g = GaugePartition::from_index(n, code);
            if first_inadmissible_edge(&src, &g).is_none() {
                class.insert(apply_unchecked(&src, &g));
            }
        }
    }
    Ok(class.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{gen_family, Family};
    use crate::spectral::{char_poly_of, hermitian_matrix, rank_of, CharPoly};

    fn fam(f: Family) -> MixedGraph {
        gen_family(&f).unwrap()
    }

    fn gauge(vals: &[Gauge]) -> GaugePartition {
        GaugePartition::new(vals.to_vec())
    }

    #[test]
    fn group_structure() {
        for a in Gauge::ALL {
            assert_eq!(a.mul(a.inverse()), Gauge::ONE);
            assert_eq!(a.conj().conj(), a);
            for b in Gauge::ALL {
                let prod = a.to_gaussian().lift::<i128>().checked_mul(&b.to_gaussian().lift()).unwrap();
                assert_eq!(prod, a.mul(b).to_gaussian().lift());
            }
        }
        assert_eq!(Gauge::I.mul(Gauge::I), Gauge::MINUS_ONE);
    }

    #[test]
    fn identity_and_constant_gauges() {
        let d = MixedGraph::from_edges(4, &[(0, 1)], &[(1, 2), (3, 1)]).unwrap();
        let h = hermitian_matrix(&d);
        for g in Gauge::ALL {
            assert_eq!(transform_entrywise(&d, &GaugePartition::constant(4, g)), h);
            assert_eq!(apply_four_way(&d, &GaugePartition::constant(4, g)).unwrap(), d);
        }
    }

    #[test]
    fn entrywise_formula_on_single_arc() {
        let arc = MixedGraph::from_edges(2, &[], &[(0, 1)]).unwrap();
        let g = gauge(&[Gauge::ONE, Gauge::MINUS_I]);
        let m = transform_entrywise(&arc, &g);
        assert_eq!(m.get(0, 1), Gaussian { re: 1, im: 0 });
        assert_eq!(apply_four_way(&arc, &g).unwrap(), fam(Family::Complete(2)));
    }

    #[test]
    fn admissibility_examples() {
        let k2 = fam(Family::Complete(2));
        assert!(!is_admissible(&k2, &gauge(&[Gauge::ONE, Gauge::MINUS_ONE])));
        let arc = MixedGraph::from_edges(2, &[], &[(0, 1)]).unwrap();
        assert!(!is_admissible(&arc, &gauge(&[Gauge::ONE, Gauge::I])));
        let g = gauge(&[Gauge::ONE, Gauge::MINUS_ONE]);
        assert!(is_admissible(&arc, &g));
        assert_eq!(apply_four_way(&arc, &g).unwrap().arcs(), vec![(1, 0)]);
        let err = apply_four_way(&arc, &gauge(&[Gauge::ONE, Gauge::I])).unwrap_err();
        assert_eq!(err, Error::Inadmissible { edge: "0 -> 1".into(), from: "1".into(), to: "i".into() });
    }

    #[test]
    fn admissibility_definitions_agree_exhaustively() {
        for n in 1..=3usize {
            let pairs = n * (n - 1) / 2;
            for code in 0..4u32.pow(pairs as u32) {
                let d = crate::oracle::decode(n, code as u64);
                for gcode in 0..4u64.pow(n as u32) {
                    let mut values = Vec::new();
                    let mut c = gcode;
                    for _ in 0..n {
                        values.push(Gauge((c % 4) as u8));
                        c /= 4;
                    }
                    let g = GaugePartition::new(values);
                    let by_entries = !transform_entrywise(&d, &g).is_adjacency_valid();
                    assert_eq!(!by_entries, is_admissible_by_types(&d, &g), "{d:?} {g}");
                    assert_eq!(is_admissible(&d, &g), is_admissible_by_types(&d, &g));
                }
            }
        }
    }

    #[test]
    fn c4_to_directed_c4() {
        let c4 = fam(Family::Cycle(4));
        let g = gauge(&[Gauge::ONE, Gauge::MINUS_I, Gauge::MINUS_ONE, Gauge::I]);
        let out = apply_four_way(&c4, &g).unwrap();
        // entry (0,1) = 1 * 1 * (-i): the cycle runs 0 -> 3 -> 2 -> 1 -> 0
        assert_eq!(out, fam(Family::DirectedCycle(4)).converse());
        let forward = gauge(&[Gauge::ONE, Gauge::I, Gauge::MINUS_ONE, Gauge::MINUS_I]);
        assert_eq!(apply_four_way(&c4, &forward).unwrap(), fam(Family::DirectedCycle(4)));
        assert_eq!(char_poly_of(&out), CharPoly::from_i64(&[0, 0, -4, 0, 1]));
        assert_eq!(char_poly_of(&c4), char_poly_of(&out));
    }

    #[test]
    fn gauge_composition() {
        let d = fam(Family::Cycle(4));
        let g1 = gauge(&[Gauge::ONE, Gauge::MINUS_I, Gauge::MINUS_ONE, Gauge::I]);
        let g2 = gauge(&[Gauge::ONE, Gauge::I, Gauge::MINUS_ONE, Gauge::MINUS_I]);
        let step = apply_four_way(&apply_four_way(&d, &g1).unwrap(), &g2).unwrap();
        assert_eq!(step, apply_four_way(&d, &g1.product(&g2)).unwrap());
        assert_eq!(step, d);
        let g3 = gauge(&[Gauge::ONE, Gauge::ONE, Gauge::MINUS_I, Gauge::MINUS_I]);
        let d = fam(Family::Path(4));
        let step = apply_four_way(&apply_four_way(&d, &g2).unwrap(), &g3).unwrap();
        assert_eq!(step, apply_four_way(&d, &g2.product(&g3)).unwrap());
    }

    #[test]
    fn mixed_two_way_switchings() {
        // pendant arc of a tree becomes an undirected edge
        let tree = MixedGraph::from_edges(4, &[(0, 1), (1, 2)], &[(2, 3)]).unwrap();
        let out = two_way_mixed(&tree, &[3]).unwrap();
        assert_eq!(out.undirected_edges(), vec![(0, 1), (1, 2), (2, 3)]);

        let star = MixedGraph::from_edges(4, &[(0, 1), (0, 2)], &[(3, 0)]).unwrap();
        assert_eq!(two_way_mixed(&star, &[3]).unwrap(), fam(Family::Star(3)));

        let d = fam(Family::DirectedCycle(3)).with_isolated(1);
        assert_eq!(two_way_mixed(&d, &[3]).unwrap(), d);

        let c4 = fam(Family::DirectedCycle(4));
        assert!(matches!(two_way_mixed(&c4, &[0, 1]), Err(Error::MixedCutDirection { .. })));

        // undirected cut edges turn into arcs against the former arcs
        let d = MixedGraph::from_edges(3, &[(0, 2)], &[(0, 1)]).unwrap();
        let out = two_way_mixed(&d, &[0]).unwrap();
        assert_eq!(out.undirected_edges(), vec![(0, 1)]);
        assert_eq!(out.arcs(), vec![(2, 0)]);
        assert_eq!(char_poly_of(&out), char_poly_of(&d));
    }

    #[test]
    fn gauge_parsing() {
        let g = GaugePartition::parse("1:0,3 i:1 -1:2", 5).unwrap();
        assert_eq!(g.values(), &[Gauge::ONE, Gauge::I, Gauge::MINUS_ONE, Gauge::ONE, Gauge::ONE]);
        assert_eq!(g.to_string(), "1:0,3,4 i:1 -1:2");
        assert!(GaugePartition::parse("2:0", 3).is_err());
        assert!(GaugePartition::parse("i:7", 3).is_err());
        assert!(GaugePartition::parse("i:0 -i:0", 3).is_err());
        assert!(GaugePartition::parse("i", 3).is_err());
    }

    #[test]
    fn c4_equivalent_to_directed_c4() {
        let c4 = fam(Family::Cycle(4));
        let dc4 = fam(Family::DirectedCycle(4));
        let eq = are_switching_equivalent(&c4, &dc4, false).unwrap().unwrap();
        assert_eq!(eq.gauge.values(), &[Gauge::ONE, Gauge::I, Gauge::MINUS_ONE, Gauge::MINUS_I]);
        assert!(!eq.converse);
        assert_eq!(eq.apply(&c4).unwrap(), dc4);
        assert_eq!(find_gauge_exhaustive(&c4, &dc4).unwrap(), Some(eq.gauge));
    }

    #[test]
    fn star_orientations_are_equivalent() {
        let star = fam(Family::Star(3));
        let kinds = [EdgeKind::Undirected, EdgeKind::ArcForward, EdgeKind::ArcBackward];
        let mut count = 0;
        for a in kinds {
            for b in kinds {
                for c in kinds {
                    let mut d = MixedGraph::empty(4);
                    d.set_kind(0, 1, a);
                    d.set_kind(0, 2, b);
                    d.set_kind(0, 3, c);
                    let eq = are_switching_equivalent(&star, &d, false).unwrap().unwrap();
                    assert_eq!(eq.apply(&star).unwrap(), d);
                    count += 1;
                }
            }
        }
        assert_eq!(count, 27);
    }

    #[test]
    fn odd_and_even_triangles_differ() {
        let odd = fam(Family::OddTriangle);
        let even = fam(Family::EvenTriangle);
        assert_ne!(rank_of(&odd), rank_of(&even));
        assert!(are_switching_equivalent(&odd, &even, false).unwrap().is_none());
        assert!(are_switching_equivalent(&odd, &even, true).unwrap().is_none());
    }

    #[test]
    fn up_to_isomorphism() {
        let a = fam(Family::C3(1, 2, 2));
        let b = fam(Family::C3(2, 2, 1));
        assert!(are_switching_equivalent(&a, &b, false).unwrap().is_none());
        let eq = are_switching_equivalent(&a, &b, true).unwrap().unwrap();
        assert_eq!(eq.apply(&a).unwrap(), b);
        let dc4 = fam(Family::DirectedCycle(4)).relabel(&[2, 0, 3, 1]);
        let eq = are_switching_equivalent(&fam(Family::Cycle(4)), &dc4, true).unwrap().unwrap();
        assert_eq!(eq.apply(&fam(Family::Cycle(4))).unwrap(), dc4);
    }

    #[test]
    fn caps() {
        let big = MixedGraph::empty(17);
        assert!(matches!(are_switching_equivalent(&big, &big, false), Err(Error::CapExceeded { .. })));
        let nine = MixedGraph::empty(9);
        assert!(matches!(are_switching_equivalent(&nine, &nine, true), Err(Error::CapExceeded { .. })));
        assert!(matches!(switching_class(&MixedGraph::empty(11)), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn class_of_k2() {
        let class = switching_class(&fam(Family::Complete(2))).unwrap();
        let expected = vec![
            fam(Family::Complete(2)),
            MixedGraph::from_edges(2, &[], &[(0, 1)]).unwrap(),
            MixedGraph::from_edges(2, &[], &[(1, 0)]).unwrap(),
        ];
        let mut expected_sorted = expected.clone();
        expected_sorted.sort();
        assert_eq!(class, expected_sorted);
    }

    #[test]
    fn class_of_k3_has_no_even_triangle() {
        let class = switching_class(&fam(Family::Complete(3))).unwrap();
        assert!(class.iter().all(|d| rank_of(d) == 3));
        assert!(class.iter().all(|d| char_poly_of(d) == char_poly_of(&fam(Family::Complete(3)))));
        let even = fam(Family::EvenTriangle);
        assert!(!class.contains(&even));
    }

    #[test]
    fn class_of_c4_contains_directed_c4() {
        let class = switching_class(&fam(Family::Cycle(4))).unwrap();
        assert!(class.len() >= 2);
        assert!(class.contains(&fam(Family::DirectedCycle(4))));
    }
}
