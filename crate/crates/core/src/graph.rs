//! Mixed graphs: undirected edges and arcs on the vertex set `0..n`, no loops, no digons.

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Relation of an ordered vertex pair `(u, v)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum EdgeKind {
    #[default]
    Absent,
    Undirected,
    /// Arc `u -> v`.
    ArcForward,
    /// Arc `v -> u`.
    ArcBackward,
}

impl EdgeKind {
    /// The same relation seen from the other endpoint.
    pub fn reversed(self) -> Self {
        match self {
            EdgeKind::ArcForward => EdgeKind::ArcBackward,
            EdgeKind::ArcBackward => EdgeKind::ArcForward,
            k => k,
        }
    }

    pub fn is_edge(self) -> bool {
        self != EdgeKind::Absent
    }

    pub fn is_arc(self) -> bool {
        matches!(self, EdgeKind::ArcForward | EdgeKind::ArcBackward)
    }

    /// Exponent `k` such that the Hermitian entry is `i^k`; `None` for absent pairs.
    pub fn phase(self) -> Option<u8> {
        match self {
            EdgeKind::Absent => None,
            EdgeKind::Undirected => Some(0),
            EdgeKind::ArcForward => Some(1),
            EdgeKind::ArcBackward => Some(3),
        }
    }

    /// Inverse of [`EdgeKind::phase`]; the phase `2` (entry `-1`) has no edge kind.
    pub fn from_phase(phase: u8) -> Option<Self> {
        match phase % 4 {
            0 => Some(EdgeKind::Undirected),
            1 => Some(EdgeKind::ArcForward),
            3 => Some(EdgeKind::ArcBackward),
            _ => None,
        }
    }
}

/// A simple mixed graph on vertices `0..n`.
///
/// Stored as a dense `n x n` table of [`EdgeKind`]s; `kind(u, v)` and `kind(v, u)` are always
/// mutually reversed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MixedGraph {
    n: usize,
    kinds: Vec<EdgeKind>,
}

impl MixedGraph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        MixedGraph { n, kinds: vec![EdgeKind::Absent; n * n] }
    }

    /// Builds a graph from explicit edge sets, validating every invariant.
    pub fn from_edges(n: usize, undirected: &[(usize, usize)], arcs: &[(usize, usize)]) -> Result<Self> {
        let mut g = MixedGraph::empty(n);
        for &(u, v) in undirected {
            g.insert(u, v, EdgeKind::Undirected, 0)?;
        }
        for &(u, v) in arcs {
            g.insert(u, v, EdgeKind::ArcForward, 0)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn kind(&self, u: usize, v: usize) -> EdgeKind {
        self.kinds[u * self.n + v]
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.kind(u, v).is_edge()
    }

    /// Sets the relation of `(u, v)` (and the mirrored one of `(v, u)`) without validation
    /// beyond range and loop checks.
    pub(crate) fn set_kind(&mut self, u: usize, v: usize, kind: EdgeKind) {
        debug_assert!(u != v || kind == EdgeKind::Absent);
        self.kinds[u * self.n + v] = kind;
        self.kinds[v * self.n + u] = kind.reversed();
    }

    fn insert(&mut self, u: usize, v: usize, kind: EdgeKind, line: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { line, vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::Loop { line, vertex: u });
        }
        match (self.kind(u, v), kind) {
            (EdgeKind::Absent, _) => {}
            (old, new) if old == new => return Ok(()),
            (EdgeKind::ArcBackward, EdgeKind::ArcForward) => return Err(Error::Digon { line, u, v }),
            _ => return Err(Error::Overlap { line, u: u.min(v), v: u.max(v) }),
        }
        self.set_kind(u, v, kind);
        Ok(())
    }

    /// Undirected edges as pairs `(u, v)` with `u < v`, sorted.
    pub fn undirected_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.kind(u, v) == EdgeKind::Undirected {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Arcs as `(tail, head)` pairs, sorted.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in 0..self.n {
                if self.kind(u, v) == EdgeKind::ArcForward {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Number of edges, arcs and undirected edges alike.
    pub fn edge_count(&self) -> usize {
        self.kinds.iter().filter(|k| k.is_edge()).count() / 2
    }

    pub fn arc_count(&self) -> usize {
        self.kinds.iter().filter(|k| **k == EdgeKind::ArcForward).count()
    }

    /// `(in-degree, out-degree, undirected degree)` of `v`.
    pub fn degree_triple(&self, v: usize) -> (usize, usize, usize) {
        let (mut i, mut o, mut u) = (0, 0, 0);
        for w in 0..self.n {
            match self.kind(v, w) {
                EdgeKind::ArcForward => o += 1,
                EdgeKind::ArcBackward => i += 1,
                EdgeKind::Undirected => u += 1,
                EdgeKind::Absent => {}
            }
        }
        (i, o, u)
    }

    pub fn degree(&self, v: usize) -> usize {
        (0..self.n).filter(|&w| self.adjacent(v, w)).count()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&w| self.adjacent(v, w))
    }

    pub fn is_undirected(&self) -> bool {
        self.kinds.iter().all(|k| !k.is_arc())
    }

    /// `G(D)`: every arc replaced by an undirected edge.
    pub fn underlying(&self) -> MixedGraph {
        let kinds = self
            .kinds
            .iter()
            .map(|k| if k.is_edge() { EdgeKind::Undirected } else { EdgeKind::Absent })
            .collect();
        MixedGraph { n: self.n, kinds }
    }

    /// `D^T`: every arc reversed.
    pub fn converse(&self) -> MixedGraph {
        let kinds = self.kinds.iter().map(|k| k.reversed()).collect();
        MixedGraph { n: self.n, kinds }
    }

    /// Disjoint union with `t` isolated vertices, numbered after the existing ones.
    pub fn with_isolated(&self, t: usize) -> MixedGraph {
        let mut g = MixedGraph::empty(self.n + t);
        for u in 0..self.n {
            for v in 0..self.n {
                g.kinds[u * g.n + v] = self.kind(u, v);
            }
        }
        g
    }

    /// Subgraph induced by `vertices`; vertex `vertices[k]` becomes `k`.
    pub fn induced(&self, vertices: &[usize]) -> MixedGraph {
        let m = vertices.len();
        let mut g = MixedGraph::empty(m);
        for (a, &u) in vertices.iter().enumerate() {
            for (b, &v) in vertices.iter().enumerate() {
                g.kinds[a * m + b] = self.kind(u, v);
            }
        }
        g
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> MixedGraph {
        assert_eq!(perm.len(), self.n);
        let mut g = MixedGraph::empty(self.n);
        for u in 0..self.n {
            for v in 0..self.n {
                g.kinds[perm[u] * self.n + perm[v]] = self.kind(u, v);
            }
        }
        g
    }

    /// Weakly connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) == 0).collect()
    }

    /// Parses the edge-list text format.
    pub fn parse_edge_list(text: &str) -> Result<MixedGraph> {
        let mut graph: Option<MixedGraph> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = trimmed.split_whitespace().collect();
            let Some(g) = graph.as_mut() else {
                match tokens.as_slice() {
                    ["n", count] => {
                        let n = count.parse::<usize>().map_err(|_| Error::Syntax {
                            line,
                            msg: format!("invalid vertex count {count:?}"),
                        })?;
                        graph = Some(MixedGraph::empty(n));
                        continue;
                    }
                    _ => {
                        return Err(Error::Syntax { line, msg: "expected header `n <N>`".into() });
                    }
                }
            };
            let [u, op, v] = tokens.as_slice() else {
                return Err(Error::Syntax { line, msg: format!("expected `u -- v` or `u -> v`, got {trimmed:?}") });
            };
            let parse_vertex = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| Error::Syntax { line, msg: format!("invalid vertex {s:?}") })
            };
            let (u, v) = (parse_vertex(u)?, parse_vertex(v)?);
            let kind = match *op {
                "--" => EdgeKind::Undirected,
                "->" => EdgeKind::ArcForward,
                other => {
                    return Err(Error::Syntax { line, msg: format!("unknown edge operator {other:?}") });
                }
            };
            g.insert(u, v, kind, line)?;
        }
        graph.ok_or(Error::Syntax { line: 0, msg: "missing header `n <N>`".into() })
    }

    /// Renders the edge-list text format (undirected edges first, then arcs, both sorted).
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("n {}\n", self.n);
        for (u, v) in self.undirected_edges() {
            s.push_str(&format!("{u} -- {v}\n"));
        }
        for (u, v) in self.arcs() {
            s.push_str(&format!("{u} -> {v}\n"));
        }
        s
    }
}

impl Ord for MixedGraph {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.undirected_edges().cmp(&other.undirected_edges()))
            .then_with(|| self.arcs().cmp(&other.arcs()))
    }
}

impl PartialOrd for MixedGraph {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for MixedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MixedGraph")
            .field("n", &self.n)
            .field("undirected", &self.undirected_edges())
            .field("arcs", &self.arcs())
            .finish()
    }
}

impl fmt::Display for MixedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_edge_list())
    }
}

impl FromStr for MixedGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MixedGraph::parse_edge_list(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_single_edge() {
        let g = MixedGraph::parse_edge_list("n 2\n0 -- 1").unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.undirected_edges(), vec![(0, 1)]);
        assert!(g.arcs().is_empty());
    }

    #[test]
    fn parses_directed_triangle_with_comments() {
        let g = MixedGraph::parse_edge_list("# triangle\nn 3\n\n0 -> 1\n1 -> 2\n# back\n2 -> 0\n").unwrap();
        assert_eq!(g.arcs(), vec![(0, 1), (1, 2), (2, 0)]);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn rejects_digon() {
        let err = MixedGraph::parse_edge_list("n 2\n0 -> 1\n1 -> 0").unwrap_err();
        assert_eq!(err, Error::Digon { line: 3, u: 1, v: 0 });
        assert!(err.to_string().contains("digon"));
    }

    #[test]
    fn rejects_loop_range_overlap_and_syntax() {
        assert!(matches!(MixedGraph::parse_edge_list("n 2\n1 -- 1"), Err(Error::Loop { line: 2, vertex: 1 })));
        assert!(matches!(
            MixedGraph::parse_edge_list("n 2\n0 -- 2"),
            Err(Error::VertexOutOfRange { line: 2, vertex: 2, n: 2 })
        ));
        assert!(matches!(MixedGraph::parse_edge_list("n 2\n0 -- 1\n1 -> 0"), Err(Error::Overlap { line: 3, .. })));
        assert!(matches!(MixedGraph::parse_edge_list("n 2\n0 => 1"), Err(Error::Syntax { line: 2, .. })));
        assert!(matches!(MixedGraph::parse_edge_list("0 -- 1"), Err(Error::Syntax { line: 1, .. })));
        assert!(matches!(MixedGraph::parse_edge_list("# nothing"), Err(Error::Syntax { .. })));
        assert!(matches!(MixedGraph::parse_edge_list("n x"), Err(Error::Syntax { line: 1, .. })));
    }

    #[test]
    fn repeated_identical_edge_is_accepted() {
        let g = MixedGraph::parse_edge_list("n 2\n0 -> 1\n0 -> 1").unwrap();
        assert_eq!(g.arcs(), vec![(0, 1)]);
    }

    #[test]
    fn underlying_and_converse() {
        let tri = MixedGraph::from_edges(3, &[], &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let k3 = MixedGraph::from_edges(3, &[(0, 1), (0, 2), (1, 2)], &[]).unwrap();
        assert_eq!(tri.underlying(), k3);
        assert_eq!(k3.underlying(), k3);
        assert_eq!(k3.converse(), k3);

        let arc = MixedGraph::from_edges(2, &[], &[(0, 1)]).unwrap();
        assert_eq!(arc.converse().arcs(), vec![(1, 0)]);
    }

    #[test]
    fn isolated_union() {
        let k2 = MixedGraph::from_edges(2, &[(0, 1)], &[]).unwrap();
        let g = k2.with_isolated(3);
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(k2.with_isolated(0), k2);
    }

    #[test]
    fn components_of_small_graphs() {
        let g = MixedGraph::from_edges(4, &[(1, 2)], &[]).unwrap();
        let mut sizes: Vec<usize> = g.components().iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 2]);
        assert_eq!(MixedGraph::empty(3).components(), vec![vec![0], vec![1], vec![2]]);
        let arcs_only = MixedGraph::from_edges(3, &[], &[(2, 0)]).unwrap();
        assert_eq!(arcs_only.components(), vec![vec![0, 2], vec![1]]);
    }

    #[test]
    fn induced_and_relabel() {
        let g = MixedGraph::from_edges(4, &[(0, 1)], &[(1, 2), (3, 0)]).unwrap();
        let h = g.induced(&[1, 2]);
        assert_eq!(h.arcs(), vec![(0, 1)]);
        let r = g.relabel(&[3, 2, 1, 0]);
        assert_eq!(r.undirected_edges(), vec![(2, 3)]);
        assert_eq!(r.arcs(), vec![(0, 3), (2, 1)]);
    }

    #[test]
    fn edge_list_round_trip() {
        let g = MixedGraph::from_edges(5, &[(0, 4), (1, 2)], &[(3, 1), (2, 0)]).unwrap();
        let text = g.to_edge_list();
        assert_eq!(text, "n 5\n0 -- 4\n1 -- 2\n2 -> 0\n3 -> 1\n");
        assert_eq!(text.parse::<MixedGraph>().unwrap(), g);
    }
}
