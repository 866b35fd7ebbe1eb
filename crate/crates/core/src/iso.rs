//! Exhaustive isomorphism search for small graphs.
//!
//! Backtracking over vertex bijections, pruned by a per-vertex invariant and by checking every
//! pair against the already mapped vertices.

use crate::error::{Error, Result};
use crate::graph::MixedGraph;

/// Largest order accepted by [`are_isomorphic`].
pub const ISO_CAP: usize = 10;

struct Search<'a, R, V> {
    n: usize,
    rel1: R,
    rel2: R,
    inv1: Vec<u64>,
    inv2: Vec<u64>,
    perm: Vec<usize>,
    used: Vec<bool>,
    visit: &'a mut V,
}

impl<R, V> Search<'_, R, V>
where
    R: Fn(usize, usize, bool) -> u8,
    V: FnMut(&[usize]) -> bool,
{
    // Returns true when the visitor asked to stop.
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.n {
            return (self.visit)(&self.perm);
        }
        for w in 0..self.n {
            if self.used[w] || self.inv1[depth] != self.inv2[w] {
                continue;
            }
            let consistent = (0..depth).all(|u| {
                let pu = self.perm[u];
                (self.rel1)(u, depth, true) == (self.rel2)(pu, w, false)
                    && (self.rel1)(depth, u, true) == (self.rel2)(w, pu, false)
            });
            if !consistent {
                continue;
            }
            self.perm[depth] = w;
            self.used[w] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.used[w] = false;
        }
        false
    }
}

/// Calls `visit` with every bijection `perm` (vertex `v` of the first graph maps to `perm[v]`)
/// that preserves `rel`, until `visit` returns `true`. `rel(u, v, first)` reports the relation
/// of `(u, v)` in the first (`first = true`) or second graph.
fn for_each_bijection<R, V>(n: usize, rel: R, inv1: Vec<u64>, inv2: Vec<u64>, visit: &mut V) -> bool
where
    R: Fn(usize, usize, bool) -> u8 + Copy,
    V: FnMut(&[usize]) -> bool,
{
    let mut s1 = inv1.clone();
    let mut s2 = inv2.clone();
    s1.sort_unstable();
    s2.sort_unstable();
    if s1 != s2 {
        return false;
    }
    let mut search =
        Search { n, rel1: rel, rel2: rel, inv1, inv2, perm: vec![0; n], used: vec![false; n], visit };
    search.extend(0)
}

fn triple_key(g: &MixedGraph, v: usize) -> u64 {
    let (i, o, u) = g.degree_triple(v);
    ((i as u64) << 32) | ((o as u64) << 16) | u as u64
}

/// An orientation-preserving isomorphism from `d1` to `d2`, if one exists.
pub fn find_isomorphism(d1: &MixedGraph, d2: &MixedGraph) -> Result<Option<Vec<usize>>> {
    if d1.n() != d2.n() {
        return Err(Error::OrderMismatch(d1.n(), d2.n()));
    }
    let n = d1.n();
    if n > ISO_CAP {
        return Err(Error::CapExceeded { what: "isomorphism search", n, cap: ISO_CAP });
    }
    if d1.edge_count() != d2.edge_count() || d1.arc_count() != d2.arc_count() {
        return Ok(None);
    }
    let inv1 = (0..n).map(|v| triple_key(d1, v)).collect();
    let inv2 = (0..n).map(|v| triple_key(d2, v)).collect();
    let rel = |u: usize, v: usize, first: bool| if first { d1.kind(u, v) as u8 } else { d2.kind(u, v) as u8 };
    let mut found = None;
    for_each_bijection(n, rel, inv1, inv2, &mut |p: &[usize]| {
        found = Some(p.to_vec());
        true
    });
    Ok(found)
}

/// Whether some vertex bijection maps undirected edges to undirected edges and arcs to arcs.
pub fn are_isomorphic(d1: &MixedGraph, d2: &MixedGraph) -> Result<bool> {
    if d1.n() != d2.n() {
        return Ok(false);
    }
    Ok(find_isomorphism(d1, d2)?.is_some())
}

/// Visits isomorphisms between the underlying graphs of `d1` and `d2` (no size cap; callers
/// enforce their own). Stops early when `visit` returns `true`, and reports whether it did.
pub(crate) fn for_each_underlying_isomorphism<V>(d1: &MixedGraph, d2: &MixedGraph, mut visit: V) -> bool
where
    V: FnMut(&[usize]) -> bool,
{
    let n = d1.n();
    if n != d2.n() || d1.edge_count() != d2.edge_count() {
        return false;
    }
    let inv1 = (0..n).map(|v| d1.degree(v) as u64).collect();
    let inv2 = (0..n).map(|v| d2.degree(v) as u64).collect();
    let rel = |u: usize, v: usize, first: bool| {
        if first {
            d1.adjacent(u, v) as u8
        } else {
            d2.adjacent(u, v) as u8
        }
    };
    for_each_bijection(n, rel, inv1, inv2, &mut visit)
}
