//! Named graph families.
//!
//! Vertex numbering: multipartite families place their parts in consecutive index blocks in
//! the order the sizes are given (for `C3(a,b,c)`: `A = 0..a`, `B = a..a+b`, `C = a+b..a+b+c`).
//! Paths and cycles run `0 - 1 - ... - (k-1)`; stars have centre `0`.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{EdgeKind, MixedGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `K_{a,b}`.
    CompleteBipartite(usize, usize),
    /// Complete tripartite mixed graph with arcs `A -> B -> C -> A`.
    C3(usize, usize, usize),
    /// Path on `k` vertices.
    Path(usize),
    /// Undirected cycle on `k >= 3` vertices.
    Cycle(usize),
    /// Directed cycle `0 -> 1 -> ... -> (k-1) -> 0`, `k >= 3`.
    DirectedCycle(usize),
    /// `K_{1,k}` with centre `0`.
    Star(usize),
    /// `K_4` with the edge `{2,3}` removed.
    K4Minus,
    /// `K_k`.
    Complete(usize),
    /// Triangle with one arc `0 -> 1`.
    OddTriangle,
    /// Triangle with arcs `0 -> 1`, `1 -> 2` and the undirected edge `{2,0}`.
    EvenTriangle,
}

impl Family {
    /// Names accepted by [`Family::from_args`].
    pub const NAMES: [&'static str; 10] = [
        "complete_bipartite",
        "c3",
        "path",
        "cycle",
        "directed_cycle",
        "star",
        "k4_minus",
        "complete",
        "odd_triangle",
        "even_triangle",
    ];

    /// Parses a family name and its size parameters, e.g. `("c3", [2, 2, 2])`.
    pub fn from_args(name: &str, params: &[usize]) -> Result<Family> {
        let arity = |k: usize| {
            if params.len() == k {
                Ok(())
            } else {
                Err(Error::InvalidFamily(format!("{name} takes {k} parameters, got {}", params.len())))
            }
        };
        let family = match name.to_ascii_lowercase().replace('-', "_").as_str() {
            "complete_bipartite" | "kab" => {
                arity(2)?;
                Family::CompleteBipartite(params[0], params[1])
            }
            "c3" => {
                arity(3)?;
                Family::C3(params[0], params[1], params[2])
            }
            "path" => {
                arity(1)?;
                Family::Path(params[0])
            }
            "cycle" => {
                arity(1)?;
                Family::Cycle(params[0])
            }
            "directed_cycle" => {
                arity(1)?;
                Family::DirectedCycle(params[0])
            }
            "star" => {
                arity(1)?;
                Family::Star(params[0])
            }
            "complete" => {
                arity(1)?;
                Family::Complete(params[0])
            }
            "k4_minus" => {
                arity(0)?;
                Family::K4Minus
            }
            "odd_triangle" => {
                arity(0)?;
                Family::OddTriangle
            }
            "even_triangle" => {
                arity(0)?;
                Family::EvenTriangle
            }
            other => {
                return Err(Error::InvalidFamily(format!(
                    "unknown family {other:?}; expected one of {}",
                    Family::NAMES.join(", ")
                )))
            }
        };
        Ok(family)
    }

    pub fn generate(&self) -> Result<MixedGraph> {
        gen_family(self)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::CompleteBipartite(a, b) => write!(f, "K_{{{a},{b}}}"),
            Family::C3(a, b, c) => write!(f, "C3({a},{b},{c})"),
            Family::Path(k) => write!(f, "P_{k}"),
            Family::Cycle(k) => write!(f, "C_{k}"),
            Family::DirectedCycle(k) => write!(f, "directed C_{k}"),
            Family::Star(k) => write!(f, "K_{{1,{k}}}"),
            Family::K4Minus => f.write_str("K_4^-"),
            Family::Complete(k) => write!(f, "K_{k}"),
            Family::OddTriangle => f.write_str("odd triangle"),
            Family::EvenTriangle => f.write_str("even triangle"),
        }
    }
}

fn positive(name: &str, values: &[usize]) -> Result<()> {
    if values.iter().any(|&v| v == 0) {
        return Err(Error::InvalidFamily(format!("{name}: sizes must be at least 1, got {values:?}")));
    }
    Ok(())
}

/// Generates the named graph.
pub fn gen_family(family: &Family) -> Result<MixedGraph> {
    let g = match *family {
        Family::CompleteBipartite(a, b) => {
            positive("complete_bipartite", &[a, b])?;
            let mut g = MixedGraph::empty(a + b);
            for u in 0..a {
                for v in a..a + b {
                    g.set_kind(u, v, EdgeKind::Undirected);
                }
            }
            g
        }
        Family::C3(a, b, c) => {
            positive("c3", &[a, b, c])?;
            let mut g = MixedGraph::empty(a + b + c);
            let (pa, pb, pc) = (0..a, a..a + b, a + b..a + b + c);
            for (from, to) in [(pa.clone(), pb.clone()), (pb, pc.clone()), (pc, pa)] {
                for u in from.clone() {
                    for v in to.clone() {
                        g.set_kind(u, v, EdgeKind::ArcForward);
                    }
                }
            }
            g
        }
        Family::Path(k) => {
            positive("path", &[k])?;
            let mut g = MixedGraph::empty(k);
            for v in 1..k {
                g.set_kind(v - 1, v, EdgeKind::Undirected);
            }
            g
        }
        Family::Cycle(k) | Family::DirectedCycle(k) => {
            if k < 3 {
                return Err(Error::InvalidFamily(format!("cycle: need k >= 3, got {k}")));
            }
            let kind = if matches!(family, Family::Cycle(_)) { EdgeKind::Undirected } else { EdgeKind::ArcForward };
            let mut g = MixedGraph::empty(k);
            for v in 0..k {
                g.set_kind(v, (v + 1) % k, kind);
            }
            g
        }
        Family::Star(k) => {
            positive("star", &[k])?;
            let mut g = MixedGraph::empty(k + 1);
            for v in 1..=k {
                g.set_kind(0, v, EdgeKind::Undirected);
            }
            g
        }
        Family::K4Minus => {
            let mut g = gen_family(&Family::Complete(4))?;
            g.set_kind(2, 3, EdgeKind::Absent);
            g
        }
        Family::Complete(k) => {
            positive("complete", &[k])?;
            let mut g = MixedGraph::empty(k);
            for u in 0..k {
                for v in u + 1..k {
                    g.set_kind(u, v, EdgeKind::Undirected);
                }
            }
            g
        }
        Family::OddTriangle => MixedGraph::from_edges(3, &[(1, 2), (0, 2)], &[(0, 1)])?,
        Family::EvenTriangle => MixedGraph::from_edges(3, &[(0, 2)], &[(0, 1), (1, 2)])?,
    };
    Ok(g)
}
