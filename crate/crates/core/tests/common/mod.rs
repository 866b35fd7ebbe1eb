#![allow(dead_code)]

use hermspec::spectral::CharPoly;
use hermspec::{gen_family, EdgeKind, Family, MixedGraph};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub const CORPUS_MAX_N: usize = 16;
const RANDOM_GRAPHS: usize = 400;

/// Every family instance with at most 16 vertices, each also with one isolated vertex when it
/// fits, followed by seeded random mixed graphs of every order 1..=16 and every density.
pub fn corpus() -> Vec<(String, MixedGraph)> {
    let mut families = vec![Family::K4Minus, Family::OddTriangle, Family::EvenTriangle];
    for a in 1..=15 {
        for b in a..=16 - a {
            families.push(Family::CompleteBipartite(a, b));
            for c in b..=16usize.saturating_sub(a + b) {
                families.push(Family::C3(a, b, c));
            }
        }
    }
    for k in 1..=16 {
        families.push(Family::Path(k));
        families.push(Family::Complete(k));
        if k >= 3 {
            families.push(Family::Cycle(k));
            families.push(Family::DirectedCycle(k));
        }
        if k < 16 {
            families.push(Family::Star(k));
        }
    }
    let mut out = Vec::new();
    for f in families {
        let g = gen_family(&f).unwrap();
        if g.n() < CORPUS_MAX_N {
            out.push((format!("{f} + K_1"), g.with_isolated(1)));
        }
        out.push((f.to_string(), g));
    }
    let mut rng = StdRng::seed_from_u64(2024);
    for i in 0..RANDOM_GRAPHS {
        let n = 1 + i % CORPUS_MAX_N;
        let density: f64 = rng.gen();
        out.push((format!("random #{i} (n={n}, p={density:.2})"), random_graph(&mut rng, n, density)));
    }
    out
}

pub fn random_graph(rng: &mut StdRng, n: usize, density: f64) -> MixedGraph {
    let mut und = Vec::new();
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                match rng.gen_range(0..3) {
                    0 => und.push((u, v)),
                    1 => arcs.push((u, v)),
                    _ => arcs.push((v, u)),
                }
            }
        }
    }
    MixedGraph::from_edges(n, &und, &arcs).unwrap()
}

pub fn random_kind(rng: &mut StdRng) -> EdgeKind {
    [EdgeKind::Absent, EdgeKind::Undirected, EdgeKind::ArcForward, EdgeKind::ArcBackward][rng.gen_range(0..4)]
}

/// `p(x)` evaluated exactly at the binary value of `x`, then rounded to `f64`.
pub fn eval_exact(p: &CharPoly, x: f64) -> f64 {
    let x = BigRational::from_float(x).expect("finite");
    let mut acc = BigRational::zero();
    for c in p.coeffs().iter().rev() {
        acc = acc * &x + BigRational::from_integer(c.clone());
    }
    let abs = acc.abs();
    let v = abs.numer().to_f64().unwrap_or(f64::INFINITY) / abs.denom().to_f64().unwrap_or(f64::INFINITY);
    if acc < BigRational::from_integer(BigInt::zero()) {
        -v
    } else {
        v
    }
}

/// Complex integer used only by the test oracles.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Cx(pub i128, pub i128);

impl Cx {
    fn mul(self, o: Cx) -> Cx {
        Cx(self.0 * o.0 - self.1 * o.1, self.0 * o.1 + self.1 * o.0)
    }
    fn add(self, o: Cx) -> Cx {
        Cx(self.0 + o.0, self.1 + o.1)
    }
}

fn entry(d: &MixedGraph, u: usize, v: usize) -> Cx {
    match d.kind(u, v) {
        EdgeKind::Absent => Cx(0, 0),
        EdgeKind::Undirected => Cx(1, 0),
        EdgeKind::ArcForward => Cx(0, 1),
        EdgeKind::ArcBackward => Cx(0, -1),
    }
}

/// `det(tI - H(d))` by Laplace expansion along rows, memoized on the set of used columns.
/// Coefficients `c_0..c_n`. Practical for `n <= 12`.
pub fn charpoly_oracle(d: &MixedGraph) -> Vec<i128> {
    let n = d.n();
    assert!(n <= 12);
    // memo[mask] = minor over rows popcount(mask).. and the columns not in mask, as a polynomial
    let mut memo: Vec<Option<Vec<Cx>>> = vec![None; 1 << n];
    fn go(d: &MixedGraph, n: usize, mask: usize, memo: &mut Vec<Option<Vec<Cx>>>) -> Vec<Cx> {
        let row = mask.count_ones() as usize;
        if row == n {
            return vec![Cx(1, 0)];
        }
        if let Some(p) = &memo[mask] {
            return p.clone();
        }
        let mut acc = vec![Cx(0, 0); n - row + 1];
        let mut sign = 1i128;
        for col in 0..n {
            if mask & (1 << col) != 0 {
                continue;
            }
            // entry of tI - H at (row, col): t on the diagonal, -H elsewhere
            let minor = go(d, n, mask | (1 << col), memo);
            let h = entry(d, row, col);
            let neg = Cx(-h.0 * sign, -h.1 * sign);
            for (k, c) in minor.iter().enumerate() {
                acc[k] = acc[k].add(neg.mul(*c));
                if row == col {
                    acc[k + 1] = acc[k + 1].add(Cx(sign, 0).mul(*c));
                }
            }
            sign = -sign;
        }
        memo[mask] = Some(acc.clone());
        acc
    }
    let p = go(d, n, 0, &mut memo);
    p.iter()
        .map(|c| {
            assert_eq!(c.1, 0, "characteristic polynomial of a Hermitian matrix is real");
            c.0
        })
        .collect()
}

pub fn charpoly_as_i128(p: &CharPoly) -> Vec<i128> {
    p.coeffs().iter().map(|c| c.to_i128().expect("fits")).collect()
}

/// Matching polynomial `sum_k (-1)^k m_k t^(n-2k)` of the underlying graph, which equals the
/// characteristic polynomial of every forest.
pub fn matching_polynomial(d: &MixedGraph) -> Vec<i128> {
    let n = d.n();
    let edges: Vec<(usize, usize)> = d.underlying().undirected_edges();
    let mut counts = vec![0i128; n / 2 + 1];
    fn rec(edges: &[(usize, usize)], start: usize, used: u64, k: usize, counts: &mut [i128]) {
        counts[k] += 1;
        for i in start..edges.len() {
            let (u, v) = edges[i];
            if used & (1 << u) == 0 && used & (1 << v) == 0 {
                rec(edges, i + 1, used | (1 << u) | (1 << v), k + 1, counts);
            }
        }
    }
    rec(&edges, 0, 0, 0, &mut counts);
    let mut p = vec![0i128; n + 1];
    for (k, m) in counts.iter().enumerate() {
        p[n - 2 * k] = if k % 2 == 0 { *m } else { -m };
    }
    p
}
