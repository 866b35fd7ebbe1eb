//! Cospectral mates of rank-2 mixed graphs, DHS decisions for them, and the Diophantine
//! constructions behind the families of non-DHS complete bipartite graphs.
//!
//! Two rank-2 mixed graphs of the same order are cospectral iff they have the same number of
//! edges, so every question here reduces to integer arithmetic on part sizes.

use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::structure::{Rank2Form, Rank2Shape};

/// All rank-2 forms with a given edge count and order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MateSet {
    pub edges: usize,
    pub vertices: usize,
    /// Sorted; bipartite forms first.
    pub mates: Vec<Rank2Form>,
}

impl MateSet {
    pub fn contains(&self, f: &Rank2Form) -> bool {
        self.mates.contains(f)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "edges": self.edges,
            "vertices": self.vertices,
            "mates": self.mates.iter().map(Rank2Form::to_json).collect::<Vec<_>>(),
        })
    }
}

/// Every `K_{a,b} + tK_1` and `C3(a,b,c) + tK_1` with `e` edges on `n` vertices.
pub fn mates_rank2(e: usize, n: usize) -> MateSet {
    let mut mates = Vec::new();
    let mut a = 1;
    while a * a <= e {
        if e % a == 0 && a + e / a <= n {
            let b = e / a;
            mates.push(Rank2Form::bipartite(a, b, n - a - b).expect("positive parts"));
        }
        a += 1;
    }
    let mut a = 1;
    while 3 * a * a <= e {
        let mut b = a;
        // c >= b forces ab + (a+b)b <= e
        while a * b + (a + b) * b <= e {
            let rest = e - a * b;
            if rest % (a + b) == 0 {
                let c = rest / (a + b);
                if c >= b && a + b + c <= n {
                    mates.push(Rank2Form::tripartite(a, b, c, n - a - b - c).expect("positive parts"));
                }
            }
            b += 1;
        }
        a += 1;
    }
    mates.sort();
    MateSet { edges: e, vertices: n, mates }
}

/// The tripartite mates of `e` edges on `n` vertices via the factorization
/// `(a+c)(b+c) = e + c^2` with `c` the smallest part: `x = b+c`, `y = a+c`, `2c <= x <= y`,
/// `x + y <= n + c`.
pub fn eq3_filter(e: usize, n: usize) -> Vec<Rank2Form> {
    let mut out = Vec::new();
    let mut c = 1;
    while 3 * c * c <= e {
        let target = e + c * c;
        let mut x = 2 * c;
        while x * x <= target {
            if target % x == 0 {
                let y = target / x;
                if x + y <= n + c {
                    let (a, b) = (y - c, x - c);
                    out.push(Rank2Form::tripartite(a, b, c, n - a - b - c).expect("positive parts"));
                }
            }
            x += 1;
        }
        c += 1;
    }
    out.sort();
    out
}

/// Whether `form` is determined by its Hermitian spectrum, with all of its mates.
pub fn is_dhs_rank2(form: &Rank2Form) -> (bool, MateSet) {
    let set = mates_rank2(form.edges(), form.n());
    debug_assert!(set.contains(form));
    (set.mates.len() == 1, set)
}

/// One row of the table of `K_{n,n}` and its tripartite mates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub n: usize,
    /// Mates other than `K_{n,n}`, in table order (see [`table_order`]).
    pub mates: Vec<Rank2Form>,
}

impl TableRow {
    pub fn dhs(&self) -> bool {
        self.mates.is_empty()
    }

    pub fn graph_label(&self) -> String {
        format!("K_{{{},{}}}", self.n, self.n)
    }

    /// `"DHS"` or the mates, e.g. `"C3(6,3,2) + 1K_1, C3(8,2,2)"`.
    pub fn mates_label(&self) -> String {
        if self.dhs() {
            return "DHS".into();
        }
        self.mates.iter().map(table_label).collect::<Vec<_>>().join(", ")
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "graph": self.graph_label(),
            "dhs": self.dhs(),
            "mates": self.mates.iter().map(Rank2Form::to_json).collect::<Vec<_>>(),
        })
    }
}

/// Label in table style: `K_{a,b}` with `a <= b`, `C3(c,b,a)` with descending parts.
pub fn table_label(f: &Rank2Form) -> String {
    let body = match f.shape {
        Rank2Shape::Bipartite { a, b } => format!("K_{{{a},{b}}}"),
        Rank2Shape::TripartiteCyclic { a, b, c } => format!("C3({c},{b},{a})"),
    };
    if f.t > 0 {
        format!("{body} + {}K_1", f.t)
    } else {
        body
    }
}

/// Sort key: bipartite before tripartite, then descending part sizes compared lexicographically.
pub fn table_order(f: &Rank2Form) -> (bool, Vec<usize>) {
    let mut parts = f.parts();
    parts.reverse();
    (!f.is_bipartite(), parts)
}

/// Rows for `K_{n,n}`, `2 <= n <= n_max`.
pub fn table_knn(n_max: usize) -> Vec<TableRow> {
    (2..=n_max)
        .map(|n| {
            let own = Rank2Form::bipartite(n, n, 0).expect("n >= 2");
            let mut mates: Vec<Rank2Form> =
                mates_rank2(n * n, 2 * n).mates.into_iter().filter(|f| *f != own).collect();
            mates.sort_by_key(table_order);
            TableRow { n, mates }
        })
        .collect()
}

/// The mate `C3(n-t, am/p, bm/p) + tK_1` of `K_{m,n}`, `t = abm/p^2`.
pub fn prop510_mate(m: usize, p: usize, a: usize, b: usize, n: usize) -> Result<Rank2Form> {
    if p == 0 || m % (p * p) != 0 {
        return Err(Error::Precondition(format!("p^2 = {} must divide m = {m}", p * p)));
    }
    if a == 0 || b == 0 || a + b != p {
        return Err(Error::Precondition(format!("a + b = {} must equal p = {p} with a, b >= 1", a + b)));
    }
    let t = a * b * m / (p * p);
    if n <= t {
        return Err(Error::Precondition(format!("n = {n} must exceed abm/p^2 = {t}")));
    }
    let form = Rank2Form::tripartite(n - t, a * m / p, b * m / p, t)?;
    if form.edges() != m * n || form.n() != m + n {
        return Err(Error::Inconsistency(format!("{form} does not have {} edges on {} vertices", m * n, m + n)));
    }
    Ok(form)
}

/// `a^2 = p^2 + q^2 + pq` with `1 <= p <= q < a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct EisensteinSolution {
    pub a: usize,
    pub p: usize,
    pub q: usize,
}

/// All solutions for a given `a`, ordered by `p`.
pub fn eisenstein_solutions(a: usize) -> Vec<EisensteinSolution> {
    let a2 = a * a;
    let mut out = Vec::new();
    let mut p = 1;
    while 3 * p * p <= a2 {
        // q is determined by the quadratic q^2 + pq + p^2 - a^2 = 0
        let disc = 4 * a2 - 3 * p * p;
        let r = disc.isqrt();
        if r * r == disc && r > p && (r - p) % 2 == 0 {
            let q = (r - p) / 2;
            if q >= p && q < a {
                out.push(EisensteinSolution { a, p, q });
            }
        }
        p += 1;
    }
    out
}

/// Prime factors with multiplicity, by trial division.
pub fn prime_factors(mut a: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= a {
        while a % d == 0 {
            out.push(d);
            a /= d;
        }
        d += 1;
    }
    if a > 1 {
        out.push(a);
    }
    out
}

/// Decision for `C3(n-a, n, n+a)` from both deciders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cor513 {
    pub n: usize,
    pub a: usize,
    pub dhs: bool,
    pub solutions: Vec<EisensteinSolution>,
    /// The mate built from the first solution, if any.
    pub mate: Option<Rank2Form>,
}

impl Cor513 {
    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "a": self.a,
            "form": Rank2Form::tripartite(self.n - self.a, self.n, self.n + self.a, 0).map(|f| f.to_json()).ok(),
            "dhs": self.dhs,
            "solutions": self.solutions.iter().map(|s| json!([s.p, s.q])).collect::<Vec<_>>(),
            "mate": self.mate.map(|m| m.to_json()),
        })
    }
}

/// Decider A: no integer triangle with a 120 degree angle opposite a side of length `a`.
pub fn cor513_diophantine(a: usize) -> bool {
    eisenstein_solutions(a).is_empty()
}

/// Decider B: no prime factor of `a` is congruent to 1 modulo 6.
pub fn cor513_prime(a: usize) -> bool {
    prime_factors(a).iter().all(|p| p % 6 != 1)
}

fn both_deciders(a: usize) -> Result<bool> {
    let (x, y) = (cor513_diophantine(a), cor513_prime(a));
    if x != y {
        return Err(Error::Inconsistency(format!("deciders disagree for a = {a}: diophantine {x}, prime {y}")));
    }
    Ok(x)
}

/// The mate `C3(n-p-q, n+p, n+q)` (bipartite if `n = p + q`).
pub fn cor513_mate(n: usize, s: &EisensteinSolution) -> Result<Rank2Form> {
    let first = n
        .checked_sub(s.p + s.q)
        .ok_or_else(|| Error::Precondition(format!("n = {n} is smaller than p + q = {}", s.p + s.q)))?;
    if first == 0 {
        Rank2Form::bipartite(n + s.p, n + s.q, 0)
    } else {
        Rank2Form::tripartite(first, n + s.p, n + s.q, 0)
    }
}

/// Whether `C3(n-a, n, n+a)` is DHS, for `0 < a < n` and `a^2 < 2n`.
pub fn cor513_is_dhs(n: usize, a: usize) -> Result<Cor513> {
    if a == 0 || a >= n || a * a >= 2 * n {
        return Err(Error::Precondition(format!("need 0 < a < n and a^2 < 2n, got n = {n}, a = {a}")));
    }
    let dhs = both_deciders(a)?;
    let solutions = eisenstein_solutions(a);
    let mate = solutions.first().map(|s| cor513_mate(n, s)).transpose()?;
    if let Some(m) = mate {
        if m.edges() != 3 * n * n - a * a || m.n() != 3 * n {
            return Err(Error::Inconsistency(format!("mate {m} of C3({},{n},{}) is not cospectral", n - a, n + a)));
        }
    }
    Ok(Cor513 { n, a, dhs, solutions, mate })
}

/// Decider agreement for every `1 <= a <= a_max`, returning `(a, dhs)` pairs.
pub fn cor513_sweep(a_max: usize) -> Result<Vec<(usize, bool)>> {
    (1..=a_max).map(|a| both_deciders(a).map(|d| (a, d))).collect()
}

/// Every `n` in `2..=limit` for which `K_{n,n}` is not DHS, with one mate each.
pub fn prop59_witnesses(limit: usize) -> Vec<(usize, Rank2Form)> {
    table_knn(limit).into_iter().filter_map(|r| r.mates.first().map(|m| (r.n, *m))).collect()
}

impl fmt::Display for EisensteinSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^2 = {}^2 + {}^2 + {}*{}", self.a, self.p, self.q, self.p, self.q)
    }
}
