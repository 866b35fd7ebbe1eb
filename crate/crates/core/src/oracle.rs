//! Brute-force enumeration of all mixed graphs of small order, the census of their exact
//! characteristic polynomials, and exhaustive or sampled checks of the main theorems.
//!
//! Graph codes use two bits per pair `u < v`, in the order `(0,1), (0,2), ..., (n-2,n-1)`,
//! lowest bits first: `0` absent, `1` undirected, `2` arc `u -> v`, `3` arc `v -> u`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::{EdgeKind, MixedGraph};
use crate::spectral::{
    are_antispectral, char_poly, char_poly_of, hermitian_matrix, spectrum_of, CharPoly, EIGEN_TOL,
};
use crate::structure::{antispectral_partition, classify_rank2, cospectral_partition, has_induced_p4};
use crate::switching::{apply_four_way, are_switching_equivalent, transform_entrywise, Gauge, GaugePartition};

/// Default enumeration cap on the order.
pub const DEFAULT_MAX_N: usize = 5;
/// Largest order whose codes fit in a `u64`.
pub const ENCODING_MAX_N: usize = 8;
/// Environment variable overriding [`DEFAULT_MAX_N`].
pub const MAX_N_ENV: &str = "HERMSPEC_MAX_N";

const SAMPLE_SEED: u64 = 0x5eed_3a4b;
const THM33_SAMPLES: usize = 1000;
const THM33_MAX_N: usize = 8;
const THM34_FORESTS: usize = 200;
const THM34_ORIENTATIONS: usize = 50;
const THM34_MAX_N: usize = 10;

/// The configured enumeration cap (`HERMSPEC_MAX_N`, else 5), clamped to [`ENCODING_MAX_N`].
pub fn enumeration_cap() -> usize {
    std::env::var(MAX_N_ENV)
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .map_or(DEFAULT_MAX_N, |c| c.min(ENCODING_MAX_N))
}

fn check_cap(what: &'static str, n: usize) -> Result<()> {
    let cap = enumeration_cap();
    if n > cap {
        return Err(Error::CapExceeded { what, n, cap });
    }
    if n > DEFAULT_MAX_N {
        eprintln!("warning: {what} over all {} graphs on {n} vertices; this can take hours", graph_count(n));
    }
    Ok(())
}

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// `4^(n(n-1)/2)`.
pub fn graph_count(n: usize) -> u64 {
    assert!(n <= ENCODING_MAX_N, "codes for n > {ENCODING_MAX_N} do not fit in u64");
    1u64 << (2 * pair_count(n))
}

/// The graph with the given code. Panics if `n > 8`.
pub fn decode(n: usize, code: u64) -> MixedGraph {
    assert!(n <= ENCODING_MAX_N, "codes for n > {ENCODING_MAX_N} do not fit in u64");
    let mut d = MixedGraph::empty(n);
    let mut bits = code;
    for u in 0..n {
        for v in u + 1..n {
            let kind = match bits & 3 {
                0 => EdgeKind::Absent,
                1 => EdgeKind::Undirected,
                2 => EdgeKind::ArcForward,
                _ => EdgeKind::ArcBackward,
            };
            d.set_kind(u, v, kind);
            bits >>= 2;
        }
    }
    d
}

/// Inverse of [`decode`].
pub fn encode(d: &MixedGraph) -> Result<u64> {
    let n = d.n();
    if n > ENCODING_MAX_N {
        return Err(Error::CapExceeded { what: "graph encoding", n, cap: ENCODING_MAX_N });
    }
    let mut code = 0u64;
    let mut shift = 0;
    for u in 0..n {
        for v in u + 1..n {
            let state = match d.kind(u, v) {
                EdgeKind::Absent => 0,
                EdgeKind::Undirected => 1,
                EdgeKind::ArcForward => 2,
                EdgeKind::ArcBackward => 3,
            };
            code |= state << shift;
            shift += 2;
        }
    }
    Ok(code)
}

/// Every labeled mixed graph on `n` vertices, in code order.
pub fn all_mixed_graphs(n: usize) -> Result<impl Iterator<Item = MixedGraph>> {
    check_cap("enumeration", n)?;
    Ok((0..graph_count(n)).map(move |code| decode(n, code)))
}

/// Labeled mixed graphs on `n` vertices bucketed by exact characteristic polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    pub n: usize,
    /// Member codes of every class, sorted.
    pub classes: BTreeMap<CharPoly, Vec<u64>>,
}

impl Census {
    pub fn total(&self) -> u64 {
        self.classes.values().map(|c| c.len() as u64).sum()
    }

    pub fn class_of(&self, p: &CharPoly) -> &[u64] {
        self.classes.get(p).map_or(&[], Vec::as_slice)
    }

    /// One JSON object per line, `{"charpoly": [...], "size": k, "members": [...]}`, ordered by
    /// characteristic polynomial.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for (p, members) in &self.classes {
            let line = json!({"charpoly": p.to_json(), "size": members.len(), "members": members});
            out.push_str(&line.to_string());
            out.push('\n');
        }
        out
    }
}

/// Builds the census in parallel; the result does not depend on the worker count.
pub fn build_census(n: usize) -> Result<Census> {
    check_cap("census", n)?;
    let buckets = (0..graph_count(n))
        .into_par_iter()
        .fold(HashMap::<CharPoly, Vec<u64>>::new, |mut acc, code| {
            acc.entry(char_poly_of(&decode(n, code))).or_default().push(code);
            acc
        })
        .reduce(HashMap::new, |mut a, b| {
            for (k, mut v) in b {
                a.entry(k).or_default().append(&mut v);
            }
            a
        });
    let classes = buckets
        .into_iter()
        .map(|(k, mut v)| {
            v.sort_unstable();
            (k, v)
        })
        .collect();
    Ok(Census { n, classes })
}

/// Outcome of a brute-force DHS check.
#[derive(Debug, Clone)]
pub struct DhsBruteforce {
    pub dhs: bool,
    /// Labeled graphs cospectral with the input, the input's labeling included.
    pub cospectral: usize,
    /// Cospectral graphs not switching equivalent to the input up to isomorphism.
    pub mates: Vec<MixedGraph>,
}

/// Checks every labeled graph cospectral with `d` for switching equivalence up to isomorphism.
pub fn dhs_bruteforce(d: &MixedGraph) -> Result<DhsBruteforce> {
    let n = d.n();
    check_cap("DHS brute force", n)?;
    let target = char_poly_of(d);
    let cospectral: Vec<u64> =
        (0..graph_count(n)).into_par_iter().filter(|&code| char_poly_of(&decode(n, code)) == target).collect();
    let outcomes: Vec<Result<Option<MixedGraph>>> = cospectral
        .par_iter()
        .map(|&code| {
            let other = decode(n, code);
            Ok(are_switching_equivalent(d, &other, true)?.is_none().then_some(other))
        })
        .collect();
    let mut mates = Vec::new();
    for o in outcomes {
        mates.extend(o?);
    }
    Ok(DhsBruteforce { dhs: mates.is_empty(), cospectral: cospectral.len(), mates })
}

/// Whether every graph cospectral with `d` is switching equivalent to it up to isomorphism.
pub fn verify_dhs_bruteforce(d: &MixedGraph) -> Result<bool> {
    Ok(dhs_bruteforce(d)?.dhs)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theorem {
    /// Switching preserves the spectrum.
    Thm33,
    /// Every orientation of a forest is cospectral with it.
    Thm34,
    /// Cospectrality with the underlying graph.
    Thm41,
    /// Antispectrality with the underlying graph.
    Thm42,
    /// Classification of rank 2.
    Thm58,
}

impl Theorem {
    pub const ALL: [Theorem; 5] = [Theorem::Thm33, Theorem::Thm34, Theorem::Thm41, Theorem::Thm42, Theorem::Thm58];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::Thm33 => "thm33",
            Theorem::Thm34 => "thm34",
            Theorem::Thm41 => "thm41",
            Theorem::Thm42 => "thm42",
            Theorem::Thm58 => "thm58",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theorem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown theorem {s:?}; expected thm33, thm34, thm41, thm42 or thm58")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub theorem: Theorem,
    pub n: usize,
    /// Number of graphs (or graph/gauge pairs) examined.
    pub checked: u64,
    /// Descriptions of failing cases; graph codes for exhaustive sweeps.
    pub counterexamples: Vec<String>,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "theorem": self.theorem.name(),
            "n": self.n,
            "checked": self.checked,
            "passed": self.passed(),
            "counterexamples": self.counterexamples,
        })
    }
}

/// Runs the check for `theorem`: exhaustive over every graph of order `n` for thm41, thm42
/// and thm58; sampled with orders up to `n` for thm33 and thm34.
pub fn verify_theorem(theorem: Theorem, n: usize) -> Result<TheoremReport> {
    let (checked, counterexamples) = match theorem {
        Theorem::Thm41 => exhaustive(n, check_thm41)?,
        Theorem::Thm42 => exhaustive(n, check_thm42)?,
        Theorem::Thm58 => exhaustive(n, check_thm58)?,
        Theorem::Thm33 => {
            if n > THM33_MAX_N {
                return Err(Error::CapExceeded { what: "thm33 sampling", n, cap: THM33_MAX_N });
            }
            sample_thm33(n)
        }
        Theorem::Thm34 => {
            if n > THM34_MAX_N {
                return Err(Error::CapExceeded { what: "thm34 sampling", n, cap: THM34_MAX_N });
            }
            sample_thm34(n)
        }
    };
    Ok(TheoremReport { theorem, n, checked, counterexamples })
}

fn exhaustive<F>(n: usize, check: F) -> Result<(u64, Vec<String>)>
where
    F: Fn(&MixedGraph) -> Option<String> + Sync,
{
    check_cap("exhaustive sweep", n)?;
    let count = graph_count(n);
    let bad: Vec<String> = (0..count)
        .into_par_iter()
        .filter_map(|code| check(&decode(n, code)).map(|why| format!("{code}: {why}")))
        .collect();
    Ok((count, bad))
}

/// Per-component spectra of `d` and `G(d)`, as (largest, smallest) pairs.
fn component_extremes(d: &MixedGraph) -> Vec<((f64, f64), (f64, f64))> {
    let g = d.underlying();
    d.components()
        .iter()
        .map(|c| {
            let sd = spectrum_of(&d.induced(c));
            let sg = spectrum_of(&g.induced(c));
            (
                (sd.largest().unwrap_or(0.0), sd.smallest().unwrap_or(0.0)),
                (sg.largest().unwrap_or(0.0), sg.smallest().unwrap_or(0.0)),
            )
        })
        .collect()
}

fn disagreement(labels: &[&str], values: &[bool]) -> Option<String> {
    if values.iter().all(|&v| v == values[0]) {
        return None;
    }
    let parts: Vec<String> = labels.iter().zip(values).map(|(l, v)| format!("{l}={v}")).collect();
    Some(parts.join(" "))
}

fn check_thm41(d: &MixedGraph) -> Option<String> {
    let g = d.underlying();
    let a = char_poly_of(d) == char_poly_of(&g);
    let b = component_extremes(d).iter().all(|((ld, _), (lg, _))| (ld - lg).abs() <= EIGEN_TOL);
    let c = cospectral_partition(d).is_some();
    let e = match are_switching_equivalent(d, &g, false) {
        Ok(w) => w.is_some(),
        Err(err) => return Some(err.to_string()),
    };
    disagreement(&["a", "b", "c", "d"], &[a, b, c, e])
}

fn check_thm42(d: &MixedGraph) -> Option<String> {
    let a = are_antispectral(d, &d.underlying());
    let b = component_extremes(d).iter().all(|((_, sd), (lg, _))| (lg + sd).abs() <= EIGEN_TOL);
    let c = antispectral_partition(d).is_some();
    disagreement(&["a", "b", "c"], &[a, b, c])
}

fn check_thm58(d: &MixedGraph) -> Option<String> {
    let rank = crate::spectral::rank_of(d);
    let class = match classify_rank2(d) {
        Ok(c) => c,
        Err(e) => return Some(e.to_string()),
    };
    match (rank, class.form()) {
        (2, Some(form)) => {
            if form.n() != d.n() || form.edges() != d.edge_count() {
                return Some(format!("form {form} does not match n and e"));
            }
            if char_poly_of(&form.realize()) != char_poly_of(d) {
                return Some(format!("form {form} is not cospectral"));
            }
            if has_induced_p4(d) {
                return Some("rank 2 with an induced P4".into());
            }
            None
        }
        (2, None) => Some("rank 2 but not classified".into()),
        (r, Some(form)) => Some(format!("rank {r} classified as {form}")),
        (_, None) => None,
    }
}

/// An edge kind for which the switched entry is not `-1`, uniformly among the admissible ones
/// (absent included).
fn admissible_kind(rng: &mut StdRng, gu: Gauge, gv: Gauge) -> EdgeKind {
    let kinds: Vec<EdgeKind> = [EdgeKind::Absent, EdgeKind::Undirected, EdgeKind::ArcForward, EdgeKind::ArcBackward]
        .into_iter()
        .filter(|k| k.phase().is_none_or(|h| (h + gv.exponent() + 4 - gu.exponent()) % 4 != 2))
        .collect();
    *kinds.choose(rng).expect("absent is always admissible")
}

fn random_gauge(rng: &mut StdRng, n: usize) -> GaugePartition {
    GaugePartition::new((0..n).map(|_| Gauge::from_exponent(rng.gen_range(0..4))).collect())
}

fn thm33_case(d: &MixedGraph, g: &GaugePartition) -> Option<String> {
    let p = char_poly_of(d);
    if char_poly(&transform_entrywise(d, g)) != p {
        return Some(format!("similarity changed the spectrum: {d:?} gauge {g}"));
    }
    match apply_four_way(d, g) {
        Ok(s) if char_poly_of(&s) == p => None,
        Ok(_) => Some(format!("switching changed the spectrum: {d:?} gauge {g}")),
        Err(e) => Some(format!("sampled admissible gauge rejected: {e}")),
    }
}

fn sample_thm33(max_n: usize) -> (u64, Vec<String>) {
    let mut rng = StdRng::seed_from_u64(SAMPLE_SEED);
    let mut bad = Vec::new();
    let mut checked = 0;
    for _ in 0..THM33_SAMPLES {
        let n = rng.gen_range(1..=max_n.max(1));
        let g = random_gauge(&mut rng, n);
        let mut d = MixedGraph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                let k = admissible_kind(&mut rng, g.get(u), g.get(v));
                d.set_kind(u, v, k);
            }
        }
        checked += 1;
        bad.extend(thm33_case(&d, &g));
    }
    // Exhaustive part: every graph of order at most min(n, 3) with every gauge.
    for n in 1..=max_n.min(3) {
        for code in 0..graph_count(n) {
            let d = decode(n, code);
            for gcode in 0..4u64.pow(n as u32) {
                let g = GaugePartition::new(
                    (0..n).map(|v| Gauge::from_exponent(((gcode >> (2 * v)) & 3) as u8)).collect(),
                );
                checked += 1;
                if crate::switching::is_admissible(&d, &g) {
                    bad.extend(thm33_case(&d, &g).map(|w| format!("{code}: {w}")));
                } else if char_poly(&transform_entrywise(&d, &g)) != char_poly_of(&d) {
                    bad.push(format!("{code}: similarity changed the spectrum with gauge {g}"));
                }
            }
        }
    }
    (checked, bad)
}

/// A random forest: each vertex after the first attaches to a random earlier vertex with
/// probability 3/4, then the labels are shuffled.
pub fn random_forest(rng: &mut StdRng, n: usize) -> MixedGraph {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut f = MixedGraph::empty(n);
    for v in 1..n {
        if rng.gen_bool(0.75) {
            let u = rng.gen_range(0..v);
            f.set_kind(perm[u], perm[v], EdgeKind::Undirected);
        }
    }
    f
}

/// `g` with every edge independently made undirected or given one of its two orientations.
pub fn random_orientation(rng: &mut StdRng, g: &MixedGraph) -> MixedGraph {
    let mut d = g.clone();
    for (u, v) in g.underlying().undirected_edges() {
        let k = [EdgeKind::Undirected, EdgeKind::ArcForward, EdgeKind::ArcBackward][rng.gen_range(0..3)];
        d.set_kind(u, v, k);
    }
    d
}

fn sample_thm34(max_n: usize) -> (u64, Vec<String>) {
    let mut rng = StdRng::seed_from_u64(SAMPLE_SEED ^ 34);
    let mut bad = Vec::new();
    let mut checked = 0;
    for _ in 0..THM34_FORESTS {
        let n = rng.gen_range(1..=max_n.max(1));
        let forest = random_forest(&mut rng, n);
        let p = char_poly(&hermitian_matrix(&forest));
        for _ in 0..THM34_ORIENTATIONS {
            let d = random_orientation(&mut rng, &forest);
            checked += 1;
            if char_poly_of(&d) != p {
                bad.push(format!("{d:?}"));
            }
        }
    }
    (checked, bad)
}
