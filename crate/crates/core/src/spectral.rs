//! Hermitian adjacency matrices, exact characteristic polynomials and ranks, and floating-point
//! spectra.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::gaussian::{ExactInt, Gaussian, GaussianInt};
use crate::graph::{EdgeKind, MixedGraph};

/// Tolerance for comparing floating eigenvalues.
pub const EIGEN_TOL: f64 = 1e-8;

/// Jacobi sweeps stop once the off-diagonal Frobenius norm drops below this.
pub const JACOBI_TOL: f64 = 1e-12;

const JACOBI_MAX_SWEEPS: usize = 100;

/// Square Hermitian matrix over the Gaussian integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HermitianMatrix {
    n: usize,
    entries: Vec<Gaussian<i64>>,
}

impl HermitianMatrix {
    /// Builds a matrix from row-major entries; `None` unless square and Hermitian.
    pub fn from_entries(n: usize, entries: Vec<Gaussian<i64>>) -> Option<Self> {
        if entries.len() != n * n {
            return None;
        }
        let m = HermitianMatrix { n, entries };
        for u in 0..n {
            for v in 0..n {
                let (a, b) = (m.get(u, v), m.get(v, u));
                if a.re != b.re || a.im != -b.im {
                    return None;
                }
            }
        }
        Some(m)
    }

    pub fn zero(n: usize) -> Self {
        HermitianMatrix { n, entries: vec![Gaussian { re: 0, im: 0 }; n * n] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> Gaussian<i64> {
        self.entries[u * self.n + v].clone()
    }

    pub(crate) fn set_pair(&mut self, u: usize, v: usize, value: Gaussian<i64>) {
        self.entries[v * self.n + u] = Gaussian { re: value.re, im: -value.im };
        self.entries[u * self.n + v] = value;
    }

    /// All entries lie in `{0, 1, i, -i}` and the diagonal is zero.
    pub fn is_adjacency_valid(&self) -> bool {
        (0..self.n).all(|u| {
            (0..self.n).all(|v| {
                let e = self.get(u, v);
                matches!((e.re, e.im), (0, 0) | (1, 0) | (0, 1) | (0, -1)) && (u != v || (e.re, e.im) == (0, 0))
            })
        })
    }

    /// The mixed graph with this Hermitian adjacency matrix, if the matrix is adjacency-valid.
    pub fn to_mixed_graph(&self) -> Option<MixedGraph> {
        if !self.is_adjacency_valid() {
            return None;
        }
        let mut g = MixedGraph::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                let e = self.get(u, v);
                let kind = match (e.re, e.im) {
                    (1, 0) => EdgeKind::Undirected,
                    (0, 1) => EdgeKind::ArcForward,
                    (0, -1) => EdgeKind::ArcBackward,
                    _ => continue,
                };
                g.set_kind(u, v, kind);
            }
        }
        Some(g)
    }

    pub fn negated(&self) -> Self {
        let entries = self.entries.iter().map(|e| Gaussian { re: -e.re, im: -e.im }).collect();
        HermitianMatrix { n: self.n, entries }
    }

    fn lifted<T: ExactInt>(&self) -> Vec<Gaussian<T>> {
        self.entries.iter().map(|e| e.lift()).collect()
    }

    /// Entries as arbitrary-precision Gaussian integers, row-major.
    pub fn to_gaussian_ints(&self) -> Vec<GaussianInt> {
        self.lifted()
    }
}

impl fmt::Debug for HermitianMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "HermitianMatrix({})", self.n)?;
        for u in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|v| self.get(u, v).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// `H(D)`: `1` for undirected edges, `i` for arcs `u -> v`, `-i` for arcs `v -> u`.
pub fn hermitian_matrix(d: &MixedGraph) -> HermitianMatrix {
    let n = d.n();
    let mut m = HermitianMatrix::zero(n);
    for u in 0..n {
        for v in 0..n {
            if let Some(p) = d.kind(u, v).phase() {
                m.entries[u * n + v] = match p {
                    0 => Gaussian { re: 1, im: 0 },
                    1 => Gaussian { re: 0, im: 1 },
                    _ => Gaussian { re: 0, im: -1 },
                };
            }
        }
    }
    m
}

/// Monic characteristic polynomial `det(tI - H)` with coefficients `c_0, ..., c_n` (`c_n = 1`).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CharPoly {
    coeffs: Vec<BigInt>,
}

impl CharPoly {
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(coeffs.last().is_some_and(One::is_one), "characteristic polynomials are monic");
        CharPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        CharPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `c_0, ..., c_n`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Multiplicity of `0` as a root.
    pub fn zero_multiplicity(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// `(-1)^n p(-t)`, the characteristic polynomial of `-H`.
    pub fn negated_argument(&self) -> CharPoly {
        let n = self.degree();
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if (n - k) % 2 == 1 { -c } else { c.clone() })
            .collect();
        CharPoly { coeffs }
    }

    /// Horner evaluation in floating point.
    pub fn eval(&self, t: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * t + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Coefficients for JSON: numbers within the 53-bit safe range, decimal strings beyond it.
    pub fn to_json(&self) -> Value {
        let limit = BigInt::from(1i64 << 53);
        Value::Array(
            self.coeffs
                .iter()
                .map(|c| match c.to_i64() {
                    Some(v) if c.abs() <= limit => json!(v),
                    _ => json!(c.to_string()),
                })
                .collect(),
        )
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut first = true;
        for k in (0..=n).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let show_mag = !mag.is_one() || k == 0;
            match (show_mag, k) {
                (true, 0) => write!(f, "{mag}")?,
                (true, 1) => write!(f, "{mag}t")?,
                (true, _) => write!(f, "{mag}t^{k}")?,
                (false, 1) => f.write_str("t")?,
                (false, _) => write!(f, "t^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CharPoly({self})")
    }
}

fn faddeev_leverrier<T: ExactInt>(h: &HermitianMatrix) -> Option<Vec<T>> {
    let n = h.n;
    let a: Vec<Gaussian<T>> = h.lifted();
    let mut coeffs = vec![T::from_i64(0); n + 1];
    coeffs[n] = T::from_i64(1);
    // m holds M_k; M_1 = I.
    let mut m: Vec<Gaussian<T>> = vec![Gaussian::zero(); n * n];
    for i in 0..n {
        m[i * n + i] = Gaussian::one();
    }
    let mut am = vec![Gaussian::<T>::zero(); n * n];
    for k in 1..=n {
        // am = A * M_k
        for i in 0..n {
            for j in 0..n {
                let mut acc = Gaussian::zero();
                for l in 0..n {
                    let x = &a[i * n + l];
                    if x.is_zero() {
                        continue;
                    }
                    acc = acc.checked_add(&x.checked_mul(&m[l * n + j])?)?;
                }
                am[i * n + j] = acc;
            }
        }
        let mut trace = Gaussian::zero();
        for i in 0..n {
            trace = trace.checked_add(&am[i * n + i])?;
        }
        let c = trace
            .checked_neg()?
            .checked_div_exact(&Gaussian::from_parts(k as i64, 0))
            .expect("Faddeev-LeVerrier trace is divisible by k");
        assert!(c.is_real(), "characteristic polynomial of a Hermitian matrix is real");
        coeffs[n - k] = c.re.clone();
        if k < n {
            // M_{k+1} = A M_k + c_{n-k} I
            std::mem::swap(&mut m, &mut am);
            for i in 0..n {
                let d = &m[i * n + i];
                m[i * n + i] = Gaussian::new(d.re.checked_add(&c.re)?, d.im.clone());
            }
        }
    }
    Some(coeffs)
}

/// Exact characteristic polynomial by the Faddeev-LeVerrier recurrence over `Z[i]`.
pub fn char_poly(h: &HermitianMatrix) -> CharPoly {
    let coeffs = match faddeev_leverrier::<i128>(h) {
        Some(c) => c.iter().map(|x| BigInt::from(*x)).collect(),
        None => faddeev_leverrier::<BigInt>(h).expect("bigint arithmetic does not overflow"),
    };
    CharPoly { coeffs }
}

pub fn char_poly_of(d: &MixedGraph) -> CharPoly {
    char_poly(&hermitian_matrix(d))
}

fn bareiss_rank<T: ExactInt>(h: &HermitianMatrix) -> Option<usize> {
    let n = h.n;
    let mut a: Vec<Gaussian<T>> = h.lifted();
    let mut prev = Gaussian::<T>::one();
    let mut rank = 0;
    for col in 0..n {
        if rank == n {
            break;
        }
        let Some(p) = (rank..n).find(|&r| !a[r * n + col].is_zero()) else {
            continue;
        };
        if p != rank {
            for j in 0..n {
                a.swap(p * n + j, rank * n + j);
            }
        }
        let pivot = a[rank * n + col].clone();
        for i in rank + 1..n {
            let factor = a[i * n + col].clone();
            for j in col + 1..n {
                let x = pivot.checked_mul(&a[i * n + j])?.checked_sub(&factor.checked_mul(&a[rank * n + j])?)?;
                a[i * n + j] = x.checked_div_exact(&prev).expect("Bareiss step divides exactly");
            }
            a[i * n + col] = Gaussian::zero();
        }
        prev = pivot;
        rank += 1;
    }
    Some(rank)
}

/// Exact rank over `C` by fraction-free (Bareiss) elimination over `Z[i]`.
pub fn rank_exact(h: &HermitianMatrix) -> usize {
    bareiss_rank::<i128>(h).unwrap_or_else(|| bareiss_rank::<BigInt>(h).expect("bigint arithmetic does not overflow"))
}

pub fn rank_of(d: &MixedGraph) -> usize {
    rank_exact(&hermitian_matrix(d))
}

/// Eigenvalues sorted in descending order.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
}

impl Spectrum {
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn largest(&self) -> Option<f64> {
        self.eigenvalues.first().copied()
    }

    pub fn smallest(&self) -> Option<f64> {
        self.eigenvalues.last().copied()
    }

    pub fn sum(&self) -> f64 {
        self.eigenvalues.iter().sum()
    }

    pub fn sum_of_squares(&self) -> f64 {
        self.eigenvalues.iter().map(|x| x * x).sum()
    }
}

/// Cyclic Jacobi eigenvalue iteration on a dense real symmetric matrix (row-major).
fn jacobi_eigenvalues(mut a: Vec<f64>, m: usize) -> Vec<f64> {
    let off_norm = |a: &[f64]| {
        let mut s = 0.0;
        for p in 0..m {
            for q in 0..m {
                if p != q {
                    s += a[p * m + q] * a[p * m + q];
                }
            }
        }
        s.sqrt()
    };
    for _ in 0..JACOBI_MAX_SWEEPS {
        if off_norm(&a) < JACOBI_TOL {
            break;
        }
        for p in 0..m {
            for q in p + 1..m {
                let apq = a[p * m + q];
                if apq == 0.0 {
                    continue;
                }
                let (app, aqq) = (a[p * m + p], a[q * m + q]);
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..m {
                    let akp = a[k * m + p];
                    let akq = a[k * m + q];
                    a[k * m + p] = c * akp - s * akq;
                    a[k * m + q] = s * akp + c * akq;
                }
                for k in 0..m {
                    let apk = a[p * m + k];
                    let aqk = a[q * m + k];
                    a[p * m + k] = c * apk - s * aqk;
                    a[q * m + k] = s * apk + c * aqk;
                }
                a[p * m + q] = 0.0;
                a[q * m + p] = 0.0;
            }
        }
    }
    (0..m).map(|i| a[i * m + i]).collect()
}

/// Floating eigenvalues through the real symmetric embedding `[[Re H, -Im H], [Im H, Re H]]`,
/// whose spectrum is that of `H` with every multiplicity doubled.
pub fn eigenvalues(h: &HermitianMatrix) -> Spectrum {
    let n = h.n;
    let m = 2 * n;
    let mut a = vec![0.0; m * m];
    for u in 0..n {
        for v in 0..n {
            let e = h.get(u, v);
            let (re, im) = (e.re as f64, e.im as f64);
            a[u * m + v] = re;
            a[(u + n) * m + v + n] = re;
            a[u * m + v + n] = -im;
            a[(u + n) * m + v] = im;
        }
    }
    let mut doubled = jacobi_eigenvalues(a, m);
    doubled.sort_by(|x, y| y.total_cmp(x));
    let eigenvalues = doubled.chunks(2).map(|pair| 0.5 * (pair[0] + pair[1])).collect();
    Spectrum { eigenvalues }
}

pub fn spectrum_of(d: &MixedGraph) -> Spectrum {
    eigenvalues(&hermitian_matrix(d))
}

/// Same Hermitian spectrum, decided by exact characteristic polynomials.
pub fn are_cospectral(d1: &MixedGraph, d2: &MixedGraph) -> bool {
    d1.n() == d2.n() && char_poly_of(d1) == char_poly_of(d2)
}

/// `spec(d2) = -spec(d1)` as multisets, decided exactly.
pub fn are_antispectral(d1: &MixedGraph, d2: &MixedGraph) -> bool {
    d1.n() == d2.n() && char_poly_of(d2) == char_poly_of(d1).negated_argument()
}

/// Largest Hermitian eigenvalue; `0` for the empty graph on zero vertices.
pub fn lambda1(d: &MixedGraph) -> f64 {
    spectrum_of(d).largest().unwrap_or(0.0)
}

/// JSON document `{"n", "charpoly", "eigenvalues"}`.
pub fn spectrum_json(h: &HermitianMatrix) -> Value {
    let cp = char_poly(h);
    let spec = eigenvalues(h);
    json!({
        "n": h.n(),
        "charpoly": cp.to_json(),
        "eigenvalues": spec.eigenvalues(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{gen_family, Family};

    fn fam(f: Family) -> MixedGraph {
        gen_family(&f).unwrap()
    }

    /// Cofactor-expansion determinant of `tI - H` with polynomial entries; independent of the
    /// Faddeev-LeVerrier path. Polynomials are coefficient vectors over `Z[i]`.
    fn cofactor_char_poly(h: &HermitianMatrix) -> Vec<GaussianInt> {
        type Poly = Vec<GaussianInt>;
        fn mul(a: &Poly, b: &Poly) -> Poly {
            let mut out = vec![GaussianInt::zero(); a.len() + b.len() - 1];
            for (i, x) in a.iter().enumerate() {
                for (j, y) in b.iter().enumerate() {
                    out[i + j] = out[i + j].clone() + x.clone() * y.clone();
                }
            }
            out
        }
        fn add(a: &Poly, b: &Poly) -> Poly {
            let mut out = vec![GaussianInt::zero(); a.len().max(b.len())];
            for (i, x) in a.iter().enumerate() {
                out[i] = out[i].clone() + x.clone();
            }
            for (i, x) in b.iter().enumerate() {
                out[i] = out[i].clone() + x.clone();
            }
            out
        }
        fn det(m: &[Vec<Poly>]) -> Poly {
            if m.len() == 1 {
                return m[0][0].clone();
            }
            let mut total = vec![GaussianInt::zero()];
            for j in 0..m.len() {
                let minor: Vec<Vec<Poly>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, p)| p.clone()).collect())
                    .collect();
                let mut term = mul(&m[0][j], &det(&minor));
                if j % 2 == 1 {
                    term = term.into_iter().map(|c| -c).collect();
                }
                total = add(&total, &term);
            }
            total
        }
        let n = h.n();
        let m: Vec<Vec<Poly>> = (0..n)
            .map(|u| {
                (0..n)
                    .map(|v| {
                        let e = h.get(u, v).lift::<BigInt>();
                        if u == v {
                            vec![-e, GaussianInt::one()]
                        } else {
                            vec![-e]
                        }
                    })
                    .collect()
            })
            .collect();
        let mut p = det(&m);
        p.truncate(n + 1);
        p
    }

    fn cofactor_real(h: &HermitianMatrix) -> CharPoly {
        let p = cofactor_char_poly(h);
        assert!(p.iter().all(|c| c.is_real()));
        CharPoly::from_coeffs(p.into_iter().map(|c| c.re).collect())
    }

    #[test]
    fn matrix_entries() {
        let k2 = hermitian_matrix(&fam(Family::Complete(2)));
        assert_eq!(k2.get(0, 1), Gaussian { re: 1, im: 0 });
        let arc = hermitian_matrix(&MixedGraph::from_edges(2, &[], &[(0, 1)]).unwrap());
        assert_eq!(arc.get(0, 1), Gaussian { re: 0, im: 1 });
        assert_eq!(arc.get(1, 0), Gaussian { re: 0, im: -1 });
        assert!(arc.is_adjacency_valid());
        assert_eq!(hermitian_matrix(&MixedGraph::empty(3)), HermitianMatrix::zero(3));
        assert_eq!(arc.to_mixed_graph().unwrap().arcs(), vec![(0, 1)]);
    }

    #[test]
    fn hermitian_validation() {
        let bad = vec![Gaussian { re: 0, im: 0 }, Gaussian { re: 0, im: 1 }, Gaussian { re: 0, im: 1 }, Gaussian {
            re: 0,
            im: 0,
        }];
        assert!(HermitianMatrix::from_entries(2, bad).is_none());
        let minus_one = HermitianMatrix::from_entries(2, vec![
            Gaussian { re: 0, im: 0 },
            Gaussian { re: -1, im: 0 },
            Gaussian { re: -1, im: 0 },
            Gaussian { re: 0, im: 0 },
        ])
        .unwrap();
        assert!(!minus_one.is_adjacency_valid());
        assert!(minus_one.to_mixed_graph().is_none());
    }

    #[test]
    fn known_characteristic_polynomials() {
        assert_eq!(char_poly_of(&fam(Family::Star(3))), CharPoly::from_i64(&[0, 0, -3, 0, 1]));
        assert_eq!(char_poly_of(&fam(Family::DirectedCycle(3))), CharPoly::from_i64(&[0, -3, 0, 1]));
        assert_eq!(char_poly_of(&fam(Family::Complete(3))), CharPoly::from_i64(&[-2, -3, 0, 1]));
        let p4 = char_poly_of(&fam(Family::Path(4)));
        assert_eq!(p4, CharPoly::from_i64(&[1, 0, -3, 0, 1]));
        assert_eq!(p4, cofactor_real(&hermitian_matrix(&fam(Family::Path(4)))));
        assert_eq!(p4.to_string(), "t^4 - 3t^2 + 1");
    }

    #[test]
    fn char_poly_agrees_with_cofactor_oracle() {
        let graphs = [
            fam(Family::C3(1, 2, 2)),
            fam(Family::EvenTriangle),
            fam(Family::K4Minus),
            MixedGraph::from_edges(5, &[(0, 1), (2, 3)], &[(1, 2), (4, 0), (3, 4), (1, 3)]).unwrap(),
            MixedGraph::from_edges(6, &[(0, 5), (2, 4)], &[(0, 1), (1, 2), (2, 3), (3, 0), (5, 3)]).unwrap(),
        ];
        for g in &graphs {
            let h = hermitian_matrix(g);
            assert_eq!(char_poly(&h), cofactor_real(&h), "{g:?}");
        }
    }

    #[test]
    fn bigint_fallback_matches() {
        let h = hermitian_matrix(&fam(Family::Complete(40)));
        let small = char_poly(&h);
        let big = CharPoly { coeffs: faddeev_leverrier::<BigInt>(&h).unwrap() };
        assert_eq!(small, big);
        // K_n: (t - (n-1)) (t + 1)^(n-1)
        assert_eq!(small.coeffs()[0], BigInt::from(-39));

        // dense tournament-like graph on 64 vertices overflows i128 in the recurrence
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        let mut g = MixedGraph::empty(64);
        for u in 0..64 {
            for v in u + 1..64 {
                let kind = match rng.gen_range(0..3) {
                    0 => EdgeKind::Undirected,
                    1 => EdgeKind::ArcForward,
                    _ => EdgeKind::ArcBackward,
                };
                g.set_kind(u, v, kind);
            }
        }
        let h = hermitian_matrix(&g);
        assert!(faddeev_leverrier::<i128>(&h).is_none());
        let cp = char_poly(&h);
        assert_eq!(cp.coeffs()[62], BigInt::from(-2016));
        assert_eq!(rank_exact(&h), bareiss_rank::<BigInt>(&h).unwrap());
    }

    #[test]
    fn ranks() {
        assert_eq!(rank_of(&fam(Family::DirectedCycle(3))), 2);
        assert_eq!(rank_of(&fam(Family::OddTriangle)), 2);
        assert_eq!(rank_of(&fam(Family::EvenTriangle)), 3);
        assert_eq!(rank_of(&fam(Family::Complete(3))), 3);
        assert_eq!(rank_of(&fam(Family::Path(4))), 4);
        assert_eq!(rank_of(&fam(Family::CompleteBipartite(3, 4))), 2);
        assert_eq!(rank_of(&MixedGraph::empty(4)), 0);
        assert_eq!(rank_of(&fam(Family::Complete(30))), 30);
    }

    #[test]
    fn spectra() {
        let s = spectrum_of(&fam(Family::CompleteBipartite(3, 4)));
        let r = 12f64.sqrt();
        assert!((s.eigenvalues()[0] - r).abs() < 1e-9);
        assert!((s.eigenvalues()[6] + r).abs() < 1e-9);
        assert!(s.eigenvalues()[1..6].iter().all(|x| x.abs() < 1e-9));

        let s = spectrum_of(&fam(Family::C3(2, 2, 2)));
        assert!((s.largest().unwrap() - r).abs() < 1e-9);
        assert!((s.smallest().unwrap() + r).abs() < 1e-9);

        assert!(spectrum_of(&MixedGraph::empty(3)).eigenvalues().iter().all(|x| *x == 0.0));
        assert!((lambda1(&fam(Family::Complete(5))) - 4.0).abs() < 1e-9);
        assert!((lambda1(&MixedGraph::from_edges(2, &[], &[(0, 1)]).unwrap()) - 1.0).abs() < 1e-9);
    }

    #[test]
    fn cospectrality() {
        let d = MixedGraph::from_edges(5, &[(0, 1), (2, 3)], &[(1, 2), (4, 0), (3, 4), (1, 3)]).unwrap();
        assert!(are_cospectral(&d, &d.converse()));
        let k34 = fam(Family::CompleteBipartite(3, 4));
        let c3 = fam(Family::C3(2, 2, 2)).with_isolated(1);
        assert!(are_cospectral(&k34, &c3));
        assert!(!are_cospectral(&fam(Family::Complete(3)), &fam(Family::Path(3))));
        assert!(!are_cospectral(&fam(Family::Complete(3)), &fam(Family::Path(4))));
    }

    #[test]
    fn antispectrality() {
        let c4 = fam(Family::Cycle(4));
        assert!(are_antispectral(&c4, &c4));
        let k3 = fam(Family::Complete(3));
        let even = fam(Family::EvenTriangle);
        assert!(are_antispectral(&k3, &even));
        assert!(!are_antispectral(&k3, &k3));
        let s = spectrum_of(&even);
        for (x, y) in s.eigenvalues().iter().zip([1.0, 1.0, -2.0]) {
            assert!((x - y).abs() < 1e-9);
        }
    }

    #[test]
    fn json_large_coefficients_become_strings() {
        let cp = CharPoly::from_coeffs(vec![BigInt::from(1u64 << 60), BigInt::from(-5), BigInt::from(1)]);
        assert_eq!(cp.to_json(), json!([(1u64 << 60).to_string(), -5, 1]));
        let v = spectrum_json(&hermitian_matrix(&fam(Family::Complete(2))));
        assert_eq!(v["charpoly"], json!([-1, 0, 1]));
        assert_eq!(v["n"], json!(2));
    }

    #[test]
    fn negated_argument() {
        // t^3 - 3t - 2 -> t^3 - 3t + 2
        let k3 = CharPoly::from_i64(&[-2, -3, 0, 1]);
        assert_eq!(k3.negated_argument(), CharPoly::from_i64(&[2, -3, 0, 1]));
        assert_eq!(k3.negated_argument().negated_argument(), k3);
    }
}
