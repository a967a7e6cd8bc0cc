//! Independent combinatorial predictions: Kouchnirenko's Newton-number
//! formula, Betti numbers of smooth projective hypersurfaces, rank
//! predictions for the twisted cohomology, and a certifiable sufficient
//! condition for tameness.
//!
//! Everything here is exact integer/rational geometry on exponent vectors,
//! plus Gröbner-based emptiness checks for face polynomials on the torus.
//! None of it shares code with the rank computations it is used to verify.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::groebner::buchberger;
use crate::polyalg::{ExactPoly, Exponent, MonomialOrder};
use crate::Rat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleError {
    /// The support misses a pure power of the named variable.
    NotConvenient { variable: usize },
    /// A face polynomial has a critical point with all coordinates nonzero;
    /// the witness lists the exponent vectors spanning the face.
    DegenerateFace { face: Vec<Vec<Exponent>> },
    /// The Jacobian ideal is not zero-dimensional.
    NonIsolatedCritical,
    /// Tameness could not be certified and no override was given.
    TamenessUnverified,
    /// Newton-polytope volumes are implemented for up to three variables.
    UnsupportedDimension(usize),
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::NotConvenient { variable } => {
                write!(f, "support has no pure power of variable {variable}")
            }
            OracleError::DegenerateFace { face } => {
                write!(f, "degenerate face with {} support points", face.len())
            }
            OracleError::NonIsolatedCritical => write!(f, "critical locus is not isolated"),
            OracleError::TamenessUnverified => write!(f, "tameness not certified"),
            OracleError::UnsupportedDimension(n) => {
                write!(f, "Newton volumes unsupported in dimension {n}")
            }
        }
    }
}

/// Verdict of the combinatorial nondegeneracy check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NondegeneracyVerdict {
    /// Every compact face polynomial is critical-point free on the torus.
    Nondegenerate { faces_checked: usize },
    /// Some face fails; carries a witness.
    Degenerate { face: Vec<Vec<Exponent>> },
    /// Not applicable (non-convenient support or unsupported dimension).
    NotChecked,
}

/// Support geometry of a polynomial: exponent vectors, the convenience flag,
/// and the nondegeneracy certificate for the compact Newton diagram.
///
/// The constant term is dropped from the support: it changes neither the
/// Jacobian ideal nor any of the volumes.
#[derive(Clone, Debug)]
pub struct NewtonData {
    support: Vec<Vec<Exponent>>,
    nvars: usize,
    convenient: bool,
    /// First variable with no pure power, when not convenient.
    missing_axis: Option<usize>,
    verdict: NondegeneracyVerdict,
}

/// Which check certified nondegeneracy; recorded in reports.
pub const NONDEGENERACY_METHOD: &str = "face-polynomial torus criticality via Groebner";

impl NewtonData {
    pub fn analyze(f: &ExactPoly) -> NewtonData {
        let nvars = f.nvars();
        let support: Vec<Vec<Exponent>> = f
            .terms()
            .map(|(e, _)| e.to_vec())
            .filter(|e| e.iter().any(|&x| x > 0))
            .collect();
        let mut missing_axis = None;
        for i in 0..nvars {
            let has_pure = support
                .iter()
                .any(|p| p[i] > 0 && p.iter().enumerate().all(|(k, &e)| k == i || e == 0));
            if !has_pure {
                missing_axis = Some(i);
                break;
            }
        }
        let convenient = missing_axis.is_none() && !support.is_empty();
        let verdict = if convenient && nvars <= 3 {
            match check_diagram_nondegeneracy(f, &support, nvars) {
                Ok(faces_checked) => NondegeneracyVerdict::Nondegenerate { faces_checked },
                Err(face) => NondegeneracyVerdict::Degenerate { face },
            }
        } else {
            NondegeneracyVerdict::NotChecked
        };
        NewtonData {
            support,
            nvars,
            convenient,
            missing_axis,
            verdict,
        }
    }

    pub fn support(&self) -> &[Vec<Exponent>] {
        &self.support
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_convenient(&self) -> bool {
        self.convenient
    }

    pub fn verdict(&self) -> &NondegeneracyVerdict {
        &self.verdict
    }
}

// ---------------------------------------------------------------------------
// Exact polytope helpers on integer exponent points.
// ---------------------------------------------------------------------------

fn to_i64(p: &[Exponent]) -> Vec<i64> {
    p.iter().map(|&e| i64::from(e)).collect()
}

fn cross2(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i128 {
    let (ax, ay) = (i128::from(a.0 - o.0), i128::from(a.1 - o.1));
    let (bx, by) = (i128::from(b.0 - o.0), i128::from(b.1 - o.1));
    ax * by - ay * bx
}

/// Counterclockwise convex hull (monotone chain); collinear points dropped.
fn hull2(points: &[(i64, i64)]) -> Vec<(i64, i64)> {
    let mut pts: Vec<(i64, i64)> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut lower: Vec<(i64, i64)> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2
            && cross2(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0
        {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<(i64, i64)> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2
            && cross2(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0
        {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

fn dot(a: &[i64], b: &[i64]) -> i128 {
    a.iter().zip(b).map(|(&x, &y)| i128::from(x) * i128::from(y)).sum()
}

fn cross3(a: &[i64], b: &[i64]) -> Vec<i64> {
    vec![
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn det3(a: &[i64], b: &[i64], c: &[i64]) -> i128 {
    i128::from(a[0]) * (i128::from(b[1]) * i128::from(c[2]) - i128::from(b[2]) * i128::from(c[1]))
        - i128::from(a[1])
            * (i128::from(b[0]) * i128::from(c[2]) - i128::from(b[2]) * i128::from(c[0]))
        + i128::from(a[2])
            * (i128::from(b[0]) * i128::from(c[1]) - i128::from(b[1]) * i128::from(c[0]))
}

fn gcd64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn primitive(v: &mut [i64]) {
    let g = v.iter().fold(0, |acc, &x| gcd64(acc, x));
    if g > 1 {
        for x in v.iter_mut() {
            *x /= g;
        }
    }
}

/// A supporting face of a point configuration: indices into the point list,
/// its inner normal, and the supporting value.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Face {
    points: Vec<usize>,
    normal: Vec<i64>,
    value: i128,
}

/// Faces of `conv(points) + R₊ⁿ` with strictly positive inner normal
/// (the compact faces of the Newton polyhedron), for n = 2 or 3.
/// Returns facets only; lower faces come from `facet_edges`.
fn compact_facets(points: &[Vec<i64>], n: usize) -> Vec<Face> {
    let mut faces = BTreeSet::new();
    match n {
        2 => {
            for i in 0..points.len() {
                for j in i + 1..points.len() {
                    let p = &points[i];
                    let q = &points[j];
                    let mut w = vec![p[1] - q[1], q[0] - p[0]];
                    if w[0] < 0 || (w[0] == 0 && w[1] < 0) {
                        w[0] = -w[0];
                        w[1] = -w[1];
                    }
                    if w[0] <= 0 || w[1] <= 0 {
                        continue;
                    }
                    primitive(&mut w);
                    let c = dot(&w, p);
                    if points.iter().all(|r| dot(&w, r) >= c) {
                        let members: Vec<usize> = (0..points.len())
                            .filter(|&k| dot(&w, &points[k]) == c)
                            .collect();
                        faces.insert(Face {
                            points: members,
                            normal: w,
                            value: c,
                        });
                    }
                }
            }
        }
        3 => {
            for i in 0..points.len() {
                for j in i + 1..points.len() {
                    for k in j + 1..points.len() {
                        let a: Vec<i64> =
                            points[j].iter().zip(&points[i]).map(|(x, y)| x - y).collect();
                        let b: Vec<i64> =
                            points[k].iter().zip(&points[i]).map(|(x, y)| x - y).collect();
                        let mut w = cross3(&a, &b);
                        if w.iter().all(|&x| x == 0) {
                            continue;
                        }
                        if w.iter().any(|&x| x < 0) {
                            if w.iter().any(|&x| x > 0) && w.iter().all(|&x| x <= 0) {
                                // unreachable; handled below
                            }
                            for x in w.iter_mut() {
                                *x = -*x;
                            }
                        }
                        if w.iter().any(|&x| x <= 0) {
                            continue;
                        }
                        primitive(&mut w);
                        let c = dot(&w, &points[i]);
                        if points.iter().all(|r| dot(&w, r) >= c) {
                            let members: Vec<usize> = (0..points.len())
                                .filter(|&m| dot(&w, &points[m]) == c)
                                .collect();
                            faces.insert(Face {
                                points: members,
                                normal: w,
                                value: c,
                            });
                        }
                    }
                }
            }
        }
        _ => unreachable!("compact_facets is only called for n = 2, 3"),
    }
    faces.into_iter().collect()
}

/// Edges of a two-dimensional facet, via the convex hull of the projection
/// along a coordinate where the normal is nonzero.
fn facet_edges(points: &[Vec<i64>], face: &Face) -> Vec<Vec<usize>> {
    let drop = face
        .normal
        .iter()
        .position(|&x| x != 0)
        .expect("nonzero normal");
    let keep: Vec<usize> = (0..3).filter(|&i| i != drop).collect();
    let projected: Vec<(i64, i64)> = face
        .points
        .iter()
        .map(|&m| (points[m][keep[0]], points[m][keep[1]]))
        .collect();
    let hull = hull2(&projected);
    if hull.len() < 2 {
        return Vec::new();
    }
    let mut edges = Vec::new();
    let m = hull.len();
    for e in 0..m {
        if m == 2 && e == 1 {
            break;
        }
        let a = hull[e];
        let b = hull[(e + 1) % m];
        // Members of the facet lying on segment [a, b].
        let members: Vec<usize> = face
            .points
            .iter()
            .copied()
            .filter(|&idx| {
                let p = (points[idx][keep[0]], points[idx][keep[1]]);
                if cross2(a, b, p) != 0 {
                    return false;
                }
                let t = i128::from(p.0 - a.0) * i128::from(b.0 - a.0)
                    + i128::from(p.1 - a.1) * i128::from(b.1 - a.1);
                let len = i128::from(b.0 - a.0) * i128::from(b.0 - a.0)
                    + i128::from(b.1 - a.1) * i128::from(b.1 - a.1);
                t >= 0 && t <= len
            })
            .collect();
        if members.len() >= 2 {
            edges.push(members);
        }
    }
    edges
}

/// Normalized volume `k! · Vol_k` of the region under the Newton diagram of
/// the given support points in dimension k (1, 2, or 3). Assumes a pure power
/// on every axis.
fn normalized_under_diagram_volume(points: &[Vec<i64>], k: usize) -> i128 {
    match k {
        1 => points
            .iter()
            .map(|p| p[0])
            .min()
            .map(i128::from)
            .expect("nonempty support"),
        2 => {
            // Staircase polygon (0,0) -> (mx,0) -> chain -> (0,my).
            let faces = compact_facets(points, 2);
            let mut vertices: BTreeSet<(i64, i64)> = BTreeSet::new();
            for f in &faces {
                for &m in &f.points {
                    vertices.insert((points[m][0], points[m][1]));
                }
            }
            let mut chain: Vec<(i64, i64)> = vertices.into_iter().collect();
            // Order by descending x (ascending y along the staircase).
            chain.sort_by_key(|p| core::cmp::Reverse(p.0));
            let mut poly: Vec<(i64, i64)> = vec![(0, 0)];
            poly.extend(chain);
            // Shoelace, counterclockwise: (0,0), (mx,0)...(0,my).
            let mut twice_area: i128 = 0;
            let m = poly.len();
            for i in 0..m {
                let (x1, y1) = poly[i];
                let (x2, y2) = poly[(i + 1) % m];
                twice_area += i128::from(x1) * i128::from(y2) - i128::from(x2) * i128::from(y1);
            }
            twice_area.abs()
        }
        3 => {
            let faces = compact_facets(points, 3);
            let mut total: i128 = 0;
            for f in &faces {
                let drop = f.normal.iter().position(|&x| x != 0).unwrap();
                let keep: Vec<usize> = (0..3).filter(|&i| i != drop).collect();
                let projected: Vec<(i64, i64)> = f
                    .points
                    .iter()
                    .map(|&m| (points[m][keep[0]], points[m][keep[1]]))
                    .collect();
                let hull = hull2(&projected);
                if hull.len() < 3 {
                    continue;
                }
                // Fan triangulation of the facet, coned to the origin.
                let lift = |q: (i64, i64)| -> Vec<i64> {
                    let idx = f
                        .points
                        .iter()
                        .copied()
                        .find(|&m| points[m][keep[0]] == q.0 && points[m][keep[1]] == q.1)
                        .expect("hull vertex belongs to the facet");
                    points[idx].clone()
                };
                let apex = lift(hull[0]);
                for t in 1..hull.len() - 1 {
                    let b = lift(hull[t]);
                    let c = lift(hull[t + 1]);
                    total += det3(&apex, &b, &c).abs();
                }
            }
            total
        }
        _ => unreachable!("volumes only in dimensions 1..=3"),
    }
}

/// Sum of the terms of `f` supported on the given exponent vectors.
fn face_polynomial(f: &ExactPoly, face: &[Vec<Exponent>]) -> ExactPoly {
    let mut out = ExactPoly::zero(f.nvars());
    for e in face {
        let c = f.coeff(e);
        if !c.is_zero() {
            out.add_term(e.clone(), c);
        }
    }
    out
}

/// Does `g` have a critical point with all coordinates nonzero? Decided
/// exactly by saturating with `t·x_1···x_n - 1` and testing the unit ideal.
fn has_torus_critical_point(g: &ExactPoly) -> bool {
    let n = g.nvars();
    let wide = n + 1;
    let widen = |p: &ExactPoly| -> ExactPoly {
        let mut out = ExactPoly::zero(wide);
        for (e, c) in p.terms() {
            let mut exps = e.to_vec();
            exps.push(0);
            out.add_term(exps, c.clone());
        }
        out
    };
    let mut gens: Vec<ExactPoly> = (0..n).map(|i| widen(&g.derivative(i))).collect();
    let mut torus = vec![0u32; wide];
    for e in torus.iter_mut().take(n) {
        *e = 1;
    }
    torus[n] = 1;
    let mut sat = ExactPoly::monomial(torus, Rat::from_integer(1.into()));
    sat = sat.sub(&ExactPoly::one(wide));
    gens.push(sat);
    if gens.iter().all(ExactPoly::is_zero) {
        // The zero polynomial is critical everywhere.
        return true;
    }
    let gb = buchberger(&gens, MonomialOrder::DegRevLex);
    !gb.is_unit_ideal()
}

/// Checks every compact edge and facet of the Newton diagram (vertex faces
/// are monomials, which never have torus critical points). Returns the number
/// of faces checked, or the witness face.
fn check_diagram_nondegeneracy(
    f: &ExactPoly,
    support: &[Vec<Exponent>],
    nvars: usize,
) -> Result<usize, Vec<Vec<Exponent>>> {
    let mut checked = 0;
    // Faces of every coordinate-subspace restriction, the full space included.
    for mask in 1u32..(1 << nvars) {
        let coords: Vec<usize> = (0..nvars).filter(|&i| mask & (1 << i) != 0).collect();
        let k = coords.len();
        if k < 2 {
            continue;
        }
        let restricted: Vec<Vec<i64>> = support
            .iter()
            .filter(|p| {
                p.iter()
                    .enumerate()
                    .all(|(i, &e)| coords.contains(&i) || e == 0)
            })
            .map(|p| coords.iter().map(|&i| i64::from(p[i])).collect())
            .collect();
        if restricted.is_empty() {
            continue;
        }
        let mut face_sets: Vec<Vec<usize>> = Vec::new();
        let facets = compact_facets(&restricted, k);
        for face in &facets {
            face_sets.push(face.points.clone());
            if k == 3 {
                face_sets.extend(facet_edges(&restricted, face));
            }
        }
        face_sets.sort();
        face_sets.dedup();
        for members in face_sets {
            let face: Vec<Vec<Exponent>> = members
                .iter()
                .map(|&m| {
                    let mut full = vec![0u32; nvars];
                    for (slot, &i) in coords.iter().enumerate() {
                        full[i] = restricted[m][slot] as u32;
                    }
                    full
                })
                .collect();
            let g = face_polynomial(f, &face);
            checked += 1;
            if has_torus_critical_point(&g) {
                return Err(face);
            }
        }
    }
    Ok(checked)
}

/// Kouchnirenko's Newton number: the alternating sum of normalized volumes
/// of the under-diagram regions over all coordinate subspaces. For a
/// convenient, nondegenerate polynomial this is the local Milnor number at
/// the origin; it agrees with `dim Q[x]/Jac(f)` exactly when the origin is
/// the only critical point, as for every diagonal-type entry of the bundled
/// corpus.
pub fn kouchnirenko_mu(nd: &NewtonData) -> Result<usize, OracleError> {
    let n = nd.nvars;
    if n > 3 {
        return Err(OracleError::UnsupportedDimension(n));
    }
    if let Some(variable) = nd.missing_axis {
        return Err(OracleError::NotConvenient { variable });
    }
    if !nd.convenient {
        return Err(OracleError::NotConvenient { variable: 0 });
    }
    if let NondegeneracyVerdict::Degenerate { face } = &nd.verdict {
        return Err(OracleError::DegenerateFace { face: face.clone() });
    }
    let mut mu: i128 = if n.is_multiple_of(2) { 1 } else { -1 }; // (-1)^n · 0! · V_0
    for mask in 1u32..(1 << n) {
        let coords: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        let k = coords.len();
        let restricted: Vec<Vec<i64>> = nd
            .support
            .iter()
            .filter(|p| {
                p.iter()
                    .enumerate()
                    .all(|(i, &e)| coords.contains(&i) || e == 0)
            })
            .map(|p| coords.iter().map(|&i| i64::from(p[i])).collect())
            .collect();
        let vol = normalized_under_diagram_volume(&restricted, k);
        let sign = if (n - k).is_multiple_of(2) { 1 } else { -1 };
        mu += sign * vol;
    }
    assert!(mu >= 0, "Newton number must be nonnegative");
    Ok(mu as usize)
}

// ---------------------------------------------------------------------------
// Hypersurface Betti numbers and rank predictions.
// ---------------------------------------------------------------------------

fn binomial(n: u64, k: u64) -> i128 {
    if k > n {
        return 0;
    }
    let mut out: i128 = 1;
    for i in 0..k {
        out = out * i128::from(n - i) / i128::from(i + 1);
    }
    out
}

/// Euler characteristic of a smooth degree-`d` hypersurface in `P^n`, by the
/// closed Chern-class expansion `d·Σ_j C(n+1, j)·(-d)^(n-1-j)`.
pub fn hypersurface_euler(n: usize, d: usize) -> i128 {
    assert!(n >= 1 && d >= 1);
    let mut total: i128 = 0;
    for j in 0..n {
        let mut pow: i128 = 1;
        for _ in 0..(n - 1 - j) {
            pow *= -(d as i128);
        }
        total += binomial(n as u64 + 1, j as u64) * pow;
    }
    total * d as i128
}

/// The same Euler characteristic by the projection recursion
/// `χ_n(d) = (1-d)·χ_{n-1}(d) + n·d`, base `χ_1(d) = d`. Kept independent of
/// [`hypersurface_euler`] so the two routes can cross-check each other.
pub fn hypersurface_euler_recursion(n: usize, d: usize) -> i128 {
    assert!(n >= 1 && d >= 1);
    let mut chi: i128 = d as i128;
    for m in 2..=n {
        chi = (1 - d as i128) * chi + (m * d) as i128;
    }
    chi
}

/// Betti numbers `b_0 .. b_{2(n-1)}` of a smooth degree-`d` hypersurface
/// `V ⊂ P^n`: ones in even degrees off the middle, zeros in odd degrees off
/// the middle, and the middle number fixed by the Euler characteristic.
pub fn hypersurface_betti(n: usize, d: usize) -> Vec<u64> {
    assert!(n >= 2, "hypersurfaces in P^1 are point sets");
    assert!(d >= 1);
    let dim = n - 1;
    let chi = hypersurface_euler(n, d);
    let mut betti = vec![0u64; 2 * dim + 1];
    let mut off_middle: i128 = 0;
    for (j, b) in betti.iter_mut().enumerate() {
        if j != dim && j.is_multiple_of(2) {
            *b = 1;
            off_middle += 1;
        }
    }
    let middle = if dim.is_multiple_of(2) {
        chi - off_middle
    } else {
        off_middle - chi
    };
    assert!(middle >= 0, "negative middle Betti number");
    betti[dim] = middle as u64;
    betti
}

/// Where a rank prediction comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    MilnorSum,
    HypersurfaceBetti,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::MilnorSum => "milnor-sum",
            Provenance::HypersurfaceBetti => "hypersurface-betti",
        }
    }
}

/// Predicted ranks of `H^k`, indexed by cohomological degree `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankPrediction {
    pub ranks: Vec<usize>,
    pub provenance: Provenance,
}

impl RankPrediction {
    pub fn rank(&self, k: usize) -> usize {
        self.ranks.get(k).copied().unwrap_or(0)
    }
}

/// Rank predictions for the isolated homogeneous singularity `f` of degree
/// `d` in `n+1` variables: `rank H^k = b_{k-2}(V)` for the smooth degree-`d`
/// hypersurface `V ⊂ P^n`.
pub fn predicted_ranks_section5(n: usize, d: usize) -> Result<RankPrediction, OracleError> {
    if n < 2 || d < 2 {
        return Err(OracleError::UnsupportedDimension(n.min(d)));
    }
    let betti = hypersurface_betti(n, d);
    let mut ranks = vec![0usize; 2 * n + 1];
    for (j, &b) in betti.iter().enumerate() {
        let k = j + 2;
        if k < ranks.len() {
            ranks[k] = b as usize;
        }
    }
    Ok(RankPrediction {
        ranks,
        provenance: Provenance::HypersurfaceBetti,
    })
}

/// Tameness verdict of the combinatorial proxy. `Unknown` never asserts
/// non-tameness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TamenessVerdict {
    TameCertified { faces_checked: usize },
    Unknown { reason: String },
}

impl TamenessVerdict {
    pub fn is_certified(&self) -> bool {
        matches!(self, TamenessVerdict::TameCertified { .. })
    }
}

/// Sufficient combinatorial condition for tameness: `f` convenient and
/// Newton-nondegenerate at infinity, i.e. no face of `conv(supp ∪ {0})` that
/// misses the origin has a torus critical point.
pub fn tameness_proxy(f: &ExactPoly) -> TamenessVerdict {
    let nd = NewtonData::analyze(f);
    let n = nd.nvars;
    if n > 3 {
        return TamenessVerdict::Unknown {
            reason: alloc::format!("dimension {n} not supported by the face check"),
        };
    }
    if let Some(variable) = nd.missing_axis {
        return TamenessVerdict::Unknown {
            reason: alloc::format!("not convenient: no pure power of variable {variable}"),
        };
    }
    if nd.support.is_empty() {
        return TamenessVerdict::Unknown {
            reason: String::from("constant polynomial"),
        };
    }
    // The local diagram must be nondegenerate as well.
    if let NondegeneracyVerdict::Degenerate { face } = &nd.verdict {
        return TamenessVerdict::Unknown {
            reason: alloc::format!(
                "degenerate compact face with {} support points",
                face.len()
            ),
        };
    }
    match faces_at_infinity_nondegenerate(f, &nd.support, n) {
        Ok(checked) => {
            let base = match nd.verdict {
                NondegeneracyVerdict::Nondegenerate { faces_checked } => faces_checked,
                _ => 0,
            };
            TamenessVerdict::TameCertified {
                faces_checked: checked + base,
            }
        }
        Err(face) => TamenessVerdict::Unknown {
            reason: alloc::format!(
                "face at infinity with {} support points fails the torus check",
                face.len()
            ),
        },
    }
}

/// Checks the faces of `conv(supp ∪ {0})` not containing the origin
/// (vertex faces are monomials and always pass). Returns faces checked or a
/// witness.
fn faces_at_infinity_nondegenerate(
    f: &ExactPoly,
    support: &[Vec<Exponent>],
    n: usize,
) -> Result<usize, Vec<Vec<Exponent>>> {
    let mut points: Vec<Vec<i64>> = support.iter().map(|p| to_i64(p)).collect();
    points.push(vec![0; n]); // the origin
    let origin = points.len() - 1;
    let mut face_sets: Vec<Vec<usize>> = Vec::new();
    match n {
        1 => {}
        2 => {
            for i in 0..points.len() {
                for j in i + 1..points.len() {
                    let p = &points[i];
                    let q = &points[j];
                    let w0 = vec![p[1] - q[1], q[0] - p[0]];
                    for w in [w0.clone(), vec![-w0[0], -w0[1]]] {
                        if w.iter().all(|&x| x == 0) {
                            continue;
                        }
                        let c = dot(&w, p);
                        if c <= 0 {
                            continue; // face would contain the origin
                        }
                        if points.iter().all(|r| dot(&w, r) <= c) {
                            let members: Vec<usize> = (0..points.len())
                                .filter(|&m| dot(&w, &points[m]) == c)
                                .collect();
                            if members.len() >= 2 && !members.contains(&origin) {
                                face_sets.push(members);
                            }
                        }
                    }
                }
            }
        }
        3 => {
            let mut facets: Vec<Face> = Vec::new();
            for i in 0..points.len() {
                for j in i + 1..points.len() {
                    for k in j + 1..points.len() {
                        let a: Vec<i64> =
                            points[j].iter().zip(&points[i]).map(|(x, y)| x - y).collect();
                        let b: Vec<i64> =
                            points[k].iter().zip(&points[i]).map(|(x, y)| x - y).collect();
                        let w0 = cross3(&a, &b);
                        if w0.iter().all(|&x| x == 0) {
                            continue;
                        }
                        for w in [w0.clone(), w0.iter().map(|&x| -x).collect::<Vec<i64>>()] {
                            let mut w = w;
                            primitive(&mut w);
                            let c = dot(&w, &points[i]);
                            if c <= 0 {
                                continue;
                            }
                            if points.iter().all(|r| dot(&w, r) <= c) {
                                let members: Vec<usize> = (0..points.len())
                                    .filter(|&m| dot(&w, &points[m]) == c)
                                    .collect();
                                if !members.contains(&origin) {
                                    facets.push(Face {
                                        points: members,
                                        normal: w,
                                        value: c,
                                    });
                                }
                            }
                        }
                    }
                }
            }
            facets.sort();
            facets.dedup();
            for facet in &facets {
                if facet.points.len() >= 2 {
                    face_sets.push(facet.points.clone());
                }
                face_sets.extend(facet_edges(&points, facet));
            }
        }
        _ => unreachable!(),
    }
    face_sets.sort();
    face_sets.dedup();
    let mut checked = 0;
    for members in face_sets {
        let face: Vec<Vec<Exponent>> = members
            .iter()
            .map(|&m| points[m].iter().map(|&x| x as u32).collect())
            .collect();
        let g = face_polynomial(f, &face);
        if g.is_zero() {
            continue;
        }
        checked += 1;
        if has_torus_critical_point(&g) {
            return Err(face);
        }
    }
    Ok(checked)
}

/// Rank prediction for tame `f` with isolated critical points: the total
/// Milnor number in degree `n`, zero elsewhere. Requires the tameness proxy
/// to certify `f`, unless `assume_tame` overrides it.
pub fn predicted_rank_tame(
    f: &ExactPoly,
    assume_tame: bool,
) -> Result<RankPrediction, OracleError> {
    if !assume_tame && !tameness_proxy(f).is_certified() {
        return Err(OracleError::TamenessUnverified);
    }
    let ma = crate::groebner::milnor_algebra(f)
        .map_err(|_| OracleError::NonIsolatedCritical)?;
    let n = f.nvars();
    let mut ranks = vec![0usize; 2 * n + 1];
    ranks[n] = ma.mu();
    Ok(RankPrediction {
        ranks,
        provenance: Provenance::MilnorSum,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::parse_poly;

    fn p(text: &str, vars: &[&str]) -> ExactPoly {
        parse_poly(text, vars).unwrap()
    }

    #[test]
    fn kouchnirenko_matches_binomial_formula() {
        let vars = ["x", "y"];
        for a in 2..=6u32 {
            for b in 2..=6u32 {
                let f = p(&alloc::format!("x^{a} + y^{b}"), &vars);
                let nd = NewtonData::analyze(&f);
                assert_eq!(
                    kouchnirenko_mu(&nd).unwrap() as u32,
                    (a - 1) * (b - 1),
                    "x^{a}+y^{b}"
                );
            }
        }
    }

    #[test]
    fn kouchnirenko_examples() {
        let nd = NewtonData::analyze(&p("x^3 - y^2", &["x", "y"]));
        assert_eq!(kouchnirenko_mu(&nd).unwrap(), 2);

        let nd = NewtonData::analyze(&p("x^2 + y^2 + z^2", &["x", "y", "z"]));
        assert_eq!(kouchnirenko_mu(&nd).unwrap(), 1);

        let nd = NewtonData::analyze(&p("x^3 + y^3 + z^3", &["x", "y", "z"]));
        assert_eq!(kouchnirenko_mu(&nd).unwrap(), 8);

        // No pure power of y: not convenient in two variables.
        let nd = NewtonData::analyze(&p("x", &["x", "y"]));
        assert_eq!(
            kouchnirenko_mu(&nd).unwrap_err(),
            OracleError::NotConvenient { variable: 1 }
        );

        // In one variable x is convenient with an empty critical locus.
        let nd = NewtonData::analyze(&p("x", &["x"]));
        assert_eq!(kouchnirenko_mu(&nd).unwrap(), 0);
    }

    #[test]
    fn kouchnirenko_with_interior_vertex_is_local() {
        // supp {(3,0),(1,1),(0,3)}: the diagram has a vertex at (1,1), and
        // the staircase region has normalized area 6, so the Newton number
        // is 6 - (3+3) + 1 = 1: the local Milnor number of the Morse point
        // at the origin. The Jacobian also vanishes at three points away
        // from the origin, so the global Milnor number is larger.
        let f = p("x^3 + x*y + y^3", &["x", "y"]);
        let nd = NewtonData::analyze(&f);
        assert_eq!(kouchnirenko_mu(&nd).unwrap(), 1);
        assert_eq!(crate::groebner::milnor_algebra(&f).unwrap().mu(), 4);
    }

    #[test]
    fn degenerate_face_detected() {
        // (x+y)^2 has the whole diagonal edge as a degenerate face.
        let f = p("x^2 + 2*x*y + y^2", &["x", "y"]);
        let nd = NewtonData::analyze(&f);
        assert!(matches!(
            kouchnirenko_mu(&nd).unwrap_err(),
            OracleError::DegenerateFace { .. }
        ));
    }

    #[test]
    fn euler_characteristics_agree() {
        for n in 1..=5 {
            for d in 1..=6 {
                assert_eq!(
                    hypersurface_euler(n, d),
                    hypersurface_euler_recursion(n, d),
                    "chi mismatch at n={n}, d={d}"
                );
            }
        }
        assert_eq!(hypersurface_euler(2, 3), 0); // elliptic curve
        assert_eq!(hypersurface_euler(3, 4), 24); // K3
    }

    #[test]
    fn betti_numbers() {
        assert_eq!(hypersurface_betti(2, 3), alloc::vec![1, 2, 1]);
        assert_eq!(hypersurface_betti(3, 1), alloc::vec![1, 0, 1, 0, 1]);
        assert_eq!(hypersurface_betti(3, 2), alloc::vec![1, 0, 2, 0, 1]);
        assert_eq!(hypersurface_betti(3, 4)[2], 22);
        // Plane curves: b_1 = 2g = (d-1)(d-2).
        for d in 1..=6i64 {
            assert_eq!(
                hypersurface_betti(2, d as usize)[1] as i64,
                (d - 1) * (d - 2)
            );
        }
        // Total Betti sum must match the independent recursion.
        for n in 2..=4 {
            for d in 1..=5 {
                let b = hypersurface_betti(n, d);
                let signed: i128 = b
                    .iter()
                    .enumerate()
                    .map(|(j, &x)| if j % 2 == 0 { x as i128 } else { -(x as i128) })
                    .sum();
                assert_eq!(signed, hypersurface_euler_recursion(n, d));
            }
        }
    }

    #[test]
    fn section5_predictions() {
        let r = predicted_ranks_section5(2, 3).unwrap();
        assert_eq!(&r.ranks[2..=4], &[1, 2, 1]);
        assert_eq!(r.provenance, Provenance::HypersurfaceBetti);

        let r = predicted_ranks_section5(3, 2).unwrap();
        assert_eq!(&r.ranks[2..=6], &[1, 0, 2, 0, 1]);

        let r = predicted_ranks_section5(3, 4).unwrap();
        assert_eq!(r.rank(4), 22);

        assert!(predicted_ranks_section5(2, 1).is_err());
    }

    #[test]
    fn tameness_certificates() {
        let vars = ["x", "y"];
        assert!(tameness_proxy(&p("x^3 - y^2", &vars)).is_certified());
        assert!(tameness_proxy(&p("x^2 + y^2", &vars)).is_certified());
        assert!(tameness_proxy(&p("x^3 + y^4", &vars)).is_certified());
        // Broughton-type: not convenient, so unknown.
        let v = tameness_proxy(&p("x^2*y + x", &vars));
        assert!(!v.is_certified());
        // x*y: not convenient either.
        assert!(!tameness_proxy(&p("x*y", &vars)).is_certified());
        // Degenerate edge: unknown.
        assert!(!tameness_proxy(&p("x^2 + 2*x*y + y^2", &vars)).is_certified());
    }

    #[test]
    fn tame_rank_predictions() {
        let vars = ["x", "y"];
        let r = predicted_rank_tame(&p("x^3 - y^2", &vars), false).unwrap();
        assert_eq!(r.ranks, alloc::vec![0, 0, 2, 0, 0]);
        assert_eq!(r.provenance, Provenance::MilnorSum);

        let r = predicted_rank_tame(&p("x^2 + y^2", &vars), false).unwrap();
        assert_eq!(r.rank(2), 1);

        // x*y needs the override, and then predicts mu = 1.
        assert_eq!(
            predicted_rank_tame(&p("x*y", &vars), false).unwrap_err(),
            OracleError::TamenessUnverified
        );
        let r = predicted_rank_tame(&p("x*y", &vars), true).unwrap();
        assert_eq!(r.rank(2), 1);
    }
}
