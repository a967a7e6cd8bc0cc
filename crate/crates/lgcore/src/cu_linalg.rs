//! Exact linear algebra over the univariate polynomial ring `Q[u]`.
//!
//! `Q[u]` is a principal ideal domain, so Smith normal form decides freeness,
//! rank, and torsion of any finitely presented module. The decomposition here
//! tracks the unimodular transforms and the inverse of the column transform,
//! which the truncated-complex machinery uses to express images in kernel
//! coordinates.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::polyalg::ExactPoly;
use crate::Rat;

/// Univariate polynomial over `Q`, coefficients lowest degree first with no
/// trailing zeros (the zero polynomial is the empty sequence).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UPoly {
    coeffs: Vec<Rat>,
}

impl UPoly {
    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c·u^k`.
    pub fn monomial(c: Rat, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        UPoly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_one()
    }

    /// `u`-adic valuation; `None` for zero.
    pub fn u_valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Monic `u^k` for some `k >= 1`.
    pub fn is_pure_u_power(&self) -> bool {
        !self.is_unit()
            && !self.is_zero()
            && self.is_monic()
            && self.u_valuation() == self.degree()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![Rat::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        Self::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> Self {
        UPoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UPoly {
            coeffs: self.coeffs.iter().map(|k| k * c).collect(),
        }
    }

    /// Euclidean division: `self = q·d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.degree().unwrap();
        let lead = d.leading_coeff();
        let mut r = self.clone();
        let mut q = vec![Rat::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let factor = r.leading_coeff() / lead.clone();
            let shift = rd - dd;
            q[shift] = factor.clone();
            let t = d.mul(&UPoly::monomial(factor, shift));
            r = r.sub(&t);
        }
        (Self::from_coeffs(q), r)
    }

    pub fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.div_rem(self).1.is_zero()
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let inv = Rat::one() / self.leading_coeff();
        self.scale(&inv)
    }

    /// Largest bit length among numerators and denominators; a cheap proxy
    /// for coefficient size used in pivot selection.
    pub fn coeff_bits(&self) -> u64 {
        self.coeffs
            .iter()
            .map(|c| c.numer().bits().max(c.denom().bits()))
            .max()
            .unwrap_or(0)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Renders like "u^2 - 1".
    pub fn to_text(&self) -> String {
        let mut p = ExactPoly::zero(1);
        for (k, c) in self.coeffs.iter().enumerate() {
            p.add_term(vec![k as u32], c.clone());
        }
        p.to_text(&["u"])
    }
}

/// Rectangular matrix over `Q[u]`, row major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UPolyMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<UPoly>,
}

impl UPolyMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        UPolyMatrix {
            rows,
            cols,
            data: vec![UPoly::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, UPoly::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<UPoly>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        UPolyMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> &UPoly {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: UPoly) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul(&self, other: &UPolyMatrix) -> UPolyMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = UPolyMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if !b.is_zero() {
                        let cur = out.at(i, j).add(&a.mul(b));
                        out.set(i, j, cur);
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(UPoly::is_zero)
    }

    /// Evaluation at a rational point, as a matrix over `Q`.
    pub fn eval(&self, x: &Rat) -> crate::linalg::QMatrix {
        let mut m = crate::linalg::QMatrix::zero(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.at(i, j).eval(x));
            }
        }
        m
    }

    /// Exact determinant by evaluation and interpolation.
    pub fn det(&self) -> UPoly {
        assert_eq!(self.rows, self.cols);
        let bound: usize = (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self.at(i, j).degree().unwrap_or(0))
                    .max()
                    .unwrap_or(0)
            })
            .sum();
        let points: Vec<Rat> = (0..=bound as i64).map(crate::rat_int).collect();
        let values: Vec<Rat> = points.iter().map(|t| self.eval(t).det()).collect();
        UPoly::from_coeffs(crate::linalg::lagrange_interpolate(&points, &values))
    }
}

/// Smith decomposition `U·M·V = S` with `U`, `V` unimodular and `S` diagonal
/// with monic, successively dividing invariant factors. The exact inverses
/// of both transforms come along for free and certify unimodularity.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub u: UPolyMatrix,
    pub s: UPolyMatrix,
    pub v: UPolyMatrix,
    pub u_inv: UPolyMatrix,
    pub v_inv: UPolyMatrix,
}

impl SmithDecomposition {
    /// Nonzero diagonal entries, in divisibility order.
    pub fn invariant_factors(&self) -> Vec<UPoly> {
        let n = self.s.rows.min(self.s.cols);
        (0..n)
            .map(|i| self.s.at(i, i).clone())
            .filter(|d| !d.is_zero())
            .collect()
    }
}

struct SnfWorker {
    a: UPolyMatrix,
    u: Option<UPolyMatrix>,
    v: Option<UPolyMatrix>,
    u_inv: Option<UPolyMatrix>,
    v_inv: Option<UPolyMatrix>,
}

impl SnfWorker {
    fn new(m: &UPolyMatrix, track_u: bool, track_v: bool) -> Self {
        SnfWorker {
            a: m.clone(),
            u: track_u.then(|| UPolyMatrix::identity(m.rows)),
            u_inv: track_u.then(|| UPolyMatrix::identity(m.rows)),
            v: track_v.then(|| UPolyMatrix::identity(m.cols)),
            v_inv: track_v.then(|| UPolyMatrix::identity(m.cols)),
        }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.a.cols {
            let x = self.a.at(i, c).clone();
            let y = self.a.at(j, c).clone();
            self.a.set(i, c, y);
            self.a.set(j, c, x);
        }
        if let Some(u) = &mut self.u {
            for c in 0..u.cols {
                let x = u.at(i, c).clone();
                let y = u.at(j, c).clone();
                u.set(i, c, y);
                u.set(j, c, x);
            }
        }
        // Inverse of a row swap is the matching column swap on u_inv.
        if let Some(u_inv) = &mut self.u_inv {
            for r in 0..u_inv.rows {
                let x = u_inv.at(r, i).clone();
                let y = u_inv.at(r, j).clone();
                u_inv.set(r, i, y);
                u_inv.set(r, j, x);
            }
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.a.rows {
            let x = self.a.at(r, i).clone();
            let y = self.a.at(r, j).clone();
            self.a.set(r, i, y);
            self.a.set(r, j, x);
        }
        if let Some(v) = &mut self.v {
            for r in 0..v.rows {
                let x = v.at(r, i).clone();
                let y = v.at(r, j).clone();
                v.set(r, i, y);
                v.set(r, j, x);
            }
        }
        if let Some(v_inv) = &mut self.v_inv {
            for c in 0..v_inv.cols {
                let x = v_inv.at(i, c).clone();
                let y = v_inv.at(j, c).clone();
                v_inv.set(i, c, y);
                v_inv.set(j, c, x);
            }
        }
    }

    /// row_i -= q · row_j
    fn row_sub(&mut self, i: usize, q: &UPoly, j: usize) {
        if q.is_zero() {
            return;
        }
        for c in 0..self.a.cols {
            if self.a.at(j, c).is_zero() {
                continue;
            }
            let t = self.a.at(i, c).sub(&q.mul(self.a.at(j, c)));
            self.a.set(i, c, t);
        }
        if let Some(u) = &mut self.u {
            for c in 0..u.cols {
                if u.at(j, c).is_zero() {
                    continue;
                }
                let t = u.at(i, c).sub(&q.mul(u.at(j, c)));
                u.set(i, c, t);
            }
        }
        // Inverse op on u_inv: col_j += q·col_i.
        if let Some(u_inv) = &mut self.u_inv {
            for r in 0..u_inv.rows {
                if u_inv.at(r, i).is_zero() {
                    continue;
                }
                let t = u_inv.at(r, j).add(&q.mul(u_inv.at(r, i)));
                u_inv.set(r, j, t);
            }
        }
    }

    /// col_j -= q · col_i
    fn col_sub(&mut self, j: usize, q: &UPoly, i: usize) {
        if q.is_zero() {
            return;
        }
        for r in 0..self.a.rows {
            if self.a.at(r, i).is_zero() {
                continue;
            }
            let t = self.a.at(r, j).sub(&q.mul(self.a.at(r, i)));
            self.a.set(r, j, t);
        }
        if let Some(v) = &mut self.v {
            for r in 0..v.rows {
                if v.at(r, i).is_zero() {
                    continue;
                }
                let t = v.at(r, j).sub(&q.mul(v.at(r, i)));
                v.set(r, j, t);
            }
        }
        // Inverse op on v_inv: row_i += q·row_j.
        if let Some(v_inv) = &mut self.v_inv {
            for c in 0..v_inv.cols {
                if v_inv.at(j, c).is_zero() {
                    continue;
                }
                let t = v_inv.at(i, c).add(&q.mul(v_inv.at(j, c)));
                v_inv.set(i, c, t);
            }
        }
    }

    /// col_i += col_j
    fn col_add(&mut self, i: usize, j: usize) {
        for r in 0..self.a.rows {
            if self.a.at(r, j).is_zero() {
                continue;
            }
            let t = self.a.at(r, i).add(self.a.at(r, j));
            self.a.set(r, i, t);
        }
        if let Some(v) = &mut self.v {
            for r in 0..v.rows {
                if v.at(r, j).is_zero() {
                    continue;
                }
                let t = v.at(r, i).add(v.at(r, j));
                v.set(r, i, t);
            }
        }
        // Inverse op on v_inv: row_j -= row_i.
        if let Some(v_inv) = &mut self.v_inv {
            for c in 0..v_inv.cols {
                if v_inv.at(i, c).is_zero() {
                    continue;
                }
                let t = v_inv.at(j, c).sub(v_inv.at(i, c));
                v_inv.set(j, c, t);
            }
        }
    }

    fn make_pivot_monic(&mut self, t: usize) {
        let lead = self.a.at(t, t).leading_coeff();
        if !lead.is_zero() && !lead.is_one() {
            let inv = Rat::one() / lead;
            self.row_scale(t, &inv);
        }
    }

    /// row_i *= c (nonzero rational)
    fn row_scale(&mut self, i: usize, c: &Rat) {
        for col in 0..self.a.cols {
            if self.a.at(i, col).is_zero() {
                continue;
            }
            let t = self.a.at(i, col).scale(c);
            self.a.set(i, col, t);
        }
        if let Some(u) = &mut self.u {
            for col in 0..u.cols {
                if u.at(i, col).is_zero() {
                    continue;
                }
                let t = u.at(i, col).scale(c);
                u.set(i, col, t);
            }
        }
        if let Some(u_inv) = &mut self.u_inv {
            let inv = Rat::one() / c.clone();
            for r in 0..u_inv.rows {
                if u_inv.at(r, i).is_zero() {
                    continue;
                }
                let t = u_inv.at(r, i).scale(&inv);
                u_inv.set(r, i, t);
            }
        }
    }

    /// Clears row `t` and column `t` down to the pivot at `(t, t)`, running
    /// remainder cascades until the pivot divides its whole row and column.
    /// The pivot is kept monic throughout.
    fn clear_at(&mut self, t: usize) {
        'clear: loop {
            for i in (0..self.a.rows).filter(|&i| i != t) {
                if self.a.at(i, t).is_zero() {
                    continue;
                }
                let (q, r) = self.a.at(i, t).div_rem(self.a.at(t, t));
                self.row_sub(i, &q, t);
                if !r.is_zero() {
                    self.swap_rows(t, i);
                    self.make_pivot_monic(t);
                    continue 'clear;
                }
            }
            for j in (0..self.a.cols).filter(|&j| j != t) {
                if self.a.at(t, j).is_zero() {
                    continue;
                }
                let (q, r) = self.a.at(t, j).div_rem(self.a.at(t, t));
                self.col_sub(j, &q, t);
                if !r.is_zero() {
                    self.swap_cols(t, j);
                    self.make_pivot_monic(t);
                    continue 'clear;
                }
            }
            return;
        }
    }

    /// Diagonalization followed by the pairwise divisibility repair.
    fn run(&mut self) {
        let steps = self.a.rows.min(self.a.cols);
        let mut rank = 0;
        for t in 0..steps {
            let mut pivot: Option<(usize, u64, usize, usize)> = None; // (deg, bits, i, j)
            for i in t..self.a.rows {
                for j in t..self.a.cols {
                    if let Some(d) = self.a.at(i, j).degree() {
                        let bits = self.a.at(i, j).coeff_bits();
                        if pivot.is_none_or(|(pd, pb, _, _)| (d, bits) < (pd, pb)) {
                            pivot = Some((d, bits, i, j));
                        }
                    }
                }
            }
            let Some((_, _, pi, pj)) = pivot else { break };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            self.make_pivot_monic(t);
            self.clear_at(t);
            rank = t + 1;
        }
        // Repair the divisibility chain: fold the later diagonal entry into
        // the earlier column and rediagonalize the 2x2 block, which replaces
        // (a, b) by (gcd, lcm) up to units.
        loop {
            let mut fixed = true;
            for i in 0..rank.saturating_sub(1) {
                if self.a.at(i, i).divides(self.a.at(i + 1, i + 1)) {
                    continue;
                }
                fixed = false;
                self.col_add(i, i + 1);
                self.clear_at(i);
                self.make_pivot_monic(i + 1);
                self.clear_at(i + 1);
            }
            if fixed {
                break;
            }
        }
    }
}

/// Smith normal form over `Q[u]` with all four transforms. Pivots are chosen
/// by minimal degree, ties broken by coefficient size and then by position.
/// The matrix is first diagonalized; the divisibility chain is then repaired
/// by pairwise gcd/lcm steps on the diagonal, which keeps the transforms
/// small.
pub fn smith_normal_form(m: &UPolyMatrix) -> SmithDecomposition {
    let mut w = SnfWorker::new(m, true, true);
    w.run();
    SmithDecomposition {
        s: w.a,
        u: w.u.unwrap(),
        v: w.v.unwrap(),
        u_inv: w.u_inv.unwrap(),
        v_inv: w.v_inv.unwrap(),
    }
}

/// Smith normal form tracking only the column transform and its inverse;
/// enough to read kernels and rewrite images in kernel coordinates.
pub struct ColumnSmith {
    pub s: UPolyMatrix,
    pub v: UPolyMatrix,
    pub v_inv: UPolyMatrix,
}

impl ColumnSmith {
    pub fn invariant_factors(&self) -> Vec<UPoly> {
        let n = self.s.rows.min(self.s.cols);
        (0..n)
            .map(|i| self.s.at(i, i).clone())
            .filter(|d| !d.is_zero())
            .collect()
    }
}

pub fn smith_with_columns(m: &UPolyMatrix) -> ColumnSmith {
    let mut w = SnfWorker::new(m, false, true);
    w.run();
    ColumnSmith {
        s: w.a,
        v: w.v.unwrap(),
        v_inv: w.v_inv.unwrap(),
    }
}

/// Invariant factors alone, with no transform bookkeeping.
pub fn smith_invariant_factors(m: &UPolyMatrix) -> Vec<UPoly> {
    let mut w = SnfWorker::new(m, false, false);
    w.run();
    let n = w.a.rows.min(w.a.cols);
    (0..n)
        .map(|i| w.a.at(i, i).clone())
        .filter(|d| !d.is_zero())
        .collect()
}

/// Structure of the finitely presented module `Q[u]^r / im(presentation)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleReport {
    /// Rank of the free part.
    pub free_rank: usize,
    /// Nonunit invariant factors, monic, in divisibility order.
    pub torsion: Vec<UPoly>,
    /// `u`-adic valuations of the torsion invariants that vanish at `u = 0`.
    pub u_torsion_orders: Vec<usize>,
    /// Rank after inverting `u`: the free rank plus the pure-`u`-power
    /// torsion, i.e. the rank over `Q[u, u^-1]`.
    pub generic_rank: usize,
}

impl ModuleReport {
    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }
}

/// Reads rank and torsion of `Q[u]^ambient_rank / im(presentation)` off the
/// Smith normal form. The presentation must have `ambient_rank` rows.
pub fn module_report(presentation: &UPolyMatrix, ambient_rank: usize) -> ModuleReport {
    assert_eq!(
        presentation.rows, ambient_rank,
        "presentation rows must match the ambient rank"
    );
    let invariants = smith_invariant_factors(presentation);
    let free_rank = ambient_rank - invariants.len();
    let torsion: Vec<UPoly> = invariants
        .into_iter()
        .filter(|d| !d.is_unit())
        .collect();
    let u_torsion_orders: Vec<usize> = torsion
        .iter()
        .filter_map(|d| d.u_valuation().filter(|&v| v >= 1))
        .collect();
    let generic_rank = free_rank + torsion.iter().filter(|d| d.is_pure_u_power()).count();
    ModuleReport {
        free_rank,
        torsion,
        u_torsion_orders,
        generic_rank,
    }
}

/// Outcome of cross-validating fiber-dimension constancy against freeness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasicuVerdict {
    /// Fiber dimensions agree at every sampled point, in every degree.
    pub constant_dims: bool,
    /// No torsion invariant factor in any degree.
    pub free: bool,
    /// The two criteria agree.
    pub consistent: bool,
    pub discrepancies: Vec<String>,
}

/// Cross-validates the two equivalent finiteness criteria on data from a
/// common truncated complex: constancy of fiber dimensions across the sampled
/// `u_o` against freeness decided by Smith normal form. Reports any witness
/// for a disagreement, including torsion supported away from every sample.
pub fn basicu_check(
    samples: &[Rat],
    dims_per_sample: &[Vec<usize>],
    reports_per_degree: &[ModuleReport],
) -> BasicuVerdict {
    assert_eq!(samples.len(), dims_per_sample.len());
    let mut discrepancies = Vec::new();
    let mut constant_dims = true;
    if let Some(first) = dims_per_sample.first() {
        let degrees = first.len();
        for k in 0..degrees {
            let d0 = dims_per_sample[0][k];
            for (s, dims) in dims_per_sample.iter().enumerate().skip(1) {
                if dims[k] != d0 {
                    constant_dims = false;
                    discrepancies.push(alloc::format!(
                        "degree {k}: dim {} at u_o = {} but {} at u_o = {}",
                        d0,
                        samples[0],
                        dims[k],
                        samples[s]
                    ));
                }
            }
        }
    }
    let mut free = true;
    for (k, report) in reports_per_degree.iter().enumerate() {
        for d in &report.torsion {
            free = false;
            let seen_by_samples = samples.iter().any(|s| d.eval(s).is_zero());
            if seen_by_samples {
                discrepancies.push(alloc::format!(
                    "degree {k}: torsion invariant factor {}",
                    d.to_text()
                ));
            } else {
                discrepancies.push(alloc::format!(
                    "degree {k}: torsion invariant factor {} vanishes at no sampled u_o \
                     (sampling miss)",
                    d.to_text()
                ));
            }
        }
    }
    let consistent = constant_dims == free;
    BasicuVerdict {
        constant_dims,
        free,
        consistent,
        discrepancies,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat_int;

    fn up(coeffs: &[i64]) -> UPoly {
        UPoly::from_coeffs(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    fn check_snf(m: &UPolyMatrix) -> SmithDecomposition {
        let snf = smith_normal_form(m);
        // U·M·V = S exactly.
        assert_eq!(snf.u.mul(m).mul(&snf.v), snf.s, "U·M·V != S");
        // S diagonal with monic diagonal and successive divisibility.
        for i in 0..snf.s.rows {
            for j in 0..snf.s.cols {
                if i != j {
                    assert!(snf.s.at(i, j).is_zero(), "off-diagonal entry");
                }
            }
        }
        let inv = snf.invariant_factors();
        for d in &inv {
            assert!(d.is_monic());
        }
        for w in inv.windows(2) {
            assert!(w[0].divides(&w[1]), "divisibility chain broken");
        }
        // U, V unimodular: certified by the exact two-sided inverses, which
        // force det(U)·det(U_inv) = 1 in Q[u], hence constant determinants.
        assert_eq!(
            snf.u.mul(&snf.u_inv),
            UPolyMatrix::identity(m.rows),
            "u_inv is not the inverse of u"
        );
        assert_eq!(
            snf.v.mul(&snf.v_inv),
            UPolyMatrix::identity(m.cols),
            "v_inv is not the inverse of v"
        );
        snf
    }

    #[test]
    fn upoly_division() {
        let a = up(&[-1, 0, 1]); // u^2 - 1
        let b = up(&[-1, 1]); // u - 1
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, up(&[1, 1]));
        assert!(r.is_zero());
        let (q, r) = up(&[1, 0, 0, 2]).div_rem(&up(&[0, 1]));
        assert_eq!(q, up(&[0, 0, 2]));
        assert_eq!(r, up(&[1]));
    }

    #[test]
    fn upoly_text_round_trip() {
        assert_eq!(up(&[-1, 0, 1]).to_text(), "u^2 - 1");
        assert_eq!(UPoly::zero().to_text(), "0");
        assert_eq!(up(&[0, 1]).to_text(), "u");
    }

    #[test]
    fn snf_identity_and_diagonal() {
        let snf = check_snf(&UPolyMatrix::identity(2));
        assert_eq!(snf.s, UPolyMatrix::identity(2));

        let m = UPolyMatrix::from_rows(alloc::vec![
            alloc::vec![UPoly::monomial(rat_int(1), 1), UPoly::zero()],
            alloc::vec![UPoly::zero(), UPoly::monomial(rat_int(1), 2)],
        ]);
        let snf = check_snf(&m);
        assert_eq!(snf.s, m, "diag(u, u^2) is already in normal form");
    }

    #[test]
    fn snf_of_jordan_like_block() {
        // [[u, 1], [0, u]] has invariant factors (1, u^2).
        let m = UPolyMatrix::from_rows(alloc::vec![
            alloc::vec![up(&[0, 1]), up(&[1])],
            alloc::vec![UPoly::zero(), up(&[0, 1])],
        ]);
        let snf = check_snf(&m);
        assert_eq!(snf.invariant_factors(), alloc::vec![up(&[1]), up(&[0, 0, 1])]);
    }

    #[test]
    fn snf_permutation_invariance() {
        let m = UPolyMatrix::from_rows(alloc::vec![
            alloc::vec![up(&[0, 1]), up(&[1]), up(&[2, 1])],
            alloc::vec![UPoly::zero(), up(&[0, 1]), up(&[1, 1])],
            alloc::vec![up(&[3]), up(&[0, 0, 1]), up(&[1])],
        ]);
        let base = check_snf(&m).invariant_factors();
        // Swap two rows and two columns; invariant factors are unchanged.
        let mut p = m.clone();
        for c in 0..3 {
            let x = p.at(0, c).clone();
            let y = p.at(2, c).clone();
            p.set(0, c, y);
            p.set(2, c, x);
        }
        for r in 0..3 {
            let x = p.at(r, 1).clone();
            let y = p.at(r, 0).clone();
            p.set(r, 1, y);
            p.set(r, 0, x);
        }
        assert_eq!(check_snf(&p).invariant_factors(), base);
    }

    #[test]
    fn snf_randomized_identities() {
        let mut state = 0x5deece66du64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..100 {
            let rows = 1 + (next() % 6) as usize;
            let cols = 1 + (next() % 6) as usize;
            let mut m = UPolyMatrix::zero(rows, cols);
            for i in 0..rows {
                for j in 0..cols {
                    if next() % 2 == 0 {
                        let deg = (next() % 4) as usize;
                        let coeffs: Vec<Rat> =
                            (0..=deg).map(|_| rat_int((next() % 7) as i64 - 3)).collect();
                        m.set(i, j, UPoly::from_coeffs(coeffs));
                    }
                }
            }
            check_snf(&m);
        }
    }

    #[test]
    fn module_reports() {
        // Zero presentation on rank 3: free of rank 3.
        let r = module_report(&UPolyMatrix::zero(3, 1), 3);
        assert_eq!(r.free_rank, 3);
        assert!(r.is_free());
        assert_eq!(r.generic_rank, 3);

        // diag(u) on rank 1: pure u-torsion; rank 1 after inverting u.
        let m = UPolyMatrix::from_rows(alloc::vec![alloc::vec![up(&[0, 1])]]);
        let r = module_report(&m, 1);
        assert_eq!(r.free_rank, 0);
        assert_eq!(r.torsion, alloc::vec![up(&[0, 1])]);
        assert_eq!(r.u_torsion_orders, alloc::vec![1]);
        assert_eq!(r.generic_rank, 1);

        // [[u - 1]]: torsion supported away from u = 0.
        let m = UPolyMatrix::from_rows(alloc::vec![alloc::vec![up(&[-1, 1])]]);
        let r = module_report(&m, 1);
        assert_eq!(r.free_rank, 0);
        assert_eq!(r.torsion, alloc::vec![up(&[-1, 1])]);
        assert!(r.u_torsion_orders.is_empty());
        assert_eq!(r.generic_rank, 0);
    }

    #[test]
    fn basicu_consistent_cases() {
        let samples = alloc::vec![rat_int(0), rat_int(1), rat_int(-1)];
        // Constant dims and free: consistent.
        let dims = alloc::vec![alloc::vec![0, 1]; 3];
        let free = ModuleReport {
            free_rank: 1,
            torsion: Vec::new(),
            u_torsion_orders: Vec::new(),
            generic_rank: 1,
        };
        let v = basicu_check(&samples, &dims, &[free.clone(), free.clone()]);
        assert!(v.consistent && v.constant_dims && v.free);

        // Growing dims at u = 0 with u-torsion present: also consistent.
        let dims = alloc::vec![alloc::vec![5], alloc::vec![0], alloc::vec![0]];
        let torsion = ModuleReport {
            free_rank: 0,
            torsion: alloc::vec![up(&[0, 1])],
            u_torsion_orders: alloc::vec![1],
            generic_rank: 1,
        };
        let v = basicu_check(&samples, &dims, &[torsion]);
        assert!(v.consistent && !v.constant_dims && !v.free);
    }

    #[test]
    fn basicu_flags_sampling_miss() {
        // Torsion at u = 1 with samples that miss it: dims look constant but
        // the module is not free, so the verdict is inconsistent.
        let samples = alloc::vec![rat_int(0), rat_int(2), rat_int(-1)];
        let dims = alloc::vec![alloc::vec![1]; 3];
        let miss = ModuleReport {
            free_rank: 1,
            torsion: alloc::vec![up(&[-1, 1])],
            u_torsion_orders: Vec::new(),
            generic_rank: 1,
        };
        let v = basicu_check(&samples, &dims, &[miss]);
        assert!(!v.consistent);
        assert!(v
            .discrepancies
            .iter()
            .any(|d| d.contains("sampling miss")));
    }
}
