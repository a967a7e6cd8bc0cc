//! Finite matrix models of the twisted de Rham complex `(Ω•[u], u·d ± df∧)`.
//!
//! Polynomial degree is truncated by a window that grows with the form degree
//! just enough to contain every image term, so the stored complex is an
//! honest subcomplex of the full one: `M_{k+1}·M_k = 0` holds exactly, over
//! `Q[u]` and in every `u`-truncated layer.
//!
//! Fiber dimensions at a specialized `u_o` are estimated with two windows:
//! cocycles live in a base window while coboundaries are generated from a
//! larger source window and intersected back. Those estimates converge to
//! the dimensions of the full complex from below and are declared stable
//! once two consecutive rungs of the degree ladder agree; every verdict is
//! explicitly "at truncation".

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::cu_linalg::{module_report, smith_with_columns, ModuleReport, UPoly, UPolyMatrix};
use crate::groebner::milnor_algebra;
use crate::linalg::QMatrix;
use crate::polyalg::{exterior_d, wedge_df, DiffForm, ExactPoly, Exponent, Sign};
use crate::Rat;

use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DerhamError {
    /// The critical locus is not zero-dimensional, so the Koszul cohomology
    /// is infinite-dimensional.
    NonIsolatedCritical,
}

impl fmt::Display for DerhamError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DerhamError::NonIsolatedCritical => write!(f, "critical locus is not isolated"),
        }
    }
}

/// Degree increment of `u·d + df∧`: `deg f - 1` when `df != 0`, else `-1`
/// (only `d` acts, and it lowers total degree).
fn degree_shift(f: &ExactPoly) -> i64 {
    let d = f.total_degree() as i64;
    if d == 0 {
        -1
    } else {
        d - 1
    }
}

fn monomials_up_to(nvars: usize, bound: i64) -> Vec<Vec<Exponent>> {
    if bound < 0 {
        return Vec::new();
    }
    let bound = bound as u32;
    let mut out = Vec::new();
    let mut stack = vec![Vec::with_capacity(nvars)];
    while let Some(partial) = stack.pop() {
        if partial.len() == nvars {
            out.push(partial);
            continue;
        }
        let used: u32 = partial.iter().sum();
        for e in (0..=(bound - used)).rev() {
            let mut next = partial.clone();
            next.push(e);
            stack.push(next);
        }
    }
    out.sort();
    out
}

fn subsets(nvars: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, nvars: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..nvars {
            current.push(i);
            rec(i + 1, nvars, k, current, out);
            current.pop();
        }
    }
    rec(0, nvars, k, &mut current, &mut out);
    out
}

/// Basis bookkeeping for polynomial `k`-forms of total degree at most
/// `bound`: one basis element per (index subset, monomial) pair.
#[derive(Clone, Debug)]
pub struct FormSpace {
    pub degree: usize,
    pub nvars: usize,
    pub bound: i64,
    pub subsets: Vec<Vec<usize>>,
    pub monomials: Vec<Vec<Exponent>>,
    index: alloc::collections::BTreeMap<(Vec<usize>, Vec<Exponent>), usize>,
}

impl FormSpace {
    pub fn new(degree: usize, nvars: usize, bound: i64) -> Self {
        let subsets = if degree <= nvars {
            subsets(nvars, degree)
        } else {
            Vec::new()
        };
        let monomials = monomials_up_to(nvars, bound);
        let mut index = alloc::collections::BTreeMap::new();
        let mut pos = 0;
        for s in &subsets {
            for m in &monomials {
                index.insert((s.clone(), m.clone()), pos);
                pos += 1;
            }
        }
        FormSpace {
            degree,
            nvars,
            bound,
            subsets,
            monomials,
            index,
        }
    }

    pub fn dim(&self) -> usize {
        self.subsets.len() * self.monomials.len()
    }

    pub fn index_of(&self, subset: &[usize], exps: &[Exponent]) -> Option<usize> {
        self.index.get(&(subset.to_vec(), exps.to_vec())).copied()
    }

    pub fn element(&self, idx: usize) -> (&[usize], &[Exponent]) {
        let per_subset = self.monomials.len();
        let s = idx / per_subset;
        let m = idx % per_subset;
        (&self.subsets[s], &self.monomials[m])
    }

    /// Total degree of the monomial carried by a basis element.
    pub fn element_degree(&self, idx: usize) -> u32 {
        self.element(idx).1.iter().sum()
    }
}

/// Sparse matrix stored column-wise; the workhorse format for the operator
/// matrices.
pub type SparseCols = Vec<Vec<(usize, Rat)>>;

fn sparse_to_dense(cols: &SparseCols, rows: usize) -> QMatrix {
    let mut m = QMatrix::zero(rows, cols.len());
    for (j, col) in cols.iter().enumerate() {
        for (i, v) in col {
            m.set(*i, j, v.clone());
        }
    }
    m
}

fn sparse_rank(cols: &SparseCols, rows: usize) -> usize {
    sparse_to_dense(cols, rows).rank()
}

/// Columns of the operator `c_d·d + c_f·df∧` from `source` into `target`.
/// Panics if an image term falls outside the target window, which cannot
/// happen when the windows honor [`degree_shift`].
fn operator_columns(
    f: &ExactPoly,
    source: &FormSpace,
    target: &FormSpace,
    c_d: &Rat,
    c_f: &Rat,
) -> SparseCols {
    let mut cols: SparseCols = Vec::with_capacity(source.dim());
    for idx in 0..source.dim() {
        let (subset, exps) = source.element(idx);
        let basis_form = DiffForm::from_component(
            subset.to_vec(),
            ExactPoly::monomial(exps.to_vec(), Rat::from_integer(1.into())),
        );
        let mut col: Vec<(usize, Rat)> = Vec::new();
        let mut push = |form: &DiffForm, scale: &Rat| {
            if scale.is_zero() {
                return;
            }
            for (s, poly) in form.components() {
                for (e, c) in poly.terms() {
                    let row = target
                        .index_of(s, e)
                        .expect("image term escapes the target window");
                    let v = c * scale;
                    match col.iter_mut().find(|(r, _)| *r == row) {
                        Some(entry) => entry.1 += v,
                        None => col.push((row, v)),
                    }
                }
            }
        };
        if !c_d.is_zero() {
            push(&exterior_d(&basis_form), c_d);
        }
        if !c_f.is_zero() {
            push(&wedge_df(f, &basis_form), c_f);
        }
        col.retain(|(_, v)| !v.is_zero());
        cols.push(col);
    }
    cols
}

/// Matrix model of `(Ω•/u^N, u·d ± df∧)` with polynomial degree bounded by
/// `dmax + k·degree_shift(f)` in form degree `k`. The growth of the window
/// with `k` makes the stored complex an honest subcomplex: no image term is
/// ever dropped.
#[derive(Clone, Debug)]
pub struct TruncatedComplex {
    f: ExactPoly,
    sign: Sign,
    trunc_u: usize,
    dmax: u32,
    spaces: Vec<FormSpace>,
    /// `d` restricted to the window of degree `k`, mapping into degree `k+1`.
    d_cols: Vec<SparseCols>,
    /// `df∧` restricted likewise (sign not applied).
    wedge_cols: Vec<SparseCols>,
}

impl TruncatedComplex {
    /// Builds the model; `trunc_u >= 1` and `dmax >= deg f` are required.
    pub fn build(f: &ExactPoly, trunc_u: usize, dmax: u32, sign: Sign) -> TruncatedComplex {
        assert!(trunc_u >= 1, "u-truncation order must be at least 1");
        assert!(
            i64::from(dmax) >= f.total_degree() as i64,
            "degree bound below deg f"
        );
        let n = f.nvars();
        let shift = degree_shift(f);
        let spaces: Vec<FormSpace> = (0..=n)
            .map(|k| FormSpace::new(k, n, i64::from(dmax) + k as i64 * shift))
            .collect();
        let one = crate::rat_int(1);
        let zero = Rat::zero();
        let mut d_cols = Vec::new();
        let mut wedge_cols = Vec::new();
        for k in 0..n {
            d_cols.push(operator_columns(f, &spaces[k], &spaces[k + 1], &one, &zero));
            wedge_cols.push(operator_columns(f, &spaces[k], &spaces[k + 1], &zero, &one));
        }
        TruncatedComplex {
            f: f.clone(),
            sign,
            trunc_u,
            dmax,
            spaces,
            d_cols,
            wedge_cols,
        }
    }

    pub fn f(&self) -> &ExactPoly {
        &self.f
    }

    pub fn nvars(&self) -> usize {
        self.f.nvars()
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn trunc_u(&self) -> usize {
        self.trunc_u
    }

    pub fn dmax(&self) -> u32 {
        self.dmax
    }

    pub fn space(&self, k: usize) -> &FormSpace {
        &self.spaces[k]
    }

    /// Documented basis counting: `binom(n, k) · #monomials(window k) · N`.
    pub fn u_basis_size(&self, k: usize) -> usize {
        self.spaces[k].dim() * self.trunc_u
    }

    /// The differential as a matrix over `Q` on the `u`-truncated basis,
    /// columns indexed by (u-power, form index) with the u-power outermost:
    /// the `df∧` part stays in its layer, the `u·d` part moves one layer up.
    pub fn u_matrix(&self, k: usize) -> SparseCols {
        let n = self.nvars();
        let src_dim = self.spaces[k].dim();
        let mut cols: SparseCols = vec![Vec::new(); src_dim * self.trunc_u];
        if k >= n {
            return cols;
        }
        let tgt_dim = self.spaces[k + 1].dim();
        let _ = tgt_dim;
        for p in 0..self.trunc_u {
            for j in 0..src_dim {
                let col = &mut cols[p * src_dim + j];
                for (i, v) in &self.wedge_cols[k][j] {
                    col.push((p * self.spaces[k + 1].dim() + i, self.sign.apply(v.clone())));
                }
                if p + 1 < self.trunc_u {
                    for (i, v) in &self.d_cols[k][j] {
                        col.push(((p + 1) * self.spaces[k + 1].dim() + i, v.clone()));
                    }
                }
            }
        }
        cols
    }

    /// The differential `u·D_k ± F_k` as a matrix over `Q[u]`.
    pub fn upoly_matrix(&self, k: usize) -> UPolyMatrix {
        let n = self.nvars();
        let src = self.spaces[k].dim();
        if k >= n {
            return UPolyMatrix::zero(0, src);
        }
        let mut m = UPolyMatrix::zero(self.spaces[k + 1].dim(), src);
        for (j, col) in self.wedge_cols[k].iter().enumerate() {
            for (i, v) in col {
                m.set(*i, j, UPoly::constant(self.sign.apply(v.clone())));
            }
        }
        for (j, col) in self.d_cols[k].iter().enumerate() {
            for (i, v) in col {
                let cur = m.at(*i, j).add(&UPoly::monomial(v.clone(), 1));
                m.set(*i, j, cur);
            }
        }
        m
    }

    /// The differential specialized at `u = u_o`, over `Q`.
    pub fn q_matrix_at(&self, k: usize, u_o: &Rat) -> SparseCols {
        let n = self.nvars();
        let src = self.spaces[k].dim();
        let mut cols: SparseCols = vec![Vec::new(); src];
        if k >= n {
            return cols;
        }
        for (j, col) in cols.iter_mut().enumerate() {
            for (i, v) in &self.wedge_cols[k][j] {
                col.push((*i, self.sign.apply(v.clone())));
            }
            for (i, v) in &self.d_cols[k][j] {
                let w = v * u_o;
                match col.iter_mut().find(|(r, _)| *r == *i) {
                    Some(entry) => entry.1 += w,
                    None => col.push((*i, w)),
                }
            }
            col.retain(|(_, v)| !v.is_zero());
        }
        cols
    }

    /// Exact check that consecutive `u`-truncated matrices compose to zero.
    pub fn verify_d_squared(&self) -> bool {
        let n = self.nvars();
        for k in 0..n.saturating_sub(1) {
            let a = self.u_matrix(k);
            let b = self.u_matrix(k + 1);
            for col in &a {
                let mut composed: alloc::collections::BTreeMap<usize, Rat> =
                    alloc::collections::BTreeMap::new();
                for (i, v) in col {
                    for (r, w) in &b[*i] {
                        let entry = composed.entry(*r).or_insert_with(Rat::zero);
                        *entry += v * w;
                    }
                }
                if composed.values().any(|v| !v.is_zero()) {
                    return false;
                }
            }
        }
        true
    }

    /// Fiber dimensions of the stored subcomplex at `u = u_o` (plain
    /// kernel-over-image on the stored windows). Useful for comparing
    /// against the Smith normal form data, which describes the same
    /// subcomplex.
    pub fn subcomplex_fiber_dims(&self, u_o: &Rat) -> Vec<usize> {
        let n = self.nvars();
        let mut ranks = vec![0usize; n + 1];
        for (k, slot) in ranks.iter_mut().enumerate().take(n) {
            let cols = self.q_matrix_at(k, u_o);
            *slot = sparse_rank(&cols, self.spaces[k + 1].dim());
        }
        let mut dims = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let kernel = if k < n {
                self.spaces[k].dim() - ranks[k]
            } else {
                self.spaces[k].dim()
            };
            let image = if k > 0 { ranks[k - 1] } else { 0 };
            dims.push(kernel - image);
        }
        dims
    }

    /// Two-window fiber dimension estimates at `u = u_o` for the full
    /// complex; see [`fiber_cohomology_dims`].
    pub fn fiber_cohomology_dims(&self, u_o: &Rat) -> Vec<usize> {
        fiber_cohomology_dims(&self.f, self.sign, self.dmax, u_o)
    }

    /// Presentations of `H^k` of the stored subcomplex as `Q[u]`-modules:
    /// `(presentation matrix, ambient rank)` per degree. Kernels come from
    /// the Smith normal form of the outgoing differential; the image of the
    /// incoming differential is rewritten in kernel coordinates.
    pub fn presentations(&self) -> Vec<(UPolyMatrix, usize)> {
        let n = self.nvars();
        let mut out = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let incoming = if k > 0 {
                Some(self.upoly_matrix(k - 1))
            } else {
                None
            };
            if k == n {
                // Top degree: the cokernel of the incoming map.
                let ambient = self.spaces[n].dim();
                let pres = incoming.unwrap_or_else(|| UPolyMatrix::zero(ambient, 0));
                out.push((pres, ambient));
                continue;
            }
            let outgoing = self.upoly_matrix(k);
            let snf = smith_with_columns(&outgoing);
            let r = snf.invariant_factors().len();
            let ambient = self.spaces[k].dim() - r;
            match incoming {
                None => out.push((UPolyMatrix::zero(ambient, 0), ambient)),
                Some(inc) => {
                    let coords = snf.v_inv.mul(&inc);
                    // Rows below r must vanish: the image consists of cocycles.
                    for i in 0..r {
                        for j in 0..coords.cols {
                            assert!(
                                coords.at(i, j).is_zero(),
                                "incoming image is not contained in the kernel"
                            );
                        }
                    }
                    let mut pres = UPolyMatrix::zero(ambient, coords.cols);
                    for i in 0..ambient {
                        for j in 0..coords.cols {
                            pres.set(i, j, coords.at(r + i, j).clone());
                        }
                    }
                    out.push((pres, ambient));
                }
            }
        }
        out
    }

    /// Module structure of every `H^k` of the stored subcomplex.
    pub fn module_reports(&self) -> Vec<ModuleReport> {
        self.presentations()
            .into_iter()
            .map(|(pres, ambient)| module_report(&pres, ambient))
            .collect()
    }
}

/// Two-window estimate of `dim H^k(Ω•, u_o·d ± df∧)` at truncation:
/// cocycles from the window `deg <= dmax`, coboundaries generated from
/// `deg <= dmax + deg f + 1` and intersected with the cocycle window.
/// Converges to the true dimensions from below as `dmax` grows.
pub fn fiber_cohomology_dims(f: &ExactPoly, sign: Sign, dmax: u32, u_o: &Rat) -> Vec<usize> {
    let n = f.nvars();
    let shift = degree_shift(f);
    let slack = f.total_degree() as i64 + 1;
    let window = i64::from(dmax);
    let c_f = sign.apply(crate::rat_int(1));
    let mut dims = Vec::with_capacity(n + 1);
    for k in 0..=n {
        // Kernel inside the base window.
        let kernel = if k == n {
            FormSpace::new(n, n, window).dim()
        } else {
            let source = FormSpace::new(k, n, window);
            let target = FormSpace::new(k + 1, n, window + shift);
            let cols = operator_columns_at(f, &source, &target, u_o, &c_f);
            source.dim() - sparse_rank(&cols, target.dim())
        };
        // Image from the enlarged window, intersected with the base window.
        let image = if k == 0 {
            0
        } else {
            let source = FormSpace::new(k - 1, n, window + slack);
            let target = FormSpace::new(k, n, window + slack + shift);
            let cols = operator_columns_at(f, &source, &target, u_o, &c_f);
            let full_rank = sparse_rank(&cols, target.dim());
            // Rows with monomial degree beyond the base window.
            let mut overflow: SparseCols = Vec::with_capacity(cols.len());
            for col in &cols {
                overflow.push(
                    col.iter()
                        .filter(|(i, _)| i64::from(target.element_degree(*i)) > window)
                        .cloned()
                        .collect(),
                );
            }
            let overflow_rank = sparse_rank(&overflow, target.dim());
            full_rank - overflow_rank
        };
        assert!(kernel >= image, "image escaped the kernel");
        dims.push(kernel - image);
    }
    dims
}

fn operator_columns_at(
    f: &ExactPoly,
    source: &FormSpace,
    target: &FormSpace,
    u_o: &Rat,
    c_f: &Rat,
) -> SparseCols {
    operator_columns(f, source, target, u_o, c_f)
}

/// Ladder of fiber-dimension estimates across several degree bounds and
/// sample points.
#[derive(Clone, Debug)]
pub struct FiberDimReport {
    pub samples: Vec<Rat>,
    /// The rungs actually computed (a prefix of the requested ladder when
    /// stabilization allows early exit).
    pub ladder: Vec<u32>,
    /// `dims[rung][sample][degree]`.
    pub dims: Vec<Vec<Vec<usize>>>,
    /// Per sample: the last two computed rungs agree in every degree.
    pub stabilized: Vec<bool>,
}

impl FiberDimReport {
    /// Stabilized dimensions for one sample.
    pub fn stabilized_dims(&self, sample: usize) -> Option<&[usize]> {
        if self.stabilized[sample] {
            self.dims.last().map(|rung| rung[sample].as_slice())
        } else {
            None
        }
    }

    pub fn all_stabilized(&self) -> bool {
        self.stabilized.iter().all(|&s| s)
    }

    /// True when every sample stabilized to the same dimension vector.
    pub fn constant_across_samples(&self) -> bool {
        if !self.all_stabilized() {
            return false;
        }
        let last = self.dims.last().expect("at least one rung");
        last.windows(2).all(|w| w[0] == w[1])
    }
}

/// Runs the fiber-dimension estimates along `ladder`, stopping early once
/// every sample has two consecutive agreeing rungs.
pub fn fiber_dims_ladder(
    f: &ExactPoly,
    sign: Sign,
    ladder: &[u32],
    samples: &[Rat],
) -> FiberDimReport {
    assert!(!ladder.is_empty());
    let mut dims: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut used = Vec::new();
    for &rung in ladder {
        let per_sample: Vec<Vec<usize>> = samples
            .iter()
            .map(|u_o| fiber_cohomology_dims(f, sign, rung, u_o))
            .collect();
        dims.push(per_sample);
        used.push(rung);
        if dims.len() >= 2 && dims[dims.len() - 1] == dims[dims.len() - 2] {
            break;
        }
    }
    let stabilized: Vec<bool> = (0..samples.len())
        .map(|s| dims.len() >= 2 && dims[dims.len() - 1][s] == dims[dims.len() - 2][s])
        .collect();
    FiberDimReport {
        samples: samples.to_vec(),
        ladder: used,
        dims,
        stabilized,
    }
}

/// Verdict of the degree-ladder torsion probe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TorsionVerdict {
    /// All samples stabilized to a common dimension vector.
    StableFreeLike { dims: Vec<usize> },
    /// Dimensions at `u_o = 0` grow strictly along the whole ladder while
    /// every nonzero sample stabilizes: the signature of `u`-torsion.
    TorsionGrowth { growing_degrees: Vec<usize> },
    Inconclusive,
}

/// Probes for the `u`-torsion pathology: compares the growth of fiber
/// dimensions at `u_o = 0` against the nonzero samples along the degree
/// ladder. The `u`-truncation ladder is used to sanity-check the matrix
/// model (`d² = 0` at each order).
pub fn torsion_growth_verdict(
    f: &ExactPoly,
    n_ladder: &[usize],
    dmax_ladder: &[u32],
) -> TorsionVerdict {
    assert!(n_ladder.len() >= 3 && dmax_ladder.len() >= 3, "ladders too short");
    assert!(
        n_ladder.windows(2).all(|w| w[0] < w[1])
            && dmax_ladder.windows(2).all(|w| w[0] < w[1]),
        "ladders must be strictly increasing"
    );
    for &trunc in n_ladder {
        let tc = TruncatedComplex::build(f, trunc, dmax_ladder[0], Sign::Plus);
        assert!(tc.verify_d_squared(), "d^2 != 0 in the truncated model");
    }
    let zero = Rat::zero();
    let nonzero: Vec<Rat> = [1i64, -1, 2].iter().map(|&v| crate::rat_int(v)).collect();
    let at_zero: Vec<Vec<usize>> = dmax_ladder
        .iter()
        .map(|&rung| fiber_cohomology_dims(f, Sign::Plus, rung, &zero))
        .collect();
    let nonzero_report = fiber_dims_ladder(f, Sign::Plus, dmax_ladder, &nonzero);

    let degrees = at_zero[0].len();
    let growing: Vec<usize> = (0..degrees)
        .filter(|&k| at_zero.windows(2).all(|w| w[0][k] < w[1][k]))
        .collect();
    let zero_stable = at_zero[at_zero.len() - 1] == at_zero[at_zero.len() - 2];

    if !growing.is_empty() && nonzero_report.all_stabilized() {
        return TorsionVerdict::TorsionGrowth {
            growing_degrees: growing,
        };
    }
    if zero_stable && nonzero_report.constant_across_samples() {
        let stable = at_zero.last().unwrap().clone();
        if nonzero_report
            .stabilized_dims(0)
            .is_some_and(|d| d == stable.as_slice())
        {
            return TorsionVerdict::StableFreeLike { dims: stable };
        }
    }
    TorsionVerdict::Inconclusive
}

/// Koszul cohomology dimensions of `(Ω•, df∧)` with the regular-sequence
/// certificate verified on truncations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoszulReport {
    /// `dim H^k` for `k = 0..=n`: zero below the top, `mu` on top.
    pub dims: Vec<usize>,
    /// Degree bound at which the sub-top vanishing was re-verified.
    pub verified_at_dmax: u32,
    /// The truncated ranks agreed with the regular-sequence prediction.
    pub vanishing_verified: bool,
}

/// Computes `dim H^k(Ω•, df∧)` for all `k`: the Jacobian ideal must be
/// zero-dimensional, the partials then form a regular sequence, and the only
/// cohomology is the Milnor algebra on top. The vanishing below the top is
/// re-verified on two truncation rungs.
pub fn koszul_dims(f: &ExactPoly) -> Result<KoszulReport, DerhamError> {
    let ma = milnor_algebra(f).map_err(|_| DerhamError::NonIsolatedCritical)?;
    let n = f.nvars();
    let mut dims = vec![0usize; n + 1];
    dims[n] = ma.mu();
    let zero = Rat::zero();
    let base = f.total_degree().max(1);
    let mut verified_at = base;
    let mut verified = false;
    for step in 0..2 {
        let rung = base + 2 * (step + 1);
        let est = fiber_cohomology_dims(f, Sign::Plus, rung, &zero);
        if est == dims {
            verified = true;
            verified_at = rung;
            break;
        }
        verified_at = rung;
    }
    Ok(KoszulReport {
        dims,
        verified_at_dmax: verified_at,
        vanishing_verified: verified,
    })
}
