use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use super::poly::ExactPoly;
use crate::Rat;

/// Sign of the `df∧` part of the twisted differential `u·d ± df∧`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn apply(self, c: Rat) -> Rat {
        match self {
            Sign::Plus => c,
            Sign::Minus => -c,
        }
    }
}

/// Algebraic differential `k`-form with polynomial coefficients, stored
/// sparsely on the basis `dx_I` over strictly increasing index subsets `I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffForm {
    degree: usize,
    nvars: usize,
    components: BTreeMap<Vec<usize>, ExactPoly>,
}

impl DiffForm {
    pub fn zero(degree: usize, nvars: usize) -> Self {
        assert!(degree <= nvars, "form degree exceeds the number of variables");
        DiffForm {
            degree,
            nvars,
            components: BTreeMap::new(),
        }
    }

    /// A 0-form from a polynomial.
    pub fn from_poly(p: ExactPoly) -> Self {
        let nvars = p.nvars();
        let mut form = Self::zero(0, nvars);
        form.add_component(Vec::new(), p);
        form
    }

    /// `p · dx_I` for a strictly increasing index subset `I`.
    pub fn from_component(indices: Vec<usize>, p: ExactPoly) -> Self {
        let mut form = Self::zero(indices.len(), p.nvars());
        form.add_component(indices, p);
        form
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn components(&self) -> impl Iterator<Item = (&[usize], &ExactPoly)> {
        self.components.iter().map(|(i, p)| (i.as_slice(), p))
    }

    pub fn component(&self, indices: &[usize]) -> ExactPoly {
        self.components
            .get(indices)
            .cloned()
            .unwrap_or_else(|| ExactPoly::zero(self.nvars))
    }

    pub fn add_component(&mut self, indices: Vec<usize>, p: ExactPoly) {
        assert_eq!(indices.len(), self.degree, "component degree mismatch");
        assert!(
            indices.windows(2).all(|w| w[0] < w[1]),
            "index subset must be strictly increasing"
        );
        assert!(indices.iter().all(|&i| i < self.nvars));
        assert_eq!(p.nvars(), self.nvars);
        if p.is_zero() {
            return;
        }
        match self.components.entry(indices) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(p);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().add(&p);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree);
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (i, p) in other.components() {
            out.add_component(i.to_vec(), p.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.degree, self.nvars);
        }
        DiffForm {
            degree: self.degree,
            nvars: self.nvars,
            components: self
                .components
                .iter()
                .map(|(i, p)| (i.clone(), p.scale(c)))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&crate::rat_int(-1)))
    }
}

/// Inserts `j` into the increasing subset `I`, returning the resulting subset
/// and the sign of `dx_j ∧ dx_I`; `None` when `j ∈ I`.
fn insert_index(indices: &[usize], j: usize) -> Option<(Vec<usize>, i32)> {
    if indices.contains(&j) {
        return None;
    }
    let pos = indices.iter().take_while(|&&i| i < j).count();
    let mut out = Vec::with_capacity(indices.len() + 1);
    out.extend_from_slice(&indices[..pos]);
    out.push(j);
    out.extend_from_slice(&indices[pos..]);
    let sign = if pos % 2 == 0 { 1 } else { -1 };
    Some((out, sign))
}

/// Exterior derivative; raises the degree by one and squares to zero.
pub fn exterior_d(form: &DiffForm) -> DiffForm {
    let n = form.nvars();
    if form.degree() == n {
        return DiffForm::zero(n, n);
    }
    let mut out = DiffForm::zero(form.degree() + 1, n);
    for (indices, p) in form.components() {
        for j in 0..n {
            let dp = p.derivative(j);
            if dp.is_zero() {
                continue;
            }
            if let Some((subset, sign)) = insert_index(indices, j) {
                out.add_component(subset, dp.scale(&crate::rat_int(sign.into())));
            }
        }
    }
    out
}

/// Left wedge with `df`; raises the degree by one and squares to zero.
pub fn wedge_df(f: &ExactPoly, form: &DiffForm) -> DiffForm {
    let n = form.nvars();
    assert_eq!(f.nvars(), n);
    if form.degree() == n {
        return DiffForm::zero(n, n);
    }
    let mut out = DiffForm::zero(form.degree() + 1, n);
    for j in 0..n {
        let fj = f.derivative(j);
        if fj.is_zero() {
            continue;
        }
        for (indices, p) in form.components() {
            if let Some((subset, sign)) = insert_index(indices, j) {
                out.add_component(subset, fj.mul(p).scale(&crate::rat_int(sign.into())));
            }
        }
    }
    out
}

/// Differential form with coefficients in `Q[u]/u^N`, stored as the sequence
/// of `u`-power layers `0..N-1`. The truncation order is always explicit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UDiffForm {
    coeffs: Vec<DiffForm>,
}

impl UDiffForm {
    pub fn zero(degree: usize, nvars: usize, trunc: usize) -> Self {
        assert!(trunc >= 1, "truncation order must be at least 1");
        UDiffForm {
            coeffs: vec![DiffForm::zero(degree, nvars); trunc],
        }
    }

    /// Constant-in-`u` form at the given truncation order.
    pub fn from_form(form: DiffForm, trunc: usize) -> Self {
        let mut out = Self::zero(form.degree(), form.nvars(), trunc);
        out.coeffs[0] = form;
        out
    }

    pub fn from_layers(coeffs: Vec<DiffForm>) -> Self {
        assert!(!coeffs.is_empty());
        let degree = coeffs[0].degree();
        let nvars = coeffs[0].nvars();
        assert!(coeffs
            .iter()
            .all(|c| c.degree() == degree && c.nvars() == nvars));
        UDiffForm { coeffs }
    }

    pub fn trunc(&self) -> usize {
        self.coeffs.len()
    }

    pub fn degree(&self) -> usize {
        self.coeffs[0].degree()
    }

    pub fn nvars(&self) -> usize {
        self.coeffs[0].nvars()
    }

    pub fn layer(&self, p: usize) -> &DiffForm {
        &self.coeffs[p]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(DiffForm::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.trunc(), other.trunc());
        UDiffForm {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }
}

/// One application of `u·d + sign·df∧` modulo `u^N`; preserves the truncation
/// order and squares to zero mod `u^N`.
pub fn twisted_differential(f: &ExactPoly, form: &UDiffForm, sign: Sign) -> UDiffForm {
    let n = form.nvars();
    assert_eq!(f.nvars(), n);
    let trunc = form.trunc();
    let degree = (form.degree() + 1).min(n);
    let mut layers = Vec::with_capacity(trunc);
    for p in 0..trunc {
        let mut layer = wedge_df(f, form.layer(p));
        if sign == Sign::Minus {
            layer = layer.scale(&crate::rat_int(-1));
        }
        if p > 0 {
            layer = layer.add(&exterior_d(form.layer(p - 1)));
        }
        // Force the right degree even when both pieces vanish identically.
        if layer.degree() != degree {
            layer = DiffForm::zero(degree, n);
        }
        layers.push(layer);
    }
    UDiffForm::from_layers(layers)
}
