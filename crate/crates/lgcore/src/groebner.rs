//! Buchberger engine over the rationals: reduced Gröbner bases with exact
//! division records, Milnor algebras of Jacobian ideals, and the residue
//! functional on the socle that drives the duality pairing.
//!
//! Every basis element carries its expression in terms of the input
//! generators, so `p = nf(p) + Σ h_i·g_i` can be rewritten exactly over the
//! original ideal generators. That rewriting is what the Brieskorn reduction
//! consumes.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::polyalg::{ExactPoly, Exponent, MonomialOrder};
use crate::Rat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroebnerError {
    /// The Jacobian ideal is not zero-dimensional: infinitely many standard
    /// monomials, so no finite Milnor algebra exists.
    InfiniteMilnorNumber,
    /// The socle of the algebra is not one-dimensional, so no residue
    /// functional supported on a single basis class exists.
    SocleNotOneDimensional,
}

impl fmt::Display for GroebnerError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroebnerError::InfiniteMilnorNumber => {
                write!(f, "Jacobian ideal is not zero-dimensional")
            }
            GroebnerError::SocleNotOneDimensional => {
                write!(f, "socle is not one-dimensional")
            }
        }
    }
}

fn divides(a: &[Exponent], b: &[Exponent]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| x <= y)
}

fn exp_sub(a: &[Exponent], b: &[Exponent]) -> Vec<Exponent> {
    a.iter().zip(b).map(|(&x, &y)| x - y).collect()
}

fn exp_lcm(a: &[Exponent], b: &[Exponent]) -> Vec<Exponent> {
    a.iter().zip(b).map(|(&x, &y)| x.max(y)).collect()
}

/// A Gröbner basis together with the expression of each element in terms of
/// the input generators.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    generators: Vec<ExactPoly>,
    /// `generators[j] = Σ_i reps[j][i] · input[i]`, exactly.
    reps: Vec<Vec<ExactPoly>>,
    order: MonomialOrder,
    reduced: bool,
    nvars: usize,
}

impl GroebnerBasis {
    pub fn generators(&self) -> &[ExactPoly] {
        &self.generators
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn leading_monomials(&self) -> Vec<Vec<Exponent>> {
        self.generators
            .iter()
            .map(|g| g.leading_term(&self.order).unwrap().0.to_vec())
            .collect()
    }

    /// Ideal membership of 1, read off the leading monomials.
    pub fn is_unit_ideal(&self) -> bool {
        self.generators.iter().any(|g| {
            g.leading_term(&self.order)
                .is_some_and(|(e, _)| e.iter().all(|&x| x == 0))
        })
    }

    /// Re-checks the Buchberger criterion from scratch: every S-polynomial of
    /// the basis reduces to zero, and every input is in the ideal.
    pub fn verify(&self, inputs: &[ExactPoly]) -> bool {
        for i in 0..self.generators.len() {
            for j in i + 1..self.generators.len() {
                let s = s_polynomial(&self.generators[i], &self.generators[j], &self.order);
                if !normal_form(&s, self).is_zero() {
                    return false;
                }
            }
        }
        inputs.iter().all(|p| normal_form(p, self).is_zero())
    }
}

fn s_polynomial(a: &ExactPoly, b: &ExactPoly, order: &MonomialOrder) -> ExactPoly {
    let (lma, lca) = a.leading_term(order).expect("zero generator");
    let (lmb, lcb) = b.leading_term(order).expect("zero generator");
    let lcm = exp_lcm(lma, lmb);
    let qa = exp_sub(&lcm, lma);
    let qb = exp_sub(&lcm, lmb);
    let inv_a = Rat::one() / lca;
    let inv_b = Rat::one() / lcb;
    a.mul_monomial(&qa, &inv_a).sub(&b.mul_monomial(&qb, &inv_b))
}

/// Full multivariate division: returns `(nf, cofactors)` with
/// `p = nf + Σ cofactors[i]·gens[i]` exactly and no term of `nf` divisible by
/// any leading monomial of `gens`.
fn divide(
    p: &ExactPoly,
    gens: &[ExactPoly],
    order: &MonomialOrder,
) -> (ExactPoly, Vec<ExactPoly>) {
    let nvars = p.nvars();
    let mut remainder = ExactPoly::zero(nvars);
    let mut cofactors = vec![ExactPoly::zero(nvars); gens.len()];
    let leads: Vec<(Vec<Exponent>, Rat)> = gens
        .iter()
        .map(|g| {
            let (e, c) = g.leading_term(order).expect("zero generator in division");
            (e.to_vec(), c.clone())
        })
        .collect();
    let mut h = p.clone();
    'outer: while !h.is_zero() {
        let (lm, lc) = {
            let (e, c) = h.leading_term(order).unwrap();
            (e.to_vec(), c.clone())
        };
        for (idx, (ge, gc)) in leads.iter().enumerate() {
            if divides(ge, &lm) {
                let q_exps = exp_sub(&lm, ge);
                let q_coeff = &lc / gc;
                h = h.sub(&gens[idx].mul_monomial(&q_exps, &q_coeff));
                cofactors[idx].add_term(q_exps, q_coeff);
                continue 'outer;
            }
        }
        let mut lt = ExactPoly::zero(nvars);
        lt.add_term(lm, lc);
        remainder = remainder.add(&lt);
        h = h.sub(&lt);
    }
    (remainder, cofactors)
}

/// Normal form of `p` modulo a reduced basis: no term of the result is
/// divisible by any leading monomial, and `p - nf(p)` lies in the ideal.
pub fn normal_form(p: &ExactPoly, gb: &GroebnerBasis) -> ExactPoly {
    divide(p, &gb.generators, &gb.order).0
}

/// Division record against the basis generators; the identity
/// `p = nf + Σ h_i·g_i` holds exactly and is cheap to re-expand.
pub fn division_record(p: &ExactPoly, gb: &GroebnerBasis) -> (ExactPoly, Vec<ExactPoly>) {
    divide(p, &gb.generators, &gb.order)
}

/// Cofactors of `p - nf(p)` with respect to the *input* generators the basis
/// was computed from: `p = nf + Σ h_i·input[i]`.
pub fn division_record_inputs(
    p: &ExactPoly,
    gb: &GroebnerBasis,
    ninputs: usize,
) -> (ExactPoly, Vec<ExactPoly>) {
    let (nf, cofs) = divide(p, &gb.generators, &gb.order);
    let nvars = p.nvars();
    let mut h = vec![ExactPoly::zero(nvars); ninputs];
    for (j, c) in cofs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (i, hi) in h.iter_mut().enumerate() {
            let t = c.mul(&gb.reps[j][i]);
            *hi = hi.add(&t);
        }
    }
    (nf, h)
}

/// Buchberger's algorithm with the product and chain criteria; returns the
/// reduced basis (monic generators, no term divisible by another leading
/// monomial). Zero generators are dropped; the zero ideal yields an empty
/// basis.
pub fn buchberger(gens: &[ExactPoly], order: MonomialOrder) -> GroebnerBasis {
    assert!(!gens.is_empty(), "buchberger needs at least one generator");
    let nvars = gens[0].nvars();
    assert!(gens.iter().all(|g| g.nvars() == nvars));
    let ninputs = gens.len();

    let mut basis: Vec<ExactPoly> = Vec::new();
    let mut reps: Vec<Vec<ExactPoly>> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let mut rep = vec![ExactPoly::zero(nvars); ninputs];
        rep[i] = ExactPoly::one(nvars);
        basis.push(g.clone());
        reps.push(rep);
    }

    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            pending.insert((i, j));
        }
    }

    while let Some(&(i, j)) = pending.iter().next() {
        pending.remove(&(i, j));
        let (lmi, _) = basis[i].leading_term(&order).unwrap();
        let (lmj, _) = basis[j].leading_term(&order).unwrap();
        let lcm = exp_lcm(lmi, lmj);
        // Product criterion: coprime leading monomials.
        let product: Vec<Exponent> = lmi.iter().zip(lmj).map(|(&a, &b)| a + b).collect();
        if lcm == product {
            continue;
        }
        // Chain criterion: some k divides the lcm and both companion pairs
        // are already treated.
        let chain = (0..basis.len()).any(|k| {
            if k == i || k == j {
                return false;
            }
            let (lmk, _) = basis[k].leading_term(&order).unwrap();
            divides(lmk, &lcm)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], &order);
        let (nf, cofs) = divide(&s, &basis, &order);
        if nf.is_zero() {
            continue;
        }
        // Representation of the new element in terms of the inputs.
        let (lmi_e, lci) = basis[i].leading_term(&order).unwrap();
        let (lmj_e, lcj) = basis[j].leading_term(&order).unwrap();
        let qa = exp_sub(&lcm, lmi_e);
        let qb = exp_sub(&lcm, lmj_e);
        let inv_i = Rat::one() / lci;
        let inv_j = Rat::one() / lcj;
        let mut rep = vec![ExactPoly::zero(nvars); ninputs];
        for (t, slot) in rep.iter_mut().enumerate() {
            let mut r = reps[i][t].mul_monomial(&qa, &inv_i);
            r = r.sub(&reps[j][t].mul_monomial(&qb, &inv_j));
            for (k, c) in cofs.iter().enumerate() {
                if !c.is_zero() {
                    r = r.sub(&c.mul(&reps[k][t]));
                }
            }
            *slot = r;
        }
        basis.push(nf);
        reps.push(rep);
        let new = basis.len() - 1;
        for k in 0..new {
            pending.insert((k, new));
        }
    }

    interreduce(&mut basis, &mut reps, &order);

    GroebnerBasis {
        generators: basis,
        reps,
        order,
        reduced: true,
        nvars,
    }
}

fn interreduce(
    basis: &mut Vec<ExactPoly>,
    reps: &mut Vec<Vec<ExactPoly>>,
    order: &MonomialOrder,
) {
    // Discard generators whose leading monomial another one divides.
    loop {
        let mut remove: Option<usize> = None;
        'search: for a in 0..basis.len() {
            let (lma, _) = basis[a].leading_term(order).unwrap();
            for (b, other) in basis.iter().enumerate() {
                if a == b {
                    continue;
                }
                let (lmb, _) = other.leading_term(order).unwrap();
                if divides(lmb, lma) {
                    remove = Some(a);
                    break 'search;
                }
            }
        }
        match remove {
            Some(a) => {
                basis.remove(a);
                reps.remove(a);
            }
            None => break,
        }
    }
    // Fully reduce each generator against the others.
    let mut changed = true;
    while changed {
        changed = false;
        for a in 0..basis.len() {
            let others: Vec<ExactPoly> = basis
                .iter()
                .enumerate()
                .filter(|&(b, _)| b != a)
                .map(|(_, g)| g.clone())
                .collect();
            if others.is_empty() {
                break;
            }
            let (nf, cofs) = divide(&basis[a], &others, order);
            if nf != basis[a] {
                changed = true;
                let mut rep = reps[a].clone();
                let mut other_idx = 0;
                for (b, rep_b) in reps.iter().enumerate() {
                    if b == a {
                        continue;
                    }
                    let c = cofs[other_idx].clone();
                    other_idx += 1;
                    if c.is_zero() {
                        continue;
                    }
                    for (t, r) in rep.iter_mut().enumerate() {
                        *r = r.sub(&c.mul(&rep_b[t]));
                    }
                }
                basis[a] = nf;
                reps[a] = rep;
            }
        }
    }
    // Monic normalization.
    for (g, rep) in basis.iter_mut().zip(reps.iter_mut()) {
        let lc = g.leading_term(order).unwrap().1.clone();
        if !lc.is_one() {
            let inv = Rat::one() / lc;
            *g = g.scale(&inv);
            for r in rep.iter_mut() {
                *r = r.scale(&inv);
            }
        }
    }
    // Canonical ordering: ascending leading monomial.
    let mut idx: Vec<usize> = (0..basis.len()).collect();
    idx.sort_by(|&a, &b| {
        let (la, _) = basis[a].leading_term(order).unwrap();
        let (lb, _) = basis[b].leading_term(order).unwrap();
        order.cmp(la, lb)
    });
    let new_basis: Vec<ExactPoly> = idx.iter().map(|&i| basis[i].clone()).collect();
    let new_reps: Vec<Vec<ExactPoly>> = idx.iter().map(|&i| reps[i].clone()).collect();
    *basis = new_basis;
    *reps = new_reps;
}

/// The Milnor algebra `Q[x]/Jac(f)`: Jacobian Gröbner basis, the monomial
/// basis of standard monomials, and the Milnor number `mu`.
#[derive(Clone, Debug)]
pub struct MilnorAlgebra {
    f: ExactPoly,
    gb: GroebnerBasis,
    basis: Vec<Vec<Exponent>>,
    mu: usize,
}

impl MilnorAlgebra {
    pub fn f(&self) -> &ExactPoly {
        &self.f
    }

    pub fn gb(&self) -> &GroebnerBasis {
        &self.gb
    }

    /// Standard monomials in ascending degrevlex order; `basis()[0]` is `1`
    /// whenever `mu > 0`.
    pub fn basis(&self) -> &[Vec<Exponent>] {
        &self.basis
    }

    pub fn mu(&self) -> usize {
        self.mu
    }

    pub fn nvars(&self) -> usize {
        self.f.nvars()
    }

    pub fn nf(&self, p: &ExactPoly) -> ExactPoly {
        normal_form(p, &self.gb)
    }

    /// Writes `p = nf(p) + Σ h_i·∂f/∂x_i` exactly.
    pub fn express_in_jacobian(&self, p: &ExactPoly) -> (ExactPoly, Vec<ExactPoly>) {
        division_record_inputs(p, &self.gb, self.nvars())
    }

    /// Coordinates of `nf(p)` on the monomial basis.
    pub fn coordinates(&self, p: &ExactPoly) -> Vec<Rat> {
        let nf = self.nf(p);
        self.basis.iter().map(|m| nf.coeff(m)).collect()
    }

    /// Matrix of multiplication by `x_j` on the basis, one column per basis
    /// element.
    pub fn mult_matrix(&self, j: usize) -> crate::linalg::QMatrix {
        let mut m = crate::linalg::QMatrix::zero(self.mu, self.mu);
        for (col, mono) in self.basis.iter().enumerate() {
            let mut exps = mono.clone();
            exps[j] += 1;
            let p = ExactPoly::monomial(exps, Rat::one());
            for (row, v) in self.coordinates(&p).into_iter().enumerate() {
                m.set(row, col, v);
            }
        }
        m
    }
}

/// Computes the Milnor algebra of `f`, failing with
/// [`GroebnerError::InfiniteMilnorNumber`] when the Jacobian ideal is not
/// zero-dimensional.
pub fn milnor_algebra(f: &ExactPoly) -> Result<MilnorAlgebra, GroebnerError> {
    let n = f.nvars();
    let jacobian: Vec<ExactPoly> = (0..n).map(|i| f.derivative(i)).collect();
    if jacobian.iter().all(ExactPoly::is_zero) {
        return Err(GroebnerError::InfiniteMilnorNumber);
    }
    let gb = buchberger(&jacobian, MonomialOrder::DegRevLex);
    if gb.is_unit_ideal() {
        return Ok(MilnorAlgebra {
            f: f.clone(),
            gb,
            basis: Vec::new(),
            mu: 0,
        });
    }
    let leads = gb.leading_monomials();
    // Zero-dimensional iff a pure power of each variable leads some element;
    // those powers bound the standard monomials.
    let mut bounds = vec![0u32; n];
    for i in 0..n {
        let mut best: Option<u32> = None;
        for lm in &leads {
            if lm.iter().enumerate().all(|(k, &e)| k == i || e == 0) && lm[i] > 0 {
                best = Some(best.map_or(lm[i], |b: u32| b.min(lm[i])));
            }
        }
        match best {
            Some(b) => bounds[i] = b,
            None => return Err(GroebnerError::InfiniteMilnorNumber),
        }
    }
    let mut basis: Vec<Vec<Exponent>> = Vec::new();
    let mut stack = vec![Vec::with_capacity(n)];
    while let Some(partial) = stack.pop() {
        if partial.len() == n {
            if !leads.iter().any(|lm| divides(lm, &partial)) {
                basis.push(partial);
            }
            continue;
        }
        let i = partial.len();
        for e in (0..bounds[i]).rev() {
            let mut next = partial.clone();
            next.push(e);
            stack.push(next);
        }
    }
    let order = MonomialOrder::DegRevLex;
    basis.sort_by(|a, b| order.cmp(a, b));
    let mu = basis.len();
    Ok(MilnorAlgebra {
        f: f.clone(),
        gb,
        basis,
        mu,
    })
}

/// The residue functional on the basis span: zero on every basis class except
/// the socle class, normalized so the hessian determinant class maps to `mu`.
#[derive(Clone, Debug)]
pub struct ResidueFunctional {
    /// Value on each basis monomial, aligned with `MilnorAlgebra::basis`.
    values: Vec<Rat>,
    socle_index: usize,
}

impl ResidueFunctional {
    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    pub fn socle_index(&self) -> usize {
        self.socle_index
    }

    /// Applies the functional to the class of `p`.
    pub fn eval(&self, ma: &MilnorAlgebra, p: &ExactPoly) -> Rat {
        ma.coordinates(p)
            .into_iter()
            .zip(&self.values)
            .map(|(c, v)| c * v)
            .sum()
    }
}

/// Hessian determinant of `f`, by cofactor expansion.
pub fn hessian_det(f: &ExactPoly) -> ExactPoly {
    let n = f.nvars();
    let mut second = Vec::with_capacity(n);
    for i in 0..n {
        let fi = f.derivative(i);
        second.push((0..n).map(|j| fi.derivative(j)).collect::<Vec<_>>());
    }
    poly_det(&second, &(0..n).collect::<Vec<_>>(), n)
}

fn poly_det(m: &[Vec<ExactPoly>], cols: &[usize], nvars: usize) -> ExactPoly {
    let row = m.len() - cols.len();
    if cols.is_empty() {
        return ExactPoly::one(nvars);
    }
    let mut det = ExactPoly::zero(nvars);
    for (k, &j) in cols.iter().enumerate() {
        if m[row][j].is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&c| c != j).collect();
        let minor = poly_det(m, &rest, nvars);
        let term = m[row][j].mul(&minor);
        det = if k % 2 == 0 { det.add(&term) } else { det.sub(&term) };
    }
    det
}

/// Builds the residue functional of a finite Milnor algebra.
///
/// The socle is the joint kernel of multiplication by every variable; it must
/// be one-dimensional and is spanned by the hessian class.
pub fn residue_functional(ma: &MilnorAlgebra) -> Result<ResidueFunctional, GroebnerError> {
    let n = ma.nvars();
    let mu = ma.mu();
    assert!(mu > 0, "residue functional of the zero algebra");
    let mut stacked = crate::linalg::QMatrix::zero(mu * n, mu);
    for j in 0..n {
        let mj = ma.mult_matrix(j);
        for r in 0..mu {
            for c in 0..mu {
                stacked.set(j * mu + r, c, mj.at(r, c).clone());
            }
        }
    }
    let socle_dim = mu - stacked.rank();
    if socle_dim != 1 {
        return Err(GroebnerError::SocleNotOneDimensional);
    }
    let hess = ma.nf(&hessian_det(ma.f()));
    if hess.is_zero() {
        return Err(GroebnerError::SocleNotOneDimensional);
    }
    // The largest basis monomial with a nonzero hessian coefficient is the
    // socle representative.
    let order = MonomialOrder::DegRevLex;
    let coords = ma.coordinates(&hess);
    let socle_index = (0..mu)
        .filter(|&i| !coords[i].is_zero())
        .max_by(|&a, &b| order.cmp(&ma.basis()[a], &ma.basis()[b]))
        .expect("nonzero hessian class");
    let mut values = vec![Rat::zero(); mu];
    values[socle_index] = Rat::from_integer((mu as i64).into()) / coords[socle_index].clone();
    Ok(ResidueFunctional {
        values,
        socle_index,
    })
}

/// Renders a monomial for diagnostics in higher layers.
pub fn describe_monomial(exps: &[Exponent], vars: &[&str]) -> String {
    ExactPoly::monomial(exps.to_vec(), Rat::one()).to_text(vars)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::parse_poly;
    use crate::{rat, rat_int};

    fn p(text: &str, vars: &[&str]) -> ExactPoly {
        parse_poly(text, vars).unwrap()
    }

    fn gb_of(texts: &[&str], vars: &[&str]) -> GroebnerBasis {
        let gens: Vec<ExactPoly> = texts.iter().map(|t| p(t, vars)).collect();
        buchberger(&gens, MonomialOrder::DegRevLex)
    }

    #[test]
    fn already_reduced_basis_is_kept() {
        let gb = gb_of(&["x^2", "y"], &["x", "y"]);
        assert_eq!(gb.generators().len(), 2);
        assert_eq!(gb.generators()[0], p("y", &["x", "y"]));
        assert_eq!(gb.generators()[1], p("x^2", &["x", "y"]));
    }

    #[test]
    fn linear_elimination() {
        let gb = gb_of(&["x + y", "x - y"], &["x", "y"]);
        let gens = gb.generators();
        assert_eq!(gens.len(), 2);
        assert!(gens.contains(&p("x", &["x", "y"])));
        assert!(gens.contains(&p("y", &["x", "y"])));
    }

    #[test]
    fn cusp_jacobian_basis() {
        let gb = gb_of(&["3*x^2", "-2*y"], &["x", "y"]);
        let gens = gb.generators();
        assert_eq!(gens.len(), 2);
        assert!(gens.contains(&p("x^2", &["x", "y"])));
        assert!(gens.contains(&p("y", &["x", "y"])));
    }

    #[test]
    fn normal_forms() {
        let gb = gb_of(&["x^2", "y"], &["x", "y"]);
        assert!(normal_form(&p("x^3", &["x", "y"]), &gb).is_zero());
        assert_eq!(
            normal_form(&p("x*y + x", &["x", "y"]), &gb),
            p("x", &["x", "y"])
        );
        assert!(normal_form(&p("(x+y)^2", &["x", "y"]), &gb).is_zero());
    }

    #[test]
    fn normal_form_is_idempotent_and_linear() {
        let vars = ["x", "y"];
        let gb = gb_of(&["x^2 + y", "y^3"], &vars);
        let a = p("x^5 - 2*x*y + 1", &vars);
        let b = p("x^2*y^2 + 3*y", &vars);
        let na = normal_form(&a, &gb);
        assert_eq!(normal_form(&na, &gb), na);
        let sum_nf = normal_form(&a.add(&b), &gb);
        assert_eq!(sum_nf, na.add(&normal_form(&b, &gb)));
        let scaled = normal_form(&a.scale(&rat(3, 7)), &gb);
        assert_eq!(scaled, na.scale(&rat(3, 7)));
    }

    #[test]
    fn division_records_recombine() {
        let vars = ["x", "y"];
        let gb = gb_of(&["x^2", "y"], &vars);
        for text in ["x^2", "x^2*y", "x^5 - 3*x*y + 7", "1/2*x^3*y^2 + x"] {
            let q = p(text, &vars);
            let (nf, h) = division_record(&q, &gb);
            let mut total = nf.clone();
            for (hi, gi) in h.iter().zip(gb.generators()) {
                total = total.add(&hi.mul(gi));
            }
            assert_eq!(total, q, "recombination failed for {text}");
        }
        let (nf, h) = division_record(&p("x^2", &vars), &gb);
        assert!(nf.is_zero());
        // Basis is sorted ascending: [y, x^2].
        assert_eq!(h[0], ExactPoly::zero(2));
        assert_eq!(h[1], ExactPoly::one(2));
    }

    #[test]
    fn unit_ideal_division() {
        let gb = gb_of(&["1"], &["x"]);
        let (nf, h) = division_record(&p("1", &["x"]), &gb);
        assert!(nf.is_zero());
        assert_eq!(h, alloc::vec![ExactPoly::one(1)]);
    }

    #[test]
    fn input_cofactors_recombine() {
        let vars = ["x", "y"];
        let f = p("x^3 + x*y^3", &vars);
        let ma = milnor_algebra(&f).unwrap();
        for text in ["x^5", "x^2*y^2 - y^4", "x^3 + x*y^3"] {
            let q = p(text, &vars);
            let (nf, h) = ma.express_in_jacobian(&q);
            let mut total = nf;
            for (i, hi) in h.iter().enumerate() {
                total = total.add(&hi.mul(&f.derivative(i)));
            }
            assert_eq!(total, q, "jacobian recombination failed for {text}");
        }
    }

    #[test]
    fn buchberger_criterion_postcheck() {
        let vars = ["x", "y"];
        let cases: [&[&str]; 3] = [
            &["x^2 + y", "x*y - 1"],
            &["3*x^2 + y^3", "3*x*y^2"],
            &["x^3 - 1", "y^2 - x"],
        ];
        for gens in cases {
            let inputs: Vec<ExactPoly> = gens.iter().map(|t| p(t, &vars)).collect();
            let gb = buchberger(&inputs, MonomialOrder::DegRevLex);
            assert!(gb.verify(&inputs), "criterion failed for {gens:?}");
        }
    }

    #[test]
    fn milnor_numbers() {
        let vars = ["x", "y"];
        let ma = milnor_algebra(&p("x^3 - y^2", &vars)).unwrap();
        assert_eq!(ma.mu(), 2);
        assert_eq!(ma.basis(), &[alloc::vec![0, 0], alloc::vec![1, 0]]);

        let ma = milnor_algebra(&p("x*y", &vars)).unwrap();
        assert_eq!(ma.mu(), 1);
        assert_eq!(ma.basis(), &[alloc::vec![0, 0]]);

        for a in 2..=6u32 {
            for b in 2..=6u32 {
                let f = p(&alloc::format!("x^{a} + y^{b}"), &vars);
                let ma = milnor_algebra(&f).unwrap();
                assert_eq!(ma.mu() as u32, (a - 1) * (b - 1), "mu(x^{a}+y^{b})");
            }
        }
    }

    #[test]
    fn non_isolated_and_degenerate_cases() {
        assert_eq!(
            milnor_algebra(&p("x*y*z", &["x", "y", "z"])).unwrap_err(),
            GroebnerError::InfiniteMilnorNumber
        );
        assert_eq!(
            milnor_algebra(&ExactPoly::zero(1)).unwrap_err(),
            GroebnerError::InfiniteMilnorNumber
        );
        // f = x has an empty Milnor algebra (unit Jacobian ideal).
        let ma = milnor_algebra(&p("x", &["x"])).unwrap();
        assert_eq!(ma.mu(), 0);
    }

    #[test]
    fn hessian_determinants() {
        let vars = ["x", "y"];
        assert_eq!(hessian_det(&p("x^3 - y^2", &vars)), p("-12*x", &vars));
        assert_eq!(hessian_det(&p("x^2", &["x"])), p("2", &["x"]));
        assert_eq!(hessian_det(&p("x*y", &vars)), p("-1", &vars));
    }

    #[test]
    fn residue_functional_normalization() {
        // f = x^2: hessian = 2, mu = 1, so the class of 1 maps to 1/2.
        let ma = milnor_algebra(&p("x^2", &["x"])).unwrap();
        let lambda = residue_functional(&ma).unwrap();
        assert_eq!(lambda.eval(&ma, &p("1", &["x"])), rat(1, 2));

        // f = x^3 - y^2: hessian = -12x, mu = 2, so x maps to 2/(-12) = -1/6
        // and 1 (not in the socle) maps to 0.
        let vars = ["x", "y"];
        let ma = milnor_algebra(&p("x^3 - y^2", &vars)).unwrap();
        let lambda = residue_functional(&ma).unwrap();
        assert_eq!(lambda.eval(&ma, &p("x", &vars)), rat(-1, 6));
        assert_eq!(lambda.eval(&ma, &p("1", &vars)), rat_int(0));
        assert_eq!(lambda.socle_index(), 1);
    }

    #[test]
    fn residue_pairing_is_symmetric_and_nondegenerate() {
        let vars = ["x", "y"];
        for text in ["x^3 - y^2", "x^2*y + y^3", "x^3 + y^4", "x^3 + x*y^3"] {
            let f = p(text, &vars);
            let ma = milnor_algebra(&f).unwrap();
            let lambda = residue_functional(&ma).unwrap();
            let mu = ma.mu();
            let mut gram = crate::linalg::QMatrix::zero(mu, mu);
            for i in 0..mu {
                for j in 0..mu {
                    let a = ExactPoly::monomial(ma.basis()[i].clone(), rat_int(1));
                    let b = ExactPoly::monomial(ma.basis()[j].clone(), rat_int(1));
                    gram.set(i, j, lambda.eval(&ma, &a.mul(&b)));
                }
            }
            for i in 0..mu {
                for j in 0..mu {
                    assert_eq!(gram.at(i, j), gram.at(j, i), "symmetry in {text}");
                }
            }
            assert!(!gram.det().is_zero(), "degenerate pairing for {text}");
        }
    }
}
