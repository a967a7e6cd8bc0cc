use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write as _;

use num_traits::{One, Signed, Zero};

use super::order::MonomialOrder;
use crate::Rat;

/// Exponent entry of a monomial.
pub type Exponent = u32;

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms map an exponent vector of length `nvars` to a nonzero coefficient;
/// zero coefficients are never stored, so structural equality is equality of
/// polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactPoly {
    terms: BTreeMap<Vec<Exponent>, Rat>,
    nvars: usize,
}

impl ExactPoly {
    pub fn zero(nvars: usize) -> Self {
        ExactPoly {
            terms: BTreeMap::new(),
            nvars,
        }
    }

    pub fn constant(c: Rat, nvars: usize) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(Rat::one(), nvars)
    }

    /// The variable `x_i`.
    pub fn var(i: usize, nvars: usize) -> Self {
        assert!(i < nvars);
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Self::monomial(exps, Rat::one())
    }

    pub fn monomial(exps: Vec<Exponent>, coeff: Rat) -> Self {
        let nvars = exps.len();
        let mut p = Self::zero(nvars);
        if !coeff.is_zero() {
            p.terms.insert(exps, coeff);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[Exponent], &Rat)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn coeff(&self, exps: &[Exponent]) -> Rat {
        self.terms.get(exps).cloned().unwrap_or_else(Rat::zero)
    }

    /// Total degree; zero polynomial reports 0.
    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    pub fn add_term(&mut self, exps: Vec<Exponent>, coeff: Rat) {
        assert_eq!(exps.len(), self.nvars, "exponent vector length mismatch");
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e.to_vec(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        ExactPoly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
            nvars: self.nvars,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        ExactPoly {
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
            nvars: self.nvars,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in self.terms() {
            for (eb, cb) in other.terms() {
                let exps: Vec<Exponent> =
                    ea.iter().zip(eb).map(|(&a, &b)| a + b).collect();
                out.add_term(exps, ca * cb);
            }
        }
        out
    }

    pub fn mul_monomial(&self, exps: &[Exponent], coeff: &Rat) -> Self {
        assert_eq!(exps.len(), self.nvars);
        if coeff.is_zero() {
            return Self::zero(self.nvars);
        }
        ExactPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let shifted: Vec<Exponent> =
                        e.iter().zip(exps).map(|(&a, &b)| a + b).collect();
                    (shifted, c * coeff)
                })
                .collect(),
            nvars: self.nvars,
        }
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut out = Self::one(self.nvars);
        while n > 0 {
            if n & 1 == 1 {
                out = out.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        out
    }

    /// Partial derivative with respect to `x_i`.
    pub fn derivative(&self, i: usize) -> Self {
        assert!(i < self.nvars);
        let mut out = Self::zero(self.nvars);
        for (e, c) in self.terms() {
            if e[i] == 0 {
                continue;
            }
            let mut exps = e.to_vec();
            exps[i] -= 1;
            out.add_term(exps, c * Rat::from_integer(e[i].into()));
        }
        out
    }

    /// Leading term under `order`; `None` for the zero polynomial.
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&[Exponent], &Rat)> {
        self.terms()
            .max_by(|(a, _), (b, _)| order.cmp(a, b))
    }

    /// Evaluate at a rational point.
    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.nvars);
        let mut total = Rat::zero();
        for (e, c) in self.terms() {
            let mut term = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    term *= x;
                }
            }
            total += term;
        }
        total
    }

    /// Renders in the grammar accepted by [`super::parse_poly`], with terms in
    /// descending degrevlex order; parsing the result gives back `self`.
    pub fn to_text(&self, vars: &[&str]) -> String {
        assert_eq!(vars.len(), self.nvars);
        if self.is_zero() {
            return String::from("0");
        }
        let order = MonomialOrder::DegRevLex;
        let mut terms: Vec<(&Vec<Exponent>, &Rat)> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| order.cmp(b, a));
        let mut out = String::new();
        for (idx, (exps, coeff)) in terms.iter().enumerate() {
            let negative = coeff.is_negative();
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else if negative {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mag = coeff.abs();
            let is_const = exps.iter().all(|&e| e == 0);
            let mut factors: Vec<String> = Vec::new();
            if is_const || !mag.is_one() {
                if mag.denom().is_one() {
                    factors.push(alloc::format!("{}", mag.numer()));
                } else {
                    factors.push(alloc::format!("{}/{}", mag.numer(), mag.denom()));
                }
            }
            for (i, &e) in exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(String::from(vars[i])),
                    _ => factors.push(alloc::format!("{}^{}", vars[i], e)),
                }
            }
            let _ = write!(out, "{}", factors.join("*"));
        }
        out
    }
}
