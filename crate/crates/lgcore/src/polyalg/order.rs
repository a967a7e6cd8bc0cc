use alloc::vec::Vec;
use core::cmp::Ordering;

use super::poly::Exponent;

/// A global monomial order: total, multiplicative, with 1 the smallest
/// monomial. Weighted variants take strictly positive integer weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    DegRevLex,
    Lex,
    WeightedDegRevLex(Vec<u64>),
}

impl MonomialOrder {
    /// Weighted total degree of an exponent vector (weights all 1 unless the
    /// order carries its own).
    pub fn weighted_degree(&self, exps: &[Exponent]) -> u64 {
        match self {
            MonomialOrder::WeightedDegRevLex(w) => {
                assert_eq!(w.len(), exps.len(), "weight vector length mismatch");
                exps.iter().zip(w).map(|(&e, &wi)| u64::from(e) * wi).sum()
            }
            _ => exps.iter().map(|&e| u64::from(e)).sum(),
        }
    }

    /// Compares two exponent vectors of equal length.
    pub fn cmp(&self, a: &[Exponent], b: &[Exponent]) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::DegRevLex | MonomialOrder::WeightedDegRevLex(_) => {
                let da = self.weighted_degree(a);
                let db = self.weighted_degree(b);
                match da.cmp(&db) {
                    Ordering::Equal => {
                        // Rightmost differing exponent, smaller wins.
                        for i in (0..a.len()).rev() {
                            match a[i].cmp(&b[i]) {
                                Ordering::Equal => continue,
                                Ordering::Less => return Ordering::Greater,
                                Ordering::Greater => return Ordering::Less,
                            }
                        }
                        Ordering::Equal
                    }
                    other => other,
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn degrevlex_is_degree_first() {
        let o = MonomialOrder::DegRevLex;
        // x^2 > xy > y^2 > x > y > 1 in two variables (x = first).
        assert_eq!(o.cmp(&[2, 0], &[1, 1]), Ordering::Greater);
        assert_eq!(o.cmp(&[1, 1], &[0, 2]), Ordering::Greater);
        assert_eq!(o.cmp(&[0, 2], &[1, 0]), Ordering::Greater);
        assert_eq!(o.cmp(&[1, 0], &[0, 1]), Ordering::Greater);
        assert_eq!(o.cmp(&[0, 1], &[0, 0]), Ordering::Greater);
        assert_eq!(o.cmp(&[1, 2], &[1, 2]), Ordering::Equal);
    }

    #[test]
    fn lex_ignores_degree() {
        let o = MonomialOrder::Lex;
        assert_eq!(o.cmp(&[1, 0], &[0, 5]), Ordering::Greater);
    }

    #[test]
    fn weighted_order_uses_weights() {
        let o = MonomialOrder::WeightedDegRevLex(vec![2, 3]);
        // wdeg(x^2) = 4 < wdeg(y^2) = 6.
        assert_eq!(o.cmp(&[2, 0], &[0, 2]), Ordering::Less);
        // 1 is smallest.
        assert_eq!(o.cmp(&[0, 0], &[1, 0]), Ordering::Less);
    }
}
