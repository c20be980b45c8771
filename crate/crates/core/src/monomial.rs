//! Monomials, weighted degrees, and global monomial orders.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exponent vector with its cached weighted total degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
    deg: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u32>, weights: &[u32]) -> Self {
        debug_assert_eq!(exps.len(), weights.len());
        let deg = exps.iter().zip(weights).map(|(e, w)| e * w).sum();
        Monomial { exps, deg }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars], deg: 0 }
    }

    pub fn var(i: usize, nvars: usize, weights: &[u32]) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial::new(exps, weights)
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    /// Weighted total degree (weights fixed at construction).
    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0 && self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a + b)
            .collect();
        Monomial { exps, deg: self.deg + other.deg }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.nvars() == other.nvars()
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// Componentwise quotient; caller must ensure divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a - b)
            .collect();
        Monomial { exps, deg: self.deg - other.deg }
    }

    pub fn lcm(&self, other: &Monomial, weights: &[u32]) -> Monomial {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        Monomial::new(exps, weights)
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// Global monomial orders. `Block { head }` is the elimination order whose
/// leading block is the first `head` variables (compared grevlex), used to
/// eliminate those variables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum MonomialOrder {
    Grevlex,
    Lex,
    Block { head: usize },
}

fn grevlex_tiebreak(a: &[u32], b: &[u32]) -> Ordering {
    // larger = smaller exponent at the last differing position
    for i in (0..a.len()).rev() {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

fn grevlex_cmp(ea: &[u32], eb: &[u32], weights: &[u32]) -> Ordering {
    let da: u64 = ea.iter().zip(weights).map(|(e, w)| *e as u64 * *w as u64).sum();
    let db: u64 = eb.iter().zip(weights).map(|(e, w)| *e as u64 * *w as u64).sum();
    da.cmp(&db).then_with(|| grevlex_tiebreak(ea, eb))
}

impl MonomialOrder {
    /// Compare two monomials. `weights` is the ambient weight vector; for the
    /// block order the block degrees are recomputed from the relevant slice.
    pub fn cmp(&self, a: &Monomial, b: &Monomial, weights: &[u32]) -> Result<Ordering> {
        if a.nvars() != b.nvars() {
            return Err(Error::ArityMismatch(a.nvars(), b.nvars()));
        }
        Ok(self.cmp_unchecked(a, b, weights))
    }

    pub fn cmp_unchecked(&self, a: &Monomial, b: &Monomial, weights: &[u32]) -> Ordering {
        match self {
            MonomialOrder::Grevlex => a
                .deg
                .cmp(&b.deg)
                .then_with(|| grevlex_tiebreak(&a.exps, &b.exps)),
            MonomialOrder::Lex => {
                for (x, y) in a.exps.iter().zip(&b.exps) {
                    match x.cmp(y) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Block { head } => {
                let h = *head;
                grevlex_cmp(&a.exps[..h], &b.exps[..h], &weights[..h])
                    .then_with(|| grevlex_cmp(&a.exps[h..], &b.exps[h..], &weights[h..]))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        let w = vec![1; exps.len()];
        Monomial::new(exps.to_vec(), &w)
    }

    #[test]
    fn cmp_reflexive() {
        let x = m(&[1, 0]);
        let w = [1, 1];
        assert_eq!(MonomialOrder::Grevlex.cmp(&x, &x, &w).unwrap(), Ordering::Equal);
    }

    #[test]
    fn grevlex_degree_two_table() {
        // textbook grevlex in k[x,y]: x^2 > xy > y^2
        let w = [1, 1];
        let x2 = m(&[2, 0]);
        let xy = m(&[1, 1]);
        let y2 = m(&[0, 2]);
        let ord = MonomialOrder::Grevlex;
        assert_eq!(ord.cmp(&x2, &xy, &w).unwrap(), Ordering::Greater);
        assert_eq!(ord.cmp(&xy, &y2, &w).unwrap(), Ordering::Greater);
        assert_eq!(ord.cmp(&x2, &y2, &w).unwrap(), Ordering::Greater);
    }

    #[test]
    fn lex_first_exponent_dominates() {
        // lex with x > y: x > y^3
        let w = [1, 1];
        let x = m(&[1, 0]);
        let y3 = m(&[0, 3]);
        assert_eq!(MonomialOrder::Lex.cmp(&x, &y3, &w).unwrap(), Ordering::Greater);
    }

    #[test]
    fn arity_mismatch_rejected() {
        let w = [1, 1];
        let a = m(&[1, 0]);
        let b = Monomial::new(vec![1, 0, 0], &[1, 1, 1]);
        assert!(matches!(
            MonomialOrder::Grevlex.cmp(&a, &b, &w),
            Err(Error::ArityMismatch(2, 3))
        ));
    }

    #[test]
    fn block_order_eliminates_head() {
        // any monomial containing the head variable beats any without it
        let w = [1, 1, 1];
        let ord = MonomialOrder::Block { head: 1 };
        let t = Monomial::new(vec![1, 0, 0], &w);
        let xy5 = Monomial::new(vec![0, 3, 2], &w);
        assert_eq!(ord.cmp(&t, &xy5, &w).unwrap(), Ordering::Greater);
    }

    #[test]
    fn product_quotient_round_trip() {
        let w = [1, 2, 1];
        let a = Monomial::new(vec![2, 1, 0], &w);
        let b = Monomial::new(vec![1, 1, 3], &w);
        let prod = a.mul(&b);
        assert_eq!(prod.degree(), a.degree() + b.degree());
        assert_eq!(prod.div(&b), a);
    }
}
