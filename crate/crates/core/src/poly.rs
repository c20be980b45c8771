//! The ambient polynomial ring S and sparse multivariate polynomials.
//!
//! A `Ring` fixes the coefficient field, the named variables, a positive
//! weight vector, and the active monomial order. Polynomials are immutable
//! term lists sorted strictly descending under that order.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Coeff, CoeffField};
use crate::monomial::{Monomial, MonomialOrder};

#[derive(Debug, PartialEq, Eq)]
pub struct RingData {
    pub field: CoeffField,
    pub vars: Vec<String>,
    pub weights: Vec<u32>,
    pub order: MonomialOrder,
}

/// Cheaply clonable handle to an immutable ring description.
#[derive(Debug, Clone)]
pub struct Ring(Arc<RingData>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}
impl Eq for Ring {}

impl Ring {
    pub fn new(
        field: CoeffField,
        vars: Vec<String>,
        weights: Vec<u32>,
        order: MonomialOrder,
    ) -> Result<Self> {
        if vars.len() != weights.len() {
            return Err(Error::ArityMismatch(vars.len(), weights.len()));
        }
        if weights.contains(&0) {
            return Err(Error::GradingError("weights must be positive".into()));
        }
        Ok(Ring(Arc::new(RingData { field, vars, weights, order })))
    }

    pub fn field(&self) -> &CoeffField {
        &self.0.field
    }
    pub fn vars(&self) -> &[String] {
        &self.0.vars
    }
    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }
    pub fn weights(&self) -> &[u32] {
        &self.0.weights
    }
    pub fn order(&self) -> &MonomialOrder {
        &self.0.order
    }

    /// Same ring with a different active order (polynomials must be re-sorted
    /// via `Poly::reorder`).
    pub fn with_order(&self, order: MonomialOrder) -> Ring {
        Ring(Arc::new(RingData {
            field: self.0.field.clone(),
            vars: self.0.vars.clone(),
            weights: self.0.weights.clone(),
            order,
        }))
    }

    pub fn cmp_mono(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.0.order.cmp_unchecked(a, b, &self.0.weights)
    }

    pub fn zero(&self) -> Poly {
        Poly { ring: self.clone(), terms: Vec::new() }
    }

    pub fn one(&self) -> Poly {
        Poly {
            ring: self.clone(),
            terms: vec![(Monomial::one(self.nvars()), self.field().one())],
        }
    }

    pub fn var(&self, i: usize) -> Poly {
        Poly {
            ring: self.clone(),
            terms: vec![(
                Monomial::var(i, self.nvars(), self.weights()),
                self.field().one(),
            )],
        }
    }

    pub fn constant(&self, n: i64) -> Poly {
        let c = self.field().from_i64(n);
        if self.field().is_zero(&c) {
            return self.zero();
        }
        Poly { ring: self.clone(), terms: vec![(Monomial::one(self.nvars()), c)] }
    }

    pub fn monomial(&self, exps: Vec<u32>) -> Poly {
        Poly {
            ring: self.clone(),
            terms: vec![(Monomial::new(exps, self.weights()), self.field().one())],
        }
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars().iter().position(|v| v == name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    ring: Ring,
    terms: Vec<(Monomial, Coeff)>,
}

impl Poly {
    /// Build from arbitrary (monomial, coefficient) pairs: merges duplicates,
    /// drops zeros, sorts descending.
    pub fn from_terms(ring: &Ring, terms: Vec<(Monomial, Coeff)>) -> Poly {
        let field = ring.field().clone();
        let mut map: HashMap<Vec<u32>, Coeff> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), ring.nvars());
            match map.entry(m.exps().to_vec()) {
                std::collections::hash_map::Entry::Occupied(mut e) => {
                    let s = field.add(e.get(), &c);
                    *e.get_mut() = s;
                }
                std::collections::hash_map::Entry::Vacant(e) => {
                    e.insert(c);
                }
            }
        }
        let mut out: Vec<(Monomial, Coeff)> = map
            .into_iter()
            .filter(|(_, c)| !field.is_zero(c))
            .map(|(e, c)| (Monomial::new(e, ring.weights()), c))
            .collect();
        out.sort_by(|a, b| ring.cmp_mono(&b.0, &a.0));
        Poly { ring: ring.clone(), terms: out }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }
    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<(&Monomial, &Coeff)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    fn check_ring(&self, other: &Poly) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        let field = self.ring.field();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match self.ring.cmp_mono(&self.terms[i].0, &other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = field.add(&self.terms[i].1, &other.terms[j].1);
                    if !field.is_zero(&c) {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Ok(Poly { ring: self.ring.clone(), terms: out })
    }

    pub fn neg(&self) -> Poly {
        let field = self.ring.field();
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), field.neg(c))).collect(),
        }
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.add(&other.neg())
    }

    pub fn scalar_mul(&self, c: &Coeff) -> Poly {
        let field = self.ring.field();
        if field.is_zero(c) {
            return self.ring.zero();
        }
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), field.mul(k, c))).collect(),
        }
    }

    /// Multiply by the single term `c * mono`. Preserves sortedness.
    pub fn term_mul(&self, mono: &Monomial, c: &Coeff) -> Poly {
        let field = self.ring.field();
        if field.is_zero(c) {
            return self.ring.zero();
        }
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.mul(mono), field.mul(k, c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        let field = self.ring.field().clone();
        let mut map: HashMap<Vec<u32>, Coeff> = HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = field.mul(ca, cb);
                match map.entry(m.exps().to_vec()) {
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        let s = field.add(e.get(), &c);
                        *e.get_mut() = s;
                    }
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                }
            }
        }
        let mut out: Vec<(Monomial, Coeff)> = map
            .into_iter()
            .filter(|(_, c)| !field.is_zero(c))
            .map(|(e, c)| (Monomial::new(e, self.ring.weights()), c))
            .collect();
        out.sort_by(|a, b| self.ring.cmp_mono(&b.0, &a.0));
        Ok(Poly { ring: self.ring.clone(), terms: out })
    }

    /// Normalize the lead coefficient to 1.
    pub fn monic(&self) -> Result<Poly> {
        match self.lead() {
            None => Ok(self.clone()),
            Some((_, c)) => {
                let inv = self.ring.field().inv(c)?;
                Ok(self.scalar_mul(&inv))
            }
        }
    }

    /// All terms share one weighted degree. Zero counts as homogeneous (no
    /// witnessed degree).
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.terms.first()?.0.degree();
        if self.terms.iter().all(|(m, _)| m.degree() == d) {
            Some(d)
        } else {
            None
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Re-sort into a ring that shares field/vars/weights but may use a
    /// different order.
    pub fn reorder(&self, target: &Ring) -> Poly {
        debug_assert_eq!(self.ring.vars(), target.vars());
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| target.cmp_mono(&b.0, &a.0));
        Poly { ring: target.clone(), terms }
    }

    /// Push the polynomial through a variable renaming into `target`:
    /// variable `i` of the source becomes variable `var_map[i]` of the target.
    pub fn map_vars(&self, target: &Ring, var_map: &[usize]) -> Poly {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = vec![0u32; target.nvars()];
                for (i, e) in m.exps().iter().enumerate() {
                    exps[var_map[i]] += e;
                }
                (Monomial::new(exps, target.weights()), c.clone())
            })
            .collect();
        Poly::from_terms(target, terms)
    }

    /// Substitute each variable by the given polynomial (all in `target`).
    pub fn substitute(&self, target: &Ring, images: &[Poly]) -> Result<Poly> {
        debug_assert_eq!(images.len(), self.ring.nvars());
        let mut acc = target.zero();
        for (m, c) in &self.terms {
            let mut t = target.constant(0).add(&Poly {
                ring: target.clone(),
                terms: vec![(Monomial::one(target.nvars()), c.clone())],
            })?;
            for (i, &e) in m.exps().iter().enumerate() {
                for _ in 0..e {
                    t = t.mul(&images[i])?;
                }
            }
            acc = acc.add(&t)?;
        }
        Ok(acc)
    }

    /// Exact division: returns `self / divisor` when the remainder is zero.
    pub fn div_exact(&self, divisor: &Poly) -> Result<Poly> {
        self.check_ring(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let field = self.ring.field().clone();
        let (dm, dc) = divisor.lead().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let dc_inv = field.inv(&dc)?;
        let mut rem = self.clone();
        let mut quot = self.ring.zero();
        while let Some((m, c)) = rem.lead().map(|(m, c)| (m.clone(), c.clone())) {
            if !dm.divides(&m) {
                return Err(Error::DomainError("inexact polynomial division".into()));
            }
            let qm = m.div(&dm);
            let qc = field.mul(&c, &dc_inv);
            let piece = Poly {
                ring: self.ring.clone(),
                terms: vec![(qm.clone(), qc.clone())],
            };
            quot = quot.add(&piece)?;
            rem = rem.sub(&divisor.term_mul(&qm, &qc))?;
        }
        Ok(quot)
    }

    /// Deterministic total compare for canonical sorting of generator lists.
    pub fn cmp_canonical(&self, other: &Poly) -> Ordering {
        let field = self.ring.field();
        for ((ma, ca), (mb, cb)) in self.terms.iter().zip(&other.terms) {
            let m = self.ring.cmp_mono(ma, mb);
            if m != Ordering::Equal {
                return m;
            }
            let c = field.cmp_elems(ca, cb);
            if c != Ordering::Equal {
                return c;
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }

    /// Canonical rendering in the instance-file syntax.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let field = self.ring.field();
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = field.is_display_negative(c);
            let c_abs = if neg { field.neg(c) } else { c.clone() };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let coeff_str = field.render(&c_abs);
            let mut factors: Vec<String> = Vec::new();
            for (vi, &e) in m.exps().iter().enumerate() {
                if e == 1 {
                    factors.push(self.ring.vars()[vi].clone());
                } else if e > 1 {
                    factors.push(format!("{}^{}", self.ring.vars()[vi], e));
                }
            }
            if factors.is_empty() {
                out.push_str(&coeff_str);
            } else if coeff_str == "1" {
                out.push_str(&factors.join("*"));
            } else {
                out.push_str(&coeff_str);
                out.push('*');
                out.push_str(&factors.join("*"));
            }
        }
        out
    }
}
