//! The graded quotient ring A = S/J: ambient ring plus homogeneous relations.
//!
//! The local ring of the theory is modeled as this standard graded algebra
//! with the irrelevant ideal playing the maximal ideal; every ideal or module
//! over A is represented by its S-preimage, with J appended implicitly before
//! any basis computation.

use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::freemod::{FreeModule, FreeVec};
use crate::groebner::{buchberger_ideal, GBasis};
use crate::poly::{Poly, Ring};

#[derive(Debug)]
struct RingSpecData {
    ring: Ring,
    quotient: Vec<Poly>,
    j_basis: OnceLock<GBasis>,
    dim: OnceLock<i64>,
}

#[derive(Debug, Clone)]
pub struct RingSpec(Arc<RingSpecData>);

impl PartialEq for RingSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.ring == other.0.ring && self.0.quotient == other.0.quotient)
    }
}
impl Eq for RingSpec {}

impl RingSpec {
    pub fn new(ring: Ring, quotient: Vec<Poly>) -> Result<Self> {
        let quotient: Vec<Poly> = quotient.into_iter().filter(|p| !p.is_zero()).collect();
        for (i, g) in quotient.iter().enumerate() {
            if g.ring() != &ring {
                return Err(Error::RingMismatch);
            }
            if !g.is_homogeneous() {
                let degs: Vec<u32> = g.terms().iter().map(|(m, _)| m.degree()).collect();
                return Err(Error::GradingError(format!(
                    "quotient generator {} is not homogeneous (term degrees {:?})",
                    i, degs
                )));
            }
        }
        Ok(RingSpec(Arc::new(RingSpecData {
            ring,
            quotient,
            j_basis: OnceLock::new(),
            dim: OnceLock::new(),
        })))
    }

    pub fn polynomial(ring: Ring) -> Self {
        RingSpec::new(ring, Vec::new()).expect("empty quotient is valid")
    }

    pub fn ring(&self) -> &Ring {
        &self.0.ring
    }

    pub fn quotient(&self) -> &[Poly] {
        &self.0.quotient
    }

    /// Reduced Gröbner basis of J, cached.
    pub fn j_basis(&self) -> Result<&GBasis> {
        if let Some(b) = self.0.j_basis.get() {
            return Ok(b);
        }
        let gb = buchberger_ideal(&self.0.quotient, &self.0.ring)?;
        Ok(self.0.j_basis.get_or_init(|| gb))
    }

    /// Generators `j * e_k` of J·F for a free module F, appended to every
    /// submodule before basis computations over A.
    pub fn quotient_module_gens(&self, module: &FreeModule) -> Vec<FreeVec> {
        let mut out = Vec::new();
        for k in 0..module.rank() {
            for j in &self.0.quotient {
                let mut v = module.zero_vec();
                v.comps[k] = j.clone();
                out.push(v);
            }
        }
        out
    }

    /// Krull dimension d = dim S/J, cached. Populated by `modalg`.
    pub fn dim(&self) -> Result<i64> {
        if let Some(d) = self.0.dim.get() {
            return Ok(*d);
        }
        let d = crate::modalg::dim_of_ideal(self, &[])?;
        Ok(*self.0.dim.get_or_init(|| d))
    }

    /// Quotient ring by an additional homogeneous element: S/(J + (x)).
    pub fn quotient_by(&self, x: &Poly) -> Result<RingSpec> {
        let mut q = self.0.quotient.clone();
        q.push(x.clone());
        RingSpec::new(self.0.ring.clone(), q)
    }
}
