//! Graded free modules, their element vectors, and module term orders.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::monomial::Monomial;
use crate::poly::{Poly, Ring};

/// A graded free module over the ambient ring: rank and degree shifts.
/// The degree of a term `x^a e_i` is `deg_w(x^a) + shifts[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeModule {
    pub ring: Ring,
    pub shifts: Vec<i64>,
}

impl FreeModule {
    pub fn new(ring: Ring, rank: usize) -> Self {
        FreeModule { ring, shifts: vec![0; rank] }
    }

    pub fn with_shifts(ring: Ring, shifts: Vec<i64>) -> Self {
        FreeModule { ring, shifts }
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    pub fn zero_vec(&self) -> FreeVec {
        FreeVec { comps: vec![self.ring.zero(); self.rank()] }
    }

    pub fn basis_vec(&self, i: usize) -> FreeVec {
        let mut v = self.zero_vec();
        v.comps[i] = self.ring.one();
        v
    }

    /// Wrap a polynomial as a rank-1 vector (ideals are rank-1 submodules).
    pub fn from_poly(&self, p: Poly) -> FreeVec {
        debug_assert_eq!(self.rank(), 1);
        FreeVec { comps: vec![p] }
    }
}

/// An element of a free module: one polynomial per component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeVec {
    pub comps: Vec<Poly>,
}

impl FreeVec {
    pub fn rank(&self) -> usize {
        self.comps.len()
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|p| p.is_zero())
    }

    pub fn add(&self, other: &FreeVec) -> Result<FreeVec> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch(self.rank(), other.rank()));
        }
        let comps = self
            .comps
            .iter()
            .zip(&other.comps)
            .map(|(a, b)| a.add(b))
            .collect::<Result<_>>()?;
        Ok(FreeVec { comps })
    }

    pub fn sub(&self, other: &FreeVec) -> Result<FreeVec> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> FreeVec {
        FreeVec { comps: self.comps.iter().map(|p| p.neg()).collect() }
    }

    pub fn term_mul(&self, mono: &Monomial, c: &Coeff) -> FreeVec {
        FreeVec { comps: self.comps.iter().map(|p| p.term_mul(mono, c)).collect() }
    }

    pub fn poly_mul(&self, f: &Poly) -> Result<FreeVec> {
        let comps = self.comps.iter().map(|p| p.mul(f)).collect::<Result<_>>()?;
        Ok(FreeVec { comps })
    }

    pub fn scalar_mul(&self, c: &Coeff) -> FreeVec {
        FreeVec { comps: self.comps.iter().map(|p| p.scalar_mul(c)).collect() }
    }

    /// Shifted degree when homogeneous; `Err` when components disagree.
    pub fn homogeneous_degree(&self, module: &FreeModule) -> Result<Option<i64>> {
        let mut deg: Option<i64> = None;
        for (i, p) in self.comps.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            let d = p.homogeneous_degree().ok_or_else(|| {
                Error::GradingError(format!("component {i} is not homogeneous"))
            })? as i64
                + module.shifts[i];
            match deg {
                None => deg = Some(d),
                Some(prev) if prev == d => {}
                Some(prev) => {
                    return Err(Error::GradingError(format!(
                        "components of mixed degrees {prev} and {d}"
                    )))
                }
            }
        }
        Ok(deg)
    }

    /// Max shifted term degree over all components (None for the zero vector).
    pub fn max_degree(&self, module: &FreeModule) -> Option<i64> {
        let mut out = None;
        for (i, p) in self.comps.iter().enumerate() {
            if let Some(d) = p.degree() {
                let d = d as i64 + module.shifts[i];
                out = Some(out.map_or(d, |m: i64| m.max(d)));
            }
        }
        out
    }

    /// Deterministic total compare for canonical sorting.
    pub fn cmp_canonical(&self, other: &FreeVec) -> Ordering {
        for (a, b) in self.comps.iter().zip(&other.comps) {
            let c = a.cmp_canonical(b);
            if c != Ordering::Equal {
                return c;
            }
        }
        Ordering::Equal
    }
}

/// Module term orders over the ring's active monomial order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModOrder {
    /// Term-over-position; monomial ties broken by lower component index.
    Top,
    /// Position blocks for syzygy extraction: every term in a component
    /// `< split` beats every term in a component `>= split`; TOP inside each
    /// block. An elimination order for the leading block.
    PosElim { split: usize },
}

impl ModOrder {
    pub fn cmp_terms(
        &self,
        ring: &Ring,
        a: (&Monomial, usize),
        b: (&Monomial, usize),
    ) -> Ordering {
        match self {
            ModOrder::Top => ring
                .cmp_mono(a.0, b.0)
                .then_with(|| b.1.cmp(&a.1)),
            ModOrder::PosElim { split } => {
                let ba = usize::from(a.1 >= *split);
                let bb = usize::from(b.1 >= *split);
                bb.cmp(&ba)
                    .then_with(|| ring.cmp_mono(a.0, b.0))
                    .then_with(|| b.1.cmp(&a.1))
            }
        }
    }
}

/// Leading term of a vector: (component, monomial, coefficient).
pub fn vec_lead<'a>(
    v: &'a FreeVec,
    ring: &Ring,
    ord: &ModOrder,
) -> Option<(usize, &'a Monomial, &'a Coeff)> {
    let mut best: Option<(usize, &Monomial, &Coeff)> = None;
    for (i, p) in v.comps.iter().enumerate() {
        if let Some((m, c)) = p.lead() {
            best = match best {
                None => Some((i, m, c)),
                Some((bi, bm, bc)) => {
                    if ord.cmp_terms(ring, (m, i), (bm, bi)) == Ordering::Greater {
                        Some((i, m, c))
                    } else {
                        Some((bi, bm, bc))
                    }
                }
            };
        }
    }
    best
}
