//! Finitely presented graded modules over A = S/J: subquotient arithmetic,
//! Hilbert functions, length, dimension, depth, minimal generators, and
//! minimal free resolutions over S.
//!
//! Every graded dimension has two routes: counting standard monomials of the
//! initial module, and dense linear algebra on monomial bases. Low degrees
//! are always audited against the dense route.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::freemod::{vec_lead, FreeModule, FreeVec, ModOrder};
use crate::groebner::{buchberger_ideal, buchberger_module, intersect_modules, syzygies, GBasis};
use crate::linalg::RowSpace;
use crate::monomial::Monomial;
use crate::poly::Poly;
use crate::ringspec::RingSpec;

/// All exponent vectors of the given weighted degree, in a fixed order.
pub fn monomials_of_weighted_degree(weights: &[u32], d: u32) -> Vec<Vec<u32>> {
    fn rec(weights: &[u32], d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if weights.is_empty() {
            if d == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        let w = weights[0];
        let mut e = 0;
        while e * w <= d {
            prefix.push(e);
            rec(&weights[1..], d - e * w, prefix, out);
            prefix.pop();
            e += 1;
        }
    }
    let mut out = Vec::new();
    rec(weights, d, &mut Vec::new(), &mut out);
    out
}

/// Position-tagged monomial basis of a graded free module in one degree.
pub fn module_monomials(module: &FreeModule, e: i64) -> Vec<(usize, Vec<u32>)> {
    let mut out = Vec::new();
    for (i, &sh) in module.shifts.iter().enumerate() {
        let d = e - sh;
        if d < 0 {
            continue;
        }
        for m in monomials_of_weighted_degree(module.ring.weights(), d as u32) {
            out.push((i, m));
        }
    }
    out
}

fn coords_of_vec(
    v: &FreeVec,
    index: &HashMap<(usize, Vec<u32>), usize>,
    size: usize,
    spec: &RingSpec,
) -> Vec<Coeff> {
    let field = spec.ring().field();
    let mut row = vec![field.zero(); size];
    for (pos, p) in v.comps.iter().enumerate() {
        for (m, c) in p.terms() {
            let key = (pos, m.exps().to_vec());
            let idx = *index
                .get(&key)
                .expect("term of unexpected degree in dense coordinates");
            row[idx] = field.add(&row[idx], c);
        }
    }
    row
}

/// Split a vector into its homogeneous components (by shifted degree).
pub fn homogeneous_components(v: &FreeVec, module: &FreeModule) -> Vec<FreeVec> {
    let mut by_deg: HashMap<i64, FreeVec> = HashMap::new();
    for (pos, p) in v.comps.iter().enumerate() {
        for (m, c) in p.terms() {
            let d = m.degree() as i64 + module.shifts[pos];
            let entry = by_deg.entry(d).or_insert_with(|| module.zero_vec());
            let term = Poly::from_terms(&module.ring, vec![(m.clone(), c.clone())]);
            entry.comps[pos] = entry.comps[pos].add(&term).expect("same ring");
        }
    }
    let mut degs: Vec<i64> = by_deg.keys().copied().collect();
    degs.sort();
    degs.into_iter().map(|d| by_deg.remove(&d).unwrap()).collect()
}

/// A homogeneous submodule of a graded free module over A, represented by its
/// S-generators; J·F is appended implicitly before any basis computation.
#[derive(Debug, Clone)]
pub struct SubmoduleRep {
    spec: RingSpec,
    ambient: FreeModule,
    gens: Vec<FreeVec>,
    gb: OnceLock<GBasis>,
}

impl SubmoduleRep {
    pub fn new(spec: RingSpec, ambient: FreeModule, gens: Vec<FreeVec>) -> Result<Self> {
        let mut clean = Vec::new();
        for g in gens {
            if g.rank() != ambient.rank() {
                return Err(Error::RankMismatch(g.rank(), ambient.rank()));
            }
            if g.is_zero() {
                continue;
            }
            g.homogeneous_degree(&ambient)?;
            clean.push(g);
        }
        Ok(SubmoduleRep { spec, ambient, gens: clean, gb: OnceLock::new() })
    }

    pub fn zero(spec: RingSpec, ambient: FreeModule) -> Self {
        SubmoduleRep { spec, ambient, gens: Vec::new(), gb: OnceLock::new() }
    }

    pub fn full(spec: RingSpec, ambient: FreeModule) -> Self {
        let gens = (0..ambient.rank()).map(|i| ambient.basis_vec(i)).collect();
        SubmoduleRep { spec, ambient, gens, gb: OnceLock::new() }
    }

    pub fn ideal(spec: RingSpec, gens: &[Poly]) -> Result<Self> {
        let ambient = FreeModule::new(spec.ring().clone(), 1);
        let vecs = gens.iter().map(|p| ambient.from_poly(p.clone())).collect();
        SubmoduleRep::new(spec, ambient, vecs)
    }

    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }
    pub fn ambient(&self) -> &FreeModule {
        &self.ambient
    }
    pub fn gens(&self) -> &[FreeVec] {
        &self.gens
    }

    pub fn effective_gens(&self) -> Vec<FreeVec> {
        let mut out = self.gens.clone();
        out.extend(self.spec.quotient_module_gens(&self.ambient));
        out
    }

    pub fn gb(&self) -> Result<&GBasis> {
        if let Some(b) = self.gb.get() {
            return Ok(b);
        }
        let basis = buchberger_module(&self.effective_gens(), &self.ambient, ModOrder::Top)?;
        Ok(self.gb.get_or_init(|| basis))
    }

    pub fn contains(&self, v: &FreeVec) -> Result<bool> {
        self.gb()?.contains(v)
    }

    pub fn contains_submodule(&self, other: &SubmoduleRep) -> Result<bool> {
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equals(&self, other: &SubmoduleRep) -> Result<bool> {
        Ok(self.contains_submodule(other)? && other.contains_submodule(self)?)
    }

    pub fn sum(&self, other: &SubmoduleRep) -> Result<SubmoduleRep> {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        SubmoduleRep::new(self.spec.clone(), self.ambient.clone(), gens)
    }

    /// U ∩ V via the auxiliary-variable elimination trick.
    pub fn intersect(&self, other: &SubmoduleRep) -> Result<SubmoduleRep> {
        if self.ambient.rank() != other.ambient.rank() {
            return Err(Error::RankMismatch(self.ambient.rank(), other.ambient.rank()));
        }
        let raw = intersect_modules(&self.effective_gens(), &other.effective_gens(), &self.ambient)?;
        let mut gens = Vec::new();
        for v in raw {
            gens.extend(homogeneous_components(&v, &self.ambient));
        }
        let out = SubmoduleRep::new(self.spec.clone(), self.ambient.clone(), gens)?;
        #[cfg(debug_assertions)]
        {
            for g in &out.gens {
                debug_assert!(self.contains(g).unwrap(), "intersection not inside left side");
                debug_assert!(other.contains(g).unwrap(), "intersection not inside right side");
            }
        }
        Ok(out)
    }

    /// (self : x) = { w in F : x·w in self }. For x = 0 this is the whole
    /// ambient module by convention.
    pub fn colon_by(&self, x: &Poly) -> Result<SubmoduleRep> {
        if x.is_zero() {
            return Ok(SubmoduleRep::full(self.spec.clone(), self.ambient.clone()));
        }
        if !x.is_homogeneous() {
            return Err(Error::GradingError("colon by an inhomogeneous element".into()));
        }
        let r = self.ambient.rank();
        let mut columns: Vec<FreeVec> = (0..r)
            .map(|i| {
                let mut v = self.ambient.zero_vec();
                v.comps[i] = x.clone();
                v
            })
            .collect();
        let eff = self.effective_gens();
        columns.extend(eff.iter().cloned());
        let (_, syz) = syzygies(&columns, &self.ambient)?;
        let mut gens = Vec::new();
        for z in &syz {
            let head = FreeVec { comps: z.comps[..r].to_vec() };
            if !head.is_zero() {
                gens.extend(homogeneous_components(&head, &self.ambient));
            }
        }
        let out = SubmoduleRep::new(self.spec.clone(), self.ambient.clone(), gens)?;
        #[cfg(debug_assertions)]
        {
            for g in &out.gens {
                let xg = g.poly_mul(x).unwrap();
                debug_assert!(self.contains(&xg).unwrap(), "colon certificate failed");
            }
        }
        Ok(out)
    }

    /// The ideal { a in S : a·v in self }.
    pub fn colon_ideal_of(&self, v: &FreeVec) -> Result<Vec<Poly>> {
        let mut columns = vec![v.clone()];
        columns.extend(self.effective_gens());
        let (_, syz) = syzygies(&columns, &self.ambient)?;
        let mut out = Vec::new();
        for z in &syz {
            let p = &z.comps[0];
            if !p.is_zero() {
                out.push(p.clone());
            }
        }
        Ok(out)
    }

    /// Graded dimension of the submodule (with J·F appended) in one degree,
    /// counted from the initial module.
    pub fn dim_at_degree(&self, e: i64) -> Result<i64> {
        let gb = self.gb()?;
        let leads = gb.lead_terms();
        let mut count = 0i64;
        for (pos, exps) in module_monomials(&self.ambient, e) {
            let m = Monomial::new(exps, self.ambient.ring.weights());
            if leads.iter().any(|(p, lm)| *p == pos && lm.divides(&m)) {
                count += 1;
            }
        }
        Ok(count)
    }

    /// Same dimension by dense linear algebra on the monomial basis.
    pub fn dim_at_degree_dense(&self, e: i64) -> Result<i64> {
        let basis = module_monomials(&self.ambient, e);
        let index: HashMap<(usize, Vec<u32>), usize> = basis
            .iter()
            .enumerate()
            .map(|(i, k)| (k.clone(), i))
            .collect();
        let field = self.spec.ring().field().clone();
        let mut space = RowSpace::new(field, basis.len());
        for g in self.effective_gens() {
            let Some(dg) = g.homogeneous_degree(&self.ambient)? else { continue };
            if dg > e {
                continue;
            }
            for m in monomials_of_weighted_degree(self.ambient.ring.weights(), (e - dg) as u32) {
                let mono = Monomial::new(m, self.ambient.ring.weights());
                let mult = g.term_mul(&mono, &self.spec.ring().field().one());
                space.insert(coords_of_vec(&mult, &index, basis.len(), &self.spec));
            }
        }
        Ok(space.rank() as i64)
    }

    /// True when every generator already lies in J·F, i.e. the submodule is
    /// zero over A.
    pub fn is_zero_over_a(&self) -> Result<bool> {
        let jf = SubmoduleRep::new(self.spec.clone(), self.ambient.clone(), Vec::new())?;
        jf.contains_submodule(self)
    }
}

/// Exact graded dimensions of a subquotient for degrees 0..=cutoff, with the
/// eventual polynomial in the binomial basis when the tail stabilizes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertData {
    pub values: Vec<i64>,
    pub cutoff: i64,
    pub fitted: Option<crate::torpoly::PolyFit>,
}

/// Outcome of the finite-length decision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LengthResult {
    Finite(i64),
    Infinite,
}

/// Presentation of a module: minimal generators and their first syzygy.
#[derive(Debug, Clone)]
pub struct Presentation {
    /// Free cover with one basis element per minimal generator.
    pub free: FreeModule,
    /// Minimal generators as vectors of the original ambient module.
    pub min_gens: Vec<FreeVec>,
    /// Generators of the kernel of the cover (columns in `free`).
    pub syzygy: Vec<FreeVec>,
}

/// Minimal graded free resolution data over S.
#[derive(Debug, Clone)]
pub struct Resolution {
    /// Generator degrees at each homological step (step 0 = minimal generators).
    pub betti: Vec<Vec<i64>>,
    pub pd: usize,
    pub depth: i64,
    pub dim: i64,
    pub is_cm: bool,
    pub is_mcm_over_a: bool,
}

/// A finitely presented graded A-module as a subquotient U/V of a graded free
/// module (J·F implicit on both sides).
#[derive(Debug, Clone)]
pub struct ModuleRep {
    spec: RingSpec,
    ambient: FreeModule,
    num: SubmoduleRep,
    rel: SubmoduleRep,
    pres: OnceLock<Presentation>,
}

impl ModuleRep {
    /// Subquotient with explicit numerator and denominator; membership of the
    /// denominator generators in the numerator is verified.
    pub fn subquotient(
        spec: RingSpec,
        ambient: FreeModule,
        num_gens: Vec<FreeVec>,
        rel_gens: Vec<FreeVec>,
    ) -> Result<Self> {
        let num = SubmoduleRep::new(spec.clone(), ambient.clone(), num_gens)?;
        let rel = SubmoduleRep::new(spec.clone(), ambient.clone(), rel_gens)?;
        if !num.contains_submodule(&rel)? {
            return Err(Error::DomainError(
                "subquotient denominator is not contained in the numerator".into(),
            ));
        }
        Ok(ModuleRep { spec, ambient, num, rel, pres: OnceLock::new() })
    }

    /// Cokernel of the map with the given relation columns: U is the whole
    /// free module, so containment is automatic.
    pub fn coker(spec: RingSpec, ambient: FreeModule, rel_gens: Vec<FreeVec>) -> Result<Self> {
        let num = SubmoduleRep::full(spec.clone(), ambient.clone());
        let rel = SubmoduleRep::new(spec.clone(), ambient.clone(), rel_gens)?;
        Ok(ModuleRep { spec, ambient, num, rel, pres: OnceLock::new() })
    }

    /// The free module A^rank.
    pub fn free(spec: RingSpec, rank: usize) -> Result<Self> {
        let ambient = FreeModule::new(spec.ring().clone(), rank);
        ModuleRep::coker(spec, ambient, Vec::new())
    }

    /// The ring A itself as a module, or a cyclic quotient A/(gens).
    pub fn cyclic(spec: RingSpec, ideal_gens: &[Poly]) -> Result<Self> {
        let ambient = FreeModule::new(spec.ring().clone(), 1);
        let rels = ideal_gens
            .iter()
            .map(|p| ambient.from_poly(p.clone()))
            .collect();
        ModuleRep::coker(spec, ambient, rels)
    }

    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }
    pub fn ambient(&self) -> &FreeModule {
        &self.ambient
    }
    pub fn num(&self) -> &SubmoduleRep {
        &self.num
    }
    pub fn rel(&self) -> &SubmoduleRep {
        &self.rel
    }

    pub fn is_zero(&self) -> Result<bool> {
        self.rel.contains_submodule(&self.num)
    }

    pub fn hf_at(&self, e: i64) -> Result<i64> {
        Ok(self.num.dim_at_degree(e)? - self.rel.dim_at_degree(e)?)
    }

    /// Exact Hilbert function for degrees 0..=cutoff, audited against dense
    /// linear algebra in degrees <= min(cutoff, 4).
    pub fn hilbert_function(&self, cutoff: i64) -> Result<HilbertData> {
        let mut values = Vec::new();
        for e in 0..=cutoff {
            let v = self.hf_at(e)?;
            if e <= cutoff.min(4) {
                let dense = self.num.dim_at_degree_dense(e)? - self.rel.dim_at_degree_dense(e)?;
                assert_eq!(
                    v, dense,
                    "Hilbert audit failed at degree {e}: initial-module count {v} vs dense {dense}"
                );
            }
            values.push(v);
        }
        let fitted = crate::torpoly::fit_polynomial(&values, 4).ok();
        Ok(HilbertData { values, cutoff, fitted })
    }

    /// mu(M) = dim_k M/mM by graded Nakayama, with the generator degrees.
    pub fn minimal_generators(&self) -> Result<(usize, Vec<i64>)> {
        let sel = self.select_minimal_generators()?;
        let degs: Vec<i64> = sel
            .iter()
            .map(|g| g.homogeneous_degree(&self.ambient).unwrap().unwrap_or(0))
            .collect();
        Ok((sel.len(), degs))
    }

    /// Pick a subset of the numerator generators whose images form a k-basis
    /// of M/mM (graded Nakayama: they generate minimally).
    pub fn select_minimal_generators(&self) -> Result<Vec<FreeVec>> {
        let ring = self.spec.ring().clone();
        let field = ring.field().clone();
        let mut candidates: Vec<(i64, usize)> = Vec::new();
        for (i, g) in self.num.gens().iter().enumerate() {
            let d = g.homogeneous_degree(&self.ambient)?.unwrap_or(0);
            candidates.push((d, i));
        }
        candidates.sort();
        let mut kept: Vec<FreeVec> = Vec::new();
        let mut degrees: Vec<i64> = candidates.iter().map(|(d, _)| *d).collect();
        degrees.dedup();

        let mut den_gens: Vec<FreeVec> = Vec::new();
        for g in self.num.effective_gens() {
            for i in 0..ring.nvars() {
                let xi = Monomial::var(i, ring.nvars(), ring.weights());
                den_gens.push(g.term_mul(&xi, &field.one()));
            }
        }
        den_gens.extend(self.rel.effective_gens());

        for e in degrees {
            let basis = module_monomials(&self.ambient, e);
            let index: HashMap<(usize, Vec<u32>), usize> = basis
                .iter()
                .enumerate()
                .map(|(i, k)| (k.clone(), i))
                .collect();
            let mut space = RowSpace::new(field.clone(), basis.len());
            for g in &den_gens {
                let Some(dg) = g.homogeneous_degree(&self.ambient)? else { continue };
                if dg > e {
                    continue;
                }
                for m in monomials_of_weighted_degree(ring.weights(), (e - dg) as u32) {
                    let mono = Monomial::new(m, ring.weights());
                    let mult = g.term_mul(&mono, &field.one());
                    space.insert(coords_of_vec(&mult, &index, basis.len(), &self.spec));
                }
            }
            for (d, i) in &candidates {
                if *d != e {
                    continue;
                }
                let g = &self.num.gens()[*i];
                let row = coords_of_vec(g, &index, basis.len(), &self.spec);
                if space.insert(row) {
                    kept.push(g.clone());
                }
            }
        }
        Ok(kept)
    }

    /// Finite-length decision: certify via variable powers in (V : U) up to
    /// exponent 64, then sum the Hilbert function over the certified support.
    pub fn finite_length(&self) -> Result<LengthResult> {
        let ring = self.spec.ring();
        let rel_gb = self.rel.gb()?;
        let nv = ring.nvars();
        let mut powers = Vec::with_capacity(nv);
        for i in 0..nv {
            let mut found = None;
            let mut xi_pow = ring.one();
            let xi = ring.var(i);
            for n in 1..=64u32 {
                xi_pow = xi_pow.mul(&xi)?;
                let mut all_in = true;
                for u in self.num.gens() {
                    let mult = u.poly_mul(&xi_pow)?;
                    if !rel_gb.contains(&mult)? {
                        all_in = false;
                        break;
                    }
                }
                if all_in {
                    found = Some(n);
                    break;
                }
            }
            match found {
                Some(n) => powers.push(n),
                None => {
                    // not certified: decide via dimension
                    if self.krull_dim()? >= 1 {
                        return Ok(LengthResult::Infinite);
                    }
                    return Err(Error::UndecidedWithinBound {
                        var: ring.vars()[i].clone(),
                        bound: 64,
                    });
                }
            }
        }
        let max_gen_deg = self
            .num
            .gens()
            .iter()
            .filter_map(|g| g.max_degree(&self.ambient))
            .max()
            .unwrap_or(0);
        let socle_bound: i64 = powers
            .iter()
            .zip(ring.weights())
            .map(|(n, w)| ((*n - 1) * w) as i64)
            .sum();
        let bound = max_gen_deg + socle_bound;
        let mut len = 0i64;
        for e in 0..=bound {
            len += self.hf_at(e)?;
        }
        Ok(LengthResult::Finite(len))
    }

    /// Annihilator ideal (V : U), containing J by construction.
    pub fn annihilator(&self) -> Result<Vec<Poly>> {
        let gens = self.num.gens();
        if gens.is_empty() {
            return Ok(vec![self.spec.ring().one()]);
        }
        let mut acc: Option<SubmoduleRep> = None;
        for u in gens {
            let colon = self.rel.colon_ideal_of(u)?;
            let ideal = SubmoduleRep::ideal(self.spec.clone(), &colon)?;
            acc = Some(match acc {
                None => ideal,
                Some(prev) => prev.intersect(&ideal)?,
            });
        }
        let acc = acc.unwrap();
        Ok(acc.gens().iter().map(|v| v.comps[0].clone()).collect())
    }

    /// Krull dimension of the module (convention: the zero module has
    /// dimension -1).
    pub fn krull_dim(&self) -> Result<i64> {
        let ann = self.annihilator()?;
        dim_of_ideal(&self.spec, &ann)
    }

    /// M/IM over the same ring.
    pub fn quotient_by_ideal(&self, ideal_gens: &[Poly]) -> Result<ModuleRep> {
        let mut rels = self.rel.gens().to_vec();
        for f in ideal_gens {
            for u in self.num.gens() {
                rels.push(u.poly_mul(f)?);
            }
        }
        ModuleRep::subquotient(self.spec.clone(), self.ambient.clone(), self.num.gens().to_vec(), rels)
    }

    /// Presentation via minimal generators and their syzygy (over S, with
    /// relations from both V and J).
    pub fn presentation(&self) -> Result<&Presentation> {
        if let Some(p) = self.pres.get() {
            return Ok(p);
        }
        let min_gens = self.select_minimal_generators()?;
        let shifts: Vec<i64> = min_gens
            .iter()
            .map(|g| g.homogeneous_degree(&self.ambient).unwrap().unwrap_or(0))
            .collect();
        let free = FreeModule::with_shifts(self.spec.ring().clone(), shifts);
        let t = min_gens.len();
        let syzygy = if t == 0 {
            Vec::new()
        } else {
            let mut columns = min_gens.clone();
            columns.extend(self.rel.effective_gens());
            let (_, syz) = syzygies(&columns, &self.ambient)?;
            let mut out = Vec::new();
            for z in &syz {
                let head = FreeVec { comps: z.comps[..t].to_vec() };
                if !head.is_zero() {
                    out.push(head);
                }
            }
            out
        };
        let pres = Presentation { free, min_gens, syzygy };
        Ok(self.pres.get_or_init(|| pres))
    }

    /// M/xM in presentation form over S/(J + (x)).
    pub fn quotient_by_element(&self, x: &Poly) -> Result<ModuleRep> {
        let pres = self.presentation()?;
        let new_spec = self.spec.quotient_by(x)?;
        ModuleRep::coker(new_spec, pres.free.clone(), pres.syzygy.clone())
    }

    /// First syzygy L of M as a submodule of the free cover (column span of
    /// the presentation matrix).
    pub fn first_syzygy(&self) -> Result<ModuleRep> {
        let pres = self.presentation()?;
        ModuleRep::subquotient(
            self.spec.clone(),
            pres.free.clone(),
            pres.syzygy.clone(),
            Vec::new(),
        )
    }

    /// Minimal graded free resolution over S of the restricted module,
    /// minimalizing generators at every step.
    pub fn free_resolution(&self, max_steps: usize) -> Result<Resolution> {
        let nvars = self.spec.ring().nvars() as i64;
        let dim_a = self.spec.dim()?;
        if self.is_zero()? {
            return Ok(Resolution {
                betti: vec![Vec::new()],
                pd: 0,
                depth: nvars,
                dim: -1,
                is_cm: true,
                is_mcm_over_a: false,
            });
        }
        let pres = self.presentation()?;
        let mut betti: Vec<Vec<i64>> = vec![pres.free.shifts.clone()];
        let mut cur_module = pres.free.clone();
        let mut cur_kernel = pres.syzygy.clone();
        let mut steps = 0usize;
        loop {
            let mins = minimal_module_generators(&self.spec, &cur_module, &cur_kernel)?;
            if mins.is_empty() {
                break;
            }
            steps += 1;
            if steps > max_steps {
                return Err(Error::ResolutionTruncated { steps: max_steps });
            }
            let degs: Vec<i64> = mins
                .iter()
                .map(|g| g.homogeneous_degree(&cur_module).unwrap().unwrap_or(0))
                .collect();
            betti.push(degs);
            let (syz_mod, syz) = syzygies(&mins, &cur_module)?;
            cur_module = syz_mod;
            cur_kernel = syz;
        }
        let pd = betti.len() - 1;
        let depth = nvars - pd as i64;
        let dim = self.krull_dim()?;
        Ok(Resolution {
            betti,
            pd,
            depth,
            dim,
            is_cm: depth == dim,
            is_mcm_over_a: depth == dim_a,
        })
    }

    /// Socle test (0 :_M m) = 0, an independent depth-0 probe.
    pub fn socle_is_zero(&self) -> Result<bool> {
        let ring = self.spec.ring();
        let mut acc: Option<SubmoduleRep> = None;
        for i in 0..ring.nvars() {
            let c = self.rel.colon_by(&ring.var(i))?;
            acc = Some(match acc {
                None => c,
                Some(prev) => prev.intersect(&c)?,
            });
        }
        let socle = match acc {
            None => return Ok(true),
            Some(s) => s.intersect(&self.num)?,
        };
        self.rel.contains_submodule(&socle)
    }
}

/// Minimal generators of the submodule spanned by `gens` inside a free module
/// (no denominator): per-degree selection modulo m·span.
fn minimal_module_generators(
    spec: &RingSpec,
    module: &FreeModule,
    gens: &[FreeVec],
) -> Result<Vec<FreeVec>> {
    let ring = module.ring.clone();
    let field = ring.field().clone();
    let mut candidates: Vec<(i64, usize)> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let d = g.homogeneous_degree(module)?.ok_or_else(|| {
            Error::GradingError("inhomogeneous generator in minimalization".into())
        })?;
        candidates.push((d, i));
    }
    candidates.sort();
    let mut degrees: Vec<i64> = candidates.iter().map(|(d, _)| *d).collect();
    degrees.dedup();
    let mut kept = Vec::new();
    for e in degrees {
        let basis = module_monomials(module, e);
        let index: HashMap<(usize, Vec<u32>), usize> = basis
            .iter()
            .enumerate()
            .map(|(i, k)| (k.clone(), i))
            .collect();
        let mut space = RowSpace::new(field.clone(), basis.len());
        // m·(span of gens) in degree e: all proper monomial multiples
        for g in gens {
            if g.is_zero() {
                continue;
            }
            let dg = g.homogeneous_degree(module)?.unwrap();
            if dg >= e {
                continue;
            }
            for m in monomials_of_weighted_degree(ring.weights(), (e - dg) as u32) {
                let mono = Monomial::new(m, ring.weights());
                if mono.is_one() {
                    continue;
                }
                let mult = g.term_mul(&mono, &field.one());
                space.insert(coords_of_vec(&mult, &index, basis.len(), spec));
            }
        }
        for (d, i) in &candidates {
            if *d != e {
                continue;
            }
            let row = coords_of_vec(&gens[*i], &index, basis.len(), spec);
            if space.insert(row) {
                kept.push(gens[*i].clone());
            }
        }
    }
    Ok(kept)
}

/// Krull dimension of S/(J + extra) via maximal independent variable sets of
/// the initial ideal. Returns -1 for the unit ideal.
pub fn dim_of_ideal(spec: &RingSpec, extra: &[Poly]) -> Result<i64> {
    let ring = spec.ring();
    let mut gens = spec.quotient().to_vec();
    gens.extend_from_slice(extra);
    let gb = buchberger_ideal(&gens, ring)?;
    let supports: Vec<Vec<usize>> = gb
        .gens
        .iter()
        .map(|g| {
            let (_, m, _) = vec_lead(g, ring, &gb.ord).unwrap();
            m.exps()
                .iter()
                .enumerate()
                .filter_map(|(i, &e)| (e > 0).then_some(i))
                .collect()
        })
        .collect();
    Ok(dim_from_lead_supports(&supports, ring.nvars()))
}

fn dim_from_lead_supports(supports: &[Vec<usize>], nvars: usize) -> i64 {
    assert!(nvars <= 20, "independent-set search is exponential in variables");
    let mut best: i64 = -1;
    'outer: for mask in 0u32..(1 << nvars) {
        // Y = variable set of the mask; independent iff no lead support is inside Y
        for supp in supports {
            if supp.iter().all(|&i| mask & (1 << i) != 0) {
                continue 'outer;
            }
        }
        let size = mask.count_ones() as i64;
        if size > best {
            best = size;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::CoeffField;
    use crate::monomial::MonomialOrder;
    use crate::poly::Ring;

    fn ring(vars: &[&str]) -> Ring {
        Ring::new(
            CoeffField::default_prime(),
            vars.iter().map(|s| s.to_string()).collect(),
            vec![1; vars.len()],
            MonomialOrder::Grevlex,
        )
        .unwrap()
    }

    fn nodal_curve() -> RingSpec {
        // A = k[x,y]/(xy)
        let r = ring(&["x", "y"]);
        let xy = r.var(0).mul(&r.var(1)).unwrap();
        RingSpec::new(r, vec![xy]).unwrap()
    }

    fn a1_spec() -> RingSpec {
        // A = k[x,y,u]/(u^2 - xy)
        let r = ring(&["x", "y", "u"]);
        let u2 = r.var(2).mul(&r.var(2)).unwrap();
        let f = u2.sub(&r.var(0).mul(&r.var(1)).unwrap()).unwrap();
        RingSpec::new(r, vec![f]).unwrap()
    }

    fn pow(p: &Poly, n: u32) -> Poly {
        let mut out = p.ring().one();
        for _ in 0..n {
            out = out.mul(p).unwrap();
        }
        out
    }

    #[test]
    fn intersect_with_self_is_self() {
        let spec = nodal_curve();
        let u = SubmoduleRep::ideal(spec.clone(), &[spec.ring().var(0)]).unwrap();
        let i = u.intersect(&u).unwrap();
        assert!(i.equals(&u).unwrap());
    }

    #[test]
    fn disjoint_branch_ideals_intersect_to_zero() {
        // in A = k[x,y]/(xy): (x) ∩ (y^n) = 0 for n = 1..5
        let spec = nodal_curve();
        let x = spec.ring().var(0);
        let y = spec.ring().var(1);
        let xi = SubmoduleRep::ideal(spec.clone(), &[x]).unwrap();
        for n in 1..=5u32 {
            let yn = SubmoduleRep::ideal(spec.clone(), &[pow(&y, n)]).unwrap();
            let inter = xi.intersect(&yn).unwrap();
            assert!(inter.is_zero_over_a().unwrap(), "n = {n}");
            // degreewise oracle: dims of both sides minus the sum
            for e in 0..=4i64 {
                let da = xi.dim_at_degree_dense(e).unwrap();
                let db = yn.dim_at_degree_dense(e).unwrap();
                let dsum = xi.sum(&yn).unwrap().dim_at_degree_dense(e).unwrap();
                let dj = SubmoduleRep::zero(spec.clone(), inter.ambient().clone())
                    .dim_at_degree_dense(e)
                    .unwrap();
                assert_eq!(da + db - dsum, dj, "degree {e} at n = {n}");
            }
        }
    }

    #[test]
    fn nested_principal_ideals_intersect_to_smaller() {
        let spec = nodal_curve();
        let y = spec.ring().var(1);
        let yi = SubmoduleRep::ideal(spec.clone(), std::slice::from_ref(&y)).unwrap();
        for n in 2..=4u32 {
            let yn = SubmoduleRep::ideal(spec.clone(), &[pow(&y, n)]).unwrap();
            let inter = yi.intersect(&yn).unwrap();
            assert!(inter.equals(&yn).unwrap());
        }
    }

    #[test]
    fn colon_by_unit_of_zero_is_zero() {
        let spec = nodal_curve();
        let zero = SubmoduleRep::zero(spec.clone(), FreeModule::new(spec.ring().clone(), 1));
        let c = zero.colon_by(&spec.ring().one()).unwrap();
        assert!(c.is_zero_over_a().unwrap());
    }

    #[test]
    fn annihilator_of_x_in_nodal_curve() {
        // (0 :_A x) = (y), by the defining relation; oracle = degreewise kernel
        let spec = nodal_curve();
        let zero = SubmoduleRep::zero(spec.clone(), FreeModule::new(spec.ring().clone(), 1));
        let c = zero.colon_by(&spec.ring().var(0)).unwrap();
        let y = SubmoduleRep::ideal(spec.clone(), &[spec.ring().var(1)]).unwrap();
        assert!(c.equals(&y).unwrap());
    }

    #[test]
    fn colon_contains_ideal_itself() {
        // (I^2 : x) contains I for I = (x, u) in the A1 ring
        let spec = a1_spec();
        let x = spec.ring().var(0);
        let u = spec.ring().var(2);
        let i2 = vec![
            x.mul(&x).unwrap(),
            x.mul(&u).unwrap(),
            u.mul(&u).unwrap(),
        ];
        let i2m = SubmoduleRep::ideal(spec.clone(), &i2).unwrap();
        let c = i2m.colon_by(&x).unwrap();
        let i = SubmoduleRep::ideal(spec.clone(), &[x, u]).unwrap();
        assert!(c.contains_submodule(&i).unwrap());
    }

    #[test]
    fn mu_of_free_module_is_rank() {
        let spec = nodal_curve();
        let m = ModuleRep::free(spec, 2).unwrap();
        let (mu, degs) = m.minimal_generators().unwrap();
        assert_eq!(mu, 2);
        assert_eq!(degs, vec![0, 0]);
    }

    #[test]
    fn mu_of_direct_sum_of_branches() {
        // M = A/(x) ⊕ A/(y) over A = k[x,y]/(xy): mu = 2
        let spec = nodal_curve();
        let ambient = FreeModule::new(spec.ring().clone(), 2);
        let x = spec.ring().var(0);
        let y = spec.ring().var(1);
        let mut r1 = ambient.zero_vec();
        r1.comps[0] = x;
        let mut r2 = ambient.zero_vec();
        r2.comps[1] = y;
        let m = ModuleRep::coker(spec, ambient, vec![r1, r2]).unwrap();
        let (mu, _) = m.minimal_generators().unwrap();
        assert_eq!(mu, 2);
    }

    #[test]
    fn hilbert_function_of_polynomial_line() {
        // S/(x) for S = k[x,y]: 1,1,1,...
        let r = ring(&["x", "y"]);
        let spec = RingSpec::polynomial(r.clone());
        let m = ModuleRep::cyclic(spec, &[r.var(0)]).unwrap();
        let hf = m.hilbert_function(5).unwrap();
        assert_eq!(hf.values, vec![1, 1, 1, 1, 1, 1]);
    }

    #[test]
    fn hilbert_function_of_fat_point() {
        // k[x,y]/(x^2, xy, y^2): 1, 2, 0, ... total 3
        let r = ring(&["x", "y"]);
        let spec = RingSpec::polynomial(r.clone());
        let x = r.var(0);
        let y = r.var(1);
        let gens = vec![
            x.mul(&x).unwrap(),
            x.mul(&y).unwrap(),
            y.mul(&y).unwrap(),
        ];
        let m = ModuleRep::cyclic(spec, &gens).unwrap();
        let hf = m.hilbert_function(4).unwrap();
        assert_eq!(hf.values, vec![1, 2, 0, 0, 0]);
        assert_eq!(m.finite_length().unwrap(), LengthResult::Finite(3));
    }

    #[test]
    fn length_of_residue_field_is_one() {
        let r = ring(&["x", "y"]);
        let spec = RingSpec::polynomial(r.clone());
        let m = ModuleRep::cyclic(spec, &[r.var(0), r.var(1)]).unwrap();
        assert_eq!(m.finite_length().unwrap(), LengthResult::Finite(1));
    }

    #[test]
    fn tor_like_subquotient_has_length_one() {
        // (y^n)/(y^{n+1}) in A = k[x,y]/(xy): length 1 (single standard monomial)
        let spec = nodal_curve();
        let y = spec.ring().var(1);
        for n in 1..=4u32 {
            let ambient = FreeModule::new(spec.ring().clone(), 1);
            let m = ModuleRep::subquotient(
                spec.clone(),
                ambient.clone(),
                vec![ambient.from_poly(pow(&y, n))],
                vec![ambient.from_poly(pow(&y, n + 1))],
            )
            .unwrap();
            assert_eq!(m.finite_length().unwrap(), LengthResult::Finite(1), "n = {n}");
        }
    }

    #[test]
    fn fiber_layer_subquotient_has_length_one() {
        // (y^n)/(m·y^n) in A = k[x,y]/(xy): m·y^n = y^{n+1} there, so each
        // layer is one-dimensional
        let spec = nodal_curve();
        let x = spec.ring().var(0);
        let y = spec.ring().var(1);
        for n in 1..=4u32 {
            let ambient = FreeModule::new(spec.ring().clone(), 1);
            let m = ModuleRep::subquotient(
                spec.clone(),
                ambient.clone(),
                vec![ambient.from_poly(pow(&y, n))],
                vec![
                    ambient.from_poly(x.mul(&pow(&y, n)).unwrap()),
                    ambient.from_poly(pow(&y, n + 1)),
                ],
            )
            .unwrap();
            assert_eq!(m.finite_length().unwrap(), LengthResult::Finite(1), "n = {n}");
            assert_eq!(m.hf_at(n as i64).unwrap(), 1);
        }
    }

    #[test]
    fn infinite_length_detected() {
        let spec = nodal_curve();
        let m = ModuleRep::cyclic(spec, &[]).unwrap();
        assert_eq!(m.finite_length().unwrap(), LengthResult::Infinite);
    }

    #[test]
    fn resolution_of_free_module() {
        let r = ring(&["x", "y"]);
        let spec = RingSpec::polynomial(r);
        let m = ModuleRep::free(spec, 1).unwrap();
        let res = m.free_resolution(4).unwrap();
        assert_eq!(res.pd, 0);
        assert_eq!(res.depth, 2);
        assert!(res.is_cm);
    }

    #[test]
    fn koszul_resolution_of_residue_field() {
        // k over k[x,y]: pd 2, depth 0, dim 0, CM
        let r = ring(&["x", "y"]);
        let spec = RingSpec::polynomial(r.clone());
        let m = ModuleRep::cyclic(spec, &[r.var(0), r.var(1)]).unwrap();
        let res = m.free_resolution(4).unwrap();
        assert_eq!(res.pd, 2);
        assert_eq!(res.depth, 0);
        assert_eq!(res.dim, 0);
        assert!(res.is_cm);
        assert_eq!(res.betti[0].len(), 1);
        assert_eq!(res.betti[1].len(), 2);
        assert_eq!(res.betti[2].len(), 1);
    }

    #[test]
    fn matrix_factorization_module_is_mcm() {
        // M = coker [[u, x], [y, u]] over S = k[x,y,u]: pd_S = 1, depth 2,
        // and depth equals dim A for A = S/(u^2 - xy)
        let spec = a1_spec();
        let ambient = FreeModule::new(spec.ring().clone(), 2);
        let x = spec.ring().var(0);
        let y = spec.ring().var(1);
        let u = spec.ring().var(2);
        let col1 = FreeVec { comps: vec![u.clone(), y.clone()] };
        let col2 = FreeVec { comps: vec![x.clone(), u.clone()] };
        let m = ModuleRep::coker(spec.clone(), ambient, vec![col1, col2]).unwrap();
        let res = m.free_resolution(5).unwrap();
        assert_eq!(res.pd, 1);
        assert_eq!(res.depth, 2);
        assert_eq!(spec.dim().unwrap(), 2);
        assert!(res.is_mcm_over_a);
    }

    #[test]
    fn krull_dims_of_standard_examples() {
        let nodal = nodal_curve();
        assert_eq!(nodal.dim().unwrap(), 1);
        let a1 = a1_spec();
        assert_eq!(a1.dim().unwrap(), 2);
        // dim A/(x, u) = 1 for the A1 ring (quotient is k[y])
        let x = a1.ring().var(0);
        let u = a1.ring().var(2);
        assert_eq!(dim_of_ideal(&a1, &[x, u]).unwrap(), 1);
    }

    #[test]
    fn dim_of_zero_module_is_minus_one() {
        let spec = nodal_curve();
        let m = ModuleRep::cyclic(spec.clone(), &[spec.ring().one()]).unwrap();
        assert_eq!(m.krull_dim().unwrap(), -1);
        assert!(m.is_zero().unwrap());
    }

    #[test]
    fn hilbert_direct_sum_additivity() {
        let spec = nodal_curve();
        let x = spec.ring().var(0);
        let y = spec.ring().var(1);
        let m1 = ModuleRep::cyclic(spec.clone(), std::slice::from_ref(&x)).unwrap();
        let m2 = ModuleRep::cyclic(spec.clone(), std::slice::from_ref(&y)).unwrap();
        // direct sum as rank-2 coker
        let ambient = FreeModule::new(spec.ring().clone(), 2);
        let mut r1 = ambient.zero_vec();
        r1.comps[0] = x;
        let mut r2 = ambient.zero_vec();
        r2.comps[1] = y;
        let sum = ModuleRep::coker(spec, ambient, vec![r1, r2]).unwrap();
        let h1 = m1.hilbert_function(6).unwrap();
        let h2 = m2.hilbert_function(6).unwrap();
        let hs = sum.hilbert_function(6).unwrap();
        for e in 0..=6usize {
            assert_eq!(hs.values[e], h1.values[e] + h2.values[e]);
        }
    }

    #[test]
    fn presentation_of_subquotient_module() {
        // (y)/(y^2) in A = k[x,y]/(xy): one generator of degree 1, and the
        // syzygy contains x and y (both kill the class of y)
        let spec = nodal_curve();
        let y = spec.ring().var(1);
        let ambient = FreeModule::new(spec.ring().clone(), 1);
        let m = ModuleRep::subquotient(
            spec.clone(),
            ambient.clone(),
            vec![ambient.from_poly(y.clone())],
            vec![ambient.from_poly(y.mul(&y).unwrap())],
        )
        .unwrap();
        let pres = m.presentation().unwrap();
        assert_eq!(pres.min_gens.len(), 1);
        assert_eq!(pres.free.shifts, vec![1]);
        let l = ModuleRep::subquotient(
            spec.clone(),
            pres.free.clone(),
            pres.syzygy.clone(),
            Vec::new(),
        )
        .unwrap();
        let ann_x = l
            .num()
            .contains(&pres.free.from_poly(spec.ring().var(0)))
            .unwrap();
        let ann_y = l
            .num()
            .contains(&pres.free.from_poly(spec.ring().var(1)))
            .unwrap();
        assert!(ann_x && ann_y);
    }

    #[test]
    fn mu_equals_minimalized_zeroth_step() {
        let spec = a1_spec();
        let ambient = FreeModule::new(spec.ring().clone(), 2);
        let x = spec.ring().var(0);
        let y = spec.ring().var(1);
        let u = spec.ring().var(2);
        let col1 = FreeVec { comps: vec![u.clone(), y.clone()] };
        let col2 = FreeVec { comps: vec![x.clone(), u.clone()] };
        let m = ModuleRep::coker(spec, ambient, vec![col1, col2]).unwrap();
        let (mu, _) = m.minimal_generators().unwrap();
        let res = m.free_resolution(5).unwrap();
        assert_eq!(mu, res.betti[0].len());
    }
}
