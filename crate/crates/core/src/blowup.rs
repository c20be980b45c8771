//! Blow-up algebra computations: ideal powers, the Rees ideal by elimination,
//! fiber cones F(I) and fiber modules F_I(M), analytic spread, reduction
//! numbers by randomized search with certificates, superficial-element
//! search with Valabrega–Valla verification, and the tractable
//! locally-complete-intersection check.

use std::collections::HashMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Coeff, CoeffField};
use crate::linalg::{kernel, RowSpace};
use crate::modalg::{
    dim_of_ideal, module_monomials, monomials_of_weighted_degree, ModuleRep, SubmoduleRep,
};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{Poly, Ring};
use crate::ringspec::RingSpec;
use crate::torpoly::{fit_polynomial, PolyFit, TorDegree};

/// A homogeneous ideal of A, by S-generators.
#[derive(Debug, Clone)]
pub struct IdealRep {
    spec: RingSpec,
    gens: Vec<Poly>,
}

impl IdealRep {
    pub fn new(spec: RingSpec, gens: Vec<Poly>) -> Result<Self> {
        let mut clean = Vec::new();
        for (i, g) in gens.into_iter().enumerate() {
            if g.ring() != spec.ring() {
                return Err(Error::RingMismatch);
            }
            if g.is_zero() {
                continue;
            }
            if !g.is_homogeneous() {
                let degs: Vec<u32> = g.terms().iter().map(|(m, _)| m.degree()).collect();
                return Err(Error::GradingError(format!(
                    "ideal generator {i} is not homogeneous (term degrees {degs:?})"
                )));
            }
            clean.push(g);
        }
        Ok(IdealRep { spec, gens: clean })
    }

    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }
    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }

    pub fn as_submodule(&self) -> Result<SubmoduleRep> {
        SubmoduleRep::ideal(self.spec.clone(), &self.gens)
    }

    /// Generators of Iⁿ: all n-fold products of the generators (I⁰ = (1)).
    pub fn power(&self, n: u32) -> Result<Vec<Poly>> {
        let ring = self.spec.ring();
        if n == 0 {
            return Ok(vec![ring.one()]);
        }
        let s = self.gens.len();
        if s == 0 {
            return Ok(Vec::new());
        }
        // multisets of size n over s generators, as non-decreasing index tuples
        let mut out = Vec::new();
        let mut idx = vec![0usize; n as usize];
        loop {
            let mut prod = ring.one();
            for &i in &idx {
                prod = prod.mul(&self.gens[i])?;
            }
            if !prod.is_zero() {
                out.push(prod);
            }
            // next non-decreasing tuple
            let mut k = idx.len();
            loop {
                if k == 0 {
                    return Ok(out);
                }
                k -= 1;
                if idx[k] + 1 < s {
                    let v = idx[k] + 1;
                    for slot in idx.iter_mut().skip(k) {
                        *slot = v;
                    }
                    break;
                }
            }
        }
    }

    /// The ideal of A generated by Iⁿ, as a module over A.
    pub fn power_module(&self, n: u32) -> Result<ModuleRep> {
        let ambient = crate::freemod::FreeModule::new(self.spec.ring().clone(), 1);
        let num: Vec<_> = self
            .power(n)?
            .into_iter()
            .map(|p| ambient.from_poly(p))
            .collect();
        ModuleRep::subquotient(self.spec.clone(), ambient, num, Vec::new())
    }

    /// μ(Iⁿ) computed directly from the power generators.
    pub fn mu_of_power(&self, n: u32) -> Result<usize> {
        Ok(self.power_module(n)?.minimal_generators()?.0)
    }

    /// Minimal generator degree; random combinations are drawn from the
    /// generators of this degree so that the drawn element is homogeneous.
    pub fn min_gen_degree(&self) -> Option<u32> {
        self.gens
            .iter()
            .filter_map(|g| g.homogeneous_degree())
            .min()
    }

    fn combination_pool(&self) -> Vec<&Poly> {
        let Some(d) = self.min_gen_degree() else { return Vec::new() };
        self.gens
            .iter()
            .filter(|g| g.homogeneous_degree() == Some(d))
            .collect()
    }

    /// A random k-combination of the (minimal-degree) generators; never zero
    /// over A. Returns None when the pool is exhausted of nonzero draws.
    pub fn random_combination(&self, rng: &mut ChaCha20Rng) -> Result<Option<Poly>> {
        let pool = self.combination_pool();
        if pool.is_empty() {
            return Ok(None);
        }
        let ring = self.spec.ring();
        for _ in 0..64 {
            let mut x = ring.zero();
            for g in &pool {
                let c = random_coeff(ring.field(), rng);
                x = x.add(&g.scalar_mul(&c))?;
            }
            if x.is_zero() {
                continue;
            }
            let xs = SubmoduleRep::ideal(self.spec.clone(), &[x.clone()])?;
            if !xs.is_zero_over_a()? {
                return Ok(Some(x));
            }
        }
        Ok(None)
    }
}

fn random_coeff(field: &CoeffField, rng: &mut ChaCha20Rng) -> Coeff {
    match field {
        CoeffField::Prime { p } => {
            let v = rng.gen_range(0..*p);
            field.from_i64(v as i64)
        }
        CoeffField::Rationals => field.from_i64(rng.gen_range(-100i64..=100)),
    }
}

/// The Rees ideal: the kernel of S[T] -> A[t], T_i -> t·f_i, computed by
/// eliminating t from (T_i - t f_i) + J. Returns the ring S[T] (T-weights
/// 1 + deg f_i) and the kernel generators; each is certified to vanish under
/// the substitution.
pub fn rees_ideal(ideal: &IdealRep) -> Result<(Ring, Vec<Poly>)> {
    let spec = ideal.spec();
    let ring = spec.ring();
    let nv = ring.nvars();
    let s = ideal.gens().len();

    let mut degs = Vec::with_capacity(s);
    for f in ideal.gens() {
        degs.push(f.homogeneous_degree().ok_or_else(|| {
            Error::GradingError("Rees computation needs homogeneous generators".into())
        })?);
    }

    // big ring [x.., t, T..]; t gets weight 1, T_i gets 1 + deg f_i
    let mut vars: Vec<String> = ring.vars().to_vec();
    vars.push("@t".into());
    for i in 0..s {
        vars.push(format!("@T{i}"));
    }
    let mut weights: Vec<u32> = ring.weights().to_vec();
    weights.push(1);
    for d in &degs {
        weights.push(1 + d);
    }
    let big = Ring::new(ring.field().clone(), vars, weights, MonomialOrder::Grevlex)?;
    let embed: Vec<usize> = (0..nv).collect();

    let mut gens = Vec::new();
    let t = big.var(nv);
    for (i, f) in ideal.gens().iter().enumerate() {
        let tf = f.map_vars(&big, &embed).mul(&t)?;
        let ti = big.var(nv + 1 + i);
        gens.push(ti.sub(&tf)?);
    }
    for j in spec.quotient() {
        gens.push(j.map_vars(&big, &embed));
    }

    let (st_ring, kernel_gens) = crate::groebner::eliminate(&gens, &big, &[nv])?;

    // certificate: substituting T_i -> t f_i lands in J·S[t]
    let subst_ring = {
        let mut vars: Vec<String> = ring.vars().to_vec();
        vars.push("@t".into());
        let mut weights: Vec<u32> = ring.weights().to_vec();
        weights.push(1);
        Ring::new(ring.field().clone(), vars, weights, MonomialOrder::Grevlex)?
    };
    let j_lift: Vec<Poly> = spec
        .quotient()
        .iter()
        .map(|j| j.map_vars(&subst_ring, &embed))
        .collect();
    let j_gb = crate::groebner::buchberger_ideal(&j_lift, &subst_ring)?;
    let t_sub = subst_ring.var(nv);
    let mut images: Vec<Poly> = (0..nv).map(|i| subst_ring.var(i)).collect();
    for f in ideal.gens() {
        images.push(f.map_vars(&subst_ring, &embed).mul(&t_sub)?);
    }
    for g in &kernel_gens {
        let img = g.substitute(&subst_ring, &images)?;
        let nf = crate::groebner::normal_form_poly(&img, &j_gb)?;
        assert!(nf.is_zero(), "Rees kernel certificate failed");
    }

    Ok((st_ring, kernel_gens))
}

/// The fiber cone F(I) = k[T]/Q with its Hilbert function and analytic
/// spread. Q is the Rees ideal with the S-variables set to zero.
#[derive(Debug, Clone)]
pub struct FiberConeRep {
    /// k[T]/Q; the T-variables all carry weight 1 (the power grading).
    pub fiber_spec: RingSpec,
    pub presentation: Vec<Poly>,
    pub hf: Vec<i64>,
    pub analytic_spread: i64,
    pub cutoff: u32,
}

pub fn fiber_cone(ideal: &IdealRep, cutoff: u32) -> Result<FiberConeRep> {
    let spec = ideal.spec();
    let ring = spec.ring();
    let nv = ring.nvars();
    let s = ideal.gens().len();
    let (_st_ring, rees_gens) = rees_ideal(ideal)?;

    let t_ring = Ring::new(
        ring.field().clone(),
        (0..s).map(|i| format!("T{}", i + 1)).collect(),
        vec![1; s],
        MonomialOrder::Grevlex,
    )?;
    // set the S-variables to zero: keep only the pure-T terms
    let mut q_gens = Vec::new();
    for g in &rees_gens {
        let kept: Vec<(Monomial, Coeff)> = g
            .terms()
            .iter()
            .filter(|(m, _)| m.exps()[..nv].iter().all(|&e| e == 0))
            .map(|(m, c)| {
                (
                    Monomial::new(m.exps()[nv..].to_vec(), t_ring.weights()),
                    c.clone(),
                )
            })
            .collect();
        let p = Poly::from_terms(&t_ring, kept);
        if !p.is_zero() {
            q_gens.push(p);
        }
    }
    let fiber_spec = RingSpec::new(t_ring, q_gens.clone())?;

    let cone_module = ModuleRep::cyclic(fiber_spec.clone(), &[])?;
    let hf = cone_module.hilbert_function(cutoff as i64)?.values;
    let analytic_spread = fiber_spec.dim()?;

    // audit: HF(n) = mu(I^n) for small n, computed directly over A
    for n in 0..=cutoff.min(4) {
        let mu = ideal.mu_of_power(n)? as i64;
        assert_eq!(
            hf[n as usize], mu,
            "fiber cone audit failed at n = {n}: HF {} vs direct mu {}",
            hf[n as usize], mu
        );
    }

    Ok(FiberConeRep {
        fiber_spec,
        presentation: q_gens,
        hf,
        analytic_spread,
        cutoff,
    })
}

/// Freeness verdict for the fiber module (certified only to the cutoff; a
/// witness degree refutes freeness absolutely).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum FreenessVerdict {
    FreeToCutoff,
    NotFree { witness_degree: u32 },
}

/// The fiber module F_I(M) = ⊕ IⁿM/m IⁿM: Hilbert function, freeness
/// verdict against μ(M)·HF_{F(I)}, dimension estimate, and depth via a
/// presentation over k[T] (all to the cutoff).
#[derive(Debug, Clone)]
pub struct FiberModuleRep {
    pub hf: Vec<i64>,
    pub mu_m: usize,
    pub verdict: FreenessVerdict,
    pub l_m: Option<i64>,
    pub l_m_fit: Option<PolyFit>,
    pub depth_to_cutoff: Option<i64>,
    pub cutoff: u32,
}

/// Numerator generators of IⁿM inside the ambient module of M.
fn power_module_gens(
    m: &ModuleRep,
    ideal: &IdealRep,
    n: u32,
) -> Result<Vec<crate::freemod::FreeVec>> {
    let powers = ideal.power(n)?;
    let mut gens = Vec::new();
    for p in &powers {
        for u in m.num().gens() {
            let v = u.poly_mul(p)?;
            if !v.is_zero() {
                gens.push(v);
            }
        }
    }
    gens.extend(m.rel().gens().iter().cloned());
    Ok(gens)
}

/// IⁿM as a subquotient of M's ambient module.
pub fn ideal_power_times_module(m: &ModuleRep, ideal: &IdealRep, n: u32) -> Result<ModuleRep> {
    let num = power_module_gens(m, ideal, n)?;
    ModuleRep::subquotient(
        m.spec().clone(),
        m.ambient().clone(),
        num,
        m.rel().gens().to_vec(),
    )
}

pub fn fiber_module(
    m: &ModuleRep,
    ideal: &IdealRep,
    cone: &FiberConeRep,
    cutoff: u32,
    window: usize,
) -> Result<FiberModuleRep> {
    let mut hf = Vec::with_capacity(cutoff as usize + 1);
    for n in 0..=cutoff {
        let power_mod = ideal_power_times_module(m, ideal, n)?;
        let mu_n = power_mod.minimal_generators()?.0 as i64;
        hf.push(mu_n);
    }
    let mu_m = hf[0] as usize;

    // surjectivity bound: F_I(M) is the image of F(I)^mu
    for n in 0..=cutoff as usize {
        assert!(
            hf[n] <= mu_m as i64 * cone.hf[n],
            "fiber module HF exceeds the surjection bound at degree {n}"
        );
    }

    let mut verdict = FreenessVerdict::FreeToCutoff;
    for n in 0..=cutoff as usize {
        if hf[n] != mu_m as i64 * cone.hf[n] {
            verdict = FreenessVerdict::NotFree { witness_degree: n as u32 };
            break;
        }
    }

    let (l_m, l_m_fit) = match fit_polynomial(&hf, window) {
        Ok(fit) => {
            let l = match fit.degree {
                // eventually-zero HF: finite length (dim 0) unless M itself is zero
                TorDegree::MinusInfinity => {
                    if hf.iter().any(|&v| v > 0) {
                        0
                    } else {
                        -1
                    }
                }
                TorDegree::Deg(d) => d + 1,
            };
            (Some(l), Some(fit))
        }
        Err(Error::NotStabilized { .. }) => (None, None),
        Err(e) => return Err(e),
    };

    let depth_to_cutoff = if mu_m == 0 {
        None
    } else {
        Some(fiber_module_depth(m, ideal, cone, cutoff)?)
    };

    Ok(FiberModuleRep {
        hf,
        mu_m,
        verdict,
        l_m,
        l_m_fit,
        depth_to_cutoff,
        cutoff,
    })
}

/// Depth of F_I(M) over the fiber-cone polynomial ring k[T], from a minimal
/// presentation assembled degree by degree (relations found up to the
/// cutoff), resolved over k[T]; depth = s - pd by Auslander–Buchsbaum.
fn fiber_module_depth(
    m: &ModuleRep,
    ideal: &IdealRep,
    cone: &FiberConeRep,
    cutoff: u32,
) -> Result<i64> {
    let spec = m.spec();
    let ring = spec.ring();
    let field = ring.field().clone();
    let t_ring = cone.fiber_spec.ring().clone();
    let s = t_ring.nvars();

    let pres = m.presentation()?;
    let u_gens = &pres.min_gens;
    let t = u_gens.len();
    let ambient = m.ambient().clone();

    // relations over k[T]^t, discovered per fiber degree
    let mut relations: Vec<(u32, Vec<Poly>)> = Vec::new(); // (degree, components)

    for n in 1..=cutoff {
        let t_monos = monomials_of_weighted_degree(t_ring.weights(), n);
        let ncols = t_monos.len() * t;
        // column index: (alpha index) * t + j
        // compute f^alpha once per alpha
        let mut f_alpha = Vec::with_capacity(t_monos.len());
        for alpha in &t_monos {
            let mut prod = ring.one();
            for (i, &e) in alpha.iter().enumerate() {
                for _ in 0..e {
                    prod = prod.mul(&ideal.gens()[i])?;
                }
            }
            f_alpha.push(prod);
        }

        // group columns by internal degree
        let mut degree_of_col = vec![0i64; ncols];
        let mut degrees: Vec<i64> = Vec::new();
        for (ai, fa) in f_alpha.iter().enumerate() {
            let da = fa.homogeneous_degree().unwrap_or(0) as i64;
            for (j, u) in u_gens.iter().enumerate() {
                let du = u.homogeneous_degree(&ambient)?.unwrap_or(0);
                let col = ai * t + j;
                degree_of_col[col] = da + du;
                if !degrees.contains(&(da + du)) {
                    degrees.push(da + du);
                }
            }
        }
        degrees.sort();

        // per-degree denominator spaces and coordinate layout
        let mut block_offset: HashMap<i64, usize> = HashMap::new();
        let mut block_index: HashMap<i64, HashMap<(usize, Vec<u32>), usize>> = HashMap::new();
        let mut den_spaces: HashMap<i64, RowSpace> = HashMap::new();
        let mut total = 0usize;
        let power_gens = ideal.power(n)?;
        for &e in &degrees {
            let basis = module_monomials(&ambient, e);
            let index: HashMap<(usize, Vec<u32>), usize> = basis
                .iter()
                .enumerate()
                .map(|(i, k)| (k.clone(), i))
                .collect();
            let mut space = RowSpace::new(field.clone(), basis.len());
            // denominator m·IⁿU + V (+ J·F) spanned in degree e
            let mut den_gens: Vec<crate::freemod::FreeVec> = Vec::new();
            for p in &power_gens {
                for u in m.num().gens() {
                    den_gens.push(u.poly_mul(p)?);
                }
            }
            let proper_from = den_gens.len();
            let mut all_gens = den_gens;
            all_gens.extend(m.rel().effective_gens());
            for (gi, g) in all_gens.iter().enumerate() {
                let Some(dg) = g.homogeneous_degree(&ambient)? else { continue };
                if dg > e {
                    continue;
                }
                for mv in monomials_of_weighted_degree(ring.weights(), (e - dg) as u32) {
                    let mono = Monomial::new(mv, ring.weights());
                    if gi < proper_from && mono.is_one() {
                        continue; // m·(IⁿU): proper multiples only
                    }
                    let mult = g.term_mul(&mono, &field.one());
                    let row = coords_in_basis(&mult, &index, basis.len(), &field);
                    space.insert(row);
                }
            }
            block_offset.insert(e, total);
            total += basis.len();
            block_index.insert(e, index);
            den_spaces.insert(e, space);
        }

        // assemble residue columns
        let mut columns: Vec<Vec<Coeff>> = Vec::with_capacity(ncols);
        for (ai, fa) in f_alpha.iter().enumerate() {
            for (j, u) in u_gens.iter().enumerate() {
                let col = ai * t + j;
                let e = degree_of_col[col];
                let v = u.poly_mul(fa)?;
                let index = &block_index[&e];
                let mut local =
                    coords_in_basis(&v, index, index.len(), &field);
                den_spaces[&e].reduce(&mut local);
                let mut full = vec![field.zero(); total];
                let off = block_offset[&e];
                full[off..off + local.len()].clone_from_slice(&local);
                columns.push(full);
            }
        }

        let ker = kernel(&field, &columns, total);

        // minimal new relations: kernel vectors independent modulo
        // T·(relations of lower degree)
        let mono_index: HashMap<Vec<u32>, usize> = t_monos
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        let mut prior = RowSpace::new(field.clone(), ncols);
        for (dr, comps) in &relations {
            let shift_monos = monomials_of_weighted_degree(t_ring.weights(), n - dr);
            for gamma in &shift_monos {
                let gmono = Monomial::new(gamma.clone(), t_ring.weights());
                let mut row = vec![field.zero(); ncols];
                for (j, comp) in comps.iter().enumerate() {
                    let shifted = comp.term_mul(&gmono, &field.one());
                    for (mono, c) in shifted.terms() {
                        let ai = mono_index[&mono.exps().to_vec()];
                        let idx = ai * t + j;
                        row[idx] = field.add(&row[idx], c);
                    }
                }
                prior.insert(row);
            }
        }
        for kv in ker {
            if prior.insert(kv.clone()) {
                // new minimal relation: rebuild as polynomials in T
                let mut comps = vec![t_ring.zero(); t];
                for (ai, alpha) in t_monos.iter().enumerate() {
                    for (j, comp) in comps.iter_mut().enumerate() {
                        let c = &kv[ai * t + j];
                        if !field.is_zero(c) {
                            let term = Poly::from_terms(
                                &t_ring,
                                vec![(Monomial::new(alpha.clone(), t_ring.weights()), c.clone())],
                            );
                            *comp = comp.add(&term)?;
                        }
                    }
                }
                relations.push((n, comps));
            }
        }
    }

    let t_free = crate::freemod::FreeModule::new(t_ring.clone(), t);
    let rel_vecs: Vec<crate::freemod::FreeVec> = relations
        .into_iter()
        .map(|(_, comps)| crate::freemod::FreeVec { comps })
        .collect();
    let poly_t_spec = RingSpec::polynomial(t_ring);
    let fm = ModuleRep::coker(poly_t_spec, t_free, rel_vecs)?;
    let res = fm.free_resolution(s + 1)?;
    Ok(res.depth)
}

fn coords_in_basis(
    v: &crate::freemod::FreeVec,
    index: &HashMap<(usize, Vec<u32>), usize>,
    size: usize,
    field: &CoeffField,
) -> Vec<Coeff> {
    let mut row = vec![field.zero(); size];
    for (pos, p) in v.comps.iter().enumerate() {
        for (mo, c) in p.terms() {
            let idx = *index
                .get(&(pos, mo.exps().to_vec()))
                .expect("unexpected term degree in fiber coordinates");
            row[idx] = field.add(&row[idx], c);
        }
    }
    row
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReductionStatus {
    VerifiedLeqOne,
    FoundRJ,
    Exhausted,
}

/// Reduction-number search report: J generators of the best trial, the
/// certified r_J, and the status.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReductionReport {
    pub j_gens: Vec<String>,
    pub r_j: Option<u32>,
    pub trials_used: u32,
    pub status: ReductionStatus,
    pub seed: u64,
    pub m_max: u32,
}

/// Draw `l` random combinations of I's generators per trial and certify
/// J·Iᵐ = Iᵐ⁺¹ by two-sided membership; report the least certified r_J.
pub fn find_reduction(
    ideal: &IdealRep,
    spread: i64,
    trials: u32,
    m_max: u32,
    seed: u64,
) -> Result<ReductionReport> {
    let spec = ideal.spec();
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let l = spread.max(0) as usize;

    let mut best: Option<(u32, Vec<Poly>)> = None;
    let mut trials_used = 0;
    for _ in 0..trials {
        trials_used += 1;
        let mut jred = Vec::with_capacity(l);
        for _ in 0..l {
            match ideal.random_combination(&mut rng)? {
                Some(x) => jred.push(x),
                None => break,
            }
        }
        if jred.len() < l {
            continue;
        }
        for m in 0..=m_max {
            let mut lhs_gens = Vec::new();
            let im = ideal.power(m)?;
            for j in &jred {
                for p in &im {
                    lhs_gens.push(j.mul(p)?);
                }
            }
            let lhs = SubmoduleRep::ideal(spec.clone(), &lhs_gens)?;
            let rhs_gens = ideal.power(m + 1)?;
            let rhs = SubmoduleRep::ideal(spec.clone(), &rhs_gens)?;
            if lhs.contains_submodule(&rhs)? && rhs.contains_submodule(&lhs)? {
                if best.as_ref().is_none_or(|(r, _)| m < *r) {
                    best = Some((m, jred.clone()));
                }
                break;
            }
        }
        if matches!(best, Some((0, _))) {
            break;
        }
    }

    Ok(match best {
        Some((r, jred)) => ReductionReport {
            j_gens: jred.iter().map(|p| p.render()).collect(),
            r_j: Some(r),
            trials_used,
            status: if r <= 1 {
                ReductionStatus::VerifiedLeqOne
            } else {
                ReductionStatus::FoundRJ
            },
            seed,
            m_max,
        },
        None => ReductionReport {
            j_gens: Vec::new(),
            r_j: None,
            trials_used,
            status: ReductionStatus::Exhausted,
            seed,
            m_max,
        },
    })
}

/// One verified condition in a superficial-element report.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SuperficialCheck {
    pub name: String,
    pub passed: bool,
    pub range_lo: u32,
    pub range_hi: u32,
    pub per_degree: Vec<bool>,
    pub window_c: Option<u32>,
    pub detail: String,
}

/// Superficial-element search result: the element, the randomness that
/// produced it, and every check with its verified range.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SuperficialReport {
    pub element: String,
    pub seed: u64,
    pub attempt: u32,
    pub checks: Vec<SuperficialCheck>,
}

/// A target module for the superficial checks.
pub struct SuperficialTarget<'a> {
    pub label: &'a str,
    pub module: &'a ModuleRep,
    /// Run the Valabrega–Valla check (x* G-regular to the cutoff)?
    pub vv: bool,
}

fn submodule_x_times(m: &ModuleRep, x: &Poly) -> Result<SubmoduleRep> {
    let mut gens = Vec::new();
    for u in m.num().gens() {
        let v = u.poly_mul(x)?;
        if !v.is_zero() {
            gens.push(v);
        }
    }
    gens.extend(m.rel().gens().iter().cloned());
    SubmoduleRep::new(m.spec().clone(), m.ambient().clone(), gens)
}

fn submodule_power_times(m: &ModuleRep, ideal: &IdealRep, n: u32) -> Result<SubmoduleRep> {
    let gens = power_module_gens(m, ideal, n)?;
    SubmoduleRep::new(m.spec().clone(), m.ambient().clone(), gens)
}

fn submodule_x_power_times(
    m: &ModuleRep,
    ideal: &IdealRep,
    x: &Poly,
    n: u32,
) -> Result<SubmoduleRep> {
    let powers = ideal.power(n)?;
    let mut gens = Vec::new();
    for p in &powers {
        for u in m.num().gens() {
            let v = u.poly_mul(p)?.poly_mul(x)?;
            if !v.is_zero() {
                gens.push(v);
            }
        }
    }
    gens.extend(m.rel().gens().iter().cloned());
    SubmoduleRep::new(m.spec().clone(), m.ambient().clone(), gens)
}

/// Search for an element of I passing the Valabrega–Valla criterion, the
/// superficial window, and regularity on each target, retrying with fresh
/// randomness on failure.
pub fn superficial_search(
    ideal: &IdealRep,
    targets: &[SuperficialTarget<'_>],
    cutoff: u32,
    c_max: u32,
    seed: u64,
    retries: u32,
) -> Result<(SuperficialReport, Poly)> {
    if cutoff < 2 {
        return Err(Error::DomainError("superficial search needs cutoff >= 2".into()));
    }
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let mut last_failure = String::from("no candidate drawn");

    for attempt in 0..retries {
        let Some(x) = ideal.random_combination(&mut rng)? else {
            last_failure = "could not draw a nonzero combination".into();
            continue;
        };
        let mut checks = Vec::new();
        let mut all_ok = true;

        for target in targets {
            let m = target.module;

            if target.vv {
                let xw = submodule_x_times(m, &x)?;
                let mut per_degree = Vec::with_capacity(cutoff as usize);
                let mut passed = true;
                for n in 1..=cutoff {
                    let inw = submodule_power_times(m, ideal, n)?;
                    let lhs = xw.intersect(&inw)?;
                    let rhs = submodule_x_power_times(m, ideal, &x, n - 1)?;
                    let ok = rhs.contains_submodule(&lhs)? && lhs.contains_submodule(&rhs)?;
                    per_degree.push(ok);
                    if !ok {
                        passed = false;
                        break;
                    }
                }
                checks.push(SuperficialCheck {
                    name: format!("vv_on_{}", target.label),
                    passed,
                    range_lo: 1,
                    range_hi: cutoff,
                    per_degree,
                    window_c: None,
                    detail: "(x)W ∩ IⁿW = xI^{n-1}W for n in range".into(),
                });
                if !passed {
                    all_ok = false;
                    last_failure = format!("vv_on_{} failed for x = {}", target.label, x.render());
                    break;
                }
            }

            // superficial window: (I^{n+1}W : x) ∩ I^cW = IⁿW for c <= n < cutoff
            let mut found_c = None;
            let mut window_degrees = Vec::new();
            'c_search: for c in 1..=c_max.min(cutoff.saturating_sub(1)) {
                let icw = submodule_power_times(m, ideal, c)?;
                let mut degrees = Vec::new();
                for n in c..cutoff {
                    let in1 = submodule_power_times(m, ideal, n + 1)?;
                    let colon = in1.colon_by(&x)?;
                    let lhs = colon.intersect(&icw)?;
                    let rhs = submodule_power_times(m, ideal, n)?;
                    let ok = rhs.contains_submodule(&lhs)? && lhs.contains_submodule(&rhs)?;
                    degrees.push(ok);
                    if !ok {
                        continue 'c_search;
                    }
                }
                found_c = Some(c);
                window_degrees = degrees;
                break;
            }
            checks.push(SuperficialCheck {
                name: format!("window_on_{}", target.label),
                passed: found_c.is_some(),
                range_lo: found_c.unwrap_or(1),
                range_hi: cutoff - 1,
                per_degree: window_degrees,
                window_c: found_c,
                detail: "(I^{n+1}W :_W x) ∩ I^cW = IⁿW for c <= n < cutoff".into(),
            });
            if found_c.is_none() {
                all_ok = false;
                last_failure = format!(
                    "window_on_{} failed for x = {} (c_max = {c_max})",
                    target.label,
                    x.render()
                );
                break;
            }

            // regularity: (0 :_W x) = 0, certified by membership
            let colon0 = m.rel().colon_by(&x)?;
            let meet = colon0.intersect(m.num())?;
            let regular = m.rel().contains_submodule(&meet)?;
            checks.push(SuperficialCheck {
                name: format!("regular_on_{}", target.label),
                passed: regular,
                range_lo: 1,
                range_hi: cutoff,
                per_degree: vec![regular; cutoff as usize],
                window_c: None,
                detail: "(0 :_W x) = 0 (membership certificate)".into(),
            });
            if !regular {
                all_ok = false;
                last_failure = format!(
                    "regular_on_{} failed: x = {} is a zerodivisor",
                    target.label,
                    x.render()
                );
                break;
            }
        }

        if all_ok {
            return Ok((
                SuperficialReport {
                    element: x.render(),
                    seed,
                    attempt,
                    checks,
                },
                x,
            ));
        }
    }

    Err(Error::NoSuperficialFound { retries, last_failure })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LciStatus {
    Verified,
    Refuted,
    UserAsserted,
    UndecidableHere,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LciReport {
    pub status: LciStatus,
    pub detail: String,
    pub minimal_primes: Option<Vec<Vec<String>>>,
}

fn monomial_support(p: &Poly) -> Option<Vec<usize>> {
    if p.terms().len() != 1 {
        return None;
    }
    Some(
        p.terms()[0]
            .0
            .exps()
            .iter()
            .enumerate()
            .filter_map(|(i, &e)| (e > 0).then_some(i))
            .collect(),
    )
}

/// Minimal primes over a set of monomials, as variable-index sets (minimal
/// covers). Returns None when some generator is not a monomial.
pub fn monomial_minimal_primes(gens: &[Poly], nvars: usize) -> Option<Vec<Vec<usize>>> {
    let mut supports = Vec::new();
    for g in gens {
        supports.push(monomial_support(g)?);
    }
    assert!(nvars <= 20);
    let mut covers: Vec<u32> = Vec::new();
    'mask: for mask in 0u32..(1 << nvars) {
        for supp in &supports {
            if !supp.iter().any(|&i| mask & (1 << i) != 0) {
                continue 'mask;
            }
        }
        covers.push(mask);
    }
    let minimal: Vec<u32> = covers
        .iter()
        .copied()
        .filter(|&m| !covers.iter().any(|&o| o != m && (o & m) == o))
        .collect();
    Some(
        minimal
            .into_iter()
            .map(|m| (0..nvars).filter(|i| m & (1 << i) != 0).collect())
            .collect(),
    )
}

/// Check that I is locally a complete intersection at every non-maximal
/// minimal prime of A/I. Decidable here only in the monomial case (J and I
/// both monomial); otherwise falls back to the user assertion.
pub fn lci_check(ideal: &IdealRep, asserted: bool, a_is_cm: Option<bool>) -> Result<LciReport> {
    let spec = ideal.spec();
    let ring = spec.ring();
    let nv = ring.nvars();

    let mut all_gens = spec.quotient().to_vec();
    all_gens.extend(ideal.gens().iter().cloned());
    let primes = monomial_minimal_primes(&all_gens, nv);

    let Some(primes) = primes else {
        return Ok(LciReport {
            status: if asserted { LciStatus::UserAsserted } else { LciStatus::UndecidableHere },
            detail: "non-monomial data: minimal primes are not tractable here".into(),
            minimal_primes: None,
        });
    };

    let prime_names: Vec<Vec<String>> = primes
        .iter()
        .map(|p| p.iter().map(|&i| ring.vars()[i].clone()).collect())
        .collect();

    let dim_a = spec.dim()?;
    let mut detail = String::new();
    let mut needs_cm = false;
    for p in &primes {
        if p.len() == nv {
            continue; // the irrelevant maximal ideal: not a candidate
        }
        let p_polys: Vec<Poly> = p.iter().map(|&i| ring.var(i)).collect();
        let dim_ap = dim_of_ideal(spec, &p_polys)?;
        let ht = dim_a - dim_ap;
        let in_p: Vec<bool> = (0..nv).map(|i| p.contains(&i)).collect();

        let strip = |g: &Poly| -> Vec<u32> {
            let exps = g.terms()[0].0.exps();
            exps.iter()
                .enumerate()
                .map(|(i, &e)| if in_p[i] { e } else { 0 })
                .collect()
        };
        let divides = |a: &[u32], b: &[u32]| a.iter().zip(b).all(|(x, y)| x <= y);

        let j_p: Vec<Vec<u32>> = spec.quotient().iter().map(&strip).collect();
        let mut i_p: Vec<Vec<u32>> = Vec::new();
        for g in ideal.gens() {
            let sg = strip(g);
            if j_p.iter().any(|j| divides(j, &sg)) {
                continue; // zero in the localization
            }
            i_p.push(sg);
        }
        // minimalize by divisibility
        let mut minimal: Vec<Vec<u32>> = Vec::new();
        for g in &i_p {
            if i_p.iter().any(|o| o != g && divides(o, g)) {
                continue;
            }
            if !minimal.contains(g) {
                minimal.push(g.clone());
            }
        }
        let mu = minimal.len() as i64;
        let pname = prime_names[primes.iter().position(|q| q == p).unwrap()].join(",");
        detail.push_str(&format!("P=({pname}): mu(I_P)={mu}, ht={ht}; "));
        if mu > ht {
            return Ok(LciReport {
                status: LciStatus::Refuted,
                detail: format!("{detail}mu(I_P) > ht at P = ({pname})"),
                minimal_primes: Some(prime_names),
            });
        }
        if mu < ht {
            return Ok(LciReport {
                status: LciStatus::UndecidableHere,
                detail: format!(
                    "{detail}computed mu(I_P) < ht at P = ({pname}); height convention unreliable here"
                ),
                minimal_primes: Some(prime_names),
            });
        }
        if mu > 0 {
            needs_cm = true;
        }
    }

    if needs_cm && a_is_cm != Some(true) {
        return Ok(LciReport {
            status: if asserted { LciStatus::UserAsserted } else { LciStatus::UndecidableHere },
            detail: format!(
                "{detail}mu = ht > 0 needs A Cohen-Macaulay to conclude a regular sequence"
            ),
            minimal_primes: Some(prime_names),
        });
    }

    Ok(LciReport {
        status: LciStatus::Verified,
        detail: if detail.is_empty() {
            "no non-maximal minimal primes: vacuously verified".into()
        } else {
            detail
        },
        minimal_primes: Some(prime_names),
    })
}

/// Rank of M at a monomial minimal prime (variable indices): kill the prime
/// variables in the presentation matrix and take the rank over the fraction
/// field of the remaining polynomial ring (fraction-free elimination).
pub fn rank_at_monomial_prime(m: &ModuleRep, prime: &[usize]) -> Result<i64> {
    let pres = m.presentation()?;
    let t = pres.min_gens.len();
    let ring = m.spec().ring();
    let kill = |p: &Poly| -> Poly {
        Poly::from_terms(
            ring,
            p.terms()
                .iter()
                .filter(|(mo, _)| prime.iter().all(|&i| mo.exps()[i] == 0))
                .map(|(mo, c)| (mo.clone(), c.clone()))
                .collect(),
        )
    };
    let mut mat: Vec<Vec<Poly>> = Vec::new();
    for row in 0..t {
        let mut r = Vec::new();
        for col in &pres.syzygy {
            r.push(kill(&col.comps[row]));
        }
        mat.push(r);
    }
    let rank = poly_matrix_rank(&mut mat)?;
    Ok(t as i64 - rank as i64)
}

/// Fraction-free rank of a polynomial matrix over the fraction field of a
/// polynomial domain (cross-multiplication elimination; no divisions).
fn poly_matrix_rank(mat: &mut [Vec<Poly>]) -> Result<usize> {
    let nrows = mat.len();
    if nrows == 0 {
        return Ok(0);
    }
    let ncols = mat[0].len();
    let mut rank = 0;
    let mut row_start = 0;
    for col in 0..ncols {
        let Some(pivot) = (row_start..nrows).find(|&r| !mat[r][col].is_zero()) else {
            continue;
        };
        mat.swap(row_start, pivot);
        let pivot_row = mat[row_start].clone();
        for r in row_start + 1..nrows {
            if mat[r][col].is_zero() {
                continue;
            }
            let factor = mat[r][col].clone();
            for c in 0..ncols {
                let a = mat[r][c].mul(&pivot_row[col])?;
                let b = pivot_row[c].mul(&factor)?;
                mat[r][c] = a.sub(&b)?;
            }
        }
        rank += 1;
        row_start += 1;
        if row_start == nrows {
            break;
        }
    }
    Ok(rank)
}
