//! Hypothesis checking and statement-consistency verdicts over a fully
//! computed instance. Every verdict is an implication check: vacuous truth
//! is allowed and always labeled, and a refuted statement is a regression
//! alarm for the whole engine.

use serde::{Deserialize, Serialize};

use crate::blowup::{
    fiber_cone, fiber_module, find_reduction, lci_check, monomial_minimal_primes,
    rank_at_monomial_prime, superficial_search, FiberConeRep, FiberModuleRep, FreenessVerdict,
    IdealRep, LciReport, LciStatus, ReductionReport, ReductionStatus, SuperficialReport,
    SuperficialTarget,
};
use crate::error::{Error, Result};
use crate::modalg::{dim_of_ideal, ModuleRep, Resolution, SubmoduleRep};
use crate::parse::Instance;
use crate::poly::Poly;
use crate::torpoly::{tor_profile, TorDegree, TorProfile};

/// Run parameters (defaults per the CLI contract).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Params {
    pub cutoff: u32,
    pub nmax: u32,
    pub window: usize,
    pub trials: u32,
    pub mmax: u32,
    pub retries: u32,
    pub cmax: u32,
    pub seed: u64,
}

impl Default for Params {
    fn default() -> Self {
        Params {
            cutoff: 12,
            nmax: 12,
            window: 4,
            trials: 16,
            mmax: 5,
            retries: 8,
            cmax: 6,
            seed: 0,
        }
    }
}

impl Params {
    /// Apply instance-file `param` overrides (CLI flags are applied on top
    /// by the caller).
    pub fn with_file_params(mut self, params: &std::collections::BTreeMap<String, i64>) -> Self {
        for (k, v) in params {
            match k.as_str() {
                "cutoff" => self.cutoff = *v as u32,
                "nmax" => self.nmax = *v as u32,
                "window" => self.window = *v as usize,
                "trials" => self.trials = *v as u32,
                "mmax" => self.mmax = *v as u32,
                "retries" => self.retries = *v as u32,
                "cmax" => self.cmax = *v as u32,
                "seed" => self.seed = *v as u64,
                _ => {} // rank_m and future keys are read where needed
            }
        }
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EntryStatus {
    Verified,
    Refuted,
    Assumed,
    Undecided,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IntEntry {
    pub value: Option<i64>,
    pub status: EntryStatus,
    pub note: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BoolEntry {
    pub value: Option<bool>,
    pub status: EntryStatus,
    pub note: String,
}

fn int_verified(v: i64, note: impl Into<String>) -> IntEntry {
    IntEntry { value: Some(v), status: EntryStatus::Verified, note: note.into() }
}

fn bool_entry(v: bool, note: impl Into<String>) -> BoolEntry {
    BoolEntry {
        value: Some(v),
        status: if v { EntryStatus::Verified } else { EntryStatus::Refuted },
        note: note.into(),
    }
}

/// The hypothesis list of the main statement, every entry computed (or
/// honestly `assumed`/`undecided`), never silently presumed.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HypothesisReport {
    pub d: IntEntry,
    pub is_cm_a: BoolEntry,
    pub is_mcm_m: BoolEntry,
    pub ht_i: IntEntry,
    pub ht_m_i: IntEntry,
    pub l_i: IntEntry,
    pub l_m_i: IntEntry,
    pub reduction_leq_one: BoolEntry,
    pub lci: LciReport,
    pub seed: u64,
    pub cutoff: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictOutcome {
    Consistent,
    Refuted,
    Undecided,
}

/// A machine-checked statement instance.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TheoremVerdict {
    pub statement: String,
    pub applicable: bool,
    pub antecedent_held: Option<bool>,
    pub conclusion_checked: bool,
    pub conclusion_holds: Option<bool>,
    pub consistent: bool,
    pub outcome: VerdictOutcome,
    pub details: String,
}

impl TheoremVerdict {
    fn inapplicable(statement: &str, why: impl Into<String>) -> Self {
        TheoremVerdict {
            statement: statement.into(),
            applicable: false,
            antecedent_held: None,
            conclusion_checked: false,
            conclusion_holds: None,
            consistent: true,
            outcome: VerdictOutcome::Consistent,
            details: format!("inapplicable: {}", why.into()),
        }
    }

    fn undecided(statement: &str, why: impl Into<String>) -> Self {
        TheoremVerdict {
            statement: statement.into(),
            applicable: true,
            antecedent_held: None,
            conclusion_checked: false,
            conclusion_holds: None,
            consistent: false,
            outcome: VerdictOutcome::Undecided,
            details: format!("undecided: {}", why.into()),
        }
    }
}

/// Everything computed once over an instance; the verdicts consume this.
pub struct Analysis {
    pub instance: Instance,
    pub params: Params,
    pub d: i64,
    pub res_a: Resolution,
    pub res_m: Resolution,
    pub mu_m: usize,
    pub module_is_zero: bool,
    pub ht_i: i64,
    pub ht_m_i: Option<i64>,
    pub cone: FiberConeRep,
    pub fm: FiberModuleRep,
    pub reduction: ReductionReport,
    pub lci: LciReport,
    pub tor: std::result::Result<TorProfile, String>,
    pub tor_values: Option<Vec<i64>>,
    pub superficial: Option<(SuperficialReport, Poly)>,
    pub superficial_error: Option<String>,
    pub quotient_tor: Option<std::result::Result<TorProfile, String>>,
    pub lemma213_sides: Option<(Vec<i64>, Vec<i64>)>,
}

/// Compute every invariant the verdicts need. Only `NotStabilized` and
/// superficial-search exhaustion are tolerated (they surface as `undecided`);
/// any other engine failure propagates.
pub fn run_analysis(instance: &Instance, params: &Params) -> Result<Analysis> {
    let spec = instance.spec.clone();
    let nv = spec.ring().nvars();
    let d = spec.dim()?;

    let a_module = ModuleRep::cyclic(spec.clone(), &[])?;
    let res_a = a_module.free_resolution(nv + 1)?;
    let res_m = instance.module.free_resolution(nv + 1)?;
    let (mu_m, _) = instance.module.minimal_generators()?;
    let module_is_zero = instance.module.is_zero()?;

    let ht_i = d - dim_of_ideal(&spec, instance.ideal.gens())?;
    let ht_m_i = if module_is_zero {
        None
    } else {
        let m_mod_i = instance.module.quotient_by_ideal(instance.ideal.gens())?;
        Some(res_m.dim - m_mod_i.krull_dim()?)
    };

    let cone = fiber_cone(&instance.ideal, params.cutoff)?;
    let fm = fiber_module(&instance.module, &instance.ideal, &cone, params.cutoff, params.window)?;

    let reduction = find_reduction(
        &instance.ideal,
        cone.analytic_spread,
        params.trials,
        params.mmax,
        params.seed,
    )?;

    // with a certified principal reduction of number <= 1 the chain
    // mu(IM) >= mu(I^2 M) >= ... is forced; violations are engine bugs
    if cone.analytic_spread == 1 {
        if let Some(r) = reduction.r_j.filter(|&r| r <= 1) {
            let start = r.max(1) as usize;
            for n in start..fm.hf.len() - 1 {
                assert!(
                    fm.hf[n + 1] <= fm.hf[n],
                    "monotone chain violated at n = {n}: {} > {}",
                    fm.hf[n + 1],
                    fm.hf[n]
                );
            }
        }
    }

    let lci = lci_check(&instance.ideal, instance.assert_lci, Some(res_a.is_cm))?;

    let tor_values = match crate::torpoly::tor1_sequence(&instance.module, &instance.ideal, params.nmax) {
        Ok(v) => Some(v),
        Err(Error::TorInfinite { .. }) => None,
        Err(e) => return Err(e),
    };
    let tor = match tor_values.as_ref() {
        None => Err("a Tor length failed the finiteness certificate".to_string()),
        Some(values) => match crate::torpoly::fit_polynomial(values, params.window) {
            Ok(fit) => Ok(TorProfile {
                values: values.clone(),
                degree: fit.degree,
                coeffs: fit.coeffs,
                base: fit.base,
                stable_from: fit.stable_from,
                window: params.window,
            }),
            Err(Error::NotStabilized { .. }) => {
                Err(format!("not stabilized within nmax = {}; raise nmax", params.nmax))
            }
            Err(e) => return Err(e),
        },
    };

    // superficial element + quotient data, for d >= 2
    let mut superficial = None;
    let mut superficial_error = None;
    let mut quotient_tor = None;
    let mut lemma213_sides = None;
    if d >= 2 && !module_is_zero {
        let l_syz = instance.module.first_syzygy()?;
        let targets = [
            SuperficialTarget { label: "A", module: &a_module, vv: true },
            SuperficialTarget { label: "M", module: &instance.module, vv: true },
            SuperficialTarget { label: "L", module: &l_syz, vv: false },
        ];
        match superficial_search(
            &instance.ideal,
            &targets,
            params.cutoff,
            params.cmax,
            params.seed,
            params.retries,
        ) {
            Ok((report, x)) => {
                // quotient instance B = A/(x), N = M/xM, I-bar = I/(x)
                let b_spec = spec.quotient_by(&x)?;
                let n_mod = instance.module.quotient_by_element(&x)?;
                let i_bar = IdealRep::new(b_spec.clone(), instance.ideal.gens().to_vec())?;

                quotient_tor = Some(
                    match tor_profile(&n_mod, &i_bar, params.nmax, params.window) {
                        Ok(p) => Ok(p),
                        Err(Error::NotStabilized { .. }) => {
                            Err("quotient profile not stabilized; raise nmax".to_string())
                        }
                        Err(Error::TorInfinite { n }) => {
                            Err(format!("quotient Tor at power {n} not finite"))
                        }
                        Err(e) => return Err(e),
                    },
                );

                // Lemma 2.13 sides: HF of F_{I-bar}(N) vs F_I(M)/x°F_I(M)
                let sub_cutoff = params.cutoff - 1;
                let cone_b = fiber_cone(&i_bar, sub_cutoff)?;
                let fm_b = fiber_module(&n_mod, &i_bar, &cone_b, sub_cutoff, params.window)?;
                let mut rhs = Vec::with_capacity(sub_cutoff as usize + 1);
                rhs.push(mu_m as i64);
                for n in 1..=sub_cutoff {
                    rhs.push(fiber_quotient_hf(instance, &x, n)?);
                }
                lemma213_sides = Some((fm_b.hf.clone(), rhs));
                superficial = Some((report, x));
            }
            Err(Error::NoSuperficialFound { retries, last_failure }) => {
                superficial_error = Some(format!(
                    "no superficial element after {retries} retries: {last_failure}"
                ));
            }
            Err(e) => return Err(e),
        }
    }

    Ok(Analysis {
        instance: instance.clone(),
        params: params.clone(),
        d,
        res_a,
        res_m,
        mu_m,
        module_is_zero,
        ht_i,
        ht_m_i,
        cone,
        fm,
        reduction,
        lci,
        tor,
        tor_values,
        superficial,
        superficial_error,
        quotient_tor,
        lemma213_sides,
    })
}

/// ℓ(IⁿM / (xI^{n-1}M + m IⁿM)): the degree-n piece of F_I(M)/x°F_I(M).
fn fiber_quotient_hf(instance: &Instance, x: &Poly, n: u32) -> Result<i64> {
    let m = &instance.module;
    let ideal = &instance.ideal;
    let spec = m.spec().clone();
    let ring = spec.ring().clone();
    let field = ring.field().clone();

    let powers_n = ideal.power(n)?;
    let powers_n1 = ideal.power(n - 1)?;
    let mut num_gens = Vec::new();
    for p in &powers_n {
        for u in m.num().gens() {
            let v = u.poly_mul(p)?;
            if !v.is_zero() {
                num_gens.push(v);
            }
        }
    }
    num_gens.extend(m.rel().gens().iter().cloned());

    let mut den_gens = Vec::new();
    for q in &powers_n1 {
        for u in m.num().gens() {
            let v = u.poly_mul(q)?.poly_mul(x)?;
            if !v.is_zero() {
                den_gens.push(v);
            }
        }
    }
    for p in &powers_n {
        for u in m.num().gens() {
            for i in 0..ring.nvars() {
                let xi = crate::monomial::Monomial::var(i, ring.nvars(), ring.weights());
                let v = u.poly_mul(p)?.term_mul(&xi, &field.one());
                if !v.is_zero() {
                    den_gens.push(v);
                }
            }
        }
    }
    den_gens.extend(m.rel().gens().iter().cloned());

    let num = SubmoduleRep::new(spec.clone(), m.ambient().clone(), num_gens)?;
    let den = SubmoduleRep::new(spec, m.ambient().clone(), den_gens)?;

    // the quotient is killed by m, so it lives in the numerator generator degrees
    let mut degrees: Vec<i64> = num
        .gens()
        .iter()
        .filter_map(|g| g.homogeneous_degree(m.ambient()).ok().flatten())
        .collect();
    degrees.sort();
    degrees.dedup();
    let mut total = 0i64;
    for e in degrees {
        total += num.dim_at_degree(e)? - den.dim_at_degree(e)?;
    }
    Ok(total)
}

pub fn check_hypotheses(a: &Analysis) -> HypothesisReport {
    let d = a.d;
    let red_note = match (&a.reduction.status, a.reduction.r_j) {
        (ReductionStatus::VerifiedLeqOne, Some(r)) => format!("certified r_J = {r}"),
        (ReductionStatus::FoundRJ, Some(r)) => format!("best certified r_J = {r} > 1"),
        _ => format!("no reduction certified within {} trials", a.reduction.trials_used),
    };
    let reduction_leq_one = match (&a.reduction.status, a.reduction.r_j) {
        (ReductionStatus::VerifiedLeqOne, _) => BoolEntry {
            value: Some(true),
            status: EntryStatus::Verified,
            note: red_note,
        },
        _ => BoolEntry {
            value: None,
            status: EntryStatus::Undecided,
            note: red_note,
        },
    };
    let l_m_i = match a.fm.l_m {
        Some(l) => int_verified(l, "1 + degree of the fitted polynomial of mu(I^n M)"),
        None => IntEntry {
            value: None,
            status: EntryStatus::Undecided,
            note: "mu(I^n M) did not stabilize within the cutoff".into(),
        },
    };
    HypothesisReport {
        d: int_verified(d, "Krull dimension of A"),
        is_cm_a: bool_entry(a.res_a.is_cm, format!("depth {} vs dim {}", a.res_a.depth, a.res_a.dim)),
        is_mcm_m: bool_entry(
            a.res_m.is_mcm_over_a,
            format!("depth {} vs dim A = {}", a.res_m.depth, d),
        ),
        ht_i: int_verified(a.ht_i, "dim A - dim A/I"),
        ht_m_i: match a.ht_m_i {
            Some(h) => int_verified(h, "dim M - dim M/IM (documented convention)"),
            None => IntEntry {
                value: None,
                status: EntryStatus::Undecided,
                note: "module is zero".into(),
            },
        },
        l_i: int_verified(a.cone.analytic_spread, "dim F(I)"),
        l_m_i,
        reduction_leq_one,
        lci: a.lci.clone(),
        seed: a.params.seed,
        cutoff: a.params.cutoff,
    }
}

fn lci_ok(lci: &LciReport) -> Option<bool> {
    match lci.status {
        LciStatus::Verified | LciStatus::UserAsserted => Some(true),
        LciStatus::Refuted => Some(false),
        LciStatus::UndecidableHere => None,
    }
}

/// Hypothesis gate shared by Theorem 3.1: Some(reason) when inapplicable,
/// None when all hypotheses are verified or assumed.
fn theorem31_gate(a: &Analysis, hyp: &HypothesisReport) -> std::result::Result<(), TheoremVerdict> {
    let st = "theorem_3_1";
    let mut failures = Vec::new();
    let mut undecided: Vec<String> = Vec::new();
    if a.d < 1 {
        failures.push(format!("d = {} < 1", a.d));
    }
    if !a.res_a.is_cm {
        failures.push("A is not Cohen-Macaulay".into());
    }
    if a.module_is_zero {
        failures.push("M is zero".into());
    }
    if !a.res_m.is_mcm_over_a {
        failures.push("M is not maximal Cohen-Macaulay".into());
    }
    if a.ht_i != a.d - 1 {
        failures.push(format!("ht(I) = {} != d - 1 = {}", a.ht_i, a.d - 1));
    }
    match a.ht_m_i {
        Some(h) if h == a.d - 1 => {}
        Some(h) => failures.push(format!("ht_M(I) = {} != d - 1 = {}", h, a.d - 1)),
        None => undecided.push("ht_M(I) unavailable".into()),
    }
    match a.fm.l_m {
        Some(l) if l == a.d => {}
        Some(l) => failures.push(format!("l_M(I) = {} != d = {}", l, a.d)),
        None => undecided.push("l_M(I) undecided (fiber HF not stabilized)".into()),
    }
    match hyp.reduction_leq_one.status {
        EntryStatus::Verified => {}
        EntryStatus::Undecided => undecided.push("r(I) <= 1 not certified".into()),
        _ => failures.push("r(I) <= 1 refuted".into()),
    }
    match lci_ok(&a.lci) {
        Some(true) => {}
        Some(false) => failures.push("I is not locally a complete intersection".into()),
        None => undecided.push("lci status undecidable here".into()),
    }
    if !failures.is_empty() {
        return Err(TheoremVerdict::inapplicable(st, failures.join("; ")));
    }
    if !undecided.is_empty() {
        return Err(TheoremVerdict::undecided(st, undecided.join("; ")));
    }
    Ok(())
}

/// Theorem: under the hypothesis list, deg t < d - 1 forces F_I(M) free.
pub fn check_theorem31(a: &Analysis, hyp: &HypothesisReport) -> TheoremVerdict {
    let st = "theorem_3_1";
    if let Err(v) = theorem31_gate(a, hyp) {
        return v;
    }
    let profile = match &a.tor {
        Ok(p) => p,
        Err(why) => return TheoremVerdict::undecided(st, why.clone()),
    };
    let antecedent = profile.degree.lt(a.d - 1);
    let free = a.fm.verdict == FreenessVerdict::FreeToCutoff;
    let deg_str = match profile.degree {
        TorDegree::MinusInfinity => "minus_infinity".to_string(),
        TorDegree::Deg(k) => k.to_string(),
    };
    if antecedent {
        TheoremVerdict {
            statement: st.into(),
            applicable: true,
            antecedent_held: Some(true),
            conclusion_checked: true,
            conclusion_holds: Some(free),
            consistent: free,
            outcome: if free { VerdictOutcome::Consistent } else { VerdictOutcome::Refuted },
            details: format!(
                "deg t = {} < d - 1 = {}; freeness to cutoff {} = {}",
                deg_str,
                a.d - 1,
                a.params.cutoff,
                free
            ),
        }
    } else {
        TheoremVerdict {
            statement: st.into(),
            applicable: true,
            antecedent_held: Some(false),
            conclusion_checked: false,
            conclusion_holds: None,
            consistent: true,
            outcome: VerdictOutcome::Consistent,
            details: format!(
                "vacuous: deg t = {} >= d - 1 = {}; observed pair (deg t, free@{}) = ({}, {})",
                deg_str,
                a.d - 1,
                a.params.cutoff,
                deg_str,
                free
            ),
        }
    }
}

/// Lemma: for I generated by a regular sequence, Tor₁(M, A/Iⁿ) = 0.
pub fn check_lemma21(a: &Analysis) -> TheoremVerdict {
    let st = "lemma_2_1";
    if !a.res_a.is_cm || !a.res_m.is_mcm_over_a || a.module_is_zero {
        return TheoremVerdict::inapplicable(st, "needs A CM and M maximal CM");
    }
    // verify the regular-sequence precondition by iterated colons
    let spec = &a.instance.spec;
    let gens = a.instance.ideal.gens();
    let full = match SubmoduleRep::ideal(spec.clone(), gens) {
        Ok(s) => s,
        Err(e) => return TheoremVerdict::undecided(st, e.to_string()),
    };
    match full.gb().map(|gb| {
        gb.contains(&crate::freemod::FreeModule::new(spec.ring().clone(), 1).from_poly(spec.ring().one()))
    }) {
        Ok(Ok(true)) => return TheoremVerdict::inapplicable(st, "I is the unit ideal"),
        Ok(Ok(false)) => {}
        _ => return TheoremVerdict::undecided(st, "membership check failed"),
    }
    for k in 0..gens.len() {
        let prior = match SubmoduleRep::ideal(spec.clone(), &gens[..k]) {
            Ok(s) => s,
            Err(e) => return TheoremVerdict::undecided(st, e.to_string()),
        };
        let colon = match prior.colon_by(&gens[k]) {
            Ok(c) => c,
            Err(e) => return TheoremVerdict::undecided(st, e.to_string()),
        };
        match prior.contains_submodule(&colon) {
            Ok(true) => {}
            Ok(false) => {
                return TheoremVerdict::inapplicable(
                    st,
                    format!(
                        "generator {} is a zerodivisor modulo the earlier ones",
                        gens[k].render()
                    ),
                )
            }
            Err(e) => return TheoremVerdict::undecided(st, e.to_string()),
        }
    }
    let Some(values) = a.tor_values.as_ref() else {
        return TheoremVerdict::undecided(st, "Tor lengths unavailable");
    };
    let all_zero = values.iter().all(|&v| v == 0);
    TheoremVerdict {
        statement: st.into(),
        applicable: true,
        antecedent_held: Some(true),
        conclusion_checked: true,
        conclusion_holds: Some(all_zero),
        consistent: all_zero,
        outcome: if all_zero { VerdictOutcome::Consistent } else { VerdictOutcome::Refuted },
        details: format!(
            "regular sequence verified; Tor lengths for powers 1..={}: {:?}",
            a.params.nmax + 1,
            values
        ),
    }
}

/// Lemma: additivity t(M; n) = t(M; n-1) + t(N; n) on the stable window,
/// and the degree drop, for a verified superficial x.
pub fn check_lemma28(a: &Analysis) -> TheoremVerdict {
    let st = "lemma_2_8";
    if a.d < 2 {
        return TheoremVerdict::inapplicable(
            st,
            format!("d = {} < 2: the quotient step leaves dimension 0 (guarded)", a.d),
        );
    }
    if a.module_is_zero {
        return TheoremVerdict::inapplicable(st, "M is zero");
    }
    if a.superficial.is_none() {
        let why = a
            .superficial_error
            .clone()
            .unwrap_or_else(|| "no superficial element".into());
        return TheoremVerdict::undecided(st, why);
    }
    let pm = match &a.tor {
        Ok(p) => p,
        Err(why) => return TheoremVerdict::undecided(st, why.clone()),
    };
    let pn = match a.quotient_tor.as_ref() {
        Some(Ok(p)) => p,
        Some(Err(why)) => return TheoremVerdict::undecided(st, why.clone()),
        None => return TheoremVerdict::undecided(st, "quotient profile missing"),
    };
    let lo = (pm.stable_from + 1).max(pn.stable_from);
    let hi = pm.values.len().min(pn.values.len()) - 1;
    if lo > hi {
        return TheoremVerdict::undecided(st, "stable windows do not overlap; raise nmax");
    }
    let mut additive = true;
    for n in lo..=hi {
        if pm.values[n] != pm.values[n - 1] + pn.values[n] {
            additive = false;
            break;
        }
    }
    let drop_ok = match (pn.degree, pm.degree) {
        (TorDegree::MinusInfinity, _) => true,
        (TorDegree::Deg(_), TorDegree::MinusInfinity) => false,
        (TorDegree::Deg(dn), TorDegree::Deg(dm)) => dn < dm,
    };
    let ok = additive && drop_ok;
    TheoremVerdict {
        statement: st.into(),
        applicable: true,
        antecedent_held: Some(true),
        conclusion_checked: true,
        conclusion_holds: Some(ok),
        consistent: ok,
        outcome: if ok { VerdictOutcome::Consistent } else { VerdictOutcome::Refuted },
        details: format!(
            "additivity on window [{lo}, {hi}]: {additive}; degree drop: {drop_ok} (deg M side {:?}, quotient side {:?})",
            pm.degree, pn.degree
        ),
    }
}

/// Hypersurface biconditional: deg t < 0 iff M is free (d = 1, constant rank).
pub fn check_prop41(a: &Analysis) -> TheoremVerdict {
    let st = "prop_4_1";
    if a.d != 1 {
        return TheoremVerdict::inapplicable(st, format!("d = {} != 1", a.d));
    }
    let spec = &a.instance.spec;
    if spec.quotient().len() != 1 {
        return TheoremVerdict::inapplicable(st, "A is not a hypersurface (J not principal)");
    }
    if !a.res_a.is_cm || !a.res_m.is_mcm_over_a || a.module_is_zero {
        return TheoremVerdict::inapplicable(st, "needs A CM and M maximal CM");
    }
    if a.ht_i != 0 {
        return TheoremVerdict::inapplicable(st, format!("ht(I) = {} != 0", a.ht_i));
    }
    if a.cone.analytic_spread != 1 {
        return TheoremVerdict::inapplicable(
            st,
            format!("l(I) = {} != 1", a.cone.analytic_spread),
        );
    }
    match lci_ok(&a.lci) {
        Some(true) => {}
        Some(false) => return TheoremVerdict::inapplicable(st, "I is not lci"),
        None => return TheoremVerdict::undecided(st, "lci status undecidable here"),
    }

    // constant-rank data: monomial route, or the rank_m file parameter
    let nv = spec.ring().nvars();
    let ranks: Option<Vec<i64>> = match monomial_minimal_primes(spec.quotient(), nv) {
        Some(primes) => {
            let mut out = Vec::new();
            for p in &primes {
                match rank_at_monomial_prime(&a.instance.module, p) {
                    Ok(r) => out.push(r),
                    Err(_) => return TheoremVerdict::undecided(st, "rank computation failed"),
                }
            }
            Some(out)
        }
        None => a.instance.params.get("rank_m").map(|&r| vec![r]),
    };
    let Some(ranks) = ranks else {
        return TheoremVerdict::inapplicable(st, "rank data unavailable (non-monomial J, no rank_m)");
    };
    if ranks.windows(2).any(|w| w[0] != w[1]) {
        return TheoremVerdict::inapplicable(
            st,
            format!("M does not have constant rank: ranks {ranks:?} at the minimal primes"),
        );
    }

    let profile = match &a.tor {
        Ok(p) => p,
        Err(why) => return TheoremVerdict::undecided(st, why.clone()),
    };
    let deg_neg = profile.degree.lt(0);
    // freeness of M: the kernel of the minimal cover is zero over A
    let free = match a.instance.module.first_syzygy() {
        Ok(l) => match l.num().is_zero_over_a() {
            Ok(z) => z,
            Err(_) => return TheoremVerdict::undecided(st, "kernel membership failed"),
        },
        Err(_) => return TheoremVerdict::undecided(st, "presentation failed"),
    };
    let ok = deg_neg == free;
    TheoremVerdict {
        statement: st.into(),
        applicable: true,
        antecedent_held: Some(deg_neg),
        conclusion_checked: true,
        conclusion_holds: Some(ok),
        consistent: ok,
        outcome: if ok { VerdictOutcome::Consistent } else { VerdictOutcome::Refuted },
        details: format!(
            "biconditional: deg t < 0 is {deg_neg}, M free is {free}; ranks {ranks:?}"
        ),
    }
}

/// Lemma: F_{I-bar}(N) and F_I(M)/x°F_I(M) have the same Hilbert function.
pub fn check_lemma213(a: &Analysis) -> TheoremVerdict {
    let st = "lemma_2_13";
    if a.d < 2 {
        return TheoremVerdict::inapplicable(
            st,
            format!("d = {} < 2: degenerate quotient (guarded)", a.d),
        );
    }
    if a.module_is_zero {
        return TheoremVerdict::inapplicable(st, "M is zero");
    }
    if a.superficial.is_none() {
        let why = a
            .superficial_error
            .clone()
            .unwrap_or_else(|| "no VV-verified element".into());
        return TheoremVerdict::undecided(st, why);
    }
    let Some((lhs, rhs)) = a.lemma213_sides.as_ref() else {
        return TheoremVerdict::undecided(st, "sides not computed");
    };
    let equal = lhs == rhs;
    TheoremVerdict {
        statement: st.into(),
        applicable: true,
        antecedent_held: Some(true),
        conclusion_checked: true,
        conclusion_holds: Some(equal),
        consistent: equal,
        outcome: if equal { VerdictOutcome::Consistent } else { VerdictOutcome::Refuted },
        details: format!("HF F_Ibar(N) = {lhs:?}; HF F_I(M)/x°F_I(M) = {rhs:?}"),
    }
}

/// All five statement checks in report order.
pub fn all_verdicts(a: &Analysis, hyp: &HypothesisReport) -> Vec<TheoremVerdict> {
    vec![
        check_lemma21(a),
        check_lemma28(a),
        check_lemma213(a),
        check_theorem31(a, hyp),
        check_prop41(a),
    ]
}
