//! Tor-length sequences n ↦ ℓ(Tor₁(M, A/Iⁿ⁺¹)), eventual-polynomial
//! detection by finite differences, and the degree report with the
//! minus-infinity convention for the zero polynomial.

use serde::{Deserialize, Serialize};

use crate::blowup::IdealRep;
use crate::error::{Error, Result};
use crate::modalg::{LengthResult, ModuleRep, SubmoduleRep};

/// Degree of the fitted polynomial; the zero polynomial has degree
/// minus-infinity, serialized as the string "minus_infinity".
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum TorDegree {
    MinusInfinity,
    Deg(i64),
}

impl Serialize for TorDegree {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            TorDegree::MinusInfinity => s.serialize_str("minus_infinity"),
            TorDegree::Deg(d) => s.serialize_i64(*d),
        }
    }
}

impl<'de> Deserialize<'de> for TorDegree {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            S(String),
            I(i64),
        }
        match Repr::deserialize(d)? {
            Repr::S(s) if s == "minus_infinity" => Ok(TorDegree::MinusInfinity),
            Repr::S(s) => Err(serde::de::Error::custom(format!("bad degree: {s}"))),
            Repr::I(i) => Ok(TorDegree::Deg(i)),
        }
    }
}

impl TorDegree {
    /// Strict comparison with an integer, minus-infinity below everything.
    pub fn lt(&self, rhs: i64) -> bool {
        match self {
            TorDegree::MinusInfinity => true,
            TorDegree::Deg(d) => *d < rhs,
        }
    }

    pub fn leq(&self, rhs: i64) -> bool {
        match self {
            TorDegree::MinusInfinity => true,
            TorDegree::Deg(d) => *d <= rhs,
        }
    }
}

/// One Tor length, or the honest report that the module is not finite-length.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TorValue {
    Finite(i64),
    Infinite,
}

/// The fitted eventual polynomial of an integer sequence, in the Newton
/// forward-difference (binomial) basis at `base`:
/// P(n) = sum_j coeffs[j] * C(n - base, j).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyFit {
    pub degree: TorDegree,
    pub coeffs: Vec<i64>,
    pub base: i64,
    pub stable_from: usize,
}

/// The Tor-length profile of (M, I): values[n] = ℓ(Tor₁(M, A/I^{n+1})).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TorProfile {
    pub values: Vec<i64>,
    pub degree: TorDegree,
    pub coeffs: Vec<i64>,
    pub base: i64,
    pub stable_from: usize,
    pub window: usize,
}

/// Binomial C(m, j) for integer m (possibly negative), exact.
pub fn binomial(m: i64, j: usize) -> i64 {
    let mut num: i128 = 1;
    for k in 0..j {
        num *= m as i128 - k as i128;
    }
    let mut den: i128 = 1;
    for k in 1..=j {
        den *= k as i128;
    }
    (num / den) as i64
}

/// Evaluate a Newton-basis polynomial at n.
pub fn eval_fit(coeffs: &[i64], base: i64, n: i64) -> i64 {
    coeffs
        .iter()
        .enumerate()
        .map(|(j, c)| c * binomial(n - base, j))
        .sum()
}

/// ℓ(Tor₁(M, A/Iⁿ)) via the first-syzygy subquotient (L ∩ IⁿF)/(IⁿL).
/// Requires n >= 1.
pub fn tor1_length(m: &ModuleRep, ideal: &IdealRep, n: u32) -> Result<TorValue> {
    if n < 1 {
        return Err(Error::DomainError("tor1_length requires n >= 1".into()));
    }
    let spec = m.spec().clone();
    let pres = m.presentation()?;
    if pres.min_gens.is_empty() {
        return Ok(TorValue::Finite(0));
    }
    let free = pres.free.clone();
    let l_sub = SubmoduleRep::new(spec.clone(), free.clone(), pres.syzygy.clone())?;
    if pres.syzygy.is_empty() {
        // free module: Tor vanishes
        return Ok(TorValue::Finite(0));
    }
    let powers = ideal.power(n)?;
    let mut in_f0_gens = Vec::new();
    for p in &powers {
        for k in 0..free.rank() {
            let mut v = free.zero_vec();
            v.comps[k] = p.clone();
            in_f0_gens.push(v);
        }
    }
    let in_f0 = SubmoduleRep::new(spec.clone(), free.clone(), in_f0_gens)?;
    let w1 = l_sub.intersect(&in_f0)?;

    let mut in_l_gens = Vec::new();
    for p in &powers {
        for l in &pres.syzygy {
            in_l_gens.push(l.poly_mul(p)?);
        }
    }
    let sub = ModuleRep::subquotient(spec, free, w1.gens().to_vec(), in_l_gens)?;
    match sub.finite_length()? {
        LengthResult::Finite(len) => Ok(TorValue::Finite(len)),
        LengthResult::Infinite => Ok(TorValue::Infinite),
    }
}

/// values[j] = ℓ(Tor₁(M, A/I^{j+1})) for j = 0..=nmax. An infinite entry
/// aborts with a diagnostic naming the failing power.
pub fn tor1_sequence(m: &ModuleRep, ideal: &IdealRep, nmax: u32) -> Result<Vec<i64>> {
    let mut out = Vec::with_capacity(nmax as usize + 1);
    for j in 0..=nmax {
        match tor1_length(m, ideal, j + 1)? {
            TorValue::Finite(len) => out.push(len),
            TorValue::Infinite => return Err(Error::TorInfinite { n: j + 1 }),
        }
    }
    Ok(out)
}

/// Fit the eventual polynomial by finite differences: the smallest k whose
/// k-th differences are constant over the last `window` entries wins; the
/// Newton polynomial is then extended backwards as far as it reproduces the
/// data, and re-verified exactly on [stable_from, N].
pub fn fit_polynomial(values: &[i64], window: usize) -> Result<PolyFit> {
    let n_len = values.len();
    if n_len < window + 2 {
        return Err(Error::DomainError(format!(
            "need at least window + 2 = {} values, got {}",
            window + 2,
            n_len
        )));
    }
    let big_n = n_len - 1;
    let mut diffs: Vec<i64> = values.to_vec();
    for k in 0..=big_n {
        // diffs currently holds the k-th differences (length big_n - k + 1)
        let len_k = big_n - k + 1;
        if len_k >= window {
            let tail = &diffs[len_k - window..len_k];
            if tail.iter().all(|&d| d == tail[0]) {
                let p = (big_n - k + 1 - window) as i64; // window start in value index
                let base = p as usize;
                // Newton coefficients at `base`
                let mut coeffs = Vec::with_capacity(k + 1);
                let mut row: Vec<i64> = values[base..].to_vec();
                for _ in 0..=k {
                    coeffs.push(row[0]);
                    row = row.windows(2).map(|w| w[1] - w[0]).collect();
                }
                while coeffs.last() == Some(&0) && coeffs.len() > 1 {
                    coeffs.pop();
                }
                let mut stable_from = base;
                while stable_from > 0
                    && eval_fit(&coeffs, p, stable_from as i64 - 1) == values[stable_from - 1]
                {
                    stable_from -= 1;
                }
                for (idx, &v) in values.iter().enumerate().skip(stable_from) {
                    assert_eq!(
                        eval_fit(&coeffs, p, idx as i64),
                        v,
                        "fitted polynomial fails to reproduce the stable window"
                    );
                }
                let degree = if values[stable_from..].iter().all(|&v| v == 0) {
                    TorDegree::MinusInfinity
                } else {
                    TorDegree::Deg((coeffs.len() - 1) as i64)
                };
                let coeffs = if degree == TorDegree::MinusInfinity { Vec::new() } else { coeffs };
                return Ok(PolyFit { degree, coeffs, base: p, stable_from });
            }
        }
        if len_k <= 1 {
            break;
        }
        diffs = diffs.windows(2).map(|w| w[1] - w[0]).collect();
    }
    Err(Error::NotStabilized { len: n_len, window })
}

/// Full profile: lengths plus the fitted polynomial.
pub fn tor_profile(
    m: &ModuleRep,
    ideal: &IdealRep,
    nmax: u32,
    window: usize,
) -> Result<TorProfile> {
    let values = tor1_sequence(m, ideal, nmax)?;
    let fit = fit_polynomial(&values, window)?;
    Ok(TorProfile {
        values,
        degree: fit.degree,
        coeffs: fit.coeffs,
        base: fit.base,
        stable_from: fit.stable_from,
        window,
    })
}
