//! Shared test-support code: golden-instance loading, the randomized engine
//! suites, and the dense-linear-algebra Tor oracle. Everything here is
//! independent of the Gröbner code paths it audits.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

use fibertool::blowup::IdealRep;
use fibertool::field::CoeffField;
use fibertool::groebner::{buchberger_ideal, normal_form_poly, normal_form_vec, s_vector};
use fibertool::modalg::{ModuleRep, SubmoduleRep};
use fibertool::monomial::{Monomial, MonomialOrder};
use fibertool::parse::{parse_instance, Instance};
use fibertool::poly::{Poly, Ring};
use fibertool::ringspec::RingSpec;
use fibertool::torpoly::{tor1_length, TorValue};

pub fn golden(name: &str) -> Instance {
    let text = match name {
        "ex5" => include_str!("../../instances/ex5.alg"),
        "lemma21" => include_str!("../../instances/lemma21.alg"),
        "a1" => include_str!("../../instances/a1.alg"),
        "free" => include_str!("../../instances/free.alg"),
        _ => panic!("unknown golden instance {name}"),
    };
    parse_instance(text).unwrap()
}

pub const GOLDEN_NAMES: [&str; 4] = ["ex5", "lemma21", "a1", "free"];

fn random_ring(rng: &mut ChaCha20Rng) -> Ring {
    let nvars = rng.gen_range(1..=3usize);
    let names = ["x", "y", "z"];
    Ring::new(
        CoeffField::default_prime(),
        names[..nvars].iter().map(|s| s.to_string()).collect(),
        vec![1; nvars],
        MonomialOrder::Grevlex,
    )
    .unwrap()
}

fn random_poly(ring: &Ring, rng: &mut ChaCha20Rng, max_deg: u32, max_terms: usize) -> Poly {
    let nterms = rng.gen_range(1..=max_terms);
    let mut terms = Vec::new();
    for _ in 0..nterms {
        let mut exps = vec![0u32; ring.nvars()];
        let deg = rng.gen_range(0..=max_deg);
        for _ in 0..deg {
            let i = rng.gen_range(0..ring.nvars());
            exps[i] += 1;
        }
        let c = ring.field().from_i64(rng.gen_range(1..32003i64));
        terms.push((Monomial::new(exps, ring.weights()), c));
    }
    Poly::from_terms(ring, terms)
}

fn random_homogeneous_poly(ring: &Ring, rng: &mut ChaCha20Rng, deg: u32) -> Poly {
    let mut terms = Vec::new();
    for _ in 0..rng.gen_range(1..=3usize) {
        let mut exps = vec![0u32; ring.nvars()];
        for _ in 0..deg {
            let i = rng.gen_range(0..ring.nvars());
            exps[i] += 1;
        }
        let c = ring.field().from_i64(rng.gen_range(1..32003i64));
        terms.push((Monomial::new(exps, ring.weights()), c));
    }
    Poly::from_terms(ring, terms)
}

/// Suite (a): NF idempotence and post-hoc S-pair certificates over `cases`
/// random ideals in <= 3 variables with generators of degree <= 3.
pub fn run_nf_and_spair_suite(cases: usize) {
    let mut rng = ChaCha20Rng::seed_from_u64(0xF1BE_2024);
    for case in 0..cases {
        let ring = random_ring(&mut rng);
        let ngens = rng.gen_range(1..=3usize);
        let gens: Vec<Poly> = (0..ngens)
            .map(|_| random_poly(&ring, &mut rng, 3, 3))
            .filter(|p| !p.is_zero())
            .collect();
        if gens.is_empty() {
            continue;
        }
        let gb = buchberger_ideal(&gens, &ring).unwrap();
        for g in &gens {
            let nf = normal_form_poly(g, &gb).unwrap();
            assert!(nf.is_zero(), "case {case}: input generator not in its own basis");
        }
        for i in 0..gb.gens.len() {
            for j in (i + 1)..gb.gens.len() {
                if let Some(s) = s_vector(&gb.gens[i], &gb.gens[j], gb.ring(), &gb.ord) {
                    let nf = normal_form_vec(&s, &gb.gens, gb.ring(), &gb.ord);
                    assert!(nf.is_zero(), "case {case}: S-pair ({i},{j}) does not reduce to zero");
                }
            }
        }
        for _ in 0..3 {
            let f = random_poly(&ring, &mut rng, 4, 4);
            let n1 = normal_form_poly(&f, &gb).unwrap();
            let n2 = normal_form_poly(&n1, &gb).unwrap();
            assert_eq!(n1, n2, "case {case}: NF not idempotent");
        }
        // constructive membership oracle: combinations reduce to zero
        let mut member = ring.zero();
        for g in &gens {
            let q = random_poly(&ring, &mut rng, 2, 2);
            member = member.add(&q.mul(g).unwrap()).unwrap();
        }
        let nf = normal_form_poly(&member, &gb).unwrap();
        assert!(nf.is_zero(), "case {case}: constructed ideal member has nonzero NF");
    }
}

/// Suite (b): Hilbert-function agreement between initial-module counting and
/// dense linear algebra, degrees <= 4, on `cases` random homogeneous ideals.
pub fn run_hilbert_agreement_suite(cases: usize) {
    let mut rng = ChaCha20Rng::seed_from_u64(0x4846_2024);
    for case in 0..cases {
        let ring = random_ring(&mut rng);
        let ngens = rng.gen_range(1..=3usize);
        let gens: Vec<Poly> = (0..ngens)
            .map(|_| {
                let d = rng.gen_range(1..=3u32);
                random_homogeneous_poly(&ring, &mut rng, d)
            })
            .filter(|p| !p.is_zero())
            .collect();
        if gens.is_empty() {
            continue;
        }
        let spec = RingSpec::polynomial(ring.clone());
        let sub = SubmoduleRep::ideal(spec, &gens).unwrap();
        for e in 0..=4i64 {
            let a = sub.dim_at_degree(e).unwrap();
            let b = sub.dim_at_degree_dense(e).unwrap();
            assert_eq!(a, b, "case {case}: dims disagree at degree {e}");
        }
    }
}

/// Dense-linear-algebra Tor oracle (never touches the Gröbner route):
/// dim(L ∩ IⁿF) = dim L + dim IⁿF - dim(L + IⁿF) degreewise, then subtract
/// dim IⁿL and sum.
pub fn tor_length_dense_oracle(m: &ModuleRep, ideal: &IdealRep, n: u32, degree_cap: i64) -> i64 {
    let spec = m.spec().clone();
    let pres = m.presentation().unwrap();
    let free = pres.free.clone();
    if pres.min_gens.is_empty() || pres.syzygy.is_empty() {
        return 0;
    }
    let l_sub = SubmoduleRep::new(spec.clone(), free.clone(), pres.syzygy.clone()).unwrap();
    let powers = ideal.power(n).unwrap();
    let mut in_f0_gens = Vec::new();
    for p in &powers {
        for k in 0..free.rank() {
            let mut v = free.zero_vec();
            v.comps[k] = p.clone();
            in_f0_gens.push(v);
        }
    }
    let in_f0 = SubmoduleRep::new(spec.clone(), free.clone(), in_f0_gens).unwrap();
    let sum = l_sub.sum(&in_f0).unwrap();
    let mut in_l_gens = Vec::new();
    for p in &powers {
        for l in &pres.syzygy {
            in_l_gens.push(l.poly_mul(p).unwrap());
        }
    }
    let in_l = SubmoduleRep::new(spec, free, in_l_gens).unwrap();

    let mut total = 0i64;
    let mut tail_zero = true;
    for e in 0..=degree_cap {
        let dim_l = l_sub.dim_at_degree_dense(e).unwrap();
        let dim_in = in_f0.dim_at_degree_dense(e).unwrap();
        let dim_sum = sum.dim_at_degree_dense(e).unwrap();
        let dim_meet = dim_l + dim_in - dim_sum;
        let dim_inl = in_l.dim_at_degree_dense(e).unwrap();
        let diff = dim_meet - dim_inl;
        assert!(diff >= 0, "negative layer dimension at degree {e}");
        total += diff;
        if e >= degree_cap - 1 {
            tail_zero &= diff == 0;
        }
    }
    assert!(tail_zero, "oracle degree cap {degree_cap} too small");
    total
}

/// Suite (c): oracle equivalence on the golden instances for powers <= nmax.
pub fn run_tor_oracle_suite(nmax: u32) {
    for name in GOLDEN_NAMES {
        let inst = golden(name);
        for n in 1..=nmax {
            let engine = match tor1_length(&inst.module, &inst.ideal, n).unwrap() {
                TorValue::Finite(v) => v,
                TorValue::Infinite => panic!("{name}: unexpected infinite Tor"),
            };
            let oracle = tor_length_dense_oracle(&inst.module, &inst.ideal, n, n as i64 + 5);
            assert_eq!(engine, oracle, "{name}: Tor oracle mismatch at power {n}");
        }
    }
}

/// Suite (d): Auslander-Buchsbaum identity on every resolved module, with an
/// independent socle probe for the depth-zero boundary.
pub fn run_auslander_buchsbaum_suite() {
    let mut modules: Vec<(String, ModuleRep)> = Vec::new();
    for name in GOLDEN_NAMES {
        let inst = golden(name);
        modules.push((format!("{name}:M"), inst.module.clone()));
        modules.push((format!("{name}:A"), ModuleRep::cyclic(inst.spec.clone(), &[]).unwrap()));
    }
    let ring = Ring::new(
        CoeffField::default_prime(),
        vec!["x".into(), "y".into()],
        vec![1, 1],
        MonomialOrder::Grevlex,
    )
    .unwrap();
    let spec = RingSpec::polynomial(ring.clone());
    modules.push((
        "k:residue-field".into(),
        ModuleRep::cyclic(spec, &[ring.var(0), ring.var(1)]).unwrap(),
    ));

    for (name, m) in &modules {
        let nv = m.spec().ring().nvars() as i64;
        let res = m.free_resolution(nv as usize + 1).unwrap();
        assert_eq!(res.pd as i64 + res.depth, nv, "{name}: Auslander-Buchsbaum violated");
        assert!(res.pd as i64 <= nv, "{name}: pd exceeds the Hilbert bound");
        let socle_zero = m.socle_is_zero().unwrap();
        assert_eq!(
            res.depth == 0,
            !socle_zero,
            "{name}: depth-0 flag disagrees with socle (depth = {}, socle zero = {})",
            res.depth,
            socle_zero
        );
    }
}
