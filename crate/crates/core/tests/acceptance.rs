//! Acceptance gate: the golden-instance suite plus the engine property
//! suites, every expected value exact (no tolerances). One pass/fail line is
//! printed per criterion.

mod common;

use fibertool::blowup::FreenessVerdict;
use fibertool::report::run_check;
use fibertool::torpoly::TorDegree;
use fibertool::verdict::{run_analysis, Params, VerdictOutcome};

fn params(seed: u64, cutoff: u32, nmax: u32) -> Params {
    Params { cutoff, nmax, seed, ..Params::default() }
}

/// §-example reproduction on the two-branch instance: constant Tor length 1,
/// deg t = 0, F(I) with unit Hilbert function, fiber module 2,1,1,... not
/// free with witness degree 1 and depth 0.
#[test]
fn criterion_1_two_branch_reproduction() {
    let inst = common::golden("ex5");
    let p = params(42, 12, 10);
    let a = run_analysis(&inst, &p).unwrap();

    let tor = a.tor.as_ref().expect("profile stabilizes");
    assert_eq!(&tor.values[..10], &[1i64; 10], "Tor lengths for powers 1..10");
    assert_eq!(tor.degree, TorDegree::Deg(0), "deg t");

    assert_eq!(a.cone.hf, vec![1i64; 13], "F(I) Hilbert function");
    let mut fm_expect = vec![1i64; 13];
    fm_expect[0] = 2;
    assert_eq!(a.fm.hf, fm_expect, "F_I(M) Hilbert function");
    assert_eq!(
        a.fm.verdict,
        FreenessVerdict::NotFree { witness_degree: 1 },
        "freeness verdict"
    );
    assert_eq!(a.fm.depth_to_cutoff, Some(0), "depth of F_I(M)");
    println!("[PASS] criterion 1: two-branch reproduction (Tor = 1, deg t = 0, HFs, not-free@1, depth 0)");
}

/// Vanishing for a regular-sequence ideal: Tor identically zero, degree
/// minus-infinity, fiber module free with unit Hilbert function.
#[test]
fn criterion_2_regular_sequence_vanishing() {
    let inst = common::golden("lemma21");
    let p = params(42, 12, 10);
    let a = run_analysis(&inst, &p).unwrap();

    let tor = a.tor.as_ref().expect("profile stabilizes");
    assert_eq!(&tor.values[..10], &[0i64; 10], "Tor lengths for powers 1..10");
    assert_eq!(tor.degree, TorDegree::MinusInfinity, "deg t");
    assert_eq!(a.fm.verdict, FreenessVerdict::FreeToCutoff, "freeness verdict");
    assert_eq!(a.fm.hf, vec![1i64; 13], "F_I(M) Hilbert function");
    println!("[PASS] criterion 2: regular-sequence vanishing (Tor = 0, deg = minus_infinity, free)");
}

/// Additivity under a verified superficial element on the matrix-factorization
/// instance: t(M; n) = t(M; n-1) + t(N; n) on the joint stable window, and the
/// degree drop. Undecided outcomes fail the gate.
#[test]
fn criterion_3_additivity_on_window() {
    let inst = common::golden("a1");
    let p = params(42, 12, 12);
    let a = run_analysis(&inst, &p).unwrap();

    assert!(a.superficial.is_some(), "superficial element must be found");
    let pm = a.tor.as_ref().expect("profile stabilizes");
    let pn = a
        .quotient_tor
        .as_ref()
        .expect("quotient computed")
        .as_ref()
        .expect("quotient profile stabilizes");

    let lo = (pm.stable_from + 1).max(pn.stable_from);
    let hi = pm.values.len().min(pn.values.len()) - 1;
    assert!(lo <= hi, "stable windows overlap");
    for n in lo..=hi {
        assert_eq!(
            pm.values[n],
            pm.values[n - 1] + pn.values[n],
            "additivity at n = {n}"
        );
    }
    match (pn.degree, pm.degree) {
        (TorDegree::MinusInfinity, _) => {}
        (TorDegree::Deg(dn), TorDegree::Deg(dm)) => {
            assert!(dn < dm, "degree drop: {dn} vs {dm}")
        }
        (got, want) => panic!("degree drop violated: {got:?} vs {want:?}"),
    }

    let hyp = fibertool::verdict::check_hypotheses(&a);
    let verdict = fibertool::verdict::all_verdicts(&a, &hyp)
        .into_iter()
        .find(|v| v.statement == "lemma_2_8")
        .unwrap();
    assert!(verdict.applicable);
    assert_eq!(verdict.outcome, VerdictOutcome::Consistent, "{}", verdict.details);
    println!(
        "[PASS] criterion 3: additivity on window [{lo}, {hi}] with degree drop ({:?} -> {:?})",
        pm.degree, pn.degree
    );
}

/// The fiber-module quotient isomorphism: degreewise HF equality of
/// F_{I-bar}(N) and F_I(M)/x°F_I(M) for n <= 11, on both d = 2 instances.
#[test]
fn criterion_4_fiber_quotient_isomorphism() {
    for name in ["a1", "free"] {
        let inst = common::golden(name);
        let p = params(42, 12, 12);
        let a = run_analysis(&inst, &p).unwrap();
        let (lhs, rhs) = a.lemma213_sides.as_ref().expect("sides computed");
        assert_eq!(lhs.len(), 12, "{name}: range n = 0..=11");
        assert_eq!(lhs, rhs, "{name}: HF equality");
        let hyp = fibertool::verdict::check_hypotheses(&a);
        let verdict = fibertool::verdict::all_verdicts(&a, &hyp)
            .into_iter()
            .find(|v| v.statement == "lemma_2_13")
            .unwrap();
        assert!(verdict.applicable && verdict.consistent, "{}", verdict.details);
    }
    println!("[PASS] criterion 4: fiber quotient isomorphism HF equality on a1 and free (n <= 11)");
}

/// Main-theorem consistency on all four golden instances, with correct
/// vacuity labeling, and the Kodiyalam degree bound everywhere.
#[test]
fn criterion_5_main_theorem_consistency() {
    for name in common::GOLDEN_NAMES {
        let inst = common::golden(name);
        let p = params(42, 12, 12);
        let report = run_check(&inst, &p).unwrap();
        let verdicts = report.verdicts.as_ref().unwrap();
        let t31 = verdicts.iter().find(|v| v.statement == "theorem_3_1").unwrap();
        assert!(t31.consistent, "{name}: theorem_3_1 not consistent: {}", t31.details);
        assert_ne!(t31.outcome, VerdictOutcome::Undecided, "{name}: undecided");
        if name == "ex5" {
            assert!(t31.applicable, "ex5 must satisfy all hypotheses");
            assert_eq!(
                t31.antecedent_held,
                Some(false),
                "ex5: deg t = 0 = d - 1, antecedent must be labeled false"
            );
        }
        let kod = report.kodiyalam.as_ref().unwrap();
        assert_eq!(kod.bound_holds, Some(true), "{name}: Kodiyalam bound");
        // nothing refuted anywhere
        for v in verdicts {
            assert_ne!(v.outcome, VerdictOutcome::Refuted, "{name}: {} refuted", v.statement);
        }
    }
    println!("[PASS] criterion 5: theorem consistency + vacuity labels + Kodiyalam bound on all goldens");
}

/// Engine property suites: (a) NF idempotence and S-pair certificates on 200
/// random small ideals; (b) Hilbert agreement initial-vs-dense for degrees
/// <= 4; (c) Tor oracle equivalence for powers <= 3 on the goldens; (d) the
/// Auslander-Buchsbaum identity on every resolved module.
#[test]
fn criterion_6_engine_property_suites() {
    common::run_nf_and_spair_suite(200);
    println!("[PASS] criterion 6a: NF idempotence + S-pair certificates (200 random ideals)");
    common::run_hilbert_agreement_suite(200);
    println!("[PASS] criterion 6b: Hilbert agreement initial-module vs dense (degrees <= 4)");
    common::run_tor_oracle_suite(3);
    println!("[PASS] criterion 6c: Tor oracle equivalence on golden instances (n <= 3)");
    common::run_auslander_buchsbaum_suite();
    println!("[PASS] criterion 6d: Auslander-Buchsbaum identity on every resolved module");
}

/// Determinism: two runs of `check --seed 42` on each golden instance produce
/// byte-identical JSON (exercised through the real binary).
#[test]
fn criterion_7_byte_identical_json() {
    let bin = env!("CARGO_BIN_EXE_fibertool");
    for name in common::GOLDEN_NAMES {
        let input = format!("{}/instances/{name}.alg", env!("CARGO_MANIFEST_DIR"));
        let run = || {
            let out = std::process::Command::new(bin)
                .args(["check", "--input", &input, "--seed", "42", "--format", "json"])
                .output()
                .expect("binary runs");
            assert!(
                out.status.code() == Some(0),
                "{name}: check exited with {:?}: {}",
                out.status.code(),
                String::from_utf8_lossy(&out.stderr)
            );
            out.stdout
        };
        let first = run();
        let second = run();
        assert_eq!(first, second, "{name}: JSON output differs between runs");
        assert!(!first.is_empty());
    }
    println!("[PASS] criterion 7: byte-identical JSON across repeated seeded runs");
}
