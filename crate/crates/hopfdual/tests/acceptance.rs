//! Acceptance gate: one test per criterion, each deciding its identities by
//! exact arithmetic (zero tolerance) and printing a PASS line with its
//! wall time. Run with `cargo test --test acceptance -- --nocapture` to see
//! the lines as they complete.

use hopfdual::dual::*;
use hopfdual::families::{DAlgebra, LiuAlgebra, TaftAlgebra};
use hopfdual::hopf::{verify_associativity, verify_hopf_axioms, Element, HopfAlgebra};
use hopfdual::lemmas::*;
use hopfdual::pairing::*;
use hopfdual::presented::*;
use hopfdual::report::Report;
use hopfdual::scalar::{ratio, CycloContext};
use hopfdual::suites::{verify_matrix_lemmas, verify_scalars};
use std::sync::{Arc, Mutex, MutexGuard};
use std::time::Instant;

// The stated budgets are per criterion, so criteria must not contend for
// cores; this gate serializes them even when the harness runs tests in
// parallel.
static GATE: Mutex<()> = Mutex::new(());

fn serialized() -> MutexGuard<'static, ()> {
    GATE.lock().unwrap_or_else(|e| e.into_inner())
}

fn taft313() -> Arc<TaftAlgebra> {
    let ctx = CycloContext::new(3);
    TaftAlgebra::new(&ctx, 3, 1, ctx.zeta()).unwrap()
}

fn taft101() -> Arc<TaftAlgebra> {
    let ctx = CycloContext::new(1);
    TaftAlgebra::new(&ctx, 1, 0, ctx.one()).unwrap()
}

fn liu221() -> Arc<LiuAlgebra> {
    let ctx = CycloContext::new(2);
    LiuAlgebra::new(&ctx, 2, 2, ctx.from_int(-1)).unwrap()
}

fn liu111() -> Arc<LiuAlgebra> {
    let ctx = CycloContext::new(1);
    LiuAlgebra::new(&ctx, 1, 1, ctx.one()).unwrap()
}

fn d316() -> Arc<DAlgebra> {
    let ctx = CycloContext::new(6);
    DAlgebra::new(&ctx, 3, 1, ctx.zeta()).unwrap()
}

fn dihedral() -> Arc<DAlgebra> {
    let ctx = CycloContext::new(2);
    DAlgebra::dihedral(&ctx).unwrap()
}

fn all_pairs<T: Clone>(basis: &[T]) -> Vec<(T, T)> {
    basis
        .iter()
        .flat_map(|a| basis.iter().map(move |b| (a.clone(), b.clone())))
        .collect()
}

fn expect_pass(criterion: &str, report: &Report, t0: Instant, budget_secs: u64) {
    let elapsed = t0.elapsed();
    assert!(
        report.passed(),
        "{criterion} [{}]: {} of {} cases failed; first witnesses: {:?}",
        report.suite,
        report.cases_failed,
        report.cases_total,
        report.witnesses
    );
    assert!(
        elapsed.as_secs() < budget_secs,
        "{criterion} exceeded its {budget_secs}s budget: {elapsed:?}"
    );
}

#[test]
fn criterion_01_hopf_axioms() {
    let _gate = serialized();
    let t0 = Instant::now();
    let mut reports = Vec::new();

    let h = taft313();
    let basis = h.basis_slice(6);
    reports.push(verify_hopf_axioms(
        &*h,
        "taft",
        "n=3 v=1",
        &basis,
        &all_pairs(&basis),
    ));

    let h = taft101();
    let basis = h.basis_slice(6);
    reports.push(verify_hopf_axioms(
        &*h,
        "taft",
        "n=1 v=0",
        &basis,
        &all_pairs(&basis),
    ));

    let h = liu221();
    let basis = h.basis_slice(4);
    reports.push(verify_hopf_axioms(
        &*h,
        "liu",
        "n=2 omega=2",
        &basis,
        &all_pairs(&basis),
    ));

    let h = liu111();
    let basis = h.basis_slice(4);
    reports.push(verify_hopf_axioms(
        &*h,
        "liu",
        "n=1 omega=1",
        &basis,
        &all_pairs(&basis),
    ));

    let h = d316();
    let basis = h.basis_slice(3);
    reports.push(verify_hopf_axioms(
        &*h,
        "dmx",
        "m=3 d=1",
        &basis,
        &all_pairs(&basis),
    ));

    let h = dihedral();
    let basis = h.basis_slice(3);
    reports.push(verify_hopf_axioms(
        &*h,
        "dihedral",
        "m=1 d=1",
        &basis,
        &all_pairs(&basis),
    ));

    for r in &reports {
        expect_pass("criterion 1", r, t0, 60);
    }
    let cases: u64 = reports.iter().map(|r| r.cases_total).sum();
    println!(
        "ACCEPTANCE 1 hopf-axioms: PASS ({cases} cases across 6 parameter sets, {:?})",
        t0.elapsed()
    );
}

#[test]
fn criterion_02_associativity_d316() {
    let _gate = serialized();
    let t0 = Instant::now();
    let h = d316();
    let basis = h.basis_slice(3);
    let report = verify_associativity(&*h, "dmx", "m=3 d=1", &basis);
    expect_pass("criterion 2", &report, t0, 120);
    println!(
        "ACCEPTANCE 2 associativity: PASS ({} triples, {:?})",
        report.cases_total,
        t0.elapsed()
    );
}

#[test]
fn criterion_03_dual_lemmas() {
    let _gate = serialized();
    let t0 = Instant::now();
    let mut reports = Vec::new();

    let h = taft313();
    let ctx = h.ctx().clone();
    let lambdas = vec![ctx.zero(), ctx.one(), ctx.from_int(2), ctx.zeta()];
    reports.push(verify_dual_lemma_taft(&h, LemmaId::L31, &lambdas, 2 * h.m).unwrap());
    reports.push(verify_dual_lemma_taft(&h, LemmaId::L32, &lambdas, 2 * h.m).unwrap());

    let h = liu221();
    let ctx = h.ctx().clone();
    let pairs = vec![
        (ctx.one(), ctx.one()),
        (ctx.from_int(2), ctx.from_int(2)),
        (ctx.from_int(2), ctx.from_int(-2)),
    ];
    reports.push(verify_dual_lemma_liu(&h, LemmaId::L41, &pairs, 3).unwrap());
    reports.push(verify_dual_lemma_liu(&h, LemmaId::L42, &pairs, 3).unwrap());

    let h = d316();
    let ctx = h.ctx().clone();
    let alphas = vec![ctx.one(), ctx.from_int(2), ctx.zeta()];
    for id in [LemmaId::L52, LemmaId::L53, LemmaId::L54, LemmaId::L55] {
        reports.push(verify_dual_lemma_d(&h, id, &alphas, 2).unwrap());
    }

    let h = dihedral();
    let ctx = h.ctx().clone();
    let lambdas = vec![
        ctx.one(),
        ctx.from_int(2),
        ctx.from_int(-3),
        ctx.from_rational(ratio(1, 2)),
    ];
    reports.push(verify_dual_lemma_dihedral(&h, &lambdas, 3).unwrap());

    for r in &reports {
        expect_pass("criterion 3", r, t0, 120);
    }
    let cases: u64 = reports.iter().map(|r| r.cases_total).sum();
    println!(
        "ACCEPTANCE 3 dual-lemmas: PASS (L3.1 L3.2 L4.1 L4.2 L5.2-L5.5 R5.8, {cases} cases, {:?})",
        t0.elapsed()
    );
}

#[test]
fn criterion_04_theta_isomorphism_checks() {
    let _gate = serialized();
    let t0 = Instant::now();
    let mut reports = Vec::new();

    let h = taft313();
    let ctx = h.ctx().clone();
    let p = TaftDual::new(&h);
    let gens = vec![
        ThetaGen {
            label: "Psi_1".into(),
            elem: p.normalize(&[TaftGen::Psi(ctx.one())]),
            image: taft_psi(&h, &ctx.one()),
        },
        ThetaGen {
            label: "Psi_2".into(),
            elem: p.normalize(&[TaftGen::Psi(ctx.from_int(2))]),
            image: taft_psi(&h, &ctx.from_int(2)),
        },
        ThetaGen {
            label: "Omega".into(),
            elem: p.normalize(&[TaftGen::Omega]),
            image: taft_omega(&h),
        },
        ThetaGen {
            label: "F1".into(),
            elem: p.normalize(&[TaftGen::F1]),
            image: taft_e1(&h),
        },
        ThetaGen {
            label: "F2".into(),
            elem: p.normalize(&[TaftGen::F2]),
            image: taft_e2(&h),
        },
    ];
    let basis = h.basis_slice(6);
    let pair_basis = h.basis_slice(3);
    reports.push(verify_theta(
        &p,
        "taft",
        "n=3 v=1",
        &gens,
        3,
        &basis,
        &pair_basis,
    ));

    let h = liu221();
    let ctx = h.ctx().clone();
    let p = LiuDual::new(&h);
    let a2 = ctx.from_int(2);
    let b2m = ctx.from_int(-2);
    let gens = vec![
        ThetaGen {
            label: "Psi(2,2)".into(),
            elem: p.normalize(&[LiuGen::Psi(a2.clone(), a2.clone())]).unwrap(),
            image: liu_psi(&h, &a2, &a2).unwrap(),
        },
        ThetaGen {
            label: "Psi(2,-2)".into(),
            elem: p
                .normalize(&[LiuGen::Psi(a2.clone(), b2m.clone())])
                .unwrap(),
            image: liu_psi(&h, &a2, &b2m).unwrap(),
        },
        ThetaGen {
            label: "F1".into(),
            elem: p.normalize(&[LiuGen::F1]).unwrap(),
            image: liu_e1(&h),
        },
        ThetaGen {
            label: "F2".into(),
            elem: p.normalize(&[LiuGen::F2]).unwrap(),
            image: liu_e2(&h),
        },
    ];
    let basis = h.basis_slice(3);
    let pair_basis = h.basis_slice(2);
    reports.push(verify_theta(
        &p,
        "liu",
        "n=2 omega=2",
        &gens,
        3,
        &basis,
        &pair_basis,
    ));

    let h = d316();
    let ctx = h.ctx().clone();
    let p = DDual::new(&h);
    let a = ctx.from_int(2);
    let gens = vec![
        ThetaGen {
            label: "Z(2,2)".into(),
            elem: p.normalize(&[DGen::Z(a.clone(), a.clone())]).unwrap(),
            image: d_zeta(&h, &a, &a).unwrap(),
        },
        ThetaGen {
            label: "X(1,gamma)".into(),
            elem: p.normalize(&[DGen::X(ctx.one(), h.gamma.clone())]).unwrap(),
            image: d_chi(&h, &ctx.one(), &h.gamma).unwrap(),
        },
        ThetaGen {
            label: "F1".into(),
            elem: p.normalize(&[DGen::F1]).unwrap(),
            image: d_e1(&h).unwrap(),
        },
        ThetaGen {
            label: "F2".into(),
            elem: p.normalize(&[DGen::F2]).unwrap(),
            image: d_e2(&h),
        },
    ];
    let basis = h.basis_slice(2);
    let pair_basis = h.basis_slice(1);
    reports.push(verify_theta(
        &p,
        "dmx",
        "m=3 d=1",
        &gens,
        2,
        &basis,
        &pair_basis,
    ));

    for r in &reports {
        expect_pass("criterion 4", r, t0, 120);
    }
    let cases: u64 = reports.iter().map(|r| r.cases_total).sum();
    println!(
        "ACCEPTANCE 4 theta-isomorphism: PASS ({cases} cases, {:?})",
        t0.elapsed()
    );
}

#[test]
fn criterion_05_matrix_lemmas() {
    let _gate = serialized();
    let t0 = Instant::now();
    let ctx = CycloContext::new(3);
    let report = verify_matrix_lemmas(&ctx);
    expect_pass("criterion 5", &report, t0, 10);
    println!(
        "ACCEPTANCE 5 matrix-lemmas: PASS ({} cases, {:?})",
        report.cases_total,
        t0.elapsed()
    );
}

#[test]
fn criterion_06_proof_matrices() {
    let _gate = serialized();
    let t0 = Instant::now();
    let mut reports = Vec::new();

    let h = taft313();
    let ctx = h.ctx().clone();
    for lam in [ctx.zero(), ctx.from_int(5)] {
        let out = proof_p33(&h, 1, &lam);
        reports.push(out.report(
            "P3.3",
            "taft",
            &format!("n=3 v=1 lambda={}", lam.exact_string()),
        ));
    }

    let h = liu221();
    let ctx = h.ctx().clone();
    let out = proof_p43(&h, 2, &ctx.from_int(3), &ctx.from_int(3));
    reports.push(out.report("P4.3", "liu", "n=2 omega=2 r=2 alpha=3"));

    let h = d316();
    let ctx = h.ctx().clone();
    let a = ctx.from_int(2);
    for case in [P56Case::Case1, P56Case::Case2, P56Case::Case3] {
        let out = proof_p56(&h, case, 1, &a, &a).unwrap();
        reports.push(out.report(case.id(), "dmx", "m=3 d=1 r=1 alpha=2"));
    }

    for r in &reports {
        expect_pass("criterion 6", r, t0, 60);
    }
    println!(
        "ACCEPTANCE 6 proof-matrices: PASS (P3.3 x2 with Kronecker factorization, P4.3, P5.6 cases 1-3, {:?})",
        t0.elapsed()
    );
}

#[test]
fn criterion_07_gram_non_degeneracy() {
    let _gate = serialized();
    let t0 = Instant::now();
    let mut reports = Vec::new();

    let p = DDual::new(&dihedral());
    let out = gram_d(&p, 1);
    assert_eq!(out.matrix.rows(), 6);
    reports.push(out.report("dihedral", "m=1 d=1 N=1"));

    let p = TaftDual::new(&taft313());
    reports.push(gram_taft(&p, 1).report("taft", "n=3 v=1 N=1"));

    let p = LiuDual::new(&liu221());
    reports.push(gram_liu(&p, 1).report("liu", "n=2 omega=2 N=1"));

    let p = DDual::new(&d316());
    let out = gram_d(&p, 1);
    assert_eq!(out.matrix.rows(), 162);
    reports.push(out.report("dmx", "m=3 d=1 N=1"));

    for r in &reports {
        expect_pass("criterion 7", r, t0, 600);
    }
    let dims: Vec<String> = reports.iter().map(|r| r.details["dims"].clone()).collect();
    println!(
        "ACCEPTANCE 7 gram-non-degeneracy: PASS (full rank at {}, {:?})",
        dims.join(", "),
        t0.elapsed()
    );
}

#[test]
fn criterion_08_scalar_suite() {
    let _gate = serialized();
    let t0 = Instant::now();
    let h = d316();
    let ctx = h.ctx().clone();
    let alphas = vec![
        ctx.one(),
        ctx.from_int(2),
        ctx.zeta(),
        ctx.from_rational(ratio(1, 2)),
    ];
    let report = verify_scalars(&ctx, Some(&h), &alphas).unwrap();
    expect_pass("criterion 8", &report, t0, 5);
    println!(
        "ACCEPTANCE 8 scalars: PASS ({} cases, {:?})",
        report.cases_total,
        t0.elapsed()
    );
}

#[test]
fn criterion_09_nilpotency_idempotency() {
    let _gate = serialized();
    let t0 = Instant::now();

    // E1^m = 0 in the Taft-side presented dual and as functionals
    let h = taft313();
    let p = TaftDual::new(&h);
    let f1m = p.normalize(&vec![TaftGen::F1; h.m as usize]);
    assert!(f1m.is_zero(), "F1^m != 0 in the presented algebra");
    let e1m = conv_power(&h, &taft_e1(&h), h.m);
    for b in h.basis_slice(3 * h.m) {
        assert!(e1m.eval(&b).is_zero(), "E1^m != 0 at {b}");
    }

    // E1^n = 0 on the Liu side
    let h = liu221();
    let p = LiuDual::new(&h);
    let f1n = p.normalize(&vec![LiuGen::F1; h.n as usize]).unwrap();
    assert!(f1n.is_zero(), "F1^n != 0 in the presented algebra");
    let e1n = conv_power(&h, &liu_e1(&h), h.n);
    for b in h.basis_slice(3) {
        assert!(e1n.eval(&b).is_zero(), "E1^n != 0 at {b}");
    }

    // E1^m = (1/(1-gamma)^m) chi_{1,1} on the two-sector side, m >= 2
    let h = d316();
    let ctx = h.ctx().clone();
    let p = DDual::new(&h);
    let f1m = p.normalize(&vec![DGen::F1; h.m as usize]).unwrap();
    let coeff = ctx
        .one()
        .sub(&h.gamma)
        .pow_int(h.m as i64)
        .unwrap()
        .inv()
        .unwrap();
    let expected = Element::monomial(
        p.word(DualSector::X, ctx.one(), ctx.one(), 0, 0),
        coeff.clone(),
    );
    assert_eq!(f1m, expected, "F1^m in the presented algebra");
    let e1m = conv_power(&h, &d_e1(&h).unwrap(), h.m);
    let chi11 = d_chi(&h, &ctx.one(), &ctx.one()).unwrap().scale(&coeff);
    for b in h.basis_slice(2) {
        assert_eq!(e1m.eval(&b), chi11.eval(&b), "E1^m vs chi at {b}");
    }

    // zeta_{1,1} + chi_{1,1} = counit
    let zeta_plus_chi = d_zeta(&h, &ctx.one(), &ctx.one())
        .unwrap()
        .add(&d_chi(&h, &ctx.one(), &ctx.one()).unwrap());
    let eps = counit_functional(&h);
    for b in h.basis_slice(2) {
        assert_eq!(
            zeta_plus_chi.eval(&b),
            eps.eval(&b),
            "zeta+chi vs counit at {b}"
        );
    }

    println!(
        "ACCEPTANCE 9 nilpotency-idempotency: PASS ({:?})",
        t0.elapsed()
    );
}

#[test]
fn criterion_10_pairing_axioms() {
    let _gate = serialized();
    let t0 = Instant::now();
    let mut reports = Vec::new();

    let p = DDual::new(&dihedral());
    let h = p.alg().clone();
    let f = hbullet_dihedral(&p, 1);
    let hs = h.basis_slice(2);
    reports.push(verify_pairing_axioms(
        &p,
        "dihedral",
        "m=1 d=1",
        &f,
        &hs[..6],
    ));

    let p = TaftDual::new(&taft313());
    let h = p.alg().clone();
    let f = hbullet_taft(&p, 1);
    let hs = h.basis_slice(3);
    reports.push(verify_pairing_axioms(
        &p,
        "taft",
        "n=3 v=1",
        &f[..4],
        &hs[..6],
    ));

    let p = LiuDual::new(&liu221());
    let h = p.alg().clone();
    let f = hbullet_liu(&p, 1);
    let hs = h.basis_slice(2);
    reports.push(verify_pairing_axioms(
        &p,
        "liu",
        "n=2 omega=2",
        &f[..4],
        &hs[..6],
    ));

    let p = DDual::new(&d316());
    let h = p.alg().clone();
    let f = hbullet_d(&p, 1);
    let hs = h.basis_slice(1);
    reports.push(verify_pairing_axioms(
        &p,
        "dmx",
        "m=3 d=1",
        &f[..4],
        &hs[..6],
    ));

    for r in &reports {
        expect_pass("criterion 10", r, t0, 60);
        let tuples: u64 = r.details["tuples"].parse().unwrap();
        assert!(tuples >= 50, "{}: only {tuples} tuples sampled", r.family);
    }
    println!(
        "ACCEPTANCE 10 pairing-axioms: PASS (>= 50 tuples per family, {:?})",
        t0.elapsed()
    );
}
