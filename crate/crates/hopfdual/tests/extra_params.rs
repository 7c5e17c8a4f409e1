//! Second parameter sets chosen to hit the branches the headline sets miss:
//! a Taft algebra with two congruence classes in the sigma idempotents
//! (n/m = 2), a Liu algebra with omega distinct from n, and a two-sector
//! family with d > 1 (stride-d phi-chains, even m, a degree-4 ambient
//! field).

use hopfdual::dual::*;
use hopfdual::families::{DAlgebra, LiuAlgebra, TaftAlgebra};
use hopfdual::hopf::{verify_associativity, verify_hopf_axioms};
use hopfdual::lemmas::*;
use hopfdual::pairing::*;
use hopfdual::presented::*;
use hopfdual::scalar::CycloContext;

fn all_pairs<T: Clone>(basis: &[T]) -> Vec<(T, T)> {
    basis
        .iter()
        .flat_map(|a| basis.iter().map(move |b| (a.clone(), b.clone())))
        .collect()
}

#[test]
fn taft_4_2_with_two_sigma_classes() {
    let ctx = CycloContext::new(4);
    let h = TaftAlgebra::new(&ctx, 4, 2, ctx.zeta()).unwrap();
    assert_eq!(h.m, 2);

    let basis = h.basis_slice(4);
    let r = verify_hopf_axioms(&*h, "taft", "n=4 v=2", &basis, &all_pairs(&basis));
    assert!(r.passed(), "{:?}", r.witnesses);

    let lambdas = vec![ctx.zero(), ctx.one(), ctx.from_int(2), ctx.zeta()];
    let r = verify_dual_lemma_taft(&h, LemmaId::L31, &lambdas, 2 * h.m).unwrap();
    assert!(r.passed(), "{:?}", r.witnesses);
    // L3.2 exercises Delta(psi) and S(psi) with c ranging over two classes
    let r = verify_dual_lemma_taft(&h, LemmaId::L32, &lambdas, 2 * h.m).unwrap();
    assert!(r.passed(), "{:?}", r.witnesses);

    // both sigma idempotents, orthogonal and summing to one
    let p = TaftDual::new(&h);
    let s0 = p.sigma(0);
    let s1 = p.sigma(1);
    assert_eq!(s0.add(&s1), p.unit());
    assert_eq!(p_mul(&p, &s0, &s0), s0);
    assert!(p_mul(&p, &s0, &s1).is_zero());

    let gens = vec![
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
    let basis = h.basis_slice(4);
    let pair_basis = h.basis_slice(2);
    let r = verify_theta(&p, "taft", "n=4 v=2", &gens, 2, &basis, &pair_basis);
    assert!(r.passed(), "{:?}", r.witnesses);

    let out = gram_taft(&p, 1);
    assert!(out.full_rank, "rank {}", out.rank);

    // presented-side Hopf axioms with the nontrivial antipode twist on F2
    let mut words = Vec::new();
    for lam in [ctx.zero(), ctx.from_int(2)] {
        for j in 0..4 {
            for s in 0..2 {
                for l in 0..2 {
                    words.push(p.word(lam.clone(), j, s, l));
                }
            }
        }
    }
    let r = verify_presented_axioms(&p, "taft", "n=4 v=2", &words);
    assert!(r.passed(), "{:?}", r.witnesses);
}

#[test]
fn liu_2_3_with_distinct_omega() {
    let ctx = CycloContext::new(6);
    let h = LiuAlgebra::new(&ctx, 2, 3, ctx.primitive_root(2).unwrap()).unwrap();

    let basis = h.basis_slice(3);
    let r = verify_hopf_axioms(&*h, "liu", "n=2 omega=3", &basis, &all_pairs(&basis));
    assert!(r.passed(), "{:?}", r.witnesses);

    // pairs (a, b) with a^3 = b^2: (1,1), (4,8), (zeta6^2, zeta6^3)
    let z = ctx.zeta();
    let pairs = vec![
        (ctx.one(), ctx.one()),
        (ctx.from_int(4), ctx.from_int(8)),
        (z.pow_int(2).unwrap(), z.pow_int(3).unwrap()),
    ];
    let r = verify_dual_lemma_liu(&h, LemmaId::L41, &pairs, 2).unwrap();
    assert!(r.passed(), "{:?}", r.witnesses);
    let r = verify_dual_lemma_liu(&h, LemmaId::L42, &pairs, 2).unwrap();
    assert!(r.passed(), "{:?}", r.witnesses);

    let out = proof_p43(&h, 1, &ctx.from_int(4), &ctx.from_int(8));
    assert!(out.invertible);
    assert!(out.evaluation_match);

    let p = LiuDual::new(&h);
    let out = gram_liu(&p, 1);
    assert_eq!(out.matrix.rows(), 36);
    assert!(out.full_rank, "rank {}", out.rank);
}

#[test]
fn two_sector_2_2_with_stride_two_chains() {
    // m = 2, d = 2: (1+m)d = 6 even, xi primitive 4th root, gamma = -1,
    // omega = 4; the ambient field has degree 4 so the proof matrices can
    // reach the primitive 8th root they need.
    let ctx = CycloContext::new(8);
    let xi = ctx.primitive_root(4).unwrap();
    let h = DAlgebra::new(&ctx, 2, 2, xi).unwrap();
    assert_eq!(h.omega, 4);

    let basis = h.basis_slice(1);
    let r = verify_hopf_axioms(&*h, "dmx", "m=2 d=2", &basis, &all_pairs(&basis));
    assert!(r.passed(), "{:?}", r.witnesses);
    let r = verify_associativity(&*h, "dmx", "m=2 d=2", &basis);
    assert!(r.passed(), "{:?}", r.witnesses);

    let alphas = vec![ctx.one(), ctx.from_int(2), ctx.zeta()];
    for id in [LemmaId::L52, LemmaId::L53, LemmaId::L54, LemmaId::L55] {
        let r = verify_dual_lemma_d(&h, id, &alphas, 1).unwrap();
        assert!(r.passed(), "{}: {:?}", id.as_str(), r.witnesses);
    }

    let a = ctx.from_int(2);
    let b = a.pow_int(h.d as i64).unwrap();
    for case in [P56Case::Case1, P56Case::Case2, P56Case::Case3] {
        let out = proof_p56(&h, case, 1, &a, &b).unwrap();
        assert!(out.invertible, "{} singular", case.id());
        assert!(out.evaluation_match, "{} evaluation mismatch", case.id());
    }

    let p = DDual::new(&h);
    let words = {
        let mut ws = Vec::new();
        for sector in [DualSector::Z, DualSector::X] {
            for (alpha, k) in [(ctx.one(), 0i64), (ctx.from_int(2), 1)] {
                let beta = alpha
                    .pow_int(h.d as i64)
                    .unwrap()
                    .mul(&h.gamma.pow_int(k).unwrap());
                for s in 0..2 {
                    for l in 0..h.m {
                        ws.push(p.word(sector, alpha.clone(), beta.clone(), s, l));
                    }
                }
            }
        }
        ws
    };
    let r = verify_presented_axioms(&p, "dmx", "m=2 d=2", &words);
    assert!(r.passed(), "{:?}", r.witnesses);

    let out = gram_d(&p, 1);
    assert_eq!(out.matrix.rows(), 96);
    assert!(out.full_rank, "rank {}", out.rank);
}
