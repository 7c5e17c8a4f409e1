//! An independent single-step rewriting oracle for the dual-side normal
//! forms. Words in the generators are reduced one redex at a time, in
//! randomized order, using only the one-step relations; the result must
//! agree with the closed-form normalization for every order chosen. This is
//! the computational content of the confluence claims behind the monomial
//! bases.

use hopfdual::families::{DAlgebra, LiuAlgebra};
use hopfdual::hopf::Element;
use hopfdual::presented::{DDual, DGen, DualSector, LiuDual, LiuGen, PresentedHopf};
use hopfdual::scalar::{ratio, CycloContext, Rational};
use proptest::prelude::*;
use std::collections::BTreeMap;
use std::sync::Arc;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
enum Letter {
    F1,
    F2,
    /// The central idempotent picked up by the F1-F2 commutation in the
    /// two-sector dual; absent in the Liu-side oracle.
    Z,
}

type Word = Vec<Letter>;

/// Linear combination of free words with exact coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Lin {
    terms: BTreeMap<Word, Rational>,
}

impl Lin {
    fn single(w: Word) -> Lin {
        let mut terms = BTreeMap::new();
        terms.insert(w, Rational::from_integer(1.into()));
        Lin { terms }
    }

    fn add_term(&mut self, w: Word, c: Rational) {
        use num_traits::Zero;
        let entry = self.terms.entry(w).or_insert_with(Rational::zero);
        *entry += c;
        // sweep zeros lazily
        self.terms.retain(|_, v| !v.is_zero());
    }
}

/// One-step rules: `F1 F2 -> F2 F1 + q W F1` where the correction word `W`
/// is `Z` (two-sector side) or empty (Liu side), plus the commutations that
/// push `Z` to the right and collapse `Z Z`.
fn redexes(w: &Word) -> Vec<usize> {
    let mut out = Vec::new();
    for i in 0..w.len().saturating_sub(1) {
        let hit = matches!(
            (w[i], w[i + 1]),
            (Letter::F1, Letter::F2)
                | (Letter::Z, Letter::F1)
                | (Letter::Z, Letter::F2)
                | (Letter::Z, Letter::Z)
        );
        if hit {
            out.push(i);
        }
    }
    out
}

fn rewrite_at(w: &Word, i: usize, q: &Rational, with_z: bool) -> Vec<(Word, Rational)> {
    let mut out = Vec::new();
    match (w[i], w[i + 1]) {
        (Letter::F1, Letter::F2) => {
            let mut swapped = w.clone();
            swapped.swap(i, i + 1);
            out.push((swapped, Rational::from_integer(1.into())));
            let mut corr = w.clone();
            if with_z {
                corr[i] = Letter::Z;
                corr[i + 1] = Letter::F1;
            } else {
                corr.remove(i + 1);
            }
            out.push((corr, q.clone()));
        }
        (Letter::Z, Letter::F1) | (Letter::Z, Letter::F2) => {
            let mut swapped = w.clone();
            swapped.swap(i, i + 1);
            out.push((swapped, Rational::from_integer(1.into())));
        }
        (Letter::Z, Letter::Z) => {
            let mut shorter = w.clone();
            shorter.remove(i + 1);
            out.push((shorter, Rational::from_integer(1.into())));
        }
        _ => unreachable!("not a redex"),
    }
    out
}

/// Reduce to normal form, resolving the choice of redex through the
/// provided index stream (so the order is arbitrary but reproducible).
fn normal_form(start: Word, q: &Rational, with_z: bool, choices: &[usize]) -> Lin {
    let mut lin = Lin::single(start);
    let mut pick = choices.iter().cycle();
    loop {
        // find a word with a redex
        let target = lin.terms.iter().find_map(|(w, _)| {
            let rs = redexes(w);
            if rs.is_empty() {
                None
            } else {
                Some((w.clone(), rs))
            }
        });
        let Some((word, rs)) = target else { break };
        let coeff = lin.terms.remove(&word).expect("present");
        let at = rs[pick.next().copied().unwrap_or(0) % rs.len()];
        for (w2, c2) in rewrite_at(&word, at, q, with_z) {
            lin.add_term(w2, c2 * &coeff);
        }
    }
    lin
}

fn liu_dual() -> LiuDual {
    let ctx = CycloContext::new(2);
    LiuDual::new(&LiuAlgebra::new(&ctx, 2, 2, ctx.from_int(-1)).unwrap())
}

fn d_dual() -> DDual {
    let ctx = CycloContext::new(6);
    DDual::new(&DAlgebra::new(&ctx, 3, 1, ctx.zeta()).unwrap())
}

/// Interpret an oracle normal form in the Liu-side presented algebra.
fn liu_interpret(
    p: &LiuDual,
    lin: &Lin,
    ctx: &Arc<CycloContext>,
) -> Element<hopfdual::presented::LiuWord> {
    let mut out = Element::zero();
    for (w, c) in &lin.terms {
        let s = w.iter().filter(|l| **l == Letter::F2).count() as u64;
        let l = w.iter().filter(|l| **l == Letter::F1).count() as u64;
        // normal form must be sorted: all F2 before F1
        let sorted = w
            .windows(2)
            .all(|p| !(p[0] == Letter::F1 && p[1] == Letter::F2));
        assert!(sorted, "oracle left an unsorted word {w:?}");
        if l >= p.alg().n {
            continue; // F1^n = 0
        }
        out.add_term(
            p.word(ctx.one(), ctx.one(), s, l),
            ctx.from_rational(c.clone()),
        );
    }
    out
}

/// Interpret an oracle normal form in the two-sector presented algebra;
/// words carrying the idempotent land in the `Z` sector, bare words split
/// over both sectors via `1 = Z_{1,1} + X_{1,1}`.
fn d_interpret(
    p: &DDual,
    lin: &Lin,
    ctx: &Arc<CycloContext>,
) -> Element<hopfdual::presented::DWord> {
    let m = p.alg().m;
    let mut out = Element::zero();
    for (w, c) in &lin.terms {
        let s = w.iter().filter(|l| **l == Letter::F2).count() as u64;
        let l = w.iter().filter(|l| **l == Letter::F1).count() as u64;
        let has_z = w.contains(&Letter::Z);
        let coeff = ctx.from_rational(c.clone());
        if l >= m {
            // only the X component survives past F1^m; this oracle stays
            // below the wrap, so such words must not appear
            panic!("oracle word exceeded the F1 bound");
        }
        out.add_term(
            p.word(DualSector::Z, ctx.one(), ctx.one(), s, l),
            coeff.clone(),
        );
        if !has_z {
            out.add_term(p.word(DualSector::X, ctx.one(), ctx.one(), s, l), coeff);
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn liu_single_step_oracle_matches_normalize(
        flags in proptest::collection::vec(any::<bool>(), 1..7),
        choices in proptest::collection::vec(0usize..8, 1..12)
    ) {
        let p = liu_dual();
        let ctx = p.ctx().clone();
        let n = p.alg().n;
        // keep the F1-count below the nilpotency bound so the oracle needs
        // only the commutation rule
        let mut word = Vec::new();
        let mut f1s = 0;
        for f in &flags {
            if *f && f1s + 1 < n {
                word.push(Letter::F1);
                f1s += 1;
            } else {
                word.push(Letter::F2);
            }
        }
        let oracle = normal_form(word.clone(), &ratio(1, n as i64), false, &choices);
        let interpreted = liu_interpret(&p, &oracle, &ctx);
        let gens: Vec<LiuGen> = word
            .iter()
            .map(|l| if *l == Letter::F1 { LiuGen::F1 } else { LiuGen::F2 })
            .collect();
        let closed = p.normalize(&gens).unwrap();
        prop_assert_eq!(interpreted, closed);
    }

    #[test]
    fn d_single_step_oracle_matches_normalize(
        flags in proptest::collection::vec(any::<bool>(), 1..7),
        choices in proptest::collection::vec(0usize..8, 1..12)
    ) {
        let p = d_dual();
        let ctx = p.ctx().clone();
        let m = p.alg().m;
        let mut word = Vec::new();
        let mut f1s = 0;
        for f in &flags {
            if *f && f1s + 1 < m {
                word.push(Letter::F1);
                f1s += 1;
            } else {
                word.push(Letter::F2);
            }
        }
        let oracle = normal_form(word.clone(), &ratio(1, m as i64), true, &choices);
        let interpreted = d_interpret(&p, &oracle, &ctx);
        let gens: Vec<DGen> = word
            .iter()
            .map(|l| if *l == Letter::F1 { DGen::F1 } else { DGen::F2 })
            .collect();
        let closed = p.normalize(&gens).unwrap();
        prop_assert_eq!(interpreted, closed);
    }

    #[test]
    fn random_bracketings_agree(
        picks in proptest::collection::vec(0usize..4, 2..6),
        split in 1usize..4
    ) {
        // associativity of the closed-form product under a random bracketing
        let p = d_dual();
        let ctx = p.ctx().clone();
        let h = p.alg().clone();
        let gens = [
            DGen::Z(ctx.from_int(2), ctx.from_int(2)),
            DGen::X(ctx.one(), h.gamma.clone()),
            DGen::F1,
            DGen::F2,
        ];
        let word: Vec<DGen> = picks.iter().map(|&i| gens[i].clone()).collect();
        let left = p.normalize(&word).unwrap();
        let cut = split.min(word.len() - 1);
        let a = p.normalize(&word[..cut]).unwrap();
        let b = p.normalize(&word[cut..]).unwrap();
        let bracketed = hopfdual::presented::p_mul(&p, &a, &b);
        prop_assert_eq!(left, bracketed);
    }
}

/// The derived commutation `F1^l F2 = F2 F1^l + (l/n) F1^l` checked against
/// the oracle path explicitly, for every `l` below the bound.
#[test]
fn derived_commutation_via_oracle() {
    let p = liu_dual();
    let ctx = p.ctx().clone();
    let n = p.alg().n;
    for l in 0..n {
        let mut word = vec![Letter::F1; l as usize];
        word.push(Letter::F2);
        for choice in [vec![0], vec![1], vec![2, 0, 1]] {
            let oracle = normal_form(word.clone(), &ratio(1, n as i64), false, &choice);
            let interpreted = liu_interpret(&p, &oracle, &ctx);
            let mut gens = vec![LiuGen::F1; l as usize];
            gens.push(LiuGen::F2);
            assert_eq!(
                interpreted,
                p.normalize(&gens).unwrap(),
                "l={l} choice={choice:?}"
            );
        }
    }

    let p = d_dual();
    let ctx = p.ctx().clone();
    let m = p.alg().m;
    for l in 0..m {
        let mut word = vec![Letter::F1; l as usize];
        word.push(Letter::F2);
        for choice in [vec![0], vec![1], vec![2, 0, 1]] {
            let oracle = normal_form(word.clone(), &ratio(1, m as i64), true, &choice);
            let interpreted = d_interpret(&p, &oracle, &ctx);
            let mut gens = vec![DGen::F1; l as usize];
            gens.push(DGen::F2);
            assert_eq!(
                interpreted,
                p.normalize(&gens).unwrap(),
                "l={l} choice={choice:?}"
            );
        }
    }
}
