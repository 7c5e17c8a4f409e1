//! The finite duals presented by generators and relations, with closed-form
//! normal forms on the monomial bases
//! `Psi_lambda Omega^j F2^s F1^l` (Taft side), `Psi_{a,b} F2^s F1^l` (Liu
//! side), and `Z_{a,b} F2^s F1^l / X_{a,b} F2^s F1^l` (two-sector side),
//! together with their Hopf structure and the comparison map `Theta` onto
//! evaluable functionals.
//!
//! Group-like parameters are carried as exact scalar pairs `(a, b)` subject
//! to `a^omega = b^n` (resp. `b^m`); the fixed-root coset decomposition is
//! absorbed into the pair, so no root extraction ever happens.

use crate::dual::*;
use crate::families::{DAlgebra, DIdx, LiuAlgebra, LiuIdx, TaftAlgebra, TaftIdx};
use crate::hopf::{BasisIndex, Element, HopfAlgebra, Tensor2};
use crate::scalar::{
    binomial_big, discrete_log, q_factorial, rat_pow, ratio, CycloContext, CycloScalar, Rational,
};
use std::fmt;
use std::sync::Arc;

/// A presented dual algebra: normal-form words, their closed-form products,
/// the Hopf structure maps, and the generator-wise map onto functionals.
pub trait PresentedHopf: Send + Sync {
    type Word: BasisIndex;
    type Alg: HopfAlgebra + 'static;

    fn alg(&self) -> &Arc<Self::Alg>;
    fn ctx(&self) -> &Arc<CycloContext> {
        self.alg().ctx()
    }
    fn unit(&self) -> Element<Self::Word>;
    fn word_mul(&self, a: &Self::Word, b: &Self::Word) -> Element<Self::Word>;
    fn word_comul(&self, w: &Self::Word) -> Tensor2<Self::Word>;
    fn word_counit(&self, w: &Self::Word) -> CycloScalar;
    fn word_antipode(&self, w: &Self::Word) -> Element<Self::Word>;
    fn word_theta(&self, w: &Self::Word) -> Functional<<Self::Alg as HopfAlgebra>::Idx>;
}

/// Bilinear extension of the word product.
pub fn p_mul<P: PresentedHopf>(
    p: &P,
    x: &Element<P::Word>,
    y: &Element<P::Word>,
) -> Element<P::Word> {
    let mut out = Element::zero();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            let c = ca.mul(cb);
            for (w, cw) in p.word_mul(a, b).iter() {
                out.add_term(w.clone(), cw.mul(&c));
            }
        }
    }
    out
}

/// Linear extension of the coproduct.
pub fn p_comul<P: PresentedHopf>(p: &P, x: &Element<P::Word>) -> Tensor2<P::Word> {
    let mut out = Tensor2::zero();
    for (w, c) in x.iter() {
        for (pair, cw) in p.word_comul(w).iter() {
            out.add_term(pair.clone(), cw.mul(c));
        }
    }
    out
}

pub fn p_counit<P: PresentedHopf>(p: &P, x: &Element<P::Word>) -> CycloScalar {
    let mut acc = p.ctx().zero();
    for (w, c) in x.iter() {
        acc = acc.add(&p.word_counit(w).mul(c));
    }
    acc
}

pub fn p_antipode<P: PresentedHopf>(p: &P, x: &Element<P::Word>) -> Element<P::Word> {
    let mut out = Element::zero();
    for (w, c) in x.iter() {
        for (v, cv) in p.word_antipode(w).iter() {
            out.add_term(v.clone(), cv.mul(c));
        }
    }
    out
}

/// Componentwise product on the tensor square of the presented algebra.
pub fn p_tensor_mul<P: PresentedHopf>(
    p: &P,
    s: &Tensor2<P::Word>,
    t: &Tensor2<P::Word>,
) -> Tensor2<P::Word> {
    let mut out = Tensor2::zero();
    for ((a1, a2), ca) in s.iter() {
        for ((b1, b2), cb) in t.iter() {
            let c = ca.mul(cb);
            for (l, cl) in p.word_mul(a1, b1).iter() {
                for (r, cr) in p.word_mul(a2, b2).iter() {
                    out.add_term((l.clone(), r.clone()), cl.mul(cr).mul(&c));
                }
            }
        }
    }
    out
}

/// `Theta` on a general presented element, by linearity.
pub fn theta<P: PresentedHopf>(
    p: &P,
    x: &Element<P::Word>,
) -> Functional<<P::Alg as HopfAlgebra>::Idx> {
    let mut acc = counit_functional(p.alg()).scale(&p.ctx().zero());
    for (w, c) in x.iter() {
        acc = acc.add(&p.word_theta(w).scale(c));
    }
    acc
}

fn pow_big(base: &Rational, e: u64) -> Rational {
    rat_pow(base, e)
}

// ---------------------------------------------------------------------------
// Taft side
// ---------------------------------------------------------------------------

/// Normal-form word `Psi_lambda Omega^j F2^s F1^l`, `j < n`, `l < m`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TaftWord {
    pub lambda: CycloScalar,
    pub j: u64,
    pub s: u64,
    pub l: u64,
}

impl fmt::Display for TaftWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Psi({}) Omega^{} F2^{} F1^{}",
            self.lambda.exact_string(),
            self.j,
            self.s,
            self.l
        )
    }
}

#[derive(Clone, Debug)]
pub enum TaftGen {
    Psi(CycloScalar),
    Omega,
    F1,
    F2,
}

pub struct TaftDual {
    alg: Arc<TaftAlgebra>,
}

impl TaftDual {
    pub fn new(alg: &Arc<TaftAlgebra>) -> Self {
        TaftDual {
            alg: Arc::clone(alg),
        }
    }

    pub fn word(&self, lambda: CycloScalar, j: u64, s: u64, l: u64) -> TaftWord {
        debug_assert!(j < self.alg.n && l < self.alg.m);
        TaftWord { lambda, j, s, l }
    }

    pub fn gen_elem(&self, g: &TaftGen) -> Element<TaftWord> {
        let ctx = self.alg.ctx();
        let w = match g {
            TaftGen::Psi(lam) => self.word(lam.clone(), 0, 0, 0),
            TaftGen::Omega => self.word(ctx.zero(), 1, 0, 0),
            TaftGen::F1 => self.word(ctx.zero(), 0, 0, 1),
            TaftGen::F2 => self.word(ctx.zero(), 0, 1, 0),
        };
        Element::monomial(w, ctx.one())
    }

    pub fn normalize(&self, word: &[TaftGen]) -> Element<TaftWord> {
        let mut acc = self.unit();
        for g in word {
            acc = p_mul(self, &acc, &self.gen_elem(g));
        }
        acc
    }

    /// The class idempotent `sigma_c` as a presented element.
    pub fn sigma(&self, c: u64) -> Element<TaftWord> {
        let h = &self.alg;
        let ctx = h.ctx();
        let classes = h.n / h.m;
        let mut out = Element::zero();
        for t in 0..classes {
            let coeff =
                h.xi.pow_int(-((t * h.m * c) as i64))
                    .expect("xi nonzero")
                    .scale(&ratio(h.m as i64, h.n as i64));
            out.add_term(self.word(ctx.zero(), (t * h.m) % h.n, 0, 0), coeff);
        }
        out
    }

    fn divided_f1_coeff(&self, k: u64) -> CycloScalar {
        q_factorial(k, &self.alg.q).inv().expect("k < m")
    }

    /// `Delta(F2)` on the presented side.
    fn comul_f2(&self) -> Tensor2<TaftWord> {
        let h = &self.alg;
        let ctx = h.ctx();
        let zero = ctx.zero();
        let mut out = Tensor2::zero();
        out.add_term(
            (
                self.word(zero.clone(), 0, 0, 0),
                self.word(zero.clone(), 0, 1, 0),
            ),
            ctx.one(),
        );
        out.add_term(
            (
                self.word(zero.clone(), 0, 1, 0),
                self.word(zero.clone(), h.m % h.n, 0, 0),
            ),
            ctx.one(),
        );
        for k in 1..h.m {
            let coeff = self
                .divided_f1_coeff(k)
                .mul(&self.divided_f1_coeff(h.m - k));
            out.add_term(
                (
                    self.word(zero.clone(), 0, 0, k),
                    self.word(zero.clone(), k % h.n, 0, h.m - k),
                ),
                coeff,
            );
        }
        out
    }

    fn comul_f1(&self) -> Tensor2<TaftWord> {
        let ctx = self.alg.ctx();
        let zero = ctx.zero();
        let mut out = Tensor2::zero();
        out.add_term(
            (
                self.word(zero.clone(), 0, 0, 0),
                self.word(zero.clone(), 0, 0, 1),
            ),
            ctx.one(),
        );
        out.add_term(
            (self.word(zero.clone(), 0, 0, 1), self.word(zero, 1, 0, 0)),
            ctx.one(),
        );
        out
    }

    /// `Delta(Psi_lambda)`, the class sum against the sigma idempotents.
    fn comul_psi(&self, lambda: &CycloScalar) -> Tensor2<TaftWord> {
        let h = &self.alg;
        let _ctx = h.ctx();
        let classes = h.n / h.m;
        let mut out = Tensor2::zero();
        for c in 0..classes {
            let shifted = lambda.mul(&h.xi.pow_int((h.m * c) as i64).expect("xi nonzero"));
            let left0 = self.word(shifted.clone(), 0, 0, 0);
            // Psi_lambda sigma_c expanded over Omega powers
            let sigma = self.sigma(c);
            for (sw, sc) in sigma.iter() {
                out.add_term(
                    (left0.clone(), self.word(lambda.clone(), sw.j, 0, 0)),
                    sc.clone(),
                );
                for k in 1..h.m {
                    let coeff = sc
                        .mul(lambda)
                        .mul(&self.divided_f1_coeff(k))
                        .mul(&self.divided_f1_coeff(h.m - k));
                    out.add_term(
                        (
                            self.word(shifted.clone(), 0, 0, k),
                            self.word(lambda.clone(), (sw.j + k) % h.n, 0, h.m - k),
                        ),
                        coeff,
                    );
                }
            }
        }
        out
    }
}

impl PresentedHopf for TaftDual {
    type Word = TaftWord;
    type Alg = TaftAlgebra;

    fn alg(&self) -> &Arc<TaftAlgebra> {
        &self.alg
    }

    fn unit(&self) -> Element<TaftWord> {
        Element::monomial(
            self.word(self.alg.ctx().zero(), 0, 0, 0),
            self.alg.ctx().one(),
        )
    }

    // (Psi Om^j F2^s F1^l)(Psi' Om^j' F2^s' F1^l') =
    //   xi^{v l j'} Psi_{l+l'} Om^{j+j'} F2^{s+s'} F1^{l+l'}, zero past F1^m.
    fn word_mul(&self, a: &TaftWord, b: &TaftWord) -> Element<TaftWord> {
        let h = &self.alg;
        if a.l + b.l >= h.m {
            return Element::zero();
        }
        let c =
            h.q.pow_int((a.l as i64) * (b.j as i64))
                .expect("xi nonzero");
        Element::monomial(
            self.word(
                a.lambda.add(&b.lambda),
                (a.j + b.j) % h.n,
                a.s + b.s,
                a.l + b.l,
            ),
            c,
        )
    }

    fn word_comul(&self, w: &TaftWord) -> Tensor2<TaftWord> {
        let ctx = self.alg.ctx();
        // grouplike factor Omega^j (x) Omega^j
        let mut acc = if w.lambda.is_zero() {
            Tensor2::simple(
                self.word(ctx.zero(), w.j, 0, 0),
                self.word(ctx.zero(), w.j, 0, 0),
                ctx.one(),
            )
        } else {
            let psi = self.comul_psi(&w.lambda);
            let om = Tensor2::simple(
                self.word(ctx.zero(), w.j, 0, 0),
                self.word(ctx.zero(), w.j, 0, 0),
                ctx.one(),
            );
            p_tensor_mul(self, &psi, &om)
        };
        if w.s > 0 {
            let f2 = self.comul_f2();
            for _ in 0..w.s {
                acc = p_tensor_mul(self, &acc, &f2);
            }
        }
        if w.l > 0 {
            let f1 = self.comul_f1();
            for _ in 0..w.l {
                acc = p_tensor_mul(self, &acc, &f1);
            }
        }
        acc
    }

    fn word_counit(&self, w: &TaftWord) -> CycloScalar {
        if w.s == 0 && w.l == 0 {
            self.alg.ctx().one()
        } else {
            self.alg.ctx().zero()
        }
    }

    // S(F1) = -xi^{-v} Omega^{n-1} F1, S(F2) = -Omega^{n-m} F2,
    // S(Omega) = Omega^{n-1},
    // S(Psi_lambda) = sum_c Psi_{-lambda xi^{-mc}} sigma_c; anti-product
    // order. The Omega^{n-m} factor on S(F2) is forced by the antipode
    // axiom (F2 must cancel F2 Omega^m) and is trivial exactly when m = n.
    fn word_antipode(&self, w: &TaftWord) -> Element<TaftWord> {
        let h = &self.alg;
        let ctx = h.ctx();
        let s_f1 = Element::monomial(
            self.word(ctx.zero(), h.n - 1, 0, 1),
            h.xi.pow_int(-(h.v as i64)).expect("xi nonzero").neg(),
        );
        let s_f2 = Element::monomial(
            self.word(ctx.zero(), (h.n - h.m) % h.n, 1, 0),
            ctx.one().neg(),
        );
        let mut acc = self.unit();
        for _ in 0..w.l {
            acc = p_mul(self, &acc, &s_f1);
        }
        for _ in 0..w.s {
            acc = p_mul(self, &acc, &s_f2);
        }
        let s_om = Element::monomial(
            self.word(ctx.zero(), (w.j * (h.n - 1)) % h.n, 0, 0),
            ctx.one(),
        );
        acc = p_mul(self, &acc, &s_om);
        if !w.lambda.is_zero() {
            let mut s_psi = Element::zero();
            for c in 0..h.n / h.m {
                let coeff = w
                    .lambda
                    .mul(&h.xi.pow_int(-((h.m * c) as i64)).expect("xi nonzero"))
                    .neg();
                let part = p_mul(
                    self,
                    &Element::monomial(self.word(coeff, 0, 0, 0), ctx.one()),
                    &self.sigma(c),
                );
                s_psi = s_psi.add(&part);
            }
            acc = p_mul(self, &acc, &s_psi);
        }
        acc
    }

    // Theta: Psi_lambda Om^j F2^s F1^l -> psi_lambda * omega^j * E2^s * E1^l.
    fn word_theta(&self, w: &TaftWord) -> Functional<TaftIdx> {
        let h = &self.alg;
        let mut fs = vec![taft_psi(h, &w.lambda)];
        for _ in 0..w.j {
            fs.push(taft_omega(h));
        }
        for _ in 0..w.s {
            fs.push(taft_e2(h));
        }
        for _ in 0..w.l {
            fs.push(taft_e1(h));
        }
        conv_all(h, &fs)
    }
}

// ---------------------------------------------------------------------------
// Liu side
// ---------------------------------------------------------------------------

/// Normal-form word `Psi_{a,b} F2^s F1^l`, `l < n`, with `a^omega = b^n`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct LiuWord {
    pub alpha: CycloScalar,
    pub beta: CycloScalar,
    pub s: u64,
    pub l: u64,
}

impl fmt::Display for LiuWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Psi({},{}) F2^{} F1^{}",
            self.alpha.exact_string(),
            self.beta.exact_string(),
            self.s,
            self.l
        )
    }
}

#[derive(Clone, Debug)]
pub enum LiuGen {
    Psi(CycloScalar, CycloScalar),
    F1,
    F2,
}

pub struct LiuDual {
    alg: Arc<LiuAlgebra>,
}

impl LiuDual {
    pub fn new(alg: &Arc<LiuAlgebra>) -> Self {
        LiuDual {
            alg: Arc::clone(alg),
        }
    }

    pub fn word(&self, alpha: CycloScalar, beta: CycloScalar, s: u64, l: u64) -> LiuWord {
        debug_assert!(l < self.alg.n);
        LiuWord { alpha, beta, s, l }
    }

    pub fn gen_elem(&self, g: &LiuGen) -> Result<Element<LiuWord>, DualError> {
        let ctx = self.alg.ctx();
        let one = ctx.one();
        let w = match g {
            LiuGen::Psi(a, b) => {
                // validated through the functional constructor
                liu_psi(&self.alg, a, b)?;
                self.word(a.clone(), b.clone(), 0, 0)
            }
            LiuGen::F1 => self.word(one.clone(), one.clone(), 0, 1),
            LiuGen::F2 => self.word(one.clone(), one.clone(), 1, 0),
        };
        Ok(Element::monomial(w, ctx.one()))
    }

    pub fn normalize(&self, word: &[LiuGen]) -> Result<Element<LiuWord>, DualError> {
        let mut acc = self.unit();
        for g in word {
            acc = p_mul(self, &acc, &self.gen_elem(g)?);
        }
        Ok(acc)
    }

    fn divided_f1_coeff(&self, k: u64) -> CycloScalar {
        q_factorial(k, &self.alg.gamma).inv().expect("k < n")
    }

    fn comul_f1(&self) -> Tensor2<LiuWord> {
        let ctx = self.alg.ctx();
        let one = ctx.one();
        let mut out = Tensor2::zero();
        out.add_term(
            (
                self.word(one.clone(), one.clone(), 0, 0),
                self.word(one.clone(), one.clone(), 0, 1),
            ),
            ctx.one(),
        );
        out.add_term(
            (
                self.word(one.clone(), one.clone(), 0, 1),
                self.word(one.clone(), self.alg.gamma.clone(), 0, 0),
            ),
            ctx.one(),
        );
        out
    }

    fn comul_f2(&self) -> Tensor2<LiuWord> {
        let h = &self.alg;
        let ctx = h.ctx();
        let one = ctx.one();
        let mut out = Tensor2::zero();
        out.add_term(
            (
                self.word(one.clone(), one.clone(), 0, 0),
                self.word(one.clone(), one.clone(), 1, 0),
            ),
            ctx.one(),
        );
        out.add_term(
            (
                self.word(one.clone(), one.clone(), 1, 0),
                self.word(one.clone(), one.clone(), 0, 0),
            ),
            ctx.one(),
        );
        for k in 1..h.n {
            let coeff = self
                .divided_f1_coeff(k)
                .mul(&self.divided_f1_coeff(h.n - k))
                .neg();
            out.add_term(
                (
                    self.word(one.clone(), one.clone(), 0, k),
                    self.word(
                        one.clone(),
                        h.gamma.pow_int(k as i64).expect("gamma nonzero"),
                        0,
                        h.n - k,
                    ),
                ),
                coeff,
            );
        }
        out
    }

    fn comul_psi(&self, alpha: &CycloScalar, beta: &CycloScalar) -> Tensor2<LiuWord> {
        let h = &self.alg;
        let ctx = h.ctx();
        let lambda = alpha.pow_int(h.omega as i64).expect("alpha nonzero");
        let one_minus = ctx.one().sub(&lambda);
        let mut out = Tensor2::simple(
            self.word(alpha.clone(), beta.clone(), 0, 0),
            self.word(alpha.clone(), beta.clone(), 0, 0),
            ctx.one(),
        );
        for k in 1..h.n {
            let coeff = one_minus
                .mul(&self.divided_f1_coeff(k))
                .mul(&self.divided_f1_coeff(h.n - k));
            out.add_term(
                (
                    self.word(alpha.clone(), beta.clone(), 0, k),
                    self.word(
                        alpha.clone(),
                        beta.mul(&h.gamma.pow_int(k as i64).expect("gamma nonzero")),
                        0,
                        h.n - k,
                    ),
                ),
                coeff,
            );
        }
        out
    }
}

impl PresentedHopf for LiuDual {
    type Word = LiuWord;
    type Alg = LiuAlgebra;

    fn alg(&self) -> &Arc<LiuAlgebra> {
        &self.alg
    }

    fn unit(&self) -> Element<LiuWord> {
        let one = self.alg.ctx().one();
        Element::monomial(
            self.word(one.clone(), one.clone(), 0, 0),
            self.alg.ctx().one(),
        )
    }

    // (Psi_{a,b} F2^s F1^l)(Psi_{a',b'} F2^s' F1^l') =
    //   b'^l sum_t C(s',t) (l/n)^{s'-t} Psi_{aa',bb'} F2^{s+t} F1^{l+l'}
    fn word_mul(&self, a: &LiuWord, b: &LiuWord) -> Element<LiuWord> {
        let h = &self.alg;
        if a.l + b.l >= h.n {
            return Element::zero();
        }
        let front = b.beta.pow_int(a.l as i64).expect("beta nonzero");
        let pair_a = a.alpha.mul(&b.alpha);
        let pair_b = a.beta.mul(&b.beta);
        let mut out = Element::zero();
        let l_over_n = ratio(a.l as i64, h.n as i64);
        for t in 0..=b.s {
            let c = Rational::from_integer(binomial_big(b.s, t)) * pow_big(&l_over_n, b.s - t);
            out.add_term(
                self.word(pair_a.clone(), pair_b.clone(), a.s + t, a.l + b.l),
                front.scale(&c),
            );
        }
        out
    }

    fn word_comul(&self, w: &LiuWord) -> Tensor2<LiuWord> {
        let mut acc = self.comul_psi(&w.alpha, &w.beta);
        if w.s > 0 {
            let f2 = self.comul_f2();
            for _ in 0..w.s {
                acc = p_tensor_mul(self, &acc, &f2);
            }
        }
        if w.l > 0 {
            let f1 = self.comul_f1();
            for _ in 0..w.l {
                acc = p_tensor_mul(self, &acc, &f1);
            }
        }
        acc
    }

    fn word_counit(&self, w: &LiuWord) -> CycloScalar {
        if w.s == 0 && w.l == 0 {
            self.alg.ctx().one()
        } else {
            self.alg.ctx().zero()
        }
    }

    // S(F1) = -gamma^{n-1} Psi_{1,gamma^{n-1}} F1, S(F2) = -F2,
    // S(Psi_{a,b}) = Psi_{a^{-1},b^{-1}}.
    fn word_antipode(&self, w: &LiuWord) -> Element<LiuWord> {
        let h = &self.alg;
        let ctx = h.ctx();
        let one = ctx.one();
        let gpow = h.gamma.pow_int(h.n as i64 - 1).expect("gamma nonzero");
        let s_f1 = Element::monomial(self.word(one.clone(), gpow.clone(), 0, 1), gpow.neg());
        let s_f2 = Element::monomial(self.word(one.clone(), one.clone(), 1, 0), ctx.one().neg());
        let mut acc = self.unit();
        for _ in 0..w.l {
            acc = p_mul(self, &acc, &s_f1);
        }
        for _ in 0..w.s {
            acc = p_mul(self, &acc, &s_f2);
        }
        let s_psi = Element::monomial(
            self.word(
                w.alpha.inv().expect("alpha nonzero"),
                w.beta.inv().expect("beta nonzero"),
                0,
                0,
            ),
            ctx.one(),
        );
        p_mul(self, &acc, &s_psi)
    }

    fn word_theta(&self, w: &LiuWord) -> Functional<LiuIdx> {
        let h = &self.alg;
        let mut fs = vec![liu_psi(h, &w.alpha, &w.beta).expect("valid pair")];
        for _ in 0..w.s {
            fs.push(liu_e2(h));
        }
        for _ in 0..w.l {
            fs.push(liu_e1(h));
        }
        conv_all(h, &fs)
    }
}

// ---------------------------------------------------------------------------
// Two-sector side
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum DualSector {
    Z,
    X,
}

/// Normal-form word `Z_{a,b} F2^s F1^l` or `X_{a,b} F2^s F1^l`, `l < m`,
/// with `a^omega = b^m`. The unit is `Z_{1,1} + X_{1,1}`, a two-word element.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct DWord {
    pub sector: DualSector,
    pub alpha: CycloScalar,
    pub beta: CycloScalar,
    pub s: u64,
    pub l: u64,
}

impl fmt::Display for DWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.sector {
            DualSector::Z => "Z",
            DualSector::X => "X",
        };
        write!(
            f,
            "{}({},{}) F2^{} F1^{}",
            tag,
            self.alpha.exact_string(),
            self.beta.exact_string(),
            self.s,
            self.l
        )
    }
}

#[derive(Clone, Debug)]
pub enum DGen {
    Z(CycloScalar, CycloScalar),
    X(CycloScalar, CycloScalar),
    F1,
    F2,
}

pub struct DDual {
    alg: Arc<DAlgebra>,
}

impl DDual {
    pub fn new(alg: &Arc<DAlgebra>) -> Self {
        DDual {
            alg: Arc::clone(alg),
        }
    }

    pub fn word(
        &self,
        sector: DualSector,
        alpha: CycloScalar,
        beta: CycloScalar,
        s: u64,
        l: u64,
    ) -> DWord {
        debug_assert!(l < self.alg.m);
        DWord {
            sector,
            alpha,
            beta,
            s,
            l,
        }
    }

    pub fn gen_elem(&self, g: &DGen) -> Result<Element<DWord>, DualError> {
        let ctx = self.alg.ctx();
        let one = ctx.one();
        Ok(match g {
            DGen::Z(a, b) => {
                d_zeta(&self.alg, a, b)?;
                Element::monomial(
                    self.word(DualSector::Z, a.clone(), b.clone(), 0, 0),
                    ctx.one(),
                )
            }
            DGen::X(a, b) => {
                d_chi(&self.alg, a, b)?;
                Element::monomial(
                    self.word(DualSector::X, a.clone(), b.clone(), 0, 0),
                    ctx.one(),
                )
            }
            DGen::F1 => {
                if self.alg.m == 1 {
                    return Err(DualError::E1Unavailable);
                }
                let mut e = Element::monomial(
                    self.word(DualSector::Z, one.clone(), one.clone(), 0, 1),
                    ctx.one(),
                );
                e.add_term(
                    self.word(DualSector::X, one.clone(), one.clone(), 0, 1),
                    ctx.one(),
                );
                e
            }
            DGen::F2 => {
                let mut e = Element::monomial(
                    self.word(DualSector::Z, one.clone(), one.clone(), 1, 0),
                    ctx.one(),
                );
                e.add_term(
                    self.word(DualSector::X, one.clone(), one.clone(), 1, 0),
                    ctx.one(),
                );
                e
            }
        })
    }

    pub fn normalize(&self, word: &[DGen]) -> Result<Element<DWord>, DualError> {
        let mut acc = self.unit();
        for g in word {
            acc = p_mul(self, &acc, &self.gen_elem(g)?);
        }
        Ok(acc)
    }

    fn divided_f1_coeff(&self, k: u64) -> CycloScalar {
        q_factorial(k, &self.alg.gamma).inv().expect("k < m")
    }

    /// The group-like `Z_{1,gamma^e} + xi^e X_{1,gamma^e}` as an element.
    pub fn grouplike_pow(&self, e: i64) -> Element<DWord> {
        let h = &self.alg;
        let ctx = h.ctx();
        let ge = h.gamma.pow_int(e).expect("gamma nonzero");
        let mut out = Element::monomial(
            self.word(DualSector::Z, ctx.one(), ge.clone(), 0, 0),
            ctx.one(),
        );
        out.add_term(
            self.word(DualSector::X, ctx.one(), ge, 0, 0),
            h.xi.pow_int(e).expect("xi nonzero"),
        );
        out
    }

    fn comul_f1(&self) -> Tensor2<DWord> {
        let unit = self.unit();
        let f1 = self.gen_elem(&DGen::F1).expect("m >= 2");
        let g = self.grouplike_pow(1);
        let mut out = tensor_from_elems(&unit, &f1);
        out = out.add(&tensor_from_elems(&f1, &g));
        out
    }

    fn comul_f2(&self) -> Tensor2<DWord> {
        let h = &self.alg;
        let gm = self.grouplike_pow(h.m as i64);
        let f2 = self.gen_elem(&DGen::F2).expect("always available");
        let unit = self.unit();
        let mut out = tensor_from_elems(&gm, &f2);
        out = out.add(&tensor_from_elems(&f2, &unit));
        for k in 1..h.m {
            let left = p_mul(self, &gm, &self.f1_divided(k));
            let right = p_mul(
                self,
                &self.grouplike_pow(k as i64 - h.m as i64),
                &self.f1_divided(h.m - k),
            );
            out = out.add(&tensor_from_elems(&left.neg(), &right));
        }
        out
    }

    /// `F1^{[k]}` as an element (both sectors).
    fn f1_divided(&self, k: u64) -> Element<DWord> {
        let ctx = self.alg.ctx();
        let one = ctx.one();
        let c = self.divided_f1_coeff(k);
        let mut e = Element::monomial(
            self.word(DualSector::Z, one.clone(), one.clone(), 0, k),
            c.clone(),
        );
        e.add_term(self.word(DualSector::X, one.clone(), one.clone(), 0, k), c);
        e
    }

    /// `Delta(Z_{a, a^d})` and `Delta(X_{a, a^d})` for the distinguished root
    /// `b = a^d`; general pairs multiply by the group-like power.
    fn comul_z_base(&self, alpha: &CycloScalar) -> Tensor2<DWord> {
        let h = &self.alg;
        let ctx = h.ctx();
        let ad = alpha.pow_int(h.d as i64).expect("alpha nonzero");
        let a_inv = alpha.inv().expect("alpha nonzero");
        let ad_inv = ad.inv().expect("alpha nonzero");
        let lambda = alpha.pow_int(h.omega as i64).expect("alpha nonzero");
        let one_minus = ctx.one().sub(&lambda);
        let front = alpha
            .pow_int((1 - h.m as i64) * h.d as i64 / 2)
            .expect("alpha nonzero");
        let z = self.word(DualSector::Z, alpha.clone(), ad.clone(), 0, 0);
        let x = self.word(DualSector::X, alpha.clone(), ad.clone(), 0, 0);
        let x_inv = self.word(DualSector::X, a_inv.clone(), ad_inv.clone(), 0, 0);
        let mut out = Tensor2::simple(z.clone(), z.clone(), ctx.one());
        for k in 1..h.m {
            let gk = h.gamma.pow_int(k as i64).expect("gamma nonzero");
            let coeff = one_minus
                .mul(&self.divided_f1_coeff(k))
                .mul(&self.divided_f1_coeff(h.m - k));
            out.add_term(
                (
                    self.word(DualSector::Z, alpha.clone(), ad.clone(), 0, k),
                    self.word(DualSector::Z, alpha.clone(), ad.mul(&gk), 0, h.m - k),
                ),
                coeff,
            );
        }
        let theta0_comp = theta_complement(h, alpha, 0);
        out.add_term((x.clone(), x_inv.clone()), front.mul(&theta0_comp));
        for k in 1..h.m {
            let gk = h.gamma.pow_int(k as i64).expect("gamma nonzero");
            let coeff = front
                .mul(&theta_complement(h, alpha, h.m - k))
                .mul(&h.xi.pow_int(k as i64).expect("xi nonzero"))
                .mul(&self.divided_f1_coeff(k))
                .mul(&self.divided_f1_coeff(h.m - k));
            out.add_term(
                (
                    self.word(DualSector::X, alpha.clone(), ad.clone(), 0, k),
                    self.word(DualSector::X, a_inv.clone(), ad_inv.mul(&gk), 0, h.m - k),
                ),
                coeff,
            );
        }
        out
    }

    fn comul_x_base(&self, alpha: &CycloScalar) -> Tensor2<DWord> {
        let h = &self.alg;
        let ctx = h.ctx();
        let ad = alpha.pow_int(h.d as i64).expect("alpha nonzero");
        let a_inv = alpha.inv().expect("alpha nonzero");
        let ad_inv = ad.inv().expect("alpha nonzero");
        let z = self.word(DualSector::Z, alpha.clone(), ad.clone(), 0, 0);
        let x = self.word(DualSector::X, alpha.clone(), ad.clone(), 0, 0);
        let z_inv = self.word(DualSector::Z, a_inv.clone(), ad_inv.clone(), 0, 0);
        let theta0 = theta_at(h, alpha, 0);
        let mut out = Tensor2::simple(z.clone(), x.clone(), ctx.one());
        out.add_term((x.clone(), z_inv.clone()), ctx.one());
        for k in 1..h.m {
            let gk = h.gamma.pow_int(k as i64).expect("gamma nonzero");
            let prefix = theta_range(h, alpha, 1, k);
            let coeff = theta0
                .mul(&prefix)
                .mul(&h.xi.pow_int(k as i64).expect("xi nonzero"))
                .mul(&self.divided_f1_coeff(k))
                .mul(&self.divided_f1_coeff(h.m - k))
                .neg();
            out.add_term(
                (
                    self.word(DualSector::Z, alpha.clone(), ad.clone(), 0, k),
                    self.word(DualSector::X, alpha.clone(), ad.mul(&gk), 0, h.m - k),
                ),
                coeff,
            );
            let prefix2 = theta_range(h, alpha, 1, h.m - k);
            let shift = alpha
                .pow_int(-((h.m - k) as i64) * h.d as i64)
                .expect("alpha nonzero");
            let coeff2 = theta0
                .mul(&prefix2)
                .mul(&shift)
                .mul(&self.divided_f1_coeff(k))
                .mul(&self.divided_f1_coeff(h.m - k))
                .neg();
            out.add_term(
                (
                    self.word(DualSector::X, alpha.clone(), ad.clone(), 0, k),
                    self.word(DualSector::Z, a_inv.clone(), ad_inv.mul(&gk), 0, h.m - k),
                ),
                coeff2,
            );
        }
        out
    }
}

fn theta_at(h: &Arc<DAlgebra>, alpha: &CycloScalar, k: u64) -> CycloScalar {
    d_theta(h, alpha, k).expect("valid theta")
}

fn theta_range(h: &Arc<DAlgebra>, alpha: &CycloScalar, from: u64, to: u64) -> CycloScalar {
    d_theta_range(h, alpha, from, to).expect("valid theta range")
}

fn theta_complement(h: &Arc<DAlgebra>, alpha: &CycloScalar, skip: u64) -> CycloScalar {
    d_theta_complement(h, alpha, skip).expect("valid theta complement")
}

/// Tensor of two elements, `x (x) y`, as a `Tensor2`.
fn tensor_from_elems<W: BasisIndex>(x: &Element<W>, y: &Element<W>) -> Tensor2<W> {
    let mut out = Tensor2::zero();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            out.add_term((a.clone(), b.clone()), ca.mul(cb));
        }
    }
    out
}

impl PresentedHopf for DDual {
    type Word = DWord;
    type Alg = DAlgebra;

    fn alg(&self) -> &Arc<DAlgebra> {
        &self.alg
    }

    // 1 = Z_{1,1} + X_{1,1}
    fn unit(&self) -> Element<DWord> {
        let ctx = self.alg.ctx();
        let one = ctx.one();
        let mut e = Element::monomial(
            self.word(DualSector::Z, one.clone(), one.clone(), 0, 0),
            ctx.one(),
        );
        e.add_term(
            self.word(DualSector::X, one.clone(), one.clone(), 0, 0),
            ctx.one(),
        );
        e
    }

    // Sector rules: Z.Z and X.X stay in sector, Z.X = X.Z = 0. In the Z
    // sector F1 slides past F2 with the (l/m) binomial correction and dies
    // at F1^m; in the X sector F2 commutes cleanly and F1^m wraps with the
    // scalar 1/(1-gamma)^m.
    fn word_mul(&self, a: &DWord, b: &DWord) -> Element<DWord> {
        let h = &self.alg;
        if a.sector != b.sector {
            return Element::zero();
        }
        let pair_a = a.alpha.mul(&b.alpha);
        let pair_b = a.beta.mul(&b.beta);
        match a.sector {
            DualSector::Z => {
                if a.l + b.l >= h.m {
                    return Element::zero();
                }
                let front = b.beta.pow_int(a.l as i64).expect("beta nonzero");
                let l_over_m = ratio(a.l as i64, h.m as i64);
                let mut out = Element::zero();
                for t in 0..=b.s {
                    let c =
                        Rational::from_integer(binomial_big(b.s, t)) * pow_big(&l_over_m, b.s - t);
                    out.add_term(
                        self.word(
                            DualSector::Z,
                            pair_a.clone(),
                            pair_b.clone(),
                            a.s + t,
                            a.l + b.l,
                        ),
                        front.scale(&c),
                    );
                }
                out
            }
            DualSector::X => {
                let front = b
                    .alpha
                    .pow_int(-(h.d as i64))
                    .expect("alpha nonzero")
                    .mul(&b.beta)
                    .pow_int(a.l as i64)
                    .expect("nonzero");
                let (wrap, l_total) = if a.l + b.l >= h.m {
                    let one_minus_gamma = h.ctx().one().sub(&h.gamma);
                    (
                        one_minus_gamma
                            .pow_int(h.m as i64)
                            .expect("nonzero")
                            .inv()
                            .expect("1 - gamma nonzero for m >= 2"),
                        a.l + b.l - h.m,
                    )
                } else {
                    (h.ctx().one(), a.l + b.l)
                };
                Element::monomial(
                    self.word(DualSector::X, pair_a, pair_b, a.s + b.s, l_total),
                    front.mul(&wrap),
                )
            }
        }
    }

    fn word_comul(&self, w: &DWord) -> Tensor2<DWord> {
        let h = &self.alg;
        let ad = w.alpha.pow_int(h.d as i64).expect("alpha nonzero");
        let k0 = discrete_log(&h.gamma, &w.beta.div(&ad).expect("nonzero"), h.m)
            .expect("pair constraint gives a discrete log");
        let base = match w.sector {
            DualSector::Z => self.comul_z_base(&w.alpha),
            DualSector::X => self.comul_x_base(&w.alpha),
        };
        let mut acc = if k0 == 0 {
            base
        } else {
            let g = self.grouplike_pow(k0 as i64);
            let gg = tensor_from_elems(&g, &g);
            let t = p_tensor_mul(self, &base, &gg);
            match w.sector {
                DualSector::Z => t,
                DualSector::X => t.scale(&h.xi.pow_int(-(k0 as i64)).expect("xi nonzero")),
            }
        };
        if w.s > 0 {
            let f2 = self.comul_f2();
            for _ in 0..w.s {
                acc = p_tensor_mul(self, &acc, &f2);
            }
        }
        if w.l > 0 {
            let f1 = self.comul_f1();
            for _ in 0..w.l {
                acc = p_tensor_mul(self, &acc, &f1);
            }
        }
        acc
    }

    fn word_counit(&self, w: &DWord) -> CycloScalar {
        if w.sector == DualSector::Z && w.s == 0 && w.l == 0 {
            self.alg.ctx().one()
        } else {
            self.alg.ctx().zero()
        }
    }

    // S(F1) = -gamma^{-1} (Z_{1,gamma^{-1}} + xi^{-1} X_{1,gamma^{-1}}) F1,
    // S(F2) = -Z_{1,1} F2 + X_{1,1} F2 + ((1-m)/2m) X_{1,1},
    // S(Z_{a,b}) = Z_{a^{-1},b^{-1}},
    // S(X_{a,b}) = a^{(1-m)d/2} gamma^{-k} X_{a, a^d gamma^{-k}}.
    fn word_antipode(&self, w: &DWord) -> Element<DWord> {
        let h = &self.alg;
        let ctx = h.ctx();
        let one = ctx.one();
        let mut acc = self.unit();
        if w.l > 0 {
            let s_f1 = p_mul(
                self,
                &self
                    .grouplike_pow(-1)
                    .scale(&h.gamma.inv().expect("gamma nonzero").neg()),
                &self.gen_elem(&DGen::F1).expect("m >= 2"),
            );
            for _ in 0..w.l {
                acc = p_mul(self, &acc, &s_f1);
            }
        }
        if w.s > 0 {
            let mut s_f2 = Element::monomial(
                self.word(DualSector::Z, one.clone(), one.clone(), 1, 0),
                ctx.one().neg(),
            );
            s_f2.add_term(
                self.word(DualSector::X, one.clone(), one.clone(), 1, 0),
                ctx.one(),
            );
            s_f2.add_term(
                self.word(DualSector::X, one.clone(), one.clone(), 0, 0),
                ctx.from_rational(ratio(1 - h.m as i64, 2 * h.m as i64)),
            );
            for _ in 0..w.s {
                acc = p_mul(self, &acc, &s_f2);
            }
        }
        let head = match w.sector {
            DualSector::Z => Element::monomial(
                self.word(
                    DualSector::Z,
                    w.alpha.inv().expect("alpha nonzero"),
                    w.beta.inv().expect("beta nonzero"),
                    0,
                    0,
                ),
                ctx.one(),
            ),
            DualSector::X => {
                let ad = w.alpha.pow_int(h.d as i64).expect("alpha nonzero");
                let k0 = discrete_log(&h.gamma, &w.beta.div(&ad).expect("nonzero"), h.m)
                    .expect("pair constraint gives a discrete log");
                let coeff = w
                    .alpha
                    .pow_int((1 - h.m as i64) * h.d as i64 / 2)
                    .expect("alpha nonzero")
                    .mul(&h.gamma.pow_int(-(k0 as i64)).expect("gamma nonzero"));
                Element::monomial(
                    self.word(
                        DualSector::X,
                        w.alpha.clone(),
                        ad.mul(&h.gamma.pow_int(-(k0 as i64)).expect("gamma nonzero")),
                        0,
                        0,
                    ),
                    coeff,
                )
            }
        };
        p_mul(self, &acc, &head)
    }

    fn word_theta(&self, w: &DWord) -> Functional<DIdx> {
        let h = &self.alg;
        let head = match w.sector {
            DualSector::Z => d_zeta(h, &w.alpha, &w.beta).expect("valid pair"),
            DualSector::X => d_chi(h, &w.alpha, &w.beta).expect("valid pair"),
        };
        let mut fs = vec![head];
        for _ in 0..w.s {
            fs.push(d_e2(h));
        }
        for _ in 0..w.l {
            fs.push(d_e1(h).expect("l > 0 only for m >= 2"));
        }
        conv_all(h, &fs)
    }
}

// ---------------------------------------------------------------------------
// Hopf-axiom and Theta verification drivers
// ---------------------------------------------------------------------------

use crate::report::Report;

/// Hopf axioms for the presented algebra itself, checked on a word list:
/// coassociativity, both counit laws, and both antipode laws.
pub fn verify_presented_axioms<P: PresentedHopf>(
    p: &P,
    family: &str,
    params: &str,
    words: &[P::Word],
) -> Report {
    let mut report = Report::new("presented-axioms", family, params);
    let ctx = p.ctx();
    for w in words {
        let d = p.word_comul(w);
        // coassociativity
        let mut left: Tensor3<P::Word> = std::collections::BTreeMap::new();
        let mut right = left.clone();
        for ((u, v), c) in d.iter() {
            for ((u1, u2), cu) in p.word_comul(u).iter() {
                add3(&mut left, (u1.clone(), u2.clone(), v.clone()), cu.mul(c));
            }
            for ((v1, v2), cv) in p.word_comul(v).iter() {
                add3(&mut right, (u.clone(), v1.clone(), v2.clone()), cv.mul(c));
            }
        }
        report.case(left == right, || format!("coassociativity fails at {w}"));
        // counit laws
        let mut eps_id = Element::zero();
        let mut id_eps = Element::zero();
        for ((u, v), c) in d.iter() {
            eps_id.add_term(v.clone(), p.word_counit(u).mul(c));
            id_eps.add_term(u.clone(), p.word_counit(v).mul(c));
        }
        let expect = Element::monomial(w.clone(), ctx.one());
        report.case(eps_id == expect, || format!("left counit law fails at {w}"));
        report.case(id_eps == expect, || {
            format!("right counit law fails at {w}")
        });
        // antipode laws
        let target = p.unit().scale(&p.word_counit(w));
        let mut s_id = Element::zero();
        let mut id_s = Element::zero();
        for ((u, v), c) in d.iter() {
            let su = p.word_antipode(u).scale(c);
            s_id = s_id.add(&p_mul(p, &su, &Element::monomial(v.clone(), ctx.one())));
            let sv = p.word_antipode(v).scale(c);
            id_s = id_s.add(&p_mul(p, &Element::monomial(u.clone(), ctx.one()), &sv));
        }
        report.case(s_id == target, || {
            format!("antipode law (S x id) fails at {w}")
        });
        report.case(id_s == target, || {
            format!("antipode law (id x S) fails at {w}")
        });
    }
    report
}

type Tensor3<W> = std::collections::BTreeMap<(W, W, W), CycloScalar>;

fn add3<W: BasisIndex>(map: &mut Tensor3<W>, key: (W, W, W), c: CycloScalar) {
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let s = e.get().add(&c);
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

/// A named generator for the Theta comparison: its presented element and its
/// image functional.
pub struct ThetaGen<P: PresentedHopf> {
    pub label: String,
    pub elem: Element<P::Word>,
    pub image: Functional<<P::Alg as HopfAlgebra>::Idx>,
}

/// Check that Theta intertwines the presented structure with the functional
/// structure: products (normalize-then-Theta equals convolve-of-Theta),
/// coproducts (through pair evaluation), counits, antipodes, for all
/// generator words up to `max_len`.
pub fn verify_theta<P: PresentedHopf>(
    p: &P,
    family: &str,
    params: &str,
    gens: &[ThetaGen<P>],
    max_len: usize,
    basis: &[<P::Alg as HopfAlgebra>::Idx],
    pair_basis: &[<P::Alg as HopfAlgebra>::Idx],
) -> Report {
    let mut report = Report::new("theta", family, params);
    let alg = p.alg();
    let mut sequences: Vec<Vec<usize>> = vec![vec![]];
    for len in 1..=max_len {
        let mut level = Vec::new();
        for seq in &sequences {
            if seq.len() == len - 1 {
                for g in 0..gens.len() {
                    let mut s = seq.clone();
                    s.push(g);
                    level.push(s);
                }
            }
        }
        sequences.extend(level);
    }
    for seq in &sequences {
        let label = if seq.is_empty() {
            "1".to_string()
        } else {
            seq.iter()
                .map(|&g| gens[g].label.clone())
                .collect::<Vec<_>>()
                .join(" ")
        };
        let mut elem = p.unit();
        for &g in seq {
            elem = p_mul(p, &elem, &gens[g].elem);
        }
        let f_norm = theta(p, &elem);
        // product agreement
        let mut f_conv = counit_functional(alg);
        for &g in seq {
            f_conv = convolve(alg, &f_conv, &gens[g].image);
        }
        for b in basis {
            let (l, r) = (f_norm.eval(b), f_conv.eval(b));
            report.case(l == r, || {
                format!("theta product [{label}] differs at {b}: {l} vs {r}")
            });
        }
        // counit agreement: presented counit equals evaluation at 1
        let unit_h = alg.unit_idx();
        let eps_p = p_counit(p, &elem);
        let eps_f = f_norm.eval(&unit_h);
        report.case(eps_p == eps_f, || {
            format!("theta counit [{label}]: {eps_p} vs {eps_f}")
        });
        // coproduct agreement on pairs
        let dp = p_comul(p, &elem);
        let legs: Vec<(Functional<_>, Functional<_>, CycloScalar)> = dp
            .iter()
            .map(|((u, v), c)| (p.word_theta(u), p.word_theta(v), c.clone()))
            .collect();
        for b in pair_basis {
            for bp in pair_basis {
                let lhs = dual_pair_eval(&**alg, &f_norm, b, bp);
                let mut rhs = p.ctx().zero();
                for (fu, fv, c) in &legs {
                    rhs = rhs.add(&fu.eval(b).mul(&fv.eval(bp)).mul(c));
                }
                report.case(lhs == rhs, || {
                    format!("theta coproduct [{label}] fails at ({b}, {bp}): {lhs} vs {rhs}")
                });
            }
        }
        // antipode agreement
        let s_elem = p_antipode(p, &elem);
        let f_s = theta(p, &s_elem);
        for b in basis {
            let lhs = dual_antipode_eval(&**alg, &f_norm, b);
            let rhs = f_s.eval(b);
            report.case(lhs == rhs, || {
                format!("theta antipode [{label}] fails at {b}: {lhs} vs {rhs}")
            });
        }
    }
    report
}
