//! The finite-dual generators as evaluable linear functionals, closed under
//! convolution. Generators carry the closed-form evaluations on the monomial
//! basis; composite functionals are convolution trees evaluated through the
//! coproduct, with per-index memoization (evaluation is pure).

use crate::families::{DAlgebra, DIdx, DSector, LiuAlgebra, LiuIdx, TaftAlgebra, TaftIdx};
use crate::hopf::{BasisIndex, Element, HopfAlgebra};
use crate::scalar::{frac_of, q_factorial, rat, ratio, CycloContext, CycloScalar, ScalarError};
use std::collections::HashMap;
use std::sync::{Arc, Mutex};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DualError {
    #[error("pair constraint fails: alpha^{exp_a} must equal beta^{exp_b}")]
    PairConstraint { exp_a: u64, exp_b: u64 },
    #[error("dual generator pairs must be nonzero")]
    ZeroPair,
    #[error("E1 does not exist for m = 1: its u-sector value divides by 1 - gamma^(-1) = 0")]
    E1Unavailable,
    #[error("lemma {0} does not apply to this family")]
    WrongFamily(&'static str),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

struct FunctionalInner<B: BasisIndex> {
    ctx: Arc<CycloContext>,
    eval: Box<dyn Fn(&B) -> CycloScalar + Send + Sync>,
    memo: Mutex<HashMap<B, CycloScalar>>,
}

/// An element of the finite dual, represented by its evaluation map.
#[derive(Clone)]
pub struct Functional<B: BasisIndex> {
    inner: Arc<FunctionalInner<B>>,
}

impl<B: BasisIndex> Functional<B> {
    pub fn from_fn(
        ctx: &Arc<CycloContext>,
        eval: impl Fn(&B) -> CycloScalar + Send + Sync + 'static,
    ) -> Self {
        Functional {
            inner: Arc::new(FunctionalInner {
                ctx: Arc::clone(ctx),
                eval: Box::new(eval),
                memo: Mutex::new(HashMap::new()),
            }),
        }
    }

    pub fn ctx(&self) -> &Arc<CycloContext> {
        &self.inner.ctx
    }

    pub fn eval(&self, b: &B) -> CycloScalar {
        if let Some(v) = self.inner.memo.lock().unwrap().get(b) {
            return v.clone();
        }
        let v = (self.inner.eval)(b);
        self.inner.memo.lock().unwrap().insert(b.clone(), v.clone());
        v
    }

    pub fn eval_elem(&self, e: &Element<B>) -> CycloScalar {
        let mut acc = self.inner.ctx.zero();
        for (b, c) in e.iter() {
            acc = acc.add(&self.eval(b).mul(c));
        }
        acc
    }

    pub fn scale(&self, c: &CycloScalar) -> Self {
        let f = self.clone();
        let c = c.clone();
        Functional::from_fn(self.ctx(), move |b| f.eval(b).mul(&c))
    }

    pub fn add(&self, other: &Self) -> Self {
        let f = self.clone();
        let g = other.clone();
        Functional::from_fn(self.ctx(), move |b| f.eval(b).add(&g.eval(b)))
    }

    pub fn neg(&self) -> Self {
        let f = self.clone();
        Functional::from_fn(self.ctx(), move |b| f.eval(b).neg())
    }
}

/// The counit, which is the unit of the convolution algebra.
pub fn counit_functional<H: HopfAlgebra + 'static>(h: &Arc<H>) -> Functional<H::Idx> {
    let hh = Arc::clone(h);
    Functional::from_fn(h.ctx(), move |b| hh.counit_basis(b))
}

/// Convolution `(f * g)(b) = sum f(b_(1)) g(b_(2))` through the coproduct.
pub fn convolve<H: HopfAlgebra + 'static>(
    h: &Arc<H>,
    f: &Functional<H::Idx>,
    g: &Functional<H::Idx>,
) -> Functional<H::Idx> {
    let hh = Arc::clone(h);
    let f = f.clone();
    let g = g.clone();
    Functional::from_fn(h.ctx(), move |b| {
        let mut acc = hh.ctx().zero();
        for ((u, v), c) in hh.comul_basis(b).iter() {
            acc = acc.add(&f.eval(u).mul(&g.eval(v)).mul(c));
        }
        acc
    })
}

/// `f^{*k}` with `f^{*0}` the counit.
pub fn conv_power<H: HopfAlgebra + 'static>(
    h: &Arc<H>,
    f: &Functional<H::Idx>,
    k: u64,
) -> Functional<H::Idx> {
    let mut acc = counit_functional(h);
    for _ in 0..k {
        acc = convolve(h, &acc, f);
    }
    acc
}

/// Convolution product of a list, left to right; empty product is the counit.
pub fn conv_all<H: HopfAlgebra + 'static>(
    h: &Arc<H>,
    fs: &[Functional<H::Idx>],
) -> Functional<H::Idx> {
    let mut acc = counit_functional(h);
    for f in fs {
        acc = convolve(h, &acc, f);
    }
    acc
}

/// `<f, b b'>`, the left side of every coproduct-formula verification.
pub fn dual_pair_eval<H: HopfAlgebra>(
    h: &H,
    f: &Functional<H::Idx>,
    b: &H::Idx,
    bp: &H::Idx,
) -> CycloScalar {
    f.eval_elem(&h.mul_basis(b, bp))
}

/// `<f, S(b)>`, the transpose-antipode evaluation.
pub fn dual_antipode_eval<H: HopfAlgebra>(
    h: &H,
    f: &Functional<H::Idx>,
    b: &H::Idx,
) -> CycloScalar {
    f.eval_elem(&h.antipode_basis(b))
}

// ---------------------------------------------------------------------------
// Taft dual generators: psi_lambda, omega, E1, E2 on g^j x^l
// ---------------------------------------------------------------------------

/// `psi_lambda : g^j x^l -> lambda^u` when `l = u m`, else `0`.
pub fn taft_psi(h: &Arc<TaftAlgebra>, lambda: &CycloScalar) -> Functional<TaftIdx> {
    let m = h.m;
    let lambda = lambda.clone();
    Functional::from_fn(h.ctx(), move |b: &TaftIdx| {
        if b.l.is_multiple_of(m) {
            lambda.pow_int((b.l / m) as i64).expect("nonnegative power")
        } else {
            lambda.ctx().zero()
        }
    })
}

/// `omega : g^j x^l -> delta_{l,0} xi^j`.
pub fn taft_omega(h: &Arc<TaftAlgebra>) -> Functional<TaftIdx> {
    let xi = h.xi.clone();
    Functional::from_fn(h.ctx(), move |b: &TaftIdx| {
        if b.l == 0 {
            xi.pow_int(b.j as i64).expect("xi nonzero")
        } else {
            xi.ctx().zero()
        }
    })
}

/// `E1 : g^j x^l -> delta_{l,1}`.
pub fn taft_e1(h: &Arc<TaftAlgebra>) -> Functional<TaftIdx> {
    let ctx = Arc::clone(h.ctx());
    Functional::from_fn(
        h.ctx(),
        move |b: &TaftIdx| {
            if b.l == 1 {
                ctx.one()
            } else {
                ctx.zero()
            }
        },
    )
}

/// `E2 : g^j x^l -> delta_{l,m}`.
pub fn taft_e2(h: &Arc<TaftAlgebra>) -> Functional<TaftIdx> {
    let ctx = Arc::clone(h.ctx());
    let m = h.m;
    Functional::from_fn(
        h.ctx(),
        move |b: &TaftIdx| {
            if b.l == m {
                ctx.one()
            } else {
                ctx.zero()
            }
        },
    )
}

/// Divided power `E1^{[k]} = (1/k!_{xi^v}) E1^{*k}`; requires `k < m` so the
/// quantum factorial is invertible.
pub fn taft_e1_divided(h: &Arc<TaftAlgebra>, k: u64) -> Result<Functional<TaftIdx>, DualError> {
    let fact = q_factorial(k, &h.q);
    let inv = fact.inv().map_err(DualError::Scalar)?;
    Ok(conv_power(h, &taft_e1(h), k).scale(&inv))
}

/// Divided power `E2^{[s]} = (1/s!) E2^{*s}`.
pub fn taft_e2_divided(h: &Arc<TaftAlgebra>, s: u64) -> Functional<TaftIdx> {
    let inv = h
        .ctx()
        .from_rational(Rational::one() / Rational::from_integer(crate::scalar::factorial_big(s)));
    conv_power(h, &taft_e2(h), s).scale(&inv)
}

use num_traits::One;

use crate::scalar::Rational;

/// The idempotent `sigma_c = (m/n) sum_t xi^{-tmc} omega^{tm}` picking out
/// the congruence class `j = c mod n/m`.
pub fn taft_sigma(h: &Arc<TaftAlgebra>, c: u64) -> Functional<TaftIdx> {
    let omega = taft_omega(h);
    let classes = h.n / h.m;
    let mut acc = counit_functional(h).scale(&h.ctx().zero());
    for t in 0..classes {
        let coeff =
            h.xi.pow_int(-((t * h.m * c) as i64))
                .expect("xi nonzero")
                .scale(&ratio(h.m as i64, h.n as i64));
        acc = acc.add(&conv_power(h, &omega, t * h.m).scale(&coeff));
    }
    acc
}

// ---------------------------------------------------------------------------
// Liu dual generators: psi_{alpha,beta}, E1, E2 on x^i g^j y^l
// ---------------------------------------------------------------------------

fn check_pair(
    alpha: &CycloScalar,
    beta: &CycloScalar,
    exp_a: u64,
    exp_b: u64,
) -> Result<(), DualError> {
    if alpha.is_zero() || beta.is_zero() {
        return Err(DualError::ZeroPair);
    }
    let lhs = alpha.pow_int(exp_a as i64)?;
    let rhs = beta.pow_int(exp_b as i64)?;
    if lhs != rhs {
        return Err(DualError::PairConstraint { exp_a, exp_b });
    }
    Ok(())
}

/// `psi_{alpha,beta} : x^i g^j y^l -> delta_{l,0} alpha^i beta^j`, with the
/// constraint `alpha^omega = beta^n`.
pub fn liu_psi(
    h: &Arc<LiuAlgebra>,
    alpha: &CycloScalar,
    beta: &CycloScalar,
) -> Result<Functional<LiuIdx>, DualError> {
    check_pair(alpha, beta, h.omega, h.n)?;
    let alpha = alpha.clone();
    let beta = beta.clone();
    Ok(Functional::from_fn(h.ctx(), move |b: &LiuIdx| {
        if b.l == 0 {
            alpha
                .pow_int(b.i as i64)
                .expect("alpha nonzero")
                .mul(&beta.pow_int(b.j).expect("beta nonzero"))
        } else {
            alpha.ctx().zero()
        }
    }))
}

/// `E1 : x^i g^j y^l -> delta_{l,1}`.
pub fn liu_e1(h: &Arc<LiuAlgebra>) -> Functional<LiuIdx> {
    let ctx = Arc::clone(h.ctx());
    Functional::from_fn(
        h.ctx(),
        move |b: &LiuIdx| {
            if b.l == 1 {
                ctx.one()
            } else {
                ctx.zero()
            }
        },
    )
}

/// `E2 : x^i g^j y^l -> delta_{l,0} (i/omega + j/n)`.
pub fn liu_e2(h: &Arc<LiuAlgebra>) -> Functional<LiuIdx> {
    let ctx = Arc::clone(h.ctx());
    let (omega, n) = (h.omega, h.n);
    Functional::from_fn(h.ctx(), move |b: &LiuIdx| {
        if b.l == 0 {
            ctx.from_rational(frac_of(b.i as i64, omega) + frac_of(b.j, n))
        } else {
            ctx.zero()
        }
    })
}

pub fn liu_e1_divided(h: &Arc<LiuAlgebra>, k: u64) -> Result<Functional<LiuIdx>, DualError> {
    let fact = q_factorial(k, &h.gamma);
    let inv = fact.inv().map_err(DualError::Scalar)?;
    Ok(conv_power(h, &liu_e1(h), k).scale(&inv))
}

// ---------------------------------------------------------------------------
// D dual generators: zeta_{alpha,beta}, chi_{alpha,beta}, E1, E2
// ---------------------------------------------------------------------------

/// `zeta_{alpha,beta}`: `delta_{l,0} alpha^i beta^j` on the `y`-sector,
/// `0` on the `u`-sector; constraint `alpha^omega = beta^m`.
pub fn d_zeta(
    h: &Arc<DAlgebra>,
    alpha: &CycloScalar,
    beta: &CycloScalar,
) -> Result<Functional<DIdx>, DualError> {
    check_pair(alpha, beta, h.omega, h.m)?;
    let alpha = alpha.clone();
    let beta = beta.clone();
    Ok(Functional::from_fn(h.ctx(), move |b: &DIdx| {
        if b.sector == DSector::Y && b.l == 0 {
            alpha
                .pow_int(b.i as i64)
                .expect("alpha nonzero")
                .mul(&beta.pow_int(b.j).expect("beta nonzero"))
        } else {
            alpha.ctx().zero()
        }
    }))
}

/// `chi_{alpha,beta}`: the mirror of `zeta` supported on the `u`-sector.
pub fn d_chi(
    h: &Arc<DAlgebra>,
    alpha: &CycloScalar,
    beta: &CycloScalar,
) -> Result<Functional<DIdx>, DualError> {
    check_pair(alpha, beta, h.omega, h.m)?;
    let alpha = alpha.clone();
    let beta = beta.clone();
    Ok(Functional::from_fn(h.ctx(), move |b: &DIdx| {
        if b.sector == DSector::U && b.l == 0 {
            alpha
                .pow_int(b.i as i64)
                .expect("alpha nonzero")
                .mul(&beta.pow_int(b.j).expect("beta nonzero"))
        } else {
            alpha.ctx().zero()
        }
    }))
}

/// `E1`: `delta_{l,1}` on the `y`-sector and `xi/(1-gamma^{-1}) delta_{l,1}`
/// on the `u`-sector. Rejected for `m = 1`, where the denominator vanishes;
/// the dual generator set there is `{zeta, chi, E2}`.
pub fn d_e1(h: &Arc<DAlgebra>) -> Result<Functional<DIdx>, DualError> {
    if h.m == 1 {
        return Err(DualError::E1Unavailable);
    }
    let one_minus_gamma_inv = h
        .ctx()
        .one()
        .sub(&h.gamma.inv().map_err(DualError::Scalar)?);
    let u_value = h.xi.div(&one_minus_gamma_inv).map_err(DualError::Scalar)?;
    let ctx = Arc::clone(h.ctx());
    Ok(Functional::from_fn(h.ctx(), move |b: &DIdx| {
        if b.l != 1 {
            return ctx.zero();
        }
        match b.sector {
            DSector::Y => ctx.one(),
            DSector::U => u_value.clone(),
        }
    }))
}

/// `E2 : -> delta_{l,0} (i/omega + j/m)` on both sectors.
pub fn d_e2(h: &Arc<DAlgebra>) -> Functional<DIdx> {
    let ctx = Arc::clone(h.ctx());
    let (omega, m) = (h.omega, h.m);
    Functional::from_fn(h.ctx(), move |b: &DIdx| {
        if b.l == 0 {
            ctx.from_rational(frac_of(b.i as i64, omega) + frac_of(b.j, m))
        } else {
            ctx.zero()
        }
    })
}

pub fn d_e1_divided(h: &Arc<DAlgebra>, k: u64) -> Result<Functional<DIdx>, DualError> {
    let fact = q_factorial(k, &h.gamma);
    let inv = fact.inv().map_err(DualError::Scalar)?;
    Ok(conv_power(h, &d_e1(h)?, k).scale(&inv))
}

/// Integer convolution powers of the grouplike `zeta_{1,gamma} + xi chi_{1,gamma}`,
/// in closed form: `G^e = zeta_{1,gamma^e} + xi^e chi_{1,gamma^e}`.
pub fn d_grouplike_pow(h: &Arc<DAlgebra>, e: i64) -> Functional<DIdx> {
    let gamma_e = h.gamma.pow_int(e).expect("gamma nonzero");
    let xi_e = h.xi.pow_int(e).expect("xi nonzero");
    let zeta = d_zeta(h, &h.ctx().one(), &gamma_e).expect("valid pair");
    let chi = d_chi(h, &h.ctx().one(), &gamma_e).expect("valid pair");
    zeta.add(&chi.scale(&xi_e))
}

/// `theta_0 = m (1 - alpha^d)` and `theta_k = (1 - gamma^k alpha^d)/(1 - gamma^k)`
/// for `1 <= k <= m-1`, where `alpha` stands for `lambda^{1/omega}`.
pub fn d_theta(h: &Arc<DAlgebra>, alpha: &CycloScalar, k: u64) -> Result<CycloScalar, DualError> {
    let ad = alpha.pow_int(h.d as i64)?;
    if k == 0 {
        Ok(h.ctx().one().sub(&ad).scale(&rat(h.m as i64)))
    } else {
        let gk = h.gamma.pow_int(k as i64)?;
        let num = h.ctx().one().sub(&gk.mul(&ad));
        let den = h.ctx().one().sub(&gk);
        Ok(num.div(&den)?)
    }
}

/// `theta_from theta_{from+1} ... theta_{to-1}`.
pub fn d_theta_range(
    h: &Arc<DAlgebra>,
    alpha: &CycloScalar,
    from: u64,
    to: u64,
) -> Result<CycloScalar, DualError> {
    let mut acc = h.ctx().one();
    for k in from..to {
        acc = acc.mul(&d_theta(h, alpha, k)?);
    }
    Ok(acc)
}

/// `(1 - lambda) theta_skip^{-1}` computed as the product of the other
/// thetas, which stays well-defined when `theta_skip` itself vanishes.
pub fn d_theta_complement(
    h: &Arc<DAlgebra>,
    alpha: &CycloScalar,
    skip: u64,
) -> Result<CycloScalar, DualError> {
    let mut acc = h.ctx().one();
    for k in 0..h.m {
        if k != skip {
            acc = acc.mul(&d_theta(h, alpha, k)?);
        }
    }
    Ok(acc)
}
