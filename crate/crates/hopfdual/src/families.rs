//! The three concrete Hopf algebra families of GK-dimension one, on their
//! normal-form monomial bases:
//!
//! * the infinite-dimensional Taft algebra `T(n, v, xi)` on `g^j x^l`,
//! * the generalized Liu algebra `B(n, omega, gamma)` on `x^i g^j y^l`,
//! * the two-sector family `D(m, d, xi)` on `x^i g^j y^l` and `x^i g^j u_l`,
//!   with the infinite dihedral group algebra realized as `D(1, 1, -1)`.
//!
//! Products reduce every word back to the basis: group exponents wrap, `y`
//! overflow rewrites through `y^n = 1 - g^n` (resp. `y^m = 1 - g^m`), `x`
//! overflow through `x^omega = g^n` (resp. `g^m`), and `u` subscripts are
//! periodic mod `m` with the `phi`-chains supplying the wrap factors.

use crate::hopf::{lin_mul, Element, HopfAlgebra, Tensor2};
use crate::scalar::{fdiv, q_binomial, umod, CycloContext, CycloScalar, ScalarError};
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FamilyError {
    #[error("{0} is not a primitive {1}-th root of unity")]
    NotPrimitiveRoot(String, u64),
    #[error("parameter out of range: {0}")]
    ParamRange(String),
    #[error("(1+m)d must be even, got m={m}, d={d}")]
    ParityViolation { m: u64, d: u64 },
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

// ---------------------------------------------------------------------------
// Infinite-dimensional Taft algebra
// ---------------------------------------------------------------------------

/// Basis monomial `g^j x^l` with `j` reduced mod `n` and `l` unbounded.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TaftIdx {
    pub j: u64,
    pub l: u64,
}

impl fmt::Display for TaftIdx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g^{} x^{}", self.j, self.l)
    }
}

pub struct TaftAlgebra {
    ctx: Arc<CycloContext>,
    pub n: u64,
    pub v: u64,
    /// `n / gcd(n, v)`, the order of `xi^v` (with `gcd(n, 0) = n`).
    pub m: u64,
    pub xi: CycloScalar,
    /// `xi^v`, the quantum parameter of the coproduct expansion.
    pub q: CycloScalar,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl TaftAlgebra {
    pub fn new(
        ctx: &Arc<CycloContext>,
        n: u64,
        v: u64,
        xi: CycloScalar,
    ) -> Result<Arc<Self>, FamilyError> {
        if n == 0 || v >= n {
            return Err(FamilyError::ParamRange(format!(
                "need n >= 1 and 0 <= v <= n-1, got n={n}, v={v}"
            )));
        }
        if !xi.is_primitive_root(n) {
            return Err(FamilyError::NotPrimitiveRoot(xi.exact_string(), n));
        }
        let m = n / gcd(n, v);
        let q = xi.pow_int(v as i64)?;
        Ok(Arc::new(TaftAlgebra {
            ctx: Arc::clone(ctx),
            n,
            v,
            m,
            xi,
            q,
        }))
    }

    pub fn idx(&self, j: i64, l: u64) -> TaftIdx {
        TaftIdx {
            j: umod(j, self.n),
            l,
        }
    }

    /// All `g^j x^l` with `l <= l_max`.
    pub fn basis_slice(&self, l_max: u64) -> Vec<TaftIdx> {
        let mut out = Vec::new();
        for j in 0..self.n {
            for l in 0..=l_max {
                out.push(TaftIdx { j, l });
            }
        }
        out
    }
}

impl HopfAlgebra for TaftAlgebra {
    type Idx = TaftIdx;

    fn ctx(&self) -> &Arc<CycloContext> {
        &self.ctx
    }

    fn unit_idx(&self) -> TaftIdx {
        TaftIdx { j: 0, l: 0 }
    }

    // (g^j x^l)(g^j' x^l') = xi^{j'l} g^{j+j'} x^{l+l'}
    fn mul_basis(&self, a: &TaftIdx, b: &TaftIdx) -> Element<TaftIdx> {
        let c = self
            .xi
            .pow_int((b.j as i64) * (a.l as i64))
            .expect("xi nonzero");
        Element::monomial(self.idx(a.j as i64 + b.j as i64, a.l + b.l), c)
    }

    // Delta(g^j x^l) = sum_k [l choose k]_{xi^v} g^j x^k (x) g^{j+kv} x^{l-k}
    fn comul_basis(&self, a: &TaftIdx) -> Tensor2<TaftIdx> {
        let mut out = Tensor2::zero();
        for k in 0..=a.l {
            let c = q_binomial(a.l, k, &self.q).expect("k <= l");
            out.add_term(
                (
                    TaftIdx { j: a.j, l: k },
                    self.idx(a.j as i64 + (k as i64) * (self.v as i64), a.l - k),
                ),
                c,
            );
        }
        out
    }

    fn counit_basis(&self, a: &TaftIdx) -> CycloScalar {
        if a.l == 0 {
            self.ctx.one()
        } else {
            self.ctx.zero()
        }
    }

    // S(g) = g^{n-1}, S(x) = -xi^{-v} g^{n-v} x, extended anti-homomorphically:
    // S(g^j x^l) = S(x)^l S(g)^j.
    fn antipode_basis(&self, a: &TaftIdx) -> Element<TaftIdx> {
        let s_x = Element::monomial(
            self.idx(self.n as i64 - self.v as i64, 1),
            self.xi.pow_int(-(self.v as i64)).expect("xi nonzero").neg(),
        );
        let mut acc = self.unit_elem();
        for _ in 0..a.l {
            acc = lin_mul(self, &acc, &s_x);
        }
        let s_gj = Element::monomial(self.idx(-(a.j as i64), 0), self.ctx.one());
        lin_mul(self, &acc, &s_gj)
    }
}

// ---------------------------------------------------------------------------
// Generalized Liu algebra
// ---------------------------------------------------------------------------

/// Basis monomial `x^i g^j y^l` with `i` reduced mod `omega`, `j` in `Z`,
/// and `l` reduced below `n`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct LiuIdx {
    pub i: u64,
    pub j: i64,
    pub l: u64,
}

impl fmt::Display for LiuIdx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^{} g^{} y^{}", self.i, self.j, self.l)
    }
}

pub struct LiuAlgebra {
    ctx: Arc<CycloContext>,
    pub n: u64,
    pub omega: u64,
    pub gamma: CycloScalar,
}

impl LiuAlgebra {
    pub fn new(
        ctx: &Arc<CycloContext>,
        n: u64,
        omega: u64,
        gamma: CycloScalar,
    ) -> Result<Arc<Self>, FamilyError> {
        if n == 0 || omega == 0 {
            return Err(FamilyError::ParamRange(format!(
                "need n, omega >= 1, got n={n}, omega={omega}"
            )));
        }
        if !gamma.is_primitive_root(n) {
            return Err(FamilyError::NotPrimitiveRoot(gamma.exact_string(), n));
        }
        Ok(Arc::new(LiuAlgebra {
            ctx: Arc::clone(ctx),
            n,
            omega,
            gamma,
        }))
    }

    /// Reduce `coeff * x^i g^j y^l` with arbitrary integer `i` and `l < 2n`
    /// to basis form, using `x^omega = g^n` and `y^n = 1 - g^n`.
    fn monomial(&self, coeff: CycloScalar, i: i64, j: i64, l: u64) -> Element<LiuIdx> {
        let mut out = Element::zero();
        self.push_monomial(&mut out, coeff, i, j, l);
        out
    }

    fn push_monomial(&self, out: &mut Element<LiuIdx>, coeff: CycloScalar, i: i64, j: i64, l: u64) {
        if coeff.is_zero() {
            return;
        }
        if l >= self.n {
            // y^l = (1 - g^n) y^{l-n}; y^n is central.
            self.push_monomial(out, coeff.clone(), i, j, l - self.n);
            self.push_monomial(out, coeff.neg(), i, j + self.n as i64, l - self.n);
            return;
        }
        let q = fdiv(i, self.omega);
        let idx = LiuIdx {
            i: umod(i, self.omega),
            j: j + q * self.n as i64,
            l,
        };
        out.add_term(idx, coeff);
    }

    pub fn idx(&self, i: i64, j: i64, l: u64) -> LiuIdx {
        let q = fdiv(i, self.omega);
        LiuIdx {
            i: umod(i, self.omega),
            j: j + q * self.n as i64,
            l: l % self.n,
        }
    }

    /// All `x^i g^j y^l` with `|j| <= j_bound`.
    pub fn basis_slice(&self, j_bound: i64) -> Vec<LiuIdx> {
        let mut out = Vec::new();
        for i in 0..self.omega {
            for j in -j_bound..=j_bound {
                for l in 0..self.n {
                    out.push(LiuIdx { i, j, l });
                }
            }
        }
        out
    }
}

impl HopfAlgebra for LiuAlgebra {
    type Idx = LiuIdx;

    fn ctx(&self) -> &Arc<CycloContext> {
        &self.ctx
    }

    fn unit_idx(&self) -> LiuIdx {
        LiuIdx { i: 0, j: 0, l: 0 }
    }

    // (x^i g^j y^l)(x^i' g^j' y^l') = gamma^{j'l} x^{i+i'} g^{j+j'} y^{l+l'}
    fn mul_basis(&self, a: &LiuIdx, b: &LiuIdx) -> Element<LiuIdx> {
        let c = self.gamma.pow_int(b.j * a.l as i64).expect("gamma nonzero");
        self.monomial(c, a.i as i64 + b.i as i64, a.j + b.j, a.l + b.l)
    }

    // Delta(x^i g^j y^l) = sum_k [l choose k]_gamma x^i g^j y^k (x) x^i g^{j+k} y^{l-k}
    fn comul_basis(&self, a: &LiuIdx) -> Tensor2<LiuIdx> {
        let mut out = Tensor2::zero();
        for k in 0..=a.l {
            let c = q_binomial(a.l, k, &self.gamma).expect("k <= l");
            out.add_term(
                (
                    LiuIdx {
                        i: a.i,
                        j: a.j,
                        l: k,
                    },
                    LiuIdx {
                        i: a.i,
                        j: a.j + k as i64,
                        l: a.l - k,
                    },
                ),
                c,
            );
        }
        out
    }

    fn counit_basis(&self, a: &LiuIdx) -> CycloScalar {
        if a.l == 0 {
            self.ctx.one()
        } else {
            self.ctx.zero()
        }
    }

    // S(x) = x^{-1}, S(g) = g^{-1}, S(y) = -gamma^{-1} g^{-1} y;
    // S(x^i g^j y^l) = S(y)^l g^{-j} x^{-i}.
    fn antipode_basis(&self, a: &LiuIdx) -> Element<LiuIdx> {
        let s_y = self.monomial(self.gamma.inv().expect("gamma nonzero").neg(), 0, -1, 1);
        let mut acc = self.unit_elem();
        for _ in 0..a.l {
            acc = lin_mul(self, &acc, &s_y);
        }
        let tail = self.monomial(self.ctx.one(), -(a.i as i64), -a.j, 0);
        lin_mul(self, &acc, &tail)
    }
}

// ---------------------------------------------------------------------------
// The two-sector family D(m, d, xi)
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum DSector {
    Y,
    U,
}

/// Basis monomial `x^i g^j y^l` (sector `Y`) or `x^i g^j u_l` (sector `U`),
/// with `i` reduced mod `omega = md` and `l` below `m`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct DIdx {
    pub sector: DSector,
    pub i: u64,
    pub j: i64,
    pub l: u64,
}

impl fmt::Display for DIdx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sector {
            DSector::Y => write!(f, "x^{} g^{} y^{}", self.i, self.j, self.l),
            DSector::U => write!(f, "x^{} g^{} u_{}", self.i, self.j, self.l),
        }
    }
}

pub struct DAlgebra {
    ctx: Arc<CycloContext>,
    pub m: u64,
    pub d: u64,
    /// `omega = m d`.
    pub omega: u64,
    /// Primitive `2m`-th root.
    pub xi: CycloScalar,
    /// `gamma = xi^2`, of order `m`.
    pub gamma: CycloScalar,
    /// `(1+m)d/2`, an integer by the parity hypothesis.
    half_shift: i64,
}

impl DAlgebra {
    pub fn new(
        ctx: &Arc<CycloContext>,
        m: u64,
        d: u64,
        xi: CycloScalar,
    ) -> Result<Arc<Self>, FamilyError> {
        if m == 0 || d == 0 {
            return Err(FamilyError::ParamRange(format!(
                "need m, d >= 1, got m={m}, d={d}"
            )));
        }
        if !((1 + m) * d).is_multiple_of(2) {
            return Err(FamilyError::ParityViolation { m, d });
        }
        if !xi.is_primitive_root(2 * m) {
            return Err(FamilyError::NotPrimitiveRoot(xi.exact_string(), 2 * m));
        }
        let gamma = xi.mul(&xi);
        Ok(Arc::new(DAlgebra {
            ctx: Arc::clone(ctx),
            m,
            d,
            omega: m * d,
            xi,
            gamma,
            half_shift: ((1 + m) * d / 2) as i64,
        }))
    }

    /// The infinite dihedral group algebra, `D(1, 1, -1)`; the group
    /// generators are `g` and the reflection `u_0`.
    pub fn dihedral(ctx: &Arc<CycloContext>) -> Result<Arc<Self>, FamilyError> {
        let minus_one = ctx.primitive_root(2)?;
        DAlgebra::new(ctx, 1, 1, minus_one)
    }

    pub fn idx(&self, sector: DSector, i: i64, j: i64, l: i64) -> DIdx {
        let q = fdiv(i, self.omega);
        DIdx {
            sector,
            i: umod(i, self.omega),
            j: j + q * self.m as i64,
            l: umod(l, self.m),
        }
    }

    /// Reduce `coeff * x^i g^j y^l` (arbitrary `i`, `l < 2m`) to basis form.
    fn y_monomial(&self, out: &mut Element<DIdx>, coeff: CycloScalar, i: i64, j: i64, l: u64) {
        if coeff.is_zero() {
            return;
        }
        if l >= self.m {
            // y^l = (1 - g^m) y^{l-m}
            self.y_monomial(out, coeff.clone(), i, j, l - self.m);
            self.y_monomial(out, coeff.neg(), i, j + self.m as i64, l - self.m);
            return;
        }
        out.add_term(self.idx(DSector::Y, i, j, l as i64), coeff);
    }

    /// `phi_t = 1 - gamma^{-t-1} x^d`; subscripts are periodic mod `m`.
    /// Coefficient `k` of the returned vector multiplies `x^{kd}` in
    /// `phi_start phi_{start+1} ... phi_{start+count-1}`.
    fn phi_chain(&self, start: i64, count: u64) -> Vec<CycloScalar> {
        let mut coeffs = vec![self.ctx.one()];
        for t in 0..count as i64 {
            let factor = self
                .gamma
                .pow_int(-(start + t) - 1)
                .expect("gamma nonzero")
                .neg();
            let mut next = vec![self.ctx.zero(); coeffs.len() + 1];
            for (k, c) in coeffs.iter().enumerate() {
                next[k] = next[k].add(c);
                next[k + 1] = next[k + 1].add(&c.mul(&factor));
            }
            coeffs = next;
        }
        coeffs
    }

    /// The product `phi_start ... phi_{start+count-1}` expanded and reduced
    /// to `Y`-sector basis monomials with `l = 0`.
    pub fn phi_product(&self, start: i64, count: u64) -> Element<DIdx> {
        let mut out = Element::zero();
        for (k, c) in self.phi_chain(start, count).into_iter().enumerate() {
            if !c.is_zero() {
                out.add_term(self.idx(DSector::Y, (k as i64) * self.d as i64, 0, 0), c);
            }
        }
        out
    }

    /// `u_i u_j` as a `Y`-sector element:
    /// `(-1)^j xi^{-j} gamma^{j(j+1)/2} (1/m) x^{-(1+m)d/2}` times the
    /// `phi`-chain of `(m-1-i-j) mod m` factors starting at `phi_i`, times
    /// `y^{(i+j) mod m} g`, fully reduced.
    pub fn u_product(&self, ui: u64, uj: u64) -> Element<DIdx> {
        let m = self.m as i64;
        let i = ui as i64;
        let j = uj as i64;
        let mut coeff = self
            .xi
            .pow_int(-j)
            .expect("xi nonzero")
            .mul(&self.gamma.pow_int(j * (j + 1) / 2).expect("gamma nonzero"))
            .scale(&crate::scalar::ratio(1, self.m as i64));
        if j % 2 == 1 {
            coeff = coeff.neg();
        }
        let count = umod(m - 1 - i - j, self.m);
        let chain = self.phi_chain(i, count);
        let y_exp = umod(i + j, self.m);
        // x^{E} * chain * y^{y_exp} * g with y^c g = gamma^c g y^c
        let g_twist = self.gamma.pow_int(y_exp as i64).expect("gamma nonzero");
        let mut out = Element::zero();
        for (k, c) in chain.into_iter().enumerate() {
            let x_exp = (k as i64) * self.d as i64 - self.half_shift;
            self.y_monomial(&mut out, coeff.mul(&c).mul(&g_twist), x_exp, 1, y_exp);
        }
        out
    }

    /// All basis monomials in both sectors with `|j| <= j_bound`.
    pub fn basis_slice(&self, j_bound: i64) -> Vec<DIdx> {
        let mut out = Vec::new();
        for sector in [DSector::Y, DSector::U] {
            for i in 0..self.omega {
                for j in -j_bound..=j_bound {
                    for l in 0..self.m {
                        out.push(DIdx { sector, i, j, l });
                    }
                }
            }
        }
        out
    }
}

impl HopfAlgebra for DAlgebra {
    type Idx = DIdx;

    fn ctx(&self) -> &Arc<CycloContext> {
        &self.ctx
    }

    fn unit_idx(&self) -> DIdx {
        DIdx {
            sector: DSector::Y,
            i: 0,
            j: 0,
            l: 0,
        }
    }

    fn mul_basis(&self, a: &DIdx, b: &DIdx) -> Element<DIdx> {
        let (i, j, l) = (a.i as i64, a.j, a.l);
        let (ip, jp, lp) = (b.i as i64, b.j, b.l);
        let d = self.d as i64;
        let twist = self.gamma.pow_int(jp * l as i64).expect("gamma nonzero");
        match (a.sector, b.sector) {
            // (x^i g^j y^l)(x^i' g^j' y^l') = gamma^{j'l} x^{i+i'} g^{j+j'} y^{l+l'}
            (DSector::Y, DSector::Y) => {
                let mut out = Element::zero();
                self.y_monomial(&mut out, twist, i + ip, j + jp, l + lp);
                out
            }
            // (x^i g^j y^l)(x^i' g^j' u_l') =
            //   gamma^{j'l} x^{i+i'} phi_{l'} .. phi_{l'+l-1} g^{j+j'} u_{l+l'}
            (DSector::Y, DSector::U) => {
                let chain = self.phi_chain(lp as i64, l);
                let mut out = Element::zero();
                for (k, c) in chain.into_iter().enumerate() {
                    out.add_term(
                        self.idx(DSector::U, i + ip + (k as i64) * d, j + jp, (l + lp) as i64),
                        twist.mul(&c),
                    );
                }
                out
            }
            // (x^i g^j u_l)(x^i' g^j' y^l') = xi^{-l'} gamma^{j'l}
            //   x^{i-i'-2dj'-dl'} phi_l .. phi_{l+l'-1} g^{j+j'} u_{l+l'}
            (DSector::U, DSector::Y) => {
                let front = self
                    .xi
                    .pow_int(-(lp as i64))
                    .expect("xi nonzero")
                    .mul(&twist);
                let chain = self.phi_chain(l as i64, lp);
                let base = i - ip - 2 * d * jp - d * lp as i64;
                let mut out = Element::zero();
                for (k, c) in chain.into_iter().enumerate() {
                    out.add_term(
                        self.idx(DSector::U, base + (k as i64) * d, j + jp, (l + lp) as i64),
                        front.mul(&c),
                    );
                }
                out
            }
            // (x^i g^j u_l)(x^i' g^j' u_l') = gamma^{j'l} x^{i-i'-2dj'} g^{j+j'} u_l u_l'
            (DSector::U, DSector::U) => {
                let uu = self.u_product(a.l, b.l);
                let mut out = Element::zero();
                for (idx, c) in uu.iter() {
                    // left-multiply by x^{i-i'-2dj'} g^{j+j'}
                    let term = self.idx(
                        DSector::Y,
                        idx.i as i64 + (i - ip - 2 * d * jp),
                        idx.j + j + jp,
                        idx.l as i64,
                    );
                    out.add_term(term, twist.mul(c));
                }
                out
            }
        }
    }

    fn comul_basis(&self, a: &DIdx) -> Tensor2<DIdx> {
        let mut out = Tensor2::zero();
        match a.sector {
            // Delta(x^i g^j y^l) = sum_k [l k]_gamma x^i g^j y^k (x) x^i g^{j+k} y^{l-k}
            DSector::Y => {
                for k in 0..=a.l {
                    let c = q_binomial(a.l, k, &self.gamma).expect("k <= l");
                    out.add_term(
                        (
                            DIdx {
                                sector: DSector::Y,
                                i: a.i,
                                j: a.j,
                                l: k,
                            },
                            DIdx {
                                sector: DSector::Y,
                                i: a.i,
                                j: a.j + k as i64,
                                l: a.l - k,
                            },
                        ),
                        c,
                    );
                }
            }
            // Delta(x^i g^j u_l) = sum_k gamma^{k(l-k)} x^i g^j u_k (x) x^{i-kd} g^{j+k} u_{l-k}
            DSector::U => {
                for k in 0..self.m {
                    let e = (k as i64) * (a.l as i64 - k as i64);
                    let c = self.gamma.pow_int(e).expect("gamma nonzero");
                    out.add_term(
                        (
                            DIdx {
                                sector: DSector::U,
                                i: a.i,
                                j: a.j,
                                l: k,
                            },
                            self.idx(
                                DSector::U,
                                a.i as i64 - (k as i64) * self.d as i64,
                                a.j + k as i64,
                                a.l as i64 - k as i64,
                            ),
                        ),
                        c,
                    );
                }
            }
        }
        out
    }

    fn counit_basis(&self, a: &DIdx) -> CycloScalar {
        if a.l == 0 {
            self.ctx.one()
        } else {
            self.ctx.zero()
        }
    }

    // S(x) = x^{-1}, S(g) = g^{-1}, S(y) = -gamma^{-1} g^{-1} y,
    // S(u_l) = (-1)^l xi^{-l} gamma^{-l(l+1)/2} x^{ld + 3(1-m)d/2} g^{m-l-1} u_l.
    fn antipode_basis(&self, a: &DIdx) -> Element<DIdx> {
        let m = self.m as i64;
        let d = self.d as i64;
        let head = match a.sector {
            DSector::Y => {
                let s_y = {
                    let mut e = Element::zero();
                    self.y_monomial(
                        &mut e,
                        self.gamma.inv().expect("gamma nonzero").neg(),
                        0,
                        -1,
                        1,
                    );
                    e
                };
                let mut acc = self.unit_elem();
                for _ in 0..a.l {
                    acc = lin_mul(self, &acc, &s_y);
                }
                acc
            }
            DSector::U => {
                let l = a.l as i64;
                let mut c = self
                    .xi
                    .pow_int(-l)
                    .expect("xi nonzero")
                    .mul(&self.gamma.pow_int(-l * (l + 1) / 2).expect("gamma nonzero"));
                if l % 2 == 1 {
                    c = c.neg();
                }
                // 3(1-m)d/2 is an integer: (1-m)d is even by parity.
                let x_exp = l * d + 3 * (1 - m) * d / 2;
                Element::monomial(self.idx(DSector::U, x_exp, m - l - 1, l), c)
            }
        };
        let g_part = Element::monomial(
            DIdx {
                sector: DSector::Y,
                i: 0,
                j: -a.j,
                l: 0,
            },
            self.ctx.one(),
        );
        let x_part = Element::monomial(self.idx(DSector::Y, -(a.i as i64), 0, 0), self.ctx.one());
        lin_mul(self, &lin_mul(self, &head, &g_part), &x_part)
    }
}
