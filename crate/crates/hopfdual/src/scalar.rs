//! Exact arithmetic in the cyclotomic-rational fields `Q(zeta_N)`, together
//! with the combinatorial scalars the verification suites lean on: quantum
//! binomials and factorials, alternating Stirling-type sums, and discrete
//! logarithms in root-of-unity groups.
//!
//! Elements are residues modulo the `N`-th cyclotomic polynomial, stored as
//! rational coefficient vectors of length `phi(N)`. Equality and zero tests
//! are exact; there is no floating-point fallback anywhere.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;
use std::sync::Arc;
use thiserror::Error;

/// Exact rational number, reduced with positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("context mismatch: N={0} vs N={1}")]
    ContextMismatch(u64, u64),
    #[error("zero base with negative exponent")]
    ZeroToNegativePower,
    #[error("{0} does not divide the context order {1}")]
    OrderDoesNotDivide(u64, u64),
    #[error("quantum binomial needs k <= l, got l={l}, k={k}")]
    BinomialRange { l: u64, k: u64 },
    #[error("target is not a power of the base in the cyclic group of order {0}")]
    NotInCyclicGroup(u64),
    #[error("cannot parse scalar from {0:?}")]
    Parse(String),
}

/// Euler totient.
pub fn euler_totient(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

fn divisors(n: u64) -> Vec<u64> {
    let mut ds: Vec<u64> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    ds.sort_unstable();
    ds
}

/// Exact division of integer polynomials (low-to-high coefficients).
/// The divisor must be monic and the remainder must vanish.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    assert!(den.last().map(|c| c.is_one()).unwrap_or(false));
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let mut q = vec![BigInt::zero(); rem.len().saturating_sub(dn)];
    for i in (dn..rem.len()).rev() {
        let c = rem[i].clone();
        if c.is_zero() {
            continue;
        }
        let qi = i - dn;
        for (k, dc) in den.iter().enumerate() {
            let t = &c * dc;
            rem[qi + k] -= t;
        }
        q[qi] = c;
    }
    assert!(
        rem.iter().all(|c| c.is_zero()),
        "polynomial division was not exact"
    );
    q
}

/// The `n`-th cyclotomic polynomial, monic with integer coefficients,
/// computed by exact division of `x^n - 1` by all lower `Phi_d`.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    assert!(n >= 1);
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    let mut phi = num;
    for d in divisors(n) {
        if d < n {
            phi = poly_div_exact(&phi, &cyclotomic_polynomial(d));
        }
    }
    phi
}

/// Shared description of the field `Q(zeta_N)`: the order `N` and the
/// minimal polynomial `Phi_N` used for reduction.
#[derive(Debug)]
pub struct CycloContext {
    order: u64,
    /// Monic `Phi_N`, low-to-high, length `degree + 1`.
    modulus: Vec<BigInt>,
    /// Non-leading part of `Phi_N` as rationals, for reduction.
    modulus_low: Vec<Rational>,
    degree: usize,
}

impl CycloContext {
    pub fn new(order: u64) -> Arc<CycloContext> {
        assert!(order >= 1, "cyclotomic order must be positive");
        let modulus = cyclotomic_polynomial(order);
        let degree = modulus.len() - 1;
        assert_eq!(degree as u64, euler_totient(order));
        let modulus_low = modulus[..degree]
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();
        Arc::new(CycloContext {
            order,
            modulus,
            modulus_low,
            degree,
        })
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> &[BigInt] {
        &self.modulus
    }

    fn reduce(self: &Arc<Self>, mut v: Vec<Rational>) -> CycloScalar {
        let deg = self.degree;
        let mut i = v.len();
        while i > deg {
            i -= 1;
            let c = std::mem::replace(&mut v[i], Rational::zero());
            if c.is_zero() {
                continue;
            }
            for (k, m) in self.modulus_low.iter().enumerate() {
                let t = &c * m;
                v[i - deg + k] -= t;
            }
        }
        v.truncate(deg);
        v.resize(deg, Rational::zero());
        CycloScalar {
            ctx: Arc::clone(self),
            coeffs: v,
        }
    }

    pub fn zero(self: &Arc<Self>) -> CycloScalar {
        CycloScalar {
            ctx: Arc::clone(self),
            coeffs: vec![Rational::zero(); self.degree],
        }
    }

    pub fn one(self: &Arc<Self>) -> CycloScalar {
        self.from_rational(Rational::one())
    }

    pub fn from_rational(self: &Arc<Self>, r: Rational) -> CycloScalar {
        let mut v = vec![Rational::zero(); self.degree.max(1)];
        v[0] = r;
        self.reduce(v)
    }

    pub fn from_int(self: &Arc<Self>, n: i64) -> CycloScalar {
        self.from_rational(Rational::from_integer(BigInt::from(n)))
    }

    /// `zeta_N^e` for any integer exponent.
    pub fn zeta_pow(self: &Arc<Self>, e: i64) -> CycloScalar {
        let n = self.order as i64;
        let k = e.rem_euclid(n) as usize;
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = Rational::one();
        self.reduce(v)
    }

    /// A fixed primitive `N`-th root of unity.
    pub fn zeta(self: &Arc<Self>) -> CycloScalar {
        self.zeta_pow(1)
    }

    /// A primitive `m`-th root of unity, namely `zeta_N^(N/m)`; `m` must divide `N`.
    pub fn primitive_root(self: &Arc<Self>, m: u64) -> Result<CycloScalar, ScalarError> {
        if m == 0 || !self.order.is_multiple_of(m) {
            return Err(ScalarError::OrderDoesNotDivide(m, self.order));
        }
        Ok(self.zeta_pow((self.order / m) as i64))
    }
}

/// An element of `Q(zeta_N)` in canonical residue form.
#[derive(Clone)]
pub struct CycloScalar {
    ctx: Arc<CycloContext>,
    coeffs: Vec<Rational>,
}

impl CycloScalar {
    pub fn ctx(&self) -> &Arc<CycloContext> {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// The rational value, if the element lies in the prime field.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn check_ctx(&self, other: &CycloScalar) -> Result<(), ScalarError> {
        if self.ctx.order == other.ctx.order {
            Ok(())
        } else {
            Err(ScalarError::ContextMismatch(
                self.ctx.order,
                other.ctx.order,
            ))
        }
    }

    pub fn add(&self, other: &CycloScalar) -> CycloScalar {
        self.check_ctx(other).expect("context mismatch in add");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        CycloScalar {
            ctx: Arc::clone(&self.ctx),
            coeffs,
        }
    }

    pub fn sub(&self, other: &CycloScalar) -> CycloScalar {
        self.check_ctx(other).expect("context mismatch in sub");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        CycloScalar {
            ctx: Arc::clone(&self.ctx),
            coeffs,
        }
    }

    pub fn neg(&self) -> CycloScalar {
        let coeffs = self.coeffs.iter().map(|a| -a).collect();
        CycloScalar {
            ctx: Arc::clone(&self.ctx),
            coeffs,
        }
    }

    pub fn mul(&self, other: &CycloScalar) -> CycloScalar {
        self.check_ctx(other).expect("context mismatch in mul");
        let deg = self.ctx.degree;
        if deg == 0 {
            return self.ctx.zero();
        }
        let mut conv = vec![Rational::zero(); 2 * deg - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                conv[i + j] += a * b;
            }
        }
        self.ctx.reduce(conv)
    }

    pub fn scale(&self, r: &Rational) -> CycloScalar {
        let coeffs = self.coeffs.iter().map(|a| a * r).collect();
        CycloScalar {
            ctx: Arc::clone(&self.ctx),
            coeffs,
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in `Q[x]`.
    pub fn inv(&self) -> Result<CycloScalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let phi: Vec<Rational> = self
            .ctx
            .modulus
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();
        let mut r0 = phi;
        let mut r1 = trim(self.coeffs.clone());
        let mut t0 = vec![Rational::zero()];
        let mut t1 = vec![Rational::one()];
        while poly_deg(&r1) > 0 {
            let (q, rem) = poly_divmod(&r0, &r1);
            r0 = r1;
            r1 = rem;
            let t2 = poly_sub(&t0, &poly_mul(&q, &t1));
            t0 = t1;
            t1 = t2;
        }
        // Phi_N is irreducible, so the gcd with a nonzero residue is a constant.
        let c = r1.first().cloned().unwrap_or_else(Rational::zero);
        if c.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let inv_c = Rational::one() / c;
        let coeffs = t1.into_iter().map(|t| t * &inv_c).collect();
        Ok(self.ctx.reduce(coeffs))
    }

    pub fn div(&self, other: &CycloScalar) -> Result<CycloScalar, ScalarError> {
        self.check_ctx(other)?;
        Ok(self.mul(&other.inv()?))
    }

    /// Integer power with the `0^0 = 1` convention; negative exponents
    /// require a nonzero base.
    pub fn pow_int(&self, e: i64) -> Result<CycloScalar, ScalarError> {
        if e == 0 {
            return Ok(self.ctx.one());
        }
        if e < 0 {
            if self.is_zero() {
                return Err(ScalarError::ZeroToNegativePower);
            }
            return self.inv()?.pow_int(-e);
        }
        let mut base = self.clone();
        let mut acc = self.ctx.one();
        let mut k = e as u64;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        Ok(acc)
    }

    /// True when `self^m = 1` and no smaller positive power is 1.
    pub fn is_primitive_root(&self, m: u64) -> bool {
        if m == 0 {
            return false;
        }
        let mut p = self.ctx.one();
        for t in 1..=m {
            p = p.mul(self);
            if p.is_one() {
                return t == m;
            }
        }
        false
    }

    /// Exact serialization, e.g. `N=6;[1/2,0]`.
    pub fn exact_string(&self) -> String {
        let body: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        format!("N={};[{}]", self.ctx.order, body.join(","))
    }

    /// Parse the `N=..;[..]` form against a context of matching order.
    pub fn from_exact_string(ctx: &Arc<CycloContext>, s: &str) -> Result<CycloScalar, ScalarError> {
        let rest = s
            .strip_prefix("N=")
            .ok_or_else(|| ScalarError::Parse(s.to_string()))?;
        let (order, body) = rest
            .split_once(";[")
            .ok_or_else(|| ScalarError::Parse(s.to_string()))?;
        let order: u64 = order
            .parse()
            .map_err(|_| ScalarError::Parse(s.to_string()))?;
        if order != ctx.order() {
            return Err(ScalarError::ContextMismatch(order, ctx.order()));
        }
        let body = body
            .strip_suffix(']')
            .ok_or_else(|| ScalarError::Parse(s.to_string()))?;
        let mut coeffs = Vec::new();
        if !body.is_empty() {
            for part in body.split(',') {
                let r = Rational::from_str(part.trim())
                    .map_err(|_| ScalarError::Parse(s.to_string()))?;
                coeffs.push(r);
            }
        }
        if coeffs.len() > ctx.degree() {
            return Err(ScalarError::Parse(s.to_string()));
        }
        coeffs.resize(ctx.degree(), Rational::zero());
        Ok(CycloScalar {
            ctx: Arc::clone(ctx),
            coeffs,
        })
    }
}

impl PartialEq for CycloScalar {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.order == other.ctx.order && self.coeffs == other.coeffs
    }
}
impl Eq for CycloScalar {}

impl PartialOrd for CycloScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CycloScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ctx
            .order
            .cmp(&other.ctx.order)
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl Hash for CycloScalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ctx.order.hash(state);
        self.coeffs.hash(state);
    }
}

impl fmt::Debug for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.exact_string())
    }
}

impl fmt::Display for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.exact_string())
    }
}

impl std::ops::Add for &CycloScalar {
    type Output = CycloScalar;
    fn add(self, rhs: &CycloScalar) -> CycloScalar {
        CycloScalar::add(self, rhs)
    }
}
impl std::ops::Sub for &CycloScalar {
    type Output = CycloScalar;
    fn sub(self, rhs: &CycloScalar) -> CycloScalar {
        CycloScalar::sub(self, rhs)
    }
}
impl std::ops::Mul for &CycloScalar {
    type Output = CycloScalar;
    fn mul(self, rhs: &CycloScalar) -> CycloScalar {
        CycloScalar::mul(self, rhs)
    }
}
impl std::ops::Neg for &CycloScalar {
    type Output = CycloScalar;
    fn neg(self) -> CycloScalar {
        CycloScalar::neg(self)
    }
}

fn trim(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.len() > 1 && v.last().map(|c| c.is_zero()).unwrap_or(false) {
        v.pop();
    }
    v
}

fn poly_deg(v: &[Rational]) -> usize {
    let mut d = 0;
    for (i, c) in v.iter().enumerate() {
        if !c.is_zero() {
            d = i;
        }
    }
    d
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out = vec![Rational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

fn poly_divmod(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let dd = poly_deg(den);
    let lead = den[dd].clone();
    assert!(!lead.is_zero());
    let mut rem = num.to_vec();
    let nd = poly_deg(&rem);
    if nd < dd || (rem.len() == 1 && rem[0].is_zero()) {
        return (vec![Rational::zero()], trim(rem));
    }
    let mut q = vec![Rational::zero(); nd - dd + 1];
    for i in (dd..=nd).rev() {
        let c = rem[i].clone();
        if c.is_zero() {
            continue;
        }
        let f = c / &lead;
        let qi = i - dd;
        for (k, dc) in den.iter().enumerate().take(dd + 1) {
            let t = &f * dc;
            rem[qi + k] -= t;
        }
        q[qi] = f;
    }
    (trim(q), trim(rem))
}

/// The four field operations with explicit error reporting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn field_op(a: &CycloScalar, b: &CycloScalar, op: FieldOp) -> Result<CycloScalar, ScalarError> {
    a.check_ctx(b)?;
    match op {
        FieldOp::Add => Ok(a.add(b)),
        FieldOp::Sub => Ok(a.sub(b)),
        FieldOp::Mul => Ok(a.mul(b)),
        FieldOp::Div => a.div(b),
    }
}

/// Quantum integer `t_q = 1 + q + ... + q^{t-1}`.
pub fn q_int(t: u64, q: &CycloScalar) -> CycloScalar {
    let mut acc = q.ctx().zero();
    let mut p = q.ctx().one();
    for _ in 0..t {
        acc = acc.add(&p);
        p = p.mul(q);
    }
    acc
}

/// Quantum factorial `l!_q`.
pub fn q_factorial(l: u64, q: &CycloScalar) -> CycloScalar {
    let mut acc = q.ctx().one();
    for t in 1..=l {
        acc = acc.mul(&q_int(t, q));
    }
    acc
}

/// Gaussian binomial coefficient evaluated at `q`, by the q-Pascal
/// recursion. This stays well-defined when `q` is a root of unity and the
/// factorial quotient would read `0/0`.
pub fn q_binomial(l: u64, k: u64, q: &CycloScalar) -> Result<CycloScalar, ScalarError> {
    if k > l {
        return Err(ScalarError::BinomialRange { l, k });
    }
    let ctx = q.ctx();
    let mut row = vec![ctx.one()];
    for i in 1..=l {
        let mut next = Vec::with_capacity(i as usize + 1);
        next.push(ctx.one());
        // C(i, j)_q = C(i-1, j-1)_q + q^j * C(i-1, j)_q
        let mut qj = q.clone();
        for j in 1..i {
            let t = row[j as usize].mul(&qj);
            next.push(row[j as usize - 1].add(&t));
            qj = qj.mul(q);
        }
        next.push(ctx.one());
        row = next;
    }
    Ok(row[k as usize].clone())
}

/// Ordinary binomial coefficient as a big integer.
pub fn binomial_big(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for t in 0..k {
        acc = acc * BigInt::from(n - t) / BigInt::from(t + 1);
    }
    acc
}

pub fn factorial_big(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for t in 2..=n {
        acc *= BigInt::from(t);
    }
    acc
}

/// Rational power with the `0^0 = 1` convention.
pub fn rat_pow(r: &Rational, e: u64) -> Rational {
    if e == 0 {
        return Rational::one();
    }
    let mut acc = Rational::one();
    let mut base = r.clone();
    let mut k = e;
    while k > 0 {
        if k & 1 == 1 {
            acc *= &base;
        }
        k >>= 1;
        if k > 0 {
            base = &base * &base;
        }
    }
    acc
}

/// `sum_{t=0}^{r} C(r,t) (-1)^{r-t} t^s`, with `0^0 = 1`. Vanishes whenever
/// `0 <= s < r`, and equals `r!` at `s = r`.
pub fn stirling_partial(r: u64, s: u64) -> Rational {
    let mut acc = BigInt::zero();
    for t in 0..=r {
        let mut term = binomial_big(r, t);
        if (r - t) % 2 == 1 {
            term = -term;
        }
        let tp = if s == 0 {
            BigInt::one()
        } else {
            let mut p = BigInt::one();
            for _ in 0..s {
                p *= BigInt::from(t);
            }
            p
        };
        acc += term * tp;
    }
    Rational::from_integer(acc)
}

/// Least `k` in `0..order` with `base^k = target`.
pub fn discrete_log(
    base: &CycloScalar,
    target: &CycloScalar,
    order: u64,
) -> Result<u64, ScalarError> {
    let mut p = base.ctx().one();
    for k in 0..order {
        if &p == target {
            return Ok(k);
        }
        p = p.mul(base);
    }
    Err(ScalarError::NotInCyclicGroup(order))
}

/// Parse scalars in the forms accepted on the command line: a rational
/// (`-3/2`), a root of unity `zetaM^t` (with `M` dividing `N`), a product
/// `<rational>*zetaM^t`, or the exact `N=..;[..]` serialization.
pub fn parse_scalar(ctx: &Arc<CycloContext>, input: &str) -> Result<CycloScalar, ScalarError> {
    let s = input.trim();
    if s.starts_with("N=") {
        return CycloScalar::from_exact_string(ctx, s);
    }
    let (rat_part, zeta_part) = match s.split_once('*') {
        Some((a, b)) => (Some(a.trim()), Some(b.trim())),
        None => {
            if s.starts_with("zeta") {
                (None, Some(s))
            } else {
                (Some(s), None)
            }
        }
    };
    let mut value = ctx.one();
    if let Some(r) = rat_part {
        let r = Rational::from_str(r).map_err(|_| ScalarError::Parse(input.to_string()))?;
        value = ctx.from_rational(r);
    }
    if let Some(z) = zeta_part {
        let body = z
            .strip_prefix("zeta")
            .ok_or_else(|| ScalarError::Parse(input.to_string()))?;
        let (m_str, t_str) = match body.split_once('^') {
            Some((m, t)) => (m, t),
            None => (body, "1"),
        };
        let m: u64 = m_str
            .parse()
            .map_err(|_| ScalarError::Parse(input.to_string()))?;
        let t: i64 = t_str
            .parse()
            .map_err(|_| ScalarError::Parse(input.to_string()))?;
        let root = ctx.primitive_root(m)?;
        value = value.mul(&root.pow_int(t)?);
    }
    Ok(value)
}

/// Orders of the roots of unity mentioned in a scalar sample string; used to
/// size the ambient field before the context exists.
pub fn mentioned_root_orders(input: &str) -> Vec<u64> {
    let mut orders = Vec::new();
    for piece in input.split(['*', ',']) {
        let piece = piece.trim();
        if let Some(body) = piece.strip_prefix("zeta") {
            let m_str = body.split('^').next().unwrap_or("");
            if let Ok(m) = m_str.parse::<u64>() {
                orders.push(m);
            }
        }
    }
    orders
}

pub fn rational_from_str(s: &str) -> Result<Rational, ScalarError> {
    Rational::from_str(s.trim()).map_err(|_| ScalarError::Parse(s.to_string()))
}

/// Convenience: integer `n` as a `BigInt`-backed rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Convenience: the rational `p/q`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// lcm of a list of positive integers.
pub fn lcm_all(values: impl IntoIterator<Item = u64>) -> u64 {
    values.into_iter().fold(1u64, |a, b| a.lcm(&b))
}

/// Smallest nonnegative residue of `e` modulo `n`, for indices.
pub fn umod(e: i64, n: u64) -> u64 {
    (e.rem_euclid(n as i64)) as u64
}

/// Floor division quotient paired with `umod`.
pub fn fdiv(e: i64, n: u64) -> i64 {
    e.div_euclid(n as i64)
}

/// `i/den` as a rational, for exponent bookkeeping.
pub fn frac_of(i: i64, den: u64) -> Rational {
    Rational::new(BigInt::from(i), BigInt::from(den))
}

impl CycloContext {
    /// Embed a rational into the field; alias used in builder code.
    pub fn scalar(self: &Arc<Self>, r: Rational) -> CycloScalar {
        self.from_rational(r)
    }
}

pub fn to_u64(r: &Rational) -> Option<u64> {
    if r.denom().is_one() && !r.numer().is_negative() {
        r.numer().to_u64()
    } else {
        None
    }
}
