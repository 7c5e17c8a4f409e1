//! Finite-support linear combinations over an abstract monomial basis, the
//! Hopf-structure contract every family implements (basis-level product,
//! coproduct, counit, antipode), linear extensions, and the exhaustive
//! axiom checkers run at a truncation.

use crate::report::Report;
use crate::scalar::{CycloContext, CycloScalar};
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;
use std::sync::Arc;

/// Index of a normal-form basis monomial. The ordering is total and stable,
/// which makes serialized elements canonical.
pub trait BasisIndex:
    Clone + Ord + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static
{
}
impl<T> BasisIndex for T where
    T: Clone + Ord + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static
{
}

/// Finite linear combination of basis monomials; no zero coefficients are
/// ever stored, so equality is structural.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Element<B: BasisIndex> {
    terms: BTreeMap<B, CycloScalar>,
}

impl<B: BasisIndex> Element<B> {
    pub fn zero() -> Self {
        Element {
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(b: B, c: CycloScalar) -> Self {
        let mut e = Element::zero();
        e.add_term(b, c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&B, &CycloScalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, b: &B) -> Option<&CycloScalar> {
        self.terms.get(b)
    }

    pub fn add_term(&mut self, b: B, c: CycloScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(b) {
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

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (b, c) in other.iter() {
            out.add_term(b.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (b, c) in other.iter() {
            out.add_term(b.clone(), c.neg());
        }
        out
    }

    pub fn scale(&self, c: &CycloScalar) -> Self {
        if c.is_zero() {
            return Element::zero();
        }
        let mut out = Element::zero();
        for (b, v) in self.iter() {
            out.add_term(b.clone(), v.mul(c));
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = Element::zero();
        for (b, v) in self.iter() {
            out.add_term(b.clone(), v.neg());
        }
        out
    }
}

impl<B: BasisIndex> fmt::Display for Element<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (b, c) in self.terms.iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({}) {}", c.exact_string(), b)?;
        }
        Ok(())
    }
}

/// Finite linear combination over pairs of basis monomials.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tensor2<B: BasisIndex> {
    terms: BTreeMap<(B, B), CycloScalar>,
}

impl<B: BasisIndex> Tensor2<B> {
    pub fn zero() -> Self {
        Tensor2 {
            terms: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(B, B), &CycloScalar)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, b: (B, B), c: CycloScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(b) {
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

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (b, c) in other.iter() {
            out.add_term(b.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &CycloScalar) -> Self {
        if c.is_zero() {
            return Tensor2::zero();
        }
        let mut out = Tensor2::zero();
        for (b, v) in self.iter() {
            out.add_term(b.clone(), v.mul(c));
        }
        out
    }

    pub fn simple(a: B, b: B, c: CycloScalar) -> Self {
        let mut t = Tensor2::zero();
        t.add_term((a, b), c);
        t
    }
}

/// The structure maps of a Hopf algebra, given on basis monomials; linear
/// extension is provided by the `lin_*` helpers below. All maps must return
/// canonical elements over the declared basis.
pub trait HopfAlgebra: Send + Sync {
    type Idx: BasisIndex;

    fn ctx(&self) -> &Arc<CycloContext>;
    /// The unit is a single basis monomial in every family here.
    fn unit_idx(&self) -> Self::Idx;
    fn mul_basis(&self, a: &Self::Idx, b: &Self::Idx) -> Element<Self::Idx>;
    fn comul_basis(&self, a: &Self::Idx) -> Tensor2<Self::Idx>;
    fn counit_basis(&self, a: &Self::Idx) -> CycloScalar;
    fn antipode_basis(&self, a: &Self::Idx) -> Element<Self::Idx>;

    fn unit_elem(&self) -> Element<Self::Idx> {
        Element::monomial(self.unit_idx(), self.ctx().one())
    }
}

/// Bilinear extension of the basis product.
pub fn lin_mul<H: HopfAlgebra>(h: &H, u: &Element<H::Idx>, v: &Element<H::Idx>) -> Element<H::Idx> {
    let mut out = Element::zero();
    for (a, ca) in u.iter() {
        for (b, cb) in v.iter() {
            let c = ca.mul(cb);
            for (m, cm) in h.mul_basis(a, b).iter() {
                out.add_term(m.clone(), cm.mul(&c));
            }
        }
    }
    out
}

/// Linear extension of the coproduct.
pub fn lin_comul<H: HopfAlgebra>(h: &H, u: &Element<H::Idx>) -> Tensor2<H::Idx> {
    let mut out = Tensor2::zero();
    for (a, ca) in u.iter() {
        for (pair, c) in h.comul_basis(a).iter() {
            out.add_term(pair.clone(), c.mul(ca));
        }
    }
    out
}

/// Linear extension of the antipode.
pub fn lin_antipode<H: HopfAlgebra>(h: &H, u: &Element<H::Idx>) -> Element<H::Idx> {
    let mut out = Element::zero();
    for (a, ca) in u.iter() {
        for (m, cm) in h.antipode_basis(a).iter() {
            out.add_term(m.clone(), cm.mul(ca));
        }
    }
    out
}

pub fn lin_counit<H: HopfAlgebra>(h: &H, u: &Element<H::Idx>) -> CycloScalar {
    let mut acc = h.ctx().zero();
    for (a, ca) in u.iter() {
        acc = acc.add(&h.counit_basis(a).mul(ca));
    }
    acc
}

/// Componentwise product on the tensor square: `(a (x) b)(c (x) d) = ac (x) bd`.
pub fn tensor_mul<H: HopfAlgebra>(
    h: &H,
    s: &Tensor2<H::Idx>,
    t: &Tensor2<H::Idx>,
) -> Tensor2<H::Idx> {
    let mut out = Tensor2::zero();
    for ((a1, a2), ca) in s.iter() {
        for ((b1, b2), cb) in t.iter() {
            let c = ca.mul(cb);
            for (l, cl) in h.mul_basis(a1, b1).iter() {
                for (r, cr) in h.mul_basis(a2, b2).iter() {
                    out.add_term((l.clone(), r.clone()), cl.mul(cr).mul(&c));
                }
            }
        }
    }
    out
}

type Tensor3Map<B> = BTreeMap<(B, B, B), CycloScalar>;

fn tensor3_add<B: BasisIndex>(map: &mut Tensor3Map<B>, key: (B, B, B), c: CycloScalar) {
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

/// `(Delta (x) id) Delta(b)` and `(id (x) Delta) Delta(b)` as three-leg maps.
pub fn coassociativity_sides<H: HopfAlgebra>(
    h: &H,
    b: &H::Idx,
) -> (Tensor3Map<H::Idx>, Tensor3Map<H::Idx>) {
    let d = h.comul_basis(b);
    let mut left = BTreeMap::new();
    let mut right = BTreeMap::new();
    for ((u, v), c) in d.iter() {
        for ((u1, u2), cu) in h.comul_basis(u).iter() {
            tensor3_add(&mut left, (u1.clone(), u2.clone(), v.clone()), cu.mul(c));
        }
        for ((v1, v2), cv) in h.comul_basis(v).iter() {
            tensor3_add(&mut right, (u.clone(), v1.clone(), v2.clone()), cv.mul(c));
        }
    }
    (left, right)
}

fn check_basis_element<H: HopfAlgebra>(h: &H, b: &H::Idx) -> Vec<String> {
    let mut failures = Vec::new();
    let ctx = h.ctx();

    let (l, r) = coassociativity_sides(h, b);
    if l != r {
        failures.push(format!("coassociativity fails at {b}"));
    }

    let d = h.comul_basis(b);
    let mut eps_id = Element::zero();
    let mut id_eps = Element::zero();
    for ((u, v), c) in d.iter() {
        eps_id.add_term(v.clone(), h.counit_basis(u).mul(c));
        id_eps.add_term(u.clone(), h.counit_basis(v).mul(c));
    }
    let expect = Element::monomial(b.clone(), ctx.one());
    if eps_id != expect {
        failures.push(format!("left counit law fails at {b}"));
    }
    if id_eps != expect {
        failures.push(format!("right counit law fails at {b}"));
    }

    let target = h.unit_elem().scale(&h.counit_basis(b));
    let mut s_id = Element::zero();
    let mut id_s = Element::zero();
    for ((u, v), c) in d.iter() {
        let su = lin_antipode(h, &Element::monomial(u.clone(), c.clone()));
        s_id = s_id.add(&lin_mul(h, &su, &Element::monomial(v.clone(), ctx.one())));
        let sv = lin_antipode(h, &Element::monomial(v.clone(), c.clone()));
        id_s = id_s.add(&lin_mul(h, &Element::monomial(u.clone(), ctx.one()), &sv));
    }
    if s_id != target {
        failures.push(format!("antipode law m(S (x) id)Delta fails at {b}"));
    }
    if id_s != target {
        failures.push(format!("antipode law m(id (x) S)Delta fails at {b}"));
    }
    failures
}

fn check_basis_pair<H: HopfAlgebra>(h: &H, a: &H::Idx, b: &H::Idx) -> Vec<String> {
    let mut failures = Vec::new();
    let prod = h.mul_basis(a, b);
    let lhs = lin_comul(h, &prod);
    let rhs = tensor_mul(h, &h.comul_basis(a), &h.comul_basis(b));
    if lhs != rhs {
        failures.push(format!("Delta is not multiplicative at ({a}, {b})"));
    }
    let eps_prod = lin_counit(h, &prod);
    if eps_prod != h.counit_basis(a).mul(&h.counit_basis(b)) {
        failures.push(format!("counit is not multiplicative at ({a}, {b})"));
    }
    failures
}

/// Exhaustively check coassociativity, the counit laws, both antipode laws,
/// multiplicativity of the coproduct, and multiplicativity of the counit on
/// the given basis slice and pair list.
pub fn verify_hopf_axioms<H: HopfAlgebra>(
    h: &H,
    family: &str,
    params: &str,
    basis: &[H::Idx],
    pairs: &[(H::Idx, H::Idx)],
) -> Report {
    let mut report = Report::new("hopf-axioms", family, params);

    let per_elem: Vec<Vec<String>> = basis
        .par_iter()
        .map(|b| check_basis_element(h, b))
        .collect();
    for fails in per_elem {
        // five axiom checks per element
        report.absorb(5, fails);
    }

    let per_pair: Vec<Vec<String>> = pairs
        .par_iter()
        .map(|(a, b)| check_basis_pair(h, a, b))
        .collect();
    for fails in per_pair {
        report.absorb(2, fails);
    }
    report
}

/// Exhaustive associativity of the basis product over all triples from the
/// slice. Pairwise products are cached; triples run in parallel.
pub fn verify_associativity<H: HopfAlgebra>(
    h: &H,
    family: &str,
    params: &str,
    basis: &[H::Idx],
) -> Report {
    let mut report = Report::new("associativity", family, params);
    let n = basis.len();
    let products: Vec<Element<H::Idx>> = (0..n * n)
        .into_par_iter()
        .map(|t| h.mul_basis(&basis[t / n], &basis[t % n]))
        .collect();
    let results: Vec<Option<String>> = (0..n * n * n)
        .into_par_iter()
        .map(|t| {
            let (i, j, k) = (t / (n * n), (t / n) % n, t % n);
            let left = lin_mul(
                h,
                &products[i * n + j],
                &Element::monomial(basis[k].clone(), h.ctx().one()),
            );
            let right = lin_mul(
                h,
                &Element::monomial(basis[i].clone(), h.ctx().one()),
                &products[j * n + k],
            );
            if left == right {
                None
            } else {
                Some(format!(
                    "associativity fails at ({}, {}, {})",
                    basis[i], basis[j], basis[k]
                ))
            }
        })
        .collect();
    let failures: Vec<String> = results.into_iter().flatten().collect();
    report.absorb((n * n * n) as u64, failures);
    report
}

impl<B: BasisIndex> fmt::Display for Tensor2<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((a, b), c) in self.terms.iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({}) {} (x) {}", c.exact_string(), a, b)?;
        }
        Ok(())
    }
}
