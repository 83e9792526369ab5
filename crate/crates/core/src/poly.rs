//! Multivariate polynomials over an exact field, with a fixed monomial order.
//!
//! A `Polynomial` stores its terms strictly descending in the ring's order,
//! with no zero coefficients and no duplicate monomials. Every value holds an
//! `Arc` to its ring; binary operations panic on a ring mismatch.

use crate::monomial::{Monomial, MonomialOrder};
use crate::scalar::Field;
use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RingError {
    #[error("variable names must be unique and nonempty")]
    BadVariables,
    #[error("at most {max} variables are supported, got {got}")]
    TooManyVariables { max: usize, got: usize },
}

/// Independent-set dimension search enumerates all variable subsets, so cap
/// the arity at desk scale.
pub const MAX_VARIABLES: usize = 12;

/// A polynomial ring: named variables over a field, with a monomial order.
#[derive(Debug)]
pub struct PolyRing<F: Field> {
    field: F,
    vars: Vec<String>,
    order: MonomialOrder,
}

impl<F: Field> PartialEq for PolyRing<F> {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.vars == other.vars && self.order == other.order
    }
}
impl<F: Field> Eq for PolyRing<F> {}

impl<F: Field> PolyRing<F> {
    pub fn new<S: Into<String>>(
        field: F,
        vars: Vec<S>,
        order: MonomialOrder,
    ) -> Result<Arc<Self>, RingError> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        if vars.len() > MAX_VARIABLES {
            return Err(RingError::TooManyVariables {
                max: MAX_VARIABLES,
                got: vars.len(),
            });
        }
        for (i, v) in vars.iter().enumerate() {
            if v.is_empty() || vars[..i].contains(v) {
                return Err(RingError::BadVariables);
            }
        }
        Ok(Arc::new(PolyRing { field, vars, order }))
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn vars(&self) -> &[String] {
        &self.vars
    }
    pub fn arity(&self) -> usize {
        self.vars.len()
    }
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// The same ring under a different monomial order.
    pub fn with_order(self: &Arc<Self>, order: MonomialOrder) -> Arc<Self> {
        if order == self.order {
            return Arc::clone(self);
        }
        Arc::new(PolyRing {
            field: self.field.clone(),
            vars: self.vars.clone(),
            order,
        })
    }

    pub fn zero(self: &Arc<Self>) -> Polynomial<F> {
        Polynomial {
            ring: Arc::clone(self),
            terms: Vec::new(),
        }
    }

    pub fn one(self: &Arc<Self>) -> Polynomial<F> {
        self.constant(self.field.one())
    }

    pub fn constant(self: &Arc<Self>, c: F::Elem) -> Polynomial<F> {
        if self.field.is_zero(&c) {
            return self.zero();
        }
        Polynomial {
            ring: Arc::clone(self),
            terms: vec![(Monomial::one(self.arity()), c)],
        }
    }

    pub fn var(self: &Arc<Self>, index: usize) -> Polynomial<F> {
        Polynomial {
            ring: Arc::clone(self),
            terms: vec![(Monomial::var(self.arity(), index), self.field.one())],
        }
    }

    pub fn monomial(self: &Arc<Self>, m: Monomial, c: F::Elem) -> Polynomial<F> {
        assert_eq!(m.arity(), self.arity(), "monomial arity mismatch");
        if self.field.is_zero(&c) {
            return self.zero();
        }
        Polynomial {
            ring: Arc::clone(self),
            terms: vec![(m, c)],
        }
    }

    /// Build a polynomial from arbitrary terms: sorts, merges duplicates and
    /// drops zeros.
    pub fn from_terms(self: &Arc<Self>, mut terms: Vec<(Monomial, F::Elem)>) -> Polynomial<F> {
        let order = self.order;
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut merged: Vec<(Monomial, F::Elem)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            debug_assert_eq!(m.arity(), self.arity());
            match merged.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = self.field.add(lc, &c),
                _ => merged.push((m, c)),
            }
        }
        merged.retain(|(_, c)| !self.field.is_zero(c));
        Polynomial {
            ring: Arc::clone(self),
            terms: merged,
        }
    }

    pub fn parse(self: &Arc<Self>, text: &str) -> Result<Polynomial<F>, crate::parse::ParseError> {
        crate::parse::parse_polynomial(text, self)
    }
}

/// An exact multivariate polynomial; immutable after construction.
#[derive(Clone)]
pub struct Polynomial<F: Field> {
    ring: Arc<PolyRing<F>>,
    terms: Vec<(Monomial, F::Elem)>,
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        self.same_ring(other) && self.terms == other.terms
    }
}
impl<F: Field> Eq for Polynomial<F> {}

impl<F: Field> Polynomial<F> {
    pub fn ring(&self) -> &Arc<PolyRing<F>> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    /// Single-term polynomial?
    pub fn is_term(&self) -> bool {
        self.terms.len() == 1
    }

    /// A single variable with coefficient?
    pub fn as_variable(&self) -> Option<usize> {
        if self.terms.len() == 1 && self.terms[0].0.total_degree() == 1 {
            self.terms[0].0.support().next()
        } else {
            None
        }
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &F::Elem)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.total_degree())
            .max()
            .unwrap_or(0)
    }

    fn same_ring(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring
    }

    fn check_ring(&self, other: &Self) {
        assert!(self.same_ring(other), "ring mismatch between operands");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_ring(other);
        let field = self.ring.field();
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match order.cmp(&self.terms[i].0, &other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = field.add(&self.terms[i].1, &other.terms[j].1);
                    if !field.is_zero(&c) {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: out,
        }
    }

    pub fn neg(&self) -> Self {
        let field = self.ring.field();
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), field.neg(c)))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_ring(other);
        let field = self.ring.field();
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                terms.push((m1.mul(m2), field.mul(c1, c2)));
            }
        }
        self.ring.from_terms(terms)
    }

    pub fn scalar_mul(&self, c: &F::Elem) -> Self {
        let field = self.ring.field();
        if field.is_zero(c) {
            return self.ring.zero();
        }
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), field.mul(k, c)))
                .collect(),
        }
    }

    /// Multiply by the term `c * m`. Order-preserving, so no re-sort.
    pub fn mul_term(&self, m: &Monomial, c: &F::Elem) -> Self {
        let field = self.ring.field();
        if field.is_zero(c) {
            return self.ring.zero();
        }
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: self
                .terms
                .iter()
                .map(|(tm, tc)| (tm.mul(m), field.mul(tc, c)))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = self.ring.one();
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// gcd of the term monomials; the unit monomial for zero.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter().map(|(m, _)| m);
        match it.next() {
            None => Monomial::one(self.ring.arity()),
            Some(first) => it.fold(first.clone(), |acc, m| acc.gcd(m)),
        }
    }

    /// Divide out a monomial that divides every term.
    pub fn div_monomial(&self, m: &Monomial) -> Self {
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: self
                .terms
                .iter()
                .map(|(tm, tc)| {
                    (
                        m.try_div_into(tm).expect("monomial does not divide term"),
                        tc.clone(),
                    )
                })
                .collect(),
        }
    }

    pub fn make_monic(&self) -> Self {
        match self.leading_term() {
            None => self.clone(),
            Some((_, lc)) => {
                if self.ring.field().is_one(lc) {
                    self.clone()
                } else {
                    let inv = self.ring.field().inv(lc);
                    self.scalar_mul(&inv)
                }
            }
        }
    }

    /// Canonical content normalization (primitive over Q, monic over F_p).
    pub fn normalize_content(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs: Vec<F::Elem> = self.terms.iter().map(|(_, c)| c.clone()).collect();
        self.ring.field().normalize_content(&mut coeffs);
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: self
                .terms
                .iter()
                .zip(coeffs)
                .map(|((m, _), c)| (m.clone(), c))
                .collect(),
        }
    }

    /// Build from terms already strictly descending in the ring's order.
    pub(crate) fn from_sorted_terms(
        ring: &Arc<PolyRing<F>>,
        terms: Vec<(Monomial, F::Elem)>,
    ) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.order().cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !ring.field().is_zero(c)));
        Polynomial {
            ring: Arc::clone(ring),
            terms,
        }
    }

    /// Drop the leading term (used by division).
    pub(crate) fn tail(&self) -> Self {
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: self.terms[1..].to_vec(),
        }
    }

    /// Image under the ring map sending variable `i` to `images[i]`.
    pub fn substitute(&self, target: &Arc<PolyRing<F>>, images: &[Polynomial<F>]) -> Polynomial<F> {
        assert_eq!(images.len(), self.ring.arity());
        let mut acc = target.zero();
        for (m, c) in &self.terms {
            let mut term = target.constant(c.clone());
            for (i, img) in images.iter().enumerate() {
                let e = m.exp(i);
                if e > 0 {
                    term = term.mul(&img.pow(e));
                }
            }
            acc = acc.add(&term);
        }
        acc
    }

    /// Move this polynomial into a ring with the same variables but another
    /// order (terms are re-sorted).
    pub fn reorder(&self, target: &Arc<PolyRing<F>>) -> Polynomial<F> {
        assert_eq!(self.ring.vars(), target.vars());
        assert_eq!(self.ring.field(), target.field());
        target.from_terms(self.terms.clone())
    }

    /// Map into a ring whose variable list is a permutation/superset given by
    /// `var_map`: variable `i` here becomes `var_map[i]` there.
    pub fn map_variables(&self, target: &Arc<PolyRing<F>>, var_map: &[usize]) -> Polynomial<F> {
        assert_eq!(var_map.len(), self.ring.arity());
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = vec![0u32; target.arity()];
                for (i, &j) in var_map.iter().enumerate() {
                    exps[j] = m.exp(i);
                }
                (Monomial::new(exps), c.clone())
            })
            .collect();
        target.from_terms(terms)
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.ring.field();
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = field.is_negative(c);
            let abs = if neg { field.neg(c) } else { c.clone() };
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coeff_is_one = field.is_one(&abs);
            if m.is_one() {
                write!(f, "{}", field.render(&abs))?;
                continue;
            }
            if !coeff_is_one {
                write!(f, "{}*", field.render(&abs))?;
            }
            let mut first = true;
            for i in m.support() {
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                let e = m.exp(i);
                if e == 1 {
                    write!(f, "{}", self.ring.vars()[i])?;
                } else {
                    write!(f, "{}^{}", self.ring.vars()[i], e)?;
                }
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

macro_rules! bin_op {
    ($trait:ident, $method:ident, $imp:ident) => {
        impl<F: Field> std::ops::$trait<&Polynomial<F>> for &Polynomial<F> {
            type Output = Polynomial<F>;
            fn $method(self, rhs: &Polynomial<F>) -> Polynomial<F> {
                self.$imp(rhs)
            }
        }
    };
}
bin_op!(Add, add, add);
bin_op!(Sub, sub, sub);
bin_op!(Mul, mul, mul);

impl<F: Field> std::ops::Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        Polynomial::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{PrimeField, Rationals};

    fn qring() -> Arc<PolyRing<Rationals>> {
        PolyRing::new(Rationals, vec!["x", "y", "z"], MonomialOrder::GrevLex).unwrap()
    }

    #[test]
    fn ring_validation() {
        assert!(PolyRing::new(Rationals, vec!["x", "x"], MonomialOrder::GrevLex).is_err());
        assert!(PolyRing::new(Rationals, vec![""], MonomialOrder::GrevLex).is_err());
        let many: Vec<String> = (0..13).map(|i| format!("v{i}")).collect();
        assert!(PolyRing::new(Rationals, many, MonomialOrder::GrevLex).is_err());
    }

    #[test]
    fn cancellation() {
        let r = qring();
        let x = r.var(0);
        let y = r.var(1);
        // (x + y) + (-y) = x
        let s = x.add(&y).add(&y.neg());
        assert_eq!(s, x);
    }

    #[test]
    fn difference_of_squares() {
        let r = qring();
        let x = r.var(0);
        let y = r.var(1);
        let lhs = x.add(&y).mul(&x.sub(&y));
        let rhs = x.mul(&x).sub(&y.mul(&y));
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.to_string(), "x^2 - y^2");
    }

    #[test]
    fn freshman_dream_mod_3() {
        let f3 = PrimeField::new(3).unwrap();
        let r = PolyRing::new(f3, vec!["x", "y", "z"], MonomialOrder::GrevLex).unwrap();
        let s = r.var(0).add(&r.var(1)).add(&r.var(2));
        let cube = s.pow(3);
        let expect = r.var(0).pow(3).add(&r.var(1).pow(3)).add(&r.var(2).pow(3));
        assert_eq!(cube, expect);
        assert_eq!(cube.terms().len(), 3);
    }

    #[test]
    fn display_and_monic() {
        let r = qring();
        let x = r.var(0);
        let z = r.var(2);
        // x*y - z^2
        let p = x.mul(&r.var(1)).sub(&z.mul(&z));
        assert_eq!(p.to_string(), "x*y - z^2");
        let q = p.scalar_mul(&Rationals.from_int(-3));
        assert_eq!(q.make_monic(), p);
        assert_eq!(r.zero().to_string(), "0");
        let half = r.constant(Rationals.from_decimal_ratio("1", "2").unwrap());
        assert_eq!(half.mul(&x).to_string(), "1/2*x");
    }

    #[test]
    fn monomial_content_extraction() {
        let r = qring();
        let x = r.var(0);
        let y = r.var(1);
        let z = r.var(2);
        // x*y^2 + x*y*z has content x*y
        let p = x.mul(&y).mul(&y).add(&x.mul(&y).mul(&z));
        let content = p.monomial_content();
        assert_eq!(content.exps(), &[1, 1, 0]);
        let q = p.div_monomial(&content);
        assert_eq!(q, y.add(&z));
    }

    #[test]
    #[should_panic(expected = "ring mismatch")]
    fn ring_mismatch_panics() {
        let r1 = qring();
        let r2 = PolyRing::new(Rationals, vec!["a", "b"], MonomialOrder::GrevLex).unwrap();
        let _ = r1.var(0).add(&r2.var(0));
    }

    #[test]
    fn substitution() {
        let q = Rationals;
        let src = PolyRing::new(q, vec!["a", "b"], MonomialOrder::GrevLex).unwrap();
        let dst = PolyRing::new(q, vec!["s", "t"], MonomialOrder::GrevLex).unwrap();
        // a*b - 1 under a -> s^2, b -> t gives s^2*t - 1
        let p = src.var(0).mul(&src.var(1)).sub(&src.one());
        let img = p.substitute(&dst, &[dst.var(0).pow(2), dst.var(1)]);
        let expect = dst.var(0).pow(2).mul(&dst.var(1)).sub(&dst.one());
        assert_eq!(img, expect);
    }
}
