//! Exponent-vector monomials and the monomial orders used for Gröbner bases.

use serde::Serialize;
use std::cmp::Ordering;
use std::fmt;

/// A monomial of fixed arity, stored as an exponent vector with its total
/// degree cached.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    pub fn one(arity: usize) -> Self {
        Monomial {
            exps: vec![0; arity],
            degree: 0,
        }
    }

    pub fn var(arity: usize, index: usize) -> Self {
        assert!(index < arity);
        let mut exps = vec![0; arity];
        exps[index] = 1;
        Monomial { exps, degree: 1 }
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn exp(&self, index: usize) -> u32 {
        self.exps[index]
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn total_degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), other.arity());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
            degree: self.degree + other.degree,
        }
    }

    pub fn pow(&self, n: u32) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|e| e * n).collect(),
            degree: self.degree * n,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.arity(), other.arity());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when it divides.
    pub fn try_div_into(&self, other: &Monomial) -> Option<Monomial> {
        if self.divides(other) {
            Some(Monomial::new(
                other
                    .exps
                    .iter()
                    .zip(&self.exps)
                    .map(|(b, a)| b - a)
                    .collect(),
            ))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m{:?}", self.exps)
    }
}

/// A total, multiplicative well-order on monomials of one ring.
///
/// `Block { split }` is the elimination (product) order: grevlex on the first
/// `split` variables, ties broken by grevlex on the rest. A Gröbner basis for
/// it intersects cleanly with the subring on the trailing block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    Block { split: usize },
}

fn grevlex_slice(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    match da.cmp(&db) {
        Ordering::Equal => {
            for (x, y) in a.iter().zip(b).rev() {
                match x.cmp(y) {
                    Ordering::Equal => continue,
                    // at the last difference, the smaller exponent wins
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                }
            }
            Ordering::Equal
        }
        other => other,
    }
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.arity(), b.arity());
        match *self {
            MonomialOrder::Lex => {
                for (x, y) in a.exps.iter().zip(&b.exps) {
                    match x.cmp(y) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::GrevLex => grevlex_slice(&a.exps, &b.exps),
            MonomialOrder::Block { split } => grevlex_slice(&a.exps[..split], &b.exps[..split])
                .then_with(|| grevlex_slice(&a.exps[split..], &b.exps[split..])),
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::GrevLex => write!(f, "grevlex"),
            MonomialOrder::Block { split } => write!(f, "block(split={split})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::cmp::Ordering::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn degree_is_cached_sum() {
        assert_eq!(m(&[2, 0, 3]).total_degree(), 5);
        assert!(m(&[0, 0]).is_one());
    }

    #[test]
    fn divisibility_and_quotient() {
        let xy = m(&[1, 1, 0]);
        let x2y3z = m(&[2, 3, 1]);
        assert!(xy.divides(&x2y3z));
        assert_eq!(xy.try_div_into(&x2y3z), Some(m(&[1, 2, 1])));
        assert_eq!(x2y3z.try_div_into(&xy), None);
        assert_eq!(xy.lcm(&m(&[0, 2, 1])), m(&[1, 2, 1]));
        assert_eq!(xy.gcd(&m(&[0, 2, 1])), m(&[0, 1, 0]));
    }

    #[test]
    fn lex_order() {
        let o = MonomialOrder::Lex;
        // x > y^5 under lex
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 5])), Greater);
        assert_eq!(o.cmp(&m(&[1, 2]), &m(&[1, 3])), Less);
    }

    #[test]
    fn grevlex_order() {
        let o = MonomialOrder::GrevLex;
        // degree first
        assert_eq!(o.cmp(&m(&[0, 2]), &m(&[1, 0])), Greater);
        // x*y > z^2: last nonzero of difference (1,1,-2) is negative
        assert_eq!(o.cmp(&m(&[1, 1, 0]), &m(&[0, 0, 2])), Greater);
        // x^3 > y^3 > z^3
        assert_eq!(o.cmp(&m(&[3, 0, 0]), &m(&[0, 3, 0])), Greater);
        assert_eq!(o.cmp(&m(&[0, 3, 0]), &m(&[0, 0, 3])), Greater);
        // x^2*z > x*y^2 is false in grevlex (compare (2,0,1) vs (1,2,0))
        assert_eq!(o.cmp(&m(&[2, 0, 1]), &m(&[1, 2, 0])), Less);
    }

    #[test]
    fn block_order_eliminates_leading_block() {
        // variables (s, t | a, b); any monomial with s or t beats any without
        let o = MonomialOrder::Block { split: 2 };
        assert_eq!(o.cmp(&m(&[1, 0, 0, 0]), &m(&[0, 0, 9, 9])), Greater);
        // within the trailing block, grevlex
        assert_eq!(o.cmp(&m(&[0, 0, 1, 1]), &m(&[0, 0, 2, 0])), Less);
    }

    #[test]
    fn one_is_minimal() {
        for o in [
            MonomialOrder::Lex,
            MonomialOrder::GrevLex,
            MonomialOrder::Block { split: 1 },
        ] {
            let one = Monomial::one(3);
            for e in [[1, 0, 0], [0, 1, 0], [0, 0, 1], [2, 1, 3]] {
                assert_eq!(o.cmp(&one, &m(&e)), Less);
            }
        }
    }
}
