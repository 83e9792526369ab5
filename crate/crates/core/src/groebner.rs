//! Multivariate division, Buchberger's algorithm, reduced Gröbner bases,
//! elimination, ideal membership, and Krull dimension via independent
//! variable sets.

use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{PolyRing, Polynomial};
use crate::scalar::Field;
use std::collections::HashSet;
use std::sync::{Arc, OnceLock};

/// A reduced, monic Gröbner basis. No term of any element is divisible by the
/// leading term of another; uniquely determined by the ideal and the order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis<F: Field> {
    elements: Vec<Polynomial<F>>,
    order: MonomialOrder,
}

impl<F: Field> GroebnerBasis<F> {
    pub fn elements(&self) -> &[Polynomial<F>] {
        &self.elements
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.elements.iter().filter_map(|p| p.leading_monomial())
    }

    /// The basis of the unit ideal is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.elements.is_empty()
    }

    /// Fully reduce `f`: the result has no term divisible by any leading term
    /// of the basis, and `f - result` lies in the ideal.
    pub fn normal_form(&self, f: &Polynomial<F>) -> Polynomial<F> {
        normal_form(f, &self.elements)
    }

    pub fn contains(&self, f: &Polynomial<F>) -> bool {
        self.normal_form(f).is_zero()
    }
}

/// Remainder of `f` on division by `divisors`, always taking the first
/// divisor (in list order) whose leading term divides the current term.
pub fn normal_form<F: Field>(f: &Polynomial<F>, divisors: &[Polynomial<F>]) -> Polynomial<F> {
    let ring = f.ring();
    let field = ring.field();
    let mut p = f.clone();
    let mut remainder: Vec<(Monomial, F::Elem)> = Vec::new();
    'outer: while let Some((lm, lc)) = p.leading_term() {
        for d in divisors {
            let Some((dm, dc)) = d.leading_term() else {
                continue;
            };
            if let Some(q) = dm.try_div_into(lm) {
                let factor = field.div(lc, dc);
                let sub = d.mul_term(&q, &factor);
                p = p.sub(&sub);
                continue 'outer;
            }
        }
        remainder.push((lm.clone(), lc.clone()));
        p = p.tail();
    }
    // remainder was collected in strictly descending order
    Polynomial::from_sorted_terms(ring, remainder)
}

fn s_polynomial<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>) -> Polynomial<F> {
    let (fm, fc) = f.leading_term().expect("nonzero");
    let (gm, gc) = g.leading_term().expect("nonzero");
    let lcm = fm.lcm(gm);
    let qf = fm.try_div_into(&lcm).unwrap();
    let qg = gm.try_div_into(&lcm).unwrap();
    // cross-multiplied to avoid inverses on intermediates
    f.mul_term(&qf, gc).sub(&g.mul_term(&qg, fc))
}

/// Reduce until the leading term is irreducible, cross-multiplying and
/// re-normalizing content at every step. The result generates the same
/// leading term as the exact remainder, which is all Buchberger needs, and
/// coefficient growth stays bounded.
fn top_reduce<F: Field>(mut p: Polynomial<F>, basis: &[Polynomial<F>]) -> Polynomial<F> {
    'outer: while let Some((lm, lc)) = p.leading_term() {
        for d in basis {
            let Some((dm, dc)) = d.leading_term() else {
                continue;
            };
            if let Some(q) = dm.try_div_into(lm) {
                let lc = lc.clone();
                p = p.scalar_mul(dc).sub(&d.mul_term(&q, &lc));
                p = p.normalize_content();
                continue 'outer;
            }
        }
        break;
    }
    p
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Buchberger's algorithm with normal selection and the two standard
/// pair-pruning criteria (coprime leading terms and the chain criterion,
/// applied both when pairs are popped and when new elements arrive),
/// followed by minimization and inter-reduction. The result is the unique
/// reduced monic basis for the given ring order.
pub fn reduced_groebner_basis<F: Field>(
    ring: &Arc<PolyRing<F>>,
    generators: &[Polynomial<F>],
) -> GroebnerBasis<F> {
    let order = ring.order();
    let mut basis: Vec<Polynomial<F>> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut done: HashSet<(usize, usize)> = HashSet::new();

    let add_element =
        |basis: &mut Vec<Polynomial<F>>, pairs: &mut Vec<Pair>, poly: Polynomial<F>| {
            let t = basis.len();
            let lt_t = poly.leading_monomial().unwrap().clone();
            // chain criterion, insertion side: an old pair whose lcm the new
            // leading term divides is subsumed by the two pairs through t
            pairs.retain(|p| {
                if !lt_t.divides(&p.lcm) {
                    return true;
                }
                let li = basis[p.i].leading_monomial().unwrap().lcm(&lt_t);
                let lj = basis[p.j].leading_monomial().unwrap().lcm(&lt_t);
                li == p.lcm || lj == p.lcm
            });
            let mut fresh: Vec<Pair> = (0..t)
                .map(|k| Pair {
                    i: k,
                    j: t,
                    lcm: basis[k].leading_monomial().unwrap().lcm(&lt_t),
                })
                .collect();
            // keep only pairs with minimal lcm among the new ones
            let keep: Vec<bool> = fresh
                .iter()
                .enumerate()
                .map(|(a, p)| {
                    !fresh.iter().enumerate().any(|(b, q)| {
                        q.lcm != p.lcm && q.lcm.divides(&p.lcm) || (a > b && q.lcm == p.lcm)
                    })
                })
                .collect();
            fresh = fresh
                .into_iter()
                .zip(keep)
                .filter(|(_, k)| *k)
                .map(|(p, _)| p)
                .collect();
            pairs.extend(fresh);
            basis.push(poly);
        };

    for g in generators {
        if g.is_zero() {
            continue;
        }
        add_element(&mut basis, &mut pairs, g.normalize_content());
    }

    while !pairs.is_empty() {
        // normal selection: smallest lcm first
        let best = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                order
                    .cmp(&a.lcm, &b.lcm)
                    .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
            })
            .map(|(idx, _)| idx)
            .unwrap();
        let pair = pairs.swap_remove(best);
        let (i, j) = (pair.i, pair.j);
        done.insert((i, j));
        let (fm, gm) = (
            basis[i].leading_monomial().unwrap(),
            basis[j].leading_monomial().unwrap(),
        );
        // coprime criterion
        if pair.lcm.total_degree() == fm.total_degree() + gm.total_degree() {
            continue;
        }
        // chain criterion, pop side
        let chained = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k]
                    .leading_monomial()
                    .is_some_and(|km| km.divides(&pair.lcm))
                && done.contains(&sorted_pair(i, k))
                && done.contains(&sorted_pair(j, k))
        });
        if chained {
            continue;
        }
        let rem = top_reduce(s_polynomial(&basis[i], &basis[j]), &basis);
        if !rem.is_zero() {
            add_element(&mut basis, &mut pairs, rem);
        }
    }

    // minimize: drop elements whose leading term another element divides
    let mut keep: Vec<Polynomial<F>> = Vec::new();
    for (i, f) in basis.iter().enumerate() {
        let fm = f.leading_monomial().unwrap();
        let redundant = basis.iter().enumerate().any(|(j, g)| {
            if i == j {
                return false;
            }
            let gm = g.leading_monomial().unwrap();
            gm.divides(fm) && (gm != fm || j < i)
        });
        if !redundant {
            keep.push(f.clone());
        }
    }

    // inter-reduce tails and normalize monic
    let mut reduced: Vec<Polynomial<F>> = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let others: Vec<Polynomial<F>> = keep
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        reduced.push(normal_form(&keep[i], &others).make_monic());
    }
    reduced.sort_by(|a, b| order.cmp(b.leading_monomial().unwrap(), a.leading_monomial().unwrap()));

    let gb = GroebnerBasis {
        elements: reduced,
        order,
    };
    // post-condition: every input generator is a member
    assert!(generators.iter().all(|g| gb.contains(g)));
    gb
}

fn sorted_pair(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// An ideal given by generators, with a lazily computed reduced Gröbner basis
/// for the ring's own order.
#[derive(Debug)]
pub struct Ideal<F: Field> {
    ring: Arc<PolyRing<F>>,
    generators: Vec<Polynomial<F>>,
    cache: OnceLock<GroebnerBasis<F>>,
}

impl<F: Field> Clone for Ideal<F> {
    fn clone(&self) -> Self {
        let cache = OnceLock::new();
        if let Some(gb) = self.cache.get() {
            let _ = cache.set(gb.clone());
        }
        Ideal {
            ring: Arc::clone(&self.ring),
            generators: self.generators.clone(),
            cache,
        }
    }
}

impl<F: Field> Ideal<F> {
    pub fn new(ring: Arc<PolyRing<F>>, generators: Vec<Polynomial<F>>) -> Self {
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal {
            ring,
            generators,
            cache: OnceLock::new(),
        }
    }

    pub fn zero(ring: Arc<PolyRing<F>>) -> Self {
        Ideal::new(ring, Vec::new())
    }

    pub fn ring(&self) -> &Arc<PolyRing<F>> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.generators
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis<F> {
        self.cache
            .get_or_init(|| reduced_groebner_basis(&self.ring, &self.generators))
    }

    pub fn is_unit(&self) -> bool {
        self.groebner_basis().is_unit()
    }

    pub fn contains(&self, f: &Polynomial<F>) -> bool {
        self.groebner_basis().contains(f)
    }

    pub fn contains_ideal(&self, other: &Ideal<F>) -> bool {
        other.generators.iter().all(|g| self.contains(g))
    }

    pub fn same_ideal(&self, other: &Ideal<F>) -> bool {
        self.contains_ideal(other) && other.contains_ideal(self)
    }

    /// The ideal generated by these generators plus `extra`.
    pub fn with_extra(&self, extra: &[Polynomial<F>]) -> Ideal<F> {
        let mut gens = self.generators.clone();
        gens.extend(extra.iter().cloned());
        Ideal::new(Arc::clone(&self.ring), gens)
    }

    /// Every generator a single term?
    pub fn generators_are_monomial(&self) -> bool {
        self.generators.iter().all(|g| g.is_term())
    }

    /// The generator monomials of a monomial ideal.
    pub fn monomial_generators(&self) -> Option<Vec<Monomial>> {
        if !self.generators_are_monomial() {
            return None;
        }
        Some(
            self.generators
                .iter()
                .map(|g| g.leading_monomial().unwrap().clone())
                .collect(),
        )
    }

    /// Reinterpret this ideal in the same ring under another monomial order.
    pub fn with_order(&self, order: MonomialOrder) -> Ideal<F> {
        let ring = self.ring.with_order(order);
        let gens = self.generators.iter().map(|g| g.reorder(&ring)).collect();
        Ideal::new(ring, gens)
    }
}

/// `f` lies in the ideal iff its normal form vanishes.
pub fn ideal_membership<F: Field>(f: &Polynomial<F>, ideal: &Ideal<F>) -> bool {
    ideal.contains(f)
}

/// Intersect `ideal` with the subring on the variables not in `drop_vars`,
/// returning generators inside a fresh ring on the kept variables.
///
/// Internally the dropped variables are moved to an initial block and a block
/// elimination order is used.
pub fn eliminate<F: Field>(ideal: &Ideal<F>, drop_vars: &[usize]) -> Ideal<F> {
    let ring = ideal.ring();
    let n = ring.arity();
    let mut drop: Vec<usize> = drop_vars.to_vec();
    drop.sort_unstable();
    drop.dedup();
    assert!(drop.iter().all(|&i| i < n), "variable index out of range");
    if drop.is_empty() {
        return ideal.clone();
    }
    let kept: Vec<usize> = (0..n).filter(|i| !drop.contains(i)).collect();

    let elim_vars: Vec<String> = drop
        .iter()
        .chain(kept.iter())
        .map(|&i| ring.vars()[i].to_string())
        .collect();
    let elim_ring = PolyRing::new(
        ring.field().clone(),
        elim_vars,
        MonomialOrder::Block { split: drop.len() },
    )
    .expect("permuted ring is valid");

    // position of original variable i inside the permuted ring
    let mut var_map = vec![0usize; n];
    for (pos, &i) in drop.iter().chain(kept.iter()).enumerate() {
        var_map[i] = pos;
    }
    let mapped: Vec<Polynomial<F>> = ideal
        .generators()
        .iter()
        .map(|g| g.map_variables(&elim_ring, &var_map))
        .collect();
    let gb = reduced_groebner_basis(&elim_ring, &mapped);

    let kept_ring = PolyRing::new(
        ring.field().clone(),
        kept.iter()
            .map(|&i| ring.vars()[i].to_string())
            .collect::<Vec<_>>(),
        MonomialOrder::GrevLex,
    )
    .expect("kept ring is valid");
    // in the permuted ring, kept variable j sits at drop.len() + j
    let selected: Vec<Polynomial<F>> = gb
        .elements()
        .iter()
        .filter(|g| {
            g.terms()
                .iter()
                .all(|(m, _)| (0..drop.len()).all(|i| m.exp(i) == 0))
        })
        .map(|g| {
            let terms = g
                .terms()
                .iter()
                .map(|(m, c)| {
                    let exps: Vec<u32> = (0..kept.len()).map(|j| m.exp(drop.len() + j)).collect();
                    (Monomial::new(exps), c.clone())
                })
                .collect();
            kept_ring.from_terms(terms)
        })
        .collect();
    Ideal::new(kept_ring, selected)
}

/// Krull dimension of `ring/ideal`: the largest variable subset none of whose
/// complements is forced by a leading term. `None` marks the empty variety
/// (unit ideal).
pub fn krull_dimension<F: Field>(ideal: &Ideal<F>) -> Option<usize> {
    let gb = ideal.groebner_basis();
    if gb.is_unit() {
        return None;
    }
    let n = ideal.ring().arity();
    let supports: Vec<u32> = gb
        .leading_monomials()
        .map(|m| m.support().fold(0u32, |acc, i| acc | (1 << i)))
        .collect();
    let mut best = 0usize;
    for subset in 0u32..(1 << n) {
        // independent iff no leading-term support is contained in the subset
        if supports.iter().any(|s| s & subset == *s) {
            continue;
        }
        best = best.max(subset.count_ones() as usize);
    }
    Some(best)
}
