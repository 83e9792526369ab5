//! Minimal primes of an ideal by recursive factor splitting, with
//! machine-checkable primality certificates, and an exhaustive variable-cover
//! oracle for monomial ideals.
//!
//! Splitting is deliberately limited: monomial-content extraction and
//! characteristic-p Frobenius roots. Leaves that match no certificate are
//! reported as residuals rather than guessed.

use crate::groebner::{krull_dimension, GroebnerBasis, Ideal};
use crate::linalg::matrix_rank;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::scalar::Field;
use serde::Serialize;
use std::collections::BTreeSet;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DecomposeError {
    #[error("generator `{0}` is not a monomial")]
    NonMonomialInput(String),
}

/// A sufficient condition for primality that `verify_certificate` re-checks
/// from the reduced basis alone.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PrimeCertificate {
    /// The reduced basis consists of distinct variables (possibly none).
    GeneratedByVariables,
    /// Variables plus one polynomial that is monic-linear in a remaining
    /// variable, so the quotient is a polynomial ring.
    VariablesPlusMonicLinear,
    /// Variables plus one quadratic form of rank at least 3 in the remaining
    /// variables (characteristic not 2), hence irreducible.
    VariablesPlusQuadraticRank3,
    /// Certified structurally after replacing Frobenius powers g^p by g in
    /// characteristic p, which preserves the variety.
    FrobeniusRootReduced,
    /// Found on the combinatorial path for monomial ideals: the variables are
    /// a minimal cover of the generator supports.
    MonomialCover,
}

impl PrimeCertificate {
    pub fn label(&self) -> &'static str {
        match self {
            PrimeCertificate::GeneratedByVariables => "generated_by_variables",
            PrimeCertificate::VariablesPlusMonicLinear => "variables_plus_monic_linear",
            PrimeCertificate::VariablesPlusQuadraticRank3 => "variables_plus_quadratic_rank3",
            PrimeCertificate::FrobeniusRootReduced => "frobenius_root_reduced",
            PrimeCertificate::MonomialCover => "monomial_cover",
        }
    }
}

/// One certified minimal prime.
#[derive(Debug, Clone)]
pub struct CertifiedPrime<F: Field> {
    pub ideal: Ideal<F>,
    pub certificate: PrimeCertificate,
    pub quotient_dim: usize,
}

/// Outcome of `minimal_primes`. Incompleteness is data, not an error: any
/// branch that could not be certified lands in `residuals`.
#[derive(Debug, Clone)]
pub struct MinimalPrimesResult<F: Field> {
    pub primes: Vec<CertifiedPrime<F>>,
    pub complete: bool,
    pub residuals: Vec<Ideal<F>>,
}

impl<F: Field> MinimalPrimesResult<F> {
    pub fn prime_ideals(&self) -> impl Iterator<Item = &Ideal<F>> {
        self.primes.iter().map(|p| &p.ideal)
    }
}

/// Minimal primes over `ideal`. The unit ideal yields an empty, complete
/// result.
pub fn minimal_primes<F: Field>(ideal: &Ideal<F>) -> MinimalPrimesResult<F> {
    let ring = ideal.ring();
    let p = ring.field().characteristic();
    let mut certified: Vec<(Ideal<F>, PrimeCertificate)> = Vec::new();
    let mut residuals: Vec<Ideal<F>> = Vec::new();
    let mut stack: Vec<(Ideal<F>, bool)> = vec![(ideal.clone(), false)];

    while let Some((node, frobenius_used)) = stack.pop() {
        let gb = node.groebner_basis().clone();
        if gb.is_unit() {
            continue;
        }

        // combinatorial path for monomial nodes
        if gb.elements().iter().all(|e| e.is_term()) {
            let monomials: Vec<Monomial> = gb.leading_monomials().cloned().collect();
            if monomials.iter().all(|m| m.total_degree() == 1) {
                let cert = if frobenius_used {
                    PrimeCertificate::FrobeniusRootReduced
                } else {
                    PrimeCertificate::GeneratedByVariables
                };
                certified.push((Ideal::new(Arc::clone(ring), gb.elements().to_vec()), cert));
            } else {
                let supports: Vec<BTreeSet<usize>> =
                    monomials.iter().map(|m| m.support().collect()).collect();
                for cover in minimal_covers(&supports) {
                    let gens = cover.iter().map(|&i| ring.var(i)).collect();
                    certified.push((
                        Ideal::new(Arc::clone(ring), gens),
                        PrimeCertificate::MonomialCover,
                    ));
                }
            }
            continue;
        }

        // split off a monomial factor: f = x_i * g gives V(I + x_i) u V(I + g)
        if let Some(idx) = gb
            .elements()
            .iter()
            .position(|e| !e.monomial_content().is_one() && e.as_variable().is_none())
        {
            let f = &gb.elements()[idx];
            let content = f.monomial_content();
            let cofactor = f.div_monomial(&content);
            for i in content.support() {
                stack.push((node.with_extra(&[ring.var(i)]), frobenius_used));
            }
            if !cofactor.is_constant() {
                let mut gens: Vec<Polynomial<F>> = gb.elements().to_vec();
                gens[idx] = cofactor;
                stack.push((Ideal::new(Arc::clone(ring), gens), frobenius_used));
            }
            continue;
        }

        // replace a Frobenius power by its p-th root (same variety); no
        // exponent fits a modulus beyond u32, so such characteristics skip
        if let Ok(p) = u32::try_from(p) {
            if p > 0 {
                if let Some((idx, root)) = gb
                    .elements()
                    .iter()
                    .enumerate()
                    .find_map(|(i, e)| frobenius_root(e, p).map(|r| (i, r)))
                {
                    let mut gens: Vec<Polynomial<F>> = gb.elements().to_vec();
                    gens[idx] = root;
                    stack.push((Ideal::new(Arc::clone(ring), gens), true));
                    continue;
                }
            }
        }

        // splitting-free leaf: certify or give up
        match certify_leaf(&gb) {
            Some(structural) => {
                let cert = if frobenius_used {
                    PrimeCertificate::FrobeniusRootReduced
                } else {
                    structural
                };
                certified.push((Ideal::new(Arc::clone(ring), gb.elements().to_vec()), cert));
            }
            None => residuals.push(Ideal::new(Arc::clone(ring), gb.elements().to_vec())),
        }
    }

    finish_result(certified, residuals)
}

fn finish_result<F: Field>(
    certified: Vec<(Ideal<F>, PrimeCertificate)>,
    residuals: Vec<Ideal<F>>,
) -> MinimalPrimesResult<F> {
    // dedupe via the canonical reduced basis
    let mut unique: Vec<(Ideal<F>, PrimeCertificate)> = Vec::new();
    for (ideal, cert) in certified {
        let basis = ideal.groebner_basis().elements().to_vec();
        if !unique
            .iter()
            .any(|(u, _)| u.groebner_basis().elements() == basis.as_slice())
        {
            unique.push((ideal, cert));
        }
    }
    // inclusion filter: drop any prime strictly containing another
    let minimal: Vec<(Ideal<F>, PrimeCertificate)> = unique
        .iter()
        .enumerate()
        .filter(|(i, (p, _))| {
            !unique
                .iter()
                .enumerate()
                .any(|(j, (q, _))| *i != j && p.contains_ideal(q))
        })
        .map(|(_, pc)| pc.clone())
        .collect();

    let mut primes: Vec<CertifiedPrime<F>> = minimal
        .into_iter()
        .map(|(ideal, certificate)| {
            let quotient_dim = krull_dimension(&ideal).expect("certified prime is proper");
            CertifiedPrime {
                ideal,
                certificate,
                quotient_dim,
            }
        })
        .collect();
    primes.sort_by(|a, b| {
        b.quotient_dim
            .cmp(&a.quotient_dim)
            .then_with(|| render_ideal(&a.ideal).cmp(&render_ideal(&b.ideal)))
    });
    MinimalPrimesResult {
        complete: residuals.is_empty(),
        primes,
        residuals,
    }
}

/// `(g1, ..., gk)`, or `(0)` for the zero ideal.
pub fn render_ideal<F: Field>(ideal: &Ideal<F>) -> String {
    if ideal.generators().is_empty() {
        return "(0)".to_string();
    }
    let gens: Vec<String> = ideal.generators().iter().map(|g| g.to_string()).collect();
    format!("({})", gens.join(", "))
}

/// All p-th roots: exponents divided by p, coefficients fixed (Frobenius is
/// the identity on F_p).
fn frobenius_root<F: Field>(f: &Polynomial<F>, p: u32) -> Option<Polynomial<F>> {
    if f.is_zero() || f.is_constant() {
        return None;
    }
    let divisible = f
        .terms()
        .iter()
        .all(|(m, _)| m.exps().iter().all(|e| e % p == 0));
    if !divisible {
        return None;
    }
    let terms: Vec<(Monomial, F::Elem)> = f
        .terms()
        .iter()
        .map(|(m, c)| {
            (
                Monomial::new(m.exps().iter().map(|e| e / p).collect()),
                c.clone(),
            )
        })
        .collect();
    Some(f.ring().from_terms(terms))
}

/// Split a reduced basis into variable elements and the rest.
fn split_variables<F: Field>(gb: &GroebnerBasis<F>) -> (BTreeSet<usize>, Vec<Polynomial<F>>) {
    let mut vars = BTreeSet::new();
    let mut rest = Vec::new();
    for e in gb.elements() {
        match e.as_variable() {
            Some(i) if e.terms().len() == 1 => {
                vars.insert(i);
            }
            _ => rest.push(e.clone()),
        }
    }
    (vars, rest)
}

fn certify_leaf<F: Field>(gb: &GroebnerBasis<F>) -> Option<PrimeCertificate> {
    let (_vars, rest) = split_variables(gb);
    match rest.as_slice() {
        [] => Some(PrimeCertificate::GeneratedByVariables),
        [h] => {
            if is_monic_linear_in_some_variable(h) {
                Some(PrimeCertificate::VariablesPlusMonicLinear)
            } else if is_quadratic_form_of_rank_at_least_3(h) {
                Some(PrimeCertificate::VariablesPlusQuadraticRank3)
            } else {
                None
            }
        }
        _ => None,
    }
}

/// `h = c*x_j + (terms without x_j)` with constant nonzero `c`: the quotient
/// by (vars, h) is a polynomial ring.
fn is_monic_linear_in_some_variable<F: Field>(h: &Polynomial<F>) -> bool {
    let support: BTreeSet<usize> = h.terms().iter().flat_map(|(m, _)| m.support()).collect();
    'candidates: for &j in &support {
        let mut seen_linear = false;
        for (m, _) in h.terms() {
            let e = m.exp(j);
            if e == 0 {
                continue;
            }
            if e == 1 && m.total_degree() == 1 && !seen_linear {
                seen_linear = true;
            } else {
                continue 'candidates;
            }
        }
        if seen_linear {
            return true;
        }
    }
    false
}

/// Homogeneous quadratic with Gram rank >= 3 over a field of characteristic
/// other than 2; such a form is irreducible, so it generates a prime.
fn is_quadratic_form_of_rank_at_least_3<F: Field>(h: &Polynomial<F>) -> bool {
    let field = h.ring().field();
    if field.characteristic() == 2 {
        return false;
    }
    if !h.terms().iter().all(|(m, _)| m.total_degree() == 2) {
        return false;
    }
    let support: Vec<usize> = {
        let s: BTreeSet<usize> = h.terms().iter().flat_map(|(m, _)| m.support()).collect();
        s.into_iter().collect()
    };
    let k = support.len();
    let mut gram = vec![vec![field.zero(); k]; k];
    let two_inv = field.inv(&field.from_int(2));
    for (m, c) in h.terms() {
        let idx: Vec<usize> = m
            .support()
            .map(|v| support.iter().position(|&s| s == v).unwrap())
            .collect();
        match idx.as_slice() {
            [i] => gram[*i][*i] = c.clone(),
            [i, j] => {
                let half = field.mul(c, &two_inv);
                gram[*i][*j] = half.clone();
                gram[*j][*i] = half;
            }
            _ => unreachable!("degree-2 monomial has at most two variables"),
        }
    }
    matrix_rank(field, gram) >= 3
}

/// Re-check a certificate against the prime's reduced basis.
pub fn verify_certificate<F: Field>(prime: &Ideal<F>, certificate: PrimeCertificate) -> bool {
    let gb = prime.groebner_basis();
    let structurally = |gb: &GroebnerBasis<F>| {
        matches!(
            certify_leaf(gb),
            Some(
                PrimeCertificate::GeneratedByVariables
                    | PrimeCertificate::VariablesPlusMonicLinear
                    | PrimeCertificate::VariablesPlusQuadraticRank3
            )
        )
    };
    match certificate {
        PrimeCertificate::GeneratedByVariables | PrimeCertificate::MonomialCover => gb
            .elements()
            .iter()
            .all(|e| e.as_variable().is_some() && e.terms().len() == 1),
        PrimeCertificate::VariablesPlusMonicLinear => {
            let (_, rest) = split_variables(gb);
            matches!(rest.as_slice(), [h] if is_monic_linear_in_some_variable(h))
        }
        PrimeCertificate::VariablesPlusQuadraticRank3 => {
            let (_, rest) = split_variables(gb);
            matches!(rest.as_slice(), [h] if is_quadratic_form_of_rank_at_least_3(h))
        }
        PrimeCertificate::FrobeniusRootReduced => {
            prime.ring().field().characteristic() > 0 && structurally(gb)
        }
    }
}

/// Enumerate inclusion-minimal variable sets hitting every support.
fn minimal_covers(supports: &[BTreeSet<usize>]) -> Vec<BTreeSet<usize>> {
    fn recurse(
        supports: &[BTreeSet<usize>],
        chosen: &mut BTreeSet<usize>,
        out: &mut Vec<BTreeSet<usize>>,
    ) {
        match supports.iter().position(|s| s.is_disjoint(chosen)) {
            None => out.push(chosen.clone()),
            Some(idx) => {
                let branch: Vec<usize> = supports[idx].iter().copied().collect();
                for v in branch {
                    chosen.insert(v);
                    recurse(supports, chosen, out);
                    chosen.remove(&v);
                }
            }
        }
    }
    let mut raw = Vec::new();
    recurse(supports, &mut BTreeSet::new(), &mut raw);
    filter_minimal_sets(raw)
}

fn filter_minimal_sets(mut sets: Vec<BTreeSet<usize>>) -> Vec<BTreeSet<usize>> {
    sets.sort();
    sets.dedup();
    let minimal: Vec<BTreeSet<usize>> = sets
        .iter()
        .filter(|s| !sets.iter().any(|t| *t != **s && t.is_subset(s)))
        .cloned()
        .collect();
    minimal
}

/// Independent test oracle: enumerate *all* variable subsets, keep the covers
/// of every generator support, and filter to the inclusion-minimal ones. On
/// monomial ideals this must agree with `minimal_primes`.
pub fn monomial_minimal_primes_oracle<F: Field>(
    ideal: &Ideal<F>,
) -> Result<Vec<Ideal<F>>, DecomposeError> {
    let ring = ideal.ring();
    for g in ideal.generators() {
        if !g.is_term() {
            return Err(DecomposeError::NonMonomialInput(g.to_string()));
        }
    }
    let supports: Vec<BTreeSet<usize>> = ideal
        .generators()
        .iter()
        .map(|g| g.leading_monomial().unwrap().support().collect())
        .collect();
    if supports.iter().any(|s| s.is_empty()) {
        // a unit generator: empty variety, no primes
        return Ok(Vec::new());
    }
    let n = ring.arity();
    let mut covers: Vec<BTreeSet<usize>> = Vec::new();
    for mask in 0u32..(1 << n) {
        let set: BTreeSet<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        if supports.iter().all(|s| !s.is_disjoint(&set)) {
            covers.push(set);
        }
    }
    Ok(filter_minimal_sets(covers)
        .into_iter()
        .map(|set| {
            let gens = set.iter().map(|&i| ring.var(i)).collect();
            Ideal::new(Arc::clone(ring), gens)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::MonomialOrder;
    use crate::poly::PolyRing;
    use crate::scalar::{PrimeField, Rationals};

    fn qring(vars: &[&str]) -> Arc<PolyRing<Rationals>> {
        PolyRing::new(Rationals, vars.to_vec(), MonomialOrder::GrevLex).unwrap()
    }

    fn ideal_of<F: Field>(ring: &Arc<PolyRing<F>>, texts: &[&str]) -> Ideal<F> {
        let gens = texts.iter().map(|t| ring.parse(t).unwrap()).collect();
        Ideal::new(Arc::clone(ring), gens)
    }

    fn prime_strings<F: Field>(result: &MinimalPrimesResult<F>) -> Vec<String> {
        result
            .primes
            .iter()
            .map(|p| render_ideal(&p.ideal))
            .collect()
    }

    #[test]
    fn coordinate_axes() {
        let r = qring(&["x", "y", "z"]);
        let result = minimal_primes(&ideal_of(&r, &["x*y", "x*z"]));
        assert!(result.complete);
        assert_eq!(prime_strings(&result), vec!["(x)", "(y, z)"]);
        assert_eq!(
            result
                .primes
                .iter()
                .map(|p| p.quotient_dim)
                .collect::<Vec<_>>(),
            vec![2, 1]
        );
        for p in &result.primes {
            assert_eq!(p.certificate, PrimeCertificate::MonomialCover);
            assert!(verify_certificate(&p.ideal, p.certificate));
        }
    }

    #[test]
    fn maximal_ideal_in_f7_cubic() {
        let f7 = PrimeField::new(7).unwrap();
        let r = PolyRing::new(f7, vec!["x", "y", "z"], MonomialOrder::GrevLex).unwrap();
        let result = minimal_primes(&ideal_of(&r, &["x", "y", "x^3 + y^3 + z^3"]));
        assert!(result.complete);
        assert_eq!(prime_strings(&result), vec!["(x, y, z)"]);
        assert_eq!(result.primes[0].quotient_dim, 0);
    }

    #[test]
    fn frobenius_root_then_monic_linear() {
        let f3 = PrimeField::new(3).unwrap();
        let r = PolyRing::new(f3, vec!["x", "y", "z"], MonomialOrder::GrevLex).unwrap();
        let result = minimal_primes(&ideal_of(&r, &["x", "x^3 + y^3 + z^3"]));
        assert!(result.complete);
        assert_eq!(prime_strings(&result), vec!["(x, y + z)"]);
        assert_eq!(
            result.primes[0].certificate,
            PrimeCertificate::FrobeniusRootReduced
        );
        assert!(verify_certificate(
            &result.primes[0].ideal,
            PrimeCertificate::FrobeniusRootReduced
        ));
        assert_eq!(result.primes[0].quotient_dim, 1);
    }

    #[test]
    fn non_minimal_member_is_filtered() {
        // (x, xz) reduces to (x); the paper's extra prime (x,z) is not minimal
        let r = qring(&["x", "y", "z"]);
        let result = minimal_primes(&ideal_of(&r, &["x", "x*z"]));
        assert!(result.complete);
        assert_eq!(prime_strings(&result), vec!["(x)"]);
    }

    #[test]
    fn unit_ideal_gives_empty_complete_result() {
        let r = qring(&["x", "y"]);
        let result = minimal_primes(&ideal_of(&r, &["x", "x - 1"]));
        assert!(result.complete);
        assert!(result.primes.is_empty());
        assert!(result.residuals.is_empty());
    }

    #[test]
    fn zero_ideal_is_its_own_minimal_prime() {
        let r = qring(&["x", "y"]);
        let result = minimal_primes(&Ideal::zero(Arc::clone(&r)));
        assert!(result.complete);
        assert_eq!(prime_strings(&result), vec!["(0)"]);
        assert_eq!(result.primes[0].quotient_dim, 2);
    }

    #[test]
    fn quadratic_cone_is_certified_prime() {
        let r = qring(&["x", "y", "z"]);
        let result = minimal_primes(&ideal_of(&r, &["x*y - z^2"]));
        assert!(result.complete);
        assert_eq!(prime_strings(&result), vec!["(x*y - z^2)"]);
        assert_eq!(
            result.primes[0].certificate,
            PrimeCertificate::VariablesPlusQuadraticRank3
        );
    }

    #[test]
    fn rank_two_quadric_is_not_certified() {
        // x*y factors as two lines; the splitter handles it instead:
        // content-free, no certificate... but x*y is a monomial, so the
        // cover path decomposes it. Use x^2 - y^2 for a genuine residual.
        let r = qring(&["x", "y", "z"]);
        let result = minimal_primes(&ideal_of(&r, &["x^2 - y^2"]));
        assert!(!result.complete);
        assert!(result.primes.is_empty());
        assert_eq!(result.residuals.len(), 1);
    }

    #[test]
    fn quadratic_certificate_is_disabled_in_characteristic_two() {
        let f2 = PrimeField::new(2).unwrap();
        let r = PolyRing::new(f2, vec!["x", "y", "z"], MonomialOrder::GrevLex).unwrap();
        let result = minimal_primes(&ideal_of(&r, &["x*y + z^2"]));
        assert!(!result.complete);
        assert!(result.primes.is_empty());
    }

    #[test]
    fn repeated_frobenius_roots() {
        // x^4 + y^4 = ((x + y)^2)^2 over F_2
        let f2 = PrimeField::new(2).unwrap();
        let r = PolyRing::new(f2, vec!["x", "y"], MonomialOrder::GrevLex).unwrap();
        let result = minimal_primes(&ideal_of(&r, &["x^4 + y^4"]));
        assert!(result.complete);
        assert_eq!(prime_strings(&result), vec!["(x + y)"]);
        assert_eq!(
            result.primes[0].certificate,
            PrimeCertificate::FrobeniusRootReduced
        );
    }

    #[test]
    fn oracle_examples() {
        let r = qring(&["x", "y", "u", "v"]);
        let oracle =
            monomial_minimal_primes_oracle(&ideal_of(&r, &["x*u", "x*v", "y*u", "y*v"])).unwrap();
        let rendered: Vec<String> = oracle.iter().map(render_ideal).collect();
        assert_eq!(rendered, vec!["(x, y)", "(u, v)"]);

        let r3 = qring(&["x", "y", "z"]);
        let oracle = monomial_minimal_primes_oracle(&ideal_of(&r3, &["x"])).unwrap();
        assert_eq!(
            oracle.iter().map(render_ideal).collect::<Vec<_>>(),
            vec!["(x)"]
        );

        let oracle = monomial_minimal_primes_oracle(&ideal_of(&r3, &["x*z", "y*z"])).unwrap();
        let mut rendered: Vec<String> = oracle.iter().map(render_ideal).collect();
        rendered.sort();
        assert_eq!(rendered, vec!["(x, y)", "(z)"]);

        assert!(matches!(
            monomial_minimal_primes_oracle(&ideal_of(&r3, &["x + y"])),
            Err(DecomposeError::NonMonomialInput(_))
        ));
    }

    #[test]
    fn oracle_agrees_with_recursion_on_monomial_inputs() {
        let r = qring(&["x", "y", "z"]);
        for gens in [
            vec!["x*y", "x*z"],
            vec!["x*z", "y*z"],
            vec!["x^2", "x*y", "y^3"],
            vec!["x*y*z"],
            vec!["x^3"],
        ] {
            let ideal = ideal_of(&r, &gens);
            let recursion = minimal_primes(&ideal);
            assert!(recursion.complete);
            let oracle = monomial_minimal_primes_oracle(&ideal).unwrap();
            assert_eq!(recursion.primes.len(), oracle.len(), "gens {gens:?}");
            for o in &oracle {
                assert!(
                    recursion.prime_ideals().any(|p| p.same_ideal(o)),
                    "missing {} for {gens:?}",
                    render_ideal(o)
                );
            }
        }
    }

    #[test]
    fn splitting_mixed_generators() {
        // (x*(y - 1), y*z) splits into variable branches and a shifted line
        let r = qring(&["x", "y", "z"]);
        let result = minimal_primes(&ideal_of(&r, &["x*y - x", "y*z"]));
        assert!(result.complete);
        // V = V(x, y) u V(x, z) u V(y-1, z)
        let rendered = prime_strings(&result);
        assert_eq!(rendered.len(), 3, "{rendered:?}");
        assert!(rendered.contains(&"(x, y)".to_string()));
        assert!(rendered.contains(&"(x, z)".to_string()));
        assert!(rendered.contains(&"(y - 1, z)".to_string()));
    }

    #[test]
    fn every_prime_contains_the_input() {
        let r = qring(&["x", "y", "z"]);
        let ideal = ideal_of(&r, &["x*y", "x*z", "y^2 - z^2"]);
        let result = minimal_primes(&ideal);
        for p in &result.primes {
            assert!(p.ideal.contains_ideal(&ideal));
        }
        // pairwise incomparable
        for (i, p) in result.primes.iter().enumerate() {
            for (j, q) in result.primes.iter().enumerate() {
                if i != j {
                    assert!(!p.ideal.contains_ideal(&q.ideal));
                }
            }
        }
    }
}
