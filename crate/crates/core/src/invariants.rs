//! Quotient-ring bookkeeping and the headline invariants: d, dim(R/a),
//! per-prime heights, the formal dimension, the vanishing bound d - c, the
//! equidimensionality criterion, corollary rules, and toric presentations.
//!
//! Heights follow the convention height(p) = d - dim(R/p); the bound uses
//! c = max height over minimal primes, while codim = d - dim(R/a) is reported
//! separately so both readings stay visible.

use crate::decompose::{minimal_primes, render_ideal, MinimalPrimesResult, PrimeCertificate};
use crate::groebner::{eliminate, krull_dimension, Ideal};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{PolyRing, Polynomial, RingError};
use crate::scalar::Field;
use serde::Serialize;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InvariantsError {
    #[error("defining ideal is the unit ideal; the quotient ring is zero")]
    UnitDefiningIdeal,
    #[error("the ideal is the unit ideal in the quotient; its variety is empty")]
    UnitPreimage,
    #[error("weights must be nonempty vectors of equal length")]
    BadWeights,
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// An ambient polynomial ring modulo a proper defining ideal, with its
/// dimension cached.
#[derive(Debug, Clone)]
pub struct QuotientRing<F: Field> {
    ambient: Arc<PolyRing<F>>,
    defining: Ideal<F>,
    dim: usize,
}

impl<F: Field> QuotientRing<F> {
    pub fn new(ambient: Arc<PolyRing<F>>, defining: Ideal<F>) -> Result<Self, InvariantsError> {
        let dim = krull_dimension(&defining).ok_or(InvariantsError::UnitDefiningIdeal)?;
        Ok(QuotientRing {
            ambient,
            defining,
            dim,
        })
    }

    pub fn ambient(&self) -> &Arc<PolyRing<F>> {
        &self.ambient
    }

    pub fn defining(&self) -> &Ideal<F> {
        &self.defining
    }

    /// d = dim R.
    pub fn dim(&self) -> usize {
        self.dim
    }
}

/// An ideal of a quotient ring, held as ambient representatives together with
/// its full preimage (defining ideal plus representatives).
#[derive(Debug, Clone)]
pub struct IdealInQuotient<F: Field> {
    ring: QuotientRing<F>,
    generators: Vec<Polynomial<F>>,
    preimage: Ideal<F>,
}

impl<F: Field> IdealInQuotient<F> {
    pub fn new(ring: QuotientRing<F>, generators: Vec<Polynomial<F>>) -> Self {
        let preimage = ring.defining().with_extra(&generators);
        IdealInQuotient {
            ring,
            generators,
            preimage,
        }
    }

    pub fn ring(&self) -> &QuotientRing<F> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.generators
    }

    pub fn preimage(&self) -> &Ideal<F> {
        &self.preimage
    }
}

/// User-asserted hypotheses and modeling notes carried in every report.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AssumptionFlags {
    pub complete_asserted: bool,
    pub cohen_macaulay_asserted: bool,
    pub field_modeled_as_q: bool,
    /// Always true: power-series brackets in the source material are modeled
    /// by polynomial rings.
    pub power_series_modeled_polynomially: bool,
}

impl AssumptionFlags {
    pub fn new(complete: bool, cohen_macaulay: bool, field_modeled_as_q: bool) -> Self {
        AssumptionFlags {
            complete_asserted: complete,
            cohen_macaulay_asserted: cohen_macaulay,
            field_modeled_as_q,
            power_series_modeled_polynomially: true,
        }
    }
}

/// The predictor's verdict under the vanishing criterion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PredictionVerdict {
    /// Equidimensionality holds and both hypotheses are asserted: the formal
    /// local cohomology vanishes above the bound.
    VanishingAboveBound { bound: usize },
    /// Equidimensionality fails with a complete decomposition: nonvanishing
    /// is expected at the formal dimension.
    NonvanishingExpectedAtFdim { bound: usize, witness_degree: usize },
    /// Decomposition incomplete or hypotheses not asserted; the computed
    /// numbers are still attached to the report.
    Indeterminate { bound: Option<usize> },
}

impl PredictionVerdict {
    pub fn describe(&self) -> String {
        match self {
            PredictionVerdict::VanishingAboveBound { bound } => {
                format!("vanishing for i > {bound}")
            }
            PredictionVerdict::NonvanishingExpectedAtFdim { witness_degree, .. } => {
                format!("nonvanishing expected at i = {witness_degree}")
            }
            PredictionVerdict::Indeterminate { .. } => "indeterminate".to_string(),
        }
    }
}

/// One minimal prime as it appears in a report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeSummary {
    pub gens: Vec<String>,
    pub dim: usize,
    pub height: usize,
    pub certificate: PrimeCertificate,
}

/// The serializable invariant report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub d: usize,
    pub dim_quotient: usize,
    pub codim: usize,
    pub primes: Vec<PrimeSummary>,
    pub fdim: usize,
    pub small_height: Option<usize>,
    pub big_height: Option<usize>,
    pub equidimensional: bool,
    pub vanishing_bound: Option<usize>,
    pub condition2: Option<bool>,
    pub prediction: PredictionVerdict,
    pub assumptions: AssumptionFlags,
    pub decomposition_complete: bool,
    pub residuals: Vec<String>,
}

/// A report bundled with the decomposition it came from, for callers that
/// need the actual prime ideals (corollary rules, audits).
#[derive(Debug, Clone)]
pub struct InvariantAnalysis<F: Field> {
    pub report: InvariantReport,
    pub decomposition: MinimalPrimesResult<F>,
}

/// Compute the invariant report for `a` in its quotient ring.
///
/// The formal dimension is reported as dim(R/a), which always equals the
/// maximum of dim(R/p) over the minimal primes; when the decomposition is
/// complete the two routes are cross-checked.
pub fn invariant_report<F: Field>(
    a: &IdealInQuotient<F>,
    assumptions: AssumptionFlags,
) -> Result<InvariantAnalysis<F>, InvariantsError> {
    let d = a.ring().dim();
    let dim_quotient = krull_dimension(a.preimage()).ok_or(InvariantsError::UnitPreimage)?;
    let decomposition = minimal_primes(a.preimage());

    let primes: Vec<PrimeSummary> = decomposition
        .primes
        .iter()
        .map(|p| PrimeSummary {
            gens: p.ideal.generators().iter().map(|g| g.to_string()).collect(),
            dim: p.quotient_dim,
            height: d - p.quotient_dim,
            certificate: p.certificate,
        })
        .collect();

    let fdim = dim_quotient;
    if decomposition.complete {
        let max_over_primes = primes.iter().map(|p| p.dim).max();
        debug_assert_eq!(max_over_primes, Some(fdim));
    }
    let small_height = primes.iter().map(|p| p.height).min();
    let big_height = primes.iter().map(|p| p.height).max();
    let vanishing_bound = big_height.map(|c| d - c);
    let equidimensional = primes.windows(2).all(|w| w[0].dim == w[1].dim);
    let condition2 = if decomposition.complete {
        Some(equidimensional && Some(fdim) == vanishing_bound)
    } else {
        None
    };

    let both_asserted = assumptions.complete_asserted && assumptions.cohen_macaulay_asserted;
    let prediction = match (condition2, both_asserted) {
        (Some(true), true) => PredictionVerdict::VanishingAboveBound {
            bound: vanishing_bound.expect("condition2 implies a bound"),
        },
        (Some(false), true) => PredictionVerdict::NonvanishingExpectedAtFdim {
            bound: vanishing_bound.expect("complete nonempty decomposition"),
            witness_degree: fdim,
        },
        _ => PredictionVerdict::Indeterminate {
            bound: vanishing_bound,
        },
    };

    let report = InvariantReport {
        d,
        dim_quotient,
        codim: d - dim_quotient,
        primes,
        fdim,
        small_height,
        big_height,
        equidimensional,
        vanishing_bound,
        condition2,
        prediction,
        assumptions,
        decomposition_complete: decomposition.complete,
        residuals: decomposition.residuals.iter().map(render_ideal).collect(),
    };
    Ok(InvariantAnalysis {
        report,
        decomposition,
    })
}

/// Extra user-asserted flags feeding the corollary rules.
#[derive(Clone, Copy, Debug, Default)]
pub struct CorollaryFlags {
    pub regular_asserted: bool,
    pub ideal_is_prime: bool,
}

/// A corollary rule that applied to a report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum CorollaryVerdict {
    /// Set-theoretic complete intersection in a regular ring: vanishing for
    /// i > c where c is the generator count.
    SetTheoreticCompleteIntersection { c: usize },
    /// The ideal is prime: the single expected nonvanishing degree is its
    /// height.
    PrimeIdeal { nonvanishing_degree: usize },
}

impl CorollaryVerdict {
    pub fn describe(&self) -> String {
        match self {
            CorollaryVerdict::SetTheoreticCompleteIntersection { c } => {
                format!("set-theoretic complete intersection: vanishing for i > {c}")
            }
            CorollaryVerdict::PrimeIdeal {
                nonvanishing_degree,
            } => {
                format!("prime ideal: nonvanishing only at i = {nonvanishing_degree}")
            }
        }
    }
}

/// Apply the corollary rules to a computed analysis.
///
/// The prime-ideal rule fires when the caller asserts primality or when the
/// decomposition itself certifies the preimage prime (complete, one minimal
/// prime, equal to the preimage).
pub fn corollary_rules<F: Field>(
    analysis: &InvariantAnalysis<F>,
    a: &IdealInQuotient<F>,
    extra: CorollaryFlags,
) -> Vec<CorollaryVerdict> {
    let mut verdicts = Vec::new();
    let report = &analysis.report;
    if extra.regular_asserted && a.generators().len() == report.codim {
        verdicts.push(CorollaryVerdict::SetTheoreticCompleteIntersection { c: report.codim });
    }
    let certified_prime = analysis.decomposition.complete
        && analysis.decomposition.primes.len() == 1
        && analysis.decomposition.primes[0]
            .ideal
            .same_ideal(a.preimage());
    if extra.ideal_is_prime || certified_prime {
        if let Some(height) = report.big_height {
            verdicts.push(CorollaryVerdict::PrimeIdeal {
                nonvanishing_degree: height,
            });
        }
    }
    verdicts
}

/// Present the monomial subring k[s^w1, s^w2, ...] as a polynomial ring on
/// one variable per weight modulo the kernel of the monomial map, computed by
/// elimination. Every returned generator maps to zero under the substitution,
/// which is checked before returning.
pub fn toric_presentation<F: Field>(
    field: F,
    var_names: &[String],
    weights: &[Vec<u32>],
) -> Result<(Arc<PolyRing<F>>, Ideal<F>), InvariantsError> {
    if weights.is_empty()
        || weights.len() != var_names.len()
        || weights
            .iter()
            .any(|w| w.len() != weights[0].len() || w.is_empty())
    {
        return Err(InvariantsError::BadWeights);
    }
    let param_count = weights[0].len();
    let param_names = fresh_parameter_names(param_count, var_names);

    let mut big_vars: Vec<String> = param_names.clone();
    big_vars.extend(var_names.iter().cloned());
    let big_ring = PolyRing::new(
        field.clone(),
        big_vars,
        MonomialOrder::Block { split: param_count },
    )?;

    let gens: Vec<Polynomial<F>> = weights
        .iter()
        .enumerate()
        .map(|(i, w)| {
            let mut exps = vec![0u32; big_ring.arity()];
            exps[..param_count].copy_from_slice(w);
            let monomial = big_ring.monomial(Monomial::new(exps), field.one());
            big_ring.var(param_count + i).sub(&monomial)
        })
        .collect();
    let ideal = Ideal::new(Arc::clone(&big_ring), gens);
    let presentation = eliminate(&ideal, &(0..param_count).collect::<Vec<_>>());

    // substitution check: generators vanish under var_i -> s^(w_i)
    let param_ring = PolyRing::new(field.clone(), param_names, MonomialOrder::GrevLex)?;
    let images: Vec<Polynomial<F>> = weights
        .iter()
        .map(|w| param_ring.monomial(Monomial::new(w.clone()), field.one()))
        .collect();
    for g in presentation.generators() {
        assert!(
            g.substitute(&param_ring, &images).is_zero(),
            "presentation generator fails the substitution check"
        );
    }
    Ok((Arc::clone(presentation.ring()), presentation))
}

/// The parameter names a toric presentation will use alongside the given
/// presentation variable names.
pub fn toric_parameter_names(weights: &[Vec<u32>], taken: &[String]) -> Vec<String> {
    let count = weights.first().map(|w| w.len()).unwrap_or(0);
    fresh_parameter_names(count, taken)
}

fn fresh_parameter_names(count: usize, taken: &[String]) -> Vec<String> {
    let preferred = ["s", "t", "u", "v", "w"];
    let mut names = Vec::with_capacity(count);
    let mut fallback = 0usize;
    for i in 0..count {
        let candidate = if i < preferred.len() && !taken.contains(&preferred[i].to_string()) {
            preferred[i].to_string()
        } else {
            loop {
                let c = format!("s{fallback}");
                fallback += 1;
                if !taken.contains(&c) {
                    break c;
                }
            }
        };
        names.push(candidate);
    }
    names
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rationals;

    fn qring(vars: &[&str]) -> Arc<PolyRing<Rationals>> {
        PolyRing::new(Rationals, vars.to_vec(), MonomialOrder::GrevLex).unwrap()
    }

    fn quotient(ring: &Arc<PolyRing<Rationals>>, defining: &[&str]) -> QuotientRing<Rationals> {
        let gens = defining.iter().map(|t| ring.parse(t).unwrap()).collect();
        QuotientRing::new(Arc::clone(ring), Ideal::new(Arc::clone(ring), gens)).unwrap()
    }

    fn ideal_in(q: &QuotientRing<Rationals>, gens: &[&str]) -> IdealInQuotient<Rationals> {
        let ring = Arc::clone(q.ambient());
        IdealInQuotient::new(
            q.clone(),
            gens.iter().map(|t| ring.parse(t).unwrap()).collect(),
        )
    }

    fn asserted() -> AssumptionFlags {
        AssumptionFlags::new(true, true, false)
    }

    #[test]
    fn hyperplane_in_the_plane() {
        let r = qring(&["x", "y"]);
        let q = quotient(&r, &[]);
        let a = ideal_in(&q, &["x"]);
        let analysis = invariant_report(&a, asserted()).unwrap();
        let rep = &analysis.report;
        assert_eq!(rep.d, 2);
        assert_eq!(rep.fdim, 1);
        assert_eq!(rep.big_height, Some(1));
        assert_eq!(rep.vanishing_bound, Some(1));
        assert_eq!(rep.condition2, Some(true));
        assert_eq!(
            rep.prediction,
            PredictionVerdict::VanishingAboveBound { bound: 1 }
        );
    }

    #[test]
    fn coordinate_axes_fail_condition_two() {
        let r = qring(&["x", "y", "z"]);
        let q = quotient(&r, &[]);
        let a = ideal_in(&q, &["x*y", "x*z"]);
        let analysis = invariant_report(&a, asserted()).unwrap();
        let rep = &analysis.report;
        assert_eq!(rep.d, 3);
        assert_eq!(rep.dim_quotient, 2);
        assert_eq!(rep.fdim, 2);
        assert_eq!(rep.small_height, Some(1));
        assert_eq!(rep.big_height, Some(2));
        assert_eq!(rep.vanishing_bound, Some(1));
        assert!(!rep.equidimensional);
        assert_eq!(rep.condition2, Some(false));
        assert_eq!(
            rep.prediction,
            PredictionVerdict::NonvanishingExpectedAtFdim {
                bound: 1,
                witness_degree: 2
            }
        );
        assert_eq!(rep.primes.len(), 2);
        assert_eq!(rep.primes[0].gens, vec!["x"]);
        assert_eq!(rep.primes[0].dim, 2);
        assert_eq!(rep.primes[0].height, 1);
        assert_eq!(rep.primes[1].gens, vec!["y", "z"]);
    }

    #[test]
    fn maximal_ideal_has_bound_zero() {
        let r = qring(&["x", "y", "z"]);
        let q = quotient(&r, &[]);
        let a = ideal_in(&q, &["x", "y", "z"]);
        let rep = invariant_report(&a, asserted()).unwrap().report;
        assert_eq!(rep.fdim, 0);
        assert_eq!(rep.vanishing_bound, Some(0));
        assert_eq!(rep.condition2, Some(true));
    }

    #[test]
    fn quotient_by_yz_example() {
        let r = qring(&["x", "y", "z"]);
        let q = quotient(&r, &["y*z"]);
        let a = ideal_in(&q, &["x", "y"]);
        let rep = invariant_report(&a, asserted()).unwrap().report;
        assert_eq!(rep.d, 2);
        assert_eq!(rep.dim_quotient, 1);
        assert_eq!(rep.codim, 1);
        assert_eq!(rep.fdim, 1);
        assert_eq!(rep.big_height, Some(1));
        assert_eq!(rep.vanishing_bound, Some(1));
    }

    #[test]
    fn unasserted_assumptions_mean_indeterminate() {
        let r = qring(&["x", "y"]);
        let q = quotient(&r, &[]);
        let a = ideal_in(&q, &["x"]);
        let rep = invariant_report(&a, AssumptionFlags::new(true, false, false))
            .unwrap()
            .report;
        assert_eq!(
            rep.prediction,
            PredictionVerdict::Indeterminate { bound: Some(1) }
        );
        assert_eq!(rep.condition2, Some(true));
    }

    #[test]
    fn unit_preimage_is_a_distinct_outcome() {
        let r = qring(&["x", "y"]);
        let q = quotient(&r, &[]);
        let a = ideal_in(&q, &["x", "x - 1"]);
        assert_eq!(
            invariant_report(&a, asserted()).unwrap_err(),
            InvariantsError::UnitPreimage
        );
    }

    #[test]
    fn corollary_rules_fire_as_specified() {
        // regular sequence: d = 4, a = (x1, x2)
        let r = qring(&["x1", "x2", "x3", "x4"]);
        let q = quotient(&r, &[]);
        let a = ideal_in(&q, &["x1", "x2"]);
        let analysis = invariant_report(&a, asserted()).unwrap();
        let verdicts = corollary_rules(
            &analysis,
            &a,
            CorollaryFlags {
                regular_asserted: true,
                ideal_is_prime: false,
            },
        );
        assert!(verdicts.contains(&CorollaryVerdict::SetTheoreticCompleteIntersection { c: 2 }));
        // (x1, x2) is also certified prime with height 2
        assert!(verdicts.contains(&CorollaryVerdict::PrimeIdeal {
            nonvanishing_degree: 2
        }));

        let none = corollary_rules(
            &analysis,
            &a,
            CorollaryFlags {
                regular_asserted: false,
                ideal_is_prime: false,
            },
        );
        // without the regularity flag only the certified-prime rule remains
        assert_eq!(
            none,
            vec![CorollaryVerdict::PrimeIdeal {
                nonvanishing_degree: 2
            }]
        );
    }

    #[test]
    fn prime_rule_on_plane_in_three_space() {
        let r = qring(&["x", "y", "z"]);
        let q = quotient(&r, &[]);
        let a = ideal_in(&q, &["x", "y"]);
        let analysis = invariant_report(&a, asserted()).unwrap();
        let verdicts = corollary_rules(&analysis, &a, CorollaryFlags::default());
        assert_eq!(
            verdicts,
            vec![CorollaryVerdict::PrimeIdeal {
                nonvanishing_degree: 2
            }]
        );
    }

    #[test]
    fn toric_presentation_of_the_pinched_cone() {
        let names: Vec<String> = ["a", "b", "c", "d"].iter().map(|s| s.to_string()).collect();
        let weights = vec![vec![4, 0], vec![3, 1], vec![1, 3], vec![0, 4]];
        let (ring, ideal) = toric_presentation(Rationals, &names, &weights).unwrap();
        assert_eq!(ring.vars(), &["a", "b", "c", "d"]);
        for want in ["b*c - a*d", "b^3 - a^2*c", "c^3 - b*d^2"] {
            assert!(ideal.contains(&ring.parse(want).unwrap()), "missing {want}");
        }
        assert_eq!(krull_dimension(&ideal), Some(2));
    }

    #[test]
    fn toric_presentation_of_a_polynomial_ring() {
        let names: Vec<String> = ["a", "b"].iter().map(|s| s.to_string()).collect();
        let weights = vec![vec![1, 0], vec![0, 1]];
        let (_, ideal) = toric_presentation(Rationals, &names, &weights).unwrap();
        assert!(ideal.generators().is_empty());
    }

    #[test]
    fn toric_fdim_for_the_numerical_example() {
        let names: Vec<String> = ["a", "b", "c", "d"].iter().map(|s| s.to_string()).collect();
        let weights = vec![vec![4, 0], vec![3, 1], vec![1, 3], vec![0, 4]];
        let (ring, ideal) = toric_presentation(Rationals, &names, &weights).unwrap();
        let q = QuotientRing::new(Arc::clone(&ring), ideal).unwrap();
        assert_eq!(q.dim(), 2);
        let a = IdealInQuotient::new(q, vec![ring.parse("a").unwrap(), ring.parse("b").unwrap()]);
        let rep = invariant_report(&a, asserted()).unwrap().report;
        assert_eq!(rep.fdim, 1);
        assert_eq!(rep.vanishing_bound, Some(1));
        assert_eq!(rep.condition2, Some(true));
        assert_eq!(rep.primes.len(), 1);
        assert_eq!(rep.primes[0].gens, vec!["a", "b", "c"]);
    }

    #[test]
    fn scaling_and_redundancy_leave_reports_unchanged() {
        let r = qring(&["x", "y", "z"]);
        let q = quotient(&r, &["y*z"]);
        let a = ideal_in(&q, &["x", "y"]);
        let base = invariant_report(&a, asserted()).unwrap().report;

        let scaled = ideal_in(&q, &["5*x", "y"]);
        let scaled_rep = invariant_report(&scaled, asserted()).unwrap().report;
        assert_eq!(base, scaled_rep);

        // x + y lies in the preimage already
        let redundant = ideal_in(&q, &["x", "y", "x + y"]);
        let red_rep = invariant_report(&redundant, asserted()).unwrap().report;
        assert_eq!(base, red_rep);
    }
}
