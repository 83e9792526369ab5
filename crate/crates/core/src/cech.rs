//! Z^n-graded Cech cohomology for monomial data.
//!
//! For a monomial ideal J and Cech generators m_1..m_s, every graded piece of
//! a localization of A/J is 0- or 1-dimensional, so the Cech complex in one
//! multidegree is a small 0/1-signed complex whose cohomology comes from
//! exact ranks over the coefficient field. Truncations H^i_a(A/(J + a^n))
//! provide finite evidence for the formal-cohomology values; inverse limits
//! are never formed.

use crate::groebner::{krull_dimension, Ideal};
use crate::linalg::matrix_rank;
use crate::monomial::Monomial;
use crate::poly::PolyRing;
use crate::scalar::Field;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CechError {
    #[error("generator `{0}` is not a monomial; the Cech engine accepts monomial data only")]
    NonMonomial(String),
    #[error("degree box needs {needed} cells, exceeding the budget of {budget}")]
    BudgetExceeded { needed: u128, budget: usize },
    #[error("degree box is malformed")]
    BadBox,
    #[error("truncation powers must start at 1 or higher")]
    BadPowers,
}

/// A finite per-variable degree interval, inclusive on both ends.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeBox {
    pub lo: Vec<i64>,
    pub hi: Vec<i64>,
}

impl DegreeBox {
    pub fn new(lo: Vec<i64>, hi: Vec<i64>) -> Result<Self, CechError> {
        if lo.len() != hi.len() || lo.iter().zip(&hi).any(|(l, h)| l > h) {
            return Err(CechError::BadBox);
        }
        Ok(DegreeBox { lo, hi })
    }

    /// The symmetric box [-bound, bound]^arity.
    pub fn symmetric(arity: usize, bound: i64) -> Self {
        DegreeBox {
            lo: vec![-bound; arity],
            hi: vec![bound; arity],
        }
    }

    pub fn arity(&self) -> usize {
        self.lo.len()
    }

    pub fn cell_count(&self) -> u128 {
        self.lo
            .iter()
            .zip(&self.hi)
            .map(|(l, h)| (h - l + 1) as u128)
            .product()
    }

    pub fn contains(&self, degree: &[i64]) -> bool {
        degree.len() == self.arity()
            && degree
                .iter()
                .enumerate()
                .all(|(i, d)| self.lo[i] <= *d && *d <= self.hi[i])
    }

    fn degree_at(&self, mut index: usize) -> Vec<i64> {
        let mut degree = vec![0i64; self.arity()];
        for i in (0..self.arity()).rev() {
            let width = (self.hi[i] - self.lo[i] + 1) as usize;
            degree[i] = self.lo[i] + (index % width) as i64;
            index /= width;
        }
        degree
    }
}

/// Monomial input data for one Cech run: the module A/J, the Cech generators,
/// and the degree box to scan.
#[derive(Debug, Clone)]
pub struct GradedCechInput<F: Field> {
    pub ambient: Arc<PolyRing<F>>,
    pub module_generators: Vec<Monomial>,
    pub cech_generators: Vec<Monomial>,
    pub degree_box: DegreeBox,
}

fn monomial_generators_of<F: Field>(ideal: &Ideal<F>) -> Result<Vec<Monomial>, CechError> {
    ideal
        .generators()
        .iter()
        .map(|g| {
            if g.is_term() {
                Ok(g.leading_monomial().unwrap().clone())
            } else {
                Err(CechError::NonMonomial(g.to_string()))
            }
        })
        .collect()
}

impl<F: Field> GradedCechInput<F> {
    pub fn new(
        module_ideal: &Ideal<F>,
        cech_ideal: &Ideal<F>,
        degree_box: DegreeBox,
    ) -> Result<Self, CechError> {
        let ambient = Arc::clone(module_ideal.ring());
        if degree_box.arity() != ambient.arity() {
            return Err(CechError::BadBox);
        }
        Ok(GradedCechInput {
            ambient,
            module_generators: monomial_generators_of(module_ideal)?,
            cech_generators: monomial_generators_of(cech_ideal)?,
            degree_box,
        })
    }
}

/// Dimension (0 or 1) of the localization of A/J at the product of the chosen
/// Cech generators, in multidegree `degree`.
///
/// The piece is nonzero iff the degree is nonnegative outside the inverted
/// variables and no monomial generator of J divides the virtual monomial with
/// those exponents and infinity on the inverted variables.
pub fn graded_piece_basis<F: Field>(
    localizing_set: &[usize],
    degree: &[i64],
    input: &GradedCechInput<F>,
) -> u8 {
    let n = input.ambient.arity();
    let mut inverted = vec![false; n];
    for &j in localizing_set {
        for v in input.cech_generators[j].support() {
            inverted[v] = true;
        }
    }
    piece_dim(&inverted, degree, &input.module_generators)
}

fn piece_dim(inverted: &[bool], degree: &[i64], module_generators: &[Monomial]) -> u8 {
    for (i, inv) in inverted.iter().enumerate() {
        if !inv && degree[i] < 0 {
            return 0;
        }
    }
    for g in module_generators {
        let kills = (0..inverted.len()).all(|i| inverted[i] || (g.exp(i) as i64) <= degree[i]);
        if kills {
            return 0;
        }
    }
    1
}

/// Per-degree cohomology dimensions over a box.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CechReport {
    /// Truncation exponent when this report is one member of a truncation
    /// family.
    pub power: Option<usize>,
    pub degree_box: DegreeBox,
    /// dim of A/J, for the vanishing checks; `None` for the zero module.
    pub module_dim: Option<usize>,
    /// Total of dims over the box, indexed by cohomological degree 0..=s.
    pub per_i_totals: Vec<usize>,
    /// The nonzero entries of the (i, multidegree) -> dim map.
    pub nonzero: Vec<CohomologyEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CohomologyEntry {
    pub i: usize,
    pub degree: Vec<i64>,
    pub dim: usize,
}

impl CechReport {
    pub fn dim_at(&self, i: usize, degree: &[i64]) -> usize {
        self.nonzero
            .iter()
            .find(|e| e.i == i && e.degree == degree)
            .map(|e| e.dim)
            .unwrap_or(0)
    }
}

/// Assemble the Cech complex of graded pieces in every degree of the box and
/// compute cohomology dimensions by exact rank over the field.
pub fn cech_cohomology_box<F: Field>(
    input: &GradedCechInput<F>,
    max_cells: usize,
) -> Result<CechReport, CechError> {
    let s = input.cech_generators.len();
    let cells = input
        .degree_box
        .cell_count()
        .saturating_mul(1u128 << s.min(64));
    if cells > max_cells as u128 {
        return Err(CechError::BudgetExceeded {
            needed: cells,
            budget: max_cells,
        });
    }

    let n = input.ambient.arity();
    // inverted-variable sets per subset of Cech generators
    let masks: Vec<Vec<bool>> = (0..(1u32 << s))
        .map(|mask| {
            let mut inv = vec![false; n];
            for j in 0..s {
                if mask & (1 << j) != 0 {
                    for v in input.cech_generators[j].support() {
                        inv[v] = true;
                    }
                }
            }
            inv
        })
        .collect();
    let levels: Vec<Vec<u32>> = (0..=s)
        .map(|i| {
            (0..(1u32 << s))
                .filter(|m| m.count_ones() as usize == i)
                .collect()
        })
        .collect();

    let field = input.ambient.field().clone();
    let degree_count = input.degree_box.cell_count() as usize;
    let per_degree: Vec<(Vec<i64>, Vec<usize>)> = (0..degree_count)
        .into_par_iter()
        .map(|idx| {
            let degree = input.degree_box.degree_at(idx);
            let dims = cohomology_at_degree(&field, &degree, &masks, &levels, input);
            (degree, dims)
        })
        .collect();

    let mut per_i_totals = vec![0usize; s + 1];
    let mut table: BTreeMap<(usize, Vec<i64>), usize> = BTreeMap::new();
    for (degree, dims) in per_degree {
        for (i, &h) in dims.iter().enumerate() {
            if h > 0 {
                per_i_totals[i] += h;
                table.insert((i, degree.clone()), h);
            }
        }
    }
    let module_dim = krull_dimension(&Ideal::new(
        Arc::clone(&input.ambient),
        input
            .module_generators
            .iter()
            .map(|m| {
                input
                    .ambient
                    .monomial(m.clone(), input.ambient.field().one())
            })
            .collect(),
    ));

    Ok(CechReport {
        power: None,
        degree_box: input.degree_box.clone(),
        module_dim,
        per_i_totals,
        nonzero: table
            .into_iter()
            .map(|((i, degree), dim)| CohomologyEntry { i, degree, dim })
            .collect(),
    })
}

fn cohomology_at_degree<F: Field>(
    field: &F,
    degree: &[i64],
    masks: &[Vec<bool>],
    levels: &[Vec<u32>],
    input: &GradedCechInput<F>,
) -> Vec<usize> {
    let s = levels.len() - 1;
    let alive: Vec<bool> = masks
        .iter()
        .map(|inv| piece_dim(inv, degree, &input.module_generators) == 1)
        .collect();
    let alive_at_level: Vec<Vec<u32>> = levels
        .iter()
        .map(|ms| ms.iter().copied().filter(|&m| alive[m as usize]).collect())
        .collect();

    let mut ranks = vec![0usize; s + 1];
    for i in 0..s {
        let cols = &alive_at_level[i];
        let rows = &alive_at_level[i + 1];
        if cols.is_empty() || rows.is_empty() {
            continue;
        }
        let matrix: Vec<Vec<F::Elem>> = rows
            .iter()
            .map(|&t| {
                cols.iter()
                    .map(|&c| {
                        if t & c == c && (t ^ c).count_ones() == 1 {
                            let j = (t ^ c).trailing_zeros();
                            let below = (c & ((1 << j) - 1)).count_ones();
                            field.from_int(if below % 2 == 0 { 1 } else { -1 })
                        } else {
                            field.zero()
                        }
                    })
                    .collect()
            })
            .collect();
        ranks[i] = matrix_rank(field, matrix);
    }

    (0..=s)
        .map(|i| {
            let chain = alive_at_level[i].len();
            let outgoing = if i < s { ranks[i] } else { 0 };
            let incoming = if i > 0 { ranks[i - 1] } else { 0 };
            chain - outgoing - incoming
        })
        .collect()
}

/// Multiset products of `n` generators, deduplicated: the generators of a^n.
pub fn ideal_power_generators(generators: &[Monomial], n: usize) -> Vec<Monomial> {
    assert!(n >= 1);
    let arity = generators.first().map(|m| m.arity()).unwrap_or(0);
    let mut out: Vec<Monomial> = Vec::new();
    let mut stack: Vec<(usize, usize, Monomial)> = vec![(0, n, Monomial::one(arity))];
    while let Some((start, left, acc)) = stack.pop() {
        if left == 0 {
            if !out.contains(&acc) {
                out.push(acc);
            }
            continue;
        }
        for (j, g) in generators.iter().enumerate().skip(start) {
            stack.push((j, left - 1, acc.mul(g)));
        }
    }
    out.sort_by(|a, b| a.exps().cmp(b.exps()));
    out
}

/// Default symmetric degree bound: max generator degree plus `n_max` times
/// the largest Cech generator degree.
pub fn default_degree_bound(
    module_generators: &[Monomial],
    cech_generators: &[Monomial],
    max_power: usize,
) -> i64 {
    let deg_bound = module_generators
        .iter()
        .chain(cech_generators)
        .map(|m| m.total_degree() as i64)
        .max()
        .unwrap_or(1);
    let gen_degree = cech_generators
        .iter()
        .map(|m| m.total_degree() as i64)
        .max()
        .unwrap_or(1);
    (deg_bound + max_power as i64 * gen_degree).max(1)
}

/// One Cech report per truncation exponent n, with module J + a^n. The
/// juxtaposed per-degree totals across n are finite evidence only; no limit
/// is formed.
pub fn truncated_formal_report<F: Field>(
    module_ideal: &Ideal<F>,
    cech_ideal: &Ideal<F>,
    powers: std::ops::RangeInclusive<usize>,
    degree_box: DegreeBox,
    max_cells: usize,
) -> Result<Vec<CechReport>, CechError> {
    if *powers.start() < 1 || powers.is_empty() {
        return Err(CechError::BadPowers);
    }
    let j_gens = monomial_generators_of(module_ideal)?;
    let a_gens = monomial_generators_of(cech_ideal)?;
    let ambient = Arc::clone(module_ideal.ring());
    let mut reports = Vec::new();
    for n in powers {
        let mut module = j_gens.clone();
        if !a_gens.is_empty() {
            module.extend(ideal_power_generators(&a_gens, n));
        }
        let input = GradedCechInput {
            ambient: Arc::clone(&ambient),
            module_generators: module,
            cech_generators: a_gens.clone(),
            degree_box: degree_box.clone(),
        };
        let mut report = cech_cohomology_box(&input, max_cells)?;
        report.power = Some(n);
        reports.push(report);
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::MonomialOrder;
    use crate::scalar::Rationals;

    const BUDGET: usize = 1_000_000;

    fn qring(vars: &[&str]) -> Arc<PolyRing<Rationals>> {
        PolyRing::new(Rationals, vars.to_vec(), MonomialOrder::GrevLex).unwrap()
    }

    fn ideal_of(ring: &Arc<PolyRing<Rationals>>, texts: &[&str]) -> Ideal<Rationals> {
        let gens = texts.iter().map(|t| ring.parse(t).unwrap()).collect();
        Ideal::new(Arc::clone(ring), gens)
    }

    fn input(
        ring: &Arc<PolyRing<Rationals>>,
        j: &[&str],
        a: &[&str],
        bound: i64,
    ) -> GradedCechInput<Rationals> {
        GradedCechInput::new(
            &ideal_of(ring, j),
            &ideal_of(ring, a),
            DegreeBox::symmetric(ring.arity(), bound),
        )
        .unwrap()
    }

    #[test]
    fn graded_pieces_of_localizations() {
        let r = qring(&["x", "y"]);
        let inp = input(&r, &[], &["x"], 5);
        // A localized at x allows negative x-degrees
        assert_eq!(graded_piece_basis(&[0], &[-3, 2], &inp), 1);
        // A itself has no negative degrees
        assert_eq!(graded_piece_basis(&[], &[-1, 0], &inp), 0);
        // x nilpotent on A/(x^n): localization vanishes everywhere
        let killed = input(&r, &["x^3"], &["x"], 5);
        for bx in -3..3 {
            for by in -3..3 {
                assert_eq!(graded_piece_basis(&[0], &[bx, by], &killed), 0);
            }
        }
    }

    #[test]
    fn h1_of_line_localization() {
        // A = k[x,y], a = (x): H^1 is 1-dimensional exactly at x-degree < 0,
        // y-degree >= 0; H^0 vanishes
        let r = qring(&["x", "y"]);
        let report = cech_cohomology_box(&input(&r, &[], &["x"], 4), BUDGET).unwrap();
        assert_eq!(report.per_i_totals[0], 0);
        for bx in -4..=4i64 {
            for by in -4..=4i64 {
                let expect = usize::from(bx < 0 && by >= 0);
                assert_eq!(report.dim_at(1, &[bx, by]), expect, "at ({bx},{by})");
            }
        }
        assert_eq!(report.per_i_totals[1], 4 * 5);
        assert_eq!(report.module_dim, Some(2));
    }

    #[test]
    fn h2_of_maximal_ideal_of_plane() {
        // A = k[x,y], a = (x,y): H^2 lives exactly in the negative quadrant
        let r = qring(&["x", "y"]);
        let report = cech_cohomology_box(&input(&r, &[], &["x", "y"], 4), BUDGET).unwrap();
        assert_eq!(report.per_i_totals[0], 0);
        assert_eq!(report.per_i_totals[1], 0);
        for bx in -4..=4i64 {
            for by in -4..=4i64 {
                let expect = usize::from(bx < 0 && by < 0);
                assert_eq!(report.dim_at(2, &[bx, by]), expect, "at ({bx},{by})");
            }
        }
        assert_eq!(report.per_i_totals[2], 16);
    }

    #[test]
    fn h2_of_coordinate_axes_ideal() {
        // A = k[x,y,z], a = (xy, xz): the C^1 pieces vanish at (-1,-1,-1) but
        // the C^2 piece survives, so H^2 is 1-dimensional there
        let r = qring(&["x", "y", "z"]);
        let report = cech_cohomology_box(&input(&r, &[], &["x*y", "x*z"], 3), BUDGET).unwrap();
        assert_eq!(report.dim_at(2, &[-1, -1, -1]), 1);
        assert_eq!(report.per_i_totals[0], 0);
    }

    #[test]
    fn truncations_vanish_for_nilpotent_cech_ideal() {
        // a = (x) acts nilpotently on A/(x^n): everything above H^0 dies
        let r = qring(&["x", "y"]);
        let reports = truncated_formal_report(
            &Ideal::zero(Arc::clone(&r)),
            &ideal_of(&r, &["x"]),
            1..=4,
            DegreeBox::symmetric(2, 5),
            BUDGET,
        )
        .unwrap();
        assert_eq!(reports.len(), 4);
        for (n, rep) in reports.iter().enumerate() {
            assert_eq!(rep.power, Some(n + 1));
            assert_eq!(rep.per_i_totals[1], 0);
            // H^0 counts the standard monomials of A/(x^n) in the box
            assert_eq!(rep.per_i_totals[0], (n + 1) * 6);
        }
    }

    #[test]
    fn truncation_h0_counts_standard_monomials() {
        // A = k[x1,x2,x3], a = (x1,x2), n = 2: H^0 equals the number of
        // monomials of A/a^2 inside the box's nonnegative orthant
        let r = qring(&["x1", "x2", "x3"]);
        let bound = 3i64;
        let reports = truncated_formal_report(
            &Ideal::zero(Arc::clone(&r)),
            &ideal_of(&r, &["x1", "x2"]),
            2..=2,
            DegreeBox::symmetric(3, bound),
            BUDGET,
        )
        .unwrap();
        let rep = &reports[0];
        // brute-force count: monomials with e1 + e2 <= 1, e3 in [0, bound]
        let mut count = 0;
        for e1 in 0..=bound {
            for e2 in 0..=bound {
                for _e3 in 0..=bound {
                    if e1 + e2 <= 1 {
                        count += 1;
                    }
                }
            }
        }
        assert_eq!(rep.per_i_totals[0], count as usize);
        for i in 1..rep.per_i_totals.len() {
            assert_eq!(rep.per_i_totals[i], 0);
        }
    }

    #[test]
    fn default_bound_formula() {
        let xy = Monomial::new(vec![1, 1]);
        let x3 = Monomial::new(vec![3, 0]);
        // max generator degree 3, plus 2 * max cech degree 2
        assert_eq!(default_degree_bound(&[x3], std::slice::from_ref(&xy), 2), 7);
        assert_eq!(default_degree_bound(&[], &[xy], 1), 4);
        assert_eq!(default_degree_bound(&[], &[], 3), 4);
    }

    #[test]
    fn power_generators() {
        let x = Monomial::new(vec![1, 0]);
        let y = Monomial::new(vec![0, 1]);
        let squares = ideal_power_generators(&[x, y], 2);
        assert_eq!(
            squares,
            vec![
                Monomial::new(vec![0, 2]),
                Monomial::new(vec![1, 1]),
                Monomial::new(vec![2, 0]),
            ]
        );
    }

    #[test]
    fn budget_is_enforced() {
        let r = qring(&["x", "y"]);
        let err = cech_cohomology_box(&input(&r, &[], &["x"], 100), 100).unwrap_err();
        assert!(matches!(err, CechError::BudgetExceeded { .. }));
    }

    #[test]
    fn non_monomial_input_is_rejected() {
        let r = qring(&["x", "y"]);
        let j = ideal_of(&r, &["x + y"]);
        let a = ideal_of(&r, &["x"]);
        let err = GradedCechInput::new(&j, &a, DegreeBox::symmetric(2, 2)).unwrap_err();
        assert!(matches!(err, CechError::NonMonomial(_)));
    }

    #[test]
    fn euler_characteristic_per_degree() {
        let r = qring(&["x", "y", "z"]);
        let inp = input(&r, &["x*y"], &["x*z", "y"], 2);
        let report = cech_cohomology_box(&inp, BUDGET).unwrap();
        // recompute chain dimensions independently and compare alternating sums
        let s = inp.cech_generators.len();
        for bx in -2..=2i64 {
            for by in -2..=2i64 {
                for bz in -2..=2i64 {
                    let b = [bx, by, bz];
                    let mut chain_sum = 0i64;
                    for mask in 0u32..(1 << s) {
                        let set: Vec<usize> = (0..s).filter(|j| mask & (1 << j) != 0).collect();
                        let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
                        chain_sum += sign * graded_piece_basis(&set, &b, &inp) as i64;
                    }
                    let mut coh_sum = 0i64;
                    for i in 0..=s {
                        let sign = if i % 2 == 0 { 1 } else { -1 };
                        coh_sum += sign * report.dim_at(i, &b) as i64;
                    }
                    assert_eq!(chain_sum, coh_sum, "Euler mismatch at {b:?}");
                }
            }
        }
    }
}
