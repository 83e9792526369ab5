//! Execute a parsed session against the concrete coefficient field and
//! produce one report value, rendered both as JSON and as text.

use crate::cech::{truncated_formal_report, CechError, CechReport, DegreeBox};
use crate::groebner::Ideal;
use crate::invariants::{
    corollary_rules, invariant_report, toric_presentation, AssumptionFlags, CorollaryFlags,
    CorollaryVerdict, IdealInQuotient, InvariantAnalysis, InvariantReport, InvariantsError,
    QuotientRing,
};
use crate::monomial::MonomialOrder;
use crate::parse::ParseError;
use crate::poly::{PolyRing, Polynomial};
use crate::scalar::{Field, FieldSpec, PrimeField, Rationals};
use crate::session::{Session, Task};
use serde::Serialize;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RunError {
    #[error("{0}")]
    Input(String),
    #[error("cech task: {0}")]
    Cech(#[from] CechError),
}

impl RunError {
    fn from_parse(err: ParseError, source: &str) -> Self {
        RunError::Input(err.describe(source))
    }
}

/// Execution knobs: the Cech cell budget and corpus-entry modeling flags.
#[derive(Debug, Clone)]
pub struct RunOptions {
    pub max_cells: usize,
    /// Set for corpus entries whose source field (k or C) is modeled by Q.
    pub field_modeled_as_q: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            max_cells: 1_000_000,
            field_modeled_as_q: false,
        }
    }
}

/// Echo of the declared objects, rendered canonically.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SessionEcho {
    pub ring: String,
    pub ideal: String,
    pub order: String,
    pub assume_complete: bool,
    pub assume_cm: bool,
    pub assume_regular: bool,
}

/// Result of a toric task: the presentation ideal and parameter names.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ToricSummary {
    pub parameters: Vec<String>,
    pub presentation_generators: Vec<String>,
    pub presentation_dim: usize,
}

/// One audit-table row produced by the corpus runner.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditRow {
    pub id: String,
    pub field: String,
    pub computed: String,
    pub expected: String,
    pub provenance: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub paper_claim: Option<String>,
    pub status: String,
}

/// The full report for one session. Invariant fields are flattened into the
/// top level of the JSON document.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SessionOutput {
    pub session: SessionEcho,
    pub outcome: String,
    #[serde(flatten)]
    pub invariants: Option<InvariantReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub corollaries: Option<Vec<CorollaryVerdict>>,
    pub cech: Vec<CechReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub toric: Option<ToricSummary>,
    pub audit: Vec<AuditRow>,
}

pub fn run_session(session: &Session, opts: &RunOptions) -> Result<SessionOutput, RunError> {
    match session.field {
        FieldSpec::Rationals => run_typed(session, Rationals, opts),
        FieldSpec::PrimeField { characteristic } => {
            let field =
                PrimeField::new(characteristic).map_err(|e| RunError::Input(e.to_string()))?;
            run_typed(session, field, opts)
        }
    }
}

fn run_typed<F: Field>(
    session: &Session,
    field: F,
    opts: &RunOptions,
) -> Result<SessionOutput, RunError> {
    let src = &session.source;
    let ring = PolyRing::new(
        field.clone(),
        session.variables.clone(),
        MonomialOrder::GrevLex,
    )
    .map_err(|e| RunError::Input(e.to_string()))?;

    let defining: Vec<Polynomial<F>> = session
        .defining
        .iter()
        .map(|ast| ast.instantiate(&ring))
        .collect::<Result<_, _>>()
        .map_err(|e| RunError::from_parse(e, src))?;
    let ideal_gens: Vec<Polynomial<F>> = session
        .ideal_generators
        .iter()
        .map(|ast| ast.instantiate(&ring))
        .collect::<Result<_, _>>()
        .map_err(|e| RunError::from_parse(e, src))?;

    // a toric task supplies the defining ideal by elimination
    let toric_weights = session.tasks.iter().find_map(|t| match t {
        Task::Toric { weights } => Some(weights.clone()),
        _ => None,
    });
    let (quotient, toric) = match toric_weights {
        Some(weights) => {
            if !defining.is_empty() {
                return Err(RunError::Input(
                    "a toric task requires a ring declared without a defining ideal".to_string(),
                ));
            }
            if weights.len() != ring.arity() {
                return Err(RunError::Input(format!(
                    "toric task declares {} weights for {} ring variables",
                    weights.len(),
                    ring.arity()
                )));
            }
            let (pring, pideal) = toric_presentation(field.clone(), ring.vars(), &weights)
                .map_err(|e| RunError::Input(e.to_string()))?;
            let parameters = crate::invariants::toric_parameter_names(&weights, ring.vars());
            let summary = ToricSummary {
                parameters,
                presentation_generators: pideal
                    .groebner_basis()
                    .elements()
                    .iter()
                    .map(|g| g.to_string())
                    .collect(),
                presentation_dim: crate::groebner::krull_dimension(&pideal)
                    .expect("toric ideals are proper"),
            };
            let q = QuotientRing::new(pring, pideal).map_err(|e| RunError::Input(e.to_string()))?;
            (q, Some(summary))
        }
        None => {
            let q = QuotientRing::new(
                Arc::clone(&ring),
                Ideal::new(Arc::clone(&ring), defining.clone()),
            )
            .map_err(|e| RunError::Input(e.to_string()))?;
            (q, None)
        }
    };

    // the ideal's representatives live in the (possibly presentation) ambient
    let ambient = Arc::clone(quotient.ambient());
    let ideal_gens: Vec<Polynomial<F>> = if Arc::ptr_eq(&ambient, &ring) {
        ideal_gens
    } else {
        session
            .ideal_generators
            .iter()
            .map(|ast| ast.instantiate(&ambient))
            .collect::<Result<_, _>>()
            .map_err(|e| RunError::from_parse(e, src))?
    };
    let a = IdealInQuotient::new(quotient.clone(), ideal_gens);

    let echo = SessionEcho {
        ring: render_ring_decl(session, &quotient),
        ideal: format!(
            "{} = ({})",
            session.ideal_name,
            a.generators()
                .iter()
                .map(|g| g.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        ),
        order: ambient.order().to_string(),
        assume_complete: session.assume_complete,
        assume_cm: session.assume_cm,
        assume_regular: session.assume_regular,
    };

    let assumptions = AssumptionFlags::new(
        session.assume_complete,
        session.assume_cm,
        opts.field_modeled_as_q,
    );
    let analysis: InvariantAnalysis<F> = match invariant_report(&a, assumptions) {
        Ok(analysis) => analysis,
        Err(InvariantsError::UnitPreimage) => {
            return Ok(SessionOutput {
                session: echo,
                outcome: "empty_variety".to_string(),
                invariants: None,
                corollaries: None,
                cech: Vec::new(),
                toric,
                audit: Vec::new(),
            });
        }
        Err(e) => return Err(RunError::Input(e.to_string())),
    };

    let corollaries = if session.tasks.contains(&Task::Corollaries) {
        Some(corollary_rules(
            &analysis,
            &a,
            CorollaryFlags {
                regular_asserted: session.assume_regular,
                ideal_is_prime: false,
            },
        ))
    } else {
        None
    };

    let mut cech = Vec::new();
    for task in &session.tasks {
        if let Task::Cech { box_bound, powers } = task {
            let cech_ideal = Ideal::new(Arc::clone(&ambient), a.generators().to_vec());
            let reports = truncated_formal_report(
                quotient.defining(),
                &cech_ideal,
                powers.0..=powers.1,
                DegreeBox::symmetric(ambient.arity(), *box_bound),
                opts.max_cells,
            )?;
            cech.extend(reports);
        }
    }

    Ok(SessionOutput {
        session: echo,
        outcome: "ok".to_string(),
        invariants: Some(analysis.report),
        corollaries,
        cech,
        toric,
        audit: Vec::new(),
    })
}

fn render_ring_decl<F: Field>(session: &Session, quotient: &QuotientRing<F>) -> String {
    let vars = session.variables.join(",");
    let defining = quotient.defining();
    if defining.generators().is_empty() {
        format!("{} = {}[{}]", session.ring_name, session.field, vars)
    } else {
        format!(
            "{} = {}[{}] / ({})",
            session.ring_name,
            session.field,
            vars,
            defining
                .generators()
                .iter()
                .map(|g| g.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        )
    }
}

/// Human-readable rendering generated from the same value as the JSON.
pub fn render_text(output: &SessionOutput) -> String {
    let mut s = String::new();
    let echo = &output.session;
    s.push_str(&format!("ring  {}   [{}]\n", echo.ring, echo.order));
    s.push_str(&format!("ideal {}\n", echo.ideal));
    s.push_str(&format!(
        "assume: complete={} cm={} regular={}\n",
        echo.assume_complete, echo.assume_cm, echo.assume_regular
    ));
    if let Some(toric) = &output.toric {
        s.push_str(&format!(
            "toric presentation over parameters ({}): ({})  [dim {}]\n",
            toric.parameters.join(", "),
            toric.presentation_generators.join(", "),
            toric.presentation_dim
        ));
    }
    if output.outcome == "empty_variety" {
        s.push_str("outcome: the ideal is the unit ideal; its variety is empty\n");
        return s;
    }
    let rep = output.invariants.as_ref().expect("ok outcome has a report");
    s.push_str(&format!("d (dim R)            = {}\n", rep.d));
    s.push_str(&format!("dim R/a              = {}\n", rep.dim_quotient));
    s.push_str(&format!("codim                = {}\n", rep.codim));
    s.push_str("minimal primes:\n");
    for p in &rep.primes {
        s.push_str(&format!(
            "  ({})  dim {}  height {}  [{}]\n",
            p.gens.join(", "),
            p.dim,
            p.height,
            p.certificate.label()
        ));
    }
    if !rep.residuals.is_empty() {
        s.push_str(&format!(
            "uncertified residual branches: {}\n",
            rep.residuals.join("; ")
        ));
    }
    s.push_str(&format!("fdim                 = {}\n", rep.fdim));
    s.push_str(&format!(
        "heights              = {}\n",
        match (rep.small_height, rep.big_height) {
            (Some(a), Some(b)) => format!("min {a}, max {b}"),
            _ => "unavailable".to_string(),
        }
    ));
    s.push_str(&format!("equidimensional      = {}\n", rep.equidimensional));
    s.push_str(&format!(
        "vanishing bound d-c  = {}\n",
        rep.vanishing_bound
            .map(|b| b.to_string())
            .unwrap_or_else(|| "unavailable".to_string())
    ));
    s.push_str(&format!(
        "condition (2)        = {}\n",
        match rep.condition2 {
            Some(true) => "holds",
            Some(false) => "fails",
            None => "indeterminate",
        }
    ));
    s.push_str(&format!("prediction: {}\n", rep.prediction.describe()));
    if rep.assumptions.field_modeled_as_q {
        s.push_str("note: source field modeled as Q\n");
    }
    s.push_str("note: power series modeled polynomially\n");
    if let Some(corollaries) = &output.corollaries {
        if corollaries.is_empty() {
            s.push_str("corollaries: none applied\n");
        } else {
            for c in corollaries {
                s.push_str(&format!("corollary: {}\n", c.describe()));
            }
        }
    }
    for rep in &output.cech {
        let label = rep
            .power
            .map(|n| format!("n={n}"))
            .unwrap_or_else(|| "plain".to_string());
        s.push_str(&format!(
            "cech {label}: totals {:?} over box [{},{}]^{} (finite evidence only)\n",
            rep.per_i_totals,
            rep.degree_box.lo[0],
            rep.degree_box.hi[0],
            rep.degree_box.arity()
        ));
    }
    s
}
