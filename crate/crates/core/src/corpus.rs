//! The built-in example corpus and its consistency audit.
//!
//! Every entry is a session in the input language plus expected values with a
//! provenance tag. `paper` marks values the source material prints and the
//! computation reproduces; `derived` marks values established independently
//! (hand division, cover enumeration, substitution checks) before the build.
//! Where the source material prints something else, the printed claim is
//! attached and the audit reports a `paper_inconsistency` row; that is never
//! a failure. A `mismatch` row (computed differs from expected) is.

use crate::runner::{run_session, AuditRow, RunError, RunOptions, SessionOutput};
use crate::session::parse_session;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Paper,
    Derived,
}

impl Provenance {
    fn label(&self) -> &'static str {
        match self {
            Provenance::Paper => "paper",
            Provenance::Derived => "derived",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Expectation {
    pub field: &'static str,
    pub expected: &'static str,
    pub provenance: Provenance,
    /// The value printed in the source material when it differs from the
    /// derived one.
    pub paper_claim: Option<&'static str>,
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub id: &'static str,
    pub session_text: &'static str,
    pub field_modeled_as_q: bool,
    pub expectations: Vec<Expectation>,
}

fn expect(field: &'static str, expected: &'static str, provenance: Provenance) -> Expectation {
    Expectation {
        field,
        expected,
        provenance,
        paper_claim: None,
    }
}

fn expect_vs_paper(
    field: &'static str,
    expected: &'static str,
    paper_claim: &'static str,
) -> Expectation {
    Expectation {
        field,
        expected,
        provenance: Provenance::Derived,
        paper_claim: Some(paper_claim),
    }
}

use Provenance::{Derived, Paper};

/// The fourteen worked examples.
pub fn corpus_entries() -> Vec<CorpusEntry> {
    vec![
        CorpusEntry {
            id: "ex:poly",
            session_text: "ring R = Q[x,y]; ideal a = (x); assume complete; assume cm; \
                           task invariants; task cech box=6 powers=1..4;",
            field_modeled_as_q: true,
            expectations: vec![
                expect("d", "2", Paper),
                expect("big_height", "1", Paper),
                expect("vanishing_bound", "1", Paper),
                expect("fdim", "1", Paper),
                expect("minimal_primes", "[(x)]", Paper),
                expect("condition2", "true", Paper),
                expect("prediction", "vanishing for i > 1", Paper),
                expect("cech_higher_totals", "0", Derived),
            ],
        },
        CorpusEntry {
            id: "ex:non-equi",
            session_text: "ring R = Q[x,y,z] / (x*z); ideal a = (x); assume complete; \
                           assume cm; task invariants; task cech box=5 powers=1..3;",
            field_modeled_as_q: true,
            expectations: vec![
                expect("d", "2", Paper),
                expect_vs_paper("minimal_primes", "[(x)]", "(x), (x,z)"),
                expect("fdim", "2", Paper),
                expect_vs_paper("big_height", "0", "height(a) = 1"),
                expect("vanishing_bound", "2", Derived),
                expect_vs_paper(
                    "cech_higher_totals",
                    "0",
                    "F^2 claimed to contain H^2_(x)(k[y,z]/(z)) = k[y], nonzero",
                ),
            ],
        },
        CorpusEntry {
            id: "ex:reg-seq",
            session_text: "ring R = Q[x1,x2,x3,x4]; ideal a = (x1, x2); assume complete; \
                           assume cm; assume regular; task invariants; task corollaries;",
            field_modeled_as_q: true,
            expectations: vec![
                expect("d", "4", Paper),
                expect("fdim", "2", Paper),
                expect("vanishing_bound", "2", Paper),
                expect("condition2", "true", Paper),
                expect("prediction", "vanishing for i > 2", Paper),
                expect(
                    "corollaries",
                    "set-theoretic complete intersection: vanishing for i > 2; \
                     prime ideal: nonvanishing only at i = 2",
                    Paper,
                ),
            ],
        },
        CorpusEntry {
            id: "ex:prime",
            session_text: "ring R = Q[x,y,z]; ideal a = (x,y); assume complete; assume cm; \
                           task invariants; task corollaries;",
            field_modeled_as_q: false,
            expectations: vec![
                expect("d", "3", Paper),
                expect("codim", "2", Paper),
                expect("fdim", "1", Paper),
                expect("vanishing_bound", "1", Paper),
                expect("minimal_primes", "[(x, y)]", Paper),
                expect("prediction", "vanishing for i > 1", Paper),
                expect(
                    "corollaries",
                    "prime ideal: nonvanishing only at i = 2",
                    Paper,
                ),
            ],
        },
        CorpusEntry {
            id: "ex:nonred",
            session_text: "ring R = Q[x,y] / (x^2); ideal a = (x); assume complete; \
                           assume cm; task invariants;",
            field_modeled_as_q: true,
            expectations: vec![
                expect("d", "1", Paper),
                expect("minimal_primes", "[(x)]", Paper),
                expect_vs_paper("prime_dims", "[1]", "dim(R/p) = 0"),
                expect("fdim", "1", Derived),
                expect("big_height", "0", Derived),
                expect("vanishing_bound", "1", Derived),
            ],
        },
        CorpusEntry {
            id: "ex:nonCM",
            session_text: "ring R = Q[x,y,z] / (x*z, y*z); ideal a = (z); assume complete; \
                           task invariants;",
            field_modeled_as_q: true,
            expectations: vec![
                expect("d", "2", Paper),
                expect_vs_paper("minimal_primes", "[(z)]", "(x,z), (y,z)"),
                expect_vs_paper("big_height", "0", "height(a) = 1"),
                expect("fdim", "2", Derived),
                expect("prediction", "indeterminate", Derived),
            ],
        },
        CorpusEntry {
            id: "ex:fpure",
            session_text: "ring R = F7[x,y,z] / (x^3+y^3+z^3); ideal a = (x,y); \
                           assume complete; assume cm; task invariants;",
            field_modeled_as_q: false,
            expectations: vec![
                expect("d", "2", Paper),
                expect("fdim", "0", Paper),
                expect("vanishing_bound", "0", Paper),
                expect("minimal_primes", "[(x, y, z)]", Paper),
                expect("condition2", "true", Paper),
                expect("prediction", "vanishing for i > 0", Paper),
            ],
        },
        CorpusEntry {
            id: "ex:axes",
            session_text: "ring R = Q[x,y,z]; ideal a = (x*y, x*z); assume complete; \
                           assume cm; task invariants; task cech box=4 powers=1..2;",
            field_modeled_as_q: true,
            expectations: vec![
                expect("d", "3", Paper),
                expect("minimal_primes", "[(x), (y, z)]", Paper),
                expect("prime_dims", "[2, 1]", Paper),
                expect("fdim", "2", Paper),
                expect("big_height", "2", Paper),
                expect("vanishing_bound", "1", Paper),
                expect("equidimensional", "false", Paper),
                expect("condition2", "false", Paper),
                expect("prediction", "nonvanishing expected at i = 2", Paper),
                expect("cech_higher_totals", "0", Derived),
            ],
        },
        CorpusEntry {
            id: "ex:curve",
            session_text: "ring R = Q[x,y,z] / (x*y - z^2); ideal a = (x, z); \
                           assume complete; assume cm; task invariants;",
            field_modeled_as_q: true,
            expectations: vec![
                expect("d", "2", Paper),
                expect("codim", "1", Paper),
                expect("fdim", "1", Paper),
                expect("big_height", "1", Paper),
                expect("vanishing_bound", "1", Paper),
                expect("minimal_primes", "[(x, z)]", Paper),
                expect("prediction", "vanishing for i > 1", Paper),
            ],
        },
        CorpusEntry {
            id: "ex:m2",
            session_text: "ring R = Q[x,y,z] / (y*z); ideal a = (x, y); assume complete; \
                           assume cm; task invariants;",
            field_modeled_as_q: false,
            expectations: vec![
                expect("d", "2", Paper),
                expect("fdim", "1", Paper),
                expect_vs_paper("codim", "1", "codim I -- =2"),
                expect_vs_paper("vanishing_bound", "1", "VanishingBound = d - c -- =0"),
                expect("minimal_primes", "[(x, y)]", Derived),
                expect("prediction", "vanishing for i > 1", Derived),
            ],
        },
        CorpusEntry {
            id: "ex:num",
            session_text: "ring R = Q[a,b,c,d]; ideal I = (a, b); assume complete; \
                           assume cm; task toric weights=(4,0),(3,1),(1,3),(0,4);",
            field_modeled_as_q: true,
            expectations: vec![
                expect("d", "2", Paper),
                expect("fdim", "1", Paper),
                expect("vanishing_bound", "1", Paper),
                expect("condition2", "true", Paper),
                expect("prediction", "vanishing for i > 1", Paper),
                expect(
                    "toric_presentation",
                    "(b^3 - a^2*c, a*c^2 - b^2*d, c^3 - b*d^2, b*c - a*d)",
                    Derived,
                ),
                expect("minimal_primes", "[(a, b, c)]", Derived),
            ],
        },
        CorpusEntry {
            id: "ex:discon",
            session_text: "ring R = Q[x,y,u,v] / (x*u, x*v, y*u, y*v); ideal a = (x, y); \
                           assume complete; task invariants;",
            field_modeled_as_q: true,
            expectations: vec![
                expect("d", "2", Paper),
                expect("fdim", "2", Paper),
                expect_vs_paper("minimal_primes", "[(x, y)]", "(x,y), (u,v)"),
                expect_vs_paper("big_height", "0", "height(a) = 1"),
                expect("prediction", "indeterminate", Derived),
            ],
        },
        CorpusEntry {
            id: "ex:finj",
            session_text: "ring R = F3[x,y,z] / (x^3+y^3+z^3); ideal a = (x); \
                           assume complete; assume cm; task invariants;",
            field_modeled_as_q: false,
            expectations: vec![
                expect("d", "2", Paper),
                expect("fdim", "1", Paper),
                expect("vanishing_bound", "1", Paper),
                expect("minimal_primes", "[(x, y + z)]", Paper),
                expect("certificates", "[frobenius_root_reduced]", Derived),
                expect("prediction", "vanishing for i > 1", Paper),
            ],
        },
        CorpusEntry {
            id: "ex:dual",
            session_text: "ring R = Q[x,y,z]; ideal a = (x,y,z); assume complete; \
                           assume cm; task invariants;",
            field_modeled_as_q: true,
            expectations: vec![
                expect("d", "3", Paper),
                expect("fdim", "0", Paper),
                expect("vanishing_bound", "0", Paper),
                expect("condition2", "true", Paper),
                expect("prediction", "vanishing for i > 0", Paper),
                expect("minimal_primes", "[(x, y, z)]", Paper),
            ],
        },
    ]
}

/// Flatten a session output into named, rendered values for the audit.
pub fn computed_values(output: &SessionOutput) -> BTreeMap<&'static str, String> {
    let mut m: BTreeMap<&'static str, String> = BTreeMap::new();
    m.insert("outcome", output.outcome.clone());
    if let Some(rep) = &output.invariants {
        m.insert("d", rep.d.to_string());
        m.insert("dim_quotient", rep.dim_quotient.to_string());
        m.insert("codim", rep.codim.to_string());
        m.insert("fdim", rep.fdim.to_string());
        let opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_else(|| "none".into());
        m.insert("small_height", opt(rep.small_height));
        m.insert("big_height", opt(rep.big_height));
        m.insert("vanishing_bound", opt(rep.vanishing_bound));
        m.insert("equidimensional", rep.equidimensional.to_string());
        m.insert(
            "condition2",
            match rep.condition2 {
                Some(true) => "true".to_string(),
                Some(false) => "false".to_string(),
                None => "indeterminate".to_string(),
            },
        );
        m.insert(
            "minimal_primes",
            format!(
                "[{}]",
                rep.primes
                    .iter()
                    .map(|p| format!("({})", p.gens.join(", ")))
                    .collect::<Vec<_>>()
                    .join(", ")
            ),
        );
        m.insert(
            "prime_dims",
            format!("{:?}", rep.primes.iter().map(|p| p.dim).collect::<Vec<_>>()),
        );
        m.insert(
            "certificates",
            format!(
                "[{}]",
                rep.primes
                    .iter()
                    .map(|p| p.certificate.label())
                    .collect::<Vec<_>>()
                    .join(", ")
            ),
        );
        m.insert(
            "decomposition_complete",
            rep.decomposition_complete.to_string(),
        );
        m.insert("prediction", rep.prediction.describe());
    }
    if let Some(corollaries) = &output.corollaries {
        let rendered = if corollaries.is_empty() {
            "none".to_string()
        } else {
            corollaries
                .iter()
                .map(|c| c.describe())
                .collect::<Vec<_>>()
                .join("; ")
        };
        m.insert("corollaries", rendered);
    }
    if !output.cech.is_empty() {
        let higher: usize = output
            .cech
            .iter()
            .map(|r| r.per_i_totals.iter().skip(1).sum::<usize>())
            .sum();
        m.insert("cech_higher_totals", higher.to_string());
    }
    if let Some(toric) = &output.toric {
        m.insert(
            "toric_presentation",
            format!("({})", toric.presentation_generators.join(", ")),
        );
        m.insert("toric_dim", toric.presentation_dim.to_string());
    }
    m
}

/// Outcome of a full corpus run: per-entry outputs (with their audit rows
/// attached) in entry-id order, plus the flat audit table.
#[derive(Debug, Clone, Serialize)]
pub struct CorpusRun {
    pub entries: Vec<CorpusEntryOutput>,
    pub audit: Vec<AuditRow>,
    pub checks: usize,
    pub ok: usize,
    pub paper_inconsistencies: usize,
    pub mismatches: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct CorpusEntryOutput {
    pub id: String,
    #[serde(flatten)]
    pub output: SessionOutput,
}

impl CorpusRun {
    pub fn has_mismatch(&self) -> bool {
        self.mismatches > 0
    }
}

/// Run every corpus entry (concurrently) and compare computed values with
/// the expectations; ordering is fixed by entry id.
pub fn run_corpus(opts: &RunOptions) -> Result<CorpusRun, RunError> {
    let mut entries = corpus_entries();
    entries.sort_by_key(|e| e.id);

    let outputs: Vec<(usize, Result<SessionOutput, RunError>)> = entries
        .par_iter()
        .enumerate()
        .map(|(idx, entry)| {
            let session = match parse_session(entry.session_text) {
                Ok(s) => s,
                Err(e) => {
                    return (
                        idx,
                        Err(RunError::Input(format!(
                            "corpus entry {}: {}",
                            entry.id,
                            e.describe(entry.session_text)
                        ))),
                    )
                }
            };
            let entry_opts = RunOptions {
                max_cells: opts.max_cells,
                field_modeled_as_q: entry.field_modeled_as_q,
            };
            (idx, run_session(&session, &entry_opts))
        })
        .collect();

    let mut audit: Vec<AuditRow> = Vec::new();
    let mut results: Vec<CorpusEntryOutput> = Vec::with_capacity(entries.len());
    let (mut ok, mut inconsistencies, mut mismatches) = (0usize, 0usize, 0usize);

    for (idx, output) in outputs {
        let entry = &entries[idx];
        let mut output = output?;
        let values = computed_values(&output);
        let mut rows = Vec::new();
        for exp in &entry.expectations {
            let computed = values
                .get(exp.field)
                .cloned()
                .unwrap_or_else(|| "<absent>".to_string());
            let status = if computed == exp.expected {
                if exp.paper_claim.is_some() {
                    inconsistencies += 1;
                    "paper_inconsistency"
                } else {
                    ok += 1;
                    "ok"
                }
            } else {
                mismatches += 1;
                "mismatch"
            };
            rows.push(AuditRow {
                id: entry.id.to_string(),
                field: exp.field.to_string(),
                computed,
                expected: exp.expected.to_string(),
                provenance: exp.provenance.label().to_string(),
                paper_claim: exp.paper_claim.map(|s| s.to_string()),
                status: status.to_string(),
            });
        }
        output.audit = rows.clone();
        audit.extend(rows);
        results.push(CorpusEntryOutput {
            id: entry.id.to_string(),
            output,
        });
    }

    let checks = audit.len();
    Ok(CorpusRun {
        entries: results,
        audit,
        checks,
        ok,
        paper_inconsistencies: inconsistencies,
        mismatches,
    })
}
