use clap::Parser;
use fdim::corpus::{run_corpus, CorpusRun};
use fdim::runner::{render_text, run_session, AuditRow, RunOptions, SessionOutput};
use fdim::session::parse_session;
use serde_json::json;
use std::path::PathBuf;
use std::process::ExitCode;

/// Ideal-theoretic invariants behind formal local cohomology vanishing:
/// dimensions, minimal primes, the formal dimension, vanishing bounds, and
/// graded Cech truncations for monomial data.
#[derive(Parser, Debug)]
#[command(name = "fdim", version)]
struct Cli {
    /// Session file to run
    #[arg(long, value_name = "FILE", conflicts_with = "corpus")]
    input: Option<PathBuf>,

    /// Run the built-in example corpus with its consistency audit
    #[arg(long)]
    corpus: bool,

    /// Emit a JSON document instead of text
    #[arg(long)]
    json: bool,

    /// Cell budget for the Cech engine
    #[arg(long, value_name = "N", default_value_t = 1_000_000)]
    max_cells: usize,

    /// Suppress report bodies; print only audit problems and summaries
    #[arg(long)]
    quiet: bool,
}

const EXIT_OK: u8 = 0;
const EXIT_MISMATCH: u8 = 1;
const EXIT_INPUT: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = RunOptions {
        max_cells: cli.max_cells,
        field_modeled_as_q: false,
    };
    let code = if cli.corpus {
        corpus_main(&cli, &opts)
    } else if let Some(path) = &cli.input {
        session_main(&cli, path, &opts)
    } else {
        eprintln!("error: nothing to do; pass --input <FILE> or --corpus");
        EXIT_INPUT
    };
    ExitCode::from(code)
}

fn timestamp() -> String {
    chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true)
}

fn session_main(cli: &Cli, path: &PathBuf, opts: &RunOptions) -> u8 {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", path.display());
            return EXIT_INPUT;
        }
    };
    let session = match parse_session(&text) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {}: {}", path.display(), e.describe(&text));
            return EXIT_INPUT;
        }
    };
    let output = match run_session(&session, opts) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {}: {e}", path.display());
            return EXIT_INPUT;
        }
    };
    if cli.json {
        let doc = json!({
            "timestamp": timestamp(),
            "mode": "session",
            "report": output,
        });
        println!(
            "{}",
            serde_json::to_string_pretty(&doc).expect("serializable")
        );
    } else if cli.quiet {
        println!("{}", summary_line(&output));
    } else {
        print!("{}", render_text(&output));
    }
    EXIT_OK
}

fn summary_line(output: &SessionOutput) -> String {
    match &output.invariants {
        None => output.outcome.clone(),
        Some(rep) => format!("{}: {}", output.outcome, rep.prediction.describe()),
    }
}

fn corpus_main(cli: &Cli, opts: &RunOptions) -> u8 {
    let run = match run_corpus(opts) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: corpus run failed: {e}");
            return EXIT_INPUT;
        }
    };
    if cli.json {
        let doc = json!({
            "timestamp": timestamp(),
            "mode": "corpus",
            "corpus": run,
        });
        println!(
            "{}",
            serde_json::to_string_pretty(&doc).expect("serializable")
        );
    } else {
        render_corpus_text(cli, &run);
    }
    if run.has_mismatch() {
        EXIT_MISMATCH
    } else {
        EXIT_OK
    }
}

fn render_corpus_text(cli: &Cli, run: &CorpusRun) {
    if !cli.quiet {
        for entry in &run.entries {
            println!("=== {} ===", entry.id);
            print!("{}", render_text(&entry.output));
            println!();
        }
    }
    println!("audit:");
    for row in &run.audit {
        if cli.quiet && row.status == "ok" {
            continue;
        }
        println!("{}", render_audit_row(row));
    }
    println!(
        "corpus audit: {} checks, {} ok, {} paper-inconsistency, {} mismatch",
        run.checks, run.ok, run.paper_inconsistencies, run.mismatches
    );
}

fn render_audit_row(row: &AuditRow) -> String {
    let mut line = format!(
        "  [{:>20}] {:<22} computed={:<28} expected={:<28} ({}) {}",
        row.id, row.field, row.computed, row.expected, row.provenance, row.status
    );
    if let Some(claim) = &row.paper_claim {
        line.push_str(&format!("\n{:>24} paper prints: {}", "", claim));
    }
    line
}
