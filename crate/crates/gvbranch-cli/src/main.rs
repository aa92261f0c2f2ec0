//! Command-line front end: structure queries, condition reports, branching
//! tables, singular-vector construction, and table regressions, with
//! JSON/text/LaTeX emitters.
//!
//! Exit codes: 0 success, 2 usage error, 3 mathematical refusal (Condition
//! A/B), 4 regression mismatch.

use std::collections::BTreeMap;
use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use gvbranch_core::arith::{parse_rational, Rational};
use gvbranch_core::error::Error;
use gvbranch_core::pair::PairContext;
use gvbranch_core::regress::run_suite;
use gvbranch_core::roots::{pretty_fundamental, Basis};
use gvbranch_core::singular::{shapovalov_certificate, top_level_singular_vectors};
use gvbranch_core::verma::{
    branch_up_to_degree, induced_bar_parabolic, quotient_weights, GeneralizedVerma, Mult,
};

#[derive(Parser)]
#[command(
    name = "gvbranch",
    version,
    about = "Branching of generalized Verma modules over reductive subalgebra embeddings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cone and compatibility report for a parabolic subalgebra.
    Conditions(JobArgs),
    /// Branching table of a generalized Verma module.
    Branch(JobArgs),
    /// Top-level singular vectors with verification and certificates.
    Singular(JobArgs),
    /// Run a golden-table regression suite.
    Regress {
        /// structure, fd-tables, branching, singular, certificates, or all.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
}

#[derive(Args)]
struct JobArgs {
    /// Built-in pair name (g2-so7) or file:PATH for an embedding file.
    #[arg(long, default_value = "g2-so7")]
    pair: String,
    /// Crossing pattern over the simple roots, e.g. 1,0,0.
    #[arg(long)]
    parabolic: Option<String>,
    /// Highest weight, e.g. "x1*w1 + w2".
    #[arg(long)]
    lambda: Option<String>,
    /// Numeric substitutions, e.g. --set x1=10 (repeatable).
    #[arg(long = "set")]
    sets: Vec<String>,
    /// Depth cutoff for branch enumeration.
    #[arg(long, default_value_t = 4)]
    cutoff: u32,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long)]
    out: Option<std::path::PathBuf>,
    /// Include wall-clock timing in the result document (off keeps output
    /// byte-identical across runs).
    #[arg(long)]
    timing: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Latex,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::ConditionA | Error::ConditionB { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

/// A renderable table; the JSON and LaTeX emitters consume the same rows.
struct Table {
    title: String,
    headers: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.title);
        s.push_str(&self.headers.join(" | "));
        s.push('\n');
        for r in &self.rows {
            s.push_str(&r.join(" | "));
            s.push('\n');
        }
        s
    }

    fn to_latex(&self) -> String {
        let cols = "l".repeat(self.headers.len());
        let mut s = format!("% {}\n\\begin{{tabular}}{{{cols}}}\n", self.title);
        s.push_str(&self.headers.join(" & "));
        s.push_str(" \\\\\n\\hline\n");
        for r in &self.rows {
            let escaped: Vec<String> = r.iter().map(|c| c.replace('_', "\\_")).collect();
            s.push_str(&escaped.join(" & "));
            s.push_str(" \\\\\n");
        }
        s.push_str("\\end{tabular}\n");
        s
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Conditions(job) => cmd_conditions(job),
        Command::Branch(job) => cmd_branch(job),
        Command::Singular(job) => cmd_singular(job),
        Command::Regress { suite, format, out } => cmd_regress(&suite, format, out),
    }
}

fn load_pair(name: &str) -> Result<PairContext, Error> {
    if name == "g2-so7" {
        PairContext::builtin_g2_so7()
    } else if let Some(path) = name.strip_prefix("file:") {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Usage(format!("cannot read embedding file {path}: {e}")))?;
        PairContext::from_embedding_json(&text)
    } else {
        Err(Error::Usage(format!(
            "unknown pair `{name}`; use g2-so7 or file:PATH"
        )))
    }
}

fn parse_crossings(job: &JobArgs, rank: usize) -> Result<Vec<u8>, Error> {
    let Some(p) = &job.parabolic else {
        return Err(Error::Usage("--parabolic is required".into()));
    };
    let parts: Vec<&str> = p.split(',').collect();
    if parts.len() != rank {
        return Err(Error::Usage(format!(
            "crossing vector `{p}` must have {rank} entries"
        )));
    }
    parts
        .iter()
        .map(|s| match s.trim() {
            "0" => Ok(0u8),
            "1" => Ok(1u8),
            other => Err(Error::Usage(format!("bad crossing entry `{other}`"))),
        })
        .collect()
}

fn parse_sets(job: &JobArgs) -> Result<BTreeMap<String, Rational>, Error> {
    let mut out = BTreeMap::new();
    for s in &job.sets {
        let Some((name, value)) = s.split_once('=') else {
            return Err(Error::Usage(format!("bad substitution `{s}`; use x1=10")));
        };
        out.insert(name.trim().to_string(), parse_rational(value.trim())?);
    }
    Ok(out)
}

fn document(job_echo: Value, results: Value, timing: Option<u128>) -> Value {
    let mut doc = json!({
        "schema": "gvbranch/1",
        "toolVersion": env!("CARGO_PKG_VERSION"),
        "job": job_echo,
        "results": results,
    });
    if let Some(ms) = timing {
        doc["timingMs"] = json!(ms);
    }
    doc
}

fn emit(
    format: Format,
    out: &Option<std::path::PathBuf>,
    doc: &Value,
    table: &Table,
) -> Result<(), Error> {
    let text = match format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(doc).unwrap()),
        Format::Text => table.to_text(),
        Format::Latex => table.to_latex(),
    };
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            std::io::stdout()
                .write_all(text.as_bytes())
                .map_err(|e| Error::Usage(format!("stdout: {e}")))
        }
    }
}

fn cmd_conditions(job: JobArgs) -> Result<ExitCode, Error> {
    let start = std::time::Instant::now();
    let ctx = load_pair(&job.pair)?;
    let crossings = parse_crossings(&job, ctx.target.rank())?;
    let p = ctx.parabolic(&crossings)?;
    let rep = quotient_weights(&p, &ctx.embedding)?;
    let bar = induced_bar_parabolic(&p, &ctx.embedding)?;
    let results = json!({
        "parabolic": crossings,
        "barParabolic": bar.crossings(),
        "conditionA": serde_json::to_value(&rep).unwrap(),
        "finiteBranching": rep.finite_branching,
    });
    let table = Table {
        title: format!("conditions for parabolic {crossings:?}"),
        headers: vec!["property".into(), "value".into()],
        rows: vec![
            vec!["condition A".into(), rep.condition_a.to_string()],
            vec!["weakly compatible".into(), rep.weakly_compatible.to_string()],
            vec!["compatible".into(), rep.compatible.to_string()],
            vec!["finite branching".into(), rep.finite_branching.to_string()],
            vec!["0 in C".into(), rep.zero_in_c.to_string()],
            vec!["0 in C'".into(), rep.zero_in_c_prime.to_string()],
            vec![
                "quotient weights".into(),
                format!("{:?}", rep.quotient_weights),
            ],
        ],
    };
    let timing = job.timing.then(|| start.elapsed().as_millis());
    let doc = document(job_echo(&job, &crossings), results, timing);
    emit(job.format, &job.out, &doc, &table)?;
    Ok(ExitCode::SUCCESS)
}

fn job_echo(job: &JobArgs, crossings: &[u8]) -> Value {
    json!({
        "pair": job.pair,
        "parabolic": crossings,
        "lambda": job.lambda,
        "set": job.sets,
        "cutoff": job.cutoff,
    })
}

fn cmd_branch(job: JobArgs) -> Result<ExitCode, Error> {
    let start = std::time::Instant::now();
    let ctx = load_pair(&job.pair)?;
    let crossings = parse_crossings(&job, ctx.target.rank())?;
    let p = ctx.parabolic(&crossings)?;
    let Some(lambda_str) = &job.lambda else {
        return Err(Error::Usage("--lambda is required".into()));
    };
    let subs = parse_sets(&job)?;
    let lambda = ctx.parse_lambda(lambda_str, &subs)?;
    let rep = quotient_weights(&p, &ctx.embedding)?;
    let rows = branch_up_to_degree(&p, &ctx.embedding, &lambda, job.cutoff)?;
    let bar_rs = ctx.embedding.source().system();
    let mut json_rows = Vec::new();
    let mut table_rows = Vec::new();
    for r in &rows {
        let mu_fund = bar_rs.convert(&r.mu, Basis::Fundamental).unwrap();
        let pretty = pretty_fundamental(&mu_fund, ("p", ""));
        let mult = match r.mult {
            Mult::Finite(v) => json!(v),
            Mult::Infinite => json!("inf"),
        };
        json_rows.push(json!({
            "mu": serde_json::to_value(&mu_fund).unwrap(),
            "muPretty": pretty,
            "offset": r.offset,
            "mult": mult,
        }));
        let mult_s = match r.mult {
            Mult::Finite(v) => v.to_string(),
            Mult::Infinite => "inf".into(),
        };
        table_rows.push(vec![pretty, mult_s]);
    }
    let results = json!({
        "parabolic": crossings,
        "lambda": lambda_str,
        "conditionA": serde_json::to_value(&rep).unwrap(),
        "branches": json_rows,
    });
    let table = Table {
        title: format!("branches of lambda = {lambda_str} over parabolic {crossings:?}"),
        headers: vec!["mu".into(), "mult".into()],
        rows: table_rows,
    };
    let timing = job.timing.then(|| start.elapsed().as_millis());
    let doc = document(job_echo(&job, &crossings), results, timing);
    emit(job.format, &job.out, &doc, &table)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_singular(job: JobArgs) -> Result<ExitCode, Error> {
    let start = std::time::Instant::now();
    let ctx = load_pair(&job.pair)?;
    let crossings = parse_crossings(&job, ctx.target.rank())?;
    let Some(lambda_str) = &job.lambda else {
        return Err(Error::Usage("--lambda is required".into()));
    };
    let subs = parse_sets(&job)?;
    let lambda = ctx.parse_lambda(lambda_str, &subs)?;
    let gvm = GeneralizedVerma::new(ctx.parabolic(&crossings)?, &lambda)?;
    let results = top_level_singular_vectors(&gvm, &ctx.embedding)?;
    let bar_rs = ctx.embedding.source().system();
    let mut json_rows = Vec::new();
    let mut table_rows = Vec::new();
    for r in &results {
        let mu_fund = bar_rs.convert(&r.mu, Basis::Fundamental).unwrap();
        let pretty_mu = pretty_fundamental(&mu_fund, ("p", ""));
        let u = gvm.vector_as_uea(&r.vector);
        let cert = shapovalov_certificate(&gvm, &gvm.vector_as_uea(&r.raw))?;
        json_rows.push(json!({
            "mu": serde_json::to_value(&mu_fund).unwrap(),
            "muPretty": pretty_mu,
            "projectorFactors": r.projector.iter().map(|(off, p1)| json!({
                "offset": off,
                "p1": p1.to_string(),
            })).collect::<Vec<_>>(),
            "vector": serde_json::to_value(&u).unwrap(),
            "vectorPretty": format!("{u}"),
            "verified": r.verification.passed,
            "certificate": serde_json::to_value(&cert).unwrap(),
        }));
        table_rows.push(vec![
            pretty_mu,
            format!("{u}"),
            r.verification.passed.to_string(),
            format!("{}", cert.poly),
        ]);
    }
    let results_v = json!({
        "parabolic": crossings,
        "lambda": lambda_str,
        "vectors": json_rows,
    });
    let table = Table {
        title: format!("singular vectors of lambda = {lambda_str} over parabolic {crossings:?}"),
        headers: vec!["mu".into(), "vector".into(), "verified".into(), "certificate".into()],
        rows: table_rows,
    };
    let timing = job.timing.then(|| start.elapsed().as_millis());
    let doc = document(job_echo(&job, &crossings), results_v, timing);
    emit(job.format, &job.out, &doc, &table)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_regress(
    suite: &str,
    format: Format,
    out: Option<std::path::PathBuf>,
) -> Result<ExitCode, Error> {
    if suite.is_empty() {
        return Err(Error::Usage("empty suite name".into()));
    }
    let cases = run_suite(suite)?;
    let failed: Vec<_> = cases.iter().filter(|c| !c.passed).collect();
    let table = Table {
        title: format!("regression suite `{suite}`"),
        headers: vec!["status".into(), "case".into(), "detail".into()],
        rows: cases
            .iter()
            .map(|c| {
                vec![
                    if c.passed { "PASS".into() } else { "FAIL".into() },
                    c.name.clone(),
                    c.detail.clone(),
                ]
            })
            .collect(),
    };
    let doc = json!({
        "schema": "gvbranch/1",
        "toolVersion": env!("CARGO_PKG_VERSION"),
        "suite": suite,
        "cases": serde_json::to_value(&cases).unwrap(),
        "passed": failed.is_empty(),
    });
    emit(format, &out, &doc, &table)?;
    if failed.is_empty() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(4))
    }
}
