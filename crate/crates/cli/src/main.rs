//! `stacksort`: apply and invert stack-sorting operators, draw decreasing
//! trees, and run the exhaustive verifiers from the command line.
//!
//! Exit codes: 0 pass, 1 verification failure, 2 input error, 3 scale limit.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use stacksort::tree::tin;
use stacksort::wilf::{check_class_gf, wilf_summary, DEFAULT_BOUND};
use stacksort::{
    canonical_tree, series_f, trees_with_postorder, verify_respects_p, verify_theorem,
    OperatorExpr, Permutation, VerificationReport, DEFAULT_NODE_BUDGET,
};

#[derive(Parser, Debug)]
#[command(name = "stacksort", version, about)]
struct Cli {
    /// Output format; each subcommand has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Worker threads for the parallel sweeps (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Largest number of permutations generated while inverting an
    /// operator on one permutation.
    #[arg(
        long,
        global = true,
        env = "STACKSORT_NODE_BUDGET",
        default_value_t = DEFAULT_NODE_BUDGET,
        value_parser = clap::builder::RangedU64ValueParser::<usize>::new().range(1..)
    )]
    budget: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
    Tsv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TreeKind {
    Tin,
    Canonical,
    PreimageForest,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Apply an operator to a permutation.
    Sort {
        #[arg(long, allow_hyphen_values = true)]
        op: String,
        perm: String,
    },
    /// List every preimage of a permutation under an operator.
    Preimages {
        #[arg(long, allow_hyphen_values = true)]
        op: String,
        perm: String,
    },
    /// Check the bijection between the sets sorted by S∘A and S∘R∘A for
    /// every size from 1 to N.
    Verify {
        #[arg(long, allow_hyphen_values = true)]
        op: String,
        #[arg(long = "n")]
        n_max: usize,
    },
    /// Draw decreasing trees of a permutation in DOT.
    Tree {
        #[arg(long, value_enum)]
        kind: TreeKind,
        perm: String,
    },
    /// Classify the patterns of size N whose classes P maps onto each other,
    /// and check the resulting Wilf-equivalences.
    Wilf {
        #[arg(long = "n")]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: usize,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        order: usize,
    },
    /// Coefficients of F_N up to t^ORDER.
    Series {
        #[arg(long = "n")]
        n: usize,
        #[arg(long)]
        order: usize,
    },
}

enum Failure {
    Input(String),
    ScaleLimit(String),
    Verification,
}

impl From<stacksort::Error> for Failure {
    fn from(e: stacksort::Error) -> Self {
        match e {
            stacksort::Error::BudgetExceeded { .. } => Failure::ScaleLimit(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::ScaleLimit(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Sort { op, perm } => cmd_sort(cli, op, perm),
        Command::Preimages { op, perm } => cmd_preimages(cli, op, perm),
        Command::Verify { op, n_max } => cmd_verify(cli, op, *n_max),
        Command::Tree { kind, perm } => cmd_tree(cli, *kind, perm),
        Command::Wilf { n, bound, order } => cmd_wilf(cli, *n, *bound, *order),
        Command::Series { n, order } => cmd_series(cli, *n, *order),
    }
}

fn format_or(cli: &Cli, default: Format, allowed: &[Format]) -> Result<Format, Failure> {
    let f = cli.format.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        Err(Failure::Input(format!(
            "format {} is not available for this subcommand",
            f.to_possible_value().unwrap().get_name()
        )))
    }
}

fn parse_op(text: &str) -> Result<OperatorExpr, Failure> {
    text.parse().map_err(Failure::from)
}

fn parse_perm(text: &str) -> Result<Permutation, Failure> {
    text.parse().map_err(Failure::from)
}

fn tsv(p: &Permutation) -> String {
    let parts: Vec<String> = p.values().iter().map(|v| v.to_string()).collect();
    parts.join("\t")
}

fn print_json(value: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("JSON values serialize")
    );
}

fn cmd_sort(cli: &Cli, op: &str, perm: &str) -> Outcome {
    let format = format_or(
        cli,
        Format::Text,
        &[Format::Text, Format::Json, Format::Tsv],
    )?;
    let a = parse_op(op)?;
    let pi = parse_perm(perm)?;
    let out = a.apply(&pi);
    match format {
        Format::Json => print_json(&json!({ "operator": a, "input": pi, "output": out })),
        Format::Tsv => println!("{}", tsv(&out)),
        _ => println!("{out}"),
    }
    Ok(())
}

fn cmd_preimages(cli: &Cli, op: &str, perm: &str) -> Outcome {
    let format = format_or(
        cli,
        Format::Text,
        &[Format::Text, Format::Json, Format::Tsv],
    )?;
    let a = parse_op(op)?;
    let pi = parse_perm(perm)?;
    let pre = a.preimages_budgeted(&pi, cli.budget)?;
    match format {
        Format::Json => print_json(&json!({
            "operator": a,
            "target": pi,
            "count": pre.len(),
            "preimages": pre,
        })),
        Format::Tsv => {
            for p in &pre {
                println!("{}", tsv(p));
            }
            eprintln!("count: {}", pre.len());
        }
        _ => {
            for p in &pre {
                println!("{p}");
            }
            eprintln!("count: {}", pre.len());
        }
    }
    Ok(())
}

fn report_line(r: &VerificationReport) -> String {
    let kind = match r.kind {
        stacksort::ReportKind::Theorem => "theorem",
        stacksort::ReportKind::RespectsP => "respects_p",
    };
    format!(
        "{}\t{}\t{}\t{}\t{}\t{}\t{}",
        kind,
        r.operator,
        r.size,
        r.count_sa,
        r.count_sra,
        r.counterexamples.len(),
        if r.passed() { "pass" } else { "fail" }
    )
}

fn cmd_verify(cli: &Cli, op: &str, n_max: usize) -> Outcome {
    let format = format_or(
        cli,
        Format::Json,
        &[Format::Text, Format::Json, Format::Tsv],
    )?;
    let a = parse_op(op)?;
    let mut reports = Vec::with_capacity(2 * n_max);
    for n in 1..=n_max {
        reports.push(verify_theorem(&a, n, cli.budget)?);
        reports.push(verify_respects_p(&a, n, cli.budget)?);
    }
    let passed = reports.iter().all(VerificationReport::passed);
    match format {
        Format::Json => print_json(&json!(reports)),
        Format::Tsv => {
            println!("kind\toperator\tn\tcount_sa\tcount_sra\tcounterexamples\tstatus");
            for r in &reports {
                println!("{}", report_line(r));
            }
        }
        _ => {
            for r in &reports {
                let line = report_line(r).replace('\t', " ");
                println!("{line}");
                for c in &r.counterexamples {
                    let theta = c.theta.as_ref().map(|p| p.to_string()).unwrap_or_default();
                    println!("  {}: {} {}", c.check, theta, c.detail);
                }
            }
            println!(
                "verified up to n = {n_max}: {}",
                if passed { "pass" } else { "fail" }
            );
        }
    }
    if passed {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn cmd_tree(cli: &Cli, kind: TreeKind, perm: &str) -> Outcome {
    let format = format_or(cli, Format::Dot, &[Format::Dot, Format::Json])?;
    let pi = parse_perm(perm)?;
    let graphs: Vec<String> = match kind {
        TreeKind::Tin => vec![tin(&pi).to_dot("tin")],
        TreeKind::Canonical => match canonical_tree(&pi)? {
            Some(t) => vec![t.to_dot("canonical")],
            None => return Err(Failure::Input(format!("{pi} is not in the image of S"))),
        },
        TreeKind::PreimageForest => trees_with_postorder(&pi)
            .iter()
            .enumerate()
            .map(|(i, t)| t.to_dot(&format!("preimage{}", i + 1)))
            .collect(),
    };
    match format {
        Format::Json => print_json(&json!({ "permutation": pi, "graphs": graphs })),
        _ => {
            for g in &graphs {
                print!("{g}");
            }
        }
    }
    Ok(())
}

fn cmd_wilf(cli: &Cli, n: usize, bound: usize, order: usize) -> Outcome {
    let format = format_or(cli, Format::Text, &[Format::Text, Format::Json])?;
    if n == 0 {
        return Err(stacksort::Error::SizeTooSmall(0).into());
    }
    let summary = wilf_summary(n, bound, order)?;
    let gf = check_class_gf(n, order)?;
    let passed = summary.passed && gf.passed;
    match format {
        Format::Json => print_json(&json!({ "summary": summary, "series": gf, "passed": passed })),
        _ => {
            let c = &summary.classification;
            println!("patterns of size {n} whose classes P maps onto each other (bound {bound}):");
            for p in &c.found {
                println!("  {p}");
            }
            println!(
                "wedge patterns: {}",
                if c.matches_wedges { "match" } else { "differ" }
            );
            for r in &c.rejected {
                if let Some(w) = &r.witness {
                    println!("  rejected {} (witness {w})", r.pattern);
                }
            }
            println!("Wilf pairs via R∘P (up to size {order}):");
            for p in &summary.pairs {
                let note = if summary.redundant.contains(&p.k) {
                    " (redundant)"
                } else {
                    ""
                };
                println!(
                    "  k={} {} -> {}: {}{}",
                    p.k,
                    p.source,
                    p.target,
                    if p.bijective {
                        "bijective"
                    } else {
                        "not bijective"
                    },
                    note
                );
            }
            println!(
                "F_{n} = {}",
                gf.series
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            );
            for class in &gf.classes {
                println!(
                    "  |Av(231, {})|: {}",
                    class.pattern,
                    if class.matches { "match" } else { "differ" }
                );
            }
            println!(
                "verified up to bound: {}",
                if passed { "pass" } else { "fail" }
            );
        }
    }
    if passed {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn cmd_series(cli: &Cli, n: usize, order: usize) -> Outcome {
    let format = format_or(
        cli,
        Format::Text,
        &[Format::Text, Format::Json, Format::Tsv],
    )?;
    let f = series_f(n, order)?;
    match format {
        Format::Json => {
            print_json(&json!({ "n": n, "order": order, "coefficients": f.coefficients() }))
        }
        Format::Tsv => {
            for (m, c) in f.coefficients().iter().enumerate() {
                println!("{m}\t{c}");
            }
        }
        _ => println!("{f}"),
    }
    Ok(())
}
