use std::io::{IsTerminal, Read, Write};
use std::path::Path;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use periplectic_core::affine::{self, pbw_rank_check};
use periplectic_core::brauer::{self, ADElement};
use periplectic_core::document::ElementDocument;
use periplectic_core::expr::parse_expression;
use periplectic_core::render::{render_ascii, render_svg};
use periplectic_core::tensoraction::format_word;
use periplectic_core::verify::{check_params, run_suite, Suite, VerifyParams, VerifyReport};

macro_rules! out {
    ($($arg:tt)*) => {
        writeln!(std::io::stdout().lock(), $($arg)*)?
    };
}

#[derive(Parser)]
#[command(name = "periplectic", version, about = "Exact computations in the affine periplectic Brauer algebra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algebra {
    Affine,
    Brauer,
    Daha,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Svg,
    Ascii,
}

#[derive(Subcommand)]
enum Command {
    /// Normal form of a word expression such as "2*s1*y2 - e1".
    Normalize {
        #[arg(long)]
        d: usize,
        #[arg(long, value_enum, default_value = "affine")]
        algebra: Algebra,
        #[arg(long)]
        json: bool,
        expression: String,
    },
    /// Product of two elements. Operands are JSON documents (inline, a file, or - for stdin) or word expressions.
    Mul {
        #[arg(long)]
        d: Option<usize>,
        #[arg(long, value_enum, default_value = "affine")]
        algebra: Algebra,
        #[arg(long)]
        json: bool,
        a: String,
        b: String,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long, default_value_t = 2)]
        d: usize,
        #[arg(long = "max-degree", default_value_t = 1)]
        max_degree: usize,
        #[arg(long)]
        json: bool,
    },
    /// Draw an element document.
    Render {
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
        /// Write here instead of standard output.
        #[arg(long, short)]
        output: Option<String>,
        #[arg(long)]
        json: bool,
        /// Document file, inline JSON, or - for stdin.
        document: String,
    },
    /// Rank of the regular monomials up to a dot degree.
    Pbw {
        #[arg(long)]
        d: usize,
        #[arg(long = "max-degree")]
        max_degree: usize,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        json: bool,
    },
}

fn color() -> bool {
    std::env::var_os("NO_COLOR").is_none_or(|v| v.is_empty()) && std::io::stdout().is_terminal()
}

fn mark(passed: bool) -> String {
    match (passed, color()) {
        (true, true) => "\x1b[32mPASS\x1b[0m".into(),
        (false, true) => "\x1b[31mFAIL\x1b[0m".into(),
        (true, false) => "PASS".into(),
        (false, false) => "FAIL".into(),
    }
}

fn read_source(arg: &str) -> Result<Option<String>> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('{') {
        return Ok(Some(arg.to_string()));
    }
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading standard input")?;
        return Ok(Some(s));
    }
    if Path::new(arg).is_file() {
        return Ok(Some(std::fs::read_to_string(arg).with_context(|| format!("reading {arg}"))?));
    }
    Ok(None)
}

fn element_from_expression(algebra: Algebra, expression: &str, d: usize) -> Result<ElementDocument> {
    let combo = parse_expression(expression, d)?;
    Ok(match algebra {
        Algebra::Affine => ElementDocument::from_affine(&affine::normalize_combination(&combo, d)?),
        Algebra::Daha => ElementDocument::from_daha(&affine::to_daha_combination(&combo, d)?),
        Algebra::Brauer => {
            let mut x = ADElement::zero(d);
            for (c, w) in &combo {
                if w.iter().any(|t| t.is_dot()) {
                    bail!("{} uses a dot generator, which is not in the Brauer algebra", format_word(w));
                }
                x = x.add(&ADElement::from_word(w, d)?.scale(c))?;
            }
            ElementDocument::from_brauer(&x)
        }
    })
}

fn document_operand(arg: &str) -> Result<Option<ElementDocument>> {
    match read_source(arg)? {
        Some(text) => Ok(Some(ElementDocument::from_json(&text).with_context(|| format!("reading document {arg}"))?)),
        None => Ok(None),
    }
}

/// Reads both operands; expressions take `d` from `--d` or from the other operand.
fn operands(a: &str, b: &str, algebra: Algebra, d: Option<usize>) -> Result<(ElementDocument, ElementDocument)> {
    let (da, db) = (document_operand(a)?, document_operand(b)?);
    let d = d.or(da.as_ref().map(|x| x.d)).or(db.as_ref().map(|x| x.d));
    let resolve = |arg: &str, doc: Option<ElementDocument>| -> Result<ElementDocument> {
        match (doc, d) {
            (Some(doc), Some(d)) if doc.d != d => bail!("document {arg} has d = {}, expected {d}", doc.d),
            (Some(doc), _) => Ok(doc),
            (None, Some(d)) => element_from_expression(algebra, arg, d),
            (None, None) => bail!("{arg:?} is not a document; pass --d to read it as an expression"),
        }
    };
    Ok((resolve(a, da)?, resolve(b, db)?))
}

fn print_element(doc: &ElementDocument, json: bool) -> Result<()> {
    if json {
        out!("{}", doc.to_json());
        return Ok(());
    }
    if doc.terms.is_empty() {
        out!("0");
        return Ok(());
    }
    for t in &doc.terms {
        let matching: Vec<String> = t.matching.iter().map(|(a, b)| format!("{a}:{b}")).collect();
        out!("{:>8}  [{}]  top={:?} bottom={:?}", t.coeff.to_string(), matching.join(" "), t.top_dots, t.bottom_dots);
    }
    Ok(())
}

fn print_report(r: &VerifyReport, json: bool) -> Result<()> {
    if json {
        out!("{}", serde_json::to_string_pretty(r).expect("report serializes"));
        return Ok(());
    }
    for c in &r.checks {
        out!("{} {} ({})", mark(c.passed), c.name, c.detail);
    }
    let p = &r.params;
    out!(
        "{} suite {} n={} m={} d={} max-degree={}: {} of {} checks passed",
        mark(r.passed),
        r.suite,
        p.n,
        p.m,
        p.d,
        p.max_degree,
        r.checks.len() - r.failures(),
        r.checks.len()
    );
    Ok(())
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Normalize { d, algebra, json, expression } => {
            let doc = element_from_expression(algebra, &expression, d)?;
            print_element(&doc, json)?;
        }
        Command::Mul { d, algebra, json, a, b } => {
            let (x, y) = operands(&a, &b, algebra, d)?;
            if x.kind != y.kind {
                bail!("cannot multiply a {:?} document by a {:?} document", x.kind, y.kind);
            }
            let product = match algebra {
                Algebra::Affine => ElementDocument::from_affine(&affine::multiply(&x.to_affine()?, &y.to_affine()?)?),
                Algebra::Brauer => ElementDocument::from_brauer(&brauer::multiply(&x.to_brauer()?, &y.to_brauer()?)?),
                Algebra::Daha => ElementDocument::from_daha(&x.to_daha()?.multiply(&y.to_daha()?)?),
            };
            print_element(&product, json)?;
        }
        Command::Verify { suite, n, m, d, max_degree, json } => {
            let suite: Suite = suite.parse()?;
            let params = VerifyParams { n, m, d, max_degree };
            check_params(suite, &params)?;
            let report = run_suite(suite, params)?;
            print_report(&report, json)?;
            return Ok(report.passed);
        }
        Command::Render { format, output, json, document } => {
            let text = read_source(&document)?.with_context(|| format!("{document} is not a document file"))?;
            let doc = ElementDocument::from_json(&text)?;
            let picture = match format {
                Format::Svg => render_svg(&doc),
                Format::Ascii => render_ascii(&doc),
            };
            let body = if json { serde_json::json!({ "format": format_name(format), "drawing": picture }).to_string() + "\n" } else { picture };
            match output {
                Some(path) => std::fs::write(&path, body).with_context(|| format!("writing {path}"))?,
                None => std::io::stdout().write_all(body.as_bytes())?,
            }
        }
        Command::Pbw { d, max_degree, n, json } => {
            let n = n.unwrap_or(d + max_degree + 1);
            let r = pbw_rank_check(d, max_degree, n)?;
            let passed = r.count == r.rank;
            if json {
                out!("{}", serde_json::to_string_pretty(&r)?);
            } else {
                let levels: Vec<String> = r.rank_by_level.iter().map(|(m, k)| format!("m={m}: {k}")).collect();
                out!("{} d={} max-degree={} n={}: count {}, rank {}", mark(passed), r.d, r.max_degree, r.n, r.count, r.rank);
                out!("cumulative rank by tensor power: {}", levels.join(", "));
            }
            return Ok(passed);
        }
    }
    Ok(true)
}

fn format_name(f: Format) -> &'static str {
    match f {
        Format::Svg => "svg",
        Format::Ascii => "ascii",
    }
}

fn main() -> ExitCode {
    let result = run(Cli::parse());
    if let Err(e) = &result {
        if e.downcast_ref::<std::io::Error>().is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe) {
            return ExitCode::SUCCESS;
        }
    }
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
