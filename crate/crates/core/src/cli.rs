//! The `osgrp` command line.
//!
//! [`run`] parses arguments and returns the exit code together with the text
//! to print, so the binary is a thin wrapper and the CLI is testable in-process.
//! Exit codes: 0 when every check passes, 1 when any fails, 2 on usage errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::time::Instant;

use clap::builder::TypedValueParser;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::category;
use crate::error::{AlgebraError, Result};
use crate::ideals::{self, RingIso};
use crate::instances;
use crate::ordered_semigroup::{self, FiniteOrderedSemigroup};
use crate::report::CheckReport;
use crate::rings::{self, RingSpec};
use crate::sampling::{SampleConfig, DEFAULT_MAX_DEGREE, DEFAULT_SAMPLES, DEFAULT_SEED, DEGREE_CAP};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

const N_LIMIT: u64 = 1_000_000;
const N_MAX_LIMIT: u64 = 200;

#[derive(Debug, Parser)]
#[command(name = "osgrp", version, about = "Ordered semigroups and categories of ideals of principal ideal rings")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for every sampled suite.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Samples per sampled law.
    #[arg(long, global = true, default_value_t = DEFAULT_SAMPLES,
          value_parser = clap::value_parser!(u64).range(1..=10_000_000).map(|v| v as usize))]
    pub samples: usize,
    /// Largest n certified by `certify`.
    #[arg(long, global = true, default_value_t = 60, value_parser = clap::value_parser!(u64).range(2..=N_MAX_LIMIT))]
    pub n_max: u64,
    /// Largest degree of a sampled polynomial.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_DEGREE,
          value_parser = clap::value_parser!(u64).range(0..=DEGREE_CAP as u64).map(|v| v as usize))]
    pub degree_cap: usize,
    /// Prime characteristic for `poly` and `counterexample`; all defaults when omitted.
    #[arg(long, global = true, value_parser = parse_prime)]
    pub p: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ZnView {
    /// Cayley table of ideal multiplication.
    Table,
    /// The order as a list of related pairs.
    Order,
    /// Green's relations.
    Green,
    /// Regularity classes.
    Classes,
    /// Ordered semigroup axioms and ordered regularity.
    Axioms,
    /// `{<1>}` as an inverse transversal.
    Transversal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DotKind {
    /// Arrows of the preorder category (`A -> B` iff `A ≼ B`).
    Preorder,
    /// Inclusions between ideals.
    Inclusion,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Inspect or verify I(Z_n).
    Zn {
        #[arg(value_parser = modulus)]
        n: u64,
        #[arg(value_enum)]
        view: ZnView,
    },
    /// The divisor semigroup (D(n), *, |) as a table.
    Divisors {
        #[arg(value_parser = modulus)]
        n: u64,
    },
    /// Sampled law suite on I(Z).
    Z,
    /// Sampled law suite and induced isomorphisms on I(F_p[x]).
    Poly,
    /// Subobject axioms and functor laws for the ideal category of Z_n.
    Category {
        #[arg(value_parser = modulus)]
        n: u64,
        /// Print a DOT diagram instead of running checks.
        #[arg(long, value_enum)]
        dot: Option<DotKind>,
    },
    /// Ideal products in upper triangular matrices over F_p.
    Counterexample,
    /// Verify I(Z_n) ≅ (D(n), *, |).
    Iso {
        #[arg(value_parser = modulus)]
        n: u64,
    },
    /// Run every check for n up to --n-max plus the sampled suites.
    Certify,
}

fn modulus(s: &str) -> std::result::Result<u64, String> {
    let n: u64 = s.parse().map_err(|e| format!("{e}"))?;
    if !(2..=N_LIMIT).contains(&n) {
        return Err(format!("n must lie in 2..={N_LIMIT}"));
    }
    Ok(n)
}

fn parse_prime(s: &str) -> std::result::Result<u64, String> {
    let p: u64 = s.parse().map_err(|e| format!("{e}"))?;
    if !rings::is_prime(p) {
        return Err(format!("{p} is not prime"));
    }
    Ok(p)
}

enum Output {
    Report(CheckReport, Option<String>),
    Text(String, serde_json::Value),
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            return (code, e.render().to_string());
        }
    };
    execute(&cli)
}

/// Runs an already parsed command.
pub fn execute(cli: &Cli) -> (i32, String) {
    let config = SampleConfig { samples: cli.samples, seed: cli.seed, max_degree: cli.degree_cap };
    let start = Instant::now();
    let output = match dispatch(cli, &config) {
        Ok(out) => out,
        Err(e) => return (EXIT_USAGE, format!("error: {e}\n")),
    };
    match output {
        Output::Text(text, value) => {
            let body = match cli.format {
                Format::Text => text,
                Format::Json => pretty(&value),
            };
            (EXIT_PASS, body)
        }
        Output::Report(mut report, extra) => {
            report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
            let code = if report.passed { EXIT_PASS } else { EXIT_FAIL };
            let body = match cli.format {
                Format::Json => pretty(&serde_json::to_value(&report).expect("reports serialize")),
                Format::Text => {
                    let mut out = extra.unwrap_or_default();
                    if matches!(cli.command, Command::Certify) {
                        out.push_str(&summary(&report));
                    } else {
                        out.push_str(&report.to_string());
                    }
                    out
                }
            };
            (code, body)
        }
    }
}

fn pretty(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("values serialize");
    s.push('\n');
    s
}

fn dispatch(cli: &Cli, config: &SampleConfig) -> Result<Output> {
    Ok(match cli.command {
        Command::Zn { n, view } => zn(n, view)?,
        Command::Divisors { n } => {
            let dn = instances::build_divisor_semigroup(n)?;
            Output::Text(cayley_table(&dn.semigroup, "*"), dn.semigroup.to_json())
        }
        Command::Z => Output::Report(instances::sampled_law_suite(RingSpec::Integer, config)?, None),
        Command::Poly => {
            let primes = cli.p.map_or_else(|| vec![2, 3, 5], |p| vec![p]);
            let mut children = Vec::new();
            for p in primes {
                children.push(instances::sampled_law_suite(RingSpec::poly(p)?, config)?);
                children.extend(poly_isos(p, config)?);
            }
            Output::Report(CheckReport::aggregate("I(F_p[x])", format!("seed {}", config.seed), children), None)
        }
        Command::Category { n, dot } => {
            let universe = instances::zn_universe(n)?;
            let labels: Vec<String> = universe.iter().map(instances::divisor_label).collect();
            match dot {
                Some(DotKind::Preorder) => {
                    let text = category::preorder_dot(&universe, &labels)?;
                    Output::Text(text.clone(), json!(text))
                }
                Some(DotKind::Inclusion) => {
                    let text = category::inclusion_dot(&universe, &labels)?;
                    Output::Text(text.clone(), json!(text))
                }
                None => Output::Report(category_suite(n, &universe), None),
            }
        }
        Command::Counterexample => {
            let primes = cli.p.map_or_else(|| vec![2, 3], |p| vec![p]);
            let children = primes.into_iter().map(instances::run_counterexample).collect::<Result<Vec<_>>>()?;
            Output::Report(CheckReport::aggregate("noncommutative counterexample", "UT2(F_p)", children), None)
        }
        Command::Iso { n } => {
            let report = instances::verify_zn_divisor_iso(n);
            let mut extra = String::from("phi:");
            for d in rings::divisors(n) {
                let label = if d == n { format!("<0> -> {n}") } else { format!("<{d}> -> {d}") };
                write!(extra, " {label}").expect("write to string");
            }
            extra.push('\n');
            Output::Report(report, Some(extra))
        }
        Command::Certify => Output::Report(certify(cli.n_max, config)?, None),
    })
}

fn zn(n: u64, view: ZnView) -> Result<Output> {
    let s = instances::build_ideal_semigroup_zn(n)?;
    let instance = format!("I(Z_{n})");
    Ok(match view {
        ZnView::Table => Output::Text(cayley_table(&s, "·"), s.to_json()),
        ZnView::Order => {
            let pairs = order_pairs(&s);
            let mut text = String::new();
            for (a, b) in &pairs {
                writeln!(text, "{a} ≼ {b}").expect("write to string");
            }
            Output::Text(text, json!({ "labels": s.labels(), "pairs": pairs }))
        }
        ZnView::Green => {
            let greens = ordered_semigroup::greens_relations(&s);
            let mut text = String::new();
            for (name, p) in [("L", &greens.l), ("R", &greens.r), ("J", &greens.j), ("H", &greens.h), ("D", &greens.d)] {
                let classes: Vec<String> = p
                    .classes()
                    .iter()
                    .map(|c| format!("{{{}}}", c.iter().map(|&i| s.label(i)).collect::<Vec<_>>().join(", ")))
                    .collect();
                writeln!(text, "{name}: {} class(es): {}", p.len(), classes.join(" ")).expect("write to string");
            }
            Output::Report(instances::verify_greens_universal(n), Some(text))
        }
        ZnView::Classes => Output::Report(ordered_semigroup::classify(&s).to_report(&s, &instance), None),
        ZnView::Axioms => Output::Report(instances::verify_zn_ordered_regular(n), None),
        ZnView::Transversal => Output::Report(ideals::check_inverse_transversal(&instances::zn_universe(n)?), None),
    })
}

fn poly_isos(p: u64, config: &SampleConfig) -> Result<Vec<CheckReport>> {
    let mut isos = vec![RingIso::poly_affine(p, 1, 1)?];
    if p > 2 {
        isos.push(RingIso::poly_affine(p, p - 1, 0)?);
    }
    Ok(isos.iter().map(|iso| ideals::verify_induced_iso(iso, config)).collect())
}

fn category_suite(n: u64, universe: &[ideals::Ideal]) -> CheckReport {
    CheckReport::aggregate(
        "ideal category",
        format!("Z_{n}"),
        vec![category::check_subobject_axioms(universe), category::verify_functor_laws(universe)],
    )
}

/// Every finite check for `2 <= n <= n_max`, then the sampled suites and the counterexample.
pub fn certify(n_max: u64, config: &SampleConfig) -> Result<CheckReport> {
    if !(2..=N_MAX_LIMIT).contains(&n_max) {
        return Err(AlgebraError::Domain(format!("n_max must lie in 2..={N_MAX_LIMIT}")));
    }
    let mut children = Vec::new();
    for n in 2..=n_max {
        children.push(certify_n(n)?);
    }
    children.push(instances::sampled_law_suite(RingSpec::Integer, config)?);
    for p in [2, 3, 5] {
        children.push(instances::sampled_law_suite(RingSpec::poly(p)?, config)?);
    }
    children.extend(poly_isos(3, config)?);
    for p in [2, 3] {
        children.push(instances::run_counterexample(p)?);
    }
    Ok(CheckReport::aggregate(
        "certify",
        format!("n <= {n_max}, {} samples, seed {}", config.samples, config.seed),
        children,
    ))
}

fn certify_n(n: u64) -> Result<CheckReport> {
    let universe = instances::zn_universe(n)?;
    let s = instances::build_ideal_semigroup_zn(n)?;
    let instance = format!("I(Z_{n})");
    Ok(CheckReport::aggregate(
        "Z_n",
        format!("n = {n}"),
        vec![
            instances::verify_zn_ordered_regular(n),
            instances::verify_zn_divisor_iso(n),
            instances::verify_greens_universal(n),
            ordered_semigroup::classify(&s).to_report(&s, &instance),
            ideals::check_inverse_transversal(&universe),
            instances::verify_von_neumann_correspondence(n),
            category::check_subobject_axioms(&universe),
            category::verify_functor_laws(&universe),
        ],
    ))
}

/// Cayley table with element labels as row and column headers.
pub fn cayley_table(s: &FiniteOrderedSemigroup, op: &str) -> String {
    let width = s.labels().iter().map(|l| l.chars().count()).max().unwrap_or(1).max(op.chars().count());
    let mut out = String::new();
    let cell = |out: &mut String, text: &str| {
        let pad = width - text.chars().count();
        write!(out, " {}{text}", " ".repeat(pad)).expect("write to string");
    };
    cell(&mut out, op);
    out.push_str(" |");
    for l in s.labels() {
        cell(&mut out, l);
    }
    out.push('\n');
    out.push_str(&"-".repeat(width + 2));
    out.push('+');
    out.push_str(&"-".repeat((width + 1) * s.size()));
    out.push('\n');
    for i in 0..s.size() {
        cell(&mut out, s.label(i));
        out.push_str(" |");
        for j in 0..s.size() {
            cell(&mut out, s.label(s.mul(i, j)));
        }
        out.push('\n');
    }
    out
}

/// All pairs `(a, b)` with `a ≤ b`, in table order.
pub fn order_pairs(s: &FiniteOrderedSemigroup) -> Vec<(String, String)> {
    let mut pairs = Vec::new();
    for i in 0..s.size() {
        for j in 0..s.size() {
            if s.leq(i, j) {
                pairs.push((s.label(i).to_string(), s.label(j).to_string()));
            }
        }
    }
    pairs
}

/// One line per top-level part; failing parts are expanded in full.
fn summary(report: &CheckReport) -> String {
    let mut out = String::new();
    let status = |r: &CheckReport| if r.passed { "PASS" } else { "FAIL" };
    write!(out, "{} {} [{}]", status(report), report.check, report.instance).expect("write to string");
    if let Some(ms) = report.elapsed_ms {
        write!(out, " ({ms} ms)").expect("write to string");
    }
    out.push('\n');
    for child in &report.children {
        if child.passed {
            writeln!(out, "  PASS {} [{}] ({} checks)", child.check, child.instance, child.count_leaves())
                .expect("write to string");
        } else {
            for line in child.to_string().lines() {
                writeln!(out, "  {line}").expect("write to string");
            }
        }
    }
    out
}
