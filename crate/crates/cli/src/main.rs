//! Command-line front end for the `peakalg` library.
//!
//! Exit codes: 0 success, 1 invalid input, 2 size bound exceeded, 3 internal
//! check failed.

mod selftest;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use peakalg::combinatorics::{peak_sets, Composition, IndexSet};
use peakalg::hecke_clifford::{
    build_module, ch_simple, check_triangularity, endomorphism_dim, frobenius_res, frobenius_res_from_series, leq_order,
    minimal_idempotent, radical_dimension_report, simple_dimension, simple_module, verify_relations, CliffordElement,
};
use peakalg::io::{matrix_to_csv, matrix_to_json, matrix_to_pretty, parse_terms, ElementJson};
use peakalg::peak::{pi_class, theta_fun, theta_minus1};
use peakalg::sym::{internal_product, NsfBasis, NsfElement};
use peakalg::{decomp, io, Error, Result};

#[derive(Parser)]
#[command(name = "peakalg", version, about = "Peak algebras, 0-Hecke-Clifford modules and their decomposition matrices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct OutputArgs {
    /// Emit elements as JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Write the result to this file instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// The peak algebra and the transform θ at q = -1.
    #[command(subcommand)]
    Peak(PeakCommand),
    /// Noncommutative symmetric functions.
    #[command(subcommand)]
    Ncsf(NcsfCommand),
    /// Modules over the 0-Hecke-Clifford algebra.
    #[command(subcommand)]
    Hcl(HclCommand),
    /// Decomposition matrices.
    #[command(subcommand)]
    Decomp(DecompCommand),
    /// Runs the built-in consistency checks.
    Selftest {
        #[arg(long, value_enum, default_value_t = Level::Quick)]
        level: Level,
    },
}

#[derive(Subcommand)]
enum PeakCommand {
    /// Lists the peak classes Π_P of degree n.
    Classes {
        #[arg(long)]
        n: usize,
    },
    /// θ₋₁(R_I) in the ribbon basis.
    Theta {
        #[arg(long, value_parser = parse_composition)]
        composition: Composition,
    },
    /// Stembridge's Θ_P in the fundamental basis.
    ThetaFun {
        /// Comma-separated peak positions; empty for the empty set.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        peakset: String,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Basis {
    S,
    R,
}

impl Basis {
    fn letter(self) -> &'static str {
        match self {
            Basis::S => "S",
            Basis::R => "R",
        }
    }

    fn basis(self) -> NsfBasis {
        match self {
            Basis::S => NsfBasis::S,
            Basis::R => NsfBasis::R,
        }
    }
}

#[derive(Subcommand)]
enum NcsfCommand {
    /// Rewrites an expression from one basis into another.
    Convert {
        #[arg(long, value_enum, ignore_case = true)]
        from: Basis,
        #[arg(long, value_enum, ignore_case = true)]
        to: Basis,
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
    },
    /// The internal product x ∗ y.
    Iproduct {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
}

#[derive(Subcommand)]
enum HclCommand {
    /// The induced module M_I.
    Module {
        #[arg(long, value_parser = parse_composition)]
        composition: Composition,
        /// Writes the Hasse diagram of the order ≤_I in DOT format.
        #[arg(long, value_name = "FILE")]
        hasse: Option<PathBuf>,
        /// Checks relations and triangularity, and computes the Frobenius
        /// characteristic and the endomorphism dimension.
        #[arg(long)]
        report: bool,
    },
    /// The simple module HClS_I of a peak composition.
    Simple {
        #[arg(long, value_parser = parse_composition)]
        composition: Composition,
        /// Also builds the module and checks stability and dimension.
        #[arg(long)]
        verify: bool,
    },
    /// Dimension of the radical of HCl_n(0).
    Radical {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Subcommand)]
enum DecompCommand {
    /// The decomposition matrix of HCl_n(0).
    Matrix {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
        /// Assemble from shifted tableaux instead of Schur Q-functions.
        #[arg(long)]
        tableaux: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Level {
    Quick,
    Full,
}

fn parse_composition(s: &str) -> std::result::Result<Composition, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_peak_set(s: &str, n: usize) -> Result<IndexSet> {
    let elems = s
        .split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| p.parse::<usize>().map_err(|_| Error::invalid(format!("cannot parse peak position {p:?}"))))
        .collect::<Result<Vec<_>>>()?;
    IndexSet::new(n, elems)
}

fn parse_in_basis(expr: &str, basis: Basis) -> Result<NsfElement> {
    // reject symbols from the other basis before building the element
    parse_terms(expr, basis.letter())?;
    io::parse_nsf(expr).map(|x| x.to_basis(basis.basis()))
}

fn render_nsf(x: &NsfElement, json: bool) -> String {
    if json {
        ElementJson::from(x).to_json()
    } else {
        x.to_string()
    }
}

fn render_clifford(x: &CliffordElement) -> String {
    let terms: Vec<String> = x
        .iter()
        .map(|(d, c)| {
            let word: Vec<String> = d.iter().map(|k| format!("c{k}")).collect();
            let word = if word.is_empty() { "1".to_string() } else { word.join("") };
            format!("({c})*{word}")
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "FAILED"
    }
}

fn run(cli: &Cli) -> Result<String> {
    let json = cli.output.json;
    let mut out = String::new();
    match &cli.command {
        Command::Peak(PeakCommand::Classes { n }) => {
            let classes = peak_sets(*n)
                .into_iter()
                .map(|p| Ok((p, pi_class(&p, *n)?)))
                .collect::<Result<Vec<_>>>()?;
            if json {
                let list: Vec<serde_json::Value> = classes
                    .iter()
                    .map(|(p, x)| serde_json::json!({ "peak_set": p.to_vec(), "element": ElementJson::from(x) }))
                    .collect();
                out = serde_json::Value::Array(list).to_string();
                out.push('\n');
            } else {
                for (p, x) in classes {
                    let _ = writeln!(out, "P = {p}: {x}");
                }
            }
        }
        Command::Peak(PeakCommand::Theta { composition }) => {
            let x = theta_minus1(&NsfElement::ribbon(composition.clone()));
            let _ = writeln!(out, "{}", render_nsf(&x, json));
        }
        Command::Peak(PeakCommand::ThetaFun { peakset, n }) => {
            let g = theta_fun(&parse_peak_set(peakset, *n)?, *n)?;
            let text = if json { ElementJson::from(&g).to_json() } else { g.to_string() };
            let _ = writeln!(out, "{text}");
        }
        Command::Ncsf(NcsfCommand::Convert { from, to, expr }) => {
            let x = parse_in_basis(expr, *from)?.to_basis(to.basis());
            let _ = writeln!(out, "{}", render_nsf(&x, json));
        }
        Command::Ncsf(NcsfCommand::Iproduct { x, y }) => {
            let (x, y) = (io::parse_nsf(x)?, io::parse_nsf(y)?);
            let _ = writeln!(out, "{}", render_nsf(&internal_product(&x, &y)?, json));
        }
        Command::Hcl(HclCommand::Module { composition, hasse, report }) => {
            let m = build_module(composition)?;
            let order = leq_order(composition);
            let _ = writeln!(out, "composition: {composition}");
            let _ = writeln!(out, "dimension: {}", m.dim());
            let _ = writeln!(out, "descents: {}", composition.descents());
            let _ = writeln!(out, "peak set: {}", composition.peak_set());
            let _ = writeln!(out, "valleys: {}", composition.valleys());
            let _ = writeln!(out, "order components: {}", order.component_count());
            if *report {
                let relations = verify_relations(&m);
                let triangular = check_triangularity(&m);
                let closed = frobenius_res(composition);
                let series = frobenius_res_from_series(&m)?;
                let theta = theta_fun(&composition.peak_set(), composition.size())?;
                let _ = writeln!(out, "relations: {}", yes_no(relations.is_ok()));
                let _ = writeln!(out, "triangularity: {}", yes_no(triangular.is_ok()));
                let _ = writeln!(out, "frobenius: {closed}");
                let _ = writeln!(out, "frobenius from composition series: {}", yes_no(series == closed));
                let _ = writeln!(out, "frobenius equals theta: {}", yes_no(closed == theta));
                let expected = 1usize << composition.valleys().len();
                match endomorphism_dim(composition) {
                    Ok(d) => {
                        let _ = writeln!(out, "endomorphism dimension: {d} (expected {expected})");
                        if d != expected {
                            return Err(Error::internal(format!("endomorphism dimension {d} != {expected}")));
                        }
                    }
                    Err(Error::BoundExceeded { .. }) => {
                        let _ = writeln!(out, "endomorphism dimension: skipped (module too large)");
                    }
                    Err(e) => return Err(e),
                }
                relations?;
                triangular?;
                if series != closed || closed != theta {
                    return Err(Error::internal("Frobenius characteristic routes disagree"));
                }
            }
            if let Some(path) = hasse {
                let name = format!("leq_{}", composition.label());
                std::fs::write(path, order.to_dot(&name))
                    .map_err(|e| Error::invalid(format!("cannot write {}: {e}", path.display())))?;
                let _ = writeln!(out, "hasse diagram: {}", path.display());
            }
        }
        Command::Hcl(HclCommand::Simple { composition, verify }) => {
            let e = minimal_idempotent(composition)?;
            let ch = ch_simple(composition)?;
            let dim = simple_dimension(composition);
            if json {
                let value = serde_json::json!({
                    "composition": composition.parts(),
                    "idempotent": ElementJson::from_clifford(&e, composition.size()),
                    "dimension": dim,
                    "characteristic": ElementJson::from(&ch),
                });
                let _ = writeln!(out, "{value}");
            } else {
                let _ = writeln!(out, "composition: {composition}");
                let _ = writeln!(out, "idempotent: {}", render_clifford(&e));
                let _ = writeln!(out, "dimension: {dim}");
                let _ = writeln!(out, "characteristic: {ch}");
            }
            if *verify {
                let s = simple_module(composition)?;
                if s.dim() != dim || !s.is_stable() {
                    return Err(Error::internal(format!("simple module of {composition} failed verification")));
                }
                if !json {
                    let _ = writeln!(out, "verified: stable, dimension {}", s.dim());
                }
            }
        }
        Command::Hcl(HclCommand::Radical { n }) => {
            let r = radical_dimension_report(*n)?;
            let _ = writeln!(out, "formula: {}", r.formula);
            match r.computed {
                Some(c) => {
                    let _ = writeln!(out, "computed: {c}");
                    if r.formula != c.into() {
                        return Err(Error::internal(format!("radical dimension {c} != {}", r.formula)));
                    }
                }
                None => {
                    let _ = writeln!(out, "computed: skipped");
                }
            }
        }
        Command::Decomp(DecompCommand::Matrix { n, format, tableaux }) => {
            let m = if *tableaux { decomp::carter_matrix(*n)? } else { decomp::decomposition_matrix(*n)? };
            out = match format {
                Format::Json => matrix_to_json(&m) + "\n",
                Format::Csv => matrix_to_csv(&m),
                Format::Pretty => matrix_to_pretty(&m),
            };
        }
        Command::Selftest { level } => {
            out = selftest::run(*level)?;
        }
    }
    Ok(out)
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::InvalidInput(_) | Error::NotInSpan { .. } => 1,
        Error::BoundExceeded { .. } => 2,
        Error::Internal(_) => 3,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(text) => {
            if let Some(path) = &cli.output.out {
                if let Err(e) = std::fs::write(path, text) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(1);
                }
            } else {
                print!("{text}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
