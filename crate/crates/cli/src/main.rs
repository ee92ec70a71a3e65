use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use gchar_core::classes::classes_of;
use gchar_core::gamma::{gamma_def_oracle, gamma_mn, gamma_syt_oracle, CharPair};
use gchar_core::rational::to_text;
use gchar_core::symfunc::{gen_schur, gen_schur_from_characters, gen_schur_jt, LtBasis, LtPoly};
use gchar_core::table::{build_table, build_table_parallel, Scaling};
use gchar_core::verify::{self, Suite};
use gchar_core::{ClassIndex, Partition};

#[derive(Parser)]
#[command(name = "gchar", version, about = "Generalized characters of the symmetric group")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScalingArg {
    Raw,
    Paper,
}

impl From<ScalingArg> for Scaling {
    fn from(s: ScalingArg) -> Self {
        match s {
            ScalingArg::Raw => Scaling::Raw,
            ScalingArg::Paper => Scaling::PaperScaled,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    /// Murnaghan–Nakayama type rule
    Mn,
    /// Sum over standard tableaux with n in the marked box
    Syt,
    /// Sum over S(n−1) from the definition
    Def,
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    Schur,
    Powersum,
}

#[derive(Clone, Copy, ValueEnum)]
enum SchurMethod {
    /// Σ_ν φ t^k s_ν
    Rule,
    /// Ch′ applied to the character values
    Characters,
    /// Determinantal formula
    Determinant,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Oracles,
    Orthogonality,
    Greene,
    Frobenius,
    Cauchy,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Oracles => Suite::Oracles,
            SuiteArg::Orthogonality => Suite::Orthogonality,
            SuiteArg::Greene => Suite::Greene,
            SuiteArg::Frobenius => Suite::Frobenius,
            SuiteArg::Cauchy => Suite::Cauchy,
            SuiteArg::All => Suite::All,
        }
    }
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: gchar_core::Error| e.to_string())
}

fn parse_class(s: &str) -> Result<ClassIndex, String> {
    s.parse().map_err(|e: gchar_core::Error| e.to_string())
}

#[derive(Subcommand)]
enum Command {
    /// Print the table of generalized characters of degree n
    Table {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "paper")]
        scaling: ScalingArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Compute rows in parallel
        #[arg(long)]
        parallel: bool,
        /// Largest accepted degree
        #[arg(long, default_value_t = 8)]
        max_n: usize,
    },
    /// Print one value Γ^{λ,μ} at the class (j, ρ)
    Gamma {
        #[arg(long, value_parser = parse_partition)]
        lam: Partition,
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long, required_unless_present = "class")]
        j: Option<usize>,
        #[arg(long, value_parser = parse_partition, default_value = "")]
        rho: Partition,
        /// Class as a marked partition such as 3*,2,2, instead of --j/--rho
        #[arg(long, value_parser = parse_class, conflicts_with = "j")]
        class: Option<ClassIndex>,
        #[arg(long, value_enum, default_value = "mn")]
        method: Method,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print the generalized Schur function S^{λ,μ}
    Schur {
        #[arg(long, value_parser = parse_partition)]
        lam: Partition,
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long, value_enum, default_value = "schur")]
        basis: BasisArg,
        #[arg(long, value_enum, default_value = "rule")]
        method: SchurMethod,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// List the S(n−1)-classes of S(n) with their sizes
    Classes {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run an invariant suite; exits with status 1 on any failure
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long, default_value_t = 5)]
        n_max: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn usage_error(kind: ErrorKind, message: impl std::fmt::Display) -> ! {
    Cli::command().error(kind, message).exit()
}

fn json_text(v: &Value) -> String {
    let mut text = serde_json::to_string_pretty(v).expect("json values serialise");
    text.push('\n');
    text
}

fn char_pair(lam: Partition, mu: Partition) -> CharPair {
    CharPair::new(lam, mu).unwrap_or_else(|e| usage_error(ErrorKind::ValueValidation, format!("--lam/--mu: {e}")))
}

fn run(cli: Cli) -> Result<(String, ExitCode), gchar_core::Error> {
    let mut out = String::new();
    match cli.command {
        Command::Table { n, scaling, format, parallel, max_n } => {
            if !(2..=max_n).contains(&n) {
                usage_error(ErrorKind::ValueValidation, format!("--n must lie in 2..={max_n}, got {n}"));
            }
            let table = if parallel {
                build_table_parallel(n, scaling.into())?
            } else {
                build_table(n, scaling.into())?
            };
            match format {
                Format::Text => out = table.render_text(),
                Format::Json => out = json_text(&table.to_json()),
            }
        }
        Command::Gamma { lam, mu, j, rho, class, method, format } => {
            let pair = char_pair(lam, mu);
            let class = match class {
                Some(c) => c,
                None => {
                    let j = j.expect("clap requires --j without --class");
                    ClassIndex::new(j, rho).unwrap_or_else(|e| usage_error(ErrorKind::ValueValidation, format!("--j/--rho: {e}")))
                }
            };
            if class.n() != pair.n() {
                usage_error(
                    ErrorKind::ValueValidation,
                    format!("class {} lives in S({}) but |λ| = {}", class.marked_text(), class.n(), pair.n()),
                );
            }
            let (value, name) = match method {
                Method::Mn => (gamma_mn(&pair, &class)?, "mn"),
                Method::Syt => (gamma_syt_oracle(&pair, &class)?, "syt"),
                Method::Def => (gamma_def_oracle(&pair, &class.representative())?, "def"),
            };
            match format {
                Format::Text => out = format!("{}\n", to_text(&value)),
                Format::Json => out = json_text(&json!({
                    "lam": pair.lam().parts(),
                    "mu": pair.mu().parts(),
                    "j": class.j(),
                    "rho": class.rho().parts(),
                    "class": class.marked_text(),
                    "method": name,
                    "value": to_text(&value),
                })),
            }
        }
        Command::Schur { lam, mu, basis, method, format } => {
            let pair = char_pair(lam, mu);
            let poly: LtPoly = match method {
                SchurMethod::Rule => gen_schur(&pair),
                SchurMethod::Characters => gen_schur_from_characters(&pair)?,
                SchurMethod::Determinant => gen_schur_jt(&pair),
            };
            let poly = match basis {
                BasisArg::Schur => poly.to_basis(LtBasis::Schur),
                BasisArg::Powersum => poly.to_basis(LtBasis::PowerSum),
            };
            match format {
                Format::Text => out = format!("{}\n", poly.render()),
                Format::Json => out = json_text(&json!({
                    "lam": pair.lam().parts(),
                    "mu": pair.mu().parts(),
                    "basis": poly.basis().name(),
                    "terms": serde_json::to_value(poly.to_terms()).expect("terms serialise"),
                })),
            }
        }
        Command::Classes { n, format } => {
            if n == 0 {
                usage_error(ErrorKind::ValueValidation, "--n must be positive");
            }
            let classes = classes_of(n);
            match format {
                Format::Text => {
                    for c in &classes {
                        out.push_str(&format!("{}\tj={}\trho={}\torder={}\n", c.marked_text(), c.j(), c.rho(), c.size()));
                    }
                }
                Format::Json => {
                    let rows: Vec<Value> = classes
                        .iter()
                        .map(|c| json!({"marked": c.marked_text(), "j": c.j(), "rho": c.rho().parts(), "order": c.size()}))
                        .collect();
                    out = json_text(&Value::Array(rows));
                }
            }
        }
        Command::Verify { suite, n_max, seed, format } => {
            if n_max == 0 {
                usage_error(ErrorKind::ValueValidation, "--n-max must be positive");
            }
            let report = verify::run(suite.into(), n_max, seed)?;
            match format {
                Format::Text => out = report.render_text(),
                Format::Json => out = json_text(&serde_json::to_value(&report).expect("report serialises")),
            }
            if !report.passed() {
                return Ok((out, ExitCode::from(1)));
            }
        }
    }
    Ok((out, ExitCode::SUCCESS))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, code)) => {
            let mut stdout = std::io::stdout().lock();
            match stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()) {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
                    eprintln!("error: {e}");
                    ExitCode::from(2)
                }
                _ => code,
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
