use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use fibcube::bitstring::{count_by_weight, weight_count_source};
use fibcube::graph::CubeGraph;
use fibcube::maximal::enumerate_maximal;
use fibcube::poly::{expand_generating_function, poly_by_formula, poly_by_recurrence};
use fibcube::{Error, Family, DEFAULT_ORACLE_CAP};
use fibcube_cli::render::{cubes_csv, cubes_json, Method, PolyTable};
use fibcube_cli::{exit, verify, MAX_ENUMERATE_N, MAX_FORMULA_N, ORACLE_CAP_ENV};

#[derive(Parser)]
#[command(
    name = "fibcube",
    version,
    about = "Maximal hypercubes of Fibonacci and Lucas cubes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    #[value(alias = "fibonacci")]
    Gamma,
    #[value(alias = "lucas")]
    Lambda,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Gamma => Family::Fibonacci,
            FamilyArg::Lambda => Family::Lucas,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Formula,
    Recurrence,
    Series,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum CubeFormat {
    Json,
    Csv,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print counting polynomials of maximal hypercubes.
    Poly {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// A single order.
        #[arg(long, conflicts_with = "n_max")]
        n: Option<usize>,
        /// All orders 0..=N.
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long, value_enum, default_value = "formula")]
        method: MethodArg,
        #[arg(long, value_enum, default_value = "text")]
        format: TableFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the maximal hypercubes of one graph.
    Enumerate {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: CubeFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Count strings by weight.
    Weights {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run every cross-check and report.
    Verify {
        /// Largest order for brute-force checks (default: the oracle cap).
        #[arg(long)]
        oracle_max: Option<usize>,
        /// Largest order for formula-level checks.
        #[arg(long, default_value_t = MAX_FORMULA_N)]
        n_max: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Replace the Fibonacci count with a broken one (exercises failure reporting).
        #[arg(long, hide = true)]
        corrupt_formula: bool,
    },
}

/// A failure carrying its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ResourceCap { .. } => exit::RESOURCE,
            _ => exit::USAGE,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

fn resource(what: &'static str, n: usize, cap: usize) -> Failure {
    Error::ResourceCap { what, n, cap }.into()
}

fn emit(out: &Option<PathBuf>, data: &str) -> Result<(), Failure> {
    match out {
        None => {
            print!("{data}");
            Ok(())
        }
        Some(path) => fs::write(path, data).map_err(|e| Failure {
            code: exit::USAGE,
            message: format!("cannot write {}: {e}", path.display()),
        }),
    }
}

fn oracle_cap() -> Result<usize, Failure> {
    match std::env::var(ORACLE_CAP_ENV) {
        Err(_) => Ok(DEFAULT_ORACLE_CAP),
        Ok(v) => v.trim().parse().map_err(|_| Failure {
            code: exit::USAGE,
            message: format!("{ORACLE_CAP_ENV}={v} is not a non-negative integer"),
        }),
    }
}

fn poly_table(family: Family, ns: Vec<usize>, methods: Vec<Method>) -> Result<PolyTable, Failure> {
    let max = ns.iter().copied().max().unwrap_or(0);
    let series = expand_generating_function::<u64>(max, family)?;
    let mut rows = Vec::with_capacity(ns.len());
    for n in ns {
        let polys = methods
            .iter()
            .map(|m| match m {
                Method::Formula => poly_by_formula::<u64>(n, family),
                Method::Recurrence => poly_by_recurrence::<u64>(n, family),
                Method::Series => Ok(series.row(n).clone()),
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push((n, polys));
    }
    Ok(PolyTable {
        family,
        methods,
        rows,
    })
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Poly {
            family,
            n,
            n_max,
            method,
            format,
            out,
        } => {
            let ns: Vec<usize> = match (n, n_max) {
                (Some(n), _) => vec![n],
                (None, Some(m)) => (0..=m).collect(),
                (None, None) => {
                    return Err(Failure {
                        code: exit::USAGE,
                        message: "one of --n or --n-max is required".into(),
                    })
                }
            };
            let top = *ns.last().unwrap();
            if top > MAX_FORMULA_N {
                return Err(resource("polynomial table", top, MAX_FORMULA_N));
            }
            let methods = match method {
                MethodArg::Formula => vec![Method::Formula],
                MethodArg::Recurrence => vec![Method::Recurrence],
                MethodArg::Series => vec![Method::Series],
                MethodArg::All => Method::ALL.to_vec(),
            };
            let table = poly_table(family.into(), ns, methods)?;
            let data = match format {
                TableFormat::Text => table.to_text(),
                TableFormat::Json => table.to_json(),
                TableFormat::Csv => table.to_csv(),
            };
            emit(&out, &data)?;
            Ok(if table.agrees() {
                exit::OK
            } else {
                exit::VERIFICATION_FAILED
            })
        }
        Command::Enumerate {
            family,
            n,
            format,
            out,
        } => {
            let family = Family::from(family);
            if n > MAX_ENUMERATE_N {
                return Err(resource("maximal cube listing", n, MAX_ENUMERATE_N));
            }
            let cubes = enumerate_maximal(n, family)?;
            let data = match format {
                CubeFormat::Json => cubes_json(&cubes),
                CubeFormat::Csv => cubes_csv(n, family, &cubes),
                CubeFormat::Dot => {
                    let tops: Vec<_> = cubes.iter().map(|h| h.top()).collect();
                    CubeGraph::build(n, family)?.to_dot_highlighting(&tops)
                }
            };
            emit(&out, &data)?;
            Ok(exit::OK)
        }
        Command::Weights { family, n, out } => {
            let family = Family::from(family);
            let source = weight_count_source(family);
            let mut data = String::from("n,family,w,count,source\n");
            for w in 0..=n {
                let c = count_by_weight(n, w, family)?;
                data.push_str(&format!("{n},{family},{w},{c},{source}\n"));
            }
            emit(&out, &data)?;
            Ok(exit::OK)
        }
        Command::Verify {
            oracle_max,
            n_max,
            format,
            out,
            corrupt_formula,
        } => {
            let cap = oracle_cap()?;
            let oracle_max = oracle_max.unwrap_or(cap);
            if oracle_max > cap {
                return Err(resource("brute-force maximal cube search", oracle_max, cap));
            }
            if n_max > MAX_FORMULA_N {
                return Err(resource("formula checks", n_max, MAX_FORMULA_N));
            }
            let formulas = if corrupt_formula {
                verify::Formulas::corrupted()
            } else {
                verify::Formulas::default()
            };
            let report = verify::run(oracle_max, n_max, cap, formulas);
            for c in &report.checks {
                eprintln!("{} [{}]: {:.3?}", c.name, c.parameters, c.wall_time);
            }
            let data = match format {
                ReportFormat::Text => report.to_text(),
                ReportFormat::Json => {
                    serde_json::to_string_pretty(&report).expect("serializing report") + "\n"
                }
            };
            emit(&out, &data)?;
            Ok(if report.passed() {
                exit::OK
            } else {
                exit::VERIFICATION_FAILED
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
