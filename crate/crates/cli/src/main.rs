//! `tca`: command-line access to the tca-core computations. Every command
//! prints one JSON document (or CSV for growth tables with `--format csv`)
//! on stdout; failures print a one-line diagnostic on stderr and exit 1.

use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Map, Value};

use tca_core::dims::{schur_dim, specht_dim, TwoRowLengths};
use tca_core::growth::{
    estimate_slope, gk_free_tca_generated, gk_sl2_invariants, gk_sym_triv2, GrowthTable, UnitLengths,
};
use tca_core::invariants::{
    equivariant_character, fixed_space, flat_weight_report, molien_dims, AnyGroup, Field, FieldSpec,
    GeneratorAnalysis, GroupFile, MatrixGroup, DEFAULT_GROUP_CAP,
};
use tca_core::json::uint_value;
use tca_core::partitions::enumerate_partitions;
use tca_core::symfunc::{flat_weight_dim, lr_product, SchurExpansion};
use tca_core::tensor_algebra::schur_weyl_decompose;
use tca_core::Partition;

/// Environment variable overriding the group-closure cap.
const GROUP_CAP_VAR: &str = "TCA_GROUP_CAP";

#[derive(Parser)]
#[command(name = "tca", version, about = "Exact Schur-Weyl, invariant and growth computations for tensor algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Partition utilities.
    #[command(subcommand)]
    Partitions(PartitionsCmd),
    /// Schur and Specht module dimensions.
    #[command(subcommand)]
    Dim(DimCmd),
    /// Specht multiplicities in T(k^m)_n.
    SchurWeyl {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        degree: usize,
    },
    /// Littlewood-Richardson product s_mu * s_nu.
    Lr {
        #[arg(long, value_parser = parse_partition, allow_hyphen_values = true)]
        mu: Partition,
        #[arg(long, value_parser = parse_partition, allow_hyphen_values = true)]
        nu: Partition,
    },
    /// Flat weight dimension of a Schur expansion read from a JSON file.
    SchurFunctor {
        #[arg(long)]
        expansion: PathBuf,
        #[arg(long)]
        degree: usize,
    },
    /// Finite group invariants of T(W).
    #[command(subcommand)]
    Invariants(InvariantsCmd),
    /// Growth tables and slope fits.
    #[command(subcommand)]
    Gk(GkCmd),
}

#[derive(Subcommand)]
enum PartitionsCmd {
    /// All partitions of n in decreasing lexicographic order.
    Enum {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_parts: Option<usize>,
    },
}

#[derive(Subcommand)]
enum DimCmd {
    /// dim S_lambda(k^m).
    Schur {
        #[arg(long, value_parser = parse_partition, allow_hyphen_values = true)]
        shape: Partition,
        #[arg(long)]
        rank: usize,
    },
    /// dim S^lambda.
    Specht {
        #[arg(long, value_parser = parse_partition, allow_hyphen_values = true)]
        shape: Partition,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Molien averaging when the characteristic does not divide |G|, the
    /// kernel otherwise.
    Auto,
    Molien,
    Kernel,
}

#[derive(Args)]
struct GroupArg {
    /// Group description: {"field": ..., "size": m, "generators": [...]}.
    #[arg(long)]
    group: PathBuf,
}

#[derive(Subcommand)]
enum InvariantsCmd {
    /// dim T(W)^G_n for n = 0..=max-degree.
    Dims {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long)]
        max_degree: usize,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
    },
    /// Basis of T(W)^G_n on the word basis.
    Basis {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long)]
        degree: usize,
    },
    /// S_n-character of T(W)^G_n and its Specht multiplicities.
    Character {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long)]
        degree: usize,
    },
    /// New tca generators per degree.
    Newgens {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long)]
        max_degree: usize,
    },
    /// Compare the word-basis invariants with the polynomial-ring model.
    Crosscheck {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long)]
        degree: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Lengths {
    /// 1 in characteristic 0; rectangles only in characteristic p.
    Default,
    /// 1 for every shape: a lower bound in characteristic p.
    Unit,
}

#[derive(Subcommand)]
enum GkCmd {
    /// Free tca T(k^m).
    Free {
        #[arg(long)]
        rank: usize,
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u64,
        #[arg(long)]
        max: usize,
        /// Measure against generators of degree <= this.
        #[arg(long, default_value_t = 1)]
        generator_degree: usize,
        #[arg(long, value_enum, default_value_t = Lengths::Default)]
        lengths: Lengths,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Sym(triv_2).
    SymTriv2 {
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u64,
        #[arg(long)]
        max: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// SL_2-invariants of T(k^2).
    Sl2 {
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u64,
        #[arg(long)]
        max: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Log-log least-squares slope of a table (CSV or JSON; `-` is stdin).
    Slope {
        #[arg(long, default_value = "-")]
        table: String,
        #[arg(long, value_parser = parse_window)]
        window: (usize, usize),
    },
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse::<Partition>().map_err(|e| e.to_string())
}

fn parse_window(s: &str) -> Result<(usize, usize), String> {
    let (lo, hi) = s.split_once(':').ok_or_else(|| format!("window must look like LO:HI, got {s:?}"))?;
    let lo = lo.trim().parse().map_err(|_| format!("bad window start {lo:?}"))?;
    let hi = hi.trim().parse().map_err(|_| format!("bad window end {hi:?}"))?;
    Ok((lo, hi))
}

type CmdResult = Result<String, String>;

fn to_json<T: Serialize>(value: &T) -> CmdResult {
    serde_json::to_string(value).map_err(|e| e.to_string())
}

fn read_text(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

fn group_cap() -> Result<usize, String> {
    match std::env::var(GROUP_CAP_VAR) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(cap) if cap > 0 => Ok(cap),
            _ => Err(format!("{GROUP_CAP_VAR} must be a positive integer, got {v:?}")),
        },
        Err(_) => Ok(DEFAULT_GROUP_CAP),
    }
}

fn load_group(arg: &GroupArg) -> Result<AnyGroup, String> {
    let text = read_text(&arg.group)?;
    let file: GroupFile =
        serde_json::from_str(&text).map_err(|e| format!("bad group file {}: {e}", arg.group.display()))?;
    file.load(group_cap()?).map_err(|e| e.to_string())
}

fn invariant_dims<F: Field>(g: &MatrixGroup<F>, max_degree: usize, method: Method) -> CmdResult {
    let use_molien = match method {
        Method::Molien => true,
        Method::Kernel => false,
        Method::Auto => !g.is_modular(),
    };
    let dims: Vec<Value> = if use_molien {
        match molien_dims(g, max_degree) {
            Ok(d) => d.iter().map(uint_value).collect(),
            // no integral lift: fall back to kernels unless molien was asked for
            Err(e) if method == Method::Molien => return Err(e.to_string()),
            Err(_) => kernel_dims(g, max_degree)?,
        }
    } else {
        kernel_dims(g, max_degree)?
    };
    to_json(&dims)
}

fn kernel_dims<F: Field>(g: &MatrixGroup<F>, max_degree: usize) -> Result<Vec<Value>, String> {
    (0..=max_degree).map(|n| fixed_space(g, n).map(|s| Value::from(s.dim())).map_err(|e| e.to_string())).collect()
}

fn with_group<R>(
    group: &AnyGroup,
    rational: impl FnOnce(&MatrixGroup<tca_core::invariants::Rationals>) -> R,
    prime: impl FnOnce(&MatrixGroup<tca_core::invariants::PrimeField>) -> R,
) -> R {
    match group {
        AnyGroup::Rational(g) => rational(g),
        AnyGroup::Prime(g) => prime(g),
    }
}

fn character<F: Field>(g: &MatrixGroup<F>, degree: usize) -> CmdResult {
    let (chi, mults) = equivariant_character(g, degree).map_err(|e| e.to_string())?;
    let payload = json!({
        "character": serde_json::to_value(&chi).map_err(|e| e.to_string())?,
        "multiplicities": Value::Object(mults.iter().map(|(l, k)| (l.to_string(), uint_value(k))).collect()),
    });
    to_json(&payload)
}

fn newgens<F: Field>(g: &MatrixGroup<F>, max_degree: usize) -> CmdResult {
    let analysis = GeneratorAnalysis::new(g, max_degree).map_err(|e| e.to_string())?;
    to_json(&analysis.reports())
}

fn emit_table(table: &GrowthTable, format: Format) -> CmdResult {
    match format {
        Format::Json => to_json(table),
        Format::Csv => Ok(table.to_csv().trim_end().to_string()),
    }
}

fn run(cli: Cli) -> CmdResult {
    let field = |c: u64| FieldSpec::from_characteristic(c).map_err(|e| e.to_string());
    match cli.command {
        Command::Partitions(PartitionsCmd::Enum { n, max_parts }) => {
            let parts = enumerate_partitions(n, max_parts);
            to_json(&json!({ "n": n, "count": parts.len(), "partitions": parts }))
        }
        Command::Dim(DimCmd::Schur { shape, rank }) => to_json(&json!({ "dim": uint_value(&schur_dim(&shape, rank)) })),
        Command::Dim(DimCmd::Specht { shape }) => to_json(&json!({ "dim": uint_value(&specht_dim(&shape)) })),
        Command::SchurWeyl { rank, degree } => {
            let mults = schur_weyl_decompose(rank, degree).map_err(|e| e.to_string())?;
            let map: Map<String, Value> = mults.iter().map(|(l, k)| (l.to_string(), uint_value(k))).collect();
            to_json(&json!({ "rank": rank, "degree": degree, "multiplicities": map }))
        }
        Command::Lr { mu, nu } => to_json(&lr_product(&mu, &nu).map_err(|e| e.to_string())?),
        Command::SchurFunctor { expansion, degree } => {
            let text = read_text(&expansion)?;
            let x: SchurExpansion =
                serde_json::from_str(&text).map_err(|e| format!("bad expansion {}: {e}", expansion.display()))?;
            to_json(&json!({ "degree": degree, "dim": tca_core::json::int_value(&flat_weight_dim(&x, degree)) }))
        }
        Command::Invariants(cmd) => match cmd {
            InvariantsCmd::Dims { group, max_degree, method } => {
                let g = load_group(&group)?;
                with_group(&g, |g| invariant_dims(g, max_degree, method), |g| invariant_dims(g, max_degree, method))
            }
            InvariantsCmd::Basis { group, degree } => {
                let g = load_group(&group)?;
                with_group(
                    &g,
                    |g| to_json(&fixed_space(g, degree).map_err(|e| e.to_string())?),
                    |g| to_json(&fixed_space(g, degree).map_err(|e| e.to_string())?),
                )
            }
            InvariantsCmd::Character { group, degree } => {
                let g = load_group(&group)?;
                with_group(&g, |g| character(g, degree), |g| character(g, degree))
            }
            InvariantsCmd::Newgens { group, max_degree } => {
                let g = load_group(&group)?;
                with_group(&g, |g| newgens(g, max_degree), |g| newgens(g, max_degree))
            }
            InvariantsCmd::Crosscheck { group, degree } => {
                let g = load_group(&group)?;
                with_group(
                    &g,
                    |g| to_json(&flat_weight_report(g, degree).map_err(|e| e.to_string())?),
                    |g| to_json(&flat_weight_report(g, degree).map_err(|e| e.to_string())?),
                )
            }
        },
        Command::Gk(cmd) => match cmd {
            GkCmd::Free { rank, characteristic, max, generator_degree, lengths, format } => {
                let spec = field(characteristic)?;
                let mut table = match lengths {
                    Lengths::Default => {
                        gk_free_tca_generated(rank, spec, max, generator_degree, &TwoRowLengths::new(characteristic))
                    }
                    Lengths::Unit => gk_free_tca_generated(rank, spec, max, generator_degree, &UnitLengths { characteristic }),
                }
                .map_err(|e| match e {
                    tca_core::Error::UnsupportedLength(_) if lengths == Lengths::Default && rank <= 2 => {
                        format!("{e} (--lengths unit gives a lower bound)")
                    }
                    e => e.to_string(),
                })?;
                if lengths == Lengths::Unit && characteristic != 0 {
                    table.notes.push("lower bound: every length is taken to be 1".into());
                }
                emit_table(&table, format)
            }
            GkCmd::SymTriv2 { characteristic, max, format } => {
                emit_table(&gk_sym_triv2(max, field(characteristic)?).map_err(|e| e.to_string())?, format)
            }
            GkCmd::Sl2 { characteristic, max, format } => {
                emit_table(&gk_sl2_invariants(field(characteristic)?, max).map_err(|e| e.to_string())?, format)
            }
            GkCmd::Slope { table, window } => {
                let text = if table == "-" {
                    let mut buf = String::new();
                    io::stdin().read_to_string(&mut buf).map_err(|e| format!("cannot read stdin: {e}"))?;
                    buf
                } else {
                    read_text(Path::new(&table))?
                };
                let table = GrowthTable::parse(&text).map_err(|e| e.to_string())?;
                to_json(&estimate_slope(&table, window).map_err(|e| e.to_string())?)
            }
        },
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            let text = e.render().to_string();
            let line = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("invalid arguments");
            eprintln!("{}", line.trim());
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}
