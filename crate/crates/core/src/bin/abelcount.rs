use abelcount::arith::{rat_to_string, to_integer};
use abelcount::lattice::{nu_closed, nu_isotropic, nu_subgroup_formula};
use abelcount::surface::{hyp_h_table, n_fls, n_quotient, SurfaceClassType};
use abelcount::threefold::{n_g_imprimitive, ThreefoldClassType};
use abelcount::verify::{self, Orders, TableFormat, TableKind, TableParams};
use clap::{Parser, Subcommand, ValueEnum};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "abelcount", version, about = "Exact curve counts on abelian surfaces and A x E")]
struct Cli {
    /// q-order for series and series checks
    #[arg(long, global = true, env = "ABELCOUNT_DEFAULT_QMAX")]
    qmax: Option<usize>,
    /// u-order for series in the u-variable
    #[arg(long, global = true)]
    umax: Option<usize>,
    /// p-window for windowed Laurent coefficients
    #[arg(long, global = true)]
    window: Option<i64>,
    /// text, json, csv or plain; the default depends on the subcommand
    #[arg(long, global = true)]
    format: Option<String>,
    /// write output here instead of stdout
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
    /// worker threads for `verify`
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum NuMethod {
    Subgroup,
    Isotropic,
    Closed,
}

#[derive(Clone, Copy, ValueEnum)]
enum CountKind {
    /// N^FLS_{g,(d1,d2)}: takes g d1 d2
    Fls,
    /// N^Q_{g,(d1,d2)}: takes g d1 d2
    Quotient,
    /// h_{g,(1,d)}: takes g d
    Hyp,
    /// N_{g,(d1,d2,d3)} on A x E: takes g d1 d2 d3
    Threefold,
}

#[derive(Subcommand)]
enum Command {
    /// nu(d1, ..., dn)
    Nu {
        #[arg(required = true)]
        d: Vec<u64>,
        #[arg(long, value_enum, default_value = "subgroup")]
        method: NuMethod,
    },
    /// A single invariant
    Count {
        #[arg(value_enum)]
        kind: CountKind,
        #[arg(required = true)]
        args: Vec<u64>,
    },
    /// hyperelliptic, genus2-quotient, genus3 or nu
    Table {
        kind: String,
        #[arg(long)]
        gmax: Option<u32>,
        #[arg(long)]
        dmax: Option<u64>,
    },
    /// Dump a named series as JSON
    Series { name: String },
    /// Run registered checks; `all` or no names runs every one
    Verify {
        names: Vec<String>,
        #[arg(long)]
        list: bool,
    },
}

enum Failure {
    Usage(String),
    Verification(String),
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn run(cli: &Cli) -> Result<String, Failure> {
    if let Some(n) = cli.jobs {
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(usage)?;
    }
    let format = cli.format.as_deref();
    match &cli.command {
        Command::Nu { d, method } => {
            let v = match method {
                NuMethod::Subgroup => nu_subgroup_formula(d).map(|x| x.to_string()),
                NuMethod::Isotropic => nu_isotropic(d).map(|x| x.to_string()),
                NuMethod::Closed => match d.as_slice() {
                    [a, b] => nu_closed(*a, *b).map(|x| x.to_string()),
                    _ => return Err(usage("the closed form takes two entries")),
                },
            };
            Ok(v.map_err(usage)? + "\n")
        }
        Command::Count { kind, args } => {
            let v = match (kind, args.as_slice()) {
                (CountKind::Fls, &[g, a, b]) => n_fls(g as u32, SurfaceClassType::new(a, b).map_err(usage)?),
                (CountKind::Quotient, &[g, a, b]) => n_quotient(g as u32, SurfaceClassType::new(a, b).map_err(usage)?),
                (CountKind::Hyp, &[g, d]) => hyp_h_table(g.max(2) as u32, d as usize)
                    .map(|t| t.get(g as i64, d as i64).cloned().unwrap_or_default()),
                (CountKind::Threefold, &[g, a, b, c]) => {
                    n_g_imprimitive(g as u32, ThreefoldClassType::new(a, b, c).map_err(usage)?)
                }
                _ => return Err(usage("wrong number of arguments for this kind")),
            };
            let v = v.map_err(usage)?;
            Ok(to_integer(&v).map_or_else(|| rat_to_string(&v), |n| n.to_string()) + "\n")
        }
        Command::Table { kind, gmax, dmax } => {
            let kind: TableKind = kind.parse().map_err(usage)?;
            let fmt: TableFormat = format.unwrap_or("csv").parse().map_err(usage)?;
            let mut p = TableParams::default_for(kind);
            p.g_max = gmax.unwrap_or(p.g_max);
            p.d_max = dmax.unwrap_or(p.d_max);
            verify::emit_table(kind, p, fmt).map_err(usage)
        }
        Command::Series { name } => {
            if !matches!(format, None | Some("json")) {
                return Err(usage("series are emitted as json"));
            }
            let s = verify::named_series(name, cli.qmax.unwrap_or(8), cli.umax.unwrap_or(8), cli.window.unwrap_or(24))
                .map_err(usage)?;
            Ok(s.to_json_string() + "\n")
        }
        Command::Verify { names, list } => {
            if *list {
                return Ok(verify::REGISTRY.iter().map(|c| format!("{:<22} {}\n", c.name, c.source)).collect());
            }
            let names: Vec<String> = names.iter().filter(|n| *n != "all").cloned().collect();
            let o = Orders { q_max: cli.qmax, u_max: cli.umax, window: cli.window };
            let reports = verify::run_checks(&names, &o).map_err(usage)?;
            let text = match format.unwrap_or("text") {
                "json" => verify::reports_to_json(&reports),
                "text" | "plain" => reports.iter().map(|r| r.to_line() + "\n").collect(),
                f => return Err(usage(format!("unknown format `{f}`"))),
            };
            if reports.iter().all(|r| r.passed()) {
                Ok(text)
            } else {
                Err(Failure::Verification(text))
            }
        }
    }
}

fn emit(cli: &Cli, text: &str) -> Result<(), Failure> {
    match &cli.out {
        Some(path) => std::fs::write(path, text).map_err(usage),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|t| emit(&cli, &t).map(|_| ()));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(text)) => {
            if emit(&cli, &text).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("abelcount: {msg}");
            ExitCode::from(2)
        }
    }
}
