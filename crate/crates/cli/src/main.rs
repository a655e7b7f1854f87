//! Batch interface over the rhofield library: render the minimal-polynomial,
//! zero, DSR and Galois-group tables, emit sequence prefixes, run the
//! verification suites, and export cycle graphs as DOT.

use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use rhofield::dsr::reduced_algebra_table;
use rhofield::minpoly::{minimal_poly_recursive, zeros_power_basis};
use rhofield::modd::{
    abelian_type, classical_modn_cycle_structure, classical_modn_group_type, cycle_structure,
    nontrivial_sqrt_one, ModdContext,
};
use rhofield::numthy::euler_phi;

use rhofield_cli::render::*;
use rhofield_cli::{seq, verify};

#[derive(Parser)]
#[command(
    name = "rhofield",
    about = "Exact tables and checks for the fields Q(2cos(pi/n))",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Rejected: every computation here is deterministic.
    #[arg(long, global = true, hide = true)]
    seed: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Csv,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Minimal polynomials C(n, x) (polynomial strings or coefficient rows).
    Minpoly {
        #[arg(long, conflicts_with = "range")]
        n: Option<u64>,
        /// Inclusive range like 1..30.
        #[arg(long)]
        range: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
        /// Emit rising-power coefficient rows instead of polynomial strings.
        #[arg(long)]
        coeffs: bool,
    },
    /// Zeros of C(n, x) in the power basis.
    Zeros {
        #[arg(long, conflicts_with = "range")]
        n: Option<u64>,
        #[arg(long)]
        range: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Reduced DSR-algebra of the regular n-gon.
    Dsr {
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Cycle structure of the Modd-n group (DOT exports cycle graphs).
    Cycles {
        #[arg(long, conflicts_with = "range")]
        n: Option<u64>,
        #[arg(long)]
        range: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Non-cyclic Galois group table (Modd-n or classical mod-n).
    Galois {
        #[arg(long)]
        range: String,
        #[arg(long, value_enum, default_value = "modd")]
        which: WhichGroup,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Sequence prefixes computed locally.
    Seq {
        name: String,
        #[arg(long, default_value = "20")]
        count: u64,
        /// Modulus for the per-n families (oddstar, flist, modd-orders).
        #[arg(long)]
        n: Option<u64>,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Run a verification suite; failures set a nonzero exit code.
    Verify {
        suite: String,
        #[arg(long, default_value = "60")]
        n_max: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WhichGroup {
    Modd,
    Modn,
}

fn parse_range(n: Option<u64>, range: Option<&str>) -> Result<(u64, u64)> {
    match (n, range) {
        (Some(n), None) => Ok((n, n)),
        (None, Some(r)) => {
            let (a, b) = r
                .split_once("..")
                .with_context(|| format!("range must look like A..B, got '{r}'"))?;
            let a: u64 = a.trim().parse().context("range start")?;
            let b: u64 = b.trim().parse().context("range end")?;
            if a == 0 || b < a {
                bail!("range must satisfy 1 <= A <= B, got {a}..{b}");
            }
            Ok((a, b))
        }
        (None, None) => bail!("provide --n N or --range A..B"),
        (Some(_), Some(_)) => bail!("--n and --range are mutually exclusive"),
    }
}

fn no_dot(format: FormatArg) -> Result<()> {
    if format == FormatArg::Dot {
        bail!("dot output is only available for the cycles command");
    }
    Ok(())
}

fn cycles_row(n: u64) -> CyclesDto {
    let ctx = ModdContext::new(n);
    let cs = cycle_structure(&ctx);
    CyclesDto {
        n,
        signature: cs.signature.clone(),
        cycles: cs.cycles,
        sqrt_one: nontrivial_sqrt_one(&ctx),
    }
}

fn run(cli: Cli) -> Result<String> {
    if cli.seed.is_some() {
        bail!("--seed is rejected: every computation is deterministic");
    }
    Ok(match cli.command {
        Command::Minpoly {
            n,
            range,
            format,
            coeffs,
        } => {
            no_dot(format)?;
            let (a, b) = parse_range(n, range.as_deref())?;
            let rows: Vec<MinPolyDto> = (a..=b)
                .map(|n| minpoly_dto(n, &minimal_poly_recursive(n).expect("construction").poly))
                .collect();
            match format {
                FormatArg::Text => minpoly_text(&rows, coeffs),
                FormatArg::Csv => minpoly_csv(&rows),
                FormatArg::Json => serde_json::to_string_pretty(&rows)?,
                FormatArg::Dot => unreachable!(),
            }
        }
        Command::Zeros { n, range, format } => {
            no_dot(format)?;
            let (a, b) = parse_range(n, range.as_deref())?;
            let tables: Vec<_> = (a..=b).map(zeros_power_basis).collect();
            match format {
                FormatArg::Text => zeros_text(&tables),
                FormatArg::Csv => zeros_csv(&tables),
                FormatArg::Json => {
                    let dtos: Vec<ZeroTableDto> = tables.iter().map(zero_table_dto).collect();
                    serde_json::to_string_pretty(&dtos)?
                }
                FormatArg::Dot => unreachable!(),
            }
        }
        Command::Dsr { n, format } => {
            no_dot(format)?;
            if n < 3 {
                bail!("the DSR algebra needs n >= 3");
            }
            let dto = dsr_table_dto(&reduced_algebra_table(n));
            match format {
                FormatArg::Text => dsr_text(&dto),
                FormatArg::Csv => dsr_csv(&dto),
                FormatArg::Json => serde_json::to_string_pretty(&dto)?,
                FormatArg::Dot => unreachable!(),
            }
        }
        Command::Cycles { n, range, format } => {
            let (a, b) = parse_range(n, range.as_deref())?;
            let rows: Vec<CyclesDto> = (a..=b).map(cycles_row).collect();
            match format {
                FormatArg::Text => cycles_text(&rows),
                FormatArg::Csv => cycles_csv(&rows),
                FormatArg::Json => serde_json::to_string_pretty(&rows)?,
                FormatArg::Dot => cycles_dot(&rows),
            }
        }
        Command::Galois {
            range,
            which,
            format,
        } => {
            no_dot(format)?;
            let (a, b) = parse_range(None, Some(&range))?;
            let mut rows = Vec::new();
            for n in a..=b {
                let (order, cs, ty) = match which {
                    WhichGroup::Modd => {
                        let ctx = ModdContext::new(n);
                        (ctx.delta(), cycle_structure(&ctx), abelian_type(&ctx))
                    }
                    WhichGroup::Modn => (
                        if n == 1 { 1 } else { euler_phi(n) },
                        classical_modn_cycle_structure(n),
                        classical_modn_group_type(n),
                    ),
                };
                if ty.is_cyclic() {
                    continue; // the tables list only the non-cyclic groups
                }
                rows.push(GaloisRowDto {
                    n,
                    order,
                    signature: signature_string(&cs),
                    cycle_count: cs.cycle_count(),
                    group: group_string(&ty),
                });
            }
            match format {
                FormatArg::Text => galois_text(&rows),
                FormatArg::Csv => galois_csv(&rows),
                FormatArg::Json => serde_json::to_string_pretty(&rows)?,
                FormatArg::Dot => unreachable!(),
            }
        }
        Command::Seq {
            name,
            count,
            n,
            format,
        } => {
            no_dot(format)?;
            let s = seq::sequence(&name, count, n)?;
            match format {
                FormatArg::Text => sequence_text(&s),
                FormatArg::Csv => sequence_csv(&s),
                FormatArg::Json => serde_json::to_string_pretty(&s)?,
                FormatArg::Dot => unreachable!(),
            }
        }
        Command::Verify { suite, n_max } => {
            let outcome = verify::run_suite(&suite, n_max)?;
            let body = outcome.lines.join("\n");
            if outcome.failed > 0 && !outcome.report_only {
                // print the report before failing the process
                println!("{body}");
                bail!("{} check(s) failed in suite '{suite}'", outcome.failed);
            }
            body
        }
    })
}

fn main() {
    let cli = Cli::parse();
    let out_path = cli.out.clone();
    match run(cli) {
        Ok(body) => {
            if let Some(path) = out_path {
                if let Err(e) = std::fs::write(&path, body + "\n") {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    std::process::exit(2);
                }
            } else {
                println!("{body}");
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(1);
        }
    }
}
