use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use quiverdim::commands::{self, BoundsArgs, SerreExpect};
use quiverdim::report::{Format, Report};
use quiverdim::{input, tables, with_field, FieldChoice};

#[derive(Parser)]
#[command(name = "quiverdim", version, about = "Exact homological dimensions of quiver algebras")]
struct Cli {
    /// Catalog algebra, e.g. `b_power:2,2` or `example_8_2`
    #[arg(long, global = true)]
    catalog: Option<String>,
    /// Quiver presentation file (TOML)
    #[arg(long, global = true)]
    file: Option<PathBuf>,
    /// Serre functor iterations
    #[arg(long, global = true, default_value_t = 12)]
    steps: usize,
    /// Resolution length cap
    #[arg(long, global = true)]
    cap: Option<usize>,
    /// `q` or `fp:<p>`
    #[arg(long, global = true, default_value = "q")]
    field: FieldChoice,
    #[arg(long, global = true, value_enum, default_value_t = Format::Md)]
    format: Format,
    /// Also write `<table>.csv` and `<table>.md` into this directory
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Basic invariants of an algebra
    Algebra,
    /// Serre functor powers and the lower/upper Serre dimensions
    SerreDim {
        #[arg(long)]
        expect_ls: Option<String>,
        #[arg(long)]
        expect_us: Option<String>,
    },
    /// Fractional Calabi-Yau certificate
    Fcy {
        #[arg(long, default_value_t = 12)]
        max_n: usize,
    },
    /// Tensor powers of the Serre bimodule
    Nilpotence {
        /// Also report the dimension of this power
        #[arg(long)]
        power: Option<usize>,
    },
    /// Run a mutation script
    Mutate { script: PathBuf },
    /// Certified bounds on Rouquier and diagonal dimension
    Bounds {
        /// Vertex slices, e.g. `0,1;2,3`
        #[arg(long)]
        slices: Option<String>,
        /// Exceptional collection in Dynkin groups, e.g. `S2|P0,P1`
        #[arg(long)]
        groups: Option<String>,
        /// Full exceptional collection in blocks, e.g. `S0|P1`
        #[arg(long)]
        blocks: Option<String>,
        /// Exceptional pair with two-dimensional Hom, e.g. `P0,P1`
        #[arg(long)]
        kronecker: Option<String>,
        /// Mutation script starting from the projectives
        #[arg(long = "script")]
        scripts: Vec<PathBuf>,
        /// Tensor factor (catalog name), repeatable
        #[arg(long = "factor")]
        factors: Vec<String>,
        #[arg(long)]
        expect_rdim: Option<String>,
        #[arg(long)]
        expect_ddim: Option<String>,
    },
    /// Trace-kernel spaces and Serre powers of a graded two-vertex quiver
    Psi {
        /// Graded space as `degree:dim,...`
        #[arg(long = "V", allow_hyphen_values = true)]
        v: String,
        #[arg(long, default_value_t = 8)]
        m: usize,
        #[arg(long, default_value_t = 6)]
        max_i: usize,
        #[arg(long, default_value_t = 3)]
        max_k: usize,
    },
    /// Recompute a reference table: coxeter, bmn, intro-family, examples-8
    Reproduce { table: String },
}

fn run(cli: &Cli) -> Result<Report> {
    let (cat, file) = (cli.catalog.as_deref(), cli.file.as_deref());
    with_field!(cli.field, F => {
        match &cli.cmd {
            Cmd::Algebra => {
                let (name, a) = input::select::<F>(cat, file)?;
                Ok(commands::cmd_algebra(&name, &a, cli.cap))
            }
            Cmd::SerreDim { expect_ls, expect_us } => {
                let (name, a) = input::select::<F>(cat, file)?;
                let e = SerreExpect { ls: expect_ls.clone(), us: expect_us.clone() };
                commands::cmd_serre_dim(&name, &a, cli.steps, cli.cap, &e)
            }
            Cmd::Fcy { max_n } => {
                let (name, a) = input::select::<F>(cat, file)?;
                Ok(commands::cmd_fcy(&name, &a, *max_n, cli.cap))
            }
            Cmd::Nilpotence { power } => {
                let (name, a) = input::select::<F>(cat, file)?;
                Ok(commands::cmd_nilpotence(&name, &a, cli.cap.unwrap_or(8), *power))
            }
            Cmd::Mutate { script } => {
                let text = std::fs::read_to_string(script).with_context(|| format!("reading {}", script.display()))?;
                let given = match (cat, file) {
                    (None, None) => None,
                    _ => Some(input::select::<F>(cat, file)?.1),
                };
                commands::cmd_mutate::<F>(&script.display().to_string(), &text, given.as_ref())
            }
            Cmd::Bounds { slices, groups, blocks, kronecker, scripts, factors, expect_rdim, expect_ddim } => {
                let (name, a) = input::select::<F>(cat, file)?;
                let scripts = scripts
                    .iter()
                    .map(|p| std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display())))
                    .collect::<Result<Vec<_>>>()?;
                let args = BoundsArgs {
                    slices: slices.clone(),
                    groups: groups.clone(),
                    blocks: blocks.clone(),
                    kronecker: kronecker.clone(),
                    scripts,
                    factors: factors.clone(),
                    steps: cli.steps,
                    expect_rdim: expect_rdim.clone(),
                    expect_ddim: expect_ddim.clone(),
                };
                commands::cmd_bounds(&name, &a, &args, cli.cap)
            }
            Cmd::Psi { v, m, max_i, max_k } => commands::cmd_psi(v, *m, *max_i, *max_k),
            Cmd::Reproduce { table } => tables::reproduce::<F>(table),
        }
    })
}

fn main() -> ExitCode {
    // exit code 2 is reserved for interval-only reports
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(u8::from(e.use_stderr()));
        }
    };
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(1);
        }
    };
    let emit = || -> Result<()> {
        print!("{}", report.render(cli.format)?);
        if let Some(dir) = &cli.out {
            std::fs::create_dir_all(dir)?;
            let stem: String = report.table.chars().map(|c| if c.is_ascii_alphanumeric() || c == '-' { c } else { '_' }).collect();
            std::fs::write(dir.join(format!("{stem}.csv")), report.to_csv()?)?;
            std::fs::write(dir.join(format!("{stem}.md")), report.to_markdown())?;
        }
        Ok(())
    };
    if let Err(e) = emit() {
        eprintln!("error: {e:#}");
        return ExitCode::from(1);
    }
    for r in report.failures() {
        eprintln!("mismatch: {} {}: expected {}, computed {}", r.algebra, r.quantity, r.expected, r.computed);
    }
    ExitCode::from(report.exit_code() as u8)
}
