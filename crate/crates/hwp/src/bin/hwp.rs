use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use hwp::constructions::route;
use hwp::corekit::{read_certificate, write_certificate};
use hwp::mrsm::{table_family, validate_table_family, walecki_2kx, walecki_kx};
use hwp::providers::{
    cx_factorization_k2x_minus_f, cx_factorization_k4x_minus_f, resolvable_cm_factorization_equipartite, Factorization,
    ProviderOptions,
};
use hwp::{HwpError, NKind, Params, SolveOptions};

#[derive(Parser)]
#[command(name = "hwp", version, about = "Build and check resolvable (C_6, C_N)-decompositions of K_v minus a 1-factor")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Construct HWP(6xt; 6, N; 1, 3xt-2), verify it and write the certificate.
    Solve {
        #[arg(long)]
        x: usize,
        #[arg(long, default_value_t = 1)]
        t: usize,
        /// N = 2x or N = 3x
        #[arg(long, value_parser = parse_nkind)]
        n: NKind,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        prov: ProviderArgs,
    },
    /// Check a certificate. Exit status 0 iff every check passes.
    Verify { file: PathBuf },
    /// Dump the difference tables used for N = 2x, x even.
    Mrsm {
        #[arg(long)]
        x: usize,
    },
    /// Dump the Walecki Hamilton cycles on x vertices.
    Walecki {
        #[arg(long)]
        x: usize,
    },
    /// Find a resolvable cycle factorization and dump it in the provider format.
    Search {
        #[arg(long, value_enum)]
        graph: GraphKind,
        /// For k2x-f / k4x-f: the cycle length is x.
        #[arg(long)]
        x: Option<usize>,
        /// For equipartite: part size.
        #[arg(long)]
        h: Option<usize>,
        /// For equipartite: number of parts.
        #[arg(long)]
        u: Option<usize>,
        /// For equipartite: cycle length.
        #[arg(long)]
        cycle: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        prov: ProviderArgs,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphKind {
    /// K_2x minus a 1-factor
    K2xF,
    /// K_4x minus a 1-factor
    K4xF,
    /// K_(h:u)
    Equipartite,
}

#[derive(clap::Args)]
struct ProviderArgs {
    /// Backtracking nodes per search strategy (default: $HWP_SEARCH_BUDGET or 10^7).
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long)]
    seed: Option<u64>,
    /// Provider-format factorization files to use instead of searching.
    #[arg(long = "import")]
    imports: Vec<PathBuf>,
}

impl ProviderArgs {
    fn options(&self) -> Result<ProviderOptions, HwpError> {
        let mut o = ProviderOptions::default();
        if let Some(b) = self.budget {
            o.budget = b;
        }
        if let Some(s) = self.seed {
            o.seed = s;
        }
        for p in &self.imports {
            let f = Factorization::from_json(&std::fs::read_to_string(p)?)?;
            o.imports.push(f);
        }
        Ok(o)
    }
}

fn parse_nkind(s: &str) -> Result<NKind, String> {
    s.parse::<NKind>().map_err(|e| e.to_string())
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), HwpError> {
    match out {
        Some(p) => std::fs::write(p, text)?,
        None => println!("{text}"),
    }
    Ok(())
}

fn fail(e: &HwpError) -> ExitCode {
    eprintln!("error: {e}");
    match e {
        HwpError::Unsupported(_) => ExitCode::from(2),
        _ => ExitCode::from(1),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => code,
        Err(e) => fail(&e),
    }
}

fn run(cmd: Cmd) -> Result<ExitCode, HwpError> {
    match cmd {
        Cmd::Solve { x, t, n, out, prov } => {
            let p = Params::new(x, t, n)?;
            let r = route(&p)?;
            let opts = SolveOptions { providers: prov.options()? };
            let cert = hwp::solve(&p, &opts)?;
            match &out {
                Some(path) => {
                    write_certificate(&cert, path)?;
                    eprintln!("{p}: route {r:?}, verified, written to {}", path.display());
                }
                None => println!("{}", cert.to_json()?),
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify { file } => {
            let cert = read_certificate(&file)?;
            let rep = hwp::verify(&cert);
            print!("{rep}");
            Ok(if rep.is_valid() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Cmd::Mrsm { x } => {
            let (class, tables) = table_family(x)?;
            let report = validate_table_family(x, class, &tables);
            let v = json!({ "x": x, "class": class, "tables": tables, "checks": report });
            emit(&serde_json::to_string_pretty(&v)?, None)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Walecki { x } => {
            let fam = if x % 2 == 0 { walecki_2kx(x)? } else { walecki_kx(x)? };
            emit(&serde_json::to_string_pretty(&fam)?, None)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Search { graph, x, h, u, cycle, out, prov } => {
            let opts = prov.options()?;
            let need = |v: Option<usize>, name: &str| v.ok_or_else(|| HwpError::InvalidInput(format!("--{name} is required")));
            let (f, prov) = match graph {
                GraphKind::K2xF => {
                    let x = need(x, "x")?;
                    (cx_factorization_k2x_minus_f(x, &opts)?.0, None)
                }
                GraphKind::K4xF => {
                    let x = need(x, "x")?;
                    (cx_factorization_k4x_minus_f(x, &opts)?.0, None)
                }
                GraphKind::Equipartite => {
                    let (f, p) = resolvable_cm_factorization_equipartite(need(h, "h")?, need(u, "u")?, need(cycle, "cycle")?, &opts)?;
                    (f, Some(p))
                }
            };
            if let Some(p) = prov {
                eprintln!("source: {}", serde_json::to_string(&p)?);
            }
            emit(&f.to_json()?, out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
    }
}
