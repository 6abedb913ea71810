//! Command-line front end: load a workspace (a file or a builtin), dispatch
//! one command, print the report, and exit with the verdict code
//! (0 pass, 2 counterexample, 3 unsupported instance, 4 input error).

use clap::{Parser, Subcommand};
use relhom::catalog::{builtin_catalog, builtin_workspace};
use relhom::commands::{error_exit_code, run, Command};
use relhom::workspace::{load_workspace, Workspace};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "relhom",
    version,
    about = "Exact-arithmetic workbench for relative homological algebra over bound quiver algebras"
)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,

    /// Workspace file path, or `builtin:NAME`
    #[arg(long, global = true, default_value = "builtin:kx2")]
    workspace: String,

    /// Resolution depth override
    #[arg(long, global = true)]
    depth: Option<usize>,

    /// Dimension cap override
    #[arg(long, global = true)]
    cap: Option<usize>,

    /// Sample-count override for randomized checks
    #[arg(long, global = true)]
    samples: Option<usize>,

    /// Seed override for randomized checks
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Write the structured report as JSON to this path
    #[arg(long, global = true)]
    json: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Verb {
    /// Verify the balanced-pair conditions over the corpus
    CheckBalanced {
        #[arg(long, default_value = "proj_inj")]
        pair: String,
    },
    /// Relative Ext dimension tables (one pair of modules, or all corpus pairs)
    ExtTable {
        #[arg(long, default_value = "proj_inj")]
        pair: String,
        m: Option<String>,
        n: Option<String>,
    },
    /// Resolution dimension of a module over a subcategory
    Resdim {
        module: String,
        #[arg(long, default_value = "proj")]
        sub: String,
    },
    /// Verify a relative cotorsion pair on the corpus
    CotorsionCheck {
        #[arg(long)]
        spec: String,
    },
    /// Hereditary tri-equivalence check of a cotorsion spec
    Hereditary {
        #[arg(long)]
        spec: String,
    },
    /// Enough-projectives construction for every corpus object
    Complete {
        #[arg(long)]
        spec: String,
    },
    /// Relative Wakamatsu lemma over the corpus
    Wakamatsu {
        #[arg(long, default_value = "proj")]
        sub: String,
    },
    /// Lift seeded bounded complexes across the registered pair
    Lift {
        #[arg(long, default_value = "proj_inj")]
        pair: String,
    },
    /// Gorenstein verdict with constructive cross-checks
    Gorenstein,
    /// Relative singularity-category triviality verdict
    Singularity {
        #[arg(long, default_value = "proj_inj")]
        pair: String,
    },
    /// Run the full acceptance suite on the builtin catalog
    Selftest,
    /// List the builtin workspaces and their markers
    Catalog,
}

fn load(cli: &Cli) -> relhom::Result<Workspace> {
    let mut w = if let Some(name) = cli.workspace.strip_prefix("builtin:") {
        builtin_workspace(name)?
    } else {
        let text = std::fs::read_to_string(&cli.workspace)?;
        load_workspace(&text)?
    };
    if let Some(d) = cli.depth {
        w.settings.depth = d;
    }
    if let Some(c) = cli.cap {
        w.settings.cap = c;
    }
    if let Some(s) = cli.samples {
        w.settings.samples = s;
    }
    if let Some(s) = cli.seed {
        w.settings.seed = s;
    }
    Ok(w)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Verb::Catalog = cli.verb {
        return match builtin_catalog() {
            Ok(entries) => {
                for e in &entries {
                    let gl = e
                        .global_dimension
                        .map(|g| g.to_string())
                        .unwrap_or_else(|| "infinite".into());
                    println!(
                        "{:<12} dim {:<3} self-injective: {:<5} gl.dim: {:<9} pairs: {}",
                        e.name,
                        e.algebra_dim,
                        e.self_injective,
                        gl,
                        e.registered_pairs.join(", ")
                    );
                }
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(4)
            }
        };
    }
    let workspace = match load(&cli) {
        Ok(w) => w,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(4);
        }
    };
    let command = match &cli.verb {
        Verb::CheckBalanced { pair } => Command::CheckBalanced { pair: pair.clone() },
        Verb::ExtTable { pair, m, n } => {
            Command::ExtTable { pair: pair.clone(), m: m.clone(), n: n.clone() }
        }
        Verb::Resdim { module, sub } => {
            Command::Resdim { module: module.clone(), sub: sub.clone() }
        }
        Verb::CotorsionCheck { spec } => Command::CotorsionCheck { spec: spec.clone() },
        Verb::Hereditary { spec } => Command::Hereditary { spec: spec.clone() },
        Verb::Complete { spec } => Command::Complete { spec: spec.clone() },
        Verb::Wakamatsu { sub } => Command::Wakamatsu { sub: sub.clone() },
        Verb::Lift { pair } => Command::Lift { pair: pair.clone() },
        Verb::Gorenstein => Command::Gorenstein,
        Verb::Singularity { pair } => Command::Singularity { pair: pair.clone() },
        Verb::Selftest => Command::Selftest,
        Verb::Catalog => unreachable!(),
    };
    match run(&command, &workspace) {
        Ok(report) => {
            print!("{}", report.render_text());
            if let Some(path) = &cli.json {
                let payload = serde_json::to_string_pretty(&report)
                    .expect("report serializes");
                if let Err(e) = std::fs::write(path, payload + "\n") {
                    eprintln!("error writing JSON report: {e}");
                    return ExitCode::from(4);
                }
            }
            ExitCode::from(report.status().code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(error_exit_code(&e) as u8)
        }
    }
}
