use std::path::PathBuf;

use clap::{Parser, Subcommand};

mod commands;
use commands::ExitStatus;

/// Exact zero-forcing and brushing toolkit for small graphs and their line
/// graphs.
#[derive(Parser)]
#[command(name = "brushforce", version, about)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a named family member and print its JSON.
    Gen {
        /// Family spec, e.g. complete:5, path:4, prism:3x4, chain:2x6.
        spec: String,
    },
    /// Compute the six parameters of a graph and check the line-graph
    /// inequalities.
    Report {
        /// Family spec or path to a graph JSON file.
        input: String,
        #[command(flatten)]
        budgets: BudgetArgs,
        /// Print only the JSON report.
        #[arg(long)]
        json: bool,
    },
    /// Run one of the three certificate translations and verify it by
    /// replay.
    Translate {
        /// Family spec or path to a graph JSON file.
        input: String,
        /// Which translation: 1 = line forcing set to brushing script,
        /// 2 = line forcing set to forcing set, 3 = line brushing script
        /// to brushing script.
        #[arg(long)]
        thm: u8,
        /// Zero-forcing set of the line graph (translations 1 and 2):
        /// comma-separated line-vertex ids or u-v edge pairs.
        #[arg(long)]
        black: Option<String>,
        /// Forcing-run JSON file on the line graph (translations 1 and 2).
        #[arg(long)]
        run: Option<PathBuf>,
        /// Line-graph brush-script JSON file (translation 3).
        #[arg(long)]
        script: Option<PathBuf>,
        /// Cleaning model for translation 3: B (unrestricted) or b
        /// (one brush per edge).
        #[arg(long, default_value = "B")]
        model: String,
        /// Introduce a chain's brush only when a firing would fail without
        /// it (translation 1).
        #[arg(long)]
        lazy: bool,
        /// Directory for the witness JSON and DOT trace.
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
        #[command(flatten)]
        budgets: BudgetArgs,
    },
    /// Sample seeded random graphs, compute reports and hunt for
    /// inequality violations.
    Hunt {
        #[arg(long, default_value_t = 3)]
        n_min: usize,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        #[arg(long, default_value_t = 0.1)]
        p_min: f64,
        #[arg(long, default_value_t = 0.9)]
        p_max: f64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        budgets: BudgetArgs,
    },
    /// Write a graph as DOT or normalized JSON.
    Export {
        /// Family spec or path to a graph JSON file.
        input: String,
        #[arg(long, default_value = "dot")]
        format: String,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(clap::Args)]
struct BudgetArgs {
    /// Max component size for the exact zero-forcing search.
    #[arg(long)]
    budget_z: Option<usize>,
    /// Max component size for the restricted-brushing ordering search.
    #[arg(long)]
    budget_small_b: Option<usize>,
    /// Max component size for the exact brushing search.
    #[arg(long)]
    budget_b_n: Option<usize>,
    /// Max brush total tried by the exact brushing search.
    #[arg(long)]
    budget_b_cap: Option<usize>,
}

impl BudgetArgs {
    fn resolve(&self) -> brushforce::report::Budgets {
        let mut b = brushforce::report::Budgets::from_env();
        if let Some(v) = self.budget_z {
            b.zero_forcing_max = v;
        }
        if let Some(v) = self.budget_small_b {
            b.restricted_max = v;
        }
        if let Some(v) = self.budget_b_n {
            b.brushing_max = v;
        }
        if let Some(v) = self.budget_b_cap {
            b.brushing_cap = v;
        }
        b
    }
}

fn main() {
    let args = Args::parse();
    let outcome = match args.command {
        Command::Gen { spec } => commands::gen(&spec),
        Command::Report {
            input,
            budgets,
            json,
        } => commands::report(&input, &budgets.resolve(), json),
        Command::Translate {
            input,
            thm,
            black,
            run,
            script,
            model,
            lazy,
            out_dir,
            budgets,
        } => commands::translate(commands::TranslateArgs {
            input,
            thm,
            black,
            run,
            script,
            model,
            lazy,
            out_dir,
            budgets: budgets.resolve(),
        }),
        Command::Hunt {
            n_min,
            n_max,
            p_min,
            p_max,
            samples,
            seed,
            budgets,
        } => commands::hunt(n_min, n_max, p_min, p_max, samples, seed, &budgets.resolve()),
        Command::Export { input, format, out } => commands::export(&input, &format, out.as_deref()),
    };
    match outcome {
        Ok(ExitStatus::Ok) => {}
        Ok(ExitStatus::ViolationOrFailedReplay) => std::process::exit(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            std::process::exit(2);
        }
    }
}
