use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use netop::catalog::AnyModel;
use netop::cli::{apply_cutoff, eval_text, run_check, serialize, AlgebraSpec, CheckKind, Config};
use netop::oracle::{all_passed, CheckConfig, Limits};
use netop::Error;

/// Assemble networks from smaller ones and check the laws that govern it.
#[derive(Parser)]
#[command(name = "netop", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a term file ("-" for stdin) and print the result as JSON.
    Eval {
        #[arg(long)]
        model: String,
        #[command(flatten)]
        algebra: AlgebraArgs,
        file: String,
    },
    /// Run a law suite and print one JSON report per law.
    Check {
        kind: Kind,
        /// Required by every kind except graphic.
        #[arg(long)]
        model: Option<String>,
        /// Largest vertex count drawn or enumerated.
        #[arg(long, conflicts_with = "budget")]
        max_n: Option<usize>,
        /// Same as --max-n.
        #[arg(long)]
        budget: Option<usize>,
        /// Enumerate every case when the count fits in the case budget.
        #[arg(long)]
        exhaustive: bool,
        /// Cases per law in randomized mode.
        #[arg(long, default_value_t = 1000)]
        samples: u64,
        #[arg(long, env = "NETOP_SEED", default_value_t = 0)]
        seed: u64,
        /// Largest multiplicity or label drawn.
        #[arg(long, default_value_t = 3)]
        max_mult: u64,
        #[command(flatten)]
        algebra: AlgebraArgs,
    },
    /// Apply a model morphism to a JSON network read from stdin.
    ApplyMorphism {
        morphism: Morphism,
        #[arg(long)]
        k: u64,
    },
}

#[derive(Args)]
struct AlgebraArgs {
    /// canonical, attributes, range, two-range, bounded or degree-limited.
    #[arg(long, default_value = "canonical")]
    algebra: String,
    /// Algebra parameter such as L=3/2, L1=2, L2=1, k=2 or table=bounds.json.
    #[arg(long = "param", value_name = "KEY=VALUE", value_parser = key_value)]
    params: Vec<(String, String)>,
}

impl AlgebraArgs {
    fn spec(&self) -> netop::Result<AlgebraSpec> {
        AlgebraSpec::parse(&self.algebra, &self.params)
    }
}

fn key_value(s: &str) -> Result<(String, String), String> {
    s.split_once('=')
        .map(|(k, v)| (k.to_string(), v.to_string()))
        .ok_or_else(|| format!("expected KEY=VALUE, got {s}"))
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Thm3,
    Operad,
    Algebra,
    Morphism,
    Graphic,
}

#[derive(Clone, Copy, ValueEnum)]
enum Morphism {
    Cutoff,
}

impl Kind {
    fn check_kind(self) -> CheckKind {
        match self {
            Kind::Thm3 => CheckKind::Thm3,
            Kind::Operad => CheckKind::Operad,
            Kind::Algebra => CheckKind::Algebra,
            Kind::Morphism => CheckKind::Morphism,
            Kind::Graphic => CheckKind::Graphic,
        }
    }

    fn default_max_n(self) -> usize {
        match self {
            Kind::Operad => 6,
            _ => 4,
        }
    }
}

fn read_input(file: &str) -> netop::Result<String> {
    let mut text = String::new();
    let read = if file == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(file).map(|t| text = t)
    };
    read.map_err(|e| Error::Unknown(format!("cannot read {file}: {e}")))?;
    Ok(text)
}

fn run(cli: Cli) -> netop::Result<bool> {
    match cli.command {
        Command::Eval { model, algebra, file } => {
            let cfg = Config {
                model: AnyModel::parse(&model)?,
                algebra: algebra.spec()?,
            };
            let e = eval_text(&read_input(&file)?, &cfg)?;
            println!("{}", serialize(&e)?);
            Ok(true)
        }
        Command::Check {
            kind,
            model,
            max_n,
            budget,
            exhaustive,
            samples,
            seed,
            max_mult,
            algebra,
        } => {
            let model = model.as_deref().map(AnyModel::parse).transpose()?;
            let cfg = CheckConfig {
                max_n: max_n.or(budget).unwrap_or(kind.default_max_n()),
                samples,
                seed,
                exhaustive,
                limits: Limits { max_mult },
                ..CheckConfig::default()
            };
            let reports = run_check(kind.check_kind(), model.as_ref(), &algebra.spec()?, &cfg)?;
            for r in &reports {
                println!("{}", r.to_json_line());
            }
            let failed = reports.iter().filter(|r| !r.passed).count();
            eprintln!("{} laws checked, {failed} failed", reports.len());
            Ok(all_passed(&reports))
        }
        Command::ApplyMorphism {
            morphism: Morphism::Cutoff,
            k,
        } => {
            let input: serde_json::Value = serde_json::from_str(&read_input("-")?)?;
            println!("{}", apply_cutoff(k, &input)?);
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("netop: {e}");
            ExitCode::from(2)
        }
    }
}
