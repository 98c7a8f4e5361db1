use std::io::Read;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use fmrig::derive::{d_n, sym_derive};
use fmrig::freerig::{nf_to_json, tensor_to_json};
use fmrig::laws::{check_distinctness, check_laws, law_names, pairwise_distinct, SuiteConfig};
use fmrig::{
    evaluate, mu, normalize, parse, Carrier, Natural, NormalForm, Rig, RigWithSelfMap, SelfMap,
};

#[derive(Parser, Debug)]
#[command(
    name = "fmrig",
    version,
    about = "Free commutative rigs with a self-map and their derivatives"
)]
struct Cli {
    /// Rank k of the base carrier ℕᵏ.
    #[arg(long, global = true, default_value_t = 1)]
    carrier: usize,

    /// 1 for F(ℕᵏ), 2 for F(F(ℕᵏ)) (variables y[...], self-map g).
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
    level: u8,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Work in the symmetric algebra (no self-map).
    #[arg(long, global = true)]
    symmetric: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the canonical form of an expression.
    Normalize {
        /// Expression, or "-" to read standard input.
        expr: String,
    },
    /// Apply the n-th deriving transformation.
    Derive {
        #[arg(long, default_value = "0")]
        n: Natural,
        expr: String,
    },
    /// Flatten a level-2 expression to level 1.
    Mu { expr: String },
    /// Evaluate in (ℕ, target) with generator i sent to phi[i].
    Eval {
        /// identity, successor, square, double, const-one, const-zero, or a
        /// polynomial such as "x[1]*x[1] + 1".
        #[arg(long)]
        target: String,
        /// Comma-separated image of each generator.
        #[arg(long, value_delimiter = ',')]
        phi: Vec<Natural>,
        expr: String,
    },
    /// Run the law suite.
    Laws {
        #[arg(long, default_value_t = SuiteConfig::default().seed)]
        seed: u64,
        #[arg(long, default_value_t = SuiteConfig::default().cases)]
        cases: usize,
        #[arg(long, default_value_t = SuiteConfig::default().max_depth)]
        depth: usize,
        #[arg(long, value_delimiter = ',', default_values_t = SuiteConfig::default().n_values)]
        n_values: Vec<u64>,
        /// Carrier ranks to cycle through.
        #[arg(long, value_delimiter = ',', default_values_t = SuiteConfig::default().ranks)]
        ranks: Vec<usize>,
        /// Only run these laws.
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
        /// Run cases on one thread.
        #[arg(long)]
        sequential: bool,
        /// List law names and exit.
        #[arg(long)]
        list: bool,
    },
    /// Evaluate ₙd(f(x₁)) in (ℕ, id) for each n.
    Distinctness {
        #[arg(long, value_delimiter = ',', default_values_t = (0..=10).collect::<Vec<u64>>())]
        n_values: Vec<u64>,
    },
}

fn read_expr(expr: &str) -> Result<String> {
    if expr != "-" {
        return Ok(expr.to_string());
    }
    let mut buf = String::new();
    std::io::stdin()
        .read_to_string(&mut buf)
        .context("reading standard input")?;
    Ok(buf)
}

fn rig(cli: &Cli) -> Rig {
    let base = Carrier::Nat(cli.carrier);
    let r = if cli.symmetric {
        Rig::symmetric(base)
    } else {
        Rig::free(base)
    };
    if cli.level == 2 {
        r.lift()
    } else {
        r
    }
}

fn element(cli: &Cli, expr: &str) -> Result<NormalForm> {
    let rig = rig(cli);
    let text = read_expr(expr)?;
    let term = parse(&text, rig.base())?;
    Ok(normalize(&term, &rig)?)
}

fn emit(format: Format, text: String, structured: serde_json::Value) {
    match format {
        Format::Text => println!("{text}"),
        Format::Structured => println!("{structured}"),
    }
}

fn run(cli: &Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Normalize { expr } => {
            let a = element(cli, expr)?;
            emit(cli.format, a.to_string(), nf_to_json(&a));
        }
        Command::Derive { n, expr } => {
            let a = element(cli, expr)?;
            let t = if cli.symmetric {
                sym_derive(&a)?
            } else {
                d_n(&a, n)
            };
            emit(cli.format, t.to_string(), tensor_to_json(&t));
        }
        Command::Mu { expr } => {
            if cli.level != 2 {
                bail!("mu takes a level-2 expression; pass --level 2");
            }
            let a = mu(&element(cli, expr)?)?;
            emit(cli.format, a.to_string(), nf_to_json(&a));
        }
        Command::Eval { target, phi, expr } => {
            if cli.level != 1 {
                bail!("eval takes a level-1 expression");
            }
            if phi.len() != cli.carrier {
                bail!(
                    "--phi needs {} value(s), one per generator; got {}",
                    cli.carrier,
                    phi.len()
                );
            }
            let target = RigWithSelfMap::new(target.parse::<SelfMap>()?);
            let v = evaluate(&element(cli, expr)?, &target, phi)?;
            emit(cli.format, v.to_string(), json!(v.to_string()));
        }
        Command::Laws {
            seed,
            cases,
            depth,
            n_values,
            ranks,
            only,
            sequential,
            list,
        } => {
            if *list {
                for name in law_names() {
                    println!("{name}");
                }
                return Ok(ExitCode::SUCCESS);
            }
            let cfg = SuiteConfig {
                seed: *seed,
                cases: *cases,
                max_depth: *depth,
                n_values: n_values.clone(),
                ranks: ranks.clone(),
                only: (!only.is_empty()).then(|| only.clone()),
                parallel: !sequential,
                ..SuiteConfig::default()
            };
            if let Err(msg) = cfg.validate() {
                bail!(msg);
            }
            let report = check_laws(&cfg);
            match cli.format {
                Format::Text => print!("{}", report.table()),
                Format::Structured => println!("{}", report.to_json(true)),
            }
            if !report.passed() {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Distinctness { n_values } => {
            if n_values.is_empty() {
                bail!("--n-values must not be empty");
            }
            let pairs = check_distinctness(n_values);
            let distinct = pairwise_distinct(&pairs);
            match cli.format {
                Format::Text => {
                    for (n, v) in &pairs {
                        println!("n = {n}: {v}");
                    }
                    println!("pairwise distinct: {distinct}");
                }
                Format::Structured => {
                    let rows: Vec<_> = pairs
                        .iter()
                        .map(|(n, v)| json!({ "n": n, "value": v.to_string() }))
                        .collect();
                    println!(
                        "{}",
                        json!({ "values": rows, "pairwise_distinct": distinct })
                    );
                }
            }
            if !distinct {
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
