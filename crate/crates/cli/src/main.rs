use std::process::ExitCode;

use anyhow::Result;
use clap::{Args, Parser, Subcommand};
use klr_cli::{
    cmd_classify, cmd_crystal, cmd_dims, cmd_kleshchev, cmd_tables, parse_beta, parse_nu, parse_partition, resolve_k,
    Format, Output,
};

/// Block invariants of level-one cyclotomic KLR algebras of affine type C.
#[derive(Parser, Debug)]
#[command(name = "klr", version)]
struct Cli {
    /// Worker threads for table computations.
    #[arg(long, env = "KLR_JOBS", global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Node {
    /// Rank ℓ ≥ 2.
    #[arg(long)]
    ell: usize,
    /// Fundamental weight index k in 0..=ℓ.
    #[arg(long, conflicts_with = "charge")]
    k: Option<usize>,
    /// Charge κ; reduced to k by the folding map.
    #[arg(long, allow_hyphen_values = true)]
    charge: Option<i64>,
}

const FORMATS: [&str; 4] = ["json", "csv", "dot", "plain"];

#[derive(Subcommand, Debug)]
enum Command {
    /// Representation type of the block R^{Λ_k}(β).
    Classify {
        #[command(flatten)]
        node: Node,
        /// Coefficients of β on α_0..α_ℓ, comma-separated.
        #[arg(long)]
        beta: String,
        #[arg(long, default_value = "json", value_parser = FORMATS)]
        format: String,
    },
    /// Graded dimensions dim_q e(ν) R^{Λ_k}(β) e(ν′).
    Dims {
        #[command(flatten)]
        node: Node,
        #[arg(long)]
        beta: String,
        /// Residue sequence, as digits ("1210") or a comma list.
        #[arg(long, requires = "nu2")]
        nu: Option<String>,
        #[arg(long, requires = "nu")]
        nu2: Option<String>,
        #[arg(long, default_value = "csv", value_parser = FORMATS)]
        format: String,
    },
    /// The crystal of V(Λ_κ) on partitions of size at most --nmax.
    Crystal {
        #[command(flatten)]
        node: Node,
        #[arg(long)]
        nmax: usize,
        #[arg(long, default_value = "dot", value_parser = FORMATS)]
        format: String,
    },
    /// Whether a partition is Kleshchev.
    Kleshchev {
        #[command(flatten)]
        node: Node,
        /// Parts, comma-separated, e.g. 2,2,1.
        #[arg(long, allow_hyphen_values = true)]
        partition: String,
        #[arg(long, default_value = "plain", value_parser = FORMATS)]
        format: String,
    },
    /// Recompute the published dimension tables and compare.
    Tables {
        /// One of tame-table, onedelta, xik2, xik4, twodelta, all.
        #[arg(default_value = "all")]
        selector: String,
        #[arg(long, default_value = "plain", value_parser = FORMATS)]
        format: String,
    },
}

/// The charge to use for Fock-space commands: `--charge` as given, or `k`.
fn charge_of(node: &Node) -> Result<i64> {
    let k = resolve_k(node.ell, node.k, node.charge)?;
    Ok(node.charge.unwrap_or(k as i64))
}

fn run(cli: Cli) -> Result<Output> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global()?;
    }
    match cli.command {
        Command::Classify { node, beta, format } => {
            let k = resolve_k(node.ell, node.k, node.charge)?;
            cmd_classify(node.ell, k, &parse_beta(&beta, node.ell)?, Format::parse(&format)?)
        }
        Command::Dims {
            node,
            beta,
            nu,
            nu2,
            format,
        } => {
            let k = resolve_k(node.ell, node.k, node.charge)?;
            let beta = parse_beta(&beta, node.ell)?;
            let pair = match (nu, nu2) {
                (Some(a), Some(b)) => Some((parse_nu(&a, node.ell)?, parse_nu(&b, node.ell)?)),
                _ => None,
            };
            cmd_dims(node.ell, k, &beta, pair, Format::parse(&format)?)
        }
        Command::Crystal { node, nmax, format } => {
            cmd_crystal(node.ell, charge_of(&node)?, nmax, Format::parse(&format)?)
        }
        Command::Kleshchev {
            node,
            partition,
            format,
        } => cmd_kleshchev(
            node.ell,
            charge_of(&node)?,
            &parse_partition(&partition)?,
            Format::parse(&format)?,
        ),
        Command::Tables { selector, format } => cmd_tables(&selector, Format::parse(&format)?),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            if out.status == 0 {
                println!("{}", out.text);
            } else {
                eprintln!("{}", out.text);
            }
            ExitCode::from(out.status)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
