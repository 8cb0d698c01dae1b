//! Command-line front end: suite orchestration, JSON reports, mutation hooks
//! for negative controls, and the structure-constant cache.

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::rc::Rc;

use tyv::cache;
use tyv::current::{check_derivation_chain, check_presentation};
use tyv::fragment::{check_casimir, check_embedding};
use tyv::rank1::bridge::check_bridge;
use tyv::rank1::drinfeld::check_rank1;
use tyv::rank1::rtt::check_rtt;
use tyv::report::{CheckItem, CheckReport, Mutation};
use tyv::rootdata::{ChevalleyData, LieType, RootSystem};

#[derive(Parser)]
#[command(name = "tyv", version, about = "exact verification suites for twisted Yangian structure")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print root-system data for a simple type.
    Roots {
        /// Simple type, e.g. A2, B3, G2.
        #[arg(long = "type", value_name = "X_n")]
        lie_type: String,
    },
    /// Run a verification suite and report per-item results.
    Check {
        #[arg(value_enum)]
        suite: Suite,
        /// Simple type, e.g. A2 (ignored by the rank-1 suites).
        #[arg(long = "type", value_name = "X_n", default_value = "A2")]
        lie_type: String,
        /// Loop-degree truncation for the classical suite.
        #[arg(long, default_value_t = 6)]
        zdeg: u32,
        /// Series truncation order for the estimate and RTT checks.
        #[arg(long)]
        order: Option<usize>,
        /// Largest series index for the rank-1 identity checks.
        #[arg(long, default_value_t = 10)]
        maxidx: usize,
        /// Write the JSON report here in addition to stdout lines.
        #[arg(long, value_name = "PATH")]
        json: Option<String>,
        /// Negative control: replace the coefficient of relation ID by DELTA.
        #[arg(long, value_name = "ID:DELTA")]
        mutate: Option<String>,
        /// Worker threads for independent check tasks.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq, Debug)]
enum Suite {
    Classical,
    Embedding,
    Casimir,
    Rank1,
    Rtt,
    All,
}

impl Suite {
    fn name(&self) -> &'static str {
        match self {
            Suite::Classical => "classical",
            Suite::Embedding => "embedding",
            Suite::Casimir => "casimir",
            Suite::Rank1 => "rank1",
            Suite::Rtt => "rtt",
            Suite::All => "all",
        }
    }
}

fn chevalley(lt: LieType) -> Rc<ChevalleyData> {
    let (cd, status) = cache::build_with_cache(lt);
    if let cache::CacheStatus::Mismatch = status {
        eprintln!("warning: stale structure-constant cache for {}{} was refreshed", lt.family, lt.rank);
    }
    cd
}

/// A unit of work producing a labeled batch of check items.  Each task builds
/// its own engines, so tasks share nothing and can run on any thread.
type Task = Box<dyn Fn() -> Vec<CheckItem> + Send + Sync>;

fn suite_tasks(
    suite: Suite,
    lt: LieType,
    zdeg: u32,
    order: Option<usize>,
    maxidx: usize,
    mutation: Option<Mutation>,
) -> Vec<Task> {
    let mut tasks: Vec<Task> = Vec::new();
    let m = mutation;
    match suite {
        Suite::Classical => {
            let m2 = m.clone();
            tasks.push(Box::new(move || {
                let cd = chevalley(lt);
                check_presentation(&cd, zdeg, m2.as_ref())
            }));
            tasks.push(Box::new(move || {
                let cd = chevalley(lt);
                check_derivation_chain(&cd, zdeg)
            }));
        }
        Suite::Embedding => {
            tasks.push(Box::new(move || {
                let cd = chevalley(lt);
                check_embedding(&cd, m.as_ref())
            }));
        }
        Suite::Casimir => {
            tasks.push(Box::new(move || {
                let cd = chevalley(lt);
                check_casimir(&cd)
            }));
        }
        Suite::Rank1 => {
            let est = order.unwrap_or(8);
            tasks.push(Box::new(move || check_rank1(maxidx, est)));
        }
        Suite::Rtt => {
            let n = order.unwrap_or(6);
            tasks.push(Box::new(move || check_rtt(n)));
            tasks.push(Box::new(move || check_bridge(n)));
        }
        Suite::All => {
            for s in [Suite::Classical, Suite::Embedding, Suite::Casimir, Suite::Rank1, Suite::Rtt] {
                tasks.extend(suite_tasks(s, lt, zdeg, order, maxidx, m.clone()));
            }
        }
    }
    tasks
}

fn run_check(
    suite: Suite,
    lie_type: &str,
    zdeg: u32,
    order: Option<usize>,
    maxidx: usize,
    json: Option<&str>,
    mutate: Option<&str>,
    jobs: usize,
) -> i32 {
    let lt: LieType = match lie_type.parse() {
        Ok(lt) => lt,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let mutation = match mutate.map(Mutation::parse).transpose() {
        Ok(m) => m,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let mut params = BTreeMap::new();
    params.insert("zdeg".to_string(), zdeg.to_string());
    params.insert("maxidx".to_string(), maxidx.to_string());
    if let Some(n) = order {
        params.insert("order".to_string(), n.to_string());
    }
    if let Some(m) = mutate {
        params.insert("mutate".to_string(), m.to_string());
    }
    let mut report = CheckReport::new(suite.name(), lie_type, params);

    let tasks = suite_tasks(suite, lt, zdeg, order, maxidx, mutation);
    let batches: Vec<Vec<CheckItem>> = if jobs > 1 {
        let pool = match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
            Ok(p) => p,
            Err(e) => {
                eprintln!("error: {e}");
                return 2;
            }
        };
        pool.install(|| tasks.par_iter().map(|t| t()).collect())
    } else {
        tasks.iter().map(|t| t()).collect()
    };
    for batch in batches {
        report.items.extend(batch);
    }

    for item in &report.items {
        println!(
            "{:5} {:<24} [{}] {} ({} ms)",
            format!("{:?}", item.status).to_lowercase(),
            item.id,
            item.anchor,
            item.detail,
            item.millis
        );
    }
    println!(
        "{}: {} items, {} pass",
        report.suite,
        report.items.len(),
        report
            .items
            .iter()
            .filter(|i| i.status == tyv::report::Status::Pass)
            .count()
    );

    if let Some(path) = json {
        let text = serde_json::to_string_pretty(&report).expect("report serializes");
        if let Err(e) = std::fs::write(path, text) {
            eprintln!("error: cannot write {path}: {e}");
            return 2;
        }
    }
    report.exit_code()
}

fn main() {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Roots { lie_type } => match lie_type.parse::<LieType>() {
            Ok(lt) => {
                let rs = RootSystem::build(lt);
                println!("type {}{}  rank {}", lt.family, lt.rank, rs.rank);
                println!("cartan matrix:");
                for row in &rs.cartan {
                    println!("  {row:?}");
                }
                println!("symmetrizers d: {:?}", rs.d);
                println!("positive roots ({}):", rs.num_positive());
                for (k, r) in rs.positive.iter().enumerate() {
                    println!("  [{k:2}] {r:?}  height {}", rs.height(k));
                }
                0
            }
            Err(e) => {
                eprintln!("error: {e}");
                2
            }
        },
        Command::Check {
            suite,
            lie_type,
            zdeg,
            order,
            maxidx,
            json,
            mutate,
            jobs,
        } => run_check(
            suite,
            &lie_type,
            zdeg,
            order,
            maxidx,
            json.as_deref(),
            mutate.as_deref(),
            jobs,
        ),
    };
    std::process::exit(code);
}
