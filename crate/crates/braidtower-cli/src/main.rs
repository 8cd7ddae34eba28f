mod job;
mod run;

use std::process::ExitCode;

use anyhow::{anyhow, bail};
use braidtower::grouptower::tower_arith;
use braidtower::nielsen::Mode;
use braidtower::realpts::KappaVariant;
use braidtower::reproduce::Suite;
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use job::{ClassList, GroupSpec};
use run::{Job, View};

/// Nielsen classes, braid orbits, j-line covers and lifting invariants.
#[derive(Parser)]
#[command(name = "braidtower", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// A5, S6, D25, G1A5, G1A5|A4, or generators such as "(1 2 3),(3 4 5)"
    #[arg(long, global = true, default_value = "A5")]
    group: String,
    /// one entry per branch point, e.g. "3cyc*4" or "(1 2 3 4 5),(1 3 5 2 4),3cyc,3cyc"
    #[arg(long, global = true, default_value = "3cyc*4")]
    classes: String,
    #[arg(long, global = true, default_value = "inner", value_parser = ["inner", "absolute", "reduced-inner", "reduced-absolute"])]
    mode: String,
    /// generators of N' for absolute classes (default: normalizer in the symmetric group)
    #[arg(long, global = true)]
    nprime: Option<String>,
    /// complex conjugation variant: r1 real branch points
    #[arg(long, global = true, requires = "r2")]
    r1: Option<u8>,
    /// complex conjugation variant: r2 conjugate pairs
    #[arg(long, global = true, requires = "r1")]
    r2: Option<u8>,
    #[arg(long, global = true)]
    json: bool,
    /// enumeration budget in inner iterations
    #[arg(long, global = true, default_value_t = 10_000_000_000)]
    max_elements: u128,
    /// worker threads (BT_THREADS overrides)
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// recorded in the report; no computation here samples
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Nielsen class representatives with middle product orders and H-M tags
    Nielsen,
    /// braid orbits and M4-bar orbits on reduced classes
    Orbits,
    /// cusp orbits (gamma_inf cycles) per reduced orbit
    Cusps,
    /// sh-incidence matrices of the cusps
    Shinc,
    /// genus, cusp widths and fineness of the j-line covers
    Genus,
    /// real points over the three real j-intervals
    Real,
    /// spin lifting invariants of braid orbits
    Lift,
    /// geometric monodromy group orders of the j-line covers
    Monodromy,
    /// rank and genus recursion up a tower
    Tower {
        #[arg(long, default_value_t = 2)]
        prime: u32,
        #[arg(long, default_value_t = 5)]
        rank: u64,
        #[arg(long, default_value_t = 21)]
        base_genus: u64,
        #[arg(long, default_value_t = 2)]
        levels: usize,
    },
    /// golden-value suites: level0, level1, dihedral, obstruction, tower, a4tower or all
    Reproduce {
        #[arg(default_value = "all")]
        suite: String,
        /// skip stretch suites (a4tower)
        #[arg(long)]
        skip_stretch: bool,
    },
}

enum Outcome {
    Ok,
    Certify,
}

fn header(command: &str, common: &Common) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("schema".into(), json!("braidtower/1"));
    m.insert("command".into(), json!(command));
    m.insert("seed".into(), json!(common.seed));
    m
}

fn emit(common: &Common, json: Map<String, Value>, text: &str) {
    if common.json {
        println!("{}", serde_json::to_string_pretty(&Value::Object(json)).expect("serializable"));
    } else {
        print!("{text}");
    }
}

fn execute(cli: &Cli) -> anyhow::Result<Outcome> {
    let c = &cli.common;
    match &cli.command {
        Command::Tower { prime, rank, base_genus, levels } => {
            let mut json = header("tower", c);
            let mut text = format!("tower p = {prime}, rank {rank}, genus {base_genus}\n");
            let rows: Vec<Value> = (0..=*levels)
                .map(|k| {
                    let (rk, g) = tower_arith(*prime, *rank, *base_genus, k);
                    text += &format!("  level {k}: rank {rk}, genus {g}\n");
                    json!({ "level": k, "rank": rk.to_string(), "genus": g.to_string() })
                })
                .collect();
            json.insert("prime".into(), json!(prime));
            json.insert("levels".into(), Value::Array(rows));
            emit(c, json, &text);
            Ok(Outcome::Ok)
        }
        Command::Reproduce { suite, skip_stretch } => {
            let suites: Vec<Suite> = if suite == "all" { Suite::ALL.to_vec() } else { vec![suite.parse()?] };
            let mut json = header("reproduce", c);
            let (mut text, mut reports, mut skipped) = (String::new(), Vec::new(), Vec::new());
            let mut ok = true;
            for s in suites {
                if *skip_stretch && s.is_stretch() {
                    text += &format!("suite {} (stretch) SKIPPED\n", s.as_str());
                    skipped.push(s.as_str());
                    continue;
                }
                let r = s.run()?;
                ok &= r.passed();
                text += &r.to_text();
                reports.push(r);
            }
            json.insert("suites".into(), serde_json::to_value(&reports)?);
            json.insert("skipped".into(), json!(skipped));
            json.insert("passed".into(), json!(ok));
            emit(c, json, &text);
            Ok(if ok { Outcome::Ok } else { Outcome::Certify })
        }
        cmd => {
            let view = match cmd {
                Command::Nielsen => View::Nielsen,
                Command::Orbits => View::Orbits,
                Command::Cusps => View::Cusps,
                Command::Shinc => View::Shinc,
                Command::Genus => View::Genus,
                Command::Real => View::Real,
                Command::Lift => View::Lift,
                Command::Monodromy => View::Monodromy,
                _ => unreachable!(),
            };
            let kappa = match (c.r1, c.r2) {
                (Some(r1), Some(r2)) => Some(KappaVariant::new(r1, r2)?),
                _ => None,
            };
            let job = Job {
                group: GroupSpec::parse(&c.group)?,
                classes: ClassList::parse(&c.classes)?,
                mode: c.mode.parse::<Mode>()?,
                nprime: c.nprime.clone(),
                kappa,
                budget: c.max_elements,
            };
            let mut report = run::run(&job, view)?;
            report.json.insert("seed".into(), json!(c.seed));
            emit(c, report.json, &report.text);
            Ok(Outcome::Ok)
        }
    }
}

fn threads(cli: &Cli) -> anyhow::Result<Option<usize>> {
    match std::env::var("BT_THREADS") {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => bail!("BT_THREADS must be a positive integer, got `{v}`"),
        },
        Err(_) => Ok(cli.common.threads),
    }
}

fn failure(cli: &Cli, status: &str, message: &str, extra: Map<String, Value>) {
    if cli.common.json {
        let mut m = Map::new();
        m.insert("schema".into(), json!("braidtower/1"));
        m.insert("status".into(), json!(status));
        m.insert("message".into(), json!(message));
        m.extend(extra);
        println!("{}", serde_json::to_string_pretty(&Value::Object(m)).expect("serializable"));
    }
    eprintln!("braidtower: {message}");
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let setup = threads(&cli).and_then(|n| match n {
        Some(n) => rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| anyhow!(e)),
        None => Ok(()),
    });
    if let Err(e) = setup {
        failure(&cli, "input-error", &format!("{e:#}"), Map::new());
        return ExitCode::from(3);
    }
    match execute(&cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Certify) => ExitCode::from(1),
        Err(e) => {
            let msg = format!("{e:#}");
            match e.downcast_ref::<braidtower::Error>() {
                Some(braidtower::Error::Budget { estimate, budget }) => {
                    let mut extra = Map::new();
                    extra.insert("estimate".into(), json!(estimate.to_string()));
                    extra.insert("budget".into(), json!(budget.to_string()));
                    failure(&cli, "budget-abort", &msg, extra);
                    ExitCode::from(2)
                }
                Some(braidtower::Error::Overflow { cap, partial }) => {
                    let mut extra = Map::new();
                    extra.insert("cap".into(), json!(cap));
                    extra.insert("partial".into(), json!(partial));
                    failure(&cli, "budget-abort", &msg, extra);
                    ExitCode::from(2)
                }
                Some(braidtower::Error::Certify(_)) => {
                    failure(&cli, "certification-failure", &msg, Map::new());
                    ExitCode::from(1)
                }
                _ => {
                    failure(&cli, "input-error", &msg, Map::new());
                    ExitCode::from(3)
                }
            }
        }
    }
}
