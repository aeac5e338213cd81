//! `ordertoric`: posets, their polytopes, and the toric codes they define.
//!
//! Exit status: 0 success, 2 a verification or check suite failed,
//! 3 a size or cost guard refused the work, 4 bad input.

mod output;
mod source;

use std::fs;
use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::error::ErrorKind as ClapErrorKind;
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use ordertoric::code::{
    build_code, min_distance_exact, normalize_to_box, CodeReport, SearchOptions, Strategy,
    DEFAULT_MAX_EXHAUSTIVE_COST, DEFAULT_MAX_INFORMATION_SET_COST,
};
use ordertoric::geometry::{order_polytope, poset_polytope};
use ordertoric::predictor::{self, classify_bipartite, ideal_count};
use ordertoric::suite::{self, SweepConfig, Theorem};
use ordertoric::{catalog, Error, ErrorKind, LatticePolytope, Poset};
use serde::Serialize;
use serde_json::{json, Value};

use output::Format;
use source::{parse_spec, PosetSource};

const EXIT_MISMATCH: u8 = 2;
const EXIT_GUARD: u8 = 3;
const EXIT_INPUT: u8 = 4;

#[derive(Parser, Debug)]
#[command(name = "ordertoric", version, about = "Order polytopes, poset polytopes and their toric codes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format; tables default to CSV, everything else to JSON.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write the output here instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Ideals, components, ranks and classification of a poset.
    Poset {
        #[command(flatten)]
        source: PosetSource,
        /// List every upper ideal.
        #[arg(long)]
        ideals: bool,
        /// List the join–meet binomials generating the toric ideal of the ideal lattice.
        #[arg(long)]
        binomials: bool,
    },
    /// Vertices (and inequalities, when known) of a polytope of the poset.
    #[command(group(ArgGroup::new("which").multiple(false)))]
    Polytope {
        #[command(flatten)]
        source: PosetSource,
        /// The order polytope (default).
        #[arg(long, group = "which")]
        order: bool,
        /// The poset polytope.
        #[arg(long, group = "which")]
        poset_polytope: bool,
        /// The polar dual of the poset polytope.
        #[arg(long, group = "which")]
        polar: bool,
        /// Also list the lattice points.
        #[arg(long)]
        lattice_points: bool,
        /// Also report Fano / terminal / Gorenstein.
        #[arg(long)]
        reflexivity: bool,
    },
    /// Parameters of the toric code of the order polytope.
    Code {
        #[command(flatten)]
        source: PosetSource,
        #[arg(long)]
        q: u64,
        /// Compute the minimum distance exactly.
        #[arg(long)]
        exact: bool,
        /// Use the poset polytope, translated into the box [0, q−2]^m.
        #[arg(long)]
        poset_polytope: bool,
        /// Report the transmission rates of both polytopes' codes instead.
        #[arg(long, conflicts_with_all = ["exact", "poset_polytope"])]
        compare_rates: bool,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Closed-form code parameters with a certificate.
    Predict {
        #[command(flatten)]
        source: PosetSource,
        #[arg(long)]
        q: u64,
        #[arg(long, value_enum, default_value_t = TheoremChoice::Auto)]
        theorem: TheoremChoice,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Sweep predictions against exact search; exits 2 on any mismatch.
    Verify {
        /// Fields for the all-posets sweep.
        #[arg(long = "q", value_delimiter = ',', default_values_t = [4u64, 5])]
        qs: Vec<u64>,
        /// All posets with at most this many elements.
        #[arg(long, default_value_t = 4)]
        max_size: usize,
        /// All rooted trees with at most this many vertices.
        #[arg(long, default_value_t = 5)]
        tree_max_size: usize,
        /// Fields for the rooted-tree sweep.
        #[arg(long = "tree-q", value_delimiter = ',', default_values_t = [4u64])]
        tree_qs: Vec<u64>,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Structural check suites; exits 2 if any check fails.
    Lemmas {
        #[arg(long, default_value_t = 4)]
        max_size: usize,
        /// Fields for the distance suites.
        #[arg(long = "q", value_delimiter = ',', default_values_t = [4u64, 5])]
        qs: Vec<u64>,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// One row per poset: ideals, n, k, exact d and closed-form d.
    #[command(group(ArgGroup::new("selection").required(true).multiple(false)))]
    Report {
        #[arg(long)]
        q: u64,
        /// Poset specs (see `poset --named`).
        #[arg(long = "poset", group = "selection", value_name = "SPEC")]
        posets: Vec<String>,
        /// Every (m,m)-bipartite poset; needs --m.
        #[arg(long, group = "selection", requires = "m")]
        bipartite_all: bool,
        #[arg(long)]
        m: Option<usize>,
        /// Every poset with at most this many elements.
        #[arg(long, group = "selection")]
        max_size: Option<usize>,
        #[command(flatten)]
        search: SearchArgs,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TheoremChoice {
    /// Reduction engine with exact fallback.
    Auto,
    /// Reduction engine only; fails when no closed form applies.
    ClosedForm,
    Tree,
    Bipartite,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum StrategyChoice {
    Auto,
    Exhaustive,
    InformationSet,
}

#[derive(Args, Debug, Clone)]
struct SearchArgs {
    /// Worker threads for exact search; results do not depend on it.
    #[arg(long)]
    workers: Option<usize>,
    #[arg(long, value_enum, default_value_t = StrategyChoice::Auto)]
    strategy: StrategyChoice,
    /// Refuse exhaustive searches with q^k·n above this.
    #[arg(long, default_value_t = DEFAULT_MAX_EXHAUSTIVE_COST)]
    max_exhaustive_cost: u128,
    /// Refuse information-set searches estimated above this.
    #[arg(long, default_value_t = DEFAULT_MAX_INFORMATION_SET_COST)]
    max_information_set_cost: u128,
    /// Record wall-clock seconds (output is then no longer reproducible).
    #[arg(long)]
    timing: bool,
}

impl SearchArgs {
    fn options(&self) -> Result<SearchOptions, Error> {
        let mut opts = SearchOptions::default();
        if let Some(w) = self.workers {
            if w == 0 {
                return Err(Error::Invalid("--workers must be positive".into()));
            }
            opts.workers = w;
        }
        opts.strategy = match self.strategy {
            StrategyChoice::Auto => Strategy::Auto,
            StrategyChoice::Exhaustive => Strategy::Exhaustive,
            StrategyChoice::InformationSet => Strategy::InformationSet,
        };
        opts.max_exhaustive_cost = self.max_exhaustive_cost;
        opts.max_information_set_cost = self.max_information_set_cost;
        Ok(opts)
    }
}

enum Failure {
    Lib(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

struct Outcome {
    value: Value,
    table: bool,
    status: u8,
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialise")
}

fn poset_info(p: &Poset, ideals: bool, binomials: bool) -> Result<Value, Error> {
    let count = ideal_count(p)?;
    let rank = p.rank_function();
    let mut v = json!({
        "poset": p.to_json(),
        "ideal_count": count.to_string().parse::<u64>().map_or(Value::String(count.to_string()), Value::from),
        "minimal": p.minimal_elements(),
        "maximal": p.maximal_elements(),
        "components": p.connected_components().iter().map(|c| c.embedding.clone()).collect::<Vec<_>>(),
        "graded": rank.is_some(),
        "ranks": rank.as_ref().map(|r| r.ranks.clone()),
        "length": rank.as_ref().map(|r| r.length),
        "rooted_tree": p.is_rooted_tree_poset(),
        "shrubbery": p.shrubbery().ok(),
        "bipartite": classify_bipartite(p),
    });
    if ideals {
        v["upper_ideals"] = to_value(&p.upper_ideals()?);
    }
    if binomials {
        v["binomials"] = to_value(&p.lattice_binomials()?);
    }
    Ok(v)
}

fn polytope_info(a: &LatticePolytope, lattice_points: bool, reflexivity: bool) -> Result<Value, Error> {
    let mut v = to_value(a);
    if lattice_points {
        v["lattice_points"] = to_value(&a.lattice_points()?);
    }
    if reflexivity {
        v["reflexivity"] = to_value(&a.reflexivity_report()?);
    }
    Ok(v)
}

fn rows_outcome(rows: &[suite::ReportRow], fail_on_mismatch: bool) -> Outcome {
    let bad = suite::mismatches(rows);
    for r in &bad {
        eprintln!(
            "mismatch: {} q={}: exact {} vs {} {}",
            r.poset_id,
            r.q,
            r.d_exact,
            r.method,
            r.d_theorem.as_ref().map(ToString::to_string).unwrap_or_default()
        );
    }
    Outcome {
        value: to_value(&rows),
        table: true,
        status: if fail_on_mismatch && !bad.is_empty() { EXIT_MISMATCH } else { 0 },
    }
}

fn run(command: &Command) -> Result<Outcome, Failure> {
    let single = |value: Value| Outcome {
        value,
        table: false,
        status: 0,
    };
    match command {
        Command::Poset { source, ideals, binomials } => Ok(single(poset_info(&source.build()?, *ideals, *binomials)?)),
        Command::Polytope {
            source,
            poset_polytope: hh,
            polar,
            lattice_points,
            reflexivity,
            ..
        } => {
            let p = source.build()?;
            let a = if *polar {
                poset_polytope(&p)?.polar_dual()?
            } else if *hh {
                poset_polytope(&p)?
            } else {
                order_polytope(&p)?
            };
            Ok(single(polytope_info(&a, *lattice_points, *reflexivity)?))
        }
        Command::Code {
            source,
            q,
            exact,
            poset_polytope: hh,
            compare_rates,
            search,
        } => {
            let p = source.build()?;
            if *compare_rates {
                let order = build_code(&order_polytope(&p)?, *q)?;
                let poset = normalize_to_box(&poset_polytope(&p)?, *q).and_then(|a| build_code(&a, *q));
                let mut v = json!({
                    "q": q,
                    "order_rate": order.transmission_rate(),
                    "poset_polytope_rate": poset.as_ref().ok().map(|c| c.transmission_rate()),
                });
                if let Err(e) = &poset {
                    v["poset_polytope_error"] = Value::String(e.to_string());
                }
                return Ok(single(v));
            }
            let a = if *hh {
                normalize_to_box(&poset_polytope(&p)?, *q)?
            } else {
                order_polytope(&p)?
            };
            let start = Instant::now();
            let code = build_code(&a, *q)?;
            let distance = if *exact {
                Some(min_distance_exact(&code, &search.options()?)?)
            } else {
                None
            };
            let mut report = CodeReport::new(&code, distance.as_ref());
            if search.timing {
                report.seconds = Some(start.elapsed().as_secs_f64());
            }
            Ok(single(to_value(&report)))
        }
        Command::Predict {
            source,
            q,
            theorem,
            search,
        } => {
            let p = source.build()?;
            let opts = search.options()?;
            let prediction = match theorem {
                TheoremChoice::Auto => predictor::predict_auto(&p, *q, &opts)?,
                TheoremChoice::ClosedForm => predictor::predict_closed_form(&p, *q)?
                    .ok_or_else(|| Error::Invalid("no closed form applies to this poset".into()))?,
                TheoremChoice::Tree => predictor::predict_tree(&p, *q)?,
                TheoremChoice::Bipartite => predictor::predict_bipartite(&p, *q)?,
            };
            Ok(single(to_value(&prediction)))
        }
        Command::Verify {
            qs,
            max_size,
            tree_max_size,
            tree_qs,
            search,
        } => {
            let config = SweepConfig {
                max_size: *max_size,
                poset_qs: qs.clone(),
                tree_max_size: *tree_max_size,
                tree_qs: tree_qs.clone(),
            };
            let rows = suite::verify_sweep(&config, &search.options()?, search.timing)?;
            let out = rows_outcome(&rows, true);
            eprintln!("{} rows, {} mismatches", rows.len(), suite::mismatches(&rows).len());
            Ok(out)
        }
        Command::Lemmas { max_size, qs, search } => {
            let reports = suite::lemma_suites(*max_size, qs, &search.options()?)?;
            let failed = reports.iter().any(|r| !r.passed());
            for r in &reports {
                eprintln!("{} {}: {} checks", if r.passed() { "ok" } else { "FAILED" }, r.name, r.checks);
            }
            Ok(Outcome {
                value: to_value(&reports),
                table: false,
                status: if failed { EXIT_MISMATCH } else { 0 },
            })
        }
        Command::Report {
            q,
            posets,
            bipartite_all,
            m,
            max_size,
            search,
        } => {
            let opts = search.options()?;
            let rows = if *bipartite_all {
                let m = m.expect("clap requires --m");
                if !(1..=4).contains(&m) {
                    return Err(Error::Invalid("--m must be between 1 and 4".into()).into());
                }
                suite::bipartite_report(m, *q, &opts, search.timing)?
            } else {
                let list: Vec<Poset> = match max_size {
                    Some(n) => catalog::posets_up_to(*n),
                    None => posets.iter().map(|s| parse_spec(s)).collect::<Result<_, _>>()?,
                };
                list.iter()
                    .map(|p| suite::report_row(p, *q, Theorem::Auto, &opts, search.timing))
                    .collect::<Result<_, _>>()?
            };
            Ok(rows_outcome(&rows, false))
        }
    }
}

fn write_out(text: &str, out: Option<&str>) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Io(format!("cannot write {path}: {e}"))),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Io(format!("cannot write output: {e}"))),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ClapErrorKind::DisplayHelp | ClapErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_INPUT),
            };
        }
    };
    let result = run(&cli.command).and_then(|o| {
        let format = cli.format.unwrap_or(if o.table { Format::Csv } else { Format::Json });
        let text = output::render(&o.value, format).map_err(Failure::Io)?;
        write_out(&text, cli.out.as_deref())?;
        Ok(o.status)
    });
    match result {
        Ok(status) => ExitCode::from(status),
        Err(Failure::Lib(e)) => {
            eprintln!("error[{}]: {e}", e.code());
            ExitCode::from(match e.kind() {
                ErrorKind::Guard => EXIT_GUARD,
                ErrorKind::Input => EXIT_INPUT,
            })
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error[io]: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
