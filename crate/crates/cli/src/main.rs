//! Command-line front end: single evaluations, symbolic identity proofs,
//! per-entry prime sweeps, suite runs, and catalog tables.
//!
//! Exit codes: 0 all checks passed, 1 at least one failure, 2 usage or
//! configuration error.

use std::fs;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use fmzv::eval::{self, EvalRequest, Flavor};
use fmzv::exact::Rational;
use fmzv::index::Index;
use fmzv::polyid;
use fmzv::registry::{self, Params};
use fmzv::runner::{self, SuiteConfig, SuiteLevel};

#[derive(Parser)]
#[command(
    name = "fmzv",
    about = "Finite multiple zeta values and polylogarithms: exact residues, symbolic identity proofs, and congruence sweeps",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one truncated sum mod p^n
    Compute(ComputeArgs),
    /// Verify a polynomial identity by exact expansion
    Prove(ProveArgs),
    /// Sweep one registry entry over a prime range
    Check(CheckArgs),
    /// Run the registry suite and write a report
    Suite(SuiteArgs),
    /// List the identity registry
    List,
    /// Print the guard table or a per-prime value table
    Table(TableArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FlavorArg {
    Zeta,
    ZetaStar,
    Head,
    HeadStar,
    Tail,
    TailStar,
    Harmonic,
    HarmonicStar,
    Shuffle,
    ShuffleStar,
    Oy,
}

impl FlavorArg {
    fn split(self) -> (Flavor, bool) {
        match self {
            FlavorArg::Zeta => (Flavor::Zeta, false),
            FlavorArg::ZetaStar => (Flavor::Zeta, true),
            FlavorArg::Head => (Flavor::Head, false),
            FlavorArg::HeadStar => (Flavor::Head, true),
            FlavorArg::Tail => (Flavor::Tail, false),
            FlavorArg::TailStar => (Flavor::Tail, true),
            FlavorArg::Harmonic => (Flavor::Harmonic, false),
            FlavorArg::HarmonicStar => (Flavor::Harmonic, true),
            FlavorArg::Shuffle => (Flavor::Shuffle, false),
            FlavorArg::ShuffleStar => (Flavor::Shuffle, true),
            FlavorArg::Oy => (Flavor::OnoYamamoto, false),
        }
    }
}

#[derive(Args)]
struct ComputeArgs {
    #[arg(long, value_enum)]
    flavor: FlavorArg,
    /// index literal, e.g. `2,1,1` or `{1}^4`
    #[arg(long)]
    index: String,
    /// single argument (head/tail/oy flavors), e.g. `1/2`
    #[arg(long, allow_hyphen_values = true)]
    t: Option<String>,
    /// comma-separated argument list (harmonic/shuffle flavors)
    #[arg(long, allow_hyphen_values = true)]
    args: Option<String>,
    #[arg(long)]
    prime: u64,
    #[arg(long, default_value_t = 1)]
    mod_power: u8,
}

#[derive(Args)]
struct ProveArgs {
    /// identity id from the symbolic catalog (see `fmzv list`)
    #[arg(long)]
    identity: String,
    #[arg(long)]
    index: Option<String>,
    /// upper summation bound
    #[arg(long, alias = "N", default_value_t = 4)]
    big_n: u32,
    /// scalar parameter for the operator lemmas
    #[arg(long)]
    n: Option<u32>,
    /// second scalar for the double-binomial lemma
    #[arg(long)]
    j: Option<u32>,
    /// comma-separated grouping positions for the grouped identity
    #[arg(long)]
    subset: Option<String>,
    /// write both expanded sides to this file
    #[arg(long)]
    dump: Option<String>,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long)]
    id: String,
    /// parameter assignment, e.g. `k1=2,k2=1` or `kk=2.1.1`
    #[arg(long)]
    params: Option<String>,
    #[arg(long, default_value_t = 2)]
    pmin: u64,
    #[arg(long, default_value_t = 199)]
    pmax: u64,
}

#[derive(Args)]
struct SuiteArgs {
    #[arg(long, value_enum, default_value = "quick")]
    level: LevelArg,
    #[arg(long)]
    pmin: Option<u64>,
    #[arg(long)]
    pmax: Option<u64>,
    /// entry filter globs; repeatable
    #[arg(long = "filter")]
    filters: Vec<String>,
    /// worker count (0 = all cores)
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    #[arg(long)]
    out: Option<String>,
    #[arg(long, value_enum, default_value = "json")]
    format: FormatArg,
    /// sentinel seed (reports are deterministic for a fixed seed)
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum LevelArg {
    Quick,
    Full,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Markdown,
}

#[derive(Args)]
struct TableArgs {
    /// `guards` (default) or `values`
    #[arg(default_value = "guards")]
    which: String,
    #[arg(long)]
    id: Option<String>,
    #[arg(long)]
    params: Option<String>,
    #[arg(long, default_value_t = 2)]
    pmin: u64,
    #[arg(long, default_value_t = 61)]
    pmax: u64,
    /// emit CSV instead of markdown
    #[arg(long)]
    csv: bool,
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Compute(a) => compute(a),
        Command::Prove(a) => prove(a),
        Command::Check(a) => check(a),
        Command::Suite(a) => suite(a),
        Command::List => list(),
        Command::Table(a) => table(a),
    }
}

fn parse_rational_arg(s: &str) -> Result<Rational, String> {
    eval::parse_rational(s).ok_or_else(|| format!("bad rational `{s}`"))
}

fn compute(a: ComputeArgs) -> ExitCode {
    let index = match Index::from_str(&a.index) {
        Ok(k) => k,
        Err(e) => return usage_error(e),
    };
    if !fmzv::modular::is_prime(a.prime) {
        return usage_error(format!("{} is not prime", a.prime));
    }
    if !(1..=5).contains(&a.mod_power) {
        return usage_error("mod power must lie in 1..=5");
    }
    let (flavor, star) = a.flavor.split();
    let arguments = match flavor {
        Flavor::Zeta => Vec::new(),
        Flavor::Head | Flavor::Tail | Flavor::OnoYamamoto => {
            let Some(t) = a.t.as_deref() else {
                return usage_error("this flavor needs --t");
            };
            match parse_rational_arg(t) {
                Ok(v) => vec![v],
                Err(e) => return usage_error(e),
            }
        }
        Flavor::Harmonic | Flavor::Shuffle => {
            let Some(list) = a.args.as_deref() else {
                return usage_error("this flavor needs --args");
            };
            let parsed: Result<Vec<Rational>, String> =
                list.split(',').map(parse_rational_arg).collect();
            match parsed {
                Ok(v) => v,
                Err(e) => return usage_error(e),
            }
        }
    };
    let req = EvalRequest {
        index,
        arguments,
        star,
        flavor,
        prime: a.prime,
        exponent: a.mod_power,
    };
    match req.evaluate() {
        Ok(v) => {
            println!("{} (mod {}^{})", v.value(), a.prime, a.mod_power);
            ExitCode::SUCCESS
        }
        Err(e) => usage_error(e),
    }
}

fn prove(a: ProveArgs) -> ExitCode {
    let index = match a.index.as_deref().map(Index::from_str).transpose() {
        Ok(k) => k,
        Err(e) => return usage_error(e),
    };
    let subset: Option<Vec<usize>> = match a.subset.as_deref() {
        None => None,
        Some(s) => match s.split(',').map(|x| x.trim().parse()).collect() {
            Ok(v) => Some(v),
            Err(_) => return usage_error(format!("bad subset `{s}`")),
        },
    };
    let extra = match (a.n, a.j) {
        (Some(n), Some(j)) => Some(n * 100 + j),
        (Some(n), None) => Some(n),
        (None, Some(_)) => return usage_error("--j requires --n"),
        (None, None) => None,
    };
    let sides = |side| {
        polyid::build_side(
            &a.identity,
            side,
            a.big_n,
            index.as_ref(),
            subset.as_deref(),
            extra,
        )
    };
    let (lhs, rhs) = match (sides(polyid::Side::Left), sides(polyid::Side::Right)) {
        (Ok(l), Ok(r)) => (l, r),
        (Err(e), _) | (_, Err(e)) => return usage_error(e),
    };
    let pass = lhs == rhs;
    println!(
        "{}: {} (N={}, lhs {}, rhs {})",
        a.identity,
        if pass { "pass" } else { "FAIL" },
        a.big_n,
        lhs.digest(),
        rhs.digest()
    );
    if let Some(path) = a.dump {
        let body = format!("lhs = {lhs}\nrhs = {rhs}\n");
        if let Err(e) = fs::write(&path, body) {
            return usage_error(format!("writing {path}: {e}"));
        }
    }
    if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn check(a: CheckArgs) -> ExitCode {
    let Some(entry) = registry::find(&a.id) else {
        return usage_error(format!("unknown identity id `{}`", a.id));
    };
    if a.pmin < 2 || a.pmin > a.pmax {
        return usage_error("need 2 <= pmin <= pmax");
    }
    let params_list: Vec<Params> = match a.params.as_deref() {
        Some(s) => match s.parse() {
            Ok(p) => vec![p],
            Err(e) => return usage_error(e),
        },
        None => entry.grid.clone(),
    };
    let mut any_fail = false;
    let mut total = 0usize;
    for params in &params_list {
        match runner::sweep_entry(entry, params, a.pmin, a.pmax) {
            Ok(records) => {
                for r in &records {
                    total += 1;
                    if !r.pass {
                        any_fail = true;
                        println!(
                            "FAIL {} [{}] p={} lhs={} rhs={}",
                            r.id, r.params, r.p, r.lhs, r.rhs
                        );
                    }
                }
            }
            Err(e) => return usage_error(e),
        }
    }
    println!(
        "{}: {} checks over primes in [{}, {}]: {}",
        a.id,
        total,
        a.pmin,
        a.pmax,
        if any_fail { "FAIL" } else { "all pass" }
    );
    if any_fail {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn suite(a: SuiteArgs) -> ExitCode {
    let level = match a.level {
        LevelArg::Quick => SuiteLevel::Quick,
        LevelArg::Full => SuiteLevel::Full,
    };
    let mut cfg = SuiteConfig::new(level);
    if let Some(pmin) = a.pmin {
        cfg.pmin = pmin;
    }
    if let Some(pmax) = a.pmax {
        cfg.pmax = pmax;
    }
    cfg.filters = a.filters;
    cfg.jobs = a.jobs;
    if let Some(seed) = a.seed {
        cfg.sentinel_seed = seed;
    }
    let report = match runner::run_suite(&cfg) {
        Ok(r) => r,
        Err(e) => return usage_error(e),
    };
    let body = match a.format {
        FormatArg::Json => report.to_json(),
        FormatArg::Csv => report.to_csv(),
        FormatArg::Markdown => report.to_markdown(),
    };
    if let Some(path) = a.out {
        if let Err(e) = fs::write(&path, body) {
            return usage_error(format!("writing {path}: {e}"));
        }
    } else {
        println!("{body}");
    }
    eprintln!(
        "suite: {} records, {} failed; sentinel {}/{}",
        report.summary.records,
        report.summary.failed,
        report.summary.sentinel_tripped,
        report.summary.sentinel_total
    );
    if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn list() -> ExitCode {
    println!("# Identity registry\n");
    println!("| id | kind | mod | guard | grid | statement |");
    println!("|---|---|---|---|---|---|");
    for e in registry::catalog() {
        println!(
            "| {} | {} | p^{} | {} | {} | {} |",
            e.id,
            e.kind,
            e.mod_exponent,
            e.guard_text,
            e.grid.len(),
            e.statement
        );
    }
    println!("\n# Symbolic identities (prove)\n");
    println!("| id | statement |");
    println!("|---|---|");
    for c in polyid::catalog() {
        println!("| {} | {} |", c.id, c.statement);
    }
    ExitCode::SUCCESS
}

fn table(a: TableArgs) -> ExitCode {
    match a.which.as_str() {
        "guards" => {
            if a.csv {
                println!("id,mod,guard,cap");
                for e in registry::catalog() {
                    println!(
                        "{},{},\"{}\",{}",
                        e.id,
                        e.mod_exponent,
                        e.guard_text,
                        e.prime_cap.map_or(String::from("-"), |c| c.to_string())
                    );
                }
            } else {
                println!("| id | mod | sufficient condition | sweep cap |");
                println!("|---|---|---|---|");
                for e in registry::catalog() {
                    println!(
                        "| {} | p^{} | {} | {} |",
                        e.id,
                        e.mod_exponent,
                        e.guard_text,
                        e.prime_cap.map_or(String::from("-"), |c| c.to_string())
                    );
                }
            }
            ExitCode::SUCCESS
        }
        "values" => {
            let Some(id) = a.id.as_deref() else {
                return usage_error("`table values` needs --id");
            };
            let Some(entry) = registry::find(id) else {
                return usage_error(format!("unknown identity id `{id}`"));
            };
            let params: Params = match a.params.as_deref() {
                Some(s) => match s.parse() {
                    Ok(p) => p,
                    Err(e) => return usage_error(e),
                },
                None => match entry.grid.first() {
                    Some(p) => p.clone(),
                    None => return usage_error("entry has no default parameters"),
                },
            };
            let records = match runner::sweep_entry(entry, &params, a.pmin, a.pmax) {
                Ok(r) => r,
                Err(e) => return usage_error(e),
            };
            let mut any_fail = false;
            if a.csv {
                println!("id,params,p,n,lhs,rhs,pass");
                for r in &records {
                    any_fail |= !r.pass;
                    println!(
                        "{},\"{}\",{},{},{},{},{}",
                        r.id, r.params, r.p, r.n, r.lhs, r.rhs, r.pass
                    );
                }
            } else {
                println!("| p | params | lhs | rhs | pass |");
                println!("|---|---|---|---|---|");
                for r in &records {
                    any_fail |= !r.pass;
                    println!(
                        "| {} | {} | {} | {} | {} |",
                        r.p, r.params, r.lhs, r.rhs, r.pass
                    );
                }
            }
            if any_fail {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        other => usage_error(format!("unknown table `{other}` (want guards|values)")),
    }
}
