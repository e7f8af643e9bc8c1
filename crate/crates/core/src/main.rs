use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};

use autorbit::catalog::build;
use autorbit::error::GroupError;
use autorbit::groupfile::Claim;
use autorbit::verify::corpus::load_file;
use autorbit::verify::{run_target, Analyzer, Corpus, GroupReport, Status, Target, VerifyOptions};
use autorbit::PermGroup;

#[derive(Parser)]
#[command(name = "autorbit", version, about = "Automorphism orbits of finite permutation groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Full invariant report for a catalog name or group file.
    Info {
        spec: String,
        #[arg(long, value_enum, default_value = "text")]
        emit: Emit,
    },
    /// ω and the orbit census.
    Omega { spec: String },
    /// Check one statement over the corpus.
    Verify {
        target: Target,
        /// Directory of `.group` files added to the default corpus.
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long)]
        max_order: Option<u128>,
        #[arg(long)]
        timeout_secs: Option<u64>,
    },
    /// Report every `.group` file in a directory.
    Scan {
        dir: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        emit: Emit,
        #[arg(long)]
        max_order: Option<u128>,
    },
}

const EXIT_FAIL: u8 = 1;
const EXIT_SKIP: u8 = 2;

fn resolve(spec: &str) -> Result<(PermGroup, Vec<Claim>), GroupError> {
    let path = Path::new(spec);
    if path.is_file() {
        let e = load_file(path)?;
        return Ok((e.group, e.claims));
    }
    Ok((build(spec)?, Vec::new()))
}

fn status_code(s: Status) -> u8 {
    match s {
        Status::Pass => 0,
        Status::Fail => EXIT_FAIL,
        Status::Skip => EXIT_SKIP,
    }
}

fn report_error(context: &str, e: &GroupError) -> ExitCode {
    eprintln!("autorbit: {context}: {e}");
    ExitCode::from(EXIT_SKIP)
}

fn info(spec: &str, emit: Emit) -> ExitCode {
    let an = Analyzer::new(None);
    let r = resolve(spec).and_then(|(g, claims)| {
        let f = an.facts(spec, &g)?;
        GroupReport::from_facts(&an, &f, &claims)
    });
    match r {
        Ok(r) => {
            match emit {
                Emit::Text => print!("{}", r.to_text()),
                Emit::Json => println!("{}", r.to_json()),
            }
            ExitCode::from(status_code(r.status()))
        }
        Err(e) => report_error(spec, &e),
    }
}

fn omega(spec: &str) -> ExitCode {
    let an = Analyzer::new(None);
    let r = resolve(spec).and_then(|(g, _)| {
        let f = an.facts(spec, &g)?;
        let a = f.aut()?;
        Ok((f.name.clone(), a.omega(), a.partition().census()))
    });
    match r {
        Ok((name, w, census)) => {
            println!("name: {name}");
            println!("omega: {w}");
            for (order, size) in census {
                println!("cell: order {order} size {size}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => report_error(spec, &e),
    }
}

fn verify(target: Target, dir: Option<&Path>, opts: VerifyOptions) -> ExitCode {
    let mut corpus = match Corpus::default_corpus() {
        Ok(c) => c,
        Err(e) => return report_error("default corpus", &e),
    };
    let mut unreadable = Vec::new();
    if let Some(dir) = dir {
        match Corpus::load_dir(dir) {
            Ok((c, errors)) => {
                corpus.extend(c);
                unreadable = errors;
            }
            Err(e) => return report_error(&dir.display().to_string(), &e),
        }
    }
    let an = Analyzer::new(opts.timeout);
    let mut report = run_target(target, &corpus, &opts, &an);
    for (path, e) in unreadable {
        report.verdicts.push(autorbit::verify::Verdict::skip(
            target.as_str(),
            &path.display().to_string(),
            format!("unreadable group file: {e}"),
        ));
    }
    print!("{}", report.to_text());
    ExitCode::from(report.exit_code() as u8)
}

fn scan(dir: &Path, emit: Emit, max_order: Option<u128>) -> ExitCode {
    let (corpus, errors) = match Corpus::load_dir(dir) {
        Ok(x) => x,
        Err(e) => return report_error(&dir.display().to_string(), &e),
    };
    let mut code = 0u8;
    for (path, e) in &errors {
        eprintln!("autorbit: {}: {e}", path.display());
        code = code.max(EXIT_SKIP);
    }
    let an = Analyzer::new(None);
    let mut first = true;
    for e in &corpus.entries {
        if max_order.is_some_and(|m| e.group.order() > m) {
            eprintln!("autorbit: {}: SKIP order {} exceeds --max-order", e.name, e.group.order());
            code = code.max(EXIT_SKIP);
            continue;
        }
        let key = format!("{:?}", e.origin);
        let r = an
            .facts(&key, &e.group)
            .and_then(|f| GroupReport::from_facts(&an, &f, &e.claims));
        match r {
            Ok(r) => {
                match emit {
                    Emit::Text => {
                        if !first {
                            println!();
                        }
                        print!("{}", r.to_text());
                    }
                    Emit::Json => println!("{}", r.to_json()),
                }
                first = false;
                // a failure outranks a skip
                code = match (code, status_code(r.status())) {
                    (EXIT_FAIL, _) | (_, EXIT_FAIL) => EXIT_FAIL,
                    (a, b) => a.max(b),
                };
            }
            Err(err) => {
                eprintln!("autorbit: {}: SKIP {err}", e.name);
                if code != EXIT_FAIL {
                    code = EXIT_SKIP;
                }
            }
        }
    }
    ExitCode::from(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let code = match cli.command {
        Command::Info { spec, emit } => info(&spec, emit),
        Command::Omega { spec } => omega(&spec),
        Command::Verify {
            target,
            corpus,
            max_order,
            timeout_secs,
        } => verify(
            target,
            corpus.as_deref(),
            VerifyOptions {
                max_order,
                timeout: timeout_secs.map(Duration::from_secs),
            },
        ),
        Command::Scan { dir, emit, max_order } => scan(&dir, emit, max_order),
    };
    eprintln!("autorbit: elapsed {:.2?}", start.elapsed());
    code
}
