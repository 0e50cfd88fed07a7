//! `egypt`: Egyptian fraction expansions over special integer sequences.

mod output;

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use egypt::bounds::total_sum_upper_bound;
use egypt::verifier::{compare_bfile, oracle_members, verify_expansion, ORACLE_LIMIT};
use egypt::{expand, feasibility, BigUint, Budgets, Error, Rational, Sequence, SequenceId, Verdict};

use output::{OutputRecord, TraceRecord};

#[derive(Parser)]
#[command(name = "egypt", version, about = "Egyptian fractions with denominators from a chosen integer sequence")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    budgets: BudgetArgs,
}

#[derive(Args)]
struct BudgetArgs {
    /// Trial-division bound for factorization.
    #[arg(long, global = true, default_value_t = Budgets::default().factor)]
    factor_budget: u64,
    /// Bound on ascending multiplier searches.
    #[arg(long, global = true, default_value_t = Budgets::default().search)]
    search_budget: u64,
    /// Largest denominator size, in bits, the expander will build.
    #[arg(long, global = true, default_value_t = Budgets::default().max_denominator_bits)]
    max_bits: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Expand Q into distinct unit fractions from the sequence.
    Expand {
        q: String,
        #[arg(long)]
        seq: String,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        trace: bool,
        /// Most sequence members the greedy prefix may take.
        #[arg(long, default_value_t = Budgets::default().prefix_members)]
        budget: u64,
    },
    /// Is N a member of the sequence?
    Member {
        n: String,
        #[arg(long)]
        seq: String,
    },
    /// A multiplier r with r*N in the sequence.
    Multiplier {
        n: String,
        #[arg(long)]
        seq: String,
    },
    /// Members up to a limit, one per line.
    Enumerate {
        #[arg(long)]
        seq: String,
        #[arg(long)]
        limit: u64,
    },
    /// Whether Q lies below the sequence's reciprocal sum.
    Feasibility {
        q: String,
        #[arg(long)]
        seq: String,
        #[arg(long)]
        json: bool,
        /// Members summed for the lower bound.
        #[arg(long, default_value_t = 100_000)]
        budget: usize,
    },
    /// Check a list of denominators against a target.
    Verify {
        /// Taken from JSON input when omitted.
        #[arg(long)]
        seq: Option<String>,
        /// Taken from JSON input when omitted.
        #[arg(long)]
        q: Option<String>,
        /// Comma or whitespace separated list, a file, or `-` for stdin.
        /// Output of `expand --json` is accepted too.
        #[arg(long)]
        denominators: String,
    },
    /// Compare an OEIS b-file with the enumeration.
    CompareBfile {
        #[arg(long)]
        seq: String,
        #[arg(long)]
        file: String,
    },
    /// Compare every sequence with its brute-force oracle.
    Selftest {
        #[arg(long, default_value_t = 10_000)]
        limit: u64,
    },
}

/// Failure with its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::InternalAssertionFailed { .. }) { 1 } else { 2 };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

fn parse_target(s: &str) -> Result<Rational, Failure> {
    let q: Rational = s.parse()?;
    if !q.is_positive() {
        return Err(usage(format!("target {q} must be positive")));
    }
    Ok(q)
}

fn parse_natural(s: &str) -> Result<BigUint, Failure> {
    match s.trim().parse::<BigUint>() {
        Ok(n) if n > BigUint::ZERO => Ok(n),
        _ => Err(usage(format!("expected a positive integer, got {s:?}"))),
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("records always serialize")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let budgets = Budgets {
        factor: cli.budgets.factor_budget,
        search: cli.budgets.search_budget,
        max_denominator_bits: cli.budgets.max_bits,
        ..Budgets::default()
    };
    let sequence = |name: &str, budgets: Budgets| -> Result<Sequence, Failure> {
        Ok(Sequence::with_budgets(name.parse::<SequenceId>()?, budgets))
    };
    match cli.command {
        Command::Expand { q, seq, json, trace, budget } => {
            let seq = sequence(&seq, Budgets { prefix_members: budget, ..budgets })?;
            let q = parse_target(&q)?;
            if total_sum_upper_bound(seq.id()).is_some_and(|u| q >= u) {
                eprintln!("infeasible: {q} is not below the reciprocal sum of {}", seq.id());
                return Ok(1);
            }
            let (expansion, t) = expand(&seq, &q)?;
            let report = verify_expansion(&seq, &q, expansion.denominators());
            let trace_record = trace.then(|| TraceRecord::new(&t));
            if json {
                let record = OutputRecord {
                    sequence: seq.id().name().to_string(),
                    q: q.to_string(),
                    denominators: output::denominators(expansion.denominators()),
                    verified: report.passed(),
                    trace: trace_record,
                    verdict: None,
                    certificate: None,
                };
                println!("{}", to_json(&record));
            } else {
                if let Some(t) = trace_record {
                    for line in t.lines() {
                        eprintln!("# {line}");
                    }
                }
                for d in expansion.denominators() {
                    println!("{d}");
                }
            }
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::Member { n, seq } => {
            let seq = sequence(&seq, budgets)?;
            println!("{}", seq.is_member(&parse_natural(&n)?)?);
            Ok(0)
        }
        Command::Multiplier { n, seq } => {
            let seq = sequence(&seq, budgets)?;
            println!("{}", seq.productive_multiplier(&parse_natural(&n)?)?);
            Ok(0)
        }
        Command::Enumerate { seq, limit } => {
            let seq = sequence(&seq, budgets)?;
            let members = seq.enumerate_ascending(limit)?;
            let text: String = members.iter().map(|m| format!("{m}\n")).collect();
            print!("{text}");
            Ok(0)
        }
        Command::Feasibility { q, seq, json, budget } => {
            let seq = sequence(&seq, budgets)?;
            let q = parse_target(&q)?;
            let v = feasibility(&seq, &q, budget)?;
            if json {
                println!("{}", to_json(&output::feasibility_record(seq.id().name(), &q, &v)));
            } else {
                println!("{}", output::verdict_name(v.verdict));
                if let Some(c) = &v.certificate {
                    println!("certificate: {c} (~{:.9})", c.to_f64());
                }
                if v.verdict == Verdict::Unknown {
                    let show =
                        |r: &Option<Rational>| r.as_ref().map_or("?".to_string(), |r| format!("{:.9}", r.to_f64()));
                    println!("gap: [{}, {}]", show(&v.lower), show(&v.upper));
                }
                println!("{}", v.diagnostics);
            }
            Ok(if v.verdict == Verdict::Infeasible { 1 } else { 0 })
        }
        Command::Verify { seq, q, denominators } => {
            let text = read_source(&denominators)?;
            let input = parse_denominators(&text)?;
            let name = seq.or(input.sequence).ok_or_else(|| usage("--seq is required"))?;
            let q = q.or(input.q).ok_or_else(|| usage("--q is required"))?;
            let seq = sequence(&name, budgets)?;
            let q = parse_target(&q)?;
            let report = verify_expansion(&seq, &q, &input.denominators);
            println!("sum: {}", if report.sum_ok { "ok" } else { "FAILED" });
            println!("distinct: {}", if report.distinct_ok { "ok" } else { "FAILED" });
            println!("membership: {:?}", report.membership);
            for v in &report.violations {
                match &v.denominator {
                    Some(d) => println!("violation: {d}: {}", v.reason),
                    None => println!("violation: {}", v.reason),
                }
            }
            println!("{}", if report.passed() { "verified" } else { "not verified" });
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::CompareBfile { seq, file } => {
            let seq = sequence(&seq, budgets)?;
            let text = std::fs::read_to_string(&file).map_err(|e| usage(format!("{file}: {e}")))?;
            match compare_bfile(&seq, &text)? {
                None => {
                    println!("match");
                    Ok(0)
                }
                Some(m) => {
                    let show = |v: Option<u64>| v.map_or("nothing".to_string(), |v| v.to_string());
                    println!(
                        "mismatch at index {}: listed {}, enumerated {}",
                        m.index,
                        show(m.listed),
                        show(m.enumerated)
                    );
                    Ok(1)
                }
            }
        }
        Command::Selftest { limit } => {
            if limit > ORACLE_LIMIT {
                return Err(Error::LimitTooLarge { limit, max: ORACLE_LIMIT }.into());
            }
            let mut ok = true;
            for id in SequenceId::ALL {
                let same =
                    Sequence::with_budgets(id, budgets).enumerate_ascending(limit)? == oracle_members(id, limit)?;
                println!("{} {id} up to {limit}", if same { "ok  " } else { "FAIL" });
                ok &= same;
            }
            Ok(if ok { 0 } else { 1 })
        }
    }
}

fn read_source(arg: &str) -> Result<String, Failure> {
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| usage(format!("stdin: {e}")))?;
        return Ok(s);
    }
    let path = std::path::Path::new(arg);
    if path.is_file() {
        return std::fs::read_to_string(path).map_err(|e| usage(format!("{arg}: {e}")));
    }
    Ok(arg.to_string())
}

/// Denominators to verify, with the sequence and target when the input
/// was a JSON record.
struct VerifyInput {
    sequence: Option<String>,
    q: Option<String>,
    denominators: Vec<BigUint>,
}

/// A JSON record from `expand --json`, or a plain list of integers.
fn parse_denominators(text: &str) -> Result<VerifyInput, Failure> {
    if text.trim_start().starts_with('{') {
        let record: OutputRecord = serde_json::from_str(text).map_err(|e| usage(format!("bad JSON input: {e}")))?;
        let ds = record.denominators.iter().map(|d| parse_integer(d)).collect::<Result<_, _>>()?;
        return Ok(VerifyInput { sequence: Some(record.sequence), q: Some(record.q), denominators: ds });
    }
    let ds = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(parse_integer)
        .collect::<Result<_, _>>()?;
    Ok(VerifyInput { sequence: None, q: None, denominators: ds })
}

/// Zero is accepted here so that `verify` can report it.
fn parse_integer(s: &str) -> Result<BigUint, Failure> {
    s.parse::<BigUint>().map_err(|_| usage(format!("bad denominator {s:?}")))
}
