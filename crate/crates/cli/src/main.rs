//! Command-line front end: canonical block construction, normal forms,
//! verification suites, variety operations and the solution censuses, all
//! speaking exact-scalar JSON.
//!
//! Exit codes: 0 on success, 1 when a verification reports false, 2 on
//! unsupported input or any other error.

use clap::{Args, Parser, Subcommand, ValueEnum};
use skewform::blocks::{build_p_signed, build_p_spec, build_q, build_r_signed, build_r_spec};
use skewform::combinatorics;
use skewform::error::Error;
use skewform::io;
use skewform::normal_form::{normal_form, normal_form_radical};
use skewform::poly::Poly;
use skewform::polysolve::{
    bidiagonal_impossibility_n4, even_special_census, odd_special_census, SolverBudget,
};
use skewform::ring::Ring;
use skewform::scalar::{Radical, Sign};
use skewform::variety;
use serde_json::{json, Value};
use std::fs;
use std::io::Read;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "skewform", version, about = "Exact canonical forms of skew-symmetric matrices")]
struct Cli {
    /// Seed for any randomized step (shape-position retries)
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Output destination; "-" streams to standard output
    #[arg(long, global = true, default_value = "-")]
    output: String,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a canonical block as a JSON matrix document
    Block(BlockArgs),
    /// Canonical form of a skew-symmetric matrix from a JSON document
    NormalForm(NormalFormArgs),
    /// Run a verification suite; exit 0 iff every check passes
    Verify(VerifyArgs),
    /// Variety operations on points of the nilpotent bidiagonal varieties
    Variety(VarietyArgs),
    /// Solution censuses for special bidiagonal matrices
    Census(CensusArgs),
}

#[derive(Args)]
struct BlockArgs {
    /// Block family: p (even), q (divisible by 4), r (odd)
    #[arg(long)]
    kind: BlockKind,
    /// Matrix size
    #[arg(long)]
    size: usize,
    /// Square-root branches for p/r blocks, comma-separated `+`/`-`
    #[arg(long, value_delimiter = ',')]
    signs: Option<Vec<String>>,
}

#[derive(Clone, Copy, ValueEnum)]
enum BlockKind {
    P,
    Q,
    R,
}

#[derive(Args)]
struct NormalFormArgs {
    /// Path to the JSON matrix document ("-" reads standard input)
    #[arg(long)]
    input: String,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which suite: identities, givental, or blocks
    #[arg(long)]
    what: VerifySuite,
    /// Size parameter of the suite
    #[arg(long)]
    s: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifySuite {
    Identities,
    Givental,
    Blocks,
}

#[derive(Args)]
struct VarietyArgs {
    #[command(subcommand)]
    op: VarietyOp,
}

#[derive(Subcommand)]
enum VarietyOp {
    /// Membership of a point in V_s
    Member(InputArg),
    /// Zero-coordinate signature of a member
    Signature(InputArg),
    /// Factor a member into its V*-segments
    Fibers(InputArg),
    /// Invert the A1 map on a tridiagonal nilpotent matrix document
    Invert(InputArg),
    /// Squaring map from a skew bidiagonal spec document
    Phi(InputArg),
    /// Lift a rational member to a skew bidiagonal spec
    Lift(LiftArgs),
}

#[derive(Args)]
struct InputArg {
    /// Path to the JSON input document ("-" reads standard input)
    #[arg(long)]
    input: String,
}

#[derive(Args)]
struct LiftArgs {
    #[arg(long)]
    input: String,
    /// Square-root branches, comma-separated `+`/`-`, one per coordinate
    #[arg(long, value_delimiter = ',')]
    signs: Option<Vec<String>>,
}

#[derive(Args)]
struct CensusArgs {
    /// odd, even, or impossibility-n4
    #[arg(long)]
    case: String,
    /// Size parameter (required for odd/even)
    #[arg(long)]
    s: Option<usize>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            let rendered = serde_json::to_string_pretty(&outcome.payload).expect("serializable");
            if cli.output == "-" {
                println!("{rendered}");
            } else if let Err(e) = fs::write(&cli.output, rendered + "\n") {
                eprintln!("error: cannot write {}: {e}", cli.output);
                return ExitCode::from(2);
            }
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

struct Outcome {
    payload: Value,
    ok: bool,
}

impl Outcome {
    fn ok(payload: Value) -> Self {
        Outcome { payload, ok: true }
    }

    fn verified(payload: Value, ok: bool) -> Self {
        Outcome { payload, ok }
    }
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    match &cli.command {
        Command::Block(args) => run_block(args),
        Command::NormalForm(args) => run_normal_form(args),
        Command::Verify(args) => run_verify(args),
        Command::Variety(args) => run_variety(args),
        Command::Census(args) => run_census(args, cli.seed),
    }
}

fn parse_signs(raw: &Option<Vec<String>>) -> Result<Option<Vec<Sign>>, Error> {
    match raw {
        None => Ok(None),
        Some(items) => {
            let mut out = Vec::with_capacity(items.len());
            for item in items {
                match item.trim() {
                    "+" | "plus" => out.push(Sign::Plus),
                    "-" | "minus" => out.push(Sign::Minus),
                    other => {
                        return Err(Error::InvalidInput(format!("bad sign {other:?}")));
                    }
                }
            }
            Ok(Some(out))
        }
    }
}

fn run_block(args: &BlockArgs) -> Result<Outcome, Error> {
    let signs = parse_signs(&args.signs)?;
    let doc = match args.kind {
        BlockKind::P => {
            let m = match &signs {
                Some(s) => build_p_signed(args.size, s)?,
                None => build_p_spec(args.size, None)?.matrix(),
            };
            io::matrix_to_value(&io::AnyMatrix::Radical(m))
        }
        BlockKind::R => {
            let m = match &signs {
                Some(s) => build_r_signed(args.size, s)?,
                None => build_r_spec(args.size, None)?.matrix(),
            };
            io::matrix_to_value(&io::AnyMatrix::Radical(m))
        }
        BlockKind::Q => {
            if signs.is_some() {
                return Err(Error::InvalidInput("q blocks take no signs".into()));
            }
            io::matrix_to_value(&io::AnyMatrix::Gauss(build_q(args.size)?))
        }
    };
    Ok(Outcome::ok(doc))
}

fn read_input(path: &str) -> Result<Value, Error> {
    let raw = if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::InvalidInput(format!("cannot read stdin: {e}")))?;
        buf
    } else {
        fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("cannot read {path}: {e}")))?
    };
    serde_json::from_str(&raw).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))
}

fn run_normal_form(args: &NormalFormArgs) -> Result<Outcome, Error> {
    let doc = read_input(&args.input)?;
    let matrix = io::matrix_from_value(&doc)?;
    let nf = match &matrix {
        io::AnyMatrix::Rat(m) => normal_form(&m.to_gauss())?,
        io::AnyMatrix::Gauss(m) => normal_form(m)?,
        io::AnyMatrix::Radical(m) => normal_form_radical(m)?,
    };
    Ok(Outcome::ok(io::normal_form_to_value(&nf)))
}

fn run_verify(args: &VerifyArgs) -> Result<Outcome, Error> {
    let s = args.s;
    if s == 0 {
        return Err(Error::InvalidInput("--s must be positive".into()));
    }
    match args.what {
        VerifySuite::Identities => {
            let mut checks = Vec::new();
            let mut all = true;
            for k in 1..=s {
                let pass = combinatorics::verify_identities(k)?;
                all &= pass;
                checks.push(json!({"s": k, "pass": pass}));
            }
            Ok(Outcome::verified(json!({"suite": "identities", "checks": checks, "pass": all}), all))
        }
        VerifySuite::Givental => {
            let grid = combinatorics::check_grid(s as i64, s as i64);
            let mut all = grid;
            let mut truncations = Vec::new();
            let mut nilpotency = Vec::new();
            for d in 1..=s {
                let t = combinatorics::check_truncation(d)?;
                let uv = combinatorics::build_u(d).mul(&combinatorics::build_v(d))?;
                let nil = uv.charpoly()? == Poly::monomial(skewform::scalar::Rat::one(), d + 1);
                all &= t && nil;
                truncations.push(json!({"d": d, "pass": t}));
                nilpotency.push(json!({"d": d, "pass": nil}));
            }
            let mut iy = Vec::new();
            for k in 1..=s {
                let pass = combinatorics::check_iy(k)?;
                all &= pass;
                iy.push(json!({"s": k, "pass": pass}));
            }
            Ok(Outcome::verified(
                json!({
                    "suite": "givental",
                    "grid": grid,
                    "truncation": truncations,
                    "uv_nilpotency": nilpotency,
                    "iy": iy,
                    "pass": all,
                }),
                all,
            ))
        }
        VerifySuite::Blocks => {
            let mut all = true;
            let mut p_checks = Vec::new();
            for k in 1..=s {
                let n = 2 * k;
                let cp = skewform::blocks::build_p(n)?.charpoly()?;
                let t2m1 =
                    Poly::new(vec![Radical::from(-1), Radical::zero(), Radical::one()]);
                let pass = cp == t2m1.pow(k);
                all &= pass;
                p_checks.push(json!({"n": n, "pass": pass}));
            }
            let mut r_checks = Vec::new();
            for k in 0..=s {
                let n = 2 * k + 1;
                let cp = skewform::blocks::build_r(n)?.charpoly()?;
                let pass = cp == Poly::monomial(Radical::one(), n);
                all &= pass;
                r_checks.push(json!({"n": n, "pass": pass}));
            }
            let mut q_checks = Vec::new();
            for k in 1..=s {
                let m = 4 * k;
                let q = build_q(m)?;
                let nilpotent = q.charpoly()? == Poly::monomial(skewform::scalar::GaussRat::one(), m);
                let rank_ok = q.rank() == m - 2;
                let jordan_ok = skewform::jordan::jordan_at(&q, &skewform::scalar::GaussRat::zero())?
                    == vec![2 * k, 2 * k];
                let pass = nilpotent && rank_ok && jordan_ok;
                all &= pass;
                q_checks.push(json!({"m": m, "pass": pass}));
            }
            Ok(Outcome::verified(
                json!({"suite": "blocks", "p": p_checks, "r": r_checks, "q": q_checks, "pass": all}),
                all,
            ))
        }
    }
}

fn run_variety(args: &VarietyArgs) -> Result<Outcome, Error> {
    match &args.op {
        VarietyOp::Member(input) => {
            let p = io::point_from_value(&read_input(&input.input)?)?;
            let member = variety::in_v(&p)?;
            Ok(Outcome::verified(json!({"s": p.s(), "member": member}), member))
        }
        VarietyOp::Signature(input) => {
            let p = io::point_from_value(&read_input(&input.input)?)?;
            let sig = variety::signature(&p)?;
            Ok(Outcome::ok(json!({"s": p.s(), "signature": sig.indices})))
        }
        VarietyOp::Fibers(input) => {
            let p = io::point_from_value(&read_input(&input.input)?)?;
            let sig = variety::signature(&p)?;
            let segments = variety::fiber_factor(&p)?;
            Ok(Outcome::ok(json!({
                "s": p.s(),
                "signature": sig.indices,
                "segment_sizes": sig.segment_sizes(p.s()),
                "segments": segments.iter().map(io::point_to_value).collect::<Vec<_>>(),
            })))
        }
        VarietyOp::Invert(input) => {
            let m = io::matrix_from_value(&read_input(&input.input)?)?.to_gauss()?;
            let p = variety::cf_invert(&m)?;
            Ok(Outcome::ok(io::point_to_value(&p)))
        }
        VarietyOp::Phi(input) => {
            let spec = io::bidiagonal_spec_from_value(&read_input(&input.input)?)?;
            let p = variety::skew_phi(&spec)?;
            Ok(Outcome::ok(io::point_to_value(&p)))
        }
        VarietyOp::Lift(lift) => {
            let p = io::point_from_value(&read_input(&lift.input)?)?;
            let signs = parse_signs(&lift.signs)?
                .unwrap_or_else(|| vec![Sign::Plus; p.coords().len()]);
            let spec = variety::skew_lift(&p, &signs)?;
            Ok(Outcome::ok(io::bidiagonal_spec_to_value(&spec)))
        }
    }
}

fn run_census(args: &CensusArgs, seed: u64) -> Result<Outcome, Error> {
    let budget = SolverBudget::default();
    match args.case.as_str() {
        "odd" | "even" => {
            let s = args
                .s
                .ok_or_else(|| Error::InvalidInput("--s is required for odd/even census".into()))?;
            let report = if args.case == "odd" {
                odd_special_census(s, &budget, seed)?
            } else {
                even_special_census(s, &budget, seed)?
            };
            Ok(Outcome::ok(json!({
                "case": args.case,
                "s": report.s,
                "q_count": report.solution_count,
                "lifted_count": report.lifted_count,
                "bezout_bound": report.bezout_bound,
                "all_nonzero": report.all_nonzero,
            })))
        }
        "impossibility-n4" => {
            let report = bidiagonal_impossibility_n4()?;
            let cases: Vec<Value> = report
                .cases
                .iter()
                .map(|c| {
                    json!({
                        "zeros": c.zeros,
                        "satisfiable": c.satisfiable,
                        "jordan_type": c.jordan_type,
                    })
                })
                .collect();
            Ok(Outcome::verified(json!({"holds": report.holds, "cases": cases}), report.holds))
        }
        other => Err(Error::InvalidInput(format!(
            "unknown census case {other:?}; use odd, even, or impossibility-n4"
        ))),
    }
}
