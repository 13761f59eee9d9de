//! Command-line front end: verification sweeps, bound tables, lift
//! construction, basis bijection queries and genus assemblies.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use maxgenus::error::Error;
use maxgenus::field::FieldSpec;
use maxgenus::genus;
use maxgenus::lift::{construct_lift, surface_equation, verify_congruence};
use maxgenus::poly::{parse_poly, ParamSet, Ring};
use maxgenus::verify::{random_g, run_verify, Method, VerificationReport, VerifyConfig};

#[derive(Parser)]
#[command(name = "maxgenus", about = "Exact verification of good weighted-homogeneous polynomials and maximum genus numerology", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep a range of m with randomly generated witnesses
    Verify(VerifyArgs),
    /// CSV table of the bound P(d,s)
    Bounds(BoundsArgs),
    /// Construct and print the lift witness and surface equation
    Lift(LiftArgs),
    /// Apply the basis bijection to a monomial
    Psi(PsiArgs),
    /// Genus formulas
    Genus(GenusArgs),
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    m_min: u32,
    #[arg(long)]
    m_max: u32,
    #[arg(long, conflicts_with = "rationals")]
    prime: Option<u64>,
    /// Work over the rationals instead of a prime field
    #[arg(long)]
    rationals: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 3)]
    trials: u32,
    /// phi | direct | groebner | all; default phi with a direct cross-check
    /// auto-enabled for m <= 5
    #[arg(long)]
    method: Option<String>,
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long)]
    out: Option<String>,
    /// json | csv
    #[arg(long, default_value = "json")]
    format: String,
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long)]
    d_max: i64,
    #[arg(long)]
    s_max: i64,
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct LiftArgs {
    #[arg(long)]
    m: u32,
    #[arg(long, default_value_t = 0)]
    a: u32,
    #[arg(long, default_value_t = maxgenus::field::DEFAULT_PRIME)]
    prime: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Re-verify the factorization congruence after construction
    #[arg(long)]
    check: bool,
}

#[derive(Args)]
struct PsiArgs {
    #[arg(long)]
    m: u32,
    /// Monomial in the text grammar, e.g. "x^2*y*z^3"
    #[arg(long)]
    monomial: String,
    #[arg(long)]
    inverse: bool,
}

#[derive(Args)]
struct GenusArgs {
    #[command(subcommand)]
    command: GenusCommand,
}

#[derive(Subcommand)]
enum GenusCommand {
    /// Component assembly realizing the bound P(d,d)
    Assembly {
        #[arg(long)]
        d: i64,
    },
}

fn write_or_print(out: &Option<String>, content: &str) -> Result<(), Error> {
    match out {
        Some(path) => fs::write(path, content).map_err(Error::from),
        None => {
            println!("{}", content);
            Ok(())
        }
    }
}

fn merge_reports(mut a: VerificationReport, b: VerificationReport) -> VerificationReport {
    a.records.extend(b.records);
    a.records.sort_by_key(|r| (r.m, r.trial));
    a.summary.verified_m.extend(b.summary.verified_m);
    a.summary.verified_m.sort_unstable();
    a.summary.inconclusive_m.extend(b.summary.inconclusive_m);
    a.summary.inconclusive_m.sort_unstable();
    a.config.m_max = a.config.m_max.max(b.config.m_max);
    a
}

fn cmd_verify(args: &VerifyArgs) -> Result<u8, Error> {
    let field = if args.rationals {
        FieldSpec::Rational
    } else {
        FieldSpec::prime(args.prime.unwrap_or(maxgenus::field::DEFAULT_PRIME))?
    };
    let base = |m_min: u32, m_max: u32, methods: Vec<Method>| VerifyConfig {
        m_min,
        m_max,
        field,
        seed: args.seed,
        trials: args.trials,
        methods,
        jobs: args.jobs,
    };
    let report = match &args.method {
        Some(spec) => run_verify(&base(args.m_min, args.m_max, Method::parse(spec)?))?,
        None => {
            // default: phi everywhere, direct cross-check on the cheap range
            let split = 5u32;
            if args.m_max <= split {
                run_verify(&base(args.m_min, args.m_max, vec![Method::Phi, Method::Direct]))?
            } else if args.m_min > split {
                run_verify(&base(args.m_min, args.m_max, vec![Method::Phi]))?
            } else {
                let low =
                    run_verify(&base(args.m_min, split, vec![Method::Phi, Method::Direct]))?;
                let high = run_verify(&base(split + 1, args.m_max, vec![Method::Phi]))?;
                merge_reports(low, high)
            }
        }
    };
    let rendered = match args.format.as_str() {
        "json" => report.to_json(),
        "csv" => report.to_csv(),
        other => return Err(Error::Parse(format!("unknown format '{}'", other))),
    };
    write_or_print(&args.out, &rendered)?;
    Ok(if report.all_verified() { 0 } else { 1 })
}

fn cmd_bounds(args: &BoundsArgs) -> Result<u8, Error> {
    write_or_print(&args.out, &genus::bounds_csv(args.d_max, args.s_max)?)?;
    Ok(0)
}

fn cmd_lift(args: &LiftArgs) -> Result<u8, Error> {
    let field = FieldSpec::prime(args.prime)?;
    let params = ParamSet::with_shift(args.m, args.a)?;
    let g0 = random_g(args.m, field, args.seed)?;
    let wit = construct_lift(&g0, &params)?;
    println!("g0   = {}", g0);
    println!("gbar = {}", wit.gbar);
    println!("k    = {}", wit.k);
    println!("kbar = {}", wit.kbar);
    println!("g1   = {}", wit.g1);
    println!("h    = {}", wit.h);
    println!("h1   = {}", wit.h1);
    let surf = surface_equation(&g0, &params, None)?;
    println!(
        "surface (degree {}, type {}): {} = 0",
        surf.degree,
        surf.curve_type,
        surf.display()
    );
    if args.check {
        if verify_congruence(&wit, &g0, &params)? {
            println!("congruence: ok");
        } else {
            return Err(Error::InvariantViolation(
                "constructed lift fails the factorization congruence".into(),
            ));
        }
    }
    Ok(0)
}

fn cmd_psi(args: &PsiArgs) -> Result<u8, Error> {
    let params = ParamSet::new(args.m)?;
    let poly = parse_poly(&args.monomial, Ring::Xyz, FieldSpec::Rational)?;
    let mut terms = poly.terms();
    let mono = match (terms.next(), terms.next()) {
        (Some((m, c)), None) if FieldSpec::Rational.is_one(c) => *m,
        _ => {
            return Err(Error::Parse(format!(
                "'{}' is not a single monomial",
                args.monomial
            )))
        }
    };
    let image = if args.inverse {
        maxgenus::basis::psi_inverse(&mono, &params)?
    } else {
        maxgenus::basis::psi(&mono, &params)?
    };
    println!("{}", image.format(Ring::Xyz));
    Ok(0)
}

fn cmd_genus(args: &GenusArgs) -> Result<u8, Error> {
    match &args.command {
        GenusCommand::Assembly { d } => {
            let asm = genus::conjecture_a_assembly(*d)?;
            for c in &asm.components {
                println!("{} (genus {})", c.describe(), c.genus());
            }
            println!(
                "total genus {} vs bound P({},{}) = {}: {}",
                asm.total_genus,
                asm.d,
                asm.d,
                asm.bound,
                if asm.genus_matches_bound() { "match" } else { "MISMATCH" }
            );
            Ok(if asm.genus_matches_bound() { 0 } else { 2 })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap handles --help/--version as "errors" with successful exit
            if e.use_stderr() {
                eprint!("{}", e);
                return ExitCode::from(3);
            }
            print!("{}", e);
            return ExitCode::SUCCESS;
        }
    };
    let result = match &cli.command {
        Command::Verify(args) => cmd_verify(args),
        Command::Bounds(args) => cmd_bounds(args),
        Command::Lift(args) => cmd_lift(args),
        Command::Psi(args) => cmd_psi(args),
        Command::Genus(args) => cmd_genus(args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e @ (Error::MethodDisagreement(_) | Error::InvariantViolation(_))) => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(3)
        }
    }
}
