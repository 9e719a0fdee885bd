//! Command-line front end.
//!
//! Exit status: 0 when every requested check passed, 1 when any failed,
//! 2 on a usage or configuration error. Usage errors are detected before
//! any computation starts.

use std::cmp::Ordering;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use legendre_gf::exact::GUARD_DIGITS;
use legendre_gf::identities::{self, check_params, main1_numeric_sides, verify_all_ids, RunParams};
use legendre_gf::modular::{
    e2_value, eisenstein_combination, eta_value, pi_check_exact, u_weighted_sum, w_of_tau,
};
use legendre_gf::sequences::{self, legendre, u_values};
use legendre_gf::table1::{rows, RowId};
use legendre_gf::{Error, Exact, FixedReal, IdentityId, Rational, VerifyReport};
use rayon::prelude::*;
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "legendre-gf", version, about = "Verify generating-function identities for squares of Legendre polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Series truncation order N.
    #[arg(long, global = true, default_value_t = 40)]
    order: usize,
    /// Decimal working precision P.
    #[arg(long, global = true, default_value_t = 40)]
    digits: u32,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run checks by id (see `list`), or `all`.
    Verify {
        #[arg(required = true)]
        ids: Vec<String>,
    },
    /// Print the first terms of a sequence.
    Seq {
        #[arg(value_enum)]
        name: SeqName,
        /// Number of terms.
        #[arg(long, default_value_t = 10)]
        count: usize,
        /// Evaluation point for polynomial families.
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
    },
    /// Modular quantities at a row's τ, with the bridge and Eisenstein checks.
    Modular {
        #[arg(long)]
        row: String,
    },
    /// Check Σ (a + b n) u_n wⁿ = 1/(π√7) for caller-supplied constants.
    PiCheck {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        w: String,
    },
    /// Sum both sides of the main identity numerically at a table row.
    Eval {
        #[arg(long)]
        row: String,
    },
    /// List identity ids and table rows.
    List,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SeqName {
    U,
    Legendre,
    InnerSum,
    Apery,
    Domb,
    Threefac,
    APoly,
    CentralBinomial,
}

enum Halt {
    /// Bad arguments or configuration, found before computing: exit 2.
    Usage(String),
    /// A check could not be completed: exit 1.
    Compute(String),
}

use Halt::Usage;

impl From<Error> for Halt {
    fn from(e: Error) -> Self {
        Usage(e.to_string())
    }
}

fn computed<T>(r: legendre_gf::Result<T>) -> Result<T, Halt> {
    r.map_err(|e| Halt::Compute(e.to_string()))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let params = RunParams { order: cli.order, digits: cli.digits, ..RunParams::default() };
    match execute(&cli, &params) {
        Ok(code) => ExitCode::from(code),
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Halt::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn execute(cli: &Cli, params: &RunParams) -> Result<u8, Halt> {
    match &cli.command {
        Command::Verify { ids } => {
            let ids = parse_ids(ids)?;
            for &id in &ids {
                check_params(id, params)?;
            }
            let reports = run_all(&ids, params)?;
            emit_reports(&reports, cli.json);
            Ok(exit_code(&reports))
        }
        Command::Seq { name, count, x } => {
            let x = x.as_deref().map(parse_rational).transpose()?;
            print_sequence(*name, *count, x.as_ref(), cli.json)?;
            Ok(0)
        }
        Command::Modular { row } => {
            let row: RowId = row.parse()?;
            let ids = [IdentityId::WBridge(row), IdentityId::Eisenstein(row)];
            for id in ids {
                check_params(id, params)?;
            }
            let values = modular_values(row, params.digits)?;
            let reports = run_all(&ids, params)?;
            if cli.json {
                println!("{}", json!({ "row": row.to_string(), "values": values, "reports": reports }));
            } else {
                for (name, v) in &values {
                    println!("{name:<22} {v}");
                }
                emit_reports(&reports, false);
            }
            Ok(exit_code(&reports))
        }
        Command::PiCheck { a, b, w } => {
            require_numeric_digits(params.digits)?;
            let (a, b, w): (Exact, Exact, Exact) = (a.parse()?, b.parse()?, w.parse()?);
            if w.abs().cmp_exact(&Exact::ratio(1, 27))? != Ordering::Less {
                return Err(Usage(format!("|w| = |{w}| must be below 1/27")));
            }
            let report = computed(pi_check_exact(&a, &b, &w, params.digits))?;
            emit_reports(std::slice::from_ref(&report), cli.json);
            Ok(exit_code(std::slice::from_ref(&report)))
        }
        Command::Eval { row } => {
            let row: RowId = row.parse()?;
            let id = IdentityId::EvalAtRow(row);
            check_params(id, params)?;
            let report = computed(identities::run(id, params))?;
            emit_reports(std::slice::from_ref(&report), cli.json);
            if !cli.json {
                let (lhs, rhs) = computed(main1_numeric_sides(row, params.digits + GUARD_DIGITS, None))?;
                println!("lhs   {}", lhs.with_digits(params.digits));
                println!("rhs   {}", rhs.with_digits(params.digits));
                println!("ratio {}", computed(lhs.checked_div(&rhs))?.with_digits(params.digits));
            }
            Ok(exit_code(std::slice::from_ref(&report)))
        }
        Command::List => {
            print_list(cli.json);
            Ok(0)
        }
    }
}

/// Requested ids, sorted and deduplicated; `all` expands to the closed list.
fn parse_ids(raw: &[String]) -> Result<Vec<IdentityId>, Halt> {
    let mut ids = Vec::new();
    for s in raw {
        if s == "all" {
            ids.extend(verify_all_ids());
        } else {
            let id: IdentityId = s.parse()?;
            if id == IdentityId::PiCheck {
                return Err(Usage("pi-check takes constants; use the pi-check subcommand".into()));
            }
            ids.push(id);
        }
    }
    ids.sort();
    ids.dedup();
    Ok(ids)
}

fn run_all(ids: &[IdentityId], params: &RunParams) -> Result<Vec<VerifyReport>, Halt> {
    let results: Vec<_> = ids.par_iter().map(|&id| identities::run(id, params)).collect();
    computed(results.into_iter().collect())
}

fn exit_code(reports: &[VerifyReport]) -> u8 {
    if reports.iter().all(|r| r.pass) {
        0
    } else {
        1
    }
}

fn emit_reports(reports: &[VerifyReport], as_json: bool) {
    if as_json {
        println!("{}", serde_json::to_string(reports).expect("reports serialize"));
    } else {
        for r in reports {
            println!("{r}");
        }
        let passed = reports.iter().filter(|r| r.pass).count();
        println!("{passed} of {} checks passed", reports.len());
    }
}

fn require_numeric_digits(digits: u32) -> Result<(), Halt> {
    if digits < 10 {
        return Err(Usage(format!("digits must be at least 10, got {digits}")));
    }
    Ok(())
}

fn parse_rational(s: &str) -> Result<Rational, Halt> {
    let e: Exact = s.parse()?;
    e.as_rational().ok_or_else(|| Usage(format!("--x must be rational, got {s}")))
}

fn print_sequence(name: SeqName, count: usize, x: Option<&Rational>, as_json: bool) -> Result<(), Halt> {
    let needs_x = matches!(name, SeqName::InnerSum);
    if needs_x && x.is_none() {
        return Err(Usage("inner-sum needs --x".into()));
    }
    let terms: Vec<String> = (0..count)
        .map(|n| match name {
            SeqName::U => u_values(n)[n].to_string(),
            SeqName::Legendre => match x {
                Some(x) => legendre(n).eval(x).to_string(),
                None => legendre(n).to_string(),
            },
            SeqName::InnerSum => sequences::inner_sum(n, x.expect("checked")).to_string(),
            SeqName::Apery => sequences::apery(n).to_string(),
            SeqName::Domb => sequences::domb(n).to_string(),
            SeqName::Threefac => sequences::threefac(n).to_string(),
            SeqName::APoly => match x {
                Some(x) => sequences::a_poly(n).eval(x).to_string(),
                None => sequences::a_poly(n).to_string(),
            },
            SeqName::CentralBinomial => sequences::central_binomial(n).to_string(),
        })
        .collect();
    if as_json {
        let name = name.to_possible_value().expect("not skipped").get_name().to_string();
        println!("{}", json!({ "sequence": name, "terms": terms }));
    } else {
        for (n, t) in terms.iter().enumerate() {
            println!("{n:>4}  {t}");
        }
    }
    Ok(())
}

fn modular_values(row: RowId, digits: u32) -> Result<Vec<(String, String)>, Halt> {
    let data = row.row();
    let tau = data.tau.ok_or_else(|| Usage(format!("row {row} has no τ")))?;
    require_numeric_digits(digits)?;
    let tau7 = tau.scaled(7);
    let w_exact = data.w.as_ref().expect("τ rows carry w");
    let one = FixedReal::one(digits + GUARD_DIGITS);
    let zero = FixedReal::zero(digits + GUARD_DIGITS);
    let w = w_of_tau(&tau, digits + GUARD_DIGITS);
    let show = |v: FixedReal| v.with_digits(digits).to_string();
    Ok(vec![
        ("tau".into(), tau.to_string()),
        ("q".into(), show(tau.q(digits))),
        ("eta(tau)".into(), show(eta_value(&tau, digits))),
        ("eta(7tau)".into(), show(eta_value(&tau7, digits))),
        ("E2(tau)".into(), show(e2_value(&tau, digits))),
        ("E2(7tau)".into(), show(e2_value(&tau7, digits))),
        ("w(tau)".into(), show(w.clone())),
        ("w exact".into(), w_exact.to_string()),
        ("(7E2(7tau)-E2(tau))/6".into(), show(eisenstein_combination(&tau, digits))),
        ("sum u_n w^n".into(), show(computed(u_weighted_sum(&one, &zero, &w, digits))?)),
    ])
}

fn print_list(as_json: bool) {
    let mut ids = verify_all_ids();
    ids.extend(RowId::PARAMETRISED.iter().map(|&r| IdentityId::EvalAtRow(r)));
    ids.push(IdentityId::PiCheck);
    ids.sort();
    let all = verify_all_ids();
    if as_json {
        let ids: Vec<Value> = ids
            .iter()
            .map(|id| json!({ "id": id.to_string(), "kind": id.kind(), "in_verify_all": all.contains(id) }))
            .collect();
        let rows: Vec<Value> = rows()
            .iter()
            .map(|r| {
                json!({
                    "id": r.id.to_string(),
                    "x": r.x.to_string(),
                    "z": r.z.to_string(),
                    "v": r.v.as_ref().map(|v| v.to_string()),
                    "w": r.w.as_ref().map(|w| w.to_string()),
                    "tau": r.tau.map(|t| t.to_string()),
                })
            })
            .collect();
        println!("{}", json!({ "identities": ids, "rows": rows }));
        return;
    }
    println!("identities (* = part of `verify all`):");
    for id in &ids {
        let mark = if all.contains(id) { "*" } else { " " };
        println!("  {mark} {:<18} {:?}", id.to_string(), id.kind());
    }
    println!("rows:");
    for r in rows() {
        let opt = |o: Option<String>| o.unwrap_or_else(|| "-".into());
        println!(
            "  {:<5} x={} z={} v={} w={} tau={}",
            r.id.to_string(),
            r.x,
            r.z,
            opt(r.v.as_ref().map(|v| v.to_string())),
            opt(r.w.as_ref().map(|w| w.to_string())),
            opt(r.tau.map(|t| t.to_string()))
        );
    }
}
