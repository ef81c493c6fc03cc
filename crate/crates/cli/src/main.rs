use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use kahler_core::idempotent::{self, EnumerationReport, Plane};
use kahler_core::operators::{self, OperatorId};
use kahler_core::parse::parse;
use kahler_core::report::Status;
use kahler_core::sample::PRNG_ALGORITHM;
use kahler_core::suite::{self, Config, DEFAULT_SEED};
use kahler_core::tensor::Space;
use serde_json::json;

/// Exact verifier for Kähler-Clifford identities.
#[derive(Parser)]
#[command(name = "kahler", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SpaceFlag {
    /// Use the 3-D Euclidean instance (x, y, z) instead of Lorentzian (t, x, y, z).
    #[arg(long)]
    euclidean3: bool,
}

impl SpaceFlag {
    fn space(&self) -> Arc<Space> {
        if self.euclidean3 {
            Space::euclidean3()
        } else {
            Space::lorentzian()
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run the named identity checks.
    Verify {
        #[arg(long)]
        json: bool,
        /// Only checks whose id starts with this prefix.
        #[arg(long)]
        only: Option<String>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Run the spatial operator checks in the 3-D Euclidean instance.
        #[arg(long)]
        euclidean3: bool,
    },
    /// Enumerate the 72 ternary mirror idempotent products.
    Enumerate {
        /// Restrict to one plane: 12, 23 or 31.
        #[arg(long)]
        plane: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Print the twelve canonical ternary idempotents of a plane.
    Table {
        /// 12, 23 or 31; all three when omitted.
        #[arg(long)]
        plane: Option<String>,
    },
    /// Check op(u) = λ ∨ u.
    Eigen {
        /// J1, J2, J3, K, Kplus1, kahler_d, ext_d or codiff.
        op: String,
        expr: String,
        lambda: String,
        #[command(flatten)]
        space: SpaceFlag,
    },
    /// Print the canonical expansion of an expression.
    Parse {
        expr: String,
        #[command(flatten)]
        space: SpaceFlag,
    },
}

const USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify {
            json,
            only,
            seed,
            euclidean3,
        } => verify(json, only.as_deref(), seed, euclidean3),
        Command::Enumerate { plane, json } => enumerate(plane.as_deref(), json),
        Command::Table { plane } => table(plane.as_deref()),
        Command::Eigen { op, expr, lambda, space } => eigen(&op, &expr, &lambda, &space.space()),
        Command::Parse { expr, space } => match parse(&expr, &space.space()) {
            Ok(u) => {
                println!("{u}");
                ExitCode::SUCCESS
            }
            Err(e) => usage(format!("parse error: {e}")),
        },
    }
}

fn usage(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("kahler: {message}");
    ExitCode::from(USAGE)
}

fn verify(json: bool, only: Option<&str>, seed: u64, euclidean3: bool) -> ExitCode {
    let config = Config {
        seed,
        spatial: if euclidean3 { Space::euclidean3() } else { Space::lorentzian() },
    };
    let reports = suite::run(&config, only);
    if let Some(o) = only {
        if reports.is_empty() {
            return usage(format!("no check id starts with `{o}`"));
        }
    }
    if json {
        println!("{}", serde_json::to_string_pretty(&reports).expect("reports serialize"));
    } else {
        let spatial = if euclidean3 { "euclidean3" } else { "lorentzian" };
        println!("seed {seed}, prng {PRNG_ALGORITHM}, spatial space {spatial}");
        let width = reports.iter().map(|r| r.check_id.len()).max().unwrap_or(0);
        for r in &reports {
            println!("{:<6} {:<width$}  {}", r.status.as_str().to_uppercase(), r.check_id, r.paper_ref);
            if r.status != Status::Pass {
                println!("{:<6} {:<width$}    lhs: {}", "", "", r.lhs);
                println!("{:<6} {:<width$}    rhs: {}", "", "", r.rhs);
                if !r.detail.is_empty() {
                    println!("{:<6} {:<width$}    {}", "", "", r.detail);
                }
            }
        }
        let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
        println!(
            "{} checks: {} pass, {} fail, {} logged",
            reports.len(),
            count(Status::Pass),
            count(Status::Fail),
            count(Status::Logged)
        );
    }
    if reports.iter().any(|r| r.failed()) {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}

fn planes(arg: Option<&str>) -> Result<Vec<Plane>, ExitCode> {
    match arg {
        None => Ok(Plane::CANONICAL.to_vec()),
        Some(text) => Plane::parse(text)
            .map(|p| vec![p])
            .map_err(|_| usage(format!("invalid plane `{text}` (expected 12, 23 or 31)"))),
    }
}

fn enumerate(plane: Option<&str>, json: bool) -> ExitCode {
    let planes = match planes(plane) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let space = Space::lorentzian();
    let report = match idempotent::enumerate_ternary(&space, &planes) {
        Ok(r) => r,
        Err(e) => return usage(e),
    };
    let tables = match plane {
        Some(_) => match idempotent::table_12(&space, planes[0]) {
            Ok(t) => Some(t),
            Err(e) => return usage(e),
        },
        None => None,
    };
    if json {
        let mut value = enumeration_json(&report);
        if let Some(t) = &tables {
            value["table"] = t
                .cells
                .iter()
                .map(|c| json!({ "label": c.product.label(), "expansion": c.product.expansion.to_string() }))
                .collect();
        }
        println!("{}", serde_json::to_string_pretty(&value).expect("json"));
    } else {
        let names: Vec<String> = planes.iter().map(Plane::to_string).collect();
        println!("planes {}", names.join(", "));
        println!("raw products          {}", report.raw_count);
        println!("equality classes      {}", report.equality_class_count);
        println!("reflection classes    {}", report.reflection_class_count);
        println!("all idempotent        {}", report.all_idempotent);
        println!("rank of span          {}", report.rank);
        println!("reflection classes:");
        for class in &report.reflection_classes {
            println!("  {}", class.join(", "));
        }
        if let Some(t) = tables {
            print!("{t}");
        }
    }
    ExitCode::SUCCESS
}

fn enumeration_json(r: &EnumerationReport) -> serde_json::Value {
    json!({
        "rawCount": r.raw_count,
        "equalityClassCount": r.equality_class_count,
        "reflectionClassCount": r.reflection_class_count,
        "allIdempotent": r.all_idempotent,
        "rank": r.rank,
        "equalityClasses": r.equality_classes,
        "reflectionClasses": r.reflection_classes,
        "products": r.products.iter().map(|p| json!({
            "label": p.label(),
            "expansion": p.expansion.to_string(),
        })).collect::<Vec<_>>(),
    })
}

fn table(plane: Option<&str>) -> ExitCode {
    let planes = match planes(plane) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let space = Space::lorentzian();
    for p in planes {
        match idempotent::table_12(&space, p) {
            Ok(t) => print!("{t}"),
            Err(e) => return usage(e),
        }
    }
    ExitCode::SUCCESS
}

fn eigen(op: &str, expr: &str, lambda: &str, space: &Arc<Space>) -> ExitCode {
    let op: OperatorId = match op.parse() {
        Ok(op) => op,
        Err(e) => return usage(e),
    };
    let (u, l) = match (parse(expr, space), parse(lambda, space)) {
        (Ok(u), Ok(l)) => (u, l),
        (Err(e), _) => return usage(format!("parse error in expression: {e}")),
        (_, Err(e)) => return usage(format!("parse error in eigenvalue: {e}")),
    };
    let outcome = match operators::eigencheck(&op, &u, &l) {
        Ok(o) => o,
        Err(e) => return usage(e),
    };
    println!("{:<8} = {}", format!("{op}(u)"), outcome.image);
    println!("{:<8} = {}", "λ ∨ u", outcome.expected);
    if outcome.holds {
        println!("pass");
        ExitCode::SUCCESS
    } else {
        println!("fail");
        ExitCode::FAILURE
    }
}
