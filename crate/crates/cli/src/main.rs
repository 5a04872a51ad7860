use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::json;

use dehn_core::analytics::{self, Suite};
use dehn_core::census::{load_census, Census, CensusError};
use dehn_core::cusp::{enumerate_short_slopes, slope_length, CuspTranslations};
use dehn_core::description::{parse_description, ManifoldDescription};
use dehn_core::graph::{certify_minimal, graph_shape};
use dehn_core::seifert::{self, Pi1Class};
use dehn_core::taxonomy::classify;

/// Exceptional Dehn filling census toolkit
#[derive(Parser, Debug)]
#[command(name = "dehn", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct CensusArgs {
    /// manifolds.csv
    #[arg(long)]
    manifolds: PathBuf,
    /// fillings.csv
    #[arg(long)]
    fillings: PathBuf,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Type table and e(M) histogram of a census
    Stats {
        #[command(flatten)]
        census: CensusArgs,
        /// Line-delimited JSON output
        #[arg(long)]
        json: bool,
    },
    /// Run the consistency checks; exit 1 if any fails
    Check {
        #[command(flatten)]
        census: CensusArgs,
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long)]
        json: bool,
    },
    /// List slopes no longer than the bound on a cusp lattice
    Slopes {
        #[arg(long, allow_hyphen_values = true)]
        m_re: f64,
        #[arg(long, allow_hyphen_values = true)]
        m_im: f64,
        #[arg(long, allow_hyphen_values = true)]
        l_re: f64,
        #[arg(long, allow_hyphen_values = true)]
        l_im: f64,
        #[arg(long, default_value_t = 6.0)]
        bound: f64,
        #[arg(long)]
        json: bool,
    },
    /// Normalize a description and print its invariants
    Normalize {
        description: String,
        #[arg(long)]
        json: bool,
    },
    /// Check a graph manifold description for minimality; exit 1 if not minimal
    CertifyGraph {
        /// File holding one GRAPH{...} description
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    All,
    Knots,
    Sums,
    Slopes,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::All => Suite::All,
            SuiteArg::Knots => Suite::Knots,
            SuiteArg::Sums => Suite::Sums,
            SuiteArg::Slopes => Suite::Slopes,
        }
    }
}

fn load(args: &CensusArgs) -> Result<Census> {
    load_census(&args.manifolds, &args.fillings).map_err(|e| match e {
        CensusError::Rows(rows) => {
            for r in &rows {
                eprintln!("{r}");
            }
            anyhow::anyhow!("{} invalid rows", rows.len())
        }
        other => other.into(),
    })
}

fn stats(census: &Census, json: bool) {
    let table = analytics::type_table(census);
    let hist = analytics::e_histogram(census);
    if json {
        for (label, count) in &table {
            println!("{}", json!({ "table": "type", "label": label, "fillings": count }));
        }
        for (e, count) in &hist {
            println!("{}", json!({ "table": "e_histogram", "e": e, "manifolds": count }));
        }
        return;
    }
    println!("{} manifolds, {} exceptional fillings", census.manifolds.len(), census.fillings.len());
    println!("\ntype                 fillings");
    for (label, count) in &table {
        println!("{:<20} {count:>8}", label.token());
    }
    println!("\ne(M)  manifolds");
    for (e, count) in &hist {
        println!("{e:>4}  {count:>9}");
    }
}

fn check(census: &Census, suite: Suite, json: bool) -> bool {
    let results = analytics::run_suite(census, suite);
    for r in &results {
        if json {
            println!("{}", serde_json::to_string(r).expect("check results serialize"));
        } else {
            let status = if r.passed { "PASS" } else { "FAIL" };
            println!("{status} {:<20} observed {} expected {}", r.check_id, r.observed, r.expected);
            for w in r.witnesses.iter().take(10) {
                println!("     {} {}", w.manifold, w.slope);
            }
            if r.witnesses.len() > 10 {
                println!("     ... {} more", r.witnesses.len() - 10);
            }
        }
    }
    results.iter().all(|r| r.passed)
}

fn slopes(t: &CuspTranslations, bound: f64, json: bool) {
    for s in enumerate_short_slopes(t, bound) {
        let len = slope_length(t, &s);
        if json {
            println!("{}", json!({ "slope": s, "length": len }));
        } else {
            println!("{s}\t{len:.9}");
        }
    }
}

fn normalize(text: &str, json: bool) -> Result<()> {
    let d = parse_description(text).with_context(|| format!("cannot parse {text:?}"))?;
    let norm = d.normalize();
    let class = classify(&norm).context("cannot classify")?;
    let mut out = json!({
        "normalized": norm.to_string(),
        "type": class.label,
        "properties": class.properties,
    });
    if let ManifoldDescription::Seifert(sd) = &norm {
        let e = seifert::euler_number(sd)?;
        let h1 = seifert::first_homology(sd)?;
        let pi1 = seifert::pi1_class(sd)?;
        out["euler_number"] = json!(e.to_string());
        out["h1"] = json!(h1.to_string());
        out["pi1"] = json!(pi1.token());
        let order = match pi1 {
            Pi1Class::FiniteNoncyclic => seifert::spherical_order(sd).ok(),
            Pi1Class::FiniteCyclic => h1.order(),
            Pi1Class::Infinite => None,
        };
        if let Some(o) = order {
            out["pi1_order"] = json!(o.to_string());
        }
    }
    if json {
        println!("{out}");
    } else {
        for (k, v) in out.as_object().expect("object") {
            match v {
                serde_json::Value::String(s) => println!("{k}: {s}"),
                other => println!("{k}: {other}"),
            }
        }
    }
    Ok(())
}

fn certify(file: &PathBuf, json: bool) -> Result<bool> {
    let text = std::fs::read_to_string(file).with_context(|| format!("cannot read {}", file.display()))?;
    let d = parse_description(text.trim()).with_context(|| format!("cannot parse {}", file.display()))?;
    let ManifoldDescription::Graph(g) = d else {
        bail!("{} does not hold a GRAPH{{...}} description", file.display());
    };
    let report = certify_minimal(&g);
    let shape = graph_shape(&g);
    if json {
        println!("{}", json!({ "passed": report.passed(), "report": report, "shape": shape }));
    } else {
        println!("{report}");
        println!("shape: {:?} with {} vertices", shape.kind, shape.vertex_count);
    }
    Ok(report.passed())
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Stats { census, json } => {
            stats(&load(&census)?, json);
            Ok(true)
        }
        Command::Check { census, suite, json } => Ok(check(&load(&census)?, suite.into(), json)),
        Command::Slopes { m_re, m_im, l_re, l_im, bound, json } => {
            if bound.is_nan() || bound <= 0.0 {
                bail!("bound must be positive");
            }
            let t = CuspTranslations::new(Complex64::new(m_re, m_im), Complex64::new(l_re, l_im))?;
            slopes(&t, bound, json);
            Ok(true)
        }
        Command::Normalize { description, json } => normalize(&description, json).map(|_| true),
        Command::CertifyGraph { file, json } => certify(&file, json),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
