//! `belyi`: replay catalog claims, inspect maps and run the full catalog.
//!
//! Exit codes: 0 when every check passes, 1 on a failed check or bad arguments, 2 on schema errors
//! and unreadable or missing entries, 3 when the only failures are numeric precision failures.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use belyi_core::catalog::{
    entry_map, export_builtin, load_dir, load_entry, parse_filter, run_entries, run_entry, CatalogEntry, CurveSpec,
    EntryKind, FieldSpec, Genus1CoverPayload, HpgCheck, HpgPayload, Payload, RunOptions,
};
use belyi_core::monodromy::genus_from_triple;
use belyi_core::{CheckStatus, Error, VerificationReport};

#[derive(Parser)]
#[command(name = "belyi", version, about = "Exact and numeric verification of Belyi maps")]
struct Cli {
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    /// Directory in which entry names are looked up.
    #[arg(long, global = true, default_value = "data")]
    catalog: PathBuf,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Replay every claim of one entry.
    Verify {
        entry: String,
        #[arg(long)]
        numeric: bool,
    },
    /// Print the exact passport of a map entry.
    Passport { entry: String },
    /// Pull a genus-0 entry back along y^n = f and write the resulting entry.
    Compose {
        #[arg(long)]
        genus0: String,
        /// Cover as `n:f`, for example `2:x^3+1`.
        #[arg(long)]
        cover: String,
        /// Name of the new entry; defaults to `<genus0>_on_cover`.
        #[arg(long)]
        name: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// j-invariant of y^n = f, given as `n:f` or `f`.
    J {
        curve: String,
        /// Coefficient field as `generator:minpoly`, for example `r:r^2-2`.
        #[arg(long)]
        field: Option<String>,
    },
    /// Verify an isogeny or coordinate-change entry.
    IsoVerify { entry: String },
    /// Numeric monodromy triple of a map entry.
    Monodromy { entry: String },
    /// Hypergeometric identity checks.
    HpgCheck {
        #[arg(long, default_value_t = 1e-10)]
        tolerance: f64,
    },
    /// Catalog-wide operations.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// Verify every entry in a directory.
    Run {
        dir: PathBuf,
        #[arg(long)]
        numeric: bool,
        /// `key=value` with key one of name, kind, degree, field.
        #[arg(long)]
        filter: Option<String>,
    },
    /// Write the builtin catalog as one JSON file per entry.
    Export { dir: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            if cli.json {
                println!("{}", json!({ "error": e.to_string() }));
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(error_code(&e))
        }
    }
}

fn error_code(e: &Error) -> u8 {
    match e {
        Error::Precision(_) => 3,
        Error::Schema { .. } | Error::Parse { .. } | Error::MissingDependency(_) | Error::Io(_) => 2,
        _ => 1,
    }
}

fn options(numeric: bool) -> Result<RunOptions, Error> {
    let mut opts = RunOptions { numeric, ..Default::default() };
    if let Ok(v) = std::env::var("BELYI_PRECISION") {
        opts.settings.precision =
            v.trim().parse().map_err(|_| Error::InvalidInput(format!("BELYI_PRECISION={v:?} is not a bit count")))?;
        opts.settings.validate().map_err(|e| Error::InvalidInput(format!("BELYI_PRECISION: {e}")))?;
    }
    Ok(opts)
}

/// An existing file path, or an entry name looked up in the catalog directory.
fn find_entry(catalog: &Path, arg: &str) -> Result<CatalogEntry, Error> {
    let p = Path::new(arg);
    if p.is_file() {
        return load_entry(p);
    }
    let file = catalog.join(format!("{arg}.json"));
    if file.is_file() {
        return load_entry(&file);
    }
    Err(Error::MissingDependency(format!("no entry {arg:?} (looked for {})", file.display())))
}

fn exit_code(reports: &[VerificationReport]) -> u8 {
    let failures: Vec<_> = reports.iter().flat_map(|r| r.failures()).collect();
    if failures.is_empty() {
        0
    } else if failures.iter().all(|c| c.detail.starts_with("precision error")) {
        3
    } else {
        1
    }
}

fn print_reports(json_out: bool, reports: &[VerificationReport]) -> Result<(), Error> {
    if json_out {
        println!("{}", serde_json::to_string_pretty(reports).map_err(|e| Error::InvalidInput(e.to_string()))?);
        return Ok(());
    }
    for r in reports {
        print!("{r}");
    }
    if reports.len() > 1 {
        println!();
        println!("{:<32} {:>6} {:>6} {:>8} {:>10}", "entry", "pass", "fail", "skipped", "ms");
        for r in reports {
            println!(
                "{:<32} {:>6} {:>6} {:>8} {:>10.1}",
                r.entry,
                r.count(CheckStatus::Pass),
                r.count(CheckStatus::Fail),
                r.count(CheckStatus::Skipped),
                r.wall_time_ms
            );
        }
        let failed = reports.iter().filter(|r| !r.passed()).count();
        println!("{} entries, {} passed, {failed} failed", reports.len(), reports.len() - failed);
    }
    Ok(())
}

fn parse_curve(s: &str) -> Result<CurveSpec, Error> {
    match s.split_once(':') {
        Some((n, f)) => {
            let n = n.trim().parse().map_err(|_| Error::InvalidInput(format!("cover exponent {n:?} is not an integer")))?;
            Ok(CurveSpec::new(n, f.trim()))
        }
        None => Ok(CurveSpec::new(2, s.trim())),
    }
}

fn parse_field(s: &str) -> Result<FieldSpec, Error> {
    let (g, m) = s.split_once(':').ok_or_else(|| Error::InvalidInput(format!("field {s:?} is not generator:minpoly")))?;
    Ok(FieldSpec { generator: g.trim().into(), minpoly: m.trim().into() })
}

fn run(cli: &Cli) -> Result<u8, Error> {
    match &cli.command {
        Command::Verify { entry, numeric } => {
            let e = find_entry(&cli.catalog, entry)?;
            let r = run_entry(&e, &options(*numeric)?);
            print_reports(cli.json, std::slice::from_ref(&r))?;
            Ok(exit_code(&[r]))
        }
        Command::Passport { entry } => {
            let e = find_entry(&cli.catalog, entry)?;
            let m = entry_map(&e)?;
            if cli.json {
                println!("{}", json!({ "entry": e.name, "passport": m.passport().to_string(), "degree": m.degree() }));
            } else {
                println!("{}", m.passport());
            }
            Ok(0)
        }
        Command::Compose { genus0, cover, name, output } => {
            let g0 = find_entry(&cli.catalog, genus0)?;
            if g0.kind() != EntryKind::Genus0 {
                return Err(Error::InvalidInput(format!("{} is not a genus-0 entry", g0.name)));
            }
            let spec = parse_curve(cover)?;
            let name = name.clone().unwrap_or_else(|| format!("{}_on_cover", g0.name));
            let payload =
                Payload::Genus1Cover(Genus1CoverPayload { genus0: g0.name.clone(), cover: Some(spec.clone()), curve: None, inner: None });
            let mut e = CatalogEntry::new(&name, payload);
            e.field = g0.field.clone();
            e.deps.insert(g0.name.clone(), g0);
            let m = entry_map(&e)?;
            e.expected.passport = Some(m.passport().to_string());
            e.expected.degree = Some(m.degree());
            if let Ok(j) = spec.build(&e.build_field()?).and_then(|c| c.j_invariant()) {
                e.expected.j = Some(j.to_string());
            }
            let text = e.to_json_string();
            match output {
                Some(p) => std::fs::write(p, &text)?,
                None => print!("{text}"),
            }
            Ok(0)
        }
        Command::J { curve, field } => {
            let spec = parse_curve(curve)?;
            let k = match field {
                Some(f) => parse_field(f)?.build()?,
                None => belyi_core::NumberField::rationals(),
            };
            let c = spec.build(&k)?;
            let j = c.j_invariant()?;
            if cli.json {
                println!("{}", json!({ "curve": c.to_string(), "genus": c.genus(), "j": j.to_string() }));
            } else {
                println!("{j}");
            }
            Ok(0)
        }
        Command::IsoVerify { entry } => {
            let e = find_entry(&cli.catalog, entry)?;
            if !matches!(e.kind(), EntryKind::Isogeny | EntryKind::Transformation) {
                return Err(Error::InvalidInput(format!("{} is a {} entry, not an isogeny or transformation", e.name, e.kind())));
            }
            let r = run_entry(&e, &options(false)?);
            print_reports(cli.json, std::slice::from_ref(&r))?;
            Ok(exit_code(&[r]))
        }
        Command::Monodromy { entry } => {
            let e = find_entry(&cli.catalog, entry)?;
            let m = entry_map(&e)?;
            let t = m.triple(&options(true)?.settings)?;
            if cli.json {
                let out = json!({
                    "entry": e.name,
                    "sigma0": t.sigma0.to_string(),
                    "sigma1": t.sigma1.to_string(),
                    "sigma_inf": t.sigma_inf.to_string(),
                    "passport": t.passport().to_string(),
                    "genus": genus_from_triple(&t),
                });
                println!("{out}");
            } else {
                println!("{t}");
                println!("cycle types {}, genus {}", t.passport(), genus_from_triple(&t));
            }
            let agrees = &t.passport() == m.passport();
            if !agrees {
                eprintln!("numeric cycle types differ from the exact passport {}", m.passport());
            }
            Ok(if agrees { 0 } else { 1 })
        }
        Command::HpgCheck { tolerance } => {
            let checks = [
                ("hpg_degree5", HpgPayload { check: HpgCheck::Degree5, m: None, samples: None, seed: None, tolerance: *tolerance }),
                (
                    "hpg_quadrature_m4",
                    HpgPayload { check: HpgCheck::Quadrature, m: Some(4), samples: Some(20), seed: Some(415), tolerance: 1e-9 },
                ),
                (
                    "hpg_quadrature_m6",
                    HpgPayload { check: HpgCheck::Quadrature, m: Some(6), samples: Some(20), seed: Some(416), tolerance: 1e-9 },
                ),
            ];
            let opts = options(true)?;
            let reports: Vec<_> = checks
                .into_iter()
                .map(|(name, p)| run_entry(&CatalogEntry::new(name, Payload::HpgIdentity(p)), &opts))
                .collect();
            print_reports(cli.json, &reports)?;
            Ok(exit_code(&reports))
        }
        Command::Catalog { action: CatalogAction::Run { dir, numeric, filter } } => {
            let filter = filter.as_deref().map(parse_filter).transpose()?;
            let entries = load_dir(dir)?;
            let reports = run_entries(&entries, filter.as_ref(), &options(*numeric)?);
            print_reports(cli.json, &reports)?;
            Ok(exit_code(&reports))
        }
        Command::Catalog { action: CatalogAction::Export { dir } } => {
            let n = export_builtin(dir)?;
            if cli.json {
                println!("{}", json!({ "written": n, "dir": dir.display().to_string() }));
            } else {
                println!("wrote {n} entries to {}", dir.display());
            }
            Ok(0)
        }
    }
}
