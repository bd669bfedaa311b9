//! `negk`: compute K_{-1}(Z[G]) for single groups and scan group catalogs.

mod report;

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use negk_core::scan::{format_latex, format_tsv, missing_orders};
use negk_core::{k_minus_one, k_minus_one_text, minimal_s, scan, verify_catalog, Catalog, GroupSpec, ScanFilter};

/// Exact K_{-1}(Z[G]) = Z^r + (Z/2)^s for finite groups.
#[derive(Parser)]
#[command(name = "negk", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute r and s for one group.
    Compute {
        /// Family expression (`Dicyclic(6)`), catalog key (`(16,9)`) or
        /// generator list (`[(1,2,3),(1,2)]`).
        spec: String,
        /// Print one TSV row per simple component of QG.
        #[arg(long)]
        emit_components: bool,
        /// Print the character table as TSV.
        #[arg(long)]
        emit_chartab: bool,
        /// Catalog file or directory for catalog keys.
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
    /// Tabulate r and s over the catalog groups of an order range.
    Scan {
        #[arg(long)]
        min: usize,
        #[arg(long)]
        max: usize,
        /// Keep only groups with s > 0.
        #[arg(long)]
        s_positive: bool,
        #[arg(long)]
        catalog: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
        /// Worker threads (default: all cores).
        #[arg(long)]
        jobs: Option<usize>,
        /// Add a per-group wall-clock column (TSV only).
        #[arg(long)]
        timings: bool,
    },
    /// Groups with s > 0 none of whose proper quotients has s > 0.
    MinimalS {
        #[arg(long)]
        max: usize,
        #[arg(long)]
        catalog: Option<PathBuf>,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Run the invariant suite over a catalog.
    Verify {
        #[arg(long)]
        catalog: Option<PathBuf>,
        /// Only verify groups up to this order.
        #[arg(long, default_value_t = usize::MAX)]
        max_order: usize,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Tsv,
    Latex,
}

macro_rules! outln {
    ($out:expr, $($arg:tt)*) => {{
        let _ = writeln!($out, $($arg)*);
    }};
}

/// `--catalog`, else `$NEGK_CATALOG_DIR`, else the catalog directory of the
/// source tree.
fn catalog_path(explicit: Option<&Path>) -> PathBuf {
    if let Some(p) = explicit {
        return p.to_path_buf();
    }
    if let Some(dir) = std::env::var_os("NEGK_CATALOG_DIR") {
        return PathBuf::from(dir);
    }
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../catalog")
}

fn load_catalog(explicit: Option<&Path>) -> Result<Catalog> {
    let path = catalog_path(explicit);
    Catalog::load(&path).with_context(|| format!("loading catalog {}", path.display()))
}

fn jobs_or_default(jobs: Option<usize>) -> usize {
    jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

/// Returns the exit code for a successful run (verify reports failures
/// with 1).
fn run(cli: Cli, out: &mut String) -> Result<u8> {
    match cli.command {
        Command::Compute { spec, emit_components, emit_chartab, catalog } => {
            let parsed = GroupSpec::parse(&spec)?;
            let cat = match parsed {
                GroupSpec::CatalogKey { .. } => Some(load_catalog(catalog.as_deref())?),
                _ => None,
            };
            let g = parsed.resolve(cat.as_ref())?;
            let res = k_minus_one(&g)?;
            outln!(out, "r={} s={} K-1 = {}", res.r, res.s, k_minus_one_text(res.r, res.s));
            if emit_components {
                out.push_str(&report::components_tsv(&res));
            }
            if emit_chartab {
                out.push_str(&report::chartab_tsv(&g)?);
            }
            Ok(0)
        }
        Command::Scan { min, max, s_positive, catalog, format, jobs, timings } => {
            let cat = load_catalog(catalog.as_deref())?;
            let missing = missing_orders(&cat, min, max);
            if !missing.is_empty() {
                eprintln!("note: catalog has no groups of order {}", report::ranges(&missing));
            }
            let filter = if s_positive { ScanFilter::SPositive } else { ScanFilter::All };
            let rows = scan(&cat, min, max, filter, jobs_or_default(jobs))?;
            match format {
                Format::Tsv => out.push_str(&format_tsv(&rows, timings)),
                Format::Latex => out.push_str(&format_latex(&rows)),
            }
            Ok(0)
        }
        Command::MinimalS { max, catalog, jobs } => {
            let cat = load_catalog(catalog.as_deref())?;
            let rows = minimal_s(&cat, max, jobs_or_default(jobs))?;
            outln!(out, "order\tindex\tname\ts");
            for r in rows {
                outln!(out, "{}\t{}\t{}\t{}", r.order, r.index, r.name, r.s);
            }
            Ok(0)
        }
        Command::Verify { catalog, max_order, jobs } => {
            let cat = load_catalog(catalog.as_deref())?;
            let rep = verify_catalog(&cat, max_order, jobs_or_default(jobs))?;
            for f in &rep.failures {
                outln!(out, "FAIL\t{}\t{}\t{}", f.group, f.check, f.detail);
            }
            outln!(out, "verified {} groups: {} checks, {} failures", rep.groups, rep.checks, rep.failures.len());
            Ok(if rep.passed() { 0 } else { 1 })
        }
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<negk_core::Error>() {
        Some(negk_core::Error::Unsupported(_)) => 3,
        Some(negk_core::Error::Parse(_) | negk_core::Error::Argument(_) | negk_core::Error::SizeLimit { .. }) => 2,
        _ => 1,
    }
}

/// Write the buffered output; a closed pipe is not an error.
fn flush(out: &str) -> bool {
    let mut stdout = std::io::stdout().lock();
    match stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()) {
        Ok(()) => true,
        Err(e) => e.kind() == std::io::ErrorKind::BrokenPipe,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let res = run(cli, &mut out);
    if !flush(&out) {
        return ExitCode::from(1);
    }
    match res {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
