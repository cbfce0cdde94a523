use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};
use maxhilb::verify::Suite;
use maxhilb::{
    catalog, consistency_check, hilb2_verdict, hilb_betti_series_with_budget, parse_profile, render_profile,
    run_catalog_filtered, Error, SurfaceProfile,
};

mod render;

use render::Out;

#[derive(Parser)]
#[command(name = "maxhilb", version, about = "Smith-Thom maximality of real surfaces and their Hilbert squares")]
struct Cli {
    /// Output format: aligned text or one JSON record per line.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Records,
}

#[derive(Subcommand)]
enum Command {
    /// Smith defect, Comessatti and Hodge checks for a profile.
    Analyze { file: PathBuf },
    /// Betti numbers and maximality verdict for the Hilbert square.
    Hilb2 { file: PathBuf },
    /// Betti numbers of X^[n] for n <= nmax from the Betti numbers of X.
    Goettsche {
        /// b0,b1,b2,b3,b4
        #[arg(long, value_delimiter = ',', required = true)]
        betti: Vec<u64>,
        #[arg(long)]
        nmax: usize,
        /// Maximum number of coefficients to compute.
        #[arg(long, default_value_t = maxhilb::goettsche::DEFAULT_COEFF_BUDGET)]
        budget: u64,
    },
    /// Run oracle suites on explicit triangulations and formula grids.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
    /// Check computed verdicts against the built-in examples.
    Catalog {
        /// Only entries whose name contains this string.
        #[arg(long)]
        filter: Option<String>,
    },
    /// Write every catalog profile to `<dir>/<name>.profile`.
    ExportCatalog { dir: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Smith,
    Symsq,
    Identities,
    All,
}

impl SuiteArg {
    fn suites(self) -> Vec<Suite> {
        match self {
            SuiteArg::Smith => vec![Suite::Smith],
            SuiteArg::Symsq => vec![Suite::Symsq],
            SuiteArg::Identities => vec![Suite::Identities],
            SuiteArg::All => Suite::ALL.to_vec(),
        }
    }
}

/// Why a command did not succeed.
enum Failure {
    /// Bad file, profile or arguments: exit 2.
    Input(anyhow::Error),
    /// A disagreement, failed check or internal error: exit 1.
    Failed(Option<anyhow::Error>),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(_) => Failure::Failed(Some(e.into())),
            _ => Failure::Input(e.into()),
        }
    }
}

type CmdResult = Result<(), Failure>;

fn load(path: &Path) -> Result<SurfaceProfile, Failure> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))
        .map_err(Failure::Input)?;
    parse_profile(&text).map_err(|e| Failure::Input(anyhow!("{}: {e}", path.display())))
}

fn analyze(out: &mut Out, file: &Path) -> CmdResult {
    let profile = load(file)?;
    let report = consistency_check(&profile)?;
    out.analyze(&profile, &report);
    Ok(())
}

fn hilb2(out: &mut Out, file: &Path) -> CmdResult {
    let profile = load(file)?;
    consistency_check(&profile)?;
    let report = hilb2_verdict(&profile)?;
    out.hilb2(&profile, &report);
    Ok(())
}

fn goettsche(out: &mut Out, betti: &[u64], nmax: usize, budget: u64) -> CmdResult {
    let b: [u64; 5] = betti.try_into().map_err(|_| Failure::Input(anyhow!("--betti: expected 5 values")))?;
    if b[0] != b[4] || b[1] != b[3] {
        return Err(Failure::Input(anyhow!("--betti: Poincare duality needs b0 = b4 and b1 = b3")));
    }
    let series = hilb_betti_series_with_budget(b, nmax, budget)?;
    out.goettsche(&series);
    Ok(())
}

fn verify(out: &mut Out, suite: SuiteArg) -> CmdResult {
    let suites = suite.suites();
    let results: Vec<_> = std::thread::scope(|s| {
        let handles: Vec<_> = suites.iter().map(|&suite| s.spawn(move || suite.run())).collect();
        handles.into_iter().map(|h| h.join().expect("verification suite panicked")).collect()
    });
    let mut all_passed = true;
    for (suite, checks) in suites.iter().zip(&results) {
        all_passed &= checks.iter().all(|c| c.passed);
        out.checks(suite.name(), checks);
    }
    out.verify_summary(results.iter().flatten().filter(|c| c.passed).count(), results.iter().map(Vec::len).sum());
    if all_passed {
        Ok(())
    } else {
        Err(Failure::Failed(None))
    }
}

fn catalog_cmd(out: &mut Out, filter: Option<&str>) -> CmdResult {
    let outcomes = run_catalog_filtered(filter);
    if outcomes.is_empty() {
        return Err(Failure::Input(anyhow!("--filter: no catalog entry matches {:?}", filter.unwrap_or(""))));
    }
    out.catalog(&outcomes);
    if outcomes.iter().all(|o| o.agrees) {
        Ok(())
    } else {
        Err(Failure::Failed(None))
    }
}

fn export_catalog(out: &mut Out, dir: &Path) -> CmdResult {
    let input = |e: std::io::Error, what: &Path| Failure::Input(anyhow!("cannot write {}: {e}", what.display()));
    fs::create_dir_all(dir).map_err(|e| input(e, dir))?;
    for entry in catalog() {
        let path = dir.join(format!("{}.profile", entry.profile.name));
        let mut text = format!("# {}\n# expected: {}\n", entry.description, entry.expected.decision);
        text.push_str(&render_profile(&entry.profile));
        fs::write(&path, text).map_err(|e| input(e, &path))?;
        out.exported(&entry.profile.name, &path);
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = Out::new(cli.format);
    let result = match &cli.command {
        Command::Analyze { file } => analyze(&mut out, file),
        Command::Hilb2 { file } => hilb2(&mut out, file),
        Command::Goettsche { betti, nmax, budget } => goettsche(&mut out, betti, *nmax, *budget),
        Command::Verify { suite } => verify(&mut out, *suite),
        Command::Catalog { filter } => catalog_cmd(&mut out, filter.as_deref()),
        Command::ExportCatalog { dir } => export_catalog(&mut out, dir),
    };
    out.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Failed(err)) => {
            if let Some(e) = err {
                eprintln!("error: {e:#}");
            }
            ExitCode::from(1)
        }
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
