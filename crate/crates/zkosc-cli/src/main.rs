//! `zkosc` — spectra, algebra verification and matrix export for k-step
//! shape invariant potentials on the Z_k-graded deformed oscillator.
//!
//! Exit codes: 0 all checks pass, 1 a check failed, 2 input or config error.

mod output;
mod reports;

use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use zkosc::fock::{Convention, FockWindow};
use zkosc::schrodinger::{
    compare_spectra, eigensolve, sample_family, verify_chain, verify_partners, ChainSpec, Family, Grid,
};
use zkosc::shape::{SipParams, SpectrumMethod};
use zkosc::sweep;
use zkosc::AlgebraOps;

use output::OutputFormat;
use reports::*;

#[derive(Parser)]
#[command(name = "zkosc", version, about = "k-step shape invariant potentials as a Z_k-graded deformed oscillator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    output: OutputFormat,
    /// Tolerance override; falls back to ZKOSC_TOL, then per-command defaults.
    #[arg(long, global = true)]
    tol: Option<f64>,
}

#[derive(Subcommand)]
enum Command {
    /// Energies E_0..E_n_max by all three routes plus their cross deviation.
    Spectrum {
        /// Parameter file (JSON).
        #[arg(long)]
        params: PathBuf,
        /// Level count override (defaults to the file's n_max, then 10).
        #[arg(long)]
        n_max: Option<u64>,
    },
    /// Verify the graded oscillator relations on a Fock window built from a
    /// parameter file.
    VerifyAlgebra {
        #[arg(long)]
        params: PathBuf,
        /// Window depth (number of basis states).
        #[arg(long, default_value_t = 16)]
        depth: usize,
    },
    /// Closed-form vs recursive structure function over a seeded random sweep.
    VerifyStructure {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        cases: usize,
        #[arg(long, default_value_t = 5)]
        max_k: usize,
        #[arg(long, default_value_t = 200)]
        n_max: u64,
    },
    /// Pointwise residuals of a sampled k-step superpotential chain.
    VerifyChain {
        /// Chain document (JSON): grid, sampled superpotentials, remainders.
        #[arg(long)]
        params: PathBuf,
    },
    /// Finite-difference spectrum of a built-in family vs the algebraic one.
    Schrodinger {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Family parameter (omega for harmonic, A for Pöschl-Teller).
        #[arg(long)]
        family_param: Option<f64>,
        /// Grid as `xmin,xmax,points`; defaults to a family-specific grid.
        #[arg(long)]
        grid: Option<String>,
        /// Optional parameter file overriding the canonical one-step record.
        #[arg(long)]
        params: Option<PathBuf>,
        /// Number of levels to compare.
        #[arg(long, default_value_t = 3)]
        n_max: u64,
    },
    /// Dump the operator matrices N, a, a†, T, Π_s on a window (JSON only).
    Matrices {
        #[arg(long)]
        params: PathBuf,
        #[arg(long, default_value_t = 8)]
        depth: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    /// W = (omega/2) x
    Harmonic,
    /// W = A tan x  (Pöschl-Teller I)
    Pt1,
    /// W = A tanh x (Pöschl-Teller II)
    Pt2,
}

impl FamilyArg {
    fn build(self, parameter: Option<f64>) -> Family {
        match self {
            FamilyArg::Harmonic => Family::Harmonic(parameter.unwrap_or(2.0)),
            FamilyArg::Pt1 => Family::PoschlTellerI(parameter.unwrap_or(1.0)),
            FamilyArg::Pt2 => Family::PoschlTellerII(parameter.unwrap_or(3.0)),
        }
    }

    fn default_tolerance(self) -> f64 {
        match self {
            FamilyArg::Harmonic => 1e-3,
            FamilyArg::Pt1 => 2e-2,
            FamilyArg::Pt2 => 1e-2,
        }
    }

    fn partner_tolerance(self) -> f64 {
        match self {
            FamilyArg::Harmonic => 1e-3,
            FamilyArg::Pt1 => 5e-3,
            FamilyArg::Pt2 => 1e-3,
        }
    }
}

/// One canonical parameter record mirroring SipParams, plus an optional
/// default level count.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ParamsFile {
    k: usize,
    sigma: Vec<f64>,
    omega: Vec<f64>,
    a0: f64,
    delta: f64,
    n0: u64,
    #[serde(default)]
    c0: f64,
    #[serde(default)]
    n_max: Option<u64>,
}

impl ParamsFile {
    fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading parameter file {}", path.display()))?;
        serde_json::from_str(&text).with_context(|| format!("parsing parameter file {}", path.display()))
    }

    fn build(&self) -> Result<SipParams> {
        SipParams::new(
            self.k,
            self.sigma.clone(),
            self.omega.clone(),
            self.a0,
            self.delta,
            self.n0,
            self.c0,
        )
        .context("validating shape-invariance parameters")
    }
}

fn parse_grid(text: &str) -> Result<Grid> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 3 {
        bail!("grid must be `xmin,xmax,points`, got `{text}`");
    }
    let x_min: f64 = parts[0].trim().parse().context("grid xmin")?;
    let x_max: f64 = parts[1].trim().parse().context("grid xmax")?;
    let points: usize = parts[2].trim().parse().context("grid points")?;
    Ok(Grid::new(x_min, x_max, points)?)
}

fn resolve_tolerance(flag: Option<f64>, default: f64) -> Result<f64> {
    if let Some(t) = flag {
        return Ok(t);
    }
    if let Ok(text) = std::env::var("ZKOSC_TOL") {
        let t: f64 = text
            .trim()
            .parse()
            .with_context(|| format!("parsing ZKOSC_TOL = `{text}`"))?;
        return Ok(t);
    }
    Ok(default)
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => {}
        Ok(false) => std::process::exit(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            std::process::exit(2);
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Spectrum { ref params, n_max } => {
            let file = ParamsFile::load(params)?;
            let p = file.build()?;
            let n_max = n_max.or(file.n_max).unwrap_or(10);
            let tol = resolve_tolerance(cli.tol, zkosc::DEFAULT_TOLERANCE)?;
            let doc = spectrum_doc(&p, n_max, tol);
            let pass = doc.pass;
            output::render_spectrum(&doc, cli.output)?;
            Ok(pass)
        }
        Command::VerifyAlgebra { ref params, depth } => {
            let p = ParamsFile::load(params)?.build()?;
            let tol = resolve_tolerance(cli.tol, zkosc::DEFAULT_TOLERANCE)?;
            let window = FockWindow::new(p.k(), depth, p.n0(), Convention::Descending)?;
            let f = p.structure_as_fn_pinned(&window)?;
            let report = zkosc::check_algebra(&window, &f, tol)?;
            let doc = AlgebraDoc {
                schema_version: SCHEMA_VERSION,
                command: "verify-algebra",
                window: WindowDoc::from(&window),
                residuals: report.residuals.clone(),
                boundary_excluded: report.boundary_excluded,
                tolerance: report.tolerance,
                pass: report.pass,
            };
            output::render_algebra(&doc, cli.output)?;
            Ok(doc.pass)
        }
        Command::VerifyStructure { seed, cases, max_k, n_max } => {
            let tol = resolve_tolerance(cli.tol, 1e-9)?;
            let report = sweep::run_structure_sweep(seed, cases, max_k, n_max, tol);
            let doc = StructureSweepDoc {
                schema_version: SCHEMA_VERSION,
                command: "verify-structure",
                seed: report.seed,
                cases: report.cases,
                max_k: report.max_k,
                n_max: report.n_max,
                max_structure_deviation: report.max_structure_deviation,
                max_spectrum_deviation: report.max_spectrum_deviation,
                tolerance: report.tolerance,
                pass: report.pass,
            };
            output::render_structure_sweep(&doc, cli.output)?;
            Ok(doc.pass)
        }
        Command::VerifyChain { ref params } => {
            let text = std::fs::read_to_string(params)
                .with_context(|| format!("reading chain file {}", params.display()))?;
            let chain: ChainSpec =
                serde_json::from_str(&text).with_context(|| format!("parsing chain file {}", params.display()))?;
            let tol = resolve_tolerance(cli.tol, 1e-8)?;
            let report = verify_chain(&chain, tol)?;
            let doc = ChainDoc {
                schema_version: SCHEMA_VERSION,
                command: "verify-chain",
                steps: report.residuals.len(),
                residuals: report.residuals.clone(),
                max_residual: report.max_residual,
                derivative_source: report.derivative_source,
                tolerance: report.tolerance,
                pass: report.pass,
            };
            output::render_chain(&doc, cli.output)?;
            Ok(doc.pass)
        }
        Command::Schrodinger { family, family_param, ref grid, ref params, n_max } => {
            let fam = family.build(family_param);
            let grid = match grid {
                Some(text) => parse_grid(text)?,
                None => fam.default_grid(),
            };
            let algebraic = match params {
                Some(path) => ParamsFile::load(path)?.build()?,
                None => fam.algebraic_params(),
            };
            let tol = resolve_tolerance(cli.tol, family.default_tolerance())?;
            let samples = sample_family(&fam, &grid)?;
            let count = (n_max as usize + 1).min(grid.points / 4);
            let numeric = eigensolve(&samples.v_minus, count)?;
            let spectrum = algebraic.energy_spectrum(n_max, SpectrumMethod::UnifiedSum);
            let comparison = compare_spectra(&numeric, &spectrum, fam.continuum_ceiling(), tol)?;
            let partner_levels = count.saturating_sub(1).clamp(1, 2);
            let partner =
                verify_partners(&samples.w, &samples.w_prime, &grid, partner_levels, family.partner_tolerance())?;
            let pass = comparison.pass && partner.pass;
            let doc = SchrodingerDoc {
                schema_version: SCHEMA_VERSION,
                command: "schrodinger",
                family: fam.tag(),
                family_parameter: fam.parameter(),
                grid,
                ceiling: fam.continuum_ceiling(),
                comparison,
                partner,
                pass,
            };
            output::render_schrodinger(&doc, cli.output)?;
            Ok(pass)
        }
        Command::Matrices { ref params, depth } => {
            if cli.output != OutputFormat::Json {
                bail!("matrices are exported as JSON only");
            }
            let p = ParamsFile::load(params)?.build()?;
            let window = FockWindow::new(p.k(), depth, p.n0(), Convention::Descending)?;
            let f = p.structure_as_fn_pinned(&window)?;
            let ops = AlgebraOps::build(&window, &f)?;
            let doc = MatricesDoc {
                schema_version: SCHEMA_VERSION,
                command: "matrices",
                window: WindowDoc::from(&window),
                structure_values: (0..window.depth()).map(|j| f.eval(window.nu_f64(j))).collect(),
                number: ops.number.entries_re_im(),
                annihilation: ops.annihilation.entries_re_im(),
                creation: ops.creation.entries_re_im(),
                grading: ops.grading.entries_re_im(),
                projectors: ops.projectors.iter().map(|p| p.entries_re_im()).collect(),
            };
            println!("{}", serde_json::to_string(&doc)?);
            Ok(true)
        }
    }
}

fn spectrum_doc(p: &SipParams, n_max: u64, tol: f64) -> SpectrumDoc {
    let unified = p.energy_spectrum(n_max, SpectrumMethod::UnifiedSum);
    let blocks = p.energy_spectrum(n_max, SpectrumMethod::Blocks);
    let diff = p.energy_spectrum(n_max, SpectrumMethod::StructureDiff);
    let mut max_dev = 0.0f64;
    let mut per_level = Vec::with_capacity(unified.energies.len());
    for n in 0..unified.energies.len() {
        let (a, b, c) = (unified.energies[n], blocks.energies[n], diff.energies[n]);
        let dev = zkosc::shape::relative_deviation(a, b)
            .max(zkosc::shape::relative_deviation(a, c))
            .max(zkosc::shape::relative_deviation(b, c));
        per_level.push(dev);
        max_dev = max_dev.max(dev);
    }
    SpectrumDoc {
        schema_version: SCHEMA_VERSION,
        command: "spectrum",
        params: p.clone(),
        n_max,
        energies_unified: unified.energies,
        energies_blocks: blocks.energies,
        energies_structure_diff: diff.energies,
        level_deviation: per_level,
        max_method_deviation: max_dev,
        monotone: unified.monotone,
        cyclic: unified.cyclic,
        tolerance: tol,
        pass: max_dev <= tol,
    }
}
