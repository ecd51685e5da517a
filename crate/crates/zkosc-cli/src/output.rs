//! Report rendering. JSON is compact serde output; CSV and table fix floats
//! to 17 significant digits so identical runs are byte-identical.

use anyhow::Result;
use clap::ValueEnum;
use serde::Serialize;

use crate::reports::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Table,
}

/// 17 significant digits: enough to round-trip any f64.
fn sig17(v: f64) -> String {
    format!("{v:.16e}")
}

fn print_json<T: Serialize>(doc: &T) -> Result<()> {
    println!("{}", serde_json::to_string(doc)?);
    Ok(())
}

pub fn render_spectrum(doc: &SpectrumDoc, format: OutputFormat) -> Result<()> {
    match format {
        OutputFormat::Json => print_json(doc),
        OutputFormat::Csv => {
            println!("# schema_version {}", doc.schema_version);
            println!("n,E_unified,E_blocks,E_structdiff,max_dev");
            for n in 0..doc.energies_unified.len() {
                println!(
                    "{},{},{},{},{}",
                    n,
                    sig17(doc.energies_unified[n]),
                    sig17(doc.energies_blocks[n]),
                    sig17(doc.energies_structure_diff[n]),
                    sig17(doc.level_deviation[n]),
                );
            }
            Ok(())
        }
        OutputFormat::Table => {
            println!("spectrum (schema_version {})", doc.schema_version);
            println!("{:>4}  {:>24}  {:>24}  {:>24}  {:>12}", "n", "E_unified", "E_blocks", "E_structdiff", "max_dev");
            for n in 0..doc.energies_unified.len() {
                println!(
                    "{:>4}  {:>24}  {:>24}  {:>24}  {:>12.3e}",
                    n,
                    sig17(doc.energies_unified[n]),
                    sig17(doc.energies_blocks[n]),
                    sig17(doc.energies_structure_diff[n]),
                    doc.level_deviation[n],
                );
            }
            println!(
                "max method deviation {:.3e} (tolerance {:.3e}) -> {}",
                doc.max_method_deviation,
                doc.tolerance,
                verdict(doc.pass)
            );
            Ok(())
        }
    }
}

pub fn render_algebra(doc: &AlgebraDoc, format: OutputFormat) -> Result<()> {
    match format {
        OutputFormat::Json => print_json(doc),
        OutputFormat::Csv => {
            println!("# schema_version {}", doc.schema_version);
            println!("relation,residual");
            for (name, value) in &doc.residuals {
                println!("{name},{}", sig17(*value));
            }
            Ok(())
        }
        OutputFormat::Table => {
            println!(
                "verify-algebra (schema_version {}) on k={} depth={} n0={} window (boundary excluded: {})",
                doc.schema_version, doc.window.k, doc.window.depth, doc.window.n0, doc.boundary_excluded
            );
            for (name, value) in &doc.residuals {
                println!("{name:>28}  {value:>12.3e}");
            }
            println!("tolerance {:.3e} -> {}", doc.tolerance, verdict(doc.pass));
            Ok(())
        }
    }
}

pub fn render_structure_sweep(doc: &StructureSweepDoc, format: OutputFormat) -> Result<()> {
    match format {
        OutputFormat::Json => print_json(doc),
        OutputFormat::Csv => {
            println!("# schema_version {}", doc.schema_version);
            println!("metric,value");
            println!("seed,{}", doc.seed);
            println!("cases,{}", doc.cases);
            println!("max_k,{}", doc.max_k);
            println!("n_max,{}", doc.n_max);
            println!("max_structure_deviation,{}", sig17(doc.max_structure_deviation));
            println!("max_spectrum_deviation,{}", sig17(doc.max_spectrum_deviation));
            Ok(())
        }
        OutputFormat::Table => {
            println!(
                "verify-structure (schema_version {}): {} cases, k <= {}, n <= {}, seed {}",
                doc.schema_version, doc.cases, doc.max_k, doc.n_max, doc.seed
            );
            println!("  closed vs recursive max deviation {:.3e}", doc.max_structure_deviation);
            println!("  cross-method spectrum max deviation {:.3e}", doc.max_spectrum_deviation);
            println!("tolerance {:.3e} -> {}", doc.tolerance, verdict(doc.pass));
            Ok(())
        }
    }
}

pub fn render_chain(doc: &ChainDoc, format: OutputFormat) -> Result<()> {
    match format {
        OutputFormat::Json => print_json(doc),
        OutputFormat::Csv => {
            println!("# schema_version {}", doc.schema_version);
            println!("relation,residual");
            for (s, r) in doc.residuals.iter().enumerate() {
                println!("{s},{}", sig17(*r));
            }
            Ok(())
        }
        OutputFormat::Table => {
            println!(
                "verify-chain (schema_version {}): {} relations, derivatives {:?}",
                doc.schema_version, doc.steps, doc.derivative_source
            );
            for (s, r) in doc.residuals.iter().enumerate() {
                println!("  relation {s}: max residual {r:.3e}");
            }
            println!("tolerance {:.3e} -> {}", doc.tolerance, verdict(doc.pass));
            Ok(())
        }
    }
}

pub fn render_schrodinger(doc: &SchrodingerDoc, format: OutputFormat) -> Result<()> {
    match format {
        OutputFormat::Json => print_json(doc),
        OutputFormat::Csv => {
            println!("# schema_version {}", doc.schema_version);
            println!("n,numeric,algebraic,abs_diff,excluded");
            for level in &doc.comparison.levels {
                println!(
                    "{},{},{},{},{}",
                    level.n,
                    sig17(level.numeric),
                    sig17(level.algebraic),
                    sig17(level.abs_difference),
                    level.excluded,
                );
            }
            Ok(())
        }
        OutputFormat::Table => {
            println!(
                "schrodinger (schema_version {}): {} (parameter {}) on [{}, {}] x {}",
                doc.schema_version, doc.family, doc.family_parameter, doc.grid.x_min, doc.grid.x_max, doc.grid.points
            );
            println!("{:>4}  {:>18}  {:>18}  {:>12}  {:>8}", "n", "numeric", "algebraic", "abs_diff", "excluded");
            for level in &doc.comparison.levels {
                println!(
                    "{:>4}  {:>18.12}  {:>18.12}  {:>12.3e}  {:>8}",
                    level.n, level.numeric, level.algebraic, level.abs_difference, level.excluded
                );
            }
            println!(
                "partner isospectrality (ground dropped: {}): max |diff| {:.3e} (tol {:.3e})",
                doc.partner.dropped_ground,
                doc.partner.differences.iter().fold(0.0f64, |a, d| a.max(d.abs())),
                doc.partner.tolerance
            );
            println!("tolerance {:.3e} -> {}", doc.comparison.tolerance, verdict(doc.pass));
            Ok(())
        }
    }
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}
