//! The demo operations as plain string-in string-out functions.

use serde::{Deserialize, Serialize};

use zkosc::schrodinger::{compare_spectra, eigensolve, sample_family, Family, Grid};
use zkosc::shape::{relative_deviation, CyclicInfo, SipParams, SpectrumMethod};

#[derive(Deserialize)]
struct ParamsDoc {
    k: usize,
    sigma: Vec<f64>,
    omega: Vec<f64>,
    a0: f64,
    delta: f64,
    #[serde(default)]
    n0: Option<u64>,
    #[serde(default)]
    c0: f64,
}

fn parse_params(params_json: &str) -> Result<SipParams, String> {
    let doc: ParamsDoc = serde_json::from_str(params_json).map_err(|e| format!("bad params: {e}"))?;
    SipParams::new(doc.k, doc.sigma, doc.omega, doc.a0, doc.delta, doc.n0.unwrap_or(256), doc.c0)
        .map_err(|e| e.to_string())
}

fn to_json<T: Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_string(value).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct SpectrumOut {
    energies_unified: Vec<f64>,
    energies_blocks: Vec<f64>,
    energies_structure_diff: Vec<f64>,
    max_method_deviation: f64,
    monotone: bool,
    cyclic: Option<CyclicInfo>,
    c_constant: f64,
}

pub fn spectrum_report(params_json: &str, n_max: u32) -> Result<String, String> {
    let p = parse_params(params_json)?;
    let n_max = n_max as u64;
    let unified = p.energy_spectrum(n_max, SpectrumMethod::UnifiedSum);
    let blocks = p.energy_spectrum(n_max, SpectrumMethod::Blocks);
    let diff = p.energy_spectrum(n_max, SpectrumMethod::StructureDiff);
    let mut max_dev = 0.0f64;
    for n in 0..unified.energies.len() {
        max_dev = max_dev
            .max(relative_deviation(unified.energies[n], blocks.energies[n]))
            .max(relative_deviation(unified.energies[n], diff.energies[n]));
    }
    to_json(&SpectrumOut {
        energies_blocks: blocks.energies,
        energies_structure_diff: diff.energies,
        max_method_deviation: max_dev,
        monotone: unified.monotone,
        cyclic: unified.cyclic,
        c_constant: p.c_constant(),
        energies_unified: unified.energies,
    })
}

#[derive(Serialize)]
struct StructureOut {
    levels: Vec<u64>,
    closed: Vec<f64>,
    recursive: Vec<f64>,
    remainders: Vec<f64>,
    max_deviation: f64,
    suggested_c0: f64,
}

pub fn structure_table(params_json: &str, n_max: u32) -> Result<String, String> {
    let p = parse_params(params_json)?;
    let n_max = n_max as u64;
    let closed = p.structure_table_closed(n_max);
    let recursive = p.structure_recursive(n_max);
    let max_deviation = closed
        .values
        .iter()
        .zip(recursive.values.iter())
        .map(|(a, b)| relative_deviation(*a, *b))
        .fold(0.0, f64::max);
    to_json(&StructureOut {
        levels: (0..=n_max).collect(),
        remainders: (0..n_max).map(|n| p.unified_remainder(n)).collect(),
        suggested_c0: p.choose_c0(n_max, 0.5),
        max_deviation,
        closed: closed.values,
        recursive: recursive.values,
    })
}

#[derive(Serialize)]
struct SchrodingerOut {
    xs: Vec<f64>,
    v_minus: Vec<f64>,
    v_plus: Vec<f64>,
    numeric: Vec<f64>,
    algebraic: Vec<f64>,
    excluded: Vec<bool>,
    max_compared_difference: f64,
    ceiling: Option<f64>,
}

pub fn schrodinger_panel(
    family: &str,
    parameter: f64,
    x_min: f64,
    x_max: f64,
    points: u32,
    levels: u32,
) -> Result<String, String> {
    let fam = match family {
        "harmonic" => Family::Harmonic(parameter),
        "pt1" => Family::PoschlTellerI(parameter),
        "pt2" => Family::PoschlTellerII(parameter),
        other => return Err(format!("unknown family `{other}`")),
    };
    let grid = Grid::new(x_min, x_max, points as usize).map_err(|e| e.to_string())?;
    let samples = sample_family(&fam, &grid).map_err(|e| e.to_string())?;
    let count = (levels as usize + 1).min(grid.points / 4);
    let numeric = eigensolve(&samples.v_minus, count).map_err(|e| e.to_string())?;
    let algebraic = fam.algebraic_params().energy_spectrum(levels as u64, SpectrumMethod::UnifiedSum);
    let comparison =
        compare_spectra(&numeric, &algebraic, fam.continuum_ceiling(), 1e-2).map_err(|e| e.to_string())?;
    let max_compared_difference = comparison
        .levels
        .iter()
        .filter(|l| !l.excluded && l.numeric.is_finite())
        .map(|l| l.abs_difference)
        .fold(0.0, f64::max);
    to_json(&SchrodingerOut {
        xs: grid.xs(),
        v_minus: samples.v_minus.values.clone(),
        v_plus: samples.v_plus.values.clone(),
        numeric: numeric.eigenvalues,
        algebraic: algebraic.energies,
        excluded: comparison.levels.iter().map(|l| l.excluded).collect(),
        max_compared_difference,
        ceiling: fam.continuum_ceiling(),
    })
}
