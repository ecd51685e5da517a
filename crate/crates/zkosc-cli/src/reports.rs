//! Serializable report documents; every report carries `schema_version`.

use std::collections::BTreeMap;

use serde::Serialize;

use zkosc::fock::{Convention, FockWindow};
use zkosc::schrodinger::{DerivativeSource, Grid, PartnerReport, SpectrumComparison};
use zkosc::shape::{CyclicInfo, SipParams};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Serialize)]
pub struct WindowDoc {
    pub k: usize,
    pub depth: usize,
    pub n0: u64,
    pub convention: Convention,
}

impl From<&FockWindow> for WindowDoc {
    fn from(w: &FockWindow) -> Self {
        Self { k: w.k(), depth: w.depth(), n0: w.n0(), convention: w.convention() }
    }
}

#[derive(Serialize)]
pub struct SpectrumDoc {
    pub schema_version: &'static str,
    pub command: &'static str,
    pub params: SipParams,
    pub n_max: u64,
    pub energies_unified: Vec<f64>,
    pub energies_blocks: Vec<f64>,
    pub energies_structure_diff: Vec<f64>,
    pub level_deviation: Vec<f64>,
    pub max_method_deviation: f64,
    pub monotone: bool,
    pub cyclic: Option<CyclicInfo>,
    pub tolerance: f64,
    pub pass: bool,
}

#[derive(Serialize)]
pub struct AlgebraDoc {
    pub schema_version: &'static str,
    pub command: &'static str,
    pub window: WindowDoc,
    pub residuals: BTreeMap<String, f64>,
    pub boundary_excluded: bool,
    pub tolerance: f64,
    pub pass: bool,
}

#[derive(Serialize)]
pub struct StructureSweepDoc {
    pub schema_version: &'static str,
    pub command: &'static str,
    pub seed: u64,
    pub cases: usize,
    pub max_k: usize,
    pub n_max: u64,
    pub max_structure_deviation: f64,
    pub max_spectrum_deviation: f64,
    pub tolerance: f64,
    pub pass: bool,
}

#[derive(Serialize)]
pub struct ChainDoc {
    pub schema_version: &'static str,
    pub command: &'static str,
    pub steps: usize,
    pub residuals: Vec<f64>,
    pub max_residual: f64,
    pub derivative_source: DerivativeSource,
    pub tolerance: f64,
    pub pass: bool,
}

#[derive(Serialize)]
pub struct SchrodingerDoc {
    pub schema_version: &'static str,
    pub command: &'static str,
    pub family: &'static str,
    pub family_parameter: f64,
    pub grid: Grid,
    pub ceiling: Option<f64>,
    pub comparison: SpectrumComparison,
    pub partner: PartnerReport,
    pub pass: bool,
}

#[derive(Serialize)]
pub struct MatricesDoc {
    pub schema_version: &'static str,
    pub command: &'static str,
    pub window: WindowDoc,
    pub structure_values: Vec<f64>,
    pub number: Vec<Vec<[f64; 2]>>,
    pub annihilation: Vec<Vec<[f64; 2]>>,
    pub creation: Vec<Vec<[f64; 2]>>,
    pub grading: Vec<Vec<[f64; 2]>>,
    pub projectors: Vec<Vec<Vec<[f64; 2]>>>,
}

