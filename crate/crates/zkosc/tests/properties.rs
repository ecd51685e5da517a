//! Random-family property tests for the shape-invariance machinery.

use proptest::prelude::*;

use zkosc::algebra::AlgebraOps;
use zkosc::fock::{Convention, FockWindow};
use zkosc::shape::{relative_deviation, SipParams, SpectrumMethod};

/// Compatible parameter records: sigma is derived from a base ratio so the
/// unified remainder exists by construction.
fn arb_params(max_k: usize, positive: bool) -> impl Strategy<Value = SipParams> {
    let signs = if positive { Just(vec![1.0; 8]).boxed() } else { prop::collection::vec(prop_oneof![Just(1.0), Just(-1.0)], 8).boxed() };
    (
        1..=max_k,
        prop::collection::vec(0.1f64..5.0, 8),
        signs,
        if positive { 0.0f64..2.0 } else { -2.0f64..2.0 },
        if positive { 0.1f64..3.0 } else { -3.0f64..3.0 },
        if positive { 0.1f64..3.0 } else { -3.0f64..3.0 },
    )
        .prop_map(move |(k, magnitudes, signs, delta, ratio, a0)| {
            let omega: Vec<f64> = (0..k).map(|s| magnitudes[s] * signs[s]).collect();
            let sigma: Vec<f64> = (0..k).map(|s| omega[s] * (ratio + (s as f64 / k as f64) * delta)).collect();
            SipParams::new(k, sigma, omega, a0, delta, 128, 0.0).expect("construction is compatible")
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closed_form_matches_recursion(params in arb_params(8, false)) {
        let closed = params.structure_table_closed(96);
        let recursive = params.structure_recursive(96);
        for (a, b) in closed.values.iter().zip(recursive.values.iter()) {
            prop_assert!(relative_deviation(*a, *b) <= 1e-9);
        }
    }

    #[test]
    fn spectrum_routes_agree(params in arb_params(8, false)) {
        let unified = params.energy_spectrum(96, SpectrumMethod::UnifiedSum).energies;
        let blocks = params.energy_spectrum(96, SpectrumMethod::Blocks).energies;
        let diff = params.energy_spectrum(96, SpectrumMethod::StructureDiff).energies;
        for n in 0..unified.len() {
            prop_assert!(relative_deviation(unified[n], blocks[n]) <= 1e-10);
            prop_assert!(relative_deviation(unified[n], diff[n]) <= 1e-10);
        }
    }

    #[test]
    fn unified_remainder_matches_per_step_identification(params in arb_params(8, false)) {
        let k = params.k() as u64;
        for n in 0..64u64 {
            let unified = params.unified_remainder(n);
            let step = params.remainder_step((n % k) as usize, n / k);
            prop_assert!(relative_deviation(unified, step) <= 1e-12);
        }
    }

    #[test]
    fn structure_diff_spectrum_ignores_c0_bitwise(params in arb_params(8, false), c0 in 0.0f64..1e6) {
        let base = params.energy_spectrum(48, SpectrumMethod::StructureDiff).energies;
        let shifted = params.with_c0(c0).energy_spectrum(48, SpectrumMethod::StructureDiff).energies;
        prop_assert_eq!(base, shifted);
    }

    #[test]
    fn coefficients_sum_to_zero_and_rotate(params in arb_params(8, false)) {
        let set = params.coefficients();
        let scale = params.omega().iter().map(|w| w.abs()).sum::<f64>().max(1.0);
        let total: f64 = set.c.iter().sum();
        prop_assert!(total.abs() <= 1e-13 * scale);

        // Rotating omega rotates both tables.
        let k = params.k();
        let rotated: Vec<f64> = (0..k).map(|j| params.omega()[(j + 1) % k]).collect();
        let sigma: Vec<f64> = (0..k)
            .map(|s| rotated[s] * (params.sigma()[0] / params.omega()[0] + (s as f64 / k as f64) * params.delta()))
            .collect();
        let turned = SipParams::new(k, sigma, rotated, params.a0(), params.delta(), 128, 0.0).unwrap();
        let turned_set = turned.coefficients();
        for s in 0..k {
            prop_assert!((set.c[(s + 1) % k] - turned_set.c[s]).abs() <= 1e-12 * scale);
            prop_assert!((set.d[(s + 1) % k] - turned_set.d[s]).abs() <= 1e-12 * scale);
        }
    }

    #[test]
    fn choose_c0_makes_tables_positive(params in arb_params(6, false), margin in 0.1f64..2.0) {
        let c0 = params.choose_c0(48, margin);
        prop_assert!(c0 >= 0.0);
        let shifted = params.with_c0(c0);
        let min = (1..=48u64).map(|n| shifted.structure_closed(n)).fold(f64::INFINITY, f64::min);
        prop_assert!(min >= margin - 1e-9 * (1.0 + c0.abs()));
    }

    #[test]
    fn pinned_structure_functions_build_valid_towers(params in arb_params(5, true), depth in 4usize..32) {
        let n0 = (depth as u64 - 1) / params.k() as u64 + 1;
        let params = params.with_n0(n0);
        let window = FockWindow::new(params.k(), depth, n0, Convention::Descending).unwrap();
        let f = params.structure_as_fn_pinned(&window).unwrap();

        // The pinned bottom is an exact zero and the decomposition matches.
        prop_assert_eq!(f.eval(window.nu_f64(window.bottom_state())), 0.0);
        let parts = f.graded().unwrap();
        for j in 0..window.depth() {
            let nu = window.nu_f64(j);
            let total = f.eval(nu);
            prop_assert!(total >= 0.0);
            let split = (parts.base)(nu) + (parts.per_grade[window.grade(j)])(nu);
            prop_assert!((total - split).abs() <= 1e-9 * (1.0 + total.abs()));
        }

        // a† a reproduces the structure values on the window diagonal.
        let ops = AlgebraOps::build(&window, &f).unwrap();
        let product = ops.creation.matrix().dot(ops.annihilation.matrix());
        for j in 0..window.depth() {
            let expected = f.eval(window.nu_f64(j));
            prop_assert!((product[(j, j)].re - expected).abs() <= 1e-12 * (1.0 + expected));
        }
    }
}
