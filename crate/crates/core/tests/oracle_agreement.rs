//! Two-sided agreement between the analytic fast paths and the brute-force
//! grid oracles. The two routes share nothing beyond gauge evaluation, so
//! agreement within the calibrated band is real evidence that both are
//! computing the defined quantity.

use normplane_core::config::Params;
use normplane_core::constants;
use normplane_core::iso;
use normplane_core::modulus;
use normplane_core::norm::NormModel;
use normplane_core::oracle::{self, GridSpec};
use normplane_core::vec2::TAU;

/// Two-sided agreement bound at 4096 grid directions.
const AGREEMENT_TOL: f64 = 5e-3;

/// Oracle resolution all value comparisons run at.
fn grid() -> GridSpec {
    GridSpec::new(4096)
}

/// The full test-norm suite: presets plus additional smooth and polygonal
/// family members.
fn suite() -> Vec<(&'static str, NormModel)> {
    vec![
        ("euclidean", NormModel::euclidean()),
        ("square", NormModel::square()),
        ("hexagon", NormModel::hexagon()),
        ("octagon", NormModel::octagon()),
        ("lp(1.5)", NormModel::lp(1.5).expect("valid exponent")),
        ("lp(3)", NormModel::lp(3.0).expect("valid exponent")),
        (
            "decagon",
            NormModel::regular_polygon(10, 0.2).expect("valid polygon"),
        ),
        (
            "rotated hexagon",
            NormModel::regular_polygon(6, 1.0).expect("valid polygon"),
        ),
    ]
}

#[test]
fn james_routes_agree() {
    let params = Params::default();
    for (name, norm) in suite() {
        let fast = constants::james(&norm, &params).unwrap();
        let oracle_value = oracle::james(&norm, &grid());
        assert!(
            (fast - oracle_value).abs() <= AGREEMENT_TOL,
            "{name}: fast james {fast} vs oracle {oracle_value}"
        );
    }
}

#[test]
fn schaffer_routes_agree() {
    let params = Params::default();
    for (name, norm) in suite() {
        let fast = constants::schaffer(&norm, &params).unwrap();
        let oracle_value = oracle::schaffer(&norm, &grid());
        assert!(
            (fast - oracle_value).abs() <= AGREEMENT_TOL,
            "{name}: fast schaffer {fast} vs oracle {oracle_value}"
        );
    }
}

#[test]
fn delta_routes_agree() {
    let params = Params::default();
    for (name, norm) in suite() {
        for eps in [0.6, 1.0, 1.4] {
            let fast = modulus::delta(&norm, eps, &params).unwrap();
            let oracle_value = oracle::delta(&norm, eps, &grid());
            assert!(
                (fast - oracle_value).abs() <= AGREEMENT_TOL,
                "{name}: fast delta({eps}) {fast} vs oracle {oracle_value}"
            );
        }
    }
}

#[test]
fn rho_routes_agree() {
    let params = Params::default();
    for (name, norm) in suite() {
        for eps in [0.6, 1.0, 1.4] {
            let fast = modulus::rho(&norm, eps, &params).unwrap();
            let oracle_value = oracle::rho(&norm, eps, &grid());
            assert!(
                (fast - oracle_value).abs() <= AGREEMENT_TOL,
                "{name}: fast rho({eps}) {fast} vs oracle {oracle_value}"
            );
        }
    }
}

#[test]
fn partner_routes_agree() {
    let params = Params::default();
    let grid = GridSpec {
        directions: 2048,
        refine_rounds: 3,
    };
    for (name, norm) in suite() {
        for k in 0..6 {
            let x = norm.sphere_point(TAU * k as f64 / 6.0 + 0.05);
            for r in [0.7, 1.0] {
                let fast = iso::partner(&norm, x, r, &params).unwrap().primary;
                let oracle_y = oracle::partner(&norm, x, r, &grid);
                let d = iso::angular_distance(fast.angle(), oracle_y.angle());
                assert!(
                    d <= 1e-3,
                    "{name}: partner directions differ by {d} rad at x {x:?}, r {r}"
                );
            }
        }
    }
}
