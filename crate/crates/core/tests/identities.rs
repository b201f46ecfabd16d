//! Cross-route checks for the kernel, theta and Lambert representations.

use std::f64::consts::{FRAC_PI_2, PI};

use hilbert_strip::{
    beta_half_excess, beta_half_lambert, beta_half_raw, beta_half_theta, beta_kernel_line1,
    beta_kernel_line2, kernel_convention_residuals, lemma_termwise_residual, theta3, theta3_fast,
    transformation_residual, two_squares_coefficient_check, Nome, StripGeometry,
    StripGeometry32,
};

const CHECKPOINTS: [f64; 7] = [0.25, 0.5, 1.0, 2.0, PI, 5.0, 10.0];

#[test]
fn three_way_agreement() {
    for x in CHECKPOINTS {
        let theta = beta_half_theta(x).unwrap();
        let raw = beta_half_raw(x, 1e-14).unwrap();
        let lambert = beta_half_lambert(x, 1e-14).unwrap();
        assert!((raw - theta).abs() <= 1e-10, "raw at x = {x}");
        assert!((lambert - theta).abs() <= 1e-10, "lambert at x = {x}");
    }
}

#[test]
fn strictly_increasing_on_dense_grid() {
    let n = 1000;
    let values: Vec<f64> = (0..n)
        .map(|i| 0.05 + (20.0 - 0.05) * i as f64 / (n - 1) as f64)
        .map(|x| beta_half_theta(x).unwrap())
        .collect();
    // Where β rounds to exactly 1.0 the log-space excess carries the ordering.
    let excess: Vec<f64> = (0..n)
        .map(|i| 0.05 + (20.0 - 0.05) * i as f64 / (n - 1) as f64)
        .map(|x| beta_half_excess(x).unwrap().log10_excess)
        .collect();
    for i in 1..n {
        assert!(values[i] >= values[i - 1]);
        assert!(excess[i] > excess[i - 1], "i = {i}");
    }
    assert!(values[n - 1] > values[0]);
}

#[test]
fn excess_positive_everywhere() {
    for k in -30..=20 {
        let x = 10f64.powf(k as f64 / 10.0);
        let e = beta_half_excess(x).unwrap();
        assert!(e.log10_excess.is_finite(), "x = {x}");
        if let Some(v) = e.excess {
            assert!(v > 0.0);
            assert!((v.log10() - e.log10_excess).abs() < 1e-12 * e.log10_excess.abs().max(1.0));
        }
    }
}

#[test]
fn kernel_matches_specialized_formula() {
    for d in [0.5, 1.0, 2.0, 5.0] {
        let r = kernel_convention_residuals(d, 1e-12).unwrap();
        assert!(r.half_depth <= 1e-10, "d = {d}");
    }
    let g = StripGeometry::new(1.0).unwrap();
    let l1 = beta_kernel_line1(FRAC_PI_2, &g, 1e-12).unwrap();
    let l2 = beta_kernel_line2(FRAC_PI_2, &g, 200).unwrap();
    assert!((l1 - l2).abs() <= 1e-8);
}

#[test]
fn kernel_at_quarter_period_equals_theta_square() {
    for d in [0.1, 0.5, 1.0, 3.0, 12.0] {
        let g = StripGeometry::new(d).unwrap();
        let kernel = beta_kernel_line1(FRAC_PI_2, &g, 1e-13).unwrap();
        let (theta, _) = theta3(Nome::new(g.nome()).unwrap(), 1e-14).unwrap();
        assert!((kernel - theta * theta).abs() < 1e-12, "d = {d}");
    }
}

#[test]
fn modular_transformation() {
    for i in 0..39 {
        let x = 0.5 + 19.5 * i as f64 / 38.0;
        assert!(transformation_residual(x, 1e-14).unwrap() <= 1e-12);
        let (direct, _) = theta3(Nome::from_exponent(x).unwrap(), 1e-14).unwrap();
        assert!((theta3_fast(x, 1e-14).unwrap() - direct).abs() < 1e-13 * direct);
    }
}

#[test]
fn lemma_termwise() {
    for x in [0.5, 1.0, 2.0] {
        for n in 1..=20 {
            assert!(lemma_termwise_residual(x, n) <= 1e-13);
        }
    }
}

#[test]
fn two_squares_exact() {
    let r = two_squares_coefficient_check(10_000).unwrap();
    assert!(r.passed(), "{r:?}");
    assert_eq!(r.residual(), 0.0);
}

#[test]
fn single_precision_routes() {
    let g = StripGeometry32::new(1.0).unwrap();
    let k = beta_kernel_line1(std::f32::consts::FRAC_PI_2, &g, 1e-5).unwrap();
    let t = beta_half_theta(g.half_period()).unwrap();
    assert!((k - t).abs() < 1e-5);
    let raw = beta_half_raw(std::f32::consts::PI, 1e-6).unwrap();
    assert!((raw - 1.180_340_6).abs() < 1e-5);
}
