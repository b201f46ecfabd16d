use hilbert_strip::{
    cross_validate, hilbert_convolution, hilbert_multiplier, FourierSeries64, PvQuadratureConfig,
};

fn battery() -> Vec<(&'static str, FourierSeries64)> {
    vec![
        ("sin x", FourierSeries64::sine(1)),
        ("cos x", FourierSeries64::cosine(1)),
        ("sin 3x", FourierSeries64::sine(3)),
        (
            "cos 2x + 0.3 sin 5x",
            FourierSeries64::cosine(2).with_sin(5, 0.3),
        ),
    ]
}

#[test]
fn routes_agree_on_battery_at_moderate_grid() {
    let cfg = PvQuadratureConfig::new(256, 1e-13).unwrap();
    for (name, f) in battery() {
        for d in [0.5, 1.0, 2.0, 5.0] {
            let r = cross_validate(&f, d, &cfg).unwrap();
            assert!(r.passed(), "{name}, d = {d}: {r:?}");
        }
    }
}

#[test]
fn deep_water_limit() {
    let f = FourierSeries64::cosine(2).with_sin(5, 0.3);
    let out = hilbert_multiplier(&f, 50.0).unwrap();
    assert!((out.b(2) - 1.0).abs() <= 1e-15);
    assert!((out.a(5) + 0.3).abs() <= 1e-15);
}

#[test]
fn convolution_mean_is_negligible() {
    let cfg = PvQuadratureConfig::new(512, 1e-13).unwrap();
    for (_, f) in battery() {
        let out = hilbert_convolution(&f, 1.0, &cfg).unwrap();
        assert!(out.mean().abs() <= 1e-8 * out.sup_norm());
    }
}

#[test]
fn stalled_refinement_reports_no_convergence() {
    // An unattainable refinement target must end in NoConvergence, not loop forever.
    let cfg = PvQuadratureConfig::new(8, 1e-13).unwrap().with_refine_tol(0.0);
    let err = hilbert_convolution(&FourierSeries64::sine(1), 1.0, &cfg).unwrap_err();
    assert!(matches!(err, hilbert_strip::Error::NoConvergence { .. }));
}
