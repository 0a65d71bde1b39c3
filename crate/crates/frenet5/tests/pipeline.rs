//! End-to-end checks through the public API: analytic apparatus at the
//! reference intersection point, invariants along a marched stretch, and
//! finite-difference consistency of the Darboux frame field.

#![allow(clippy::excessive_precision)] // oracle values quoted in full

use frenet5::curve::{analyze, FrenetStatus, IntersectionPoint};
use frenet5::darboux::{geodesic_profile, geodesics};
use frenet5::surface::Hypersurface;
use frenet5::tracer::{trace, trace_centered, DomainBoxes, TraceConfig};

const NO_DOMAINS: DomainBoxes = [None, None, None, None];

fn reference_surfaces() -> [Hypersurface; 4] {
    let s = |name: &str, texts: [&str; 5]| Hypersurface::from_texts(name, &texts).unwrap();
    [
        s(
            "X1",
            [
                "sqrt(2)*sin(u3)*cos(u2)*cos(u1)",
                "sqrt(2)*sin(u3)*sin(u2)*sin(u1)",
                "sqrt(2)*sin(u3)*cos(u2)",
                "sqrt(2)*u4*cos(u3)",
                "sin(u3)/sqrt(2)",
            ],
        ),
        s(
            "X2",
            [
                "u3*cos(u1)*cos(u2)",
                "u3*sin(u1)*cos(u2)",
                "u3*sin(u2)",
                "u3",
                "cos(u2)*cos(u4)",
            ],
        ),
        s(
            "X3",
            [
                "u3*cos(u1)*cos(u2)",
                "u3*sin(u1)*cos(u2)",
                "u4*sin(u1)",
                "u3",
                "sin(u1)*sin(u2)",
            ],
        ),
        s("X4", ["0.5+cos(u1)/2", "sin(u1)/2", "u2", "u3", "u4/2"]),
    ]
}

fn reference_params() -> [[f64; 4]; 4] {
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, SQRT_2};
    [
        [FRAC_PI_4, FRAC_PI_4, FRAC_PI_4, 1.0],
        [FRAC_PI_4, FRAC_PI_4, 1.0, FRAC_PI_4],
        [FRAC_PI_4, FRAC_PI_4, 1.0, 1.0],
        [FRAC_PI_2, SQRT_2 / 2.0, 1.0, 1.0],
    ]
}

fn reference_point(surfaces: &[Hypersurface; 4]) -> IntersectionPoint {
    IntersectionPoint::new(surfaces, reference_params(), 1e-9).unwrap()
}

#[test]
fn full_apparatus_at_reference_point() {
    let surfaces = reference_surfaces();
    let r = analyze(&surfaces, &reference_point(&surfaces)).unwrap();
    assert!(matches!(r.status, FrenetStatus::Full));
    let expected_t = [
        -0.20965696734438365915,
        0.0,
        -0.74124931666110117943,
        -0.62897090203315097746,
        -0.10482848367219182958,
    ];
    for (got, want) in r.tangent.iter().zip(&expected_t) {
        assert!((got - want).abs() < 1e-12, "tangent {got} vs {want}");
    }
    assert!((r.kappa1 - 1.254206096513080159).abs() < 1e-12);
    assert!((r.kappa2.unwrap() - 1.6013478021143905448).abs() < 1e-11);
    assert!((r.kappa3.unwrap() - 1.8889446026306421813).abs() < 1e-10);
    assert!((r.kappa4.unwrap() - 2.3215886543608197574).abs() < 1e-9);
    assert!((r.kappa1_prime.unwrap() - -2.6618681606984016111).abs() < 1e-11);
}

#[test]
fn frame_stays_orthonormal_along_marched_stretch() {
    let surfaces = reference_surfaces();
    let start = reference_point(&surfaces);
    let config = TraceConfig { step: 1e-3, steps: 50, ..TraceConfig::default() };
    let tr = trace(&surfaces, &start, &config, &NO_DOMAINS).unwrap();
    for (_, p) in tr.points.iter().step_by(10) {
        let r = analyze(&surfaces, p).unwrap();
        let f = r.frenet().expect("full apparatus along the stretch");
        let frame = [f.t, f.n, f.b1, f.b2, f.b3];
        for i in 0..5 {
            for j in 0..5 {
                let want = if i == j { 1.0 } else { 0.0 };
                let got = frame[i].dot(&frame[j]);
                assert!((got - want).abs() < 1e-9, "frame dot ({i},{j}) = {got}");
            }
        }
    }
}

#[test]
fn traced_darboux_frames_match_pointwise_rates() {
    let surfaces = reference_surfaces();
    let start = reference_point(&surfaces);
    let config = TraceConfig { step: 1e-3, steps: 10, ..TraceConfig::default() };
    let tr = trace_centered(&surfaces, &start, &config, &NO_DOMAINS).unwrap();
    assert_eq!(tr.points.len(), 21);

    // Darboux frames of the first surface along the trace.
    let mut frames = Vec::with_capacity(tr.points.len());
    for (_, p) in &tr.points {
        let r = analyze(&surfaces, p).unwrap();
        let geo = geodesics(&surfaces, &r).unwrap();
        frames.push(geo[0].0);
    }
    let profile = geodesic_profile(&frames, 1e-3).unwrap();
    assert_eq!(profile.len(), 19);
    let mid = &profile[9]; // the trace's central point

    // <U1', U2> is the first geodesic curvature.
    assert!(
        (mid[0] - 0.89434746610266979915).abs() < 1e-3,
        "kappa1g rate {}",
        mid[0]
    );
    // <U4', U5> equals the third geodesic torsion because U5 is the unit
    // normal, so the frame field must reproduce the analytic normal rate.
    assert!(
        (mid[3] - -0.093446795954736768493).abs() < 1e-3,
        "tau3g rate {}",
        mid[3]
    );
}
