//! Marching tracer for the intersection curve plus the finite-difference
//! curvature oracle.
//!
//! Each step predicts along the tangent (per-surface parameter velocities
//! `u'` times the step length) and corrects back onto the intersection with
//! a Newton iteration. The correction solves the square 16-equation system
//! of all 15 intersection equations plus a chord-length constraint
//! `‖x − x_prev‖² = h²`, so accepted points are spaced exactly `h` apart in
//! chord length — which keeps traces uniformly spaced for the
//! finite-difference stencils without any resampling pass.

use crate::curve::{param_derivs, transversal_tangent, IntersectionPoint};
use crate::error::{Error, Result};
use crate::linalg::{solve_dense, Vec5};
use crate::surface::{jet, unit_normal, Hypersurface};

/// Optional per-surface, per-parameter `[lo, hi]` boxes.
pub type DomainBoxes = [Option<[[f64; 2]; 4]>; 4];

/// Marching parameters.
#[derive(Debug, Clone, Copy)]
pub struct TraceConfig {
    /// Arc-length step size `h`.
    pub step: f64,
    /// Number of steps to take (0 yields a single-point trace).
    pub steps: usize,
    /// Corrector convergence tolerance on the residual infinity norm.
    pub tol: f64,
    /// Maximum Newton iterations per correction.
    pub max_iter: usize,
    /// Smallest step size tried when halving after failures.
    pub min_step: f64,
}

impl Default for TraceConfig {
    fn default() -> Self {
        TraceConfig {
            step: 1e-3,
            steps: 0,
            tol: 1e-12,
            max_iter: 25,
            min_step: 1e-8,
        }
    }
}

/// An arc-length-indexed point sequence along the curve; `s` is monotone
/// (accumulated from measured chord lengths).
#[derive(Debug, Clone)]
pub struct Trace {
    pub points: Vec<(f64, IntersectionPoint)>,
}

impl Trace {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// A trace failure wrapping the underlying error with the step at which the
/// march gave up (0-based index of the step being attempted).
#[derive(Debug)]
pub struct TraceError {
    pub step: usize,
    pub source: Error,
}

impl From<TraceError> for Error {
    fn from(e: TraceError) -> Error {
        e.source
    }
}

impl std::fmt::Display for TraceError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "trace failed at step {}: {}", self.step, self.source)
    }
}

impl std::error::Error for TraceError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        Some(&self.source)
    }
}

/// One curvature estimate of the finite-difference oracle.
#[derive(Debug, Clone, Copy)]
pub struct CurvatureEstimate {
    pub s: f64,
    pub kappa1: f64,
    pub kappa2: f64,
}

/// Positions and first partials of all four surfaces at one parameter state.
fn first_order_data(
    surfaces: &[Hypersurface; 4],
    params: &[[f64; 4]; 4],
) -> Result<([Vec5; 4], [[Vec5; 4]; 4])> {
    let mut positions = [Vec5::ZERO; 4];
    let mut phi = [[Vec5::ZERO; 4]; 4];
    for i in 0..4 {
        let j = jet(&surfaces[i], &params[i], 1)?;
        positions[i] = j.position();
        for (l, slot) in phi[i].iter_mut().enumerate() {
            *slot = j.partial(&[l as u8 + 1])?;
        }
    }
    Ok((positions, phi))
}

fn intersection_residual(positions: &[Vec5; 4]) -> ([f64; 15], f64) {
    let mut f = [0.0; 15];
    let mut inf = 0.0_f64;
    for b in 0..3 {
        let diff = positions[0] - positions[b + 1];
        for c in 0..5 {
            f[5 * b + c] = diff[c];
            inf = inf.max(diff[c].abs());
        }
    }
    (f, inf)
}

/// Fill one 15x16 Jacobian block structure of the intersection equations
/// into `jac` (whose rows must be at least 16 wide).
fn fill_intersection_jacobian(jac: &mut [Vec<f64>], phi: &[[Vec5; 4]; 4]) {
    for b in 0..3 {
        for c in 0..5 {
            let row = &mut jac[5 * b + c];
            for l in 0..4 {
                row[l] = phi[0][l][c];
                row[4 * (b + 1) + l] = -phi[b + 1][l][c];
            }
        }
    }
}

fn point_tolerance(tol: f64) -> f64 {
    // An infinity-norm corrector residual of `tol` bounds the pairwise
    // ambient distances by 2*sqrt(5)*tol.
    IntersectionPoint::DEFAULT_TOL.max(2.0 * 5.0_f64.sqrt() * tol)
}

/// Minimum-norm Gauss-Newton projection onto the intersection: iterates
/// least-squares steps of the 15-equation system `Φ¹=Φ²=Φ³=Φ⁴` over all 16
/// parameters until the residual infinity norm is at most `tol`.
pub fn newton_correct(
    surfaces: &[Hypersurface; 4],
    guess: [[f64; 4]; 4],
    tol: f64,
    max_iter: usize,
) -> Result<IntersectionPoint> {
    let mut params = guess;
    for iter in 0..=max_iter {
        let (positions, phi) = first_order_data(surfaces, &params)?;
        let (f, inf) = intersection_residual(&positions);
        if inf <= tol {
            return IntersectionPoint::new(surfaces, params, point_tolerance(tol));
        }
        if iter == max_iter {
            return Err(Error::NewtonDivergence { iterations: max_iter, residual: inf });
        }
        let mut jac = vec![vec![0.0; 16]; 15];
        fill_intersection_jacobian(&mut jac, &phi);
        // Minimum-norm step: delta = J^T (J J^T)^{-1} (-F).
        let mut jjt = vec![vec![0.0; 15]; 15];
        for r in 0..15 {
            for c in r..15 {
                let v: f64 = (0..16).map(|k| jac[r][k] * jac[c][k]).sum();
                jjt[r][c] = v;
                jjt[c][r] = v;
            }
        }
        let rhs: Vec<f64> = f.iter().map(|v| -v).collect();
        let y = match solve_dense(jjt, rhs) {
            Ok(y) => y,
            Err(_) => {
                return Err(Error::NewtonDivergence { iterations: iter, residual: inf })
            }
        };
        for k in 0..16 {
            let delta: f64 = (0..15).map(|r| jac[r][k] * y[r]).sum();
            params[k / 4][k % 4] += delta;
        }
    }
    unreachable!("loop returns on success, exhaustion, or singularity");
}

/// Chord-constrained correction for one march step: solves the square
/// system of 15 intersection equations plus `‖Φ¹(q₁) − x_prev‖² − h² = 0`.
fn correct_step(
    surfaces: &[Hypersurface; 4],
    guess: [[f64; 4]; 4],
    x_prev: &Vec5,
    h: f64,
    tol: f64,
    max_iter: usize,
) -> Result<[[f64; 4]; 4]> {
    let mut params = guess;
    for iter in 0..=max_iter {
        let (positions, phi) = first_order_data(surfaces, &params)?;
        let (f, f_inf) = intersection_residual(&positions);
        let chord = positions[0] - *x_prev;
        let g_chord = chord.dot(&chord) - h * h;
        let inf = f_inf.max(g_chord.abs());
        if inf <= tol {
            return Ok(params);
        }
        if iter == max_iter {
            return Err(Error::NewtonDivergence { iterations: max_iter, residual: inf });
        }
        let mut jac = vec![vec![0.0; 16]; 16];
        fill_intersection_jacobian(&mut jac, &phi);
        for l in 0..4 {
            jac[15][l] = 2.0 * chord.dot(&phi[0][l]);
        }
        let mut rhs: Vec<f64> = f.iter().map(|v| -v).collect();
        rhs.push(-g_chord);
        let delta = match solve_dense(jac, rhs) {
            Ok(d) => d,
            Err(_) => {
                return Err(Error::NewtonDivergence { iterations: iter, residual: inf })
            }
        };
        for (k, d) in delta.iter().enumerate() {
            params[k / 4][k % 4] += d;
        }
    }
    unreachable!("loop returns on success, exhaustion, or singularity");
}

fn inside_domains(params: &[[f64; 4]; 4], domains: &DomainBoxes) -> bool {
    for (q, dom) in params.iter().zip(domains) {
        if let Some(boxes) = dom {
            for (v, [lo, hi]) in q.iter().zip(boxes) {
                if v < lo || v > hi {
                    return false;
                }
            }
        }
    }
    true
}

/// Oriented tangent and per-surface parameter velocities at a point.
fn tangent_state(
    surfaces: &[Hypersurface; 4],
    params: &[[f64; 4]; 4],
    orient_along: Option<&Vec5>,
) -> Result<(Vec5, [[f64; 4]; 4])> {
    let mut normals = [Vec5::ZERO; 4];
    let mut jets = Vec::with_capacity(4);
    for i in 0..4 {
        let j = jet(&surfaces[i], &params[i], 1)?;
        normals[i] = unit_normal(&j)?;
        jets.push(j);
    }
    let mut t = transversal_tangent(&normals)?;
    if let Some(prev) = orient_along {
        if t.dot(prev) < 0.0 {
            t = -t;
        }
    }
    let mut uprime = [[0.0; 4]; 4];
    for i in 0..4 {
        uprime[i] = param_derivs(&jets[i], 1, &[], &t)?;
    }
    Ok((t, uprime))
}

fn run_trace(
    surfaces: &[Hypersurface; 4],
    start: &IntersectionPoint,
    config: &TraceConfig,
    domains: &DomainBoxes,
    direction: f64,
) -> std::result::Result<Trace, TraceError> {
    let fail = |step: usize, source: Error| TraceError { step, source };
    let (t0, _) = tangent_state(surfaces, &start.params, None).map_err(|e| fail(0, e))?;
    let mut t_prev = t0 * direction;
    let (_, mut uprime) =
        tangent_state(surfaces, &start.params, Some(&t_prev)).map_err(|e| fail(0, e))?;
    let mut params = start.params;
    let mut x_prev = start.ambient;
    let mut s = 0.0;
    let mut points = Vec::with_capacity(config.steps + 1);
    points.push((s, *start));

    for step_idx in 0..config.steps {
        let mut h = config.step;
        let accepted = loop {
            let mut guess = params;
            for i in 0..4 {
                for l in 0..4 {
                    guess[i][l] += h * uprime[i][l];
                }
            }
            let attempt = correct_step(surfaces, guess, &x_prev, h, config.tol, config.max_iter)
                .and_then(|corrected| {
                    if !inside_domains(&corrected, domains) {
                        return Err(Error::Domain {
                            message: "corrected step left the surface domain box".into(),
                        });
                    }
                    let point =
                        IntersectionPoint::new(surfaces, corrected, point_tolerance(config.tol))?;
                    if (point.ambient - x_prev).dot(&t_prev) <= 0.0 {
                        return Err(Error::Domain {
                            message: "corrector landed behind the previous point".into(),
                        });
                    }
                    Ok((corrected, point))
                });
            match attempt {
                Ok(result) => break result,
                Err(e) => {
                    h *= 0.5;
                    if h < config.min_step {
                        let source = match e {
                            Error::NewtonDivergence { .. } => e,
                            other => Error::NewtonDivergence {
                                iterations: config.max_iter,
                                residual: match other {
                                    Error::PointMismatch { residual } => residual,
                                    _ => f64::NAN,
                                },
                            },
                        };
                        return Err(fail(step_idx, source));
                    }
                }
            }
        };
        let (corrected, point) = accepted;
        // NonTransversal at a visited point is a hard error, not a retry.
        let (t_new, uprime_new) = tangent_state(surfaces, &corrected, Some(&t_prev))
            .map_err(|e| fail(step_idx, e))?;
        s += (point.ambient - x_prev).norm();
        points.push((s, point));
        params = corrected;
        x_prev = point.ambient;
        t_prev = t_new;
        uprime = uprime_new;
    }
    Ok(Trace { points })
}

/// March `config.steps` steps from `start` in the `+t` direction of the
/// first point. `s` accumulates measured chord lengths; failed steps are
/// retried with halved step sizes down to `config.min_step`.
pub fn trace(
    surfaces: &[Hypersurface; 4],
    start: &IntersectionPoint,
    config: &TraceConfig,
    domains: &DomainBoxes,
) -> std::result::Result<Trace, TraceError> {
    run_trace(surfaces, start, config, domains, 1.0)
}

/// Like [`trace`] but marching in the `−t` direction.
pub fn trace_reverse(
    surfaces: &[Hypersurface; 4],
    start: &IntersectionPoint,
    config: &TraceConfig,
    domains: &DomainBoxes,
) -> std::result::Result<Trace, TraceError> {
    run_trace(surfaces, start, config, domains, -1.0)
}

/// Centered trace: `config.steps` backward plus `config.steps` forward,
/// merged into one monotone sequence with `s = 0` at `start` (backward
/// points carry negative `s`).
pub fn trace_centered(
    surfaces: &[Hypersurface; 4],
    start: &IntersectionPoint,
    config: &TraceConfig,
    domains: &DomainBoxes,
) -> std::result::Result<Trace, TraceError> {
    let back = trace_reverse(surfaces, start, config, domains)?;
    let fwd = trace(surfaces, start, config, domains)?;
    let mut points = Vec::with_capacity(back.len() + fwd.len() - 1);
    for (s, p) in back.points.into_iter().rev() {
        points.push((-s, p));
    }
    points.extend(fwd.points.into_iter().skip(1));
    Ok(Trace { points })
}

/// Five-point finite-difference estimates of `k1` and `k2` at the interior
/// points of a uniformly spaced trace — the independent verification oracle
/// for the analytic curvature pipeline.
pub fn fd_curvature_oracle(trace: &Trace) -> Result<Vec<CurvatureEstimate>> {
    let n = trace.points.len();
    if n < 5 {
        return Err(Error::InsufficientTrace { needed: 5, got: n });
    }
    let h = (trace.points[n - 1].0 - trace.points[0].0) / (n as f64 - 1.0);
    let p = |i: usize| trace.points[i].1.ambient;
    let mut out = Vec::with_capacity(n - 4);
    for i in 2..n - 2 {
        let (pm2, pm1, p0, pp1, pp2) = (p(i - 2), p(i - 1), p(i), p(i + 1), p(i + 2));
        let d2 = (-pm2 + pm1 * 16.0 - p0 * 30.0 + pp1 * 16.0 - pp2) * (1.0 / (12.0 * h * h));
        let d3 = (pp2 - pp1 * 2.0 + pm1 * 2.0 - pm2) * (1.0 / (2.0 * h * h * h));
        let t = ((pp1 - pm1) * (1.0 / (2.0 * h))).normalized();
        let kappa1 = d2.norm();
        let w = d2 - t * d2.dot(&t);
        let nvec = w * (1.0 / w.norm());
        let rest = d3 - t * d3.dot(&t) - nvec * d3.dot(&nvec);
        let kappa2 = rest.norm() / kappa1;
        out.push(CurvatureEstimate { s: trace.points[i].0, kappa1, kappa2 });
    }
    Ok(out)
}

#[cfg(test)]
#[allow(clippy::excessive_precision, clippy::approx_constant)] // oracle values quoted in full
mod tests {
    use super::*;
    use crate::surface::test_fixtures::*;

    const NO_DOMAINS: DomainBoxes = [None, None, None, None];

    fn start_of(scene: ([Hypersurface; 4], [[f64; 4]; 4])) -> ([Hypersurface; 4], IntersectionPoint) {
        let (surfaces, params) = scene;
        let p = IntersectionPoint::new(&surfaces, params, 1e-9).unwrap();
        (surfaces, p)
    }

    #[test]
    fn newton_correct_accepts_exact_point_unchanged() {
        let (surfaces, params) = reference_scene();
        let p = newton_correct(&surfaces, params, 1e-12, 25).unwrap();
        assert!(p.residual <= 1e-12);
        for (got, want) in p.params.iter().zip(&params) {
            for (g, w) in got.iter().zip(want) {
                assert!((g - w).abs() < 1e-12, "parameters moved");
            }
        }
    }

    #[test]
    fn newton_correct_recovers_from_perturbation() {
        let (surfaces, mut params) = reference_scene();
        for (i, q) in params.iter_mut().enumerate() {
            for (l, v) in q.iter_mut().enumerate() {
                *v += 1e-3 * if (i + l) % 2 == 0 { 1.0 } else { -1.0 };
            }
        }
        let p = newton_correct(&surfaces, params, 1e-12, 25).unwrap();
        assert!(p.residual <= 1e-12, "residual {}", p.residual);
        // The corrected point is a genuine nearby intersection point.
        assert!((p.ambient - Vec5([0.5, 0.5, SQRT2_OVER_2, 1.0, 0.5])).norm() < 1e-2);
    }

    #[test]
    fn newton_correct_diverges_on_empty_intersection() {
        let h = |texts: [&str; 5], name: &str| Hypersurface::from_texts(name, &texts).unwrap();
        let surfaces = [
            h(["u1", "u2", "u3", "u4", "0"], "A"),
            h(["u1", "u2", "u3", "u4", "1"], "B"),
            h(["u1", "u2", "0", "u3", "u4"], "C"),
            h(["u1", "0", "u2", "u3", "u4"], "D"),
        ];
        let err = newton_correct(&surfaces, [[0.0; 4]; 4], 1e-12, 25).unwrap_err();
        assert!(matches!(err, Error::NewtonDivergence { .. }), "{err:?}");
    }

    #[test]
    fn zero_step_trace_contains_only_start() {
        let (surfaces, start) = start_of(circle_scene());
        let config = TraceConfig { steps: 0, ..TraceConfig::default() };
        let tr = trace(&surfaces, &start, &config, &NO_DOMAINS).unwrap();
        assert_eq!(tr.len(), 1);
        assert_eq!(tr.points[0].0, 0.0);
        assert_eq!(tr.points[0].1.ambient, start.ambient);
    }

    #[test]
    fn hyperplane_line_trace_is_straight_and_unit_length() {
        let (surfaces, start) = start_of(hyperplanes_scene());
        let config = TraceConfig { step: 0.01, steps: 100, ..TraceConfig::default() };
        let tr = trace(&surfaces, &start, &config, &NO_DOMAINS).unwrap();
        assert_eq!(tr.len(), 101);
        let dir = (tr.points[1].1.ambient - tr.points[0].1.ambient).normalized();
        for (s, p) in &tr.points {
            let delta = p.ambient - start.ambient;
            let off = delta - dir * delta.dot(&dir);
            assert!(off.norm() < 1e-9, "point off the line by {}", off.norm());
            assert!(p.residual <= 1e-12);
            let _ = s;
        }
        let total = tr.points.last().unwrap().0;
        assert!((total - 1.0).abs() < 1e-6, "s = {total}");
    }

    #[test]
    fn circle_trace_closes_after_full_revolution() {
        let (surfaces, start) = start_of(circle_scene());
        let config = TraceConfig { step: 1e-3, steps: 6284, ..TraceConfig::default() };
        let tr = trace(&surfaces, &start, &config, &NO_DOMAINS).unwrap();
        assert_eq!(tr.len(), 6285);
        let gap = (tr.points.last().unwrap().1.ambient - start.ambient).norm();
        assert!(gap <= 1e-3, "closure gap {gap}");
        // Spacing invariant: all chords within 10% of h.
        for w in tr.points.windows(2) {
            let chord = (w[1].1.ambient - w[0].1.ambient).norm();
            assert!((chord - 1e-3).abs() < 1e-4, "chord {chord}");
            assert!(w[1].0 > w[0].0, "s must be monotone");
        }
        // Residual invariant.
        for (_, p) in &tr.points {
            assert!(p.residual <= 1e-12);
        }
    }

    #[test]
    fn reverse_trace_returns_to_start() {
        let (surfaces, start) = start_of(ruled_helix_scene());
        let config = TraceConfig { step: 1e-3, steps: 50, ..TraceConfig::default() };
        let fwd = trace(&surfaces, &start, &config, &NO_DOMAINS).unwrap();
        let end = fwd.points.last().unwrap().1;
        let back = trace_reverse(&surfaces, &end, &config, &NO_DOMAINS).unwrap();
        let returned = back.points.last().unwrap().1.ambient;
        assert!(
            (returned - start.ambient).norm() < 1e-8,
            "gap {}",
            (returned - start.ambient).norm()
        );
    }

    #[test]
    fn centered_trace_is_monotone_with_start_at_zero() {
        let (surfaces, start) = start_of(circle_scene());
        let config = TraceConfig { step: 1e-3, steps: 10, ..TraceConfig::default() };
        let tr = trace_centered(&surfaces, &start, &config, &NO_DOMAINS).unwrap();
        assert_eq!(tr.len(), 21);
        assert!((tr.points[10].0).abs() < 1e-15);
        assert_eq!(tr.points[10].1.ambient, start.ambient);
        for w in tr.points.windows(2) {
            assert!(w[1].0 > w[0].0);
        }
    }

    #[test]
    fn domain_box_stops_the_march() {
        let (surfaces, start) = start_of(circle_scene());
        let mut domains = NO_DOMAINS;
        // Confine the cylinder angle tightly; the trace must give up when the
        // curve leaves the box.
        domains[0] = Some([[-0.05, 0.05], [-1.0, 1.0], [-1.0, 1.0], [-1.0, 1.0]]);
        let config = TraceConfig { step: 1e-2, steps: 100, ..TraceConfig::default() };
        let err = trace(&surfaces, &start, &config, &domains).unwrap_err();
        assert!(
            matches!(err.source, Error::NewtonDivergence { .. }),
            "{:?}",
            err.source
        );
        // Halving lets the march creep toward the wall (each retry takes
        // roughly half the remaining gap), so it gives up well before the
        // requested 100 steps but somewhat after the ~5 full-length ones.
        assert!((4..40).contains(&err.step), "failed at step {}", err.step);
    }

    #[test]
    fn fd_oracle_requires_five_points() {
        let (surfaces, start) = start_of(circle_scene());
        let config = TraceConfig { step: 1e-3, steps: 3, ..TraceConfig::default() };
        let tr = trace(&surfaces, &start, &config, &NO_DOMAINS).unwrap();
        assert!(matches!(
            fd_curvature_oracle(&tr),
            Err(Error::InsufficientTrace { needed: 5, got: 4 })
        ));
    }

    #[test]
    fn fd_oracle_on_circle_returns_unit_curvature() {
        let (surfaces, start) = start_of(circle_scene());
        let config = TraceConfig { step: 1e-3, steps: 40, ..TraceConfig::default() };
        let tr = trace(&surfaces, &start, &config, &NO_DOMAINS).unwrap();
        let est = fd_curvature_oracle(&tr).unwrap();
        assert_eq!(est.len(), 41 - 4);
        for e in &est {
            assert!((e.kappa1 - 1.0).abs() < 1e-5, "k1 {}", e.kappa1);
        }
    }

    #[test]
    fn fd_oracle_on_line_returns_zero_curvature() {
        let (surfaces, start) = start_of(hyperplanes_scene());
        let config = TraceConfig { step: 1e-3, steps: 20, ..TraceConfig::default() };
        let tr = trace(&surfaces, &start, &config, &NO_DOMAINS).unwrap();
        for e in fd_curvature_oracle(&tr).unwrap() {
            assert!(e.kappa1.abs() < 1e-8, "k1 {}", e.kappa1);
        }
    }

    #[test]
    fn fd_oracle_matches_analytic_curvatures_at_reference_point() {
        let (surfaces, start) = start_of(reference_scene());
        let config = TraceConfig { step: 1e-3, steps: 10, ..TraceConfig::default() };
        let tr = trace_centered(&surfaces, &start, &config, &NO_DOMAINS).unwrap();
        let est = fd_curvature_oracle(&tr).unwrap();
        // The estimate at s = 0 sits at index steps - 2 of the interior list.
        let mid = &est[8];
        assert!(mid.s.abs() < 1e-12);
        assert!((mid.kappa1 - 1.254206096513080159).abs() < 1e-6, "k1 {}", mid.kappa1);
        assert!((mid.kappa2 - 1.6013478021143905448).abs() < 1e-4, "k2 {}", mid.kappa2);
    }

    #[test]
    fn traced_tangents_align_with_chords() {
        let (surfaces, start) = start_of(ruled_helix_scene());
        let config = TraceConfig { step: 1e-3, steps: 20, ..TraceConfig::default() };
        let tr = trace(&surfaces, &start, &config, &NO_DOMAINS).unwrap();
        for w in tr.points.windows(2) {
            let chord = (w[1].1.ambient - w[0].1.ambient).normalized();
            let r = crate::curve::analyze(&surfaces, &w[0].1).unwrap();
            let mut t = r.tangent;
            if t.dot(&chord) < 0.0 {
                t = -t;
            }
            assert!(t.dot(&chord) >= 0.999, "tangent-chord dot {}", t.dot(&chord));
        }
    }
}
