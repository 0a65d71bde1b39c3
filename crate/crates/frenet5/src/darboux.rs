//! Per-surface Darboux frames `{U1..U5}` and the geodesic quantities:
//! the first geodesic curvature `k1g` and the three geodesic torsions
//! `t1g, t2g, t3g`.
//!
//! The frame fixes `U1 = t` and `U5 = N_i` first, then Gram–Schmidts the
//! curve derivatives `α'', α''', α''''` in that order. Reordering would
//! change the signs and values of the higher torsions, so the order is part
//! of the contract.

use crate::curve::CurveAnalysis;
use crate::error::{Error, Result};
use crate::linalg::{quad_product, Vec5};
use crate::surface::{jet, Hypersurface, SurfaceJet};

/// Residual norms at or below this threshold count as rank-deficient.
pub const RANK_TOL: f64 = 1e-10;

/// Adapted frame along the curve for one surface: `U1 = t`, `U5 = N`,
/// `U2..U4` spanning the rest of the tangent hyperplane.
#[derive(Debug, Clone, Copy)]
pub struct DarbouxFrame {
    /// Index of the surface this frame belongs to (0-based scene order).
    pub surface: usize,
    /// The frame vectors `U1..U5` in order.
    pub u: [Vec5; 5],
}

impl DarbouxFrame {
    /// The curve tangent `U1`.
    pub fn tangent(&self) -> &Vec5 {
        &self.u[0]
    }

    /// The surface normal `U5`.
    pub fn normal(&self) -> &Vec5 {
        &self.u[4]
    }
}

/// Geodesic quantities of one surface at one point.
#[derive(Debug, Clone, Copy)]
pub struct GeodesicData {
    /// Index of the surface (0-based scene order).
    pub surface: usize,
    /// First geodesic curvature `⟨α'', U2⟩` (nonnegative: `U2` is oriented
    /// so the inner product is the Gram–Schmidt residual norm).
    pub kappa1g: f64,
    /// Geodesic torsions `t_jg = −⟨dN/ds, U_{j+1}⟩` for `j = 1, 2, 3`.
    pub tau: [f64; 3],
    /// Arc-length derivative of the unit normal.
    pub dnds: Vec5,
}

fn remove_components(v: &Vec5, fixed: &[Vec5]) -> Vec5 {
    let mut r = *v;
    // Two passes of classical Gram-Schmidt for numerical hygiene.
    for _ in 0..2 {
        for f in fixed {
            r = r - *f * r.dot(f);
        }
    }
    r
}

/// Strict per-surface Darboux frame: `U1 = t` and `U5 = N` fixed first,
/// then `U2, U3, U4` by Gram–Schmidt from `α'', α''', α''''` in order.
///
/// Fails with `RankDeficient` naming the first stage (2, 3, or 4) whose
/// residual norm drops to `1e-10` or below.
pub fn darboux_frame(
    tangent: &Vec5,
    alpha2: &Vec5,
    alpha3: &Vec5,
    alpha4: &Vec5,
    normal: &Vec5,
    surface: usize,
) -> Result<DarbouxFrame> {
    let mut fixed = vec![*tangent, *normal];
    let mut mids = Vec::with_capacity(3);
    for (stage, v) in [(2usize, alpha2), (3, alpha3), (4, alpha4)] {
        let r = remove_components(v, &fixed);
        let norm = r.norm();
        if norm.is_nan() || norm <= RANK_TOL {
            return Err(Error::RankDeficient { position: stage, residual: norm });
        }
        let unit = r * (1.0 / norm);
        fixed.push(unit);
        mids.push(unit);
    }
    Ok(DarbouxFrame {
        surface,
        u: [*tangent, mids[0], mids[1], mids[2], *normal],
    })
}

/// Darboux frame that tolerates degenerate derivatives: Gram–Schmidt over
/// whatever derivatives are supplied, skipping stages whose residual
/// vanishes, then filling the remaining slots with a deterministic
/// orthonormal completion (largest-residual coordinate axis first).
///
/// On non-degenerate input with `derivs = [α'', α''', α'''']` this is
/// identical to [`darboux_frame`].
pub fn darboux_frame_completed(
    tangent: &Vec5,
    derivs: &[Vec5],
    normal: &Vec5,
    surface: usize,
) -> DarbouxFrame {
    let mut fixed = vec![*tangent, *normal];
    let mut mids: Vec<Vec5> = Vec::with_capacity(3);
    for v in derivs {
        if mids.len() == 3 {
            break;
        }
        let r = remove_components(v, &fixed);
        let norm = r.norm();
        if norm > RANK_TOL {
            let unit = r * (1.0 / norm);
            fixed.push(unit);
            mids.push(unit);
        }
    }
    while mids.len() < 3 {
        // Deterministic completion: the coordinate axis with the largest
        // residual against the current frame (ties to the lower index).
        let mut best = (0usize, -1.0_f64);
        for k in 0..5 {
            let r = remove_components(&Vec5::basis(k), &fixed).norm();
            if r > best.1 {
                best = (k, r);
            }
        }
        let r = remove_components(&Vec5::basis(best.0), &fixed);
        let unit = r * (1.0 / r.norm());
        fixed.push(unit);
        mids.push(unit);
    }
    DarbouxFrame {
        surface,
        u: [*tangent, mids[0], mids[1], mids[2], *normal],
    }
}

/// First geodesic curvature `k1g = Σ a_j ⟨N_j, U2⟩ = ⟨α'', U2⟩`.
pub fn geodesic_curvature(a: &[f64; 4], normals: &[Vec5; 4], u2: &Vec5) -> f64 {
    a.iter().zip(normals).map(|(aj, nj)| aj * nj.dot(u2)).sum()
}

/// Arc-length derivative of the unit normal `N = N̄/‖N̄‖` where
/// `N̄ = ⊗(Φ1..Φ4)`: differentiate the quadruple product by the product rule
/// (one slot at a time), chain through `u'`, divide by `‖N̄‖`, and remove the
/// component along `N` (the full quotient rule: the scalar-derivative term is
/// exactly the component along `N`).
pub fn normal_derivative(j: &SurfaceJet, uprime: &[f64; 4]) -> Result<Vec5> {
    let phi: [Vec5; 4] =
        [j.partial(&[1])?, j.partial(&[2])?, j.partial(&[3])?, j.partial(&[4])?];
    let nbar = quad_product(&phi[0], &phi[1], &phi[2], &phi[3]);
    let scale = nbar.norm();
    if scale.is_nan() || scale <= 0.0 {
        return Err(Error::NotRegular {
            surface: j.surface_name().to_owned(),
            margin: 0.0,
        });
    }
    let n = nbar * (1.0 / scale);
    let mut dbar = Vec5::ZERO;
    for k in 1..=4u8 {
        // (N̄)_{u_k}: replace one first-partial slot at a time with Φ_{slot,k}.
        let mut partial_k = Vec5::ZERO;
        for slot in 0..4 {
            let mut args = phi;
            args[slot] = j.partial(&[slot as u8 + 1, k])?;
            partial_k = partial_k + quad_product(&args[0], &args[1], &args[2], &args[3]);
        }
        dbar = dbar + partial_k * uprime[(k - 1) as usize];
    }
    let w = dbar * (1.0 / scale);
    Ok(w - n * w.dot(&n))
}

/// Geodesic torsions `t_jg = −⟨dN/ds, U_{j+1}⟩`, `j = 1, 2, 3`.
pub fn geodesic_torsions(dnds: &Vec5, frame: &DarbouxFrame) -> [f64; 3] {
    [
        -dnds.dot(&frame.u[1]),
        -dnds.dot(&frame.u[2]),
        -dnds.dot(&frame.u[3]),
    ]
}

/// Darboux frame and geodesic quantities for every surface at an analyzed
/// point. Degenerate derivative stages are skipped and the frames completed
/// deterministically, so this works at points of any degeneracy level.
pub fn geodesics(
    surfaces: &[Hypersurface; 4],
    analysis: &CurveAnalysis,
) -> Result<Vec<(DarbouxFrame, GeodesicData)>> {
    let mut derivs = vec![analysis.alpha2];
    if let Some(a3) = analysis.alpha3 {
        derivs.push(a3);
    }
    if let Some(a4) = analysis.alpha4 {
        derivs.push(a4);
    }
    let mut out = Vec::with_capacity(4);
    for (i, s) in surfaces.iter().enumerate() {
        let frame = darboux_frame_completed(
            &analysis.tangent,
            &derivs,
            &analysis.normals[i],
            i,
        );
        let j = jet(s, &analysis.point.params[i], 2)?;
        let dnds = normal_derivative(&j, &analysis.uprime[i])?;
        let kappa1g = geodesic_curvature(&analysis.a, &analysis.normals, &frame.u[1]);
        let tau = geodesic_torsions(&dnds, &frame);
        out.push((frame, GeodesicData { surface: i, kappa1g, tau, dnds }));
    }
    Ok(out)
}

/// Central-difference estimates of the geodesic curvature functions
/// `k_ig = ⟨U_i', U_{i+1}⟩` (`i = 1..4`) along a trace of equally spaced
/// Darboux frames of one surface.
///
/// Consecutive frames are sign-aligned first (each `U_k` flipped when its
/// dot with the previous frame's `U_k` is negative). Returns one `[k1g,
/// k2g, k3g, k4g]` estimate per interior trace point.
pub fn geodesic_profile(frames: &[DarbouxFrame], h: f64) -> Result<Vec<[f64; 4]>> {
    if frames.len() < 3 {
        return Err(Error::InsufficientTrace { needed: 3, got: frames.len() });
    }
    let mut aligned: Vec<DarbouxFrame> = Vec::with_capacity(frames.len());
    aligned.push(frames[0]);
    for f in &frames[1..] {
        let prev = aligned.last().unwrap();
        let mut g = *f;
        for k in 0..5 {
            if g.u[k].dot(&prev.u[k]) < 0.0 {
                g.u[k] = -g.u[k];
            }
        }
        aligned.push(g);
    }
    let mut out = Vec::with_capacity(aligned.len() - 2);
    for w in aligned.windows(3) {
        let mut row = [0.0; 4];
        for (i, slot) in row.iter_mut().enumerate() {
            let deriv = (w[2].u[i] - w[0].u[i]) * (1.0 / (2.0 * h));
            *slot = deriv.dot(&w[1].u[i + 1]);
        }
        out.push(row);
    }
    Ok(out)
}
