//! The intersection-curve apparatus: tangent, higher arc-length derivatives,
//! Frenet frame `{t, n, b1, b2, b3}`, and curvatures `k1..k4`.
//!
//! The computation is staged exactly as the underlying derivation:
//!
//! 1. order-5 jets, unit normals `N_i`, tangent `t = ⊗(N₁..N₄)/‖·‖`;
//! 2. first-order parameter velocities `u'` per surface, normal curvatures
//!    `kn_i` from the second fundamental forms, coefficients `a` from the
//!    normal Gram system, `α'' = Σ a_i N_i`, `k1 = ‖α''‖`;
//! 3. `u''`, projections `mu`, coefficients `c`, `α''' = −k1² t + Σ c_i N_i`,
//!    `k1' = ⟨α''', n⟩`;
//! 4. `u'''`, projections `xi`, coefficients `d`,
//!    `α'''' = −3 k1 k1' t + Σ d_i N_i`;
//! 5. frame `b3, b2, b1` by quadruple products, `k2`, `k3`,
//!    `k1'' = ⟨α'''', n⟩ + k1³ + k1 k2²`;
//! 6. `u''''`, projections `eta`, coefficients `m`, the fifth derivative with
//!    tangential coefficient `−3 k1'² − 4 k1 k1'' + k1⁴ + k1² k2²`, and `k4`.
//!
//! Degeneracy is detected level by level (`k1`, `k2`, `k3` below `1e-10`) and
//! the pipeline stops at the first degenerate stage, reporting what exists.

use crate::error::{Error, Result};
use crate::linalg::{quad_product, solve4, Mat4, Vec5};
use crate::surface::{
    first_fundamental, jet, second_fundamental, unit_normal, Hypersurface, SurfaceJet,
};

/// Curvatures below this absolute threshold (after unit-speed normalization)
/// are treated as zero.
pub const DEGENERACY_TOL: f64 = 1e-10;

/// Minimum quadruple-product norm of the four unit normals.
pub const TRANSVERSALITY_TOL: f64 = 1e-8;

/// A point where all four surfaces agree, with the parameter preimages.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntersectionPoint {
    /// Ambient location (average of the four surface positions).
    pub ambient: Vec5,
    /// Parameter 4-tuple per surface, in scene order.
    pub params: [[f64; 4]; 4],
    /// Maximum pairwise distance between the four surface positions.
    pub residual: f64,
}

impl IntersectionPoint {
    /// Default agreement tolerance for the four surface positions.
    pub const DEFAULT_TOL: f64 = 1e-9;

    /// Validate that the four parameter tuples land on a common ambient
    /// point (within `tol`) and build the intersection point.
    pub fn new(
        surfaces: &[Hypersurface; 4],
        params: [[f64; 4]; 4],
        tol: f64,
    ) -> Result<IntersectionPoint> {
        let mut positions = [Vec5::ZERO; 4];
        for (pos, (s, q)) in positions.iter_mut().zip(surfaces.iter().zip(&params)) {
            *pos = s.position(q)?;
        }
        let mut residual = 0.0_f64;
        for i in 0..4 {
            for j in i + 1..4 {
                residual = residual.max((positions[i] - positions[j]).norm());
            }
        }
        if residual > tol {
            return Err(Error::PointMismatch { residual });
        }
        let ambient = (positions[0] + positions[1] + positions[2] + positions[3]) * 0.25;
        Ok(IntersectionPoint { ambient, params, residual })
    }
}

/// How far the Frenet construction got.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrenetStatus {
    /// Full frame and all four curvatures.
    Full,
    /// Construction collapsed: level 1 = k1, 2 = k2, 3 = k3 vanished.
    Degenerate { level: u8 },
}

/// The complete Frenet frame with curvatures, available when the analysis
/// finished without degeneracy.
#[derive(Debug, Clone, Copy)]
pub struct FrenetApparatus {
    pub t: Vec5,
    pub n: Vec5,
    pub b1: Vec5,
    pub b2: Vec5,
    pub b3: Vec5,
    pub kappa1: f64,
    pub kappa2: f64,
    pub kappa3: f64,
    pub kappa4: f64,
    pub kappa1_prime: f64,
    pub kappa1_second: f64,
}

/// Everything `analyze` computes, stage by stage. Fields of later stages are
/// `None` when an earlier stage degenerated.
#[derive(Debug, Clone)]
pub struct CurveAnalysis {
    pub point: IntersectionPoint,
    pub normals: [Vec5; 4],
    /// Gram matrix of the unit normals.
    pub gram: Mat4,
    pub first_fundamentals: [Mat4; 4],
    pub second_fundamentals: [Mat4; 4],
    pub status: FrenetStatus,
    pub tangent: Vec5,
    /// First parameter derivatives per surface.
    pub uprime: [[f64; 4]; 4],
    /// Normal curvatures per surface.
    pub kappa_n: [f64; 4],
    /// Coefficients of `α''` in the normal basis.
    pub a: [f64; 4],
    pub alpha2: Vec5,
    pub kappa1: f64,
    /// Principal normal `n = α''/k1`.
    pub normal: Option<Vec5>,
    pub usecond: Option<[[f64; 4]; 4]>,
    /// Projections `⟨α''' + k1² t, N_r⟩` assembled from the chain-rule tail.
    pub mu: Option<[f64; 4]>,
    /// Coefficients of the normal part of `α'''`.
    pub c: Option<[f64; 4]>,
    pub alpha3: Option<Vec5>,
    pub kappa1_prime: Option<f64>,
    pub uthird: Option<[[f64; 4]; 4]>,
    /// Projections `⟨α'''' + 3 k1 k1' t, N_r⟩`.
    pub xi: Option<[f64; 4]>,
    /// Coefficients of the normal part of `α''''`.
    pub d: Option<[f64; 4]>,
    pub alpha4: Option<Vec5>,
    pub kappa2: Option<f64>,
    pub b1: Option<Vec5>,
    pub b2: Option<Vec5>,
    pub b3: Option<Vec5>,
    pub kappa3: Option<f64>,
    pub kappa1_second: Option<f64>,
    pub ufourth: Option<[[f64; 4]; 4]>,
    /// Projections of the fifth derivative's normal part.
    pub eta: Option<[f64; 4]>,
    /// Coefficients of the normal part of the fifth derivative.
    pub m: Option<[f64; 4]>,
    pub alpha5: Option<Vec5>,
    pub kappa4: Option<f64>,
}

impl CurveAnalysis {
    /// The full Frenet apparatus, when the analysis did not degenerate.
    pub fn frenet(&self) -> Option<FrenetApparatus> {
        Some(FrenetApparatus {
            t: self.tangent,
            n: self.normal?,
            b1: self.b1?,
            b2: self.b2?,
            b3: self.b3?,
            kappa1: self.kappa1,
            kappa2: self.kappa2?,
            kappa3: self.kappa3?,
            kappa4: self.kappa4?,
            kappa1_prime: self.kappa1_prime?,
            kappa1_second: self.kappa1_second?,
        })
    }
}

/// Gram matrix `⟨N_r, N_s⟩` of the four normals.
pub fn gram_matrix(normals: &[Vec5; 4]) -> Mat4 {
    let mut g = [[0.0; 4]; 4];
    for r in 0..4 {
        for s in r..4 {
            let v = normals[r].dot(&normals[s]);
            g[r][s] = v;
            g[s][r] = v;
        }
    }
    Mat4(g)
}

/// Unit tangent of the intersection curve: the normalized quadruple product
/// of the four unit normals, in scene surface order.
pub fn transversal_tangent(normals: &[Vec5; 4]) -> Result<Vec5> {
    let q = quad_product(&normals[0], &normals[1], &normals[2], &normals[3]);
    let norm = q.norm();
    if norm < TRANSVERSALITY_TOL {
        return Err(Error::NonTransversal { norm });
    }
    Ok(q * (1.0 / norm))
}

/// Chain-rule tail `T_k` of the arc-length derivative of Φ(u(s)): everything
/// in `α^(k)` except the `Σ Φ_i u_i^(k)` term. `lower` holds the parameter
/// derivatives of orders `1..k` for this surface.
fn chain_tail(j: &SurfaceJet, order: usize, lower: &[[f64; 4]]) -> Result<Vec5> {
    debug_assert_eq!(lower.len() + 1, order);
    let mut t = Vec5::ZERO;
    let phi2 = |i: usize, jj: usize| j.partial(&[i as u8 + 1, jj as u8 + 1]);
    let phi3 =
        |i: usize, jj: usize, k: usize| j.partial(&[i as u8 + 1, jj as u8 + 1, k as u8 + 1]);
    let phi4 = |i: usize, jj: usize, k: usize, l: usize| {
        j.partial(&[i as u8 + 1, jj as u8 + 1, k as u8 + 1, l as u8 + 1])
    };
    match order {
        2 => {
            let u1 = &lower[0];
            for i in 0..4 {
                for jj in 0..4 {
                    t = t + phi2(i, jj)? * (u1[i] * u1[jj]);
                }
            }
        }
        3 => {
            let (u1, u2) = (&lower[0], &lower[1]);
            for i in 0..4 {
                for jj in 0..4 {
                    t = t + phi2(i, jj)? * (3.0 * u2[i] * u1[jj]);
                    for k in 0..4 {
                        t = t + phi3(i, jj, k)? * (u1[i] * u1[jj] * u1[k]);
                    }
                }
            }
        }
        4 => {
            let (u1, u2, u3) = (&lower[0], &lower[1], &lower[2]);
            for i in 0..4 {
                for jj in 0..4 {
                    t = t + phi2(i, jj)? * (4.0 * u3[i] * u1[jj] + 3.0 * u2[i] * u2[jj]);
                    for k in 0..4 {
                        t = t + phi3(i, jj, k)? * (6.0 * u2[i] * u1[jj] * u1[k]);
                        for l in 0..4 {
                            t = t + phi4(i, jj, k, l)? * (u1[i] * u1[jj] * u1[k] * u1[l]);
                        }
                    }
                }
            }
        }
        5 => {
            let (u1, u2, u3, u4) = (&lower[0], &lower[1], &lower[2], &lower[3]);
            for i in 0..4 {
                for jj in 0..4 {
                    t = t + phi2(i, jj)? * (5.0 * u4[i] * u1[jj] + 10.0 * u3[i] * u2[jj]);
                    for k in 0..4 {
                        t = t
                            + phi3(i, jj, k)?
                                * (10.0 * u3[i] * u1[jj] * u1[k]
                                    + 15.0 * u2[i] * u2[jj] * u1[k]);
                        for l in 0..4 {
                            t = t
                                + phi4(i, jj, k, l)? * (10.0 * u2[i] * u1[jj] * u1[k] * u1[l]);
                            for r in 0..4 {
                                let phi5 = j.partial(&[
                                    i as u8 + 1,
                                    jj as u8 + 1,
                                    k as u8 + 1,
                                    l as u8 + 1,
                                    r as u8 + 1,
                                ])?;
                                t = t + phi5 * (u1[i] * u1[jj] * u1[k] * u1[l] * u1[r]);
                            }
                        }
                    }
                }
            }
        }
        _ => {
            return Err(Error::Domain {
                message: format!("chain tail undefined for order {order}"),
            })
        }
    }
    Ok(t)
}

/// Solve `Υ u^(k) = ⟨rhs − tail, Φ_j⟩` on one surface.
fn solve_param_system(j: &SurfaceJet, tail: &Vec5, rhs: &Vec5) -> Result<[f64; 4]> {
    let g = first_fundamental(j)?;
    let reduced = *rhs - *tail;
    let mut b = [0.0; 4];
    for (slot, k) in b.iter_mut().zip(1..=4u8) {
        *slot = reduced.dot(&j.partial(&[k])?);
    }
    solve4(&g, &b)
}

/// Parameter derivatives of order `k` (1..=4) on one surface: solves
/// `Υ u^(k) = ⟨α^(k) − T_k, Φ_j⟩` where `T_k` is the chain-rule tail built
/// from the lower-order derivatives (`lower` = `[u', .., u^(k-1)]`).
pub fn param_derivs(
    j: &SurfaceJet,
    order: usize,
    lower: &[[f64; 4]],
    rhs: &Vec5,
) -> Result<[f64; 4]> {
    if !(1..=4).contains(&order) {
        return Err(Error::Domain {
            message: format!("parameter derivatives support orders 1..=4, got {order}"),
        });
    }
    if lower.len() + 1 != order {
        return Err(Error::Domain {
            message: format!(
                "order {order} needs {} lower-order derivative tuples, got {}",
                order - 1,
                lower.len()
            ),
        });
    }
    let tail = if order == 1 { Vec5::ZERO } else { chain_tail(j, order, lower)? };
    solve_param_system(j, &tail, rhs)
}

/// Normal curvature `kn = Σ_lm Π_lm u_l' u_m'` (full symmetric double sum).
pub fn normal_curvature(pi: &Mat4, uprime: &[f64; 4]) -> f64 {
    let mut acc = 0.0;
    for (row, ul) in pi.0.iter().zip(uprime) {
        for (v, um) in row.iter().zip(uprime) {
            acc += v * ul * um;
        }
    }
    acc
}

/// Second derivative: solve the normal Gram system `G a = kn` and assemble
/// `α'' = Σ a_i N_i`.
pub fn second_derivative(normals: &[Vec5; 4], kappa_n: &[f64; 4]) -> Result<([f64; 4], Vec5)> {
    let g = gram_matrix(normals);
    let a = solve4(&g, kappa_n)?;
    let mut alpha2 = Vec5::ZERO;
    for (ai, ni) in a.iter().zip(normals) {
        alpha2 = alpha2 + *ni * *ai;
    }
    Ok((a, alpha2))
}

/// Projections `⟨T_k, N_r⟩` of each surface's chain-rule tail onto its own
/// normal; each surface uses its OWN parameter derivatives.
fn tail_projections(
    jets: &[SurfaceJet; 4],
    normals: &[Vec5; 4],
    order: usize,
    lowers: &[&[[f64; 4]; 4]],
) -> Result<[f64; 4]> {
    let mut out = [0.0; 4];
    for r in 0..4 {
        let lower: Vec<[f64; 4]> = lowers.iter().map(|l| l[r]).collect();
        let tail = chain_tail(&jets[r], order, &lower)?;
        out[r] = tail.dot(&normals[r]);
    }
    Ok(out)
}

fn assemble(normals: &[Vec5; 4], coeffs: &[f64; 4], tangential: f64, t: &Vec5) -> Vec5 {
    let mut v = *t * tangential;
    for (ci, ni) in coeffs.iter().zip(normals) {
        v = v + *ni * *ci;
    }
    v
}

/// Third derivative: projections `mu_r = 3Σ⟨Φ_ij,N_r⟩u_i''u_j' +
/// Σ⟨Φ_ijk,N_r⟩u'u'u'`, Gram solve for `c`, and
/// `α''' = −k1² t + Σ c_i N_i`.
pub fn third_derivative(
    jets: &[SurfaceJet; 4],
    t: &Vec5,
    kappa1: f64,
    uprime: &[[f64; 4]; 4],
    usecond: &[[f64; 4]; 4],
    normals: &[Vec5; 4],
) -> Result<([f64; 4], Vec5)> {
    if kappa1 <= DEGENERACY_TOL {
        return Err(Error::DegenerateFrenet { level: 1 });
    }
    let mu = tail_projections(jets, normals, 3, &[uprime, usecond])?;
    let c = solve4(&gram_matrix(normals), &mu)?;
    Ok((c, assemble(normals, &c, -kappa1 * kappa1, t)))
}

/// Fourth derivative: projections `xi_r` (weights 4, 3, 6, 1), Gram solve for
/// `d`, and `α'''' = −3 k1 k1' t + Σ d_i N_i`.
// The argument list mirrors the inputs of this pipeline stage one-for-one.
#[allow(clippy::too_many_arguments)]
pub fn fourth_derivative(
    jets: &[SurfaceJet; 4],
    t: &Vec5,
    kappa1: f64,
    kappa1_prime: f64,
    uprime: &[[f64; 4]; 4],
    usecond: &[[f64; 4]; 4],
    uthird: &[[f64; 4]; 4],
    normals: &[Vec5; 4],
) -> Result<([f64; 4], Vec5)> {
    if kappa1 <= DEGENERACY_TOL {
        return Err(Error::DegenerateFrenet { level: 1 });
    }
    let xi = tail_projections(jets, normals, 4, &[uprime, usecond, uthird])?;
    let d = solve4(&gram_matrix(normals), &xi)?;
    Ok((d, assemble(normals, &d, -3.0 * kappa1 * kappa1_prime, t)))
}

/// Fifth derivative: projections `eta_r` (weights 5, 10, 10, 15, 10, 1),
/// Gram solve for `m`, and the assembly with tangential coefficient
/// `−3 k1'² − 4 k1 k1'' + k1⁴ + k1² k2²`.
#[allow(clippy::too_many_arguments)]
pub fn fifth_derivative(
    jets: &[SurfaceJet; 4],
    t: &Vec5,
    kappa1: f64,
    kappa1_prime: f64,
    kappa1_second: f64,
    kappa2: f64,
    uprime: &[[f64; 4]; 4],
    usecond: &[[f64; 4]; 4],
    uthird: &[[f64; 4]; 4],
    ufourth: &[[f64; 4]; 4],
    normals: &[Vec5; 4],
) -> Result<([f64; 4], Vec5)> {
    if kappa1 <= DEGENERACY_TOL {
        return Err(Error::DegenerateFrenet { level: 1 });
    }
    if kappa2 <= DEGENERACY_TOL {
        return Err(Error::DegenerateFrenet { level: 2 });
    }
    let eta = tail_projections(jets, normals, 5, &[uprime, usecond, uthird, ufourth])?;
    let m = solve4(&gram_matrix(normals), &eta)?;
    let tangential = -3.0 * kappa1_prime * kappa1_prime - 4.0 * kappa1 * kappa1_second
        + kappa1.powi(4)
        + kappa1 * kappa1 * kappa2 * kappa2;
    Ok((m, assemble(normals, &m, tangential, t)))
}

/// Frenet frame from the first four arc-length derivatives (unit speed):
/// `b3 = ⊗(α',α'',α''',α'''')/‖·‖`, `b2 = ⊗(b3,α',α'',α''')/‖·‖`,
/// `b1 = ⊗(b2,b3,α',α'')/‖·‖`, `n = α''/k1`.
///
/// Fails with `DegenerateFrenet` carrying the first level whose curvature
/// residual (after unit-speed normalization) drops below `1e-10`.
pub fn frenet_frame(
    alpha1: &Vec5,
    alpha2: &Vec5,
    alpha3: &Vec5,
    alpha4: &Vec5,
) -> Result<(Vec5, Vec5, Vec5, Vec5)> {
    if alpha1.norm() <= DEGENERACY_TOL {
        return Err(Error::DegenerateFrenet { level: 1 });
    }
    let kappa1 = alpha2.norm();
    if kappa1 <= DEGENERACY_TOL {
        return Err(Error::DegenerateFrenet { level: 1 });
    }
    let t = alpha1.normalized();
    let n = *alpha2 * (1.0 / kappa1);
    let v3 = *alpha3 - t * alpha3.dot(&t) - n * alpha3.dot(&n);
    let kappa2 = v3.norm() / kappa1;
    if kappa2 <= DEGENERACY_TOL {
        return Err(Error::DegenerateFrenet { level: 2 });
    }
    let e3 = v3.normalized();
    let v4 = *alpha4 - t * alpha4.dot(&t) - n * alpha4.dot(&n) - e3 * alpha4.dot(&e3);
    let kappa3 = v4.norm() / (kappa1 * kappa2);
    if kappa3 <= DEGENERACY_TOL {
        return Err(Error::DegenerateFrenet { level: 3 });
    }
    let b3 = quad_product(alpha1, alpha2, alpha3, alpha4).normalized();
    let b2 = quad_product(&b3, alpha1, alpha2, alpha3).normalized();
    let b1 = quad_product(&b2, &b3, alpha1, alpha2).normalized();
    Ok((n, b1, b2, b3))
}

/// Curvatures from the derivatives and binormals:
/// `k1 = ‖α''‖`, `k2 = ⟨α''',b1⟩/k1`, `k3 = ⟨α'''',b2⟩/(k1 k2)`,
/// `k4 = ⟨α''''',b3⟩/(k1 k2 k3)`.
#[allow(clippy::too_many_arguments)]
pub fn curvatures(
    alpha2: &Vec5,
    alpha3: &Vec5,
    alpha4: &Vec5,
    alpha5: &Vec5,
    b1: &Vec5,
    b2: &Vec5,
    b3: &Vec5,
) -> Result<[f64; 4]> {
    let kappa1 = alpha2.norm();
    if kappa1 <= DEGENERACY_TOL {
        return Err(Error::DegenerateFrenet { level: 1 });
    }
    let kappa2 = alpha3.dot(b1) / kappa1;
    if kappa2 <= DEGENERACY_TOL {
        return Err(Error::DegenerateFrenet { level: 2 });
    }
    let kappa3 = alpha4.dot(b2) / (kappa1 * kappa2);
    if kappa3 <= DEGENERACY_TOL {
        return Err(Error::DegenerateFrenet { level: 3 });
    }
    let kappa4 = alpha5.dot(b3) / (kappa1 * kappa2 * kappa3);
    Ok([kappa1, kappa2, kappa3, kappa4])
}

/// Run the full staged pipeline at one intersection point.
///
/// Every intermediate is retained in the report; when a curvature level
/// degenerates the later fields stay `None` and `status` records the level.
pub fn analyze(surfaces: &[Hypersurface; 4], point: &IntersectionPoint) -> Result<CurveAnalysis> {
    let mut jets_vec = Vec::with_capacity(4);
    for (s, q) in surfaces.iter().zip(&point.params) {
        jets_vec.push(jet(s, q, 5)?);
    }
    let jets: [SurfaceJet; 4] = jets_vec.try_into().expect("four jets");

    let mut normals = [Vec5::ZERO; 4];
    for (slot, j) in normals.iter_mut().zip(&jets) {
        *slot = unit_normal(j)?;
    }
    let gram = gram_matrix(&normals);
    let tangent = transversal_tangent(&normals)?;

    let mut first_fundamentals = [Mat4::default(); 4];
    let mut second_fundamentals = [Mat4::default(); 4];
    let mut uprime = [[0.0; 4]; 4];
    let mut kappa_n = [0.0; 4];
    for i in 0..4 {
        first_fundamentals[i] = first_fundamental(&jets[i])?;
        second_fundamentals[i] = second_fundamental(&jets[i], &normals[i])?;
        uprime[i] = param_derivs(&jets[i], 1, &[], &tangent)?;
        kappa_n[i] = normal_curvature(&second_fundamentals[i], &uprime[i]);
    }

    let (a, alpha2) = second_derivative(&normals, &kappa_n)?;
    let kappa1 = alpha2.norm();

    let mut report = CurveAnalysis {
        point: *point,
        normals,
        gram,
        first_fundamentals,
        second_fundamentals,
        status: FrenetStatus::Degenerate { level: 1 },
        tangent,
        uprime,
        kappa_n,
        a,
        alpha2,
        kappa1,
        normal: None,
        usecond: None,
        mu: None,
        c: None,
        alpha3: None,
        kappa1_prime: None,
        uthird: None,
        xi: None,
        d: None,
        alpha4: None,
        kappa2: None,
        b1: None,
        b2: None,
        b3: None,
        kappa3: None,
        kappa1_second: None,
        ufourth: None,
        eta: None,
        m: None,
        alpha5: None,
        kappa4: None,
    };
    if kappa1 <= DEGENERACY_TOL {
        return Ok(report);
    }

    // Stage 2: second parameter derivatives and the third curve derivative.
    let n = alpha2 * (1.0 / kappa1);
    let mut usecond = [[0.0; 4]; 4];
    for i in 0..4 {
        usecond[i] = param_derivs(&jets[i], 2, &[uprime[i]], &alpha2)?;
    }
    let mu = tail_projections(&jets, &normals, 3, &[&uprime, &usecond])?;
    let c = solve4(&gram, &mu)?;
    let alpha3 = assemble(&normals, &c, -kappa1 * kappa1, &tangent);
    let kappa1_prime = alpha3.dot(&n);

    let mut uthird = [[0.0; 4]; 4];
    for i in 0..4 {
        uthird[i] = param_derivs(&jets[i], 3, &[uprime[i], usecond[i]], &alpha3)?;
    }
    let xi = tail_projections(&jets, &normals, 4, &[&uprime, &usecond, &uthird])?;
    let d = solve4(&gram, &xi)?;
    let alpha4 = assemble(&normals, &d, -3.0 * kappa1 * kappa1_prime, &tangent);

    report.normal = Some(n);
    report.usecond = Some(usecond);
    report.mu = Some(mu);
    report.c = Some(c);
    report.alpha3 = Some(alpha3);
    report.kappa1_prime = Some(kappa1_prime);
    report.uthird = Some(uthird);
    report.xi = Some(xi);
    report.d = Some(d);
    report.alpha4 = Some(alpha4);
    report.status = FrenetStatus::Degenerate { level: 2 };

    // Stage 3: the frame, or the degeneracy level that prevents it.
    let (_, b1, b2, b3) = match frenet_frame(&tangent, &alpha2, &alpha3, &alpha4) {
        Ok(frame) => frame,
        Err(Error::DegenerateFrenet { level: 2 }) => return Ok(report),
        Err(Error::DegenerateFrenet { level: 3 }) => {
            // k2 is still well-defined; recover it from the Gram-Schmidt
            // residual of the third derivative.
            let v3 = alpha3 - tangent * alpha3.dot(&tangent) - n * alpha3.dot(&n);
            report.kappa2 = Some(v3.norm() / kappa1);
            report.status = FrenetStatus::Degenerate { level: 3 };
            return Ok(report);
        }
        Err(e) => return Err(e),
    };

    let kappa2 = alpha3.dot(&b1) / kappa1;
    let kappa3 = alpha4.dot(&b2) / (kappa1 * kappa2);
    let kappa1_second = alpha4.dot(&n) + kappa1.powi(3) + kappa1 * kappa2 * kappa2;

    // Stage 4: fourth parameter derivatives and the fifth curve derivative.
    let mut ufourth = [[0.0; 4]; 4];
    for i in 0..4 {
        ufourth[i] = param_derivs(&jets[i], 4, &[uprime[i], usecond[i], uthird[i]], &alpha4)?;
    }
    let eta = tail_projections(&jets, &normals, 5, &[&uprime, &usecond, &uthird, &ufourth])?;
    let m = solve4(&gram, &eta)?;
    let tangential = -3.0 * kappa1_prime * kappa1_prime - 4.0 * kappa1 * kappa1_second
        + kappa1.powi(4)
        + kappa1 * kappa1 * kappa2 * kappa2;
    let alpha5 = assemble(&normals, &m, tangential, &tangent);
    let kappa4 = alpha5.dot(&b3) / (kappa1 * kappa2 * kappa3);

    report.kappa2 = Some(kappa2);
    report.b1 = Some(b1);
    report.b2 = Some(b2);
    report.b3 = Some(b3);
    report.kappa3 = Some(kappa3);
    report.kappa1_second = Some(kappa1_second);
    report.ufourth = Some(ufourth);
    report.eta = Some(eta);
    report.m = Some(m);
    report.alpha5 = Some(alpha5);
    report.kappa4 = Some(kappa4);
    report.status = FrenetStatus::Full;
    Ok(report)
}
