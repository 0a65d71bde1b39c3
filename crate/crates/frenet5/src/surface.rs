//! Parametric hypersurfaces Φ: R^4 -> R^5 — jets of partial derivatives,
//! unit normals, and the first/second fundamental forms.

use crate::error::{Error, Result};
use crate::expr::{evaluate, parse, Ast, MultiIndex, PartialTable};
use crate::linalg::{quad_product, Mat4, Vec5};
use std::collections::HashMap;

/// Scale-aware regularity threshold on `‖Φ₁⊗Φ₂⊗Φ₃⊗Φ₄‖ / Π‖Φ_l‖`.
pub const REGULARITY_TOL: f64 = 1e-10;

/// One parametric hypersurface with its five symbolic components and their
/// partial-derivative tables (built eagerly to order 5, immutable afterwards).
#[derive(Debug, Clone)]
pub struct Hypersurface {
    name: String,
    tables: [PartialTable; 5],
}

impl Hypersurface {
    pub fn new(name: impl Into<String>, components: [Ast; 5]) -> Self {
        Hypersurface {
            name: name.into(),
            tables: components.map(PartialTable::new),
        }
    }

    /// Parse the five component expressions and build the surface.
    pub fn from_texts(name: impl Into<String>, texts: &[&str; 5]) -> Result<Self> {
        let mut components = Vec::with_capacity(5);
        for text in texts {
            components.push(parse(text)?);
        }
        Ok(Self::new(
            name,
            components.try_into().expect("exactly five components"),
        ))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn component(&self, i: usize) -> &Ast {
        self.tables[i].root()
    }

    /// Ambient position Φ(params).
    pub fn position(&self, params: &[f64; 4]) -> Result<Vec5> {
        let mut v = [0.0; 5];
        for (slot, table) in v.iter_mut().zip(&self.tables) {
            *slot = evaluate(table.root(), params)?;
        }
        Ok(Vec5(v))
    }
}

/// All partial-derivative vectors Φ_σ of one surface at one parameter point,
/// for |σ| up to the requested order (the order-0 entry is the position).
#[derive(Debug, Clone)]
pub struct SurfaceJet {
    surface_name: String,
    params: [f64; 4],
    order: usize,
    values: HashMap<MultiIndex, Vec5>,
}

impl SurfaceJet {
    pub fn surface_name(&self) -> &str {
        &self.surface_name
    }

    pub fn params(&self) -> &[f64; 4] {
        &self.params
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Φ at the jet's parameter point.
    pub fn position(&self) -> Vec5 {
        self.values[&MultiIndex::empty()]
    }

    /// Φ_σ for a canonical multi-index.
    pub fn value(&self, sigma: MultiIndex) -> Result<Vec5> {
        self.values.get(&sigma).copied().ok_or(Error::Domain {
            message: format!(
                "jet of order {} has no entry for multi-index of order {}",
                self.order,
                sigma.order()
            ),
        })
    }

    /// Φ_σ for raw (possibly unsorted) 1-based parameter indices.
    pub fn partial(&self, indices: &[u8]) -> Result<Vec5> {
        self.value(MultiIndex::new(indices)?)
    }
}

/// Evaluate the jet of `s` at `params` to the given order (1..=5).
///
/// When `order >= 1` the first partials are checked for linear independence:
/// `‖Φ₁⊗Φ₂⊗Φ₃⊗Φ₄‖ / Π‖Φ_l‖ > 1e-10`, else `NotRegular`.
pub fn jet(s: &Hypersurface, params: &[f64; 4], order: usize) -> Result<SurfaceJet> {
    if order == 0 || order > MultiIndex::MAX_ORDER {
        return Err(Error::OrderExceeded { order });
    }
    let mut values = HashMap::new();
    for mi in MultiIndex::all_up_to(order) {
        let mut v = [0.0; 5];
        for (slot, table) in v.iter_mut().zip(&s.tables) {
            *slot = evaluate(table.partial(mi)?, params)?;
        }
        values.insert(mi, Vec5(v));
    }
    let j = SurfaceJet {
        surface_name: s.name.clone(),
        params: *params,
        order,
        values,
    };
    let margin = regularity_margin(&j)?;
    if margin.is_nan() || margin <= REGULARITY_TOL {
        return Err(Error::NotRegular { surface: s.name.clone(), margin });
    }
    Ok(j)
}

fn first_partials(j: &SurfaceJet) -> Result<[Vec5; 4]> {
    Ok([
        j.partial(&[1])?,
        j.partial(&[2])?,
        j.partial(&[3])?,
        j.partial(&[4])?,
    ])
}

/// `‖Φ₁⊗Φ₂⊗Φ₃⊗Φ₄‖ / Π‖Φ_l‖`, or 0 when some Φ_l vanishes.
fn regularity_margin(j: &SurfaceJet) -> Result<f64> {
    let [p1, p2, p3, p4] = first_partials(j)?;
    let denom = p1.norm() * p2.norm() * p3.norm() * p4.norm();
    if denom == 0.0 {
        return Ok(0.0);
    }
    Ok(quad_product(&p1, &p2, &p3, &p4).norm() / denom)
}

/// Unit normal `N = Φ₁⊗Φ₂⊗Φ₃⊗Φ₄ / ‖·‖`.
pub fn unit_normal(j: &SurfaceJet) -> Result<Vec5> {
    let [p1, p2, p3, p4] = first_partials(j)?;
    let q = quad_product(&p1, &p2, &p3, &p4);
    let margin = regularity_margin(j)?;
    if margin.is_nan() || margin <= REGULARITY_TOL {
        return Err(Error::NotRegular { surface: j.surface_name.clone(), margin });
    }
    Ok(q.normalized())
}

/// First fundamental form `Υ_lm = ⟨Φ_l, Φ_m⟩` (symmetric).
pub fn first_fundamental(j: &SurfaceJet) -> Result<Mat4> {
    let p = first_partials(j)?;
    let mut m = [[0.0; 4]; 4];
    for l in 0..4 {
        for c in l..4 {
            let v = p[l].dot(&p[c]);
            m[l][c] = v;
            m[c][l] = v;
        }
    }
    Ok(Mat4(m))
}

/// Second fundamental form `Π_lm = ⟨Φ_lm, N⟩` (symmetric); needs jet order ≥ 2.
pub fn second_fundamental(j: &SurfaceJet, n: &Vec5) -> Result<Mat4> {
    let mut m = [[0.0; 4]; 4];
    for l in 0..4u8 {
        for c in l..4u8 {
            let v = j.partial(&[l + 1, c + 1])?.dot(n);
            m[l as usize][c as usize] = v;
            m[c as usize][l as usize] = v;
        }
    }
    Ok(Mat4(m))
}
