//! Scene files: four named hypersurfaces, a starting point, and optional
//! domain boxes and tolerance overrides, all in one JSON document.
//!
//! ```json
//! {
//!   "surfaces": [
//!     {"name": "X1", "components": ["u1", "u2", "u3", "u4", "0"],
//!      "domain": [[-1, 1], [-1, 1], [-1, 1], [-1, 1]]},
//!     ... exactly four ...
//!   ],
//!   "point": {"params": [["pi/4", "pi/4", "pi/4", "1"], ...]},
//!   "tolerances": {"point": 1e-9, "corrector": 1e-12,
//!                  "max_iter": 25, "min_step": 1e-8}
//! }
//! ```
//!
//! Point parameters may be JSON numbers or constant expression strings
//! (`"pi/4"`, `"sqrt(2)/2"`); surface components are expressions in
//! `u1..u4`.

use std::path::Path;

use frenet5::expr::{parse, evaluate, Ast};
use frenet5::surface::Hypersurface;
use frenet5::tracer::DomainBoxes;
use frenet5::{Error, Result};
use serde_json::Value;

/// Numeric thresholds a scene may override.
#[derive(Debug, Clone, Copy)]
pub struct Tolerances {
    /// Maximum pairwise ambient distance for point agreement.
    pub point: f64,
    /// Corrector residual tolerance (infinity norm).
    pub corrector: f64,
    /// Maximum Newton iterations per correction.
    pub max_iter: usize,
    /// Smallest step length tried when halving.
    pub min_step: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            point: 1e-9,
            corrector: 1e-12,
            max_iter: 25,
            min_step: 1e-8,
        }
    }
}

/// A fully parsed and validated scene.
#[derive(Debug)]
pub struct Scene {
    pub surfaces: [Hypersurface; 4],
    pub domains: DomainBoxes,
    /// Starting parameter tuples, one per surface.
    pub start: [[f64; 4]; 4],
    pub tolerances: Tolerances,
}

impl Scene {
    pub fn surface_names(&self) -> [&str; 4] {
        [
            self.surfaces[0].name(),
            self.surfaces[1].name(),
            self.surfaces[2].name(),
            self.surfaces[3].name(),
        ]
    }
}

fn input_err(message: impl Into<String>) -> Error {
    Error::Domain { message: message.into() }
}

fn as_object<'v>(
    v: &'v Value,
    what: &str,
) -> Result<&'v serde_json::Map<String, Value>> {
    v.as_object().ok_or_else(|| input_err(format!("{what} must be a JSON object")))
}

fn as_array<'v>(v: &'v Value, what: &str) -> Result<&'v Vec<Value>> {
    v.as_array().ok_or_else(|| input_err(format!("{what} must be a JSON array")))
}

fn as_number(v: &Value, what: &str) -> Result<f64> {
    v.as_f64().ok_or_else(|| input_err(format!("{what} must be a number")))
}

fn ast_uses_params(a: &Ast) -> bool {
    match a {
        Ast::Param(_) => true,
        Ast::Num(_) | Ast::Pi | Ast::E => false,
        Ast::Neg(x) | Ast::Apply(_, x) | Ast::PowInt(x, _) => ast_uses_params(x),
        Ast::Add(x, y) | Ast::Sub(x, y) | Ast::Mul(x, y) | Ast::Div(x, y) | Ast::Pow(x, y) => {
            ast_uses_params(x) || ast_uses_params(y)
        }
    }
}

/// A point parameter: a JSON number, or a constant expression string.
fn constant_entry(v: &Value, what: &str) -> Result<f64> {
    match v {
        Value::Number(_) => as_number(v, what),
        Value::String(s) => {
            let ast = parse(s).map_err(|e| match e {
                Error::Parse { offset, message } => Error::Parse {
                    offset,
                    message: format!("{what}: {message}"),
                },
                other => other,
            })?;
            if ast_uses_params(&ast) {
                return Err(input_err(format!(
                    "{what} must be a constant expression (found a parameter u1..u4)"
                )));
            }
            evaluate(&ast, &[0.0; 4])
        }
        _ => Err(input_err(format!("{what} must be a number or expression string"))),
    }
}

fn parse_surface(v: &Value, index: usize) -> Result<(Hypersurface, Option<[[f64; 2]; 4]>)> {
    let obj = as_object(v, &format!("surfaces[{index}]"))?;
    for key in obj.keys() {
        if !matches!(key.as_str(), "name" | "components" | "domain") {
            return Err(input_err(format!("surfaces[{index}]: unknown key \"{key}\"")));
        }
    }
    let name = obj
        .get("name")
        .and_then(Value::as_str)
        .ok_or_else(|| input_err(format!("surfaces[{index}] needs a string \"name\"")))?;
    let comps = as_array(
        obj.get("components")
            .ok_or_else(|| input_err(format!("surface {name} needs \"components\"")))?,
        &format!("surface {name} components"),
    )?;
    if comps.len() != 5 {
        return Err(input_err(format!(
            "surface {name} needs 5 components, got {}",
            comps.len()
        )));
    }
    let mut asts = Vec::with_capacity(5);
    for (k, c) in comps.iter().enumerate() {
        let text = c.as_str().ok_or_else(|| {
            input_err(format!("surface {name} component {}: must be a string", k + 1))
        })?;
        let ast = parse(text).map_err(|e| match e {
            Error::Parse { offset, message } => Error::Parse {
                offset,
                message: format!("surface {name} component {}: {message}", k + 1),
            },
            other => other,
        })?;
        asts.push(ast);
    }
    let asts: [Ast; 5] = asts.try_into().expect("five components");
    let domain = match obj.get("domain") {
        None => None,
        Some(d) => {
            let rows = as_array(d, &format!("surface {name} domain"))?;
            if rows.len() != 4 {
                return Err(input_err(format!(
                    "surface {name} domain needs 4 [lo, hi] ranges, got {}",
                    rows.len()
                )));
            }
            let mut boxes = [[0.0; 2]; 4];
            for (l, row) in rows.iter().enumerate() {
                let pair = as_array(row, &format!("surface {name} domain[{l}]"))?;
                if pair.len() != 2 {
                    return Err(input_err(format!(
                        "surface {name} domain[{l}] must be [lo, hi]"
                    )));
                }
                let lo = as_number(&pair[0], &format!("surface {name} domain[{l}][0]"))?;
                let hi = as_number(&pair[1], &format!("surface {name} domain[{l}][1]"))?;
                if lo.is_nan() || hi.is_nan() || lo > hi {
                    return Err(input_err(format!(
                        "surface {name} domain[{l}]: lo must not exceed hi"
                    )));
                }
                boxes[l] = [lo, hi];
            }
            Some(boxes)
        }
    };
    Ok((Hypersurface::new(name, asts), domain))
}

fn parse_tolerances(v: &Value) -> Result<Tolerances> {
    let obj = as_object(v, "tolerances")?;
    let mut t = Tolerances::default();
    for (key, val) in obj {
        match key.as_str() {
            "point" => t.point = as_number(val, "tolerances.point")?,
            "corrector" => t.corrector = as_number(val, "tolerances.corrector")?,
            "max_iter" => {
                let n = as_number(val, "tolerances.max_iter")?;
                if n < 1.0 || n.fract() != 0.0 {
                    return Err(input_err("tolerances.max_iter must be a positive integer"));
                }
                t.max_iter = n as usize;
            }
            "min_step" => t.min_step = as_number(val, "tolerances.min_step")?,
            other => return Err(input_err(format!("unknown tolerance key \"{other}\""))),
        }
    }
    Ok(t)
}

/// Parse a scene from JSON text.
pub fn parse_scene(text: &str) -> Result<Scene> {
    let root: Value = serde_json::from_str(text).map_err(|e| Error::Parse {
        offset: e.column(),
        message: format!("scene JSON (line {}): {e}", e.line()),
    })?;
    let obj = as_object(&root, "scene")?;
    for key in obj.keys() {
        if !matches!(key.as_str(), "surfaces" | "point" | "tolerances") {
            return Err(input_err(format!("unknown scene key \"{key}\"")));
        }
    }

    let list = as_array(
        obj.get("surfaces").ok_or_else(|| input_err("scene needs \"surfaces\""))?,
        "surfaces",
    )?;
    if list.len() != 4 {
        return Err(input_err(format!("expected 4 surfaces, got {}", list.len())));
    }
    let mut surfaces = Vec::with_capacity(4);
    let mut domains: DomainBoxes = [None, None, None, None];
    for (i, v) in list.iter().enumerate() {
        let (s, d) = parse_surface(v, i)?;
        surfaces.push(s);
        domains[i] = d;
    }
    let surfaces: [Hypersurface; 4] = surfaces.try_into().expect("four surfaces");

    let point = as_object(
        obj.get("point").ok_or_else(|| input_err("scene needs \"point\""))?,
        "point",
    )?;
    for key in point.keys() {
        if key != "params" {
            return Err(input_err(format!("unknown point key \"{key}\"")));
        }
    }
    let tuples = as_array(
        point.get("params").ok_or_else(|| input_err("point needs \"params\""))?,
        "point params",
    )?;
    if tuples.len() != 4 {
        return Err(input_err(format!(
            "point params needs 4 tuples, got {}",
            tuples.len()
        )));
    }
    let mut start = [[0.0; 4]; 4];
    for (i, tuple) in tuples.iter().enumerate() {
        let entries = as_array(tuple, &format!("point params[{i}]"))?;
        if entries.len() != 4 {
            return Err(input_err(format!(
                "point params[{i}] needs 4 values, got {}",
                entries.len()
            )));
        }
        for (l, e) in entries.iter().enumerate() {
            start[i][l] = constant_entry(e, &format!("point params[{i}][{l}]"))?;
        }
    }

    let tolerances = match obj.get("tolerances") {
        Some(v) => parse_tolerances(v)?,
        None => Tolerances::default(),
    };

    for (i, (tuple, dom)) in start.iter().zip(&domains).enumerate() {
        if let Some(boxes) = dom {
            for (l, (v, [lo, hi])) in tuple.iter().zip(boxes).enumerate() {
                if v < lo || v > hi {
                    return Err(input_err(format!(
                        "starting parameter u{} of surface {} is outside its domain box",
                        l + 1,
                        surfaces[i].name()
                    )));
                }
            }
        }
    }

    Ok(Scene { surfaces, domains, start, tolerances })
}

/// Load and validate a scene file.
pub fn load_scene(path: &Path) -> Result<Scene> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| input_err(format!("cannot read {}: {e}", path.display())))?;
    parse_scene(&text)
}
