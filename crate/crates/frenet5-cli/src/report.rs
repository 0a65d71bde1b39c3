//! Report rendering: a deterministic JSON document, an aligned text table,
//! and the trace CSV.
//!
//! JSON is emitted by a hand-rolled writer so that field order, indentation,
//! and number formatting (17 significant digits) are fixed — the same input
//! always produces byte-identical output. The text table carries 6
//! significant digits; every number it shows also appears in the JSON
//! document.

use frenet5::curve::{CurveAnalysis, FrenetStatus};
use frenet5::darboux::{DarbouxFrame, GeodesicData};
use frenet5::linalg::{Mat4, Vec5};

use crate::fmt::{json_num, sig6};

/// A JSON value with deterministic emission order.
pub enum J {
    Null,
    Str(String),
    Num(f64),
    Arr(Vec<J>),
    Obj(Vec<(&'static str, J)>),
}

impl J {
    pub fn vec5(v: &Vec5) -> J {
        J::Arr(v.iter().map(|&x| J::Num(x)).collect())
    }

    pub fn row4(v: &[f64; 4]) -> J {
        J::Arr(v.iter().copied().map(J::Num).collect())
    }

    pub fn rows4(v: &[[f64; 4]; 4]) -> J {
        J::Arr(v.iter().map(J::row4).collect())
    }

    pub fn mat4(m: &Mat4) -> J {
        J::rows4(&m.0)
    }

    pub fn opt(v: Option<J>) -> J {
        v.unwrap_or(J::Null)
    }

    /// Render with 2-space indentation and LF line endings.
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.emit(&mut out, 0);
        out.push('\n');
        out
    }

    fn emit(&self, out: &mut String, depth: usize) {
        match self {
            J::Null => out.push_str("null"),
            J::Str(s) => {
                out.push('"');
                for ch in s.chars() {
                    match ch {
                        '"' => out.push_str("\\\""),
                        '\\' => out.push_str("\\\\"),
                        c if (c as u32) < 0x20 => {
                            out.push_str(&format!("\\u{:04x}", c as u32))
                        }
                        c => out.push(c),
                    }
                }
                out.push('"');
            }
            J::Num(x) => out.push_str(&json_num(*x)),
            J::Arr(items) => {
                if items.is_empty() {
                    out.push_str("[]");
                    return;
                }
                // Arrays of scalars stay on one line; nested structures wrap.
                let scalar = items.iter().all(|i| matches!(i, J::Null | J::Num(_) | J::Str(_)));
                if scalar {
                    out.push('[');
                    for (k, item) in items.iter().enumerate() {
                        if k > 0 {
                            out.push_str(", ");
                        }
                        item.emit(out, depth);
                    }
                    out.push(']');
                } else {
                    out.push_str("[\n");
                    for (k, item) in items.iter().enumerate() {
                        indent(out, depth + 1);
                        item.emit(out, depth + 1);
                        if k + 1 < items.len() {
                            out.push(',');
                        }
                        out.push('\n');
                    }
                    indent(out, depth);
                    out.push(']');
                }
            }
            J::Obj(fields) => {
                if fields.is_empty() {
                    out.push_str("{}");
                    return;
                }
                out.push_str("{\n");
                for (k, (name, value)) in fields.iter().enumerate() {
                    indent(out, depth + 1);
                    out.push('"');
                    out.push_str(name);
                    out.push_str("\": ");
                    value.emit(out, depth + 1);
                    if k + 1 < fields.len() {
                        out.push(',');
                    }
                    out.push('\n');
                }
                indent(out, depth);
                out.push('}');
            }
        }
    }
}

fn indent(out: &mut String, depth: usize) {
    for _ in 0..depth {
        out.push_str("  ");
    }
}

pub fn status_str(status: &FrenetStatus) -> String {
    match status {
        FrenetStatus::Full => "full".to_string(),
        FrenetStatus::Degenerate { level } => format!("degenerate_at_level_{level}"),
    }
}

/// The per-surface Darboux block of a report.
pub type DarbouxBlock = [(DarbouxFrame, GeodesicData); 4];

/// The full analyze document: every pipeline intermediate, for auditing.
pub fn analyze_json(names: &[&str; 4], r: &CurveAnalysis, darboux: &DarbouxBlock) -> String {
    let point = J::Obj(vec![
        ("ambient", J::vec5(&r.point.ambient)),
        ("params", J::rows4(&r.point.params)),
        ("residual", J::Num(r.point.residual)),
    ]);
    let darboux_json = J::Arr(
        darboux
            .iter()
            .enumerate()
            .map(|(i, (frame, geo))| {
                J::Obj(vec![
                    ("surface", J::Str(names[i].to_string())),
                    ("frame", J::Arr(frame.u.iter().map(J::vec5).collect())),
                    ("kappa1g", J::Num(geo.kappa1g)),
                    (
                        "tau",
                        J::Arr(geo.tau.iter().copied().map(J::Num).collect()),
                    ),
                    ("dnds", J::vec5(&geo.dnds)),
                ])
            })
            .collect(),
    );
    let doc = J::Obj(vec![
        ("status", J::Str(status_str(&r.status))),
        (
            "surfaces",
            J::Arr(names.iter().map(|n| J::Str(n.to_string())).collect()),
        ),
        ("point", point),
        ("normals", J::Arr(r.normals.iter().map(J::vec5).collect())),
        ("gram", J::mat4(&r.gram)),
        (
            "first_fundamentals",
            J::Arr(r.first_fundamentals.iter().map(J::mat4).collect()),
        ),
        (
            "second_fundamentals",
            J::Arr(r.second_fundamentals.iter().map(J::mat4).collect()),
        ),
        ("tangent", J::vec5(&r.tangent)),
        ("uprime", J::rows4(&r.uprime)),
        ("kappa_n", J::row4(&r.kappa_n)),
        ("a", J::row4(&r.a)),
        ("alpha2", J::vec5(&r.alpha2)),
        ("kappa1", J::Num(r.kappa1)),
        ("normal", J::opt(r.normal.as_ref().map(J::vec5))),
        ("usecond", J::opt(r.usecond.as_ref().map(J::rows4))),
        ("mu", J::opt(r.mu.as_ref().map(J::row4))),
        ("c", J::opt(r.c.as_ref().map(J::row4))),
        ("alpha3", J::opt(r.alpha3.as_ref().map(J::vec5))),
        ("kappa1_prime", J::opt(r.kappa1_prime.map(J::Num))),
        ("uthird", J::opt(r.uthird.as_ref().map(J::rows4))),
        ("xi", J::opt(r.xi.as_ref().map(J::row4))),
        ("d", J::opt(r.d.as_ref().map(J::row4))),
        ("alpha4", J::opt(r.alpha4.as_ref().map(J::vec5))),
        ("kappa2", J::opt(r.kappa2.map(J::Num))),
        ("b1", J::opt(r.b1.as_ref().map(J::vec5))),
        ("b2", J::opt(r.b2.as_ref().map(J::vec5))),
        ("b3", J::opt(r.b3.as_ref().map(J::vec5))),
        ("kappa3", J::opt(r.kappa3.map(J::Num))),
        ("kappa1_second", J::opt(r.kappa1_second.map(J::Num))),
        ("ufourth", J::opt(r.ufourth.as_ref().map(J::rows4))),
        ("eta", J::opt(r.eta.as_ref().map(J::row4))),
        ("m", J::opt(r.m.as_ref().map(J::row4))),
        ("alpha5", J::opt(r.alpha5.as_ref().map(J::vec5))),
        ("kappa4", J::opt(r.kappa4.map(J::Num))),
        ("darboux", darboux_json),
    ]);
    doc.render()
}

fn tuple5(v: &Vec5) -> String {
    // Components below the vector's own floating-point noise floor read as
    // exact zeros in the table; the JSON document keeps the raw values.
    let scale = v.iter().fold(0.0f64, |m, &x| m.max(x.abs()));
    let parts: Vec<String> = v
        .iter()
        .map(|&x| if x.abs() < scale * 1e-13 { "0".to_string() } else { sig6(x) })
        .collect();
    format!("({})", parts.join(", "))
}

fn opt_vec(v: &Option<Vec5>) -> String {
    v.as_ref().map(tuple5).unwrap_or_else(|| "-".to_string())
}

fn opt_num(v: Option<f64>) -> String {
    v.map(sig6).unwrap_or_else(|| "-".to_string())
}

/// The aligned text table (6 significant digits).
pub fn analyze_text(names: &[&str; 4], r: &CurveAnalysis, darboux: &DarbouxBlock) -> String {
    let mut out = String::new();
    let mut line = |s: String| {
        out.push_str(&s);
        out.push('\n');
    };
    line(format!("status: {}", status_str(&r.status)));
    line(format!("surfaces: {}", names.join(", ")));
    line(format!("point x: {}", tuple5(&r.point.ambient)));
    line(format!("agreement residual: {}", sig6(r.point.residual)));
    line(format!("tangent t: {}", tuple5(&r.tangent)));
    line(format!("normal n: {}", opt_vec(&r.normal)));
    line(format!("binormal b1: {}", opt_vec(&r.b1)));
    line(format!("binormal b2: {}", opt_vec(&r.b2)));
    line(format!("binormal b3: {}", opt_vec(&r.b3)));
    line(format!("kappa1: {}", sig6(r.kappa1)));
    line(format!("kappa2: {}", opt_num(r.kappa2)));
    line(format!("kappa3: {}", opt_num(r.kappa3)));
    line(format!("kappa4: {}", opt_num(r.kappa4)));
    line(format!("kappa1': {}", opt_num(r.kappa1_prime)));
    line(format!("kappa1'': {}", opt_num(r.kappa1_second)));
    for (i, (_, geo)) in darboux.iter().enumerate() {
        let tau: Vec<String> = geo.tau.iter().copied().map(sig6).collect();
        line(format!(
            "surface {}: kn = {}, a = {}, kappa1g = {}, tau = ({})",
            names[i],
            sig6(r.kappa_n[i]),
            sig6(r.a[i]),
            sig6(geo.kappa1g),
            tau.join(", ")
        ));
    }
    out
}

/// CSV column block appended by `--profile`.
pub const PROFILE_COLUMNS: &str = ",k1,k2,k3,k4,kn1,kn2,kn3,kn4,k1g1,k1g2,k1g3,k1g4";

/// One profile cell row: curvatures at a point, empty cells where the
/// apparatus is degenerate.
pub fn profile_cells(r: &CurveAnalysis, geo: &[(DarbouxFrame, GeodesicData); 4]) -> String {
    let opt = |v: Option<f64>| v.map(json_num).unwrap_or_default();
    let mut cells = vec![
        json_num(r.kappa1),
        opt(r.kappa2),
        opt(r.kappa3),
        opt(r.kappa4),
    ];
    cells.extend(r.kappa_n.iter().map(|&k| json_num(k)));
    cells.extend(geo.iter().map(|(_, g)| json_num(g.kappa1g)));
    cells.join(",")
}
