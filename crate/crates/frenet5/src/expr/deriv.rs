//! Symbolic differentiation and tree simplification.
//!
//! `differentiate` applies the textbook rules and then runs `simplify`, which
//! folds constant subtrees (only when the folded value is finite, so domain
//! errors still surface at evaluation time) and normalizes trivial algebra
//! (`x+0`, `x*1`, `x*0`, `x^1`, …). Constant whole-number exponents are
//! rewritten from `Pow` to `PowInt`, keeping the exact power rule and `powi`
//! evaluation on the hot path.

use super::{Ast, Func};

fn num(v: f64) -> Ast {
    Ast::Num(v)
}
fn neg(x: Ast) -> Ast {
    Ast::Neg(Box::new(x))
}
fn add(x: Ast, y: Ast) -> Ast {
    Ast::Add(Box::new(x), Box::new(y))
}
fn sub(x: Ast, y: Ast) -> Ast {
    Ast::Sub(Box::new(x), Box::new(y))
}
fn mul(x: Ast, y: Ast) -> Ast {
    Ast::Mul(Box::new(x), Box::new(y))
}
fn div(x: Ast, y: Ast) -> Ast {
    Ast::Div(Box::new(x), Box::new(y))
}
fn powi(x: Ast, k: i32) -> Ast {
    Ast::PowInt(Box::new(x), k)
}
fn apply(f: Func, x: Ast) -> Ast {
    Ast::Apply(f, Box::new(x))
}

/// Power node with a constant exponent, choosing the integer form when the
/// exponent is a whole number.
fn pow_const(base: Ast, c: f64) -> Ast {
    if c.fract() == 0.0 && c.abs() <= i32::MAX as f64 {
        powi(base, c as i32)
    } else {
        Ast::Pow(Box::new(base), Box::new(num(c)))
    }
}

/// Exact partial derivative of `a` with respect to parameter `k` (1-based).
pub fn differentiate(a: &Ast, k: u8) -> Ast {
    simplify(d(a, k))
}

fn d(a: &Ast, k: u8) -> Ast {
    match a {
        Ast::Num(_) | Ast::Pi | Ast::E => num(0.0),
        Ast::Param(j) => num(if *j == k { 1.0 } else { 0.0 }),
        Ast::Neg(x) => neg(d(x, k)),
        Ast::Add(x, y) => add(d(x, k), d(y, k)),
        Ast::Sub(x, y) => sub(d(x, k), d(y, k)),
        Ast::Mul(x, y) => add(mul(d(x, k), (**y).clone()), mul((**x).clone(), d(y, k))),
        Ast::Div(x, y) => div(
            sub(mul(d(x, k), (**y).clone()), mul((**x).clone(), d(y, k))),
            powi((**y).clone(), 2),
        ),
        Ast::PowInt(x, n) => mul(mul(num(*n as f64), powi((**x).clone(), n - 1)), d(x, k)),
        Ast::Pow(x, y) => {
            if let Some(c) = y.as_const() {
                // Power rule for a constant exponent.
                mul(mul(num(c), pow_const((**x).clone(), c - 1.0)), d(x, k))
            } else {
                // General rule: (x^y)' = x^y (y' ln x + y x'/x).
                mul(
                    a.clone(),
                    add(
                        mul(d(y, k), apply(Func::Ln, (**x).clone())),
                        div(mul((**y).clone(), d(x, k)), (**x).clone()),
                    ),
                )
            }
        }
        Ast::Apply(f, x) => {
            let dx = d(x, k);
            let inner = (**x).clone();
            match f {
                Func::Sin => mul(apply(Func::Cos, inner), dx),
                Func::Cos => neg(mul(apply(Func::Sin, inner), dx)),
                Func::Tan => div(dx, powi(apply(Func::Cos, inner), 2)),
                Func::Exp => mul(apply(Func::Exp, inner), dx),
                Func::Ln => div(dx, inner),
                Func::Sqrt => div(dx, mul(num(2.0), apply(Func::Sqrt, inner))),
            }
        }
    }
}

/// Bottom-up simplification. Folds constant subtrees whose value is finite
/// and applies neutral/absorbing-element identities.
// Guards like `if v == 0.0` are kept over float literal patterns on purpose.
#[allow(clippy::redundant_guards)]
pub fn simplify(a: Ast) -> Ast {
    match a {
        leaf @ (Ast::Num(_) | Ast::Param(_) | Ast::Pi | Ast::E) => leaf,
        Ast::Neg(x) => {
            let x = simplify(*x);
            match x {
                Ast::Num(v) => num(-v),
                Ast::Neg(inner) => *inner,
                x => neg(x),
            }
        }
        Ast::Add(x, y) => {
            let (x, y) = (simplify(*x), simplify(*y));
            match (x.as_const(), y.as_const()) {
                (Some(a), Some(b)) if (a + b).is_finite() => num(a + b),
                (Some(v), _) if v == 0.0 => y,
                (_, Some(v)) if v == 0.0 => x,
                _ => add(x, y),
            }
        }
        Ast::Sub(x, y) => {
            let (x, y) = (simplify(*x), simplify(*y));
            match (x.as_const(), y.as_const()) {
                (Some(a), Some(b)) if (a - b).is_finite() => num(a - b),
                (_, Some(v)) if v == 0.0 => x,
                (Some(v), _) if v == 0.0 => simplify(neg(y)),
                _ => sub(x, y),
            }
        }
        Ast::Mul(x, y) => {
            let (x, y) = (simplify(*x), simplify(*y));
            match (x.as_const(), y.as_const()) {
                (Some(a), Some(b)) if (a * b).is_finite() => num(a * b),
                (Some(v), _) if v == 0.0 => num(0.0),
                (_, Some(v)) if v == 0.0 => num(0.0),
                (Some(v), _) if v == 1.0 => y,
                (_, Some(v)) if v == 1.0 => x,
                _ => mul(x, y),
            }
        }
        Ast::Div(x, y) => {
            let (x, y) = (simplify(*x), simplify(*y));
            match (x.as_const(), y.as_const()) {
                (Some(a), Some(b)) if b != 0.0 && (a / b).is_finite() => num(a / b),
                (Some(v), _) if v == 0.0 && y.as_const() != Some(0.0) => num(0.0),
                (_, Some(v)) if v == 1.0 => x,
                _ => div(x, y),
            }
        }
        Ast::PowInt(x, k) => {
            let x = simplify(*x);
            match (x.as_const(), k) {
                (_, 0) => num(1.0),
                (_, 1) => x,
                (Some(v), _) if v.powi(k).is_finite() => num(v.powi(k)),
                _ => powi(x, k),
            }
        }
        Ast::Pow(x, y) => {
            let (x, y) = (simplify(*x), simplify(*y));
            if let Some(c) = y.as_const() {
                if c.fract() == 0.0 && c.abs() <= i32::MAX as f64 {
                    // Whole constant exponent: switch to the integer form.
                    return simplify(powi(x, c as i32));
                }
                if let Some(b) = x.as_const() {
                    let v = b.powf(c);
                    if v.is_finite() {
                        return num(v);
                    }
                }
                return Ast::Pow(Box::new(x), Box::new(num(c)));
            }
            Ast::Pow(Box::new(x), Box::new(y))
        }
        Ast::Apply(f, x) => {
            let x = simplify(*x);
            if let Some(v) = x.as_const() {
                let folded = match f {
                    Func::Sin => v.sin(),
                    Func::Cos => v.cos(),
                    Func::Tan => v.tan(),
                    Func::Exp => v.exp(),
                    Func::Ln => v.ln(),
                    Func::Sqrt => v.sqrt(),
                };
                if folded.is_finite() {
                    return num(folded);
                }
            }
            apply(f, x)
        }
    }
}
