//! Closed-form expressions in the parameters `u1..u4` with exact symbolic
//! mixed partial derivatives up to total order 5.

mod deriv;
mod parse;

pub use deriv::differentiate;
pub use parse::parse;

use crate::error::{Error, Result};
use std::collections::HashMap;
use std::fmt;

/// Unary functions of the expression language.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Sin,
    Cos,
    Tan,
    Exp,
    Ln,
    Sqrt,
}

impl Func {
    pub fn name(self) -> &'static str {
        match self {
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Tan => "tan",
            Func::Exp => "exp",
            Func::Ln => "ln",
            Func::Sqrt => "sqrt",
        }
    }
}

/// Expression tree. Parameter indices are 1-based (`u1..u4`).
///
/// `PowInt` is the constant-integer-exponent form of `Pow`; the simplifier
/// introduces it whenever the exponent folds to a whole number, which lets
/// differentiation use the exact power rule and evaluation use `powi`.
#[derive(Debug, Clone, PartialEq)]
pub enum Ast {
    Num(f64),
    Param(u8),
    Pi,
    E,
    Neg(Box<Ast>),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
    Div(Box<Ast>, Box<Ast>),
    Pow(Box<Ast>, Box<Ast>),
    PowInt(Box<Ast>, i32),
    Apply(Func, Box<Ast>),
}

impl Ast {
    /// The constant value of this node, if it is one.
    pub fn as_const(&self) -> Option<f64> {
        match self {
            Ast::Num(v) => Some(*v),
            Ast::Pi => Some(std::f64::consts::PI),
            Ast::E => Some(std::f64::consts::E),
            _ => None,
        }
    }
}

fn domain_err(message: impl Into<String>) -> Error {
    Error::Domain { message: message.into() }
}

/// Evaluate `a` at the given parameter values.
///
/// Domain violations (log of a non-positive value, square root of a negative
/// value, division by zero) and any non-finite intermediate are reported as
/// `Error::Domain`.
pub fn evaluate(a: &Ast, params: &[f64; 4]) -> Result<f64> {
    let v = eval_rec(a, params)?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(domain_err("non-finite result"))
    }
}

fn eval_rec(a: &Ast, p: &[f64; 4]) -> Result<f64> {
    let v = match a {
        Ast::Num(v) => *v,
        Ast::Param(k) => p[(*k - 1) as usize],
        Ast::Pi => std::f64::consts::PI,
        Ast::E => std::f64::consts::E,
        Ast::Neg(x) => -eval_rec(x, p)?,
        Ast::Add(x, y) => eval_rec(x, p)? + eval_rec(y, p)?,
        Ast::Sub(x, y) => eval_rec(x, p)? - eval_rec(y, p)?,
        Ast::Mul(x, y) => eval_rec(x, p)? * eval_rec(y, p)?,
        Ast::Div(x, y) => {
            let d = eval_rec(y, p)?;
            if d == 0.0 {
                return Err(domain_err("division by zero"));
            }
            eval_rec(x, p)? / d
        }
        Ast::Pow(x, y) => eval_rec(x, p)?.powf(eval_rec(y, p)?),
        Ast::PowInt(x, k) => eval_rec(x, p)?.powi(*k),
        Ast::Apply(f, x) => {
            let v = eval_rec(x, p)?;
            match f {
                Func::Sin => v.sin(),
                Func::Cos => v.cos(),
                Func::Tan => v.tan(),
                Func::Exp => v.exp(),
                Func::Ln => {
                    if v <= 0.0 {
                        return Err(domain_err(format!("ln of non-positive value {v}")));
                    }
                    v.ln()
                }
                Func::Sqrt => {
                    if v < 0.0 {
                        return Err(domain_err(format!("sqrt of negative value {v}")));
                    }
                    v.sqrt()
                }
            }
        }
    };
    if v.is_finite() {
        Ok(v)
    } else {
        Err(domain_err("non-finite intermediate value"))
    }
}

/// Unparse with enough parentheses to round-trip through `parse`.
impl fmt::Display for Ast {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ast::Num(v) => {
                if *v < 0.0 || (v == &0.0 && v.is_sign_negative()) {
                    // A bare negative literal re-parses as unary minus; keep
                    // it parenthesis-free by printing the positive magnitude
                    // under an explicit sign.
                    write!(f, "(-{})", -v)
                } else {
                    write!(f, "{v}")
                }
            }
            Ast::Param(k) => write!(f, "u{k}"),
            Ast::Pi => write!(f, "pi"),
            Ast::E => write!(f, "e"),
            Ast::Neg(x) => write!(f, "(-{x})"),
            Ast::Add(x, y) => write!(f, "({x}+{y})"),
            Ast::Sub(x, y) => write!(f, "({x}-{y})"),
            Ast::Mul(x, y) => write!(f, "({x}*{y})"),
            Ast::Div(x, y) => write!(f, "({x}/{y})"),
            Ast::Pow(x, y) => write!(f, "({x}^{y})"),
            Ast::PowInt(x, k) => {
                if *k < 0 {
                    write!(f, "({x}^(-{}))", k.unsigned_abs())
                } else {
                    write!(f, "({x}^{k})")
                }
            }
            Ast::Apply(g, x) => write!(f, "{}({x})", g.name()),
        }
    }
}

/// A canonical (sorted, non-decreasing) list of parameter indices naming one
/// mixed partial derivative; the length is the derivative order, at most 5.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex {
    idx: [u8; 5],
    len: u8,
}

impl MultiIndex {
    pub const MAX_ORDER: usize = 5;

    /// Empty index (order 0: the function itself).
    pub fn empty() -> Self {
        MultiIndex { idx: [0; 5], len: 0 }
    }

    /// Build from 1-based parameter indices in any order.
    pub fn new(indices: &[u8]) -> Result<Self> {
        if indices.len() > Self::MAX_ORDER {
            return Err(Error::OrderExceeded { order: indices.len() });
        }
        let mut idx = [0u8; 5];
        for (slot, &k) in idx.iter_mut().zip(indices) {
            assert!((1..=4).contains(&k), "parameter index {k} out of range 1..=4");
            *slot = k;
        }
        idx[..indices.len()].sort_unstable();
        Ok(MultiIndex { idx, len: indices.len() as u8 })
    }

    pub fn order(&self) -> usize {
        self.len as usize
    }

    pub fn indices(&self) -> &[u8] {
        &self.idx[..self.len as usize]
    }

    /// This index extended by one more differentiation in `k` (1-based).
    pub fn with(&self, k: u8) -> Result<Self> {
        let mut v = [0u8; 6];
        v[..self.order()].copy_from_slice(self.indices());
        v[self.order()] = k;
        Self::new(&v[..self.order() + 1])
    }

    /// Canonical parent: the index with its largest entry removed, plus that
    /// entry. Recursing through the parent makes the memo table independent
    /// of the order in which indices were supplied.
    fn parent(&self) -> Option<(Self, u8)> {
        if self.len == 0 {
            return None;
        }
        let mut idx = self.idx;
        let last = idx[self.len as usize - 1];
        idx[self.len as usize - 1] = 0;
        Some((MultiIndex { idx, len: self.len - 1 }, last))
    }

    /// All canonical multi-indices of order `0..=order`.
    pub fn all_up_to(order: usize) -> Vec<MultiIndex> {
        let mut out = vec![MultiIndex::empty()];
        let mut frontier = vec![MultiIndex::empty()];
        for _ in 0..order.min(Self::MAX_ORDER) {
            let mut next = Vec::new();
            for m in &frontier {
                let lo = m.indices().last().copied().unwrap_or(1);
                for k in lo..=4 {
                    let ext = m.with(k).expect("order bounded by MAX_ORDER");
                    next.push(ext);
                }
            }
            out.extend(next.iter().copied());
            frontier = next;
        }
        out
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, k) in self.indices().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{k}")?;
        }
        write!(f, ")")
    }
}

/// Memoized mixed partials of one expression, to order 5.
///
/// Entries are produced by differentiating along the canonical parent chain
/// (largest index last), so `(1,2)` and `(2,1)` resolve to the identical
/// stored `Ast`.
#[derive(Debug, Clone)]
pub struct PartialTable {
    entries: HashMap<MultiIndex, Ast>,
}

impl PartialTable {
    /// Build the full table up to `MAX_ORDER` eagerly. The table is
    /// immutable afterwards, so sharing across threads is safe.
    pub fn new(root: Ast) -> Self {
        let mut entries = HashMap::new();
        entries.insert(MultiIndex::empty(), root);
        for mi in MultiIndex::all_up_to(MultiIndex::MAX_ORDER) {
            if mi.order() == 0 {
                continue;
            }
            let (parent, k) = mi.parent().expect("nonzero order has a parent");
            let d = differentiate(&entries[&parent], k);
            entries.insert(mi, d);
        }
        PartialTable { entries }
    }

    /// The memoized partial for `sigma`; repeated calls return the same entry.
    pub fn partial(&self, sigma: MultiIndex) -> Result<&Ast> {
        Ok(self.entries.get(&sigma).expect("table is built to MAX_ORDER"))
    }

    /// Like [`partial`](Self::partial) but for raw, possibly unsorted index
    /// lists; rejects orders above 5.
    pub fn partial_raw(&self, indices: &[u8]) -> Result<&Ast> {
        self.partial(MultiIndex::new(indices)?)
    }

    pub fn root(&self) -> &Ast {
        &self.entries[&MultiIndex::empty()]
    }
}
