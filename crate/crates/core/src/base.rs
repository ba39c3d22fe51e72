//! Base classes on the curve family and the geometric character ring.
//!
//! A [`BaseMonomial`] is a monomial `L^a ω^b` in the polarization `L` and the
//! relative dualizing class `ω`; products truncate to zero above the fibre
//! dimension of the active [`Backend`]. Evaluation lands in [`CharExpr`],
//! exact-rational polynomials in the geometric characters
//! `b = L²`, `d = deg L`, `lw = L·ω`, `w2 = ω²`, `g2 = 2g−2`, `sig = σ`,
//! plus formal `ψ`/`κ` symbols used by the symbolic closed forms.

use crate::Rat;
use num_traits::{One, Zero};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Which geometry the engine is computing in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Backend {
    /// A single smooth curve; `X` has dimension 1 and there are no nodes.
    Curve,
    /// A 1-parameter family of curves with `sig` nodal fibres; `X` is a surface.
    Pencil,
    /// Like `Pencil` but `ψ`/`κ` classes are kept as formal symbols.
    Symbolic,
}

impl Backend {
    /// Dimension of the total space `X`.
    pub fn dim_x(self) -> u32 {
        match self {
            Backend::Curve => 1,
            Backend::Pencil | Backend::Symbolic => 2,
        }
    }

    /// Dimension of the base `B`.
    pub fn dim_b(self) -> u32 {
        match self {
            Backend::Curve => 0,
            Backend::Pencil | Backend::Symbolic => 1,
        }
    }

    /// Whether node classes exist in this backend.
    pub fn has_nodes(self) -> bool {
        !matches!(self, Backend::Curve)
    }
}

/// Monomial `L^{e_l} ω^{e_w}` in the base classes of `X`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct BaseMonomial {
    pub e_l: u32,
    pub e_w: u32,
}

impl BaseMonomial {
    pub const ONE: BaseMonomial = BaseMonomial { e_l: 0, e_w: 0 };
    pub const L: BaseMonomial = BaseMonomial { e_l: 1, e_w: 0 };
    pub const W: BaseMonomial = BaseMonomial { e_l: 0, e_w: 1 };

    pub fn new(e_l: u32, e_w: u32) -> Self {
        BaseMonomial { e_l, e_w }
    }

    pub fn deg(self) -> u32 {
        self.e_l + self.e_w
    }

    pub fn is_one(self) -> bool {
        self.deg() == 0
    }
}

impl fmt::Display for BaseMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (sym, e) in [("L", self.e_l), ("w", self.e_w)] {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{sym}")?;
            } else {
                write!(f, "{sym}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Exponentwise product truncated to zero above the fibre-space dimension.
pub fn mul_base(a: BaseMonomial, b: BaseMonomial, backend: Backend) -> Option<BaseMonomial> {
    let m = BaseMonomial::new(a.e_l + b.e_l, a.e_w + b.e_w);
    if m.deg() > backend.dim_x() {
        None
    } else {
        Some(m)
    }
}

/// Character symbols. The declaration order is the canonical print order:
/// `sig, w2, lw, b` first, then `d` and `g2` powers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Symbol {
    Sig,
    W2,
    Lw,
    B,
    D,
    G2,
    PsiX,
    PsiY,
    /// `κ_j(L) = π_*(L^{j+1})`
    KappaL(u32),
    /// `κ_{i,j}(L, ω) = π_*(L^{i+1} ω^{j+1})`
    KappaLw(u32, u32),
    /// `L^j` evaluated along a node section, pushed from the boundary.
    ThetaL(u32),
    /// First and second slot polarizations on the ordered square, and the
    /// polarization divisor itself; used only by the formal closed forms.
    L1,
    L2,
    Gam,
}

impl Symbol {
    fn token(self) -> String {
        match self {
            Symbol::Sig => "sig".into(),
            Symbol::W2 => "w2".into(),
            Symbol::Lw => "lw".into(),
            Symbol::B => "b".into(),
            Symbol::D => "d".into(),
            Symbol::G2 => "g2".into(),
            Symbol::PsiX => "psix".into(),
            Symbol::PsiY => "psiy".into(),
            Symbol::KappaL(j) => format!("kappa{j}(L)"),
            Symbol::KappaLw(i, j) => format!("kappa{i},{j}(L,w)"),
            Symbol::ThetaL(j) => format!("thetaL^{j}"),
            Symbol::L1 => "L1".into(),
            Symbol::L2 => "L2".into(),
            Symbol::Gam => "Gamma".into(),
        }
    }
}

/// Monomial in character symbols.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize)]
pub struct CharMonomial(pub BTreeMap<Symbol, u32>);

impl CharMonomial {
    pub fn one() -> Self {
        CharMonomial(BTreeMap::new())
    }

    pub fn symbol(s: Symbol) -> Self {
        let mut m = BTreeMap::new();
        m.insert(s, 1);
        CharMonomial(m)
    }

    pub fn mul(&self, other: &CharMonomial) -> CharMonomial {
        let mut m = self.0.clone();
        for (&s, &e) in &other.0 {
            *m.entry(s).or_insert(0) += e;
        }
        CharMonomial(m)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for CharMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (&s, &e) in &self.0 {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", s.token())?;
            } else {
                write!(f, "{}^{}", s.token(), e)?;
            }
        }
        Ok(())
    }
}

/// Exact-rational polynomial in character symbols.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CharExpr {
    pub terms: BTreeMap<CharMonomial, Rat>,
}

impl CharExpr {
    pub fn zero() -> Self {
        CharExpr::default()
    }

    pub fn one() -> Self {
        CharExpr::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut e = CharExpr::zero();
        if !c.is_zero() {
            e.terms.insert(CharMonomial::one(), c);
        }
        e
    }

    pub fn symbol(s: Symbol) -> Self {
        let mut e = CharExpr::zero();
        e.terms.insert(CharMonomial::symbol(s), Rat::one());
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: CharMonomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            if let Some(key) = self
                .terms
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
            {
                self.terms.remove(&key);
            }
        }
    }

    pub fn scale(&self, c: &Rat) -> CharExpr {
        if c.is_zero() {
            return CharExpr::zero();
        }
        CharExpr {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> CharExpr {
        let mut acc = CharExpr::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Substitute rational values for some symbols; unassigned symbols remain.
    pub fn substitute(&self, assign: &BTreeMap<Symbol, Rat>) -> CharExpr {
        let mut out = CharExpr::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = CharMonomial::one();
            for (&s, &e) in &m.0 {
                match assign.get(&s) {
                    Some(v) => {
                        for _ in 0..e {
                            coeff *= v;
                        }
                    }
                    None => {
                        rest.0.insert(s, e);
                    }
                }
            }
            out.add_term(rest, coeff);
        }
        out
    }

    /// Coefficient of a monomial (zero if absent).
    pub fn coeff(&self, m: &CharMonomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }
}

impl Add for &CharExpr {
    type Output = CharExpr;
    fn add(self, rhs: &CharExpr) -> CharExpr {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &CharExpr {
    type Output = CharExpr;
    fn sub(self, rhs: &CharExpr) -> CharExpr {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &CharExpr {
    type Output = CharExpr;
    fn mul(self, rhs: &CharExpr) -> CharExpr {
        let mut out = CharExpr::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &CharExpr {
    type Output = CharExpr;
    fn neg(self) -> CharExpr {
        self.scale(&-Rat::one())
    }
}

fn fmt_rat(r: &Rat) -> String {
    if r.is_integer() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for CharExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let neg = c < &Rat::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{}", fmt_rat(&abs))?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{}", fmt_rat(&abs), m)?;
            }
        }
        Ok(())
    }
}

/// `∫_X` of a degree-2 base monomial in the pencil backend.
///
/// Errors with the offending degree when the class is not a point class on `X`.
pub fn integrate_surface(a: BaseMonomial) -> Result<CharExpr, u32> {
    if a.deg() != 2 {
        return Err(a.deg());
    }
    Ok(match (a.e_l, a.e_w) {
        (2, 0) => CharExpr::symbol(Symbol::B),
        (1, 1) => CharExpr::symbol(Symbol::Lw),
        (0, 2) => CharExpr::symbol(Symbol::W2),
        _ => unreachable!(),
    })
}

/// Fibre degree of a degree-1 base monomial: `L → d`, `ω → g2`.
pub fn fiber_degree(a: BaseMonomial) -> Result<CharExpr, u32> {
    if a.deg() != 1 {
        return Err(a.deg());
    }
    Ok(match (a.e_l, a.e_w) {
        (1, 0) => CharExpr::symbol(Symbol::D),
        (0, 1) => CharExpr::symbol(Symbol::G2),
        _ => unreachable!(),
    })
}
