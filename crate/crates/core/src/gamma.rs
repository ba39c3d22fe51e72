//! Multiplication by the discriminant polarization, polarization powers on
//! node scrolls, and evaluation of point classes to geometric characters.

use crate::base::{
    fiber_degree, integrate_surface, mul_base, Backend, BaseMonomial, CharExpr, Symbol,
};
use crate::staircase;
use crate::taut::{DiagonalTerm, NodeScrollTerm, ScrollTwist, TautClass, TautTerm};
use crate::{int, rat, Rat};
use num_traits::One;
use std::fmt;

/// Evaluation failures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EvalError {
    /// A term of the wrong codimension was passed to the integral.
    NonPoint { codim: u32, expected: u32 },
    /// The backend cannot evaluate this term kind.
    Unsupported(&'static str),
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::NonPoint { codim, expected } => {
                write!(
                    f,
                    "term of codimension {codim} is not a point class (need {expected})"
                )
            }
            EvalError::Unsupported(s) => write!(f, "unsupported evaluation: {s}"),
        }
    }
}

impl std::error::Error for EvalError {}

fn beta_coeff(n: u32, j: u32) -> Rat {
    int(staircase::beta(n as i64, j as i64).expect("valid scroll index") as i64)
}

/// Enumerate x|y assignments of a list of decorated blocks.
fn assignments(
    blocks: &[(u32, ScrollTwist)],
) -> Vec<(Vec<(u32, ScrollTwist)>, Vec<(u32, ScrollTwist)>)> {
    let mut out = vec![(Vec::new(), Vec::new())];
    for &b in blocks {
        let mut next = Vec::with_capacity(out.len() * 2);
        for (x, y) in &out {
            let mut x1 = x.clone();
            x1.push(b);
            next.push((x1, y.clone()));
            let mut y1 = y.clone();
            y1.push(b);
            next.push((x.clone(), y1));
        }
        out = next;
    }
    out
}

fn diagonal_step(_m: u32, backend: Backend, d: &DiagonalTerm, coeff: &Rat, out: &mut TautClass) {
    let blocks = &d.blocks;
    let r = blocks.len();
    // Unite every unordered pair of blocks; twists multiply in the base.
    for i in 0..r {
        for i2 in (i + 1)..r {
            let (k1, t1) = blocks[i];
            let (k2, t2) = blocks[i2];
            let tw = match mul_base(t1, t2, backend) {
                Some(t) => t,
                None => continue,
            };
            let mut nb: Vec<(u32, BaseMonomial)> = Vec::with_capacity(r - 1);
            for (idx, &b) in blocks.iter().enumerate() {
                if idx != i && idx != i2 {
                    nb.push(b);
                }
            }
            nb.push((k1 + k2, tw));
            out.add_term(
                TautTerm::Diagonal(DiagonalTerm::new(nb)),
                coeff * int((k1 * k2) as i64),
            );
        }
    }
    // Dualizing-class correction on every block.
    for i in 0..r {
        let (k, t) = blocks[i];
        let c2 = crate::choose2(k as i64);
        if c2 == 0 {
            continue;
        }
        let tw = match mul_base(t, BaseMonomial::W, backend) {
            Some(t) => t,
            None => continue,
        };
        let mut nb = blocks.clone();
        nb[i] = (k, tw);
        out.add_term(TautTerm::Diagonal(DiagonalTerm::new(nb)), coeff * int(-c2));
    }
    // Node scrolls from every block of length at least 2; the nodebound slot
    // kills positive-degree twists.
    if backend.has_nodes() {
        for i in 0..r {
            let (n, t) = blocks[i];
            if n < 2 || t.deg() > 0 {
                continue;
            }
            let rest: Vec<(u32, ScrollTwist)> = blocks
                .iter()
                .enumerate()
                .filter(|&(idx, _)| idx != i)
                .map(|(_, &(k, tw))| (k, ScrollTwist::from_base(tw)))
                .collect();
            for j in 1..n {
                let b = beta_coeff(n, j);
                for (x, y) in assignments(&rest) {
                    out.add_term(
                        TautTerm::Scroll(NodeScrollTerm::new(n, j, x, y, false)),
                        coeff * &b,
                    );
                }
            }
        }
    }
}

/// Intermediate state while expanding polarization powers on a scroll:
/// the at-large decorated blocks with a running rational weight.
type ScrollState = (Vec<(u32, ScrollTwist)>, Rat);

/// Apply a polarization-bundle class `e = −Γ̃ − Σ_i k_i·c·θ̂_i` to a list of
/// scroll-base states. `Γ̃` is the discriminant of the scroll base, acting by
/// the diagonal calculus of the normalized boundary family (a smooth curve,
/// so no node terms and the dualizing twist is the base family's own).
fn apply_e(states: &[ScrollState], c: i64) -> Vec<ScrollState> {
    let mut out: Vec<ScrollState> = Vec::new();
    for (blocks, w) in states {
        let r = blocks.len();
        // −Γ̃ part: unite pairs.
        for i in 0..r {
            for i2 in (i + 1)..r {
                let (k1, t1) = blocks[i];
                let (k2, t2) = blocks[i2];
                let tw = t1.mul(t2);
                if tw.deg() > 1 {
                    continue;
                }
                let mut nb: Vec<(u32, ScrollTwist)> = Vec::with_capacity(r - 1);
                for (idx, &b) in blocks.iter().enumerate() {
                    if idx != i && idx != i2 {
                        nb.push(b);
                    }
                }
                nb.push((k1 + k2, tw));
                out.push((nb, -(w * int((k1 * k2) as i64))));
            }
        }
        // −Γ̃ part: base dualizing twists.
        for i in 0..r {
            let (k, t) = blocks[i];
            let c2 = crate::choose2(k as i64);
            if c2 == 0 {
                continue;
            }
            let mut tw = t;
            tw.e_wt += 1;
            if tw.deg() > 1 {
                continue;
            }
            let mut nb = blocks.clone();
            nb[i] = (k, tw);
            out.push((nb, w * int(c2)));
        }
        // −Σ k_i·c·θ̂_i part.
        for i in 0..r {
            let (k, t) = blocks[i];
            let mut tw = t;
            tw.e_th += 1;
            if tw.deg() > 1 {
                continue;
            }
            let mut nb = blocks.clone();
            nb[i] = (k, tw);
            out.push((nb, -(w * int(c * k as i64))));
        }
    }
    out
}

/// Complete homogeneous polynomial `s_k(e1, e2)` applied to a base state.
fn apply_s(base: &ScrollState, k: i64, c1: i64, c2: i64) -> Vec<ScrollState> {
    if k < 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for a in 0..=k {
        let b = k - a;
        let mut states = vec![base.clone()];
        for _ in 0..a {
            states = apply_e(&states, c1);
        }
        for _ in 0..b {
            states = apply_e(&states, c2);
        }
        out.extend(states);
    }
    out
}

/// `(Γ⟨m⟩)^ℓ · F` for a node scroll `F` (no section factor), as a combination
/// of scroll and section terms. Powers collapse in one step through the
/// polarization bundles of the scroll; the two branch labelings of a
/// nonseparating node are averaged.
pub fn gamma_power_on_scroll(m: u32, backend: Backend, s: &NodeScrollTerm, l: u32) -> TautClass {
    assert!(!s.section, "input must be a plain scroll");
    assert!(l >= 2, "use plain section formation for the first power");
    let mut out = TautClass::zero(m, backend);
    let base: Vec<(u32, ScrollTwist)> = s.at_large().copied().collect();
    let sign = if (l + 1).is_multiple_of(2) {
        Rat::one()
    } else {
        -Rat::one()
    };
    // Label-averaged coefficient pairs for (e_j, e_{j+1}).
    let pairs = [
        (s.n as i64 - s.j as i64 + 1, s.n as i64 - s.j as i64),
        (s.j as i64 + 1, s.j as i64),
    ];
    for (c1, c2) in pairs {
        let half = rat(1, 2);
        // Section part: s_{ℓ−1}(e) · (Γ·F).
        for (blocks, w) in apply_s(&(base.clone(), Rat::one()), l as i64 - 1, c1, c2) {
            out.add_term(
                TautTerm::Scroll(NodeScrollTerm::new(s.n, s.j, blocks, vec![], true)),
                &sign * &(&half * &w),
            );
        }
        // Scroll part: e_j e_{j+1} s_{ℓ−2}(e) · F.
        let e1e2 = apply_e(&apply_e(&[(base.clone(), Rat::one())], c1), c2);
        for st in &e1e2 {
            for (blocks, w) in apply_s(st, l as i64 - 2, c1, c2) {
                out.add_term(
                    TautTerm::Scroll(NodeScrollTerm::new(s.n, s.j, blocks, vec![], false)),
                    &sign * &(&half * &w),
                );
            }
        }
    }
    out.normalize()
}

/// First Chern classes `(e_j, e_{j+1})` of the polarization bundles of a
/// node scroll over its base. In the symbolic backend these are the extreme
/// boundary classes in the `ψ` symbols plus the node-point degrees of the
/// at-large blocks; in the pencil backend the `ψ` classes vanish and the
/// degrees are returned as constants for the canonical branch labeling (the
/// power formulas average both labelings, and the discriminant of the base
/// acts separately).
pub fn scroll_e_classes(
    phi: &crate::partition::MultiDistribution,
    j: u32,
    backend: Backend,
) -> (CharExpr, CharExpr) {
    let n = phi.nodebound;
    assert!(j >= 1 && j < n, "scroll index out of range");
    let at_large: i64 = (phi.x_part.total_length() + phi.y_part.total_length()) as i64;
    let e = |jj: u32| -> CharExpr {
        let theta = CharExpr::constant(int(-at_large * (n as i64 - jj as i64 + 1)));
        match backend {
            Backend::Symbolic => &crate::symbolic::extreme_e(n, jj) + &theta,
            _ => theta,
        }
    };
    (e(j), e(j + 1))
}

/// Multiply a normalized class by the discriminant polarization `Γ⟨m⟩`.
pub fn mul_gamma(c: &TautClass) -> TautClass {
    let mut out = TautClass::zero(c.m, c.backend);
    for (t, coeff) in &c.terms {
        match t {
            TautTerm::Diagonal(d) => diagonal_step(c.m, c.backend, d, coeff, &mut out),
            TautTerm::Scroll(s) if !s.section => {
                let mut sec = s.clone();
                sec.section = true;
                out.add_term(TautTerm::Scroll(sec), coeff.clone());
            }
            TautTerm::Scroll(s) => {
                let mut plain = s.clone();
                plain.section = false;
                let reduced = gamma_power_on_scroll(c.m, c.backend, &plain, 2);
                out.add_class(&reduced.scale(coeff));
            }
        }
    }
    out.normalize()
}

/// `(Γ⟨m⟩)^k` as a normalized class.
pub fn gamma_power_class(k: u32, m: u32, backend: Backend) -> TautClass {
    let mut acc = TautClass::unit(m, backend);
    for _ in 0..k {
        acc = mul_gamma(&acc);
    }
    acc
}

fn eval_scroll_twist(tw: ScrollTwist) -> Option<CharExpr> {
    // Each at-large factor is a curve; a point class on it has total degree 1.
    match (tw.e_l, tw.e_w, tw.e_wt, tw.e_th) {
        (1, 0, 0, 0) => Some(CharExpr::symbol(Symbol::D)),
        (0, 1, 0, 0) => Some(CharExpr::symbol(Symbol::G2)),
        (0, 0, 1, 0) => {
            // Dualizing class of the normalized boundary family: degree 2g−4.
            Some(&CharExpr::symbol(Symbol::G2) - &CharExpr::constant(int(2)))
        }
        (0, 0, 0, 1) => Some(CharExpr::one()),
        _ => None,
    }
}

/// Evaluate a class of pure top codimension to a character polynomial.
/// Node terms contribute once per node, so their values carry `sig`.
pub fn evaluate(c: &TautClass) -> Result<CharExpr, EvalError> {
    let c = c.normalize();
    let expected = c.m + c.backend.dim_b();
    let mut total = CharExpr::zero();
    for (t, coeff) in &c.terms {
        if t.codim() != expected {
            return Err(EvalError::NonPoint {
                codim: t.codim(),
                expected,
            });
        }
        match t {
            TautTerm::Diagonal(d) => {
                let mut value = CharExpr::one();
                match c.backend {
                    Backend::Curve => {
                        for &(_, tw) in &d.blocks {
                            match tw.deg() {
                                1 => value = &value * &fiber_degree(tw).expect("degree checked"),
                                _ => {
                                    value = CharExpr::zero();
                                    break;
                                }
                            }
                        }
                    }
                    Backend::Pencil | Backend::Symbolic => {
                        let mut deg2 = 0;
                        for &(_, tw) in &d.blocks {
                            match tw.deg() {
                                2 => {
                                    deg2 += 1;
                                    if deg2 > 1 {
                                        value = CharExpr::zero();
                                        break;
                                    }
                                    value =
                                        &value * &integrate_surface(tw).expect("degree checked");
                                }
                                1 => {
                                    value = &value * &fiber_degree(tw).expect("degree checked");
                                }
                                _ => {
                                    value = CharExpr::zero();
                                    break;
                                }
                            }
                        }
                        if deg2 != 1 {
                            value = CharExpr::zero();
                        }
                    }
                }
                total = &total + &value.scale(coeff);
            }
            TautTerm::Scroll(s) => {
                if !s.section {
                    return Err(EvalError::Unsupported(
                        "a plain node scroll is never a point class",
                    ));
                }
                let mut value = CharExpr::symbol(Symbol::Sig).scale(&-Rat::one());
                for &(_, tw) in s.at_large() {
                    match eval_scroll_twist(tw) {
                        Some(v) => value = &value * &v,
                        None => {
                            value = CharExpr::zero();
                            break;
                        }
                    }
                }
                total = &total + &value.scale(coeff);
            }
        }
    }
    Ok(total)
}

/// `∫ (Γ⟨m⟩)^k` over the Hilbert scheme, when `k` is the dimension.
pub fn integral_gamma_power(k: u32, m: u32, backend: Backend) -> Result<CharExpr, EvalError> {
    evaluate(&gamma_power_class(k, m, backend))
}
