//! Normal-form tautological classes: twisted diagonal terms, node scrolls and
//! node sections, with exact rational coefficients.
//!
//! Internally every class is stored in the symmetrized list normalization:
//! the coefficient of a term is the coefficient of the pushforward of the
//! fully decorated ordered class. Constructors for the familiar
//! locus-normalized classes divide by the decorated automorphism count, so
//! e.g. [`TautClass::gamma`] is half the reduced nonreduced-locus class.

use crate::base::{Backend, BaseMonomial};
use crate::partition::Distribution;
use crate::{int, Rat};
use num_traits::{One, Zero};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

/// A diagonal term: blocks of collided points, each carrying a base twist.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct DiagonalTerm {
    /// Blocks `(size, twist)`, kept sorted descending.
    pub blocks: Vec<(u32, BaseMonomial)>,
}

impl DiagonalTerm {
    pub fn new(mut blocks: Vec<(u32, BaseMonomial)>) -> Self {
        blocks.sort_unstable_by(|a, b| b.cmp(a));
        DiagonalTerm { blocks }
    }

    pub fn total_length(&self) -> u32 {
        self.blocks.iter().map(|b| b.0).sum()
    }

    pub fn codim(&self) -> u32 {
        self.blocks.iter().map(|&(k, tw)| (k - 1) + tw.deg()).sum()
    }

    /// Underlying size distribution.
    pub fn distribution(&self) -> Distribution {
        let mut d = Distribution::empty();
        for &(k, _) in &self.blocks {
            d.insert(k, 1);
        }
        d
    }

    /// Automorphism count of the decorated block multiset.
    pub fn aut(&self) -> Rat {
        let mut counts: BTreeMap<(u32, BaseMonomial), i64> = BTreeMap::new();
        for &b in &self.blocks {
            *counts.entry(b).or_insert(0) += 1;
        }
        let mut acc = Rat::one();
        for m in counts.values() {
            for i in 1..=*m {
                acc *= int(i);
            }
        }
        acc
    }
}

/// Twist data on a node-scroll base factor: a base monomial restricted to the
/// normalized fibre, an optional power of the base dualizing class, and an
/// optional node-point marker. The factor is a curve, so any total degree
/// above 1 is zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize)]
pub struct ScrollTwist {
    pub e_l: u32,
    pub e_w: u32,
    /// Power of the dualizing class of the normalized boundary family.
    pub e_wt: u32,
    /// Node-point markers placed by polarization powers.
    pub e_th: u32,
}

impl ScrollTwist {
    pub fn one() -> Self {
        ScrollTwist::default()
    }

    pub fn from_base(b: BaseMonomial) -> Self {
        ScrollTwist {
            e_l: b.e_l,
            e_w: b.e_w,
            e_wt: 0,
            e_th: 0,
        }
    }

    pub fn deg(self) -> u32 {
        self.e_l + self.e_w + self.e_wt + self.e_th
    }

    pub fn mul(self, other: ScrollTwist) -> ScrollTwist {
        ScrollTwist {
            e_l: self.e_l + other.e_l,
            e_w: self.e_w + other.e_w,
            e_wt: self.e_wt + other.e_wt,
            e_th: self.e_th + other.e_th,
        }
    }

    pub fn is_one(self) -> bool {
        self.deg() == 0
    }
}

impl fmt::Display for ScrollTwist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (sym, e) in [
            ("L", self.e_l),
            ("w", self.e_w),
            ("wt", self.e_wt),
            ("th", self.e_th),
        ] {
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

/// A node-scroll or node-section term.
///
/// The nodebound part has length `n ≥ 2` and carries no twist; the at-large
/// blocks are split between the two branch labels. `section` records one
/// factor of the discriminant polarization; higher powers reduce through the
/// scroll polarization bundles and never appear in normal form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct NodeScrollTerm {
    pub n: u32,
    pub j: u32,
    pub x_blocks: Vec<(u32, ScrollTwist)>,
    pub y_blocks: Vec<(u32, ScrollTwist)>,
    pub section: bool,
}

impl NodeScrollTerm {
    pub fn new(
        n: u32,
        j: u32,
        mut x_blocks: Vec<(u32, ScrollTwist)>,
        mut y_blocks: Vec<(u32, ScrollTwist)>,
        section: bool,
    ) -> Self {
        x_blocks.sort_unstable_by(|a, b| b.cmp(a));
        y_blocks.sort_unstable_by(|a, b| b.cmp(a));
        NodeScrollTerm {
            n,
            j,
            x_blocks,
            y_blocks,
            section,
        }
    }

    pub fn total_length(&self) -> u32 {
        self.n
            + self
                .x_blocks
                .iter()
                .chain(self.y_blocks.iter())
                .map(|b| b.0)
                .sum::<u32>()
    }

    pub fn at_large(&self) -> impl Iterator<Item = &(u32, ScrollTwist)> {
        self.x_blocks.iter().chain(self.y_blocks.iter())
    }

    pub fn codim(&self) -> u32 {
        self.n
            + self
                .at_large()
                .map(|&(k, tw)| (k - 1) + tw.deg())
                .sum::<u32>()
            + if self.section { 1 } else { 0 }
    }

    /// Automorphism count of the decorated split (per side).
    pub fn aut(&self) -> Rat {
        let count_side = |side: &[(u32, ScrollTwist)]| {
            let mut counts: BTreeMap<(u32, ScrollTwist), i64> = BTreeMap::new();
            for &b in side {
                *counts.entry(b).or_insert(0) += 1;
            }
            let mut acc = Rat::one();
            for m in counts.values() {
                for i in 1..=*m {
                    acc *= int(i);
                }
            }
            acc
        };
        count_side(&self.x_blocks) * count_side(&self.y_blocks)
    }

    /// Whether any at-large factor exceeds its curve budget.
    pub fn overfull(&self) -> bool {
        self.at_large().any(|&(_, tw)| tw.deg() > 1)
    }
}

/// A normal-form generator: a diagonal term or a node class.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum TautTerm {
    Diagonal(DiagonalTerm),
    Scroll(NodeScrollTerm),
}

impl TautTerm {
    pub fn codim(&self) -> u32 {
        match self {
            TautTerm::Diagonal(d) => d.codim(),
            TautTerm::Scroll(s) => s.codim(),
        }
    }

    pub fn total_length(&self) -> u32 {
        match self {
            TautTerm::Diagonal(d) => d.total_length(),
            TautTerm::Scroll(s) => s.total_length(),
        }
    }

    /// Decorated automorphism count used by the locus normalization.
    pub fn aut(&self) -> Rat {
        match self {
            TautTerm::Diagonal(d) => d.aut(),
            TautTerm::Scroll(s) => s.aut(),
        }
    }
}

fn fmt_dist_sizes(blocks: &[(u32, ScrollTwist)], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if blocks.is_empty() {
        return write!(f, "0");
    }
    for (i, (k, _)) in blocks.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{k}")?;
    }
    Ok(())
}

impl fmt::Display for TautTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TautTerm::Diagonal(d) => {
                write!(f, "Diag(")?;
                for (i, (k, _)) in d.blocks.iter().enumerate() {
                    if i > 0 {
                        write!(f, "|")?;
                    }
                    write!(f, "{k}")?;
                }
                write!(f, ")")?;
                if d.blocks.iter().any(|(_, tw)| !tw.is_one()) {
                    write!(f, "[")?;
                    for (i, (_, tw)) in d.blocks.iter().enumerate() {
                        if i > 0 {
                            write!(f, ",")?;
                        }
                        write!(f, "{tw}")?;
                    }
                    write!(f, "]")?;
                }
                Ok(())
            }
            TautTerm::Scroll(s) => {
                write!(
                    f,
                    "{}({};{}:",
                    if s.section { "Sect" } else { "F" },
                    s.j,
                    s.n
                )?;
                fmt_dist_sizes(&s.x_blocks, f)?;
                write!(f, "|")?;
                fmt_dist_sizes(&s.y_blocks, f)?;
                write!(f, ")")?;
                let twisted = s.at_large().any(|(_, tw)| !tw.is_one());
                if twisted {
                    write!(f, "[")?;
                    for (i, (_, tw)) in s.x_blocks.iter().enumerate() {
                        if i > 0 {
                            write!(f, ",")?;
                        }
                        write!(f, "{tw}")?;
                    }
                    write!(f, "|")?;
                    for (i, (_, tw)) in s.y_blocks.iter().enumerate() {
                        if i > 0 {
                            write!(f, ",")?;
                        }
                        write!(f, "{tw}")?;
                    }
                    write!(f, "]")?;
                }
                Ok(())
            }
        }
    }
}

/// A tautological class: exact-rational combination of normal-form terms on
/// the length-`m` Hilbert scheme of the given backend.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TautClass {
    pub m: u32,
    pub backend: Backend,
    pub terms: BTreeMap<TautTerm, Rat>,
}

impl TautClass {
    pub fn zero(m: u32, backend: Backend) -> Self {
        TautClass {
            m,
            backend,
            terms: BTreeMap::new(),
        }
    }

    /// The fundamental class of the Hilbert scheme.
    pub fn unit(m: u32, backend: Backend) -> Self {
        let blocks = vec![(1, BaseMonomial::ONE); m as usize];
        let term = TautTerm::Diagonal(DiagonalTerm::new(blocks));
        let coeff = Rat::one() / term.aut();
        let mut c = TautClass::zero(m, backend);
        c.add_term(term, coeff);
        c
    }

    /// The locus class of the diagonal with the given size distribution,
    /// singleton blocks padded to total length `m`, with trivial twists.
    pub fn diagonal_locus(m: u32, backend: Backend, dist: &Distribution) -> Self {
        let mut blocks: Vec<(u32, BaseMonomial)> = Vec::new();
        for k in dist.blocks() {
            blocks.push((k, BaseMonomial::ONE));
        }
        let used: u32 = dist.total_length();
        assert!(used <= m, "distribution longer than ambient length");
        for _ in 0..(m - used) {
            blocks.push((1, BaseMonomial::ONE));
        }
        let term = TautTerm::Diagonal(DiagonalTerm::new(blocks));
        let coeff = Rat::one() / term.aut();
        let mut c = TautClass::zero(m, backend);
        c.add_term(term, coeff);
        c
    }

    /// The discriminant polarization `Γ⟨m⟩`, stored as half the reduced
    /// pairwise diagonal.
    pub fn gamma(m: u32, backend: Backend) -> Self {
        if m < 2 {
            return TautClass::zero(m, backend);
        }
        TautClass::gamma_twisted(m, backend, &[])
    }

    /// `Γ⟨m⟩[α₁, α₂, …]`: the polarization with `α₁` on the doubled point and
    /// the remaining listed twists on free points; unlisted points untwisted.
    pub fn gamma_twisted(m: u32, backend: Backend, twists: &[BaseMonomial]) -> Self {
        assert!(m >= 2, "the polarization needs length at least 2");
        assert!((twists.len() as u32) < m, "too many twists");
        let mut blocks = vec![(2, twists.first().copied().unwrap_or(BaseMonomial::ONE))];
        for &t in twists.iter().skip(1) {
            blocks.push((1, t));
        }
        let listed_singletons = twists.len().saturating_sub(1) as u32;
        let unlisted = m - 2 - listed_singletons;
        for _ in 0..unlisted {
            blocks.push((1, BaseMonomial::ONE));
        }
        // With no listed free-point twist the free factor enters by its
        // fundamental class; with one listed it enters by the symmetrized
        // push of the twist, which the list normalization stores as is.
        let mut fact = Rat::one();
        if twists.len() <= 1 {
            for i in 1..=unlisted as i64 {
                fact *= int(i);
            }
        }
        let term = TautTerm::Diagonal(DiagonalTerm::new(blocks));
        let mut c = TautClass::zero(m, backend);
        c.add_term(term, crate::rat(1, 2) / fact);
        c.normalize()
    }

    /// Raw symmetrized-list class from explicit blocks with coefficient 1.
    pub fn from_blocks(m: u32, backend: Backend, blocks: Vec<(u32, BaseMonomial)>) -> Self {
        let term = TautTerm::Diagonal(DiagonalTerm::new(blocks));
        let mut c = TautClass::zero(m, backend);
        c.add_term(term, Rat::one());
        c
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, term: TautTerm, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        let e = self.terms.entry(term).or_insert_with(Rat::zero);
        *e += coeff;
        if e.is_zero() {
            let dead: Vec<TautTerm> = self
                .terms
                .iter()
                .filter(|(_, c)| c.is_zero())
                .map(|(t, _)| t.clone())
                .collect();
            for t in dead {
                self.terms.remove(&t);
            }
        }
    }

    pub fn add_class(&mut self, other: &TautClass) {
        assert_eq!(self.m, other.m, "ambient length mismatch");
        for (t, c) in &other.terms {
            self.add_term(t.clone(), c.clone());
        }
    }

    pub fn scale(&self, c: &Rat) -> TautClass {
        if c.is_zero() {
            return TautClass::zero(self.m, self.backend);
        }
        TautClass {
            m: self.m,
            backend: self.backend,
            terms: self.terms.iter().map(|(t, v)| (t.clone(), v * c)).collect(),
        }
    }

    /// Canonicalize: purge zero coefficients, dimension-overflow terms,
    /// overfull twists, and node terms in a nodeless backend. Idempotent.
    pub fn normalize(&self) -> TautClass {
        let dim = self.m + self.backend.dim_b();
        let mut out = TautClass::zero(self.m, self.backend);
        for (t, c) in &self.terms {
            if c.is_zero() {
                continue;
            }
            debug_assert_eq!(t.total_length(), self.m, "term length mismatch");
            match t {
                TautTerm::Diagonal(d) => {
                    if d.blocks
                        .iter()
                        .any(|&(_, tw)| tw.deg() > self.backend.dim_x())
                    {
                        continue;
                    }
                    if d.codim() > dim {
                        continue;
                    }
                    out.add_term(t.clone(), c.clone());
                }
                TautTerm::Scroll(s) => {
                    if !self.backend.has_nodes() {
                        continue;
                    }
                    debug_assert!(s.n >= 2 && s.j >= 1 && s.j < s.n, "scroll index range");
                    if s.overfull() || s.codim() > dim {
                        continue;
                    }
                    out.add_term(t.clone(), c.clone());
                }
            }
        }
        out
    }

    /// The locus-normalized coefficient of a term (coefficient times the
    /// decorated automorphism count); this is what the surface syntax prints.
    pub fn locus_coeff(&self, t: &TautTerm) -> Rat {
        self.terms
            .get(t)
            .map(|c| c * t.aut())
            .unwrap_or_else(Rat::zero)
    }
}

impl fmt::Display for TautClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (t, c) in &self.terms {
            let locus = c * t.aut();
            let neg = locus < Rat::zero();
            let abs = if neg { -locus.clone() } else { locus.clone() };
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
            if abs.is_one() {
                write!(f, "{t}")?;
            } else if abs.is_integer() {
                write!(f, "{}*{t}", abs.numer())?;
            } else {
                write!(f, "{}/{}*{t}", abs.numer(), abs.denom())?;
            }
        }
        Ok(())
    }
}
