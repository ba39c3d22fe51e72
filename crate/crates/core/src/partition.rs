//! Block-size distributions (unordered partitions by size) and the
//! symmetrization-degree coefficients used by the diagonal calculus.

use crate::{int, Rat};
use num_traits::One;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

/// A distribution: finitely many block sizes with multiplicities.
///
/// The canonical form never stores zero multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize)]
pub struct Distribution {
    freq: BTreeMap<u32, u32>,
}

/// Error for operations handed an out-of-range block selector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DistError {
    /// `promote` was asked for the ℓ-th distinct size but fewer exist.
    NoSuchSizeIndex(usize),
    /// `unite` was asked for blocks that are not present.
    InsufficientBlocks(u32, u32),
    /// A ν-coefficient denominator vanished (no pair of equal-size blocks).
    NoPair(u32),
    /// Parts do not recombine to the parent distribution.
    PartsMismatch,
}

impl fmt::Display for DistError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DistError::NoSuchSizeIndex(l) => write!(f, "no {l}-th distinct block size"),
            DistError::InsufficientBlocks(a, b) => {
                write!(f, "not enough blocks of sizes {a} and {b}")
            }
            DistError::NoPair(a) => write!(f, "no pair of blocks of size {a}"),
            DistError::PartsMismatch => write!(f, "parts do not match the parent distribution"),
        }
    }
}

impl std::error::Error for DistError {}

impl Distribution {
    pub fn empty() -> Self {
        Distribution::default()
    }

    /// Build from a list of block sizes, e.g. `[2, 2, 1]`.
    pub fn from_sizes(sizes: &[u32]) -> Self {
        let mut d = Distribution::empty();
        for &s in sizes {
            d.insert(s, 1);
        }
        d
    }

    /// Insert `mult` blocks of the given size.
    pub fn insert(&mut self, size: u32, mult: u32) {
        if size == 0 || mult == 0 {
            return;
        }
        *self.freq.entry(size).or_insert(0) += mult;
    }

    /// Multiplicity of a size (zero if absent).
    pub fn mult(&self, size: u32) -> u32 {
        self.freq.get(&size).copied().unwrap_or(0)
    }

    /// Sum of `size · multiplicity`.
    pub fn total_length(&self) -> u32 {
        self.freq.iter().map(|(s, m)| s * m).sum()
    }

    /// Number of blocks.
    pub fn block_count(&self) -> u32 {
        self.freq.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.freq.is_empty()
    }

    /// Distinct sizes in decreasing order.
    pub fn sizes_desc(&self) -> Vec<u32> {
        self.freq.keys().rev().copied().collect()
    }

    /// All blocks as a sorted (decreasing) list of sizes.
    pub fn blocks(&self) -> Vec<u32> {
        let mut v = Vec::new();
        for (&s, &m) in self.freq.iter().rev() {
            for _ in 0..m {
                v.push(s);
            }
        }
        v
    }

    /// Frequency map accessor.
    pub fn freq(&self) -> &BTreeMap<u32, u32> {
        &self.freq
    }

    /// Disjoint union: frequency functions add pointwise.
    pub fn coprod(&self, other: &Distribution) -> Distribution {
        let mut d = self.clone();
        for (&s, &m) in &other.freq {
            d.insert(s, m);
        }
        d
    }

    /// Remove one block of size `k`. Returns `None` (the empty marker) when no
    /// such block exists, matching the convention `(n.) \ k = ∅`.
    pub fn remove_block(&self, k: u32) -> Option<Distribution> {
        let m = self.mult(k);
        if m == 0 {
            return None;
        }
        let mut d = self.clone();
        if m == 1 {
            d.freq.remove(&k);
        } else {
            d.freq.insert(k, m - 1);
        }
        Some(d)
    }

    /// `(n.)^{-ℓ}`: remove one block of the ℓ-th distinct size (1-based, sizes
    /// decreasing) and add one of that size plus 1.
    pub fn promote(&self, l: usize) -> Result<Distribution, DistError> {
        let sizes = self.sizes_desc();
        if l == 0 || l > sizes.len() {
            return Err(DistError::NoSuchSizeIndex(l));
        }
        let n = sizes[l - 1];
        let mut d = self.remove_block(n).expect("size is present");
        d.insert(n + 1, 1);
        Ok(d)
    }

    /// `u_{j,ℓ}`: unite a block of size `a` with a block of size `b`.
    pub fn unite(&self, a: u32, b: u32) -> Result<Distribution, DistError> {
        let enough = if a == b {
            self.mult(a) >= 2
        } else {
            self.mult(a) >= 1 && self.mult(b) >= 1
        };
        if !enough {
            return Err(DistError::InsufficientBlocks(a, b));
        }
        let mut d = self
            .remove_block(a)
            .and_then(|d| d.remove_block(b))
            .expect("both blocks present");
        d.insert(a + b, 1);
        Ok(d)
    }

    /// `a(n̲) = ∏ μ(size)!`, the symmetrization degree of an ordered model.
    pub fn aut_count(&self) -> Rat {
        let mut acc = Rat::one();
        for &m in self.freq.values() {
            for i in 1..=m as i64 {
                acc *= int(i);
            }
        }
        acc
    }
}

impl fmt::Display for Distribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "()");
        }
        write!(f, "(")?;
        let mut first = true;
        for (&s, &m) in self.freq.iter().rev() {
            if !first {
                write!(f, ",")?;
            }
            first = false;
            if m == 1 {
                write!(f, "{s}")?;
            } else {
                write!(f, "{s}^{m}")?;
            }
        }
        write!(f, ")")
    }
}

/// Multidistribution data `(n : n̲' | n̲")`: a nodebound block of size `n`
/// plus at-large blocks split into an `x` and a `y` part. For nonseparating
/// nodes the convention puts everything in the `x` part.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct MultiDistribution {
    pub nodebound: u32,
    pub x_part: Distribution,
    pub y_part: Distribution,
}

impl MultiDistribution {
    pub fn new(nodebound: u32, x_part: Distribution, y_part: Distribution) -> Self {
        MultiDistribution {
            nodebound,
            x_part,
            y_part,
        }
    }

    pub fn total_length(&self) -> u32 {
        self.nodebound + self.x_part.total_length() + self.y_part.total_length()
    }
}

impl fmt::Display for MultiDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}:{}|{})", self.nodebound, self.x_part, self.y_part)
    }
}

/// The ν coefficient of the diagonal multiplication rule, with `μ` read from
/// the distribution being multiplied: `(μ(a+b)+1)/(μ(a)(μ(b)−1))` when
/// `a = b`, and `(μ(a+b)+1)/(μ(a)μ(b))` otherwise.
pub fn nu_coeff(d: &Distribution, a: u32, b: u32) -> Result<Rat, DistError> {
    let num = int(d.mult(a + b) as i64 + 1);
    let den = if a == b {
        let m = d.mult(a) as i64;
        if m < 2 {
            return Err(DistError::NoPair(a));
        }
        int(m * (m - 1))
    } else {
        let (ma, mb) = (d.mult(a) as i64, d.mult(b) as i64);
        if ma == 0 || mb == 0 {
            return Err(DistError::InsufficientBlocks(a, b));
        }
        int(ma * mb)
    };
    Ok(num / den)
}

/// Symmetrization-degree ratio `a(n̲')a(n̲")/a(n̲)` for a node-scroll split,
/// written in the two closed forms the split bookkeeping uses: separating
/// nodes get the binomial form in the removed size, nonseparating nodes get
/// `1/μ(n_ℓ)`.
pub fn scroll_ratio(
    phi: &MultiDistribution,
    parent: &Distribution,
    separating: bool,
) -> Result<Rat, DistError> {
    let n = phi.nodebound;
    let rest = match parent.remove_block(n) {
        Some(r) => r,
        None => return Err(DistError::PartsMismatch),
    };
    if phi.x_part.coprod(&phi.y_part) != rest {
        return Err(DistError::PartsMismatch);
    }
    let mu = int(parent.mult(n) as i64);
    if separating {
        let c = crate::binomial((parent.mult(n) - 1) as u64, phi.x_part.mult(n) as u64);
        Ok(Rat::one() / (mu * int(c as i64)))
    } else {
        Ok(Rat::one() / mu)
    }
}

/// Full symmetrization ratio `a(n')a(n")/a(n̲)` computed directly; agrees
/// with [`scroll_ratio`] on the removed size and additionally accounts for
/// splits of the other sizes.
pub fn full_split_ratio(phi: &MultiDistribution, parent: &Distribution) -> Result<Rat, DistError> {
    let rest = parent
        .remove_block(phi.nodebound)
        .ok_or(DistError::PartsMismatch)?;
    if phi.x_part.coprod(&phi.y_part) != rest {
        return Err(DistError::PartsMismatch);
    }
    Ok(phi.x_part.aut_count() * phi.y_part.aut_count() / parent.aut_count())
}

/// Enumerate all ways of assigning the blocks of `d` to two labelled sides.
/// Assignments are returned with multiplicity: a split of shape
/// `(n'|n")` appears `∏ C(μ(s), μ'(s))` times.
pub fn split_assignments(d: &Distribution) -> Vec<(Distribution, Distribution)> {
    let mut out = vec![(Distribution::empty(), Distribution::empty())];
    for (&s, &m) in d.freq() {
        let mut next = Vec::new();
        for (x, y) in &out {
            for k in 0..=m {
                let mut x2 = x.clone();
                let mut y2 = y.clone();
                x2.insert(s, k);
                y2.insert(s, m - k);
                let copies = crate::binomial(m as u64, k as u64);
                for _ in 0..copies {
                    next.push((x2.clone(), y2.clone()));
                }
            }
        }
        out = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn coprod_adds_pointwise() {
        let a = Distribution::from_sizes(&[2, 2]);
        let b = Distribution::from_sizes(&[1, 1, 1]);
        let c = a.coprod(&b);
        assert_eq!(c.mult(2), 2);
        assert_eq!(c.mult(1), 3);
        assert_eq!(Distribution::empty().coprod(&a), a);
        let t = Distribution::from_sizes(&[3]);
        assert_eq!(t.coprod(&t), Distribution::from_sizes(&[3, 3]));
    }

    #[test]
    fn remove_block_and_marker() {
        let d = Distribution::from_sizes(&[2, 2, 1]);
        assert_eq!(d.remove_block(2), Some(Distribution::from_sizes(&[2, 1])));
        assert_eq!(Distribution::from_sizes(&[3]).remove_block(2), None);
        assert_eq!(
            Distribution::from_sizes(&[1]).remove_block(1),
            Some(Distribution::empty())
        );
    }

    #[test]
    fn promote_examples() {
        let d = Distribution::from_sizes(&[3, 1, 1]);
        assert_eq!(d.promote(2).unwrap(), Distribution::from_sizes(&[3, 2, 1]));
        assert_eq!(
            Distribution::from_sizes(&[2]).promote(1).unwrap(),
            Distribution::from_sizes(&[3])
        );
        assert_eq!(
            Distribution::from_sizes(&[2, 2]).promote(1).unwrap(),
            Distribution::from_sizes(&[3, 2])
        );
        assert!(Distribution::from_sizes(&[2]).promote(2).is_err());
    }

    #[test]
    fn unite_examples() {
        assert_eq!(
            Distribution::from_sizes(&[2, 2]).unite(2, 2).unwrap(),
            Distribution::from_sizes(&[4])
        );
        assert_eq!(
            Distribution::from_sizes(&[2, 1, 1]).unite(2, 1).unwrap(),
            Distribution::from_sizes(&[3, 1])
        );
        assert_eq!(
            Distribution::from_sizes(&[1, 1, 1]).unite(1, 1).unwrap(),
            Distribution::from_sizes(&[2, 1])
        );
        assert!(Distribution::from_sizes(&[2]).unite(2, 2).is_err());
    }

    #[test]
    fn aut_counts() {
        assert_eq!(Distribution::from_sizes(&[2, 2, 1]).aut_count(), int(2));
        let mut d = Distribution::empty();
        d.insert(1, 5);
        assert_eq!(d.aut_count(), int(120));
        assert_eq!(Distribution::from_sizes(&[3, 2, 1]).aut_count(), int(1));
    }

    #[test]
    fn nu_examples() {
        // blocks (2², 1^{m−4}) with m = 10
        let mut d = Distribution::from_sizes(&[2, 2]);
        d.insert(1, 6);
        assert_eq!(nu_coeff(&d, 2, 2).unwrap(), rat(1, 2));
        assert_eq!(nu_coeff(&d, 1, 1).unwrap(), rat(3, 30)); // 3/((m−4)(m−5)) at m = 10
        let e = Distribution::from_sizes(&[2, 1]);
        assert_eq!(nu_coeff(&e, 2, 1).unwrap(), int(1));
        assert!(nu_coeff(&Distribution::from_sizes(&[2]), 2, 2).is_err());
    }

    #[test]
    fn nu_pair_sum_reproduces_loose_count() {
        // Summing ν over all unordered pairs of equal-size blocks gives
        // (μ(2a)+1)/2, e.g. 3/2 for two 1-blocks merging in (2²,1^{m−4}).
        for m in 6..=9u32 {
            let mut d = Distribution::from_sizes(&[2, 2]);
            d.insert(1, m - 4);
            let pairs = int((m as i64 - 4) * (m as i64 - 5) / 2);
            let total = nu_coeff(&d, 1, 1).unwrap() * pairs;
            assert_eq!(total, rat(3, 2));
        }
    }

    #[test]
    fn scroll_ratio_examples() {
        // parent (2,1^{m−2}), remove the 2-block: 1/μ(2) = 1.
        let mut parent = Distribution::from_sizes(&[2]);
        parent.insert(1, 5);
        let mut x = Distribution::empty();
        x.insert(1, 2);
        let mut y = Distribution::empty();
        y.insert(1, 3);
        let phi = MultiDistribution::new(2, x, y);
        assert_eq!(scroll_ratio(&phi, &parent, false).unwrap(), int(1));

        // parent (2²,1^{m−4}), separating, the other 2 in the x part: 1/2.
        let mut parent = Distribution::from_sizes(&[2, 2]);
        parent.insert(1, 4);
        let mut x = Distribution::from_sizes(&[2]);
        x.insert(1, 1);
        let mut y = Distribution::empty();
        y.insert(1, 3);
        let phi = MultiDistribution::new(2, x, y);
        assert_eq!(scroll_ratio(&phi, &parent, true).unwrap(), rat(1, 2));

        // single block: ratio 1.
        let parent = Distribution::from_sizes(&[4]);
        let phi = MultiDistribution::new(4, Distribution::empty(), Distribution::empty());
        assert_eq!(scroll_ratio(&phi, &parent, false).unwrap(), int(1));
        assert_eq!(scroll_ratio(&phi, &parent, true).unwrap(), int(1));

        // mismatched parts are rejected.
        let bad = MultiDistribution::new(4, Distribution::from_sizes(&[1]), Distribution::empty());
        assert!(scroll_ratio(&bad, &parent, false).is_err());
    }

    #[test]
    fn full_ratio_matches_example_coefficient() {
        // a(n')a(n")/a(n̲) = 1/(2 C(m−4, a)) for parent (2²,1^{m−4}),
        // split (2,1^a | 1^{m−4−a}).
        let m = 9u32;
        let mut parent = Distribution::from_sizes(&[2, 2]);
        parent.insert(1, m - 4);
        for a in 0..=(m - 4) {
            let mut x = Distribution::from_sizes(&[2]);
            x.insert(1, a);
            let mut y = Distribution::empty();
            y.insert(1, m - 4 - a);
            let phi = MultiDistribution::new(2, x, y);
            let expect = Rat::one() / int(2 * crate::binomial((m - 4) as u64, a as u64) as i64);
            assert_eq!(full_split_ratio(&phi, &parent).unwrap(), expect);
        }
    }

    #[test]
    fn operations_preserve_length() {
        let d = Distribution::from_sizes(&[3, 2, 2, 1]);
        assert_eq!(d.unite(2, 1).unwrap().total_length(), d.total_length());
        assert_eq!(d.promote(1).unwrap().total_length(), d.total_length() + 1);
        let e = Distribution::from_sizes(&[4, 1]);
        assert_eq!(
            d.coprod(&e).total_length(),
            d.total_length() + e.total_length()
        );
    }

    #[test]
    fn aut_count_submultiplicative_on_unions() {
        // a(d ⊔ e) ≥ a(d)·a(e), with equality exactly when the supports are
        // disjoint, checked over small enumerated distributions.
        let dists: Vec<Distribution> = vec![
            Distribution::from_sizes(&[1]),
            Distribution::from_sizes(&[2]),
            Distribution::from_sizes(&[1, 1]),
            Distribution::from_sizes(&[2, 1]),
            Distribution::from_sizes(&[2, 2]),
            Distribution::from_sizes(&[3, 1, 1]),
        ];
        for d in &dists {
            for e in &dists {
                let joint = d.coprod(e).aut_count();
                let split = d.aut_count() * e.aut_count();
                assert!(joint >= split, "{d} {e}");
                let disjoint = d.freq().keys().all(|s| !e.freq().contains_key(s));
                assert_eq!(joint == split, disjoint, "{d} {e}");
            }
        }
    }

    #[test]
    fn split_assignment_multiplicities() {
        let mut d = Distribution::empty();
        d.insert(1, 3);
        let splits = split_assignments(&d);
        assert_eq!(splits.len(), 8);
        let count_a1 = splits.iter().filter(|(x, _)| x.mult(1) == 1).count();
        assert_eq!(count_a1, 3);
    }
}
