//! Formal closed forms: powers of the polarization on the length-2 scheme
//! with `ψ` classes kept symbolic, polarization-bundle classes of node
//! scrolls in the extreme case, and the relative double-point expansion.

use crate::base::{Backend, CharExpr, Symbol};
use crate::gamma::{evaluate, gamma_power_class};
use crate::taut::TautClass;
use crate::{choose2, int, rat, Rat};
use num_traits::One;
use std::fmt;

/// Complete homogeneous polynomial `ψ_x^k + ψ_x^{k−1}ψ_y + … + ψ_y^k`;
/// empty for negative `k`.
pub fn psi_sum(k: i64) -> CharExpr {
    let mut out = CharExpr::zero();
    if k < 0 {
        return out;
    }
    let px = CharExpr::symbol(Symbol::PsiX);
    let py = CharExpr::symbol(Symbol::PsiY);
    for a in 0..=k {
        out = &out + &(&px.pow(a as u32) * &py.pow((k - a) as u32));
    }
    out
}

/// The closed form for `(−Γ⟨2⟩)^k`: a dualizing-twisted diagonal plus a
/// node-local part polynomial in the `ψ` classes.
#[derive(Debug, Clone)]
pub struct Gamma2Power {
    pub k: u32,
    /// exponent of the dualizing twist in the diagonal part `−Γ[ω^{k−1}]`
    pub omega_power: u32,
    /// coefficient polynomial of the section part `(−Γ⟨2⟩)` under `½Σ_s δ_*`
    pub section_poly: CharExpr,
    /// coefficient polynomial of the scroll part `−ψ_xψ_y(…)`
    pub scroll_poly: CharExpr,
}

/// Emit `(−Γ⟨2⟩)^k` in closed form. For `k = 2` the node part is the plain
/// half-sum of scrolls from the polarization square; for `k ≥ 3` it is the
/// `ψ`-polynomial form on the scroll over the boundary.
pub fn gamma2_power_symbolic(k: u32) -> Gamma2Power {
    assert!(k >= 1);
    Gamma2Power {
        k,
        omega_power: k - 1,
        section_poly: psi_sum(k as i64 - 3),
        scroll_poly: psi_sum(k as i64 - 4),
    }
}

impl fmt::Display for Gamma2Power {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(-G2)^{} = -G2[w^{}]", self.k, self.omega_power)?;
        if self.k == 2 {
            return write!(f, " + 1/2*sum_s F(1;2:0|0)");
        }
        write!(
            f,
            " + 1/2*sum_s delta_s*( ({})*(-G2) - psix*psiy*({}) )",
            self.section_poly, self.scroll_poly
        )
    }
}

impl Gamma2Power {
    /// Specialize to a pencil: `ψ` classes vanish on the zero-dimensional
    /// boundary, and when `k` is the dimension of the length-2 scheme the
    /// class integrates to a character polynomial. Returns `∫ (Γ⟨2⟩)^k`.
    pub fn pencil_value(&self) -> Option<CharExpr> {
        if self.k != 3 {
            return None;
        }
        // −Γ[ω²] ↦ −½w2; the section part survives as s₀ = 1 with the
        // node section of degree one: (−Γ⟨2⟩)·F ↦ +1 per node.
        let diag = CharExpr::symbol(Symbol::W2).scale(&rat(-1, 2));
        let node = CharExpr::symbol(Symbol::Sig).scale(&rat(1, 2));
        let minus_cubed = &diag + &node;
        // (−Γ)³ = −Γ³
        Some(minus_cubed.scale(&-Rat::one()))
    }

    /// The image on the relative symmetric product: the scroll part
    /// collapses under the cycle map and only the section polynomial
    /// remains.
    pub fn symmetric_product_image(&self) -> String {
        format!(
            "-G2[w^{}] + 1/2*sum_s delta_s*({})",
            self.omega_power, self.section_poly
        )
    }
}

/// Single polarization-bundle class `E_j` of the extreme-case node scroll
/// family, for any bundle index `1 ≤ j ≤ n`.
pub fn extreme_e(n: u32, j: u32) -> CharExpr {
    assert!(j >= 1 && j <= n);
    let cx = choose2((n - j + 1) as i64);
    let cy = choose2(j as i64);
    &CharExpr::symbol(Symbol::PsiX).scale(&int(cx))
        + &CharExpr::symbol(Symbol::PsiY).scale(&int(cy))
}

/// Polarization-bundle first Chern classes `(e_j, e_{j+1})` of a node scroll
/// in the extreme case (every point nodebound): classes on the boundary base
/// in the `ψ` symbols.
pub fn scroll_e_classes_extreme(n: u32, j: u32) -> (CharExpr, CharExpr) {
    assert!(j >= 1 && j < n);
    (extreme_e(n, j), extreme_e(n, j + 1))
}

/// Swap the branch labels in a `ψ`-polynomial.
pub fn swap_branches(e: &CharExpr) -> CharExpr {
    let mut out = CharExpr::zero();
    for (m, c) in &e.terms {
        let mut swapped = crate::base::CharMonomial::one();
        for (&s, &p) in &m.0 {
            let s2 = match s {
                Symbol::PsiX => Symbol::PsiY,
                Symbol::PsiY => Symbol::PsiX,
                other => other,
            };
            *swapped.0.entry(s2).or_insert(0) += p;
        }
        out.add_term(swapped, c.clone());
    }
    out
}

/// The relative double-point expansion `s_n(Λ₂(L)^*)` on the ordered square:
/// `Σ_{i=0}^n L₁^{n−i}(L₂ − Γ)^i` as a formal polynomial in `L1, L2, Gamma`.
pub fn double_point_class(n: u32) -> CharExpr {
    let l1 = CharExpr::symbol(Symbol::L1);
    let l2g = &CharExpr::symbol(Symbol::L2) - &CharExpr::symbol(Symbol::Gam);
    let mut out = CharExpr::zero();
    for i in 0..=n {
        out = &out + &(&l1.pow(n - i) * &l2g.pow(i));
    }
    out
}

/// The pushed-down double-point display on the base, with `κ` classes of the
/// polarization, the mixed `κ` correction, and node terms carrying `ψ`
/// powers. The free index of the display is summed over the polarization
/// powers that contribute.
pub fn double_point_pushdown(n: u32) -> CharExpr {
    let sign = if n.is_multiple_of(2) {
        Rat::one()
    } else {
        -Rat::one()
    };
    let mut out = CharExpr::zero();
    for i in 1..n {
        out = &out
            + &(&CharExpr::symbol(Symbol::KappaL(i - 1))
                * &CharExpr::symbol(Symbol::KappaL(n - i - 1)));
    }
    for j in 2..n {
        out = &out - &CharExpr::symbol(Symbol::KappaLw(n - j - 1, j - 2));
    }
    for j in 2..=n {
        for k in 0..=(j - 2) {
            let node = &CharExpr::symbol(Symbol::ThetaL(n - j))
                * &(&CharExpr::symbol(Symbol::PsiX).pow(j - 2 - k)
                    * &CharExpr::symbol(Symbol::PsiY).pow(k));
            out = &out + &node;
        }
    }
    out.scale(&sign)
}

/// Coefficient of `Gamma^k` in the double-point expansion, as a polynomial
/// in `L1, L2`; used to cross-check the expansion against the closed power
/// forms.
pub fn double_point_gamma_coefficient(n: u32, k: u32) -> CharExpr {
    let expansion = double_point_class(n);
    let mut out = CharExpr::zero();
    for (m, c) in &expansion.terms {
        let gpow = m.0.get(&Symbol::Gam).copied().unwrap_or(0);
        if gpow != k {
            continue;
        }
        let mut rest = crate::base::CharMonomial::one();
        for (&s, &p) in &m.0 {
            if s != Symbol::Gam {
                rest.0.insert(s, p);
            }
        }
        out.add_term(rest, c.clone());
    }
    out
}

/// Engine route for `∫(Γ⟨2⟩)^k` on a pencil, for cross-checking the closed
/// form.
pub fn gamma2_pencil_engine(k: u32) -> Option<CharExpr> {
    evaluate(&gamma_power_class(k, 2, Backend::Pencil)).ok()
}

/// The polarization square on the length-2 scheme as a class, matching the
/// `k = 2` display of the closed form.
pub fn gamma2_square_class(backend: Backend) -> TautClass {
    gamma_power_class(2, 2, backend)
}
