//! Real affine roots, affine weights, and the extended affine Weyl group
//! `W ⋉ P∨` with its linear and dot actions.
//!
//! A weight is stored as `λ̄ + kΛ₀ + xδ`. A real root `α + nδ` is stored by
//! the index of `α` in its host [`FiniteRootSystem`] plus the integer `n`.
//! Extended Weyl elements are kept in the normal form `t_μ w`.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{frac, int, Vector, Q};
use crate::roots::FiniteRootSystem;
use crate::weyl::FiniteWeylElement;

/// The real root `α + nδ`, with `α` given by root index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RealRoot {
    pub root: usize,
    pub n: i64,
}

impl RealRoot {
    pub fn new(rs: &FiniteRootSystem, alpha: &Vector, n: i64) -> Result<Self> {
        let root = rs
            .root_index(alpha)
            .ok_or_else(|| Error::NotARoot(format!("{alpha} in {}", rs.lie_type())))?;
        Ok(RealRoot { root, n })
    }

    pub fn alpha<'a>(&self, rs: &'a FiniteRootSystem) -> &'a Vector {
        rs.root(self.root)
    }

    /// `α + nδ > 0` iff `n > 0`, or `n = 0` and `α > 0`.
    pub fn is_positive(&self, rs: &FiniteRootSystem) -> bool {
        self.n > 0 || (self.n == 0 && rs.is_positive(self.root))
    }

    pub fn negate(&self, rs: &FiniteRootSystem) -> RealRoot {
        RealRoot {
            root: rs.negate(self.root),
            n: -self.n,
        }
    }

    /// Height with respect to `{α₀, …, α_l}`; `δ` has height `h`.
    pub fn affine_height(&self, rs: &FiniteRootSystem) -> i64 {
        rs.height(self.root) + self.n * rs.coxeter_number()
    }

    /// `<β, γ∨>` for two real roots; `δ` pairs trivially with coroots.
    pub fn pair(&self, rs: &FiniteRootSystem, other: &RealRoot) -> i64 {
        rs.pairing(self.root, other.root)
    }

    /// Simple-root coefficients of `α`, with `n`.
    pub fn display<'a>(&self, rs: &'a FiniteRootSystem) -> RealRootDisplay<'a> {
        RealRootDisplay { rs, root: *self }
    }
}

pub struct RealRootDisplay<'a> {
    rs: &'a FiniteRootSystem,
    root: RealRoot,
}

impl fmt::Display for RealRootDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.rs.coeffs(self.root.root);
        write!(f, "[")?;
        for (i, x) in c.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]{:+}d", self.root.n)
    }
}

/// `{α₀, α₁, …, α_l}` with `α₀ = −θ + δ`.
pub fn affine_simple_roots(rs: &FiniteRootSystem) -> Vec<RealRoot> {
    std::iter::once(RealRoot {
        root: rs.negate(rs.theta()),
        n: 1,
    })
    .chain(rs.simple_roots().iter().map(|&root| RealRoot { root, n: 0 }))
    .collect()
}

/// A weight `λ̄ + kΛ₀ + xδ` of the affine Cartan subalgebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineWeight {
    pub finite: Vector,
    pub level: Q,
    pub delta: Q,
}

impl AffineWeight {
    pub fn new(finite: Vector, level: Q, delta: Q) -> Self {
        AffineWeight {
            finite,
            level,
            delta,
        }
    }

    /// `kΛ₀`.
    pub fn vacuum(rs: &FiniteRootSystem, level: Q) -> Self {
        AffineWeight::new(Vector::zero(rs.dim()), level, Q::zero())
    }

    /// `Σ a_i ω_i + kΛ₀` from Dynkin labels.
    pub fn from_labels(rs: &FiniteRootSystem, labels: &[Q], level: Q) -> Result<Self> {
        Ok(AffineWeight::new(rs.weight_from_labels(labels)?, level, Q::zero()))
    }

    pub fn labels(&self, rs: &FiniteRootSystem) -> Vec<Q> {
        rs.labels(&self.finite)
    }

    /// `<λ, β∨> = <λ̄, α∨> + n · (2/(α|α)) · k` for `β = α + nδ`.
    pub fn pair(&self, rs: &FiniteRootSystem, beta: &RealRoot) -> Q {
        rs.pair_with_coroot(&self.finite, beta.root)
            + int(beta.n * rs.coroot_factor(beta.root)) * &self.level
    }

    pub fn add(&self, other: &AffineWeight) -> AffineWeight {
        AffineWeight::new(
            &self.finite + &other.finite,
            &self.level + &other.level,
            &self.delta + &other.delta,
        )
    }

    pub fn sub(&self, other: &AffineWeight) -> AffineWeight {
        AffineWeight::new(
            &self.finite - &other.finite,
            &self.level - &other.level,
            &self.delta - &other.delta,
        )
    }

    /// The same weight with its `δ`-coefficient dropped.
    pub fn without_delta(&self) -> AffineWeight {
        AffineWeight::new(self.finite.clone(), self.level.clone(), Q::zero())
    }
}

/// `ρ̂ = ρ + h∨Λ₀`.
pub fn rho_hat(rs: &FiniteRootSystem) -> AffineWeight {
    AffineWeight::new(rs.rho().clone(), int(rs.dual_coxeter_number()), Q::zero())
}

/// An element `t_μ w` of the extended affine Weyl group `W ⋉ P∨`.
#[derive(Debug, Clone)]
pub struct ExtendedWeylElement {
    finite: FiniteWeylElement,
    translation: Vector,
    coords: Vec<i64>,
}

impl PartialEq for ExtendedWeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords && self.finite == other.finite
    }
}

impl Eq for ExtendedWeylElement {}

impl std::hash::Hash for ExtendedWeylElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.coords.hash(state);
        self.finite.hash(state);
    }
}

impl ExtendedWeylElement {
    pub fn new(rs: &FiniteRootSystem, finite: FiniteWeylElement, translation: Vector) -> Result<Self> {
        let coords = rs
            .coweight_coords(&translation)
            .ok_or_else(|| Error::NotExtendedWeyl(translation.to_string()))?;
        Ok(ExtendedWeylElement {
            finite,
            translation,
            coords,
        })
    }

    /// `t_μ w` with `μ` given in fundamental-coweight coordinates.
    pub fn from_coords(rs: &FiniteRootSystem, finite: FiniteWeylElement, coords: Vec<i64>) -> Self {
        ExtendedWeylElement {
            finite,
            translation: rs.coweight_from_coords(&coords),
            coords,
        }
    }

    pub fn identity(rs: &FiniteRootSystem) -> Self {
        Self::from_finite(rs, FiniteWeylElement::identity(rs))
    }

    pub fn from_finite(rs: &FiniteRootSystem, finite: FiniteWeylElement) -> Self {
        Self::from_coords(rs, finite, vec![0; rs.rank()])
    }

    pub fn translation(rs: &FiniteRootSystem, mu: Vector) -> Result<Self> {
        Self::new(rs, FiniteWeylElement::identity(rs), mu)
    }

    /// `s_{α+nδ} = t_{−nα∨} s_α`.
    pub fn reflection(rs: &FiniteRootSystem, beta: &RealRoot) -> Self {
        let s = FiniteWeylElement::reflection(rs, beta.root);
        let coroot = rs.coroot(beta.root).scale(&int(-beta.n));
        Self::new(rs, s, coroot).expect("coroots lie in P∨")
    }

    /// Affine simple reflection `s_i`, `i ∈ 0..=l`: `i = 0` is the reflection
    /// in `α₀ = −θ + δ`, `i ≥ 1` the finite simple reflection `s_{α_i}`
    /// (finite simple index `i − 1`).
    pub fn simple_reflection(rs: &FiniteRootSystem, i: usize) -> Result<Self> {
        if i > rs.rank() {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: rs.rank(),
            });
        }
        let mut s = Self::reflection(rs, &affine_simple_roots(rs)[i]);
        if i > 0 {
            s.finite = FiniteWeylElement::simple_reflection(rs, i - 1)?;
        }
        Ok(s)
    }

    pub fn finite_part(&self) -> &FiniteWeylElement {
        &self.finite
    }

    pub fn translation_vector(&self) -> &Vector {
        &self.translation
    }

    /// `μ` in fundamental-coweight coordinates.
    pub fn translation_coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_identity(&self) -> bool {
        self.finite.is_identity() && self.coords.iter().all(|&c| c == 0)
    }

    /// `(t_μ w)(t_ν v) = t_{μ + wν} wv`.
    pub fn compose(&self, rs: &FiniteRootSystem, other: &Self) -> Self {
        let moved = self.finite.apply(&other.translation);
        let coords: Vec<i64> = self
            .coords
            .iter()
            .zip(rs.coweight_coords(&moved).expect("W preserves P∨"))
            .map(|(a, b)| a + b)
            .collect();
        Self::from_coords(rs, self.finite.compose(&other.finite), coords)
    }

    /// `(t_μ w)⁻¹ = t_{−w⁻¹μ} w⁻¹`.
    pub fn inverse(&self, rs: &FiniteRootSystem) -> Self {
        let inv = self.finite.inverse();
        let moved = -&inv.apply(&self.translation);
        let coords = rs.coweight_coords(&moved).expect("W preserves P∨");
        Self::from_coords(rs, inv, coords)
    }

    /// Membership in `Ŵ = W ⋉ Q∨`.
    pub fn is_in_affine_weyl_group(&self, rs: &FiniteRootSystem) -> bool {
        rs.coroot_coords(&self.translation).is_some()
    }

    /// `(w(α) | μ)` for root index `a`.
    fn shift(&self, rs: &FiniteRootSystem, a: usize) -> i64 {
        rs.root_dot_coweight(self.finite.act_on_root_index(a), &self.coords)
    }

    /// `t_μ w (α + nδ) = w(α) + (n − (w(α)|μ))δ`.
    pub fn act_on_root(&self, rs: &FiniteRootSystem, beta: &RealRoot) -> RealRoot {
        RealRoot {
            root: self.finite.act_on_root_index(beta.root),
            n: beta.n - self.shift(rs, beta.root),
        }
    }

    /// Linear action on `ĥ* ⊕ ℂδ`.
    pub fn act_on_weight(&self, rs: &FiniteRootSystem, lambda: &AffineWeight) -> AffineWeight {
        let k = &lambda.level;
        let w_bar = self.finite.apply(&lambda.finite);
        let mu = &self.translation;
        let delta = &lambda.delta - rs.form(&w_bar, mu) - k * rs.form(mu, mu) * frac(1, 2);
        AffineWeight::new(w_bar.add_scaled(k, mu), k.clone(), delta)
    }

    /// Dot action `g∘λ = g(λ + ρ̂) − ρ̂`.
    pub fn dot(&self, rs: &FiniteRootSystem, lambda: &AffineWeight) -> AffineWeight {
        let rho = rho_hat(rs);
        self.act_on_weight(rs, &lambda.add(&rho)).sub(&rho)
    }

    /// The affine inversion set `Δ̂re₊ ∩ g⁻¹(Δ̂re₋)`, in closed form: for each
    /// finite root `α`, `α + nδ` is an inversion iff `n` is at least 0 (or 1
    /// when `α < 0`) and `n < (wα|μ)`, or `n = (wα|μ)` with `wα < 0`.
    pub fn inversion_set(&self, rs: &FiniteRootSystem) -> Vec<RealRoot> {
        let mut out = Vec::new();
        for a in 0..rs.num_roots() {
            let (lo, hi) = self.inversion_range(rs, a);
            out.extend((lo..=hi).map(|n| RealRoot { root: a, n }));
        }
        out.sort_by_key(|r| (r.n, r.root));
        out
    }

    /// Inclusive `n`-range of inversions in the direction of root `a`
    /// (empty when `lo > hi`).
    pub(crate) fn inversion_range(&self, rs: &FiniteRootSystem, a: usize) -> (i64, i64) {
        let lo = if rs.is_positive(a) { 0 } else { 1 };
        let m = self.shift(rs, a);
        let hi = if rs.is_positive(self.finite.act_on_root_index(a)) {
            m - 1
        } else {
            m
        };
        (lo, hi)
    }

    /// Affine length, the size of the inversion set.
    pub fn length(&self, rs: &FiniteRootSystem) -> usize {
        (0..rs.num_roots())
            .map(|a| {
                let (lo, hi) = self.inversion_range(rs, a);
                (hi - lo + 1).max(0) as usize
            })
            .sum()
    }

    /// A bound `N` such that every inversion `α + nδ` has `|n| < N`:
    /// `1 + max_α |(α|μ)|`.
    pub fn inversion_search_bound(&self, rs: &FiniteRootSystem) -> i64 {
        1 + (0..rs.num_roots())
            .map(|a| rs.root_dot_coweight(a, &self.coords).abs())
            .max()
            .unwrap_or(0)
    }

    /// Scans all `α + nδ` with `|n| <= bound` for positive roots sent to
    /// negative ones. Complete whenever `bound >= inversion_search_bound()`.
    pub fn inversion_set_scan(&self, rs: &FiniteRootSystem, bound: i64) -> Vec<RealRoot> {
        let mut out = Vec::new();
        for n in -bound..=bound {
            for root in 0..rs.num_roots() {
                let beta = RealRoot { root, n };
                if beta.is_positive(rs) && !self.act_on_root(rs, &beta).is_positive(rs) {
                    out.push(beta);
                }
            }
        }
        out
    }

    /// When `g` permutes `{α₀, …, α_l}`, the induced permutation of indices.
    pub fn diagram_permutation(&self, rs: &FiniteRootSystem) -> Option<Vec<usize>> {
        let simple = affine_simple_roots(rs);
        simple
            .iter()
            .map(|b| {
                let image = self.act_on_root(rs, b);
                simple.iter().position(|s| *s == image)
            })
            .collect()
    }

    /// Membership in `W̃₊`, the stabilizer of `{α₀, …, α_l}`.
    pub fn is_diagram_automorphism(&self, rs: &FiniteRootSystem) -> bool {
        self.diagram_permutation(rs).is_some()
    }
}

/// The group `W̃₊`: the identity plus one element `t_{ω_j∨} w_0^{(j)} w_0`
/// for each minuscule coweight `ω_j∨` (mark of `α_j` in `θ` equal to 1),
/// where `w_0^{(j)}` is the longest element of the stabilizer of `ω_j∨`.
pub fn diagram_automorphisms(rs: &FiniteRootSystem) -> Vec<ExtendedWeylElement> {
    let mut out = vec![ExtendedWeylElement::identity(rs)];
    let w0 = rs.longest_element();
    let theta = rs.coeffs(rs.theta());
    for j in 0..rs.rank() {
        if theta[j] != 1 {
            continue;
        }
        let mut w = FiniteWeylElement::identity(rs);
        loop {
            let wrho = w.apply(rs.rho());
            let next = (0..rs.rank())
                .filter(|&i| i != j)
                .find(|&i| rs.pair_with_coroot(&wrho, rs.simple_roots()[i]).is_positive());
            match next {
                Some(i) => {
                    w = FiniteWeylElement::simple_reflection(rs, i)
                        .expect("index in range")
                        .compose(&w)
                }
                None => break,
            }
        }
        let mut coords = vec![0; rs.rank()];
        coords[j] = 1;
        let pi = ExtendedWeylElement::from_coords(rs, w.compose(&w0), coords);
        debug_assert!(pi.is_diagram_automorphism(rs));
        out.push(pi);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> FiniteRootSystem {
        FiniteRootSystem::new(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn rho_hat_pairs_to_one_on_affine_simple_roots() {
        for t in ["A1", "A4", "B3", "C4", "D5", "E6", "F4", "G2"] {
            let s = rs(t);
            let rho = rho_hat(&s);
            for b in affine_simple_roots(&s) {
                assert_eq!(rho.pair(&s, &b), int(1), "{t}");
            }
        }
    }

    #[test]
    fn a1_root_actions() {
        let s = rs("A1");
        let a1 = RealRoot {
            root: s.simple_roots()[0],
            n: 0,
        };
        let id = ExtendedWeylElement::identity(&s);
        assert_eq!(id.act_on_root(&s, &a1), a1);

        let theta_coroot = s.coroot(s.theta()).clone();
        let t = ExtendedWeylElement::translation(&s, theta_coroot).unwrap();
        assert_eq!(t.act_on_root(&s, &a1), RealRoot { root: a1.root, n: -2 });

        let s0 = ExtendedWeylElement::simple_reflection(&s, 0).unwrap();
        let minus = s.negate(a1.root);
        assert_eq!(s0.act_on_root(&s, &a1), RealRoot { root: minus, n: 2 });
        let alpha0 = affine_simple_roots(&s)[0];
        assert_eq!(s0.act_on_root(&s, &alpha0), alpha0.negate(&s));
    }

    #[test]
    fn translation_must_be_a_coweight() {
        let s = rs("A2");
        let half = s.fundamental_coweights()[0].scale(&frac(1, 2));
        assert!(matches!(
            ExtendedWeylElement::translation(&s, half),
            Err(Error::NotExtendedWeyl(_))
        ));
    }

    #[test]
    fn translation_of_vacuum() {
        let s = rs("B2");
        let k = frac(-1, 2);
        let mu = s.fundamental_coweights()[1].clone();
        let t = ExtendedWeylElement::translation(&s, mu.clone()).unwrap();
        let image = t.act_on_weight(&s, &AffineWeight::vacuum(&s, k.clone()));
        assert_eq!(image.finite, mu.scale(&k));
        assert_eq!(image.level, k);
    }

    #[test]
    fn a1_dot_action_of_s1() {
        let s = rs("A1");
        let s1 = ExtendedWeylElement::simple_reflection(&s, 1).unwrap();
        for a in [-3, 0, 2, 7] {
            let lambda = AffineWeight::from_labels(&s, &[frac(a, 3)], frac(-1, 2)).unwrap();
            let image = s1.dot(&s, &lambda);
            assert_eq!(image.labels(&s), vec![frac(a, 3) * int(-1) - int(2)]);
            assert_eq!(image.level, lambda.level);
        }
    }

    #[test]
    fn a1_inversion_sets() {
        let s = rs("A1");
        assert!(ExtendedWeylElement::identity(&s).inversion_set(&s).is_empty());
        let s0 = ExtendedWeylElement::simple_reflection(&s, 0).unwrap();
        let s1 = ExtendedWeylElement::simple_reflection(&s, 1).unwrap();
        assert_eq!(s0.inversion_set(&s), vec![affine_simple_roots(&s)[0]]);
        let s1s0 = s1.compose(&s, &s0);
        assert_eq!(s1s0.inversion_set(&s).len(), 2);
        assert_eq!(s1s0.inversion_set_scan(&s, 10).len(), 2);
    }

    #[test]
    fn diagram_automorphism_counts() {
        for (t, n) in [("A1", 2), ("A3", 4), ("B3", 2), ("C3", 2), ("D4", 4), ("E6", 3), ("E7", 2), ("F4", 1), ("G2", 1)] {
            let s = rs(t);
            let group = diagram_automorphisms(&s);
            assert_eq!(group.len(), n, "{t}");
            for g in &group {
                assert!(g.is_diagram_automorphism(&s));
                assert!(g.inversion_set(&s).is_empty());
            }
        }
    }

    #[test]
    fn compose_and_inverse() {
        let s = rs("G2");
        let s0 = ExtendedWeylElement::simple_reflection(&s, 0).unwrap();
        let s2 = ExtendedWeylElement::simple_reflection(&s, 2).unwrap();
        let g = s0.compose(&s, &s2).compose(&s, &s0);
        assert!(g.compose(&s, &g.inverse(&s)).is_identity());
        assert!(g.is_in_affine_weyl_group(&s));
        assert_eq!(g.length(&s), 3);
    }
}
