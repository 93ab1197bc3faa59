//! The sets `Pr_k⁺` and `Pr_k` at an admissible level, the module membership
//! test, ŝl₂ reduction data with its necessary conditions, and
//! Duflo–Joseph moves along the dot action.

use std::collections::BTreeMap;
use std::sync::{LazyLock, OnceLock};

use num_traits::{Signed, Zero};

use crate::admissibility::{
    is_admissible_number, is_admissible_weight, shifted_pairing, simple_integral_roots, Admissibility,
    AdmissibilityFailure, IntegralRootSystem, Level, LevelCase, Residue,
};
use crate::affine::{affine_simple_roots, diagram_automorphisms, AffineWeight, ExtendedWeylElement, RealRoot};
use crate::cartan;
use crate::error::{Error, Result};
use crate::lie_type::{Family, LieType};
use crate::rational::{frac, int, Q};
use crate::roots::{BoundRoot, FiniteRootSystem};
use crate::weyl::{FiniteWeylElement, DEFAULT_WEYL_CAP};

/// Default refusal threshold for the number of `(w, μ)` pairs scanned when
/// enumerating twists.
pub const DEFAULT_TWIST_CAP: u128 = 20_000_000;

static A1: LazyLock<FiniteRootSystem> = LazyLock::new(|| {
    FiniteRootSystem::new(LieType::new(Family::A, 1).expect("A1")).expect("A1 root system")
});

/// An element of `Pr_k`, keyed by its finite part, with the number of
/// `(y, λ)` pairs that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrWeight {
    pub weight: AffineWeight,
    pub multiplicity: usize,
}

/// Data attached to an admissible level `k`, with `Pr_k⁺`, the twists and
/// `Pr_k` computed on first use.
#[derive(Debug)]
pub struct AdmissibleLevelContext {
    rs: FiniteRootSystem,
    level: Level,
    base: IntegralRootSystem,
    weyl_cap: u128,
    twist_cap: u128,
    pr_plus: OnceLock<Vec<AffineWeight>>,
    twists: OnceLock<Result<Vec<ExtendedWeylElement>>>,
    pr: OnceLock<Result<Vec<PrWeight>>>,
}

impl AdmissibleLevelContext {
    pub fn new(rs: FiniteRootSystem, k: Q) -> Result<Self> {
        Self::with_caps(rs, k, DEFAULT_WEYL_CAP, DEFAULT_TWIST_CAP)
    }

    pub fn with_caps(rs: FiniteRootSystem, k: Q, weyl_cap: u128, twist_cap: u128) -> Result<Self> {
        let cert = is_admissible_number(&rs, &k)?;
        if !cert.admissible {
            return Err(Error::LevelNotAdmissible {
                level: k,
                p: cert.level.p.to_string(),
                q: cert.level.q.to_string(),
                required: cert.required,
            });
        }
        let base = simple_integral_roots(&rs, &AffineWeight::vacuum(&rs, k))?;
        Ok(AdmissibleLevelContext {
            rs,
            level: cert.level,
            base,
            weyl_cap,
            twist_cap,
            pr_plus: OnceLock::new(),
            twists: OnceLock::new(),
            pr: OnceLock::new(),
        })
    }

    pub fn root_system(&self) -> &FiniteRootSystem {
        &self.rs
    }

    pub fn level(&self) -> &Level {
        &self.level
    }

    pub fn k(&self) -> &Q {
        &self.level.k
    }

    /// `Δ̂(kΛ₀)`.
    pub fn base_system(&self) -> &IntegralRootSystem {
        &self.base
    }

    /// `α̇₀`: `−θ + qδ`, or `−θ_s + (q/r∨)δ` in the divisible case.
    pub fn dotted_alpha0(&self) -> RealRoot {
        let rs = &self.rs;
        match self.level.case {
            LevelCase::Coprime => RealRoot {
                root: rs.negate(rs.theta()),
                n: self.level.q,
            },
            LevelCase::Divisible => RealRoot {
                root: rs.negate(rs.theta_short()),
                n: self.level.q / rs.lacing_number(),
            },
        }
    }

    /// `Pr_k⁺`, ordered lexicographically by Dynkin labels.
    pub fn pr_plus(&self) -> &[AffineWeight] {
        self.pr_plus.get_or_init(|| {
            let rs = &self.rs;
            let (root, bound) = match self.level.case {
                LevelCase::Coprime => (BoundRoot::Theta, self.level.p - rs.dual_coxeter_number()),
                LevelCase::Divisible => (BoundRoot::ThetaShort, self.level.p - rs.coxeter_number()),
            };
            rs.dominant_integral_weights(root, bound)
                .into_iter()
                .map(|finite| AffineWeight::new(finite, self.level.k.clone(), Q::zero()))
                .collect()
        })
    }

    /// All `y ∈ W̃` with `y(Π(kΛ₀)) ⊂ Δ̂re₊`.
    ///
    /// Positivity of `y(α + m_α δ)` for every finite root `α` forces
    /// `|(α_i|μ)| ≤ m_{α_i}`, so `μ` ranges over a box in coweight coordinates.
    pub fn twists(&self) -> Result<&[ExtendedWeylElement]> {
        self.twists
            .get_or_init(|| self.compute_twists())
            .as_deref()
            .map_err(Clone::clone)
    }

    fn compute_twists(&self) -> Result<Vec<ExtendedWeylElement>> {
        let rs = &self.rs;
        let order = rs.lie_type().weyl_order();
        let simple = self.base.simple_roots();
        let mut affine = affine_simple_roots(rs);
        affine.sort();
        let mut sorted = simple.to_vec();
        sorted.sort();
        if sorted == affine {
            // y(Π̂) ⊂ Δ̂₊ exactly when y has length zero.
            return Ok(diagram_automorphisms(rs));
        }
        if order > self.weyl_cap {
            return Err(Error::GroupTooLarge {
                order,
                cap: self.weyl_cap,
            });
        }
        let radii: Vec<i64> = rs
            .simple_roots()
            .iter()
            .map(|&a| match self.base.membership()[a] {
                Residue::Progression { modulus, .. } => modulus,
                Residue::Empty => unreachable!("every direction is integral at an admissible level"),
            })
            .collect();
        let boxes: u128 = radii.iter().map(|&m| (2 * m + 1) as u128).product();
        let candidates = order.saturating_mul(boxes);
        if candidates > self.twist_cap {
            return Err(Error::TwistBoxTooLarge {
                candidates,
                cap: self.twist_cap,
            });
        }
        let mut out = Vec::new();
        for w in rs.weyl_elements(self.weyl_cap)? {
            let images: Vec<(usize, i64, bool)> = simple
                .iter()
                .map(|b| {
                    let image = w.act_on_root_index(b.root);
                    (image, b.n, rs.is_positive(image))
                })
                .collect();
            let mut coords: Vec<i64> = radii.iter().map(|m| -m).collect();
            loop {
                let positive = images.iter().all(|&(image, n, pos)| {
                    let shifted = n - rs.root_dot_coweight(image, &coords);
                    shifted > 0 || (shifted == 0 && pos)
                });
                if positive {
                    out.push(ExtendedWeylElement::from_coords(rs, w.clone(), coords.clone()));
                }
                if !advance(&mut coords, &radii) {
                    break;
                }
            }
        }
        out.sort_by(|a, b| {
            (a.length(rs), a.translation_coords(), a.finite_part().word())
                .cmp(&(b.length(rs), b.translation_coords(), b.finite_part().word()))
        });
        Ok(out)
    }

    /// `Pr_k = ⋃_y y∘Pr_k⁺`, deduplicated by finite part (δ-part set to 0)
    /// and ordered lexicographically by Dynkin labels.
    pub fn pr(&self) -> Result<&[PrWeight]> {
        self.pr
            .get_or_init(|| self.compute_pr())
            .as_deref()
            .map_err(Clone::clone)
    }

    fn compute_pr(&self) -> Result<Vec<PrWeight>> {
        let rs = &self.rs;
        let mut seen: BTreeMap<Vec<Q>, PrWeight> = BTreeMap::new();
        for y in self.twists()? {
            for lambda in self.pr_plus() {
                let image = y.dot(rs, lambda).without_delta();
                seen.entry(image.labels(rs))
                    .and_modify(|e| e.multiplicity += 1)
                    .or_insert(PrWeight {
                        weight: image,
                        multiplicity: 1,
                    });
            }
        }
        Ok(seen.into_values().collect())
    }

    /// The weights of `Pr_k` without multiplicities.
    pub fn pr_weights(&self) -> Result<Vec<AffineWeight>> {
        Ok(self.pr()?.iter().map(|e| e.weight.clone()).collect())
    }

    /// Whether some element of `Pr_k` has the same finite part as `lambda`.
    pub fn pr_contains(&self, lambda: &AffineWeight) -> Result<bool> {
        let labels = lambda.labels(&self.rs);
        Ok(self
            .pr()?
            .binary_search_by(|e| e.weight.labels(&self.rs).cmp(&labels))
            .is_ok())
    }

    fn check_level(&self, lambda: &AffineWeight) -> Result<()> {
        if lambda.finite.dim() != self.rs.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.rs.dim(),
                got: lambda.finite.dim(),
            });
        }
        if lambda.level != self.level.k {
            return Err(Error::LevelMismatch {
                weight: lambda.level.clone(),
                context: self.level.k.clone(),
            });
        }
        Ok(())
    }

    /// `L(λ)` is a module over the simple quotient at level `k` iff `λ` is
    /// admissible and `Δ̂(λ) ≅ Δ̂(kΛ₀)`.
    pub fn is_module(&self, lambda: &AffineWeight) -> Result<ModuleVerdict> {
        self.check_level(lambda)?;
        let admissibility = is_admissible_weight(&self.rs, lambda)?;
        let mut failures: Vec<ModuleFailure> = admissibility
            .failures
            .iter()
            .cloned()
            .map(ModuleFailure::Admissibility)
            .collect();
        let isomorphic = cartan::permutation_equivalent(
            admissibility.system.cartan_matrix(),
            self.base.cartan_matrix(),
        );
        if !isomorphic {
            failures.push(ModuleFailure::NonIsomorphic {
                found: admissibility.system.type_name(),
                expected: self.base.type_name(),
            });
        }
        Ok(ModuleVerdict {
            admissibility,
            failures,
        })
    }

    /// `k_i` and `⟨λ̄, α_i∨⟩` for each simple root, with
    /// `k_i + 2 = (2/(α_i|α_i))(k + h∨)`.
    pub fn reduction_data(&self, lambda: &AffineWeight) -> Vec<ReductionDatum> {
        reduction_data(&self.rs, lambda)
    }

    /// Necessary conditions for `L(λ)` to be a module at this level.
    pub fn necessary_condition_battery(&self, lambda: &AffineWeight) -> Result<BatteryReport> {
        self.check_level(lambda)?;
        let rs = &self.rs;
        let reduction = self.reduction_data(lambda);
        let sl2 = reduction
            .iter()
            .map(|d| {
                let verdict = sl2_admissibility(&d.label, &d.level)?;
                Ok(Sl2Check {
                    index: d.index,
                    label: d.label.clone(),
                    level: d.level.clone(),
                    failure: verdict.failures.first().map(|f| f.condition()),
                })
            })
            .collect::<Result<Vec<_>>>()?;

        let labels = lambda.labels(rs);
        let bound = if labels.iter().all(Q::is_integer) {
            let start = match self.level.case {
                LevelCase::Coprime => rs.theta(),
                LevelCase::Divisible => rs.theta_short(),
            };
            let (w, index) = descend_to_simple(rs, start);
            let moved = &w.apply(&(&lambda.finite + rs.rho())) - rs.rho();
            let value = rs.pair_with_coroot(&moved, rs.simple_roots()[index]);
            let level = &reduction[index].level;
            let dominant = labels.iter().all(|a| !a.is_negative());
            let verdict = sl2_admissibility(&value, level)?;
            Some(BoundCheck {
                index,
                value,
                level: level.clone(),
                dominant,
                passed: dominant && verdict.is_admissible(),
            })
        } else {
            None
        };

        let is_module = self.is_module(lambda)?.is_module();
        Ok(BatteryReport {
            reduction,
            sl2,
            bound,
            is_module,
        })
    }

    /// Applies `w∘λ` when `⟨λ + ρ̂, α∨⟩ ∉ {1, 2, …}` for every `α` in the
    /// inversion set of `w`.
    pub fn duflo_joseph_move(&self, lambda: &AffineWeight, w: &ExtendedWeylElement) -> DufloJoseph {
        duflo_joseph_move(&self.rs, lambda, w)
    }
}

/// Steps through `coords` in the box `[-r_i, r_i]`, last index fastest.
fn advance(coords: &mut [i64], radii: &[i64]) -> bool {
    for i in (0..coords.len()).rev() {
        if coords[i] < radii[i] {
            coords[i] += 1;
            return true;
        }
        coords[i] = -radii[i];
    }
    false
}

/// `w` and `i` with `w(root) = α_i`, found by reflecting down through simple
/// roots with positive pairing.
fn descend_to_simple(rs: &FiniteRootSystem, root: usize) -> (FiniteWeylElement, usize) {
    let mut w = FiniteWeylElement::identity(rs);
    let mut current = root;
    loop {
        if let Some(i) = rs.simple_roots().iter().position(|&s| s == current) {
            return (w, i);
        }
        let j = (0..rs.rank())
            .find(|&j| rs.pairing(current, rs.simple_roots()[j]) > 0)
            .expect("a positive non-simple root pairs positively with some simple coroot");
        current = rs.reflect_index(rs.simple_roots()[j], current);
        w = FiniteWeylElement::simple_reflection(rs, j)
            .expect("index in range")
            .compose(&w);
    }
}

fn sl2_admissibility(label: &Q, level: &Q) -> Result<Admissibility> {
    let weight = AffineWeight::from_labels(&A1, std::slice::from_ref(label), level.clone())?;
    is_admissible_weight(&A1, &weight)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModuleFailure {
    Admissibility(AdmissibilityFailure),
    NonIsomorphic { found: String, expected: String },
}

impl ModuleFailure {
    pub fn check(&self) -> &'static str {
        match self {
            ModuleFailure::Admissibility(f) => f.condition(),
            ModuleFailure::NonIsomorphic { .. } => "isomorphic-integral-system",
        }
    }
}

#[derive(Debug, Clone)]
pub struct ModuleVerdict {
    pub admissibility: Admissibility,
    pub failures: Vec<ModuleFailure>,
}

impl ModuleVerdict {
    pub fn is_module(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn is_admissible(&self) -> bool {
        self.admissibility.is_admissible()
    }

    pub fn system(&self) -> &IntegralRootSystem {
        &self.admissibility.system
    }
}

/// The ŝl₂ data `(k_i, λ⁽ⁱ⁾)` attached to the simple root `α_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionDatum {
    /// 0-based simple root index.
    pub index: usize,
    pub level: Q,
    /// `λ⁽ⁱ⁾(h_i) = ⟨λ̄, α_i∨⟩`.
    pub label: Q,
}

pub fn reduction_data(rs: &FiniteRootSystem, lambda: &AffineWeight) -> Vec<ReductionDatum> {
    let shifted = &lambda.level + int(rs.dual_coxeter_number());
    rs.simple_roots()
        .iter()
        .enumerate()
        .map(|(index, &a)| ReductionDatum {
            index,
            level: int(rs.coroot_factor(a)) * &shifted - int(2),
            label: rs.pair_with_coroot(&lambda.finite, a),
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sl2Check {
    pub index: usize,
    pub label: Q,
    pub level: Q,
    /// The failed condition, if `λ⁽ⁱ⁾` is not admissible.
    pub failure: Option<&'static str>,
}

impl Sl2Check {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// The bound on `⟨λ, θ⟩` (or `⟨λ, θ_s∨⟩`) obtained from `w ∈ W⁽ⁱ⁾` with
/// `w⁻¹(α_i) = θ` (or `θ_s`): `⟨w∘λ̄, α_i∨⟩` must be an ŝl₂-admissible label
/// at level `k_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundCheck {
    pub index: usize,
    pub value: Q,
    pub level: Q,
    pub dominant: bool,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BatteryReport {
    pub reduction: Vec<ReductionDatum>,
    pub sl2: Vec<Sl2Check>,
    /// `None` when `λ̄` is not integral on the simple coroots.
    pub bound: Option<BoundCheck>,
    pub is_module: bool,
}

impl BatteryReport {
    pub fn passed(&self) -> bool {
        self.sl2.iter().all(Sl2Check::passed) && self.bound.as_ref().is_none_or(|b| b.passed)
    }

    /// Modules must pass every necessary condition.
    pub fn consistent(&self) -> bool {
        !self.is_module || self.passed()
    }
}

/// `W⁽ⁱ⁾ = {w ∈ W : w⁻¹(α_i) > 0}` for a 0-based simple index `i`.
pub fn kostant_w_i(rs: &FiniteRootSystem, i: usize, cap: u128) -> Result<Vec<FiniteWeylElement>> {
    if i >= rs.rank() {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: rs.rank() - 1,
        });
    }
    let target = rs.simple_roots()[i];
    Ok(rs
        .weyl_elements(cap)?
        .filter(|w| {
            let preimage = w
                .root_permutation()
                .iter()
                .position(|&b| b == target)
                .expect("permutation");
            rs.is_positive(preimage)
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DufloJoseph {
    Applied(AffineWeight),
    Inapplicable { root: RealRoot, value: Q },
}

pub fn duflo_joseph_move(rs: &FiniteRootSystem, lambda: &AffineWeight, w: &ExtendedWeylElement) -> DufloJoseph {
    for root in w.inversion_set(rs) {
        let value = shifted_pairing(rs, lambda, &root);
        if value.is_integer() && value.is_positive() {
            return DufloJoseph::Inapplicable { root, value };
        }
    }
    DufloJoseph::Applied(w.dot(rs, lambda))
}

/// `k + h∨ = p/q` as a level value.
pub fn level_from_shifted(rs: &FiniteRootSystem, p: i64, q: i64) -> Q {
    frac(p, q) - int(rs.dual_coxeter_number())
}
