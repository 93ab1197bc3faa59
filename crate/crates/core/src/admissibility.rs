//! Admissible levels, integral root systems `Δ̂(λ)` with their simple roots,
//! and the admissibility test for weights.

use std::fmt;

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::affine::{AffineWeight, RealRoot};
use crate::cartan::{self, CartanMatrix};
use crate::error::{Error, Result};
use crate::rational::{self, bigint_to_i64, int, mod_inverse, modulo, Q};
use crate::roots::FiniteRootSystem;

/// Which branch of the admissible-number criterion applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LevelCase {
    /// `gcd(r∨, q) = 1`: requires `p ≥ h∨`.
    Coprime,
    /// `gcd(r∨, q) = r∨ > 1`: requires `p ≥ h`.
    Divisible,
}

impl fmt::Display for LevelCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LevelCase::Coprime => "coprime",
            LevelCase::Divisible => "divisible",
        })
    }
}

/// A non-critical rational level `k` with `k + h∨ = p/q` in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Level {
    pub k: Q,
    pub p: i64,
    pub q: i64,
    pub case: LevelCase,
}

impl Level {
    pub fn new(rs: &FiniteRootSystem, k: &Q) -> Result<Self> {
        let shifted = k + int(rs.dual_coxeter_number());
        if shifted.is_zero() {
            return Err(Error::CriticalLevel(k.clone()));
        }
        let too_large = |_| Error::LevelTooLarge(shifted.to_string());
        let p = bigint_to_i64(shifted.numer()).map_err(too_large)?;
        let q = bigint_to_i64(shifted.denom()).map_err(too_large)?;
        // Keep headroom for products like c·p·N in the congruence arithmetic.
        if p.abs() > 1 << 40 || q > 1 << 40 {
            return Err(Error::LevelTooLarge(shifted.to_string()));
        }
        let case = if q.gcd(&rs.lacing_number()) == 1 {
            LevelCase::Coprime
        } else {
            LevelCase::Divisible
        };
        Ok(Level {
            k: k.clone(),
            p,
            q,
            case,
        })
    }

    /// `k + h∨`.
    pub fn shifted(&self) -> Q {
        rational::frac(self.p, self.q)
    }

    /// Lower bound on `p` demanded by the admissible-number criterion.
    pub fn required_numerator(&self, rs: &FiniteRootSystem) -> i64 {
        match self.case {
            LevelCase::Coprime => rs.dual_coxeter_number(),
            LevelCase::Divisible => rs.coxeter_number(),
        }
    }
}

/// Result of the admissible-number test together with the data it used.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibleNumberCertificate {
    pub level: Level,
    pub required: i64,
    pub admissible: bool,
}

/// `k` is admissible iff `k + h∨ = p/q` with `p, q > 0` coprime and
/// `p ≥ h∨` when `gcd(r∨, q) = 1`, `p ≥ h` when `gcd(r∨, q) = r∨`.
pub fn is_admissible_number(rs: &FiniteRootSystem, k: &Q) -> Result<AdmissibleNumberCertificate> {
    let level = Level::new(rs, k)?;
    let required = level.required_numerator(rs);
    let admissible = level.p > 0 && level.p >= required;
    Ok(AdmissibleNumberCertificate {
        level,
        required,
        admissible,
    })
}

/// The set `{n ∈ ℤ : α + nδ ∈ Δ̂(λ)}` for one finite root `α`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Residue {
    Empty,
    /// `n ≡ residue (mod modulus)`, with `0 ≤ residue < modulus`.
    Progression { residue: i64, modulus: i64 },
}

impl Residue {
    pub fn contains(&self, n: i64) -> bool {
        match *self {
            Residue::Empty => false,
            Residue::Progression { residue, modulus } => modulo(n - residue, modulus) == 0,
        }
    }

    /// Number of members in the closed interval `[lo, hi]`.
    pub fn count_in(&self, lo: i64, hi: i64) -> i64 {
        match *self {
            Residue::Empty => 0,
            Residue::Progression { .. } if lo > hi => 0,
            Residue::Progression { residue, modulus } => {
                (hi - residue).div_euclid(modulus) - (lo - 1 - residue).div_euclid(modulus)
            }
        }
    }

    /// Least member `n ≥ lo`.
    pub fn first_at_least(&self, lo: i64) -> Option<i64> {
        match *self {
            Residue::Empty => None,
            Residue::Progression { residue, modulus } => Some(lo + modulo(residue - lo, modulus)),
        }
    }
}

/// `⟨λ + ρ̂, (α + nδ)∨⟩ = ⟨λ̄ + ρ, α∨⟩ + n·c_α·(k + h∨)`.
pub fn shifted_pairing(rs: &FiniteRootSystem, lambda: &AffineWeight, beta: &RealRoot) -> Q {
    let shifted = &lambda.level + int(rs.dual_coxeter_number());
    rs.pair_with_coroot(&(&lambda.finite + rs.rho()), beta.root)
        + int(beta.n * rs.coroot_factor(beta.root)) * shifted
}

/// Solves `⟨λ̄ + ρ, α∨⟩ + n·c_α·p/q ∈ ℤ` for `n`.
pub fn integral_root_membership(rs: &FiniteRootSystem, lambda: &AffineWeight, root: usize) -> Result<Residue> {
    let level = Level::new(rs, &lambda.level)?;
    Ok(membership_at(rs, &level, lambda, root))
}

fn membership_at(rs: &FiniteRootSystem, level: &Level, lambda: &AffineWeight, root: usize) -> Residue {
    let a = rs.pair_with_coroot(&(&lambda.finite + rs.rho()), root);
    let step = rs.coroot_factor(root) * level.p;
    let g = step.abs().gcd(&level.q);
    let modulus = level.q / g;
    let scaled = a * int(modulus);
    if !scaled.is_integer() {
        return Residue::Empty;
    }
    let Ok(scaled) = bigint_to_i64(&scaled.to_integer()) else {
        return Residue::Empty;
    };
    let inv = mod_inverse(step / g, modulus).expect("coprime after dividing by the gcd");
    let residue = modulo(-modulo(scaled, modulus) * inv, modulus);
    Residue::Progression { residue, modulus }
}

/// `Δ̂(λ)` described by its per-direction membership rules and its simple
/// roots `Π(λ)`.
#[derive(Debug, Clone)]
pub struct IntegralRootSystem {
    weight: AffineWeight,
    level: Level,
    membership: Vec<Residue>,
    simple: Vec<RealRoot>,
    cartan: CartanMatrix,
    direction_rank: usize,
    direction_components: usize,
    search_bound: i64,
}

impl IntegralRootSystem {
    pub fn weight(&self) -> &AffineWeight {
        &self.weight
    }

    pub fn level(&self) -> &Level {
        &self.level
    }

    /// Membership rule for each finite root, indexed like the host roots.
    pub fn membership(&self) -> &[Residue] {
        &self.membership
    }

    pub fn contains(&self, beta: &RealRoot) -> bool {
        self.membership[beta.root].contains(beta.n)
    }

    pub fn simple_roots(&self) -> &[RealRoot] {
        &self.simple
    }

    /// `cartan[i][j] = ⟨β_j, β_i∨⟩`.
    pub fn cartan_matrix(&self) -> &CartanMatrix {
        &self.cartan
    }

    /// Dimension of `ℚΔ̂(λ)`.
    pub fn span_dimension(&self) -> usize {
        if self.direction_rank == 0 {
            0
        } else {
            self.direction_rank + 1
        }
    }

    /// Whether `ℚΔ̂(λ) = ℚΔ̂re`.
    pub fn is_full_rank(&self, rs: &FiniteRootSystem) -> bool {
        self.direction_rank == rs.rank()
    }

    pub fn num_components(&self) -> usize {
        self.direction_components
    }

    /// The δ-bound within which the simple roots were certified.
    pub fn search_bound(&self) -> i64 {
        self.search_bound
    }

    /// Type label such as `A1~(1)` or `A1~(1)+A1~(1)`.
    pub fn type_name(&self) -> String {
        cartan::type_name(&self.cartan)
    }

    /// Positive integral roots `α + nδ` with `0 ≤ n ≤ bound`.
    pub fn positive_roots_up_to(&self, rs: &FiniteRootSystem, bound: i64) -> Vec<RealRoot> {
        let mut out = Vec::new();
        for (root, rule) in self.membership.iter().enumerate() {
            let Residue::Progression { modulus, .. } = *rule else {
                continue;
            };
            let lo = if rs.is_positive(root) { 0 } else { 1 };
            let mut n = rule.first_at_least(lo).expect("nonempty");
            while n <= bound {
                out.push(RealRoot { root, n });
                n += modulus;
            }
        }
        out.sort_by_key(|r| (r.n, r.root));
        out
    }
}

/// Number of integral roots among the inversions of `s_β`.
///
/// With `s_{α+nδ} = t_{−nα∨} s_α`, the direction-`γ` inversions are
/// `γ + jδ` for `j` from 0 (1 if `γ < 0`) up to `M − 1`, or up to `M` when
/// `s_α γ < 0`, where `M = n⟨γ, α∨⟩`.
fn integral_inversions_of_reflection(rs: &FiniteRootSystem, membership: &[Residue], beta: &RealRoot) -> i64 {
    let mut total = 0;
    for (gamma, rule) in membership.iter().enumerate() {
        if *rule == Residue::Empty {
            continue;
        }
        let m = beta.n * rs.pairing(gamma, beta.root);
        let lo = if rs.is_positive(gamma) { 0 } else { 1 };
        let hi = if rs.is_positive(rs.reflect_index(beta.root, gamma)) {
            m - 1
        } else {
            m
        };
        total += rule.count_in(lo, hi);
        if total > 1 {
            break;
        }
    }
    total
}

fn direction_structure(rs: &FiniteRootSystem, membership: &[Residue]) -> (usize, usize) {
    let dirs: Vec<usize> = (0..rs.num_roots())
        .filter(|&a| rs.is_positive(a) && membership[a] != Residue::Empty)
        .collect();
    let rows: Vec<Vec<Q>> = dirs
        .iter()
        .map(|&a| rs.coeffs(a).iter().map(|&c| int(c)).collect())
        .collect();
    let rank = rational::rank(&rows);
    let graph: Vec<Vec<i64>> = dirs
        .iter()
        .map(|&a| dirs.iter().map(|&b| rs.pairing(a, b)).collect())
        .collect();
    (rank, cartan::components(&graph).len())
}

/// Initial δ-bound for the simple-root search: `2·q·r∨ + max r_α`.
fn initial_bound(rs: &FiniteRootSystem, level: &Level, membership: &[Residue]) -> i64 {
    let max_residue = membership
        .iter()
        .filter_map(|r| match r {
            Residue::Progression { residue, .. } => Some(*residue),
            Residue::Empty => None,
        })
        .max()
        .unwrap_or(0);
    2 * level.q * rs.lacing_number() + max_residue
}

/// `β` is simple in `Δ̂(λ)₊` iff it is the only integral root inverted by
/// `s_β`. Returns the simple roots with `0 ≤ n ≤ bound`.
fn simple_roots_within(rs: &FiniteRootSystem, membership: &[Residue], bound: i64) -> Vec<RealRoot> {
    let mut out = Vec::new();
    for (root, rule) in membership.iter().enumerate() {
        let Residue::Progression { modulus, .. } = *rule else {
            continue;
        };
        let lo = if rs.is_positive(root) { 0 } else { 1 };
        let mut n = rule.first_at_least(lo).expect("nonempty");
        while n <= bound {
            let beta = RealRoot { root, n };
            if integral_inversions_of_reflection(rs, membership, &beta) == 1 {
                out.push(beta);
            }
            n += modulus;
        }
    }
    out
}

/// Reduces `γ` by simple reflections with positive pairing until it becomes
/// simple; each step lowers the affine height.
fn descends_to_simple(rs: &FiniteRootSystem, simple: &[RealRoot], mut gamma: RealRoot) -> bool {
    loop {
        if simple.contains(&gamma) {
            return true;
        }
        let Some(beta) = simple.iter().find(|b| rs.pairing(gamma.root, b.root) > 0) else {
            return false;
        };
        let c = rs.pairing(gamma.root, beta.root);
        gamma = RealRoot {
            root: rs.reflect_index(beta.root, gamma.root),
            n: gamma.n - c * beta.n,
        };
        if !gamma.is_positive(rs) {
            return false;
        }
    }
}

/// Computes `Δ̂(λ)` and `Π(λ)`, certifying that the simple roots are complete
/// (their number is `rank + #components` of the direction system) and that
/// every positive integral root up to the search bound is reached from them.
pub fn simple_integral_roots(rs: &FiniteRootSystem, lambda: &AffineWeight) -> Result<IntegralRootSystem> {
    let level = Level::new(rs, &lambda.level)?;
    let membership: Vec<Residue> = (0..rs.num_roots())
        .map(|a| membership_at(rs, &level, lambda, a))
        .collect();
    let (direction_rank, direction_components) = direction_structure(rs, &membership);
    let expected = if direction_rank == 0 {
        0
    } else {
        direction_rank + direction_components
    };

    let mut bound = initial_bound(rs, &level, &membership);
    let mut detail = String::new();
    for _attempt in 0..2 {
        let mut simple = simple_roots_within(rs, &membership, bound);
        simple.sort_by_key(|b| (b.n != 0 || !rs.is_positive(b.root), b.n, b.root));
        if simple.len() != expected {
            detail = format!("found {} simple roots, expected {expected}", simple.len());
            bound *= 2;
            continue;
        }
        let temp = IntegralRootSystem {
            weight: lambda.clone(),
            level: level.clone(),
            membership: membership.clone(),
            simple: simple.clone(),
            cartan: Vec::new(),
            direction_rank,
            direction_components,
            search_bound: bound,
        };
        if let Some(bad) = temp
            .positive_roots_up_to(rs, bound)
            .into_iter()
            .find(|g| !descends_to_simple(rs, &simple, *g))
        {
            detail = format!("root {} is not generated", bad.display(rs));
            bound *= 2;
            continue;
        }
        let cartan = simple
            .iter()
            .map(|bi| simple.iter().map(|bj| rs.pairing(bj.root, bi.root)).collect())
            .collect();
        return Ok(IntegralRootSystem { cartan, ..temp });
    }
    Err(Error::SearchBoundInsufficient { bound, detail })
}

/// Why a weight fails to be admissible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AdmissibilityFailure {
    /// `⟨λ + ρ̂, β∨⟩` is not a positive integer for a simple integral root.
    NotRegularDominant { root: RealRoot, value: Q },
    /// No root in the direction of this finite root is integral, and the
    /// integral roots do not span.
    NotSpanning { direction: usize },
}

impl AdmissibilityFailure {
    pub fn condition(&self) -> &'static str {
        match self {
            AdmissibilityFailure::NotRegularDominant { .. } => "regular-dominant",
            AdmissibilityFailure::NotSpanning { .. } => "full-rank",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Admissibility {
    pub system: IntegralRootSystem,
    pub failures: Vec<AdmissibilityFailure>,
}

impl Admissibility {
    pub fn is_admissible(&self) -> bool {
        self.failures.is_empty()
    }
}

/// `λ` is admissible iff `⟨λ + ρ̂, β∨⟩ ∈ ℤ>0` for all `β ∈ Π(λ)` and
/// `ℚΔ̂(λ) = ℚΔ̂re`.
pub fn is_admissible_weight(rs: &FiniteRootSystem, lambda: &AffineWeight) -> Result<Admissibility> {
    let system = simple_integral_roots(rs, lambda)?;
    let mut failures = Vec::new();
    for beta in system.simple_roots() {
        let value = shifted_pairing(rs, lambda, beta);
        if !value.is_positive() {
            failures.push(AdmissibilityFailure::NotRegularDominant { root: *beta, value });
        }
    }
    if !system.is_full_rank(rs) {
        let direction = rs
            .positive_roots()
            .find(|&a| system.membership[a] == Residue::Empty)
            .expect("a non-spanning system misses some direction");
        failures.push(AdmissibilityFailure::NotSpanning { direction });
    }
    Ok(Admissibility { system, failures })
}

/// Isomorphism of integral root systems as equivalence of Cartan matrices
/// under simultaneous permutation.
pub fn isomorphic_integral_systems(a: &IntegralRootSystem, b: &IntegralRootSystem) -> bool {
    cartan::permutation_equivalent(&a.cartan, &b.cartan)
}
