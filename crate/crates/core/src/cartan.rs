//! Generalized Cartan matrices: connected components, equivalence under
//! simultaneous permutation of rows and columns, and type names.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::lie_type::{Family, LieType};
use crate::roots::FiniteRootSystem;

pub type CartanMatrix = Vec<Vec<i64>>;

/// Index sets of the connected components of the Dynkin graph, each sorted,
/// ordered by smallest index.
pub fn components(a: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let n = a.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if !seen[j] && (a[i][j] != 0 || a[j][i] != 0) {
                    seen[j] = true;
                    comp.push(j);
                    stack.push(j);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

pub fn submatrix(a: &[Vec<i64>], idx: &[usize]) -> CartanMatrix {
    idx.iter().map(|&i| idx.iter().map(|&j| a[i][j]).collect()).collect()
}

pub fn transpose(a: &[Vec<i64>]) -> CartanMatrix {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| a[j][i]).collect()).collect()
}

/// Whether `b = P a P⁻¹` for some permutation matrix `P`.
pub fn permutation_equivalent(a: &[Vec<i64>], b: &[Vec<i64>]) -> bool {
    find_permutation(a, b).is_some()
}

/// A permutation `σ` with `b[σ(i)][σ(j)] = a[i][j]`, found by backtracking.
pub fn find_permutation(a: &[Vec<i64>], b: &[Vec<i64>]) -> Option<Vec<usize>> {
    let n = a.len();
    if b.len() != n {
        return None;
    }
    let signature = |m: &[Vec<i64>], i: usize| {
        let mut row: Vec<(i64, i64)> = (0..n).map(|j| (m[i][j], m[j][i])).collect();
        row.sort_unstable();
        row
    };
    let sig_a: Vec<_> = (0..n).map(|i| signature(a, i)).collect();
    let sig_b: Vec<_> = (0..n).map(|i| signature(b, i)).collect();
    let mut sorted_a = sig_a.clone();
    let mut sorted_b = sig_b.clone();
    sorted_a.sort();
    sorted_b.sort();
    if sorted_a != sorted_b {
        return None;
    }

    fn extend(
        a: &[Vec<i64>],
        b: &[Vec<i64>],
        sig_a: &[Vec<(i64, i64)>],
        sig_b: &[Vec<(i64, i64)>],
        perm: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        let i = perm.len();
        if i == a.len() {
            return true;
        }
        for c in 0..b.len() {
            if used[c] || sig_a[i] != sig_b[c] {
                continue;
            }
            let consistent = (0..i).all(|j| a[i][j] == b[c][perm[j]] && a[j][i] == b[perm[j]][c])
                && a[i][i] == b[c][c];
            if !consistent {
                continue;
            }
            perm.push(c);
            used[c] = true;
            if extend(a, b, sig_a, sig_b, perm, used) {
                return true;
            }
            perm.pop();
            used[c] = false;
        }
        false
    }

    let mut perm = Vec::with_capacity(n);
    let mut used = vec![false; n];
    extend(a, b, &sig_a, &sig_b, &mut perm, &mut used).then_some(perm)
}

/// Cartan matrix of the untwisted affinization `X_l^(1)`, with `α₀ = −θ + δ`
/// in position 0.
pub fn untwisted_affine_cartan(rs: &FiniteRootSystem) -> CartanMatrix {
    let l = rs.rank();
    let mut simple = vec![rs.negate(rs.theta())];
    simple.extend_from_slice(rs.simple_roots());
    (0..=l)
        .map(|i| (0..=l).map(|j| rs.pairing(simple[j], simple[i])).collect())
        .collect()
}

fn types_of_rank(rank: usize) -> Vec<LieType> {
    [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G]
        .into_iter()
        .filter_map(|f| LieType::new(f, rank).ok())
        // B2 and C2 have permutation-equivalent matrices.
        .filter(|t| !(t.family() == Family::B && rank == 2))
        .collect()
}

fn twisted_name(t: LieType) -> Option<String> {
    let l = t.rank();
    match t.family() {
        Family::B => Some(format!("A{}~(2)", 2 * l - 1)),
        Family::C => Some(format!("D{}~(2)", l + 1)),
        Family::F => Some("E6~(2)".to_string()),
        Family::G => Some("D4~(3)".to_string()),
        _ => None,
    }
}

/// Reference matrices with `n` rows: finite types of rank `n`, untwisted
/// affine types of rank `n − 1`, and the twisted types arising as their
/// transposes.
fn reference_table(n: usize) -> Vec<(String, CartanMatrix)> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Vec<(String, CartanMatrix)>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().expect("cache lock").get(&n) {
        return hit.clone();
    }
    let mut table = Vec::new();
    for t in types_of_rank(n) {
        let rs = FiniteRootSystem::new(t).expect("valid type");
        table.push((t.to_string(), rs.cartan_matrix().to_vec()));
    }
    if n >= 2 {
        for t in types_of_rank(n - 1) {
            let rs = FiniteRootSystem::new(t).expect("valid type");
            let a = untwisted_affine_cartan(&rs);
            if let Some(name) = twisted_name(t) {
                table.push((name, transpose(&a)));
            }
            table.push((format!("{t}~(1)"), a));
        }
    }
    cache.lock().expect("cache lock").insert(n, table.clone());
    table
}

/// Name of an indecomposable matrix, e.g. `B3`, `A1~(1)`, `D3~(2)`; `?n` for
/// an unrecognised matrix with `n` rows.
pub fn component_name(a: &[Vec<i64>]) -> String {
    reference_table(a.len())
        .into_iter()
        .find(|(_, m)| permutation_equivalent(a, m))
        .map(|(name, _)| name)
        .unwrap_or_else(|| format!("?{}", a.len()))
}

/// Names of all components joined by `+`, sorted; `0` for the empty matrix.
pub fn type_name(a: &[Vec<i64>]) -> String {
    let mut names: Vec<String> = components(a)
        .iter()
        .map(|idx| component_name(&submatrix(a, idx)))
        .collect();
    if names.is_empty() {
        return "0".to_string();
    }
    names.sort();
    names.join("+")
}
