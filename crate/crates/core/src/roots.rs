//! Finite root systems in an orthogonal coordinate model.
//!
//! Each family uses its textbook embedding (Bourbaki numbering of the simple
//! roots). The invariant form is `scale * dot`, with `scale` chosen so that
//! long roots have squared length 2. All other data (roots, heights,
//! pairings, Cartan matrix, θ, θ_s, ρ, Coxeter numbers, lattice bases) is
//! derived from the simple roots by closing under simple reflections.

use std::collections::{HashMap, HashSet, VecDeque};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lie_type::{Family, LieType};
use crate::rational::{self, frac, int, to_i64, Matrix, Vector, Q};

#[derive(Debug, Clone)]
pub struct FiniteRootSystem {
    lie_type: LieType,
    dim: usize,
    form_scale: Q,
    roots: Vec<Vector>,
    coroots: Vec<Vector>,
    coeffs: Vec<Vec<i64>>,
    heights: Vec<i64>,
    by_vector: HashMap<Vector, usize>,
    by_coeffs: HashMap<Vec<i64>, usize>,
    simple: Vec<usize>,
    negation: Vec<usize>,
    // pairing[a][b] = <root a, coroot b>
    pairing: Vec<Vec<i64>>,
    // reflection[b][a] = index of s_b(root a)
    reflection: Vec<Vec<usize>>,
    coroot_factor: Vec<i64>,
    theta: usize,
    theta_short: usize,
    rho: Vector,
    cartan: Vec<Vec<i64>>,
    coxeter: i64,
    dual_coxeter: i64,
    lacing: i64,
    fundamental_weights: Vec<Vector>,
    fundamental_coweights: Vec<Vector>,
    gram_inverse: Vec<Vec<Q>>,
}

/// Which distinguished root bounds a dominant weight enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundRoot {
    /// Bound `<λ, θ>` (θ identified with θ∨ through the normalized form).
    Theta,
    /// Bound `<λ, θ_s∨>`.
    ThetaShort,
}

fn simple_roots_for(t: LieType) -> (usize, Q, Vec<Vector>) {
    let l = t.rank();
    let e = |dim: usize, i: usize| Vector::unit(dim, i);
    let diff = |dim: usize, i: usize, j: usize| &e(dim, i) - &e(dim, j);
    match t.family() {
        Family::A => {
            let dim = l + 1;
            (dim, Q::one(), (0..l).map(|i| diff(dim, i, i + 1)).collect())
        }
        Family::B => {
            let mut s: Vec<_> = (0..l - 1).map(|i| diff(l, i, i + 1)).collect();
            s.push(e(l, l - 1));
            (l, Q::one(), s)
        }
        Family::C => {
            let mut s: Vec<_> = (0..l - 1).map(|i| diff(l, i, i + 1)).collect();
            s.push(e(l, l - 1).scale(&int(2)));
            (l, frac(1, 2), s)
        }
        Family::D => {
            let mut s: Vec<_> = (0..l - 1).map(|i| diff(l, i, i + 1)).collect();
            s.push(&e(l, l - 2) + &e(l, l - 1));
            (l, Q::one(), s)
        }
        Family::E => {
            let half = frac(1, 2);
            let mut a1 = Vector::zero(8);
            for (i, x) in a1.0.iter_mut().enumerate() {
                *x = if i == 0 || i == 7 { half.clone() } else { -half.clone() };
            }
            let mut s = vec![a1, &e(8, 0) + &e(8, 1)];
            for i in 1..7 {
                s.push(diff(8, i, i - 1));
            }
            s.truncate(l);
            (8, Q::one(), s)
        }
        Family::F => {
            let half = frac(1, 2);
            let a4 = Vector(vec![half.clone(), -half.clone(), -half.clone(), -half]);
            (4, Q::one(), vec![diff(4, 1, 2), diff(4, 2, 3), e(4, 3), a4])
        }
        Family::G => {
            let a2 = Vector::from_ints(&[-2, 1, 1]);
            (3, frac(1, 3), vec![diff(3, 0, 1), a2])
        }
    }
}

impl FiniteRootSystem {
    pub fn new(lie_type: LieType) -> Result<Self> {
        let (dim, form_scale, simple_vectors) = simple_roots_for(lie_type);
        let l = simple_vectors.len();
        let form = |a: &Vector, b: &Vector| &form_scale * a.dot(b);

        let gram: Vec<Vec<Q>> = simple_vectors
            .iter()
            .map(|a| simple_vectors.iter().map(|b| form(a, b)).collect())
            .collect();
        let gram_inverse = rational::inverse(&gram)
            .ok_or_else(|| Error::Internal("simple roots are linearly dependent".into()))?;

        let reflect_vec = |alpha: &Vector, v: &Vector| -> Vector {
            let c = int(2) * form(v, alpha) / form(alpha, alpha);
            v.add_scaled(&-c, alpha)
        };

        // Close the simple roots under simple reflections.
        let mut seen: HashSet<Vector> = simple_vectors.iter().cloned().collect();
        let mut queue: VecDeque<Vector> = simple_vectors.iter().cloned().collect();
        while let Some(v) = queue.pop_front() {
            for a in &simple_vectors {
                let w = reflect_vec(a, &v);
                if seen.insert(w.clone()) {
                    queue.push_back(w);
                }
            }
        }

        let coeffs_of = |v: &Vector| -> Result<Vec<i64>> {
            let rhs: Vec<Q> = simple_vectors.iter().map(|a| form(v, a)).collect();
            gram_inverse
                .iter()
                .map(|row| {
                    let c = row.iter().zip(&rhs).fold(Q::zero(), |acc, (x, y)| acc + x * y);
                    to_i64(&c).ok_or_else(|| {
                        Error::Internal(format!("root {v} has non-integral coefficient {c}"))
                    })
                })
                .collect()
        };

        let mut roots: Vec<(i64, Vector, Vec<i64>)> = seen
            .into_iter()
            .map(|v| {
                let c = coeffs_of(&v)?;
                Ok((c.iter().sum(), v, c))
            })
            .collect::<Result<_>>()?;
        roots.sort();

        let heights: Vec<i64> = roots.iter().map(|r| r.0).collect();
        let coeffs: Vec<Vec<i64>> = roots.iter().map(|r| r.2.clone()).collect();
        let roots: Vec<Vector> = roots.into_iter().map(|r| r.1).collect();
        let n = roots.len();

        let by_vector: HashMap<Vector, usize> =
            roots.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        let by_coeffs: HashMap<Vec<i64>, usize> =
            coeffs.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
        let simple: Vec<usize> = simple_vectors.iter().map(|v| by_vector[v]).collect();
        let negation: Vec<usize> = roots.iter().map(|v| by_vector[&-v]).collect();

        let sq_len: Vec<Q> = roots.iter().map(|v| form(v, v)).collect();
        let coroots: Vec<Vector> = roots
            .iter()
            .zip(&sq_len)
            .map(|(v, len)| v.scale(&(int(2) / len)))
            .collect();
        let coroot_factor: Vec<i64> = sq_len
            .iter()
            .map(|len| {
                to_i64(&(int(2) / len))
                    .ok_or_else(|| Error::Internal(format!("root length {len} is not 2/r")))
            })
            .collect::<Result<_>>()?;

        let pairing: Vec<Vec<i64>> = roots
            .iter()
            .map(|a| {
                coroots
                    .iter()
                    .map(|b| {
                        to_i64(&form(a, b)).ok_or_else(|| {
                            Error::Internal(format!("pairing of {a} with a coroot is not integral"))
                        })
                    })
                    .collect::<Result<Vec<i64>>>()
            })
            .collect::<Result<_>>()?;

        let reflection: Vec<Vec<usize>> = (0..n)
            .map(|b| {
                (0..n)
                    .map(|a| {
                        let c = pairing[a][b];
                        let image: Vec<i64> =
                            coeffs[a].iter().zip(&coeffs[b]).map(|(x, y)| x - c * y).collect();
                        by_coeffs.get(&image).copied().ok_or_else(|| {
                            Error::Internal("root set not closed under reflections".into())
                        })
                    })
                    .collect::<Result<Vec<usize>>>()
            })
            .collect::<Result<_>>()?;

        let theta = (0..n).max_by_key(|&i| heights[i]).expect("nonempty root system");
        let min_factor = *coroot_factor.iter().max().expect("nonempty");
        let theta_short = (0..n)
            .filter(|&i| coroot_factor[i] == min_factor)
            .max_by_key(|&i| heights[i])
            .expect("short roots exist");
        let lacing = coroot_factor[theta_short];

        let positive: Vec<usize> = (0..n).filter(|&i| heights[i] > 0).collect();
        let rho = positive
            .iter()
            .fold(Vector::zero(dim), |acc, &i| &acc + &roots[i])
            .scale(&frac(1, 2));

        let cartan: Vec<Vec<i64>> = simple
            .iter()
            .map(|&i| simple.iter().map(|&j| pairing[j][i]).collect())
            .collect();

        let fundamental_coweights: Vec<Vector> = gram_inverse
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&simple_vectors)
                    .fold(Vector::zero(dim), |acc, (c, a)| acc.add_scaled(c, a))
            })
            .collect();
        let fundamental_weights: Vec<Vector> = fundamental_coweights
            .iter()
            .zip(&simple)
            .map(|(w, &i)| w.scale(&(&sq_len[i] / int(2))))
            .collect();

        let rho_theta = to_i64(&form(&rho, &coroots[theta]))
            .ok_or_else(|| Error::Internal("<rho, theta^vee> not integral".into()))?;

        let rs = FiniteRootSystem {
            lie_type,
            dim,
            form_scale,
            roots,
            coroots,
            coeffs,
            heights: heights.clone(),
            by_vector,
            by_coeffs,
            simple,
            negation,
            pairing,
            reflection,
            coroot_factor,
            theta,
            theta_short,
            rho,
            cartan,
            coxeter: heights[theta] + 1,
            dual_coxeter: rho_theta + 1,
            lacing,
            fundamental_weights,
            fundamental_coweights,
            gram_inverse,
        };
        debug_assert_eq!(rs.simple.len(), l);
        rs.check_invariants()?;
        Ok(rs)
    }

    fn check_invariants(&self) -> Result<()> {
        let fail = |what: &str| Err(Error::Internal(format!("{}: {what}", self.lie_type)));
        if self.form(&self.roots[self.theta], &self.roots[self.theta]) != int(2) {
            return fail("(theta|theta) != 2");
        }
        let ts = &self.roots[self.theta_short];
        if self.form(ts, ts) != frac(2, self.lacing) {
            return fail("(theta_s|theta_s) != 2/r");
        }
        if !(1..=3).contains(&self.lacing) || (self.lacing == 1) != self.lie_type.is_simply_laced()
        {
            return fail("lacing number out of range");
        }
        for &i in &self.simple {
            if self.pair_with_coroot(&self.rho, i) != Q::one() {
                return fail("<rho, alpha_i^vee> != 1");
            }
        }
        if self.roots.len() != 2 * self.positive_roots().count() {
            return fail("|Delta| != 2 |Delta_+|");
        }
        Ok(())
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.simple.len()
    }

    /// Dimension of the ambient coordinate space.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Normalized invariant form `(x|y)`.
    pub fn form(&self, x: &Vector, y: &Vector) -> Q {
        &self.form_scale * x.dot(y)
    }

    pub fn form_scale(&self) -> &Q {
        &self.form_scale
    }

    pub fn form_matrix(&self) -> Vec<Vec<Q>> {
        (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| if i == j { self.form_scale.clone() } else { Q::zero() })
                    .collect()
            })
            .collect()
    }

    pub fn roots(&self) -> &[Vector] {
        &self.roots
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn root(&self, i: usize) -> &Vector {
        &self.roots[i]
    }

    pub fn coroot(&self, i: usize) -> &Vector {
        &self.coroots[i]
    }

    pub fn root_index(&self, v: &Vector) -> Option<usize> {
        self.by_vector.get(v).copied()
    }

    pub fn root_index_by_coeffs(&self, c: &[i64]) -> Option<usize> {
        self.by_coeffs.get(c).copied()
    }

    /// Coefficients of root `i` in the simple roots.
    pub fn coeffs(&self, i: usize) -> &[i64] {
        &self.coeffs[i]
    }

    pub fn height(&self, i: usize) -> i64 {
        self.heights[i]
    }

    pub fn is_positive(&self, i: usize) -> bool {
        self.heights[i] > 0
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.roots.len()).filter(|&i| self.heights[i] > 0)
    }

    pub fn negate(&self, i: usize) -> usize {
        self.negation[i]
    }

    /// `<root a, coroot b>`.
    pub fn pairing(&self, a: usize, b: usize) -> i64 {
        self.pairing[a][b]
    }

    /// Index of `s_b(root a)`.
    pub fn reflect_index(&self, b: usize, a: usize) -> usize {
        self.reflection[b][a]
    }

    /// `2/(α|α)`: 1 for long roots, the lacing number for short roots.
    pub fn coroot_factor(&self, i: usize) -> i64 {
        self.coroot_factor[i]
    }

    pub fn is_long(&self, i: usize) -> bool {
        self.coroot_factor[i] == 1
    }

    /// Root indices of the simple roots α_1..α_l (Bourbaki order).
    pub fn simple_roots(&self) -> &[usize] {
        &self.simple
    }

    pub fn simple_root(&self, i: usize) -> &Vector {
        &self.roots[self.simple[i]]
    }

    pub fn simple_coroots(&self) -> Vec<Vector> {
        self.simple.iter().map(|&i| self.coroots[i].clone()).collect()
    }

    pub fn theta(&self) -> usize {
        self.theta
    }

    pub fn theta_short(&self) -> usize {
        self.theta_short
    }

    pub fn rho(&self) -> &Vector {
        &self.rho
    }

    /// `cartan[i][j] = <α_j, α_i∨>`.
    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn coxeter_number(&self) -> i64 {
        self.coxeter
    }

    pub fn dual_coxeter_number(&self) -> i64 {
        self.dual_coxeter
    }

    pub fn lacing_number(&self) -> i64 {
        self.lacing
    }

    pub fn fundamental_weights(&self) -> &[Vector] {
        &self.fundamental_weights
    }

    /// Basis ω_i∨ of P∨, dual to the simple roots under the form.
    pub fn fundamental_coweights(&self) -> &[Vector] {
        &self.fundamental_coweights
    }

    /// `<λ, α∨>` for root index `i`.
    pub fn pair_with_coroot(&self, lambda: &Vector, i: usize) -> Q {
        self.form(lambda, &self.coroots[i])
    }

    /// Dynkin labels `<λ, α_i∨>`.
    pub fn labels(&self, lambda: &Vector) -> Vec<Q> {
        self.simple.iter().map(|&i| self.pair_with_coroot(lambda, i)).collect()
    }

    pub fn weight_from_labels(&self, labels: &[Q]) -> Result<Vector> {
        if labels.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: labels.len(),
            });
        }
        Ok(labels
            .iter()
            .zip(&self.fundamental_weights)
            .fold(Vector::zero(self.dim), |acc, (c, w)| acc.add_scaled(c, w)))
    }

    /// Coefficients of a vector in the simple roots (rational in general).
    pub fn root_coordinates(&self, v: &Vector) -> Vec<Q> {
        let rhs: Vec<Q> = (0..self.rank()).map(|j| self.form(v, self.simple_root(j))).collect();
        self.gram_inverse
            .iter()
            .map(|row| row.iter().zip(&rhs).fold(Q::zero(), |acc, (x, y)| acc + x * y))
            .collect()
    }

    pub fn coweight_from_coords(&self, coords: &[i64]) -> Vector {
        coords
            .iter()
            .zip(&self.fundamental_coweights)
            .fold(Vector::zero(self.dim), |acc, (&c, w)| acc.add_scaled(&int(c), w))
    }

    /// Coordinates of `μ` in the fundamental coweights, when `μ ∈ P∨`.
    pub fn coweight_coords(&self, mu: &Vector) -> Option<Vec<i64>> {
        if mu.dim() != self.dim {
            return None;
        }
        let coords: Option<Vec<i64>> =
            (0..self.rank()).map(|j| to_i64(&self.form(mu, self.simple_root(j)))).collect();
        let coords = coords?;
        // Reject components orthogonal to the span of the roots.
        (self.coweight_from_coords(&coords) == *mu).then_some(coords)
    }

    /// Coordinates of `μ` in the simple coroots, when `μ ∈ Q∨`.
    pub fn coroot_coords(&self, mu: &Vector) -> Option<Vec<i64>> {
        self.coweight_coords(mu)?;
        self.fundamental_weights.iter().map(|w| to_i64(&self.form(mu, w))).collect()
    }

    /// `(root i | μ)` for `μ` given in fundamental-coweight coordinates.
    pub fn root_dot_coweight(&self, i: usize, coords: &[i64]) -> i64 {
        self.coeffs[i].iter().zip(coords).map(|(a, b)| a * b).sum()
    }

    pub fn reflection_matrix(&self, i: usize) -> Matrix {
        let alpha = &self.roots[i];
        let coroot = &self.coroots[i];
        let rows = (0..self.dim)
            .map(|r| {
                (0..self.dim)
                    .map(|c| {
                        let delta = if r == c { Q::one() } else { Q::zero() };
                        delta - &self.form_scale * &alpha[r] * &coroot[c]
                    })
                    .collect()
            })
            .collect();
        Matrix::from_rows(rows)
    }

    pub fn simple_reflection_matrix(&self, i: usize) -> Matrix {
        self.reflection_matrix(self.simple[i])
    }

    /// `s_α(λ) = λ − <λ, α∨> α`; `alpha` must be a root.
    pub fn reflect(&self, alpha: &Vector, lambda: &Vector) -> Result<Vector> {
        let i = self
            .root_index(alpha)
            .ok_or_else(|| Error::NotARoot(format!("{alpha} in {}", self.lie_type)))?;
        if lambda.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: lambda.dim(),
            });
        }
        Ok(lambda.add_scaled(&-self.pair_with_coroot(lambda, i), alpha))
    }

    /// Coefficients `m_i = <ω_i, bound>` of the bounding pairing.
    fn bound_coefficients(&self, bound_root: BoundRoot) -> Vec<i64> {
        let target = match bound_root {
            BoundRoot::Theta => self.roots[self.theta].clone(),
            BoundRoot::ThetaShort => self.coroots[self.theta_short].clone(),
        };
        self.fundamental_weights
            .iter()
            .map(|w| to_i64(&self.form(w, &target)).expect("integral pairing"))
            .collect()
    }

    /// All dominant integral `λ` with `<λ, θ> <= bound` (or `<λ, θ_s∨> <= bound`),
    /// ordered lexicographically by Dynkin labels. Negative bounds give an
    /// empty list.
    pub fn dominant_integral_weights(&self, bound_root: BoundRoot, bound: i64) -> Vec<Vector> {
        self.dominant_integral_labels(bound_root, bound)
            .into_iter()
            .map(|labels| {
                labels
                    .iter()
                    .zip(&self.fundamental_weights)
                    .fold(Vector::zero(self.dim), |acc, (&c, w)| acc.add_scaled(&int(c), w))
            })
            .collect()
    }

    pub fn dominant_integral_labels(&self, bound_root: BoundRoot, bound: i64) -> Vec<Vec<i64>> {
        let m = self.bound_coefficients(bound_root);
        let mut out = Vec::new();
        if bound < 0 {
            return out;
        }
        let mut current = vec![0i64; m.len()];
        fn rec(i: usize, left: i64, m: &[i64], cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
            if i == m.len() {
                out.push(cur.clone());
                return;
            }
            let mut a = 0;
            while a * m[i] <= left {
                cur[i] = a;
                rec(i + 1, left - a * m[i], m, cur, out);
                a += 1;
            }
            cur[i] = 0;
        }
        rec(0, bound, &m, &mut current, &mut out);
        out
    }

    /// Index `[P∨ : Q∨]`, computed from the coroot coordinates.
    pub fn coweight_index(&self) -> Q {
        let rows: Vec<Vec<Q>> = self
            .simple_coroots()
            .iter()
            .map(|c| {
                self.coweight_coords(c)
                    .expect("coroots lie in P∨")
                    .into_iter()
                    .map(int)
                    .collect()
            })
            .collect();
        rational::determinant(&rows).abs()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> FiniteRootSystem {
        FiniteRootSystem::new(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn a1_data() {
        let a1 = rs("A1");
        assert_eq!(a1.num_roots(), 2);
        assert_eq!(a1.coxeter_number(), 2);
        assert_eq!(a1.dual_coxeter_number(), 2);
        assert_eq!(a1.lacing_number(), 1);
        assert_eq!(a1.theta(), a1.simple_roots()[0]);
        assert_eq!(a1.theta_short(), a1.theta());
    }

    #[test]
    fn numerical_invariants_per_type() {
        // (type, |Δ|, h, h∨, r∨, det Cartan)
        let table = [
            ("A1", 2, 2, 2, 1, 2),
            ("A2", 6, 3, 3, 1, 3),
            ("A3", 12, 4, 4, 1, 4),
            ("B2", 8, 4, 3, 2, 2),
            ("B3", 18, 6, 5, 2, 2),
            ("C3", 18, 6, 4, 2, 2),
            ("D4", 24, 6, 6, 1, 4),
            ("G2", 12, 6, 4, 3, 1),
            ("F4", 48, 12, 9, 2, 1),
            ("E6", 72, 12, 12, 1, 3),
            ("E7", 126, 18, 18, 1, 2),
            ("E8", 240, 30, 30, 1, 1),
        ];
        for (t, n, h, hd, r, det) in table {
            let s = rs(t);
            assert_eq!(s.num_roots(), n, "{t} |Δ|");
            assert_eq!(s.coxeter_number(), h, "{t} h");
            assert_eq!(s.dual_coxeter_number(), hd, "{t} h∨");
            assert_eq!(s.lacing_number(), r, "{t} r∨");
            let cartan: Vec<Vec<Q>> = s
                .cartan_matrix()
                .iter()
                .map(|r| r.iter().map(|&x| int(x)).collect())
                .collect();
            assert_eq!(rational::determinant(&cartan), int(det), "{t} det");
            assert_eq!(s.coweight_index(), int(det), "{t} [P∨:Q∨]");
        }
    }

    #[test]
    fn reflect_examples() {
        let a1 = rs("A1");
        let a = a1.simple_root(0).clone();
        assert_eq!(a1.reflect(&a, a1.rho()).unwrap(), -a1.rho());

        let b2 = rs("B2");
        let theta = b2.root(b2.theta()).clone();
        assert_eq!(b2.reflect(&theta, &theta).unwrap(), -&theta);

        let ts = b2.root(b2.theta_short()).clone();
        for i in 0..2 {
            let idx = b2.simple_roots()[i];
            if b2.is_long(idx) {
                continue;
            }
            let expected = b2.simple_reflection_matrix(i).apply(&ts);
            assert_eq!(b2.reflect(b2.simple_root(i), &ts).unwrap(), expected);
        }

        let not_root = Vector::from_ints(&[1, 1]).scale(&int(3));
        assert!(matches!(b2.reflect(&not_root, &ts), Err(Error::NotARoot(_))));
    }

    #[test]
    fn dominant_weight_counts() {
        let a1 = rs("A1");
        let w = a1.dominant_integral_weights(BoundRoot::Theta, 1);
        assert_eq!(w.len(), 2);
        assert!(w[0].is_zero());
        assert_eq!(a1.labels(&w[1]), vec![int(1)]);
        assert_eq!(a1.dominant_integral_weights(BoundRoot::Theta, 0).len(), 1);
        assert!(a1.dominant_integral_weights(BoundRoot::Theta, -1).is_empty());

        // Exhaustive oracle over a coefficient box for B2 with θ_s∨.
        let b2 = rs("B2");
        let fast = b2.dominant_integral_weights(BoundRoot::ThetaShort, 1);
        let ts = b2.coroot(b2.theta_short()).clone();
        let mut brute = Vec::new();
        for a in 0..5 {
            for b in 0..5 {
                let v = b2.weight_from_labels(&[int(a), int(b)]).unwrap();
                if b2.form(&v, &ts) <= int(1) {
                    brute.push(v);
                }
            }
        }
        assert_eq!(fast.len(), brute.len());
        assert_eq!(fast.len(), 2);
        for v in &brute {
            assert!(fast.contains(v));
        }
    }

    #[test]
    fn lattices() {
        let b2 = rs("B2");
        for (i, w) in b2.fundamental_coweights().iter().enumerate() {
            let coords = b2.coweight_coords(w).unwrap();
            assert_eq!(coords, (0..2).map(|j| (i == j) as i64).collect::<Vec<_>>());
        }
        for c in b2.simple_coroots() {
            assert!(b2.coroot_coords(&c).is_some());
        }
        // ω_1∨ = e1 is not in Q∨, ω_2∨ = e1 + e2 = α_1∨ + α_2∨ is.
        let cw = b2.fundamental_coweights();
        assert!(b2.coroot_coords(&cw[0]).is_none());
        assert_eq!(b2.coroot_coords(&cw[1]), Some(vec![1, 1]));
        let a2 = rs("A2");
        let off_plane = Vector::from_ints(&[1, 1, 1]);
        assert!(a2.coweight_coords(&off_plane).is_none());
    }
}
