//! Finite Weyl group elements and exhaustive enumeration.

use std::hash::{Hash, Hasher};

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::rational::{Matrix, Vector};
use crate::roots::FiniteRootSystem;

/// Default refusal threshold for enumerating a Weyl group.
pub const DEFAULT_WEYL_CAP: u128 = 10_000_000;

/// An element of the finite Weyl group.
///
/// The matrix is canonical; the word (0-based simple reflection indices,
/// leftmost factor first) is kept as provenance only. `perm[a]` is the index
/// of the image of root `a`.
#[derive(Debug, Clone)]
pub struct FiniteWeylElement {
    word: Vec<usize>,
    matrix: Matrix,
    perm: Vec<usize>,
}

impl PartialEq for FiniteWeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for FiniteWeylElement {}

impl Hash for FiniteWeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.matrix.hash(state);
    }
}

impl FiniteWeylElement {
    pub fn identity(rs: &FiniteRootSystem) -> Self {
        FiniteWeylElement {
            word: Vec::new(),
            matrix: Matrix::identity(rs.dim()),
            perm: (0..rs.num_roots()).collect(),
        }
    }

    /// Reflection in an arbitrary root (by index).
    pub fn reflection(rs: &FiniteRootSystem, root: usize) -> Self {
        let word = rs
            .simple_roots()
            .iter()
            .position(|&s| s == root || rs.negate(s) == root)
            .map(|i| vec![i])
            .unwrap_or_default();
        FiniteWeylElement {
            word,
            matrix: rs.reflection_matrix(root),
            perm: (0..rs.num_roots()).map(|a| rs.reflect_index(root, a)).collect(),
        }
    }

    pub fn simple_reflection(rs: &FiniteRootSystem, i: usize) -> Result<Self> {
        if i >= rs.rank() {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: rs.rank() - 1,
            });
        }
        let mut s = Self::reflection(rs, rs.simple_roots()[i]);
        s.word = vec![i];
        Ok(s)
    }

    /// Product `s_{w[0]} s_{w[1]} ...`.
    pub fn from_word(rs: &FiniteRootSystem, word: &[usize]) -> Result<Self> {
        let mut w = Self::identity(rs);
        for &i in word.iter().rev() {
            w = Self::simple_reflection(rs, i)?.compose(&w);
        }
        Ok(w)
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Index of `w(root a)`.
    pub fn act_on_root_index(&self, a: usize) -> usize {
        self.perm[a]
    }

    pub fn root_permutation(&self) -> &[usize] {
        &self.perm
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        self.matrix.apply(v)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        FiniteWeylElement {
            word,
            matrix: self.matrix.mul(&other.matrix),
            perm: other.perm.iter().map(|&a| self.perm[a]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut perm = vec![0; self.perm.len()];
        for (a, &b) in self.perm.iter().enumerate() {
            perm[b] = a;
        }
        FiniteWeylElement {
            word: self.word.iter().rev().copied().collect(),
            matrix: self.matrix.transpose(),
            perm,
        }
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self, rs: &FiniteRootSystem) -> usize {
        rs.positive_roots().filter(|&a| !rs.is_positive(self.perm[a])).count()
    }
}

/// Enumerates `W` through the orbit `W·ρ`: every `w ≠ 1` has a unique parent
/// `s_j w` where `j` is the least index with `<wρ, α_j∨> < 0`. The traversal
/// therefore needs no visited set and yields reduced words.
pub struct WeylElements<'a> {
    rs: &'a FiniteRootSystem,
    generators: Vec<FiniteWeylElement>,
    stack: Vec<(Vec<i64>, FiniteWeylElement)>,
}

impl Iterator for WeylElements<'_> {
    type Item = FiniteWeylElement;

    fn next(&mut self) -> Option<FiniteWeylElement> {
        let (labels, w) = self.stack.pop()?;
        let cartan = self.rs.cartan_matrix();
        for i in (0..labels.len()).rev() {
            if labels[i] <= 0 {
                continue;
            }
            let child: Vec<i64> = (0..labels.len())
                .map(|j| labels[j] - labels[i] * cartan[j][i])
                .collect();
            if child.iter().position(|&x| x < 0) == Some(i) {
                self.stack.push((child, self.generators[i].compose(&w)));
            }
        }
        Some(w)
    }
}

impl FiniteRootSystem {
    /// Enumerates every Weyl group element exactly once. Refuses when `|W|`
    /// exceeds `cap`.
    pub fn weyl_elements(&self, cap: u128) -> Result<WeylElements<'_>> {
        let order = self.lie_type().weyl_order();
        if order > cap {
            return Err(Error::GroupTooLarge { order, cap });
        }
        let generators = (0..self.rank())
            .map(|i| FiniteWeylElement::simple_reflection(self, i))
            .collect::<Result<_>>()?;
        Ok(WeylElements {
            rs: self,
            generators,
            stack: vec![(vec![1; self.rank()], FiniteWeylElement::identity(self))],
        })
    }

    /// Longest element `w_0`.
    pub fn longest_element(&self) -> FiniteWeylElement {
        // Descend greedily from ρ to −ρ.
        let mut w = FiniteWeylElement::identity(self);
        loop {
            let wrho = w.apply(self.rho());
            let Some(i) = (0..self.rank())
                .find(|&i| self.pair_with_coroot(&wrho, self.simple_roots()[i]).is_positive())
            else {
                return w;
            };
            w = FiniteWeylElement::simple_reflection(self, i)
                .expect("index in range")
                .compose(&w);
        }
    }
}
