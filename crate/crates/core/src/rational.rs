//! Exact rational scalars, vectors and small dense matrices.
//!
//! Everything mathematical in this crate runs over [`Q`], an arbitrary
//! precision rational. Vectors live in the orthogonal coordinate model of a
//! root system; the invariant form is a scalar multiple of the dot product
//! there, so vectors themselves carry no metric.

use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Returns `Some(n)` when `x` is an integer that fits into an `i64`.
pub fn to_i64(x: &Q) -> Option<i64> {
    if x.is_integer() {
        x.numer().to_i64()
    } else {
        None
    }
}

pub fn bigint_to_i64(x: &BigInt) -> Result<i64> {
    x.to_i64().ok_or_else(|| Error::LevelTooLarge(x.to_string()))
}

/// Parses `"a"`, `"-a"`, `"+a"` or `"a/b"` with an optional sign. Decimal
/// notation is rejected.
pub fn parse_rational(token: &str) -> Result<Q> {
    let err = |reason| Error::RationalSyntax {
        token: token.to_string(),
        reason,
    };
    let t = token.trim();
    if t.is_empty() {
        return Err(err("empty"));
    }
    if t.contains('.') || t.contains(['e', 'E']) {
        return Err(err("decimals are not accepted, use a/b"));
    }
    let parse_int = |s: &str, allow_sign: bool| -> Result<BigInt> {
        let digits = if allow_sign {
            s.strip_prefix(['+', '-']).unwrap_or(s)
        } else {
            s
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err("expected an integer or a/b"));
        }
        let v: BigInt = digits.parse().map_err(|_| err("expected an integer or a/b"))?;
        Ok(if s.starts_with('-') { -v } else { v })
    };
    match t.split_once('/') {
        None => Ok(Q::from_integer(parse_int(t, true)?)),
        Some((n, d)) => {
            let n = parse_int(n, true)?;
            let d = parse_int(d, false)?;
            if d.is_zero() {
                return Err(err("zero denominator"));
            }
            Ok(Q::new(n, d))
        }
    }
}

/// A vector of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Vector(pub Vec<Q>);

impl Vector {
    pub fn zero(dim: usize) -> Self {
        Vector(vec![Q::zero(); dim])
    }

    pub fn from_ints(xs: &[i64]) -> Self {
        Vector(xs.iter().map(|&x| int(x)).collect())
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.0[i] = Q::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Q> {
        self.0.iter()
    }

    pub fn dot(&self, other: &Vector) -> Q {
        debug_assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(&other.0)
            .fold(Q::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn scale(&self, c: &Q) -> Vector {
        Vector(self.0.iter().map(|x| x * c).collect())
    }

    /// `self + c * other`
    pub fn add_scaled(&self, c: &Q, other: &Vector) -> Vector {
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a + c * b).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }
}

impl Index<usize> for Vector {
    type Output = Q;
    fn index(&self, i: usize) -> &Q {
        &self.0[i]
    }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// Square matrix over [`Q`] acting on column vectors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    dim: usize,
    entries: Vec<Q>,
}

impl Matrix {
    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![Q::zero(); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = Q::one();
        }
        Matrix { dim, entries }
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        Matrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Q {
        &self.entries[i * self.dim + j]
    }

    pub fn rows(&self) -> Vec<Vec<Q>> {
        self.entries.chunks(self.dim).map(<[Q]>::to_vec).collect()
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        Vector(
            self.entries
                .chunks(self.dim)
                .map(|row| row.iter().zip(&v.0).fold(Q::zero(), |acc, (a, b)| acc + a * b))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        let n = self.dim;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = Q::zero();
                for k in 0..n {
                    let a = self.get(i, k);
                    if !a.is_zero() {
                        acc += a * other.get(k, j);
                    }
                }
                entries.push(acc);
            }
        }
        Matrix { dim: n, entries }
    }

    pub fn transpose(&self) -> Matrix {
        let n = self.dim;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(self.get(j, i).clone());
            }
        }
        Matrix { dim: n, entries }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.entries.chunks(self.dim).map(|r| Vector(r.to_vec())))
            .finish()
    }
}

/// Row-reduces a copy of `rows` and returns the rank.
pub fn rank(rows: &[Vec<Q>]) -> usize {
    let mut m: Vec<Vec<Q>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(pivot) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pivot);
        let inv = m[r][c].recip();
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = &m[i][c] * &inv;
                for j in c..ncols {
                    let t = &f * &m[r][j];
                    m[i][j] -= t;
                }
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

pub fn determinant(rows: &[Vec<Q>]) -> Q {
    let n = rows.len();
    let mut m: Vec<Vec<Q>> = rows.to_vec();
    let mut det = Q::one();
    for c in 0..n {
        let Some(pivot) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Q::zero();
        };
        if pivot != c {
            m.swap(c, pivot);
            det = -det;
        }
        det *= &m[c][c];
        let inv = m[c][c].recip();
        for i in c + 1..n {
            if !m[i][c].is_zero() {
                let f = &m[i][c] * &inv;
                for j in c..n {
                    let t = &f * &m[c][j];
                    m[i][j] -= t;
                }
            }
        }
    }
    det
}

/// Inverse of a square matrix given by rows, or `None` when singular.
pub fn inverse(rows: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = rows.len();
    let mut m: Vec<Vec<Q>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            row
        })
        .collect();
    for c in 0..n {
        let pivot = (c..n).find(|&i| !m[i][c].is_zero())?;
        m.swap(c, pivot);
        let inv = m[c][c].recip();
        for x in m[c].iter_mut() {
            *x *= &inv;
        }
        for i in 0..n {
            if i != c && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..2 * n {
                    let t = &f * &m[c][j];
                    m[i][j] -= t;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Least non-negative residue of `a` modulo `m > 0`.
pub fn modulo(a: i64, m: i64) -> i64 {
    a.mod_floor(&m)
}

/// Inverse of `a` modulo `m`, when `gcd(a, m) = 1`.
pub fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    if m == 1 {
        return Some(0);
    }
    let e = a.mod_floor(&m).extended_gcd(&m);
    (e.gcd == 1).then(|| e.x.mod_floor(&m))
}

pub fn is_positive_integer(x: &Q) -> bool {
    x.is_integer() && x.is_positive()
}
