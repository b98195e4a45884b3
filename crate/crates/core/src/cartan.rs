//! Finite-type Cartan data, roots, weights and the invariant form.
//!
//! Conventions: `a_ij = <α_i^∨, α_j>`, simple roots are numbered as in
//! Bourbaki, and short roots have squared length 2, so `(α_i, α_j) = d_i a_ij`.
//! Root vectors are stored in the simple-root basis, weights in the
//! fundamental-weight basis. Indices are 0-based internally.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{self, IntMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

    pub fn valid_rank(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }
}

/// A finite type such as `A5` or `G2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if !family.valid_rank(rank) {
            return Err(Error::input(format!(
                "{}{} is not a finite type",
                family.letter(),
                rank
            )));
        }
        Ok(CartanType { family, rank })
    }

    /// Every valid type with rank at most `max_rank`.
    pub fn all_up_to(max_rank: usize) -> Vec<CartanType> {
        let mut out = Vec::new();
        for rank in 1..=max_rank {
            for family in [
                Family::A,
                Family::B,
                Family::C,
                Family::D,
                Family::E,
                Family::F,
                Family::G,
            ] {
                if family.valid_rank(rank) {
                    out.push(CartanType { family, rank });
                }
            }
        }
        out
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| Error::input(format!("unknown type {s:?}")))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::input(format!("bad rank in type {s:?}")))?;
        CartanType::new(family, rank)
    }
}

/// Either kind of vector accepted by [`RootSystem::inner_product`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Vector {
    Root(Vec<i64>),
    Weight(Vec<i64>),
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    pub ctype: CartanType,
    pub cartan: IntMatrix,
    pub symmetrizers: Vec<i64>,
    /// Sorted by height, then lexicographically.
    pub positive_roots: Vec<Vec<i64>>,
    inverse_cartan: Vec<Vec<BigRational>>,
    root_set: HashSet<Vec<i64>>,
}

fn cartan_data(ct: CartanType) -> (IntMatrix, Vec<i64>) {
    let n = ct.rank;
    let mut a = linalg::identity(n);
    for row in a.iter_mut() {
        for x in row.iter_mut() {
            *x *= 2;
        }
    }
    let mut d = vec![1; n];
    let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    match ct.family {
        Family::A => {
            for i in 0..n - 1 {
                link(i, i + 1, -1, -1);
            }
        }
        Family::B => {
            for i in 0..n - 2 {
                link(i, i + 1, -1, -1);
            }
            link(n - 2, n - 1, -1, -2);
            d = vec![2; n];
            d[n - 1] = 1;
        }
        Family::C => {
            for i in 0..n - 2 {
                link(i, i + 1, -1, -1);
            }
            link(n - 2, n - 1, -2, -1);
            d[n - 1] = 2;
        }
        Family::D => {
            for i in 0..n - 2 {
                link(i, i + 1, -1, -1);
            }
            link(n - 3, n - 1, -1, -1);
        }
        Family::E => {
            link(0, 2, -1, -1);
            link(1, 3, -1, -1);
            for i in 2..n - 1 {
                link(i, i + 1, -1, -1);
            }
        }
        Family::F => {
            link(0, 1, -1, -1);
            link(1, 2, -1, -2);
            link(2, 3, -1, -1);
            d = vec![2, 2, 1, 1];
        }
        Family::G => {
            link(0, 1, -3, -1);
            d = vec![1, 3];
        }
    }
    (a, d)
}

impl RootSystem {
    pub fn new(ct: CartanType) -> Result<Self> {
        let ct = CartanType::new(ct.family, ct.rank)?;
        let (cartan, symmetrizers) = cartan_data(ct);
        let n = ct.rank;
        let mut inverse_cartan = vec![vec![BigRational::zero(); n]; n];
        for j in 0..n {
            let mut e = vec![0; n];
            e[j] = 1;
            let col = linalg::solve_rational(&cartan, &e)
                .ok_or_else(|| Error::internal("Cartan matrix is singular"))?;
            for (i, x) in col.into_iter().enumerate() {
                inverse_cartan[i][j] = x;
            }
        }
        let mut rs = RootSystem {
            ctype: ct,
            cartan,
            symmetrizers,
            positive_roots: Vec::new(),
            inverse_cartan,
            root_set: HashSet::new(),
        };
        rs.positive_roots = rs.close_positive_roots();
        rs.root_set = rs
            .positive_roots
            .iter()
            .flat_map(|b| [b.clone(), b.iter().map(|x| -x).collect()])
            .collect();
        Ok(rs)
    }

    pub fn build(family: Family, rank: usize) -> Result<Self> {
        RootSystem::new(CartanType::new(family, rank)?)
    }

    fn close_positive_roots(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue: Vec<Vec<i64>> = (0..n).map(|i| self.simple_root(i)).collect();
        seen.extend(queue.iter().cloned());
        while let Some(b) = queue.pop() {
            for i in 0..n {
                let c = self.reflect_root(i, &b);
                if c.iter().all(|&x| x >= 0) && !seen.contains(&c) {
                    seen.insert(c.clone());
                    queue.push(c);
                }
            }
        }
        let mut roots: Vec<Vec<i64>> = seen.into_iter().collect();
        roots.sort_by(|x, y| {
            let hx: i64 = x.iter().sum();
            let hy: i64 = y.iter().sum();
            hx.cmp(&hy).then_with(|| y.cmp(x))
        });
        roots
    }

    pub fn rank(&self) -> usize {
        self.ctype.rank
    }

    pub fn d(&self, i: usize) -> i64 {
        self.symmetrizers[i]
    }

    pub fn simple_root(&self, i: usize) -> Vec<i64> {
        let mut v = vec![0; self.rank()];
        v[i] = 1;
        v
    }

    pub fn fundamental_weight(&self, i: usize) -> Vec<i64> {
        self.simple_root(i)
    }

    pub fn is_root(&self, b: &[i64]) -> bool {
        self.root_set.contains(b)
    }

    pub fn is_positive(b: &[i64]) -> bool {
        b.iter().all(|&x| x >= 0) && b.iter().any(|&x| x > 0)
    }

    pub fn is_negative(b: &[i64]) -> bool {
        b.iter().all(|&x| x <= 0) && b.iter().any(|&x| x < 0)
    }

    /// `s_i` on simple-root coordinates.
    pub fn reflect_root(&self, i: usize, b: &[i64]) -> Vec<i64> {
        let mut out = b.to_vec();
        out[i] -= linalg::dot(&self.cartan[i], b);
        out
    }

    /// `s_i` on fundamental-weight coordinates.
    pub fn reflect_weight(&self, i: usize, w: &[i64]) -> Vec<i64> {
        let wi = w[i];
        w.iter()
            .zip(&self.cartan)
            .map(|(&x, row)| x - wi * row[i])
            .collect()
    }

    pub fn root_to_weight(&self, b: &[i64]) -> Vec<i64> {
        linalg::mat_vec(&self.cartan, b)
    }

    /// Root-basis coordinates of a weight; generally rational.
    pub fn weight_to_root(&self, w: &[i64]) -> Vec<BigRational> {
        self.inverse_cartan
            .iter()
            .map(|row| {
                row.iter()
                    .zip(w)
                    .map(|(x, &y)| x * BigInt::from(y))
                    .fold(BigRational::zero(), |acc, t| acc + t)
            })
            .collect()
    }

    /// `(β, β')` for root-lattice vectors.
    pub fn root_inner(&self, x: &[i64], y: &[i64]) -> i64 {
        let mut acc = 0;
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            acc += xi * self.symmetrizers[i] * linalg::dot(&self.cartan[i], y);
        }
        acc
    }

    /// `(λ, β)` for a weight and a root-lattice vector.
    pub fn weight_root_inner(&self, w: &[i64], b: &[i64]) -> i64 {
        w.iter()
            .zip(b)
            .zip(&self.symmetrizers)
            .map(|((&x, &y), &d)| x * y * d)
            .sum()
    }

    pub fn weight_inner(&self, x: &[i64], y: &[i64]) -> BigRational {
        self.weight_to_root(x)
            .iter()
            .zip(y)
            .zip(&self.symmetrizers)
            .map(|((r, &w), &d)| r * BigInt::from(w * d))
            .fold(BigRational::zero(), |acc, t| acc + t)
    }

    pub fn inner_product(&self, x: &Vector, y: &Vector) -> Result<BigRational> {
        let n = self.rank();
        let (Vector::Root(a) | Vector::Weight(a)) = x;
        let (Vector::Root(b) | Vector::Weight(b)) = y;
        if a.len() != n || b.len() != n {
            return Err(Error::input("vector does not belong to this root system"));
        }
        let int = |v: i64| BigRational::from_integer(BigInt::from(v));
        Ok(match (x, y) {
            (Vector::Root(a), Vector::Root(b)) => int(self.root_inner(a, b)),
            (Vector::Weight(a), Vector::Root(b)) | (Vector::Root(b), Vector::Weight(a)) => {
                int(self.weight_root_inner(a, b))
            }
            (Vector::Weight(a), Vector::Weight(b)) => self.weight_inner(a, b),
        })
    }

    /// `(s_i + 1)Λ_i + Σ_{j≠i} a_ji Λ_j`, which should vanish.
    pub fn fz_identity_check(&self, i: usize) -> Result<Vec<i64>> {
        let n = self.rank();
        if i >= n {
            return Err(Error::input(format!("simple index {} out of range", i + 1)));
        }
        let li = self.fundamental_weight(i);
        let mut out = self.reflect_weight(i, &li);
        out[i] += 1;
        for j in (0..n).filter(|&j| j != i) {
            out[j] += self.cartan[j][i];
        }
        Ok(out)
    }
}
