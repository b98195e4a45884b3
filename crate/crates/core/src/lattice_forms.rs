//! The skew forms `L̄₀` and `L̄ = A L̄₀ Aᵗ`, the compatible pair `(L̄, B̄)`
//! and the column-reduced form with its `Z` block.
//!
//! Vectors "in M-coordinates" are indexed by grid positions and describe a
//! product of the minors `M̄↓_{c,d} = z_{c,1} ⋯ z_{c,d}`; the z-exponent of such
//! a product is `Aᵗ m`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::cartan::RootSystem;
use crate::error::{Error, Result};
use crate::linalg::{self, IntMatrix};
use crate::weyl::BetaGrid;

/// An integer skew-symmetric matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct SkewForm {
    entries: IntMatrix,
}

impl SkewForm {
    pub fn new(entries: IntMatrix) -> Result<Self> {
        let n = entries.len();
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(Error::input("skew form must be square"));
            }
            for j in 0..n {
                if row[j] != -entries[j][i] {
                    return Err(Error::input(format!(
                        "matrix is not skew-symmetric at ({}, {})",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(SkewForm { entries })
    }

    pub fn zero(n: usize) -> Self {
        SkewForm {
            entries: linalg::zeros(n, n),
        }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &IntMatrix {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        linalg::mat_vec(&self.entries, v)
    }

    pub fn pair(&self, x: &[i64], y: &[i64]) -> i64 {
        linalg::bilinear(&self.entries, x, y)
    }

    pub fn kernel(&self) -> Result<IntMatrix> {
        linalg::integer_kernel(&self.entries, self.dim())
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.entries)
    }

    pub fn determinant(&self) -> BigInt {
        linalg::determinant(&self.entries)
    }

    pub fn negated(&self) -> SkewForm {
        SkewForm {
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(|x| -x).collect())
                .collect(),
        }
    }

    /// `M S Mᵗ`.
    pub fn congruent(&self, m: &[Vec<i64>]) -> SkewForm {
        let ms = linalg::mat_mul(m, &self.entries);
        SkewForm {
            entries: linalg::mat_mul(&ms, &linalg::transpose(m)),
        }
    }
}

/// `L̄₀`: entry `(i, j)` is `(β_i, β_j)` for `i < j`.
pub fn build_l0(rs: &RootSystem, grid: &BetaGrid) -> SkewForm {
    let r = grid.len();
    let mut m = linalg::zeros(r, r);
    for i in 0..r {
        for j in i + 1..r {
            let v = rs.root_inner(&grid.betas[i], &grid.betas[j]);
            m[i][j] = v;
            m[j][i] = -v;
        }
    }
    SkewForm { entries: m }
}

/// `A[n][m] = 1` iff positions `n` and `m` carry the same letter and `m ≤ n`.
pub fn change_of_basis(grid: &BetaGrid) -> IntMatrix {
    let r = grid.len();
    let mut a = linalg::zeros(r, r);
    for n in 0..r {
        for m in 0..=n {
            if grid.word[n] == grid.word[m] {
                a[n][m] = 1;
            }
        }
    }
    a
}

pub fn build_a_and_lbar(grid: &BetaGrid, l0: &SkewForm) -> (IntMatrix, SkewForm) {
    let a = change_of_basis(grid);
    let lbar = l0.congruent(&a);
    (a, lbar)
}

/// z-exponent of the product of minors described by `m`.
pub fn minors_to_z(a: &[Vec<i64>], m: &[i64]) -> Vec<i64> {
    let r = m.len();
    let mut out = vec![0; r];
    for (n, &c) in m.iter().enumerate() {
        if c == 0 {
            continue;
        }
        for k in 0..r {
            out[k] += c * a[n][k];
        }
    }
    out
}

/// z-exponent of `C̄_s = z_{s,1} ⋯ z_{s,s_𝔯}`.
pub fn c_bar_exponent(grid: &BetaGrid, s: usize) -> Vec<i64> {
    let mut v = vec![0; grid.len()];
    for &p in &grid.occurrences[s] {
        v[p] = 1;
    }
    v
}

/// z-exponent of `M̄↓_{s,t}`; `t = 0` gives the empty product.
pub fn minor_exponent_vector(grid: &BetaGrid, s: usize, t: usize) -> Vec<i64> {
    let mut v = vec![0; grid.len()];
    for &p in grid.occurrences[s].iter().take(t) {
        v[p] = 1;
    }
    v
}

/// `F̄(s, t)` in M-coordinates.
pub fn f_bar(rs: &RootSystem, grid: &BetaGrid, s: usize, t: usize) -> Vec<i64> {
    let mut m = vec![0; grid.len()];
    let here = grid.pos(s, t);
    m[here] += 1;
    if t > 1 {
        m[grid.pos(s, t - 1)] += 1;
    }
    for j in (0..grid.rank()).filter(|&j| j != s) {
        let ajs = rs.cartan[j][s];
        if ajs >= 0 {
            continue;
        }
        let p = grid.occurrences_before(j, here);
        if p > 0 {
            m[grid.pos(j, p)] += ajs;
        }
    }
    m
}

/// The columns `B̄_{s,t} = F̄(s,t) − F̄(s,t+1)` for `t < s_𝔯`, in grid order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompatiblePair {
    /// `(s, t)` label of each column, 0-based `s`, 1-based `t`.
    pub labels: Vec<(usize, usize)>,
    /// Columns in M-coordinates.
    pub columns: Vec<Vec<i64>>,
    /// `2 d_s` for each column.
    pub targets: Vec<i64>,
}

pub fn compatible_pair(rs: &RootSystem, grid: &BetaGrid, lbar: &SkewForm) -> Result<CompatiblePair> {
    let mut labels = Vec::new();
    let mut columns = Vec::new();
    let mut targets = Vec::new();
    for &(s, t) in &grid.grid {
        if t >= grid.count(s) {
            continue;
        }
        let col: Vec<i64> = f_bar(rs, grid, s, t)
            .iter()
            .zip(f_bar(rs, grid, s, t + 1))
            .map(|(x, y)| x - y)
            .collect();
        let target = 2 * rs.d(s);
        let image = lbar.apply(&col);
        let here = grid.pos(s, t);
        let ok = image
            .iter()
            .enumerate()
            .all(|(k, &v)| v == if k == here { target } else { 0 });
        if !ok {
            return Err(Error::internal(format!(
                "L̄·B̄ contract failed at (s,t) = ({}, {}): got {:?}",
                s + 1,
                t,
                image
            )));
        }
        labels.push((s, t));
        columns.push(col);
        targets.push(target);
    }
    Ok(CompatiblePair {
        labels,
        columns,
        targets,
    })
}

/// The block form `[[2D, Y], [0, Z]]` of `L̄ Q`, where `Q` stacks the `B̄` columns
/// and the unit vectors at the first occurrence of each letter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnReduction {
    pub r: usize,
    pub r0: usize,
    pub y: IntMatrix,
    pub z: IntMatrix,
    pub det_l: BigInt,
    pub det_z: BigInt,
    /// `∏ 2 d_s` over positions that are not the last occurrence of their letter.
    pub diag_factor: BigInt,
    /// `det L̄ = sign · diag_factor · det Z`; `None` when both sides vanish.
    pub sign: Option<i8>,
}

impl ColumnReduction {
    pub fn center_trivial(&self) -> bool {
        !self.det_z.is_zero()
    }

    pub fn power_of_two(&self) -> BigInt {
        BigInt::from(2u8).pow((self.r - self.r0) as u32)
    }
}

pub fn column_reduce(rs: &RootSystem, grid: &BetaGrid, lbar: &SkewForm) -> Result<ColumnReduction> {
    let r = grid.len();
    let pair = compatible_pair(rs, grid, lbar)?;
    let support = grid.support();
    let r0 = support.len();
    let initial: Vec<usize> = support.iter().map(|&s| grid.pos(s, 1)).collect();
    let terminal: Vec<usize> = support.iter().map(|&s| grid.pos(s, grid.count(s))).collect();
    let non_terminal: Vec<usize> = pair.labels.iter().map(|&(s, t)| grid.pos(s, t)).collect();

    let mut q = linalg::zeros(r, r);
    for (k, col) in pair.columns.iter().enumerate() {
        for i in 0..r {
            q[i][k] = col[i];
        }
    }
    for (k, &p) in initial.iter().enumerate() {
        q[p][pair.columns.len() + k] = 1;
    }
    let det_q = linalg::determinant(&q);
    if det_q.abs() != BigInt::one() {
        return Err(Error::internal(format!("reduction matrix has determinant {det_q}")));
    }

    let lq = linalg::mat_mul(lbar.entries(), &q);
    let nb = pair.columns.len();
    for k in 0..nb {
        for (kk, &pp) in non_terminal.iter().enumerate() {
            let want = if k == kk { pair.targets[k] } else { 0 };
            if lq[pp][k] != want {
                return Err(Error::internal("column reduction lost its diagonal block"));
            }
        }
    }
    for &p in &terminal {
        if lq[p][..nb].iter().any(|&x| x != 0) {
            return Err(Error::internal("column reduction lost its zero block"));
        }
    }
    let y: IntMatrix = non_terminal
        .iter()
        .map(|&p| lq[p][nb..].to_vec())
        .collect();
    let z: IntMatrix = terminal.iter().map(|&p| lq[p][nb..].to_vec()).collect();

    let det_l = lbar.determinant();
    let det_z = linalg::determinant(&z);
    let diag_factor: BigInt = pair
        .targets
        .iter()
        .fold(BigInt::one(), |acc, &t| acc * BigInt::from(t));
    let rhs = &diag_factor * &det_z;
    let sign = if rhs.is_zero() {
        if !det_l.is_zero() {
            return Err(Error::internal("det L̄ ≠ 0 but det Z = 0"));
        }
        None
    } else if det_l == rhs {
        Some(1)
    } else if det_l == -rhs {
        Some(-1)
    } else {
        return Err(Error::internal(format!(
            "det L̄ = {det_l} is not ±{diag_factor}·{det_z}"
        )));
    };
    Ok(ColumnReduction {
        r,
        r0,
        y,
        z,
        det_l,
        det_z,
        diag_factor,
        sign,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::CartanType;
    use crate::weyl::{elements_up_to_length, longest_element};
    use proptest::prelude::*;

    fn setup(t: &str, word: &[usize]) -> (RootSystem, BetaGrid) {
        let rs = RootSystem::new(t.parse().unwrap()).unwrap();
        let g = BetaGrid::new(&rs, word).unwrap();
        (rs, g)
    }

    #[test]
    fn l0_examples() {
        let (rs, g) = setup("A2", &[0, 1, 0]);
        assert_eq!(
            build_l0(&rs, &g).entries(),
            &vec![vec![0, 1, -1], vec![-1, 0, 1], vec![1, -1, 0]]
        );
        let (rs, g) = setup("A2", &[1]);
        assert_eq!(build_l0(&rs, &g).entries(), &vec![vec![0]]);
        let (rs, g) = setup("A2", &[0, 1]);
        assert_eq!(build_l0(&rs, &g).entries(), &vec![vec![0, 1], vec![-1, 0]]);
    }

    #[test]
    fn change_of_basis_examples() {
        let (rs, g) = setup("A2", &[0, 1, 0]);
        let a = change_of_basis(&g);
        assert_eq!(a, vec![vec![1, 0, 0], vec![0, 1, 0], vec![1, 0, 1]]);
        let (_, g2) = setup("A3", &[0, 1, 2]);
        assert_eq!(change_of_basis(&g2), linalg::identity(3));
        let (_, lbar) = build_a_and_lbar(&g, &build_l0(&rs, &g));
        assert!(SkewForm::new(lbar.entries().clone()).is_ok());
    }

    #[test]
    fn kernel_examples() {
        let (rs, g) = setup("A2", &[0, 1, 0]);
        assert_eq!(build_l0(&rs, &g).kernel().unwrap(), vec![vec![1, 1, 1]]);
        assert_eq!(SkewForm::zero(3).kernel().unwrap(), linalg::identity(3));
    }

    #[test]
    fn compatible_pair_examples() {
        let (rs, g) = setup("A2", &[0, 1, 0]);
        let (_, lbar) = build_a_and_lbar(&g, &build_l0(&rs, &g));
        let p = compatible_pair(&rs, &g, &lbar).unwrap();
        assert_eq!(p.labels, vec![(0, 1)]);
        assert_eq!(p.targets, vec![2]);
        let (rs, g) = setup("A3", &[0, 1, 2]);
        let (_, lbar) = build_a_and_lbar(&g, &build_l0(&rs, &g));
        assert!(compatible_pair(&rs, &g, &lbar).unwrap().columns.is_empty());
        let (rs, g) = setup("B2", &[0, 1, 0, 1]);
        let (_, lbar) = build_a_and_lbar(&g, &build_l0(&rs, &g));
        let p = compatible_pair(&rs, &g, &lbar).unwrap();
        assert_eq!(p.targets, vec![4, 2]);
    }

    #[test]
    fn column_reduce_examples() {
        let (rs, g) = setup("A2", &[0, 1]);
        let (_, lbar) = build_a_and_lbar(&g, &build_l0(&rs, &g));
        let c = column_reduce(&rs, &g, &lbar).unwrap();
        assert!(c.center_trivial());
        assert_eq!(c.r, c.r0);
        assert_eq!(c.det_l, BigInt::one());

        let (rs, g) = setup("A2", &[0]);
        let (_, lbar) = build_a_and_lbar(&g, &build_l0(&rs, &g));
        let c = column_reduce(&rs, &g, &lbar).unwrap();
        assert_eq!(c.z, vec![vec![0]]);
        assert!(!c.center_trivial());

        let (rs, g) = setup("A2", &[0, 1, 0]);
        let (_, lbar) = build_a_and_lbar(&g, &build_l0(&rs, &g));
        let c = column_reduce(&rs, &g, &lbar).unwrap();
        assert!(c.det_l.is_zero());
        assert_eq!(c.sign, None);
    }

    #[test]
    fn contracts_hold_across_small_types() {
        for ct in CartanType::all_up_to(3) {
            let rs = RootSystem::new(ct).unwrap();
            for (_, word) in elements_up_to_length(&rs, 6) {
                let g = BetaGrid::new(&rs, &word).unwrap();
                let l0 = build_l0(&rs, &g);
                let (_, lbar) = build_a_and_lbar(&g, &l0);
                let c = column_reduce(&rs, &g, &lbar).unwrap();
                let trivial = l0.kernel().unwrap().is_empty();
                assert_eq!(c.center_trivial(), trivial, "{ct} {word:?}");
            }
        }
        let rs = RootSystem::new("F4".parse().unwrap()).unwrap();
        let word = longest_element(&rs).reduced_word(&rs);
        let g = BetaGrid::new(&rs, &word).unwrap();
        let (_, lbar) = build_a_and_lbar(&g, &build_l0(&rs, &g));
        column_reduce(&rs, &g, &lbar).unwrap();
    }

    proptest! {
        #[test]
        fn lbar_is_l0_in_minor_coordinates(
            x in proptest::collection::vec(-3i64..=3, 6),
            y in proptest::collection::vec(-3i64..=3, 6),
        ) {
            let (rs, g) = setup("B3", &[2, 1, 2, 0, 1, 2]);
            let l0 = build_l0(&rs, &g);
            let (a, lbar) = build_a_and_lbar(&g, &l0);
            prop_assert_eq!(lbar.pair(&x, &y), l0.pair(&minors_to_z(&a, &x), &minors_to_z(&a, &y)));
        }
    }
}
