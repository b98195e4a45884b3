//! Centers as lattice kernels: `ker(1+ω)` for the quantized nilpotent
//! algebras, plus the covariant elements, the minor exponent of two
//! generalized minors and the K-twisted exponent `R`.

mod schubert;
mod w_algebra;

pub use schubert::{double_schubert_center, schubert_window_algebra, SchubertWindow};
pub use w_algebra::{
    center_w, delta_lattice, greedy_decomposition, validate_decomposition, DecompositionSpec,
    DeltaLattice, Validation,
};

use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::cartan::RootSystem;
use crate::error::{Error, Result};
use crate::lattice_forms::{self, SkewForm};
use crate::linalg;
use crate::twisted_laurent::TwistedAlgebra;
use crate::weyl::{BetaGrid, WeylElement};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CenterGenerator {
    /// Coefficients over the fundamental weights, one entry per simple index.
    pub n: Vec<i64>,
    pub rendered: String,
    /// Exponent vector of the generator in the associated twisted Laurent algebra.
    pub z_exponents: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CenterDescription {
    pub dimension: usize,
    pub generators: Vec<CenterGenerator>,
}

impl CenterDescription {
    pub fn rendered(&self) -> Vec<&str> {
        self.generators.iter().map(|g| g.rendered.as_str()).collect()
    }

    pub fn z_lattice(&self) -> Vec<Vec<i64>> {
        self.generators.iter().map(|g| g.z_exponents.clone()).collect()
    }
}

/// Renders `∏ factor(i)^{n_i}` such as `C1*C3^2`; the empty product is `1`.
pub(crate) fn render_product(n: &[i64], factor: impl Fn(usize) -> String) -> String {
    let parts: Vec<String> = n
        .iter()
        .enumerate()
        .filter(|(_, &k)| k != 0)
        .map(|(i, &k)| {
            if k == 1 {
                factor(i)
            } else {
                format!("{}^{}", factor(i), k)
            }
        })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

/// Integer kernel of `m[rows][cols]`, returned as full-length vectors supported on `cols`.
pub(crate) fn kernel_on(
    m: &[Vec<i64>],
    rows: &[usize],
    cols: &[usize],
    full_len: usize,
) -> Result<Vec<Vec<i64>>> {
    let sub: Vec<Vec<i64>> = rows
        .iter()
        .map(|&i| cols.iter().map(|&j| m[i][j]).collect())
        .collect();
    let ker = linalg::integer_kernel(&sub, cols.len())?;
    Ok(ker
        .into_iter()
        .map(|v| {
            let mut full = vec![0; full_len];
            for (&j, x) in cols.iter().zip(v) {
                full[j] = x;
            }
            full
        })
        .collect())
}

/// Weight matrix of `1 + w` (or `1 − w` with `sign = -1`).
pub(crate) fn one_plus(w: &WeylElement, sign: i64) -> Vec<Vec<i64>> {
    let mut m: Vec<Vec<i64>> = w
        .weight_matrix()
        .iter()
        .map(|row| row.iter().map(|x| sign * x).collect())
        .collect();
    for (i, row) in m.iter_mut().enumerate() {
        row[i] += 1;
    }
    m
}

/// z-exponent of `∏_s C̄_s^{n_s}`.
pub(crate) fn c_bar_product(grid: &BetaGrid, n: &[i64]) -> Vec<i64> {
    let mut z = vec![0; grid.len()];
    for (s, &k) in n.iter().enumerate() {
        for &p in &grid.occurrences[s] {
            z[p] += k;
        }
    }
    z
}

/// Center of the quasi-polynomial algebra of a reduced word: `ker(1+ω)` on `S_𝔯`.
pub fn center_nilpotent(rs: &RootSystem, word: &[usize]) -> Result<CenterDescription> {
    let grid = BetaGrid::new(rs, word)?;
    center_from_grid(rs, &grid)
}

pub fn center_from_grid(rs: &RootSystem, grid: &BetaGrid) -> Result<CenterDescription> {
    let support = grid.support();
    let m = one_plus(grid.element(), 1);
    let kernel = kernel_on(&m, &support, &support, rs.rank())?;
    let l0 = lattice_forms::build_l0(rs, grid);
    let generators = kernel
        .into_iter()
        .map(|n| {
            let z = c_bar_product(grid, &n);
            if !linalg::is_zero_vec(&l0.apply(&z)) {
                return Err(Error::internal(format!(
                    "center generator {n:?} is not in ker L̄₀"
                )));
            }
            Ok(CenterGenerator {
                rendered: render_product(&n, |s| format!("C{}", s + 1)),
                n,
                z_exponents: z,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CenterDescription {
        dimension: generators.len(),
        generators,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Covariant {
    /// 0-based simple index.
    pub s: usize,
    /// `(1−ω)Λ_s` in fundamental-weight coordinates.
    pub weight: Vec<i64>,
    /// The same weight in simple-root coordinates, `β_{s,1} + … + β_{s,s_𝔯}`.
    pub root_coords: Vec<i64>,
    pub z_exponents: Vec<i64>,
    /// Whether every generator `z_{a,b}` passes `C̄_s` with exponent `−(β_{a,b}, (1+ω)Λ_s)`.
    pub certified: bool,
}

pub fn covariant_data(rs: &RootSystem, word: &[usize]) -> Result<Vec<Covariant>> {
    let grid = BetaGrid::new(rs, word)?;
    let omega = grid.element();
    let alg = TwistedAlgebra::new(lattice_forms::build_l0(rs, &grid));
    let mut out = Vec::new();
    for s in grid.support() {
        let ls = rs.fundamental_weight(s);
        let image = omega.apply_weight(&ls);
        let weight: Vec<i64> = ls.iter().zip(&image).map(|(a, b)| a - b).collect();
        let plus: Vec<i64> = ls.iter().zip(&image).map(|(a, b)| a + b).collect();
        let mut root_coords = vec![0; rs.rank()];
        for &p in &grid.occurrences[s] {
            for (x, y) in root_coords.iter_mut().zip(&grid.betas[p]) {
                *x += y;
            }
        }
        if rs.root_to_weight(&root_coords) != weight {
            return Err(Error::internal("β-sum of a covariant differs from (1−ω)Λ_s"));
        }
        let z = lattice_forms::c_bar_exponent(&grid, s);
        let certified = (0..grid.len()).all(|p| {
            alg.engine_commutation(&alg.generator(p), &z)
                == -rs.weight_root_inner(&plus, &grid.betas[p])
        });
        out.push(Covariant {
            s,
            weight,
            root_coords,
            z_exponents: z,
            certified,
        });
    }
    Ok(out)
}

fn to_int(x: BigRational) -> Result<i64> {
    if !x.is_integer() {
        return Err(Error::internal(format!("exponent {x} is not an integer")));
    }
    x.to_integer()
        .to_i64()
        .ok_or_else(|| Error::internal("exponent exceeds 64-bit range"))
}

/// `(sλ | μ) − (λ | tμ)`, the exponent exchanging `Δ_{s'sλ,t'λ}` and `Δ_{s'μ,t'tμ}`.
#[allow(clippy::too_many_arguments)]
pub fn minor_exponent(
    rs: &RootSystem,
    lambda: &[i64],
    mu: &[i64],
    s: &WeylElement,
    s_prime: &WeylElement,
    t: &WeylElement,
    t_prime: &WeylElement,
) -> Result<i64> {
    if lambda.iter().chain(mu).any(|&x| x < 0) {
        return Err(Error::input("λ and μ must be dominant"));
    }
    if s_prime.mul(s).length(rs) != s_prime.length(rs) + s.length(rs) {
        return Err(Error::input("ℓ(s's) ≠ ℓ(s') + ℓ(s)"));
    }
    if t_prime.mul(t).length(rs) != t_prime.length(rs) + t.length(rs) {
        return Err(Error::input("ℓ(t't) ≠ ℓ(t') + ℓ(t)"));
    }
    let v = rs.weight_inner(&s.apply_weight(lambda), mu) - rs.weight_inner(lambda, &t.apply_weight(mu));
    to_int(v)
}

/// `((1−ω_{s,t})Λ_s, (1+ω_{c,d})Λ_c)` for grid positions `p ≤ q`.
pub fn lec_exponent(rs: &RootSystem, grid: &BetaGrid, p: usize, q: usize) -> Result<i64> {
    if p > q || q >= grid.len() {
        return Err(Error::input("lec exponent needs (s,t) ≤ (c,d)"));
    }
    let (s, t) = grid.grid[p];
    let (c, d) = grid.grid[q];
    let mut pst = vec![0; rs.rank()];
    for &k in grid.occurrences[s].iter().take(t) {
        for (x, y) in pst.iter_mut().zip(&grid.betas[k]) {
            *x += y;
        }
    }
    let lc = rs.fundamental_weight(c);
    let plus: Vec<i64> = lc
        .iter()
        .zip(grid.omega_st(c, d).apply_weight(&lc))
        .map(|(a, b)| a + b)
        .collect();
    Ok(rs.weight_root_inner(&plus, &pst))
}

fn r_general(rs: &RootSystem, grid: &BetaGrid, l0: &SkewForm, a: usize, b: usize) -> i64 {
    let mu = |p: usize| {
        let (s, t) = grid.grid[p];
        grid.omega_st(s, t).apply_weight(&rs.fundamental_weight(s))
    };
    l0.get(a, b) + rs.weight_root_inner(&mu(a), &grid.betas[b])
        - rs.weight_root_inner(&mu(b), &grid.betas[a])
}

/// The exponent `R` in `w_{s,t} w_{c,d} = q^R w_{c,d} w_{s,t}` for positions `p < q`,
/// where `w_{s,t} = z_{s,t} K^{ω_{s,t}Λ_s}`.
pub fn r_exponent(rs: &RootSystem, grid: &BetaGrid, p: usize, q: usize) -> Result<i64> {
    if p >= q || q >= grid.len() {
        return Err(Error::input("R exponent needs (s,t) < (c,d) in grid order"));
    }
    let (s, t) = grid.grid[p];
    let (c, d) = grid.grid[q];
    let sum = |letter: usize, upto: usize| {
        let mut v = vec![0; rs.rank()];
        for &k in grid.occurrences[letter].iter().take(upto) {
            for (x, y) in v.iter_mut().zip(&grid.betas[k]) {
                *x += y;
            }
        }
        v
    };
    let (bst, bcd) = (&grid.betas[p], &grid.betas[q]);
    Ok(rs.root_inner(bst, bcd)
        + rs.weight_root_inner(&rs.fundamental_weight(s), bcd)
        - rs.weight_root_inner(&rs.fundamental_weight(c), bst)
        - rs.root_inner(&sum(s, t), bcd)
        + rs.root_inner(&sum(c, d), bst))
}

/// The skew form of all `w_{s,t}`, filled in by antisymmetry from [`r_exponent`].
pub fn r_form(rs: &RootSystem, grid: &BetaGrid) -> Result<SkewForm> {
    let r = grid.len();
    let l0 = lattice_forms::build_l0(rs, grid);
    let mut m = linalg::zeros(r, r);
    for a in 0..r {
        for b in a + 1..r {
            let v = r_exponent(rs, grid, a, b)?;
            if v != r_general(rs, grid, &l0, a, b) || -v != r_general(rs, grid, &l0, b, a) {
                return Err(Error::internal("R exponent is not antisymmetric"));
            }
            m[a][b] = v;
            m[b][a] = -v;
        }
    }
    SkewForm::new(m)
}

/// Engine on `z_1..z_r, k_1..k_R` with `k_j z_i = q^{(Λ_j, β_i)} z_i k_j`.
pub fn k_twisted_algebra(rs: &RootSystem, grid: &BetaGrid) -> TwistedAlgebra {
    let r = grid.len();
    let n = rs.rank();
    let l0 = lattice_forms::build_l0(rs, grid);
    let mut m = linalg::zeros(r + n, r + n);
    for i in 0..r {
        for j in 0..r {
            m[i][j] = l0.get(i, j);
        }
        for k in 0..n {
            let v = rs.d(k) * grid.betas[i][k];
            m[r + k][i] = v;
            m[i][r + k] = -v;
        }
    }
    TwistedAlgebra::new(SkewForm::new(m).expect("constructed skew"))
}

/// Exponent vector of `w_{s,t}` in [`k_twisted_algebra`].
pub fn w_generator(rs: &RootSystem, grid: &BetaGrid, p: usize) -> Vec<i64> {
    let (s, t) = grid.grid[p];
    let mut v = vec![0; grid.len()];
    v[p] = 1;
    v.extend(grid.omega_st(s, t).apply_weight(&rs.fundamental_weight(s)));
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::CartanType;
    use crate::weyl::{elements_up_to_length, longest_element, matrix_algebra_word};
    use proptest::prelude::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap()).unwrap()
    }

    fn w0_center(t: &str) -> CenterDescription {
        let r = rs(t);
        let word = longest_element(&r).reduced_word(&r);
        center_nilpotent(&r, &word).unwrap()
    }

    #[test]
    fn longest_element_examples() {
        assert_eq!(w0_center("A3").rendered(), vec!["C1*C3", "C2"]);
        assert_eq!(w0_center("D5").rendered(), vec!["C1", "C2", "C3", "C4*C5"]);
        assert_eq!(w0_center("B2").rendered(), vec!["C1", "C2"]);
        assert_eq!(w0_center("E6").rendered(), vec!["C1*C6", "C2", "C3*C5", "C4"]);
    }

    #[test]
    fn matrix_algebra_example() {
        let (n, word) = matrix_algebra_word(3, 3).unwrap();
        let r = RootSystem::build(crate::cartan::Family::A, n).unwrap();
        assert_eq!(center_nilpotent(&r, &word).unwrap().dimension, 3);
    }

    #[test]
    fn non_reduced_word_rejected() {
        assert!(center_nilpotent(&rs("A2"), &[0, 0]).is_err());
    }

    #[test]
    fn center_depends_only_on_the_element() {
        let r = rs("A3");
        let a = center_nilpotent(&r, &[0, 1, 0, 2, 1, 0]).unwrap();
        let b = center_nilpotent(&r, &[2, 1, 2, 0, 1, 2]).unwrap();
        assert_eq!(a.rendered(), b.rendered());
    }

    #[test]
    fn covariant_examples() {
        let r = rs("A2");
        let cov = covariant_data(&r, &[0, 1, 0]).unwrap();
        assert_eq!(cov[0].weight, vec![1, 1]);
        assert_eq!(cov[0].root_coords, vec![1, 1]);
        assert_eq!(cov[0].z_exponents, vec![1, 0, 1]);
        let cov = covariant_data(&r, &[1]).unwrap();
        assert_eq!(cov.len(), 1);
        assert_eq!(cov[0].s, 1);
        for ct in CartanType::all_up_to(3) {
            let r = RootSystem::new(ct).unwrap();
            for (_, word) in elements_up_to_length(&r, 5) {
                assert!(covariant_data(&r, &word).unwrap().iter().all(|c| c.certified));
            }
        }
    }

    #[test]
    fn minor_exponent_examples() {
        let r = rs("A1");
        let e = WeylElement::identity(1);
        let s1 = WeylElement::simple(&r, 0);
        assert_eq!(minor_exponent(&r, &[1], &[1], &s1, &e, &e, &e).unwrap(), -1);
        assert_eq!(minor_exponent(&r, &[2], &[2], &s1, &e, &s1, &e).unwrap(), 0);
        assert!(minor_exponent(&r, &[1], &[1], &s1, &s1, &e, &e).is_err());
        assert!(minor_exponent(&r, &[-1], &[1], &e, &e, &e, &e).is_err());
    }

    #[test]
    fn lec_is_a_difference_of_minor_exponents() {
        for t in ["A3", "B3", "G2"] {
            let r = rs(t);
            let w0 = longest_element(&r);
            let g = BetaGrid::new(&r, &w0.reduced_word(&r)).unwrap();
            let e = WeylElement::identity(r.rank());
            for p in 0..g.len() {
                for q in p..g.len() {
                    let (s, ti) = g.grid[p];
                    let (c, d) = g.grid[q];
                    let wst = g.omega_st(s, ti);
                    let wcd = g.omega_st(c, d);
                    let x = wst.inverse(&r).mul(wcd);
                    let (ls, lc) = (r.fundamental_weight(s), r.fundamental_weight(c));
                    let first = minor_exponent(&r, &ls, &lc, &e, &e, &x, wst).unwrap();
                    let second = minor_exponent(&r, &ls, &lc, wst, &e, wcd, &e).unwrap();
                    assert_eq!(lec_exponent(&r, &g, p, q).unwrap(), first - second);
                }
            }
        }
    }

    #[test]
    fn r_exponent_examples() {
        let r = rs("A2");
        let g = BetaGrid::new(&r, &[0, 1, 0]).unwrap();
        // (α1, α1+α2) + (Λ1, α1+α2) − (Λ2, α1) − (α1, α1+α2) + (α1+α2, α1) = 1 + 1 − 0 − 1 + 1.
        assert_eq!(r_exponent(&r, &g, 0, 1).unwrap(), 2);
        assert!(r_exponent(&r, &g, 1, 1).is_err());
        assert!(r_exponent(&r, &g, 2, 1).is_err());
        r_form(&r, &g).unwrap();
    }

    #[test]
    fn r_exponent_matches_k_twisted_engine() {
        for ct in CartanType::all_up_to(3) {
            let r = RootSystem::new(ct).unwrap();
            let word = longest_element(&r).reduced_word(&r);
            let g = BetaGrid::new(&r, &word).unwrap();
            let alg = k_twisted_algebra(&r, &g);
            let form = r_form(&r, &g).unwrap();
            for p in 0..g.len() {
                for q in 0..g.len() {
                    let e = alg.engine_commutation(&w_generator(&r, &g, p), &w_generator(&r, &g, q));
                    assert_eq!(e, form.get(p, q), "{ct} {p} {q}");
                }
            }
        }
    }

    #[test]
    fn rendering() {
        assert_eq!(render_product(&[1, 0, 1], |i| format!("C{}", i + 1)), "C1*C3");
        assert_eq!(render_product(&[0, -1, 2], |i| format!("C{}", i + 1)), "C2^-1*C3^2");
        assert_eq!(render_product(&[0, 0], |i| format!("C{}", i + 1)), "1");
    }

    proptest! {
        #[test]
        fn generators_are_central_in_the_engine(idx in 0usize..8, seed in proptest::collection::vec(0usize..4, 0..9)) {
            let types = CartanType::all_up_to(3);
            let ct = types[idx % types.len()];
            let r = RootSystem::new(ct).unwrap();
            let raw: Vec<usize> = seed.iter().map(|&i| i % ct.rank).collect();
            let word = WeylElement::from_word(&r, &raw).unwrap().reduced_word(&r);
            let g = BetaGrid::new(&r, &word).unwrap();
            let alg = TwistedAlgebra::new(lattice_forms::build_l0(&r, &g));
            let c = center_from_grid(&r, &g).unwrap();
            for gen in &c.generators {
                prop_assert!(alg.engine_is_central(&gen.z_exponents, 0));
            }
        }
    }
}
