//! Specialization at an `m`-th root of unity: skew normal forms, the image
//! cardinality `h`, PI degrees and the divisibility facts tied to `det Z`.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::cartan::{Family, RootSystem};
use crate::error::{Error, Result};
use crate::lattice_forms::{self, SkewForm};
use crate::linalg::{self, IntMatrix};
use crate::twisted_laurent::TwistedAlgebra;
use crate::weyl::BetaGrid;

pub const IMAGE_RANK_GUARD: usize = 6;
pub const IMAGE_MODULUS_GUARD: u64 = 16;

/// `U L Uᵗ = diag([[0,d₁],[−d₁,0]], …, 0)` with `d₁ | d₂ | …`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SkewNormalForm {
    pub u: IntMatrix,
    pub divisors: Vec<i64>,
    pub nullity: usize,
}

impl SkewNormalForm {
    pub fn block_matrix(&self) -> IntMatrix {
        let n = self.u.len();
        let mut m = linalg::zeros(n, n);
        for (k, &d) in self.divisors.iter().enumerate() {
            m[2 * k][2 * k + 1] = d;
            m[2 * k + 1][2 * k] = -d;
        }
        m
    }
}

struct Congruence {
    a: Vec<Vec<i128>>,
    u: Vec<Vec<i128>>,
}

impl Congruence {
    fn swap(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.a.swap(i, j);
        for row in self.a.iter_mut() {
            row.swap(i, j);
        }
        self.u.swap(i, j);
    }

    /// `e_i ← e_i + k e_j` applied on both sides.
    fn add(&mut self, i: usize, j: usize, k: i128) -> Result<()> {
        if k == 0 {
            return Ok(());
        }
        let overflow = || Error::internal("skew normal form overflowed 128-bit arithmetic");
        let rj = self.a[j].clone();
        for (x, y) in self.a[i].iter_mut().zip(&rj) {
            *x = y.checked_mul(k).and_then(|t| x.checked_add(t)).ok_or_else(overflow)?;
        }
        for row in self.a.iter_mut() {
            let t = row[j].checked_mul(k).ok_or_else(overflow)?;
            row[i] = row[i].checked_add(t).ok_or_else(overflow)?;
        }
        let uj = self.u[j].clone();
        for (x, y) in self.u[i].iter_mut().zip(&uj) {
            *x = y.checked_mul(k).and_then(|t| x.checked_add(t)).ok_or_else(overflow)?;
        }
        Ok(())
    }
}

pub fn skew_normal_form(l: &SkewForm) -> Result<SkewNormalForm> {
    let n = l.dim();
    let mut st = Congruence {
        a: l.entries()
            .iter()
            .map(|r| r.iter().map(|&x| x as i128).collect())
            .collect(),
        u: (0..n)
            .map(|i| (0..n).map(|j| (i == j) as i128).collect())
            .collect(),
    };
    let mut divisors = Vec::new();
    let mut k = 0;
    'outer: while k + 1 < n {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in k..n {
                for j in i + 1..n {
                    let v = st.a[i][j];
                    if v != 0 && best.is_none_or(|(bi, bj)| v.abs() < st.a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((i, j)) = best else { break 'outer };
            st.swap(k, i);
            let j = if j == k { i } else { j };
            st.swap(k + 1, j);
            if st.a[k][k + 1] < 0 {
                st.swap(k, k + 1);
            }
            let d = st.a[k][k + 1];
            let mut clean = true;
            for l in k + 2..n {
                let q = st.a[k][l].div_euclid(d);
                st.add(l, k + 1, -q)?;
                let q = st.a[k + 1][l].div_euclid(d);
                st.add(l, k, q)?;
                clean &= st.a[k][l] == 0 && st.a[k + 1][l] == 0;
            }
            if !clean {
                continue;
            }
            let bad = (k + 2..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| st.a[i][j] % d != 0);
            match bad {
                // Pulls a non-multiple of d into row k; the next pass finds a smaller pivot.
                Some((i, _)) => st.add(k, i, 1)?,
                None => break,
            }
        }
        divisors.push(st.a[k][k + 1]);
        k += 2;
    }
    let to64 = |x: i128| i64::try_from(x).map_err(|_| Error::internal("normal form entry exceeds 64 bits"));
    let u: IntMatrix = st
        .u
        .iter()
        .map(|r| r.iter().map(|&x| to64(x)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let divisors = divisors.into_iter().map(to64).collect::<Result<Vec<_>>>()?;
    let form = SkewNormalForm {
        nullity: n - 2 * divisors.len(),
        u,
        divisors,
    };
    if l.congruent(&form.u).entries() != &form.block_matrix() {
        return Err(Error::internal("U L Uᵗ differs from the block form"));
    }
    if linalg::determinant(&form.u).abs() != BigInt::one() {
        return Err(Error::internal("normal form transformation is not unimodular"));
    }
    if form.divisors.windows(2).any(|w| w[1] % w[0] != 0) {
        return Err(Error::internal("normal form divisors do not form a chain"));
    }
    Ok(form)
}

#[derive(Debug, Clone, Serialize)]
pub struct PIDegreeReport {
    pub m: u64,
    pub divisors: Vec<i64>,
    /// `m / gcd(d_j, m)` per block.
    pub contributions: Vec<u64>,
    #[serde(serialize_with = "crate::bigjson::serialize")]
    pub h: BigInt,
    #[serde(serialize_with = "crate::bigjson::serialize")]
    pub pi_degree: BigInt,
    pub warnings: Vec<String>,
}

pub fn pi_degree(l: &SkewForm, m: u64) -> Result<PIDegreeReport> {
    if m == 0 {
        return Err(Error::input("m must be a positive integer"));
    }
    let nf = skew_normal_form(l)?;
    let contributions: Vec<u64> = nf
        .divisors
        .iter()
        .map(|&d| m / (d.unsigned_abs()).gcd(&m))
        .collect();
    let pi: BigInt = contributions.iter().map(|&c| BigInt::from(c)).product();
    let mut warnings = Vec::new();
    if m > 1 && m.is_multiple_of(2) {
        warnings.push(format!("m = {m} is even"));
    }
    Ok(PIDegreeReport {
        m,
        divisors: nf.divisors,
        contributions,
        h: &pi * &pi,
        pi_degree: pi,
        warnings,
    })
}

/// PI degree of the quasi-polynomial algebra of a reduced word.
pub fn pi_degree_for_word(rs: &RootSystem, word: &[usize], m: u64) -> Result<PIDegreeReport> {
    let grid = BetaGrid::new(rs, word)?;
    let mut report = pi_degree(&lattice_forms::build_l0(rs, &grid), m)?;
    if rs.ctype.family == Family::G && m.is_multiple_of(3) {
        report.warnings.push(format!("m = {m} is divisible by 3 in type G2"));
    }
    Ok(report)
}

/// Cardinality of the image of `x ↦ Lx` on `(ℤ/m)^r`, by enumeration.
pub fn brute_force_image(l: &SkewForm, m: u64) -> Result<u64> {
    let r = l.dim();
    if r > IMAGE_RANK_GUARD || m > IMAGE_MODULUS_GUARD {
        return Err(Error::Refused(format!(
            "image enumeration limited to rank ≤ {IMAGE_RANK_GUARD} and m ≤ {IMAGE_MODULUS_GUARD}"
        )));
    }
    if m == 0 {
        return Err(Error::input("m must be a positive integer"));
    }
    let mi = m as i64;
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut x = vec![0i64; r];
    loop {
        let y: Vec<i64> = l.apply(&x).iter().map(|v| v.rem_euclid(mi)).collect();
        seen.insert(y);
        let mut k = 0;
        while k < r {
            x[k] += 1;
            if x[k] < mi {
                break;
            }
            x[k] = 0;
            k += 1;
        }
        if k == r {
            break;
        }
    }
    Ok(seen.len() as u64)
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn valuation(n: &BigInt, p: u64) -> u32 {
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut v = 0;
    while !n.is_zero() && (&n % &p).is_zero() {
        n /= &p;
        v += 1;
    }
    v
}

#[derive(Debug, Clone, Serialize)]
pub struct PrimeCheck {
    pub p: u64,
    pub holds: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CentralityReport {
    pub m: u64,
    pub length: usize,
    pub r0: usize,
    pub generators_power_central: bool,
    pub c_bar_power_central: bool,
    pub c_bar_inverse_replacement: bool,
    pub nullity_vectors_power_central: bool,
    pub divisors: Vec<i64>,
    #[serde(serialize_with = "crate::bigjson::serialize")]
    pub det_z: BigInt,
    #[serde(serialize_with = "crate::bigjson::serialize")]
    pub det_l: BigInt,
    /// `p² | 2^{r−r₀} det Z` for every prime dividing a block divisor.
    pub p_squared_literal: Vec<PrimeCheck>,
    /// The same with `2^{r−r₀}` replaced by `∏ 2d_s`.
    pub p_squared_general: Vec<PrimeCheck>,
    /// Odd primes of `det Z` (coprime to `∏ 2d_s`) have even valuation matching the blocks.
    pub odd_valuations: Vec<PrimeCheck>,
    /// A unimodular `T` completing the center basis was found.
    pub t_hypothesis: bool,
    #[serde(serialize_with = "crate::bigjson::serialize")]
    pub z1_candidate: BigInt,
    /// Primes `p > 2` of `det(BD)`, coprime to `∏ 2d_s`, dividing the `Z₁` candidate.
    pub z1_primes: Vec<PrimeCheck>,
    pub consistent: bool,
}

fn all_central(alg: &TwistedAlgebra, vs: &[Vec<i64>], m: i64) -> bool {
    vs.iter().all(|v| alg.engine_is_central(v, m))
}

fn has_unit_minor(basis: &[Vec<i64>], cols: &[usize]) -> bool {
    let d = basis.len();
    if d == 0 {
        return true;
    }
    let mut pick = (0..d).collect::<Vec<_>>();
    loop {
        let minor: IntMatrix = basis
            .iter()
            .map(|row| pick.iter().map(|&k| row[cols[k]]).collect())
            .collect();
        if linalg::determinant(&minor).abs() == BigInt::one() {
            return true;
        }
        let mut i = d;
        while i > 0 {
            i -= 1;
            if pick[i] < cols.len() - d + i {
                pick[i] += 1;
                for j in i + 1..d {
                    pick[j] = pick[j - 1] + 1;
                }
                break;
            }
            if i == 0 {
                return false;
            }
        }
    }
}

/// Mod-`m` centrality of `m`-th powers and the determinant facts for a word.
pub fn root_centrality_report(rs: &RootSystem, word: &[usize], m: u64) -> Result<CentralityReport> {
    if m == 0 {
        return Err(Error::input("m must be a positive integer"));
    }
    let grid = BetaGrid::new(rs, word)?;
    let r = grid.len();
    let mi = m as i64;
    let l0 = lattice_forms::build_l0(rs, &grid);
    let (a, lbar) = lattice_forms::build_a_and_lbar(&grid, &l0);
    let alg = TwistedAlgebra::new(l0.clone());
    let scale = |v: &[i64], k: i64| -> Vec<i64> { v.iter().map(|x| x * k).collect() };

    let gens: Vec<Vec<i64>> = (0..r).map(|i| scale(&alg.generator(i), mi)).collect();
    let support = grid.support();
    let c_bars: Vec<Vec<i64>> = support
        .iter()
        .map(|&s| lattice_forms::c_bar_exponent(&grid, s))
        .collect();
    let c_bar_powers: Vec<Vec<i64>> = c_bars.iter().map(|c| scale(c, mi)).collect();
    let c_bar_inverse_replacement = c_bars.iter().all(|c| {
        let up = scale(c, mi - 1);
        let down = scale(c, -1);
        (0..r).all(|j| {
            let g = alg.generator(j);
            (alg.engine_commutation(&up, &g) - alg.engine_commutation(&down, &g)).rem_euclid(mi) == 0
        })
    });
    let nullity_vectors: Vec<Vec<i64>> = linalg::integer_kernel(lbar.entries(), r)?
        .iter()
        .map(|v| scale(&lattice_forms::minors_to_z(&a, v), mi))
        .collect();

    let nf = skew_normal_form(&lbar)?;
    let red = lattice_forms::column_reduce(rs, &grid, &lbar)?;
    let mut block_primes: Vec<u64> = nf
        .divisors
        .iter()
        .flat_map(|&d| prime_factors(d.unsigned_abs()))
        .collect();
    block_primes.sort_unstable();
    block_primes.dedup();

    let (mut literal, mut general, mut odd) = (Vec::new(), Vec::new(), Vec::new());
    if red.center_trivial() {
        let lit = red.power_of_two() * &red.det_z;
        let gen = &red.diag_factor * &red.det_z;
        for &p in &block_primes {
            let p2 = BigInt::from(p * p);
            literal.push(PrimeCheck { p, holds: (&lit % &p2).is_zero() });
            general.push(PrimeCheck { p, holds: (&gen % &p2).is_zero() });
        }
        let diag = red.diag_factor.to_u64().unwrap_or(0);
        let det_z = red.det_z.abs().to_u64();
        if let Some(dz) = det_z {
            for p in prime_factors(dz) {
                if p == 2 || diag % p == 0 {
                    continue;
                }
                let t = valuation(&red.det_z, p);
                let s: u32 = nf
                    .divisors
                    .iter()
                    .map(|&d| valuation(&BigInt::from(d), p))
                    .sum();
                odd.push(PrimeCheck { p, holds: t.is_multiple_of(2) && 2 * s == t });
            }
        }
    }

    let center = crate::centers::center_from_grid(rs, &grid)?;
    let kernel: Vec<Vec<i64>> = center
        .generators
        .iter()
        .map(|g| support.iter().map(|&s| g.n[s]).collect())
        .collect();
    let t_hypothesis = has_unit_minor(&kernel, &(0..support.len()).collect::<Vec<_>>());
    let z1_candidate: BigInt = linalg::smith_invariants(&red.z).into_iter().product();
    let det_bd: BigInt = nf.divisors.iter().map(|&d| BigInt::from(d * d)).product();
    let z1_primes: Vec<PrimeCheck> = det_bd
        .to_u64()
        .map(prime_factors)
        .unwrap_or_default()
        .into_iter()
        .filter(|&p| p > 2 && !(&red.diag_factor % BigInt::from(p)).is_zero())
        .map(|p| PrimeCheck {
            p,
            holds: (&z1_candidate % BigInt::from(p)).is_zero(),
        })
        .collect();

    let generators_power_central = all_central(&alg, &gens, mi);
    let c_bar_power_central = all_central(&alg, &c_bar_powers, mi);
    let nullity_vectors_power_central = all_central(&alg, &nullity_vectors, mi);
    let consistent = generators_power_central
        && c_bar_power_central
        && c_bar_inverse_replacement
        && nullity_vectors_power_central
        && general.iter().all(|c| c.holds)
        && odd.iter().all(|c| c.holds)
        && (!t_hypothesis || z1_primes.iter().all(|c| c.holds));
    Ok(CentralityReport {
        m,
        length: r,
        r0: support.len(),
        generators_power_central,
        c_bar_power_central,
        c_bar_inverse_replacement,
        nullity_vectors_power_central,
        divisors: nf.divisors,
        det_z: red.det_z,
        det_l: red.det_l,
        p_squared_literal: literal,
        p_squared_general: general,
        odd_valuations: odd,
        t_hypothesis,
        z1_candidate,
        z1_primes,
        consistent,
    })
}
