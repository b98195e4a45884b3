//! Twisted Laurent algebras over `ℤ[q, q⁻¹]`.
//!
//! Generators satisfy `z_i z_j = q^{S_ij} z_j z_i` for a skew matrix `S`.
//! Monomials are kept in ascending normal order, so
//! `z^a z^b = q^{κ(a,b)} z^{a+b}` with `κ(a,b) = Σ_{i>j} a_i b_j S_ij`.
//! Commutation exponents are read off from two such products, which is what
//! makes the engine usable as an independent oracle for closed formulas.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::cartan::RootSystem;
use crate::error::{Error, Result};
use crate::lattice_forms::{self, SkewForm};
use crate::weyl::BetaGrid;

/// A Laurent polynomial in `q`, stored as `q-power ↦ coefficient`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly(BTreeMap<i64, BigInt>);

impl LaurentPoly {
    pub fn q_power(k: i64) -> Self {
        LaurentPoly(BTreeMap::from([(k, BigInt::one())]))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `Some(k)` when the polynomial is exactly `q^k`.
    pub fn as_q_power(&self) -> Option<i64> {
        match self.0.iter().next() {
            Some((&k, c)) if self.0.len() == 1 && c.is_one() => Some(k),
            _ => None,
        }
    }

    fn add_term(&mut self, k: i64, c: BigInt) {
        let e = self.0.entry(k).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.0.remove(&k);
        }
    }

    fn add_shifted_product(&mut self, x: &LaurentPoly, y: &LaurentPoly, shift: i64) {
        for (i, a) in &x.0 {
            for (j, b) in &y.0 {
                self.add_term(i + j + shift, a * b);
            }
        }
    }
}

/// A finite sum of monomials with Laurent-polynomial coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentElement {
    terms: BTreeMap<Vec<i64>, LaurentPoly>,
}

impl LaurentElement {
    pub fn zero() -> Self {
        LaurentElement::default()
    }

    pub fn monomial(qpow: i64, exps: Vec<i64>) -> Self {
        let mut e = LaurentElement::zero();
        e.terms.insert(exps, LaurentPoly::q_power(qpow));
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &LaurentPoly)> {
        self.terms.iter()
    }

    /// `(qpow, exps)` when the element is a single monomial `q^k z^a`.
    pub fn as_monomial(&self) -> Option<(i64, &Vec<i64>)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (exps, c) = self.terms.iter().next()?;
        Some((c.as_q_power()?, exps))
    }

    pub fn add(&self, other: &LaurentElement) -> LaurentElement {
        let mut out = self.clone();
        for (exps, c) in &other.terms {
            let e = out.terms.entry(exps.clone()).or_default();
            for (k, v) in &c.0 {
                e.add_term(*k, v.clone());
            }
            if e.is_zero() {
                out.terms.remove(exps);
            }
        }
        out
    }

    /// Multiplies every coefficient by `c · q^k`.
    pub fn scale(&self, k: i64, c: i64) -> LaurentElement {
        let mut out = LaurentElement::zero();
        if c == 0 {
            return out;
        }
        for (exps, poly) in &self.terms {
            let mut p = LaurentPoly::default();
            for (i, v) in &poly.0 {
                p.add_term(i + k, v * BigInt::from(c));
            }
            out.terms.insert(exps.clone(), p);
        }
        out
    }
}

#[derive(Debug, Clone)]
pub struct TwistedAlgebra {
    skew: SkewForm,
}

impl TwistedAlgebra {
    pub fn new(skew: SkewForm) -> Self {
        TwistedAlgebra { skew }
    }

    pub fn dim(&self) -> usize {
        self.skew.dim()
    }

    pub fn skew(&self) -> &SkewForm {
        &self.skew
    }

    pub fn generator(&self, i: usize) -> Vec<i64> {
        let mut v = vec![0; self.dim()];
        v[i] = 1;
        v
    }

    fn check(&self, a: &[i64]) -> Result<()> {
        if a.len() != self.dim() {
            return Err(Error::input(format!(
                "exponent vector of length {} in an algebra of dimension {}",
                a.len(),
                self.dim()
            )));
        }
        Ok(())
    }

    /// `κ(a, b) = Σ_{i>j} a_i b_j S_ij`.
    pub fn kappa(&self, a: &[i64], b: &[i64]) -> i64 {
        let s = self.skew.entries();
        let mut acc = 0;
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate().take(i) {
                if bj != 0 {
                    acc += ai * bj * s[i][j];
                }
            }
        }
        acc
    }

    /// `z^a · z^b = q^k z^{a+b}`; returns `(k, a + b)`.
    pub fn monomial_product(&self, a: &[i64], b: &[i64]) -> (i64, Vec<i64>) {
        let sum = a.iter().zip(b).map(|(x, y)| x + y).collect();
        (self.kappa(a, b), sum)
    }

    /// The inverse `q^{κ(a,a)} z^{−a}` of the normal-ordered monomial `z^a`.
    pub fn inverse_monomial(&self, a: &[i64]) -> LaurentElement {
        LaurentElement::monomial(self.kappa(a, a), a.iter().map(|x| -x).collect())
    }

    pub fn multiply(&self, x: &LaurentElement, y: &LaurentElement) -> Result<LaurentElement> {
        let mut out = LaurentElement::zero();
        for (a, pa) in &x.terms {
            self.check(a)?;
            for (b, pb) in &y.terms {
                self.check(b)?;
                let (k, exps) = self.monomial_product(a, b);
                let entry = out.terms.entry(exps.clone()).or_default();
                entry.add_shifted_product(pa, pb, k);
                if entry.is_zero() {
                    out.terms.remove(&exps);
                }
            }
        }
        Ok(out)
    }

    /// `aᵗ S b`, the closed form of the exponent in `z^a z^b = q^E z^b z^a`.
    pub fn commutation_exponent(&self, a: &[i64], b: &[i64]) -> i64 {
        self.skew.pair(a, b)
    }

    /// The exponent `E` in `z^a z^b = q^E z^b z^a`, computed from the two products.
    pub fn engine_commutation(&self, a: &[i64], b: &[i64]) -> i64 {
        let (k1, _) = self.monomial_product(a, b);
        let (k2, _) = self.monomial_product(b, a);
        k1 - k2
    }

    /// Closed-form centrality: `S a = 0`, or `S a ≡ 0 (mod m)` for `modulus = m > 0`.
    pub fn centrality_test(&self, a: &[i64], modulus: i64) -> bool {
        self.skew.apply(a).iter().all(|&v| {
            if modulus == 0 {
                v == 0
            } else {
                v.rem_euclid(modulus) == 0
            }
        })
    }

    /// Centrality decided by commuting `z^a` past every generator in the engine.
    pub fn engine_is_central(&self, a: &[i64], modulus: i64) -> bool {
        (0..self.dim()).all(|i| {
            let e = self.engine_commutation(a, &self.generator(i));
            if modulus == 0 {
                e == 0
            } else {
                e.rem_euclid(modulus) == 0
            }
        })
    }

    /// All engine-central monomials with exponents in `[-n, n]^r`.
    pub fn central_monomials_in_box(&self, n: i64) -> Vec<Vec<i64>> {
        let r = self.dim();
        let mut out = Vec::new();
        let mut v = vec![-n; r];
        loop {
            if self.engine_is_central(&v, 0) {
                out.push(v.clone());
            }
            let mut k = 0;
            loop {
                if k == r {
                    return out;
                }
                if v[k] < n {
                    v[k] += 1;
                    break;
                }
                v[k] = -n;
                k += 1;
            }
        }
    }
}

/// Every integer vector of length `r` with entries in `[-n, n]`.
pub fn box_points(r: usize, n: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::with_capacity(r)];
    for _ in 0..r {
        out = out
            .into_iter()
            .flat_map(|v| {
                (-n..=n).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// Result of comparing one closed formula against the engine.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormulaCheck {
    pub name: &'static str,
    pub checked: usize,
    pub mismatches: usize,
    /// The first few counterexamples, described in words.
    pub examples: Vec<String>,
}

impl FormulaCheck {
    fn new(name: &'static str) -> Self {
        FormulaCheck {
            name,
            checked: 0,
            mismatches: 0,
            examples: Vec::new(),
        }
    }

    fn record(&mut self, engine: i64, closed: i64, what: impl FnOnce() -> String) {
        self.checked += 1;
        if engine != closed {
            self.mismatches += 1;
            if self.examples.len() < 5 {
                self.examples
                    .push(format!("{}: engine {engine}, formula {closed}", what()));
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.mismatches == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub checks: Vec<FormulaCheck>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(FormulaCheck::passed)
    }

    pub fn mismatches(&self) -> usize {
        self.checks.iter().map(|c| c.mismatches).sum()
    }

    pub fn checked(&self) -> usize {
        self.checks.iter().map(|c| c.checked).sum()
    }
}

fn add(x: &[i64], y: &[i64]) -> Vec<i64> {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

fn sub(x: &[i64], y: &[i64]) -> Vec<i64> {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

/// Compares the engine against every commutation formula for the quasi-polynomial
/// algebra of `grid`.
///
/// With `flip` the engine is built on `−L̄₀` and every closed form is negated,
/// which is the `q ↔ q⁻¹` convention.
pub fn formula_audit(rs: &RootSystem, grid: &BetaGrid, flip: bool) -> Result<AuditReport> {
    let r = grid.len();
    let l0 = lattice_forms::build_l0(rs, grid);
    let a = lattice_forms::change_of_basis(grid);
    let alg = TwistedAlgebra::new(if flip { l0.negated() } else { l0 });
    let sign = if flip { -1 } else { 1 };
    let omega = grid.element();
    let support = grid.support();
    let label = |p: usize| {
        let (s, t) = grid.grid[p];
        format!("({}, {})", s + 1, t)
    };
    let one_plus = |w: &crate::weyl::WeylElement, s: usize| {
        let ls = rs.fundamental_weight(s);
        add(&ls, &w.apply_weight(&ls))
    };
    // Root coordinates of (1 − ω_{s,t})Λ_s, i.e. β_{s,1} + … + β_{s,t}.
    let p_root = |s: usize, t: usize| {
        let mut v = vec![0; rs.rank()];
        for &pos in grid.occurrences[s].iter().take(t) {
            v = add(&v, &grid.betas[pos]);
        }
        v
    };
    let minor = |p: usize| {
        let (s, t) = grid.grid[p];
        lattice_forms::minor_exponent_vector(grid, s, t)
    };
    let gen = |p: usize| alg.generator(p);

    let mut commu = FormulaCheck::new("generator past C̄_s");
    for &s in &support {
        let c = lattice_forms::c_bar_exponent(grid, s);
        let w = one_plus(omega, s);
        for p in 0..r {
            let closed = -rs.weight_root_inner(&w, &grid.betas[p]);
            commu.record(alg.engine_commutation(&gen(p), &c), sign * closed, || {
                format!("z{} past C̄{}", label(p), s + 1)
            });
        }
    }

    let mut case1 = FormulaCheck::new("generator past minor, case (a,b) ≤ (s,t)");
    let mut case2 = FormulaCheck::new("generator past minor, case (a,b) > (s,t)");
    for q in 0..r {
        let (s, t) = grid.grid[q];
        let w_st = grid.omega_st(s, t);
        let ls = rs.fundamental_weight(s);
        let plus = one_plus(w_st, s);
        let minus = sub(&ls, &w_st.apply_weight(&ls));
        let m = minor(q);
        for p in 0..r {
            let e = alg.engine_commutation(&gen(p), &m);
            let what = || format!("z{} past M{}", label(p), label(q));
            if p <= q {
                case1.record(e, -sign * rs.weight_root_inner(&plus, &grid.betas[p]), what);
            } else {
                case2.record(e, -sign * rs.weight_root_inner(&minus, &grid.betas[p]), what);
            }
        }
    }

    let mut only = FormulaCheck::new("minor past C̄_j");
    for q in 0..r {
        let (s, t) = grid.grid[q];
        let pst = p_root(s, t);
        for &j in &support {
            let closed = -rs.weight_root_inner(&one_plus(omega, j), &pst);
            let c = lattice_forms::c_bar_exponent(grid, j);
            only.record(alg.engine_commutation(&minor(q), &c), sign * closed, || {
                format!("M{} past C̄{}", label(q), j + 1)
            });
        }
    }

    let mut minors = FormulaCheck::new("minor past later minor");
    for q in 0..r {
        let (s, t) = grid.grid[q];
        let pst = p_root(s, t);
        for q2 in q..r {
            let (c, d) = grid.grid[q2];
            let closed = -rs.weight_root_inner(&one_plus(grid.omega_st(c, d), c), &pst);
            minors.record(alg.engine_commutation(&minor(q), &minor(q2)), sign * closed, || {
                format!("M{} past M{}", label(q), label(q2))
            });
        }
    }

    let mut key_e = FormulaCheck::new("generator past F̄(s,t)");
    let mut key_g = FormulaCheck::new("minor past F̄(s,t)");
    let mut nabla = FormulaCheck::new("generator past B̄_{s,t}");
    let mut pair = FormulaCheck::new("minor past B̄_{s,t}");
    for q in 0..r {
        let (s, t) = grid.grid[q];
        let ds = rs.d(s);
        let alpha_s = rs.simple_root(s);
        let f = lattice_forms::minors_to_z(&a, &lattice_forms::f_bar(rs, grid, s, t));
        let b = (t < grid.count(s)).then(|| {
            let next = lattice_forms::minors_to_z(&a, &lattice_forms::f_bar(rs, grid, s, t + 1));
            sub(&f, &next)
        });
        for p in 0..r {
            let (c, d) = grid.grid[p];
            let delta = i64::from(p == q);
            let closed = -rs.root_inner(&grid.betas[p], &alpha_s) + 2 * ds * delta;
            key_e.record(alg.engine_commutation(&gen(p), &f), sign * closed, || {
                format!("z{} past F̄{}", label(p), label(q))
            });
            let hits = i64::from(c == s && t <= d);
            let closed = -rs.root_inner(&p_root(c, d), &alpha_s) + 2 * ds * hits;
            key_g.record(alg.engine_commutation(&minor(p), &f), sign * closed, || {
                format!("M{} past F̄{}", label(p), label(q))
            });
            if let Some(b) = &b {
                let next = i64::from(c == s && d == t + 1);
                let closed = 2 * ds * (delta - next);
                nabla.record(alg.engine_commutation(&gen(p), b), sign * closed, || {
                    format!("z{} past B̄{}", label(p), label(q))
                });
                pair.record(alg.engine_commutation(&minor(p), b), sign * 2 * ds * delta, || {
                    format!("M{} past B̄{}", label(p), label(q))
                });
            }
        }
    }

    // Products of C̄_s with exponents in {-1, 0, 1}: central iff (1+ω)Σ n_s Λ_s = 0.
    let mut usef = FormulaCheck::new("C̄ products central iff (1+ω)n = 0");
    for n in box_points(support.len(), 1) {
        let mut z = vec![0; r];
        let mut weight = vec![0; rs.rank()];
        for (&s, &k) in support.iter().zip(&n) {
            for &pos in &grid.occurrences[s] {
                z[pos] += k;
            }
            weight[s] += k;
        }
        let engine = i64::from(alg.engine_is_central(&z, 0));
        // Weights are read as functionals on span{α_s : s in the support}.
        let image = add(&weight, &omega.apply_weight(&weight));
        let closed = i64::from(support.iter().all(|&s| image[s] == 0));
        usef.record(engine, closed, || format!("n = {n:?}"));
    }

    Ok(AuditReport {
        checks: vec![commu, case1, case2, only, minors, key_e, key_g, nabla, pair, usef],
    })
}
