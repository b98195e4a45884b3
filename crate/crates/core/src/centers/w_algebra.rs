//! The algebra generated by the minors `Δ_{s,t} = Δ_{Λ_s, ω_{s,t}Λ_s}` for a
//! factorization `ω = ω₁ ω₂ ⋯ ω_ℓ` into products of distinct reflections.

use num_traits::{Signed, ToPrimitive};
use serde::Serialize;

use super::{kernel_on, one_plus, CenterDescription, CenterGenerator};
use crate::cartan::RootSystem;
use crate::error::{Error, Result};
use crate::lattice_forms::{self, SkewForm};
use crate::linalg;
use crate::weyl::{format_word, length_and_reduced, parse_word, BetaGrid, WeylElement};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionSpec {
    /// Factors as 0-based words.
    pub factors: Vec<Vec<usize>>,
}

impl DecompositionSpec {
    pub fn new(factors: Vec<Vec<usize>>) -> Self {
        DecompositionSpec { factors }
    }

    /// Parses `"1,2;1"`.
    pub fn parse(s: &str) -> Result<Self> {
        let factors = s
            .split(';')
            .map(parse_word)
            .collect::<Result<Vec<_>>>()?;
        Ok(DecompositionSpec { factors })
    }

    pub fn word(&self) -> Vec<usize> {
        self.factors.concat()
    }

    pub fn render(&self) -> String {
        self.factors
            .iter()
            .map(|f| format_word(f))
            .collect::<Vec<_>>()
            .join(";")
    }
}

/// Splits a word into factors, starting a new factor whenever a letter repeats.
pub fn greedy_decomposition(word: &[usize]) -> DecompositionSpec {
    let mut factors: Vec<Vec<usize>> = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    for &i in word {
        if current.contains(&i) {
            factors.push(std::mem::take(&mut current));
        }
        current.push(i);
    }
    if !current.is_empty() {
        factors.push(current);
    }
    DecompositionSpec { factors }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Validation {
    pub valid: bool,
    pub diagnostics: Vec<String>,
}

pub fn validate_decomposition(rs: &RootSystem, spec: &DecompositionSpec) -> Validation {
    let mut diagnostics = Vec::new();
    if spec.factors.is_empty() {
        diagnostics.push("no factors given".to_string());
    }
    for (k, f) in spec.factors.iter().enumerate() {
        if f.is_empty() {
            diagnostics.push(format!("factor {} is empty", k + 1));
        }
        if let Some(&i) = f.iter().find(|&&i| i >= rs.rank()) {
            diagnostics.push(format!("factor {} uses letter {} out of range", k + 1, i + 1));
            continue;
        }
        let mut seen = f.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != f.len() {
            diagnostics.push(format!("factor {} repeats a reflection", k + 1));
        }
        if k > 0 {
            let prev = &spec.factors[k - 1];
            if let Some(&i) = f.iter().find(|i| !prev.contains(i)) {
                diagnostics.push(format!(
                    "support not nested: letter {} of factor {} is missing from factor {}",
                    i + 1,
                    k + 1,
                    k
                ));
            }
        }
    }
    if diagnostics.is_empty() {
        match length_and_reduced(rs, &spec.word()) {
            Ok((_, true)) => {}
            Ok((len, false)) => diagnostics.push(format!(
                "concatenation is not reduced (length {len} < {})",
                spec.word().len()
            )),
            Err(e) => diagnostics.push(e.to_string()),
        }
    }
    Validation {
        valid: diagnostics.is_empty(),
        diagnostics,
    }
}

fn require_valid(rs: &RootSystem, spec: &DecompositionSpec) -> Result<()> {
    let v = validate_decomposition(rs, spec);
    if !v.valid {
        return Err(Error::input(format!(
            "invalid decomposition ({}): {}",
            spec.render(),
            v.diagnostics.join("; ")
        )));
    }
    Ok(())
}

/// The skew form `𝕃_Δ` with its `∇` certificates.
///
/// Generators are ordered by grid position of the concatenated word; under a
/// valid decomposition the `t`-th occurrence of `s` lies in factor `t`.
#[derive(Debug, Clone, Serialize)]
pub struct DeltaLattice {
    #[serde(skip)]
    pub grid: BetaGrid,
    pub labels: Vec<(usize, usize)>,
    pub form: SkewForm,
    /// `((i, j₀), exponent vector of ∇_{i,j₀})`.
    pub nablas: Vec<((usize, usize), Vec<i64>)>,
    pub flipped: bool,
}

/// Builds `𝕃_Δ` and checks the `Γ` pattern and both range certificates.
///
/// With `flip` the orientation of every exponent is reversed.
pub fn delta_lattice(rs: &RootSystem, spec: &DecompositionSpec, flip: bool) -> Result<DeltaLattice> {
    require_valid(rs, spec)?;
    let grid = BetaGrid::new(rs, &spec.word())?;
    let r = grid.len();
    let sign = if flip { -1 } else { 1 };
    let images: Vec<Vec<i64>> = grid
        .grid
        .iter()
        .map(|&(s, t)| grid.omega_st(s, t).apply_weight(&rs.fundamental_weight(s)))
        .collect();
    let mut m = linalg::zeros(r, r);
    for p in 0..r {
        for q in p + 1..r {
            let (s, t) = grid.grid[p];
            let (c, d) = grid.grid[q];
            if t == d {
                continue;
            }
            let (ls, lc) = (rs.fundamental_weight(s), rs.fundamental_weight(c));
            let v = rs.weight_inner(&ls, &lc) - rs.weight_inner(&images[p], &images[q]);
            if !v.is_integer() {
                return Err(Error::internal("non-integral entry in the Δ form"));
            }
            let v = sign
                * v.to_integer()
                    .to_i64()
                    .ok_or_else(|| Error::internal("Δ form entry exceeds 64-bit range"))?;
            m[p][q] = v;
            m[q][p] = -v;
        }
    }
    let form = SkewForm::new(m)?;

    let mut nablas = Vec::new();
    for i in grid.support() {
        let imax = grid.count(i);
        for j0 in 2..=imax {
            let nabla = lattice_forms::f_bar(rs, &grid, i, j0);
            let gamma = form.apply(&nabla);
            for (p, &(s, t)) in grid.grid.iter().enumerate() {
                let want = if s != i {
                    0
                } else if t < j0 {
                    rs.d(i)
                } else {
                    -rs.d(i)
                };
                // Δ_{s,t} past ∇ has exponent e_{s,t}ᵗ 𝕃 ∇.
                if gamma[p] != sign * want {
                    return Err(Error::internal(format!(
                        "Γ pattern of ∇({}, {j0}) fails at ({}, {t})",
                        i + 1,
                        s + 1
                    )));
                }
            }
            nablas.push(((i, j0), nabla));
        }
    }
    let lookup = |i: usize, j: usize| -> &Vec<i64> {
        &nablas.iter().find(|(k, _)| *k == (i, j)).expect("∇ exists").1
    };
    for i in grid.support() {
        let imax = grid.count(i);
        let two_d = 2 * rs.d(i) * sign;
        for j0 in 2..imax {
            let diff: Vec<i64> = lookup(i, j0)
                .iter()
                .zip(lookup(i, j0 + 1))
                .map(|(a, b)| a - b)
                .collect();
            let mut want = vec![0; r];
            want[grid.pos(i, j0)] = -two_d;
            if form.apply(&diff) != want {
                return Err(Error::internal(format!(
                    "range certificate for Δ({}, {j0}) failed",
                    i + 1
                )));
            }
        }
        if imax >= 2 {
            let sum: Vec<i64> = lookup(i, 2)
                .iter()
                .zip(lookup(i, imax))
                .map(|(a, b)| a + b)
                .collect();
            let mut want = vec![0; r];
            want[grid.pos(i, 1)] += two_d;
            want[grid.pos(i, imax)] -= two_d;
            if form.apply(&sum) != want {
                return Err(Error::internal(format!(
                    "range certificate for Δ({},1)⁻¹Δ({},{imax}) failed",
                    i + 1,
                    i + 1
                )));
            }
        }
    }
    Ok(DeltaLattice {
        labels: grid.grid.clone(),
        grid,
        form,
        nablas,
        flipped: flip,
    })
}

fn render_w(n: &[i64], grid: &BetaGrid) -> String {
    let mut parts = Vec::new();
    for (i, &k) in n.iter().enumerate() {
        if k == 0 {
            continue;
        }
        let imax = grid.count(i);
        let mut factors = vec![format!("D({},1)", i + 1)];
        if imax > 1 {
            factors.push(format!("D({},{imax})", i + 1));
        }
        for f in factors {
            parts.push(if k == 1 { f } else { format!("{f}^{k}") });
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

/// Center of the localized Δ-algebra: `ker(1 − ω₁⁻¹ω)` on `S_𝔯`.
pub fn center_w(rs: &RootSystem, spec: &DecompositionSpec) -> Result<CenterDescription> {
    require_valid(rs, spec)?;
    let grid = BetaGrid::new(rs, &spec.word())?;
    let w1 = WeylElement::from_word(rs, &spec.factors[0])?;
    let x = w1.inverse(rs).mul(grid.element());
    let m = one_plus(&x, -1);
    let rows: Vec<usize> = (0..rs.rank()).collect();
    let kernel = kernel_on(&m, &rows, &grid.support(), rs.rank())?;
    let generators = kernel
        .into_iter()
        .map(|n| {
            let mut z = vec![0; grid.len()];
            for (i, &k) in n.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                z[grid.pos(i, 1)] += k;
                let imax = grid.count(i);
                if imax > 1 {
                    z[grid.pos(i, imax)] += k;
                }
            }
            CenterGenerator {
                rendered: render_w(&n, &grid),
                n,
                z_exponents: z,
            }
        })
        .collect::<Vec<_>>();
    if generators.iter().any(|g| g.n.iter().any(|x| x.abs() > 1 << 40)) {
        return Err(Error::internal("W-center generator out of range"));
    }
    Ok(CenterDescription {
        dimension: generators.len(),
        generators,
    })
}
