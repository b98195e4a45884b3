//! Double Schubert cells: the generators `z_{s,t}` of a reduced word `wc`
//! lying after a prefix `wa`, and the center `ker(ω^𝔞 + ω^𝔠)`.

use super::{kernel_on, one_plus, render_product, CenterDescription, CenterGenerator};
use crate::cartan::RootSystem;
use crate::error::{Error, Result};
use crate::lattice_forms::{self, SkewForm};
use crate::linalg;
use crate::twisted_laurent::TwistedAlgebra;
use crate::weyl::{BetaGrid, WeylElement};

#[derive(Debug, Clone)]
pub struct SchubertWindow {
    pub grid: BetaGrid,
    /// Positions `|wa| .. |wc|` of the window, in grid order.
    pub positions: Vec<usize>,
    /// `u` with `ω^𝔠 = ω^𝔞 u`.
    pub suffix: Vec<usize>,
}

impl SchubertWindow {
    pub fn new(rs: &RootSystem, wa: &[usize], wc: &[usize]) -> Result<Self> {
        let grid = BetaGrid::new(rs, wc)?;
        if wa.len() >= wc.len() || wc[..wa.len()] != *wa {
            return Err(Error::input("wa must be a strict prefix of wc"));
        }
        Ok(SchubertWindow {
            positions: (wa.len()..wc.len()).collect(),
            suffix: wc[wa.len()..].to_vec(),
            grid,
        })
    }

    pub fn omega_a(&self) -> &WeylElement {
        &self.grid.prefixes[self.positions[0]]
    }

    pub fn omega_c(&self) -> &WeylElement {
        self.grid.element()
    }

    /// Letters occurring in the window.
    pub fn support(&self) -> Vec<usize> {
        let mut s = self.suffix.clone();
        s.sort_unstable();
        s.dedup();
        s
    }
}

/// The window algebra: `L̄₀` of `wc` restricted to the window generators.
pub fn schubert_window_algebra(
    rs: &RootSystem,
    wa: &[usize],
    wc: &[usize],
) -> Result<(SchubertWindow, TwistedAlgebra)> {
    let win = SchubertWindow::new(rs, wa, wc)?;
    let l0 = lattice_forms::build_l0(rs, &win.grid);
    let sub = win
        .positions
        .iter()
        .map(|&i| win.positions.iter().map(|&j| l0.get(i, j)).collect())
        .collect();
    let alg = TwistedAlgebra::new(SkewForm::new(sub)?);
    Ok((win, alg))
}

/// `ker(ω^𝔞 + ω^𝔠)` on the window, read against the transported roots `ω^𝔞 α_j`.
pub fn double_schubert_center(rs: &RootSystem, wa: &[usize], wc: &[usize]) -> Result<CenterDescription> {
    let win = SchubertWindow::new(rs, wa, wc)?;
    let support = win.support();
    let (wa_el, wc_el) = (win.omega_a(), win.omega_c());
    let mut m = linalg::zeros(rs.rank(), rs.rank());
    for &j in &support {
        let root = wa_el.apply_root(&rs.simple_root(j));
        for &s in &support {
            let ls = rs.fundamental_weight(s);
            let img: Vec<i64> = wa_el
                .apply_weight(&ls)
                .iter()
                .zip(wc_el.apply_weight(&ls))
                .map(|(a, b)| a + b)
                .collect();
            m[j][s] = rs.weight_root_inner(&img, &root);
        }
    }
    let kernel = kernel_on(&m, &support, &support, rs.rank())?;

    let u = WeylElement::from_word(rs, &win.suffix)?;
    let check = kernel_on(&one_plus(&u, 1), &support, &support, rs.rank())?;
    if check != kernel {
        return Err(Error::internal("ker(ω^𝔞+ω^𝔠) differs from ker(1+u) on the window"));
    }

    let generators = kernel
        .into_iter()
        .map(|n| {
            let z = win
                .positions
                .iter()
                .map(|&p| n[win.grid.word[p]])
                .collect();
            CenterGenerator {
                rendered: render_product(&n, |s| format!("C{}", s + 1)),
                n,
                z_exponents: z,
            }
        })
        .collect::<Vec<_>>();
    Ok(CenterDescription {
        dimension: generators.len(),
        generators,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::centers::center_nilpotent;
    use crate::twisted_laurent::box_points;

    fn a2() -> RootSystem {
        RootSystem::new("A2".parse().unwrap()).unwrap()
    }

    #[test]
    fn empty_prefix_is_the_nilpotent_case() {
        let r = a2();
        let word = [0, 1, 0];
        assert_eq!(
            double_schubert_center(&r, &[], &word).unwrap(),
            center_nilpotent(&r, &word).unwrap()
        );
    }

    #[test]
    fn equal_or_non_prefix_rejected() {
        let r = a2();
        assert!(double_schubert_center(&r, &[0, 1, 0], &[0, 1, 0]).is_err());
        assert!(double_schubert_center(&r, &[1], &[0, 1, 0]).is_err());
    }

    #[test]
    fn a2_window_matches_engine() {
        let r = a2();
        let c = double_schubert_center(&r, &[0], &[0, 1, 0]).unwrap();
        assert_eq!(c.dimension, 0);
        let (_, alg) = schubert_window_algebra(&r, &[0], &[0, 1, 0]).unwrap();
        let lat = linalg::Lattice::from_generators(alg.dim(), &c.z_lattice()).unwrap();
        for v in box_points(alg.dim(), 2) {
            assert_eq!(alg.engine_is_central(&v, 0), lat.contains(&v));
        }
    }
}
