//! Weyl group elements, reduced words, inversion sets and the β-grid.

use std::collections::{HashMap, HashSet};
use std::hash::{Hash, Hasher};

use crate::cartan::RootSystem;
use crate::error::{Error, Result};
use crate::linalg::{self, IntMatrix};

/// A Weyl group element, stored by its action on root and weight coordinates.
///
/// Equality and hashing only look at the root-coordinate matrix.
#[derive(Debug, Clone)]
pub struct WeylElement {
    root: IntMatrix,
    weight: IntMatrix,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.root == other.root
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.root.hash(state);
    }
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        WeylElement {
            root: linalg::identity(rank),
            weight: linalg::identity(rank),
        }
    }

    pub fn simple(rs: &RootSystem, i: usize) -> Self {
        let n = rs.rank();
        let mut root = linalg::identity(n);
        let mut weight = linalg::identity(n);
        for k in 0..n {
            root[i][k] -= rs.cartan[i][k];
            weight[k][i] -= rs.cartan[k][i];
        }
        WeylElement { root, weight }
    }

    /// Evaluates `s_{i₁} ⋯ s_{i_k}` (0-based letters).
    pub fn from_word(rs: &RootSystem, word: &[usize]) -> Result<Self> {
        let mut w = WeylElement::identity(rs.rank());
        for &i in word {
            if i >= rs.rank() {
                return Err(Error::input(format!(
                    "letter {} out of range for {}",
                    i + 1,
                    rs.ctype
                )));
            }
            w = w.mul_simple(rs, i);
        }
        Ok(w)
    }

    pub fn rank(&self) -> usize {
        self.root.len()
    }

    pub fn root_matrix(&self) -> &IntMatrix {
        &self.root
    }

    pub fn weight_matrix(&self) -> &IntMatrix {
        &self.weight
    }

    pub fn mul(&self, other: &WeylElement) -> WeylElement {
        WeylElement {
            root: linalg::mat_mul(&self.root, &other.root),
            weight: linalg::mat_mul(&self.weight, &other.weight),
        }
    }

    /// `w · s_i`.
    pub fn mul_simple(&self, rs: &RootSystem, i: usize) -> WeylElement {
        self.mul(&WeylElement::simple(rs, i))
    }

    pub fn apply_root(&self, b: &[i64]) -> Vec<i64> {
        linalg::mat_vec(&self.root, b)
    }

    pub fn apply_weight(&self, w: &[i64]) -> Vec<i64> {
        linalg::mat_vec(&self.weight, w)
    }

    pub fn is_identity(&self) -> bool {
        self.root == linalg::identity(self.rank())
    }

    /// True when `w` acts as `-1`.
    pub fn is_minus_identity(&self) -> bool {
        let n = self.rank();
        (0..n).all(|i| (0..n).all(|j| self.root[i][j] == if i == j { -1 } else { 0 }))
    }

    fn sends_negative(&self, b: &[i64]) -> bool {
        RootSystem::is_negative(&self.apply_root(b))
    }

    pub fn length(&self, rs: &RootSystem) -> usize {
        rs.positive_roots
            .iter()
            .filter(|b| self.sends_negative(b))
            .count()
    }

    /// `Φ_w = {α > 0 : w⁻¹α < 0}`, listed in the order of `rs.positive_roots`.
    pub fn phi_set(&self, rs: &RootSystem) -> Vec<Vec<i64>> {
        let mut out: Vec<Vec<i64>> = rs
            .positive_roots
            .iter()
            .filter_map(|b| {
                let c = self.apply_root(b);
                RootSystem::is_negative(&c).then(|| c.iter().map(|x| -x).collect())
            })
            .collect();
        let order: HashMap<&Vec<i64>, usize> = rs
            .positive_roots
            .iter()
            .enumerate()
            .map(|(k, b)| (b, k))
            .collect();
        out.sort_by_key(|b| order[b]);
        out
    }

    /// Reduced word, built by stripping right descents with the smallest index first.
    pub fn reduced_word(&self, rs: &RootSystem) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::new();
        loop {
            let descent = (0..rs.rank()).find(|&i| w.sends_negative(&rs.simple_root(i)));
            match descent {
                Some(i) => {
                    w = w.mul_simple(rs, i);
                    word.push(i);
                }
                None => break,
            }
        }
        word.reverse();
        word
    }

    pub fn inverse(&self, rs: &RootSystem) -> WeylElement {
        let mut word = self.reduced_word(rs);
        word.reverse();
        WeylElement::from_word(rs, &word).expect("letters come from a reduced word")
    }
}

/// Parses `"1,2,1"` into 0-based letters. The empty string is the empty word.
pub fn parse_word(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            let k: usize = tok
                .trim()
                .parse()
                .map_err(|_| Error::input(format!("bad word letter {tok:?}")))?;
            if k == 0 {
                return Err(Error::input("word letters are 1-based"));
            }
            Ok(k - 1)
        })
        .collect()
}

pub fn format_word(word: &[usize]) -> String {
    word.iter()
        .map(|i| (i + 1).to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// `(ℓ(w), word is reduced)` for the evaluated word.
pub fn length_and_reduced(rs: &RootSystem, word: &[usize]) -> Result<(usize, bool)> {
    let w = WeylElement::from_word(rs, word)?;
    let len = w.length(rs);
    Ok((len, len == word.len()))
}

/// Reflection `σ_β` as a matrix on root coordinates.
pub fn root_reflection(rs: &RootSystem, beta: &[i64]) -> IntMatrix {
    let n = rs.rank();
    let bb = rs.root_inner(beta, beta);
    let mut m = linalg::zeros(n, n);
    for k in 0..n {
        let ak = rs.simple_root(k);
        let c = 2 * rs.root_inner(beta, &ak) / bb;
        for i in 0..n {
            m[i][k] = ak[i] - c * beta[i];
        }
    }
    m
}

/// The β-sequence of a reduced word together with its `(s,t)` grid.
#[derive(Debug, Clone)]
pub struct BetaGrid {
    pub word: Vec<usize>,
    pub betas: Vec<Vec<i64>>,
    /// Position ↦ `(s, t)`, `t` counted from 1.
    pub grid: Vec<(usize, usize)>,
    /// For each simple index, the positions where it occurs.
    pub occurrences: Vec<Vec<usize>>,
    /// `prefixes[k] = s_{i₁} ⋯ s_{i_k}` for `k = 0..=r`.
    pub prefixes: Vec<WeylElement>,
}

impl BetaGrid {
    pub fn new(rs: &RootSystem, word: &[usize]) -> Result<Self> {
        let (len, reduced) = length_and_reduced(rs, word)?;
        if !reduced {
            return Err(Error::input(format!(
                "word ({}) is not reduced: length {} < {}",
                format_word(word),
                len,
                word.len()
            )));
        }
        let n = rs.rank();
        let mut prefixes = vec![WeylElement::identity(n)];
        let mut betas = Vec::with_capacity(word.len());
        let mut grid = Vec::with_capacity(word.len());
        let mut occurrences = vec![Vec::new(); n];
        for (pos, &i) in word.iter().enumerate() {
            let prev = prefixes.last().expect("nonempty");
            let beta = prev.apply_root(&rs.simple_root(i));
            if !RootSystem::is_positive(&beta) {
                return Err(Error::internal("β of a reduced word is not positive"));
            }
            betas.push(beta);
            occurrences[i].push(pos);
            grid.push((i, occurrences[i].len()));
            let next = prev.mul_simple(rs, i);
            prefixes.push(next);
        }
        let g = BetaGrid {
            word: word.to_vec(),
            betas,
            grid,
            occurrences,
            prefixes,
        };
        g.check_reflection_factorization(rs)?;
        Ok(g)
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.occurrences.len()
    }

    pub fn element(&self) -> &WeylElement {
        self.prefixes.last().expect("prefixes start with the identity")
    }

    /// `s_𝔯`: number of occurrences of `s`.
    pub fn count(&self, s: usize) -> usize {
        self.occurrences[s].len()
    }

    /// Indices that occur in the word, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.rank()).filter(|&s| self.count(s) > 0).collect()
    }

    /// Position of `(s, t)`, with `1 ≤ t ≤ s_𝔯`.
    pub fn pos(&self, s: usize, t: usize) -> usize {
        self.occurrences[s][t - 1]
    }

    /// `ω_{s,t}`: the prefix ending at the `t`-th occurrence of `s`; `ω_{s,0} = e`.
    pub fn omega_st(&self, s: usize, t: usize) -> &WeylElement {
        if t == 0 {
            &self.prefixes[0]
        } else {
            &self.prefixes[self.pos(s, t) + 1]
        }
    }

    /// `p̄(j, pos)`: occurrences of `j` strictly before `pos`.
    pub fn occurrences_before(&self, j: usize, pos: usize) -> usize {
        self.occurrences[j].iter().take_while(|&&p| p < pos).count()
    }

    /// Checks `σ_{β_r} ⋯ σ_{β_1} = ω`.
    pub fn check_reflection_factorization(&self, rs: &RootSystem) -> Result<()> {
        let mut p = linalg::identity(rs.rank());
        for beta in &self.betas {
            p = linalg::mat_mul(&root_reflection(rs, beta), &p);
        }
        if &p != self.element().root_matrix() {
            return Err(Error::internal("reflection factorization of ω failed"));
        }
        Ok(())
    }
}

/// Longest element of the parabolic subgroup on `levi`; `None` means all of W.
pub fn longest_in(rs: &RootSystem, levi: Option<&[usize]>) -> WeylElement {
    let idx: Vec<usize> = match levi {
        Some(l) => l.to_vec(),
        None => (0..rs.rank()).collect(),
    };
    let mut w = WeylElement::identity(rs.rank());
    while let Some(&i) = idx
        .iter()
        .find(|&&i| RootSystem::is_positive(&w.apply_root(&rs.simple_root(i))))
    {
        w = w.mul_simple(rs, i);
    }
    w
}

pub fn longest_element(rs: &RootSystem) -> WeylElement {
    longest_in(rs, None)
}

#[derive(Debug, Clone)]
pub struct ParabolicData {
    pub w0: WeylElement,
    pub w_levi: WeylElement,
    pub w_p: WeylElement,
}

fn check_levi(rs: &RootSystem, levi: &[usize]) -> Result<()> {
    if let Some(&i) = levi.iter().find(|&&i| i >= rs.rank()) {
        return Err(Error::input(format!("Levi index {} out of range", i + 1)));
    }
    Ok(())
}

/// `(ω₀, ω_L, ω^𝔭)` with `ω_L ω^𝔭 = ω₀`, so that `Φ(ω^𝔭)` is the nilradical.
///
/// Also checks `ω^𝔭 ω_{L*} = ω₀` for the dual Levi `L* = −ω₀(L)`; the two
/// orders agree when `L` is stable under `−ω₀`.
pub fn longest_and_parabolic(rs: &RootSystem, levi: &[usize]) -> Result<ParabolicData> {
    check_levi(rs, levi)?;
    let w0 = longest_element(rs);
    let w_levi = longest_in(rs, Some(levi));
    let w_p = w_levi.inverse(rs).mul(&w0);
    if w_levi.mul(&w_p) != w0 || w_p.length(rs) + w_levi.length(rs) != w0.length(rs) {
        return Err(Error::internal("ω_L ω^𝔭 = ω₀ failed"));
    }
    let dual: Vec<usize> = levi
        .iter()
        .map(|&i| {
            let img = w0.apply_root(&rs.simple_root(i));
            img.iter().position(|&x| x != 0).expect("nonzero root")
        })
        .collect();
    if w_p.mul(&longest_in(rs, Some(&dual))) != w0 {
        return Err(Error::internal("ω^𝔭 ω_L* = ω₀ failed"));
    }
    let nilradical: Vec<Vec<i64>> = rs
        .positive_roots
        .iter()
        .filter(|b| b.iter().enumerate().any(|(i, &x)| x != 0 && !levi.contains(&i)))
        .cloned()
        .collect();
    if w_p.phi_set(rs) != nilradical {
        return Err(Error::internal("Φ(ω^𝔭) differs from the nilradical roots"));
    }
    Ok(ParabolicData { w0, w_levi, w_p })
}

/// `w = w_L · w^L` with `w_L` in the Levi subgroup and `w^L` of minimal length.
pub fn coset_decompose(
    rs: &RootSystem,
    w: &WeylElement,
    levi: &[usize],
) -> Result<(WeylElement, WeylElement)> {
    check_levi(rs, levi)?;
    let mut rest = w.clone();
    let mut left = WeylElement::identity(rs.rank());
    loop {
        let inv = rest.inverse(rs);
        let descent = levi
            .iter()
            .copied()
            .find(|&i| RootSystem::is_negative(&inv.apply_root(&rs.simple_root(i))));
        match descent {
            Some(i) => {
                rest = WeylElement::simple(rs, i).mul(&rest);
                left = left.mul_simple(rs, i);
            }
            None => break,
        }
    }
    if &left.mul(&rest) != w || left.length(rs) + rest.length(rs) != w.length(rs) {
        return Err(Error::internal("coset decomposition is not length additive"));
    }
    Ok((left, rest))
}

/// Every reduced word of `w`, sorted.
pub fn all_reduced_words(rs: &RootSystem, w: &WeylElement) -> Vec<Vec<usize>> {
    fn go(
        rs: &RootSystem,
        w: &WeylElement,
        memo: &mut HashMap<WeylElement, Vec<Vec<usize>>>,
    ) -> Vec<Vec<usize>> {
        if w.is_identity() {
            return vec![Vec::new()];
        }
        if let Some(v) = memo.get(w) {
            return v.clone();
        }
        let mut out = Vec::new();
        for i in 0..rs.rank() {
            if RootSystem::is_negative(&w.apply_root(&rs.simple_root(i))) {
                for mut word in go(rs, &w.mul_simple(rs, i), memo) {
                    word.push(i);
                    out.push(word);
                }
            }
        }
        out.sort();
        memo.insert(w.clone(), out.clone());
        out
    }
    go(rs, w, &mut HashMap::new())
}

/// All elements of length `≤ max_len`, each with one reduced word.
pub fn elements_up_to_length(rs: &RootSystem, max_len: usize) -> Vec<(WeylElement, Vec<usize>)> {
    let mut seen: HashSet<WeylElement> = HashSet::new();
    let e = WeylElement::identity(rs.rank());
    seen.insert(e.clone());
    let mut layer = vec![(e, Vec::new())];
    let mut out = layer.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for (w, word) in &layer {
            for i in 0..rs.rank() {
                if !RootSystem::is_positive(&w.apply_root(&rs.simple_root(i))) {
                    continue;
                }
                let v = w.mul_simple(rs, i);
                if seen.insert(v.clone()) {
                    let mut wd = word.clone();
                    wd.push(i);
                    next.push((v, wd));
                }
            }
        }
        if next.is_empty() {
            break;
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KostantReport {
    pub group_order: usize,
    pub doubly_saturated: usize,
    pub all_inversion_sets_saturated: bool,
    pub bijection: bool,
}

pub const KOSTANT_RANK_GUARD: usize = 4;

/// Exhaustively checks that `w ↦ Φ_w` is a bijection onto doubly saturated subsets.
pub fn kostant_scan(rs: &RootSystem) -> Result<KostantReport> {
    if rs.rank() > KOSTANT_RANK_GUARD {
        return Err(Error::Refused(format!(
            "Kostant scan limited to rank ≤ {KOSTANT_RANK_GUARD}"
        )));
    }
    let roots = &rs.positive_roots;
    let n = roots.len();
    let index: HashMap<&Vec<i64>, usize> = roots.iter().enumerate().map(|(k, b)| (b, k)).collect();
    // sums[k]: pairs of positive roots adding up to root k, as a bit pair mask.
    let mut sums: Vec<Vec<u64>> = vec![Vec::new(); n];
    for i in 0..n {
        for j in i + 1..n {
            let s: Vec<i64> = roots[i].iter().zip(&roots[j]).map(|(a, b)| a + b).collect();
            if let Some(&k) = index.get(&s) {
                sums[k].push((1u64 << i) | (1u64 << j));
            }
        }
    }
    let closed = |mask: u64| {
        (0..n).all(|k| mask >> k & 1 == 1 || sums[k].iter().all(|&p| mask & p != p))
    };
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let is_doubly = |mask: u64| closed(mask) && closed(full & !mask);

    let elements = elements_up_to_length(rs, n);
    let mut images = HashSet::new();
    let mut all_sat = true;
    for (w, _) in &elements {
        let mask = w
            .phi_set(rs)
            .iter()
            .fold(0u64, |m, b| m | (1u64 << index[b]));
        all_sat &= is_doubly(mask);
        images.insert(mask);
    }
    let doubly = (0..=full).filter(|&m| is_doubly(m)).count();
    Ok(KostantReport {
        group_order: elements.len(),
        doubly_saturated: doubly,
        all_inversion_sets_saturated: all_sat,
        bijection: all_sat && images.len() == elements.len() && doubly == elements.len(),
    })
}

/// Type and reduced word of the maximal Grassmannian element for the `a × b` matrix algebra.
///
/// The type is `A_{a+b−1}` and the Levi omits `α_a`.
pub fn matrix_algebra_word(a: usize, b: usize) -> Result<(usize, Vec<usize>)> {
    if a == 0 || b == 0 {
        return Err(Error::input("matrix algebra sizes must be positive"));
    }
    let mut word = Vec::with_capacity(a * b);
    for j in 0..b {
        for k in (j..a + j).rev() {
            word.push(k);
        }
    }
    Ok((a + b - 1, word))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::CartanType;
    use proptest::prelude::*;

    #[test]
    fn reduced_word_counts() {
        let a3 = RootSystem::new("A3".parse().unwrap()).unwrap();
        let words = all_reduced_words(&a3, &longest_element(&a3));
        assert_eq!(words.len(), 16);
        assert!(words.iter().all(|w| WeylElement::from_word(&a3, w).unwrap() == longest_element(&a3)));
        let b2 = RootSystem::new("B2".parse().unwrap()).unwrap();
        assert_eq!(all_reduced_words(&b2, &longest_element(&b2)).len(), 2);
    }

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn apply_examples() {
        let a2 = rs("A2");
        let s1 = WeylElement::simple(&a2, 0);
        assert_eq!(s1.apply_root(&[1, 0]), vec![-1, 0]);
        assert_eq!(s1.apply_root(&[0, 1]), vec![1, 1]);
        assert_eq!(longest_element(&a2).apply_weight(&[1, 0]), vec![0, -1]);
    }

    #[test]
    fn length_examples() {
        let a2 = rs("A2");
        assert_eq!(length_and_reduced(&a2, &[0, 1, 0]).unwrap(), (3, true));
        assert_eq!(length_and_reduced(&a2, &[0, 0]).unwrap(), (0, false));
        let a3 = rs("A3");
        assert_eq!(
            length_and_reduced(&a3, &[0, 1, 2, 0, 1, 0]).unwrap(),
            (6, true)
        );
        assert!(length_and_reduced(&a2, &[2]).is_err());
    }

    #[test]
    fn phi_examples() {
        let a2 = rs("A2");
        assert!(WeylElement::identity(2).phi_set(&a2).is_empty());
        assert_eq!(WeylElement::simple(&a2, 0).phi_set(&a2), vec![vec![1, 0]]);
        assert_eq!(longest_element(&a2).phi_set(&a2).len(), 3);
    }

    #[test]
    fn beta_grid_examples() {
        let a2 = rs("A2");
        let g = BetaGrid::new(&a2, &[0, 1, 0]).unwrap();
        assert_eq!(g.betas, vec![vec![1, 0], vec![1, 1], vec![0, 1]]);
        assert_eq!(g.grid, vec![(0, 1), (1, 1), (0, 2)]);
        let g = BetaGrid::new(&a2, &[1]).unwrap();
        assert_eq!(g.betas, vec![vec![0, 1]]);
        let b2 = rs("B2");
        let g = BetaGrid::new(&b2, &[0, 1, 0, 1]).unwrap();
        let mut got = g.betas.clone();
        got.sort();
        let mut want = b2.positive_roots.clone();
        want.sort();
        assert_eq!(got, want);
        assert!(BetaGrid::new(&a2, &[0, 0]).is_err());
    }

    #[test]
    fn beta_sums_telescope() {
        for ct in CartanType::all_up_to(4) {
            let r = RootSystem::new(ct).unwrap();
            let w0 = longest_element(&r);
            let g = BetaGrid::new(&r, &w0.reduced_word(&r)).unwrap();
            for s in g.support() {
                let ls = r.fundamental_weight(s);
                let mut want = ls.clone();
                for (x, y) in want.iter_mut().zip(w0.apply_weight(&ls)) {
                    *x -= y;
                }
                let mut sum = vec![0; r.rank()];
                for t in 1..=g.count(s) {
                    for (x, y) in sum.iter_mut().zip(&g.betas[g.pos(s, t)]) {
                        *x += y;
                    }
                }
                assert_eq!(r.root_to_weight(&sum), want, "{ct} s={s}");
            }
        }
    }

    #[test]
    fn parabolic_examples() {
        let a2 = rs("A2");
        let p = longest_and_parabolic(&a2, &[]).unwrap();
        assert_eq!(p.w_p, p.w0);
        assert_eq!(p.w_p.length(&a2), 3);
        let p = longest_and_parabolic(&a2, &[0, 1]).unwrap();
        assert!(p.w_p.is_identity());
        let a3 = rs("A3");
        let p = longest_and_parabolic(&a3, &[0, 2]).unwrap();
        assert_eq!(p.w_p.length(&a3), 4);
    }

    #[test]
    fn coset_examples() {
        let a3 = rs("A3");
        let levi = [0, 2];
        let p = longest_and_parabolic(&a3, &levi).unwrap();
        let (wl, wp) = coset_decompose(&a3, &p.w0, &levi).unwrap();
        assert_eq!(wl, p.w_levi);
        assert_eq!(wp, p.w_p);
        let s1 = WeylElement::simple(&a3, 0);
        let (wl, wp) = coset_decompose(&a3, &s1, &levi).unwrap();
        assert_eq!(wl, s1);
        assert!(wp.is_identity());
        let a2 = rs("A2");
        let w = WeylElement::from_word(&a2, &[1, 0]).unwrap();
        let (wl, wp) = coset_decompose(&a2, &w, &[0]).unwrap();
        assert!(wl.is_identity());
        assert_eq!(wp, w);
    }

    #[test]
    fn kostant_small() {
        let r = kostant_scan(&rs("A1")).unwrap();
        assert_eq!((r.group_order, r.bijection), (2, true));
        let r = kostant_scan(&rs("A2")).unwrap();
        assert_eq!((r.group_order, r.doubly_saturated, r.bijection), (6, 6, true));
        let r = kostant_scan(&rs("B2")).unwrap();
        assert_eq!((r.group_order, r.bijection), (8, true));
        assert!(kostant_scan(&rs("A5")).is_err());
    }

    #[test]
    fn matrix_algebra_words() {
        for (a, b) in [(1, 1), (2, 2), (2, 1), (3, 2), (2, 4)] {
            let (n, word) = matrix_algebra_word(a, b).unwrap();
            assert_eq!(word.len(), a * b);
            let r = RootSystem::build(crate::cartan::Family::A, n).unwrap();
            let levi: Vec<usize> = (0..n).filter(|&i| i != a - 1).collect();
            let p = longest_and_parabolic(&r, &levi).unwrap();
            assert_eq!(WeylElement::from_word(&r, &word).unwrap(), p.w_p);
        }
    }

    #[test]
    fn minus_identity_exactly_outside_exceptions() {
        for ct in CartanType::all_up_to(8) {
            let r = RootSystem::new(ct).unwrap();
            let exc = match ct.family {
                crate::cartan::Family::A => ct.rank > 1,
                crate::cartan::Family::D => ct.rank % 2 == 1,
                crate::cartan::Family::E => ct.rank == 6,
                _ => false,
            };
            assert_eq!(longest_element(&r).is_minus_identity(), !exc, "{ct}");
        }
    }

    #[test]
    fn word_parsing() {
        assert_eq!(parse_word("1,2, 1").unwrap(), vec![0, 1, 0]);
        assert!(parse_word("").unwrap().is_empty());
        assert!(parse_word("0").is_err());
        assert!(parse_word("a").is_err());
        assert_eq!(format_word(&[0, 1, 0]), "1,2,1");
    }

    proptest! {
        #[test]
        fn betas_are_the_inversion_set(idx in 0usize..8, seed in proptest::collection::vec(0usize..4, 0..10)) {
            let types = CartanType::all_up_to(3);
            let ct = types[idx % types.len()];
            let r = RootSystem::new(ct).unwrap();
            let raw: Vec<usize> = seed.iter().map(|&i| i % ct.rank).collect();
            let w = WeylElement::from_word(&r, &raw).unwrap();
            let word = w.reduced_word(&r);
            prop_assert_eq!(word.len(), w.length(&r));
            prop_assert_eq!(WeylElement::from_word(&r, &word).unwrap(), w.clone());
            let g = BetaGrid::new(&r, &word).unwrap();
            let mut betas = g.betas.clone();
            betas.sort();
            let mut phi = w.phi_set(&r);
            phi.sort();
            prop_assert_eq!(betas, phi);
            prop_assert_eq!(w.mul(&w.inverse(&r)).is_identity(), true);
        }
    }
}
