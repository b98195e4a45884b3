//! Coranks of the signed block matrices
//! `w([a,ε_a];[b,ε_b];[c,ε_c]) = I + P`, where `P` carries `ε_c I_c`, `ε_b I_b`
//! and `ε_a I_a` on its anti-diagonal blocks, and the Gaussian moves between them.

use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{self, IntMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Block {
    pub size: usize,
    /// `±1`; normalized to `+1` when the block is empty.
    pub sign: i8,
}

impl Block {
    fn new(size: usize, sign: i8) -> Self {
        Block {
            size,
            sign: if size == 0 { 1 } else { sign },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct BlockConfig {
    pub a: Block,
    pub b: Block,
    pub c: Block,
}

fn check_sign(e: i8) -> Result<i8> {
    if e == 1 || e == -1 {
        Ok(e)
    } else {
        Err(Error::input(format!("sign must be +1 or -1, got {e}")))
    }
}

impl BlockConfig {
    pub fn new(a: usize, ea: i8, b: usize, eb: i8, c: usize, ec: i8) -> Result<Self> {
        if a + b + c == 0 {
            return Err(Error::input("a + b + c must be at least 1"));
        }
        Ok(BlockConfig {
            a: Block::new(a, check_sign(ea)?),
            b: Block::new(b, check_sign(eb)?),
            c: Block::new(c, check_sign(ec)?),
        })
    }

    pub fn all_plus(a: usize, b: usize, c: usize) -> Result<Self> {
        Self::new(a, 1, b, 1, c, 1)
    }

    /// Parses signs written as `+,-,+`.
    pub fn parse_signs(s: &str) -> Result<[i8; 3]> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(Error::input(format!("expected three signs, got '{s}'")));
        }
        let mut out = [1i8; 3];
        for (o, p) in out.iter_mut().zip(&parts) {
            *o = match *p {
                "+" | "+1" | "1" => 1,
                "-" | "-1" => -1,
                _ => return Err(Error::input(format!("bad sign '{p}'"))),
            };
        }
        Ok(out)
    }

    pub fn dim(&self) -> usize {
        self.a.size + self.b.size + self.c.size
    }

    pub fn p(&self) -> usize {
        self.a.size + self.b.size
    }

    pub fn q(&self) -> usize {
        self.b.size + self.c.size
    }

    /// `(gcd(p, q), b mod gcd(p, q))`: the data preserved by every move.
    pub fn pq_invariants(&self) -> (usize, usize) {
        let g = self.p().gcd(&self.q());
        (g, if g == 0 { self.b.size } else { self.b.size % g })
    }

    pub fn sign_product(&self) -> i8 {
        self.a.sign * self.b.sign * self.c.sign
    }
}

fn sign_char(e: i8) -> char {
    if e > 0 {
        '+'
    } else {
        '-'
    }
}

impl fmt::Display for BlockConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "([{},{}];[{},{}];[{},{}])",
            self.a.size,
            sign_char(self.a.sign),
            self.b.size,
            sign_char(self.b.sign),
            self.c.size,
            sign_char(self.c.sign)
        )
    }
}

/// Rows are blocked `(c, b, a)` and columns `(a, b, c)`.
pub fn build_block_matrix(cfg: &BlockConfig) -> IntMatrix {
    let (a, b, c) = (cfg.a.size, cfg.b.size, cfg.c.size);
    let mut m = linalg::identity(cfg.dim());
    for k in 0..c {
        m[k][a + b + k] += cfg.c.sign as i64;
    }
    for k in 0..b {
        m[c + k][a + k] += cfg.b.sign as i64;
    }
    for k in 0..a {
        m[c + b + k][k] += cfg.a.sign as i64;
    }
    m
}

pub fn corank_direct(cfg: &BlockConfig) -> usize {
    let m = build_block_matrix(cfg);
    cfg.dim() - linalg::rank(&m)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Move {
    /// `a ≥ b + c`.
    ReduceA,
    /// `c ≥ a + b`.
    ReduceC,
    /// `b + c ≥ a > c`.
    ShrinkBWithA,
    /// `a + b ≥ c > a`.
    ShrinkBWithC,
}

impl Move {
    pub const ALL: [Move; 4] = [Move::ReduceA, Move::ReduceC, Move::ShrinkBWithA, Move::ShrinkBWithC];

    pub fn number(self) -> usize {
        match self {
            Move::ReduceA => 1,
            Move::ReduceC => 2,
            Move::ShrinkBWithA => 3,
            Move::ShrinkBWithC => 4,
        }
    }

    pub fn is_applicable(self, cfg: &BlockConfig) -> bool {
        let (a, b, c) = (cfg.a.size, cfg.b.size, cfg.c.size);
        match self {
            Move::ReduceA => a >= b + c,
            Move::ReduceC => c >= a + b,
            Move::ShrinkBWithA => b + c >= a && a > c,
            Move::ShrinkBWithC => a + b >= c && c > a,
        }
    }
}

pub fn applicable_moves(cfg: &BlockConfig) -> Vec<Move> {
    Move::ALL.into_iter().filter(|m| m.is_applicable(cfg)).collect()
}

pub fn apply_move(cfg: &BlockConfig, mv: Move) -> Result<BlockConfig> {
    if !mv.is_applicable(cfg) {
        return Err(Error::input(format!("move {} does not apply to {cfg}", mv.number())));
    }
    let (a, b, c) = (cfg.a.size, cfg.b.size, cfg.c.size);
    let (ea, eb, ec) = (cfg.a.sign, cfg.b.sign, cfg.c.sign);
    let out = match mv {
        Move::ReduceA => (a - b - c, ea, b, -ea * eb, c, -ea * ec),
        Move::ReduceC => (a, -ec * ea, b, -ec * eb, c - a - b, ec),
        Move::ShrinkBWithA => (a, -eb * ea, b - (a - c), eb, c, -eb * ec),
        Move::ShrinkBWithC => (a, -eb * ea, b - (c - a), eb, c, -eb * ec),
    };
    BlockConfig::new(out.0, out.1, out.2, out.3, out.4, out.5)
}

#[derive(Debug, Clone, Serialize)]
pub struct ReductionStep {
    #[serde(rename = "move")]
    pub mv: usize,
    pub config: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Reduction {
    pub start: String,
    pub steps: Vec<ReductionStep>,
    pub terminal: String,
    pub corank: usize,
}

/// Applies the first move (in printed order) that changes the configuration
/// until none does, then computes the corank directly.
pub fn reduce(cfg: &BlockConfig) -> Result<Reduction> {
    let mut cur = *cfg;
    let mut steps = Vec::new();
    loop {
        let mut next = None;
        for mv in applicable_moves(&cur) {
            let n = apply_move(&cur, mv)?;
            if n != cur {
                next = Some((mv, n));
                break;
            }
        }
        match next {
            Some((mv, n)) => {
                steps.push(ReductionStep {
                    mv: mv.number(),
                    config: n.to_string(),
                });
                cur = n;
            }
            None => break,
        }
    }
    Ok(Reduction {
        start: cfg.to_string(),
        steps,
        terminal: cur.to_string(),
        corank: corank_direct(&cur),
    })
}

/// Closed form for `b = 1` and all signs `+`.
pub fn b1_corank(a: usize, c: usize) -> Result<usize> {
    if a == 0 || c == 0 {
        return Err(Error::input("a and c must be at least 1"));
    }
    let (p, q) = (a + 1, c + 1);
    let delta = p.gcd(&q);
    let (x, y) = (p / delta, q / delta);
    Ok(if (x + y) % 2 == 0 { delta - 1 } else { 1 })
}

/// The configuration `(a, b+a−c, c)` with `a > c`, all signs `+`.
pub fn shifted_configuration(a: usize, b: usize, c: usize) -> Result<BlockConfig> {
    if a <= c {
        return Err(Error::input("the shifted configuration needs a > c"));
    }
    BlockConfig::all_plus(a, b + a - c, c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Independent oracle: `P` is a signed permutation `j ↦ σ(j)`; `I + P`
    /// has one kernel vector per cycle of length `L` with `(−1)^L ∏ε = 1`.
    fn corank_by_cycles(cfg: &BlockConfig) -> usize {
        let (a, b, c) = (cfg.a.size, cfg.b.size, cfg.c.size);
        let step = |j: usize| -> (usize, i64) {
            if j < a {
                (c + b + j, cfg.a.sign as i64)
            } else if j < a + b {
                (c + j - a, cfg.b.sign as i64)
            } else {
                (j - a - b, cfg.c.sign as i64)
            }
        };
        let n = cfg.dim();
        let mut seen = vec![false; n];
        let mut count = 0;
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let (mut len, mut sign, mut j) = (0u32, 1i64, s);
            while !seen[j] {
                seen[j] = true;
                len += 1;
                let (next, e) = step(j);
                sign *= e;
                j = next;
            }
            if (-1i64).pow(len) * sign == 1 {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn block_matrix_examples() {
        let cfg = BlockConfig::all_plus(1, 1, 1).unwrap();
        assert_eq!(
            build_block_matrix(&cfg),
            vec![vec![1, 0, 1], vec![0, 2, 0], vec![1, 0, 1]]
        );
        assert_eq!(build_block_matrix(&BlockConfig::all_plus(1, 0, 0).unwrap()), vec![vec![2]]);
        let cfg = BlockConfig::new(1, 1, 1, -1, 1, 1).unwrap();
        assert_eq!(build_block_matrix(&cfg)[1][1], 0);
    }

    #[test]
    fn corank_examples() {
        assert_eq!(corank_direct(&BlockConfig::all_plus(1, 1, 1).unwrap()), 1);
        assert_eq!(corank_direct(&BlockConfig::all_plus(2, 1, 2).unwrap()), 2);
        assert_eq!(corank_direct(&BlockConfig::all_plus(1, 1, 2).unwrap()), 1);
    }

    #[test]
    fn move_examples() {
        let cfg = BlockConfig::all_plus(3, 1, 1).unwrap();
        assert_eq!(
            apply_move(&cfg, Move::ReduceA).unwrap(),
            BlockConfig::new(1, 1, 1, -1, 1, -1).unwrap()
        );
        let cfg = BlockConfig::all_plus(1, 1, 3).unwrap();
        assert_eq!(
            apply_move(&cfg, Move::ReduceC).unwrap(),
            BlockConfig::new(1, -1, 1, -1, 1, 1).unwrap()
        );
        let cfg = BlockConfig::all_plus(2, 1, 1).unwrap();
        let out = apply_move(&cfg, Move::ReduceA).unwrap();
        assert_eq!(out.a.size, 0);
        assert_eq!(out.dim(), 2);
        assert!(apply_move(&cfg, Move::ReduceC).is_err());
    }

    #[test]
    fn b1_examples() {
        assert_eq!(b1_corank(1, 1).unwrap(), 1);
        assert_eq!(b1_corank(2, 2).unwrap(), 2);
        assert_eq!(b1_corank(1, 2).unwrap(), 1);
        assert!(b1_corank(0, 2).is_err());
    }

    #[test]
    fn b1_matches_direct_small() {
        for a in 1..=12 {
            for c in 1..=12 {
                let cfg = BlockConfig::all_plus(a, 1, c).unwrap();
                assert_eq!(b1_corank(a, c).unwrap(), corank_direct(&cfg), "a={a} c={c}");
            }
        }
    }

    #[test]
    fn reduction_terminates_and_preserves_corank() {
        let cfg = BlockConfig::all_plus(7, 3, 4).unwrap();
        let red = reduce(&cfg).unwrap();
        assert!(!red.steps.is_empty());
        assert_eq!(red.corank, corank_direct(&cfg));
    }

    #[test]
    fn shifted_configuration_signs() {
        let cfg = shifted_configuration(5, 1, 2).unwrap();
        let out = apply_move(&cfg, Move::ShrinkBWithA).unwrap();
        assert_eq!(out, BlockConfig::new(5, -1, 1, 1, 2, -1).unwrap());
        assert_eq!(corank_direct(&cfg), corank_direct(&out));
    }

    fn config() -> impl Strategy<Value = BlockConfig> {
        (0usize..=20, 0usize..=20, 0usize..=20, any::<[bool; 3]>())
            .prop_filter("nonempty", |(a, b, c, _)| a + b + c > 0)
            .prop_map(|(a, b, c, s)| {
                let e = |x: bool| if x { 1 } else { -1 };
                BlockConfig::new(a, e(s[0]), b, e(s[1]), c, e(s[2])).unwrap()
            })
    }

    proptest! {
        #[test]
        fn direct_matches_cycle_oracle(cfg in config()) {
            prop_assert_eq!(corank_direct(&cfg), corank_by_cycles(&cfg));
        }

        #[test]
        fn moves_preserve_corank_and_invariants(cfg in config()) {
            for mv in applicable_moves(&cfg) {
                let out = apply_move(&cfg, mv).unwrap();
                prop_assert_eq!(corank_direct(&out), corank_direct(&cfg));
                prop_assert_eq!(out.pq_invariants(), cfg.pq_invariants());
            }
        }

        #[test]
        fn corank_scales_with_common_factor(a in 0usize..6, b in 0usize..6, c in 0usize..6, k in 1usize..4) {
            prop_assume!(a + b + c > 0);
            let one = BlockConfig::all_plus(a, b, c).unwrap();
            let many = BlockConfig::all_plus(k * a, k * b, k * c).unwrap();
            prop_assert_eq!(corank_direct(&many), k * corank_direct(&one));
        }
    }
}
