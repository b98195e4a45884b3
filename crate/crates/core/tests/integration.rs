use nilcenter::cartan::{CartanType, RootSystem};
use nilcenter::centers::center_nilpotent;
use nilcenter::diophantine::{corank_direct, reduce, BlockConfig};
use nilcenter::lattice_forms::build_l0;
use nilcenter::linalg::Lattice;
use nilcenter::twisted_laurent::TwistedAlgebra;
use nilcenter::root_of_unity::pi_degree_for_word;
use nilcenter::weyl::{
    all_reduced_words, elements_up_to_length, longest_element, parse_word, BetaGrid, WeylElement,
};
use proptest::prelude::*;

fn rs(name: &str) -> RootSystem {
    RootSystem::new(name.parse::<CartanType>().unwrap()).unwrap()
}

fn longest_word(name: &str) -> (RootSystem, Vec<usize>) {
    let r = rs(name);
    let w = longest_element(&r).reduced_word(&r);
    (r, w)
}

fn sorted(v: Vec<&str>) -> Vec<String> {
    let mut v: Vec<String> = v.into_iter().map(String::from).collect();
    v.sort();
    v
}

#[test]
fn weyl_group_orders() {
    for (name, order, roots) in [
        ("A3", 24, 6),
        ("B3", 48, 9),
        ("C3", 48, 9),
        ("G2", 12, 6),
        ("D4", 192, 12),
        ("F4", 1152, 24),
    ] {
        let r = rs(name);
        assert_eq!(elements_up_to_length(&r, 64).len(), order, "{name}");
        assert_eq!(longest_element(&r).length(&r), roots, "{name}");
    }
}

#[test]
fn published_longest_centers() {
    for (name, expected) in [
        ("A3", vec!["C1*C3", "C2"]),
        ("A4", vec!["C1*C4", "C2*C3"]),
        ("B2", vec!["C1", "C2"]),
        ("G2", vec!["C1", "C2"]),
        ("D4", vec!["C1", "C2", "C3", "C4"]),
        ("E6", vec!["C1*C6", "C2", "C3*C5", "C4"]),
    ] {
        let (r, w) = longest_word(name);
        let c = center_nilpotent(&r, &w).unwrap();
        assert_eq!(sorted(c.rendered()), sorted(expected), "{name}");
    }
}

#[test]
fn d5_longest_center() {
    let (r, w) = longest_word("D5");
    let c = center_nilpotent(&r, &w).unwrap();
    assert_eq!(c.dimension, 4);
    assert!(c.rendered().contains(&"C4*C5"));
}

#[test]
fn center_independent_of_reduced_word() {
    let (r, _) = longest_word("A3");
    let w0 = longest_element(&r);
    let words = all_reduced_words(&r, &w0);
    let first = sorted(center_nilpotent(&r, &words[0]).unwrap().rendered());
    for w in &words[1..] {
        assert_eq!(sorted(center_nilpotent(&r, w).unwrap().rendered()), first);
    }
}

#[test]
fn block_reductions_preserve_corank() {
    for (a, b, c) in [(1, 1, 1), (3, 1, 5), (4, 2, 6), (5, 3, 2), (2, 7, 3)] {
        let cfg = BlockConfig::all_plus(a, b, c).unwrap();
        let red = reduce(&cfg).unwrap();
        assert_eq!(red.corank, corank_direct(&cfg), "{cfg}");
        assert!(red.steps.len() < a + b + c, "{cfg}");
    }
}

#[test]
fn pi_degree_of_longest_a3() {
    let (r, w) = longest_word("A3");
    let rep = pi_degree_for_word(&r, &w, 5).unwrap();
    // rank of the form is 6 − 2, so the PI degree is 5².
    assert_eq!(rep.pi_degree, 25.into());
}

fn element_strategy() -> impl Strategy<Value = (String, Vec<usize>)> {
    let names = ["A2", "A3", "B2", "B3", "C3", "G2"];
    (0..names.len(), proptest::collection::vec(0usize..3, 0..10)).prop_map(move |(k, raw)| {
        let name = names[k];
        let r = rs(name);
        let letters: Vec<usize> = raw.into_iter().map(|i| i % r.rank()).collect();
        let w = WeylElement::from_word(&r, &letters).unwrap();
        (name.to_string(), w.reduced_word(&r))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn generators_are_engine_central((name, word) in element_strategy()) {
        let r = rs(&name);
        let grid = BetaGrid::new(&r, &word).unwrap();
        let alg = TwistedAlgebra::new(build_l0(&r, &grid));
        let c = center_nilpotent(&r, &word).unwrap();
        for z in c.z_lattice() {
            prop_assert!(alg.engine_is_central(&z, 0));
        }
    }

    #[test]
    fn center_rank_matches_kernel_rank((name, word) in element_strategy()) {
        let r = rs(&name);
        let grid = BetaGrid::new(&r, &word).unwrap();
        let alg = TwistedAlgebra::new(build_l0(&r, &grid));
        let c = center_nilpotent(&r, &word).unwrap();
        prop_assert_eq!(c.dimension + alg.skew().rank(), word.len());
        let z = Lattice::from_generators(word.len(), &c.z_lattice()).unwrap();
        prop_assert_eq!(z.rank(), c.dimension);
    }

    #[test]
    fn word_choice_does_not_change_center((name, word) in element_strategy()) {
        let r = rs(&name);
        let w = WeylElement::from_word(&r, &word).unwrap();
        let words = all_reduced_words(&r, &w);
        let base = sorted(center_nilpotent(&r, &words[0]).unwrap().rendered());
        for other in words.iter().take(6) {
            prop_assert_eq!(sorted(center_nilpotent(&r, other).unwrap().rendered()), base.clone());
        }
    }
}

#[test]
fn parse_word_roundtrip() {
    assert_eq!(parse_word("1,2,1").unwrap(), vec![0, 1, 0]);
    assert!(parse_word("0").is_err());
}
