use nilcenter::cartan::{CartanType, RootSystem};
use nilcenter::centers::{
    center_w, delta_lattice, double_schubert_center, greedy_decomposition, schubert_window_algebra,
    validate_decomposition, CenterDescription,
};
use nilcenter::linalg::{self, Lattice};
use nilcenter::weyl::elements_up_to_length;

fn same_lattice(dim: usize, a: &[Vec<i64>], b: &[Vec<i64>]) -> bool {
    let la = Lattice::from_generators(dim, a).unwrap();
    let lb = Lattice::from_generators(dim, b).unwrap();
    a.iter().all(|v| lb.contains(v)) && b.iter().all(|v| la.contains(v)) && la.rank() == lb.rank()
}

fn engine_kernel(form: &[Vec<i64>]) -> Vec<Vec<i64>> {
    linalg::integer_kernel(form, form.len()).unwrap()
}

fn z_of(c: &CenterDescription) -> Vec<Vec<i64>> {
    c.z_lattice()
}

fn systems() -> Vec<RootSystem> {
    ["A1", "A2", "A3", "B2", "G2", "B3", "C3"]
        .iter()
        .map(|s| RootSystem::new(s.parse::<CartanType>().unwrap()).unwrap())
        .collect()
}

#[test]
fn w_center_equals_engine_kernel() {
    let mut checked = 0;
    for rs in systems() {
        for (_, word) in elements_up_to_length(&rs, 6) {
            if word.is_empty() {
                continue;
            }
            let spec = greedy_decomposition(&word);
            if !validate_decomposition(&rs, &spec).valid {
                continue;
            }
            for flip in [false, true] {
                let d = delta_lattice(&rs, &spec, flip).unwrap();
                let c = center_w(&rs, &spec).unwrap();
                let k = engine_kernel(d.form.entries());
                assert!(
                    same_lattice(d.form.dim(), &z_of(&c), &k),
                    "{} {:?}: {:?} vs {:?}",
                    rs.ctype,
                    spec.factors,
                    z_of(&c),
                    k
                );
            }
            checked += 1;
        }
    }
    assert!(checked > 20);
}

#[test]
fn double_schubert_equals_engine_kernel() {
    for rs in systems() {
        for (_, word) in elements_up_to_length(&rs, 5) {
            for a in 0..word.len() {
                let c = double_schubert_center(&rs, &word[..a], &word).unwrap();
                let (_, alg) = schubert_window_algebra(&rs, &word[..a], &word).unwrap();
                let k = engine_kernel(alg.skew().entries());
                assert!(
                    same_lattice(alg.dim(), &z_of(&c), &k),
                    "{} {:?} / {:?}",
                    rs.ctype,
                    &word[..a],
                    word
                );
            }
        }
    }
}

#[test]
fn root_of_unity_reports_over_sweep() {
    use nilcenter::root_of_unity::root_centrality_report;

    for rs in systems() {
        for (_, word) in elements_up_to_length(&rs, 6) {
            if word.is_empty() {
                continue;
            }
            for m in [3u64, 5, 7] {
                let rep = root_centrality_report(&rs, &word, m).unwrap();
                assert!(rep.consistent, "{} {:?} m={m}: {rep:?}", rs.ctype, word);
            }
        }
    }
}
