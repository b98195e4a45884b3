//! Acceptance run: one line per criterion, nonzero exit if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use nilcenter::verify::{self, SuiteResult, Sweep};
use nilcenter::Result;
use rand::rngs::StdRng;
use rand::SeedableRng;

const SEED: u64 = 0x5eed_2024;

struct Outcome {
    passed: bool,
    detail: String,
}

fn merge(results: &[SuiteResult]) -> Outcome {
    let passed = results.iter().all(SuiteResult::passed);
    let detail = results
        .iter()
        .map(|r| {
            let mut s = format!("{}: {} checks, {} failures", r.name, r.checked, r.failures);
            if !r.notes.is_empty() {
                s.push_str(&format!(" [{}]", r.notes.join("; ")));
            }
            s
        })
        .collect::<Vec<_>>()
        .join(" | ");
    Outcome { passed, detail }
}

fn run(n: usize, title: &str, f: impl FnOnce() -> Result<Outcome>) -> bool {
    let start = Instant::now();
    let out = f().unwrap_or_else(|e| Outcome {
        passed: false,
        detail: format!("error: {e}"),
    });
    println!(
        "{} {n:>2}. {title} ({:.2?}) {}",
        if out.passed { "PASS" } else { "FAIL" },
        start.elapsed(),
        out.detail
    );
    out.passed
}

fn main() -> ExitCode {
    let mut rng = StdRng::seed_from_u64(SEED);
    let cases: Sweep = verify::sweep(3, 6).expect("sweep");
    let count: usize = cases.iter().map(|(_, w)| w.len()).sum();
    println!("sweep: {} root systems of rank ≤ 3, {count} elements of length 1..=6", cases.len());

    let mut ok = Vec::new();
    ok.push(run(1, "type A longest element, rank 1..8", || {
        Ok(merge(&[verify::type_a_longest(8)?]))
    }));
    ok.push(run(2, "ω₀ = −1 types, rank ≤ 8", || {
        Ok(merge(&[verify::minus_one_longest(8)?]))
    }));
    ok.push(run(3, "D5, D7, E6 longest element", || {
        Ok(merge(&[verify::d_and_e_longest()?]))
    }));
    ok.push(run(4, "a × b quantized matrices, 2 ≤ a,b ≤ 6", || {
        Ok(merge(&[verify::matrix_algebras(6, true)?]))
    }));
    ok.push(run(5, "b = 1 closed form and shifted configurations", || {
        Ok(merge(&[
            verify::b1_closed_form(40)?,
            verify::shifted_configurations(&mut rng.clone(), 50)?,
        ]))
    }));
    ok.push(run(6, "move soundness on 500 random configurations", || {
        Ok(merge(&[verify::move_soundness(&mut rng, 500)?]))
    }));
    ok.push(run(7, "engine oracle, box [−2,2]", || {
        Ok(merge(&[verify::engine_oracle(&cases, 2)?]))
    }));
    ok.push(run(8, "formula audit", || Ok(merge(&[verify::formula_audits(&cases, false)?]))));
    ok.push(run(9, "compatible pair", || Ok(merge(&[verify::compatible_pairs(&cases)?]))));
    ok.push(run(10, "PI degree oracle and m-th powers", || {
        Ok(merge(&[
            verify::pi_oracle(&mut rng, 200, &[3, 5, 7, 9, 15])?,
            verify::root_powers(&cases, &[3, 5, 7])?,
        ]))
    }));
    ok.push(run(11, "determinant relation det L̄ = ±2^{r−r₀} det Z", || {
        let literal = verify::determinant_relation(&cases, true)?;
        let general = verify::determinant_relation(&cases, false)?;
        let mut out = merge(&[literal, general.clone()]);
        out.passed &= general.passed();
        Ok(out)
    }));
    ok.push(run(12, "W-algebra, type A rank ≤ 3", || Ok(merge(&[verify::w_algebra(3, 2)?]))));
    ok.push(run(13, "double Schubert, A2 and A3", || {
        Ok(merge(&[verify::double_schubert(&["A2", "A3"], 2)?]))
    }));
    ok.push(run(14, "structure identities", || {
        let mut s = verify::structure(4, 3, 8)?;
        let (fails, unstable) = verify::unstable_levi_literal_failures(4)?;
        s.checked += 1;
        if fails > 0 {
            s.failures += 1;
            s.notes.push(format!(
                "ω^𝔭ω_L ≠ ω₀ for {fails} of {unstable} Levis not stable under −ω₀ (ω_L ω^𝔭 = ω₀ holds for all)"
            ));
        }
        Ok(merge(&[s]))
    }));

    let passed = ok.iter().filter(|&&b| b).count();
    println!("{passed}/{} criteria passed", ok.len());
    if passed == ok.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
