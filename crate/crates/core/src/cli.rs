//! Command-line front end. Word indices are 1-based on the wire.

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::rngs::StdRng;
use rand::SeedableRng;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::cartan::{CartanType, RootSystem};
use crate::centers::{
    center_nilpotent, center_w, covariant_data, delta_lattice, double_schubert_center,
    greedy_decomposition, validate_decomposition, CenterDescription, DecompositionSpec, SchubertWindow,
};
use crate::diophantine::{self, applicable_moves, corank_direct, BlockConfig};
use crate::error::{Error, Result};
use crate::root_of_unity::{pi_degree_for_word, root_centrality_report};
use crate::twisted_laurent::formula_audit;
use crate::verify;
use crate::weyl::{longest_and_parabolic, longest_element, parse_word, BetaGrid};

pub const SCHEMA: u32 = 1;
pub const DEFAULT_SEED: u64 = 20_240_917;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "nilcenter", version, about = "Centers of quantized nilpotent algebras")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Element {
    /// Cartan type such as `A3`, `B2`, `E6`.
    #[arg(long = "type")]
    pub ctype: String,
    /// Reduced word, 1-based, comma separated.
    #[arg(long, conflicts_with_all = ["longest", "parabolic"])]
    pub word: Option<String>,
    /// Use a reduced word of the longest element.
    #[arg(long, conflicts_with = "parabolic")]
    pub longest: bool,
    /// Use `ω^𝔭` for the Levi spanned by these simple roots.
    #[arg(long)]
    pub parabolic: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Root data, β-sequence and grid of a word.
    Describe(Element),
    /// Center of the quasi-polynomial algebra of a word.
    Center(Element),
    /// The covariant elements `C̄_s`.
    Covariants(Element),
    /// Corank of a signed block matrix, with its move reduction.
    Corank {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        c: usize,
        #[arg(long, default_value = "+,+,+")]
        signs: String,
    },
    /// PI degree at an `m`-th root of unity.
    Pidegree {
        #[command(flatten)]
        element: Element,
        /// Order of the root of unity.
        #[arg(long)]
        m: u64,
    },
    /// Run the cross-check suites.
    Verify {
        /// One of centers, diophantine, engine, audit, root-of-unity,
        /// determinant, w-algebra, schubert, structure, or all.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 3)]
        max_rank: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Center of a double Schubert cell `wa < wc`.
    DoubleSchubert {
        /// Cartan type such as `A3`.
        #[arg(long = "type")]
        ctype: String,
        #[arg(long, default_value = "")]
        wa: String,
        #[arg(long)]
        wc: String,
    },
    /// Center of the algebra of the minors `Δ_{s,t}`.
    CenterW {
        /// Cartan type such as `A3`.
        #[arg(long = "type")]
        ctype: String,
        /// Factors separated by `;`, such as `1,2;1`.
        #[arg(long, conflicts_with = "word")]
        factors: Option<String>,
        /// A word split greedily into factors of distinct letters.
        #[arg(long)]
        word: Option<String>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Output {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Output {
                    code: 1,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let format = cli.format;
    match dispatch(cli.command) {
        Ok((value, ok)) => Output {
            code: if ok { 0 } else { 2 },
            stdout: render(&value, format),
            stderr: String::new(),
        },
        Err(e) => Output {
            code: match e {
                Error::Input(_) | Error::Refused(_) => 1,
                Error::Internal(_) => 2,
            },
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn render(value: &Value, format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(value).expect("serializable")),
        Format::Text => {
            let mut out = String::new();
            text(value, 0, &mut out);
            out
        }
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => Some(format!(
            "[{}]",
            a.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")
        )),
        Value::Array(a) if a.iter().all(|x| x.is_array()) => Some(
            a.iter()
                .filter_map(scalar)
                .collect::<Vec<_>>()
                .join(" "),
        ),
        _ => None,
    }
}

fn text(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        text(x, depth + 1, out);
                    }
                }
            }
        }
        Value::Array(a) => {
            for x in a {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        text(x, depth + 1, out);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
    }
}

fn envelope(command: &str, payload: Value) -> Value {
    let mut m = Map::new();
    m.insert("schema".into(), json!(SCHEMA));
    m.insert("command".into(), json!(command));
    if let Value::Object(p) = payload {
        m.extend(p);
    }
    Value::Object(m)
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn one_based(w: &[usize]) -> Vec<usize> {
    w.iter().map(|i| i + 1).collect()
}

fn root_system(ctype: &str) -> Result<RootSystem> {
    RootSystem::new(ctype.parse::<CartanType>()?)
}

fn resolve(e: &Element) -> Result<(RootSystem, Vec<usize>)> {
    let rs = root_system(&e.ctype)?;
    let word = if let Some(w) = &e.word {
        parse_word(w)?
    } else if e.longest {
        longest_element(&rs).reduced_word(&rs)
    } else if let Some(levi) = &e.parabolic {
        let levi = if levi.trim().is_empty() { Vec::new() } else { parse_word(levi)? };
        longest_and_parabolic(&rs, &levi)?.w_p.reduced_word(&rs)
    } else {
        return Err(Error::input("one of --word, --longest or --parabolic is required"));
    };
    if let Some(&i) = word.iter().find(|&&i| i >= rs.rank()) {
        return Err(Error::input(format!("letter {} exceeds the rank of {}", i + 1, rs.ctype)));
    }
    Ok((rs, word))
}

fn center_value(c: &CenterDescription) -> Value {
    to_value(c)
}

fn dispatch(cmd: Command) -> Result<(Value, bool)> {
    match cmd {
        Command::Describe(e) => {
            let (rs, word) = resolve(&e)?;
            let grid = BetaGrid::new(&rs, &word)?;
            let audit = formula_audit(&rs, &grid, false)?;
            if !audit.passed() {
                let bad: Vec<String> = audit
                    .checks
                    .iter()
                    .filter(|c| !c.passed())
                    .map(|c| format!("{}: {:?}", c.name, c.examples))
                    .collect();
                return Err(Error::internal(format!("formula audit mismatch: {}", bad.join("; "))));
            }
            let grid_labels: Vec<[usize; 2]> = grid.grid.iter().map(|&(s, t)| [s + 1, t]).collect();
            Ok((
                envelope(
                    "describe",
                    json!({
                        "type": rs.ctype.to_string(),
                        "rank": rs.rank(),
                        "cartan_matrix": rs.cartan,
                        "symmetrizers": rs.symmetrizers,
                        "positive_roots": rs.positive_roots.len(),
                        "word": one_based(&word),
                        "length": word.len(),
                        "betas": grid.betas,
                        "grid": grid_labels,
                        "support": one_based(&grid.support()),
                        "audit": { "families": audit.checks.len(), "pairs": audit.checked(), "mismatches": 0 },
                    }),
                ),
                true,
            ))
        }
        Command::Center(e) => {
            let (rs, word) = resolve(&e)?;
            let c = center_nilpotent(&rs, &word)?;
            let mut v = envelope("center", center_value(&c));
            v["type"] = json!(rs.ctype.to_string());
            v["word"] = json!(one_based(&word));
            Ok((v, true))
        }
        Command::Covariants(e) => {
            let (rs, word) = resolve(&e)?;
            let cov = covariant_data(&rs, &word)?;
            let ok = cov.iter().all(|c| c.certified);
            let items: Vec<Value> = cov
                .iter()
                .map(|c| {
                    json!({
                        "s": c.s + 1,
                        "weight": c.weight,
                        "root_coords": c.root_coords,
                        "z_exponents": c.z_exponents,
                        "certified": c.certified,
                    })
                })
                .collect();
            if !ok {
                return Err(Error::internal("a covariant failed its commutation certificate"));
            }
            Ok((
                envelope(
                    "covariants",
                    json!({ "type": rs.ctype.to_string(), "word": one_based(&word), "covariants": items }),
                ),
                true,
            ))
        }
        Command::Corank { a, b, c, signs } => {
            let [ea, eb, ec] = BlockConfig::parse_signs(&signs)?;
            let cfg = BlockConfig::new(a, ea, b, eb, c, ec)?;
            let corank = corank_direct(&cfg);
            let reduction = diophantine::reduce(&cfg)?;
            if reduction.corank != corank {
                return Err(Error::internal("move reduction changed the corank"));
            }
            let closed = if b == 1 && a > 0 && c > 0 && (ea, eb, ec) == (1, 1, 1) {
                Some(diophantine::b1_corank(a, c)?)
            } else {
                None
            };
            if closed.is_some_and(|k| k != corank) {
                return Err(Error::internal("closed form disagrees with the direct corank"));
            }
            let (g, class) = cfg.pq_invariants();
            let moves: Vec<usize> = applicable_moves(&cfg).iter().map(|m| m.number()).collect();
            Ok((
                envelope(
                    "corank",
                    json!({
                        "config": cfg.to_string(),
                        "dimension": cfg.dim(),
                        "corank": corank,
                        "closed_form": closed,
                        "applicable_moves": moves,
                        "pq": { "p": cfg.p(), "q": cfg.q(), "gcd": g, "b_class": class },
                        "reduction": to_value(&reduction),
                    }),
                ),
                true,
            ))
        }
        Command::Pidegree { element, m } => {
            let (rs, word) = resolve(&element)?;
            let rep = pi_degree_for_word(&rs, &word, m)?;
            let cent = root_centrality_report(&rs, &word, m)?;
            let mut v = envelope("pidegree", to_value(&rep));
            v["type"] = json!(rs.ctype.to_string());
            v["word"] = json!(one_based(&word));
            v["centrality"] = to_value(&cent);
            Ok((v, true))
        }
        Command::Verify { suite, max_rank, seed } => {
            if max_rank == 0 {
                return Err(Error::input("--max-rank must be at least 1"));
            }
            let mut rng = StdRng::seed_from_u64(seed);
            let results = verify::run_suite(&suite, max_rank, &mut rng)?;
            let ok = results.iter().all(|r| r.passed());
            Ok((
                envelope(
                    "verify",
                    json!({
                        "suite": suite,
                        "max_rank": max_rank,
                        "seed": seed,
                        "passed": ok,
                        "results": to_value(&results),
                    }),
                ),
                ok,
            ))
        }
        Command::DoubleSchubert { ctype, wa, wc } => {
            let rs = root_system(&ctype)?;
            let wa = if wa.trim().is_empty() { Vec::new() } else { parse_word(&wa)? };
            let wc = parse_word(&wc)?;
            let win = SchubertWindow::new(&rs, &wa, &wc)?;
            let c = double_schubert_center(&rs, &wa, &wc)?;
            let mut v = envelope("double-schubert", center_value(&c));
            v["type"] = json!(rs.ctype.to_string());
            v["wa"] = json!(one_based(&wa));
            v["wc"] = json!(one_based(&wc));
            v["window"] = json!(win.positions.iter().map(|p| p + 1).collect::<Vec<_>>());
            Ok((v, true))
        }
        Command::CenterW { ctype, factors, word } => {
            let rs = root_system(&ctype)?;
            let spec = match (factors, word) {
                (Some(f), _) => DecompositionSpec::parse(&f)?,
                (None, Some(w)) => greedy_decomposition(&parse_word(&w)?),
                (None, None) => return Err(Error::input("one of --factors or --word is required")),
            };
            let validation = validate_decomposition(&rs, &spec);
            if !validation.valid {
                return Err(Error::input(format!(
                    "invalid decomposition: {}",
                    validation.diagnostics.join("; ")
                )));
            }
            let lattice = delta_lattice(&rs, &spec, false)?;
            let c = center_w(&rs, &spec)?;
            let mut v = envelope("center-w", center_value(&c));
            v["type"] = json!(rs.ctype.to_string());
            v["factors"] = json!(spec.factors.iter().map(|f| one_based(f)).collect::<Vec<_>>());
            v["nabla_certificates"] = json!(lattice.nablas.len());
            Ok((v, true))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &str) -> Output {
        run(std::iter::once("nilcenter").chain(args.split_whitespace()))
    }

    fn json_of(out: &Output) -> Value {
        serde_json::from_str(&out.stdout).unwrap()
    }

    #[test]
    fn center_longest_a3() {
        let out = call("center --type A3 --longest");
        assert_eq!(out.code, 0, "{}", out.stderr);
        let v = json_of(&out);
        assert_eq!(v["schema"], 1);
        assert_eq!(v["dimension"], 2);
        let r: Vec<&str> = v["generators"]
            .as_array()
            .unwrap()
            .iter()
            .map(|g| g["rendered"].as_str().unwrap())
            .collect();
        assert_eq!(r, vec!["C1*C3", "C2"]);
    }

    #[test]
    fn corank_example() {
        let v = json_of(&call("corank --a 1 --b 1 --c 1"));
        assert_eq!(v["corank"], 1);
        assert_eq!(v["closed_form"], 1);
    }

    #[test]
    fn conflicting_selectors_exit_one() {
        let out = call("center --type A3 --longest --word 1,2");
        assert_eq!(out.code, 1);
        assert!(call("center --type A3").code == 1);
        assert!(call("center --type A3 --word 1,1").stderr.contains("reduced"));
    }

    #[test]
    fn text_format() {
        let out = call("center --type A2 --word 1,2,1 --format text");
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("dimension: 1"));
    }
}
