//! `obc`: normal forms, bases and verification reports for the affine
//! oriented Brauer-Clifford supercategory.

use std::io::Write;
use std::process::ExitCode;
use std::sync::Arc;

use brauer_clifford::engine::cyclotomic::{parse_univariate, render_univariate};
use brauer_clifford::engine::relations::check_in_contexts;
use brauer_clifford::engine::{compute_g, defining_relations, hom_basis, Morphism, Relation};
use brauer_clifford::schurweyl::coefficients::{coefficient_matrix, degree_zero_inputs, rank_report};
use brauer_clifford::schurweyl::linalg::SuperVector;
use brauer_clifford::schurweyl::modules::{QModule, TensorModule, Trivial};
use brauer_clifford::schurweyl::psi::{psi_apply, relation_operator};
use brauer_clifford::schurweyl::sergeev::{dominance_check, even_grid, sergeev_eigenvalue, z_r};
use brauer_clifford::schurweyl::verma::{parse_blocks, parse_rationals, TruncatedVerma, Weight};
use brauer_clifford::tikz::{render_diagram, render_morphism};
use brauer_clifford::walled::{hom_dimension, relation_table, symbolic_delta, verify_presentation, RelationInstance};
use brauer_clifford::{BubblePolynomial, DeltaSpec, Orient, Word};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Parser)]
#[command(name = "obc", version, about = "Exact computations in the affine oriented Brauer-Clifford supercategory")]
struct Cli {
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<String>,
    /// Output format; JSON unless noted per command (compute-g prints text).
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tikz,
    Csv,
    Text,
}

#[derive(Args, Clone, Default)]
struct DeltaArgs {
    /// Bubble value `K=V` for odd `K`, e.g. `--delta 1=d1 --delta 3=0`.
    #[arg(long = "delta", value_name = "K=V")]
    delta: Vec<String>,
    /// Shorthand for `--delta 1=V`.
    #[arg(long = "delta1", value_name = "V")]
    delta1: Option<String>,
}

#[derive(Args, Clone)]
struct WeightArgs {
    /// Highest weight as comma-separated rationals.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "lambda_blocks")]
    lambda: Option<String>,
    /// Highest weight from block data `A,B,EPS:SIZES:GENERIC`, e.g. `0,1,0:4:1/3`.
    #[arg(long = "lambda-blocks", allow_hyphen_values = true)]
    lambda_blocks: Option<String>,
}

#[derive(Args, Clone)]
struct OptionalWeight {
    #[arg(long, allow_hyphen_values = true, conflicts_with = "lambda_blocks")]
    lambda: Option<String>,
    #[arg(long = "lambda-blocks", allow_hyphen_values = true)]
    lambda_blocks: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Normal form of a generator expression.
    Normalize {
        expr: String,
        #[command(flatten)]
        delta: DeltaArgs,
    },
    /// Normal form of `upper ∘ lower`.
    Compose {
        upper: String,
        lower: String,
        #[command(flatten)]
        delta: DeltaArgs,
    },
    /// Normal diagrams from `bottom` to `top` with fewer than `ell` black dots per strand.
    Basis {
        #[arg(long, default_value = "")]
        bottom: String,
        #[arg(long, default_value = "")]
        top: String,
        #[arg(long, default_value_t = 1)]
        ell: u32,
    },
    /// Check the defining relations in normal form and in random contexts.
    VerifyRelations {
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
    /// Check the walled Brauer-Clifford presentation under its diagram images.
    VerifyWalled {
        #[arg(long, default_value_t = 1)]
        r: usize,
        #[arg(long, default_value_t = 1)]
        t: usize,
        /// Monic polynomial in `t` for the g identity; repeatable.
        #[arg(long = "f", allow_hyphen_values = true)]
        f: Vec<String>,
        /// Also check that `f(x1)` and `g(xb1)` vanish modulo the cyclotomic ideal.
        #[arg(long)]
        cyclotomic: bool,
        /// Relation table in JSON; the built-in table otherwise.
        #[arg(long)]
        table: Option<String>,
        /// Largest exponent in the relation families indexed by a power.
        #[arg(long, default_value_t = 5)]
        max_power: u32,
        /// Print the relation table instead of checking it.
        #[arg(long)]
        dump_table: bool,
        #[command(flatten)]
        delta: DeltaArgs,
    },
    /// Check the defining relations as operators on `V^{⊗k} ⊗ M`.
    VerifySchurweyl {
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// `trivial`, `v`, `v<m>` for `V^{⊗m}`, or `verma` (with a weight).
        #[arg(long, default_value = "trivial")]
        module: String,
        #[command(flatten)]
        weight: OptionalWeight,
        /// PBW degree cap of the truncated Verma module.
        #[arg(long, default_value_t = 3)]
        cap: usize,
    },
    /// Coefficient matrix of dot monomials on `w⁰`, its rank and leading rows.
    Rank {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        ell: u32,
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// The scalars `z_1, ..., z_r` of a weight.
    Z {
        #[arg(long)]
        r: usize,
        #[command(flatten)]
        weight: WeightArgs,
    },
    /// Sergeev eigenvalues on the highest weight vector against `z_k`.
    Sergeev {
        #[arg(long)]
        r: usize,
        #[command(flatten)]
        weight: WeightArgs,
    },
    /// The polynomial `g` for a monic `f`.
    ComputeG {
        #[arg(long = "f", allow_hyphen_values = true)]
        f: String,
        #[command(flatten)]
        delta: DeltaArgs,
    },
    /// Jacobian test for the map from block sizes to `(z_1, ..., z_{a+b})`.
    Dominance {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long, default_value_t = 0)]
        eps: u8,
        /// Generic block parameters, comma separated.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        generic: String,
        /// Grid points per block size.
        #[arg(long)]
        points: Option<usize>,
    },
    /// TikZ for the normal form of a generator expression.
    ExportTikz {
        expr: String,
        #[command(flatten)]
        delta: DeltaArgs,
    },
}

struct Outcome {
    body: String,
    pass: bool,
}

impl Outcome {
    fn json(v: Value, pass: bool) -> Outcome {
        Outcome { body: serde_json::to_string_pretty(&v).expect("json"), pass }
    }
}

type Res<T> = Result<T, String>;

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn seed() -> u64 {
    std::env::var("OBC_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(DEFAULT_SEED)
}

fn delta_spec(a: &DeltaArgs) -> Res<Option<DeltaSpec>> {
    if a.delta.is_empty() && a.delta1.is_none() {
        return Ok(None);
    }
    let mut d = DeltaSpec::new();
    let mut set = |k: u32, v: &str| -> Res<()> {
        if k % 2 == 0 {
            return Err(format!("bubble index {} is even; even bubbles vanish", k));
        }
        d.set(k, BubblePolynomial::parse(v).map_err(err)?);
        Ok(())
    };
    if let Some(v) = &a.delta1 {
        set(1, v)?;
    }
    for kv in &a.delta {
        let (k, v) = kv.split_once('=').ok_or_else(|| format!("expected K=V, got {:?}", kv))?;
        set(k.trim().parse().map_err(|_| format!("bad bubble index {:?}", k))?, v)?;
    }
    Ok(Some(d))
}

fn weight(w: &WeightArgs) -> Res<Weight> {
    match (&w.lambda, &w.lambda_blocks) {
        (Some(l), _) => Ok(Weight::new(parse_rationals(l).map_err(err)?)),
        (None, Some(b)) => parse_blocks(b).map_err(err),
        (None, None) => Err("give --lambda or --lambda-blocks".into()),
    }
}

fn word(s: &str) -> Res<Word> {
    Word::parse(s).map_err(err)
}

fn normal(expr: &str, d: &DeltaArgs) -> Res<Morphism> {
    let m = Morphism::parse(expr).map_err(err)?;
    Ok(match delta_spec(d)? {
        Some(spec) => m.specialize(&spec),
        None => m,
    })
}

fn morphism_out(m: &Morphism, f: Format) -> Outcome {
    match f {
        Format::Tikz => Outcome { body: render_morphism(m), pass: true },
        Format::Text => Outcome { body: m.to_string(), pass: true },
        _ => Outcome::json(m.to_json(), true),
    }
}

fn walled_shape(w: &Word) -> Option<(usize, usize)> {
    let t = w.0.iter().take_while(|o| **o == Orient::Down).count();
    w.0[t..].iter().all(|o| *o == Orient::Up).then_some((w.len() - t, t))
}

/// A relation applied to every input of PBW degree zero of a truncated Verma
/// module; higher degrees would leave the truncation.
fn relation_on_lowest_degree(rel: &Relation, m: &TruncatedVerma) -> Res<bool> {
    let drawings = rel.drawings().map_err(err)?;
    let bottom = drawings[0].1.bottom.clone();
    for idx in degree_zero_inputs(&bottom, m) {
        let u = SuperVector::basis(idx);
        let mut acc = SuperVector::zero();
        for (c, d) in &drawings {
            acc.add_scaled(&psi_apply(d, m, &u).map_err(err)?, c);
        }
        if !acc.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn run(cli: &Cli) -> Res<Outcome> {
    let fmt = cli.format.unwrap_or(Format::Json);
    match &cli.command {
        Command::Normalize { expr, delta } => Ok(morphism_out(&normal(expr, delta)?, fmt)),
        Command::ExportTikz { expr, delta } => Ok(morphism_out(&normal(expr, delta)?, Format::Tikz)),
        Command::Compose { upper, lower, delta } => {
            let m = normal(upper, delta)?.compose(&normal(lower, delta)?).map_err(err)?;
            let m = match delta_spec(delta)? {
                Some(spec) => m.specialize(&spec),
                None => m,
            };
            Ok(morphism_out(&m, fmt))
        }
        Command::Basis { bottom, top, ell } => {
            let (b, t) = (word(bottom)?, word(top)?);
            let basis = hom_basis(&b, &t, *ell).map_err(err)?;
            if fmt == Format::Tikz {
                let body = basis.iter().map(render_diagram).collect::<Vec<_>>().join("\n\n");
                return Ok(Outcome { body, pass: true });
            }
            let mut v = json!({
                "bottom": b.ascii(),
                "top": t.ascii(),
                "ell": ell,
                "count": basis.len(),
                "diagrams": basis.iter().map(|d| d.to_json()).collect::<Vec<_>>(),
            });
            let mut pass = true;
            if b == t {
                if let Some((r, tt)) = walled_shape(&b) {
                    let expected = hom_dimension(r, tt, *ell);
                    v["hom_dimension"] = json!(expected);
                    pass = expected == basis.len() as u128;
                }
            }
            Ok(Outcome::json(v, pass))
        }
        Command::VerifyRelations { samples } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed());
            let mut rows = Vec::new();
            let mut pass = true;
            for rel in defining_relations() {
                let residual = rel.residual().map_err(err)?;
                let context = check_in_contexts(&rel, &mut rng, *samples).map_err(err)?;
                let ok = residual.is_zero() && context.is_none();
                pass &= ok;
                let mut row = json!({ "relation": rel.name, "result": if ok { "PASS" } else { "FAIL" }, "contexts": samples });
                if !residual.is_zero() {
                    row["residual"] = json!(residual.to_string());
                } else if let Some(m) = context {
                    row["residual_in_context"] = json!(m.to_string());
                }
                rows.push(row);
            }
            Ok(Outcome::json(json!({ "seed": seed(), "relations": rows, "all_pass": pass }), pass))
        }
        Command::VerifyWalled { r, t, f, cyclotomic, table, max_power, dump_table, delta } => {
            let tab: Vec<RelationInstance> = match table {
                Some(path) => serde_json::from_str(&std::fs::read_to_string(path).map_err(err)?).map_err(err)?,
                None => relation_table(*r, *t, *max_power),
            };
            if *dump_table {
                return Ok(Outcome::json(serde_json::to_value(&tab).map_err(err)?, true));
            }
            let d = delta_spec(delta)?.unwrap_or_else(|| symbolic_delta(2 * max_power + 1));
            let sources: Vec<String> = if f.is_empty() { vec!["t".into(), "t^2 - u".into()] } else { f.clone() };
            let fs = sources.iter().map(|s| parse_univariate(s, "t").map_err(err)).collect::<Res<Vec<_>>>()?;
            let rep = verify_presentation(*r, *t, &d, &tab, &fs, *cyclotomic);
            let pass = rep.all_pass();
            Ok(Outcome::json(serde_json::to_value(&rep).map_err(err)?, pass))
        }
        Command::VerifySchurweyl { n, module, weight: w, cap } => {
            if module == "verma" {
                let lam = weight(&WeightArgs { lambda: w.lambda.clone(), lambda_blocks: w.lambda_blocks.clone() })?;
                let m = TruncatedVerma::new(&lam, *cap);
                let mut rows = Vec::new();
                let mut pass = true;
                for rel in defining_relations() {
                    let ok = relation_on_lowest_degree(&rel, &m)?;
                    pass &= ok;
                    rows.push(json!({ "relation": rel.name, "result": if ok { "PASS" } else { "FAIL" } }));
                }
                let v = json!({ "n": lam.entries.len(), "module": module, "cap": cap, "module_dim": m.dim(), "inputs": "degree zero", "relations": rows, "all_pass": pass });
                return Ok(Outcome::json(v, pass));
            }
            let m: Arc<dyn QModule> = match module.as_str() {
                "trivial" => Arc::new(Trivial { n: *n }),
                "v" => Arc::new(TensorModule::v_power(*n, 1)),
                other => {
                    let k = other.strip_prefix('v').and_then(|k| k.parse::<usize>().ok()).ok_or_else(|| format!("unknown module {:?}", other))?;
                    Arc::new(TensorModule::v_power(*n, k))
                }
            };
            let mut rows = Vec::new();
            let mut pass = true;
            for rel in defining_relations() {
                let ok = relation_operator(&rel, m.as_ref()).map_err(err)?.is_zero();
                pass &= ok;
                rows.push(json!({ "relation": rel.name, "result": if ok { "PASS" } else { "FAIL" } }));
            }
            Ok(Outcome::json(json!({ "n": n, "module": module, "module_dim": m.dim(), "relations": rows, "all_pass": pass }), pass))
        }
        Command::Rank { r, ell, weight: w, cap } => {
            let lam = weight(w)?;
            let cap = cap.unwrap_or(r + 1);
            if fmt == Format::Csv {
                let cm = coefficient_matrix(*r, *ell, &lam, cap).map_err(err)?;
                let full = cm.rank() == cm.columns.len();
                return Ok(Outcome { body: cm.to_csv(), pass: full });
            }
            let rep = rank_report(*r, *ell, &lam, cap).map_err(err)?;
            let pass = rep.full_rank;
            Ok(Outcome::json(serde_json::to_value(&rep).map_err(err)?, pass))
        }
        Command::Z { r, weight: w } => {
            let lam = weight(w)?;
            let rows: Vec<Value> = (1..=*r).map(|k| json!({ "r": k, "z": z_r(k, &lam.entries).to_string() })).collect();
            Ok(Outcome::json(json!({ "lambda": lam.entries.iter().map(|x| x.to_string()).collect::<Vec<_>>(), "values": rows }), true))
        }
        Command::Sergeev { r, weight: w } => {
            let lam = weight(w)?;
            let mut rows = Vec::new();
            let mut pass = true;
            for k in 1..=*r {
                let z = z_r(k, &lam.entries);
                let e = sergeev_eigenvalue(k, &lam).map_err(err)?;
                let ok = e == brauer_clifford::GaussianRational::real(z.clone());
                pass &= ok;
                rows.push(json!({ "r": k, "eigenvalue": e.to_string(), "z": z.to_string(), "match": ok }));
            }
            Ok(Outcome::json(json!({ "lambda": lam.entries.iter().map(|x| x.to_string()).collect::<Vec<_>>(), "values": rows, "all_match": pass }), pass))
        }
        Command::ComputeG { f, delta } => {
            let coeffs = parse_univariate(f, "t").map_err(err)?;
            let d = delta_spec(delta)?.unwrap_or_else(|| DeltaSpec::formal(coeffs.len() as u32 + 1));
            let g = render_univariate(&compute_g(&coeffs, &d).map_err(err)?, "t");
            if cli.format == Some(Format::Json) {
                return Ok(Outcome::json(json!({ "f": render_univariate(&coeffs, "t"), "g": g }), true));
            }
            Ok(Outcome { body: g, pass: true })
        }
        Command::Dominance { a, b, eps, generic, points } => {
            let m = a + b;
            let pts = points.unwrap_or(2 * m + 1);
            let rep = dominance_check(*a, *b, *eps == 1, &parse_rationals(generic).map_err(err)?, &even_grid(m, pts)).map_err(err)?;
            let pass = rep.nonzero;
            Ok(Outcome::json(serde_json::to_value(&rep).map_err(err)?, pass))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            match &cli.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, format!("{}\n", out.body)) {
                        eprintln!("{}", json!({ "error": e.to_string() }));
                        return ExitCode::from(2);
                    }
                }
                None => {
                    let _ = writeln!(std::io::stdout(), "{}", out.body);
                }
            }
            if out.pass { ExitCode::SUCCESS } else { ExitCode::from(1) }
        }
        Err(e) => {
            eprintln!("{}", json!({ "error": e }));
            ExitCode::from(2)
        }
    }
}
