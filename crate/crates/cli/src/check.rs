use std::time::Instant;

use idemgen::props::{has_2_hc, has_k_ut, has_road_closure, has_strong_k_ut, is_basic};
use idemgen::tsemi::{has_k_id, rank_k_map_reps, singular_part_is_idempotent_generated};
use idemgen::{Budget, Error, PermutationGroup, Transformation};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::{exit_for, json, load_group, resolve_budget, CheckArgs, PropertyArg, EXIT_INPUT, EXIT_OK};

struct Outcome {
    verdict: bool,
    witness: Option<Value>,
    extra: Map<String, Value>,
}

impl Outcome {
    fn new(verdict: bool, witness: Option<Value>) -> Self {
        Outcome {
            verdict,
            witness,
            extra: Map::new(),
        }
    }

    fn with(mut self, key: &str, value: Value) -> Self {
        self.extra.insert(key.to_string(), value);
        self
    }
}

pub fn property_name(p: PropertyArg) -> &'static str {
    match p {
        PropertyArg::Kut => "kut",
        PropertyArg::StrongKut => "strong-kut",
        PropertyArg::RoadClosure => "road-closure",
        PropertyArg::TwoId => "2id",
        PropertyArg::Kid => "kid",
        PropertyArg::Basic => "basic",
        PropertyArg::Houghton => "houghton",
    }
}

fn input_error(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

fn kid_for_t(group: &PermutationGroup, text: &str, ks: &[usize], budget: &Budget) -> Result<Outcome, Error> {
    let t = Transformation::parse(group.degree(), text)?;
    if let Some(&k) = ks.iter().find(|&&k| k != t.rank()) {
        return Err(Error::RankMismatch {
            expected: k,
            found: t.rank(),
        });
    }
    let r = singular_part_is_idempotent_generated(group, &t, budget)?;
    let witness = (!r).then(|| json!({"t": t.to_text()}));
    Ok(Outcome::new(r, witness)
        .with("k", json!(t.rank()))
        .with("t", json!(t.to_text())))
}

fn kid_all_t(group: &PermutationGroup, k: usize, budget: &Budget) -> Result<Outcome, Error> {
    let reps = rank_k_map_reps(group, k, budget)?;
    let verdicts = reps
        .par_iter()
        .map(|t| singular_part_is_idempotent_generated(group, t, budget))
        .collect::<Result<Vec<bool>, Error>>()?;
    let failures: Vec<String> = reps
        .iter()
        .zip(&verdicts)
        .filter(|(_, ok)| !**ok)
        .map(|(t, _)| t.to_text())
        .collect();
    let witness = failures.first().map(|t| json!({"t": t}));
    Ok(Outcome::new(failures.is_empty(), witness)
        .with("representatives", json!(reps.len()))
        .with("failures", json!(failures)))
}

fn per_k(group: &PermutationGroup, args: &CheckArgs, k: usize, budget: &Budget) -> Result<Outcome, Error> {
    Ok(match args.property {
        PropertyArg::Kut => {
            let r = has_k_ut(group, k, budget)?;
            Outcome::new(r.verdict, json::kut_witness(&r))
        }
        PropertyArg::StrongKut => {
            let r = has_strong_k_ut(group, k, budget)?;
            Outcome::new(r.verdict, json::strong_witness(&r))
        }
        PropertyArg::Kid if args.all_t => kid_all_t(group, k, budget)?,
        PropertyArg::Kid => {
            let r = has_k_id(group, k, budget)?;
            let witness = r.witness.as_ref().map(|t| json!({"t": t.to_text()}));
            Outcome::new(r.verdict, witness).with("representatives", json!(r.representatives))
        }
        _ => unreachable!("property without k"),
    })
}

fn compute(group: &PermutationGroup, args: &CheckArgs, budget: &Budget) -> Result<Outcome, Error> {
    match args.property {
        PropertyArg::RoadClosure | PropertyArg::TwoId => {
            let r = has_road_closure(group, budget)?;
            let orbits: Vec<Value> = r.orbits.iter().map(json::orbit_summary).collect();
            Ok(Outcome::new(r.verdict, json::road_witness(&r)).with("orbits", json!(orbits)))
        }
        PropertyArg::Basic => {
            let r = is_basic(group)?;
            Ok(Outcome::new(r.verdict, json::basic_witness(&r)))
        }
        PropertyArg::Houghton => {
            if args.k.iter().any(|&k| k != 2) {
                return Err(input_error("houghton is decided for k = 2 only"));
            }
            let r = has_2_hc(group, budget)?;
            Ok(Outcome::new(r.verdict, json::houghton_witness(&r)).with("k", json!(2)))
        }
        PropertyArg::Kid if args.t.is_some() => kid_for_t(group, args.t.as_deref().unwrap(), &args.k, budget),
        PropertyArg::Kut | PropertyArg::StrongKut | PropertyArg::Kid => {
            if args.k.is_empty() {
                return Err(input_error(format!("--k is required for {}", property_name(args.property))));
            }
            let mut results = Vec::with_capacity(args.k.len());
            let mut verdict = true;
            let mut witness = None;
            for &k in &args.k {
                let o = per_k(group, args, k, budget)?;
                verdict &= o.verdict;
                if witness.is_none() && o.witness.is_some() {
                    witness = o.witness.clone().map(|mut w| {
                        w["k"] = json!(k);
                        w
                    });
                }
                let mut entry = Map::new();
                entry.insert("k".into(), json!(k));
                entry.insert("verdict".into(), json!(o.verdict));
                if let Some(w) = o.witness {
                    entry.insert("witness".into(), w);
                }
                entry.extend(o.extra);
                results.push(Value::Object(entry));
            }
            Ok(Outcome::new(verdict, witness).with("results", json!(results)))
        }
    }
}

pub fn run(args: CheckArgs) -> u8 {
    let budget = match resolve_budget(args.budget) {
        Ok(b) => b,
        Err(m) => {
            eprintln!("error: {m}");
            return EXIT_INPUT;
        }
    };
    let group = match load_group(&args.group) {
        Ok(g) => g,
        Err(e) => {
            eprintln!("error: {}: {e}", args.group);
            return exit_for(&e);
        }
    };
    let start = Instant::now();
    let outcome = match compute(&group, &args, &budget) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_for(&e);
        }
    };
    let mut report = Map::new();
    report.insert("schema_version".into(), json!(crate::SCHEMA_VERSION));
    report.insert("name".into(), json!(group.name().unwrap_or(&args.group)));
    report.insert("degree".into(), json!(group.degree()));
    report.insert("property".into(), json!(property_name(args.property)));
    report.insert("verdict".into(), json!(outcome.verdict));
    if let Some(w) = outcome.witness {
        report.insert("witness".into(), w);
    }
    report.extend(outcome.extra);
    report.insert("budget".into(), json::budget(&budget));
    report.insert("elapsed_ms".into(), json!(start.elapsed().as_millis() as u64));
    println!("{}", serde_json::to_string_pretty(&Value::Object(report)).expect("serialisable"));
    EXIT_OK
}
