use std::path::PathBuf;

use idemgen::rees::{graham_normal_form, parse_rms, GroupWithZero, ReesMatrixSemigroup0};
use idemgen::{Error, Permutation};
use serde_json::{json, Value};

use crate::{exit_for, resolve_budget, EXIT_INPUT, EXIT_OK, SCHEMA_VERSION};

fn perm_text(p: &Permutation) -> String {
    let images = p.images().iter().map(|&x| (x + 1).to_string());
    if p.degree() <= 9 {
        images.collect()
    } else {
        images.collect::<Vec<_>>().join(",")
    }
}

fn element(group: &GroupWithZero, g: usize) -> Value {
    json!(perm_text(group.element(g)))
}

fn one_based(xs: &[usize]) -> Vec<usize> {
    xs.iter().map(|x| x + 1).collect()
}

fn matrix(rms: &ReesMatrixSemigroup0) -> Vec<Vec<String>> {
    let m = rms.matrix();
    (0..m.rows())
        .map(|l| {
            (0..m.cols())
                .map(|i| m.get(l, i).map_or("0".to_string(), |g| perm_text(rms.group().element(g))))
                .collect()
        })
        .collect()
}

fn report(rms: &ReesMatrixSemigroup0) -> Result<Value, Error> {
    if !rms.is_regular() {
        return Err(Error::NotRegular);
    }
    let form = graham_normal_form(rms)?;
    let group = rms.group();
    let blocks: Vec<Value> = form
        .blocks
        .iter()
        .map(|b| {
            json!({
                "columns": one_based(&b.columns),
                "rows": one_based(&b.rows),
                "entries": b.entries.iter().map(|&g| element(group, g)).collect::<Vec<_>>(),
                "subgroup_order": b.subgroup.len(),
                "generates_group": b.subgroup.len() == group.order(),
            })
        })
        .collect();
    let connected = form.blocks.len() == 1;
    let generated = connected && form.blocks[0].subgroup.len() == group.order();
    Ok(json!({
        "schema_version": SCHEMA_VERSION,
        "group": {"degree": group.degree(), "order": group.order()},
        "rows": rms.row_count(),
        "cols": rms.column_count(),
        "regular": true,
        "connected": connected,
        "components": form.blocks.len(),
        "graham": {
            "column_multipliers": form.column_multipliers.iter().map(|&g| element(group, g)).collect::<Vec<_>>(),
            "row_multipliers": form.row_multipliers.iter().map(|&g| element(group, g)).collect::<Vec<_>>(),
            "column_order": one_based(&form.column_order),
            "row_order": one_based(&form.row_order),
            "tree_edges": form.tree_edges.iter().map(|&(l, i)| [l + 1, i + 1]).collect::<Vec<_>>(),
            "blocks": blocks,
            "normalized": matrix(&form.normalized),
        },
        "idempotent_generated": generated,
    }))
}

pub fn run(file: &PathBuf, budget: Option<usize>) -> u8 {
    let budget = match resolve_budget(budget) {
        Ok(b) => b,
        Err(m) => {
            eprintln!("error: {m}");
            return EXIT_INPUT;
        }
    };
    let text = match std::fs::read_to_string(file) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {}: {e}", file.display());
            return EXIT_INPUT;
        }
    };
    match parse_rms(&text, budget.semigroup_cap).and_then(|rms| report(&rms)) {
        Ok(v) => {
            println!("{}", serde_json::to_string_pretty(&v).expect("serialisable"));
            EXIT_OK
        }
        Err(e) => {
            eprintln!("error: {}: {e}", file.display());
            exit_for(&e)
        }
    }
}
