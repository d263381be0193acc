//! JSON renderings with 1-based points.

use idemgen::props::{
    BasicReport, HoughtonReport, KutReport, OrbitSummary, RoadReport, StrongKutReport,
};
use idemgen::{Budget, KSubset, SetPartition};
use serde_json::{json, Value};

pub fn budget(b: &Budget) -> Value {
    json!({
        "semigroup_cap": b.semigroup_cap,
        "partition_cap": b.partition_cap,
        "orbit_cap": b.orbit_cap,
        "singleton_edge_cap": b.singleton_edge_cap,
    })
}

pub fn kset(s: &KSubset) -> Value {
    json!(s.to_one_based())
}

pub fn partition(p: &SetPartition) -> Value {
    json!(p.to_one_based())
}

pub fn points(xs: &[usize]) -> Value {
    json!(xs.iter().map(|x| x + 1).collect::<Vec<_>>())
}

pub fn kut_witness(r: &KutReport) -> Option<Value> {
    r.witness
        .as_ref()
        .map(|w| json!({"kset": kset(&w.kset), "partition": partition(&w.partition)}))
}

pub fn strong_witness(r: &StrongKutReport) -> Option<Value> {
    r.witness
        .as_ref()
        .map(|w| json!({"tuple": points(&w.tuple), "partition": partition(&w.partition)}))
}

pub fn road_witness(r: &RoadReport) -> Option<Value> {
    r.witness.as_ref().map(|w| {
        json!({
            "orbit_rep": kset(&w.orbit_rep),
            "block_edges": w.block_edges.iter().map(kset).collect::<Vec<_>>(),
            "components": partition(&w.components),
            "singleton": w.singleton,
        })
    })
}

pub fn orbit_summary(o: &OrbitSummary) -> Value {
    json!({
        "rep": kset(&o.rep),
        "size": o.size,
        "edge_action_primitive": o.edge_action_primitive,
        "maximal_systems": o.maximal_systems,
        "singleton_tested": o.singleton_tested,
    })
}

pub fn basic_witness(r: &BasicReport) -> Option<Value> {
    r.witness.as_ref().map(|w| {
        json!({
            "q": w.q,
            "d": w.d,
            "orbit_reps": w.orbit_reps.iter().map(kset).collect::<Vec<_>>(),
            "binary_alphabet": w.binary_alphabet,
        })
    })
}

pub fn houghton_witness(r: &HoughtonReport) -> Option<Value> {
    r.witness
        .as_ref()
        .map(|w| json!({"partition": partition(&w.partition), "kset": kset(&w.kset)}))
}
