//! Group-theoretic predicates: k-ut, strong k-ut, basicness, road closure and
//! Houghton graphs.

mod basic;
mod houghton;
mod kut;
mod road;
mod strong;

pub use basic::{is_basic, BasicReport, CartesianWitness};
pub use houghton::{has_2_hc, houghton_connected, houghton_graph, HoughtonReport, HoughtonWitness};
pub use kut::{has_k_ut, KutReport, KutWitness};
pub use road::{has_2_id, has_road_closure, OrbitSummary, RoadReport, RoadWitness};
pub use strong::{
    has_strong_k_ut, set_stabilisers_two_homogeneous, StrongKutReport, StrongKutWitness,
};

use crate::budget::Budget;
use crate::construct::Property;
use crate::error::{Error, Result};
use crate::perm::PermutationGroup;
use crate::tsemi::has_k_id;

pub(crate) fn require_transitive(group: &PermutationGroup) -> Result<()> {
    if group.is_transitive() {
        Ok(())
    } else {
        Err(Error::NotTransitive)
    }
}

/// The verdict for one manifest property.
pub fn evaluate(group: &PermutationGroup, property: Property, budget: &Budget) -> Result<bool> {
    Ok(match property {
        Property::Transitive => group.is_transitive(),
        Property::Primitive => group.is_primitive(),
        Property::Basic => is_basic(group)?.verdict,
        Property::RoadClosure | Property::TwoId => has_road_closure(group, budget)?.verdict,
        Property::TwoHc => has_2_hc(group, budget)?.verdict,
        Property::Kut(k) => has_k_ut(group, k, budget)?.verdict,
        Property::StrongKut(k) => has_strong_k_ut(group, k, budget)?.verdict,
        Property::Kid(k) => has_k_id(group, k, budget)?.verdict,
        Property::Homogeneous(k) => group.is_k_homogeneous(k),
    })
}
