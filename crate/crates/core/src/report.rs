//! The verification report written as `report.json`. Field order is the
//! declaration order below, so reports diff cleanly between runs.

use num_bigint::BigUint;
use serde::{Serialize, Serializer};

use crate::graph::{AugmentVariant, StarStatus};

/// Group orders are written as decimal strings.
pub fn serialize_biguint<S: Serializer>(n: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&n.to_string())
}

fn serialize_opt_biguint<S: Serializer>(n: &Option<BigUint>, s: S) -> Result<S::Ok, S::Error> {
    match n {
        Some(n) => s.serialize_str(&n.to_string()),
        None => s.serialize_none(),
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Frucht graph, or its complement when the star condition fails.
    #[default]
    Basic,
    /// Frucht graph with pendant paths attached to every node.
    Full,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
    /// Data sufficient to reproduce a failure, or supporting numbers on a pass.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<serde_json::Value>,
}

impl CheckRecord {
    pub fn new(name: &str, pass: bool, detail: impl Into<String>) -> Self {
        CheckRecord {
            name: name.to_string(),
            status: if pass { CheckStatus::Pass } else { CheckStatus::Fail },
            detail: detail.into(),
            witness: None,
        }
    }

    pub fn not_applicable(name: &str, detail: impl Into<String>) -> Self {
        CheckRecord {
            name: name.to_string(),
            status: CheckStatus::NotApplicable,
            detail: detail.into(),
            witness: None,
        }
    }

    pub fn with_witness(mut self, witness: serde_json::Value) -> Self {
        self.witness = Some(witness);
        self
    }

    pub fn failed(&self) -> bool {
        self.status == CheckStatus::Fail
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GroupSummary {
    pub spec: String,
    #[serde(serialize_with = "serialize_biguint")]
    pub order: BigUint,
    pub generator_count: usize,
    pub minimum_generator_count: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Construction {
    /// Point or segment for groups of order at most two.
    SpecialCase,
    Frucht,
    FruchtComplement,
    FruchtAugmented,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GraphSummary {
    pub construction: Construction,
    pub augment_variant: Option<AugmentVariant>,
    /// Size of the gadget graph before any complement or augmentation.
    pub frucht_nodes: Option<usize>,
    pub frucht_links: Option<usize>,
    pub nodes: usize,
    pub links: usize,
    pub condition_star: StarStatus,
    pub exceptional_pairs: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PolytopeSummary {
    pub vertex_count: usize,
    pub ambient_dimension: usize,
    pub affine_dimension: usize,
    pub diameter: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AutOrders {
    #[serde(serialize_with = "serialize_biguint")]
    pub group: BigUint,
    #[serde(serialize_with = "serialize_opt_biguint")]
    pub graph: Option<BigUint>,
    #[serde(serialize_with = "serialize_biguint")]
    pub skeleton: BigUint,
    /// Order of the lifted group; absent for the point and the segment.
    #[serde(serialize_with = "serialize_opt_biguint")]
    pub image_f: Option<BigUint>,
}

/// The five properties of the main result, in order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TheoremChecks {
    pub property_i: CheckRecord,
    pub property_ii: CheckRecord,
    pub property_iii: CheckRecord,
    pub property_iv: CheckRecord,
    pub property_v: CheckRecord,
}

impl TheoremChecks {
    pub fn all(&self) -> [&CheckRecord; 5] {
        [
            &self.property_i,
            &self.property_ii,
            &self.property_iii,
            &self.property_iv,
            &self.property_v,
        ]
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub mode: Mode,
    pub seed: u64,
    pub group: GroupSummary,
    pub graph: GraphSummary,
    pub polytope: PolytopeSummary,
    pub aut_orders: AutOrders,
    pub checks: TheoremChecks,
    pub supporting: Vec<CheckRecord>,
    pub passed: bool,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Every check that failed, theorem properties first.
    pub fn failures(&self) -> Vec<&CheckRecord> {
        self.checks
            .all()
            .into_iter()
            .chain(&self.supporting)
            .filter(|c| c.failed())
            .collect()
    }
}
