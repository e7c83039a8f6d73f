//! JSON report types. Every report carries `schema_version` and `command`;
//! the shapes are described by `docs/report.schema.json`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

pub type Timings = BTreeMap<String, f64>;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub r: usize,
    pub i: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StandardForm {
    pub holds: bool,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub command: String,
    pub input: String,
    pub field: String,
    pub nvars: usize,
    pub polynomial: String,
    pub hilbert_function: Vec<usize>,
    pub length: usize,
    pub socle_degree: usize,
    pub symmetric_decomposition: Vec<Vec<usize>>,
    pub e_vector: Vec<usize>,
    pub standard_form: StandardForm,
    pub tangent_dimension: usize,
    pub embedding_dimension: usize,
    pub unobstructed: bool,
    pub complete_intersection: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<Timings>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub holds: bool,
    pub trunc: usize,
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RaySumReport {
    pub schema_version: u32,
    pub command: String,
    pub field: String,
    pub nvars: usize,
    pub f: String,
    pub partial: String,
    pub d: usize,
    pub ray_sum: String,
    pub hilbert_f: Vec<usize>,
    pub hilbert_ray_sum: Vec<usize>,
    pub annihilator_identity: IdentityCheck,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<Timings>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Generator {
    pub constant: String,
    pub linear: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SupportPoint {
    pub point: Vec<String>,
    pub length: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FiberRow {
    pub lambda: String,
    pub length: usize,
    pub support: Vec<SupportPoint>,
    /// False when some coordinate's minimal polynomial has no root in the field.
    pub support_complete: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Flatness {
    pub status: String,
    /// `proven` when a theorem covers the family, else `monte-carlo`.
    pub pedigree: String,
    pub witness: Option<String>,
    pub fibers: Vec<FiberRow>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FiberStructure {
    pub lambda: String,
    pub holds: bool,
    pub length_f: usize,
    pub length_partial_f: usize,
    pub expected_total: usize,
    pub total_length: usize,
    pub roots: Vec<String>,
    pub expected_support: Vec<SupportPoint>,
    pub support: Vec<SupportPoint>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub schema_version: u32,
    pub command: String,
    pub field: String,
    pub nvars: usize,
    pub f: String,
    pub partial: String,
    pub d: usize,
    pub kind: String,
    pub ray_index: usize,
    pub nu: usize,
    pub generators: Vec<Generator>,
    pub samples: usize,
    pub seed: u64,
    pub flatness: Flatness,
    /// Present for lower families with `∂² ⌟ f = 0`.
    pub fiber_structure: Option<FiberStructure>,
    /// Why the fiber-structure check was skipped, if it was.
    pub fiber_structure_note: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<Timings>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Necessity {
    pub i: bool,
    pub j_squared: bool,
    pub i_squared_colon: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TangentPreserveReport {
    pub schema_version: u32,
    pub command: String,
    pub field: String,
    pub nvars: usize,
    pub f: String,
    pub partial: String,
    pub holds: bool,
    pub trivial_containment: bool,
    pub necessary: Necessity,
    pub trunc: usize,
    pub colength_i: usize,
    pub colength_j: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<Timings>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReproCase {
    pub suite: String,
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReproReport {
    pub schema_version: u32,
    pub command: String,
    pub suites: Vec<String>,
    pub seed: u64,
    pub passed: usize,
    pub failed: usize,
    pub cases: Vec<ReproCase>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<Timings>,
}
