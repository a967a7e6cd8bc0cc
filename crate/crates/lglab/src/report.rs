//! Machine-readable reports. Every report embeds the tool version and the
//! convention constants, so stored results stay self-describing.

use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ToolInfo {
    pub name: String,
    pub version: String,
}

impl ToolInfo {
    pub fn current() -> ToolInfo {
        ToolInfo {
            name: "lglab".into(),
            version: env!("CARGO_PKG_VERSION").into(),
        }
    }
}

/// The conventions results depend on; fixed once and recorded everywhere.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct Conventions {
    /// The residue functional sends the hessian class to mu.
    pub residue_normalization: String,
    /// Eigenvalues of the u-linear connection part are spectrum + n.
    pub spectrum_shift: String,
    /// The one-variable Morse anchor fixing the connection convention.
    pub connection_anchor: String,
}

impl Conventions {
    pub fn current() -> Conventions {
        Conventions {
            residue_normalization: "lambda(hessian class) = mu".into(),
            spectrum_shift: "n (number of variables)".into(),
            connection_anchor: "A(u) = 3/2*u for x^2 on the line".into(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct JobEcho {
    pub command: String,
    pub poly: String,
    pub vars: Vec<String>,
    pub trunc_u: usize,
    pub deg_ladder: Vec<u32>,
    pub samples: Vec<String>,
    pub assume_tame: bool,
    pub seed: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct CrossCheck {
    pub name: String,
    pub computed: String,
    pub predicted: String,
    pub pass: bool,
}

impl CrossCheck {
    pub fn new(name: &str, computed: String, predicted: String) -> CrossCheck {
        let pass = computed == predicted;
        CrossCheck {
            name: name.into(),
            computed,
            predicted,
            pass,
        }
    }

    pub fn flag(name: &str, pass: bool, detail: String) -> CrossCheck {
        CrossCheck {
            name: name.into(),
            computed: detail,
            predicted: "pass".into(),
            pass,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct MilnorPayload {
    pub mu: usize,
    pub basis: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct KoszulPayload {
    pub dims: Vec<usize>,
    pub verified_at_dmax: u32,
    pub vanishing_verified: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct FibersPayload {
    pub ladder_used: Vec<u32>,
    pub samples: Vec<String>,
    /// dims[rung][sample][degree]
    pub dims: Vec<Vec<Vec<usize>>>,
    pub stabilized: Vec<bool>,
    pub verdict: String,
    pub growing_degrees: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ModulePayload {
    pub degree: usize,
    pub free_rank: usize,
    pub torsion: Vec<String>,
    pub u_torsion_orders: Vec<usize>,
    pub generic_rank: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct BasicuPayload {
    pub constant_dims: bool,
    pub free: bool,
    pub consistent: bool,
    pub discrepancies: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct FreenessPayload {
    pub fibers: FibersPayload,
    pub presentation_dmax: u32,
    pub modules: Vec<ModulePayload>,
    pub basicu: BasicuPayload,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct BrieskornPayload {
    pub rank: usize,
    pub basis: Vec<String>,
    /// `A(u)` row major, entries rendered as polynomials in `u`.
    pub connection: Vec<Vec<String>>,
    pub stabilized: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct PairingPayload {
    pub gram: Vec<Vec<String>>,
    pub det: String,
    pub symmetric: bool,
    /// Grid check result when the input is quasi-homogeneous.
    pub grid_checked: Option<bool>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct SpectrumPayload {
    pub weights: Vec<String>,
    pub alphas: Vec<String>,
    pub symmetric: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct Section5Payload {
    pub n: usize,
    pub d: usize,
    pub ranks: Vec<usize>,
    pub betti: Vec<u64>,
    pub euler_closed_form: i64,
    pub euler_recursion: i64,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct PredictPayload {
    pub tameness: String,
    pub tameness_reason: Option<String>,
    pub kouchnirenko_mu: Option<usize>,
    pub kouchnirenko_error: Option<String>,
    pub milnor_sum_ranks: Option<Vec<usize>>,
    pub section5: Option<Section5Payload>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct FullPayload {
    pub milnor: MilnorPayload,
    pub koszul: KoszulPayload,
    pub freeness: FreenessPayload,
    pub brieskorn: Option<BrieskornPayload>,
    pub pairing: Option<PairingPayload>,
    pub spectrum: Option<SpectrumPayload>,
    pub predict: PredictPayload,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct CorpusEntryResult {
    pub name: String,
    pub poly: String,
    pub passed: bool,
    pub failures: Vec<String>,
    pub cross_checks: Vec<CrossCheck>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct CorpusPayload {
    pub entries: Vec<CorpusEntryResult>,
    pub total: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Milnor(MilnorPayload),
    Koszul(KoszulPayload),
    Fibers(FibersPayload),
    Freeness(FreenessPayload),
    Brieskorn(BrieskornPayload),
    Pairing(PairingPayload),
    Spectrum(SpectrumPayload),
    Predict(PredictPayload),
    Report(Box<FullPayload>),
    Corpus(CorpusPayload),
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct Report {
    pub schema_version: u32,
    pub tool: ToolInfo,
    pub conventions: Conventions,
    pub timestamp_unix: u64,
    pub job: JobEcho,
    pub payload: Payload,
    pub cross_checks: Vec<CrossCheck>,
    pub ok: bool,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }
}
