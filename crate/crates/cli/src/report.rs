//! Report documents. Field order is the declaration order, so serialization is deterministic.

use serde::{Deserialize, Serialize};

use hermsig::rational::format_rational;
use hermsig::realform::{RealFormData, RootClass};
use hermsig::rootsys::{RootSystem, Weight};
use hermsig::sigformula::SignatureReport;

use crate::case::CaseSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Agreement {
    Agree,
    Disagree,
    NotApplicable,
}

impl Agreement {
    pub fn as_str(self) -> &'static str {
        match self {
            Agreement::Agree => "agree",
            Agreement::Disagree => "disagree",
            Agreement::NotApplicable => "not-applicable",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseEcho {
    pub group: String,
    pub weight: String,
    pub basis: String,
    pub run_oracles: bool,
    pub dim_cap: u128,
    pub highest_weight_simple: Vec<String>,
    pub highest_weight_fundamental: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimsSummary {
    pub g: usize,
    pub k: usize,
    pub s: usize,
    pub t: usize,
    pub a: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootCounts {
    pub imaginary_compact: usize,
    pub imaginary_noncompact: usize,
    pub complex: usize,
    pub real: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealFormSummary {
    pub name: Option<String>,
    pub diagram: String,
    pub cartan_type: String,
    /// 1-based.
    pub involution: Vec<usize>,
    /// 1-based.
    pub painted: Vec<usize>,
    pub dims: DimsSummary,
    pub r: u32,
    pub spin_mult_m: String,
    pub dim_spin: String,
    /// Counts over positive roots.
    pub positive_roots: RootCounts,
    pub k_positive_roots: Vec<Vec<String>>,
    pub rho_k: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowDoc {
    pub word: String,
    /// 1-based, leftmost reflection first.
    pub word_indices: Vec<usize>,
    pub mu_simple: Vec<String>,
    pub mu_fundamental: Vec<String>,
    pub n_beta: Vec<i64>,
    pub epsilon: i8,
    pub dim_e: u128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignatureDoc {
    pub exists_form: bool,
    pub dim_v: u128,
    pub rows: Vec<RowDoc>,
    pub r: u32,
    pub divisor: u128,
    pub signed_sum: i128,
    pub sig: Option<u128>,
    pub p: Option<u128>,
    pub q: Option<u128>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleDoc {
    pub agreement: Agreement,
    pub value: Option<u128>,
    pub note: Option<String>,
}

impl OracleDoc {
    pub fn not_applicable(note: impl Into<String>) -> Self {
        OracleDoc { agreement: Agreement::NotApplicable, value: None, note: Some(note.into()) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OraclesDoc {
    /// Weight-multiplicity trace of theta (inner involutions).
    pub weight_trace: OracleDoc,
    /// Explicit matrices and the intertwiner `T` (requires `theta lambda = lambda`).
    pub intertwiner: OracleDoc,
    /// Trace form of a matrix model (adjoint representation of classical presets).
    pub trace_form: OracleDoc,
    /// Existence criterion against constructibility of `T`.
    pub existence: OracleDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub case: CaseEcho,
    pub real_form: RealFormSummary,
    pub signature: SignatureDoc,
    pub oracles: OraclesDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_us: Option<u64>,
}

pub fn coords(w: &Weight) -> Vec<String> {
    w.coords().iter().map(format_rational).collect()
}

pub fn fundamental(rs: &RootSystem, w: &Weight) -> Vec<String> {
    rs.to_fundamental(w).iter().map(format_rational).collect()
}

pub fn echo(spec: &CaseSpec, rs: &RootSystem, lambda: &Weight) -> CaseEcho {
    CaseEcho {
        group: spec.group.display(),
        weight: spec.weight.display(),
        basis: spec.basis.to_string(),
        run_oracles: spec.options.run_oracles,
        dim_cap: spec.options.dim_cap,
        highest_weight_simple: coords(lambda),
        highest_weight_fundamental: fundamental(rs, lambda),
    }
}

pub fn summarize_form(rf: &RealFormData) -> RealFormSummary {
    let c = &rf.classification;
    RealFormSummary {
        name: rf.name.clone(),
        diagram: rf.diagram.spec_string(),
        cartan_type: rf.diagram.cartan_type().to_string(),
        involution: rf.diagram.involution().iter().map(|p| p + 1).collect(),
        painted: rf.diagram.painting().iter().map(|p| p + 1).collect(),
        dims: DimsSummary { g: rf.dims.g, k: rf.dims.k, s: rf.dims.s, t: rf.dims.t, a: rf.dims.a },
        r: rf.r,
        spin_mult_m: rf.spin_mult_m.to_string(),
        dim_spin: rf.dim_spin.to_string(),
        positive_roots: RootCounts {
            imaginary_compact: c.count(RootClass::ImaginaryCompact),
            imaginary_noncompact: c.count(RootClass::ImaginaryNoncompact),
            complex: c.count(RootClass::Complex),
            real: c.count(RootClass::Real),
        },
        k_positive_roots: rf.k.positive.iter().map(coords).collect(),
        rho_k: coords(&rf.k.rho),
    }
}

pub fn signature_doc(rs: &RootSystem, rep: &SignatureReport) -> SignatureDoc {
    SignatureDoc {
        exists_form: rep.exists_form,
        dim_v: rep.dim_v,
        rows: rep
            .rows
            .iter()
            .map(|row| RowDoc {
                word: row.w.word_string(),
                word_indices: row.w.word().iter().map(|i| i + 1).collect(),
                mu_simple: coords(&row.mu),
                mu_fundamental: fundamental(rs, &row.mu),
                n_beta: row.n_beta.clone(),
                epsilon: row.epsilon,
                dim_e: row.dim_e,
            })
            .collect(),
        r: rep.r,
        divisor: rep.divisor,
        signed_sum: rep.signed_sum,
        sig: rep.sig,
        p: rep.p_q.map(|x| x.0),
        q: rep.p_q.map(|x| x.1),
    }
}

impl ReportDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    /// Every oracle flag, in a fixed order.
    pub fn agreements(&self) -> [Agreement; 4] {
        let o = &self.oracles;
        [o.weight_trace.agreement, o.intertwiner.agreement, o.trace_form.agreement, o.existence.agreement]
    }

    pub fn has_disagreement(&self) -> bool {
        self.agreements().contains(&Agreement::Disagree)
    }

    pub fn to_human(&self) -> String {
        crate::human::render(self)
    }
}
