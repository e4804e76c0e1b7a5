//! Running single cases and the verification corpus.

use std::collections::{HashSet, VecDeque};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use hermsig::oracle::traceform::{matrix_model, trace_form_signature};
use hermsig::oracle::{
    build_explicit_rep_capped, build_intertwiner, signature_bruteforce, trace_theta_inner_capped, DEFAULT_EXPLICIT_CAP,
};
use hermsig::realform::{all_presets, RealFormData};
use hermsig::rootsys::{build_root_system, Family, RootSystem, Weight};
use hermsig::sigformula::{signature, SignatureReport};

use crate::case::{CaseError, CaseOptions, CaseSpec};
use crate::report::{echo, signature_doc, summarize_form, Agreement, OracleDoc, OraclesDoc, ReportDocument};

fn compare(value: u128, sig: Option<u128>) -> Agreement {
    if Some(value) == sig {
        Agreement::Agree
    } else {
        Agreement::Disagree
    }
}

/// Runs every applicable oracle against the formula's report.
pub fn run_oracles(rs: &RootSystem, rf: &RealFormData, lambda: &Weight, rep: &SignatureReport, opts: &CaseOptions) -> OraclesDoc {
    if !opts.run_oracles {
        let off = || OracleDoc::not_applicable("oracles disabled");
        return OraclesDoc { weight_trace: off(), intertwiner: off(), trace_form: off(), existence: off() };
    }
    let above = |cap: u128| OracleDoc::not_applicable(format!("dim V = {} above cap {cap}", rep.dim_v));

    let weight_trace = if !rf.is_equal_rank() {
        OracleDoc::not_applicable("outer involution")
    } else if rep.dim_v > opts.dim_cap {
        above(opts.dim_cap)
    } else {
        match trace_theta_inner_capped(rf, rs, lambda, opts.dim_cap) {
            Ok(v) => OracleDoc { agreement: compare(v, rep.sig), value: Some(v), note: None },
            Err(e) => OracleDoc { agreement: Agreement::Disagree, value: None, note: Some(e.to_string()) },
        }
    };

    let fixed = rf.theta.apply(lambda) == *lambda;
    let b_cap = opts.dim_cap.min(DEFAULT_EXPLICIT_CAP);
    let mut built = None;
    let intertwiner = if !fixed {
        OracleDoc::not_applicable("theta moves lambda")
    } else if rep.dim_v > b_cap {
        above(b_cap)
    } else {
        let res = build_explicit_rep_capped(rs, lambda, b_cap)
            .and_then(|e| build_intertwiner(&e, rf).and_then(|t| signature_bruteforce(&e, &t)));
        built = Some(res.is_ok());
        match res {
            Ok(v) => OracleDoc { agreement: compare(v, rep.sig), value: Some(v), note: None },
            Err(e) => OracleDoc { agreement: Agreement::Disagree, value: None, note: Some(e.to_string()) },
        }
    };

    let existence = match (fixed, rep.exists_form, built) {
        (false, false, _) => OracleDoc {
            agreement: Agreement::Agree,
            value: None,
            note: Some("theta lambda is dominant and differs from lambda; no form".into()),
        },
        (false, true, _) => OracleDoc {
            agreement: Agreement::Disagree,
            value: None,
            note: Some("form reported although theta lambda != lambda".into()),
        },
        (true, false, _) => OracleDoc {
            agreement: Agreement::Disagree,
            value: None,
            note: Some("no form reported although theta lambda = lambda".into()),
        },
        (true, true, Some(ok)) => OracleDoc {
            agreement: if ok { Agreement::Agree } else { Agreement::Disagree },
            value: None,
            note: Some(if ok { "intertwiner constructed" } else { "intertwiner construction failed" }.into()),
        },
        (true, true, None) => OracleDoc::not_applicable("intertwiner not attempted"),
    };

    let is_adjoint = rs.highest_root().as_ref() == Some(lambda);
    let model = rf.name.as_deref().and_then(matrix_model);
    let trace_form = match (is_adjoint, model) {
        (false, _) => OracleDoc::not_applicable("not the adjoint representation"),
        (true, None) => OracleDoc::not_applicable("no matrix model for this form"),
        (true, Some(basis)) if basis.len() as u128 != rep.dim_v => {
            OracleDoc { agreement: Agreement::Disagree, value: None, note: Some("matrix model has the wrong dimension".into()) }
        }
        (true, Some(basis)) => {
            let v = trace_form_signature(&basis) as u128;
            OracleDoc { agreement: compare(v, rep.sig), value: Some(v), note: None }
        }
    };

    OraclesDoc { weight_trace, intertwiner, trace_form, existence }
}

pub fn run_case(spec: &CaseSpec) -> Result<ReportDocument, CaseError> {
    let start = Instant::now();
    let (rs, rf) = spec.group.resolve()?;
    let lambda = spec.weight.resolve(&rs, spec.basis)?;
    let ctx = format!("{} with weight {}", spec.group.display(), spec.weight.display());
    let rep = signature(&rf, &rs, &lambda).map_err(|e| CaseError::from_core(&ctx, e))?;
    let oracles = run_oracles(&rs, &rf, &lambda, &rep, &spec.options);
    Ok(ReportDocument {
        case: echo(spec, &rs, &lambda),
        real_form: summarize_form(&rf),
        signature: signature_doc(&rs, &rep),
        oracles,
        timing_us: spec.options.timing.then(|| start.elapsed().as_micros() as u64),
    })
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusFilter {
    /// Empty means every family.
    pub families: Vec<Family>,
    pub min_rank: usize,
    pub max_rank: usize,
}

impl CorpusFilter {
    pub fn up_to_rank(max_rank: usize) -> Self {
        CorpusFilter { families: Vec::new(), min_rank: 1, max_rank }
    }

    fn accepts(&self, rs: &RootSystem) -> bool {
        let t = rs.cartan_type();
        (self.min_rank..=self.max_rank).contains(&t.rank())
            && (self.families.is_empty() || t.components().iter().all(|c| self.families.contains(&c.family)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusCase {
    pub group: String,
    /// Fundamental-weight coordinates.
    pub weight: Vec<i64>,
    pub dim_v: u128,
    pub exists_form: Option<bool>,
    pub sig: Option<u128>,
    pub weight_trace: Agreement,
    pub intertwiner: Agreement,
    pub trace_form: Agreement,
    pub existence: Agreement,
    pub error: Option<String>,
}

impl CorpusCase {
    fn flags(&self) -> [Agreement; 4] {
        [self.weight_trace, self.intertwiner, self.trace_form, self.existence]
    }

    pub fn disagrees(&self) -> bool {
        self.error.is_some() || self.flags().contains(&Agreement::Disagree)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSummary {
    pub filter: CorpusFilter,
    pub dim_cap: u128,
    pub total: usize,
    /// Cases where at least one oracle applied and none disagreed.
    pub agree: usize,
    pub disagree: usize,
    /// Cases no oracle could check.
    pub unchecked: usize,
    pub cases: Vec<CorpusCase>,
}

impl CorpusSummary {
    pub fn exit_code(&self) -> i32 {
        if self.disagree > 0 {
            5
        } else {
            0
        }
    }
}

/// Dominant integral weights (fundamental coordinates) with Weyl dimension at most `cap`,
/// ordered by dimension and then coordinates.
pub fn dominant_weights_up_to(rs: &RootSystem, cap: u128) -> Vec<(Vec<i64>, u128)> {
    let r = rs.rank();
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    let mut queue = VecDeque::from([vec![0i64; r]]);
    while let Some(c) = queue.pop_front() {
        if !seen.insert(c.clone()) {
            continue;
        }
        let d = rs.dim(&rs.from_fundamental_ints(&c)).expect("dominant");
        // the dimension grows with every coordinate, so the search can stop here
        if d > cap {
            continue;
        }
        for i in 0..r {
            let mut n = c.clone();
            n[i] += 1;
            queue.push_back(n);
        }
        out.push((c, d));
    }
    out.sort_by(|a, b| (a.1, &a.0).cmp(&(b.1, &b.0)));
    out
}

fn corpus_case(name: &str, rs: &RootSystem, rf: &RealFormData, coords: &[i64], dim_v: u128, opts: &CaseOptions) -> CorpusCase {
    let lambda = rs.from_fundamental_ints(coords);
    let na = Agreement::NotApplicable;
    let mut case = CorpusCase {
        group: name.to_string(),
        weight: coords.to_vec(),
        dim_v,
        exists_form: None,
        sig: None,
        weight_trace: na,
        intertwiner: na,
        trace_form: na,
        existence: na,
        error: None,
    };
    match signature(rf, rs, &lambda) {
        Ok(rep) => {
            let o = run_oracles(rs, rf, &lambda, &rep, opts);
            case.exists_form = Some(rep.exists_form);
            case.sig = rep.sig;
            case.weight_trace = o.weight_trace.agreement;
            case.intertwiner = o.intertwiner.agreement;
            case.trace_form = o.trace_form.agreement;
            case.existence = o.existence.agreement;
        }
        Err(e) => case.error = Some(e.to_string()),
    }
    case
}

/// Every preset passing `filter`, crossed with every dominant weight of dimension at
/// most `dim_cap`. Cases run on `jobs` threads; results keep the enumeration order.
pub fn run_corpus(filter: &CorpusFilter, dim_cap: u128, jobs: usize) -> CorpusSummary {
    let mut forms = Vec::new();
    for p in all_presets() {
        let rs = build_root_system(p.diagram.cartan_type()).expect("preset root system");
        if !filter.accepts(&rs) {
            continue;
        }
        let rf = RealFormData::new(&p.diagram, &rs).expect("preset real form").with_name(&p.name);
        forms.push((p.name.clone(), rs, rf));
    }
    let mut work = Vec::new();
    for (k, (_, rs, _)) in forms.iter().enumerate() {
        for (c, d) in dominant_weights_up_to(rs, dim_cap) {
            work.push((k, c, d));
        }
    }
    let opts = CaseOptions { run_oracles: true, dim_cap, timing: false };
    let run = || -> Vec<CorpusCase> {
        work.par_iter()
            .map(|(k, c, d)| {
                let (name, rs, rf) = &forms[*k];
                corpus_case(name, rs, rf, c, *d, &opts)
            })
            .collect()
    };
    let cases = match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(run),
        Err(_) => run(),
    };
    let disagree = cases.iter().filter(|c| c.disagrees()).count();
    let unchecked = cases.iter().filter(|c| !c.disagrees() && c.flags().iter().all(|&a| a == Agreement::NotApplicable)).count();
    CorpusSummary {
        filter: filter.clone(),
        dim_cap,
        total: cases.len(),
        agree: cases.len() - disagree - unchecked,
        disagree,
        unchecked,
        cases,
    }
}
