//! Plain-text rendering of reports.

use std::fmt::Write;

use crate::report::{OracleDoc, ReportDocument};
use crate::run::CorpusSummary;

fn vec_str(v: &[String]) -> String {
    format!("({})", v.join(", "))
}

fn oracle_line(out: &mut String, name: &str, o: &OracleDoc) {
    let value = o.value.map(|v| v.to_string()).unwrap_or_else(|| "-".into());
    let note = o.note.as_deref().map(|n| format!("  [{n}]")).unwrap_or_default();
    let _ = writeln!(out, "  {name:<14} {:<15} {value}{note}", o.agreement.as_str());
}

pub fn render(doc: &ReportDocument) -> String {
    let mut out = String::new();
    let rf = &doc.real_form;
    let d = &rf.dims;
    let _ = writeln!(
        out,
        "group        {}  ({})",
        rf.name.as_deref().unwrap_or(&doc.case.group),
        rf.diagram
    );
    let _ = writeln!(
        out,
        "dims         g={} k={} s={} t={} a={}  r={}  m={}  dim S={}",
        d.g, d.k, d.s, d.t, d.a, rf.r, rf.spin_mult_m, rf.dim_spin
    );
    let c = &rf.positive_roots;
    let _ = writeln!(
        out,
        "roots        {} compact, {} noncompact, {} complex, {} real (positive)",
        c.imaginary_compact, c.imaginary_noncompact, c.complex, c.real
    );
    let _ = writeln!(out, "2 rho_K      {}", vec_str(&rf.rho_k.iter().map(|x| twice(x)).collect::<Vec<_>>()));
    let _ = writeln!(
        out,
        "lambda       {} simple, {} fundamental",
        vec_str(&doc.case.highest_weight_simple),
        vec_str(&doc.case.highest_weight_fundamental)
    );
    let s = &doc.signature;
    let _ = writeln!(out, "dim V        {}", s.dim_v);
    if !s.exists_form {
        let _ = writeln!(out, "form         none (theta lambda is not W-conjugate to lambda)");
    } else {
        let _ = writeln!(out);
        let _ = writeln!(out, "  {:<16} {:<24} {:<12} {:>4} {:>8}", "w", "mu (simple roots)", "n", "eps", "dim E");
        for row in &s.rows {
            let _ = writeln!(
                out,
                "  {:<16} {:<24} {:<12} {:>4} {:>8}",
                row.word,
                vec_str(&row.mu_simple),
                format!("{:?}", row.n_beta),
                if row.epsilon > 0 { "+" } else { "-" },
                row.dim_e
            );
        }
        let _ = writeln!(out);
        let _ = writeln!(out, "signed sum   {}", s.signed_sum);
        let _ = writeln!(out, "divisor      2^{} = {}", s.r, s.divisor);
        if let (Some(sig), Some(p), Some(q)) = (s.sig, s.p, s.q) {
            let _ = writeln!(out, "signature    {sig}   (p, q) = ({p}, {q})");
        }
    }
    let _ = writeln!(out, "oracles");
    oracle_line(&mut out, "weight trace", &doc.oracles.weight_trace);
    oracle_line(&mut out, "intertwiner", &doc.oracles.intertwiner);
    oracle_line(&mut out, "trace form", &doc.oracles.trace_form);
    oracle_line(&mut out, "existence", &doc.oracles.existence);
    if let Some(t) = doc.timing_us {
        let _ = writeln!(out, "time         {t} us");
    }
    out
}

fn twice(x: &str) -> String {
    match hermsig::rational::parse_rational(x) {
        Some(q) => hermsig::rational::format_rational(&(q * hermsig::rational::int(2))),
        None => x.to_string(),
    }
}

pub fn render_corpus(summary: &CorpusSummary) -> String {
    let mut out = String::new();
    for c in &summary.cases {
        if c.disagrees() {
            let _ = writeln!(
                out,
                "DISAGREE {} {:?} dim {} sig {:?}: trace {} / intertwiner {} / trace form {} / existence {}{}",
                c.group,
                c.weight,
                c.dim_v,
                c.sig,
                c.weight_trace.as_str(),
                c.intertwiner.as_str(),
                c.trace_form.as_str(),
                c.existence.as_str(),
                c.error.as_deref().map(|e| format!(" error: {e}")).unwrap_or_default()
            );
        }
    }
    let mut groups: Vec<&str> = Vec::new();
    for c in &summary.cases {
        if groups.last() != Some(&c.group.as_str()) && !groups.contains(&c.group.as_str()) {
            groups.push(&c.group);
        }
    }
    for g in groups {
        let cs: Vec<_> = summary.cases.iter().filter(|c| c.group == g).collect();
        let bad = cs.iter().filter(|c| c.disagrees()).count();
        let _ = writeln!(out, "{g:<10} {:>4} cases  {bad} disagreements", cs.len());
    }
    let _ = writeln!(
        out,
        "total {}  agree {}  disagree {}  unchecked {}  (dim cap {})",
        summary.total, summary.agree, summary.disagree, summary.unchecked, summary.dim_cap
    );
    out
}
