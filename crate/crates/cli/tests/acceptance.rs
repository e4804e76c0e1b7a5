//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits non-zero on any failure.

use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use hermsig::oracle::traceform::{matrix_model, trace_form_inertia};
use hermsig::oracle::{build_explicit_rep_capped, build_intertwiner, signature_bruteforce, trace_theta_inner, trace_theta_inner_capped};
use hermsig::rational::{frac, int, parse_rational};
use hermsig::realform::{all_presets, parse_group, RealFormData};
use hermsig::rootsys::{build_root_system, weyl_dim, RootSystem, Weight};
use hermsig::sigformula::{exists_invariant_form, signature};
use hermsig::Rational;
use hermsig_cli::{dominant_weights_up_to, ReportDocument};

const DIM_CAP: u128 = 200;
const MAX_RANK: usize = 3;
const RANDOM_WEIGHTS: usize = 20;
const SEED: u64 = 0x5167_2024;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn weight(coords: &[Rational]) -> Weight {
    Weight::new(coords.to_vec())
}

fn parse_weight(strings: &[String]) -> Result<Weight, String> {
    strings
        .iter()
        .map(|s| parse_rational(s).ok_or_else(|| format!("bad rational {s:?}")))
        .collect::<Result<Vec<_>, _>>()
        .map(Weight::new)
}

fn c1_worked_example() -> Outcome {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_hermsig"))
        .args(["sig", "--group", "su(3,1)", "--weight", "adjoint", "--format", "machine"])
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure!(out.status.success(), "exit status {}", out.status);
    let doc = ReportDocument::from_json(&String::from_utf8_lossy(&out.stdout)).map_err(|e| e.to_string())?;
    let s = &doc.signature;

    let words: Vec<Vec<usize>> = s.rows.iter().map(|r| r.word_indices.clone()).collect();
    ensure!(words == vec![vec![], vec![3], vec![3, 2], vec![3, 2, 1]], "W1 words {words:?}");

    let h = |n| frac(n, 2);
    let expected = [
        [h(3), h(4), h(5)],
        [h(3), h(4), h(1)],
        [h(3), h(2), h(-1)],
        [h(-1), h(-2), h(-5)],
    ];
    for (row, want) in s.rows.iter().zip(&expected) {
        let got = parse_weight(&row.mu_simple)?;
        ensure!(got == weight(want), "K-type weight {got} for word {}, expected {}", row.word, weight(want));
    }
    let dims: Vec<u128> = s.rows.iter().map(|r| r.dim_e).collect();
    let signs: Vec<i8> = s.rows.iter().map(|r| r.epsilon).collect();
    ensure!(dims == [3, 15, 15, 3], "dimensions {dims:?}");
    ensure!(signs == [1, -1, -1, 1], "signs {signs:?}");
    ensure!(s.divisor == 8 && s.r == 3, "divisor {} (r = {})", s.divisor, s.r);
    ensure!(s.signed_sum == -24, "signed sum {}", s.signed_sum);
    ensure!(s.sig == Some(3), "sig {:?}", s.sig);
    ensure!((s.p, s.q) == (Some(9), Some(6)), "(p,q) = ({:?},{:?})", s.p, s.q);
    ensure!(doc.real_form.dims.k == 9, "dim k = {}", doc.real_form.dims.k);
    ensure!(!doc.has_disagreement(), "an oracle disagrees");
    ensure!(elapsed < Duration::from_secs(1), "runtime {elapsed:?}");

    // Nearby candidates for the last two K-types fail: 1/2(-a+2b-c) is not K-dominant,
    // and -a-2b-5c has dimension 6 rather than 3.
    let (rs, rf) = parse_group("su(3,1)").map_err(|e| e.to_string())?;
    let near_third = weight(&[h(-1), h(2), h(-1)]);
    let near_fourth = weight(&[int(-1), int(-2), int(-5)]);
    ensure!(!rf.is_k_dominant(&rs, &near_third), "1/2(-a+2b-c) is K-dominant");
    let d = weyl_dim(&rf.k.positive, rs.form(), &near_fourth).map_err(|e| e.to_string())?;
    ensure!(d == 6, "-a-2b-5c has dimension {d}");

    Ok(format!("4 K-types, dims 3,15,15,3, signs +,-,-,+, sig 3, (9,6), {} ms", elapsed.as_millis()))
}

struct Form {
    name: String,
    rs: RootSystem,
    rf: RealFormData,
}

fn presets_up_to_rank(max_rank: usize) -> Vec<Form> {
    all_presets()
        .iter()
        .filter_map(|p| {
            let rs = build_root_system(p.diagram.cartan_type()).ok()?;
            (rs.rank() <= max_rank).then(|| {
                let rf = RealFormData::new(&p.diagram, &rs).expect("preset").with_name(&p.name);
                Form { name: p.name.clone(), rs, rf }
            })
        })
        .collect()
}

/// Everything the criteria need about one (form, weight) case.
struct CaseRecord {
    label: String,
    dim_v: u128,
    fixed: bool,
    exists: bool,
    sig: Result<u128, String>,
    signed_sum: i128,
    divisor: u128,
    weight_trace: Option<Result<u128, String>>,
    /// Relations, positivity, `T^2 = 1` and `|tr T|`; `None` when theta moves lambda.
    explicit: Option<Result<u128, String>>,
}

fn run_record(f: &Form, coords: &[i64], dim_v: u128) -> CaseRecord {
    let lambda = f.rs.from_fundamental_ints(coords);
    let label = format!("{} {:?}", f.name, coords);
    let fixed = f.rf.theta.apply(&lambda) == lambda;
    let exists = exists_invariant_form(&f.rf, &f.rs, &lambda);
    let (sig, signed_sum, divisor) = match signature(&f.rf, &f.rs, &lambda) {
        Ok(rep) => (rep.sig.ok_or_else(|| "no form".to_string()), rep.signed_sum, rep.divisor),
        Err(e) => (Err(e.to_string()), 0, 1),
    };
    let weight_trace = f
        .rf
        .is_equal_rank()
        .then(|| trace_theta_inner_capped(&f.rf, &f.rs, &lambda, DIM_CAP).map_err(|e| e.to_string()));
    let explicit = fixed.then(|| {
        let rep = build_explicit_rep_capped(&f.rs, &lambda, DIM_CAP).map_err(|e| e.to_string())?;
        rep.verify().map_err(|e| e.to_string())?;
        let t = build_intertwiner(&rep, &f.rf).map_err(|e| e.to_string())?;
        let id = hermsig::linalg::SparseMatrix::identity(rep.dimension());
        if t.matrix().mul(t.matrix()) != id {
            return Err("T^2 != 1".into());
        }
        signature_bruteforce(&rep, &t).map_err(|e| e.to_string())
    });
    CaseRecord { label, dim_v, fixed, exists, sig, signed_sum, divisor, weight_trace, explicit }
}

fn corpus(forms: &[Form]) -> Vec<CaseRecord> {
    let work: Vec<(usize, Vec<i64>, u128)> = forms
        .iter()
        .enumerate()
        .flat_map(|(k, f)| dominant_weights_up_to(&f.rs, DIM_CAP).into_iter().map(move |(c, d)| (k, c, d)))
        .collect();
    work.par_iter().map(|(k, c, d)| run_record(&forms[*k], c, *d)).collect()
}

fn c2_oracle_sweep(forms: &[Form], cases: &[CaseRecord]) -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    for c in cases {
        let Some(wt) = &c.weight_trace else { continue };
        checked += 1;
        let b = c.explicit.clone().unwrap_or_else(|| Err("theta moves lambda".into()));
        if !(c.sig.is_ok() && c.sig == *wt && c.sig == b) {
            bad.push(format!("{}: formula {:?}, weight trace {:?}, intertwiner {:?}", c.label, c.sig, wt, b));
        }
    }
    let n_forms = forms.iter().filter(|f| f.rf.is_equal_rank()).count();
    ensure!(checked > 0, "no equal-rank cases");
    ensure!(bad.is_empty(), "{} disagreements, first: {}", bad.len(), bad[0]);
    Ok(format!("{checked} cases over {n_forms} equal-rank forms, dim V <= {DIM_CAP}, 0 disagreements"))
}

fn c3_unequal_rank() -> Outcome {
    let mut parts = Vec::new();
    // sl(2,R) = su(1,1) has a compact Cartan; only sl(3,R) is genuinely of unequal rank.
    for (name, want, equal_rank) in [("sl(2,R)", 1u128, true), ("sl(3,R)", 2, false)] {
        let (rs, rf) = parse_group(name).map_err(|e| e.to_string())?;
        ensure!(rf.is_equal_rank() == equal_rank, "{name}: equal rank is {}", rf.is_equal_rank());
        let lambda = rs.highest_root().ok_or("no highest root")?;
        let formula = signature(&rf, &rs, &lambda).map_err(|e| e.to_string())?.sig;
        let rep = build_explicit_rep_capped(&rs, &lambda, DIM_CAP).map_err(|e| e.to_string())?;
        let t = build_intertwiner(&rep, &rf).map_err(|e| e.to_string())?;
        let brute = signature_bruteforce(&rep, &t).map_err(|e| e.to_string())?;
        let model = matrix_model(name).ok_or("no matrix model")?;
        let (p, q, z) = trace_form_inertia(&model);
        ensure!(z == 0, "{name}: degenerate trace form");
        let trace_form = p.abs_diff(q) as u128;
        ensure!(
            formula == Some(want) && brute == want && trace_form == want,
            "{name}: formula {formula:?}, |tr T| {brute}, trace form {trace_form}, expected {want}"
        );
        parts.push(format!("{name} {want}"));
    }
    Ok(format!("{} by formula, |tr T| and trace-form inertia", parts.join(", ")))
}

fn c4_compact(forms: &[Form]) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut n = 0;
    let mut names = Vec::new();
    for f in forms.iter().filter(|f| f.rf.diagram.painting().is_empty() && f.rf.is_equal_rank()) {
        let top = if f.rs.rank() >= 3 { 2 } else { 4 };
        for _ in 0..RANDOM_WEIGHTS {
            let coords: Vec<i64> = (0..f.rs.rank()).map(|_| rng.gen_range(0..=top)).collect();
            let lambda = f.rs.from_fundamental_ints(&coords);
            let dim = f.rs.dim(&lambda).map_err(|e| e.to_string())?;
            let rep = signature(&f.rf, &f.rs, &lambda).map_err(|e| e.to_string())?;
            let tr = trace_theta_inner(&f.rf, &f.rs, &lambda).map_err(|e| e.to_string())?;
            ensure!(
                rep.sig == Some(dim) && rep.dim_v == dim && tr == dim,
                "{} {coords:?}: sig {:?}, dim V {}, Weyl {dim}, weight trace {tr}",
                f.name,
                rep.sig,
                rep.dim_v
            );
            n += 1;
        }
        names.push(f.name.clone());
    }
    ensure!(n > 0, "no compact forms");
    Ok(format!("{n} random weights over {}", names.join(", ")))
}

fn c5_structure(forms: &[Form], cases: &[CaseRecord]) -> Outcome {
    for f in forms {
        let d = &f.rf.dims;
        ensure!(2 * f.rf.r as usize + d.a == d.s, "{}: 2r = {} but s - a = {} - {}", f.name, 2 * f.rf.r, d.s, d.a);
        ensure!(d.s % 2 == d.a % 2, "{}: parity of s and a", f.name);
        for i in 0..f.rs.rank() {
            ensure!(f.rs.simple_pairing(f.rs.rho(), i) == int(1), "{}: <rho, alpha_{}^v> != 1", f.name, i + 1);
        }
    }
    let mut explicit = 0;
    for c in cases {
        if c.exists {
            let sig = c.sig.clone().map_err(|e| format!("{}: {e}", c.label))?;
            ensure!(c.signed_sum.unsigned_abs() % c.divisor == 0, "{}: {} not divisible by {}", c.label, c.signed_sum, c.divisor);
            ensure!(sig <= c.dim_v && (c.dim_v - sig) % 2 == 0, "{}: sig {sig} against dim V {}", c.label, c.dim_v);
        }
        if let Some(b) = &c.explicit {
            b.as_ref().map_err(|e| format!("{}: {e}", c.label))?;
            explicit += 1;
        }
    }
    Ok(format!(
        "{} presets, {} corpus cases, {explicit} explicit representations with relations and T^2 = 1",
        forms.len(),
        cases.len()
    ))
}

fn c6_existence(cases: &[CaseRecord]) -> Outcome {
    let mut fixed = 0;
    for c in cases {
        ensure!(c.exists == c.fixed, "{}: form {} but theta-fixed {}", c.label, c.exists, c.fixed);
        if c.fixed {
            fixed += 1;
            ensure!(matches!(c.explicit, Some(Ok(_))), "{}: form exists but T failed: {:?}", c.label, c.explicit);
        }
    }
    let (rs, rf) = parse_group("sl(3,R)").map_err(|e| e.to_string())?;
    let w1 = rs.fundamental_weight(0);
    ensure!(!exists_invariant_form(&rf, &rs, &w1), "sl(3,R) with the first fundamental weight reports a form");
    let rep = signature(&rf, &rs, &w1).map_err(|e| e.to_string())?;
    ensure!(rep.sig.is_none() && !rep.exists_form, "sl(3,R) first fundamental weight has a signature");
    Ok(format!("{fixed} theta-fixed cases all build T; sl(3,R) first fundamental weight has no form"))
}

fn main() {
    let forms = presets_up_to_rank(MAX_RANK);
    let sweep_start = Instant::now();
    let cases = corpus(&forms);
    let sweep = sweep_start.elapsed();

    let results: Vec<(&str, Outcome)> = vec![
        ("1 su(3,1) adjoint worked example", c1_worked_example()),
        ("2 oracle equivalence sweep", c2_oracle_sweep(&forms, &cases)),
        ("3 unequal-rank spot checks", c3_unequal_rank()),
        ("4 compact degeneration", c4_compact(&forms)),
        ("5 structural invariants", c5_structure(&forms, &cases)),
        ("6 existence criterion", c6_existence(&cases)),
    ];
    let mut failed = 0;
    for (name, r) in &results {
        match r {
            Ok(m) => println!("PASS criterion {name}: {m}"),
            Err(m) => {
                failed += 1;
                println!("FAIL criterion {name}: {m}");
            }
        }
    }
    println!("corpus sweep: {} cases in {:.1} s", cases.len(), sweep.as_secs_f64());
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
