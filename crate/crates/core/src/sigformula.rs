//! The signature formula: existence of an invariant hermitian form, the set `W^1`,
//! signs `eps(w)`, K-type dimensions, and `sig(V) = |sum eps(w) dim E(w(lambda+rho) - rho_K)| / 2^r`.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::to_i64;
use crate::realform::{painted_sum, RealFormData};
use crate::rootsys::{weyl_dim, RootSystem, Weight, WeylElement, DEFAULT_WEYL_CAP};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct W1Row {
    pub w: WeylElement,
    /// `w(lambda + rho_G) - rho_K`
    pub mu: Weight,
    /// Coefficients of `lambda - w lambda` on the simple roots.
    pub n_beta: Vec<i64>,
    pub epsilon: i8,
    pub dim_e: u128,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignatureReport {
    pub exists_form: bool,
    pub rows: Vec<W1Row>,
    pub r: u32,
    pub divisor: u128,
    pub signed_sum: i128,
    pub sig: Option<u128>,
    pub dim_v: u128,
    /// `(p, q)` with `p >= q`.
    pub p_q: Option<(u128, u128)>,
}

/// A `G`-invariant hermitian form exists iff `theta lambda` is `W`-conjugate to `lambda`.
pub fn exists_invariant_form(rf: &RealFormData, rs: &RootSystem, lambda: &Weight) -> bool {
    let (dom, _) = rs.dominant_representative(&rf.theta.apply(lambda));
    dom == *lambda
}

pub fn enumerate_w1(rf: &RealFormData, rs: &RootSystem, lambda: &Weight) -> Result<Vec<WeylElement>> {
    enumerate_w1_capped(rf, rs, lambda, DEFAULT_WEYL_CAP)
}

/// Elements commuting with `theta` that carry `lambda + rho_G` into the strictly
/// `Delta+(k,t)`-dominant chamber, by length and then word.
pub fn enumerate_w1_capped(rf: &RealFormData, rs: &RootSystem, lambda: &Weight, weyl_cap: u128) -> Result<Vec<WeylElement>> {
    let shifted = lambda + rs.rho();
    let th = rf.theta.matrix();
    let mut out = Vec::new();
    for w in rs.enumerate_weyl_capped(weyl_cap)? {
        let m = w.matrix();
        let n = m.len();
        let commutes = (0..n).all(|i| {
            (0..n).all(|j| {
                let wt: i64 = (0..n).map(|k| m[i][k] * th[k][j]).sum();
                let tw: i64 = (0..n).map(|k| th[i][k] * m[k][j]).sum();
                wt == tw
            })
        });
        if !commutes {
            continue;
        }
        let v = w.apply(&shifted);
        let pairings = rf.k_pairings(rs, &v);
        if let Some(d) = pairings.iter().position(|p| p.is_zero()) {
            return Err(Error::SingularRestriction(format!(
                "{} on {} for w = {}",
                v,
                rf.k.simple[d],
                w.word_string()
            )));
        }
        if pairings.iter().all(|p| p.is_positive()) {
            out.push(w);
        }
    }
    Ok(out)
}

/// `(n, eps)` with `lambda - w lambda = sum n_i alpha_i` and `eps = (-1)^{sum of n_i over painted i}`.
pub fn epsilon(rf: &RealFormData, lambda: &Weight, w: &WeylElement) -> Result<(Vec<i64>, i8)> {
    let diff = lambda - &w.apply(lambda);
    let n: Vec<i64> = diff
        .coords()
        .iter()
        .map(|c| to_i64(c).filter(|&x| x >= 0))
        .collect::<Option<_>>()
        .ok_or_else(|| Error::NonIntegralDecomposition(format!("{diff} for w = {}", w.word_string())))?;
    let sign = if painted_sum(&rf.diagram, &n) % 2 == 0 { 1 } else { -1 };
    Ok((n, sign))
}

/// `(mu, dim E(mu))` with `mu = w(lambda + rho_G) - rho_K`.
pub fn ktype_dimension(rf: &RealFormData, rs: &RootSystem, lambda: &Weight, w: &WeylElement) -> Result<(Weight, u128)> {
    let mu = &w.apply(&(lambda + rs.rho())) - &rf.k.rho;
    let d = weyl_dim(&rf.k.positive, rs.form(), &mu)?;
    Ok((mu, d))
}

pub fn signature(rf: &RealFormData, rs: &RootSystem, lambda: &Weight) -> Result<SignatureReport> {
    signature_capped(rf, rs, lambda, DEFAULT_WEYL_CAP)
}

pub fn signature_capped(rf: &RealFormData, rs: &RootSystem, lambda: &Weight, weyl_cap: u128) -> Result<SignatureReport> {
    let dim_v = rs.dim(lambda)?;
    let divisor = 1u128
        .checked_shl(rf.r)
        .ok_or_else(|| Error::NonIntegral(format!("2^{} does not fit in 128 bits", rf.r)))?;
    let mut report = SignatureReport {
        exists_form: exists_invariant_form(rf, rs, lambda),
        rows: Vec::new(),
        r: rf.r,
        divisor,
        signed_sum: 0,
        sig: None,
        dim_v,
        p_q: None,
    };
    if !report.exists_form {
        return Ok(report);
    }
    let mut sum: i128 = 0;
    for w in enumerate_w1_capped(rf, rs, lambda, weyl_cap)? {
        let (n_beta, eps) = epsilon(rf, lambda, &w)?;
        let (mu, dim_e) = ktype_dimension(rf, rs, lambda, &w)?;
        sum += eps as i128 * dim_e as i128;
        report.rows.push(W1Row { w, mu, n_beta, epsilon: eps, dim_e });
    }
    report.signed_sum = sum;
    let abs = sum.unsigned_abs();
    if abs % divisor != 0 {
        return Err(Error::InexactDivision { sum: sum.to_string(), r: rf.r });
    }
    let sig = abs / divisor;
    if sig > dim_v || (dim_v - sig) % 2 != 0 {
        return Err(Error::SignatureOutOfRange(format!("sig {sig} against dim V {dim_v}")));
    }
    report.sig = Some(sig);
    report.p_q = Some(((dim_v + sig) / 2, (dim_v - sig) / 2));
    Ok(report)
}
