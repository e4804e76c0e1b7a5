//! Brute-force signatures that do not use the formula: a weight-space trace of theta
//! for inner involutions, an explicit matrix model of `V(lambda)` with its intertwiner,
//! and trace forms of classical matrix Lie algebras.

mod explicit;
pub mod traceform;

pub use explicit::{build_explicit_rep, build_explicit_rep_capped, build_intertwiner, signature_bruteforce, ExplicitRep, IntertwinerT, DEFAULT_EXPLICIT_CAP};

use crate::error::{Error, Result};
use crate::realform::{painted_sum, RealFormData};
use crate::rootsys::{freudenthal_multiplicities_capped, RootSystem, Weight, DEFAULT_REP_CAP};

pub fn trace_theta_inner(rf: &RealFormData, rs: &RootSystem, lambda: &Weight) -> Result<u128> {
    trace_theta_inner_capped(rf, rs, lambda, DEFAULT_REP_CAP)
}

/// `|sum_mu mult(mu) (-1)^{N(lambda - mu)}|`, with `N` the painted coefficient sum. Theta acts
/// on the weight space `V_mu` by that sign when it is normalized to `+1` on the highest weight.
pub fn trace_theta_inner_capped(rf: &RealFormData, rs: &RootSystem, lambda: &Weight, cap: u128) -> Result<u128> {
    if !rf.is_equal_rank() {
        return Err(Error::NotEqualRank { dim_a: rf.dims.a });
    }
    let mults = freudenthal_multiplicities_capped(rs, lambda, cap)?;
    let mut tr: i128 = 0;
    for (mu, m) in &mults {
        let depth = (lambda - mu)
            .to_ints()
            .ok_or_else(|| Error::NonIntegral(format!("lambda - {mu} is not in the root lattice")))?;
        let sign = if painted_sum(&rf.diagram, &depth) % 2 == 0 { 1 } else { -1 };
        tr += sign * *m as i128;
    }
    Ok(tr.unsigned_abs())
}
