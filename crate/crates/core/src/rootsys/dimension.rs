//! Weyl dimension formula and Freudenthal weight multiplicities.

use std::collections::{BTreeMap, HashMap, HashSet};

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

use super::{BilinearForm, RootSystem, Weight};
use crate::error::{Error, Result};
use crate::rational::{half, int, Rational};

pub const DEFAULT_REP_CAP: u128 = 100_000;

/// `prod_{a > 0} (mu + rho, a) / (rho, a)` over the given positive system, where `rho`
/// is the half-sum of `positive_roots`.
pub fn weyl_dim(positive_roots: &[Weight], form: &BilinearForm, mu: &Weight) -> Result<u128> {
    let rank = mu.rank();
    let mut rho = Weight::zero(rank);
    for a in positive_roots {
        rho = &rho + a;
    }
    let rho = rho.scale(&half());
    let shifted = mu + &rho;
    let mut prod = Rational::from_integer(1.into());
    for a in positive_roots {
        let num = form.eval(mu, a);
        if num.is_negative() {
            return Err(Error::NonDominant(format!("{mu} pairs negatively with the positive root {a}")));
        }
        let den = form.eval(&rho, a);
        debug_assert!(den.is_positive());
        prod *= form.eval(&shifted, a) / den;
    }
    if !prod.is_integer() {
        return Err(Error::NonIntegral(format!("Weyl product for {mu} is {prod}")));
    }
    prod.to_integer()
        .to_u128()
        .ok_or_else(|| Error::NonIntegral(format!("Weyl product for {mu} does not fit in u128")))
}

pub fn freudenthal_multiplicities(rs: &RootSystem, lambda: &Weight) -> Result<BTreeMap<Weight, u64>> {
    freudenthal_multiplicities_capped(rs, lambda, DEFAULT_REP_CAP)
}

/// Integer engine: weights are tracked by their depth `n` (with `mu = lambda - sum n_i alpha_i`)
/// and their fundamental coordinates `x`. The form is scaled by an integer so that
/// `(x-weight, root)` is integral; Freudenthal's ratio does not see the scale.
struct Engine<'a> {
    rs: &'a RootSystem,
    lam: Vec<i64>,
    /// `scaled_half_norm[j] = L (alpha_j, alpha_j) / 2`
    scaled_half_norm: Vec<i64>,
}

impl Engine<'_> {
    fn x_of(&self, n: &[i64]) -> Vec<i64> {
        let a = self.rs.cartan_matrix();
        (0..n.len())
            .map(|i| self.lam[i] - (0..n.len()).map(|j| a[i][j] * n[j]).sum::<i64>())
            .collect()
    }

    /// `(mu, root)`, scaled, for `mu` given by fundamental coordinates.
    fn pair(&self, x: &[i64], root: &[i64]) -> i64 {
        root.iter()
            .zip(x)
            .zip(&self.scaled_half_norm)
            .map(|((c, xi), d)| c * d * xi)
            .sum()
    }

    /// Reflects to the dominant chamber, returning the depth of the dominant weight.
    fn dominant_depth(&self, mut n: Vec<i64>) -> Vec<i64> {
        let mut x = self.x_of(&n);
        let a = self.rs.cartan_matrix();
        while let Some(i) = (0..x.len()).find(|&i| x[i] < 0) {
            let xi = x[i];
            n[i] += xi;
            for (k, xk) in x.iter_mut().enumerate() {
                *xk -= xi * a[k][i];
            }
        }
        n
    }
}

/// Multiplicity of every weight of `V(lambda)`, keyed by the weight in simple-root coordinates.
pub fn freudenthal_multiplicities_capped(rs: &RootSystem, lambda: &Weight, cap: u128) -> Result<BTreeMap<Weight, u64>> {
    let dim = rs.dim(lambda)?;
    if dim > cap {
        return Err(Error::RepTooLarge { dim, cap });
    }
    let dominant = dominant_multiplicities(rs, lambda)?;
    let a = rs.cartan_matrix();
    let r = rs.rank();
    let mut out = BTreeMap::new();
    let simple: Vec<Weight> = (0..r).map(|i| rs.simple_root(i)).collect();
    for (n0, m) in &dominant {
        let x0: Vec<i64> = {
            let lam = rs.fundamental_ints(lambda).expect("dominant integral");
            (0..r).map(|i| lam[i] - (0..r).map(|j| a[i][j] * n0[j]).sum::<i64>()).collect()
        };
        let mut seen: HashSet<Vec<i64>> = HashSet::from([n0.clone()]);
        let mut stack = vec![(n0.clone(), x0)];
        while let Some((n, x)) = stack.pop() {
            let mut mu = lambda.clone();
            for (j, &nj) in n.iter().enumerate() {
                if nj != 0 {
                    mu = mu.add_scaled(&int(-nj), &simple[j]);
                }
            }
            out.insert(mu, *m);
            for i in 0..r {
                if x[i] == 0 {
                    continue;
                }
                let xi = x[i];
                let mut n2 = n.clone();
                n2[i] += xi;
                if seen.insert(n2.clone()) {
                    let x2: Vec<i64> = x.iter().enumerate().map(|(k, xk)| xk - xi * a[k][i]).collect();
                    stack.push((n2, x2));
                }
            }
        }
    }
    let total: u128 = out.values().map(|&m| m as u128).sum();
    if total != dim {
        return Err(Error::RepresentationInconsistent(format!(
            "multiplicities sum to {total}, Weyl dimension is {dim}"
        )));
    }
    Ok(out)
}

/// Multiplicities of the dominant weights of `V(lambda)`, keyed by depth, in order of
/// increasing depth.
pub(crate) fn dominant_multiplicities(rs: &RootSystem, lambda: &Weight) -> Result<Vec<(Vec<i64>, u64)>> {
    let lam = rs
        .fundamental_ints(lambda)
        .filter(|c| c.iter().all(|&x| x >= 0))
        .ok_or_else(|| Error::NonDominant(format!("{lambda} is not dominant integral")))?;
    let r = rs.rank();
    let mut l = num_bigint::BigInt::from(1);
    for i in 0..r {
        let d = rs.form().gram()[i][i].clone() * half();
        l = l.lcm(d.denom());
    }
    let scaled_half_norm: Vec<i64> = (0..r)
        .map(|i| {
            let d = rs.form().gram()[i][i].clone() * half() * Rational::from_integer(l.clone());
            crate::rational::to_i64(&d).expect("integral after scaling")
        })
        .collect();
    let eng = Engine { rs, lam: lam.clone(), scaled_half_norm };
    let roots = rs.positive_root_coeffs();

    // Dominant weights below lambda are connected to lambda by dominant steps along
    // positive roots.
    let mut dominant: Vec<Vec<i64>> = vec![vec![0; r]];
    let mut seen: HashSet<Vec<i64>> = HashSet::from([vec![0; r]]);
    let mut k = 0;
    while k < dominant.len() {
        let n = dominant[k].clone();
        for c in roots {
            let n2: Vec<i64> = n.iter().zip(c).map(|(a, b)| a + b).collect();
            if eng.x_of(&n2).iter().all(|&x| x >= 0) && seen.insert(n2.clone()) {
                dominant.push(n2);
            }
        }
        k += 1;
    }
    dominant.sort_by_key(|n| (n.iter().sum::<i64>(), n.clone()));

    let mut mult: HashMap<Vec<i64>, u64> = HashMap::new();
    let mut out = Vec::with_capacity(dominant.len());
    for n in dominant {
        let m = if n.iter().all(|&x| x == 0) {
            1
        } else {
            let x = eng.x_of(&n);
            let mut sum: i128 = 0;
            for c in roots {
                let mut k = 1;
                loop {
                    let up: Vec<i64> = n.iter().zip(c).map(|(a, b)| a - k * b).collect();
                    let dom = eng.dominant_depth(up.clone());
                    let Some(&mu_up) = mult.get(&dom) else { break };
                    let x_up = eng.x_of(&up);
                    sum += mu_up as i128 * eng.pair(&x_up, c) as i128;
                    k += 1;
                }
            }
            // (lambda+rho)^2 - (mu+rho)^2 = (sum n_i alpha_i, lambda + mu + 2 rho)
            let denom: i128 = (0..r)
                .map(|i| n[i] as i128 * eng.scaled_half_norm[i] as i128 * (lam[i] + x[i] + 2) as i128)
                .sum();
            let num = 2 * sum;
            if denom <= 0 || num % denom != 0 {
                return Err(Error::RepresentationInconsistent(format!(
                    "Freudenthal recursion gave {num}/{denom} at depth {n:?}"
                )));
            }
            (num / denom) as u64
        };
        mult.insert(n.clone(), m);
        out.push((n, m));
    }
    // Zero-multiplicity dominant weights never occur for irreducible modules.
    debug_assert!(out.iter().all(|(_, m)| *m > 0));
    Ok(out)
}
