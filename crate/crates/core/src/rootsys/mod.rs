//! Root systems, Weyl groups and highest-weight combinatorics in exact arithmetic.
//!
//! Everything is expressed in the simple-root basis of `h*`. The bilinear form is
//! normalized so that long roots have squared length 2 in every simple component.

mod cartan;
pub mod chevalley;
mod dimension;
mod weight;
mod weyl;

use std::collections::HashSet;

use num_traits::{Signed, Zero};

pub use cartan::{CartanType, Component, Family};
pub use dimension::{freudenthal_multiplicities, freudenthal_multiplicities_capped, weyl_dim, DEFAULT_REP_CAP};
pub use weight::{BilinearForm, Weight};
pub use weyl::{IntMatrix, WeylElement, WeylIter, DEFAULT_WEYL_CAP};

use crate::error::{Error, Result};
use crate::linalg::{self, QMatrix};
use crate::rational::{int, Rational};

pub const DEFAULT_RANK_CAP: usize = 8;

#[derive(Debug, Clone)]
pub struct RootSystem {
    cartan_type: CartanType,
    /// `cartan[i][j] = <alpha_j, alpha_i^vee>`.
    cartan: Vec<Vec<i64>>,
    cartan_inv: QMatrix,
    form: BilinearForm,
    positive: Vec<Weight>,
    positive_coeffs: Vec<Vec<i64>>,
    rho: Weight,
}

/// Builds the root system of `t` with the default rank cap.
pub fn build_root_system(t: &CartanType) -> Result<RootSystem> {
    RootSystem::with_rank_cap(t, DEFAULT_RANK_CAP)
}

impl RootSystem {
    pub fn new(t: &CartanType) -> Result<Self> {
        build_root_system(t)
    }

    pub fn with_rank_cap(t: &CartanType, cap: usize) -> Result<Self> {
        let rank = t.rank();
        if rank > cap {
            return Err(Error::UnsupportedRank { rank, cap });
        }
        let gram = t.gram();
        let cartan: Vec<Vec<i64>> = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| {
                        let a = &gram[i][j] * int(2) / &gram[i][i];
                        crate::rational::to_i64(&a).expect("Cartan entries are integers")
                    })
                    .collect()
            })
            .collect();
        let cartan_q: QMatrix = cartan.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
        let cartan_inv = linalg::inverse(&cartan_q)
            .ok_or_else(|| Error::InvalidType(format!("{t}: singular Cartan matrix")))?;
        let positive_coeffs = generate_positive_roots(&cartan);
        if positive_coeffs.len() != t.positive_root_count() {
            return Err(Error::InvalidType(format!(
                "{t}: generated {} positive roots, expected {}",
                positive_coeffs.len(),
                t.positive_root_count()
            )));
        }
        let positive: Vec<Weight> = positive_coeffs.iter().map(|c| Weight::from_ints(c)).collect();
        let mut sum = Weight::zero(rank);
        for a in &positive {
            sum = &sum + a;
        }
        let rho = sum.scale(&crate::rational::half());
        Ok(RootSystem {
            cartan_type: t.clone(),
            cartan,
            cartan_inv,
            form: BilinearForm::new(gram),
            positive,
            positive_coeffs,
            rho,
        })
    }

    pub fn cartan_type(&self) -> &CartanType {
        &self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn form(&self) -> &BilinearForm {
        &self.form
    }

    /// Positive roots ordered by height, then by decreasing coefficient vector
    /// (so the simple roots come first, in index order).
    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive
    }

    pub fn positive_root_coeffs(&self) -> &[Vec<i64>] {
        &self.positive_coeffs
    }

    pub fn simple_root(&self, i: usize) -> Weight {
        Weight::simple(self.rank(), i)
    }

    /// All roots: the positive ones followed by their negatives.
    pub fn roots(&self) -> Vec<Weight> {
        let mut all = self.positive.clone();
        all.extend(self.positive.iter().map(|a| -a));
        all
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn check_rank(&self, v: &Weight) -> Result<()> {
        if v.rank() == self.rank() {
            Ok(())
        } else {
            Err(Error::RankMismatch { expected: self.rank(), got: v.rank() })
        }
    }

    /// `<v, alpha_i^vee>`.
    pub fn simple_pairing(&self, v: &Weight, i: usize) -> Rational {
        v.coords()
            .iter()
            .zip(&self.cartan[i])
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, &a)| c * int(a))
            .sum()
    }

    /// Coordinates of `v` in the fundamental-weight basis.
    pub fn to_fundamental(&self, v: &Weight) -> Vec<Rational> {
        (0..self.rank()).map(|i| self.simple_pairing(v, i)).collect()
    }

    pub fn from_fundamental(&self, c: &[Rational]) -> Weight {
        Weight::new(linalg::mat_vec(&self.cartan_inv, c))
    }

    pub fn from_fundamental_ints(&self, c: &[i64]) -> Weight {
        let q: Vec<Rational> = c.iter().map(|&x| int(x)).collect();
        self.from_fundamental(&q)
    }

    pub fn fundamental_weight(&self, i: usize) -> Weight {
        let mut c = vec![0; self.rank()];
        c[i] = 1;
        self.from_fundamental_ints(&c)
    }

    /// Integral fundamental-weight coordinates, if `v` is integral.
    pub fn fundamental_ints(&self, v: &Weight) -> Option<Vec<i64>> {
        self.to_fundamental(v).iter().map(crate::rational::to_i64).collect()
    }

    pub fn is_dominant(&self, v: &Weight) -> bool {
        (0..self.rank()).all(|i| !self.simple_pairing(v, i).is_negative())
    }

    pub fn is_dominant_integral(&self, v: &Weight) -> bool {
        self.fundamental_ints(v).is_some_and(|c| c.iter().all(|&x| x >= 0))
    }

    /// `s_i(v) = v - <v, alpha_i^vee> alpha_i`.
    pub fn reflect(&self, i: usize, v: &Weight) -> Weight {
        let mut coords = v.coords().to_vec();
        coords[i] -= self.simple_pairing(v, i);
        Weight::new(coords)
    }

    /// The highest root of a simple type (the adjoint highest weight).
    pub fn highest_root(&self) -> Option<Weight> {
        if !self.cartan_type.is_simple() {
            return None;
        }
        self.positive.last().cloned()
    }

    pub fn is_root(&self, v: &Weight) -> bool {
        match v.to_ints() {
            Some(c) => {
                let neg: Vec<i64> = c.iter().map(|x| -x).collect();
                self.positive_coeffs.contains(&c) || self.positive_coeffs.contains(&neg)
            }
            None => false,
        }
    }

    /// Order of `W` from the classification.
    pub fn weyl_order(&self) -> u128 {
        self.cartan_type.weyl_order()
    }

    /// Weyl dimension of `V(mu)` for dominant integral `mu`.
    pub fn dim(&self, mu: &Weight) -> Result<u128> {
        self.check_rank(mu)?;
        if !self.is_dominant_integral(mu) {
            return Err(Error::NonDominant(format!("{mu} is not dominant integral")));
        }
        weyl_dim(&self.positive, &self.form, mu)
    }
}

/// Positive roots by alpha-strings: for positive `b != alpha_i`, `b + alpha_i` is a root
/// iff `p - <b, alpha_i^vee> > 0`, where `p` counts roots `b - k alpha_i`.
fn generate_positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut all: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut c = vec![0; n];
            c[i] = 1;
            c
        })
        .collect();
    let mut seen: HashSet<Vec<i64>> = all.iter().cloned().collect();
    let mut layer = all.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for b in &layer {
            for i in 0..n {
                let is_simple_i = b.iter().enumerate().all(|(j, &x)| x == if j == i { 1 } else { 0 });
                if is_simple_i {
                    continue;
                }
                let mut p = 0;
                let mut down = b.clone();
                loop {
                    down[i] -= 1;
                    if down[i] >= 0 && seen.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..n).map(|j| b[j] * cartan[i][j]).sum();
                if p - pairing > 0 {
                    let mut up = b.clone();
                    up[i] += 1;
                    if seen.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    all
}
