//! Chevalley-basis structure constants `[X_a, X_b] = N_{a,b} X_{a+b}`.
//!
//! Signs are fixed by declaring `N > 0` on extraspecial pairs; every other constant follows
//! from the quadruple and triple relations between the `N`s. The construction is
//! validated by the Jacobi identity in the tests.

use std::collections::HashMap;

use num_traits::Zero;

use super::RootSystem;
use crate::error::{Error, Result};
use crate::rational::{int, to_i64, Rational};

type Root = Vec<i64>;

#[derive(Debug, Clone)]
pub struct StructureConstants {
    positive: Vec<Root>,
    index: HashMap<Root, usize>,
    /// `(alpha, alpha)` for each positive root.
    norms: Vec<Rational>,
    /// `N_{a,b}` for ordered pairs of positive roots whose sum is a root.
    table: HashMap<(usize, usize), i64>,
    /// For each non-simple positive root, its extraspecial pair `(simple index, index of the rest)`.
    extraspecial: Vec<Option<(usize, usize)>>,
}

fn add(a: &[i64], b: &[i64]) -> Root {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn neg(a: &[i64]) -> Root {
    a.iter().map(|x| -x).collect()
}

fn is_positive(a: &[i64]) -> bool {
    a.iter().any(|&x| x > 0)
}

impl StructureConstants {
    pub fn new(rs: &RootSystem) -> Result<Self> {
        let positive: Vec<Root> = rs.positive_root_coeffs().to_vec();
        let index: HashMap<Root, usize> = positive.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        let norms = rs.positive_roots().iter().map(|a| rs.form().norm(a)).collect();
        let rank = rs.rank();
        let mut sc = StructureConstants {
            positive,
            index,
            norms,
            table: HashMap::new(),
            extraspecial: Vec::new(),
        };
        sc.extraspecial = vec![None; sc.positive.len()];
        for xi in rank..sc.positive.len() {
            let root = sc.positive[xi].clone();
            let (j, rest) = (0..rank)
                .find_map(|j| {
                    let mut r = root.clone();
                    r[j] -= 1;
                    sc.index.get(&r).map(|&k| (j, k))
                })
                .ok_or_else(|| Error::StructureConstants(format!("no extraspecial pair for {root:?}")))?;
            sc.extraspecial[xi] = Some((j, rest));
            let alpha_p = j;
            let beta_p = rest;
            // p = max k with beta' - k alpha' a root
            let mut p = 0;
            let mut down = sc.positive[beta_p].clone();
            loop {
                down[j] -= 1;
                if sc.is_root(&down) {
                    p += 1;
                } else {
                    break;
                }
            }
            let n_es = p + 1;
            sc.store(alpha_p, beta_p, n_es);
            // all other positive pairs summing to xi
            for a in 0..xi {
                let b_root: Root = root.iter().zip(&sc.positive[a]).map(|(x, y)| x - y).collect();
                let Some(&b) = sc.index.get(&b_root) else { continue };
                if a > b || (a == alpha_p && b == beta_p) || (a == beta_p && b == alpha_p) {
                    continue;
                }
                let v = sc.from_quadruple(a, b, alpha_p, beta_p, n_es, xi)?;
                sc.store(a, b, v);
            }
        }
        Ok(sc)
    }

    fn store(&mut self, a: usize, b: usize, v: i64) {
        self.table.insert((a, b), v);
        self.table.insert((b, a), -v);
    }

    fn is_root(&self, r: &[i64]) -> bool {
        self.index.contains_key(r) || self.index.contains_key(&neg(r))
    }

    fn norm(&self, r: &[i64]) -> Rational {
        let k = self.index.get(r).or_else(|| self.index.get(&neg(r))).expect("root");
        self.norms[*k].clone()
    }

    /// `N_{a,b}` for pairs summing to `xi` from the extraspecial pair `(a', b')`:
    /// `N_{a,b} = |xi|^2 / N_{a',b'} ( N_{b,-a'} N_{a,-b'} / |b-a'|^2 + N_{-a',a} N_{b,-b'} / |a-a'|^2 )`.
    fn from_quadruple(&self, a: usize, b: usize, ap: usize, bp: usize, n_es: i64, xi: usize) -> Result<i64> {
        let ra = &self.positive[a];
        let rb = &self.positive[b];
        let rap = &self.positive[ap];
        let rbp = &self.positive[bp];
        let mut acc = Rational::zero();
        let b_minus_ap = add(rb, &neg(rap));
        if self.is_root(&b_minus_ap) {
            let t = int(self.n(rb, &neg(rap)) * self.n(ra, &neg(rbp)));
            acc += t / self.norm(&b_minus_ap);
        }
        let a_minus_ap = add(ra, &neg(rap));
        if self.is_root(&a_minus_ap) {
            let t = int(self.n(&neg(rap), ra) * self.n(rb, &neg(rbp)));
            acc += t / self.norm(&a_minus_ap);
        }
        let v = acc * &self.norms[xi] / int(n_es);
        to_i64(&v).ok_or_else(|| Error::StructureConstants(format!("non-integral N for {ra:?}, {rb:?}: {v}")))
    }

    /// `N_{x,y}` for arbitrary roots; zero when `x + y` is not a root.
    pub fn n(&self, x: &[i64], y: &[i64]) -> i64 {
        let s = add(x, y);
        if s.iter().all(|&c| c == 0) || !self.is_root(&s) {
            return 0;
        }
        match (is_positive(x), is_positive(y)) {
            (true, true) => self.table[&(self.index[x], self.index[y])],
            (false, false) => -self.n(&neg(x), &neg(y)),
            (false, true) => -self.n(y, x),
            (true, false) => {
                // x + y + z = 0: N_{x,y}/|z|^2 = N_{y,z}/|x|^2 = N_{z,x}/|y|^2
                let z = neg(&s);
                let v = if is_positive(&s) {
                    // y, z negative
                    int(-self.n(&neg(y), &neg(&z))) * self.norm(&z) / self.norm(x)
                } else {
                    // z, x positive
                    int(self.n(&z, x)) * self.norm(&z) / self.norm(y)
                };
                to_i64(&v).expect("structure constants are integers")
            }
        }
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    /// Extraspecial pair of a non-simple positive root, as (simple index, positive-root index).
    pub fn extraspecial_pair(&self, root_index: usize) -> Option<(usize, usize)> {
        self.extraspecial[root_index]
    }

    /// `c_a` with `phi(X_a) = c_a X_{p(a)}` for the diagram automorphism `phi` fixed by
    /// `phi(X_{alpha_i}) = X_{alpha_{p(i)}}`, for every positive root `a`.
    pub fn automorphism_signs(&self, perm: &[usize]) -> Result<Vec<i64>> {
        let rank = perm.len();
        let permute = |r: &[i64]| -> Root {
            let mut out = vec![0; rank];
            for (i, &c) in r.iter().enumerate() {
                out[perm[i]] = c;
            }
            out
        };
        let mut signs = vec![0i64; self.positive.len()];
        for s in signs.iter_mut().take(rank) {
            *s = 1;
        }
        for xi in rank..self.positive.len() {
            let (j, rest) = self.extraspecial[xi].expect("non-simple");
            let mut alpha_j = vec![0; rank];
            alpha_j[j] = 1;
            let rest_root = &self.positive[rest];
            let num = self.n(&permute(&alpha_j), &permute(rest_root));
            let den = self.n(&alpha_j, rest_root);
            let c = signs[rest] * num;
            if c % den != 0 || (c / den).abs() != 1 {
                return Err(Error::StructureConstants(format!(
                    "diagram automorphism sign {c}/{den} at {:?}",
                    self.positive[xi]
                )));
            }
            signs[xi] = c / den;
        }
        Ok(signs)
    }
}

/// Checks that `N` defines a Lie algebra: builds the bracket on the Chevalley basis
/// `{h_i} u {X_a}` and verifies antisymmetry and the Jacobi identity on all triples.
pub fn verify_jacobi(rs: &RootSystem, sc: &StructureConstants) -> Result<()> {
    let rank = rs.rank();
    let mut roots: Vec<Root> = sc.positive.clone();
    roots.extend(sc.positive.iter().map(|r| neg(r)));
    let nroots = roots.len();
    let dim = rank + nroots;
    let ridx: HashMap<Root, usize> = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
    let cartan = rs.cartan_matrix();
    let gram = rs.form().gram();
    // bracket of basis elements as a sparse vector
    let bracket = |u: usize, v: usize| -> Vec<(usize, Rational)> {
        match (u < rank, v < rank) {
            (true, true) => vec![],
            (true, false) => {
                let a = &roots[v - rank];
                let c: i64 = (0..rank).map(|j| a[j] * cartan[u][j]).sum();
                if c == 0 { vec![] } else { vec![(v, int(c))] }
            }
            (false, true) => {
                let a = &roots[u - rank];
                let c: i64 = (0..rank).map(|j| a[j] * cartan[v][j]).sum();
                if c == 0 { vec![] } else { vec![(u, int(-c))] }
            }
            (false, false) => {
                let a = &roots[u - rank];
                let b = &roots[v - rank];
                let s = add(a, b);
                if s.iter().all(|&x| x == 0) {
                    // [X_a, X_-a] = H_a = sum_i c_i (alpha_i, alpha_i)/(a, a) h_i
                    let na = sc.norm(a);
                    (0..rank)
                        .filter(|&i| a[i] != 0)
                        .map(|i| (i, int(a[i]) * &gram[i][i] / &na))
                        .collect()
                } else if let Some(&k) = ridx.get(&s) {
                    let n = sc.n(a, b);
                    if n == 0 { vec![] } else { vec![(rank + k, int(n))] }
                } else {
                    vec![]
                }
            }
        }
    };
    let br_vec = |vec: &[(usize, Rational)], w: usize| -> HashMap<usize, Rational> {
        let mut out: HashMap<usize, Rational> = HashMap::new();
        for (k, c) in vec {
            for (t, d) in bracket(*k, w) {
                *out.entry(t).or_insert_with(Rational::zero) += c * d;
            }
        }
        out
    };
    for x in 0..dim {
        for y in 0..dim {
            let xy = bracket(x, y);
            let yx = bracket(y, x);
            let sum: HashMap<usize, Rational> = {
                let mut m: HashMap<usize, Rational> = HashMap::new();
                for (k, c) in xy.iter().chain(yx.iter()) {
                    *m.entry(*k).or_insert_with(Rational::zero) += c;
                }
                m
            };
            if sum.values().any(|c| !c.is_zero()) {
                return Err(Error::StructureConstants(format!("bracket not antisymmetric at ({x},{y})")));
            }
        }
    }
    for x in 0..dim {
        for y in x + 1..dim {
            let xy = bracket(x, y);
            for z in y + 1..dim {
                // [[x,y],z] + [[y,z],x] + [[z,x],y]
                let mut total: HashMap<usize, Rational> = HashMap::new();
                for (part, w) in [(xy.clone(), z), (bracket(y, z), x), (bracket(z, x), y)] {
                    for (k, c) in br_vec(&part, w) {
                        *total.entry(k).or_insert_with(Rational::zero) += c;
                    }
                }
                if total.values().any(|c| !c.is_zero()) {
                    return Err(Error::StructureConstants(format!("Jacobi fails on ({x},{y},{z})")));
                }
            }
        }
    }
    Ok(())
}
