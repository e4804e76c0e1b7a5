//! `V(lambda)` as explicit matrices, built weight space by weight space from lowering
//! monomials on a highest weight vector, and the intertwiner `T` for `theta`.
//!
//! The basis is a set of monomials `f_i b` (with `b` an earlier basis vector) that is
//! independent for the contravariant form `<f_i x, y> = <x, e_i y>`, `<v, v> = 1`. The
//! form is kept as a Gram matrix; vectors outside the basis are expanded by solving
//! against it.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, inverse, QMatrix, SparseMatrix};
use crate::rational::{int, to_i64, Rational};
use crate::realform::RealFormData;
use crate::rootsys::{freudenthal_multiplicities_capped, RootSystem, Weight};

pub const DEFAULT_EXPLICIT_CAP: u128 = 200;

type SVec = BTreeMap<usize, Rational>;

#[derive(Debug, Clone)]
struct Space {
    depth: Vec<i64>,
    start: usize,
    len: usize,
    gram: QMatrix,
}

#[derive(Debug, Clone)]
pub struct ExplicitRep {
    lambda: Weight,
    cartan: Vec<Vec<i64>>,
    weights: Vec<Weight>,
    /// `Some((i, b))` when basis vector is `f_i` applied to basis vector `b`.
    provenance: Vec<Option<(usize, usize)>>,
    spaces: Vec<Space>,
    e: Vec<SparseMatrix>,
    f: Vec<SparseMatrix>,
    h: Vec<SparseMatrix>,
}

fn axpy(acc: &mut SVec, s: &Rational, v: &SVec) {
    for (k, x) in v {
        let e = acc.entry(*k).or_insert_with(Rational::zero);
        *e += s * x;
        if e.is_zero() {
            acc.remove(k);
        }
    }
}

fn unit(k: usize) -> SVec {
    SVec::from([(k, Rational::one())])
}

/// `<x, v>` for the form restricted to one weight space; `v` uses global indices.
fn pair(space: &Space, x_local: usize, v: &SVec) -> Rational {
    v.iter().map(|(k, c)| &space.gram[x_local][k - space.start] * c).sum()
}

pub fn build_explicit_rep(rs: &RootSystem, lambda: &Weight) -> Result<ExplicitRep> {
    build_explicit_rep_capped(rs, lambda, DEFAULT_EXPLICIT_CAP)
}

pub fn build_explicit_rep_capped(rs: &RootSystem, lambda: &Weight, cap: u128) -> Result<ExplicitRep> {
    let mults = freudenthal_multiplicities_capped(rs, lambda, cap)?;
    let r = rs.rank();
    let cartan: Vec<Vec<i64>> = rs.cartan_matrix().to_vec();
    let mut depths: Vec<(Vec<i64>, usize)> = mults
        .iter()
        .map(|(mu, &m)| ((lambda - mu).to_ints().expect("root lattice"), m as usize))
        .collect();
    depths.sort_by_key(|(n, _)| (n.iter().sum::<i64>(), n.clone()));

    let mut rep = ExplicitRep {
        lambda: lambda.clone(),
        cartan: cartan.clone(),
        weights: Vec::new(),
        provenance: Vec::new(),
        spaces: Vec::new(),
        e: Vec::new(),
        f: Vec::new(),
        h: Vec::new(),
    };
    let mut space_of: HashMap<Vec<i64>, usize> = HashMap::new();
    // images of each basis vector under e_j and f_j
    let mut e_img: Vec<Vec<SVec>> = vec![Vec::new(); r];
    let mut f_img: Vec<Vec<SVec>> = vec![Vec::new(); r];
    let lam_fund = rs.fundamental_ints(lambda).expect("dominant integral");
    let pairing = |depth: &[i64], i: usize| -> i64 { lam_fund[i] - (0..r).map(|j| cartan[i][j] * depth[j]).sum::<i64>() };

    for (depth, mult) in depths {
        let start = rep.weights.len();
        let mu = {
            let mut c = lambda.coords().to_vec();
            for (x, n) in c.iter_mut().zip(&depth) {
                *x -= int(*n);
            }
            Weight::new(c)
        };
        if depth.iter().all(|&x| x == 0) {
            rep.spaces.push(Space { depth: depth.clone(), start, len: 1, gram: vec![vec![Rational::one()]] });
            space_of.insert(depth, 0);
            rep.weights.push(mu);
            rep.provenance.push(None);
            for j in 0..r {
                e_img[j].push(SVec::new());
                f_img[j].push(SVec::new());
            }
            continue;
        }
        // candidates f_i b, with their e_j images
        let mut cands: Vec<(usize, usize, Vec<SVec>)> = Vec::new();
        for i in 0..r {
            if depth[i] == 0 {
                continue;
            }
            let mut prev = depth.clone();
            prev[i] -= 1;
            let Some(&ps) = space_of.get(&prev) else { continue };
            let sp = &rep.spaces[ps];
            for b in sp.start..sp.start + sp.len {
                let imgs: Vec<SVec> = (0..r)
                    .map(|j| {
                        let mut v = SVec::new();
                        for (x, c) in &e_img[j][b] {
                            axpy(&mut v, c, &f_img[i][*x]);
                        }
                        if i == j {
                            axpy(&mut v, &int(pairing(&prev, i)), &unit(b));
                        }
                        v
                    })
                    .collect();
                cands.push((i, b, imgs));
            }
        }
        // <f_i b, f_k c> = <b, e_i f_k c>
        let space_index = |i: usize| -> usize {
            let mut prev = depth.clone();
            prev[i] -= 1;
            space_of[&prev]
        };
        let inner = |a: &(usize, usize, Vec<SVec>), c: &(usize, usize, Vec<SVec>)| -> Rational {
            let sp = &rep.spaces[space_index(a.0)];
            pair(sp, a.1 - sp.start, &c.2[a.0])
        };
        let mut selected: Vec<usize> = Vec::new();
        let mut g_ss: QMatrix = Vec::new();
        let mut g_inv: QMatrix = Vec::new();
        for (k, cand) in cands.iter().enumerate() {
            if selected.len() == mult {
                break;
            }
            let g: Vec<Rational> = selected.iter().map(|&s| inner(&cands[s], cand)).collect();
            let gkk = inner(cand, cand);
            let proj: Rational = linalg::mat_vec(&g_inv, &g).iter().zip(&g).map(|(a, b)| a * b).sum();
            let residual = &gkk - proj;
            if residual.is_zero() {
                continue;
            }
            if residual.is_negative() {
                return Err(Error::RepresentationInconsistent(format!(
                    "contravariant form is not positive at weight {mu}"
                )));
            }
            for (row, x) in g_ss.iter_mut().zip(&g) {
                row.push(x.clone());
            }
            let mut last = g.clone();
            last.push(gkk);
            g_ss.push(last);
            g_inv = inverse(&g_ss).expect("Gram of selected candidates is nonsingular");
            selected.push(k);
        }
        if selected.len() != mult {
            return Err(Error::RepresentationInconsistent(format!(
                "weight {mu}: found {} independent vectors, multiplicity is {mult}",
                selected.len()
            )));
        }
        for (pos, &k) in selected.iter().enumerate() {
            let (i, b, imgs) = &cands[k];
            rep.weights.push(mu.clone());
            rep.provenance.push(Some((*i, *b)));
            for j in 0..r {
                e_img[j].push(imgs[j].clone());
                f_img[j].push(SVec::new());
            }
            debug_assert_eq!(rep.weights.len(), start + pos + 1);
        }
        // expand every candidate in the new basis
        for (k, cand) in cands.iter().enumerate() {
            let v = match selected.iter().position(|&s| s == k) {
                Some(pos) => unit(start + pos),
                None => {
                    let g: Vec<Rational> = selected.iter().map(|&s| inner(&cands[s], cand)).collect();
                    linalg::mat_vec(&g_inv, &g)
                        .into_iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(pos, c)| (start + pos, c))
                        .collect()
                }
            };
            f_img[cand.0][cand.1] = v;
        }
        space_of.insert(depth.clone(), rep.spaces.len());
        rep.spaces.push(Space { depth, start, len: mult, gram: g_ss });
    }

    let dim = rep.weights.len();
    let to_matrix = |imgs: &[SVec]| {
        SparseMatrix::from_triplets(
            dim,
            dim,
            imgs.iter()
                .enumerate()
                .flat_map(|(col, v)| v.iter().map(move |(row, c)| (*row, col, c.clone()))),
        )
    };
    rep.e = e_img.iter().map(|v| to_matrix(v)).collect();
    rep.f = f_img.iter().map(|v| to_matrix(v)).collect();
    rep.h = (0..r)
        .map(|i| SparseMatrix::diagonal(rep.weights.iter().map(|mu| rs.simple_pairing(mu, i)).collect()))
        .collect();
    rep.verify()?;
    Ok(rep)
}

impl ExplicitRep {
    pub fn dimension(&self) -> usize {
        self.weights.len()
    }

    pub fn highest_weight(&self) -> &Weight {
        &self.lambda
    }

    pub fn rank(&self) -> usize {
        self.e.len()
    }

    /// Weight of every basis vector, in basis order.
    pub fn weight_basis(&self) -> &[Weight] {
        &self.weights
    }

    /// Basis vector `k` is `f_i` applied to basis vector `b` when this returns `Some((i, b))`.
    pub fn provenance(&self, k: usize) -> Option<(usize, usize)> {
        self.provenance[k]
    }

    pub fn e(&self, i: usize) -> &SparseMatrix {
        &self.e[i]
    }

    pub fn f(&self, i: usize) -> &SparseMatrix {
        &self.f[i]
    }

    pub fn h(&self, i: usize) -> &SparseMatrix {
        &self.h[i]
    }

    /// Gram matrix of the contravariant form (block diagonal over weight spaces).
    pub fn gram(&self) -> SparseMatrix {
        let dim = self.dimension();
        SparseMatrix::from_triplets(
            dim,
            dim,
            self.spaces.iter().flat_map(|s| {
                (0..s.len).flat_map(move |a| (0..s.len).map(move |b| (s.start + a, s.start + b, s.gram[a][b].clone())))
            }),
        )
    }

    /// Multiplicity of each weight, keyed by `lambda - mu` in simple-root coordinates.
    pub fn multiplicities(&self) -> BTreeMap<Vec<i64>, usize> {
        self.spaces.iter().map(|s| (s.depth.clone(), s.len)).collect()
    }

    pub fn gram_is_positive_definite(&self) -> bool {
        self.spaces.iter().all(|s| linalg::is_positive_definite(&s.gram))
    }

    /// Checks the defining relations, contravariance and positivity as exact matrix identities.
    pub fn verify(&self) -> Result<()> {
        let fail = |m: String| Err(Error::RepresentationInconsistent(m));
        let r = self.rank();
        let a = &self.cartan;
        for i in 0..r {
            for j in 0..r {
                if self.h[i].commutator(&self.e[j]) != self.e[j].scale(&int(a[i][j])) {
                    return fail(format!("[h{}, e{}]", i + 1, j + 1));
                }
                if self.h[i].commutator(&self.f[j]) != self.f[j].scale(&int(-a[i][j])) {
                    return fail(format!("[h{}, f{}]", i + 1, j + 1));
                }
                let ef = self.e[i].commutator(&self.f[j]);
                let ok = if i == j { ef == self.h[i] } else { ef.is_zero() };
                if !ok {
                    return fail(format!("[e{}, f{}]", i + 1, j + 1));
                }
                if i != j {
                    for (x, y, name) in [(&self.e[i], &self.e[j], "e"), (&self.f[i], &self.f[j], "f")] {
                        let mut m = y.clone();
                        for _ in 0..(1 - a[i][j]) {
                            m = x.commutator(&m);
                        }
                        if !m.is_zero() {
                            return fail(format!("Serre relation ad({name}{})^{} {name}{}", i + 1, 1 - a[i][j], j + 1));
                        }
                    }
                }
            }
        }
        let g = self.gram();
        for i in 0..r {
            if g.mul(&self.e[i]) != self.f[i].transpose().mul(&g) {
                return fail(format!("e{} and f{} are not adjoint", i + 1, i + 1));
            }
        }
        if !self.gram_is_positive_definite() {
            return fail("contravariant form is not positive definite".into());
        }
        Ok(())
    }
}

/// The intertwiner `T` with `T pi(X) = pi(theta X) T`, `T v_lambda = v_lambda`.
#[derive(Debug, Clone)]
pub struct IntertwinerT {
    matrix: SparseMatrix,
}

impl IntertwinerT {
    pub fn matrix(&self) -> &SparseMatrix {
        &self.matrix
    }

    pub fn trace(&self) -> Rational {
        self.matrix.trace()
    }
}

/// `theta(e_i) = s_i e_{p(i)}`, `s_i = -1` on painted nodes.
fn generator_signs(rf: &RealFormData) -> Vec<Rational> {
    (0..rf.diagram.involution().len())
        .map(|i| if rf.diagram.is_painted(i) { int(-1) } else { int(1) })
        .collect()
}

pub fn build_intertwiner(rep: &ExplicitRep, rf: &RealFormData) -> Result<IntertwinerT> {
    let p = rf.theta.permutation();
    if rf.theta.apply(&rep.lambda) != rep.lambda {
        return Err(Error::ThetaMovesHighestWeight);
    }
    let s = generator_signs(rf);
    let dim = rep.dimension();
    let f_cols: Vec<SparseMatrix> = rep.f.iter().map(SparseMatrix::transpose).collect();
    let mut cols: Vec<SVec> = Vec::with_capacity(dim);
    for k in 0..dim {
        let v = match rep.provenance[k] {
            None => unit(k),
            Some((i, b)) => {
                let mut v = SVec::new();
                for (x, c) in &cols[b] {
                    let img: SVec = f_cols[p[i]].row(*x).iter().cloned().collect();
                    axpy(&mut v, &(c * &s[i]), &img);
                }
                v
            }
        };
        cols.push(v);
    }
    let t = SparseMatrix::from_triplets(
        dim,
        dim,
        cols.iter()
            .enumerate()
            .flat_map(|(col, v)| v.iter().map(move |(row, c)| (*row, col, c.clone()))),
    );
    let fail = |m: String| Err(Error::IntertwinerInconsistent(m));
    for i in 0..rep.rank() {
        if t.mul(&rep.e[i]) != rep.e[p[i]].mul(&t).scale(&s[i]) {
            return fail(format!("T e{} != theta(e{}) T", i + 1, i + 1));
        }
        if t.mul(&rep.f[i]) != rep.f[p[i]].mul(&t).scale(&s[i]) {
            return fail(format!("T f{} != theta(f{}) T", i + 1, i + 1));
        }
        if t.mul(&rep.h[i]) != rep.h[p[i]].mul(&t) {
            return fail(format!("T h{} != h{} T", i + 1, p[i] + 1));
        }
    }
    if t.mul(&t) != SparseMatrix::identity(dim) {
        return fail("T^2 is not the identity".into());
    }
    let g = rep.gram();
    if g.mul(&t) != t.transpose().mul(&g) {
        return fail("T is not self-adjoint for the contravariant form".into());
    }
    Ok(IntertwinerT { matrix: t })
}

/// `|tr T|`.
pub fn signature_bruteforce(_rep: &ExplicitRep, t: &IntertwinerT) -> Result<u128> {
    let tr = t.trace();
    to_i64(&tr)
        .map(|x| x.unsigned_abs() as u128)
        .ok_or_else(|| Error::IntertwinerInconsistent(format!("trace {tr} is not an integer")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realform::parse_group;
    use crate::rootsys::build_root_system;

    fn rs(t: &str) -> RootSystem {
        build_root_system(&t.parse().unwrap()).unwrap()
    }

    #[test]
    fn sl2_spin_one() {
        let a1 = rs("A1");
        let rep = build_explicit_rep(&a1, &Weight::from_ints(&[1])).unwrap();
        assert_eq!(rep.dimension(), 3);
        let h: Vec<Rational> = (0..3).map(|k| rep.h(0).get(k, k)).collect();
        assert_eq!(h, vec![int(2), int(0), int(-2)]);
        // f v0 = v1, f v1 = c v2; e f v0 = 2 v0
        assert_eq!(rep.f(0).get(1, 0), int(1));
        assert_eq!(rep.e(0).mul(rep.f(0)).get(0, 0), int(2));
        assert_eq!(rep.gram().get(1, 1), int(2));
    }

    #[test]
    fn dimensions_match_weyl() {
        let a2 = rs("A2");
        assert_eq!(build_explicit_rep(&a2, &Weight::from_ints(&[1, 1])).unwrap().dimension(), 8);
        let a3 = rs("A3");
        let rep = build_explicit_rep(&a3, &Weight::from_ints(&[1, 1, 1])).unwrap();
        assert_eq!(rep.dimension(), 15);
        rep.verify().unwrap();
        let g2 = rs("G2");
        let lam = g2.from_fundamental_ints(&[1, 0]);
        let rep = build_explicit_rep(&g2, &lam).unwrap();
        assert_eq!(rep.dimension() as u128, g2.dim(&lam).unwrap());
        let b2 = rs("B2");
        let lam = b2.from_fundamental_ints(&[1, 1]);
        assert_eq!(build_explicit_rep(&b2, &lam).unwrap().dimension(), 16);
    }

    #[test]
    fn multiplicities_agree_with_freudenthal() {
        let c3 = rs("C3");
        let lam = c3.from_fundamental_ints(&[0, 1, 0]);
        let rep = build_explicit_rep(&c3, &lam).unwrap();
        let fr = freudenthal_multiplicities_capped(&c3, &lam, 1000).unwrap();
        let ours = rep.multiplicities();
        assert_eq!(ours.len(), fr.len());
        for (mu, m) in fr {
            let d = (&lam - &mu).to_ints().unwrap();
            assert_eq!(ours[&d] as u64, m);
        }
    }

    #[test]
    fn cap() {
        let a3 = rs("A3");
        assert!(matches!(
            build_explicit_rep(&a3, &a3.from_fundamental_ints(&[3, 3, 3])),
            Err(Error::RepTooLarge { .. })
        ));
    }

    #[test]
    fn intertwiners() {
        let (rs, rf) = parse_group("compact(A2)").unwrap();
        let rep = build_explicit_rep(&rs, &rs.from_fundamental_ints(&[2, 1])).unwrap();
        let t = build_intertwiner(&rep, &rf).unwrap();
        assert_eq!(*t.matrix(), SparseMatrix::identity(rep.dimension()));

        let (rs, rf) = parse_group("su(3,1)").unwrap();
        let rep = build_explicit_rep(&rs, &rs.highest_root().unwrap()).unwrap();
        let t = build_intertwiner(&rep, &rf).unwrap();
        assert_eq!(signature_bruteforce(&rep, &t).unwrap(), 3);

        let (rs, rf) = parse_group("sl(3,R)").unwrap();
        let rep = build_explicit_rep(&rs, &rs.highest_root().unwrap()).unwrap();
        let t = build_intertwiner(&rep, &rf).unwrap();
        assert_eq!(signature_bruteforce(&rep, &t).unwrap(), 2);
        let rep = build_explicit_rep(&rs, &rs.fundamental_weight(0)).unwrap();
        assert!(matches!(build_intertwiner(&rep, &rf), Err(Error::ThetaMovesHighestWeight)));

        let (rs, rf) = parse_group("sl(2,R)").unwrap();
        let rep = build_explicit_rep(&rs, &rs.highest_root().unwrap()).unwrap();
        assert_eq!(signature_bruteforce(&rep, &build_intertwiner(&rep, &rf).unwrap()).unwrap(), 1);
    }
}
