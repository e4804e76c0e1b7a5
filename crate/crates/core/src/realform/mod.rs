//! Real forms given by Vogan diagrams: the involution on `h*`, root classification,
//! the compact root system `Delta(k, t)` and the dimension ledger.

mod presets;

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Signed, Zero};

pub use presets::{all_presets, parse_diagram, parse_group, preset_names, Preset, PRESETS_TOML};

use crate::error::{Error, Result};
use crate::rational::{half, Rational};
use crate::rootsys::chevalley::StructureConstants;
use crate::rootsys::{CartanType, IntMatrix, RootSystem, Weight};

/// Dynkin diagram with an involution and a set of painted (noncompact) fixed nodes.
/// Indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VoganDiagram {
    cartan_type: CartanType,
    involution: Vec<usize>,
    painting: BTreeSet<usize>,
}

impl VoganDiagram {
    pub fn new(cartan_type: CartanType, involution: Vec<usize>, painting: impl IntoIterator<Item = usize>) -> Result<Self> {
        let rank = cartan_type.rank();
        if involution.len() != rank {
            return Err(Error::InvalidInvolution(format!(
                "permutation has {} entries, rank is {rank}",
                involution.len()
            )));
        }
        let mut seen = vec![false; rank];
        for &p in &involution {
            if p >= rank || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidInvolution(format!("{involution:?} is not a permutation")));
            }
        }
        if (0..rank).any(|i| involution[involution[i]] != i) {
            return Err(Error::InvalidInvolution(format!("{involution:?} does not square to the identity")));
        }
        let gram = cartan_type.gram();
        for i in 0..rank {
            for j in 0..rank {
                // the Cartan matrix is preserved iff the Gram matrix is (lengths are normalized per component)
                if gram[i][j] != gram[involution[i]][involution[j]] {
                    return Err(Error::InvalidInvolution(format!(
                        "{involution:?} is not a diagram automorphism of {cartan_type}"
                    )));
                }
            }
        }
        let painting: BTreeSet<usize> = painting.into_iter().collect();
        for &i in &painting {
            if i >= rank {
                return Err(Error::InvalidPainting(format!("node {} out of range", i + 1)));
            }
            if involution[i] != i {
                return Err(Error::InvalidPainting(format!("node {} is not fixed by the involution", i + 1)));
            }
        }
        Ok(VoganDiagram { cartan_type, involution, painting })
    }

    pub fn compact(cartan_type: CartanType) -> Self {
        let rank = cartan_type.rank();
        VoganDiagram { cartan_type, involution: (0..rank).collect(), painting: BTreeSet::new() }
    }

    pub fn cartan_type(&self) -> &CartanType {
        &self.cartan_type
    }

    pub fn involution(&self) -> &[usize] {
        &self.involution
    }

    pub fn painting(&self) -> &BTreeSet<usize> {
        &self.painting
    }

    pub fn is_painted(&self, i: usize) -> bool {
        self.painting.contains(&i)
    }

    pub fn is_inner(&self) -> bool {
        self.involution.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// `vogan(A3;inv=3,2,1;paint=2)`, 1-based, in the syntax accepted by [`parse_group`].
    pub fn spec_string(&self) -> String {
        let mut s = format!("vogan({}", self.cartan_type);
        if !self.is_inner() {
            let inv: Vec<String> = self.involution.iter().map(|p| (p + 1).to_string()).collect();
            s.push_str(&format!(";inv={}", inv.join(",")));
        }
        if !self.painting.is_empty() {
            let p: Vec<String> = self.painting.iter().map(|p| (p + 1).to_string()).collect();
            s.push_str(&format!(";paint={}", p.join(",")));
        }
        s.push(')');
        s
    }
}

/// `theta` on `h*`: the permutation matrix of the diagram involution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaAction {
    perm: Vec<usize>,
    matrix: IntMatrix,
}

impl ThetaAction {
    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn permutation(&self) -> &[usize] {
        &self.perm
    }

    pub fn apply(&self, v: &Weight) -> Weight {
        let mut out = vec![Rational::zero(); v.rank()];
        for (i, c) in v.coords().iter().enumerate() {
            out[self.perm[i]] = c.clone();
        }
        Weight::new(out)
    }

    pub fn apply_ints(&self, v: &[i64]) -> Vec<i64> {
        let mut out = vec![0; v.len()];
        for (i, &c) in v.iter().enumerate() {
            out[self.perm[i]] = c;
        }
        out
    }

    /// Dimension of the `+1` eigenspace (`t*`).
    pub fn dim_fixed(&self) -> usize {
        (0..self.perm.len()).filter(|&i| self.perm[i] >= i).count()
    }

    /// Dimension of the `-1` eigenspace (`a*`).
    pub fn dim_negated(&self) -> usize {
        self.perm.len() - self.dim_fixed()
    }
}

pub fn derive_theta(vd: &VoganDiagram, rs: &RootSystem) -> Result<ThetaAction> {
    if vd.cartan_type() != rs.cartan_type() {
        return Err(Error::InvalidInvolution(format!(
            "diagram is of type {}, root system of type {}",
            vd.cartan_type(),
            rs.cartan_type()
        )));
    }
    let n = rs.rank();
    let perm = vd.involution().to_vec();
    let a = rs.cartan_matrix();
    if (0..n).any(|i| (0..n).any(|j| a[perm[i]][perm[j]] != a[i][j])) {
        return Err(Error::InvalidInvolution(format!("{perm:?} does not preserve the Cartan matrix")));
    }
    let mut matrix = vec![vec![0; n]; n];
    for (i, &p) in perm.iter().enumerate() {
        matrix[p][i] = 1;
    }
    Ok(ThetaAction { perm, matrix })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootClass {
    ImaginaryCompact,
    ImaginaryNoncompact,
    Complex,
    Real,
}

impl RootClass {
    pub fn is_imaginary(self) -> bool {
        matches!(self, RootClass::ImaginaryCompact | RootClass::ImaginaryNoncompact)
    }
}

impl fmt::Display for RootClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RootClass::ImaginaryCompact => "imaginary-compact",
            RootClass::ImaginaryNoncompact => "imaginary-noncompact",
            RootClass::Complex => "complex",
            RootClass::Real => "real",
        })
    }
}

/// Labels of the positive roots (in the order of [`RootSystem::positive_roots`]);
/// a negative root carries the label of its negative.
///
/// `theta_sign[k]` is the scalar `t` in `theta(X_a) = t X_{theta a}` for the `k`-th
/// positive root `a` in the Chevalley basis. It is `c_a (-1)^{N(a)}`, where `N(a)` sums
/// the painted coefficients of `a` and `c_a` is the sign picked up by the diagram
/// automorphism; `c_a = 1` for inner involutions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootClassification {
    labels: Vec<RootClass>,
    theta_sign: Vec<i64>,
}

impl RootClassification {
    pub fn labels(&self) -> &[RootClass] {
        &self.labels
    }

    pub fn theta_signs(&self) -> &[i64] {
        &self.theta_sign
    }

    pub fn count(&self, c: RootClass) -> usize {
        self.labels.iter().filter(|&&l| l == c).count()
    }
}

/// Sum of the painted coefficients of `coeffs`.
pub fn painted_sum(vd: &VoganDiagram, coeffs: &[i64]) -> i64 {
    vd.painting().iter().map(|&i| coeffs[i]).sum()
}

pub fn classify_roots(vd: &VoganDiagram, theta: &ThetaAction, rs: &RootSystem) -> Result<RootClassification> {
    let coeffs = rs.positive_root_coeffs();
    let c = if vd.is_inner() {
        vec![1; coeffs.len()]
    } else {
        StructureConstants::new(rs)?.automorphism_signs(theta.permutation())?
    };
    let mut labels = Vec::with_capacity(coeffs.len());
    let mut theta_sign = Vec::with_capacity(coeffs.len());
    for (k, a) in coeffs.iter().enumerate() {
        let ta = theta.apply_ints(a);
        let sign = if painted_sum(vd, a) % 2 == 0 { c[k] } else { -c[k] };
        let label = if ta == *a {
            if sign == 1 {
                RootClass::ImaginaryCompact
            } else {
                RootClass::ImaginaryNoncompact
            }
        } else if ta.iter().zip(a).all(|(x, y)| *x == -y) {
            RootClass::Real
        } else {
            RootClass::Complex
        };
        labels.push(label);
        theta_sign.push(sign);
    }
    Ok(RootClassification { labels, theta_sign })
}

/// `Res(alpha) = (alpha + theta alpha) / 2`.
pub fn restricted_root(theta: &ThetaAction, alpha: &Weight) -> Weight {
    (alpha + &theta.apply(alpha)).scale(&half())
}

/// Positive roots of `Delta(k, t)`, ordered as their first preimage among the positive roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KRootSystem {
    pub positive: Vec<Weight>,
    pub simple: Vec<Weight>,
    pub rho: Weight,
}

pub fn k_root_system(
    rs: &RootSystem,
    theta: &ThetaAction,
    classification: &RootClassification,
) -> Result<KRootSystem> {
    let form = rs.form();
    let mut positive: Vec<Weight> = Vec::new();
    let mut seen = HashSet::new();
    for (a, label) in rs.positive_roots().iter().zip(classification.labels()) {
        match label {
            RootClass::Real => return Err(Error::RealRoot(a.to_string())),
            RootClass::ImaginaryNoncompact => continue,
            RootClass::ImaginaryCompact | RootClass::Complex => {
                let r = restricted_root(theta, a);
                if !r.is_zero() && seen.insert(r.clone()) {
                    positive.push(r);
                }
            }
        }
    }
    let all: HashSet<Weight> = positive.iter().cloned().chain(positive.iter().map(|d| -d)).collect();
    for d in &positive {
        if all.contains(&d.scale(&Rational::from_integer(2.into()))) {
            return Err(Error::NotARootSystem(format!("{d} and twice it are both roots")));
        }
        for e in &all {
            let p = form.coroot_pairing(e, d);
            if !p.is_integer() {
                return Err(Error::NotARootSystem(format!("<{e}, {d}^vee> = {p} is not an integer")));
            }
            if !all.contains(&form.reflect_in(d, e)) {
                return Err(Error::NotARootSystem(format!("reflecting {e} in {d} leaves the set")));
            }
        }
    }
    let pos_set: HashSet<&Weight> = positive.iter().collect();
    let simple: Vec<Weight> = positive
        .iter()
        .filter(|d| !positive.iter().any(|e| pos_set.contains(&(*d - e)) && e != *d))
        .cloned()
        .collect();
    let mut rho = Weight::zero(rs.rank());
    for d in &positive {
        rho = &rho + d;
    }
    Ok(KRootSystem { positive, simple, rho: rho.scale(&half()) })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Dims {
    pub g: usize,
    pub k: usize,
    pub s: usize,
    pub t: usize,
    pub a: usize,
}

/// Everything the signature formula needs about a real form.
#[derive(Debug, Clone)]
pub struct RealFormData {
    pub name: Option<String>,
    pub diagram: VoganDiagram,
    pub theta: ThetaAction,
    pub classification: RootClassification,
    pub k: KRootSystem,
    pub dims: Dims,
    /// `2r = dim s - dim a`.
    pub r: u32,
    /// `2^{floor(dim a / 2)}`
    pub spin_mult_m: BigUint,
    /// `2^{floor(dim s / 2)}`
    pub dim_spin: BigUint,
}

impl RealFormData {
    pub fn new(vd: &VoganDiagram, rs: &RootSystem) -> Result<Self> {
        let theta = derive_theta(vd, rs)?;
        let classification = classify_roots(vd, &theta, rs)?;
        let k = k_root_system(rs, &theta, &classification)?;
        let t = theta.dim_fixed();
        let a = theta.dim_negated();
        let ic = classification.count(RootClass::ImaginaryCompact);
        let inc = classification.count(RootClass::ImaginaryNoncompact);
        let cx = classification.count(RootClass::Complex);
        // labels cover positive roots only; each stands for a +- pair
        let dims = Dims {
            g: rs.rank() + 2 * rs.positive_roots().len(),
            k: t + 2 * ic + cx,
            s: a + 2 * inc + cx,
            t,
            a,
        };
        debug_assert_eq!(dims.g, dims.k + dims.s);
        if (dims.s - dims.a) % 2 != 0 {
            return Err(Error::NotARootSystem(format!("dim s = {} and dim a = {} differ in parity", dims.s, dims.a)));
        }
        // every complex root restricts to a k-root shared with its theta partner
        if 2 * k.positive.len() != 2 * ic + cx {
            return Err(Error::NotARootSystem(format!(
                "{} compact restricted roots from {ic} compact imaginary and {cx} complex positive roots",
                k.positive.len()
            )));
        }
        let r = ((dims.s - dims.a) / 2) as u32;
        Ok(RealFormData {
            name: None,
            diagram: vd.clone(),
            theta,
            classification,
            k,
            dims,
            r,
            spin_mult_m: BigUint::one() << (dims.a / 2),
            dim_spin: BigUint::one() << (dims.s / 2),
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn is_equal_rank(&self) -> bool {
        self.dims.a == 0
    }

    /// `<v, d^vee>` for every simple compact root `d`.
    pub fn k_pairings(&self, rs: &RootSystem, v: &Weight) -> Vec<Rational> {
        self.k.simple.iter().map(|d| rs.form().coroot_pairing(v, d)).collect()
    }

    pub fn is_k_dominant(&self, rs: &RootSystem, v: &Weight) -> bool {
        self.k_pairings(rs, v).iter().all(|p| !p.is_negative())
    }

    pub fn label(&self) -> String {
        self.name.clone().unwrap_or_else(|| self.diagram.spec_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build_root_system;

    fn setup(t: &str, inv: &[usize], paint: &[usize]) -> (RootSystem, RealFormData) {
        let ct: CartanType = t.parse().unwrap();
        let rs = build_root_system(&ct).unwrap();
        let vd = VoganDiagram::new(ct, inv.to_vec(), paint.iter().copied()).unwrap();
        let rf = RealFormData::new(&vd, &rs).unwrap();
        (rs, rf)
    }

    fn w(c: &[i64]) -> Weight {
        Weight::from_ints(c)
    }

    #[test]
    fn su31_classification() {
        let (rs, rf) = setup("A3", &[0, 1, 2], &[2]);
        for (a, l) in rs.positive_root_coeffs().iter().zip(rf.classification.labels()) {
            let expect = if a[2] % 2 == 1 { RootClass::ImaginaryNoncompact } else { RootClass::ImaginaryCompact };
            assert_eq!(*l, expect, "{a:?}");
        }
        assert_eq!(rf.dims, Dims { g: 15, k: 9, s: 6, t: 3, a: 0 });
        assert_eq!(rf.r, 3);
        assert_eq!(rf.k.positive, vec![w(&[1, 0, 0]), w(&[0, 1, 0]), w(&[1, 1, 0])]);
        assert_eq!(rf.k.rho.scale(&Rational::from_integer(2.into())), w(&[2, 2, 0]));
        assert_eq!(rf.spin_mult_m, BigUint::one());
        assert_eq!(rf.dim_spin, BigUint::from(8u32));
    }

    #[test]
    fn compact_form_is_everything() {
        let ct: CartanType = "B3".parse().unwrap();
        let rs = build_root_system(&ct).unwrap();
        let rf = RealFormData::new(&VoganDiagram::compact(ct), &rs).unwrap();
        assert_eq!(rf.dims.s, 0);
        assert_eq!(rf.k.positive, rs.positive_roots());
        assert_eq!(&rf.k.rho, rs.rho());
        assert!(rf.theta.matrix().iter().enumerate().all(|(i, row)| row[i] == 1));
    }

    #[test]
    fn sl3r() {
        let (rs, rf) = setup("A2", &[1, 0], &[]);
        assert_eq!(rf.theta.apply(&w(&[1, 0])), w(&[0, 1]));
        assert_eq!((rf.dims.t, rf.dims.a), (1, 1));
        assert_eq!(
            restricted_root(&rf.theta, &rs.simple_root(0)),
            Weight::new(vec![half(), half()])
        );
        // the highest root is imaginary; the diagram automorphism negates its root vector
        assert_eq!(rf.classification.labels()[2], RootClass::ImaginaryNoncompact);
        assert_eq!(rf.classification.labels()[0], RootClass::Complex);
        assert_eq!(rf.k.positive, vec![Weight::new(vec![half(), half()])]);
        assert_eq!(rf.dims, Dims { g: 8, k: 3, s: 5, t: 1, a: 1 });
        assert_eq!(rf.r, 2);
    }

    #[test]
    fn sl2r() {
        let (_, rf) = setup("A1", &[0], &[0]);
        assert_eq!(rf.classification.labels(), &[RootClass::ImaginaryNoncompact]);
        assert_eq!((rf.dims.k, rf.dims.s), (1, 2));
        assert!(rf.k.positive.is_empty());
    }

    #[test]
    fn restricted_roots_of_imaginary_and_real() {
        let (_, rf) = setup("A3", &[2, 1, 0], &[]);
        let imag = w(&[1, 1, 1]);
        assert_eq!(restricted_root(&rf.theta, &imag), imag);
        let real_like = w(&[1, 0, -1]);
        assert!(restricted_root(&rf.theta, &real_like).is_zero());
    }

    #[test]
    fn outer_forms_of_a3() {
        // sl(4,R): k = so(4); su*(4): k = sp(2)
        let (_, rf) = setup("A3", &[2, 1, 0], &[1]);
        assert_eq!(rf.dims.k, 6);
        let (_, rf) = setup("A3", &[2, 1, 0], &[]);
        assert_eq!(rf.dims.k, 10);
    }

    #[test]
    fn d4_outer() {
        // so(7,1) and so(5,3)
        let (_, rf) = setup("D4", &[0, 1, 3, 2], &[]);
        assert_eq!(rf.dims.k, 21);
        let (_, rf) = setup("D4", &[0, 1, 3, 2], &[0]);
        assert_eq!(rf.dims.k, 13);
    }

    #[test]
    fn rejects_bad_diagrams() {
        let a3: CartanType = "A3".parse().unwrap();
        assert!(matches!(
            VoganDiagram::new(a3.clone(), vec![1, 0, 2], []),
            Err(Error::InvalidInvolution(_))
        ));
        assert!(matches!(
            VoganDiagram::new(a3.clone(), vec![2, 1, 0], [0]),
            Err(Error::InvalidPainting(_))
        ));
        assert!(matches!(VoganDiagram::new(a3, vec![0, 1], []), Err(Error::InvalidInvolution(_))));
        let b2: CartanType = "B2".parse().unwrap();
        assert!(matches!(VoganDiagram::new(b2, vec![1, 0], []), Err(Error::InvalidInvolution(_))));
    }

    #[test]
    fn theta_is_an_involutive_automorphism() {
        for (t, inv) in [("A2", vec![1, 0]), ("A3", vec![2, 1, 0]), ("D4", vec![0, 1, 3, 2]), ("A4", vec![3, 2, 1, 0])] {
            let ct: CartanType = t.parse().unwrap();
            let rs = build_root_system(&ct).unwrap();
            let vd = VoganDiagram::new(ct, inv, []).unwrap();
            let rf = RealFormData::new(&vd, &rs).unwrap();
            let sc = StructureConstants::new(&rs).unwrap();
            let coeffs = rs.positive_root_coeffs();
            let sign_of = |r: &[i64]| -> i64 {
                // sign on negative roots follows from theta(X_{-a}) = t X_{-theta a} with the same t
                let pos: Vec<i64> = if r.iter().any(|&c| c > 0) { r.to_vec() } else { r.iter().map(|c| -c).collect() };
                let k = coeffs.iter().position(|c| *c == pos).unwrap();
                rf.classification.theta_signs()[k]
            };
            // theta [X_a, X_b] = [theta X_a, theta X_b]
            let roots: Vec<Vec<i64>> = coeffs.iter().cloned().chain(coeffs.iter().map(|c| c.iter().map(|x| -x).collect())).collect();
            for a in &roots {
                for b in &roots {
                    let n = sc.n(a, b);
                    if n == 0 {
                        continue;
                    }
                    let s: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                    let lhs = n * sign_of(&s);
                    let rhs = sign_of(a) * sign_of(b) * sc.n(&rf.theta.apply_ints(a), &rf.theta.apply_ints(b));
                    assert_eq!(lhs, rhs, "{t}: {a:?} {b:?}");
                }
            }
            // theta^2 = 1 on root vectors
            for (k, a) in coeffs.iter().enumerate() {
                let ta = rf.theta.apply_ints(a);
                let k2 = coeffs.iter().position(|c| *c == ta).unwrap();
                assert_eq!(rf.classification.theta_signs()[k] * rf.classification.theta_signs()[k2], 1, "{t}");
            }
        }
    }

    #[test]
    fn rho_k_is_one_on_simple_k_coroots() {
        for name in preset_names() {
            let (rs, rf) = parse_group(name).unwrap();
            for d in &rf.k.simple {
                assert_eq!(rs.form().coroot_pairing(&rf.k.rho, d), Rational::one(), "{name}");
            }
            assert!(rf.is_k_dominant(&rs, &rf.k.rho));
        }
    }

    #[test]
    fn ledger_identities_on_presets() {
        for name in preset_names() {
            let (rs, rf) = parse_group(name).unwrap();
            let d = rf.dims;
            assert_eq!(d.k + d.s, d.g, "{name}");
            assert_eq!(d.g, rs.rank() + rs.roots().len());
            assert_eq!(d.t + d.a, rs.rank());
            assert_eq!(2 * rf.r as usize, d.s - d.a);
            assert_eq!(d.s % 2, d.a % 2);
            assert_eq!(rf.classification.count(RootClass::Real), 0);
            // theta permutes the positive roots
            let pos: HashSet<&Weight> = rs.positive_roots().iter().collect();
            for a in rs.positive_roots() {
                assert!(pos.contains(&rf.theta.apply(a)), "{name}");
            }
            if rf.diagram.is_inner() {
                assert_eq!(d.a, 0);
                assert_eq!(rf.spin_mult_m, BigUint::one());
            }
        }
    }
}
