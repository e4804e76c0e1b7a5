use proptest::prelude::*;

use hermsig::oracle::{build_explicit_rep, build_intertwiner, trace_theta_inner};
use hermsig::rational::{format_rational, frac, parse_rational};
use hermsig::realform::{all_presets, RealFormData};
use hermsig::rootsys::{build_root_system, freudenthal_multiplicities, CartanType, RootSystem, Weight};
use hermsig::sigformula::{exists_invariant_form, signature};

const TYPES: [&str; 7] = ["A1", "A2", "A3", "B2", "B3", "C3", "G2"];

fn root_system(t: &str) -> RootSystem {
    build_root_system(&t.parse::<CartanType>().unwrap()).unwrap()
}

/// Small dominant weight in fundamental coordinates.
fn small_dominant(rs: &RootSystem, raw: &[i64]) -> Weight {
    let bound = if rs.rank() >= 3 { 2 } else { 3 };
    let c: Vec<i64> = raw.iter().take(rs.rank()).map(|x| x.rem_euclid(bound + 1)).collect();
    rs.from_fundamental_ints(&c)
}

fn preset_forms(max_rank: usize) -> Vec<(String, RootSystem, RealFormData)> {
    all_presets()
        .iter()
        .filter_map(|p| {
            let rs = build_root_system(p.diagram.cartan_type()).ok()?;
            (rs.rank() <= max_rank).then(|| {
                let rf = RealFormData::new(&p.diagram, &rs).unwrap().with_name(&p.name);
                (p.name.clone(), rs, rf)
            })
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn weyl_dimension_is_total_multiplicity(t in 0..TYPES.len(), raw in prop::collection::vec(0i64..4, 3)) {
        let rs = root_system(TYPES[t]);
        let lambda = small_dominant(&rs, &raw);
        let mults = freudenthal_multiplicities(&rs, &lambda).unwrap();
        let total: u128 = mults.values().map(|&m| m as u128).sum();
        prop_assert_eq!(total, rs.dim(&lambda).unwrap());
        prop_assert_eq!(mults.get(&lambda).copied(), Some(1));
    }

    #[test]
    fn multiplicities_are_weyl_invariant(t in 0..TYPES.len(), raw in prop::collection::vec(0i64..4, 3)) {
        let rs = root_system(TYPES[t]);
        let lambda = small_dominant(&rs, &raw);
        let mults = freudenthal_multiplicities(&rs, &lambda).unwrap();
        for (mu, m) in &mults {
            for i in 0..rs.rank() {
                prop_assert_eq!(mults.get(&rs.reflect(i, mu)), Some(m));
            }
        }
    }

    #[test]
    fn dominant_representative_lands_in_the_chamber(
        t in 0..TYPES.len(),
        raw in prop::collection::vec(-6i64..7, 3),
    ) {
        let rs = root_system(TYPES[t]);
        let v = rs.from_fundamental_ints(&raw[..rs.rank()]);
        let (dom, w) = rs.dominant_representative(&v);
        prop_assert!(rs.is_dominant(&dom));
        prop_assert_eq!(w.apply(&v), dom.clone());
        prop_assert_eq!(rs.form().norm(&dom), rs.form().norm(&v));
        let (again, w2) = rs.dominant_representative(&dom);
        prop_assert_eq!(again, dom);
        prop_assert!(w2.is_identity());
    }

    #[test]
    fn reflections_are_isometric_involutions(
        t in 0..TYPES.len(),
        i in 0usize..3,
        num in prop::collection::vec(-9i64..10, 3),
        den in 1i64..5,
    ) {
        let rs = root_system(TYPES[t]);
        let i = i % rs.rank();
        let v = Weight::new(num[..rs.rank()].iter().map(|&n| frac(n, den)).collect());
        let s = rs.reflect(i, &v);
        prop_assert_eq!(rs.reflect(i, &s), v.clone());
        prop_assert_eq!(rs.form().norm(&s), rs.form().norm(&v));
    }

    #[test]
    fn rationals_round_trip(n in -1000i64..1000, d in 1i64..50) {
        let q = frac(n, d);
        prop_assert_eq!(parse_rational(&format_rational(&q)), Some(q));
    }

    #[test]
    fn signature_invariants_on_presets(k in 0usize..64, raw in prop::collection::vec(0i64..4, 3)) {
        let forms = preset_forms(3);
        let (name, rs, rf) = &forms[k % forms.len()];
        let lambda = small_dominant(rs, &raw);
        let rep = signature(rf, rs, &lambda).unwrap();
        prop_assert_eq!(rep.exists_form, rf.theta.apply(&lambda) == lambda, "{}", name);
        if let Some(sig) = rep.sig {
            prop_assert!(sig <= rep.dim_v);
            prop_assert_eq!((rep.dim_v - sig) % 2, 0);
            prop_assert_eq!(rep.signed_sum.unsigned_abs() % rep.divisor, 0);
            prop_assert_eq!(rep.signed_sum.unsigned_abs() / rep.divisor, sig);
            let (p, q) = rep.p_q.unwrap();
            prop_assert_eq!(p + q, rep.dim_v);
            prop_assert_eq!(p - q, sig);
        }
        if rf.is_equal_rank() && rep.dim_v <= 2000 {
            prop_assert_eq!(Some(trace_theta_inner(rf, rs, &lambda).unwrap()), rep.sig, "{}", name);
        }
    }
}

#[test]
fn theta_is_an_isometric_involution_preserving_dominance() {
    for (name, rs, rf) in preset_forms(4) {
        let th = &rf.theta;
        for i in 0..rs.rank() {
            let a = rs.simple_root(i);
            let ta = th.apply(&a);
            assert_eq!(th.apply(&ta), a, "{name}");
            assert_eq!(ta, rs.simple_root(th.permutation()[i]), "{name}");
            for j in 0..rs.rank() {
                let b = rs.simple_root(j);
                assert_eq!(rs.form().eval(&ta, &th.apply(&b)), rs.form().eval(&a, &b), "{name}");
            }
            let w = rs.fundamental_weight(i);
            assert!(rs.is_dominant(&th.apply(&w)), "{name}");
        }
        assert_eq!(th.dim_fixed() + th.dim_negated(), rs.rank(), "{name}");
        assert_eq!(th.dim_negated(), rf.dims.a, "{name}");
        assert_eq!(rf.dims.k + rf.dims.s, rf.dims.g, "{name}");
    }
}

#[test]
fn rho_pairs_to_one_with_every_simple_coroot() {
    for t in TYPES.iter().chain(["D4", "A1xA1", "B2xG2"].iter()) {
        let rs = root_system(t);
        for i in 0..rs.rank() {
            assert_eq!(rs.simple_pairing(rs.rho(), i), frac(1, 1), "{t}");
        }
    }
}

#[test]
fn existence_matches_intertwiner_on_small_weights() {
    for (name, rs, rf) in preset_forms(3) {
        for c in [vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 0], vec![0, 0, 1]] {
            let lambda = rs.from_fundamental_ints(&c[..rs.rank()]);
            if rs.dim(&lambda).unwrap() > 60 {
                continue;
            }
            let rep = build_explicit_rep(&rs, &lambda).unwrap();
            let t = build_intertwiner(&rep, &rf);
            assert_eq!(exists_invariant_form(&rf, &rs, &lambda), t.is_ok(), "{name} {c:?}");
        }
    }
}
