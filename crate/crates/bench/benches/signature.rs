use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use hermsig::oracle::{build_explicit_rep, build_intertwiner, trace_theta_inner};
use hermsig::realform::parse_group;
use hermsig::sigformula::signature;

fn formula(c: &mut Criterion) {
    for (name, coords) in [("su(3,1)", vec![1, 0, 1]), ("so(4,3)", vec![1, 1, 1]), ("sp(1,2)", vec![2, 1, 1]), ("g2(2)", vec![3, 2])] {
        let (rs, rf) = parse_group(name).unwrap();
        let lambda = rs.from_fundamental_ints(&coords);
        c.bench_function(&format!("signature {name} {coords:?}"), |b| b.iter(|| signature(&rf, &rs, black_box(&lambda)).unwrap()));
    }
}

fn weyl_enumeration(c: &mut Criterion) {
    for name in ["su(3,1)", "so(4,3)", "so(4,4)"] {
        let (rs, _) = parse_group(name).unwrap();
        c.bench_function(&format!("enumerate W {name}"), |b| b.iter(|| rs.enumerate_weyl().unwrap().count()));
    }
}

fn oracles(c: &mut Criterion) {
    let (rs, rf) = parse_group("su(3,1)").unwrap();
    let adjoint = rs.highest_root().unwrap();
    c.bench_function("weight trace su(3,1) adjoint", |b| b.iter(|| trace_theta_inner(&rf, &rs, black_box(&adjoint)).unwrap()));
    let lambda = rs.from_fundamental_ints(&[1, 1, 1]);
    c.bench_function("explicit rep + T su(3,1) (1,1,1)", |b| {
        b.iter(|| {
            let rep = build_explicit_rep(&rs, black_box(&lambda)).unwrap();
            build_intertwiner(&rep, &rf).unwrap().trace()
        })
    });
}

criterion_group!(benches, formula, weyl_enumeration, oracles);
criterion_main!(benches);
