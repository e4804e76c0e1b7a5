//! Trace forms of classical real matrix Lie algebras. For the adjoint representation the
//! invariant hermitian form is a multiple of `Re tr(XY)`, so its inertia gives the
//! signature without any representation theory.

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::linalg::{inertia, QMatrix};
use crate::rational::Rational;

pub type Entry = Complex<Rational>;
pub type CMatrix = Vec<Vec<Entry>>;

fn zero(n: usize) -> CMatrix {
    vec![vec![Entry::zero(); n]; n]
}

fn re(x: i64) -> Entry {
    Entry::new(Rational::from_integer(x.into()), Rational::zero())
}

fn im(x: i64) -> Entry {
    Entry::new(Rational::zero(), Rational::from_integer(x.into()))
}

fn with(n: usize, entries: &[(usize, usize, Entry)]) -> CMatrix {
    let mut m = zero(n);
    for (i, j, v) in entries {
        m[*i][*j] += v.clone();
    }
    m
}

/// Traceless real matrices.
pub fn sl_real(n: usize) -> Vec<CMatrix> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                out.push(with(n, &[(i, j, re(1))]));
            }
        }
    }
    for i in 0..n.saturating_sub(1) {
        out.push(with(n, &[(i, i, re(1)), (i + 1, i + 1, re(-1))]));
    }
    out
}

/// Traceless `X` with `X* J + J X = 0`, `J = diag(1_p, -1_q)`.
pub fn su(p: usize, q: usize) -> Vec<CMatrix> {
    let n = p + q;
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if (i < p) == (j < p) {
                out.push(with(n, &[(i, j, re(1)), (j, i, re(-1))]));
                out.push(with(n, &[(i, j, im(1)), (j, i, im(1))]));
            } else {
                out.push(with(n, &[(i, j, re(1)), (j, i, re(1))]));
                out.push(with(n, &[(i, j, im(1)), (j, i, im(-1))]));
            }
        }
    }
    for i in 0..n.saturating_sub(1) {
        out.push(with(n, &[(i, i, im(1)), (i + 1, i + 1, im(-1))]));
    }
    out
}

/// Real `X` with `X^T J + J X = 0`, `J = diag(1_p, -1_q)`.
pub fn so(p: usize, q: usize) -> Vec<CMatrix> {
    let n = p + q;
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let s = if (i < p) == (j < p) { -1 } else { 1 };
            out.push(with(n, &[(i, j, re(1)), (j, i, re(s))]));
        }
    }
    out
}

/// Matrix model for a preset name such as `sl(3,R)`, `su(2,1)`, `so(4,1)`, `su(3)`.
pub fn matrix_model(name: &str) -> Option<Vec<CMatrix>> {
    let s: String = name.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_lowercase();
    let (head, args) = s.strip_suffix(')')?.split_once('(')?;
    let parts: Vec<&str> = args.split(',').collect();
    let num = |t: &str| t.parse::<usize>().ok();
    match (head, parts.as_slice()) {
        ("sl", [n, "r"]) => Some(sl_real(num(n)?)),
        ("su", [n]) => Some(su(num(n)?, 0)),
        ("su", [p, q]) => Some(su(num(p)?, num(q)?)),
        ("so", [n]) => Some(so(num(n)?, 0)),
        ("so", [p, q]) => Some(so(num(p)?, num(q)?)),
        _ => None,
    }
}

fn re_trace_product(x: &CMatrix, y: &CMatrix) -> Rational {
    let n = x.len();
    let mut acc = Rational::zero();
    for i in 0..n {
        for k in 0..n {
            acc += (&x[i][k] * &y[k][i]).re;
        }
    }
    acc
}

pub fn trace_form_gram(basis: &[CMatrix]) -> QMatrix {
    basis
        .iter()
        .map(|x| basis.iter().map(|y| re_trace_product(x, y)).collect())
        .collect()
}

/// `(positive, negative, zero)` of `Re tr(XY)` on the span of `basis`.
pub fn trace_form_inertia(basis: &[CMatrix]) -> (usize, usize, usize) {
    inertia(&trace_form_gram(basis))
}

/// `|p - q|` of the trace form.
pub fn trace_form_signature(basis: &[CMatrix]) -> usize {
    let (p, q, _) = trace_form_inertia(basis);
    p.abs_diff(q)
}

/// Real dimension of the span of `basis` (entries split into real and imaginary parts).
pub fn real_rank(basis: &[CMatrix]) -> usize {
    let rows: Vec<Vec<num_bigint::BigInt>> = basis
        .iter()
        .map(|m| {
            let flat: Vec<Rational> = m.iter().flatten().flat_map(|z| [z.re.clone(), z.im.clone()]).collect();
            crate::linalg::clear_denominators(&[flat]).remove(0)
        })
        .collect();
    crate::linalg::bareiss_rank(&rows)
}

pub fn commutator(x: &CMatrix, y: &CMatrix) -> CMatrix {
    let n = x.len();
    let mut out = zero(n);
    for i in 0..n {
        for j in 0..n {
            let mut acc = Entry::zero();
            for k in 0..n {
                acc += &x[i][k] * &y[k][j] - &y[i][k] * &x[k][j];
            }
            out[i][j] = acc;
        }
    }
    out
}

pub fn identity(n: usize) -> CMatrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { Entry::one() } else { Entry::zero() }).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_inertias() {
        assert_eq!(trace_form_inertia(&sl_real(2)), (2, 1, 0));
        assert_eq!(trace_form_inertia(&sl_real(3)), (5, 3, 0));
        assert_eq!(trace_form_signature(&su(3, 1)), 3);
        assert_eq!(trace_form_inertia(&su(3, 1)), (6, 9, 0));
        assert_eq!(trace_form_inertia(&su(3, 0)), (0, 8, 0));
        assert_eq!(trace_form_inertia(&so(3, 2)), (6, 4, 0));
    }

    #[test]
    fn bases_are_independent_and_closed() {
        for basis in [sl_real(3), su(2, 1), so(3, 2), su(2, 2)] {
            let d = basis.len();
            assert_eq!(real_rank(&basis), d);
            for x in &basis {
                for y in &basis {
                    let mut ext = basis.clone();
                    ext.push(commutator(x, y));
                    assert_eq!(real_rank(&ext), d, "bracket leaves the span");
                }
            }
        }
    }

    #[test]
    fn model_names() {
        assert_eq!(matrix_model("sl(3,R)").unwrap().len(), 8);
        assert_eq!(matrix_model("su(3,1)").unwrap().len(), 15);
        assert_eq!(matrix_model("so(4, 1)").unwrap().len(), 10);
        assert!(matrix_model("g2(2)").is_none());
    }
}
