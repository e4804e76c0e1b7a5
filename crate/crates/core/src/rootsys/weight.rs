use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;

use crate::rational::{format_rational, int, Rational};

/// A vector of `h*` written in the simple-root basis.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(Vec<Rational>);

impl Weight {
    pub fn new(coords: Vec<Rational>) -> Self {
        Weight(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![Rational::zero(); rank])
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Weight(coords.iter().map(|&c| int(c)).collect())
    }

    /// The `i`-th simple root.
    pub fn simple(rank: usize, i: usize) -> Self {
        let mut w = Weight::zero(rank);
        w.0[i] = int(1);
        w
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Sum of the simple-root coefficients.
    pub fn height(&self) -> Rational {
        self.0.iter().sum()
    }

    pub fn scale(&self, s: &Rational) -> Weight {
        Weight(self.0.iter().map(|c| c * s).collect())
    }

    pub fn add_scaled(&self, s: &Rational, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + s * b).collect())
    }

    /// Integer coordinates, if every coordinate is integral.
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.0.iter().map(crate::rational::to_i64).collect()
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), rhs.rank());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), rhs.rank());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", format_rational(c))?;
        }
        write!(f, ")")
    }
}

/// Symmetric bilinear form on `h*`, as a Gram matrix in the simple-root basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm(Vec<Vec<Rational>>);

impl BilinearForm {
    pub fn new(gram: Vec<Vec<Rational>>) -> Self {
        BilinearForm(gram)
    }

    pub fn gram(&self) -> &[Vec<Rational>] {
        &self.0
    }

    pub fn eval(&self, u: &Weight, v: &Weight) -> Rational {
        let mut acc = Rational::zero();
        for (i, ui) in u.coords().iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.coords().iter().enumerate() {
                if vj.is_zero() || self.0[i][j].is_zero() {
                    continue;
                }
                acc += ui * &self.0[i][j] * vj;
            }
        }
        acc
    }

    pub fn norm(&self, v: &Weight) -> Rational {
        self.eval(v, v)
    }

    /// `<v, a^vee> = 2 (v, a) / (a, a)`.
    pub fn coroot_pairing(&self, v: &Weight, a: &Weight) -> Rational {
        self.eval(v, a) * int(2) / self.norm(a)
    }

    /// Reflection of `v` in the hyperplane orthogonal to `a`.
    pub fn reflect_in(&self, a: &Weight, v: &Weight) -> Weight {
        let c = -self.coroot_pairing(v, a);
        v.add_scaled(&c, a)
    }
}
