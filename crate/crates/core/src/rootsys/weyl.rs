//! Weyl group elements, enumeration by reduced words, and dominant representatives.

use std::collections::HashMap;

use num_traits::{Signed, Zero};

use super::{RootSystem, Weight};
use crate::error::{Error, Result};
use crate::rational::{int, Rational};

pub const DEFAULT_WEYL_CAP: u128 = 1_000_000;

pub type IntMatrix = Vec<Vec<i64>>;

/// An element of `W`, kept as a reduced word together with its matrix on
/// simple-root coordinates. `word[0]` is the leftmost reflection.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    word: Vec<usize>,
    matrix: IntMatrix,
}

fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let n = a.len();
    let mut c = vec![vec![0; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == 0 {
                continue;
            }
            for j in 0..n {
                c[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    c
}

fn int_identity(n: usize) -> IntMatrix {
    (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect()
}

impl WeylElement {
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    pub fn apply(&self, v: &Weight) -> Weight {
        Weight::new(
            self.matrix
                .iter()
                .map(|row| {
                    row.iter()
                        .zip(v.coords())
                        .filter(|(&m, c)| m != 0 && !c.is_zero())
                        .map(|(&m, c)| c * int(m))
                        .sum::<Rational>()
                })
                .collect(),
        )
    }

    /// Human-readable word, e.g. `s3 s2 s1` (1-based), or `e`.
    pub fn word_string(&self) -> String {
        if self.word.is_empty() {
            "e".to_string()
        } else {
            self.word.iter().map(|i| format!("s{}", i + 1)).collect::<Vec<_>>().join(" ")
        }
    }
}

impl RootSystem {
    /// Matrix of `s_i` on simple-root coordinates: `I - e_i * cartan_row_i`.
    pub fn reflection_matrix(&self, i: usize) -> IntMatrix {
        let n = self.rank();
        let mut m = int_identity(n);
        for j in 0..n {
            m[i][j] -= self.cartan_matrix()[i][j];
        }
        m
    }

    /// The element `s_{word[0]} s_{word[1]} ...`. The word is stored as given.
    pub fn weyl_element(&self, word: &[usize]) -> WeylElement {
        let mut m = int_identity(self.rank());
        for &i in word {
            m = mat_mul(&m, &self.reflection_matrix(i));
        }
        WeylElement { word: word.to_vec(), matrix: m }
    }

    pub fn compose(&self, a: &WeylElement, b: &WeylElement) -> IntMatrix {
        mat_mul(&a.matrix, &b.matrix)
    }

    pub fn enumerate_weyl(&self) -> Result<WeylIter<'_>> {
        self.enumerate_weyl_capped(DEFAULT_WEYL_CAP)
    }

    /// Every element of `W` exactly once, identity first, by increasing length and then
    /// lexicographically. Each element carries its lexicographically least reduced word.
    pub fn enumerate_weyl_capped(&self, cap: u128) -> Result<WeylIter<'_>> {
        let order = self.weyl_order();
        if order > cap {
            return Err(Error::GroupTooLarge { order, cap });
        }
        let n = self.rank();
        // Orbit of rho in fundamental coordinates identifies elements.
        let alpha_fund: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|k| self.cartan_matrix()[k][i]).collect()).collect();
        let mut words: Vec<Vec<u8>> = vec![Vec::new()];
        let mut layer: Vec<(Vec<u8>, Vec<i64>)> = vec![(Vec::new(), vec![1; n])];
        while !layer.is_empty() {
            let mut next: HashMap<Vec<i64>, Vec<u8>> = HashMap::new();
            for (word, x) in &layer {
                for i in 0..n {
                    if x[i] <= 0 {
                        continue;
                    }
                    let xi = x[i];
                    let y: Vec<i64> = x.iter().zip(&alpha_fund[i]).map(|(a, b)| a - xi * b).collect();
                    let mut w = Vec::with_capacity(word.len() + 1);
                    w.push(i as u8);
                    w.extend_from_slice(word);
                    next.entry(y)
                        .and_modify(|old| {
                            if w < *old {
                                *old = w.clone();
                            }
                        })
                        .or_insert(w);
                }
            }
            let mut nl: Vec<(Vec<u8>, Vec<i64>)> = next.into_iter().map(|(x, w)| (w, x)).collect();
            nl.sort();
            words.extend(nl.iter().map(|(w, _)| w.clone()));
            layer = nl;
        }
        debug_assert_eq!(words.len() as u128, order);
        Ok(WeylIter { rs: self, words, pos: 0 })
    }

    /// The dominant element of the `W`-orbit of `v`, and some `w` with `w v` dominant.
    pub fn dominant_representative(&self, v: &Weight) -> (Weight, WeylElement) {
        let mut cur = v.clone();
        let mut applied = Vec::new();
        while let Some(i) = (0..self.rank()).find(|&i| self.simple_pairing(&cur, i).is_negative()) {
            cur = self.reflect(i, &cur);
            applied.push(i);
        }
        applied.reverse();
        (cur, self.weyl_element(&applied))
    }
}

/// Single-pass iterator over `W`; matrices are built on demand.
pub struct WeylIter<'a> {
    rs: &'a RootSystem,
    words: Vec<Vec<u8>>,
    pos: usize,
}

impl WeylIter<'_> {
    pub fn order(&self) -> usize {
        self.words.len()
    }
}

impl Iterator for WeylIter<'_> {
    type Item = WeylElement;

    fn next(&mut self) -> Option<WeylElement> {
        let w = self.words.get(self.pos)?;
        self.pos += 1;
        let word: Vec<usize> = w.iter().map(|&i| i as usize).collect();
        Some(self.rs.weyl_element(&word))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = self.words.len() - self.pos;
        (left, Some(left))
    }
}

impl ExactSizeIterator for WeylIter<'_> {}
