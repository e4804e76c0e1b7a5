//! Cartan types and their simple-root Gram matrices (Bourbaki labelling).

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{frac, int, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

/// One simple factor of a semisimple type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Component {
    pub family: Family,
    pub rank: usize,
}

impl Component {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 3,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(Component { family, rank })
        } else {
            Err(Error::InvalidType(format!("{}{} is not a valid component", family.letter(), rank)))
        }
    }

    /// Order of the Weyl group of this component.
    pub fn weyl_order(&self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1u128 << n) * fact(n),
            Family::D => (1u128 << (n - 1)) * fact(n),
            Family::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1_152,
            Family::G => 12,
        }
    }

    /// Number of positive roots.
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }

    /// Gram matrix `(alpha_i, alpha_j)` with long roots of squared length 2.
    pub fn gram(&self) -> Vec<Vec<Rational>> {
        let n = self.rank;
        let mut g = vec![vec![Rational::zero(); n]; n];
        let bond = |g: &mut Vec<Vec<Rational>>, i: usize, j: usize, v: Rational| {
            g[i][j] = v.clone();
            g[j][i] = v;
        };
        match self.family {
            Family::A => {
                for i in 0..n {
                    g[i][i] = int(2);
                }
                for i in 0..n.saturating_sub(1) {
                    bond(&mut g, i, i + 1, int(-1));
                }
            }
            Family::B => {
                // alpha_n short
                for i in 0..n {
                    g[i][i] = int(2);
                }
                g[n - 1][n - 1] = int(1);
                for i in 0..n - 1 {
                    bond(&mut g, i, i + 1, int(-1));
                }
            }
            Family::C => {
                // alpha_n long
                for i in 0..n {
                    g[i][i] = int(1);
                }
                g[n - 1][n - 1] = int(2);
                for i in 0..n - 2 {
                    bond(&mut g, i, i + 1, frac(-1, 2));
                }
                bond(&mut g, n - 2, n - 1, int(-1));
            }
            Family::D => {
                for i in 0..n {
                    g[i][i] = int(2);
                }
                for i in 0..n - 2 {
                    bond(&mut g, i, i + 1, int(-1));
                }
                bond(&mut g, n - 3, n - 1, int(-1));
            }
            Family::E => {
                for i in 0..n {
                    g[i][i] = int(2);
                }
                bond(&mut g, 0, 2, int(-1));
                bond(&mut g, 1, 3, int(-1));
                for i in 2..n - 1 {
                    bond(&mut g, i, i + 1, int(-1));
                }
            }
            Family::F => {
                g[0][0] = int(2);
                g[1][1] = int(2);
                g[2][2] = int(1);
                g[3][3] = int(1);
                bond(&mut g, 0, 1, int(-1));
                bond(&mut g, 1, 2, int(-1));
                bond(&mut g, 2, 3, frac(-1, 2));
            }
            Family::G => {
                // alpha_1 short
                g[0][0] = frac(2, 3);
                g[1][1] = int(2);
                bond(&mut g, 0, 1, int(-1));
            }
        }
        g
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// A semisimple Cartan type: a direct sum of simple components.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CartanType {
    components: Vec<Component>,
}

impl CartanType {
    pub fn new(components: Vec<Component>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidType("empty Cartan type".into()));
        }
        for c in &components {
            Component::new(c.family, c.rank)?;
        }
        Ok(CartanType { components })
    }

    pub fn simple(family: Family, rank: usize) -> Result<Self> {
        CartanType::new(vec![Component::new(family, rank)?])
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.rank).sum()
    }

    pub fn is_simple(&self) -> bool {
        self.components.len() == 1
    }

    pub fn weyl_order(&self) -> u128 {
        self.components
            .iter()
            .map(Component::weyl_order)
            .fold(1u128, |a, b| a.saturating_mul(b))
    }

    pub fn positive_root_count(&self) -> usize {
        self.components.iter().map(Component::positive_root_count).sum()
    }

    /// Block-diagonal Gram matrix of the simple roots.
    pub fn gram(&self) -> Vec<Vec<Rational>> {
        let n = self.rank();
        let mut g = vec![vec![Rational::zero(); n]; n];
        let mut off = 0;
        for c in &self.components {
            let block = c.gram();
            for i in 0..c.rank {
                for j in 0..c.rank {
                    g[off + i][off + j] = block[i][j].clone();
                }
            }
            off += c.rank;
        }
        g
    }

    /// Component index of each simple root.
    pub fn component_of(&self) -> Vec<usize> {
        self.components
            .iter()
            .enumerate()
            .flat_map(|(k, c)| std::iter::repeat_n(k, c.rank))
            .collect()
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, "x")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for CartanType {
    type Err = Error;

    /// Parses `A3`, `B2xA1`, `A1+A1`, `G2 x A1`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidType(format!("cannot parse {s:?}"));
        let mut comps = Vec::new();
        for part in s.split(['x', 'X', '+', '*']) {
            let part = part.trim();
            let mut chars = part.chars();
            let family = chars.next().and_then(Family::from_letter).ok_or_else(bad)?;
            let rank: usize = chars.as_str().trim().parse().map_err(|_| bad())?;
            comps.push(Component::new(family, rank)?);
        }
        CartanType::new(comps)
    }
}

impl Serialize for CartanType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for CartanType {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
