use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
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

    fn from_letter(c: char) -> Option<Self> {
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

/// Cartan–Killing type of a simple Lie algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LieType {
    family: Family,
    rank: usize,
}

impl LieType {
    /// Validates the rank restrictions. `D3` is rejected rather than aliased
    /// to `A3`, and likewise `B1`, `C1` and `D2`.
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let constraint = match family {
            Family::A if rank < 1 => Some("type A requires rank >= 1"),
            Family::B if rank < 2 => Some("type B requires rank >= 2"),
            Family::C if rank < 2 => Some("type C requires rank >= 2"),
            Family::D if rank == 3 => Some("type D requires rank >= 4 (D3 is A3, use A3)"),
            Family::D if rank < 4 => Some("type D requires rank >= 4"),
            Family::E if !(6..=8).contains(&rank) => Some("type E requires rank 6, 7 or 8"),
            Family::F if rank != 4 => Some("type F requires rank 4"),
            Family::G if rank != 2 => Some("type G requires rank 2"),
            _ => None,
        };
        match constraint {
            Some(constraint) => Err(Error::InvalidType {
                family: family.letter(),
                rank,
                constraint,
            }),
            None => Ok(LieType { family, rank }),
        }
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    pub fn is_simply_laced(self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }

    /// Order of the Weyl group from the classical formulas.
    pub fn weyl_order(self) -> u128 {
        let l = self.rank as u128;
        let fact = |n: u128| (1..=n).product::<u128>();
        match self.family {
            Family::A => fact(l + 1),
            Family::B | Family::C => (1u128 << l) * fact(l),
            Family::D => (1u128 << (l - 1)) * fact(l),
            Family::E => match l {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1_152,
            Family::G => 12,
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| Error::TypeSyntax(s.to_string()))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::TypeSyntax(s.to_string()))?;
        LieType::new(family, rank)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_restrictions() {
        assert!("A1".parse::<LieType>().is_ok());
        assert!("b2".parse::<LieType>().is_ok());
        assert!("E8".parse::<LieType>().is_ok());
        for bad in ["A0", "B1", "C1", "D2", "D3", "E5", "E9", "F3", "G3"] {
            assert!(
                matches!(bad.parse::<LieType>(), Err(Error::InvalidType { .. })),
                "{bad}"
            );
        }
        let err = "D3".parse::<LieType>().unwrap_err().to_string();
        assert!(err.contains("use A3"), "{err}");
        assert!(matches!("X2".parse::<LieType>(), Err(Error::TypeSyntax(_))));
        assert!(matches!("B".parse::<LieType>(), Err(Error::TypeSyntax(_))));
    }

    #[test]
    fn classical_weyl_orders() {
        let order = |s: &str| s.parse::<LieType>().unwrap().weyl_order();
        assert_eq!(order("A3"), 24);
        assert_eq!(order("B2"), 8);
        assert_eq!(order("C3"), 48);
        assert_eq!(order("D4"), 192);
        assert_eq!(order("G2"), 12);
        assert_eq!(order("E6"), 51_840);
    }
}
