//! Tait colourings over the Klein four-group.

mod network;
mod predicates;
mod search;
mod sets;

pub use network::{Network, Relation};
pub use predicates::{
    classify_connector, flow_through, is_colour_closed, is_even_222, kempe_kernel, is_perfect_negator, is_perfect_proper23,
    is_superpentagon, ConnectorClass, NegatorVerdict, Proper23Verdict, SuperpentagonVerdict,
};
pub use search::{colourable, colourable_with, colouring_set, count_colourings, for_each_colouring, Colouring};
pub use sets::{closed, compare_sets, ColouringSet, SetRelation};
pub(crate) use predicates::{proper23_verdict, superpentagon_verdict};

use serde::{Deserialize, Serialize};
use std::fmt;

/// Element of Z2 x Z2 in its two-bit form; 0 is the identity.
pub type Flow = u8;

/// A nonzero element of the Klein four-group: a=(0,1), b=(1,0), c=(1,1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Colour {
    A,
    B,
    C,
}

impl Colour {
    pub const ALL: [Colour; 3] = [Colour::A, Colour::B, Colour::C];

    pub fn bits(self) -> Flow {
        match self {
            Colour::A => 1,
            Colour::B => 2,
            Colour::C => 3,
        }
    }

    pub fn from_bits(x: Flow) -> Option<Colour> {
        match x {
            1 => Some(Colour::A),
            2 => Some(Colour::B),
            3 => Some(Colour::C),
            _ => None,
        }
    }

    pub fn index(self) -> usize {
        self.bits() as usize - 1
    }

    pub fn letter(self) -> char {
        match self {
            Colour::A => 'a',
            Colour::B => 'b',
            Colour::C => 'c',
        }
    }

    pub fn from_letter(ch: char) -> Option<Colour> {
        match ch {
            'a' => Some(Colour::A),
            'b' => Some(Colour::B),
            'c' => Some(Colour::C),
            _ => None,
        }
    }

    /// Group sum; zero when the colours coincide.
    pub fn plus(self, other: Colour) -> Flow {
        self.bits() ^ other.bits()
    }
}

impl fmt::Display for Colour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

pub type ColourTuple = Vec<Colour>;

/// Group sum of a sequence of colours.
pub fn flow_sum(cs: impl IntoIterator<Item = Colour>) -> Flow {
    cs.into_iter().fold(0, |a, c| a ^ c.bits())
}

/// Each colour occurs with the parity of the tuple length.
pub fn parity_check(t: &[Colour]) -> bool {
    let k = t.len() % 2;
    let mut n = [0usize; 3];
    for c in t {
        n[c.index()] += 1;
    }
    n.iter().all(|x| x % 2 == k)
}

pub fn tuple_string(t: &[Colour]) -> String {
    t.iter().map(|c| c.letter()).collect()
}

pub fn parse_tuple(s: &str) -> Option<ColourTuple> {
    s.chars().map(Colour::from_letter).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use Colour::*;

    #[test]
    fn klein_arithmetic() {
        for x in Colour::ALL {
            assert_eq!(x.plus(x), 0);
        }
        assert_eq!(A.plus(B), C.bits());
        assert_eq!(B.plus(C), A.bits());
        assert_eq!(flow_sum([A, B, C]), 0);
    }

    #[test]
    fn parity() {
        assert!(parity_check(&[A, A]));
        assert!(!parity_check(&[A, B]));
        assert!(parity_check(&[A, B, C]));
        assert!(parity_check(&[]));
    }
}
