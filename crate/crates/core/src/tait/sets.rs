use super::{tuple_string, Colour, ColourTuple};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

pub(crate) const MAX_ARITY: usize = 40;

pub(crate) fn encode(t: &[Colour]) -> u64 {
    t.iter().fold(0u64, |a, c| a * 3 + c.index() as u64)
}

fn decode(mut code: u64, k: usize) -> ColourTuple {
    let mut t = vec![Colour::A; k];
    for i in (0..k).rev() {
        t[i] = Colour::ALL[(code % 3) as usize];
        code /= 3;
    }
    t
}

/// Relation between two colouring sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SetRelation {
    Equal,
    XSubset,
    YSubset,
    Disjoint,
    Incomparable,
}

/// A set of boundary colour tuples, stored as sorted base-3 codes.
///
/// Code order agrees with lexicographic order of the tuple strings.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ColouringSet {
    k: usize,
    shape: Vec<usize>,
    codes: Vec<u64>,
}

impl ColouringSet {
    pub(crate) fn from_codes(k: usize, shape: Vec<usize>, mut codes: Vec<u64>) -> Result<Self> {
        if k > MAX_ARITY {
            return Err(Error::Precondition(format!("colouring sets support at most {MAX_ARITY} semiedges")));
        }
        codes.sort_unstable();
        codes.dedup();
        Ok(ColouringSet { k, shape, codes })
    }

    pub fn from_tuples<I>(k: usize, shape: Vec<usize>, tuples: I) -> Result<Self>
    where
        I: IntoIterator<Item = ColourTuple>,
    {
        let mut codes = Vec::new();
        for t in tuples {
            if t.len() != k {
                return Err(Error::ShapeMismatch(format!("tuple of length {} in a {k}-set", t.len())));
            }
            codes.push(encode(&t));
        }
        Self::from_codes(k, shape, codes)
    }

    /// All tuples of `K^k` satisfying a predicate.
    pub fn from_predicate<F>(k: usize, shape: Vec<usize>, pred: F) -> Result<Self>
    where
        F: Fn(&[Colour]) -> bool,
    {
        if k > 16 {
            return Err(Error::Precondition("predicate enumeration limited to 16 positions".into()));
        }
        let total = 3u64.pow(k as u32);
        let codes = (0..total).filter(|&c| pred(&decode(c, k))).collect();
        Self::from_codes(k, shape, codes)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    pub fn contains(&self, t: &[Colour]) -> bool {
        t.len() == self.k && self.codes.binary_search(&encode(t)).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = ColourTuple> + '_ {
        self.codes.iter().map(move |&c| decode(c, self.k))
    }

    pub fn tuples(&self) -> Vec<ColourTuple> {
        self.iter().collect()
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.k == other.k && self.codes.iter().all(|c| other.codes.binary_search(c).is_ok())
    }

    pub fn intersection_len(&self, other: &Self) -> usize {
        if self.k != other.k {
            return 0;
        }
        let (mut i, mut j, mut n) = (0, 0, 0);
        while i < self.codes.len() && j < other.codes.len() {
            match self.codes[i].cmp(&other.codes[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    n += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        n
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.intersection_len(other) == 0
    }

    /// Set relation, ignoring connector shapes.
    pub fn relation(&self, other: &Self) -> SetRelation {
        if self.codes == other.codes {
            SetRelation::Equal
        } else if self.is_subset_of(other) {
            SetRelation::XSubset
        } else if other.is_subset_of(self) {
            SetRelation::YSubset
        } else if self.is_disjoint(other) {
            SetRelation::Disjoint
        } else {
            SetRelation::Incomparable
        }
    }

    /// Reorder positions: the new tuple has `old[map[i]]` at position `i`.
    pub fn permuted(&self, map: &[usize], shape: Vec<usize>) -> Result<Self> {
        if map.len() != self.k || !crate::multipole::is_permutation(map) {
            return Err(Error::InvalidPermutation(map.to_vec()));
        }
        Self::from_tuples(self.k, shape, self.iter().map(|t| map.iter().map(|&j| t[j]).collect()))
    }

    /// Tuples restricted to the given positions.
    pub fn project(&self, positions: &[usize]) -> Result<Self> {
        if let Some(&p) = positions.iter().find(|&&p| p >= self.k) {
            return Err(Error::UnknownSemiedge(p));
        }
        Self::from_tuples(positions.len(), vec![positions.len()], self.iter().map(|t| positions.iter().map(|&j| t[j]).collect()))
    }

    pub fn filter<F: Fn(&[Colour]) -> bool>(&self, f: F) -> Self {
        ColouringSet {
            k: self.k,
            shape: self.shape.clone(),
            codes: self.codes.iter().copied().filter(|&c| f(&decode(c, self.k))).collect(),
        }
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        if self.k != other.k {
            return Err(Error::ShapeMismatch(format!("{} vs {} semiedges", self.k, other.k)));
        }
        let mut codes = self.codes.clone();
        codes.extend_from_slice(&other.codes);
        Self::from_codes(self.k, self.shape.clone(), codes)
    }

    pub fn with_shape(mut self, shape: Vec<usize>) -> Self {
        self.shape = shape;
        self
    }

    /// One tuple per line over `{a,b,c}`, sorted.
    pub fn dump(&self) -> String {
        let mut s = String::with_capacity(self.codes.len() * (self.k + 1));
        for t in self.iter() {
            s.push_str(&tuple_string(&t));
            s.push('\n');
        }
        s
    }
}

fn signature(x: &ColouringSet) -> (usize, Vec<usize>) {
    let mut a = x.shape.clone();
    a.sort_unstable();
    (x.k, a)
}

/// Exact set relation for sets of the same signature (semiedge count and
/// multiset of connector arities).
pub fn compare_sets(x: &ColouringSet, y: &ColouringSet) -> Result<SetRelation> {
    if signature(x) != signature(y) {
        return Err(Error::ShapeMismatch(format!("{:?} vs {:?}", x.shape, y.shape)));
    }
    Ok(x.relation(y))
}

/// Colouring sets defined by explicit formulas.
pub mod closed {
    use super::*;

    fn b(c: Colour) -> u8 {
        c.bits()
    }

    fn xor(t: &[Colour]) -> u8 {
        t.iter().fold(0, |a, &c| a ^ b(c))
    }

    /// Open 5-cycle: semiedge `i` at the `i`-th vertex of the cycle.
    pub fn c5() -> ColouringSet {
        ColouringSet::from_predicate(5, vec![5], |t| {
            xor(t) == 0
                && (1..=3u8).any(|e| {
                    let mut cur = e;
                    t.iter().all(|&x| {
                        let ok = cur != b(x);
                        cur ^= b(x);
                        ok
                    })
                })
        })
        .unwrap()
    }

    /// Path of length two, connectors `(I, O, r)`.
    pub fn p2() -> ColouringSet {
        ColouringSet::from_predicate(5, vec![2, 2, 1], |t| t[0] != t[1] && t[2] != t[3] && xor(t) == 0).unwrap()
    }

    /// Full negator set: exactly one 2-connector carries zero flow.
    pub fn negator() -> ColouringSet {
        negator_side(0).union(&negator_side(1)).unwrap()
    }

    /// Negator tuples whose connector `side` (0 = I, 1 = O) has zero flow.
    pub fn negator_side(side: usize) -> ColouringSet {
        ColouringSet::from_predicate(5, vec![2, 2, 1], move |t| {
            let (z, nz) = if side == 0 { (0, 2) } else { (2, 0) };
            t[z] == t[z + 1] && t[nz] != t[nz + 1] && b(t[4]) == b(t[nz]) ^ b(t[nz + 1])
        })
        .unwrap()
    }

    /// Proper (2,3)-pole set.
    pub fn proper23() -> ColouringSet {
        ColouringSet::from_predicate(5, vec![2, 3], |t| {
            let f = xor(&t[..2]);
            f != 0 && f == xor(&t[2..])
        })
        .unwrap()
    }

    /// Isolated edge plus a vertex with three dangling edges.
    pub fn m_ev() -> ColouringSet {
        ColouringSet::from_predicate(5, vec![2, 3], |t| t[0] == t[1] && xor(&t[2..]) == 0).unwrap()
    }

    /// Vertex with three neighbours, each carrying a 2-connector.
    pub fn v4() -> ColouringSet {
        ColouringSet::from_predicate(6, vec![2, 2, 2], |t| {
            t[0] != t[1] && t[2] != t[3] && t[4] != t[5] && xor(t) == 0
        })
        .unwrap()
    }

    /// Isolated edge plus a path of length two.
    pub fn m7() -> ColouringSet {
        ColouringSet::from_predicate(7, vec![2, 2, 2, 1], |t| {
            t[0] == t[1] && t[2] != t[3] && t[4] != t[5] && xor(&t[2..]) == 0
        })
        .unwrap()
    }

    /// Even (2,2,2) tuples: zero or two connectors with nonzero flow.
    pub fn even222() -> ColouringSet {
        ColouringSet::from_predicate(6, vec![2, 2, 2], |t| {
            xor(t) == 0 && [0, 2, 4].iter().filter(|&&i| t[i] != t[i + 1]).count() % 2 == 0
        })
        .unwrap()
    }
}
