use super::sets::{closed, ColouringSet};
use super::{colouring_set, flow_sum, Colour, Flow};
use crate::error::{Error, Result};
use crate::multipole::Multipole;
use serde::{Deserialize, Serialize};

/// Group sum of a colouring's boundary values over one connector.
pub fn flow_through(m: &Multipole, tuple: &[Colour], connector: &str) -> Result<Flow> {
    let c = m.connector(connector)?;
    if tuple.len() != m.semiedge_count() {
        return Err(Error::ShapeMismatch(format!("tuple of length {} for a {}-pole", tuple.len(), m.semiedge_count())));
    }
    Ok(flow_sum(c.semiedges.iter().map(|&s| tuple[s])))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConnectorClass {
    Proper,
    Improper,
    Mixed,
    Vacuous,
}

pub(crate) fn classify_in(set: &ColouringSet, semis: &[usize]) -> ConnectorClass {
    if set.is_empty() {
        return ConnectorClass::Vacuous;
    }
    let (mut zero, mut nonzero) = (false, false);
    for t in set.iter() {
        if flow_sum(semis.iter().map(|&s| t[s])) == 0 {
            zero = true;
        } else {
            nonzero = true;
        }
    }
    match (zero, nonzero) {
        (false, true) => ConnectorClass::Proper,
        (true, false) => ConnectorClass::Improper,
        _ => ConnectorClass::Mixed,
    }
}

pub fn classify_connector(m: &Multipole, connector: &str) -> Result<ConnectorClass> {
    let c = m.connector(connector)?;
    Ok(classify_in(&colouring_set(m)?, &c.semiedges))
}

fn require_shape(m: &Multipole, shape: &[usize]) -> Result<()> {
    if m.shape() != shape {
        return Err(Error::ShapeMismatch(format!("expected connectors {shape:?}, found {:?}", m.shape())));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NegatorVerdict {
    Perfect,
    Semiperfect,
    /// Colourable, inside the negator set, but neither perfect nor semiperfect.
    Imperfect,
    Uncolourable,
    NotANegator,
}

pub(crate) fn negator_verdict(set: &ColouringSet) -> NegatorVerdict {
    let full = closed::negator();
    if set.is_empty() {
        NegatorVerdict::Uncolourable
    } else if !set.is_subset_of(&full) {
        NegatorVerdict::NotANegator
    } else if set.relation(&full) == super::SetRelation::Equal {
        NegatorVerdict::Perfect
    } else if (0..2).any(|s| set.relation(&closed::negator_side(s)) == super::SetRelation::Equal) {
        NegatorVerdict::Semiperfect
    } else {
        NegatorVerdict::Imperfect
    }
}

/// Verdict for a (2,2,1)-pole `(I, O, r)`.
pub fn is_perfect_negator(n: &Multipole) -> Result<NegatorVerdict> {
    require_shape(n, &[2, 2, 1])?;
    Ok(negator_verdict(&colouring_set(n)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Proper23Verdict {
    Perfect,
    ImperfectProper,
    NotProper,
    Uncolourable,
}

pub(crate) fn proper23_verdict(set: &ColouringSet) -> Proper23Verdict {
    let full = closed::proper23();
    if set.is_empty() {
        Proper23Verdict::Uncolourable
    } else if !set.is_subset_of(&full) {
        Proper23Verdict::NotProper
    } else if set.len() == full.len() {
        Proper23Verdict::Perfect
    } else {
        Proper23Verdict::ImperfectProper
    }
}

/// Verdict for a (2,3)-pole `(B, C)`.
pub fn is_perfect_proper23(t: &Multipole) -> Result<Proper23Verdict> {
    require_shape(t, &[2, 3])?;
    Ok(proper23_verdict(&colouring_set(t)?))
}

/// Every colouring has zero or two connectors with nonzero flow.
pub fn is_even_222(h: &Multipole) -> Result<bool> {
    require_shape(h, &[2, 2, 2])?;
    Ok(colouring_set(h)?.is_subset_of(&closed::even222()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SuperpentagonVerdict {
    Perfect,
    Uncolourable,
    NotSuperpentagon,
}

pub(crate) fn superpentagon_verdict(set: &ColouringSet, cyclic: &[usize]) -> Result<SuperpentagonVerdict> {
    let c5 = closed::c5();
    let s = set.permuted(cyclic, vec![5])?;
    if !s.is_subset_of(&c5) {
        Ok(SuperpentagonVerdict::NotSuperpentagon)
    } else if s.is_empty() {
        Ok(SuperpentagonVerdict::Uncolourable)
    } else if s.len() == c5.len() {
        Ok(SuperpentagonVerdict::Perfect)
    } else {
        Err(Error::Verification(format!(
            "colourable 5-pole inside Col(C5) with only {} of 30 tuples",
            s.len()
        )))
    }
}

/// Compare a 5-pole with the open 5-cycle. `cyclic[i]` is the semiedge taking
/// the `i`-th position of the cyclic order.
pub fn is_superpentagon(m: &Multipole, cyclic: &[usize]) -> Result<SuperpentagonVerdict> {
    if m.semiedge_count() != 5 || cyclic.len() != 5 {
        return Err(Error::ShapeMismatch("superpentagons have 5 semiedges".into()));
    }
    superpentagon_verdict(&colouring_set(m)?, cyclic)
}

/// Largest set of parity-admissible k-tuples avoiding `set` that is closed
/// under single Kempe switches for some pairing of each two-colour class.
///
/// The colouring set of any colourable k-pole is such a set, so an empty result
/// means every multipole colour-disjoint from `set` is uncolourable.
pub fn kempe_kernel(set: &ColouringSet) -> Result<ColouringSet> {
    let k = set.k();
    let mut alive = ColouringSet::from_predicate(k, vec![k], |t| super::parity_check(t) && !set.contains(t))?;
    loop {
        let next = alive.filter(|t| kempe_ok(t, &alive));
        if next.len() == alive.len() {
            return Ok(next);
        }
        alive = next;
    }
}

fn kempe_ok(t: &[Colour], s: &ColouringSet) -> bool {
    for (x, y) in [(Colour::A, Colour::B), (Colour::A, Colour::C), (Colour::B, Colour::C)] {
        let pos: Vec<usize> = (0..t.len()).filter(|&i| t[i] == x || t[i] == y).collect();
        if !some_matching(t, &pos, x, y, s) {
            return false;
        }
    }
    true
}

fn some_matching(t: &[Colour], pos: &[usize], x: Colour, y: Colour, s: &ColouringSet) -> bool {
    let Some((&first, rest)) = pos.split_first() else { return true };
    for j in 0..rest.len() {
        let mut u = t.to_vec();
        for p in [first, rest[j]] {
            u[p] = if u[p] == x { y } else { x };
        }
        if !s.contains(&u) {
            continue;
        }
        let remaining: Vec<usize> = rest.iter().enumerate().filter(|&(i, _)| i != j).map(|(_, &p)| p).collect();
        if some_matching(t, &remaining, x, y, s) {
            return true;
        }
    }
    false
}

/// Sufficient test for colour-closedness via [`kempe_kernel`].
pub fn is_colour_closed(m: &Multipole) -> Result<bool> {
    Ok(kempe_kernel(&colouring_set(m)?)?.is_empty())
}
