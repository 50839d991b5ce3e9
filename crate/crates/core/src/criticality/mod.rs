//! Removable pairs, criticality grades, edge reduction and extension, negators.

use crate::constructions::{common_neighbour, negator_of};
use crate::error::{Error, Result};
use crate::multipole::{remove_vertices, sever_edges, Assembly, Multipole};
use crate::structure::{cyclic_connectivity, girth};
use crate::tait::{colourable, colourable_with, count_colourings, is_perfect_negator, Colour, NegatorVerdict};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CriticalityGrade {
    NotSnark,
    /// Girth below 5 or cyclic connectivity below 4.
    SnarkTrivial,
    CriticalStrict,
    Bicritical,
    NoncriticalSnark,
}

impl CriticalityGrade {
    pub fn name(self) -> &'static str {
        match self {
            CriticalityGrade::NotSnark => "not_snark",
            CriticalityGrade::SnarkTrivial => "snark_trivial",
            CriticalityGrade::CriticalStrict => "critical_strict",
            CriticalityGrade::Bicritical => "bicritical",
            CriticalityGrade::NoncriticalSnark => "noncritical_snark",
        }
    }

    pub fn is_critical(self) -> bool {
        matches!(self, CriticalityGrade::CriticalStrict | CriticalityGrade::Bicritical)
    }
}

/// Grade with its witness: a removable adjacent pair for noncritical snarks,
/// a removable non-adjacent pair for strictly critical ones.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradeReport {
    pub order: usize,
    pub colourings: u64,
    pub grade: CriticalityGrade,
    pub witness: Option<[usize; 2]>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PairKind {
    VertexPair,
    EdgePair,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairVerdict {
    pub kind: PairKind,
    pub pair: [usize; 2],
    pub removable: bool,
    /// Only for edge pairs.
    pub essential: Option<bool>,
    /// Colourings of the reduced multipole.
    pub colourings: u64,
}

fn require_snark(g: &Multipole) -> Result<()> {
    if !g.is_graph() {
        return Err(Error::Precondition("expected a cubic graph".into()));
    }
    if colourable(g)? {
        return Err(Error::NotSnark);
    }
    Ok(())
}

fn pair_ok(g: &Multipole, u: usize, v: usize) -> Result<()> {
    if u >= g.order() {
        return Err(Error::UnknownVertex(u));
    }
    if v >= g.order() {
        return Err(Error::UnknownVertex(v));
    }
    if u == v {
        return Err(Error::Precondition("a pair needs two distinct vertices".into()));
    }
    Ok(())
}

/// `G - {u,v}` is uncolourable. No snark check.
pub fn vertex_pair_removable(g: &Multipole, u: usize, v: usize) -> Result<bool> {
    Ok(!colourable(&remove_vertices(g, &[u, v])?)?)
}

/// `G - {e,f}` is uncolourable. No snark check.
pub fn edge_pair_removable(g: &Multipole, e: usize, f: usize) -> Result<bool> {
    Ok(!colourable(&sever_edges(g, &[e, f])?)?)
}

pub fn removable_vertex_pair(g: &Multipole, u: usize, v: usize) -> Result<PairVerdict> {
    pair_ok(g, u, v)?;
    require_snark(g)?;
    let m = remove_vertices(g, &[u, v])?;
    let colourings = count_colourings(&m)?;
    Ok(PairVerdict { kind: PairKind::VertexPair, pair: [u, v], removable: colourings == 0, essential: None, colourings })
}

pub fn removable_edge_pair(g: &Multipole, e: usize, f: usize) -> Result<PairVerdict> {
    essential_pair(g, e, f)
}

/// Non-removable, and suppressing any 2-valent vertex of `G - {e,f}` leaves
/// a colourable graph.
pub fn essential_pair(g: &Multipole, e: usize, f: usize) -> Result<PairVerdict> {
    if e == f {
        return Err(Error::Precondition("a pair needs two distinct edges".into()));
    }
    require_snark(g)?;
    let m = sever_edges(g, &[e, f])?;
    let colourings = count_colourings(&m)?;
    let removable = colourings == 0;
    let essential = !removable && suppressions_colourable(g, e, f)?;
    Ok(PairVerdict { kind: PairKind::EdgePair, pair: [e, f], removable, essential: Some(essential), colourings })
}

fn suppressions_colourable(g: &Multipole, e: usize, f: usize) -> Result<bool> {
    let mut links = g.links().to_vec();
    let (a, b) = links[e];
    let (c, d) = links[f];
    for i in [e.max(f), e.min(f)] {
        links.remove(i);
    }
    let mut ends = vec![a, b, c, d];
    ends.sort_unstable();
    ends.dedup();
    for v in ends {
        let deg = links.iter().map(|&(x, y)| (x == v) as usize + (y == v) as usize).sum::<usize>();
        if deg != 2 {
            continue;
        }
        let mut l = links.clone();
        suppress(&mut l, v)?;
        let mut alive = vec![true; g.order()];
        alive[v] = false;
        if !colourable(&rebuild(g.order(), &alive, &l)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Replace the two link ends at `v` by a single link.
fn suppress(links: &mut Vec<(usize, usize)>, v: usize) -> Result<()> {
    let at: Vec<usize> = (0..links.len()).filter(|&i| links[i].0 == v || links[i].1 == v).collect();
    if at.iter().any(|&i| links[i] == (v, v)) {
        return Err(Error::FreeLoop);
    }
    if at.len() != 2 {
        return Err(Error::Precondition(format!("vertex {v} is not 2-valent")));
    }
    let other = |(x, y): (usize, usize)| if x == v { y } else { x };
    let (p, q) = (other(links[at[0]]), other(links[at[1]]));
    links.remove(at[1]);
    links.remove(at[0]);
    links.push((p.min(q), p.max(q)));
    Ok(())
}

/// Multipole on the alive vertices; missing edge ends become dangling edges
/// in one unordered connector `S`.
fn rebuild(order: usize, alive: &[bool], links: &[(usize, usize)]) -> Result<Multipole> {
    let mut a = Assembly::new();
    let mut id = vec![usize::MAX; order];
    for v in 0..order {
        if alive[v] {
            id[v] = a.add_vertex();
        }
    }
    let mut deg = vec![0usize; order];
    for &(x, y) in links {
        a.link(id[x], id[y]);
        deg[x] += 1;
        deg[y] += 1;
    }
    let mut hs = Vec::new();
    for v in 0..order {
        if alive[v] {
            for _ in deg[v]..3 {
                hs.push(a.dangle(id[v]));
            }
        }
    }
    if !hs.is_empty() {
        a.group("S", false, hs);
    }
    a.finish()
}

/// `G ~ e`: delete the link `e` and suppress both ends.
pub fn reduce_edge(g: &Multipole, e: usize) -> Result<Multipole> {
    if !g.is_graph() {
        return Err(Error::Precondition("edge reduction needs a cubic graph".into()));
    }
    let (u, v) = *g.links().get(e).ok_or(Error::UnknownEdge(e))?;
    if u == v {
        return Err(Error::Precondition("cannot reduce a loop".into()));
    }
    let mut links = g.links().to_vec();
    links.remove(e);
    suppress(&mut links, u)?;
    suppress(&mut links, v)?;
    let mut alive = vec![true; g.order()];
    alive[u] = false;
    alive[v] = false;
    rebuild(g.order(), &alive, &links)
}

/// `G(e1, e2)`: subdivide both edges and join the new vertices, which get
/// ids `n` and `n + 1`. Equal edges give a digon.
pub fn extend_edge(g: &Multipole, e1: usize, e2: usize) -> Result<Multipole> {
    if !g.is_graph() {
        return Err(Error::Precondition("edge extension needs a cubic graph".into()));
    }
    let n = g.order();
    let l = g.links();
    let (a, b) = *l.get(e1).ok_or(Error::UnknownEdge(e1))?;
    let (c, d) = *l.get(e2).ok_or(Error::UnknownEdge(e2))?;
    let (s1, s2) = (n, n + 1);
    let mut links: Vec<(usize, usize)> = l.iter().enumerate().filter(|&(i, _)| i != e1 && i != e2).map(|(_, &x)| x).collect();
    if e1 == e2 {
        links.extend([(a, s1), (s1, s2), (s1, s2), (s2, b)]);
    } else {
        links.extend([(a, s1), (s1, b), (c, s2), (s2, d), (s1, s2)]);
    }
    Multipole::graph(n + 2, &links)
}

fn adjacent_pairs(g: &Multipole) -> Vec<[usize; 2]> {
    let mut p: Vec<[usize; 2]> = g.links().iter().filter(|&&(u, v)| u != v).map(|&(u, v)| [u, v]).collect();
    p.sort_unstable();
    p.dedup();
    p
}

fn first_removable(g: &Multipole, pairs: &[[usize; 2]]) -> Result<Option<[usize; 2]>> {
    let r: Option<Result<[usize; 2]>> = pairs.par_iter().find_map_first(|&[u, v]| match vertex_pair_removable(g, u, v) {
        Ok(true) => Some(Ok([u, v])),
        Ok(false) => None,
        Err(e) => Some(Err(e)),
    });
    r.transpose()
}

/// Every adjacent pair is non-removable; `Some(witness)` otherwise.
pub fn critical_witness(g: &Multipole) -> Result<Option<[usize; 2]>> {
    first_removable(g, &adjacent_pairs(g))
}

/// First removable pair of distinct non-adjacent vertices.
pub fn bicritical_witness(g: &Multipole) -> Result<Option<[usize; 2]>> {
    let n = g.order();
    let pairs: Vec<[usize; 2]> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| [u, v])).filter(|&[u, v]| !g.are_adjacent(u, v)).collect();
    first_removable(g, &pairs)
}

pub fn is_critical(g: &Multipole) -> Result<bool> {
    require_snark(g)?;
    Ok(critical_witness(g)?.is_none())
}

pub fn is_bicritical(g: &Multipole) -> Result<bool> {
    Ok(is_critical(g)? && bicritical_witness(g)?.is_none())
}

pub fn grade(g: &Multipole) -> Result<GradeReport> {
    if !g.is_graph() {
        return Err(Error::Precondition("grading needs a cubic graph".into()));
    }
    let order = g.order();
    let colourings = count_colourings(g)?;
    let report = |grade, witness| GradeReport { order, colourings, grade, witness };
    if colourings > 0 {
        return Ok(report(CriticalityGrade::NotSnark, None));
    }
    let trivial = girth(g).is_none_or(|x| x < 5)
        || !g.is_connected()
        || cyclic_connectivity(g)?.is_some_and(|c| c < 4);
    if trivial {
        return Ok(report(CriticalityGrade::SnarkTrivial, critical_witness(g)?));
    }
    if let Some(w) = critical_witness(g)? {
        return Ok(report(CriticalityGrade::NoncriticalSnark, Some(w)));
    }
    Ok(match bicritical_witness(g)? {
        Some(w) => report(CriticalityGrade::CriticalStrict, Some(w)),
        None => report(CriticalityGrade::Bicritical, None),
    })
}

/// Every adjacent pair is non-removable except possibly the end pairs of `e`
/// and `f`.
pub fn nearly_critical(g: &Multipole, e: usize, f: usize) -> Result<bool> {
    require_snark(g)?;
    let skip: Vec<[usize; 2]> = [e, f]
        .iter()
        .map(|&i| g.links().get(i).map(|&(u, v)| [u, v]).ok_or(Error::UnknownEdge(i)))
        .collect::<Result<_>>()?;
    let pairs: Vec<[usize; 2]> = adjacent_pairs(g).into_iter().filter(|p| !skip.contains(p)).collect();
    Ok(first_removable(g, &pairs)?.is_none())
}

/// Verdict on `Neg(G; u, v)` from its colouring set, next to the verdict
/// predicted from removability of `{u,w}` and `{v,w}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NegatorProfile {
    pub w: usize,
    pub verdict: NegatorVerdict,
    pub uw_removable: bool,
    pub vw_removable: bool,
    pub predicted: NegatorVerdict,
}

pub fn negator_profile(g: &Multipole, u: usize, v: usize) -> Result<NegatorProfile> {
    pair_ok(g, u, v)?;
    require_snark(g)?;
    let w = common_neighbour(g, u, v)?;
    let verdict = is_perfect_negator(&negator_of(g, u, v)?)?;
    let uw_removable = vertex_pair_removable(g, u, w)?;
    let vw_removable = vertex_pair_removable(g, v, w)?;
    let predicted = if uw_removable || vw_removable { NegatorVerdict::Semiperfect } else { NegatorVerdict::Perfect };
    if verdict != NegatorVerdict::Uncolourable && verdict != predicted {
        return Err(Error::Verification(format!(
            "Neg({u},{v}) is {verdict:?} but removability predicts {predicted:?}"
        )));
    }
    Ok(NegatorProfile { w, verdict, uw_removable, vw_removable, predicted })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Feasibility {
    Feasible,
    /// `G - {x,y}` uncolourable for negator vertices `x`, `y`.
    FailsBicritical { x: usize, y: usize },
    /// No colouring of `G - {x,y}` gives the two named ends at `x` one colour.
    FailsI { x: usize, y: usize },
    /// `N - y` lacks one of the patterns `(a,a,b,b,a)`, `(a,a,b,b,b)`.
    FailsIi { y: usize },
}

/// Feasibility of `Neg(G; u, v)`; the first failing condition is reported.
pub fn feasible_negator(g: &Multipole, u: usize, v: usize) -> Result<Feasibility> {
    pair_ok(g, u, v)?;
    require_snark(g)?;
    if girth(g).is_none_or(|x| x < 5) {
        return Err(Error::Precondition("feasibility needs girth at least 5".into()));
    }
    let w = common_neighbour(g, u, v)?;
    let inner: Vec<usize> = (0..g.order()).filter(|&x| x != u && x != v && x != w).collect();

    let pairs: Vec<[usize; 2]> =
        inner.iter().enumerate().flat_map(|(i, &x)| inner[i + 1..].iter().map(move |&y| [x, y])).collect();
    if let Some([x, y]) = first_removable(g, &pairs)? {
        return Ok(Feasibility::FailsBicritical { x, y });
    }

    for x in [u, v] {
        for &y in &inner {
            let m = remove_vertices(g, &[x, y])?;
            let ends = m.connector(&format!("v{x}"))?.semiedges.clone();
            for i in 0..3 {
                for j in i + 1..3 {
                    if !colourable_with(&m, &[(ends[i], Colour::A), (ends[j], Colour::A)])? {
                        return Ok(Feasibility::FailsI { x, y });
                    }
                }
            }
        }
    }

    let n = negator_of(g, u, v)?;
    // vertex ids of the negator follow the host order with u, v, w dropped
    for (ny, &y) in inner.iter().enumerate() {
        let m = remove_vertices(&n, &[ny])?;
        let i = &m.connector("I")?.semiedges;
        let o = &m.connector("O")?.semiedges;
        let r = m.connector("R")?.semiedges[0];
        let (a, b) = (Colour::A, Colour::B);
        for last in [a, b] {
            let fixed = [(i[0], a), (i[1], a), (o[0], b), (o[1], b), (r, last)];
            if !colourable_with(&m, &fixed)? {
                return Ok(Feasibility::FailsIi { y });
            }
        }
    }
    Ok(Feasibility::Feasible)
}
