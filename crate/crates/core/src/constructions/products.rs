//! Dot products, 4-cut decomposition, substitution and the named snarks built
//! from them.

use super::basic;
use super::families::nnn_with;
use crate::criticality::{edge_pair_removable, extend_edge};
use crate::error::{Error, Result};
use crate::multipole::{cut_along, Assembly, Multipole};
use crate::structure::{
    automorphism_count, canonical_form, cyclic_connectivity, five_cycles, girth, is_isomorphic, min_cyclic_cut,
    separates_cycles,
};
use crate::tait::{colourable, colouring_set};
use serde::Serialize;

/// A dot product together with its principal cut (link indices in the result).
#[derive(Clone, Debug)]
pub struct DotProduct {
    pub graph: Multipole,
    pub principal_cut: [usize; 4],
}

/// `G . H`: delete the independent links `e = ab`, `f = cd` of `g` and the
/// adjacent vertices `u`, `v` of `h`, then join `a, b` to the other neighbours
/// of `u` and `c, d` to those of `v`. `swap` exchanges the order of the
/// neighbours of `u` and of `v` respectively.
pub fn dot_product_oriented(
    g: &Multipole,
    e: usize,
    f: usize,
    h: &Multipole,
    u: usize,
    v: usize,
    swap: [bool; 2],
) -> Result<DotProduct> {
    let links = g.links();
    let (&(a, b), &(c, d)) = (links.get(e).ok_or(Error::UnknownEdge(e))?, links.get(f).ok_or(Error::UnknownEdge(f))?);
    let mut ends = [a, b, c, d];
    ends.sort_unstable();
    if e == f || ends.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Precondition(format!("links {e} and {f} are not independent")));
    }
    if u >= h.order() || v >= h.order() {
        return Err(Error::UnknownVertex(u.max(v)));
    }
    if u == v || !h.are_adjacent(u, v) {
        return Err(Error::Precondition(format!("vertices {u} and {v} are not adjacent")));
    }
    if !g.is_graph() || !h.is_graph() {
        return Err(Error::Precondition("dot product needs two 0-poles".into()));
    }
    let mut asm = Assembly::new();
    let pg = asm.import(g);
    let (ha, hb) = asm.sever(pg.link_edges[e])?;
    let (hc, hd) = asm.sever(pg.link_edges[f])?;
    let ph = asm.import(h);
    let mut hs = asm.detach(&[ph.v(u), ph.v(v)], false)?;
    if hs[0].len() != 2 || hs[1].len() != 2 {
        return Err(Error::Precondition(format!("{u} and {v} are joined by a multiple link")));
    }
    for (i, s) in swap.iter().enumerate() {
        if *s {
            hs[i].swap(0, 1);
        }
    }
    asm.join(ha, hs[0][0])?;
    asm.join(hb, hs[0][1])?;
    asm.join(hc, hs[1][0])?;
    asm.join(hd, hs[1][1])?;
    let graph = asm.finish()?;
    // vertices of g come first in the result
    let n = g.order();
    let mut cut = [0; 4];
    for (i, &(x, y)) in graph.links().iter().enumerate() {
        if (x < n) != (y < n) {
            let k = [a, b, c, d].iter().position(|&w| w == x.min(y)).ok_or(Error::UnknownEdge(i))?;
            cut[k] = i;
        }
    }
    Ok(DotProduct { graph, principal_cut: cut })
}

pub fn dot_product(g: &Multipole, e: usize, f: usize, h: &Multipole, u: usize, v: usize) -> Result<Multipole> {
    Ok(dot_product_oriented(g, e, f, h, u, v, [false, false])?.graph)
}

/// The two factors of a dot product along a cycle-separating 4-cut: `g1`
/// with the restored links `e`, `f`, and `g2` with the restored adjacent
/// vertices `u`, `v`.
#[derive(Clone, Debug)]
pub struct DotFactors {
    pub g1: Multipole,
    pub e: usize,
    pub f: usize,
    pub g2: Multipole,
    pub u: usize,
    pub v: usize,
    /// Number of factor pairs that are both snarks; 1 when `G - S` is colourable.
    pub candidates: usize,
}

const PAIRINGS: [[usize; 4]; 3] = [[0, 1, 2, 3], [0, 2, 1, 3], [0, 3, 1, 2]];

fn restore_links(side: &Multipole, p: [usize; 4]) -> Result<Option<(Multipole, usize, usize)>> {
    let x = side.connector("X")?.semiedges.clone();
    let ends: Vec<Option<usize>> = x.iter().map(|&s| side.semiedge_vertex(s)).collect();
    if ends.iter().any(Option::is_none) {
        return Ok(None);
    }
    let ends: Vec<usize> = ends.into_iter().map(Option::unwrap).collect();
    let (a, b, c, d) = (ends[p[0]], ends[p[1]], ends[p[2]], ends[p[3]]);
    let mut all = [a, b, c, d];
    all.sort_unstable();
    if all.windows(2).any(|w| w[0] == w[1]) {
        return Ok(None);
    }
    let mut asm = Assembly::new();
    let q = asm.import(side);
    asm.join(q.s(x[p[0]]), q.s(x[p[1]]))?;
    asm.join(q.s(x[p[2]]), q.s(x[p[3]]))?;
    let m = asm.finish()?;
    let e = m.link_index(a.min(b), a.max(b)).ok_or(Error::UnknownEdge(0))?;
    let f = m.link_index(c.min(d), c.max(d)).ok_or(Error::UnknownEdge(1))?;
    Ok(Some((m, e, f)))
}

fn restore_vertices(side: &Multipole, p: [usize; 4]) -> Result<(Multipole, usize, usize)> {
    let x = side.connector("X")?.semiedges.clone();
    let mut asm = Assembly::new();
    let q = asm.import(side);
    let (_, [u0, u1, u2]) = asm.star();
    let (_, [v0, v1, v2]) = asm.star();
    asm.join(u2, v2)?;
    asm.join(q.s(x[p[0]]), u0)?;
    asm.join(q.s(x[p[1]]), u1)?;
    asm.join(q.s(x[p[2]]), v0)?;
    asm.join(q.s(x[p[3]]), v1)?;
    let m = asm.finish()?;
    Ok((m, side.order(), side.order() + 1))
}

/// Split a snark along a cycle-separating 4-cut into dot-product factors.
/// The factors are checked to be snarks and to reassemble to `g`.
pub fn decompose_4cut(g: &Multipole, cut: &[usize]) -> Result<DotFactors> {
    if cut.len() != 4 {
        return Err(Error::InvalidCut(format!("{} edges, expected 4", cut.len())));
    }
    if !separates_cycles(g, cut) {
        return Err(Error::InvalidCut("cut does not separate cycles".into()));
    }
    if colourable(g)? {
        return Err(Error::NotSnark);
    }
    let (s0, s1) = cut_along(g, cut)?;
    let mut found: Vec<DotFactors> = Vec::new();
    for (left, right) in [(&s0, &s1), (&s1, &s0)] {
        for p in PAIRINGS {
            let Some((g1, e, f)) = restore_links(left, p)? else { continue };
            if colourable(&g1)? {
                continue;
            }
            let (g2, u, v) = restore_vertices(right, p)?;
            if colourable(&g2)? {
                continue;
            }
            found.push(DotFactors { g1, e, f, g2, u, v, candidates: 0 });
        }
    }
    let n = found.len();
    for mut d in found {
        let back = (0..4).any(|k| {
            dot_product_oriented(&d.g1, d.e, d.f, &d.g2, d.u, d.v, [k & 1 == 1, k & 2 == 2])
                .is_ok_and(|dp| is_isomorphic(&dp.graph, g))
        });
        if back {
            d.candidates = n;
            return Ok(d);
        }
    }
    Err(Error::Verification("no factorisation of the 4-cut reassembles the graph".into()))
}

/// Split repeatedly along cycle-separating 4-cuts (and smaller cuts are
/// rejected) until every factor is cyclically 5-connected. Returns the factors.
pub fn decompose_fully(g: &Multipole) -> Result<Vec<Multipole>> {
    let mut todo = vec![g.clone()];
    let mut out = Vec::new();
    while let Some(h) = todo.pop() {
        match min_cyclic_cut(&h)? {
            Some(c) if c.edges.len() == 4 => {
                let d = decompose_4cut(&h, &c.edges)?;
                todo.push(d.g1);
                todo.push(d.g2);
            }
            Some(c) if c.edges.len() < 4 => {
                return Err(Error::Precondition(format!("cyclic connectivity {} below 4", c.edges.len())));
            }
            _ => out.push(h),
        }
    }
    out.sort_by_key(|m| canonical_form(m).code);
    Ok(out)
}

/// Replace the side of `cut` not containing `keep` by `replacement`, whose
/// semiedge `alignment[i]` meets cut edge `i`. The replacement's colouring
/// set must lie inside that of the removed side.
pub fn substitute(g: &Multipole, cut: &[usize], keep: usize, replacement: &Multipole, alignment: &[usize]) -> Result<Multipole> {
    let k = cut.len();
    if replacement.semiedge_count() != k || alignment.len() != k {
        return Err(Error::ArityMismatch(replacement.semiedge_count(), k));
    }
    let (a, b) = cut_along(g, cut)?;
    let (kept, gone) = if is_side_of(g, cut, keep)? { (a, b) } else { (b, a) };
    let col_r = colouring_set(replacement)?.permuted(alignment, vec![k])?;
    let col_s = colouring_set(&gone)?.with_shape(vec![k]);
    if !col_r.is_subset_of(&col_s) {
        return Err(Error::Precondition("replacement is not colour-contained in the removed side".into()));
    }
    let mut asm = Assembly::new();
    let p = asm.import(&kept);
    let q = asm.import(replacement);
    let x = p.conn("X")?;
    for i in 0..k {
        asm.join(x[i], q.s(alignment[i]))?;
    }
    let out = asm.finish()?;
    if !colourable(g)? && colourable(&out)? {
        return Err(Error::Verification("substitution produced a colourable graph".into()));
    }
    Ok(out)
}

fn is_side_of(g: &Multipole, cut: &[usize], v: usize) -> Result<bool> {
    if v >= g.order() {
        return Err(Error::UnknownVertex(v));
    }
    // vertex 0 and v are on the same side iff some path avoids the cut
    let mut blocked = vec![false; g.links().len()];
    for &e in cut {
        *blocked.get_mut(e).ok_or(Error::UnknownEdge(e))? = true;
    }
    let mut adj = vec![Vec::new(); g.order()];
    for (i, &(x, y)) in g.links().iter().enumerate() {
        if !blocked[i] {
            adj[x].push(y);
            adj[y].push(x);
        }
    }
    let mut seen = vec![false; g.order()];
    let mut st = vec![0];
    seen[0] = true;
    while let Some(x) = st.pop() {
        for &y in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                st.push(y);
            }
        }
    }
    Ok(seen[v])
}

/// Which of the two Blanuša snarks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Blanusa {
    Type1,
    Type2,
}

/// Selectors `(e, f, u, v, swap)` for the two Blanuša snarks as dot products
/// of two Petersen graphs. Type 1 has 8 automorphisms, type 2 has 4.
pub const BLANUSA_SELECTORS: [(usize, usize, usize, usize, [bool; 2]); 2] =
    [(0, 8, 0, 1, [false, false]), (0, 5, 0, 1, [false, false])];

pub fn blanusa(t: Blanusa) -> Result<DotProduct> {
    let (e, f, u, v, sw) = BLANUSA_SELECTORS[t as usize];
    let p = basic::petersen();
    dot_product_oriented(&p, e, f, &p, u, v, sw)
}

/// Junction orders of the two Loupekine snarks `NNN(D, D, D)`.
pub const LOUPEKINE_PERMS: [[bool; 3]; 2] = [[false, false, false], [true, false, false]];

/// Loupekine snark of the first (`k = 1`) or second (`k = 2`) kind.
pub fn loupekine(k: usize) -> Result<Multipole> {
    let flips = LOUPEKINE_PERMS.get(k.wrapping_sub(1)).ok_or_else(|| Error::Precondition("Loupekine kind is 1 or 2".into()))?;
    let d = basic::dyad();
    let sw: [usize; 2] = [1, 0];
    let perms = flips.map(|f| if f { Some(&sw[..]) } else { None });
    nnn_with(&d, &d, &d, perms)
}

/// Selectors `(kind, e, f)` of the reducible order-24 snarks: a Loupekine
/// snark extended on a removable pair of links.
pub const ORDER24_SELECTORS: [(usize, usize, usize); 2] = [(1, 2, 10), (2, 2, 10)];

/// Order-24 snark obtained by extending a Loupekine snark on a removable
/// pair of links; the new adjacent vertices are `22` and `23`.
pub fn order24_snark(i: usize) -> Result<Multipole> {
    let &(k, e, f) = ORDER24_SELECTORS.get(i).ok_or_else(|| Error::Precondition("index 0 or 1".into()))?;
    let l = loupekine(k)?;
    if !edge_pair_removable(&l, e, f)? {
        return Err(Error::Verification(format!("links {e}, {f} are not removable")));
    }
    extend_edge(&l, e, f)
}

/// The 15-vertex perfect superpentagon: J5 minus its 5-cycle, with an
/// ordered connector following the cycle reordered as `0 2 4 1 3`.
pub fn j5_superpentagon() -> Result<Multipole> {
    let (side, order) = j5_side()?;
    let x = side.connector("X")?.semiedges.clone();
    let re = [0, 2, 4, 1, 3].iter().map(|&i| x[order[i]]).collect();
    side.regroup(&[("S", true, re)])
}

/// J5 minus its unique 5-cycle, with the position of cut edge `i` on the
/// cycle.
fn j5_side() -> Result<(Multipole, Vec<usize>)> {
    let j5 = basic::flower(5)?;
    let cyc = five_cycles(&j5);
    let [c] = cyc.as_slice() else {
        return Err(Error::Verification("J5 has not exactly one 5-cycle".into()));
    };
    let mut on = vec![false; j5.order()];
    for &v in c {
        on[v] = true;
    }
    // cut edges listed in cycle order
    let mut cut = Vec::new();
    for &v in c {
        for (i, &(a, b)) in j5.links().iter().enumerate() {
            if (a == v && !on[b]) || (b == v && !on[a]) {
                cut.push(i);
            }
        }
    }
    let (a, b) = cut_along(&j5, &cut)?;
    let side = if a.order() == 15 { a } else { b };
    Ok((side, (0..5).collect()))
}

/// Isaacs' double-star snark: J5 with its 5-cycle replaced by the J5
/// superpentagon.
pub fn double_star() -> Result<Multipole> {
    let (side, _) = j5_side()?;
    let sp = j5_superpentagon()?;
    let mut asm = Assembly::new();
    let p = asm.import(&side);
    let q = asm.import(&sp);
    asm.join_all(&p.conn("X")?, &q.conn("S")?)?;
    asm.finish()
}

/// Invariants asserted for the named snarks.
#[derive(Clone, Debug, Serialize)]
pub struct SnarkFacts {
    pub order: usize,
    pub girth: Option<usize>,
    pub cyclic_connectivity: Option<usize>,
    pub automorphisms: u64,
    pub snark: bool,
}

pub fn snark_facts(g: &Multipole) -> Result<SnarkFacts> {
    Ok(SnarkFacts {
        order: g.order(),
        girth: girth(g),
        cyclic_connectivity: cyclic_connectivity(g)?,
        automorphisms: automorphism_count(g)?,
        snark: !colourable(g)?,
    })
}
