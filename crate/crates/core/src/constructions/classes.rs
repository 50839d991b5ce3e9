//! Snark classes assembled from negators, proper (2,3)-poles and smaller
//! gadgets. Every builder returns a [`Built`] so the uncolourability argument
//! can be replayed on the class-level network.

use super::basic;
use super::blueprint::{Blueprint, Built, Class};
use super::families::{negator_class, proper23_class, require_proper23, require_shape};
use crate::error::{Error, Result};
use crate::multipole::{Assembly, Multipole, Part};
use crate::structure::is_isomorphic;
use serde::{Deserialize, Serialize};

/// The six orders of three items.
pub const PERMS3: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

/// How the leftover free ends of an uncolourable multipole are closed up:
/// new vertices on triples of ends, the other ends joined in pairs. Indices
/// refer to the builder's list of free ends.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Closure {
    pub vertices: Vec<[usize; 3]>,
    pub pairs: Vec<[usize; 2]>,
}

impl Closure {
    pub fn new(vertices: &[[usize; 3]], pairs: &[[usize; 2]]) -> Self {
        Closure { vertices: vertices.to_vec(), pairs: pairs.to_vec() }
    }

    /// Number of free ends this closure consumes.
    pub fn width(&self) -> usize {
        3 * self.vertices.len() + 2 * self.pairs.len()
    }

    fn apply(&self, bp: &mut Blueprint, free: &[usize]) -> Result<()> {
        let mut seen = vec![false; free.len()];
        let mut take = |i: usize| -> Result<usize> {
            match seen.get(i) {
                Some(false) => {
                    seen[i] = true;
                    Ok(free[i])
                }
                _ => Err(Error::Precondition(format!("closure uses free end {i} twice or out of range"))),
            }
        };
        let mut tri = Vec::new();
        for t in &self.vertices {
            tri.push([take(t[0])?, take(t[1])?, take(t[2])?]);
        }
        let mut pr = Vec::new();
        for p in &self.pairs {
            pr.push([take(p[0])?, take(p[1])?]);
        }
        if self.width() != free.len() {
            return Err(Error::Precondition(format!("closure covers {} of {} free ends", self.width(), free.len())));
        }
        for [a, b, c] in tri {
            let [x, y, z] = bp.star();
            bp.join(a, x)?;
            bp.join(b, y)?;
            bp.join(c, z)?;
        }
        for [a, b] in pr {
            bp.join(a, b)?;
        }
        Ok(())
    }

    /// All closures of `free` ends with `vertices` new vertices, in a fixed
    /// enumeration order.
    pub fn enumerate(free: usize, vertices: usize) -> Vec<Closure> {
        let mut out = Vec::new();
        if free < 3 * vertices || !(free - 3 * vertices).is_multiple_of(2) {
            return out;
        }
        let mut used = vec![false; free];
        triples(free, vertices, 0, &mut used, &mut Vec::new(), &mut out);
        out
    }
}

fn triples(n: usize, k: usize, start: usize, used: &mut [bool], cur: &mut Vec<[usize; 3]>, out: &mut Vec<Closure>) {
    if cur.len() == k {
        let mut ms = Vec::new();
        matchings(used, &mut Vec::new(), &mut ms);
        for m in ms {
            out.push(Closure { vertices: cur.clone(), pairs: m });
        }
        return;
    }
    for a in start..n {
        if used[a] {
            continue;
        }
        for b in a + 1..n {
            if used[b] {
                continue;
            }
            for c in b + 1..n {
                if used[c] {
                    continue;
                }
                used[a] = true;
                used[b] = true;
                used[c] = true;
                cur.push([a, b, c]);
                triples(n, k, a + 1, used, cur, out);
                cur.pop();
                used[a] = false;
                used[b] = false;
                used[c] = false;
            }
        }
    }
}

fn matchings(used: &mut [bool], cur: &mut Vec<[usize; 2]>, out: &mut Vec<Vec<[usize; 2]>>) {
    let Some(a) = used.iter().position(|&u| !u) else {
        out.push(cur.clone());
        return;
    };
    used[a] = true;
    for b in a + 1..used.len() {
        if !used[b] {
            used[b] = true;
            cur.push([a, b]);
            matchings(used, cur, out);
            cur.pop();
            used[b] = false;
        }
    }
    used[a] = false;
}

/// Junction choices left open by a class wiring.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Alignment {
    /// Bit `i` reverses the `i`-th two-semiedge junction.
    pub flips: u32,
    /// Indices into [`PERMS3`], one per three-semiedge junction.
    pub perms: Vec<usize>,
    pub closure: Closure,
}

impl Alignment {
    pub fn new(flips: u32, perms: &[usize], closure: Closure) -> Self {
        Alignment { flips, perms: perms.to_vec(), closure }
    }

    fn flip(&self, i: usize, mut hs: Vec<usize>) -> Vec<usize> {
        if self.flips >> i & 1 == 1 {
            hs.reverse();
        }
        hs
    }

    fn perm(&self, i: usize, hs: Vec<usize>) -> Result<Vec<usize>> {
        let p = self.perms.get(i).copied().unwrap_or(0);
        let p = PERMS3.get(p).ok_or_else(|| Error::InvalidPermutation(vec![p]))?;
        if hs.len() != 3 {
            return Err(Error::ArityMismatch(hs.len(), 3));
        }
        Ok(p.iter().map(|&j| hs[j]).collect())
    }
}

fn negators(bp: &mut Blueprint, ns: &[&Multipole], what: &str) -> Result<Vec<Part>> {
    let mut out = Vec::new();
    for (i, n) in ns.iter().enumerate() {
        require_shape(n, &[2, 2, 1], what)?;
        out.push(bp.place(&format!("N{}", i + 1), n, negator_class())?);
    }
    Ok(out)
}

fn proper_poles(bp: &mut Blueprint, ts: &[&Multipole], what: &str) -> Result<Vec<Part>> {
    let mut out = Vec::new();
    for (i, t) in ts.iter().enumerate() {
        require_proper23(t, what)?;
        out.push(bp.place(&format!("T{}", i + 1), t, proper23_class())?);
    }
    Ok(out)
}

fn r(p: &Part) -> usize {
    p.conn_at(2)[0]
}

/// A vertex and an isolated edge: two 2-connectors (vertex end first) and the
/// third end of the vertex.
fn x_piece(bp: &mut Blueprint) -> ([usize; 2], [usize; 2], usize) {
    let [z0, z1, z2] = bp.star();
    let (a, b) = bp.isolated();
    ([z0, a], [z1, b], z2)
}

/// J3 minus vertex `x` with links `f`, `g` severed. Ordered connectors
/// `F = (e1, e2)` from `f`, `G = (e3, e4)` from `g` (reversed by `g_rev`),
/// `X = (e5, e6, e7)` from `x`, rotated by `x_rot`.
///
/// Fails unless both re-closings, `e1e2 + e3e4 + vertex(e5,e6,e7)` and
/// `e5e6 + e4e7 + vertex(e1,e2,e3)`, give J3 back.
pub fn m11(x: usize, f: usize, g: usize, g_rev: bool, x_rot: usize) -> Result<Multipole> {
    let j3 = basic::flower(3)?;
    let links = j3.links();
    if x >= j3.order() || f >= links.len() || g >= links.len() || f == g || x_rot >= 3 {
        return Err(Error::Precondition("M11 selectors out of range".into()));
    }
    if [links[f], links[g]].iter().any(|&(a, b)| a == x || b == x) {
        return Err(Error::Precondition("M11 severs an edge at the removed vertex".into()));
    }
    let mut a = Assembly::new();
    let p = a.import(&j3);
    let (e1, e2) = a.sever(p.link_edges[f])?;
    let (mut e3, mut e4) = a.sever(p.link_edges[g])?;
    if g_rev {
        std::mem::swap(&mut e3, &mut e4);
    }
    let mut xs = a.detach(&[p.v(x)], false)?.remove(0);
    xs.rotate_left(x_rot);
    a.group("F", true, vec![e1, e2]);
    a.group("G", true, vec![e3, e4]);
    a.group("X", true, xs);
    let m = a.finish()?;
    for (pairs, tri) in [([(0, 1), (2, 3)], [4, 5, 6]), ([(4, 5), (3, 6)], [0, 1, 2])] {
        let mut b = Assembly::new();
        let q = b.import(&m);
        for (s, t) in pairs {
            b.join(q.s(s), q.s(t))?;
        }
        let (_, h) = b.star();
        for i in 0..3 {
            b.join(q.s(tri[i]), h[i])?;
        }
        let h = b.finish()?;
        if !is_isomorphic(&h, &j3) {
            return Err(Error::Precondition("M11 re-closing is not J3".into()));
        }
    }
    Ok(m)
}

/// Default M11 selectors.
pub const M11_DEFAULT: (usize, usize, usize, bool, usize) = (1, 5, 14, true, 2);

/// Three negators and M11: `O2-I1`, `O1-I3`, `O3-F`, `r3-e3`, `r1-e4`,
/// `I2` to `e5 e6`, `r2-e7`. Flip bits: the four 2-junctions in that order.
pub fn class_32a(ns: [&Multipole; 3], m11: &Multipole, al: &Alignment) -> Result<Built> {
    require_shape(m11, &[2, 2, 3], "M11")?;
    let mut bp = Blueprint::new();
    let n = negators(&mut bp, &ns, "32-A")?;
    let m = bp.place("M11", m11, Class::Exact)?;
    bp.join_all(&n[1].conn_at(1), &al.flip(0, n[0].conn_at(0)))?;
    bp.join_all(&n[0].conn_at(1), &al.flip(1, n[2].conn_at(0)))?;
    bp.join_all(&n[2].conn_at(1), &al.flip(2, m.conn_at(0)))?;
    let g = m.conn_at(1);
    bp.join(r(&n[2]), g[0])?;
    bp.join(r(&n[0]), g[1])?;
    let x = m.conn_at(2);
    bp.join_all(&n[1].conn_at(0), &al.flip(3, x[..2].to_vec()))?;
    bp.join(r(&n[1]), x[2])?;
    bp.finish()
}

/// The uncolourable 9-pole of class 34-A plus its closure. `N_i.O` meets
/// `T_i.B`; the `I` connectors meet a vertex-and-edge piece whose spare end
/// is `e`. Free ends: `r1, r2, C1 (3), C2 (3), e`. Flip bits: `O1-B1`,
/// `O2-B2`, `I1-X`, `I2-X`.
pub fn class_34a(ns: [&Multipole; 2], ts: [&Multipole; 2], al: &Alignment) -> Result<Built> {
    let mut bp = Blueprint::new();
    let n = negators(&mut bp, &ns, "34-A")?;
    let t = proper_poles(&mut bp, &ts, "34-A")?;
    bp.join_all(&n[0].conn_at(1), &al.flip(0, t[0].conn_at(0)))?;
    bp.join_all(&n[1].conn_at(1), &al.flip(1, t[1].conn_at(0)))?;
    let (a, b, e) = x_piece(&mut bp);
    bp.join_all(&n[0].conn_at(0), &al.flip(2, a.to_vec()))?;
    bp.join_all(&n[1].conn_at(0), &al.flip(3, b.to_vec()))?;
    let mut free = vec![r(&n[0]), r(&n[1])];
    free.extend(t[0].conn_at(1));
    free.extend(t[1].conn_at(1));
    free.push(e);
    al.closure.apply(&mut bp, &free)?;
    bp.finish()
}

/// Class 34-B: a vertex `v` joined to `I1`, `I2` (with an isolated edge) and
/// by `e` to `T1`, where `B1 = (e, r1)`; `O2` meets `B2`. Free ends:
/// `O1 (2), r2, C1 (3), C2 (3)`. Flip bits: `I1-v`, `I2-v`, `O2-B2`, `B1`.
pub fn class_34b(ns: [&Multipole; 2], ts: [&Multipole; 2], al: &Alignment) -> Result<Built> {
    let mut bp = Blueprint::new();
    let n = negators(&mut bp, &ns, "34-B")?;
    let t = proper_poles(&mut bp, &ts, "34-B")?;
    let (a, b, e) = x_piece(&mut bp);
    bp.join_all(&n[0].conn_at(0), &al.flip(0, a.to_vec()))?;
    bp.join_all(&n[1].conn_at(0), &al.flip(1, b.to_vec()))?;
    bp.join_all(&n[1].conn_at(1), &al.flip(2, t[1].conn_at(0)))?;
    bp.join_all(&al.flip(3, vec![e, r(&n[0])]), &t[0].conn_at(0))?;
    let mut free = n[0].conn_at(1);
    free.push(r(&n[1]));
    free.extend(t[0].conn_at(1));
    free.extend(t[1].conn_at(1));
    al.closure.apply(&mut bp, &free)?;
    bp.finish()
}

/// Class 34-C: a (2,2,2)-pole `R(A,B,C)` with `B1-A`, `C-I`, `O-B2`. Free
/// ends: `R.B (2), r, C1 (3), C2 (3)`. Flip bits: `B1-A`, `C-I`, `O-B2`.
pub fn class_34c(rr: &Multipole, n: &Multipole, ts: [&Multipole; 2], al: &Alignment) -> Result<Built> {
    require_shape(rr, &[2, 2, 2], "34-C")?;
    let mut bp = Blueprint::new();
    let rp = bp.place("R", rr, Class::Exact)?;
    let n = negators(&mut bp, &[n], "34-C")?;
    let t = proper_poles(&mut bp, &ts, "34-C")?;
    bp.join_all(&t[0].conn_at(0), &al.flip(0, rp.conn_at(0)))?;
    bp.join_all(&rp.conn_at(2), &al.flip(1, n[0].conn_at(0)))?;
    bp.join_all(&n[0].conn_at(1), &al.flip(2, t[1].conn_at(0)))?;
    let mut free = rp.conn_at(1);
    free.push(r(&n[0]));
    free.extend(t[0].conn_at(1));
    free.extend(t[1].conn_at(1));
    al.closure.apply(&mut bp, &free)?;
    bp.finish()
}

/// Four negators in a cycle with a vertex-and-edge piece `w_i` between `O_i`
/// and `I_{i+1}`, plus two spare vertices `u`, `z`. Free ends, in order:
/// `r1..r4`, the spare ends `t1..t4` of the `w_i`, `u` (3), `z` (3); the
/// closure pairs them all. Flip bits: `O_i-w_i` for `i = 1..4`, then
/// `w_i-I_{i+1}`.
///
/// Classes 34-D and 34-E are two closures of this ring.
pub fn negator_ring(ns: [&Multipole; 4], al: &Alignment) -> Result<Built> {
    let mut bp = Blueprint::new();
    let n = negators(&mut bp, &ns, "negator ring")?;
    let mut free: Vec<usize> = n.iter().map(r).collect();
    for i in 0..4 {
        let (a, b, e) = x_piece(&mut bp);
        bp.join_all(&n[i].conn_at(1), &al.flip(i, a.to_vec()))?;
        bp.join_all(&n[(i + 1) % 4].conn_at(0), &al.flip(4 + i, b.to_vec()))?;
        free.push(e);
    }
    free.extend(bp.star());
    free.extend(bp.star());
    al.closure.apply(&mut bp, &free)?;
    bp.finish()
}

/// `H_M * V_4`, with the even (2,2,2)-pole as premise.
pub fn class_34f(parts: &[Multipole; 5], flips: [bool; 6]) -> Result<Built> {
    let h = super::families::h_m(parts, flips)?;
    let mut bp = Blueprint::new();
    let a = bp.place("H_M", &h, Class::Named("even (2,2,2)".into(), crate::tait::closed::even222()))?;
    let b = bp.place("V4", &basic::v4(), Class::Exact)?;
    for k in 0..3 {
        bp.join_all(&a.conn_at(k), &b.conn_at(k))?;
    }
    bp.finish()
}

/// Three negators in a cycle, one edge of each junction `O_i-I_{i+1}`
/// subdivided by a vertex carrying `e_i`. Returns `(r1 r2 r3, e1 e2 e3)`.
/// Flip bits: the three junctions.
fn wire_m24(bp: &mut Blueprint, n: &[Part], al: &Alignment) -> Result<(Vec<usize>, Vec<usize>)> {
    let mut es = Vec::new();
    for i in 0..3 {
        let o = n[i].conn_at(1);
        let inn = al.flip(i, n[(i + 1) % 3].conn_at(0));
        bp.join(o[0], inn[0])?;
        es.push(bp.through_vertex(o[1], inn[1])?);
    }
    Ok((n.iter().map(r).collect(), es))
}

/// The (3,3)-pole M24 with ordered connectors `I = (r1, r2, r3)` and `O`,
/// the ends `(e1, e2, e3)` reordered by perm 0.
pub fn m24(ns: [&Multipole; 3], al: &Alignment) -> Result<Multipole> {
    let mut bp = Blueprint::new();
    let n = negators(&mut bp, &ns, "M24")?;
    let (i, e) = wire_m24(&mut bp, &n, al)?;
    bp.group("I", true, i);
    bp.group("O", true, al.perm(0, e)?);
    Ok(bp.finish()?.multipole)
}

/// Class 36-A: `M24 * Y3`, both connectors ordered.
pub fn class_36a(ns: [&Multipole; 3], al: &Alignment) -> Result<Built> {
    let mut bp = Blueprint::new();
    let n = negators(&mut bp, &ns, "36-A")?;
    let (i, e) = wire_m24(&mut bp, &n, al)?;
    let y = bp.place("Y3", &basic::y_chain(3)?, Class::Exact)?;
    bp.join_all(&i, &y.conn_at(0))?;
    bp.join_all(&al.perm(0, e)?, &y.conn_at(1))?;
    bp.finish()
}

/// Class 36-B and its generalisation on `4k + 1` negators: a path
/// `N_1 ... N_m`, a vertex on `i1 in I_1`, `o1 in O_m` and `r_{2k+1}`,
/// `i2-r_{2k+2}`, `o2-r_{2k}`, and `r_j-r_{m+1-j}` otherwise.
/// Flip bits: the `m - 1` junctions, then `I_1`, then `O_m`.
pub fn class_36b(ns: &[&Multipole], al: &Alignment) -> Result<Built> {
    let m = ns.len();
    if m < 5 || m % 4 != 1 {
        return Err(Error::Precondition(format!("36-B needs 4k+1 >= 5 negators, got {m}")));
    }
    let k = (m - 1) / 4;
    let mut bp = Blueprint::new();
    let n = negators(&mut bp, ns, "36-B")?;
    for i in 0..m - 1 {
        bp.join_all(&n[i].conn_at(1), &al.flip(i, n[i + 1].conn_at(0)))?;
    }
    let i1 = al.flip(m - 1, n[0].conn_at(0));
    let om = al.flip(m, n[m - 1].conn_at(1));
    // 1-based residual indices
    let rr = |j: usize| r(&n[j - 1]);
    let [a, b, c] = bp.star();
    bp.join(a, i1[0])?;
    bp.join(b, om[0])?;
    bp.join(c, rr(2 * k + 1))?;
    bp.join(i1[1], rr(2 * k + 2))?;
    bp.join(om[1], rr(2 * k))?;
    for j in 1..=m {
        let jj = m + 1 - j;
        if j < jj && ![2 * k, 2 * k + 1, 2 * k + 2].contains(&j) {
            bp.join(rr(j), rr(jj))?;
        }
    }
    bp.finish()
}

/// Class 38-A: `B = (r1, r2)`, `O1-I2`, `O2-I3`, `C = {r3} + O4`, `r4` on
/// one end of `I1`, a vertex on the other end of `I1`, `o3` and `i4`, and
/// the edge `o3'-i4'`. Flip bits: `O1-I2`, `O2-I3`, `I1`, `O3`, `I4`, `O4`,
/// `B`; perm 0 orders `C`.
pub fn class_38a(ns: [&Multipole; 4], t: &Multipole, al: &Alignment) -> Result<Built> {
    let mut bp = Blueprint::new();
    let n = negators(&mut bp, &ns, "38-A")?;
    let t = proper_poles(&mut bp, &[t], "38-A")?.remove(0);
    bp.join_all(&al.flip(6, vec![r(&n[0]), r(&n[1])]), &t.conn_at(0))?;
    bp.join_all(&n[0].conn_at(1), &al.flip(0, n[1].conn_at(0)))?;
    bp.join_all(&n[1].conn_at(1), &al.flip(1, n[2].conn_at(0)))?;
    let o4 = al.flip(5, n[3].conn_at(1));
    bp.join_all(&al.perm(0, vec![r(&n[2]), o4[0], o4[1]])?, &t.conn_at(1))?;
    let i1 = al.flip(2, n[0].conn_at(0));
    let o3 = al.flip(3, n[2].conn_at(1));
    let i4 = al.flip(4, n[3].conn_at(0));
    bp.join(r(&n[3]), i1[0])?;
    let [a, b, c] = bp.star();
    bp.join(a, i1[1])?;
    bp.join(b, o3[0])?;
    bp.join(c, i4[0])?;
    bp.join(o3[1], i4[1])?;
    bp.finish()
}

/// Class 42-A: a (2,2,2)-pole `R(A,B,C)` with `A-O1`, `I1-B1`, `B-O2`,
/// `I2-B2`. Free ends: `R.C (2), r1, r2, C1 (3), C2 (3)`. Flip bits: the
/// four junctions in that order.
pub fn class_42a(rr: &Multipole, ns: [&Multipole; 2], ts: [&Multipole; 2], al: &Alignment) -> Result<Built> {
    require_shape(rr, &[2, 2, 2], "42-A")?;
    let mut bp = Blueprint::new();
    let rp = bp.place("R", rr, Class::Exact)?;
    let n = negators(&mut bp, &ns, "42-A")?;
    let t = proper_poles(&mut bp, &ts, "42-A")?;
    bp.join_all(&rp.conn_at(0), &al.flip(0, n[0].conn_at(1)))?;
    bp.join_all(&n[0].conn_at(0), &al.flip(1, t[0].conn_at(0)))?;
    bp.join_all(&rp.conn_at(1), &al.flip(2, n[1].conn_at(1)))?;
    bp.join_all(&n[1].conn_at(0), &al.flip(3, t[1].conn_at(0)))?;
    let mut free = rp.conn_at(2);
    free.push(r(&n[0]));
    free.push(r(&n[1]));
    free.extend(t[0].conn_at(1));
    free.extend(t[1].conn_at(1));
    al.closure.apply(&mut bp, &free)?;
    bp.finish()
}

/// Three new vertices `x_k`, each on one end of every `C_i`, around three
/// proper (2,3)-poles. The `x_k` come first in the vertex numbering; the
/// connectors are `B1, B2, B3`. Perm `i` orders `C_i`.
fn wire_strict(bp: &mut Blueprint, ts: [&Multipole; 3], al: &Alignment) -> Result<Vec<Part>> {
    let xs = [bp.star(), bp.star(), bp.star()];
    let t = proper_poles(bp, &ts, "STRICT_TTT")?;
    for (i, ti) in t.iter().enumerate() {
        let c = al.perm(i, ti.conn_at(1))?;
        for k in 0..3 {
            bp.join(xs[k][i], c[k])?;
        }
    }
    Ok(t)
}

/// The (2,2,2)-pole of the strictly critical gadget.
pub fn strict_pole(ts: [&Multipole; 3], al: &Alignment) -> Result<Multipole> {
    let mut bp = Blueprint::new();
    let t = wire_strict(&mut bp, ts, al)?;
    for (i, ti) in t.iter().enumerate() {
        bp.group(&format!("B{}", i + 1), false, ti.conn_at(0));
    }
    Ok(bp.finish()?.multipole)
}

/// The strict gadget substituted for `V_4` in the Petersen graph: its `B_i`
/// meet the opposite pairs of the remaining hexagon. Flip bits: `B_i`.
pub fn strict_ttt(ts: [&Multipole; 3], al: &Alignment) -> Result<Built> {
    let mut bp = Blueprint::new();
    let t = wire_strict(&mut bp, ts, al)?;
    let h = bp.place("hexagon", &basic::hexagon(), Class::Exact)?;
    for (i, ti) in t.iter().enumerate() {
        bp.join_all(&al.flip(i, ti.conn_at(0)), &h.conn_at(i))?;
    }
    bp.finish()
}
