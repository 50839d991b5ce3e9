use super::basic;
use super::blueprint::{Blueprint, Built, Class};
use crate::error::{Error, Result};
use crate::multipole::{Multipole, Part};
use crate::tait::{closed, colouring_set, Proper23Verdict};

pub(crate) fn require_shape(m: &Multipole, shape: &[usize], what: &str) -> Result<()> {
    if m.shape() != shape {
        return Err(Error::ShapeMismatch(format!("{what} needs connectors {shape:?}, found {:?}", m.shape())));
    }
    Ok(())
}

pub(crate) fn require_proper23(t: &Multipole, what: &str) -> Result<()> {
    require_shape(t, &[2, 3], what)?;
    match crate::tait::proper23_verdict(&colouring_set(t)?) {
        Proper23Verdict::Perfect | Proper23Verdict::ImperfectProper => Ok(()),
        v => Err(Error::Precondition(format!("{what} is not a proper (2,3)-pole ({v:?})"))),
    }
}

pub fn negator_class() -> Class {
    Class::Named("negator".into(), closed::negator())
}

pub fn proper23_class() -> Class {
    Class::Named("proper (2,3)".into(), closed::proper23())
}

/// Apply an optional permutation to a list of handles.
pub(crate) fn arrange(hs: Vec<usize>, perm: Option<&[usize]>) -> Result<Vec<usize>> {
    match perm {
        None => Ok(hs),
        Some(p) => {
            if p.len() != hs.len() || !crate::multipole::is_permutation(p) {
                return Err(Error::InvalidPermutation(p.to_vec()));
            }
            Ok(p.iter().map(|&i| hs[i]).collect())
        }
    }
}

/// `O1` to `I2`, a new vertex on `r1`, `r2`. Returns `(I1, O2, [r3])`.
pub fn wire_nn(bp: &mut Blueprint, n1: &Part, n2: &Part, perm: Option<&[usize]>) -> Result<[Vec<usize>; 3]> {
    bp.join_all(&n1.conn_at(1), &arrange(n2.conn_at(0), perm)?)?;
    let r = bp.through_vertex(n1.conn_at(2)[0], n2.conn_at(2)[0])?;
    Ok([n1.conn_at(0), n2.conn_at(1), vec![r]])
}

/// `C1` to `C2` with the edge `which` running through a new vertex. Returns
/// `(B1, B2, [r])`.
pub fn wire_tt(bp: &mut Blueprint, t1: &Part, t2: &Part, perm: Option<&[usize]>, which: usize) -> Result<[Vec<usize>; 3]> {
    let c1 = t1.conn_at(1);
    let c2 = arrange(t2.conn_at(1), perm)?;
    if which >= 3 {
        return Err(Error::Precondition("TT subdivides one of three edges".into()));
    }
    let mut r = 0;
    for i in 0..3 {
        if i == which {
            r = bp.through_vertex(c1[i], c2[i])?;
        } else {
            bp.join(c1[i], c2[i])?;
        }
    }
    Ok([t1.conn_at(0), t2.conn_at(0), vec![r]])
}

/// `O` to `B`; the last semiedge of `C` runs through a new vertex carrying `r`.
/// Returns `(I, C')` with the new semiedge last in `C'`.
pub fn wire_nt(bp: &mut Blueprint, n: &Part, t: &Part, perm: Option<&[usize]>) -> Result<[Vec<usize>; 2]> {
    bp.join_all(&n.conn_at(1), &arrange(t.conn_at(0), perm)?)?;
    let c = t.conn_at(1);
    let s = bp.through_vertex(c[2], n.conn_at(2)[0])?;
    Ok([n.conn_at(0), vec![c[0], c[1], s]])
}

/// Three `C` connectors meet a vertex plus three isolated edges, each
/// isolated edge linking two different `C`s. Returns `(B1, B2, B3)`.
pub fn wire_ttt(bp: &mut Blueprint, ts: [&Part; 3]) -> Result<[Vec<usize>; 3]> {
    let [w1, w2, w3] = bp.star();
    let (x1, x2) = bp.isolated();
    let (y1, y2) = bp.isolated();
    let (z1, z2) = bp.isolated();
    let d = [vec![w1, x1, z1], vec![w2, x2, y1], vec![w3, y2, z2]];
    for (t, di) in ts.iter().zip(&d) {
        bp.join_all(&t.conn_at(1), di)?;
    }
    Ok([ts[0].conn_at(0), ts[1].conn_at(0), ts[2].conn_at(0)])
}

/// `I1` to `B`; two semiedges of `C` to `I2`, the third to `I3` together with
/// `r1`; a new vertex on `r2`, `r3`. Returns `(O1, O2, O3, [r])`.
pub fn wire_three_nt(bp: &mut Blueprint, ns: [&Part; 3], t: &Part) -> Result<[Vec<usize>; 4]> {
    bp.join_all(&ns[0].conn_at(0), &t.conn_at(0))?;
    let c = t.conn_at(1);
    let i2 = ns[1].conn_at(0);
    let i3 = ns[2].conn_at(0);
    bp.join(c[0], i2[0])?;
    bp.join(c[1], i2[1])?;
    bp.join(c[2], i3[0])?;
    bp.join(ns[0].conn_at(2)[0], i3[1])?;
    let r = bp.through_vertex(ns[1].conn_at(2)[0], ns[2].conn_at(2)[0])?;
    Ok([ns[0].conn_at(1), ns[1].conn_at(1), ns[2].conn_at(1), vec![r]])
}

/// Negators in a cycle, `O_i` to `I_{i+1}`, residual semiedges on one vertex.
pub fn wire_nnn(bp: &mut Blueprint, ns: [&Part; 3], perms: [Option<&[usize]>; 3]) -> Result<()> {
    for i in 0..3 {
        let j = (i + 1) % 3;
        bp.join_all(&ns[i].conn_at(1), &arrange(ns[j].conn_at(0), perms[i])?)?;
    }
    let [a, b, c] = bp.star();
    bp.join(a, ns[0].conn_at(2)[0])?;
    bp.join(b, ns[1].conn_at(2)[0])?;
    bp.join(c, ns[2].conn_at(2)[0])?;
    Ok(())
}

fn realize<const K: usize>(bp: Blueprint, names: [&str; K], conns: [Vec<usize>; K]) -> Result<Multipole> {
    let mut bp = bp;
    for (n, c) in names.iter().zip(conns) {
        bp.group(n, false, c);
    }
    Ok(bp.finish()?.multipole)
}

pub fn nn(n1: &Multipole, n2: &Multipole) -> Result<Multipole> {
    nn_with(n1, n2, None)
}

pub fn nn_with(n1: &Multipole, n2: &Multipole, perm: Option<&[usize]>) -> Result<Multipole> {
    require_shape(n1, &[2, 2, 1], "NN")?;
    require_shape(n2, &[2, 2, 1], "NN")?;
    let mut bp = Blueprint::new();
    let a = bp.place("N1", n1, Class::Exact)?;
    let b = bp.place("N2", n2, Class::Exact)?;
    let out = wire_nn(&mut bp, &a, &b, perm)?;
    realize(bp, ["I", "O", "R"], out)
}

pub fn tt(t1: &Multipole, t2: &Multipole) -> Result<Multipole> {
    tt_with(t1, t2, None, 0)
}

pub fn tt_with(t1: &Multipole, t2: &Multipole, perm: Option<&[usize]>, which: usize) -> Result<Multipole> {
    require_proper23(t1, "TT")?;
    require_proper23(t2, "TT")?;
    let mut bp = Blueprint::new();
    let a = bp.place("T1", t1, Class::Exact)?;
    let b = bp.place("T2", t2, Class::Exact)?;
    let out = wire_tt(&mut bp, &a, &b, perm, which)?;
    realize(bp, ["B1", "B2", "R"], out)
}

pub fn nt(n: &Multipole, t: &Multipole) -> Result<Multipole> {
    nt_with(n, t, None)
}

pub fn nt_with(n: &Multipole, t: &Multipole, perm: Option<&[usize]>) -> Result<Multipole> {
    require_shape(n, &[2, 2, 1], "NT")?;
    require_proper23(t, "NT")?;
    let mut bp = Blueprint::new();
    let a = bp.place("N", n, Class::Exact)?;
    let b = bp.place("T", t, Class::Exact)?;
    let out = wire_nt(&mut bp, &a, &b, perm)?;
    realize(bp, ["I", "C"], out)
}

pub fn ttt(t1: &Multipole, t2: &Multipole, t3: &Multipole) -> Result<Multipole> {
    let mut bp = Blueprint::new();
    let mut ps = Vec::new();
    for (i, t) in [t1, t2, t3].into_iter().enumerate() {
        require_proper23(t, "TTT")?;
        ps.push(bp.place(&format!("T{}", i + 1), t, Class::Exact)?);
    }
    let out = wire_ttt(&mut bp, [&ps[0], &ps[1], &ps[2]])?;
    realize(bp, ["S1", "S2", "S3"], out)
}

pub fn three_nt(n1: &Multipole, n2: &Multipole, n3: &Multipole, t: &Multipole) -> Result<Multipole> {
    let mut bp = Blueprint::new();
    let mut ps = Vec::new();
    for (i, n) in [n1, n2, n3].into_iter().enumerate() {
        require_shape(n, &[2, 2, 1], "3NT")?;
        ps.push(bp.place(&format!("N{}", i + 1), n, Class::Exact)?);
    }
    require_proper23(t, "3NT")?;
    let tp = bp.place("T", t, Class::Exact)?;
    let out = wire_three_nt(&mut bp, [&ps[0], &ps[1], &ps[2]], &tp)?;
    realize(bp, ["O1", "O2", "O3", "R"], out)
}

pub fn nnn(n1: &Multipole, n2: &Multipole, n3: &Multipole) -> Result<Multipole> {
    nnn_with(n1, n2, n3, [None, None, None])
}

/// NNN with the junction `O_i`-`I_{i+1}` permuted by `perms[i]`.
pub fn nnn_with(n1: &Multipole, n2: &Multipole, n3: &Multipole, perms: [Option<&[usize]>; 3]) -> Result<Multipole> {
    Ok(nnn_built([n1, n2, n3], perms)?.multipole)
}

pub fn nnn_built(ns: [&Multipole; 3], perms: [Option<&[usize]>; 3]) -> Result<Built> {
    let mut bp = Blueprint::new();
    let mut ps = Vec::new();
    for (i, n) in ns.into_iter().enumerate() {
        require_shape(n, &[2, 2, 1], "NNN")?;
        ps.push(bp.place(&format!("N{}", i + 1), n, negator_class())?);
    }
    wire_nnn(&mut bp, [&ps[0], &ps[1], &ps[2]], perms)?;
    bp.finish()
}

/// Superpentagon Q from a proper (2,3)-pole `t` and a proper (3,3)-pole `r`.
/// Single ordered connector `S = (f0, ..., f4)`.
pub fn superpentagon_q(t: &Multipole, r: &Multipole) -> Result<Multipole> {
    require_proper23(t, "Q")?;
    require_shape(r, &[3, 3], "Q")?;
    let mut bp = Blueprint::new();
    wire_q(&mut bp, t, r, Class::Exact, Class::Exact, Class::Exact)?;
    Ok(bp.finish()?.multipole)
}

/// Wire Q into a blueprint and group its five outputs as `S`.
pub(crate) fn wire_q(bp: &mut Blueprint, t: &Multipole, r: &Multipole, c1: Class, c4: Class, cr: Class) -> Result<Vec<usize>> {
    let t1 = bp.place("T1", t, c1)?;
    let t4 = bp.place("T4", t, c4)?;
    let rp = bp.place("R", r, cr)?;
    let mut u = Vec::new();
    for _ in 0..2 {
        let [e1, e2, rr] = bp.star();
        let (f1, f2) = bp.isolated();
        let (g1, g2) = bp.isolated();
        u.push(([e1, f1, g1], [e2, f2, g2], rr));
    }
    let (u2s1, u2s2, u2r) = u[0];
    let (u3s1, u3s2, u3r) = u[1];
    bp.join_all(&rp.conn_at(0), &u2s2)?;
    bp.join_all(&rp.conn_at(1), &u3s1)?;
    bp.join_all(&u2s1, &t1.conn_at(1))?;
    bp.join_all(&u3s2, &t4.conn_at(1))?;
    let b1 = t1.conn_at(0);
    let b4 = t4.conn_at(0);
    let [v0a, v0b, e0] = bp.star();
    bp.join(b1[1], v0a)?;
    bp.join(b4[1], v0b)?;
    let out = vec![e0, b1[0], u2r, u3r, b4[0]];
    bp.group("S", true, out.clone());
    Ok(out)
}

/// Even (2,2,2)-pole from five even (2,2,2)-poles on the subdivided theta
/// graph: parts 0 and 1 sit at the hubs, parts 2..4 on the subdivided edges.
/// `flips[j]` reverses the pairing on the `j`-th hub edge.
pub fn h_m(parts: &[Multipole; 5], flips: [bool; 6]) -> Result<Multipole> {
    let mut bp = Blueprint::new();
    let mut ps = Vec::new();
    for (i, h) in parts.iter().enumerate() {
        require_shape(h, &[2, 2, 2], "H_M")?;
        ps.push(bp.place(&format!("H{}", i + 1), h, Class::Exact)?);
    }
    let mut j = 0;
    for hub in 0..2 {
        for k in 0..3 {
            let a = ps[hub].conn_at(k);
            let mut b = ps[2 + k].conn_at(hub);
            if flips[j] {
                b.reverse();
            }
            bp.join_all(&a, &b)?;
            j += 1;
        }
    }
    for k in 0..3 {
        bp.group(&format!("S{}", k + 1), false, ps[2 + k].conn_at(2));
    }
    Ok(bp.finish()?.multipole)
}

/// The 34-vertex snark `H_M * V_4` on five hexagons.
pub fn h_m_snark(flips: [bool; 6]) -> Result<Multipole> {
    let hx = basic::hexagon();
    let parts = [hx.clone(), hx.clone(), hx.clone(), hx.clone(), hx];
    Ok(super::classes::class_34f(&parts, flips)?.multipole)
}
