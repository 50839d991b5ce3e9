use super::{is_permutation, Assembly, Multipole, SemiedgeId, VertexId};
use crate::error::{Error, Result};

/// What happens to a link whose both ends are removed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum RemovalPolicy {
    /// Keep it as an isolated edge.
    #[default]
    Keep,
    /// Delete it.
    Drop,
}

pub fn junction_semiedges(m: &Multipole, s1: SemiedgeId, s2: SemiedgeId) -> Result<Multipole> {
    let n = m.semiedge_count();
    for s in [s1, s2] {
        if s >= n {
            return Err(Error::UnknownSemiedge(s));
        }
    }
    if s1 == s2 {
        return Err(Error::SameSemiedge(s1));
    }
    let mut a = Assembly::new();
    let p = a.import(m);
    a.keep_connectors(&p, "");
    a.join(p.s(s1), p.s(s2))?;
    a.finish()
}

fn fresh_name(taken: &[String], name: &str) -> String {
    let mut n = name.to_string();
    while taken.contains(&n) {
        n.push('\'');
    }
    n
}

/// Join connector `a` of `m` to connector `b` of `n`. Semiedge `i` of `a` meets
/// semiedge `perm[i]` of `b`. Connectors of `n` whose names clash with those of
/// `m` get primes appended.
pub fn junction_connectors(
    m: &Multipole,
    a: &str,
    n: &Multipole,
    b: &str,
    perm: Option<&[usize]>,
) -> Result<Multipole> {
    let ca = m.connector(a)?;
    let cb = n.connector(b)?;
    if ca.arity() != cb.arity() {
        return Err(Error::ArityMismatch(ca.arity(), cb.arity()));
    }
    if let Some(p) = perm {
        if p.len() != ca.arity() || !is_permutation(p) {
            return Err(Error::InvalidPermutation(p.to_vec()));
        }
        let identity = p.iter().enumerate().all(|(i, &x)| i == x);
        if ca.ordered && cb.ordered && !identity {
            return Err(Error::InvalidPermutation(p.to_vec()));
        }
    }
    let mut asm = Assembly::new();
    let pm = asm.import(m);
    let pn = asm.import(n);
    let ha = pm.conn(a)?;
    let hb = pn.conn(b)?;
    for (i, &h) in ha.iter().enumerate() {
        let j = perm.map_or(i, |p| p[i]);
        asm.join(h, hb[j])?;
    }
    let mut names: Vec<String> = Vec::new();
    for c in m.connectors() {
        if c.name != a {
            asm.keep_connector(&pm, &c.name, &c.name)?;
            names.push(c.name.clone());
        }
    }
    for c in n.connectors() {
        if c.name != b {
            let nn = fresh_name(&names, &c.name);
            asm.keep_connector(&pn, &c.name, &nn)?;
            names.push(nn);
        }
    }
    asm.finish()
}

/// Sever links (by index into `links()`). Each severed link yields a 2-connector
/// `e<index>` whose first semiedge sits at the smaller end vertex.
pub fn sever_edges(g: &Multipole, edges: &[usize]) -> Result<Multipole> {
    let mut asm = Assembly::new();
    let p = asm.import(g);
    asm.keep_connectors(&p, "");
    let mut seen = vec![false; g.links().len()];
    for &e in edges {
        if e >= g.links().len() || std::mem::replace(&mut seen[e], true) {
            return Err(Error::UnknownEdge(e));
        }
        let (x, y) = asm.sever(p.link_edges[e])?;
        asm.group(&format!("e{e}"), false, vec![x, y]);
    }
    asm.finish()
}

pub fn remove_vertices(g: &Multipole, vs: &[VertexId]) -> Result<Multipole> {
    remove_vertices_with(g, vs, RemovalPolicy::Keep)
}

/// Delete vertices. The new semiedges at each removed vertex `x` form an
/// unordered connector `v<x>`.
pub fn remove_vertices_with(g: &Multipole, vs: &[VertexId], policy: RemovalPolicy) -> Result<Multipole> {
    let mut seen = vec![false; g.order()];
    for &v in vs {
        if v >= g.order() || std::mem::replace(&mut seen[v], true) {
            return Err(Error::UnknownVertex(v));
        }
    }
    let mut asm = Assembly::new();
    let p = asm.import(g);
    asm.keep_connectors(&p, "");
    let local: Vec<usize> = vs.iter().map(|&v| p.v(v)).collect();
    let hs = asm.detach(&local, policy == RemovalPolicy::Keep)?;
    for (&v, h) in vs.iter().zip(hs) {
        asm.group(&format!("v{v}"), false, h);
    }
    asm.finish()
}

/// Split a connected cubic graph along an edge cut into its two sides. Both
/// sides carry one ordered connector `X` whose `i`-th semiedge comes from
/// `edges[i]`; the side containing vertex 0 comes first.
pub fn cut_along(g: &Multipole, edges: &[usize]) -> Result<(Multipole, Multipole)> {
    if !g.is_graph() {
        return Err(Error::InvalidCut("input is not a 0-pole".into()));
    }
    if !g.is_connected() {
        return Err(Error::InvalidCut("input is not connected".into()));
    }
    let mut cut = vec![false; g.links().len()];
    for &e in edges {
        if e >= cut.len() || std::mem::replace(&mut cut[e], true) {
            return Err(Error::UnknownEdge(e));
        }
    }
    let mut comp = vec![usize::MAX; g.order()];
    let mut ncomp = 0;
    let mut adj = vec![Vec::new(); g.order()];
    for (i, &(u, v)) in g.links().iter().enumerate() {
        if !cut[i] {
            adj[u].push(v);
            adj[v].push(u);
        }
    }
    for s in 0..g.order() {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = ncomp;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if comp[w] == usize::MAX {
                    comp[w] = ncomp;
                    stack.push(w);
                }
            }
        }
        ncomp += 1;
    }
    match ncomp {
        1 => return Err(Error::InvalidCut("cut does not disconnect".into())),
        2 => {}
        k => return Err(Error::InvalidCut(format!("cut leaves {k} components"))),
    }
    let mut sides = Vec::with_capacity(2);
    for side in 0..2 {
        let mut asm = Assembly::new();
        let verts: Vec<usize> = (0..g.order()).filter(|&v| comp[v] == side).collect();
        let mut local = vec![usize::MAX; g.order()];
        for &v in &verts {
            local[v] = asm.add_vertex();
        }
        for (i, &(u, v)) in g.links().iter().enumerate() {
            if !cut[i] && comp[u] == side {
                asm.link(local[u], local[v]);
            }
        }
        let mut hs = Vec::with_capacity(edges.len());
        for &e in edges {
            let (u, v) = g.links()[e];
            if comp[u] == comp[v] {
                return Err(Error::InvalidCut(format!("edge {e} does not cross the cut")));
            }
            let x = if comp[u] == side { u } else { v };
            hs.push(asm.dangle(local[x]));
        }
        asm.group("X", true, hs);
        sides.push(asm.finish()?);
    }
    let b = sides.pop().unwrap();
    let a = sides.pop().unwrap();
    Ok((a, b))
}
