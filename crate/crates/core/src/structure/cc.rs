use crate::error::{Error, Result};
use crate::multipole::Multipole;
use serde::Serialize;

/// A cycle-separating edge cut. `side[v]` is true on the side holding vertex 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CyclicCut {
    pub edges: Vec<usize>,
    pub side: Vec<bool>,
}

struct Search<'a> {
    adj: &'a [Vec<(usize, usize)>],
    links: &'a [(usize, usize)],
    state: Vec<u8>,
    bound: usize,
    strict: bool,
    found: Vec<CyclicCut>,
}

const FREE: u8 = 0;
const IN: u8 = 1;
const OUT: u8 = 2;

fn is_cyclic(n: usize, links: &[(usize, usize)], mask: &dyn Fn(usize) -> bool) -> bool {
    let mut uf: Vec<usize> = (0..n).collect();
    fn find(uf: &mut [usize], mut x: usize) -> usize {
        while uf[x] != x {
            uf[x] = uf[uf[x]];
            x = uf[x];
        }
        x
    }
    for &(u, v) in links {
        if mask(u) && mask(v) {
            let (a, b) = (find(&mut uf, u), find(&mut uf, v));
            if a == b {
                return true;
            }
            uf[a] = b;
        }
    }
    false
}

impl Search<'_> {
    fn ok(&self, k: usize) -> bool {
        if self.strict {
            k < self.bound
        } else {
            k <= self.bound
        }
    }

    /// Enumerate connected sets containing vertex 0 (state IN); OUT vertices
    /// are decided outside. `cut` counts links between IN and OUT.
    fn go(&mut self, cut: usize) {
        if !self.ok(cut) {
            return;
        }
        let n = self.state.len();
        let f = (0..n).find(|&v| self.state[v] == FREE && self.adj[v].iter().any(|&(w, _)| self.state[w] == IN));
        let Some(f) = f else {
            self.leaf(cut);
            return;
        };
        let into_in = self.adj[f].iter().filter(|&&(w, _)| self.state[w] == IN).count();
        let into_out = self.adj[f].iter().filter(|&&(w, _)| self.state[w] == OUT).count();
        self.state[f] = IN;
        self.go(cut + into_out);
        self.state[f] = OUT;
        self.go(cut + into_in);
        self.state[f] = FREE;
    }

    fn leaf(&mut self, cut: usize) {
        let n = self.state.len();
        let st = &self.state;
        if !is_cyclic(n, self.links, &|v| st[v] == IN) || !is_cyclic(n, self.links, &|v| st[v] != IN) {
            return;
        }
        let edges: Vec<usize> =
            (0..self.links.len()).filter(|&i| (st[self.links[i].0] == IN) != (st[self.links[i].1] == IN)).collect();
        debug_assert_eq!(edges.len(), cut);
        let side = st.iter().map(|&s| s == IN).collect();
        if self.strict {
            self.bound = cut;
            self.found.clear();
        }
        self.found.push(CyclicCut { edges, side });
    }
}

fn check_graph(g: &Multipole) -> Result<()> {
    if !g.is_graph() {
        return Err(Error::Precondition("cyclic connectivity needs a 0-pole".into()));
    }
    if !g.is_connected() {
        return Err(Error::Precondition("graph is not connected".into()));
    }
    Ok(())
}

fn incidence(g: &Multipole) -> Vec<Vec<(usize, usize)>> {
    let mut adj = vec![Vec::new(); g.order()];
    for (i, &(u, v)) in g.links().iter().enumerate() {
        if u != v {
            adj[u].push((v, i));
            adj[v].push((u, i));
        }
    }
    adj
}

/// A minimum cycle-separating cut, or `None` when no two disjoint cycles exist.
///
/// Enumerates connected vertex sets around vertex 0 by branch and bound; a
/// minimum cut always has two connected sides.
pub fn min_cyclic_cut(g: &Multipole) -> Result<Option<CyclicCut>> {
    check_graph(g)?;
    if g.order() == 0 {
        return Ok(None);
    }
    let adj = incidence(g);
    let mut s = Search {
        adj: &adj,
        links: g.links(),
        state: vec![FREE; g.order()],
        bound: g.links().len() + 1,
        strict: true,
        found: Vec::new(),
    };
    s.state[0] = IN;
    s.go(0);
    Ok(s.found.pop())
}

/// Cyclic edge-connectivity; `None` stands for infinity.
pub fn cyclic_connectivity(g: &Multipole) -> Result<Option<usize>> {
    Ok(min_cyclic_cut(g)?.map(|c| c.edges.len()))
}

/// All cycle-separating cuts of exactly `k` edges with both sides connected.
pub fn cyclic_cuts(g: &Multipole, k: usize) -> Result<Vec<CyclicCut>> {
    check_graph(g)?;
    if g.order() == 0 {
        return Ok(vec![]);
    }
    let adj = incidence(g);
    let mut s = Search {
        adj: &adj,
        links: g.links(),
        state: vec![FREE; g.order()],
        bound: k,
        strict: false,
        found: Vec::new(),
    };
    s.state[0] = IN;
    s.go(0);
    let mut out: Vec<CyclicCut> = s
        .found
        .into_iter()
        .filter(|c| c.edges.len() == k && connected_side(g, &c.side, false))
        .collect();
    out.sort_by(|a, b| a.edges.cmp(&b.edges));
    Ok(out)
}

fn connected_side(g: &Multipole, side: &[bool], which: bool) -> bool {
    let vs: Vec<usize> = (0..g.order()).filter(|&v| side[v] == which).collect();
    let Some(&s0) = vs.first() else { return false };
    let adj = g.adjacency();
    let mut seen = vec![false; g.order()];
    seen[s0] = true;
    let mut stack = vec![s0];
    let mut n = 1;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if side[w] == which && !seen[w] {
                seen[w] = true;
                n += 1;
                stack.push(w);
            }
        }
    }
    n == vs.len()
}

/// Whether removing the links `cut` leaves two components that contain cycles.
pub fn separates_cycles(g: &Multipole, cut: &[usize]) -> bool {
    let n = g.order();
    let mut removed = vec![false; g.links().len()];
    for &e in cut {
        if e < removed.len() {
            removed[e] = true;
        }
    }
    let mut comp = vec![usize::MAX; n];
    let adj = incidence_all(g);
    let mut nc = 0;
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = nc;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &(w, e) in &adj[v] {
                if !removed[e] && comp[w] == usize::MAX {
                    comp[w] = nc;
                    stack.push(w);
                }
            }
        }
        nc += 1;
    }
    let mut verts = vec![0usize; nc];
    let mut edges = vec![0usize; nc];
    for v in 0..n {
        verts[comp[v]] += 1;
    }
    for (i, &(u, _)) in g.links().iter().enumerate() {
        if !removed[i] {
            edges[comp[u]] += 1;
        }
    }
    (0..nc).filter(|&c| edges[c] >= verts[c]).count() >= 2
}

fn incidence_all(g: &Multipole) -> Vec<Vec<(usize, usize)>> {
    let mut adj = vec![Vec::new(); g.order()];
    for (i, &(u, v)) in g.links().iter().enumerate() {
        adj[u].push((v, i));
        if u != v {
            adj[v].push((u, i));
        }
    }
    adj
}
