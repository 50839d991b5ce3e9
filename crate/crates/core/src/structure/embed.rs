use crate::error::{Error, Result};
use crate::multipole::{Incidence, Multipole};
use serde::Serialize;

/// An occurrence of a pattern multipole inside a host, as an induced
/// submultipole: `vertices[p]` is the host image of pattern vertex `p`,
/// `semiedges[s]` the host edge end standing for pattern semiedge `s`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Embedding {
    pub vertices: Vec<usize>,
    /// Host link index, or `None` when the image is a host semiedge.
    pub semiedges: Vec<Option<usize>>,
    /// Host links leaving the image, sorted.
    pub cut: Vec<usize>,
}

fn mult_adj(m: &Multipole) -> Vec<Vec<(usize, u32)>> {
    let mut adj: Vec<Vec<(usize, u32)>> = vec![Vec::new(); m.order()];
    let mut bump = |a: usize, b: usize| match adj[a].iter_mut().find(|(w, _)| *w == b) {
        Some(e) => e.1 += 1,
        None => adj[a].push((b, 1)),
    };
    for &(u, v) in m.links() {
        bump(u, v);
        if u != v {
            bump(v, u);
        }
    }
    adj
}

struct Matcher<'a> {
    pa: Vec<Vec<(usize, u32)>>,
    ha: Vec<Vec<(usize, u32)>>,
    order: Vec<usize>,
    parent: Vec<usize>,
    map: Vec<usize>,
    inv: Vec<usize>,
    visit: &'a mut dyn FnMut(&[usize]) -> bool,
    stop: bool,
}

fn mult(adj: &[Vec<(usize, u32)>], a: usize, b: usize) -> u32 {
    adj[a].iter().find(|&&(w, _)| w == b).map_or(0, |&(_, m)| m)
}

impl Matcher<'_> {
    fn fits(&self, q: usize, c: usize) -> bool {
        if self.inv[c] != usize::MAX || mult(&self.pa, q, q) != mult(&self.ha, c, c) {
            return false;
        }
        for &(r, m) in &self.pa[q] {
            if r != q && self.map[r] != usize::MAX && mult(&self.ha, c, self.map[r]) != m {
                return false;
            }
        }
        for &(y, m) in &self.ha[c] {
            if y != c && self.inv[y] != usize::MAX && mult(&self.pa, q, self.inv[y]) != m {
                return false;
            }
        }
        true
    }

    fn go(&mut self, depth: usize) {
        if self.stop {
            return;
        }
        if depth == self.order.len() {
            if !(self.visit)(&self.map) {
                self.stop = true;
            }
            return;
        }
        let q = self.order[depth];
        let cands: Vec<usize> = if depth == 0 {
            (0..self.ha.len()).collect()
        } else {
            self.ha[self.map[self.parent[depth]]].iter().map(|&(w, _)| w).collect()
        };
        for c in cands {
            if self.fits(q, c) {
                self.map[q] = c;
                self.inv[c] = q;
                self.go(depth + 1);
                self.map[q] = usize::MAX;
                self.inv[c] = usize::MAX;
            }
        }
    }
}

/// Visit every induced embedding of a connected pattern (no isolated edges)
/// into `host`; the visitor returns `false` to stop.
pub fn for_each_embedding(host: &Multipole, pattern: &Multipole, visit: &mut dyn FnMut(&[usize]) -> bool) -> Result<()> {
    if !pattern.isolated().is_empty() || pattern.free_loops() > 0 {
        return Err(Error::Precondition("pattern has isolated edges".into()));
    }
    if pattern.order() == 0 || !pattern.is_connected() {
        return Err(Error::Precondition("pattern must be non-empty and connected".into()));
    }
    if pattern.order() > host.order() {
        return Ok(());
    }
    let pa = mult_adj(pattern);
    // BFS order, with the parent of each vertex
    let mut order = vec![0usize];
    let mut parent = vec![usize::MAX];
    let mut seen = vec![false; pattern.order()];
    seen[0] = true;
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        for &(w, _) in &pa[v] {
            if !seen[w] {
                seen[w] = true;
                order.push(w);
                parent.push(v);
            }
        }
        i += 1;
    }
    let mut m = Matcher {
        pa,
        ha: mult_adj(host),
        order,
        parent,
        map: vec![usize::MAX; pattern.order()],
        inv: vec![usize::MAX; host.order()],
        visit,
        stop: false,
    };
    m.go(0);
    Ok(())
}

fn describe(host: &Multipole, pattern: &Multipole, map: &[usize]) -> Embedding {
    let mut inside = vec![false; host.order()];
    for &v in map {
        inside[v] = true;
    }
    let hinc = host.incidences();
    let mut cut = Vec::new();
    let mut semiedges = vec![None; pattern.semiedge_count()];
    let mut pend: Vec<Vec<usize>> = vec![Vec::new(); pattern.order()];
    for &(p, s) in pattern.dangling() {
        pend[p].push(s);
    }
    for (p, ss) in pend.iter_mut().enumerate() {
        ss.sort_unstable();
        let h = map[p];
        let mut outs: Vec<Option<usize>> = Vec::new();
        for inc in &hinc[h] {
            match *inc {
                Incidence::Link(e) => {
                    let (a, b) = host.links()[e];
                    let other = if a == h { b } else { a };
                    if !inside[other] {
                        outs.push(Some(e));
                        cut.push(e);
                    }
                }
                Incidence::Dangling(_) => outs.push(None),
            }
        }
        for (s, o) in ss.iter().zip(outs) {
            semiedges[*s] = o;
        }
    }
    cut.sort_unstable();
    cut.dedup();
    Embedding { vertices: map.to_vec(), semiedges, cut }
}

/// Occurrences of `pattern` in `host` with pairwise distinct vertex sets
/// (equivalently, distinct cuts), sorted by vertex set.
pub fn find_submultipole(host: &Multipole, pattern: &Multipole) -> Result<Vec<Embedding>> {
    let mut found: std::collections::BTreeMap<Vec<usize>, Vec<usize>> = Default::default();
    for_each_embedding(host, pattern, &mut |map| {
        let mut key = map.to_vec();
        key.sort_unstable();
        found.entry(key).or_insert_with(|| map.to_vec());
        true
    })?;
    Ok(found.values().map(|map| describe(host, pattern, map)).collect())
}

/// Number of automorphisms of a connected multipole, ignoring connectors.
pub fn automorphism_count(g: &Multipole) -> Result<u64> {
    let mut n = 0u64;
    for_each_embedding(g, g, &mut |_| {
        n += 1;
        true
    })?;
    Ok(n)
}
