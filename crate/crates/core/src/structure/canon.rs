use crate::multipole::Multipole;
use serde::Serialize;
use std::collections::BTreeMap;

/// Canonical certificate of a multipole. Two multipoles are isomorphic exactly
/// when their codes agree (with the same `respects_connectors` setting).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CanonicalForm {
    pub code: Vec<u32>,
    /// Canonical position of every vertex of the multipole.
    pub labeling: Vec<usize>,
    pub respects_connectors: bool,
}

impl CanonicalForm {
    /// Short hexadecimal digest of the code (FNV-1a), for display.
    pub fn digest(&self) -> String {
        let mut h: u64 = 0xcbf29ce484222325;
        for &x in &self.code {
            for b in x.to_le_bytes() {
                h ^= b as u64;
                h = h.wrapping_mul(0x100000001b3);
            }
        }
        format!("{h:016x}")
    }
}

/// Coloured multigraph encoding: vertices, one node per semiedge and, when
/// connectors are respected, one node per connector.
struct Coded {
    kind: Vec<u32>,
    adj: Vec<Vec<(usize, u32)>>,
    vertices: usize,
    extra: Vec<u32>,
}

fn encode(m: &Multipole, respect: bool) -> Coded {
    let n = m.order();
    let k = m.semiedge_count();
    let nc = if respect { m.connectors().len() } else { 0 };
    let total = n + k + nc;
    let mut keys: Vec<(u32, u32, u32)> = vec![(0, 0, 0); total];
    let mut edges: BTreeMap<(usize, usize), u32> = BTreeMap::new();
    let mut add = |a: usize, b: usize| {
        let key = if a <= b { (a, b) } else { (b, a) };
        *edges.entry(key).or_insert(0) += 1;
    };
    for &(u, v) in m.links() {
        add(u, v);
    }
    for &(v, s) in m.dangling() {
        add(v, n + s);
    }
    for &(s, t) in m.isolated() {
        add(n + s, n + t);
    }
    for s in 0..k {
        keys[n + s] = (1, 0, 0);
    }
    if respect {
        for (ci, c) in m.connectors().iter().enumerate() {
            keys[n + k + ci] = (2, c.arity() as u32, c.ordered as u32);
            for (pos, &s) in c.semiedges.iter().enumerate() {
                add(n + k + ci, n + s);
                if c.ordered {
                    keys[n + s] = (1, pos as u32 + 1, 0);
                }
            }
        }
    }
    let mut uniq = keys.clone();
    uniq.sort();
    uniq.dedup();
    let kind = keys.iter().map(|x| uniq.binary_search(x).unwrap() as u32).collect();
    let mut adj = vec![Vec::new(); total];
    for (&(a, b), &mlt) in &edges {
        adj[a].push((b, mlt));
        if a != b {
            adj[b].push((a, mlt));
        }
    }
    // key table and free loops are part of the certificate
    let mut extra = vec![m.free_loops() as u32, uniq.len() as u32];
    for &(a, b, c) in &uniq {
        extra.extend([a, b, c]);
    }
    Coded { kind, adj, vertices: n, extra }
}

/// Replace colours by the rank of (colour, neighbour colour multiset) until stable.
fn refine(adj: &[Vec<(usize, u32)>], col: &mut [u32]) {
    let n = col.len();
    let mut classes = count_classes(col);
    loop {
        let sigs: Vec<(u32, Vec<(u32, u32)>)> = (0..n)
            .map(|v| {
                let mut s: Vec<(u32, u32)> = adj[v].iter().map(|&(w, m)| (col[w], m)).collect();
                s.sort_unstable();
                (col[v], s)
            })
            .collect();
        let mut uniq: Vec<&(u32, Vec<(u32, u32)>)> = sigs.iter().collect();
        uniq.sort();
        uniq.dedup();
        for v in 0..n {
            col[v] = uniq.binary_search(&&sigs[v]).unwrap() as u32;
        }
        let c = uniq.len();
        if c == classes {
            return;
        }
        classes = c;
    }
}

fn count_classes(col: &[u32]) -> usize {
    let mut c = col.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

struct Canon<'a> {
    g: &'a Coded,
    best: Option<(Vec<u32>, Vec<u32>)>,
    autos: Vec<Vec<usize>>,
}

impl Canon<'_> {
    fn leaf_code(&self, col: &[u32]) -> Vec<u32> {
        let n = col.len();
        let mut inv = vec![0usize; n];
        for v in 0..n {
            inv[col[v] as usize] = v;
        }
        let mut code = Vec::with_capacity(n + 3 * n);
        code.push(n as u32);
        code.extend(&self.g.extra);
        code.extend(inv.iter().map(|&v| self.g.kind[v]));
        let mut es: Vec<(u32, u32, u32)> = Vec::new();
        for v in 0..n {
            for &(w, m) in &self.g.adj[v] {
                let (a, b) = (col[v], col[w]);
                if a <= b {
                    es.push((a, b, m));
                }
            }
        }
        es.sort_unstable();
        for (a, b, m) in es {
            code.extend([a, b, m]);
        }
        code
    }

    fn search(&mut self, mut col: Vec<u32>, prefix: &mut Vec<usize>) {
        refine(&self.g.adj, &mut col);
        let n = col.len();
        let mut size = vec![0usize; n];
        for &c in &col {
            size[c as usize] += 1;
        }
        let Some(target) = (0..n).find(|&c| size[c] > 1) else {
            let code = self.leaf_code(&col);
            match &self.best {
                Some((b, blab)) if *b == code => {
                    // same code: an automorphism
                    let mut inv = vec![0usize; n];
                    for v in 0..n {
                        inv[blab[v] as usize] = v;
                    }
                    let gamma: Vec<usize> = (0..n).map(|v| inv[col[v] as usize]).collect();
                    self.autos.push(gamma);
                }
                Some((b, _)) if *b <= code => {}
                _ => self.best = Some((code, col)),
            }
            return;
        };
        let cell: Vec<usize> = (0..n).filter(|&v| col[v] as usize == target).collect();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cell {
            if self.same_orbit(prefix, &tried, v) {
                continue;
            }
            let mut next: Vec<u32> = col.iter().map(|&c| 2 * c + u32::from(c as usize == target)).collect();
            next[v] = 2 * target as u32;
            prefix.push(v);
            self.search(next, prefix);
            prefix.pop();
            tried.push(v);
        }
    }

    /// Whether `v` is an image of an explored sibling under automorphisms
    /// found so far that fix the current prefix.
    fn same_orbit(&self, prefix: &[usize], tried: &[usize], v: usize) -> bool {
        if tried.is_empty() {
            return false;
        }
        let n = self.g.kind.len();
        let mut uf: Vec<usize> = (0..n).collect();
        fn find(uf: &mut [usize], mut x: usize) -> usize {
            while uf[x] != x {
                uf[x] = uf[uf[x]];
                x = uf[x];
            }
            x
        }
        for a in &self.autos {
            if prefix.iter().all(|&p| a[p] == p) {
                for x in 0..n {
                    let (r1, r2) = (find(&mut uf, x), find(&mut uf, a[x]));
                    uf[r1] = r2;
                }
            }
        }
        let rv = find(&mut uf, v);
        tried.iter().any(|&t| find(&mut uf, t) == rv)
    }
}

/// Canonical form respecting connectors: arities, grouping and, for ordered
/// connectors, the order of their semiedges. Connector names are ignored.
pub fn canonical_form(m: &Multipole) -> CanonicalForm {
    canonical_form_with(m, true)
}

/// With `respect_connectors = false` all semiedges are interchangeable.
pub fn canonical_form_with(m: &Multipole, respect_connectors: bool) -> CanonicalForm {
    let g = encode(m, respect_connectors);
    let mut c = Canon { g: &g, best: None, autos: Vec::new() };
    c.search(g.kind.clone(), &mut Vec::new());
    let (code, lab) = c.best.unwrap_or_else(|| (g.extra.clone(), vec![]));
    // positions among vertices only
    let mut vs: Vec<usize> = (0..g.vertices).collect();
    vs.sort_by_key(|&v| lab[v]);
    let mut labeling = vec![0usize; g.vertices];
    for (i, &v) in vs.iter().enumerate() {
        labeling[v] = i;
    }
    CanonicalForm { code, labeling, respects_connectors: respect_connectors }
}

pub fn is_isomorphic(a: &Multipole, b: &Multipole) -> bool {
    a.order() == b.order()
        && a.semiedge_count() == b.semiedge_count()
        && canonical_form(a).code == canonical_form(b).code
}
