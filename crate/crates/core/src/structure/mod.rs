//! Girth, cyclic connectivity, 5-cycle clusters, canonical forms and embeddings.

mod canon;
mod cc;
mod embed;

pub use canon::{canonical_form, canonical_form_with, is_isomorphic, CanonicalForm};
pub use cc::{cyclic_connectivity, cyclic_cuts, min_cyclic_cut, separates_cycles, CyclicCut};
pub use embed::{automorphism_count, find_submultipole, for_each_embedding, Embedding};

use crate::constructions as cons;
use crate::error::Result;
use crate::multipole::{cut_along, remove_vertices_with, Multipole, RemovalPolicy};
use crate::tait::{colouring_set, SuperpentagonVerdict};
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;

/// Length of a shortest cycle; `None` for forests.
pub fn girth(g: &Multipole) -> Option<usize> {
    let links = g.links();
    if links.iter().any(|&(u, v)| u == v) {
        return Some(1);
    }
    let mut sorted = links.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Some(2);
    }
    let adj = g.adjacency();
    let n = g.order();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut par = vec![usize::MAX; n];
    for s in 0..n {
        dist.fill(usize::MAX);
        dist[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(v) = q.pop_front() {
            if best.is_some_and(|b| 2 * dist[v] + 1 >= b) {
                break;
            }
            for &w in &adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    par[w] = v;
                    q.push_back(w);
                } else if par[v] != w {
                    let len = dist[v] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// All 5-cycles, each listed once starting from its smallest vertex.
pub fn five_cycles(g: &Multipole) -> Vec<[usize; 5]> {
    let mut adj = g.adjacency();
    for a in adj.iter_mut() {
        a.sort_unstable();
        a.dedup();
    }
    let mut out = Vec::new();
    for s in 0..g.order() {
        for &a in &adj[s] {
            if a <= s {
                continue;
            }
            for &b in &adj[a] {
                if b <= s || b == a {
                    continue;
                }
                for &c in &adj[b] {
                    if c <= s || c == a || c == b {
                        continue;
                    }
                    for &d in &adj[c] {
                        if d <= a || d == b || d == c || !adj[d].contains(&s) {
                            continue;
                        }
                        out.push([s, a, b, c, d]);
                    }
                }
            }
        }
    }
    out
}

/// The 5-cycle clusters on at most ten vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CatalogCluster {
    Pentagon,
    Dyad,
    Triad,
    Quasitriad,
    DoublePentagon,
    TriplePentagon,
    Tricell,
}

impl CatalogCluster {
    pub const ALL: [CatalogCluster; 7] = [
        CatalogCluster::Pentagon,
        CatalogCluster::Dyad,
        CatalogCluster::Triad,
        CatalogCluster::Quasitriad,
        CatalogCluster::DoublePentagon,
        CatalogCluster::TriplePentagon,
        CatalogCluster::Tricell,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CatalogCluster::Pentagon => "pentagon",
            CatalogCluster::Dyad => "dyad",
            CatalogCluster::Triad => "triad",
            CatalogCluster::Quasitriad => "quasitriad",
            CatalogCluster::DoublePentagon => "double_pentagon",
            CatalogCluster::TriplePentagon => "triple_pentagon",
            CatalogCluster::Tricell => "tricell",
        }
    }

    /// Reference multipole with its usual connectors.
    pub fn reference(self) -> Multipole {
        match self {
            CatalogCluster::Pentagon => cons::pentagon(),
            CatalogCluster::Dyad => cons::dyad(),
            CatalogCluster::Triad => cons::triad(),
            CatalogCluster::Quasitriad => cons::quasitriad(),
            CatalogCluster::DoublePentagon => cons::double_pentagon(),
            CatalogCluster::TriplePentagon => cons::triple_pentagon(),
            CatalogCluster::Tricell => cons::tricell(),
        }
    }

    /// Cheap invariants used before the isomorphism test.
    pub fn invariants(self) -> ClusterInvariants {
        ClusterInvariants::of(&self.reference())
    }
}

/// Order, link count, semiedge count and the number of pairs of dangling edges
/// at distance 1 (ends joined by a link).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ClusterInvariants {
    pub order: usize,
    pub links: usize,
    pub semiedges: usize,
    pub adjacent_pairs: usize,
}

impl ClusterInvariants {
    pub fn of(m: &Multipole) -> Self {
        let d = m.dangling();
        let mut adjacent_pairs = 0;
        for i in 0..d.len() {
            for j in i + 1..d.len() {
                if d[i].0 != d[j].0 && m.are_adjacent(d[i].0, d[j].0) {
                    adjacent_pairs += 1;
                }
            }
        }
        ClusterInvariants { order: m.order(), links: m.links().len(), semiedges: m.semiedge_count(), adjacent_pairs }
    }
}

/// Catalog entry isomorphic to `m` as a multipole with interchangeable semiedges.
pub fn match_catalog(m: &Multipole) -> Option<CatalogCluster> {
    let inv = ClusterInvariants::of(m);
    let cands: Vec<CatalogCluster> = CatalogCluster::ALL.into_iter().filter(|c| c.invariants() == inv).collect();
    if cands.is_empty() {
        return None;
    }
    let code = canonical_form_with(m, false).code;
    cands.into_iter().find(|c| canonical_form_with(&c.reference(), false).code == code)
}

#[derive(Clone, Debug, Serialize)]
pub struct Cluster {
    pub vertices: Vec<usize>,
    pub catalog: Option<CatalogCluster>,
    pub five_cycles: usize,
    /// Covers the whole graph, leaving no boundary.
    pub spanning: bool,
    #[serde(skip)]
    pub multipole: Multipole,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClusterReport {
    pub order: usize,
    pub girth: Option<usize>,
    /// `null` stands for infinity (no two disjoint cycles) or a disconnected input.
    pub cyclic_connectivity: Option<usize>,
    pub clusters: Vec<Cluster>,
    pub uncovered_vertices: usize,
}

impl ClusterReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serialisable")
    }

    pub fn census(&self) -> Vec<(Option<CatalogCluster>, usize)> {
        let mut out: Vec<(Option<CatalogCluster>, usize)> = Vec::new();
        for c in &self.clusters {
            match out.iter_mut().find(|(k, _)| *k == c.catalog) {
                Some(e) => e.1 += 1,
                None => out.push((c.catalog, 1)),
            }
        }
        out
    }
}

/// Connected components of the union of all 5-cycles, each matched against
/// the catalog.
pub fn five_cycle_clusters(g: &Multipole) -> ClusterReport {
    let n = g.order();
    let cycles = five_cycles(g);
    let mut uf: Vec<usize> = (0..n).collect();
    fn find(uf: &mut [usize], mut x: usize) -> usize {
        while uf[x] != x {
            uf[x] = uf[uf[x]];
            x = uf[x];
        }
        x
    }
    let mut covered = vec![false; n];
    for c in &cycles {
        for &v in c {
            covered[v] = true;
            let (a, b) = (find(&mut uf, v), find(&mut uf, c[0]));
            uf[a] = b;
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut gid = vec![usize::MAX; n];
    for v in 0..n {
        if covered[v] {
            let r = find(&mut uf, v);
            if gid[r] == usize::MAX {
                gid[r] = groups.len();
                groups.push(Vec::new());
            }
            groups[gid[r]].push(v);
        }
    }
    let mut count = vec![0usize; groups.len()];
    for c in &cycles {
        count[gid[find(&mut uf, c[0])]] += 1;
    }
    let clusters = groups
        .into_iter()
        .zip(count)
        .map(|(vs, k)| {
            let mut inside = vec![false; n];
            for &v in &vs {
                inside[v] = true;
            }
            let rest: Vec<usize> = (0..n).filter(|&v| !inside[v]).collect();
            let m = remove_vertices_with(g, &rest, RemovalPolicy::Drop)
                .expect("vertex ids are valid")
                .single_connector("S", false);
            let spanning = rest.is_empty() && g.semiedge_count() == 0;
            let catalog = if spanning { None } else { match_catalog(&m) };
            Cluster { vertices: vs, catalog, five_cycles: k, spanning, multipole: m }
        })
        .collect();
    let uncovered_vertices = covered.iter().filter(|&&c| !c).count();
    let cyclic = if g.is_graph() && g.is_connected() { cyclic_connectivity(g).ok().flatten() } else { None };
    ClusterReport { order: n, girth: girth(g), cyclic_connectivity: cyclic, clusters, uncovered_vertices }
}

/// The 12 cyclic orders of five positions up to rotation and reflection.
pub fn cyclic_orders5() -> Vec<[usize; 5]> {
    let mut out = Vec::new();
    for a in 1..5 {
        for b in 1..5 {
            for c in 1..5 {
                if a == b || b == c || a == c {
                    continue;
                }
                let d = 10 - a - b - c;
                if a < d {
                    out.push([0, a, b, c, d]);
                }
            }
        }
    }
    out
}

/// A side of a cycle-separating 5-cut that is a perfect superpentagon.
#[derive(Clone, Debug, Serialize)]
pub struct SuperpentagonSide {
    pub cut: Vec<usize>,
    pub vertices: Vec<usize>,
    /// Cut edges in a cyclic order realising `Col(side) = Col(C5)`.
    pub cyclic_order: Vec<usize>,
}

/// Sides of cycle-separating 5-cuts, larger than a pentagon, that are perfect
/// superpentagons. Replacing such a side by a pentagon gives a smaller snark.
pub fn superpentagon_sides(g: &Multipole) -> Result<Vec<SuperpentagonSide>> {
    let mut out = Vec::new();
    for cut in cyclic_cuts(g, 5)? {
        let (a, b) = cut_along(g, &cut.edges)?;
        for (side, m) in [(true, a), (false, b)] {
            if m.order() <= 5 {
                continue;
            }
            let col = colouring_set(&m)?;
            for ord in cyclic_orders5() {
                if crate::tait::superpentagon_verdict(&col, &ord)? == SuperpentagonVerdict::Perfect {
                    let vertices = (0..g.order()).filter(|&v| cut.side[v] == side).collect();
                    let cyclic_order = ord.iter().map(|&i| cut.edges[i]).collect();
                    out.push(SuperpentagonSide { cut: cut.edges.clone(), vertices, cyclic_order });
                    break;
                }
            }
        }
    }
    Ok(out)
}

/// A split of the vertices into two halves, each inducing a cycle, with every
/// vertex having exactly one neighbour across. Such graphs are permutation
/// graphs.
pub fn permutation_partition(g: &Multipole) -> Option<Vec<bool>> {
    let n = g.order();
    if !g.is_graph() || !n.is_multiple_of(2) || n == 0 {
        return None;
    }
    let adj = g.adjacency();
    let mut side: Vec<Option<bool>> = vec![None; n];
    side[0] = Some(false);
    fn ok(adj: &[Vec<usize>], side: &[Option<bool>], v: usize) -> bool {
        let Some(s) = side[v] else { return true };
        let (mut same, mut other, mut open) = (0, 0, 0);
        for &w in &adj[v] {
            match side[w] {
                Some(t) if t == s => same += 1,
                Some(_) => other += 1,
                None => open += 1,
            }
        }
        same <= 2 && other <= 1 && same + open >= 2 && other + open >= 1
    }
    fn go(adj: &[Vec<usize>], side: &mut Vec<Option<bool>>, i: usize) -> bool {
        let n = side.len();
        if i == n {
            let half = side.iter().filter(|s| **s == Some(true)).count();
            return half * 2 == n && (0..2).all(|b| induced_cycle(adj, side, b == 1));
        }
        if side[i].is_some() {
            return go(adj, side, i + 1);
        }
        for s in [false, true] {
            side[i] = Some(s);
            if std::iter::once(i).chain(adj[i].iter().copied()).all(|v| ok(adj, side, v)) && go(adj, side, i + 1) {
                return true;
            }
        }
        side[i] = None;
        false
    }
    fn induced_cycle(adj: &[Vec<usize>], side: &[Option<bool>], s: bool) -> bool {
        let vs: Vec<usize> = (0..side.len()).filter(|&v| side[v] == Some(s)).collect();
        let mut seen = vec![false; side.len()];
        let mut stack = vec![vs[0]];
        seen[vs[0]] = true;
        let mut count = 0;
        while let Some(v) = stack.pop() {
            count += 1;
            for &w in &adj[v] {
                if side[w] == Some(s) && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        count == vs.len()
    }
    go(&adj, &mut side, 0).then(|| side.into_iter().map(|s| s == Some(true)).collect())
}
