//! Cubic multipoles: vertices, links, dangling and isolated edges, connectors.

mod build;
pub mod format;
mod surgery;

pub use build::{Assembly, Part};
pub use surgery::{cut_along, junction_connectors, junction_semiedges, remove_vertices,
    remove_vertices_with, sever_edges, RemovalPolicy};

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

pub type VertexId = usize;
pub type SemiedgeId = usize;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Connector {
    pub name: String,
    pub ordered: bool,
    pub semiedges: Vec<SemiedgeId>,
}

impl Connector {
    pub fn arity(&self) -> usize {
        self.semiedges.len()
    }
}

/// Lightweight description of a connector, detached from its multipole.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ConnectorRef {
    pub name: String,
    pub arity: usize,
    pub ordered: bool,
}

/// A cubic multipole in normal form.
///
/// Semiedge ids are dense and follow connector order, so the `i`-th entry of a
/// colour tuple is the colour of semiedge `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Multipole {
    order: usize,
    links: Vec<(VertexId, VertexId)>,
    dangling: Vec<(VertexId, SemiedgeId)>,
    isolated: Vec<(SemiedgeId, SemiedgeId)>,
    free_loops: usize,
    connectors: Vec<Connector>,
}

/// One end of an edge as seen from a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Incidence {
    /// Index into `links()`.
    Link(usize),
    /// Semiedge id of a dangling edge.
    Dangling(SemiedgeId),
}

impl Multipole {
    /// A cubic graph (0-pole). Loops and parallel links are allowed.
    pub fn graph(order: usize, links: &[(VertexId, VertexId)]) -> Result<Self> {
        Self::from_parts(order, links.to_vec(), vec![], vec![], 0, vec![])
    }

    pub fn from_parts(
        order: usize,
        links: Vec<(VertexId, VertexId)>,
        dangling: Vec<(VertexId, SemiedgeId)>,
        isolated: Vec<(SemiedgeId, SemiedgeId)>,
        free_loops: usize,
        connectors: Vec<Connector>,
    ) -> Result<Self> {
        let mut asm = Assembly::new();
        asm.add_vertices(order);
        for &(u, v) in &links {
            if u >= order {
                return Err(Error::UnknownVertex(u));
            }
            if v >= order {
                return Err(Error::UnknownVertex(v));
            }
            asm.link(u, v);
        }
        let nsemi = dangling.len() + 2 * isolated.len();
        let mut handle = vec![usize::MAX; nsemi];
        let mut put = |sid: usize, h: usize| -> Result<()> {
            match handle.get_mut(sid) {
                Some(slot) if *slot == usize::MAX => {
                    *slot = h;
                    Ok(())
                }
                Some(_) => Err(Error::ConnectorPartition(format!("semiedge {sid} used twice"))),
                None => Err(Error::UnknownSemiedge(sid)),
            }
        };
        for &(v, sid) in &dangling {
            if v >= order {
                return Err(Error::UnknownVertex(v));
            }
            let h = asm.dangle(v);
            put(sid, h)?;
        }
        for &(s, t) in &isolated {
            let (hs, ht) = asm.isolated_edge();
            put(s, hs)?;
            put(t, ht)?;
        }
        asm.add_free_loops(free_loops);
        let mut seen = vec![false; nsemi];
        for c in &connectors {
            let mut hs = Vec::with_capacity(c.semiedges.len());
            for &sid in &c.semiedges {
                if sid >= nsemi {
                    return Err(Error::UnknownSemiedge(sid));
                }
                if std::mem::replace(&mut seen[sid], true) {
                    return Err(Error::ConnectorPartition(format!("semiedge {sid} in two connectors")));
                }
                hs.push(handle[sid]);
            }
            asm.group(&c.name, c.ordered, hs);
        }
        if let Some(sid) = seen.iter().position(|s| !s) {
            return Err(Error::ConnectorPartition(format!("semiedge {sid} in no connector")));
        }
        asm.finish()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn links(&self) -> &[(VertexId, VertexId)] {
        &self.links
    }

    pub fn dangling(&self) -> &[(VertexId, SemiedgeId)] {
        &self.dangling
    }

    pub fn isolated(&self) -> &[(SemiedgeId, SemiedgeId)] {
        &self.isolated
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn connectors(&self) -> &[Connector] {
        &self.connectors
    }

    pub fn semiedge_count(&self) -> usize {
        self.dangling.len() + 2 * self.isolated.len()
    }

    /// Number of edges, counting links, dangling and isolated edges.
    pub fn edge_count(&self) -> usize {
        self.links.len() + self.dangling.len() + self.isolated.len()
    }

    pub fn is_graph(&self) -> bool {
        self.semiedge_count() == 0
    }

    pub fn connector(&self, name: &str) -> Result<&Connector> {
        self.connectors
            .iter()
            .find(|c| c.name == name)
            .ok_or_else(|| Error::UnknownConnector(name.to_string()))
    }

    pub fn connector_ref(&self, name: &str) -> Result<ConnectorRef> {
        let c = self.connector(name)?;
        Ok(ConnectorRef { name: c.name.clone(), arity: c.arity(), ordered: c.ordered })
    }

    pub fn connector_names(&self) -> Vec<&str> {
        self.connectors.iter().map(|c| c.name.as_str()).collect()
    }

    /// Arities of the connectors in order.
    pub fn shape(&self) -> Vec<usize> {
        self.connectors.iter().map(Connector::arity).collect()
    }

    /// Vertex carrying a given semiedge, if it is dangling.
    pub fn semiedge_vertex(&self, sid: SemiedgeId) -> Option<VertexId> {
        self.dangling.iter().find(|&&(_, s)| s == sid).map(|&(v, _)| v)
    }

    /// The other end of an isolated edge.
    pub fn isolated_partner(&self, sid: SemiedgeId) -> Option<SemiedgeId> {
        self.isolated.iter().find_map(|&(s, t)| {
            if s == sid {
                Some(t)
            } else if t == sid {
                Some(s)
            } else {
                None
            }
        })
    }

    /// Edge ends at each vertex. Loops appear twice.
    pub fn incidences(&self) -> Vec<Vec<Incidence>> {
        let mut inc = vec![Vec::with_capacity(3); self.order];
        for (i, &(u, v)) in self.links.iter().enumerate() {
            inc[u].push(Incidence::Link(i));
            inc[v].push(Incidence::Link(i));
        }
        for &(v, s) in &self.dangling {
            inc[v].push(Incidence::Dangling(s));
        }
        inc
    }

    /// Neighbours through links (with multiplicity, loops twice).
    pub fn adjacency(&self) -> Vec<Vec<VertexId>> {
        let mut adj = vec![Vec::with_capacity(3); self.order];
        for &(u, v) in &self.links {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    pub fn are_adjacent(&self, u: VertexId, v: VertexId) -> bool {
        let (a, b) = if u <= v { (u, v) } else { (v, u) };
        self.links.binary_search(&(a, b)).is_ok()
    }

    /// Index of a link between `u` and `v`.
    pub fn link_index(&self, u: VertexId, v: VertexId) -> Option<usize> {
        let (a, b) = if u <= v { (u, v) } else { (v, u) };
        self.links.binary_search(&(a, b)).ok()
    }

    pub fn has_loop(&self) -> bool {
        self.links.iter().any(|&(u, v)| u == v)
    }

    pub fn is_connected(&self) -> bool {
        if self.order == 0 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.order];
        let mut stack = vec![0];
        seen[0] = true;
        let mut n = 1;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    n += 1;
                    stack.push(w);
                }
            }
        }
        n == self.order
    }

    /// Regroup semiedges into new connectors. Semiedges are renumbered to follow
    /// the new connector order.
    pub fn regroup(&self, groups: &[(&str, bool, Vec<SemiedgeId>)]) -> Result<Self> {
        let conns = groups
            .iter()
            .map(|(n, o, s)| Connector { name: n.to_string(), ordered: *o, semiedges: s.clone() })
            .collect();
        Self::from_parts(
            self.order,
            self.links.clone(),
            self.dangling.clone(),
            self.isolated.clone(),
            self.free_loops,
            conns,
        )
    }

    /// Regroup by connector names: each new connector is the concatenation of
    /// the named old connectors.
    pub fn merge_connectors(&self, groups: &[(&str, bool, &[&str])]) -> Result<Self> {
        let mut spec = Vec::new();
        for &(name, ordered, parts) in groups {
            let mut s = Vec::new();
            for p in parts {
                s.extend_from_slice(&self.connector(p)?.semiedges);
            }
            spec.push((name, ordered, s));
        }
        self.regroup(&spec)
    }

    /// Rename a connector and set its ordered flag.
    pub fn rename_connector(&self, old: &str, new: &str, ordered: bool) -> Result<Self> {
        let mut m = self.clone();
        let c = m
            .connectors
            .iter_mut()
            .find(|c| c.name == old)
            .ok_or_else(|| Error::UnknownConnector(old.to_string()))?;
        c.name = new.to_string();
        c.ordered = ordered;
        Ok(m)
    }

    /// Same multipole with every connector marked ordered or unordered.
    pub fn with_all_ordered(&self, ordered: bool) -> Self {
        let mut m = self.clone();
        for c in &mut m.connectors {
            c.ordered = ordered;
        }
        m
    }

    /// All semiedges gathered into a single connector, preserving ids.
    pub fn single_connector(&self, name: &str, ordered: bool) -> Self {
        let mut m = self.clone();
        let n = self.semiedge_count();
        m.connectors = if n == 0 {
            vec![]
        } else {
            vec![Connector { name: name.to_string(), ordered, semiedges: (0..n).collect() }]
        };
        m
    }

    /// Relabel vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[VertexId]) -> Result<Self> {
        if perm.len() != self.order || !is_permutation(perm) {
            return Err(Error::InvalidPermutation(perm.to_vec()));
        }
        Self::from_parts(
            self.order,
            self.links.iter().map(|&(u, v)| (perm[u], perm[v])).collect(),
            self.dangling.iter().map(|&(v, s)| (perm[v], s)).collect(),
            self.isolated.clone(),
            self.free_loops,
            self.connectors.clone(),
        )
    }

    pub(crate) fn check_no_free_loops(&self) -> Result<()> {
        if self.free_loops > 0 {
            Err(Error::FreeLoop)
        } else {
            Ok(())
        }
    }

    pub(crate) fn raw(
        order: usize,
        links: Vec<(VertexId, VertexId)>,
        dangling: Vec<(VertexId, SemiedgeId)>,
        isolated: Vec<(SemiedgeId, SemiedgeId)>,
        free_loops: usize,
        connectors: Vec<Connector>,
    ) -> Self {
        Multipole { order, links, dangling, isolated, free_loops, connectors }
    }
}

pub(crate) fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    for &x in p {
        if x >= p.len() || std::mem::replace(&mut seen[x], true) {
            return false;
        }
    }
    true
}
