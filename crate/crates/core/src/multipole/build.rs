use super::{Connector, Multipole, SemiedgeId, VertexId};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum End {
    V(usize),
    S(usize),
}

#[derive(Clone, Debug)]
struct Group {
    name: String,
    ordered: bool,
    members: Vec<usize>,
}

/// Mutable edge soup used to assemble multipoles.
///
/// Semiedges are addressed by stable handles that survive later joins of other
/// semiedges. `finish` validates cubicity and produces the normal form.
#[derive(Clone, Debug, Default)]
pub struct Assembly {
    alive: Vec<bool>,
    edges: Vec<Option<[End; 2]>>,
    loc: Vec<Option<(usize, usize)>>,
    free_loops: usize,
    groups: Vec<Group>,
}

/// Handles of a multipole copied into an assembly.
#[derive(Clone, Debug)]
pub struct Part {
    pub vertices: Vec<usize>,
    pub semiedges: Vec<usize>,
    pub link_edges: Vec<usize>,
    connectors: Vec<(String, bool, Vec<usize>)>,
}

impl Part {
    pub fn v(&self, old: VertexId) -> usize {
        self.vertices[old]
    }

    pub fn s(&self, sid: SemiedgeId) -> usize {
        self.semiedges[sid]
    }

    pub fn conn(&self, name: &str) -> Result<Vec<usize>> {
        self.connectors
            .iter()
            .find(|c| c.0 == name)
            .map(|c| c.2.clone())
            .ok_or_else(|| Error::UnknownConnector(name.to_string()))
    }

    /// The `i`-th semiedge of a connector.
    pub fn at(&self, name: &str, i: usize) -> Result<usize> {
        let c = self.conn(name)?;
        c.get(i).copied().ok_or(Error::UnknownSemiedge(i))
    }

    /// Handles of the `i`-th connector.
    pub fn conn_at(&self, i: usize) -> Vec<usize> {
        self.connectors.get(i).map(|c| c.2.clone()).unwrap_or_default()
    }

    pub fn connector_names(&self) -> Vec<String> {
        self.connectors.iter().map(|c| c.0.clone()).collect()
    }

    fn ordered(&self, name: &str) -> bool {
        self.connectors.iter().find(|c| c.0 == name).map(|c| c.1).unwrap_or(false)
    }
}

impl Assembly {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self) -> usize {
        self.alive.push(true);
        self.alive.len() - 1
    }

    pub fn add_vertices(&mut self, n: usize) -> std::ops::Range<usize> {
        let start = self.alive.len();
        self.alive.resize(start + n, true);
        start..start + n
    }

    fn new_edge(&mut self, ends: [End; 2]) -> usize {
        let e = self.edges.len();
        self.edges.push(Some(ends));
        for (side, end) in ends.iter().enumerate() {
            if let End::S(h) = *end {
                self.loc[h] = Some((e, side));
            }
        }
        e
    }

    fn new_handle(&mut self) -> usize {
        self.loc.push(None);
        self.loc.len() - 1
    }

    pub fn link(&mut self, u: usize, v: usize) -> usize {
        self.new_edge([End::V(u), End::V(v)])
    }

    /// A dangling edge at `v`; returns the handle of its free end.
    pub fn dangle(&mut self, v: usize) -> usize {
        let h = self.new_handle();
        self.new_edge([End::V(v), End::S(h)]);
        h
    }

    pub fn isolated_edge(&mut self) -> (usize, usize) {
        let a = self.new_handle();
        let b = self.new_handle();
        self.new_edge([End::S(a), End::S(b)]);
        (a, b)
    }

    pub fn add_free_loops(&mut self, n: usize) {
        self.free_loops += n;
    }

    /// A new vertex with three dangling edges.
    pub fn star(&mut self) -> (usize, [usize; 3]) {
        let v = self.add_vertex();
        (v, [self.dangle(v), self.dangle(v), self.dangle(v)])
    }

    pub fn group(&mut self, name: &str, ordered: bool, members: Vec<usize>) {
        self.groups.push(Group { name: name.to_string(), ordered, members });
    }

    fn live(&self, h: usize) -> Result<(usize, usize)> {
        self.loc.get(h).copied().flatten().ok_or(Error::UnknownSemiedge(h))
    }

    pub fn is_live(&self, h: usize) -> bool {
        matches!(self.loc.get(h), Some(Some(_)))
    }

    /// Join two free ends into one edge.
    pub fn join(&mut self, h1: usize, h2: usize) -> Result<()> {
        if h1 == h2 {
            return Err(Error::SameSemiedge(h1));
        }
        let (e1, s1) = self.live(h1)?;
        let (e2, s2) = self.live(h2)?;
        self.loc[h1] = None;
        self.loc[h2] = None;
        if e1 == e2 {
            self.edges[e1] = None;
            self.free_loops += 1;
            return Ok(());
        }
        let o1 = self.edges[e1].unwrap()[1 - s1];
        let o2 = self.edges[e2].unwrap()[1 - s2];
        self.edges[e1] = None;
        self.edges[e2] = None;
        self.new_edge([o1, o2]);
        Ok(())
    }

    /// Join two equally long handle lists position by position.
    pub fn join_all(&mut self, a: &[usize], b: &[usize]) -> Result<()> {
        if a.len() != b.len() {
            return Err(Error::ArityMismatch(a.len(), b.len()));
        }
        for (&x, &y) in a.iter().zip(b) {
            self.join(x, y)?;
        }
        Ok(())
    }

    /// Copy a multipole in. Its connectors are not registered as groups.
    pub fn import(&mut self, m: &Multipole) -> Part {
        let r = self.add_vertices(m.order());
        let vertices: Vec<usize> = r.collect();
        let mut semiedges = vec![0; m.semiedge_count()];
        let mut link_edges = Vec::with_capacity(m.links().len());
        for &(u, v) in m.links() {
            link_edges.push(self.link(vertices[u], vertices[v]));
        }
        for &(v, s) in m.dangling() {
            semiedges[s] = self.dangle(vertices[v]);
        }
        for &(s, t) in m.isolated() {
            let (a, b) = self.isolated_edge();
            semiedges[s] = a;
            semiedges[t] = b;
        }
        self.free_loops += m.free_loops();
        let connectors = m
            .connectors()
            .iter()
            .map(|c| (c.name.clone(), c.ordered, c.semiedges.iter().map(|&s| semiedges[s]).collect()))
            .collect();
        Part { vertices, semiedges, link_edges, connectors }
    }

    /// Register a part's connectors as groups, with an optional name prefix.
    pub fn keep_connectors(&mut self, part: &Part, prefix: &str) {
        for (n, o, hs) in &part.connectors {
            self.group(&format!("{prefix}{n}"), *o, hs.clone());
        }
    }

    /// Register one connector of a part under a new name.
    pub fn keep_connector(&mut self, part: &Part, name: &str, as_name: &str) -> Result<()> {
        let hs = part.conn(name)?;
        let o = part.ordered(name);
        self.group(as_name, o, hs);
        Ok(())
    }

    /// Cut an edge in two; returns the new free ends on the side of its first
    /// and second end.
    pub fn sever(&mut self, e: usize) -> Result<(usize, usize)> {
        let [a, b] = self.edges.get(e).copied().flatten().ok_or(Error::UnknownEdge(e))?;
        self.edges[e] = None;
        let ha = self.new_handle();
        let hb = self.new_handle();
        self.new_edge([a, End::S(ha)]);
        self.new_edge([b, End::S(hb)]);
        Ok((ha, hb))
    }

    /// Subdivide an edge; returns the new vertex and the handle of its third edge.
    pub fn subdivide(&mut self, e: usize) -> Result<(usize, usize)> {
        let (x, y) = self.sever(e)?;
        let (v, [p, q, r]) = self.star();
        self.join(x, p)?;
        self.join(y, q)?;
        Ok((v, r))
    }

    /// Edge id of the live edge joining vertices `u` and `v`.
    pub fn find_link(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.iter().position(|e| {
            matches!(e, Some([End::V(a), End::V(b)]) if (*a == u && *b == v) || (*a == v && *b == u))
        })
    }

    /// Delete vertices. Every edge end at a deleted vertex becomes a free end.
    /// Edges with both ends deleted become isolated edges when `keep_inner`,
    /// otherwise they vanish. Returns, per deleted vertex, the new handles.
    pub fn detach(&mut self, vs: &[usize], keep_inner: bool) -> Result<Vec<Vec<usize>>> {
        for &v in vs {
            if !self.alive.get(v).copied().unwrap_or(false) {
                return Err(Error::UnknownVertex(v));
            }
        }
        let idx = |v: usize| vs.iter().position(|&x| x == v);
        let mut out = vec![Vec::new(); vs.len()];
        for e in 0..self.edges.len() {
            let Some(ends) = self.edges[e] else { continue };
            let hit: Vec<Option<usize>> =
                ends.iter().map(|end| if let End::V(v) = *end { idx(v) } else { None }).collect();
            if hit.iter().all(Option::is_none) {
                continue;
            }
            if hit.iter().all(Option::is_some) && !keep_inner {
                self.edges[e] = None;
                continue;
            }
            let mut new_ends = ends;
            for side in 0..2 {
                if let Some(i) = hit[side] {
                    let h = self.new_handle();
                    new_ends[side] = End::S(h);
                    out[i].push(h);
                }
            }
            self.edges[e] = None;
            self.new_edge(new_ends);
        }
        for &v in vs {
            self.alive[v] = false;
        }
        Ok(out)
    }

    /// Handles of live free ends that belong to no group.
    pub fn ungrouped(&self) -> Vec<usize> {
        let mut grouped = vec![false; self.loc.len()];
        for g in &self.groups {
            for &h in &g.members {
                grouped[h] = true;
            }
        }
        (0..self.loc.len()).filter(|&h| self.loc[h].is_some() && !grouped[h]).collect()
    }

    pub fn finish(self) -> Result<Multipole> {
        let mut vid = vec![usize::MAX; self.alive.len()];
        let mut order = 0;
        for (v, &a) in self.alive.iter().enumerate() {
            if a {
                vid[v] = order;
                order += 1;
            }
        }
        let mut sid = vec![usize::MAX; self.loc.len()];
        let mut next = 0;
        let mut connectors = Vec::new();
        for g in &self.groups {
            let mut members = Vec::new();
            for &h in &g.members {
                if h >= self.loc.len() {
                    return Err(Error::UnknownSemiedge(h));
                }
                if self.loc[h].is_none() {
                    continue;
                }
                if sid[h] != usize::MAX {
                    return Err(Error::ConnectorPartition(format!(
                        "free end {h} listed twice (connector `{}`)",
                        g.name
                    )));
                }
                sid[h] = next;
                members.push(next);
                next += 1;
            }
            if members.is_empty() {
                continue;
            }
            if connectors.iter().any(|c: &Connector| c.name == g.name) {
                return Err(Error::ConnectorPartition(format!("duplicate connector `{}`", g.name)));
            }
            connectors.push(Connector { name: g.name.clone(), ordered: g.ordered, semiedges: members });
        }
        if let Some(h) = (0..self.loc.len()).find(|&h| self.loc[h].is_some() && sid[h] == usize::MAX) {
            return Err(Error::ConnectorPartition(format!("free end {h} in no connector")));
        }
        let mut deg = vec![0usize; order];
        let mut links = Vec::new();
        let mut dangling = Vec::new();
        let mut isolated = Vec::new();
        for e in self.edges.iter().flatten() {
            let map = |end: End| -> Result<End> {
                Ok(match end {
                    End::V(v) => {
                        if vid[v] == usize::MAX {
                            return Err(Error::UnknownVertex(v));
                        }
                        End::V(vid[v])
                    }
                    End::S(h) => End::S(sid[h]),
                })
            };
            match (map(e[0])?, map(e[1])?) {
                (End::V(u), End::V(v)) => {
                    deg[u] += 1;
                    deg[v] += 1;
                    links.push((u.min(v), u.max(v)));
                }
                (End::V(v), End::S(s)) | (End::S(s), End::V(v)) => {
                    deg[v] += 1;
                    dangling.push((v, s));
                }
                (End::S(s), End::S(t)) => isolated.push((s.min(t), s.max(t))),
            }
        }
        if let Some(v) = deg.iter().position(|&d| d != 3) {
            return Err(Error::NotCubic { vertex: v, degree: deg[v] });
        }
        links.sort_unstable();
        dangling.sort_unstable_by_key(|&(_, s)| s);
        isolated.sort_unstable();
        Ok(Multipole::raw(order, links, dangling, isolated, self.free_loops, connectors))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_is_a_three_pole() {
        let mut a = Assembly::new();
        let (_, hs) = a.star();
        a.group("S", false, hs.to_vec());
        let m = a.finish().unwrap();
        assert_eq!(m.order(), 1);
        assert_eq!(m.semiedge_count(), 3);
    }

    #[test]
    fn joining_an_isolated_edge_to_itself_makes_a_free_loop() {
        let mut a = Assembly::new();
        let (x, y) = a.isolated_edge();
        a.join(x, y).unwrap();
        let m = a.finish().unwrap();
        assert_eq!(m.free_loops(), 1);
        assert_eq!(m.edge_count(), 0);
    }

    #[test]
    fn ungrouped_free_end_is_rejected() {
        let mut a = Assembly::new();
        a.isolated_edge();
        assert!(matches!(a.finish(), Err(Error::ConnectorPartition(_))));
    }

    #[test]
    fn wrong_degree_is_rejected() {
        let mut a = Assembly::new();
        let v = a.add_vertex();
        let w = a.add_vertex();
        a.link(v, w);
        assert!(matches!(a.finish(), Err(Error::NotCubic { .. })));
    }

    #[test]
    fn handles_survive_unrelated_joins() {
        let mut a = Assembly::new();
        let (x, y) = a.isolated_edge();
        let (p, q) = a.isolated_edge();
        a.join(y, p).unwrap();
        // x and q are now the two ends of one isolated edge
        a.group("A", false, vec![x, q]);
        let m = a.finish().unwrap();
        assert_eq!(m.isolated(), &[(0, 1)]);
    }
}
