use crate::error::{Error, Result};
use crate::multipole::{Assembly, Multipole, Part};
use crate::tait::{colouring_set, count_colourings, ColouringSet, Network};
use serde::Serialize;

/// A component's colouring set checked against the class the argument assumes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Premise {
    pub component: String,
    pub class: String,
    pub holds: bool,
}

/// How a placed component enters the abstract network.
pub enum Class {
    /// Its own colouring set.
    Exact,
    /// A named superset, e.g. every negator-shaped tuple.
    Named(String, ColouringSet),
}

/// Wiring recorded twice: as an assembly producing the real multipole, and as
/// a constraint network in which every component is replaced by its class.
///
/// A 0-pole whose network is unsatisfiable is uncolourable as long as every
/// premise holds, independently of the search on the real graph.
#[derive(Default)]
pub struct Blueprint {
    asm: Assembly,
    var: Vec<usize>,
    uf: Vec<usize>,
    rels: Vec<(String, Vec<usize>, ColouringSet)>,
    premises: Vec<Premise>,
    groups: Vec<Vec<usize>>,
}

pub struct Built {
    pub multipole: Multipole,
    pub network: Network,
    /// Network variable of each semiedge of `multipole`.
    pub boundary: Vec<usize>,
    pub premises: Vec<Premise>,
}

fn vertex_set() -> ColouringSet {
    ColouringSet::from_predicate(3, vec![3], |t| t[0] != t[1] && t[1] != t[2] && t[0] != t[2]).unwrap()
}

impl Blueprint {
    pub fn new() -> Self {
        Self::default()
    }

    fn new_var(&mut self) -> usize {
        self.uf.push(self.uf.len());
        self.uf.len() - 1
    }

    fn bind(&mut self, h: usize, v: usize) {
        if self.var.len() <= h {
            self.var.resize(h + 1, usize::MAX);
        }
        self.var[h] = v;
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.uf[x] != x {
            self.uf[x] = self.uf[self.uf[x]];
            x = self.uf[x];
        }
        x
    }

    pub fn place(&mut self, label: &str, m: &Multipole, class: Class) -> Result<Part> {
        let col = colouring_set(m)?;
        let (cname, set) = match class {
            Class::Exact => ("exact".to_string(), col.clone()),
            Class::Named(n, s) => (n, s),
        };
        if set.k() != m.semiedge_count() {
            return Err(Error::ArityMismatch(set.k(), m.semiedge_count()));
        }
        let holds = col.is_subset_of(&set);
        self.premises.push(Premise { component: label.to_string(), class: cname, holds });
        let p = self.asm.import(m);
        let mut vars = vec![usize::MAX; m.semiedge_count()];
        for &(_, s) in m.dangling() {
            vars[s] = self.new_var();
        }
        for &(s, t) in m.isolated() {
            vars[s] = self.new_var();
            vars[t] = vars[s];
        }
        for (s, &v) in vars.iter().enumerate() {
            self.bind(p.s(s), v);
        }
        self.rels.push((label.to_string(), vars, set));
        Ok(p)
    }

    /// A new vertex with three free ends.
    pub fn star(&mut self) -> [usize; 3] {
        let (_, h) = self.asm.star();
        let vs = [self.new_var(), self.new_var(), self.new_var()];
        for i in 0..3 {
            self.bind(h[i], vs[i]);
        }
        self.rels.push(("vertex".into(), vs.to_vec(), vertex_set()));
        h
    }

    pub fn isolated(&mut self) -> (usize, usize) {
        let (x, y) = self.asm.isolated_edge();
        let v = self.new_var();
        self.bind(x, v);
        self.bind(y, v);
        (x, y)
    }

    pub fn join(&mut self, h1: usize, h2: usize) -> Result<()> {
        self.asm.join(h1, h2)?;
        let (a, b) = (self.find(self.var[h1]), self.find(self.var[h2]));
        self.uf[a] = b;
        Ok(())
    }

    pub fn join_all(&mut self, a: &[usize], b: &[usize]) -> Result<()> {
        if a.len() != b.len() {
            return Err(Error::ArityMismatch(a.len(), b.len()));
        }
        for (&x, &y) in a.iter().zip(b) {
            self.join(x, y)?;
        }
        Ok(())
    }

    /// Join two free ends through a new vertex; returns its third free end.
    pub fn through_vertex(&mut self, h1: usize, h2: usize) -> Result<usize> {
        let [p, q, r] = self.star();
        self.join(h1, p)?;
        self.join(h2, q)?;
        Ok(r)
    }

    pub fn group(&mut self, name: &str, ordered: bool, members: Vec<usize>) {
        self.groups.push(members.clone());
        self.asm.group(name, ordered, members);
    }

    pub fn finish(mut self) -> Result<Built> {
        let mut live = Vec::new();
        for g in std::mem::take(&mut self.groups) {
            live.extend(g.into_iter().filter(|&h| self.asm.is_live(h)));
        }
        let mut root_id = vec![usize::MAX; self.uf.len()];
        let mut network = Network::new();
        let mut map = |bp: &mut Blueprint, v: usize, net: &mut Network| {
            let r = bp.find(v);
            if root_id[r] == usize::MAX {
                root_id[r] = net.var();
            }
            root_id[r]
        };
        let rels = std::mem::take(&mut self.rels);
        for (name, vars, set) in rels {
            let vs = vars.iter().map(|&v| map(&mut self, v, &mut network)).collect();
            network.constrain(&name, vs, set)?;
        }
        let bvars: Vec<usize> = live.iter().map(|&h| self.var[h]).collect();
        let boundary = bvars.into_iter().map(|v| map(&mut self, v, &mut network)).collect();
        let multipole = self.asm.finish()?;
        Ok(Built { multipole, network, boundary, premises: self.premises })
    }
}

/// Outcome of checking a snark family twice: by colouring search on the
/// assembled graph and by the class-level argument.
#[derive(Clone, Debug, Serialize)]
pub struct ProofTrace {
    pub family: String,
    pub order: usize,
    pub oracle_colourings: u64,
    pub premises: Vec<Premise>,
    pub abstract_satisfiable: bool,
    pub agrees: bool,
}

impl ProofTrace {
    pub fn from_built(family: &str, b: &Built) -> Result<Self> {
        if !b.multipole.is_graph() {
            return Err(Error::Precondition(format!("{family} does not build a 0-pole")));
        }
        let oracle_colourings = count_colourings(&b.multipole)?;
        let abstract_satisfiable = b.network.satisfiable();
        let agrees = oracle_colourings == 0 && !abstract_satisfiable && b.premises.iter().all(|p| p.holds);
        Ok(ProofTrace {
            family: family.to_string(),
            order: b.multipole.order(),
            oracle_colourings,
            premises: b.premises.clone(),
            abstract_satisfiable,
            agrees,
        })
    }
}
