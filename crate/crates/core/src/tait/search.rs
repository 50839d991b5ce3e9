use super::sets::{encode, ColouringSet};
use super::{parity_check, Colour};
use crate::error::{Error, Result};
use crate::multipole::{Multipole, SemiedgeId};
use std::ops::ControlFlow;

const NONE: u32 = u32::MAX;

/// Edge incidence structure of a multipole, compiled for the search.
///
/// Edges are numbered links first, then dangling edges, then isolated edges.
pub(crate) struct Net {
    at: Vec<[u32; 3]>,
    ends: Vec<[u32; 2]>,
    semi: Vec<u32>,
    nlinks: usize,
    has_loop: bool,
}

impl Net {
    pub(crate) fn new(m: &Multipole) -> Result<Net> {
        m.check_no_free_loops()?;
        let nlinks = m.links().len();
        let ne = m.edge_count();
        let mut ends = Vec::with_capacity(ne);
        let mut at = vec![[NONE; 3]; m.order()];
        let mut fill = vec![0usize; m.order()];
        let mut put = |v: usize, e: usize, at: &mut Vec<[u32; 3]>| {
            at[v][fill[v]] = e as u32;
            fill[v] += 1;
        };
        for (e, &(u, v)) in m.links().iter().enumerate() {
            ends.push([u as u32, v as u32]);
            put(u, e, &mut at);
            put(v, e, &mut at);
        }
        let mut semi = vec![NONE; m.semiedge_count()];
        for &(v, s) in m.dangling() {
            let e = ends.len();
            ends.push([v as u32, NONE]);
            put(v, e, &mut at);
            semi[s] = e as u32;
        }
        for &(s, t) in m.isolated() {
            let e = ends.len();
            ends.push([NONE, NONE]);
            semi[s] = e as u32;
            semi[t] = e as u32;
        }
        Ok(Net { at, ends, semi, nlinks, has_loop: m.has_loop() })
    }

    fn ne(&self) -> usize {
        self.ends.len()
    }

    /// Greedy static order: the given prefix first, then repeatedly the edge
    /// touching the most already-ordered edges.
    fn order(&self, prefix: &[u32]) -> Vec<u32> {
        let ne = self.ne();
        let mut placed = vec![false; ne];
        let mut order = Vec::with_capacity(ne);
        let mut score = vec![0u32; ne];
        let place = |e: u32, placed: &mut Vec<bool>, order: &mut Vec<u32>, score: &mut Vec<u32>| {
            if placed[e as usize] {
                return;
            }
            placed[e as usize] = true;
            order.push(e);
            for &v in &self.ends[e as usize] {
                if v != NONE {
                    for &f in &self.at[v as usize] {
                        score[f as usize] += 1;
                    }
                }
            }
        };
        for &e in prefix {
            place(e, &mut placed, &mut order, &mut score);
        }
        while order.len() < ne {
            let mut best = NONE;
            for e in 0..ne {
                if !placed[e] && (best == NONE || score[e] > score[best as usize]) {
                    best = e as u32;
                }
            }
            place(best, &mut placed, &mut order, &mut score);
        }
        order
    }
}

pub(crate) struct Solver<'a> {
    net: &'a Net,
    col: Vec<u8>,
    trail: Vec<u32>,
    queue: Vec<(u32, u8)>,
    order: Vec<u32>,
}

impl<'a> Solver<'a> {
    pub(crate) fn new(net: &'a Net, prefix: &[u32]) -> Self {
        Solver { net, col: vec![0; net.ne()], trail: Vec::new(), queue: Vec::new(), order: net.order(prefix) }
    }

    fn assign(&mut self, e: u32, c: u8) -> bool {
        self.queue.clear();
        self.queue.push((e, c));
        while let Some((e, c)) = self.queue.pop() {
            let cur = self.col[e as usize];
            if cur != 0 {
                if cur != c {
                    return false;
                }
                continue;
            }
            self.col[e as usize] = c;
            self.trail.push(e);
            for &v in &self.net.ends[e as usize] {
                if v == NONE {
                    continue;
                }
                let at = self.net.at[v as usize];
                let mut others = [NONE; 2];
                let mut k = 0;
                let mut skipped = false;
                for &f in &at {
                    if f == e && !skipped {
                        skipped = true;
                    } else {
                        others[k] = f;
                        k += 1;
                    }
                }
                let c1 = self.col[others[0] as usize];
                let c2 = self.col[others[1] as usize];
                if c1 == c || c2 == c {
                    return false;
                }
                if c1 != 0 && c2 == 0 {
                    self.queue.push((others[1], c ^ c1));
                } else if c2 != 0 && c1 == 0 {
                    self.queue.push((others[0], c ^ c2));
                }
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let e = self.trail.pop().unwrap();
            self.col[e as usize] = 0;
        }
    }

    /// Fix colours before the search; false on immediate conflict.
    pub(crate) fn fix(&mut self, e: u32, c: u8) -> bool {
        self.assign(e, c)
    }

    /// Depth-first search from position `i`. `leaf` is called with every
    /// complete colouring; `cut`, when set, stops the enumeration at that
    /// position and hands the partial state to `leaf` instead.
    fn dfs<F>(&mut self, mut i: usize, cut: usize, leaf: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&mut Self) -> ControlFlow<()>,
    {
        while i < self.order.len() && i < cut && self.col[self.order[i] as usize] != 0 {
            i += 1;
        }
        if i == self.order.len() || i == cut {
            return leaf(self);
        }
        let e = self.order[i];
        for c in 1..=3u8 {
            let mark = self.trail.len();
            if self.assign(e, c) {
                self.dfs(i + 1, cut, leaf)?;
            }
            self.undo(mark);
        }
        ControlFlow::Continue(())
    }

    pub(crate) fn exists(&mut self) -> bool {
        self.exists_from(0)
    }

    fn exists_from(&mut self, i: usize) -> bool {
        self.dfs(i, usize::MAX, &mut |_| ControlFlow::Break(())).is_break()
    }

    pub(crate) fn count(&mut self) -> Result<u64> {
        let mut n: u64 = 0;
        let mut overflow = false;
        let _ = self.dfs(0, usize::MAX, &mut |_| match n.checked_add(1) {
            Some(x) => {
                n = x;
                ControlFlow::Continue(())
            }
            None => {
                overflow = true;
                ControlFlow::Break(())
            }
        });
        if overflow {
            Err(Error::Overflow)
        } else {
            Ok(n)
        }
    }

    fn colour_of(&self, e: u32) -> Colour {
        Colour::from_bits(self.col[e as usize]).expect("edge coloured")
    }

    fn tuple(&self) -> Vec<Colour> {
        self.net.semi.iter().map(|&e| self.colour_of(e)).collect()
    }
}

fn semiedge_prefix(net: &Net) -> Vec<u32> {
    let mut p = Vec::with_capacity(net.semi.len());
    for &e in &net.semi {
        if !p.contains(&e) {
            p.push(e);
        }
    }
    p
}

/// A proper colouring: colours of the links (in `links()` order) and the
/// boundary tuple (indexed by semiedge id).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Colouring {
    pub links: Vec<Colour>,
    pub tuple: Vec<Colour>,
}

pub fn colourable(m: &Multipole) -> Result<bool> {
    let net = Net::new(m)?;
    if net.has_loop {
        return Ok(false);
    }
    let mut s = Solver::new(&net, &[]);
    if net.ne() > 0 {
        let e = s.order[0];
        s.fix(e, 1);
    }
    Ok(s.exists())
}

pub fn count_colourings(m: &Multipole) -> Result<u64> {
    let net = Net::new(m)?;
    if net.has_loop {
        return Ok(0);
    }
    if net.ne() == 0 {
        return Ok(1);
    }
    let mut s = Solver::new(&net, &[]);
    let e = s.order[0];
    s.fix(e, 1);
    // colour permutations act freely; fixing one edge keeps a third
    s.count()?.checked_mul(3).ok_or(Error::Overflow)
}

/// Visit every proper colouring once, in a deterministic order.
pub fn for_each_colouring<F>(m: &Multipole, mut f: F) -> Result<()>
where
    F: FnMut(&Colouring) -> ControlFlow<()>,
{
    let net = Net::new(m)?;
    if net.has_loop {
        return Ok(());
    }
    let mut s = Solver::new(&net, &[]);
    let _ = s.dfs(0, usize::MAX, &mut |s| {
        let c = Colouring {
            links: (0..s.net.nlinks as u32).map(|e| s.colour_of(e)).collect(),
            tuple: s.tuple(),
        };
        f(&c)
    });
    Ok(())
}

pub fn colouring_set(m: &Multipole) -> Result<ColouringSet> {
    let net = Net::new(m)?;
    let k = m.semiedge_count();
    let mut codes = Vec::new();
    if !net.has_loop {
        let prefix = semiedge_prefix(&net);
        let cut = prefix.len();
        let mut s = Solver::new(&net, &prefix);
        let _ = s.dfs(0, cut, &mut |s| {
            let t = s.tuple();
            if parity_check(&t) {
                let mark = s.trail.len();
                if s.exists_from(cut) {
                    codes.push(encode(&t));
                }
                s.undo(mark);
            }
            ControlFlow::Continue(())
        });
    }
    ColouringSet::from_codes(k, m.shape(), codes)
}

/// Whether some colouring agrees with the prescribed semiedge colours.
pub fn colourable_with(m: &Multipole, fixed: &[(SemiedgeId, Colour)]) -> Result<bool> {
    let net = Net::new(m)?;
    if net.has_loop {
        return Ok(false);
    }
    let mut s = Solver::new(&net, &[]);
    for &(sid, c) in fixed {
        let e = *net.semi.get(sid).ok_or(Error::UnknownSemiedge(sid))?;
        if !s.fix(e, c.bits()) {
            return Ok(false);
        }
    }
    Ok(s.exists())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multipole::Assembly;

    fn k4() -> Multipole {
        Multipole::graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn k4_has_six_colourings() {
        assert_eq!(count_colourings(&k4()).unwrap(), 6);
        let mut n = 0;
        for_each_colouring(&k4(), |_| {
            n += 1;
            ControlFlow::Continue(())
        })
        .unwrap();
        assert_eq!(n, 6);
    }

    #[test]
    fn isolated_edge_has_three() {
        let mut a = Assembly::new();
        let (x, y) = a.isolated_edge();
        a.group("S", false, vec![x, y]);
        let m = a.finish().unwrap();
        assert_eq!(count_colourings(&m).unwrap(), 3);
        assert_eq!(colouring_set(&m).unwrap().len(), 3);
    }

    #[test]
    fn loop_blocks_colouring() {
        let db = Multipole::graph(2, &[(0, 0), (0, 1), (1, 1)]).unwrap();
        assert!(!colourable(&db).unwrap());
        assert_eq!(count_colourings(&db).unwrap(), 0);
    }

    #[test]
    fn free_loop_is_rejected() {
        let mut a = Assembly::new();
        let (x, y) = a.isolated_edge();
        a.join(x, y).unwrap();
        let m = a.finish().unwrap();
        assert_eq!(colourable(&m), Err(Error::FreeLoop));
    }

    #[test]
    fn fixed_colours() {
        let m = crate::multipole::remove_vertices(&k4(), &[0]).unwrap();
        assert!(colourable_with(&m, &[(0, Colour::A), (1, Colour::B)]).unwrap());
        assert!(!colourable_with(&m, &[(0, Colour::A), (1, Colour::A)]).unwrap());
    }
}
