use crate::error::{Error, Result};
use crate::multipole::{remove_vertices, remove_vertices_with, sever_edges, Assembly, Multipole, RemovalPolicy};

/// Petersen graph: outer cycle 0..4, inner pentagram 5..9 (i ~ i+2), spokes i ~ i+5.
pub fn petersen() -> Multipole {
    let mut l = Vec::new();
    for i in 0..5 {
        l.push((i, (i + 1) % 5));
        l.push((5 + i, 5 + (i + 2) % 5));
        l.push((i, i + 5));
    }
    Multipole::graph(10, &l).unwrap()
}

pub fn k4() -> Multipole {
    Multipole::graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
}

/// Two loops joined by a bridge.
pub fn dumbbell() -> Multipole {
    Multipole::graph(2, &[(0, 0), (0, 1), (1, 1)]).unwrap()
}

/// K_{3,3}.
pub fn k33() -> Multipole {
    let mut l = Vec::new();
    for i in 0..3 {
        for j in 3..6 {
            l.push((i, j));
        }
    }
    Multipole::graph(6, &l).unwrap()
}

/// Cycle of length `n` with one dangling edge per vertex, ordered connector `S`
/// following the cycle.
pub fn cycle_pole(n: usize) -> Multipole {
    let mut a = Assembly::new();
    let vs: Vec<usize> = a.add_vertices(n).collect();
    for i in 0..n {
        a.link(vs[i], vs[(i + 1) % n]);
    }
    let hs = vs.iter().map(|&v| a.dangle(v)).collect();
    a.group("S", true, hs);
    a.finish().unwrap()
}

/// The open 5-cycle C5.
pub fn pentagon() -> Multipole {
    cycle_pole(5)
}

/// Inner half of the Petersen graph: semiedge `k` sits where spoke `k` lands,
/// so that `pentagon * pentagram` is the Petersen graph.
pub fn pentagram() -> Multipole {
    let mut a = Assembly::new();
    let c: Vec<usize> = a.add_vertices(5).collect();
    for i in 0..5 {
        a.link(c[i], c[(i + 2) % 5]);
    }
    let hs = (0..5).map(|k| a.dangle(c[k])).collect();
    a.group("S", true, hs);
    a.finish().unwrap()
}

/// A single vertex with connector `S` of three semiedges.
pub fn star() -> Multipole {
    let mut a = Assembly::new();
    let (_, h) = a.star();
    a.group("S", false, h.to_vec());
    a.finish().unwrap()
}

/// Negator Neg(G; u, v): remove the path u w v through the unique common
/// neighbour w. Connectors `I` (at u), `O` (at v), `R` (at w).
pub fn negator_of(g: &Multipole, u: usize, v: usize) -> Result<Multipole> {
    let w = common_neighbour(g, u, v)?;
    let mut a = Assembly::new();
    let p = a.import(g);
    a.keep_connectors(&p, "");
    let hs = a.detach(&[p.v(u), p.v(v), p.v(w)], false)?;
    if hs[0].len() != 2 || hs[1].len() != 2 || hs[2].len() != 1 {
        return Err(Error::Precondition(format!("path {u}-{w}-{v} does not leave a (2,2,1)-pole")));
    }
    for (name, h) in ["I", "O", "R"].iter().zip(hs) {
        a.group(name, false, h);
    }
    a.finish()
}

pub fn common_neighbour(g: &Multipole, u: usize, v: usize) -> Result<usize> {
    if u >= g.order() {
        return Err(Error::UnknownVertex(u));
    }
    if v >= g.order() {
        return Err(Error::UnknownVertex(v));
    }
    let adj = g.adjacency();
    let mut common: Vec<usize> = adj[u].iter().copied().filter(|&x| x != u && x != v && adj[v].contains(&x)).collect();
    common.sort_unstable();
    common.dedup();
    match common.as_slice() {
        [w] => Ok(*w),
        [] => Err(Error::Precondition(format!("{u} and {v} have no common neighbour"))),
        _ => Err(Error::Precondition(format!("{u} and {v} have several common neighbours"))),
    }
}

/// Petersen negator.
pub fn dyad() -> Multipole {
    negator_of(&petersen(), 1, 4).unwrap()
}

/// Petersen minus a vertex with a non-incident edge severed: connectors `B`
/// (severed edge) and `C` (removed vertex).
pub fn triad() -> Multipole {
    let g = petersen();
    let e = g.link_index(2, 3).unwrap();
    let m = sever_edges(&g, &[e]).unwrap();
    let m = remove_vertices(&m, &[0]).unwrap();
    m.merge_connectors(&[("B", false, &[&format!("e{e}")]), ("C", false, &["v0"])]).unwrap()
}

/// Two 5-cycles sharing a 2-path, plus a third sharing one edge with each.
pub fn quasitriad() -> Multipole {
    let mut a = Assembly::new();
    let [pa, w, b, x1, y1, x2, y2, n1, n2] = std::array::from_fn(|_| a.add_vertex());
    for (s, t) in [(pa, w), (w, b), (b, x1), (x1, y1), (y1, pa), (b, x2), (x2, y2), (y2, pa), (x1, n1), (n1, n2), (n2, x2)] {
        a.link(s, t);
    }
    let hs = [w, y1, y2, n1, n2].iter().map(|&v| a.dangle(v)).collect();
    a.group("S", false, hs);
    a.finish().unwrap()
}

/// Petersen minus two adjacent vertices with an edge at distance two severed:
/// connectors `A`, `B` (the removed vertices) and `C` (the severed edge).
pub fn double_pentagon() -> Multipole {
    let g = petersen();
    let e = g.link_index(3, 8).unwrap();
    let m = sever_edges(&g, &[e]).unwrap();
    let m = remove_vertices_with(&m, &[0, 1], RemovalPolicy::Drop).unwrap();
    m.merge_connectors(&[("A", false, &["v0"]), ("B", false, &["v1"]), ("C", false, &[&format!("e{e}")])]).unwrap()
}

fn sever_three(pairs: [(usize, usize); 3]) -> Multipole {
    let g = petersen();
    let es: Vec<usize> = pairs.iter().map(|&(u, v)| g.link_index(u, v).unwrap()).collect();
    let m = sever_edges(&g, &es).unwrap();
    let names: Vec<String> = es.iter().map(|e| format!("e{e}")).collect();
    m.merge_connectors(&[("A", false, &[&names[0]]), ("B", false, &[&names[1]]), ("C", false, &[&names[2]])])
        .unwrap()
}

/// Petersen with three alternate edges of the 6-cycle 0 1 2 7 9 4 severed.
pub fn triple_pentagon() -> Multipole {
    sever_three([(0, 1), (2, 7), (4, 9)])
}

/// Petersen with three spokes severed (part of a perfect matching, on no 6-cycle).
pub fn tricell() -> Multipole {
    sever_three([(0, 5), (1, 6), (2, 7)])
}

/// Petersen minus two non-adjacent vertices: connectors `I` and `O`.
pub fn m8() -> Multipole {
    let m = remove_vertices(&petersen(), &[0, 2]).unwrap();
    m.merge_connectors(&[("I", false, &["v0"]), ("O", false, &["v2"])]).unwrap()
}

/// Petersen minus a closed vertex neighbourhood: a 6-cycle whose connectors
/// are the opposite pairs.
pub fn hexagon() -> Multipole {
    let m = remove_vertices_with(&petersen(), &[0, 1, 4, 5], RemovalPolicy::Drop).unwrap();
    m.merge_connectors(&[("S1", false, &["v1"]), ("S2", false, &["v4"]), ("S3", false, &["v5"])]).unwrap()
}

/// A vertex with three neighbours, each carrying a 2-connector.
pub fn v4() -> Multipole {
    let mut a = Assembly::new();
    let (_, h) = a.star();
    for (i, &x) in h.iter().enumerate() {
        let (_, [p, q, r]) = a.star();
        a.join(x, p).unwrap();
        a.group(&format!("S{}", i + 1), false, vec![q, r]);
    }
    a.finish().unwrap()
}

/// Path of length two: connectors `I`, `O` at the ends and `R` in the middle.
pub fn p2() -> Multipole {
    let mut a = Assembly::new();
    let (_, [u0, u1, u2]) = a.star();
    let (_, [w0, w1, w2]) = a.star();
    let (_, [v0, v1, v2]) = a.star();
    a.join(u2, w0).unwrap();
    a.join(w1, v0).unwrap();
    a.group("I", false, vec![u0, u1]);
    a.group("O", false, vec![v1, v2]);
    a.group("R", false, vec![w2]);
    a.finish().unwrap()
}

/// An isolated edge `B` and a free vertex `C`.
pub fn m_ev() -> Multipole {
    let mut a = Assembly::new();
    let (x, y) = a.isolated_edge();
    let (_, h) = a.star();
    a.group("B", false, vec![x, y]);
    a.group("C", false, h.to_vec());
    a.finish().unwrap()
}

/// An isolated edge `E` next to a path of length two.
pub fn m7() -> Multipole {
    let mut a = Assembly::new();
    let (x, y) = a.isolated_edge();
    a.group("E", false, vec![x, y]);
    let p = a.import(&p2());
    a.keep_connectors(&p, "");
    a.finish().unwrap()
}

/// Isaacs (3,3)-pole: K_{3,3} minus two vertices of one side. Ordered
/// connectors `I`, `O`; the adjacent dangling pairs are {i1,o2}, {i2,o1}, {i3,o3}.
pub fn y_pole() -> Multipole {
    let mut a = Assembly::new();
    let (_, [h1, h2, h3]) = a.star();
    let mut ys = Vec::new();
    for h in [h1, h2, h3] {
        let (_, [p, q, r]) = a.star();
        a.join(h, p).unwrap();
        ys.push((q, r));
    }
    let (i1, o2) = ys[0];
    let (i2, o1) = ys[1];
    let (i3, o3) = ys[2];
    a.group("I", true, vec![i1, i2, i3]);
    a.group("O", true, vec![o1, o2, o3]);
    a.finish().unwrap()
}

/// Chain of `k` Isaacs poles, `O_i` joined to `I_{i+1}`.
pub fn y_chain(k: usize) -> Result<Multipole> {
    if k == 0 {
        return Err(Error::Precondition("Y_k needs k >= 1".into()));
    }
    let mut a = Assembly::new();
    let (first, last) = chain_into(&mut a, k)?;
    a.group("I", true, first);
    a.group("O", true, last);
    a.finish()
}

fn chain_into(a: &mut Assembly, k: usize) -> Result<(Vec<usize>, Vec<usize>)> {
    let y = y_pole();
    let mut first = Vec::new();
    let mut prev: Option<Vec<usize>> = None;
    for _ in 0..k {
        let p = a.import(&y);
        if let Some(o) = prev {
            a.join_all(&o, &p.conn("I")?)?;
        } else {
            first = p.conn("I")?;
        }
        prev = Some(p.conn("O")?);
    }
    Ok((first, prev.unwrap()))
}

/// Flower snark J_n: Y_n closed up by joining its two connectors.
pub fn flower(n: usize) -> Result<Multipole> {
    if n < 1 {
        return Err(Error::Precondition("J_n needs n >= 1".into()));
    }
    let mut a = Assembly::new();
    let (first, last) = chain_into(&mut a, n)?;
    a.join_all(&last, &first)?;
    a.finish()
}
