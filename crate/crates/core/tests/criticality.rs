use snarkmorph::constructions::*;
use snarkmorph::criticality::*;
use snarkmorph::multipole::remove_vertices;
use snarkmorph::structure::is_isomorphic;
use snarkmorph::tait::{colourable, NegatorVerdict};
use snarkmorph::Multipole;

/// Plain backtracking over edges: `alive` vertices, links among them, and
/// a free edge end for every missing incidence.
fn colourable_oracle(order: usize, links: &[(usize, usize)], gone: &[usize]) -> bool {
    let alive: Vec<bool> = (0..order).map(|v| !gone.contains(&v)).collect();
    let es: Vec<(usize, usize)> = links.iter().copied().filter(|&(u, v)| alive[u] && alive[v]).collect();
    let mut used = vec![[false; 3]; order];
    fn go(i: usize, es: &[(usize, usize)], used: &mut Vec<[bool; 3]>) -> bool {
        if i == es.len() {
            return true;
        }
        let (u, v) = es[i];
        if u == v {
            return false;
        }
        for c in 0..3 {
            if !used[u][c] && !used[v][c] {
                used[u][c] = true;
                used[v][c] = true;
                if go(i + 1, es, used) {
                    return true;
                }
                used[u][c] = false;
                used[v][c] = false;
            }
        }
        false
    }
    // dangling ends never block: each vertex has at most three incidences
    go(0, &es, &mut used)
}

fn snarks() -> Vec<(&'static str, Multipole)> {
    vec![("Petersen", petersen()), ("J5", flower(5).unwrap()), ("NNN", nnn(&dyad(), &dyad(), &dyad()).unwrap())]
}

#[test]
fn single_vertex_removal_stays_uncolourable() {
    for (name, g) in snarks() {
        for v in 0..g.order() {
            assert!(!colourable(&remove_vertices(&g, &[v]).unwrap()).unwrap(), "{name} {v}");
        }
    }
}

#[test]
fn vertex_pair_removability_matches_oracle() {
    for (name, g) in snarks().into_iter().take(2) {
        for u in 0..g.order() {
            for v in u + 1..g.order() {
                let fast = vertex_pair_removable(&g, u, v).unwrap();
                assert_eq!(fast, !colourable_oracle(g.order(), g.links(), &[u, v]), "{name} {u} {v}");
            }
        }
    }
}

#[test]
fn petersen_all_pairs_non_removable() {
    let p = petersen();
    let mut n = 0;
    for u in 0..10 {
        for v in u + 1..10 {
            let r = removable_vertex_pair(&p, u, v).unwrap();
            assert!(!r.removable && r.colourings > 0);
            n += 1;
        }
    }
    assert_eq!(n, 45);
    assert!(removable_vertex_pair(&p, 3, 3).is_err());
    assert!(removable_vertex_pair(&k4(), 0, 1).is_err());
}

#[test]
fn grades() {
    assert_eq!(grade(&petersen()).unwrap().grade, CriticalityGrade::Bicritical);
    assert_eq!(grade(&flower(5).unwrap()).unwrap().grade, CriticalityGrade::Bicritical);
    assert_eq!(grade(&k4()).unwrap().grade, CriticalityGrade::NotSnark);
    assert_eq!(grade(&flower(3).unwrap()).unwrap().grade, CriticalityGrade::SnarkTrivial);
    assert_eq!(grade(&dumbbell()).unwrap().grade, CriticalityGrade::SnarkTrivial);
    let r = grade(&nnn(&dyad(), &dyad(), &dyad()).unwrap()).unwrap();
    assert_eq!((r.order, r.colourings, r.grade, r.witness), (22, 0, CriticalityGrade::Bicritical, None));
    let json = serde_json::to_value(&r).unwrap();
    assert_eq!(json["grade"], "bicritical");
    assert!(json["witness"].is_null());
}

#[test]
fn edge_reduction_matches_pair_removal() {
    for (name, g) in snarks().into_iter().take(2) {
        for (e, &(u, v)) in g.links().iter().enumerate() {
            let red = reduce_edge(&g, e).unwrap();
            assert_eq!(red.order(), g.order() - 2);
            assert_eq!(colourable(&red).unwrap(), colourable(&remove_vertices(&g, &[u, v]).unwrap()).unwrap(), "{name} {e}");
        }
    }
}

#[test]
fn extension_inverts_reduction() {
    let g = flower(5).unwrap();
    for (e1, e2) in [(0, 7), (3, 3), (5, 20)] {
        let h = extend_edge(&g, e1, e2).unwrap();
        let n = g.order();
        let e = h.link_index(n, n + 1).unwrap();
        assert!(is_isomorphic(&reduce_edge(&h, e).unwrap(), &g));
    }
    assert!(reduce_edge(&dumbbell(), 0).is_err());
}

#[test]
fn extension_is_snark_iff_pair_removable() {
    let p = petersen();
    let m = p.links().len();
    let mut removable = 0;
    for e in 0..m {
        for f in e + 1..m {
            let snark = !colourable(&extend_edge(&p, e, f).unwrap()).unwrap();
            let v = removable_edge_pair(&p, e, f).unwrap();
            assert_eq!(snark, v.removable, "{e} {f}");
            // oracle: both edges deleted, ends left with free incidences
            let links: Vec<(usize, usize)> =
                p.links().iter().enumerate().filter(|&(i, _)| i != e && i != f).map(|(_, &l)| l).collect();
            assert_eq!(v.removable, !colourable_oracle(10, &links, &[]));
            removable += v.removable as usize;
        }
    }
    assert!(removable > 0);
}

fn independent(g: &Multipole, e: usize, f: usize) -> bool {
    let (a, b) = g.links()[e];
    let (c, d) = g.links()[f];
    a != c && a != d && b != c && b != d
}

#[test]
fn essential_pairs() {
    for g in [flower(5).unwrap(), petersen()] {
        let m = g.links().len();
        for e in 0..m {
            for f in e + 1..m {
                if independent(&g, e, f) {
                    let v = essential_pair(&g, e, f).unwrap();
                    assert_eq!(v.essential, Some(true), "{e} {f}");
                    assert!(!v.removable);
                }
            }
        }
    }
}

#[test]
fn negator_profiles_follow_removability() {
    let p = petersen();
    assert_eq!(negator_profile(&p, 1, 4).unwrap().verdict, NegatorVerdict::Perfect);
    let g = flower(5).unwrap();
    for w in 0..g.order() {
        let nb: Vec<usize> = g.adjacency()[w].clone();
        for i in 0..3 {
            for j in i + 1..3 {
                let pr = negator_profile(&g, nb[i], nb[j]).unwrap();
                assert_eq!(pr.verdict, NegatorVerdict::Perfect);
                assert_eq!(pr.w, w);
            }
        }
    }
    assert!(negator_profile(&k4(), 0, 1).is_err());
}

#[test]
fn feasible_negators() {
    assert_eq!(feasible_negator(&petersen(), 1, 4).unwrap(), Feasibility::Feasible);
    let g = flower(5).unwrap();
    for w in [0, 1, 2] {
        let nb = g.adjacency()[w].clone();
        assert_eq!(feasible_negator(&g, nb[0], nb[1]).unwrap(), Feasibility::Feasible, "w={w}");
    }
}

#[test]
fn negator_vertex_order_follows_host() {
    let g = flower(5).unwrap();
    let nb = g.adjacency()[0].clone();
    let (u, v) = (nb[0], nb[1]);
    let n = negator_of(&g, u, v).unwrap();
    let inner: Vec<usize> = (0..g.order()).filter(|&x| x != u && x != v && x != 0).collect();
    for &(a, b) in n.links() {
        assert!(g.are_adjacent(inner[a], inner[b]));
    }
}

#[test]
fn nearly_critical_cases() {
    let p = petersen();
    assert!(nearly_critical(&p, 0, 5).unwrap());
    // a trivial snark from a removable edge pair of the Petersen graph
    let m = p.links().len();
    let (e, f) = (0..m)
        .flat_map(|e| (e + 1..m).map(move |f| (e, f)))
        .find(|&(e, f)| edge_pair_removable(&p, e, f).unwrap())
        .unwrap();
    let h = extend_edge(&p, e, f).unwrap();
    let new = h.link_index(10, 11).unwrap();
    let other: Vec<usize> = (0..h.links().len()).filter(|&i| i != new).collect();
    assert!(!nearly_critical(&h, other[0], other[1]).unwrap());
    assert_eq!(grade(&h).unwrap().grade, CriticalityGrade::SnarkTrivial);
}
