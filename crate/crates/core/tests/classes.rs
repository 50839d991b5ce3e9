use snarkmorph::constructions::*;
use snarkmorph::criticality::{grade, CriticalityGrade};
use snarkmorph::multipole::remove_vertices;
use snarkmorph::structure::*;
use snarkmorph::tait::{colourable, colouring_set, count_colourings, parity_check, SetRelation};
use snarkmorph::Multipole;

/// Proper 3-edge-colourings by plain backtracking over the link list.
fn count_oracle(g: &Multipole) -> u64 {
    fn go(i: usize, es: &[(usize, usize)], used: &mut [[bool; 3]]) -> u64 {
        if i == es.len() {
            return 1;
        }
        let (u, v) = es[i];
        let mut n = 0;
        for c in 0..3 {
            if u != v && !used[u][c] && !used[v][c] {
                used[u][c] = true;
                used[v][c] = true;
                n += go(i + 1, es, used);
                used[u][c] = false;
                used[v][c] = false;
            }
        }
        n
    }
    // sorting by lower end keeps conflicts close to the root
    let mut es = g.links().to_vec();
    es.sort_by_key(|&(u, v)| u.min(v));
    go(0, &es, &mut vec![[false; 3]; g.order()])
}

fn canonical(f: Family) -> Built {
    build_blueprint(&FamilySpec::canonical(f).unwrap()).unwrap().unwrap()
}

#[test]
fn canonical_classes_are_snarks_with_agreeing_arguments() {
    let expect = [
        (Family::Nnn, 22),
        (Family::Class32A, 32),
        (Family::Class34A, 34),
        (Family::Class34B, 34),
        (Family::Class34C, 34),
        (Family::Class34D, 34),
        (Family::Class34E, 34),
        (Family::Class34F, 34),
        (Family::Class36A, 36),
        (Family::Class36B, 36),
        (Family::Class36BGen, 64),
        (Family::Class38A, 38),
        (Family::Class42A, 42),
        (Family::StrictTtt, 36),
    ];
    for (f, n) in expect {
        let spec = FamilySpec::canonical(f).unwrap();
        let tr = verify_family_uncolourable(&spec).unwrap();
        assert_eq!(tr.order, n, "{}", f.name());
        assert!(tr.agrees && tr.oracle_colourings == 0 && !tr.abstract_satisfiable, "{}", f.name());
        assert!(tr.premises.iter().all(|p| p.holds), "{}", f.name());
    }
}

#[test]
fn canonical_classes_are_cyclically_5_connected_with_girth_5() {
    for f in [Family::Class32A, Family::Class34A, Family::Class34D, Family::Class36A, Family::Class38A, Family::Class42A] {
        let g = canonical(f).multipole;
        assert_eq!(girth(&g), Some(5), "{}", f.name());
        assert_eq!(cyclic_connectivity(&g).unwrap(), Some(5), "{}", f.name());
    }
}

#[test]
fn negator_ring_closures_are_permutation_snarks() {
    let d = canonical(Family::Class34D).multipole;
    let e = canonical(Family::Class34E).multipole;
    assert!(!is_isomorphic(&d, &e));
    for g in [d, e] {
        let side = permutation_partition(&g).expect("permutation partition");
        assert_eq!(side.iter().filter(|&&s| s).count(), 17);
    }
    assert!(permutation_partition(&petersen()).is_some());
    assert!(permutation_partition(&flower(5).unwrap()).is_none());
}

#[test]
fn class_36a_components_are_colour_disjoint() {
    let d = dyad();
    let al = Family::Class36A.canonical_alignment();
    let m = m24([&d, &d, &d], &al).unwrap();
    assert_eq!(m.order(), 24);
    let y = y_chain(3).unwrap();
    assert!(colouring_set(&m).unwrap().is_disjoint(&colouring_set(&y).unwrap()));
}

#[test]
fn an_unsatisfiable_wiring_is_rejected() {
    // the reversed triad order meets Y3 in a common tuple
    let d = dyad();
    let al = Alignment::new(0, &[1], Closure::default());
    let b = class_36a([&d, &d, &d], &al).unwrap();
    assert!(colourable(&b.multipole).unwrap());
    let mut spec = FamilySpec::canonical(Family::Class36A).unwrap();
    spec.alignment = al;
    assert!(matches!(verify_family_uncolourable(&spec), Err(snarkmorph::Error::Verification(_))));
}

#[test]
fn m11_recloses_to_j3() {
    let (x, f, g, r, rot) = M11_DEFAULT;
    let m = m11(x, f, g, r, rot).unwrap();
    assert_eq!((m.order(), m.shape()), (11, vec![2, 2, 3]));
    assert!(m11(0, 0, 1, false, 3).is_err());
}

#[test]
fn class_38a_order_is_computed() {
    let b = canonical(Family::Class38A);
    let t = triad();
    let expected = 4 * dyad().order() + t.order() + 1;
    assert_eq!(b.multipole.order(), expected);
    assert_eq!(expected, 38);
}

#[test]
fn strict_gadget() {
    let t = triad();
    let al = Family::StrictTtt.canonical_alignment();
    let pole = strict_pole([&t, &t, &t], &al).unwrap();
    let v4set = colouring_set(&v4()).unwrap();
    assert_eq!(colouring_set(&pole).unwrap().relation(&v4set), SetRelation::Equal);
    // deleting two added vertices leaves the admissible boundary colourings
    for (a, b) in [(0, 1), (0, 2), (1, 2)] {
        let m = remove_vertices(&pole, &[a, b]).unwrap();
        let all = colouring_set(&m).unwrap().project(&[0, 1, 2, 3, 4, 5]).unwrap().with_shape(vec![2, 2, 2]);
        assert!(all.len() > v4set.len());
        let col = all.filter(parity_check);
        assert_eq!(col.relation(&v4set), SetRelation::Equal, "{a} {b}");
    }
    let g = canonical(Family::StrictTtt).multipole;
    let r = grade(&g).unwrap();
    assert_eq!(r.grade, CriticalityGrade::CriticalStrict);
    let [a, b] = r.witness.unwrap();
    assert!(a < 3 && b < 3 && !g.are_adjacent(a, b));
}

#[test]
fn family_names_and_parts() {
    for &f in Family::ALL {
        assert_eq!(Family::parse(f.name()), Some(f));
        let spec = FamilySpec::canonical(f).unwrap();
        let g = build(&spec).unwrap();
        if f.is_snark_family() {
            assert!(g.is_graph(), "{}", f.name());
        }
    }
    let s = FamilySpec::parse("flower_j(7)", None).unwrap();
    assert_eq!(build(&s).unwrap().order(), 28);
    let s = FamilySpec::parse("NNN", Some("neg_j5,dyad,neg_j5")).unwrap();
    let g = build(&s).unwrap();
    assert_eq!(g.order(), 17 + 7 + 17 + 1);
    assert!(!colourable(&g).unwrap());
    assert!(FamilySpec::parse("NNN", Some("dyad,dyad")).and_then(|s| build(&s)).is_err());
    assert!(FamilySpec::parse("NO_SUCH", None).is_err());
    assert!(FamilySpec::parse("TT", Some("dyad,triad")).and_then(|s| build(&s)).is_err());
}

#[test]
fn blanusa_snarks() {
    let b1 = blanusa(Blanusa::Type1).unwrap();
    let b2 = blanusa(Blanusa::Type2).unwrap();
    for (b, aut) in [(&b1, 8), (&b2, 4)] {
        let g = &b.graph;
        assert_eq!(g.order(), 18);
        assert!(!colourable(g).unwrap());
        assert_eq!(count_oracle(g), 0);
        assert_eq!(cyclic_connectivity(g).unwrap(), Some(4));
        assert_eq!(automorphism_count(g).unwrap(), aut);
        assert!(separates_cycles(g, &b.principal_cut));
    }
    assert!(!is_isomorphic(&b1.graph, &b2.graph));
}

#[test]
fn dot_product_preconditions() {
    let p = petersen();
    let (a, b) = p.links()[0];
    let f = (0..15).find(|&i| {
        let (c, d) = p.links()[i];
        i != 0 && (c == a || c == b || d == a || d == b)
    });
    assert!(dot_product(&p, 0, f.unwrap(), &p, 0, 1).is_err());
    let far = (0..10).find(|&v| v != 0 && !p.are_adjacent(0, v)).unwrap();
    assert!(dot_product(&p, 0, 8, &p, 0, far).is_err());
}

#[test]
fn blanusa_decomposes_into_petersen_graphs() {
    let p = petersen();
    let b = blanusa(Blanusa::Type1).unwrap();
    let d = decompose_4cut(&b.graph, &b.principal_cut).unwrap();
    assert!(is_isomorphic(&d.g1, &p) && is_isomorphic(&d.g2, &p));
    assert!(d.g2.are_adjacent(d.u, d.v));
    let back = (0..4).any(|k| {
        dot_product_oriented(&d.g1, d.e, d.f, &d.g2, d.u, d.v, [k & 1 == 1, k & 2 == 2])
            .is_ok_and(|x| is_isomorphic(&x.graph, &b.graph))
    });
    assert!(back);
    let c5 = five_cycles(&p)[0];
    let cut: Vec<usize> = (0..15).filter(|&i| {
        let (x, y) = p.links()[i];
        c5.contains(&x) != c5.contains(&y)
    }).collect();
    assert!(decompose_4cut(&p, &cut[..4]).is_err());
    assert!(decompose_4cut(&p, &cut).is_err());
}

#[test]
fn three_petersen_graphs_decompose_uniquely() {
    let p = petersen();
    let b = blanusa(Blanusa::Type1).unwrap().graph;
    let m = b.links().len();
    let (e, f) = (0..m)
        .flat_map(|e| (e + 1..m).map(move |f| (e, f)))
        .find(|&(e, f)| {
            let (a, bb) = b.links()[e];
            let (c, d) = b.links()[f];
            a != c && a != d && bb != c && bb != d
        })
        .unwrap();
    let g = dot_product(&b, e, f, &p, 0, 1).unwrap();
    assert_eq!(g.order(), 26);
    assert!(!colourable(&g).unwrap());
    let parts = decompose_fully(&g).unwrap();
    assert_eq!(parts.len(), 3);
    assert!(parts.iter().all(|x| is_isomorphic(x, &p)));
}

fn two_path_cut(g: &Multipole, w: usize) -> (Vec<usize>, usize) {
    let nb = g.adjacency()[w].clone();
    let (u, v) = (nb[0], nb[1]);
    let mut cut = Vec::new();
    for x in [u, v, w] {
        for (i, &(a, b)) in g.links().iter().enumerate() {
            let other = if a == x { b } else if b == x { a } else { continue };
            if ![u, v, w].contains(&other) {
                cut.push(i);
            }
        }
    }
    (cut, nb[2])
}

#[test]
fn substitutions() {
    let p = petersen();
    let (d, t) = (dyad(), triad());
    // P_NN for a 2-path
    let (cut, keep) = two_path_cut(&p, 0);
    let g = substitute(&p, &cut, keep, &nn(&d, &d).unwrap(), &[0, 1, 2, 3, 4]).unwrap();
    assert_eq!(g.order(), 22);
    assert!(!colourable(&g).unwrap());
    assert!(is_isomorphic(&g, &loupekine(1).unwrap()) || is_isomorphic(&g, &loupekine(2).unwrap()));
    // P_TTT for a vertex neighbourhood
    let nb = p.adjacency()[0].clone();
    let mut cut = Vec::new();
    for &x in &nb {
        for (i, &(a, b)) in p.links().iter().enumerate() {
            if (a == x && b != 0) || (b == x && a != 0) {
                cut.push(i);
            }
        }
    }
    let keep = (1..10).find(|v| !nb.contains(v)).unwrap();
    let g = substitute(&p, &cut, keep, &ttt(&t, &t, &t).unwrap(), &[0, 1, 2, 3, 4, 5]).unwrap();
    assert_eq!(g.order(), 34);
    assert!(!colourable(&g).unwrap());
    // superpentagon for a pentagon, cut in cycle order
    let c = five_cycles(&p)[0];
    let cut: Vec<usize> = c
        .iter()
        .map(|&x| (0..15).find(|&i| {
            let (a, b) = p.links()[i];
            (a == x && !c.contains(&b)) || (b == x && !c.contains(&a))
        }).unwrap())
        .collect();
    let keep = (0..10).find(|v| !c.contains(v)).unwrap();
    let q = superpentagon_q(&t, &m8()).unwrap();
    let g = substitute(&p, &cut, keep, &q, &[0, 1, 2, 3, 4]).unwrap();
    assert_eq!(g.order(), 34);
    assert!(!colourable(&g).unwrap());
    // a replacement that is not colour-contained
    assert!(substitute(&p, &cut, keep, &d, &[0, 1, 2, 3, 4]).is_err());
}

#[test]
fn loupekine_and_order24() {
    let l1 = loupekine(1).unwrap();
    let l2 = loupekine(2).unwrap();
    assert!(!is_isomorphic(&l1, &l2));
    for l in [&l1, &l2] {
        assert_eq!((l.order(), girth(l), cyclic_connectivity(l).unwrap()), (22, Some(5), Some(5)));
        assert_eq!(grade(l).unwrap().grade, CriticalityGrade::Bicritical);
    }
    let a = order24_snark(0).unwrap();
    let b = order24_snark(1).unwrap();
    assert!(!is_isomorphic(&a, &b));
    for g in [&a, &b] {
        assert_eq!((g.order(), girth(g), cyclic_connectivity(g).unwrap()), (24, Some(5), Some(5)));
        assert!(g.are_adjacent(22, 23));
        assert_eq!(grade(g).unwrap().grade, CriticalityGrade::NoncriticalSnark);
    }
}

#[test]
fn double_star_snark() {
    let g = double_star().unwrap();
    assert_eq!((g.order(), girth(&g)), (30, Some(6)));
    assert!(!colourable(&g).unwrap());
    let sp = j5_superpentagon().unwrap();
    assert_eq!(sp.order(), 15);
    let v = snarkmorph::tait::is_superpentagon(&sp, &[0, 1, 2, 3, 4]).unwrap();
    assert_eq!(v, snarkmorph::tait::SuperpentagonVerdict::Perfect);
}

#[test]
fn kaszonyi_invariance() {
    let graphs = [petersen(), flower(5).unwrap(), loupekine(1).unwrap(), loupekine(2).unwrap()];
    for g in &graphs {
        for c in five_cycles(g) {
            let mut counts = Vec::new();
            for i in 0..5 {
                let (a, b) = (c[i], c[(i + 1) % 5]);
                let e = g.link_index(a.min(b), a.max(b)).unwrap();
                let h = snarkmorph::criticality::reduce_edge(g, e).unwrap();
                let n = count_colourings(&h).unwrap();
                if g.order() <= 10 {
                    assert_eq!(n, count_oracle(&h));
                }
                counts.push(n);
            }
            assert!(counts.windows(2).all(|w| w[0] == w[1]), "{counts:?}");
            assert!(counts[0] > 0);
        }
    }
}
