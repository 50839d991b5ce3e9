use snarkmorph::constructions::*;
use snarkmorph::tait::{closed, colourable, colouring_set, count_colourings, is_even_222, is_perfect_negator,
    is_perfect_proper23, is_superpentagon, NegatorVerdict, Proper23Verdict, SetRelation, SuperpentagonVerdict};

fn col(m: &snarkmorph::Multipole) -> snarkmorph::tait::ColouringSet {
    colouring_set(m).unwrap()
}

#[test]
fn catalog_counts() {
    for (name, m, v, s) in [
        ("pentagon", pentagon(), 5, 5),
        ("dyad", dyad(), 7, 5),
        ("triad", triad(), 9, 5),
        ("quasitriad", quasitriad(), 9, 5),
        ("double pentagon", double_pentagon(), 8, 6),
        ("triple pentagon", triple_pentagon(), 10, 6),
        ("tricell", tricell(), 10, 6),
        ("m8", m8(), 8, 6),
        ("hexagon", hexagon(), 6, 6),
    ] {
        assert_eq!((m.order(), m.semiedge_count()), (v, s), "{name}");
    }
    assert_eq!(dyad().links().len(), 8);
}

#[test]
fn base_snarks() {
    assert_eq!(count_colourings(&petersen()).unwrap(), 0);
    assert_eq!(count_colourings(&k4()).unwrap(), 6);
    for n in [3, 5, 7, 9] {
        let j = flower(n).unwrap();
        assert_eq!(j.order(), 4 * n);
        assert!(!colourable(&j).unwrap(), "J{n}");
    }
    for n in [4, 6] {
        assert!(colourable(&flower(n).unwrap()).unwrap(), "J{n}");
    }
}

#[test]
fn verdicts() {
    assert_eq!(is_perfect_negator(&dyad()).unwrap(), NegatorVerdict::Perfect);
    assert_eq!(is_perfect_proper23(&triad()).unwrap(), Proper23Verdict::Perfect);
    assert!(is_even_222(&hexagon()).unwrap());
    assert!(!is_even_222(&v4()).unwrap());
    assert_eq!(col(&dyad()).relation(&closed::negator()), SetRelation::Equal);
    assert_eq!(col(&p2()).relation(&closed::p2()), SetRelation::Equal);
    assert_eq!(col(&v4()).relation(&closed::v4()), SetRelation::Equal);
    assert_eq!(col(&m_ev()).relation(&closed::m_ev()), SetRelation::Equal);
    assert_eq!(col(&m7()).relation(&closed::m7()), SetRelation::Equal);
    assert_eq!(col(&pentagon()).relation(&closed::c5()), SetRelation::Equal);
}

#[test]
fn compositions() {
    let (d, t) = (dyad(), triad());
    let pnn = nn(&d, &d).unwrap();
    assert_eq!(pnn.order(), 15);
    assert_eq!(col(&pnn).relation(&closed::p2()), SetRelation::Equal);
    let ptt = tt(&t, &t).unwrap();
    assert_eq!(ptt.order(), 19);
    assert_eq!(col(&ptt).relation(&closed::p2()), SetRelation::Equal);
    let pnt = nt(&d, &t).unwrap();
    assert_eq!(pnt.order(), 17);
    assert_eq!(col(&pnt).relation(&closed::m_ev()), SetRelation::Equal);
    let pttt = ttt(&t, &t, &t).unwrap();
    assert_eq!(pttt.order(), 28);
    assert_eq!(col(&pttt).relation(&closed::v4()), SetRelation::Equal);
    let p3 = three_nt(&d, &d, &d, &t).unwrap();
    assert_eq!(p3.order(), 31);
    assert_eq!(col(&p3).relation(&closed::m7()), SetRelation::Equal);
    assert_eq!(col(&y_chain(4).unwrap()).relation(&col(&y_chain(2).unwrap())), SetRelation::Equal);
    let g = nnn(&d, &d, &d).unwrap();
    assert_eq!(g.order(), 22);
    assert!(!colourable(&g).unwrap());
    let q = superpentagon_q(&t, &m8()).unwrap();
    assert_eq!(q.order(), 29);
    assert_eq!(is_superpentagon(&q, &[0, 1, 2, 3, 4]).unwrap(), SuperpentagonVerdict::Perfect);
    let h = h_m_snark([false; 6]).unwrap();
    assert_eq!(h.order(), 34);
    assert!(!colourable(&h).unwrap());
}
