use snarkmorph::constructions::{build, Family, FamilySpec};
use snarkmorph::criticality::CriticalityGrade;
use snarkmorph::multipole::format::{to_graph6, to_mp};
use snarkmorph::structure::is_isomorphic;
use snarkmorph_cli::*;
use std::process::Command;

fn data(name: &str) -> String {
    format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_snarkmorph"))
}

#[test]
fn bundled_petersen() {
    let (ok, bad) = ingest(&data("petersen.g6"), None).unwrap();
    assert_eq!((ok.len(), bad.len()), (1, 0));
    assert_eq!(ok[0].graph.order(), 10);
    assert!(ok[0].id.ends_with("petersen.g6:1"));
}

#[test]
fn non_cubic_lines_are_rejected() {
    let text = "IheA@GUAo\nD~{\nnot graph6 \u{1}\nIheA@GUAo\n";
    let (ok, bad) = ingest_text("mixed", text, Format::Graph6);
    assert_eq!(ok.iter().map(|e| e.id.as_str()).collect::<Vec<_>>(), ["mixed:1", "mixed:4"]);
    assert_eq!(bad.iter().map(|e| e.id.as_str()).collect::<Vec<_>>(), ["mixed:2", "mixed:3"]);
}

#[test]
fn constructed_families_round_trip() {
    for &f in Family::ALL {
        let g = build(&FamilySpec::canonical(f).unwrap()).unwrap();
        let mp = to_mp(&g).unwrap();
        let (ok, bad) = ingest_text("x", &mp, Format::Mp);
        if !g.is_graph() {
            assert_eq!((ok.len(), bad.len()), (0, 1), "{}", f.name());
            continue;
        }
        assert!(is_isomorphic(&ok[0].graph, &g), "{}", f.name());
        match to_graph6(&g) {
            Ok(g6) => {
                let (ok, _) = ingest_text("x", &g6, Format::Graph6);
                assert!(is_isomorphic(&ok[0].graph, &g), "{}", f.name());
            }
            Err(_) => assert!(snarkmorph::structure::girth(&g).unwrap_or(0) <= 2, "{}", f.name()),
        }
    }
}

fn classify_family(cl: &Classifier, f: &str) -> ClassificationRecord {
    let g = build(&FamilySpec::parse(f, None).unwrap()).unwrap();
    cl.classify(f, &g).unwrap()
}

#[test]
fn classification_examples() {
    let cl = Classifier::new().unwrap();
    let l = classify_family(&cl, "LOUPEKINE(1)");
    assert!(l.classes.contains(&"NN substitution".to_string()));
    assert!(l.substructures.iter().any(|s| s.pattern == "P_NN"));
    assert_eq!(l.grade, CriticalityGrade::Bicritical);
    let d = classify_family(&cl, "DOUBLE_STAR");
    assert_eq!(d.girth, Some(6));
    assert!(d.clusters.is_empty());
    assert!(d.classes.contains(&"superpentagon".to_string()));
    let j = classify_family(&cl, "FLOWER_J(9)");
    assert!(j.classes.contains(&"Isaacs flower".to_string()));
    assert_eq!(j.cyclic_connectivity, Some(6));
    let k4 = cl.classify("k4", &snarkmorph::constructions::k4()).unwrap();
    assert_eq!(k4.grade, CriticalityGrade::NotSnark);
    assert!(!k4.unexplained && k4.classes.is_empty());
}

#[test]
fn class_instances_classify_into_their_class() {
    let cl = Classifier::new().unwrap();
    for (f, label) in [
        ("NNN", "NN substitution"),
        ("CLASS_32A", "32-A"),
        ("CLASS_34A", "34-A"),
        ("CLASS_34D", "34-D"),
        ("CLASS_34F", "34-F"),
        ("CLASS_36A", "36-A"),
        ("STRICT_TTT", "strict TTT"),
    ] {
        let r = classify_family(&cl, f);
        assert!(r.classes.contains(&label.to_string()), "{f}: {:?}", r.classes);
        assert!(!r.unexplained);
    }
}

#[test]
fn pattern_premises_are_rechecked() {
    let cl = Classifier::new().unwrap();
    let r = classify_family(&cl, "CLASS_36A");
    assert!(r.substructures.iter().any(|s| s.pattern == "M_24"));
    let r = classify_family(&cl, "CLASS_34F");
    assert!(r.substructures.iter().any(|s| s.pattern == "H_M"));
}

#[test]
fn table1_rows() {
    let cl = Classifier::new().unwrap();
    let (entries, _) = ingest(&data("catalog.g6"), None).unwrap();
    let recs: Vec<_> = cl.classify_all(&entries).into_iter().map(Result::unwrap).collect();
    let t = table1(&recs);
    assert_eq!(t[&10], [0, 1, 0]);
    assert_eq!(t[&20], [0, 1, 0]);
    assert_eq!(t[&22], [0, 2, 0]);
    assert_eq!(t[&18], [2, 0, 0]);
    let text = report(&recs, ReportKind::Table1);
    assert!(text.lines().any(|l| l.split_whitespace().collect::<Vec<_>>() == ["22", "0", "2", "0", "2"]));
    let again: Vec<_> = cl.classify_all(&entries).into_iter().map(Result::unwrap).collect();
    assert_eq!(report(&recs, ReportKind::Json), report(&again, ReportKind::Json));
    let back: Vec<ClassificationRecord> = serde_json::from_str(&report(&recs, ReportKind::Json)).unwrap();
    assert_eq!(back, recs);
}

#[test]
fn empty_reports() {
    for k in [ReportKind::Table1, ReportKind::Table2, ReportKind::Table34, ReportKind::Json] {
        let _ = report(&[], k);
    }
    assert!(table1(&[]).is_empty() && table2(&[]).is_empty());
}

#[test]
fn filters() {
    let cl = Classifier::new().unwrap();
    let (entries, _) = ingest(&data("catalog.g6"), None).unwrap();
    let recs: Vec<_> = cl.classify_all(&entries).into_iter().map(Result::unwrap).collect();
    assert_eq!(filter_records(recs.clone(), Some(5), None).len(), 6);
    assert_eq!(filter_records(recs, None, parse_grade("bicritical")).len(), 8);
}

#[test]
fn exit_codes() {
    let out = bin().args(["construct", "NNN", "--parts", "dyad,dyad,dyad", "--emit", "g6", "--verify"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let g6 = String::from_utf8(out.stdout).unwrap();
    assert_eq!(g6.lines().count(), 1);
    let out = bin().args(["construct", "NO_SUCH"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin().args(["grade", "/nonexistent/file.g6"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin().args(["cc", &data("petersen.g6")]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().trim().ends_with(" 5"));
    let out = bin().args(["iso", &data("petersen.g6"), &data("catalog.g6")]).output().unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "isomorphic");
    let out = bin().env("SNARKMORPH_THREADS", "1").args(["report", &data("catalog.g6"), "--template", "table1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
}
