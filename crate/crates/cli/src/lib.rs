//! Batch classification of cubic graphs: metrics, 5-cycle clusters, pattern
//! detection, criticality and class assignment, plus table rendering.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use snarkmorph::constructions::{self as cons, Family, FamilySpec};
use snarkmorph::criticality::{grade, CriticalityGrade};
use snarkmorph::multipole::format::{parse_graph6, parse_mp_many};
use snarkmorph::structure::{
    canonical_form, find_submultipole, five_cycle_clusters, five_cycles, girth, superpentagon_sides, Embedding,
};
use snarkmorph::tait::{closed, colouring_set, ColouringSet};
use snarkmorph::{Error, Multipole, Result};
use std::collections::BTreeMap;
use std::fmt::Write as _;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Graph6,
    Mp,
}

impl Format {
    pub fn parse(s: &str) -> Option<Format> {
        match s {
            "g6" | "graph6" => Some(Format::Graph6),
            "mp" => Some(Format::Mp),
            _ => None,
        }
    }

    /// Guess from the file extension; graph6 otherwise.
    pub fn guess(path: &str) -> Format {
        if path.ends_with(".mp") {
            Format::Mp
        } else {
            Format::Graph6
        }
    }
}

/// A parsed input graph with its stable id `<file>:<line>`.
#[derive(Clone, Debug)]
pub struct Entry {
    pub id: String,
    pub graph: Multipole,
}

/// A rejected input line.
#[derive(Clone, Debug)]
pub struct Rejected {
    pub id: String,
    pub error: Error,
}

/// Parse a corpus. Entries that are not connected cubic graphs are rejected
/// individually.
pub fn ingest_text(name: &str, text: &str, format: Format) -> (Vec<Entry>, Vec<Rejected>) {
    let items: Vec<(usize, Result<Multipole>)> = match format {
        Format::Graph6 => text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'))
            .map(|(i, l)| (i + 1, parse_graph6(l)))
            .collect(),
        Format::Mp => parse_mp_many(text),
    };
    let mut ok = Vec::new();
    let mut bad = Vec::new();
    for (line, r) in items {
        let id = format!("{name}:{line}");
        match r.and_then(|g| {
            if !g.is_graph() {
                Err(Error::Precondition("entry has semiedges".into()))
            } else if !g.is_connected() {
                Err(Error::Precondition("graph is disconnected".into()))
            } else {
                Ok(g)
            }
        }) {
            Ok(graph) => ok.push(Entry { id, graph }),
            Err(error) => bad.push(Rejected { id, error }),
        }
    }
    (ok, bad)
}

pub fn ingest(path: &str, format: Option<Format>) -> std::io::Result<(Vec<Entry>, Vec<Rejected>)> {
    let text = std::fs::read_to_string(path)?;
    Ok(ingest_text(path, &text, format.unwrap_or_else(|| Format::guess(path))))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Substructure {
    pub pattern: String,
    pub embeddings: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationRecord {
    pub id: String,
    pub order: usize,
    pub girth: Option<usize>,
    pub cyclic_connectivity: Option<usize>,
    pub colourings: u64,
    pub grade: CriticalityGrade,
    pub clusters: BTreeMap<String, usize>,
    pub substructures: Vec<Substructure>,
    pub classes: Vec<String>,
    pub unexplained: bool,
}

/// A pattern searched for as an induced submultipole, with the class it
/// indicates and the colouring-set premise the class argument relies on.
pub struct Template {
    pub pattern_name: &'static str,
    pub class: &'static str,
    pub pattern: Multipole,
    pub premise: ColouringSet,
    five_cycles: usize,
}

impl Template {
    fn new(pattern_name: &'static str, class: &'static str, pattern: Multipole, premise: ColouringSet) -> Self {
        let five_cycles = five_cycles(&pattern).len();
        Template { pattern_name, class, pattern, premise, five_cycles }
    }
}

/// Read-only data shared by all classifications.
pub struct Classifier {
    templates: Vec<Template>,
    /// Canonical codes of named snarks and class representatives.
    named: Vec<(usize, Vec<u32>, &'static str)>,
}

impl Default for Classifier {
    fn default() -> Self {
        Self::new().expect("built-in templates")
    }
}

impl Classifier {
    pub fn new() -> Result<Self> {
        let (d, t) = (cons::dyad(), cons::triad());
        let hx = cons::hexagon();
        let m24 = cons::m24([&d, &d, &d], &Family::Class36A.canonical_alignment())?;
        let m24set = colouring_set(&m24)?;
        let strict = cons::strict_pole([&t, &t, &t], &Family::StrictTtt.canonical_alignment())?;
        let templates = vec![
            Template::new("P_NN", "NN substitution", cons::nn(&d, &d)?, closed::p2()),
            Template::new("P_NT", "NT substitution", cons::nt(&d, &t)?, closed::m_ev()),
            Template::new("P_TT", "TT substitution", cons::tt(&t, &t)?, closed::p2()),
            Template::new("P_TTT", "TTT substitution", cons::ttt(&t, &t, &t)?, closed::v4()),
            Template::new("P_3NT", "3NT substitution", cons::three_nt(&d, &d, &d, &t)?, closed::m7()),
            Template::new("M_24", "36-A", m24, m24set),
            Template::new(
                "H_M",
                "34-F",
                cons::h_m(&[hx.clone(), hx.clone(), hx.clone(), hx.clone(), hx], [false; 6])?,
                closed::even222(),
            ),
            Template::new("strict (2,2,2)-pole", "strict TTT", strict, closed::v4()),
        ];
        let mut named = Vec::new();
        let mut add = |g: Multipole, label: &'static str| {
            named.push((g.order(), canonical_form(&g).code, label));
        };
        add(cons::petersen(), "Petersen");
        for k in [1, 2] {
            add(cons::loupekine(k)?, "Loupekine");
        }
        for b in [cons::Blanusa::Type1, cons::Blanusa::Type2] {
            add(cons::blanusa(b)?.graph, "Blanusa");
        }
        add(cons::double_star()?, "double star");
        let classes = [
            (Family::Class32A, "32-A"),
            (Family::Class34A, "34-A"),
            (Family::Class34B, "34-B"),
            (Family::Class34C, "34-C"),
            (Family::Class34D, "34-D"),
            (Family::Class34E, "34-E"),
            (Family::Class34F, "34-F"),
            (Family::Class36A, "36-A"),
            (Family::Class36B, "36-B"),
            (Family::Class38A, "38-A"),
            (Family::Class42A, "42-A"),
            (Family::StrictTtt, "strict TTT"),
        ];
        for (f, label) in classes {
            add(cons::build(&FamilySpec::canonical(f)?)?, label);
        }
        Ok(Classifier { templates, named })
    }

    pub fn templates(&self) -> &[Template] {
        &self.templates
    }

    pub fn classify(&self, id: &str, g: &Multipole) -> Result<ClassificationRecord> {
        if !g.is_graph() {
            return Err(Error::Precondition("classification needs a cubic graph".into()));
        }
        let gr = grade(g)?;
        let report = five_cycle_clusters(g);
        let mut clusters = BTreeMap::new();
        for (c, n) in report.census() {
            *clusters.entry(c.map_or("other", |c| c.name()).to_string()).or_insert(0) += n;
        }
        let mut rec = ClassificationRecord {
            id: id.to_string(),
            order: g.order(),
            girth: girth(g),
            cyclic_connectivity: report.cyclic_connectivity,
            colourings: gr.colourings,
            grade: gr.grade,
            clusters,
            substructures: Vec::new(),
            classes: Vec::new(),
            unexplained: false,
        };
        if gr.grade == CriticalityGrade::NotSnark {
            return Ok(rec);
        }
        let host_cycles = five_cycles(g).len();
        for t in &self.templates {
            // cheap filters before the subgraph search
            if t.pattern.order() >= g.order() || t.five_cycles > host_cycles {
                continue;
            }
            let embs = find_submultipole(g, &t.pattern)?;
            let mut ok = 0;
            for e in &embs {
                if premise_holds(g, t, e)? {
                    ok += 1;
                }
            }
            if ok > 0 {
                rec.substructures.push(Substructure { pattern: t.pattern_name.into(), embeddings: ok });
                rec.classes.push(t.class.into());
            }
        }
        if rec.cyclic_connectivity.is_some_and(|c| c >= 5) {
            let sp = superpentagon_sides(g)?;
            if !sp.is_empty() {
                rec.substructures.push(Substructure { pattern: "superpentagon".into(), embeddings: sp.len() });
                rec.classes.push("superpentagon".into());
            }
        }
        if let Some(n) = flower_index(g) {
            rec.substructures.push(Substructure { pattern: format!("Y_{n}"), embeddings: 1 });
            rec.classes.push("Isaacs flower".into());
        }
        if rec.cyclic_connectivity.is_some_and(|c| c <= 4) && rec.grade != CriticalityGrade::SnarkTrivial {
            rec.classes.push("dot product".into());
        }
        let code = canonical_form(g).code;
        for (n, c, label) in &self.named {
            if *n == g.order() && *c == code {
                rec.classes.push((*label).into());
            }
        }
        rec.classes.sort();
        rec.classes.dedup();
        rec.unexplained = rec.classes.is_empty();
        Ok(rec)
    }

    /// Classify in parallel; output order follows input order.
    pub fn classify_all(&self, entries: &[Entry]) -> Vec<Result<ClassificationRecord>> {
        entries.par_iter().map(|e| self.classify(&e.id, &e.graph)).collect()
    }
}

/// The embedded copy as a multipole with the pattern's connectors, so its
/// colouring set can be compared with the premise position by position.
fn premise_holds(host: &Multipole, t: &Template, e: &Embedding) -> Result<bool> {
    let p = &t.pattern;
    let mut local = vec![usize::MAX; host.order()];
    for (i, &v) in e.vertices.iter().enumerate() {
        local[v] = i;
    }
    let links = p.links().to_vec();
    let mut dangling = Vec::new();
    for &(v, s) in p.dangling() {
        let Some(l) = e.semiedges[s] else { return Ok(false) };
        let (a, b) = host.links()[l];
        let inside = if local[a] == v { a } else if local[b] == v { b } else { return Ok(false) };
        dangling.push((local[inside], s));
    }
    let side = Multipole::from_parts(p.order(), links, dangling, p.isolated().to_vec(), 0, p.connectors().to_vec())?;
    Ok(colouring_set(&side)?.is_subset_of(&t.premise))
}

/// `n` when `g` is the flower snark J_n.
fn flower_index(g: &Multipole) -> Option<usize> {
    let n = g.order() / 4;
    if !g.order().is_multiple_of(4) || n < 3 || g.order() > 60 {
        return None;
    }
    let j = cons::flower(n).ok()?;
    (canonical_form(&j).code == canonical_form(g).code).then_some(n)
}

/// Keep records passing the cyclic-connectivity and grade filters.
pub fn filter_records(
    recs: Vec<ClassificationRecord>,
    min_cc: Option<usize>,
    grade: Option<CriticalityGrade>,
) -> Vec<ClassificationRecord> {
    recs.into_iter()
        .filter(|r| min_cc.is_none_or(|m| r.cyclic_connectivity.is_none_or(|c| c >= m)))
        .filter(|r| grade.is_none_or(|g| r.grade == g))
        .collect()
}

pub fn parse_grade(s: &str) -> Option<CriticalityGrade> {
    use CriticalityGrade::*;
    [NotSnark, SnarkTrivial, CriticalStrict, Bicritical, NoncriticalSnark].into_iter().find(|g| g.name() == s)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportKind {
    Table1,
    Table2,
    Table34,
    Json,
}

impl ReportKind {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "table1" => Some(ReportKind::Table1),
            "table2" => Some(ReportKind::Table2),
            "table34" => Some(ReportKind::Table34),
            "json" => Some(ReportKind::Json),
            _ => None,
        }
    }
}

/// Critical snarks per order, split by cyclic connectivity 4, 5 and at least 6.
pub fn table1(recs: &[ClassificationRecord]) -> BTreeMap<usize, [usize; 3]> {
    let mut t: BTreeMap<usize, [usize; 3]> = BTreeMap::new();
    for r in recs.iter().filter(|r| r.grade.is_critical()) {
        let col = match r.cyclic_connectivity {
            Some(4) => 0,
            Some(5) => 1,
            Some(c) if c >= 6 => 2,
            None => 2,
            _ => continue,
        };
        t.entry(r.order).or_default()[col] += 1;
    }
    t
}

/// Class counts per order; a record counts once in each of its classes.
pub fn table2(recs: &[ClassificationRecord]) -> BTreeMap<String, BTreeMap<usize, usize>> {
    let mut t: BTreeMap<String, BTreeMap<usize, usize>> = BTreeMap::new();
    for r in recs {
        let labels: Vec<String> = if r.unexplained { vec!["unexplained".into()] } else { r.classes.clone() };
        for c in labels {
            *t.entry(c).or_default().entry(r.order).or_default() += 1;
        }
    }
    t
}

pub fn report(recs: &[ClassificationRecord], template: ReportKind) -> String {
    let mut s = String::new();
    match template {
        ReportKind::Json => {
            s = serde_json::to_string_pretty(recs).expect("serialisable");
            s.push('\n');
        }
        ReportKind::Table1 => {
            let _ = writeln!(s, "{:>5} {:>6} {:>6} {:>6} {:>6}", "order", "cc=4", "cc=5", "cc>=6", "total");
            for (n, row) in table1(recs) {
                let total: usize = row.iter().sum();
                let _ = writeln!(s, "{n:>5} {:>6} {:>6} {:>6} {total:>6}", row[0], row[1], row[2]);
            }
        }
        ReportKind::Table2 => {
            let t = table2(recs);
            let mut orders: Vec<usize> = recs.iter().map(|r| r.order).collect();
            orders.sort_unstable();
            orders.dedup();
            let _ = write!(s, "{:<20}", "class");
            for n in &orders {
                let _ = write!(s, " {n:>5}");
            }
            s.push('\n');
            for (c, row) in &t {
                let _ = write!(s, "{c:<20}");
                for n in &orders {
                    let _ = write!(s, " {:>5}", row.get(n).copied().unwrap_or(0));
                }
                s.push('\n');
            }
        }
        ReportKind::Table34 => {
            let rs: Vec<ClassificationRecord> = recs.iter().filter(|r| r.order == 34).cloned().collect();
            let t = table2(&rs);
            let _ = writeln!(s, "{:<20} {:>6}", "structure", "count");
            for (c, row) in &t {
                let _ = writeln!(s, "{c:<20} {:>6}", row.values().sum::<usize>());
            }
            let _ = writeln!(s, "{:<20} {:>6}", "total", rs.len());
        }
    }
    s
}

/// Worker count from `SNARKMORPH_THREADS`, if set to a positive number.
pub fn configured_threads() -> Option<usize> {
    std::env::var("SNARKMORPH_THREADS").ok()?.trim().parse().ok().filter(|&n| n > 0)
}
