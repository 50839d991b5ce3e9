use clap::{Parser, Subcommand};
use snarkmorph::constructions::{build, verify_family_uncolourable, FamilySpec};
use snarkmorph::criticality::grade;
use snarkmorph::multipole::format::{parse_mp, to_graph6, to_mp};
use snarkmorph::structure::{cyclic_connectivity, five_cycle_clusters, is_isomorphic};
use snarkmorph::tait::colouring_set;
use snarkmorph::Error;
use snarkmorph_cli::*;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "snarkmorph", version, about = "Structure and classification of snarks")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse a corpus and list what was accepted.
    Ingest {
        file: String,
        #[arg(long)]
        format: Option<String>,
    },
    /// Classify every graph of a corpus and write JSON records.
    Classify {
        file: String,
        #[arg(long)]
        format: Option<String>,
        #[arg(long)]
        min_cc: Option<usize>,
        #[arg(long)]
        grade: Option<String>,
        #[arg(long)]
        out: Option<String>,
    },
    /// Render a report from a corpus or from JSON records.
    Report {
        file: String,
        #[arg(long, default_value = "table2")]
        template: String,
        #[arg(long)]
        format: Option<String>,
    },
    /// Build a family member, e.g. `construct NNN --parts dyad,dyad,dyad`.
    Construct {
        family: String,
        #[arg(long)]
        parts: Option<String>,
        /// g6, mp or both
        #[arg(long, default_value = "both")]
        emit: String,
        /// Replay the uncolourability argument as well.
        #[arg(long)]
        verify: bool,
    },
    /// Colouring set of a multipole in interchange format.
    Colset { file: String },
    Grade {
        file: String,
        #[arg(long)]
        format: Option<String>,
    },
    Cc {
        file: String,
        #[arg(long)]
        format: Option<String>,
    },
    Clusters {
        file: String,
        #[arg(long)]
        format: Option<String>,
    },
    /// Compare the first graphs of two files.
    Iso { a: String, b: String },
}

enum Fail {
    Input(String),
    Verify(String),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        match e {
            Error::Verification(m) => Fail::Verify(m),
            e => Fail::Input(e.to_string()),
        }
    }
}

fn fmt_arg(f: &Option<String>) -> Result<Option<Format>, Fail> {
    match f {
        None => Ok(None),
        Some(s) => Format::parse(s).map(Some).ok_or_else(|| Fail::Input(format!("unknown format `{s}`"))),
    }
}

fn load(file: &str, format: &Option<String>) -> Result<Vec<Entry>, Fail> {
    let (ok, bad) = ingest(file, fmt_arg(format)?).map_err(|e| Fail::Input(format!("{file}: {e}")))?;
    for r in &bad {
        eprintln!("{}: rejected: {}", r.id, r.error);
    }
    Ok(ok)
}

fn first(file: &str) -> Result<Entry, Fail> {
    load(file, &None)?.into_iter().next().ok_or_else(|| Fail::Input(format!("{file}: no graph")))
}

fn records(cl: &Classifier, entries: &[Entry]) -> Result<Vec<ClassificationRecord>, Fail> {
    cl.classify_all(entries).into_iter().map(|r| r.map_err(Fail::from)).collect()
}

fn json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serialisable")
}

fn run(cli: Cli) -> Result<(), Fail> {
    match cli.cmd {
        Cmd::Ingest { file, format } => {
            for e in load(&file, &format)? {
                println!("{} order={}", e.id, e.graph.order());
            }
        }
        Cmd::Classify { file, format, min_cc, grade, out } => {
            let g = match grade {
                None => None,
                Some(s) => Some(parse_grade(&s).ok_or_else(|| Fail::Input(format!("unknown grade `{s}`")))?),
            };
            let entries = load(&file, &format)?;
            let recs = filter_records(records(&Classifier::new()?, &entries)?, min_cc, g);
            let text = report(&recs, ReportKind::Json);
            match out {
                Some(path) => std::fs::write(&path, text).map_err(|e| Fail::Input(format!("{path}: {e}")))?,
                None => print!("{text}"),
            }
        }
        Cmd::Report { file, template, format } => {
            let kind = ReportKind::parse(&template).ok_or_else(|| Fail::Input(format!("unknown template `{template}`")))?;
            let recs: Vec<ClassificationRecord> = if file.ends_with(".json") {
                let text = std::fs::read_to_string(&file).map_err(|e| Fail::Input(format!("{file}: {e}")))?;
                serde_json::from_str(&text).map_err(|e| Fail::Input(format!("{file}: {e}")))?
            } else {
                records(&Classifier::new()?, &load(&file, &format)?)?
            };
            print!("{}", report(&recs, kind));
        }
        Cmd::Construct { family, parts, emit, verify } => {
            let spec = FamilySpec::parse(&family, parts.as_deref())?;
            let m = build(&spec)?;
            if verify {
                let tr = verify_family_uncolourable(&spec)?;
                eprintln!("{}", json(&tr));
            }
            if !matches!(emit.as_str(), "g6" | "mp" | "both") {
                return Err(Fail::Input(format!("unknown emit format `{emit}`")));
            }
            if emit != "mp" && m.is_graph() {
                println!("{}", to_graph6(&m)?);
            }
            if emit != "g6" || !m.is_graph() {
                print!("{}", to_mp(&m)?);
            }
        }
        Cmd::Colset { file } => {
            let text = std::fs::read_to_string(&file).map_err(|e| Fail::Input(format!("{file}: {e}")))?;
            let m = parse_mp(&text)?;
            print!("{}", colouring_set(&m)?.dump());
        }
        Cmd::Grade { file, format } => {
            for e in load(&file, &format)? {
                println!("{} {}", e.id, json(&grade(&e.graph)?));
            }
        }
        Cmd::Cc { file, format } => {
            for e in load(&file, &format)? {
                let c = cyclic_connectivity(&e.graph)?;
                println!("{} {}", e.id, c.map_or("inf".to_string(), |c| c.to_string()));
            }
        }
        Cmd::Clusters { file, format } => {
            for e in load(&file, &format)? {
                println!("{} {}", e.id, json(&five_cycle_clusters(&e.graph)));
            }
        }
        Cmd::Iso { a, b } => {
            let (x, y) = (first(&a)?, first(&b)?);
            println!("{}", if is_isomorphic(&x.graph, &y.graph) { "isomorphic" } else { "not isomorphic" });
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = configured_threads() {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Fail::Input(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Fail::Verify(m)) => {
            eprintln!("verification mismatch: {m}");
            ExitCode::from(3)
        }
    }
}
