//! Text interchange format and graph6.

use super::{Connector, Multipole};
use crate::error::{Error, Result};
use std::fmt::Write as _;

/// Canonical interchange text.
pub fn to_mp(m: &Multipole) -> Result<String> {
    m.check_no_free_loops()?;
    let mut s = String::new();
    let _ = writeln!(s, "MP v={} s={}", m.order(), m.semiedge_count());
    for v in 0..m.order() {
        let _ = writeln!(s, "V {v}");
    }
    for &(u, v) in m.links() {
        let _ = writeln!(s, "L {u} {v}");
    }
    for &(v, sid) in m.dangling() {
        let _ = writeln!(s, "D {v} {sid}");
    }
    for &(a, b) in m.isolated() {
        let _ = writeln!(s, "I {a} {b}");
    }
    for c in m.connectors() {
        let kind = if c.ordered { "ordered" } else { "unordered" };
        let _ = write!(s, "C {} {kind}", c.name);
        for sid in &c.semiedges {
            let _ = write!(s, " {sid}");
        }
        s.push('\n');
    }
    Ok(s)
}

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn num(tok: Option<&str>, line: usize) -> Result<usize> {
    let t = tok.ok_or_else(|| perr(line, "missing number"))?;
    t.parse().map_err(|_| perr(line, format!("bad number `{t}`")))
}

fn header_field(tok: Option<&str>, key: &str, line: usize) -> Result<usize> {
    let t = tok.ok_or_else(|| perr(line, format!("missing {key}=")))?;
    let v = t.strip_prefix(key).and_then(|r| r.strip_prefix('=')).ok_or_else(|| perr(line, format!("expected {key}=")))?;
    v.parse().map_err(|_| perr(line, format!("bad {key} value `{v}`")))
}

/// Parse one multipole in interchange format. Blank lines and `#` comments are
/// ignored.
pub fn parse_mp(text: &str) -> Result<Multipole> {
    let mut header: Option<(usize, usize)> = None;
    let mut nv = 0;
    let mut links = Vec::new();
    let mut dangling = Vec::new();
    let mut isolated = Vec::new();
    let mut connectors = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let l = raw.trim();
        if l.is_empty() || l.starts_with('#') {
            continue;
        }
        let mut it = l.split_whitespace();
        let tag = it.next().unwrap();
        if header.is_none() {
            if tag != "MP" {
                return Err(perr(line, "expected `MP` header"));
            }
            header = Some((header_field(it.next(), "v", line)?, header_field(it.next(), "s", line)?));
            continue;
        }
        match tag {
            "V" => {
                let v = num(it.next(), line)?;
                if v != nv {
                    return Err(perr(line, format!("vertex ids must be consecutive, got {v}")));
                }
                nv += 1;
            }
            "L" => links.push((num(it.next(), line)?, num(it.next(), line)?)),
            "D" => dangling.push((num(it.next(), line)?, num(it.next(), line)?)),
            "I" => isolated.push((num(it.next(), line)?, num(it.next(), line)?)),
            "C" => {
                let name = it.next().ok_or_else(|| perr(line, "missing connector name"))?.to_string();
                let ordered = match it.next() {
                    Some("ordered") => true,
                    Some("unordered") => false,
                    _ => return Err(perr(line, "expected ordered|unordered")),
                };
                let semiedges = it.by_ref().map(|t| t.parse().map_err(|_| perr(line, format!("bad id `{t}`")))).collect::<Result<Vec<usize>>>()?;
                if semiedges.is_empty() {
                    return Err(perr(line, "empty connector"));
                }
                connectors.push(Connector { name, ordered, semiedges });
            }
            "MP" => return Err(perr(line, "second header")),
            t => return Err(perr(line, format!("unknown record `{t}`"))),
        }
        if tag != "C" && it.next().is_some() {
            return Err(perr(line, "trailing tokens"));
        }
    }
    let (v, s) = header.ok_or_else(|| perr(0, "empty input"))?;
    if nv != v {
        return Err(perr(0, format!("header says {v} vertices, found {nv}")));
    }
    if dangling.len() + 2 * isolated.len() != s {
        return Err(perr(0, format!("header says {s} semiedges")));
    }
    Multipole::from_parts(v, links, dangling, isolated, 0, connectors)
}

/// Parse a file holding several multipoles, each starting at an `MP` header.
pub fn parse_mp_many(text: &str) -> Vec<(usize, Result<Multipole>)> {
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    let lines: Vec<&str> = text.lines().collect();
    let flush = |from: usize, to: usize, out: &mut Vec<(usize, Result<Multipole>)>| {
        let chunk = lines[from..to].join("\n");
        let r = parse_mp(&chunk).map_err(|e| match e {
            Error::Parse { line, msg } => Error::Parse { line: if line == 0 { from + 1 } else { from + line }, msg },
            e => e,
        });
        out.push((from + 1, r));
    };
    for (i, l) in lines.iter().enumerate() {
        if l.trim_start().starts_with("MP") {
            if let Some(s) = start {
                flush(s, i, &mut out);
            }
            start = Some(i);
        }
    }
    if let Some(s) = start {
        flush(s, lines.len(), &mut out);
    }
    out
}

/// graph6 encoding of a simple cubic graph.
pub fn to_graph6(g: &Multipole) -> Result<String> {
    if !g.is_graph() {
        return Err(Error::Precondition("graph6 needs a 0-pole".into()));
    }
    g.check_no_free_loops()?;
    let n = g.order();
    let mut adj = vec![false; n * n];
    for &(u, v) in g.links() {
        if u == v || adj[u * n + v] {
            return Err(Error::Precondition("graph6 cannot encode loops or parallel edges".into()));
        }
        adj[u * n + v] = true;
        adj[v * n + u] = true;
    }
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n <= 258047 {
        out.push(126);
        for k in (0..3).rev() {
            out.push(((n >> (6 * k)) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for k in (0..6).rev() {
            out.push(((n >> (6 * k)) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | adj[i * n + j] as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 is ascii"))
}

/// Decode one graph6 line. Non-cubic graphs are rejected.
pub fn parse_graph6(line: &str) -> Result<Multipole> {
    let s = line.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let b = s.as_bytes();
    let bad = |msg: &str| perr(1, msg.to_string());
    if b.is_empty() {
        return Err(bad("empty graph6 string"));
    }
    if b.iter().any(|&x| !(63..=126).contains(&x)) {
        return Err(bad("byte outside graph6 range"));
    }
    let (n, mut pos) = if b[0] != 126 {
        ((b[0] - 63) as usize, 1)
    } else if b.len() >= 2 && b[1] == 126 {
        if b.len() < 8 {
            return Err(bad("truncated size"));
        }
        (b[2..8].iter().fold(0usize, |a, &x| (a << 6) | (x - 63) as usize), 8)
    } else {
        if b.len() < 4 {
            return Err(bad("truncated size"));
        }
        (b[1..4].iter().fold(0usize, |a, &x| (a << 6) | (x - 63) as usize), 4)
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    if b.len() - pos != need {
        return Err(bad(&format!("expected {need} data bytes, found {}", b.len() - pos)));
    }
    let mut links = Vec::new();
    let mut k = 0;
    let mut cur = 0u8;
    for j in 1..n {
        for i in 0..j {
            if k % 6 == 0 {
                cur = b[pos] - 63;
                pos += 1;
            }
            if cur & (1 << (5 - k % 6)) != 0 {
                links.push((i, j));
            }
            k += 1;
        }
    }
    let mut deg = vec![0; n];
    for &(u, v) in &links {
        deg[u] += 1;
        deg[v] += 1;
    }
    if let Some(v) = deg.iter().position(|&d| d != 3) {
        return Err(Error::NotCubic { vertex: v, degree: deg[v] });
    }
    Multipole::graph(n, &links)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Multipole {
        Multipole::graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn graph6_k4() {
        assert_eq!(to_graph6(&k4()).unwrap(), "C~");
        assert_eq!(parse_graph6("C~").unwrap(), k4());
    }

    #[test]
    fn graph6_rejects_non_cubic() {
        // K5 is 4-regular
        assert!(matches!(parse_graph6("D~{"), Err(Error::NotCubic { .. })));
    }

    #[test]
    fn mp_roundtrip() {
        let m = super::super::remove_vertices(&k4(), &[0, 1]).unwrap();
        let t = to_mp(&m).unwrap();
        assert_eq!(parse_mp(&t).unwrap(), m);
        assert!(t.starts_with("MP v=2 s=6\n"));
    }

    #[test]
    fn mp_errors_have_lines() {
        let e = parse_mp("MP v=1 s=0\nV 0\nX 1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }));
    }
}
