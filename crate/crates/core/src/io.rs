//! Text formats: edge lists, graph6, rotation files and list files.
//!
//! Edge list: first line `n m`, then `m` lines `u v` (0-based). `#` starts a
//! comment. A file whose first line is `>>graph6<<...` or a bare graph6 token
//! is decoded as graph6.

use crate::embedding::RotationSystem;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::listcolor::{Color, ListAssignment};

const GRAPH6_HEADER: &str = ">>graph6<<";

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn looks_like_graph6(token: &str) -> bool {
    !token.is_empty()
        && !token.contains(char::is_whitespace)
        && token.bytes().all(|b| (63..=126).contains(&b))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, strip_comment(l)))
        .filter(|(_, l)| !l.is_empty());
    let (first_no, first) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    if let Some(rest) = first.strip_prefix(GRAPH6_HEADER) {
        return decode_graph6(rest.trim()).map_err(|m| parse_err(first_no, m));
    }
    let header: Vec<&str> = first.split_whitespace().collect();
    let ints: Option<Vec<usize>> = header.iter().map(|t| t.parse().ok()).collect();
    let (n, m) = match ints.as_deref() {
        Some([n, m]) => (*n, *m),
        _ if header.len() == 1 && looks_like_graph6(first) => {
            return decode_graph6(first).map_err(|m| parse_err(first_no, m));
        }
        _ => return Err(parse_err(first_no, "expected header `n m`")),
    };
    let mut edges = Vec::with_capacity(m);
    for (no, line) in lines {
        let nums: Vec<&str> = line.split_whitespace().collect();
        let (u, v) = match nums.as_slice() {
            [a, b] => (
                a.parse::<usize>().map_err(|_| parse_err(no, "bad vertex"))?,
                b.parse::<usize>().map_err(|_| parse_err(no, "bad vertex"))?,
            ),
            _ => return Err(parse_err(no, "expected `u v`")),
        };
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(parse_err(first_no, format!("header promises {m} edges, found {}", edges.len())));
    }
    Graph::from_edges(n, &edges)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn decode_graph6(s: &str) -> std::result::Result<Graph, String> {
    let bytes: Vec<u8> = s.trim().bytes().collect();
    if bytes.iter().any(|b| !(63..=126).contains(b)) {
        return Err("invalid graph6 character".into());
    }
    let vals: Vec<u32> = bytes.iter().map(|&b| (b - 63) as u32).collect();
    let (n, rest) = match vals.as_slice() {
        [] => return Err("empty graph6 string".into()),
        [63, 63, r @ ..] if r.len() >= 6 => {
            let n = r[..6].iter().fold(0u64, |a, &x| (a << 6) | x as u64);
            (n as usize, &r[6..])
        }
        [63, r @ ..] if r.len() >= 3 => {
            let n = r[..3].iter().fold(0u32, |a, &x| (a << 6) | x);
            (n as usize, &r[3..])
        }
        [n, r @ ..] if *n < 63 => (*n as usize, r),
        _ => return Err("truncated graph6 size".into()),
    };
    let needed_bits = n * n.saturating_sub(1) / 2;
    if rest.len() * 6 < needed_bits {
        return Err("truncated graph6 adjacency".into());
    }
    let bit = |k: usize| (rest[k / 6] >> (5 - k % 6)) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges).map_err(|e| e.to_string())
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n < 258048 {
        out.push(126);
        for sh in [12, 6, 0] {
            out.push(((n >> sh) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for sh in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> sh) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// Parses `v: a b c ...` lines into per-vertex sequences. Vertices that do not
/// appear get an empty sequence.
fn parse_vertex_lines(text: &str, n: usize) -> Result<Vec<Vec<usize>>> {
    let mut out = vec![Vec::new(); n];
    let mut seen = vec![false; n];
    for (i, raw) in text.lines().enumerate() {
        let no = i + 1;
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        let (head, tail) = line
            .split_once(':')
            .ok_or_else(|| parse_err(no, "expected `v: ...`"))?;
        let v: usize = head.trim().parse().map_err(|_| parse_err(no, "bad vertex"))?;
        if v >= n {
            return Err(parse_err(no, format!("vertex {v} out of range")));
        }
        if seen[v] {
            return Err(parse_err(no, format!("vertex {v} listed twice")));
        }
        seen[v] = true;
        out[v] = tail
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| parse_err(no, "bad entry")))
            .collect::<Result<_>>()?;
    }
    Ok(out)
}

pub fn parse_rotation(text: &str, n: usize) -> Result<RotationSystem> {
    Ok(RotationSystem::new(parse_vertex_lines(text, n)?))
}

pub fn write_rotation(rot: &RotationSystem) -> String {
    let mut out = String::new();
    for v in 0..rot.vertex_count() {
        let r: Vec<String> = rot.rotation(v).iter().map(|x| x.to_string()).collect();
        out.push_str(&format!("{v}: {}\n", r.join(" ")));
    }
    out
}

pub fn parse_lists(text: &str, n: usize) -> Result<ListAssignment> {
    let raw = parse_vertex_lines(text, n)?;
    Ok(ListAssignment::new(
        raw.into_iter()
            .map(|l| l.into_iter().map(|c| c as Color).collect())
            .collect(),
    ))
}

pub fn write_lists(lists: &ListAssignment) -> String {
    let mut out = String::new();
    for v in 0..lists.len() {
        let r: Vec<String> = lists.list(v).iter().map(|x| x.to_string()).collect();
        out.push_str(&format!("{v}: {}\n", r.join(" ")));
    }
    out
}
