//! Text formats. Vertices are 1-indexed on disk; lines starting with `#` and
//! blank lines are ignored. Serializers emit single spaces and LF endings.
//!
//! ```text
//! p dsr <n> <m> <k> <s>      p edge <n> <m>      p vcr <n> <m> <k> <s>
//! e <u> <v>                  e <u> <v>           e <u> <v>
//! d <v1> <v2> ...                                d <v1> <v2> ...
//! ```
//!
//! Sequences are one `+ <v>` or `- <v>` per line; interval models are one
//! `<id> <left> <right>` per vertex.

use std::fmt::Write;

use crate::classes::IntervalModel;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::oracle::VcrInstance;
use crate::tar::{Instance, Move, TarSequence};

/// Non-comment lines with their 1-based line numbers.
fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            None
        } else {
            Some((i + 1, line.split_whitespace().collect()))
        }
    })
}

fn number<T: std::str::FromStr>(line: usize, tok: &str) -> Result<T> {
    tok.parse().map_err(|_| Error::parse(line, format!("expected a number, found `{tok}`")))
}

fn vertex(line: usize, tok: &str, n: usize) -> Result<usize> {
    let v: usize = number(line, tok)?;
    if v == 0 || v > n {
        return Err(Error::parse(line, format!("vertex {v} outside 1..={n}")));
    }
    Ok(v - 1)
}

fn at_line(line: usize) -> impl Fn(Error) -> Error {
    move |e| match e {
        Error::Parse { .. } => e,
        other => Error::parse(line, other.to_string()),
    }
}

struct Parsed {
    params: Vec<usize>,
    graph: Graph,
    set: Option<VertexSet>,
    last_line: usize,
}

/// Shared grammar: header `p <kind> n m <extra...>`, `m` edge lines, and an
/// optional `d` line when `with_set`.
fn parse_common(text: &str, kind: &str, extra: usize, with_set: bool) -> Result<Parsed> {
    let mut it = lines(text);
    let (hl, header) = it.next().ok_or_else(|| Error::parse(1, "missing header"))?;
    if header.len() != 4 + extra || header[0] != "p" || header[1] != kind {
        return Err(Error::parse(
            hl,
            format!("expected header `p {kind} <n> <m>{}`", " <..>".repeat(extra)),
        ));
    }
    let n: usize = number(hl, header[2])?;
    let m: usize = number(hl, header[3])?;
    let params = header[4..].iter().map(|t| number(hl, t)).collect::<Result<Vec<usize>>>()?;
    let mut graph = Graph::new(n);
    let mut edges = 0;
    let mut set = None;
    let mut last_line = hl;
    for (ln, toks) in it {
        last_line = ln;
        if set.is_some() {
            return Err(Error::parse(ln, "unexpected line after the `d` line"));
        }
        match toks[0] {
            "e" => {
                if toks.len() != 3 {
                    return Err(Error::parse(ln, "expected `e <u> <v>`"));
                }
                let u = vertex(ln, toks[1], n)?;
                let v = vertex(ln, toks[2], n)?;
                if !graph.add_edge(u, v).map_err(at_line(ln))? {
                    return Err(Error::parse(ln, format!("duplicate edge {} {}", u + 1, v + 1)));
                }
                edges += 1;
            }
            "d" if with_set => {
                let vs = toks[1..].iter().map(|t| vertex(ln, t, n)).collect::<Result<Vec<_>>>()?;
                let s: VertexSet = vs.iter().copied().collect();
                if s.len() != vs.len() {
                    return Err(Error::parse(ln, "repeated vertex in the `d` line"));
                }
                set = Some(s);
            }
            other => return Err(Error::parse(ln, format!("unknown line type `{other}`"))),
        }
    }
    if edges != m {
        return Err(Error::parse(last_line, format!("header announces {m} edges, found {edges}")));
    }
    if with_set && set.is_none() {
        return Err(Error::parse(last_line, "missing `d` line"));
    }
    Ok(Parsed { params, graph, set, last_line })
}

fn write_edges(out: &mut String, g: &Graph) {
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
}

fn write_set(out: &mut String, tag: &str, s: &VertexSet) {
    out.push_str(tag);
    for v in s {
        write!(out, " {}", v + 1).unwrap();
    }
    out.push('\n');
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    Ok(parse_common(text, "edge", 0, false)?.graph)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    write_edges(&mut out, g);
    out
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let p = parse_common(text, "dsr", 2, true)?;
    Instance::new(p.graph, p.params[0], p.params[1], p.set.expect("checked"))
        .map_err(at_line(p.last_line))
}

pub fn write_instance(inst: &Instance) -> String {
    let g = &inst.graph;
    let mut out = format!("p dsr {} {} {} {}\n", g.n(), g.m(), inst.k, inst.s);
    write_edges(&mut out, g);
    write_set(&mut out, "d", &inst.start);
    out
}

pub fn parse_vcr_instance(text: &str) -> Result<VcrInstance> {
    let p = parse_common(text, "vcr", 2, true)?;
    VcrInstance::new(p.graph, p.params[0], p.params[1], p.set.expect("checked"))
        .map_err(at_line(p.last_line))
}

pub fn write_vcr_instance(inst: &VcrInstance) -> String {
    let g = &inst.graph;
    let mut out = format!("p vcr {} {} {} {}\n", g.n(), g.m(), inst.k, inst.s);
    write_edges(&mut out, g);
    write_set(&mut out, "d", &inst.start);
    out
}

/// Moves are checked against `n` only; legality is up to the validator.
pub fn parse_sequence(text: &str, n: usize) -> Result<TarSequence> {
    lines(text)
        .map(|(ln, toks)| {
            if toks.len() != 2 {
                return Err(Error::parse(ln, "expected `+ <v>` or `- <v>`"));
            }
            let v = vertex(ln, toks[1], n)?;
            match toks[0] {
                "+" => Ok(Move::add(v)),
                "-" => Ok(Move::remove(v)),
                other => Err(Error::parse(ln, format!("unknown move `{other}`"))),
            }
        })
        .collect()
}

pub fn write_sequence(seq: &TarSequence) -> String {
    let mut out = String::new();
    for m in seq.iter() {
        let sign = match m.kind {
            crate::tar::MoveKind::Add => '+',
            crate::tar::MoveKind::Remove => '-',
        };
        writeln!(out, "{sign} {}", m.vertex + 1).unwrap();
    }
    out
}

/// Each id in `1..=n` must appear exactly once, in any order.
pub fn parse_interval_model(text: &str) -> Result<IntervalModel> {
    let rows: Vec<(usize, Vec<&str>)> = lines(text).collect();
    let n = rows.len();
    let mut intervals = vec![None; n];
    for (ln, toks) in rows {
        if toks.len() != 3 {
            return Err(Error::parse(ln, "expected `<id> <left> <right>`"));
        }
        let v = vertex(ln, toks[0], n)?;
        let l: i64 = number(ln, toks[1])?;
        let r: i64 = number(ln, toks[2])?;
        if l > r {
            return Err(Error::parse(ln, format!("left endpoint {l} above right endpoint {r}")));
        }
        if intervals[v].replace((l, r)).is_some() {
            return Err(Error::parse(ln, format!("vertex {} listed twice", v + 1)));
        }
    }
    IntervalModel::new(intervals.into_iter().map(|i| i.expect("ids are a permutation")).collect())
}

pub fn write_interval_model(model: &IntervalModel) -> String {
    let mut out = String::new();
    for (v, (l, r)) in model.intervals().iter().enumerate() {
        writeln!(out, "{} {l} {r}", v + 1).unwrap();
    }
    out
}
