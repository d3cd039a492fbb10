//! Line-based text formats for structures and congruences.
//!
//! ```text
//! graph 3 loops        space 2          tcong            gcong
//! e 0 0                open -           block 0 1        block 0
//! e 0 1                open 0           open -           block 1
//!                      open 0,1         open 0,1         edge 0 1
//! ```
//!
//! Blank lines, trailing whitespace and `#` comments are ignored.

use std::fmt::Write as _;

use crate::bits;
use crate::error::CongruenceError;
use crate::graph_congruence::{self as gc, GraphCongruence};
use crate::loopless_congruence as lc;
use crate::structures::{
    validate_space, EdgeSet, FiniteGraph, FiniteSpace, LoopPolicy, SetFamily, StructureError, MAX_SPACE_POINTS,
};
use crate::topo_congruence::{self as tc, TopoCongruence};
use crate::Partition;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IoError {
    #[error("line {line}: {message}")]
    SyntaxError { line: usize, message: String },
    #[error("{0}")]
    SemanticError(String),
    #[error(transparent)]
    Congruence(#[from] CongruenceError),
}

impl From<StructureError> for IoError {
    fn from(e: StructureError) -> Self {
        IoError::SemanticError(e.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structure {
    Space(FiniteSpace),
    Graph(FiniteGraph),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Congruence {
    Topo(TopoCongruence),
    Graph(GraphCongruence),
}

struct Line<'a> {
    number: usize,
    words: Vec<&'a str>,
}

impl Line<'_> {
    fn err(&self, message: impl Into<String>) -> IoError {
        IoError::SyntaxError { line: self.number, message: message.into() }
    }
}

fn lines(text: &str) -> Vec<Line<'_>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let body = raw.split('#').next().unwrap_or("");
            let words: Vec<&str> = body.split_whitespace().collect();
            (!words.is_empty()).then_some(Line { number: i + 1, words })
        })
        .collect()
}

fn number(line: &Line<'_>, word: &str) -> Result<usize, IoError> {
    word.parse().map_err(|_| line.err(format!("expected a number, found `{word}`")))
}

fn arity(line: &Line<'_>, n: usize) -> Result<(), IoError> {
    if line.words.len() == n {
        Ok(())
    } else {
        Err(line.err(format!("`{}` takes {} argument(s)", line.words[0], n - 1)))
    }
}

/// `-` is the empty set, otherwise comma-separated ids.
fn id_set(line: &Line<'_>, word: &str, n: usize) -> Result<u32, IoError> {
    if word == "-" {
        return Ok(0);
    }
    let mut mask = 0;
    for part in word.split(',') {
        let i = number(line, part)?;
        if i >= n {
            return Err(IoError::SemanticError(format!("line {}: point {i} out of range", line.number)));
        }
        mask |= 1 << i;
    }
    Ok(mask)
}

fn header<'a>(ls: &'a [Line<'a>]) -> Result<&'a Line<'a>, IoError> {
    ls.first().ok_or(IoError::SyntaxError { line: 1, message: "empty input".into() })
}

pub fn parse_structure(text: &str) -> Result<Structure, IoError> {
    let ls = lines(text);
    let head = header(&ls)?;
    match head.words[0] {
        "graph" => parse_graph_lines(&ls).map(Structure::Graph),
        "space" => parse_space_lines(&ls).map(Structure::Space),
        w => Err(head.err(format!("expected `graph` or `space`, found `{w}`"))),
    }
}

pub fn parse_graph(text: &str) -> Result<FiniteGraph, IoError> {
    parse_graph_lines(&lines(text))
}

pub fn parse_space(text: &str) -> Result<FiniteSpace, IoError> {
    parse_space_lines(&lines(text))
}

fn parse_graph_lines(ls: &[Line<'_>]) -> Result<FiniteGraph, IoError> {
    let head = header(ls)?;
    if head.words[0] != "graph" {
        return Err(head.err("expected `graph <n> loops|noloops`"));
    }
    arity(head, 3)?;
    let n = number(head, head.words[1])?;
    let policy = match head.words[2] {
        "loops" => LoopPolicy::LoopsAllowed,
        "noloops" => LoopPolicy::NoLoops,
        w => return Err(head.err(format!("expected `loops` or `noloops`, found `{w}`"))),
    };
    let mut edges = Vec::new();
    for line in &ls[1..] {
        if line.words[0] != "e" {
            return Err(line.err(format!("expected `e <a> <b>`, found `{}`", line.words[0])));
        }
        arity(line, 3)?;
        let a = number(line, line.words[1])?;
        let b = number(line, line.words[2])?;
        edges.push((a.min(b), a.max(b)));
    }
    Ok(FiniteGraph::new(n, policy, &edges)?)
}

fn parse_space_lines(ls: &[Line<'_>]) -> Result<FiniteSpace, IoError> {
    let head = header(ls)?;
    if head.words[0] != "space" {
        return Err(head.err("expected `space <n>`"));
    }
    arity(head, 2)?;
    let n = number(head, head.words[1])?;
    if n == 0 || n > MAX_SPACE_POINTS {
        return Err(crate::structures::validate_space(n, &[]).unwrap_err().into());
    }
    let mut opens = Vec::new();
    for line in &ls[1..] {
        if line.words[0] != "open" {
            return Err(line.err(format!("expected `open <ids>`, found `{}`", line.words[0])));
        }
        arity(line, 2)?;
        opens.push(id_set(line, line.words[1], n)?);
    }
    Ok(validate_space(n, &opens)?)
}

fn parse_blocks(ls: &[Line<'_>], n: usize) -> Result<(Partition, usize), IoError> {
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut used = 1;
    for line in &ls[1..] {
        if line.words[0] != "block" {
            break;
        }
        used += 1;
        if line.words.len() < 2 {
            return Err(line.err("empty block"));
        }
        let mut block = Vec::new();
        for w in &line.words[1..] {
            block.push(number(line, w)?);
        }
        blocks.push(block);
    }
    let p = Partition::from_blocks(n, &blocks)
        .ok_or_else(|| IoError::SemanticError(format!("blocks do not partition 0..{n}")))?;
    Ok((p, used))
}

/// Parses and validates a congruence on `carrier`.
pub fn parse_congruence(text: &str, carrier: &Structure) -> Result<Congruence, IoError> {
    let ls = lines(text);
    let head = header(&ls)?;
    arity(head, 1)?;
    match (head.words[0], carrier) {
        ("tcong", Structure::Space(x)) => parse_tcong(&ls, x).map(Congruence::Topo),
        ("gcong", Structure::Graph(g)) => parse_gcong(&ls, g).map(Congruence::Graph),
        ("tcong", _) => Err(IoError::SemanticError("`tcong` needs a space".into())),
        ("gcong", _) => Err(IoError::SemanticError("`gcong` needs a graph".into())),
        (w, _) => Err(head.err(format!("expected `tcong` or `gcong`, found `{w}`"))),
    }
}

fn parse_tcong(ls: &[Line<'_>], x: &FiniteSpace) -> Result<TopoCongruence, IoError> {
    let n = x.n();
    let (p, used) = parse_blocks(ls, n)?;
    let mut ctop = SetFamily::EMPTY;
    for line in &ls[used..] {
        if line.words[0] != "open" {
            return Err(line.err(format!("expected `open <ids>`, found `{}`", line.words[0])));
        }
        arity(line, 2)?;
        ctop.insert(id_set(line, line.words[1], n)?);
    }
    let rho = TopoCongruence::new(p, ctop);
    tc::validate(x, &rho)?;
    Ok(rho)
}

fn parse_gcong(ls: &[Line<'_>], g: &FiniteGraph) -> Result<GraphCongruence, IoError> {
    let n = g.n();
    let (p, used) = parse_blocks(ls, n)?;
    let mut cedges = EdgeSet::EMPTY;
    for line in &ls[used..] {
        if line.words[0] != "edge" {
            return Err(line.err(format!("expected `edge <a> <b>`, found `{}`", line.words[0])));
        }
        arity(line, 3)?;
        let a = number(line, line.words[1])?;
        let b = number(line, line.words[2])?;
        if a >= n || b >= n {
            return Err(IoError::SemanticError(format!("line {}: vertex out of range", line.number)));
        }
        cedges.insert(a, b);
    }
    let theta = GraphCongruence::new(p, cedges);
    match g.policy() {
        LoopPolicy::LoopsAllowed => gc::validate(g, &theta)?,
        LoopPolicy::NoLoops => lc::validate(g, &theta)?,
    }
    Ok(theta)
}

fn id_list(mask: u32) -> String {
    if mask == 0 {
        "-".to_string()
    } else {
        bits::members(mask).map(|i| i.to_string()).collect::<Vec<_>>().join(",")
    }
}

pub fn write_graph(g: &FiniteGraph) -> String {
    let mut out = format!("graph {} {}\n", g.n(), g.policy().keyword());
    for (a, b) in g.edges().pairs() {
        writeln!(out, "e {a} {b}").expect("write to string");
    }
    out
}

pub fn write_space(x: &FiniteSpace) -> String {
    let mut out = format!("space {}\n", x.n());
    for u in x.opens().sets() {
        writeln!(out, "open {}", id_list(u)).expect("write to string");
    }
    out
}

fn write_blocks(out: &mut String, p: &Partition) {
    for block in p.blocks() {
        let ids: Vec<String> = block.iter().map(|i| i.to_string()).collect();
        writeln!(out, "block {}", ids.join(" ")).expect("write to string");
    }
}

pub fn write_tcong(rho: &TopoCongruence) -> String {
    let mut out = String::from("tcong\n");
    write_blocks(&mut out, &rho.partition);
    for u in rho.ctop.sets() {
        writeln!(out, "open {}", id_list(u)).expect("write to string");
    }
    out
}

pub fn write_gcong(theta: &GraphCongruence) -> String {
    let mut out = String::from("gcong\n");
    write_blocks(&mut out, &theta.partition);
    for (a, b) in theta.cedges.pairs() {
        writeln!(out, "edge {a} {b}").expect("write to string");
    }
    out
}

pub fn write_structure(s: &Structure) -> String {
    match s {
        Structure::Space(x) => write_space(x),
        Structure::Graph(g) => write_graph(g),
    }
}

pub fn write_congruence(c: &Congruence) -> String {
    match c {
        Congruence::Topo(rho) => write_tcong(rho),
        Congruence::Graph(theta) => write_gcong(theta),
    }
}
