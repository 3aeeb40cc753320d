//! Text formats: `ECG`, `VCG`, `GRAPHIC` and `UNIFORM` instances, plus DOT export.
//!
//! Lines are whitespace separated, `#` starts a comment and blank lines are ignored.
//! Color tokens that are all non-negative integers are used as ids directly;
//! otherwise labels are mapped to dense ids in order of first appearance.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Color, Edge, EdgeColoredGraph, VertexColoredGraph};
use crate::matroid::{ColoredMatroid, GraphicMatroid, UniformMatroid};
use crate::sparsify::GraphRef;

/// A parsed input file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Edge(EdgeColoredGraph),
    Vertex(VertexColoredGraph),
    /// Graphic matroid of an edge-colored graph.
    Graphic(EdgeColoredGraph),
    Uniform {
        n: usize,
        threshold: usize,
        colors: Vec<Color>,
        k: usize,
    },
}

impl Instance {
    pub fn kind(&self) -> &'static str {
        match self {
            Instance::Edge(_) => "ECG",
            Instance::Vertex(_) => "VCG",
            Instance::Graphic(_) => "GRAPHIC",
            Instance::Uniform { .. } => "UNIFORM",
        }
    }

    pub fn graph(&self) -> Option<GraphRef<'_>> {
        match self {
            Instance::Edge(g) => Some(GraphRef::Edge(g)),
            Instance::Vertex(g) => Some(GraphRef::Vertex(g)),
            _ => None,
        }
    }

    /// Colored matroid view; edge-colored graphs are read as graphic matroids.
    pub fn matroid(&self) -> Option<Result<ColoredMatroid>> {
        match self {
            Instance::Edge(g) | Instance::Graphic(g) => {
                Some(Ok(GraphicMatroid::colored(g.clone())))
            }
            Instance::Uniform {
                n,
                threshold,
                colors,
                ..
            } => Some(UniformMatroid::colored(*n, *threshold, colors.clone())),
            Instance::Vertex(_) => None,
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            Instance::Edge(g) => write_ecg(g),
            Instance::Vertex(g) => write_vcg(g),
            Instance::Graphic(g) => format!("GRAPHIC\n{}", write_ecg(g)),
            Instance::Uniform {
                n,
                threshold,
                colors,
                k,
            } => {
                let mut out = format!("UNIFORM {n} {threshold} {k}\n");
                writeln!(out, "{}", join_colors(colors)).unwrap();
                out
            }
        }
    }
}

type TokenLines<'a> = Box<dyn Iterator<Item = (usize, Vec<&'a str>)> + 'a>;

struct Lines<'a> {
    inner: TokenLines<'a>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let inner: TokenLines<'a> = Box::new(
            text.lines()
                .enumerate()
                .map(|(i, l)| {
                    (
                        i + 1,
                        l.split('#')
                            .next()
                            .unwrap_or("")
                            .split_whitespace()
                            .collect::<Vec<_>>(),
                    )
                })
                .filter(|(_, t)| !t.is_empty()),
        );
        Self { inner, last: 0 }
    }

    fn next(&mut self, what: &str) -> Result<(usize, Vec<&'a str>)> {
        match self.inner.next() {
            Some((line, tokens)) => {
                self.last = line;
                Ok((line, tokens))
            }
            None => Err(Error::Parse {
                line: self.last + 1,
                message: format!("unexpected end of input, expected {what}"),
            }),
        }
    }

    fn finish(mut self) -> Result<()> {
        match self.inner.next() {
            Some((line, _)) => Err(Error::Parse {
                line,
                message: "trailing content after the declared entries".into(),
            }),
            None => Ok(()),
        }
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn number(line: usize, token: &str, what: &str) -> Result<usize> {
    token.parse().map_err(|_| {
        parse_err(
            line,
            format!("expected {what} (non-negative integer), found {token:?}"),
        )
    })
}

fn header(line: usize, tokens: &[&str], arity: usize) -> Result<Vec<usize>> {
    if tokens.len() != arity + 1 {
        return Err(parse_err(
            line,
            format!(
                "header {} takes {arity} integers, found {}",
                tokens[0],
                tokens.len() - 1
            ),
        ));
    }
    tokens[1..]
        .iter()
        .map(|t| number(line, t, "header field"))
        .collect()
}

/// Maps color tokens to ids: integers as given, otherwise labels by first appearance.
fn color_ids(tokens: &[(usize, &str)], k: usize) -> Result<Vec<Color>> {
    if tokens.iter().all(|(_, t)| t.parse::<usize>().is_ok()) {
        return Ok(tokens
            .iter()
            .map(|(_, t)| Color(t.parse().unwrap()))
            .collect());
    }
    let mut ids: HashMap<&str, usize> = HashMap::new();
    let mut out = Vec::with_capacity(tokens.len());
    for &(line, t) in tokens {
        let next = ids.len();
        let id = *ids.entry(t).or_insert(next);
        if id >= k {
            return Err(parse_err(
                line,
                format!("label {t:?} exceeds the declared {k} colors"),
            ));
        }
        out.push(Color(id));
    }
    Ok(out)
}

fn ecg_body(lines: &mut Lines<'_>, line: usize, tokens: &[&str]) -> Result<EdgeColoredGraph> {
    let h = header(line, tokens, 3)?;
    let (n, m, k) = (h[0], h[1], h[2]);
    let mut ends = Vec::with_capacity(m);
    let mut labels = Vec::with_capacity(m);
    for _ in 0..m {
        let (line, t) = lines.next("an edge line `<u> <v> <c>`")?;
        if t.len() != 3 {
            return Err(parse_err(line, "edge line needs `<u> <v> <c>`"));
        }
        ends.push((
            line,
            number(line, t[0], "vertex")?,
            number(line, t[1], "vertex")?,
        ));
        labels.push((line, t[2]));
    }
    let colors = color_ids(&labels, k)?;
    let edges = ends
        .iter()
        .zip(colors)
        .map(|(&(_, u, v), c)| Edge::new(u, v, c))
        .collect::<Vec<_>>();
    EdgeColoredGraph::new(n, edges, k).map_err(|e| with_line(e, &ends))
}

fn with_line(e: Error, ends: &[(usize, usize, usize)]) -> Error {
    let bad = |x: usize, y: usize| {
        ends.iter()
            .find(|&&(_, u, v)| (u, v) == (x, y) || (v, u) == (x, y))
    };
    match &e {
        Error::InvalidVertex { vertex, .. } => ends
            .iter()
            .find(|&&(_, u, v)| u == *vertex || v == *vertex)
            .map_or(e.clone(), |&(line, ..)| parse_err(line, e.to_string())),
        Error::SelfLoop { vertex } => {
            bad(*vertex, *vertex).map_or(e.clone(), |&(line, ..)| parse_err(line, e.to_string()))
        }
        Error::ParallelEdge { u, v } => ends
            .iter()
            .filter(|&&(_, a, b)| (a, b) == (*u, *v) || (b, a) == (*u, *v))
            .nth(1)
            .map_or(e.clone(), |&(line, ..)| parse_err(line, e.to_string())),
        _ => e,
    }
}

fn color_line(lines: &mut Lines<'_>, count: usize, k: usize) -> Result<Vec<Color>> {
    if count == 0 {
        return Ok(Vec::new());
    }
    let (line, t) = lines.next("the color line")?;
    if t.len() != count {
        return Err(parse_err(
            line,
            format!("expected {count} colors, found {}", t.len()),
        ));
    }
    color_ids(&t.iter().map(|&s| (line, s)).collect::<Vec<_>>(), k)
}

fn vcg_body(lines: &mut Lines<'_>, line: usize, tokens: &[&str]) -> Result<VertexColoredGraph> {
    let h = header(line, tokens, 3)?;
    let (n, m, k) = (h[0], h[1], h[2]);
    let colors = color_line(lines, n, k)?;
    let mut ends = Vec::with_capacity(m);
    for _ in 0..m {
        let (line, t) = lines.next("an edge line `<u> <v>`")?;
        if t.len() != 2 {
            return Err(parse_err(line, "edge line needs `<u> <v>`"));
        }
        ends.push((
            line,
            number(line, t[0], "vertex")?,
            number(line, t[1], "vertex")?,
        ));
    }
    VertexColoredGraph::new(n, ends.iter().map(|&(_, u, v)| (u, v)).collect(), colors, k)
        .map_err(|e| with_line(e, &ends))
}

/// Parses any supported instance file.
pub fn parse_instance(text: &str) -> Result<Instance> {
    let mut lines = Lines::new(text);
    let (line, tokens) = lines.next("a header")?;
    let instance = match tokens[0] {
        "ECG" => Instance::Edge(ecg_body(&mut lines, line, &tokens)?),
        "VCG" => Instance::Vertex(vcg_body(&mut lines, line, &tokens)?),
        "GRAPHIC" => {
            if tokens.len() != 1 {
                return Err(parse_err(
                    line,
                    "GRAPHIC takes no fields; an ECG block follows",
                ));
            }
            let (line, tokens) = lines.next("an ECG header")?;
            if tokens[0] != "ECG" {
                return Err(parse_err(line, "GRAPHIC must be followed by an ECG block"));
            }
            Instance::Graphic(ecg_body(&mut lines, line, &tokens)?)
        }
        "UNIFORM" => {
            let h = header(line, &tokens, 3)?;
            let (n, threshold, k) = (h[0], h[1], h[2]);
            let colors = color_line(&mut lines, n, k)?;
            Instance::Uniform {
                n,
                threshold,
                colors,
                k,
            }
        }
        other => {
            return Err(parse_err(
                line,
                format!("unknown header {other:?}; expected ECG, VCG, GRAPHIC or UNIFORM"),
            ))
        }
    };
    lines.finish()?;
    Ok(instance)
}

pub fn parse_ecg(text: &str) -> Result<EdgeColoredGraph> {
    match parse_instance(text)? {
        Instance::Edge(g) => Ok(g),
        other => Err(parse_err(
            1,
            format!("expected an ECG file, found {}", other.kind()),
        )),
    }
}

pub fn parse_vcg(text: &str) -> Result<VertexColoredGraph> {
    match parse_instance(text)? {
        Instance::Vertex(g) => Ok(g),
        other => Err(parse_err(
            1,
            format!("expected a VCG file, found {}", other.kind()),
        )),
    }
}

fn join_colors(colors: &[Color]) -> String {
    colors
        .iter()
        .map(|c| c.0.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn write_ecg(g: &EdgeColoredGraph) -> String {
    let mut out = format!("ECG {} {} {}\n", g.n(), g.m(), g.k());
    for e in g.edges() {
        writeln!(out, "{} {} {}", e.u, e.v, e.color.0).unwrap();
    }
    out
}

pub fn write_vcg(g: &VertexColoredGraph) -> String {
    let mut out = format!("VCG {} {} {}\n", g.n(), g.m(), g.k());
    if g.n() > 0 {
        writeln!(out, "{}", join_colors(g.colors())).unwrap();
    }
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// Serializes the spanning subgraph formed by `ids` in the graph's own format.
pub fn write_subgraph(g: GraphRef<'_>, ids: &[usize]) -> String {
    match g {
        GraphRef::Edge(g) => write_ecg(&g.subgraph(ids)),
        GraphRef::Vertex(g) => write_vcg(&g.subgraph(ids)),
    }
}

pub const DOT_PALETTE: [&str; 12] = [
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a6cee3", "#a65628", "#f781bf",
    "#999999", "#66c2a5", "#b2df8a", "#17becf",
];

pub fn palette_color(c: Color) -> &'static str {
    DOT_PALETTE[c.0 % DOT_PALETTE.len()]
}

/// DOT rendering; edges in `highlight` are drawn bold.
pub fn to_dot(g: GraphRef<'_>, highlight: Option<&[usize]>) -> String {
    let mut bold = vec![false; g.m()];
    for &id in highlight.unwrap_or(&[]) {
        if id < bold.len() {
            bold[id] = true;
        }
    }
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    match g {
        GraphRef::Edge(g) => {
            for v in 0..g.n() {
                writeln!(out, "  {v};").unwrap();
            }
            for (id, e) in g.edges().iter().enumerate() {
                let style = if bold[id] { ", penwidth=3" } else { "" };
                writeln!(
                    out,
                    "  {} -- {} [color=\"{}\", label=\"{}\"{style}];",
                    e.u,
                    e.v,
                    palette_color(e.color),
                    e.color
                )
                .unwrap();
            }
        }
        GraphRef::Vertex(g) => {
            for v in 0..g.n() {
                writeln!(
                    out,
                    "  {v} [style=filled, fillcolor=\"{}\", xlabel=\"{}\"];",
                    palette_color(g.color(v)),
                    g.color(v)
                )
                .unwrap();
            }
            for (id, &(u, v)) in g.edges().iter().enumerate() {
                let style = if bold[id] { " [penwidth=3]" } else { "" };
                writeln!(out, "  {u} -- {v}{style};").unwrap();
            }
        }
    }
    out.push_str("}\n");
    out
}
