//! Instance and result file formats.
//!
//! An instance is plain text: the vertex count on the first line, then one
//! `u v` edge per line. Blank lines and lines starting with `#` are skipped.
//!
//! A result is a `key: value` header followed by an `[arcs]` section of
//! `from to label` lines and a `[sums]` section of `vertex sum` lines. The same
//! data can also be written and read as JSON.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::orient::OrientedGraph;
use crate::pipeline::Construction;
use crate::verify::{check_antimagic, VerificationReport};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("file is empty")]
    Empty,
    #[error("missing header field `{0}`")]
    MissingField(&'static str),
    #[error("invalid instance: {0}")]
    Graph(#[from] GraphError),
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("result has {found} vertices, instance has {expected}")]
    VertexCount { found: usize, expected: usize },
    #[error("result has {found} arcs, instance has {expected} edges")]
    ArcCount { found: usize, expected: usize },
    #[error("arc {from} -> {to} is not an edge of the instance")]
    UnknownArc { from: usize, to: usize },
    #[error("edge {{{0}, {1}}} is oriented more than once")]
    RepeatedEdge(usize, usize),
    #[error("label {label} on arc {from} -> {to} is outside [1, {arc_count}]")]
    LabelOutOfRange {
        from: usize,
        to: usize,
        label: usize,
        arc_count: usize,
    },
}

fn parse_err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        message: message.into(),
    }
}

/// Numbered lines that carry content.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_fields<const N: usize, T: std::str::FromStr>(
    line: usize,
    s: &str,
) -> Result<[T; N], FormatError> {
    let parts: Vec<&str> = s.split_whitespace().collect();
    if parts.len() != N {
        return Err(parse_err(
            line,
            format!("expected {N} fields, found {}", parts.len()),
        ));
    }
    let mut out = Vec::with_capacity(N);
    for p in parts {
        out.push(
            p.parse()
                .map_err(|_| parse_err(line, format!("cannot parse `{p}`")))?,
        );
    }
    Ok(out.try_into().unwrap_or_else(|_| unreachable!()))
}

/// Reads the vertex count and raw edge list without validating the graph.
pub fn parse_instance(text: &str) -> Result<(usize, Vec<(usize, usize)>), FormatError> {
    let mut lines = content_lines(text);
    let (line, first) = lines.next().ok_or(FormatError::Empty)?;
    let [n] = parse_fields::<1, usize>(line, first)?;
    let edges = lines
        .map(|(line, s)| parse_fields::<2, usize>(line, s).map(|[u, v]| (u, v)))
        .collect::<Result<_, _>>()?;
    Ok((n, edges))
}

pub fn read_instance(text: &str) -> Result<Graph, FormatError> {
    let (n, edges) = parse_instance(text)?;
    Ok(Graph::new(n, edges)?)
}

pub fn write_instance(g: &Graph) -> String {
    let mut s = format!("{}\n", g.vertex_count());
    for &(u, v) in g.edges() {
        writeln!(s, "{u} {v}").unwrap();
    }
    s
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcRecord {
    pub from: usize,
    pub to: usize,
    pub label: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultFile {
    pub d: usize,
    pub q: usize,
    pub k: usize,
    pub x0: Option<usize>,
    pub seed: u64,
    pub vertex_count: usize,
    pub antimagic: bool,
    /// Gap constraints used for each component, in component order.
    pub gap_specs: Vec<String>,
    /// One record per edge of the instance, in instance order.
    pub arcs: Vec<ArcRecord>,
    pub vertex_sums: Vec<i64>,
}

impl ResultFile {
    pub fn from_construction(c: &Construction, report: &VerificationReport) -> Self {
        let og = &c.labeled.graph;
        let arcs = og
            .arcs
            .iter()
            .zip(&c.labeled.labels)
            .map(|(&(from, to), &label)| ArcRecord { from, to, label })
            .collect();
        Self {
            d: c.d,
            q: c.q,
            k: c.k,
            x0: c.x0.map(|x| x.x0),
            seed: c.seed,
            vertex_count: og.vertex_count,
            antimagic: report.antimagic_ok,
            gap_specs: c.components.iter().map(|cc| cc.spec.to_string()).collect(),
            arcs,
            vertex_sums: report.sums.clone(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "d: {}", self.d).unwrap();
        writeln!(s, "q: {}", self.q).unwrap();
        writeln!(s, "k: {}", self.k).unwrap();
        match self.x0 {
            Some(x) => writeln!(s, "x0: {x}").unwrap(),
            None => writeln!(s, "x0: none").unwrap(),
        }
        writeln!(s, "seed: {}", self.seed).unwrap();
        writeln!(s, "vertex_count: {}", self.vertex_count).unwrap();
        writeln!(s, "arc_count: {}", self.arcs.len()).unwrap();
        writeln!(s, "antimagic: {}", self.antimagic).unwrap();
        for (i, spec) in self.gap_specs.iter().enumerate() {
            writeln!(s, "gap_spec.{}: {spec}", i + 1).unwrap();
        }
        s.push_str("[arcs]\n");
        for a in &self.arcs {
            writeln!(s, "{} {} {}", a.from, a.to, a.label).unwrap();
        }
        s.push_str("[sums]\n");
        for (v, sum) in self.vertex_sums.iter().enumerate() {
            writeln!(s, "{v} {sum}").unwrap();
        }
        s
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    /// Graphviz rendering: labels on arcs, sums on nodes.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph antimagic {\n");
        for (v, sum) in self.vertex_sums.iter().enumerate() {
            writeln!(s, "  {v} [label=\"{v}\\n{sum}\", sum={sum}];").unwrap();
        }
        for a in &self.arcs {
            writeln!(s, "  {} -> {} [label={}];", a.from, a.to, a.label).unwrap();
        }
        s.push_str("}\n");
        s
    }

    /// Parses either the text or the JSON form.
    pub fn parse(text: &str) -> Result<Self, FormatError> {
        if text.trim_start().starts_with('{') {
            Ok(serde_json::from_str(text)?)
        } else {
            Self::parse_text(text)
        }
    }

    fn parse_text(text: &str) -> Result<Self, FormatError> {
        #[derive(PartialEq)]
        enum Section {
            Header,
            Arcs,
            Sums,
        }
        let mut section = Section::Header;
        let mut header: HashMap<String, (usize, String)> = HashMap::new();
        let mut specs: Vec<(usize, String)> = Vec::new();
        let mut arcs = Vec::new();
        let mut sums = Vec::new();

        for (line, s) in content_lines(text) {
            match s {
                "[arcs]" => {
                    section = Section::Arcs;
                    continue;
                }
                "[sums]" => {
                    section = Section::Sums;
                    continue;
                }
                _ => {}
            }
            match section {
                Section::Header => {
                    let (key, value) = s
                        .split_once(':')
                        .ok_or_else(|| parse_err(line, "expected `key: value`"))?;
                    let (key, value) = (key.trim(), value.trim().to_string());
                    if let Some(i) = key.strip_prefix("gap_spec.") {
                        let i = i
                            .parse()
                            .map_err(|_| parse_err(line, format!("bad component index `{i}`")))?;
                        specs.push((i, value));
                    } else {
                        header.insert(key.to_string(), (line, value));
                    }
                }
                Section::Arcs => {
                    let [from, to, label] = parse_fields::<3, usize>(line, s)?;
                    arcs.push(ArcRecord { from, to, label });
                }
                Section::Sums => {
                    let [v, sum] = parse_fields::<2, i64>(line, s)?;
                    if v != sums.len() as i64 {
                        return Err(parse_err(line, format!("expected vertex {}", sums.len())));
                    }
                    sums.push(sum);
                }
            }
        }

        let field = |key: &'static str| -> Result<&(usize, String), FormatError> {
            header.get(key).ok_or(FormatError::MissingField(key))
        };
        fn num<T: std::str::FromStr>(entry: &(usize, String)) -> Result<T, FormatError> {
            entry
                .1
                .parse()
                .map_err(|_| parse_err(entry.0, format!("cannot parse `{}`", entry.1)))
        }
        let x0 = match field("x0")? {
            (_, v) if v == "none" => None,
            entry => Some(num(entry)?),
        };
        let antimagic = num(field("antimagic")?)?;
        let arc_count: usize = num(field("arc_count")?)?;
        if arc_count != arcs.len() {
            let line = field("arc_count")?.0;
            return Err(parse_err(
                line,
                format!(
                    "arc_count is {arc_count} but {} arcs are listed",
                    arcs.len()
                ),
            ));
        }
        specs.sort_by_key(|(i, _)| *i);

        Ok(Self {
            d: num(field("d")?)?,
            q: num(field("q")?)?,
            k: num(field("k")?)?,
            x0,
            seed: num(field("seed")?)?,
            vertex_count: num(field("vertex_count")?)?,
            antimagic,
            gap_specs: specs.into_iter().map(|(_, s)| s).collect(),
            arcs,
            vertex_sums: sums,
        })
    }

    /// Matches the arcs against `g` and recomputes the verdict from scratch.
    ///
    /// Structural problems (an arc that is not an edge, an edge oriented twice,
    /// a label outside `[1, m]`) are errors. A repeated label or a pair of
    /// equal sums comes back as a failed report.
    pub fn check_against(&self, g: &Graph) -> Result<VerificationReport, FormatError> {
        if self.vertex_count != g.vertex_count() {
            return Err(FormatError::VertexCount {
                found: self.vertex_count,
                expected: g.vertex_count(),
            });
        }
        let m = g.edge_count();
        if self.arcs.len() != m {
            return Err(FormatError::ArcCount {
                found: self.arcs.len(),
                expected: m,
            });
        }
        let ids: HashMap<(usize, usize), usize> = g
            .edges()
            .iter()
            .enumerate()
            .map(|(id, &(u, v))| ((u.min(v), u.max(v)), id))
            .collect();

        let mut arcs = vec![None; m];
        let mut labels = vec![0; m];
        for a in &self.arcs {
            let key = (a.from.min(a.to), a.from.max(a.to));
            let &id = ids.get(&key).ok_or(FormatError::UnknownArc {
                from: a.from,
                to: a.to,
            })?;
            if arcs[id].is_some() {
                return Err(FormatError::RepeatedEdge(key.0, key.1));
            }
            if !(1..=m).contains(&a.label) {
                return Err(FormatError::LabelOutOfRange {
                    from: a.from,
                    to: a.to,
                    label: a.label,
                    arc_count: m,
                });
            }
            arcs[id] = Some((a.from, a.to));
            labels[id] = a.label;
        }
        let og = OrientedGraph {
            vertex_count: g.vertex_count(),
            arcs: arcs
                .into_iter()
                .map(|a| a.expect("every edge seen once"))
                .collect(),
        };
        Ok(check_antimagic(&og, &labels))
    }
}
