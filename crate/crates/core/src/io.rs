//! JSON interchange formats and DOT rendering.
//!
//! Graphs: `{"vertices":[..],"edges":[[a,b],..]}`. Orientations add `"arcs"`
//! (tail, head) and optionally `"ties"`. Coxeter systems:
//! `{"generators":[..],"bonds":[[s,t,m],..]}` with `m` an integer or `"inf"`.
//! Torus points: `{"coords":{"1":"1/4",..}}`.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::coxeter::{Bond, CoxeterSystem};
use crate::error::{Error, Result};
use crate::filters::FilterPoset;
use crate::flipclass::FlipClass;
use crate::geom::TorusPoint;
use crate::graph::{Graph, Orientation};
use crate::poset::Poset;

fn invalid(e: serde_json::Error) -> Error {
    Error::InvalidInput(format!("malformed JSON: {e}"))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub vertices: Vec<String>,
    #[serde(default)]
    pub edges: Vec<[String; 2]>,
}

impl GraphJson {
    pub fn from_graph(g: &Graph) -> GraphJson {
        GraphJson {
            vertices: g.labels().to_vec(),
            edges: g.edge_labels().into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        Graph::new(self.vertices.iter().cloned(), self.edges.iter().map(|[a, b]| (a, b)))
    }
}

/// Orientation schema. `vertices` and `edges` may be omitted when a graph is
/// supplied separately; `edges` defaults to the arcs and ties.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrientationJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<[String; 2]>>,
    pub arcs: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub ties: Vec<[String; 2]>,
}

impl OrientationJson {
    pub fn from_orientation(o: &Orientation) -> OrientationJson {
        let g = o.graph();
        let pair = |(a, b): (usize, usize)| [g.label(a).to_string(), g.label(b).to_string()];
        let (arcs, ties) = o.arcs_and_ties();
        let GraphJson { vertices, edges } = GraphJson::from_graph(g);
        OrientationJson {
            vertices: Some(vertices),
            edges: Some(edges),
            arcs: arcs.into_iter().map(pair).collect(),
            ties: ties.into_iter().map(pair).collect(),
        }
    }

    /// The graph described by this document alone.
    pub fn graph(&self) -> Result<Graph> {
        let vertices = self
            .vertices
            .clone()
            .ok_or_else(|| Error::InvalidInput("orientation has no `vertices` and no graph was given".into()))?;
        let edges = match &self.edges {
            Some(e) => e.clone(),
            None => self.arcs.iter().chain(&self.ties).cloned().collect(),
        };
        GraphJson { vertices, edges }.to_graph()
    }

    /// Orients `graph` (or the embedded graph if `None`). An embedded graph
    /// must agree with a supplied one.
    pub fn to_orientation(&self, graph: Option<Arc<Graph>>) -> Result<Orientation> {
        let graph = match graph {
            Some(g) => {
                if self.vertices.is_some() && self.graph()? != *g {
                    return Err(Error::GraphMismatch);
                }
                g
            }
            None => Arc::new(self.graph()?),
        };
        let pairs = |v: &[[String; 2]]| v.iter().map(|[a, b]| (a.clone(), b.clone())).collect::<Vec<_>>();
        Orientation::from_labels(graph, &pairs(&self.arcs), &pairs(&self.ties))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BondJson {
    Finite(u32),
    Named(String),
}

impl BondJson {
    fn to_bond(&self) -> Result<Bond> {
        match self {
            BondJson::Finite(m) => Ok(Bond::Finite(*m)),
            BondJson::Named(s) if matches!(s.as_str(), "inf" | "∞" | "infinity") => Ok(Bond::Infinite),
            BondJson::Named(s) => Err(Error::InvalidInput(format!("bond label `{s}` is not an integer or \"inf\""))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoxeterJson {
    pub generators: Vec<String>,
    #[serde(default)]
    pub bonds: Vec<(String, String, BondJson)>,
}

impl CoxeterJson {
    pub fn from_system(cs: &CoxeterSystem) -> CoxeterJson {
        let g = cs.graph();
        CoxeterJson {
            generators: cs.generators().to_vec(),
            bonds: cs
                .bonds()
                .map(|(u, v, m)| {
                    let m = match m {
                        Bond::Finite(k) => BondJson::Finite(k),
                        Bond::Infinite => BondJson::Named("inf".into()),
                    };
                    (g.label(u).to_string(), g.label(v).to_string(), m)
                })
                .collect(),
        }
    }

    pub fn to_system(&self) -> Result<CoxeterSystem> {
        let bonds = self
            .bonds
            .iter()
            .map(|(a, b, m)| Ok((a.clone(), b.clone(), m.to_bond()?)))
            .collect::<Result<Vec<_>>>()?;
        CoxeterSystem::new(&self.generators, &bonds)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointJson {
    pub coords: BTreeMap<String, String>,
}

impl PointJson {
    pub fn from_point(g: &Graph, p: &TorusPoint) -> PointJson {
        PointJson {
            coords: p.to_labels(g).into_iter().map(|(k, x)| (k, x.to_string())).collect(),
        }
    }

    pub fn to_point(&self, g: &Graph) -> Result<TorusPoint> {
        let coords = self
            .coords
            .iter()
            .map(|(k, v)| {
                let x: Rational64 = v
                    .trim()
                    .parse()
                    .map_err(|_| Error::InvalidInput(format!("coordinate `{v}` for `{k}` is not a rational p/q")))?;
                Ok((k.clone(), x))
            })
            .collect::<Result<BTreeMap<_, _>>>()?;
        TorusPoint::from_labels(g, &coords)
    }
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    serde_json::from_str::<GraphJson>(text).map_err(invalid)?.to_graph()
}

pub fn parse_orientation(text: &str, graph: Option<Arc<Graph>>) -> Result<Orientation> {
    serde_json::from_str::<OrientationJson>(text)
        .map_err(invalid)?
        .to_orientation(graph)
}

/// Whether an orientation document carries its own vertex list.
pub fn embeds_graph(text: &str) -> Result<bool> {
    Ok(serde_json::from_str::<OrientationJson>(text).map_err(invalid)?.vertices.is_some())
}

pub fn parse_coxeter(text: &str) -> Result<CoxeterSystem> {
    serde_json::from_str::<CoxeterJson>(text).map_err(invalid)?.to_system()
}

pub fn parse_point(text: &str, g: &Graph) -> Result<TorusPoint> {
    serde_json::from_str::<PointJson>(text).map_err(invalid)?.to_point(g)
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Undirected graph, vertices and edges in index order.
pub fn graph_dot(g: &Graph, name: &str) -> String {
    let mut out = format!("graph {} {{\n", quote(name));
    for l in g.labels() {
        let _ = writeln!(out, "  {};", quote(l));
    }
    for (a, b) in g.edge_labels() {
        let _ = writeln!(out, "  {} -- {};", quote(&a), quote(&b));
    }
    out.push_str("}\n");
    out
}

/// Directed rendering of an orientation; ties become `dir=both` edges.
pub fn orientation_dot(o: &Orientation, name: &str) -> String {
    let g = o.graph();
    let mut out = format!("digraph {} {{\n", quote(name));
    for l in g.labels() {
        let _ = writeln!(out, "  {};", quote(l));
    }
    let (arcs, ties) = o.arcs_and_ties();
    for (t, h) in arcs {
        let _ = writeln!(out, "  {} -> {};", quote(g.label(t)), quote(g.label(h)));
    }
    for (a, b) in ties {
        let _ = writeln!(out, "  {} -> {} [dir=both];", quote(g.label(a)), quote(g.label(b)));
    }
    out.push_str("}\n");
    out
}

/// Hasse diagram, bottom to top, one `rank=same` row per height.
pub fn hasse_dot(p: &Poset, name: &str) -> String {
    let g = p.graph();
    let n = p.n();
    let mut height = vec![0usize; n];
    // covers go upward, so iterate to a fixed point (n rounds suffice)
    let covers = p.cover_relations();
    for _ in 0..n {
        for &(a, b) in &covers {
            height[b] = height[b].max(height[a] + 1);
        }
    }
    let mut out = format!("digraph {} {{\n  rankdir=BT;\n", quote(name));
    let top = height.iter().copied().max().unwrap_or(0);
    for h in 0..=top {
        let row: Vec<String> = (0..n).filter(|&v| height[v] == h).map(|v| quote(g.label(v))).collect();
        if !row.is_empty() {
            let _ = writeln!(out, "  {{ rank=same; {}; }}", row.join("; "));
        }
    }
    for (a, b) in covers {
        let _ = writeln!(out, "  {} -> {};", quote(g.label(a)), quote(g.label(b)));
    }
    out.push_str("}\n");
    out
}

/// Flip graph of a class: members as nodes, one edge per flip, labelled by
/// the flipped vertex.
pub fn flip_graph_dot(class: &FlipClass, name: &str) -> String {
    let g = class.graph();
    let mut out = format!("graph {} {{\n", quote(name));
    for (i, m) in class.members().iter().enumerate() {
        let _ = writeln!(out, "  m{i} [label={}];", quote(&m.describe()));
    }
    for (i, j, v) in class.flip_edges() {
        let _ = writeln!(out, "  m{i} -- m{j} [label={}];", quote(g.label(v)));
    }
    out.push_str("}\n");
    out
}

/// Inclusion poset of vertex sets, ranked by cardinality.
pub fn filter_poset_dot(g: &Graph, fp: &FilterPoset, name: &str) -> String {
    let label = |i: usize| {
        let s = g.set_labels(fp.elements()[i]).concat();
        if s.is_empty() {
            "∅".to_string()
        } else {
            s
        }
    };
    let mut out = format!("digraph {} {{\n  rankdir=BT;\n", quote(name));
    let max = fp.elements().iter().map(|s| s.len()).max().unwrap_or(0);
    for r in 0..=max {
        let row: Vec<String> = (0..fp.len())
            .filter(|&i| fp.elements()[i].len() == r)
            .map(|i| format!("f{i}"))
            .collect();
        if !row.is_empty() {
            let _ = writeln!(out, "  {{ rank=same; {}; }}", row.join("; "));
        }
    }
    for i in 0..fp.len() {
        let _ = writeln!(out, "  f{i} [label={}];", quote(&label(i)));
    }
    for &(i, j) in fp.covers() {
        let _ = writeln!(out, "  f{i} -> f{j};");
    }
    out.push_str("}\n");
    out
}
