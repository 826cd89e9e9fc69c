//! Graphs, orientations (with optional ties) and the elementary digraph
//! algorithms everything else is built on.

pub(crate) mod orientation;
mod partition;
mod tutte;

pub use orientation::{is_acyclic, quotient, strongly_connected_components, Dag, Dir, Orientation, Quotient};
pub use partition::SetPartition;
pub use tutte::tutte_10;

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::vset::{VertexSet, MAX_VERTICES};

/// Ordering used for vertex labels: natural order, so `"2" < "10"` and `"s2" < "s10"`.
pub fn label_cmp(a: &str, b: &str) -> Ordering {
    natord::compare(a, b).then_with(|| a.cmp(b))
}

/// A finite simple undirected graph.
///
/// Vertices are indexed `0..n` in [`label_cmp`] order of their labels; edges
/// are stored as `(u, v)` with `u < v`, sorted.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    labels: Vec<String>,
    edges: Vec<(usize, usize)>,
    adj: Vec<VertexSet>,
}

impl Graph {
    pub fn new<V, S, E, T>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = S>,
        S: Into<String>,
        E: IntoIterator<Item = (T, T)>,
        T: AsRef<str>,
    {
        let mut labels: Vec<String> = vertices.into_iter().map(Into::into).collect();
        labels.sort_by(|a, b| label_cmp(a, b));
        if let Some(w) = labels.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidInput(format!("duplicate vertex `{}`", w[0])));
        }
        if labels.len() > MAX_VERTICES {
            return Err(Error::InvalidInput(format!(
                "{} vertices exceeds the supported maximum of {MAX_VERTICES}",
                labels.len()
            )));
        }
        let lookup = |s: &str| {
            labels
                .binary_search_by(|l| label_cmp(l, s))
                .map_err(|_| Error::UnknownVertex(s.to_string()))
        };
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            let (u, v) = (lookup(a.as_ref())?, lookup(b.as_ref())?);
            if u == v {
                return Err(Error::InvalidInput(format!("self-loop at `{}`", a.as_ref())));
            }
            if !set.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidInput(format!(
                    "duplicate edge {{{}, {}}}",
                    a.as_ref(),
                    b.as_ref()
                )));
            }
        }
        Ok(Self::from_parts(labels, set))
    }

    /// Builds a graph from labels already in canonical order and index edges.
    /// Self-loops and duplicates are dropped.
    pub(crate) fn from_parts<I: IntoIterator<Item = (usize, usize)>>(labels: Vec<String>, edges: I) -> Self {
        debug_assert!(labels.windows(2).all(|w| label_cmp(&w[0], &w[1]) == Ordering::Less));
        let set: BTreeSet<(usize, usize)> = edges
            .into_iter()
            .filter(|(u, v)| u != v)
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        let mut adj = vec![VertexSet::EMPTY; labels.len()];
        for &(u, v) in &set {
            adj[u] = adj[u].with(v);
            adj[v] = adj[v].with(u);
        }
        Graph {
            labels,
            edges: set.into_iter().collect(),
            adj,
        }
    }

    /// Same vertex set, different edges.
    pub fn with_edges<I: IntoIterator<Item = (usize, usize)>>(&self, edges: I) -> Self {
        Self::from_parts(self.labels.clone(), edges)
    }

    fn numbered(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        Self::from_parts((1..=n).map(|i| i.to_string()).collect(), edges)
    }

    /// Vertices `1..=n`, no edges.
    pub fn edgeless(n: usize) -> Self {
        Self::numbered(n, [])
    }

    /// Complete graph `K_n` on `1..=n`.
    pub fn complete(n: usize) -> Self {
        Self::numbered(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
    }

    /// Cycle `C_n` on `1..=n` with edges `{i, i+1}` and `{1, n}`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a simple cycle needs at least 3 vertices");
        Self::numbered(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// Path `L_n` on `1..=n`.
    pub fn path(n: usize) -> Self {
        Self::numbered(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .binary_search_by(|l| label_cmp(l, label))
            .map_err(|_| Error::UnknownVertex(label.to_string()))
    }

    pub fn set_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<VertexSet> {
        labels
            .iter()
            .map(|l| self.index_of(l.as_ref()))
            .collect::<Result<Vec<_>>>()
            .map(VertexSet::from_indices)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_set(&self) -> BTreeSet<(usize, usize)> {
        self.edges.iter().copied().collect()
    }

    /// Whether `set` induces a connected subgraph. The empty set counts as connected.
    pub fn is_connected_within(&self, set: VertexSet) -> bool {
        let Some(start) = set.first() else { return true };
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next = next.union(self.adj[v]);
            }
            next = next.intersection(set).difference(seen);
            seen = seen.union(next);
            frontier = next;
        }
        seen == set
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.vertices())
    }

    /// Connected components, ordered by minimal vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut left = self.vertices();
        while let Some(s) = left.first() {
            let mut comp = VertexSet::singleton(s);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier.iter() {
                    next = next.union(self.adj[v]);
                }
                next = next.difference(comp);
                comp = comp.union(next);
                frontier = next;
            }
            left = left.difference(comp);
            out.push(comp);
        }
        out
    }

    /// Adds new isolated vertices.
    pub fn with_vertices<S: AsRef<str>>(&self, extra: &[S]) -> Result<(Graph, Vec<usize>)> {
        let mut labels = self.labels.clone();
        for e in extra {
            let e = e.as_ref();
            if labels.iter().any(|l| l == e) {
                return Err(Error::LabelCollision(e.to_string()));
            }
            labels.push(e.to_string());
        }
        let edge_labels: Vec<(String, String)> = self
            .edges
            .iter()
            .map(|&(u, v)| (self.labels[u].clone(), self.labels[v].clone()))
            .collect();
        let g = Graph::new(labels, edge_labels)?;
        // old index -> new index
        let map = self.labels.iter().map(|l| g.index_of(l).unwrap()).collect();
        Ok((g, map))
    }

    /// `G′_π`: every block of `pi` becomes a clique.
    pub fn make_cliques(&self, pi: &SetPartition) -> Graph {
        let extra = pi
            .blocks()
            .iter()
            .flat_map(|b| b.iter().flat_map(move |u| b.iter().filter(move |&v| v > u).map(move |v| (u, v))));
        self.with_edges(self.edges.iter().copied().chain(extra))
    }

    /// `G/∼_π`: blocks become vertices labelled `B1..Br` in canonical block
    /// order; loops and parallel edges are dropped.
    pub fn contract(&self, pi: &SetPartition) -> Graph {
        let labels = block_labels(pi.num_blocks());
        let edges = self
            .edges
            .iter()
            .map(|&(u, v)| (pi.block_of(u), pi.block_of(v)))
            .filter(|(a, b)| a != b);
        Graph::from_parts(labels, edges)
    }

    pub fn format_set(&self, set: VertexSet) -> String {
        let items: Vec<&str> = set.iter().map(|v| self.label(v)).collect();
        format!("{{{}}}", items.join(","))
    }

    pub fn set_labels(&self, set: VertexSet) -> Vec<String> {
        set.iter().map(|v| self.labels[v].clone()).collect()
    }

    pub fn edge_labels(&self) -> Vec<(String, String)> {
        self.edges
            .iter()
            .map(|&(u, v)| (self.labels[u].clone(), self.labels[v].clone()))
            .collect()
    }
}

pub(crate) fn block_labels(r: usize) -> Vec<String> {
    (1..=r).map(|i| format!("B{i}")).collect()
}

/// `G′_π` as a free function.
pub fn make_cliques(g: &Graph, pi: &SetPartition) -> Graph {
    g.make_cliques(pi)
}

/// `G/∼_π` as a free function.
pub fn contract_graph(g: &Graph, pi: &SetPartition) -> Graph {
    g.contract(pi)
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges
            .iter()
            .map(|&(u, v)| format!("{}-{}", self.labels[u], self.labels[v]))
            .collect();
        write!(f, "Graph({:?}, [{}])", self.labels, edges.join(", "))
    }
}

pub type GraphRef = Arc<Graph>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_sort_naturally() {
        let g = Graph::new(["10", "2", "1"], [("1", "10")]).unwrap();
        assert_eq!(g.labels(), ["1", "2", "10"]);
        assert_eq!(g.edges(), &[(0, 2)]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(Graph::new(["a", "a"], Vec::<(&str, &str)>::new()), Err(Error::InvalidInput(_))));
        assert!(matches!(Graph::new(["a"], [("a", "a")]), Err(Error::InvalidInput(_))));
        assert!(matches!(Graph::new(["a", "b"], [("a", "c")]), Err(Error::UnknownVertex(_))));
        assert!(matches!(
            Graph::new(["a", "b"], [("a", "b"), ("b", "a")]),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn standard_families() {
        assert_eq!(Graph::complete(4).m(), 6);
        assert_eq!(Graph::cycle(5).m(), 5);
        assert_eq!(Graph::path(4).m(), 3);
        assert!(Graph::cycle(4).has_edge(0, 3));
        assert_eq!(Graph::edgeless(3).components().len(), 3);
    }

    #[test]
    fn k3_cliques_and_contraction() {
        let g = Graph::complete(3);
        let pi = SetPartition::parse(&g, "1|2,3").unwrap();
        assert_eq!(g.make_cliques(&pi), g);
        let c = g.contract(&pi);
        assert_eq!(c.labels(), ["B1", "B2"]);
        assert_eq!(c.edges(), &[(0, 1)]);
    }

    #[test]
    fn c4_contraction_has_no_diagonal() {
        let g = Graph::cycle(4);
        let pi = SetPartition::parse(&g, "1,3|2|4").unwrap();
        let c = g.contract(&pi);
        // blocks: B1={1,3}, B2={2}, B3={4}
        assert_eq!(c.edges(), &[(0, 1), (0, 2)]);
        assert!(!c.has_edge(1, 2));
    }

    #[test]
    fn edgeless_contraction() {
        let g = Graph::edgeless(4);
        let pi = SetPartition::parse(&g, "1,2|3,4").unwrap();
        assert_eq!(g.contract(&pi).m(), 0);
    }
}
