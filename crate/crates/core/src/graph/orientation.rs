use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use super::{Graph, SetPartition};
use crate::error::{Error, Result};
use crate::vset::VertexSet;

/// A vertex pair `(u, v)`.
pub type Pair = (usize, usize);

/// Direction of an edge `(u, v)`, `u < v`, in canonical index order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dir {
    /// `u → v`
    Forward,
    /// `v → u`
    Backward,
    /// both ways: a tie, as in a preposet
    Both,
}

impl Dir {
    fn code(self) -> u128 {
        match self {
            Dir::Forward => 0,
            Dir::Backward => 1,
            Dir::Both => 2,
        }
    }

    pub fn reversed(self) -> Dir {
        match self {
            Dir::Forward => Dir::Backward,
            Dir::Backward => Dir::Forward,
            Dir::Both => Dir::Both,
        }
    }
}

/// An orientation of every edge of a graph. With no [`Dir::Both`] edges
/// this is an ordinary orientation; with ties it stands for a preposet.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Orientation {
    graph: Arc<Graph>,
    dirs: Vec<Dir>,
}

impl Orientation {
    pub fn new(graph: Arc<Graph>, dirs: Vec<Dir>) -> Result<Self> {
        if dirs.len() != graph.m() {
            return Err(Error::InvalidInput(format!(
                "{} directions for {} edges",
                dirs.len(),
                graph.m()
            )));
        }
        Ok(Orientation { graph, dirs })
    }

    /// Builds an orientation from `(tail, head)` arcs and tied pairs; every
    /// edge of the graph must be covered exactly once.
    pub fn from_labels<S: AsRef<str>>(graph: Arc<Graph>, arcs: &[(S, S)], ties: &[(S, S)]) -> Result<Self> {
        let idx = |(a, b): &(S, S)| -> Result<(usize, usize)> {
            Ok((graph.index_of(a.as_ref())?, graph.index_of(b.as_ref())?))
        };
        let arcs = arcs.iter().map(idx).collect::<Result<Vec<_>>>()?;
        let ties = ties.iter().map(idx).collect::<Result<Vec<_>>>()?;
        Self::from_indices(graph, &arcs, &ties)
    }

    pub fn from_indices(graph: Arc<Graph>, arcs: &[(usize, usize)], ties: &[(usize, usize)]) -> Result<Self> {
        let mut dirs: Vec<Option<Dir>> = vec![None; graph.m()];
        let named = |u: usize, v: usize| format!("{{{}, {}}}", graph.label(u), graph.label(v));
        let tagged = arcs
            .iter()
            .map(|&(t, h)| (t, h, if t < h { Dir::Forward } else { Dir::Backward }))
            .chain(ties.iter().map(|&(a, b)| (a, b, Dir::Both)));
        for (a, b, d) in tagged {
            let e = graph
                .edge_index(a, b)
                .ok_or_else(|| Error::InvalidInput(format!("{} is not an edge", named(a, b))))?;
            if dirs[e].replace(d).is_some() {
                return Err(Error::InvalidInput(format!("edge {} oriented twice", named(a, b))));
            }
        }
        let dirs = dirs
            .into_iter()
            .enumerate()
            .map(|(e, d)| {
                let (u, v) = graph.edges()[e];
                d.ok_or_else(|| Error::InvalidInput(format!("edge {} has no orientation", named(u, v))))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Orientation { graph, dirs })
    }

    /// Orients every edge from the earlier to the later vertex of `order`.
    pub fn from_linear_order(graph: Arc<Graph>, order: &[usize]) -> Self {
        let mut pos = vec![usize::MAX; graph.n()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let dirs = graph
            .edges()
            .iter()
            .map(|&(u, v)| if pos[u] < pos[v] { Dir::Forward } else { Dir::Backward })
            .collect();
        Orientation { graph, dirs }
    }

    /// Orients every edge by comparing `key` values, ties on equality.
    pub fn from_key<K: Ord>(graph: Arc<Graph>, key: impl Fn(usize) -> K) -> Self {
        let dirs = graph
            .edges()
            .iter()
            .map(|&(u, v)| match key(u).cmp(&key(v)) {
                std::cmp::Ordering::Less => Dir::Forward,
                std::cmp::Ordering::Greater => Dir::Backward,
                std::cmp::Ordering::Equal => Dir::Both,
            })
            .collect();
        Orientation { graph, dirs }
    }

    pub fn graph(&self) -> &Arc<Graph> {
        &self.graph
    }

    pub fn dirs(&self) -> &[Dir] {
        &self.dirs
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn has_ties(&self) -> bool {
        self.dirs.contains(&Dir::Both)
    }

    /// Per-edge 2-bit code in sorted-edge order; lexicographic order of the
    /// direction vectors agrees with the order of codes read most-significant first.
    pub fn code(&self) -> u128 {
        debug_assert!(self.dirs.len() <= 64);
        self.dirs.iter().fold(0u128, |acc, d| acc << 2 | d.code())
    }

    /// All arcs `(tail, head)`; a tie contributes both arcs.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.dirs.len());
        for (&(u, v), d) in self.graph.edges().iter().zip(&self.dirs) {
            match d {
                Dir::Forward => out.push((u, v)),
                Dir::Backward => out.push((v, u)),
                Dir::Both => {
                    out.push((u, v));
                    out.push((v, u));
                }
            }
        }
        out
    }

    /// Arcs and ties split apart, ties written `(min, max)`.
    pub fn arcs_and_ties(&self) -> (Vec<Pair>, Vec<Pair>) {
        let mut arcs = Vec::new();
        let mut ties = Vec::new();
        for (&(u, v), d) in self.graph.edges().iter().zip(&self.dirs) {
            match d {
                Dir::Forward => arcs.push((u, v)),
                Dir::Backward => arcs.push((v, u)),
                Dir::Both => ties.push((u, v)),
            }
        }
        (arcs, ties)
    }

    /// Out-neighbour sets, ties counting both ways.
    pub fn successors(&self) -> Vec<VertexSet> {
        let mut out = vec![VertexSet::EMPTY; self.n()];
        for (t, h) in self.arcs() {
            out[t] = out[t].with(h);
        }
        out
    }

    pub fn predecessors(&self) -> Vec<VertexSet> {
        let mut out = vec![VertexSet::EMPTY; self.n()];
        for (t, h) in self.arcs() {
            out[h] = out[h].with(t);
        }
        out
    }

    fn incident(&self, v: usize) -> impl Iterator<Item = (usize, Dir, bool)> + '_ {
        // (edge index, direction, v is the lower endpoint)
        self.graph
            .edges()
            .iter()
            .enumerate()
            .filter(move |(_, &(a, b))| a == v || b == v)
            .map(move |(e, &(a, _))| (e, self.dirs[e], a == v))
    }

    /// Every incident edge leaves `v` (vacuously true for isolated vertices).
    pub fn is_source(&self, v: usize) -> bool {
        self.incident(v).all(|(_, d, low)| d == if low { Dir::Forward } else { Dir::Backward })
    }

    /// Every incident edge enters `v`.
    pub fn is_sink(&self, v: usize) -> bool {
        self.incident(v).all(|(_, d, low)| d == if low { Dir::Backward } else { Dir::Forward })
    }

    pub fn sources(&self) -> VertexSet {
        (0..self.n()).filter(|&v| self.is_source(v)).collect()
    }

    pub fn sinks(&self) -> VertexSet {
        (0..self.n()).filter(|&v| self.is_sink(v)).collect()
    }

    /// Reverses every edge with exactly one endpoint in `set`.
    pub fn reverse_boundary(&self, set: VertexSet) -> Orientation {
        let dirs = self
            .graph
            .edges()
            .iter()
            .zip(&self.dirs)
            .map(|(&(u, v), &d)| if set.contains(u) != set.contains(v) { d.reversed() } else { d })
            .collect();
        Orientation {
            graph: self.graph.clone(),
            dirs,
        }
    }

    /// Every edge reversed.
    pub fn reversed(&self) -> Orientation {
        Orientation {
            graph: self.graph.clone(),
            dirs: self.dirs.iter().map(|d| d.reversed()).collect(),
        }
    }

    /// Restriction to a subgraph on the same vertex set. Edges of `sub` must be edges of `self.graph()`.
    pub fn restrict_to(&self, sub: Arc<Graph>) -> Result<Orientation> {
        let dirs = sub
            .edges()
            .iter()
            .map(|&(u, v)| {
                self.graph
                    .edge_index(u, v)
                    .map(|e| self.dirs[e])
                    .ok_or_else(|| Error::InvalidInput("restriction to a non-subgraph".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Orientation::new(sub, dirs)
    }

    pub fn describe(&self) -> String {
        let g = &self.graph;
        let (arcs, ties) = self.arcs_and_ties();
        let mut parts: Vec<String> = arcs
            .iter()
            .map(|&(t, h)| format!("{}→{}", g.label(t), g.label(h)))
            .collect();
        parts.extend(ties.iter().map(|&(a, b)| format!("{}↔{}", g.label(a), g.label(b))));
        parts.join(", ")
    }
}

impl fmt::Debug for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Orientation[{}]", self.describe())
    }
}

/// Reachability sets (reflexive) of a digraph given by successor sets.
pub(crate) fn reachability(succ: &[VertexSet]) -> Vec<VertexSet> {
    let n = succ.len();
    (0..n)
        .map(|s| {
            let mut seen = VertexSet::singleton(s);
            let mut frontier = seen;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier.iter() {
                    next = next.union(succ[v]);
                }
                next = next.difference(seen);
                seen = seen.union(next);
                frontier = next;
            }
            seen
        })
        .collect()
}

/// Kahn's algorithm on successor sets; `None` if there is a directed cycle.
pub(crate) fn topological_order(succ: &[VertexSet]) -> Option<Vec<usize>> {
    let n = succ.len();
    let mut indeg = vec![0usize; n];
    for s in succ {
        for v in s.iter() {
            indeg[v] += 1;
        }
    }
    let mut ready: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).rev().collect();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = ready.pop() {
        order.push(v);
        for w in succ[v].iter() {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                ready.push(w);
            }
        }
    }
    (order.len() == n).then_some(order)
}

/// True iff there is no directed cycle, ties counting as 2-cycles.
pub fn is_acyclic(o: &Orientation) -> bool {
    !o.has_ties() && topological_order(&o.successors()).is_some()
}

/// Strongly connected components, ties counting as 2-cycles.
pub fn strongly_connected_components(o: &Orientation) -> SetPartition {
    let reach = reachability(&o.successors());
    let n = o.n();
    let mut blocks = Vec::new();
    let mut left = VertexSet::full(n);
    while let Some(v) = left.first() {
        let block: VertexSet = reach[v].iter().filter(|&w| reach[w].contains(v)).collect();
        left = left.difference(block);
        blocks.push(block);
    }
    SetPartition::from_blocks_unchecked(n, blocks)
}

/// A directed acyclic graph, represented as a tie-free acyclic orientation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Dag(Orientation);

impl Dag {
    pub fn orientation(&self) -> &Orientation {
        &self.0
    }

    pub fn into_orientation(self) -> Orientation {
        self.0
    }
}

impl TryFrom<Orientation> for Dag {
    type Error = Error;

    fn try_from(o: Orientation) -> Result<Dag> {
        if is_acyclic(&o) {
            Ok(Dag(o))
        } else {
            Err(Error::NotAcyclic)
        }
    }
}

/// `ω/∼_π`: the digraph obtained by collapsing each block of a partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    partition: SetPartition,
    arcs: BTreeSet<(usize, usize)>,
    orientation: Orientation,
}

impl Quotient {
    pub fn partition(&self) -> &SetPartition {
        &self.partition
    }

    /// Arcs between distinct blocks, as block indices.
    pub fn arcs(&self) -> &BTreeSet<(usize, usize)> {
        &self.arcs
    }

    /// The quotient as an orientation of the contracted graph; a pair of
    /// opposite arcs between two blocks becomes a tie.
    pub fn orientation(&self) -> &Orientation {
        &self.orientation
    }

    pub fn is_acyclic(&self) -> bool {
        is_acyclic(&self.orientation)
    }

    /// Number of strongly connected components of the quotient.
    pub fn scc_count(&self) -> usize {
        strongly_connected_components(&self.orientation).num_blocks()
    }

    pub fn into_orientation(self) -> Orientation {
        self.orientation
    }

    pub fn into_dag(self) -> Option<Dag> {
        Dag::try_from(self.orientation).ok()
    }
}

/// Collapses each block of `pi`. Arcs inside a block vanish, parallel arcs merge.
pub fn quotient(o: &Orientation, pi: &SetPartition) -> Quotient {
    let contracted = Arc::new(o.graph().contract(pi));
    let arcs: BTreeSet<(usize, usize)> = o
        .arcs()
        .into_iter()
        .map(|(t, h)| (pi.block_of(t), pi.block_of(h)))
        .filter(|(a, b)| a != b)
        .collect();
    let dirs = contracted
        .edges()
        .iter()
        .map(|&(a, b)| match (arcs.contains(&(a, b)), arcs.contains(&(b, a))) {
            (true, true) => Dir::Both,
            (true, false) => Dir::Forward,
            _ => Dir::Backward,
        })
        .collect();
    let orientation = Orientation::new(contracted, dirs).expect("contracted edges match");
    Quotient {
        partition: pi.clone(),
        arcs,
        orientation,
    }
}
