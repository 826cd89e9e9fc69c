//! Ordinary finite posets `P(G, ω)` and Stanley's face-partition machinery.

use std::sync::Arc;

use crate::error::{check_cap, Error, Result};
use crate::graph::orientation::{reachability, topological_order};
use crate::graph::{is_acyclic, quotient, strongly_connected_components, Graph, Orientation, SetPartition};
use crate::vset::VertexSet;

/// Cap for Bell-number enumeration of the face partition lattice.
pub const FACE_LATTICE_MAX_VERTICES: usize = 9;

/// A strict partial order on the vertices of a graph, stored transitively closed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poset {
    graph: Arc<Graph>,
    up: Vec<VertexSet>,
    down: Vec<VertexSet>,
}

impl Poset {
    /// `P(G, ω)`: the reachability order of an acyclic orientation.
    pub fn from_orientation(o: &Orientation) -> Result<Poset> {
        if !is_acyclic(o) {
            return Err(Error::NotAcyclic);
        }
        Ok(Self::from_successors(o.graph().clone(), &o.successors()))
    }

    /// Transitive closure of an acyclic digraph on `graph`'s vertices.
    pub(crate) fn from_successors(graph: Arc<Graph>, succ: &[VertexSet]) -> Poset {
        debug_assert!(topological_order(succ).is_some());
        let up: Vec<VertexSet> = reachability(succ)
            .into_iter()
            .enumerate()
            .map(|(v, r)| r.without(v))
            .collect();
        let mut down = vec![VertexSet::EMPTY; up.len()];
        for (v, u) in up.iter().enumerate() {
            for w in u.iter() {
                down[w] = down[w].with(v);
            }
        }
        Poset { graph, up, down }
    }

    /// Poset from explicit relations `a < b`; errors if they contain a cycle.
    pub fn from_relations(graph: Arc<Graph>, less: &[(usize, usize)]) -> Result<Poset> {
        let mut succ = vec![VertexSet::EMPTY; graph.n()];
        for &(a, b) in less {
            succ[a] = succ[a].with(b);
        }
        if topological_order(&succ).is_none() {
            return Err(Error::NotAcyclic);
        }
        Ok(Self::from_successors(graph, &succ))
    }

    pub fn graph(&self) -> &Arc<Graph> {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.up.len()
    }

    pub fn less(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        a == b || self.less(a, b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        a == b || self.less(a, b) || self.less(b, a)
    }

    /// Strict up-set of `v`.
    pub fn above(&self, v: usize) -> VertexSet {
        self.up[v]
    }

    /// Strict down-set of `v`.
    pub fn below(&self, v: usize) -> VertexSet {
        self.down[v]
    }

    /// All pairs `a < b`.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        self.up
            .iter()
            .enumerate()
            .flat_map(|(a, s)| s.iter().map(move |b| (a, b)))
            .collect()
    }

    pub fn minimal(&self) -> VertexSet {
        (0..self.n()).filter(|&v| self.down[v].is_empty()).collect()
    }

    pub fn maximal(&self) -> VertexSet {
        (0..self.n()).filter(|&v| self.up[v].is_empty()).collect()
    }

    /// Whether `a ⋖ b`.
    pub fn covers(&self, a: usize, b: usize) -> bool {
        self.less(a, b) && self.up[a].intersection(self.down[b]).is_empty()
    }

    /// `Ḡ(P)`: the comparability graph.
    pub fn transitive_closure_graph(&self) -> Graph {
        let pairs = self.relations();
        self.graph.with_edges(pairs)
    }

    /// `Ĝ^Hasse(P)`: the cover graph.
    pub fn hasse_graph(&self) -> Graph {
        self.graph.with_edges(self.cover_relations())
    }

    pub fn cover_relations(&self) -> Vec<(usize, usize)> {
        self.relations().into_iter().filter(|&(a, b)| self.covers(a, b)).collect()
    }

    /// Orientation of a graph on the same vertex set by this order; errors
    /// if some edge joins incomparable elements.
    pub fn orient(&self, g: Arc<Graph>) -> Result<Orientation> {
        let arcs = g
            .edges()
            .iter()
            .map(|&(u, v)| {
                if self.less(u, v) {
                    Ok((u, v))
                } else if self.less(v, u) {
                    Ok((v, u))
                } else {
                    Err(Error::InvalidInput(format!(
                        "{} and {} are incomparable",
                        g.label(u),
                        g.label(v)
                    )))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Orientation::from_indices(g, &arcs, &[])
    }

    pub fn is_chain(&self, set: VertexSet) -> bool {
        set.iter().all(|a| set.without(a).is_subset(self.up[a].union(self.down[a])))
    }

    pub fn is_antichain(&self, set: VertexSet) -> bool {
        set.iter().all(|a| set.is_disjoint(self.up[a]))
    }

    /// Elements of a chain listed bottom to top.
    pub fn sort_chain(&self, set: VertexSet) -> Vec<usize> {
        let mut v: Vec<usize> = set.iter().collect();
        v.sort_by_key(|&x| self.down[x].intersection(set).len());
        v
    }

    /// All chains, including the empty one, in increasing mask order.
    pub fn chains(&self) -> Vec<VertexSet> {
        self.graph.vertices().subsets().filter(|&s| self.is_chain(s)).collect()
    }

    /// All antichains, including the empty one, in increasing mask order.
    pub fn antichains(&self) -> Vec<VertexSet> {
        self.graph.vertices().subsets().filter(|&s| self.is_antichain(s)).collect()
    }

    /// `[i, j] = {k : i ≤ k ≤ j}`.
    pub fn interval(&self, i: usize, j: usize) -> VertexSet {
        if i == j {
            VertexSet::singleton(i)
        } else if self.less(i, j) {
            self.up[i].intersection(self.down[j]).with(i).with(j)
        } else {
            VertexSet::EMPTY
        }
    }

    pub fn is_ideal(&self, set: VertexSet) -> bool {
        set.iter().all(|v| self.down[v].is_subset(set))
    }

    pub fn is_filter(&self, set: VertexSet) -> bool {
        set.iter().all(|v| self.up[v].is_subset(set))
    }

    /// All order ideals, in increasing mask order.
    pub fn order_ideals(&self) -> Vec<VertexSet> {
        self.graph.vertices().subsets().filter(|&s| self.is_ideal(s)).collect()
    }

    /// Linear extensions in lexicographic order of their index sequences.
    pub fn linear_extensions(&self, cap: usize) -> Result<Vec<Vec<usize>>> {
        check_cap("linear extensions", self.n(), cap)?;
        let mut out = Vec::new();
        let mut seq = Vec::with_capacity(self.n());
        self.extend(VertexSet::EMPTY, &mut seq, &mut out);
        Ok(out)
    }

    fn extend(&self, placed: VertexSet, seq: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if seq.len() == self.n() {
            out.push(seq.clone());
            return;
        }
        for v in 0..self.n() {
            if !placed.contains(v) && self.down[v].is_subset(placed) {
                seq.push(v);
                self.extend(placed.with(v), seq, out);
                seq.pop();
            }
        }
    }
}

/// `cl_P(π)`: the least coarsening of `π` whose quotient by `o` is acyclic.
pub fn closure_partition(o: &Orientation, pi: &SetPartition) -> SetPartition {
    let mut cur = pi.clone();
    loop {
        let q = quotient(o, &cur);
        if q.is_acyclic() {
            return cur;
        }
        let scc = strongly_connected_components(q.orientation());
        cur = cur.compose(&scc);
    }
}

/// Every block induces a connected subgraph of the Hasse diagram.
pub fn is_connected_partition(p: &Poset, pi: &SetPartition) -> bool {
    let hasse = p.hasse_graph();
    pi.blocks().iter().all(|&b| hasse.is_connected_within(b))
}

/// The two ingredients of a closed face partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FacePartitionStatus {
    /// `ω/∼_π` is acyclic.
    pub compatible: bool,
    /// Blocks are connected in the Hasse diagram.
    pub connected: bool,
}

impl FacePartitionStatus {
    pub fn is_closed_face_partition(self) -> bool {
        self.compatible && self.connected
    }
}

pub fn face_partition_status(o: &Orientation, pi: &SetPartition) -> Result<FacePartitionStatus> {
    let p = Poset::from_orientation(o)?;
    Ok(FacePartitionStatus {
        compatible: quotient(o, pi).is_acyclic(),
        connected: is_connected_partition(&p, pi),
    })
}

/// Connected and compatible.
pub fn is_closed_face_partition(o: &Orientation, pi: &SetPartition) -> Result<bool> {
    Ok(face_partition_status(o, pi)?.is_closed_face_partition())
}

/// All closed face partitions of `P(G, ω)`, in restricted-growth order.
pub fn closed_face_partition_lattice(o: &Orientation) -> Result<Vec<SetPartition>> {
    closed_face_partition_lattice_with_cap(o, FACE_LATTICE_MAX_VERTICES)
}

pub fn closed_face_partition_lattice_with_cap(o: &Orientation, cap: usize) -> Result<Vec<SetPartition>> {
    check_cap("face partition lattice", o.n(), cap)?;
    let p = Poset::from_orientation(o)?;
    let hasse = p.hasse_graph();
    Ok(SetPartition::all(o.n())
        .into_iter()
        .filter(|pi| pi.blocks().iter().all(|&b| hasse.is_connected_within(b)))
        .filter(|pi| quotient(o, pi).is_acyclic())
        .collect())
}
