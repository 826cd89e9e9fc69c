//! Source-to-sink flips and the equivalence classes they generate.
//!
//! A [`FlipClass`] is the set of acyclic orientations reachable from one
//! another by turning sources into sinks (and back). Classes are
//! materialized in full; downstream code quantifies over their members.

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::{Arc, RwLock};

use crate::error::{check_cap, Error, Result};
use crate::graph::{is_acyclic, strongly_connected_components, tutte_10, Dir, Graph, Orientation};
use crate::vset::VertexSet;

/// Default vertex cap for anything that materializes flip classes.
pub const DEFAULT_MAX_VERTICES: usize = 10;

/// Flip-equivalence class `[ω]` of an acyclic orientation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlipClass {
    graph: Arc<Graph>,
    members: Vec<Orientation>,
}

impl FlipClass {
    pub fn graph(&self) -> &Arc<Graph> {
        &self.graph
    }

    /// Lexicographically least member under the per-edge direction encoding.
    pub fn canonical(&self) -> &Orientation {
        &self.members[0]
    }

    /// Members in increasing code order (canonical first).
    pub fn members(&self) -> &[Orientation] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, o: &Orientation) -> bool {
        o.graph() == &self.graph && self.members.binary_search_by_key(&o.code(), Orientation::code).is_ok()
    }

    /// Flip graph: members as nodes, an edge for each single flip between two members.
    /// Edges are `(i, j, vertex)` with `i < j` indexing [`FlipClass::members`].
    pub fn flip_edges(&self) -> Vec<(usize, usize, usize)> {
        let index: HashMap<u128, usize> = self.members.iter().enumerate().map(|(i, m)| (m.code(), i)).collect();
        let mut out = Vec::new();
        for (i, m) in self.members.iter().enumerate() {
            for v in m.sources().iter() {
                let j = index[&m.reverse_boundary(VertexSet::singleton(v)).code()];
                if i != j {
                    out.push((i.min(j), i.max(j), v));
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// Turns the source `v` into a sink.
pub fn flip_source(o: &Orientation, v: usize) -> Result<Orientation> {
    if !o.is_source(v) {
        return Err(Error::NotASource(o.graph().label(v).to_string()));
    }
    Ok(o.reverse_boundary(VertexSet::singleton(v)))
}

/// Turns the sink `v` into a source; inverse of [`flip_source`].
pub fn flip_sink(o: &Orientation, v: usize) -> Result<Orientation> {
    if !o.is_sink(v) {
        return Err(Error::NotASink(o.graph().label(v).to_string()));
    }
    Ok(o.reverse_boundary(VertexSet::singleton(v)))
}

/// Closure of `{o}` under flips, with the default vertex cap.
pub fn flip_class(o: &Orientation) -> Result<FlipClass> {
    flip_class_with_cap(o, DEFAULT_MAX_VERTICES)
}

pub fn flip_class_with_cap(o: &Orientation, cap: usize) -> Result<FlipClass> {
    check_cap("flip class", o.n(), cap)?;
    if !is_acyclic(o) {
        return Err(Error::NotAcyclic);
    }
    let members = bfs(o, |cur| {
        let mut next = Vec::new();
        for v in 0..cur.n() {
            // Isolated vertices are both sources and sinks; flipping them is the identity.
            if cur.is_source(v) || cur.is_sink(v) {
                next.push(cur.reverse_boundary(VertexSet::singleton(v)));
            }
        }
        next
    });
    Ok(FlipClass {
        graph: o.graph().clone(),
        members,
    })
}

fn bfs(start: &Orientation, step: impl Fn(&Orientation) -> Vec<Orientation>) -> Vec<Orientation> {
    let mut seen: HashSet<u128> = HashSet::from([start.code()]);
    let mut members = vec![start.clone()];
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(cur) = queue.pop_front() {
        for nxt in step(&cur) {
            if seen.insert(nxt.code()) {
                members.push(nxt.clone());
                queue.push_back(nxt);
            }
        }
    }
    members.sort_by_key(Orientation::code);
    members
}

/// `ω ≡ ω′`.
pub fn torically_equivalent(a: &Orientation, b: &Orientation) -> Result<bool> {
    if a.graph() != b.graph() {
        return Err(Error::GraphMismatch);
    }
    Ok(flip_class(a)?.canonical() == flip_class(b)?.canonical())
}

/// Flip class of a preposet: a source (or sink) strongly connected
/// component of the condensation has every arc across its boundary reversed.
pub fn preposet_flip_class(o: &Orientation) -> Vec<Orientation> {
    bfs(o, |cur| {
        let pi = strongly_connected_components(cur);
        let mut has_in = vec![false; pi.num_blocks()];
        let mut has_out = vec![false; pi.num_blocks()];
        for (t, h) in cur.arcs() {
            let (a, b) = (pi.block_of(t), pi.block_of(h));
            if a != b {
                has_out[a] = true;
                has_in[b] = true;
            }
        }
        pi.blocks()
            .iter()
            .enumerate()
            .filter(|&(i, _)| !has_in[i] || !has_out[i])
            .map(|(_, &b)| cur.reverse_boundary(b))
            .collect()
    })
}

/// Every acyclic orientation of `g`, in increasing code order.
pub fn acyclic_orientations(g: &Arc<Graph>) -> Vec<Orientation> {
    let m = g.m();
    let mut succ = vec![VertexSet::EMPTY; g.n()];
    let mut dirs = Vec::with_capacity(m);
    let mut out = Vec::new();

    fn reaches(succ: &[VertexSet], from: usize, to: usize) -> bool {
        let mut seen = VertexSet::singleton(from);
        let mut stack = vec![from];
        while let Some(x) = stack.pop() {
            if x == to {
                return true;
            }
            for y in succ[x].difference(seen).iter() {
                seen = seen.with(y);
                stack.push(y);
            }
        }
        false
    }

    fn rec(g: &Arc<Graph>, e: usize, succ: &mut [VertexSet], dirs: &mut Vec<Dir>, out: &mut Vec<Orientation>) {
        if e == g.m() {
            out.push(Orientation::new(g.clone(), dirs.clone()).expect("one direction per edge"));
            return;
        }
        let (u, v) = g.edges()[e];
        for (d, t, h) in [(Dir::Forward, u, v), (Dir::Backward, v, u)] {
            if !reaches(succ, h, t) {
                succ[t] = succ[t].with(h);
                dirs.push(d);
                rec(g, e + 1, succ, dirs, out);
                dirs.pop();
                succ[t] = succ[t].without(h);
            }
        }
    }

    rec(g, 0, &mut succ, &mut dirs, &mut out);
    out
}

/// All flip classes of `g`, ordered by canonical representative.
pub fn all_flip_classes(g: &Arc<Graph>) -> Result<Vec<FlipClass>> {
    all_flip_classes_with_cap(g, DEFAULT_MAX_VERTICES)
}

pub fn all_flip_classes_with_cap(g: &Arc<Graph>, cap: usize) -> Result<Vec<FlipClass>> {
    check_cap("flip class enumeration", g.n(), cap)?;
    let mut seen: HashSet<u128> = HashSet::new();
    let mut classes = Vec::new();
    for o in acyclic_orientations(g) {
        if seen.contains(&o.code()) {
            continue;
        }
        let class = flip_class_with_cap(&o, cap)?;
        seen.extend(class.members().iter().map(Orientation::code));
        classes.push(class);
    }
    classes.sort_by_key(|c| c.canonical().code());
    Ok(classes)
}

/// Number of flip classes of `g`.
pub fn count_flip_classes(g: &Arc<Graph>) -> Result<usize> {
    Ok(all_flip_classes(g)?.len())
}

/// Cross-checks the class count against `T_G(1,0)`.
pub fn count_matches_tutte(g: &Arc<Graph>) -> Result<bool> {
    Ok(count_flip_classes(g)? as u64 == tutte_10(g))
}

/// Memo of flip classes keyed by graph and member code. Readers share the
/// lock; a miss computes outside the lock and inserts every member.
#[derive(Default)]
pub struct FlipCache {
    inner: RwLock<HashMap<Graph, HashMap<u128, Arc<FlipClass>>>>,
}

impl FlipCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get_or_compute(&self, o: &Orientation) -> Result<Arc<FlipClass>> {
        let code = o.code();
        if let Some(hit) = self
            .inner
            .read()
            .expect("flip cache poisoned")
            .get(o.graph().as_ref())
            .and_then(|m| m.get(&code))
        {
            return Ok(hit.clone());
        }
        let class = Arc::new(flip_class(o)?);
        let mut guard = self.inner.write().expect("flip cache poisoned");
        let per_graph = guard.entry(o.graph().as_ref().clone()).or_default();
        if let Some(existing) = per_graph.get(&code) {
            return Ok(existing.clone());
        }
        for m in class.members() {
            per_graph.insert(m.code(), class.clone());
        }
        Ok(class)
    }

    pub fn len(&self) -> usize {
        self.inner.read().expect("flip cache poisoned").values().map(HashMap::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
