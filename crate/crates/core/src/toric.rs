//! Toric posets `P(G, [ω])` and their chains, closures, Hasse diagrams,
//! intervals, antichains, face partitions and total toric extensions.
//!
//! Every "for some / for all representatives" statement is evaluated by
//! iterating the materialized flip class.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{check_cap, Error, Result};
use crate::flipclass::{flip_class_with_cap, FlipClass, DEFAULT_MAX_VERTICES};
use crate::graph::{quotient, Graph, Orientation, SetPartition};
use crate::poset::{closure_partition, Poset};
use crate::vset::VertexSet;

/// A cyclic order of distinct vertices, rotated so the least vertex comes first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicWord(Vec<usize>);

impl CyclicWord {
    pub fn new(order: Vec<usize>) -> Result<CyclicWord> {
        let set: VertexSet = order.iter().copied().collect();
        if set.len() != order.len() {
            return Err(Error::InvalidInput("cyclic word repeats a vertex".into()));
        }
        Ok(Self::canonical(order))
    }

    pub(crate) fn canonical(mut order: Vec<usize>) -> CyclicWord {
        if let Some(pos) = order.iter().enumerate().min_by_key(|(_, &v)| v).map(|(i, _)| i) {
            order.rotate_left(pos);
        }
        CyclicWord(order)
    }

    pub fn from_labels<S: AsRef<str>>(g: &Graph, labels: &[S]) -> Result<CyclicWord> {
        let order = labels.iter().map(|l| g.index_of(l.as_ref())).collect::<Result<Vec<_>>>()?;
        Self::new(order)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn set(&self) -> VertexSet {
        self.0.iter().copied().collect()
    }

    /// All linear words in this cyclic class.
    pub fn rotations(&self) -> Vec<Vec<usize>> {
        (0..self.0.len().max(1))
            .map(|k| {
                let mut w = self.0.clone();
                w.rotate_left(k);
                w
            })
            .collect()
    }

    /// Whether the linear word `w` is a cyclic shift of `self`.
    pub fn is_rotation_of(&self, w: &[usize]) -> bool {
        w.len() == self.0.len() && Self::canonical(w.to_vec()) == *self
    }

    pub fn labels(&self, g: &Graph) -> Vec<String> {
        self.0.iter().map(|&v| g.label(v).to_string()).collect()
    }

    pub fn format(&self, g: &Graph) -> String {
        format!("({})", self.labels(g).join(","))
    }
}

impl fmt::Debug for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?}]", self.0)
    }
}

/// `P(G, [ω])`, with lazily filled caches.
#[derive(Debug)]
pub struct ToricPoset {
    class: Arc<FlipClass>,
    posets: Vec<Poset>,
    cap: usize,
    closure: OnceLock<Arc<Graph>>,
    closure_class: OnceLock<Result<Arc<FlipClass>>>,
    hasse: OnceLock<Result<Graph>>,
    extensions: OnceLock<Result<Vec<CyclicWord>>>,
}

impl Clone for ToricPoset {
    fn clone(&self) -> Self {
        Self::from_class_with_cap(self.class.clone(), self.cap)
    }
}

impl PartialEq for ToricPoset {
    fn eq(&self, other: &Self) -> bool {
        self.class == other.class
    }
}

impl Eq for ToricPoset {}

impl ToricPoset {
    pub fn new(o: &Orientation) -> Result<ToricPoset> {
        Self::with_cap(o, DEFAULT_MAX_VERTICES)
    }

    pub fn with_cap(o: &Orientation, cap: usize) -> Result<ToricPoset> {
        Ok(Self::from_class_with_cap(Arc::new(flip_class_with_cap(o, cap)?), cap))
    }

    pub fn from_class(class: Arc<FlipClass>) -> ToricPoset {
        Self::from_class_with_cap(class, DEFAULT_MAX_VERTICES)
    }

    pub fn from_class_with_cap(class: Arc<FlipClass>, cap: usize) -> ToricPoset {
        let posets = class
            .members()
            .iter()
            .map(|m| Poset::from_orientation(m).expect("flip class members are acyclic"))
            .collect();
        ToricPoset {
            class,
            posets,
            cap,
            closure: OnceLock::new(),
            closure_class: OnceLock::new(),
            hasse: OnceLock::new(),
            extensions: OnceLock::new(),
        }
    }

    pub fn graph(&self) -> &Arc<Graph> {
        self.class.graph()
    }

    pub fn n(&self) -> usize {
        self.graph().n()
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn class(&self) -> &Arc<FlipClass> {
        &self.class
    }

    pub fn members(&self) -> &[Orientation] {
        self.class.members()
    }

    /// `P(G, ω′)` for each member, in member order.
    pub fn member_posets(&self) -> &[Poset] {
        &self.posets
    }

    /// The cyclic order induced on `set` by one member, if `set` is a chain there.
    fn member_word(p: &Poset, set: VertexSet) -> Option<CyclicWord> {
        p.is_chain(set).then(|| CyclicWord::canonical(p.sort_chain(set)))
    }

    /// Every member restricts to a total order on the word's entries that is a
    /// cyclic shift of the word.
    pub fn is_toric_chain(&self, word: &CyclicWord) -> bool {
        if word.len() <= 1 {
            return true;
        }
        let set = word.set();
        self.posets.iter().all(|p| Self::member_word(p, set).as_ref() == Some(word))
    }

    /// The cyclic order of `set` if it is a toric chain.
    pub fn chain_order(&self, set: VertexSet) -> Option<CyclicWord> {
        let w = Self::member_word(&self.posets[0], set)?;
        self.is_toric_chain(&w).then_some(w)
    }

    /// All toric chains (including `∅`), ordered by size then mask.
    pub fn toric_chains(&self) -> Result<Vec<(VertexSet, CyclicWord)>> {
        check_cap("toric chains", self.n(), self.cap)?;
        let mut chains: HashSet<VertexSet> = HashSet::from([VertexSet::EMPTY]);
        let mut out = vec![(VertexSet::EMPTY, CyclicWord(vec![]))];
        let mut layer = vec![VertexSet::EMPTY];
        while !layer.is_empty() {
            let mut next: BTreeSet<VertexSet> = BTreeSet::new();
            for &c in &layer {
                for v in self.graph().vertices().difference(c).iter() {
                    let s = c.with(v);
                    // every maximal proper subset must already be a chain
                    if s.iter().all(|u| chains.contains(&s.without(u))) {
                        next.insert(s);
                    }
                }
            }
            layer.clear();
            for s in next {
                if let Some(w) = self.chain_order(s) {
                    chains.insert(s);
                    out.push((s, w));
                    layer.push(s);
                }
            }
        }
        Ok(out)
    }

    /// `Ḡ^tor(P)`: edges comparable in every member.
    pub fn toric_transitive_closure(&self) -> Arc<Graph> {
        self.closure
            .get_or_init(|| {
                let g = self.graph();
                let edges = (0..g.n())
                    .flat_map(|u| (u + 1..g.n()).map(move |v| (u, v)))
                    .filter(|&(u, v)| self.posets.iter().all(|p| p.comparable(u, v)));
                Arc::new(g.with_edges(edges))
            })
            .clone()
    }

    /// `[ω̄^tor(P)]`: the flip class on `Ḡ^tor(P)` restricting to `[ω]`.
    pub fn closure_class(&self) -> Result<Arc<FlipClass>> {
        self.closure_class
            .get_or_init(|| {
                let o = self.closure_orientation()?;
                Ok(Arc::new(flip_class_with_cap(&o, self.cap)?))
            })
            .clone()
    }

    fn closure_orientation(&self) -> Result<Orientation> {
        self.posets[0].orient(self.toric_transitive_closure())
    }

    /// `Ĝ^torHasse(P)`: an edge of the toric closure is kept iff deleting it
    /// loses it from the toric closure.
    pub fn toric_hasse(&self) -> Result<Graph> {
        self.hasse.get_or_init(|| self.compute_hasse()).clone()
    }

    fn compute_hasse(&self) -> Result<Graph> {
        let closure = self.toric_transitive_closure();
        let o = self.closure_orientation()?;
        let mut kept = Vec::new();
        for &(u, v) in closure.edges() {
            let sub = Arc::new(closure.with_edges(closure.edges().iter().copied().filter(|&e| e != (u, v))));
            let restricted = o.restrict_to(sub)?;
            let t = ToricPoset::with_cap(&restricted, self.cap)?;
            if !t.toric_transitive_closure().has_edge(u, v) {
                kept.push((u, v));
            }
        }
        Ok(self.graph().with_edges(kept))
    }

    /// `[i, j]^tor`.
    pub fn toric_interval(&self, i: usize, j: usize) -> VertexSet {
        if i == j {
            return VertexSet::singleton(i);
        }
        if !self.posets.iter().all(|p| p.comparable(i, j)) {
            return VertexSet::EMPTY;
        }
        let pair = VertexSet::singleton(i).with(j);
        let mids = self.graph().vertices().difference(pair).iter().filter(|&k| {
            let w = CyclicWord::canonical(vec![i, k, j]);
            self.is_toric_chain(&w)
        });
        mids.fold(pair, VertexSet::with)
    }

    /// `[i, j]^tor` via toric directed paths `i →_tor j` in the closure class.
    pub fn toric_interval_by_paths(&self, i: usize, j: usize) -> Result<VertexSet> {
        if i == j {
            return Ok(VertexSet::singleton(i));
        }
        let class = self.closure_class()?;
        let mut out = VertexSet::EMPTY;
        for m in class.members() {
            if !m.arcs().contains(&(i, j)) {
                continue;
            }
            out = out.union(Poset::from_orientation(m)?.interval(i, j));
        }
        Ok(out)
    }

    /// `A` is an antichain of some member.
    pub fn is_geometric_toric_antichain(&self, a: VertexSet) -> bool {
        self.posets.iter().any(|p| p.is_antichain(a))
    }

    /// Some member has an acyclic quotient by `pi`.
    pub fn is_closed_toric_partition(&self, pi: &SetPartition) -> bool {
        self.members().iter().any(|m| quotient(m, pi).is_acyclic())
    }

    /// Some single member is both connected and compatible with `pi`.
    pub fn is_closed_toric_face_partition(&self, pi: &SetPartition) -> bool {
        self.members().iter().zip(&self.posets).any(|(m, p)| {
            quotient(m, pi).is_acyclic() && {
                let hasse = p.hasse_graph();
                pi.blocks().iter().all(|&b| hasse.is_connected_within(b))
            }
        })
    }

    /// `cl^tor_P(π)`: the finest of the member closures `cl_{ω′}(π)`.
    /// Every closed coarsening of `π` lies above one of them, so when they
    /// have a least element it is the toric closure; otherwise the minimal
    /// closed coarsenings disagree and the closure is ambiguous.
    pub fn toric_closure(&self, pi: &SetPartition) -> Result<SetPartition> {
        let mut closures: Vec<SetPartition> = self.members().iter().map(|m| closure_partition(m, pi)).collect();
        closures.sort();
        closures.dedup();
        let minimal: Vec<&SetPartition> =
            closures.iter().filter(|c| !closures.iter().any(|d| d != *c && d.leq(c))).collect();
        match minimal.as_slice() {
            [] => Ok(pi.clone()),
            [only] => Ok((*only).clone()),
            [a, b, ..] => {
                let g = self.graph();
                Err(Error::AmbiguousClosure(a.format(g), b.format(g)))
            }
        }
    }

    /// All closed toric face partitions, in restricted-growth order.
    pub fn closed_toric_face_partitions(&self, cap: usize) -> Result<Vec<SetPartition>> {
        check_cap("toric face partitions", self.n(), cap)?;
        Ok(SetPartition::all(self.n())
            .into_iter()
            .filter(|pi| self.is_closed_toric_face_partition(pi))
            .collect())
    }

    /// `L_tor(P)`, sorted.
    pub fn total_toric_extensions(&self) -> Result<Vec<CyclicWord>> {
        self.extensions
            .get_or_init(|| {
                let mut set = BTreeSet::new();
                for p in &self.posets {
                    for w in p.linear_extensions(self.cap)? {
                        set.insert(CyclicWord::canonical(w));
                    }
                }
                Ok(set.into_iter().collect())
            })
            .clone()
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::flipclass::all_flip_classes;

    pub(crate) fn orient(g: Graph, arcs: &[(&str, &str)]) -> Orientation {
        Orientation::from_labels(Arc::new(g), arcs, &[]).unwrap()
    }

    pub(crate) fn c4_omega() -> Orientation {
        orient(Graph::cycle(4), &[("1", "2"), ("2", "3"), ("3", "4"), ("1", "4")])
    }

    pub(crate) fn c4_omega_prime() -> Orientation {
        orient(Graph::cycle(4), &[("1", "2"), ("3", "2"), ("3", "4"), ("1", "4")])
    }

    fn word(g: &Graph, w: &[&str]) -> CyclicWord {
        CyclicWord::from_labels(g, w).unwrap()
    }

    fn set(g: &Graph, s: &[&str]) -> VertexSet {
        g.set_of(s).unwrap()
    }

    #[test]
    fn cyclic_word_canonical() {
        let g = Graph::edgeless(4);
        assert_eq!(word(&g, &["3", "4", "1", "2"]).as_slice(), &[0, 1, 2, 3]);
        assert!(word(&g, &["2", "3"]).is_rotation_of(&[2, 1]));
        assert!(CyclicWord::new(vec![1, 1]).is_err());
        assert!(matches!(CyclicWord::from_labels(&g, &["9"]), Err(Error::UnknownVertex(_))));
        assert_eq!(word(&g, &["2", "1"]).format(&g), "(1,2)");
    }

    #[test]
    fn toric_chain_examples() {
        let t = ToricPoset::new(&c4_omega()).unwrap();
        let g = t.graph().clone();
        assert!(t.is_toric_chain(&word(&g, &["1", "2", "3", "4"])));
        assert!(!t.is_toric_chain(&word(&g, &["1", "3", "2", "4"])));
        assert!(t.is_toric_chain(&word(&g, &["3"])));

        let tp = ToricPoset::new(&c4_omega_prime()).unwrap();
        assert!(!tp.is_toric_chain(&word(&g, &["1", "2", "3"])));
        assert!(!tp.is_toric_chain(&word(&g, &["1", "3", "2"])));
        let chains = tp.toric_chains().unwrap();
        let sizes: Vec<usize> = chains.iter().map(|(s, _)| s.len()).collect();
        assert_eq!(sizes, vec![0, 1, 1, 1, 1, 2, 2, 2, 2]);

        // every subset of V, with the induced cyclic order
        let all = t.toric_chains().unwrap();
        assert_eq!(all.len(), 16);
        for (s, w) in &all {
            let induced: Vec<usize> = (0..4).filter(|&v| s.contains(v)).collect();
            assert_eq!(*w, CyclicWord::canonical(induced));
        }

        let e = ToricPoset::new(&Orientation::new(Arc::new(Graph::edgeless(3)), vec![]).unwrap()).unwrap();
        assert_eq!(e.toric_chains().unwrap().len(), 4);
    }

    #[test]
    fn c5_classes_share_chains() {
        let g = Graph::cycle(5);
        let w = orient(g.clone(), &[("1", "2"), ("2", "3"), ("3", "4"), ("1", "5"), ("5", "4")]);
        let wp = orient(g, &[("1", "2"), ("2", "3"), ("4", "3"), ("5", "4"), ("1", "5")]);
        assert!(!crate::flipclass::torically_equivalent(&w, &wp).unwrap());
        let a = ToricPoset::new(&w).unwrap().toric_chains().unwrap();
        let b = ToricPoset::new(&wp).unwrap().toric_chains().unwrap();
        assert_eq!(a.len(), 11);
        assert_eq!(a, b);
    }

    #[test]
    fn closure_and_hasse_examples() {
        let t = ToricPoset::new(&c4_omega()).unwrap();
        assert_eq!(t.toric_transitive_closure().edge_set(), Graph::complete(4).edge_set());
        assert_eq!(t.toric_hasse().unwrap().edge_set(), Graph::cycle(4).edge_set());
        let ordinary = Poset::from_orientation(&c4_omega()).unwrap().hasse_graph();
        assert_eq!(ordinary.edge_set(), Graph::path(4).edge_set());

        let tp = ToricPoset::new(&c4_omega_prime()).unwrap();
        assert_eq!(tp.toric_transitive_closure().edge_set(), Graph::cycle(4).edge_set());
        assert_eq!(tp.toric_hasse().unwrap().edge_set(), Graph::cycle(4).edge_set());

        let edge = ToricPoset::new(&orient(Graph::path(2), &[("1", "2")])).unwrap();
        assert_eq!(edge.toric_transitive_closure().m(), 1);

        // chain class on the 2-path lives on the triangle; the diagonal is implied
        let k3 = orient(Graph::complete(3), &[("1", "2"), ("2", "3"), ("1", "3")]);
        let t3 = ToricPoset::new(&k3).unwrap();
        assert_eq!(t3.toric_transitive_closure().m(), 3);
        let h = t3.toric_hasse().unwrap();
        assert_eq!(h.edge_set(), Graph::cycle(3).edge_set());
        let path = ToricPoset::new(&orient(Graph::path(3), &[("1", "2"), ("2", "3")])).unwrap();
        assert_eq!(path.toric_transitive_closure().edge_set(), Graph::path(3).edge_set());
        assert_eq!(path.toric_hasse().unwrap().edge_set(), Graph::path(3).edge_set());
    }

    #[test]
    fn interval_examples() {
        let path = ToricPoset::new(&orient(Graph::path(3), &[("1", "2"), ("2", "3")])).unwrap();
        assert_eq!(path.toric_interval(0, 2), VertexSet::EMPTY);
        assert_eq!(path.toric_interval_by_paths(0, 2).unwrap(), VertexSet::EMPTY);
        assert_eq!(path.toric_interval(1, 1), VertexSet::singleton(1));

        let t = ToricPoset::new(&c4_omega()).unwrap();
        let g = t.graph().clone();
        assert_eq!(t.toric_interval(0, 2), set(&g, &["1", "2", "3"]));
        assert_eq!(t.toric_interval(2, 0), set(&g, &["3", "4", "1"]));
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(t.toric_interval(i, j), t.toric_interval_by_paths(i, j).unwrap());
            }
        }
    }

    #[test]
    fn antichain_examples() {
        let tp = ToricPoset::new(&c4_omega_prime()).unwrap();
        let g = tp.graph().clone();
        assert!(tp.is_geometric_toric_antichain(set(&g, &["1", "3"])));
        let t = ToricPoset::new(&c4_omega()).unwrap();
        assert!(!t.is_geometric_toric_antichain(g.vertices()));
        assert!(t.is_geometric_toric_antichain(set(&g, &["2"])));
    }

    fn k3_omega3() -> Orientation {
        orient(Graph::complete(3), &[("3", "2"), ("3", "1"), ("1", "2")])
    }

    #[test]
    fn closed_partitions_and_closure() {
        let t = ToricPoset::new(&k3_omega3()).unwrap();
        let g = t.graph().clone();
        let pi = SetPartition::parse(&g, "1|2,3").unwrap();
        assert!(t.is_closed_toric_partition(&pi));
        assert!(!quotient(&k3_omega3(), &pi).is_acyclic());
        assert_eq!(t.toric_closure(&pi).unwrap(), pi);
        assert_eq!(closure_partition(&k3_omega3(), &pi), SetPartition::indiscrete(3));
        assert!(t.is_closed_toric_partition(&SetPartition::discrete(3)));
        assert!(t.is_closed_toric_partition(&SetPartition::indiscrete(3)));

        let d = orient(
            Graph::new(["1", "2", "3", "4"], [("1", "2"), ("1", "3"), ("2", "4"), ("3", "4")]).unwrap(),
            &[("1", "2"), ("1", "3"), ("2", "4"), ("3", "4")],
        );
        let td = ToricPoset::new(&d).unwrap();
        let pi = SetPartition::parse(td.graph(), "1,2,4|3").unwrap();
        let cl = td.toric_closure(&pi).unwrap();
        assert!(cl.leq(&closure_partition(&d, &pi)));
        assert!(pi.leq(&cl));
    }

    #[test]
    fn closure_ambiguous_on_four_cycle() {
        let t = ToricPoset::new(&c4_omega()).unwrap();
        let pi = SetPartition::parse(t.graph(), "1,3|2|4").unwrap();
        assert!(!t.is_closed_toric_partition(&pi));
        assert!(matches!(t.toric_closure(&pi), Err(Error::AmbiguousClosure(..))));
    }

    #[test]
    fn extensions_examples() {
        let t = ToricPoset::new(&c4_omega()).unwrap();
        let g = t.graph().clone();
        assert_eq!(t.total_toric_extensions().unwrap(), vec![word(&g, &["1", "2", "3", "4"])]);
        let tp = ToricPoset::new(&c4_omega_prime()).unwrap();
        let mut expected: Vec<CyclicWord> = [["1", "3", "2", "4"], ["1", "3", "4", "2"], ["1", "2", "4", "3"], ["1", "4", "2", "3"]]
            .iter()
            .map(|w| word(&g, w))
            .collect();
        expected.sort();
        assert_eq!(tp.total_toric_extensions().unwrap(), expected);

        let k3 = Arc::new(Graph::complete(3));
        let words: BTreeSet<CyclicWord> = all_flip_classes(&k3)
            .unwrap()
            .into_iter()
            .flat_map(|c| ToricPoset::from_class(Arc::new(c)).total_toric_extensions().unwrap())
            .collect();
        assert_eq!(words.len(), 2);
    }

    #[test]
    fn face_partitions_need_one_member() {
        let t = ToricPoset::new(&k3_omega3()).unwrap();
        let faces = t.closed_toric_face_partitions(9).unwrap();
        for pi in &faces {
            assert!(t.is_closed_toric_partition(pi));
        }
        assert!(faces.contains(&SetPartition::discrete(3)));
        assert!(faces.contains(&SetPartition::indiscrete(3)));
    }

    #[test]
    fn caches_agree_with_fresh() {
        let t = ToricPoset::new(&c4_omega_prime()).unwrap();
        let a = (t.toric_hasse().unwrap(), t.total_toric_extensions().unwrap());
        let b = (t.toric_hasse().unwrap(), t.total_toric_extensions().unwrap());
        assert_eq!(a, b);
        let fresh = t.clone();
        assert_eq!(a.0, fresh.toric_hasse().unwrap());
    }
}
