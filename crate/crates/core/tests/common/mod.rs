//! Graph corpora and invariant checks shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use proptest::prelude::Rng;
use proptest::test_runner::{RngAlgorithm, TestRng};
use toric_posets::filters::{filter_cover_witness, toric_filters, toric_filters_by_extensions};
use toric_posets::flipclass::{all_flip_classes, count_flip_classes};
use toric_posets::geom::{reconcile_chamber_bijection, GEOM_MAX_VERTICES};
use toric_posets::graph::{quotient, tutte_10, Graph, SetPartition};
use toric_posets::poset::closure_partition;
use toric_posets::toric::CyclicWord;
use toric_posets::{Error, Poset, ToricPoset, VertexSet};

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let edges: Vec<(String, String)> = pairs(n)
        .into_iter()
        .enumerate()
        .filter(|(k, _)| mask >> k & 1 == 1)
        .map(|(_, (u, v))| (labels[u].clone(), labels[v].clone()))
        .collect();
    Graph::new(labels.clone(), edges).expect("valid graph")
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// One connected graph per isomorphism class, `1 ≤ n ≤ max_n`.
pub fn connected_graphs(max_n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let ps = pairs(n);
        let index: BTreeMap<(usize, usize), usize> = ps.iter().enumerate().map(|(k, &e)| (e, k)).collect();
        let perms = permutations(n);
        let mut seen = BTreeSet::new();
        for mask in 0..(1u64 << ps.len()) {
            let canon = perms
                .iter()
                .map(|p| {
                    ps.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).fold(0u64, |acc, (_, &(u, v))| {
                        let (a, b) = (p[u].min(p[v]), p[u].max(p[v]));
                        acc | 1 << index[&(a, b)]
                    })
                })
                .min()
                .expect("at least one permutation");
            if seen.insert(canon) {
                let g = graph_from_mask(n, canon);
                if g.is_connected() {
                    out.push(g);
                }
            }
        }
    }
    out
}

/// Connected random graphs on `n` vertices, edge probability 1/2, fixed seed.
pub fn random_connected_graphs(n: usize, count: usize, seed: u8) -> Vec<Graph> {
    let mut rng = TestRng::from_seed(RngAlgorithm::ChaCha, &[seed; 32]);
    let m = pairs(n).len();
    let mut out = Vec::new();
    while out.len() < count {
        let g = graph_from_mask(n, rng.next_u64() & ((1 << m) - 1));
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

/// Each class of each graph, as toric posets.
pub fn toric_posets_of(g: &Graph) -> Vec<ToricPoset> {
    let g = Arc::new(g.clone());
    all_flip_classes(&g)
        .expect("within cap")
        .into_iter()
        .map(|c| ToricPoset::from_class(Arc::new(c)))
        .collect()
}

fn label(g: &Graph) -> String {
    format!("{:?}", g.edge_labels())
}

/// Everything a toric poset computes, for comparing representatives.
fn fingerprint(t: &ToricPoset) -> String {
    let n = t.n();
    let intervals: Vec<VertexSet> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| t.toric_interval(i, j)).collect();
    let antichains: Vec<bool> = t.graph().vertices().subsets().map(|a| t.is_geometric_toric_antichain(a)).collect();
    let closures: Vec<String> = SetPartition::all(n)
        .iter()
        .map(|pi| match t.toric_closure(pi) {
            Ok(c) => format!("{c:?}"),
            Err(e) => e.kind().to_string(),
        })
        .collect();
    format!(
        "{:?}|{:?}|{:?}|{:?}|{:?}|{:?}|{:?}|{:?}",
        t.toric_chains().unwrap(),
        t.toric_transitive_closure().edge_set(),
        t.toric_hasse().unwrap().edge_set(),
        t.total_toric_extensions().unwrap(),
        toric_filters(t).unwrap().elements(),
        intervals,
        antichains,
        closures
    )
}

pub fn check_representative_invariance(g: &Graph, v: &mut Vec<String>) {
    for t in toric_posets_of(g) {
        let base = fingerprint(&t);
        for m in t.members() {
            if fingerprint(&ToricPoset::new(m).unwrap()) != base {
                v.push(format!("{}: representative {} changes results", label(g), m.describe()));
            }
        }
    }
}

pub fn check_chain_subsets(g: &Graph, v: &mut Vec<String>) {
    for t in toric_posets_of(g) {
        let chains: BTreeMap<VertexSet, CyclicWord> = t.toric_chains().unwrap().into_iter().collect();
        for (set, word) in &chains {
            for sub in set.subsets() {
                let restricted: Vec<usize> = word.as_slice().iter().copied().filter(|&x| sub.contains(x)).collect();
                let expect = CyclicWord::new(restricted).unwrap();
                if chains.get(&sub) != Some(&expect) {
                    v.push(format!("{}: subset {:?} of chain {:?} lost", label(g), sub, set));
                }
            }
            if !t.is_toric_chain(word) {
                v.push(format!("{}: listed chain {:?} fails the chain test", label(g), word));
            }
        }
    }
}

pub fn check_sandwich(g: &Graph, v: &mut Vec<String>) {
    for t in toric_posets_of(g) {
        let hasse = t.toric_hasse().unwrap().edge_set();
        let closure = t.toric_transitive_closure().edge_set();
        let edges = t.graph().edge_set();
        let mut meet: Option<BTreeSet<(usize, usize)>> = None;
        for p in t.member_posets() {
            if !p.hasse_graph().edge_set().is_subset(&hasse) {
                v.push(format!("{}: ordinary Hasse not inside toric Hasse", label(g)));
            }
            let c = p.transitive_closure_graph().edge_set();
            meet = Some(match meet {
                None => c,
                Some(m) => m.intersection(&c).copied().collect(),
            });
        }
        if !(hasse.is_subset(&edges) && edges.is_subset(&closure)) {
            v.push(format!("{}: toric Hasse ⊆ G ⊆ toric closure fails", label(g)));
        }
        if meet.as_ref() != Some(&closure) {
            v.push(format!("{}: toric closure is not the intersection of closures", label(g)));
        }
    }
}

/// Closure axioms for `cl_P` and `cl^tor`. Returns the number of partitions
/// where `cl^tor` is ambiguous (and so skipped).
pub fn check_closure_axioms(g: &Graph, v: &mut Vec<String>) -> usize {
    let parts = SetPartition::all(g.n());
    let mut ambiguous = 0;
    for t in toric_posets_of(g) {
        let name = || format!("{} class of {}", label(g), t.class().canonical().describe());
        let cl: Vec<Option<SetPartition>> = parts
            .iter()
            .map(|pi| match t.toric_closure(pi) {
                Ok(c) => Some(c),
                Err(Error::AmbiguousClosure(..)) => None,
                Err(e) => panic!("unexpected {e}"),
            })
            .collect();
        ambiguous += cl.iter().filter(|c| c.is_none()).count();
        for (i, pi) in parts.iter().enumerate() {
            let Some(c) = &cl[i] else { continue };
            if !pi.leq(c) {
                v.push(format!("{}: cl_tor not extensive at {pi:?}", name()));
            }
            if t.toric_closure(c).ok().as_ref() != Some(c) {
                v.push(format!("{}: cl_tor not idempotent at {pi:?}", name()));
            }
            if !t.is_closed_toric_partition(c) {
                v.push(format!("{}: cl_tor({pi:?}) not closed", name()));
            }
            for m in t.members() {
                if !c.leq(&closure_partition(m, pi)) {
                    v.push(format!("{}: clause (d) fails at {pi:?}", name()));
                }
                if quotient(m, pi).is_acyclic() && !t.is_closed_toric_partition(pi) {
                    v.push(format!("{}: clause (a) fails at {pi:?}", name()));
                }
            }
            for (j, pj) in parts.iter().enumerate() {
                if !pi.leq(pj) {
                    continue;
                }
                if let Some(cj) = &cl[j] {
                    if !c.leq(cj) {
                        v.push(format!("{}: cl_tor not monotone at {pi:?} ≤ {pj:?}", name()));
                    }
                    if pj.leq(c) && cj != c {
                        v.push(format!("{}: clause (c) fails at {pi:?} ≤ {pj:?}", name()));
                    }
                }
            }
        }
        for m in t.members() {
            let clp: Vec<SetPartition> = parts.iter().map(|pi| closure_partition(m, pi)).collect();
            for (i, pi) in parts.iter().enumerate() {
                if !pi.leq(&clp[i]) || closure_partition(m, &clp[i]) != clp[i] {
                    v.push(format!("{}: cl_P not extensive/idempotent at {pi:?}", name()));
                }
                for (j, pj) in parts.iter().enumerate() {
                    if pi.leq(pj) && !clp[i].leq(&clp[j]) {
                        v.push(format!("{}: cl_P not monotone at {pi:?} ≤ {pj:?}", name()));
                    }
                }
            }
        }
    }
    ambiguous
}

pub fn check_filter_equivalence(g: &Graph, v: &mut Vec<String>) {
    for t in toric_posets_of(g) {
        if toric_filters(&t).unwrap() != toric_filters_by_extensions(&t).unwrap() {
            v.push(format!("{}: member ideals and cyclic segments disagree", label(g)));
        }
    }
}

pub fn check_filter_duality(g: &Graph, v: &mut Vec<String>) {
    for t in toric_posets_of(g) {
        let j = toric_filters(&t).unwrap();
        let all = t.graph().vertices();
        for &s in j.elements() {
            if !j.contains(all.difference(s)) {
                v.push(format!("{}: complement of {s:?} missing", label(g)));
            }
            // an ideal of one member is a filter of that member, and vice versa
            let as_filter = t.member_posets().iter().any(|p: &Poset| p.is_filter(s));
            if !as_filter {
                v.push(format!("{}: {s:?} is an ideal of some member but a filter of none", label(g)));
            }
        }
    }
}

/// Cardinality is a rank function: every cover adds exactly one vertex.
pub fn check_strict_gradedness(g: &Graph, v: &mut Vec<String>) {
    for t in toric_posets_of(g) {
        let j = toric_filters(&t).unwrap();
        for (a, b) in j.rank_gaps() {
            let names = toric_posets::filters::format_family(t.graph(), &[a, b]);
            v.push(format!("{}: cover {} ⋖ {} skips a rank", label(g), names[0], names[1]));
        }
    }
}

/// Every nonempty filter contains a filter with one vertex fewer.
pub fn check_down_steps(g: &Graph, v: &mut Vec<String>) {
    for t in toric_posets_of(g) {
        let j = toric_filters(&t).unwrap();
        for &s in j.elements().iter().filter(|s| !s.is_empty()) {
            match filter_cover_witness(&t, s) {
                Ok((x, w)) if s.contains(x) && t.class().contains(&w) && j.contains(s.without(x)) => {}
                _ => v.push(format!("{}: no cover witness for {s:?}", label(g))),
            }
        }
    }
}

pub fn check_reconciliation(g: &Graph, v: &mut Vec<String>) {
    match reconcile_chamber_bijection(&Arc::new(g.clone()), GEOM_MAX_VERTICES) {
        Ok(r) if r.cells == r.classes => {}
        Ok(r) => v.push(format!("{}: {} cells but {} classes", label(g), r.cells, r.classes)),
        Err(e) => v.push(format!("{}: {e}", label(g))),
    }
}

pub fn check_tutte(g: &Graph, v: &mut Vec<String>) {
    let count = count_flip_classes(&Arc::new(g.clone())).unwrap();
    if count as u64 != tutte_10(g) {
        v.push(format!("{}: {count} classes, T(1,0) = {}", label(g), tutte_10(g)));
    }
}

/// `cl^tor` against the definition: the minimal coarsenings of `π` closed
/// for the class. Ambiguity must coincide with several minima. Returns the
/// number of partitions checked.
pub fn check_closure_oracle(g: &Graph, v: &mut Vec<String>) -> usize {
    let parts = SetPartition::all(g.n());
    let mut checked = 0;
    for t in toric_posets_of(g) {
        let closed: Vec<&SetPartition> = parts.iter().filter(|s| t.is_closed_toric_partition(s)).collect();
        for pi in &parts {
            checked += 1;
            let above: Vec<&SetPartition> = closed.iter().copied().filter(|s| pi.leq(s)).collect();
            let minima: Vec<&SetPartition> =
                above.iter().copied().filter(|s| !above.iter().any(|d| d != s && d.leq(s))).collect();
            match (t.toric_closure(pi), minima.as_slice()) {
                (Ok(c), [m]) if &c == *m => {}
                (Err(Error::AmbiguousClosure(..)), [_, _, ..]) => {}
                (got, _) => v.push(format!("{}: cl_tor({pi:?}) = {got:?}, minimal closed coarsenings {minima:?}", label(g))),
            }
        }
    }
    checked
}
