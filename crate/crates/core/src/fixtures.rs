//! Worked examples with known answers, run by `verify-paper`.
//!
//! Each fixture renders its computed answer as a string and compares it to
//! the expected string, so a failure reports both sides verbatim.

use std::sync::Arc;

use crate::coxeter::{conjugacy_class_elements, coxeter_conjugate, initial_segments, CoxeterSystem};
use crate::error::Result;
use crate::filters::{format_family, toric_filters, FilterPoset, LatticeOp};
use crate::flipclass::{acyclic_orientations, all_flip_classes, torically_equivalent};
use crate::geom::reconcile_chamber_bijection;
use crate::graph::{quotient, tutte_10, Graph, Orientation, SetPartition};
use crate::poset::{closed_face_partition_lattice, closure_partition, face_partition_status, Poset};
use crate::toric::ToricPoset;
use crate::vset::VertexSet;

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub group: &'static str,
    /// Where the example lives in the source material.
    pub anchor: &'static str,
    pub expected: String,
    pub compute: fn() -> Result<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureOutcome {
    pub name: &'static str,
    pub group: &'static str,
    pub anchor: &'static str,
    pub expected: String,
    pub actual: String,
    pub passed: bool,
}

impl Fixture {
    fn new(name: &'static str, group: &'static str, anchor: &'static str, expected: &str, compute: fn() -> Result<String>) -> Fixture {
        Fixture { name, group, anchor, expected: expected.to_string(), compute }
    }

    pub fn matches(&self, filter: &str) -> bool {
        self.group == filter || self.name.contains(filter)
    }

    pub fn run(&self) -> FixtureOutcome {
        let actual = match (self.compute)() {
            Ok(s) => s,
            Err(e) => format!("error: {e}"),
        };
        FixtureOutcome {
            name: self.name,
            group: self.group,
            anchor: self.anchor,
            passed: actual == self.expected,
            expected: self.expected.clone(),
            actual,
        }
    }
}

/// Runs the fixtures selected by `filter` (group name or name substring).
pub fn run_fixtures(fixtures: &[Fixture], filter: Option<&str>) -> Vec<FixtureOutcome> {
    fixtures
        .iter()
        .filter(|f| filter.is_none_or(|s| f.matches(s)))
        .map(Fixture::run)
        .collect()
}

fn orient(g: Graph, arcs: &[(&str, &str)]) -> Result<Orientation> {
    Orientation::from_labels(Arc::new(g), arcs, &[])
}

fn k3_omega3() -> Result<Orientation> {
    orient(Graph::complete(3), &[("3", "2"), ("3", "1"), ("1", "2")])
}

fn c4_omega() -> Result<Orientation> {
    orient(Graph::cycle(4), &[("1", "2"), ("2", "3"), ("3", "4"), ("1", "4")])
}

/// The member drawn first in the figure; toric answers depend only on its class.
fn c4_omega_prime() -> Result<Orientation> {
    orient(Graph::cycle(4), &[("1", "2"), ("1", "4"), ("2", "3"), ("4", "3")])
}

fn diamond() -> Result<Orientation> {
    let g = Graph::new(["1", "2", "3", "4"], [("1", "2"), ("1", "3"), ("2", "4"), ("3", "4")])?;
    orient(g, &[("1", "2"), ("1", "3"), ("2", "4"), ("3", "4")])
}

fn c5_pair() -> Result<(Orientation, Orientation)> {
    let g = Graph::cycle(5);
    Ok((
        orient(g.clone(), &[("1", "2"), ("2", "3"), ("3", "4"), ("1", "5"), ("5", "4")])?,
        orient(g, &[("1", "2"), ("2", "3"), ("4", "3"), ("5", "4"), ("1", "5")])?,
    ))
}

/// `12 14 23` style edge list.
fn edges(g: &Graph) -> String {
    g.edge_labels().into_iter().map(|(a, b)| a + &b).collect::<Vec<_>>().join(" ")
}

/// `1/23/4` style partition.
fn slash(g: &Graph, pi: &SetPartition) -> String {
    pi.blocks().iter().map(|&b| g.set_labels(b).concat()).collect::<Vec<_>>().join("/")
}

fn sizes(mut v: Vec<usize>) -> String {
    v.sort_unstable();
    format!("{v:?}")
}

fn family(g: &Graph, fp: &FilterPoset) -> String {
    let sets = format_family(g, fp.elements());
    sets.into_iter().map(|s| if s.is_empty() { "∅".into() } else { s }).collect::<Vec<_>>().join(" ")
}

fn k3_classes() -> Result<String> {
    let g = Arc::new(Graph::complete(3));
    let classes = all_flip_classes(&g)?;
    Ok(format!(
        "orientations={} classes={} tutte={}",
        acyclic_orientations(&g).len(),
        sizes(classes.iter().map(|c| c.len()).collect()),
        tutte_10(&g)
    ))
}

fn c4_classes() -> Result<String> {
    let g = Arc::new(Graph::cycle(4));
    let classes = all_flip_classes(&g)?;
    Ok(format!(
        "omega={} omega'={} classes={} tutte={}",
        ToricPoset::new(&c4_omega()?)?.members().len(),
        ToricPoset::new(&c4_omega_prime()?)?.members().len(),
        classes.len(),
        tutte_10(&g)
    ))
}

fn forest_classes() -> Result<String> {
    let g = Arc::new(Graph::new(["1", "2", "3", "4", "5"], [("1", "2"), ("1", "3"), ("3", "4"), ("3", "5")])?);
    Ok(format!("classes={} tutte={}", all_flip_classes(&g)?.len(), tutte_10(&g)))
}

fn c4_omega_graphs() -> Result<String> {
    let t = ToricPoset::new(&c4_omega()?)?;
    let p = Poset::from_orientation(&c4_omega()?)?;
    Ok(format!(
        "toric hasse: {}; toric closure: {}; hasse: {}",
        edges(&t.toric_hasse()?),
        edges(&t.toric_transitive_closure()),
        edges(&p.hasse_graph())
    ))
}

fn c4_omega_prime_graphs() -> Result<String> {
    let t = ToricPoset::new(&c4_omega_prime()?)?;
    let p = Poset::from_orientation(&c4_omega_prime()?)?;
    Ok(format!(
        "toric hasse: {}; toric closure: {}; closure: {}",
        edges(&t.toric_hasse()?),
        edges(&t.toric_transitive_closure()),
        edges(&p.transitive_closure_graph())
    ))
}

fn extensions(o: Orientation) -> Result<String> {
    let t = ToricPoset::new(&o)?;
    let g = t.graph().clone();
    Ok(t.total_toric_extensions()?
        .iter()
        .map(|w| w.format(&g))
        .collect::<Vec<_>>()
        .join(" "))
}

fn c4_chains(o: Orientation) -> Result<String> {
    let t = ToricPoset::new(&o)?;
    let mut by_size = vec![0usize; t.n() + 1];
    for (s, _) in t.toric_chains()? {
        by_size[s.len()] += 1;
    }
    Ok(format!("chains by size {by_size:?}"))
}

fn filters_of(o: Orientation) -> Result<String> {
    let t = ToricPoset::new(&o)?;
    let g = t.graph().clone();
    let j = toric_filters(&t)?;
    let witness = j
        .lattice_failures()
        .into_iter()
        .find(|f| f.op == LatticeOp::Join)
        .map(|f| {
            format!(
                "; join({},{}) has bounds {}",
                g.set_labels(f.a).concat(),
                g.set_labels(f.b).concat(),
                format_family(&g, &f.bounds).join(",")
            )
        })
        .unwrap_or_default();
    Ok(format!(
        "{} elements: {}; graded={} lattice={}{}",
        j.len(),
        family(&g, &j),
        j.is_graded(),
        j.is_lattice(),
        witness
    ))
}

fn diamond_faces() -> Result<String> {
    let o = diamond()?;
    let g = o.graph().clone();
    let mut faces: Vec<String> = closed_face_partition_lattice(&o)?.iter().map(|p| slash(&g, p)).collect();
    faces.sort_by_key(|s| (std::cmp::Reverse(s.matches('/').count()), s.clone()));
    Ok(faces.join(" "))
}

fn diamond_closures() -> Result<String> {
    let o = diamond()?;
    let g = o.graph().clone();
    let mut out = Vec::new();
    for text in ["1,2,4|3", "1,4|2,3"] {
        let pi = SetPartition::parse(&g, text)?;
        out.push(format!("cl({})={}", slash(&g, &pi), slash(&g, &closure_partition(&o, &pi))));
    }
    let sigma = SetPartition::parse(&g, "1|2,3|4")?;
    let st = face_partition_status(&o, &sigma)?;
    out.push(format!("{}: compatible={} connected={}", slash(&g, &sigma), st.compatible, st.connected));
    Ok(out.join("; "))
}

fn k3_toric_closure() -> Result<String> {
    let o = k3_omega3()?;
    let t = ToricPoset::new(&o)?;
    let g = t.graph().clone();
    let pi = SetPartition::parse(&g, "1|2,3")?;
    Ok(format!(
        "cl_tor={} cl={} quotient acyclic={}",
        slash(&g, &t.toric_closure(&pi)?),
        slash(&g, &closure_partition(&o, &pi)),
        quotient(&o, &pi).is_acyclic()
    ))
}

fn path_interval() -> Result<String> {
    let o = orient(Graph::path(3), &[("1", "2"), ("2", "3")])?;
    let p = Poset::from_orientation(&o)?;
    let t = ToricPoset::new(&o)?;
    let g = t.graph().clone();
    Ok(format!(
        "[1,3]={} [1,3]tor={}",
        g.format_set(p.interval(0, 2)),
        g.format_set(t.toric_interval(0, 2))
    ))
}

fn c5_chains() -> Result<String> {
    let (w, wp) = c5_pair()?;
    let a = ToricPoset::new(&w)?.toric_chains()?;
    let b = ToricPoset::new(&wp)?.toric_chains()?;
    let nonempty = a.iter().filter(|(s, _)| !s.is_empty()).count();
    Ok(format!(
        "equivalent={} same chains={} nonempty chains={}",
        torically_equivalent(&w, &wp)?,
        a == b,
        nonempty
    ))
}

fn a3_conjugates() -> Result<String> {
    let cs = CoxeterSystem::affine_a(4);
    let c = cs.parse_word("s1,s2,s3,s4")?;
    let mut words: Vec<String> = conjugacy_class_elements(&cs, &c)?
        .iter()
        .flat_map(|(_, ws)| ws.iter().map(|w| cs.format_word(w)).collect::<Vec<_>>())
        .collect();
    words.sort();
    Ok(words.join(" "))
}

fn a3_c_prime_class() -> Result<String> {
    let cs = CoxeterSystem::affine_a(4);
    let c = cs.parse_word("s1,s3,s2,s4")?;
    let class = conjugacy_class_elements(&cs, &c)?;
    Ok(format!(
        "orientations={} words per orientation={}",
        class.len(),
        sizes(class.iter().map(|(_, ws)| ws.len()).collect())
    ))
}

fn a3_conjugacy() -> Result<String> {
    let cs = CoxeterSystem::affine_a(4);
    let pairs = [
        ("s1,s2,s3,s4", "s2,s3,s4,s1"),
        ("s1,s2,s3,s4", "s3,s4,s1,s2"),
        ("s1,s2,s3,s4", "s1,s3,s2,s4"),
        ("s1,s3,s2,s4", "s2,s4,s1,s3"),
        ("s1,s3,s2,s4", "s3,s2,s4,s1"),
    ];
    let mut out = Vec::new();
    for (a, b) in pairs {
        let ok = coxeter_conjugate(&cs, &cs.parse_word(a)?, &cs.parse_word(b)?);
        out.push(ok.to_string());
    }
    Ok(out.join(" "))
}

fn a3_segments() -> Result<String> {
    let cs = CoxeterSystem::affine_a(4);
    let mut out = Vec::new();
    for (word, o) in [("s1,s2,s3,s4", c4_omega()?), ("s1,s3,s2,s4", c4_omega_prime()?)] {
        let segs = initial_segments(&cs, &cs.parse_word(word)?)?;
        let j = toric_filters(&ToricPoset::new(&o)?)?;
        // generators s_k play the role of vertex k
        let same = segs.elements() == j.elements();
        out.push(format!("{} segments, match filters={}", segs.len(), same));
    }
    Ok(out.join("; "))
}

fn reconcile(g: Graph) -> Result<String> {
    let r = reconcile_chamber_bijection(&Arc::new(g), crate::geom::GEOM_MAX_VERTICES)?;
    Ok(format!(
        "cells={} classes={} orientations per cell={}",
        r.cells,
        r.classes,
        sizes(r.cell_orientations.clone())
    ))
}

fn closed_toric_partition() -> Result<String> {
    let o = k3_omega3()?;
    let t = ToricPoset::new(&o)?;
    let g = t.graph().clone();
    let pi = SetPartition::parse(&g, "1|2,3")?;
    let members: Vec<bool> = t.members().iter().map(|m| quotient(m, &pi).is_acyclic()).collect();
    Ok(format!(
        "closed for class={} acyclic quotients among members={}",
        t.is_closed_toric_partition(&pi),
        members.iter().filter(|&&b| b).count()
    ))
}

fn c4_omega_prime_antichain() -> Result<String> {
    let t = ToricPoset::new(&c4_omega_prime()?)?;
    let g = t.graph().clone();
    let a = g.set_of(&["1", "3"])?;
    let b = g.set_of(&["2", "4"])?;
    Ok(format!(
        "13 antichain={} 24 antichain={} 1234 antichain={}",
        t.is_geometric_toric_antichain(a),
        t.is_geometric_toric_antichain(b),
        t.is_geometric_toric_antichain(VertexSet::full(4))
    ))
}

/// The bundled examples.
pub fn fixtures() -> Vec<Fixture> {
    vec![
        Fixture::new("k3-two-classes", "flipclass", "Example on K3: two toric equivalence classes", "orientations=6 classes=[3, 3] tutte=2", k3_classes),
        Fixture::new("c4-class-sizes", "flipclass", "C4 figures: four and six torically equivalent orientations", "omega=4 omega'=6 classes=3 tutte=3", c4_classes),
        Fixture::new("forest-one-class", "flipclass", "Tutte count: always 1 for a forest", "classes=1 tutte=1", forest_classes),
        Fixture::new("diamond-face-lattice", "poset", "Figure: a poset and its lattice of closed face partitions", "1/2/3/4 1/2/34 1/24/3 12/3/4 13/2/4 1/234 12/34 123/4 13/24 1234", diamond_faces),
        Fixture::new("diamond-closures", "poset", "Diamond: closures of two non-closed partitions", "cl(124/3)=1234; cl(14/23)=1234; 1/23/4: compatible=true connected=false", diamond_closures),
        Fixture::new("k3-toric-closure", "toric", "Example where the toric closure is strictly finer", "cl_tor=1/23 cl=123 quotient acyclic=false", k3_toric_closure),
        Fixture::new("k3-closed-for-class", "toric", "Closed for the class but not for the member", "closed for class=true acyclic quotients among members=2", closed_toric_partition),
        Fixture::new("c4-omega-graphs", "toric", "C4 example: toric Hasse, toric closure, ordinary Hasse", "toric hasse: 12 14 23 34; toric closure: 12 13 14 23 24 34; hasse: 12 23 34", c4_omega_graphs),
        Fixture::new("c4-omega-prime-graphs", "toric", "C4 example: omega' Hasse equals closure, ordinary closure has 13", "toric hasse: 12 14 23 34; toric closure: 12 14 23 34; closure: 12 13 14 23 34", c4_omega_prime_graphs),
        Fixture::new("c4-omega-chains", "toric", "C4 example: the whole vertex set is a toric chain", "chains by size [1, 4, 6, 4, 1]", || c4_chains(c4_omega()?)),
        Fixture::new("c4-omega-prime-chains", "toric", "C4 example: only vertices and edges are toric chains", "chains by size [1, 4, 4, 0, 0]", || c4_chains(c4_omega_prime()?)),
        Fixture::new("c4-omega-extensions", "toric", "C4 figure: one total toric extension", "(1,2,3,4)", || extensions(c4_omega()?)),
        Fixture::new("c4-omega-prime-extensions", "toric", "C4 figure: four total toric extensions", "(1,2,4,3) (1,3,2,4) (1,3,4,2) (1,4,2,3)", || extensions(c4_omega_prime()?)),
        Fixture::new("c4-omega-prime-antichains", "toric", "Geometric toric antichains of the omega' class", "13 antichain=true 24 antichain=true 1234 antichain=false", c4_omega_prime_antichain),
        Fixture::new("path-toric-interval", "toric", "Toric intervals: the converse need not hold", "[1,3]={1,2,3} [1,3]tor={}", path_interval),
        Fixture::new("c5-same-chains", "toric", "Two C5 classes with the same toric chains", "equivalent=false same chains=true nonempty chains=10", c5_chains),
        Fixture::new("c4-omega-filters", "filters", "Figure: toric filters of P(C4,[omega]) are not a lattice", "14 elements: ∅ 1 2 3 4 12 23 14 34 123 124 134 234 1234; graded=true lattice=false; join(1,3) has bounds 123,134", || filters_of(c4_omega()?)),
        Fixture::new("c4-omega-prime-filters", "filters", "Figure: toric filters of P(C4,[omega']) form a Boolean lattice", "16 elements: ∅ 1 2 3 4 12 13 23 14 24 34 123 124 134 234 1234; graded=true lattice=true", || filters_of(c4_omega_prime()?)),
        Fixture::new("a3-conjugates", "coxeter", "Affine A3: the conjugates of s1s2s3s4", "s1,s2,s3,s4 s2,s3,s4,s1 s3,s4,s1,s2 s4,s1,s2,s3", a3_conjugates),
        Fixture::new("a3-c-prime-class", "coxeter", "Affine A3: the six conjugates of s1s3s2s4", "orientations=6 words per orientation=[2, 2, 2, 2, 4, 4]", a3_c_prime_class),
        Fixture::new("a3-conjugacy", "coxeter", "Conjugate if and only if the orientations are torically equivalent", "true true false true true", a3_conjugacy),
        Fixture::new("a3-initial-segments", "coxeter", "Initial segments are the toric filters (replace k with s_k)", "14 segments, match filters=true; 16 segments, match filters=true", a3_segments),
        Fixture::new("k3-chambers", "geom", "Example on K3: two toric chambers", "cells=2 classes=2 orientations per cell=[3, 3]", || reconcile(Graph::complete(3))),
        Fixture::new("c4-chambers", "geom", "C4: three toric chambers", "cells=3 classes=3 orientations per cell=[4, 4, 6]", || reconcile(Graph::cycle(4))),
    ]
}
