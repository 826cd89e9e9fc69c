//! Toric poset morphisms: quotients, inclusions, extensions and isomorphisms.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::{check_cap, Error, Result};
use crate::flipclass::flip_class_with_cap;
use crate::graph::{quotient, Graph, Orientation, SetPartition};
use crate::toric::ToricPoset;

/// Cap for the brute-force isomorphism search.
pub const ISO_MAX_VERTICES: usize = 8;

/// `P/∼_π` over the contracted graph, whose vertices are `B1..Br` in block order.
///
/// Fails with [`Error::IllDefinedQuotient`] when members with acyclic
/// quotients disagree on the resulting class; [`quotient_classes`] lists them.
pub fn toric_quotient(t: &ToricPoset, pi: &SetPartition) -> Result<ToricPoset> {
    let classes = quotient_classes(t, pi)?;
    if let [a, b, ..] = classes.as_slice() {
        return Err(Error::IllDefinedQuotient(format!(
            "{}: {} vs {}",
            pi.format(t.graph()),
            a.class().canonical().describe(),
            b.class().canonical().describe()
        )));
    }
    Ok(classes.into_iter().next().expect("at least one class"))
}

/// Every distinct class `[ω′/∼_π]` over members `ω′` with acyclic quotient,
/// in member order of first appearance.
pub fn quotient_classes(t: &ToricPoset, pi: &SetPartition) -> Result<Vec<ToricPoset>> {
    let mut out: Vec<ToricPoset> = Vec::new();
    for m in t.members() {
        let q = quotient(m, pi);
        if !q.is_acyclic() {
            continue;
        }
        let q = q.into_orientation();
        if out.iter().all(|c| !c.class().contains(&q)) {
            out.push(ToricPoset::from_class_with_cap(Arc::new(flip_class_with_cap(&q, t.cap())?), t.cap()));
        }
    }
    if out.is_empty() {
        return Err(Error::NotAQuotientPartition(pi.format(t.graph())));
    }
    Ok(out)
}

fn same_vertices(a: &Graph, b: &Graph) -> Result<()> {
    if a.labels() == b.labels() {
        Ok(())
    } else {
        Err(Error::VertexSetMismatch)
    }
}

/// `P′` is a toric extension of `P`: `c(P′) ⊆ c(P)`. The chamber of `P′`
/// must miss every hyperplane of `P` (each edge of `P` lies in the toric
/// closure of `P′`), and then inclusion is `L_tor(P′) ⊆ L_tor(P)`.
pub fn is_toric_extension(p: &ToricPoset, p_ext: &ToricPoset) -> Result<bool> {
    same_vertices(p.graph(), p_ext.graph())?;
    let closure = p_ext.toric_transitive_closure();
    if !p.graph().edges().iter().all(|&(u, v)| closure.has_edge(u, v)) {
        return Ok(false);
    }
    let base: BTreeSet<_> = p.total_toric_extensions()?.into_iter().collect();
    Ok(p_ext.total_toric_extensions()?.iter().all(|w| base.contains(w)))
}

/// Adds isolated vertices.
pub fn include<S: AsRef<str>>(t: &ToricPoset, extra: &[S]) -> Result<ToricPoset> {
    let (g, map) = t.graph().with_vertices(extra)?;
    let arcs: Vec<(usize, usize)> = t.class().canonical().arcs().into_iter().map(|(a, b)| (map[a], map[b])).collect();
    let o = Orientation::from_indices(Arc::new(g), &arcs, &[])?;
    ToricPoset::with_cap(&o, t.cap())
}

/// A vertex bijection `φ` (as `φ[i]`) carrying the toric transitive closure
/// and its orientation class of `p` onto those of `q`. The lexicographically
/// least such bijection is returned.
pub fn toric_isomorphic(p: &ToricPoset, q: &ToricPoset) -> Result<Option<Vec<usize>>> {
    let n = p.n();
    check_cap("isomorphism search", n.max(q.n()), ISO_MAX_VERTICES)?;
    if n != q.n() || p.class().len() != q.class().len() {
        return Ok(None);
    }
    let (gp, gq) = (p.toric_transitive_closure(), q.toric_transitive_closure());
    if gp.m() != gq.m() || degrees(&gp) != degrees(&gq) || chain_profile(p)? != chain_profile(q)? {
        return Ok(None);
    }
    let target = q.closure_class()?;
    let source = p.closure_class()?.canonical().arcs();
    let mut phi = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let found = search(0, &gp, &gq, &mut phi, &mut used, &mut |phi| {
        let arcs: Vec<(usize, usize)> = source.iter().map(|&(a, b)| (phi[a], phi[b])).collect();
        Orientation::from_indices(gq.clone(), &arcs, &[]).is_ok_and(|o| target.contains(&o))
    });
    Ok(found.then_some(phi))
}

fn degrees(g: &Graph) -> Vec<usize> {
    let mut d: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    d.sort_unstable();
    d
}

fn chain_profile(t: &ToricPoset) -> Result<Vec<usize>> {
    let mut counts = vec![0; t.n() + 1];
    for (s, _) in t.toric_chains()? {
        counts[s.len()] += 1;
    }
    Ok(counts)
}

fn search(
    i: usize,
    gp: &Graph,
    gq: &Graph,
    phi: &mut Vec<usize>,
    used: &mut Vec<bool>,
    accept: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    if i == phi.len() {
        return accept(phi);
    }
    for c in 0..phi.len() {
        if used[c] || gp.degree(i) != gq.degree(c) {
            continue;
        }
        if (0..i).any(|a| gp.has_edge(a, i) != gq.has_edge(phi[a], c)) {
            continue;
        }
        phi[i] = c;
        used[c] = true;
        if search(i + 1, gp, gq, phi, used, accept) {
            return true;
        }
        used[c] = false;
    }
    phi[i] = usize::MAX;
    false
}
