//! Toric order ideals (equivalently filters) and the graded poset `J_tor(P)`.

use std::collections::BTreeSet;

use crate::error::{check_cap, Error, Result};
use crate::graph::{Graph, Orientation};
use crate::toric::ToricPoset;
use crate::vset::VertexSet;

/// Which lattice operation fails for a pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum LatticeOp {
    Meet,
    Join,
}

/// A pair without a least upper (or greatest lower) bound, with the
/// competing minimal upper (maximal lower) bounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeFailure {
    pub op: LatticeOp,
    pub a: VertexSet,
    pub b: VertexSet,
    pub bounds: Vec<VertexSet>,
}

/// A family of vertex sets ordered by inclusion and ranked by size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FilterPoset {
    elements: Vec<VertexSet>,
    covers: Vec<(usize, usize)>,
}

impl FilterPoset {
    pub fn new(elements: impl IntoIterator<Item = VertexSet>) -> FilterPoset {
        let mut elements: Vec<VertexSet> = elements.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        elements.sort_by_key(|s| (s.len(), *s));
        let mut covers = Vec::new();
        for (i, &a) in elements.iter().enumerate() {
            for (j, &b) in elements.iter().enumerate() {
                if a != b
                    && a.is_subset(b)
                    && !elements.iter().any(|&c| c != a && c != b && a.is_subset(c) && c.is_subset(b))
                {
                    covers.push((i, j));
                }
            }
        }
        FilterPoset { elements, covers }
    }

    /// Sorted by size, then mask.
    pub fn elements(&self) -> &[VertexSet] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, s: VertexSet) -> bool {
        self.elements.contains(&s)
    }

    /// Cover pairs `(i, j)` meaning `elements[i] ⋖ elements[j]`.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn rank(&self, s: VertexSet) -> usize {
        s.len()
    }

    /// Every cover raises the size by exactly one, and every nonempty element
    /// covers something.
    /// Covers `I ⋖ J` with `|J| > |I| + 1`, which break cardinality grading.
    pub fn rank_gaps(&self) -> Vec<(VertexSet, VertexSet)> {
        self.covers
            .iter()
            .filter(|&&(i, j)| self.elements[j].len() != self.elements[i].len() + 1)
            .map(|&(i, j)| (self.elements[i], self.elements[j]))
            .collect()
    }

    pub fn is_graded(&self) -> bool {
        self.rank_gaps().is_empty()
            && self
                .elements
                .iter()
                .enumerate()
                .all(|(j, s)| s.is_empty() || self.covers.iter().any(|&(_, k)| k == j))
    }

    fn extremal_bounds(&self, a: VertexSet, b: VertexSet, op: LatticeOp) -> Vec<VertexSet> {
        let bounds: Vec<VertexSet> = self
            .elements
            .iter()
            .copied()
            .filter(|&c| match op {
                LatticeOp::Join => a.is_subset(c) && b.is_subset(c),
                LatticeOp::Meet => c.is_subset(a) && c.is_subset(b),
            })
            .collect();
        bounds
            .iter()
            .copied()
            .filter(|&c| {
                !bounds.iter().any(|&d| {
                    d != c
                        && match op {
                            LatticeOp::Join => d.is_subset(c),
                            LatticeOp::Meet => c.is_subset(d),
                        }
                })
            })
            .collect()
    }

    /// Least upper bound, if one exists.
    pub fn join(&self, a: VertexSet, b: VertexSet) -> Option<VertexSet> {
        match self.extremal_bounds(a, b, LatticeOp::Join).as_slice() {
            [c] => Some(*c),
            _ => None,
        }
    }

    /// Greatest lower bound, if one exists.
    pub fn meet(&self, a: VertexSet, b: VertexSet) -> Option<VertexSet> {
        match self.extremal_bounds(a, b, LatticeOp::Meet).as_slice() {
            [c] => Some(*c),
            _ => None,
        }
    }

    /// All pairs lacking a meet or a join.
    pub fn lattice_failures(&self) -> Vec<LatticeFailure> {
        let mut out = Vec::new();
        for (i, &a) in self.elements.iter().enumerate() {
            for &b in &self.elements[i + 1..] {
                for op in [LatticeOp::Meet, LatticeOp::Join] {
                    let bounds = self.extremal_bounds(a, b, op);
                    if bounds.len() != 1 {
                        out.push(LatticeFailure { op, a, b, bounds });
                    }
                }
            }
        }
        out
    }

    pub fn is_lattice(&self) -> bool {
        self.lattice_failures().is_empty()
    }
}

/// `I` is an order ideal of some member.
pub fn is_toric_filter(t: &ToricPoset, i: VertexSet) -> bool {
    t.member_posets().iter().any(|p| p.is_ideal(i))
}

/// `I` occupies a cyclically consecutive block of some total toric extension.
pub fn is_toric_filter_by_extensions(t: &ToricPoset, i: VertexSet) -> Result<bool> {
    Ok(t.total_toric_extensions()?
        .iter()
        .any(|w| is_cyclic_segment(w.as_slice(), i)))
}

fn is_cyclic_segment(w: &[usize], s: VertexSet) -> bool {
    let n = w.len();
    if s.is_empty() || s.len() == n {
        return true;
    }
    // exactly one position where membership switches from outside to inside
    (0..n)
        .filter(|&k| !s.contains(w[k]) && s.contains(w[(k + 1) % n]))
        .count()
        == 1
}

/// `J_tor(P)`, built from the ideals of every member.
pub fn toric_filters(t: &ToricPoset) -> Result<FilterPoset> {
    check_cap("toric filters", t.n(), t.cap())?;
    let mut all = BTreeSet::new();
    for p in t.member_posets() {
        all.extend(p.order_ideals());
    }
    Ok(FilterPoset::new(all))
}

/// `J_tor(P)` from cyclic segments of the total toric extensions.
pub fn toric_filters_by_extensions(t: &ToricPoset) -> Result<FilterPoset> {
    let words = t.total_toric_extensions()?;
    let mut all = BTreeSet::from([VertexSet::EMPTY, t.graph().vertices()]);
    for w in &words {
        let w = w.as_slice();
        let n = w.len();
        for start in 0..n {
            let mut s = VertexSet::EMPTY;
            for k in 0..n {
                s = s.with(w[(start + k) % n]);
                all.insert(s);
            }
        }
    }
    Ok(FilterPoset::new(all))
}

/// `χ_I` in vertex index order.
pub fn characteristic_vector(i: VertexSet, n: usize) -> Vec<u8> {
    (0..n).map(|v| u8::from(i.contains(v))).collect()
}

/// A vertex `v ∈ J` and a member `ω″` in which `J − {v}` is an ideal.
pub fn filter_cover_witness(t: &ToricPoset, j: VertexSet) -> Result<(usize, Orientation)> {
    let not_a_filter = || Error::NotAFilter(t.graph().format_set(j));
    if j.is_empty() {
        return Err(not_a_filter());
    }
    let (member, poset) = t
        .members()
        .iter()
        .zip(t.member_posets())
        .find(|(_, p)| p.is_ideal(j))
        .ok_or_else(not_a_filter)?;
    let v = poset.minimal().intersection(j).first().expect("nonempty ideal has a minimal element");
    let flipped = member.reverse_boundary(VertexSet::singleton(v));
    debug_assert!(t.class().contains(&flipped));
    Ok((v, flipped))
}

/// Labels of a family of sets, for display.
pub fn format_family(g: &Graph, sets: &[VertexSet]) -> Vec<String> {
    sets.iter().map(|&s| g.set_labels(s).concat()).collect()
}
