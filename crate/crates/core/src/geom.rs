//! Exact-rational geometry: points of the torus `R^V/Z^V`, the map `ᾱ_G` to
//! preposets, order polytopes, and a point-sampling reconciliation of
//! chambers with flip classes.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_rational::Rational64;

use crate::error::{check_cap, Error, Result};
use crate::flipclass::{count_flip_classes, FlipCache};
use crate::graph::{Graph, Orientation};
use crate::poset::Poset;
use crate::toric::{CyclicWord, ToricPoset};
use crate::vset::VertexSet;

/// Cap for anything that walks all `n!` vertex orders.
pub const GEOM_MAX_VERTICES: usize = 8;

/// A point of `R^V/Z^V`, each coordinate reduced into `[0, 1)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TorusPoint(Vec<Rational64>);

impl TorusPoint {
    pub fn new(coords: impl IntoIterator<Item = Rational64>) -> TorusPoint {
        TorusPoint(coords.into_iter().map(|x| x - x.floor()).collect())
    }

    /// Coordinates keyed by label; every vertex must be present.
    pub fn from_labels(g: &Graph, coords: &BTreeMap<String, Rational64>) -> Result<TorusPoint> {
        for k in coords.keys() {
            g.index_of(k)?;
        }
        let v = g
            .labels()
            .iter()
            .map(|l| coords.get(l).copied().ok_or_else(|| Error::MissingCoordinate(l.clone())))
            .collect::<Result<Vec<_>>>()?;
        Ok(TorusPoint::new(v))
    }

    pub fn coords(&self) -> &[Rational64] {
        &self.0
    }

    pub fn to_labels(&self, g: &Graph) -> BTreeMap<String, Rational64> {
        g.labels().iter().cloned().zip(self.0.iter().copied()).collect()
    }
}

impl fmt::Debug for TorusPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// A point of the unit cube `[0, 1]^V` (not reduced).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubePoint(Vec<Rational64>);

impl CubePoint {
    pub fn new(coords: Vec<Rational64>) -> Result<CubePoint> {
        if coords.iter().any(|x| *x < Rational64::from_integer(0) || *x > Rational64::from_integer(1)) {
            return Err(Error::InvalidInput("cube coordinate outside [0, 1]".into()));
        }
        Ok(CubePoint(coords))
    }

    /// `χ_I`.
    pub fn indicator(set: VertexSet, n: usize) -> CubePoint {
        CubePoint((0..n).map(|v| Rational64::from_integer(i64::from(set.contains(v)))).collect())
    }

    pub fn coords(&self) -> &[Rational64] {
        &self.0
    }
}

/// `ᾱ_G(x)`: `i → j` when `x_i < x_j`, a tie when equal.
pub fn alpha(g: &std::sync::Arc<Graph>, p: &TorusPoint) -> Result<Orientation> {
    if p.0.len() != g.n() {
        let missing = g.labels().get(p.0.len()).cloned().unwrap_or_default();
        return Err(Error::MissingCoordinate(missing));
    }
    Ok(Orientation::from_key(g.clone(), |v| p.0[v]))
}

/// The point whose `k`-th entry along `word` is `k/(n+1)`.
pub fn point_of_extension(word: &[usize], n: usize) -> Result<TorusPoint> {
    let set: VertexSet = word.iter().copied().collect();
    if word.len() != n || set != VertexSet::full(n) {
        return Err(Error::NotAPermutation);
    }
    let denom = n as i64 + 1;
    let mut coords = vec![Rational64::from_integer(0); n];
    for (k, &v) in word.iter().enumerate() {
        coords[v] = Rational64::new(k as i64 + 1, denom);
    }
    Ok(TorusPoint::new(coords))
}

/// `x ∈ O(P(G, ω))`: `x_i ≤ x_j` whenever `i ≤ j`.
pub fn in_order_polytope(o: &Orientation, p: &CubePoint) -> Result<bool> {
    let poset = Poset::from_orientation(o)?;
    if p.0.len() != o.n() {
        return Err(Error::MissingCoordinate(o.graph().labels().get(p.0.len()).cloned().unwrap_or_default()));
    }
    Ok(poset.cover_relations().iter().all(|&(i, j)| p.0[i] <= p.0[j]))
}

/// Outcome of [`reconcile_chamber_bijection`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReconcileReport {
    /// Number of sample points (`n!`).
    pub points: usize,
    /// Connected regions of sample points.
    pub cells: usize,
    /// Flip classes, counted by search.
    pub classes: usize,
    /// Distinct `ᾱ_G` images per cell, cells ordered by their least vertex order.
    pub cell_orientations: Vec<usize>,
    /// Sample points per cell, same order.
    pub cell_points: Vec<usize>,
}

/// Classifies one sample point per vertex order. Points are joined when a
/// path between them avoids every hyperplane of `G`: rotating the order, or
/// swapping two neighbours of the order that are not adjacent in `G`. The
/// resulting cells must be exactly the flip classes of the `ᾱ_G` images.
pub fn reconcile_chamber_bijection(g: &std::sync::Arc<Graph>, cap: usize) -> Result<ReconcileReport> {
    let n = g.n();
    check_cap("chamber reconciliation", n, cap)?;
    let perms = permutations(n);
    let index: HashMap<&[usize], usize> = perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    let mut uf = UnionFind::new(perms.len());
    for (i, p) in perms.iter().enumerate() {
        if n == 0 {
            break;
        }
        let mut r = p.clone();
        r.rotate_left(1);
        uf.union(i, index[r.as_slice()]);
        for k in 0..n.saturating_sub(1) {
            if !g.has_edge(p[k], p[k + 1]) {
                let mut s = p.clone();
                s.swap(k, k + 1);
                uf.union(i, index[s.as_slice()]);
            }
        }
    }

    let cache = FlipCache::new();
    let points: Vec<TorusPoint> = perms.iter().map(|p| point_of_extension(p, n)).collect::<Result<_>>()?;
    let images: Vec<Orientation> = points.iter().map(|x| alpha(g, x)).collect::<Result<_>>()?;
    let class_ids: Vec<u128> = images
        .iter()
        .map(|o| Ok(cache.get_or_compute(o)?.canonical().code()))
        .collect::<Result<_>>()?;

    // cell root -> (first point, class id); class id -> root
    let mut cell_of_class: HashMap<u128, usize> = HashMap::new();
    let mut class_of_cell: HashMap<usize, (usize, u128)> = HashMap::new();
    let mut order: Vec<usize> = Vec::new();
    let fmt = |i: usize| format!("{:?}", points[i]);
    for (i, &cid) in class_ids.iter().enumerate() {
        let root = uf.find(i);
        match class_of_cell.get(&root) {
            None => {
                if let Some(&other) = cell_of_class.get(&cid) {
                    // same class, different cell
                    return Err(Error::ReconciliationFailure(fmt(class_of_cell[&other].0), fmt(i)));
                }
                class_of_cell.insert(root, (i, cid));
                cell_of_class.insert(cid, root);
                order.push(root);
            }
            Some(&(first, c)) if c != cid => return Err(Error::ReconciliationFailure(fmt(first), fmt(i))),
            Some(_) => {}
        }
    }
    let classes = count_flip_classes(g)?;
    if order.len() != classes {
        return Err(Error::ReconciliationFailure(
            format!("{} cells", order.len()),
            format!("{classes} flip classes"),
        ));
    }
    let mut cell_orientations = Vec::new();
    let mut cell_points = Vec::new();
    for &root in &order {
        let members: Vec<usize> = (0..perms.len()).filter(|&i| uf.find(i) == root).collect();
        let mut codes: Vec<u128> = members.iter().map(|&i| images[i].code()).collect();
        codes.sort_unstable();
        codes.dedup();
        cell_orientations.push(codes.len());
        cell_points.push(members.len());
    }
    Ok(ReconcileReport {
        points: perms.len(),
        cells: order.len(),
        classes,
        cell_orientations,
        cell_points,
    })
}

/// Sample points of `P` are the points of orders whose `ᾱ` image is a member.
/// `C` is a toric chain with order `w` iff every sample point induces `w` on
/// `C` and no hyperplane `x_a = x_b` with `a, b ∈ C` cuts the chamber; the
/// latter happens exactly when a non-edge pair sits cyclically adjacent in
/// some sample point.
pub fn chain_order_by_points(t: &ToricPoset, set: VertexSet) -> Result<Option<CyclicWord>> {
    let n = t.n();
    check_cap("point sampling", n, GEOM_MAX_VERTICES)?;
    let g = t.graph();
    let mut found: Option<CyclicWord> = None;
    for p in permutations(n) {
        let x = point_of_extension(&p, n)?;
        if !t.class().contains(&alpha(g, &x)?) {
            continue;
        }
        let cuts = (0..n).any(|k| {
            let (a, b) = (p[k], p[(k + 1) % n]);
            a != b && set.contains(a) && set.contains(b) && !g.has_edge(a, b)
        });
        if cuts {
            return Ok(None);
        }
        let induced = CyclicWord::canonical(p.iter().copied().filter(|&v| set.contains(v)).collect());
        match &found {
            None => found = Some(induced),
            Some(w) if *w != induced => return Ok(None),
            Some(_) => {}
        }
    }
    Ok(found)
}

/// `c(P′) ⊆ c(P)` tested on sample points: every point classified into `P′`
/// is classified into `P`, and no hyperplane of `P` cuts `c(P′)` (a pair
/// adjacent in `P` but not in `P′` sitting cyclically next to each other).
pub fn is_extension_by_points(p: &ToricPoset, p_ext: &ToricPoset) -> Result<bool> {
    if p.graph().labels() != p_ext.graph().labels() {
        return Err(Error::VertexSetMismatch);
    }
    let n = p.n();
    check_cap("point sampling", n, GEOM_MAX_VERTICES)?;
    for w in permutations(n) {
        let x = point_of_extension(&w, n)?;
        if !p_ext.class().contains(&alpha(p_ext.graph(), &x)?) {
            continue;
        }
        let cuts = (0..n).any(|k| {
            let (a, b) = (w[k], w[(k + 1) % n]);
            a != b && p.graph().has_edge(a, b) && !p_ext.graph().has_edge(a, b)
        });
        if cuts || !p.class().contains(&alpha(p.graph(), &x)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All orders of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn rec(n: usize, used: VertexSet, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if !used.contains(v) {
                cur.push(v);
                rec(n, used.with(v), cur, out);
                cur.pop();
            }
        }
    }
    rec(n, VertexSet::EMPTY, &mut cur, &mut out);
    out
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}
