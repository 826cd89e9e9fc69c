use std::fmt;

use super::Graph;
use crate::error::{Error, Result};
use crate::vset::VertexSet;

/// A set partition of the vertex indices `0..n`.
///
/// Canonical form: blocks sorted by their minimal element. Equality and
/// hashing are therefore structural.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<VertexSet>,
}

impl SetPartition {
    pub fn new(n: usize, blocks: Vec<VertexSet>) -> Result<Self> {
        let mut seen = VertexSet::EMPTY;
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::InvalidInput("empty block".into()));
            }
            if !b.is_disjoint(seen) {
                return Err(Error::InvalidInput("blocks overlap".into()));
            }
            seen = seen.union(*b);
        }
        if seen != VertexSet::full(n) {
            return Err(Error::InvalidInput("blocks do not cover the vertex set".into()));
        }
        Ok(Self::from_blocks_unchecked(n, blocks))
    }

    pub(crate) fn from_blocks_unchecked(n: usize, mut blocks: Vec<VertexSet>) -> Self {
        blocks.sort_by_key(|b| b.first());
        SetPartition { n, blocks }
    }

    /// Partition from a block assignment `v ↦ block id` (ids arbitrary).
    pub fn from_assignment(assign: &[usize]) -> Self {
        let mut blocks: Vec<(usize, VertexSet)> = Vec::new();
        for (v, &b) in assign.iter().enumerate() {
            match blocks.iter_mut().find(|(id, _)| *id == b) {
                Some((_, s)) => *s = s.with(v),
                None => blocks.push((b, VertexSet::singleton(v))),
            }
        }
        Self::from_blocks_unchecked(assign.len(), blocks.into_iter().map(|(_, s)| s).collect())
    }

    /// All singletons.
    pub fn discrete(n: usize) -> Self {
        Self::from_blocks_unchecked(n, (0..n).map(VertexSet::singleton).collect())
    }

    /// One block (empty partition when `n == 0`).
    pub fn indiscrete(n: usize) -> Self {
        let blocks = if n == 0 { vec![] } else { vec![VertexSet::full(n)] };
        Self::from_blocks_unchecked(n, blocks)
    }

    /// `π_S`: `S` as one block, every other vertex a singleton.
    pub fn collapsing(n: usize, s: VertexSet) -> Self {
        let mut blocks: Vec<VertexSet> = VertexSet::full(n).difference(s).iter().map(VertexSet::singleton).collect();
        if !s.is_empty() {
            blocks.push(s);
        }
        Self::from_blocks_unchecked(n, blocks)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_discrete(&self) -> bool {
        self.blocks.len() == self.n
    }

    /// Index of the block containing `v`.
    pub fn block_of(&self, v: usize) -> usize {
        self.blocks
            .iter()
            .position(|b| b.contains(v))
            .expect("vertex outside partition ground set")
    }

    pub fn assignment(&self) -> Vec<usize> {
        let mut a = vec![0; self.n];
        for (i, b) in self.blocks.iter().enumerate() {
            for v in b.iter() {
                a[v] = i;
            }
        }
        a
    }

    /// Refinement order: every block of `self` lies inside a block of `other`.
    pub fn leq(&self, other: &SetPartition) -> bool {
        assert_eq!(self.n, other.n, "partitions of different ground sets");
        self.blocks
            .iter()
            .all(|b| other.blocks.iter().any(|c| b.is_subset(*c)))
    }

    /// Finest common coarsening.
    pub fn join(&self, other: &SetPartition) -> SetPartition {
        assert_eq!(self.n, other.n, "partitions of different ground sets");
        let mut blocks: Vec<VertexSet> = self.blocks.clone();
        for c in &other.blocks {
            let (touching, rest): (Vec<VertexSet>, Vec<VertexSet>) =
                blocks.into_iter().partition(|b| !b.is_disjoint(*c));
            let merged = touching.into_iter().fold(*c, VertexSet::union);
            blocks = rest;
            blocks.push(merged);
        }
        Self::from_blocks_unchecked(self.n, blocks)
    }

    /// Coarsest common refinement.
    pub fn meet(&self, other: &SetPartition) -> SetPartition {
        assert_eq!(self.n, other.n, "partitions of different ground sets");
        let blocks = self
            .blocks
            .iter()
            .flat_map(|b| other.blocks.iter().map(move |c| b.intersection(*c)))
            .filter(|s| !s.is_empty())
            .collect();
        Self::from_blocks_unchecked(self.n, blocks)
    }

    /// Pulls a partition of the blocks of `self` back to the ground set.
    pub fn compose(&self, of_blocks: &SetPartition) -> SetPartition {
        assert_eq!(of_blocks.n, self.num_blocks());
        let blocks = of_blocks
            .blocks
            .iter()
            .map(|bb| bb.iter().fold(VertexSet::EMPTY, |s, i| s.union(self.blocks[i])))
            .collect();
        Self::from_blocks_unchecked(self.n, blocks)
    }

    /// All partitions of `0..n` via restricted growth strings, in RGS order.
    pub fn all(n: usize) -> Vec<SetPartition> {
        let mut out = Vec::new();
        let mut rgs = vec![0usize; n];
        fn rec(i: usize, max: usize, rgs: &mut Vec<usize>, out: &mut Vec<SetPartition>) {
            if i == rgs.len() {
                out.push(SetPartition::from_assignment(rgs));
                return;
            }
            for b in 0..=max + 1 {
                rgs[i] = b;
                rec(i + 1, max.max(b), rgs, out);
            }
        }
        if n == 0 {
            return vec![SetPartition::discrete(0)];
        }
        // the first element always opens block 0
        rgs[0] = 0;
        rec(1, 0, &mut rgs, &mut out);
        out
    }

    /// Every partition `σ` with `self ≤ σ`.
    pub fn coarsenings(&self) -> Vec<SetPartition> {
        SetPartition::all(self.num_blocks())
            .iter()
            .map(|p| self.compose(p))
            .collect()
    }

    /// Parses `1,2|3|4,5` against a graph's labels.
    pub fn parse(g: &Graph, text: &str) -> Result<SetPartition> {
        let blocks = text
            .split('|')
            .map(|b| {
                let labels: Vec<&str> = b.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
                g.set_of(&labels)
            })
            .collect::<Result<Vec<_>>>()?;
        SetPartition::new(g.n(), blocks)
    }

    /// Inverse of [`SetPartition::parse`].
    pub fn format(&self, g: &Graph) -> String {
        self.blocks
            .iter()
            .map(|b| b.iter().map(|v| g.label(v)).collect::<Vec<_>>().join(","))
            .collect::<Vec<_>>()
            .join("|")
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "Partition({})", s.join("|"))
    }
}
