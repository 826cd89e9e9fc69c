//! Coxeter elements as words, their orientations of the Coxeter graph, and
//! conjugacy via toric equivalence.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::filters::{toric_filters, FilterPoset};
use crate::flipclass::torically_equivalent;
use crate::graph::{Graph, Orientation};
use crate::toric::ToricPoset;

/// `m(s, t)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Bond {
    Finite(u32),
    Infinite,
}

impl Bond {
    /// Whether the Coxeter graph has an edge here.
    pub fn is_edge(self) -> bool {
        !matches!(self, Bond::Finite(2))
    }
}

impl fmt::Display for Bond {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bond::Finite(m) => write!(f, "{m}"),
            Bond::Infinite => write!(f, "inf"),
        }
    }
}

/// Generators plus bond labels; unlisted pairs commute (`m = 2`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterSystem {
    graph: Arc<Graph>,
    bonds: BTreeMap<(usize, usize), Bond>,
}

impl CoxeterSystem {
    pub fn new<S: AsRef<str>>(generators: &[S], bonds: &[(S, S, Bond)]) -> Result<CoxeterSystem> {
        let bare = Graph::new(generators.iter().map(|s| s.as_ref().to_string()), Vec::<(&str, &str)>::new())?;
        let mut map = BTreeMap::new();
        for (a, b, m) in bonds {
            let (u, v) = (bare.index_of(a.as_ref())?, bare.index_of(b.as_ref())?);
            if u == v {
                return Err(Error::InvalidInput(format!("bond from `{}` to itself", a.as_ref())));
            }
            if let Bond::Finite(k) = m {
                if *k < 2 {
                    return Err(Error::InvalidInput(format!("bond label {k} is below 2")));
                }
            }
            if map.insert((u.min(v), u.max(v)), *m).is_some_and(|old| old != *m) {
                return Err(Error::InvalidInput(format!(
                    "conflicting bonds for `{}`, `{}`",
                    a.as_ref(),
                    b.as_ref()
                )));
            }
        }
        let edges = map.iter().filter(|(_, m)| m.is_edge()).map(|(&e, _)| e);
        let graph = Arc::new(bare.with_edges(edges));
        Ok(CoxeterSystem { graph, bonds: map })
    }

    /// `Ã_{n−1}`: generators `s1..sn` on an `n`-cycle, all bonds 3.
    pub fn affine_a(n: usize) -> CoxeterSystem {
        let gens: Vec<String> = (1..=n).map(|i| format!("s{i}")).collect();
        let bonds: Vec<(String, String, Bond)> = (0..n)
            .map(|i| (gens[i].clone(), gens[(i + 1) % n].clone(), Bond::Finite(3)))
            .collect();
        Self::new(&gens, &bonds).expect("well-formed cycle system")
    }

    /// `A_n`: generators `s1..sn` on a path.
    pub fn type_a(n: usize) -> CoxeterSystem {
        let gens: Vec<String> = (1..=n).map(|i| format!("s{i}")).collect();
        let bonds: Vec<(String, String, Bond)> = (1..n)
            .map(|i| (gens[i - 1].clone(), gens[i].clone(), Bond::Finite(3)))
            .collect();
        Self::new(&gens, &bonds).expect("well-formed path system")
    }

    /// The Coxeter graph `Γ`.
    pub fn graph(&self) -> &Arc<Graph> {
        &self.graph
    }

    pub fn generators(&self) -> &[String] {
        self.graph.labels()
    }

    pub fn bond(&self, s: usize, t: usize) -> Bond {
        self.bonds.get(&(s.min(t), s.max(t))).copied().unwrap_or(Bond::Finite(2))
    }

    /// Explicitly listed bonds.
    pub fn bonds(&self) -> impl Iterator<Item = (usize, usize, Bond)> + '_ {
        self.bonds.iter().map(|(&(u, v), &m)| (u, v, m))
    }

    pub fn commute(&self, s: usize, t: usize) -> bool {
        !self.bond(s, t).is_edge()
    }

    /// Parses `s1,s3,s2,s4`.
    /// Generators separated by commas or whitespace.
    pub fn parse_word(&self, text: &str) -> Result<CoxeterElementWord> {
        let labels: Vec<&str> = text.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()).collect();
        let idx = labels.iter().map(|l| self.graph.index_of(l)).collect::<Result<Vec<_>>>()?;
        CoxeterElementWord::new(self, idx)
    }

    pub fn format_word(&self, w: &CoxeterElementWord) -> String {
        w.0.iter().map(|&i| self.graph.label(i)).collect::<Vec<_>>().join(",")
    }
}

/// A product of all generators, each exactly once.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoxeterElementWord(Vec<usize>);

impl CoxeterElementWord {
    pub fn new(cs: &CoxeterSystem, word: Vec<usize>) -> Result<CoxeterElementWord> {
        let n = cs.graph.n();
        let mut seen = vec![false; n];
        if word.len() != n {
            return Err(Error::NotAPermutation);
        }
        for &i in &word {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(Error::NotAPermutation);
            }
        }
        Ok(CoxeterElementWord(word))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// `s_{x2} … s_{xn} s_{x1}`: conjugation by the first letter.
    pub fn rotate(&self) -> CoxeterElementWord {
        let mut w = self.0.clone();
        if !w.is_empty() {
            w.rotate_left(1);
        }
        CoxeterElementWord(w)
    }
}

/// `ω(c)`: `s → t` whenever `s` precedes `t` and `m(s, t) ≥ 3`.
pub fn orientation_of(cs: &CoxeterSystem, c: &CoxeterElementWord) -> Orientation {
    let mut pos = vec![0; c.0.len()];
    for (k, &s) in c.0.iter().enumerate() {
        pos[s] = k;
    }
    Orientation::from_key(cs.graph.clone(), |v| pos[v])
}

/// Conjugacy of two Coxeter elements: `ω(c₁) ≡ ω(c₂)`.
pub fn coxeter_conjugate(cs: &CoxeterSystem, c1: &CoxeterElementWord, c2: &CoxeterElementWord) -> bool {
    torically_equivalent(&orientation_of(cs, c1), &orientation_of(cs, c2)).expect("same Coxeter graph")
}

/// One entry per conjugate of `c`: its orientation and all words spelling it.
pub fn conjugacy_class_elements(
    cs: &CoxeterSystem,
    c: &CoxeterElementWord,
) -> Result<Vec<(Orientation, Vec<CoxeterElementWord>)>> {
    let t = ToricPoset::new(&orientation_of(cs, c))?;
    t.members()
        .iter()
        .zip(t.member_posets())
        .map(|(m, p)| {
            let words = p
                .linear_extensions(t.cap())?
                .into_iter()
                .map(CoxeterElementWord)
                .collect();
            Ok((m.clone(), words))
        })
        .collect()
}

/// Toric filters of `P(Γ, [ω(c)])`: the generator sets that can start a
/// reduced word of some conjugate of `c`.
pub fn initial_segments(cs: &CoxeterSystem, c: &CoxeterElementWord) -> Result<FilterPoset> {
    toric_filters(&ToricPoset::new(&orientation_of(cs, c))?)
}
