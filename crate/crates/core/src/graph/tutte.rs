//! `T_G(1,0)` by deletion–contraction.
//!
//! At `y = 0` a loop kills the term and a parallel edge contributes nothing
//! beyond its twin (`T(G) = T(G−e) + T(G/e)` with `G/e` carrying a loop), so
//! the recursion can stay on simple graphs. At `x = 1` bridges are free.

use std::collections::{BTreeSet, HashMap};

use super::Graph;

type Key = Vec<(u8, u8)>;

/// Evaluates the Tutte polynomial of `g` at `(1, 0)`.
pub fn tutte_10(g: &Graph) -> u64 {
    let edges: BTreeSet<(u8, u8)> = g.edges().iter().map(|&(u, v)| (u as u8, v as u8)).collect();
    let mut memo = HashMap::new();
    eval(normalize(&edges), &mut memo)
}

/// Drops isolated vertices and renumbers the rest by first appearance.
fn normalize(edges: &BTreeSet<(u8, u8)>) -> Key {
    let mut map: HashMap<u8, u8> = HashMap::new();
    let mut next = 0u8;
    let mut id = |v: u8| {
        *map.entry(v).or_insert_with(|| {
            next += 1;
            next - 1
        })
    };
    let mut out: Vec<(u8, u8)> = edges
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (id(u), id(v));
            (a.min(b), a.max(b))
        })
        .collect();
    out.sort_unstable();
    out
}

fn eval(key: Key, memo: &mut HashMap<Key, u64>) -> u64 {
    if key.is_empty() {
        return 1;
    }
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let (u, v) = key[key.len() - 1];
    let rest: BTreeSet<(u8, u8)> = key[..key.len() - 1].iter().copied().collect();
    // G/e: merge v into u; a parallel pair collapses, a loop cannot arise
    // from a simple graph.
    let contracted: BTreeSet<(u8, u8)> = rest
        .iter()
        .map(|&(a, b)| {
            let a = if a == v { u } else { a };
            let b = if b == v { u } else { b };
            (a.min(b), a.max(b))
        })
        .collect();
    let value = if is_bridge(&rest, u, v) {
        eval(normalize(&contracted), memo)
    } else {
        eval(normalize(&rest), memo) + eval(normalize(&contracted), memo)
    };
    memo.insert(key, value);
    value
}

/// Whether `u` and `v` are disconnected in `edges` (so `{u,v}` is a bridge).
fn is_bridge(edges: &BTreeSet<(u8, u8)>, u: u8, v: u8) -> bool {
    let mut seen = vec![u];
    let mut stack = vec![u];
    while let Some(x) = stack.pop() {
        for &(a, b) in edges {
            let y = if a == x {
                b
            } else if b == x {
                a
            } else {
                continue;
            };
            if y == v {
                return false;
            }
            if !seen.contains(&y) {
                seen.push(y);
                stack.push(y);
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forests_are_one() {
        assert_eq!(tutte_10(&Graph::path(6)), 1);
        assert_eq!(tutte_10(&Graph::edgeless(4)), 1);
        let star = Graph::new(["1", "2", "3", "4"], [("1", "2"), ("1", "3"), ("1", "4")]).unwrap();
        assert_eq!(tutte_10(&star), 1);
    }

    #[test]
    fn small_values() {
        // T_{C_n}(x,y) = x^{n-1} + ... + x + y, so T(1,0) = n - 1.
        assert_eq!(tutte_10(&Graph::complete(3)), 2);
        assert_eq!(tutte_10(&Graph::cycle(4)), 3);
        assert_eq!(tutte_10(&Graph::cycle(5)), 4);
        // T_{K_n}(1,0) = (n-1)!
        assert_eq!(tutte_10(&Graph::complete(4)), 6);
        assert_eq!(tutte_10(&Graph::complete(5)), 24);
    }

    #[test]
    fn multiplicative_over_components() {
        let g = Graph::new(
            ["1", "2", "3", "4", "5", "6"],
            [("1", "2"), ("2", "3"), ("1", "3"), ("4", "5"), ("5", "6"), ("4", "6")],
        )
        .unwrap();
        assert_eq!(tutte_10(&g), 4);
    }
}
