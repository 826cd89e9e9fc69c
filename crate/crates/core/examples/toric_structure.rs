//! Toric Hasse diagram, toric transitive closure, chains and total toric
//! extensions of the two C4 toric posets.
use std::sync::Arc;

use toric_posets::graph::{Graph, Orientation};
use toric_posets::ToricPoset;

fn show(name: &str, arcs: &[(&str, &str)]) -> toric_posets::Result<()> {
    let o = Orientation::from_labels(Arc::new(Graph::cycle(4)), arcs, &[])?;
    let t = ToricPoset::new(&o)?;
    let g = t.graph().clone();
    println!("{name}: class of {} orientations", t.members().len());
    println!("  toric hasse   {:?}", t.toric_hasse()?.edge_labels());
    println!("  toric closure {:?}", t.toric_transitive_closure().edge_labels());
    for (set, word) in t.toric_chains()?.iter().filter(|(s, _)| s.len() > 1) {
        println!("  chain {} ordered {}", g.format_set(*set), word.format(&g));
    }
    let words: Vec<String> = t.total_toric_extensions()?.iter().map(|w| w.format(&g)).collect();
    println!("  total toric extensions {}", words.join(" "));
    Ok(())
}

fn main() -> toric_posets::Result<()> {
    show("omega", &[("1", "2"), ("2", "3"), ("3", "4"), ("1", "4")])?;
    show("omega'", &[("1", "2"), ("2", "3"), ("4", "3"), ("1", "4")])
}
