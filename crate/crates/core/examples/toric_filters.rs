//! Toric filters of C4 [omega]: graded, but not a lattice. Then a six-vertex
//! class whose filters are not graded by cardinality.
use std::sync::Arc;

use toric_posets::filters::{format_family, toric_filters, toric_filters_by_extensions};
use toric_posets::graph::{Graph, Orientation};
use toric_posets::ToricPoset;

fn main() -> toric_posets::Result<()> {
    let o = Orientation::from_labels(Arc::new(Graph::cycle(4)), &[("1", "2"), ("2", "3"), ("3", "4"), ("1", "4")], &[])?;
    let t = ToricPoset::new(&o)?;
    let g = t.graph().clone();
    let j = toric_filters(&t)?;
    let names: Vec<String> = format_family(&g, j.elements())
        .into_iter()
        .map(|s| if s.is_empty() { "∅".into() } else { s })
        .collect();
    println!("{} toric filters: {}", j.len(), names.join(" "));
    println!("graded: {}, lattice: {}", j.is_graded(), j.is_lattice());
    println!("segments of total toric extensions agree: {}", j == toric_filters_by_extensions(&t)?);
    if let Some(f) = j.lattice_failures().first() {
        println!(
            "{:?} of {} and {} is not unique: {}",
            f.op,
            g.format_set(f.a),
            g.format_set(f.b),
            format_family(&g, &f.bounds).join(", ")
        );
    }

    let edges = [("1", "2"), ("1", "3"), ("1", "4"), ("1", "5"), ("1", "6"), ("2", "4"), ("2", "5"), ("3", "4"), ("3", "6"), ("4", "5"), ("5", "6")];
    let g6 = Arc::new(Graph::new(["1", "2", "3", "4", "5", "6"], edges)?);
    let arcs = [("1", "2"), ("1", "3"), ("1", "4"), ("1", "5"), ("1", "6"), ("2", "4"), ("2", "5"), ("3", "4"), ("3", "6"), ("4", "5"), ("6", "5")];
    let t6 = ToricPoset::new(&Orientation::from_labels(g6.clone(), &arcs, &[])?)?;
    let j6 = toric_filters(&t6)?;
    println!("\nsix-vertex class: {} members, {} toric filters, graded: {}", t6.members().len(), j6.len(), j6.is_graded());
    for (a, b) in j6.rank_gaps() {
        println!("  cover {} < {} skips a rank", g6.format_set(a), g6.format_set(b));
    }
    Ok(())
}
