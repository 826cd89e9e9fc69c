//! Toric quotients, extensions, inclusions and isomorphisms.
use std::sync::Arc;

use toric_posets::graph::{Graph, Orientation, SetPartition};
use toric_posets::morph::{include, is_toric_extension, quotient_classes, toric_isomorphic, toric_quotient};
use toric_posets::ToricPoset;

fn main() -> toric_posets::Result<()> {
    let k3 = Orientation::from_labels(Arc::new(Graph::complete(3)), &[("1", "2"), ("2", "3"), ("1", "3")], &[])?;
    let t = ToricPoset::new(&k3)?;
    let q = toric_quotient(&t, &SetPartition::parse(t.graph(), "1|2,3")?)?;
    println!("K3 / 1|2,3 -> {} on {:?}", q.class().canonical().describe(), q.graph().labels());

    let c4 = Arc::new(Graph::cycle(4));
    let w = Orientation::from_labels(c4.clone(), &[("1", "2"), ("2", "3"), ("3", "4"), ("1", "4")], &[])?;
    let wp = Orientation::from_labels(c4, &[("1", "2"), ("2", "3"), ("4", "3"), ("1", "4")], &[])?;
    let (a, b) = (ToricPoset::new(&w)?, ToricPoset::new(&wp)?);
    println!("[omega] extends [omega']: {}", is_toric_extension(&b, &a)?);
    println!("[omega'] extends [omega]: {}", is_toric_extension(&a, &b)?);
    let pi = SetPartition::parse(b.graph(), "1,2|3|4")?;
    println!("contracting edge 12 of [omega'] gives {} classes", quotient_classes(&b, &pi)?.len());
    println!("isomorphic: {:?}", toric_isomorphic(&a, &b)?);
    println!("with an isolated vertex: {:?}", include(&a, &["5"])?.graph().labels());
    Ok(())
}
