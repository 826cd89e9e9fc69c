//! Ordinary versus toric intervals, toric antichains and the toric closure
//! of a partition.
use std::sync::Arc;

use toric_posets::graph::{Graph, Orientation, SetPartition};
use toric_posets::poset::closure_partition;
use toric_posets::{Poset, ToricPoset};

fn main() -> toric_posets::Result<()> {
    let path = Orientation::from_labels(Arc::new(Graph::path(3)), &[("1", "2"), ("2", "3")], &[])?;
    let g = path.graph().clone();
    let p = Poset::from_orientation(&path)?;
    let t = ToricPoset::new(&path)?;
    println!("[1,3] = {}", g.format_set(p.interval(0, 2)));
    println!("[1,3]^tor = {}", g.format_set(t.toric_interval(0, 2)));
    println!("{{1,3}} geometric toric antichain: {}", t.is_geometric_toric_antichain(g.set_of(&["1", "3"])?));

    let k3 = Orientation::from_labels(Arc::new(Graph::complete(3)), &[("3", "2"), ("3", "1"), ("1", "2")], &[])?;
    let t = ToricPoset::new(&k3)?;
    let pi = SetPartition::parse(t.graph(), "1|2,3")?;
    println!("cl_tor(1|2,3) = {}", t.toric_closure(&pi)?.format(t.graph()));
    println!("cl(1|2,3) = {}", closure_partition(&k3, &pi).format(t.graph()));
    Ok(())
}
