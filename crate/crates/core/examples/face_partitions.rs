//! Closed face partitions of the diamond poset and the closure cl_P.
use std::sync::Arc;

use toric_posets::graph::{Graph, Orientation, SetPartition};
use toric_posets::poset::{closed_face_partition_lattice, closure_partition, face_partition_status};

fn main() -> toric_posets::Result<()> {
    let g = Arc::new(Graph::new(["1", "2", "3", "4"], [("1", "2"), ("1", "3"), ("2", "4"), ("3", "4")])?);
    let o = Orientation::from_labels(g.clone(), &[("1", "2"), ("1", "3"), ("2", "4"), ("3", "4")], &[])?;
    for pi in closed_face_partition_lattice(&o)? {
        println!("closed face partition {}", pi.format(&g));
    }
    for text in ["1,2,4|3", "1,4|2,3"] {
        let pi = SetPartition::parse(&g, text)?;
        println!("cl({text}) = {}", closure_partition(&o, &pi).format(&g));
    }
    let sigma = SetPartition::parse(&g, "1|2,3|4")?;
    println!("1|2,3|4: {:?}", face_partition_status(&o, &sigma)?);
    Ok(())
}
