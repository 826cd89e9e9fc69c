//! Flip classes of C4 and the Tutte count T(1,0).
use std::sync::Arc;

use toric_posets::flipclass::{acyclic_orientations, all_flip_classes};
use toric_posets::graph::{tutte_10, Graph};

fn main() -> toric_posets::Result<()> {
    let g = Arc::new(Graph::cycle(4));
    let classes = all_flip_classes(&g)?;
    println!("{} acyclic orientations of C4", acyclic_orientations(&g).len());
    for c in &classes {
        println!("class of size {}: canonical {}", c.len(), c.canonical().describe());
    }
    println!("classes = {}, T(1,0) = {}", classes.len(), tutte_10(&g));
    Ok(())
}
