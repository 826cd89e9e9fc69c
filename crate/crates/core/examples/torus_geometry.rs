//! Torus points, their orientations, and the chamber/flip-class bijection.
use std::sync::Arc;

use num_rational::Rational64;
use toric_posets::geom::{alpha, point_of_extension, reconcile_chamber_bijection, TorusPoint, GEOM_MAX_VERTICES};
use toric_posets::graph::Graph;

fn main() -> toric_posets::Result<()> {
    let k3 = Arc::new(Graph::complete(3));
    let x = TorusPoint::new([Rational64::new(0, 1), Rational64::new(1, 3), Rational64::new(1, 3)]);
    println!("alpha{:?} = {}", x, alpha(&k3, &x)?.describe());
    let p = point_of_extension(&[2, 0, 1], 3)?;
    println!("alpha{:?} = {}", p, alpha(&k3, &p)?.describe());
    for g in [Graph::complete(3), Graph::cycle(4), Graph::path(4)] {
        let r = reconcile_chamber_bijection(&Arc::new(g), GEOM_MAX_VERTICES)?;
        println!("{} cells, {} classes, orientations per cell {:?}", r.cells, r.classes, r.cell_orientations);
    }
    Ok(())
}
