//! Reading the JSON interchange formats and rendering DOT.
use std::sync::Arc;

use toric_posets::io::{filter_poset_dot, flip_graph_dot, hasse_dot, parse_graph, parse_orientation, OrientationJson};
use toric_posets::{filters::toric_filters, Poset, ToricPoset};

fn main() -> toric_posets::Result<()> {
    let g = Arc::new(parse_graph(r#"{"vertices":["1","2","3","4"],"edges":[["1","2"],["2","3"],["3","4"],["1","4"]]}"#)?);
    let o = parse_orientation(r#"{"arcs":[["1","2"],["2","3"],["3","4"],["1","4"]]}"#, Some(g))?;
    println!("{}", serde_json::to_string(&OrientationJson::from_orientation(&o)).expect("serializable"));
    print!("{}", hasse_dot(&Poset::from_orientation(&o)?, "hasse"));
    let t = ToricPoset::new(&o)?;
    print!("{}", flip_graph_dot(t.class(), "flips"));
    print!("{}", filter_poset_dot(t.graph(), &toric_filters(&t)?, "filters"));
    Ok(())
}
