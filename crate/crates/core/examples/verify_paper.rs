//! Runs the bundled worked examples and prints one line per fixture.
use toric_posets::fixtures::{fixtures, run_fixtures};

fn main() {
    let filter = std::env::args().nth(1);
    for o in run_fixtures(&fixtures(), filter.as_deref()) {
        let status = if o.passed { "ok" } else { "MISMATCH" };
        println!("{status:8} {:10} {:28} {}", o.group, o.name, o.anchor);
        if !o.passed {
            println!("         expected: {}\n         actual:   {}", o.expected, o.actual);
        }
    }
}
