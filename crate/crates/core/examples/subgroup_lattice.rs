//! Enumerate every subgroup of a small group; sums and intersections.
//!
//! `cargo run --example subgroup_lattice -- "Z/2 x Z/4"`

use amalgam_bases::subgroups::subgroup_intersection;
use amalgam_bases::{all_subgroups, parse_group, subgroup_sum, DEFAULT_BOUND};

fn main() -> amalgam_bases::Result<()> {
    let literal = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "Z/2 x Z/4".into());
    let g = parse_group(&literal)?;
    let subs = all_subgroups(&g, DEFAULT_BOUND)?;
    println!("{g} has {} subgroups:", subs.len());
    for s in &subs {
        let elems: Vec<String> = s.elements().map(|e| e.to_string()).collect();
        println!("  order {:>2}  {s}  {{{}}}", s.order(), elems.join(", "));
    }

    if subs.len() >= 3 {
        let (a, b) = (&subs[1], &subs[2]);
        println!("{a} + {b} = {}", subgroup_sum(a, b)?);
        println!("{a} ∩ {b} = {}", subgroup_intersection(a, b)?);
    }
    Ok(())
}
