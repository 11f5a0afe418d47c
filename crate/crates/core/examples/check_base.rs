//! Decide whether a pointed group is an h-amalgamation base, both by
//! brute force over subgroup pairs and by the prime-power criterion.
//!
//! `cargo run --example check_base`

use amalgam_bases::decide::{is_base, Detail};
use amalgam_bases::{
    is_base_bruteforce, is_base_structural, parse_element, parse_group, Method, PointedGroup,
    DEFAULT_BOUND,
};

fn main() -> amalgam_bases::Result<()> {
    let cases = [
        ("Z/8", "1"),
        ("Z/8", "4"),
        ("Z/2 x Z/2", "(1,1)"),
        ("Z/6", "1"),
        ("Z/4 x Z/9", "(0,3)"),
        ("Z/2 x Z/4", "(0,2)"),
        ("Z/2 x Z/4", "(1,1)"),
    ];
    for (group, point) in cases {
        let g = parse_group(group)?;
        let pg = PointedGroup::new(g.clone(), parse_element(point, &g)?)?;
        let brute = is_base_bruteforce(&pg, DEFAULT_BOUND)?;
        let structural = is_base_structural(&pg);
        assert_eq!(brute.is_base, structural.is_base);
        println!("{pg}: base = {}", brute.is_base);
        println!("    bruteforce: {}", brute.detail);
        println!("    structural: {}", structural.detail);
        if let Detail::Violation { h, k } = &brute.detail {
            println!("    witness H = {h}, K = {k}");
        }
    }

    // the combined method cross-checks and reports as JSON
    let pg = PointedGroup::new(
        parse_group("Z/27")?,
        parse_group("Z/27").and_then(|g| g.element(&[9]))?,
    )?;
    println!("{}", is_base(&pg, Method::Both, DEFAULT_BOUND)?.to_json());
    Ok(())
}
