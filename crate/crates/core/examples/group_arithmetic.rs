//! Elements, orders, canonical forms and primary parts.
//!
//! `cargo run --example group_arithmetic`

use amalgam_bases::group::{abelian_groups_of_order, factorize};
use amalgam_bases::{parse_element, parse_group, PointedGroup};

fn main() -> amalgam_bases::Result<()> {
    let g = parse_group("Z/4 x Z/6")?;
    let x = parse_element("(1, 5)", &g)?;
    let y = g.element(&[3, -2])?;
    println!(
        "in {g}: {x} + {y} = {}, 5·{x} = {}",
        g.add(&x, &y)?,
        g.scalar_mul(5, &x)?
    );
    println!("order of {x} is {}", g.element_order(&x)?);
    println!(
        "{g} ≅ {} (invariant factors {:?})",
        g.canonical(),
        g.canonical_invariant_factors()
    );

    for (p, _) in factorize(g.order()) {
        println!("  {p}-primary part: {}", g.primary_part(p)?);
    }

    let pg = PointedGroup::new(g.clone(), x)?;
    println!(
        "pointed group {pg} with point of order {}",
        pg.point_order()
    );
    if let Err(e) = PointedGroup::new(g.clone(), g.zero()) {
        println!("zero point rejected: {e}");
    }

    println!("abelian groups of order 72:");
    for h in abelian_groups_of_order(72) {
        println!(
            "  {h}  (invariant factors {:?})",
            h.canonical_invariant_factors()
        );
    }
    Ok(())
}
