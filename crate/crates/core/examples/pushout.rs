//! Amalgamate a span K <- G -> L of pointed groups: check the kernel
//! condition, build the pushout and verify the square.
//!
//! `cargo run --example pushout`

use amalgam_bases::amalgam::Side;
use amalgam_bases::{
    amalgamability_condition, pushout, verify_square, FinAbGroup, Homomorphism, PointedGroup, Span,
    DEFAULT_BOUND,
};

fn show(span: &Span) -> amalgam_bases::Result<()> {
    println!(
        "span {} <- {} -> {}",
        span.left_target(),
        span.source(),
        span.right_target()
    );
    let cond = amalgamability_condition(span, DEFAULT_BOUND)?;
    let r = pushout(span, DEFAULT_BOUND)?;
    println!("  condition holds: {}", cond.holds());
    println!("  D = {}, d = {}", r.amalgam, r.d);
    match r.pointed() {
        Some(d) => println!(
            "  amalgam {d}; square verified: {}",
            verify_square(span, &r)
        ),
        None => {
            let w = r.witness.as_ref().expect("blocked spans carry a witness");
            let (killer, other) = match w.kernel {
                Side::Left => ("left", "right"),
                Side::Right => ("right", "left"),
            };
            println!(
                "  blocked: {} lies in the {killer} kernel and hits the {other} point",
                w.element
            );
        }
    }
    Ok(())
}

fn main() -> amalgam_bases::Result<()> {
    // Z/2 -> Z/4 (1 -> 2) and Z/2 -> Z/2 (identity): amalgamable into Z/4
    let z2 = FinAbGroup::cyclic(2)?;
    let z4 = FinAbGroup::cyclic(4)?;
    let src = PointedGroup::new(z2.clone(), z2.element(&[1])?)?;
    let f = Homomorphism::new(z2.clone(), z4.clone(), vec![z4.element(&[2])?])?;
    let h = Homomorphism::identity(&z2);
    show(&Span::from_legs(src, f, h)?)?;

    // the two coordinate projections of (Z/2 x Z/2, (1,1)): blocked
    let v = FinAbGroup::new(vec![2, 2])?;
    let src = PointedGroup::new(v.clone(), v.element(&[1, 1])?)?;
    let p1 = Homomorphism::new(v.clone(), z2.clone(), vec![z2.element(&[1])?, z2.zero()])?;
    let p2 = Homomorphism::new(v.clone(), z2.clone(), vec![z2.zero(), z2.element(&[1])?])?;
    show(&Span::from_legs(src, p1, p2)?)?;

    // reductions of (Z/6, 1) mod 2 and mod 3: 4 is killed on the left but
    // reaches the right point, so no amalgam exists
    let z6 = FinAbGroup::cyclic(6)?;
    let z3 = FinAbGroup::cyclic(3)?;
    let src = PointedGroup::new(z6.clone(), z6.element(&[1])?)?;
    let r2 = Homomorphism::new(z6.clone(), z2.clone(), vec![z2.element(&[1])?])?;
    let r3 = Homomorphism::new(z6.clone(), z3.clone(), vec![z3.element(&[1])?])?;
    show(&Span::from_legs(src, r2, r3)?)?;
    Ok(())
}
