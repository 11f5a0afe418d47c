//! Smith normal form of an integer matrix, and the structure of a quotient
//! group read off from it.
//!
//! `cargo run --example smith_normal_form`

use amalgam_bases::{quotient_invariants, smith_normal_form, IntMatrix};

fn main() -> amalgam_bases::Result<()> {
    let a = IntMatrix::from_rows(&[[2, 4, 4], [-6, 6, 12], [10, -4, -16]]);
    let snf = smith_normal_form(&a)?;
    println!("A = {a:?}");
    println!("diagonal of D = {:?} (rank {})", snf.diagonal(), snf.rank());
    assert_eq!(snf.u.mul(&a)?.mul(&snf.v)?, snf.d);
    println!(
        "U·A·V = D checked; det U = {}, det V = {}",
        snf.u.determinant()?,
        snf.v.determinant()?
    );

    // (Z/4 x Z/6) / <(2,3)>
    let q = quotient_invariants(&[4, 6], &[vec![2, 3]])?;
    println!(
        "Z/4 x Z/6 modulo <(2,3)> has invariant factors {:?}, order {}",
        q.invariant_factors(),
        q.order()
    );
    for x in [[1, 0], [2, 3], [0, 1]] {
        println!("  {x:?} -> {:?}", q.project(&x)?);
    }
    Ok(())
}
