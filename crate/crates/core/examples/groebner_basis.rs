//! Reduced Groebner bases, membership and normal forms.

use cmreg::{Ideal, MonomialOrder, PolyRing, Rationals};

fn main() -> cmreg::Result<()> {
    let ring = PolyRing::standard(Rationals, 4);
    let cubic = Ideal::parse(&ring, &["X0*X2 - X1^2", "X0*X3 - X1*X2", "X1*X3 - X2^2"])?;

    let gb = cubic.groebner();
    println!(
        "grevlex basis ({} elements, {} pairs):",
        gb.len(),
        gb.stats().pairs_processed
    );
    for g in gb.polys() {
        println!("  {g}");
    }
    assert!(gb.certify());

    let lex = cubic.with_order(MonomialOrder::Lex)?;
    println!("lex basis:");
    for g in lex.groebner().polys() {
        println!("  {g}");
    }

    let f = ring.parse("X0^2*X3 - X1^3")?;
    println!("{f} in ideal: {}", cubic.contains(&f));
    let h = ring.parse("X0*X3^2 + X1^3")?;
    println!("normal form of {h}: {}", gb.normal_form(&h));
    Ok(())
}
