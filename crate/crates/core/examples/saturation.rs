//! Colon ideals, saturation with the stabilisation index, intersection
//! and elimination.

use cmreg::idealops::{colon, eliminate_into, intersect, saturate, saturation};
use cmreg::{Ideal, MonomialOrder, PolyRing, PrimeField};

fn main() -> cmreg::Result<()> {
    let ring = PolyRing::standard(PrimeField::default(), 3);
    // a line with an embedded point of multiplicity two
    let i = Ideal::parse(&ring, &["X0^2", "X0*X1", "X0*X2^2"])?;
    let l = ring.parse("X1 + 5*X2")?;
    println!(
        "I : l = {:?}",
        colon(&i, &l)?
            .gens()
            .iter()
            .map(|g| g.to_string())
            .collect::<Vec<_>>()
    );
    let (sat, q) = saturate(&i, &l)?;
    println!(
        "I : l^inf reached after q = {q} steps: {}",
        sat.groebner().polys()[0]
    );
    println!("I^sat = I : m^inf equal: {}", saturation(&i)?.same_as(&sat));

    let a = Ideal::parse(&ring, &["X0", "X1"])?;
    let b = Ideal::parse(&ring, &["X1", "X2"])?;
    let cap = intersect(&a, &b)?;
    println!(
        "(X0,X1) ∩ (X1,X2) = {:?}",
        cap.gens().iter().map(|g| g.to_string()).collect::<Vec<_>>()
    );

    let st = PolyRing::new(
        PrimeField::default(),
        ["s", "t", "X0", "X1", "X2", "X3"]
            .iter()
            .map(|s| s.to_string())
            .collect(),
        MonomialOrder::Grevlex,
    )?;
    let param = Ideal::parse(&st, &["X0 - s^4", "X1 - s^3*t", "X2 - s*t^3", "X3 - t^4"])?;
    let target = PolyRing::standard(PrimeField::default(), 4);
    let quartic = eliminate_into(&param, &[0, 1], &target)?;
    println!(
        "rational quartic: {} generators of degrees {:?}",
        quartic.gens().len(),
        quartic.generator_degrees()
    );
    Ok(())
}
