//! The almost complete intersections built from a monomial curve.
//!
//! `cargo run --example family -- 2 3` for the unprimed `(2, 3)` instance,
//! add `primed` for the other family.

use cmreg::families::FamilyInstance;
use cmreg::hilbert::dim_deg;
use cmreg::resolution::{a0, a1_via_sequence, minimal_resolution};
use cmreg::PrimeField;

fn main() -> cmreg::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let m = args.first().and_then(|s| s.parse().ok()).unwrap_or(2);
    let n = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(2);
    let primed = args.iter().any(|a| a == "primed");

    let inst = FamilyInstance::build(PrimeField::default(), m, n, primed)?;
    println!("{}: exponents {:?}", inst.label(), inst.exponents());
    println!(
        "curve: {} generators, (dim, deg) = {:?}",
        inst.curve().gens().len(),
        dim_deg(inst.curve())
    );
    for g in inst.ci().gens() {
        println!("  ci  {g}");
    }
    println!("  F   {}  (degree {})", inst.extra(), inst.d());

    let res = minimal_resolution(inst.almost_ci())?;
    print!("{}", res.betti());
    println!("reg = {}", res.betti().regularity().unwrap() + 1);
    println!(
        "a0(A/I) = {:?}, a1(A/b) = {:?}",
        a0(inst.almost_ci())?,
        a1_via_sequence(&inst)?
    );
    Ok(())
}
