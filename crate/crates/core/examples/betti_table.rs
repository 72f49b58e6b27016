//! Minimal free resolutions, Betti tables and regularity.

use cmreg::resolution::minimal_resolution;
use cmreg::verify::{read_ideal_file, ParsedIdeal};
use cmreg::{Ideal, PolyRing, PrimeField};

fn main() -> cmreg::Result<()> {
    let path = concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/data/twisted_cubic.txt"
    );
    let ParsedIdeal::Modular(cubic) = read_ideal_file(path)? else {
        unreachable!("the file is over F_32003");
    };
    let res = minimal_resolution(&cubic)?;
    println!("twisted cubic, ranks {:?}", res.ranks());
    print!("{}", res.betti());
    println!("{}", res.betti().to_json());

    // four points of P^2 cut out by two conics
    let ring = PolyRing::standard(PrimeField::default(), 3);
    let pts = Ideal::parse(&ring, &["X0^2 - X1*X2", "X1^2 - X0*X2"])?;
    let res = minimal_resolution(&pts)?;
    println!(
        "Schreyer frame {:?} -> minimal {:?}",
        res.frame_ranks(),
        res.ranks()
    );
    print!("{}", res.betti());
    let cert = res.certify(&pts)?;
    println!(
        "certificate {cert:?}, reg(A/I) = {}",
        res.betti().regularity().unwrap()
    );
    Ok(())
}
