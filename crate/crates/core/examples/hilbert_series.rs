//! Hilbert series, dimension, degree and Hilbert function values.

use cmreg::hilbert::{finite_length, HilbertData};
use cmreg::idealops::saturation;
use cmreg::verify::{read_ideal_file, ParsedIdeal};

fn main() -> cmreg::Result<()> {
    let path = concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/data/embedded_point.txt"
    );
    let ParsedIdeal::Rational(i) = read_ideal_file(path)? else {
        unreachable!("the file is over Q");
    };
    let h = HilbertData::of(&i);
    println!("numerator   {}", h.numerator());
    println!("h-vector    {}", h.h_polynomial());
    println!("dim {:?}, degree {}", h.dimension(), h.degree());
    let values: Vec<i128> = (0..8).map(|mu| h.value(mu)).collect();
    println!("HF(0..8) = {values:?}");

    let sat = saturation(&i)?;
    let fl = finite_length(&i, &sat)?;
    println!(
        "I^sat / I: length {}, top degree {:?}",
        fl.length, fl.top_degree
    );
    Ok(())
}
