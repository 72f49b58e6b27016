//! A validated general hyperplane section and the bound it feeds.

use cmreg::families::FamilyInstance;
use cmreg::resolution::regularity;
use cmreg::sections::{degree_bounds, general_section, section_bound_rhs};
use cmreg::PrimeField;

fn main() -> cmreg::Result<()> {
    let inst = FamilyInstance::build(PrimeField::default(), 2, 2, false)?;
    let i = inst.almost_ci();
    let sec = general_section(i, 42)?;
    println!("l = {}", sec.form());
    println!("seeds tried {:?}", sec.seeds_tried);
    println!("deg Z = {}, i_Z = {}", sec.degree(), sec.indeg());

    let mut degs = i.generator_degrees();
    degs.sort_unstable_by(|a, b| b.cmp(a));
    let c = i.ring().nvars() - 2;
    let rhs = section_bound_rhs(&degs, c, sec.degree(), sec.indeg() as i128)?;
    println!("reg = {} <= {rhs}", regularity(i)?);
    let d = degs[0];
    println!("{:?}", degree_bounds(c as u32, d));
    Ok(())
}
