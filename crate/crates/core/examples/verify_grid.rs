//! Every claim on the default grid, printed as text; pass `json` or `csv`
//! for the other formats.

use cmreg::verify::{verify_all, DEFAULT_SEED};
use cmreg::PrimeField;

fn main() -> cmreg::Result<()> {
    let set = verify_all(PrimeField::default(), DEFAULT_SEED);
    match std::env::args().nth(1).as_deref() {
        Some("json") => print!("{}", set.to_json()?),
        Some("csv") => print!("{}", set.to_csv()?),
        _ => print!("{}", set.to_text()),
    }
    for r in &set.reports {
        eprintln!(
            "{:>9} {:<14} {} ms",
            r.claim.id(),
            r.params.instance,
            r.elapsed_ms
        );
    }
    std::process::exit(if set.passed() { 0 } else { 1 });
}
