use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use cmreg::families::FamilyInstance;
use cmreg::hilbert::HilbertData;
use cmreg::resolution::{minimal_resolution, regularity};
use cmreg::verify::{
    self, format_ideal, read_ideal_file, Claim, GridPoint, ParsedIdeal, ReportSet, DEFAULT_GRID,
};
use cmreg::{Field, Ideal, MonomialOrder, PrimeField, Rationals, Result};

#[derive(Parser)]
#[command(
    name = "cmreg",
    version,
    about = "Regularity of graded ideals and checks on the monomial-curve families"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the generators of a family ideal in ideal-file format.
    Family {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        primed: bool,
        /// Characteristic, 0 for the rationals.
        #[arg(long = "char", default_value_t = 32003)]
        char: u64,
        /// Which ideal to print.
        #[arg(long, value_enum, default_value_t = Part::Ideal)]
        part: Part,
    },
    /// Graded Betti numbers of A/I.
    Betti {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = BettiFormat::Text)]
        format: BettiFormat,
    },
    /// reg(I).
    Reg {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Check one claim, or all of them, and print a report.
    Verify {
        /// A claim id (thm11, lemma12, lemma21, lemma31, prop22, prop32,
        /// remark33, cor13) or `all`.
        claim: String,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        primed: bool,
        #[arg(long, default_value_t = verify::DEFAULT_SEED)]
        seed: u64,
        #[arg(long = "char", default_value_t = 32003)]
        char: u64,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Part {
    /// The almost complete intersection.
    Ideal,
    /// The complete intersection.
    Ci,
    /// The monomial curve.
    Curve,
    /// The residual of the curve in the complete intersection.
    Residual,
}

#[derive(Clone, Copy, ValueEnum)]
enum BettiFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
    Text,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("cmreg: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.cmd {
        Cmd::Family {
            m,
            n,
            primed,
            char,
            part,
        } => {
            match char {
                0 => family(Rationals, m, n, primed, part),
                p => family(PrimeField::new(p)?, m, n, primed, part),
            }?;
            Ok(true)
        }
        Cmd::Betti { input, format } => {
            match read_ideal_file(input)? {
                ParsedIdeal::Modular(i) => betti(&i, format),
                ParsedIdeal::Rational(i) => betti(&i, format),
            }?;
            Ok(true)
        }
        Cmd::Reg { input } => {
            let reg = match read_ideal_file(input)? {
                ParsedIdeal::Modular(i) => regularity(&grevlex(&i)?),
                ParsedIdeal::Rational(i) => regularity(&grevlex(&i)?),
            }?;
            println!("{reg}");
            Ok(true)
        }
        Cmd::Verify {
            claim,
            m,
            n,
            primed,
            seed,
            char,
            format,
        } => {
            let set = match char {
                0 => run_verify(Rationals, &claim, m, n, primed, seed)?,
                p => run_verify(PrimeField::new(p)?, &claim, m, n, primed, seed)?,
            };
            let out = match format {
                ReportFormat::Json => set.to_json()?,
                ReportFormat::Csv => set.to_csv()?,
                ReportFormat::Text => set.to_text(),
            };
            print!("{out}");
            Ok(set.passed())
        }
    }
}

fn family<F: Field>(field: F, m: usize, n: usize, primed: bool, part: Part) -> Result<()> {
    let inst = FamilyInstance::build(field, m, n, primed)?;
    let ideal = match part {
        Part::Ideal => inst.almost_ci(),
        Part::Ci => inst.ci(),
        Part::Curve => inst.curve(),
        Part::Residual => inst.residual(),
    };
    let (dim, deg) = cmreg::hilbert::dim_deg(ideal);
    println!(
        "# {} degrees {:?} dim {:?} deg {deg}",
        inst.label(),
        ideal.generator_degrees(),
        dim
    );
    print!("{}", format_ideal(ideal));
    Ok(())
}

fn grevlex<F: Field>(i: &Ideal<F>) -> Result<Ideal<F>> {
    if *i.ring().order() == MonomialOrder::Grevlex {
        Ok(i.clone())
    } else {
        i.with_order(MonomialOrder::Grevlex)
    }
}

fn betti<F: Field>(i: &Ideal<F>, format: BettiFormat) -> Result<()> {
    let i = grevlex(i)?;
    let table = minimal_resolution(&i)?.betti();
    match format {
        BettiFormat::Json => {
            let mut v = table.to_json();
            v["regularity"] = table.regularity().into();
            v["hilbert_numerator"] = HilbertData::of(&i).numerator().to_string().into();
            println!("{}", serde_json::to_string_pretty(&v)?);
        }
        BettiFormat::Text => print!("{table}"),
    }
    Ok(())
}

fn run_verify<F: Field>(
    field: F,
    claim: &str,
    m: Option<usize>,
    n: Option<usize>,
    primed: bool,
    seed: u64,
) -> Result<ReportSet> {
    let claims: Vec<Claim> = if claim == "all" {
        Claim::ALL.to_vec()
    } else {
        vec![Claim::parse(claim)
            .ok_or_else(|| cmreg::Error::Parse(format!("unknown claim `{claim}`")))?]
    };
    let grid: Vec<GridPoint> = match (m, n) {
        (Some(m), Some(n)) => {
            let primed = primed || (claims.len() == 1 && claims[0].family() == Some(true));
            vec![(m, n, primed)]
        }
        (None, None) => DEFAULT_GRID.to_vec(),
        _ => {
            return Err(cmreg::Error::Parse(
                "give both --m and --n, or neither".into(),
            ))
        }
    };
    let set = verify::verify_grid(field, &grid, &claims, seed);
    if set.reports.is_empty() {
        return Err(cmreg::Error::Precondition(format!(
            "`{claim}` does not apply to the requested family"
        )));
    }
    Ok(set)
}
