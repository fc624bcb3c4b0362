//! Command-line front end: parse scheme files, run computations, emit
//! tables, regions, and verification reports.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error,
//! 3 genericity assertion failure.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use multireg::hilbert::HilbertTable;
use multireg::linalg::FieldSpec;
use multireg::points::{box_iter, random_scheme, FatPointScheme, GenericityCheck};
use multireg::regularity::{
    acm_check_p1xp1, coarse_bound_region, davis_geramita_bounds, eventual_values,
    hilbert_polynomial_p1xp1, membership, p1xp1_generic_region, reg_region, region_from_resvector,
    res_reg_vector, verify_acm_equality, AcmVerdict, UpSet,
};
use multireg::ring::{Multidegree, SpaceShape};
use multireg::schemefile::{parse_field_override, SchemeFile};
use multireg::{Error, Result};

const EXIT_VERIFY: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_GENERICITY: u8 = 3;

#[derive(Parser)]
#[command(
    name = "multireg",
    version,
    about = "Multigraded Hilbert functions and regularity regions of fat point schemes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the degree (length) of the scheme.
    Degree(FileArgs),
    /// Print Hilbert function values over a box or as an N^1 coarsening.
    Hilbert(HilbertArgs),
    /// Print the corners of the regularity region as JSON.
    Region(FileArgs),
    /// Print the resolution regularity vector (reg Z_1, ..., reg Z_k).
    Resvector(FileArgs),
    /// Print the closed-form bound regions and check containment.
    Bounds(BoundsArgs),
    /// Run the P^1 x P^1 first-difference ACM criterion.
    Acm(FileArgs),
    /// Run every applicable cross-check and print PASS/FAIL lines.
    Verify(BoundsArgs),
    /// Generate a reproducible random scheme file on stdout.
    Random(RandomArgs),
}

#[derive(Args)]
struct FileArgs {
    /// Path to a JSON scheme file.
    file: PathBuf,
}

#[derive(Args)]
struct HilbertArgs {
    file: PathBuf,
    /// Box upper corner, comma-separated, e.g. 3,3.
    #[arg(long = "box", value_name = "I1,...,IK")]
    box_bound: Option<String>,
    /// Print the total-degree coarsening H(0), ..., H(tmax).
    #[arg(long, value_name = "TMAX")]
    coarse: Option<i64>,
    /// CSV output.
    #[arg(long)]
    csv: bool,
}

#[derive(Args)]
struct BoundsArgs {
    file: PathBuf,
    /// Assert that the support is in generic position (verified; exit 3 on failure).
    #[arg(long)]
    generic: bool,
}

#[derive(Args)]
struct RandomArgs {
    /// Factor dimensions, comma-separated, e.g. 1,1.
    #[arg(long, value_name = "N1,...,NK")]
    shape: String,
    /// Multiplicities, comma-separated, e.g. 2,1,1.
    #[arg(long, value_name = "M1,...,MS")]
    mults: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Degree(args) => {
            let (scheme, _) = load(&args.file)?;
            println!("{}", scheme.degree());
            Ok(ExitCode::SUCCESS)
        }
        Command::Hilbert(args) => cmd_hilbert(args),
        Command::Region(args) => {
            let (scheme, field) = load(&args.file)?;
            let region = reg_region(&HilbertTable::new(scheme, field))?;
            println!("{}", corners_json(&region));
            Ok(ExitCode::SUCCESS)
        }
        Command::Resvector(args) => {
            let (scheme, field) = load(&args.file)?;
            println!("{}", res_reg_vector(&scheme, &field)?.0);
            Ok(ExitCode::SUCCESS)
        }
        Command::Bounds(args) => cmd_bounds(args),
        Command::Acm(args) => {
            let (scheme, field) = load(&args.file)?;
            let verdict = acm_check_p1xp1(&HilbertTable::new(scheme, field))?;
            println!("{}", render_verdict(&verdict));
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(args) => cmd_verify(args),
        Command::Random(args) => {
            let shape = SpaceShape::new(parse_list::<usize>(&args.shape)?)?;
            let mults = parse_list::<u32>(&args.mults)?;
            let scheme = random_scheme(&shape, &mults, args.seed)?;
            println!(
                "{}",
                SchemeFile::from_scheme(&scheme, &FieldSpec::Rational).to_json()
            );
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn load(path: &std::path::Path) -> Result<(FatPointScheme, FieldSpec)> {
    let (scheme, mut field) = SchemeFile::load(path)?.build()?;
    if let Ok(value) = std::env::var("MULTIREG_FIELD") {
        field = parse_field_override(&value)?;
    }
    Ok((scheme, field))
}

fn parse_list<T: std::str::FromStr>(s: &str) -> Result<Vec<T>> {
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<T>()
                .map_err(|_| Error::SchemeFile(format!("invalid list entry: {part:?}")))
        })
        .collect()
}

fn corners_json(region: &UpSet) -> String {
    let corners: Vec<&Vec<i64>> = region.corners().iter().map(|c| &c.0).collect();
    serde_json::json!({ "corners": corners }).to_string()
}

fn render_verdict(verdict: &AcmVerdict) -> String {
    match verdict {
        AcmVerdict::AcmConsistent => "ACM-consistent".to_string(),
        AcmVerdict::NotAcm {
            witness,
            obstruction,
        } => {
            format!("not ACM: {obstruction:?} at ({},{})", witness.0, witness.1)
        }
    }
}

fn cmd_hilbert(args: HilbertArgs) -> Result<ExitCode> {
    let (scheme, field) = load(&args.file)?;
    let table = HilbertTable::new(scheme, field);
    if let Some(tmax) = args.coarse {
        if tmax < 0 {
            return Err(Error::SchemeFile("--coarse bound must be >= 0".into()));
        }
        if args.csv {
            println!("t,value");
        }
        for t in 0..=tmax {
            let v = table.coarse(t)?;
            if args.csv {
                println!("{t},{v}");
            } else {
                println!("{t} {v}");
            }
        }
        return Ok(ExitCode::SUCCESS);
    }
    let bound_str = args
        .box_bound
        .ok_or_else(|| Error::SchemeFile("provide --box or --coarse".into()))?;
    let bound = Multidegree(parse_list::<i64>(&bound_str)?);
    if bound.k() != table.scheme().shape().k() || !bound.is_nonnegative() {
        return Err(Error::SchemeFile(format!(
            "--box expects {} nonnegative entries",
            table.scheme().shape().k()
        )));
    }
    let hbox = table.box_values(&bound)?;
    if args.csv {
        print!("{}", hbox.to_csv());
    } else if let Some(matrix) = hbox.as_matrix() {
        for row in matrix {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            println!("{}", cells.join(" "));
        }
    } else {
        for d in box_iter(&bound) {
            println!("{} {}", d, hbox.get(&d).expect("cell inside computed box"));
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Ensures the support of the scheme is in generic position (checked over
/// the box [0, sigma]^k), or reports exit code 3.
fn assert_generic(
    scheme: &FatPointScheme,
    field: &FieldSpec,
) -> Result<std::result::Result<(), ExitCode>> {
    let support = scheme.support();
    let sigma = scheme.sigma() as i64;
    let bound = Multidegree(vec![sigma; scheme.shape().k()]);
    match support.generic_position_check(&bound, field)? {
        GenericityCheck::Generic => Ok(Ok(())),
        GenericityCheck::FailsAt(d) => {
            eprintln!("genericity assertion failed at {d}");
            Ok(Err(ExitCode::from(EXIT_GENERICITY)))
        }
    }
}

fn cmd_bounds(args: BoundsArgs) -> Result<ExitCode> {
    let (scheme, field) = load(&args.file)?;
    if args.generic {
        if let Err(code) = assert_generic(&scheme, &field)? {
            return Ok(code);
        }
    }
    let table = HilbertTable::new(scheme.clone(), field);
    let region = reg_region(&table)?;
    let (first, second) = davis_geramita_bounds(&scheme, args.generic)?;
    let mut ok = true;
    let mut report = |name: &str, bound: &UpSet| {
        let contained = bound.subset_of(&region);
        ok &= contained;
        println!(
            "{name}: {} containment={}",
            corners_json(bound),
            if contained { "PASS" } else { "FAIL" }
        );
    };
    report("degree-bound region", &first);
    if let Some(second) = second {
        report("generic-support region", &second);
    }
    if args.generic && scheme.shape().factors() == [1, 1] {
        let generic_region = p1xp1_generic_region(&scheme.multiplicities())?;
        report("p1xp1-generic region", &generic_region);
    }
    Ok(if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VERIFY)
    })
}

fn cmd_verify(args: BoundsArgs) -> Result<ExitCode> {
    let (scheme, field) = load(&args.file)?;
    if args.generic {
        if let Err(code) = assert_generic(&scheme, &field)? {
            return Ok(code);
        }
    }
    let table = HilbertTable::new(scheme.clone(), field);
    let k = scheme.shape().k();
    let sigma = scheme.sigma() as i64;
    let mut ok = true;
    let mut report = |name: &str, pass: bool| {
        ok &= pass;
        println!("{} {name}", if pass { "PASS" } else { "FAIL" });
    };

    let top = Multidegree(vec![sigma; k]);
    report(
        "degree-stabilization",
        table.value(&top)? == scheme.degree(),
    );

    let mut monotone = true;
    for d in box_iter(&top) {
        let v = table.value(&d)?;
        if v > scheme.degree() {
            monotone = false;
        }
        for j in 0..k {
            if table.value(&d.plus_basis(j))? < v {
                monotone = false;
            }
        }
    }
    report("monotone-and-capped", monotone);

    let r = res_reg_vector(&scheme, &field)?.0;
    report("resvector-membership", membership(&table, &r)?);

    let region = reg_region(&table)?;
    let n = scheme.shape().total_dim() as u32;
    report(
        "resvector-region-containment",
        region_from_resvector(&r, n + 1, k)?.subset_of(&region),
    );
    report(
        "coarse-bound-containment",
        coarse_bound_region(*r.0.iter().max().expect("nonempty degree"), n + 1, k)?
            .subset_of(&region),
    );
    let (first, _) = davis_geramita_bounds(&scheme, false)?;
    report("degree-bound-containment", first.subset_of(&region));

    let mut projections = true;
    for axis in 0..k {
        let proj = scheme.project(axis)?;
        let proj_table = HilbertTable::new(proj, field);
        for t in 0..=sigma {
            let mut axis_degree = vec![0i64; k];
            axis_degree[axis] = t;
            if table.value(&Multidegree(axis_degree))? != proj_table.value(&Multidegree(vec![t]))? {
                projections = false;
            }
        }
    }
    report("projection-identity", projections);

    if scheme.shape().factors() == [1, 1] {
        let acm = verify_acm_equality(&table)?;
        report("acm-inclusion", acm.inclusion_holds);
        if acm.verdict == AcmVerdict::AcmConsistent {
            report("acm-equality", acm.equality_holds);
        }
        if args.generic {
            let mults = scheme.multiplicities();
            let generic_region = p1xp1_generic_region(&mults)?;
            report(
                "p1xp1-generic-containment",
                generic_region.subset_of(&region),
            );
            let expected = eventual_values(&mults);
            let m1 = *mults.iter().max().expect("nonempty scheme") as i64;
            let mut eventual_ok = true;
            for (j, &c) in expected.iter().enumerate() {
                let d = Multidegree(vec![sigma + m1, j as i64]);
                let dt = Multidegree(vec![j as i64, sigma + m1]);
                if table.value(&d)? != c || table.value(&dt)? != c {
                    eventual_ok = false;
                }
            }
            report("eventual-values", eventual_ok);
            let mut hp_ok = true;
            for t in sigma - 1..=sigma + 3 {
                if table.coarse(t)? as i64 != hilbert_polynomial_p1xp1(&mults, t)? {
                    hp_ok = false;
                }
            }
            report("coarse-hilbert-polynomial", hp_ok);
        }
    }

    Ok(if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VERIFY)
    })
}
