use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rackkit::{
    alexander, complete_scan_bound, constant_action, enhanced_invariant, enumerate_subracks,
    exponent_profile, isomorphic, operator_equivalence_quotient, properties_report, quotient_by,
    rack_counting, rack_polynomial_with, rp_family_scan, subrack_polynomial_with, ts_rack,
    validate_rack, verify_constant_action_classification, IndexConvention, LinkDiagram, Partition,
    Permutation, RackTable, Subset,
};

#[derive(Parser)]
#[command(
    name = "rackkit",
    version,
    about = "Finite racks, rack polynomials and link invariants"
)]
struct Cli {
    /// Rack polynomial index convention.
    #[arg(long, global = true, default_value = "prop3", value_parser = parse_convention)]
    convention: IndexConvention,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Indices {
    #[arg(short, long, default_value_t = 1, allow_negative_numbers = true)]
    m: i64,
    #[arg(short, long, default_value_t = 1, allow_negative_numbers = true)]
    n: i64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Sr,
    Pr,
    Srpp,
    Rpp,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a rack table or a link diagram.
    Check { file: PathBuf },
    /// Rack, quandle, crossed set, abelian and Latin flags.
    Props { rack: PathBuf },
    /// The rack polynomial rp_{m,n}.
    Poly {
        rack: PathBuf,
        #[command(flatten)]
        idx: Indices,
    },
    /// Per-element exponent counts `x: c_m r_n`.
    Profile {
        rack: PathBuf,
        #[command(flatten)]
        idx: Indices,
    },
    /// Every subrack, smallest first.
    Subracks { rack: PathBuf },
    /// Subrack polynomial of a closed subset such as `{1,2,3}`.
    Srp {
        rack: PathBuf,
        subset: String,
        #[command(flatten)]
        idx: Indices,
    },
    /// Print a rack table from one of the standard families.
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// The dual rack.
    Dual { rack: PathBuf },
    /// Quotient by a partition such as `{1},{2},{3},{4,5}`.
    Quotient { rack: PathBuf, partition: String },
    /// Operator equivalence classes and their quotient.
    Opquot { rack: PathBuf },
    /// Isomorphism test with a witness.
    Iso { first: PathBuf, second: PathBuf },
    /// Compare rp_{m,n} of two racks for all m, n up to the bound.
    Scan {
        first: PathBuf,
        second: PathBuf,
        /// Defaults to the lcm of all column orders, which is complete.
        #[arg(long)]
        bound: Option<u64>,
    },
    /// Check the constant action classification on every cycle type of k points.
    ClassifyCa { k: usize },
    /// Counting invariants of a link diagram.
    Invariant {
        link: PathBuf,
        rack: PathBuf,
        #[arg(long, value_enum, default_value = "rpp")]
        mode: Mode,
        #[command(flatten)]
        idx: Indices,
    },
}

#[derive(Subcommand)]
enum Family {
    /// x▷y = σ(x); IMAGES lists σ(1),...,σ(k), e.g. `3,1,2`.
    Constant { images: String },
    /// x▷y = tx + (1-t)y on Z_n.
    Alexander {
        n: u64,
        #[arg(allow_negative_numbers = true)]
        t: i64,
    },
    /// x▷y = tx + sy on Z_n.
    Ts {
        n: u64,
        #[arg(allow_negative_numbers = true)]
        t: i64,
        #[arg(allow_negative_numbers = true)]
        s: i64,
    },
}

fn parse_convention(s: &str) -> Result<IndexConvention, String> {
    s.parse().map_err(|e: rackkit::Error| e.to_string())
}

enum Failure {
    /// Bad arguments or unreadable input; exit 2.
    Usage(String),
    /// Input read but rejected; exit 1.
    Domain(String),
}

impl From<rackkit::Error> for Failure {
    fn from(e: rackkit::Error) -> Self {
        match e {
            rackkit::Error::InvalidExponent { .. } | rackkit::Error::TooLarge { .. } => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Domain(e.to_string()),
        }
    }
}

type Output = Result<String, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn load_rack(path: &Path) -> Result<RackTable, Failure> {
    let t: RackTable = read(path)?
        .parse()
        .map_err(|e: rackkit::Error| Failure::Domain(format!("{}: {e}", path.display())))?;
    let report = validate_rack(&t);
    if !report.is_rack {
        return Err(Failure::Domain(format!(
            "{}: not a rack\n{report}",
            path.display()
        )));
    }
    Ok(t)
}

fn load_link(path: &Path) -> Result<LinkDiagram, Failure> {
    LinkDiagram::from_json(&read(path)?)
        .map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))
}

fn line(s: impl std::fmt::Display) -> String {
    format!("{s}\n")
}

fn check(path: &Path) -> Output {
    let text = read(path)?;
    if text.trim_start().starts_with('{') {
        let d = load_link(path)?;
        return Ok(format!(
            "diagram: {} crossings, {} arcs, {} components\n",
            d.crossings().len(),
            d.arcs().len(),
            d.component_count()
        ));
    }
    let t = load_rack(path)?;
    Ok(format!("rack of order {}\n", t.size()))
}

fn gen(family: &Family) -> Output {
    let t = match family {
        Family::Constant { images } => {
            let images = images
                .split([',', ' '])
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<usize>()
                        .map_err(|_| Failure::Usage(format!("bad image {s:?}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            constant_action(&Permutation::from_images(&images)?)
        }
        Family::Alexander { n, t } => alexander(*n, *t)?,
        Family::Ts { n, t, s } => ts_rack(*n, *t, *s)?,
    };
    Ok(t.to_string())
}

fn run(cli: &Cli) -> Output {
    let conv = cli.convention;
    match &cli.command {
        Command::Check { file } => check(file),
        Command::Props { rack } => Ok(properties_report(&load_rack(rack)?)?.to_string()),
        Command::Poly { rack, idx } => Ok(line(rack_polynomial_with(
            &load_rack(rack)?,
            idx.m,
            idx.n,
            conv,
        )?)),
        Command::Profile { rack, idx } => {
            Ok(exponent_profile(&load_rack(rack)?, idx.m, idx.n)?.to_string())
        }
        Command::Subracks { rack } => Ok(enumerate_subracks(&load_rack(rack)?)?
            .iter()
            .map(line)
            .collect()),
        Command::Srp { rack, subset, idx } => {
            let t = load_rack(rack)?;
            let s: Subset = subset
                .parse()
                .map_err(|e: rackkit::Error| Failure::Usage(e.to_string()))?;
            Ok(line(subrack_polynomial_with(&t, &s, idx.m, idx.n, conv)?))
        }
        Command::Gen { family } => gen(family),
        Command::Dual { rack } => Ok(load_rack(rack)?.dual()?.to_string()),
        Command::Quotient { rack, partition } => {
            let t = load_rack(rack)?;
            let p: Partition = partition
                .parse()
                .map_err(|e: rackkit::Error| Failure::Usage(e.to_string()))?;
            Ok(quotient_by(&t, &p)?.to_string())
        }
        Command::Opquot { rack } => {
            let oq = operator_equivalence_quotient(&load_rack(rack)?)?;
            Ok(format!(
                "classes: {}\nquandle: {}\n{}",
                oq.partition, oq.is_quandle, oq.quotient
            ))
        }
        Command::Iso { first, second } => {
            let result = isomorphic(&load_rack(first)?, &load_rack(second)?)?;
            Ok(match result.witness {
                Some(w) => format!("isomorphic\nwitness: {w}\n"),
                None => line("not isomorphic"),
            })
        }
        Command::Scan {
            first,
            second,
            bound,
        } => {
            let (a, b) = (load_rack(first)?, load_rack(second)?);
            let bound = match bound {
                Some(b) => *b,
                None => complete_scan_bound(&a, &b)?,
            };
            let report = rp_family_scan(&a, &b, bound, conv)?;
            let mut out = format!("bound: {bound}\n");
            if report.agrees() {
                out.push_str("no differences\n");
            } else {
                write!(out, "{report}").unwrap();
            }
            Ok(out)
        }
        Command::ClassifyCa { k } => {
            Ok(verify_constant_action_classification(*k, conv)?.to_string())
        }
        Command::Invariant {
            link,
            rack,
            mode,
            idx,
        } => {
            let d = load_link(link)?;
            let t = load_rack(rack)?;
            Ok(line(match mode {
                Mode::Sr => rack_counting(&d, &t)?.sr.to_string(),
                Mode::Pr => rack_counting(&d, &t)?.pr_string(),
                Mode::Srpp => enhanced_invariant(&d, &t, idx.m, idx.n, conv)?.srpp_string(),
                Mode::Rpp => enhanced_invariant(&d, &t, idx.m, idx.n, conv)?.rpp_string(),
            }))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {}", msg.trim_end());
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {}", msg.trim_end());
            ExitCode::from(2)
        }
    }
}
