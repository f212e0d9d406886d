//! `equichow`: equivariant Chow ring computations from the command line.

mod output;
mod scenario;

use clap::{Parser, Subcommand, ValueEnum};
use equichow_core::error::Error;
use equichow_core::{
    m11_chow, m11bar_chow, naive_comparison_122, picard_m11, point_ring, quotient_presentation,
    AnyPresentation, CharacterLattice, GroupSpec, ProjectiveAction,
};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "equichow",
    about = "Equivariant Chow rings: point rings, projective actions, quotients, moduli of elliptic curves",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the equivariant Chow ring of a point for a group (Gm, Tn, GLn, SLn)
    PointRing {
        #[arg(long)]
        group: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Projective space under a diagonal torus action: presentation,
    /// fixed-point table, and localization integrals
    Proj {
        /// Weights: `0,1,2` (rank 1) or `1,0;0,1` (rank 2, characters split by `;`)
        #[arg(long, allow_hyphen_values = true)]
        weights: String,
        /// Classes to integrate over the fixed points, e.g. `h^2`
        #[arg(long)]
        integrate: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Quotient of an open subset of a representation by the torus
    Quotient {
        /// Scenario file: {torus_rank, weights, removed, classes}
        #[arg(long, conflicts_with = "example_122", required_unless_present = "example_122")]
        scenario: Option<String>,
        /// Built-in weights-(1,2,2) scenario with the naive-cycle comparison
        #[arg(long = "example-122")]
        example_122: bool,
        /// Highest degree of the graded pieces to report
        #[arg(long, default_value_t = 4)]
        max_degree: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Chow rings of the moduli stacks of elliptic curves
    Moduli {
        #[arg(value_parser = ["m11", "m11bar", "picard"])]
        target: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Reduce a polynomial to its normal form in a presentation
    Reduce {
        /// Presentation JSON file, as emitted by the other commands
        #[arg(long)]
        presentation: String,
        /// Polynomial expression in the presentation's variables
        #[arg(long)]
        poly: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Graded pieces of a presentation (integer domain: group invariants via
    /// Smith normal form; rational domain: dimensions)
    Graded {
        #[arg(long)]
        presentation: String,
        /// Single degree to report
        #[arg(long, conflicts_with = "max_degree")]
        degree: Option<u64>,
        /// Report all degrees up to this bound
        #[arg(long, default_value_t = 4)]
        max_degree: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::VerificationFailed(_) | Error::NonClearingDenominator(_) => 1,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn read_file(path: &str) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure {
        code: 2,
        message: format!("{path}: {e}"),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(payload) => {
            println!("{payload}");
            ExitCode::SUCCESS
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(command: Command) -> Result<String, Failure> {
    match command {
        Command::PointRing { group, format } => {
            let spec = GroupSpec::parse(&group)?;
            let ring = point_ring(spec)?;
            Ok(output::point_ring_output(spec, &ring, format))
        }
        Command::Proj {
            weights,
            integrate,
            format,
        } => {
            let characters = scenario::parse_weights(&weights)?;
            let rank = characters[0].rank();
            let lattice = CharacterLattice::new(rank)?;
            let action = ProjectiveAction::new(lattice, characters)?;
            let integrals = integrate
                .iter()
                .map(|text| {
                    let class = equichow_core::parse_polynomial(action.ambient(), text)?;
                    let value = action.integrate(&class)?;
                    Ok((class, value))
                })
                .collect::<Result<Vec<_>, Error>>()?;
            Ok(output::proj_output(&action, &integrals, format))
        }
        Command::Quotient {
            scenario,
            example_122,
            max_degree,
            format,
        } => {
            if example_122 {
                let report = naive_comparison_122()?;
                return Ok(output::comparison_output(&report, max_degree, format));
            }
            let path = scenario.expect("clap enforces scenario or --example-122");
            let text = read_file(&path)?;
            let scenario = scenario::load_scenario(&text)?;
            if scenario.removed.is_empty() && scenario.classes.is_empty() {
                eprintln!("warning: nothing removed and no classes; reporting the free ring");
            }
            let rational = quotient_presentation(&scenario)?;
            let integral = if scenario.classes.is_empty() {
                None
            } else {
                let base = equichow_core::RingPresentation::free(
                    scenario.representation.lattice().ambient(),
                );
                Some(equichow_core::excise_by_classes(&base, &scenario.classes)?)
            };
            Ok(output::quotient_output(
                &rational,
                integral.as_ref(),
                max_degree,
                format,
            ))
        }
        Command::Moduli { target, format } => match target.as_str() {
            "m11" => Ok(output::moduli_output(&m11_chow()?, format)),
            "m11bar" => Ok(output::moduli_output(&m11bar_chow()?, format)),
            "picard" => Ok(output::picard_output(&picard_m11()?, format)),
            _ => unreachable!("clap restricts the value"),
        },
        Command::Reduce {
            presentation,
            poly,
            format,
        } => {
            let text = read_file(&presentation)?;
            let loaded = equichow_core::json::presentation_from_json(&text)?;
            let reduced = match &loaded {
                AnyPresentation::Integers(p) => {
                    let parsed = equichow_core::parse_polynomial(p.ambient(), &poly)?;
                    output::polynomial_output(&p.normal_form(&parsed)?, format)
                }
                AnyPresentation::Rationals(p) => {
                    let parsed = equichow_core::parse_polynomial(p.ambient(), &poly)?;
                    output::polynomial_output(&p.normal_form(&parsed)?, format)
                }
            };
            Ok(reduced)
        }
        Command::Graded {
            presentation,
            degree,
            max_degree,
            format,
        } => {
            let text = read_file(&presentation)?;
            let loaded = equichow_core::json::presentation_from_json(&text)?;
            let degrees: Vec<u64> = match degree {
                Some(d) => vec![d],
                None => (0..=max_degree).collect(),
            };
            Ok(output::graded_output(&loaded, &degrees, format))
        }
    }
}
