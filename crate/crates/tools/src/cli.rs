//! Command dispatch. [`run`] maps parsed arguments and file contents to the
//! text printed on standard output.

use std::fmt::Display;
use std::path::PathBuf;

use binoid_core::cech::{
    local_picard_cech, local_picard_general, monomial_report, pic_open_subset, stanley_reisner_cohomology,
    UnipotentPart,
};
use binoid_core::divisors::{class_group, valuation_matrix};
use binoid_core::{BinoidPresentation, Face, FinAbGroup, SpecPoset};
use clap::{Parser, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use crate::input::{self, Input, ParseError};
use crate::report::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Verb {
    /// Prime ideals of a binoid and their heights.
    Spec,
    /// The spectrum as a Graphviz digraph.
    Dot,
    /// Local Picard groups of a simplicial binoid.
    Picard,
    /// Local Picard groups of an integral binoid, via a unit-group search.
    PicardGeneral,
    /// Integral cohomology of a simplicial complex.
    Cohomology,
    /// Unit-sheaf cohomology of the punctured spectrum of a Stanley-Reisner ring.
    SrCohomology,
    /// Divisor class group of an integral binoid.
    ClassGroup,
    /// Unit-sheaf cohomology of the primes of height at most `--max-height`.
    PicOpen,
    /// Nerve of the minimal cover of the punctured spectrum.
    Nerve,
    /// Link of `--face` in a simplicial complex.
    Link,
    /// Combinatorial verdicts for a monomial ideal.
    MonomialReport,
}

#[derive(Debug, Parser)]
#[command(name = "binoid", version, about = "Spectra, local Picard groups and class groups of binoids")]
pub struct Args {
    #[arg(value_enum)]
    pub verb: Verb,
    /// A simplicial complex, binoid presentation or monomial ideal file.
    pub input: PathBuf,
    /// Print JSON instead of text.
    #[arg(long)]
    pub json: bool,
    /// Print the spectrum as DOT (with `spec`).
    #[arg(long)]
    pub dot: bool,
    /// Reduced cohomology (with `cohomology`).
    #[arg(long)]
    pub reduced: bool,
    /// Largest multiple searched when testing whether a generator becomes a unit.
    #[arg(long, default_value_t = 6)]
    pub bound: u32,
    /// Report a single cohomological degree.
    #[arg(long, allow_negative_numbers = true)]
    pub degree: Option<isize>,
    /// Face for `link`, as comma-separated vertices.
    #[arg(long, value_delimiter = ',')]
    pub face: Option<Vec<u32>>,
    /// Height bound of the open set for `pic-open`.
    #[arg(long, default_value_t = 1)]
    pub max_height: usize,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error("{0}")]
    Core(#[from] binoid_core::Error),
    #[error("`{verb}` does not apply to a {kind}")]
    Inadmissible { verb: String, kind: &'static str },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Read { .. } | CliError::Parse { .. } => 2,
            CliError::Core(_) | CliError::Inadmissible { .. } | CliError::Usage(_) => 3,
        }
    }
}

#[derive(Debug, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    /// A completeness flag was false.
    pub incomplete: bool,
}

impl Output {
    fn complete(text: String) -> Self {
        Output { text, incomplete: false }
    }
}

fn verb_name(verb: Verb) -> String {
    verb.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report types serialize")
}

/// Groups `H^j` for `j = first, first+1, …`, restricted to `--degree` when given.
/// Without a degree the list stops at the last nontrivial group, but always
/// shows the first two degrees.
fn select<T>(
    first: isize,
    groups: &[T],
    degree: Option<isize>,
    trivial: impl Fn(&T) -> bool,
) -> Vec<(isize, Option<&T>)> {
    let get = |j: isize| usize::try_from(j - first).ok().and_then(|i| groups.get(i));
    if let Some(j) = degree {
        return vec![(j, get(j))];
    }
    let last = groups.iter().rposition(|g| !trivial(g)).map_or(0, |i| i as isize);
    let end = (first + last).max(first + 1);
    (first..=end).map(|j| (j, get(j))).collect()
}

fn text_line<T: Display>(selected: &[(isize, Option<&T>)]) -> String {
    selected
        .iter()
        .map(|(j, g)| format!("H^{j} = {}", g.map_or_else(|| "0".to_string(), ToString::to_string)))
        .collect::<Vec<_>>()
        .join(", ")
}

fn group_degrees(selected: &[(isize, Option<&FinAbGroup>)]) -> Vec<DegreeJson<GroupJson>> {
    selected
        .iter()
        .map(|&(degree, g)| DegreeJson { degree, group: g.map_or_else(|| (&FinAbGroup::trivial()).into(), Into::into) })
        .collect()
}

fn groups_output(first: isize, groups: &[FinAbGroup], args: &Args) -> String {
    let selected = select(first, groups, args.degree, FinAbGroup::is_trivial);
    if args.json {
        json(&GroupsJson { degrees: group_degrees(&selected) })
    } else {
        text_line(&selected)
    }
}

/// The binoid behind an input; complexes give their simplicial binoid.
fn presentation(input: &Input) -> Result<BinoidPresentation, CliError> {
    match input {
        Input::Complex(c) => Ok(BinoidPresentation::from_simplicial(c)?),
        Input::Binoid(m) | Input::Monomial(m) => Ok(m.clone()),
    }
}

fn spec_output(spec: &SpecPoset, args: &Args) -> String {
    if args.json {
        return json(&SpecJson::from(spec));
    }
    let heights = spec.heights();
    spec.primes()
        .iter()
        .zip(heights)
        .map(|(p, h)| format!("{}  height {h}", spec.label(*p)))
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn run(args: &Args, text: &str) -> Result<Output, CliError> {
    let input = input::parse(text).map_err(|source| CliError::Parse { path: args.input.clone(), source })?;
    let inadmissible = || CliError::Inadmissible { verb: verb_name(args.verb), kind: input.kind() };
    if args.dot && !matches!(args.verb, Verb::Spec | Verb::Dot) {
        return Err(CliError::Usage("--dot applies to `spec` only".into()));
    }
    let out = match args.verb {
        Verb::Spec | Verb::Dot => {
            let spec = SpecPoset::compute(&presentation(&input)?)?;
            if args.dot || args.verb == Verb::Dot {
                spec.to_dot()
            } else {
                spec_output(&spec, args)
            }
        }
        Verb::Nerve => {
            let spec = SpecPoset::compute(&presentation(&input)?)?;
            let nerve = spec.nerve(&spec.minimal_cover(&spec.punctured())?);
            if args.json {
                json(&ComplexJson::from(&nerve))
            } else {
                nerve.to_string()
            }
        }
        Verb::Picard => {
            let Input::Complex(c) = &input else { return Err(inadmissible()) };
            groups_output(0, &local_picard_cech(c)?, args)
        }
        Verb::Cohomology => {
            let Input::Complex(c) = &input else { return Err(inadmissible()) };
            let h = c.cohomology(args.reduced)?;
            groups_output(h.first_degree, &h.groups, args)
        }
        Verb::SrCohomology => {
            let Input::Complex(c) = &input else { return Err(inadmissible()) };
            let terms = stanley_reisner_cohomology(c, "K*")?;
            let selected = select(0, &terms, args.degree, |t| t.is_trivial());
            if args.json {
                let degrees = selected
                    .iter()
                    .map(|&(degree, t)| DegreeJson {
                        degree,
                        group: t.map(SrTermJson::from).unwrap_or_else(|| SrTermJson {
                            units: (&binoid_core::GroupExpr::trivial("K*")).into(),
                            picard: (&FinAbGroup::trivial()).into(),
                        }),
                    })
                    .collect();
                json(&GroupsJson { degrees })
            } else {
                text_line(&selected)
            }
        }
        Verb::PicOpen => {
            let Input::Complex(c) = &input else { return Err(inadmissible()) };
            let m = BinoidPresentation::from_simplicial(c)?;
            let spec = SpecPoset::compute(&m)?;
            let open = spec.height_locus(args.max_height);
            let groups = pic_open_subset(c, &open)?;
            if args.json {
                let selected = select(0, &groups, args.degree, FinAbGroup::is_trivial);
                json(&PicOpenJson {
                    open: open.iter().map(|p| gen_names(m.generators(), p.0)).collect(),
                    degrees: group_degrees(&selected),
                })
            } else {
                groups_output(0, &groups, args)
            }
        }
        Verb::Link => {
            let Input::Complex(c) = &input else { return Err(inadmissible()) };
            let face = args.face.clone().ok_or_else(|| CliError::Usage("`link` needs --face".into()))?;
            let link = c.link(&Face::new(face))?;
            if args.json {
                json(&ComplexJson::from(&link))
            } else {
                link.to_string()
            }
        }
        Verb::PicardGeneral => {
            let Input::Binoid(m) = &input else { return Err(inadmissible()) };
            let g = local_picard_general(m, args.bound)?;
            let selected = select(0, &g.cohomology, args.degree, FinAbGroup::is_trivial);
            let text = if args.json {
                json(&GeneralPicardJson::new(m.generators(), &g, group_degrees(&selected)))
            } else {
                text_line(&selected)
            };
            return Ok(Output { text, incomplete: !g.complete });
        }
        Verb::ClassGroup => {
            let Input::Binoid(m) = &input else { return Err(inadmissible()) };
            let vm = valuation_matrix(m)?;
            let cl = class_group(m)?;
            if args.json {
                json(&ClassGroupJson::new(m.generators(), &vm, &cl))
            } else {
                cl.to_string()
            }
        }
        Verb::MonomialReport => {
            let (Input::Monomial(m) | Input::Binoid(m)) = &input else { return Err(inadmissible()) };
            let r = monomial_report(m, "K*")?;
            if args.json {
                json(&MonomialReportJson::from(&r))
            } else {
                let parts = select(0, &r.reduced_parts, None, |t| t.is_trivial());
                let verdict = match r.pic_loc_trivial {
                    Some(true) => "trivial",
                    Some(false) => "nontrivial",
                    None => "undecided",
                };
                let unipotent = match r.unipotent_part {
                    UnipotentPart::Vanishes => "vanishes",
                    UnipotentPart::NotComputed => "not computed",
                };
                [
                    format!("radical: {}", r.radical),
                    format!("is_radical: {}", r.is_radical),
                    format!("reduced: {}", text_line(&parts)),
                    format!("nonvanishing_h1: {}", r.nonvanishing_h1),
                    format!("unipotent_part: {unipotent}"),
                    format!("pic_loc: {verdict}"),
                ]
                .join("\n")
            }
        }
    };
    Ok(Output::complete(out))
}
