//! Input files: simplicial complexes, binoid presentations and monomial ideals.
//!
//! ```text
//! # simplicial complex
//! vertices: 1 2 3 4
//! facet: 1 2 3
//! facet: 3 4
//!
//! # binoid presentation
//! generators: x y z
//! relation: x + y = 2 z
//! relation: x + y + z = inf
//!
//! # monomial ideal
//! variables: x y z
//! gen: x^2 y z^3
//! ```
//!
//! A file starting with `{` is read as the JSON form of a simplicial complex,
//! `{"vertices": [1, 2, 3, 4], "facets": [[1, 2, 3], [3, 4]]}`.

use std::collections::BTreeSet;

use binoid_core::{BinoidPresentation, Face, Relation, SimplicialComplex};
use serde::Deserialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError { line, message: message.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    Complex(SimplicialComplex),
    Binoid(BinoidPresentation),
    /// A monomial ideal, kept as the presentation with one `∞`-relation per generator.
    Monomial(BinoidPresentation),
}

impl Input {
    pub fn kind(&self) -> &'static str {
        match self {
            Input::Complex(_) => "simplicial complex",
            Input::Binoid(_) => "binoid presentation",
            Input::Monomial(_) => "monomial ideal",
        }
    }
}

/// Non-empty lines with comments removed, numbered from 1.
fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn split_key(line: usize, l: &str) -> Result<(&str, &str), ParseError> {
    let (key, rest) =
        l.split_once(':').ok_or_else(|| ParseError::new(line, format!("expected `key: value`, found `{l}`")))?;
    Ok((key.trim(), rest.trim()))
}

/// Reads any supported file, telling the kinds apart by the first keyword.
pub fn parse(text: &str) -> Result<Input, ParseError> {
    if text.trim_start().starts_with('{') {
        return parse_complex_json(text).map(Input::Complex);
    }
    let Some((line, first)) = lines(text).next() else {
        return Err(ParseError::new(1, "empty input"));
    };
    match split_key(line, first)?.0 {
        "vertices" | "facet" => parse_complex(text).map(Input::Complex),
        "generators" => parse_binoid(text).map(Input::Binoid),
        "variables" => parse_monomial(text).map(Input::Monomial),
        other => Err(ParseError::new(line, format!("unknown keyword `{other}`"))),
    }
}

fn parse_vertices(line: usize, s: &str) -> Result<Vec<u32>, ParseError> {
    s.split_whitespace()
        .map(|t| t.parse::<u32>().map_err(|_| ParseError::new(line, format!("invalid vertex `{t}`"))))
        .collect()
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex, ParseError> {
    let mut vertices: Option<BTreeSet<u32>> = None;
    let mut facets = Vec::new();
    for (line, l) in lines(text) {
        match split_key(line, l)? {
            ("vertices", rest) => {
                if vertices.is_some() {
                    return Err(ParseError::new(line, "`vertices` given twice"));
                }
                if !facets.is_empty() {
                    return Err(ParseError::new(line, "`vertices` must precede the facets"));
                }
                vertices = Some(parse_vertices(line, rest)?.into_iter().collect());
            }
            ("facet", rest) => {
                let f = parse_vertices(line, rest)?;
                if let Some(v) = vertices.as_ref().and_then(|vs| f.iter().find(|v| !vs.contains(v))) {
                    return Err(ParseError::new(line, format!("vertex {v} is not declared")));
                }
                facets.push(Face::new(f));
            }
            (key, _) => return Err(ParseError::new(line, format!("unknown keyword `{key}`"))),
        }
    }
    let vertices = vertices.unwrap_or_else(|| facets.iter().flat_map(|f| f.vertices().to_vec()).collect());
    // Declared vertices were checked above, so this cannot fail.
    SimplicialComplex::with_vertices(vertices, facets).map_err(|e| ParseError::new(1, e.to_string()))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexJson {
    vertices: Option<Vec<u32>>,
    facets: Vec<Vec<u32>>,
}

pub fn parse_complex_json(text: &str) -> Result<SimplicialComplex, ParseError> {
    let c: ComplexJson = serde_json::from_str(text).map_err(|e| ParseError::new(e.line(), e.to_string()))?;
    let vertices = c.vertices.unwrap_or_else(|| c.facets.iter().flatten().copied().collect());
    SimplicialComplex::with_vertices(vertices, c.facets.into_iter().map(Face::new))
        .map_err(|e| ParseError::new(1, e.to_string()))
}

fn parse_names(line: usize, s: &str) -> Result<Vec<String>, ParseError> {
    let names: Vec<String> = s.split_whitespace().map(str::to_string).collect();
    for n in &names {
        let mut chars = n.chars();
        let ok = chars.next().is_some_and(|c| c.is_alphabetic() || c == '_')
            && chars.all(|c| c.is_alphanumeric() || c == '_' || c == '\'');
        if !ok {
            return Err(ParseError::new(line, format!("invalid name `{n}`")));
        }
    }
    if names.iter().collect::<BTreeSet<_>>().len() != names.len() {
        return Err(ParseError::new(line, "duplicate name"));
    }
    Ok(names)
}

/// One side of a relation, such as `x + 2 y` or `0`, as an exponent vector.
fn parse_sum(line: usize, s: &str, names: &[String]) -> Result<Vec<u32>, ParseError> {
    let mut v = vec![0u32; names.len()];
    if s.trim() == "0" {
        return Ok(v);
    }
    for term in s.split('+') {
        let term: String = term.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
        let digits = term.chars().take_while(char::is_ascii_digit).count();
        let (coef, name) = term.split_at(digits);
        let coef: u32 = if coef.is_empty() {
            1
        } else {
            coef.parse().map_err(|_| ParseError::new(line, format!("invalid coefficient in `{term}`")))?
        };
        if name.is_empty() {
            return Err(ParseError::new(line, format!("missing generator in `{}`", s.trim())));
        }
        let i = names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| ParseError::new(line, format!("unknown generator `{name}`")))?;
        v[i] += coef;
    }
    Ok(v)
}

pub fn parse_binoid(text: &str) -> Result<BinoidPresentation, ParseError> {
    let mut names: Option<Vec<String>> = None;
    let mut relations = Vec::new();
    for (line, l) in lines(text) {
        match split_key(line, l)? {
            ("generators", rest) => {
                if names.is_some() {
                    return Err(ParseError::new(line, "`generators` given twice"));
                }
                names = Some(parse_names(line, rest)?);
            }
            ("relation", rest) => {
                let names = names.as_ref().ok_or_else(|| ParseError::new(line, "`generators` must come first"))?;
                let (lhs, rhs) = rest.split_once('=').ok_or_else(|| ParseError::new(line, "expected `lhs = rhs`"))?;
                let lhs = parse_sum(line, lhs, names)?;
                let relation = match rhs.trim() {
                    "inf" | "∞" => Relation::infinity(lhs),
                    rhs => Relation::element(lhs, parse_sum(line, rhs, names)?),
                };
                if let binoid_core::RelationRhs::Element(r) = &relation.rhs {
                    if *r == relation.lhs {
                        return Err(ParseError::new(line, "trivial relation"));
                    }
                }
                relations.push(relation);
            }
            (key, _) => return Err(ParseError::new(line, format!("unknown keyword `{key}`"))),
        }
    }
    let names = names.ok_or_else(|| ParseError::new(1, "missing `generators`"))?;
    BinoidPresentation::new(names, relations).map_err(|e| ParseError::new(1, e.to_string()))
}

/// A monomial such as `x^2 y z^3` or `x^2*y*z^3` as an exponent vector.
fn parse_monomial_term(line: usize, s: &str, names: &[String]) -> Result<Vec<u32>, ParseError> {
    let mut v = vec![0u32; names.len()];
    for factor in s.split(|c: char| c.is_whitespace() || c == '*').filter(|f| !f.is_empty()) {
        let (name, exp) = match factor.split_once('^') {
            Some((n, e)) => {
                let e =
                    e.parse::<u32>().map_err(|_| ParseError::new(line, format!("invalid exponent in `{factor}`")))?;
                (n, e)
            }
            None => (factor, 1),
        };
        let i = names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| ParseError::new(line, format!("unknown variable `{name}`")))?;
        v[i] += exp;
    }
    if v.iter().all(|&e| e == 0) {
        return Err(ParseError::new(line, "the unit monomial generates the whole ring"));
    }
    Ok(v)
}

pub fn parse_monomial(text: &str) -> Result<BinoidPresentation, ParseError> {
    let mut names: Option<Vec<String>> = None;
    let mut relations = Vec::new();
    for (line, l) in lines(text) {
        match split_key(line, l)? {
            ("variables", rest) => {
                if names.is_some() {
                    return Err(ParseError::new(line, "`variables` given twice"));
                }
                names = Some(parse_names(line, rest)?);
            }
            ("gen", rest) => {
                let names = names.as_ref().ok_or_else(|| ParseError::new(line, "`variables` must come first"))?;
                relations.push(Relation::infinity(parse_monomial_term(line, rest, names)?));
            }
            (key, _) => return Err(ParseError::new(line, format!("unknown keyword `{key}`"))),
        }
    }
    let names = names.ok_or_else(|| ParseError::new(1, "missing `variables`"))?;
    BinoidPresentation::new(names, relations).map_err(|e| ParseError::new(1, e.to_string()))
}
