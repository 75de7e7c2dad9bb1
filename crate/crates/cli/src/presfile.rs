//! The line-based presentation file format.
//!
//! ```text
//! space CP^2
//! dimc 2
//! gen x 2
//! rel x^3
//! sq2 x = x^2
//! twist O1 = x
//! ```

use std::collections::BTreeMap;
use std::fmt::Write;

use kocalc_core::catalog::SpaceId;
use kocalc_core::graded_algebra::Generator;
use kocalc_core::polynomial::{Monomial, Polynomial};
use kocalc_core::{Degeneration, Error as CoreError, SpaceData};

/// A diagnostic; `line` is 1-based, absent for whole-file problems.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresFileError {
    pub line: Option<usize>,
    pub message: String,
}

impl std::fmt::Display for PresFileError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.line {
            Some(line) => write!(f, "line {line}: {}", self.message),
            None => f.write_str(&self.message),
        }
    }
}

impl std::error::Error for PresFileError {}

fn at(line: usize, message: impl Into<String>) -> PresFileError {
    PresFileError {
        line: Some(line),
        message: message.into(),
    }
}

#[derive(Default)]
struct Lines<'a> {
    space: Option<(usize, &'a str)>,
    dimc: Option<(usize, u32)>,
    gens: Vec<(usize, &'a str, u32)>,
    rels: Vec<(usize, &'a str)>,
    sq2: Vec<(usize, &'a str, &'a str)>,
    twists: Vec<(usize, &'a str, &'a str)>,
}

fn split_assignment(line: usize, rest: &str) -> Result<(&str, &str), PresFileError> {
    let (name, poly) = rest
        .split_once('=')
        .ok_or_else(|| at(line, "expected `NAME = POLY`"))?;
    let name = name.trim();
    if name.is_empty() || name.contains(char::is_whitespace) {
        return Err(at(line, format!("invalid name `{name}`")));
    }
    Ok((name, poly.trim()))
}

fn scan(text: &str) -> Result<Lines<'_>, PresFileError> {
    let mut out = Lines::default();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split_once('#').map_or(raw, |(c, _)| c).trim();
        if content.is_empty() {
            continue;
        }
        let (keyword, rest) = content
            .split_once(char::is_whitespace)
            .map_or((content, ""), |(k, r)| (k, r.trim()));
        match keyword {
            "space" => {
                if out.space.is_some() {
                    return Err(at(line, "duplicate `space` line"));
                }
                if rest.is_empty() {
                    return Err(at(line, "`space` needs a name"));
                }
                out.space = Some((line, rest));
            }
            "dimc" => {
                if out.dimc.is_some() {
                    return Err(at(line, "duplicate `dimc` line"));
                }
                let d = rest
                    .parse::<u32>()
                    .map_err(|_| at(line, format!("malformed complex dimension `{rest}`")))?;
                out.dimc = Some((line, d));
            }
            "gen" => {
                let parts: Vec<&str> = rest.split_whitespace().collect();
                let [name, degree] = parts[..] else {
                    return Err(at(line, "expected `gen NAME DEGREE`"));
                };
                let degree = degree
                    .parse::<u32>()
                    .map_err(|_| at(line, format!("malformed degree `{degree}`")))?;
                if degree == 0 || degree % 2 == 1 {
                    return Err(at(
                        line,
                        format!("generator `{name}` has degree {degree}: even degrees only"),
                    ));
                }
                if !name.chars().all(|c| c.is_alphanumeric() || c == '_')
                    || name == "1"
                    || name == "0"
                {
                    return Err(at(line, format!("invalid generator name `{name}`")));
                }
                out.gens.push((line, name, degree));
            }
            "rel" => out.rels.push((line, rest)),
            "sq2" => {
                let (name, poly) = split_assignment(line, rest)?;
                out.sq2.push((line, name, poly));
            }
            "twist" => {
                let (name, poly) = split_assignment(line, rest)?;
                out.twists.push((line, name, poly));
            }
            other => return Err(at(line, format!("unknown keyword `{other}`"))),
        }
    }
    Ok(out)
}

/// Parses `term + term + ...`, each term a `*`-product of `name` or
/// `name^exp`; `1` is the empty product and `0` the zero polynomial.
pub fn parse_polynomial(text: &str, names: &[&str]) -> Result<Polynomial, String> {
    let n = names.len();
    let text = text.trim();
    if text == "0" {
        return Ok(Polynomial::zero());
    }
    let mut poly = Polynomial::zero();
    for term in text.split('+') {
        let term = term.trim();
        if term.is_empty() {
            return Err(String::from("empty term"));
        }
        let mut exps = vec![0u32; n];
        if term != "1" {
            for factor in term.split('*') {
                let factor = factor.trim();
                let (name, exp) = match factor.split_once('^') {
                    Some((b, e)) => {
                        let e = e
                            .trim()
                            .parse::<u32>()
                            .map_err(|_| format!("malformed exponent in `{factor}`"))?;
                        (b.trim(), e)
                    }
                    None => (factor, 1),
                };
                let g = names
                    .iter()
                    .position(|&x| x == name)
                    .ok_or_else(|| format!("unknown generator `{name}`"))?;
                exps[g] += exp;
            }
        }
        poly.add_term(Monomial::new(exps));
    }
    Ok(poly)
}

/// Reads a presentation file into a validated space. Degeneration is
/// recorded as conditional.
pub fn parse_presentation_file(text: &str) -> Result<SpaceData, PresFileError> {
    let lines = scan(text)?;
    let (_, name) = lines.space.ok_or(PresFileError {
        line: None,
        message: String::from("missing `space` line"),
    })?;
    let (_, dimc) = lines.dimc.ok_or(PresFileError {
        line: None,
        message: String::from("missing `dimc` line"),
    })?;

    let names: Vec<&str> = lines.gens.iter().map(|g| g.1).collect();
    let mut seen = BTreeMap::new();
    for &(line, name, _) in &lines.gens {
        if seen.insert(name, line).is_some() {
            return Err(at(line, format!("duplicate generator `{name}`")));
        }
    }
    let poly = |line: usize, text: &str| parse_polynomial(text, &names).map_err(|m| at(line, m));

    let relations = lines
        .rels
        .iter()
        .map(|&(line, text)| poly(line, text))
        .collect::<Result<Vec<_>, _>>()?;

    let mut sq2: Vec<Option<(usize, Polynomial)>> = vec![None; names.len()];
    for &(line, name, text) in &lines.sq2 {
        let g = names
            .iter()
            .position(|&x| x == name)
            .ok_or_else(|| at(line, format!("sq2 of unknown generator `{name}`")))?;
        if sq2[g].is_some() {
            return Err(at(line, format!("second sq2 line for `{name}`")));
        }
        sq2[g] = Some((line, poly(line, text)?));
    }
    let mut sq2_lines = Vec::with_capacity(names.len());
    let mut sq2_values = Vec::with_capacity(names.len());
    for (g, entry) in sq2.into_iter().enumerate() {
        let (line, value) = entry.ok_or_else(|| {
            at(
                lines.gens[g].0,
                format!("no sq2 line for generator `{}`", names[g]),
            )
        })?;
        sq2_lines.push(line);
        sq2_values.push(value);
    }

    let twists = lines
        .twists
        .iter()
        .map(|&(line, name, text)| Ok((name.to_string(), poly(line, text)?)))
        .collect::<Result<Vec<_>, PresFileError>>()?;

    let generators = lines
        .gens
        .iter()
        .map(|&(_, name, degree)| Generator::new(name, degree))
        .collect();
    SpaceData::new(
        name,
        SpaceId::Custom(name.to_string()),
        generators,
        relations,
        sq2_values,
        twists,
        dimc,
        Degeneration::Conditional,
    )
    .map_err(|e| {
        let line = match &e {
            CoreError::GeneratorDegree { name, .. } | CoreError::DuplicateGenerator(name) => {
                seen.get(name.as_str()).copied()
            }
            CoreError::InhomogeneousRelation { index }
            | CoreError::ConstantRelation { index }
            | CoreError::RelationDegree { index, .. } => Some(lines.rels[*index].0),
            CoreError::RelationNotStable { relation } => Some(lines.rels[*relation].0),
            CoreError::Sq2Degree { generator, .. }
            | CoreError::Sq2Inhomogeneous { generator }
            | CoreError::UnstableAxiom { generator } => Some(sq2_lines[*generator]),
            CoreError::DuplicateTwist(name) => {
                lines.twists.iter().rev().find(|t| t.1 == name).map(|t| t.0)
            }
            CoreError::OddTopDegree(_) | CoreError::NotTruncated { .. } => lines.dimc.map(|d| d.0),
            _ => None,
        };
        PresFileError {
            line,
            message: e.to_string(),
        }
    })
}

/// Writes the canonical form of a space: fixed line order, single spaces,
/// polynomials with terms in decreasing lexicographic order.
pub fn write_presentation_file(space: &SpaceData) -> String {
    let p = space.presentation();
    let names = p.generator_names();
    let mut out = String::new();
    let _ = writeln!(out, "space {}", space.name());
    let _ = writeln!(out, "dimc {}", space.complex_dimension());
    for g in p.generators() {
        let _ = writeln!(out, "gen {} {}", g.name, g.degree);
    }
    for r in p.relations() {
        let _ = writeln!(out, "rel {}", r.to_text(&names));
    }
    for (g, v) in space.sq2_values().iter().enumerate() {
        let _ = writeln!(out, "sq2 {} = {}", names[g], v.to_text(&names));
    }
    for t in space.twists() {
        let _ = writeln!(out, "twist {} = {}", t.name, t.polynomial.to_text(&names));
    }
    out
}
