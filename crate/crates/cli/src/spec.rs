//! Space specifications such as `gr:2,3` or `cp:4 --twist O1`.

use std::path::PathBuf;

use kocalc_core::catalog::{Exceptional, SpaceId};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Catalog(SpaceId),
    File(PathBuf),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpaceSpec {
    pub family: Family,
    /// `None` selects the trivial twist.
    pub twist: Option<String>,
}

/// Positions are 1-based character columns into the specification text.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("empty space specification")]
    Empty,
    #[error("unknown family `{token}` at position {position}")]
    UnknownFamily { token: String, position: usize },
    #[error("malformed integer `{token}` at position {position}")]
    MalformedInteger { token: String, position: usize },
    #[error("`{token}` at position {position}: {family} requires {requirement}")]
    OutOfRange {
        token: String,
        position: usize,
        family: &'static str,
        requirement: &'static str,
    },
    #[error("`{token}` at position {position}: expected {expected}")]
    Arity {
        token: String,
        position: usize,
        expected: &'static str,
    },
    #[error("unexpected token `{token}` at position {position}")]
    Unexpected { token: String, position: usize },
    #[error("`--twist` at position {position} needs a name")]
    MissingTwist { position: usize },
}

/// Whitespace-separated tokens with their 1-based character columns.
fn tokens(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (col, (i, c)) in text.char_indices().enumerate() {
        match (c.is_whitespace(), start) {
            (true, Some((s, scol))) => {
                out.push((scol, &text[s..i]));
                start = None;
            }
            (false, None) => start = Some((i, col + 1)),
            _ => {}
        }
    }
    if let Some((s, scol)) = start {
        out.push((scol, &text[s..]));
    }
    out
}

pub fn parse_space_spec(text: &str) -> Result<SpaceSpec, SpecError> {
    let toks = tokens(text);
    let Some(&(pos, designator)) = toks.first() else {
        return Err(SpecError::Empty);
    };
    let family = parse_designator(designator, pos)?;
    let mut twist = None;
    let mut rest = toks[1..].iter();
    while let Some(&(p, tok)) = rest.next() {
        if let Some(name) = tok.strip_prefix("--twist=") {
            twist = Some(name.to_string());
        } else if tok == "--twist" {
            let &(_, name) = rest.next().ok_or(SpecError::MissingTwist { position: p })?;
            twist = Some(name.to_string());
        } else {
            return Err(SpecError::Unexpected {
                token: tok.to_string(),
                position: p,
            });
        }
    }
    Ok(SpaceSpec { family, twist })
}

fn parse_designator(token: &str, position: usize) -> Result<Family, SpecError> {
    let (name, params) = match token.split_once(':') {
        Some((n, p)) => (n, Some(p)),
        None => (token, None),
    };
    let param_pos = position + name.chars().count() + 1;
    let id = match name {
        "file" => {
            return match params {
                Some(path) if !path.is_empty() => Ok(Family::File(PathBuf::from(path))),
                _ => Err(SpecError::Arity {
                    token: token.to_string(),
                    position,
                    expected: "a path after `file:`",
                }),
            }
        }
        "point" | "eiii" | "evii" => {
            if let Some(p) = params {
                return Err(SpecError::Unexpected {
                    token: p.to_string(),
                    position: param_pos,
                });
            }
            match name {
                "point" => SpaceId::Point,
                "eiii" => SpaceId::Exceptional(Exceptional::EIII),
                _ => SpaceId::Exceptional(Exceptional::EVII),
            }
        }
        "cp" | "lg" | "quadric" | "spinor" => {
            let [n] = integers::<1>(params, param_pos, token, position)?;
            let (min, family, requirement) = minimum(name);
            if n.1 < min {
                return Err(out_of_range(n, family, requirement));
            }
            match name {
                "cp" => SpaceId::ProjectiveSpace(n.1),
                "lg" => SpaceId::SymplecticGrassmannian(n.1),
                "quadric" => SpaceId::Quadric(n.1),
                _ => SpaceId::Spinor(n.1),
            }
        }
        "gr" => {
            let [m, n] = integers::<2>(params, param_pos, token, position)?;
            for k in [&m, &n] {
                if k.1 < 1 {
                    return Err(out_of_range(k.clone(), "gr", "m >= 1 and n >= 1"));
                }
            }
            SpaceId::Grassmannian(m.1, n.1)
        }
        _ => {
            return Err(SpecError::UnknownFamily {
                token: name.to_string(),
                position,
            })
        }
    };
    Ok(Family::Catalog(id))
}

/// Smallest parameter, family name and requirement text for the
/// one-parameter families.
pub fn minimum(family: &str) -> (u32, &'static str, &'static str) {
    match family {
        "quadric" => (3, "quadric", "n >= 3"),
        "spinor" => (2, "spinor", "n >= 2"),
        "lg" => (1, "lg", "n >= 1"),
        _ => (1, "cp", "n >= 1"),
    }
}

type Located = (String, u32, usize);

fn out_of_range(n: Located, family: &'static str, requirement: &'static str) -> SpecError {
    SpecError::OutOfRange {
        token: n.0,
        position: n.2,
        family,
        requirement,
    }
}

fn integers<const N: usize>(
    params: Option<&str>,
    mut position: usize,
    token: &str,
    token_pos: usize,
) -> Result<[Located; N], SpecError> {
    let expected = if N == 1 {
        "one integer parameter"
    } else {
        "two integer parameters `m,n`"
    };
    let arity = || SpecError::Arity {
        token: token.to_string(),
        position: token_pos,
        expected,
    };
    let params = params.ok_or_else(arity)?;
    let parts: Vec<&str> = params.split(',').collect();
    if parts.len() != N {
        return Err(arity());
    }
    let mut out = Vec::with_capacity(N);
    for part in parts {
        let value = part
            .parse::<u32>()
            .map_err(|_| SpecError::MalformedInteger {
                token: part.to_string(),
                position,
            })?;
        out.push((part.to_string(), value, position));
        position += part.chars().count() + 1;
    }
    Ok(out.try_into().expect("length checked"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grassmannian() {
        let s = parse_space_spec("gr:2,3").unwrap();
        assert_eq!(s.family, Family::Catalog(SpaceId::Grassmannian(2, 3)));
        assert_eq!(s.twist, None);
    }

    #[test]
    fn quadric_two_is_rejected() {
        let err = parse_space_spec("quadric:2").unwrap_err();
        assert_eq!(
            err,
            SpecError::OutOfRange {
                token: "2".into(),
                position: 9,
                family: "quadric",
                requirement: "n >= 3"
            }
        );
        assert!(err.to_string().contains("n >= 3"));
    }

    #[test]
    fn twist_suffix() {
        let s = parse_space_spec("cp:4 --twist O1").unwrap();
        assert_eq!(s.family, Family::Catalog(SpaceId::ProjectiveSpace(4)));
        assert_eq!(s.twist.as_deref(), Some("O1"));
        assert_eq!(
            parse_space_spec("cp:4 --twist=O(1)")
                .unwrap()
                .twist
                .as_deref(),
            Some("O(1)")
        );
        assert_eq!(
            parse_space_spec("cp:4 --twist").unwrap_err(),
            SpecError::MissingTwist { position: 6 }
        );
    }

    #[test]
    fn diagnostics_name_token_and_position() {
        assert_eq!(
            parse_space_spec("  foo:3").unwrap_err(),
            SpecError::UnknownFamily {
                token: "foo".into(),
                position: 3
            }
        );
        assert_eq!(
            parse_space_spec("gr:2,x").unwrap_err(),
            SpecError::MalformedInteger {
                token: "x".into(),
                position: 6
            }
        );
        assert!(matches!(
            parse_space_spec("gr:2").unwrap_err(),
            SpecError::Arity { .. }
        ));
        assert!(matches!(
            parse_space_spec("eiii:1").unwrap_err(),
            SpecError::Unexpected { position: 6, .. }
        ));
        assert!(matches!(
            parse_space_spec("cp:1 extra").unwrap_err(),
            SpecError::Unexpected { position: 6, .. }
        ));
        assert_eq!(parse_space_spec("   ").unwrap_err(), SpecError::Empty);
    }

    #[test]
    fn every_family() {
        let cases = [
            ("point", SpaceId::Point),
            ("eiii", SpaceId::Exceptional(Exceptional::EIII)),
            ("evii", SpaceId::Exceptional(Exceptional::EVII)),
            ("lg:3", SpaceId::SymplecticGrassmannian(3)),
            ("spinor:2", SpaceId::Spinor(2)),
            ("quadric:7", SpaceId::Quadric(7)),
        ];
        for (text, id) in cases {
            assert_eq!(
                parse_space_spec(text).unwrap().family,
                Family::Catalog(id.clone())
            );
            // the catalog's own spelling parses back
            assert_eq!(
                parse_space_spec(&id.to_string()).unwrap().family,
                Family::Catalog(id)
            );
        }
        assert_eq!(
            parse_space_spec("file:spaces/x.pres").unwrap().family,
            Family::File("spaces/x.pres".into())
        );
        assert!(parse_space_spec("spinor:1").is_err());
        assert!(parse_space_spec("gr:0,3").is_err());
    }
}
