//! Front end for the KO-table calculator: space specifications, presentation
//! files, batch expansion and output formats.

pub mod emit;
pub mod presfile;
pub mod spec;

use std::fs;

use anyhow::{bail, Context};
use kocalc_core::catalog::{self, SpaceId, TRIVIAL_TWIST};
use kocalc_core::{expected_table, ko_table, KoTable, SpaceData};

use crate::emit::Row;
use crate::spec::Family;

/// Which twists to tabulate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TwistSelector {
    Trivial,
    Named(String),
    All,
}

impl TwistSelector {
    /// `all` selects every declared twist; anything else is a twist name.
    pub fn parse(name: Option<&str>) -> Self {
        match name {
            None => TwistSelector::Trivial,
            Some("all") => TwistSelector::All,
            Some(n) => TwistSelector::Named(n.to_string()),
        }
    }
}

pub fn load_space(family: &Family) -> anyhow::Result<SpaceData> {
    match family {
        Family::Catalog(id) => Ok(catalog::space(id)?),
        Family::File(path) => {
            let text =
                fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            presfile::parse_presentation_file(&text)
                .with_context(|| format!("in {}", path.display()))
        }
    }
}

/// The label used in output rows: the catalog spelling, or the file's name.
pub fn space_label(space: &SpaceData) -> String {
    space.id().to_string()
}

pub fn tables(space: &SpaceData, twists: &TwistSelector) -> anyhow::Result<Vec<Row>> {
    let names: Vec<Option<&str>> = match twists {
        TwistSelector::Trivial => vec![None],
        TwistSelector::Named(n) => vec![Some(n.as_str())],
        TwistSelector::All => space.twist_labels().into_iter().map(Some).collect(),
    };
    names
        .into_iter()
        .map(|t| {
            Ok(Row {
                space: space_label(space),
                table: ko_table(space, t)?,
            })
        })
        .collect()
}

/// Cell-by-cell differences from the closed form, empty when they agree.
pub fn check(space: &SpaceData, table: &KoTable) -> anyhow::Result<Vec<String>> {
    let expected = expected_table(space.id(), table.twist_label != TRIVIAL_TWIST)?;
    let mut out = Vec::new();
    let mut cell = |name: String, computed: usize, expected: usize| {
        if computed != expected {
            out.push(format!("{name}: computed {computed}, expected {expected}"));
        }
    };
    cell("t0".into(), table.t0, expected.t0);
    cell("t1".into(), table.t1, expected.t1);
    for i in 0..4 {
        cell(format!("s{i}"), table.s[i], expected.s[i]);
    }
    if table.twist_label != expected.twist_label {
        out.push(format!(
            "twist: computed {}, expected {}",
            table.twist_label, expected.twist_label
        ));
    }
    Ok(out)
}

/// Parses an inclusive range `a..b`.
pub fn parse_range(text: &str) -> anyhow::Result<(u32, u32)> {
    let (a, b) = text
        .split_once("..")
        .with_context(|| format!("range `{text}` is not of the form a..b"))?;
    let a: u32 = a
        .trim()
        .parse()
        .with_context(|| format!("malformed range start `{a}`"))?;
    let b: u32 = b
        .trim()
        .parse()
        .with_context(|| format!("malformed range end `{b}`"))?;
    if a > b {
        bail!("empty range `{text}`");
    }
    Ok((a, b))
}

/// Expands a family over `lo..=hi`, skipping parameters below the family's
/// minimum. For `gr` the range bounds `m + n`, with `1 <= m <= n`.
pub fn expand_range(family: &str, lo: u32, hi: u32) -> anyhow::Result<Vec<SpaceId>> {
    let one = |n: u32| -> Option<SpaceId> {
        match family {
            "cp" => Some(SpaceId::ProjectiveSpace(n)),
            "lg" => Some(SpaceId::SymplecticGrassmannian(n)),
            "quadric" => Some(SpaceId::Quadric(n)),
            "spinor" => Some(SpaceId::Spinor(n)),
            _ => None,
        }
    };
    if family == "gr" {
        let mut out = Vec::new();
        for total in lo.max(2)..=hi {
            for m in 1..=total / 2 {
                out.push(SpaceId::Grassmannian(m, total - m));
            }
        }
        return Ok(out);
    }
    if one(1).is_none() {
        bail!("`--range` needs one of the families cp, gr, lg, quadric, spinor; found `{family}`");
    }
    let min = spec::minimum(family).0;
    Ok((lo.max(min)..=hi).filter_map(one).collect())
}
