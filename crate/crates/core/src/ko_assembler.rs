//! KO-groups from Betti numbers (free part) and twisted Sq² cohomology
//! (2-torsion).

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::catalog::SpaceData;
use crate::dga_cohomology::{cohomology_dims, CohomologyDims};
use crate::error::Result;
use crate::graded_algebra::Presentation;

/// Whether the Atiyah-Hirzebruch spectral sequence is known to collapse at E₃.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Degeneration {
    Established { citation: String },
    Conditional,
}

impl Degeneration {
    pub fn established(citation: impl Into<String>) -> Self {
        Degeneration::Established {
            citation: citation.into(),
        }
    }

    pub fn citation(&self) -> &str {
        match self {
            Degeneration::Established { citation } => citation,
            Degeneration::Conditional => "conditional on E3-degeneration",
        }
    }
}

/// Free ranks `t0`, `t1` and 2-torsion exponents `s0..s3`:
///
/// | p | KO^p |
/// |---|------|
/// | 0 | Z^t0 ⊕ (Z/2)^s1 |
/// | 1 | (Z/2)^s1 |
/// | 2 | Z^t1 ⊕ (Z/2)^s2 |
/// | 3 | (Z/2)^s2 |
/// | 4 | Z^t0 ⊕ (Z/2)^s3 |
/// | 5 | (Z/2)^s3 |
/// | 6 | Z^t1 ⊕ (Z/2)^s0 |
/// | 7 | (Z/2)^s0 |
///
/// with `GW^q = KO^{2q}` and `W^q = KO^{2q-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoTable {
    pub t0: usize,
    pub t1: usize,
    pub s: [usize; 4],
    pub twist_label: String,
    pub degeneration: Degeneration,
}

impl KoTable {
    /// `true` unless degeneration is proved for this space.
    pub fn degeneration_assumed(&self) -> bool {
        matches!(self.degeneration, Degeneration::Conditional)
    }

    /// Equal ranks, exponents and twist label; provenance is ignored.
    pub fn same_groups(&self, other: &KoTable) -> bool {
        self.t0 == other.t0
            && self.t1 == other.t1
            && self.s == other.s
            && self.twist_label == other.twist_label
    }

    pub fn numbers(&self) -> (usize, usize, [usize; 4]) {
        (self.t0, self.t1, self.s)
    }

    /// `KO^p`, with `p` read mod 8.
    pub fn ko(&self, p: i64) -> Group {
        let p = p.rem_euclid(8) as usize;
        let q = p / 2;
        let torsion = self.s[(q + 1) % 4];
        if p % 2 == 1 {
            Group::torsion(torsion)
        } else {
            let free = if q.is_multiple_of(2) { self.t0 } else { self.t1 };
            Group { free, torsion }
        }
    }

    pub fn gw(&self, q: i64) -> Group {
        self.ko(2 * q)
    }

    pub fn w(&self, q: i64) -> Group {
        self.ko(2 * q - 1)
    }
}

/// `Z^free ⊕ (Z/2)^torsion`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Group {
    pub free: usize,
    pub torsion: usize,
}

impl Group {
    pub fn torsion(torsion: usize) -> Self {
        Group { free: 0, torsion }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let free = match self.free {
            0 => None,
            1 => Some(String::from("Z")),
            a => Some(format!("Z^{a}")),
        };
        let torsion = match self.torsion {
            0 => None,
            1 => Some(String::from("Z/2")),
            b => Some(format!("(Z/2)^{b}")),
        };
        match (free, torsion) {
            (None, None) => f.write_str("0"),
            (Some(a), None) => f.write_str(&a),
            (None, Some(b)) => f.write_str(&b),
            (Some(a), Some(b)) => write!(f, "{a} ⊕ {b}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Convention {
    /// `KO0` through `KO7`.
    Ko,
    /// `GW0..GW3` followed by `W0..W3`.
    GwW,
}

pub fn render(table: &KoTable, convention: Convention) -> Vec<(String, Group)> {
    match convention {
        Convention::Ko => (0..8).map(|p| (format!("KO{p}"), table.ko(p))).collect(),
        Convention::GwW => (0..4)
            .map(|q| (format!("GW{q}"), table.gw(q)))
            .chain((0..4).map(|q| (format!("W{q}"), table.w(q))))
            .collect(),
    }
}

/// Total Betti numbers in degrees `≡ 0` and `≡ 2 (mod 4)`.
pub fn betti_mod4_split(p: &Presentation) -> (usize, usize) {
    p.poincare_dims()
        .into_iter()
        .fold((0, 0), |(t0, t1), (d, n)| {
            if d % 4 == 0 {
                (t0 + n, t1)
            } else {
                (t0, t1 + n)
            }
        })
}

/// `s_j = Σ_k dim H^{2j + 8k}`.
pub fn torsion_exponents(h: &CohomologyDims) -> [usize; 4] {
    let mut s = [0; 4];
    for (d, n) in h.iter() {
        s[(d as usize % 8) / 2] += n;
    }
    s
}

/// The KO-table of `space` twisted by the named class (`None` for the
/// trivial twist).
pub fn ko_table(space: &SpaceData, twist: Option<&str>) -> Result<KoTable> {
    let (label, differential) = space.differential(twist)?;
    let (t0, t1) = betti_mod4_split(space.presentation());
    let h = cohomology_dims(space.presentation(), differential);
    Ok(KoTable {
        t0,
        t1,
        s: torsion_exponents(&h),
        twist_label: String::from(label),
        degeneration: space.degeneration().clone(),
    })
}
