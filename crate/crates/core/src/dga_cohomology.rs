//! Cohomology of a presented algebra with respect to a (twisted) Sq²
//! differential.

use alloc::vec::Vec;

use crate::f2linalg::EchelonBasis;
use crate::graded_algebra::{Element, Presentation};
use crate::steenrod::Differential;

/// `dim H^d` for every even `d` from 0 to the top degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyDims {
    top_degree: u32,
    dims: Vec<usize>,
}

impl CohomologyDims {
    /// Zero for odd degrees and degrees above the top.
    pub fn get(&self, d: u32) -> usize {
        if d % 2 == 1 {
            return 0;
        }
        self.dims.get(d as usize / 2).copied().unwrap_or(0)
    }

    pub fn top_degree(&self) -> u32 {
        self.top_degree
    }

    pub fn total(&self) -> usize {
        self.dims.iter().sum()
    }

    /// `(degree, dimension)` pairs in increasing degree.
    pub fn iter(&self) -> impl Iterator<Item = (u32, usize)> + '_ {
        self.dims
            .iter()
            .enumerate()
            .map(|(i, &n)| (2 * i as u32, n))
    }
}

/// `dim H^d = dim A^d - rank d_d - rank d_{d-2}`.
pub fn cohomology_dims(p: &Presentation, d: &Differential) -> CohomologyDims {
    let ranks: Vec<usize> = (0..=p.top_degree())
        .step_by(2)
        .map(|deg| d.matrix(deg).rank())
        .collect();
    let dims = ranks
        .iter()
        .enumerate()
        .map(|(i, &out)| {
            let incoming = if i == 0 { 0 } else { ranks[i - 1] };
            p.dim(2 * i as u32) - out - incoming
        })
        .collect();
    CohomologyDims {
        top_degree: p.top_degree(),
        dims,
    }
}

/// Cocycles projecting to a basis of `H^degree`.
///
/// The kernel basis (reduced echelon form, so the first vector is the one
/// with the earliest leading monomial) is reduced modulo the image and the
/// representatives already chosen; each survivor is kept in its reduced form.
pub fn cohomology_representatives(p: &Presentation, d: &Differential, degree: u32) -> Vec<Element> {
    let dim = p.dim(degree);
    if dim == 0 {
        return Vec::new();
    }
    let mut span = EchelonBasis::new(dim);
    if degree >= 2 {
        let incoming = d.matrix(degree - 2);
        for j in 0..incoming.cols() {
            span.insert(&incoming.column(j));
        }
    }
    d.matrix(degree)
        .kernel_basis()
        .into_iter()
        .filter_map(|k| span.insert(&k))
        .map(|v| Element::new(degree, v))
        .collect()
}

/// Alternating sums agree: `Σ (-1)^{d/2} dim A^d = Σ (-1)^{d/2} dim H^d`.
pub fn euler_characteristic_matches(p: &Presentation, h: &CohomologyDims) -> bool {
    let sign = |d: u32, n: usize| {
        if (d / 2).is_multiple_of(2) {
            n as i64
        } else {
            -(n as i64)
        }
    };
    let chain: i64 = p.poincare_dims().into_iter().map(|(d, n)| sign(d, n)).sum();
    let homology: i64 = h.iter().map(|(d, n)| sign(d, n)).sum();
    chain == homology
}
