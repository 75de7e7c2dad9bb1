//! Sq² as a derivation of a presented algebra, and the twisted differentials
//! `Sq² + c` for degree-2 classes `c`.
//!
//! On algebras concentrated in even degrees Sq¹ vanishes, so the Cartan
//! formula reduces to the Leibniz rule and Sq² is determined by its values on
//! the generators.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::f2linalg::{F2Matrix, F2Vector};
use crate::graded_algebra::{Element, Presentation};
use crate::polynomial::{Monomial, Polynomial};

/// The action of Sq² on a presented algebra.
#[derive(Clone, Debug)]
pub struct SqAction {
    values: Vec<Element>,
    // matrices[d / 2]: degree d -> degree d + 2
    matrices: Vec<F2Matrix>,
}

impl SqAction {
    /// Builds Sq² from its values on the generators, in declaration order.
    ///
    /// Rejects data that breaks the unstable axiom `Sq²(g) = g²` on degree-2
    /// generators, does not preserve the relation ideal, or does not square
    /// to zero.
    pub fn new(p: &Presentation, values: &[Polynomial]) -> Result<Self> {
        if values.len() != p.num_generators() {
            return Err(Error::Sq2Count {
                expected: p.num_generators(),
                found: values.len(),
            });
        }
        let mut elems = Vec::with_capacity(values.len());
        for (g, v) in values.iter().enumerate() {
            let expected = p.weights()[g] + 2;
            let e = p.normal_form_in(v, expected).map_err(|e| match e {
                Error::DegreeMismatch { expected, found } => Error::Sq2Degree {
                    generator: g,
                    expected,
                    found,
                },
                Error::Inhomogeneous => Error::Sq2Inhomogeneous { generator: g },
                other => other,
            })?;
            if p.weights()[g] == 2 {
                let gen = p.generator(g);
                if e != p.multiply(&gen, &gen) {
                    return Err(Error::UnstableAxiom { generator: g });
                }
            }
            elems.push(e);
        }

        let mut action = SqAction {
            values: elems,
            matrices: Vec::new(),
        };
        for (relation, r) in p.relations().iter().enumerate() {
            if r.is_zero() {
                continue;
            }
            if !action.sq2_polynomial(p, r)?.is_zero() {
                return Err(Error::RelationNotStable { relation });
            }
        }
        action.matrices = (0..=p.top_degree())
            .step_by(2)
            .map(|d| {
                let cols: Vec<F2Vector> = p
                    .basis_of_degree(d)
                    .iter()
                    .map(|m| action.sq2_monomial(p, m).coords().clone())
                    .collect();
                F2Matrix::from_columns(p.dim(d + 2), &cols)
            })
            .collect();
        Differential::untwisted(p, &action)
            .verify_d_squared_zero()
            .map_err(Error::DSquared)?;
        Ok(action)
    }

    /// Sq² of generator `g`.
    pub fn value(&self, g: usize) -> &Element {
        &self.values[g]
    }

    /// Leibniz extension to a monomial: `Σ e_i · (m / g_i) · Sq²(g_i)`.
    fn sq2_monomial(&self, p: &Presentation, m: &Monomial) -> Element {
        let degree = m.weighted_degree(p.weights()) + 2;
        let mut out = p.zero(degree);
        for (g, &e) in m.exponents().iter().enumerate() {
            if e % 2 == 1 {
                let rest = m.div_var(g).expect("odd exponent is positive");
                let rest = p.monomial_nf(&rest).expect("arity matches");
                out += &p.multiply(&rest, &self.values[g]);
            }
        }
        out
    }

    /// Sq² of a homogeneous polynomial, applied term by term before reducing.
    pub fn sq2_polynomial(&self, p: &Presentation, poly: &Polynomial) -> Result<Element> {
        let degree = poly
            .degree(p.weights())?
            .ok_or(Error::ZeroPolynomialDegree)?;
        let mut out = p.zero(degree + 2);
        for t in poly.terms() {
            out += &self.sq2_monomial(p, t);
        }
        Ok(out)
    }

    pub fn sq2(&self, p: &Presentation, u: &Element) -> Element {
        Element::new(
            u.degree() + 2,
            self.matrix(p, u.degree()).mul_vec(u.coords()),
        )
    }

    /// The matrix of Sq² from degree `d` to `d + 2`.
    pub fn matrix(&self, p: &Presentation, d: u32) -> F2Matrix {
        match self.matrices.get(d as usize / 2) {
            Some(m) if d.is_multiple_of(2) => m.clone(),
            _ => F2Matrix::zeros(p.dim(d + 2), p.dim(d)),
        }
    }
}

/// Where `d' ∘ d'` first fails to vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DSquaredFailure {
    pub degree: u32,
    pub basis_index: usize,
}

impl fmt::Display for DSquaredFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "the differential does not square to zero on basis element {} of degree {}",
            self.basis_index, self.degree
        )
    }
}

/// The differential `d'(y) = Sq²(y) + c·y` for a degree-2 class `c`.
#[derive(Clone, Debug)]
pub struct Differential {
    twist: Element,
    top_degree: u32,
    // matrices[d / 2]: degree d -> degree d + 2
    matrices: Vec<F2Matrix>,
}

impl Differential {
    pub fn untwisted(p: &Presentation, action: &SqAction) -> Self {
        Self::build(p, action, p.zero(2))
    }

    /// `Sq² + twist`; the twist must have degree 2.
    pub fn new(p: &Presentation, action: &SqAction, twist: Element) -> Result<Self> {
        if twist.degree() != 2 {
            return Err(Error::TwistDegree(twist.degree()));
        }
        let d = Self::build(p, action, twist);
        d.verify_d_squared_zero().map_err(Error::DSquared)?;
        Ok(d)
    }

    fn build(p: &Presentation, action: &SqAction, twist: Element) -> Self {
        let matrices = (0..=p.top_degree())
            .step_by(2)
            .map(|d| {
                let mut m = action.matrix(p, d);
                if !twist.is_zero() {
                    let c = p.multiplication_matrix(&twist, d);
                    for i in 0..m.rows() {
                        for j in 0..m.cols() {
                            if c.get(i, j) {
                                m.set(i, j, !m.get(i, j));
                            }
                        }
                    }
                }
                m
            })
            .collect();
        Differential {
            twist,
            top_degree: p.top_degree(),
            matrices,
        }
    }

    pub fn twist(&self) -> &Element {
        &self.twist
    }

    pub fn top_degree(&self) -> u32 {
        self.top_degree
    }

    /// The matrix from degree `d` to `d + 2`, columns indexed by the source
    /// basis. Outside `0..=top` this is an empty matrix.
    pub fn matrix(&self, d: u32) -> &F2Matrix {
        static EMPTY: F2Matrix = F2Matrix::EMPTY;
        if d % 2 == 1 {
            return &EMPTY;
        }
        self.matrices.get(d as usize / 2).unwrap_or(&EMPTY)
    }

    pub fn apply(&self, u: &Element) -> Element {
        let m = self.matrix(u.degree());
        if m.cols() != u.coords().len() {
            return Element::new(u.degree() + 2, F2Vector::zeros(m.rows()));
        }
        Element::new(u.degree() + 2, m.mul_vec(u.coords()))
    }

    /// Composes consecutive matrices and reports the first basis element on
    /// which `d' ∘ d'` is nonzero.
    pub fn verify_d_squared_zero(&self) -> core::result::Result<(), DSquaredFailure> {
        for d in (0..=self.top_degree).step_by(2) {
            let first = self.matrix(d);
            let second = self.matrix(d + 2);
            if first.rows() == 0 || second.rows() == 0 {
                continue;
            }
            let composite = second.mul(first);
            if let Some(j) = (0..composite.cols()).find(|&j| !composite.column(j).is_zero()) {
                return Err(DSquaredFailure {
                    degree: d,
                    basis_index: j,
                });
            }
        }
        Ok(())
    }
}

/// Wu's formula for Sq² on Chern classes, reduced mod 2:
/// `Sq²(c_i) = c_1·c_i + (i - 1)·c_{i+1}`, where `c_{k+1} = 0` past the last
/// class. `classes[j]` is the generator index of `c_{j+1}`.
pub fn wu_chern_sq2(classes: &[usize], nvars: usize, i: usize) -> Polynomial {
    assert!(
        i >= 1 && i <= classes.len(),
        "Chern class index {i} out of range"
    );
    let c = |j: usize| Polynomial::var(nvars, classes[j - 1]);
    let mut out = &c(1) * &c(i);
    if i.is_multiple_of(2) && i < classes.len() {
        out += &c(i + 1);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded_algebra::Generator;

    fn cp(n: u32) -> (Presentation, SqAction) {
        let x = Polynomial::var(1, 0);
        let p = Presentation::new(vec![Generator::new("x", 2)], vec![x.pow(n + 1)], 2 * n).unwrap();
        let a = SqAction::new(&p, &[x.pow(2)]).unwrap();
        (p, a)
    }

    #[test]
    fn sq2_on_powers_of_x() {
        let (p, a) = cp(4);
        let x = Polynomial::var(1, 0);
        let x2 = p.normal_form(&x.pow(2)).unwrap();
        let x3 = p.normal_form(&x.pow(3)).unwrap();
        assert!(a.sq2(&p, &x2).is_zero());
        assert_eq!(a.sq2(&p, &x3), p.normal_form(&x.pow(4)).unwrap());
    }

    #[test]
    fn twisted_degree_two_matrix_vanishes_on_cp2() {
        let (p, a) = cp(2);
        let d = Differential::new(&p, &a, p.generator(0)).unwrap();
        assert!(d.matrix(2).is_zero());
        assert_eq!(d.matrix(2).rows(), 1);
        // 1 ↦ x
        assert_eq!(d.matrix(0).rank(), 1);
    }

    #[test]
    fn zero_twist_is_plain_sq2() {
        let (p, a) = cp(3);
        let d = Differential::new(&p, &a, p.zero(2)).unwrap();
        for deg in (0..=6).step_by(2) {
            assert_eq!(*d.matrix(deg), a.matrix(&p, deg));
        }
    }

    #[test]
    fn rejects_unstable_axiom_violation() {
        let x = Polynomial::var(1, 0);
        let p = Presentation::new(vec![Generator::new("x", 2)], vec![x.pow(3)], 4).unwrap();
        let err = SqAction::new(&p, &[Polynomial::zero()]).unwrap_err();
        assert_eq!(err, Error::UnstableAxiom { generator: 0 });
    }

    #[test]
    fn rejects_twist_of_wrong_degree() {
        let (p, a) = cp(3);
        let x2 = p.normal_form(&Polynomial::var(1, 0).pow(2)).unwrap();
        assert_eq!(
            Differential::new(&p, &a, x2).unwrap_err(),
            Error::TwistDegree(4)
        );
    }

    #[test]
    fn rejects_wrong_value_degree() {
        let x = Polynomial::var(1, 0);
        let p = Presentation::new(vec![Generator::new("x", 2)], vec![x.pow(4)], 6).unwrap();
        assert!(matches!(
            SqAction::new(&p, &[x.pow(3)]),
            Err(Error::Sq2Degree {
                generator: 0,
                expected: 4,
                found: 6
            })
        ));
    }

    #[test]
    fn rejects_nonzero_square() {
        // y, z, w in degrees 4, 6, 8 with Sq²y = z, Sq²z = w
        let gens = vec![
            Generator::new("y", 4),
            Generator::new("z", 6),
            Generator::new("w", 8),
        ];
        let v = |i| Polynomial::var(3, i);
        let rels = vec![
            v(0).pow(2) + v(2),
            &v(0) * &v(1),
            v(1).pow(2),
            &v(0) * &v(2),
            &v(1) * &v(2),
            v(2).pow(2),
        ];
        let p = Presentation::new(gens, rels, 8).unwrap();
        let err = SqAction::new(&p, &[v(1), v(2), Polynomial::zero()]).unwrap_err();
        assert_eq!(
            err,
            Error::DSquared(DSquaredFailure {
                degree: 4,
                basis_index: 0
            })
        );
    }

    #[test]
    fn rejects_action_not_preserving_ideal() {
        // y = x^2 in the quotient, so Sq²y must be Sq²(x^2) = 0
        let x = Polynomial::var(2, 0);
        let y = Polynomial::var(2, 1);
        let p = Presentation::new(
            vec![Generator::new("x", 2), Generator::new("y", 4)],
            vec![&y + &x.pow(2), x.pow(4)],
            6,
        )
        .unwrap();
        assert_eq!(
            SqAction::new(&p, &[x.pow(2), x.pow(3)]).unwrap_err(),
            Error::RelationNotStable { relation: 0 }
        );
        assert!(SqAction::new(&p, &[x.pow(2), Polynomial::zero()]).is_ok());
    }

    #[test]
    fn wu_formula_shapes() {
        // three classes c1, c2, c3 as generators 0, 1, 2
        let classes = [0, 1, 2];
        let c = |i: usize| Polynomial::var(3, i);
        assert_eq!(wu_chern_sq2(&classes, 3, 1), c(0).pow(2));
        assert_eq!(wu_chern_sq2(&classes, 3, 2), &c(0) * &c(1) + c(2));
        assert_eq!(wu_chern_sq2(&classes, 3, 3), &c(0) * &c(2));
    }
}
