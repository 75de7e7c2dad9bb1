//! Commutative polynomials over GF(2) in a fixed, ordered list of variables.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;
use core::ops::{Add, AddAssign, Mul};

use crate::error::{Error, Result};

/// A monomial as an exponent vector, one entry per generator.
///
/// The derived order is lexicographic on exponents, so the "largest" monomial
/// of a degree has the highest power of the first generator.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[i] = 1;
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u32 {
        self.0.iter().zip(weights).map(|(e, w)| e * w).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.nvars(), other.nvars());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self · var_i`
    pub fn times_var(&self, i: usize) -> Monomial {
        let mut m = self.clone();
        m.0[i] += 1;
        m
    }

    /// `self / var_i`, if `var_i` divides `self`.
    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        if self.0[i] == 0 {
            return None;
        }
        let mut m = self.clone();
        m.0[i] -= 1;
        Some(m)
    }

    /// Index of the first generator dividing this monomial.
    pub fn first_var(&self) -> Option<usize> {
        self.0.iter().position(|&e| e > 0)
    }

    /// Writes `a^2*b`, or `1` for the empty product.
    pub fn write_text<S: AsRef<str>>(&self, names: &[S], out: &mut String) {
        let mut first = true;
        for (e, name) in self.0.iter().zip(names) {
            if *e == 0 {
                continue;
            }
            if !first {
                out.push('*');
            }
            first = false;
            out.push_str(name.as_ref());
            if *e > 1 {
                let _ = write!(out, "^{e}");
            }
        }
        if first {
            out.push('1');
        }
    }
}

/// A polynomial over GF(2): a set of monomials, addition is symmetric difference.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: BTreeSet<Monomial>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one(nvars: usize) -> Self {
        Monomial::one(nvars).into()
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Monomial::var(nvars, i).into()
    }

    pub fn from_terms<I: IntoIterator<Item = Monomial>>(terms: I) -> Self {
        let mut p = Self::zero();
        for t in terms {
            p.add_term(t);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in decreasing lexicographic order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = &Monomial> + ExactSizeIterator {
        self.terms.iter().rev()
    }

    pub fn leading_term(&self) -> Option<&Monomial> {
        self.terms.last()
    }

    pub fn add_term(&mut self, m: Monomial) {
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let Some(nvars) = self.terms.first().map(Monomial::nvars) else {
            return if e == 0 {
                Polynomial::zero()
            } else {
                self.clone()
            };
        };
        let mut acc = Polynomial::one(nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// The common weighted degree of all terms, `None` for the zero polynomial.
    pub fn degree(&self, weights: &[u32]) -> Result<Option<u32>> {
        let mut deg = None;
        for t in &self.terms {
            if t.nvars() != weights.len() {
                return Err(Error::Arity {
                    expected: weights.len(),
                    found: t.nvars(),
                });
            }
            let d = t.weighted_degree(weights);
            match deg {
                None => deg = Some(d),
                Some(prev) if prev != d => return Err(Error::Inhomogeneous),
                _ => {}
            }
        }
        Ok(deg)
    }

    /// Writes the polynomial in the `a^2*b + c` grammar; `0` for zero.
    pub fn to_text<S: AsRef<str>>(&self, names: &[S]) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut out = String::new();
        for (i, t) in self.terms().enumerate() {
            if i > 0 {
                out.push_str(" + ");
            }
            t.write_text(names, &mut out);
        }
        out
    }
}

impl From<Monomial> for Polynomial {
    fn from(m: Monomial) -> Self {
        let mut p = Polynomial::zero();
        p.terms.insert(m);
        p
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for t in &rhs.terms {
            self.add_term(t.clone());
        }
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(mut self, rhs: Polynomial) -> Polynomial {
        self += &rhs;
        self
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for a in &self.terms {
            for b in &rhs.terms {
                out.add_term(a.mul(b));
            }
        }
        out
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

/// All monomials of weighted degree `d` in decreasing lexicographic order.
///
/// Empty for odd `d` when every weight is even.
pub fn monomials_of_degree(weights: &[u32], d: u32) -> Vec<Monomial> {
    fn go(weights: &[u32], i: usize, rest: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == weights.len() {
            if rest == 0 {
                out.push(Monomial(cur.clone()));
            }
            return;
        }
        let w = weights[i];
        let max = rest.checked_div(w).unwrap_or(0);
        for e in (0..=max).rev() {
            cur[i] = e;
            go(weights, i + 1, rest - e * w, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    let mut cur = vec![0; weights.len()];
    go(weights, 0, d, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_generator_cube() {
        assert_eq!(monomials_of_degree(&[2], 6), vec![Monomial::new(vec![3])]);
    }

    #[test]
    fn two_generators_degree_eight() {
        let ms = monomials_of_degree(&[2, 4], 8);
        let exps: Vec<_> = ms.iter().map(|m| m.exponents().to_vec()).collect();
        assert_eq!(exps, vec![vec![4, 0], vec![2, 1], vec![0, 2]]);
    }

    #[test]
    fn odd_degree_is_empty() {
        assert!(monomials_of_degree(&[2, 4, 6], 3).is_empty());
    }

    #[test]
    fn characteristic_two_arithmetic() {
        let x = Polynomial::var(2, 0);
        let y = Polynomial::var(2, 1);
        let s = &x + &y;
        // (x + y)^2 = x^2 + y^2
        assert_eq!(s.pow(2), x.pow(2) + y.pow(2));
        assert!((&s + &s).is_zero());
    }

    #[test]
    fn degree_checks() {
        let w = [2, 4];
        let x = Polynomial::var(2, 0);
        let y = Polynomial::var(2, 1);
        assert_eq!((x.pow(2) + y.clone()).degree(&w), Ok(Some(4)));
        assert_eq!((x.clone() + y).degree(&w), Err(Error::Inhomogeneous));
        assert_eq!(Polynomial::zero().degree(&w), Ok(None));
    }

    #[test]
    fn text_rendering() {
        let names = ["a", "b"];
        let p = Polynomial::from_terms([
            Monomial::new(vec![2, 1]),
            Monomial::new(vec![0, 0]),
            Monomial::new(vec![0, 1]),
        ]);
        assert_eq!(p.to_text(&names), "a^2*b + b + 1");
        assert_eq!(Polynomial::zero().to_text(&names), "0");
    }
}
