//! Finitely presented graded-commutative algebras over GF(2) with generators in
//! even degrees.
//!
//! Each degree of the quotient gets a canonical basis of *standard monomials*:
//! the monomials that are not the leading term (largest in lexicographic
//! order) of any element of the relation ideal in that degree. Every element is
//! stored as its coordinate vector in that basis.
//!
//! The basis of degree `d` is found by row reduction over the *candidate*
//! monomials `g·b`, where `g` is a generator and `b` a standard monomial of
//! degree `d - deg g`. Standard monomials are closed under division, so every
//! standard monomial of degree `d` is a candidate, and the rows needed are
//!
//! * `g·NF(h·n) + h·NF(g·n)` for generators `g < h` and standard `n`, which
//!   identify the different ways of reaching the same monomial, and
//! * each relation of degree `d`, with every term `t` rewritten as
//!   `g·NF(t/g)`.
//!
//! This spans the ideal slice restricted to the candidates and yields exactly
//! the non-pivot monomials of the full slice; [`Presentation::ideal_slice`]
//! exposes the full slice for cross-checking.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, AddAssign};

use crate::error::{Error, Result};
use crate::f2linalg::{F2Matrix, F2Vector};
use crate::polynomial::{monomials_of_degree, Monomial, Polynomial};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
}

impl Generator {
    pub fn new(name: impl Into<String>, degree: u32) -> Self {
        Generator {
            name: name.into(),
            degree,
        }
    }
}

/// A homogeneous element of a presented algebra, as coordinates in the
/// standard-monomial basis of its degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    degree: u32,
    coords: F2Vector,
}

impl Element {
    pub fn new(degree: u32, coords: F2Vector) -> Self {
        Element { degree, coords }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coords(&self) -> &F2Vector {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_zero()
    }
}

impl AddAssign<&Element> for Element {
    fn add_assign(&mut self, rhs: &Element) {
        assert_eq!(
            self.degree, rhs.degree,
            "adding elements of different degrees"
        );
        self.coords.xor_assign(&rhs.coords);
    }
}

impl Add<&Element> for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

#[derive(Clone, Debug, Default)]
struct Slice {
    basis: Vec<Monomial>,
    index: BTreeMap<Monomial, usize>,
}

impl Slice {
    fn new(basis: Vec<Monomial>) -> Self {
        let index = basis.iter().cloned().zip(0..).collect();
        Slice { basis, index }
    }
}

/// Generators, relations and a top degree, together with the reduced basis of
/// every degree up to the top.
#[derive(Clone, Debug)]
pub struct Presentation {
    generators: Vec<Generator>,
    weights: Vec<u32>,
    relations: Vec<Polynomial>,
    top_degree: u32,
    slices: Vec<Slice>,
    // gen_mul[g][d / 2][b] = NF(g · basis_d[b]), a vector in degree d + deg g
    gen_mul: Vec<Vec<Vec<F2Vector>>>,
}

impl Presentation {
    /// Validates the presentation and computes the quotient basis in every
    /// degree.
    ///
    /// Relations may have degree up to `top_degree` plus the largest generator
    /// degree; the quotient is required to vanish in every degree above
    /// `top_degree` (checked through that same bound, which suffices since
    /// each higher degree is spanned by generator multiples of lower ones).
    pub fn new(
        generators: Vec<Generator>,
        relations: Vec<Polynomial>,
        top_degree: u32,
    ) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for g in &generators {
            if g.degree == 0 || g.degree % 2 == 1 {
                return Err(Error::GeneratorDegree {
                    name: g.name.clone(),
                    degree: g.degree,
                });
            }
            if !seen.insert(g.name.as_str()) {
                return Err(Error::DuplicateGenerator(g.name.clone()));
            }
        }
        if top_degree % 2 == 1 {
            return Err(Error::OddTopDegree(top_degree));
        }
        let weights: Vec<u32> = generators.iter().map(|g| g.degree).collect();
        let bound = top_degree + weights.iter().copied().max().unwrap_or(0);

        let mut by_degree: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
        for (index, r) in relations.iter().enumerate() {
            let degree = match r.degree(&weights) {
                Ok(Some(d)) => d,
                Ok(None) => continue,
                Err(Error::Inhomogeneous) => return Err(Error::InhomogeneousRelation { index }),
                Err(e) => return Err(e),
            };
            if degree == 0 {
                return Err(Error::ConstantRelation { index });
            }
            if degree > bound {
                return Err(Error::RelationDegree {
                    index,
                    degree,
                    bound,
                });
            }
            by_degree.entry(degree).or_default().push(index);
        }

        let n = generators.len();
        let mut p = Presentation {
            generators,
            weights,
            relations,
            top_degree,
            slices: vec![Slice::new(vec![Monomial::one(n)])],
            gen_mul: vec![vec![Vec::new(); bound as usize / 2 + 1]; n],
        };
        for d in (2..=bound).step_by(2) {
            let rels = by_degree.get(&d).map_or(&[][..], |v| v.as_slice());
            p.extend_to(d, rels);
        }
        for d in (top_degree + 2..=bound).step_by(2) {
            if !p.slices[d as usize / 2].basis.is_empty() {
                return Err(Error::NotTruncated {
                    degree: d,
                    top: top_degree,
                });
            }
        }
        let keep = top_degree as usize / 2 + 1;
        p.slices.truncate(keep);
        for table in &mut p.gen_mul {
            table.truncate(keep);
        }
        Ok(p)
    }

    /// Computes the basis of degree `d` from the lower degrees.
    fn extend_to(&mut self, d: u32, relation_indices: &[usize]) {
        let n = self.generators.len();
        let w = self.weights.clone();

        let mut candidates = BTreeSet::new();
        for (g, &wg) in w.iter().enumerate().take(n) {
            if wg <= d {
                for b in &self.slice(d - wg).basis {
                    candidates.insert(b.times_var(g));
                }
            }
        }
        let cols: Vec<Monomial> = candidates.into_iter().rev().collect();
        let col_index: BTreeMap<&Monomial, usize> = cols.iter().zip(0..).collect();

        // g · (vector in degree src), as a vector over the candidates
        let lift = |p: &Self, g: usize, src: u32, v: &F2Vector, row: &mut F2Vector| {
            let basis = &p.slice(src).basis;
            for b in v.iter_ones() {
                row.flip(col_index[&basis[b].times_var(g)]);
            }
        };

        let mut rows = Vec::new();
        for g in 0..n {
            for h in g + 1..n {
                if w[g] + w[h] > d {
                    continue;
                }
                let src = d - w[g] - w[h];
                for ni in 0..self.slice(src).basis.len() {
                    let mut row = F2Vector::zeros(cols.len());
                    lift(
                        self,
                        g,
                        src + w[h],
                        &self.gen_mul[h][src as usize / 2][ni],
                        &mut row,
                    );
                    lift(
                        self,
                        h,
                        src + w[g],
                        &self.gen_mul[g][src as usize / 2][ni],
                        &mut row,
                    );
                    if !row.is_zero() {
                        rows.push(row);
                    }
                }
            }
        }
        for &ri in relation_indices {
            let mut row = F2Vector::zeros(cols.len());
            for t in self.relations[ri].terms() {
                let g = t.first_var().expect("constant relations are rejected");
                let rest = t.div_var(g).expect("g divides t");
                let nf = self.monomial_coords(&rest);
                lift(self, g, d - w[g], &nf, &mut row);
            }
            if !row.is_zero() {
                rows.push(row);
            }
        }

        let (rref, pivots) = F2Matrix::from_rows(cols.len(), &rows).row_echelon();
        let mut pivot_row = vec![None; cols.len()];
        for (r, &c) in pivots.iter().enumerate() {
            pivot_row[c] = Some(r);
        }
        let mut basis_pos = vec![usize::MAX; cols.len()];
        let mut basis = Vec::new();
        for (c, m) in cols.iter().enumerate() {
            if pivot_row[c].is_none() {
                basis_pos[c] = basis.len();
                basis.push(m.clone());
            }
        }
        let dim = basis.len();
        let nf_of_col: Vec<F2Vector> = (0..cols.len())
            .map(|c| match pivot_row[c] {
                None => F2Vector::unit(dim, basis_pos[c]),
                Some(r) => F2Vector::from_ones(
                    dim,
                    (c + 1..cols.len())
                        .filter(|&j| pivot_row[j].is_none() && rref.get(r, j))
                        .map(|j| basis_pos[j]),
                ),
            })
            .collect();

        for g in 0..n {
            if w[g] <= d {
                let src = d - w[g];
                let table: Vec<F2Vector> = self
                    .slice(src)
                    .basis
                    .iter()
                    .map(|b| nf_of_col[col_index[&b.times_var(g)]].clone())
                    .collect();
                self.gen_mul[g][src as usize / 2] = table;
            }
        }
        self.slices.push(Slice::new(basis));
    }

    fn slice(&self, d: u32) -> &Slice {
        &self.slices[d as usize / 2]
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn generator_names(&self) -> Vec<&str> {
        self.generators.iter().map(|g| g.name.as_str()).collect()
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    /// Generator degrees, in declaration order.
    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }

    pub fn top_degree(&self) -> u32 {
        self.top_degree
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    /// Dimension of the degree-`d` part; zero for odd `d` or above the top.
    pub fn dim(&self, d: u32) -> usize {
        if d % 2 == 1 || d > self.top_degree {
            0
        } else {
            self.slice(d).basis.len()
        }
    }

    /// The standard monomials of degree `d`, in decreasing lexicographic order.
    pub fn basis_of_degree(&self, d: u32) -> &[Monomial] {
        if d % 2 == 1 || d > self.top_degree {
            &[]
        } else {
            &self.slice(d).basis
        }
    }

    /// Position of `m` in the basis of its degree, if it is a standard monomial.
    pub fn basis_index(&self, m: &Monomial) -> Option<usize> {
        let d = m.weighted_degree(&self.weights);
        if m.nvars() != self.generators.len() || d > self.top_degree {
            return None;
        }
        self.slice(d).index.get(m).copied()
    }

    /// `(degree, dimension)` for every even degree from 0 to the top.
    pub fn poincare_dims(&self) -> Vec<(u32, usize)> {
        (0..=self.top_degree)
            .step_by(2)
            .map(|d| (d, self.dim(d)))
            .collect()
    }

    pub fn total_dim(&self) -> usize {
        self.slices.iter().map(|s| s.basis.len()).sum()
    }

    pub fn zero(&self, d: u32) -> Element {
        Element::new(d, F2Vector::zeros(self.dim(d)))
    }

    pub fn one(&self) -> Element {
        Element::new(0, F2Vector::unit(1, 0))
    }

    /// The `i`-th standard monomial of degree `d` as an element.
    pub fn basis_element(&self, d: u32, i: usize) -> Element {
        Element::new(d, F2Vector::unit(self.dim(d), i))
    }

    pub fn generator(&self, g: usize) -> Element {
        self.gen_times(g, &self.one())
    }

    /// `generator_g · u`
    pub fn gen_times(&self, g: usize, u: &Element) -> Element {
        let target = u.degree + self.weights[g];
        Element::new(target, self.gen_times_coords(g, u.degree, &u.coords))
    }

    fn gen_times_coords(&self, g: usize, src: u32, v: &F2Vector) -> F2Vector {
        let target = src + self.weights[g];
        let dim = if (target as usize / 2) < self.slices.len() {
            self.slice(target).basis.len()
        } else {
            0
        };
        let mut out = F2Vector::zeros(dim);
        if dim == 0 {
            return out;
        }
        let table = &self.gen_mul[g][src as usize / 2];
        for b in v.iter_ones() {
            out.xor_assign(&table[b]);
        }
        out
    }

    fn monomial_coords(&self, m: &Monomial) -> F2Vector {
        let mut v = F2Vector::unit(1, 0);
        let mut deg = 0;
        for (g, &e) in m.exponents().iter().enumerate() {
            for _ in 0..e {
                v = self.gen_times_coords(g, deg, &v);
                deg += self.weights[g];
            }
        }
        v
    }

    pub fn monomial_nf(&self, m: &Monomial) -> Result<Element> {
        self.check_arity(m)?;
        let deg = m.weighted_degree(&self.weights);
        Ok(Element::new(deg, self.monomial_coords(m)))
    }

    fn check_arity(&self, m: &Monomial) -> Result<()> {
        if m.nvars() != self.generators.len() {
            return Err(Error::Arity {
                expected: self.generators.len(),
                found: m.nvars(),
            });
        }
        Ok(())
    }

    /// The class of a nonzero homogeneous polynomial.
    pub fn normal_form(&self, poly: &Polynomial) -> Result<Element> {
        match poly.degree(&self.weights)? {
            Some(d) => self.normal_form_in(poly, d),
            None => Err(Error::ZeroPolynomialDegree),
        }
    }

    /// The class of a homogeneous polynomial of degree `d` (or zero).
    pub fn normal_form_in(&self, poly: &Polynomial, d: u32) -> Result<Element> {
        if let Some(found) = poly.degree(&self.weights)? {
            if found != d {
                return Err(Error::DegreeMismatch { expected: d, found });
            }
        }
        let mut out = self.zero(d);
        for t in poly.terms() {
            out.coords.xor_assign(&self.monomial_coords(t));
        }
        Ok(out)
    }

    /// Product in the quotient; zero in degrees above the top.
    pub fn multiply(&self, u: &Element, v: &Element) -> Element {
        let degree = u.degree + v.degree;
        let mut out = self.zero(degree);
        if out.coords.is_empty() {
            return out;
        }
        let basis = self.basis_of_degree(u.degree);
        for b in u.coords.iter_ones() {
            let mut acc = v.coords.clone();
            let mut deg = v.degree;
            for (g, &e) in basis[b].exponents().iter().enumerate() {
                for _ in 0..e {
                    acc = self.gen_times_coords(g, deg, &acc);
                    deg += self.weights[g];
                }
            }
            out.coords.xor_assign(&acc);
        }
        out
    }

    /// The matrix of `y ↦ c·y` from degree `d` to degree `d + deg c`,
    /// columns indexed by the source basis.
    pub fn multiplication_matrix(&self, c: &Element, d: u32) -> F2Matrix {
        let target = d + c.degree;
        let cols: Vec<F2Vector> = (0..self.dim(d))
            .map(|i| self.multiply(c, &self.basis_element(d, i)).coords)
            .collect();
        F2Matrix::from_columns(self.dim(target), &cols)
    }

    /// The standard-monomial representative of an element.
    pub fn representative(&self, u: &Element) -> Polynomial {
        let basis = self.basis_of_degree(u.degree);
        Polynomial::from_terms(u.coords.iter_ones().map(|i| basis[i].clone()))
    }

    pub fn format_element(&self, u: &Element) -> String {
        self.representative(u).to_text(&self.generator_names())
    }

    /// The full degree-`d` slice of the relation ideal: all monomials of
    /// degree `d` (decreasing lexicographic order) and one row per product
    /// `monomial × relation` of total degree `d`.
    pub fn ideal_slice(&self, d: u32) -> (Vec<Monomial>, F2Matrix) {
        let cols = monomials_of_degree(&self.weights, d);
        let index: BTreeMap<&Monomial, usize> = cols.iter().zip(0..).collect();
        let mut rows = Vec::new();
        for r in &self.relations {
            let Ok(Some(rd)) = r.degree(&self.weights) else {
                continue;
            };
            if rd > d {
                continue;
            }
            for m in monomials_of_degree(&self.weights, d - rd) {
                let mut row = F2Vector::zeros(cols.len());
                for t in r.terms() {
                    row.flip(index[&t.mul(&m)]);
                }
                rows.push(row);
            }
        }
        let matrix = F2Matrix::from_rows(cols.len(), &rows);
        (cols, matrix)
    }
}
