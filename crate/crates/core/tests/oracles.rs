use kocalc_core::catalog::{self, Exceptional, SpaceId};
use kocalc_core::f2linalg::F2Vector;
use kocalc_core::polynomial::monomials_of_degree;
use kocalc_core::SpaceData;

fn small_spaces() -> Vec<SpaceData> {
    let mut ids = vec![SpaceId::Point, SpaceId::Exceptional(Exceptional::EIII)];
    ids.extend((1..=5).map(SpaceId::ProjectiveSpace));
    for m in 1..=3 {
        for n in 1..=6 - m {
            ids.push(SpaceId::Grassmannian(m, n));
        }
    }
    ids.extend((1..=4).map(SpaceId::SymplecticGrassmannian));
    ids.extend((3..=8).map(SpaceId::Quadric));
    ids.extend((2..=5).map(SpaceId::Spinor));
    ids.iter().map(|id| catalog::space(id).unwrap()).collect()
}

/// Standard monomials and normal forms agree with a reduction of the whole
/// degree-d slice of the relation ideal.
#[test]
fn candidate_basis_matches_full_slice() {
    for space in small_spaces() {
        let p = space.presentation();
        for d in (0..=p.top_degree()).step_by(2) {
            let (cols, matrix) = p.ideal_slice(d);
            let (rref, pivots) = matrix.row_echelon();
            let standard: Vec<_> = (0..cols.len())
                .filter(|c| !pivots.contains(c))
                .map(|c| cols[c].clone())
                .collect();
            assert_eq!(
                p.basis_of_degree(d),
                &standard[..],
                "{} degree {d}",
                space.name()
            );

            for (c, m) in cols.iter().enumerate() {
                let mut v = F2Vector::unit(cols.len(), c);
                for (r, &pc) in pivots.iter().enumerate() {
                    if v.get(pc) {
                        v.xor_assign(&rref.row(r));
                    }
                }
                let expected: Vec<usize> = v
                    .iter_ones()
                    .map(|j| standard.iter().position(|s| *s == cols[j]).unwrap())
                    .collect();
                let nf = p.monomial_nf(m).unwrap();
                assert_eq!(
                    nf.coords().iter_ones().collect::<Vec<_>>(),
                    expected,
                    "{} {m:?}",
                    space.name()
                );
            }
        }
    }
}

/// Quotients of the top degree vanish above it: the full slice is everything.
#[test]
fn full_slice_vanishes_above_top() {
    for space in small_spaces() {
        let p = space.presentation();
        let d = p.top_degree() + 2;
        let (cols, matrix) = p.ideal_slice(d);
        assert_eq!(matrix.rank(), cols.len(), "{}", space.name());
    }
}

fn poly_mul(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Gaussian binomial [n choose k] in q, as coefficients.
fn q_binomial(n: usize, k: usize) -> Vec<u64> {
    if k == 0 || k == n {
        return vec![1];
    }
    let left = q_binomial(n - 1, k - 1);
    let right = q_binomial(n - 1, k);
    let mut out = vec![0; k * (n - k) + 1];
    for (i, c) in left.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in right.iter().enumerate() {
        out[i + k] += c;
    }
    out
}

fn product_of_one_plus(exponents: impl Iterator<Item = usize>) -> Vec<u64> {
    exponents.fold(vec![1], |acc, e| {
        let mut f = vec![0; e + 1];
        f[0] = 1;
        f[e] += 1;
        poly_mul(&acc, &f)
    })
}

fn betti(space: &SpaceData) -> Vec<u64> {
    space
        .presentation()
        .poincare_dims()
        .into_iter()
        .map(|(_, n)| n as u64)
        .collect()
}

#[test]
fn poincare_polynomials() {
    for m in 1..=5u32 {
        for n in 1..=10 - m {
            let g = catalog::grassmannian(m, n).unwrap();
            assert_eq!(
                betti(&g),
                q_binomial((m + n) as usize, m as usize),
                "Gr({m},{n})"
            );
        }
    }
    for n in 1..=8 {
        let lg = catalog::symplectic_grassmannian(n).unwrap();
        assert_eq!(betti(&lg), product_of_one_plus(1..=n as usize), "LG({n})");
    }
    for n in 2..=9 {
        let s = catalog::spinor(n).unwrap();
        assert_eq!(betti(&s), product_of_one_plus(1..n as usize), "S_{n}");
    }
    for n in 3..=12u32 {
        let q = catalog::quadric(n).unwrap();
        let mut expected = vec![1; n as usize + 1];
        if n % 2 == 0 {
            expected[n as usize / 2] = 2;
        }
        assert_eq!(betti(&q), expected, "Q^{n}");
    }
    let evii = catalog::exceptional(Exceptional::EVII);
    assert_eq!(
        betti(&evii),
        poly_mul(
            &poly_mul(&[1; 14], &product_of_one_plus([5].into_iter())),
            &product_of_one_plus([9].into_iter())
        )
    );
    let eiii = catalog::exceptional(Exceptional::EIII);
    assert_eq!(betti(&eiii).iter().sum::<u64>(), 27);
}

#[test]
fn monomial_enumeration_counts() {
    // number of monomials of degree 2d in generators of degrees 2, 4, 6 = partitions of d into parts <= 3
    let counts: Vec<usize> = (0..8)
        .map(|d| monomials_of_degree(&[2, 4, 6], 2 * d).len())
        .collect();
    assert_eq!(counts, [1, 1, 2, 3, 4, 5, 7, 8]);
}
