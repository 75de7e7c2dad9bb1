use kocalc_core::catalog::{self, Exceptional};
use kocalc_core::f2linalg::{EchelonBasis, F2Matrix, F2Vector};
use kocalc_core::{Element, SpaceData};
use proptest::prelude::*;

fn matrix() -> impl Strategy<Value = F2Matrix> {
    (0usize..12, 0usize..150).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(0u8..2, c), r).prop_map(move |rows| {
            let refs: Vec<&[u8]> = rows.iter().map(|r| r.as_slice()).collect();
            if r == 0 {
                F2Matrix::zeros(0, c)
            } else {
                F2Matrix::from_bits(&refs)
            }
        })
    })
}

/// Gaussian elimination on `Vec<Vec<bool>>`.
fn naive_rank(m: &F2Matrix) -> usize {
    let mut rows: Vec<Vec<bool>> = (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.get(i, j)).collect())
        .collect();
    let mut rank = 0;
    for c in 0..m.cols() {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][c]) else {
            continue;
        };
        rows.swap(rank, p);
        for r in 0..rows.len() {
            if r != rank && rows[r][c] {
                let pivot = rows[rank].clone();
                rows[r].iter_mut().zip(pivot).for_each(|(x, y)| *x ^= y);
            }
        }
        rank += 1;
    }
    rank
}

proptest! {
    #[test]
    fn rank_matches_naive_elimination(m in matrix()) {
        prop_assert_eq!(m.rank(), naive_rank(&m));
    }

    #[test]
    fn rank_nullity(m in matrix()) {
        prop_assert_eq!(m.rank() + m.kernel_basis().len(), m.cols());
    }

    #[test]
    fn kernel_is_annihilated(m in matrix()) {
        for v in m.kernel_basis() {
            prop_assert!(m.mul_vec(&v).is_zero());
        }
    }

    #[test]
    fn echelon_is_idempotent(m in matrix()) {
        let (e, pivots) = m.row_echelon();
        let (e2, pivots2) = e.row_echelon();
        prop_assert_eq!(e, e2);
        prop_assert_eq!(pivots, pivots2);
    }

    #[test]
    fn rank_of_transpose(m in matrix()) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn echelon_basis_rank(m in matrix()) {
        let mut b = EchelonBasis::new(m.cols());
        for i in 0..m.rows() {
            b.insert(&m.row(i));
        }
        prop_assert_eq!(b.rank(), m.rank());
        for i in 0..m.rows() {
            prop_assert!(b.contains(&m.row(i)));
        }
    }
}

fn spaces() -> Vec<SpaceData> {
    vec![
        catalog::grassmannian(2, 3).unwrap(),
        catalog::grassmannian(3, 3).unwrap(),
        catalog::quadric(6).unwrap(),
        catalog::quadric(8).unwrap(),
        catalog::symplectic_grassmannian(4).unwrap(),
        catalog::spinor(6).unwrap(),
        catalog::exceptional(Exceptional::EIII),
    ]
}

/// (space index, degree, coordinate bits), resolved against the space.
fn element(space: &SpaceData, degree_seed: u32, bits: &[bool]) -> Element {
    let p = space.presentation();
    let degree = 2 * (degree_seed % (p.top_degree() / 2 + 1));
    let dim = p.dim(degree);
    let ones = (0..dim).filter(|&i| bits.get(i).copied().unwrap_or(false));
    Element::new(degree, F2Vector::from_ones(dim, ones))
}

fn bits() -> impl Strategy<Value = Vec<bool>> {
    prop::collection::vec(any::<bool>(), 64)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplication_is_commutative_and_associative(
        s in 0usize..7, d in any::<[u32; 3]>(), b in [bits(), bits(), bits()]
    ) {
        let space = &spaces()[s];
        let p = space.presentation();
        let [u, v, w] = [0, 1, 2].map(|i| element(space, d[i], &b[i]));
        prop_assert_eq!(p.multiply(&u, &v), p.multiply(&v, &u));
        prop_assert_eq!(p.multiply(&p.multiply(&u, &v), &w), p.multiply(&u, &p.multiply(&v, &w)));
    }

    #[test]
    fn multiplication_distributes(s in 0usize..7, d in any::<[u32; 2]>(), b in [bits(), bits(), bits()]) {
        let space = &spaces()[s];
        let p = space.presentation();
        let u = element(space, d[0], &b[0]);
        let v = element(space, d[1], &b[1]);
        let w = element(space, d[1], &b[2]);
        prop_assert_eq!(p.multiply(&u, &(&v + &w)), &p.multiply(&u, &v) + &p.multiply(&u, &w));
    }

    #[test]
    fn sq2_is_linear_and_leibniz(s in 0usize..7, d in any::<[u32; 2]>(), b in [bits(), bits(), bits()]) {
        let space = &spaces()[s];
        let (p, sq) = (space.presentation(), space.sq2());
        let u = element(space, d[0], &b[0]);
        let v = element(space, d[1], &b[1]);
        let w = element(space, d[1], &b[2]);
        prop_assert_eq!(sq.sq2(p, &(&v + &w)), &sq.sq2(p, &v) + &sq.sq2(p, &w));
        let lhs = sq.sq2(p, &p.multiply(&u, &v));
        let rhs = &p.multiply(&sq.sq2(p, &u), &v) + &p.multiply(&u, &sq.sq2(p, &v));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn twisted_differential_squares_to_zero(s in 0usize..7, d in any::<u32>(), b in bits()) {
        let space = &spaces()[s];
        let u = element(space, d, &b);
        for label in space.twist_labels() {
            let (_, diff) = space.differential(Some(label)).unwrap();
            prop_assert!(diff.apply(&diff.apply(&u)).is_zero());
        }
    }
}
