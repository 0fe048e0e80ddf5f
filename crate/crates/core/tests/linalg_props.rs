mod common;

use common::bareiss_rank;
use omnilie::linalg::{inverse, kernel_basis, rank, rref_rank, SparseMatrix};
use omnilie::rational::{frac, int};
use omnilie::{Matrix, Rational};
use proptest::prelude::*;

fn entry() -> impl Strategy<Value = Rational> {
    prop_oneof![
        3 => Just(int(0)),
        4 => (-4i64..=4).prop_map(int),
        1 => ((-4i64..=4), (1i64..=3)).prop_map(|(p, q)| frac(p, q)),
    ]
}

fn matrix() -> impl Strategy<Value = Matrix> {
    (1usize..=6, 1usize..=6).prop_flat_map(|(r, c)| {
        proptest::collection::vec(entry(), r * c)
            .prop_map(move |data| Matrix::from_vec(r, c, data).unwrap())
    })
}

proptest! {
    #[test]
    fn rref_is_idempotent(m in matrix()) {
        let once = rref_rank(&m);
        let twice = rref_rank(&once.rref);
        prop_assert_eq!(&once.rref, &twice.rref);
        prop_assert_eq!(once.rank, twice.rank);
    }

    #[test]
    fn rank_matches_transpose_and_bareiss(m in matrix()) {
        let r = rank(&m);
        prop_assert_eq!(r, rank(&m.transpose()));
        prop_assert_eq!(r, bareiss_rank(&m));
    }

    #[test]
    fn sparse_rank_matches_dense(m in matrix()) {
        let s = SparseMatrix::from_dense(&m);
        prop_assert_eq!(s.rank(), rank(&m));
        prop_assert_eq!(s.to_dense(), m.clone());
        prop_assert_eq!(s.transpose().to_dense(), m.transpose());
    }

    #[test]
    fn kernel_has_complementary_dimension(m in matrix()) {
        let k = kernel_basis(&m);
        prop_assert_eq!(k.len() + rank(&m), m.cols());
        for v in &k {
            prop_assert!(m.mul_vec(v).iter().all(|x| *x == int(0)));
        }
    }

    #[test]
    fn inverse_exists_iff_full_rank(m in (1usize..=4).prop_flat_map(|n| {
        proptest::collection::vec(entry(), n * n).prop_map(move |d| Matrix::from_vec(n, n, d).unwrap())
    })) {
        let n = m.rows();
        match inverse(&m) {
            Some(inv) => {
                prop_assert_eq!(rank(&m), n);
                prop_assert_eq!(m.mul(&inv), Matrix::identity(n));
            }
            None => prop_assert!(rank(&m) < n),
        }
    }
}

#[test]
fn rref_pivots_are_unit_columns() {
    let m = Matrix::from_i64(3, 4, &[2, 4, 0, 2, 1, 2, 1, 0, 3, 6, 1, 2]);
    let r = rref_rank(&m);
    assert_eq!(r.rank, 2);
    assert_eq!(r.pivot_columns, vec![0, 2]);
    assert_eq!(r.rref.row(0), &[int(1), int(2), int(0), int(1)][..]);
    assert_eq!(r.rref.row(1), &[int(0), int(0), int(1), int(-1)][..]);
}
