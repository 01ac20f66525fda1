use liesuper::algebra::{make_heisenberg_even, make_heisenberg_odd};
use liesuper::differential::{differential_matrix, psi_matrix};
use liesuper::linalg::{kernel_dim, rank, RationalMatrix};
use liesuper::oracle::dense_rank;
use liesuper::Rational;
use proptest::prelude::*;

fn matrix_strategy() -> impl Strategy<Value = RationalMatrix> {
    (1usize..9, 1usize..9).prop_flat_map(|(r, c)| {
        proptest::collection::vec(
            prop_oneof![6 => Just(0i64), 4 => -3i64..4].prop_flat_map(|p| (Just(p), 1i64..4)),
            r * c,
        )
        .prop_map(move |cells| {
            let mut m = RationalMatrix::zeros(r, c);
            for (i, (p, d)) in cells.into_iter().enumerate() {
                m.set(i / c, i % c, Rational::new(p.into(), d.into()));
            }
            m
        })
    })
}

fn low_rank_strategy() -> impl Strategy<Value = RationalMatrix> {
    // products of thin factors, so dependent rows are common
    (2usize..8, 2usize..8, 1usize..4).prop_flat_map(|(r, c, k)| {
        (
            proptest::collection::vec(-2i64..3, r * k),
            proptest::collection::vec(-2i64..3, k * c),
        )
            .prop_map(move |(a, b)| {
                let int = |v: i64| Rational::from_integer(v.into());
                let left: Vec<Vec<Rational>> = (0..r).map(|i| (0..k).map(|j| int(a[i * k + j])).collect()).collect();
                let right: Vec<Vec<Rational>> = (0..k).map(|i| (0..c).map(|j| int(b[i * c + j])).collect()).collect();
                RationalMatrix::from_dense(&left)
                    .mul(&RationalMatrix::from_dense(&right))
                    .unwrap()
            })
    })
}

proptest! {
    #[test]
    fn rank_matches_dense_oracle(m in matrix_strategy()) {
        prop_assert_eq!(rank(&m), dense_rank(&m));
    }

    #[test]
    fn low_rank_matches_dense_oracle(m in low_rank_strategy()) {
        prop_assert_eq!(rank(&m), dense_rank(&m));
        prop_assert_eq!(kernel_dim(&m), m.cols() - dense_rank(&m));
    }

    #[test]
    fn rank_of_transpose(m in low_rank_strategy()) {
        prop_assert_eq!(rank(&m), rank(&m.transpose()));
    }

    #[test]
    fn rank_invariant_under_permutation_and_scaling(
        m in low_rank_strategy(),
        seed in any::<u64>(),
        scale in prop_oneof![-5i64..-1, 1i64..6],
    ) {
        let rot = |n: usize| -> Vec<usize> {
            let shift = (seed as usize) % n.max(1);
            (0..n).map(|i| (i + shift) % n).rev().collect()
        };
        let mut p = m.permuted(&rot(m.rows()), &rot(m.cols()));
        p.scale_row((seed as usize) % p.rows(), &Rational::new(scale.into(), 7.into()));
        prop_assert_eq!(rank(&p), rank(&m));
    }
}

#[test]
fn corpus_matrices_agree_with_dense_oracle() {
    let mut corpus = Vec::new();
    for (n, m) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
        let g = make_heisenberg_even(n, m).unwrap();
        for q in 0..=8 {
            corpus.push(differential_matrix(&g, q).unwrap().matrix);
        }
    }
    for n in 1..=3 {
        let h = make_heisenberg_odd(n).unwrap();
        for q in 0..=8 {
            corpus.push(differential_matrix(&h, q).unwrap().matrix);
        }
        for t in 0..=8 {
            corpus.push(psi_matrix(t, n, 2).unwrap());
        }
    }
    let mut checked = 0;
    for m in corpus.iter().filter(|m| m.cols() <= 200) {
        assert_eq!(rank(m), dense_rank(m), "{}x{}", m.rows(), m.cols());
        checked += 1;
    }
    assert!(checked > 50);
}

#[test]
fn known_small_ranks() {
    let g = make_heisenberg_even(1, 1).unwrap();
    let d1 = differential_matrix(&g, 1).unwrap().matrix;
    assert_eq!((rank(&d1), dense_rank(&d1)), (1, 1));
    let d2 = differential_matrix(&g, 2).unwrap().matrix;
    assert_eq!((kernel_dim(&d2), d2.cols() - dense_rank(&d2)), (4, 4));
    assert_eq!(kernel_dim(&psi_matrix(1, 1, 1).unwrap()), 1);
}
