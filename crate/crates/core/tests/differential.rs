mod common;

use common::{mixed_order, osp12, small_family};
use liesuper::algebra::{make_heisenberg_even, make_heisenberg_odd, LieSuperalgebra};
use liesuper::differential::{lift_z_free, psi_matrix, tau, Differential};
use liesuper::linalg::{rank, RationalMatrix};
use liesuper::oracle::{coboundary_matrix_by_pairing, primal_boundary};
use liesuper::superexterior::{enumerate_basis, pair_elements, SuperElement, SuperMonomial, SuperSpaceDims};
use liesuper::Rational;
use num_traits::{One, Signed};

fn all_test_algebras() -> Vec<LieSuperalgebra> {
    let mut v = small_family();
    v.push(osp12());
    v.push(mixed_order());
    v
}

#[test]
fn d_squared_vanishes() {
    let mut algebras = all_test_algebras();
    algebras.push(make_heisenberg_even(2, 2).unwrap());
    algebras.push(make_heisenberg_odd(3).unwrap());
    for g in &algebras {
        let d = Differential::new(g).unwrap();
        for q in 0..=4 {
            let first = d.matrix(q).matrix;
            let second = d.matrix(q + 1).matrix;
            assert!(second.mul(&first).unwrap().is_zero(), "{} q={q}", g.name());
        }
    }
}

#[test]
fn derivation_matches_coboundary_pairing() {
    for g in &all_test_algebras() {
        let d = Differential::new(g).unwrap();
        let dims = g.dual_dims();
        for q in 0..=3 {
            let omegas = enumerate_basis(dims, q);
            let us = enumerate_basis(dims, q + 1);
            let boundaries: Vec<SuperElement> = us.iter().map(|u| primal_boundary(g, u)).collect();
            for w in &omegas {
                let omega = SuperElement::monomial(dims, w.clone(), Rational::one());
                let d_omega = d.apply(&omega);
                for (u, bu) in us.iter().zip(&boundaries) {
                    let ue = SuperElement::monomial(dims, u.clone(), Rational::one());
                    assert_eq!(
                        pair_elements(&d_omega, &ue),
                        pair_elements(&omega, bu),
                        "{}: ω = {w}, u = {u}",
                        g.name()
                    );
                }
            }
            assert_eq!(
                d.matrix(q).matrix,
                coboundary_matrix_by_pairing(g, q),
                "{} q={q}",
                g.name()
            );
        }
    }
}

#[test]
fn even_center_cocycles_are_z_free() {
    for (n, m) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
        let g = make_heisenberg_even(n, m).unwrap();
        let d = Differential::new(&g).unwrap();
        for q in 0..=6 {
            let dm = d.matrix(q);
            // slot 0 of the even dual generators is z*
            let with_z: Vec<usize> = (0..dm.source.len())
                .filter(|&c| dm.source[c].contains_even(0))
                .collect();
            for c in 0..dm.source.len() {
                if !dm.source[c].contains_even(0) {
                    assert!(dm.matrix.column(c).is_empty());
                }
            }
            assert_eq!(rank(&dm.matrix), with_z.len(), "h_{{{n},{m}}} q={q}");
        }
    }
}

fn top_even_form(n: usize) -> Vec<Rational> {
    // coordinates of e_1∧…∧e_n in the degree-n z*-free basis
    let dims = SuperSpaceDims::new(n, n);
    let top = SuperMonomial::new(dims, (0..n).collect(), vec![0; n]).unwrap();
    enumerate_basis(dims, n as i64)
        .iter()
        .map(|m| {
            if *m == top {
                Rational::one()
            } else {
                Rational::from_integer(0.into())
            }
        })
        .collect()
}

#[test]
fn kernel_of_psi_is_image_plus_top_form() {
    for n in 1..=3 {
        for t in 0..=7i64 {
            for l in 1..=3 {
                let psi = psi_matrix(t, n, l).unwrap();
                let kernel = psi.cols() - rank(&psi);
                // span of Im ψ_{(t-2,n,1)} and, when t = n, the top even form
                let mut span = if t >= 2 {
                    psi_matrix(t - 2, n, 1).unwrap()
                } else {
                    RationalMatrix::zeros(psi.cols(), 0)
                };
                if t == n as i64 {
                    let col: Vec<Vec<Rational>> = top_even_form(n).into_iter().map(|v| vec![v]).collect();
                    span = span.hstack(&RationalMatrix::from_dense(&col)).unwrap();
                }
                assert_eq!(rank(&span), kernel, "n={n} t={t} l={l}");
                // containment: ψ kills the whole span
                if span.cols() > 0 {
                    assert!(psi.mul(&span).unwrap().is_zero(), "n={n} t={t} l={l}");
                }
            }
        }
    }
}

#[test]
fn tau_powers_agree() {
    for n in 1..=3 {
        for l in 1..=4 {
            // tau() itself asserts l·τ∧(z*)^(l-1) = d((z*)^l)
            let t = tau(n, l).unwrap();
            assert_eq!(t.dims(), SuperSpaceDims::new(n, n + 1));
            assert_eq!(t.len(), n);
            for (m, c) in t.terms() {
                assert_eq!(m.odd_exponent(n), l - 1);
                assert_eq!(c.abs(), Rational::from_integer(l.into()));
                assert_eq!(lift_z_free(n, &z_free_part(n, m), l - 1), *m);
            }
        }
    }
}

fn z_free_part(n: usize, m: &SuperMonomial) -> SuperMonomial {
    let odd = m.odd_exponents()[..n].to_vec();
    SuperMonomial::new(SuperSpaceDims::new(n, n), m.even_set().to_vec(), odd).unwrap()
}

#[test]
fn psi_rank_independent_of_power() {
    for n in 1..=3 {
        for t in 0..=6 {
            let ranks: Vec<usize> = (1..=4).map(|l| rank(&psi_matrix(t, n, l).unwrap())).collect();
            assert!(ranks.windows(2).all(|w| w[0] == w[1]), "n={n} t={t}: {ranks:?}");
        }
    }
}
