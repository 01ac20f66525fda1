//! Independent brute-force routes used by the test suites.
//!
//! Nothing here is used by the engine. Word normalization reduces products
//! of generators by adjacent swaps, the coboundary is evaluated through the
//! alternating-sum formula on primal words, and rank is computed by dense
//! Gaussian elimination over the rationals.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{LieSuperalgebra, Parity};
use crate::linalg::RationalMatrix;
use crate::superexterior::{
    dual_pairing, enumerate_basis, pair_elements, Factor, SuperElement, SuperMonomial, SuperSpaceDims,
};
use crate::Rational;

/// Reduces a word of generators to `±` a normal-form monomial by bubble
/// sorting adjacent pairs with `u v = -(-1)^{|u||v|} v u`. Returns `None`
/// when a repeated even generator kills the word.
pub fn normalize_word(dims: SuperSpaceDims, word: &[Factor]) -> Option<(i64, SuperMonomial)> {
    // normal order: evens ascending, then odds ascending
    let key = |f: &Factor| match *f {
        Factor::Even(i) => (0, i),
        Factor::Odd(j) => (1, j),
    };
    let mut w = word.to_vec();
    let mut sign = 1i64;
    let mut swapped = true;
    while swapped {
        swapped = false;
        for i in 1..w.len() {
            if key(&w[i - 1]) > key(&w[i]) {
                if !(w[i - 1].is_odd() && w[i].is_odd()) {
                    sign = -sign;
                }
                w.swap(i - 1, i);
                swapped = true;
            }
        }
    }
    let mut even = Vec::new();
    let mut odd = vec![0u32; dims.odd_count];
    for f in &w {
        match *f {
            Factor::Even(i) => {
                if even.last() == Some(&i) {
                    return None;
                }
                even.push(i);
            }
            Factor::Odd(j) => odd[j] += 1,
        }
    }
    Some((sign, SuperMonomial::new(dims, even, odd).ok()?))
}

fn factor_of(algebra: &LieSuperalgebra, k: usize) -> Factor {
    match algebra.parity(k) {
        Parity::Even => Factor::Even(algebra.slot(k)),
        Parity::Odd => Factor::Odd(algebra.slot(k)),
    }
}

fn generator_of(algebra: &LieSuperalgebra, f: Factor) -> usize {
    match f {
        Factor::Even(s) => algebra.even_generator(s),
        Factor::Odd(s) => algebra.odd_generator(s),
    }
}

/// The primal element `Σ_{r<s} (-1)^{s + |a_s|(|a_{r+1}|+…+|a_{s-1}|)}
/// a_0 ∧ … ∧ [a_r, a_s] ∧ … ∧ \hat{a_s} ∧ … ∧ a_q` for the word of a
/// primal basis monomial, so that `⟨dω, u⟩ = ⟨ω, boundary(u)⟩`.
pub fn primal_boundary(algebra: &LieSuperalgebra, u: &SuperMonomial) -> SuperElement {
    let dims = algebra.dual_dims();
    let word: Vec<usize> = u.factors().into_iter().map(|f| generator_of(algebra, f)).collect();
    let odd = |k: usize| algebra.parity(k).is_odd();
    let mut out = SuperElement::zero(dims);
    for s in 0..word.len() {
        for r in 0..s {
            let crossed = word[r + 1..s].iter().filter(|&&k| odd(k)).count();
            let exponent = s + if odd(word[s]) { crossed } else { 0 };
            let sign = if exponent % 2 == 0 { 1 } else { -1 };
            for (k, c) in algebra.bracket(word[r], word[s]) {
                let mut new_word: Vec<Factor> = Vec::with_capacity(word.len() - 1);
                for (i, &g) in word.iter().enumerate() {
                    if i == r {
                        new_word.push(factor_of(algebra, k));
                    } else if i != s {
                        new_word.push(factor_of(algebra, g));
                    }
                }
                if let Some((ws, m)) = normalize_word(dims, &new_word) {
                    let v = c.clone() * Rational::from_integer(BigInt::from(sign * ws));
                    out.add_term(m, v);
                }
            }
        }
    }
    out
}

/// Matrix of `d_q` computed only through pairings with primal boundaries:
/// entry `(i, j)` is `⟨ω_j, boundary(u_i)⟩ / ⟨m_i, u_i⟩`.
pub fn coboundary_matrix_by_pairing(algebra: &LieSuperalgebra, q: i64) -> RationalMatrix {
    let dims = algebra.dual_dims();
    let source = enumerate_basis(dims, q);
    let target = enumerate_basis(dims, q + 1);
    let mut m = RationalMatrix::zeros(target.len(), source.len());
    for (i, u) in target.iter().enumerate() {
        let boundary = primal_boundary(algebra, u);
        if boundary.is_zero() {
            continue;
        }
        let gram = dual_pairing(u, u);
        for (j, w) in source.iter().enumerate() {
            let omega = SuperElement::monomial(dims, w.clone(), Rational::one());
            let v = pair_elements(&omega, &boundary);
            if !v.is_zero() {
                m.set(i, j, v / &gram);
            }
        }
    }
    m
}

/// Textbook dense Gaussian elimination over the rationals.
pub fn dense_rank(matrix: &RationalMatrix) -> usize {
    let mut a: Vec<Vec<Rational>> = (0..matrix.rows())
        .map(|r| (0..matrix.cols()).map(|c| matrix.get(r, c)).collect())
        .collect();
    let (rows, cols) = (matrix.rows(), matrix.cols());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pivot_row = a[rank].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != rank && !row[c].is_zero() {
                let f = &row[c] / &pivot_row[c];
                for (x, p) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                    *x -= &f * p;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Betti numbers from the pairing-built coboundaries and dense rank.
pub fn brute_force_betti(algebra: &LieSuperalgebra, q_max: i64) -> Vec<u64> {
    let dims = algebra.dual_dims();
    let ranks: Vec<usize> = (0..=q_max)
        .map(|q| dense_rank(&coboundary_matrix_by_pairing(algebra, q)))
        .collect();
    (0..=q_max as usize)
        .map(|q| {
            let cochain = enumerate_basis(dims, q as i64).len();
            let prev = if q == 0 { 0 } else { ranks[q - 1] };
            (cochain - ranks[q] - prev) as u64
        })
        .collect()
}

/// Index of every monomial in a basis list.
pub fn basis_index(basis: &[SuperMonomial]) -> HashMap<SuperMonomial, usize> {
    basis.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect()
}
