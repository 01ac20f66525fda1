//! The Chevalley–Eilenberg differential on the super-exterior algebra of
//! the dual space, extended from generators as a superderivation of degree
//! one and even parity.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::algebra::{make_heisenberg_odd, LieSuperalgebra, Parity};
use crate::error::{Error, Result};
use crate::linalg::RationalMatrix;
use crate::superexterior::{enumerate_basis, wedge, Factor, SuperElement, SuperMonomial, SuperSpaceDims};
use crate::Rational;

/// Matrix of `d: C^q -> C^{q+1}`; column `j` holds the coordinates of
/// `d(source[j])` in the `target` basis.
#[derive(Debug, Clone)]
pub struct DifferentialMatrix {
    pub q: i64,
    pub source: Vec<SuperMonomial>,
    pub target: Vec<SuperMonomial>,
    pub matrix: RationalMatrix,
}

/// The dual generator `f_k` as a factor of the cochain algebra.
pub fn dual_factor(algebra: &LieSuperalgebra, k: usize) -> Factor {
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

/// `d f_k = -Σ_{i<j} c_ij^k f_i∧f_j - ½ Σ_{i odd} c_ii^k f_i∧f_i`.
///
/// The half comes from `⟨f_i∧f_i, a_i∧a_i⟩ = 2` for odd `i`.
pub fn d_generator(algebra: &LieSuperalgebra, k: usize) -> Result<SuperElement> {
    if k >= algebra.dim() {
        return Err(Error::GeneratorOutOfRange {
            index: k,
            count: algebra.dim(),
        });
    }
    let dims = algebra.dual_dims();
    let mut out = SuperElement::zero(dims);
    let half = Rational::new(BigInt::from(1), BigInt::from(2));
    for (&(i, j), value) in algebra.stored_brackets() {
        let Some(c) = value.get(&k) else { continue };
        let fi = SuperElement::generator(dims, dual_factor(algebra, i));
        let fj = SuperElement::generator(dims, dual_factor(algebra, j));
        let coeff = if i == j { -(c * &half) } else { -c.clone() };
        out = out.add(&wedge(&fi, &fj)?.scale(&coeff))?;
    }
    Ok(out)
}

/// Cached differential of one algebra.
pub struct Differential<'a> {
    algebra: &'a LieSuperalgebra,
    dims: SuperSpaceDims,
    // indexed by factor: evens first, then odds
    on_factors: Vec<SuperElement>,
}

impl<'a> Differential<'a> {
    pub fn new(algebra: &'a LieSuperalgebra) -> Result<Self> {
        let dims = algebra.dual_dims();
        let mut on_factors = Vec::with_capacity(algebra.dim());
        for s in 0..dims.even_count {
            on_factors.push(d_generator(algebra, generator_of(algebra, Factor::Even(s)))?);
        }
        for s in 0..dims.odd_count {
            on_factors.push(d_generator(algebra, generator_of(algebra, Factor::Odd(s)))?);
        }
        Ok(Differential {
            algebra,
            dims,
            on_factors,
        })
    }

    pub fn algebra(&self) -> &LieSuperalgebra {
        self.algebra
    }

    fn on_factor(&self, f: Factor) -> &SuperElement {
        match f {
            Factor::Even(s) => &self.on_factors[s],
            Factor::Odd(s) => &self.on_factors[self.dims.even_count + s],
        }
    }

    /// `d(g_1 ⋯ g_k) = Σ_i (-1)^{i-1} g_1 ⋯ d(g_i) ⋯ g_k`.
    pub fn apply_monomial(&self, m: &SuperMonomial) -> SuperElement {
        let factors = m.factors();
        let mut out = SuperElement::zero(self.dims);
        let one = Rational::from_integer(BigInt::from(1));
        let minus_one = -one.clone();
        for idx in 0..factors.len() {
            let dg = self.on_factor(factors[idx]);
            if dg.is_zero() {
                continue;
            }
            let prefix = word_monomial(self.dims, &factors[..idx]);
            let suffix = word_monomial(self.dims, &factors[idx + 1..]);
            let sign = if idx % 2 == 0 { &one } else { &minus_one };
            let mut left = SuperElement::zero(self.dims);
            dg.wedge_monomial_left(&prefix, sign, &mut left);
            left.wedge_monomial_right(&suffix, &one, &mut out);
        }
        out
    }

    pub fn apply(&self, elem: &SuperElement) -> SuperElement {
        let mut out = SuperElement::zero(self.dims);
        for (m, c) in elem.terms() {
            for (n, v) in self.apply_monomial(m).terms() {
                out.add_term(n.clone(), v * c);
            }
        }
        out
    }

    pub fn matrix(&self, q: i64) -> DifferentialMatrix {
        let source = enumerate_basis(self.dims, q);
        let target = enumerate_basis(self.dims, q + 1);
        let index: HashMap<&SuperMonomial, usize> = target.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let columns: Vec<SuperElement> = source.par_iter().map(|m| self.apply_monomial(m)).collect();
        let mut matrix = RationalMatrix::zeros(target.len(), source.len());
        for (c, col) in columns.iter().enumerate() {
            for (m, v) in col.terms() {
                matrix.set(index[m], c, v.clone());
            }
        }
        DifferentialMatrix {
            q,
            source,
            target,
            matrix,
        }
    }
}

/// A normal-ordered factor slice as a monomial (no sign needed).
fn word_monomial(dims: SuperSpaceDims, factors: &[Factor]) -> SuperMonomial {
    let mut even = Vec::new();
    let mut odd = vec![0u32; dims.odd_count];
    for f in factors {
        match *f {
            Factor::Even(i) => even.push(i),
            Factor::Odd(j) => odd[j] += 1,
        }
    }
    SuperMonomial::new(dims, even, odd).expect("normal-ordered slice")
}

pub fn d_element(algebra: &LieSuperalgebra, elem: &SuperElement) -> Result<SuperElement> {
    if elem.dims() != algebra.dual_dims() {
        let (a, b) = (elem.dims(), algebra.dual_dims());
        return Err(Error::DimensionMismatch {
            left: (a.even_count, a.odd_count),
            right: (b.even_count, b.odd_count),
        });
    }
    Ok(Differential::new(algebra)?.apply(elem))
}

/// Matrix of `d_q` on the fixed monomial bases; the zero map with one column
/// at `q = 0`, an empty matrix for `q < 0`.
pub fn differential_matrix(algebra: &LieSuperalgebra, q: i64) -> Result<DifferentialMatrix> {
    Ok(Differential::new(algebra)?.matrix(q))
}

/// `(z*)^l` inside the cochain algebra of `h_n`.
fn z_power(n: usize, l: u32) -> SuperElement {
    let dims = SuperSpaceDims::new(n, n + 1);
    let mut odd = vec![0u32; n + 1];
    odd[n] = l;
    let m = SuperMonomial::new(dims, vec![], odd).expect("valid monomial");
    SuperElement::monomial(dims, m, Rational::from_integer(BigInt::from(1)))
}

/// `τ_{(n,l)} = d((z*)^l) = l τ_{(n,1)} ∧ (z*)^{l-1}` in the cochain algebra of
/// `h_n`. Both sides are computed and must agree.
pub fn tau(n: usize, l: u32) -> Result<SuperElement> {
    if n < 1 || l < 1 {
        return Err(Error::InvalidParameter(format!(
            "tau needs n, l >= 1, got n = {n}, l = {l}"
        )));
    }
    let h = make_heisenberg_odd(n)?;
    let d = Differential::new(&h)?;
    let z = h.dim() - 1;
    let tau1 = d_generator(&h, z)?;
    let closed = wedge(&tau1, &z_power(n, l - 1))?.scale(&Rational::from_integer(BigInt::from(l)));
    let derived = d.apply(&z_power(n, l));
    assert_eq!(closed, derived, "derivation rule disagrees with l·τ∧(z*)^(l-1)");
    Ok(closed)
}

/// Embeds a monomial of the `(n | n)` space spanned by `e_i, o_i` into the
/// cochain algebra of `h_n`, with `z*` exponent `z_exp`.
pub fn lift_z_free(n: usize, m: &SuperMonomial, z_exp: u32) -> SuperMonomial {
    let mut odd = m.odd_exponents().to_vec();
    odd.push(z_exp);
    SuperMonomial::new(SuperSpaceDims::new(n, n + 1), m.even_set().to_vec(), odd).expect("valid lift")
}

/// Matrix of `ψ_{(t,n,l)}: α ↦ α ∧ τ_{(n,l)}` from `z*`-free degree-`t`
/// monomials to `z*`-free degree-`(t+2)` monomials; the common factor
/// `(z*)^{l-1}` of the codomain is left implicit.
pub fn psi_matrix(t: i64, n: usize, l: u32) -> Result<RationalMatrix> {
    let tau = tau(n, l)?;
    let small = SuperSpaceDims::new(n, n);
    let source = enumerate_basis(small, t);
    let target = enumerate_basis(small, t + 2);
    let index: HashMap<SuperMonomial, usize> = target
        .iter()
        .enumerate()
        .map(|(i, m)| (lift_z_free(n, m, l - 1), i))
        .collect();
    let one = Rational::from_integer(BigInt::from(1));
    let mut matrix = RationalMatrix::zeros(target.len(), source.len());
    for (c, m) in source.iter().enumerate() {
        let mut image = SuperElement::zero(tau.dims());
        tau.wedge_monomial_left(&lift_z_free(n, m, 0), &one, &mut image);
        for (p, v) in image.terms() {
            let row = *index
                .get(p)
                .expect("image lies in the degree-(t+2) z*-free span times (z*)^(l-1)");
            if !v.is_zero() {
                matrix.set(row, c, v.clone());
            }
        }
    }
    Ok(matrix)
}
