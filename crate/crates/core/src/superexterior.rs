//! Normal-form arithmetic in the super-exterior algebra of a superspace
//! `V = V_0 + V_1`, realized as `Λ(V_0) ⊗ S(V_1)` with the twisted product.
//!
//! Generators all have Z-degree 1. Two generators `u, v` satisfy
//! `u v = -(-1)^{|u||v|} v u`: even generators anticommute with everything,
//! odd generators commute with each other. A monomial is stored as a sorted
//! set of even indices followed by an exponent vector over the odd
//! generators, i.e. the word `e_{i_1} .. e_{i_k} o_1^{a_1} .. o_m^{a_m}`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::formulas::{binomial, sym_dim};
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SuperSpaceDims {
    pub even_count: usize,
    pub odd_count: usize,
}

impl SuperSpaceDims {
    pub const fn new(even_count: usize, odd_count: usize) -> Self {
        SuperSpaceDims { even_count, odd_count }
    }

    fn pair(self) -> (usize, usize) {
        (self.even_count, self.odd_count)
    }
}

/// A single generator inside a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Factor {
    Even(usize),
    Odd(usize),
}

impl Factor {
    pub fn is_odd(self) -> bool {
        matches!(self, Factor::Odd(_))
    }
}

/// A normal-form basis monomial `e_I o^α`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SuperMonomial {
    even: Vec<usize>,
    odd: Vec<u32>,
}

impl SuperMonomial {
    /// The empty monomial (the unit).
    pub fn one(dims: SuperSpaceDims) -> Self {
        SuperMonomial {
            even: Vec::new(),
            odd: vec![0; dims.odd_count],
        }
    }

    /// Builds a monomial from an even index set and odd exponents. The even
    /// indices must be strictly increasing.
    pub fn new(dims: SuperSpaceDims, even: Vec<usize>, odd: Vec<u32>) -> Result<Self> {
        if odd.len() != dims.odd_count {
            return Err(Error::InvalidParameter(format!(
                "odd exponent vector has length {}, expected {}",
                odd.len(),
                dims.odd_count
            )));
        }
        if even.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidParameter(
                "even indices must be strictly increasing".into(),
            ));
        }
        if even.last().is_some_and(|&i| i >= dims.even_count) {
            return Err(Error::InvalidParameter("even index out of range".into()));
        }
        Ok(SuperMonomial { even, odd })
    }

    pub fn even_set(&self) -> &[usize] {
        &self.even
    }

    pub fn odd_exponents(&self) -> &[u32] {
        &self.odd
    }

    pub fn even_degree(&self) -> usize {
        self.even.len()
    }

    pub fn odd_degree(&self) -> usize {
        self.odd.iter().map(|&a| a as usize).sum()
    }

    /// Z-degree.
    pub fn degree(&self) -> usize {
        self.even_degree() + self.odd_degree()
    }

    /// Z₂-degree, as 0 or 1.
    pub fn parity(&self) -> usize {
        self.odd_degree() % 2
    }

    /// Factors in normal order, odd generators repeated by multiplicity.
    pub fn factors(&self) -> Vec<Factor> {
        let mut out: Vec<Factor> = self.even.iter().map(|&i| Factor::Even(i)).collect();
        for (j, &a) in self.odd.iter().enumerate() {
            out.extend(std::iter::repeat_n(Factor::Odd(j), a as usize));
        }
        out
    }

    /// Odd generator indices with multiplicity, ascending.
    pub fn odd_word(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.odd_degree());
        for (j, &a) in self.odd.iter().enumerate() {
            out.extend(std::iter::repeat_n(j, a as usize));
        }
        out
    }

    /// `∏ α_j!`, the diagonal entry of the pairing Gram matrix.
    pub fn odd_factorial_product(&self) -> BigInt {
        self.odd
            .iter()
            .flat_map(|&a| 1..=a)
            .fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
    }

    pub fn contains_even(&self, i: usize) -> bool {
        self.even.binary_search(&i).is_ok()
    }

    pub fn odd_exponent(&self, j: usize) -> u32 {
        self.odd[j]
    }

    /// Returns the monomial with the exponent of odd generator `j` replaced.
    pub fn with_odd_exponent(&self, j: usize, exponent: u32) -> Self {
        let mut m = self.clone();
        m.odd[j] = exponent;
        m
    }
}

impl fmt::Display for SuperMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return write!(f, "1");
        }
        let mut parts: Vec<String> = self.even.iter().map(|i| format!("e{}", i + 1)).collect();
        for (j, &a) in self.odd.iter().enumerate() {
            match a {
                0 => {}
                1 => parts.push(format!("o{}", j + 1)),
                _ => parts.push(format!("o{}^{a}", j + 1)),
            }
        }
        write!(f, "{}", parts.join("∧"))
    }
}

/// Product of two normal-form monomials: `None` if it vanishes, otherwise
/// `(negative, monomial)`.
pub fn wedge_monomials(a: &SuperMonomial, b: &SuperMonomial) -> Option<(bool, SuperMonomial)> {
    // e_A o^α e_B o^β: moving e_B left across o^α costs (-1)^{|B| deg α}
    let mut negative = (b.even.len() * a.odd_degree()) % 2 == 1;
    let mut even = Vec::with_capacity(a.even.len() + b.even.len());
    let (mut i, mut j) = (0, 0);
    while i < a.even.len() || j < b.even.len() {
        if j == b.even.len() || (i < a.even.len() && a.even[i] < b.even[j]) {
            even.push(a.even[i]);
            i += 1;
        } else if i == a.even.len() || b.even[j] < a.even[i] {
            // b.even[j] jumps over the remaining a.even.len() - i factors
            if (a.even.len() - i) % 2 == 1 {
                negative = !negative;
            }
            even.push(b.even[j]);
            j += 1;
        } else {
            return None;
        }
    }
    let odd = a.odd.iter().zip(&b.odd).map(|(x, y)| x + y).collect();
    Some((negative, SuperMonomial { even, odd }))
}

/// A homogeneous sparse rational combination of monomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperElement {
    dims: SuperSpaceDims,
    terms: BTreeMap<SuperMonomial, Rational>,
}

impl SuperElement {
    pub fn zero(dims: SuperSpaceDims) -> Self {
        SuperElement {
            dims,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(dims: SuperSpaceDims) -> Self {
        Self::monomial(dims, SuperMonomial::one(dims), Rational::one())
    }

    pub fn monomial(dims: SuperSpaceDims, m: SuperMonomial, coeff: Rational) -> Self {
        let mut e = Self::zero(dims);
        e.add_term(m, coeff);
        e
    }

    pub fn even_generator(dims: SuperSpaceDims, i: usize) -> Self {
        assert!(i < dims.even_count, "even generator {i} out of range");
        let mut m = SuperMonomial::one(dims);
        m.even.push(i);
        Self::monomial(dims, m, Rational::one())
    }

    pub fn odd_generator(dims: SuperSpaceDims, j: usize) -> Self {
        assert!(j < dims.odd_count, "odd generator {j} out of range");
        let mut m = SuperMonomial::one(dims);
        m.odd[j] = 1;
        Self::monomial(dims, m, Rational::one())
    }

    pub fn generator(dims: SuperSpaceDims, factor: Factor) -> Self {
        match factor {
            Factor::Even(i) => Self::even_generator(dims, i),
            Factor::Odd(j) => Self::odd_generator(dims, j),
        }
    }

    /// Collects terms, rejecting inhomogeneous input.
    pub fn from_terms<I>(dims: SuperSpaceDims, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (SuperMonomial, Rational)>,
    {
        let mut e = Self::zero(dims);
        for (m, c) in terms {
            if m.odd.len() != dims.odd_count || m.even.last().is_some_and(|&i| i >= dims.even_count) {
                return Err(Error::DimensionMismatch {
                    left: dims.pair(),
                    right: (m.even.last().map_or(0, |i| i + 1), m.odd.len()),
                });
            }
            e.add_term(m, c);
        }
        e.check_homogeneous()?;
        Ok(e)
    }

    fn check_homogeneous(&self) -> Result<()> {
        let mut degrees = self.terms.keys().map(|m| (m.degree(), m.parity()));
        if let Some(first) = degrees.next() {
            if degrees.any(|d| d != first) {
                return Err(Error::NotHomogeneous);
            }
        }
        Ok(())
    }

    pub(crate) fn add_term(&mut self, m: SuperMonomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn dims(&self) -> SuperSpaceDims {
        self.dims
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<SuperMonomial, Rational> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &SuperMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Z-degree, `None` for the zero element.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next().map(SuperMonomial::degree)
    }

    /// Z₂-degree, `None` for the zero element.
    pub fn parity(&self) -> Option<usize> {
        self.terms.keys().next().map(SuperMonomial::parity)
    }

    pub fn add(&self, other: &SuperElement) -> Result<SuperElement> {
        self.check_dims(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out.check_homogeneous()?;
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> SuperElement {
        let mut out = Self::zero(self.dims);
        if !c.is_zero() {
            out.terms = self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect();
        }
        out
    }

    fn check_dims(&self, other: &SuperElement) -> Result<()> {
        if self.dims != other.dims {
            return Err(Error::DimensionMismatch {
                left: self.dims.pair(),
                right: other.dims.pair(),
            });
        }
        Ok(())
    }

    /// Left-multiplies by a monomial with a scalar.
    pub(crate) fn wedge_monomial_left(&self, m: &SuperMonomial, coeff: &Rational, out: &mut SuperElement) {
        for (n, c) in &self.terms {
            if let Some((neg, p)) = wedge_monomials(m, n) {
                let v = c * coeff;
                out.add_term(p, if neg { -v } else { v });
            }
        }
    }

    /// Right-multiplies by a monomial with a scalar.
    pub(crate) fn wedge_monomial_right(&self, m: &SuperMonomial, coeff: &Rational, out: &mut SuperElement) {
        for (n, c) in &self.terms {
            if let Some((neg, p)) = wedge_monomials(n, m) {
                let v = c * coeff;
                out.add_term(p, if neg { -v } else { v });
            }
        }
    }
}

impl fmt::Display for SuperElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(m, c)| format!("({c})·{m}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// The super-exterior product.
pub fn wedge(a: &SuperElement, b: &SuperElement) -> Result<SuperElement> {
    a.check_dims(b)?;
    let mut out = SuperElement::zero(a.dims);
    for (m, c) in &a.terms {
        b.wedge_monomial_left(m, c, &mut out);
    }
    Ok(out)
}

/// Monomials of total degree `q`, ordered by even degree descending, then
/// the even index set lexicographically, then the sorted odd index multiset
/// lexicographically (so `o1^2 < o1 o2 < o2^2`).
pub fn enumerate_basis(dims: SuperSpaceDims, q: i64) -> Vec<SuperMonomial> {
    let mut out = Vec::new();
    if q < 0 {
        return out;
    }
    let q = q as usize;
    let top = q.min(dims.even_count);
    for q0 in (0..=top).rev() {
        let q1 = q - q0;
        if dims.odd_count == 0 && q1 > 0 {
            continue;
        }
        let evens = combinations(dims.even_count, q0);
        let odds = multisets(dims.odd_count, q1);
        for e in &evens {
            for o in &odds {
                out.push(SuperMonomial {
                    even: e.clone(),
                    odd: o.clone(),
                });
            }
        }
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// Exponent vectors of length `n` summing to `k`, ordered by the sorted
/// index multiset they encode.
fn multisets(n: usize, k: usize) -> Vec<Vec<u32>> {
    fn go(start: usize, left: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for j in start..cur.len() {
            cur[j] += 1;
            go(j, left - 1, cur, out);
            cur[j] -= 1;
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if k == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(0, k, &mut vec![0; n], &mut out);
    out
}

/// `dim Λ̄^q V = Σ_{p=0}^{q} C(n, q-p) s_m(p)`.
pub fn graded_dim(dims: SuperSpaceDims, q: i64) -> u64 {
    if q < 0 {
        return 0;
    }
    (0..=q)
        .map(|p| binomial(dims.even_count as i64, q - p) * sym_dim(dims.odd_count as i64, p))
        .sum::<i64>() as u64
}

/// Determinant by cofactor expansion along the first row.
pub fn determinant(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let cols: Vec<usize> = (0..n).collect();
    fn go(m: &[Vec<i64>], row: usize, cols: &[usize]) -> i128 {
        if cols.is_empty() {
            return 1;
        }
        let mut total = 0i128;
        for (pos, &c) in cols.iter().enumerate() {
            let v = m[row][c];
            if v == 0 {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = v as i128 * go(m, row + 1, &rest);
            if pos % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        total
    }
    go(m, 0, &cols)
}

/// Permanent by expansion along row `expand_row` of the current minor at each
/// step; any choice of row gives the same value.
pub fn permanent_along(m: &[Vec<i64>], expand_row: usize) -> i128 {
    let n = m.len();
    let rows: Vec<usize> = (0..n).collect();
    let cols: Vec<usize> = (0..n).collect();
    fn go(m: &[Vec<i64>], rows: &[usize], cols: &[usize], pick: usize) -> i128 {
        if rows.is_empty() {
            return 1;
        }
        let r = rows[pick.min(rows.len() - 1)];
        let rest_rows: Vec<usize> = rows.iter().copied().filter(|&x| x != r).collect();
        let mut total = 0i128;
        for &c in cols {
            let v = m[r][c];
            if v == 0 {
                continue;
            }
            let rest_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            total += v as i128 * go(m, &rest_rows, &rest_cols, pick);
        }
        total
    }
    go(m, &rows, &cols, expand_row)
}

pub fn permanent(m: &[Vec<i64>]) -> i128 {
    permanent_along(m, 0)
}

/// Pairs a dual word with a primal word: the even parts by determinant of
/// the evaluation matrix, the odd parts by permanent. Words with different
/// even or odd length pair to zero.
pub fn pair_words(dual_even: &[usize], dual_odd: &[usize], primal_even: &[usize], primal_odd: &[usize]) -> i128 {
    if dual_even.len() != primal_even.len() || dual_odd.len() != primal_odd.len() {
        return 0;
    }
    let eval = |d: &[usize], p: &[usize]| -> Vec<Vec<i64>> {
        d.iter()
            .map(|&i| p.iter().map(|&j| i64::from(i == j)).collect())
            .collect()
    };
    let det = determinant(&eval(dual_even, primal_even));
    if det == 0 {
        return 0;
    }
    det * permanent(&eval(dual_odd, primal_odd))
}

/// `⟨α, u⟩` for a dual monomial `α` and a primal monomial `u`.
pub fn dual_pairing(alpha: &SuperMonomial, u: &SuperMonomial) -> Rational {
    let v = pair_words(&alpha.even, &alpha.odd_word(), &u.even, &u.odd_word());
    Rational::from_integer(BigInt::from(v))
}

/// Bilinear extension of [`dual_pairing`].
pub fn pair_elements(alpha: &SuperElement, u: &SuperElement) -> Rational {
    let mut total = Rational::zero();
    for (a, ca) in &alpha.terms {
        for (b, cb) in &u.terms {
            let p = dual_pairing(a, b);
            if !p.is_zero() {
                total += p * ca * cb;
            }
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dims(e: usize, o: usize) -> SuperSpaceDims {
        SuperSpaceDims::new(e, o)
    }

    fn int(v: i64) -> Rational {
        Rational::from_integer(BigInt::from(v))
    }

    #[test]
    fn even_square_vanishes() {
        let d = dims(2, 1);
        let e1 = SuperElement::even_generator(d, 0);
        assert!(wedge(&e1, &e1).unwrap().is_zero());
    }

    #[test]
    fn odd_square_survives() {
        let d = dims(0, 1);
        let o1 = SuperElement::odd_generator(d, 0);
        let sq = wedge(&o1, &o1).unwrap();
        let expected = SuperMonomial::new(d, vec![], vec![2]).unwrap();
        assert_eq!(sq.coefficient(&expected), int(1));
        assert_eq!(sq.len(), 1);
    }

    #[test]
    fn mixed_sign() {
        let d = dims(2, 1);
        let a = SuperElement::monomial(d, SuperMonomial::new(d, vec![0], vec![1]).unwrap(), int(1));
        let b = SuperElement::even_generator(d, 1);
        let p = wedge(&a, &b).unwrap();
        let expected = SuperMonomial::new(d, vec![0, 1], vec![1]).unwrap();
        assert_eq!(p.coefficient(&expected), int(-1));
    }

    #[test]
    fn wedge_dims_mismatch() {
        let a = SuperElement::one(dims(1, 1));
        let b = SuperElement::one(dims(1, 2));
        assert!(matches!(wedge(&a, &b), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn inhomogeneous_rejected() {
        let d = dims(1, 1);
        let terms = vec![
            (SuperMonomial::new(d, vec![0], vec![0]).unwrap(), int(1)),
            (SuperMonomial::new(d, vec![], vec![1]).unwrap(), int(1)),
        ];
        assert_eq!(SuperElement::from_terms(d, terms), Err(Error::NotHomogeneous));
    }

    #[test]
    fn basis_order_small() {
        let names: Vec<String> = enumerate_basis(dims(1, 2), 2).iter().map(|m| m.to_string()).collect();
        assert_eq!(names, ["e1∧o1", "e1∧o2", "o1^2", "o1∧o2", "o2^2"]);
        assert_eq!(enumerate_basis(dims(2, 2), 2).len(), 8);
        assert_eq!(enumerate_basis(dims(3, 4), 0), vec![SuperMonomial::one(dims(3, 4))]);
        assert!(enumerate_basis(dims(3, 4), -1).is_empty());
    }

    #[test]
    fn graded_dim_values() {
        assert_eq!(graded_dim(dims(2, 2), 2), 8);
        assert_eq!(graded_dim(dims(1, 2), 2), 5);
        assert_eq!(graded_dim(dims(4, 3), 0), 1);
        assert_eq!(graded_dim(dims(4, 3), -2), 0);
        assert_eq!(graded_dim(dims(3, 0), 4), 0);
        assert_eq!(graded_dim(dims(0, 0), 0), 1);
    }

    #[test]
    fn graded_dim_matches_enumeration() {
        for e in 0..=4 {
            for o in 0..=3 {
                for q in -1..=(2 * e as i64 + 12) {
                    let d = dims(e, o);
                    assert_eq!(graded_dim(d, q), enumerate_basis(d, q).len() as u64, "{d:?} q={q}");
                }
            }
        }
    }

    #[test]
    fn pairing_examples() {
        // ⟨e1∧e2, x2∧x1⟩
        assert_eq!(pair_words(&[0, 1], &[], &[1, 0], &[]), -1);
        let d = dims(0, 3);
        let alpha = SuperMonomial::new(d, vec![], vec![2, 1, 3]).unwrap();
        assert_eq!(dual_pairing(&alpha, &alpha), int(2 * 6));
        let sq = SuperMonomial::new(dims(0, 2), vec![], vec![2, 0]).unwrap();
        let mixed = SuperMonomial::new(dims(0, 2), vec![], vec![1, 1]).unwrap();
        assert_eq!(dual_pairing(&sq, &mixed), int(0));
    }

    #[test]
    fn permanent_row_independence() {
        let m = vec![vec![1, 2, 0], vec![3, 1, 1], vec![0, 2, 5]];
        let v = permanent(&m);
        // expansion along the first row: 1·(5 + 2) + 2·(15 + 0)
        assert_eq!(v, 37);
        for r in 0..3 {
            assert_eq!(permanent_along(&m, r), v);
        }
        assert_eq!(determinant(&m), 3 - 30);
    }

    #[test]
    fn odd_pairing_rows_agree() {
        // the row chosen for expansion never matters on repeated-index words
        let words: [&[usize]; 3] = [&[0, 0, 1], &[0, 1, 1, 2], &[2, 2, 2]];
        for w in words {
            let m: Vec<Vec<i64>> = w
                .iter()
                .map(|&i| w.iter().map(|&j| i64::from(i == j)).collect())
                .collect();
            let v = permanent(&m);
            for r in 0..w.len() {
                assert_eq!(permanent_along(&m, r), v);
            }
        }
    }
}
