//! Closed-form Betti numbers for the Heisenberg superalgebras.
//!
//! Nothing in here touches matrices; the values are meant to be compared
//! against the rank engine, not derived from it.

use serde::{Deserialize, Serialize};

/// Which closed form produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// Even-center Betti numbers.
    EvenCenter,
    /// Kernel dimension of right multiplication by `τ`.
    KernelPsi,
    /// Odd-center Betti numbers assembled from the cocycle decomposition.
    OddCenterAssembled,
    /// Alternative odd-center closed form, evaluated term by term as stated.
    OddCenterDisplayed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaValue {
    pub value: i64,
    pub provenance: Provenance,
}

/// `C(a, b)`, zero when `b < 0` or `b > a`.
pub fn binomial(a: i64, b: i64) -> i64 {
    if a < 0 || b < 0 || b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: i128 = 1;
    for k in 0..b {
        acc = acc * (a - k) as i128 / (k + 1) as i128;
    }
    acc as i64
}

/// `s_m(p)`: dimension of the degree-`p` symmetric power of an
/// `m`-dimensional space.
pub fn sym_dim(m: i64, p: i64) -> i64 {
    if p < 0 {
        0
    } else if p == 0 {
        1
    } else {
        binomial(m + p - 1, p)
    }
}

fn delta(a: i64, b: i64) -> i64 {
    i64::from(a == b)
}

fn delta_q_mod4_2_or_3(q: i64) -> i64 {
    i64::from(matches!(q.rem_euclid(4), 2 | 3))
}

/// `dim Λ̄^k` of the `(n | n)` superspace spanned by the `e_i` and `o_i`.
fn dim_h(n: i64, k: i64) -> i64 {
    superdim_graded(n, n, k)
}

fn superdim_graded(even: i64, odd: i64, q: i64) -> i64 {
    if q < 0 {
        return 0;
    }
    (0..=q).map(|p| binomial(even, q - p) * sym_dim(odd, p)).sum()
}

/// Betti numbers of the even-center family `h_{n,m}`.
pub fn dim_h_even(n: i64, m: i64, q: i64) -> i64 {
    if q < 0 {
        return 0;
    }
    let head: i64 = (0..q)
        .map(|p| (binomial(2 * n, q - p) - binomial(2 * n, q - 2 - p)) * sym_dim(m, p))
        .sum();
    head + sym_dim(m, q)
}

/// Kernel dimension of `α ↦ α ∧ τ` on degree-`t` elements free of `z*`;
/// does not depend on the power of `z*` carried by `τ`.
pub fn ker_psi_dim(t: i64, n: i64) -> i64 {
    if t < 0 {
        return 0;
    }
    let alternating: i64 = (1..=t / 2)
        .map(|i| {
            let sign = if i % 2 == 1 { 1 } else { -1 };
            sign * (dim_h(n, t - 2 * i) - delta(t - 2 * i, n))
        })
        .sum();
    alternating + delta(t, n)
}

/// Betti numbers of the odd-center family `h_n` assembled from
/// `dim H^q = dim Z^q + dim Z^{q-1} - dim C^{q-1}` and the splitting of
/// cocycles by powers of `z*`.
pub fn dim_h_odd_proof(n: i64, q: i64) -> i64 {
    if q < 0 {
        return 0;
    }
    let base = dim_h(n, q) + dim_h(n, q - 1) - superdim_graded(n, n + 1, q - 1);
    let top: i64 = (1..=q).map(|i| ker_psi_dim(q - i, n)).sum();
    let below: i64 = (1..q).map(|i| ker_psi_dim(q - 1 - i, n)).sum();
    base + top + below
}

/// Literal transcription of the published odd-center closed form. Kept for
/// comparison only; see the verify harness for where it deviates.
pub fn dim_h_odd_displayed(n: i64, q: i64) -> i64 {
    if q < 0 {
        return 0;
    }
    let s = sym_dim;
    let c = binomial;
    let head: i64 = (0..q)
        .map(|p| c(n + 1, q - p) * s(n, p) - c(n, q - p) * s(n + 1, p))
        .sum::<i64>()
        + s(n, q);
    let upper = q / 4 + delta_q_mod4_2_or_3(q);
    let tail: i64 = (1..=upper)
        .map(|i| {
            let r = q - 4 * i;
            let inner: i64 = (0..r).map(|p| c(n + 2, r + 1 - p) * s(n, p)).sum();
            inner + (n + 2) * s(n, r) + s(n, r + 1) + delta(r + 1, n) + 2 * delta(r + 2, n) + delta(r + 3, n)
        })
        .sum();
    head + tail
}

pub fn even_value(n: i64, m: i64, q: i64) -> FormulaValue {
    FormulaValue {
        value: dim_h_even(n, m, q),
        provenance: Provenance::EvenCenter,
    }
}

pub fn odd_proof_value(n: i64, q: i64) -> FormulaValue {
    FormulaValue {
        value: dim_h_odd_proof(n, q),
        provenance: Provenance::OddCenterAssembled,
    }
}

pub fn odd_displayed_value(n: i64, q: i64) -> FormulaValue {
    FormulaValue {
        value: dim_h_odd_displayed(n, q),
        provenance: Provenance::OddCenterDisplayed,
    }
}

pub fn ker_psi_value(t: i64, n: i64) -> FormulaValue {
    FormulaValue {
        value: ker_psi_dim(t, n),
        provenance: Provenance::KernelPsi,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_edges() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(4, -1), 0);
        assert_eq!(binomial(4, 5), 0);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(30, 15), 155_117_520);
    }

    #[test]
    fn symmetric_dims() {
        for p in 0..10 {
            assert_eq!(sym_dim(1, p), 1);
        }
        assert_eq!(sym_dim(2, 2), 3);
        assert_eq!(sym_dim(3, -1), 0);
        assert_eq!(sym_dim(0, 0), 1);
        assert_eq!(sym_dim(0, 3), 0);
    }

    #[test]
    fn even_center_values() {
        assert_eq!(dim_h_even(1, 1, 1), 3);
        assert_eq!(dim_h_even(1, 1, 2), 3);
        for (n, m) in [(1, 1), (2, 3), (3, 2)] {
            assert_eq!(dim_h_even(n, m, 0), 1);
            assert_eq!(dim_h_even(n, m, 1), 2 * n + m);
        }
    }

    #[test]
    fn kernel_psi_values() {
        assert_eq!(ker_psi_dim(1, 1), 1);
        assert_eq!(ker_psi_dim(0, 1), 0);
        assert_eq!(ker_psi_dim(0, 3), 0);
        assert_eq!(ker_psi_dim(2, 1), 1);
        assert_eq!(ker_psi_dim(-2, 1), 0);
    }

    #[test]
    fn odd_center_assembled_values() {
        assert_eq!(dim_h_odd_proof(1, 0), 1);
        assert_eq!(dim_h_odd_proof(3, 0), 1);
        assert_eq!(dim_h_odd_proof(1, 1), 2);
        assert_eq!(dim_h_odd_proof(1, 2), 2);
    }

    #[test]
    fn odd_center_displayed_values() {
        assert_eq!(dim_h_odd_displayed(1, 0), 1);
        assert_eq!(dim_h_odd_displayed(1, 1), 2);
        // differs from the assembled value (2) at this point
        assert_eq!(dim_h_odd_displayed(1, 2), 3);
    }
}
