//! Betti numbers from ranks of coboundary matrices, and the same tables
//! produced from the closed forms.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::LieSuperalgebra;
use crate::differential::Differential;
use crate::error::{Error, Result};
use crate::formulas;
use crate::linalg::rank;
use crate::superexterior::{graded_dim, SuperSpaceDims};

pub const DEFAULT_COLUMN_CAP: usize = 5_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub column_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            column_cap: DEFAULT_COLUMN_CAP,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Rank,
    FormulaEven,
    FormulaOddProof,
    FormulaOddDisplayed,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Rank => "rank",
            Method::FormulaEven => "formula-even",
            Method::FormulaOddProof => "formula-odd-proof",
            Method::FormulaOddDisplayed => "formula-odd-displayed",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [
            Method::Rank,
            Method::FormulaEven,
            Method::FormulaOddProof,
            Method::FormulaOddDisplayed,
        ]
        .into_iter()
        .find(|m| m.as_str() == s)
        .ok_or_else(|| Error::Parse(format!("unknown method `{s}`")))
    }
}

/// One row of a Betti table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyReport {
    pub algebra_name: String,
    pub q: i64,
    pub dim_cochain: u64,
    pub dim_cocycles: u64,
    pub dim_coboundaries: u64,
    pub dim_cohomology: u64,
    pub method: Method,
}

impl CohomologyReport {
    fn zero(name: &str, q: i64, method: Method) -> Self {
        CohomologyReport {
            algebra_name: name.to_string(),
            q,
            dim_cochain: 0,
            dim_cocycles: 0,
            dim_coboundaries: 0,
            dim_cohomology: 0,
            method,
        }
    }

    /// Builds a report from cochain, cocycle and cohomology dimensions,
    /// rejecting combinations that cannot come from a complex.
    fn from_z_and_h(name: &str, q: i64, cochain: i64, cocycles: i64, cohomology: i64, method: Method) -> Result<Self> {
        let coboundaries = cocycles - cohomology;
        if cohomology < 0 || coboundaries < 0 || cocycles > cochain {
            return Err(Error::Inconsistent(format!(
                "{name}, q = {q}, {method}: C = {cochain}, Z = {cocycles}, H = {cohomology}"
            )));
        }
        Ok(CohomologyReport {
            algebra_name: name.to_string(),
            q,
            dim_cochain: cochain as u64,
            dim_cocycles: cocycles as u64,
            dim_coboundaries: coboundaries as u64,
            dim_cohomology: cohomology as u64,
            method,
        })
    }
}

fn check_cap(algebra: &LieSuperalgebra, q: i64, limits: Limits) -> Result<()> {
    let columns = graded_dim(algebra.dual_dims(), q) as usize;
    if columns > limits.column_cap {
        return Err(Error::ResourceLimit {
            columns,
            cap: limits.column_cap,
            context: format!("{}, q = {q}", algebra.name()),
        });
    }
    Ok(())
}

/// `rank(d_q)` for every `q` in `0..=q_max`.
fn coboundary_ranks(d: &Differential<'_>, q_max: i64) -> Vec<u64> {
    (0..=q_max)
        .into_par_iter()
        .map(|q| rank(&d.matrix(q).matrix) as u64)
        .collect()
}

pub fn cohomology_dims(algebra: &LieSuperalgebra, q: i64, limits: Limits) -> Result<CohomologyReport> {
    if q < 0 {
        return Ok(CohomologyReport::zero(algebra.name(), q, Method::Rank));
    }
    check_cap(algebra, q, limits)?;
    let d = Differential::new(algebra)?;
    let rank_q = rank(&d.matrix(q).matrix) as u64;
    let rank_prev = if q == 0 {
        0
    } else {
        rank(&d.matrix(q - 1).matrix) as u64
    };
    let cochain = graded_dim(algebra.dual_dims(), q);
    let cocycles = cochain - rank_q;
    Ok(CohomologyReport {
        algebra_name: algebra.name().to_string(),
        q,
        dim_cochain: cochain,
        dim_cocycles: cocycles,
        dim_coboundaries: rank_prev,
        dim_cohomology: cocycles - rank_prev,
        method: Method::Rank,
    })
}

/// Rank-based reports for `q = 0..=q_max`. Every `d_q` is built once.
///
/// Each row is cross-checked against `dim H^q = dim Z^q + dim Z^{q-1} -
/// dim C^{q-1}`.
pub fn betti_table(algebra: &LieSuperalgebra, q_max: i64, limits: Limits) -> Result<Vec<CohomologyReport>> {
    if q_max < 0 {
        return Ok(Vec::new());
    }
    for q in 0..=q_max {
        check_cap(algebra, q, limits)?;
    }
    let d = Differential::new(algebra)?;
    let ranks = coboundary_ranks(&d, q_max);
    let dims = algebra.dual_dims();
    let mut reports = Vec::with_capacity(ranks.len());
    for q in 0..=q_max {
        let cochain = graded_dim(dims, q);
        let cocycles = cochain - ranks[q as usize];
        let coboundaries = if q == 0 { 0 } else { ranks[q as usize - 1] };
        let cohomology = cocycles - coboundaries;
        let prev_cocycles = if q == 0 {
            0
        } else {
            graded_dim(dims, q - 1) - ranks[q as usize - 1]
        };
        let alt = cocycles as i64 + prev_cocycles as i64 - graded_dim(dims, q - 1) as i64;
        if alt != cohomology as i64 {
            return Err(Error::Inconsistent(format!(
                "{}: q = {q}: rank route gives {cohomology}, cocycle identity gives {alt}",
                algebra.name()
            )));
        }
        reports.push(CohomologyReport {
            algebra_name: algebra.name().to_string(),
            q,
            dim_cochain: cochain,
            dim_cocycles: cocycles,
            dim_coboundaries: coboundaries,
            dim_cohomology: cohomology,
            method: Method::Rank,
        });
    }
    Ok(reports)
}

pub fn even_family_name(n: usize, m: usize) -> String {
    format!("h_{{{n},{m}}}")
}

pub fn odd_family_name(n: usize) -> String {
    format!("h_{n}")
}

/// Closed-form table for `h_{n,m}`; cocycles are the `z*`-free cochains.
pub fn formula_table_even(n: usize, m: usize, q_max: i64) -> Result<Vec<CohomologyReport>> {
    let name = even_family_name(n, m);
    let cochains = SuperSpaceDims::new(2 * n + 1, m);
    let z_free = SuperSpaceDims::new(2 * n, m);
    (0..=q_max)
        .map(|q| {
            CohomologyReport::from_z_and_h(
                &name,
                q,
                graded_dim(cochains, q) as i64,
                graded_dim(z_free, q) as i64,
                formulas::dim_h_even(n as i64, m as i64, q),
                Method::FormulaEven,
            )
        })
        .collect()
}

/// `dim Z^q(h_n)` from the `z*`-power splitting and the kernel formula.
pub fn odd_cocycle_formula(n: usize, q: i64) -> i64 {
    let z_free = graded_dim(SuperSpaceDims::new(n, n), q) as i64;
    z_free + (1..=q).map(|l| formulas::ker_psi_dim(q - l, n as i64)).sum::<i64>()
}

/// Closed-form table for `h_n`, using either the assembled or the displayed
/// odd-center formula.
pub fn formula_table_odd(n: usize, q_max: i64, method: Method) -> Result<Vec<CohomologyReport>> {
    let name = odd_family_name(n);
    let cochains = SuperSpaceDims::new(n, n + 1);
    let value: fn(i64, i64) -> i64 = match method {
        Method::FormulaOddProof => formulas::dim_h_odd_proof,
        Method::FormulaOddDisplayed => formulas::dim_h_odd_displayed,
        other => return Err(Error::InvalidParameter(format!("{other} is not an odd-center formula"))),
    };
    (0..=q_max)
        .map(|q| {
            CohomologyReport::from_z_and_h(
                &name,
                q,
                graded_dim(cochains, q) as i64,
                odd_cocycle_formula(n, q),
                value(n as i64, q),
                method,
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{make_heisenberg_even, make_heisenberg_odd};

    fn h_column(reports: &[CohomologyReport]) -> Vec<u64> {
        reports.iter().map(|r| r.dim_cohomology).collect()
    }

    #[test]
    fn degree_zero() {
        let g = make_heisenberg_even(2, 1).unwrap();
        let r = cohomology_dims(&g, 0, Limits::default()).unwrap();
        assert_eq!(
            (r.dim_cochain, r.dim_cocycles, r.dim_coboundaries, r.dim_cohomology),
            (1, 1, 0, 1)
        );
        assert_eq!(betti_table(&g, 0, Limits::default()).unwrap(), vec![r]);
        let neg = cohomology_dims(&g, -1, Limits::default()).unwrap();
        assert_eq!(neg.dim_cochain, 0);
    }

    #[test]
    fn small_tables() {
        let g = make_heisenberg_even(1, 1).unwrap();
        assert_eq!(h_column(&betti_table(&g, 2, Limits::default()).unwrap()), [1, 3, 3]);
        assert_eq!(cohomology_dims(&g, 1, Limits::default()).unwrap().dim_cohomology, 3);
        let h = make_heisenberg_odd(1).unwrap();
        let table = betti_table(&h, 2, Limits::default()).unwrap();
        assert_eq!(h_column(&table), [1, 2, 2]);
        assert_eq!((table[2].dim_cocycles, table[2].dim_coboundaries), (3, 1));
    }

    #[test]
    fn resource_refusal() {
        let g = make_heisenberg_even(1, 1).unwrap();
        let err = betti_table(&g, 3, Limits { column_cap: 5 }).unwrap_err();
        assert!(matches!(err, Error::ResourceLimit { columns: 7, cap: 5, .. }), "{err}");
    }

    #[test]
    fn formula_tables_agree_on_small_cases() {
        let g = make_heisenberg_even(1, 2).unwrap();
        let rank_rows = betti_table(&g, 4, Limits::default()).unwrap();
        let formula_rows = formula_table_even(1, 2, 4).unwrap();
        for (a, b) in rank_rows.iter().zip(&formula_rows) {
            assert_eq!(
                (a.dim_cochain, a.dim_cocycles, a.dim_coboundaries, a.dim_cohomology),
                (b.dim_cochain, b.dim_cocycles, b.dim_coboundaries, b.dim_cohomology)
            );
        }
        assert!(formula_table_odd(1, 3, Method::Rank).is_err());
    }
}
