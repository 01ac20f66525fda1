//! Sparse exact matrices over the rationals and their rank.
//!
//! Rank is computed by fraction-free elimination over the integers: each row
//! is scaled to a primitive integer vector, and reducing a row against a
//! pivot row uses only integer multiples followed by content removal, so no
//! rational arithmetic happens inside the elimination loop.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::Rational;

/// Row-major sparse rational matrix. Only nonzero entries are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BTreeMap<usize, Rational>>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![BTreeMap::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_dense(rows: &[Vec<Rational>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged dense matrix");
            for (c, v) in row.iter().enumerate() {
                m.set(r, c, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(BTreeMap::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BTreeMap::is_empty)
    }

    /// Overwrites an entry; storing zero removes it.
    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        assert!(r < self.rows && c < self.cols, "entry ({r}, {c}) out of range");
        if v.is_zero() {
            self.data[r].remove(&c);
        } else {
            self.data[r].insert(c, v);
        }
    }

    /// Adds to an entry.
    pub fn add_to(&mut self, r: usize, c: usize, v: &Rational) {
        assert!(r < self.rows && c < self.cols, "entry ({r}, {c}) out of range");
        let row = &mut self.data[r];
        let entry = row.entry(c).or_insert_with(Rational::zero);
        *entry += v;
        if entry.is_zero() {
            row.remove(&c);
        }
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        self.data[r].get(&c).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn row(&self, r: usize) -> &BTreeMap<usize, Rational> {
        &self.data[r]
    }

    /// Nonzero entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(&c, v)| (r, c, v)))
    }

    pub fn column(&self, c: usize) -> BTreeMap<usize, Rational> {
        self.data
            .iter()
            .enumerate()
            .filter_map(|(r, row)| row.get(&c).map(|v| (r, v.clone())))
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for (r, c, v) in self.entries() {
            t.data[c].insert(r, v.clone());
        }
        t
    }

    pub fn mul(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for (r, row) in self.data.iter().enumerate() {
            for (&k, a) in row {
                for (&c, b) in &other.data[k] {
                    out.add_to(r, c, &(a * b));
                }
            }
        }
        Ok(out)
    }

    /// Horizontal concatenation.
    pub fn hstack(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let mut out = Self::zeros(self.rows, self.cols + other.cols);
        for (r, c, v) in self.entries() {
            out.data[r].insert(c, v.clone());
        }
        for (r, c, v) in other.entries() {
            out.data[r].insert(self.cols + c, v.clone());
        }
        Ok(out)
    }

    /// Applies `row_perm[r]` / `col_perm[c]` as the new position of row `r` /
    /// column `c`.
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> RationalMatrix {
        let mut out = Self::zeros(self.rows, self.cols);
        for (r, c, v) in self.entries() {
            out.data[row_perm[r]].insert(col_perm[c], v.clone());
        }
        out
    }

    pub fn scale_row(&mut self, r: usize, factor: &Rational) {
        assert!(!factor.is_zero(), "scaling by zero changes rank");
        for v in self.data[r].values_mut() {
            *v *= factor;
        }
    }

    /// Debug dump: header `rows cols nnz`, then `row col num/den` per entry.
    pub fn dump(&self) -> String {
        let mut out = format!("{} {} {}\n", self.rows, self.cols, self.nnz());
        for (r, c, v) in self.entries() {
            let _ = writeln!(out, "{r} {c} {}/{}", v.numer(), v.denom());
        }
        out
    }

    pub fn parse_dump(text: &str) -> Result<RationalMatrix> {
        let bad = |line: usize, msg: &str| Error::Parse(format!("line {line}: {msg}"));
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (_, header) = lines.next().ok_or_else(|| bad(1, "missing header"))?;
        let nums: Vec<usize> = header
            .split_whitespace()
            .map(str::parse)
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad(1, "header must be `rows cols nnz`"))?;
        let [rows, cols, nnz] = nums[..] else {
            return Err(bad(1, "header must be `rows cols nnz`"));
        };
        let mut m = Self::zeros(rows, cols);
        let mut count = 0;
        for (i, line) in lines {
            let parts: Vec<&str> = line.split_whitespace().collect();
            let [r, c, v] = parts[..] else {
                return Err(bad(i + 1, "expected `row col num/den`"));
            };
            let r: usize = r.parse().map_err(|_| bad(i + 1, "bad row index"))?;
            let c: usize = c.parse().map_err(|_| bad(i + 1, "bad column index"))?;
            if r >= rows || c >= cols {
                return Err(bad(i + 1, "index out of range"));
            }
            let v = parse_rational(v).ok_or_else(|| bad(i + 1, "bad rational"))?;
            m.set(r, c, v);
            count += 1;
        }
        if count != nnz {
            return Err(Error::Parse(format!("header announced {nnz} entries, found {count}")));
        }
        Ok(m)
    }
}

/// Parses `p/q` or an integer.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(Rational::new(p, q))
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}

/// Canonical string form of a rational: `p` or `p/q`.
pub fn format_rational(v: &Rational) -> String {
    if v.is_integer() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

type IntRow = Vec<(usize, BigInt)>;

fn make_primitive(row: &mut IntRow) {
    let mut g = BigInt::zero();
    for (_, v) in row.iter() {
        g = g.gcd(v);
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for (_, v) in row.iter_mut() {
        *v /= &g;
    }
}

/// `a*x - b*y` on sorted sparse rows; the leading entries cancel.
fn combine(x: &IntRow, a: &BigInt, y: &IntRow, b: &BigInt) -> IntRow {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        if j == y.len() || (i < x.len() && x[i].0 < y[j].0) {
            out.push((x[i].0, a * &x[i].1));
            i += 1;
        } else if i == x.len() || y[j].0 < x[i].0 {
            out.push((y[j].0, -(b * &y[j].1)));
            j += 1;
        } else {
            let v = a * &x[i].1 - b * &y[j].1;
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Exact rank over the rationals.
pub fn rank(matrix: &RationalMatrix) -> usize {
    if matrix.rows == 0 || matrix.cols == 0 {
        return 0;
    }
    // Static ordering as a fill-in estimate: sparse columns become leading
    // positions first, and sparse rows are reduced first.
    let mut col_count = vec![0usize; matrix.cols];
    for (_, c, _) in matrix.entries() {
        col_count[c] += 1;
    }
    let mut order: Vec<usize> = (0..matrix.cols).collect();
    order.sort_by_key(|&c| (col_count[c], c));
    let mut position = vec![0usize; matrix.cols];
    for (p, &c) in order.iter().enumerate() {
        position[c] = p;
    }

    let mut rows: Vec<IntRow> = matrix
        .data
        .iter()
        .filter(|row| !row.is_empty())
        .map(|row| {
            let lcm = row.values().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
            let mut ir: IntRow = row
                .iter()
                .map(|(&c, v)| (position[c], (v * Rational::from_integer(lcm.clone())).to_integer()))
                .collect();
            ir.sort_by_key(|e| e.0);
            make_primitive(&mut ir);
            ir
        })
        .collect();
    rows.sort_by_key(Vec::len);

    let mut pivots: Vec<Option<IntRow>> = vec![None; matrix.cols];
    let mut rank = 0;
    for mut row in rows {
        while let Some((lead, coeff)) = row.first().cloned() {
            match &pivots[lead] {
                Some(pivot) => {
                    let p = &pivot[0].1;
                    let g = p.gcd(&coeff);
                    let (mut a, mut b) = (p / &g, &coeff / &g);
                    if a.is_negative() {
                        a = -a;
                        b = -b;
                    }
                    row = combine(&row, &a, pivot, &b);
                    make_primitive(&mut row);
                }
                None => {
                    pivots[lead] = Some(row);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

/// `cols - rank`.
pub fn kernel_dim(matrix: &RationalMatrix) -> usize {
    matrix.cols - rank(matrix)
}
