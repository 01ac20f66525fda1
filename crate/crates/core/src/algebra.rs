//! Lie superalgebras given by structure constants, plus the two Heisenberg
//! families.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::ops::Add;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::superexterior::SuperSpaceDims;
use crate::Rational;

/// The Z₂-degree of a homogeneous element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(bit: u8) -> Option<Parity> {
        match bit {
            0 => Some(Parity::Even),
            1 => Some(Parity::Odd),
            _ => None,
        }
    }

    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }
}

impl Add for Parity {
    type Output = Parity;

    fn add(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub index: usize,
    pub parity: Parity,
}

/// Sparse vector of the algebra: generator index -> coefficient.
pub type Vector = BTreeMap<usize, Rational>;

/// A finite-dimensional Lie superalgebra over the rationals.
///
/// Only brackets `[a_i, a_j]` with `i <= j` are stored; the others follow
/// from super skew-symmetry `[a_j, a_i] = -(-1)^{|i||j|} [a_i, a_j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieSuperalgebra {
    name: String,
    generators: Vec<Generator>,
    brackets: BTreeMap<(usize, usize), Vector>,
    // position of each generator inside its parity class
    slots: Vec<usize>,
    even: Vec<usize>,
    odd: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// An even generator with a nonzero self-bracket; skew-symmetry forces
    /// `c_ii^k = -c_ii^k`.
    EvenSelfBracket { generator: usize },
    /// `c_ij^k != 0` although `|k| != |i| + |j|`.
    Parity { left: usize, right: usize, target: usize },
    /// The super Jacobi sum of a basis triple is not zero.
    Jacobi { a: usize, b: usize, c: usize },
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl LieSuperalgebra {
    /// Creates an abelian algebra on the given `(name, parity)` list.
    pub fn new<S: Into<String>>(name: S, generators: Vec<(String, Parity)>) -> Result<Self> {
        let mut seen = HashSet::new();
        for (g, _) in &generators {
            if !seen.insert(g.clone()) {
                return Err(Error::InvalidParameter(format!("duplicate generator name `{g}`")));
            }
        }
        let generators: Vec<Generator> = generators
            .into_iter()
            .enumerate()
            .map(|(index, (name, parity))| Generator { name, index, parity })
            .collect();
        let mut slots = Vec::with_capacity(generators.len());
        let (mut even, mut odd) = (Vec::new(), Vec::new());
        for g in &generators {
            match g.parity {
                Parity::Even => {
                    slots.push(even.len());
                    even.push(g.index);
                }
                Parity::Odd => {
                    slots.push(odd.len());
                    odd.push(g.index);
                }
            }
        }
        Ok(LieSuperalgebra {
            name: name.into(),
            generators,
            brackets: BTreeMap::new(),
            slots,
            even,
            odd,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    pub fn parity(&self, k: usize) -> Parity {
        self.generators[k].parity
    }

    /// `(dim g_0, dim g_1)`.
    pub fn superdim(&self) -> (usize, usize) {
        (self.even.len(), self.odd.len())
    }

    /// Dimensions of the dual superspace, which indexes the cochain algebra.
    pub fn dual_dims(&self) -> SuperSpaceDims {
        SuperSpaceDims::new(self.even.len(), self.odd.len())
    }

    /// Position of generator `k` among the generators of its parity.
    pub fn slot(&self, k: usize) -> usize {
        self.slots[k]
    }

    pub fn even_generator(&self, slot: usize) -> usize {
        self.even[slot]
    }

    pub fn odd_generator(&self, slot: usize) -> usize {
        self.odd[slot]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    fn check_index(&self, k: usize) -> Result<()> {
        if k < self.generators.len() {
            Ok(())
        } else {
            Err(Error::GeneratorOutOfRange {
                index: k,
                count: self.generators.len(),
            })
        }
    }

    /// Sets `[a_i, a_j]`. For `i > j` the value is converted to the stored
    /// `[a_j, a_i]` through skew-symmetry. Zero coefficients are dropped.
    pub fn set_bracket(&mut self, i: usize, j: usize, value: Vector) -> Result<()> {
        self.check_index(i)?;
        self.check_index(j)?;
        for &k in value.keys() {
            self.check_index(k)?;
        }
        let (lo, hi, flip) = if i <= j {
            (i, j, false)
        } else {
            let sign_plus = self.parity(i).is_odd() && self.parity(j).is_odd();
            (j, i, !sign_plus)
        };
        let stored: Vector = value
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k, if flip { -c } else { c }))
            .collect();
        if stored.is_empty() {
            self.brackets.remove(&(lo, hi));
        } else {
            self.brackets.insert((lo, hi), stored);
        }
        Ok(())
    }

    /// Stored brackets, keyed by `(i, j)` with `i <= j`.
    pub fn stored_brackets(&self) -> &BTreeMap<(usize, usize), Vector> {
        &self.brackets
    }

    /// `[a_i, a_j]` for arbitrary `i, j`.
    pub fn bracket(&self, i: usize, j: usize) -> Vector {
        if i <= j {
            self.brackets.get(&(i, j)).cloned().unwrap_or_default()
        } else {
            let symmetric = self.parity(i).is_odd() && self.parity(j).is_odd();
            match self.brackets.get(&(j, i)) {
                None => Vector::new(),
                Some(v) if symmetric => v.clone(),
                Some(v) => v.iter().map(|(&k, c)| (k, -c.clone())).collect(),
            }
        }
    }

    /// `c_ij^k`.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Rational {
        self.bracket(i, j).remove(&k).unwrap_or_else(Rational::zero)
    }

    /// Bilinear extension of the bracket to sparse vectors.
    pub fn bracket_vectors(&self, a: &Vector, b: &Vector) -> Vector {
        let mut out = Vector::new();
        for (&i, ci) in a {
            for (&j, cj) in b {
                for (k, c) in self.bracket(i, j) {
                    let entry = out.entry(k).or_insert_with(Rational::zero);
                    *entry += c * ci * cj;
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        for (&(i, j), value) in &self.brackets {
            if i == j && !self.parity(i).is_odd() {
                violations.push(Violation::EvenSelfBracket { generator: i });
            }
            let expected = self.parity(i) + self.parity(j);
            for &k in value.keys() {
                if self.parity(k) != expected {
                    violations.push(Violation::Parity {
                        left: i,
                        right: j,
                        target: k,
                    });
                }
            }
        }
        let unit = |k: usize| -> Vector { std::iter::once((k, Rational::one())).collect() };
        let sign = |p: Parity, q: Parity| p.is_odd() && q.is_odd();
        let n = self.dim();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let (pa, pb, pc) = (self.parity(a), self.parity(b), self.parity(c));
                    let mut total = Vector::new();
                    let terms = [
                        (sign(pa, pc), a, self.bracket(b, c)),
                        (sign(pb, pa), b, self.bracket(c, a)),
                        (sign(pc, pb), c, self.bracket(a, b)),
                    ];
                    for (negate, outer, inner) in terms {
                        for (k, v) in self.bracket_vectors(&unit(outer), &inner) {
                            let entry = total.entry(k).or_insert_with(Rational::zero);
                            if negate {
                                *entry -= v;
                            } else {
                                *entry += v;
                            }
                        }
                    }
                    if total.values().any(|v| !v.is_zero()) {
                        violations.push(Violation::Jacobi { a, b, c });
                    }
                }
            }
        }
        ValidationReport { violations }
    }

    pub fn describe(&self, v: &Violation) -> String {
        let name = |k: usize| self.generators[k].name.as_str();
        match *v {
            Violation::EvenSelfBracket { generator } => format!(
                "even generator `{}` has a nonzero self-bracket (skew-symmetry forces it to vanish)",
                name(generator)
            ),
            Violation::Parity { left, right, target } => format!(
                "[{}, {}] has a component along `{}` of the wrong parity",
                name(left),
                name(right),
                name(target)
            ),
            Violation::Jacobi { a, b, c } => {
                format!("super Jacobi identity fails on ({}, {}, {})", name(a), name(b), name(c))
            }
        }
    }

    /// Fails with [`Error::Validation`] listing every violation.
    pub fn ensure_valid(&self) -> Result<()> {
        let report = self.validate();
        if report.is_valid() {
            return Ok(());
        }
        let lines: Vec<String> = report.violations.iter().map(|v| self.describe(v)).collect();
        Err(Error::Validation(lines.join("\n")))
    }
}

impl fmt::Display for LieSuperalgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (e, o) = self.superdim();
        write!(f, "{} (superdim ({e}, {o}))", self.name)
    }
}

fn unit_result(k: usize) -> Vector {
    std::iter::once((k, Rational::one())).collect()
}

/// The Heisenberg superalgebra with even center, generators ordered
/// `z, x_1..x_{2n} | y_1..y_m`, relations `[x_i, x_{n+i}] = z`, `[y_j, y_j] = z`.
pub fn make_heisenberg_even(n: usize, m: usize) -> Result<LieSuperalgebra> {
    if n < 1 || m < 1 {
        return Err(Error::InvalidParameter(format!(
            "even-center family needs n >= 1 and m >= 1, got n = {n}, m = {m}"
        )));
    }
    let mut gens = vec![("z".to_string(), Parity::Even)];
    gens.extend((1..=2 * n).map(|i| (format!("x{i}"), Parity::Even)));
    gens.extend((1..=m).map(|j| (format!("y{j}"), Parity::Odd)));
    let mut g = LieSuperalgebra::new(format!("h_{{{n},{m}}}"), gens)?;
    for i in 1..=n {
        g.set_bracket(i, n + i, unit_result(0))?;
    }
    for j in 0..m {
        let y = 1 + 2 * n + j;
        g.set_bracket(y, y, unit_result(0))?;
    }
    g.ensure_valid()?;
    Ok(g)
}

/// The Heisenberg superalgebra with odd center, generators ordered
/// `x_1..x_n | y_1..y_n, z`, relations `[x_i, y_i] = z`.
pub fn make_heisenberg_odd(n: usize) -> Result<LieSuperalgebra> {
    if n < 1 {
        return Err(Error::InvalidParameter(format!(
            "odd-center family needs n >= 1, got n = {n}"
        )));
    }
    let mut gens: Vec<(String, Parity)> = (1..=n).map(|i| (format!("x{i}"), Parity::Even)).collect();
    gens.extend((1..=n).map(|i| (format!("y{i}"), Parity::Odd)));
    gens.push(("z".to_string(), Parity::Odd));
    let z = 2 * n;
    let mut g = LieSuperalgebra::new(format!("h_{n}"), gens)?;
    for i in 0..n {
        g.set_bracket(i, n + i, unit_result(z))?;
    }
    g.ensure_valid()?;
    Ok(g)
}
