//! Algebra definition files and report serialization.
//!
//! An algebra file is a TOML document:
//!
//! ```toml
//! name = "h_1"
//! generators = [
//!   { name = "x1", parity = 0 },
//!   { name = "y1", parity = 1 },
//!   { name = "z", parity = 1 },
//! ]
//!
//! [[brackets]]
//! left = "x1"
//! right = "y1"
//! result = { "z" = "1" }
//! ```
//!
//! Coefficients are integers or `"p/q"` strings. Each unordered pair may be
//! listed once; the other order follows from skew-symmetry.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use serde::Deserialize;
use toml::Spanned;

use crate::algebra::{LieSuperalgebra, Parity, Vector};
use crate::cohomology::{CohomologyReport, Method};
use crate::error::{Error, Result};
use crate::linalg::{format_rational, parse_rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraDoc {
    name: String,
    generators: Vec<GeneratorDoc>,
    #[serde(default)]
    brackets: Vec<BracketDoc>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GeneratorDoc {
    name: Spanned<String>,
    parity: Spanned<i64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BracketDoc {
    left: Spanned<String>,
    right: Spanned<String>,
    result: Spanned<BTreeMap<String, Spanned<Coefficient>>>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Coefficient {
    Int(i64),
    Text(String),
}

fn line_of(text: &str, offset: usize) -> usize {
    text[..offset.min(text.len())].matches('\n').count() + 1
}

/// Parses and validates an algebra file. Syntax problems are
/// [`Error::Parse`], axiom violations [`Error::Validation`].
pub fn parse_algebra(text: &str) -> Result<LieSuperalgebra> {
    let doc: AlgebraDoc = toml::from_str(text).map_err(|e| {
        let line = e.span().map(|s| line_of(text, s.start));
        match line {
            Some(l) => Error::Parse(format!("line {l}: {}", e.message())),
            None => Error::Parse(e.message().to_string()),
        }
    })?;
    let at =
        |span: std::ops::Range<usize>, msg: String| Error::Parse(format!("line {}: {msg}", line_of(text, span.start)));

    let mut gens = Vec::with_capacity(doc.generators.len());
    let mut seen = HashSet::new();
    for g in &doc.generators {
        let name = g.name.get_ref();
        if !seen.insert(name.clone()) {
            return Err(at(g.name.span(), format!("duplicate generator `{name}`")));
        }
        let parity = u8::try_from(*g.parity.get_ref())
            .ok()
            .and_then(Parity::from_bit)
            .ok_or_else(|| at(g.parity.span(), format!("parity of `{name}` must be 0 or 1")))?;
        gens.push((name.clone(), parity));
    }
    let mut algebra = LieSuperalgebra::new(doc.name, gens)?;
    let lookup = |s: &Spanned<String>| -> Result<usize> {
        algebra
            .index_of(s.get_ref())
            .ok_or_else(|| at(s.span(), format!("unknown generator `{}`", s.get_ref())))
    };

    let mut pairs = HashSet::new();
    let mut parsed = Vec::with_capacity(doc.brackets.len());
    for b in &doc.brackets {
        let (i, j) = (lookup(&b.left)?, lookup(&b.right)?);
        if !pairs.insert((i.min(j), i.max(j))) {
            return Err(at(
                b.left.span(),
                format!("bracket [{}, {}] listed twice", b.left.get_ref(), b.right.get_ref()),
            ));
        }
        let mut value = Vector::new();
        for (target, coeff) in b.result.get_ref() {
            let k = algebra
                .index_of(target)
                .ok_or_else(|| at(b.result.span(), format!("unknown generator `{target}`")))?;
            let c = match coeff.get_ref() {
                Coefficient::Int(v) => Some(crate::Rational::from_integer((*v).into())),
                Coefficient::Text(s) => parse_rational(s),
            }
            .ok_or_else(|| at(coeff.span(), format!("malformed rational for `{target}`")))?;
            value.insert(k, c);
        }
        parsed.push((i, j, value));
    }
    for (i, j, value) in parsed {
        algebra.set_bracket(i, j, value)?;
    }
    algebra.ensure_valid()?;
    Ok(algebra)
}

fn quoted(s: &str) -> String {
    toml::Value::String(s.to_string()).to_string()
}

/// Writes an algebra in the file format read by [`parse_algebra`].
pub fn emit_algebra(algebra: &LieSuperalgebra) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "name = {}", quoted(algebra.name()));
    out.push_str("generators = [\n");
    for g in algebra.generators() {
        let _ = writeln!(out, "  {{ name = {}, parity = {} }},", quoted(&g.name), g.parity.bit());
    }
    out.push_str("]\n");
    let name = |k: usize| quoted(&algebra.generators()[k].name);
    for (&(i, j), value) in algebra.stored_brackets() {
        let _ = write!(
            out,
            "\n[[brackets]]\nleft = {}\nright = {}\nresult = {{ ",
            name(i),
            name(j)
        );
        let parts: Vec<String> = value
            .iter()
            .map(|(&k, c)| format!("{} = {}", name(k), quoted(&format_rational(c))))
            .collect();
        let _ = writeln!(out, "{} }}", parts.join(", "));
    }
    out
}

pub const CSV_HEADER: [&str; 7] = [
    "algebra",
    "q",
    "dim_cochain",
    "dim_cocycles",
    "dim_coboundaries",
    "dim_cohomology",
    "method",
];

pub fn emit_report(reports: &[CohomologyReport], format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(reports).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(CSV_HEADER).expect("in-memory write");
            for r in reports {
                w.write_record([
                    r.algebra_name.clone(),
                    r.q.to_string(),
                    r.dim_cochain.to_string(),
                    r.dim_cocycles.to_string(),
                    r.dim_coboundaries.to_string(),
                    r.dim_cohomology.to_string(),
                    r.method.to_string(),
                ])
                .expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
        }
        Format::Text => text_table(reports),
    }
}

fn text_table(reports: &[CohomologyReport]) -> String {
    let header = ["algebra", "q", "dim C^q", "dim Z^q", "dim B^q", "dim H^q", "method"];
    let rows: Vec<[String; 7]> = reports
        .iter()
        .map(|r| {
            [
                r.algebra_name.clone(),
                r.q.to_string(),
                r.dim_cochain.to_string(),
                r.dim_cocycles.to_string(),
                r.dim_coboundaries.to_string(),
                r.dim_cohomology.to_string(),
                r.method.to_string(),
            ]
        })
        .collect();
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &[String]| {
        let parts: Vec<String> = cells
            .iter()
            .zip(&widths)
            .enumerate()
            .map(|(i, (c, &w))| {
                let pad = w - c.chars().count();
                // names and methods left-aligned, numbers right-aligned
                if i == 0 || i == 6 {
                    format!("{c}{}", " ".repeat(pad))
                } else {
                    format!("{}{c}", " ".repeat(pad))
                }
            })
            .collect();
        out.push_str(parts.join("  ").trim_end());
        out.push('\n');
    };
    line(&header.map(String::from));
    for row in &rows {
        line(row);
    }
    out
}

pub fn parse_reports_json(text: &str) -> Result<Vec<CohomologyReport>> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("line {}: {e}", e.line())))
}

pub fn parse_reports_csv(text: &str) -> Result<Vec<CohomologyReport>> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let header = reader.headers().map_err(|e| Error::Parse(e.to_string()))?;
    if header.iter().ne(CSV_HEADER) {
        return Err(Error::Parse("unexpected csv header".into()));
    }
    let mut out = Vec::new();
    for (i, rec) in reader.records().enumerate() {
        let line = i + 2;
        let rec = rec.map_err(|e| Error::Parse(format!("line {line}: {e}")))?;
        let num = |k: usize| -> Result<u64> {
            rec[k]
                .parse()
                .map_err(|_| Error::Parse(format!("line {line}: bad number in column {}", CSV_HEADER[k])))
        };
        out.push(CohomologyReport {
            algebra_name: rec[0].to_string(),
            q: rec[1]
                .parse()
                .map_err(|_| Error::Parse(format!("line {line}: bad q")))?,
            dim_cochain: num(2)?,
            dim_cocycles: num(3)?,
            dim_coboundaries: num(4)?,
            dim_cohomology: num(5)?,
            method: rec[6].parse::<Method>()?,
        });
    }
    Ok(out)
}
