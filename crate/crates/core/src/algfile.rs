//! Text formats for superalgebras and Lie superalgebras.
//!
//! Algebra documents are line oriented:
//!
//! ```text
//! # the Grassmann algebra on one generator
//! name grassmann1
//! field Q
//! basis one:even th:odd
//! unit one
//! mul th th = 0*one        # may be omitted: missing products are zero
//! ```
//!
//! Products with the unit may be omitted and are filled in. Lie exports use
//! `lie`, `field`, `basis` and one `[x, y] = c*z + ...` line per nonzero
//! bracket with `x` not after `y`.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::lie::FinLieSuper;
use crate::linear::{parse_ratio, Accumulator, Field, FieldSpec, PrimeField, Rationals, SparseVec};
use crate::parity::{koszul, Parity};
use crate::superalgebra::SuperAlgebra;

/// A superalgebra over a field chosen at runtime.
#[derive(Debug, Clone)]
pub enum AnyAlgebra {
    Rational(SuperAlgebra<Rationals>),
    Prime(SuperAlgebra<PrimeField>),
}

impl AnyAlgebra {
    pub fn name(&self) -> &str {
        match self {
            AnyAlgebra::Rational(a) => a.name(),
            AnyAlgebra::Prime(a) => a.name(),
        }
    }

    pub fn field_spec(&self) -> FieldSpec {
        match self {
            AnyAlgebra::Rational(a) => a.field().spec(),
            AnyAlgebra::Prime(a) => a.field().spec(),
        }
    }
}

/// Runs `$body` with `$a` bound to the concrete algebra inside an [`AnyAlgebra`].
#[macro_export]
macro_rules! with_algebra {
    ($any:expr, $a:ident => $body:expr) => {
        match $any {
            $crate::algfile::AnyAlgebra::Rational($a) => $body,
            $crate::algfile::AnyAlgebra::Prime($a) => $body,
        }
    };
}

fn perr(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

/// Whitespace-separated tokens with 1-based columns, comments removed.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices().chain(std::iter::once((line.len(), ' '))) {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s, &line[s..i]));
            }
        } else if start.is_none() {
            if ch == '#' {
                break;
            }
            start = Some(i);
        }
    }
    out.into_iter().map(|(s, t)| (line[..s].chars().count() + 1, t)).collect()
}

fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn parse_parity(s: &str) -> Option<Parity> {
    match s {
        "even" => Some(Parity::Even),
        "odd" => Some(Parity::Odd),
        _ => None,
    }
}

/// `c*name`, with `c` an integer or `p/q`.
fn parse_term(text: &str) -> Option<(BigInt, BigInt, &str)> {
    let (c, name) = text.split_once('*')?;
    let (num, den) = parse_ratio(c)?;
    Some((num, den, name))
}

#[derive(Debug, Clone)]
struct Located<T> {
    line: usize,
    column: usize,
    value: T,
}

#[derive(Debug, Clone)]
struct Term {
    num: BigInt,
    den: BigInt,
    name: Located<String>,
}

#[derive(Debug, Clone)]
struct MulLine {
    left: Located<String>,
    right: Located<String>,
    terms: Vec<Term>,
}

/// A syntactically valid algebra document, before name resolution.
#[derive(Debug, Clone)]
pub struct AlgebraDocument {
    name: Option<Located<String>>,
    field: Option<Located<FieldSpec>>,
    basis: Vec<Located<(String, Parity)>>,
    unit: Option<Located<String>>,
    products: Vec<MulLine>,
}

impl AlgebraDocument {
    pub fn parse(text: &str) -> Result<Self> {
        let mut doc = AlgebraDocument { name: None, field: None, basis: Vec::new(), unit: None, products: Vec::new() };
        for (index, raw) in text.lines().enumerate() {
            let line = index + 1;
            let toks = tokens(raw);
            let Some(&(col, keyword)) = toks.first() else { continue };
            let args = &toks[1..];
            let single = |what: &str| -> Result<(usize, &str)> {
                match args {
                    [one] => Ok(*one),
                    [] => Err(perr(line, col + keyword.len(), format!("`{what}` needs a value"))),
                    [_, (c, _), ..] => Err(perr(line, *c, format!("`{what}` takes a single value"))),
                }
            };
            match keyword {
                "name" => {
                    let (c, v) = single("name")?;
                    if doc.name.is_some() {
                        return Err(perr(line, col, "duplicate `name`"));
                    }
                    doc.name = Some(Located { line, column: c, value: v.to_string() });
                }
                "field" => {
                    let (c, v) = single("field")?;
                    if doc.field.is_some() {
                        return Err(perr(line, col, "duplicate `field`"));
                    }
                    let spec = v.parse::<FieldSpec>().map_err(|e| perr(line, c, e.to_string()))?;
                    doc.field = Some(Located { line, column: c, value: spec });
                }
                "unit" => {
                    let (c, v) = single("unit")?;
                    if doc.unit.is_some() {
                        return Err(perr(line, col, "duplicate `unit`"));
                    }
                    doc.unit = Some(Located { line, column: c, value: v.to_string() });
                }
                "basis" => {
                    if args.is_empty() {
                        return Err(perr(line, col + keyword.len(), "`basis` needs at least one element"));
                    }
                    for &(c, t) in args {
                        let Some((name, par)) = t.split_once(':') else {
                            return Err(perr(line, c, format!("expected <name>:<even|odd>, found `{t}`")));
                        };
                        if !is_ident(name) {
                            return Err(perr(line, c, format!("invalid basis name `{name}`")));
                        }
                        let Some(p) = parse_parity(par) else {
                            return Err(perr(line, c + name.len() + 1, format!("unknown parity `{par}` (expected even or odd)")));
                        };
                        if doc.basis.iter().any(|b| b.value.0 == name) {
                            return Err(perr(line, c, format!("duplicate basis name `{name}`")));
                        }
                        doc.basis.push(Located { line, column: c, value: (name.to_string(), p) });
                    }
                }
                "mul" => doc.products.push(parse_mul(line, col, args)?),
                other => return Err(perr(line, col, format!("unknown directive `{other}`"))),
            }
        }
        Ok(doc)
    }

    pub fn field_spec(&self) -> Option<FieldSpec> {
        self.field.as_ref().map(|f| f.value)
    }

    pub fn build<F: Field>(&self, field: F) -> Result<SuperAlgebra<F>> {
        let algebra = self.build_unchecked(field)?;
        if let Some(v) = algebra.validate().violations.first() {
            return Err(Error::Verification(format!("algebra `{}`: {}", algebra.name(), describe_violation(&algebra, v))));
        }
        Ok(algebra)
    }

    /// Resolves names and fills unit products without checking the axioms.
    pub fn build_unchecked<F: Field>(&self, field: F) -> Result<SuperAlgebra<F>> {
        let name = self.name.as_ref().ok_or_else(|| perr(1, 1, "missing name"))?;
        if self.basis.is_empty() {
            return Err(perr(1, 1, "missing basis"));
        }
        let unit = self.unit.as_ref().ok_or_else(|| perr(1, 1, "missing unit"))?;
        let index: HashMap<&str, usize> = self.basis.iter().enumerate().map(|(i, b)| (b.value.0.as_str(), i)).collect();
        let resolve = |l: &Located<String>| {
            index.get(l.value.as_str()).copied().ok_or_else(|| perr(l.line, l.column, format!("unknown basis name `{}`", l.value)))
        };
        let u = resolve(unit)?;
        let d = self.basis.len();
        let mut table: Vec<Option<SparseVec<F::Elem>>> = vec![None; d * d];
        for m in &self.products {
            let (i, j) = (resolve(&m.left)?, resolve(&m.right)?);
            if table[i * d + j].is_some() {
                return Err(perr(m.left.line, m.left.column, format!("duplicate product {} {}", m.left.value, m.right.value)));
            }
            let mut acc = Accumulator::new();
            for t in &m.terms {
                let k = resolve(&t.name)?;
                let c = field.from_ratio(&t.num, &t.den).map_err(|e| perr(t.name.line, t.name.column, e.to_string()))?;
                acc.push(k, c);
            }
            table[i * d + j] = Some(acc.finish(&field));
        }
        for x in 0..d {
            for cell in [u * d + x, x * d + u] {
                if table[cell].is_none() {
                    table[cell] = Some(SparseVec::unit(&field, x));
                }
            }
        }
        let names = self.basis.iter().map(|b| b.value.0.clone()).collect();
        let parity = self.basis.iter().map(|b| b.value.1).collect();
        let table = table.into_iter().map(Option::unwrap_or_default).collect();
        SuperAlgebra::from_parts(name.value.clone(), field, names, parity, u, table)
    }
}

/// A violation with basis names instead of indices.
pub fn describe_violation<F: Field>(a: &SuperAlgebra<F>, v: &crate::superalgebra::Violation) -> String {
    use crate::superalgebra::Violation as V;
    let n = |i: &usize| a.basis_names()[*i].as_str();
    match v {
        V::Associativity { i, j, k } => format!("not associative: ({} {}) {} != {} ({} {})", n(i), n(j), n(k), n(i), n(j), n(k)),
        V::LeftUnit { i } => format!("unit is not a left identity on {}", n(i)),
        V::RightUnit { i } => format!("unit is not a right identity on {}", n(i)),
        V::UnitParity => "unit is not even".into(),
        V::Grading { i, j, k } => format!("{} {} has a component along {} of the wrong parity", n(i), n(j), n(k)),
    }
}

fn parse_mul(line: usize, col: usize, args: &[(usize, &str)]) -> Result<MulLine> {
    let loc = |&(c, t): &(usize, &str)| Located { line, column: c, value: t.to_string() };
    let [left, right, eq, rest @ ..] = args else {
        return Err(perr(line, col, "expected `mul <a> <b> = <terms>`"));
    };
    for tok in [left, right] {
        if !is_ident(tok.1) {
            return Err(perr(line, tok.0, format!("invalid basis name `{}`", tok.1)));
        }
    }
    if eq.1 != "=" {
        return Err(perr(line, eq.0, format!("expected `=`, found `{}`", eq.1)));
    }
    if rest.is_empty() {
        return Err(perr(line, eq.0 + 1, "missing right-hand side"));
    }
    let mut terms = Vec::new();
    for (k, tok) in rest.iter().enumerate() {
        if k % 2 == 1 {
            if tok.1 != "+" {
                return Err(perr(line, tok.0, format!("expected `+`, found `{}`", tok.1)));
            }
            continue;
        }
        let Some((num, den, name)) = parse_term(tok.1) else {
            return Err(perr(line, tok.0, format!("expected <coeff>*<name>, found `{}`", tok.1)));
        };
        if !is_ident(name) {
            return Err(perr(line, tok.0, format!("invalid basis name `{name}`")));
        }
        let column = tok.0 + tok.1.len() - name.len();
        terms.push(Term { num, den, name: Located { line, column, value: name.to_string() } });
    }
    if rest.len() % 2 == 0 {
        return Err(perr(line, rest[rest.len() - 1].0, "dangling `+`"));
    }
    Ok(MulLine { left: loc(left), right: loc(right), terms })
}

pub fn parse_algebra(text: &str) -> Result<AnyAlgebra> {
    let doc = AlgebraDocument::parse(text)?;
    match doc.field_spec().ok_or_else(|| perr(1, 1, "missing field"))? {
        FieldSpec::Rational => Ok(AnyAlgebra::Rational(doc.build(Rationals)?)),
        FieldSpec::Prime(p) => Ok(AnyAlgebra::Prime(doc.build(PrimeField::new(p)?)?)),
    }
}

/// Parses a document whose field must match `field`.
pub fn parse_algebra_over<F: Field>(text: &str, field: F) -> Result<SuperAlgebra<F>> {
    let doc = AlgebraDocument::parse(text)?;
    let spec = doc.field_spec().ok_or_else(|| perr(1, 1, "missing field"))?;
    if spec != field.spec() {
        return Err(Error::FieldMismatch(spec.to_string(), field.spec().to_string()));
    }
    doc.build(field)
}

fn terms<F: Field>(field: &F, names: &[String], v: &SparseVec<F::Elem>) -> String {
    v.iter().map(|(k, c)| format!("{}*{}", field.format(c), names[k])).collect::<Vec<_>>().join(" + ")
}

fn basis_line(names: &[String], parity: &[Parity]) -> String {
    let items: Vec<_> = names.iter().zip(parity).map(|(n, p)| format!("{n}:{}", p.name())).collect();
    format!("basis {}", items.join(" "))
}

/// Canonical text: every nonzero product, row-major.
pub fn serialize_algebra<F: Field>(a: &SuperAlgebra<F>) -> String {
    let names = a.basis_names();
    let mut out = format!("name {}\nfield {}\n{}\nunit {}\n", a.name(), a.field().spec(), basis_line(names, a.parities()), names[a.unit_index()]);
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let v = a.basis_product(i, j);
            if !v.is_zero() {
                out.push_str(&format!("mul {} {} = {}\n", names[i], names[j], terms(a.field(), names, v)));
            }
        }
    }
    out
}

/// Structure constants of `l`; brackets `[b_j, b_i]` with `j > i` follow by skew-symmetry.
pub fn export_lie<F: Field>(l: &FinLieSuper<F>) -> String {
    let names = l.names();
    let mut out = format!("lie {}\nfield {}\n{}\n", l.label(), l.field().spec(), basis_line(names, l.parities()));
    for i in 0..l.dim() {
        for j in i..l.dim() {
            let v = l.basis_bracket(i, j);
            if !v.is_zero() {
                out.push_str(&format!("[{}, {}] = {}\n", names[i], names[j], terms(l.field(), names, v)));
            }
        }
    }
    out
}

pub fn parse_lie<F: Field>(text: &str, field: F) -> Result<FinLieSuper<F>> {
    let mut label = None;
    let mut names: Vec<String> = Vec::new();
    let mut parity = Vec::new();
    let mut brackets = Vec::new();
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let toks = tokens(raw);
        let Some(&(col, keyword)) = toks.first() else { continue };
        match keyword {
            "lie" => label = Some(toks[1..].iter().map(|t| t.1).collect::<Vec<_>>().join(" ")),
            "field" => {
                let Some(&(c, v)) = toks.get(1) else { return Err(perr(line, col, "`field` needs a value")) };
                let spec = v.parse::<FieldSpec>().map_err(|e| perr(line, c, e.to_string()))?;
                if spec != field.spec() {
                    return Err(Error::FieldMismatch(spec.to_string(), field.spec().to_string()));
                }
            }
            "basis" => {
                for &(c, t) in &toks[1..] {
                    let (n, p) = t.rsplit_once(':').ok_or_else(|| perr(line, c, format!("expected <name>:<parity>, found `{t}`")))?;
                    let p = parse_parity(p).ok_or_else(|| perr(line, c, format!("unknown parity in `{t}`")))?;
                    names.push(n.to_string());
                    parity.push(p);
                }
            }
            _ if keyword.starts_with('[') => brackets.push((line, col, toks)),
            other => return Err(perr(line, col, format!("unknown directive `{other}`"))),
        }
    }
    let d = names.len();
    let index: HashMap<&str, usize> = names.iter().enumerate().map(|(i, n)| (n.as_str(), i)).collect();
    let mut table = vec![SparseVec::zero(); d * d];
    for (line, col, toks) in brackets {
        let [(_, x), (cy, y), (ce, eq), rest @ ..] = toks.as_slice() else {
            return Err(perr(line, col, "expected `[x, y] = <terms>`"));
        };
        let (Some(x), Some(y)) = (x.strip_prefix('[').and_then(|x| x.strip_suffix(',')), y.strip_suffix(']')) else {
            return Err(perr(line, col, "expected `[x, y] = <terms>`"));
        };
        if *eq != "=" {
            return Err(perr(line, *ce, "expected `=`"));
        }
        let lookup = |n: &str, c: usize| index.get(n).copied().ok_or_else(|| perr(line, c, format!("unknown basis name `{n}`")));
        let (i, j) = (lookup(x, col + 1)?, lookup(y, *cy)?);
        let mut acc = Accumulator::new();
        for (k, &(c, t)) in rest.iter().enumerate() {
            if k % 2 == 1 {
                if t != "+" {
                    return Err(perr(line, c, "expected `+`"));
                }
                continue;
            }
            let (num, den, name) = parse_term(t).ok_or_else(|| perr(line, c, format!("expected <coeff>*<name>, found `{t}`")))?;
            let coeff = field.from_ratio(&num, &den).map_err(|e| perr(line, c, e.to_string()))?;
            acc.push(lookup(name, c)?, coeff);
        }
        let v = acc.finish(&field);
        let negate = !koszul(parity[i], parity[j]);
        table[j * d + i] = v.scale(&field, &field.signed(negate, &field.one()));
        table[i * d + j] = v;
    }
    FinLieSuper::new(label.unwrap_or_default(), field, names, parity, table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::{concretize, Source};
    use crate::matrix::MatrixShape;
    use crate::superalgebra::Builtin;

    const GRASSMANN1: &str = "name grassmann1\nfield Q\nbasis one:even th:odd\nunit one\nmul one one = 1*one\nmul one th = 1*th\nmul th one = 1*th\n";

    fn parse_err(text: &str) -> Error {
        parse_algebra(text).unwrap_err()
    }

    #[test]
    fn grassmann_document() {
        let AnyAlgebra::Rational(a) = parse_algebra(GRASSMANN1).unwrap() else { panic!() };
        assert_eq!(a.dim(), 2);
        assert_eq!(a.parity(1), Parity::Odd);
        assert!(a.basis_product(1, 1).is_zero());
        assert_eq!(serialize_algebra(&a), GRASSMANN1);
    }

    #[test]
    fn unit_products_are_filled() {
        let text = "name g\nfield Fp:7\nbasis one:even th:odd # comment\nunit one\n";
        let AnyAlgebra::Prime(a) = parse_algebra(text).unwrap() else { panic!() };
        assert_eq!(a.basis_product(0, 1), &SparseVec::unit(a.field(), 1));
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_err("name x\nfield Q\nbasis one:even\n"), Error::Parse { message, .. } if message == "missing unit"));
        assert!(matches!(parse_err("name x\nfield Fp:2\nbasis one:even\nunit one\n"), Error::Parse { line: 2, column: 7, .. }));
        assert!(matches!(parse_err("name x\nfield Q\nbasis one:even th:od\nunit one\n"), Error::Parse { line: 3, column: 19, .. }));
        assert!(matches!(parse_err("name x\nfield Q\nbasis one:even\nunit one\nmul one one = 1*two\n"), Error::Parse { line: 5, column: 17, .. }));
        assert!(matches!(parse_err("name x\nfield Q\nbasis one:even one:odd\nunit one\n"), Error::Parse { line: 3, .. }));
        assert!(matches!(parse_err("name x\nfield Q\nbasis one:even\nunit one\nmul one one = 1*one +\n"), Error::Parse { line: 5, .. }));
        let bad = "name x\nfield Q\nbasis one:even a:even b:even\nunit one\nmul a b = 1*a\n";
        assert!(matches!(parse_err(bad), Error::Verification(_)));
    }

    #[test]
    fn corpus_round_trip() {
        for b in Builtin::corpus() {
            let a = b.build(Rationals).unwrap();
            let text = serialize_algebra(&a);
            let back = parse_algebra_over(&text, Rationals).unwrap();
            assert_eq!(back, a, "{b}");
            assert_eq!(serialize_algebra(&back), text);
        }
    }

    #[test]
    fn lie_round_trip() {
        let a = Builtin::Grassmann(1).build(Rationals).unwrap();
        let l = concretize(Source::Sl, &a, MatrixShape::new(2, 1)).unwrap();
        let back = parse_lie(&export_lie(&l), Rationals).unwrap();
        assert_eq!(back, l);
        let a = Builtin::Field.build(Rationals).unwrap();
        let l = concretize(Source::Sl, &a, MatrixShape::new(2, 1)).unwrap();
        let text = export_lie(&l);
        assert_eq!(text.lines().nth(2).unwrap().split_whitespace().count(), 9);
        let ab = FinLieSuper::abelian(Rationals, vec![Parity::Even, Parity::Odd]);
        assert_eq!(export_lie(&ab).lines().filter(|l| l.starts_with('[')).count(), 0);
    }
}
