//! Chevalley–Eilenberg homology with trivial coefficients in degrees 1 and 2.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::cyclic::hc1;
use crate::error::{Error, Result};
use crate::lie::FinLieSuper;
use crate::linear::{rank, Accumulator, Field, SparseVec};
use crate::matrix::{Gl, MatrixShape};
use crate::parity::{koszul, Parity};
use crate::steinberg::StModel;
use crate::superalgebra::SuperAlgebra;
use crate::uce22::{build_st_sharp, CocycleTarget};

pub const DEFAULT_MAX_WEDGE: usize = 50_000;

/// Sorts `tuple` into a canonical multiset; `None` if it vanishes.
/// The boolean is `true` when the sign is negative.
pub fn normalize_wedge(parity: &[Parity], tuple: &[usize]) -> Option<(Vec<usize>, bool)> {
    let mut t = tuple.to_vec();
    let mut negate = false;
    for i in 1..t.len() {
        let mut j = i;
        while j > 0 && t[j - 1] > t[j] {
            negate ^= !koszul(parity[t[j - 1]], parity[t[j]]);
            t.swap(j - 1, j);
            j -= 1;
        }
    }
    if t.windows(2).any(|w| w[0] == w[1] && !parity[w[0]].is_odd()) {
        return None;
    }
    Some((t, negate))
}

/// Basis of the super exterior power `Λ^p L`.
#[derive(Debug, Clone)]
pub struct WedgeBasis {
    pub degree: usize,
    pub elements: Vec<Vec<usize>>,
    pub parity: Vec<Parity>,
    index: HashMap<Vec<usize>, usize>,
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// `dim Λ^p` for `d0` even and `d1` odd generators.
pub fn wedge_dim(d0: usize, d1: usize, p: usize) -> usize {
    (0..=p)
        .map(|k| {
            let odd = if d1 == 0 { usize::from(k == 0) } else { binomial(d1 + k - 1, k) };
            binomial(d0, p - k).saturating_mul(odd)
        })
        .fold(0, usize::saturating_add)
}

impl WedgeBasis {
    pub fn new(parity: &[Parity], degree: usize) -> Self {
        let d = parity.len();
        let mut elements = Vec::new();
        let mut current = Vec::with_capacity(degree);
        fn rec(parity: &[Parity], d: usize, degree: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if current.len() == degree {
                out.push(current.clone());
                return;
            }
            for i in start..d {
                if current.last() == Some(&i) && !parity[i].is_odd() {
                    continue;
                }
                current.push(i);
                rec(parity, d, degree, i, current, out);
                current.pop();
            }
        }
        rec(parity, d, degree, 0, &mut current, &mut elements);
        let index = elements.iter().enumerate().map(|(k, e)| (e.clone(), k)).collect();
        let wparity = elements.iter().map(|e| e.iter().fold(Parity::Even, |p, &i| p + parity[i])).collect();
        WedgeBasis { degree, elements, parity: wparity, index }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, multiset: &[usize]) -> Option<usize> {
        self.index.get(multiset).copied()
    }
}

fn push_wedge<F: Field>(
    field: &F,
    lie: &FinLieSuper<F>,
    basis: &WedgeBasis,
    acc: &mut Accumulator<F>,
    coeff: &F::Elem,
    v: &SparseVec<F::Elem>,
    last: usize,
) {
    for (c, x) in v.iter() {
        if let Some((m, negate)) = normalize_wedge(lie.parities(), &[c, last]) {
            let k = basis.index_of(&m).expect("normalized tuples are basis elements");
            acc.push(k, field.signed(negate, &field.mul(coeff, x)));
        }
    }
}

/// Boundary `d_p: Λ^p → Λ^{p-1}` as one image row per element of `Λ^p`.
#[derive(Debug, Clone)]
pub struct Boundary<F: Field> {
    pub domain: WedgeBasis,
    pub codomain_dim: usize,
    pub rows: Vec<SparseVec<F::Elem>>,
}

pub fn ce_boundary<F: Field>(lie: &FinLieSuper<F>, p: usize, max_wedge: usize) -> Result<Boundary<F>> {
    let field = lie.field();
    let (d0, d1) = (lie.even_dim(), lie.odd_dim());
    match p {
        2 => {
            let domain = WedgeBasis::new(lie.parities(), 2);
            let rows = domain.elements.par_iter().map(|e| lie.basis_bracket(e[0], e[1]).clone()).collect();
            Ok(Boundary { domain, codomain_dim: lie.dim(), rows })
        }
        3 => {
            let size = wedge_dim(d0, d1, 3);
            if size > max_wedge {
                return Err(Error::Resource { what: "Λ³ basis".into(), dim: size, limit: max_wedge });
            }
            let domain = WedgeBasis::new(lie.parities(), 3);
            let lower = WedgeBasis::new(lie.parities(), 2);
            let one = field.one();
            let rows = domain
                .elements
                .par_iter()
                .map(|e| {
                    let (x, y, z) = (e[0], e[1], e[2]);
                    let (px, py, pz) = (lie.parity(x), lie.parity(y), lie.parity(z));
                    let mut acc = Accumulator::new();
                    push_wedge(field, lie, &lower, &mut acc, &one, lie.basis_bracket(x, y), z);
                    let c = field.signed(!koszul(py, pz), &one);
                    push_wedge(field, lie, &lower, &mut acc, &c, lie.basis_bracket(x, z), y);
                    let c = field.signed(koszul(px, py + pz), &one);
                    push_wedge(field, lie, &lower, &mut acc, &c, lie.basis_bracket(y, z), x);
                    acc.finish(field)
                })
                .collect();
            Ok(Boundary { domain, codomain_dim: lower.len(), rows })
        }
        _ => Err(Error::Input(format!("boundary degree must be 2 or 3, got {p}"))),
    }
}

fn block_rank<F: Field>(field: &F, b: &Boundary<F>) -> Result<usize> {
    let mut total = 0;
    for parity in [Parity::Even, Parity::Odd] {
        let rows: Vec<_> = b.rows.iter().zip(&b.domain.parity).filter(|(_, p)| **p == parity).map(|(r, _)| r.clone()).collect();
        total += rank(field, b.codomain_dim, rows)?;
    }
    Ok(total)
}

#[derive(Debug, Clone, Serialize)]
pub struct HomologyReport {
    pub label: String,
    pub dim: usize,
    pub even_dim: usize,
    pub odd_dim: usize,
    pub wedge2_dim: usize,
    pub wedge3_dim: usize,
    pub rank_d2: usize,
    pub rank_d3: usize,
    pub h1: usize,
    pub h2: usize,
    pub d_squared_zero: bool,
}

/// `dim L/[L,L]`, without building `Λ³`.
pub fn first_homology<F: Field>(lie: &FinLieSuper<F>) -> Result<usize> {
    let d2 = ce_boundary(lie, 2, 0)?;
    Ok(lie.dim() - block_rank(lie.field(), &d2)?)
}

pub fn homology<F: Field>(lie: &FinLieSuper<F>, max_wedge: usize) -> Result<HomologyReport> {
    let field = lie.field();
    let d2 = ce_boundary(lie, 2, max_wedge)?;
    let d3 = ce_boundary(lie, 3, max_wedge)?;
    let d_squared_zero = d3.rows.par_iter().all(|row| {
        let mut acc = Accumulator::new();
        for (k, c) in row.iter() {
            acc.add_scaled(field, c, &d2.rows[k]);
        }
        acc.finish(field).is_zero()
    });
    let rank_d2 = block_rank(field, &d2)?;
    let rank_d3 = block_rank(field, &d3)?;
    Ok(HomologyReport {
        label: lie.label().to_string(),
        dim: lie.dim(),
        even_dim: lie.even_dim(),
        odd_dim: lie.odd_dim(),
        wedge2_dim: d2.domain.len(),
        wedge3_dim: d3.domain.len(),
        rank_d2,
        rank_d3,
        h1: lie.dim() - rank_d2,
        h2: d2.domain.len() - rank_d2 - rank_d3,
        d_squared_zero,
    })
}

/// Lie superalgebras that can be built from an algebra and a shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Gl,
    Sl,
    St,
    StSharp,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Source::Gl => "gl",
            Source::Sl => "sl",
            Source::St => "st",
            Source::StSharp => "stsharp",
        })
    }
}

impl FromStr for Source {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gl" => Ok(Source::Gl),
            "sl" => Ok(Source::Sl),
            "st" => Ok(Source::St),
            "stsharp" | "st_sharp" | "st#" => Ok(Source::StSharp),
            _ => Err(Error::Input(format!("unknown target '{s}' (expected gl, sl, st or stsharp)"))),
        }
    }
}

pub fn concretize<F: Field>(source: Source, a: &SuperAlgebra<F>, shape: MatrixShape) -> Result<FinLieSuper<F>> {
    match source {
        Source::Gl => Gl::new(a, shape).to_lie(),
        Source::Sl => Gl::new(a, shape).sl_lie(),
        Source::St => Ok(StModel::build(a, shape)?.into_lie()),
        Source::StSharp => {
            if shape != MatrixShape::new(2, 2) {
                return Err(Error::Precondition(format!("the extension is defined for shape 2|2, not {shape}")));
            }
            Ok(build_st_sharp(a)?.lie)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", content = "detail", rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail(String),
    Skipped(String),
}

impl Status {
    pub fn is_fail(&self) -> bool {
        matches!(self, Status::Fail(_))
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Pass => f.write_str("pass"),
            Status::Fail(w) => write!(f, "fail ({w})"),
            Status::Skipped(r) => write!(f, "skipped ({r})"),
        }
    }
}

/// Expected `dim H_2` with the quantity it equals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Expectation {
    pub h2: usize,
    pub reason: String,
}

pub fn expected_h2<F: Field>(source: Source, a: &SuperAlgebra<F>, shape: MatrixShape) -> Result<Option<Expectation>> {
    let (p, q) = (shape.m.max(shape.n), shape.m.min(shape.n));
    let closed = p + q >= 5 || (p, q) == (2, 1) || (p, q) == (3, 1);
    let square = (p, q) == (2, 2);
    let w = || CocycleTarget::new(a).map(|t| t.dim());
    let e = |h2, reason: &str| Some(Expectation { h2, reason: reason.to_string() });
    Ok(match source {
        Source::Gl => None,
        Source::StSharp => e(0, "centrally closed"),
        Source::St if closed => e(0, "centrally closed"),
        Source::St if square => e(w()?, "dim W"),
        Source::St => None,
        Source::Sl if closed => e(hc1(a)?.dim(), "dim HC1"),
        Source::Sl if square => e(hc1(a)?.dim() + w()?, "dim HC1 + dim W"),
        Source::Sl => None,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct UceRow {
    pub target: String,
    pub source: Source,
    pub algebra: String,
    pub shape: String,
    pub report: Option<HomologyReport>,
    pub expected: Option<Expectation>,
    pub status: Status,
}

pub fn uce_verdict<F: Field>(source: Source, a: &SuperAlgebra<F>, shape: MatrixShape, max_wedge: usize) -> Result<UceRow> {
    let lie = concretize(source, a, shape)?;
    let expected = expected_h2(source, a, shape)?;
    let mut row = UceRow {
        target: lie.label().to_string(),
        source,
        algebra: a.name().to_string(),
        shape: shape.to_string(),
        report: None,
        expected,
        status: Status::Pass,
    };
    let report = match homology(&lie, max_wedge) {
        Ok(r) => r,
        Err(Error::Resource { what, dim, limit }) => {
            row.status = Status::Skipped(format!("{what} has dimension {dim} > {limit}"));
            return Ok(row);
        }
        Err(e) => return Err(e),
    };
    row.status = if !report.d_squared_zero {
        Status::Fail("d2 d3 != 0".into())
    } else {
        match &row.expected {
            Some(e) if e.h2 != report.h2 => Status::Fail(format!("h2 = {}, expected {} ({})", report.h2, e.h2, e.reason)),
            Some(_) => Status::Pass,
            None => Status::Skipped("no expected value for this shape".into()),
        }
    };
    row.report = Some(report);
    Ok(row)
}
