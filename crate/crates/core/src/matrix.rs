//! `gl_{m|n}(A)`, the supertrace, and `sl_{m|n}(A)`.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::FinLieSuper;
use crate::linear::{Accumulator, Field, SparseVec, SubspaceBasis};
use crate::parity::{koszul, Parity};
use crate::superalgebra::SuperAlgebra;

/// Block shape `m|n`: indices `0..m` are even, `m..m+n` odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct MatrixShape {
    pub m: usize,
    pub n: usize,
}

impl MatrixShape {
    pub fn new(m: usize, n: usize) -> Self {
        MatrixShape { m, n }
    }

    pub fn size(&self) -> usize {
        self.m + self.n
    }

    pub fn index_parity(&self, i: usize) -> Parity {
        if i < self.m {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn swapped(&self) -> Self {
        MatrixShape { m: self.n, n: self.m }
    }

    /// `m + n ≥ 3`, needed for `sl` and `st`.
    pub fn check_large(&self) -> Result<()> {
        if self.size() < 3 {
            return Err(Error::Precondition(format!("shape {self} needs m + n >= 3")));
        }
        Ok(())
    }
}

impl fmt::Display for MatrixShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.m, self.n)
    }
}

impl FromStr for MatrixShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (m, n) = s
            .split_once('|')
            .or_else(|| s.split_once('x'))
            .ok_or_else(|| Error::Input(format!("shape `{s}` is not of the form m|n")))?;
        let parse = |t: &str| t.trim().parse::<usize>().map_err(|_| Error::Input(format!("shape `{s}` is not of the form m|n")));
        Ok(MatrixShape { m: parse(m)?, n: parse(n)? })
    }
}

/// `gl_{m|n}(A)` with coordinates `(i * N + j) * dim A + s` for `E_ij(e_s)`.
#[derive(Debug, Clone)]
pub struct Gl<F: Field> {
    algebra: SuperAlgebra<F>,
    shape: MatrixShape,
}

/// An element of `gl_{m|n}(A)` in the coordinates of [`Gl`].
#[derive(Debug, Clone, PartialEq)]
pub struct GlElement<F: Field> {
    pub shape: MatrixShape,
    pub coords: SparseVec<F::Elem>,
}

impl<F: Field> Gl<F> {
    pub fn new(algebra: &SuperAlgebra<F>, shape: MatrixShape) -> Self {
        Gl { algebra: algebra.clone(), shape }
    }

    pub fn algebra(&self) -> &SuperAlgebra<F> {
        &self.algebra
    }

    pub fn shape(&self) -> MatrixShape {
        self.shape
    }

    pub fn field(&self) -> &F {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        let n = self.shape.size();
        n * n * self.algebra.dim()
    }

    pub fn index(&self, i: usize, j: usize, s: usize) -> usize {
        (i * self.shape.size() + j) * self.algebra.dim() + s
    }

    /// `(i, j, s)` of a coordinate.
    pub fn cell(&self, index: usize) -> (usize, usize, usize) {
        let da = self.algebra.dim();
        let n = self.shape.size();
        let s = index % da;
        let c = index / da;
        (c / n, c % n, s)
    }

    /// `|i| + |j| + |e_s|`.
    pub fn parity(&self, index: usize) -> Parity {
        let (i, j, s) = self.cell(index);
        self.shape.index_parity(i) + self.shape.index_parity(j) + self.algebra.parity(s)
    }

    pub fn basis_name(&self, index: usize) -> String {
        let (i, j, s) = self.cell(index);
        format!("E{}{}({})", i + 1, j + 1, self.algebra.basis_names()[s])
    }

    /// `E_ij(a)`.
    pub fn e(&self, i: usize, j: usize, a: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        a.shifted(self.index(i, j, 0))
    }

    pub fn element(&self, coords: SparseVec<F::Elem>) -> GlElement<F> {
        GlElement { shape: self.shape, coords }
    }

    /// Entry `(i, j)` as an element of `A`.
    pub fn entry(&self, x: &SparseVec<F::Elem>, i: usize, j: usize) -> SparseVec<F::Elem> {
        let start = self.index(i, j, 0);
        x.window(start..start + self.algebra.dim())
    }

    /// `[E_ij(e_s), E_kl(e_t)] = δ_jk E_il(e_s e_t) - (-1)^{|x||y|} δ_li E_kj(e_t e_s)`.
    pub fn basis_bracket(&self, p: usize, q: usize) -> SparseVec<F::Elem> {
        let field = self.field();
        let (i, j, s) = self.cell(p);
        let (k, l, t) = self.cell(q);
        let mut acc = Accumulator::new();
        if j == k {
            acc.add_vec(&self.e(i, l, self.algebra.basis_product(s, t)));
        }
        if l == i {
            let negate = !koszul(self.parity(p), self.parity(q));
            acc.add_scaled(field, &field.signed(negate, &field.one()), &self.e(k, j, self.algebra.basis_product(t, s)));
        }
        acc.finish(field)
    }

    pub fn bracket(&self, x: &SparseVec<F::Elem>, y: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        let field = self.field();
        let mut acc = Accumulator::new();
        for (p, a) in x.iter() {
            for (q, b) in y.iter() {
                acc.add_scaled(field, &field.mul(a, b), &self.basis_bracket(p, q));
            }
        }
        acc.finish(field)
    }

    /// `str(E_ij(e_s)) = δ_ij (-1)^{|i|(|i|+|e_s|)} e_s`.
    pub fn basis_supertrace(&self, index: usize) -> SparseVec<F::Elem> {
        let field = self.field();
        let (i, j, s) = self.cell(index);
        if i != j {
            return SparseVec::zero();
        }
        let pi = self.shape.index_parity(i);
        let negate = koszul(pi, pi + self.algebra.parity(s));
        SparseVec::single(field, s, field.signed(negate, &field.one()))
    }

    pub fn supertrace(&self, x: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        let field = self.field();
        let mut acc = Accumulator::new();
        for (p, a) in x.iter() {
            acc.add_scaled(field, a, &self.basis_supertrace(p));
        }
        acc.finish(field)
    }

    /// `[gl, gl]`, split into its even and odd parts.
    pub fn derived_parts(&self) -> Result<[SubspaceBasis<F>; 2]> {
        let d = self.dim();
        let parts: Vec<[Vec<SparseVec<F::Elem>>; 2]> = (0..d)
            .into_par_iter()
            .map(|p| {
                let mut out: [Vec<_>; 2] = [Vec::new(), Vec::new()];
                for q in 0..d {
                    let v = self.basis_bracket(p, q);
                    if !v.is_zero() {
                        out[(self.parity(p) + self.parity(q)).bit()].push(v);
                    }
                }
                out
            })
            .collect();
        let mut even = Vec::new();
        let mut odd = Vec::new();
        for [e, o] in parts {
            even.extend(e);
            odd.extend(o);
        }
        let even = SubspaceBasis::from_vectors(self.field(), d, even)?;
        let odd = SubspaceBasis::from_vectors(self.field(), d, odd)?;
        Ok([even, odd])
    }

    pub fn derived(&self) -> Result<SubspaceBasis<F>> {
        let [even, odd] = self.derived_parts()?;
        even.sum(&odd)
    }

    /// `{ X | str(X) ∈ [A, A] }`.
    pub fn trace_criterion(&self) -> Result<SubspaceBasis<F>> {
        let images: Vec<_> = (0..self.dim()).map(|p| self.basis_supertrace(p)).collect();
        self.algebra.supercommutator_span().preimage(&images)
    }

    pub fn to_lie(&self) -> Result<FinLieSuper<F>> {
        let d = self.dim();
        let names = (0..d).map(|p| self.basis_name(p)).collect();
        let parity = (0..d).map(|p| self.parity(p)).collect();
        let table: Vec<_> = (0..d * d).into_par_iter().map(|c| self.basis_bracket(c / d, c % d)).collect();
        FinLieSuper::new(format!("gl_{}({})", self.shape, self.algebra.name()), self.field().clone(), names, parity, table)
    }

    /// `sl_{m|n}(A) = [gl, gl]` with a homogeneous echelon basis.
    pub fn sl_lie(&self) -> Result<FinLieSuper<F>> {
        self.shape.check_large()?;
        let [even, odd] = self.derived_parts()?;
        let mut basis: Vec<(usize, String, Parity, SparseVec<F::Elem>)> = Vec::new();
        let mut extra = 0;
        for (part, parity) in [(&even, Parity::Even), (&odd, Parity::Odd)] {
            for v in part.vectors() {
                let (lead, _) = v.leading().expect("nonzero");
                let name = if v.nnz() == 1 {
                    self.basis_name(lead)
                } else {
                    extra += 1;
                    format!("T{extra}")
                };
                basis.push((lead, name, parity, v.clone()));
            }
        }
        basis.sort_by_key(|(lead, ..)| *lead);
        let basis = basis.into_iter().map(|(_, n, p, v)| (n, p, v)).collect();
        FinLieSuper::from_subspace(format!("sl_{}({})", self.shape, self.algebra.name()), self.field(), self.dim(), basis, |x, y| {
            self.bracket(x, y)
        })
    }
}

/// Shape mismatch is an input error.
pub fn gl_bracket<F: Field>(algebra: &SuperAlgebra<F>, x: &GlElement<F>, y: &GlElement<F>) -> Result<GlElement<F>> {
    if x.shape != y.shape {
        return Err(Error::Input(format!("shape mismatch: {} vs {}", x.shape, y.shape)));
    }
    let gl = Gl::new(algebra, x.shape);
    Ok(gl.element(gl.bracket(&x.coords, &y.coords)))
}

pub fn supertrace<F: Field>(algebra: &SuperAlgebra<F>, x: &GlElement<F>) -> SparseVec<F::Elem> {
    Gl::new(algebra, x.shape).supertrace(&x.coords)
}

/// The two descriptions of `sl_{m|n}(A)`.
#[derive(Debug, Clone)]
pub struct SlSpaces<F: Field> {
    pub derived: SubspaceBasis<F>,
    pub trace_criterion: SubspaceBasis<F>,
    /// `derived ⊆ trace_criterion`.
    pub contained: bool,
    pub equal: bool,
}

pub fn sl_space<F: Field>(algebra: &SuperAlgebra<F>, shape: MatrixShape) -> Result<SlSpaces<F>> {
    shape.check_large()?;
    let gl = Gl::new(algebra, shape);
    let derived = gl.derived()?;
    let trace_criterion = gl.trace_criterion()?;
    let contained = trace_criterion.contains_subspace(&derived)?;
    let equal = derived.equals(&trace_criterion)?;
    Ok(SlSpaces { derived, trace_criterion, contained, equal })
}
