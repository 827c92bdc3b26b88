//! Finite-dimensional Lie superalgebras given by structure constants.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linear::{kernel_of_images, rank, Accumulator, Field, SparseVec, SubspaceBasis};
use crate::parity::{koszul, Parity};

/// A Lie superalgebra with a homogeneous basis; `table[i * dim + j] = [e_i, e_j]`.
#[derive(Clone, PartialEq)]
pub struct FinLieSuper<F: Field> {
    label: String,
    field: F,
    names: Vec<String>,
    parity: Vec<Parity>,
    table: Vec<SparseVec<F::Elem>>,
}

/// First counterexample found by [`FinLieSuper::check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LieViolation {
    Grading { i: usize, j: usize, k: usize },
    Skew { i: usize, j: usize },
    Jacobi { i: usize, j: usize, k: usize },
}

impl fmt::Display for LieViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieViolation::Grading { i, j, k } => write!(f, "grading: [b{i}, b{j}] has a component on b{k} of the wrong parity"),
            LieViolation::Skew { i, j } => write!(f, "skew-symmetry fails on (b{i}, b{j})"),
            LieViolation::Jacobi { i, j, k } => write!(f, "Jacobi identity fails on (b{i}, b{j}, b{k})"),
        }
    }
}

impl<F: Field> fmt::Debug for FinLieSuper<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FinLieSuper")
            .field("label", &self.label)
            .field("field", &self.field.spec())
            .field("dim", &self.dim())
            .field("even", &self.even_dim())
            .finish_non_exhaustive()
    }
}

impl<F: Field> FinLieSuper<F> {
    /// Builds and verifies grading, skew-symmetry and the Jacobi identity on all basis triples.
    pub fn new(
        label: impl Into<String>,
        field: F,
        names: Vec<String>,
        parity: Vec<Parity>,
        table: Vec<SparseVec<F::Elem>>,
    ) -> Result<Self> {
        let l = Self::from_parts(label, field, names, parity, table)?;
        if let Some(v) = l.check() {
            return Err(Error::Verification(format!("{}: {}", l.label, l.describe(&v))));
        }
        Ok(l)
    }

    /// Structural checks only.
    pub fn from_parts(
        label: impl Into<String>,
        field: F,
        names: Vec<String>,
        parity: Vec<Parity>,
        table: Vec<SparseVec<F::Elem>>,
    ) -> Result<Self> {
        let d = parity.len();
        if names.len() != d {
            return Err(Error::Input("basis names and parities differ in length".into()));
        }
        if table.len() != d * d {
            return Err(Error::Input(format!("bracket table needs {} entries", d * d)));
        }
        if table.iter().any(|v| v.max_index().is_some_and(|m| m >= d)) {
            return Err(Error::Input("bracket table refers to a missing basis element".into()));
        }
        Ok(FinLieSuper { label: label.into(), field, names, parity, table })
    }

    /// The abelian Lie superalgebra with the given parities.
    pub fn abelian(field: F, parity: Vec<Parity>) -> Self {
        let d = parity.len();
        let names = (0..d).map(|i| format!("b{i}")).collect();
        FinLieSuper { label: format!("abelian{d}"), field, names, parity, table: vec![SparseVec::zero(); d * d] }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.parity.len()
    }

    pub fn even_dim(&self) -> usize {
        self.parity.iter().filter(|p| !p.is_odd()).count()
    }

    pub fn odd_dim(&self) -> usize {
        self.dim() - self.even_dim()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parity[i]
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parity
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> &SparseVec<F::Elem> {
        &self.table[i * self.dim() + j]
    }

    pub fn bracket(&self, x: &SparseVec<F::Elem>, y: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        let mut acc = Accumulator::new();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                acc.add_scaled(&self.field, &self.field.mul(a, b), self.basis_bracket(i, j));
            }
        }
        acc.finish(&self.field)
    }

    /// `[e_i, y]`.
    pub fn bracket_basis_left(&self, i: usize, y: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        let mut acc = Accumulator::new();
        for (j, b) in y.iter() {
            acc.add_scaled(&self.field, b, self.basis_bracket(i, j));
        }
        acc.finish(&self.field)
    }

    /// `[x, e_j]`.
    pub fn bracket_basis_right(&self, x: &SparseVec<F::Elem>, j: usize) -> SparseVec<F::Elem> {
        let mut acc = Accumulator::new();
        for (i, a) in x.iter() {
            acc.add_scaled(&self.field, a, self.basis_bracket(i, j));
        }
        acc.finish(&self.field)
    }

    pub fn check_grading(&self) -> Option<LieViolation> {
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                let want = self.parity[i] + self.parity[j];
                if let Some((k, _)) = self.basis_bracket(i, j).iter().find(|(k, _)| self.parity[*k] != want) {
                    return Some(LieViolation::Grading { i, j, k });
                }
            }
        }
        None
    }

    /// `[x,y] = -(-1)^{|x||y|}[y,x]` on all basis pairs.
    pub fn check_skew(&self) -> Option<LieViolation> {
        let d = self.dim();
        for i in 0..d {
            for j in i..d {
                let negate = !koszul(self.parity[i], self.parity[j]);
                let flipped = self.basis_bracket(j, i);
                let expected = if negate { flipped.neg(&self.field) } else { flipped.clone() };
                if *self.basis_bracket(i, j) != expected {
                    return Some(LieViolation::Skew { i, j });
                }
            }
        }
        None
    }

    /// `[x,[y,z]] = [[x,y],z] + (-1)^{|x||y|}[y,[x,z]]` on all basis triples.
    pub fn check_jacobi(&self) -> Option<LieViolation> {
        let d = self.dim();
        (0..d).into_par_iter().find_map_first(|i| {
            for j in 0..d {
                let ij = self.basis_bracket(i, j);
                let sign = koszul(self.parity[i], self.parity[j]);
                for k in 0..d {
                    let lhs = self.bracket_basis_left(i, self.basis_bracket(j, k));
                    let mut acc = Accumulator::new();
                    acc.add_vec(&self.bracket_basis_right(ij, k));
                    let tail = self.bracket_basis_left(j, self.basis_bracket(i, k));
                    acc.add_scaled(&self.field, &self.field.signed(sign, &self.field.one()), &tail);
                    if acc.finish(&self.field) != lhs {
                        return Some(LieViolation::Jacobi { i, j, k });
                    }
                }
            }
            None
        })
    }

    /// All axioms; `None` means this is a Lie superalgebra.
    pub fn check(&self) -> Option<LieViolation> {
        self.check_grading().or_else(|| self.check_skew()).or_else(|| self.check_jacobi())
    }

    /// Renders a violation with basis names.
    pub fn describe(&self, v: &LieViolation) -> String {
        let n = |i: &usize| self.names[*i].as_str();
        match v {
            LieViolation::Grading { i, j, k } => format!("[{}, {}] has a component on {} of the wrong parity", n(i), n(j), n(k)),
            LieViolation::Skew { i, j } => format!("skew-symmetry fails on ({}, {})", n(i), n(j)),
            LieViolation::Jacobi { i, j, k } => format!("Jacobi identity fails on ({}, {}, {})", n(i), n(j), n(k)),
        }
    }

    /// `[L, L]`.
    pub fn derived(&self) -> Result<SubspaceBasis<F>> {
        let d = self.dim();
        SubspaceBasis::from_vectors(&self.field, d, self.table.clone())
    }

    pub fn is_perfect(&self) -> Result<bool> {
        if self.dim() == 0 {
            return Ok(true);
        }
        Ok(rank(&self.field, self.dim(), self.table.clone())? == self.dim())
    }

    /// `{ z | [z, x] = 0 for all x }`.
    pub fn center(&self) -> Result<SubspaceBasis<F>> {
        let d = self.dim();
        let images: Vec<_> = (0..d)
            .map(|i| {
                let mut acc = Accumulator::new();
                for k in 0..d {
                    acc.add_vec(&self.basis_bracket(i, k).shifted(k * d));
                }
                acc.finish(&self.field)
            })
            .collect();
        kernel_of_images(&self.field, d, d * d, &images)
    }

    pub fn perfectness_and_center(&self) -> Result<(bool, SubspaceBasis<F>)> {
        Ok((self.is_perfect()?, self.center()?))
    }

    /// The same algebra with basis vector `perm[i]` moved to position `i`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let d = self.dim();
        let mut inverse = vec![usize::MAX; d];
        for (new, &old) in perm.iter().enumerate() {
            if old >= d || inverse[old] != usize::MAX {
                return Err(Error::Input("not a permutation".into()));
            }
            inverse[old] = new;
        }
        if perm.len() != d {
            return Err(Error::Input("not a permutation".into()));
        }
        let mut table = Vec::with_capacity(d * d);
        for &a in perm {
            for &b in perm {
                table.push(self.basis_bracket(a, b).remap(|k| inverse[k]));
            }
        }
        Ok(FinLieSuper {
            label: self.label.clone(),
            field: self.field.clone(),
            names: perm.iter().map(|&i| self.names[i].clone()).collect(),
            parity: perm.iter().map(|&i| self.parity[i]).collect(),
            table,
        })
    }

    /// The subalgebra spanned by homogeneous vectors of an ambient algebra.
    ///
    /// `basis` must consist of homogeneous, linearly independent vectors of
    /// the ambient space whose span is closed under `bracket`.
    pub fn from_subspace(
        label: impl Into<String>,
        field: &F,
        ambient_dim: usize,
        basis: Vec<(String, Parity, SparseVec<F::Elem>)>,
        bracket: impl Fn(&SparseVec<F::Elem>, &SparseVec<F::Elem>) -> SparseVec<F::Elem> + Sync,
    ) -> Result<Self> {
        let label = label.into();
        let vectors: Vec<_> = basis.iter().map(|(_, _, v)| v.clone()).collect();
        let span = SubspaceBasis::from_vectors(field, ambient_dim, vectors.clone())?;
        if span.dim() != vectors.len() {
            return Err(Error::Input(format!("{label}: basis vectors are dependent")));
        }
        // coordinates in `basis` via the echelon basis of the span
        let to_echelon: Vec<_> = vectors.iter().map(|v| span.sparse_coordinates(v).expect("vector lies in its span")).collect();
        let d = vectors.len();
        let back = invert_columns(field, d, &to_echelon)?;
        let rows: Vec<Result<Vec<SparseVec<F::Elem>>>> = (0..d)
            .into_par_iter()
            .map(|i| {
                (0..d)
                    .map(|j| {
                        let v = bracket(&vectors[i], &vectors[j]);
                        let c = span.sparse_coordinates(&v).ok_or_else(|| {
                            Error::Verification(format!("{label}: [{}, {}] leaves the subspace", basis[i].0, basis[j].0))
                        })?;
                        Ok(apply(field, &back, &c))
                    })
                    .collect()
            })
            .collect();
        let mut table = Vec::with_capacity(d * d);
        for row in rows {
            table.extend(row?);
        }
        let (names, parity): (Vec<_>, Vec<_>) = basis.into_iter().map(|(n, p, _)| (n, p)).unzip();
        Self::new(label, field.clone(), names, parity, table)
    }

    pub fn table(&self) -> &[SparseVec<F::Elem>] {
        &self.table
    }
}

/// Columns of the inverse of the square matrix with the given columns.
fn invert_columns<F: Field>(field: &F, d: usize, columns: &[SparseVec<F::Elem>]) -> Result<Vec<SparseVec<F::Elem>>> {
    // Solve by reducing [M^T | I]: rows r_i = (columns[i], e_i).
    let rows: Vec<_> = columns.iter().enumerate().map(|(i, c)| c.add(field, &SparseVec::unit(field, d + i))).collect();
    let red = crate::linear::reduce(field, 2 * d, &rows)?;
    let mut inverse_rows = vec![SparseVec::zero(); d];
    for r in red.rowspace.vectors() {
        let (lead, _) = r.leading().expect("nonzero");
        if lead >= d {
            return Err(Error::Precondition("matrix is singular".into()));
        }
        inverse_rows[lead] = r.window(d..2 * d);
    }
    Ok(inverse_rows)
}

/// Maps echelon coordinates `c` to basis coordinates.
fn apply<F: Field>(field: &F, back: &[SparseVec<F::Elem>], c: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
    let mut acc = Accumulator::new();
    for (k, x) in c.iter() {
        acc.add_scaled(field, x, &back[k]);
    }
    acc.finish(field)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::Rationals;

    /// sl_2 with basis e, h, f.
    pub(crate) fn sl2() -> FinLieSuper<Rationals> {
        let q = Rationals;
        let v = |pairs: &[(usize, i64)]| SparseVec::from_pairs(&q, pairs.iter().map(|&(i, x)| (i, q.from_i64(x))).collect());
        let z = SparseVec::zero;
        // [e,h] = -2e, [e,f] = h, [h,f] = -2f
        let table = vec![
            z(),
            v(&[(0, -2)]),
            v(&[(1, 1)]),
            v(&[(0, 2)]),
            z(),
            v(&[(2, -2)]),
            v(&[(1, -1)]),
            v(&[(2, 2)]),
            z(),
        ];
        FinLieSuper::new("sl2", q, vec!["e".into(), "h".into(), "f".into()], vec![Parity::Even; 3], table).unwrap()
    }

    #[test]
    fn sl2_is_perfect_and_centerless() {
        let (perfect, center) = sl2().perfectness_and_center().unwrap();
        assert!(perfect);
        assert_eq!(center.dim(), 0);
    }

    #[test]
    fn abelian_is_all_center() {
        let a = FinLieSuper::abelian(Rationals, vec![Parity::Even, Parity::Odd]);
        let (perfect, center) = a.perfectness_and_center().unwrap();
        assert!(!perfect);
        assert_eq!(center.dim(), 2);
    }

    #[test]
    fn broken_jacobi_is_reported() {
        let l = sl2();
        let mut table = l.table().to_vec();
        let q = Rationals;
        // [h,e] = 3e: skew survives, Jacobi does not
        table[1] = table[1].scale(&q, &(q.from_i64(3) / q.from_i64(2)));
        table[3] = table[3].scale(&q, &(q.from_i64(3) / q.from_i64(2)));
        let err = FinLieSuper::new("bad", q, l.names().to_vec(), l.parities().to_vec(), table).unwrap_err();
        assert!(matches!(err, Error::Verification(_)));
    }

    #[test]
    fn permutation_keeps_axioms() {
        let l = sl2().permuted(&[2, 0, 1]).unwrap();
        assert!(l.check().is_none());
        assert_eq!(l.names()[0], "f");
    }

    #[test]
    fn subspace_restriction() {
        // the span of e and h is a Borel subalgebra
        let l = sl2();
        let q = Rationals;
        let basis = vec![
            ("e".to_string(), Parity::Even, SparseVec::unit(&q, 0)),
            ("e+h".to_string(), Parity::Even, SparseVec::from_pairs(&q, vec![(0, q.one()), (1, q.one())])),
        ];
        let b = FinLieSuper::from_subspace("borel", &q, 3, basis, |x, y| l.bracket(x, y)).unwrap();
        // [e, e+h] = -2e
        assert_eq!(b.basis_bracket(0, 1), &SparseVec::from_pairs(&q, vec![(0, q.from_i64(-2))]));
        let bad = vec![("f".to_string(), Parity::Even, SparseVec::unit(&q, 2)), ("e".to_string(), Parity::Even, SparseVec::unit(&q, 0))];
        assert!(FinLieSuper::from_subspace("x", &q, 3, bad, |x, y| l.bracket(x, y)).is_err());
    }
}
