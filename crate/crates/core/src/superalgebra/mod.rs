//! Finite-dimensional associative unital superalgebras given by structure constants.

mod builtin;
mod ops;

pub use builtin::Builtin;
pub use ops::{ComposeKind, IdealQuotient};

use std::fmt;

use crate::error::{Error, Result};
use crate::linear::{Accumulator, Field, SparseVec, SubspaceBasis};
use crate::parity::{koszul, Parity};

/// An associative unital Z/2-graded algebra with a homogeneous basis.
///
/// The unit is always a basis element. Products of basis elements are
/// stored as sparse coordinate vectors, row-major by `(i, j)`.
#[derive(Clone, PartialEq)]
pub struct SuperAlgebra<F: Field> {
    name: String,
    field: F,
    basis_names: Vec<String>,
    parity: Vec<Parity>,
    unit: usize,
    table: Vec<SparseVec<F::Elem>>,
}

/// One failed axiom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Associativity { i: usize, j: usize, k: usize },
    LeftUnit { i: usize },
    RightUnit { i: usize },
    UnitParity,
    /// Coordinate `k` of `e_i e_j` is nonzero but has the wrong parity.
    Grading { i: usize, j: usize, k: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Associativity { i, j, k } => write!(f, "(e{i} e{j}) e{k} != e{i} (e{j} e{k})"),
            Violation::LeftUnit { i } => write!(f, "1 * e{i} != e{i}"),
            Violation::RightUnit { i } => write!(f, "e{i} * 1 != e{i}"),
            Violation::UnitParity => write!(f, "unit is not even"),
            Violation::Grading { i, j, k } => write!(f, "e{i} e{j} has a component along e{k} of the wrong parity"),
        }
    }
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

impl<F: Field> fmt::Debug for SuperAlgebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SuperAlgebra")
            .field("name", &self.name)
            .field("field", &self.field.spec())
            .field("basis", &self.basis_names)
            .field("parity", &self.parity)
            .field("unit", &self.unit)
            .finish_non_exhaustive()
    }
}

impl<F: Field> SuperAlgebra<F> {
    /// Builds and validates an algebra; the first violation is reported as an error.
    pub fn new(
        name: impl Into<String>,
        field: F,
        basis_names: Vec<String>,
        parity: Vec<Parity>,
        unit: usize,
        table: Vec<SparseVec<F::Elem>>,
    ) -> Result<Self> {
        let algebra = Self::from_parts(name, field, basis_names, parity, unit, table)?;
        let report = algebra.validate();
        if let Some(v) = report.violations.first() {
            return Err(Error::Verification(format!("algebra `{}`: {v}", algebra.name)));
        }
        Ok(algebra)
    }

    /// Structural checks only (sizes and index ranges); axioms are not verified.
    pub fn from_parts(
        name: impl Into<String>,
        field: F,
        basis_names: Vec<String>,
        parity: Vec<Parity>,
        unit: usize,
        table: Vec<SparseVec<F::Elem>>,
    ) -> Result<Self> {
        let dim = parity.len();
        if dim == 0 {
            return Err(Error::Input("an algebra needs at least one basis element".into()));
        }
        if basis_names.len() != dim {
            return Err(Error::Input("basis names and parities differ in length".into()));
        }
        if unit >= dim {
            return Err(Error::Input(format!("unit index {unit} out of range")));
        }
        if table.len() != dim * dim {
            return Err(Error::Input(format!("multiplication table needs {} entries", dim * dim)));
        }
        if table.iter().any(|v| v.max_index().is_some_and(|m| m >= dim)) {
            return Err(Error::Input("multiplication table refers to a missing basis element".into()));
        }
        Ok(SuperAlgebra { name: name.into(), field, basis_names, parity, unit, table })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.parity.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parity[i]
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parity
    }

    pub fn unit_index(&self) -> usize {
        self.unit
    }

    pub fn unit(&self) -> SparseVec<F::Elem> {
        SparseVec::unit(&self.field, self.unit)
    }

    pub fn basis(&self, i: usize) -> SparseVec<F::Elem> {
        SparseVec::unit(&self.field, i)
    }

    /// `e_i e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &SparseVec<F::Elem> {
        &self.table[i * self.dim() + j]
    }

    /// The products `e_i e_j` in row-major order.
    pub fn table(&self) -> &[SparseVec<F::Elem>] {
        &self.table
    }

    pub fn mul(&self, a: &SparseVec<F::Elem>, b: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        let mut acc = Accumulator::new();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                acc.add_scaled(&self.field, &self.field.mul(x, y), self.basis_product(i, j));
            }
        }
        acc.finish(&self.field)
    }

    /// Product of an arbitrary element with basis element `j` on the right.
    pub fn mul_basis_right(&self, a: &SparseVec<F::Elem>, j: usize) -> SparseVec<F::Elem> {
        let mut acc = Accumulator::new();
        for (i, x) in a.iter() {
            acc.add_scaled(&self.field, x, self.basis_product(i, j));
        }
        acc.finish(&self.field)
    }

    pub fn mul_basis_left(&self, i: usize, b: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        let mut acc = Accumulator::new();
        for (j, y) in b.iter() {
            acc.add_scaled(&self.field, y, self.basis_product(i, j));
        }
        acc.finish(&self.field)
    }

    /// `e_i e_j - (-1)^{|i||j|} e_j e_i`.
    pub fn supercommutator(&self, i: usize, j: usize) -> SparseVec<F::Elem> {
        let sign = if koszul(self.parity[i], self.parity[j]) { self.field.one() } else { self.field.neg(&self.field.one()) };
        self.basis_product(i, j).add_scaled(&self.field, &sign, self.basis_product(j, i))
    }

    /// Supercommutator of two homogeneous elements.
    pub fn bracket(&self, a: &SparseVec<F::Elem>, b: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        let mut acc = Accumulator::new();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                acc.add_scaled(&self.field, &self.field.mul(x, y), &self.supercommutator(i, j));
            }
        }
        acc.finish(&self.field)
    }

    /// Parity of `v` if it is homogeneous and nonzero.
    pub fn homogeneous_parity(&self, v: &SparseVec<F::Elem>) -> Option<Parity> {
        let mut it = v.iter().map(|(i, _)| self.parity[i]);
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }

    /// Splits `v` into its even and odd parts.
    pub fn homogeneous_parts(&self, v: &SparseVec<F::Elem>) -> [SparseVec<F::Elem>; 2] {
        let mut even = Vec::new();
        let mut odd = Vec::new();
        for (i, x) in v.iter() {
            match self.parity[i] {
                Parity::Even => even.push((i, x.clone())),
                Parity::Odd => odd.push((i, x.clone())),
            }
        }
        [SparseVec::from_pairs(&self.field, even), SparseVec::from_pairs(&self.field, odd)]
    }

    /// Checks associativity, the unit laws and the grading on basis elements.
    pub fn validate(&self) -> ValidationReport {
        let d = self.dim();
        let mut violations = Vec::new();
        if self.parity[self.unit] != Parity::Even {
            violations.push(Violation::UnitParity);
        }
        for i in 0..d {
            if *self.basis_product(self.unit, i) != self.basis(i) {
                violations.push(Violation::LeftUnit { i });
            }
            if *self.basis_product(i, self.unit) != self.basis(i) {
                violations.push(Violation::RightUnit { i });
            }
        }
        for i in 0..d {
            for j in 0..d {
                let expected = self.parity[i] + self.parity[j];
                for (k, _) in self.basis_product(i, j).iter() {
                    if self.parity[k] != expected {
                        violations.push(Violation::Grading { i, j, k });
                    }
                }
            }
        }
        for i in 0..d {
            for j in 0..d {
                let ij = self.basis_product(i, j);
                for k in 0..d {
                    let left = self.mul_basis_right(ij, k);
                    let right = self.mul_basis_left(i, self.basis_product(j, k));
                    if left != right {
                        violations.push(Violation::Associativity { i, j, k });
                    }
                }
            }
        }
        violations.dedup();
        ValidationReport { violations }
    }

    /// Span of all supercommutators of basis elements, `[A, A]`.
    pub fn supercommutator_span(&self) -> SubspaceBasis<F> {
        let d = self.dim();
        let vectors = (0..d).flat_map(|i| (i..d).map(move |j| (i, j))).map(|(i, j)| self.supercommutator(i, j)).collect();
        SubspaceBasis::from_vectors(&self.field, d, vectors).expect("commutators live in A")
    }

    /// Whether `ab = (-1)^{|a||b|} ba` for all basis elements.
    pub fn is_supercommutative(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| (i..d).all(|j| self.supercommutator(i, j).is_zero()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::Rationals;

    fn q() -> Rationals {
        Rationals
    }

    #[test]
    fn ground_field_is_valid() {
        let a = Builtin::Field.build(q()).unwrap();
        assert!(a.validate().is_valid());
        assert_eq!(a.dim(), 1);
    }

    #[test]
    fn grading_violation_is_flagged() {
        // e1 even with e1 e1 = e2 where e2 is odd.
        let f = q();
        let one = |i| SparseVec::unit(&f, i);
        let table = vec![one(0), one(1), one(2), one(1), one(2), SparseVec::zero(), one(2), SparseVec::zero(), SparseVec::zero()];
        let a = SuperAlgebra::from_parts(
            "bad",
            f,
            vec!["one".into(), "x".into(), "y".into()],
            vec![Parity::Even, Parity::Even, Parity::Odd],
            0,
            table,
        )
        .unwrap();
        let report = a.validate();
        assert!(report.violations.contains(&Violation::Grading { i: 1, j: 1, k: 2 }));
    }

    #[test]
    fn grassmann_one_table() {
        let a = Builtin::Grassmann(1).build(q()).unwrap();
        assert_eq!(a.dim(), 2);
        assert_eq!(a.parity(1), Parity::Odd);
        assert!(a.basis_product(1, 1).is_zero());
        assert!(a.validate().is_valid());
    }

    #[test]
    fn commutator_spans() {
        assert_eq!(Builtin::Field.build(q()).unwrap().supercommutator_span().dim(), 0);
        assert_eq!(Builtin::Grassmann(1).build(q()).unwrap().supercommutator_span().dim(), 0);
        assert_eq!(Builtin::Mat(2).build(q()).unwrap().supercommutator_span().dim(), 3);
    }

    #[test]
    fn mat2_commutators_brute_force() {
        // Oracle: all 16 commutators of 2x2 matrix units as dense 2x2 integer matrices.
        let unit = |i: usize, j: usize| {
            let mut m = [[0i64; 2]; 2];
            m[i][j] = 1;
            m
        };
        let mul = |a: [[i64; 2]; 2], b: [[i64; 2]; 2]| {
            let mut c = [[0i64; 2]; 2];
            for i in 0..2 {
                for j in 0..2 {
                    for k in 0..2 {
                        c[i][j] += a[i][k] * b[k][j];
                    }
                }
            }
            c
        };
        let f = q();
        let mut vecs = Vec::new();
        for x in 0..4 {
            for y in 0..4 {
                let (a, b) = (unit(x / 2, x % 2), unit(y / 2, y % 2));
                let (ab, ba) = (mul(a, b), mul(b, a));
                let old: Vec<i64> = (0..4).map(|k| ab[k / 2][k % 2] - ba[k / 2][k % 2]).collect();
                // The builtin basis is (1, E12, E21, E22), so E11 = 1 - E22.
                let new = [old[0], old[1], old[2], old[3] - old[0]];
                let dense: Vec<_> = new.iter().map(|&x| f.from_i64(x)).collect();
                vecs.push(SparseVec::from_dense(&f, &dense));
            }
        }
        let oracle = SubspaceBasis::from_vectors(&f, 4, vecs).unwrap();
        assert_eq!(oracle.dim(), 3);
        let a = Builtin::Mat(2).build(f).unwrap();
        assert!(a.supercommutator_span().equals(&oracle).unwrap());
    }
}
