use std::collections::HashSet;

use super::SuperAlgebra;
use crate::error::{Error, Result};
use crate::linear::{Field, QuotientSpace, SparseVec, SubspaceBasis};
use crate::parity::{koszul, Parity};

/// `A / I` for a two-sided graded ideal `I`.
#[derive(Debug, Clone)]
pub struct IdealQuotient<F: Field> {
    pub ideal: SubspaceBasis<F>,
    /// `None` when the unit lies in the ideal, i.e. the quotient is zero.
    pub quotient: Option<SuperAlgebra<F>>,
    /// Images of the basis of `A` in quotient coordinates.
    pub projection: Vec<SparseVec<F::Elem>>,
}

impl<F: Field> IdealQuotient<F> {
    pub fn quotient_dim(&self) -> usize {
        self.quotient.as_ref().map_or(0, |q| q.dim())
    }

    pub fn is_zero_algebra(&self) -> bool {
        self.quotient.is_none()
    }

    pub fn project(&self, v: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        let field = self.ideal.field();
        let mut acc = crate::linear::Accumulator::new();
        for (i, x) in v.iter() {
            acc.add_scaled(field, x, &self.projection[i]);
        }
        acc.finish(field)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComposeKind {
    DirectProduct,
    SuperTensor,
}

impl<F: Field> SuperAlgebra<F> {
    /// Smallest two-sided ideal containing the homogeneous parts of `gens`.
    pub fn generated_ideal(&self, gens: &[SparseVec<F::Elem>]) -> SubspaceBasis<F> {
        let d = self.dim();
        let mut current: Vec<SparseVec<F::Elem>> =
            gens.iter().flat_map(|g| self.homogeneous_parts(g)).filter(|v| !v.is_zero()).collect();
        let mut ideal = SubspaceBasis::from_vectors(self.field(), d, current.clone()).expect("vectors live in A");
        loop {
            let mut next = ideal.vectors().to_vec();
            for v in &current {
                for k in 0..d {
                    next.push(self.mul_basis_left(k, v));
                    next.push(self.mul_basis_right(v, k));
                }
            }
            let grown = SubspaceBasis::from_vectors(self.field(), d, next).expect("vectors live in A");
            if grown.dim() == ideal.dim() {
                return ideal;
            }
            current = grown.vectors().to_vec();
            ideal = grown;
        }
    }

    /// Quotient by the ideal generated by `gens`.
    ///
    /// The quotient basis is a subset of the basis of `A` that always keeps
    /// the unit when it survives.
    pub fn graded_ideal_quotient(&self, gens: &[SparseVec<F::Elem>]) -> Result<IdealQuotient<F>> {
        let d = self.dim();
        let ideal = self.generated_ideal(gens);
        let mut order: Vec<usize> = (0..d).filter(|&i| i != self.unit_index()).collect();
        order.push(self.unit_index());
        let space = QuotientSpace::with_column_order(self.field(), d, ideal.vectors().to_vec(), order)?;
        let projection: Vec<_> = (0..d).map(|i| space.project(&self.basis(i))).collect();
        let free = space.free_columns();
        let Some(unit) = free.iter().position(|&c| c == self.unit_index()) else {
            return Ok(IdealQuotient { ideal, quotient: None, projection });
        };
        let names = free.iter().map(|&c| self.basis_names()[c].clone()).collect();
        let parity = free.iter().map(|&c| self.parity(c)).collect();
        let mut table = Vec::with_capacity(free.len() * free.len());
        for &a in free {
            for &b in free {
                table.push(space.project(self.basis_product(a, b)));
            }
        }
        let quotient = SuperAlgebra::new(format!("{}_quot", self.name()), self.field().clone(), names, parity, unit, table)?;
        Ok(IdealQuotient { ideal, quotient: Some(quotient), projection })
    }

    /// Quotient by the ideal generated by all supercommutators; the result is supercommutative.
    pub fn supercommutative_quotient(&self) -> Result<IdealQuotient<F>> {
        let d = self.dim();
        let gens: Vec<_> = (0..d).flat_map(|i| (i..d).map(move |j| (i, j))).map(|(i, j)| self.supercommutator(i, j)).collect();
        self.graded_ideal_quotient(&gens)
    }

    pub fn compose(&self, other: &Self, kind: ComposeKind) -> Result<Self> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch(self.field().spec().to_string(), other.field().spec().to_string()));
        }
        match kind {
            ComposeKind::DirectProduct => self.direct_product(other),
            ComposeKind::SuperTensor => self.super_tensor(other),
        }
    }

    /// `A × B` in the basis `(1,1), (a_i,0) for a_i ≠ 1, (0,b_j)`.
    fn direct_product(&self, other: &Self) -> Result<Self> {
        let field = self.field().clone();
        let (da, db) = (self.dim(), other.dim());
        let (ua, ub) = (self.unit_index(), other.unit_index());
        // natural coordinates: 0..da for A, da..da+db for B
        let a_slots: Vec<usize> = (0..da).filter(|&i| i != ua).collect();
        let mut names = vec!["one".to_string()];
        let mut parity = vec![Parity::Even];
        let mut natural_basis = vec![SparseVec::from_pairs(&field, vec![(ua, field.one()), (da + ub, field.one())])];
        for &i in &a_slots {
            names.push(format!("l_{}", self.basis_names()[i]));
            parity.push(self.parity(i));
            natural_basis.push(SparseVec::unit(&field, i));
        }
        for j in 0..db {
            names.push(format!("r_{}", other.basis_names()[j]));
            parity.push(other.parity(j));
            natural_basis.push(SparseVec::unit(&field, da + j));
        }
        let to_new = |v: &SparseVec<F::Elem>| {
            let mut pairs = Vec::new();
            let unit_coeff = v.get(ua).cloned();
            if let Some(c) = &unit_coeff {
                pairs.push((0, c.clone()));
            }
            for (k, &i) in a_slots.iter().enumerate() {
                if let Some(c) = v.get(i) {
                    pairs.push((1 + k, c.clone()));
                }
            }
            for j in 0..db {
                let mut c = v.get(da + j).cloned().unwrap_or_else(|| field.zero());
                if j == ub {
                    if let Some(u) = &unit_coeff {
                        c = field.sub(&c, u);
                    }
                }
                pairs.push((da + j, c));
            }
            SparseVec::from_pairs(&field, pairs)
        };
        let mul_natural = |x: &SparseVec<F::Elem>, y: &SparseVec<F::Elem>| {
            let xa = x.window(0..da);
            let ya = y.window(0..da);
            let xb = x.window(da..da + db);
            let yb = y.window(da..da + db);
            self.mul(&xa, &ya).add(&field, &other.mul(&xb, &yb).shifted(da))
        };
        let n = da + db;
        let mut table = Vec::with_capacity(n * n);
        for x in &natural_basis {
            for y in &natural_basis {
                table.push(to_new(&mul_natural(x, y)));
            }
        }
        SuperAlgebra::new(format!("{}_x_{}", self.name(), other.name()), field, dedup_names(names), parity, 0, table)
    }

    /// `A ⊗ B` with `(a⊗b)(a'⊗b') = (-1)^{|b||a'|} aa' ⊗ bb'`.
    fn super_tensor(&self, other: &Self) -> Result<Self> {
        let field = self.field().clone();
        let (da, db) = (self.dim(), other.dim());
        let mut names = Vec::with_capacity(da * db);
        let mut parity = Vec::with_capacity(da * db);
        for i in 0..da {
            for j in 0..db {
                names.push(format!("{}_{}", self.basis_names()[i], other.basis_names()[j]));
                parity.push(self.parity(i) + other.parity(j));
            }
        }
        let mut table = Vec::with_capacity(da * db * da * db);
        for i in 0..da {
            for j in 0..db {
                for k in 0..da {
                    for l in 0..db {
                        let sign = koszul(other.parity(j), self.parity(k));
                        let mut pairs = Vec::new();
                        for (s, x) in self.basis_product(i, k).iter() {
                            for (t, y) in other.basis_product(j, l).iter() {
                                pairs.push((s * db + t, field.signed(sign, &field.mul(x, y))));
                            }
                        }
                        table.push(SparseVec::from_pairs(&field, pairs));
                    }
                }
            }
        }
        let unit = self.unit_index() * db + other.unit_index();
        SuperAlgebra::new(format!("{}_t_{}", self.name(), other.name()), field, dedup_names(names), parity, unit, table)
    }
}

fn dedup_names(names: Vec<String>) -> Vec<String> {
    let unique: HashSet<&String> = names.iter().collect();
    if unique.len() == names.len() {
        names
    } else {
        (0..names.len()).map(|i| format!("b{i}")).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::Rationals;
    use crate::superalgebra::Builtin;

    fn build(b: Builtin) -> SuperAlgebra<Rationals> {
        b.build(Rationals).unwrap()
    }

    #[test]
    fn grassmann_is_its_own_supercommutative_quotient() {
        let a = build(Builtin::Grassmann(1));
        let q = a.supercommutative_quotient().unwrap();
        assert_eq!(q.ideal.dim(), 0);
        assert_eq!(q.quotient_dim(), 2);
    }

    #[test]
    fn mat2_collapses() {
        let a = build(Builtin::Mat(2));
        let q = a.supercommutative_quotient().unwrap();
        assert_eq!(q.ideal.dim(), 4);
        assert!(q.is_zero_algebra());
        assert!(q.projection.iter().all(|v| v.is_zero()));
    }

    #[test]
    fn field_quotient_is_field() {
        let a = build(Builtin::Field);
        let q = a.supercommutative_quotient().unwrap();
        assert_eq!(q.ideal.dim(), 0);
        assert_eq!(q.quotient_dim(), 1);
    }

    #[test]
    fn ideal_is_two_sided_and_projection_is_multiplicative() {
        for b in Builtin::corpus() {
            let a = build(b);
            let d = a.dim();
            // ideal generated by the first non-unit basis element, if any
            let gens: Vec<_> = (0..d).filter(|&i| i != a.unit_index()).take(1).map(|i| a.basis(i)).collect();
            let q = a.graded_ideal_quotient(&gens).unwrap();
            for v in q.ideal.vectors() {
                for k in 0..d {
                    assert!(q.ideal.contains(&a.mul_basis_left(k, v)));
                    assert!(q.ideal.contains(&a.mul_basis_right(v, k)));
                }
            }
            if let Some(quot) = &q.quotient {
                for i in 0..d {
                    for j in 0..d {
                        let lhs = q.project(a.basis_product(i, j));
                        let rhs = quot.mul(&q.projection[i], &q.projection[j]);
                        assert_eq!(lhs, rhs, "{b}: ({i},{j})");
                    }
                }
            }
        }
    }

    #[test]
    fn mat_super_quotient() {
        // mat(1|1): the supercommutator ideal contains the unit as well.
        let a = build(Builtin::MatSuper(1, 1));
        let q = a.supercommutative_quotient().unwrap();
        assert!(q.is_zero_algebra());
    }

    #[test]
    fn tensor_of_grassmann_lines() {
        let g1 = build(Builtin::Grassmann(1));
        let g2 = build(Builtin::Grassmann(2));
        let t = g1.compose(&g1, ComposeKind::SuperTensor).unwrap();
        assert_eq!(t.dim(), 4);
        // basis matching: 1⊗1 -> 1, θ⊗1 -> t1, 1⊗θ -> t2, θ⊗θ -> t12
        let map = [0usize, 2, 1, 3];
        for i in 0..4 {
            for j in 0..4 {
                let lhs = t.basis_product(i, j).remap(|k| map[k]);
                assert_eq!(&lhs, g2.basis_product(map[i], map[j]), "({i},{j})");
            }
        }
    }

    #[test]
    fn tensor_unit_law() {
        let f = build(Builtin::Field);
        for b in Builtin::corpus() {
            let x = build(b);
            let t = f.compose(&x, ComposeKind::SuperTensor).unwrap();
            assert_eq!(t.table(), x.table());
            assert_eq!(t.parities(), x.parities());
        }
    }

    #[test]
    fn tensor_is_associative() {
        let small = [Builtin::Field, Builtin::Dual, Builtin::Grassmann(1)];
        for a in small {
            for b in small {
                for c in small {
                    let (a, b, c) = (build(a), build(b), build(c));
                    let left = a.compose(&b, ComposeKind::SuperTensor).unwrap().compose(&c, ComposeKind::SuperTensor).unwrap();
                    let right = a.compose(&b.compose(&c, ComposeKind::SuperTensor).unwrap(), ComposeKind::SuperTensor).unwrap();
                    assert_eq!(left.table(), right.table());
                }
            }
        }
    }

    #[test]
    fn direct_product_of_fields() {
        let f = build(Builtin::Field);
        let p = f.compose(&f, ComposeKind::DirectProduct).unwrap();
        assert_eq!(p.dim(), 2);
        assert!(p.validate().is_valid());
        // (0,1) is idempotent
        assert_eq!(p.basis_product(1, 1), &p.basis(1));
    }

    #[test]
    fn mixed_fields_are_rejected() {
        use crate::linear::PrimeField;
        let a = Builtin::Field.build(PrimeField::new(3).unwrap()).unwrap();
        let b = Builtin::Field.build(PrimeField::new(5).unwrap()).unwrap();
        assert!(matches!(a.compose(&b, ComposeKind::SuperTensor), Err(Error::FieldMismatch(..))));
    }
}
