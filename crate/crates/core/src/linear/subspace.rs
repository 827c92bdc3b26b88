use super::echelon::{echelon, rref};
use super::field::Field;
use super::sparse::{Accumulator, SparseVec};
use crate::error::{Error, Result};

/// A subspace of `K^ambient` stored by its reduced row echelon basis.
///
/// The reduced echelon form is unique, so two subspaces are equal exactly
/// when their stored bases are equal.
#[derive(Debug, Clone, PartialEq)]
pub struct SubspaceBasis<F: Field> {
    field: F,
    ambient: usize,
    vectors: Vec<SparseVec<F::Elem>>,
    pivots: Vec<usize>,
}

/// `a / b` for subspaces `b ⊆ a`.
#[derive(Debug, Clone)]
pub struct Quotient<F: Field> {
    pub dim: usize,
    /// Vectors of `a` whose classes form a basis of `a / b`.
    pub section: Vec<SparseVec<F::Elem>>,
}

impl<F: Field> SubspaceBasis<F> {
    pub fn zero(field: F, ambient: usize) -> Self {
        SubspaceBasis { field, ambient, vectors: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: F, ambient: usize) -> Self {
        let vectors = (0..ambient).map(|i| SparseVec::unit(&field, i)).collect();
        SubspaceBasis { field, ambient, vectors, pivots: (0..ambient).collect() }
    }

    pub fn from_vectors(field: &F, ambient: usize, vectors: Vec<SparseVec<F::Elem>>) -> Result<Self> {
        for v in &vectors {
            if v.max_index().is_some_and(|m| m >= ambient) {
                return Err(Error::Input(format!("vector has an entry beyond ambient dimension {ambient}")));
            }
        }
        let rows = rref(field, echelon(field, vectors));
        Ok(Self::from_rref_unchecked(field.clone(), ambient, rows))
    }

    pub(crate) fn from_rref_unchecked(field: F, ambient: usize, vectors: Vec<SparseVec<F::Elem>>) -> Self {
        let pivots = vectors.iter().map(|v| v.leading().expect("nonzero basis vector").0).collect();
        SubspaceBasis { field, ambient, vectors, pivots }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn vectors(&self) -> &[SparseVec<F::Elem>] {
        &self.vectors
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Canonical representative of `v` modulo this subspace: the unique vector
    /// congruent to `v` that vanishes on every pivot column.
    pub fn reduce_vector(&self, v: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        let mut acc = Accumulator::new();
        acc.add_vec(v);
        let mut touched = false;
        for (b, &p) in self.vectors.iter().zip(&self.pivots) {
            if let Some(c) = v.get(p) {
                acc.add_scaled(&self.field, &self.field.neg(c), b);
                touched = true;
            }
        }
        if touched {
            acc.finish(&self.field)
        } else {
            v.clone()
        }
    }

    pub fn contains(&self, v: &SparseVec<F::Elem>) -> bool {
        self.reduce_vector(v).is_zero()
    }

    /// Coordinates of `v` in the stored basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &SparseVec<F::Elem>) -> Option<Vec<F::Elem>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v.get(p).cloned().unwrap_or_else(|| self.field.zero())).collect())
    }

    /// Same as [`Self::coordinates`] as a sparse vector.
    pub fn sparse_coordinates(&self, v: &SparseVec<F::Elem>) -> Option<SparseVec<F::Elem>> {
        if !self.contains(v) {
            return None;
        }
        let pairs = self
            .pivots
            .iter()
            .enumerate()
            .filter_map(|(k, &p)| v.get(p).map(|c| (k, c.clone())))
            .collect();
        Some(SparseVec::from_pairs(&self.field, pairs))
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::Precondition(format!(
                "ambient dimensions differ: {} vs {}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let mut all = self.vectors.clone();
        all.extend(other.vectors.iter().cloned());
        Self::from_vectors(&self.field, self.ambient, all)
    }

    /// Zassenhaus: reduce the rows `(u | u)` and `(w | 0)`; the rows whose
    /// left half vanishes carry a basis of the intersection on the right.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let n = self.ambient;
        let mut rows = Vec::with_capacity(self.dim() + other.dim());
        for u in &self.vectors {
            rows.push(u.add(&self.field, &u.shifted(n)));
        }
        rows.extend(other.vectors.iter().cloned());
        let reduced = echelon(&self.field, rows);
        let meet = reduced
            .into_iter()
            .filter(|r| r.leading().is_some_and(|(c, _)| c >= n))
            .map(|r| r.window(n..2 * n))
            .collect();
        Self::from_vectors(&self.field, n, meet)
    }

    pub fn contains_subspace(&self, other: &Self) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(other.vectors.iter().all(|v| self.contains(v)))
    }

    pub fn equals(&self, other: &Self) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self.vectors == other.vectors)
    }

    /// `self / sub`, which requires `sub ⊆ self`.
    pub fn quotient(&self, sub: &Self) -> Result<Quotient<F>> {
        if !self.contains_subspace(sub)? {
            return Err(Error::Precondition("quotient by a subspace that is not contained".into()));
        }
        let reduced: Vec<_> = self.vectors.iter().map(|v| sub.reduce_vector(v)).collect();
        let section = rref(&self.field, echelon(&self.field, reduced));
        Ok(Quotient { dim: section.len(), section })
    }

    /// Preimage of this subspace under a linear map given by the images of
    /// basis vectors.
    pub fn preimage(&self, images: &[SparseVec<F::Elem>]) -> Result<Self> {
        let projected: Vec<_> = images.iter().map(|v| self.reduce_vector(v)).collect();
        super::echelon::kernel_of_images(&self.field, images.len(), self.ambient, &projected)
    }
}

/// `K^ambient / R` with coordinates read off the non-pivot columns of `R`.
///
/// An optional column priority decides which columns pivots may occupy
/// first; the columns listed last are the ones kept as quotient
/// coordinates when possible.
#[derive(Debug, Clone)]
pub struct QuotientSpace<F: Field> {
    relations: SubspaceBasis<F>,
    /// `order[k]` is the original column at internal position `k`.
    order: Vec<usize>,
    position: Vec<usize>,
    /// Original column indices of the quotient coordinates.
    free: Vec<usize>,
    free_slot: Vec<Option<usize>>,
}

impl<F: Field> QuotientSpace<F> {
    pub fn new(field: &F, ambient: usize, relations: Vec<SparseVec<F::Elem>>) -> Result<Self> {
        Self::with_column_order(field, ambient, relations, (0..ambient).collect())
    }

    pub fn with_column_order(
        field: &F,
        ambient: usize,
        relations: Vec<SparseVec<F::Elem>>,
        order: Vec<usize>,
    ) -> Result<Self> {
        let mut position = vec![usize::MAX; ambient];
        for (k, &c) in order.iter().enumerate() {
            if c >= ambient || position[c] != usize::MAX {
                return Err(Error::Input("column order is not a permutation".into()));
            }
            position[c] = k;
        }
        if order.len() != ambient {
            return Err(Error::Input("column order is not a permutation".into()));
        }
        let permuted = relations.iter().map(|v| v.remap(|c| position[c])).collect();
        let relations = SubspaceBasis::from_vectors(field, ambient, permuted)?;
        let mut is_pivot = vec![false; ambient];
        for &p in relations.pivots() {
            is_pivot[p] = true;
        }
        let mut free: Vec<usize> = (0..ambient).filter(|&k| !is_pivot[k]).map(|k| order[k]).collect();
        free.sort_unstable();
        let mut free_slot = vec![None; ambient];
        for (s, &c) in free.iter().enumerate() {
            free_slot[c] = Some(s);
        }
        Ok(QuotientSpace { relations, order, position, free, free_slot })
    }

    pub fn ambient_dim(&self) -> usize {
        self.relations.ambient_dim()
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn relation_dim(&self) -> usize {
        self.relations.dim()
    }

    /// Ambient columns whose unit vectors form the section of the quotient.
    pub fn free_columns(&self) -> &[usize] {
        &self.free
    }

    /// Quotient coordinates of the class of `v`.
    pub fn project(&self, v: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        let field = self.relations.field();
        let reduced = self.relations.reduce_vector(&v.remap(|c| self.position[c]));
        let pairs = reduced
            .iter()
            .map(|(k, x)| (self.free_slot[self.order[k]].expect("reduced vectors live on free columns"), x.clone()))
            .collect();
        SparseVec::from_pairs(field, pairs)
    }

    /// Ambient representative of quotient basis vector `k`.
    pub fn section(&self, k: usize) -> SparseVec<F::Elem> {
        SparseVec::unit(self.relations.field(), self.free[k])
    }

    /// Whether `v` lies in the relation span.
    pub fn is_relation(&self, v: &SparseVec<F::Elem>) -> bool {
        self.relations.contains(&v.remap(|c| self.position[c]))
    }
}
