use super::field::Field;

/// A sparse coordinate vector: `(index, value)` pairs sorted by index, no
/// stored zeros. The ambient dimension is tracked by whoever owns the vector.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseVec<E> {
    entries: Vec<(usize, E)>,
}

impl<E> Default for SparseVec<E> {
    fn default() -> Self {
        SparseVec { entries: Vec::new() }
    }
}

impl<E: Clone + PartialEq> SparseVec<E> {
    pub fn zero() -> Self {
        SparseVec { entries: Vec::new() }
    }

    /// Caller guarantees strictly increasing indices and no zero values.
    pub(crate) fn from_sorted_unchecked(entries: Vec<(usize, E)>) -> Self {
        SparseVec { entries }
    }

    pub fn unit<F: Field<Elem = E>>(field: &F, index: usize) -> Self {
        SparseVec { entries: vec![(index, field.one())] }
    }

    pub fn single<F: Field<Elem = E>>(field: &F, index: usize, value: E) -> Self {
        if field.is_zero(&value) {
            Self::zero()
        } else {
            SparseVec { entries: vec![(index, value)] }
        }
    }

    /// Builds from unsorted pairs, summing duplicates and dropping zeros.
    pub fn from_pairs<F: Field<Elem = E>>(field: &F, mut pairs: Vec<(usize, E)>) -> Self {
        pairs.sort_by_key(|(i, _)| *i);
        let mut entries: Vec<(usize, E)> = Vec::with_capacity(pairs.len());
        for (i, v) in pairs {
            match entries.last_mut() {
                Some((j, w)) if *j == i => *w = field.add(w, &v),
                _ => entries.push((i, v)),
            }
        }
        entries.retain(|(_, v)| !field.is_zero(v));
        SparseVec { entries }
    }

    pub fn from_dense<F: Field<Elem = E>>(field: &F, dense: &[E]) -> Self {
        let entries = dense
            .iter()
            .enumerate()
            .filter(|(_, v)| !field.is_zero(v))
            .map(|(i, v)| (i, v.clone()))
            .collect();
        SparseVec { entries }
    }

    pub fn to_dense<F: Field<Elem = E>>(&self, field: &F, dim: usize) -> Vec<E> {
        let mut out = vec![field.zero(); dim];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[(usize, E)] {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &E)> {
        self.entries.iter().map(|(i, v)| (*i, v))
    }

    pub fn leading(&self) -> Option<(usize, &E)> {
        self.entries.first().map(|(i, v)| (*i, v))
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    pub fn get(&self, index: usize) -> Option<&E> {
        self.entries
            .binary_search_by_key(&index, |(i, _)| *i)
            .ok()
            .map(|k| &self.entries[k].1)
    }

    pub fn scale<F: Field<Elem = E>>(&self, field: &F, c: &E) -> Self {
        if field.is_zero(c) {
            return Self::zero();
        }
        let entries = self
            .entries
            .iter()
            .map(|(i, v)| (*i, field.mul(v, c)))
            .filter(|(_, v)| !field.is_zero(v))
            .collect();
        SparseVec { entries }
    }

    pub fn neg<F: Field<Elem = E>>(&self, field: &F) -> Self {
        SparseVec { entries: self.entries.iter().map(|(i, v)| (*i, field.neg(v))).collect() }
    }

    /// `self + c * other`.
    pub fn add_scaled<F: Field<Elem = E>>(&self, field: &F, c: &E, other: &Self) -> Self {
        if field.is_zero(c) || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, field.mul(c, y)));
                        b.next();
                    } else {
                        let v = field.add(x, &field.mul(c, y));
                        if !field.is_zero(&v) {
                            out.push((*i, v));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, field.mul(c, y)));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVec { entries: out }
    }

    pub fn add<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        self.add_scaled(field, &field.one(), other)
    }

    pub fn sub<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        self.add_scaled(field, &field.neg(&field.one()), other)
    }

    /// Re-indexes through `map`, which must be injective on the support.
    pub fn remap(&self, map: impl Fn(usize) -> usize) -> Self {
        let mut entries: Vec<(usize, E)> = self.entries.iter().map(|(i, v)| (map(*i), v.clone())).collect();
        entries.sort_by_key(|(i, _)| *i);
        SparseVec { entries }
    }

    /// Shifts every index by `offset`.
    pub fn shifted(&self, offset: usize) -> Self {
        SparseVec { entries: self.entries.iter().map(|(i, v)| (*i + offset, v.clone())).collect() }
    }

    /// Keeps indices in `range`, shifted down to start at zero.
    pub fn window(&self, range: std::ops::Range<usize>) -> Self {
        let entries = self
            .entries
            .iter()
            .filter(|(i, _)| range.contains(i))
            .map(|(i, v)| (*i - range.start, v.clone()))
            .collect();
        SparseVec { entries }
    }
}

/// Accumulates a linear combination of sparse vectors.
#[derive(Debug, Clone)]
pub struct Accumulator<F: Field> {
    pairs: Vec<(usize, F::Elem)>,
}

impl<F: Field> Default for Accumulator<F> {
    fn default() -> Self {
        Accumulator { pairs: Vec::new() }
    }
}

impl<F: Field> Accumulator<F> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, index: usize, value: F::Elem) {
        self.pairs.push((index, value));
    }

    pub fn add_scaled(&mut self, field: &F, c: &F::Elem, v: &SparseVec<F::Elem>) {
        if field.is_zero(c) {
            return;
        }
        for (i, x) in v.iter() {
            self.pairs.push((i, field.mul(c, x)));
        }
    }

    pub fn add_vec(&mut self, v: &SparseVec<F::Elem>) {
        for (i, x) in v.iter() {
            self.pairs.push((i, x.clone()));
        }
    }

    pub fn finish(self, field: &F) -> SparseVec<F::Elem> {
        SparseVec::from_pairs(field, self.pairs)
    }
}
