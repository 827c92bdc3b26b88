//! Sparse Gaussian elimination.
//!
//! Rows are bucketed by leading column. Columns are eliminated left to
//! right, and inside a bucket the shortest row becomes the pivot, which
//! keeps fill-in low on the very sparse boundary matrices produced by the
//! homology code.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::field::Field;
use super::sparse::{Accumulator, SparseVec};
use super::subspace::SubspaceBasis;
use crate::error::{Error, Result};

/// Result of [`reduce`].
#[derive(Debug, Clone)]
pub struct Reduction<F: Field> {
    pub rank: usize,
    pub rowspace: SubspaceBasis<F>,
    pub kernel: SubspaceBasis<F>,
}

/// Row-reduces a matrix given by its rows.
///
/// The kernel is that of the matrix acting on column vectors, i.e. the
/// common solutions of the row equations.
pub fn reduce<F: Field>(field: &F, ncols: usize, rows: &[SparseVec<F::Elem>]) -> Result<Reduction<F>> {
    check_rows(ncols, rows)?;
    let rref = rref(field, echelon(field, rows.to_vec()));
    let kernel = kernel_from_rref(field, ncols, &rref);
    let rank = rref.len();
    let rowspace = SubspaceBasis::from_rref_unchecked(field.clone(), ncols, rref);
    let kernel = SubspaceBasis::from_vectors(field, ncols, kernel)?;
    Ok(Reduction { rank, rowspace, kernel })
}

fn check_rows<E>(ncols: usize, rows: &[SparseVec<E>]) -> Result<()>
where
    E: Clone + PartialEq,
{
    if ncols == 0 && !rows.is_empty() {
        return Err(Error::Input("matrix has rows but zero columns".into()));
    }
    for (r, row) in rows.iter().enumerate() {
        if let Some(max) = row.max_index() {
            if max >= ncols {
                return Err(Error::Input(format!("row {r} has entry in column {max}, width is {ncols}")));
            }
        }
    }
    Ok(())
}

/// Monic pivot rows, strictly increasing pivot columns. Not back-reduced.
pub(crate) fn echelon<F: Field>(field: &F, rows: Vec<SparseVec<F::Elem>>) -> Vec<SparseVec<F::Elem>> {
    let mut buckets: BTreeMap<usize, Vec<SparseVec<F::Elem>>> = BTreeMap::new();
    for r in rows {
        if let Some((c, _)) = r.leading() {
            buckets.entry(c).or_default().push(r);
        }
    }
    let mut pivots = Vec::new();
    while let Some((_, mut group)) = buckets.pop_first() {
        let k = (0..group.len()).min_by_key(|&k| group[k].nnz()).expect("bucket is nonempty");
        let pivot = group.swap_remove(k);
        let lead = pivot.leading().expect("nonzero row").1.clone();
        let pivot = if field.is_one(&lead) {
            pivot
        } else {
            pivot.scale(field, &field.inv(&lead).expect("leading entry is nonzero"))
        };
        for r in group {
            let c = field.neg(r.leading().expect("nonzero row").1);
            let reduced = r.add_scaled(field, &c, &pivot);
            if let Some((col, _)) = reduced.leading() {
                buckets.entry(col).or_default().push(reduced);
            }
        }
        pivots.push(pivot);
    }
    pivots
}

/// Back-substitution turning an echelon form into the reduced echelon form.
pub(crate) fn rref<F: Field>(field: &F, mut rows: Vec<SparseVec<F::Elem>>) -> Vec<SparseVec<F::Elem>> {
    let mut pivot_row: BTreeMap<usize, usize> = BTreeMap::new();
    for (k, r) in rows.iter().enumerate() {
        pivot_row.insert(r.leading().expect("nonzero").0, k);
    }
    for k in (0..rows.len()).rev() {
        let lead = rows[k].leading().expect("nonzero").0;
        let hits: Vec<(usize, F::Elem)> = rows[k]
            .iter()
            .filter(|(c, _)| *c != lead)
            .filter_map(|(c, v)| pivot_row.get(&c).map(|&r| (r, v.clone())))
            .collect();
        if hits.is_empty() {
            continue;
        }
        let mut acc = Accumulator::new();
        acc.add_vec(&rows[k]);
        for (r, v) in hits {
            acc.add_scaled(field, &field.neg(&v), &rows[r]);
        }
        rows[k] = acc.finish(field);
    }
    rows
}

fn kernel_from_rref<F: Field>(field: &F, ncols: usize, rref: &[SparseVec<F::Elem>]) -> Vec<SparseVec<F::Elem>> {
    let mut is_pivot = vec![false; ncols];
    // For each free column, the (pivot column, coefficient) pairs touching it.
    let mut touching: Vec<Vec<(usize, F::Elem)>> = vec![Vec::new(); ncols];
    for row in rref {
        let lead = row.leading().expect("nonzero").0;
        is_pivot[lead] = true;
        for (c, v) in row.iter().skip(1) {
            touching[c].push((lead, field.neg(v)));
        }
    }
    (0..ncols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut pairs = std::mem::take(&mut touching[f]);
            pairs.push((f, field.one()));
            SparseVec::from_pairs(field, pairs)
        })
        .collect()
}

/// Rank of the matrix with the given rows.
///
/// The matrix is split into blocks along connected components of its
/// row/column incidence graph; blocks are eliminated in parallel.
pub fn rank<F: Field>(field: &F, ncols: usize, rows: Vec<SparseVec<F::Elem>>) -> Result<usize> {
    check_rows(ncols, &rows)?;
    let blocks = split_components(ncols, rows);
    Ok(blocks.into_par_iter().map(|block| echelon(field, block).len()).sum())
}

fn split_components<E: Clone + PartialEq>(ncols: usize, rows: Vec<SparseVec<E>>) -> Vec<Vec<SparseVec<E>>> {
    let mut parent: Vec<usize> = (0..ncols).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for r in &rows {
        let mut it = r.iter().map(|(c, _)| c);
        if let Some(first) = it.next() {
            let a = find(&mut parent, first);
            for c in it {
                let b = find(&mut parent, c);
                if a != b {
                    parent[b] = a;
                }
            }
        }
    }
    let mut blocks: BTreeMap<usize, Vec<SparseVec<E>>> = BTreeMap::new();
    for r in rows {
        if let Some((c, _)) = r.leading() {
            let root = find(&mut parent, c);
            blocks.entry(root).or_default().push(r);
        }
    }
    blocks.into_values().collect()
}

/// Transposes a list of column vectors (images of basis vectors) into rows.
pub fn transpose<E: Clone + PartialEq>(nrows: usize, columns: &[SparseVec<E>]) -> Vec<SparseVec<E>> {
    let mut rows: Vec<Vec<(usize, E)>> = vec![Vec::new(); nrows];
    for (j, col) in columns.iter().enumerate() {
        for (i, v) in col.iter() {
            rows[i].push((j, v.clone()));
        }
    }
    rows.into_iter().map(SparseVec::from_sorted_unchecked).collect()
}

/// Kernel of the linear map sending basis vector `i` of a `domain_dim`-space
/// to `images[i]` (vectors of a `codomain_dim`-space).
pub fn kernel_of_images<F: Field>(
    field: &F,
    domain_dim: usize,
    codomain_dim: usize,
    images: &[SparseVec<F::Elem>],
) -> Result<SubspaceBasis<F>> {
    if images.len() != domain_dim {
        return Err(Error::Input(format!("{} images for a {domain_dim}-dimensional domain", images.len())));
    }
    let rows = transpose(codomain_dim, images);
    if domain_dim == 0 {
        return Ok(SubspaceBasis::zero(field.clone(), 0));
    }
    Ok(reduce(field, domain_dim, &rows)?.kernel)
}

/// Rank of the linear map with the given images of basis vectors.
pub fn rank_of_images<F: Field>(field: &F, codomain_dim: usize, images: Vec<SparseVec<F::Elem>>) -> Result<usize> {
    rank(field, codomain_dim, images)
}
