//! Z/2-graded cyclic homology: the pairing module `<<A,A>>`, `HC_1` as the
//! kernel of the commutator map, and the cyclic complex `C_*(A)`.

use crate::error::{Error, Result};
use crate::linear::{kernel_of_images, rank, Accumulator, Field, QuotientSpace, SparseVec, SubspaceBasis};
use crate::parity::{koszul, Parity};
use crate::superalgebra::SuperAlgebra;

pub const DEFAULT_MAX_CHAIN: usize = 20_000;
pub const DEFAULT_MAX_DEGREE: usize = 3;

/// `<<A,A>> = (A ⊗ A) / I`. Tensor coordinates are `s * dim A + t` for `e_s ⊗ e_t`.
#[derive(Debug, Clone)]
pub struct PairingModule<F: Field> {
    algebra: SuperAlgebra<F>,
    space: QuotientSpace<F>,
    commutator_map: Vec<SparseVec<F::Elem>>,
}

impl<F: Field> PairingModule<F> {
    pub fn new(algebra: &SuperAlgebra<F>) -> Result<Self> {
        let field = algebra.field();
        let d = algebra.dim();
        let p = |i| algebra.parity(i);
        let mut relations = Vec::with_capacity(d * d + d * d * d);
        for s in 0..d {
            for t in s..d {
                let pairs = vec![(s * d + t, field.one()), (t * d + s, field.signed(koszul(p(s), p(t)), &field.one()))];
                relations.push(SparseVec::from_pairs(field, pairs));
            }
        }
        for a in 0..d {
            for b in 0..d {
                for c in 0..d {
                    let mut acc = Accumulator::new();
                    push_tensor(&mut acc, field, koszul(p(a), p(c)), a, algebra.basis_product(b, c), d);
                    push_tensor(&mut acc, field, koszul(p(b), p(a)), b, algebra.basis_product(c, a), d);
                    push_tensor(&mut acc, field, koszul(p(c), p(b)), c, algebra.basis_product(a, b), d);
                    let v = acc.finish(field);
                    if !v.is_zero() {
                        relations.push(v);
                    }
                }
            }
        }
        let space = QuotientSpace::new(field, d * d, relations)?;
        let commutator_map = space
            .free_columns()
            .iter()
            .map(|&c| algebra.supercommutator(c / d, c % d))
            .collect();
        Ok(PairingModule { algebra: algebra.clone(), space, commutator_map })
    }

    pub fn algebra(&self) -> &SuperAlgebra<F> {
        &self.algebra
    }

    pub fn quotient_dim(&self) -> usize {
        self.space.dim()
    }

    pub fn relation_dim(&self) -> usize {
        self.space.relation_dim()
    }

    /// Class of an arbitrary tensor.
    pub fn project(&self, tensor: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        self.space.project(tensor)
    }

    /// `<<e_s, e_t>>`.
    pub fn class_of_basis(&self, s: usize, t: usize) -> SparseVec<F::Elem> {
        let d = self.algebra.dim();
        self.space.project(&SparseVec::unit(self.algebra.field(), s * d + t))
    }

    /// `<<a, b>>` for arbitrary elements.
    pub fn class_of(&self, a: &SparseVec<F::Elem>, b: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        let field = self.algebra.field();
        let d = self.algebra.dim();
        let mut acc = Accumulator::new();
        for (s, x) in a.iter() {
            for (t, y) in b.iter() {
                acc.push(s * d + t, field.mul(x, y));
            }
        }
        self.space.project(&acc.finish(field))
    }

    /// The pure tensor `(s, t)` representing quotient basis vector `k`.
    pub fn section_pair(&self, k: usize) -> (usize, usize) {
        let d = self.algebra.dim();
        let c = self.space.free_columns()[k];
        (c / d, c % d)
    }

    pub fn section(&self, k: usize) -> SparseVec<F::Elem> {
        self.space.section(k)
    }

    pub fn parity(&self, k: usize) -> Parity {
        let (s, t) = self.section_pair(k);
        self.algebra.parity(s) + self.algebra.parity(t)
    }

    /// `d(<<a,b>>) = [a,b]` on the quotient basis.
    pub fn commutator_map(&self) -> &[SparseVec<F::Elem>] {
        &self.commutator_map
    }

    /// `d` applied to a vector in quotient coordinates.
    pub fn commutator(&self, v: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        let field = self.algebra.field();
        let mut acc = Accumulator::new();
        for (k, x) in v.iter() {
            acc.add_scaled(field, x, &self.commutator_map[k]);
        }
        acc.finish(field)
    }

    pub fn is_relation(&self, tensor: &SparseVec<F::Elem>) -> bool {
        self.space.is_relation(tensor)
    }
}

fn push_tensor<F: Field>(
    acc: &mut Accumulator<F>,
    field: &F,
    negate: bool,
    left: usize,
    right: &SparseVec<F::Elem>,
    d: usize,
) {
    for (r, x) in right.iter() {
        acc.push(left * d + r, field.signed(negate, x));
    }
}

/// `HC_1(A)` inside `<<A,A>>`.
#[derive(Debug, Clone)]
pub struct Hc1<F: Field> {
    pub pairing: PairingModule<F>,
    pub kernel: SubspaceBasis<F>,
}

impl<F: Field> Hc1<F> {
    pub fn dim(&self) -> usize {
        self.kernel.dim()
    }
}

pub fn pairing_module<F: Field>(a: &SuperAlgebra<F>) -> Result<PairingModule<F>> {
    PairingModule::new(a)
}

pub fn hc1<F: Field>(a: &SuperAlgebra<F>) -> Result<Hc1<F>> {
    let pairing = PairingModule::new(a)?;
    let kernel = kernel_of_images(a.field(), pairing.quotient_dim(), a.dim(), pairing.commutator_map())?;
    Ok(Hc1 { pairing, kernel })
}

/// Degree `n` of the cyclic complex: `C_n = A^{⊗(n+1)} / I_n` and `d_n: C_n → C_{n-1}`.
#[derive(Debug, Clone)]
pub struct ChainLevel<F: Field> {
    pub n: usize,
    pub ambient_dim: usize,
    pub space: QuotientSpace<F>,
    /// Images of the quotient basis of `C_n` in quotient coordinates of `C_{n-1}`; empty for `n = 0`.
    pub boundary: Vec<SparseVec<F::Elem>>,
    /// Whether `d̃_n(I_n) ⊆ I_{n-1}` held on every generator.
    pub well_defined: bool,
}

impl<F: Field> ChainLevel<F> {
    pub fn quotient_dim(&self) -> usize {
        self.space.dim()
    }
}

/// A pure tensor of basis indices, most significant factor first.
fn encode(tuple: &[usize], d: usize) -> usize {
    tuple.iter().fold(0, |acc, &x| acc * d + x)
}

fn decode(mut code: usize, len: usize, d: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for k in (0..len).rev() {
        out[k] = code % d;
        code /= d;
    }
    out
}

fn check_chain_size(d: usize, n: usize, max_chain: usize) -> Result<usize> {
    let mut size: usize = 1;
    for _ in 0..=n {
        size = size.saturating_mul(d);
    }
    if size > max_chain {
        return Err(Error::Resource { what: format!("A^(⊗{})", n + 1), dim: size, limit: max_chain });
    }
    Ok(size)
}

/// Sign `(-1)^{n + |a_n| Σ_{i<n} |a_i|}` of the cyclic rotation.
fn rotation_negates<F: Field>(a: &SuperAlgebra<F>, tuple: &[usize]) -> bool {
    let n = tuple.len() - 1;
    let last = a.parity(tuple[n]);
    let rest = tuple[..n].iter().fold(Parity::Even, |acc, &x| acc + a.parity(x));
    (n % 2 == 1) ^ koszul(last, rest)
}

fn cyclic_relations<F: Field>(a: &SuperAlgebra<F>, n: usize, size: usize) -> Vec<SparseVec<F::Elem>> {
    let field = a.field();
    let d = a.dim();
    if n == 0 {
        return Vec::new();
    }
    (0..size)
        .filter_map(|code| {
            let tuple = decode(code, n + 1, d);
            let mut rotated = Vec::with_capacity(n + 1);
            rotated.push(tuple[n]);
            rotated.extend_from_slice(&tuple[..n]);
            let sign = field.signed(!rotation_negates(a, &tuple), &field.one());
            let v = SparseVec::from_pairs(field, vec![(code, field.one()), (encode(&rotated, d), sign)]);
            (!v.is_zero()).then_some(v)
        })
        .collect()
}

/// `d̃_n` on a pure basis tensor, as a tensor of length `n`.
fn raw_boundary<F: Field>(a: &SuperAlgebra<F>, tuple: &[usize]) -> SparseVec<F::Elem> {
    let field = a.field();
    let d = a.dim();
    let n = tuple.len() - 1;
    let mut acc = Accumulator::new();
    for i in 0..n {
        let negate = i % 2 == 1;
        for (r, x) in a.basis_product(tuple[i], tuple[i + 1]).iter() {
            let mut t: Vec<usize> = Vec::with_capacity(n);
            t.extend_from_slice(&tuple[..i]);
            t.push(r);
            t.extend_from_slice(&tuple[i + 2..]);
            acc.push(encode(&t, d), field.signed(negate, x));
        }
    }
    let negate = rotation_negates(a, tuple);
    for (r, x) in a.basis_product(tuple[n], tuple[0]).iter() {
        let mut t: Vec<usize> = Vec::with_capacity(n);
        t.push(r);
        t.extend_from_slice(&tuple[1..n]);
        acc.push(encode(&t, d), field.signed(negate, x));
    }
    acc.finish(field)
}

fn apply_raw<F: Field>(a: &SuperAlgebra<F>, v: &SparseVec<F::Elem>, len: usize) -> SparseVec<F::Elem> {
    let field = a.field();
    let mut acc = Accumulator::new();
    for (code, x) in v.iter() {
        acc.add_scaled(field, x, &raw_boundary(a, &decode(code, len, a.dim())));
    }
    acc.finish(field)
}

/// Builds `C_n` and `d_n`, verifying that `d̃_n` descends to the quotients.
pub fn chain_level<F: Field>(a: &SuperAlgebra<F>, n: usize, max_chain: usize) -> Result<ChainLevel<F>> {
    let field = a.field();
    let d = a.dim();
    let size = check_chain_size(d, n, max_chain)?;
    let relations = cyclic_relations(a, n, size);
    let space = QuotientSpace::new(field, size, relations.clone())?;
    if n == 0 {
        return Ok(ChainLevel { n, ambient_dim: size, space, boundary: Vec::new(), well_defined: true });
    }
    let lower_size = size / d;
    let lower = QuotientSpace::new(field, lower_size, cyclic_relations(a, n - 1, lower_size))?;
    let well_defined = relations.iter().all(|r| lower.project(&apply_raw(a, r, n + 1)).is_zero());
    let boundary = space
        .free_columns()
        .iter()
        .map(|&code| lower.project(&raw_boundary(a, &decode(code, n + 1, d))))
        .collect();
    Ok(ChainLevel { n, ambient_dim: size, space, boundary, well_defined })
}

/// `dim HC_n(A) = dim ker d_n - rank d_{n+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HcReport {
    pub n: usize,
    pub dim: usize,
    pub chain_dims: Vec<usize>,
    pub well_defined: bool,
    /// `d_n ∘ d_{n+1} = 0`.
    pub square_zero: bool,
}

pub fn hc_n<F: Field>(a: &SuperAlgebra<F>, n: usize, max_chain: usize) -> Result<HcReport> {
    if n > DEFAULT_MAX_DEGREE {
        return Err(Error::Resource { what: "cyclic degree".into(), dim: n, limit: DEFAULT_MAX_DEGREE });
    }
    let field = a.field();
    let lower = chain_level(a, n, max_chain)?;
    let upper = chain_level(a, n + 1, max_chain)?;
    let rank_n = image_rank(field, &lower.boundary)?;
    let rank_up = image_rank(field, &upper.boundary)?;
    let square_zero = if n == 0 {
        true
    } else {
        upper.boundary.iter().all(|v| {
            let mut acc = Accumulator::new();
            for (k, x) in v.iter() {
                acc.add_scaled(field, x, &lower.boundary[k]);
            }
            acc.finish(field).is_zero()
        })
    };
    Ok(HcReport {
        n,
        dim: lower.quotient_dim() - rank_n - rank_up,
        chain_dims: vec![lower.quotient_dim(), upper.quotient_dim()],
        well_defined: lower.well_defined && upper.well_defined,
        square_zero,
    })
}

fn image_rank<F: Field>(field: &F, images: &[SparseVec<F::Elem>]) -> Result<usize> {
    let width = images.iter().filter_map(|v| v.max_index()).max().map_or(1, |m| m + 1);
    rank(field, width, images.to_vec())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hc1Crosscheck {
    pub pairing_route: usize,
    pub complex_route: usize,
    pub pass: bool,
}

pub fn hc1_crosscheck<F: Field>(a: &SuperAlgebra<F>, max_chain: usize) -> Result<Hc1Crosscheck> {
    let pairing_route = hc1(a)?.dim();
    let report = hc_n(a, 1, max_chain)?;
    let complex_route = report.dim;
    Ok(Hc1Crosscheck {
        pairing_route,
        complex_route,
        pass: pairing_route == complex_route && report.well_defined && report.square_zero,
    })
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
    fn pairing_dims() {
        assert_eq!(pairing_module(&build(Builtin::Field)).unwrap().quotient_dim(), 0);
        assert_eq!(pairing_module(&build(Builtin::Dual)).unwrap().quotient_dim(), 0);
        let g = pairing_module(&build(Builtin::Grassmann(1))).unwrap();
        assert_eq!(g.quotient_dim(), 1);
        assert_eq!(g.section_pair(0), (1, 1));
    }

    #[test]
    fn unit_pairs_vanish() {
        for b in Builtin::corpus() {
            let a = build(b);
            let p = pairing_module(&a).unwrap();
            for s in 0..a.dim() {
                assert!(p.class_of_basis(a.unit_index(), s).is_zero(), "{b}: <<1,e{s}>>");
            }
        }
    }

    #[test]
    fn section_then_project_is_identity() {
        for b in Builtin::corpus() {
            let p = pairing_module(&build(b)).unwrap();
            for k in 0..p.quotient_dim() {
                assert_eq!(p.project(&p.section(k)), SparseVec::unit(&Rationals, k));
            }
        }
    }

    #[test]
    fn hc1_values() {
        let expect = [("field", 0), ("dual", 0), ("trunc3", 0), ("grassmann1", 1), ("mat2", 0)];
        for (name, dim) in expect {
            let a = build(name.parse().unwrap());
            assert_eq!(hc1(&a).unwrap().dim(), dim, "{name}");
        }
    }

    #[test]
    fn first_level_relations_are_graded_symmetrisers() {
        let a = build(Builtin::Grassmann(1));
        let level = chain_level(&a, 1, DEFAULT_MAX_CHAIN).unwrap();
        let p = pairing_module(&a).unwrap();
        let q = Rationals;
        for s in 0..2 {
            for t in 0..2 {
                let sign = q.signed(koszul(a.parity(s), a.parity(t)), &q.one());
                let v = SparseVec::from_pairs(&q, vec![(s * 2 + t, q.one()), (t * 2 + s, sign)]);
                assert!(level.space.is_relation(&v));
                assert!(p.is_relation(&v));
            }
        }
    }

    #[test]
    fn d1_image_of_mat2_is_trace_zero() {
        let a = build(Builtin::Mat(2));
        let level = chain_level(&a, 1, DEFAULT_MAX_CHAIN).unwrap();
        assert!(level.well_defined);
        let image = SubspaceBasis::from_vectors(&Rationals, 4, level.boundary.clone()).unwrap();
        assert!(image.equals(&a.supercommutator_span()).unwrap());
    }

    #[test]
    fn hc0_of_field() {
        let report = hc_n(&build(Builtin::Field), 0, DEFAULT_MAX_CHAIN).unwrap();
        assert_eq!(report.dim, 1);
    }

    #[test]
    fn crosscheck_corpus() {
        for b in Builtin::corpus() {
            let c = hc1_crosscheck(&build(b), DEFAULT_MAX_CHAIN).unwrap();
            assert!(c.pass, "{b}: {c:?}");
        }
    }

    #[test]
    fn size_guard() {
        let a = build(Builtin::Mat(2));
        assert!(matches!(chain_level(&a, 7, DEFAULT_MAX_CHAIN), Err(Error::Resource { .. })));
    }

    #[test]
    fn higher_levels_square_to_zero() {
        for b in [Builtin::Grassmann(1), Builtin::Dual, Builtin::MatSuper(1, 1)] {
            let r = hc_n(&build(b), 2, DEFAULT_MAX_CHAIN).unwrap();
            assert!(r.well_defined && r.square_zero, "{b}");
        }
    }
}
