//! The 2-cocycle `ψ` on `st_{2|2}(A)` with values in `W = A_0 ⊕ A_0`, where
//! `A_0` is the largest supercommutative quotient of `A`, and the central
//! extension `st_{2|2}(A)^♯ = st_{2|2}(A) ⊕ W`.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lie::FinLieSuper;
use crate::linear::{Accumulator, Field, SparseVec};
use crate::matrix::MatrixShape;
use crate::parity::{koszul, Parity};
use crate::steinberg::{Atom, StModel};
use crate::superalgebra::{IdealQuotient, SuperAlgebra};

/// Index tuples (1-based) whose `ε` symbols are identified into block 0.
pub const P1: [(usize, usize, usize, usize); 4] = [(3, 1, 4, 2), (3, 2, 4, 1), (4, 1, 3, 2), (4, 2, 3, 1)];
/// Index tuples (1-based) whose `ε` symbols are identified into block 1.
pub const P2: [(usize, usize, usize, usize); 4] = [(1, 3, 2, 4), (1, 4, 2, 3), (2, 3, 1, 4), (2, 4, 1, 3)];

/// Sign rule for `ψ(F_ij(a), F_kl(b))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PsiSign {
    /// `(-1)^{j+k+|b|}`.
    #[default]
    Standard,
    /// `(-1)^{j+k}`; not a cocycle in general, kept as a falsification control.
    DropParity,
}

/// Block of `ε_ijkl` for 1-based indices, if the tuple is one of the eight.
pub fn epsilon_block(tuple: (usize, usize, usize, usize)) -> Option<usize> {
    if P1.contains(&tuple) {
        Some(0)
    } else if P2.contains(&tuple) {
        Some(1)
    } else {
        None
    }
}

/// The module `W`: two copies of `A_0`.
#[derive(Debug, Clone)]
pub struct CocycleTarget<F: Field> {
    quotient: IdealQuotient<F>,
}

impl<F: Field> CocycleTarget<F> {
    pub fn new(a: &SuperAlgebra<F>) -> Result<Self> {
        Ok(CocycleTarget { quotient: a.supercommutative_quotient()? })
    }

    pub fn a0(&self) -> Option<&SuperAlgebra<F>> {
        self.quotient.quotient.as_ref()
    }

    pub fn a0_dim(&self) -> usize {
        self.quotient.quotient_dim()
    }

    pub fn dim(&self) -> usize {
        2 * self.a0_dim()
    }

    pub fn parity(&self, index: usize) -> Parity {
        self.a0().expect("W is nonzero").parity(index % self.a0_dim())
    }

    pub fn names(&self) -> Vec<String> {
        let Some(a0) = self.a0() else { return Vec::new() };
        let labels = ["e3142", "e1324"];
        labels.iter().flat_map(|l| a0.basis_names().iter().map(move |n| format!("{l}({n})"))).collect()
    }

    /// `ε_block(ā)` for `a` in `A` coordinates.
    pub fn epsilon(&self, block: usize, a: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        self.quotient.project(a).shifted(block * self.a0_dim())
    }
}

pub fn build_w<F: Field>(a: &SuperAlgebra<F>) -> Result<CocycleTarget<F>> {
    CocycleTarget::new(a)
}

fn require_2_2<F: Field>(st: &StModel<F>) -> Result<()> {
    if st.shape() != MatrixShape::new(2, 2) {
        return Err(Error::Precondition(format!("the cocycle lives on st_2|2, not st_{}", st.shape())));
    }
    Ok(())
}

/// `ψ(e_x, e_y)` on model basis vectors.
pub fn psi_basis<F: Field>(st: &StModel<F>, w: &CocycleTarget<F>, x: usize, y: usize, sign: PsiSign) -> SparseVec<F::Elem> {
    let (Atom::F { i, j, s }, Atom::F { i: k, j: l, s: t }) = (st.atom(x), st.atom(y)) else {
        return SparseVec::zero();
    };
    let Some(block) = epsilon_block((i + 1, j + 1, k + 1, l + 1)) else {
        return SparseVec::zero();
    };
    let field = st.field();
    let mut negate = (j + 1 + k + 1) % 2 == 1;
    if sign == PsiSign::Standard {
        negate ^= st.algebra().parity(t).is_odd();
    }
    w.epsilon(block, st.algebra().basis_product(s, t)).scale(field, &field.signed(negate, &field.one()))
}

/// Bilinear extension of [`psi_basis`].
pub fn psi<F: Field>(
    st: &StModel<F>,
    w: &CocycleTarget<F>,
    x: &SparseVec<F::Elem>,
    y: &SparseVec<F::Elem>,
    sign: PsiSign,
) -> Result<SparseVec<F::Elem>> {
    require_2_2(st)?;
    let field = st.field();
    let mut acc = Accumulator::new();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            acc.add_scaled(field, &field.mul(ca, cb), &psi_basis(st, w, a, b, sign));
        }
    }
    Ok(acc.finish(field))
}

/// Outcome of [`verify_cocycle`].
#[derive(Debug, Clone)]
pub struct CocycleVerdict<E> {
    pub skew_failure: Option<(usize, usize)>,
    /// A basis triple with `J(x,y,z) ≠ 0` and the value of `J`.
    pub jacobi_failure: Option<((usize, usize, usize), SparseVec<E>)>,
}

impl<E> CocycleVerdict<E> {
    pub fn pass(&self) -> bool {
        self.skew_failure.is_none() && self.jacobi_failure.is_none()
    }
}

/// Checks `ψ(y,x) = -(-1)^{|x||y|} ψ(x,y)` on basis pairs and
/// `(-1)^{|x||z|} ψ([x,y],z) + (-1)^{|x||y|} ψ([y,z],x) + (-1)^{|y||z|} ψ([z,x],y) = 0` on basis triples.
pub fn verify_cocycle<F: Field>(st: &StModel<F>, w: &CocycleTarget<F>, sign: PsiSign) -> Result<CocycleVerdict<F::Elem>> {
    require_2_2(st)?;
    let field = st.field();
    let d = st.dim();
    let lie = st.lie();
    let psi_vec = |v: &SparseVec<F::Elem>, z: usize| {
        let mut acc = Accumulator::new();
        for (a, c) in v.iter() {
            acc.add_scaled(field, c, &psi_basis(st, w, a, z, sign));
        }
        acc.finish(field)
    };
    let skew_failure = (0..d * d).into_par_iter().find_map_first(|c| {
        let (x, y) = (c / d, c % d);
        let negate = !koszul(st.parity(x), st.parity(y));
        let want = psi_basis(st, w, x, y, sign).scale(field, &field.signed(negate, &field.one()));
        (psi_basis(st, w, y, x, sign) != want).then_some((x, y))
    });
    let jacobi_failure = (0..d * d * d).into_par_iter().find_map_first(|c| {
        let (x, y, z) = (c / (d * d), (c / d) % d, c % d);
        let (px, py, pz) = (st.parity(x), st.parity(y), st.parity(z));
        let mut acc = Accumulator::new();
        let sgn = |b: bool| field.signed(b, &field.one());
        acc.add_scaled(field, &sgn(koszul(px, pz)), &psi_vec(lie.basis_bracket(x, y), z));
        acc.add_scaled(field, &sgn(koszul(px, py)), &psi_vec(lie.basis_bracket(y, z), x));
        acc.add_scaled(field, &sgn(koszul(py, pz)), &psi_vec(lie.basis_bracket(z, x), y));
        let j = acc.finish(field);
        (!j.is_zero()).then_some(((x, y, z), j))
    });
    Ok(CocycleVerdict { skew_failure, jacobi_failure })
}

/// `st_{2|2}(A) ⊕ W` with bracket `[x, y] + ψ(x, y)`; `W` occupies the last coordinates.
#[derive(Debug, Clone)]
pub struct StSharp<F: Field> {
    pub base: StModel<F>,
    pub target: CocycleTarget<F>,
    pub lie: FinLieSuper<F>,
}

impl<F: Field> StSharp<F> {
    pub fn dim(&self) -> usize {
        self.lie.dim()
    }

    /// Projection onto `st_{2|2}(A)`.
    pub fn project(&self, v: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        v.window(0..self.base.dim())
    }

    /// Every `W` basis vector brackets to zero with everything.
    pub fn w_central(&self) -> bool {
        let d = self.base.dim();
        (d..self.dim()).all(|c| (0..self.dim()).all(|x| self.lie.basis_bracket(c, x).is_zero() && self.lie.basis_bracket(x, c).is_zero()))
    }
}

pub fn build_st_sharp<F: Field>(a: &SuperAlgebra<F>) -> Result<StSharp<F>> {
    let base = StModel::build(a, MatrixShape::new(2, 2))?;
    let target = CocycleTarget::new(a)?;
    let verdict = verify_cocycle(&base, &target, PsiSign::Standard)?;
    if let Some((x, y)) = verdict.skew_failure {
        return Err(Error::Verification(format!("ψ is not skew on ({}, {})", base.lie().names()[x], base.lie().names()[y])));
    }
    if let Some(((x, y, z), _)) = verdict.jacobi_failure {
        let n = base.lie().names();
        return Err(Error::Verification(format!("ψ fails the cocycle identity on ({}, {}, {})", n[x], n[y], n[z])));
    }
    let d = base.dim();
    let total = d + target.dim();
    let mut table = vec![SparseVec::zero(); total * total];
    for x in 0..d {
        for y in 0..d {
            let b = base.lie().basis_bracket(x, y).clone();
            table[x * total + y] = b.add(base.field(), &psi_basis(&base, &target, x, y, PsiSign::Standard).shifted(d));
        }
    }
    let mut names = base.lie().names().to_vec();
    names.extend(target.names());
    let mut parity = base.lie().parities().to_vec();
    parity.extend((0..target.dim()).map(|k| target.parity(k)));
    let lie = FinLieSuper::new(format!("st_2|2({})^#", a.name()), a.field().clone(), names, parity, table)?;
    Ok(StSharp { base, target, lie })
}
