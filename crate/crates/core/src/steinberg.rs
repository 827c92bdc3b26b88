//! A concrete model of the Steinberg Lie superalgebra `st_{m|n}(A)`.
//!
//! Coordinates are split into three blocks:
//!
//! * `F_ij(e_s)` for ordered pairs `i != j` and basis elements `e_s` of `A`;
//! * `h(a, b)`, one coordinate per basis vector of `<<A,A>>`;
//! * `D_j(e_s) = H_1j(1, e_s)` for `j = 2..m+n`.
//!
//! Brackets of `F`s follow the defining relations, `[H, F]` uses the
//! closed formulas for `H_ij(a,b) = [F_ij(a), F_ji(b)]`, and everything with
//! an `H`-type second argument is expanded through the Jacobi identity.
//! The resulting table is checked for skew-symmetry and Jacobi before use.

use rayon::prelude::*;

use crate::cyclic::PairingModule;
use crate::error::{Error, Result};
use crate::lie::FinLieSuper;
use crate::linear::{kernel_of_images, Accumulator, Field, SparseVec, SubspaceBasis};
use crate::matrix::{Gl, MatrixShape};
use crate::parity::{koszul, Parity};
use crate::superalgebra::SuperAlgebra;

/// Which `j` expands `h(a,b) = H_1j(a,b) - (-1)^{|a||b|} H_1j(1,ba)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExpansionIndex {
    /// `j = 2`.
    #[default]
    Second,
    /// `j = m + n`.
    Last,
}

/// A basis vector of the model.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Atom {
    /// `F_ij(e_s)`, indices 0-based.
    F { i: usize, j: usize, s: usize },
    /// The `k`-th basis vector of `<<A,A>>`, embedded as `h(a, b)`.
    H { k: usize },
    /// `D_j(e_s) = H_1j(1, e_s)`, `j ≥ 1` 0-based.
    D { j: usize, s: usize },
}

#[derive(Debug, Clone)]
pub struct StModel<F: Field> {
    algebra: SuperAlgebra<F>,
    shape: MatrixShape,
    swapped: bool,
    pairing: PairingModule<F>,
    pair_index: Vec<usize>,
    pairs: Vec<(usize, usize)>,
    j_star: usize,
    lie: FinLieSuper<F>,
}

/// `H_pq(e_s, e_t)` with a coefficient.
struct HTerm<E> {
    coeff: E,
    p: usize,
    q: usize,
    s: usize,
    t: usize,
}

/// Everything needed to compute brackets before the table exists.
struct Layout<'a, F: Field> {
    a: &'a SuperAlgebra<F>,
    shape: MatrixShape,
    pairing: &'a PairingModule<F>,
    pair_index: &'a [usize],
    pairs: &'a [(usize, usize)],
    j_star: usize,
}

impl<F: Field> Layout<'_, F> {
    fn size(&self) -> usize {
        self.shape.size()
    }

    fn da(&self) -> usize {
        self.a.dim()
    }

    fn field(&self) -> &F {
        self.a.field()
    }

    fn f_dim(&self) -> usize {
        self.pairs.len() * self.da()
    }

    fn h_offset(&self) -> usize {
        self.f_dim()
    }

    fn d_offset(&self) -> usize {
        self.f_dim() + self.pairing.quotient_dim()
    }

    fn dim(&self) -> usize {
        self.d_offset() + (self.size() - 1) * self.da()
    }

    fn ip(&self, i: usize) -> Parity {
        self.shape.index_parity(i)
    }

    fn ap(&self, s: usize) -> Parity {
        self.a.parity(s)
    }

    fn atom(&self, index: usize) -> Atom {
        let da = self.da();
        if index < self.h_offset() {
            let (i, j) = self.pairs[index / da];
            Atom::F { i, j, s: index % da }
        } else if index < self.d_offset() {
            Atom::H { k: index - self.h_offset() }
        } else {
            let r = index - self.d_offset();
            Atom::D { j: r / da + 1, s: r % da }
        }
    }

    fn atom_parity(&self, atom: Atom) -> Parity {
        match atom {
            Atom::F { i, j, s } => self.ip(i) + self.ip(j) + self.ap(s),
            Atom::H { k } => self.pairing.parity(k),
            Atom::D { s, .. } => self.ap(s),
        }
    }

    fn f_index(&self, i: usize, j: usize, s: usize) -> usize {
        self.pair_index[i * self.size() + j] * self.da() + s
    }

    /// `F_ij(a)`.
    fn f_vec(&self, i: usize, j: usize, a: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        a.shifted(self.f_index(i, j, 0))
    }

    /// `D_j(c)`.
    fn d_vec(&self, j: usize, c: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        c.shifted(self.d_offset() + (j - 1) * self.da())
    }

    fn h_of_basis(&self, s: usize, t: usize) -> SparseVec<F::Elem> {
        self.pairing.class_of_basis(s, t).shifted(self.h_offset())
    }

    fn sign(&self, negate: bool) -> F::Elem {
        self.field().signed(negate, &self.field().one())
    }

    fn prod(&self, s: usize, t: usize) -> &SparseVec<F::Elem> {
        self.a.basis_product(s, t)
    }

    fn prod3(&self, s: usize, t: usize, u: usize) -> SparseVec<F::Elem> {
        self.a.mul_basis_right(self.prod(s, t), u)
    }

    /// Canonical coordinates of `H_ij(e_s, e_t)`.
    fn normalize_h(&self, i: usize, j: usize, s: usize, t: usize) -> SparseVec<F::Elem> {
        debug_assert_ne!(i, j);
        let field = self.field();
        let u = self.a.unit_index();
        if i == 0 {
            // h(a,b) + (-1)^{|a||b|} D_j(ba)
            let mut acc = Accumulator::new();
            acc.add_vec(&self.h_of_basis(s, t));
            acc.add_scaled(field, &self.sign(koszul(self.ap(s), self.ap(t))), &self.d_vec(j, self.prod(t, s)));
            return acc.finish(field);
        }
        if j == 0 {
            // -(-1)^{(|i|+|a|)(|i|+|b|)} H_1i(b,a)
            let negate = !koszul(self.ip(i) + self.ap(s), self.ip(i) + self.ap(t));
            return self.normalize_h(0, i, t, s).scale(field, &self.sign(negate));
        }
        // H_i1(a,b) - (-1)^{(|i|+|j|+|a|)(|i|+|j|+|b|)} H_j1(ba,1)
        let ij = self.ip(i) + self.ip(j);
        let mut acc = Accumulator::new();
        acc.add_vec(&self.normalize_h(i, 0, s, t));
        let c = self.sign(!koszul(ij + self.ap(s), ij + self.ap(t)));
        for (r, x) in self.prod(t, s).iter() {
            acc.add_scaled(field, &field.mul(&c, x), &self.normalize_h(j, 0, r, u));
        }
        acc.finish(field)
    }

    /// `[F_ij(e_s), F_kl(e_t)]`.
    fn ff(&self, (i, j, s): (usize, usize, usize), (k, l, t): (usize, usize, usize)) -> SparseVec<F::Elem> {
        let field = self.field();
        if j == k && l == i {
            return self.normalize_h(i, j, s, t);
        }
        if j == k {
            return self.f_vec(i, l, self.prod(s, t));
        }
        if l == i {
            let px = self.ip(i) + self.ip(j) + self.ap(s);
            let py = self.ip(k) + self.ip(l) + self.ap(t);
            return self.f_vec(k, j, self.prod(t, s)).scale(field, &self.sign(!koszul(px, py)));
        }
        SparseVec::zero()
    }

    /// `[H_ij(e_s, e_t), F_kl(e_c)]`, a combination of `F`s.
    fn hf(&self, (i, j, s, t): (usize, usize, usize, usize), (k, l, c): (usize, usize, usize)) -> SparseVec<F::Elem> {
        let field = self.field();
        let (pi, pj) = (self.ip(i), self.ip(j));
        let (pa, pb, pc) = (self.ap(s), self.ap(t), self.ap(c));
        // H_ij(a,b) = sigma * H_ji(b,a)
        let sigma_negate = !koszul(pi + pj + pa, pi + pj + pb);
        let third = |x: usize| x != i && x != j;
        if k == i && l == j {
            let abc = self.prod3(s, t, c);
            let cba = self.prod3(c, t, s);
            let negate = (pi + pj).is_odd() ^ koszul(pa, pb) ^ koszul(pb, pc) ^ koszul(pc, pa);
            return self.f_vec(i, j, &abc.add_scaled(field, &self.sign(negate), &cba));
        }
        if k == j && l == i {
            let bac = self.prod3(t, s, c);
            let cab = self.prod3(c, s, t);
            let negate = (pj + pi).is_odd() ^ koszul(pb, pa) ^ koszul(pa, pc) ^ koszul(pc, pb);
            let v = bac.add_scaled(field, &self.sign(negate), &cab);
            return self.f_vec(j, i, &v).scale(field, &self.sign(sigma_negate));
        }
        if k == i && third(l) {
            return self.f_vec(i, l, &self.prod3(s, t, c));
        }
        if l == i && third(k) {
            let negate = !koszul(pa + pb, pi + self.ip(k) + pc);
            return self.f_vec(k, i, &self.prod3(c, s, t)).scale(field, &self.sign(negate));
        }
        if k == j && third(l) {
            return self.f_vec(j, l, &self.prod3(t, s, c)).scale(field, &self.sign(sigma_negate));
        }
        if l == j && third(k) {
            let negate = !koszul(pb + pa, pj + self.ip(k) + pc);
            return self.f_vec(k, j, &self.prod3(c, t, s)).scale(field, &self.sign(negate ^ sigma_negate));
        }
        SparseVec::zero()
    }

    /// An `H`-type atom written through `H_pq(e_s, e_t)`.
    fn expand(&self, atom: Atom) -> Vec<HTerm<F::Elem>> {
        let field = self.field();
        let u = self.a.unit_index();
        match atom {
            Atom::F { .. } => unreachable!("F atoms are not expanded"),
            Atom::D { j, s } => vec![HTerm { coeff: field.one(), p: 0, q: j, s: u, t: s }],
            Atom::H { k } => {
                let (s, t) = self.pairing.section_pair(k);
                let j = self.j_star;
                let mut out = vec![HTerm { coeff: field.one(), p: 0, q: j, s, t }];
                let c = self.sign(!koszul(self.ap(s), self.ap(t)));
                for (r, x) in self.prod(t, s).iter() {
                    out.push(HTerm { coeff: field.mul(&c, x), p: 0, q: j, s: u, t: r });
                }
                out
            }
        }
    }

    /// `[X, F_kl(e_c)]` for any `X`.
    fn right_f(&self, x: &SparseVec<F::Elem>, kl_c: (usize, usize, usize)) -> SparseVec<F::Elem> {
        let field = self.field();
        let mut acc = Accumulator::new();
        for (idx, coeff) in x.iter() {
            match self.atom(idx) {
                Atom::F { i, j, s } => acc.add_scaled(field, coeff, &self.ff((i, j, s), kl_c)),
                atom => {
                    for term in self.expand(atom) {
                        let v = self.hf((term.p, term.q, term.s, term.t), kl_c);
                        acc.add_scaled(field, &field.mul(coeff, &term.coeff), &v);
                    }
                }
            }
        }
        acc.finish(field)
    }

    /// `[F_kl(e_c), Y]` for any `Y`; `H`-type components go through skew-symmetry.
    fn left_f(&self, kl_c: (usize, usize, usize), y: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        let field = self.field();
        let (k, l, c) = kl_c;
        let pf = self.ip(k) + self.ip(l) + self.ap(c);
        let mut acc = Accumulator::new();
        for (idx, coeff) in y.iter() {
            match self.atom(idx) {
                Atom::F { i, j, s } => acc.add_scaled(field, coeff, &self.ff(kl_c, (i, j, s))),
                atom => {
                    let negate = !koszul(pf, self.atom_parity(atom));
                    let v = self.right_f(&SparseVec::unit(field, idx), kl_c);
                    acc.add_scaled(field, &field.signed(negate, coeff), &v);
                }
            }
        }
        acc.finish(field)
    }

    /// `[X, H_pq(e_s, e_t)] = [[X, F_pq(a)], F_qp(b)] + (-1)^{|X|(|p|+|q|+|a|)} [F_pq(a), [X, F_qp(b)]]`.
    fn bracket_with_h(&self, x_index: usize, term: &HTerm<F::Elem>) -> SparseVec<F::Elem> {
        let field = self.field();
        let x = SparseVec::unit(field, x_index);
        let px = self.atom_parity(self.atom(x_index));
        let first = self.right_f(&self.right_f(&x, (term.p, term.q, term.s)), (term.q, term.p, term.t));
        let inner = self.right_f(&x, (term.q, term.p, term.t));
        let negate = koszul(px, self.ip(term.p) + self.ip(term.q) + self.ap(term.s));
        let second = self.left_f((term.p, term.q, term.s), &inner);
        first.add_scaled(field, &self.sign(negate), &second)
    }

    fn basis_bracket(&self, x: usize, y: usize) -> SparseVec<F::Elem> {
        let field = self.field();
        match self.atom(y) {
            Atom::F { i, j, s } => self.right_f(&SparseVec::unit(field, x), (i, j, s)),
            atom => {
                let mut acc = Accumulator::new();
                for term in self.expand(atom) {
                    acc.add_scaled(field, &term.coeff, &self.bracket_with_h(x, &term));
                }
                acc.finish(field)
            }
        }
    }

    fn name(&self, atom: Atom) -> String {
        let names = self.a.basis_names();
        match atom {
            Atom::F { i, j, s } => format!("F{}{}({})", i + 1, j + 1, names[s]),
            Atom::H { k } => {
                let (s, t) = self.pairing.section_pair(k);
                format!("h({},{})", names[s], names[t])
            }
            Atom::D { j, s } => format!("D{}({})", j + 1, names[s]),
        }
    }
}

/// Result of [`StModel::kernel_phi`].
#[derive(Debug, Clone)]
pub struct KernelReport<F: Field> {
    pub kernel: SubspaceBasis<F>,
    pub hc1_dim: usize,
    /// `ker φ = μ(HC_1(A))` as subspaces.
    pub hc1_match: bool,
    /// `ker φ ⊆ Z(st)`.
    pub central: bool,
}

impl<F: Field> StModel<F> {
    pub fn build(algebra: &SuperAlgebra<F>, shape: MatrixShape) -> Result<Self> {
        Self::build_with(algebra, shape, ExpansionIndex::Second)
    }

    pub fn build_with(algebra: &SuperAlgebra<F>, shape: MatrixShape, expansion: ExpansionIndex) -> Result<Self> {
        shape.check_large()?;
        let (shape, swapped) = if shape.m == 0 {
            log::info!("st_{shape}: using the parity-swapped shape {}", shape.swapped());
            (shape.swapped(), true)
        } else {
            (shape, false)
        };
        let size = shape.size();
        let pairing = PairingModule::new(algebra)?;
        let mut pair_index = vec![usize::MAX; size * size];
        let mut pairs = Vec::new();
        for i in 0..size {
            for j in 0..size {
                if i != j {
                    pair_index[i * size + j] = pairs.len();
                    pairs.push((i, j));
                }
            }
        }
        let j_star = match expansion {
            ExpansionIndex::Second => 1,
            ExpansionIndex::Last => size - 1,
        };
        let layout = Layout { a: algebra, shape, pairing: &pairing, pair_index: &pair_index, pairs: &pairs, j_star };
        let d = layout.dim();
        let table: Vec<_> = (0..d * d).into_par_iter().map(|c| layout.basis_bracket(c / d, c % d)).collect();
        let names = (0..d).map(|x| layout.name(layout.atom(x))).collect();
        let parity = (0..d).map(|x| layout.atom_parity(layout.atom(x))).collect();
        let lie = FinLieSuper::new(format!("st_{shape}({})", algebra.name()), algebra.field().clone(), names, parity, table)?;
        let model = StModel { algebra: algebra.clone(), shape, swapped, pairing, pair_index, pairs, j_star, lie };
        if let Some(w) = model.check_relations() {
            return Err(Error::Verification(w));
        }
        Ok(model)
    }

    fn layout(&self) -> Layout<'_, F> {
        Layout {
            a: &self.algebra,
            shape: self.shape,
            pairing: &self.pairing,
            pair_index: &self.pair_index,
            pairs: &self.pairs,
            j_star: self.j_star,
        }
    }

    pub fn algebra(&self) -> &SuperAlgebra<F> {
        &self.algebra
    }

    pub fn field(&self) -> &F {
        self.algebra.field()
    }

    /// The shape actually modelled (`m ≥ 1`).
    pub fn shape(&self) -> MatrixShape {
        self.shape
    }

    /// Whether a `0|n` request was answered with `n|0`.
    pub fn swapped(&self) -> bool {
        self.swapped
    }

    pub fn pairing(&self) -> &PairingModule<F> {
        &self.pairing
    }

    pub fn lie(&self) -> &FinLieSuper<F> {
        &self.lie
    }

    pub fn into_lie(self) -> FinLieSuper<F> {
        self.lie
    }

    pub fn dim(&self) -> usize {
        self.lie.dim()
    }

    pub fn f_dim(&self) -> usize {
        self.layout().f_dim()
    }

    pub fn h_dim(&self) -> usize {
        self.pairing.quotient_dim()
    }

    pub fn d_dim(&self) -> usize {
        (self.shape.size() - 1) * self.algebra.dim()
    }

    pub fn h_offset(&self) -> usize {
        self.f_dim()
    }

    pub fn atom(&self, index: usize) -> Atom {
        self.layout().atom(index)
    }

    pub fn parity(&self, index: usize) -> Parity {
        self.lie.parity(index)
    }

    /// Coordinate of `F_ij(e_s)`, 0-based indices.
    pub fn f_index(&self, i: usize, j: usize, s: usize) -> usize {
        self.layout().f_index(i, j, s)
    }

    /// Coordinate of `D_j(e_s)`, `1 ≤ j < m+n` 0-based.
    pub fn d_index(&self, j: usize, s: usize) -> usize {
        self.layout().d_offset() + (j - 1) * self.algebra.dim() + s
    }

    pub fn f_vec(&self, i: usize, j: usize, a: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        self.layout().f_vec(i, j, a)
    }

    /// `h(e_s, e_t)` in model coordinates.
    pub fn h_vec(&self, s: usize, t: usize) -> SparseVec<F::Elem> {
        self.layout().h_of_basis(s, t)
    }

    /// `μ`: `<<A,A>>` coordinates to model coordinates.
    pub fn mu(&self, v: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        v.shifted(self.h_offset())
    }

    /// Canonical coordinates of `H_ij(e_s, e_t)`.
    pub fn normalize_h(&self, i: usize, j: usize, s: usize, t: usize) -> Result<SparseVec<F::Elem>> {
        let size = self.shape.size();
        if i == j || i >= size || j >= size {
            return Err(Error::Input(format!("H_ij needs distinct indices below {size}, got ({i}, {j})")));
        }
        if s >= self.algebra.dim() || t >= self.algebra.dim() {
            return Err(Error::Input("basis index out of range".into()));
        }
        Ok(self.layout().normalize_h(i, j, s, t))
    }

    pub fn bracket(&self, x: &SparseVec<F::Elem>, y: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        self.lie.bracket(x, y)
    }

    pub fn gl(&self) -> Gl<F> {
        Gl::new(&self.algebra, self.shape)
    }

    /// `φ` on a basis vector, in `gl` coordinates.
    pub fn phi_basis(&self, index: usize) -> SparseVec<F::Elem> {
        let gl = self.gl();
        let field = self.field();
        let a = &self.algebra;
        match self.atom(index) {
            Atom::F { i, j, s } => SparseVec::unit(field, gl.index(i, j, s)),
            Atom::H { k } => {
                let (s, t) = self.pairing.section_pair(k);
                gl.e(0, 0, &a.supercommutator(s, t))
            }
            Atom::D { j, s } => {
                let pj = self.shape.index_parity(j);
                let negate = !koszul(pj, pj + a.parity(s));
                let c = SparseVec::unit(field, s);
                gl.e(0, 0, &c).add_scaled(field, &field.signed(negate, &field.one()), &gl.e(j, j, &c))
            }
        }
    }

    pub fn phi(&self, x: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        let field = self.field();
        let mut acc = Accumulator::new();
        for (idx, c) in x.iter() {
            acc.add_scaled(field, c, &self.phi_basis(idx));
        }
        acc.finish(field)
    }

    /// `ν`: reads the `h` block; `F` and `D` map to zero.
    pub fn nu(&self, x: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        x.window(self.h_offset()..self.h_offset() + self.h_dim())
    }

    /// First basis pair on which `φ` fails to be a homomorphism.
    pub fn phi_homomorphism_failure(&self) -> Option<(usize, usize)> {
        let d = self.dim();
        let gl = self.gl();
        let images: Vec<_> = (0..d).map(|x| self.phi_basis(x)).collect();
        (0..d * d).into_par_iter().find_map_first(|c| {
            let (x, y) = (c / d, c % d);
            (self.phi(self.lie.basis_bracket(x, y)) != gl.bracket(&images[x], &images[y])).then_some((x, y))
        })
    }

    pub fn kernel_phi(&self) -> Result<KernelReport<F>> {
        let d = self.dim();
        let gl = self.gl();
        let images: Vec<_> = (0..d).map(|x| self.phi_basis(x)).collect();
        let kernel = kernel_of_images(self.field(), d, gl.dim(), &images)?;
        let hc1 = kernel_of_images(self.field(), self.h_dim(), self.algebra.dim(), self.pairing.commutator_map())?;
        let mu_image = SubspaceBasis::from_vectors(self.field(), d, hc1.vectors().iter().map(|v| self.mu(v)).collect())?;
        let hc1_match = mu_image.dim() == hc1.dim() && kernel.equals(&mu_image)?;
        let central = kernel.vectors().iter().all(|v| (0..d).all(|y| self.lie.bracket_basis_right(v, y).is_zero()));
        Ok(KernelReport { kernel, hc1_dim: hc1.dim(), hc1_match, central })
    }

    /// `d ∘ ν = str ∘ φ` on every basis vector.
    pub fn diagram_check(&self) -> bool {
        let gl = self.gl();
        (0..self.dim()).all(|x| {
            let e = SparseVec::unit(self.field(), x);
            self.pairing.commutator(&self.nu(&e)) == gl.supertrace(&self.phi(&e))
        })
    }

    /// `ν(H_ij(a,b)) = (-1)^{|i|(|i|+|ab|)} <<a,b>>` for all basis data.
    pub fn nu_formula_check(&self) -> bool {
        let size = self.shape.size();
        let da = self.algebra.dim();
        let field = self.field();
        for i in 0..size {
            for j in (0..size).filter(|&j| j != i) {
                for s in 0..da {
                    for t in 0..da {
                        let pi = self.shape.index_parity(i);
                        let negate = koszul(pi, pi + self.algebra.parity(s) + self.algebra.parity(t));
                        let want = self.pairing.class_of_basis(s, t).scale(field, &field.signed(negate, &field.one()));
                        if self.nu(&self.layout().normalize_h(i, j, s, t)) != want {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// `ν ∘ μ` is the identity on `<<A,A>>`.
    pub fn nu_mu_identity(&self) -> bool {
        (0..self.h_dim()).all(|k| {
            let e = SparseVec::unit(self.field(), k);
            self.nu(&self.mu(&e)) == e
        })
    }

    /// `[F_ij(a), F_jk(b)] = F_ik(ab)` and `[F_ij(a), F_kl(b)] = 0` for `i≠j≠k≠l≠i`.
    pub fn check_relations(&self) -> Option<String> {
        let size = self.shape.size();
        let da = self.algebra.dim();
        let names = self.lie.names();
        for i in 0..size {
            for j in 0..size {
                for k in 0..size {
                    for l in 0..size {
                        if i == j || k == l {
                            continue;
                        }
                        let chain = j == k && i != l;
                        let commuting = j != k && k != l && l != i;
                        if !chain && !commuting {
                            continue;
                        }
                        for s in 0..da {
                            for t in 0..da {
                                let (x, y) = (self.f_index(i, j, s), self.f_index(k, l, t));
                                let got = self.lie.basis_bracket(x, y);
                                let want = if chain {
                                    self.f_vec(i, l, self.algebra.basis_product(s, t))
                                } else {
                                    SparseVec::zero()
                                };
                                if *got != want {
                                    return Some(format!("relation fails on [{}, {}]", names[x], names[y]));
                                }
                            }
                        }
                    }
                }
            }
        }
        None
    }
}

pub fn build_st<F: Field>(a: &SuperAlgebra<F>, shape: MatrixShape) -> Result<StModel<F>> {
    StModel::build(a, shape)
}

/// Whether both expansion indices give the same bracket table.
pub fn expansion_independent<F: Field>(a: &SuperAlgebra<F>, shape: MatrixShape) -> Result<bool> {
    let first = StModel::build_with(a, shape, ExpansionIndex::Second)?;
    let last = StModel::build_with(a, shape, ExpansionIndex::Last)?;
    Ok(first.lie().table() == last.lie().table())
}
