use proptest::prelude::*;
use superstein::algfile::{parse_algebra_over, serialize_algebra};
use superstein::cyclic::PairingModule;
use superstein::linear::{Field, PrimeField, Rationals, SparseVec};
use superstein::matrix::Gl;
use superstein::parity::koszul;
use superstein::superalgebra::ComposeKind;
use superstein::uce22::{psi, CocycleTarget, PsiSign};
use superstein::{Builtin, MatrixShape, Parity, StModel, SuperAlgebra};

type Elem = <Rationals as Field>::Elem;

const SMALL: [Builtin; 5] = [Builtin::Field, Builtin::Dual, Builtin::Grassmann(1), Builtin::Trunc(3), Builtin::Mat(2)];
const SHAPES: [(usize, usize); 4] = [(2, 1), (3, 1), (2, 2), (3, 2)];

fn q(b: Builtin) -> SuperAlgebra<Rationals> {
    b.build(Rationals).unwrap()
}

/// Element built from `coeffs`, keeping only basis indices of parity `p`.
fn homogeneous(parity: impl Fn(usize) -> Parity, dim: usize, p: Parity, coeffs: &[i64]) -> SparseVec<Elem> {
    let f = Rationals;
    let pairs = (0..dim).filter(|&i| parity(i) == p).map(|i| (i, f.from_i64(coeffs[i % coeffs.len()]))).collect();
    SparseVec::from_pairs(&f, pairs)
}

fn generic(dim: usize, coeffs: &[i64]) -> SparseVec<Elem> {
    let f = Rationals;
    SparseVec::from_pairs(&f, (0..dim).map(|i| (i, f.from_i64(coeffs[i % coeffs.len()]))).collect())
}

fn coeffs() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..=3, 1..12)
}

fn sign(negate: bool, v: &SparseVec<Elem>) -> SparseVec<Elem> {
    if negate {
        v.neg(&Rationals)
    } else {
        v.clone()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn gl_skew_and_jacobi(
        alg in 0usize..SMALL.len(),
        shape in 0usize..SHAPES.len(),
        bits in (0usize..2, 0usize..2, 0usize..2),
        cx in coeffs(), cy in coeffs(), cz in coeffs(),
    ) {
        let a = q(SMALL[alg]);
        let (m, n) = SHAPES[shape];
        let gl = Gl::new(&a, MatrixShape::new(m, n));
        let f = Rationals;
        let (px, py, pz) = (Parity::from_bit(bits.0), Parity::from_bit(bits.1), Parity::from_bit(bits.2));
        let d = gl.dim();
        let x = homogeneous(|i| gl.parity(i), d, px, &cx);
        let y = homogeneous(|i| gl.parity(i), d, py, &cy);
        let z = homogeneous(|i| gl.parity(i), d, pz, &cz);
        let skew = gl.bracket(&x, &y).add(&f, &sign(koszul(px, py), &gl.bracket(&y, &x)));
        prop_assert!(skew.is_zero());
        let jacobi = sign(koszul(px, pz), &gl.bracket(&x, &gl.bracket(&y, &z)))
            .add(&f, &sign(koszul(py, px), &gl.bracket(&y, &gl.bracket(&z, &x))))
            .add(&f, &sign(koszul(pz, py), &gl.bracket(&z, &gl.bracket(&x, &y))));
        prop_assert!(jacobi.is_zero());
    }

    #[test]
    fn supertrace_of_bracket_lies_in_commutators(
        alg in 0usize..SMALL.len(),
        shape in 0usize..SHAPES.len(),
        cx in coeffs(), cy in coeffs(),
    ) {
        let a = q(SMALL[alg]);
        let (m, n) = SHAPES[shape];
        let gl = Gl::new(&a, MatrixShape::new(m, n));
        let (x, y) = (generic(gl.dim(), &cx), generic(gl.dim(), &cy));
        prop_assert!(a.supercommutator_span().contains(&gl.supertrace(&gl.bracket(&x, &y))));
    }

    #[test]
    fn unit_pairs_vanish(alg in 0usize..SMALL.len(), c in coeffs()) {
        let a = q(SMALL[alg]);
        let pairing = PairingModule::new(&a).unwrap();
        let x = generic(a.dim(), &c);
        prop_assert!(pairing.class_of(&a.unit(), &x).is_zero());
        prop_assert!(pairing.class_of(&x, &a.unit()).is_zero());
    }

    #[test]
    fn quotient_projection_is_multiplicative(
        alg in 0usize..SMALL.len(),
        cg in coeffs(), cx in coeffs(), cy in coeffs(),
    ) {
        let a = q(SMALL[alg]);
        let g = generic(a.dim(), &cg);
        let quotient = a.graded_ideal_quotient(&[g]).unwrap();
        let (x, y) = (generic(a.dim(), &cx), generic(a.dim(), &cy));
        for v in quotient.ideal.vectors() {
            prop_assert!(quotient.ideal.contains(&a.mul(&x, v)));
            prop_assert!(quotient.ideal.contains(&a.mul(v, &x)));
        }
        if let Some(b) = &quotient.quotient {
            let lhs = quotient.project(&a.mul(&x, &y));
            let rhs = b.mul(&quotient.project(&x), &quotient.project(&y));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn composed_algebras_round_trip(
        left in 0usize..SMALL.len(),
        right in 0usize..SMALL.len(),
        tensor in any::<bool>(),
        prime in prop::sample::select(vec![3u64, 5, 7, 101]),
    ) {
        let f = PrimeField::new(prime).unwrap();
        let (x, y) = (SMALL[left].build(f).unwrap(), SMALL[right].build(f).unwrap());
        let kind = if tensor { ComposeKind::SuperTensor } else { ComposeKind::DirectProduct };
        let a = x.compose(&y, kind).unwrap();
        prop_assert!(a.validate().is_valid());
        let text = serialize_algebra(&a);
        let back = parse_algebra_over(&text, f).unwrap();
        prop_assert_eq!(serialize_algebra(&back), text);
        prop_assert!(back == a);
    }

    #[test]
    fn psi_is_alternating(bits in (0usize..2, 0usize..2), cx in coeffs(), cy in coeffs()) {
        let a = q(Builtin::Grassmann(1));
        let st = StModel::build(&a, MatrixShape::new(2, 2)).unwrap();
        let w = CocycleTarget::new(&a).unwrap();
        let (px, py) = (Parity::from_bit(bits.0), Parity::from_bit(bits.1));
        let x = homogeneous(|i| st.parity(i), st.dim(), px, &cx);
        let y = homogeneous(|i| st.parity(i), st.dim(), py, &cy);
        let forward = psi(&st, &w, &x, &y, PsiSign::Standard).unwrap();
        let backward = psi(&st, &w, &y, &x, PsiSign::Standard).unwrap();
        prop_assert!(forward.add(&Rationals, &sign(koszul(px, py), &backward)).is_zero());
    }
}
