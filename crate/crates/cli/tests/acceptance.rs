//! Acceptance matrix: one line per criterion, exit status 1 if any fails.

use std::process::Command;
use std::time::{Duration, Instant};

use superstein::algfile::{parse_algebra, parse_algebra_over, serialize_algebra};
use superstein::cyclic::{hc1, hc_n, DEFAULT_MAX_CHAIN};
use superstein::homology::{concretize, first_homology, homology, Source, DEFAULT_MAX_WEDGE};
use superstein::linear::{Field, Rationals, SparseVec};
use superstein::matrix::{sl_space, Gl};
use superstein::parity::koszul;
use superstein::steinberg::expansion_independent;
use superstein::uce22::{build_st_sharp, verify_cocycle, CocycleTarget, PsiSign};
use superstein::{Builtin, MatrixShape, Parity, StModel, SuperAlgebra};

type Elem = <Rationals as Field>::Elem;

const SHAPES: [(usize, usize); 4] = [(2, 1), (3, 1), (2, 2), (3, 2)];

type Criterion = (&'static str, fn() -> Outcome, Duration);

struct Outcome {
    failures: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { failures: Vec::new() }
    }

    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }
}

fn q(b: Builtin) -> SuperAlgebra<Rationals> {
    b.build(Rationals).expect("builtin algebras build")
}

/// Dense Gaussian elimination, used as an oracle independent of the sparse engine.
fn dense_rank(rows: &[Vec<Elem>]) -> usize {
    let f = Rationals;
    let mut m: Vec<Vec<Elem>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&r| !f.is_zero(&m[r][col])) else { continue };
        m.swap(rank, p);
        let inv = f.inv(&m[rank][col]).unwrap();
        let pivot: Vec<Elem> = m[rank].iter().map(|x| f.mul(x, &inv)).collect();
        for r in 0..m.len() {
            if r != rank && !f.is_zero(&m[r][col]) {
                let c = m[r][col].clone();
                for k in col..ncols {
                    let t = f.mul(&c, &pivot[k]);
                    m[r][k] = f.sub(&m[r][k], &t);
                }
            }
        }
        m[rank] = pivot;
        rank += 1;
    }
    rank
}

fn dense(v: &SparseVec<Elem>, n: usize) -> Vec<Elem> {
    v.to_dense(&Rationals, n)
}

/// `dim [A,A]` by dense elimination.
fn commutator_dim(a: &SuperAlgebra<Rationals>) -> usize {
    let d = a.dim();
    let rows: Vec<_> = (0..d).flat_map(|i| (0..d).map(move |j| (i, j))).map(|(i, j)| dense(&a.supercommutator(i, j), d)).collect();
    dense_rank(&rows)
}

/// `(dim <<A,A>>, dim HC_1)` from the tensor square by dense elimination.
fn pairing_oracle(a: &SuperAlgebra<Rationals>) -> (usize, usize) {
    let f = Rationals;
    let d = a.dim();
    let n = d * d;
    let mut relations = Vec::new();
    let unit = |k: usize| {
        let mut v = vec![f.zero(); n];
        v[k] = f.one();
        v
    };
    let add_into = |v: &mut Vec<Elem>, k: usize, c: &Elem| v[k] = f.add(&v[k], c);
    for s in 0..d {
        for t in 0..d {
            let mut v = unit(s * d + t);
            add_into(&mut v, t * d + s, &f.signed(koszul(a.parity(s), a.parity(t)), &f.one()));
            relations.push(v);
        }
    }
    for x in 0..d {
        for y in 0..d {
            for z in 0..d {
                let (px, py, pz) = (a.parity(x), a.parity(y), a.parity(z));
                let mut v = vec![f.zero(); n];
                let terms = [(x, y, z, koszul(px, pz)), (y, z, x, koszul(py, px)), (z, x, y, koszul(pz, py))];
                for (p, r, s, negate) in terms {
                    for (k, c) in a.basis_product(p, r).iter() {
                        add_into(&mut v, k * d + s, &f.signed(negate, c));
                    }
                }
                relations.push(v);
            }
        }
    }
    let rel_rank = dense_rank(&relations);
    let commutator: Vec<Vec<Elem>> = (0..n).map(|k| dense(&a.supercommutator(k / d, k % d), d)).collect();
    let c_rank = dense_rank(&commutator);
    (n - rel_rank, n - c_rank - rel_rank)
}

fn criterion1() -> Outcome {
    let mut o = Outcome::new();
    for b in Builtin::corpus() {
        let a = q(b);
        o.expect(a.validate().is_valid(), || format!("{b} fails validation"));
        let d = a.dim();
        let table = |i: usize, j: usize| a.basis_product(i, j).clone();
        let mut doubled: Vec<_> = (0..d * d).map(|c| table(c / d, c % d)).collect();
        let u = a.unit_index();
        doubled[u * d + u] = doubled[u * d + u].scale(&Rationals, &Rationals.from_i64(2));
        let m = SuperAlgebra::from_parts("m", Rationals, a.basis_names().to_vec(), a.parities().to_vec(), u, doubled).unwrap();
        o.expect(!m.validate().is_valid(), || format!("{b}: doubled unit accepted"));
        let mut parity = a.parities().to_vec();
        parity[u] = Parity::Odd;
        let odd_unit = SuperAlgebra::from_parts("m", Rationals, a.basis_names().to_vec(), parity, u, (0..d * d).map(|c| table(c / d, c % d)).collect()).unwrap();
        o.expect(!odd_unit.validate().is_valid(), || format!("{b}: odd unit accepted"));
    }
    let g = q(Builtin::Grassmann(1));
    let mut parity = g.parities().to_vec();
    parity[1] = Parity::Even;
    let mut t: Vec<_> = (0..4).map(|c| g.basis_product(c / 2, c % 2).clone()).collect();
    t[3] = SparseVec::unit(&Rationals, 0);
    let clifford_with_even_generator = SuperAlgebra::from_parts("m", Rationals, g.basis_names().to_vec(), parity, 0, t.clone()).unwrap();
    o.expect(clifford_with_even_generator.validate().is_valid(), || "even square root of one rejected".into());
    let odd_square_to_odd = {
        let mut t = t;
        t[3] = SparseVec::unit(&Rationals, 1);
        SuperAlgebra::from_parts("m", Rationals, g.basis_names().to_vec(), g.parities().to_vec(), 0, t).unwrap()
    };
    o.expect(!odd_square_to_odd.validate().is_valid(), || "odd product landing in odd part accepted".into());
    o
}

fn criterion2() -> Outcome {
    let mut o = Outcome::new();
    let known = [(Builtin::Field, 0), (Builtin::Dual, 0), (Builtin::Trunc(3), 0), (Builtin::Grassmann(1), 1), (Builtin::Mat(2), 0)];
    for b in Builtin::corpus() {
        let a = q(b);
        let pairing = hc1(&a).unwrap().dim();
        let complex = hc_n(&a, 1, DEFAULT_MAX_CHAIN).unwrap();
        let (_, oracle) = pairing_oracle(&a);
        o.expect(pairing == complex.dim, || format!("{b}: pairing {pairing} vs complex {}", complex.dim));
        o.expect(complex.well_defined && complex.square_zero, || format!("{b}: cyclic complex is inconsistent"));
        o.expect(pairing == oracle, || format!("{b}: HC_1 {pairing} vs dense oracle {oracle}"));
        if let Some((_, want)) = known.iter().find(|(x, _)| *x == b) {
            o.expect(pairing == *want, || format!("{b}: HC_1 = {pairing}, expected {want}"));
        }
    }
    o
}

fn criterion3() -> Outcome {
    let mut o = Outcome::new();
    for b in Builtin::corpus() {
        let a = q(b);
        let span = a.supercommutator_span();
        let comm = commutator_dim(&a);
        for (m, n) in SHAPES {
            let shape = MatrixShape::new(m, n);
            let s = sl_space(&a, shape).unwrap();
            let gl = Gl::new(&a, shape);
            let want = gl.dim() - a.dim() + comm;
            o.expect(s.equal, || format!("{b} {shape}: [gl,gl] != str^-1([A,A])"));
            o.expect(s.derived.dim() == want, || format!("{b} {shape}: dim sl {} vs {want}", s.derived.dim()));
            let d = gl.dim();
            let traces_ok = (0..d).all(|p| (0..d).all(|q| span.contains(&gl.supertrace(&gl.basis_bracket(p, q)))));
            o.expect(traces_ok, || format!("{b} {shape}: str of a bracket leaves [A,A]"));
            let lie = gl.sl_lie().unwrap();
            o.expect(lie.is_perfect().unwrap(), || format!("{b} {shape}: sl not perfect"));
        }
    }
    o
}

fn criterion4() -> Outcome {
    let mut o = Outcome::new();
    for b in Builtin::corpus() {
        let a = q(b);
        let (pairing_dim, hc1_dim) = pairing_oracle(&a);
        for (m, n) in SHAPES {
            let shape = MatrixShape::new(m, n);
            let size = m + n;
            let want = (size * size - 1) * a.dim() + pairing_dim;
            if want > 60 {
                continue;
            }
            let st = match StModel::build(&a, shape) {
                Ok(st) => st,
                Err(e) => {
                    o.failures.push(format!("{b} {shape}: {e}"));
                    continue;
                }
            };
            o.expect(st.dim() == want, || format!("{b} {shape}: dim {} vs {want}", st.dim()));
            o.expect(st.check_relations().is_none(), || format!("{b} {shape}: relations"));
            o.expect(st.lie().check().is_none(), || format!("{b} {shape}: skew/Jacobi"));
            o.expect(expansion_independent(&a, shape).unwrap(), || format!("{b} {shape}: expansion index changes the table"));
            o.expect(st.phi_homomorphism_failure().is_none(), || format!("{b} {shape}: phi not a homomorphism"));
            let k = st.kernel_phi().unwrap();
            o.expect(k.central, || format!("{b} {shape}: ker phi not central"));
            o.expect(k.hc1_match && k.kernel.dim() == hc1_dim, || format!("{b} {shape}: ker phi dim {} vs HC_1 {hc1_dim}", k.kernel.dim()));
            o.expect(st.diagram_check(), || format!("{b} {shape}: d nu != str phi"));
        }
    }
    o
}

fn criterion5() -> Outcome {
    let mut o = Outcome::new();
    for (b, sharp_dim) in [(Builtin::Field, 17), (Builtin::Grassmann(1), 35)] {
        let a = q(b);
        let st = StModel::build(&a, MatrixShape::new(2, 2)).unwrap();
        let w = CocycleTarget::new(&a).unwrap();
        o.expect(w.dim() == 2 * a.dim(), || format!("{b}: dim W = {}", w.dim()));
        o.expect(verify_cocycle(&st, &w, PsiSign::Standard).unwrap().pass(), || format!("{b}: psi is not a cocycle"));
        match build_st_sharp(&a) {
            Ok(s) => {
                o.expect(s.dim() == sharp_dim, || format!("{b}: dim st# = {}", s.dim()));
                o.expect(s.lie.check().is_none(), || format!("{b}: st# fails Jacobi"));
                o.expect(s.w_central(), || format!("{b}: W not central"));
            }
            Err(e) => o.failures.push(format!("{b}: {e}")),
        }
    }
    let a = q(Builtin::Grassmann(1));
    let st = StModel::build(&a, MatrixShape::new(2, 2)).unwrap();
    let w = CocycleTarget::new(&a).unwrap();
    let mutated = verify_cocycle(&st, &w, PsiSign::DropParity).unwrap();
    o.expect(mutated.jacobi_failure.is_some_and(|(_, j)| !j.is_zero()), || "sign mutation not detected".into());
    o
}

fn criterion6() -> Outcome {
    let mut o = Outcome::new();
    let rows = [
        (Source::St, Builtin::Field, (2, 1), 0),
        (Source::St, Builtin::Grassmann(1), (2, 1), 0),
        (Source::St, Builtin::Field, (3, 1), 0),
        (Source::St, Builtin::Grassmann(1), (3, 1), 0),
        (Source::St, Builtin::Field, (2, 2), 2),
        (Source::St, Builtin::Mat(2), (2, 2), 0),
        (Source::StSharp, Builtin::Field, (2, 2), 0),
        (Source::St, Builtin::Field, (3, 2), 0),
        (Source::Sl, Builtin::Grassmann(1), (3, 2), 1),
    ];
    for (source, b, (m, n), want) in rows {
        let lie = concretize(source, &q(b), MatrixShape::new(m, n)).unwrap();
        match homology(&lie, DEFAULT_MAX_WEDGE) {
            Ok(r) => {
                o.expect(r.d_squared_zero, || format!("{source} {b} {m}|{n}: d^2 != 0"));
                o.expect(r.h2 == want, || format!("{source} {b} {m}|{n}: h2 = {}, expected {want}", r.h2));
            }
            Err(e) => o.failures.push(format!("{source} {b} {m}|{n}: {e}")),
        }
    }
    o
}

fn criterion7() -> Outcome {
    let mut o = Outcome::new();
    let mut check = |source: Source, a: &SuperAlgebra<Rationals>, shape: MatrixShape, label: String| {
        let lie = concretize(source, a, shape).unwrap();
        let h1 = first_homology(&lie).unwrap();
        let perfect = lie.is_perfect().unwrap();
        o.expect(perfect && h1 == 0, || format!("{label}: h1 = {h1}, perfect = {perfect}"));
    };
    for b in Builtin::corpus() {
        let a = q(b);
        for (m, n) in SHAPES {
            let shape = MatrixShape::new(m, n);
            check(Source::Sl, &a, shape, format!("sl {b} {shape}"));
            let (pairing_dim, _) = pairing_oracle(&a);
            if ((m + n) * (m + n) - 1) * a.dim() + pairing_dim <= 60 {
                check(Source::St, &a, shape, format!("st {b} {shape}"));
            }
        }
    }
    check(Source::StSharp, &q(Builtin::Field), MatrixShape::new(2, 2), "st# field".into());
    let gl = concretize(Source::Gl, &q(Builtin::Field), MatrixShape::new(2, 1)).unwrap();
    let h1 = first_homology(&gl).unwrap();
    o.expect(h1 == 1, || format!("gl 2|1 field: h1 = {h1}, expected 1"));
    o
}

fn strip_runtime(s: &str) -> String {
    s.lines().filter(|l| !l.starts_with("runtime_ms")).collect::<Vec<_>>().join("\n")
}

fn criterion8() -> Outcome {
    let mut o = Outcome::new();
    for b in Builtin::corpus() {
        let a = q(b);
        let text = serialize_algebra(&a);
        match parse_algebra_over(&text, Rationals) {
            Ok(back) => {
                o.expect(back == a, || format!("{b}: round trip changes the algebra"));
                o.expect(serialize_algebra(&back) == text, || format!("{b}: serialization not canonical"));
            }
            Err(e) => o.failures.push(format!("{b}: {e}")),
        }
    }
    for p in ["Fp:2", "Fp:4"] {
        let doc = format!("name x\nfield {p}\nbasis one:even\nunit one\n");
        o.expect(parse_algebra(&doc).is_err(), || format!("{p} document accepted"));
    }
    let run = || Command::new(env!("CARGO_BIN_EXE_superstein")).arg("corpus").output().expect("binary runs");
    let (first, second) = (run(), run());
    o.expect(first.status.code() == Some(0), || format!("corpus exits with {:?}", first.status.code()));
    o.expect(second.status.code() == Some(0), || format!("corpus exits with {:?}", second.status.code()));
    let (x, y) = (String::from_utf8_lossy(&first.stdout), String::from_utf8_lossy(&second.stdout));
    o.expect(strip_runtime(&x) == strip_runtime(&y), || "corpus output differs between runs".into());
    o
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("superalgebra corpus validity", criterion1, Duration::from_secs(1)),
        ("HC_1 by two routes", criterion2, Duration::from_secs(5)),
        ("sl descriptions, traces and perfectness", criterion3, Duration::from_secs(30)),
        ("Steinberg model certification", criterion4, Duration::from_secs(120)),
        ("st_2|2 cocycle and extension", criterion5, Duration::from_secs(60)),
        ("second homology matrix", criterion6, Duration::from_secs(300)),
        ("first homology of perfect algebras", criterion7, Duration::from_secs(30)),
        ("format round trip and determinism", criterion8, Duration::from_secs(600)),
    ];
    let mut failed = 0;
    for (k, (title, run, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut outcome = run();
        let elapsed = start.elapsed();
        if elapsed > *budget {
            outcome.failures.push(format!("took {elapsed:?}, budget {budget:?}"));
        }
        let verdict = if outcome.failures.is_empty() { "pass" } else { "FAIL" };
        println!("criterion {}: {verdict}  {title} ({} ms)", k + 1, elapsed.as_millis());
        for f in &outcome.failures {
            println!("    {f}");
        }
        failed += usize::from(!outcome.failures.is_empty());
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
