//! The certification matrix over the builtin algebras.

use superstein::algfile::{describe_violation, parse_algebra, parse_algebra_over, serialize_algebra};
use superstein::cyclic::{hc1_crosscheck, PairingModule};
use superstein::homology::{concretize, first_homology, Source};
use superstein::linear::{Field, Rationals, SparseVec};
use superstein::matrix::{sl_space, Gl};
use superstein::{Builtin, Error, MatrixShape, Parity, Result, StModel, SuperAlgebra};

use crate::commands::{bracket_traces_in_commutator, cocycle_suite, homology_row, st_suite};
use crate::Report;

pub const SHAPES: [(usize, usize); 4] = [(2, 1), (3, 1), (2, 2), (3, 2)];
pub const MAX_ST_DIM: usize = 60;

/// Known `dim HC_1` values.
pub const HC1_VALUES: [(Builtin, usize); 5] =
    [(Builtin::Field, 0), (Builtin::Dual, 0), (Builtin::Trunc(3), 0), (Builtin::Grassmann(1), 1), (Builtin::Mat(2), 0)];

/// Rows of the homology matrix: target, algebra, shape.
pub const HOMOLOGY_ROWS: [(Source, Builtin, (usize, usize)); 10] = [
    (Source::St, Builtin::Field, (2, 1)),
    (Source::St, Builtin::Grassmann(1), (2, 1)),
    (Source::St, Builtin::Field, (3, 1)),
    (Source::St, Builtin::Grassmann(1), (3, 1)),
    (Source::St, Builtin::Field, (2, 2)),
    (Source::St, Builtin::Mat(2), (2, 2)),
    (Source::StSharp, Builtin::Field, (2, 2)),
    (Source::StSharp, Builtin::Grassmann(1), (2, 2)),
    (Source::St, Builtin::Field, (3, 2)),
    (Source::Sl, Builtin::Grassmann(1), (3, 2)),
];

/// Malformed documents that must be rejected.
pub const NEGATIVE_DOCUMENTS: [(&str, &str); 5] = [
    ("unknown name", "name x\nfield Q\nbasis one:even\nunit one\nmul one one = 1*two\n"),
    ("parity typo", "name x\nfield Q\nbasis one:even th:odd_\nunit one\n"),
    ("characteristic 2", "name x\nfield Fp:2\nbasis one:even\nunit one\n"),
    ("non-associative", "name x\nfield Q\nbasis one:even a:even b:even\nunit one\nmul a b = 1*a\n"),
    ("missing unit", "name x\nfield Q\nbasis one:even\n"),
];

fn q(b: Builtin) -> Result<SuperAlgebra<Rationals>> {
    b.build(Rationals)
}

fn table_of<F: Field>(a: &SuperAlgebra<F>) -> Vec<SparseVec<F::Elem>> {
    let d = a.dim();
    (0..d * d).map(|c| a.basis_product(c / d, c % d).clone()).collect()
}

/// Deliberately broken copies of `a`: the unit squared doubled, and an odd unit.
pub fn mutations<F: Field>(a: &SuperAlgebra<F>) -> Result<Vec<(&'static str, SuperAlgebra<F>)>> {
    let d = a.dim();
    let u = a.unit_index();
    let field = a.field();
    let mut table = table_of(a);
    table[u * d + u] = table[u * d + u].scale(field, &field.from_i64(2));
    let doubled = SuperAlgebra::from_parts(a.name(), field.clone(), a.basis_names().to_vec(), a.parities().to_vec(), u, table)?;
    let mut parity = a.parities().to_vec();
    parity[u] = Parity::Odd;
    let odd_unit = SuperAlgebra::from_parts(a.name(), field.clone(), a.basis_names().to_vec(), parity, u, table_of(a))?;
    Ok(vec![("unit squared doubled", doubled), ("odd unit", odd_unit)])
}

fn shape_name(m: usize, n: usize) -> String {
    format!("{m}|{n}")
}

/// Predicted `dim st_{m|n}(A)` without building the model.
pub fn st_dim<F: Field>(a: &SuperAlgebra<F>, shape: MatrixShape) -> Result<usize> {
    let size = shape.size();
    Ok((size * size - 1) * a.dim() + PairingModule::new(a)?.quotient_dim())
}

pub fn run(r: &mut Report, max_wedge: usize, max_chain: usize) -> Result<()> {
    r.input("field", "Q");
    r.input("corpus", Builtin::corpus().iter().map(|b| b.ident()).collect::<Vec<_>>());
    criterion1(r)?;
    criterion2(r, max_chain)?;
    criterion3(r)?;
    criterion4(r)?;
    criterion5(r)?;
    criterion6(r, max_wedge)?;
    criterion7(r)?;
    criterion8(r)?;
    Ok(())
}

fn criterion1(r: &mut Report) -> Result<()> {
    for b in Builtin::corpus() {
        let a = q(b)?;
        let report = a.validate();
        r.check(format!("c1 {b} valid"), report.is_valid(), || format!("{:?}", report.violations));
        for (kind, m) in mutations(&a)? {
            let v = m.validate();
            r.check(format!("c1 {b} {kind} rejected"), !v.is_valid(), || "mutation passes validation".into());
            if let Some(first) = v.violations.first() {
                r.result(format!("c1 {b} {kind} witness"), describe_violation(&m, first));
            }
        }
    }
    Ok(())
}

fn criterion2(r: &mut Report, max_chain: usize) -> Result<()> {
    for b in Builtin::corpus() {
        let c = hc1_crosscheck(&q(b)?, max_chain)?;
        r.result(format!("c2 {b} hc1"), c.pairing_route);
        r.check(format!("c2 {b} routes agree"), c.pass, || format!("pairing {} vs complex {}", c.pairing_route, c.complex_route));
        if let Some((_, want)) = HC1_VALUES.iter().find(|(x, _)| *x == b) {
            r.check(format!("c2 {b} hc1 = {want}"), c.pairing_route == *want, || format!("got {}", c.pairing_route));
        }
    }
    Ok(())
}

fn criterion3(r: &mut Report) -> Result<()> {
    for b in Builtin::corpus() {
        let a = q(b)?;
        for (m, n) in SHAPES {
            let shape = MatrixShape::new(m, n);
            let tag = format!("c3 {b} {}", shape_name(m, n));
            let s = sl_space(&a, shape)?;
            r.result(format!("{tag} sl_dim"), s.derived.dim());
            r.check(format!("{tag} derived = trace criterion"), s.equal, || {
                format!("derived {} vs trace criterion {}", s.derived.dim(), s.trace_criterion.dim())
            });
            let gl = Gl::new(&a, shape);
            r.check(format!("{tag} str of brackets in [A,A]"), bracket_traces_in_commutator(&gl)?, || "trace outside [A,A]".into());
            r.check(format!("{tag} sl perfect"), gl.sl_lie()?.is_perfect()?, || "[sl,sl] != sl".into());
        }
    }
    Ok(())
}

fn criterion4(r: &mut Report) -> Result<()> {
    for b in Builtin::corpus() {
        let a = q(b)?;
        for (m, n) in SHAPES {
            let shape = MatrixShape::new(m, n);
            let tag = format!("c4 {b} {}", shape_name(m, n));
            let dim = st_dim(&a, shape)?;
            if dim > MAX_ST_DIM {
                r.skip(tag, format!("dim st = {dim} > {MAX_ST_DIM}"));
                continue;
            }
            match StModel::build(&a, shape) {
                Ok(model) => {
                    r.result(format!("{tag} dim"), model.dim());
                    st_suite(r, &model, &format!("{tag} "))?;
                }
                Err(Error::Verification(w)) => r.check(format!("{tag} construction"), false, || w),
                Err(e) => return Err(e),
            }
        }
    }
    Ok(())
}

fn criterion5(r: &mut Report) -> Result<()> {
    for b in [Builtin::Field, Builtin::Grassmann(1)] {
        cocycle_suite(r, &q(b)?, &format!("c5 {b} "))?;
    }
    Ok(())
}

fn criterion6(r: &mut Report, max_wedge: usize) -> Result<()> {
    for (source, b, (m, n)) in HOMOLOGY_ROWS {
        let prefix = format!("c6 {source} {b} {} ", shape_name(m, n));
        homology_row(r, &prefix, source, &q(b)?, MatrixShape::new(m, n), max_wedge)?;
    }
    Ok(())
}

fn criterion7(r: &mut Report) -> Result<()> {
    let check = |r: &mut Report, name: String, source: Source, a: &SuperAlgebra<Rationals>, shape: MatrixShape| -> Result<()> {
        let lie = concretize(source, a, shape)?;
        let h1 = first_homology(&lie)?;
        let perfect = lie.is_perfect()?;
        r.check(format!("{name} h1 = 0"), h1 == 0 && perfect, || format!("h1 = {h1}, perfect = {perfect}"));
        Ok(())
    };
    for b in Builtin::corpus() {
        let a = q(b)?;
        for (m, n) in SHAPES {
            let shape = MatrixShape::new(m, n);
            check(r, format!("c7 sl {b} {}", shape_name(m, n)), Source::Sl, &a, shape)?;
            if st_dim(&a, shape)? <= MAX_ST_DIM {
                check(r, format!("c7 st {b} {}", shape_name(m, n)), Source::St, &a, shape)?;
            }
        }
    }
    for b in [Builtin::Field, Builtin::Grassmann(1)] {
        check(r, format!("c7 stsharp {b}"), Source::StSharp, &q(b)?, MatrixShape::new(2, 2))?;
    }
    let gl = concretize(Source::Gl, &q(Builtin::Field)?, MatrixShape::new(2, 1))?;
    let h1 = first_homology(&gl)?;
    r.result("c7 gl field 2|1 h1", h1);
    r.check("c7 gl field 2|1 h1 != 0", h1 != 0 && !gl.is_perfect()?, || format!("h1 = {h1}"));
    Ok(())
}

fn criterion8(r: &mut Report) -> Result<()> {
    for b in Builtin::corpus() {
        let a = q(b)?;
        let text = serialize_algebra(&a);
        let ok = match parse_algebra_over(&text, Rationals) {
            Ok(back) => back == a && serialize_algebra(&back) == text,
            Err(_) => false,
        };
        r.check(format!("c8 {b} round trip"), ok, || "parse(serialize(A)) != A".into());
    }
    for (kind, doc) in NEGATIVE_DOCUMENTS {
        match parse_algebra(doc) {
            Ok(_) => r.check(format!("c8 reject {kind}"), false, || "document accepted".into()),
            Err(e) => {
                r.result(format!("c8 reject {kind} error"), e.to_string());
                r.check(format!("c8 reject {kind}"), true, String::new);
            }
        }
    }
    Ok(())
}
