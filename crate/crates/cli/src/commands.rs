use serde_json::json;
use superstein::algfile::{describe_violation, AlgebraDocument};
use superstein::cyclic::{hc1, hc1_crosscheck, hc_n, pairing_module};
use superstein::homology::{uce_verdict, Source};
use superstein::linear::{Field, FieldSpec, PrimeField, Rationals};
use superstein::matrix::{sl_space, Gl};
use superstein::steinberg::{expansion_independent, StModel};
use superstein::uce22::{build_st_sharp, verify_cocycle, CocycleTarget, PsiSign};
use superstein::{with_algebra, Error, MatrixShape, Result, SuperAlgebra};

use crate::{corpus, default_shape, load_algebra, Cli, Command, Report};

pub fn dispatch(cli: &Cli, echo: &str) -> Result<Report> {
    let mut r = Report::new(echo);
    match &cli.command {
        Command::Validate { file, field } => validate(&mut r, file, *field)?,
        Command::Hc { alg, degree } => {
            let a = load_algebra(&alg.algebra, alg.field)?;
            with_algebra!(&a, a => hc(&mut r, a, *degree, cli.max_chain))?;
        }
        Command::Pairing { alg } => {
            let a = load_algebra(&alg.algebra, alg.field)?;
            with_algebra!(&a, a => pairing(&mut r, a))?;
        }
        Command::Sl { alg, shape } => {
            let a = load_algebra(&alg.algebra, alg.field)?;
            with_algebra!(&a, a => sl(&mut r, a, *shape))?;
        }
        Command::St { alg, shape, verify } => {
            let a = load_algebra(&alg.algebra, alg.field)?;
            with_algebra!(&a, a => st(&mut r, a, *shape, *verify))?;
        }
        Command::Kernel { alg, shape } => {
            let a = load_algebra(&alg.algebra, alg.field)?;
            with_algebra!(&a, a => kernel(&mut r, a, *shape))?;
        }
        Command::Homology { target, alg, shape } => {
            let shape = shape.or_else(|| default_shape(*target)).ok_or_else(|| Error::Input("--shape is required".into()))?;
            let a = load_algebra(&alg.algebra, alg.field)?;
            with_algebra!(&a, a => homology(&mut r, *target, a, shape, cli.max_wedge))?;
        }
        Command::Cocycle22 { alg } => {
            let a = load_algebra(&alg.algebra, alg.field)?;
            with_algebra!(&a, a => cocycle22(&mut r, a))?;
        }
        Command::Corpus => corpus::run(&mut r, cli.max_wedge, cli.max_chain)?,
    }
    Ok(r)
}

fn algebra_inputs<F: Field>(r: &mut Report, a: &SuperAlgebra<F>) {
    r.input("algebra", a.name());
    r.input("field", a.field().spec().to_string());
}

fn validate(r: &mut Report, file: &str, field: Option<FieldSpec>) -> Result<()> {
    if file.starts_with("builtin:") {
        let a = load_algebra(file, field)?;
        return with_algebra!(&a, a => validation_report(r, a));
    }
    let text = std::fs::read_to_string(file).map_err(|e| Error::Input(format!("cannot read {file}: {e}")))?;
    let doc = AlgebraDocument::parse(&text)?;
    let spec = doc.field_spec().ok_or_else(|| Error::Parse { line: 1, column: 1, message: "missing field".into() })?;
    match spec {
        FieldSpec::Rational => validation_report(r, &doc.build_unchecked(Rationals)?),
        FieldSpec::Prime(p) => validation_report(r, &doc.build_unchecked(PrimeField::new(p)?)?),
    }
}

fn validation_report<F: Field>(r: &mut Report, a: &SuperAlgebra<F>) -> Result<()> {
    algebra_inputs(r, a);
    r.result("dim", a.dim());
    r.result("even_dim", a.parities().iter().filter(|p| !p.is_odd()).count());
    r.result("odd_dim", a.parities().iter().filter(|p| p.is_odd()).count());
    let report = a.validate();
    r.result("violations", report.violations.len());
    r.check("axioms", report.is_valid(), || describe_violation(a, &report.violations[0]));
    if report.is_valid() {
        r.result("supercommutative", a.is_supercommutative());
    }
    Ok(())
}

fn hc<F: Field>(r: &mut Report, a: &SuperAlgebra<F>, degree: usize, max_chain: usize) -> Result<()> {
    algebra_inputs(r, a);
    r.input("degree", degree);
    let report = match hc_n(a, degree, max_chain) {
        Ok(rep) => rep,
        Err(Error::Resource { what, dim, limit }) => {
            r.skip(format!("HC_{degree}"), format!("{what} has size {dim} > {limit}"));
            return Ok(());
        }
        Err(e) => return Err(e),
    };
    r.result("dim", report.dim);
    r.result("chain_dims", report.chain_dims.clone());
    r.check("boundary well defined", report.well_defined, || "d does not preserve the cyclic relations".into());
    r.check("d^2 = 0", report.square_zero, || "d_n d_{n+1} != 0".into());
    if degree == 1 {
        let c = hc1_crosscheck(a, max_chain)?;
        r.result("pairing_route", c.pairing_route);
        r.result("complex_route", c.complex_route);
        r.check("HC_1 routes agree", c.pass, || format!("pairing {} vs complex {}", c.pairing_route, c.complex_route));
    }
    Ok(())
}

fn pairing<F: Field>(r: &mut Report, a: &SuperAlgebra<F>) -> Result<()> {
    algebra_inputs(r, a);
    let h = hc1(a)?;
    let p = pairing_module(a)?;
    r.result("pairing_dim", p.quotient_dim());
    r.result("relation_dim", p.relation_dim());
    r.result("hc1_dim", h.dim());
    let names = a.basis_names();
    let basis: Vec<String> = h
        .kernel
        .vectors()
        .iter()
        .map(|v| {
            let terms: Vec<String> = v
                .iter()
                .map(|(k, c)| {
                    let (s, t) = p.section_pair(k);
                    format!("{}*<<{},{}>>", a.field().format(c), names[s], names[t])
                })
                .collect();
            terms.join(" + ")
        })
        .collect();
    r.result("hc1_basis", basis);
    Ok(())
}

/// Supertraces of all basis brackets lie in `[A,A]`.
pub fn bracket_traces_in_commutator<F: Field>(gl: &Gl<F>) -> Result<bool> {
    let span = gl.algebra().supercommutator_span();
    let d = gl.dim();
    Ok((0..d).all(|p| (0..d).all(|q| span.contains(&gl.supertrace(&gl.basis_bracket(p, q))))))
}

fn sl<F: Field>(r: &mut Report, a: &SuperAlgebra<F>, shape: MatrixShape) -> Result<()> {
    algebra_inputs(r, a);
    r.input("shape", shape.to_string());
    let s = sl_space(a, shape)?;
    let gl = Gl::new(a, shape);
    r.result("gl_dim", gl.dim());
    r.result("derived_dim", s.derived.dim());
    r.result("trace_criterion_dim", s.trace_criterion.dim());
    r.result("contained", s.contained);
    r.result("equal", s.equal);
    if shape.m >= 1 {
        r.check("[gl,gl] = {str in [A,A]}", s.equal, || "the two spaces differ".into());
    } else {
        r.check("[gl,gl] in {str in [A,A]}", s.contained, || "containment fails".into());
        r.skip("[gl,gl] = {str in [A,A]}", "equality is only claimed for m >= 1");
    }
    r.check("str [X,Y] in [A,A]", bracket_traces_in_commutator(&gl)?, || "a basis bracket has supertrace outside [A,A]".into());
    let lie = gl.sl_lie()?;
    r.check("sl perfect", lie.is_perfect()?, || "[sl,sl] != sl".into());
    Ok(())
}

fn st<F: Field>(r: &mut Report, a: &SuperAlgebra<F>, shape: MatrixShape, verify: bool) -> Result<()> {
    algebra_inputs(r, a);
    r.input("shape", shape.to_string());
    let model = StModel::build(a, shape)?;
    r.result("dim", model.dim());
    r.result("f_dim", model.f_dim());
    r.result("h_dim", model.h_dim());
    r.result("d_dim", model.d_dim());
    r.result("even_dim", model.lie().even_dim());
    r.result("odd_dim", model.lie().odd_dim());
    if model.swapped() {
        r.result("modelled_shape", model.shape().to_string());
    }
    if verify {
        st_suite(r, &model, "")?;
    }
    Ok(())
}

/// Relations, Jacobi, expansion independence, φ, ν and the kernel checks.
pub fn st_suite<F: Field>(r: &mut Report, model: &StModel<F>, prefix: &str) -> Result<()> {
    let names = model.lie().names();
    let rel = model.check_relations();
    r.check(format!("{prefix}relations"), rel.is_none(), || rel.clone().unwrap_or_default());
    let v = model.lie().check();
    r.check(format!("{prefix}skew and Jacobi"), v.is_none(), || model.lie().describe(v.as_ref().unwrap()));
    let indep = expansion_independent(model.algebra(), model.shape())?;
    r.check(format!("{prefix}expansion index independence"), indep, || "tables differ".into());
    let hom = model.phi_homomorphism_failure();
    r.check(format!("{prefix}phi homomorphism"), hom.is_none(), || {
        let (x, y) = hom.unwrap();
        format!("fails on ({}, {})", names[x], names[y])
    });
    let k = model.kernel_phi()?;
    r.result(format!("{prefix}kernel_dim"), k.kernel.dim());
    r.result(format!("{prefix}hc1_dim"), k.hc1_dim);
    r.check(format!("{prefix}ker phi central"), k.central, || "a kernel vector is not central".into());
    r.check(format!("{prefix}ker phi = mu(HC_1)"), k.hc1_match, || format!("kernel dim {} vs HC_1 dim {}", k.kernel.dim(), k.hc1_dim));
    r.check(format!("{prefix}d nu = str phi"), model.diagram_check(), || "diagram does not commute".into());
    r.check(format!("{prefix}nu on H_ij"), model.nu_formula_check() && model.nu_mu_identity(), || "nu formula fails".into());
    Ok(())
}

fn kernel<F: Field>(r: &mut Report, a: &SuperAlgebra<F>, shape: MatrixShape) -> Result<()> {
    algebra_inputs(r, a);
    r.input("shape", shape.to_string());
    let model = StModel::build(a, shape)?;
    let k = model.kernel_phi()?;
    r.result("st_dim", model.dim());
    r.result("kernel_dim", k.kernel.dim());
    r.result("hc1_dim", k.hc1_dim);
    r.check("hc1_match", k.hc1_match, || format!("kernel dim {} vs HC_1 dim {}", k.kernel.dim(), k.hc1_dim));
    r.check("central", k.central, || "a kernel vector is not central".into());
    Ok(())
}

pub fn homology_row<F: Field>(r: &mut Report, prefix: &str, target: Source, a: &SuperAlgebra<F>, shape: MatrixShape, max_wedge: usize) -> Result<()> {
    let row = uce_verdict(target, a, shape, max_wedge)?;
    if let Some(rep) = &row.report {
        r.result(format!("{prefix}dim"), rep.dim);
        r.result(format!("{prefix}h1"), rep.h1);
        r.result(format!("{prefix}h2"), rep.h2);
        r.result(format!("{prefix}wedge2_dim"), rep.wedge2_dim);
        r.result(format!("{prefix}wedge3_dim"), rep.wedge3_dim);
        r.check(format!("{prefix}d2 d3 = 0"), rep.d_squared_zero, || "boundary does not square to zero".into());
    }
    if let Some(e) = &row.expected {
        r.result(format!("{prefix}expected_h2"), json!({ "value": e.h2, "reason": e.reason }));
    }
    r.status(format!("{prefix}h2 expectation"), row.status);
    Ok(())
}

fn homology<F: Field>(r: &mut Report, target: Source, a: &SuperAlgebra<F>, shape: MatrixShape, max_wedge: usize) -> Result<()> {
    algebra_inputs(r, a);
    r.input("target", target.to_string());
    r.input("shape", shape.to_string());
    homology_row(r, "", target, a, shape, max_wedge)
}

pub fn cocycle_suite<F: Field>(r: &mut Report, a: &SuperAlgebra<F>, prefix: &str) -> Result<()> {
    let model = StModel::build(a, MatrixShape::new(2, 2))?;
    let w = CocycleTarget::new(a)?;
    let names = model.lie().names();
    r.result(format!("{prefix}a0_dim"), w.a0_dim());
    r.result(format!("{prefix}w_dim"), w.dim());
    let v = verify_cocycle(&model, &w, PsiSign::Standard)?;
    r.check(format!("{prefix}psi skew"), v.skew_failure.is_none(), || {
        let (x, y) = v.skew_failure.unwrap();
        format!("({}, {})", names[x], names[y])
    });
    r.check(format!("{prefix}psi cocycle"), v.jacobi_failure.is_none(), || {
        let ((x, y, z), _) = v.jacobi_failure.as_ref().unwrap();
        format!("J({}, {}, {}) != 0", names[*x], names[*y], names[*z])
    });
    let has_odd = a.parities().iter().any(|p| p.is_odd());
    if !has_odd || w.dim() == 0 {
        r.skip(format!("{prefix}sign mutation detected"), "the mutation does not change psi here");
    } else {
        let m = verify_cocycle(&model, &w, PsiSign::DropParity)?;
        let witness = m.jacobi_failure.as_ref().map(|((x, y, z), _)| format!("J({}, {}, {}) != 0", names[*x], names[*y], names[*z]));
        if let Some(wit) = &witness {
            r.result(format!("{prefix}mutation_witness"), wit.clone());
        }
        r.check(format!("{prefix}sign mutation detected"), witness.is_some(), || "mutated psi still passes".into());
    }
    if v.pass() {
        let sharp = build_st_sharp(a)?;
        r.result(format!("{prefix}st_sharp_dim"), sharp.dim());
        let jac = sharp.lie.check();
        r.check(format!("{prefix}st_sharp Jacobi"), jac.is_none(), || sharp.lie.describe(jac.as_ref().unwrap()));
        r.check(format!("{prefix}W central"), sharp.w_central(), || "W is not central".into());
    } else {
        r.skip(format!("{prefix}st_sharp Jacobi"), "psi is not a cocycle");
    }
    Ok(())
}

fn cocycle22<F: Field>(r: &mut Report, a: &SuperAlgebra<F>) -> Result<()> {
    algebra_inputs(r, a);
    cocycle_suite(r, a, "")
}
