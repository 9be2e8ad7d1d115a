use anyhow::{bail, Context, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use slicepd::groebner::{colon, colon_maximal, ideal_member, GroebnerBasis, Ideal};
use slicepd::poly::text::{format_monomial, format_polynomial, parse_monomial, parse_polynomial};
use slicepd::poly::{contract, Field, Monomial, MonomialOrder, Polynomial, Shape};
use slicepd::resolution::{
    ab_projdim, free_resolution, minimalize, verify_exactness, FreeResolution,
};
use slicepd::slicefamily::{
    alpha, build_f, build_ideal_in, support_count, witness_monomial, SliceIdeal,
};
use slicepd::witness::{certify_depth_zero, check_recursion, ColonPlan};
use slicepd::Execution;

use crate::args::{colon_plan, Certify, Colon, Member, ReportAll, Resolve, Ring, ShapeArg};
use crate::report::Report;

/// Direct resolutions are attempted up to this many variables.
pub const RESOLUTION_VARIABLE_LIMIT: u32 = 6;

fn ring_parts(ring: &Ring) -> (&Shape, Field, MonomialOrder) {
    (&ring.shape.shape.0, ring.field.0, ring.order.into())
}

fn require_rational(field: Field, command: &str) -> Result<()> {
    if field != Field::Rational {
        bail!("{command} needs characteristic 0: contraction divides by factorials (got {field})");
    }
    Ok(())
}

/// Appends `p` to the output and records whether its text parses back to it.
fn emit(
    report: &mut Report,
    label: &str,
    p: &Polynomial,
    shape: &Shape,
    round_trip: &mut Vec<String>,
) {
    let text = format_polynomial(p, shape);
    match parse_polynomial(&text, shape, p.field(), p.order()) {
        Ok(back) if back == *p => {}
        _ => round_trip.push(text.clone()),
    }
    if label.is_empty() {
        report.line(text);
    } else {
        report.line(format!("{label}: {text}"));
    }
}

fn round_trip_check(report: &mut Report, count: usize, failures: Vec<String>) {
    let detail = match failures.first() {
        None => format!("{count} polynomials"),
        Some(f) => format!(
            "{} of {count} did not parse back, first: {f}",
            failures.len()
        ),
    };
    report.check(
        "printed polynomials parse back",
        failures.is_empty(),
        detail,
    );
}

fn emit_basis(report: &mut Report, gb: &GroebnerBasis, shape: &Shape) {
    let mut bad = Vec::new();
    for g in gb.basis() {
        emit(report, "", g, shape, &mut bad);
    }
    round_trip_check(report, gb.len(), bad);
}

pub fn construct(ring: &Ring) -> Report {
    let (shape, field, order) = ring_parts(ring);
    let ideal = build_ideal_in(shape, field, order);
    let mut report = Report::new(shape, field);
    let mut bad = Vec::new();
    for (kind, g) in ideal.labelled_generators() {
        emit(&mut report, &kind.to_string(), g, shape, &mut bad);
    }
    let n = ideal.labelled_generators().len();
    report.check(
        "generator count",
        n == SliceIdeal::expected_generator_count(shape),
        format!("{n} = sum(n_i - 1) + n_d"),
    );
    report.check(
        "generators homogeneous",
        ideal.generators().iter().all(Polynomial::is_homogeneous),
        "",
    );
    round_trip_check(&mut report, n, bad);
    report.support = Some(support_count(&ideal.generators()).into());
    report
}

pub fn certify(args: &Certify, exec: Execution) -> Result<Report> {
    let (shape, field, _) = ring_parts(&args.ring);
    require_rational(field, "certify")?;
    Ok(certify_report(shape, colon_plan(args.mode), exec))
}

fn certify_report(shape: &Shape, plan: ColonPlan, exec: Execution) -> Report {
    let cert = certify_depth_zero(shape, plan, exec);
    let mut report = Report::new(shape, Field::Rational);
    report.line(format!(
        "s = {}",
        format_monomial(&witness_monomial(shape), shape)
    ));
    report.line(format!("alpha = {}", alpha(shape)));
    for c in cert.checks() {
        report.checks.push(c.into());
    }
    report.pd = ab_projdim(shape, &cert).ok();
    report.check(
        "pd = n_1*...*n_d (Auslander-Buchsbaum)",
        report.pd == Some(shape.num_vars() as u64),
        match report.pd {
            Some(pd) => format!("pd R/I = {pd}"),
            None => "certificate failed; no projective dimension implied".into(),
        },
    );
    let ideal = build_ideal_in(shape, Field::Rational, MonomialOrder::Grevlex);
    report.support = Some(support_count(&ideal.generators()).into());
    report
}

pub fn gb(ring: &Ring) -> Report {
    let (shape, field, order) = ring_parts(ring);
    let ideal = build_ideal_in(shape, field, order).to_ideal();
    let gb = ideal.groebner_basis();
    let mut report = Report::new(shape, field);
    report.line(format!(
        "reduced Groebner basis ({order}, {} elements):",
        gb.len()
    ));
    emit_basis(&mut report, &gb, shape);
    report.check("S-polynomials reduce to zero", gb.is_groebner(), "");
    report.check(
        "generators reduce to zero",
        ideal.generators().iter().all(|g| gb.contains(g)),
        "",
    );
    report
}

pub fn member(args: &Member) -> Result<Report> {
    let (shape, field, order) = ring_parts(&args.ring);
    let p = parse_polynomial(&args.poly, shape, field, order).context("parsing --poly")?;
    let ideal = build_ideal_in(shape, field, order).to_ideal();
    let gb = ideal.groebner_basis();
    let nf = gb.normal_form(&p);
    let mut report = Report::new(shape, field);
    report.line(format!("normal form: {}", format_polynomial(&nf, shape)));
    report.check(
        "polynomial in I",
        nf.is_zero(),
        format!(
            "{} reduces to {}",
            format_polynomial(&p, shape),
            format_polynomial(&nf, shape)
        ),
    );
    Ok(report)
}

pub fn colon_cmd(args: &Colon) -> Result<Report> {
    let (shape, field, order) = ring_parts(&args.ring);
    let ideal = build_ideal_in(shape, field, order).to_ideal();
    let mut report = Report::new(shape, field);
    let (quotient, label, by): (Ideal, String, Vec<Monomial>) = match &args.by {
        Some(src) => {
            let m = parse_monomial(src, shape).context("parsing --by")?;
            let label = format_monomial(&m, shape);
            (colon(&ideal, &m), label, vec![m])
        }
        None => {
            let vars = (0..shape.num_vars()).map(Monomial::var).collect();
            (colon_maximal(&ideal), "m".into(), vars)
        }
    };
    let gb = quotient.groebner_basis();
    report.line(format!("(I : {label}), reduced Groebner basis:"));
    emit_basis(&mut report, &gb, shape);
    report.check(
        format!("I contained in (I : {label})"),
        ideal.generators().iter().all(|g| gb.contains(g)),
        "",
    );
    let times =
        |g: &Polynomial, m: &Monomial| g.mul(&Polynomial::monomial(field, order, m.clone()));
    report.check(
        format!("(I : {label}) * {label} contained in I"),
        gb.basis()
            .iter()
            .all(|g| by.iter().all(|m| ideal_member(&times(g, m), &ideal))),
        "",
    );
    let s = Polynomial::monomial(field, order, witness_monomial(shape));
    report.line(format!(
        "s in (I : {label}): {}, s in I: {}",
        gb.contains(&s),
        ideal_member(&s, &ideal)
    ));
    Ok(report)
}

fn resolution(args: &Resolve) -> Result<(FreeResolution, Report)> {
    let (shape, field, order) = ring_parts(&args.ring);
    if shape.num_vars() > RESOLUTION_VARIABLE_LIMIT {
        bail!(
            "direct resolution is limited to {RESOLUTION_VARIABLE_LIMIT} variables ({shape} has {}); use certify for pd",
            shape.num_vars()
        );
    }
    let ideal = build_ideal_in(shape, field, order).to_ideal();
    let full = free_resolution(&ideal, args.max_length);
    let res = minimalize(&full);
    let mut report = Report::new(shape, field);
    report.check(
        "complex: d o d = 0",
        full.is_complex() && res.is_complex(),
        "",
    );
    report.check(
        "resolution complete",
        !full.is_truncated(),
        format!("stopped within --max-length {}", args.max_length),
    );
    let top = res
        .modules()
        .iter()
        .flat_map(|m| m.degrees())
        .copied()
        .max()
        .unwrap_or(0);
    let degree = top.min(2 * shape.num_vars() as i64).max(1);
    let exact = verify_exactness(&res, degree)
        .map(|r| r.exact)
        .unwrap_or(false);
    report.check(
        "exact",
        exact,
        format!("graded ranks up to degree {degree}"),
    );
    let length = res.length() as u64;
    report.check(
        "length = n_1*...*n_d",
        length == shape.num_vars() as u64,
        format!("length {length}"),
    );
    report.pd = Some(length);
    report.set_betti(&res.betti());
    Ok((res, report))
}

pub fn resolve(args: &Resolve) -> Result<Report> {
    let (res, mut report) = resolution(args)?;
    report.line(format!("schreyer resolution, minimalized: {res}"));
    for line in res.betti().to_string().lines() {
        report.line(line);
    }
    Ok(report)
}

pub fn betti(args: &Resolve) -> Result<Report> {
    let (res, mut report) = resolution(args)?;
    for line in res.betti().to_string().lines() {
        report.line(line);
    }
    Ok(report)
}

pub fn support(args: &ShapeArg) -> Report {
    let shape = &args.shape.0;
    let ideal = build_ideal_in(shape, Field::Rational, MonomialOrder::Grevlex);
    let count = support_count(&ideal.generators());
    let mut report = Report::new(shape, Field::Rational);
    let d = shape.dimension();
    let expected: u32 = 2 * (1..d).map(|i| shape.extent(i) - 1).sum::<u32>() + shape.extent(d);
    report.check(
        "multiplicity = 2*sum(n_i - 1) + n_d",
        count.multiplicity as u32 == expected,
        format!("{} terms", count.multiplicity),
    );
    if shape.is_cubic() {
        let n = shape.extent(1);
        let cubic = 2 * (n - 1) * (d as u32 - 1) + n;
        report.check(
            "cubic case 2(n-1)(d-1) + n",
            count.multiplicity as u32 == cubic,
            format!("n = {n}, d = {d}: {cubic}"),
        );
    }
    report.support = Some(count.into());
    report
}

/// `(a·b)∘F = a∘(b∘F)` for random monomials `a, b` drawn from `seed`.
fn contraction_spot_check(shape: &Shape, f: &Polynomial, seed: u64) -> (bool, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = shape.num_vars();
    let pick = |rng: &mut ChaCha8Rng| {
        Monomial::from_pairs((0..3).map(|_| (rng.gen_range(0..n), rng.gen_range(0..=1u32))))
    };
    for _ in 0..8 {
        let (a, b) = (pick(&mut rng), pick(&mut rng));
        let one = |m: &Monomial| Polynomial::monomial(Field::Rational, f.order(), m.clone());
        let lhs = contract(&one(&a.mul(&b)), f).expect("rational");
        let rhs = contract(&one(&a), &contract(&one(&b), f).expect("rational")).expect("rational");
        if lhs != rhs {
            return (
                false,
                format!(
                    "a = {}, b = {}",
                    format_monomial(&a, shape),
                    format_monomial(&b, shape)
                ),
            );
        }
    }
    (true, format!("8 random pairs, seed {seed}"))
}

pub fn report_all(args: &ReportAll, exec: Execution) -> Result<Report> {
    let shape = &args.shape.shape.0;
    let ring = Ring {
        shape: args.shape.clone(),
        field: crate::args::FieldValue(Field::Rational),
        order: crate::args::OrderArg::Grevlex,
    };
    let mut report = certify_report(shape, colon_plan(args.mode), exec);
    let prefix = |sub: &str, r: Report, into: &mut Report| {
        for mut c in r.checks {
            c.name = format!("{sub}: {}", c.name);
            into.checks.push(c);
        }
    };
    let built = construct(&ring);
    report.output.extend(built.output.iter().cloned());
    prefix("construct", built, &mut report);
    prefix("support", support(&args.shape), &mut report);

    let f = build_f(shape);
    let rec = check_recursion(shape, &f, exec);
    report.check(
        "recursion s_ij o F = reduced-condition sum",
        rec.pass(),
        format!(
            "{} slices, index-independent per direction",
            rec.entries.len()
        ),
    );
    let (ok, detail) = contraction_spot_check(shape, &f, args.seed);
    report.check("contraction composition spot-check", ok, detail);

    if shape.num_vars() <= slicepd::witness::GROEBNER_VARIABLE_LIMIT {
        prefix("gb", gb(&ring), &mut report);
    }
    if shape.num_vars() <= RESOLUTION_VARIABLE_LIMIT {
        let (res, r) = resolution(&Resolve {
            ring: ring.clone(),
            max_length: 32,
        })?;
        let agree = report.pd == Some(res.length() as u64);
        for line in res.betti().to_string().lines() {
            report.line(line);
        }
        report.betti = r.betti.clone();
        prefix("resolve", r, &mut report);
        report.check("resolution length agrees with certified pd", agree, "");
    }
    Ok(report)
}
