use std::fmt::Write as _;
use std::path::Path;

use liecoh::classify::{bct_check, characteristic_space, classify_structure, levi_form, BctVerdict, LeviSample};
use liecoh::cohomology::{bigraded_cohomology, ce_cohomology, relative_ce_cohomology, CohomologyError, CohomologyTable};
use liecoh::decompose::{full_assembly, DecomposeError};
use liecoh::lie::{validate_algebra, ComplexLieAlgebra, LieAlgebra, Subspace};
use liecoh::linalg::hermitian_inertia;
use liecoh::roots::{
    build_standard, check_grading, positive_system, positive_system_override, PositiveSystem, RootError,
};
use liecoh::torus::{liouville_report, singular_lattice, solve_dprime, ContinuedFraction, FourierData, MuSpec};
use liecoh::{ExactMatrix, GaussianRational};
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::error::CliError;
use crate::input::{
    load_algebra, load_gram, load_module, load_subalgebra, optional_algebra, parse_covector, parse_roots,
    read_file, require_algebra,
};

/// A finished report in both renderings.
pub struct Output {
    pub json: Value,
    pub text: String,
}

fn fmt_scalars(v: &[GaussianRational]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

fn fmt_matrix(m: &ExactMatrix) -> String {
    let rows: Vec<String> =
        m.to_rows().iter().map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")).collect();
    format!("[{}]", rows.join("; "))
}

fn matrix_json(m: &ExactMatrix) -> Value {
    json!(m.to_rows())
}

fn span_names(g: &ComplexLieAlgebra, s: &Subspace) -> Vec<String> {
    s.basis().iter().map(|v| g.format_vector(v)).collect()
}

fn fmt_span(names: &[String]) -> String {
    format!("span{{{}}}", names.join(", "))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

const COMPACT_ASSUMPTION: &str = "the group is compact (not checkable from structure constants)";
const ROOT_CONVENTION: &str = "[t, x] = a(t) x for x in g_a, read off the bracket table";

pub fn validate(algebra: &str) -> Result<Output, CliError> {
    let g = load_algebra(algebra)?;
    let names = g.basis_names();
    match validate_algebra(&g) {
        Ok(()) => Ok(Output {
            json: json!({"algebra": g.name(), "dim": g.dim(), "jacobi": "ok"}),
            text: format!("{} (dim {}): Jacobi identity holds\n", g.name(), g.dim()),
        }),
        Err(w) => {
            let (a, b, c) = w.triple;
            let triple = [names[a].clone(), names[b].clone(), names[c].clone()];
            let sum = g.format_vector(&w.sum);
            Err(CliError::math(
                format!("Jacobi identity fails on ({}, {}, {}): cyclic sum = {sum}", triple[0], triple[1], triple[2]),
                json!({"witness": {"triple": triple, "sum": sum}}),
            ))
        }
    }
}

fn sample_json(s: &LeviSample, g: &LieAlgebra) -> Value {
    json!({"covector": covector_name(g, &s.covector), "inertia": s.inertia})
}

fn covector_name(g: &LieAlgebra, xi: &[GaussianRational]) -> String {
    let duals: Vec<String> = g.basis_names().iter().map(|n| format!("w_{n}")).collect();
    liecoh::lie::format_combination(&duals, xi)
}

pub fn classify(algebra: Option<&str>, subalgebra: &str, covector: Option<&str>) -> Result<Output, CliError> {
    let (g, c, h) = load_subalgebra(subalgebra, optional_algebra(algebra)?)?;
    let report = classify_structure(&c, &h);
    let chars = characteristic_space(&h);
    let bct = bct_check(&c, &h);
    let h_names = span_names(&c, &h);
    let char_names: Vec<String> = chars.iter().map(|x| covector_name(&g, x)).collect();

    let mut text = String::new();
    let _ = writeln!(text, "algebra: {} (dim {})", g.name(), g.dim());
    let _ = writeln!(text, "h = {}", fmt_span(&h_names));
    let _ = writeln!(text, "elliptic: {}", yes(report.elliptic));
    let _ = writeln!(text, "complex: {}", yes(report.complex));
    let _ = writeln!(text, "CR: {}", yes(report.cr));
    let _ = writeln!(text, "essentially real: {}", yes(report.essentially_real));
    let _ = writeln!(
        text,
        "dims: h {}, h+hbar {}, h∩hbar {}",
        report.dim_h, report.dim_sum, report.dim_intersection
    );
    let _ = writeln!(
        text,
        "characteristic covectors: {}",
        if char_names.is_empty() { "none".to_string() } else { char_names.join(", ") }
    );
    let bct_json = match &bct {
        BctVerdict::EllipticHenceHypocomplex => {
            let _ = writeln!(text, "BCT: elliptic, hence hypocomplex");
            json!({"verdict": "EllipticHenceHypocomplex"})
        }
        BctVerdict::HypocomplexByBCT { evidence } => {
            let _ = writeln!(text, "BCT: hypocomplex (Levi form indefinite at ±xi)");
            for s in evidence {
                let i = s.inertia;
                let _ = writeln!(text, "  {}: inertia ({}, {}, {})", covector_name(&g, &s.covector), i.n_pos, i.n_neg, i.n_zero);
            }
            json!({"verdict": "HypocomplexByBCT", "evidence": evidence.iter().map(|s| sample_json(s, &g)).collect::<Vec<_>>()})
        }
        BctVerdict::Inconclusive { reason, evidence } => {
            let _ = writeln!(text, "BCT: inconclusive ({reason})");
            for s in evidence {
                let i = s.inertia;
                let _ = writeln!(text, "  {}: inertia ({}, {}, {})", covector_name(&g, &s.covector), i.n_pos, i.n_neg, i.n_zero);
            }
            json!({"verdict": "Inconclusive", "reason": reason,
                   "evidence": evidence.iter().map(|s| sample_json(s, &g)).collect::<Vec<_>>()})
        }
    };
    let mut out = json!({
        "algebra": g.name(),
        "subalgebra": h_names,
        "classification": report,
        "characteristic": char_names,
        "bct": bct_json,
        "assumptions": [COMPACT_ASSUMPTION],
    });
    let _ = writeln!(text, "assumed: {COMPACT_ASSUMPTION}");
    if let Some(text_xi) = covector {
        let xi = parse_covector(text_xi, &g)?;
        let form = levi_form(&c, &h, &xi).map_err(|e| CliError::math(e.to_string(), Value::Null))?;
        let inertia = hermitian_inertia(&form.matrix).map_err(|e| CliError::math(e.to_string(), Value::Null))?;
        let _ = writeln!(
            text,
            "Levi form at {}: {} inertia ({}, {}, {})",
            covector_name(&g, &xi),
            fmt_matrix(&form.matrix),
            inertia.n_pos,
            inertia.n_neg,
            inertia.n_zero
        );
        out["levi"] = json!({
            "covector": covector_name(&g, &xi),
            "basis": form.basis.iter().map(|v| c.format_vector(v)).collect::<Vec<_>>(),
            "matrix": matrix_json(&form.matrix),
            "inertia": inertia,
        });
    }
    Ok(Output { json: out, text })
}

fn root_error(e: RootError) -> CliError {
    match e {
        RootError::Lie(l) => l.into(),
        RootError::NotARoot(_) | RootError::NotASignChoice(_) | RootError::InconsistentRank { .. } => {
            CliError::Usage(e.to_string())
        }
        other => CliError::math(other.to_string(), Value::Null),
    }
}

fn positive_json(p: &PositiveSystem) -> Value {
    json!({
        "rule": p.rule,
        "positive_roots": p.positive_roots,
        "closed": p.closed,
        "closure_checks": p.closure_checks.iter().map(|c| json!({
            "alpha": c.alpha, "beta": c.beta, "sum": c.sum, "in_positive": c.in_positive
        })).collect::<Vec<_>>(),
    })
}

pub fn roots(
    algebra: Option<&str>,
    torus: &str,
    positive: Option<&str>,
    standard: Option<(usize, usize)>,
) -> Result<Output, CliError> {
    let (g, c, t) = load_subalgebra(torus, optional_algebra(algebra)?)?;
    let rd = liecoh::roots::root_decomposition(&c, &t).map_err(root_error)?;
    check_grading(&c, &rd).map_err(root_error)?;
    let plus = match positive {
        Some(p) => positive_system_override(&rd, &parse_roots(p)?).map_err(root_error)?,
        None => positive_system(&rd),
    };
    let t_names = span_names(&c, &t);

    let mut text = String::new();
    let _ = writeln!(text, "algebra: {} (dim {}), torus {}", g.name(), g.dim(), fmt_span(&t_names));
    let _ = writeln!(text, "self-centralizing: {}", yes(rd.torus_is_self_centralizing));
    let mut spaces = Vec::new();
    for s in &rd.spaces {
        let names = span_names(&c, &s.space);
        let _ = writeln!(text, "root {}: {}", fmt_scalars(&s.root), fmt_span(&names));
        spaces.push(json!({"root": s.root, "space": names}));
    }
    let _ = writeln!(text, "convention: {ROOT_CONVENTION}");
    let _ = writeln!(text, "grading [g_a, g_b] ⊆ g_(a+b): ok");
    let pos: Vec<String> = plus.positive_roots.iter().map(|r| fmt_scalars(r)).collect();
    let _ = writeln!(text, "positive system ({}): {{{}}}, closed: {}", plus.rule, pos.join(", "), yes(plus.closed));

    let mut out = json!({
        "algebra": g.name(),
        "torus": t_names,
        "self_centralizing": rd.torus_is_self_centralizing,
        "zero_space": span_names(&c, &rd.zero_space),
        "roots": spaces,
        "grading": "ok",
        "convention": ROOT_CONVENTION,
        "positive_system": positive_json(&plus),
    });
    if let Some((s, tt)) = standard {
        let st = build_standard(&c, &rd, s, tt, &plus).map_err(root_error)?;
        let h_names = span_names(&c, &st.subalgebra);
        let _ = writeln!(text, "standard structure (s={s}, t={tt}): h = {}", fmt_span(&h_names));
        let v = &st.verified;
        let _ = writeln!(
            text,
            "  elliptic {}, complex {}, CR {}, essentially real {}; predicted flags agree: {}",
            yes(v.elliptic),
            yes(v.complex),
            yes(v.cr),
            yes(v.essentially_real),
            yes(st.agrees)
        );
        out["standard"] = json!({
            "s": s, "t": tt,
            "subalgebra": h_names,
            "u": span_names(&c, &st.u),
            "predicted": st.predicted,
            "verified": st.verified,
            "agrees": st.agrees,
        });
    }
    Ok(Output { json: out, text })
}

fn cohomology_error(c: &ComplexLieAlgebra, u: &Subspace, e: CohomologyError) -> CliError {
    match e {
        CohomologyError::NotSubalgebra(a, b) => {
            let basis = u.basis();
            let (x, y) = (c.format_vector(&basis[a]), c.format_vector(&basis[b]));
            CliError::math(format!("not a subalgebra: [{x}, {y}] leaves the span"), json!({"not_closed": [x, y]}))
        }
        CohomologyError::NotAModule(_, _) => CliError::math(e.to_string(), Value::Null),
        CohomologyError::Lie(l) => l.into(),
        other => CliError::Malformed(other.to_string()),
    }
}

fn table_text(title: &str, t: &CohomologyTable) -> String {
    let mut s = format!("{title}\n");
    for line in t.render().lines() {
        let _ = writeln!(s, "  {line}");
    }
    s
}

fn representatives_text(t: &CohomologyTable) -> String {
    let mut s = String::new();
    for (d, r) in &t.representatives {
        for v in &r.vectors {
            let terms: Vec<String> = r
                .basis
                .iter()
                .zip(v)
                .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
                .map(|(b, c)| if *c == GaussianRational::from_int(1) { b.clone() } else { format!("({c}){b}") })
                .collect();
            let _ = writeln!(s, "  [{d}] {}", terms.join(" + "));
        }
    }
    s
}

pub fn cohomology(
    algebra: Option<&str>,
    subalgebra: Option<&str>,
    module: &str,
    relative: Option<&str>,
    representatives: bool,
) -> Result<Output, CliError> {
    if subalgebra.is_some() && relative.is_some() {
        return Err(CliError::Usage("--subalgebra and --relative are exclusive".into()));
    }
    if subalgebra.is_some() && module != "trivial" {
        return Err(CliError::Usage("the bigraded complex has trivial coefficients; drop --module".into()));
    }
    let (kind, g, table) = if let Some(sub) = subalgebra {
        let (g, c, h) = load_subalgebra(sub, optional_algebra(algebra)?)?;
        let t = bigraded_cohomology(&c, &h, None, representatives).map_err(|e| cohomology_error(&c, &h, e))?;
        let title = format!("H^{{p,q}}({}; {})", g.name(), fmt_span(&span_names(&c, &h)));
        (title, g, t)
    } else if let Some(rel) = relative {
        let (g, c, u) = load_subalgebra(rel, optional_algebra(algebra)?)?;
        let m = load_module(module, &g, &c)?;
        let t = relative_ce_cohomology(&c, &u, &m, representatives).map_err(|e| cohomology_error(&c, &u, e))?;
        let title = format!("H^k({}, {}; {module})", g.name(), fmt_span(&span_names(&c, &u)));
        (title, g, t)
    } else {
        let g = require_algebra(algebra)?;
        let c = g.complexify();
        let m = load_module(module, &g, &c)?;
        let t = ce_cohomology(&c, &m, representatives);
        (format!("H^k({}; {module})", g.name()), g, t)
    };
    let mut text = table_text(&kind, &table);
    if representatives {
        text.push_str("representatives:\n");
        text.push_str(&representatives_text(&table));
    }
    let json = json!({"algebra": g.name(), "title": kind, "table": table});
    Ok(Output { json, text })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum DualFlag {
    On,
    Off,
    Both,
}

pub fn decompose(
    algebra: Option<&str>,
    subalgebra: &str,
    inner_product: Option<&str>,
    dual: DualFlag,
) -> Result<Output, CliError> {
    let (g, c, h) = load_subalgebra(subalgebra, optional_algebra(algebra)?)?;
    let gram = inner_product.map(|p| load_gram(p, g.dim())).transpose()?;
    let r = full_assembly(&c, &h, gram.as_ref()).map_err(|e| match e {
        DecomposeError::NotElliptic => CliError::math(e.to_string(), Value::Null),
        DecomposeError::NoIdealComplement { ref h, ref u } => {
            CliError::math(e.to_string(), json!({"no_ideal_complement": [h, u]}))
        }
        DecomposeError::Cohomology(inner) => cohomology_error(&c, &h, inner),
        DecomposeError::NotSubalgebra(_, _) | DecomposeError::NoInvariantProduct | DecomposeError::DegenerateProduct => {
            CliError::math(e.to_string(), Value::Null)
        }
        DecomposeError::GramNotSymmetric | DecomposeError::GramNotInvariant(_) => {
            CliError::math(e.to_string(), Value::Null)
        }
        other => CliError::Malformed(other.to_string()),
    })?;

    let mut text = String::new();
    let _ = writeln!(text, "algebra: {}, h = {}", g.name(), fmt_span(&r.u_star));
    let _ = writeln!(text, "k = h∩hbar = {}, u = {}", fmt_span(&r.k), fmt_span(&r.u));
    text.push_str(&table_text("H^s(K):", &r.k_table));
    if dual != DualFlag::Off {
        text.push_str(&table_text("assembled H^{p,q}(G; h), dual coefficients:", &r.dual));
    }
    if dual != DualFlag::On {
        text.push_str(&table_text("assembled H^{p,q}(G; h), non-dual coefficients:", &r.nondual));
    }
    let totals: Vec<String> = r.p_summed.iter().map(ToString::to_string).collect();
    let _ = writeln!(text, "p-summed totals: ({})", totals.join(", "));
    let _ = writeln!(text, "matches bigraded complex: {}", yes(r.matches_bigraded));
    for n in &r.notes {
        let _ = writeln!(text, "note: {n}");
    }

    let mut json = serde_json::to_value(&r).expect("report serializes");
    if dual == DualFlag::On {
        json.as_object_mut().map(|o| o.remove("nondual"));
    }
    if dual == DualFlag::Off {
        json.as_object_mut().map(|o| o.remove("dual"));
    }
    Ok(Output { json, text })
}

pub fn torus_solve(
    mu: Option<&str>,
    cf: Option<&str>,
    rhs: Option<&str>,
    depth: usize,
    bound: Option<i64>,
) -> Result<Output, CliError> {
    let spec = match (mu, cf) {
        (Some(m), None) => {
            let v: BigRational = m.trim().parse().map_err(|_| CliError::Malformed(format!("mu {m:?} is not a rational")))?;
            MuSpec::rational(v)
        }
        (None, Some(c)) => {
            let cf: ContinuedFraction = c.parse().map_err(|e: liecoh::torus::TorusError| CliError::Malformed(e.to_string()))?;
            MuSpec::ContinuedFraction { cf }
        }
        _ => return Err(CliError::Usage("exactly one of --mu and --cf is required".into())),
    };
    let f = rhs
        .map(|p| {
            let path = Path::new(p);
            let text = read_file(path)?;
            serde_json::from_str::<FourierData>(&text).map_err(|e| CliError::Malformed(format!("{p}: {e}")))
        })
        .transpose()?;
    let (value, substitution) = spec.working_value();
    let bound = bound.or(f.as_ref().map(|f| f.cutoff)).unwrap_or(10);
    let lattice = singular_lattice(&value, bound);

    let mut text = String::new();
    let _ = writeln!(text, "mu = {value}");
    if let Some(s) = &substitution {
        let _ = writeln!(text, "note: {s}");
    }
    let pts: Vec<String> = lattice.iter().map(|(x, y)| format!("({x},{y})")).collect();
    let _ = writeln!(text, "singular frequencies within {bound}: {}", pts.join(" "));
    let mut out = json!({"mu": spec, "working_mu": value.to_string(), "bound": bound, "singular_lattice": lattice});

    if let Some(f) = &f {
        let sol = solve_dprime(&spec, f);
        let _ = writeln!(text, "solution u:");
        for ((xi, eta), v) in &sol.u.coefficients {
            let _ = writeln!(text, "  u({xi},{eta}) = {v}");
        }
        let obs: Vec<String> = sol.obstructions.iter().map(|(x, y)| format!("({x},{y})")).collect();
        let _ = writeln!(text, "obstructions: {}", if obs.is_empty() { "none".into() } else { obs.join(" ") });
        let _ = writeln!(text, "residual Lu - f off obstructions: {}", if sol.residual_ok { "0" } else { "NONZERO" });
        out["solution"] = serde_json::to_value(&sol).expect("solution serializes");
    }
    if let MuSpec::ContinuedFraction { cf } = &spec {
        let rep = liouville_report(cf, depth).map_err(|e| CliError::Usage(e.to_string()))?;
        let _ = writeln!(text, "divisor report for {} (depth {}):", rep.cf, rep.depth);
        for row in &rep.rows {
            let _ = writeln!(
                text,
                "  j={} p/q={}/{} |p-mu q| in [{}, {}] vs {}: {:?}",
                row.j, row.p, row.q, approx(&row.divisor_low), approx(&row.divisor_high), approx(&row.threshold), row.status
            );
        }
        let _ = writeln!(text, "verdict: {:?}", rep.verdict);
        for n in &rep.notes {
            let _ = writeln!(text, "note: {n}");
        }
        out["divisors"] = serde_json::to_value(&rep).expect("report serializes");
    }
    Ok(Output { json: out, text })
}

/// Short decimal rendering of an exact rational for the human table.
fn approx(x: &BigRational) -> String {
    use num_traits::ToPrimitive;
    match x.to_f64() {
        Some(v) if v != 0.0 && v.is_finite() => format!("{v:.3e}"),
        Some(_) if num_traits::Zero::is_zero(x) => "0".into(),
        _ => {
            let digits = |n: &num_bigint::BigInt| n.magnitude().to_string().len() as i64;
            format!("~1e{}", digits(x.numer()) - digits(x.denom()))
        }
    }
}
