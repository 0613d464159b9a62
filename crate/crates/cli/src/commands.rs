use serde_json::{json, Value};

use spin_nilhecke::expr::{max_index, parse_operator};
use spin_nilhecke::nilhecke::{graded_rank, NilHecke, RankTarget};
use spin_nilhecke::poly::{parse_polynomial, Even, Kind, Spin};
use spin_nilhecke::report::{Check, Report};
use spin_nilhecke::schubert::SchubertFamily;
use spin_nilhecke::suites::{self, Profile};
use spin_nilhecke::symfun::{hilbert_series, in_lambda, LambdaElement};
use spin_nilhecke::weyl::{SignedPermutation, WeylType};
use spin_nilhecke::{AlgebraError, ScalarDomain, Variant};

use crate::{Cli, Command, LambdaOp, ProfileArg, Target};

pub enum CliError {
    Usage(String),
    Failed(String),
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::Parse(_)
            | AlgebraError::InvalidRank { .. }
            | AlgebraError::IndexOutOfRange { .. }
            | AlgebraError::RankMismatch { .. }
            | AlgebraError::NotInGroup(_)
            | AlgebraError::Unsupported(_) => CliError::Usage(e.to_string()),
            _ => CliError::Failed(e.to_string()),
        }
    }
}

pub struct Output {
    pub report: Report,
    /// Human-readable result printed before the check lines.
    pub text: String,
}

type CliResult<T> = std::result::Result<T, CliError>;

struct Parsed {
    variant: Variant,
    ty: WeylType,
    n: usize,
}

impl Parsed {
    fn config(&self) -> Value {
        json!({"variant": self.variant, "type": self.ty, "rank": self.n})
    }
}

fn parse_target(t: &Target) -> CliResult<Parsed> {
    let variant: Variant = t.variant.parse()?;
    let ty: WeylType = t.ty.parse()?;
    ty.check_rank(t.rank)?;
    Ok(Parsed {
        variant,
        ty,
        n: t.rank,
    })
}

fn default_domain(ty: WeylType, given: &Option<String>) -> CliResult<ScalarDomain> {
    match given {
        Some(s) => Ok(s.parse()?),
        None if ty == WeylType::D => Ok(ScalarDomain::Dyadic),
        None => Ok(ScalarDomain::Integer),
    }
}

pub fn run(cli: &Cli) -> CliResult<Output> {
    match &cli.command {
        Command::Verify { target, max_degree } => verify(parse_target(target)?, *max_degree),
        Command::Schubert {
            target,
            element,
            all,
        } => {
            let p = parse_target(target)?;
            match p.variant {
                Variant::Spin => schubert::<Spin>(p, element.as_deref(), *all),
                Variant::Even => schubert::<Even>(p, element.as_deref(), *all),
            }
        }
        Command::Lambda {
            target,
            op,
            poly,
            truncate,
        } => {
            let p = parse_target(target)?;
            match p.variant {
                Variant::Spin => lambda::<Spin>(p, *op, poly.as_deref(), *truncate),
                Variant::Even => lambda::<Even>(p, *op, poly.as_deref(), *truncate),
            }
        }
        Command::Pbw { target, expr } => {
            let p = parse_target(target)?;
            match p.variant {
                Variant::Spin => pbw::<Spin>(p, expr),
                Variant::Even => pbw::<Even>(p, expr),
            }
        }
        Command::Matrix {
            target,
            expr,
            domain,
        } => {
            let p = parse_target(target)?;
            let domain = default_domain(p.ty, domain)?;
            match p.variant {
                Variant::Spin => matrix::<Spin>(p, expr, domain),
                Variant::Even => matrix::<Even>(p, expr, domain),
            }
        }
        Command::MatrixUnits { target, domain } => {
            let p = parse_target(target)?;
            let domain = default_domain(p.ty, domain)?;
            matrix_units(p, domain)
        }
        Command::Center { target, degree_cap } => {
            let p = parse_target(target)?;
            if p.variant != Variant::Spin {
                return Err(CliError::Usage(
                    "center is implemented for the spin variant".into(),
                ));
            }
            let mut report = Report::new("center", p.config());
            report.config["degree_cap"] = json!(degree_cap);
            report.push(suites::center(p.ty, p.n, *degree_cap)?);
            Ok(Output {
                report,
                text: String::new(),
            })
        }
        Command::RankSeries {
            target,
            what,
            truncate,
        } => rank_series(parse_target(target)?, what, *truncate),
        Command::CheckAll { profile } => check_all(*profile, cli.seed),
    }
}

fn verify(p: Parsed, max_degree: u32) -> CliResult<Output> {
    let check = suites::relations(p.variant, p.ty, p.n, max_degree)?;
    let mut text = String::new();
    if let Some(Value::Array(fams)) = check.witness.as_ref().and_then(|w| w.get("families")) {
        for f in fams {
            text.push_str(&format!(
                "  {:<32} instances {:>3}  evaluations {:>6}\n",
                f["family"].as_str().unwrap_or(""),
                f["instances"],
                f["evaluations"]
            ));
        }
    }
    let mut report = Report::new("verify", p.config());
    report.config["max_degree"] = json!(max_degree);
    report.push(check);
    Ok(Output { report, text })
}

fn schubert<K: Kind>(p: Parsed, element: Option<&str>, _all: bool) -> CliResult<Output> {
    let family = SchubertFamily::<K>::new(p.ty, p.n)?;
    let group = family.group();
    let indices: Vec<usize> = match element {
        Some(e) => {
            let w = SignedPermutation::parse(p.ty, p.n, e)?;
            vec![group
                .index_of(&w)
                .ok_or_else(|| CliError::Usage(format!("{w} is not in the group")))?]
        }
        None => (0..family.len()).collect(),
    };
    let mut text = String::new();
    let mut rows = Vec::new();
    for &k in &indices {
        let w = group.element(k);
        let s = family.polynomial(k);
        text.push_str(&format!(
            "{:<14} {:<20} constant {:>3}   {}\n",
            w.to_string(),
            w.word_string(),
            family.constant(k),
            s
        ));
        rows.push(json!({
            "element": w.to_string(),
            "word": group.word(k),
            "length": group.length_of(k),
            "polynomial": s.to_string(),
            "terms": s.to_json(),
            "constant": family.constant(k).to_string(),
        }));
    }
    let mut report = Report::new("schubert", p.config());
    report.push(Check::new(
        "schubert/triangularity",
        "∂_u(𝔰_w) = 0 whenever ℓ(u) ≥ ℓ(w) and u ≠ w, and ∂_w(𝔰_w) is a nonzero constant",
        p.config(),
        family.triangularity_holds(),
    ));
    report.set_result(json!({"count": rows.len(), "polynomials": rows}));
    Ok(Output { report, text })
}

fn lambda<K: Kind>(
    p: Parsed,
    op: LambdaOp,
    poly: Option<&str>,
    truncate: i64,
) -> CliResult<Output> {
    let mut report = Report::new("lambda", p.config());
    let need_poly =
        || poly.ok_or_else(|| CliError::Usage("--poly is required for this operation".into()));
    let text = match op {
        LambdaOp::Member => {
            let f = parse_polynomial::<K>(need_poly()?, Some(p.n))?;
            let m = in_lambda(p.ty, p.n, &f)?;
            report.set_result(json!({
                "polynomial": f.to_string(),
                "member": m.is_member(),
                "images": m.images.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            }));
            let mut t = format!(
                "{f}: {}\n",
                if m.is_member() {
                    "member"
                } else {
                    "not a member"
                }
            );
            for (i, g) in m.images.iter().enumerate() {
                t.push_str(&format!("  d{}(f) = {g}\n", i + 1));
            }
            t
        }
        LambdaOp::Express => {
            let f = parse_polynomial::<K>(need_poly()?, Some(p.n))?;
            let l = LambdaElement::new(p.ty, p.n, f)?;
            report.set_result(
                json!({"polynomial": l.polynomial().to_string(), "expression": l.to_string()}),
            );
            format!("{} = {}\n", l.polynomial(), l)
        }
        LambdaOp::Series => {
            let s = hilbert_series(p.variant, p.ty, p.n, truncate)?;
            report.config["truncate"] = json!(truncate);
            report.push(suites::hilbert(p.variant, p.ty, p.n, truncate)?);
            report.set_result(json!({"series": s.to_string(), "terms": s.to_json()}));
            format!("{s}\n")
        }
    };
    Ok(Output { report, text })
}

fn check_expression_rank(
    expr: &spin_nilhecke::relations::OperatorExpr,
    p: &Parsed,
) -> CliResult<()> {
    let m = max_index(expr);
    if m > p.n {
        return Err(CliError::Usage(format!("index {m} exceeds rank {}", p.n)));
    }
    Ok(())
}

fn pbw<K: Kind>(p: Parsed, src: &str) -> CliResult<Output> {
    let expr = parse_operator(src)?;
    check_expression_rank(&expr, &p)?;
    let nh = NilHecke::<K>::new(p.ty, p.n)?;
    let a = nh.from_expression(&expr)?;
    let text = format!("{}\n", nh.format(&a));
    let mut report = Report::new("pbw", p.config());
    report.config["expr"] = json!(src);
    report.set_result(json!({
        "element": nh.format(&a),
        "q_degree": nh.q_degree(&a),
        "terms": nh.terms_json(&a),
    }));
    Ok(Output { report, text })
}

fn matrix<K: Kind>(p: Parsed, src: &str, domain: ScalarDomain) -> CliResult<Output> {
    let expr = parse_operator(src)?;
    check_expression_rank(&expr, &p)?;
    let nh = NilHecke::<K>::new(p.ty, p.n)?;
    let a = nh.from_expression(&expr)?;
    let m = nh.to_matrix(&a, domain)?;
    let labels: Vec<String> = nh
        .group()
        .elements()
        .iter()
        .map(|w| w.to_string())
        .collect();
    let mut report = Report::new("matrix", p.config());
    report.config["expr"] = json!(src);
    report.config["domain"] = json!(domain.to_string());
    report.set_result(json!({
        "element": nh.format(&a),
        "basis": labels,
        "entries": m.to_strings(),
        "polynomials": m.entries().iter().map(|row| row.iter().map(|e| e.polynomial().to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
    }));
    Ok(Output {
        report,
        text: format!("basis: {}\n{m}", labels.join(" ")),
    })
}

fn matrix_units(p: Parsed, domain: ScalarDomain) -> CliResult<Output> {
    let check = suites::matrix_units_check(p.variant, p.ty, p.n, domain)?;
    let detail = check
        .witness
        .as_ref()
        .or(check.counterexample.as_ref())
        .cloned()
        .unwrap_or(Value::Null);
    let text = format!(
        "{} of {} matrix units solved over {domain}\n",
        detail["solved"],
        detail["size"].as_u64().map_or(0, |s| s * s)
    );
    let mut report = Report::new("matrix-units", p.config());
    report.config["domain"] = json!(domain.to_string());
    report.push(check);
    Ok(Output { report, text })
}

fn rank_series(p: Parsed, what: &str, truncate: i64) -> CliResult<Output> {
    let target: RankTarget = what.parse()?;
    let s = graded_rank(target, p.variant, p.ty, p.n, truncate)?;
    let mut report = Report::new("rank-series", p.config());
    report.config["what"] = json!(target);
    report.config["truncate"] = json!(truncate);
    report.push(suites::graded_rank_check(
        target, p.variant, p.ty, p.n, truncate,
    )?);
    report.set_result(json!({"series": s.to_string(), "terms": s.to_json()}));
    Ok(Output {
        report,
        text: format!("{s}\n"),
    })
}

fn check_all(profile: ProfileArg, seed: u64) -> CliResult<Output> {
    let profile = match profile {
        ProfileArg::Quick => Profile::Quick,
        ProfileArg::Full => Profile::Full,
    };
    let criteria = suites::all_criteria(profile, seed)?;
    let mut report = Report::new("check-all", json!({"profile": profile, "seed": seed}));
    let mut text = String::new();
    let mut summary = Vec::new();
    for c in criteria {
        text.push_str(&format!(
            "criterion {:>2} ({}): {}\n",
            c.number,
            c.title,
            if c.passed() { "PASS" } else { "FAIL" }
        ));
        summary.push(json!({"criterion": c.number, "title": c.title, "passed": c.passed()}));
        for mut check in c.checks {
            check.name = format!("{}/{}", c.number, check.name);
            report.push(check);
        }
    }
    report.set_result(json!({"criteria": summary}));
    Ok(Output { report, text })
}
