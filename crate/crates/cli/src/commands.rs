//! Subcommand implementations. Each returns a report plus a pass flag.

use anyhow::{anyhow, Context};
use rayon::prelude::*;
use serde_json::{json, Value};

use num_traits::One;
use slant_lab::commutator::{default_k_max, lemma_verdict, scan_commutator, theorem_verdict, Verdict, VerdictReport};
use slant_lab::identity::{check_system, cross_check, hilbert_rank_argument, CheckTarget, SystemKind};
use slant_lab::matrix::{build_matrix, float_rows_to_json, rows_to_csv};
use slant_lab::random::{nonzero_coeff, nonzero_rational, random_poly, random_sparse_poly, rng_from_seed};
use slant_lab::remark::{remark_counterexample, RemarkVariant};
use slant_lab::{
    apply_expr, parse_rational, rat, slant_adjoint_apply, slant_apply, toeplitz_apply, Expr, Poly,
    Rational, Symbol,
};

use crate::cli::{Basis, Cli, Command, Format, Suite};
use crate::parse::{parse_poly, parse_symbol, parse_word, ParseError};

/// Bad input from the caller; maps to exit code 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

pub enum Body {
    Json(Value),
    Text(String),
}

pub struct Outcome {
    pub body: Body,
    /// False when a verification failed or a strict scan was inconclusive.
    pub ok: bool,
}

impl Outcome {
    fn json(mut value: Value, ok: bool) -> Self {
        value["schema"] = json!(1);
        Self { body: Body::Json(value), ok }
    }

    pub fn render(&self) -> String {
        match &self.body {
            Body::Json(v) => serde_json::to_string_pretty(v).expect("serializable") + "\n",
            Body::Text(t) => t.clone(),
        }
    }
}

fn usage(what: &str, e: ParseError) -> anyhow::Error {
    anyhow!(UsageError(format!("{what}: {e}")))
}

fn symbol(what: &str, text: &str) -> anyhow::Result<Symbol> {
    parse_symbol(text).map_err(|e| usage(what, e))
}

fn poly(what: &str, text: &str) -> anyhow::Result<Poly> {
    parse_poly(text).map_err(|e| usage(what, e))
}

fn scalar(what: &str, text: &str) -> anyhow::Result<Rational> {
    parse_rational(text).ok_or_else(|| anyhow!(UsageError(format!("{what}: expected an integer or p/q, got `{text}`"))))
}

fn poly_json(p: &Poly) -> Value {
    json!({
        "text": p.to_string(),
        "terms": p.terms().map(|(d, c)| json!({"degree": d, "coeff": c.to_string()})).collect::<Vec<_>>(),
    })
}

pub fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    match &cli.command {
        Command::Apply { word, poly: p } => {
            let expr = parse_word(word).map_err(|e| usage("--word", e))?;
            let input = poly("--poly", p)?;
            let output = apply_expr(&expr, &input);
            Ok(Outcome::json(
                json!({"word": expr.to_string(), "input": poly_json(&input), "output": poly_json(&output)}),
                true,
            ))
        }
        Command::Matrix { word, rows, cols, basis, format } => {
            let expr = parse_word(word).map_err(|e| usage("--word", e))?;
            Ok(matrix(&expr, *rows, *cols, *basis, *format))
        }
        Command::Commutator { f, g, kmax } => {
            let f = symbol("--f", f)?;
            let g = symbol("--g", g)?;
            let k_max = kmax.unwrap_or_else(|| default_k_max(&f, &g));
            Ok(Outcome::json(scan_commutator(&f, &g, k_max).to_json(), true))
        }
        Command::Theorem { pbar, phi, psi, kmax, strict } => {
            let pbar = symbol("--pbar", pbar)?;
            let report = theorem_verdict(&pbar, &poly("--phi", phi)?, &poly("--psi", psi)?, *kmax)
                .map_err(|e| anyhow!(UsageError(e.to_string())))?;
            Ok(verdict(report, *strict))
        }
        Command::Lemma { a, b, n, phi, psi, kmax, strict } => {
            let report = lemma_verdict(
                &scalar("--a", a)?,
                &scalar("--b", b)?,
                *n,
                &poly("--phi", phi)?,
                &poly("--psi", psi)?,
                *kmax,
            )
            .map_err(|e| anyhow!(UsageError(e.to_string())))?;
            Ok(verdict(report, *strict))
        }
        Command::Verify { suite } => match suite {
            Suite::Lemmas { nmax, samples } => Ok(verify_lemmas(cli.seed, *nmax, *samples)),
            Suite::Identities { instances, smax, kmax, details } => {
                Ok(verify_identities(cli.seed, *instances, *smax, *kmax, *details))
            }
            Suite::Remark { variant, phi, psi } => {
                Ok(verify_remark(*variant, &poly("--phi", phi)?, &poly("--psi", psi)?))
            }
            Suite::Systems { tmax, nmax } => {
                if *tmax < 0 || *nmax < 1 {
                    return Err(anyhow!(UsageError("need --tmax >= 0 and --nmax >= 1".into())));
                }
                Ok(verify_systems(*tmax, *nmax))
            }
            Suite::Rank97 { nmax } => {
                if *nmax < 1 {
                    return Err(anyhow!(UsageError("need --nmax >= 1".into())));
                }
                Ok(verify_rank(*nmax))
            }
        },
    }
}

fn matrix(expr: &Expr, rows: usize, cols: usize, basis: Basis, format: Format) -> Outcome {
    let m = build_matrix(expr, rows, cols);
    let (entries, text) = match basis {
        Basis::Monomial => (m.to_json(), m.to_strings()),
        Basis::Orthonormal => {
            let floats = m.orthonormal();
            let text = floats.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
            (float_rows_to_json(&floats), text)
        }
    };
    match format {
        Format::Csv => Outcome { body: Body::Text(rows_to_csv(&text)), ok: true },
        Format::Json => Outcome::json(
            json!({
                "word": expr.to_string(),
                "rows": rows,
                "cols": cols,
                "basis": match basis { Basis::Monomial => "monomial", Basis::Orthonormal => "orthonormal" },
                "approximate": basis == Basis::Orthonormal,
                "entries": entries,
            }),
            true,
        ),
    }
}

fn verdict(report: VerdictReport, strict: bool) -> Outcome {
    let inconclusive = matches!(report.verdict, Verdict::InconclusiveWithinBound { .. });
    Outcome::json(report.to_json(), !(strict && inconclusive))
}

fn suite(name: &str, checked: usize, failures: Vec<String>) -> Value {
    json!({"name": name, "checked": checked, "passed": failures.is_empty(), "failures": failures})
}

fn verify_lemmas(seed: u64, nmax: usize, samples: usize) -> Outcome {
    let word = Expr::identity().then_slant_adjoint().then_slant();
    let mut fails = Vec::new();
    for n in 0..=nmax {
        let want = Poly::monomial(2 * n, rat(2 * n as i64 + 1, n as i64 + 1));
        if apply_expr(&word, &Poly::z_pow(2 * n)) != want {
            fails.push(format!("even input z^{}", 2 * n));
        }
        if !apply_expr(&word, &Poly::z_pow(2 * n + 1)).is_zero() {
            fails.push(format!("odd input z^{}", 2 * n + 1));
        }
    }
    let round_trip = suite("slant-adjoint-after-slant", 2 * (nmax + 1), fails);

    let mut rng = rng_from_seed(seed);
    let mut fails = Vec::new();
    for i in 0..samples {
        let p = random_poly(&mut rng, 100);
        let norm = p.bergman_norm_squared();
        let lifted = slant_adjoint_apply(&p).bergman_norm_squared();
        if !(norm <= lifted && lifted <= rat(2, 1) * &norm) {
            fails.push(format!("sample {i}: {norm} vs {lifted}"));
        }
    }
    let ratio = |n: i64| rat(2 * n + 1, n + 1);
    if ratio(0) != Rational::one() || !(0..nmax as i64).all(|n| ratio(n) < ratio(n + 1) && ratio(n + 1) < rat(2, 1)) {
        fails.push("monomial ratio not increasing from 1 toward 2".into());
    }
    let bounds = suite("slant-adjoint-norm-bounds", samples, fails);

    let mut fails = Vec::new();
    for i in 0..samples {
        let phi = random_poly(&mut rng, 8);
        let f = random_poly(&mut rng, 50);
        let left = toeplitz_apply(&Symbol::analytic(phi.clone()), &slant_apply(&f));
        let right = slant_apply(&toeplitz_apply(&Symbol::analytic(phi.substitute_z_squared()), &f));
        if left != right {
            fails.push(format!("pair {i}"));
        }
    }
    let intertwining = suite("analytic-toeplitz-intertwining", samples, fails);

    let mut fails = Vec::new();
    for i in 0..samples {
        let p = random_poly(&mut rng, 40);
        let q = random_poly(&mut rng, 40);
        if slant_apply(&p).bergman_inner(&q) != p.bergman_inner(&slant_adjoint_apply(&q)) {
            fails.push(format!("pair {i}"));
        }
    }
    let adjoint = suite("slant-adjointness", samples, fails);

    let suites = vec![round_trip, bounds, intertwining, adjoint];
    let ok = suites.iter().all(|s| s["passed"] == json!(true));
    Outcome::json(json!({"seed": seed, "nMax": nmax, "samples": samples, "suites": suites, "passed": ok}), ok)
}

fn verify_identities(seed: u64, instances: usize, s_max: usize, k_max: usize, details: bool) -> Outcome {
    let mut rng = rng_from_seed(seed);
    let mut entries = Vec::new();
    let mut ok = true;
    for instance in 0..instances {
        let phi = random_sparse_poly(&mut rng, 6);
        let psi = random_sparse_poly(&mut rng, 6);
        let a = nonzero_rational(&mut rng);
        let mut targets = vec![CheckTarget::Linear { a: a.clone() }];
        targets.extend((1..=4).map(|n| CheckTarget::Power { a: a.clone(), n }));
        for n in 1..=3 {
            let lower = random_sparse_poly(&mut rng, n - 1);
            let mut c: Vec<Rational> = (0..n).map(|j| lower.coeff(j)).collect();
            c.push(nonzero_coeff(&mut rng));
            targets.push(CheckTarget::Harmonic { c });
        }
        for target in &targets {
            let report = cross_check(target, &phi, &psi, s_max, k_max);
            ok &= report.clean();
            let mut entry = json!({
                "instance": instance,
                "identity": report.identity,
                "phi": phi.to_string(),
                "psi": psi.to_string(),
                "checked": report.checked,
                "printedMismatches": report.discrepancies.len(),
                "unattributed": report.unattributed().count(),
                "correctedMismatches": report.corrected_mismatches,
            });
            if details {
                entry["discrepancies"] = report.to_json()["discrepancies"].clone();
            }
            entries.push(entry);
        }
    }
    Outcome::json(
        json!({"seed": seed, "instances": instances, "sMax": s_max, "kMax": k_max, "reports": entries, "passed": ok}),
        ok,
    )
}

fn verify_remark(variant: RemarkVariant, phi: &Poly, psi: &Poly) -> Outcome {
    let report = remark_counterexample(variant, phi, psi);
    let ok = match variant {
        RemarkVariant::Zbar2 => report.claim_reproduced || *phi != Poly::z_pow(1) || *psi != Poly::z_pow(1),
        RemarkVariant::Zbar3 => true,
    };
    let mut value = report.to_json();
    value["passed"] = json!(ok);
    Outcome::json(value, ok)
}

fn verify_systems(t_max: i64, n_max: i64) -> Outcome {
    let systems: Vec<Value> = SystemKind::ALL
        .par_iter()
        .map(|&kind| {
            let singular: Vec<Value> = (1..=n_max)
                .flat_map(|n| (0..=t_max).map(move |t| check_system(kind, t, n)))
                .filter(|r| !r.invertible())
                .map(|r| r.to_json())
                .collect();
            json!({
                "system": kind.name(),
                "checked": (t_max + 1) * n_max,
                "singular": singular,
                "example": check_system(kind, 0, 1).to_json(),
            })
        })
        .collect();
    let ok = systems.iter().all(|s| s["singular"].as_array().is_some_and(Vec::is_empty));
    Outcome::json(json!({"tMax": t_max, "nMax": n_max, "systems": systems, "passed": ok}), ok)
}

fn verify_rank(n_max: usize) -> Outcome {
    let reports: Vec<_> = (1..=n_max).into_par_iter().map(hilbert_rank_argument).collect();
    let ok = reports.iter().all(|r| {
        r.factorization_holds && r.closed_form_holds && r.rank_b == r.n && r.rank_ab == r.n && r.rank_coefficients == r.n
    });
    let reports: Vec<Value> = reports.iter().map(|r| r.to_json()).collect();
    Outcome::json(json!({"nMax": n_max, "reports": reports, "passed": ok}), ok)
}

pub fn write_output(cli: &Cli, outcome: &Outcome) -> anyhow::Result<()> {
    let text = outcome.render();
    match &cli.out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
