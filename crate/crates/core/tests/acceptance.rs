//! Acceptance gate. Each criterion prints one PASS/FAIL line; the run fails
//! if the set of failing criteria differs from [`KNOWN_FAILURES`].

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;
use serde_json::json;

use slant_lab::commutator::{commutator_column, scan_commutator, theorem_verdict, Verdict};
use slant_lab::identity::{check_system, cross_check, hilbert_rank_argument, CheckTarget, SystemKind};
use slant_lab::matrix::build_matrix;
use slant_lab::random::{
    distinct_pair, nonzero_coeff, nonzero_rational, random_coanalytic, random_poly,
    random_sparse_poly, random_symbol, rng_from_seed, SuiteRng,
};
use slant_lab::remark::{remark_counterexample, RemarkVariant};
use slant_lab::{
    apply_expr, rat, slant_adjoint_apply, slant_apply, toeplitz_apply, Expr, Poly, Primitive,
    Rational, Symbol,
};

/// Criteria whose printed claim does not hold. The printed second odd-power
/// system has two equal columns at `t = 0`, so its determinant vanishes
/// there for every `N`.
const KNOWN_FAILURES: &[u32] = &[9];

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, fn() -> Outcome);

fn z_pow(n: usize) -> Poly {
    Poly::z_pow(n)
}

fn lemma_2_1() -> Outcome {
    let word = Expr::identity().then_slant_adjoint().then_slant();
    for n in 0..=200usize {
        let even = apply_expr(&word, &z_pow(2 * n));
        let want = Poly::monomial(2 * n, rat(2 * n as i64 + 1, n as i64 + 1));
        if even != want {
            return Err(format!("z^{}: got {even}, want {want}", 2 * n));
        }
        let odd = apply_expr(&word, &z_pow(2 * n + 1));
        if !odd.is_zero() {
            return Err(format!("z^{}: got {odd}, want 0", 2 * n + 1));
        }
    }
    Ok("W*W exact on z^0..z^401".into())
}

fn lemma_2_2() -> Outcome {
    let mut rng = rng_from_seed(22);
    for i in 0..500 {
        let p = random_poly(&mut rng, 100);
        let norm = p.bergman_norm_squared();
        let lifted = slant_adjoint_apply(&p).bergman_norm_squared();
        if !(norm <= lifted && lifted <= rat(2, 1) * &norm) {
            return Err(format!("sample {i}: |f|^2 = {norm}, |W*f|^2 = {lifted}"));
        }
    }
    let ratio = |n: i64| rat(2 * n + 1, n + 1);
    if ratio(0) != Rational::one() {
        return Err("ratio at n = 0 is not 1".into());
    }
    for n in 0..1000 {
        if !(ratio(n) < ratio(n + 1) && ratio(n + 1) < rat(2, 1)) {
            return Err(format!("ratio not increasing below 2 at n = {n}"));
        }
    }
    Ok("500 samples within [1, 2]; ratio increasing from 1 toward 2".into())
}

fn lemma_2_3() -> Outcome {
    let mut rng = rng_from_seed(23);
    for i in 0..500 {
        let phi = random_poly(&mut rng, 8);
        let f = random_poly(&mut rng, 50);
        let left = toeplitz_apply(&Symbol::analytic(phi.clone()), &slant_apply(&f));
        let right = slant_apply(&toeplitz_apply(&Symbol::analytic(phi.substitute_z_squared()), &f));
        if left != right {
            return Err(format!("pair {i}: phi = {phi}"));
        }
    }
    Ok("500 pairs exact".into())
}

fn remark_zbar2() -> Outcome {
    let z = z_pow(1);
    let report = remark_counterexample(RemarkVariant::Zbar2, &z, &z);
    let row = report.focus().ok_or("no row at index 2")?;
    if row.lhs_const != Rational::zero() || row.rhs_const != rat(3, 10) {
        return Err(format!("constants {} vs {}", row.lhs_const, row.rhs_const));
    }
    let f = Symbol::new(z.clone(), z_pow(2));
    let g = Symbol::new(z.clone(), z_pow(1));
    let entry = commutator_column(&f, &g, 4).coeff(0);
    if entry != rat(-3, 10) {
        return Err(format!("commutator entry at (4, 0) is {entry}"));
    }
    Ok(format!(
        "input z^{}: lhs {} rhs {}; [B_f, B_g] z^4 constant {entry}",
        row.input_degree, row.lhs_const, row.rhs_const
    ))
}

fn remark_zbar3() -> Outcome {
    let z = z_pow(1);
    let report = remark_counterexample(RemarkVariant::Zbar3, &z, &z);
    let row = report.first_difference().ok_or("no k <= 10 with unequal constants")?;
    let mut note = format!(
        "index {} (input z^{}): lhs {} rhs {}",
        row.k, row.input_degree, row.lhs_const, row.rhs_const
    );
    if !report.claim_reproduced {
        note.push_str("; printed 5 vs 9 not reproduced (flagged)");
    }
    Ok(note)
}

fn sufficiency() -> Outcome {
    let mut rng = rng_from_seed(31);
    for i in 0..200 {
        let n = rng.gen_range(1..=4);
        let g = Symbol::lemma_shape(nonzero_rational(&mut rng), n, &random_sparse_poly(&mut rng, 5));
        let c = nonzero_rational(&mut rng);
        let f = g.scale(&c);
        let scan = scan_commutator(&f, &g, 40);
        if let Some(w) = scan.first_witness {
            return Err(format!("instance {i}: f = {f}, g = {g}, witness at k = {}", w.k));
        }
    }
    Ok("200 proportional pairs, all columns k <= 40 vanish".into())
}

fn necessity() -> Outcome {
    let mut rng = rng_from_seed(34);
    let mut inconclusive = Vec::new();
    let mut worst_k = 0;
    for i in 0..200 {
        let n = rng.gen_range(1..=3);
        let pbar = Symbol::new(Poly::zero(), random_coanalytic(&mut rng, n));
        let (phi, psi) = distinct_pair(&mut rng, 4);
        let report = theorem_verdict(&pbar, &phi, &psi, None).map_err(|e| e.to_string())?;
        match report.verdict {
            Verdict::NonCommuteWitness(w) => worst_k = worst_k.max(w.k),
            _ => inconclusive.push(i),
        }
    }
    if inconclusive.is_empty() {
        Ok(format!("200 witnesses, latest first witness at k = {worst_k}"))
    } else {
        Err(format!("inconclusive instances {inconclusive:?}"))
    }
}

fn identity_cross_check() -> Outcome {
    let mut rng = rng_from_seed(58);
    let mut log = Vec::new();
    let mut failures = Vec::new();
    let mut checked = 0;
    let mut attributed = 0;
    for instance in 0..50 {
        let phi = random_sparse_poly(&mut rng, 6);
        let psi = random_sparse_poly(&mut rng, 6);
        let a = nonzero_rational(&mut rng);
        let mut targets = vec![CheckTarget::Linear { a: a.clone() }];
        targets.extend((1..=4).map(|n| CheckTarget::Power { a: a.clone(), n }));
        for n in 1..=3 {
            let mut c: Vec<Rational> = (0..n).map(|_| rat(rng.gen_range(-3..=3), 1)).collect();
            c.push(nonzero_coeff(&mut rng));
            targets.push(CheckTarget::Harmonic { c });
        }
        for target in &targets {
            let report = cross_check(target, &phi, &psi, 12, 12);
            checked += report.checked;
            if report.corrected_mismatches > 0 {
                failures.push(format!(
                    "instance {instance} {}: {} corrected mismatches",
                    report.identity, report.corrected_mismatches
                ));
            }
            for d in &report.discrepancies {
                if d.attributable {
                    attributed += 1;
                } else {
                    failures.push(format!(
                        "instance {instance} {} s={} k={} {}: printed {} engine {}",
                        d.identity,
                        d.s,
                        d.k,
                        d.parity.name(),
                        d.printed,
                        d.engine
                    ));
                }
                let mut entry = d.to_json();
                entry["instance"] = json!(instance);
                log.push(entry);
            }
        }
    }
    let path = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("identity_discrepancies.json");
    std::fs::write(&path, serde_json::to_string_pretty(&log).expect("serializable"))
        .map_err(|e| e.to_string())?;
    if let Some(first) = log.first() {
        println!("    first logged discrepancy: {first}");
    }
    if failures.is_empty() {
        Ok(format!(
            "{checked} side comparisons; {attributed} printed mismatches, all attributed to known typos; log at {}",
            path.display()
        ))
    } else {
        Err(format!("{} unexplained: {}", failures.len(), failures[..failures.len().min(5)].join("; ")))
    }
}

fn linear_algebra() -> Outcome {
    let mut singular = Vec::new();
    for kind in SystemKind::ALL {
        for n in 1..=6 {
            for t in 0..=100 {
                let report = check_system(kind, t, n);
                if !report.invertible() {
                    singular.push(format!(
                        "{} t={t} N={n} (re-derived det {})",
                        kind.name(),
                        report.rederived_determinant
                    ));
                }
            }
        }
    }
    let mut rank_issues = Vec::new();
    for n in 1..=8 {
        let r = hilbert_rank_argument(n);
        if !(r.factorization_holds && r.rank_b == n && r.rank_ab == n && r.rank_coefficients == n) {
            rank_issues.push(format!(
                "N={n}: rank B {} rank AB {} rank (closed form) {} factorization {}",
                r.rank_b, r.rank_ab, r.rank_coefficients, r.factorization_holds
            ));
        }
    }
    let mut summary = String::new();
    if !singular.is_empty() {
        let _ = write!(summary, "{} singular printed systems: {}", singular.len(), singular.join(", "));
    }
    if !rank_issues.is_empty() {
        let _ = write!(summary, " rank: {}", rank_issues.join("; "));
    }
    if summary.is_empty() {
        Ok("all determinants nonzero; A·B factorization and ranks hold for N <= 8".into())
    } else {
        Err(summary)
    }
}

fn random_word(rng: &mut SuiteRng) -> Expr {
    let len = rng.gen_range(1..=4);
    Expr::new(
        (0..len)
            .map(|_| match rng.gen_range(0..3) {
                0 => Primitive::Toeplitz(random_symbol(rng, 3, 3)),
                1 => Primitive::Slant,
                _ => Primitive::SlantAdjoint,
            })
            .collect(),
    )
}

fn matrix_coherence() -> Outcome {
    let mut rng = rng_from_seed(10);
    let mut worst = 0.0f64;
    for i in 0..50 {
        let word = random_word(&mut rng);
        let rows = rng.gen_range(0..=64);
        let cols = rng.gen_range(0..=64);
        let m = build_matrix(&word, rows, cols);
        for j in 0..=cols {
            if m.column(j) != apply_expr(&word, &z_pow(j)).truncate(rows) {
                return Err(format!("word {i} ({word}): column {j} differs"));
            }
        }
        let ortho = m.orthonormal();
        for (r, row) in ortho.iter().enumerate() {
            for (c, &x) in row.iter().enumerate() {
                let exact = m.entry(r, c).to_f64().expect("finite");
                let want = exact * ((r + 1) as f64).sqrt() / ((c + 1) as f64).sqrt();
                let err = if want == 0.0 { x.abs() } else { ((x - want) / want).abs() };
                if err > 1e-12 {
                    return Err(format!("word {i}: orthonormal ({r}, {c}) off by {err:e}"));
                }
                worst = worst.max(err);
            }
        }
    }
    Ok(format!("50 words exact; worst orthonormal relative error {worst:e}"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        (1, "W*W on monomials", lemma_2_1),
        (2, "W* norm bounds", lemma_2_2),
        (3, "T_phi W = W T_phi(z^2)", lemma_2_3),
        (4, "zbar^2 counterexample", remark_zbar2),
        (5, "zbar^3 counterexample", remark_zbar3),
        (6, "sufficiency f = c g", sufficiency),
        (7, "necessity witnesses", necessity),
        (8, "identity cross-check", identity_cross_check),
        (9, "2x2 systems and rank argument", linear_algebra),
        (10, "matrix coherence", matrix_coherence),
    ];
    let mut failed = BTreeSet::new();
    for (id, name, run) in criteria {
        let started = std::time::Instant::now();
        let outcome = run();
        let secs = started.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {id:>2} PASS  {name} ({secs:.2}s): {detail}"),
            Err(detail) => {
                println!("criterion {id:>2} FAIL  {name} ({secs:.2}s): {detail}");
                failed.insert(id);
            }
        }
    }
    let expected: BTreeSet<u32> = KNOWN_FAILURES.iter().copied().collect();
    if failed != expected {
        eprintln!("failing criteria {failed:?} differ from the documented set {expected:?}");
        std::process::exit(1);
    }
    println!("acceptance: failures match the documented set {expected:?}");
}
