//! Acceptance run: one PASS/FAIL line per criterion, exact equality
//! throughout. Exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use hirzebruch::checks;
use hirzebruch::fibrations::{
    build_d, closed_form_q, derived_q, first_mismatch, p_polynomial, Family, FibrationSpec,
};
use hirzebruch::genseries::{
    alternating_class, chi_all, chi_class, integrate, BaseSpec,
};
use hirzebruch::pushforward::{d5_bundle, derivative_pushforward_d5, pushforward};
use hirzebruch::rational::{is_integer, rat, ratio, Rational};
use hirzebruch::{Monomial, UniPoly, Var, WSeries};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, fn() -> Outcome);

fn mono(pairs: &[(Var, u32)]) -> Monomial {
    Monomial::from_pairs(pairs.iter().copied())
}

fn mismatch_text(a: &WSeries, b: &WSeries) -> Option<String> {
    first_mismatch(a, b).map(|(w, q, m, x, y)| format!("weight {w}, y^{q}, {m}: {x} vs {y}"))
}

fn q_reproduction() -> Outcome {
    let start = Instant::now();
    for f in Family::ALL {
        let derived = derived_q(&f.spec(), 6, 7).map_err(|e| e.to_string())?;
        let closed = closed_form_q(f, 6, 7).map_err(|e| e.to_string())?;
        if let Some(m) = mismatch_text(&derived, &closed) {
            return Err(format!("{f}: {m}"));
        }
    }
    let secs = start.elapsed().as_secs_f64();
    if secs > 60.0 {
        return Err(format!("exact, but took {secs:.1}s"));
    }
    Ok(format!("4 families at wmax 6, qmax 7 in {secs:.2}s"))
}

fn p_table() -> Outcome {
    let table = checks::p_table(&Family::ALL, 6)?;
    let root = checks::d5_anomalous_root(6)?;
    Ok(format!("{table}; D5 factor (n+1)U-(n-2) for {root}"))
}

fn e6_coefficient() -> Outcome {
    let (l, c1, c2, c3) = (Var::L, Var::C(1), Var::C(2), Var::C(3));
    let inner: [(Monomial, i64); 7] = [
        (mono(&[(l, 4)]), 1729),
        (mono(&[(l, 3), (c1, 1)]), -524),
        (mono(&[(l, 2), (c1, 2)]), -17),
        (mono(&[(l, 2), (c2, 1)]), 193),
        (mono(&[(l, 1), (c1, 1), (c2, 1)]), 5),
        (mono(&[(l, 1), (c3, 1)]), -66),
        (Monomial::one(), 0),
    ];
    let expected = WSeries::from_terms(
        inner.into_iter().map(|(m, c)| (m, 0, ratio(-c, 12))),
        4,
        0,
    );
    let got = chi_class(&Family::E6.spec(), 4, 2).map_err(|e| e.to_string())?;
    match mismatch_text(&got, &expected) {
        None => Ok(format!("[t^4 y^2] = {got}")),
        Some(m) => Err(m),
    }
}

fn euler_cross_check() -> Outcome {
    let detail = checks::euler_cross_check(4)?;
    let e8 = Family::E8.spec();
    let (l, c1, c2) = (Var::L, Var::C(1), Var::C(2));
    let d3 = WSeries::from_terms(
        [
            (mono(&[(l, 1), (c2, 1)]), 0, rat(12)),
            (mono(&[(l, 2), (c1, 1)]), 0, rat(-72)),
            (mono(&[(l, 3)]), 0, rat(432)),
        ],
        3,
        0,
    );
    let alt3 = alternating_class(&e8, 3).map_err(|e| e.to_string())?;
    if let Some(m) = mismatch_text(&alt3, &d3) {
        return Err(format!("d = 3 against 12L(c2 - 6Lc1 + 36L^2): {m}"));
    }
    let p2 = BaseSpec::projective_space(2, 3);
    let alt2 = alternating_class(&e8, 2).map_err(|e| e.to_string())?;
    let value = integrate(&alt2, &p2).map_err(|e| e.to_string())?;
    if value != rat(-540) {
        return Err(format!("E8 over P2 with L = O(3): {value}, expected -540"));
    }
    Ok(format!("{detail}; d = 3 closed form; P2 value -540"))
}

fn route_consistency() -> Outcome {
    let specs: Vec<FibrationSpec> = Family::ALL.iter().map(|f| f.spec()).collect();
    checks::route_consistency(&specs, 4)
}

fn random_h_series(rng: &mut StdRng, wmax: u32, qmax: u32) -> WSeries {
    let n = rng.gen_range(1..=24);
    let terms = (0..n).map(|_| {
        let h = rng.gen_range(0..=wmax);
        let l = rng.gen_range(0..=wmax - h);
        let c1 = rng.gen_range(0..=(wmax - h - l).min(2));
        let m = mono(&[(Var::H, h), (Var::L, l), (Var::C(1), c1)]);
        let c = ratio(rng.gen_range(-30..=30), rng.gen_range(1..=7));
        (m, rng.gen_range(0..=qmax), c)
    });
    WSeries::from_terms(terms, wmax, qmax)
}

fn oracle_equivalence() -> Outcome {
    let b = d5_bundle();
    let d = build_d(&Family::D5.spec(), 9, 7).map_err(|e| e.to_string())?;
    let a = derivative_pushforward_d5(&d, &b).map_err(|e| e.to_string())?;
    let s = pushforward(&d, &b).map_err(|e| e.to_string())?;
    if let Some(m) = mismatch_text(&a, &s) {
        return Err(format!("D_D5: {m}"));
    }
    let mut rng = StdRng::seed_from_u64(0x005e_edd5);
    for i in 0..50 {
        let d = random_h_series(&mut rng, 9, 3);
        let a = derivative_pushforward_d5(&d, &b).map_err(|e| e.to_string())?;
        let s = pushforward(&d, &b).map_err(|e| e.to_string())?;
        if let Some(m) = mismatch_text(&a, &s) {
            return Err(format!("random series #{i}: {m}"));
        }
    }
    Ok("D_D5 and 50 random series, weight 6".into())
}

fn power_sum_suite() -> Outcome {
    checks::power_sum_suite(3, 4, 6, 6)
}

struct Clause {
    name: &'static str,
    failures: Vec<String>,
}

impl Clause {
    fn new(name: &'static str) -> Self {
        Self { name, failures: Vec::new() }
    }
}

fn structural() -> (Outcome, Vec<Clause>) {
    let mut integral = Clause::new("chi_q integral");
    let mut serre = Clause::new("chi_q = (-1)^(d+1) chi_(d+1-q)");
    let mut cy = Clause::new("chi_0 = 0 for anticanonical L");
    let mut class = Clause::new("P0 = 1 - U and Q(U=1) = 0");
    let mut pairs = 0;
    for f in Family::ALL {
        let spec = f.spec();
        for (d, n, base) in checks::sample_bases(3) {
            let chis = match chi_all(&spec, &base) {
                Ok(c) => c,
                Err(e) => return (Err(format!("{f} over P{d}: {e}")), vec![]),
            };
            pairs += 1;
            let at = format!("{f} over P{d}, L = O({n})");
            if let Some((q, c)) = chis.iter().enumerate().find(|(_, c)| !is_integer(c)) {
                integral.failures.push(format!("{at}: chi_{q} = {c}"));
            }
            let top = chis.len() - 1;
            let sign: Rational = if top % 2 == 0 { rat(1) } else { rat(-1) };
            if let Some(q) = (0..=top).find(|&q| chis[q] != &sign * &chis[top - q]) {
                serre.failures.push(format!("{at}: chi_{q} = {}, chi_{} = {}", chis[q], top - q, chis[top - q]));
            }
            if n == d as i64 + 1 && chis[0] != rat(0) {
                cy.failures.push(format!("{at}: chi_0 = {}", chis[0]));
            }
        }
        let one_minus_u = UniPoly::from_ints(&[1, -1]);
        if p_polynomial(f, 0) != one_minus_u {
            class.failures.push(format!("{f}: P0 = {}", p_polynomial(f, 0).display_in("U")));
        }
        if let Some(k) = (0..=7).find(|&k| !p_polynomial(f, k).eval(&rat(1)).eq(&rat(0))) {
            class.failures.push(format!("{f}: P{k}(1) != 0"));
        }
    }
    let specs: Vec<FibrationSpec> = Family::ALL.iter().map(|f| f.spec()).collect();
    if let Err(e) = checks::class_level_structure(&specs, 6, 7) {
        class.failures.push(e);
    }
    let clauses = vec![integral, serre, cy, class];
    let failed: Vec<&str> = clauses
        .iter()
        .filter(|c| !c.failures.is_empty())
        .map(|c| c.name)
        .collect();
    let outcome = if failed.is_empty() {
        Ok(format!("{pairs} (family, base) pairs"))
    } else {
        Err(format!("failing clauses: {}", failed.join("; ")))
    };
    (outcome, clauses)
}

fn line(id: u32, title: &str, outcome: &Outcome, start: Instant) -> bool {
    let secs = start.elapsed().as_secs_f64();
    match outcome {
        Ok(detail) => {
            println!("PASS  {id}. {title} ({detail}) [{secs:.1}s]");
            true
        }
        Err(detail) => {
            println!("FAIL  {id}. {title}: {detail} [{secs:.1}s]");
            false
        }
    }
}

fn main() -> ExitCode {
    let runs: [Criterion; 7] = [
        (1, "derived Q equals closed-form Q", q_reproduction),
        (2, "P-table", p_table),
        (3, "E6 coefficient of t^4 y^2", e6_coefficient),
        (4, "E8 Euler cross-check", euler_cross_check),
        (5, "route consistency", route_consistency),
        (6, "D5 derivative oracle", oracle_equivalence),
        (7, "Hadamard power-sum identity", power_sum_suite),
    ];
    let mut ok = true;
    for (id, title, run) in runs {
        let start = Instant::now();
        ok &= line(id, title, &run(), start);
    }
    let start = Instant::now();
    let (outcome, clauses) = structural();
    ok &= line(8, "structural properties over P1, P2, P3", &outcome, start);
    for c in &clauses {
        if c.failures.is_empty() {
            println!("        ok    {}", c.name);
        } else {
            println!("        fail  {} ({} cases)", c.name, c.failures.len());
            for f in &c.failures {
                println!("              {f}");
            }
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
