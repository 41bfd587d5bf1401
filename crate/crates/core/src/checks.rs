//! Self-verification suites. Each suite returns the first counterexample
//! it finds, formatted for a human.

use std::collections::HashMap;
use std::time::Instant;

use crate::classes::{chext_factor, euler_operator, f_coefficients, hadamard_apply, todd_factor, RootForm};
use crate::fibrations::{
    closed_form_q, derived_q, first_mismatch, p_polynomial, pushforward_class, table_p, Family,
    FibrationSpec,
};
use crate::genseries::{alternating_class, chi_all, chi_series, euler_series_e8, BaseSpec};
use crate::pushforward::{d5_bundle, derivative_pushforward_d5, pushforward};
use crate::rational::{is_integer, rat, Rational};
use crate::series::{Var, WSeries};

#[derive(Clone, Debug)]
pub struct SuiteResult {
    pub name: &'static str,
    pub outcome: Result<String, String>,
    pub millis: u128,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.outcome.is_ok()
    }
}

fn timed(name: &'static str, f: impl FnOnce() -> Result<String, String>) -> SuiteResult {
    let start = Instant::now();
    let outcome = f();
    SuiteResult {
        name,
        outcome,
        millis: start.elapsed().as_millis(),
    }
}

fn count_families(n: usize) -> String {
    match n {
        1 => "1 family".into(),
        n => format!("{n} families"),
    }
}

/// Sample bases `P^d` with `L = O(n)` for `n` in `{1, 2, d+1}`.
pub fn sample_bases(dmax: u32) -> Vec<(u32, i64, BaseSpec)> {
    let mut out = Vec::new();
    for d in 1..=dmax {
        let mut ns = vec![1, 2, d as i64 + 1];
        ns.dedup();
        for n in ns {
            out.push((d, n, BaseSpec::projective_space(d, n)));
        }
    }
    out
}

pub fn derived_vs_closed(specs: &[FibrationSpec], wmax: u32, qmax: u32) -> Result<String, String> {
    let mut checked = 0;
    for spec in specs {
        let Some(family) = spec.closed_q else { continue };
        let derived = derived_q(spec, wmax, qmax).map_err(|e| format!("{}: {e}", spec.name))?;
        let closed = closed_form_q(family, wmax, qmax).map_err(|e| e.to_string())?;
        if let Some((w, q, m, a, b)) = first_mismatch(&derived, &closed) {
            return Err(format!(
                "{}: first mismatch at weight {w}, y^{q}, monomial {m}: derived {a}, closed form {b}",
                spec.name
            ));
        }
        checked += 1;
    }
    Ok(format!("{} at (wmax {wmax}, qmax {qmax})", count_families(checked)))
}

pub fn p_table(families: &[Family], nmax: u32) -> Result<String, String> {
    for &f in families {
        for n in 0..=nmax {
            let p = p_polynomial(f, n);
            let t = table_p(f, n);
            if p != t {
                return Err(format!(
                    "{f} P{n}: from Q {} vs table {}",
                    p.display_in("U"),
                    t.display_in("U")
                ));
            }
        }
    }
    Ok(format!("P0..P{nmax} for {}", count_families(families.len())))
}

/// D5 extra root `(n-2)/(n+1)` by exact division.
pub fn d5_anomalous_root(nmax: u32) -> Result<String, String> {
    for n in 2..=nmax {
        let p = p_polynomial(Family::D5, n);
        let factor = crate::poly::UniPoly::from_coeffs(vec![rat(2 - n as i64), rat(n as i64 + 1)]);
        if p.div_exact(&factor).is_none() {
            return Err(format!("D5 P{n} is not divisible by {}", factor.display_in("U")));
        }
    }
    Ok(format!("n = 2..{nmax}"))
}

pub fn d5_derivative_oracle(wmax: u32, qmax: u32) -> Result<String, String> {
    let d = crate::fibrations::build_d(&Family::D5.spec(), wmax + 3, qmax).map_err(|e| e.to_string())?;
    let a = derivative_pushforward_d5(&d, &d5_bundle()).map_err(|e| e.to_string())?;
    let b = pushforward(&d, &d5_bundle()).map_err(|e| e.to_string())?;
    match first_mismatch(&a, &b) {
        None => Ok(format!("D_D5 at weight {wmax}")),
        Some((w, q, m, x, y)) => Err(format!(
            "weight {w}, y^{q}, {m}: derivative {x}, Segre {y}"
        )),
    }
}

/// `f(λ t) - a0 = log(g(λ t)/(1+y))` for a single root.
pub fn root_log(lam: i64, order: u32, qmax: u32) -> WSeries {
    let one_plus_y_inv = (&WSeries::one(order, qmax) + &WSeries::y(order, qmax))
        .inverse()
        .expect("unit");
    let r = RootForm::new(0, lam);
    let g = &chext_factor(r, -1, order, qmax) * &todd_factor(r, order, qmax);
    (&g * &one_plus_y_inv).log().expect("weight-0 part is 1")
}

/// `-tC'/C` with `C = Π (1 - λi t)` and `t` carried by `L`.
pub fn log_derivative(roots: &[i64], order: u32, qmax: u32) -> WSeries {
    let l = WSeries::var(Var::L, order, qmax);
    let one = WSeries::one(order, qmax);
    let c = roots
        .iter()
        .fold(one.clone(), |acc, &lam| &acc * &(&one - &l.scale(&rat(lam))));
    &euler_operator(&c).neg() * &c.inverse().expect("unit")
}

/// `Σ f(λi t) - d·a0 = f ⊙ (-tC'/C)` for all integer tuples with
/// `|λi| <= bound` and `1 <= d <= dmax`.
pub fn power_sum_suite(bound: i64, dmax: usize, order: u32, qmax: u32) -> Result<String, String> {
    let values: Vec<i64> = (-bound..=bound).collect();
    let logs: HashMap<i64, WSeries> = values
        .iter()
        .map(|&v| (v, root_log(v, order, qmax)))
        .collect();
    let f = f_coefficients(order.max(1));
    let mut tuples: Vec<Vec<i64>> = vec![vec![]];
    let mut count = 0;
    for _ in 0..dmax {
        tuples = tuples
            .iter()
            .flat_map(|t| {
                values.iter().map(move |&v| {
                    let mut t = t.clone();
                    t.push(v);
                    t
                })
            })
            .collect();
        for t in &tuples {
            let lhs = t
                .iter()
                .fold(WSeries::zero(order, qmax), |acc, v| &acc + &logs[v]);
            let rhs = hadamard_apply(&f, &log_derivative(t, order, qmax), false)
                .map_err(|e| e.to_string())?;
            if let Some((w, q, m, a, b)) = first_mismatch(&lhs, &rhs) {
                return Err(format!(
                    "roots {t:?}: t^{w} y^{q} ({m}): sum of logs {a}, Hadamard {b}"
                ));
            }
            count += 1;
        }
    }
    Ok(format!("{count} tuples, order {order}"))
}

pub fn euler_cross_check(dmax: u32) -> Result<String, String> {
    let spec = Family::E8.spec();
    for d in 1..=dmax {
        let alt = alternating_class(&spec, d).map_err(|e| e.to_string())?;
        let euler = euler_series_e8(d).weight_part(d);
        if let Some((w, q, m, a, b)) = first_mismatch(&alt, &euler) {
            return Err(format!("d = {d}: weight {w} y^{q} {m}: chi_y(-1) {a}, Euler {b}"));
        }
    }
    Ok(format!("E8, d = 1..{dmax}"))
}

/// `(spec name, base dimension, n in L = O(n), chi_0..chi_top)`.
type SampleRow = (String, u32, i64, Vec<Rational>);

fn chis_over_samples(
    specs: &[FibrationSpec],
    dmax: u32,
) -> Result<Vec<SampleRow>, String> {
    let mut out = Vec::new();
    for spec in specs {
        for (d, n, base) in sample_bases(dmax) {
            let chis = chi_all(spec, &base).map_err(|e| format!("{}: {e}", spec.name))?;
            out.push((spec.name.clone(), d, n, chis));
        }
    }
    Ok(out)
}

pub fn serre_duality(specs: &[FibrationSpec], dmax: u32) -> Result<String, String> {
    let rows = chis_over_samples(specs, dmax)?;
    for (name, d, n, chis) in &rows {
        let top = chis.len() - 1;
        let sign = if top % 2 == 0 { rat(1) } else { rat(-1) };
        for q in 0..=top {
            if chis[q] != &sign * &chis[top - q] {
                return Err(format!(
                    "{name} over P{d}, L = O({n}): chi_{q} = {}, chi_{} = {}",
                    chis[q],
                    top - q,
                    chis[top - q]
                ));
            }
        }
    }
    Ok(format!("{} (family, base) pairs", rows.len()))
}

pub fn integrality(specs: &[FibrationSpec], dmax: u32) -> Result<String, String> {
    let rows = chis_over_samples(specs, dmax)?;
    for (name, d, n, chis) in &rows {
        if let Some((q, c)) = chis.iter().enumerate().find(|(_, c)| !is_integer(c)) {
            return Err(format!("{name} over P{d}, L = O({n}): chi_{q} = {c}"));
        }
    }
    Ok(format!("{} (family, base) pairs", rows.len()))
}

pub fn route_consistency(specs: &[FibrationSpec], dmax: u32) -> Result<String, String> {
    let mut count = 0;
    for spec in specs {
        for d in 0..=dmax {
            let top = d + spec.fiber_dim().max(0) as u32;
            let series = chi_series(spec, d, top).map_err(|e| e.to_string())?;
            for q in 0..=top {
                let series_route = series
                    .coeff(d, q)
                    .and_then(|c| c.truncate(d, 0))
                    .map_err(|e| e.to_string())?;
                let psum_route = pushforward_class(spec, q, d)
                    .map_err(|e| e.to_string())?
                    .weight_part(d);
                if let Some((w, _, m, a, b)) = first_mismatch(&series_route, &psum_route) {
                    return Err(format!(
                        "{} d = {d} q = {q}: weight {w} {m}: generating series {a}, P-sum {b}",
                        spec.name
                    ));
                }
                count += 1;
            }
        }
    }
    Ok(format!("{count} (family, d, q) classes"))
}

/// `P0 = 1 - U` and `Q(U = 1) = 0`, checked on the derived `Q`.
pub fn class_level_structure(specs: &[FibrationSpec], wmax: u32, qmax: u32) -> Result<String, String> {
    let u = WSeries::var(Var::L, wmax, 0).neg().exp().expect("weight 1");
    let one_minus_u = &WSeries::one(wmax, 0) - &u;
    for spec in specs {
        let q = derived_q(spec, wmax, qmax).map_err(|e| e.to_string())?;
        let p0 = q.y_coeff(0).truncate(wmax, 0).map_err(|e| e.to_string())?;
        if p0 != one_minus_u {
            return Err(format!("{}: P0 = {p0}, expected 1 - U", spec.name));
        }
        if !q.weight0_ypoly().is_zero() {
            return Err(format!(
                "{}: Q(U=1) = {} is not zero",
                spec.name,
                q.weight0_ypoly().display_in("y")
            ));
        }
    }
    Ok(format!("{} specs", specs.len()))
}

/// Runs the eight verification suites for `specs`.
pub fn run_all(specs: &[FibrationSpec], wmax: u32, qmax: u32) -> Vec<SuiteResult> {
    let families: Vec<Family> = specs.iter().filter_map(|s| s.closed_q).collect();
    let has_d5 = specs
        .iter()
        .any(|s| s.closed_q == Some(Family::D5) || s.bundle == d5_bundle());
    let has_e8 = families.contains(&Family::E8);
    let dmax = wmax.min(4);
    let sample_dmax = wmax.min(3);
    let mut out = vec![
        timed("derived Q = closed-form Q", || derived_vs_closed(specs, wmax, qmax)),
        timed("P-table", || p_table(&families, qmax.min(6))),
    ];
    out.push(timed("D5 derivative oracle", || {
        if has_d5 {
            d5_derivative_oracle(wmax, qmax)
        } else {
            Ok("skipped (no D5 bundle)".into())
        }
    }));
    out.push(timed("Hadamard/power-sum identity", || {
        power_sum_suite(3, 4, wmax.min(6), qmax.min(6))
    }));
    out.push(timed("E8 Euler cross-check", || {
        if has_e8 {
            euler_cross_check(dmax)
        } else {
            Ok("skipped (E8 not selected)".into())
        }
    }));
    out.push(timed("Serre duality", || serre_duality(specs, sample_dmax)));
    out.push(timed("integrality", || integrality(specs, sample_dmax)));
    out.push(timed("route consistency", || route_consistency(specs, dmax)));
    out
}
