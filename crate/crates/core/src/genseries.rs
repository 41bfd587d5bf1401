//! The generating series `χ(t, y)` and numeric `χ_q` over concrete bases.
//!
//! `χ(t, y) = Q_t(t(1+y)) · exp(f ⊙ (-tC'/C))|_{t -> t(1+y)}`, where the
//! t-degree is the weight. The coefficient of `t^d y^q` integrated over a
//! `d`-dimensional base is `χ_q` of the fibration.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::classes::{f_coefficients, hadamard_apply, power_sums_from_chern};
use crate::error::{Error, Result};
use crate::fibrations::{pushforward_class, q_series, FibrationSpec};
use crate::rational::{binomial, is_integer, rat, Rational};
use crate::series::{Monomial, Var, WSeries};

/// A base variety: its dimension and, in table mode, the intersection
/// numbers of every weight-`dim` monomial in `L, c1..c_dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseSpec {
    pub dim: u32,
    /// `None` is symbolic mode: classes only, no numbers.
    pub table: Option<BTreeMap<Monomial, Rational>>,
}

/// All monomials of weight exactly `w` in `L, c1..c_maxc`.
pub fn monomials_of_weight(w: u32, maxc: u32) -> Vec<Monomial> {
    fn go(w: u32, var: u32, maxc: u32, cur: Monomial, out: &mut Vec<Monomial>) {
        // var 0 is L, var i >= 1 is c_i
        if var > maxc {
            if w == 0 {
                out.push(cur);
            }
            return;
        }
        let (v, vw) = if var == 0 { (Var::L, 1) } else { (Var::C(var), var) };
        let mut e = 0;
        while e * vw <= w {
            go(w - e * vw, var + 1, maxc, cur.with_exp(v, e), out);
            e += 1;
        }
    }
    let mut out = Vec::new();
    go(w, 0, maxc, Monomial::one(), &mut out);
    out
}

impl BaseSpec {
    pub fn symbolic(dim: u32) -> Self {
        Self { dim, table: None }
    }

    /// A base whose classes are multiples of powers of one class `h` with
    /// `∫ h^d = 1`: `ci = chern[i-1]·h^i` and `L = l·h`.
    pub fn from_hyperplane_model(dim: u32, chern: &[Rational], l: &Rational) -> Result<Self> {
        if chern.len() < dim as usize {
            return Err(Error::InvalidBase(format!(
                "need {dim} Chern numbers, got {}",
                chern.len()
            )));
        }
        let table = monomials_of_weight(dim, dim)
            .into_iter()
            .map(|m| {
                let mut v = Rational::one();
                for (var, e) in m.iter() {
                    let base = match var {
                        Var::L => l.clone(),
                        Var::C(i) => chern[i as usize - 1].clone(),
                        Var::H => unreachable!("H is not a base class"),
                    };
                    v *= num_traits::pow(base, e as usize);
                }
                (m, v)
            })
            .collect();
        Ok(Self {
            dim,
            table: Some(table),
        })
    }

    /// `P^d` with `L = O(n)`: `ci = C(d+1, i) h^i`, `L = n h`.
    pub fn projective_space(dim: u32, n: i64) -> Self {
        let chern: Vec<Rational> = (1..=dim).map(|i| binomial(dim as u64 + 1, i as u64)).collect();
        Self::from_hyperplane_model(dim, &chern, &rat(n)).expect("enough Chern numbers")
    }

    /// Builds a table-mode base, rejecting entries of the wrong weight.
    pub fn from_table(dim: u32, entries: impl IntoIterator<Item = (Monomial, Rational)>) -> Result<Self> {
        let mut table = BTreeMap::new();
        for (m, v) in entries {
            if m.weight() != dim || m.exp(Var::H) > 0 {
                return Err(Error::InvalidBase(format!(
                    "monomial {m} is not a weight-{dim} class in L, c1..c{dim}"
                )));
            }
            table.insert(m, v);
        }
        Ok(Self {
            dim,
            table: Some(table),
        })
    }
}

/// `χ(t, y)` to weight `tmax` and y-degree `qmax`.
pub fn chi_series(spec: &FibrationSpec, tmax: u32, qmax: u32) -> Result<WSeries> {
    let q = q_series(spec, tmax, qmax)?;
    Ok(&q.reweight_by_one_plus_y() * &base_exponential(tmax, qmax)?)
}

/// `exp(f ⊙ (-tC'/C))` after `t -> t(1+y)`.
fn base_exponential(tmax: u32, qmax: u32) -> Result<WSeries> {
    let sums = power_sums_from_chern(tmax, qmax)
        .into_iter()
        .fold(WSeries::zero(tmax, qmax), |acc, p| &acc + &p);
    hadamard_apply(&f_coefficients(tmax.max(1)), &sums, true)?.exp()
}

/// `∫_B cls` for a y-free class of weight `base.dim`.
pub fn integrate(cls: &WSeries, base: &BaseSpec) -> Result<Rational> {
    let table = base
        .table
        .as_ref()
        .ok_or_else(|| Error::InvalidBase("symbolic base has no intersection numbers".into()))?;
    let mut total = Rational::zero();
    for (m, q, c) in cls.terms() {
        if q != 0 || m.weight() != base.dim {
            return Err(Error::NonHomogeneous { expected: base.dim });
        }
        let v = table
            .get(m)
            .ok_or_else(|| Error::MissingIntersectionNumber(m.to_string()))?;
        total += c * v;
    }
    Ok(total)
}

fn dim_total(spec: &FibrationSpec, d: u32) -> u32 {
    d + spec.fiber_dim().max(0) as u32
}

/// The class integrated to `χ_q` over a `d`-dimensional base (y-free, qmax 0).
pub fn chi_class(spec: &FibrationSpec, d: u32, q: u32) -> Result<WSeries> {
    let max = dim_total(spec, d);
    if q > max {
        return Err(Error::DegreeOutOfRange { q, max });
    }
    chi_series(spec, d, q)?.coeff(d, q)?.truncate(d, 0)
}

/// `χ_q` over `base`. With `verify`, the value is recomputed through
/// `Σ P_{q-i} H_i(B)` and required to agree and be an integer.
pub fn chi_q(spec: &FibrationSpec, base: &BaseSpec, q: u32, verify: bool) -> Result<Rational> {
    let value = integrate(&chi_class(spec, base.dim, q)?, base)?;
    if verify {
        let psum_route = pushforward_class(spec, q, base.dim)?.weight_part(base.dim);
        let other = integrate(&psum_route, base)?;
        if other != value {
            return Err(Error::RouteMismatch {
                q,
                series_route: value.to_string(),
                psum_route: other.to_string(),
            });
        }
        if !is_integer(&value) {
            return Err(Error::NonIntegral {
                q,
                value: value.to_string(),
            });
        }
    }
    Ok(value)
}

/// `χ_0 .. χ_{dim Y}` from a single expansion of `χ(t, y)`.
pub fn chi_all(spec: &FibrationSpec, base: &BaseSpec) -> Result<Vec<Rational>> {
    let d = base.dim;
    let max = dim_total(spec, d);
    let series = chi_series(spec, d, max)?;
    (0..=max)
        .map(|q| integrate(&series.coeff(d, q)?.truncate(d, 0)?, base))
        .collect()
}

/// `12L/(1+6L) · (1 + c1 + c2 + ... + c_dmax)`, weight-graded.
pub fn euler_series_e8(dmax: u32) -> WSeries {
    let l = WSeries::var(Var::L, dmax, 0);
    let one = WSeries::one(dmax, 0);
    let frac = &l.scale(&rat(12)) * &(&one + &l.scale(&rat(6))).inverse().expect("unit");
    let total_chern = (1..=dmax).fold(one, |acc, i| &acc + &WSeries::var(Var::C(i), dmax, 0));
    &frac * &total_chern
}

/// `Σ_q (-1)^q [t^d y^q] χ(t, y)`, y-free.
pub fn alternating_class(spec: &FibrationSpec, d: u32) -> Result<WSeries> {
    let max = dim_total(spec, d);
    let series = chi_series(spec, d, max)?;
    let mut out = WSeries::zero(d, 0);
    for q in 0..=max {
        let c = series.coeff(d, q)?.truncate(d, 0)?;
        out = &out + &c.scale(&rat(if q % 2 == 0 { 1 } else { -1 }));
    }
    Ok(out)
}
