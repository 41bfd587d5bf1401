//! Pushforward along `π: P(E) -> B` for `E = ⊕ L^{m_j}`.
//!
//! `P(E)` is the bundle of lines and `H = c1(O(1))`. With Segre classes
//! `s(E) = Π (1 + m_j L)^{-1}` the pushforward is `π*(H^{r-1+j}) = s_j`
//! and `π*(H^i) = 0` for `i < r - 1`; everything not involving `H` is
//! pulled back from the base and passes through linearly.

use num_traits::One;

use crate::error::{Error, Result};
use crate::rational::{rat, ratio, Rational};
use crate::series::{Monomial, Var, WSeries};

/// `E = ⊕_j L^{m_j}`, given by the exponents `m_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BundleSpec {
    pub exps: Vec<i64>,
}

impl BundleSpec {
    pub fn new(exps: impl Into<Vec<i64>>) -> Result<Self> {
        let exps = exps.into();
        if exps.is_empty() {
            return Err(Error::InvalidSpec("bundle must have rank >= 1".into()));
        }
        Ok(Self { exps })
    }

    pub fn rank(&self) -> u32 {
        self.exps.len() as u32
    }

    /// Fiber dimension of `P(E)`.
    pub fn fiber_dim(&self) -> u32 {
        self.rank() - 1
    }
}

/// `s_0, ..., s_wmax` with `Σ s_k = Π_j (1 + m_j L)^{-1}` and `s_k` of weight `k`.
pub fn segre_series(bundle: &BundleSpec, wmax: u32, qmax: u32) -> Vec<WSeries> {
    let l = WSeries::var(Var::L, wmax, qmax);
    let total = bundle.exps.iter().fold(WSeries::one(wmax, qmax), |acc, &m| {
        &acc * &(&WSeries::one(wmax, qmax) + &l.scale(&rat(m)))
    });
    let s = total.inverse().expect("constant term 1");
    (0..=wmax).map(|k| s.weight_part(k)).collect()
}

/// Pushes `d` forward; the result has `wmax = d.wmax - (r - 1)`.
pub fn pushforward(d: &WSeries, bundle: &BundleSpec) -> Result<WSeries> {
    let shift = bundle.fiber_dim();
    let out_wmax = d.wmax().checked_sub(shift).ok_or(Error::TruncationDeficit {
        needed: shift,
        have: d.wmax(),
    })?;
    let segre = segre_series(bundle, out_wmax, d.qmax());
    let mut by_power: Vec<WSeries> = vec![WSeries::zero(out_wmax, d.qmax()); (d.wmax() + 1) as usize];
    for (m, p) in d.ypoly_terms() {
        let i = m.exp(Var::H);
        if i < shift {
            continue;
        }
        let rest = WSeries::term_poly(m.with_exp(Var::H, 0), p, out_wmax, d.qmax());
        let slot = &mut by_power[(i - shift) as usize];
        *slot = &*slot + &rest;
    }
    let mut out = WSeries::zero(out_wmax, d.qmax());
    for (j, rest) in by_power.iter().enumerate() {
        if rest.is_zero() || j > out_wmax as usize {
            continue;
        }
        out = &out + &(rest * &segre[j]);
    }
    Ok(out)
}

/// Pushforward with an explicit target order; errors if `d` is too short.
pub fn pushforward_to(d: &WSeries, bundle: &BundleSpec, target_wmax: u32) -> Result<WSeries> {
    let needed = target_wmax + bundle.fiber_dim();
    if d.wmax() < needed {
        return Err(Error::TruncationDeficit {
            needed,
            have: d.wmax(),
        });
    }
    pushforward(d, bundle)?.truncate(target_wmax, d.qmax())
}

/// The D5 bundle `O ⊕ L ⊕ L ⊕ L`.
pub fn d5_bundle() -> BundleSpec {
    BundleSpec { exps: vec![0, 1, 1, 1] }
}

/// Independent D5 route: `½ d²/dH² ((D - (a0 + a1 H + a2 H²))/H)` at `H = -L`.
pub fn derivative_pushforward_d5(d: &WSeries, bundle: &BundleSpec) -> Result<WSeries> {
    let mut sorted = bundle.exps.clone();
    sorted.sort_unstable();
    if sorted != d5_bundle().exps {
        return Err(Error::UnsupportedOracle(format!(
            "derivative formula is the O + 3L instance, got {:?}",
            bundle.exps
        )));
    }
    let w = d.wmax();
    let out_wmax = w.checked_sub(3).ok_or(Error::TruncationDeficit { needed: 3, have: w })?;
    // strip H^0, H^1, H^2 and divide by H
    let shifted = d.map_monomials(w - 1, |m| {
        let e = m.exp(Var::H);
        (e >= 3).then(|| (m.with_exp(Var::H, e - 1), Rational::one()))
    });
    let second = shifted.diff_h().diff_h().scale(&ratio(1, 2));
    let minus_l = WSeries::var(Var::L, w - 1, d.qmax()).neg();
    second
        .substitute(Var::H, &minus_l)?
        .truncate(out_wmax, d.qmax())
}

/// `π*(H^i)` for a single power, as a convenience for tests and callers.
pub fn pushforward_h_power(i: u32, bundle: &BundleSpec, wmax: u32, qmax: u32) -> Result<WSeries> {
    let h = WSeries::term(Monomial::var_pow(Var::H, i), 0, Rational::one(), wmax, qmax);
    pushforward(&h, bundle)
}
