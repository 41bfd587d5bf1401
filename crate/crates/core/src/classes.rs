//! Characteristic-class series: Todd factors, Chern-ext factors, power
//! sums of Chern roots, and the Hirzebruch class of an abstract base.
//!
//! The base class is `Π g(λi)` with `g(t) = (1 + y e^{-t}) t / (1 - e^{-t})`.
//! Writing `f = ln g = a0 + a1 t + ...` with `a0 = ln(1+y)`, the product over
//! `d` roots is `(1+y)^d exp(Σ_k a_k p_k)` where `p_k` are the power sums.
//! The `a_k` are rational in `y` with denominators `(1+y)^{<=k}`; they are
//! carried as [`YFrac`] and never expanded through `ln(1+y)`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::UniPoly;
use crate::rational::{factorial, rat, Rational};
use crate::series::{Monomial, Var, WSeries};

/// The line class `a·H + b·L`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootForm {
    pub a: i64,
    pub b: i64,
}

impl RootForm {
    pub const fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn to_series(self, wmax: u32, qmax: u32) -> WSeries {
        let h = WSeries::var(Var::H, wmax, qmax).scale(&rat(self.a));
        let l = WSeries::var(Var::L, wmax, qmax).scale(&rat(self.b));
        &h + &l
    }
}

impl std::fmt::Display for RootForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}H{:+}L", self.a, self.b)
    }
}

/// Coefficients of `t/(1 - e^{-t})` up to `t^n`, by inverting `(1 - e^{-t})/t`.
pub fn todd_coefficients(n: usize) -> UniPoly {
    // (1 - e^{-t})/t = Σ (-1)^k t^k / (k+1)!
    let base = UniPoly::from_coeffs(
        (0..=n)
            .map(|k| {
                let sign = if k % 2 == 0 { 1 } else { -1 };
                Rational::new(sign.into(), factorial(k as u64 + 1))
            })
            .collect(),
    );
    base.inverse_trunc(n).expect("constant term is 1")
}

/// `λ/(1 - e^{-λ})` at `λ = aH + bL`.
pub fn todd_factor(r: RootForm, wmax: u32, qmax: u32) -> WSeries {
    if r.is_zero() {
        return WSeries::one(wmax, qmax);
    }
    WSeries::compose_univariate(&todd_coefficients(wmax as usize), &r.to_series(wmax, qmax))
        .expect("root form has weight 1")
}

/// `1 + y·e^{sign·λ}`; `sign = -1` gives the factor of the dual bundle.
pub fn chext_factor(r: RootForm, sign: i64, wmax: u32, qmax: u32) -> WSeries {
    let lambda = r.to_series(wmax, qmax).scale(&rat(sign.signum()));
    let e = lambda.exp().expect("root form has no weight-0 part");
    &WSeries::one(wmax, qmax) + &(&WSeries::y(wmax, qmax) * &e)
}

/// `C = 1 - c1 + c2 - c3 + ...` (t-degree folded into weight).
pub fn signed_chern_total(wmax: u32, qmax: u32) -> WSeries {
    let mut c = WSeries::one(wmax, qmax);
    for i in 1..=wmax {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        c = &c + &WSeries::var(Var::C(i), wmax, qmax).scale(&rat(sign));
    }
    c
}

/// Multiplies each weight-`k` part by `k` (the operator `t d/dt`).
pub fn euler_operator(s: &WSeries) -> WSeries {
    s.map_by_weight(|k, p| p.scale(&rat(k as i64)))
}

/// Power sums `p1..p_wmax` of the formal Chern roots, as the weight parts
/// of `-tC'/C`.
pub fn power_sums_from_chern(wmax: u32, qmax: u32) -> Vec<WSeries> {
    let c = signed_chern_total(wmax, qmax);
    let inv = c.inverse().expect("C has constant term 1");
    let series = &euler_operator(&c).neg() * &inv;
    (1..=wmax).map(|k| series.weight_part(k)).collect()
}

/// `num / (1+y)^dpow` with `(1+y)` not dividing `num` unless `dpow = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YFrac {
    pub num: UniPoly,
    pub dpow: u32,
}

impl YFrac {
    pub fn new(num: UniPoly, dpow: u32) -> Self {
        let one_plus_y = UniPoly::from_ints(&[1, 1]);
        let mut num = num;
        let mut dpow = dpow;
        while dpow > 0 && !num.is_zero() {
            match num.div_exact(&one_plus_y) {
                Some(q) => {
                    num = q;
                    dpow -= 1;
                }
                None => break,
            }
        }
        if num.is_zero() {
            dpow = 0;
        }
        Self { num, dpow }
    }

    /// `num·(1+y)^{k - dpow}`, i.e. the value after `t -> t(1+y)` at order `k`.
    pub fn absorbed(&self, k: u32) -> Option<UniPoly> {
        let e = k.checked_sub(self.dpow)?;
        Some(&self.num * &UniPoly::from_ints(&[1, 1]).pow(e))
    }

    /// The y-series of `num/(1+y)^dpow` modulo `y^{qmax+1}`.
    pub fn expand(&self, qmax: u32) -> UniPoly {
        let den = UniPoly::from_ints(&[1, 1]).pow(self.dpow);
        let inv = den.inverse_trunc(qmax as usize).expect("unit");
        self.num.mul_trunc(&inv, qmax as usize)
    }
}

/// `a1..a_kmax` of `f = ln((1 + y e^{-t}) t/(1 - e^{-t}))`, dropping `a0 = ln(1+y)`.
///
/// Split as `ln(1 - s(1 - e^{-t})) + ln(t/(1 - e^{-t})) + ln(1+y)` with
/// `s = y/(1+y)`; the first summand contributes `-Σ_j s^j [t^k](1-e^{-t})^j / j`.
pub fn f_coefficients(kmax: u32) -> Vec<YFrac> {
    let n = kmax as usize;
    let log_todd = todd_coefficients(n).log_trunc(n).expect("constant term 1");
    // 1 - e^{-t}
    let u = UniPoly::from_coeffs(
        (0..=n)
            .map(|k| {
                if k == 0 {
                    Rational::zero()
                } else {
                    let sign = if k % 2 == 1 { 1 } else { -1 };
                    Rational::new(sign.into(), factorial(k as u64))
                }
            })
            .collect(),
    );
    let mut u_pows = vec![UniPoly::one()];
    for j in 1..=n {
        let next = u_pows[j - 1].mul_trunc(&u, n);
        u_pows.push(next);
    }
    let one_plus_y = UniPoly::from_ints(&[1, 1]);
    (1..=n)
        .map(|k| {
            let mut num = one_plus_y.pow(k as u32).scale(&log_todd.coeff(k));
            for (j, uj) in u_pows.iter().enumerate().take(k + 1).skip(1) {
                let c = -uj.coeff(k) / rat(j as i64);
                let term = &UniPoly::monomial(c, j) * &one_plus_y.pow((k - j) as u32);
                num = &num + &term;
            }
            YFrac::new(num, k as u32)
        })
        .collect()
}

/// `Σ_k ã_k S_k` over the weight components of `series`.
///
/// With `absorb`, `ã_k = num_k (1+y)^{k - dpow_k}`; otherwise
/// `ã_k = num_k / (1+y)^{dpow_k}` expanded in y.
pub fn hadamard_apply(coeffs: &[YFrac], series: &WSeries, absorb: bool) -> Result<WSeries> {
    let (wmax, qmax) = (series.wmax(), series.qmax());
    if (coeffs.len() as u32) < wmax {
        return Err(Error::MissingCoefficients {
            needed: wmax,
            have: coeffs.len() as u32,
        });
    }
    if series.min_weight() == Some(0) {
        return Err(Error::Substitution {
            var: "t".into(),
            reason: "weight-0 term would need a0 = ln(1+y)".into(),
        });
    }
    let factors: Vec<UniPoly> = coeffs
        .iter()
        .take(wmax as usize)
        .enumerate()
        .map(|(i, a)| {
            let k = i as u32 + 1;
            if absorb {
                a.absorbed(k).expect("dpow_k <= k")
            } else {
                a.expand(qmax)
            }
        })
        .collect();
    Ok(series.map_by_weight(|k, p| p.mul_trunc(&factors[k as usize - 1], qmax as usize)))
}

/// Hirzebruch class `H_y(B)` of a `d`-dimensional base in formal `c1..cd`.
///
/// `top_only` returns the weight-`d` part computed on the absorbed route,
/// `(1+y)^d [t^d] exp(f ⊙ (-tC'/C))`. Otherwise the full mixed-weight class
/// `(1+y)^d exp(Σ a_k p_k)` is returned with the `(1+y)` denominators
/// inverted as truncated y-series.
pub fn base_hirzebruch(d: u32, qmax: u32, top_only: bool) -> WSeries {
    let coeffs = f_coefficients(d.max(1));
    let sums = power_sums_from_chern(d, qmax)
        .into_iter()
        .fold(WSeries::zero(d, qmax), |acc, p| &acc + &p);
    let exponent = hadamard_apply(&coeffs, &sums, top_only).expect("coefficients cover d");
    let e = exponent.exp().expect("no weight-0 part");
    if top_only {
        e.weight_part(d)
    } else {
        e.mul_ypoly(&UniPoly::from_ints(&[1, 1]).pow(d))
    }
}

/// `td(B)` as the y^0 slice of the full Hirzebruch class.
pub fn base_todd(d: u32) -> WSeries {
    base_hirzebruch(d, 0, false)
}

/// `(c_i)` monomial helper for tests and callers building classes by hand.
pub fn chern(i: u32, wmax: u32, qmax: u32) -> WSeries {
    WSeries::term(Monomial::var(Var::C(i)), 0, Rational::one(), wmax, qmax)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn lpow(c: Rational, e: u32, w: u32) -> WSeries {
        WSeries::term(Monomial::var_pow(Var::L, e), 0, c, w, 0)
    }

    /// Evaluates a y-polynomial-valued top class on a base where
    /// `ci = chern_numbers[i-1] h^i`, `∫ h^d = 1`.
    fn integrate_on(class: &WSeries, chern_numbers: &[i64]) -> UniPoly {
        let mut out = UniPoly::zero();
        for (m, p) in class.ypoly_terms() {
            let mut v = Rational::one();
            for (var, e) in m.iter() {
                match var {
                    Var::C(i) => v *= rat(chern_numbers[i as usize - 1]).pow(e as i32),
                    _ => panic!("unexpected variable"),
                }
            }
            out = &out + &p.scale(&v);
        }
        out
    }

    #[test]
    fn todd_examples() {
        assert_eq!(todd_factor(RootForm::new(0, 0), 4, 0), WSeries::one(4, 0));
        let expected = [
            (0, ratio(1, 1)),
            (1, ratio(1, 2)),
            (2, ratio(1, 12)),
            (3, ratio(0, 1)),
            (4, ratio(-1, 720)),
        ]
        .into_iter()
        .fold(WSeries::zero(4, 0), |acc, (e, c)| &acc + &lpow(c, e, 4));
        assert_eq!(todd_factor(RootForm::new(0, 1), 4, 0), expected);

        // λ = 2H + 2L at order 2: 1 + (H+L) + (2H+2L)^2/12
        let lam = RootForm::new(2, 2).to_series(2, 0);
        let expected = &(&WSeries::one(2, 0) + &lam.scale(&ratio(1, 2)))
            + &(&lam * &lam).scale(&ratio(1, 12));
        assert_eq!(todd_factor(RootForm::new(2, 2), 2, 0), expected);
    }

    #[test]
    fn chext_examples() {
        let triv = chext_factor(RootForm::new(0, 0), 1, 3, 2);
        assert_eq!(triv, &WSeries::one(3, 2) + &WSeries::y(3, 2));
        let u = WSeries::var(Var::L, 3, 2).neg().exp().unwrap();
        let expected = &WSeries::one(3, 2) + &(&WSeries::y(3, 2) * &u);
        assert_eq!(chext_factor(RootForm::new(0, 1), -1, 3, 2), expected);
    }

    #[test]
    fn todd_sanity_two_roots() {
        // roots H, L: c1 = H + L, c2 = HL
        let (w, q) = (2, 0);
        let td = &todd_factor(RootForm::new(1, 0), w, q) * &todd_factor(RootForm::new(0, 1), w, q);
        let c1 = RootForm::new(1, 1).to_series(w, q);
        let c2 = &WSeries::var(Var::H, w, q) * &WSeries::var(Var::L, w, q);
        assert_eq!(td.weight_part(1), c1.scale(&ratio(1, 2)));
        assert_eq!(td.weight_part(2), (&(&c1 * &c1) + &c2).scale(&ratio(1, 12)));
    }

    #[test]
    fn power_sums_newton() {
        let p = power_sums_from_chern(3, 0);
        let c = |i| chern(i, 3, 0);
        assert_eq!(p[0], c(1));
        assert_eq!(p[1], &(&c(1) * &c(1)) - &c(2).scale(&rat(2)));
        let p3 = &(&(&c(1) * &c(1)) * &c(1)) - &(&c(1) * &c(2)).scale(&rat(3));
        assert_eq!(p[2], &p3 + &c(3).scale(&rat(3)));
    }

    #[test]
    fn f_coefficient_values() {
        let a = f_coefficients(8);
        assert_eq!(
            a[0],
            YFrac {
                num: UniPoly::from_coeffs(vec![ratio(1, 2), ratio(-1, 2)]),
                dpow: 1
            }
        );
        // ln(t/(1-e^{-t})) = t/2 - t^2/24 + ..., so a2 at y = 0 is -1/24
        assert_eq!(
            a[1],
            YFrac {
                num: UniPoly::from_coeffs(vec![ratio(-1, 24), ratio(10, 24), ratio(-1, 24)]),
                dpow: 2
            }
        );
        for (i, ak) in a.iter().enumerate() {
            assert!(ak.dpow <= i as u32 + 1);
        }
    }

    #[test]
    fn f_coefficients_match_direct_expansion() {
        // a_k expanded in y must agree with the y-series of ln(g/(1+y)) in one variable
        let (w, q) = (6, 5);
        let t = WSeries::var(Var::L, w, q);
        let g = &chext_factor(RootForm::new(0, 1), -1, w, q) * &todd_factor(RootForm::new(0, 1), w, q);
        let inv = (&WSeries::one(w, q) + &WSeries::y(w, q)).inverse().unwrap();
        let f = (&g * &inv).log().unwrap();
        let a = f_coefficients(w);
        let via_frac = hadamard_apply(
            &a,
            &(1..=w).fold(WSeries::zero(w, q), |acc, k| &acc + &t.pow(k)),
            false,
        )
        .unwrap();
        assert_eq!(f, via_frac);
    }

    #[test]
    fn yfrac_normalizes() {
        let f = YFrac::new(UniPoly::from_ints(&[1, 2, 1]), 3);
        assert_eq!(f, YFrac { num: UniPoly::one(), dpow: 1 });
        let z = YFrac::new(UniPoly::zero(), 4);
        assert_eq!(z.dpow, 0);
        assert_eq!(f.absorbed(3), Some(UniPoly::from_ints(&[1, 2, 1])));
        assert_eq!(f.absorbed(0), None);
    }

    #[test]
    fn hadamard_examples() {
        let zeros = vec![YFrac::new(UniPoly::zero(), 0); 3];
        let s = power_sums_from_chern(3, 2)
            .into_iter()
            .fold(WSeries::zero(3, 2), |acc, p| &acc + &p);
        assert!(hadamard_apply(&zeros, &s, true).unwrap().is_zero());
        assert!(matches!(
            hadamard_apply(&zeros[..2], &s, true),
            Err(Error::MissingCoefficients { .. })
        ));
        let a = f_coefficients(3);
        let out = hadamard_apply(&a, &s, true).unwrap();
        let expected = chern(1, 3, 2).mul_ypoly(&UniPoly::from_coeffs(vec![ratio(1, 2), ratio(-1, 2)]));
        assert_eq!(out.weight_part(1), expected);
    }

    #[test]
    fn base_hirzebruch_projective_line_and_plane() {
        assert_eq!(base_hirzebruch(0, 2, true), WSeries::one(0, 2));
        assert_eq!(base_hirzebruch(0, 2, false), WSeries::one(0, 2));

        let top1 = base_hirzebruch(1, 3, true);
        assert_eq!(
            top1,
            chern(1, 1, 3).mul_ypoly(&UniPoly::from_coeffs(vec![ratio(1, 2), ratio(-1, 2)]))
        );
        assert_eq!(integrate_on(&top1, &[2]), UniPoly::from_ints(&[1, -1]));

        let top2 = base_hirzebruch(2, 3, true);
        assert_eq!(integrate_on(&top2, &[3, 3]), UniPoly::from_ints(&[1, -1, 1]));
        let top3 = base_hirzebruch(3, 4, true);
        assert_eq!(integrate_on(&top3, &[4, 6, 4]), UniPoly::from_ints(&[1, -1, 1, -1]));
    }

    #[test]
    fn base_routes_agree() {
        for d in 0..=5 {
            let q = d + 2;
            let top = base_hirzebruch(d, q, true);
            let full = base_hirzebruch(d, q, false);
            assert_eq!(top, full.weight_part(d), "d = {d}");
            assert!(full.y_degree().unwrap_or(0) <= d);
        }
    }

    #[test]
    fn todd_class_of_base() {
        let td = base_todd(2);
        let c1 = chern(1, 2, 0);
        assert_eq!(td.weight_part(1), c1.scale(&ratio(1, 2)));
        assert_eq!(
            td.weight_part(2),
            (&(&c1 * &c1) + &chern(2, 2, 0)).scale(&ratio(1, 12))
        );
    }

    #[test]
    fn exterior_square_character() {
        // roots λ = (H, L, H+L) split as A = (H, L), C = (H+L)
        let (w, q) = (4, 3);
        let roots = [RootForm::new(1, 0), RootForm::new(0, 1), RootForm::new(1, 1)];
        let prod = |rs: &[RootForm]| {
            rs.iter()
                .fold(WSeries::one(w, q), |acc, r| &acc * &chext_factor(*r, 1, w, q))
        };
        let whole = prod(&roots);
        let a = prod(&roots[..2]);
        let c = prod(&roots[2..]);
        let lambda2 = (0..=2).fold(WSeries::zero(w, q), |acc, i| {
            &acc + &(&a.y_coeff(i) * &c.y_coeff(2 - i))
        });
        assert_eq!(whole.y_coeff(2), lambda2);
        // ch(Λ²) = Σ_{i<j} e^{λi+λj}
        let mut direct = WSeries::zero(w, q);
        for i in 0..3 {
            for j in i + 1..3 {
                let s = RootForm::new(roots[i].a + roots[j].a, roots[i].b + roots[j].b);
                direct = &direct + &s.to_series(w, q).exp().unwrap();
            }
        }
        assert_eq!(whole.y_coeff(2), direct);
    }
}
