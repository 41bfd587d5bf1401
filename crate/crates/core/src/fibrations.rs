//! The D5/E6/E7/E8 catalog, custom fibrations in split projective
//! bundles, and the pushed-forward factor `Q` with `φ*(H_y(Y)) = Q·H_y(B)`.
//!
//! A fibration is described by the Chern roots of `F = π*E ⊗ O(1)` and of
//! the normal bundle `N` of `Y` in `P(E)`. The integrand pushed forward is
//!
//! ```text
//! D = Π_F (1 + y e^{-λ}) λ/(1 - e^{-λ}) · Π_N (1 - e^{-μ})/(1 + y e^{-μ}) · 1/(1+y)
//! ```
//!
//! `Q` is also available in closed form as a rational function of
//! `U = e^{-L}` and `y`; its `y^n` coefficients are the polynomials `P_n(U)`.

use std::fmt;

use num_traits::{One, Zero};

use crate::classes::{chext_factor, todd_factor, RootForm};
use crate::error::{Error, Result};
use crate::poly::UniPoly;
use crate::pushforward::{pushforward_to, BundleSpec};
use crate::rational::{rat, Rational};
use crate::series::{Var, WSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    D5,
    E6,
    E7,
    E8,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::D5, Family::E6, Family::E7, Family::E8];

    pub fn name(self) -> &'static str {
        match self {
            Family::D5 => "D5",
            Family::E6 => "E6",
            Family::E7 => "E7",
            Family::E8 => "E8",
        }
    }

    pub fn parse(s: &str) -> Result<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }

    /// Catalog entry. E7 uses the complete-intersection model of the
    /// weighted bundle inside `P(O ⊕ L ⊕ L² ⊕ L²)`.
    pub fn spec(self) -> FibrationSpec {
        let r = RootForm::new;
        let (exps, n_roots): (&[i64], Vec<RootForm>) = match self {
            Family::D5 => (&[0, 1, 1, 1], vec![r(2, 2), r(2, 2)]),
            Family::E6 => (&[0, 1, 1], vec![r(3, 3)]),
            Family::E7 => (&[0, 1, 2, 2], vec![r(2, 2), r(2, 4)]),
            Family::E8 => (&[0, 2, 3], vec![r(3, 6)]),
        };
        let bundle = BundleSpec { exps: exps.to_vec() };
        FibrationSpec {
            name: self.name().to_string(),
            f_roots: FibrationSpec::f_roots_of(&bundle),
            bundle,
            n_roots,
            closed_q: Some(self),
        }
    }

    /// The closed form of `Q` as text.
    pub fn closed_form_text(self) -> &'static str {
        match self {
            Family::D5 => "4 - y + (y+1)(yU - 3)/(yU^2+1) - U(y+1)^2/(yU^2+1)^2",
            Family::E6 => "3 - y + (y+1)(yU^2 - U - 2)/(yU^3+1)",
            Family::E7 => "2 - y + (y+1)(yU^3 - U - 1)/(yU^4+1)",
            Family::E8 => "1 - y + (y+1)(yU^5 - U - 0)/(yU^6+1)",
        }
    }

    /// The closed form of `Q` as LaTeX.
    pub fn closed_form_latex(self) -> &'static str {
        match self {
            Family::D5 => {
                r"4 - y + \frac{(y+1)(yU - 3)}{yU^{2}+1} - \frac{U(y+1)^{2}}{(yU^{2}+1)^{2}}"
            }
            Family::E6 => r"3 - y + \frac{(y+1)(yU^{2} - U - 2)}{yU^{3}+1}",
            Family::E7 => r"2 - y + \frac{(y+1)(yU^{3} - U - 1)}{yU^{4}+1}",
            Family::E8 => r"1 - y + \frac{(y+1)(yU^{5} - U)}{yU^{6}+1}",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Root and bundle data for a fibration `Y ⊂ P(E) -> B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FibrationSpec {
    pub name: String,
    pub bundle: BundleSpec,
    /// Chern roots of `F = π*E ⊗ O(1)`.
    pub f_roots: Vec<RootForm>,
    /// Chern roots of the normal bundle.
    pub n_roots: Vec<RootForm>,
    /// Catalog family whose closed-form `Q` this spec should reproduce.
    pub closed_q: Option<Family>,
}

impl FibrationSpec {
    pub fn f_roots_of(bundle: &BundleSpec) -> Vec<RootForm> {
        bundle.exps.iter().map(|&m| RootForm::new(1, m)).collect()
    }

    /// A custom spec; `f_roots` default to `H + m_j L`.
    pub fn custom(
        name: impl Into<String>,
        bundle: BundleSpec,
        n_roots: Vec<RootForm>,
        f_roots: Option<Vec<RootForm>>,
    ) -> Result<Self> {
        let spec = Self {
            name: name.into(),
            f_roots: f_roots.unwrap_or_else(|| Self::f_roots_of(&bundle)),
            bundle,
            n_roots,
            closed_q: None,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Relative dimension of `Y -> B`.
    pub fn fiber_dim(&self) -> i64 {
        self.f_roots.len() as i64 - 1 - self.n_roots.len() as i64
    }

    pub fn validate(&self) -> Result<()> {
        if self.bundle.exps.is_empty() {
            return Err(Error::InvalidSpec("bundle must have rank >= 1".into()));
        }
        let mut expected = Self::f_roots_of(&self.bundle);
        let mut given = self.f_roots.clone();
        expected.sort();
        given.sort();
        if expected != given {
            return Err(Error::InvalidSpec(format!(
                "f_roots must be H + m L for m in bundle {:?}",
                self.bundle.exps
            )));
        }
        if let Some(bad) = self.n_roots.iter().find(|r| r.a <= 0) {
            return Err(Error::InvalidSpec(format!(
                "normal root {bad} must have positive H-coefficient"
            )));
        }
        if self.fiber_dim() < 0 {
            return Err(Error::InvalidSpec(format!(
                "more normal roots ({}) than the fiber dimension {} allows",
                self.n_roots.len(),
                self.bundle.fiber_dim()
            )));
        }
        if self.closed_q.is_some() {
            if self.fiber_dim() != 1 {
                return Err(Error::InvalidSpec(format!(
                    "catalog fibrations have elliptic fibers, got relative dimension {}",
                    self.fiber_dim()
                )));
            }
            if self.n_roots.is_empty() {
                return Err(Error::InvalidSpec("catalog fibrations need normal roots".into()));
            }
        }
        Ok(())
    }
}

/// The integrand `D` on `P(E)`, expanded to `(wmax, qmax)`.
pub fn build_d(spec: &FibrationSpec, wmax: u32, qmax: u32) -> Result<WSeries> {
    spec.validate()?;
    if (wmax as usize) < spec.n_roots.len() {
        return Err(Error::TruncationDeficit {
            needed: spec.n_roots.len() as u32,
            have: wmax,
        });
    }
    let one = WSeries::one(wmax, qmax);
    let mut num = one.clone();
    for &r in &spec.f_roots {
        num = &num * &(&chext_factor(r, -1, wmax, qmax) * &todd_factor(r, wmax, qmax));
    }
    let mut den = &one + &WSeries::y(wmax, qmax);
    for &r in &spec.n_roots {
        let e = r.to_series(wmax, qmax).neg().exp()?;
        num = &num * &(&one - &e);
        den = &den * &chext_factor(r, -1, wmax, qmax);
    }
    num.mul(&den.inverse()?)
}

/// `Q` obtained by pushing `D` forward, correct to weight `wmax`.
pub fn derived_q(spec: &FibrationSpec, wmax: u32, qmax: u32) -> Result<WSeries> {
    let d = build_d(spec, wmax + spec.bundle.fiber_dim(), qmax)?;
    pushforward_to(&d, &spec.bundle, wmax)
}

/// `Q` for a spec: the closed form when the spec names a family, else derived.
pub fn q_series(spec: &FibrationSpec, wmax: u32, qmax: u32) -> Result<WSeries> {
    match spec.closed_q {
        Some(family) => closed_form_q(family, wmax, qmax),
        None => derived_q(spec, wmax, qmax),
    }
}

/// A commutative ring with `y`, `U` and enough units to evaluate the closed forms.
pub trait ClosedFormRing {
    type Elem: Clone;
    fn int(&self, n: i64) -> Self::Elem;
    fn y(&self) -> Self::Elem;
    fn u(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.mul(&self.int(-1), b))
    }

    fn pow(&self, a: &Self::Elem, e: u32) -> Self::Elem {
        (0..e).fold(self.int(1), |acc, _| self.mul(&acc, a))
    }

    fn u_pow(&self, e: u32) -> Self::Elem {
        self.pow(&self.u(), e)
    }
}

/// Evaluates the closed-form `Q` of `family` in `ring`.
pub fn eval_closed_q<R: ClosedFormRing>(family: Family, ring: &R) -> Result<R::Elem> {
    let y = ring.y();
    let one = ring.int(1);
    let y_plus_1 = ring.add(&y, &one);
    // s - y + (y+1)(y U^a - U - (s-1)) / (y U^b + 1)
    let e_type = |s: i64, a: u32, b: u32| -> Result<R::Elem> {
        let head = ring.sub(&ring.int(s), &y);
        let top = ring.sub(
            &ring.sub(&ring.mul(&y, &ring.u_pow(a)), &ring.u()),
            &ring.int(s - 1),
        );
        let den = ring.add(&ring.mul(&y, &ring.u_pow(b)), &one);
        let frac = ring.mul(&ring.mul(&y_plus_1, &top), &ring.inv(&den)?);
        Ok(ring.add(&head, &frac))
    };
    match family {
        Family::D5 => {
            let head = ring.sub(&ring.int(4), &y);
            let den = ring.add(&ring.mul(&y, &ring.u_pow(2)), &one);
            let den_inv = ring.inv(&den)?;
            let top = ring.sub(&ring.mul(&y, &ring.u()), &ring.int(3));
            let first = ring.mul(&ring.mul(&y_plus_1, &top), &den_inv);
            let second = ring.mul(
                &ring.mul(&ring.u(), &ring.pow(&y_plus_1, 2)),
                &ring.pow(&den_inv, 2),
            );
            Ok(ring.sub(&ring.add(&head, &first), &second))
        }
        Family::E6 => e_type(3, 2, 3),
        Family::E7 => e_type(2, 3, 4),
        Family::E8 => e_type(1, 5, 6),
    }
}

/// The closed forms over `WSeries` with `U = exp(-L)`.
pub struct SeriesRing {
    wmax: u32,
    qmax: u32,
    u: WSeries,
}

impl SeriesRing {
    pub fn new(wmax: u32, qmax: u32) -> Self {
        let u = WSeries::var(Var::L, wmax, qmax)
            .neg()
            .exp()
            .expect("L has weight 1");
        Self { wmax, qmax, u }
    }

    pub fn u_series(&self) -> &WSeries {
        &self.u
    }
}

impl ClosedFormRing for SeriesRing {
    type Elem = WSeries;
    fn int(&self, n: i64) -> WSeries {
        WSeries::int(n, self.wmax, self.qmax)
    }
    fn y(&self) -> WSeries {
        WSeries::y(self.wmax, self.qmax)
    }
    fn u(&self) -> WSeries {
        self.u.clone()
    }
    fn add(&self, a: &WSeries, b: &WSeries) -> WSeries {
        a + b
    }
    fn mul(&self, a: &WSeries, b: &WSeries) -> WSeries {
        a * b
    }
    fn inv(&self, a: &WSeries) -> Result<WSeries> {
        a.inverse()
    }
}

/// Polynomials in `y` (truncated at degree `ymax`) with coefficients in `Q[U]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YUPoly(Vec<UniPoly>);

impl YUPoly {
    pub fn y_coeff(&self, n: usize) -> UniPoly {
        self.0.get(n).cloned().unwrap_or_default()
    }
}

/// The closed forms over `Q[U][y]/(y^{ymax+1})`.
pub struct YURing {
    pub ymax: usize,
}

impl YURing {
    fn trim(&self, mut v: Vec<UniPoly>) -> YUPoly {
        v.truncate(self.ymax + 1);
        while v.last().is_some_and(UniPoly::is_zero) {
            v.pop();
        }
        YUPoly(v)
    }
}

impl ClosedFormRing for YURing {
    type Elem = YUPoly;
    fn int(&self, n: i64) -> YUPoly {
        self.trim(vec![UniPoly::constant(rat(n))])
    }
    fn y(&self) -> YUPoly {
        self.trim(vec![UniPoly::zero(), UniPoly::one()])
    }
    fn u(&self) -> YUPoly {
        self.trim(vec![UniPoly::x()])
    }
    fn add(&self, a: &YUPoly, b: &YUPoly) -> YUPoly {
        let n = a.0.len().max(b.0.len());
        self.trim((0..n).map(|k| &a.y_coeff(k) + &b.y_coeff(k)).collect())
    }
    fn mul(&self, a: &YUPoly, b: &YUPoly) -> YUPoly {
        let mut out = vec![UniPoly::zero(); self.ymax + 1];
        for (i, ai) in a.0.iter().enumerate() {
            for (j, bj) in b.0.iter().enumerate() {
                if i + j <= self.ymax {
                    out[i + j] = &out[i + j] + &(ai * bj);
                }
            }
        }
        self.trim(out)
    }
    /// Needs a nonzero constant `y^0` coefficient.
    fn inv(&self, a: &YUPoly) -> Result<YUPoly> {
        let c0 = a.y_coeff(0);
        if c0.degree() != Some(0) {
            return Err(Error::NotAUnit);
        }
        let inv0 = c0.coeff(0).recip();
        let mut out: Vec<UniPoly> = vec![UniPoly::constant(inv0.clone())];
        for k in 1..=self.ymax {
            let mut acc = UniPoly::zero();
            for j in 1..=k {
                acc = &acc + &(&a.y_coeff(j) * &out[k - j]);
            }
            out.push(acc.scale(&-inv0.clone()));
        }
        Ok(self.trim(out))
    }
}

/// The closed-form `Q` expanded with `U = exp(-L)`.
pub fn closed_form_q(family: Family, wmax: u32, qmax: u32) -> Result<WSeries> {
    eval_closed_q(family, &SeriesRing::new(wmax, qmax))
}

/// `P_n(U)`, the `y^n` coefficient of the closed-form `Q`.
pub fn p_polynomial(family: Family, n: u32) -> UniPoly {
    let ring = YURing { ymax: n as usize };
    eval_closed_q(family, &ring)
        .expect("denominators have constant y^0 coefficient 1")
        .y_coeff(n as usize)
}

/// The tabulated product formulas for `P_n(U)`.
pub fn table_p(family: Family, n: u32) -> UniPoly {
    let p = UniPoly::from_ints;
    let u = UniPoly::x();
    let u_pow = |e: u32| u.pow(e);
    match n {
        0 => p(&[1, -1]),
        1 => match family {
            Family::D5 => p(&[-4, -1, 3, 2]),
            Family::E6 => p(&[-3, -1, 1, 2, 1]),
            Family::E7 => p(&[-2, -1, 0, 1, 1, 1]),
            Family::E8 => p(&[-1, -1, 0, 0, 0, 1, 0, 1]),
        },
        n => {
            let k = n - 2;
            let minus_u_pow = |e: u32| (-&u_pow(e)).pow(k);
            let factors: Vec<UniPoly> = match family {
                Family::D5 => vec![
                    -&u,
                    UniPoly::from_coeffs(vec![rat(2 - n as i64), rat(n as i64 + 1)]),
                    p(&[-1, 1]),
                    p(&[1, 1]).pow(2),
                    minus_u_pow(2),
                ],
                Family::E6 => vec![
                    -&u_pow(2),
                    &u_pow(3) - &UniPoly::one(),
                    p(&[1, 1]).pow(2),
                    minus_u_pow(3),
                ],
                Family::E7 => vec![
                    -&u_pow(3),
                    &u_pow(4) - &UniPoly::one(),
                    p(&[1, 1, 1]),
                    minus_u_pow(4),
                ],
                Family::E8 => vec![
                    -&u_pow(5),
                    &u_pow(6) - &UniPoly::one(),
                    p(&[1, 0, 1]),
                    minus_u_pow(6),
                ],
            };
            factors.iter().fold(UniPoly::one(), |acc, f| &acc * f)
        }
    }
}

/// The tabulated product formula for `P_n`, `n >= 2`, as text.
pub fn table_p_text(family: Family, n: u32) -> Option<String> {
    let k = n.checked_sub(2)?;
    let mut s = match family {
        Family::D5 => {
            let shift = n as i64 - 2;
            let lin = match shift {
                0 => format!("{}U", n + 1),
                _ => format!("{}U-{shift}", n + 1),
            };
            format!("-U({lin})(U-1)(U+1)^2")
        }
        Family::E6 => "-U^2(U^3-1)(U+1)^2".to_string(),
        Family::E7 => "-U^3(U^4-1)(U^2+U+1)".to_string(),
        Family::E8 => "-U^5(U^6-1)(U^2+1)".to_string(),
    };
    let e = match family {
        Family::D5 => 2,
        Family::E6 => 3,
        Family::E7 => 4,
        Family::E8 => 6,
    };
    match k {
        0 => {}
        1 => s.push_str(&format!("(-U^{e})")),
        _ => s.push_str(&format!("(-U^{e})^{k}")),
    }
    Some(s)
}

/// `P(U)` evaluated at the series `U = exp(-L)`.
pub fn eval_at_u(p: &UniPoly, u: &WSeries) -> WSeries {
    p.coeffs()
        .iter()
        .rev()
        .fold(WSeries::zero(u.wmax(), u.qmax()), |acc, c| {
            &(&acc * u) + &WSeries::constant(c.clone(), u.wmax(), u.qmax())
        })
}

/// `φ*(H_q(Y)) = Σ_{i<=q} P_{q-i} H_i(B)` over a `d`-dimensional base.
///
/// `P_n` comes from the closed form when the spec names a family and from
/// the derived `Q` otherwise. The result is y-free (`qmax = 0`), weight `<= d`.
pub fn pushforward_class(spec: &FibrationSpec, q: u32, d: u32) -> Result<WSeries> {
    let max = d + spec.fiber_dim().max(0) as u32;
    if q > max {
        return Err(Error::DegreeOutOfRange { q, max });
    }
    let base = crate::classes::base_hirzebruch(d, q, false).truncate(d, q)?;
    let p_series: Vec<WSeries> = match spec.closed_q {
        Some(family) => {
            let ring = SeriesRing::new(d, 0);
            (0..=q)
                .map(|n| eval_at_u(&p_polynomial(family, n), ring.u_series()))
                .collect()
        }
        None => {
            let qs = derived_q(spec, d, q)?;
            (0..=q).map(|n| qs.y_coeff(n).truncate(d, 0)).collect::<Result<_>>()?
        }
    };
    let mut out = WSeries::zero(d, 0);
    for i in 0..=q {
        let h_i = base.y_coeff(i).truncate(d, 0)?;
        out = &out + &(&p_series[(q - i) as usize] * &h_i);
    }
    Ok(out)
}

/// First `(weight, y-degree)` where two series differ, with both coefficients.
pub fn first_mismatch(a: &WSeries, b: &WSeries) -> Option<(u32, u32, String, Rational, Rational)> {
    let diff = a.sub(b).ok()?;
    let mut terms: Vec<_> = diff.terms().collect();
    terms.sort_by_key(|(m, q, _)| (m.weight(), *q, (*m).clone()));
    terms.first().map(|(m, q, _)| {
        (
            m.weight(),
            *q,
            m.to_string(),
            a.coefficient(m, *q),
            b.coefficient(m, *q),
        )
    })
}

/// Whether `P` vanishes at `U = 1`.
pub fn vanishes_at_one(p: &UniPoly) -> bool {
    p.eval(&Rational::one()).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pushforward::{d5_bundle, derivative_pushforward_d5, pushforward};
    use crate::series::Monomial;

    #[test]
    fn catalog_specs_validate() {
        for f in Family::ALL {
            let s = f.spec();
            s.validate().unwrap();
            assert_eq!(s.fiber_dim(), 1, "{f}");
        }
        assert_eq!(Family::parse("e7").unwrap(), Family::E7);
        assert!(matches!(Family::parse("nosuch"), Err(Error::UnknownFamily(_))));
    }

    #[test]
    fn spec_validation_errors() {
        let b = BundleSpec::new([0, 1, 1]).unwrap();
        assert!(FibrationSpec::custom("x", b.clone(), vec![RootForm::new(0, 3)], None).is_err());
        assert!(FibrationSpec::custom(
            "x",
            b.clone(),
            vec![RootForm::new(3, 3)],
            Some(vec![RootForm::new(1, 0), RootForm::new(1, 2), RootForm::new(1, 1)])
        )
        .is_err());
        assert!(FibrationSpec::custom("x", b.clone(), vec![RootForm::new(1, 0); 3], None).is_err());
        // P^2-bundle with no equations: relative dimension 2 is fine for custom specs
        assert_eq!(FibrationSpec::custom("x", b, vec![], None).unwrap().fiber_dim(), 2);
    }

    #[test]
    fn identity_fibration_pushes_to_one() {
        let spec = FibrationSpec::custom("pt", BundleSpec::new([0]).unwrap(), vec![], None).unwrap();
        let d = build_d(&spec, 4, 3).unwrap();
        let expected = {
            let (w, q) = (4, 3);
            let h = RootForm::new(1, 0);
            let inv = (&WSeries::one(w, q) + &WSeries::y(w, q)).inverse().unwrap();
            &(&chext_factor(h, -1, w, q) * &todd_factor(h, w, q)) * &inv
        };
        assert_eq!(d, expected);
        assert_eq!(derived_q(&spec, 4, 3).unwrap(), WSeries::one(4, 3));
    }

    #[test]
    fn d5_integrand_has_no_low_h_terms_after_pushforward() {
        let d = build_d(&Family::D5.spec(), 5, 2).unwrap();
        // weight-0 part: H^0 L^0 term of D vanishes (two factors of 1 - e^{-μ})
        assert!(d.weight0_ypoly().is_zero());
        assert!(d.min_weight().unwrap() >= 2);
    }

    #[test]
    fn d5_derivative_route_matches() {
        let spec = Family::D5.spec();
        let d = build_d(&spec, 9, 7).unwrap();
        let a = derivative_pushforward_d5(&d, &d5_bundle()).unwrap();
        let b = pushforward(&d, &d5_bundle()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn derived_matches_closed_small() {
        for f in Family::ALL {
            let derived = derived_q(&f.spec(), 3, 3).unwrap();
            let closed = closed_form_q(f, 3, 3).unwrap();
            assert_eq!(first_mismatch(&derived, &closed), None, "{f}");
        }
    }

    #[test]
    fn p_table_low_orders() {
        for f in Family::ALL {
            for n in 0..=4 {
                assert_eq!(p_polynomial(f, n), table_p(f, n), "{f} n={n}");
            }
        }
        assert_eq!(
            table_p(Family::E7, 1).display_in("U").to_string(),
            "U^5+U^4+U^3-U-2"
        );
    }

    #[test]
    fn closed_forms_at_y_zero_and_u_one() {
        for f in Family::ALL {
            let q = closed_form_q(f, 4, 3).unwrap();
            let one_minus_u = &WSeries::one(4, 3) - SeriesRing::new(4, 3).u_series();
            assert_eq!(q.y_coeff(0), one_minus_u.y_coeff(0), "{f}");
            // U = 1 is L = 0: the weight-0 part is Q(U=1)
            assert!(q.weight0_ypoly().is_zero(), "{f}");
            for n in 0..=6 {
                assert!(vanishes_at_one(&p_polynomial(f, n)));
            }
        }
    }

    #[test]
    fn first_mismatch_reports_position() {
        let a = WSeries::term(Monomial::var(Var::L), 1, rat(2), 2, 2);
        let b = WSeries::zero(2, 2);
        let m = first_mismatch(&a, &b).unwrap();
        assert_eq!((m.0, m.1, m.2.as_str()), (1, 1, "L"));
        assert_eq!(first_mismatch(&a, &a), None);
    }

    #[test]
    fn pushforward_class_degree_zero_is_todd_times_one_minus_u() {
        let d = 3;
        let pc = pushforward_class(&Family::E6.spec(), 0, d).unwrap();
        let ring = SeriesRing::new(d, 0);
        let one_minus_u = &WSeries::one(d, 0) - ring.u_series();
        let td = crate::classes::base_todd(d);
        assert_eq!(pc, &one_minus_u * &td);
        assert!(matches!(
            pushforward_class(&Family::E6.spec(), 5, 3),
            Err(Error::DegreeOutOfRange { q: 5, max: 4 })
        ));
    }

    #[test]
    fn table_text() {
        assert_eq!(table_p_text(Family::D5, 2).unwrap(), "-U(3U)(U-1)(U+1)^2");
        assert_eq!(table_p_text(Family::D5, 4).unwrap(), "-U(5U-2)(U-1)(U+1)^2(-U^2)^2");
        assert_eq!(table_p_text(Family::E8, 3).unwrap(), "-U^5(U^6-1)(U^2+1)(-U^6)");
        assert!(table_p_text(Family::E6, 1).is_none());
    }
}
