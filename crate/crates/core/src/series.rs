//! Weight-truncated multivariate series with a truncated polynomial
//! y-direction.
//!
//! Variables are `L` and `H` (weight 1) and the formal Chern classes
//! `c1, c2, ...` (`ci` has weight `i`). The t-grading of generating
//! series is identified with this weight, so "coefficient of `t^k`" is
//! the weight-`k` homogeneous part. `y` carries weight 0 and is kept
//! as a dense polynomial truncated above `qmax`.
//!
//! All arithmetic is exact. The unit-, exp- and log-type operations are
//! solved weight by weight, so each costs about one multiplication.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::UniPoly;
use crate::rational::{rat, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    L,
    H,
    /// Chern class `c_i`, `i >= 1`.
    C(u32),
}

impl Var {
    fn index(self) -> usize {
        match self {
            Var::L => 0,
            Var::H => 1,
            Var::C(i) => i as usize + 1,
        }
    }

    fn from_index(i: usize) -> Var {
        match i {
            0 => Var::L,
            1 => Var::H,
            i => Var::C(i as u32 - 1),
        }
    }

    pub fn weight(self) -> u32 {
        match self {
            Var::L | Var::H => 1,
            Var::C(i) => i,
        }
    }

    pub fn name(self) -> String {
        match self {
            Var::L => "L".into(),
            Var::H => "H".into(),
            Var::C(i) => format!("c{i}"),
        }
    }

    pub fn parse(s: &str) -> Option<Var> {
        match s {
            "L" => Some(Var::L),
            "H" => Some(Var::H),
            _ => {
                let i: u32 = s.strip_prefix('c')?.parse().ok()?;
                (i >= 1 && s == format!("c{i}")).then_some(Var::C(i))
            }
        }
    }
}

/// Exponent vector indexed `[L, H, c1, c2, ...]` with trailing zeros trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: u32) -> Self {
        Self::one().with_exp(v, e)
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, u32)>) -> Self {
        let mut m = Self::one();
        for (v, e) in pairs {
            let cur = m.exp(v);
            m = m.with_exp(v, cur + e);
        }
        m
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.0.get(v.index()).copied().unwrap_or(0)
    }

    pub fn with_exp(&self, v: Var, e: u32) -> Self {
        let mut exps = self.0.clone();
        let i = v.index();
        if exps.len() <= i {
            exps.resize(i + 1, 0);
        }
        exps[i] = e;
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial(exps)
    }

    pub fn weight(&self) -> u32 {
        self.iter().map(|(v, e)| v.weight() * e).sum()
    }

    /// Nonzero exponents in variable order `L, H, c1, c2, ...`.
    pub fn iter(&self) -> impl Iterator<Item = (Var, u32)> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (Var::from_index(i), e))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (long, short) = if self.0.len() >= other.0.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut exps = long.0.clone();
        for (e, s) in exps.iter_mut().zip(&short.0) {
            *e += s;
        }
        Monomial(exps)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (v, e) in self.iter() {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", v.name())?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

type Component = BTreeMap<Monomial, UniPoly>;

fn add_into(acc: &mut Component, m: Monomial, p: &UniPoly) {
    if p.is_zero() {
        return;
    }
    match acc.get_mut(&m) {
        Some(cur) => {
            let sum = &*cur + p;
            if sum.is_zero() {
                acc.remove(&m);
            } else {
                *cur = sum;
            }
        }
        None => {
            acc.insert(m, p.clone());
        }
    }
}

fn comp_mul(a: &Component, b: &Component, qmax: u32) -> Component {
    let mut out = Component::new();
    for (ma, pa) in a {
        for (mb, pb) in b {
            let p = pa.mul_trunc(pb, qmax as usize);
            add_into(&mut out, ma.mul(mb), &p);
        }
    }
    out
}

fn comp_scale(a: &Component, c: &Rational) -> Component {
    let mut out = Component::new();
    for (m, p) in a {
        add_into(&mut out, m.clone(), &p.scale(c));
    }
    out
}

fn comp_mul_ypoly(a: &Component, y: &UniPoly, qmax: u32) -> Component {
    let mut out = Component::new();
    for (m, p) in a {
        add_into(&mut out, m.clone(), &p.mul_trunc(y, qmax as usize));
    }
    out
}

/// A weight- and y-truncated series over the rationals.
///
/// Canonical: every stored monomial has weight `<= wmax`, every y-polynomial
/// is nonzero with degree `<= qmax`. Equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WSeries {
    wmax: u32,
    qmax: u32,
    terms: BTreeMap<Monomial, UniPoly>,
}

impl WSeries {
    pub fn zero(wmax: u32, qmax: u32) -> Self {
        Self {
            wmax,
            qmax,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(wmax: u32, qmax: u32) -> Self {
        Self::constant(Rational::one(), wmax, qmax)
    }

    pub fn constant(c: Rational, wmax: u32, qmax: u32) -> Self {
        Self::term(Monomial::one(), 0, c, wmax, qmax)
    }

    pub fn int(n: i64, wmax: u32, qmax: u32) -> Self {
        Self::constant(rat(n), wmax, qmax)
    }

    /// `c · m · y^q`, dropped if out of range.
    pub fn term(m: Monomial, q: u32, c: Rational, wmax: u32, qmax: u32) -> Self {
        let mut s = Self::zero(wmax, qmax);
        s.insert(m, q, c);
        s
    }

    pub fn var(v: Var, wmax: u32, qmax: u32) -> Self {
        Self::term(Monomial::var(v), 0, Rational::one(), wmax, qmax)
    }

    pub fn y(wmax: u32, qmax: u32) -> Self {
        Self::term(Monomial::one(), 1, Rational::one(), wmax, qmax)
    }

    /// A weight-0 series given by a polynomial in y.
    pub fn from_ypoly(p: &UniPoly, wmax: u32, qmax: u32) -> Self {
        Self::term_poly(Monomial::one(), p, wmax, qmax)
    }

    /// `m · p(y)`, truncated.
    pub fn term_poly(m: Monomial, p: &UniPoly, wmax: u32, qmax: u32) -> Self {
        let mut s = Self::zero(wmax, qmax);
        s.insert_poly(m, p);
        s
    }

    /// Builds from `(monomial, y-degree, coefficient)` triples; repeated keys add.
    pub fn from_terms(
        terms: impl IntoIterator<Item = (Monomial, u32, Rational)>,
        wmax: u32,
        qmax: u32,
    ) -> Self {
        let mut s = Self::zero(wmax, qmax);
        for (m, q, c) in terms {
            s.insert(m, q, c);
        }
        s
    }

    fn insert(&mut self, m: Monomial, q: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        self.insert_poly(m, &UniPoly::monomial(c, q as usize));
    }

    fn insert_poly(&mut self, m: Monomial, p: &UniPoly) {
        if m.weight() > self.wmax {
            return;
        }
        let p = p.truncate(self.qmax as usize);
        add_into(&mut self.terms, m, &p);
    }

    fn from_components(comps: Vec<Component>, wmax: u32, qmax: u32) -> Self {
        let mut terms = BTreeMap::new();
        for comp in comps {
            terms.extend(comp);
        }
        Self { wmax, qmax, terms }
    }

    fn components(&self) -> Vec<Component> {
        let mut comps = vec![Component::new(); self.wmax as usize + 1];
        for (m, p) in &self.terms {
            comps[m.weight() as usize].insert(m.clone(), p.clone());
        }
        comps
    }

    pub fn wmax(&self) -> u32 {
        self.wmax
    }

    pub fn qmax(&self) -> u32 {
        self.qmax
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Flattened `(monomial, y-degree, coefficient)` view, canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, u32, &Rational)> + '_ {
        self.terms.iter().flat_map(|(m, p)| {
            p.coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(q, c)| (m, q as u32, c))
        })
    }

    pub fn num_terms(&self) -> usize {
        self.terms().count()
    }

    /// Monomials with their y-polynomials.
    pub fn ypoly_terms(&self) -> impl Iterator<Item = (&Monomial, &UniPoly)> + '_ {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial, q: u32) -> Rational {
        self.terms
            .get(m)
            .map(|p| p.coeff(q as usize))
            .unwrap_or_else(Rational::zero)
    }

    /// The y-polynomial multiplying monomial `m`.
    pub fn ypoly_of(&self, m: &Monomial) -> UniPoly {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn min_weight(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::weight).min()
    }

    /// Largest y-degree present.
    pub fn y_degree(&self) -> Option<u32> {
        self.terms
            .values()
            .filter_map(|p| p.degree())
            .max()
            .map(|d| d as u32)
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exp(v) > 0)
    }

    fn check_orders(&self, other: &Self) -> Result<()> {
        if self.wmax != other.wmax || self.qmax != other.qmax {
            return Err(Error::TruncationMismatch(
                self.wmax,
                self.qmax,
                other.wmax,
                other.qmax,
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_orders(other)?;
        let mut out = self.clone();
        for (m, p) in &other.terms {
            add_into(&mut out.terms, m.clone(), p);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&rat(-1))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            wmax: self.wmax,
            qmax: self.qmax,
            terms: comp_scale(&self.terms, c),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_orders(other)?;
        let a = self.components();
        let b = other.components();
        let mut out = Component::new();
        for (i, ca) in a.iter().enumerate() {
            if ca.is_empty() {
                continue;
            }
            for cb in b.iter().take(self.wmax as usize + 1 - i) {
                if cb.is_empty() {
                    continue;
                }
                for (m, p) in comp_mul(ca, cb, self.qmax) {
                    add_into(&mut out, m, &p);
                }
            }
        }
        Ok(Self {
            wmax: self.wmax,
            qmax: self.qmax,
            terms: out,
        })
    }

    /// Multiplies by a weight-0 polynomial in y.
    pub fn mul_ypoly(&self, p: &UniPoly) -> Self {
        Self {
            wmax: self.wmax,
            qmax: self.qmax,
            terms: comp_mul_ypoly(&self.terms, p, self.qmax),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.wmax, self.qmax);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// The weight-0 part as a polynomial in y.
    pub fn weight0_ypoly(&self) -> UniPoly {
        self.ypoly_of(&Monomial::one())
    }

    /// Multiplicative inverse, solved weight by weight.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.weight0_ypoly();
        if c0.coeff(0).is_zero() {
            return Err(Error::NotAUnit);
        }
        let q = self.qmax;
        let inv0 = c0
            .inverse_trunc(q as usize)
            .expect("nonzero constant term");
        let a = self.components();
        let mut b: Vec<Component> = Vec::with_capacity(a.len());
        let mut b0 = Component::new();
        add_into(&mut b0, Monomial::one(), &inv0);
        b.push(b0);
        let minus_inv0 = -&inv0;
        for k in 1..a.len() {
            let mut acc = Component::new();
            for j in 1..=k {
                if a[j].is_empty() || b[k - j].is_empty() {
                    continue;
                }
                for (m, p) in comp_mul(&a[j], &b[k - j], q) {
                    add_into(&mut acc, m, &p);
                }
            }
            b.push(comp_mul_ypoly(&acc, &minus_inv0, q));
        }
        Ok(Self::from_components(b, self.wmax, q))
    }

    /// `exp`, defined for series without weight-0 content.
    pub fn exp(&self) -> Result<Self> {
        if self.min_weight() == Some(0) {
            return Err(Error::ExpDomain);
        }
        let q = self.qmax;
        let a = self.components();
        // k E_k = sum_{j=1}^k j A_j E_{k-j}
        let mut e: Vec<Component> = Vec::with_capacity(a.len());
        let mut e0 = Component::new();
        add_into(&mut e0, Monomial::one(), &UniPoly::one());
        e.push(e0);
        for k in 1..a.len() {
            let mut acc = Component::new();
            for j in 1..=k {
                if a[j].is_empty() || e[k - j].is_empty() {
                    continue;
                }
                let prod = comp_mul(&a[j], &e[k - j], q);
                for (m, p) in comp_scale(&prod, &rat(j as i64)) {
                    add_into(&mut acc, m, &p);
                }
            }
            e.push(comp_scale(&acc, &Rational::new(1.into(), (k as i64).into())));
        }
        Ok(Self::from_components(e, self.wmax, q))
    }

    /// `log`, defined for series whose weight-0 part is exactly 1.
    pub fn log(&self) -> Result<Self> {
        if self.weight0_ypoly() != UniPoly::one() {
            return Err(Error::LogDomain);
        }
        let q = self.qmax;
        let a = self.components();
        // k A_k = sum_{j=1}^k j L_j A_{k-j}, A_0 = 1
        let mut l: Vec<Component> = vec![Component::new()];
        for k in 1..a.len() {
            let mut acc = comp_scale(&a[k], &rat(k as i64));
            for j in 1..k {
                if l[j].is_empty() || a[k - j].is_empty() {
                    continue;
                }
                let prod = comp_mul(&l[j], &a[k - j], q);
                for (m, p) in comp_scale(&prod, &rat(-(j as i64))) {
                    add_into(&mut acc, m, &p);
                }
            }
            l.push(comp_scale(&acc, &Rational::new(1.into(), (k as i64).into())));
        }
        Ok(Self::from_components(l, self.wmax, q))
    }

    /// `Σ coeffs[k] · self^k`; `self` must have no weight-0 part.
    pub fn compose_univariate(coeffs: &UniPoly, arg: &Self) -> Result<Self> {
        if arg.min_weight() == Some(0) {
            return Err(Error::Substitution {
                var: "t".into(),
                reason: "argument has weight-0 content".into(),
            });
        }
        let n = coeffs.degree().map_or(0, |d| d.min(arg.wmax as usize));
        let mut acc = Self::zero(arg.wmax, arg.qmax);
        for k in (0..=n).rev() {
            acc = &(&acc * arg) + &Self::constant(coeffs.coeff(k), arg.wmax, arg.qmax);
        }
        Ok(acc)
    }

    /// Replaces `var` by `replacement` and re-truncates.
    ///
    /// The replacement must not lower weight (min weight `>= weight(var)`),
    /// otherwise retained coefficients would depend on discarded ones.
    pub fn substitute(&self, var: Var, replacement: &Self) -> Result<Self> {
        self.check_orders(replacement)?;
        if let Some(w) = replacement.min_weight() {
            if w == 0 {
                return Err(Error::Substitution {
                    var: var.name(),
                    reason: "replacement has weight-0 content".into(),
                });
            }
            if w < var.weight() {
                return Err(Error::Substitution {
                    var: var.name(),
                    reason: format!(
                        "replacement has weight {w} < {}; retained terms would need discarded ones",
                        var.weight()
                    ),
                });
            }
        }
        let mut by_exp: BTreeMap<u32, Self> = BTreeMap::new();
        for (m, p) in &self.terms {
            let e = m.exp(var);
            by_exp
                .entry(e)
                .or_insert_with(|| Self::zero(self.wmax, self.qmax))
                .insert_poly(m.with_exp(var, 0), p);
        }
        let mut out = Self::zero(self.wmax, self.qmax);
        let mut power = Self::one(self.wmax, self.qmax);
        let mut cur = 0;
        for (e, rest) in by_exp {
            while cur < e {
                power = &power * replacement;
                cur += 1;
            }
            out = &out + &(&rest * &power);
        }
        Ok(out)
    }

    /// Multiplies the weight-`k` part by `(1+y)^k`, i.e. `t -> t(1+y)`.
    pub fn reweight_by_one_plus_y(&self) -> Self {
        let one_plus_y = UniPoly::from_ints(&[1, 1]);
        let mut powers = vec![UniPoly::one()];
        for k in 1..=self.wmax as usize {
            let next = powers[k - 1].mul_trunc(&one_plus_y, self.qmax as usize);
            powers.push(next);
        }
        let mut out = Self::zero(self.wmax, self.qmax);
        for (m, p) in &self.terms {
            let w = m.weight() as usize;
            out.insert_poly(m.clone(), &p.mul_trunc(&powers[w], self.qmax as usize));
        }
        out
    }

    /// Formal partial derivative; truncation orders are kept as-is.
    pub fn diff(&self, var: Var) -> Self {
        let mut out = Self::zero(self.wmax, self.qmax);
        for (m, p) in &self.terms {
            let e = m.exp(var);
            if e > 0 {
                out.insert_poly(m.with_exp(var, e - 1), &p.scale(&rat(e as i64)));
            }
        }
        out
    }

    pub fn diff_h(&self) -> Self {
        self.diff(Var::H)
    }

    /// The weight-`k`, `y^q` part as a y-free homogeneous series.
    pub fn coeff(&self, k: u32, q: u32) -> Result<Self> {
        if k > self.wmax || q > self.qmax {
            return Err(Error::OutOfRange {
                weight: k,
                q,
                wmax: self.wmax,
                qmax: self.qmax,
            });
        }
        let mut out = Self::zero(self.wmax, self.qmax);
        for (m, p) in &self.terms {
            if m.weight() == k {
                out.insert(m.clone(), 0, p.coeff(q as usize));
            }
        }
        Ok(out)
    }

    /// The `y^q` coefficient (all weights), y-free.
    pub fn y_coeff(&self, q: u32) -> Self {
        let mut out = Self::zero(self.wmax, self.qmax);
        for (m, p) in &self.terms {
            out.insert(m.clone(), 0, p.coeff(q as usize));
        }
        out
    }

    /// The weight-`k` homogeneous part (all y-degrees).
    pub fn weight_part(&self, k: u32) -> Self {
        let mut out = Self::zero(self.wmax, self.qmax);
        for (m, p) in &self.terms {
            if m.weight() == k {
                out.insert_poly(m.clone(), p);
            }
        }
        out
    }

    /// Re-truncates to smaller orders. Widening is refused: the missing
    /// coefficients are unknown.
    pub fn truncate(&self, wmax: u32, qmax: u32) -> Result<Self> {
        if wmax > self.wmax {
            return Err(Error::TruncationDeficit {
                needed: wmax,
                have: self.wmax,
            });
        }
        if qmax > self.qmax {
            return Err(Error::OutOfRange {
                weight: wmax,
                q: qmax,
                wmax: self.wmax,
                qmax: self.qmax,
            });
        }
        let mut out = Self::zero(wmax, qmax);
        for (m, p) in &self.terms {
            out.insert_poly(m.clone(), p);
        }
        Ok(out)
    }

    /// Re-labels orders without checking. Only sound when the caller knows
    /// the series is exact (e.g. a polynomial whose terms all fit).
    pub fn with_orders_exact(&self, wmax: u32, qmax: u32) -> Self {
        let mut out = Self::zero(wmax, qmax);
        for (m, p) in &self.terms {
            out.insert_poly(m.clone(), p);
        }
        out
    }

    /// Applies `f(weight, ypoly)` to every term's y-polynomial.
    pub fn map_by_weight(&self, f: impl Fn(u32, &UniPoly) -> UniPoly) -> Self {
        let mut out = Self::zero(self.wmax, self.qmax);
        for (m, p) in &self.terms {
            out.insert_poly(m.clone(), &f(m.weight(), p));
        }
        out
    }

    /// Applies `f` to every monomial; images landing on the same monomial add.
    pub fn map_monomials(
        &self,
        wmax: u32,
        f: impl Fn(&Monomial) -> Option<(Monomial, Rational)>,
    ) -> Self {
        let mut out = Self::zero(wmax, self.qmax);
        for (m, p) in &self.terms {
            if let Some((m2, c)) = f(m) {
                out.insert_poly(m2, &p.scale(&c));
            }
        }
        out
    }
}

impl Add for &WSeries {
    type Output = WSeries;
    /// Panics on mismatched truncation orders; see [`WSeries::add`].
    fn add(self, rhs: &WSeries) -> WSeries {
        WSeries::add(self, rhs).expect("series truncation mismatch")
    }
}

impl Sub for &WSeries {
    type Output = WSeries;
    fn sub(self, rhs: &WSeries) -> WSeries {
        WSeries::sub(self, rhs).expect("series truncation mismatch")
    }
}

impl Mul for &WSeries {
    type Output = WSeries;
    fn mul(self, rhs: &WSeries) -> WSeries {
        WSeries::mul(self, rhs).expect("series truncation mismatch")
    }
}

impl Neg for &WSeries {
    type Output = WSeries;
    fn neg(self) -> WSeries {
        WSeries::neg(self)
    }
}

impl fmt::Display for WSeries {
    /// Human-readable `(...) + (...)*y + ...`, monomials by weight then order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first_group = true;
        for q in 0..=self.qmax {
            let part = self.y_coeff(q);
            if part.is_zero() {
                continue;
            }
            if !first_group {
                write!(f, " + ")?;
            }
            first_group = false;
            write!(f, "(")?;
            let mut entries: Vec<_> = part.terms().collect();
            entries.sort_by(|a, b| (a.0.weight(), a.0).cmp(&(b.0.weight(), b.0)));
            for (i, (m, _, c)) in entries.iter().enumerate() {
                let neg = *c < &Rational::zero();
                let mag = if neg { -(*c).clone() } else { (*c).clone() };
                match (i, neg) {
                    (0, true) => write!(f, "-")?,
                    (0, false) => {}
                    (_, true) => write!(f, " - ")?,
                    (_, false) => write!(f, " + ")?,
                }
                if m.is_one() {
                    write!(f, "{mag}")?;
                } else if mag.is_one() {
                    write!(f, "{m}")?;
                } else {
                    write!(f, "{mag}*{m}")?;
                }
            }
            write!(f, ")")?;
            match q {
                0 => {}
                1 => write!(f, "*y")?,
                _ => write!(f, "*y^{q}")?,
            }
        }
        Ok(())
    }
}
