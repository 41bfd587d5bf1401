//! Text and LaTeX renderings.

use std::collections::BTreeMap;
use std::fmt::Write;

use hirzebruch::rational::is_integer;
use hirzebruch::{Monomial, Rational, UniPoly, Var, WSeries};
use num_traits::{One, Signed, Zero};

/// `U^4+2U^3+U^2-U-3` for integer polynomials, `1/2*U` style otherwise.
pub fn compact_poly(p: &UniPoly, var: &str) -> String {
    let text = p.display_in(var).to_string();
    if p.coeffs().iter().all(is_integer) {
        text.replace('*', "")
    } else {
        text
    }
}

fn latex_var(v: Var) -> String {
    match v {
        Var::C(i) => format!("c_{{{i}}}"),
        other => other.name(),
    }
}

fn latex_monomial(m: &Monomial) -> String {
    m.iter()
        .map(|(v, e)| match e {
            1 => latex_var(v),
            _ => format!("{}^{{{e}}}", latex_var(v)),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn latex_magnitude(c: &Rational) -> String {
    if is_integer(c) {
        c.numer().to_string()
    } else {
        format!(r"\frac{{{}}}{{{}}}", c.numer(), c.denom())
    }
}

/// Sum of terms sorted by `(weight, monomial)`.
fn latex_sum(terms: &[(&Monomial, &Rational)]) -> String {
    let mut out = String::new();
    for (i, (m, c)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if m.is_one() {
            out.push_str(&latex_magnitude(&mag));
        } else {
            if !mag.is_one() {
                out.push_str(&latex_magnitude(&mag));
                out.push(' ');
            }
            out.push_str(&latex_monomial(m));
        }
    }
    out
}

/// Groups by y-degree: `\left(...\right) + \left(...\right) y + ...`.
pub fn latex_series(s: &WSeries) -> String {
    let mut by_q: BTreeMap<u32, Vec<(&Monomial, &Rational)>> = BTreeMap::new();
    for (m, q, c) in s.terms() {
        by_q.entry(q).or_default().push((m, c));
    }
    if by_q.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (q, mut terms)) in by_q.into_iter().enumerate() {
        terms.sort_by(|a, b| (a.0.weight(), a.0).cmp(&(b.0.weight(), b.0)));
        if i > 0 {
            out.push_str(" + ");
        }
        let _ = write!(out, r"\left({}\right)", latex_sum(&terms));
        match q {
            0 => {}
            1 => out.push_str(" y"),
            _ => {
                let _ = write!(out, " y^{{{q}}}");
            }
        }
    }
    out
}

/// Plain text, one line per y-degree.
pub fn text_series(s: &WSeries) -> String {
    let mut out = String::new();
    for q in 0..=s.qmax() {
        let part = s.y_coeff(q);
        if part.is_zero() {
            continue;
        }
        let _ = writeln!(out, "y^{q}: {part}");
    }
    if out.is_empty() {
        out.push_str("0\n");
    }
    out
}

/// Integers print bare, other values as `num/den`.
pub fn text_rational(r: &Rational) -> String {
    if r.is_zero() || is_integer(r) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hirzebruch::rational::ratio;

    #[test]
    fn compact() {
        assert_eq!(compact_poly(&UniPoly::from_ints(&[-3, -1, 1, 2, 1]), "U"), "U^4+2U^3+U^2-U-3");
        assert_eq!(compact_poly(&UniPoly::from_ints(&[1, -1]), "U"), "-U+1");
    }

    #[test]
    fn latex_is_stable() {
        let s = WSeries::from_terms(
            [
                (Monomial::from_pairs([(Var::L, 1), (Var::C(1), 1)]), 0, ratio(-1, 12)),
                (Monomial::var(Var::L), 0, ratio(3, 1)),
                (Monomial::one(), 2, ratio(1, 1)),
            ],
            2,
            2,
        );
        let tex = latex_series(&s);
        assert_eq!(tex, r"\left(3 L - \frac{1}{12} L c_{1}\right) + \left(1\right) y^{2}");
        assert_eq!(tex, latex_series(&s.clone()));
    }
}
