//! Lossless JSON encoding of truncated series.
//!
//! A series becomes one record per nonzero `(t-degree, y-degree)` block.
//! Coefficients are always `"num/den"` strings.

use std::collections::BTreeMap;

use hirzebruch::rational::{parse_rational, to_fraction_string};
use hirzebruch::{Monomial, Var, WSeries};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermRecord {
    pub exps: BTreeMap<String, u32>,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputRecord {
    pub t_deg: u32,
    pub y_deg: u32,
    pub terms: Vec<TermRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeriesDocument {
    pub wmax: u32,
    pub qmax: u32,
    pub records: Vec<OutputRecord>,
}

fn term_record(m: &Monomial, c: &hirzebruch::Rational) -> TermRecord {
    TermRecord {
        exps: m.iter().map(|(v, e)| (v.name(), e)).collect(),
        coeff: to_fraction_string(c),
    }
}

impl SeriesDocument {
    /// Records sorted by `(t_deg, y_deg)`, terms in monomial order.
    pub fn from_series(s: &WSeries) -> Self {
        let mut blocks: BTreeMap<(u32, u32), Vec<TermRecord>> = BTreeMap::new();
        for (m, q, c) in s.terms() {
            blocks
                .entry((m.weight(), q))
                .or_default()
                .push(term_record(m, c));
        }
        let records = blocks
            .into_iter()
            .map(|((t_deg, y_deg), terms)| OutputRecord { t_deg, y_deg, terms })
            .collect();
        Self {
            wmax: s.wmax(),
            qmax: s.qmax(),
            records,
        }
    }

    pub fn to_series(&self) -> Result<WSeries, String> {
        let mut triples = Vec::new();
        for (i, rec) in self.records.iter().enumerate() {
            if rec.t_deg > self.wmax || rec.y_deg > self.qmax {
                return Err(format!(
                    "records[{i}]: (t_deg {}, y_deg {}) is outside (wmax {}, qmax {})",
                    rec.t_deg, rec.y_deg, self.wmax, self.qmax
                ));
            }
            for (j, term) in rec.terms.iter().enumerate() {
                let at = format!("records[{i}].terms[{j}]");
                let m = parse_exps(&term.exps).map_err(|e| format!("{at}.exps: {e}"))?;
                if m.weight() != rec.t_deg {
                    return Err(format!(
                        "{at}: monomial {m} has weight {}, record says {}",
                        m.weight(),
                        rec.t_deg
                    ));
                }
                let c = parse_rational(&term.coeff)
                    .ok_or_else(|| format!("{at}.coeff: {:?} is not num/den", term.coeff))?;
                triples.push((m, rec.y_deg, c));
            }
        }
        Ok(WSeries::from_terms(triples, self.wmax, self.qmax))
    }
}

/// `{"L": 2, "c1": 1}` to a monomial; `H` is accepted for fiber classes.
pub fn parse_exps(exps: &BTreeMap<String, u32>) -> Result<Monomial, String> {
    let mut pairs = Vec::with_capacity(exps.len());
    for (name, &e) in exps {
        let v = Var::parse(name).ok_or_else(|| format!("unknown variable {name:?}"))?;
        pairs.push((v, e));
    }
    Ok(Monomial::from_pairs(pairs))
}

pub fn emit(s: &WSeries) -> String {
    serde_json::to_string_pretty(&SeriesDocument::from_series(s)).expect("plain data")
}

pub fn parse(text: &str) -> Result<WSeries, String> {
    let doc: SeriesDocument = serde_json::from_str(text)
        .map_err(|e| format!("line {}, column {}: {e}", e.line(), e.column()))?;
    doc.to_series()
}

#[cfg(test)]
mod tests {
    use super::*;
    use hirzebruch::rational::ratio;

    #[test]
    fn round_trip_small() {
        let s = WSeries::from_terms(
            [
                (Monomial::one(), 0, ratio(1, 1)),
                (Monomial::var(Var::L), 1, ratio(-13, 2)),
                (Monomial::from_pairs([(Var::L, 1), (Var::C(2), 1)]), 0, ratio(5, 12)),
            ],
            3,
            2,
        );
        let text = emit(&s);
        assert!(text.contains("\"coeff\": \"1/1\""));
        assert_eq!(parse(&text).unwrap(), s);
    }

    #[test]
    fn weight_mismatch_rejected() {
        let text = r#"{"wmax":3,"qmax":0,"records":[{"t_deg":1,"y_deg":0,"terms":[{"exps":{"c2":1},"coeff":"1/1"}]}]}"#;
        assert!(parse(text).unwrap_err().contains("weight 2"));
    }
}
