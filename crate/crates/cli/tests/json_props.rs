//! The JSON record format is lossless for arbitrary truncated series.

use hirzebruch::rational::ratio;
use hirzebruch::{Monomial, Var, WSeries};
use hirzebruch_cli::records::{emit, parse, SeriesDocument};
use proptest::prelude::*;

fn series() -> impl Strategy<Value = WSeries> {
    (1u32..=6, 0u32..=4).prop_flat_map(|(wmax, qmax)| {
        prop::collection::vec(
            (0..=3u32, 0..=2u32, 0..=2u32, 0..=1u32, 0..=qmax, -50i64..=50, 1i64..=12),
            0..20,
        )
        .prop_map(move |raw| {
            let terms = raw.into_iter().filter_map(|(l, h, c1, c2, q, n, d)| {
                let m = Monomial::from_pairs([(Var::L, l), (Var::H, h), (Var::C(1), c1), (Var::C(2), c2)]);
                (m.weight() <= wmax).then(|| (m, q, ratio(n, d)))
            });
            WSeries::from_terms(terms, wmax, qmax)
        })
    })
}

proptest! {
    #[test]
    fn parse_inverts_emit(s in series()) {
        let text = emit(&s);
        let back = parse(&text).unwrap();
        prop_assert_eq!(&back, &s);
        prop_assert_eq!(emit(&back), text);
    }

    #[test]
    fn records_are_sorted_and_exact(s in series()) {
        let doc = SeriesDocument::from_series(&s);
        let keys: Vec<_> = doc.records.iter().map(|r| (r.t_deg, r.y_deg)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        sorted.dedup();
        prop_assert_eq!(keys, sorted);
        for r in &doc.records {
            prop_assert!(!r.terms.is_empty());
            for t in &r.terms {
                prop_assert!(t.coeff.contains('/'));
            }
        }
    }
}
