//! Randomised invariants over chains, critical points and the text formats.

use num_integer::Integer;
use proptest::prelude::*;

use critical_curves::chain::{curve_count, decompose, Chain};
use critical_curves::farey::farey_sequence;
use critical_curves::orbit::{brute_force_critical_word, code_orbit, CriticalPoint, Sign};
use critical_curves::point::{
    available_quadrants, dominant_params, dominant_words, pencil_endpoint, pencil_params, pencil_table, point_report,
};
use critical_curves::triple::{concurrency_oracle, triple_points};
use critical_curves::verify;
use critical_curves::{Rational, Word};

fn fraction() -> impl Strategy<Value = (i64, i64)> {
    (1i64..80).prop_flat_map(|q| (0..=q, Just(q))).prop_filter("reduced", |(p, q)| p.gcd(q) == 1)
}

fn interior_point(max_q: i64) -> impl Strategy<Value = CriticalPoint> {
    (2..=max_q)
        .prop_flat_map(|q| (0..=q, Just(q), 1..q))
        .prop_filter("reduced", |(p, q, _)| p.gcd(q) == 1)
        .prop_map(|(p, q, k)| CriticalPoint::new(Rational::frac(p, q), Rational::frac(k, q)).unwrap())
}

fn any_point(max_q: i64) -> impl Strategy<Value = CriticalPoint> {
    (1..=max_q)
        .prop_flat_map(|q| (0..=q, Just(q), 0..=q))
        .prop_filter("reduced", |(p, q, _)| p.gcd(q) == 1)
        .prop_map(|(p, q, k)| CriticalPoint::new(Rational::frac(p, q), Rational::frac(k, q)).unwrap())
}

fn chain(max: i64) -> impl Strategy<Value = Chain> {
    (-max..=max)
        .prop_filter("nonzero", |i| *i != 0)
        .prop_flat_map(|i| (Just(i), if i > 0 { 0..i } else { i..0 }))
        .prop_map(|(i, j)| Chain::new(i, j).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rational_text_round_trips((p, q) in fraction()) {
        let x = Rational::frac(p, q);
        prop_assert_eq!(x.to_string().parse::<Rational>().unwrap(), x.clone());
        let json = serde_json::to_string(&x).unwrap();
        prop_assert_eq!(serde_json::from_str::<Rational>(&json).unwrap(), x);
    }

    #[test]
    fn farey_neighbours_are_unimodular(n in 1u64..60) {
        let f = farey_sequence(n, &Rational::zero(), &Rational::one()).unwrap();
        for w in f.windows(2) {
            let det = w[1].numer() * w[0].denom() - w[0].numer() * w[1].denom();
            prop_assert_eq!(det, 1.into());
            prop_assert!(w[0].denom() + w[1].denom() > n.into());
        }
    }

    #[test]
    fn curves_tile_their_chain(c in chain(60)) {
        let d = decompose(&c).unwrap();
        prop_assert_eq!(d.curves.len() as u64, curve_count(&c).unwrap());
        prop_assert_eq!(d.farey_points.len(), d.curves.len() + 1);
        prop_assert_eq!(&d.curves[0].theta_lo, &c.theta_minus);
        prop_assert_eq!(&d.curves.last().unwrap().theta_hi, &c.theta_plus);
        for w in d.curves.windows(2) {
            prop_assert_eq!(&w[0].theta_hi, &w[1].theta_lo);
            prop_assert_ne!(&w[0].word, &w[1].word);
        }
    }

    #[test]
    fn curve_words_are_orbit_codings(c in chain(40)) {
        let d = decompose(&c).unwrap();
        let n = c.i.unsigned_abs() as usize;
        for curve in &d.curves {
            let mid = curve.theta_lo.mediant(&curve.theta_hi);
            let rho = c.rho_at(&mid);
            let start = if c.i > 0 { Rational::zero() } else { rho.clone() };
            prop_assert_eq!(&curve.word, &code_orbit(&mid, &rho, &start, n).unwrap());
        }
    }

    #[test]
    fn dominants_are_least_solutions(z in interior_point(50)) {
        let dom = dominant_params(&z).unwrap();
        let plus = brute_force_critical_word(&z, Sign::Positive).unwrap();
        let minus = brute_force_critical_word(&z, Sign::Negative).unwrap();
        prop_assert_eq!(dom.plus, (plus.i, plus.j));
        prop_assert_eq!(dom.minus, (minus.i, minus.j));
        prop_assert_eq!(&num_bigint::BigInt::from(plus.i - minus.i), z.q());
        let (u_plus, u_minus) = dominant_words(&z).unwrap();
        prop_assert_eq!(u_plus, plus.word);
        prop_assert_eq!(u_minus, minus.word);
    }

    #[test]
    fn pencil_chains_pass_through_their_point(z in any_point(30), ell in 0u64..8) {
        for sigma in available_quadrants(&z) {
            let (i, j) = pencil_params(&z, sigma, ell).unwrap();
            prop_assert_eq!(&z.theta * i - j, z.rho.clone());
            if ell > 0 {
                let e = pencil_endpoint(&z, sigma, ell).unwrap().point;
                prop_assert_eq!(&e.theta * i - j, e.rho.clone());
                prop_assert!(e.theta != z.theta);
                prop_assert_eq!(e.theta > z.theta, sigma.is_right());
            }
        }
    }

    #[test]
    fn exactly_two_sign_triples_are_concurrent(z in interior_point(60)) {
        let rows = concurrency_oracle(&z).unwrap();
        prop_assert_eq!(rows.len(), 8);
        prop_assert_eq!(rows.iter().filter(|r| r.concurrent()).count(), 2);
        for r in &rows {
            prop_assert_eq!(r.concurrent(), r.determinant == 0);
        }
        let rep = triple_points(&z).unwrap();
        prop_assert_eq!(rep.points.len(), 2);
    }

    #[test]
    fn oracle_checks_hold_on_random_points(z in any_point(24)) {
        prop_assert!(verify::check_boundary_clauses(&z).is_ok());
        for sigma in available_quadrants(&z) {
            prop_assert_eq!(verify::check_pencil_endpoints(&z, sigma, 4), Ok(()));
            prop_assert_eq!(verify::check_pencil_words(&z, sigma, 2), Ok(()));
        }
        if !z.on_boundary_row() {
            prop_assert_eq!(verify::check_triple_points(&z), Ok(()));
        }
    }

    #[test]
    fn reports_round_trip_through_json(z in any_point(20)) {
        let report = point_report(&z).unwrap();
        let json = serde_json::to_string(&report).unwrap();
        prop_assert_eq!(serde_json::from_str::<critical_curves::point::PointReport>(&json).unwrap(), report);
        let table = pencil_table(&z, 2).unwrap();
        let json = serde_json::to_string(&table).unwrap();
        prop_assert_eq!(serde_json::from_str::<critical_curves::point::PencilTable>(&json).unwrap(), table);
    }

    #[test]
    fn words_parse_back(letters in proptest::collection::vec(any::<bool>(), 0..40)) {
        let text: String = letters.iter().map(|&a| if a { 'a' } else { 'b' }).collect();
        let w: Word = text.parse().unwrap();
        prop_assert_eq!(w.len(), letters.len());
        prop_assert_eq!(w.to_string(), text);
        prop_assert_eq!(w.to_power_string().parse::<Word>().unwrap(), w);
    }
}
