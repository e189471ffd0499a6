//! Property tests over seeded random instances.

use num::BigInt;
use proptest::prelude::*;

use mine::cost::{ExtendedCost, Finite};
use mine::generate::{random_any, random_finite, random_three_label_drawn, random_w3sat, rng};
use mine::geometry::{list_crossings, validate_general_position, Point, Rational};
use mine::instance::{big_m, evaluate, Labeling};
use mine::io::{parse_instance, parse_wcnf3, serialize_instance, serialize_wcnf3};
use mine::solvers::{min_degree_order, solve_brute_force_with_limit, solve_elimination, DEFAULT_BRUTE_LIMIT};

fn labelings(counts: &[usize]) -> Vec<Vec<usize>> {
    let mut all = vec![vec![]];
    for &k in counts {
        all = all.into_iter().flat_map(|y| (0..k).map(move |l| [y.clone(), vec![l]].concat())).collect();
    }
    all
}

fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn crossings_survive_similarity(seed in any::<u64>(), num in 1i64..50, den in 1i64..50, dx in -99i64..99, dy in -99i64..99) {
        let (i, d) = random_three_label_drawn(&mut rng(seed), 6, 0, 4).unwrap();
        let moved = d.transformed(&rational(num, den), &Point::new(rational(dx, 7), rational(dy, 3)));
        prop_assert!(validate_general_position(&i, &moved).is_ok());
        let pairs = |d| list_crossings(&i, d).unwrap().into_iter().map(|c| (c.edge_a, c.edge_b)).collect::<Vec<_>>();
        prop_assert_eq!(pairs(&d), pairs(&moved));
    }

    #[test]
    fn big_m_exceeds_every_energy(seed in any::<u64>()) {
        let mut r = rng(seed);
        let i = random_finite(&mut r, vec![2, 3, 2, 3], 0.6, 1000);
        let m = big_m(&i).unwrap();
        for y in labelings(i.label_counts()) {
            let Finite(e) = evaluate(&i, &Labeling::new(y)).unwrap() else { unreachable!("finite instance") };
            prop_assert!(e.abs() < m);
        }
    }

    #[test]
    fn instance_text_round_trips(seed in any::<u64>(), with_drawing in any::<bool>()) {
        let (i, d) = random_any(&mut rng(seed), 7, with_drawing);
        let text = serialize_instance(&i, d.as_ref()).unwrap();
        let (i2, d2) = parse_instance(&text).unwrap();
        prop_assert_eq!(&i, &i2);
        prop_assert_eq!(&d, &d2);
        prop_assert_eq!(text, serialize_instance(&i2, d2.as_ref()).unwrap());
    }

    #[test]
    fn formula_text_round_trips(seed in any::<u64>()) {
        let s = random_w3sat(&mut rng(seed), 8, 6, 9);
        prop_assert_eq!(parse_wcnf3(&serialize_wcnf3(&s)).unwrap(), s);
    }

    #[test]
    fn elimination_matches_brute_force(seed in any::<u64>()) {
        let i = random_finite(&mut rng(seed), vec![3, 2, 3, 2, 3], 0.5, 20);
        let exact = solve_elimination(&i, &min_degree_order(&i)).unwrap();
        let brute = solve_brute_force_with_limit(&i, DEFAULT_BRUTE_LIMIT).unwrap();
        prop_assert_eq!(exact.value, brute.value);
        prop_assert_eq!(evaluate(&i, &exact.labeling).unwrap(), exact.value);
        prop_assert!(matches!(exact.value, ExtendedCost::Finite(_)));
    }
}
