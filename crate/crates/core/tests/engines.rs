mod common;

use common::*;
use num_bigint::BigInt;
use pgcd::counts::{binomial, run_counts};
use pgcd::habicht::epgcd;
use pgcd::oracle::verify_case_table;
use pgcd::recursive::pgcd_recursive;
use pgcd::subres::{enumerate_cells, glex_compare};
use pgcd::sylvester::{pgcd, pgcd_monic};
use std::cmp::Ordering;

#[test]
fn habicht_equals_determinants_under_monic_substitution() {
    for d in [vec![2, 2, 3], vec![2, 3, 3], vec![2, 2, 2, 2], vec![1, 2, 2, 3], vec![3, 5]] {
        let d = dv(&d);
        let h = epgcd::<BigInt>(&d).unwrap();
        let s = pgcd::<BigInt>(&d).unwrap();
        let one = BigInt::from(1);
        for (hc, sc) in h.cases.iter().zip(&s.cases) {
            assert_eq!(hc.delta, sc.delta);
            assert_eq!(hc.big_r, sc.big_r.substitute(d.leading_param(0), &one), "{d} {:?}", hc.delta);
            assert_eq!(hc.r, sc.r.substitute(d.leading_param(0), &one));
        }
        assert_eq!(h.cases, pgcd_monic::<BigInt>(&d).unwrap().cases);
    }
}

#[test]
fn cells_are_counted_and_strictly_descending() {
    for d0 in 1..=5 {
        for n in 1..=4 {
            let cells = enumerate_cells(d0, n);
            assert_eq!(binomial(d0 + n, n), cells.len().into(), "d0={d0} n={n}");
            for w in cells.windows(2) {
                assert_eq!(glex_compare(&w[0], &w[1]).unwrap(), Ordering::Greater);
            }
            if n >= 2 {
                let m = d0 + 1;
                assert_eq!(run_counts(d0, m, n).unwrap().proposed, cells.len().into());
            }
        }
    }
}

#[test]
fn recursive_with_two_inputs_is_the_determinant_table() {
    for d in [vec![1, 1], vec![2, 4], vec![3, 5], vec![3, 3]] {
        let d = dv(&d);
        let r = pgcd_recursive::<BigInt>(&d).unwrap();
        let s = pgcd::<BigInt>(&d).unwrap();
        let pairs: Vec<_> = r.cases.iter().map(|c| (c.delta.clone(), c.big_r.clone(), c.r.clone())).collect();
        let expect: Vec<_> = s.cases.iter().map(|c| (c.delta.clone(), c.big_r.clone(), c.r.clone())).collect();
        assert_eq!(pairs, expect, "{d}");
    }
}

#[test]
fn recursive_leaf_counts() {
    for d in [vec![2, 2, 2], vec![2, 2, 2, 2], vec![3, 3, 4], vec![1, 3, 3, 3, 3]] {
        let d = dv(&d);
        let t = pgcd_recursive::<BigInt>(&d).unwrap();
        assert_eq!(binomial(d.d0() + d.n(), d.n()), t.len().into(), "{d}");
        for c in &t.cases {
            assert_eq!(c.delta.len(), d.n());
            assert!(c.delta.iter().sum::<usize>() <= d.d0());
            assert!(c.conditions.last().is_some_and(|g| !g.vanishes));
        }
    }
}

#[test]
fn recursive_nests_determinants() {
    let d = dv(&[3, 3, 3, 3]);
    assert_eq!(pgcd_recursive::<BigInt>(&d).unwrap().max_param_degree(), 16);
    assert_eq!(pgcd::<BigInt>(&d).unwrap().max_param_degree(), 6);
}

#[test]
fn oracle_accepts_all_engines_on_small_inputs() {
    for d in [vec![1, 1, 1], vec![2, 3], vec![2, 2, 2, 2], vec![1, 2, 2, 3]] {
        let d = dv(&d);
        for (name, t) in [
            ("sylvester", pgcd::<BigInt>(&d).unwrap()),
            ("habicht", epgcd::<BigInt>(&d).unwrap()),
            ("recursive", pgcd_recursive::<BigInt>(&d).unwrap()),
        ] {
            let rep = verify_case_table(&t, 120, 5, 6).unwrap();
            assert!(rep.ok(), "{name} {d}: {:?}", rep.failures.first());
        }
    }
}

#[test]
fn normalized_tables_still_verify() {
    let d = dv(&[2, 2, 3]);
    for t in [pgcd::<BigInt>(&d).unwrap(), epgcd::<BigInt>(&d).unwrap(), pgcd_recursive::<BigInt>(&d).unwrap()] {
        let n = t.normalized().unwrap();
        assert!(verify_case_table(&n, 100, 9, 20).unwrap().ok());
        for c in &n.cases {
            assert!(c.big_r.content() == BigInt::from(1) || c.big_r.is_zero());
        }
    }
}

#[test]
fn explicit_guards_match_first_match_selection() {
    let d = dv(&[2, 2, 2]);
    let t = pgcd::<BigInt>(&d).unwrap();
    let g = t.explicit_conditions(3);
    assert_eq!(g.len(), 4);
    assert!(g[..3].iter().all(|c| c.vanishes));
    assert_eq!(g[3].poly, t.cases[3].r);
}

#[test]
fn generic_coefficient_types_agree() {
    let d = dv(&[2, 2, 2]);
    let wide = pgcd::<i128>(&d).unwrap();
    let big = pgcd::<BigInt>(&d).unwrap();
    assert_eq!(
        pgcd::serial::to_json(&wide, false),
        pgcd::serial::to_json(&big, false)
    );
}
