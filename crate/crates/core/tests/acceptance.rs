//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

mod common;

use std::time::{Duration, Instant};

use common::*;
use num_bigint::BigInt;
use pgcd::counts::{binomial, run_counts};
use pgcd::detmat::{bareiss_det, determinant_polynomial, naive_det, naive_determinant_polynomial};
use pgcd::habicht::epgcd;
use pgcd::oracle::verify_case_table;
use pgcd::recursive::pgcd_recursive;
use pgcd::subres::{enumerate_cells, formal_polys, make_delta_index, subresultant_of, two_poly_subresultant};
use pgcd::sylvester::pgcd;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type CountRow = ((usize, usize, usize), [&'static str; 4]);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn cell_counts() -> Check {
    for (name, t) in [
        ("sylvester", pgcd::<BigInt>(&dv(&[3, 3, 4])).unwrap()),
        ("habicht", epgcd::<BigInt>(&dv(&[3, 3, 4])).unwrap()),
        ("recursive", pgcd_recursive::<BigInt>(&dv(&[3, 3, 4])).unwrap()),
    ] {
        ensure(t.len() == 10, format!("{name} on (3,3,4) has {} cases", t.len()))?;
    }
    let start = Instant::now();
    for d0 in 1..=5 {
        for n in 1..=4 {
            let got = enumerate_cells(d0, n).len();
            ensure(binomial(d0 + n, n) == got.into(), format!("d0={d0} n={n}: {got} cells"))?;
        }
    }
    let small = pgcd::<BigInt>(&dv(&[2, 2, 2, 2, 2])).unwrap();
    ensure(small.len() == 15, "(2,2,2,2,2) table length")?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), format!("enumeration took {elapsed:?}"))?;
    Ok(format!("(3,3,4) -> 10 cases for all engines; C(d0+n,n) for d0<=5, n<=4 in {elapsed:.2?}"))
}

fn table2() -> Check {
    let rows: [CountRow; 5] = [
        ((3, 4, 2), ["77055", "793", "150", "10"]),
        ((3, 5, 2), ["1114828", "4928", "198", "10"]),
        ((3, 6, 2), ["13984880", "31008", "256", "10"]),
        ((3, 4, 3), ["573222", "2516", "209", "20"]),
        ((3, 6, 5), ["45949195348", "2390829", "545", "56"]),
    ];
    for ((d0, m, n), expect) in rows {
        let c = run_counts(d0, m, n).map_err(|e| e.to_string())?;
        let got = [&c.vardulakis, &c.barnett, &c.kakie_ho, &c.proposed].map(|v| v.to_string());
        ensure(got == expect.map(String::from), format!("({d0},{m},{n}) gave {got:?}"))?;
    }
    Ok("5 rows exact".into())
}

fn proposed_degrees() -> Check {
    let mut seen = Vec::new();
    for (d, expect) in [(vec![3, 4, 4], 7), (vec![3, 4, 5], 8), (vec![4, 4, 4], 8), (vec![3, 3, 3, 3], 6), (vec![3, 3, 3, 4], 7)] {
        let d = dv(&d);
        let got = pgcd::<BigInt>(&d).unwrap().max_param_degree();
        ensure(got == expect, format!("{d}: {got} != {expect}"))?;
        seen.push(format!("{d}={got}"));
    }
    Ok(seen.join(" "))
}

fn recursive_degree() -> Check {
    let got = pgcd_recursive::<BigInt>(&dv(&[3, 4, 4])).unwrap().max_param_degree();
    ensure(got == 21, format!("(3,4,4) recursive degree {got}"))?;
    Ok("(3,4,4) -> 21".into())
}

fn oracle_agreement() -> Check {
    let mut runs = Vec::new();
    for d in [vec![2, 2, 2], vec![3, 3, 4], vec![3, 4, 4], vec![2, 2, 2, 2]] {
        runs.push(("sylvester", d.clone()));
        runs.push(("habicht", d));
    }
    runs.push(("recursive", vec![2, 2, 2]));
    runs.push(("recursive", vec![3, 4, 4]));
    let mut total = 0;
    for (algo, d) in runs {
        let d = dv(&d);
        let t = match algo {
            "sylvester" => pgcd::<BigInt>(&d),
            "habicht" => epgcd::<BigInt>(&d),
            _ => pgcd_recursive::<BigInt>(&d),
        }
        .unwrap();
        let rep = verify_case_table(&t, 200, 2024, 20).map_err(|e| e.to_string())?;
        ensure(rep.trials == 200 && rep.ok(), format!("{algo} {d}: {} failures, first {:?}", rep.failures.len(), rep.failures.first()))?;
        total += rep.passes;
    }
    Ok(format!("{total} of {total} trials over 10 tables"))
}

fn habicht_identities() -> Check {
    for (d0, d1) in [(2u32, 3u32), (3, 4)] {
        let (f0, f1) = (X::formal(0, d0), X::formal(1, d1));
        let chain: Vec<(X, P)> = (0..=d0 as usize).map(|k| two_poly_subresultant(k, &f0, &f1).unwrap()).collect();
        for k in 0..d0 as usize {
            let (prev, rprev) = if k == 0 { (f1.clone(), P::one()) } else { chain[k - 1].clone() };
            let lhs = chain[k + 1].0.scale(&rprev.mul(&rprev));
            ensure(lhs == prev.prem(&chain[k].0).unwrap(), format!("classical ({d0},{d1}) k={k}"))?;
        }
    }
    let d = dv(&[3, 3, 4]);
    let cell = |delta: &[usize], f: &[X]| subresultant_of(&make_delta_index(delta, &d).unwrap(), 3, f).unwrap();
    let monic = formal_polys::<BigInt>(&d, true);
    let lhs = cell(&[1, 1], &monic).0.prem(&cell(&[2, 0], &monic).0).unwrap();
    ensure(lhs == cell(&[2, 1], &monic).0.scale(&cell(&[1, 0], &monic).1), "generalized (3,3,4), a03 = 1")?;
    let formal = formal_polys::<BigInt>(&d, false);
    let lhs = cell(&[1, 1], &formal).0.prem(&cell(&[2, 0], &formal).0).unwrap();
    let rhs = cell(&[2, 1], &formal).0.scale(&cell(&[1, 0], &formal).1);
    ensure(lhs == rhs.scale(&a(0, 3)), "generalized (3,3,4), formal with a03 factor")?;
    Ok("classical (2,3),(3,4); generalized (3,3,4) exact with a03 = 1 (formal: extra factor a03)".into())
}

fn engine_equality() -> Check {
    let one = BigInt::from(1);
    for d in [vec![2, 2, 3], vec![3, 3, 4]] {
        let d = dv(&d);
        let h = epgcd::<BigInt>(&d).unwrap();
        let s = pgcd::<BigInt>(&d).unwrap();
        ensure(h.len() == s.len(), "lengths differ")?;
        for (hc, sc) in h.cases.iter().zip(&s.cases) {
            let sub = sc.big_r.substitute(d.leading_param(0), &one);
            ensure(hc.delta == sc.delta && hc.big_r == sub, format!("{d} at {:?}", hc.delta))?;
            ensure(hc.r == sc.r.substitute(d.leading_param(0), &one), format!("{d} guard at {:?}", hc.delta))?;
        }
    }
    Ok("(2,2,3) and (3,3,4) entrywise".into())
}

fn determinants() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for k in 0..100 {
        let n = 1 + k % 6;
        let m = random_int_matrix(&mut rng, n, n, 20);
        let b = bareiss_det(&m).unwrap();
        ensure(b == naive_det(&m).unwrap() && b == leibniz_det(&m), format!("integer matrix {k}"))?;
    }
    for k in 0..25 {
        let m = random_sym_matrix(&mut rng, 4, 4);
        let b = bareiss_det(&m).unwrap();
        ensure(b == naive_det(&m).unwrap() && b == leibniz_det(&m), format!("symbolic matrix {k}"))?;
    }
    for k in 0..50 {
        let p = 1 + k % 5;
        let q = p + (k / 5) % (9 - p);
        let m = random_sym_matrix(&mut rng, p, q);
        let fast = determinant_polynomial(&m).unwrap();
        ensure(fast == naive_determinant_polynomial(&m).unwrap() && fast == leibniz_dp(&m), format!("wide {p}x{q}"))?;
    }
    Ok("100 integer, 25 symbolic 4x4, 50 wide up to 5x8".into())
}

fn median_ms(mut f: impl FnMut(), reps: usize) -> f64 {
    let mut v: Vec<f64> = (0..reps)
        .map(|_| {
            let t = Instant::now();
            f();
            t.elapsed().as_secs_f64() * 1000.0
        })
        .collect();
    pgcd::cli::median(&mut v)
}

fn performance() -> Check {
    let d = dv(&[3, 4, 4]);
    let h = median_ms(|| drop(epgcd::<BigInt>(&d).unwrap()), 5);
    let r = median_ms(|| drop(pgcd_recursive::<BigInt>(&d).unwrap()), 5);
    ensure(h <= r / 2.0, format!("habicht {h:.1} ms vs recursive {r:.1} ms"))?;
    Ok(format!("(3,4,4) habicht {h:.1} ms, recursive {r:.1} ms"))
}

fn main() {
    #[allow(clippy::type_complexity)]
    let criteria: [(&str, fn() -> Check); 9] = [
        ("cell counts", cell_counts),
        ("determinant-count formulas", table2),
        ("determinant-engine parameter degrees", proposed_degrees),
        ("recursive parameter degree", recursive_degree),
        ("oracle agreement", oracle_agreement),
        ("pseudo-remainder identities", habicht_identities),
        ("engine cross-equality", engine_equality),
        ("determinant correctness", determinants),
        ("performance", performance),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {} {name}: {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
