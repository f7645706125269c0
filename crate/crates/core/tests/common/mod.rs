#![allow(dead_code)]

use num_bigint::BigInt;
use pgcd::polyring::{ParamId, ParamPoly, XPoly};
use pgcd::{DegreeVector, PolyMatrix};
use rand::Rng;

pub type P = ParamPoly<BigInt>;
pub type X = XPoly<BigInt>;

pub fn dv(d: &[usize]) -> DegreeVector {
    DegreeVector::new(d.to_vec()).unwrap()
}

pub fn int(v: i64) -> P {
    P::constant(BigInt::from(v))
}

pub fn a(i: u32, j: u32) -> P {
    P::var(ParamId::new(i, j))
}

/// All permutations of `0..n` with their signs.
pub fn permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, n: usize, out: &mut Vec<(Vec<usize>, bool)>) {
        if prefix.len() == n {
            let mut inversions = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if prefix[i] > prefix[j] {
                        inversions += 1;
                    }
                }
            }
            out.push((prefix.clone(), inversions % 2 == 1));
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, n, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], n, &mut out);
    out
}

/// Determinant by the permutation expansion.
pub fn leibniz_det(m: &PolyMatrix) -> P {
    assert_eq!(m.rows(), m.cols());
    let mut acc = P::zero();
    for (perm, odd) in permutations(m.rows()) {
        let mut term = P::one();
        for (i, &j) in perm.iter().enumerate() {
            term = term.mul(m.get(i, j));
            if term.is_zero() {
                break;
            }
        }
        acc = if odd { acc.sub(&term) } else { acc.add(&term) };
    }
    acc
}

/// `dp(M)` with each coefficient from [`leibniz_det`].
pub fn leibniz_dp(m: &PolyMatrix) -> X {
    let (p, q) = (m.rows(), m.cols());
    X::from_ascending((0..=q - p).map(|j| {
        let mut cols: Vec<usize> = (0..p - 1).collect();
        cols.push(q - 1 - j);
        leibniz_det(&m.select_columns(&cols))
    }))
}

pub fn random_int_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, bound: i64) -> PolyMatrix {
    let entries = (0..rows * cols).map(|_| int(rng.gen_range(-bound..=bound))).collect();
    PolyMatrix::new(rows, cols, entries).unwrap()
}

/// Random sparse polynomial in the parameters `a[0][0..vars]`, degree <= 2.
pub fn random_param_poly<R: Rng>(rng: &mut R, vars: u32, terms: usize) -> P {
    let mut acc = P::zero();
    for _ in 0..rng.gen_range(0..=terms) {
        let c = rng.gen_range(-4i64..=4);
        let mut t = int(c);
        for _ in 0..rng.gen_range(0..=2) {
            t = t.mul(&a(0, rng.gen_range(0..vars)));
        }
        acc = acc.add(&t);
    }
    acc
}

pub fn random_sym_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> PolyMatrix {
    let entries = (0..rows * cols).map(|_| random_param_poly(rng, 3, 3)).collect();
    PolyMatrix::new(rows, cols, entries).unwrap()
}
