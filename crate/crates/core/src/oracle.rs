//! Randomized verification of case tables against an exact Euclidean gcd.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::polyring::{ParamId, UPoly, XPoly};
use crate::subres::{formal_polys, DegreeVector};
use crate::table::CaseTable;
use crate::RationalUPoly;

/// Monic gcd of all members; nonzero constants give 1.
pub fn euclid_gcd_many(polys: &[RationalUPoly]) -> Result<RationalUPoly> {
    let mut g = UPoly::zero();
    for p in polys {
        g = g.gcd(p);
    }
    if g.is_zero() {
        return Err(Error::AllZero);
    }
    Ok(g)
}

/// `p = c q` for a nonzero rational `c`; two zeros are similar.
pub fn is_similar(p: &RationalUPoly, q: &RationalUPoly) -> bool {
    p.is_similar(q)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Failure {
    pub assignment: BTreeMap<String, String>,
    pub expected: String,
    pub delta: Option<Vec<usize>>,
    pub selected: Option<String>,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub trials: usize,
    pub passes: usize,
    pub failures: Vec<Failure>,
}

impl VerificationReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub trials: usize,
    pub seed: u64,
    pub bound: i64,
    /// Share of trials whose inputs are built with a planted common factor.
    pub planted_fraction: f64,
}

impl VerifyConfig {
    pub fn new(trials: usize, seed: u64, bound: i64) -> Self {
        VerifyConfig { trials, seed, bound, planted_fraction: 0.5 }
    }
}

pub fn verify_case_table(table: &CaseTable<BigInt>, trials: usize, seed: u64, bound: i64) -> Result<VerificationReport> {
    verify_with(table, &VerifyConfig::new(trials, seed, bound))
}

pub fn verify_with(table: &CaseTable<BigInt>, cfg: &VerifyConfig) -> Result<VerificationReport> {
    if cfg.trials == 0 {
        return Err(Error::BadRange("trials must be at least 1".into()));
    }
    if cfg.bound < 2 {
        return Err(Error::BadRange(format!("bound must be at least 2, got {}", cfg.bound)));
    }
    if !(0.0..=1.0).contains(&cfg.planted_fraction) {
        return Err(Error::BadRange(format!("planted fraction {} outside [0, 1]", cfg.planted_fraction)));
    }
    let mut master = ChaCha8Rng::seed_from_u64(cfg.seed);
    let seeds: Vec<u64> = (0..cfg.trials).map(|_| master.gen()).collect();
    let formal = formal_polys::<BigInt>(&table.degrees, table.monic);
    let f = cfg.planted_fraction;
    let outcomes = seeds
        .par_iter()
        .enumerate()
        .map(|(t, &s)| {
            let planted = ((t + 1) as f64 * f).floor() > (t as f64 * f).floor();
            let mut rng = ChaCha8Rng::seed_from_u64(s);
            let asg = if planted {
                planted_assignment(&table.degrees, table.monic, cfg.bound, &mut rng)
            } else {
                random_assignment(&table.degrees, table.monic, cfg.bound, &mut rng)
            };
            check_trial(table, &formal, &asg)
        })
        .collect::<Result<Vec<Option<Failure>>>>()?;
    let failures: Vec<Failure> = outcomes.into_iter().flatten().collect();
    Ok(VerificationReport { trials: cfg.trials, passes: cfg.trials - failures.len(), failures })
}

fn leading_nonzero(d: &DegreeVector, asg: &BTreeMap<ParamId, BigInt>) -> bool {
    (0..=d.n()).all(|i| asg.get(&d.leading_param(i)).is_none_or(|v| !v.is_zero()))
}

/// Independent uniform values for every parameter, redrawn until no
/// leading coefficient vanishes.
pub fn random_assignment<R: Rng>(d: &DegreeVector, monic: bool, bound: i64, rng: &mut R) -> BTreeMap<ParamId, BigInt> {
    loop {
        let mut asg: BTreeMap<ParamId, BigInt> =
            d.all_params().into_iter().map(|id| (id, BigInt::from(rng.gen_range(-bound..=bound)))).collect();
        if monic {
            asg.insert(d.leading_param(0), BigInt::from(1));
        }
        if leading_nonzero(d, &asg) {
            return asg;
        }
    }
}

fn random_poly<R: Rng>(deg: usize, monic: bool, bound: i64, rng: &mut R) -> Vec<BigInt> {
    let mut c: Vec<BigInt> = (0..deg).map(|_| BigInt::from(rng.gen_range(-bound..=bound))).collect();
    let lead = if monic {
        1
    } else {
        loop {
            let v = rng.gen_range(-bound..=bound);
            if v != 0 {
                break v;
            }
        }
    };
    c.push(BigInt::from(lead));
    c
}

fn mul_dense(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::from(0); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Inputs with nested common factors: `g_1 | F_0, F_1`, `g_2 | g_1, F_2`, and
/// so on, with `deg g_1 >= deg g_2 >= ..` drawn at random.
pub fn planted_assignment<R: Rng>(d: &DegreeVector, monic: bool, bound: i64, rng: &mut R) -> BTreeMap<ParamId, BigInt> {
    let n = d.n();
    let degs = d.as_slice();
    let mut e = vec![0usize; n + 1];
    e[1] = rng.gen_range(0..=d.d0());
    for k in 2..=n {
        e[k] = rng.gen_range(0..=e[k - 1]);
    }
    // g[k] divides F_k; g[0] = g[1]
    let mut g: Vec<Vec<BigInt>> = vec![Vec::new(); n + 1];
    g[n] = random_poly(e[n], true, bound, rng);
    for k in (1..n).rev() {
        g[k] = mul_dense(&g[k + 1], &random_poly(e[k] - e[k + 1], true, bound, rng));
    }
    g[0] = g[1].clone();
    e[0] = e[1];
    let mut asg = BTreeMap::new();
    for i in 0..=n {
        let h = random_poly(degs[i] - e[i], monic && i == 0, bound, rng);
        for (j, v) in mul_dense(&g[i], &h).into_iter().enumerate() {
            asg.insert(ParamId::new(i as u32, j as u32), v);
        }
    }
    if monic {
        asg.remove(&d.leading_param(0));
    }
    asg
}

fn to_rational(p: &UPoly<BigInt>) -> RationalUPoly {
    UPoly::new(p.coeffs().iter().map(|c| BigRational::from_integer(c.clone())).collect())
}

fn specialize(p: &XPoly<BigInt>, asg: &BTreeMap<ParamId, BigInt>) -> Result<RationalUPoly> {
    Ok(to_rational(&p.specialize(asg)?))
}

fn check_trial(
    table: &CaseTable<BigInt>,
    formal: &[XPoly<BigInt>],
    asg: &BTreeMap<ParamId, BigInt>,
) -> Result<Option<Failure>> {
    let inputs = formal.iter().map(|f| specialize(f, asg)).collect::<Result<Vec<_>>>()?;
    let expected = euclid_gcd_many(&inputs)?;
    let failure = |delta: Option<Vec<usize>>, selected: Option<String>, reason: String| Failure {
        assignment: asg.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect(),
        expected: expected.to_string(),
        delta,
        selected,
        reason,
    };
    let Some(k) = table.select(|p| Ok(!p.specialize::<BigInt>(asg)?.is_zero()))? else {
        return Ok(Some(failure(None, None, "no case applies".into())));
    };
    let case = &table.cases[k];
    let got = specialize(&case.big_r, asg)?;
    if !is_similar(&got, &expected) {
        return Ok(Some(failure(Some(case.delta.clone()), Some(got.to_string()), "not similar to the gcd".into())));
    }
    if table.algorithm.ideal_members() {
        for other in &table.cases {
            let v = specialize(&other.big_r, asg)?;
            if !expected.divides(&v) {
                return Ok(Some(failure(
                    Some(other.delta.clone()),
                    Some(v.to_string()),
                    "gcd does not divide this case's expression".into(),
                )));
            }
        }
    }
    Ok(None)
}
