//! Case tables for monic `F_0` by pseudo-remainder recursion.
//!
//! Cells are filled weight by weight. Each `R_delta` comes from one
//! pseudo-remainder of two already known subresultants followed by an exact
//! division, so no determinant is ever expanded.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::polyring::{ParamPoly, XPoly};
use crate::subres::{cells_of_weight, enumerate_cells, formal_polys, make_delta_index, DegreeVector};
use crate::table::{Algorithm, CaseTable, GcdCase};

/// How `R_delta` is obtained from earlier cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recipe {
    /// `delta = 0`: `R = F_0`.
    Base,
    /// `delta = e_k`: `R = prem(F_k, F_0)`.
    Leaf { k: usize },
    /// `R = prem(R_dividend, R_divisor) / r_denom^power`.
    Step { dividend: Vec<usize>, divisor: Vec<usize>, denom: Vec<usize>, power: u32 },
}

fn minus(delta: &[usize], k: usize, by: usize) -> Vec<usize> {
    let mut out = delta.to_vec();
    out[k] -= by;
    out
}

pub fn recipe(delta: &[usize], d: &DegreeVector) -> Result<Recipe> {
    let idx = make_delta_index(delta, d)?;
    let nonzero: Vec<usize> = (0..delta.len()).filter(|&k| delta[k] != 0).collect();
    Ok(match nonzero.as_slice() {
        [] => Recipe::Base,
        [k] if delta[*k] == 1 => Recipe::Leaf { k: *k },
        [k] => {
            let gamma = minus(delta, *k, 2);
            let power = if delta[*k] == 2 { idx.delta0 as u32 - 1 } else { 2 };
            Recipe::Step { dividend: gamma.clone(), divisor: minus(delta, *k, 1), denom: gamma, power }
        }
        [p, q, ..] => Recipe::Step {
            dividend: minus(delta, *p, 1),
            divisor: minus(delta, *q, 1),
            denom: minus(&minus(delta, *p, 1), *q, 1),
            power: 1,
        },
    })
}

/// `prem(dividend, divisor) / denom`, exactly.
pub fn habicht_step<C: Coeff>(dividend: &XPoly<C>, divisor: &XPoly<C>, denom: &ParamPoly<C>) -> Result<XPoly<C>> {
    if divisor.degree().finite().unwrap_or(0) == 0 {
        return Err(Error::DegreeOrder { dividend: dividend.degree().to_string(), divisor: divisor.degree().to_string() });
    }
    let p = dividend.prem(divisor)?;
    if denom.is_one() {
        return Ok(p);
    }
    p.exact_div_scalar(denom)
}

type Cell<C> = (XPoly<C>, ParamPoly<C>);

/// Case table for the inputs of degrees `d` with `a[0][d0] = 1`.
pub fn epgcd<C: Coeff>(d: &DegreeVector) -> Result<CaseTable<C>> {
    let polys = formal_polys::<C>(d, true);
    let d0 = d.d0();
    let mut known: HashMap<Vec<usize>, Cell<C>> = HashMap::new();
    known.insert(vec![0; d.n()], (polys[0].clone(), ParamPoly::one()));
    for w in 1..=d0 {
        let layer = cells_of_weight(w, d.n());
        let done = layer
            .par_iter()
            .map(|delta| {
                let big_r = match recipe(delta, d)? {
                    Recipe::Base => polys[0].clone(),
                    Recipe::Leaf { k } => polys[k + 1].prem(&polys[0])?,
                    Recipe::Step { dividend, divisor, denom, power } => {
                        let den = known[&denom].1.pow(power);
                        habicht_step(&known[&dividend].0, &known[&divisor].0, &den)?
                    }
                };
                let r = big_r.coeff((d0 - w) as u32);
                Ok((delta.clone(), (big_r, r)))
            })
            .collect::<Result<Vec<_>>>()?;
        known.extend(done);
    }
    let cases = enumerate_cells(d0, d.n())
        .into_iter()
        .map(|delta| {
            let (big_r, r) = known.remove(&delta).expect("every cell is filled");
            GcdCase { delta, r, big_r, conditions: Vec::new() }
        })
        .collect();
    Ok(CaseTable { degrees: d.clone(), monic: true, algorithm: Algorithm::Habicht, cases })
}
