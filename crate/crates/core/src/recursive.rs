//! Recursive baseline: two-polynomial subresultant chains nested over the
//! inputs.
//!
//! The chain of `(F_0, F_1)` splits the parameter space by the degree `i` of
//! `gcd(F_0, F_1)`. Each branch then recurses on `(R_(d0-i), F_2, .., F_n)`,
//! so the coefficients at deeper levels are determinants of determinants.

use rayon::prelude::*;

use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::polyring::{Degree, ParamPoly, XPoly};
use crate::subres::{formal_polys, two_poly_subresultant, DegreeVector};
use crate::table::{Algorithm, CaseTable, Condition, GcdCase};

/// One leaf of the recursion tree.
#[derive(Clone, Debug, PartialEq)]
pub struct Branch<C> {
    /// Subresultant index chosen at each level, padded with zeros when the
    /// branch stops early.
    pub chain: Vec<usize>,
    pub conditions: Vec<Condition<C>>,
    pub gcd: XPoly<C>,
}

/// All branches for the inputs `polys`, where `deg polys[0]` is minimal.
pub fn pgcd_poly_recursive<C: Coeff>(polys: &[XPoly<C>]) -> Result<Vec<Branch<C>>> {
    let Some(first) = polys.first() else {
        return Err(Error::EmptyInput);
    };
    let d0 = match first.degree() {
        Degree::Finite(d) => d as usize,
        Degree::NegInfinity => return Err(Error::ZeroPolynomial(0)),
    };
    if polys.len() == 1 {
        return Ok(vec![Branch { chain: Vec::new(), conditions: Vec::new(), gcd: first.clone() }]);
    }
    let depth = polys.len() - 1;
    // R_0 is taken as F_0 itself, without the power of its leading coefficient.
    let chain: Vec<(XPoly<C>, ParamPoly<C>)> = (0..=d0)
        .map(|k| match k {
            0 => Ok((first.clone(), first.lc())),
            _ => two_poly_subresultant(k, first, &polys[1]),
        })
        .collect::<Result<_>>()?;

    let per_degree = (0..=d0)
        .into_par_iter()
        .map(|i| {
            let k = d0 - i;
            let mut guard: Vec<Condition<C>> =
                ((k + 1)..=d0).rev().map(|j| Condition { poly: chain[j].1.clone(), vanishes: true }).collect();
            guard.push(Condition { poly: chain[k].1.clone(), vanishes: false });
            let head = &chain[k].0;

            if polys.len() == 2 {
                return Ok(vec![Branch { chain: vec![k], conditions: guard, gcd: head.clone() }]);
            }
            if i == 0 {
                let mut path = vec![0; depth];
                path[0] = k;
                return Ok(vec![Branch { chain: path, conditions: guard, gcd: XPoly::constant(ParamPoly::one()) }]);
            }
            let mut rest = Vec::with_capacity(polys.len() - 1);
            rest.push(head.clone());
            rest.extend_from_slice(&polys[2..]);
            let inner = pgcd_poly_recursive(&rest)?;
            Ok(inner
                .into_iter()
                .map(|b| {
                    let mut path = Vec::with_capacity(depth);
                    path.push(k);
                    path.extend(b.chain);
                    let mut conditions = guard.clone();
                    conditions.extend(b.conditions);
                    Branch { chain: path, conditions, gcd: b.gcd }
                })
                .collect())
        })
        .collect::<Result<Vec<Vec<Branch<C>>>>>()?;
    Ok(per_degree.into_iter().flatten().collect())
}

/// Case table of the recursive baseline on the formal inputs of degrees `d`.
pub fn pgcd_recursive<C: Coeff>(d: &DegreeVector) -> Result<CaseTable<C>> {
    let branches = pgcd_poly_recursive(&formal_polys::<C>(d, false))?;
    let cases = branches
        .into_iter()
        .map(|b| {
            let r = b
                .conditions
                .iter()
                .rev()
                .find(|c| !c.vanishes)
                .map(|c| c.poly.clone())
                .unwrap_or_else(ParamPoly::one);
            GcdCase { delta: b.chain, r, big_r: b.gcd, conditions: b.conditions }
        })
        .collect();
    Ok(CaseTable { degrees: d.clone(), monic: false, algorithm: Algorithm::Recursive, cases })
}
