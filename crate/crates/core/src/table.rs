//! Case tables: the output shared by all three algorithms.

use std::fmt;
use std::str::FromStr;

use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::polyring::{ParamPoly, XPoly};
use crate::subres::DegreeVector;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    /// Determinant polynomials of the generalized subresultant matrices.
    Sylvester,
    /// Pseudo-remainder recursion on monic inputs.
    Habicht,
    /// Nested two-polynomial subresultant chains.
    Recursive,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Sylvester => "sylvester",
            Algorithm::Habicht => "habicht",
            Algorithm::Recursive => "recursive",
        }
    }

    /// Whether every `R` of the table lies in the ideal generated by the inputs.
    pub fn ideal_members(self) -> bool {
        !matches!(self, Algorithm::Recursive)
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sylvester" => Ok(Algorithm::Sylvester),
            "habicht" => Ok(Algorithm::Habicht),
            "recursive" => Ok(Algorithm::Recursive),
            other => Err(Error::Parse(format!("unknown algorithm {other:?}"))),
        }
    }
}

/// `poly = 0` when `vanishes`, `poly != 0` otherwise.
#[derive(Clone, Debug, PartialEq)]
pub struct Condition<C> {
    pub poly: ParamPoly<C>,
    pub vanishes: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GcdCase<C> {
    pub delta: Vec<usize>,
    /// Guard `r`: the case applies only where it does not vanish.
    pub r: ParamPoly<C>,
    /// The gcd expression over the cell.
    pub big_r: XPoly<C>,
    /// Full conjunctive guard. Empty for first-match tables, where the guard
    /// is implied by the order of the cases.
    pub conditions: Vec<Condition<C>>,
}

/// Ordered guarded list of gcd expressions.
///
/// Sylvester and Habicht tables use first-match semantics: the gcd at a
/// parameter point is the `big_r` of the first case whose `r` is nonzero
/// there. Recursive tables carry explicit, mutually exclusive conditions.
#[derive(Clone, Debug, PartialEq)]
pub struct CaseTable<C> {
    pub degrees: DegreeVector,
    pub monic: bool,
    pub algorithm: Algorithm,
    pub cases: Vec<GcdCase<C>>,
}

impl<C: Coeff> CaseTable<C> {
    pub fn len(&self) -> usize {
        self.cases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cases.is_empty()
    }

    pub fn first_match(&self) -> bool {
        self.algorithm != Algorithm::Recursive
    }

    /// Index of the case that applies, given a nonvanishing test for
    /// parameter polynomials.
    pub fn select<F>(&self, mut nonzero: F) -> Result<Option<usize>>
    where
        F: FnMut(&ParamPoly<C>) -> Result<bool>,
    {
        for (k, case) in self.cases.iter().enumerate() {
            let mut holds = nonzero(&case.r)?;
            if holds && !self.first_match() {
                for cond in &case.conditions {
                    if nonzero(&cond.poly)? == cond.vanishes {
                        holds = false;
                        break;
                    }
                }
            }
            if holds {
                return Ok(Some(k));
            }
        }
        Ok(None)
    }

    /// The conjunction guarding case `k`, spelled out.
    pub fn explicit_conditions(&self, k: usize) -> Vec<Condition<C>> {
        if !self.first_match() {
            return self.cases[k].conditions.clone();
        }
        let mut out: Vec<Condition<C>> =
            self.cases[..k].iter().map(|c| Condition { poly: c.r.clone(), vanishes: true }).collect();
        out.push(Condition { poly: self.cases[k].r.clone(), vanishes: false });
        out
    }

    /// Maximum total degree in the parameters over all gcd expressions.
    pub fn max_param_degree(&self) -> u32 {
        self.cases.iter().filter_map(|c| c.big_r.max_param_degree()).max().unwrap_or(0)
    }

    /// Strips the integer content of every gcd expression. First-match guards
    /// are recomputed from the scaled expression.
    pub fn normalized(&self) -> Result<Self> {
        let mut out = self.clone();
        for case in &mut out.cases {
            let g = case.big_r.content();
            if g.is_zero() || g.is_one() {
                continue;
            }
            case.big_r = case.big_r.div_scalar(&g)?;
            if self.first_match() {
                let deg = (self.degrees.d0() - case.delta.iter().sum::<usize>()) as u32;
                case.r = case.big_r.coeff(deg);
            }
        }
        Ok(out)
    }

    /// Replaces one gcd expression by `x` times itself. Used to check that
    /// verification catches corrupted tables.
    pub fn mutated(&self) -> Self {
        let mut out = self.clone();
        if let Some(case) = out.cases.first_mut() {
            case.big_r = case.big_r.shift(1);
        }
        out
    }
}
