//! JSON and text forms of case tables.
//!
//! Polynomials are stored term by term as
//! `{"c": "<decimal>", "x": <power of x>, "a": [[i, j, exp], ..]}`, with
//! coefficients as strings so that big integers survive any JSON reader.

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::polyring::{Monomial, ParamId, ParamPoly, XPoly};
use crate::subres::DegreeVector;
use crate::table::{Algorithm, CaseTable, Condition, GcdCase};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub c: String,
    pub x: u32,
    pub a: Vec<[u32; 3]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonPoly {
    pub terms: Vec<JsonTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonCondition {
    pub poly: JsonPoly,
    pub vanishes: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonCase {
    pub delta: Vec<usize>,
    pub r: JsonPoly,
    #[serde(rename = "R")]
    pub big_r: JsonPoly,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub conditions: Option<Vec<JsonCondition>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTable {
    pub degrees: Vec<usize>,
    pub monic: bool,
    pub algorithm: String,
    pub cases: Vec<JsonCase>,
}

fn param_terms<C: Coeff>(p: &ParamPoly<C>, x: u32, out: &mut Vec<JsonTerm>) {
    for (m, c) in p.terms() {
        out.push(JsonTerm {
            c: c.to_bigint().to_string(),
            x,
            a: m.factors().iter().map(|(id, e)| [id.poly_index, id.coeff_index, *e]).collect(),
        });
    }
}

pub fn param_to_json<C: Coeff>(p: &ParamPoly<C>) -> JsonPoly {
    let mut terms = Vec::new();
    param_terms(p, 0, &mut terms);
    JsonPoly { terms }
}

pub fn xpoly_to_json<C: Coeff>(p: &XPoly<C>) -> JsonPoly {
    let mut terms = Vec::new();
    for (k, c) in p.coeffs().iter().rev() {
        param_terms(c, *k, &mut terms);
    }
    JsonPoly { terms }
}

fn parse_term<C: Coeff>(t: &JsonTerm) -> Result<(Monomial, C)> {
    let big: BigInt = t.c.parse().map_err(|_| Error::Parse(format!("bad coefficient {:?}", t.c)))?;
    let c = C::from_bigint(&big).ok_or_else(|| Error::Parse(format!("coefficient {big} out of range")))?;
    let m = Monomial::from_factors(t.a.iter().map(|[i, j, e]| (ParamId::new(*i, *j), *e)));
    Ok((m, c))
}

pub fn param_from_json<C: Coeff>(p: &JsonPoly) -> Result<ParamPoly<C>> {
    let mut terms = Vec::with_capacity(p.terms.len());
    for t in &p.terms {
        if t.x != 0 {
            return Err(Error::Parse(format!("parameter polynomial has a term in x^{}", t.x)));
        }
        terms.push(parse_term(t)?);
    }
    Ok(ParamPoly::from_terms(terms))
}

pub fn xpoly_from_json<C: Coeff>(p: &JsonPoly) -> Result<XPoly<C>> {
    let mut by_power: std::collections::BTreeMap<u32, Vec<(Monomial, C)>> = Default::default();
    for t in &p.terms {
        by_power.entry(t.x).or_default().push(parse_term(t)?);
    }
    Ok(XPoly::from_map(by_power.into_iter().map(|(k, v)| (k, ParamPoly::from_terms(v))).collect()))
}

/// The JSON document for `table`. Guards of first-match tables are spelled
/// out only when `explicit` is set; recursive tables always carry them.
pub fn to_json_value<C: Coeff>(table: &CaseTable<C>, explicit: bool) -> JsonTable {
    let cases = table
        .cases
        .iter()
        .enumerate()
        .map(|(k, case)| {
            let conditions = (explicit || !table.first_match()).then(|| {
                table
                    .explicit_conditions(k)
                    .iter()
                    .map(|c| JsonCondition { poly: param_to_json(&c.poly), vanishes: c.vanishes })
                    .collect()
            });
            JsonCase { delta: case.delta.clone(), r: param_to_json(&case.r), big_r: xpoly_to_json(&case.big_r), conditions }
        })
        .collect();
    JsonTable {
        degrees: table.degrees.as_slice().to_vec(),
        monic: table.monic,
        algorithm: table.algorithm.name().to_string(),
        cases,
    }
}

pub fn to_json<C: Coeff>(table: &CaseTable<C>, explicit: bool) -> String {
    serde_json::to_string_pretty(&to_json_value(table, explicit)).expect("case tables always serialize")
}

pub fn from_json_value<C: Coeff>(doc: &JsonTable) -> Result<CaseTable<C>> {
    let degrees = DegreeVector::new(doc.degrees.clone())?;
    let algorithm: Algorithm = doc.algorithm.parse()?;
    let mut cases = Vec::with_capacity(doc.cases.len());
    for c in &doc.cases {
        if c.delta.len() != degrees.n() {
            return Err(Error::LengthMismatch(c.delta.len(), degrees.n()));
        }
        let conditions = match (&c.conditions, algorithm) {
            (Some(list), Algorithm::Recursive) => list
                .iter()
                .map(|jc| Ok(Condition { poly: param_from_json(&jc.poly)?, vanishes: jc.vanishes }))
                .collect::<Result<Vec<_>>>()?,
            _ => Vec::new(),
        };
        cases.push(GcdCase { delta: c.delta.clone(), r: param_from_json(&c.r)?, big_r: xpoly_from_json(&c.big_r)?, conditions });
    }
    Ok(CaseTable { degrees, monic: doc.monic, algorithm, cases })
}

pub fn from_json<C: Coeff>(s: &str) -> Result<CaseTable<C>> {
    let doc: JsonTable = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    from_json_value(&doc)
}

fn tuple(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

/// Human-readable listing, one block per case.
pub fn to_text<C: Coeff>(table: &CaseTable<C>, explicit: bool) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "degrees {} algorithm {} monic {} cases {}",
        table.degrees,
        table.algorithm,
        table.monic,
        table.len()
    );
    for (k, case) in table.cases.iter().enumerate() {
        let _ = writeln!(s, "case {} delta {}", k + 1, tuple(&case.delta));
        if explicit || !table.first_match() {
            for c in table.explicit_conditions(k) {
                let _ = writeln!(s, "  if {} {} 0", c.poly, if c.vanishes { "=" } else { "!=" });
            }
        } else {
            let _ = writeln!(s, "  r = {}", case.r);
        }
        let _ = writeln!(s, "  R = {}", case.big_r);
    }
    s
}
