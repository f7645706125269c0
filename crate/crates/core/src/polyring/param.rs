use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use smallvec::SmallVec;

use crate::coeff::Coeff;
use crate::error::{Error, Result};

/// The indeterminate `a[i][j]`: coefficient `j` of input polynomial `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParamId {
    pub poly_index: u32,
    pub coeff_index: u32,
}

impl ParamId {
    pub fn new(poly_index: u32, coeff_index: u32) -> Self {
        ParamId { poly_index, coeff_index }
    }
}

impl fmt::Display for ParamId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a[{}][{}]", self.poly_index, self.coeff_index)
    }
}

/// A power product of parameters, stored as a sorted list of
/// `(ParamId, exponent)` with positive exponents.
///
/// Ordered by graded lex: total degree first, then the exponent of the
/// smallest parameter decides.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    degree: u32,
    factors: SmallVec<[(ParamId, u32); 6]>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(id: ParamId) -> Self {
        Monomial::from_factors([(id, 1)])
    }

    /// Builds a monomial from unsorted factors; repeated ids are merged and
    /// zero exponents dropped.
    pub fn from_factors(factors: impl IntoIterator<Item = (ParamId, u32)>) -> Self {
        let mut v: SmallVec<[(ParamId, u32); 6]> = factors.into_iter().filter(|f| f.1 > 0).collect();
        v.sort_by_key(|f| f.0);
        let mut merged: SmallVec<[(ParamId, u32); 6]> = SmallVec::with_capacity(v.len());
        for (id, e) in v {
            match merged.last_mut() {
                Some(last) if last.0 == id => last.1 += e,
                _ => merged.push((id, e)),
            }
        }
        let degree = merged.iter().map(|f| f.1).sum();
        Monomial { degree, factors: merged }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> &[(ParamId, u32)] {
        &self.factors
    }

    pub fn exponent(&self, id: ParamId) -> u32 {
        self.factors
            .binary_search_by_key(&id, |f| f.0)
            .map(|k| self.factors[k].1)
            .unwrap_or(0)
    }

    pub fn mul(&self, rhs: &Monomial) -> Monomial {
        let (a, b) = (&self.factors, &rhs.factors);
        let mut out = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial { degree: self.degree + rhs.degree, factors: out }
    }

    /// `self / rhs` if `rhs` divides `self`.
    pub fn div(&self, rhs: &Monomial) -> Option<Monomial> {
        if rhs.degree > self.degree {
            return None;
        }
        let mut out = SmallVec::with_capacity(self.factors.len());
        let mut j = 0;
        for &(id, e) in &self.factors {
            if j < rhs.factors.len() && rhs.factors[j].0 == id {
                let f = rhs.factors[j].1;
                j += 1;
                match e.cmp(&f) {
                    Ordering::Less => return None,
                    Ordering::Equal => {}
                    Ordering::Greater => out.push((id, e - f)),
                }
            } else if j < rhs.factors.len() && rhs.factors[j].0 < id {
                return None;
            } else {
                out.push((id, e));
            }
        }
        if j < rhs.factors.len() {
            return None;
        }
        Some(Monomial { degree: self.degree - rhs.degree, factors: out })
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| {
            for (x, y) in self.factors.iter().zip(other.factors.iter()) {
                if x.0 != y.0 {
                    // the side carrying the smaller parameter is the larger monomial
                    return if x.0 < y.0 { Ordering::Greater } else { Ordering::Less };
                }
                if x.1 != y.1 {
                    return x.1.cmp(&y.1);
                }
            }
            self.factors.len().cmp(&other.factors.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (id, e)) in self.factors.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{id}")?;
            } else {
                write!(f, "{id}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A polynomial in the parameters `a[i][j]` with coefficients in `C`.
///
/// Terms are kept sorted by strictly descending [`Monomial`] order with no
/// zero coefficients; the zero polynomial has no terms.
#[derive(Clone, Debug, PartialEq)]
pub struct ParamPoly<C> {
    terms: Vec<(Monomial, C)>,
}

impl<C: Coeff> ParamPoly<C> {
    pub fn zero() -> Self {
        ParamPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(Monomial::one(), c)
    }

    pub fn var(id: ParamId) -> Self {
        Self::monomial(Monomial::var(id), C::one())
    }

    pub fn monomial(m: Monomial, c: C) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            ParamPoly { terms: vec![(m, c)] }
        }
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut map: BTreeMap<Monomial, C> = BTreeMap::new();
        for (m, c) in terms {
            match map.get_mut(&m) {
                Some(acc) => acc.add_assign_ref(&c),
                None => {
                    map.insert(m, c);
                }
            }
        }
        Self::from_sorted_map(map)
    }

    fn from_sorted_map(map: BTreeMap<Monomial, C>) -> Self {
        let terms = map.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect();
        ParamPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn terms(&self) -> &[(Monomial, C)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn leading_term(&self) -> Option<&(Monomial, C)> {
        self.terms.first()
    }

    /// Total degree in the parameters; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    /// The constant value, if this polynomial has no parameter.
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.as_slice() {
            [] => Some(C::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn params(&self) -> Vec<ParamId> {
        let mut ids: Vec<ParamId> =
            self.terms.iter().flat_map(|t| t.0.factors().iter().map(|f| f.0)).collect();
        ids.sort();
        ids.dedup();
        ids
    }

    pub fn neg(&self) -> Self {
        ParamPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg_ref())).collect() }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.merge(rhs, false)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.merge(rhs, true)
    }

    fn merge(&self, rhs: &Self, negate_rhs: bool) -> Self {
        let (a, b) = (&self.terms, &rhs.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let take_b = |c: &C| if negate_rhs { c.neg_ref() } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), take_b(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let mut c = a[i].1.clone();
                    if negate_rhs {
                        c.sub_assign_ref(&b[j].1);
                    } else {
                        c.add_assign_ref(&b[j].1);
                    }
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), take_b(c))));
        ParamPoly { terms: out }
    }

    /// Multiplies every term by `c * m`; order is preserved because the
    /// monomial order is compatible with multiplication.
    pub fn mul_term(&self, m: &Monomial, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        ParamPoly { terms: self.terms.iter().map(|(tm, tc)| (tm.mul(m), tc.mul_ref(c))).collect() }
    }

    pub fn scale(&self, c: &C) -> Self {
        self.mul_term(&Monomial::one(), c)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let (small, big) = if self.terms.len() <= rhs.terms.len() { (self, rhs) } else { (rhs, self) };
        if small.is_one() {
            return big.clone();
        }
        // pairwise merge of the sorted partial products
        let mut parts: Vec<ParamPoly<C>> = small.terms.iter().map(|(m, c)| big.mul_term(m, c)).collect();
        while parts.len() > 1 {
            let mut next = Vec::with_capacity(parts.len().div_ceil(2));
            let mut it = parts.into_iter();
            while let Some(p) = it.next() {
                match it.next() {
                    Some(q) => next.push(p.add(&q)),
                    None => next.push(p),
                }
            }
            parts = next;
        }
        parts.pop().unwrap_or_else(Self::zero)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// The quotient `Q` with `Q * rhs == self`.
    pub fn exact_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if rhs.is_one() {
            return Ok(self.clone());
        }
        let (lm, lc) = &rhs.terms[0];
        if rhs.terms.len() == 1 {
            let mut terms = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                let qm = m.div(lm).ok_or_else(|| inexact(self, rhs))?;
                let qc = c.exact_div(lc).ok_or_else(|| inexact(self, rhs))?;
                terms.push((qm, qc));
            }
            return Ok(ParamPoly { terms });
        }
        let tail = &rhs.terms[1..];
        let mut rem: BTreeMap<Monomial, C> = self.terms.iter().cloned().collect();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            let qm = m.div(lm).ok_or_else(|| inexact(self, rhs))?;
            let qc = c.exact_div(lc).ok_or_else(|| inexact(self, rhs))?;
            for (tm, tc) in tail {
                let key = tm.mul(&qm);
                let delta = tc.mul_ref(&qc);
                match rem.entry(key) {
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        e.get_mut().sub_assign_ref(&delta);
                        if e.get().is_zero() {
                            e.remove();
                        }
                    }
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(delta.neg_ref());
                    }
                }
            }
            quotient.push((qm, qc));
        }
        Ok(ParamPoly { terms: quotient })
    }

    /// Replaces one parameter by a constant.
    pub fn substitute(&self, id: ParamId, value: &C) -> Self {
        if !self.terms.iter().any(|t| t.0.exponent(id) > 0) {
            return self.clone();
        }
        let mut powers: Vec<C> = vec![C::one()];
        Self::from_terms(self.terms.iter().map(|(m, c)| {
            let e = m.exponent(id) as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap().mul_ref(value);
                powers.push(next);
            }
            let rest = Monomial::from_factors(m.factors().iter().copied().filter(|f| f.0 != id));
            (rest, c.mul_ref(&powers[e]))
        }))
    }

    /// Evaluates at a full assignment into any ring that embeds the integers.
    pub fn specialize<T>(&self, assignment: &BTreeMap<ParamId, T>) -> Result<T>
    where
        T: Clone + Zero + One + From<num_bigint::BigInt> + std::ops::Mul<Output = T>,
    {
        let mut acc = T::zero();
        for (m, c) in &self.terms {
            let mut term = T::from(c.to_bigint());
            for (id, e) in m.factors() {
                let v = assignment.get(id).ok_or(Error::MissingAssignment(*id))?;
                for _ in 0..*e {
                    term = term * v.clone();
                }
            }
            acc = acc + term;
        }
        Ok(acc)
    }
}

impl<C: Coeff> ParamPoly<C> {
    /// gcd of the integer coefficients (non-negative); zero for the zero polynomial.
    pub fn content(&self) -> C {
        let mut g = C::zero();
        for (_, c) in &self.terms {
            g = g.gcd_ref(c);
            if g.is_one() {
                break;
            }
        }
        g.abs_ref()
    }

    /// Divides every coefficient by a scalar that is known to divide them.
    pub fn div_scalar(&self, c: &C) -> Result<Self> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, tc) in &self.terms {
            let q = tc.exact_div(c).ok_or_else(|| Error::InexactDivision(format!("scalar {c}")))?;
            terms.push((m.clone(), q));
        }
        Ok(ParamPoly { terms })
    }
}

fn inexact<C: Coeff>(a: &ParamPoly<C>, b: &ParamPoly<C>) -> Error {
    Error::InexactDivision(format!(
        "{} / {}",
        abbreviate(&a.to_string()),
        abbreviate(&b.to_string())
    ))
}

fn abbreviate(s: &str) -> String {
    if s.len() <= 120 {
        s.to_string()
    } else {
        let mut cut = 117;
        while !s.is_char_boundary(cut) {
            cut -= 1;
        }
        format!("{}...", &s[..cut])
    }
}

impl<C: Coeff> Default for ParamPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

/// Writes one term as `c*a[i][j]^e*...`, appending `suffix` (an `x` power)
/// when present.
pub(crate) fn write_term<C: Coeff>(
    f: &mut fmt::Formatter<'_>,
    m: &Monomial,
    c: &C,
    suffix: Option<&str>,
) -> fmt::Result {
    write!(f, "{c}")?;
    // descending parameter order inside a term
    for (id, e) in m.factors().iter().rev() {
        if *e == 1 {
            write!(f, "*{id}")?;
        } else {
            write!(f, "*{id}^{e}")?;
        }
    }
    if let Some(s) = suffix {
        write!(f, "*{s}")?;
    }
    Ok(())
}

impl<C: Coeff> fmt::Display for ParamPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write_term(f, m, c, None)?;
        }
        Ok(())
    }
}
