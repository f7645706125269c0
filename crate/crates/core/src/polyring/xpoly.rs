use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::param::{write_term, ParamId, ParamPoly};
use super::upoly::UPoly;
use crate::coeff::Coeff;
use crate::error::{Error, Result};

/// Degree in `x`; the zero polynomial has degree `NegInfinity`, which
/// compares below every finite degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(u32),
}

impl Degree {
    pub fn finite(self) -> Option<u32> {
        match self {
            Degree::Finite(d) => Some(d),
            Degree::NegInfinity => None,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// A polynomial in `x` whose coefficients are parameter polynomials.
#[derive(Clone, Debug, PartialEq)]
pub struct XPoly<C> {
    coeffs: BTreeMap<u32, ParamPoly<C>>,
}

impl<C: Coeff> XPoly<C> {
    pub fn zero() -> Self {
        XPoly { coeffs: BTreeMap::new() }
    }

    pub fn constant(c: ParamPoly<C>) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(k: u32, c: ParamPoly<C>) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(k, c);
        }
        XPoly { coeffs }
    }

    /// From coefficients listed in ascending powers of `x`.
    pub fn from_ascending(coeffs: impl IntoIterator<Item = ParamPoly<C>>) -> Self {
        XPoly {
            coeffs: coeffs
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k as u32, c))
                .collect(),
        }
    }

    pub fn from_map(map: BTreeMap<u32, ParamPoly<C>>) -> Self {
        XPoly { coeffs: map.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    /// The formal polynomial `sum_j a[i][j] x^j` of degree `degree`.
    pub fn formal(poly_index: u32, degree: u32) -> Self {
        Self::from_ascending((0..=degree).map(|j| ParamPoly::var(ParamId::new(poly_index, j))))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Degree {
        self.coeffs.keys().next_back().map_or(Degree::NegInfinity, |&k| Degree::Finite(k))
    }

    pub fn coeff(&self, k: u32) -> ParamPoly<C> {
        self.coeffs.get(&k).cloned().unwrap_or_else(ParamPoly::zero)
    }

    pub fn coeff_ref(&self, k: u32) -> Option<&ParamPoly<C>> {
        self.coeffs.get(&k)
    }

    pub fn coeffs(&self) -> &BTreeMap<u32, ParamPoly<C>> {
        &self.coeffs
    }

    /// Leading coefficient in `x`; zero for the zero polynomial.
    pub fn lc(&self) -> ParamPoly<C> {
        self.coeffs.values().next_back().cloned().unwrap_or_else(ParamPoly::zero)
    }

    pub fn neg(&self) -> Self {
        XPoly { coeffs: self.coeffs.iter().map(|(k, c)| (*k, c.neg())).collect() }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.coeffs.clone();
        for (k, c) in &rhs.coeffs {
            let v = match out.get(k) {
                Some(x) => x.add(c),
                None => c.clone(),
            };
            if v.is_zero() {
                out.remove(k);
            } else {
                out.insert(*k, v);
            }
        }
        XPoly { coeffs: out }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out: BTreeMap<u32, ParamPoly<C>> = BTreeMap::new();
        for (i, a) in &self.coeffs {
            for (j, b) in &rhs.coeffs {
                let entry = out.entry(i + j).or_insert_with(ParamPoly::zero);
                *entry = entry.add(&a.mul(b));
            }
        }
        Self::from_map(out)
    }

    pub fn scale(&self, c: &ParamPoly<C>) -> Self {
        Self::from_map(self.coeffs.iter().map(|(k, v)| (*k, v.mul(c))).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: u32) -> Self {
        XPoly { coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    /// Divides every coefficient exactly by `c`.
    pub fn exact_div_scalar(&self, c: &ParamPoly<C>) -> Result<Self> {
        let mut out = BTreeMap::new();
        for (k, v) in &self.coeffs {
            out.insert(*k, v.exact_div(c)?);
        }
        Ok(XPoly { coeffs: out })
    }

    /// Pseudo-remainder: `lc(B)^(deg A - deg B + 1) * A` reduced modulo `B`.
    pub fn prem(&self, divisor: &Self) -> Result<Self> {
        let (m, n) = match (self.degree(), divisor.degree()) {
            (_, Degree::NegInfinity) => return Err(Error::ZeroDivisor),
            (Degree::Finite(m), Degree::Finite(n)) if m >= n => (m, n),
            (a, b) => {
                return Err(Error::DegreeOrder { dividend: a.to_string(), divisor: b.to_string() })
            }
        };
        let lcb = divisor.lc();
        let mut rem = self.clone();
        let mut steps = 0u32;
        while let Degree::Finite(r) = rem.degree() {
            if r < n {
                break;
            }
            let lcr = rem.lc();
            rem = rem.scale(&lcb).sub(&divisor.shift(r - n).scale(&lcr));
            steps += 1;
        }
        let missing = m - n + 1 - steps;
        if missing > 0 {
            rem = rem.scale(&lcb.pow(missing));
        }
        Ok(rem)
    }

    pub fn substitute(&self, id: ParamId, value: &C) -> Self {
        Self::from_map(self.coeffs.iter().map(|(k, c)| (*k, c.substitute(id, value))).collect())
    }

    pub fn specialize<T>(&self, assignment: &BTreeMap<ParamId, T>) -> Result<UPoly<T>>
    where
        T: Clone + Zero + One + PartialEq + From<BigInt> + std::ops::Mul<Output = T>,
    {
        let len = self.degree().finite().map_or(0, |d| d as usize + 1);
        let mut out = vec![T::zero(); len];
        for (k, c) in &self.coeffs {
            out[*k as usize] = c.specialize(assignment)?;
        }
        Ok(UPoly::new(out))
    }

    /// Maximum total parameter degree over all coefficients.
    pub fn max_param_degree(&self) -> Option<u32> {
        self.coeffs.values().filter_map(|c| c.total_degree()).max()
    }

    pub fn params(&self) -> Vec<ParamId> {
        let mut ids: Vec<ParamId> = self.coeffs.values().flat_map(|c| c.params()).collect();
        ids.sort();
        ids.dedup();
        ids
    }

    /// gcd of the integer contents of all coefficients.
    pub fn content(&self) -> C {
        let mut g = C::zero();
        for c in self.coeffs.values() {
            g = g.gcd_ref(&c.content());
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn div_scalar(&self, c: &C) -> Result<Self> {
        let mut out = BTreeMap::new();
        for (k, v) in &self.coeffs {
            out.insert(*k, v.div_scalar(c)?);
        }
        Ok(XPoly { coeffs: out })
    }
}

impl<C: Coeff> Default for XPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> fmt::Display for XPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().rev() {
            let suffix = match k {
                0 => None,
                1 => Some("x".to_string()),
                _ => Some(format!("x^{k}")),
            };
            for (m, v) in c.terms() {
                if !first {
                    f.write_str(" + ")?;
                }
                first = false;
                write_term(f, m, v, suffix.as_deref())?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = ParamPoly<BigInt>;
    type X = XPoly<BigInt>;

    fn a(i: u32, j: u32) -> P {
        P::var(ParamId::new(i, j))
    }

    #[test]
    fn prem_by_monic_linear() {
        // x^2 + a00 by x + a01
        let num = X::from_ascending([a(0, 0), P::zero(), P::one()]);
        let den = X::from_ascending([a(0, 1), P::one()]);
        let r = num.prem(&den).unwrap();
        assert_eq!(r, X::constant(a(0, 1).mul(&a(0, 1)).add(&a(0, 0))));
    }

    #[test]
    fn prem_one_step() {
        // prem(a x + b, c x + d) = c b - a d
        let (pa, pb, pc, pd) = (a(0, 1), a(0, 0), a(1, 1), a(1, 0));
        let num = X::from_ascending([pb.clone(), pa.clone()]);
        let den = X::from_ascending([pd.clone(), pc.clone()]);
        let r = num.prem(&den).unwrap();
        assert_eq!(r, X::constant(pc.mul(&pb).sub(&pa.mul(&pd))));
    }

    #[test]
    fn prem_errors() {
        let lin = X::formal(0, 1);
        let quad = X::formal(1, 2);
        assert!(matches!(lin.prem(&quad), Err(Error::DegreeOrder { .. })));
        assert_eq!(quad.prem(&X::zero()), Err(Error::ZeroDivisor));
    }

    #[test]
    fn prem_degree_drops_with_leading_power() {
        let a5 = X::formal(0, 5);
        let b2 = X::formal(1, 2);
        let r = a5.prem(&b2).unwrap();
        assert_eq!(r.degree(), Degree::Finite(1));
    }

    #[test]
    fn specialize_formal_cubic() {
        let f0 = X::formal(0, 3);
        let mut asg = BTreeMap::new();
        for (j, v) in [1i64, 0, 0, 1].iter().enumerate() {
            asg.insert(ParamId::new(0, j as u32), BigInt::from(*v));
        }
        let s = f0.specialize(&asg).unwrap();
        assert_eq!(s.coeffs(), &[BigInt::from(1), BigInt::from(0), BigInt::from(0), BigInt::from(1)]);
        assert!(X::zero().specialize::<BigInt>(&BTreeMap::new()).unwrap().is_zero());
    }

    #[test]
    fn zero_degree_sentinel() {
        assert_eq!(X::zero().degree(), Degree::NegInfinity);
        assert!(Degree::NegInfinity < Degree::Finite(0));
    }

    #[test]
    fn display_orders_by_x_then_params() {
        let p = X::from_ascending([a(0, 0), a(0, 1).scale(&BigInt::from(2))]);
        assert_eq!(p.to_string(), "2*a[0][1]*x + 1*a[0][0]");
    }
}
