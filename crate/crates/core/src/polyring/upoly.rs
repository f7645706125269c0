use std::fmt;

use num_traits::{One, Zero};

/// Dense univariate polynomial with coefficients ascending in `x`.
///
/// The leading stored coefficient is nonzero unless the polynomial is zero
/// (empty coefficient list).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UPoly<T> {
    coeffs: Vec<T>,
}

impl<T: Clone + Zero + PartialEq> UPoly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn lc(&self) -> Option<&T> {
        self.coeffs.last()
    }
}

impl<T> UPoly<T>
where
    T: Clone + Zero + One + PartialEq + std::ops::Sub<Output = T> + std::ops::Mul<Output = T> + std::ops::Div<Output = T>,
{
    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|v| v.clone() * c.clone()).collect())
    }

    pub fn monic(&self) -> Self {
        match self.lc() {
            None => Self::zero(),
            Some(lc) => {
                let inv = T::one() / lc.clone();
                self.scale(&inv)
            }
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }

    /// Remainder of division over a field.
    pub fn rem(&self, divisor: &Self) -> Self {
        let dlc = divisor.lc().expect("remainder by the zero polynomial").clone();
        let n = divisor.coeffs.len();
        let mut r = self.coeffs.clone();
        while r.len() >= n {
            let q = r.last().unwrap().clone() / dlc.clone();
            let shift = r.len() - n;
            for (k, d) in divisor.coeffs.iter().enumerate() {
                r[shift + k] = r[shift + k].clone() - q.clone() * d.clone();
            }
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        Self::new(r)
    }

    /// Monic gcd via the Euclidean algorithm; zero iff both inputs are zero.
    pub fn gcd(&self, rhs: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), rhs.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Whether `self` divides `rhs`; zero divides only zero.
    pub fn divides(&self, rhs: &Self) -> bool {
        if self.is_zero() {
            return rhs.is_zero();
        }
        rhs.rem(self).is_zero()
    }

    /// True iff `self = c * rhs` for a nonzero constant `c`.
    pub fn is_similar(&self, rhs: &Self) -> bool {
        if self.degree() != rhs.degree() {
            return false;
        }
        self.monic() == rhs.monic()
    }
}

impl<T: fmt::Display + Zero + PartialEq> fmt::Display for UPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*x")?,
                _ => write!(f, "{c}*x^{k}")?,
            }
        }
        Ok(())
    }
}
