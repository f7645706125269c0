//! Cell indices and generalized subresultants.
//!
//! A cell is a tuple `delta = (delta_1, .., delta_n)` with `|delta| <= d0`.
//! Its subresultant `R_delta` is the determinant polynomial of the
//! coefficient matrix of
//! `x^(delta_0-1) F_0, .., F_0, x^(delta_1-1) F_1, .., F_1, .., F_n`,
//! and `r_delta` is its coefficient at `x^(d0 - |delta|)`.

use std::cmp::Ordering;
use std::fmt;

use crate::coeff::Coeff;
use crate::detmat::{coefficient_matrix, determinant_polynomial, PolyMatrix};
use crate::error::{Error, Result};
use crate::polyring::{Degree, ParamId, ParamPoly, XPoly};

/// Degrees `(d0, .., dn)` of the inputs with `d0` minimal and `n >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DegreeVector(Vec<usize>);

impl DegreeVector {
    pub fn new(d: Vec<usize>) -> Result<Self> {
        if d.len() < 2 {
            return Err(Error::InvalidDegrees(format!("need at least two polynomials, got {}", d.len())));
        }
        if d.contains(&0) {
            return Err(Error::InvalidDegrees("all degrees must be positive".into()));
        }
        if d[1..].iter().any(|&di| di < d[0]) {
            return Err(Error::InvalidDegrees(format!("d0 must be the minimum, got {d:?}")));
        }
        Ok(DegreeVector(d))
    }

    pub fn d0(&self) -> usize {
        self.0[0]
    }

    /// Number of polynomials after `F_0`.
    pub fn n(&self) -> usize {
        self.0.len() - 1
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// `a[i][d_i]`, the leading coefficient of `F_i`.
    pub fn leading_param(&self, i: usize) -> ParamId {
        ParamId::new(i as u32, self.0[i] as u32)
    }

    pub fn all_params(&self) -> Vec<ParamId> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &di)| (0..=di).map(move |j| ParamId::new(i as u32, j as u32)))
            .collect()
    }
}

impl fmt::Display for DegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl std::str::FromStr for DegreeVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let d = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|e| Error::InvalidDegrees(format!("{t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        DegreeVector::new(d)
    }
}

/// The formal inputs `F_i = sum_j a[i][j] x^j`; with `monic`, `a[0][d0]` is 1.
pub fn formal_polys<C: Coeff>(d: &DegreeVector, monic: bool) -> Vec<XPoly<C>> {
    let mut polys: Vec<XPoly<C>> =
        d.as_slice().iter().enumerate().map(|(i, &di)| XPoly::formal(i as u32, di as u32)).collect();
    if monic {
        polys[0] = polys[0].substitute(d.leading_param(0), &C::one());
    }
    polys
}

/// Graded lexicographic comparison: weight first, then the first nonzero
/// entry of `delta - gamma`.
pub fn glex_compare(delta: &[usize], gamma: &[usize]) -> Result<Ordering> {
    if delta.len() != gamma.len() {
        return Err(Error::LengthMismatch(delta.len(), gamma.len()));
    }
    let (wd, wg): (usize, usize) = (delta.iter().sum(), gamma.iter().sum());
    Ok(wd.cmp(&wg).then_with(|| delta.cmp(gamma)))
}

/// All tuples of length `n` with weight at most `d0`, strictly descending
/// under [`glex_compare`].
pub fn enumerate_cells(d0: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for w in (0..=d0).rev() {
        out.extend(cells_of_weight(w, n));
    }
    out
}

/// Tuples of exact weight `w`, in descending lex order.
pub fn cells_of_weight(w: usize, n: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, slots: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slots == 1 {
            prefix.push(rest);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for v in (0..=rest).rev() {
            prefix.push(v);
            rec(rest - v, slots - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(w, n, &mut Vec::with_capacity(n), &mut out);
    }
    out
}

/// A cell together with its derived shift count `delta_0` and the column
/// count `c(delta)` of the coefficient matrix of the non-`F_0` rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DeltaIndex {
    pub delta: Vec<usize>,
    pub delta0: usize,
    pub col_count: usize,
}

impl DeltaIndex {
    pub fn weight(&self) -> usize {
        self.delta.iter().sum()
    }

    /// Number of rows of the subresultant matrix.
    pub fn rows(&self) -> usize {
        self.delta0 + self.weight()
    }
}

pub fn make_delta_index(delta: &[usize], d: &DegreeVector) -> Result<DeltaIndex> {
    if delta.len() != d.n() {
        return Err(Error::LengthMismatch(delta.len(), d.n()));
    }
    let weight: usize = delta.iter().sum();
    if weight > d.d0() {
        return Err(Error::BadWeight { weight, d0: d.d0() });
    }
    let degs = d.as_slice();
    let col_count = delta
        .iter()
        .enumerate()
        .filter(|(_, &dk)| dk != 0)
        .map(|(k, &dk)| degs[k + 1] + dk)
        .max()
        .unwrap_or(0);
    let delta0 = if col_count >= d.d0() { col_count - d.d0() } else { 1 };
    Ok(DeltaIndex { delta: delta.to_vec(), delta0, col_count })
}

/// The row list `x^(delta_0-1) F_0, .., F_0, .., x^(delta_n-1) F_n, .., F_n`.
fn shifted_rows<C: Coeff>(idx: &DeltaIndex, polys: &[XPoly<C>]) -> Vec<XPoly<C>> {
    let mut rows = Vec::with_capacity(idx.rows());
    let counts = std::iter::once(idx.delta0).chain(idx.delta.iter().copied());
    for (f, count) in polys.iter().zip(counts) {
        for e in (0..count).rev() {
            rows.push(f.shift(e as u32));
        }
    }
    rows
}

/// Subresultant matrix of the given inputs (which must match the degrees
/// used to build `idx`).
pub fn subres_matrix_of<C: Coeff>(idx: &DeltaIndex, polys: &[XPoly<C>]) -> Result<PolyMatrix<C>> {
    coefficient_matrix(&shifted_rows(idx, polys))
}

/// Subresultant matrix of the formal inputs of degrees `d`.
pub fn subres_matrix<C: Coeff>(idx: &DeltaIndex, d: &DegreeVector) -> Result<PolyMatrix<C>> {
    subres_matrix_of(idx, &formal_polys(d, false))
}

/// `(R_delta, r_delta)` of the given inputs.
pub fn subresultant_of<C: Coeff>(idx: &DeltaIndex, d0: usize, polys: &[XPoly<C>]) -> Result<(XPoly<C>, ParamPoly<C>)> {
    let m = subres_matrix_of(idx, polys)?;
    let big_r = determinant_polynomial(&m)?;
    let r = big_r.coeff((d0 - idx.weight()) as u32);
    Ok((big_r, r))
}

/// `(R_delta, r_delta)` of the formal inputs of degrees `d`.
pub fn subresultant<C: Coeff>(idx: &DeltaIndex, d: &DegreeVector) -> Result<(XPoly<C>, ParamPoly<C>)> {
    subresultant_of(idx, d.d0(), &formal_polys(d, false))
}

/// The classical `k`-subresultant of two polynomials with
/// `deg F0 = d0 <= d1 = deg F1`, and its coefficient at `x^(d0-k)`.
///
/// For `k = 0` this is `lc(F0)^max(d1-d0-1, 0) * F0`.
pub fn two_poly_subresultant<C: Coeff>(k: usize, f0: &XPoly<C>, f1: &XPoly<C>) -> Result<(XPoly<C>, ParamPoly<C>)> {
    let (d0, d1) = match (f0.degree(), f1.degree()) {
        (Degree::Finite(a), Degree::Finite(b)) if a <= b => (a as usize, b as usize),
        (a, b) => return Err(Error::DegreeOrder { dividend: b.to_string(), divisor: a.to_string() }),
    };
    if k > d0 {
        return Err(Error::BadIndex { k, d0 });
    }
    let big_r = if k == 0 {
        f0.scale(&f0.lc().pow(d1.saturating_sub(d0 + 1) as u32))
    } else {
        let mut rows = Vec::with_capacity(d1 - d0 + 2 * k);
        for e in (0..d1 + k - d0).rev() {
            rows.push(f0.shift(e as u32));
        }
        for e in (0..k).rev() {
            rows.push(f1.shift(e as u32));
        }
        determinant_polynomial(&coefficient_matrix(&rows)?)?
    };
    let r = big_r.coeff((d0 - k) as u32);
    Ok((big_r, r))
}
