//! Coefficient matrices and determinant polynomials.
//!
//! The determinant polynomial of a `p x q` matrix (`p <= q`) is
//! `sum_j c_j x^j` where `c_j` is the determinant of the first `p - 1`
//! columns together with column `q - j` (1-based). All `c_j` share the
//! leading `p - 1` columns. [`determinant_polynomial`] expands by cofactors
//! and memoizes minors by column set, so the lower-row minors are computed
//! once for all `c_j`. [`determinant_polynomial_bareiss`] instead runs one
//! fraction-free elimination over the wide matrix and reads every `c_j` off
//! the last row; it is slower once entries are large sparse polynomials.

use std::collections::HashMap;

use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::polyring::{Degree, ParamPoly, XPoly};

/// Row-major matrix of parameter polynomials.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyMatrix<C> {
    rows: usize,
    cols: usize,
    entries: Vec<ParamPoly<C>>,
}

impl<C: Coeff> PolyMatrix<C> {
    pub fn new(rows: usize, cols: usize, entries: Vec<ParamPoly<C>>) -> Result<Self> {
        if rows == 0 || cols == 0 || entries.len() != rows * cols {
            return Err(Error::Shape { rows, cols, len: entries.len() });
        }
        Ok(PolyMatrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<ParamPoly<C>>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape { rows: r, cols: c, len: rows.iter().map(Vec::len).sum() });
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &ParamPoly<C> {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[ParamPoly<C>] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    /// Square submatrix on the given columns (all rows).
    pub fn select_columns(&self, cols: &[usize]) -> PolyMatrix<C> {
        let entries = (0..self.rows).flat_map(|i| cols.iter().map(move |&j| self.get(i, j).clone())).collect();
        PolyMatrix { rows: self.rows, cols: cols.len(), entries }
    }

    pub fn swap_rows(&self, a: usize, b: usize) -> PolyMatrix<C> {
        let mut rows: Vec<Vec<ParamPoly<C>>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        rows.swap(a, b);
        PolyMatrix { rows: self.rows, cols: self.cols, entries: rows.into_iter().flatten().collect() }
    }
}

/// `cm(P)`: row `i` holds the coefficients of `P_i` from `x^m` down to `x^0`,
/// where `m` is the largest degree; shorter polynomials are left-padded.
pub fn coefficient_matrix<C: Coeff>(polys: &[XPoly<C>]) -> Result<PolyMatrix<C>> {
    if polys.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut degrees = Vec::with_capacity(polys.len());
    for (i, p) in polys.iter().enumerate() {
        match p.degree() {
            Degree::Finite(d) => degrees.push(d),
            Degree::NegInfinity => return Err(Error::ZeroPolynomial(i)),
        }
    }
    let m = *degrees.iter().max().unwrap();
    let cols = m as usize + 1;
    let mut entries = Vec::with_capacity(polys.len() * cols);
    for p in polys {
        for j in 0..cols {
            entries.push(p.coeff(m - j as u32));
        }
    }
    PolyMatrix::new(polys.len(), cols, entries)
}

/// Determinant by cofactor expansion along rows, memoizing minors by their
/// column set.
pub fn naive_det<C: Coeff>(m: &PolyMatrix<C>) -> Result<ParamPoly<C>> {
    if m.rows != m.cols {
        return Err(Error::NotSquare { rows: m.rows, cols: m.cols });
    }
    assert!(m.rows <= 63, "cofactor expansion limited to 63 columns");
    let mut memo: HashMap<u64, ParamPoly<C>> = HashMap::new();
    let all = if m.cols == 64 { u64::MAX } else { (1u64 << m.cols) - 1 };
    Ok(minor(m, 0, all, &mut memo))
}

fn minor<C: Coeff>(m: &PolyMatrix<C>, row: usize, cols: u64, memo: &mut HashMap<u64, ParamPoly<C>>) -> ParamPoly<C> {
    if row == m.rows {
        return ParamPoly::one();
    }
    if let Some(v) = memo.get(&cols) {
        return v.clone();
    }
    let mut acc = ParamPoly::zero();
    let mut position = 0;
    for j in 0..m.cols {
        if cols & (1 << j) == 0 {
            continue;
        }
        let entry = m.get(row, j);
        if !entry.is_zero() {
            let sub = minor(m, row + 1, cols & !(1 << j), memo);
            let term = entry.mul(&sub);
            acc = if position % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        position += 1;
    }
    memo.insert(cols, acc.clone());
    acc
}

/// Fraction-free elimination of the first `p - 1` columns of a `p x q`
/// matrix. Returns the last row (columns `p-1..q`) with the row-swap sign
/// applied, so entry `k` is `det[M_1 .. M_{p-1} M_{p-1+k}]`; `None` when a
/// pivot column is structurally zero.
fn eliminate<C: Coeff>(m: &PolyMatrix<C>) -> Result<Option<Vec<ParamPoly<C>>>> {
    let (p, q) = (m.rows, m.cols);
    let mut a: Vec<Vec<ParamPoly<C>>> = (0..p).map(|i| m.row(i).to_vec()).collect();
    let mut negate = false;
    let mut prev = ParamPoly::one();
    for k in 0..p - 1 {
        let Some(piv) = (k..p).find(|&r| !a[r][k].is_zero()) else {
            return Ok(None);
        };
        if piv != k {
            a.swap(piv, k);
            negate = !negate;
        }
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        for row in rest.iter_mut() {
            let lead = std::mem::take(&mut row[k]);
            for j in k + 1..q {
                let mut v = pivot.mul(&row[j]);
                if !lead.is_zero() && !pivot_row[j].is_zero() {
                    v = v.sub(&lead.mul(&pivot_row[j]));
                }
                row[j] = v.exact_div(&prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let last = a.pop().unwrap();
    Ok(Some(last.into_iter().skip(p - 1).map(|v| if negate { v.neg() } else { v }).collect()))
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn bareiss_det<C: Coeff>(m: &PolyMatrix<C>) -> Result<ParamPoly<C>> {
    if m.rows != m.cols {
        return Err(Error::NotSquare { rows: m.rows, cols: m.cols });
    }
    match eliminate(m)? {
        Some(mut last) => Ok(last.pop().unwrap()),
        None => Ok(ParamPoly::zero()),
    }
}

/// `dp(M)` by cofactor expansion, with minors of the lower rows shared
/// across all coefficients.
pub fn determinant_polynomial<C: Coeff>(m: &PolyMatrix<C>) -> Result<XPoly<C>> {
    let (p, q) = (m.rows, m.cols);
    if p > q {
        return Err(Error::TooTall { rows: p, cols: q });
    }
    assert!(q <= 63, "cofactor expansion limited to 63 columns");
    let mut memo: HashMap<u64, ParamPoly<C>> = HashMap::new();
    let lead = (1u64 << (p - 1)) - 1;
    let coeffs: Vec<ParamPoly<C>> = (0..=q - p).map(|j| minor(m, 0, lead | 1 << (q - 1 - j), &mut memo)).collect();
    Ok(XPoly::from_ascending(coeffs))
}

/// `dp(M)` from one fraction-free elimination of the first `p - 1` columns.
pub fn determinant_polynomial_bareiss<C: Coeff>(m: &PolyMatrix<C>) -> Result<XPoly<C>> {
    let (p, q) = (m.rows, m.cols);
    if p > q {
        return Err(Error::TooTall { rows: p, cols: q });
    }
    match eliminate(m)? {
        // last[k] sits in column p-1+k, i.e. x^(q-p-k)
        Some(last) => Ok(XPoly::from_ascending(last.into_iter().rev())),
        None => naive_determinant_polynomial(m),
    }
}

/// `dp(M)` with every coefficient computed by its own cofactor expansion.
pub fn naive_determinant_polynomial<C: Coeff>(m: &PolyMatrix<C>) -> Result<XPoly<C>> {
    let (p, q) = (m.rows, m.cols);
    if p > q {
        return Err(Error::TooTall { rows: p, cols: q });
    }
    let mut coeffs = Vec::with_capacity(q - p + 1);
    for j in 0..=q - p {
        let mut cols: Vec<usize> = (0..p - 1).collect();
        cols.push(q - 1 - j);
        coeffs.push(naive_det(&m.select_columns(&cols))?);
    }
    Ok(XPoly::from_ascending(coeffs))
}

/// `pcdp(M)`: the coefficient of `dp(M)` at `x^(q-p)`, possibly zero.
pub fn pcdp<C: Coeff>(m: &PolyMatrix<C>) -> Result<ParamPoly<C>> {
    let (p, q) = (m.rows, m.cols);
    if p > q {
        return Err(Error::TooTall { rows: p, cols: q });
    }
    let cols: Vec<usize> = (0..p).collect();
    bareiss_det(&m.select_columns(&cols))
}
