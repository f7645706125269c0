//! Case tables from determinant polynomials of subresultant matrices.

use rayon::prelude::*;

use crate::coeff::Coeff;
use crate::error::Result;
use crate::polyring::XPoly;
use crate::subres::{enumerate_cells, formal_polys, make_delta_index, subresultant_of, DegreeVector};
use crate::table::{Algorithm, CaseTable, GcdCase};

/// Case table for the formal inputs of degrees `d`, one case per cell in
/// descending graded lexicographic order.
pub fn pgcd<C: Coeff>(d: &DegreeVector) -> Result<CaseTable<C>> {
    pgcd_of(d, &formal_polys(d, false), false)
}

/// Same as [`pgcd`] with `a[0][d0] = 1`.
pub fn pgcd_monic<C: Coeff>(d: &DegreeVector) -> Result<CaseTable<C>> {
    pgcd_of(d, &formal_polys(d, true), true)
}

/// Case table for inputs whose degrees are exactly `d`.
pub fn pgcd_of<C: Coeff>(d: &DegreeVector, polys: &[XPoly<C>], monic: bool) -> Result<CaseTable<C>> {
    let cells = enumerate_cells(d.d0(), d.n());
    let cases = cells
        .par_iter()
        .map(|delta| {
            let idx = make_delta_index(delta, d)?;
            let (big_r, r) = subresultant_of(&idx, d.d0(), polys)?;
            Ok(GcdCase { delta: delta.clone(), r, big_r, conditions: Vec::new() })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CaseTable { degrees: d.clone(), monic, algorithm: Algorithm::Sylvester, cases })
}
