//! Incremental fraction-free row echelon over sparse Laurent-coefficient
//! vectors, for rank computations over the fraction field.
//!
//! Rows are eliminated by cross-multiplication (Bareiss-style, without
//! quotients) and renormalised by stripping integer content and a common
//! monomial; both operations only rescale a row, so the rank over the
//! fraction field is unchanged.

use num_traits::One;

use crate::gamma::LaurentElt;

/// Sparse row: strictly increasing column indices with nonzero entries.
pub type SparseRow = Vec<(usize, LaurentElt)>;

pub struct FractionFreeEchelon {
    /// Pivot rows keyed by their leading column.
    pivots: Vec<SparseRow>,
}

impl FractionFreeEchelon {
    pub fn new() -> Self {
        FractionFreeEchelon { pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` against the current pivots; returns true when the row
    /// enlarged the span.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let mut row = normalize(row);
        loop {
            let Some(&(lead_col, _)) = row.first() else {
                return false;
            };
            match self.pivots.iter().find(|p| p[0].0 == lead_col) {
                None => {
                    self.pivots.push(row);
                    self.pivots.sort_by_key(|p| p[0].0);
                    return true;
                }
                Some(pivot) => {
                    let pl = pivot[0].1.clone();
                    let rl = row[0].1.clone();
                    row = normalize(row_combine(&row, &pl, pivot, &rl));
                }
            }
        }
    }
}

impl Default for FractionFreeEchelon {
    fn default() -> Self {
        Self::new()
    }
}

/// a·row − b·pivot, merged by column.
fn row_combine(row: &SparseRow, a: &LaurentElt, pivot: &SparseRow, b: &LaurentElt) -> SparseRow {
    let mut out: SparseRow = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let next = match (row.get(i), pivot.get(j)) {
            (Some((c1, x)), Some((c2, _))) if c1 < c2 => {
                i += 1;
                (*c1, x * a)
            }
            (Some((c1, _)), Some((c2, y))) if c2 < c1 => {
                j += 1;
                (*c2, -&(y * b))
            }
            (Some((c1, x)), Some((_, y))) => {
                i += 1;
                j += 1;
                (*c1, &(x * a) - &(y * b))
            }
            (Some((c1, x)), None) => {
                i += 1;
                (*c1, x * a)
            }
            (None, Some((c2, y))) => {
                j += 1;
                (*c2, -&(y * b))
            }
            (None, None) => unreachable!(),
        };
        if !next.1.is_zero() {
            out.push(next);
        }
    }
    out
}

/// Strips a common integer content and a common monomial factor; drops zeros.
fn normalize(mut row: SparseRow) -> SparseRow {
    row.retain(|(_, x)| !x.is_zero());
    if row.is_empty() {
        return row;
    }
    let mut g = num_bigint::BigInt::from(0);
    for (_, x) in &row {
        g = num_integer::Integer::gcd(&g, &x.content());
        if g.is_one() {
            break;
        }
    }
    let shift = row
        .iter()
        .map(|(_, x)| x.min_exp().unwrap().clone())
        .min()
        .unwrap();
    let unshift = -&shift;
    if g.is_one() && shift.is_zero() {
        return row;
    }
    row.into_iter()
        .map(|(c, x)| {
            let x = x.shift(&unshift);
            let x = if g.is_one() {
                x
            } else {
                x.try_div_exact(&LaurentElt::constant(x.dim(), g.clone()))
                    .expect("content divides")
            };
            (c, x)
        })
        .collect()
}
