//! Exact rational linear algebra: reduced row-echelon bases of subspaces of
//! `Q^n`, membership tests and span equality.

use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// Exact rational scalar, always in lowest terms with positive denominator.
pub type Scalar = BigRational;

/// Shorthand for an integer-valued scalar.
pub fn int(value: i64) -> Scalar {
    Scalar::from_integer(value.into())
}

/// Shorthand for the scalar `num / den`.
///
/// Panics if `den` is zero.
pub fn ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(num.into(), den.into())
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("ragged input: row {row} has length {found}, expected {expected}")]
    Ragged {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("cannot infer a column count from an empty list of rows")]
    NoRows,
    #[error("vector length {found} does not match column count {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("column counts differ: {left} vs {right}")]
    ColumnMismatch { left: usize, right: usize },
}

/// A subspace of `Q^columns` stored as its reduced row-echelon basis.
///
/// Every row is nonzero, every pivot entry is 1, pivots move strictly to the
/// right and each pivot column is zero outside its own row. Since the RREF of
/// a subspace is unique, two bases span the same space iff they are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RowBasis {
    columns: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

/// Row-reduces `rows`, which must be nonempty and of equal length.
pub fn rref(rows: &[Vec<Scalar>]) -> Result<RowBasis, LinalgError> {
    let first = rows.first().ok_or(LinalgError::NoRows)?;
    RowBasis::from_rows(first.len(), rows.iter().cloned())
}

/// Whether `v` lies in the row span of `basis`.
pub fn contains(basis: &RowBasis, v: &[Scalar]) -> Result<bool, LinalgError> {
    basis.contains(v)
}

/// Whether two bases span the same subspace.
pub fn spaces_equal(a: &RowBasis, b: &RowBasis) -> Result<bool, LinalgError> {
    if a.columns != b.columns {
        return Err(LinalgError::ColumnMismatch {
            left: a.columns,
            right: b.columns,
        });
    }
    Ok(a.rows == b.rows)
}

impl RowBasis {
    /// The zero subspace of `Q^columns`.
    pub fn empty(columns: usize) -> Self {
        RowBasis {
            columns,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// The whole space `Q^columns`.
    pub fn full(columns: usize) -> Self {
        let rows = (0..columns)
            .map(|i| {
                (0..columns)
                    .map(|j| {
                        if i == j {
                            Scalar::one()
                        } else {
                            Scalar::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        RowBasis {
            columns,
            rows,
            pivots: (0..columns).collect(),
        }
    }

    /// Row-reduces an arbitrary (possibly empty) family of vectors of length `columns`.
    pub fn from_rows<I>(columns: usize, rows: I) -> Result<Self, LinalgError>
    where
        I: IntoIterator<Item = Vec<Scalar>>,
    {
        let mut work: Vec<Vec<Scalar>> = Vec::new();
        for (index, row) in rows.into_iter().enumerate() {
            if row.len() != columns {
                return Err(LinalgError::Ragged {
                    row: index,
                    expected: columns,
                    found: row.len(),
                });
            }
            if row.iter().any(|c| !c.is_zero()) {
                work.push(row);
            }
        }

        let mut pivots = Vec::new();
        let mut next = 0;
        for col in 0..columns {
            if next == work.len() {
                break;
            }
            let Some(found) = (next..work.len()).find(|&r| !work[r][col].is_zero()) else {
                continue;
            };
            work.swap(next, found);
            let inv = work[next][col].recip();
            for entry in work[next].iter_mut().skip(col) {
                *entry *= &inv;
            }
            let pivot_row = work[next].clone();
            for (r, row) in work.iter_mut().enumerate() {
                if r == next || row[col].is_zero() {
                    continue;
                }
                let factor = row[col].clone();
                for (entry, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                    if !p.is_zero() {
                        *entry -= &factor * p;
                    }
                }
            }
            pivots.push(col);
            next += 1;
        }
        work.truncate(next);
        Ok(RowBasis {
            columns,
            rows: work,
            pivots,
        })
    }

    pub fn columns(&self) -> usize {
        self.columns
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    /// Pivot column of each row, strictly increasing.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns without a pivot, in increasing order.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut pivots = self.pivots.iter().peekable();
        (0..self.columns)
            .filter(|c| {
                if pivots.peek() == Some(&c) {
                    pivots.next();
                    false
                } else {
                    true
                }
            })
            .collect()
    }

    /// Residual of `v` after eliminating every pivot column. Zero exactly
    /// when `v` is in the span.
    pub fn reduce(&self, v: &[Scalar]) -> Result<Vec<Scalar>, LinalgError> {
        if v.len() != self.columns {
            return Err(LinalgError::LengthMismatch {
                expected: self.columns,
                found: v.len(),
            });
        }
        let mut residual = v.to_vec();
        for (row, &pivot) in self.rows.iter().zip(&self.pivots) {
            if residual[pivot].is_zero() {
                continue;
            }
            let factor = residual[pivot].clone();
            for (entry, r) in residual.iter_mut().zip(row).skip(pivot) {
                if !r.is_zero() {
                    *entry -= &factor * r;
                }
            }
        }
        Ok(residual)
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool, LinalgError> {
        Ok(self.reduce(v)?.iter().all(Zero::is_zero))
    }

    /// Basis of the span of `self` together with `extra`.
    pub fn extend<I>(&self, extra: I) -> Result<Self, LinalgError>
    where
        I: IntoIterator<Item = Vec<Scalar>>,
    {
        RowBasis::from_rows(self.columns, self.rows.iter().cloned().chain(extra))
    }

    /// Whether the span of `self` is contained in the span of `other`.
    pub fn is_subspace_of(&self, other: &RowBasis) -> Result<bool, LinalgError> {
        if self.columns != other.columns {
            return Err(LinalgError::ColumnMismatch {
                left: self.columns,
                right: other.columns,
            });
        }
        for row in &self.rows {
            if !other.contains(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(data: &[&[i64]]) -> Vec<Vec<Scalar>> {
        data.iter()
            .map(|r| r.iter().map(|&v| int(v)).collect())
            .collect()
    }

    #[test]
    fn proportional_rows_collapse() {
        let b = rref(&rows(&[&[2, 4], &[1, 2]])).unwrap();
        assert_eq!(b.rank(), 1);
        assert_eq!(b.rows(), rows(&[&[1, 2]]).as_slice());
    }

    #[test]
    fn identity_stays_identity() {
        let b = rref(&rows(&[&[1, 0], &[0, 1]])).unwrap();
        assert_eq!(b, RowBasis::full(2));
    }

    #[test]
    fn three_by_three_reduction() {
        let b = rref(&rows(&[&[2, 1, 1], &[4, 2, 2], &[2, 1, 0]])).unwrap();
        assert_eq!(b.rank(), 2);
        assert_eq!(
            b.rows(),
            &[
                vec![int(1), ratio(1, 2), int(0)],
                vec![int(0), int(0), int(1)]
            ]
        );
        assert_eq!(b.pivots(), &[0, 2]);
        assert_eq!(b.free_columns(), vec![1]);
    }

    #[test]
    fn membership() {
        let b = rref(&rows(&[&[1, 2]])).unwrap();
        assert!(contains(&b, &[int(3), int(6)]).unwrap());
        assert!(!contains(&b, &[int(1), int(0)]).unwrap());

        let b = rref(&rows(&[&[2, 1, 1], &[2, 1, 0]])).unwrap();
        assert!(contains(&b, &[int(2), int(1), int(5)]).unwrap());
    }

    #[test]
    fn span_equality() {
        let a = rref(&rows(&[&[1, 1], &[0, 1]])).unwrap();
        let b = rref(&rows(&[&[1, 0], &[0, 1]])).unwrap();
        assert!(spaces_equal(&a, &b).unwrap());

        let a = rref(&rows(&[&[1, 2]])).unwrap();
        let b = rref(&rows(&[&[1, 3]])).unwrap();
        assert!(!spaces_equal(&a, &b).unwrap());

        // x^2 and x^2 + y^2 against x^2 and y^2, columns (x^2, xy, y^2)
        let a = rref(&rows(&[&[1, 0, 0], &[1, 0, 1]])).unwrap();
        let b = rref(&rows(&[&[1, 0, 0], &[0, 0, 1]])).unwrap();
        assert!(spaces_equal(&a, &b).unwrap());
    }

    #[test]
    fn usage_errors() {
        assert_eq!(
            rref(&rows(&[&[1, 2], &[1]])),
            Err(LinalgError::Ragged {
                row: 1,
                expected: 2,
                found: 1
            })
        );
        assert_eq!(rref(&[]), Err(LinalgError::NoRows));
        let b = rref(&rows(&[&[1, 2]])).unwrap();
        assert!(matches!(
            contains(&b, &[int(1)]),
            Err(LinalgError::LengthMismatch { .. })
        ));
        let c = RowBasis::full(3);
        assert!(matches!(
            spaces_equal(&b, &c),
            Err(LinalgError::ColumnMismatch { .. })
        ));
    }

    #[test]
    fn zero_rows_are_dropped() {
        let b = RowBasis::from_rows(3, rows(&[&[0, 0, 0]])).unwrap();
        assert_eq!(b, RowBasis::empty(3));
        assert_eq!(b.free_columns(), vec![0, 1, 2]);
    }
}
