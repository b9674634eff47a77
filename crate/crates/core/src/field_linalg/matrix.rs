use std::fmt;

use super::field::Field;
use crate::error::{Error, Result};

/// Dense row-major matrix over F_p.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MatrixFp {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<u32>,
}

impl MatrixFp {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        MatrixFp {
            field,
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    pub fn identity(field: Field, dim: usize) -> Self {
        let mut m = Self::zeros(field, dim, dim);
        for i in 0..dim {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from explicit rows, validating lengths and that
    /// every entry lies in `[0, p)`.
    pub fn from_rows<R: AsRef<[u32]>>(field: Field, cols: usize, rows: &[R]) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            if let Some(&bad) = row.iter().find(|&&v| v >= field.p()) {
                return Err(Error::ValueOutOfField {
                    value: u64::from(bad),
                    p: field.p(),
                });
            }
            entries.extend_from_slice(row);
        }
        Ok(MatrixFp {
            field,
            rows: rows.len(),
            cols,
            entries,
        })
    }

    pub(crate) fn from_raw(field: Field, rows: usize, cols: usize, entries: Vec<u32>) -> Self {
        debug_assert_eq!(entries.len(), rows * cols);
        MatrixFp {
            field,
            rows,
            cols,
            entries,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: u32) {
        debug_assert!(value < self.field.p());
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub(crate) fn row_mut(&mut self, r: usize) -> &mut [u32] {
        &mut self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl ExactSizeIterator<Item = &[u32]> + '_ {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn is_zero_row(&self, r: usize) -> bool {
        self.row(r).iter().all(|&v| v == 0)
    }

    /// Vertical concatenation.
    pub fn stack(&self, other: &MatrixFp) -> Result<MatrixFp> {
        self.field.check_same(other.field)?;
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.cols,
            });
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Ok(MatrixFp::from_raw(
            self.field,
            self.rows + other.rows,
            self.cols,
            entries,
        ))
    }

    /// Matrix-vector product `self · x`.
    pub fn mul_vec(&self, x: &[u32]) -> Result<Vec<u32>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: x.len(),
            });
        }
        let p = u64::from(self.field.p());
        Ok(self
            .row_iter()
            .map(|row| {
                let acc = row.iter().zip(x).fold(0u64, |acc, (&a, &b)| {
                    (acc + u64::from(a) * u64::from(b)) % p
                });
                acc as u32
            })
            .collect())
    }

    pub fn transpose(&self) -> MatrixFp {
        let mut t = MatrixFp::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    /// Keeps the first `rows` rows.
    pub(crate) fn truncate_rows(&mut self, rows: usize) {
        self.rows = self.rows.min(rows);
        self.entries.truncate(self.rows * self.cols);
    }
}

impl fmt::Debug for MatrixFp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "MatrixFp<F_{}> {}x{} [",
            self.field.p(),
            self.rows,
            self.cols
        )?;
        for row in self.row_iter() {
            writeln!(f, "  {row:?}")?;
        }
        write!(f, "]")
    }
}
