use super::field::Field;
use super::matrix::MatrixFp;
use super::rref::rref;
use crate::error::{Error, Result};

/// A subspace of F_p^m held by its canonical RREF basis.
///
/// The basis has no zero rows, so equal subspaces have identical bases and
/// `==` is subspace equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    basis: MatrixFp,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient_dim: usize) -> Self {
        Subspace {
            basis: MatrixFp::zeros(field, 0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient_dim: usize) -> Self {
        Subspace {
            basis: MatrixFp::identity(field, ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Row space of `m`.
    pub fn from_matrix(m: MatrixFp) -> Self {
        let mut reduced = rref(&m);
        reduced.matrix.truncate_rows(reduced.rank);
        Subspace {
            basis: reduced.matrix,
            pivots: reduced.pivot_cols,
        }
    }

    /// Span of the given vectors.
    pub fn span<R: AsRef<[u32]>>(field: Field, ambient_dim: usize, vectors: &[R]) -> Result<Self> {
        Ok(Self::from_matrix(MatrixFp::from_rows(
            field,
            ambient_dim,
            vectors,
        )?))
    }

    pub fn field(&self) -> Field {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis(&self) -> &MatrixFp {
        &self.basis
    }

    pub fn basis_rows(&self) -> impl ExactSizeIterator<Item = &[u32]> + '_ {
        self.basis.row_iter()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        self.field().check_same(other.field())?;
        if self.ambient_dim() != other.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim(),
                found: other.ambient_dim(),
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        Ok(Subspace::from_matrix(self.basis.stack(&other.basis)?))
    }

    /// Intersection by the Zassenhaus construction: reduce
    /// `[[A, A], [B, 0]]`; the rows whose left half vanishes carry a basis of
    /// `A ∩ B` in their right half.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let m = self.ambient_dim();
        let field = self.field();
        let rows = self.dim() + other.dim();
        let mut block = MatrixFp::zeros(field, rows, 2 * m);
        for (r, row) in self.basis_rows().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                block.set(r, c, v);
                block.set(r, m + c, v);
            }
        }
        for (r, row) in other.basis_rows().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                block.set(self.dim() + r, c, v);
            }
        }
        let reduced = rref(&block);
        // Pivots are increasing, so rows with a pivot >= m are exactly the ones
        // whose left half is zero.
        let first = reduced
            .pivot_cols
            .iter()
            .position(|&c| c >= m)
            .unwrap_or(reduced.rank);
        let mut entries = Vec::with_capacity((reduced.rank - first) * m);
        for r in first..reduced.rank {
            entries.extend_from_slice(&reduced.matrix.row(r)[m..]);
        }
        let basis = MatrixFp::from_raw(field, reduced.rank - first, m, entries);
        Ok(Subspace::from_matrix(basis))
    }

    /// Reduces `v` against the basis and returns the remainder; zero iff
    /// `v` lies in the subspace.
    pub fn reduce(&self, v: &[u32]) -> Result<Vec<u32>> {
        if v.len() != self.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim(),
                found: v.len(),
            });
        }
        let prime = self.field().prime();
        let mut rest = v.to_vec();
        for (row, &pc) in self.basis_rows().zip(&self.pivots) {
            let factor = rest[pc];
            if factor == 0 {
                continue;
            }
            for (x, &b) in rest[pc..].iter_mut().zip(&row[pc..]) {
                *x = prime.sub(*x, prime.mul(factor, b));
            }
        }
        Ok(rest)
    }

    pub fn contains(&self, v: &[u32]) -> Result<bool> {
        Ok(self.reduce(v)?.iter().all(|&x| x == 0))
    }

    /// `self ⊆ other`.
    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check_compatible(other)?;
        for row in self.basis_rows() {
            if !other.contains(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Coefficients `c` with `v = Σ c_i basis_i`, if `v` is in the span.
    pub fn coordinates(&self, v: &[u32]) -> Result<Option<Vec<u32>>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        // In RREF, the coefficient of row i is the entry of v at pivot i.
        Ok(Some(self.pivots.iter().map(|&pc| v[pc]).collect()))
    }
}

pub fn subspace_sum(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    a.sum(b)
}

pub fn subspace_intersect(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    a.intersect(b)
}

pub fn contains(a: &Subspace, v: &[u32]) -> Result<bool> {
    a.contains(v)
}

/// `b ⊆ a`.
pub fn subspace_leq(b: &Subspace, a: &Subspace) -> Result<bool> {
    b.is_subspace_of(a)
}
