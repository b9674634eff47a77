//! Canonical reduced row-echelon form and kernels.
//!
//! Two kernels compute the same canonical form: a word-sized modular one for
//! any prime, and a bit-packed one for p = 2 that stores 64 columns per
//! `u64` and eliminates with XOR.

use super::field::Field;
use super::matrix::MatrixFp;
use super::subspace::Subspace;

/// Output of [`rref`]: the reduced matrix (same shape as the input, zero rows
/// at the bottom), its rank and its pivot columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub matrix: MatrixFp,
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
}

pub fn rref(m: &MatrixFp) -> Rref {
    if m.field().uses_bit_packing() {
        rref_packed(m)
    } else {
        rref_generic(m)
    }
}

fn rref_generic(m: &MatrixFp) -> Rref {
    let prime = m.field().prime();
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut pivot_cols = Vec::new();
    let mut rank = 0;

    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| a.get(r, c) != 0) else {
            continue;
        };
        swap_rows(&mut a, pivot, rank);

        let inv = prime.inv(a.get(rank, c));
        if inv != 1 {
            for v in a.row_mut(rank)[c..].iter_mut() {
                *v = prime.mul(*v, inv);
            }
        }
        let pivot_row: Vec<u32> = a.row(rank)[c..].to_vec();
        for r in 0..rows {
            if r == rank {
                continue;
            }
            let factor = a.get(r, c);
            if factor == 0 {
                continue;
            }
            for (v, &pv) in a.row_mut(r)[c..].iter_mut().zip(&pivot_row) {
                *v = prime.sub(*v, prime.mul(factor, pv));
            }
        }
        pivot_cols.push(c);
        rank += 1;
    }

    Rref {
        matrix: a,
        rank,
        pivot_cols,
    }
}

fn swap_rows(a: &mut MatrixFp, i: usize, j: usize) {
    if i == j {
        return;
    }
    let cols = a.cols();
    for c in 0..cols {
        let (x, y) = (a.get(i, c), a.get(j, c));
        a.set(i, c, y);
        a.set(j, c, x);
    }
}

/// One bit per column, `ceil(cols / 64)` words per row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct PackedRows {
    pub words_per_row: usize,
    pub cols: usize,
    pub words: Vec<u64>,
}

impl PackedRows {
    pub fn from_matrix(m: &MatrixFp) -> Self {
        debug_assert_eq!(m.field().p(), 2);
        let words_per_row = m.cols().div_ceil(64);
        let mut words = vec![0u64; words_per_row * m.rows()];
        for (r, row) in m.row_iter().enumerate() {
            let out = &mut words[r * words_per_row..(r + 1) * words_per_row];
            for (c, &v) in row.iter().enumerate() {
                if v != 0 {
                    out[c / 64] |= 1 << (c % 64);
                }
            }
        }
        PackedRows {
            words_per_row,
            cols: m.cols(),
            words,
        }
    }

    #[inline]
    pub fn bit(&self, r: usize, c: usize) -> bool {
        (self.words[r * self.words_per_row + c / 64] >> (c % 64)) & 1 == 1
    }

    fn xor_into(&mut self, src: usize, dst: usize) {
        let w = self.words_per_row;
        let (lo, hi) = self.words.split_at_mut(src.max(dst) * w);
        let (s, d) = if src < dst {
            (&lo[src * w..(src + 1) * w], &mut hi[..w])
        } else {
            (&hi[..w], &mut lo[dst * w..(dst + 1) * w])
        };
        for (dv, sv) in d.iter_mut().zip(s) {
            *dv ^= sv;
        }
    }

    fn swap(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        let w = self.words_per_row;
        for k in 0..w {
            self.words.swap(i * w + k, j * w + k);
        }
    }

    pub fn to_matrix(&self, field: Field, rows: usize) -> MatrixFp {
        let mut entries = vec![0u32; rows * self.cols];
        for r in 0..rows {
            for c in 0..self.cols {
                if self.bit(r, c) {
                    entries[r * self.cols + c] = 1;
                }
            }
        }
        MatrixFp::from_raw(field, rows, self.cols, entries)
    }
}

fn rref_packed(m: &MatrixFp) -> Rref {
    let rows = m.rows();
    if rows == 0 || m.cols() == 0 {
        return Rref {
            matrix: m.clone(),
            rank: 0,
            pivot_cols: Vec::new(),
        };
    }
    let mut packed = PackedRows::from_matrix(m);
    let mut pivot_cols = Vec::new();
    let mut rank = 0;
    for c in 0..m.cols() {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| packed.bit(r, c)) else {
            continue;
        };
        packed.swap(pivot, rank);
        for r in 0..rows {
            if r != rank && packed.bit(r, c) {
                packed.xor_into(rank, r);
            }
        }
        pivot_cols.push(c);
        rank += 1;
    }
    Rref {
        matrix: packed.to_matrix(m.field(), rows),
        rank,
        pivot_cols,
    }
}

/// The kernel `{x : m·x = 0}` as a canonical subspace of F_p^cols.
pub fn nullspace(m: &MatrixFp) -> Subspace {
    let field = m.field();
    let prime = field.prime();
    let cols = m.cols();
    let reduced = rref(m);
    let mut is_pivot = vec![false; cols];
    for &c in &reduced.pivot_cols {
        is_pivot[c] = true;
    }

    // x_free = e_f, x_pivot(i) = -R[i][f]
    let free: Vec<usize> = (0..cols).filter(|&c| !is_pivot[c]).collect();
    let mut entries = vec![0u32; free.len() * cols];
    for (b, &f) in free.iter().enumerate() {
        let row = &mut entries[b * cols..(b + 1) * cols];
        row[f] = 1;
        for (i, &pc) in reduced.pivot_cols.iter().enumerate() {
            row[pc] = prime.neg(reduced.matrix.get(i, f));
        }
    }
    Subspace::from_matrix(MatrixFp::from_raw(field, free.len(), cols, entries))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field_linalg::field::{Backend, Prime};

    fn f(p: u64) -> Field {
        Field::from_p(p).unwrap()
    }

    fn mat(p: u64, rows: &[&[u32]]) -> MatrixFp {
        MatrixFp::from_rows(f(p), rows[0].len(), rows).unwrap()
    }

    #[test]
    fn identity_is_fixed() {
        let id = MatrixFp::identity(f(2), 2);
        let r = rref(&id);
        assert_eq!(r.matrix, id);
        assert_eq!(r.rank, 2);
        assert_eq!(r.pivot_cols, vec![0, 1]);
    }

    #[test]
    fn duplicate_row_over_f2() {
        let r = rref(&mat(2, &[&[1, 1], &[1, 1]]));
        assert_eq!(r.matrix, mat(2, &[&[1, 1], &[0, 0]]));
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivot_cols, vec![0]);
    }

    #[test]
    fn dependent_rows_over_f3() {
        // 2*(1,2) = (2,4) = (2,1) mod 3
        let r = rref(&mat(3, &[&[2, 1], &[1, 2]]));
        assert_eq!(r.matrix, mat(3, &[&[1, 2], &[0, 0]]));
        assert_eq!(r.rank, 1);
    }

    #[test]
    fn zero_map_kernel_is_everything() {
        let z = MatrixFp::zeros(f(2), 2, 3);
        let k = nullspace(&z);
        assert_eq!(k.dim(), 3);
        assert_eq!(k, Subspace::full(f(2), 3));
    }

    #[test]
    fn injective_map_has_trivial_kernel() {
        let k = nullspace(&MatrixFp::identity(f(5), 4));
        assert_eq!(k.dim(), 0);
    }

    #[test]
    fn kernel_of_single_row_matches_enumeration() {
        let m = mat(2, &[&[1, 1, 0]]);
        let k = nullspace(&m);
        // brute force: every x in F_2^3 with x0 + x1 = 0
        let mut expected = Vec::new();
        for bits in 0u32..8 {
            let x = [bits & 1, (bits >> 1) & 1, (bits >> 2) & 1];
            if (x[0] + x[1]) % 2 == 0 {
                expected.push(x);
            }
        }
        assert_eq!(expected.len(), 4);
        assert_eq!(k.dim(), 2);
        for x in &expected {
            assert!(k.contains(x).unwrap());
        }
        assert!(k.contains(&[1, 1, 0]).unwrap());
        assert!(k.contains(&[0, 0, 1]).unwrap());
        assert!(!k.contains(&[1, 0, 0]).unwrap());
    }

    #[test]
    fn packed_handles_wide_rows() {
        let field = Field::with_backend(Prime::two(), Backend::Packed);
        let generic = Field::with_backend(Prime::two(), Backend::Generic);
        let cols = 150;
        let rows: Vec<Vec<u32>> = (0..5)
            .map(|r| {
                (0..cols)
                    .map(|c| ((c * 7 + r * 13) % 3 == 0) as u32)
                    .collect()
            })
            .collect();
        let a = rref(&MatrixFp::from_rows(field, cols, &rows).unwrap());
        let b = rref(&MatrixFp::from_rows(generic, cols, &rows).unwrap());
        assert_eq!(a.matrix, b.matrix);
        assert_eq!(a.pivot_cols, b.pivot_cols);
    }

    #[test]
    fn empty_shapes() {
        let r = rref(&MatrixFp::zeros(f(2), 0, 4));
        assert_eq!(r.rank, 0);
        let r = rref(&MatrixFp::zeros(f(3), 3, 0));
        assert_eq!(r.rank, 0);
        assert_eq!(nullspace(&MatrixFp::zeros(f(2), 0, 3)).dim(), 3);
    }
}
