use crate::error::{Error, Result};
use crate::field_linalg::{Field, MatrixFp, Prime, Subspace};
use crate::symplectic::{support_subspace, sym_form_flat, sym_orth, PauliVector, QubitSet};

/// A stabilizer code: an isotropic subspace `S ⊆ F_p^{2n}` with
/// `dim S = n − k`.
///
/// The normalizer `S^⊥` is computed once at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilizerCode {
    field: Field,
    n: usize,
    stabilizers: Subspace,
    normalizer: Subspace,
}

/// Builds a code from generators, which may be dependent or repeated.
pub fn make_code(field: Field, n: usize, generators: &[PauliVector]) -> Result<StabilizerCode> {
    let prime = field.prime();
    let mut rows = Vec::with_capacity(generators.len());
    for g in generators {
        if g.modulus() != prime {
            return Err(Error::ModulusMismatch {
                left: prime.get(),
                right: g.modulus().get(),
            });
        }
        if g.n() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: g.n(),
            });
        }
        rows.push(g.to_flat());
    }
    if let Some((first, second, value)) = first_noncommuting_pair(prime, &rows) {
        return Err(Error::NotIsotropic {
            first,
            second,
            value,
        });
    }
    let stabilizers = Subspace::span(field, 2 * n, &rows)?;
    StabilizerCode::from_isotropic(stabilizers)
}

fn first_noncommuting_pair(prime: Prime, rows: &[Vec<u32>]) -> Option<(usize, usize, u32)> {
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            let value = sym_form_flat(prime, &rows[i], &rows[j]);
            if value != 0 {
                return Some((i, j, value));
            }
        }
    }
    None
}

impl StabilizerCode {
    /// Wraps an already-built subspace after checking that it is isotropic.
    pub fn from_isotropic(stabilizers: Subspace) -> Result<StabilizerCode> {
        let ambient = stabilizers.ambient_dim();
        if !ambient.is_multiple_of(2) {
            return Err(Error::OddAmbientDimension(ambient));
        }
        let n = ambient / 2;
        if let Some((first, second, value)) = crate::symplectic::isotropy_witness(&stabilizers) {
            return Err(Error::NotIsotropic {
                first,
                second,
                value,
            });
        }
        if stabilizers.dim() > n {
            return Err(Error::DimensionExceedsN {
                dim: stabilizers.dim(),
                n,
            });
        }
        let normalizer = sym_orth(&stabilizers)?;
        Ok(StabilizerCode {
            field: stabilizers.field(),
            n,
            stabilizers,
            normalizer,
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn prime(&self) -> Prime {
        self.field.prime()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `k = n − dim S`.
    pub fn k(&self) -> usize {
        self.n - self.stabilizers.dim()
    }

    /// The stabilizer subspace `S`.
    pub fn stabilizers(&self) -> &Subspace {
        &self.stabilizers
    }

    /// `S^⊥`.
    pub fn normalizer(&self) -> &Subspace {
        &self.normalizer
    }

    /// The canonical basis of `S` as Pauli vectors.
    pub fn generators(&self) -> Vec<PauliVector> {
        self.stabilizers
            .basis_rows()
            .map(|row| self.vector(row))
            .collect()
    }

    pub(crate) fn vector(&self, flat: &[u32]) -> PauliVector {
        PauliVector::from_flat(self.prime(), flat).expect("flat vector of length 2n")
    }

    pub(crate) fn check_set(&self, set: &QubitSet) -> Result<()> {
        if set.n() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: set.n(),
            });
        }
        Ok(())
    }

    pub(crate) fn check_vector(&self, v: &PauliVector) -> Result<()> {
        if v.modulus() != self.prime() {
            return Err(Error::ModulusMismatch {
                left: self.prime().get(),
                right: v.modulus().get(),
            });
        }
        if v.n() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: v.n(),
            });
        }
        Ok(())
    }

    /// `V_M` over this code's field.
    pub fn support_subspace(&self, m: &QubitSet) -> Result<Subspace> {
        self.check_set(m)?;
        Ok(support_subspace(self.field, m))
    }

    /// `S ∩ V_M`.
    pub fn stabilizers_on(&self, m: &QubitSet) -> Result<Subspace> {
        self.stabilizers.intersect(&self.support_subspace(m)?)
    }

    /// `S^⊥ ∩ V_M`.
    pub fn normalizer_on(&self, m: &QubitSet) -> Result<Subspace> {
        self.normalizer.intersect(&self.support_subspace(m)?)
    }

    pub fn is_logical(&self, v: &PauliVector) -> Result<bool> {
        self.check_vector(v)?;
        self.normalizer.contains(&v.to_flat())
    }

    pub fn is_stabilizer(&self, v: &PauliVector) -> Result<bool> {
        self.check_vector(v)?;
        self.stabilizers.contains(&v.to_flat())
    }

    /// Same code with its linear algebra rerun on `field`'s backend.
    pub fn with_field(&self, field: Field) -> Result<StabilizerCode> {
        self.field.check_same(field)?;
        let rows: Vec<&[u32]> = self.stabilizers.basis_rows().collect();
        let basis = MatrixFp::from_rows(field, 2 * self.n, &rows)?;
        StabilizerCode::from_isotropic(Subspace::from_matrix(basis))
    }
}

/// `dim(S^⊥) − dim(S)`, which equals `2k`.
pub fn logical_space_dim(code: &StabilizerCode) -> usize {
    code.normalizer.dim() - code.stabilizers.dim()
}
