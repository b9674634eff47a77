//! The symplectic space V = F_p^n × F_p^n.
//!
//! Vectors are flattened as `(x_1..x_n | z_1..z_n)` whenever they meet a
//! [`MatrixFp`] or [`Subspace`], so the form matrix is `[[0, I], [-I, 0]]`.
//! For p = 2 the Pauli letters are I = (0,0), X = (1,0), Z = (0,1),
//! Y = (1,1); phases are not tracked.

use std::fmt;

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{Error, Result};
use crate::field_linalg::{nullspace, Field, FieldElement, MatrixFp, Prime, Subspace};

/// An element `v = (v_X, v_Z)` of V.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PauliVector {
    modulus: Prime,
    x: Vec<u32>,
    z: Vec<u32>,
}

impl PauliVector {
    pub fn new(modulus: Prime, x: Vec<u32>, z: Vec<u32>) -> Result<Self> {
        if x.len() != z.len() {
            return Err(Error::DimensionMismatch {
                expected: x.len(),
                found: z.len(),
            });
        }
        if let Some(&bad) = x.iter().chain(&z).find(|&&v| v >= modulus.get()) {
            return Err(Error::ValueOutOfField {
                value: u64::from(bad),
                p: modulus.get(),
            });
        }
        Ok(PauliVector { modulus, x, z })
    }

    pub fn zero(modulus: Prime, n: usize) -> Self {
        PauliVector {
            modulus,
            x: vec![0; n],
            z: vec![0; n],
        }
    }

    /// From the flattened `(x | z)` layout; `flat.len()` must be even.
    pub fn from_flat(modulus: Prime, flat: &[u32]) -> Result<Self> {
        if !flat.len().is_multiple_of(2) {
            return Err(Error::OddAmbientDimension(flat.len()));
        }
        let n = flat.len() / 2;
        Self::new(modulus, flat[..n].to_vec(), flat[n..].to_vec())
    }

    /// Parses an `{I, X, Y, Z}` string; the result lives over F_2.
    pub fn from_pauli_str(s: &str) -> Option<Self> {
        let mut x = Vec::with_capacity(s.len());
        let mut z = Vec::with_capacity(s.len());
        for ch in s.chars() {
            let (a, b) = match ch {
                'I' => (0, 0),
                'X' => (1, 0),
                'Z' => (0, 1),
                'Y' => (1, 1),
                _ => return None,
            };
            x.push(a);
            z.push(b);
        }
        Some(PauliVector {
            modulus: Prime::two(),
            x,
            z,
        })
    }

    /// The Pauli-letter form, available only over F_2.
    pub fn to_pauli_string(&self) -> Option<String> {
        if self.modulus.get() != 2 {
            return None;
        }
        Some(
            self.x
                .iter()
                .zip(&self.z)
                .map(|pair| match pair {
                    (0, 0) => 'I',
                    (1, 0) => 'X',
                    (0, 1) => 'Z',
                    _ => 'Y',
                })
                .collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    pub fn modulus(&self) -> Prime {
        self.modulus
    }

    pub fn x(&self) -> &[u32] {
        &self.x
    }

    pub fn z(&self) -> &[u32] {
        &self.z
    }

    pub fn to_flat(&self) -> Vec<u32> {
        let mut flat = Vec::with_capacity(2 * self.n());
        flat.extend_from_slice(&self.x);
        flat.extend_from_slice(&self.z);
        flat
    }

    pub fn is_zero(&self) -> bool {
        self.x.iter().chain(&self.z).all(|&v| v == 0)
    }

    fn check_compatible(&self, other: &PauliVector) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus.get(),
                right: other.modulus.get(),
            });
        }
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                found: other.n(),
            });
        }
        Ok(())
    }

    fn zip_with(&self, other: &PauliVector, op: impl Fn(u32, u32) -> u32) -> Result<Self> {
        self.check_compatible(other)?;
        let combine = |a: &[u32], b: &[u32]| a.iter().zip(b).map(|(&u, &v)| op(u, v)).collect();
        Ok(PauliVector {
            modulus: self.modulus,
            x: combine(&self.x, &other.x),
            z: combine(&self.z, &other.z),
        })
    }

    pub fn add(&self, other: &PauliVector) -> Result<Self> {
        let p = self.modulus;
        self.zip_with(other, |a, b| p.add(a, b))
    }

    pub fn sub(&self, other: &PauliVector) -> Result<Self> {
        let p = self.modulus;
        self.zip_with(other, |a, b| p.sub(a, b))
    }

    pub fn scale(&self, c: u32) -> Self {
        let p = self.modulus;
        PauliVector {
            modulus: p,
            x: self.x.iter().map(|&a| p.mul(a, c)).collect(),
            z: self.z.iter().map(|&a| p.mul(a, c)).collect(),
        }
    }
}

impl fmt::Display for PauliVector {
    /// Integer row `x_1 .. x_n z_1 .. z_n`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in self.x.iter().chain(&self.z) {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl Serialize for PauliVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("PauliVector", 3)?;
        st.serialize_field("row", &self.to_flat())?;
        st.serialize_field("pauli", &self.to_pauli_string())?;
        st.serialize_field("weight", &wt(self))?;
        st.end()
    }
}

/// A subset of the qubits `{1, …, n}`.
///
/// Stored 0-based; [`QubitSet::labels`] and `Display` use the 1-based labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QubitSet {
    n: usize,
    members: Vec<usize>,
}

impl QubitSet {
    pub fn empty(n: usize) -> Self {
        QubitSet {
            n,
            members: Vec::new(),
        }
    }

    pub fn all(n: usize) -> Self {
        QubitSet {
            n,
            members: (0..n).collect(),
        }
    }

    /// From 0-based indices; sorts and deduplicates.
    pub fn from_indices(n: usize, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut members: Vec<usize> = indices.into_iter().collect();
        if let Some(&bad) = members.iter().find(|&&i| i >= n) {
            return Err(Error::IndexOutOfRange { index: bad + 1, n });
        }
        members.sort_unstable();
        members.dedup();
        Ok(QubitSet { n, members })
    }

    /// From 1-based labels.
    pub fn from_labels(n: usize, labels: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut members = Vec::new();
        for label in labels {
            if label == 0 || label > n {
                return Err(Error::IndexOutOfRange { index: label, n });
            }
            members.push(label - 1);
        }
        Self::from_indices(n, members)
    }

    /// The set whose members are the set bits of `mask`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        QubitSet {
            n,
            members: (0..n.min(64)).filter(|&i| mask >> i & 1 == 1).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn indices(&self) -> &[usize] {
        &self.members
    }

    pub fn labels(&self) -> Vec<usize> {
        self.members.iter().map(|&i| i + 1).collect()
    }

    pub fn contains(&self, index: usize) -> bool {
        self.members.binary_search(&index).is_ok()
    }

    pub fn complement(&self) -> QubitSet {
        QubitSet {
            n: self.n,
            members: (0..self.n).filter(|&i| !self.contains(i)).collect(),
        }
    }

    pub fn union(&self, other: &QubitSet) -> QubitSet {
        let mut members: Vec<usize> = self.members.iter().chain(&other.members).copied().collect();
        members.sort_unstable();
        members.dedup();
        QubitSet { n: self.n, members }
    }

    /// Smallest common member, if any.
    pub fn first_common(&self, other: &QubitSet) -> Option<usize> {
        self.members.iter().copied().find(|&i| other.contains(i))
    }
}

impl fmt::Display for QubitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, label) in self.labels().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{label}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for QubitSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.labels())
    }
}

/// `⟨u, v⟩ = Σ_i u_X(i) v_Z(i) − u_Z(i) v_X(i)`.
pub fn sym_form(u: &PauliVector, v: &PauliVector) -> Result<FieldElement> {
    u.check_compatible(v)?;
    let p = u.modulus;
    let value = sym_form_flat(p, &u.to_flat(), &v.to_flat());
    p.element(value)
}

/// The form on flattened vectors of equal even length.
pub(crate) fn sym_form_flat(p: Prime, u: &[u32], v: &[u32]) -> u32 {
    debug_assert_eq!(u.len(), v.len());
    let n = u.len() / 2;
    let (ux, uz) = u.split_at(n);
    let (vx, vz) = v.split_at(n);
    let mut acc = 0u32;
    for i in 0..n {
        acc = p.add(acc, p.mul(ux[i], vz[i]));
        acc = p.sub(acc, p.mul(uz[i], vx[i]));
    }
    acc
}

pub fn supp(v: &PauliVector) -> QubitSet {
    QubitSet {
        n: v.n(),
        members: (0..v.n()).filter(|&i| v.x[i] != 0 || v.z[i] != 0).collect(),
    }
}

pub fn wt(v: &PauliVector) -> usize {
    v.x.iter()
        .zip(&v.z)
        .filter(|(&a, &b)| a != 0 || b != 0)
        .count()
}

/// `V_C`, spanned by `(e_i, 0)` and `(0, e_i)` for `i ∈ C`.
pub fn support_subspace(field: Field, c: &QubitSet) -> Subspace {
    let n = c.n();
    let mut basis = MatrixFp::zeros(field, 2 * c.len(), 2 * n);
    // x coordinates first keeps the rows already in canonical order
    for (r, &i) in c.indices().iter().enumerate() {
        basis.set(r, i, 1);
        basis.set(c.len() + r, n + i, 1);
    }
    Subspace::from_matrix(basis)
}

/// `r_E`: zero every coordinate outside `E`.
pub fn restrict(v: &PauliVector, e: &QubitSet) -> PauliVector {
    let keep = |(i, &a): (usize, &u32)| if e.contains(i) { a } else { 0 };
    PauliVector {
        modulus: v.modulus,
        x: v.x.iter().enumerate().map(keep).collect(),
        z: v.z.iter().enumerate().map(keep).collect(),
    }
}

/// Symplectic complement `{v : ⟨b, v⟩ = 0 for all b ∈ s}`, as the kernel of
/// the rows `(−b_Z | b_X)`.
pub fn sym_orth(s: &Subspace) -> Result<Subspace> {
    let m = s.ambient_dim();
    if !m.is_multiple_of(2) {
        return Err(Error::OddAmbientDimension(m));
    }
    let n = m / 2;
    let prime = s.field().prime();
    let mut constraints = MatrixFp::zeros(s.field(), s.dim(), m);
    for (r, row) in s.basis_rows().enumerate() {
        for i in 0..n {
            constraints.set(r, i, prime.neg(row[n + i]));
            constraints.set(r, n + i, row[i]);
        }
    }
    Ok(nullspace(&constraints))
}

pub fn is_isotropic(s: &Subspace) -> bool {
    isotropy_witness(s).is_none()
}

/// First pair of basis rows `(i, j)`, `i < j`, with nonzero form.
pub(crate) fn isotropy_witness(s: &Subspace) -> Option<(usize, usize, u32)> {
    let prime = s.field().prime();
    let rows: Vec<&[u32]> = s.basis_rows().collect();
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            let value = sym_form_flat(prime, rows[i], rows[j]);
            if value != 0 {
                return Some((i, j, value));
            }
        }
    }
    None
}
