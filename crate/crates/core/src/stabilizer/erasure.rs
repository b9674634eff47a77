//! Erasure correctability, supportable logicals `g(M)` and cleaning.

use serde::Serialize;

use super::code::StabilizerCode;
use crate::error::{Error, Result};
use crate::field_linalg::{rref, MatrixFp};
use crate::symplectic::{restrict, PauliVector, QubitSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Correctability {
    pub correctable: bool,
    /// An element of `(S^⊥ ∩ V_E) ∖ S` when not correctable.
    pub witness: Option<PauliVector>,
}

/// `E` is correctable iff `S^⊥ ∩ V_E ⊆ S`.
pub fn is_correctable(code: &StabilizerCode, e: &QubitSet) -> Result<Correctability> {
    let supported = code.normalizer_on(e)?;
    for row in supported.basis_rows() {
        if !code.stabilizers().contains(row)? {
            return Ok(Correctability {
                correctable: false,
                witness: Some(code.vector(row)),
            });
        }
    }
    Ok(Correctability {
        correctable: true,
        witness: None,
    })
}

/// `g(M) = dim((S^⊥ ∩ V_M) / (S ∩ V_M))`.
pub fn g(code: &StabilizerCode, m: &QubitSet) -> Result<usize> {
    Ok(code.normalizer_on(m)?.dim() - code.stabilizers_on(m)?.dim())
}

/// Every dimension that enters `g(M) + g(M^c) = 2k`, including the
/// split `S = S_M ⊕ S_{M^c} ⊕ S_0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CleaningCheck {
    pub region: QubitSet,
    pub g: usize,
    pub g_complement: usize,
    pub two_k: usize,
    /// `dim(S ∩ V_M)`
    pub dim_s_m: usize,
    /// `dim(S ∩ V_{M^c})`
    pub dim_s_complement: usize,
    /// `dim S − dim S_M − dim S_{M^c}`
    pub dim_s_0: usize,
    /// `dim(S^⊥ ∩ V_M)`
    pub dim_normalizer_m: usize,
    /// `dim(S^⊥ ∩ V_{M^c})`
    pub dim_normalizer_complement: usize,
}

impl CleaningCheck {
    pub fn identity_holds(&self) -> bool {
        self.g + self.g_complement == self.two_k
    }

    /// `dim(S^⊥ ∩ V_M) = 2|M| − dim S_M − dim S_0`, and the same for `M^c`.
    pub fn counting_holds(&self) -> bool {
        let m = self.region.len();
        let mc = self.region.n() - m;
        self.dim_normalizer_m + self.dim_s_m + self.dim_s_0 == 2 * m
            && self.dim_normalizer_complement + self.dim_s_complement + self.dim_s_0 == 2 * mc
    }

    pub fn holds(&self) -> bool {
        self.identity_holds() && self.counting_holds()
    }
}

pub fn check_cleaning_identity(code: &StabilizerCode, m: &QubitSet) -> Result<CleaningCheck> {
    code.check_set(m)?;
    let mc = m.complement();
    let s_m = code.stabilizers_on(m)?.dim();
    let s_mc = code.stabilizers_on(&mc)?.dim();
    let n_m = code.normalizer_on(m)?.dim();
    let n_mc = code.normalizer_on(&mc)?.dim();
    Ok(CleaningCheck {
        region: m.clone(),
        g: n_m - s_m,
        g_complement: n_mc - s_mc,
        two_k: 2 * code.k(),
        dim_s_m: s_m,
        dim_s_complement: s_mc,
        // S_M and S_{M^c} have disjoint supports, so their sum is direct.
        dim_s_0: code.stabilizers().dim() - s_m - s_mc,
        dim_normalizer_m: n_m,
        dim_normalizer_complement: n_mc,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cleaned {
    /// `L' = L − s`, zero on the erased region.
    pub cleaned: PauliVector,
    /// The stabilizer `s` that was subtracted.
    pub stabilizer: PauliVector,
}

/// Moves a logical operator off `m` by subtracting a stabilizer.
///
/// Solves `r_M(s) = r_M(L)` for `s ∈ S`, with free coefficients set to zero.
pub fn clean(code: &StabilizerCode, logical: &PauliVector, m: &QubitSet) -> Result<Cleaned> {
    code.check_set(m)?;
    if !code.is_logical(logical)? {
        return Err(Error::NotLogical);
    }
    let n = code.n();
    let prime = code.prime();
    let basis: Vec<&[u32]> = code.stabilizers().basis_rows().collect();
    let r = basis.len();
    let target = logical.to_flat();

    // One equation per coordinate on M; unknowns are the coefficients of the
    // basis of S, with the right-hand side in the last column.
    let coords: Vec<usize> = m.indices().iter().flat_map(|&i| [i, n + i]).collect();
    let mut system = MatrixFp::zeros(code.field(), coords.len(), r + 1);
    for (eq, &c) in coords.iter().enumerate() {
        for (j, b) in basis.iter().enumerate() {
            system.set(eq, j, b[c]);
        }
        system.set(eq, r, target[c]);
    }
    let reduced = rref(&system);
    if reduced.pivot_cols.last() == Some(&r) {
        return Err(Error::NotCleanable);
    }
    let mut coefficients = vec![0u32; r];
    for (row, &pc) in reduced.pivot_cols.iter().enumerate() {
        coefficients[pc] = reduced.matrix.get(row, r);
    }

    let mut s = vec![0u32; 2 * n];
    for (c, b) in coefficients.iter().zip(&basis) {
        if *c == 0 {
            continue;
        }
        for (x, &y) in s.iter_mut().zip(b.iter()) {
            *x = prime.add(*x, prime.mul(*c, y));
        }
    }
    let stabilizer = code.vector(&s);
    let cleaned = logical.sub(&stabilizer)?;
    debug_assert!(restrict(&cleaned, m).is_zero());
    Ok(Cleaned {
        cleaned,
        stabilizer,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field_linalg::{Field, Prime};
    use crate::stabilizer::make_code;
    use crate::symplectic::{supp, wt};

    fn pv(s: &str) -> PauliVector {
        PauliVector::from_pauli_str(s).unwrap()
    }

    fn code(n: usize, gens: &[&str]) -> StabilizerCode {
        let gens: Vec<PauliVector> = gens.iter().map(|s| pv(s)).collect();
        make_code(Field::new(Prime::two()), n, &gens).unwrap()
    }

    fn five() -> StabilizerCode {
        code(5, &["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"])
    }

    fn four() -> StabilizerCode {
        code(4, &["XXXX", "ZZZZ"])
    }

    fn set(n: usize, labels: &[usize]) -> QubitSet {
        QubitSet::from_labels(n, labels.iter().copied()).unwrap()
    }

    /// Every vector of V_E over F_2, by enumeration of the 4^|E| patterns.
    fn vectors_on(n: usize, e: &QubitSet) -> Vec<PauliVector> {
        let idx = e.indices();
        (0u32..1 << (2 * idx.len()))
            .map(|bits| {
                let mut x = vec![0; n];
                let mut z = vec![0; n];
                for (j, &i) in idx.iter().enumerate() {
                    x[i] = bits >> (2 * j) & 1;
                    z[i] = bits >> (2 * j + 1) & 1;
                }
                PauliVector::new(Prime::two(), x, z).unwrap()
            })
            .collect()
    }

    /// Brute-force oracle: does some vector of V_E lie in S^⊥ ∖ S?
    fn oracle_correctable(c: &StabilizerCode, e: &QubitSet) -> bool {
        vectors_on(c.n(), e)
            .iter()
            .all(|v| !c.is_logical(v).unwrap() || c.is_stabilizer(v).unwrap())
    }

    #[test]
    fn empty_erasure_is_correctable() {
        assert!(
            is_correctable(&five(), &QubitSet::empty(5))
                .unwrap()
                .correctable
        );
    }

    #[test]
    fn five_qubit_erasures() {
        let c = five();
        let e = set(5, &[1, 2]);
        assert_eq!(vectors_on(5, &e).len(), 16);
        assert!(oracle_correctable(&c, &e));
        assert!(is_correctable(&c, &e).unwrap().correctable);

        let e = set(5, &[1, 2, 3]);
        assert_eq!(vectors_on(5, &e).len(), 64);
        assert!(!oracle_correctable(&c, &e));
        let res = is_correctable(&c, &e).unwrap();
        assert!(!res.correctable);
        let w = res.witness.unwrap();
        assert_eq!(wt(&w), 3);
        assert!(c.is_logical(&w).unwrap() && !c.is_stabilizer(&w).unwrap());
    }

    #[test]
    fn g_values() {
        let c = four();
        assert_eq!(g(&c, &QubitSet::empty(4)).unwrap(), 0);
        assert_eq!(g(&c, &QubitSet::all(4)).unwrap(), 4);
        // oracle: S^⊥ ∩ V_M counted by enumeration; S ∩ V_M = 0
        let m = set(4, &[1, 2]);
        let on_m: Vec<_> = vectors_on(4, &m)
            .into_iter()
            .filter(|v| c.is_logical(v).unwrap())
            .collect();
        assert_eq!(on_m.len(), 4); // 2^2: span{XXII, ZZII}
        assert!(on_m
            .iter()
            .all(|v| v.is_zero() || !c.is_stabilizer(v).unwrap()));
        assert_eq!(g(&c, &m).unwrap(), 2);
        assert_eq!(g(&five(), &QubitSet::all(5)).unwrap(), 2);
    }

    #[test]
    fn cleaning_identity_examples() {
        let c = four();
        let chk = check_cleaning_identity(&c, &QubitSet::empty(4)).unwrap();
        assert_eq!((chk.g, chk.g_complement, chk.two_k), (0, 4, 4));
        assert!(chk.holds());

        let chk = check_cleaning_identity(&c, &set(4, &[1, 2])).unwrap();
        assert_eq!((chk.g, chk.g_complement), (2, 2));
        assert!(chk.holds());

        let chk = check_cleaning_identity(&five(), &set(5, &[1, 2])).unwrap();
        assert_eq!((chk.g, chk.g_complement, chk.two_k), (0, 2, 2));
        assert!(chk.holds());
    }

    #[test]
    fn clean_four_two_two() {
        let c = four();
        let out = clean(&c, &pv("XXII"), &set(4, &[1])).unwrap();
        assert_eq!(out.cleaned, pv("IIXX"));
        assert_eq!(out.stabilizer, pv("XXXX"));
    }

    #[test]
    fn clean_leaves_off_region_logical_alone() {
        let c = four();
        let l = pv("IIXX");
        let out = clean(&c, &l, &set(4, &[1])).unwrap();
        assert_eq!(out.cleaned, l);
        assert!(out.stabilizer.is_zero());
    }

    #[test]
    fn clean_five_qubit_weight_three_logical() {
        let c = five();
        let w = is_correctable(&c, &set(5, &[1, 2, 3]))
            .unwrap()
            .witness
            .unwrap();
        let m = set(5, &[1, 2]);
        let out = clean(&c, &w, &m).unwrap();
        assert!(supp(&out.cleaned).indices().iter().all(|&i| i >= 2));
        assert!(c.is_logical(&out.cleaned).unwrap());
        assert!(!c.is_stabilizer(&out.cleaned).unwrap());
        assert!(c.is_stabilizer(&w.sub(&out.cleaned).unwrap()).unwrap());
    }

    #[test]
    fn clean_errors() {
        let c = four();
        assert_eq!(
            clean(&c, &pv("XZII"), &set(4, &[1])),
            Err(Error::NotLogical)
        );
        // M = everything is not correctable and XXII cannot be moved off it
        assert_eq!(
            clean(&c, &pv("XXII"), &QubitSet::all(4)),
            Err(Error::NotCleanable)
        );
    }

    #[test]
    fn logical_supportable_on_both_sides() {
        // Regression record: for [[4,2,2]] and M = {1,2}, the class of XXII
        // has the representative XXII on M and IIXX on M^c.
        let c = four();
        let m = set(4, &[1, 2]);
        let on_m = pv("XXII");
        let on_mc = pv("IIXX");
        assert!(c.is_logical(&on_m).unwrap() && !c.is_stabilizer(&on_m).unwrap());
        assert!(c.is_stabilizer(&on_m.sub(&on_mc).unwrap()).unwrap());
        assert!(restrict(&on_m, &m.complement()).is_zero());
        assert!(restrict(&on_mc, &m).is_zero());
    }
}
