//! Exact minimum weight of `S^⊥ ∖ S`.
//!
//! Candidates are enumerated by increasing weight `w`: every support `T` of
//! size `w` in lexicographic order, and on `T` every assignment of a nonzero
//! local pair `(x_i, z_i)`. The local pairs are indexed `t = 1 .. p²−1` with
//! `(x_i, z_i) = (t / p, t mod p)`, so for p = 2 the order is Z, X, Y.
//!
//! Membership in `S^⊥` is tested through the syndrome `(⟨b_j, v⟩)_j` against
//! the basis of `S`; the syndrome is accumulated one support position at a
//! time. Supports of one weight may be searched in parallel; the witness is
//! always the first one in enumeration order, so results do not depend on
//! scheduling.

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use super::code::StabilizerCode;
use crate::error::{Error, Result};
use crate::symplectic::PauliVector;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Distance {
    /// `S^⊥ ∖ S` is empty (k = 0).
    NoLogicals,
    Finite {
        d: usize,
        witness: PauliVector,
    },
}

impl Distance {
    pub fn value(&self) -> Option<usize> {
        match self {
            Distance::NoLogicals => None,
            Distance::Finite { d, .. } => Some(*d),
        }
    }

    pub fn witness(&self) -> Option<&PauliVector> {
        match self {
            Distance::NoLogicals => None,
            Distance::Finite { witness, .. } => Some(witness),
        }
    }
}

/// Bounds on the distance search. Exceeding either one yields
/// [`Error::ResourceLimit`] carrying the largest fully searched weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    /// Highest weight to search; `None` means `n`.
    pub max_weight: Option<usize>,
    /// Cap on the total number of candidate vectors.
    pub max_candidates: Option<u128>,
    pub parallel: bool,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_weight: None,
            max_candidates: None,
            parallel: true,
        }
    }
}

impl SearchLimits {
    pub fn with_max_weight(max_weight: usize) -> Self {
        SearchLimits {
            max_weight: Some(max_weight),
            ..Self::default()
        }
    }

    pub fn sequential() -> Self {
        SearchLimits {
            parallel: false,
            ..Self::default()
        }
    }
}

/// Number of candidates of weight exactly `w`: `C(n, w) · (p² − 1)^w`.
pub fn candidates_at_weight(n: usize, p: u32, w: usize) -> u128 {
    let local = u128::from(p) * u128::from(p) - 1;
    binomial(n, w).saturating_mul(local.saturating_pow(w as u32))
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

pub fn distance(code: &StabilizerCode) -> Result<Distance> {
    distance_with(code, &SearchLimits::default())
}

pub fn distance_with(code: &StabilizerCode, limits: &SearchLimits) -> Result<Distance> {
    if code.k() == 0 {
        return Ok(Distance::NoLogicals);
    }
    let n = code.n();
    let p = code.prime().get();
    let max_weight = limits.max_weight.unwrap_or(n).min(n);
    let searcher = Searcher::new(code);
    let mut spent: u128 = 0;

    for w in 1..=n {
        if w > max_weight {
            return Err(Error::ResourceLimit {
                lower_bound: max_weight,
            });
        }
        let level = candidates_at_weight(n, p, w);
        spent = spent.saturating_add(level);
        if limits.max_candidates.is_some_and(|cap| spent > cap) {
            return Err(Error::ResourceLimit { lower_bound: w - 1 });
        }

        let search = |support: Vec<usize>| searcher.search_support(&support);
        let hit = if limits.parallel {
            let supports: Vec<Vec<usize>> = (0..n).combinations(w).collect();
            supports.into_par_iter().find_map_first(search)
        } else {
            (0..n).combinations(w).find_map(search)
        };
        if let Some(flat) = hit {
            return Ok(Distance::Finite {
                d: w,
                witness: code.vector(&flat),
            });
        }
    }
    // Every nonzero class of S^⊥/S has a representative of weight ≤ n.
    unreachable!("k > 0 but no logical operator of weight <= n")
}

struct Searcher<'a> {
    code: &'a StabilizerCode,
    p: u32,
    syndrome_len: usize,
    kernel: Kernel,
}

enum Kernel {
    /// `cols[i]` = (syndrome of X-unit on qubit i, syndrome of Z-unit).
    Generic { cols: Vec<(Vec<u32>, Vec<u32>)> },
    /// Bit-packed syndromes of Z, X and Y on each qubit (pattern order).
    Binary {
        words: usize,
        cols: Vec<[Vec<u64>; 3]>,
    },
}

impl<'a> Searcher<'a> {
    fn new(code: &'a StabilizerCode) -> Self {
        let n = code.n();
        let prime = code.prime();
        let rows: Vec<&[u32]> = code.stabilizers().basis_rows().collect();
        let r = rows.len();
        // ⟨b, v⟩ = Σ b_x v_z − b_z v_x, so an X-unit on qubit i contributes
        // −b_z[i] and a Z-unit contributes b_x[i].
        let x_unit = |i: usize| -> Vec<u32> { rows.iter().map(|b| prime.neg(b[n + i])).collect() };
        let z_unit = |i: usize| -> Vec<u32> { rows.iter().map(|b| b[i]).collect() };

        let kernel = if code.field().uses_bit_packing() {
            let words = r.div_ceil(64);
            let pack = |v: &[u32]| {
                let mut out = vec![0u64; words];
                for (j, &bit) in v.iter().enumerate() {
                    if bit != 0 {
                        out[j / 64] |= 1 << (j % 64);
                    }
                }
                out
            };
            let cols = (0..n)
                .map(|i| {
                    let x = pack(&x_unit(i));
                    let z = pack(&z_unit(i));
                    let y: Vec<u64> = x.iter().zip(&z).map(|(a, b)| a ^ b).collect();
                    [z, x, y]
                })
                .collect();
            Kernel::Binary { words, cols }
        } else {
            Kernel::Generic {
                cols: (0..n).map(|i| (x_unit(i), z_unit(i))).collect(),
            }
        };
        Searcher {
            code,
            p: prime.get(),
            syndrome_len: r,
            kernel,
        }
    }

    /// First vector with support exactly `support` lying in `S^⊥ ∖ S`.
    fn search_support(&self, support: &[usize]) -> Option<Vec<u32>> {
        let w = support.len();
        let mut patterns = vec![0u32; w];
        match &self.kernel {
            Kernel::Generic { cols } => {
                let mut partial = vec![0u32; (w + 1) * self.syndrome_len];
                self.dfs_generic(cols, support, 0, &mut partial, &mut patterns)
            }
            Kernel::Binary { words, cols } => {
                let mut partial = vec![0u64; (w + 1) * words];
                self.dfs_binary(*words, cols, support, 0, &mut partial, &mut patterns)
            }
        }
    }

    fn dfs_generic(
        &self,
        cols: &[(Vec<u32>, Vec<u32>)],
        support: &[usize],
        depth: usize,
        partial: &mut [u32],
        patterns: &mut [u32],
    ) -> Option<Vec<u32>> {
        let r = self.syndrome_len;
        if depth == support.len() {
            let last = &partial[depth * r..];
            return if last.iter().all(|&s| s == 0) {
                self.accept(support, patterns)
            } else {
                None
            };
        }
        let prime = self.code.prime();
        let (x_col, z_col) = &cols[support[depth]];
        for t in 1..self.p * self.p {
            let (a, b) = (t / self.p, t % self.p);
            let (head, tail) = partial.split_at_mut((depth + 1) * r);
            let prev = &head[depth * r..];
            let next = &mut tail[..r];
            for j in 0..r {
                let s = prime.add(prime.mul(a, x_col[j]), prime.mul(b, z_col[j]));
                next[j] = prime.add(prev[j], s);
            }
            patterns[depth] = t;
            if let Some(v) = self.dfs_generic(cols, support, depth + 1, partial, patterns) {
                return Some(v);
            }
        }
        None
    }

    fn dfs_binary(
        &self,
        words: usize,
        cols: &[[Vec<u64>; 3]],
        support: &[usize],
        depth: usize,
        partial: &mut [u64],
        patterns: &mut [u32],
    ) -> Option<Vec<u32>> {
        if depth == support.len() {
            let last = &partial[depth * words..];
            return if last.iter().all(|&s| s == 0) {
                self.accept(support, patterns)
            } else {
                None
            };
        }
        for (t, col) in cols[support[depth]].iter().enumerate() {
            let (head, tail) = partial.split_at_mut((depth + 1) * words);
            let prev = &head[depth * words..];
            for ((dst, &a), &b) in tail[..words].iter_mut().zip(prev).zip(col) {
                *dst = a ^ b;
            }
            patterns[depth] = t as u32 + 1;
            if let Some(v) = self.dfs_binary(words, cols, support, depth + 1, partial, patterns) {
                return Some(v);
            }
        }
        None
    }

    /// The candidate commutes with S; keep it unless it lies in S.
    fn accept(&self, support: &[usize], patterns: &[u32]) -> Option<Vec<u32>> {
        let n = self.code.n();
        let mut flat = vec![0u32; 2 * n];
        for (&i, &t) in support.iter().zip(patterns) {
            flat[i] = t / self.p;
            flat[n + i] = t % self.p;
        }
        let in_s = self
            .code
            .stabilizers()
            .contains(&flat)
            .expect("candidate has length 2n");
        (!in_s).then_some(flat)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field_linalg::{Field, Prime};
    use crate::stabilizer::make_code;
    use crate::symplectic::{wt, PauliVector};

    fn code(n: usize, gens: &[&str]) -> StabilizerCode {
        let gens: Vec<PauliVector> = gens
            .iter()
            .map(|s| PauliVector::from_pauli_str(s).unwrap())
            .collect();
        make_code(Field::new(Prime::two()), n, &gens).unwrap()
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(9, 3), 84);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(60, 30), 118_264_581_564_861_424);
        assert_eq!(candidates_at_weight(5, 2, 2), 90);
    }

    #[test]
    fn four_two_two_distance() {
        let c = code(4, &["XXXX", "ZZZZ"]);
        let d = distance(&c).unwrap();
        assert_eq!(d.value(), Some(2));
        let w = d.witness().unwrap();
        assert_eq!(wt(w), 2);
        assert!(c.is_logical(w).unwrap());
        assert!(!c.is_stabilizer(w).unwrap());
        // first support {1,2}, first pattern pair (Z, Z)
        assert_eq!(w.to_pauli_string().unwrap(), "ZZII");
    }

    #[test]
    fn k_zero_has_no_logicals() {
        let c = code(3, &["ZII", "IZI", "IIZ"]);
        assert_eq!(distance(&c).unwrap(), Distance::NoLogicals);
    }

    #[test]
    fn budget_exhaustion_reports_lower_bound() {
        let c = code(5, &["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"]);
        assert_eq!(
            distance_with(&c, &SearchLimits::with_max_weight(2)),
            Err(Error::ResourceLimit { lower_bound: 2 })
        );
        let limits = SearchLimits {
            max_candidates: Some(15 + 90),
            ..SearchLimits::default()
        };
        assert_eq!(
            distance_with(&c, &limits),
            Err(Error::ResourceLimit { lower_bound: 2 })
        );
        let limits = SearchLimits {
            max_candidates: Some(10),
            ..SearchLimits::default()
        };
        assert_eq!(
            distance_with(&c, &limits),
            Err(Error::ResourceLimit { lower_bound: 0 })
        );
    }

    #[test]
    fn parallel_and_sequential_agree() {
        let c = code(5, &["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"]);
        let a = distance_with(&c, &SearchLimits::default()).unwrap();
        let b = distance_with(&c, &SearchLimits::sequential()).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.value(), Some(3));
    }

    #[test]
    fn backends_agree_on_witness() {
        let c = code(5, &["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"]);
        let g = c
            .with_field(Field::with_backend(
                Prime::two(),
                crate::field_linalg::Backend::Generic,
            ))
            .unwrap();
        assert_eq!(distance(&c).unwrap(), distance(&g).unwrap());
    }
}
