//! Brute-force oracles that share no code path with the library's search,
//! reduction or intersection routines. They only read a code's basis rows.

#![allow(dead_code)]

use std::collections::HashSet;

use itertools::Itertools;
use rand::Rng;
use stabsym::field_linalg::{Field, MatrixFp, Prime, Subspace};
use stabsym::stabilizer::StabilizerCode;

pub fn basis_rows(code: &StabilizerCode) -> Vec<Vec<u32>> {
    code.stabilizers()
        .basis_rows()
        .map(|r| r.to_vec())
        .collect()
}

/// Every element of the span, enumerated over all coefficient tuples.
pub fn span_elements(p: u32, rows: &[Vec<u32>], len: usize) -> HashSet<Vec<u32>> {
    let mut out = HashSet::new();
    let total = (p as u64).pow(rows.len() as u32);
    for mut idx in 0..total {
        let mut v = vec![0u32; len];
        for row in rows {
            let c = (idx % p as u64) as u32;
            idx /= p as u64;
            for (x, &y) in v.iter_mut().zip(row) {
                *x = (*x + c * y) % p;
            }
        }
        out.insert(v);
    }
    out
}

/// `Σ u_x v_z − u_z v_x mod p`, written out directly.
pub fn form(p: u32, u: &[u32], v: &[u32]) -> u32 {
    let n = u.len() / 2;
    let mut acc: i64 = 0;
    for i in 0..n {
        acc += i64::from(u[i]) * i64::from(v[n + i]) - i64::from(u[n + i]) * i64::from(v[i]);
    }
    acc.rem_euclid(i64::from(p)) as u32
}

pub fn weight(v: &[u32]) -> usize {
    let n = v.len() / 2;
    (0..n).filter(|&i| v[i] != 0 || v[n + i] != 0).count()
}

fn is_nontrivial_logical(p: u32, rows: &[Vec<u32>], span: &HashSet<Vec<u32>>, v: &[u32]) -> bool {
    rows.iter().all(|b| form(p, b, v) == 0) && !span.contains(v)
}

/// Minimum weight over `S^⊥ ∖ S` by enumerating all `p^{2n}` vectors.
pub fn brute_force_distance(code: &StabilizerCode) -> Option<usize> {
    let p = code.prime().get();
    let n = code.n();
    let rows = basis_rows(code);
    let span = span_elements(p, &rows, 2 * n);
    let total = (p as u64).pow(2 * n as u32);
    let mut best: Option<usize> = None;
    let mut v = vec![0u32; 2 * n];
    for mut idx in 1..total {
        for x in v.iter_mut() {
            *x = (idx % p as u64) as u32;
            idx /= p as u64;
        }
        if is_nontrivial_logical(p, &rows, &span, &v) {
            let w = weight(&v);
            best = Some(best.map_or(w, |b| b.min(w)));
        }
    }
    best
}

/// Smallest weight `<= max_weight` with a vector of `S^⊥ ∖ S`, enumerating
/// every vector of that weight.
pub fn weight_bounded_distance(code: &StabilizerCode, max_weight: usize) -> Option<usize> {
    let p = code.prime().get();
    let n = code.n();
    let rows = basis_rows(code);
    let span = span_elements(p, &rows, 2 * n);
    for w in 1..=max_weight.min(n) {
        for support in (0..n).combinations(w) {
            let local = (p * p - 1) as u64;
            for mut idx in 0..local.pow(w as u32) {
                let mut v = vec![0u32; 2 * n];
                for &i in &support {
                    let t = (idx % local) as u32 + 1;
                    idx /= local;
                    v[i] = t % p;
                    v[n + i] = t / p;
                }
                if is_nontrivial_logical(p, &rows, &span, &v) {
                    return Some(w);
                }
            }
        }
    }
    None
}

/// Every vector of `V` supported inside `set` (0-based qubits).
pub fn vectors_on(p: u32, n: usize, set: &[usize]) -> Vec<Vec<u32>> {
    let total = (p as u64).pow(2 * set.len() as u32);
    (0..total)
        .map(|mut idx| {
            let mut v = vec![0u32; 2 * n];
            for &i in set {
                v[i] = (idx % p as u64) as u32;
                idx /= p as u64;
                v[n + i] = (idx % p as u64) as u32;
                idx /= p as u64;
            }
            v
        })
        .collect()
}

/// `S^⊥ ∩ V_E ⊆ S`, decided by enumerating `V_E`.
pub fn brute_force_correctable(code: &StabilizerCode, set: &[usize]) -> bool {
    let p = code.prime().get();
    let rows = basis_rows(code);
    let span = span_elements(p, &rows, 2 * code.n());
    vectors_on(p, code.n(), set)
        .iter()
        .all(|v| !is_nontrivial_logical(p, &rows, &span, v))
}

/// `g(M)` from element counts: `log_p |S^⊥ ∩ V_M| − log_p |S ∩ V_M|`.
pub fn brute_force_g(code: &StabilizerCode, set: &[usize]) -> usize {
    let p = code.prime().get();
    let rows = basis_rows(code);
    let span = span_elements(p, &rows, 2 * code.n());
    let on_m = vectors_on(p, code.n(), set);
    let logical = on_m
        .iter()
        .filter(|v| rows.iter().all(|b| form(p, b, v) == 0))
        .count();
    let stabilizer = on_m.iter().filter(|v| span.contains(*v)).count();
    log_p(p, logical) - log_p(p, stabilizer)
}

fn log_p(p: u32, mut count: usize) -> usize {
    let mut e = 0;
    while count > 1 {
        assert_eq!(count % p as usize, 0, "not a power of p");
        count /= p as usize;
        e += 1;
    }
    e
}

pub fn field(p: u64) -> Field {
    Field::from_p(p).unwrap()
}

pub fn prime(p: u64) -> Prime {
    Prime::new(p).unwrap()
}

pub fn random_matrix<R: Rng>(rng: &mut R, field: Field, rows: usize, cols: usize) -> MatrixFp {
    let p = field.p();
    let entries: Vec<Vec<u32>> = (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_range(0..p)).collect())
        .collect();
    MatrixFp::from_rows(field, cols, &entries).unwrap()
}

/// A random subspace of random dimension spanned by up to `max_gens` vectors.
pub fn random_subspace<R: Rng>(
    rng: &mut R,
    field: Field,
    ambient: usize,
    max_gens: usize,
) -> Subspace {
    let gens = rng.gen_range(0..=max_gens);
    Subspace::from_matrix(random_matrix(rng, field, gens, ambient))
}
