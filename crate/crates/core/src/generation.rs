//! Seeded random stabilizer codes and the fixture catalog.
//!
//! Random codes start from `S_0 = span{(0|e_1), …, (0|e_{n−k})}` and apply
//! symplectic transvections `T_v(u) = u + ⟨u, v⟩ v`.
//!
//! Reproducibility contract: the PRNG is SplitMix64 seeded with the config
//! seed. A field element is drawn as `x mod p` from the first output `x`
//! below `p · floor(2^64 / p)`, discarding the others. Each round draws the
//! `2n` entries of `v` in flattened order `x_1 … x_n z_1 … z_n`, redrawing
//! the whole vector if it is zero, then maps every basis vector of the
//! current subspace (in order) through `T_v`.

use crate::code_io::parse_code;
use crate::error::{Error, Result};
use crate::field_linalg::{Field, Prime, Subspace};
use crate::stabilizer::{make_code, StabilizerCode};
use crate::symplectic::{sym_form_flat, PauliVector};

/// SplitMix64 (Steele, Lea, Flood 2014).
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, bound)` by rejection; `bound` must be nonzero.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0);
        let limit = u64::MAX - u64::MAX % bound;
        loop {
            let x = self.next_u64();
            if x < limit {
                return x % bound;
            }
        }
    }

    /// A uniformly random subset of `0..n` of the given size, sorted.
    pub fn subset(&mut self, n: usize, size: usize) -> Vec<usize> {
        let mut pool: Vec<usize> = (0..n).collect();
        for i in 0..size.min(n) {
            let j = i + self.below((n - i) as u64) as usize;
            pool.swap(i, j);
        }
        pool.truncate(size.min(n));
        pool.sort_unstable();
        pool
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneratorConfig {
    pub field: Field,
    pub n: usize,
    pub k: usize,
    pub seed: u64,
    /// Number of transvections; `None` means `5n`.
    pub transvection_rounds: Option<usize>,
}

impl GeneratorConfig {
    pub fn new(field: Field, n: usize, k: usize, seed: u64) -> Self {
        GeneratorConfig {
            field,
            n,
            k,
            seed,
            transvection_rounds: None,
        }
    }

    pub fn rounds(&self) -> usize {
        self.transvection_rounds.unwrap_or(5 * self.n)
    }
}

/// `T_v(u) = u + ⟨u, v⟩ v` on flattened vectors.
pub fn transvect(p: Prime, u: &[u32], v: &[u32]) -> Vec<u32> {
    let c = sym_form_flat(p, u, v);
    u.iter()
        .zip(v)
        .map(|(&a, &b)| p.add(a, p.mul(c, b)))
        .collect()
}

pub fn random_code(cfg: &GeneratorConfig) -> Result<StabilizerCode> {
    let (n, k) = (cfg.n, cfg.k);
    if k > n {
        return Err(Error::InvalidK { k, n });
    }
    let p = cfg.field.prime();
    let mut basis: Vec<Vec<u32>> = (0..n - k)
        .map(|i| {
            let mut row = vec![0u32; 2 * n];
            row[n + i] = 1;
            row
        })
        .collect();

    if !basis.is_empty() {
        let mut rng = SplitMix64::new(cfg.seed);
        for _ in 0..cfg.rounds() {
            let v = random_nonzero(&mut rng, p, 2 * n);
            for u in basis.iter_mut() {
                *u = transvect(p, u, &v);
            }
        }
    }
    let gens: Vec<PauliVector> = basis
        .iter()
        .map(|row| PauliVector::from_flat(p, row))
        .collect::<Result<_>>()?;
    make_code(cfg.field, n, &gens)
}

fn random_nonzero(rng: &mut SplitMix64, p: Prime, len: usize) -> Vec<u32> {
    loop {
        let v: Vec<u32> = (0..len)
            .map(|_| rng.below(u64::from(p.get())) as u32)
            .collect();
        if v.iter().any(|&x| x != 0) {
            return v;
        }
    }
}

/// Fixture files shipped with the crate, by catalog name.
pub const FIXTURES: &[(&str, &str)] = &[
    (
        "four_two_two",
        include_str!("../fixtures/four_two_two.code"),
    ),
    (
        "five_one_three",
        include_str!("../fixtures/five_one_three.code"),
    ),
    ("steane", include_str!("../fixtures/steane.code")),
    ("shor", include_str!("../fixtures/shor.code")),
    (
        "trivial_k0(3)",
        include_str!("../fixtures/trivial_k0_3.code"),
    ),
    ("free(3)", include_str!("../fixtures/free_3.code")),
];

/// Named codes: `four_two_two`, `five_one_three`, `steane`, `shor`,
/// `trivial_k0(n)` (S spanned by all single-qubit Z) and `free(n)` (S = 0).
pub fn catalog(name: &str) -> Result<StabilizerCode> {
    catalog_with(name, Field::new(Prime::two()))
}

/// [`catalog`] over a chosen backend (the catalog codes all live over F_2).
pub fn catalog_with(name: &str, field: Field) -> Result<StabilizerCode> {
    let name = name.trim();
    let unknown = || Error::UnknownCode(name.to_string());
    if let Some(n) = parametrized(name, "trivial_k0") {
        let n = n.ok_or_else(unknown)?;
        let rows: Vec<Vec<u32>> = (0..n)
            .map(|i| {
                let mut row = vec![0u32; 2 * n];
                row[n + i] = 1;
                row
            })
            .collect();
        return StabilizerCode::from_isotropic(Subspace::span(field, 2 * n, &rows)?);
    }
    if let Some(n) = parametrized(name, "free") {
        let n = n.ok_or_else(unknown)?;
        return StabilizerCode::from_isotropic(Subspace::zero(field, 2 * n));
    }
    let (_, text) = FIXTURES
        .iter()
        .find(|(fixture, _)| *fixture == name)
        .ok_or_else(unknown)?;
    parse_code(text)?.with_field(field)
}

/// `Some(Some(n))` for `prefix(n)`, `Some(None)` for a malformed argument.
fn parametrized(name: &str, prefix: &str) -> Option<Option<usize>> {
    let rest = name.strip_prefix(prefix)?;
    let inner = rest.strip_prefix('(')?.strip_suffix(')');
    Some(inner.and_then(|s| s.trim().parse().ok()))
}
