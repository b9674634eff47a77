//! Checks for each step of the bound `k + 2(d − 1) ≤ n`, reported as
//! verdicts with witnesses.

use std::collections::BTreeMap;

use serde::Serialize;

use super::code::{logical_space_dim, StabilizerCode};
use super::distance::{binomial, distance_with, Distance, SearchLimits};
use super::erasure::{check_cleaning_identity, g, is_correctable};
use crate::error::{Error, Result};
use crate::generation::SplitMix64;
use crate::symplectic::{restrict, PauliVector, QubitSet};

pub const LOGICAL_SPACE_DIM: &str = "logical_space_dim";
pub const DISTANCE_CORRECTABILITY: &str = "distance_correctability";
pub const CLEANING_IDENTITY: &str = "cleaning_identity";
pub const TWO_DISJOINT: &str = "two_disjoint";
pub const SINGLETON: &str = "singleton";

/// Lemma names in the order the full suite reports them.
pub const LEMMAS: [&str; 5] = [
    LOGICAL_SPACE_DIM,
    DISTANCE_CORRECTABILITY,
    CLEANING_IDENTITY,
    TWO_DISJOINT,
    SINGLETON,
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    /// The premises do not apply (e.g. no logical operators).
    Vacuous,
    Fail,
}

impl Outcome {
    pub fn label(self) -> &'static str {
        match self {
            Outcome::Pass => "PASS",
            Outcome::Vacuous => "VACUOUS",
            Outcome::Fail => "FAIL",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Witness {
    Vector(PauliVector),
    Set(QubitSet),
    Pair { a: QubitSet, b: QubitSet },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub outcome: Outcome,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Verdict {
    fn new(outcome: Outcome, detail: impl Into<String>) -> Self {
        Verdict {
            outcome,
            detail: detail.into(),
            witness: None,
        }
    }

    fn with_witness(mut self, witness: Witness) -> Self {
        self.witness = Some(witness);
        self
    }

    pub fn passed(&self) -> bool {
        self.outcome != Outcome::Fail
    }
}

pub fn check_logical_space_dim(code: &StabilizerCode) -> Verdict {
    let dim_s = code.stabilizers().dim();
    let dim_perp = code.normalizer().dim();
    let quotient = logical_space_dim(code);
    let ok = quotient == 2 * code.k() && dim_s + dim_perp == 2 * code.n();
    Verdict::new(
        if ok { Outcome::Pass } else { Outcome::Fail },
        format!(
            "dim S = {dim_s}, dim S^perp = {dim_perp}, dim(S^perp/S) = {quotient}, 2k = {}",
            2 * code.k()
        ),
    )
}

/// How to choose the erasures checked against the distance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SetSampling {
    /// Enumerate every set when the number of sets is at most this.
    pub exhaustive_cap: u128,
    /// Otherwise draw this many seeded random sets.
    pub samples: usize,
    pub seed: u64,
}

impl Default for SetSampling {
    fn default() -> Self {
        SetSampling {
            exhaustive_cap: 1 << 16,
            samples: 256,
            seed: 0,
        }
    }
}

/// Every `E` with `|E| ≤ d − 1` must be correctable, with `g(E) = 0`.
pub fn check_distance_correctability(
    code: &StabilizerCode,
    distance: &Distance,
    sampling: &SetSampling,
) -> Result<Verdict> {
    let Some(d) = distance.value() else {
        return Ok(Verdict::new(Outcome::Vacuous, "no logical operators"));
    };
    let n = code.n();
    let max_size = d - 1;
    let total: u128 = (0..=max_size).map(|s| binomial(n, s)).sum();

    let check = |e: QubitSet| -> Result<Option<Verdict>> {
        let res = is_correctable(code, &e)?;
        let g_e = g(code, &e)?;
        if res.correctable && g_e == 0 {
            return Ok(None);
        }
        let mut v = Verdict::new(
            Outcome::Fail,
            format!(
                "|E| = {} <= d - 1 = {max_size} but E = {e} has correctable = {}, g(E) = {g_e}",
                e.len(),
                res.correctable
            ),
        );
        v = v.with_witness(match res.witness {
            Some(w) => Witness::Vector(w),
            None => Witness::Set(e),
        });
        Ok(Some(v))
    };

    if total <= sampling.exhaustive_cap {
        for size in 0..=max_size {
            for e in subsets_of_size(n, size) {
                if let Some(fail) = check(e)? {
                    return Ok(fail);
                }
            }
        }
        Ok(Verdict::new(
            Outcome::Pass,
            format!("all {total} sets with |E| <= {max_size} are correctable with g(E) = 0"),
        ))
    } else {
        let mut rng = SplitMix64::new(sampling.seed);
        for _ in 0..sampling.samples {
            let size = rng.below(max_size as u64 + 1) as usize;
            let e = QubitSet::from_indices(n, rng.subset(n, size))?;
            if let Some(fail) = check(e)? {
                return Ok(fail);
            }
        }
        Ok(Verdict::new(
            Outcome::Pass,
            format!(
                "{} sampled sets with |E| <= {max_size} are correctable with g(E) = 0",
                sampling.samples
            ),
        ))
    }
}

fn subsets_of_size(n: usize, size: usize) -> impl Iterator<Item = QubitSet> {
    use itertools::Itertools;
    (0..n)
        .combinations(size)
        .map(move |c| QubitSet::from_indices(n, c).expect("indices below n"))
}

/// Checks `g(M) + g(M^c) = 2k` (and the intermediate dimension counts) for
/// every region when `n ≤ exhaustive_max_n`, otherwise on seeded samples.
pub fn check_cleaning_regions(
    code: &StabilizerCode,
    exhaustive_max_n: usize,
    samples: usize,
    seed: u64,
) -> Result<Verdict> {
    let n = code.n();
    let regions: Box<dyn Iterator<Item = QubitSet>> = if n <= exhaustive_max_n.min(63) {
        Box::new((0..1u64 << n).map(move |mask| QubitSet::from_mask(n, mask)))
    } else {
        let mut rng = SplitMix64::new(seed);
        Box::new((0..samples).map(move |_| {
            let members = (0..n).filter(|_| rng.next_u64() & 1 == 1);
            QubitSet::from_indices(n, members).expect("indices below n")
        }))
    };
    let mut checked = 0usize;
    for m in regions {
        let chk = check_cleaning_identity(code, &m)?;
        if !chk.holds() {
            return Ok(Verdict::new(
                Outcome::Fail,
                format!(
                    "M = {}: g = {}, g_c = {}, 2k = {}, dim S_M = {}, dim S_Mc = {}, dim S_0 = {}, dim(S^perp cap V_M) = {}",
                    chk.region,
                    chk.g,
                    chk.g_complement,
                    chk.two_k,
                    chk.dim_s_m,
                    chk.dim_s_complement,
                    chk.dim_s_0,
                    chk.dim_normalizer_m
                ),
            )
            .with_witness(Witness::Set(chk.region)));
        }
        checked += 1;
    }
    Ok(Verdict::new(
        Outcome::Pass,
        format!("g(M) + g(M^c) = {} on {checked} regions", 2 * code.k()),
    ))
}

/// Data behind the two-disjoint-erasures inequality `k ≤ |C|`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwoDisjointCheck {
    pub a: QubitSet,
    pub b: QubitSet,
    pub k: usize,
    /// `|C| = n − |A| − |B|`
    pub c_size: usize,
    pub a_correctable: bool,
    pub b_correctable: bool,
    /// `g(A^c)`, expected to equal `2k`.
    pub g_a_complement: Option<usize>,
    /// `dim(V_C / r_C(S ∩ V_{A^c}))`, which bounds `2k` from above.
    pub restricted_quotient_dim: Option<usize>,
}

impl TwoDisjointCheck {
    pub fn applicable(&self) -> bool {
        self.a_correctable && self.b_correctable
    }

    pub fn holds(&self) -> bool {
        if !self.applicable() {
            return true;
        }
        let two_k = 2 * self.k;
        self.k <= self.c_size
            && self.g_a_complement == Some(two_k)
            && self.restricted_quotient_dim.is_some_and(|q| two_k <= q)
    }

    pub fn verdict(&self) -> Verdict {
        let sets = Witness::Pair {
            a: self.a.clone(),
            b: self.b.clone(),
        };
        if !self.applicable() {
            return Verdict::new(
                Outcome::Vacuous,
                format!(
                    "A = {} correctable: {}, B = {} correctable: {}",
                    self.a, self.a_correctable, self.b, self.b_correctable
                ),
            );
        }
        let detail = format!(
            "A = {}, B = {}: k = {} <= |C| = {}, g(A^c) = {}, dim(V_C/r_C(W)) = {}",
            self.a,
            self.b,
            self.k,
            self.c_size,
            self.g_a_complement.unwrap_or_default(),
            self.restricted_quotient_dim.unwrap_or_default()
        );
        if self.holds() {
            Verdict::new(Outcome::Pass, detail)
        } else {
            Verdict::new(Outcome::Fail, detail).with_witness(sets)
        }
    }
}

pub fn check_two_disjoint(
    code: &StabilizerCode,
    a: &QubitSet,
    b: &QubitSet,
) -> Result<TwoDisjointCheck> {
    code.check_set(a)?;
    code.check_set(b)?;
    if let Some(i) = a.first_common(b) {
        return Err(Error::DisjointnessViolated(i + 1));
    }
    let n = code.n();
    let a_correctable = is_correctable(code, a)?.correctable;
    let b_correctable = is_correctable(code, b)?.correctable;
    let c = a.union(b).complement();

    let (g_a_complement, restricted_quotient_dim) = if a_correctable && b_correctable {
        let d = a.complement();
        let w = code.stabilizers_on(&d)?;
        // r_C(W) ≤ V_C
        let restricted: Vec<Vec<u32>> = w
            .basis_rows()
            .map(|row| restrict(&code.vector(row), &c).to_flat())
            .collect();
        let image = crate::field_linalg::Subspace::span(code.field(), 2 * n, &restricted)?;
        (Some(g(code, &d)?), Some(2 * c.len() - image.dim()))
    } else {
        (None, None)
    };

    Ok(TwoDisjointCheck {
        a: a.clone(),
        b: b.clone(),
        k: code.k(),
        c_size: c.len(),
        a_correctable,
        b_correctable,
        g_a_complement,
        restricted_quotient_dim,
    })
}

/// Parameters, slack and verdicts for one code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub n: usize,
    pub k: usize,
    /// `None` when there are no logical operators.
    pub d: Option<usize>,
    /// `n − k − 2(d − 1)`.
    pub slack: Option<i64>,
    /// A minimum-weight element of `S^⊥ ∖ S`.
    pub witness: Option<PauliVector>,
    pub verdicts: BTreeMap<String, Verdict>,
}

impl AnalysisReport {
    pub fn all_passed(&self) -> bool {
        self.verdicts.values().all(Verdict::passed)
    }

    /// Verdicts in suite order.
    pub fn ordered_verdicts(&self) -> impl Iterator<Item = (&str, &Verdict)> {
        LEMMAS
            .iter()
            .filter_map(|&name| self.verdicts.get(name).map(|v| (name, v)))
    }
}

/// `(A, B)` as chosen for the bound: `A = {1..d−1}`, `B = {d..2d−2}` when
/// `n ≥ 2(d − 1)`; otherwise `B` is everything after `A`.
pub fn singleton_witness_sets(n: usize, d: usize) -> (QubitSet, QubitSet) {
    let size = d.saturating_sub(1).min(n);
    let a = QubitSet::from_indices(n, 0..size).expect("indices below n");
    let b_end = (2 * size).min(n);
    let b = QubitSet::from_indices(n, size..b_end).expect("indices below n");
    (a, b)
}

/// Computes `d` and checks `k + 2(d − 1) ≤ n` together with the
/// two-disjoint-erasures step on the canonical witness sets.
pub fn check_singleton(code: &StabilizerCode, limits: &SearchLimits) -> Result<AnalysisReport> {
    let distance = distance_with(code, limits)?;
    Ok(singleton_report(code, &distance)?.0)
}

fn singleton_report(
    code: &StabilizerCode,
    distance: &Distance,
) -> Result<(AnalysisReport, Option<TwoDisjointCheck>)> {
    let (n, k) = (code.n(), code.k());
    let mut verdicts = BTreeMap::new();
    let Some(d) = distance.value() else {
        verdicts.insert(
            TWO_DISJOINT.to_string(),
            Verdict::new(Outcome::Vacuous, "no logical operators"),
        );
        verdicts.insert(
            SINGLETON.to_string(),
            Verdict::new(Outcome::Vacuous, "no logical operators: d undefined"),
        );
        return Ok((
            AnalysisReport {
                n,
                k,
                d: None,
                slack: None,
                witness: None,
                verdicts,
            },
            None,
        ));
    };

    let slack = n as i64 - k as i64 - 2 * (d as i64 - 1);
    let (a, b) = singleton_witness_sets(n, d);
    let pair = check_two_disjoint(code, &a, &b)?;
    verdicts.insert(TWO_DISJOINT.to_string(), pair.verdict());

    let regime = if n >= 2 * (d - 1) {
        "disjoint A, B of size d-1 exist"
    } else {
        // k >= 1 whenever d is defined, so this regime contradicts the bound.
        "n < 2(d-1)"
    };
    let relation = if slack >= 0 { "<=" } else { ">" };
    let detail = format!(
        "k + 2(d-1) = {} {relation} n = {n}, slack = {slack} ({regime})",
        k + 2 * (d - 1)
    );
    let mut singleton = Verdict::new(
        if slack >= 0 {
            Outcome::Pass
        } else {
            Outcome::Fail
        },
        detail,
    );
    if slack < 0 {
        singleton = singleton.with_witness(Witness::Vector(
            distance.witness().expect("finite distance").clone(),
        ));
    }
    verdicts.insert(SINGLETON.to_string(), singleton);

    Ok((
        AnalysisReport {
            n,
            k,
            d: Some(d),
            slack: Some(slack),
            witness: distance.witness().cloned(),
            verdicts,
        },
        Some(pair),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub limits: SearchLimits,
    pub erasures: SetSampling,
    /// Regions for the cleaning identity are exhaustive up to this `n`.
    pub cleaning_exhaustive_max_n: usize,
    pub cleaning_samples: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            limits: SearchLimits::default(),
            erasures: SetSampling::default(),
            cleaning_exhaustive_max_n: 12,
            cleaning_samples: 64,
            seed: 0,
        }
    }
}

/// Runs all five checks on one code.
pub fn verify_code(code: &StabilizerCode, opts: &VerifyOptions) -> Result<AnalysisReport> {
    let distance = distance_with(code, &opts.limits)?;
    let (mut report, _) = singleton_report(code, &distance)?;
    report
        .verdicts
        .insert(LOGICAL_SPACE_DIM.to_string(), check_logical_space_dim(code));
    report.verdicts.insert(
        DISTANCE_CORRECTABILITY.to_string(),
        check_distance_correctability(code, &distance, &opts.erasures)?,
    );
    report.verdicts.insert(
        CLEANING_IDENTITY.to_string(),
        check_cleaning_regions(
            code,
            opts.cleaning_exhaustive_max_n,
            opts.cleaning_samples,
            opts.seed,
        )?,
    );
    Ok(report)
}
