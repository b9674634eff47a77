mod common;

use common::{field, form, prime, random_subspace, vectors_on};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use stabsym::field_linalg::{Prime, Subspace};
use stabsym::symplectic::{
    is_isotropic, restrict, supp, support_subspace, sym_form, sym_orth, wt, PauliVector, QubitSet,
};

fn vector_strategy() -> impl Strategy<Value = (u64, Vec<u32>, Vec<u32>, Vec<u32>, u32, u32)> {
    (prop::sample::select(vec![2u64, 3, 5, 7]), 1usize..7).prop_flat_map(|(p, n)| {
        let v = prop::collection::vec(0..p as u32, 2 * n);
        (Just(p), v.clone(), v.clone(), v, 0..p as u32, 0..p as u32)
    })
}

fn pv(p: Prime, flat: &[u32]) -> PauliVector {
    PauliVector::from_flat(p, flat).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn form_is_bilinear_and_alternating((p, u, v, w, a, b) in vector_strategy()) {
        let pr = prime(p);
        let (u, v, w) = (pv(pr, &u), pv(pr, &v), pv(pr, &w));
        let f = |x: &PauliVector, y: &PauliVector| sym_form(x, y).unwrap().value();
        let au_bv = u.scale(a).add(&v.scale(b)).unwrap();
        prop_assert_eq!(f(&au_bv, &w), pr.add(pr.mul(a, f(&u, &w)), pr.mul(b, f(&v, &w))));
        prop_assert_eq!(f(&u, &v), pr.neg(f(&v, &u)));
        prop_assert_eq!(f(&u, &u), 0);
        prop_assert_eq!(f(&u, &v), form(p as u32, &u.to_flat(), &v.to_flat()));
    }

    #[test]
    fn restriction_splits((p, u, _v, _w, _a, _b) in vector_strategy(), mask in any::<u64>()) {
        let pr = prime(p);
        let u = pv(pr, &u);
        let e = QubitSet::from_mask(u.n(), mask);
        let inside = restrict(&u, &e);
        let outside = restrict(&u, &e.complement());
        prop_assert_eq!(inside.add(&outside).unwrap(), u.clone());
        prop_assert!(supp(&inside).indices().iter().all(|&i| e.contains(i)));
        prop_assert_eq!(wt(&inside) + wt(&outside), wt(&u));
        prop_assert_eq!(restrict(&inside, &e), inside);
    }
}

#[test]
fn form_is_nondegenerate() {
    let mut rng = StdRng::seed_from_u64(21);
    for i in 0..200 {
        let p = [2u64, 3, 5][i % 3];
        let pr = prime(p);
        let n = rng.gen_range(1..7);
        let flat: Vec<u32> = loop {
            let v: Vec<u32> = (0..2 * n).map(|_| rng.gen_range(0..p as u32)).collect();
            if v.iter().any(|&x| x != 0) {
                break v;
            }
        };
        let u = pv(pr, &flat);
        // some unit vector must pair nontrivially with u
        let hit = (0..2 * n).any(|j| {
            let mut e = vec![0u32; 2 * n];
            e[j] = 1;
            sym_form(&u, &pv(pr, &e)).unwrap().value() != 0
        });
        assert!(hit, "{u}");
    }
}

#[test]
fn support_subspace_dimension_and_membership() {
    for p in [2u64, 3] {
        for n in 1..=4 {
            for mask in 0u64..1 << n {
                let c = QubitSet::from_mask(n, mask);
                let vc = support_subspace(field(p), &c);
                assert_eq!(vc.dim(), 2 * c.len());
                // V_C is exactly the set of vectors with support in C
                let all = vectors_on(p as u32, n, &(0..n).collect::<Vec<_>>());
                for v in all {
                    let inside = supp(&pv(prime(p), &v))
                        .indices()
                        .iter()
                        .all(|&i| c.contains(i));
                    assert_eq!(vc.contains(&v).unwrap(), inside);
                }
            }
        }
    }
}

#[test]
fn double_complement_is_identity() {
    let mut rng = StdRng::seed_from_u64(22);
    for i in 0..600 {
        let p = [2u64, 3, 5][i % 3];
        let n = rng.gen_range(1..7);
        let s = random_subspace(&mut rng, field(p), 2 * n, 2 * n);
        let orth = sym_orth(&s).unwrap();
        assert_eq!(s.dim() + orth.dim(), 2 * n);
        assert_eq!(sym_orth(&orth).unwrap(), s);
        for a in s.basis_rows() {
            for b in orth.basis_rows() {
                assert_eq!(form(p as u32, a, b), 0);
            }
        }
    }
}

#[test]
fn complement_matches_enumeration() {
    let mut rng = StdRng::seed_from_u64(23);
    for i in 0..100 {
        let p = [2u64, 3][i % 2];
        let n = rng.gen_range(1..4);
        let s = random_subspace(&mut rng, field(p), 2 * n, 3);
        let orth = sym_orth(&s).unwrap();
        let rows: Vec<&[u32]> = s.basis_rows().collect();
        for v in vectors_on(p as u32, n, &(0..n).collect::<Vec<_>>()) {
            let expected = rows.iter().all(|b| form(p as u32, b, &v) == 0);
            assert_eq!(orth.contains(&v).unwrap(), expected);
        }
    }
}

#[test]
fn isotropy_agrees_with_pairwise_form() {
    let mut rng = StdRng::seed_from_u64(24);
    for i in 0..500 {
        let p = [2u64, 3, 5][i % 3];
        let n = rng.gen_range(1..5);
        let s = random_subspace(&mut rng, field(p), 2 * n, 3);
        let rows: Vec<&[u32]> = s.basis_rows().collect();
        let expected = rows
            .iter()
            .all(|a| rows.iter().all(|b| form(p as u32, a, b) == 0));
        assert_eq!(is_isotropic(&s), expected);
        if expected {
            assert!(s.is_subspace_of(&sym_orth(&s).unwrap()).unwrap());
        }
    }
}

#[test]
fn odd_ambient_dimension_is_rejected() {
    let s = Subspace::zero(field(2), 3);
    assert!(sym_orth(&s).is_err());
}
