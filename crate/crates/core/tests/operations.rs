//! Small worked cases of each public operation, with values checked by hand.

mod common;

use spflag::bundles::{discrepancy_b, divisor_class, non_exceptional, tilde_omega};
use spflag::charring::{weyl_character, LaurentPoly};
use spflag::fixedpoints::{enumerate_fixed_points, AblData, AdmissibleCollection};
use spflag::geometry::{in_sp_grass_a, lift, FlagPoint, ResolutionPoint, Subspace};
use spflag::polytope::{graded_character, lattice_points, phi_point_embed, polytope_spec};
use spflag::rational;
use spflag::rootsys::{boundary_set, radical_roots, DominantWeight, FlagType, Root, RootSystem, Weight};

fn z(exps: &[i64], q: i64) -> LaurentPoly {
    LaurentPoly::monomial(exps.to_vec(), q, rational::int(1))
}

#[test]
fn vector_representation_of_sp4() {
    let c2 = RootSystem::type_c(2).unwrap();
    let ch = weyl_character(&DominantWeight(vec![1, 0]), c2).unwrap();
    let expected = [[1, 0], [-1, 0], [0, 1], [0, -1]]
        .iter()
        .fold(LaurentPoly::zero(2), |acc, e| &acc + &z(e, 0));
    assert_eq!(ch, expected);

    // v_1 in degree 0; f_{1,1} v, f_{1,2} v, f_{1,3} v in degree 1.
    let g = graded_character(&DominantWeight(vec![1, 0]), c2).unwrap();
    let by_degree: Vec<u64> = (0..=g.max_degree())
        .map(|d| g.terms.iter().filter(|((q, _), _)| *q == d).map(|(_, m)| m).sum())
        .collect();
    assert_eq!(by_degree, vec![1, 3]);
    assert_eq!(g.terms.get(&(0, Weight(vec![1, 0]))), Some(&1));
    assert_eq!(g.terms.get(&(1, Weight(vec![-1, 0]))), Some(&1));
}

#[test]
fn sp2_characters_are_strings_of_q_powers() {
    let data = AblData::new(1).unwrap();
    for m in 0..=5u32 {
        let expected = (0..=m as i64).fold(LaurentPoly::zero(1), |acc, k| &acc + &z(&[m as i64 - 2 * k], k));
        let graded = LaurentPoly::from(&graded_character(&DominantWeight(vec![m]), RootSystem::type_c(1).unwrap()).unwrap());
        assert_eq!(graded, expected, "m = {m}");
        let loc = data.symbolic_n1(m).unwrap();
        assert!(loc == expected || loc.invert_variables() == expected, "m = {m}: {loc:?}");
    }
}

#[test]
fn zero_weight_gives_the_trivial_module() {
    for n in 1..=3 {
        let spec = polytope_spec(&DominantWeight::zero(n), RootSystem::type_c(n as u32).unwrap()).unwrap();
        let pts = lattice_points(&spec);
        assert_eq!(pts.len(), 1);
        assert!(pts[0].0.iter().all(|&s| s == 0));
    }
}

#[test]
fn radical_of_a_partial_flag() {
    // d = (2) in sp_6: the roots pairing nontrivially with omega_2.
    let flag = FlagType::new(3, vec![2]).unwrap();
    let rad = radical_roots(&flag);
    assert!(rad.contains(&Root::new(2, 2)));
    assert!(rad.contains(&Root::new(1, 4)));
    assert!(!rad.contains(&Root::new(1, 1)));
    assert!(!rad.contains(&Root::new(3, 3)));
    let boundary = boundary_set(&flag);
    assert!(boundary.iter().all(|r| rad.contains(r)));
    assert!(boundary.contains(&Root::new(2, 2)));
}

#[test]
fn isotropic_grassmannian_examples() {
    let w = |idx: &[u32]| Subspace::coordinate(6, idx.iter().copied());
    // <w_1, w_6> = 1, and neither vector is projected away for k = 2.
    assert!(in_sp_grass_a(&w(&[1, 2]), 2, 3).unwrap());
    assert!(!in_sp_grass_a(&w(&[1, 6]), 2, 3).unwrap());
    assert!(in_sp_grass_a(&w(&[3]), 1, 3).unwrap());
    assert!(in_sp_grass_a(&w(&[3, 4]), 2, 3).unwrap());
}

#[test]
fn lifting_the_highest_weight_flag() {
    for n in 1..=3 {
        for flag in FlagType::all(n) {
            let f = FlagPoint::coordinate(&flag);
            assert_eq!(lift(&f).unwrap(), ResolutionPoint::highest_weight(&flag), "d = {flag}");
        }
    }
}

#[test]
fn highest_weight_fixed_point() {
    let first = &enumerate_fixed_points(2)[0];
    assert_eq!(*first, AdmissibleCollection::highest_weight(2));
    assert_eq!(first.realize(), ResolutionPoint::highest_weight(&FlagType::complete(2)));
}

#[test]
fn symplectic_points_embed_into_sl() {
    let lambda = DominantWeight(vec![1, 1]);
    let spec = polytope_spec(&lambda, RootSystem::type_c(2).unwrap()).unwrap();
    for p in lattice_points(&spec) {
        let (a_spec, image) = phi_point_embed(&p, &lambda, 2).unwrap();
        assert_eq!(a_spec.system, RootSystem::type_a(4).unwrap());
        assert_eq!(image.0.iter().sum::<u32>(), p.0.iter().sum::<u32>());
    }
}

#[test]
fn complete_flag_discrepancies_in_sp4() {
    let flag = FlagType::complete(2);
    // Exceptional exactly at j >= 2, i + j < 4, i.e. (1, 2).
    assert_eq!(discrepancy_b(1, 2, &flag).unwrap(), 2);
    for (i, j) in [(1, 1), (2, 2), (1, 3)] {
        assert_eq!(discrepancy_b(i, j, &flag).unwrap(), 1, "({i},{j})");
    }
    assert_eq!(non_exceptional(&flag).len(), 3);
    assert!(discrepancy_b(2, 3, &flag).is_err());
    assert!(!divisor_class(1, 1, &flag).unwrap().is_zero());
    assert!(!tilde_omega(&flag).is_zero());
}
