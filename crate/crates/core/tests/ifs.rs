mod common;

use std::collections::{BTreeSet, HashSet};

use common::{m, pair, q, random_interior_point, random_point, rng};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use simplex_split::ifs::{
    branch_of, branches_containing, cylinder_of_word, example5, expand, farey_variant, farey_variants, gauss_step,
    generators, is_continuous, monkemeyer, orbit, orientation, pair_from_perms, pi_approx, unit_interval_embed,
    unit_interval_project, FareyVariant, Ifs, Orientation, Word,
};
use simplex_split::linalg::{cylinder_measure, inverse_unimodular, IntMatrix, SimplexPoint};
use simplex_split::symmetry::Permutation;
use simplex_split::Error;

#[test]
fn generators_small_dims() {
    let g = generators(1).unwrap();
    assert_eq!(g.n, m(&[&[1, 1], &[0, 1]]));
    assert_eq!(g.f, m(&[&[0, 1], &[1, 0]]));
    assert_eq!(g.r, g.f);
    assert_eq!(g.l, m(&[&[1, 0], &[1, 1]]));
    assert_eq!(generators(2).unwrap().r, m(&[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]]));
    for dim in 1..=6 {
        let g = generators(dim).unwrap();
        assert!((&g.f * &g.f).is_identity());
        assert_eq!(g.l, &(&g.f * &g.n) * &g.f);
    }
    assert!(matches!(generators(0), Err(Error::Dimension { .. })));
}

#[test]
fn monkemeyer_identities() {
    let mono = monkemeyer(1).unwrap();
    assert_eq!(*mono.a0(), m(&[&[1, 1], &[0, 1]]));
    assert_eq!(*mono.a1(), m(&[&[0, 1], &[1, 1]]));
    for dim in 1..=6 {
        let g = generators(dim).unwrap();
        let mono = monkemeyer(dim).unwrap();
        assert_eq!(*mono.a0(), &(&g.n * &g.f) * &g.r);
        assert_eq!(*mono.a1(), &g.l * &g.r);
        assert_eq!(&g.f * mono.a0(), *mono.a1());
        assert_eq!(&g.f * mono.a1(), *mono.a0());
        let fr = Permutation::flip(dim + 1).compose(&Permutation::shift(dim + 1));
        assert_eq!(pair_from_perms(dim, fr, Permutation::shift(dim + 1)).unwrap(), mono);
    }
}

#[test]
fn farey_variant_matrices() {
    let op = farey_variant(1, FareyVariant::OrientationPreserving).unwrap();
    assert_eq!(*op.a1(), m(&[&[1, 0], &[1, 1]]));
    let n1 = pair(&[0, 1], &[0, 1]);
    assert_eq!(*n1.a0(), generators(1).unwrap().n);
    assert_eq!(*n1.a1(), generators(1).unwrap().l);
    assert_eq!(orientation(&n1), (Orientation::Preserving, Orientation::Preserving));
}

#[test]
fn every_pair_has_half_measures() {
    let mut r = rng(21);
    for _ in 0..200 {
        let dim = r.gen_range(1..=6);
        let p = pair_from_perms(
            dim,
            common::random_perm(&mut r, dim + 1),
            common::random_perm(&mut r, dim + 1),
        )
        .unwrap();
        assert_eq!(cylinder_measure(p.a0()), q(1, 2));
        assert_eq!(cylinder_measure(p.a1()), q(1, 2));
        assert!(!p.a0().is_permutation() && !p.a1().is_permutation());
    }
}

#[test]
fn orientation_table() {
    use Orientation::*;
    for dim in 1..=6 {
        let [mono, op, or] = farey_variants(dim).unwrap();
        let odd = dim % 2 == 1;
        let (pres, rev) = if odd {
            (Preserving, Reversing)
        } else {
            (Reversing, Preserving)
        };
        assert_eq!(orientation(&op), (pres, pres), "n = {dim}");
        assert_eq!(orientation(&or), (rev, rev), "n = {dim}");
        // det M₀ = det F · det R, det M₁ = det R.
        let det_r = if odd { Reversing } else { Preserving };
        assert_eq!(orientation(&mono).1, det_r);
        assert_ne!(orientation(&mono).0, orientation(&mono).1);
        assert!(is_continuous(&mono));
        assert!(!is_continuous(&op));
        assert!(!is_continuous(&or));
    }
}

#[test]
fn example5_matrices() {
    let e = example5();
    assert_eq!(e.len(), 3);
    assert_eq!(*e.branch(0), m(&[&[1, 0, 0], &[1, 1, 0], &[1, 0, 1]]));
    assert_eq!(*e.branch(2), m(&[&[1, 0, 1], &[0, 1, 1], &[0, 0, 1]]));
    assert!(e.is_simplex_splitting());
    let typeset = m(&[&[1, 1, 0], &[0, 1, 0], &[1, 1, 1]]);
    assert!(Ifs::splitting(vec![e.branch(0).clone(), typeset, e.branch(2).clone()]).is_err());
}

#[test]
fn ifs_validation() {
    let n = generators(2).unwrap().n;
    assert!(matches!(
        Ifs::splitting(vec![n.clone(), n.clone()]),
        Err(Error::InvalidIfs(_))
    ));
    let p = Permutation::shift(3).matrix();
    assert!(matches!(Ifs::new(vec![n, p]), Err(Error::InvalidIfs(_))));
    assert!(Ifs::new(vec![m(&[&[2, 0], &[0, 1]])]).is_err());
}

#[test]
fn brackets() {
    let mono = monkemeyer(2).unwrap().ifs();
    let full = pi_approx(&mono, &Word::empty()).unwrap();
    assert_eq!(
        full.vertices,
        (0..3).map(|i| SimplexPoint::vertex(2, i)).collect::<Vec<_>>()
    );
    assert_eq!(full.diameter, q(2, 1));
    let deep = pi_approx(&mono, &Word::repeat(0, 60)).unwrap();
    assert!(deep.diameter < q(1, 10));
    for v in &deep.vertices {
        assert!(v.coords()[0] > q(9, 10), "{v}");
    }
    let e5 = example5();
    for t in 1..=10 {
        let b = pi_approx(&e5, &Word::new(vec![0, 1]).power(t)).unwrap();
        assert!(b.diameter >= q(1, 2), "t = {t}: {}", b.diameter);
    }
}

#[test]
fn expansion_edge_cases() {
    let mono = monkemeyer(2).unwrap().ifs();
    let x = SimplexPoint::barycenter(2);
    assert!(expand(&mono, &x, 0).unwrap().is_empty());
    assert_eq!(
        expand(&mono, &SimplexPoint::vertex(2, 0), 12).unwrap(),
        Word::repeat(0, 12)
    );
    assert!(matches!(
        expand(&mono, &SimplexPoint::barycenter(3), 2),
        Err(Error::OrderMismatch { .. })
    ));
    assert!("1/2,1/3,1/3".parse::<SimplexPoint>().is_err());
}

#[test]
fn unit_interval() {
    let zero = BigRational::zero();
    let one = BigRational::one();
    assert_eq!(unit_interval_embed(&zero).unwrap(), SimplexPoint::vertex(1, 0));
    assert_eq!(unit_interval_embed(&one).unwrap(), SimplexPoint::vertex(1, 1));
    let y = q(2, 7);
    assert_eq!(unit_interval_project(&unit_interval_embed(&y).unwrap()).unwrap(), y);
    assert!(unit_interval_embed(&q(3, 2)).is_err());
    assert!(unit_interval_project(&SimplexPoint::barycenter(2)).is_err());
    let ifs = monkemeyer(1).unwrap().ifs();
    let digits = expand(&ifs, &unit_interval_embed(&q(3, 5)).unwrap(), 6).unwrap();
    assert_eq!(digits.to_string(), "110100");
}

#[test]
fn selection_rule_consistency() {
    let mut r = rng(22);
    for _ in 0..300 {
        let dim = r.gen_range(1..=4);
        let p = pair_from_perms(
            dim,
            common::random_perm(&mut r, dim + 1),
            common::random_perm(&mut r, dim + 1),
        )
        .unwrap();
        let ifs = p.ifs();
        let x = random_point(&mut r, dim);
        let a = branch_of(&ifs, &x).unwrap();
        let image = inverse_unimodular(ifs.branch(a))
            .unwrap()
            .apply(&x.to_integer_vector())
            .unwrap();
        assert!(image.iter().all(|c| !c.is_negative()));
        let all = branches_containing(&ifs, &x).unwrap();
        assert_eq!(all[0], a);
        if x.is_interior() && all.len() == 1 {
            assert!(!pi_approx(&ifs, &Word::new(vec![1 - a])).unwrap().contains(&x));
        }
    }
}

/// Every product over `(M₀, M₁F)` or `(M₀F, M₁)` is a Mönkemeyer product,
/// possibly followed by `F`, so the partitions coincide.
#[test]
fn conjugation_identity() {
    for dim in 2..=3 {
        let [mono, op, or] = farey_variants(dim).unwrap();
        let f = generators(dim).unwrap().f;
        for t in 1..=8 {
            let base: HashSet<IntMatrix> = Word::all_of_length(2, t).map(|w| mono.word_matrix(&w)).collect();
            for other in [&op, &or] {
                for w in Word::all_of_length(2, t) {
                    let a = other.word_matrix(&w);
                    assert!(base.contains(&a) || base.contains(&(&a * &f)), "n={dim} w={w}");
                }
            }
            let cells = |p: &simplex_split::ifs::SplitPair| -> BTreeSet<BTreeSet<String>> {
                Word::all_of_length(2, t)
                    .map(|w| {
                        simplex_split::linalg::cylinder_vertices(&p.word_matrix(&w))
                            .iter()
                            .map(|v| v.to_string())
                            .collect()
                    })
                    .collect()
            };
            assert_eq!(cells(&mono), cells(&op));
            assert_eq!(cells(&mono), cells(&or));
        }
    }
}

/// Independent reading of the fully subtractive map: the smallest coordinate
/// is subtracted from the others.
#[test]
fn example5_subtracts_the_smallest_coordinate() {
    let e5 = example5();
    let mut r = rng(23);
    for _ in 0..1000 {
        let x = random_interior_point(&mut r, 2);
        let v = x.to_integer_vector();
        let a = (0..3).min_by_key(|&i| (v[i].clone(), i)).unwrap();
        let y: Vec<BigInt> = (0..3)
            .map(|i| if i == a { v[i].clone() } else { &v[i] - &v[a] })
            .collect();
        let expected = SimplexPoint::from_integer_vector(&y).unwrap();
        let (digit, image) = gauss_step(&e5, &x).unwrap();
        assert_eq!(digit as usize, a, "{x}");
        assert_eq!(image, expected, "{x}");
    }
}

#[test]
fn orbit_points_follow_digits() {
    let mut r = rng(24);
    let ifs = monkemeyer(3).unwrap().ifs();
    for _ in 0..50 {
        let x = random_point(&mut r, 3);
        let (w, pts) = orbit(&ifs, &x, 10).unwrap();
        assert_eq!(pts.len(), 11);
        for (k, d) in w.digits().iter().enumerate() {
            let back = simplex_split::linalg::project(ifs.branch(*d), &pts[k + 1]).unwrap();
            assert_eq!(back, pts[k]);
        }
    }
}

#[test]
fn random_cylinders_have_unit_measure_sum() {
    let mut r = rng(25);
    for _ in 0..20 {
        let dim = r.gen_range(1..=4);
        let p = pair_from_perms(
            dim,
            common::random_perm(&mut r, dim + 1),
            common::random_perm(&mut r, dim + 1),
        )
        .unwrap();
        let ifs = p.ifs();
        for t in 0..=6 {
            let total: BigRational = Word::all_of_length(2, t)
                .map(|w| cylinder_measure(&cylinder_of_word(&ifs, &w).unwrap()))
                .sum();
            assert!(total.is_one());
        }
    }
}
