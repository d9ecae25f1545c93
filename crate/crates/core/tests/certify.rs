mod common;

use std::collections::BTreeSet;

use common::{pair, q, random_perm, rng};
use num_rational::BigRational;
use rand::Rng;
use simplex_split::certify::{
    certify_ifs, certify_noncontractive, classify, diameter_evidence, find_c1, find_c2, find_c3, find_c3_ifs, find_c4,
    incomplete_graph, is_non_increasing, profile_exact, shape, verify_theorem, BranchShape, CertificateKind,
    Justification, SearchParams, Shape, Verdict,
};
use simplex_split::ifs::{example5, farey_variant, farey_variants, pair_from_perms, FareyVariant, Word};
use simplex_split::symmetry::{enumerate_orbits, farey_orbit_ids};

fn w(s: &str) -> Word {
    s.parse().unwrap()
}

fn edges(list: &[(usize, usize)]) -> BTreeSet<(usize, usize)> {
    list.iter().copied().collect()
}

/// The n = 2 pair whose product `A₀A₁` fixes `e₀` and expands.
fn fixed_vertex_pair() -> simplex_split::ifs::SplitPair {
    pair(&[1, 2, 0], &[2, 1, 0])
}

#[test]
fn farey_graphs_at_n4() {
    let g = incomplete_graph(&farey_variant(4, FareyVariant::Monkemeyer).unwrap());
    assert_eq!(g.zero_edges, edges(&[(0, 0), (2, 1), (3, 2), (4, 3)]));
    assert_eq!(g.one_edges, edges(&[(1, 0), (2, 1), (3, 2), (4, 3)]));

    let g = incomplete_graph(&farey_variant(4, FareyVariant::OrientationPreserving).unwrap());
    assert!(g.zero_edges.contains(&(0, 0)) && g.one_edges.contains(&(1, 1)));
    assert_eq!(g.loops_for_word(&w("1")), BTreeSet::from([1]));

    let g = incomplete_graph(&farey_variant(4, FareyVariant::OrientationReversing).unwrap());
    assert_eq!(g.zero_edges, edges(&[(0, 1), (2, 0), (3, 2), (4, 3)]));
    assert_eq!(g.one_edges, edges(&[(1, 0), (2, 1), (3, 2), (4, 3)]));
}

#[test]
fn occurrence_and_loops() {
    let g = incomplete_graph(&farey_variant(4, FareyVariant::Monkemeyer).unwrap());
    assert!(g.occurs(4, &w("00"), 2));
    assert!((0..5).all(|j| !g.occurs(0, &w("1"), j)));
    assert!((0..5).all(|i| g.occurs(i, &Word::empty(), i)));
    assert_eq!(g.loops_for_word(&w("0")), BTreeSet::from([0]));
    assert_eq!(g.loops_for_word(&Word::empty()), (0..5).collect());
}

#[test]
fn graph_degree_invariants() {
    let mut r = rng(31);
    for _ in 0..200 {
        let dim = r.gen_range(1..=6);
        let p = pair_from_perms(dim, random_perm(&mut r, dim + 1), random_perm(&mut r, dim + 1)).unwrap();
        let g = incomplete_graph(&p);
        for (c, es) in [(0u8, &g.zero_edges), (1, &g.one_edges)] {
            assert_eq!(es.len(), dim, "one column per color is duplicated");
            let outs: BTreeSet<usize> = es.iter().map(|e| e.0).collect();
            let ins: BTreeSet<usize> = es.iter().map(|e| e.1).collect();
            assert_eq!(outs.len(), dim);
            assert_eq!(ins.len(), dim);
            assert!(!ins.contains(&g.h(c)));
        }
    }
}

#[test]
fn c1_fixtures() {
    // (N, L): 0-loops at 0 and 2, 1-loops at 1 and 2.
    let c = find_c1(&incomplete_graph(&pair(&[0, 1, 2], &[0, 1, 2])), 6).unwrap();
    assert_eq!(c.words, vec![w("0")]);
    assert_eq!(c.nodes, vec![0, 2]);
    // A short backtrack 3 → 4 in the 1-chain makes 01 loop at 0 and at 4.
    let backtrack = pair(&[3, 2, 0, 4, 1], &[2, 1, 4, 0, 3]);
    let g = incomplete_graph(&backtrack);
    assert!(g.one_edges.contains(&(3, 4)));
    let c = find_c1(&g, 10).unwrap();
    assert_eq!(c.words, vec![w("01")]);
    assert_eq!(c.nodes, vec![0, 4]);
    assert!(c.reverify(&backtrack.ifs()).is_ok());
}

#[test]
fn c2_fixture() {
    let p = pair(&[0, 1, 2], &[0, 1, 2]);
    let c = find_c2(&incomplete_graph(&p), 6).unwrap();
    assert_eq!(c.kind, CertificateKind::C2);
    assert_eq!(c.words, vec![w("0"), w("1")]);
    assert_eq!(c.nodes, vec![2]);
    assert!(c.reverify(&p.ifs()).is_ok());
}

#[test]
fn c3_fixtures() {
    let p = fixed_vertex_pair();
    assert_eq!(
        p.word_matrix(&w("01")),
        common::m(&[&[1, 0, 1], &[0, 0, 1], &[0, 1, 1]])
    );
    let c = find_c3(&p, 6).unwrap();
    assert_eq!(c.words, vec![w("01")]);
    assert!(matches!(
        c.justification,
        Justification::FixedVertexAndExpansion { vertex: 0, .. }
    ));
    assert!(c.reverify(&p.ifs()).is_ok());

    let e5 = find_c3_ifs(&example5(), 4).unwrap();
    assert_eq!(e5.words, vec![w("01")]);
    assert!(matches!(
        e5.justification,
        Justification::FixedVertexAndExpansion { vertex: 2, .. }
    ));
    assert!(e5.reverify(&example5()).is_ok());
    assert_eq!(certify_ifs(&example5(), 4).unwrap().kind, CertificateKind::C3);
}

#[test]
fn c4_fixtures() {
    // Odd n: the irreducible 0-branch has period 2, so its square splits.
    let p = pair(&[3, 2, 0, 1], &[2, 1, 3, 0]);
    let c = find_c4(&p, 8).unwrap();
    assert_eq!(c.words, vec![w("00")]);
    assert!(c.reverify(&p.ifs()).is_ok());
    // N itself is a direct sum.
    let c = find_c4(&pair(&[0, 1, 2], &[1, 2, 0]), 4).unwrap();
    assert_eq!(c.words, vec![w("0")]);
}

#[test]
fn farey_pairs_have_no_certificate() {
    for dim in 1..=5 {
        let b = 2 * (dim + 1);
        for p in farey_variants(dim).unwrap() {
            let g = incomplete_graph(&p);
            assert!(find_c1(&g, b).is_none());
            assert!(find_c2(&g, b).is_none());
            assert!(find_c3(&p, b).is_none());
            assert!(find_c4(&p, b).is_none());
        }
    }
}

#[test]
fn every_non_farey_class_at_n2_is_certified() {
    let farey: BTreeSet<_> = farey_orbit_ids(2).unwrap().into_iter().collect();
    let mut certified = 0;
    for (p0, p1) in enumerate_orbits(2, 5).unwrap().representatives() {
        let p = pair_from_perms(2, p0.clone(), p1.clone()).unwrap();
        match certify_noncontractive(&p, 8) {
            Some(c) => {
                assert!(!farey.contains(&(p0, p1)));
                assert!(c.word_len() <= 8);
                assert!(c.reverify(&p.ifs()).is_ok());
                certified += 1;
            }
            None => assert!(farey.contains(&(p0, p1))),
        }
    }
    assert_eq!(certified, 18);
}

#[test]
fn tampered_certificates_are_rejected() {
    let p = pair(&[0, 1, 2], &[0, 1, 2]);
    let mut c = certify_noncontractive(&p, 6).unwrap();
    assert!(c.reverify(&p.ifs()).is_ok());
    c.nodes = vec![0, 1];
    assert!(c.reverify(&p.ifs()).is_err());

    let q3 = fixed_vertex_pair();
    let mut c = find_c3(&q3, 6).unwrap();
    c.words = vec![w("1")];
    assert!(c.reverify(&q3.ifs()).is_err());

    let p4 = pair(&[3, 2, 0, 1], &[2, 1, 3, 0]);
    let mut c = find_c4(&p4, 8).unwrap();
    c.words = vec![w("0")];
    assert!(c.reverify(&p4.ifs()).is_err());
}

#[test]
fn evidence_profiles() {
    let mono = farey_variant(2, FareyVariant::Monkemeyer).unwrap().ifs();
    let profile = diameter_evidence(&mono, 20).unwrap();
    assert_eq!(profile[0], q(2, 1));
    assert!(is_non_increasing(&profile));
    for t in 1..=18 {
        assert!(profile[t + 2] < profile[t], "t = {t}");
    }
    assert!((0..=20).any(|t| profile[t] < q(1, 2)));

    let stuck = diameter_evidence(&fixed_vertex_pair().ifs(), 16).unwrap();
    assert!(stuck.iter().all(|d| *d >= q(1, 1)));
    let e5 = diameter_evidence(&example5(), 8).unwrap();
    assert!(e5.iter().all(|d| *d >= q(1, 2)));
}

#[test]
fn machine_integer_profile_matches_exact_profile() {
    let mut r = rng(32);
    for _ in 0..30 {
        let dim = r.gen_range(1..=4);
        let p = pair_from_perms(dim, random_perm(&mut r, dim + 1), random_perm(&mut r, dim + 1)).unwrap();
        let depth = r.gen_range(0..=8);
        assert_eq!(
            diameter_evidence(&p.ifs(), depth).unwrap(),
            profile_exact(&p.ifs(), depth)
        );
    }
    assert_eq!(
        diameter_evidence(&example5(), 5).unwrap(),
        profile_exact(&example5(), 5)
    );
    assert!(diameter_evidence(&example5(), 30).is_err());
}

#[test]
fn farey_shapes() {
    for dim in 2..=6 {
        let [mono, op, or] = farey_variants(dim).unwrap();
        let get = |p| match shape(p).unwrap() {
            Shape::Standard(r) => r,
            other => panic!("n = {dim}: {other}"),
        };
        let (m, o, v) = (get(&mono), get(&op), get(&or));
        assert_eq!(m.label, "(0p,1h)");
        assert_eq!(&m.one_chain[..3], &[0, 1, 2]);
        assert_eq!(m.one_position, Some(1));
        assert_eq!(o.label, "(0p,1p)");
        assert_eq!((o.zero, o.one), (BranchShape::Parabolic, BranchShape::Parabolic));
        assert_eq!(v.label, "(0h,1h)");
        assert_eq!(&v.zero_chain[..3], &[1, 0, 2]);
        for r in [&m, &o, &v] {
            assert_eq!(r.k_order, (2..=dim).collect::<Vec<_>>(), "no backtracks");
            assert!(r.backtracks.is_empty());
        }
    }
}

#[test]
fn degenerate_shapes_are_reported() {
    assert!(matches!(
        shape(&pair(&[0, 1, 2], &[0, 1, 2])).unwrap(),
        Shape::Nonstandard { .. }
    ));
    let backtrack = pair(&[3, 2, 0, 4, 1], &[2, 1, 4, 0, 3]);
    match shape(&backtrack).unwrap() {
        Shape::Standard(r) => assert_eq!(r.backtracks, vec![(3, 4)]),
        other => panic!("{other}"),
    }
}

#[test]
fn verify_small_dimensions() {
    let one = verify_theorem(1, &SearchParams::defaults(1)).unwrap();
    assert_eq!((one.certified.len(), one.survivors.len()), (0, 3));
    assert!(one.survivors_match_farey);
    let params = SearchParams {
        depth: 8,
        ..SearchParams::defaults(2)
    };
    let two = verify_theorem(2, &params).unwrap();
    assert_eq!((two.orbit_count, two.certified.len(), two.survivors.len()), (21, 18, 3));
    assert_eq!(two.reverification_failed, 0);
    assert!(two.survivors.iter().all(|s| s.is_farey));
    assert!(verify_theorem(6, &SearchParams::defaults(6)).is_err());
}

#[test]
fn classify_verdicts() {
    let params = SearchParams {
        depth: 12,
        epsilon: BigRational::new(1.into(), 2.into()),
        ..SearchParams::defaults(2)
    };
    let mono = farey_variant(2, FareyVariant::Monkemeyer).unwrap();
    assert!(matches!(classify(&mono, &params).unwrap(), Verdict::Unknown { .. }));
    let loose = SearchParams {
        epsilon: q(1, 1),
        ..params.clone()
    };
    assert!(matches!(
        classify(&mono, &loose).unwrap(),
        Verdict::ContractiveEvidence { .. }
    ));
    assert!(matches!(
        classify(&fixed_vertex_pair(), &params).unwrap(),
        Verdict::NonContractive { .. }
    ));
}
