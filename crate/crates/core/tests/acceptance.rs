//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::{m, pair, random_point, rng};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rand::Rng;
use simplex_split::certify::{certify_ifs, diameter_evidence, is_non_increasing, verify_theorem, SearchParams};
use simplex_split::ifs::{
    cylinder_of_word, example5, expand, farey_variants, is_continuous, monkemeyer, orientation, pair_from_perms,
    pi_approx, unit_interval_embed, Ifs, Orientation, Word,
};
use simplex_split::linalg::{char_poly, cylinder_measure, IntPolynomial};
use simplex_split::render::{partition_scene, triangle_area};
use simplex_split::symmetry::{canonical, enumerate_orbits, farey_orbit_ids, DEFAULT_MAX_ORBIT_DIM};

type Check = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn orbit_counts() -> Check {
    let start = Instant::now();
    let counts: Vec<usize> = (1..=5)
        .map(|n| enumerate_orbits(n, DEFAULT_MAX_ORBIT_DIM).unwrap().orbit_count)
        .collect();
    let elapsed = start.elapsed();
    ensure(counts == [3, 21, 160, 1283, 11321], || format!("counts {counts:?}"))?;
    ensure(elapsed < Duration::from_secs(120), || format!("took {elapsed:?}"))
}

fn theorem_at_desk_scale() -> Check {
    for n in [2, 3] {
        let report = verify_theorem(n, &SearchParams::defaults(n)).map_err(|e| e.to_string())?;
        let mut survivors: Vec<_> = report.survivor_pairs().into_iter().map(|p| canonical(&p)).collect();
        survivors.sort();
        let mut farey: Vec<_> = farey_orbit_ids(n).unwrap().to_vec();
        farey.sort();
        ensure(survivors.len() == 3 && survivors == farey, || {
            format!("n={n}: survivors {survivors:?}")
        })?;
        ensure(report.certified.len() + 3 == report.orbit_count, || {
            format!("n={n}: certified count")
        })?;
        ensure(
            report.reverification_failed == 0 && report.certified.iter().all(|c| c.reverified),
            || {
                format!(
                    "n={n}: {} certificates failed re-verification",
                    report.reverification_failed
                )
            },
        )?;
        // Re-check every certificate from scratch against its own pair.
        for c in &report.certified {
            let p = pair_from_perms(n, c.canonical_pair.p0.clone(), c.canonical_pair.p1.clone()).unwrap();
            c.certificate.reverify(&p.ifs()).map_err(|e| format!("n={n}: {e}"))?;
        }
        for p in farey_variants(n).unwrap() {
            let id = canonical(&(p.p0().clone(), p.p1().clone()));
            ensure(survivors.contains(&id), || format!("n={n}: {id:?} not among survivors"))?;
        }
    }
    Ok(())
}

/// Regular continued fraction of `p/q` in (0,1) by the Euclidean algorithm.
fn euclid_cf(mut p: u64, mut q: u64) -> Vec<usize> {
    let mut terms = Vec::new();
    while p != 0 {
        terms.push((q / p) as usize);
        (p, q) = (q % p, p);
    }
    terms
}

fn run_lengths(digits: &[u8]) -> Vec<usize> {
    let mut out = Vec::new();
    let mut run = 0;
    for &d in digits {
        run += 1;
        if d == 1 {
            out.push(run);
            run = 0;
        }
    }
    out
}

fn one_dimensional_sanity() -> Check {
    let ifs = monkemeyer(1).unwrap().ifs();
    for q in 2..=50u64 {
        for p in 1..q {
            if num_integer::gcd(p, q) != 1 {
                continue;
            }
            let y = BigRational::new(p.into(), q.into());
            let digits = expand(&ifs, &unit_interval_embed(&y).unwrap(), 2 * q as usize).unwrap();
            let blocks = run_lengths(digits.digits());
            let cf = euclid_cf(p, q);
            ensure(blocks == cf, || format!("{p}/{q}: blocks {blocks:?}, oracle {cf:?}"))?;
        }
    }
    Ok(())
}

fn characteristic_polynomials() -> Check {
    for n in 2..=6 {
        let pair = monkemeyer(n).unwrap();
        let mut x_n_minus_1 = vec![0i64; n + 1];
        x_n_minus_1[0] = -1;
        x_n_minus_1[n] = 1;
        let parabolic = &IntPolynomial::from_i64(&[-1, 1]) * &IntPolynomial::from_i64(&x_n_minus_1);
        let mut hyperbolic = vec![0i64; n + 2];
        hyperbolic[0] = -1;
        hyperbolic[1] = -1;
        hyperbolic[n + 1] = 1;
        let hyperbolic = IntPolynomial::from_i64(&hyperbolic);
        ensure(char_poly(pair.a0()) == parabolic, || {
            format!("n={n}: branch 0 is {}", char_poly(pair.a0()))
        })?;
        ensure(char_poly(pair.a1()) == hyperbolic, || {
            format!("n={n}: branch 1 is {}", char_poly(pair.a1()))
        })?;
    }
    Ok(())
}

fn orientation_and_continuity() -> Check {
    use Orientation::*;
    for n in 1..=6 {
        let [mono, op, or] = farey_variants(n).unwrap();
        let (same, flipped) = if n % 2 == 1 {
            (Preserving, Reversing)
        } else {
            (Reversing, Preserving)
        };
        ensure(orientation(&op) == (same, same), || {
            format!("n={n}: op {:?}", orientation(&op))
        })?;
        ensure(orientation(&or) == (flipped, flipped), || {
            format!("n={n}: or {:?}", orientation(&or))
        })?;
        let (o0, o1) = orientation(&mono);
        ensure(o0 != o1, || format!("n={n}: mono {:?}", (o0, o1)))?;
        let cont = [is_continuous(&mono), is_continuous(&op), is_continuous(&or)];
        ensure(cont == [true, false, false], || format!("n={n}: continuity {cont:?}"))?;
    }
    Ok(())
}

fn example5_eigen_segment() -> Check {
    let ifs = example5();
    let prod = ifs.branch(0) * ifs.branch(1);
    let a = prod.to_f64_rows();
    let mut v = vec![1.0 / 3.0; 3];
    for _ in 0..2000 {
        let w: Vec<f64> = (0..3).map(|i| (0..3).map(|j| a[i][j] * v[j]).sum()).collect();
        let s: f64 = w.iter().sum();
        v = w.into_iter().map(|x| x / s).collect();
    }
    let tau = (1.0 + 5f64.sqrt()) / 2.0;
    let expected = [1.0 - tau / 2.0, tau / 2.0 - 0.5, 0.5];
    for k in 0..3 {
        ensure((v[k] - expected[k]).abs() < 1e-9, || {
            format!("direction {v:?}, expected {expected:?}")
        })?;
    }
    let cert = certify_ifs(&ifs, 6).ok_or("no certificate for the fully subtractive system")?;
    ensure(cert.words == vec![Word::new(vec![0, 1])], || {
        format!("flagged words {:?}", cert.words)
    })?;
    cert.reverify(&ifs)
}

fn measure_sums(ifs: &Ifs, label: &str) -> Check {
    for t in 0..=10 {
        let total: BigRational = Word::all_of_length(ifs.len(), t)
            .map(|w| cylinder_measure(&cylinder_of_word(ifs, &w).unwrap()))
            .sum();
        ensure(total.is_one(), || format!("{label}, t={t}: sum {total}"))?;
    }
    Ok(())
}

fn partition_of_unity() -> Check {
    for n in [2, 3] {
        for (k, p) in farey_variants(n).unwrap().iter().enumerate() {
            measure_sums(&p.ifs(), &format!("n={n} variant {k}"))?;
        }
    }
    measure_sums(&example5(), "fully subtractive")
}

fn diameter_evidence_profiles() -> Check {
    for n in [2, 3] {
        let profile = diameter_evidence(&monkemeyer(n).unwrap().ifs(), 20).map_err(|e| e.to_string())?;
        ensure(is_non_increasing(&profile), || format!("n={n}: profile increases"))?;
        ensure(profile[20] < profile[5], || {
            format!("n={n}: {} vs {}", profile[20], profile[5])
        })?;
    }
    let stuck = pair(&[1, 2, 0], &[2, 1, 0]);
    let a01 = stuck.word_matrix(&Word::new(vec![0, 1]));
    ensure(a01 == m(&[&[1, 0, 1], &[0, 0, 1], &[0, 1, 1]]), || {
        format!("A01 = {a01:?}")
    })?;
    let profile = diameter_evidence(&stuck.ifs(), 20).map_err(|e| e.to_string())?;
    // The cylinders of (01)^k keep the fixed vertex e0 and an interior point of
    // the segment towards the expanding eigenvector, so the floor is positive.
    let floor = BigRational::new(BigInt::one(), BigInt::from(2));
    ensure(profile.iter().all(|d| *d >= floor), || {
        format!(
            "profile dips below 1/2: {}",
            profile.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" ")
        )
    })
}

fn bracket_consistency() -> Check {
    let mut r = rng(2024);
    let [_, op, or] = farey_variants(2).unwrap();
    let systems: Vec<Ifs> = vec![
        monkemeyer(1).unwrap().ifs(),
        monkemeyer(2).unwrap().ifs(),
        monkemeyer(3).unwrap().ifs(),
        op.ifs(),
        or.ifs(),
        example5(),
    ];
    for i in 0..200 {
        let ifs = &systems[i % systems.len()];
        let x = random_point(&mut r, ifs.dim());
        let t = r.gen_range(0..=15);
        let w = expand(ifs, &x, t).unwrap();
        let bracket = pi_approx(ifs, &w).unwrap();
        ensure(w.len() == t && bracket.contains(&x), || {
            format!("{x} not in bracket of {w}")
        })?;
    }
    Ok(())
}

fn render_checks() -> Check {
    let scene = partition_scene(&example5(), 5).map_err(|e| e.to_string())?;
    ensure(scene.polygons.len() == 243, || {
        format!("{} polygons", scene.polygons.len())
    })?;
    let total: f64 = scene.polygons.iter().map(|p| p.area()).sum();
    ensure((total - triangle_area()).abs() < 1e-9, || {
        format!("area sum {total} vs {}", triangle_area())
    })
}

fn main() {
    let criteria: [(&str, fn() -> Check); 10] = [
        ("orbit counts for n = 1..5", orbit_counts),
        (
            "survivors at n = 2, 3 are the three Farey variants",
            theorem_at_desk_scale,
        ),
        (
            "1-D blocks equal continued fractions for q <= 50",
            one_dimensional_sanity,
        ),
        (
            "branch characteristic polynomials for n = 2..6",
            characteristic_polynomials,
        ),
        (
            "orientation and continuity tables for n = 1..6",
            orientation_and_continuity,
        ),
        ("fully subtractive eigen-segment and word 01", example5_eigen_segment),
        ("measure partition of unity for t <= 10", partition_of_unity),
        ("diameter evidence profiles", diameter_evidence_profiles),
        ("bracket consistency on 200 random points", bracket_consistency),
        ("fully subtractive partition SVG at t = 5", render_checks),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(()) => println!("criterion {:>2}: PASS  {name} ({secs:.1}s)", i + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name} ({secs:.1}s): {e}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
