//! Runs the full classification in one dimension: every class except the
//! three Farey ones is killed by a certificate.
//!
//! `cargo run --release --example verify_theorem -- 3`

use simplex_split::certify::{verify_theorem, SearchParams, VerifyReport};

pub fn run_example_with(n: usize) -> simplex_split::Result<VerifyReport> {
    let report = verify_theorem(n, &SearchParams::defaults(n))?;
    println!(
        "n = {n}: {} orbits, {} certified, {} survivors",
        report.orbit_count,
        report.certified.len(),
        report.survivors.len()
    );
    for (kind, count) in &report.certificate_kinds {
        println!("  {kind}: {count}");
    }
    for s in &report.survivors {
        let last = s.diameter_profile.last().expect("nonempty profile");
        println!(
            "  survivor {} {}  farey: {}  diameter at depth {}: {last}",
            s.canonical_pair.p0,
            s.canonical_pair.p1,
            s.is_farey,
            s.diameter_profile.len() - 1
        );
    }
    println!("survivors are the Farey classes: {}", report.survivors_match_farey);
    Ok(report)
}

pub fn run_example() -> simplex_split::Result<VerifyReport> {
    run_example_with(2)
}

#[allow(dead_code)]
fn main() -> simplex_split::Result<()> {
    let n = std::env::args()
        .nth(1)
        .map_or(Ok(2), |s| s.parse())
        .expect("n must be an integer");
    run_example_with(n).map(|_| ())
}
