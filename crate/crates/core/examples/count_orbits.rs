//! Counts pairs of permutations up to the symmetries of the simplex that
//! preserve the splitting face, and lists the classes for n = 2.

use simplex_split::symmetry::{enumerate_orbits, DEFAULT_MAX_ORBIT_DIM};

pub fn run_example() -> simplex_split::Result<Vec<usize>> {
    let mut counts = Vec::new();
    for n in 1..=4 {
        let report = enumerate_orbits(n, DEFAULT_MAX_ORBIT_DIM)?;
        println!("n = {n}: {} orbits", report.orbit_count);
        counts.push(report.orbit_count);
    }
    println!("\nrepresentatives for n = 2 (P0, P1, orbit size):");
    for o in enumerate_orbits(2, DEFAULT_MAX_ORBIT_DIM)?.orbits {
        println!("  {} {}  {}", o.p0, o.p1, o.size);
    }
    Ok(counts)
}

#[allow(dead_code)]
fn main() -> simplex_split::Result<()> {
    run_example().map(|_| ())
}
