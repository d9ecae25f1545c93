//! Maximal cylinder diameters: they decay for the Mönkemeyer pair and stall
//! for a pair whose product fixes a vertex.

use num_rational::BigRational;
use simplex_split::certify::diameter_evidence;
use simplex_split::ifs::{monkemeyer, pair_from_perms};
use simplex_split::symmetry::Permutation;

pub fn run_example() -> simplex_split::Result<(Vec<BigRational>, Vec<BigRational>)> {
    let depth = 16;
    let mono = diameter_evidence(&monkemeyer(2)?.ifs(), depth)?;
    let stuck_pair = pair_from_perms(2, Permutation::new(vec![1, 2, 0])?, Permutation::new(vec![2, 1, 0])?)?;
    let stuck = diameter_evidence(&stuck_pair.ifs(), depth)?;
    println!("depth  mono     fixed-vertex pair");
    for t in 0..=depth {
        println!("{t:>5}  {:<8} {}", mono[t].to_string(), stuck[t]);
    }
    Ok((mono, stuck))
}

#[allow(dead_code)]
fn main() -> simplex_split::Result<()> {
    run_example().map(|_| ())
}
