//! Orientation, continuity and graph shape of the three Farey variants.

use simplex_split::certify::shape;
use simplex_split::ifs::{farey_variants, is_continuous, orientation};

pub fn run_example() -> simplex_split::Result<Vec<String>> {
    let mut labels = Vec::new();
    for n in 1..=5 {
        for pair in farey_variants(n)? {
            let (o0, o1) = orientation(&pair);
            let s = shape(&pair)?;
            println!(
                "n = {n} {} {}: signs ({:+},{:+}) continuous {:<5} shape {s}",
                pair.p0(),
                pair.p1(),
                o0.sign(),
                o1.sign(),
                is_continuous(&pair)
            );
            labels.push(s.to_string());
        }
    }
    Ok(labels)
}

#[allow(dead_code)]
fn main() -> simplex_split::Result<()> {
    run_example().map(|_| ())
}
