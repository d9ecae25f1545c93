//! Characteristic polynomials of the Mönkemeyer branches: the first is a
//! product of cyclotomic factors, the second has a Pisot root.

use simplex_split::ifs::monkemeyer;
use simplex_split::linalg::char_poly;

pub fn run_example() -> simplex_split::Result<Vec<(String, String)>> {
    let mut rows = Vec::new();
    for n in 2..=6 {
        let pair = monkemeyer(n)?;
        let (p0, p1) = (char_poly(pair.a0()).to_string(), char_poly(pair.a1()).to_string());
        println!("n = {n}:  {p0:<22} {p1}");
        rows.push((p0, p1));
    }
    Ok(rows)
}

#[allow(dead_code)]
fn main() -> simplex_split::Result<()> {
    run_example().map(|_| ())
}
