//! Expands an exact point of the 2-simplex and shows the nested cylinders
//! closing in on it.

use simplex_split::ifs::{expand, monkemeyer, pi_approx, Word};
use simplex_split::linalg::SimplexPoint;

pub fn run_example() -> simplex_split::Result<Word> {
    let ifs = monkemeyer(2)?.ifs();
    let x: SimplexPoint = "3/17,9/17,5/17".parse()?;
    let digits = expand(&ifs, &x, 16)?;
    println!("x = {x}\ndigits {digits}");
    for t in [0, 2, 4, 8, 16] {
        let b = pi_approx(&ifs, &digits.prefix(t))?;
        assert!(b.contains(&x));
        println!("t = {t:>2}: diameter {}", b.diameter);
    }
    Ok(digits)
}

#[allow(dead_code)]
fn main() -> simplex_split::Result<()> {
    run_example().map(|_| ())
}
