//! On the unit interval the Mönkemeyer pair is the Farey map: run lengths of
//! the digit expansion are the continued fraction terms.

use num_rational::BigRational;
use simplex_split::ifs::{expand, monkemeyer, unit_interval_embed};

/// Run lengths of the blocks `0…01`, ignoring the trailing zeros.
fn blocks(digits: &[u8]) -> Vec<usize> {
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

pub fn run_example() -> simplex_split::Result<Vec<(String, Vec<usize>)>> {
    let ifs = monkemeyer(1)?.ifs();
    let mut rows = Vec::new();
    for (p, q) in [(3, 5), (5, 8), (7, 10), (13, 31), (1, 7)] {
        let y = BigRational::new(p.into(), q.into());
        let digits = expand(&ifs, &unit_interval_embed(&y)?, 2 * q as usize)?;
        let cf = blocks(digits.digits());
        println!(
            "{y:>6}  {digits}  [0;{}]",
            cf.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(",")
        );
        rows.push((y.to_string(), cf));
    }
    Ok(rows)
}

#[allow(dead_code)]
fn main() -> simplex_split::Result<()> {
    run_example().map(|_| ())
}
