//! One certificate of each kind from the n = 2 classes, with its
//! independent re-check.

use std::collections::BTreeMap;

use simplex_split::certify::{certify_noncontractive, Certificate, CertificateKind};
use simplex_split::ifs::pair_from_perms;
use simplex_split::symmetry::{enumerate_orbits, DEFAULT_MAX_ORBIT_DIM};

pub fn run_example() -> simplex_split::Result<BTreeMap<CertificateKind, Certificate>> {
    let mut first = BTreeMap::new();
    for (p0, p1) in enumerate_orbits(2, DEFAULT_MAX_ORBIT_DIM)?.representatives() {
        let pair = pair_from_perms(2, p0.clone(), p1.clone())?;
        let Some(cert) = certify_noncontractive(&pair, 6) else {
            continue;
        };
        if first.contains_key(&cert.kind) {
            continue;
        }
        let words: Vec<String> = cert.words.iter().map(|w| w.to_string()).collect();
        println!(
            "{} for {p0} {p1}: words {:?} nodes {:?}, recheck {:?}",
            cert.kind,
            words,
            cert.nodes,
            cert.reverify(&pair.ifs())
        );
        println!("    {:?}", cert.justification);
        first.insert(cert.kind, cert);
    }
    Ok(first)
}

#[allow(dead_code)]
fn main() -> simplex_split::Result<()> {
    run_example().map(|_| ())
}
