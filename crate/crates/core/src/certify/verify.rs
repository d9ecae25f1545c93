use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use super::certificate::{certify_noncontractive, Certificate, CertificateKind};
use super::evidence::{diameter_evidence, is_non_increasing};
use crate::error::{Error, Result};
use crate::ifs::{pair_from_perms, SplitPair};
use crate::symmetry::{enumerate_orbits, farey_orbit_ids, PermPair, Permutation};

/// Search bounds: certificate word length, evidence depth and diameter threshold.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchParams {
    pub max_word_len: usize,
    pub depth: usize,
    #[serde(serialize_with = "crate::ser::rational")]
    pub epsilon: BigRational,
}

impl SearchParams {
    /// `B = 2(n+1)`, `T = 20`, `ε = 1/16`.
    pub fn defaults(dim: usize) -> Self {
        Self {
            max_word_len: 2 * (dim + 1),
            depth: 20,
            epsilon: BigRational::new(1.into(), 16.into()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    NonContractive {
        certificate: Certificate,
    },
    /// No certificate, and the diameter profile fell below `ε`.
    ContractiveEvidence {
        #[serde(serialize_with = "crate::ser::rationals")]
        diameter_profile: Vec<BigRational>,
    },
    /// No certificate, and the profile stayed at or above `ε`.
    Unknown {
        #[serde(serialize_with = "crate::ser::rationals")]
        diameter_profile: Vec<BigRational>,
    },
}

impl Verdict {
    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            Verdict::NonContractive { certificate } => Some(certificate),
            _ => None,
        }
    }

    pub fn profile(&self) -> Option<&[BigRational]> {
        match self {
            Verdict::ContractiveEvidence { diameter_profile } | Verdict::Unknown { diameter_profile } => {
                Some(diameter_profile)
            }
            Verdict::NonContractive { .. } => None,
        }
    }
}

/// Semi-decision for one pair: a certificate, or diameter evidence.
pub fn classify(pair: &SplitPair, params: &SearchParams) -> Result<Verdict> {
    if let Some(certificate) = certify_noncontractive(pair, params.max_word_len) {
        return Ok(Verdict::NonContractive { certificate });
    }
    let diameter_profile = diameter_evidence(&pair.ifs(), params.depth)?;
    debug_assert!(is_non_increasing(&diameter_profile));
    let last = diameter_profile.last().expect("profile has depth 0");
    Ok(if *last < params.epsilon {
        Verdict::ContractiveEvidence { diameter_profile }
    } else {
        Verdict::Unknown { diameter_profile }
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CanonicalPair {
    pub p0: Permutation,
    pub p1: Permutation,
}

impl From<&PermPair> for CanonicalPair {
    fn from(p: &PermPair) -> Self {
        Self {
            p0: p.0.clone(),
            p1: p.1.clone(),
        }
    }
}

impl CanonicalPair {
    pub fn to_pair(&self) -> PermPair {
        (self.p0.clone(), self.p1.clone())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CertifiedOrbit {
    pub canonical_pair: CanonicalPair,
    pub certificate: Certificate,
    pub reverified: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Survivor {
    pub canonical_pair: CanonicalPair,
    #[serde(serialize_with = "crate::ser::rationals")]
    pub diameter_profile: Vec<BigRational>,
    /// Float rendering of the profile, for reading only.
    pub diameter_profile_approx: Vec<f64>,
    pub evidence: EvidenceTag,
    pub is_farey: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EvidenceTag {
    ContractiveEvidence,
    Unknown,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub schema_version: u32,
    pub n: usize,
    pub orbit_count: usize,
    pub certified: Vec<CertifiedOrbit>,
    pub survivors: Vec<Survivor>,
    pub farey_orbits: Vec<CanonicalPair>,
    pub survivors_match_farey: bool,
    pub reverification_passed: usize,
    pub reverification_failed: usize,
    /// Number of certificates of each kind.
    pub certificate_kinds: BTreeMap<CertificateKind, usize>,
    /// Longest witness word among all certificates.
    pub longest_certificate_word: usize,
    pub parameters: SearchParams,
}

impl VerifyReport {
    pub fn survivor_pairs(&self) -> Vec<PermPair> {
        self.survivors.iter().map(|s| s.canonical_pair.to_pair()).collect()
    }
}

pub const MAX_VERIFY_DIM: usize = 5;
pub const REPORT_SCHEMA_VERSION: u32 = 1;

enum Outcome {
    Certified(CertifiedOrbit),
    Survived(Survivor),
}

/// Classifies every orbit representative in dimension `dim`.
pub fn verify_theorem(dim: usize, params: &SearchParams) -> Result<VerifyReport> {
    if dim > MAX_VERIFY_DIM {
        return Err(Error::ResourceLimit(format!(
            "theorem verification is capped at n ≤ {MAX_VERIFY_DIM}"
        )));
    }
    if params.max_word_len == 0 || params.depth == 0 {
        return Err(Error::Parse("word length and depth must be positive".into()));
    }
    let orbits = enumerate_orbits(dim, MAX_VERIFY_DIM)?;
    let farey = farey_orbit_ids(dim)?;
    let reps: Vec<PermPair> = orbits.representatives().collect();
    let outcomes: Vec<Outcome> = reps
        .par_iter()
        .map(|rep| -> Result<Outcome> {
            let pair = pair_from_perms(dim, rep.0.clone(), rep.1.clone())?;
            let canonical_pair = CanonicalPair::from(rep);
            match certify_noncontractive(&pair, params.max_word_len) {
                Some(certificate) => {
                    let reverified = certificate.reverify(&pair.ifs()).is_ok();
                    Ok(Outcome::Certified(CertifiedOrbit {
                        canonical_pair,
                        certificate,
                        reverified,
                    }))
                }
                None => {
                    let profile = diameter_evidence(&pair.ifs(), params.depth)?;
                    let last = profile.last().expect("nonempty profile");
                    let evidence = if *last < params.epsilon {
                        EvidenceTag::ContractiveEvidence
                    } else {
                        EvidenceTag::Unknown
                    };
                    Ok(Outcome::Survived(Survivor {
                        is_farey: farey.contains(rep),
                        diameter_profile_approx: profile.iter().map(|q| q.to_f64().unwrap_or(f64::NAN)).collect(),
                        diameter_profile: profile,
                        canonical_pair,
                        evidence,
                    }))
                }
            }
        })
        .collect::<Result<_>>()?;

    let mut certified = Vec::new();
    let mut survivors = Vec::new();
    for o in outcomes {
        match o {
            Outcome::Certified(c) => certified.push(c),
            Outcome::Survived(s) => survivors.push(s),
        }
    }
    let mut certificate_kinds = BTreeMap::new();
    for c in &certified {
        *certificate_kinds.entry(c.certificate.kind).or_insert(0) += 1;
    }
    let passed = certified.iter().filter(|c| c.reverified).count();
    let mut surviving: Vec<PermPair> = survivors.iter().map(|s| s.canonical_pair.to_pair()).collect();
    surviving.sort();
    let mut farey_sorted = farey.to_vec();
    farey_sorted.sort();
    farey_sorted.dedup();
    Ok(VerifyReport {
        schema_version: REPORT_SCHEMA_VERSION,
        n: dim,
        orbit_count: orbits.orbit_count,
        longest_certificate_word: certified.iter().map(|c| c.certificate.word_len()).max().unwrap_or(0),
        reverification_failed: certified.len() - passed,
        reverification_passed: passed,
        certified,
        survivors,
        farey_orbits: farey.iter().map(CanonicalPair::from).collect(),
        survivors_match_farey: surviving == farey_sorted,
        certificate_kinds,
        parameters: params.clone(),
    })
}
