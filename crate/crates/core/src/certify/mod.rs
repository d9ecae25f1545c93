//! Incidence graphs of split pairs, non-contractivity certificates, diameter
//! evidence and the exhaustive classifier.

mod certificate;
mod evidence;
mod graph;
mod shape;
mod verify;

pub use certificate::{
    certify_ifs, certify_noncontractive, find_c1, find_c2, find_c3, find_c3_ifs, find_c4, find_c4_ifs, Certificate,
    CertificateKind, Justification,
};
pub use evidence::{diameter_evidence, full_diameter, is_non_increasing, profile_exact, MAX_EVIDENCE_LEAVES};
pub use graph::{incomplete_graph, IncompleteGraph};
pub use shape::{shape, BranchShape, Shape, ShapeReport};
pub use verify::{
    classify, verify_theorem, CanonicalPair, CertifiedOrbit, EvidenceTag, SearchParams, Survivor, Verdict,
    VerifyReport, MAX_VERIFY_DIM, REPORT_SCHEMA_VERSION,
};
