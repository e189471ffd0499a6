//! Reductions between weighted 3-SAT, binary energies and multi-label
//! energies, with the reverse maps that carry solutions back.

mod ap;
pub mod gadgets;
mod klabel;
mod planar;
mod quadratize;
mod trace;
mod w3sat;

pub use ap::{
    enumerate_labelings, verify_ap_reduction, ApReduction, ApReport, Check, Counterexample, DrawnInstance, Identity,
    InstanceReport, Planarize, QpboToKlabel, SourceProblem, W3satToQpbo, DEFAULT_ENUMERATION_LIMIT,
};
pub use klabel::{klabel_sigma, qpbo_to_klabel};
pub use planar::{
    planar_sigma, planarize, replace_crossing, replay_planarize, AUX_PER_CROSSING, REFERENCE_AUX_PER_CROSSING,
};
pub use quadratize::{cubic_replacement, quadratize, quadratize_from};
pub use trace::{CrossingRecord, ReductionKind, ReductionTrace};
pub use w3sat::{
    clause_penalty, clause_to_poly, w3sat_polynomial, w3sat_sigma, w3sat_to_qpbo, Clause, Literal, W3SatTriv,
};
