//! Necessary conditions for Lagrangian concordance, fillings and cobordisms.
//!
//! Every check works on classical invariants only. `Passes` means that no
//! obstruction was found; it never asserts that a concordance exists.

use serde::{Deserialize, Serialize};

use crate::invariants::InvariantRecord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VerdictStatus {
    Passes,
    Obstructed,
    #[serde(rename = "Decided(yes)")]
    DecidedYes,
    #[serde(rename = "Decided(no)")]
    DecidedNo,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ObstructionReason {
    TbMismatch,
    RMismatch,
    FillingTb,
    FillingR,
    AdjunctionViolated,
    OddTbGap,
    NegativeGenus,
}

/// Outcome of an obstruction check. `Obstructed` always carries a reason.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ObstructionVerdict {
    pub status: VerdictStatus,
    pub reason: Option<ObstructionReason>,
}

impl ObstructionVerdict {
    pub const PASSES: Self = ObstructionVerdict { status: VerdictStatus::Passes, reason: None };
    pub const UNKNOWN: Self = ObstructionVerdict { status: VerdictStatus::Unknown, reason: None };

    pub fn obstructed(reason: ObstructionReason) -> Self {
        ObstructionVerdict { status: VerdictStatus::Obstructed, reason: Some(reason) }
    }

    pub fn decided(yes: bool, reason: Option<ObstructionReason>) -> Self {
        let status = if yes { VerdictStatus::DecidedYes } else { VerdictStatus::DecidedNo };
        ObstructionVerdict { status, reason }
    }

    pub fn is_obstructed(&self) -> bool {
        self.status == VerdictStatus::Obstructed
    }
}

/// Classical data of a Legendrian knot assumed to bound an exact Lagrangian
/// filling of genus `g`; `g_s` is the smooth slice genus when known.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FillingHypothesis {
    pub tb: i64,
    pub r: i64,
    pub g: u64,
    pub g_s: Option<u64>,
}

/// `tb` and `r` must agree at both ends of a Lagrangian concordance.
pub fn classical_obstructions(a: &InvariantRecord, b: &InvariantRecord) -> ObstructionVerdict {
    if a.tb != b.tb {
        ObstructionVerdict::obstructed(ObstructionReason::TbMismatch)
    } else if a.r != b.r {
        ObstructionVerdict::obstructed(ObstructionReason::RMismatch)
    } else {
        ObstructionVerdict::PASSES
    }
}

/// Whether an immersed exact Lagrangian cylinder joins two smoothly
/// concordant knots with rotation numbers `r0` and `r1`.
pub fn immersed_cylinder_exists(r0: i64, r1: i64, smoothly_concordant: bool) -> bool {
    smoothly_concordant && r0 == r1
}

fn euler_bound(g: u64) -> i64 {
    2 * g as i64 - 1
}

/// A filled knot has `r = 0` and `tb = 2g - 1`; in the ball `g` is also the
/// slice genus.
pub fn lagrangian_filling_constraints(h: &FillingHypothesis) -> ObstructionVerdict {
    if h.r != 0 {
        ObstructionVerdict::obstructed(ObstructionReason::FillingR)
    } else if h.tb != euler_bound(h.g) || h.g_s.is_some_and(|gs| gs != h.g) {
        ObstructionVerdict::obstructed(ObstructionReason::FillingTb)
    } else {
        ObstructionVerdict::PASSES
    }
}

/// Adjunction bound `tb + |r| <= 2g - 1`.
pub fn lisca_matic_check(tb: i64, r: i64, g: u64) -> bool {
    tb + r.abs() <= euler_bound(g)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CobordismGenus {
    Genus(u64),
    Impossible(ObstructionReason),
}

/// Genus of an exact Lagrangian cobordism from a knot with `tb0` to one with
/// `tb1`, forced by `tb1 - tb0 = 2g`.
pub fn lagrangian_cobordism_genus(tb0: i64, tb1: i64) -> CobordismGenus {
    let gap = tb1 - tb0;
    if gap % 2 != 0 {
        CobordismGenus::Impossible(ObstructionReason::OddTbGap)
    } else if gap < 0 {
        CobordismGenus::Impossible(ObstructionReason::NegativeGenus)
    } else {
        CobordismGenus::Genus((gap / 2) as u64)
    }
}

/// In a Legendrian simple knot type, concordance coincides with isotopy and
/// so with equality of `tb` and `r`.
pub fn decide_simple_type(
    a: &InvariantRecord,
    b: &InvariantRecord,
    same_smooth_type: bool,
    type_is_simple: bool,
) -> ObstructionVerdict {
    let classical = classical_obstructions(a, b);
    match (type_is_simple, same_smooth_type) {
        (true, true) => ObstructionVerdict::decided(!classical.is_obstructed(), classical.reason),
        (true, false) if classical.is_obstructed() => ObstructionVerdict::decided(false, classical.reason),
        (true, false) => ObstructionVerdict::UNKNOWN,
        (false, _) if classical.is_obstructed() => classical,
        (false, _) => ObstructionVerdict::UNKNOWN,
    }
}

/// Every link of a concordance chain carries the same `tb` and `r`.
pub fn partial_order_consistency(chain: &[InvariantRecord]) -> bool {
    chain.windows(2).all(|w| !classical_obstructions(&w[0], &w[1]).is_obstructed())
}
