//! Legendrian Reidemeister moves and stabilization on event words.
//!
//! The move table, written with `k` the base level of the pattern:
//!
//! | move | variant | forward pattern       | rewrites to          |
//! |------|---------|-----------------------|----------------------|
//! | RI   | 0       | `l(k+1) x(k) r(k+1)`  | nothing              |
//! | RI   | 1       | `l(k) x(k+1) r(k)`    | nothing              |
//! | RII  | 0       | `l(k) x(k+1) x(k)`    | `l(k+1)`             |
//! | RII  | 1       | `l(k+1) x(k) x(k+1)`  | `l(k)`               |
//! | RII  | 2       | `x(k) x(k+1) r(k)`    | `r(k+1)`             |
//! | RII  | 3       | `x(k+1) x(k) r(k+1)`  | `r(k)`               |
//! | RIII | 0       | `x(k) x(k+1) x(k)`    | `x(k+1) x(k) x(k+1)` |
//!
//! Two planar moves complete the table. `FarCommute` swaps adjacent events
//! with disjoint footprints; this includes `r(k) l(k)` against `l(k) r(k+2)`,
//! where the left cusp slides past the right cusp tip above it. `CuspPass`
//! rewrites `r(k) l(k)` to `l(k+2) r(k)`, sliding it past below.
//!
//! RI removes a loop made of two cusps and one crossing hanging below
//! (variant 0) or above (variant 1) the strand at level `k`. RII slides a
//! strand past a cusp tip. Inverse moves run the table right to left; an
//! inverse RI inserts a loop on the strand at level `k` of a slice.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::front::{commute, orient, Direction, EventKind, FrontDiagram, FrontError, FrontEvent, OrientedDiagram};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MoveType {
    RI,
    RII,
    RIII,
    FarCommute,
    CuspPass,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MoveDirection {
    Forward,
    Inverse,
}

/// One applicable local rewrite.
///
/// `position` is the index of the first event of the matched pattern; for an
/// inverse RI it is the slice (number of preceding events) where the loop
/// goes. `level` is the base level `k` of the table row and is always 0 for
/// far commutations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MoveInstance {
    pub position: usize,
    pub move_type: MoveType,
    pub variant: u8,
    pub direction: MoveDirection,
    pub level: usize,
}

impl MoveInstance {
    pub fn new(move_type: MoveType, variant: u8, position: usize, direction: MoveDirection, level: usize) -> Self {
        MoveInstance { position, move_type, variant, direction, level }
    }

    pub fn far_commute(position: usize) -> Self {
        Self::new(MoveType::FarCommute, 0, position, MoveDirection::Forward, 0)
    }

    /// The move that undoes this one, applied to the result at the same
    /// position.
    pub fn inverse(&self) -> MoveInstance {
        let direction = match (self.move_type, self.direction) {
            (MoveType::FarCommute, d) => d,
            (_, MoveDirection::Forward) => MoveDirection::Inverse,
            (_, MoveDirection::Inverse) => MoveDirection::Forward,
        };
        MoveInstance { direction, ..*self }
    }

    pub fn is_commutation(&self) -> bool {
        self.move_type == MoveType::FarCommute
    }

    /// Far commutations and cusp passes; neither changes the front's topology.
    pub fn is_planar(&self) -> bool {
        matches!(self.move_type, MoveType::FarCommute | MoveType::CuspPass)
    }
}

impl fmt::Display for MoveInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dir = match self.direction {
            MoveDirection::Forward => "fwd",
            MoveDirection::Inverse => "inv",
        };
        write!(f, "{:?}.{} {dir} @{} k={}", self.move_type, self.variant, self.position, self.level)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("move {0} does not match the diagram")]
    NotApplicable(MoveInstance),
    #[error("no strand at level {level} after event {after_event}")]
    InvalidArc { after_event: usize, level: usize },
    #[error(transparent)]
    Front(#[from] FrontError),
}

fn l(k: usize) -> FrontEvent {
    FrontEvent::left(k)
}

fn r(k: usize) -> FrontEvent {
    FrontEvent::right(k)
}

fn x(k: usize) -> FrontEvent {
    FrontEvent::cross(k)
}

/// Left-hand side of a table row at base level `k`.
fn long_side(t: MoveType, variant: u8, k: usize) -> Option<[FrontEvent; 3]> {
    Some(match (t, variant) {
        (MoveType::RI, 0) => [l(k + 1), x(k), r(k + 1)],
        (MoveType::RI, 1) => [l(k), x(k + 1), r(k)],
        (MoveType::RII, 0) => [l(k), x(k + 1), x(k)],
        (MoveType::RII, 1) => [l(k + 1), x(k), x(k + 1)],
        (MoveType::RII, 2) => [x(k), x(k + 1), r(k)],
        (MoveType::RII, 3) => [x(k + 1), x(k), r(k + 1)],
        (MoveType::RIII, 0) => [x(k), x(k + 1), x(k)],
        _ => return None,
    })
}

/// Right-hand side of a table row.
fn short_side(t: MoveType, variant: u8, k: usize) -> Option<Vec<FrontEvent>> {
    Some(match (t, variant) {
        (MoveType::RI, 0 | 1) => vec![],
        (MoveType::RII, 0) => vec![l(k + 1)],
        (MoveType::RII, 1) => vec![l(k)],
        (MoveType::RII, 2) => vec![r(k + 1)],
        (MoveType::RII, 3) => vec![r(k)],
        (MoveType::RIII, 0) => vec![x(k + 1), x(k), x(k + 1)],
        _ => return None,
    })
}

const TABLE: [(MoveType, u8); 7] = [
    (MoveType::RI, 0),
    (MoveType::RI, 1),
    (MoveType::RII, 0),
    (MoveType::RII, 1),
    (MoveType::RII, 2),
    (MoveType::RII, 3),
    (MoveType::RIII, 0),
];

/// Base level `k` for which `window` equals the row's forward pattern.
fn match_long(t: MoveType, variant: u8, window: &[FrontEvent]) -> Option<usize> {
    let first = *window.first()?;
    let k = match (t, variant) {
        (MoveType::RI, 0) | (MoveType::RII, 1) | (MoveType::RII, 3) => first.level.checked_sub(1)?,
        _ => first.level,
    };
    let pat = long_side(t, variant, k)?;
    (window.len() >= 3 && window[..3] == pat).then_some(k)
}

/// Base level for which `window` starts with the row's inverse pattern.
fn match_short(t: MoveType, variant: u8, window: &[FrontEvent]) -> Option<usize> {
    let first = *window.first()?;
    let k = match (t, variant) {
        (MoveType::RII, 0) | (MoveType::RII, 2) | (MoveType::RIII, 0) => first.level.checked_sub(1)?,
        (MoveType::RII, 1) | (MoveType::RII, 3) => first.level,
        _ => return None,
    };
    let pat = short_side(t, variant, k)?;
    (window.len() >= pat.len() && window[..pat.len()] == pat[..]).then_some(k)
}

fn cusp_pass_pair(variant: u8, k: usize) -> Option<[FrontEvent; 2]> {
    (variant == 0).then(|| [l(k + 2), r(k)])
}

fn splice(d: &FrontDiagram, at: usize, remove: usize, insert: &[FrontEvent]) -> FrontDiagram {
    let mut events = Vec::with_capacity(d.events.len() + insert.len() - remove.min(d.events.len()));
    events.extend_from_slice(&d.events[..at]);
    events.extend_from_slice(insert);
    events.extend_from_slice(&d.events[at + remove..]);
    FrontDiagram::new(events)
}

/// Rewrites `d` by `m` without checking that `d` is a valid knot front.
/// Returns `None` when the pattern does not match.
pub fn try_apply(d: &FrontDiagram, m: &MoveInstance) -> Option<FrontDiagram> {
    let p = m.position;
    let ev = &d.events;
    match (m.move_type, m.direction) {
        (MoveType::FarCommute, _) => {
            if p + 1 >= ev.len() {
                return None;
            }
            let (b, a) = commute(ev[p], ev[p + 1])?;
            Some(splice(d, p, 2, &[b, a]))
        }
        (MoveType::CuspPass, dir) => {
            let k = m.level;
            let tips = [r(k), l(k)];
            let passed = cusp_pass_pair(m.variant, k)?;
            let (from, to) = match dir {
                MoveDirection::Forward => (tips, passed),
                MoveDirection::Inverse => (passed, tips),
            };
            (ev.get(p..p + 2)? == from).then(|| splice(d, p, 2, &to))
        }
        (MoveType::RI, MoveDirection::Inverse) => {
            let counts = d.strand_counts()?;
            if p > ev.len() || m.level >= counts[p] {
                return None;
            }
            let pat = long_side(m.move_type, m.variant, m.level)?;
            Some(splice(d, p, 0, &pat))
        }
        (t, MoveDirection::Forward) => {
            let window = ev.get(p..)?;
            if match_long(t, m.variant, window)? != m.level {
                return None;
            }
            let repl = short_side(t, m.variant, m.level)?;
            Some(splice(d, p, 3, &repl))
        }
        (t, MoveDirection::Inverse) => {
            let window = ev.get(p..)?;
            if match_short(t, m.variant, window)? != m.level {
                return None;
            }
            let pat = long_side(t, m.variant, m.level)?;
            let len = short_side(t, m.variant, m.level)?.len();
            let out = splice(d, p, len, &pat);
            // Inverse RII needs the passing strand to exist.
            out.strand_counts()?;
            Some(out)
        }
    }
}

/// Every match of the move table (both directions, all variants), every
/// loop insertion and every far commutation, in a fixed order.
pub fn applicable_moves(d: &FrontDiagram) -> Result<Vec<MoveInstance>, FrontError> {
    crate::front::checked_trace(d)?;
    Ok(enumerate_moves(d))
}

/// As [`applicable_moves`] for any well-formed word.
pub(crate) fn enumerate_moves(d: &FrontDiagram) -> Vec<MoveInstance> {
    let counts = match d.strand_counts() {
        Some(c) => c,
        None => return Vec::new(),
    };
    let mut out = Vec::new();
    for p in 0..=d.events.len() {
        out.extend(pattern_moves_at(d, p));
        for k in 0..counts[p] {
            for v in 0..2 {
                out.push(MoveInstance::new(MoveType::RI, v, p, MoveDirection::Inverse, k));
            }
        }
    }
    out.sort();
    out
}

/// Moves whose matched pattern starts at event `p`; loop insertions are
/// not included.
pub(crate) fn pattern_moves_at(d: &FrontDiagram, p: usize) -> Vec<MoveInstance> {
    let ev = &d.events;
    let window = &ev[p.min(ev.len())..];
    let mut out = Vec::new();
    for &(t, v) in &TABLE {
        if let Some(k) = match_long(t, v, window) {
            out.push(MoveInstance::new(t, v, p, MoveDirection::Forward, k));
        }
        if let Some(k) = match_short(t, v, window) {
            let m = MoveInstance::new(t, v, p, MoveDirection::Inverse, k);
            if t != MoveType::RII || try_apply(d, &m).is_some() {
                out.push(m);
            }
        }
    }
    if let [a, b, ..] = *window {
        if commute(a, b).is_some() {
            out.push(MoveInstance::far_commute(p));
        }
        if [a, b] == [r(a.level), l(a.level)] {
            out.push(MoveInstance::new(MoveType::CuspPass, 0, p, MoveDirection::Forward, a.level));
        }
        if cusp_pass_pair(0, b.level) == Some([a, b]) {
            out.push(MoveInstance::new(MoveType::CuspPass, 0, p, MoveDirection::Inverse, b.level));
        }
    }
    out
}

pub fn apply_move(d: &FrontDiagram, m: &MoveInstance) -> Result<FrontDiagram, MoveError> {
    crate::front::checked_trace(d)?;
    try_apply(d, m).ok_or(MoveError::NotApplicable(*m))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StabilizationSign {
    Positive,
    Negative,
}

impl StabilizationSign {
    pub fn delta_r(self) -> i64 {
        match self {
            StabilizationSign::Positive => 1,
            StabilizationSign::Negative => -1,
        }
    }
}

/// Selects the arc carried by `level` just after event `after_event`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ArcSelector {
    pub after_event: usize,
    pub level: usize,
}

impl std::str::FromStr for ArcSelector {
    type Err = String;

    /// Parses `EVENT:LEVEL`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (a, b) = s.split_once(':').ok_or_else(|| format!("expected EVENT:LEVEL, got {s:?}"))?;
        Ok(ArcSelector {
            after_event: a.trim().parse().map_err(|e| format!("bad event index: {e}"))?,
            level: b.trim().parse().map_err(|e| format!("bad level: {e}"))?,
        })
    }
}

/// Inserts a zigzag on the selected arc. A zigzag descending along a
/// rightward arc adds two down cusps; the sign picks the zigzag shape from
/// the arc's seeded direction.
pub fn stabilize(d: &FrontDiagram, arc: ArcSelector, sign: StabilizationSign) -> Result<FrontDiagram, MoveError> {
    let od = orient(d, false)?;
    let slice = arc.after_event + 1;
    let invalid = MoveError::InvalidArc { after_event: arc.after_event, level: arc.level };
    let dir = od.direction_at(slice, arc.level).ok_or(invalid)?;
    let k = arc.level;
    let descending = matches!(
        (sign, dir),
        (StabilizationSign::Positive, Direction::Rightward) | (StabilizationSign::Negative, Direction::Leftward)
    );
    let zigzag = if descending { [l(k + 1), r(k)] } else { [l(k), r(k + 1)] };
    Ok(splice(d, slice, 0, &zigzag))
}

/// Orients `after` (the result of applying `m`) so that it agrees with
/// `before` on the slices left of the rewritten window.
pub fn transported_orientation(
    before: &OrientedDiagram,
    after: &FrontDiagram,
    m: &MoveInstance,
) -> Result<OrientedDiagram, FrontError> {
    let od = orient(after, false)?;
    let (slice_before, slice_after) = if before.trace.slices.get(m.position).is_some_and(|s| !s.is_empty()) {
        (m.position, m.position)
    } else {
        // Window starts at the left end; the last slices agree instead.
        (before.diagram.len() - 1, after.len() - 1)
    };
    let same = before.direction_at(slice_before, 0) == od.direction_at(slice_after, 0);
    Ok(if same { od } else { od.reversed() })
}

/// The first arc of the diagram: the upper branch of its first left cusp.
pub fn first_arc(d: &FrontDiagram) -> Option<ArcSelector> {
    let p = d.events.iter().position(|e| e.kind == EventKind::LeftCusp)?;
    Some(ArcSelector { after_event: p, level: d.events[p].level })
}
