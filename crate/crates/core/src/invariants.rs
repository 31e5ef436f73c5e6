//! Classical Legendrian invariants of a front and a smooth-type oracle.
//!
//! Crossing data: of the two strands meeting at a crossing, the one with the
//! smaller slope (the strand descending from level `i` to `i+1`) is drawn
//! over. With this choice a crossing is positive exactly when both strands
//! are traversed in the same horizontal direction, and the standard
//! right-handed trefoil front `l0 l2 x1 x1 x1 r0 r0` has `tb = 1`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::front::{orient, Direction, EventArcs, FrontDiagram, FrontError, OrientedDiagram};
use crate::poly::LaurentPoly;

/// Largest crossing count accepted by the bracket evaluation.
pub const JONES_CROSSING_CAP: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InvariantRecord {
    pub tb: i64,
    pub r: i64,
    pub writhe: i64,
    #[serde(rename = "D")]
    pub down_cusps: u64,
    #[serde(rename = "U")]
    pub up_cusps: u64,
    pub maslov: i64,
}

impl InvariantRecord {
    pub fn of(od: &OrientedDiagram) -> Self {
        let (down, up) = cusp_counts(od);
        let w = writhe(od);
        let r = rotation_number(od);
        InvariantRecord {
            tb: w - (down + up) as i64 / 2,
            r,
            writhe: w,
            down_cusps: down,
            up_cusps: up,
            maslov: 2 * r,
        }
    }

    /// Invariants of `d` with the seeded orientation (or its reverse).
    pub fn compute(d: &FrontDiagram, reverse: bool) -> Result<Self, FrontError> {
        Ok(Self::of(&orient(d, reverse)?))
    }
}

/// `(D, U)`: a cusp is down when the traversal passes from its upper branch
/// to its lower branch.
pub fn cusp_counts(od: &OrientedDiagram) -> (u64, u64) {
    let (mut down, mut up) = (0, 0);
    for &arc in &od.traversal {
        let a = &od.trace.arcs[arc];
        // The traversal leaves this arc through the cusp it is heading to.
        let arriving_on_upper = match od.arc_directions[arc] {
            Direction::Rightward => a.upper_at_right,
            Direction::Leftward => a.upper_at_left,
        };
        if arriving_on_upper {
            down += 1;
        } else {
            up += 1;
        }
    }
    (down, up)
}

/// Sign of the crossing at event `pos`, which must be a crossing.
pub fn crossing_sign(od: &OrientedDiagram, pos: usize) -> i64 {
    match od.trace.event_arcs[pos] {
        EventArcs::Crossing { descending, ascending } => {
            // over = descending (s, -s), under = ascending (s', s');
            // det(over, under) = 2 s s'.
            od.arc_directions[descending].sign() * od.arc_directions[ascending].sign()
        }
        EventArcs::Cusp { .. } => panic!("event {pos} is not a crossing"),
    }
}

pub fn writhe(od: &OrientedDiagram) -> i64 {
    od.trace
        .event_arcs
        .iter()
        .enumerate()
        .filter(|(_, ea)| matches!(ea, EventArcs::Crossing { .. }))
        .map(|(pos, _)| crossing_sign(od, pos))
        .sum()
}

pub fn thurston_bennequin(d: &FrontDiagram) -> Result<i64, FrontError> {
    let od = orient(d, false)?;
    Ok(writhe(&od) - d.cusp_count() as i64 / 2)
}

pub fn rotation_number(od: &OrientedDiagram) -> i64 {
    let (down, up) = cusp_counts(od);
    (down as i64 - up as i64) / 2
}

pub fn maslov_number(od: &OrientedDiagram) -> i64 {
    2 * rotation_number(od)
}

/// One crossing of a planar diagram code. Labels are edge numbers `1..=2n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PdCrossing {
    pub over_in: usize,
    pub under_in: usize,
    pub over_out: usize,
    pub under_out: usize,
    pub sign: i8,
}

impl PdCrossing {
    /// Edges counterclockwise starting from the incoming under-edge.
    pub fn ccw(&self) -> [usize; 4] {
        if self.sign > 0 {
            [self.under_in, self.over_out, self.under_out, self.over_in]
        } else {
            [self.under_in, self.over_in, self.under_out, self.over_out]
        }
    }
}

/// Planar diagram code of the smooth knot underlying a front.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct PdCode {
    pub crossings: Vec<PdCrossing>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PdError {
    #[error("edge labels do not form a single closed cycle")]
    NotACycle,
    #[error("{0} crossings exceed the bracket cap of {JONES_CROSSING_CAP}")]
    TooLarge(usize),
}

impl PdCode {
    pub fn edge_count(&self) -> usize {
        2 * self.crossings.len()
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign as i64).sum()
    }

    /// Checks that following `in -> out` through every crossing visits all
    /// edges once in a single cycle.
    pub fn check(&self) -> Result<(), PdError> {
        let m = self.edge_count();
        if m == 0 {
            return Ok(());
        }
        let mut next = vec![usize::MAX; m + 1];
        for c in &self.crossings {
            for (i, o) in [(c.over_in, c.over_out), (c.under_in, c.under_out)] {
                if i == 0 || i > m || o == 0 || o > m || next[i] != usize::MAX {
                    return Err(PdError::NotACycle);
                }
                next[i] = o;
            }
        }
        let mut e = 1;
        for _ in 0..m {
            e = next[e];
            if e == usize::MAX {
                return Err(PdError::NotACycle);
            }
        }
        let mut seen = vec![false; m + 1];
        let mut e = 1;
        for _ in 0..m {
            if seen[e] {
                return Err(PdError::NotACycle);
            }
            seen[e] = true;
            e = next[e];
        }
        if e == 1 {
            Ok(())
        } else {
            Err(PdError::NotACycle)
        }
    }
}

/// Smooths cusps into turns and resolves each crossing by slope.
/// Crossings are listed in left-to-right order of the front.
pub fn smooth_projection(d: &FrontDiagram) -> Result<PdCode, FrontError> {
    Ok(pd_of(&orient(d, false)?))
}

pub fn pd_of(od: &OrientedDiagram) -> PdCode {
    let positions: Vec<usize> = od
        .trace
        .event_arcs
        .iter()
        .enumerate()
        .filter(|(_, ea)| matches!(ea, EventArcs::Crossing { .. }))
        .map(|(p, _)| p)
        .collect();
    let n = positions.len();
    let mut index_of = HashMap::with_capacity(n);
    for (i, &p) in positions.iter().enumerate() {
        index_of.insert(p, i);
    }
    let mut crossings: Vec<PdCrossing> = positions
        .iter()
        .map(|&p| PdCrossing {
            over_in: 0,
            under_in: 0,
            over_out: 0,
            under_out: 0,
            sign: crossing_sign(od, p) as i8,
        })
        .collect();
    let wrap = |e: usize| if e > 2 * n { 1 } else { e };
    let mut edge = 1;
    for &arc in &od.traversal {
        let a = &od.trace.arcs[arc];
        let passes: Box<dyn Iterator<Item = &usize>> = match od.arc_directions[arc] {
            Direction::Rightward => Box::new(a.crossings.iter()),
            Direction::Leftward => Box::new(a.crossings.iter().rev()),
        };
        for &p in passes {
            let c = &mut crossings[index_of[&p]];
            let over = matches!(od.trace.event_arcs[p], EventArcs::Crossing { descending, .. } if descending == arc);
            if over {
                c.over_in = edge;
                c.over_out = wrap(edge + 1);
            } else {
                c.under_in = edge;
                c.under_out = wrap(edge + 1);
            }
            edge += 1;
        }
    }
    PdCode { crossings }
}

/// Kauffman bracket `<D>` in the variable `A`, normalised so the round
/// circle is 1. Crossings are absorbed one at a time while tracking how the
/// open strands are paired up.
pub fn kauffman_bracket(pd: &PdCode) -> Result<LaurentPoly, PdError> {
    if pd.crossings.len() > JONES_CROSSING_CAP {
        return Err(PdError::TooLarge(pd.crossings.len()));
    }
    pd.check()?;
    if pd.crossings.is_empty() {
        return Ok(LaurentPoly::one());
    }
    let loop_value = LaurentPoly::from_terms([(2, -1), (-2, -1)]);
    let mut states: HashMap<Frontier, LaurentPoly> = HashMap::new();
    states.insert(Frontier::default(), LaurentPoly::one());
    for c in &pd.crossings {
        let [a, b, cc, d] = c.ccw();
        let mut next: HashMap<Frontier, LaurentPoly> = HashMap::with_capacity(states.len() * 2);
        for (state, poly) in &states {
            for (weight, arcs) in [(1, [(a, b), (cc, d)]), (-1, [(a, d), (b, cc)])] {
                let mut s = state.clone();
                let mut loops = 0;
                for (x, y) in arcs {
                    loops += s.join(x, y);
                }
                let mut term = poly.scale(1, weight);
                for _ in 0..loops {
                    term = &term * &loop_value;
                }
                next.entry(s).or_default().add_assign_ref(&term);
            }
        }
        next.retain(|_, p| !p.is_zero());
        states = next;
    }
    let mut total = LaurentPoly::zero();
    for (s, p) in &states {
        debug_assert!(s.paths.is_empty());
        total.add_assign_ref(p);
    }
    Ok(total)
}

/// Open strands of a partially smoothed diagram, as endpoint pairs.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
struct Frontier {
    paths: Vec<(usize, usize)>,
    /// Whether some loop has already closed; the first loop is free.
    closed_once: bool,
}

impl Frontier {
    fn find(&self, e: usize) -> Option<usize> {
        self.paths.iter().position(|&(u, v)| u == e || v == e)
    }

    fn other(&self, idx: usize, e: usize) -> usize {
        let (u, v) = self.paths[idx];
        if u == e {
            v
        } else {
            u
        }
    }

    fn insert(&mut self, u: usize, v: usize) {
        let p = if u <= v { (u, v) } else { (v, u) };
        let at = self.paths.binary_search(&p).unwrap_or_else(|i| i);
        self.paths.insert(at, p);
    }

    /// Adds a smoothing arc joining edges `x` and `y`; returns the number of
    /// loops closed that carry a factor of `-A^2 - A^-2`.
    fn join(&mut self, x: usize, y: usize) -> u32 {
        let closed = if x == y {
            true
        } else {
            match (self.find(x), self.find(y)) {
                (Some(i), Some(j)) if i == j => {
                    self.paths.remove(i);
                    true
                }
                (Some(i), Some(j)) => {
                    let (u, v) = (self.other(i, x), self.other(j, y));
                    let (hi, lo) = if i > j { (i, j) } else { (j, i) };
                    self.paths.remove(hi);
                    self.paths.remove(lo);
                    self.insert(u, v);
                    false
                }
                (Some(i), None) => {
                    let u = self.other(i, x);
                    self.paths.remove(i);
                    self.insert(u, y);
                    false
                }
                (None, Some(j)) => {
                    let v = self.other(j, y);
                    self.paths.remove(j);
                    self.insert(x, v);
                    false
                }
                (None, None) => {
                    self.insert(x, y);
                    false
                }
            }
        };
        if !closed {
            return 0;
        }
        if self.closed_once {
            1
        } else {
            self.closed_once = true;
            0
        }
    }
}

/// Jones polynomial in `t`: `(-A^3)^(-w) <D>` with `A = t^(-1/4)`.
pub fn jones_polynomial(pd: &PdCode) -> Result<LaurentPoly, PdError> {
    let bracket = kauffman_bracket(pd)?;
    Ok(jones_from_bracket(&bracket, pd.writhe()))
}

pub fn jones_from_bracket(bracket: &LaurentPoly, writhe: i64) -> LaurentPoly {
    let sign = if writhe % 2 == 0 { 1 } else { -1 };
    let normalised = bracket.scale(sign, (-3 * writhe) as i32);
    normalised
        .rescale_exponents(4, true)
        .expect("knot brackets carry exponents divisible by four")
}

/// Convenience: Jones polynomial of the smoothing of a front.
pub fn front_jones(d: &FrontDiagram) -> Result<LaurentPoly, InvariantError> {
    let pd = smooth_projection(d)?;
    Ok(jones_polynomial(&pd)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error(transparent)]
    Front(#[from] FrontError),
    #[error(transparent)]
    Pd(#[from] PdError),
}
