//! Event-word encoding of Legendrian fronts.
//!
//! A front is read left to right as a word of elementary events acting on a
//! vertical stack of strands. Level 0 is the topmost strand (largest `z`).
//!
//! * `l<i>` opens a left cusp whose two branches occupy levels `i`, `i+1`;
//!   every strand previously at level `>= i` moves down by two.
//! * `r<i>` closes the strands at levels `i`, `i+1` with a right cusp.
//! * `x<i>` crosses the strands at levels `i`, `i+1`.
//!
//! The strand carried by level `i` into a crossing leaves at level `i+1`
//! (it descends), and the strand from `i+1` ascends to `i`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EventKind {
    LeftCusp,
    RightCusp,
    Crossing,
}

impl EventKind {
    fn prefix(self) -> char {
        match self {
            EventKind::LeftCusp => 'l',
            EventKind::RightCusp => 'r',
            EventKind::Crossing => 'x',
        }
    }

    pub fn is_cusp(self) -> bool {
        !matches!(self, EventKind::Crossing)
    }

    /// Change in strand count caused by an event of this kind.
    pub fn delta(self) -> isize {
        match self {
            EventKind::LeftCusp => 2,
            EventKind::RightCusp => -2,
            EventKind::Crossing => 0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FrontEvent {
    pub kind: EventKind,
    pub level: usize,
}

impl FrontEvent {
    pub const fn left(level: usize) -> Self {
        FrontEvent { kind: EventKind::LeftCusp, level }
    }

    pub const fn right(level: usize) -> Self {
        FrontEvent { kind: EventKind::RightCusp, level }
    }

    pub const fn cross(level: usize) -> Self {
        FrontEvent { kind: EventKind::Crossing, level }
    }

    /// Shifts the level by `by`, which must not underflow.
    pub(crate) fn shifted(self, by: isize) -> Self {
        FrontEvent { kind: self.kind, level: (self.level as isize + by) as usize }
    }
}

/// Events are ordered by `(level, kind)`; this is the order the normal form
/// minimises.
impl Ord for FrontEvent {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.level, self.kind).cmp(&(other.level, other.kind))
    }
}

impl PartialOrd for FrontEvent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FrontEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind.prefix(), self.level)
    }
}

/// A front as a left-to-right event word; serializes as its text form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct FrontDiagram {
    pub events: Vec<FrontEvent>,
}

impl FrontDiagram {
    pub fn new(events: Vec<FrontEvent>) -> Self {
        FrontDiagram { events }
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    pub fn crossing_count(&self) -> usize {
        self.events.iter().filter(|e| e.kind == EventKind::Crossing).count()
    }

    pub fn cusp_count(&self) -> usize {
        self.events.len() - self.crossing_count()
    }

    /// Strand count in every slice: entry `s` is the count after `s` events.
    /// Returns `None` if some prefix is not well formed.
    pub fn strand_counts(&self) -> Option<Vec<usize>> {
        let mut counts = Vec::with_capacity(self.events.len() + 1);
        let mut n = 0usize;
        counts.push(0);
        for e in &self.events {
            if !event_fits(*e, n) {
                return None;
            }
            n = (n as isize + e.kind.delta()) as usize;
            counts.push(n);
        }
        Some(counts)
    }
}

impl fmt::Display for FrontDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.events.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl FromStr for FrontDiagram {
    type Err = FrontError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_front(s)
    }
}

impl From<FrontDiagram> for String {
    fn from(d: FrontDiagram) -> String {
        d.to_string()
    }
}

impl TryFrom<String> for FrontDiagram {
    type Error = FrontError;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        parse_front(&s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ValidationFailure {
    NegativeStrandCount,
    NonzeroEndCount,
    /// 0-based index of the offending event.
    InvalidLevel(usize),
    MultiComponent(usize),
}

impl fmt::Display for ValidationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValidationFailure::NegativeStrandCount => write!(f, "strand count goes negative"),
            ValidationFailure::NonzeroEndCount => write!(f, "strands remain open at the right end"),
            ValidationFailure::InvalidLevel(p) => write!(f, "event {p} acts on a level that does not exist"),
            ValidationFailure::MultiComponent(n) => write!(f, "diagram has {n} components, expected a knot"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub ok: bool,
    pub failure: Option<ValidationFailure>,
}

impl ValidationReport {
    fn from_result(r: Result<(), ValidationFailure>) -> Self {
        match r {
            Ok(()) => ValidationReport { ok: true, failure: None },
            Err(f) => ValidationReport { ok: false, failure: Some(f) },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrontError {
    /// `token` is the 1-based number of the offending token.
    #[error("syntax error at token {token}: {text:?}")]
    Syntax { token: usize, text: String },
    #[error("invalid diagram: {0}")]
    InvalidDiagram(ValidationFailure),
}

fn event_fits(e: FrontEvent, n: usize) -> bool {
    match e.kind {
        EventKind::LeftCusp => e.level <= n,
        EventKind::RightCusp | EventKind::Crossing => e.level + 1 < n,
    }
}

/// Parses a front word. Whitespace separates tokens and `#` starts a comment.
pub fn parse_front(text: &str) -> Result<FrontDiagram, FrontError> {
    let mut events = Vec::new();
    let mut token_no = 0;
    for line in text.lines() {
        let code = match line.find('#') {
            Some(i) => &line[..i],
            None => line,
        };
        for tok in code.split_whitespace() {
            token_no += 1;
            events.push(parse_token(tok).ok_or_else(|| FrontError::Syntax {
                token: token_no,
                text: tok.to_string(),
            })?);
        }
    }
    Ok(FrontDiagram { events })
}

fn parse_token(tok: &str) -> Option<FrontEvent> {
    let mut chars = tok.chars();
    let kind = match chars.next()? {
        'l' => EventKind::LeftCusp,
        'r' => EventKind::RightCusp,
        'x' => EventKind::Crossing,
        _ => return None,
    };
    let digits = chars.as_str();
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    Some(FrontEvent { kind, level: digits.parse().ok()? })
}

/// Horizontal traversal direction of an arc.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    Rightward,
    Leftward,
}

impl Direction {
    pub fn reversed(self) -> Self {
        match self {
            Direction::Rightward => Direction::Leftward,
            Direction::Leftward => Direction::Rightward,
        }
    }

    pub fn sign(self) -> i64 {
        match self {
            Direction::Rightward => 1,
            Direction::Leftward => -1,
        }
    }
}

/// A cusp-to-cusp strand of the front. It may pass through crossings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arc {
    pub left_cusp: usize,
    pub right_cusp: usize,
    /// Whether the arc is the upper branch at its left cusp.
    pub upper_at_left: bool,
    pub upper_at_right: bool,
    /// Event indices of the crossings along the arc, left to right.
    pub crossings: Vec<usize>,
}

/// Which arcs an event touches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EventArcs {
    /// Upper and lower branch of a cusp.
    Cusp { upper: usize, lower: usize },
    /// The strand entering from the upper level descends, the other ascends.
    Crossing { descending: usize, ascending: usize },
}

/// Arc structure of a well-formed front.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trace {
    pub arcs: Vec<Arc>,
    pub event_arcs: Vec<EventArcs>,
    /// `slices[s]` lists arc ids top to bottom after `s` events.
    pub slices: Vec<Vec<usize>>,
}

impl Trace {
    /// Builds the arc structure, checking levels and the end count.
    pub fn build(d: &FrontDiagram) -> Result<Trace, ValidationFailure> {
        let mut arcs: Vec<Arc> = Vec::new();
        let mut event_arcs = Vec::with_capacity(d.events.len());
        let mut slices = Vec::with_capacity(d.events.len() + 1);
        let mut cur: Vec<usize> = Vec::new();
        slices.push(cur.clone());
        for (pos, e) in d.events.iter().enumerate() {
            let n = cur.len();
            if !event_fits(*e, n) {
                if e.kind == EventKind::RightCusp && n < 2 {
                    return Err(ValidationFailure::NegativeStrandCount);
                }
                return Err(ValidationFailure::InvalidLevel(pos));
            }
            let i = e.level;
            match e.kind {
                EventKind::LeftCusp => {
                    let upper = arcs.len();
                    for up in [true, false] {
                        arcs.push(Arc {
                            left_cusp: pos,
                            right_cusp: usize::MAX,
                            upper_at_left: up,
                            upper_at_right: false,
                            crossings: Vec::new(),
                        });
                    }
                    cur.splice(i..i, [upper, upper + 1]);
                    event_arcs.push(EventArcs::Cusp { upper, lower: upper + 1 });
                }
                EventKind::RightCusp => {
                    let (upper, lower) = (cur[i], cur[i + 1]);
                    arcs[upper].right_cusp = pos;
                    arcs[upper].upper_at_right = true;
                    arcs[lower].right_cusp = pos;
                    arcs[lower].upper_at_right = false;
                    cur.drain(i..i + 2);
                    event_arcs.push(EventArcs::Cusp { upper, lower });
                }
                EventKind::Crossing => {
                    let (descending, ascending) = (cur[i], cur[i + 1]);
                    arcs[descending].crossings.push(pos);
                    arcs[ascending].crossings.push(pos);
                    cur.swap(i, i + 1);
                    event_arcs.push(EventArcs::Crossing { descending, ascending });
                }
            }
            slices.push(cur.clone());
        }
        if !cur.is_empty() {
            return Err(ValidationFailure::NonzeroEndCount);
        }
        Ok(Trace { arcs, event_arcs, slices })
    }

    fn cusp_partner(&self, arc: usize, at_right: bool) -> usize {
        let a = &self.arcs[arc];
        let cusp = if at_right { a.right_cusp } else { a.left_cusp };
        match self.event_arcs[cusp] {
            EventArcs::Cusp { upper, lower } => {
                if upper == arc {
                    lower
                } else {
                    upper
                }
            }
            EventArcs::Crossing { .. } => unreachable!("arc ends at a cusp"),
        }
    }

    /// Number of closed components traced through cusps and crossings.
    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.arcs.len()];
        let mut count = 0;
        for start in 0..self.arcs.len() {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut arc = start;
            let mut rightward = true;
            loop {
                seen[arc] = true;
                arc = self.cusp_partner(arc, rightward);
                rightward = !rightward;
                if arc == start {
                    break;
                }
            }
        }
        count
    }
}

/// Checks that the word describes a closed single-component front.
pub fn validate(d: &FrontDiagram) -> ValidationReport {
    ValidationReport::from_result(check(d).map(|_| ()))
}

fn check(d: &FrontDiagram) -> Result<Trace, ValidationFailure> {
    let trace = Trace::build(d)?;
    match trace.component_count() {
        1 => Ok(trace),
        0 => Err(ValidationFailure::MultiComponent(0)),
        n => Err(ValidationFailure::MultiComponent(n)),
    }
}

pub(crate) fn checked_trace(d: &FrontDiagram) -> Result<Trace, FrontError> {
    check(d).map_err(FrontError::InvalidDiagram)
}

/// A front together with a coherent orientation of all its arcs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedDiagram {
    pub diagram: FrontDiagram,
    pub arc_directions: Vec<Direction>,
    /// Event index of the left cusp the traversal starts from.
    pub basepoint: usize,
    pub trace: Trace,
    /// Arc ids in traversal order, starting with the seeded arc.
    pub traversal: Vec<usize>,
}

impl OrientedDiagram {
    /// Direction of the arc at `level` in slice `slice` (after `slice` events).
    pub fn direction_at(&self, slice: usize, level: usize) -> Option<Direction> {
        let arc = *self.trace.slices.get(slice)?.get(level)?;
        Some(self.arc_directions[arc])
    }

    pub fn reversed(&self) -> OrientedDiagram {
        let mut traversal = self.traversal.clone();
        traversal[1..].reverse();
        OrientedDiagram {
            diagram: self.diagram.clone(),
            arc_directions: self.arc_directions.iter().map(|d| d.reversed()).collect(),
            basepoint: self.basepoint,
            trace: self.trace.clone(),
            traversal,
        }
    }
}

/// Orients the front. The traversal starts on the upper branch of the first
/// left cusp, heading right; `reverse` flips every direction.
pub fn orient(d: &FrontDiagram, reverse: bool) -> Result<OrientedDiagram, FrontError> {
    let trace = checked_trace(d)?;
    let basepoint = d
        .events
        .iter()
        .position(|e| e.kind == EventKind::LeftCusp)
        .ok_or(FrontError::InvalidDiagram(ValidationFailure::MultiComponent(0)))?;
    let start = match trace.event_arcs[basepoint] {
        EventArcs::Cusp { upper, .. } => upper,
        EventArcs::Crossing { .. } => unreachable!(),
    };
    let mut dirs = vec![Direction::Rightward; trace.arcs.len()];
    let mut traversal = Vec::with_capacity(trace.arcs.len());
    let mut arc = start;
    let mut dir = Direction::Rightward;
    loop {
        dirs[arc] = dir;
        traversal.push(arc);
        arc = trace.cusp_partner(arc, dir == Direction::Rightward);
        dir = dir.reversed();
        if arc == start {
            break;
        }
    }
    let od = OrientedDiagram {
        diagram: d.clone(),
        arc_directions: dirs,
        basepoint,
        trace,
        traversal,
    };
    Ok(if reverse { od.reversed() } else { od })
}

/// Vertical footprint of an event in the slice between two adjacent events.
/// Returns `(start, width)`; a zero width marks a gap between strands.
fn footprint_after(e: FrontEvent) -> (usize, usize) {
    match e.kind {
        EventKind::LeftCusp | EventKind::Crossing => (e.level, 2),
        EventKind::RightCusp => (e.level, 0),
    }
}

fn footprint_before(e: FrontEvent) -> (usize, usize) {
    match e.kind {
        EventKind::RightCusp | EventKind::Crossing => (e.level, 2),
        EventKind::LeftCusp => (e.level, 0),
    }
}

/// Far commutation of two adjacent events `a` then `b`.
///
/// The pair commutes when their footprints in the middle slice are disjoint.
/// A right cusp followed by a left cusp at the same gap swaps with the left
/// cusp placed above; the placement below is a separate move. Returns the
/// reindexed pair in swapped order.
pub fn commute(a: FrontEvent, b: FrontEvent) -> Option<(FrontEvent, FrontEvent)> {
    if a.kind == EventKind::LeftCusp && b.kind == EventKind::RightCusp && a.level == b.level + 2 {
        return None;
    }
    let (sa, wa) = footprint_after(a);
    let (sb, wb) = footprint_before(b);
    if sb + wb <= sa {
        Some((b, a.shifted(b.kind.delta())))
    } else if sb >= sa + wa {
        Some((b.shifted(-a.kind.delta()), a))
    } else {
        None
    }
}

/// Swaps the events at `pos` and `pos + 1` if they commute.
pub fn commute_at(d: &FrontDiagram, pos: usize) -> Option<FrontDiagram> {
    if pos + 1 >= d.events.len() {
        return None;
    }
    let (b, a) = commute(d.events[pos], d.events[pos + 1])?;
    let mut events = d.events.clone();
    events[pos] = b;
    events[pos + 1] = a;
    Some(FrontDiagram { events })
}

/// Canonical representative under far commutation.
pub fn normal_form(d: &FrontDiagram) -> Result<FrontDiagram, FrontError> {
    checked_trace(d)?;
    Ok(normal_form_traced(d).0)
}

/// Lexicographically least word reachable by far commutations, together with
/// the positions of the adjacent swaps that produce it from `d`.
///
/// Works on any well-formed word; validity is not checked.
pub fn normal_form_traced(d: &FrontDiagram) -> (FrontDiagram, Vec<usize>) {
    let mut words = d.events.clone();
    let mut swaps = Vec::new();
    settle(&mut words, 0, &mut swaps);
    (FrontDiagram { events: words }, swaps)
}

fn settle(word: &mut [FrontEvent], from: usize, swaps: &mut Vec<usize>) {
    let n = word.len();
    let mut k = from;
    while k < n {
        let mut best: Option<FrontEvent> = None;
        let mut picks: Vec<usize> = Vec::new();
        for j in k..n {
            if let Some(label) = front_label(word, k, j) {
                match best.map(|b| label.cmp(&b)) {
                    None | Some(Ordering::Less) => {
                        best = Some(label);
                        picks.clear();
                        picks.push(j);
                    }
                    Some(Ordering::Equal) => picks.push(j),
                    Some(Ordering::Greater) => {}
                }
            }
        }
        if picks.len() > 1 {
            // Ties only arise between stacked left cusps; resolve by lookahead.
            let mut winner: Option<(Vec<FrontEvent>, Vec<usize>)> = None;
            for &j in &picks {
                let mut w = word.to_vec();
                let mut s = Vec::new();
                bubble(&mut w, k, j, &mut s);
                settle(&mut w, k + 1, &mut s);
                if winner.as_ref().map_or(true, |(bw, _)| w[k..] < bw[k..]) {
                    winner = Some((w, s));
                }
            }
            let (w, s) = winner.expect("at least one candidate");
            word.copy_from_slice(&w);
            swaps.extend(s);
            return;
        }
        bubble(word, k, picks[0], swaps);
        k += 1;
    }
}

/// Label of event `j` if it can be moved to position `k` by commutations.
fn front_label(word: &[FrontEvent], k: usize, j: usize) -> Option<FrontEvent> {
    let mut cur = word[j];
    for p in (k..j).rev() {
        cur = commute(word[p], cur)?.0;
    }
    Some(cur)
}

fn bubble(word: &mut [FrontEvent], k: usize, j: usize, swaps: &mut Vec<usize>) {
    for p in (k..j).rev() {
        let (b, a) = commute(word[p], word[p + 1]).expect("checked by front_label");
        word[p] = b;
        word[p + 1] = a;
        swaps.push(p);
    }
}

/// Maximum number of attempts the generator makes before giving up.
pub const RANDOM_RETRY_CAP: usize = 10_000;

/// Deterministic random single-component front with `2..=target_size` events.
///
/// Falls back to the unknot `l0 r0` if no knot is found within
/// [`RANDOM_RETRY_CAP`] attempts.
pub fn random_diagram(seed: u64, target_size: usize) -> FrontDiagram {
    let target = target_size.max(2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_RETRY_CAP {
        let len = rng.gen_range(2..=target);
        if let Some(d) = random_word(&mut rng, len) {
            if check(&d).is_ok() {
                return d;
            }
        }
    }
    FrontDiagram::new(vec![FrontEvent::left(0), FrontEvent::right(0)])
}

fn random_word(rng: &mut ChaCha8Rng, len: usize) -> Option<FrontDiagram> {
    let mut events = Vec::with_capacity(len);
    let mut n = 0usize;
    for pos in 0..len {
        let remaining = len - pos;
        // After this event `remaining - 1` events must close every strand.
        let can_open = (n + 2) / 2 < remaining;
        let can_cross = n >= 2 && n / 2 < remaining;
        let can_close = n >= 2 && (n - 2) / 2 <= remaining - 1;
        let mut options: Vec<(EventKind, u32)> = Vec::with_capacity(3);
        if can_open {
            options.push((EventKind::LeftCusp, 2));
        }
        if can_cross {
            options.push((EventKind::Crossing, 4));
        }
        if can_close {
            options.push((EventKind::RightCusp, 2));
        }
        let total: u32 = options.iter().map(|o| o.1).sum();
        if total == 0 {
            return None;
        }
        let mut roll = rng.gen_range(0..total);
        let kind = options
            .iter()
            .find(|(_, w)| {
                if roll < *w {
                    true
                } else {
                    roll -= *w;
                    false
                }
            })
            .map(|o| o.0)?;
        let e = match kind {
            EventKind::LeftCusp => FrontEvent::left(rng.gen_range(0..=n)),
            EventKind::RightCusp => FrontEvent::right(rng.gen_range(0..n - 1)),
            EventKind::Crossing => FrontEvent::cross(rng.gen_range(0..n - 1)),
        };
        n = (n as isize + kind.delta()) as usize;
        events.push(e);
    }
    (n == 0).then(|| FrontDiagram::new(events))
}
