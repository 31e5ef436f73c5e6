//! Bounded Legendrian isotopy search.
//!
//! States are raw event words deduplicated by their far-commutation normal
//! form. Both ends are searched breadth first until the frontiers meet. A
//! step is a single table move, possibly preceded by far commutations that
//! gather a pattern whose events are not yet adjacent. Every step is
//! recorded, so a certificate replays exactly from `start` to `end`.

use std::collections::{BTreeMap, HashMap};
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::front::{checked_trace, commute, normal_form_traced, FrontDiagram, FrontError, FrontEvent};
use crate::invariants::InvariantRecord;
use crate::moves::{enumerate_moves, pattern_moves_at, try_apply, MoveDirection, MoveError, MoveInstance, MoveType};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    /// Maximum number of Reidemeister moves; far commutations are free.
    pub max_depth: usize,
    /// Words longer than this are not explored.
    pub max_len: usize,
}

impl SearchBudget {
    pub const DEFAULT_DEPTH: usize = 6;
    pub const DEFAULT_SLACK: usize = 6;

    pub fn for_inputs(d0: &FrontDiagram, d1: &FrontDiagram, depth: usize) -> Self {
        SearchBudget { max_depth: depth, max_len: d0.len().max(d1.len()) + Self::DEFAULT_SLACK }
    }

    pub fn default_for(d0: &FrontDiagram, d1: &FrontDiagram) -> Self {
        Self::for_inputs(d0, d1, Self::DEFAULT_DEPTH)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsotopyCertificate {
    pub start: FrontDiagram,
    pub end: FrontDiagram,
    pub moves: Vec<MoveInstance>,
}

impl IsotopyCertificate {
    /// Applies the moves to `start` in order.
    pub fn replay(&self) -> Result<FrontDiagram, MoveError> {
        replay(&self.start, &self.moves)
    }

    /// Whether the replay ends at `end` up to far commutation.
    pub fn verify(&self) -> bool {
        match self.replay() {
            Ok(d) => normal_form_traced(&d).0 == normal_form_traced(&self.end).0,
            Err(_) => false,
        }
    }

    /// Number of moves that are not planar.
    pub fn reidemeister_count(&self) -> usize {
        self.moves.iter().filter(|m| !m.is_planar()).count()
    }
}

/// Replays `moves` from `start`, failing at the first move that does not match.
pub fn replay(start: &FrontDiagram, moves: &[MoveInstance]) -> Result<FrontDiagram, MoveError> {
    let mut d = start.clone();
    for m in moves {
        d = try_apply(&d, m).ok_or(MoveError::NotApplicable(*m))?;
    }
    Ok(d)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum NotFoundReason {
    ObstructionTb,
    ObstructionR,
    BudgetExhausted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum SearchOutcome {
    Found(IsotopyCertificate),
    NotFound { reason: NotFoundReason, explored: usize },
}

impl SearchOutcome {
    pub fn certificate(&self) -> Option<&IsotopyCertificate> {
        match self {
            SearchOutcome::Found(c) => Some(c),
            SearchOutcome::NotFound { .. } => None,
        }
    }
}

struct Node {
    raw: FrontDiagram,
    parent: Option<FrontDiagram>,
    /// Moves taking the parent's raw word to `raw`.
    steps: Vec<MoveInstance>,
}

struct Side {
    nodes: HashMap<FrontDiagram, Node>,
    frontier: Vec<FrontDiagram>,
}

impl Side {
    fn new(root: &FrontDiagram) -> (Self, FrontDiagram) {
        let key = normal_form_traced(root).0;
        let mut nodes = HashMap::new();
        nodes.insert(key.clone(), Node { raw: root.clone(), parent: None, steps: Vec::new() });
        (Side { nodes, frontier: vec![key.clone()] }, key)
    }

    /// Records `out` as reached from `parent` unless its class is known.
    /// Returns the class key when it is already known to the other side.
    fn visit(&mut self, other: &Side, parent: &FrontDiagram, steps: Vec<MoveInstance>, out: FrontDiagram) -> Option<FrontDiagram> {
        let nk = normal_form_traced(&out).0;
        if self.nodes.contains_key(&nk) {
            return None;
        }
        self.nodes.insert(nk.clone(), Node { raw: out, parent: Some(parent.clone()), steps });
        if other.nodes.contains_key(&nk) {
            return Some(nk);
        }
        self.frontier.push(nk);
        None
    }

    /// Moves from the root's raw word to the raw word stored at `key`.
    fn path_to(&self, key: &FrontDiagram) -> Vec<MoveInstance> {
        let mut chunks = Vec::new();
        let mut cur = key;
        while let Some(node) = self.nodes.get(cur) {
            chunks.push(node.steps.clone());
            match &node.parent {
                Some(p) => cur = p,
                None => break,
            }
        }
        chunks.into_iter().rev().flatten().collect()
    }
}

/// Searches for a sequence of Legendrian Reidemeister moves from `d0` to
/// `d1`. Fronts with different `tb` or `|r|` are rejected without search;
/// `r` is compared up to sign because the words carry no orientation.
pub fn isotopy_search(d0: &FrontDiagram, d1: &FrontDiagram, budget: SearchBudget) -> Result<SearchOutcome, FrontError> {
    checked_trace(d0)?;
    checked_trace(d1)?;
    let a = InvariantRecord::compute(d0, false)?;
    let b = InvariantRecord::compute(d1, false)?;
    if a.tb != b.tb {
        return Ok(SearchOutcome::NotFound { reason: NotFoundReason::ObstructionTb, explored: 0 });
    }
    if a.r.abs() != b.r.abs() {
        return Ok(SearchOutcome::NotFound { reason: NotFoundReason::ObstructionR, explored: 0 });
    }

    let (mut fwd, k0) = Side::new(d0);
    let (mut bwd, k1) = Side::new(d1);
    if k0 == k1 {
        return Ok(SearchOutcome::Found(certificate(d0, d1, &fwd, &bwd, &k0)));
    }
    let mut explored = 0;
    let mut depth = 0;
    while depth < budget.max_depth {
        let forward_turn = fwd.frontier.len() <= bwd.frontier.len();
        let (side, other) = if forward_turn { (&mut fwd, &bwd) } else { (&mut bwd, &fwd) };
        if side.frontier.is_empty() {
            break;
        }
        let mut frontier = std::mem::take(&mut side.frontier);
        frontier.sort();
        let mut meeting = None;
        'expand: for key in &frontier {
            explored += 1;
            let raw = side.nodes[key].raw.clone();
            for (steps, out) in successors(&raw, budget.max_len) {
                if let Some(k) = side.visit(other, key, steps, out) {
                    meeting = Some(k);
                    break 'expand;
                }
            }
        }
        depth += 1;
        if let Some(k) = meeting {
            return Ok(SearchOutcome::Found(certificate(d0, d1, &fwd, &bwd, &k)));
        }
    }
    Ok(SearchOutcome::NotFound { reason: NotFoundReason::BudgetExhausted, explored })
}

fn certificate(d0: &FrontDiagram, d1: &FrontDiagram, fwd: &Side, bwd: &Side, meet: &FrontDiagram) -> IsotopyCertificate {
    let mut moves = fwd.path_to(meet);
    let (_, to_nf) = normal_form_traced(&fwd.nodes[meet].raw);
    moves.extend(to_nf.into_iter().map(MoveInstance::far_commute));
    let (_, from_nf) = normal_form_traced(&bwd.nodes[meet].raw);
    moves.extend(from_nf.into_iter().rev().map(MoveInstance::far_commute));
    moves.extend(bwd.path_to(meet).iter().rev().map(|m| m.inverse()));
    IsotopyCertificate { start: d0.clone(), end: d1.clone(), moves }
}

/// Successors of a raw word. A step is one Reidemeister move, one cusp pass,
/// or a cusp pass followed by a Reidemeister move whose pattern starts next
/// to the passed cusps; far commutations that make a pattern contiguous are
/// included in the step.
fn successors(raw: &FrontDiagram, max_len: usize) -> Vec<(Vec<MoveInstance>, FrontDiagram)> {
    let mut out = reidemeister_successors(raw, max_len, 0..=raw.len());
    for (pass, mid) in cusp_passes(raw) {
        let q = pass.last().expect("a pass is never empty").position;
        for (steps, d) in reidemeister_successors(&mid, max_len, q.saturating_sub(2)..=q + 2) {
            out.push((pass.iter().chain(&steps).copied().collect(), d));
        }
        if mid.len() <= max_len {
            out.push((pass, mid));
        }
    }
    out
}

/// Reidemeister moves whose pattern starts, or loop goes, at a position in
/// `near`.
fn reidemeister_successors(
    raw: &FrontDiagram,
    max_len: usize,
    near: RangeInclusive<usize>,
) -> Vec<(Vec<MoveInstance>, FrontDiagram)> {
    let direct = enumerate_moves(raw)
        .into_iter()
        .filter(|m| !m.is_planar() && near.contains(&m.position))
        .map(|m| (Vec::new(), m));
    apply_all(raw, direct.chain(gathered_moves(raw, near.clone(), 3, is_gather_row)), max_len)
}

fn cusp_passes(raw: &FrontDiagram) -> Vec<(Vec<MoveInstance>, FrontDiagram)> {
    let is_pass = |m: &MoveInstance| m.move_type == MoveType::CuspPass;
    let direct = enumerate_moves(raw).into_iter().filter(is_pass).map(|m| (Vec::new(), m));
    apply_all(raw, direct.chain(gathered_moves(raw, 0..=raw.len(), 2, is_pass)), usize::MAX)
}

fn apply_all(
    raw: &FrontDiagram,
    moves: impl Iterator<Item = (Vec<usize>, MoveInstance)>,
    max_len: usize,
) -> Vec<(Vec<MoveInstance>, FrontDiagram)> {
    let mut out = Vec::new();
    for (swaps, m) in moves {
        let mut steps: Vec<MoveInstance> = swaps.into_iter().map(MoveInstance::far_commute).collect();
        let Ok(mid) = replay(raw, &steps) else { continue };
        if let Some(d) = try_apply(&mid, &m) {
            if d.len() <= max_len {
                steps.push(m);
                out.push((steps, d));
            }
        }
    }
    out
}

/// Rows whose patterns are three events long, in both directions.
const GATHER_ROWS: [(MoveType, u8, MoveDirection); 8] = [
    (MoveType::RI, 0, MoveDirection::Forward),
    (MoveType::RI, 1, MoveDirection::Forward),
    (MoveType::RII, 0, MoveDirection::Forward),
    (MoveType::RII, 1, MoveDirection::Forward),
    (MoveType::RII, 2, MoveDirection::Forward),
    (MoveType::RII, 3, MoveDirection::Forward),
    (MoveType::RIII, 0, MoveDirection::Forward),
    (MoveType::RIII, 0, MoveDirection::Inverse),
];

fn is_gather_row(m: &MoveInstance) -> bool {
    GATHER_ROWS.contains(&(m.move_type, m.variant, m.direction))
}

/// Patterns of `size` events that are not contiguous in `raw` but become so
/// after far commutations, grown from a first event in `starts`. Returns the
/// swap positions and the move to apply after them.
fn gathered_moves(
    raw: &FrontDiagram,
    starts: RangeInclusive<usize>,
    size: usize,
    wanted: impl Fn(&MoveInstance) -> bool,
) -> Vec<(Vec<usize>, MoveInstance)> {
    let mut found: BTreeMap<(FrontDiagram, MoveInstance), Vec<usize>> = BTreeMap::new();
    for start in starts.filter(|&p| p < raw.len()) {
        let mut blocks = Vec::new();
        gather(&raw.events, start, 1, size, Vec::new(), &mut blocks);
        for (word, swaps, at) in blocks {
            let d = FrontDiagram::new(word);
            for m in pattern_moves_at(&d, at) {
                if wanted(&m) {
                    found.entry((d.clone(), m)).or_insert_with(|| swaps.clone());
                }
            }
        }
    }
    found.into_iter().map(|((_, m), s)| (s, m)).collect()
}

/// Collects words in which the block `word[start..start + len]` has been
/// grown to `size` events by pulling later events next to it. Events that can
/// clear the whole block are moved in front of it; events that can reach its
/// right end are tried as the next member.
fn gather(
    word: &[FrontEvent],
    start: usize,
    len: usize,
    size: usize,
    swaps: Vec<usize>,
    out: &mut Vec<(Vec<FrontEvent>, Vec<usize>, usize)>,
) {
    if len == size {
        if !swaps.is_empty() {
            out.push((word.to_vec(), swaps, start));
        }
        return;
    }
    let mut w = word.to_vec();
    let mut s = swaps;
    let mut start = start;
    let mut p = start + len;
    while p < w.len() {
        if reaches(&w, start, p) {
            bubble_to(&mut w, start, p, &mut s);
            start += 1;
        } else if reaches(&w, start + len, p) {
            let mut w2 = w.clone();
            let mut s2 = s.clone();
            bubble_to(&mut w2, start + len, p, &mut s2);
            gather(&w2, start, len + 1, size, s2, out);
        }
        p += 1;
    }
}

fn reaches(word: &[FrontEvent], k: usize, j: usize) -> bool {
    let mut cur = word[j];
    for p in (k..j).rev() {
        match commute(word[p], cur) {
            Some((b, _)) => cur = b,
            None => return false,
        }
    }
    true
}

fn bubble_to(word: &mut [FrontEvent], k: usize, j: usize, swaps: &mut Vec<usize>) {
    for p in (k..j).rev() {
        let (b, a) = commute(word[p], word[p + 1]).expect("reachability checked");
        word[p] = b;
        word[p + 1] = a;
        swaps.push(p);
    }
}
