//! Reference computations shared by the integration tests.
#![allow(dead_code)]

use legkit::front::{EventKind, FrontDiagram};
use legkit::invariants::{jones_from_bracket, writhe};
use legkit::poly::LaurentPoly;

struct Dsu(Vec<usize>);

impl Dsu {
    fn find(&mut self, x: usize) -> usize {
        let p = self.0[x];
        if p == x {
            return x;
        }
        let r = self.find(p);
        self.0[x] = r;
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        self.0[a] = b;
    }
}

/// Kauffman bracket of the smoothed front as a Laurent polynomial in `A`,
/// summed over all `2^n` states directly on the event word. The descending
/// strand of a crossing is over; its A-smoothing joins the two left ends to
/// the two right ends level by level.
pub fn bracket_oracle(d: &FrontDiagram) -> LaurentPoly {
    let counts = d.strand_counts().expect("well-formed word");
    let mut base = vec![0usize; counts.len()];
    for p in 1..counts.len() {
        base[p] = base[p - 1] + counts[p - 1];
    }
    let nodes = base.last().unwrap() + counts.last().unwrap();
    let node = |p: usize, j: usize| base[p] + j;
    let crossings: Vec<usize> = (0..d.len()).filter(|&p| d.events[p].kind == EventKind::Crossing).collect();
    assert!(crossings.len() <= 16, "oracle is exponential");
    let loop_value = LaurentPoly::from_terms([(2, -1), (-2, -1)]);
    let mut total = LaurentPoly::zero();
    for state in 0u32..(1 << crossings.len()) {
        let mut dsu = Dsu((0..nodes).collect());
        let mut a_count = 0i32;
        for (p, e) in d.events.iter().enumerate() {
            let k = e.level;
            let n = counts[p];
            match e.kind {
                EventKind::LeftCusp => {
                    for j in 0..n {
                        dsu.union(node(p, j), node(p + 1, if j < k { j } else { j + 2 }));
                    }
                    dsu.union(node(p + 1, k), node(p + 1, k + 1));
                }
                EventKind::RightCusp => {
                    for j in 0..n {
                        if j < k {
                            dsu.union(node(p, j), node(p + 1, j));
                        } else if j > k + 1 {
                            dsu.union(node(p, j), node(p + 1, j - 2));
                        }
                    }
                    dsu.union(node(p, k), node(p, k + 1));
                }
                EventKind::Crossing => {
                    for j in (0..n).filter(|&j| j != k && j != k + 1) {
                        dsu.union(node(p, j), node(p + 1, j));
                    }
                    let bit = crossings.iter().position(|&c| c == p).unwrap();
                    if state & (1 << bit) == 0 {
                        a_count += 1;
                        dsu.union(node(p, k), node(p + 1, k));
                        dsu.union(node(p, k + 1), node(p + 1, k + 1));
                    } else {
                        a_count -= 1;
                        dsu.union(node(p, k), node(p, k + 1));
                        dsu.union(node(p + 1, k), node(p + 1, k + 1));
                    }
                }
            }
        }
        let loops = (0..nodes).filter(|&x| dsu.find(x) == x).count();
        let mut term = LaurentPoly::monomial(1, a_count);
        for _ in 1..loops {
            term = &term * &loop_value;
        }
        total.add_assign_ref(&term);
    }
    total
}

/// Jones polynomial from the state-sum bracket and the engine writhe.
pub fn jones_oracle(d: &FrontDiagram) -> LaurentPoly {
    let od = legkit::front::orient(d, false).expect("valid front");
    jones_from_bracket(&bracket_oracle(d), writhe(&od))
}
