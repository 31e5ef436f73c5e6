//! Static SVG drawing of a front. Output is presentation only.

use std::fmt::Write;

use crate::front::{EventKind, FrontDiagram};

const STEP: f64 = 40.0;
const GAP: f64 = 24.0;
const MARGIN: f64 = 20.0;
/// Fraction of an under-strand left out around a crossing.
const BREAK: f64 = 0.18;

fn y(level: usize) -> f64 {
    MARGIN + level as f64 * GAP
}

fn x(slice: usize) -> f64 {
    MARGIN + slice as f64 * STEP
}

/// Strands run between event columns at integer levels; cusps are
/// semicircles; the under-strand of a crossing is broken at the middle.
pub fn render_svg(d: &FrontDiagram) -> String {
    let counts = d.strand_counts().unwrap_or_else(|| vec![0; d.len() + 1]);
    let height = counts.iter().copied().max().unwrap_or(0).max(1);
    let (w, h) = (2.0 * MARGIN + d.len() as f64 * STEP, 2.0 * MARGIN + (height - 1) as f64 * GAP);
    let mut paths = Vec::new();
    for (p, e) in d.events.iter().enumerate() {
        let (x0, x1) = (x(p), x(p + 1));
        let k = e.level;
        let through: Vec<(usize, usize)> = match e.kind {
            EventKind::LeftCusp => (0..counts[p]).map(|j| (j, if j < k { j } else { j + 2 })).collect(),
            EventKind::RightCusp => (0..counts[p]).filter(|&j| j != k && j != k + 1).map(|j| (j, if j < k { j } else { j - 2 })).collect(),
            EventKind::Crossing => (0..counts[p]).filter(|&j| j != k && j != k + 1).map(|j| (j, j)).collect(),
        };
        for (a, b) in through {
            let xm = (x0 + x1) / 2.0;
            paths.push(format!(
                "M{x0:.1} {:.1} C{xm:.1} {:.1} {xm:.1} {:.1} {x1:.1} {:.1}",
                y(a),
                y(a),
                y(b),
                y(b)
            ));
        }
        let r = GAP / 2.0;
        match e.kind {
            EventKind::LeftCusp => paths.push(format!(
                "M{x1:.1} {:.1} C{:.1} {:.1} {:.1} {:.1} {x1:.1} {:.1}",
                y(k),
                x1 - STEP + r,
                y(k),
                x1 - STEP + r,
                y(k + 1),
                y(k + 1)
            )),
            EventKind::RightCusp => paths.push(format!(
                "M{x0:.1} {:.1} C{:.1} {:.1} {:.1} {:.1} {x0:.1} {:.1}",
                y(k),
                x0 + STEP - r,
                y(k),
                x0 + STEP - r,
                y(k + 1),
                y(k + 1)
            )),
            EventKind::Crossing => {
                // Descending strand is over and drawn whole.
                paths.push(format!("M{x0:.1} {:.1} L{x1:.1} {:.1}", y(k), y(k + 1)));
                let lerp = |t: f64| (x0 + t * (x1 - x0), y(k + 1) + t * (y(k) - y(k + 1)));
                let (ax, ay) = lerp(0.5 - BREAK);
                let (bx, by) = lerp(0.5 + BREAK);
                paths.push(format!("M{x0:.1} {:.1} L{ax:.1} {ay:.1}", y(k + 1)));
                paths.push(format!("M{bx:.1} {by:.1} L{x1:.1} {:.1}", y(k)));
            }
        }
    }
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.0}" height="{h:.0}" viewBox="0 0 {w:.0} {h:.0}">"#
    );
    let _ = writeln!(out, r#"<g fill="none" stroke="black" stroke-width="2" stroke-linecap="round">"#);
    for p in paths {
        let _ = writeln!(out, r#"<path d="{p}"/>"#);
    }
    out.push_str("</g>\n</svg>\n");
    out
}
