//! Acceptance criteria AC1 to AC10. Prints one PASS/FAIL line per criterion
//! and exits non-zero if any criterion fails.

mod common;

use std::time::{Duration, Instant};

use legkit::catalog::{algebraic_genus, all_named, named_front, torus_front, torus_pairs, TORUS_SIZE_CAP};
use legkit::concordance::{
    lagrangian_cobordism_genus, lagrangian_filling_constraints, lisca_matic_check, CobordismGenus, FillingHypothesis,
    ObstructionReason, VerdictStatus,
};
use legkit::front::{orient, parse_front, random_diagram, FrontDiagram};
use legkit::invariants::{front_jones, maslov_number, rotation_number, thurston_bennequin, InvariantRecord};
use legkit::moves::{
    applicable_moves, apply_move, first_arc, stabilize, transported_orientation, ArcSelector, StabilizationSign,
};
use legkit::search::{isotopy_search, NotFoundReason, SearchBudget, SearchOutcome};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:?}, limit {limit:?}"))?;
    Ok(took)
}

fn catalog_corpus() -> Vec<(String, FrontDiagram)> {
    let named = all_named().into_iter().map(|e| (e.name, e.word));
    let torus = torus_pairs(TORUS_SIZE_CAP).into_iter().map(|(p, q)| (format!("T({p},{q})"), torus_front(p, q).unwrap().word));
    named.chain(torus).collect()
}

fn ac1() -> Outcome {
    let d = parse_front("l0 r0").map_err(|e| e.to_string())?;
    let start = Instant::now();
    let rec = InvariantRecord::compute(&d, false).map_err(|e| e.to_string())?;
    let took = within(start, Duration::from_millis(1))?;
    ensure((rec.tb, rec.r) == (-1, 0), || format!("tb {} r {}", rec.tb, rec.r))?;
    Ok(format!("tb -1, r 0 in {took:?}"))
}

fn ac2() -> Outcome {
    let e = torus_front(2, 3).map_err(|e| e.to_string())?;
    let g_s = algebraic_genus(2, 3).map_err(|e| e.to_string())? as i64;
    ensure(g_s == 1 && e.tb == 1 && e.tb == 2 * g_s - 1, || format!("tb {} g_s {g_s}", e.tb))?;
    Ok(format!("tb({}) = 1 = 2*1 - 1", e.word))
}

fn ac3() -> Outcome {
    let start = Instant::now();
    let pairs = torus_pairs(48);
    for &(p, q) in &pairs {
        let e = torus_front(p, q).map_err(|e| e.to_string())?;
        let g = algebraic_genus(p, q).map_err(|e| e.to_string())?;
        let expect = (p * q) as i64 - p as i64 - q as i64;
        ensure(e.tb == expect && e.tb == 2 * g as i64 - 1, || format!("T({p},{q}) tb {} want {expect}", e.tb))?;
        ensure(e.r == 0, || format!("T({p},{q}) r {}", e.r))?;
        ensure(lisca_matic_check(e.tb, e.r, g) && e.tb + e.r.abs() == 2 * g as i64 - 1, || format!("T({p},{q}) not saturated"))?;
        let h = FillingHypothesis { tb: e.tb, r: e.r, g, g_s: Some(g) };
        let v = lagrangian_filling_constraints(&h);
        ensure(v.status == VerdictStatus::Passes, || format!("T({p},{q}) filling {v:?}"))?;
    }
    let took = within(start, Duration::from_secs(10))?;
    Ok(format!("{} torus knots in {took:?}", pairs.len()))
}

fn ac4() -> Outcome {
    let start = Instant::now();
    let (mut diagrams, mut moves) = (0, 0);
    for seed in 0..1000u64 {
        let d = random_diagram(seed, 20);
        ensure(d.len() <= 20, || format!("seed {seed}: {} events", d.len()))?;
        let od = orient(&d, false).map_err(|e| e.to_string())?;
        let tb = thurston_bennequin(&d).map_err(|e| e.to_string())?;
        let r = rotation_number(&od);
        let jones = front_jones(&d).map_err(|e| e.to_string())?;
        for m in applicable_moves(&d).map_err(|e| e.to_string())? {
            let e = apply_move(&d, &m).map_err(|e| format!("{d} by {m}: {e}"))?;
            let moved = transported_orientation(&od, &e, &m).map_err(|e| format!("{d} by {m}: {e}"))?;
            ensure(thurston_bennequin(&e) == Ok(tb), || format!("{d} by {m}: tb"))?;
            ensure(rotation_number(&moved) == r, || format!("{d} by {m}: r"))?;
            ensure(front_jones(&e).as_ref() == Ok(&jones), || format!("{d} by {m}: Jones"))?;
            moves += 1;
        }
        diagrams += 1;
    }
    let took = within(start, Duration::from_secs(120))?;
    Ok(format!("{diagrams} diagrams, {moves} moves in {took:?}"))
}

fn all_arcs(d: &FrontDiagram) -> Vec<ArcSelector> {
    let counts = d.strand_counts().unwrap();
    (0..d.len()).flat_map(|p| (0..counts[p + 1]).map(move |level| ArcSelector { after_event: p, level })).collect()
}

fn ac5() -> Outcome {
    let random = (0..200u64).map(|s| (format!("random seed {s}"), random_diagram(s, 20)));
    let mut checked = 0;
    for (name, d) in catalog_corpus().into_iter().chain(random) {
        let before = InvariantRecord::compute(&d, false).map_err(|e| e.to_string())?;
        for arc in all_arcs(&d) {
            for sign in [StabilizationSign::Positive, StabilizationSign::Negative] {
                let s = stabilize(&d, arc, sign).map_err(|e| format!("{name}: {e}"))?;
                let after = InvariantRecord::compute(&s, false).map_err(|e| e.to_string())?;
                ensure(after.tb == before.tb - 1 && after.r == before.r + sign.delta_r(), || {
                    format!("{name} at {}:{} {sign:?}: {before:?} -> {after:?}", arc.after_event, arc.level)
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} stabilizations"))
}

fn ac6() -> Outcome {
    ensure(lagrangian_cobordism_genus(-1, 1) == CobordismGenus::Genus(1), || "genus(-1, 1) != 1".into())?;
    for (a, b) in [(-1, 0), (0, 3), (-6, 1), (5, -2)] {
        ensure(
            lagrangian_cobordism_genus(a, b) == CobordismGenus::Impossible(ObstructionReason::OddTbGap),
            || format!("({a}, {b}) not OddTbGap"),
        )?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..100 {
        let a: i64 = rng.gen_range(-50..50);
        let b = a + 2 * rng.gen_range(0..20);
        let c = b + 2 * rng.gen_range(0..20);
        let g = |x, y| match lagrangian_cobordism_genus(x, y) {
            CobordismGenus::Genus(g) => Ok(g),
            other => Err(format!("({x}, {y}) gave {other:?}")),
        };
        ensure(g(a, b)? + g(b, c)? == g(a, c)?, || format!("not additive on {a}, {b}, {c}"))?;
    }
    Ok("genus(-1, 1) = 1; odd gaps rejected; 100 triples additive".into())
}

fn ac7() -> Outcome {
    let e = named_front("trefoil_left_maxtb").map_err(|e| e.to_string())?;
    for g in 0..=200u64 {
        for g_s in [None, Some(g)] {
            let v = lagrangian_filling_constraints(&FillingHypothesis { tb: e.tb, r: e.r, g, g_s });
            ensure(v.is_obstructed(), || format!("g = {g} passes"))?;
            // The tb condition alone already fails.
            let v0 = lagrangian_filling_constraints(&FillingHypothesis { tb: e.tb, r: 0, g, g_s });
            ensure(v0.reason == Some(ObstructionReason::FillingTb), || format!("g = {g} with r = 0 passes"))?;
        }
    }
    Ok(format!("{} (tb {}, r {}) obstructed for g = 0..=200", e.word, e.tb, e.r))
}

fn ac8() -> Outcome {
    let random = (0..1000u64).map(|s| (format!("random seed {s}"), random_diagram(s, 20)));
    let mut n = 0;
    for (name, d) in catalog_corpus().into_iter().chain(random) {
        for reverse in [false, true] {
            let od = orient(&d, reverse).map_err(|e| e.to_string())?;
            ensure(maslov_number(&od) == 2 * rotation_number(&od), || format!("{name}"))?;
            n += 1;
        }
    }
    Ok(format!("{n} oriented diagrams"))
}

fn ac9() -> Outcome {
    let start = Instant::now();
    let j = |name: &str| -> Result<_, String> {
        let e = named_front(name).map_err(|e| e.to_string())?;
        front_jones(&e.word).map_err(|e| e.to_string())
    };
    let (u, t, f) = (j("unknot")?, j("trefoil_right_maxtb")?, j("figure_eight_maxtb")?);
    ensure(u != t && t != f && u != f, || "Jones does not separate unknot, trefoil, figure-eight".into())?;
    let mut compared = 0;
    for (name, d) in catalog_corpus() {
        if d.crossing_count() > 12 {
            continue;
        }
        let engine = front_jones(&d).map_err(|e| e.to_string())?;
        let oracle = common::jones_oracle(&d);
        ensure(engine == oracle, || format!("{name}: engine {engine} oracle {oracle}"))?;
        compared += 1;
    }
    let took = within(start, Duration::from_secs(30))?;
    Ok(format!("unknot {u}, trefoil {t}, figure-eight {f}; {compared} fronts match the state sum in {took:?}"))
}

fn ac10() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for seed in 0..100u64 {
        let d = random_diagram(seed, 16);
        let mut e = d.clone();
        for _ in 0..3 {
            let ms = applicable_moves(&e).map_err(|e| e.to_string())?;
            let m = ms[rng.gen_range(0..ms.len())];
            e = apply_move(&e, &m).map_err(|e| e.to_string())?;
        }
        let out = isotopy_search(&d, &e, SearchBudget::for_inputs(&d, &e, 4)).map_err(|e| e.to_string())?;
        let cert = out.certificate().ok_or_else(|| format!("{d} -> {e}: {out:?}"))?;
        ensure(cert.replay().as_ref() == Ok(&e), || format!("{d} -> {e}: certificate does not replay"))?;
    }
    let u = parse_front("l0 r0").unwrap();
    let s = stabilize(&u, first_arc(&u).unwrap(), StabilizationSign::Positive).map_err(|e| e.to_string())?;
    let out = isotopy_search(&u, &s, SearchBudget::default_for(&u, &s)).map_err(|e| e.to_string())?;
    let want = SearchOutcome::NotFound { reason: NotFoundReason::ObstructionTb, explored: 0 };
    ensure(out == want, || format!("unknot vs S+: {out:?}"))?;
    let took = within(start, Duration::from_secs(120))?;
    Ok(format!("100 round trips replay; unknot vs S+ obstructed by tb; {took:?}"))
}

fn main() {
    let criteria: [(&str, &str, fn() -> Outcome); 10] = [
        ("AC1", "unknot anchors", ac1),
        ("AC2", "trefoil anchor", ac2),
        ("AC3", "torus family", ac3),
        ("AC4", "move invariance", ac4),
        ("AC5", "stabilization deltas", ac5),
        ("AC6", "cobordism genus", ac6),
        ("AC7", "negative-torus obstruction", ac7),
        ("AC8", "Maslov identity", ac8),
        ("AC9", "oracle equivalence", ac9),
        ("AC10", "search round-trip", ac10),
    ];
    let mut failed = 0;
    for (id, title, check) in criteria {
        match check() {
            Ok(detail) => println!("{id} PASS {title}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("{id} FAIL {title}: {why}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
