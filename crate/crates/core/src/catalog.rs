//! Named fronts and positive torus knots used as reference data.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::front::{parse_front, validate, FrontDiagram, FrontEvent};
use crate::invariants::InvariantRecord;

/// Largest `p * q` accepted by [`torus_front`].
pub const TORUS_SIZE_CAP: u64 = 64;

/// Reference metadata; `max_tb` is literature data and is not verified here
/// beyond matching the stored front.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Declared {
    pub max_tb: i64,
    pub smooth_type: String,
    pub simple: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    pub word: FrontDiagram,
    pub tb: i64,
    pub r: i64,
    pub declared: Option<Declared>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("p = {p} and q = {q} are not coprime")]
    NotCoprime { p: u64, q: u64 },
    #[error("p * q = {0} exceeds {TORUS_SIZE_CAP}")]
    TooLarge(u64),
    #[error("need 2 <= p < q, got p = {p}, q = {q}")]
    OutOfRange { p: u64, q: u64 },
    #[error("unknown catalog name {0:?}")]
    UnknownName(String),
}

/// Names accepted by [`named_front`], in listing order.
pub const NAMES: [&str; 6] = [
    "unknot",
    "trefoil_right_maxtb",
    "trefoil_left_maxtb",
    "figure_eight_maxtb",
    "unknot_s+",
    "unknot_s-",
];

fn entry(name: &str, word: FrontDiagram, declared: Option<Declared>) -> CatalogEntry {
    debug_assert!(validate(&word).ok, "catalog word {word} is invalid");
    let rec = InvariantRecord::compute(&word, false).expect("catalog words are valid");
    CatalogEntry { name: name.to_string(), word, tb: rec.tb, r: rec.r, declared }
}

fn stored(name: &str, word: &str, max_tb: Option<i64>, smooth_type: &str, simple: bool) -> CatalogEntry {
    let declared = max_tb.map(|max_tb| Declared { max_tb, smooth_type: smooth_type.to_string(), simple });
    entry(name, parse_front(word).expect("catalog words parse"), declared)
}

pub fn unknot() -> CatalogEntry {
    stored("unknot", "l0 r0", Some(-1), "unknot", true)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn check_torus(p: u64, q: u64) -> Result<(), CatalogError> {
    if p < 2 || q <= p {
        return Err(CatalogError::OutOfRange { p, q });
    }
    if gcd(p, q) != 1 {
        return Err(CatalogError::NotCoprime { p, q });
    }
    Ok(())
}

/// Front of the positive torus knot `T(p, q)`: `p` cusps open a braid region
/// on the middle `p` strands, `q` copies of `x1 .. x(p-1)` twist it, and `p`
/// right cusps close it.
pub fn torus_front(p: u64, q: u64) -> Result<CatalogEntry, CatalogError> {
    check_torus(p, q)?;
    if p * q > TORUS_SIZE_CAP {
        return Err(CatalogError::TooLarge(p * q));
    }
    let p = p as usize;
    let mut events = vec![FrontEvent::left(0)];
    events.extend((2..=p).map(FrontEvent::left));
    for _ in 0..q {
        events.extend((1..p).map(FrontEvent::cross));
    }
    events.push(FrontEvent::right(0));
    events.extend((0..p - 1).rev().map(FrontEvent::right));
    let max_tb = (p as i64) * (q as i64) - p as i64 - q as i64;
    let declared = Declared { max_tb, smooth_type: format!("T({p},{q})"), simple: true };
    Ok(entry(&format!("torus_{p}_{q}"), FrontDiagram::new(events), Some(declared)))
}

pub fn named_front(name: &str) -> Result<CatalogEntry, CatalogError> {
    Ok(match name {
        "unknot" => unknot(),
        "trefoil_right_maxtb" => {
            let mut e = torus_front(2, 3)?;
            e.name = name.to_string();
            e
        }
        "trefoil_left_maxtb" => stored(name, "l0 l0 x1 l2 x1 r0 x1 r0 r0", Some(-6), "T(2,-3)", true),
        "figure_eight_maxtb" => stored(name, "l0 l0 l0 x1 x1 x3 r2 x1 r0 r0", Some(-3), "4_1", true),
        "unknot_s+" => stored(name, "l0 l1 r0 r0", None, "unknot", true),
        "unknot_s-" => stored(name, "l0 l0 r1 r0", None, "unknot", true),
        _ => return Err(CatalogError::UnknownName(name.to_string())),
    })
}

/// Every named entry in listing order.
pub fn all_named() -> Vec<CatalogEntry> {
    NAMES.iter().map(|n| named_front(n).expect("listed names resolve")).collect()
}

/// Genus `(p - 1)(q - 1) / 2` of the Milnor fiber of `x^p = y^q`.
pub fn algebraic_genus(p: u64, q: u64) -> Result<u64, CatalogError> {
    check_torus(p, q)?;
    Ok((p - 1) * (q - 1) / 2)
}

/// Coprime pairs `2 <= p < q` with `p * q <= cap`.
pub fn torus_pairs(cap: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for p in 2..cap {
        for q in p + 1..=cap / p {
            if gcd(p, q) == 1 {
                out.push((p, q));
            }
        }
    }
    out
}
