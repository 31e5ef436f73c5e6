use std::collections::{BTreeSet, VecDeque};

use legkit::front::{commute, commute_at, normal_form, parse_front, random_diagram, validate, FrontDiagram, FrontEvent};
use legkit::invariants::InvariantRecord;
use proptest::prelude::*;

/// Every word reachable by far commutations, or `None` past `cap` words.
fn commutation_class(d: &FrontDiagram, cap: usize) -> Option<BTreeSet<FrontDiagram>> {
    let mut seen = BTreeSet::from([d.clone()]);
    let mut queue = VecDeque::from([d.clone()]);
    while let Some(w) = queue.pop_front() {
        for p in 0..w.len().saturating_sub(1) {
            if let Some(n) = commute_at(&w, p) {
                if seen.insert(n.clone()) {
                    if seen.len() > cap {
                        return None;
                    }
                    queue.push_back(n);
                }
            }
        }
    }
    Some(seen)
}

fn event() -> impl Strategy<Value = FrontEvent> {
    (0usize..3, 0usize..6).prop_map(|(k, l)| match k {
        0 => FrontEvent::left(l),
        1 => FrontEvent::right(l),
        _ => FrontEvent::cross(l),
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn normal_form_is_the_least_word_of_its_class(seed in any::<u64>()) {
        let d = random_diagram(seed, 12);
        if let Some(class) = commutation_class(&d, 20_000) {
            let nf = normal_form(&d).unwrap();
            prop_assert_eq!(&nf, class.iter().next().unwrap());
        }
    }

    #[test]
    fn commuted_words_share_a_normal_form(seed in any::<u64>(), pick in any::<usize>()) {
        let d = random_diagram(seed, 16);
        let spots: Vec<usize> = (0..d.len().saturating_sub(1)).filter(|&p| commute_at(&d, p).is_some()).collect();
        if !spots.is_empty() {
            let e = commute_at(&d, spots[pick % spots.len()]).unwrap();
            prop_assert!(validate(&e).ok);
            prop_assert_eq!(normal_form(&d).unwrap(), normal_form(&e).unwrap());
        }
    }

    #[test]
    fn commutation_is_an_involution(a in event(), b in event()) {
        if let Some((b2, a2)) = commute(a, b) {
            prop_assert_eq!(commute(b2, a2), Some((a, b)));
        }
    }

    #[test]
    fn random_diagrams_are_valid_knots(seed in any::<u64>(), size in 2usize..24) {
        let d = random_diagram(seed, size);
        prop_assert!(validate(&d).ok);
        prop_assert!(d.len() <= size.max(2));
        prop_assert_eq!(random_diagram(seed, size), d);
    }

    #[test]
    fn words_round_trip_through_text(seed in any::<u64>()) {
        let d = random_diagram(seed, 20);
        prop_assert_eq!(parse_front(&d.to_string()).unwrap(), d);
    }

    #[test]
    fn reversing_orientation_negates_r_only(seed in any::<u64>()) {
        let d = random_diagram(seed, 20);
        let a = InvariantRecord::compute(&d, false).unwrap();
        let b = InvariantRecord::compute(&d, true).unwrap();
        prop_assert_eq!(a.tb, b.tb);
        prop_assert_eq!(a.writhe, b.writhe);
        prop_assert_eq!(a.r, -b.r);
        prop_assert_eq!((a.down_cusps, a.up_cusps), (b.up_cusps, b.down_cusps));
    }

    #[test]
    fn tb_plus_r_is_odd(seed in any::<u64>()) {
        let d = random_diagram(seed, 20);
        let rec = InvariantRecord::compute(&d, false).unwrap();
        prop_assert_eq!((rec.tb + rec.r).rem_euclid(2), 1);
        prop_assert_eq!(rec.maslov, 2 * rec.r);
    }
}
