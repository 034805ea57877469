mod common;

use common::*;
use linepush::compact::{canonical_form, canonicalize, compatible, invert_push, invert_sequence, is_canonical, is_compact};
use linepush::{Configuration, Direction, PushSequence};
use proptest::prelude::*;

#[test]
fn matches_reference_on_small_boards() {
    for c in small_configurations(4, 4) {
        for d in Direction::ALL {
            assert_eq!(c.push(d), reference_push(&c, d), "{d} on\n{c}");
        }
    }
}

#[test]
fn area_shrinks_by_at_most_one_line() {
    for c in small_configurations(4, 4) {
        for d in Direction::ALL {
            let p = c.push(d);
            let (w, h) = (c.width(), c.height());
            let ok = (p.width(), p.height()) == (w, h)
                || (d.is_horizontal() && (p.width(), p.height()) == (w - 1, h))
                || (!d.is_horizontal() && (p.width(), p.height()) == (w, h - 1));
            assert!(ok, "{d} on\n{c}");
        }
    }
}

#[test]
fn worked_examples() {
    let g = |s: &str| s.parse::<Configuration>().unwrap();
    let m = |s: &str| s.parse::<PushSequence>().unwrap();
    assert_eq!(g("A.B").push(Direction::Left).format_grid(), "AB");
    assert_eq!(g("AB.\nCDE").push(Direction::Right).format_grid(), ".AB\nCDE");
    assert_eq!(g("AB.\nCDE").apply(&m("RULD")).format_grid(), "CA.\nDEB");
    let diag = Configuration::unlabeled((0..3).map(|i| (i, i)), '#').unwrap();
    assert_eq!(diag.apply(&m("DD")).format_grid(), "###");
}

fn arb_config() -> impl Strategy<Value = Configuration> {
    prop::collection::btree_set((0i64..7, 0i64..7), 1..12).prop_map(|cells| {
        Configuration::from_tokens(cells.into_iter().enumerate().map(|(i, p)| (p, (b'a' + i as u8) as char))).unwrap()
    })
}

fn arb_dir() -> impl Strategy<Value = Direction> {
    prop::sample::select(Direction::ALL.to_vec())
}

fn arb_moves() -> impl Strategy<Value = PushSequence> {
    prop::collection::vec(arb_dir(), 0..10).prop_map(PushSequence)
}

fn arb_compact() -> impl Strategy<Value = Configuration> {
    (prop::collection::vec(1usize..6, 1..5), arb_moves()).prop_map(|(rows, s)| {
        linepush::CanonicalShape::from_rows(&rows).unwrap().labeled().apply(&s)
    })
}

proptest! {
    #[test]
    fn push_agrees_with_reference(c in arb_config(), d in arb_dir()) {
        prop_assert_eq!(c.push(d), reference_push(&c, d));
    }

    #[test]
    fn tokens_and_labels_are_conserved(c in arb_config(), s in arb_moves()) {
        let after = c.apply(&s);
        prop_assert_eq!(after.len(), c.len());
        prop_assert_eq!(after.labels(), c.labels());
    }

    #[test]
    fn grid_text_round_trips(c in arb_config()) {
        let text = c.format_grid();
        let back: Configuration = text.parse().unwrap();
        prop_assert!(back.label_equal(&c));
        prop_assert_eq!(back.format_grid(), text);
    }

    #[test]
    fn canonicalize_reaches_a_fixpoint(c in arb_config()) {
        let (k, s) = canonicalize(&c);
        prop_assert!(is_canonical(&k));
        prop_assert_eq!(c.apply(&s), k.clone());
        prop_assert_eq!(k.push(Direction::Down), k.clone());
        prop_assert_eq!(k.push(Direction::Left), k);
    }

    #[test]
    fn compactness_is_preserved(c in arb_compact(), d in arb_dir()) {
        prop_assert!(is_compact(&c));
        let p = c.push(d);
        prop_assert!(is_compact(&p));
        prop_assert!(compatible(&c, &p).unwrap());
        let a = canonical_form(&c).unwrap().0;
        let b = canonical_form(&p).unwrap().0;
        prop_assert!(a.same_shape(&b));
    }

    #[test]
    fn pushes_on_compact_configurations_undo(c in arb_compact(), d in arb_dir()) {
        let s = invert_push(&c, d).unwrap();
        prop_assert_eq!(c.push(d).apply(&s), c);
    }

    #[test]
    fn sequences_undo(c in arb_compact(), s in arb_moves()) {
        let back = invert_sequence(&c, &s).unwrap();
        prop_assert_eq!(c.apply(&s).apply(&back), c);
    }

    #[test]
    fn sparse_pushes_shrink_or_stall(n in 1usize..10, seed in any::<u64>()) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let c = random_sparse(&mut rng, n);
        for d in Direction::ALL {
            let p = c.push(d);
            prop_assert!(p == c || p.area() < c.area());
        }
    }
}
