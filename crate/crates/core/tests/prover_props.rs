use hpd_core::chessboard::ChessboardSpec;
use hpd_core::prover::*;
use proptest::prelude::*;

#[test]
fn smallest_board_succeeds() {
    let sp = ChessboardSpec::generic(2, 2, 4).unwrap();
    let t = check_main_theorem(&sp);
    assert!(t.success());
    // The Zig-Zag order is empty here, so Step 1 has nothing to record.
    assert!(zigzag_order(&sp).is_empty());
    assert!(!t.phases().contains(&Phase::GenerationStep1));
    assert!(reverify(&t).is_empty());
}

#[test]
fn single_block_is_vacuous() {
    let sp = ChessboardSpec::generic(1, 3, 5).unwrap();
    let t = check_main_theorem(&sp);
    assert!(t.success());
    assert!(t.obligations.iter().all(|o| o.phase != Phase::GenerationStep1));
    assert!(t.obligations.iter().all(|o| o.phase != Phase::FfPiT || !matches!(o.claim, Claim::Vanish { .. })));
}

#[test]
fn trace_text_has_one_line_per_obligation() {
    let t = check_main_theorem(&ChessboardSpec::generic(3, 4, 9).unwrap());
    let text = t.to_text();
    assert_eq!(text.lines().count(), t.obligations.len());
    for line in text.lines() {
        assert_eq!(line.split(" | ").count(), 5, "{line}");
        assert!(line.ends_with("discharged"));
    }
}

#[test]
fn phase_names_round_trip() {
    for p in Phase::ALL {
        assert_eq!(Phase::parse(p.as_str()), Some(p));
    }
    assert_eq!(Phase::parse("nope"), None);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn replay_is_deterministic(i in 2usize..=8, l in 2usize..=8, extra in 1usize..8) {
        let sp = ChessboardSpec::generic(i, l, i.max(l) + extra).unwrap();
        let a = check_main_theorem(&sp);
        prop_assert!(a.success());
        prop_assert_eq!(a.to_text(), check_main_theorem(&sp).to_text());
        prop_assert!(reverify(&a).is_empty());
    }

    #[test]
    fn step_one_needs_descending_alpha(i in 4usize..=8, l in 2usize..=8) {
        let sp = ChessboardSpec::generic(i, l, i.max(l) + 2).unwrap();
        let mut order = zigzag_order(&sp);
        // The first column lists α = i-1 down to 2; run it upward instead.
        order[..i - 2].reverse();
        let t = check_generation_with_order(&sp, &order);
        prop_assert!(t.failed().any(|o| o.phase == Phase::GenerationStep1));
        prop_assert!(check_generation(&sp).success());
    }

    #[test]
    fn phase_filter_keeps_only_requested(i in 2usize..=6, l in 2usize..=6, pick in 0usize..5) {
        let sp = ChessboardSpec::generic(i, l, i.max(l) + 1).unwrap();
        let t = check_main_theorem(&sp);
        let keep = [Phase::ALL[pick]];
        let f = t.filter_phases(&keep);
        prop_assert!(f.obligations.iter().all(|o| o.phase == keep[0]));
        prop_assert_eq!(f.obligations.len(), t.obligations.iter().filter(|o| o.phase == keep[0]).count());
    }
}

#[test]
fn figure_sized_boards_succeed() {
    for (i, l, n) in [(4, 5, 12), (6, 8, 20), (3, 2, 6)] {
        let sp = ChessboardSpec::generic(i, l, n).unwrap();
        assert!(check_ff_pi_t(&sp).success(), "{i} {l} {n}");
        assert!(check_ff_pi_s(&sp).success(), "{i} {l} {n}");
        assert!(check_generation(&sp).success(), "{i} {l} {n}");
    }
}
