mod common;

use hpd_core::chessboard::*;
use hpd_core::{FactorSymbol, Side, TriState};
use proptest::prelude::*;

fn spec_strategy() -> impl Strategy<Value = ChessboardSpec> {
    (2usize..=9, 2usize..=9)
        .prop_flat_map(|(i, l)| (Just(i), Just(l), i.max(l) + 1..=22))
        .prop_map(|(i, l, n)| ChessboardSpec::generic(i, l, n).unwrap())
}

fn one(b: BoxSymbol) -> Region {
    [b].into_iter().collect()
}

#[test]
fn box_level_examples() {
    let sp = ChessboardSpec::generic(4, 5, 12).unwrap();
    let oracle = BoxOracle::new(&sp);
    // A_2(2)⊠D^2 against the cell A_1(1)⊠C_1(1).
    let rule = oracle.derive(&pi_t_source(2), &BoxSymbol::cell(1, 1)).unwrap();
    assert!(rule.to_string().starts_with("cone["), "{rule}");
    assert_eq!(oracle.hom_vanishes(&BoxSymbol::cell(2, 2), &BoxSymbol::cell(2, 2)), TriState::Unknown);
    assert_eq!(oracle.derive(&BoxSymbol::Eprim, &BoxSymbol::Eprim), None);
    let zero = BoxSymbol::tensor(FactorSymbol::amb(Side::X, 1, 1), FactorSymbol::zero(Side::S));
    assert_eq!(oracle.derive(&BoxSymbol::cell(3, 1), &zero), Some(BoxRule::Zero));
    assert_eq!(oracle.derive(&zero, &BoxSymbol::cell(3, 1)), Some(BoxRule::Zero));
}

#[test]
fn unknown_refinement_is_rejected() {
    let sp = ChessboardSpec::generic(3, 3, 6).unwrap();
    assert!(mutate_region(&one(pi_t_source(1)), &pi_t_through(&sp), &sp, "T9").is_err());
    for r in REFINEMENTS {
        assert!(mutate_region(&one(pi_t_source(1)), &pi_t_through(&sp), &sp, r).is_ok());
    }
}

#[test]
fn staircase_out_of_range() {
    let sp = ChessboardSpec::generic(3, 4, 8).unwrap();
    assert!(staircase_pi_t(0, &sp).is_err());
    assert!(staircase_pi_t(3, &sp).is_err());
    assert!(staircase_pi_s(4, &sp).is_err());
    assert!(staircase_pi_s(3, &sp).is_ok());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn e_staircase_covers_every_pi_s_staircase(sp in spec_strategy()) {
        let e = staircase_e(&sp);
        for k in 1..sp.l() {
            prop_assert!(staircase_pi_s(k, &sp).unwrap().is_subset(&e));
        }
    }

    #[test]
    fn staircases_match_inequalities(sp in spec_strategy()) {
        let (i, l) = (sp.i(), sp.l());
        for k in 1..i {
            let got = common::cells_of(staircase_pi_t(k, &sp).unwrap().iter().copied(), l, false);
            prop_assert_eq!(got, common::stair_pi_t_cells(k, i, l));
        }
        for k in 1..l {
            let got = common::cells_of(staircase_pi_s(k, &sp).unwrap().iter().copied(), l, true);
            prop_assert_eq!(got, common::stair_pi_s_cells(k, i, l));
        }
        prop_assert_eq!(common::cells_of(staircase_e(&sp).iter().copied(), l, true), common::stair_e_cells(i, l));
    }

    #[test]
    fn default_mutation_reproduces_staircases(sp in spec_strategy()) {
        let l = sp.l();
        for k in 1..sp.i() {
            let src = pi_t_source(k);
            let out = mutate_region(&one(src), &pi_t_through(&sp), &sp, DEFAULT_REFINEMENT).unwrap();
            prop_assert_eq!(out, one(src).union(&staircase_pi_t(k, &sp).unwrap()));
        }
        for k in 1..l {
            let src = pi_s_source(k, l);
            let out = mutate_region(&one(src), &pi_s_through(&sp), &sp, DEFAULT_REFINEMENT).unwrap();
            prop_assert_eq!(out, one(src).union(&staircase_pi_s(k, &sp).unwrap()));
        }
        let e = one(BoxSymbol::Eprim);
        let out = mutate_region(&e, &pi_s_through(&sp), &sp, DEFAULT_REFINEMENT).unwrap();
        prop_assert_eq!(out, e.union(&staircase_e(&sp)));
    }

    #[test]
    fn mutation_is_monotone_in_the_region(sp in spec_strategy(), k in 1usize..9) {
        let k = 1 + (k - 1) % (sp.i() - 1);
        let small = one(pi_t_source(k));
        let big = small.union(&one(BoxSymbol::cell(1, 1)));
        let a = mutate_region(&small, &pi_t_through(&sp), &sp, DEFAULT_REFINEMENT).unwrap();
        let b = mutate_region(&big, &pi_t_through(&sp), &sp, DEFAULT_REFINEMENT).unwrap();
        prop_assert!(a.is_subset(&b));
    }

    #[test]
    fn vanishing_is_symmetric_under_relabeling_n(i in 2usize..=7, l in 2usize..=7, extra in 1usize..6, a in 1usize..7, b in 1usize..7) {
        prop_assume!(a < i && b < l);
        let n = i.max(l) + 1;
        let small = ChessboardSpec::generic(i, l, n).unwrap();
        let large = ChessboardSpec::generic(i, l, n + extra).unwrap();
        let (o1, o2) = (BoxOracle::new(&small), BoxOracle::new(&large));
        for target in [BoxSymbol::cell(a, b), BoxSymbol::cell_l(a, b, l), BoxSymbol::Eprim] {
            let src = pi_t_source(a);
            prop_assert_eq!(o1.derive(&src, &target), o2.derive(&src, &target));
        }
    }
}

#[test]
fn beta_vanishing_between_cells() {
    let sp = ChessboardSpec::generic(4, 5, 12).unwrap();
    let oracle = BoxOracle::new(&sp);
    assert_eq!(oracle.hom_vanishes(&BoxSymbol::cell(1, 2), &BoxSymbol::cell(1, 1)), TriState::Vanishes);
    assert_eq!(oracle.hom_vanishes(&BoxSymbol::cell(2, 1), &BoxSymbol::cell(1, 1)), TriState::Vanishes);
    assert_eq!(oracle.hom_vanishes(&BoxSymbol::cell(1, 1), &BoxSymbol::cell(1, 1)), TriState::Unknown);
}

#[test]
fn mutation_examples() {
    let sp = ChessboardSpec::generic(5, 5, 12).unwrap();
    let r = one(pi_t_source(1));
    assert_eq!(mutate_region(&r, &[], &sp, DEFAULT_REFINEMENT).unwrap(), r);

    let r = one(pi_t_source(3));
    let cols: Vec<BoxSymbol> = (1..=2).map(BoxSymbol::column).collect();
    let mut want = r.clone();
    for alpha in 1..=2 {
        for beta in 1..=alpha {
            want.insert(BoxSymbol::cell(alpha, beta));
        }
    }
    assert_eq!(mutate_region(&r, &cols, &sp, DEFAULT_REFINEMENT).unwrap(), want);

    let l = sp.l();
    let r = one(pi_s_source(2, l));
    let mut want = r.clone();
    want.insert(BoxSymbol::cell_l(1, 1, l));
    assert_eq!(mutate_region(&r, &pi_s_through(&sp), &sp, DEFAULT_REFINEMENT).unwrap(), want);
}
