mod common;

use hpd_core::symbols::{base_templates, contains, r1_closed_form, t4_components, Shape};
use hpd_core::{FactorOracle, FactorSymbol, Side, TriState};
use proptest::prelude::*;

fn sample_symbols(side: Side, len: usize) -> Vec<FactorSymbol> {
    let mut out = vec![FactorSymbol::zero(side), FactorSymbol::full(side)];
    for j in 0..len {
        out.push(FactorSymbol::amb(side, j, 0));
        out.push(FactorSymbol::prim(side, j, 0));
        out.push(FactorSymbol::prim_star(side, j, 0));
    }
    for k in 1..len + 2 {
        out.push(FactorSymbol::dual_block(side, k, 0));
        out.push(FactorSymbol::right_perp_dual(side, k, 0));
    }
    out
}

#[test]
fn containment_examples() {
    let x = Side::X;
    let c = |a: &FactorSymbol, b: &FactorSymbol| contains(a, b).unwrap();
    assert!(c(&FactorSymbol::amb(x, 3, 2), &FactorSymbol::amb(x, 1, 2)));
    assert!(!c(&FactorSymbol::amb(x, 1, 2), &FactorSymbol::amb(x, 3, 2)));
    assert!(!c(&FactorSymbol::amb(x, 3, 2), &FactorSymbol::amb(x, 3, 1)));
    assert!(c(&FactorSymbol::prim(x, 2, 0), &FactorSymbol::amb(x, 2, 0)));
    assert!(!c(&FactorSymbol::prim(x, 1, 0), &FactorSymbol::amb(x, 2, 0)));
    assert!(c(&FactorSymbol::zero(x), &FactorSymbol::amb(x, 0, 7)));
    assert!(c(&FactorSymbol::amb(x, 0, 7), &FactorSymbol::full(x)));
    assert!(contains(&FactorSymbol::amb(x, 0, 0), &FactorSymbol::amb(Side::S, 0, 0)).is_err());
}

#[test]
fn template_family_sizes() {
    for len in 1..=8 {
        let xs = base_templates(Side::X, len);
        assert_eq!(xs.len(), 3);
        assert_eq!(xs[0].components.len(), len);
        assert_eq!(xs[1].components.len(), len * (len + 1) / 2);
        assert_eq!(xs[2].components.len(), len);
        let ss = base_templates(Side::S, len);
        assert_eq!(ss.len(), 3 + len.saturating_sub(1));
        for k in 1..len {
            assert_eq!(t4_components(len, k).len(), len);
        }
    }
}

#[test]
fn nonzero_symbols_never_vanish_against_themselves() {
    for len in 1..=7 {
        for side in [Side::X, Side::S] {
            let oracle = FactorOracle::new(side, Shape::generic(len));
            for f in sample_symbols(side, len) {
                for m in [-9, 0, 4] {
                    let f = oracle.normalize(f.shift(m));
                    if !f.is_zero() {
                        assert_eq!(oracle.hom_vanishes(&f, &f), TriState::Unknown, "{f}");
                    }
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn r1_closed_form_matches_search(i in 1usize..=8, a in 0usize..8, b in 0usize..8, s in -20i64..=20, t in -20i64..=20) {
        prop_assume!(a < i && b < i);
        prop_assert_eq!(r1_closed_form(a, s, b, t), common::r1_by_template_search(i, a, s, b, t, 40));
    }

    #[test]
    fn oracle_is_twist_equivariant(len in 1usize..=6, m in -12i64..=12, pick1 in 0usize..64, pick2 in 0usize..64, d in -6i64..=6) {
        let syms = sample_symbols(Side::X, len);
        let f1 = syms[pick1 % syms.len()].shift(d);
        let f2 = syms[pick2 % syms.len()];
        let oracle = FactorOracle::new(Side::X, Shape::generic(len));
        prop_assert_eq!(oracle.hom_vanishes(&f1, &f2), oracle.hom_vanishes(&f1.shift(m), &f2.shift(m)));
    }

    #[test]
    fn containment_is_transitive(len in 1usize..=6, a in 0usize..64, b in 0usize..64, c in 0usize..64) {
        let syms = sample_symbols(Side::S, len);
        let (f, g, h) = (syms[a % syms.len()], syms[b % syms.len()], syms[c % syms.len()]);
        if contains(&f, &g).unwrap() && contains(&g, &h).unwrap() {
            prop_assert!(contains(&f, &h).unwrap(), "{f} ⊆ {g} ⊆ {h}");
        }
    }

    #[test]
    fn vanishing_passes_to_subcategories(len in 1usize..=6, a in 0usize..64, b in 0usize..64, c in 0usize..64, d in -4i64..=4) {
        let syms = sample_symbols(Side::X, len);
        let (f1, f2, sub) = (syms[a % syms.len()].shift(d), syms[b % syms.len()], syms[c % syms.len()]);
        let oracle = FactorOracle::new(Side::X, Shape::generic(len));
        if oracle.hom_vanishes(&f1, &f2) == TriState::Vanishes && contains(&sub, &f2).unwrap() {
            prop_assert_eq!(oracle.hom_vanishes(&f1, &sub), TriState::Vanishes);
        }
    }
}
