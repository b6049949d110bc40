//! Reference computations written independently of the library code paths.
#![allow(dead_code)]

use std::collections::BTreeSet;

use hpd_core::chessboard::{BoxSymbol, ChessboardSpec};
use hpd_core::{LefschetzProfile, Profile};
use rand::Rng;

/// Euler total by counting strip cells: block `j` fills columns `0..=j` of
/// the Lefschetz diagram and the remaining `N - 1 - j` of the dual one.
pub fn cell_count_totals(e: &[i64], n: usize) -> (i64, i64) {
    let mut lef = 0;
    let mut dual = 0;
    for (j, &v) in e.iter().enumerate() {
        for col in 0..n {
            if col <= j {
                lef += v;
            } else {
                dual += v;
            }
        }
    }
    (lef, dual)
}

/// Dual e-vector from the complementary boxes: `B^k` is the set of blocks
/// below `min(k, i)`, and the `m`-th dual block is `B^{N-1-m} \ B^{N-2-m}`.
pub fn dual_by_widths(e: &[i64], n: usize) -> Vec<i64> {
    let i = e.len();
    let b = |k: usize| -> BTreeSet<usize> { (0..k.min(i)).collect() };
    let mut out: Vec<(i64, bool)> = Vec::new();
    for m in 0..n - 1 {
        let hi = b(n - 1 - m);
        let lo = if n >= m + 2 { b(n - 2 - m) } else { BTreeSet::new() };
        let diff: Vec<usize> = hi.difference(&lo).copied().collect();
        let euler = diff.iter().map(|&j| e[j]).sum();
        let zero = diff.iter().all(|&j| e[j] == 0);
        out.push((euler, zero));
    }
    while out.len() > 1 && out.last().is_some_and(|x| x.1) {
        out.pop();
    }
    out.into_iter().map(|x| x.0).collect()
}

/// Random valid profile with `e_j ∈ [-5, 5]`, `1 ≤ i ≤ N - 1 ≤ 30`.
pub fn random_profile(rng: &mut impl Rng) -> Profile {
    let n = rng.gen_range(3..=31);
    let i = rng.gen_range(1..n);
    let mut e: Vec<i64> = (0..i).map(|_| rng.gen_range(-5..=5)).collect();
    while e[i - 1] == 0 {
        e[i - 1] = rng.gen_range(-5..=5);
    }
    LefschetzProfile::from_evector("rand", n, &e)
}

/// Some twisted copy `⟨A_0(m), A_1(m+1), ...⟩` with `|m| ≤ window` has a
/// container of the target strictly left of a container of the source.
/// Slots are enumerated from the source side.
pub fn r1_by_template_search(i: usize, a: usize, s: i64, b: usize, t: i64, window: i64) -> bool {
    (0..i.min(a + 1)).any(|p| {
        let m = s - p as i64;
        let q = t - m;
        m.abs() <= window && q >= 0 && (q as usize) < p && q as usize <= b
    })
}

/// Cells `(α, β)` of the `π_T` staircase from the inequalities.
pub fn stair_pi_t_cells(k: usize, i: usize, l: usize) -> BTreeSet<(usize, usize)> {
    let mut s = BTreeSet::new();
    for alpha in 1..i {
        for beta in 1..l {
            let inside = if k <= l {
                beta <= alpha && alpha < k
            } else {
                alpha + l >= k + beta && alpha < k
            };
            if inside {
                s.insert((alpha, beta));
            }
        }
    }
    s
}

/// Cells `(α, β)` of the `π_S` staircase in `C^L` coordinates.
pub fn stair_pi_s_cells(k: usize, i: usize, l: usize) -> BTreeSet<(usize, usize)> {
    let mut s = BTreeSet::new();
    for alpha in 1..i {
        for beta in 1..l {
            let inside = if k <= i {
                alpha <= beta && beta < k
            } else {
                beta + i >= k + alpha && beta < k
            };
            if inside {
                s.insert((alpha, beta));
            }
        }
    }
    s
}

pub fn stair_e_cells(i: usize, l: usize) -> BTreeSet<(usize, usize)> {
    let mut s = BTreeSet::new();
    for alpha in 1..i {
        for beta in alpha..l {
            s.insert((alpha, beta));
        }
    }
    s
}

pub fn cells_of(boxes: impl IntoIterator<Item = BoxSymbol>, l: usize, cl: bool) -> BTreeSet<(usize, usize)> {
    boxes
        .into_iter()
        .map(|b| {
            for a in 1..64 {
                for be in 1..64 {
                    let c = if cl { BoxSymbol::cell_l(a, be, l) } else { BoxSymbol::cell(a, be) };
                    if c == b {
                        return (a, be);
                    }
                }
            }
            panic!("not a grid box: {b}")
        })
        .collect()
}

/// Criterion sweep: `2 ≤ i, l ≤ 10`, `N = max(i, l) + 1 ..= 25`.
pub fn sweep_specs() -> Vec<ChessboardSpec> {
    let mut out = Vec::new();
    for i in 2..=10 {
        for l in 2..=10 {
            for n in i.max(l) + 1..=25 {
                out.push(ChessboardSpec::generic(i, l, n).unwrap());
            }
        }
    }
    out
}

/// Fixed renderer inputs, named by their golden file.
pub fn render_fixtures() -> Vec<(&'static str, Vec<u8>)> {
    use hpd_core::chessboard::{staircase_e, staircase_pi_t};
    use hpd_core::prover::check_main_theorem;
    use hpd_core::render::*;

    let text = RenderOptions::default();
    let svg = RenderOptions::svg();
    let mut p2 = LefschetzProfile::rectangular("P2", 6, 3, 1i64);
    p2.blocks[2].label = "O".into();
    let mut gr27 = LefschetzProfile::rectangular("Gr(2,7)", 21, 7, 3i64);
    gr27.blocks[6].label = "S2U,U,O".into();
    let sq = ChessboardSpec::generic(6, 6, 13).unwrap();
    let wide = ChessboardSpec::generic(6, 8, 20).unwrap();
    let fig = ChessboardSpec::generic(4, 5, 12).unwrap();
    let with = |r, o: &RenderOptions| RenderOptions { highlight: vec![(r, Style::Primary)], ..o.clone() };
    let trace = check_main_theorem(&fig);
    vec![
        ("profile_p2.txt", render_profile_pair(&p2, &text).unwrap()),
        ("profile_p2.svg", render_profile_pair(&p2, &svg).unwrap()),
        ("profile_gr27.txt", render_profile_pair(&gr27, &text).unwrap()),
        ("board_pi_t4.txt", render_chessboard(&sq, &with(staircase_pi_t(4, &sq).unwrap(), &text)).unwrap()),
        ("board_e.txt", render_chessboard(&wide, &with(staircase_e(&wide), &text)).unwrap()),
        ("board_e.svg", render_chessboard(&wide, &with(staircase_e(&wide), &svg)).unwrap()),
        ("board_plain.txt", render_chessboard(&fig, &text).unwrap()),
        ("trace_fig.txt", render_trace(&trace, &text).unwrap()),
        ("trace_fig.svg", render_trace(&trace, &svg).unwrap()),
    ]
}

pub fn golden_dir() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}
