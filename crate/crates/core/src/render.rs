//! Deterministic text and SVG drawings of profiles, chessboards and traces.
//!
//! All sizes are integers so the output is byte-stable.

use std::fmt::Write as _;

use crate::chessboard::{BoxSymbol, ChessboardSpec, Region};
use crate::profile::LefschetzProfile;
use crate::prover::{zigzag_order, Phase, ProofTrace};
use crate::scalar::EulerInt;
use crate::symbols::FactorKind;

/// Largest strip width we draw.
pub const MAX_N: usize = 200;

/// Marks the uniform drawing of cells whose real sizes differ.
pub const FOOTNOTE: &str = "† cells drawn at uniform size";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Svg,
}

/// Fixed highlight palette.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Style {
    Primary,
    Secondary,
    Accent,
    Muted,
}

impl Style {
    pub const ALL: [Style; 4] = [Style::Primary, Style::Secondary, Style::Accent, Style::Muted];

    fn glyph(self) -> char {
        match self {
            Style::Primary => '█',
            Style::Secondary => '▓',
            Style::Accent => '▒',
            Style::Muted => '░',
        }
    }

    fn fill(self) -> &'static str {
        match self {
            Style::Primary => "#c0392b",
            Style::Secondary => "#2e86c1",
            Style::Accent => "#d4ac0d",
            Style::Muted => "#aab7b8",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_lowercase().as_str() {
            "primary" => Some(Style::Primary),
            "secondary" => Some(Style::Secondary),
            "accent" => Some(Style::Accent),
            "muted" => Some(Style::Muted),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderOptions {
    pub format: Format,
    /// SVG pixels per cell.
    pub cell_size: u32,
    /// Later entries win where regions overlap.
    pub highlight: Vec<(Region, Style)>,
    /// Draw the `C^L` columns even without highlighted boxes there.
    pub cl_columns: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        Self { format: Format::Text, cell_size: 16, highlight: Vec::new(), cl_columns: false }
    }
}

impl RenderOptions {
    pub fn svg() -> Self {
        Self { format: Format::Svg, ..Self::default() }
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum RenderError {
    #[error("N = {0} exceeds the drawable maximum {MAX_N}")]
    TooLarge(usize),
    #[error("cell size must be positive")]
    CellSize,
    #[error("invalid profile: {0}")]
    Invalid(String),
}

fn check_opts(opts: &RenderOptions, n: usize) -> Result<(), RenderError> {
    if n > MAX_N {
        return Err(RenderError::TooLarge(n));
    }
    if opts.cell_size == 0 {
        return Err(RenderError::CellSize);
    }
    Ok(())
}

fn esc(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

fn svg_open(out: &mut String, w: u32, h: u32) {
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}" font-family="monospace">"#
    );
}

/// One row of the strip: `label`, then `j + 1` plain cells and `N - 1 - j`
/// shaded cells.
struct StripRow {
    label: String,
    j: usize,
}

fn strip_rows<T: EulerInt>(p: &LefschetzProfile<T>) -> Vec<StripRow> {
    let mut rows = Vec::new();
    for (j, b) in p.blocks.iter().enumerate() {
        if b.is_zero() {
            continue;
        }
        let parts: Vec<&str> = b.label.split(',').map(str::trim).collect();
        let mult = b.euler.abs().to_usize().unwrap_or(1).max(parts.len()).max(1);
        for r in 0..mult {
            let label = if parts.len() > 1 {
                parts.get(r).copied().unwrap_or("").to_string()
            } else if r == 0 {
                b.label.clone()
            } else {
                String::new()
            };
            rows.push(StripRow { label, j });
        }
    }
    rows
}

/// Lefschetz diagram (plain) against its complementary dual diagram (shaded).
pub fn render_profile_pair<T: EulerInt>(
    p: &LefschetzProfile<T>,
    opts: &RenderOptions,
) -> Result<Vec<u8>, RenderError> {
    check_opts(opts, p.n)?;
    p.ensure_valid().map_err(|e| RenderError::Invalid(e.to_string()))?;
    let n = p.n;
    let rows = strip_rows(p);
    let lw = rows.iter().map(|r| r.label.chars().count()).max().unwrap_or(0).max(5);
    let mut out = String::new();
    match opts.format {
        Format::Text => {
            let _ = writeln!(out, "{} (N = {}, {})", p.name, n, p.orientation);
            let _ = writeln!(out, "{:lw$} ┌{}┐", "", "─".repeat(n));
            for r in &rows {
                let cells: String = (0..n).map(|c| if c <= r.j { '□' } else { '■' }).collect();
                let _ = writeln!(out, "{:<lw$} │{cells}│", r.label);
            }
            let _ = writeln!(out, "{:lw$} └{}┘", "", "─".repeat(n));
            let _ = writeln!(out, "□ Lefschetz  ■ dual  {FOOTNOTE}");
        }
        Format::Svg => {
            let c = opts.cell_size;
            let lpx = 8 * lw as u32 + 8;
            let w = lpx + c * n as u32 + 8;
            let h = c * (rows.len() as u32 + 2) + 8;
            svg_open(&mut out, w, h);
            let _ = writeln!(
                out,
                r#"<text x="4" y="{}" font-size="12">{} (N = {}, {})</text>"#,
                c - 4,
                esc(&p.name),
                n,
                p.orientation
            );
            for (ri, r) in rows.iter().enumerate() {
                let y = c * (ri as u32 + 1);
                let _ = writeln!(out, r#"<text x="4" y="{}" font-size="12">{}</text>"#, y + c - 4, esc(&r.label));
                for col in 0..n {
                    let fill = if col <= r.j { "#ffffff" } else { "#7f8c8d" };
                    let _ = writeln!(
                        out,
                        r##"<rect x="{}" y="{y}" width="{c}" height="{c}" fill="{fill}" stroke="#000000"/>"##,
                        lpx + c * col as u32
                    );
                }
            }
            let _ = writeln!(
                out,
                r#"<text x="4" y="{}" font-size="10">{FOOTNOTE}</text>"#,
                c * (rows.len() as u32 + 2) - 4
            );
            out.push_str("</svg>\n");
        }
    }
    Ok(out.into_bytes())
}

/// Grid cell of a box: `(α, β, in C^L block)`.
fn grid_cell(b: &BoxSymbol, l: usize) -> Option<(usize, usize, bool)> {
    let BoxSymbol::Tensor(x, s) = b else { return None };
    let FactorKind::Amb(alpha) = x.kind else { return None };
    if x.twist != alpha as i64 {
        return None;
    }
    match s.kind {
        FactorKind::Amb(beta) if s.twist == beta as i64 => Some((alpha, beta, false)),
        FactorKind::AmbL(beta) if s.twist == beta as i64 + 1 - l as i64 => Some((alpha, beta, true)),
        _ => None,
    }
}

struct Board {
    i: usize,
    l: usize,
    cl: bool,
    /// `style[cl][α][β]`.
    style: [Vec<Vec<Option<Style>>>; 2],
    extras: Vec<(BoxSymbol, Style)>,
}

impl Board {
    fn new(spec: &ChessboardSpec, opts: &RenderOptions) -> Self {
        let (i, l) = (spec.i(), spec.l());
        let blank = vec![vec![None; l]; i];
        let mut board = Board { i, l, cl: opts.cl_columns, style: [blank.clone(), blank], extras: Vec::new() };
        for (region, st) in &opts.highlight {
            for b in region.iter() {
                match grid_cell(b, l) {
                    Some((a, be, cl)) if (1..i).contains(&a) && (1..l).contains(&be) => {
                        board.style[cl as usize][a][be] = Some(*st);
                        board.cl |= cl;
                    }
                    _ => board.extras.push((*b, *st)),
                }
            }
        }
        board
    }

    fn blocks(&self) -> Vec<bool> {
        if self.cl {
            vec![false, true]
        } else {
            vec![false]
        }
    }
}

fn col_label(beta: usize, l: usize, cl: bool) -> String {
    if cl {
        format!("C^L_{beta}({})", beta as i64 + 1 - l as i64)
    } else {
        format!("C_{beta}({beta})")
    }
}

/// Rows `A_α(α)` for `α = 1..i-1`, columns `C_β(β)` (and `C^L_β` when needed).
pub fn render_chessboard(spec: &ChessboardSpec, opts: &RenderOptions) -> Result<Vec<u8>, RenderError> {
    check_opts(opts, spec.n())?;
    let board = Board::new(spec, opts);
    let path = Vec::new();
    Ok(draw_board(spec, &board, opts, &path, &[]).into_bytes())
}

fn draw_board(
    spec: &ChessboardSpec,
    board: &Board,
    opts: &RenderOptions,
    path: &[(usize, usize)],
    notes: &[String],
) -> String {
    let (i, l) = (board.i, board.l);
    let mut out = String::new();
    match opts.format {
        Format::Text => {
            let _ = writeln!(out, "chessboard i = {i}, l = {l}, N = {}", spec.n());
            for cl in board.blocks() {
                let _ = writeln!(out, "{}", if cl { "[C^L columns]" } else { "[C columns]" });
                let head: Vec<String> = (1..l).map(|b| col_label(b, l, cl)).collect();
                let _ = writeln!(out, "{:8} {}", "", head.join(" "));
                let widths: Vec<usize> = head.iter().map(|h| h.chars().count()).collect();
                for a in 1..i {
                    let mut line = format!("{:<8}", format!("A_{a}({a})"));
                    for (bi, w) in widths.iter().enumerate() {
                        let beta = bi + 1;
                        let g = match board.style[cl as usize][a][beta] {
                            Some(st) => st.glyph(),
                            None if !cl && path.contains(&(beta, a)) => '×',
                            None => '·',
                        };
                        let _ = write!(line, " {:^w$}", g, w = *w);
                    }
                    let _ = writeln!(out, "{}", line.trim_end());
                }
            }
            let shaded: usize =
                board.style.iter().flatten().flatten().filter(|s| s.is_some()).count();
            let _ = writeln!(out, "highlighted cells: {shaded}");
            for (b, st) in &board.extras {
                let _ = writeln!(out, "also {}: {b}", st.glyph());
            }
            for n in notes {
                let _ = writeln!(out, "{n}");
            }
            let _ = writeln!(out, "{FOOTNOTE}");
        }
        Format::Svg => {
            let c = opts.cell_size;
            let blocks = board.blocks();
            let left = 8 * c;
            let top = 2 * c;
            let block_w = c * (l.saturating_sub(1) as u32) + c;
            let w = left + block_w * blocks.len() as u32 + c;
            let h = top + c * (i.saturating_sub(1) as u32) + c * (3 + board.extras.len() as u32 + notes.len() as u32);
            svg_open(&mut out, w, h);
            let _ = writeln!(
                out,
                r#"<text x="4" y="{}" font-size="12">chessboard i = {i}, l = {l}, N = {}</text>"#,
                c - 4,
                spec.n()
            );
            for a in 1..i {
                let y = top + c * (a as u32 - 1);
                let _ = writeln!(out, r#"<text x="4" y="{}" font-size="10">A_{a}({a})</text>"#, y + c - 4);
            }
            for (bi, &cl) in blocks.iter().enumerate() {
                let x0 = left + block_w * bi as u32;
                for beta in 1..l {
                    let x = x0 + c * (beta as u32 - 1);
                    let _ = writeln!(
                        out,
                        r#"<text x="{x}" y="{}" font-size="8">{}</text>"#,
                        top - 4,
                        esc(&col_label(beta, l, cl))
                    );
                    for a in 1..i {
                        let y = top + c * (a as u32 - 1);
                        let fill = board.style[cl as usize][a][beta].map_or("#ffffff", Style::fill);
                        let _ = writeln!(
                            out,
                            r##"<rect x="{x}" y="{y}" width="{c}" height="{c}" fill="{fill}" stroke="#000000"/>"##
                        );
                    }
                }
            }
            if path.len() > 1 {
                let pts: Vec<String> = path
                    .iter()
                    .map(|&(beta, a)| {
                        format!("{},{}", left + c * (beta as u32 - 1) + c / 2, top + c * (a as u32 - 1) + c / 2)
                    })
                    .collect();
                let _ = writeln!(
                    out,
                    r##"<polyline points="{}" fill="none" stroke="#8e44ad" stroke-width="2"/>"##,
                    pts.join(" ")
                );
            }
            let mut y = top + c * (i.saturating_sub(1) as u32) + c;
            for (b, st) in &board.extras {
                let _ = writeln!(
                    out,
                    r#"<text x="4" y="{y}" font-size="10" fill="{}">also: {}</text>"#,
                    st.fill(),
                    esc(&b.to_string())
                );
                y += c;
            }
            for n in notes {
                let _ = writeln!(out, r#"<text x="4" y="{y}" font-size="10">{}</text>"#, esc(n));
                y += c;
            }
            let _ = writeln!(out, r#"<text x="4" y="{y}" font-size="10">{FOOTNOTE}</text>"#);
            out.push_str("</svg>\n");
        }
    }
    out
}

pub const TRACE_HEADER: &str = "phase | source | target | rule | status";

/// Text table of obligations, or the chessboard with the Zig-Zag path.
pub fn render_trace(t: &ProofTrace, opts: &RenderOptions) -> Result<Vec<u8>, RenderError> {
    let failed = t.failed().count();
    let summary = format!(
        "obligations: {}, discharged: {}, failed: {failed}",
        t.obligations.len(),
        t.obligations.len() - failed
    );
    match opts.format {
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "{TRACE_HEADER}");
            for o in &t.obligations {
                let flag = if o.status.is_discharged() { "" } else { "!! " };
                let _ = writeln!(out, "{flag}{o}");
            }
            if !t.obligations.is_empty() {
                let _ = writeln!(out, "{summary}");
            }
            Ok(out.into_bytes())
        }
        Format::Svg => {
            check_opts(opts, t.spec.n())?;
            let board = Board::new(&t.spec, opts);
            let path = if t.phases().contains(&Phase::GenerationStep1) || t.obligations.is_empty() {
                zigzag_order(&t.spec)
            } else {
                Vec::new()
            };
            Ok(draw_board(&t.spec, &board, opts, &path, &[summary]).into_bytes())
        }
    }
}
