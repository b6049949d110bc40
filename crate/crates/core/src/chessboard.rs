//! Boxes on the `(α, β)` chessboard, the cone-rule box oracle, region
//! propagation under mutation and the closed-form staircases.
//!
//! A box `A_α(α) ⊠ C_β(β)` is the image of a tensor product in the incidence
//! divisor. The Hom between two tensor boxes is the cone of an untwisted and
//! a twisted term; each term vanishes when one of its two factors does.

use std::cell::RefCell;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::rc::Rc;

use crate::profile::LefschetzProfile;
use crate::symbols::{t4_components, FactorKind, FactorOracle, FactorSymbol, Rule, Shape, Side, TriState};
use crate::Profile;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoxSymbol {
    Tensor(FactorSymbol, FactorSymbol),
    /// Image of `D(X_T)`.
    DXT,
    /// Image of `D(Y_S)`.
    DYS,
    /// The right orthogonal of the `π_T` images inside `D_{X_T}`.
    Eprim,
}

impl BoxSymbol {
    pub fn tensor(x: FactorSymbol, s: FactorSymbol) -> Self {
        debug_assert_eq!(x.side, Side::X);
        debug_assert_eq!(s.side, Side::S);
        BoxSymbol::Tensor(x, s)
    }

    /// `A_α(α) ⊠ C_β(β)`.
    pub fn cell(alpha: usize, beta: usize) -> Self {
        Self::tensor(
            FactorSymbol::amb(Side::X, alpha, alpha as i64),
            FactorSymbol::amb(Side::S, beta, beta as i64),
        )
    }

    /// `A_α(α) ⊠ C^L_β(β + 1 - l)`.
    pub fn cell_l(alpha: usize, beta: usize, l: usize) -> Self {
        Self::tensor(
            FactorSymbol::amb(Side::X, alpha, alpha as i64),
            FactorSymbol::amb_l(beta, beta as i64 + 1 - l as i64),
        )
    }

    /// Column `D(X) ⊠ C_β(β)`.
    pub fn column(beta: usize) -> Self {
        Self::tensor(FactorSymbol::full(Side::X), FactorSymbol::amb(Side::S, beta, beta as i64))
    }

    /// Row `A_α(α) ⊠ D(S)`.
    pub fn row(alpha: usize) -> Self {
        Self::tensor(FactorSymbol::amb(Side::X, alpha, alpha as i64), FactorSymbol::full(Side::S))
    }
}

impl fmt::Display for BoxSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoxSymbol::Tensor(x, s) => write!(f, "{x}⊠{s}"),
            BoxSymbol::DXT => f.write_str("D_XT"),
            BoxSymbol::DYS => f.write_str("D_YS"),
            BoxSymbol::Eprim => f.write_str("E"),
        }
    }
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum ChessError {
    #[error("profiles disagree on N: {0} vs {1}")]
    NMismatch(usize, usize),
    #[error("invalid {side} profile: {reason}")]
    InvalidProfile { side: Side, reason: String },
    #[error("unknown refinement template `{0}`")]
    UnknownTemplate(String),
    #[error("mutation step {0} is neither a row nor a column")]
    BadStep(BoxSymbol),
    #[error("{what} index {k} outside [{lo}, {hi}]")]
    OutOfRange { what: &'static str, k: usize, lo: usize, hi: usize },
    #[error("box {0} is not bound to this spec: {1}")]
    Unbound(BoxSymbol, String),
}

/// The two profiles of a chessboard, sharing `N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChessboardSpec {
    pub x: Profile,
    pub s: Profile,
}

impl ChessboardSpec {
    pub fn new(x: Profile, s: Profile) -> Result<Self, ChessError> {
        for (side, p) in [(Side::X, &x), (Side::S, &s)] {
            p.ensure_valid()
                .map_err(|e| ChessError::InvalidProfile { side, reason: e.to_string() })?;
        }
        if x.n != s.n {
            return Err(ChessError::NMismatch(x.n, s.n));
        }
        Ok(Self { x, s })
    }

    /// Spec with every primitive block nonzero of Euler characteristic 1.
    pub fn generic(i: usize, l: usize, n: usize) -> Result<Self, ChessError> {
        Self::new(
            LefschetzProfile::from_evector("X", n, &vec![1; i]),
            LefschetzProfile::from_evector("S", n, &vec![1; l]),
        )
    }

    pub fn i(&self) -> usize {
        self.x.len()
    }

    pub fn l(&self) -> usize {
        self.s.len()
    }

    pub fn n(&self) -> usize {
        self.x.n
    }

    pub fn profile(&self, side: Side) -> &Profile {
        match side {
            Side::X => &self.x,
            Side::S => &self.s,
        }
    }

    /// Checks that every factor index fits the bound profiles.
    pub fn check_box(&self, b: &BoxSymbol) -> Result<(), ChessError> {
        if let BoxSymbol::Tensor(x, s) = b {
            if x.side != Side::X || s.side != Side::S {
                return Err(ChessError::Unbound(*b, "factor sides swapped".into()));
            }
            x.check(&self.x).map_err(|e| ChessError::Unbound(*b, e.to_string()))?;
            s.check(&self.s).map_err(|e| ChessError::Unbound(*b, e.to_string()))?;
        }
        Ok(())
    }
}

/// Finite set of boxes read as the triangulated hull they generate.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Region {
    pub boxes: BTreeSet<BoxSymbol>,
}

impl Region {
    pub fn new() -> Self {
        Self::default()
    }

    /// Inserts unless a factor is syntactically zero.
    pub fn insert(&mut self, b: BoxSymbol) -> bool {
        if let BoxSymbol::Tensor(x, s) = b {
            if x.is_zero() || s.is_zero() {
                return false;
            }
        }
        self.boxes.insert(b)
    }

    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    pub fn contains(&self, b: &BoxSymbol) -> bool {
        self.boxes.contains(b)
    }

    pub fn is_subset(&self, other: &Region) -> bool {
        self.boxes.is_subset(&other.boxes)
    }

    pub fn union(&self, other: &Region) -> Region {
        Region { boxes: self.boxes.union(&other.boxes).copied().collect() }
    }

    pub fn iter(&self) -> impl Iterator<Item = &BoxSymbol> {
        self.boxes.iter()
    }
}

impl FromIterator<BoxSymbol> for Region {
    fn from_iter<I: IntoIterator<Item = BoxSymbol>>(iter: I) -> Self {
        let mut r = Region::new();
        for b in iter {
            r.insert(b);
        }
        r
    }
}

/// How a box-level vanishing was derived.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BoxRule {
    Zero,
    /// Both cone terms vanish; each entry names the factor side and rule.
    Cone { untwisted: (Side, Rule), twisted: (Side, Rule) },
    /// A global decomposition of the incidence divisor.
    Template(String),
    /// `E` is right orthogonal to every `π_T(A_m(m) ⊠ D^m)`.
    EDef(usize),
    /// Every piece of a hull decomposition of one factor vanishes.
    Split(Side),
}

impl fmt::Display for BoxRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoxRule::Zero => f.write_str("zero"),
            BoxRule::Cone { untwisted, twisted } => write!(
                f,
                "cone[untw {}:{}; tw {}:{}]",
                untwisted.0, untwisted.1, twisted.0, twisted.1
            ),
            BoxRule::Template(id) => f.write_str(id),
            BoxRule::EDef(m) => write!(f, "EDef(m={m})"),
            BoxRule::Split(side) => write!(f, "split({side})"),
        }
    }
}

/// Recursion budget for box-level hull splitting.
pub const BOX_DEPTH: u8 = 2;

type BoxCache = HashMap<(BoxSymbol, BoxSymbol, u8), Option<BoxRule>>;

struct BoardData {
    templates: Vec<(String, Vec<BoxSymbol>)>,
    cache: RefCell<BoxCache>,
}

thread_local! {
    static BOARDS: RefCell<HashMap<(Shape, Shape), Rc<BoardData>>> = RefCell::new(HashMap::new());
}

/// Global decompositions of the incidence divisor, left to right.
pub fn global_templates(i: usize, l: usize) -> Vec<(String, Vec<BoxSymbol>)> {
    let mut out = Vec::new();
    let mut hx = vec![BoxSymbol::DYS];
    hx.extend((1..i).map(BoxSymbol::row));
    out.push(("H_X".to_string(), hx));
    let li = l as i64;
    for k in 0..l {
        let mut comps: Vec<BoxSymbol> = (k + 1..l)
            .map(|b| BoxSymbol::tensor(FactorSymbol::full(Side::X), FactorSymbol::amb_l(b, b as i64 + 1 - li)))
            .collect();
        comps.push(BoxSymbol::DXT);
        comps.extend((1..=k).map(BoxSymbol::column));
        let id = if k + 1 == l {
            "H_S".to_string()
        } else if k == 0 {
            "H_S:Serre".to_string()
        } else {
            format!("H:{k}")
        };
        out.push((id, comps));
    }
    out
}

/// Box-level oracle bound to one spec. Cheap to build; the memo table is
/// shared per thread across specs with the same shapes.
#[derive(Clone)]
pub struct BoxOracle {
    pub x: FactorOracle,
    pub s: FactorOracle,
    i: usize,
    l: usize,
    data: Rc<BoardData>,
}

impl BoxOracle {
    pub fn new(spec: &ChessboardSpec) -> Self {
        let sx = Shape::of(&spec.x);
        let ss = Shape::of(&spec.s);
        let (i, l) = (sx.len, ss.len);
        let data = BOARDS.with(|b| {
            b.borrow_mut()
                .entry((sx.clone(), ss.clone()))
                .or_insert_with(|| {
                    Rc::new(BoardData {
                        templates: global_templates(i, l),
                        cache: RefCell::new(HashMap::new()),
                    })
                })
                .clone()
        });
        Self { x: FactorOracle::new(Side::X, sx), s: FactorOracle::new(Side::S, ss), i, l, data }
    }

    pub fn normalize(&self, b: BoxSymbol) -> BoxSymbol {
        match b {
            BoxSymbol::Tensor(x, s) => BoxSymbol::Tensor(self.x.normalize(x), self.s.normalize(s)),
            other => other,
        }
    }

    pub fn is_zero_box(&self, b: &BoxSymbol) -> bool {
        match self.normalize(*b) {
            BoxSymbol::Tensor(x, s) => x.is_zero() || s.is_zero(),
            _ => false,
        }
    }

    pub fn box_contains(&self, b: &BoxSymbol, container: &BoxSymbol) -> bool {
        match (b, container) {
            (BoxSymbol::Tensor(f, g), BoxSymbol::Tensor(cf, cg)) => {
                self.x.contains(f, cf) && self.s.contains(g, cg)
            }
            (BoxSymbol::Eprim, BoxSymbol::DXT) => true,
            (a, c) => a == c || self.is_zero_box(a),
        }
    }

    pub fn hom_vanishes(&self, b1: &BoxSymbol, b2: &BoxSymbol) -> TriState {
        TriState::from_derivation(&self.derive(b1, b2))
    }

    pub fn derive(&self, b1: &BoxSymbol, b2: &BoxSymbol) -> Option<BoxRule> {
        self.derive_depth(*b1, *b2, BOX_DEPTH)
    }

    fn derive_depth(&self, b1: BoxSymbol, b2: BoxSymbol, depth: u8) -> Option<BoxRule> {
        let n1 = self.normalize(b1);
        let n2 = self.normalize(b2);
        if self.is_zero_box(&n1) || self.is_zero_box(&n2) {
            return Some(BoxRule::Zero);
        }
        if n1 == n2 {
            return None;
        }
        let key = (n1, n2, depth);
        if let Some(hit) = self.data.cache.borrow().get(&key) {
            return hit.clone();
        }
        let out = self
            .cone(&n1, &n2)
            .or_else(|| self.template(&n1, &n2))
            .or_else(|| self.edef(&n1, &n2))
            .or_else(|| if depth > 0 { self.split(&n1, &n2, depth) } else { None });
        self.data.cache.borrow_mut().insert(key, out.clone());
        out
    }

    fn cone(&self, b1: &BoxSymbol, b2: &BoxSymbol) -> Option<BoxRule> {
        let (BoxSymbol::Tensor(f1, g1), BoxSymbol::Tensor(f2, g2)) = (b1, b2) else {
            return None;
        };
        let untwisted = self
            .x
            .derive(f1, f2)
            .map(|r| (Side::X, r))
            .or_else(|| self.s.derive(g1, g2).map(|r| (Side::S, r)))?;
        let twisted = self
            .x
            .derive(f1, &f2.shift(-1))
            .map(|r| (Side::X, r))
            .or_else(|| self.s.derive(g1, &g2.shift(-1)).map(|r| (Side::S, r)))?;
        Some(BoxRule::Cone { untwisted, twisted })
    }

    fn template(&self, b1: &BoxSymbol, b2: &BoxSymbol) -> Option<BoxRule> {
        for (id, comps) in &self.data.templates {
            let Some(j) = comps.iter().rposition(|c| self.box_contains(b1, c)) else {
                continue;
            };
            if comps[..j].iter().any(|c| self.box_contains(b2, c)) {
                return Some(BoxRule::Template(id.clone()));
            }
        }
        None
    }

    fn edef(&self, b1: &BoxSymbol, b2: &BoxSymbol) -> Option<BoxRule> {
        if *b2 != BoxSymbol::Eprim {
            return None;
        }
        let BoxSymbol::Tensor(f, g) = b1 else {
            return None;
        };
        (1..self.i).find_map(|m| {
            let row = FactorSymbol::amb(Side::X, m, m as i64);
            let col = FactorSymbol::dual_block(Side::S, m, 0);
            (self.x.contains(f, &row) && self.s.contains(g, &col)).then_some(BoxRule::EDef(m))
        })
    }

    fn split(&self, b1: &BoxSymbol, b2: &BoxSymbol, depth: u8) -> Option<BoxRule> {
        let d = depth - 1;
        if let BoxSymbol::Tensor(f, g) = *b1 {
            for hull in self.x.hulls(f) {
                if hull.iter().all(|p| self.derive_depth(BoxSymbol::Tensor(*p, g), *b2, d).is_some()) {
                    return Some(BoxRule::Split(Side::X));
                }
            }
            for hull in self.s.hulls(g) {
                if hull.iter().all(|p| self.derive_depth(BoxSymbol::Tensor(f, *p), *b2, d).is_some()) {
                    return Some(BoxRule::Split(Side::S));
                }
            }
        }
        if let BoxSymbol::Tensor(f, g) = *b2 {
            for hull in self.x.hulls(f) {
                if hull.iter().all(|p| self.derive_depth(*b1, BoxSymbol::Tensor(*p, g), d).is_some()) {
                    return Some(BoxRule::Split(Side::X));
                }
            }
            for hull in self.s.hulls(g) {
                if hull.iter().all(|p| self.derive_depth(*b1, BoxSymbol::Tensor(f, *p), d).is_some()) {
                    return Some(BoxRule::Split(Side::S));
                }
            }
        }
        None
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn l(&self) -> usize {
        self.l
    }
}

/// One-shot box query with range checks.
pub fn hom_vanishes_box(
    b1: &BoxSymbol,
    b2: &BoxSymbol,
    spec: &ChessboardSpec,
) -> Result<TriState, ChessError> {
    spec.check_box(b1)?;
    spec.check_box(b2)?;
    Ok(BoxOracle::new(spec).hom_vanishes(b1, b2))
}

/// Refinement strategies accepted by [`mutate_region`]. `auto` uses the
/// orthogonal cover when the region admits one and `T4` otherwise.
pub const DEFAULT_REFINEMENT: &str = "auto";

pub const REFINEMENTS: &[&str] = &["perp", "T4", "T1", "T2", "auto"];

/// Left mutation of the hull of `r` through `through`, processed right to
/// left. Each step splits the mutating factor by `refinement` and adds the
/// pieces that may still receive Homs from the current region.
pub fn mutate_region(
    r: &Region,
    through: &[BoxSymbol],
    spec: &ChessboardSpec,
    refinement: &str,
) -> Result<Region, ChessError> {
    if !REFINEMENTS.contains(&refinement) {
        return Err(ChessError::UnknownTemplate(refinement.to_string()));
    }
    for b in r.iter().chain(through.iter()) {
        spec.check_box(b)?;
    }
    let oracle = BoxOracle::new(spec);
    let mut region = r.clone();
    for step in through.iter().rev() {
        let (side, fixed) = step_kind(step)?;
        region = apply_step(&oracle, &region, side, fixed, refinement);
    }
    Ok(region)
}

/// Mutating side and the fixed factor of a row or column step.
fn step_kind(step: &BoxSymbol) -> Result<(Side, FactorSymbol), ChessError> {
    match step {
        BoxSymbol::Tensor(f, g) if f.is_full() && !g.is_full() => Ok((Side::X, *g)),
        BoxSymbol::Tensor(f, g) if g.is_full() && !f.is_full() => Ok((Side::S, *f)),
        other => Err(ChessError::BadStep(*other)),
    }
}

fn apply_step(
    oracle: &BoxOracle,
    region: &Region,
    side: Side,
    fixed: FactorSymbol,
    refinement: &str,
) -> Region {
    let pieces = refine(oracle, region, side, fixed, refinement);
    let mut out = region.clone();
    for p in pieces.iter().rev() {
        let sub = match side {
            Side::X => BoxSymbol::tensor(*p, fixed),
            Side::S => BoxSymbol::tensor(fixed, *p),
        };
        if oracle.is_zero_box(&sub) || out.contains(&sub) {
            continue;
        }
        if out.iter().any(|rb| oracle.derive(&sub, rb).is_none()) {
            out.insert(sub);
        }
    }
    out
}

/// Ordered pieces (left to right) of the mutating factor.
fn refine(
    oracle: &BoxOracle,
    region: &Region,
    side: Side,
    fixed: FactorSymbol,
    refinement: &str,
) -> Vec<FactorSymbol> {
    let len = match side {
        Side::X => oracle.i,
        Side::S => oracle.l,
    };
    let t1 = || (0..len).map(|k| FactorSymbol::amb(side, k, k as i64)).collect::<Vec<_>>();
    match refinement {
        "T1" => t1(),
        "T2" => {
            let mut v = Vec::new();
            for k in 0..len {
                for j in k..len {
                    v.push(FactorSymbol::prim(side, j, k as i64));
                }
            }
            v
        }
        "T4" => match (side, fixed.kind) {
            (Side::S, FactorKind::Amb(a)) if a >= 1 && a < len && fixed.twist == a as i64 => {
                t4_components(len, a)
            }
            _ => t1(),
        },
        "perp" => perp_cover(oracle, region, side, fixed).unwrap_or_else(|| vec![FactorSymbol::full(side)]),
        _ => match perp_cover(oracle, region, side, fixed) {
            Some(p) => p,
            None => refine(oracle, region, side, fixed, "T4"),
        },
    }
}

/// `⟨M_lo, ..., M_hi, ⊥⟨M_lo..M_hi⟩⟩` over the orthogonal cover family
/// (`A_α(α)` on X, `C^L_β(β+1-l)` on S), with `[lo, hi]` the hull of the
/// members needed to cover every term the fixed factor cannot kill.
/// `None` when some region box admits no cover.
fn perp_cover(
    oracle: &BoxOracle,
    region: &Region,
    side: Side,
    fixed: FactorSymbol,
) -> Option<Vec<FactorSymbol>> {
    let (mine, other) = match side {
        Side::X => (&oracle.x, &oracle.s),
        Side::S => (&oracle.s, &oracle.x),
    };
    let len = mine.shape().len as i64;
    let member = |idx: i64| -> Option<FactorSymbol> {
        match side {
            Side::X if (0..len).contains(&idx) => Some(FactorSymbol::amb(Side::X, idx as usize, idx)),
            Side::S if (1..len).contains(&idx) => Some(FactorSymbol::amb_l(idx as usize, idx + 1 - len)),
            _ => None,
        }
    };
    let index_of = |f: FactorSymbol| -> Option<i64> {
        let idx = match side {
            Side::X => f.twist,
            Side::S => f.twist + len - 1,
        };
        let m = member(idx)?;
        mine.contains(&f, &m).then_some(idx)
    };
    let mut needed: Vec<i64> = Vec::new();
    for rb in region.iter() {
        let BoxSymbol::Tensor(fx, fs) = *rb else {
            return None;
        };
        let (target, fixed_target) = match side {
            Side::X => (fx, fs),
            Side::S => (fs, fx),
        };
        for twist in [0, -1] {
            if other.derive(&fixed, &fixed_target.shift(twist)).is_none() {
                needed.push(index_of(target.shift(twist))?);
            }
        }
    }
    let (Some(&lo), Some(&hi)) = (needed.iter().min(), needed.iter().max()) else {
        return Some(vec![FactorSymbol::full(side)]);
    };
    let mut pieces: Vec<FactorSymbol> = (lo..=hi).filter_map(member).collect();
    pieces.push(match side {
        Side::X => FactorSymbol::left_perp_span(Side::X, lo as usize, hi as usize, 0),
        Side::S => FactorSymbol::left_perp_span_l(lo as usize, hi as usize, 0),
    });
    Some(pieces)
}

/// Source box `A_k(k) ⊠ D^k` of the `π_T` staircase.
pub fn pi_t_source(k: usize) -> BoxSymbol {
    BoxSymbol::tensor(
        FactorSymbol::amb(Side::X, k, k as i64),
        FactorSymbol::dual_block(Side::S, k, 0),
    )
}

/// Source box `B^k ⊠ C^L_k(k + 1 - l)` of the `π_S` staircase.
pub fn pi_s_source(k: usize, l: usize) -> BoxSymbol {
    BoxSymbol::tensor(
        FactorSymbol::dual_block(Side::X, k, 0),
        FactorSymbol::amb_l(k, k as i64 + 1 - l as i64),
    )
}

/// `π_T` mutates through the columns `D(X) ⊠ C_β(β)`, `β = 1..l-1`.
pub fn pi_t_through(spec: &ChessboardSpec) -> Vec<BoxSymbol> {
    (1..spec.l()).map(BoxSymbol::column).collect()
}

/// `π_S` mutates through the rows `A_α(α) ⊠ D(S)`, `α = 1..i-1`.
pub fn pi_s_through(spec: &ChessboardSpec) -> Vec<BoxSymbol> {
    (1..spec.i()).map(BoxSymbol::row).collect()
}

fn range_check(what: &'static str, k: usize, lo: usize, hi: usize) -> Result<(), ChessError> {
    if k < lo || k > hi {
        Err(ChessError::OutOfRange { what, k, lo, hi })
    } else {
        Ok(())
    }
}

pub fn staircase_pi_t(k: usize, spec: &ChessboardSpec) -> Result<Region, ChessError> {
    let (i, l) = (spec.i(), spec.l());
    range_check("pi_T", k, 1, i.saturating_sub(1))?;
    let mut r = Region::new();
    if k <= l {
        for alpha in 1..k {
            for beta in 1..=alpha {
                r.insert(BoxSymbol::cell(alpha, beta));
            }
        }
    } else {
        for beta in 1..l {
            for alpha in (k - l + beta)..k {
                r.insert(BoxSymbol::cell(alpha, beta));
            }
        }
    }
    Ok(r)
}

/// Boxes in `C^L` coordinates.
pub fn staircase_pi_s(k: usize, spec: &ChessboardSpec) -> Result<Region, ChessError> {
    let (i, l) = (spec.i(), spec.l());
    range_check("pi_S", k, 1, l.saturating_sub(1))?;
    let mut r = Region::new();
    for beta in 1..k {
        let lo_alpha = 1;
        let hi_alpha = if k <= i { beta } else { (beta + i).saturating_sub(k).min(i - 1) };
        for alpha in lo_alpha..=hi_alpha {
            r.insert(BoxSymbol::cell_l(alpha, beta, l));
        }
    }
    Ok(r)
}

pub fn staircase_e(spec: &ChessboardSpec) -> Region {
    let (i, l) = (spec.i(), spec.l());
    let mut r = Region::new();
    for beta in 1..l {
        for alpha in 1..=beta.min(i.saturating_sub(1)) {
            r.insert(BoxSymbol::cell_l(alpha, beta, l));
        }
    }
    r
}
