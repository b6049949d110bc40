//! Formal one-sided category symbols and the factor-level vanishing oracle.
//!
//! Symbols never stand for actual objects. The oracle derives `Hom = 0`
//! from a fixed rule set and answers [`TriState::Unknown`] otherwise, so a
//! negative answer never claims that a Hom space is nonzero.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;

use crate::profile::LefschetzProfile;
use crate::scalar::EulerInt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    X,
    S,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::X => "X",
            Side::S => "S",
        })
    }
}

/// Variant part of a [`FactorSymbol`].
///
/// `LeftPerpAmb { lo, hi }` with twist `t` is the left orthogonal of the span
/// of `Amb(α, α + t)` for `α ∈ [lo, hi]`; the single-member case is the
/// class `⊥(A_α(α))(t)`. `LeftPerpAmbL` is the same construction over the
/// `AmbL(β, β + 1 - l + t)` family on the S side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FactorKind {
    Full,
    Amb(usize),
    AmbL(usize),
    Prim(usize),
    PrimStar(usize),
    DualBlock(usize),
    LeftPerpAmb { lo: usize, hi: usize },
    LeftPerpAmbL { lo: usize, hi: usize },
    RightPerpDual(usize),
    Zero,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FactorSymbol {
    pub side: Side,
    pub kind: FactorKind,
    pub twist: i64,
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum SymbolError {
    #[error("cross-side containment undefined: {0} vs {1}")]
    CrossSide(FactorSymbol, FactorSymbol),
    #[error("index out of range for the bound profile: {0}")]
    OutOfRange(FactorSymbol),
    #[error("symbol {0} does not exist on side {1}")]
    WrongSide(FactorSymbol, Side),
}

impl FactorSymbol {
    pub fn new(side: Side, kind: FactorKind, twist: i64) -> Self {
        match kind {
            FactorKind::Full | FactorKind::Zero => Self { side, kind, twist: 0 },
            _ => Self { side, kind, twist },
        }
    }

    pub fn full(side: Side) -> Self {
        Self::new(side, FactorKind::Full, 0)
    }

    pub fn zero(side: Side) -> Self {
        Self::new(side, FactorKind::Zero, 0)
    }

    pub fn amb(side: Side, index: usize, twist: i64) -> Self {
        Self::new(side, FactorKind::Amb(index), twist)
    }

    /// `C^L_β(t)`; S side only.
    pub fn amb_l(index: usize, twist: i64) -> Self {
        Self::new(Side::S, FactorKind::AmbL(index), twist)
    }

    pub fn prim(side: Side, index: usize, twist: i64) -> Self {
        Self::new(side, FactorKind::Prim(index), twist)
    }

    pub fn prim_star(side: Side, index: usize, twist: i64) -> Self {
        Self::new(side, FactorKind::PrimStar(index), twist)
    }

    pub fn dual_block(side: Side, index: usize, twist: i64) -> Self {
        Self::new(side, FactorKind::DualBlock(index), twist)
    }

    /// `⊥(A_α(t))`.
    pub fn left_perp_amb(side: Side, alpha: usize, twist: i64) -> Self {
        Self::new(side, FactorKind::LeftPerpAmb { lo: alpha, hi: alpha }, twist - alpha as i64)
    }

    /// Left orthogonal of `⟨Amb(α, α + shift) : α ∈ [lo, hi]⟩`.
    pub fn left_perp_span(side: Side, lo: usize, hi: usize, shift: i64) -> Self {
        Self::new(side, FactorKind::LeftPerpAmb { lo, hi }, shift)
    }

    /// Left orthogonal of `⟨AmbL(β, β + 1 - l + shift) : β ∈ [lo, hi]⟩`.
    pub fn left_perp_span_l(lo: usize, hi: usize, shift: i64) -> Self {
        Self::new(Side::S, FactorKind::LeftPerpAmbL { lo, hi }, shift)
    }

    pub fn right_perp_dual(side: Side, index: usize, twist: i64) -> Self {
        Self::new(side, FactorKind::RightPerpDual(index), twist)
    }

    pub fn is_zero(&self) -> bool {
        self.kind == FactorKind::Zero
    }

    pub fn is_full(&self) -> bool {
        self.kind == FactorKind::Full
    }

    /// Uniform twist by `O(m)`.
    pub fn shift(&self, m: i64) -> Self {
        Self::new(self.side, self.kind, self.twist + m)
    }

    /// Range check against the profile bound to this side.
    pub fn check<T: EulerInt>(&self, profile: &LefschetzProfile<T>) -> Result<(), SymbolError> {
        let len = profile.len();
        let n = profile.n;
        let ok = match self.kind {
            FactorKind::Full | FactorKind::Zero => true,
            FactorKind::Amb(a) | FactorKind::Prim(a) | FactorKind::PrimStar(a) => a < len,
            FactorKind::AmbL(b) => {
                if self.side != Side::S {
                    return Err(SymbolError::WrongSide(*self, self.side));
                }
                b >= 1 && b < len
            }
            FactorKind::DualBlock(k) | FactorKind::RightPerpDual(k) => k >= 1 && k < n,
            FactorKind::LeftPerpAmb { lo, hi } => lo <= hi && hi < len,
            FactorKind::LeftPerpAmbL { lo, hi } => {
                if self.side != Side::S {
                    return Err(SymbolError::WrongSide(*self, self.side));
                }
                lo >= 1 && lo <= hi && hi < len
            }
        };
        if ok {
            Ok(())
        } else {
            Err(SymbolError::OutOfRange(*self))
        }
    }
}

impl fmt::Display for FactorSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (amb, prim, dual, full) = match self.side {
            Side::X => ("A", "a", "B", "D(X)"),
            Side::S => ("C", "c", "D", "D(S)"),
        };
        let t = self.twist;
        match self.kind {
            FactorKind::Full => f.write_str(full),
            FactorKind::Zero => f.write_str("0"),
            FactorKind::Amb(a) => write!(f, "{amb}_{a}({t})"),
            FactorKind::AmbL(b) => write!(f, "CL_{b}({t})"),
            FactorKind::Prim(j) => write!(f, "{prim}_{j}({t})"),
            FactorKind::PrimStar(j) => write!(f, "{prim}*_{j}({t})"),
            FactorKind::DualBlock(k) => write!(f, "{dual}^{k}({t})"),
            FactorKind::RightPerpDual(k) => write!(f, "({dual}^{k})⊥({t})"),
            FactorKind::LeftPerpAmb { lo, hi } if lo == hi => {
                write!(f, "⊥{amb}_{lo}({})", lo as i64 + t)
            }
            FactorKind::LeftPerpAmb { lo, hi } => write!(f, "⊥{amb}[{lo}..{hi}]({t:+})"),
            FactorKind::LeftPerpAmbL { lo, hi } => write!(f, "⊥CL[{lo}..{hi}]({t:+})"),
        }
    }
}

/// Answer of a vanishing query. `Unknown` means "not derivable", never
/// "nonzero".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TriState {
    Vanishes,
    Unknown,
}

impl TriState {
    pub fn from_derivation<R>(d: &Option<R>) -> Self {
        if d.is_some() {
            TriState::Vanishes
        } else {
            TriState::Unknown
        }
    }
}

/// Rule label of a factor-level derivation.
pub type Rule = &'static str;

/// Profile data the oracle depends on: length and the zero pattern.
/// `N` never enters a vanishing argument.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Shape {
    pub len: usize,
    pub zero: Vec<bool>,
}

impl Shape {
    pub fn of<T: EulerInt>(p: &LefschetzProfile<T>) -> Self {
        Self { len: p.len(), zero: p.zero_mask() }
    }

    /// Shape with every block nonzero.
    pub fn generic(len: usize) -> Self {
        Self { len, zero: vec![false; len] }
    }

    fn block_zero(&self, j: usize) -> bool {
        self.zero.get(j).copied().unwrap_or(true)
    }

    fn all_zero(&self, range: std::ops::Range<usize>) -> bool {
        range.into_iter().all(|j| self.block_zero(j))
    }

    /// Profile-dependent reduction: zero blocks become `Zero`, a dual block
    /// that already exhausts `A_0` becomes `Amb(0)`.
    pub fn normalize(&self, f: FactorSymbol) -> FactorSymbol {
        let len = self.len;
        match f.kind {
            FactorKind::Prim(j) | FactorKind::PrimStar(j) if self.block_zero(j) => {
                FactorSymbol::zero(f.side)
            }
            FactorKind::DualBlock(k) => {
                let w = k.min(len);
                if self.all_zero(0..w) {
                    FactorSymbol::zero(f.side)
                } else if self.all_zero(w..len) {
                    FactorSymbol::amb(f.side, 0, f.twist)
                } else {
                    f
                }
            }
            FactorKind::RightPerpDual(k) => {
                let w = k.min(len);
                if self.all_zero(w..len) {
                    FactorSymbol::zero(f.side)
                } else if self.all_zero(0..w) {
                    FactorSymbol::amb(f.side, 0, f.twist)
                } else {
                    f
                }
            }
            _ => f,
        }
    }
}

/// Closed form of the Lefschetz semiorthogonality:
/// `Hom(Amb(a, s), Amb(b, t)) = 0` when `1 <= s - t <= a`.
pub fn r1_closed_form(a: usize, s: i64, _b: usize, t: i64) -> bool {
    let d = s - t;
    d >= 1 && d <= a as i64
}

/// Index-only containment. Twisted symbols only compare at equal twist,
/// except `Full` and `Zero`.
pub fn contains(f1: &FactorSymbol, f2: &FactorSymbol) -> Result<bool, SymbolError> {
    if f1.side != f2.side {
        return Err(SymbolError::CrossSide(*f1, *f2));
    }
    Ok(contains_same_side(f1, f2))
}

fn contains_same_side(f1: &FactorSymbol, f2: &FactorSymbol) -> bool {
    use FactorKind::*;
    if f1.is_zero() || f2.is_full() || f1 == f2 {
        return true;
    }
    if f2.is_zero() || f1.is_full() || f1.twist != f2.twist {
        return false;
    }
    match (f1.kind, f2.kind) {
        (Amb(a), Amb(b)) => a >= b,
        (AmbL(a), AmbL(b)) => a >= b,
        (Prim(j), Amb(a)) => a <= j,
        (PrimStar(j), DualBlock(k)) => j < k,
        (PrimStar(_), Amb(0)) => true,
        (DualBlock(k), DualBlock(k2)) => k <= k2,
        (DualBlock(_), Amb(0)) => true,
        (RightPerpDual(k), RightPerpDual(k2)) => k >= k2,
        (RightPerpDual(_), Amb(0)) => true,
        (LeftPerpAmb { lo, hi }, LeftPerpAmb { lo: lo2, hi: hi2 }) => lo <= lo2 && hi2 <= hi,
        (LeftPerpAmbL { lo, hi }, LeftPerpAmbL { lo: lo2, hi: hi2 }) => lo <= lo2 && hi2 <= hi,
        _ => false,
    }
}

/// Semiorthogonal sequence of formal symbols, closed under uniform twist.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionTemplate {
    pub id: String,
    pub components: Vec<FactorSymbol>,
    pub shift: i64,
}

impl DecompositionTemplate {
    pub fn twisted(&self, m: i64) -> Self {
        Self {
            id: self.id.clone(),
            components: self.components.iter().map(|c| c.shift(m)).collect(),
            shift: self.shift + m,
        }
    }
}

/// The untwisted template families for one side of length `len`.
pub fn base_templates(side: Side, len: usize) -> Vec<DecompositionTemplate> {
    let mut out = Vec::new();
    let mk = |id: String, components: Vec<FactorSymbol>| DecompositionTemplate { id, components, shift: 0 };
    out.push(mk("T1".into(), (0..len).map(|k| FactorSymbol::amb(side, k, k as i64)).collect()));
    let mut t2 = Vec::new();
    for k in 0..len {
        for j in k..len {
            t2.push(FactorSymbol::prim(side, j, k as i64));
        }
    }
    out.push(mk("T2".into(), t2));
    out.push(mk("T3".into(), (0..len).map(|j| FactorSymbol::prim_star(side, j, 0)).collect()));
    if side == Side::S {
        for k in 1..len {
            out.push(mk(format!("T4_{k}"), t4_components(len, k)));
        }
    }
    out
}

/// `⟨C^L_k(k+1-l), ..., C^L_{l-1}(0), C_0(1), ..., C_{k-1}(k)⟩`.
pub fn t4_components(l: usize, k: usize) -> Vec<FactorSymbol> {
    let li = l as i64;
    let mut c: Vec<FactorSymbol> =
        (k..l).map(|b| FactorSymbol::amb_l(b, b as i64 + 1 - li)).collect();
    c.extend((0..k).map(|j| FactorSymbol::amb(Side::S, j, j as i64 + 1)));
    c
}

/// Every template instance with uniform twist in `window`, ordered by
/// family and then by twist.
pub fn enumerate_templates<T: EulerInt>(
    profile: &LefschetzProfile<T>,
    side: Side,
    window: std::ops::RangeInclusive<i64>,
) -> Vec<DecompositionTemplate> {
    let mut out = Vec::new();
    for base in base_templates(side, profile.len()) {
        for m in window.clone() {
            out.push(base.twisted(m));
        }
    }
    out
}

/// Recursion budget for hull splitting inside factor queries.
pub const FACTOR_DEPTH: u8 = 3;

type CacheMap = HashMap<(FactorSymbol, FactorSymbol, u8), Option<Rule>>;

struct ShapeData {
    templates: Vec<(Rule, Vec<FactorSymbol>)>,
    cache: RefCell<CacheMap>,
}

thread_local! {
    static REGISTRY: RefCell<HashMap<(Side, Shape), Rc<ShapeData>>> = RefCell::new(HashMap::new());
}

fn family_label(id: &str) -> Rule {
    match id.split('_').next().unwrap_or("") {
        "T1" => "T1",
        "T2" => "T2",
        "T3" => "T3",
        _ => "T4",
    }
}

/// Factor-level oracle for one side of a spec.
///
/// Results are memoized per thread and per `(side, shape)`, so repeated
/// specs that differ only in `N` share all work.
#[derive(Clone)]
pub struct FactorOracle {
    side: Side,
    shape: Shape,
    data: Rc<ShapeData>,
}

impl FactorOracle {
    pub fn new(side: Side, shape: Shape) -> Self {
        let data = REGISTRY.with(|r| {
            r.borrow_mut()
                .entry((side, shape.clone()))
                .or_insert_with(|| {
                    let templates = base_templates(side, shape.len)
                        .into_iter()
                        .map(|t| {
                            let comps = t.components.iter().map(|c| shape.normalize(*c)).collect();
                            (family_label(&t.id), comps)
                        })
                        .collect();
                    Rc::new(ShapeData { templates, cache: RefCell::new(HashMap::new()) })
                })
                .clone()
        });
        Self { side, shape, data }
    }

    pub fn for_profile<T: EulerInt>(side: Side, p: &LefschetzProfile<T>) -> Self {
        Self::new(side, Shape::of(p))
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn normalize(&self, f: FactorSymbol) -> FactorSymbol {
        self.shape.normalize(f)
    }

    /// Containment after profile normalization.
    pub fn contains(&self, f1: &FactorSymbol, f2: &FactorSymbol) -> bool {
        contains_same_side(&self.normalize(*f1), &self.normalize(*f2))
    }

    pub fn hom_vanishes(&self, f1: &FactorSymbol, f2: &FactorSymbol) -> TriState {
        TriState::from_derivation(&self.derive(f1, f2))
    }

    /// Rule that discharges `Hom(f1, f2) = 0`, if any.
    pub fn derive(&self, f1: &FactorSymbol, f2: &FactorSymbol) -> Option<Rule> {
        self.derive_depth(*f1, *f2, FACTOR_DEPTH)
    }

    fn derive_depth(&self, f1: FactorSymbol, f2: FactorSymbol, depth: u8) -> Option<Rule> {
        let a = self.normalize(f1);
        let b = self.normalize(f2);
        if a.is_zero() || b.is_zero() {
            return Some("zero");
        }
        if a == b {
            return None;
        }
        // Twist equivariance: only the relative twist matters.
        let m = if a.is_full() { b.twist } else { a.twist };
        let (a, b) = (a.shift(-m), b.shift(-m));
        let key = (a, b, depth);
        if let Some(hit) = self.data.cache.borrow().get(&key) {
            return *hit;
        }
        let out = self
            .direct_lifted(a, b)
            .or_else(|| if depth > 0 { self.serre(a, b, depth) } else { None })
            .or_else(|| if depth > 0 { self.split(a, b, depth) } else { None });
        self.data.cache.borrow_mut().insert(key, out);
        out
    }

    /// Containers of `f` at the same twist, `f` itself first.
    fn ups(&self, f: FactorSymbol) -> Vec<FactorSymbol> {
        let side = f.side;
        let t = f.twist;
        let len = self.shape.len;
        let mut out = vec![f];
        let push = |g: FactorSymbol, out: &mut Vec<FactorSymbol>| {
            let g = self.normalize(g);
            if !g.is_zero() && !out.contains(&g) {
                out.push(g);
            }
        };
        match f.kind {
            FactorKind::Amb(a) => {
                for a2 in (0..a).rev() {
                    push(FactorSymbol::amb(side, a2, t), &mut out);
                }
            }
            FactorKind::AmbL(b) => {
                for b2 in (1..b).rev() {
                    push(FactorSymbol::amb_l(b2, t), &mut out);
                }
            }
            FactorKind::Prim(j) => {
                for a2 in (0..=j).rev() {
                    push(FactorSymbol::amb(side, a2, t), &mut out);
                }
            }
            FactorKind::PrimStar(j) => {
                for k in j + 1..len {
                    push(FactorSymbol::dual_block(side, k, t), &mut out);
                }
                push(FactorSymbol::amb(side, 0, t), &mut out);
            }
            FactorKind::DualBlock(k) => {
                for k2 in k + 1..len {
                    push(FactorSymbol::dual_block(side, k2, t), &mut out);
                }
                push(FactorSymbol::amb(side, 0, t), &mut out);
            }
            FactorKind::RightPerpDual(_) => push(FactorSymbol::amb(side, 0, t), &mut out),
            _ => {}
        }
        out
    }

    fn direct_lifted(&self, a: FactorSymbol, b: FactorSymbol) -> Option<Rule> {
        let ua = self.ups(a);
        let ub = self.ups(b);
        for (i1, c1) in ua.iter().enumerate() {
            for (i2, c2) in ub.iter().enumerate() {
                if let Some(r) = self.atomic(*c1, *c2) {
                    return Some(if i1 == 0 && i2 == 0 { r } else { lifted(r) });
                }
            }
        }
        None
    }

    fn atomic(&self, c1: FactorSymbol, c2: FactorSymbol) -> Option<Rule> {
        use FactorKind::*;
        let l = self.shape.len as i64;
        match (c1.kind, c2.kind) {
            (Amb(a), Amb(b)) if r1_closed_form(a, c1.twist, b, c2.twist) => return Some("R1"),
            (AmbL(a), AmbL(b)) if r1_closed_form(a, c1.twist, b, c2.twist) => return Some("R1L"),
            (Prim(p), DualBlock(q)) if c1.twist == c2.twist + p as i64 + 1 && q <= p => {
                return Some("R2")
            }
            (Prim(p), Prim(q)) if c1.twist == c2.twist && p > q => return Some("R3"),
            (LeftPerpAmb { lo, hi }, Amb(a))
                if (lo..=hi).contains(&a) && c2.twist == a as i64 + c1.twist =>
            {
                return Some("R4")
            }
            (LeftPerpAmbL { lo, hi }, AmbL(b))
                if (lo..=hi).contains(&b) && c2.twist == b as i64 + 1 - l + c1.twist =>
            {
                return Some("R4")
            }
            (_, RightPerpDual(k)) => {
                let bound = FactorSymbol::dual_block(c1.side, k, c2.twist);
                if contains_same_side(&c1, &self.normalize(bound)) {
                    return Some("R5");
                }
                if let Prim(p) = c1.kind {
                    if p < k && c1.twist == c2.twist + p as i64 + 1 {
                        return Some("R5adj");
                    }
                }
            }
            _ => {}
        }
        self.template_rule(c1, c2)
    }

    /// Vanishes when a uniformly twisted template puts `c2` strictly to the
    /// left of `c1`.
    fn template_rule(&self, c1: FactorSymbol, c2: FactorSymbol) -> Option<Rule> {
        for (label, comps) in &self.data.templates {
            for (j, comp) in comps.iter().enumerate() {
                if comp.kind != c1.kind || comp.is_zero() {
                    continue;
                }
                let m = c1.twist - comp.twist;
                if comps[..j].iter().any(|e| !e.is_zero() && e.shift(m) == c2) {
                    return Some(label);
                }
            }
        }
        None
    }

    /// `Hom(F, S(G)) = Hom(G, F)^*` with `C^L_β(t) = S(C_β(l + t))`.
    fn serre(&self, a: FactorSymbol, b: FactorSymbol, depth: u8) -> Option<Rule> {
        if self.side != Side::S || matches!(a.kind, FactorKind::AmbL(_)) {
            return None;
        }
        let l = self.shape.len as i64;
        for c2 in self.ups(b) {
            if let FactorKind::AmbL(beta) = c2.kind {
                let pre = FactorSymbol::amb(Side::S, beta, c2.twist + l);
                if self.derive_depth(pre, a, depth - 1).is_some() {
                    return Some("Serre");
                }
            }
        }
        None
    }

    /// Hull decomposition of one argument; every piece must vanish.
    fn split(&self, a: FactorSymbol, b: FactorSymbol, depth: u8) -> Option<Rule> {
        for pieces in self.hulls(a) {
            if pieces.iter().all(|p| self.derive_depth(*p, b, depth - 1).is_some()) {
                return Some("D");
            }
        }
        for pieces in self.hulls(b) {
            if pieces.iter().all(|p| self.derive_depth(a, *p, depth - 1).is_some()) {
                return Some("D");
            }
        }
        None
    }

    /// Alternative generating sets of `f`.
    pub fn hulls(&self, f: FactorSymbol) -> Vec<Vec<FactorSymbol>> {
        let side = f.side;
        let len = self.shape.len;
        let t = f.twist;
        let mut out = Vec::new();
        match f.kind {
            FactorKind::Amb(a) => {
                let mut v = vec![FactorSymbol::prim(side, a, t)];
                if a + 1 < len {
                    v.push(FactorSymbol::amb(side, a + 1, t));
                }
                out.push(v);
                if a == 0 {
                    out.push((0..len).map(|j| FactorSymbol::prim_star(side, j, t)).collect());
                }
            }
            FactorKind::DualBlock(k) => {
                out.push((0..k.min(len)).map(|j| FactorSymbol::prim_star(side, j, t)).collect());
            }
            FactorKind::Prim(j) => {
                // Triangle of α_0^*: a_j(j+1) ⊆ ⟨α_0^* a_j(j+1), A_1(1), ..., A_{i-1}(i-1)⟩.
                let base = t - j as i64 - 1;
                let mut v = vec![FactorSymbol::prim_star(side, j, base)];
                v.extend((1..len).map(|r| FactorSymbol::amb(side, r, base + r as i64)));
                out.push(v);
            }
            FactorKind::Full => {
                out.push((0..len).map(|k| FactorSymbol::amb(side, k, k as i64)).collect());
            }
            _ => {}
        }
        out
    }
}

fn lifted(r: Rule) -> Rule {
    match r {
        "R1" => "M:R1",
        "R1L" => "M:R1L",
        "R2" => "M:R2",
        "R3" => "M:R3",
        "R4" => "M:R4",
        "R5" => "M:R5",
        "R5adj" => "M:R5adj",
        "T1" => "M:T1",
        "T2" => "M:T2",
        "T3" => "M:T3",
        "T4" => "M:T4",
        other => other,
    }
}

/// One-shot query against a profile bound to `side`.
pub fn hom_vanishes_factor<T: EulerInt>(
    f1: &FactorSymbol,
    f2: &FactorSymbol,
    side_profile: &LefschetzProfile<T>,
) -> Result<TriState, SymbolError> {
    if f1.side != f2.side {
        return Err(SymbolError::CrossSide(*f1, *f2));
    }
    f1.check(side_profile)?;
    f2.check(side_profile)?;
    Ok(FactorOracle::for_profile(f1.side, side_profile).hom_vanishes(f1, f2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::profile::LefschetzProfile;

    fn generic(len: usize, n: usize) -> LefschetzProfile<i64> {
        LefschetzProfile::from_evector("g", n, &vec![1; len])
    }

    #[test]
    fn containment_examples() {
        let x = Side::X;
        assert!(contains(&FactorSymbol::amb(x, 3, 2), &FactorSymbol::amb(x, 1, 2)).unwrap());
        assert!(contains(&FactorSymbol::dual_block(x, 2, 0), &FactorSymbol::dual_block(x, 5, 0))
            .unwrap());
        assert!(!contains(&FactorSymbol::amb(x, 1, 2), &FactorSymbol::amb(x, 1, 3)).unwrap());
        assert!(contains(&FactorSymbol::full(x), &FactorSymbol::full(x).shift(4)).unwrap());
        let err = contains(&FactorSymbol::amb(Side::X, 0, 0), &FactorSymbol::amb(Side::S, 0, 0));
        assert!(matches!(err, Err(SymbolError::CrossSide(..))));
    }

    #[test]
    fn oracle_examples() {
        let p = generic(5, 12);
        let x = Side::X;
        let q = |a, b| hom_vanishes_factor(&a, &b, &p).unwrap();
        assert_eq!(q(FactorSymbol::amb(x, 3, 3), FactorSymbol::amb(x, 1, 1)), TriState::Vanishes);
        assert_eq!(q(FactorSymbol::amb(x, 2, 0), FactorSymbol::amb(x, 2, 0)), TriState::Unknown);
        assert_eq!(
            q(FactorSymbol::prim(x, 3, 4), FactorSymbol::dual_block(x, 2, 0)),
            TriState::Vanishes
        );
    }

    #[test]
    fn out_of_range_is_an_error() {
        let p = generic(3, 8);
        let r = hom_vanishes_factor(&FactorSymbol::amb(Side::X, 3, 0), &FactorSymbol::zero(Side::X), &p);
        assert!(matches!(r, Err(SymbolError::OutOfRange(_))));
    }

    #[test]
    fn template_counts() {
        let p = generic(3, 8);
        assert_eq!(enumerate_templates(&p, Side::S, -1..=1).len(), 15);
        let one = generic(1, 4);
        let t = enumerate_templates(&one, Side::X, 0..=0);
        assert_eq!(t[0].components, t[1].components.iter().map(|c| FactorSymbol::amb(Side::X, 0, c.twist)).collect::<Vec<_>>());
    }

    #[test]
    fn zero_blocks_normalize() {
        let p = LefschetzProfile::from_evector("r", 10, &[0i64, 0, 0, 0, 2]);
        let sh = Shape::of(&p);
        assert!(sh.normalize(FactorSymbol::dual_block(Side::X, 3, 0)).is_zero());
        assert_eq!(sh.normalize(FactorSymbol::dual_block(Side::X, 5, 1)), FactorSymbol::amb(Side::X, 0, 1));
        assert!(sh.normalize(FactorSymbol::prim(Side::X, 1, 0)).is_zero());
    }

    #[test]
    fn perp_class_against_its_member() {
        let o = FactorOracle::new(Side::X, Shape::generic(5));
        let lp = FactorSymbol::left_perp_amb(Side::X, 2, 1);
        assert_eq!(o.derive(&lp, &FactorSymbol::amb(Side::X, 3, 1)), Some("M:R4"));
        assert_eq!(o.derive(&lp, &FactorSymbol::amb(Side::X, 2, 1)), Some("R4"));
    }
}
