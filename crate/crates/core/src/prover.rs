//! Replays the fully-faithfulness and generation arguments for concrete
//! parameters as a list of box-level vanishing obligations.
//!
//! Every obligation is discharged by the box oracle or recorded as failed;
//! no deeper search is attempted. The trace text is stable across runs.

use std::collections::BTreeSet;
use std::fmt;

use crate::chessboard::{
    mutate_region, pi_s_source, pi_s_through, pi_t_source, pi_t_through, staircase_e,
    staircase_pi_s, staircase_pi_t, BoxOracle, BoxRule, BoxSymbol, ChessboardSpec, Region,
    DEFAULT_REFINEMENT,
};
use crate::symbols::{FactorSymbol, Side};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Phase {
    FfPiT,
    FfPiS,
    GenerationStep1,
    GenerationStep2,
    GenerationFinal,
}

impl Phase {
    pub const ALL: [Phase; 5] = [
        Phase::FfPiT,
        Phase::FfPiS,
        Phase::GenerationStep1,
        Phase::GenerationStep2,
        Phase::GenerationFinal,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Phase::FfPiT => "FF_piT",
            Phase::FfPiS => "FF_piS",
            Phase::GenerationStep1 => "Generation_Step1",
            Phase::GenerationStep2 => "Generation_Step2",
            Phase::GenerationFinal => "Generation_Final",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|p| p.as_str().eq_ignore_ascii_case(s))
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Suffix marking an obligation that closes a step the argument leaves implicit.
pub const ELIDED: &str = ":elided";

/// Rule id for the standing assumption on `B^β ⊠ C^L_β` components.
pub const HYP_COND_B: &str = "hyp:cond_B";

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Claim {
    Vanish { source: BoxSymbol, target: BoxSymbol },
    /// Taken as an assumption, never re-derived.
    Hypothesis { source: BoxSymbol, target: BoxSymbol },
    RegionWithin { label: String, computed: Region, bound: Region },
    AliveEquals { alive: Region, expected: Region },
}

impl Claim {
    fn source_text(&self) -> String {
        match self {
            Claim::Vanish { source, .. } | Claim::Hypothesis { source, .. } => source.to_string(),
            Claim::RegionWithin { label, .. } => format!("mutate({label})"),
            Claim::AliveEquals { alive, .. } => format!("alive[{}]", alive.len()),
        }
    }

    fn target_text(&self) -> String {
        match self {
            Claim::Vanish { target, .. } | Claim::Hypothesis { target, .. } => target.to_string(),
            Claim::RegionWithin { bound, .. } => format!("region[{}]", bound.len()),
            Claim::AliveEquals { expected, .. } => format!("staircase_E+b^R[{}]", expected.len()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Discharged(String),
    Failed,
}

impl Status {
    pub fn is_discharged(&self) -> bool {
        matches!(self, Status::Discharged(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofObligation {
    pub phase: Phase,
    pub claim: Claim,
    pub status: Status,
}

impl ProofObligation {
    pub fn rule(&self) -> &str {
        match &self.status {
            Status::Discharged(r) => r,
            Status::Failed => "-",
        }
    }
}

impl fmt::Display for ProofObligation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} | {} | {} | {} | {}",
            self.phase,
            self.claim.source_text(),
            self.claim.target_text(),
            self.rule(),
            if self.status.is_discharged() { "discharged" } else { "failed" }
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofTrace {
    pub spec: ChessboardSpec,
    pub obligations: Vec<ProofObligation>,
}

impl ProofTrace {
    pub fn new(spec: ChessboardSpec) -> Self {
        Self { spec, obligations: Vec::new() }
    }

    pub fn success(&self) -> bool {
        self.obligations.iter().all(|o| o.status.is_discharged())
    }

    pub fn failed(&self) -> impl Iterator<Item = &ProofObligation> {
        self.obligations.iter().filter(|o| !o.status.is_discharged())
    }

    pub fn phases(&self) -> BTreeSet<Phase> {
        self.obligations.iter().map(|o| o.phase).collect()
    }

    pub fn filter_phases(&self, keep: &[Phase]) -> ProofTrace {
        ProofTrace {
            spec: self.spec.clone(),
            obligations: self.obligations.iter().filter(|o| keep.contains(&o.phase)).cloned().collect(),
        }
    }

    pub fn extend(&mut self, other: ProofTrace) {
        self.obligations.extend(other.obligations);
    }

    /// One line per obligation.
    pub fn to_text(&self) -> String {
        self.obligations.iter().map(|o| format!("{o}\n")).collect()
    }
}

/// Collects obligations against one oracle.
struct Recorder {
    oracle: BoxOracle,
    trace: ProofTrace,
}

impl Recorder {
    fn new(spec: &ChessboardSpec) -> Self {
        Self { oracle: BoxOracle::new(spec), trace: ProofTrace::new(spec.clone()) }
    }

    fn push(&mut self, phase: Phase, claim: Claim, status: Status) {
        self.trace.obligations.push(ProofObligation { phase, claim, status });
    }

    fn vanish(&mut self, phase: Phase, source: BoxSymbol, target: BoxSymbol) -> bool {
        self.vanish_tagged(phase, source, target, "")
    }

    fn vanish_tagged(&mut self, phase: Phase, source: BoxSymbol, target: BoxSymbol, tag: &str) -> bool {
        let status = match self.oracle.derive(&source, &target) {
            Some(rule) => Status::Discharged(format!("{rule}{tag}")),
            None => Status::Failed,
        };
        let ok = status.is_discharged();
        self.push(phase, Claim::Vanish { source, target }, status);
        ok
    }

    fn region(&mut self, phase: Phase, label: String, computed: Region, bound: Region) {
        let status = if computed.is_subset(&bound) {
            Status::Discharged(format!("mutate:{DEFAULT_REFINEMENT}"))
        } else {
            Status::Failed
        };
        self.push(phase, Claim::RegionWithin { label, computed, bound }, status);
    }
}

fn singleton(b: BoxSymbol) -> Region {
    [b].into_iter().collect()
}

/// Images of `A_k(k) ⊠ D^k` stay semiorthogonal under `π_T`.
pub fn check_ff_pi_t(spec: &ChessboardSpec) -> ProofTrace {
    let mut rec = Recorder::new(spec);
    let through = pi_t_through(spec);
    for k in 1..spec.i() {
        let src = pi_t_source(k);
        let stair = staircase_pi_t(k, spec).expect("k in range");
        let computed = mutate_region(&singleton(src), &through, spec, DEFAULT_REFINEMENT)
            .expect("spec-bound boxes");
        rec.region(Phase::FfPiT, format!("pi_T,k={k}"), computed, singleton(src).union(&stair));
        for m in k..spec.i() {
            for b in stair.iter() {
                rec.vanish(Phase::FfPiT, pi_t_source(m), *b);
            }
        }
    }
    rec.trace
}

/// Images of `B^k ⊠ C^L_k(k+1-l)` and of `E` stay semiorthogonal under `π_S`.
pub fn check_ff_pi_s(spec: &ChessboardSpec) -> ProofTrace {
    let mut rec = Recorder::new(spec);
    let l = spec.l();
    let through = pi_s_through(spec);
    for k in 1..l {
        let src = pi_s_source(k, l);
        let stair = staircase_pi_s(k, spec).expect("k in range");
        let computed = mutate_region(&singleton(src), &through, spec, DEFAULT_REFINEMENT)
            .expect("spec-bound boxes");
        rec.region(Phase::FfPiS, format!("pi_S,k={k}"), computed, singleton(src).union(&stair));
        for m in k..l {
            for b in stair.iter() {
                rec.vanish(Phase::FfPiS, pi_s_source(m, l), *b);
            }
        }
        for b in stair.iter() {
            rec.vanish(Phase::FfPiS, BoxSymbol::Eprim, *b);
        }
    }
    let stair_e = staircase_e(spec);
    let computed = mutate_region(&singleton(BoxSymbol::Eprim), &through, spec, DEFAULT_REFINEMENT)
        .expect("spec-bound boxes");
    rec.region(Phase::FfPiS, "pi_S,E".to_string(), computed, singleton(BoxSymbol::Eprim).union(&stair_e));
    for b in stair_e.iter() {
        rec.vanish(Phase::FfPiS, BoxSymbol::Eprim, *b);
    }
    rec.trace
}

/// `(β, α)` pairs in Zig-Zag order: `β` ascending, then `α` from `i-1` down
/// to `β+1`.
pub fn zigzag_order(spec: &ChessboardSpec) -> Vec<(usize, usize)> {
    let (i, l) = (spec.i(), spec.l());
    let mut out = Vec::new();
    for beta in 1..l {
        for alpha in (beta + 1..i).rev() {
            out.push((beta, alpha));
        }
    }
    out
}

/// `b^L_β` piece of the `α = 0` column.
pub fn b_left(beta: usize, l: usize) -> BoxSymbol {
    BoxSymbol::tensor(
        FactorSymbol::right_perp_dual(Side::X, beta, 0),
        FactorSymbol::amb_l(beta, beta as i64 + 1 - l as i64),
    )
}

/// `b^R_β` piece of the `α = 0` column.
pub fn b_right(beta: usize, l: usize) -> BoxSymbol {
    pi_s_source(beta, l)
}

pub fn check_generation(spec: &ChessboardSpec) -> ProofTrace {
    check_generation_with_order(spec, &zigzag_order(spec))
}

/// Generation replay with an explicit Step 1 order; any order other than
/// Zig-Zag may leave obligations undischarged.
pub fn check_generation_with_order(spec: &ChessboardSpec, order: &[(usize, usize)]) -> ProofTrace {
    let mut rec = Recorder::new(spec);
    let (i, l) = (spec.i(), spec.l());
    let li = l as i64;
    let cs = |beta: usize| FactorSymbol::amb(Side::S, beta, beta as i64);

    // Components of a test object b in D_{Y_S} right orthogonal to everything.
    let mut alive = Region::new();
    for beta in 1..l {
        for alpha in 1..i {
            alive.insert(BoxSymbol::cell_l(alpha, beta, l));
        }
        for b in [b_left(beta, l), b_right(beta, l)] {
            if !rec.oracle.is_zero_box(&b) {
                alive.insert(b);
            }
        }
    }

    for &(beta, alpha) in order {
        let killed = BoxSymbol::cell_l(alpha, beta, l);
        let perp = BoxSymbol::tensor(FactorSymbol::left_perp_amb(Side::X, alpha, alpha as i64 - 1), cs(beta));
        rec.vanish(Phase::GenerationStep1, perp, killed);
        let src = BoxSymbol::tensor(FactorSymbol::amb(Side::X, alpha, alpha as i64 - 1), cs(beta));
        let others: Vec<BoxSymbol> = alive.iter().filter(|b| **b != killed).copied().collect();
        for b in others {
            rec.vanish(Phase::GenerationStep1, src, b);
        }
        rec.vanish(Phase::GenerationStep1, src, BoxSymbol::DYS);
        alive.boxes.remove(&killed);
    }

    for beta in 1..l {
        let bl = b_left(beta, l);
        if rec.oracle.is_zero_box(&bl) {
            continue;
        }
        for j in 1..i {
            let src = BoxSymbol::tensor(FactorSymbol::amb(Side::X, j, j as i64 - 1), cs(beta));
            rec.vanish(Phase::GenerationStep2, src, bl);
        }
        for p in 0..beta.min(i) {
            let src = BoxSymbol::tensor(FactorSymbol::prim(Side::X, p, p as i64), cs(beta));
            rec.vanish(Phase::GenerationStep2, src, bl);
        }
        for p in beta..i {
            let src = BoxSymbol::tensor(FactorSymbol::prim(Side::X, p, p as i64), cs(beta));
            let others: Vec<BoxSymbol> = alive.iter().filter(|b| **b != bl).copied().collect();
            for b in others {
                rec.vanish(Phase::GenerationStep2, src, b);
            }
            rec.vanish_tagged(Phase::GenerationStep2, src, BoxSymbol::DYS, ELIDED);
        }
        alive.boxes.remove(&bl);
    }

    let rights: Region = (1..l).map(|b| b_right(b, l)).filter(|b| !rec.oracle.is_zero_box(b)).collect();
    let expected = staircase_e(spec).union(&rights);
    let status = if alive == expected {
        Status::Discharged("induction".to_string())
    } else {
        Status::Failed
    };
    rec.push(Phase::GenerationFinal, Claim::AliveEquals { alive: alive.clone(), expected }, status);
    for b in alive.iter() {
        if rights.contains(b) {
            rec.push(
                Phase::GenerationFinal,
                Claim::Hypothesis { source: *b, target: BoxSymbol::DYS },
                Status::Discharged(HYP_COND_B.to_string()),
            );
        } else {
            rec.vanish(Phase::GenerationFinal, *b, BoxSymbol::DYS);
        }
    }
    // Columns past β are left orthogonal to column β.
    for beta in 1..l {
        for later in beta + 1..l {
            let col = |b: usize| {
                BoxSymbol::tensor(FactorSymbol::full(Side::X), FactorSymbol::amb_l(b, b as i64 + 1 - li))
            };
            rec.vanish(Phase::GenerationFinal, col(later), col(beta));
        }
    }
    rec.trace
}

/// All three replays concatenated.
pub fn check_main_theorem(spec: &ChessboardSpec) -> ProofTrace {
    let mut t = check_ff_pi_t(spec);
    t.extend(check_ff_pi_s(spec));
    t.extend(check_generation(spec));
    t
}

/// Re-derives every discharged obligation from scratch. Returns the indices
/// whose recorded justification does not reproduce. Hypotheses are skipped.
pub fn reverify(trace: &ProofTrace) -> Vec<usize> {
    let oracle = BoxOracle::new(&trace.spec);
    let mut bad = Vec::new();
    for (idx, o) in trace.obligations.iter().enumerate() {
        let Status::Discharged(rule) = &o.status else {
            continue;
        };
        let ok = match &o.claim {
            Claim::Vanish { source, target } => {
                let base = rule.strip_suffix(ELIDED).unwrap_or(rule);
                oracle.derive(source, target).map(|r: BoxRule| r.to_string()).as_deref() == Some(base)
            }
            Claim::Hypothesis { .. } => true,
            Claim::RegionWithin { computed, bound, .. } => computed.is_subset(bound),
            Claim::AliveEquals { alive, expected } => alive == expected,
        };
        if !ok {
            bad.push(idx);
        }
    }
    bad
}
