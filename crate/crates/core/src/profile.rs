//! Lefschetz profiles.
//!
//! A profile records the Hochschild Euler characteristic of every primitive
//! block `a_0, ..., a_{i-1}` of a Lefschetz decomposition together with the
//! ambient dimension `N`. The ascending chain `A_0 ⊇ A_1 ⊇ ...` is implicit in
//! the block index: `A_k` is spanned by the blocks with index `>= k`.
//!
//! The stored e-vector is always read in Lefschetz order, whatever the
//! orientation tag says. Dualization reverses the vector inside the strip of
//! width `N - 1` and flips the tag.

use std::collections::BTreeSet;
use std::fmt;

use crate::scalar::EulerInt;

/// Suffix toggled on labels by [`LefschetzProfile::dualize`].
pub const DUAL_SUFFIX: &str = "^v";

/// Label prefix for zero blocks regenerated by dualization.
pub const FILLER_PREFIX: &str = "zero_";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    Lefschetz,
    DualLefschetz,
}

impl Orientation {
    pub fn flipped(self) -> Self {
        match self {
            Orientation::Lefschetz => Orientation::DualLefschetz,
            Orientation::DualLefschetz => Orientation::Lefschetz,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Orientation::Lefschetz => "lefschetz",
            Orientation::DualLefschetz => "dual",
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One primitive block.
///
/// `nonzero` marks a block that is a nonzero category even though its Euler
/// characteristic vanishes. A block is the zero category exactly when
/// `euler == 0` and the marker is off.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrimitiveBlock<T> {
    pub label: String,
    pub euler: T,
    pub nonzero: bool,
}

impl<T: EulerInt> PrimitiveBlock<T> {
    /// Block whose marker follows its Euler characteristic.
    pub fn new(label: impl Into<String>, euler: T) -> Self {
        let nonzero = !euler.is_zero();
        Self { label: label.into(), euler, nonzero }
    }

    pub fn with_marker(label: impl Into<String>, euler: T, nonzero: bool) -> Self {
        Self { label: label.into(), euler, nonzero }
    }

    pub fn is_zero(&self) -> bool {
        self.euler.is_zero() && !self.nonzero
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LefschetzProfile<T> {
    pub name: String,
    pub n: usize,
    pub orientation: Orientation,
    pub blocks: Vec<PrimitiveBlock<T>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ViolationKind {
    Empty,
    TooLong,
    NotMinimal,
    EmptyLabel,
    DuplicateLabel,
    MarkerContradiction,
    SmallAmbient,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub reason: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.reason)
    }
}

/// Outcome of [`LefschetzProfile::validate`]. Warnings never make a profile
/// invalid.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    pub warnings: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ProfileError {
    #[error("invalid profile `{name}`: {reasons}")]
    Invalid { name: String, reasons: String },
}

impl<T: EulerInt> LefschetzProfile<T> {
    pub fn new(
        name: impl Into<String>,
        n: usize,
        orientation: Orientation,
        blocks: Vec<PrimitiveBlock<T>>,
    ) -> Self {
        Self { name: name.into(), n, orientation, blocks }
    }

    /// Lefschetz-oriented profile with labels `a0, a1, ...`.
    pub fn from_evector(name: impl Into<String>, n: usize, evector: &[T]) -> Self {
        let blocks = evector
            .iter()
            .enumerate()
            .map(|(j, e)| PrimitiveBlock::new(format!("a{j}"), e.clone()))
            .collect();
        Self::new(name, n, Orientation::Lefschetz, blocks)
    }

    /// Rectangular profile: `len - 1` zero blocks followed by one block.
    pub fn rectangular(name: impl Into<String>, n: usize, len: usize, euler: T) -> Self {
        let mut e = vec![T::zero(); len];
        if let Some(last) = e.last_mut() {
            *last = euler;
        }
        Self::from_evector(name, n, &e)
    }

    /// Number of blocks, the length `i` of the decomposition.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn evector(&self) -> Vec<T> {
        self.blocks.iter().map(|b| b.euler.clone()).collect()
    }

    /// Zero-category pattern of the blocks.
    pub fn zero_mask(&self) -> Vec<bool> {
        self.blocks.iter().map(PrimitiveBlock::is_zero).collect()
    }

    /// Smallest index carrying a nonzero block.
    pub fn j_min(&self) -> Option<usize> {
        self.blocks.iter().position(|b| !b.is_zero())
    }

    /// All blocks below the last one are zero categories.
    pub fn is_rectangular(&self) -> bool {
        match self.blocks.split_last() {
            Some((_, rest)) => rest.iter().all(PrimitiveBlock::is_zero),
            None => false,
        }
    }

    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let i = self.len();
        if i == 0 {
            report.violations.push(Violation {
                kind: ViolationKind::Empty,
                reason: "1 ≤ i fails: profile has no blocks".into(),
            });
        }
        if self.n == 0 || i > self.n.saturating_sub(1) {
            report.violations.push(Violation {
                kind: ViolationKind::TooLong,
                reason: format!("i ≤ N−1 fails: i = {i}, N = {}", self.n),
            });
        }
        if let Some(last) = self.blocks.last() {
            if last.is_zero() {
                report.violations.push(Violation {
                    kind: ViolationKind::NotMinimal,
                    reason: format!(
                        "length not minimal: last block `{}` is zero without a nonzero marker",
                        last.label
                    ),
                });
            }
        }
        let mut seen = BTreeSet::new();
        for (j, b) in self.blocks.iter().enumerate() {
            if b.label.is_empty() {
                report.violations.push(Violation {
                    kind: ViolationKind::EmptyLabel,
                    reason: format!("block {j} has an empty label"),
                });
            } else if !seen.insert(b.label.as_str()) {
                report.violations.push(Violation {
                    kind: ViolationKind::DuplicateLabel,
                    reason: format!("label `{}` repeats at block {j}", b.label),
                });
            }
            if !b.euler.is_zero() && !b.nonzero {
                report.violations.push(Violation {
                    kind: ViolationKind::MarkerContradiction,
                    reason: format!(
                        "block `{}` has euler {} but is marked as the zero category",
                        b.label, b.euler
                    ),
                });
            }
        }
        if self.n < 3 {
            report.warnings.push(Violation {
                kind: ViolationKind::SmallAmbient,
                reason: format!("N = {} < 3: the image cannot have dimension 2", self.n),
            });
        }
        report
    }

    pub fn ensure_valid(&self) -> Result<(), ProfileError> {
        let report = self.validate();
        if report.is_valid() {
            Ok(())
        } else {
            let reasons: Vec<String> = report.violations.iter().map(|v| v.reason.clone()).collect();
            Err(ProfileError::Invalid { name: self.name.clone(), reasons: reasons.join("; ") })
        }
    }

    /// `χ^H(A_k)`: sum of the blocks with index `>= k`.
    pub fn ambient_euler(&self, k: usize) -> T {
        self.blocks.iter().skip(k).fold(T::zero(), |acc, b| acc + b.euler.clone())
    }

    /// `χ^H(A_0)`.
    pub fn euler_ambient(&self) -> T {
        self.ambient_euler(0)
    }

    /// Euler characteristic of the whole decomposition.
    ///
    /// For the Lefschetz reading block `j` occurs in the columns `0..=j`. For
    /// the dual reading the profile is presented by the blocks
    /// `b_j = e_{N-2-j}`, and block `b_j` occupies the `N-1-j` columns `j+1..N-1`.
    pub fn euler_total(&self) -> T {
        match self.orientation {
            Orientation::Lefschetz => self
                .blocks
                .iter()
                .enumerate()
                .fold(T::zero(), |acc, (j, b)| acc + weight::<T>(j + 1) * b.euler.clone()),
            Orientation::DualLefschetz => {
                let n = self.n;
                let mut acc = T::zero();
                for j in 0..n.saturating_sub(1) {
                    let src = n - 2 - j;
                    if let Some(b) = self.blocks.get(src) {
                        acc = acc + weight::<T>(n - 1 - j) * b.euler.clone();
                    }
                }
                acc
            }
        }
    }

    /// `χ^H(B^k)`: sum of the blocks below `min(k, i)`.
    pub fn dual_block_euler(&self, k: usize) -> T {
        let w = k.min(self.len());
        self.blocks.iter().take(w).fold(T::zero(), |acc, b| acc + b.euler.clone())
    }

    /// Width table of the complementary boxes `B^1, ..., B^{N-1}`.
    pub fn dual_profile(&self) -> DualProfile<T> {
        let widths = (1..self.n).map(|k| k.min(self.len())).collect();
        DualProfile { base: self.clone(), widths }
    }

    /// Dual profile by index reversal inside the strip of width `N - 1`.
    ///
    /// Leading zero blocks cannot survive the truncation to minimal length and
    /// come back as fillers on a second dualization; see [`Self::canonicalize`].
    pub fn dualize(&self) -> Result<Self, ProfileError> {
        self.ensure_valid()?;
        let j_min = self.j_min().expect("valid profile has a nonzero block");
        let n = self.n;
        let len = n - 1 - j_min;
        let taken: BTreeSet<String> = self.blocks.iter().map(|b| toggle_label(&b.label)).collect();
        let mut blocks = Vec::with_capacity(len);
        for m in 0..len {
            let j = n - 2 - m;
            match self.blocks.get(j) {
                Some(b) => blocks.push(PrimitiveBlock::with_marker(
                    toggle_label(&b.label),
                    b.euler.clone(),
                    b.nonzero,
                )),
                None => blocks.push(PrimitiveBlock::with_marker(
                    filler_label(m, &taken),
                    T::zero(),
                    false,
                )),
            }
        }
        Ok(Self {
            name: toggle_label(&self.name),
            n,
            orientation: self.orientation.flipped(),
            blocks,
        })
    }

    /// Relabel the leading zero blocks with filler labels.
    ///
    /// After this, `dualize` twice reproduces the profile exactly, labels
    /// included.
    pub fn canonicalize(&self) -> Self {
        let mut out = self.clone();
        let lead = self.j_min().unwrap_or(self.len());
        let taken: BTreeSet<String> =
            self.blocks.iter().skip(lead).map(|b| b.label.clone()).collect();
        for (j, b) in out.blocks.iter_mut().enumerate().take(lead) {
            b.label = filler_label(j, &taken);
        }
        out
    }
}

/// Complementary-box view of a profile: `widths[k-1] = min(k, i)` is the
/// number of blocks spanning `B^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualProfile<T> {
    pub base: LefschetzProfile<T>,
    pub widths: Vec<usize>,
}

impl<T: EulerInt> DualProfile<T> {
    pub fn width(&self, k: usize) -> usize {
        if k == 0 {
            0
        } else {
            self.widths.get(k - 1).copied().unwrap_or(self.base.len())
        }
    }

    /// `B^k = 0`.
    pub fn is_zero(&self, k: usize) -> bool {
        let w = self.width(k);
        self.base.blocks.iter().take(w).all(PrimitiveBlock::is_zero)
    }

    /// Re-read the width table as a Lefschetz profile. The `m`-th dual block
    /// is what `B^{N-1-m}` adds on top of `B^{N-2-m}`.
    pub fn reread(&self) -> Vec<T> {
        let n = self.base.n;
        let mut e: Vec<T> = (0..n.saturating_sub(1))
            .map(|m| {
                let hi = self.width(n - 1 - m);
                let lo = self.width(n - 2 - m);
                self.base.blocks[lo..hi].iter().fold(T::zero(), |acc, b| acc + b.euler.clone())
            })
            .collect();
        let zero: Vec<bool> = (0..e.len())
            .map(|m| {
                let hi = self.width(n - 1 - m);
                let lo = self.width(n - 2 - m);
                self.base.blocks[lo..hi].iter().all(PrimitiveBlock::is_zero)
            })
            .collect();
        while e.len() > 1 && zero[e.len() - 1] {
            e.pop();
        }
        e
    }
}

fn weight<T: EulerInt>(w: usize) -> T {
    T::from_usize(w).expect("weight fits the scalar type")
}

/// Append or strip the dual suffix.
pub fn toggle_label(label: &str) -> String {
    match label.strip_suffix(DUAL_SUFFIX) {
        Some(base) if !base.is_empty() => base.to_string(),
        _ => format!("{label}{DUAL_SUFFIX}"),
    }
}

fn filler_label(index: usize, taken: &BTreeSet<String>) -> String {
    let mut label = format!("{FILLER_PREFIX}{index}");
    while taken.contains(&label) {
        label.push('\'');
    }
    label
}

impl<T: EulerInt> fmt::Display for LefschetzProfile<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (N={}, {}) [", self.name, self.n, self.orientation)?;
        for (j, b) in self.blocks.iter().enumerate() {
            if j > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", b.euler)?;
            if b.euler.is_zero() && b.nonzero {
                f.write_str("*")?;
            }
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gr27() -> LefschetzProfile<i64> {
        LefschetzProfile::rectangular("Gr(2,7)", 21, 7, 3)
    }

    #[test]
    fn totals_of_grassmannians() {
        let p = gr27();
        assert_eq!(p.euler_ambient(), 3);
        assert_eq!(p.euler_total(), 21);
        let d = p.dualize().unwrap();
        assert_eq!(d.len(), 14);
        assert_eq!(d.evector()[13], 3);
        assert_eq!(d.euler_total(), 42);
        assert_eq!(d.orientation, Orientation::DualLefschetz);
    }

    #[test]
    fn dual_total_matches_shifted_weights() {
        let p = LefschetzProfile::from_evector("p", 9, &[2i64, -1, 0, 4]);
        let d = p.dualize().unwrap();
        let direct: i64 = d.evector().iter().enumerate().map(|(m, e)| (m as i64 + 1) * e).sum();
        assert_eq!(d.euler_total(), direct);
    }

    #[test]
    fn boundary_lengths() {
        let p = LefschetzProfile::rectangular("r", 5, 5, 1i64);
        let r = p.validate();
        assert!(r.violations.iter().any(|v| v.kind == ViolationKind::TooLong));
        assert!(r.violations[0].reason.contains("i ≤ N−1 fails"));
        let q = LefschetzProfile::from_evector("q", 10, &[1i64, 1, 0]);
        assert!(q.validate().violations.iter().any(|v| v.kind == ViolationKind::NotMinimal));
        let mut marked = q.clone();
        marked.blocks[2].nonzero = true;
        assert!(marked.validate().is_valid());
    }

    #[test]
    fn small_ambient_is_only_a_warning() {
        let p = LefschetzProfile::from_evector("p", 2, &[1i64]);
        let r = p.validate();
        assert!(r.is_valid());
        assert_eq!(r.warnings.len(), 1);
    }

    #[test]
    fn duplicate_labels() {
        let mut p = LefschetzProfile::from_evector("p", 6, &[1i64, 1]);
        p.blocks[1].label = "a0".into();
        assert!(!p.validate().is_valid());
    }

    #[test]
    fn labels_toggle() {
        assert_eq!(toggle_label("O"), "O^v");
        assert_eq!(toggle_label("O^v"), "O");
        assert_eq!(toggle_label("^v"), "^v^v");
    }

    #[test]
    fn canonical_round_trip_keeps_labels() {
        let p = LefschetzProfile::from_evector("p", 8, &[0i64, 0, 5, 0, 1]).canonicalize();
        let back = p.dualize().unwrap().dualize().unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn width_reread_matches_reversal() {
        let p = LefschetzProfile::from_evector("p", 7, &[1i64, 0, 2]);
        let d = p.dual_profile();
        assert_eq!(d.widths, vec![1, 2, 3, 3, 3, 3]);
        assert_eq!(d.reread(), p.dualize().unwrap().evector());
        assert!(!d.is_zero(1));
    }
}
