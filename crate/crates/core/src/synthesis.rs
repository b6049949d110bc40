//! Component reports for the dual and intersected categories, Euler
//! characteristic identities in exact rational arithmetic and the bundled
//! example table.

use std::fmt;

use num_rational::Ratio;
use serde_json::Value;

use crate::io::{profile_from_value, profile_to_value, FormatError};
use crate::profile::{LefschetzProfile, ProfileError};
use crate::scalar::EulerInt;
use crate::Profile;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Target {
    Y,
    T,
    XT,
    YS,
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Target::Y => "Y",
            Target::T => "T",
            Target::XT => "X_T",
            Target::YS => "Y_S",
        })
    }
}

/// Euler characteristic of a component: a number, or the shared unknown `χ(E)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EulerValue<T> {
    Known(T),
    ChiE,
}

impl<T: fmt::Display> fmt::Display for EulerValue<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EulerValue::Known(v) => write!(f, "{v}"),
            EulerValue::ChiE => f.write_str("χ(E)"),
        }
    }
}

/// `e_coeff · χ(E) + constant`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineEuler<T> {
    pub e_coeff: T,
    pub constant: T,
}

impl<T: EulerInt> AffineEuler<T> {
    pub fn eval(&self, chi_e: &T) -> T {
        self.e_coeff.clone() * chi_e.clone() + self.constant.clone()
    }
}

impl<T: EulerInt> fmt::Display for AffineEuler<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.e_coeff.is_zero() {
            return write!(f, "{}", self.constant);
        }
        if self.e_coeff.is_one() {
            f.write_str("χ(E)")?;
        } else {
            write!(f, "{}·χ(E)", self.e_coeff)?;
        }
        if self.constant.is_negative() {
            write!(f, " - {}", self.constant.abs())
        } else if !self.constant.is_zero() {
            write!(f, " + {}", self.constant)
        } else {
            Ok(())
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportComponent<T> {
    pub description: String,
    pub euler: EulerValue<T>,
}

/// Ordered components of one decomposition. Zero components are dropped and
/// counted in `omitted`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionReport<T> {
    pub target: Target,
    pub components: Vec<ReportComponent<T>>,
    pub omitted: usize,
    pub total: AffineEuler<T>,
}

impl<T: EulerInt> DecompositionReport<T> {
    fn build(target: Target, components: Vec<ReportComponent<T>>, omitted: usize) -> Self {
        let mut total = AffineEuler { e_coeff: T::zero(), constant: T::zero() };
        for c in &components {
            match &c.euler {
                EulerValue::Known(v) => total.constant = total.constant.clone() + v.clone(),
                EulerValue::ChiE => total.e_coeff = total.e_coeff.clone() + T::one(),
            }
        }
        Self { target, components, omitted, total }
    }

    /// Components other than `E`.
    pub fn ambient(&self) -> impl Iterator<Item = &ReportComponent<T>> {
        self.components.iter().filter(|c| c.euler != EulerValue::ChiE)
    }

    pub fn ambient_count(&self) -> usize {
        self.ambient().count()
    }
}

impl<T: EulerInt> fmt::Display for DecompositionReport<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "D({}) = ⟨{}⟩", self.target, self.components.iter().map(|c| c.description.as_str()).collect::<Vec<_>>().join(", "))?;
        for c in &self.components {
            writeln!(f, "  {:<24} χ = {}", c.description, c.euler)?;
        }
        writeln!(f, "  omitted zero components: {}", self.omitted)?;
        write!(f, "  total: {}", self.total)
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum SynthesisError {
    #[error("profiles disagree on N: {0} vs {1}")]
    NMismatch(usize, usize),
    #[error(transparent)]
    Profile(#[from] ProfileError),
}

fn twist(t: i64) -> String {
    if t == 0 {
        String::new()
    } else {
        format!("({t})")
    }
}

fn check_pair<T: EulerInt>(
    px: &LefschetzProfile<T>,
    ps: &LefschetzProfile<T>,
) -> Result<(), SynthesisError> {
    px.ensure_valid()?;
    ps.ensure_valid()?;
    if px.n != ps.n {
        return Err(SynthesisError::NMismatch(px.n, ps.n));
    }
    Ok(())
}

/// Complementary decomposition `⟨B^1(2-N), ..., B^{N-1}⟩` of the dual.
/// `letter` is `B` for the X side and `D` for the S side.
pub fn dual_decomposition<T: EulerInt>(
    p: &LefschetzProfile<T>,
    target: Target,
) -> Result<DecompositionReport<T>, SynthesisError> {
    p.ensure_valid()?;
    let letter = if target == Target::T { "D" } else { "B" };
    let dual = p.dual_profile();
    let n = p.n as i64;
    let mut comps = Vec::new();
    let mut omitted = 0;
    for k in 1..p.n {
        if dual.is_zero(k) {
            omitted += 1;
            continue;
        }
        comps.push(ReportComponent {
            description: format!("{letter}^{k}{}", twist(k as i64 + 1 - n)),
            euler: EulerValue::Known(p.dual_block_euler(k)),
        });
    }
    Ok(DecompositionReport::build(target, comps, omitted))
}

/// Decompositions of the two intersections. Both carry the same unknown `χ(E)`.
pub fn intersect_decompositions<T: EulerInt>(
    px: &LefschetzProfile<T>,
    ps: &LefschetzProfile<T>,
) -> Result<(DecompositionReport<T>, DecompositionReport<T>), SynthesisError> {
    check_pair(px, ps)?;
    let (i, l) = (px.len(), ps.len());
    let dx = px.dual_profile();
    let ds = ps.dual_profile();

    let mut xt = vec![ReportComponent { description: "E".into(), euler: EulerValue::ChiE }];
    let mut omitted_xt = 0;
    for k in 1..i {
        // A_k is never zero below the length; D^k may be.
        if ds.is_zero(k) {
            omitted_xt += 1;
            continue;
        }
        xt.push(ReportComponent {
            description: format!("A_{k}({k})⊠D^{k}"),
            euler: EulerValue::Known(px.ambient_euler(k) * ps.dual_block_euler(k)),
        });
    }

    let mut ys = Vec::new();
    let mut omitted_ys = 0;
    for k in 1..l {
        if dx.is_zero(k) {
            omitted_ys += 1;
            continue;
        }
        ys.push(ReportComponent {
            description: format!("B^{k}⊠C^L_{k}{}", twist(k as i64 + 1 - l as i64)),
            euler: EulerValue::Known(px.dual_block_euler(k) * ps.ambient_euler(k)),
        });
    }
    ys.push(ReportComponent { description: "E".into(), euler: EulerValue::ChiE });

    Ok((
        DecompositionReport::build(Target::XT, xt, omitted_xt),
        DecompositionReport::build(Target::YS, ys, omitted_ys),
    ))
}

/// Both sides of the Plücker identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PluckerOutcome<T: Clone + num_integer::Integer> {
    pub holds: bool,
    pub lhs: Ratio<T>,
    pub rhs: Ratio<T>,
}

/// Evaluates `χ(X_T) - χ(X)χ(T)/N` and `χ(Y_S) - χ(Y)χ(S)/N`. `N > 0`.
#[allow(clippy::too_many_arguments)]
pub fn plucker_check<T: EulerInt>(
    chi_x: T,
    chi_y: T,
    chi_s: T,
    chi_t: T,
    chi_xt: T,
    chi_ys: T,
    n: T,
) -> PluckerOutcome<T> {
    assert!(n.is_positive(), "ambient dimension must be positive");
    let lhs = Ratio::from_integer(chi_xt) - Ratio::new(chi_x * chi_t, n.clone());
    let rhs = Ratio::from_integer(chi_ys) - Ratio::new(chi_y * chi_s, n);
    PluckerOutcome { holds: lhs == rhs, lhs, rhs }
}

/// `(χ(X), χ(Y), χ(S), χ(T))` read off two profiles.
pub fn profile_chis<T: EulerInt>(px: &LefschetzProfile<T>, ps: &LefschetzProfile<T>) -> [T; 4] {
    let n = T::from_usize(px.n).expect("N fits the scalar type");
    let chi_x = px.euler_total();
    let chi_s = ps.euler_total();
    let chi_y = n.clone() * px.euler_ambient() - chi_x.clone();
    let chi_t = n * ps.euler_ambient() - chi_s.clone();
    [chi_x, chi_y, chi_s, chi_t]
}

/// Predicted `χ(Y_S)` with a warning when it is not an integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prediction<T: Clone + num_integer::Integer> {
    pub value: Ratio<T>,
    pub warning: Option<String>,
}

pub fn plucker_predict<T: EulerInt>(
    px: &LefschetzProfile<T>,
    ps: &LefschetzProfile<T>,
    chi_xt: T,
) -> Result<Prediction<T>, SynthesisError> {
    check_pair(px, ps)?;
    let [chi_x, chi_y, chi_s, chi_t] = profile_chis(px, ps);
    let n = T::from_usize(px.n).expect("N fits the scalar type");
    let value = Ratio::from_integer(chi_xt) - Ratio::new(chi_x * chi_t, n.clone())
        + Ratio::new(chi_y * chi_s, n);
    let warning = (!value.is_integer()).then(|| format!("predicted χ(Y_S) = {value} is not an integer"));
    Ok(Prediction { value, warning })
}

/// The two expressions for `χ(H)` and whether they agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HConsistency<T> {
    pub holds: bool,
    pub via_xt: T,
    pub via_ys: T,
}

pub fn euler_h_consistency<T: EulerInt>(
    px: &LefschetzProfile<T>,
    ps: &LefschetzProfile<T>,
    chi_xt: T,
    chi_ys: T,
) -> Result<HConsistency<T>, SynthesisError> {
    check_pair(px, ps)?;
    let [chi_x, _, chi_s, _] = profile_chis(px, ps);
    Ok(euler_h_from_chis(
        chi_x,
        chi_s,
        px.euler_ambient(),
        ps.euler_ambient(),
        chi_xt,
        chi_ys,
    ))
}

/// `χ(X_T) + χ(X)(χ(S) - χ^H(C_0))` against `χ(Y_S) + χ(S)(χ(X) - χ^H(A_0))`.
pub fn euler_h_from_chis<T: EulerInt>(
    chi_x: T,
    chi_s: T,
    amb_x: T,
    amb_s: T,
    chi_xt: T,
    chi_ys: T,
) -> HConsistency<T> {
    let via_xt = chi_xt + chi_x.clone() * (chi_s.clone() - amb_s);
    let via_ys = chi_ys + chi_s * (chi_x - amb_x);
    HConsistency { holds: via_xt == via_ys, via_xt, via_ys }
}

/// One curated example. Profiles, when present, reproduce the stored values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExampleRecord {
    pub name: String,
    pub n: usize,
    pub chi_x: i64,
    pub chi_y: i64,
    pub chi_s: i64,
    pub chi_t: i64,
    pub chi_xt: Option<i64>,
    pub chi_ys: Option<i64>,
    pub profiles: Option<(Profile, Profile)>,
    pub source: String,
}

impl ExampleRecord {
    pub fn is_complete(&self) -> bool {
        self.chi_xt.is_some() && self.chi_ys.is_some()
    }

    pub fn plucker(&self) -> Option<PluckerOutcome<i64>> {
        Some(plucker_check(
            self.chi_x,
            self.chi_y,
            self.chi_s,
            self.chi_t,
            self.chi_xt?,
            self.chi_ys?,
            self.n as i64,
        ))
    }
}

/// Schema version of the example file.
pub const EXAMPLES_VERSION: u64 = 1;

const BUILTIN: &str = include_str!("../data/examples.json");

#[derive(Debug, thiserror::Error)]
pub enum ExampleError {
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error("example file: {0}")]
    Schema(String),
}

fn field<'a>(obj: &'a serde_json::Map<String, Value>, key: &str) -> Result<&'a Value, ExampleError> {
    obj.get(key).ok_or_else(|| ExampleError::Schema(format!("missing `{key}`")))
}

fn int(obj: &serde_json::Map<String, Value>, key: &str) -> Result<i64, ExampleError> {
    field(obj, key)?.as_i64().ok_or_else(|| ExampleError::Schema(format!("`{key}` is not an integer")))
}

fn opt_int(obj: &serde_json::Map<String, Value>, key: &str) -> Result<Option<i64>, ExampleError> {
    match obj.get(key) {
        None | Some(Value::Null) => Ok(None),
        Some(v) => v.as_i64().map(Some).ok_or_else(|| ExampleError::Schema(format!("`{key}` is not an integer"))),
    }
}

const RECORD_KEYS: &[&str] = &["name", "N", "chiX", "chiY", "chiS", "chiT", "chiXT", "chiYS", "profiles", "source"];

/// Parses an example file: `{"version": 1, "examples": [...]}`.
pub fn parse_examples(text: &str) -> Result<Vec<ExampleRecord>, ExampleError> {
    let root: Value = serde_json::from_str(text).map_err(FormatError::from)?;
    let obj = root.as_object().ok_or_else(|| ExampleError::Schema("top level is not an object".into()))?;
    let version = field(obj, "version")?.as_u64();
    if version != Some(EXAMPLES_VERSION) {
        return Err(ExampleError::Schema(format!("unsupported version {version:?}")));
    }
    let list = field(obj, "examples")?
        .as_array()
        .ok_or_else(|| ExampleError::Schema("`examples` is not an array".into()))?;
    list.iter()
        .map(|v| {
            let rec = v.as_object().ok_or_else(|| ExampleError::Schema("record is not an object".into()))?;
            if let Some(k) = rec.keys().find(|k| !RECORD_KEYS.contains(&k.as_str())) {
                return Err(ExampleError::Schema(format!("unknown field `{k}`")));
            }
            let profiles = match rec.get("profiles") {
                None | Some(Value::Null) => None,
                Some(p) => {
                    let p = p.as_object().ok_or_else(|| ExampleError::Schema("`profiles` is not an object".into()))?;
                    Some((profile_from_value(field(p, "X")?.clone())?, profile_from_value(field(p, "S")?.clone())?))
                }
            };
            Ok(ExampleRecord {
                name: field(rec, "name")?
                    .as_str()
                    .ok_or_else(|| ExampleError::Schema("`name` is not a string".into()))?
                    .to_string(),
                n: int(rec, "N")? as usize,
                chi_x: int(rec, "chiX")?,
                chi_y: int(rec, "chiY")?,
                chi_s: int(rec, "chiS")?,
                chi_t: int(rec, "chiT")?,
                chi_xt: opt_int(rec, "chiXT")?,
                chi_ys: opt_int(rec, "chiYS")?,
                profiles,
                source: field(rec, "source")?.as_str().unwrap_or_default().to_string(),
            })
        })
        .collect()
}

/// Serializes records in the file schema, one trailing newline.
pub fn examples_to_json(records: &[ExampleRecord]) -> String {
    let list: Vec<Value> = records
        .iter()
        .map(|r| {
            let mut m = serde_json::Map::new();
            m.insert("name".into(), r.name.clone().into());
            m.insert("N".into(), r.n.into());
            m.insert("chiX".into(), r.chi_x.into());
            m.insert("chiY".into(), r.chi_y.into());
            m.insert("chiS".into(), r.chi_s.into());
            m.insert("chiT".into(), r.chi_t.into());
            m.insert("chiXT".into(), r.chi_xt.into());
            m.insert("chiYS".into(), r.chi_ys.into());
            if let Some((x, s)) = &r.profiles {
                let mut p = serde_json::Map::new();
                p.insert("X".into(), profile_to_value(x));
                p.insert("S".into(), profile_to_value(s));
                m.insert("profiles".into(), Value::Object(p));
            }
            m.insert("source".into(), r.source.clone().into());
            Value::Object(m)
        })
        .collect();
    let root = serde_json::json!({ "version": EXAMPLES_VERSION, "examples": list });
    let mut s = serde_json::to_string_pretty(&root).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn builtin_examples() -> Vec<ExampleRecord> {
    parse_examples(BUILTIN).expect("bundled example file is well formed")
}

/// Case- and punctuation-insensitive key: `Gr(2,6)` and `gr26` collide.
fn lookup_key(s: &str) -> String {
    s.chars().filter(|c| c.is_alphanumeric()).flat_map(char::to_lowercase).collect()
}

pub fn find_example<'a>(records: &'a [ExampleRecord], name: &str) -> Option<&'a ExampleRecord> {
    let key = lookup_key(name);
    records.iter().find(|r| lookup_key(&r.name) == key)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_round_trip() {
        let recs = builtin_examples();
        assert_eq!(parse_examples(&examples_to_json(&recs)).unwrap(), recs);
        assert_eq!(examples_to_json(&recs), BUILTIN);
    }

    #[test]
    fn lookup_aliases() {
        let recs = builtin_examples();
        assert_eq!(find_example(&recs, "Gr26").unwrap().chi_ys, Some(27));
        assert_eq!(find_example(&recs, "Gr(2,7)").unwrap().chi_y, 42);
        let q5 = find_example(&recs, "Q5").unwrap();
        assert_eq!((q5.chi_x, q5.chi_y), (6, 8));
    }

    #[test]
    fn affine_display() {
        let a = AffineEuler { e_coeff: 1i64, constant: -3 };
        assert_eq!(a.to_string(), "χ(E) - 3");
        assert_eq!(AffineEuler { e_coeff: 0i64, constant: 4 }.to_string(), "4");
    }

    #[test]
    fn dual_report_total_is_dual_euler() {
        let p = LefschetzProfile::from_evector("Q3", 5, &[1i64, 0, 1]);
        let r = dual_decomposition(&p, Target::Y).unwrap();
        assert_eq!(r.total.constant, p.dualize().unwrap().euler_total());
        assert_eq!(r.components.len() + r.omitted, 4);
    }
}
