//! Rational Alexander modules: cyclic torsion modules `Q[t, t^-1] / ⟨q⟩`,
//! their submodule lattices, the Blanchfield pairing, element orders, and
//! localization at a polynomial `p(t)`.

pub mod blanchfield;
pub mod snf;

pub use blanchfield::{BlanchfieldPairing, PairingValue};

use crate::error::{Error, Result};
use crate::isogeny::strongly_coprime;
use crate::poly::factor::factor;
use crate::poly::laurent::LaurentPoly;
use crate::poly::matrix::PolyMatrix;
use crate::seifert::SeifertMatrix;
use serde::Serialize;
use num_traits::Zero;
use std::fmt;

/// `Q[t, t^-1] / ⟨order⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicModule {
    order: LaurentPoly,
}

impl CyclicModule {
    pub fn new(order: &LaurentPoly) -> Result<Self> {
        if order.is_zero() {
            return Err(Error::ZeroPolynomial("module order"));
        }
        Ok(CyclicModule { order: order.normalize() })
    }

    pub fn order(&self) -> &LaurentPoly {
        &self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.order.is_unit()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SubmoduleLabel {
    P0,
    #[serde(rename = "P+")]
    Pplus,
    #[serde(rename = "P-")]
    Pminus,
    Full,
    Other,
}

impl fmt::Display for SubmoduleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SubmoduleLabel::P0 => "P0",
            SubmoduleLabel::Pplus => "P+",
            SubmoduleLabel::Pminus => "P-",
            SubmoduleLabel::Full => "Full",
            SubmoduleLabel::Other => "Other",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for SubmoduleLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "P0" => SubmoduleLabel::P0,
            "P+" | "Pplus" => SubmoduleLabel::Pplus,
            "P-" | "Pminus" => SubmoduleLabel::Pminus,
            "Full" => SubmoduleLabel::Full,
            "Other" => SubmoduleLabel::Other,
            _ => return Err(Error::InvalidArgument(format!("unknown submodule label {s:?}"))),
        })
    }
}

/// The submodule `⟨generator⟩ = generator · M`; `generator` divides the order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Submodule {
    pub generator: LaurentPoly,
    pub label: SubmoduleLabel,
}

impl Submodule {
    fn new(generator: LaurentPoly, label: SubmoduleLabel) -> Self {
        Submodule { generator: generator.normalize(), label }
    }

    pub fn contains(&self, other: &Submodule) -> bool {
        self.generator.divides(&other.generator)
    }
}

/// All monic divisors of `order`, smallest first.
fn divisors(order: &LaurentPoly) -> Result<Vec<LaurentPoly>> {
    let f = factor(order)?;
    let mut out = vec![LaurentPoly::one()];
    for (p, m) in &f.factors {
        let mut next = Vec::new();
        for d in &out {
            let mut acc = d.clone();
            next.push(acc.clone());
            for _ in 0..*m {
                acc = &acc * p;
                next.push(acc.normalize());
            }
        }
        out = next;
    }
    out.sort_by(|a, b| a.canonical_cmp(b));
    Ok(out)
}

/// `Some(δ)` when `order ≐ δ δ*` with `δ` irreducible and `δ ≠ δ*`.
fn split_delta(order: &LaurentPoly) -> Result<Option<LaurentPoly>> {
    let f = factor(order)?;
    if f.factors.len() == 2 && f.is_squarefree() {
        let (a, b) = (&f.factors[0].0, &f.factors[1].0);
        if a.reciprocal()? == *b {
            return Ok(Some(a.clone()));
        }
    }
    Ok(None)
}

/// Every submodule `⟨d⟩`, `d | order`, labelled P0 (zero) and Full (whole module).
pub fn divisor_lattice(m: &CyclicModule) -> Result<Vec<Submodule>> {
    let order = m.order();
    Ok(divisors(order)?
        .into_iter()
        .map(|d| {
            let label = if d.is_unit() {
                SubmoduleLabel::Full
            } else if d == *order {
                SubmoduleLabel::P0
            } else {
                SubmoduleLabel::Other
            };
            Submodule::new(d, label)
        })
        .collect())
}

/// Proper submodules. For `order = δ δ*` this is `{P0, ⟨δ⟩, ⟨δ*⟩}`; other
/// squarefree orders list every divisor other than 1; non-squarefree orders
/// list the whole divisor lattice labelled Other.
pub fn proper_submodules(m: &CyclicModule) -> Result<Vec<Submodule>> {
    let order = m.order();
    if order.is_unit() {
        return Ok(vec![]);
    }
    if let Some(delta) = split_delta(order)? {
        return proper_submodules_with_delta(m, &delta);
    }
    let f = factor(order)?;
    if !f.is_squarefree() {
        return Ok(divisors(order)?.into_iter().map(|d| Submodule::new(d, SubmoduleLabel::Other)).collect());
    }
    Ok(divisor_lattice(m)?.into_iter().filter(|s| s.label != SubmoduleLabel::Full).collect())
}

/// Proper submodules of a module of order `δ δ*` with the given `δ`; `⟨δ⟩`
/// and `⟨δ*⟩` collapse into one when `δ ≐ δ*`.
pub fn proper_submodules_with_delta(m: &CyclicModule, delta: &LaurentPoly) -> Result<Vec<Submodule>> {
    let order = m.order();
    let star = delta.reciprocal()?;
    if !(delta * &star).unit_eq(order) {
        return Err(Error::Precondition(format!("order {order} is not {delta} times its reciprocal")));
    }
    let mut out = vec![Submodule::new(order.clone(), SubmoduleLabel::P0), Submodule::new(delta.clone(), SubmoduleLabel::Pplus)];
    if !star.unit_eq(delta) {
        out.push(Submodule::new(star, SubmoduleLabel::Pminus));
    }
    Ok(out)
}

/// Annihilator of the class of `x`: `order / gcd(order, x)`.
pub fn element_order(m: &CyclicModule, x: &LaurentPoly) -> Result<LaurentPoly> {
    let order = m.order();
    if x.is_zero() || order.divides(x) {
        return Ok(LaurentPoly::one());
    }
    let g = order.gcd(x)?;
    Ok(order.div_exact(&g).expect("gcd divides order").normalize())
}

/// Where an isotropy statement comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IsotropySource {
    /// Evaluated with the Blanchfield pairing of a Seifert matrix.
    Computed,
    /// Accepted for the `δ δ*` pattern: `⟨δ⟩` and `⟨δ*⟩` are isotropic.
    PatternStatement,
}

/// Module of a knot computed from a Seifert matrix.
#[derive(Clone, Debug)]
pub struct KnotModule {
    pub invariant_factors: Vec<LaurentPoly>,
    pub presentation: PolyMatrix,
    /// Present iff the module is cyclic: the module and a generator in
    /// coordinates of the presentation.
    pub cyclic: Option<(CyclicModule, Vec<LaurentPoly>)>,
    pairing: Option<BlanchfieldPairing>,
}

pub fn module_from_knot(v: &SeifertMatrix) -> Result<KnotModule> {
    let presentation = v.presentation();
    let s = snf::smith(&presentation);
    let invariant_factors: Vec<LaurentPoly> = s
        .diagonal
        .iter()
        .map(|d| LaurentPoly::from_qpoly(d.clone(), 0).normalize())
        .filter(|d| !d.is_unit())
        .collect();
    let pairing = BlanchfieldPairing::new(v).ok();
    let cyclic = match invariant_factors.len() {
        0 => Some((CyclicModule::new(&LaurentPoly::one())?, vec![LaurentPoly::zero(); v.dim()])),
        1 => {
            let last = v.dim() - 1;
            let gen = s.row_inverse.iter().map(|row| LaurentPoly::from_qpoly(row[last].clone(), 0)).collect();
            Some((CyclicModule::new(&invariant_factors[0])?, gen))
        }
        _ => None,
    };
    Ok(KnotModule { invariant_factors, presentation, cyclic, pairing })
}

impl KnotModule {
    pub fn is_cyclic(&self) -> bool {
        self.cyclic.is_some()
    }

    pub fn order(&self) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        for f in &self.invariant_factors {
            acc = &acc * f;
        }
        acc.normalize()
    }

    pub fn module(&self) -> Option<&CyclicModule> {
        self.cyclic.as_ref().map(|(m, _)| m)
    }

    pub fn generator(&self) -> Option<&[LaurentPoly]> {
        self.cyclic.as_ref().map(|(_, g)| g.as_slice())
    }

    pub fn pairing(&self) -> Option<&BlanchfieldPairing> {
        self.pairing.as_ref()
    }

    /// `B(x, x)` for `x = g · generator`.
    pub fn self_pairing(&self, g: &LaurentPoly) -> Result<PairingValue> {
        let (m, gen) = self
            .cyclic
            .as_ref()
            .ok_or_else(|| Error::Precondition("module is not cyclic".into()))?;
        if m.is_trivial() {
            return Ok(PairingValue::zero());
        }
        let b = self.pairing.as_ref().expect("nontrivial module has a pairing");
        b.self_pairing_of_multiple(gen, g)
    }

    /// True iff the pairing vanishes on `P × P`.
    pub fn isotropic(&self, p: &Submodule) -> Result<bool> {
        let m = self.module().ok_or_else(|| Error::Precondition("module is not cyclic".into()))?;
        if !p.generator.divides(m.order()) {
            return Err(Error::InvalidArgument(format!(
                "{} does not divide the module order {}",
                p.generator,
                m.order()
            )));
        }
        Ok(self.self_pairing(&p.generator)?.is_zero())
    }
}

/// Isotropy when only the abstract module is known: the zero submodule is
/// isotropic, the full nontrivial module is not (nonsingularity), and the
/// `δ δ*` pattern submodules are accepted as isotropic.
pub fn isotropic_abstract(m: &CyclicModule, p: &Submodule) -> Result<(bool, IsotropySource)> {
    let order = m.order();
    if !p.generator.divides(order) {
        return Err(Error::InvalidArgument(format!("{} does not divide {order}", p.generator)));
    }
    if p.generator.unit_eq(order) {
        return Ok((true, IsotropySource::Computed));
    }
    if p.generator.is_unit() {
        return Ok((false, IsotropySource::Computed));
    }
    let delta_shape = split_delta(order)?.is_some()
        || factor(order)?.factors.len() == 1 && factor(order)?.factors[0].1 == 2 && order.is_self_reciprocal();
    if delta_shape {
        let star = p.generator.reciprocal()?;
        if (&p.generator * &star).unit_eq(order) {
            return Ok((true, IsotropySource::PatternStatement));
        }
    }
    Err(Error::Precondition(format!(
        "isotropy of ⟨{}⟩ needs a Seifert matrix for this module",
        p.generator
    )))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LocalizationMode {
    ClassicalCoprime,
    StrongCoprime,
}

impl std::str::FromStr for LocalizationMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "classical" | "classical-coprime" => Ok(LocalizationMode::ClassicalCoprime),
            "strong" | "strong-coprime" => Ok(LocalizationMode::StrongCoprime),
            _ => Err(Error::InvalidArgument(format!("unknown localization mode {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LocalizationStatus {
    Torsion,
    TorsionFree,
    Mixed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalizationVerdict {
    pub status: LocalizationStatus,
    pub survivor: LaurentPoly,
    /// Killed prime powers `r^e`.
    pub killed: Vec<LaurentPoly>,
    pub mode: LocalizationMode,
    pub exact: bool,
}

#[derive(Serialize)]
pub struct LocalizationJson {
    pub status: LocalizationStatus,
    pub survivor: String,
    pub killed: Vec<String>,
    pub mode: String,
    pub exact: bool,
}

impl LocalizationVerdict {
    pub fn to_json(&self) -> LocalizationJson {
        LocalizationJson {
            status: self.status,
            survivor: self.survivor.to_string(),
            killed: self.killed.iter().map(|k| k.to_string()).collect(),
            mode: match self.mode {
                LocalizationMode::ClassicalCoprime => "classical-coprime",
                LocalizationMode::StrongCoprime => "strong-coprime",
            }
            .into(),
            exact: self.exact,
        }
    }
}

/// Localize `M` at `p`: a prime power `r^e` of the order dies when
/// `r(1) != 0` and `r` or `r*` is coprime (classical) or strongly coprime
/// (strong) to `p`.
pub fn localize(m: &CyclicModule, p: &LaurentPoly, mode: LocalizationMode, bound: u32) -> Result<LocalizationVerdict> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial("localization polynomial"));
    }
    let order = m.order();
    if order.augmentation().is_zero() {
        return Err(Error::Precondition(format!("order {order} vanishes at t = 1")));
    }
    let mut survivor = LaurentPoly::one();
    let mut killed = Vec::new();
    let mut exact = true;
    for (r, e) in factor(order)?.factors {
        let power = r.pow(e);
        if r.augmentation().is_zero() {
            survivor = &survivor * &power;
            continue;
        }
        let star = r.reciprocal()?;
        let dies = match mode {
            LocalizationMode::ClassicalCoprime => r.is_coprime(p)? || star.is_coprime(p)?,
            LocalizationMode::StrongCoprime => {
                let a = strongly_coprime(&r, p, bound)?;
                let b = strongly_coprime(&star, p, bound)?;
                let dies = a.is_strongly_coprime() || b.is_strongly_coprime();
                // the decision is exact if some exact coprime verdict fired, or neither was bound-limited
                let decided_exactly = (a.is_strongly_coprime() && a.is_exact())
                    || (b.is_strongly_coprime() && b.is_exact())
                    || (!dies && a.is_exact() && b.is_exact());
                exact &= decided_exactly;
                dies
            }
        };
        if dies {
            killed.push(power.normalize());
        } else {
            survivor = &survivor * &power;
        }
    }
    let survivor = survivor.normalize();
    let status = if survivor.is_unit() {
        LocalizationStatus::Torsion
    } else if survivor.unit_eq(order) {
        LocalizationStatus::TorsionFree
    } else {
        LocalizationStatus::Mixed
    };
    Ok(LocalizationVerdict { status, survivor, killed, mode, exact })
}

/// True iff no factor of the order is killed by the localization.
pub fn localized_injects(m: &CyclicModule, p: &LaurentPoly, mode: LocalizationMode, bound: u32) -> Result<bool> {
    Ok(localize(m, p, mode, bound)?.killed.is_empty())
}
