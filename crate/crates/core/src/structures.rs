//! Monoidal Hom-algebras, Hom-coalgebras, Hom-Hopf algebras and Hom-comodule
//! algebras given by structure constants.
//!
//! Each structure comes in two forms: a `*Data` record holding raw maps, which
//! may violate the axioms and can be checked to produce a [`Report`], and a
//! validated type whose constructor refuses anything whose report has a
//! failure. Every axiom is checked as an equality of linear maps, which is the
//! same as checking it on every tuple of basis elements.

use std::sync::Arc;

use num::{One, Zero};

use crate::error::Error;
use crate::linalg::{LinearMap, Scalar, Space};
use crate::report::{check_identity, CheckResult, Report};

fn id(space: &Space) -> LinearMap {
    LinearMap::identity(space)
}

fn shape(map: &LinearMap, dom: usize, cod: usize, what: &str) -> Result<(), Error> {
    if map.domain().dim() != dom || map.codomain().dim() != cod {
        return Err(Error::Shape(format!(
            "{what}: expected {cod}×{dom}, got {}×{}",
            map.codomain().dim(),
            map.domain().dim()
        )));
    }
    Ok(())
}

/// Raw data of a monoidal Hom-algebra `(A, α)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomAlgebraData {
    pub space: Space,
    /// `A⊗A → A`
    pub mult: LinearMap,
    /// `k → A`
    pub unit: LinearMap,
    pub alpha: LinearMap,
}

impl HomAlgebraData {
    pub fn validate_shapes(&self) -> Result<(), Error> {
        let n = self.space.dim();
        shape(&self.mult, n * n, n, "mult")?;
        shape(&self.unit, 1, n, "unit")?;
        shape(&self.alpha, n, n, "alpha")
    }

    /// The ordinary algebra `(k, id)`.
    pub fn ground_field() -> Self {
        let k = Space::scalars();
        Self {
            space: k.clone(),
            mult: id(&k.tensor(&k)).with_spaces(&k.tensor(&k), &k),
            unit: id(&k),
            alpha: id(&k),
        }
    }

    /// Group algebra of a finite group given by its multiplication table on indices.
    pub fn group_algebra(space: &Space, table: impl Fn(usize, usize) -> usize) -> Self {
        let n = space.dim();
        let sq = space.tensor(space);
        Self {
            space: space.clone(),
            mult: LinearMap::from_basis_fn(&sq, space, |j| table(j / n, j % n)),
            unit: LinearMap::from_basis_fn(&Space::scalars(), space, |_| 0),
            alpha: id(space),
        }
    }
}

pub fn check_hom_algebra(a: &HomAlgebraData) -> Report {
    let mut r = Report::new("monoidal Hom-algebra");
    let sp = &a.space;
    let alpha_inv = a.alpha.inverse();
    r.push(CheckResult::from_bool("α invertible", alpha_inv.is_some()));
    r.push(check_identity(
        "α(ab) = α(a)α(b)",
        &a.alpha.compose(&a.mult),
        &a.mult.compose(&a.alpha.tensor(&a.alpha)),
    ));
    r.push(check_identity("α(1) = 1", &a.alpha.compose(&a.unit), &a.unit));
    r.push(check_identity(
        "α(a)(bc) = (ab)α(c)",
        &a.mult.compose(&a.alpha.tensor(&a.mult)),
        &a.mult.compose(&a.mult.tensor(&a.alpha)),
    ));
    r.push(check_identity("a1 = α(a)", &a.mult.compose(&id(sp).tensor(&a.unit)), &a.alpha));
    r.push(check_identity("1a = α(a)", &a.mult.compose(&a.unit.tensor(&id(sp))), &a.alpha));
    r
}

/// A validated monoidal Hom-algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomAlgebra {
    data: HomAlgebraData,
    alpha_inv: LinearMap,
}

impl HomAlgebra {
    pub fn new(data: HomAlgebraData) -> Result<Self, Error> {
        data.validate_shapes()?;
        let report = check_hom_algebra(&data);
        if !report.all_passed() {
            return Err(Error::InvalidStructure(Box::new(report)));
        }
        let alpha_inv = data.alpha.inverse().expect("checked");
        Ok(Self { data, alpha_inv })
    }

    pub fn data(&self) -> &HomAlgebraData {
        &self.data
    }

    pub fn space(&self) -> &Space {
        &self.data.space
    }

    pub fn dim(&self) -> usize {
        self.data.space.dim()
    }

    pub fn mult(&self) -> &LinearMap {
        &self.data.mult
    }

    pub fn unit(&self) -> &LinearMap {
        &self.data.unit
    }

    pub fn unit_vector(&self) -> Vec<Scalar> {
        self.data.unit.column_dense(0)
    }

    /// The structure automorphism (α for `H`, β for a comodule algebra).
    pub fn alpha(&self) -> &LinearMap {
        &self.data.alpha
    }

    pub fn alpha_inv(&self) -> &LinearMap {
        &self.alpha_inv
    }

    /// Left multiplication by `x` as a map `A → A`.
    pub fn left_mult(&self, x: &[Scalar]) -> LinearMap {
        self.mult().compose(&LinearMap::from_vector(self.space(), x).tensor(&id(self.space())))
            .with_spaces(self.space(), self.space())
    }
}

/// Raw data of a monoidal Hom-coalgebra `(C, γ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomCoalgebraData {
    pub space: Space,
    /// `C → C⊗C`
    pub comult: LinearMap,
    /// `C → k`
    pub counit: LinearMap,
    pub gamma: LinearMap,
}

impl HomCoalgebraData {
    pub fn validate_shapes(&self) -> Result<(), Error> {
        let n = self.space.dim();
        shape(&self.comult, n, n * n, "comult")?;
        shape(&self.counit, n, 1, "counit")?;
        shape(&self.gamma, n, n, "gamma")
    }
}

/// The monoidal form of coassociativity, with `γ⁻¹` on both outer legs; it is
/// the comodule axiom for `C` coacting on itself.
pub const HOM_COASSOCIATIVITY: &str = "γ⁻¹(c₁)⊗c₂₁⊗c₂₂ = c₁₁⊗c₁₂⊗γ⁻¹(c₂)";

pub fn check_hom_coalgebra(c: &HomCoalgebraData) -> Report {
    let mut r = Report::new("monoidal Hom-coalgebra");
    let sp = &c.space;
    let gamma_inv = c.gamma.inverse();
    r.push(CheckResult::from_bool("γ invertible", gamma_inv.is_some()));
    r.push(check_identity(
        "Δγ = (γ⊗γ)Δ",
        &c.comult.compose(&c.gamma),
        &c.gamma.tensor(&c.gamma).compose(&c.comult),
    ));
    r.push(check_identity("εγ = ε", &c.counit.compose(&c.gamma), &c.counit));
    match gamma_inv {
        Some(gi) => {
            r.push(check_identity(
                HOM_COASSOCIATIVITY,
                &gi.tensor(&c.comult).compose(&c.comult),
                &c.comult.tensor(&gi).compose(&c.comult),
            ));
            let left = c.counit.tensor(&id(sp)).compose(&c.comult).with_spaces(sp, sp);
            let right = id(sp).tensor(&c.counit).compose(&c.comult).with_spaces(sp, sp);
            r.push(check_identity("ε(c₁)c₂ = γ⁻¹(c)", &left, &gi));
            r.push(check_identity("c₁ε(c₂) = γ⁻¹(c)", &right, &gi));
        }
        None => {
            for name in [HOM_COASSOCIATIVITY, "ε(c₁)c₂ = γ⁻¹(c)", "c₁ε(c₂) = γ⁻¹(c)"] {
                r.push(CheckResult::skipped(name, "γ is not invertible"));
            }
        }
    }
    r
}

/// A validated monoidal Hom-coalgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomCoalgebra {
    data: HomCoalgebraData,
    gamma_inv: LinearMap,
}

impl HomCoalgebra {
    pub fn new(data: HomCoalgebraData) -> Result<Self, Error> {
        data.validate_shapes()?;
        let report = check_hom_coalgebra(&data);
        if !report.all_passed() {
            return Err(Error::InvalidStructure(Box::new(report)));
        }
        let gamma_inv = data.gamma.inverse().expect("checked");
        Ok(Self { data, gamma_inv })
    }

    pub fn data(&self) -> &HomCoalgebraData {
        &self.data
    }

    pub fn space(&self) -> &Space {
        &self.data.space
    }

    pub fn comult(&self) -> &LinearMap {
        &self.data.comult
    }

    pub fn counit(&self) -> &LinearMap {
        &self.data.counit
    }

    pub fn gamma(&self) -> &LinearMap {
        &self.data.gamma
    }

    pub fn gamma_inv(&self) -> &LinearMap {
        &self.gamma_inv
    }
}

/// Raw data of a monoidal Hom-Hopf algebra; the coalgebra automorphism is `algebra.alpha`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomHopfData {
    pub algebra: HomAlgebraData,
    pub comult: LinearMap,
    pub counit: LinearMap,
    pub antipode: LinearMap,
}

impl HomHopfData {
    pub fn coalgebra(&self) -> HomCoalgebraData {
        HomCoalgebraData {
            space: self.algebra.space.clone(),
            comult: self.comult.clone(),
            counit: self.counit.clone(),
            gamma: self.algebra.alpha.clone(),
        }
    }

    pub fn validate_shapes(&self) -> Result<(), Error> {
        self.algebra.validate_shapes()?;
        self.coalgebra().validate_shapes()?;
        let n = self.algebra.space.dim();
        shape(&self.antipode, n, n, "antipode")
    }
}

pub const ANTIPODE_IDENTITY: &str = "antipode: S∗I = I∗S = ηε";
pub const ANTIPODE_BIJECTIVE: &str = "antipode bijective";

pub fn check_hom_hopf(h: &HomHopfData) -> Report {
    let mut r = Report::new("monoidal Hom-Hopf algebra");
    r.extend_prefixed("algebra", check_hom_algebra(&h.algebra));
    r.extend_prefixed("coalgebra", check_hom_coalgebra(&h.coalgebra()));

    let sp = &h.algebra.space;
    let k = Space::scalars();
    let (m, u, d, e, s) = (&h.algebra.mult, &h.algebra.unit, &h.comult, &h.counit, &h.antipode);
    let mid = LinearMap::permute_factors(&[sp, sp, sp, sp], &[0, 2, 1, 3]);
    r.push(check_identity(
        "Δ(ab) = a₁b₁⊗a₂b₂",
        &d.compose(m),
        &m.tensor(m).compose(&mid).compose(&d.tensor(d)),
    ));
    r.push(check_identity("Δ(1) = 1⊗1", &d.compose(u), &u.tensor(u)));
    r.push(check_identity(
        "ε(ab) = ε(a)ε(b)",
        &e.compose(m),
        &e.tensor(e).with_spaces(&sp.tensor(sp), &k),
    ));
    r.push(check_identity("ε(1) = 1", &e.compose(u), &id(&k)));

    let eta_eps = u.compose(e);
    let left = m.compose(&s.tensor(&id(sp))).compose(d);
    let right = m.compose(&id(sp).tensor(s)).compose(d);
    let mut conv = check_identity(ANTIPODE_IDENTITY, &left, &eta_eps);
    if conv.passed() {
        conv = check_identity(ANTIPODE_IDENTITY, &right, &eta_eps);
        if !conv.passed() {
            conv = conv.with_detail("I∗S ≠ ηε");
        }
    } else {
        conv = conv.with_detail("S∗I ≠ ηε");
    }
    let is_antipode = conv.passed();
    r.push(conv);
    r.push(check_identity("Sα = αS", &s.compose(&h.algebra.alpha), &h.algebra.alpha.compose(s)));
    // Bijectivity is a property of the antipode; a map that fails the
    // convolution identity has no bijectivity claim to test.
    if is_antipode {
        r.push(CheckResult::from_bool(ANTIPODE_BIJECTIVE, s.inverse().is_some()));
    } else {
        r.push(CheckResult::skipped(ANTIPODE_BIJECTIVE, "S is not an antipode"));
    }
    r
}

/// A validated monoidal Hom-Hopf algebra.
///
/// The antipode inverse is required by [`HomHopfAlgebra::new`]; the relaxed
/// constructor leaves it unset and every operation that needs `S⁻¹` then fails
/// with [`Error::AntipodeNotBijective`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomHopfAlgebra {
    algebra: HomAlgebra,
    coalgebra: HomCoalgebra,
    antipode: LinearMap,
    antipode_inv: Option<LinearMap>,
}

impl HomHopfAlgebra {
    pub fn new(data: HomHopfData) -> Result<Self, Error> {
        Self::build(data, true)
    }

    /// Accepts a non-bijective antipode.
    pub fn new_relaxed(data: HomHopfData) -> Result<Self, Error> {
        Self::build(data, false)
    }

    fn build(data: HomHopfData, require_bijective: bool) -> Result<Self, Error> {
        data.validate_shapes()?;
        let report = check_hom_hopf(&data);
        let ok = report
            .failures()
            .all(|c| !require_bijective && c.name == ANTIPODE_BIJECTIVE);
        if !ok {
            return Err(Error::InvalidStructure(Box::new(report)));
        }
        let antipode_inv = data.antipode.inverse();
        let coalgebra = HomCoalgebra::new(data.coalgebra())?;
        let algebra = HomAlgebra::new(data.algebra)?;
        Ok(Self { algebra, coalgebra, antipode: data.antipode, antipode_inv })
    }

    pub fn data(&self) -> HomHopfData {
        HomHopfData {
            algebra: self.algebra.data().clone(),
            comult: self.comult().clone(),
            counit: self.counit().clone(),
            antipode: self.antipode.clone(),
        }
    }

    pub fn algebra(&self) -> &HomAlgebra {
        &self.algebra
    }

    pub fn coalgebra(&self) -> &HomCoalgebra {
        &self.coalgebra
    }

    pub fn space(&self) -> &Space {
        self.algebra.space()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn mult(&self) -> &LinearMap {
        self.algebra.mult()
    }

    pub fn unit(&self) -> &LinearMap {
        self.algebra.unit()
    }

    pub fn alpha(&self) -> &LinearMap {
        self.algebra.alpha()
    }

    pub fn alpha_inv(&self) -> &LinearMap {
        self.algebra.alpha_inv()
    }

    pub fn comult(&self) -> &LinearMap {
        self.coalgebra.comult()
    }

    pub fn counit(&self) -> &LinearMap {
        self.coalgebra.counit()
    }

    pub fn antipode(&self) -> &LinearMap {
        &self.antipode
    }

    pub fn antipode_inv(&self) -> Result<&LinearMap, Error> {
        self.antipode_inv.as_ref().ok_or(Error::AntipodeNotBijective)
    }
}

/// Twists an ordinary Hopf algebra (`α = id`) by a bialgebra automorphism:
/// `m' = aut∘m`, `Δ' = Δ∘aut⁻¹`, `α = aut`, with unit, counit and antipode unchanged.
pub fn twist(base: &HomHopfData, aut: &LinearMap) -> Result<HomHopfAlgebra, Error> {
    base.validate_shapes()?;
    if !base.algebra.alpha.is_identity() {
        return Err(Error::Shape("twist expects an ordinary Hopf algebra (α = id)".into()));
    }
    let n = base.algebra.space.dim();
    shape(aut, n, n, "automorphism")?;
    let aut_inv = aut.inverse().ok_or_else(|| Error::NotInvertible { what: "automorphism".into() })?;
    let (m, u, d, e) = (&base.algebra.mult, &base.algebra.unit, &base.comult, &base.counit);
    let conditions = [
        ("aut(1) = 1", aut.compose(u), u.clone()),
        ("aut∘m = m∘(aut⊗aut)", aut.compose(m), m.compose(&aut.tensor(aut))),
        ("Δ∘aut = (aut⊗aut)∘Δ", d.compose(aut), aut.tensor(aut).compose(d)),
        ("ε∘aut = ε", e.compose(aut), e.clone()),
    ];
    for (name, lhs, rhs) in conditions {
        if !lhs.same_matrix(&rhs) {
            return Err(Error::NotAutomorphism { identity: name.into() });
        }
    }
    HomHopfAlgebra::new(HomHopfData {
        algebra: HomAlgebraData {
            space: base.algebra.space.clone(),
            mult: aut.compose(m),
            unit: u.clone(),
            alpha: aut.clone(),
        },
        comult: d.compose(&aut_inv),
        counit: e.clone(),
        antipode: base.antipode.clone(),
    })
}

/// Undoes [`twist`]: `m = α⁻¹∘m'`, `Δ = Δ'∘α`, `α = id`.
pub fn untwist(h: &HomHopfAlgebra) -> HomHopfData {
    let sp = h.space();
    HomHopfData {
        algebra: HomAlgebraData {
            space: sp.clone(),
            mult: h.alpha_inv().compose(h.mult()),
            unit: h.unit().clone(),
            alpha: id(sp),
        },
        comult: h.comult().compose(h.alpha()),
        counit: h.counit().clone(),
        antipode: h.antipode().clone(),
    }
}

/// Checks of a right Hom-comodule `(M, μ)` with coaction `ρ: M → M⊗C`.
pub(crate) fn comodule_checks(mu: &LinearMap, coaction: &LinearMap, c: &HomCoalgebra) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let sp = mu.domain();
    out.push(check_identity(
        "ρ(μ(m)) = μ(m₀)⊗α(m₁)",
        &coaction.compose(mu),
        &mu.tensor(c.gamma()).compose(coaction),
    ));
    match mu.inverse() {
        Some(mu_inv) => {
            out.push(check_identity(
                "m₀₀⊗m₀₁⊗α⁻¹(m₁) = μ⁻¹(m₀)⊗Δ(m₁)",
                &coaction.tensor(c.gamma_inv()).compose(coaction),
                &mu_inv.tensor(c.comult()).compose(coaction),
            ));
            out.push(check_identity(
                "m₀ε(m₁) = μ⁻¹(m)",
                &id(sp).tensor(c.counit()).compose(coaction).with_spaces(sp, sp),
                &mu_inv,
            ));
        }
        None => out.push(CheckResult::fail("μ invertible", "automorphism is singular")),
    }
    out
}

/// Raw data of a right Hom-comodule algebra over a fixed Hom-Hopf algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComoduleAlgebraData {
    pub algebra: HomAlgebraData,
    /// `A → A⊗H`
    pub coaction: LinearMap,
}

pub fn check_comodule_algebra(hopf: &HomHopfAlgebra, a: &ComoduleAlgebraData) -> Report {
    let mut r = Report::new("right Hom-comodule algebra");
    r.extend_prefixed("algebra", check_hom_algebra(&a.algebra));
    for c in comodule_checks(&a.algebra.alpha, &a.coaction, hopf.coalgebra()) {
        r.push(c);
    }
    let sa = &a.algebra.space;
    let sh = hopf.space();
    let (ma, ua, rho) = (&a.algebra.mult, &a.algebra.unit, &a.coaction);
    let mid = LinearMap::permute_factors(&[sa, sh, sa, sh], &[0, 2, 1, 3]);
    r.push(check_identity(
        "ρ(ab) = a₀b₀⊗a₁b₁",
        &rho.compose(ma),
        &ma.tensor(hopf.mult()).compose(&mid).compose(&rho.tensor(rho)),
    ));
    r.push(check_identity("ρ(1) = 1⊗1", &rho.compose(ua), &ua.tensor(hopf.unit())));
    r
}

/// A validated right `(H, α)`-Hom-comodule algebra `(A, β)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComoduleAlgebra {
    hopf: Arc<HomHopfAlgebra>,
    algebra: HomAlgebra,
    coaction: LinearMap,
}

impl ComoduleAlgebra {
    pub fn new(hopf: Arc<HomHopfAlgebra>, data: ComoduleAlgebraData) -> Result<Self, Error> {
        data.algebra.validate_shapes()?;
        shape(&data.coaction, data.algebra.space.dim(), data.algebra.space.dim() * hopf.dim(), "coaction")?;
        let report = check_comodule_algebra(&hopf, &data);
        if !report.all_passed() {
            return Err(Error::InvalidStructure(Box::new(report)));
        }
        let algebra = HomAlgebra::new(data.algebra)?;
        Ok(Self { hopf, algebra, coaction: data.coaction })
    }

    /// `H` over itself with `ρ = Δ` and `β = α`.
    pub fn regular(hopf: Arc<HomHopfAlgebra>) -> Result<Self, Error> {
        let data = ComoduleAlgebraData { algebra: hopf.algebra().data().clone(), coaction: hopf.comult().clone() };
        Self::new(hopf, data)
    }

    /// The trivial coaction `ρ(a) = β⁻¹(a)⊗1_H`.
    pub fn trivial(hopf: Arc<HomHopfAlgebra>, algebra: HomAlgebraData) -> Result<Self, Error> {
        let beta_inv = algebra
            .alpha
            .inverse()
            .ok_or_else(|| Error::NotInvertible { what: "β".into() })?;
        let coaction = beta_inv.tensor(hopf.unit()).with_spaces(&algebra.space, &algebra.space.tensor(hopf.space()));
        Self::new(hopf, ComoduleAlgebraData { algebra, coaction })
    }

    pub fn data(&self) -> ComoduleAlgebraData {
        ComoduleAlgebraData { algebra: self.algebra.data().clone(), coaction: self.coaction.clone() }
    }

    pub fn hopf(&self) -> &Arc<HomHopfAlgebra> {
        &self.hopf
    }

    pub fn algebra(&self) -> &HomAlgebra {
        &self.algebra
    }

    pub fn space(&self) -> &Space {
        self.algebra.space()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn mult(&self) -> &LinearMap {
        self.algebra.mult()
    }

    pub fn unit(&self) -> &LinearMap {
        self.algebra.unit()
    }

    pub fn beta(&self) -> &LinearMap {
        self.algebra.alpha()
    }

    pub fn beta_inv(&self) -> &LinearMap {
        self.algebra.alpha_inv()
    }

    pub fn coaction(&self) -> &LinearMap {
        &self.coaction
    }
}

/// Basis vector `i` of a space of dimension `n` as a dense vector.
pub fn basis_vector(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{kc2_data, kc3_data, sweedler_data};
    use crate::linalg::int;
    use crate::report::Status;

    #[test]
    fn kc2_is_a_hom_algebra() {
        assert!(check_hom_algebra(&kc2_data().algebra).all_passed());
    }

    #[test]
    fn swapping_unit_breaks_alpha_fixing_one() {
        let mut a = kc2_data().algebra;
        a.alpha = LinearMap::from_basis_fn(&a.space, &a.space, |j| 1 - j);
        let r = check_hom_algebra(&a);
        assert_eq!(r.status("α(1) = 1"), Status::Fail);
    }

    #[test]
    fn twisted_kc3_passes() {
        let base = kc3_data();
        let sp = base.algebra.space.clone();
        let aut = LinearMap::from_basis_fn(&sp, &sp, |j| (2 * j) % 3);
        let h = twist(&base, &aut).unwrap();
        assert!(check_hom_hopf(&h.data()).all_passed());
        assert_eq!(untwist(&h), base);
    }

    #[test]
    fn twist_rejects_non_automorphism() {
        let base = kc2_data();
        let sp = base.algebra.space.clone();
        let swap = LinearMap::from_basis_fn(&sp, &sp, |j| 1 - j);
        match twist(&base, &swap) {
            Err(Error::NotAutomorphism { identity }) => assert_eq!(identity, "aut(1) = 1"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn twist_by_identity_is_noop() {
        let base = sweedler_data();
        let h = twist(&base, &LinearMap::identity(&base.algebra.space)).unwrap();
        assert_eq!(h.data(), base);
    }

    #[test]
    fn identity_antipode_fails_on_x() {
        let mut h = sweedler_data();
        h.antipode = LinearMap::identity(&h.algebra.space);
        let r = check_hom_hopf(&h);
        let c = r.get(ANTIPODE_IDENTITY).unwrap();
        assert_eq!(c.status, Status::Fail);
        assert_eq!(c.witness.as_ref().unwrap().basis, vec!["x".to_string()]);
    }

    #[test]
    fn non_multiplicative_coaction_fails() {
        let hopf = Arc::new(HomHopfAlgebra::new(kc2_data()).unwrap());
        let sp = hopf.space().clone();
        let sq = sp.tensor(&sp);
        // ρ(1) = 1⊗1, ρ(g) = g⊗1
        let coaction = LinearMap::from_basis_fn(&sp, &sq, |j| j * 2);
        let data = ComoduleAlgebraData { algebra: hopf.algebra().data().clone(), coaction };
        let r = check_comodule_algebra(&hopf, &data);
        let c = r.get("ρ(ab) = a₀b₀⊗a₁b₁").unwrap();
        assert_eq!(c.status, Status::Pass, "g⊗1 is multiplicative on kC₂; only the unit law is exercised");
        // Breaking the coaction on g by a scalar does break multiplicativity at (g, g).
        let coaction = LinearMap::from_fn(&sp, &sq, |j| if j == 0 { vec![(0, int(1))] } else { vec![(3, int(2))] });
        let data = ComoduleAlgebraData { algebra: hopf.algebra().data().clone(), coaction };
        let r = check_comodule_algebra(&hopf, &data);
        let c = r.get("ρ(ab) = a₀b₀⊗a₁b₁").unwrap();
        assert_eq!(c.status, Status::Fail);
        assert_eq!(c.witness.as_ref().unwrap().basis, vec!["g".to_string(), "g".to_string()]);
    }
}
