//! The instance file: structure constants as dense row-major rational
//! matrices in JSON, rationals written as strings `"p"` or `"p/q"`.
//!
//! A matrix of a map `X → Y` has `dim Y` rows and `dim X` columns; tensor
//! bases are ordered row-major (`e_i⊗e_j` has index `i·dim + j`).

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::galois::{canonical_psi, coinvariants, GaloisClass};
use crate::integrals::{find_quantum_integral, find_total_integral, QuantumDatum};
use crate::linalg::{format_scalar, parse_scalar, LinearMap, Space};
use crate::repcat::{check_rel_hopf, RelHopfData, RelHopfModule};
use crate::report::{check_identity, CheckResult, Report};
use crate::structures::{
    check_comodule_algebra, check_hom_algebra, check_hom_coalgebra, check_hom_hopf, ComoduleAlgebra,
    ComoduleAlgebraData, HomAlgebraData, HomCoalgebraData, HomHopfAlgebra, HomHopfData,
};

pub const FIELD_TAG: &str = "rational";
pub const DEFAULT_MAX_DIM: usize = 12;

/// `H`: algebra, coalgebra and automorphism; the antipode is optional so
/// that coalgebra data without a Hopf structure can be described.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfBlock {
    pub space: Space,
    pub mult: LinearMap,
    pub unit: LinearMap,
    pub comult: LinearMap,
    pub counit: LinearMap,
    pub antipode: Option<LinearMap>,
    pub alpha: LinearMap,
}

impl HopfBlock {
    pub fn from_hopf(h: &HomHopfAlgebra) -> Self {
        let d = h.data();
        Self {
            space: d.algebra.space,
            mult: d.algebra.mult,
            unit: d.algebra.unit,
            comult: d.comult,
            counit: d.counit,
            antipode: Some(d.antipode),
            alpha: d.algebra.alpha,
        }
    }

    pub fn algebra_data(&self) -> HomAlgebraData {
        HomAlgebraData {
            space: self.space.clone(),
            mult: self.mult.clone(),
            unit: self.unit.clone(),
            alpha: self.alpha.clone(),
        }
    }

    pub fn coalgebra_data(&self) -> HomCoalgebraData {
        HomCoalgebraData {
            space: self.space.clone(),
            comult: self.comult.clone(),
            counit: self.counit.clone(),
            gamma: self.alpha.clone(),
        }
    }

    pub fn hopf_data(&self) -> Option<HomHopfData> {
        Some(HomHopfData {
            algebra: self.algebra_data(),
            comult: self.comult.clone(),
            counit: self.counit.clone(),
            antipode: self.antipode.clone()?,
        })
    }
}

/// The comodule algebra `(A, β)` with its coaction `A → A⊗H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraBlock {
    pub space: Space,
    pub mult: LinearMap,
    pub unit: LinearMap,
    pub beta: LinearMap,
    pub coaction: LinearMap,
}

impl AlgebraBlock {
    pub fn from_comodule_algebra(a: &ComoduleAlgebra) -> Self {
        Self {
            space: a.space().clone(),
            mult: a.mult().clone(),
            unit: a.unit().clone(),
            beta: a.beta().clone(),
            coaction: a.coaction().clone(),
        }
    }

    pub fn algebra_data(&self) -> HomAlgebraData {
        HomAlgebraData {
            space: self.space.clone(),
            mult: self.mult.clone(),
            unit: self.unit.clone(),
            alpha: self.beta.clone(),
        }
    }
}

/// A relative Hom-Hopf module over the instance's comodule algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleBlock {
    pub name: String,
    pub space: Space,
    pub mu: LinearMap,
    pub action: LinearMap,
    pub coaction: LinearMap,
}

impl ModuleBlock {
    pub fn from_module(name: &str, m: &RelHopfModule) -> Self {
        let d = m.data();
        Self {
            name: name.to_string(),
            space: d.mu.domain().clone(),
            mu: d.mu.clone(),
            action: d.action.clone(),
            coaction: d.coaction.clone(),
        }
    }

    pub fn data(&self) -> RelHopfData {
        RelHopfData { mu: self.mu.clone(), action: self.action.clone(), coaction: self.coaction.clone() }
    }
}

/// An expected result: a truth value or a dimension/rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Expected {
    Bool(bool),
    Count(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub name: Option<String>,
    pub hopf: HopfBlock,
    pub comodule_algebra: Option<AlgebraBlock>,
    pub modules: Vec<ModuleBlock>,
    pub expected: BTreeMap<String, Expected>,
}

type RawMatrix = Vec<Vec<String>>;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    field: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    hopf: RawHopf,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    comodule_algebra: Option<RawAlgebra>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    modules: Vec<RawModule>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    expected: BTreeMap<String, Expected>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawHopf {
    dim: usize,
    basis: Vec<String>,
    mult: RawMatrix,
    unit: RawMatrix,
    comult: RawMatrix,
    counit: RawMatrix,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    antipode: Option<RawMatrix>,
    alpha: RawMatrix,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAlgebra {
    dim: usize,
    basis: Vec<String>,
    mult: RawMatrix,
    unit: RawMatrix,
    beta: RawMatrix,
    coaction: RawMatrix,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawModule {
    name: String,
    dim: usize,
    basis: Vec<String>,
    mu: RawMatrix,
    action: RawMatrix,
    coaction: RawMatrix,
}

fn to_raw(m: &LinearMap) -> RawMatrix {
    m.rows().iter().map(|r| r.iter().map(format_scalar).collect()).collect()
}

fn from_raw(raw: &RawMatrix, domain: &Space, codomain: &Space, what: &str) -> Result<LinearMap, Error> {
    let (rows, cols) = (codomain.dim(), domain.dim());
    if raw.len() != rows || raw.iter().any(|r| r.len() != cols) {
        let got_cols = raw.first().map_or(0, Vec::len);
        return Err(Error::Shape(format!(
            "{what}: expected a {rows}×{cols} matrix, found {}×{got_cols}",
            raw.len()
        )));
    }
    let parsed = raw
        .iter()
        .enumerate()
        .map(|(i, r)| {
            r.iter()
                .enumerate()
                .map(|(j, x)| parse_scalar(x).map_err(|e| Error::Parse(format!("{what}[{i}][{j}]: {e}"))))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    LinearMap::from_rows(domain, codomain, &parsed)
}

fn basis_space(dim: usize, basis: &[String], what: &str) -> Result<Space, Error> {
    if basis.len() != dim {
        return Err(Error::Shape(format!("{what}: dim is {dim} but {} basis labels are given", basis.len())));
    }
    Space::new(basis.to_vec())
}

impl Instance {
    /// Parses an instance file; dimensions of `H` and `A` above `max_dim` are rejected.
    pub fn parse(text: &str, max_dim: usize) -> Result<Self, Error> {
        let raw: RawFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if raw.field != FIELD_TAG {
            return Err(Error::Parse(format!("unsupported field {:?}; only {FIELD_TAG:?} is supported", raw.field)));
        }
        let k = Space::scalars();
        let rh = &raw.hopf;
        if rh.dim > max_dim {
            return Err(Error::TooLarge { dim: rh.dim, max: max_dim });
        }
        let h = basis_space(rh.dim, &rh.basis, "hopf")?;
        let hh = h.tensor(&h);
        let hopf = HopfBlock {
            mult: from_raw(&rh.mult, &hh, &h, "hopf.mult")?,
            unit: from_raw(&rh.unit, &k, &h, "hopf.unit")?,
            comult: from_raw(&rh.comult, &h, &hh, "hopf.comult")?,
            counit: from_raw(&rh.counit, &h, &k, "hopf.counit")?,
            antipode: rh.antipode.as_ref().map(|s| from_raw(s, &h, &h, "hopf.antipode")).transpose()?,
            alpha: from_raw(&rh.alpha, &h, &h, "hopf.alpha")?,
            space: h.clone(),
        };
        let comodule_algebra = match &raw.comodule_algebra {
            None => None,
            Some(ra) => {
                if ra.dim > max_dim {
                    return Err(Error::TooLarge { dim: ra.dim, max: max_dim });
                }
                let a = basis_space(ra.dim, &ra.basis, "comodule_algebra")?;
                Some(AlgebraBlock {
                    mult: from_raw(&ra.mult, &a.tensor(&a), &a, "comodule_algebra.mult")?,
                    unit: from_raw(&ra.unit, &k, &a, "comodule_algebra.unit")?,
                    beta: from_raw(&ra.beta, &a, &a, "comodule_algebra.beta")?,
                    coaction: from_raw(&ra.coaction, &a, &a.tensor(&h), "comodule_algebra.coaction")?,
                    space: a,
                })
            }
        };
        let mut modules = Vec::new();
        for rm in &raw.modules {
            let a = comodule_algebra
                .as_ref()
                .ok_or_else(|| Error::MissingBlock("comodule_algebra".into()))?;
            let what = format!("modules.{}", rm.name);
            let m = basis_space(rm.dim, &rm.basis, &what)?;
            modules.push(ModuleBlock {
                name: rm.name.clone(),
                mu: from_raw(&rm.mu, &m, &m, &format!("{what}.mu"))?,
                action: from_raw(&rm.action, &m.tensor(&a.space), &m, &format!("{what}.action"))?,
                coaction: from_raw(&rm.coaction, &m, &m.tensor(&h), &format!("{what}.coaction"))?,
                space: m,
            });
        }
        Ok(Self { name: raw.name, hopf, comodule_algebra, modules, expected: raw.expected })
    }

    /// Canonical JSON text; `parse` followed by `emit` reproduces it exactly.
    pub fn emit(&self) -> String {
        let h = &self.hopf;
        let raw = RawFile {
            field: FIELD_TAG.into(),
            name: self.name.clone(),
            hopf: RawHopf {
                dim: h.space.dim(),
                basis: h.space.labels().to_vec(),
                mult: to_raw(&h.mult),
                unit: to_raw(&h.unit),
                comult: to_raw(&h.comult),
                counit: to_raw(&h.counit),
                antipode: h.antipode.as_ref().map(to_raw),
                alpha: to_raw(&h.alpha),
            },
            comodule_algebra: self.comodule_algebra.as_ref().map(|a| RawAlgebra {
                dim: a.space.dim(),
                basis: a.space.labels().to_vec(),
                mult: to_raw(&a.mult),
                unit: to_raw(&a.unit),
                beta: to_raw(&a.beta),
                coaction: to_raw(&a.coaction),
            }),
            modules: self
                .modules
                .iter()
                .map(|m| RawModule {
                    name: m.name.clone(),
                    dim: m.space.dim(),
                    basis: m.space.labels().to_vec(),
                    mu: to_raw(&m.mu),
                    action: to_raw(&m.action),
                    coaction: to_raw(&m.coaction),
                })
                .collect(),
            expected: self.expected.clone(),
        };
        let mut text = serde_json::to_string_pretty(&raw).expect("instance serializes");
        text.push('\n');
        text
    }

    /// The validated Hom-Hopf algebra; needs the antipode.
    pub fn hopf(&self) -> Result<Arc<HomHopfAlgebra>, Error> {
        let data = self.hopf.hopf_data().ok_or_else(|| Error::MissingBlock("hopf.antipode".into()))?;
        Ok(Arc::new(HomHopfAlgebra::new(data)?))
    }

    fn algebra_block(&self) -> Result<&AlgebraBlock, Error> {
        self.comodule_algebra
            .as_ref()
            .ok_or_else(|| Error::MissingBlock("comodule_algebra".into()))
    }

    pub fn comodule_algebra(&self) -> Result<Arc<ComoduleAlgebra>, Error> {
        let a = self.algebra_block()?;
        let data = ComoduleAlgebraData { algebra: a.algebra_data(), coaction: a.coaction.clone() };
        Ok(Arc::new(ComoduleAlgebra::new(self.hopf()?, data)?))
    }

    pub fn modules(&self, a: &Arc<ComoduleAlgebra>) -> Result<Vec<RelHopfModule>, Error> {
        self.modules.iter().map(|m| RelHopfModule::new(m.data(), a.clone())).collect()
    }

    /// The integral datum. With an antipode the comodule algebra is validated
    /// first; without one the raw coalgebra datum is used.
    pub fn datum(&self) -> Result<QuantumDatum, Error> {
        if self.hopf.antipode.is_some() {
            return Ok(QuantumDatum::from_comodule_algebra(&*self.comodule_algebra()?));
        }
        let a = self.algebra_block()?;
        QuantumDatum::new(
            self.hopf.algebra_data(),
            self.hopf.comult.clone(),
            self.hopf.counit.clone(),
            a.algebra_data(),
            a.coaction.clone(),
        )
    }

    /// Every structural check the blocks call for. Checks that depend on a
    /// block that already failed are reported as skipped.
    pub fn structure_report(&self) -> Report {
        let mut r = Report::new(format!("structure of {}", self.name.as_deref().unwrap_or("instance")));
        let Some(hd) = self.hopf.hopf_data() else {
            r.extend_prefixed("H algebra", check_hom_algebra(&self.hopf.algebra_data()));
            r.extend_prefixed("H coalgebra", check_hom_coalgebra(&self.hopf.coalgebra_data()));
            if let Some(a) = &self.comodule_algebra {
                r.extend_prefixed("A", datum_checks(&self.hopf, a));
            }
            return r;
        };
        let hr = check_hom_hopf(&hd);
        let hopf_ok = hr.all_passed();
        r.extend_prefixed("H", hr);
        let Some(ab) = &self.comodule_algebra else {
            return r;
        };
        if !hopf_ok {
            r.push(CheckResult::skipped("A", "H fails its axioms"));
            return r;
        }
        let h = HomHopfAlgebra::new(hd).expect("checked above");
        let data = ComoduleAlgebraData { algebra: ab.algebra_data(), coaction: ab.coaction.clone() };
        let ar = check_comodule_algebra(&h, &data);
        let a_ok = ar.all_passed();
        r.extend_prefixed("A", ar);
        for m in &self.modules {
            let name = format!("module {}", m.name);
            if a_ok {
                let a = ComoduleAlgebra::new(Arc::new(h.clone()), data.clone()).expect("checked above");
                r.extend_prefixed(&name, check_rel_hopf(&m.data(), &a));
            } else {
                r.push(CheckResult::skipped(name, "A fails its axioms"));
            }
        }
        r
    }
}

/// What a coaction must satisfy for the integral conditions to make sense
/// when `H` carries no Hopf structure: `A` is a Hom-algebra and `ρ` is a
/// unital, multiplicative map intertwining `β` with `β⊗α`. Coassociativity
/// and counitality of `ρ` are not required.
pub fn datum_checks(h: &HopfBlock, a: &AlgebraBlock) -> Report {
    let mut r = Report::new("coaction datum");
    r.extend_prefixed("algebra", check_hom_algebra(&a.algebra_data()));
    let (sa, sh) = (&a.space, &h.space);
    let rho = &a.coaction;
    let mid = LinearMap::permute_factors(&[sa, sh, sa, sh], &[0, 2, 1, 3]);
    r.push(check_identity(
        "ρ(ab) = a₀b₀⊗a₁b₁",
        &rho.compose(&a.mult),
        &a.mult.tensor(&h.mult).compose(&mid).compose(&rho.tensor(rho)),
    ));
    r.push(check_identity("ρ(1) = 1⊗1", &rho.compose(&a.unit), &a.unit.tensor(&h.unit)));
    r.push(check_identity("ρ(β(a)) = β(a₀)⊗α(a₁)", &rho.compose(&a.beta), &a.beta.tensor(&h.alpha).compose(rho)));
    r
}

/// Reads `HOMHOPF_MAX_DIM`, falling back to the default on absence or garbage.
pub fn max_dim_from_env() -> usize {
    std::env::var("HOMHOPF_MAX_DIM")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_DIM)
}

/// Names of the keys an `expected` block may contain.
pub mod keys {
    /// All structural checks pass.
    pub const STRUCTURE: &str = "structure";
    pub const TOTAL_INTEGRAL: &str = "total_integral";
    /// Dimension of the solution family of the total-integral system.
    pub const TOTAL_INTEGRAL_FAMILY: &str = "total_integral_family_dim";
    pub const TOTAL_QUANTUM_INTEGRAL: &str = "total_quantum_integral";
    pub const COINVARIANTS_DIM: &str = "coinvariants_dim";
    pub const PSI_RANK: &str = "psi_rank";
    /// The canonical map `A⊗_B A → A⊗H` is bijective.
    pub const GALOIS: &str = "galois_bijective";

    pub const ALL: [&str; 7] =
        [STRUCTURE, TOTAL_INTEGRAL, TOTAL_INTEGRAL_FAMILY, TOTAL_QUANTUM_INTEGRAL, COINVARIANTS_DIM, PSI_RANK, GALOIS];
}

/// Computes the value behind an `expected` key.
pub fn compute_expected(inst: &Instance, key: &str) -> Result<Expected, Error> {
    use keys::*;
    Ok(match key {
        STRUCTURE => Expected::Bool(inst.structure_report().all_passed()),
        TOTAL_INTEGRAL => Expected::Bool(find_total_integral(&inst.datum()?).is_ok()),
        TOTAL_INTEGRAL_FAMILY => match find_total_integral(&inst.datum()?) {
            Ok(t) => Expected::Count(t.family.len()),
            Err(_) => return Err(Error::Parse(format!("{key}: no total integral exists"))),
        },
        TOTAL_QUANTUM_INTEGRAL => Expected::Bool(find_quantum_integral(&inst.datum()?, true).is_ok()),
        COINVARIANTS_DIM => Expected::Count(coinvariants(&*inst.comodule_algebra()?)?.subspace.dim()),
        PSI_RANK | GALOIS => {
            let a = inst.comodule_algebra()?;
            let psi = canonical_psi(&a, &coinvariants(&a)?)?;
            if key == PSI_RANK {
                Expected::Count(psi.rank)
            } else {
                Expected::Bool(psi.class == GaloisClass::Bijective)
            }
        }
        other => return Err(Error::Parse(format!("unknown expected key {other:?}"))),
    })
}

fn show(e: &Expected) -> String {
    match e {
        Expected::Bool(b) => b.to_string(),
        Expected::Count(n) => n.to_string(),
    }
}

/// Compares every entry of the `expected` block with the recomputed value.
pub fn evaluate(inst: &Instance) -> Result<Report, Error> {
    let mut r = Report::new("expected results");
    for (key, want) in &inst.expected {
        let got = compute_expected(inst, key)?;
        let check = CheckResult::from_bool(format!("expected {key} = {}", show(want)), got == *want);
        r.push(if got == *want { check } else { check.with_detail(format!("computed {}", show(&got))) });
    }
    Ok(r)
}
