//! Built-in instances: classical Hopf algebras with `α = id`, a twisted group
//! algebra, the matrix and group-algebra integral data, and negative cases.

use std::collections::BTreeMap;
use std::sync::Arc;

use num::Zero;

use crate::error::Error;
use crate::instance::{evaluate, AlgebraBlock, Expected, HopfBlock, Instance, ModuleBlock};
use crate::integrals::{is_total, verify_quantum_integral, QuantumDatum};
use crate::linalg::{int, LinearMap, Scalar, Space};
use crate::repcat::{induce_g, RelHopfModule};
use crate::report::{CheckResult, Report};
use crate::structures::{
    basis_vector, twist, ComoduleAlgebra, ComoduleAlgebraData, HomAlgebraData, HomHopfAlgebra, HomHopfData,
};

fn cyclic_labels(n: usize) -> Space {
    let labels: Vec<String> = (0..n)
        .map(|k| match k {
            0 => "1".to_string(),
            1 => "g".to_string(),
            2 => "g²".to_string(),
            3 => "g³".to_string(),
            _ => format!("g^{k}"),
        })
        .collect();
    Space::new(labels).expect("distinct labels")
}

/// The group algebra `kC_n` as an ordinary Hopf algebra.
pub fn cyclic_group_data(n: usize) -> HomHopfData {
    let sp = cyclic_labels(n);
    let k = Space::scalars();
    HomHopfData {
        algebra: HomAlgebraData::group_algebra(&sp, |a, b| (a + b) % n),
        comult: LinearMap::from_basis_fn(&sp, &sp.tensor(&sp), |j| j * n + j),
        counit: LinearMap::from_basis_fn(&sp, &k, |_| 0),
        antipode: LinearMap::from_basis_fn(&sp, &sp, |j| (n - j) % n),
    }
}

pub fn kc2_data() -> HomHopfData {
    cyclic_group_data(2)
}

pub fn kc3_data() -> HomHopfData {
    cyclic_group_data(3)
}

/// Sweedler's four-dimensional Hopf algebra on the basis `1, g, x, gx`.
pub fn sweedler_data() -> HomHopfData {
    let sp = Space::from_labels(&["1", "g", "x", "gx"]);
    let sq = sp.tensor(&sp);
    let k = Space::scalars();
    // (coefficient, basis index) of the product e_i e_j; None is zero.
    let table = |i: usize, j: usize| -> Option<(i64, usize)> {
        match (i, j) {
            (0, j) => Some((1, j)),
            (i, 0) => Some((1, i)),
            (1, 1) => Some((1, 0)),
            (1, 2) => Some((1, 3)),
            (1, 3) => Some((1, 2)),
            (2, 1) => Some((-1, 3)),
            (3, 1) => Some((-1, 2)),
            _ => None,
        }
    };
    let mult = LinearMap::from_fn(&sq, &sp, |col| {
        table(col / 4, col % 4).map(|(c, e)| (e, int(c))).into_iter().collect()
    });
    let t = |a: usize, b: usize| a * 4 + b;
    let comult = LinearMap::from_fn(&sp, &sq, |j| match j {
        0 => vec![(t(0, 0), int(1))],
        1 => vec![(t(1, 1), int(1))],
        2 => vec![(t(2, 0), int(1)), (t(1, 2), int(1))],
        _ => vec![(t(3, 1), int(1)), (t(0, 3), int(1))],
    });
    let counit = LinearMap::from_fn(&sp, &k, |j| if j < 2 { vec![(0, int(1))] } else { Vec::new() });
    let antipode = LinearMap::from_fn(&sp, &sp, |j| match j {
        0 => vec![(0, int(1))],
        1 => vec![(1, int(1))],
        2 => vec![(3, int(-1))],
        _ => vec![(2, int(1))],
    });
    HomHopfData {
        algebra: HomAlgebraData {
            space: sp.clone(),
            mult,
            unit: LinearMap::from_basis_fn(&k, &sp, |_| 0),
            alpha: LinearMap::identity(&sp),
        },
        comult,
        counit,
        antipode,
    }
}

/// `kCₙ` twisted by the group automorphism `g ↦ gᵏ` (`k` a unit mod `n`).
pub fn cyclic_twisted(n: usize, k: usize) -> Result<HomHopfAlgebra, Error> {
    let base = cyclic_group_data(n);
    let sp = base.algebra.space.clone();
    let aut = LinearMap::from_basis_fn(&sp, &sp, |j| (k * j) % n);
    twist(&base, &aut)
}

/// `kC₃` twisted by the automorphism `g ↦ g²`.
pub fn kc3_twisted() -> HomHopfAlgebra {
    cyclic_twisted(3, 2).expect("g ↦ g² is a Hopf automorphism of kC₃")
}

/// Sweedler's algebra twisted by `x ↦ 2x`, `gx ↦ 2gx`. Noncommutative with an
/// automorphism of infinite order, so it separates formulas that agree
/// whenever `α² = id`. Not a catalog entry.
pub fn sweedler_twisted() -> HomHopfAlgebra {
    let base = sweedler_data();
    let sp = base.algebra.space.clone();
    let aut = LinearMap::from_fn(&sp, &sp, |j| vec![(j, int(if j >= 2 { 2 } else { 1 }))]);
    twist(&base, &aut).expect("diagonal scaling of the nilpotent part is a Hopf automorphism")
}


/// The split algebra `k×k` with orthogonal idempotents `e₁, e₂` and `β = id`.
pub fn split_algebra() -> HomAlgebraData {
    let sp = Space::from_labels(&["e₁", "e₂"]);
    let sq = sp.tensor(&sp);
    HomAlgebraData {
        mult: LinearMap::from_fn(&sq, &sp, |j| if j == 0 || j == 3 { vec![(j / 2, int(1))] } else { Vec::new() }),
        unit: LinearMap::from_fn(&Space::scalars(), &sp, |_| vec![(0, int(1)), (1, int(1))]),
        alpha: LinearMap::identity(&sp),
        space: sp,
    }
}

/// `H⊗D` for an algebra `D` with trivial coaction: `ρ(h⊗d) = (h₁⊗d)⊗h₂`.
/// Needs `α = id` and `β_D = id`.
fn regular_times(h: Arc<HomHopfAlgebra>, d: HomAlgebraData) -> Result<ComoduleAlgebra, Error> {
    let (sh, sd) = (h.space().clone(), d.space.clone());
    let sa = sh.tensor(&sd);
    let shuffle = LinearMap::permute_factors(&[&sh, &sd, &sh, &sd], &[0, 2, 1, 3]);
    let algebra = HomAlgebraData {
        mult: h.mult().tensor(&d.mult).compose(&shuffle).with_spaces(&sa.tensor(&sa), &sa),
        unit: h.unit().tensor(&d.unit).with_spaces(&Space::scalars(), &sa),
        alpha: h.alpha().tensor(&d.alpha),
        space: sa.clone(),
    };
    let coaction = LinearMap::permute_factors(&[&sh, &sh, &sd], &[0, 2, 1])
        .compose(&h.comult().tensor(&LinearMap::identity(&sd)))
        .with_spaces(&sa, &sa.tensor(&sh));
    ComoduleAlgebra::new(h, ComoduleAlgebraData { algebra, coaction })
}

/// The matrix coalgebra `M²(k)` on `c₁₁, c₁₂, c₂₁, c₂₂` with
/// `Δ(c_ij) = Σ_u c_iu⊗c_uj`, `ε(c_ij) = δ_ij`, the matrix-unit product
/// `c_ij c_kl = δ_jk c_il`, unit `c₁₁ + c₂₂` and `α = id`. No antipode.
pub fn matrix_coalgebra(n: usize) -> HopfBlock {
    let labels: Vec<String> = (0..n * n).map(|k| format!("c{}{}", k / n + 1, k % n + 1)).collect();
    let sp = Space::new(labels).expect("distinct labels");
    let sq = sp.tensor(&sp);
    let k = Space::scalars();
    let c = |i: usize, j: usize| i * n + j;
    let m2 = n * n;
    HopfBlock {
        mult: LinearMap::from_fn(&sq, &sp, |x| {
            let (a, b) = (x / m2, x % m2);
            let ((i, j), (kk, l)) = ((a / n, a % n), (b / n, b % n));
            if j == kk { vec![(c(i, l), int(1))] } else { Vec::new() }
        }),
        unit: LinearMap::from_fn(&k, &sp, |_| (0..n).map(|i| (c(i, i), int(1))).collect()),
        comult: LinearMap::from_fn(&sp, &sq, |x| {
            let (i, j) = (x / n, x % n);
            (0..n).map(|u| (c(i, u) * m2 + c(u, j), int(1))).collect()
        }),
        counit: LinearMap::from_fn(&sp, &k, |x| if x / n == x % n { vec![(0, int(1))] } else { Vec::new() }),
        antipode: None,
        alpha: LinearMap::identity(&sp),
        space: sp,
    }
}

/// The coaction datum over `M²(k)`: `A = k×k` with `ρ(a) = a⊗1_H`, so every
/// element of `A` is coinvariant.
pub fn matrix_datum() -> (HopfBlock, AlgebraBlock) {
    let h = matrix_coalgebra(2);
    let d = split_algebra();
    let coaction = LinearMap::identity(&d.space)
        .tensor(&h.unit)
        .with_spaces(&d.space, &d.space.tensor(&h.space));
    let a = AlgebraBlock { space: d.space, mult: d.mult, unit: d.unit, beta: d.alpha, coaction };
    (h, a)
}

pub const ENTRY_NAMES: [&str; 8] = [
    "kC2",
    "kC3",
    "kC3-twisted",
    "sweedler-H4",
    "matrix-datum-2",
    "kG-C2-datum",
    "trivial-k-over-kC2",
    "trivial-k-over-H4",
];

pub fn list() -> &'static [&'static str] {
    &ENTRY_NAMES
}

/// A named, structurally verified instance with its expected results.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub instance: Instance,
}

impl CatalogEntry {
    pub fn has_antipode(&self) -> bool {
        self.instance.hopf.antipode.is_some()
    }

    pub fn hopf(&self) -> Result<Arc<HomHopfAlgebra>, Error> {
        self.instance.hopf()
    }

    pub fn comodule_algebra(&self) -> Result<Arc<ComoduleAlgebra>, Error> {
        self.instance.comodule_algebra()
    }

    pub fn modules(&self) -> Result<Vec<RelHopfModule>, Error> {
        self.instance.modules(&self.comodule_algebra()?)
    }

    pub fn datum(&self) -> Result<QuantumDatum, Error> {
        self.instance.datum()
    }

    /// Recomputes every expected value.
    pub fn regression_report(&self) -> Result<Report, Error> {
        evaluate(&self.instance)
    }
}

fn expected(pairs: &[(&str, Expected)]) -> BTreeMap<String, Expected> {
    pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

use Expected::{Bool as B, Count as N};

fn hopf_instance(
    name: &str,
    a: ComoduleAlgebra,
    exp: &[(&str, Expected)],
) -> Result<Instance, Error> {
    let a = Arc::new(a);
    let reg = RelHopfModule::regular(a.clone());
    let ga = induce_g(&reg.forget_coaction(), &a)?;
    Ok(Instance {
        name: Some(name.to_string()),
        hopf: HopfBlock::from_hopf(a.hopf()),
        comodule_algebra: Some(AlgebraBlock::from_comodule_algebra(&a)),
        modules: vec![ModuleBlock::from_module("A", &reg), ModuleBlock::from_module("G(A)", &ga)],
        expected: expected(exp),
    })
}

fn regular(h: HomHopfAlgebra) -> Result<ComoduleAlgebra, Error> {
    ComoduleAlgebra::regular(Arc::new(h))
}

fn trivial_k(h: HomHopfData) -> Result<ComoduleAlgebra, Error> {
    ComoduleAlgebra::trivial(Arc::new(HomHopfAlgebra::new(h)?), HomAlgebraData::ground_field())
}

/// Builds the named entry and runs its structural checks.
pub fn entry(name: &str) -> Result<CatalogEntry, Error> {
    use crate::instance::keys::*;
    let (name, description, instance) = match name {
        "kC2" => (
            "kC2",
            "group algebra of C₂ over itself",
            hopf_instance(
                "kC2",
                regular(HomHopfAlgebra::new(kc2_data())?)?,
                &[
                    (STRUCTURE, B(true)),
                    (TOTAL_INTEGRAL, B(true)),
                    (TOTAL_INTEGRAL_FAMILY, N(1)),
                    (TOTAL_QUANTUM_INTEGRAL, B(true)),
                    (COINVARIANTS_DIM, N(1)),
                    (PSI_RANK, N(4)),
                    (GALOIS, B(true)),
                ],
            )?,
        ),
        "kC3" => (
            "kC3",
            "group algebra of C₃ over itself",
            hopf_instance(
                "kC3",
                regular(HomHopfAlgebra::new(kc3_data())?)?,
                &[
                    (STRUCTURE, B(true)),
                    (TOTAL_INTEGRAL, B(true)),
                    (TOTAL_INTEGRAL_FAMILY, N(2)),
                    (TOTAL_QUANTUM_INTEGRAL, B(true)),
                    (COINVARIANTS_DIM, N(1)),
                    (PSI_RANK, N(9)),
                    (GALOIS, B(true)),
                ],
            )?,
        ),
        "kC3-twisted" => (
            "kC3-twisted",
            "kC₃ twisted by g ↦ g², over itself",
            hopf_instance(
                "kC3-twisted",
                regular(kc3_twisted())?,
                &[
                    (STRUCTURE, B(true)),
                    (TOTAL_INTEGRAL, B(true)),
                    (TOTAL_INTEGRAL_FAMILY, N(1)),
                    (TOTAL_QUANTUM_INTEGRAL, B(true)),
                    (COINVARIANTS_DIM, N(1)),
                    (PSI_RANK, N(9)),
                    (GALOIS, B(true)),
                ],
            )?,
        ),
        "sweedler-H4" => (
            "sweedler-H4",
            "Sweedler's four-dimensional Hopf algebra over itself",
            hopf_instance(
                "sweedler-H4",
                regular(HomHopfAlgebra::new(sweedler_data())?)?,
                &[
                    (STRUCTURE, B(true)),
                    (TOTAL_INTEGRAL, B(true)),
                    (TOTAL_INTEGRAL_FAMILY, N(3)),
                    (TOTAL_QUANTUM_INTEGRAL, B(true)),
                    (COINVARIANTS_DIM, N(1)),
                    (PSI_RANK, N(16)),
                    (GALOIS, B(true)),
                ],
            )?,
        ),
        "matrix-datum-2" => {
            let (h, a) = matrix_datum();
            (
                "matrix-datum-2",
                "matrix coalgebra M²(k) coacting trivially on k×k (integral datum, no antipode)",
                Instance {
                    name: Some("matrix-datum-2".into()),
                    hopf: h,
                    comodule_algebra: Some(a),
                    modules: Vec::new(),
                    expected: expected(&[
                        (STRUCTURE, B(true)),
                        (TOTAL_INTEGRAL, B(false)),
                        (TOTAL_QUANTUM_INTEGRAL, B(true)),
                    ]),
                },
            )
        }
        "kG-C2-datum" => (
            "kG-C2-datum",
            "kC₂ coacting on kC₂⊗(k×k) through the first factor",
            hopf_instance(
                "kG-C2-datum",
                regular_times(Arc::new(HomHopfAlgebra::new(kc2_data())?), split_algebra())?,
                &[
                    (STRUCTURE, B(true)),
                    (TOTAL_INTEGRAL, B(true)),
                    (TOTAL_INTEGRAL_FAMILY, N(2)),
                    (TOTAL_QUANTUM_INTEGRAL, B(true)),
                    (COINVARIANTS_DIM, N(2)),
                    (PSI_RANK, N(8)),
                    (GALOIS, B(true)),
                ],
            )?,
        ),
        "trivial-k-over-kC2" => (
            "trivial-k-over-kC2",
            "the ground field with the trivial kC₂-coaction",
            hopf_instance(
                "trivial-k-over-kC2",
                trivial_k(kc2_data())?,
                &[
                    (STRUCTURE, B(true)),
                    (TOTAL_INTEGRAL, B(true)),
                    (TOTAL_INTEGRAL_FAMILY, N(0)),
                    (TOTAL_QUANTUM_INTEGRAL, B(true)),
                    (COINVARIANTS_DIM, N(1)),
                    (PSI_RANK, N(1)),
                    (GALOIS, B(false)),
                ],
            )?,
        ),
        "trivial-k-over-H4" => (
            "trivial-k-over-H4",
            "the ground field with the trivial H₄-coaction",
            hopf_instance(
                "trivial-k-over-H4",
                trivial_k(sweedler_data())?,
                &[
                    (STRUCTURE, B(true)),
                    (TOTAL_INTEGRAL, B(false)),
                    (TOTAL_QUANTUM_INTEGRAL, B(false)),
                    (COINVARIANTS_DIM, N(1)),
                    (PSI_RANK, N(1)),
                    (GALOIS, B(false)),
                ],
            )?,
        ),
        other => return Err(Error::UnknownEntry(other.to_string())),
    };
    let report = instance.structure_report();
    if !report.all_passed() {
        return Err(Error::InvalidStructure(Box::new(report)));
    }
    Ok(CatalogEntry { name, description, instance })
}

/// Every entry, in catalog order.
pub fn all_entries() -> Result<Vec<CatalogEntry>, Error> {
    ENTRY_NAMES.iter().map(|n| entry(n)).collect()
}

/// The two integral families: the matrix one on `matrix-datum-2` and the
/// group one on `kG-C2-datum`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IntegralFamily {
    /// `γ(c_ij)(c_rs) = δ_is β(μ_rj)`; total iff `Σ_u β(μ_uu) = 1_A`.
    Matrix,
    /// `γ(x)(y) = δ_xy β(μ_xy)`; total iff `μ_xx = 1_A` for every `x`.
    Group,
}

#[derive(Clone, Debug)]
pub struct FamilyOutcome {
    pub report: Report,
    pub gamma_hat: LinearMap,
    pub quantum: bool,
    pub total: bool,
    /// The closed-form totality condition on `μ`.
    pub condition: bool,
}

pub const FAMILY_QUANTUM: &str = "γ is a quantum integral";
pub const FAMILY_TOTAL: &str = "γ is total";
pub const FAMILY_CONDITION: &str = "closed-form totality condition";
pub const FAMILY_AGREE: &str = "total ⇔ closed-form condition";

/// Builds `γ` from the parameter matrix `μ` (entries are coordinate vectors
/// in `A`, indexed like the basis of `H` for the group case), verifies the
/// quantum-integral identities and compares totality with the closed form.
pub fn example47_verify(which: IntegralFamily, mu: &[Vec<Vec<Scalar>>]) -> Result<FamilyOutcome, Error> {
    let e = entry(match which {
        IntegralFamily::Matrix => "matrix-datum-2",
        IntegralFamily::Group => "kG-C2-datum",
    })?;
    let d = e.datum()?;
    let (sh, sa) = (&d.h_space, &d.a_space);
    let n = match which {
        IntegralFamily::Matrix => (sh.dim() as f64).sqrt().round() as usize,
        IntegralFamily::Group => sh.dim(),
    };
    if mu.len() != n || mu.iter().any(|r| r.len() != n || r.iter().any(|v| v.len() != sa.dim())) {
        return Err(Error::Shape(format!("μ must be a {n}×{n} matrix of vectors of length {}", sa.dim())));
    }
    // Coinvariance: ρ(μ) = β⁻¹(μ)⊗1_H.
    let one_h = d.h_unit.column_dense(0);
    for (r, row) in mu.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            let lhs = d.coaction.apply(v);
            let b = d.beta_inv.apply(v);
            let rhs: Vec<Scalar> = b.iter().flat_map(|x| one_h.iter().map(move |y| x * y)).collect();
            if lhs != rhs {
                return Err(Error::ParametersNotCoinvariant { name: format!("μ[{r}][{j}]") });
            }
        }
    }
    let beta_mu: Vec<Vec<Vec<Scalar>>> = mu.iter().map(|row| row.iter().map(|v| d.beta.apply(v)).collect()).collect();
    let hh = sh.tensor(sh);
    let gamma_hat = LinearMap::from_fn(&hh, sa, |col| {
        let (g, h) = (col / sh.dim(), col % sh.dim());
        let value = match which {
            IntegralFamily::Matrix => {
                // g = c_ij, h = c_rs
                let ((i, j), (r, s)) = ((g / n, g % n), (h / n, h % n));
                (i == s).then(|| &beta_mu[r][j])
            }
            IntegralFamily::Group => (g == h).then(|| &beta_mu[g][h]),
        };
        value
            .map(|v| v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(k, x)| (k, x.clone())).collect())
            .unwrap_or_default()
    });
    let one_a = d.a_unit.column_dense(0);
    let condition = match which {
        IntegralFamily::Matrix => {
            let mut trace = vec![Scalar::zero(); sa.dim()];
            for (u, row) in beta_mu.iter().enumerate() {
                for (t, x) in trace.iter_mut().zip(&row[u]) {
                    *t += x;
                }
            }
            trace == one_a
        }
        IntegralFamily::Group => mu.iter().enumerate().all(|(x, row)| row[x] == one_a),
    };
    let qr = verify_quantum_integral(&d, &gamma_hat, false);
    let quantum = qr.all_passed();
    let total = is_total(&d, &gamma_hat);
    let mut report = Report::new(match which {
        IntegralFamily::Matrix => "matrix integral family",
        IntegralFamily::Group => "group integral family",
    });
    report.extend_prefixed("γ", qr);
    report.fact(FAMILY_QUANTUM, quantum, None);
    report.fact(FAMILY_TOTAL, total, None);
    report.fact(FAMILY_CONDITION, condition, None);
    report.push(CheckResult::from_bool(FAMILY_AGREE, total == condition));
    Ok(FamilyOutcome { report, gamma_hat, quantum, total, condition })
}

/// `μ` with scalar entries `c·1_A`.
pub fn scalar_parameters(which: IntegralFamily, entries: &[Vec<i64>]) -> Result<Vec<Vec<Vec<Scalar>>>, Error> {
    let e = entry(match which {
        IntegralFamily::Matrix => "matrix-datum-2",
        IntegralFamily::Group => "kG-C2-datum",
    })?;
    let one = e.datum()?.a_unit.column_dense(0);
    Ok(entries
        .iter()
        .map(|row| row.iter().map(|&c| one.iter().map(|x| x * int(c)).collect()).collect())
        .collect())
}

/// The coordinate vector of the `i`-th basis element of `A` in an entry.
pub fn a_basis(e: &CatalogEntry, i: usize) -> Vec<Scalar> {
    let dim = e.instance.comodule_algebra.as_ref().map_or(0, |a| a.space.dim());
    basis_vector(dim, i)
}
