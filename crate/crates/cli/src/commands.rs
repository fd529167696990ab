use std::fmt::Write as _;
use std::path::Path;
use std::sync::Arc;
use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use homhopf::catalog;
use homhopf::galois::{
    canonical_psi, coinvariants, cor58_check, default_test_modules, prop51_report, tensor_over_b_structure,
    thm56_report, thm57_check, trace_report, GaloisClass,
};
use homhopf::instance::{evaluate, keys, max_dim_from_env, Instance};
use homhopf::integrals::{
    find_quantum_integral, find_total_integral, generator_report, theorem43_check, verify_quantum_integral,
    verify_total_integral, QuantumDatum,
};
use homhopf::repcat::{check_rel_hopf, RelHopfModule};
use homhopf::linalg::format_scalar;
use homhopf::report::Report;
use homhopf::structures::ComoduleAlgebra;
use homhopf::Error;

use crate::TheoremId;

#[derive(Debug, Error)]
pub enum RunError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Core(#[from] Error),
}

impl RunError {
    /// 2 for anything wrong with the input, 1 for a mathematical failure.
    pub fn exit_code(&self) -> u8 {
        match self {
            RunError::Io { .. } => 2,
            RunError::Core(e) => match e {
                Error::Parse(_)
                | Error::Shape(_)
                | Error::MissingBlock(_)
                | Error::TooLarge { .. }
                | Error::UnknownEntry(_) => 2,
                _ => 1,
            },
        }
    }

    pub fn report(&self) -> Option<&Report> {
        match self {
            RunError::Core(Error::InvalidStructure(r)) => Some(r),
            _ => None,
        }
    }
}

/// Outcome of an integral solve, for external consumers.
#[derive(Serialize)]
pub struct SolverSummary {
    pub feasible: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family_dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub system_rank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub augmented_rank: Option<usize>,
    /// Dual vector over the residual coordinates; see `InfeasibilityWitness`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dual: Option<Vec<String>>,
}

#[derive(Serialize)]
pub struct RunReport {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instance: Option<String>,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub solver: Option<SolverSummary>,
    pub reports: Vec<Report>,
    /// Excluded from the machine-readable output so that it is deterministic.
    #[serde(skip)]
    pub elapsed_ms: u128,
    #[serde(skip)]
    pub summary: Option<String>,
}

pub enum Outcome {
    Run(RunReport),
    Text { prose: String, json: String },
}

impl Outcome {
    pub fn exit_code(&self) -> u8 {
        match self {
            Outcome::Run(r) if !r.passed => 1,
            _ => 0,
        }
    }

    pub fn prose(&self) -> String {
        match self {
            Outcome::Text { prose, .. } => prose.clone(),
            Outcome::Run(r) => {
                let mut out = String::new();
                for rep in &r.reports {
                    let _ = write!(out, "{rep}");
                }
                if let Some(s) = &r.summary {
                    let _ = writeln!(out, "{s}");
                }
                let _ = writeln!(
                    out,
                    "{}: {} ({} ms)",
                    r.command,
                    if r.passed { "PASS" } else { "FAIL" },
                    r.elapsed_ms
                );
                out
            }
        }
    }

    pub fn json(&self) -> String {
        match self {
            Outcome::Text { json, .. } => json.clone(),
            Outcome::Run(r) => serde_json::to_string_pretty(r).expect("report serializes") + "\n",
        }
    }
}

fn load(path: &Path) -> Result<Instance, RunError> {
    let text = std::fs::read_to_string(path).map_err(|source| RunError::Io { path: path.display().to_string(), source })?;
    Ok(Instance::parse(&text, max_dim_from_env())?)
}

struct Run {
    command: String,
    instance: Option<String>,
    reports: Vec<Report>,
    solver: Option<SolverSummary>,
    summary: Option<String>,
    started: Instant,
}

impl Run {
    fn new(command: &str, inst: &Instance) -> Self {
        Self {
            command: command.into(),
            instance: inst.name.clone(),
            reports: Vec::new(),
            solver: None,
            summary: None,
            started: Instant::now(),
        }
    }

    /// Adds the comparison against the file's `expected` block, restricted to `keys`.
    fn expect(&mut self, inst: &Instance, keys: &[&str]) -> Result<(), Error> {
        let mut sub = inst.clone();
        sub.expected.retain(|k, _| keys.contains(&k.as_str()));
        if !sub.expected.is_empty() {
            self.reports.push(evaluate(&sub)?);
        }
        Ok(())
    }

    fn finish(self) -> Outcome {
        let passed = self.reports.iter().all(Report::all_passed);
        Outcome::Run(RunReport {
            command: self.command,
            instance: self.instance,
            passed,
            solver: self.solver,
            reports: self.reports,
            elapsed_ms: self.started.elapsed().as_millis(),
            summary: self.summary,
        })
    }
}

pub fn check(path: &Path) -> Result<Outcome, RunError> {
    let inst = load(path)?;
    let mut run = Run::new("check", &inst);
    run.reports.push(inst.structure_report());
    run.expect(&inst, &[keys::STRUCTURE])?;
    Ok(run.finish())
}

pub fn integral(path: &Path, quantum: bool, total: bool) -> Result<Outcome, RunError> {
    let inst = load(path)?;
    let d = inst.datum()?;
    let mut run = Run::new("integral", &inst);
    if quantum {
        integral_quantum(&mut run, &d, total);
        run.expect(&inst, if total { &[keys::TOTAL_QUANTUM_INTEGRAL] } else { &[] })?;
    } else {
        integral_total(&mut run, &d);
        run.expect(&inst, &[keys::TOTAL_INTEGRAL, keys::TOTAL_INTEGRAL_FAMILY])?;
    }
    Ok(run.finish())
}

fn integral_total(run: &mut Run, d: &QuantumDatum) {
    match find_total_integral(d) {
        Ok(t) => {
            // Re-substitution, independent of the elimination that found φ.
            let mut r = verify_total_integral(d, &t.phi);
            r.fact("a total integral exists", true, Some(format!("solution family dim {}", t.family.len())));
            run.summary = Some(format!("feasible, solution family dim {}", t.family.len()));
            run.solver =
                Some(SolverSummary { feasible: true, family_dim: Some(t.family.len()), system_rank: None, augmented_rank: None, dual: None });
            run.reports.push(r);
        }
        Err(w) => {
            let mut r = Report::new("total integral");
            let detail = format!("rank {} < augmented rank {}", w.system_rank, w.augmented_rank);
            r.fact("a total integral exists", false, Some(detail.clone()));
            run.summary = Some(format!("infeasible, {detail}"));
            run.solver = Some(SolverSummary {
                feasible: false,
                family_dim: None,
                system_rank: Some(w.system_rank),
                augmented_rank: Some(w.augmented_rank),
                dual: Some(w.dual.iter().map(format_scalar).collect()),
            });
            run.reports.push(r);
        }
    }
}

fn integral_quantum(run: &mut Run, d: &QuantumDatum, total: bool) {
    let what = if total { "a total quantum integral exists" } else { "a quantum integral exists" };
    match find_quantum_integral(d, total) {
        Ok(q) => {
            let mut r = verify_quantum_integral(d, &q.gamma_hat, total);
            r.fact(what, true, Some(format!("solution family dim {}", q.family.len())));
            run.summary = Some(format!("feasible, solution family dim {}", q.family.len()));
            run.solver =
                Some(SolverSummary { feasible: true, family_dim: Some(q.family.len()), system_rank: None, augmented_rank: None, dual: None });
            run.reports.push(r);
        }
        Err(w) => {
            let mut r = Report::new(if total { "total quantum integral" } else { "quantum integral" });
            let detail = format!("rank {} < augmented rank {}", w.system_rank, w.augmented_rank);
            r.fact(what, false, Some(detail.clone()));
            run.summary = Some(format!("infeasible, {detail}"));
            run.solver = Some(SolverSummary {
                feasible: false,
                family_dim: None,
                system_rank: Some(w.system_rank),
                augmented_rank: Some(w.augmented_rank),
                dual: Some(w.dual.iter().map(format_scalar).collect()),
            });
            run.reports.push(r);
        }
    }
}

pub fn galois(path: &Path) -> Result<Outcome, RunError> {
    let inst = load(path)?;
    let a = inst.comodule_algebra()?;
    let mut run = Run::new("galois", &inst);
    let b = coinvariants(&a)?;
    let psi = canonical_psi(&a, &b)?;
    let mut r = Report::new("canonical map A⊗_B A → A⊗H");
    r.fact("B = A^{co H}", true, Some(format!("dim {}", b.subspace.dim())));
    let t = &psi.balanced;
    r.extend_prefixed("A⊗_B A", check_rel_hopf(&tensor_over_b_structure(&a, t)?, &a));
    let class = match psi.class {
        GaloisClass::Bijective => "bijective",
        GaloisClass::SurjectiveOnly => "surjective, not injective",
        GaloisClass::Neither => "not surjective",
    };
    r.fact("ψ is bijective", psi.class == GaloisClass::Bijective, Some(format!("rank {}/{}", psi.rank, psi.target_dim())));
    r.fact("ψ is surjective", psi.is_surjective(), None);
    run.summary = Some(format!(
        "{class}, rank {}/{} (dim A⊗_B A = {})",
        psi.rank,
        psi.target_dim(),
        psi.source_dim()
    ));
    run.reports.push(r);
    run.expect(&inst, &[keys::COINVARIANTS_DIM, keys::PSI_RANK, keys::GALOIS])?;
    Ok(run.finish())
}

/// The file's module blocks, or `A` and `G(A)` when there are none.
fn relative_modules(inst: &Instance, a: &Arc<ComoduleAlgebra>) -> Result<Vec<(String, RelHopfModule)>, Error> {
    if inst.modules.is_empty() {
        let names = ["A", "G(A)"].map(String::from);
        Ok(names.into_iter().zip(default_test_modules(a)?.0).collect())
    } else {
        let names = inst.modules.iter().map(|m| m.name.clone());
        Ok(names.zip(inst.modules(a)?).collect())
    }
}

fn without_names(ms: Vec<(String, RelHopfModule)>) -> Vec<RelHopfModule> {
    ms.into_iter().map(|(_, m)| m).collect()
}

pub fn theorem(path: &Path, id: TheoremId) -> Result<Outcome, RunError> {
    let inst = load(path)?;
    let mut run = Run::new("theorem", &inst);
    let (name, report) = match id {
        TheoremId::T43 => {
            let a = inst.comodule_algebra()?;
            ("theorem 4.3", theorem43_check(&a, &without_names(relative_modules(&inst, &a)?))?)
        }
        TheoremId::T48 => {
            let a = inst.comodule_algebra()?;
            let d = QuantumDatum::from_comodule_algebra(&a);
            let mut r = Report::new("every relative module is a quotient of a free one");
            match find_quantum_integral(&d, true) {
                Ok(q) => {
                    r.fact("a total quantum integral exists", true, None);
                    for (name, m) in relative_modules(&inst, &a)? {
                        r.extend_prefixed(&format!("M = {name}"), generator_report(&m, &q.gamma_hat)?);
                    }
                }
                Err(w) => {
                    let detail = format!("rank {} < augmented rank {}", w.system_rank, w.augmented_rank);
                    r.fact("a total quantum integral exists", false, Some(detail));
                }
            }
            ("theorem 4.8", r)
        }
        TheoremId::T56 => {
            let a = inst.comodule_algebra()?;
            let d = QuantumDatum::from_comodule_algebra(&a);
            let mut r = Report::new("A⊗_B − is fully faithful");
            match find_quantum_integral(&d, true) {
                Ok(q) => {
                    r.fact("a total quantum integral exists", true, None);
                    let b = coinvariants(&a)?;
                    r.extend_prefixed("traces", trace_report(&a, &b, &q.gamma_hat)?);
                    r.extend_prefixed("splitting", prop51_report(&a, &q.gamma_hat)?);
                    let (_, b_modules) = default_test_modules(&a)?;
                    for (i, n) in b_modules.iter().enumerate() {
                        r.extend_prefixed(&format!("N{i}"), thm56_report(&a, &b, n, &q.gamma_hat)?);
                    }
                }
                Err(w) => {
                    let detail = format!("rank {} < augmented rank {}", w.system_rank, w.augmented_rank);
                    r.fact("a total quantum integral exists", false, Some(detail));
                }
            }
            ("theorem 5.6", r)
        }
        TheoremId::T57 => {
            let a = inst.comodule_algebra()?;
            let (_, b_modules) = default_test_modules(&a)?;
            let modules = without_names(relative_modules(&inst, &a)?);
            ("theorem 5.7", thm57_check(&a, &modules, &b_modules)?)
        }
        TheoremId::T58 => ("corollary 5.8", cor58_check(&inst.hopf()?)?),
    };
    run.command = name.into();
    run.reports.push(report);
    Ok(run.finish())
}

pub fn catalog_list() -> Outcome {
    let names = catalog::list();
    Outcome::Text {
        prose: names.iter().map(|n| format!("{n}\n")).collect(),
        json: serde_json::to_string_pretty(names).expect("names serialize") + "\n",
    }
}

pub fn catalog_emit(name: &str) -> Result<Outcome, RunError> {
    let text = catalog::entry(name)?.instance.emit();
    Ok(Outcome::Text { prose: text.clone(), json: text })
}
