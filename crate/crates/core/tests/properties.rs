use std::sync::Arc;

use homhopf::catalog::*;
use homhopf::instance::{Instance, DEFAULT_MAX_DIM};
use homhopf::integrals::{
    average_colinear, find_quantum_integral, find_total_integral, verify_quantum_integral, QuantumDatum,
};
use homhopf::linalg::{
    format_scalar, frac, int, parse_scalar, rank_fraction_free, solve_affine_rows, AffineSolution, LinearMap, Scalar,
    Space,
};
use homhopf::repcat::{induce_g, induce_g_data, is_colinear, is_morphism, HomObject, RelHopfModule};
use homhopf::structures::{check_hom_hopf, twist, untwist, ComoduleAlgebra, HomHopfAlgebra};
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = Scalar> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| frac(n, d))
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<Scalar>>> {
    prop::collection::vec(prop::collection::vec(scalar(), cols), rows)
}

fn map(dom: usize, cod: usize) -> impl Strategy<Value = LinearMap> {
    matrix(cod, dom).prop_map(move |rows| {
        LinearMap::from_rows(&Space::indexed("x", dom), &Space::indexed("y", cod), &rows).unwrap()
    })
}

fn dot(row: &[Scalar], x: &[Scalar]) -> Scalar {
    row.iter().zip(x).map(|(a, b)| a * b).sum()
}

/// Plain rank by counting pivots of a row-by-row Gaussian elimination over ℚ.
fn rank_naive(rows: &[Vec<Scalar>]) -> usize {
    let mut basis: Vec<Vec<Scalar>> = Vec::new();
    for row in rows {
        let mut v = row.clone();
        for b in &basis {
            let p = b.iter().position(|x| *x != int(0)).unwrap();
            if v[p] != int(0) {
                let f = &v[p] / &b[p];
                for (x, y) in v.iter_mut().zip(b) {
                    *x -= &f * y;
                }
            }
        }
        if v.iter().any(|x| *x != int(0)) {
            basis.push(v);
        }
    }
    basis.len()
}

proptest! {
    #[test]
    fn tensor_is_functorial(
        (f1, f2) in (1usize..=3, 1usize..=3, 1usize..=3).prop_flat_map(|(a, b, c)| (map(a, b), map(b, c))),
        (g1, g2) in (1usize..=3, 1usize..=3, 1usize..=3).prop_flat_map(|(a, b, c)| (map(a, b), map(b, c))),
    ) {
        let lhs = f2.tensor(&g2).compose(&f1.tensor(&g1));
        let rhs = f2.compose(&f1).tensor(&g2.compose(&g1));
        prop_assert!(lhs.same_matrix(&rhs));
    }

    #[test]
    fn rank_is_invariant_under_permutations(
        (m, rp, cp) in (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| (
            matrix(r, c),
            Just((0..r).collect::<Vec<_>>()).prop_shuffle(),
            Just((0..c).collect::<Vec<_>>()).prop_shuffle(),
        )),
    ) {
        let permuted: Vec<Vec<Scalar>> = rp.iter().map(|&i| cp.iter().map(|&j| m[i][j].clone()).collect()).collect();
        let r = rank_fraction_free(&m);
        prop_assert_eq!(rank_fraction_free(&permuted), r);
        prop_assert_eq!(rank_naive(&m), r);
        let cols = m[0].len();
        let lm = LinearMap::from_rows(&Space::indexed("x", cols), &Space::indexed("y", m.len()), &m).unwrap();
        prop_assert_eq!(lm.rank(), r);
    }

    #[test]
    fn consistent_systems_are_solved_exactly(
        (m, x0) in (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| (matrix(r, c), prop::collection::vec(scalar(), c))),
    ) {
        let rhs: Vec<Scalar> = m.iter().map(|row| dot(row, &x0)).collect();
        match solve_affine_rows(&m, x0.len(), &rhs) {
            AffineSolution::Feasible { particular, kernel } => {
                for (row, b) in m.iter().zip(&rhs) {
                    prop_assert_eq!(&dot(row, &particular), b);
                    for k in &kernel {
                        prop_assert_eq!(dot(row, k), int(0));
                    }
                }
                prop_assert_eq!(kernel.len(), x0.len() - rank_fraction_free(&m));
            }
            AffineSolution::Infeasible { .. } => prop_assert!(false, "consistent system reported infeasible"),
        }
    }

    #[test]
    fn infeasibility_ranks_are_recomputable(
        (m, rhs) in (1usize..=5, 1usize..=4).prop_flat_map(|(r, c)| (matrix(r, c), prop::collection::vec(scalar(), r))),
    ) {
        let aug: Vec<Vec<Scalar>> = m.iter().zip(&rhs).map(|(row, b)| row.iter().chain([b]).cloned().collect()).collect();
        let (r, ra) = (rank_fraction_free(&m), rank_fraction_free(&aug));
        match solve_affine_rows(&m, m[0].len(), &rhs) {
            AffineSolution::Feasible { particular, .. } => {
                prop_assert_eq!(r, ra);
                for (row, b) in m.iter().zip(&rhs) {
                    prop_assert_eq!(&dot(row, &particular), b);
                }
            }
            AffineSolution::Infeasible { rank, augmented_rank } => {
                prop_assert_eq!((rank, augmented_rank), (r, ra));
                prop_assert_eq!(ra, r + 1);
            }
        }
    }

    #[test]
    fn scalars_round_trip_through_text(n in -1_000_000i64..1_000_000, d in 1i64..1000) {
        let x = frac(n, d);
        prop_assert_eq!(parse_scalar(&format_scalar(&x)).unwrap(), x);
    }

}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sweedler_twists_by_any_nonzero_scale(c in scalar()) {
        prop_assume!(c != int(0));
        let base = sweedler_data();
        let sp = base.algebra.space.clone();
        let aut = LinearMap::from_fn(&sp, &sp, |j| vec![(j, if j >= 2 { c.clone() } else { int(1) })]);
        let h = twist(&base, &aut).unwrap();
        prop_assert!(check_hom_hopf(&h.data()).all_passed());
        prop_assert_eq!(untwist(&h), base);
    }

}

// Each case below rebuilds catalog entries and solves an integral system.
proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn perturbed_instances_still_round_trip(
        idx in 0usize..8,
        (i, j) in (0usize..16, 0usize..16),
        v in scalar(),
    ) {
        let e = entry(list()[idx]).unwrap();
        let mut json: serde_json::Value = serde_json::from_str(&e.instance.emit()).unwrap();
        let rows = json["hopf"]["alpha"].as_array_mut().unwrap();
        let n = rows.len();
        rows[i % n][j % n] = serde_json::Value::String(format_scalar(&v));
        let text = serde_json::to_string(&json).unwrap();
        let inst = Instance::parse(&text, DEFAULT_MAX_DIM).unwrap();
        let again = Instance::parse(&inst.emit(), DEFAULT_MAX_DIM).unwrap();
        prop_assert_eq!(&again, &inst);
        prop_assert_eq!(again.emit(), inst.emit());
    }

    #[test]
    fn quantum_integral_families_are_affine(idx in 0usize..4, ts in prop::collection::vec(scalar(), 8)) {
        let name = ["kC2", "kC3", "kC3-twisted", "kG-C2-datum"][idx];
        let d = entry(name).unwrap().datum().unwrap();
        let q = find_quantum_integral(&d, true).unwrap();
        let mut gh = q.gamma_hat.clone();
        for (k, t) in q.family.iter().zip(&ts) {
            gh = gh.add(&k.scale(t));
        }
        prop_assert!(verify_quantum_integral(&d, &gh, true).all_passed());
    }

    #[test]
    fn averaging_any_linear_map_gives_a_colinear_one(
        idx in 0usize..3,
        seed in matrix(8, 4),
    ) {
        // α = β = id on these, so every k-linear A → G(A) intertwines the automorphisms.
        let name = ["kC2", "trivial-k-over-kC2", "kG-C2-datum"][idx];
        let e = entry(name).unwrap();
        let a = e.comodule_algebra().unwrap();
        let d = QuantumDatum::from_comodule_algebra(&a);
        let phi = find_total_integral(&d).unwrap().phi;
        let mods = e.modules().unwrap();
        let (m, n) = (&mods[0], &mods[1]);
        let (dm, dn) = (m.space().dim(), n.space().dim());
        let rows: Vec<Vec<Scalar>> = (0..dn).map(|r| (0..dm).map(|c| seed[r % 8][c % 4].clone()).collect()).collect();
        let u = LinearMap::from_rows(m.space(), n.space(), &rows).unwrap();
        let avg = average_colinear(&u, m, n, &phi).unwrap();
        prop_assert!(is_colinear(&avg, m.data(), n.data()));
    }
}

#[test]
fn untwisting_every_cyclic_twist_recovers_the_group_algebra() {
    for n in 2..=7 {
        for k in (1..n).filter(|&k| (1..n).any(|i| i * k % n == 1)) {
            let h = cyclic_twisted(n, k).unwrap();
            assert!(check_hom_hopf(&h.data()).all_passed(), "C{n}, g ↦ g^{k}");
            assert_eq!(untwist(&h), cyclic_group_data(n), "C{n}, g ↦ g^{k}");
        }
    }
}

#[test]
fn tensor_is_functorial_on_sweedler_structure_maps() {
    let h = HomHopfAlgebra::new(sweedler_data()).unwrap();
    let maps = [
        LinearMap::identity(h.space()),
        h.alpha().clone(),
        h.antipode().clone(),
        h.antipode().compose(h.antipode()),
        h.unit().compose(h.counit()),
    ];
    for f1 in &maps {
        for f2 in &maps {
            for g1 in &maps {
                for g2 in &maps {
                    let lhs = f2.tensor(g2).compose(&f1.tensor(g1));
                    let rhs = f2.compose(f1).tensor(&g2.compose(g1));
                    assert!(lhs.same_matrix(&rhs));
                }
            }
        }
    }
}

#[test]
fn g_sends_module_maps_to_morphisms() {
    for name in ["kC2", "kC3-twisted", "sweedler-H4", "kG-C2-datum"] {
        let a = entry(name).unwrap().comodule_algebra().unwrap();
        let idh = LinearMap::identity(a.hopf().space());
        let fa = RelHopfModule::regular(a.clone()).forget_coaction();
        let ga = induce_g(&fa, &a).unwrap();
        let gga = induce_g(&ga.forget_coaction(), &a).unwrap();
        let ggga = induce_g_data(&gga.forget_coaction(), &a);
        // The units ρ_A: A → G(A) and ρ_G(A): G(A) → G(G(A)) are A-linear; G(f) = f⊗id.
        assert!(is_morphism(&a.coaction().tensor(&idh), ga.data(), gga.data()), "{name}: G(ρ_A)");
        assert!(is_morphism(&ga.data().coaction.tensor(&idh), gga.data(), &ggga), "{name}: G(ρ_G(A))");
    }
}

#[test]
fn classical_entries_need_no_twist() {
    for name in ["kC2", "kC3", "sweedler-H4"] {
        let h = entry(name).unwrap().hopf().unwrap();
        assert!(h.alpha().is_identity());
        assert_eq!(untwist(&h), h.data(), "{name}");
    }
    let a = ComoduleAlgebra::regular(Arc::new(kc3_twisted())).unwrap();
    assert!(!a.beta().is_identity());
}
