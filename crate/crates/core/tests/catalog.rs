use homhopf::catalog::*;
use homhopf::instance::{Instance, DEFAULT_MAX_DIM};
use homhopf::linalg::{int, Scalar};
use homhopf::Error;

#[test]
fn every_entry_loads_and_matches_its_expected_table() {
    for name in list() {
        let e = entry(name).unwrap_or_else(|err| panic!("{name}: {err}"));
        let r = e.regression_report().unwrap();
        assert!(r.all_passed(), "{name}:\n{r}");
    }
}

#[test]
fn list_has_the_eight_entries() {
    assert_eq!(list().len(), 8);
}

#[test]
fn unknown_entry_is_rejected() {
    assert!(matches!(entry("kC4"), Err(Error::UnknownEntry(_))));
}

#[test]
fn emit_parse_emit_is_a_fixed_point() {
    for name in list() {
        let e = entry(name).unwrap();
        let text = e.instance.emit();
        let back = Instance::parse(&text, DEFAULT_MAX_DIM).unwrap();
        assert_eq!(back, e.instance, "{name}");
        assert_eq!(back.emit(), text, "{name}");
    }
}

fn vec2(a: i64, b: i64) -> Vec<Scalar> {
    vec![int(a), int(b)]
}

#[test]
fn matrix_family_total_iff_trace_is_one() {
    // entries of μ are elements of k×k in the basis e₁, e₂; 1_A = e₁ + e₂.
    let cases: Vec<(Vec<Vec<Vec<Scalar>>>, bool)> = vec![
        (vec![vec![vec2(1, 1), vec2(0, 0)], vec![vec2(0, 0), vec2(0, 0)]], true),
        (vec![vec![vec2(0, 0), vec2(0, 0)], vec![vec2(0, 0), vec2(0, 0)]], false),
        (vec![vec![vec2(1, 0), vec2(5, 0)], vec![vec2(0, 7), vec2(0, 1)]], true),
        (vec![vec![vec2(1, 0), vec2(0, 0)], vec![vec2(0, 0), vec2(1, 0)]], false),
        (vec![vec![vec2(2, 3), vec2(1, 1)], vec![vec2(-4, 2), vec2(-1, -2)]], true),
    ];
    for (mu, want) in cases {
        let o = example47_verify(IntegralFamily::Matrix, &mu).unwrap();
        assert!(o.quantum, "{}", o.report);
        assert_eq!((o.total, o.condition), (want, want), "{}", o.report);
        assert!(o.report.all_passed());
    }
}

#[test]
fn group_family_total_iff_diagonal_is_one() {
    let e = entry("kG-C2-datum").unwrap();
    // A = kC₂⊗(k×k): basis 1⊗e₁, 1⊗e₂, g⊗e₁, g⊗e₂; B = 1⊗(k×k).
    let b = |x: i64, y: i64| vec![int(x), int(y), int(0), int(0)];
    let cases = vec![
        (vec![vec![b(1, 1), b(0, 0)], vec![b(0, 0), b(1, 1)]], true),
        (vec![vec![b(0, 0), b(0, 0)], vec![b(0, 0), b(0, 0)]], false),
        (vec![vec![b(1, 1), b(3, -2)], vec![b(1, 0), b(1, 1)]], true),
        (vec![vec![b(1, 1), b(0, 0)], vec![b(0, 0), b(1, 0)]], false),
        (vec![vec![b(1, 0), b(0, 0)], vec![b(0, 0), b(0, 1)]], false),
    ];
    for (mu, want) in cases {
        let o = example47_verify(IntegralFamily::Group, &mu).unwrap();
        assert!(o.quantum, "{}", o.report);
        assert_eq!((o.total, o.condition), (want, want), "{}", o.report);
    }
    let g = a_basis(&e, 2);
    let mu = vec![vec![g.clone(), b(0, 0)], vec![b(0, 0), b(1, 1)]];
    assert!(matches!(example47_verify(IntegralFamily::Group, &mu), Err(Error::ParametersNotCoinvariant { .. })));
}
