//! Acceptance suite: one test per criterion, each printing a PASS line.
//!
//! Criteria 3 and 4 pin the hc4a reference values exactly as stated in the
//! source tables they were taken from. Those two stated hc4a Lee-form
//! components are arithmetically inconsistent with the hc4a connection and
//! F-tables pinned by criteria 1 and 2 (contracting that F-table with the
//! inverse metric gives (theta_2)_3 = 4 and (theta_3)_4 = -4, which makes
//! the W1 identities and the theta compatibility hold, i.e. class W^0), so
//! those two tests fail by design rather than weaken the assertions. Every
//! other criterion passes.

mod common;

use std::time::Instant;

use hn4::catalog;
use hn4::classify::{classify, CombinedClass};
use hn4::connection::{curvature, levi_civita, structure_tensor};
use hn4::exact::{Covector, Rational, Vector4};
use hn4::hnstruct::{nijenhuis, HNStructure, EPSILON};
use hn4::liealg::LieAlgebra;
use hn4::oracle;
use hn4::report::Report;

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n, d).unwrap()
}

fn pass(number: u32, what: &str) {
    println!("ACCEPTANCE criterion {number} ({what}): PASS");
}

/// The six cases whose connection and F tables are pinned entry-for-entry.
const GOLDEN_TABLE_CASES: [&str; 6] = ["hc2a", "hc3a", "hc3b", "hc4a", "hc4b", "hc5a"];

#[test]
fn criterion_1_golden_connection_tables() {
    let started = Instant::now();
    let h = HNStructure::standard();
    for name in GOLDEN_TABLE_CASES {
        let case = catalog::get_case(name).unwrap();
        let expected = case.expected.gamma_tensor().expect("golden table present");
        let conn = levi_civita(&case.algebra, h.metric());
        assert_eq!(
            conn.coefficients(),
            &expected,
            "criterion 1: {name} connection table"
        );
    }
    // hc1 has the all-zero table
    let conn = levi_civita(&catalog::get_case("hc1").unwrap().algebra, h.metric());
    assert!(conn.coefficients().is_zero(), "criterion 1: hc1");
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "criterion 1: took {elapsed:?}");
    pass(1, "golden connection tables, exact, < 1 s");
}

#[test]
fn criterion_2_golden_f_tables() {
    let h = HNStructure::standard();
    for name in GOLDEN_TABLE_CASES {
        let case = catalog::get_case(name).unwrap();
        let conn = levi_civita(&case.algebra, h.metric());
        for alpha in 0..3 {
            let expected = case.expected.f_tensor(alpha).expect("golden table present");
            let computed = structure_tensor(&conn, h.j(alpha), h.metric(), alpha);
            assert_eq!(
                computed.f,
                expected,
                "criterion 2: {name} F{} table",
                alpha + 1
            );
        }
    }
    // F1 = 0 for hc3a is part of the criterion
    let hc3a = catalog::get_case("hc3a").unwrap();
    let conn = levi_civita(&hc3a.algebra, h.metric());
    assert!(
        structure_tensor(&conn, h.j(0), h.metric(), 0).f.is_zero(),
        "criterion 2: hc3a F1 = 0"
    );
    pass(2, "golden F tables entry-for-entry, exact");
}

/// Reference Lee-form tables exactly as stated, 1-based components.
/// The hc4a row is the as-stated one; see the module comment.
type LeeFixture = [&'static [(usize, (i64, i64))]; 3];
const STATED_LEE: [(&str, LeeFixture); 6] = [
    ("hc2a", [&[(2, (-1, 1))], &[(3, (-2, 1))], &[(4, (2, 1))]]),
    ("hc3a", [&[], &[(1, (4, 1))], &[(2, (4, 1))]]),
    ("hc3b", [&[(4, (-2, 1))], &[(1, (4, 1))], &[(2, (4, 1))]]),
    ("hc4a", [&[(2, (-2, 1))], &[(3, (2, 1))], &[(4, (-2, 1))]]),
    ("hc4b", [&[(3, (-2, 1))], &[(2, (-4, 1))], &[(1, (4, 1))]]),
    ("hc5a", [&[(2, (-1, 2))], &[(3, (3, 1))], &[(4, (-3, 1))]]),
];

#[test]
fn criterion_3_golden_lee_forms() {
    let h = HNStructure::standard();
    let mut mismatches = Vec::new();
    for (name, tables) in STATED_LEE {
        let case = catalog::get_case(name).unwrap();
        let rep = classify(&case.algebra, &h).unwrap();
        for alpha in 0..3 {
            let mut stated = Covector::zero();
            for &(i, (n, d)) in tables[alpha] {
                stated[i - 1] = rat(n, d);
            }
            let computed = &rep.lee_forms[alpha].theta;
            if computed != &stated {
                mismatches.push(format!(
                    "{name} theta{}: stated {:?}, engine computes {:?} \
                     (= contraction g^ij F_(e_i,e_j,.) of the criterion-2 F-table)",
                    alpha + 1,
                    stated,
                    computed
                ));
            }
        }
    }
    assert!(
        mismatches.is_empty(),
        "criterion 3: stated Lee-form values are inconsistent with the \
         criterion-2 F-tables:\n  {}",
        mismatches.join("\n  ")
    );
    pass(3, "golden Lee forms, exact, unlisted components zero");
}

/// Class labels exactly as asserted case by case; the bool is the claim
/// "lies in neither W1 nor W2 for J2 and J3". The hc4a row is as stated;
/// see the module comment.
const STATED_LABELS: [(&str, CombinedClass, bool); 9] = [
    ("hc1", CombinedClass::K, false),
    ("hc2a", CombinedClass::HProper, true),
    ("hc2b", CombinedClass::HProper, true),
    ("hc3a", CombinedClass::KaehlerJ1, true),
    ("hc3b", CombinedClass::WZero, false),
    ("hc4a", CombinedClass::HProper, true),
    ("hc4b", CombinedClass::WZero, false),
    ("hc5a", CombinedClass::HProper, true),
    ("hc5b", CombinedClass::HProper, true),
];

#[test]
fn criterion_4_proposition_suite() {
    let h = HNStructure::standard();
    let mut mismatches = Vec::new();
    for (name, label, negatives) in STATED_LABELS {
        let case = catalog::get_case(name).unwrap();
        let rep = classify(&case.algebra, &h).unwrap();
        if rep.combined != label {
            mismatches.push(format!(
                "{name}: stated class {label}, engine computes {} \
                 (with the exact Lee forms the W1 identities hold for J2, J3)",
                rep.combined
            ));
        }
        if negatives {
            for flags in &rep.norden {
                if flags.is_w1 || flags.is_w2 {
                    mismatches.push(format!(
                        "{name}: stated to lie in neither W1 nor W2 for J{}, \
                         engine computes W1={} W2={}",
                        flags.alpha + 1,
                        flags.is_w1,
                        flags.is_w2
                    ));
                }
            }
        }
    }
    assert!(
        mismatches.is_empty(),
        "criterion 4: stated classes disagree with the exact computation:\n  {}",
        mismatches.join("\n  ")
    );
    pass(4, "classification labels of all nine cases");
}

#[test]
fn criterion_5_theta_compatibility_characterization() {
    let h = HNStructure::standard();
    for name in ["hc3b", "hc4b"] {
        let case = catalog::get_case(name).unwrap();
        let rep = classify(&case.algebra, &h).unwrap();
        assert!(rep.tita_j, "criterion 5: {name} theta compatibility");
        assert!(
            rep.hermitian.is_w4 && rep.norden[0].is_w1 && rep.norden[1].is_w1,
            "criterion 5: {name} W4(J1) ^ W1(J2) ^ W1(J3)"
        );
        assert!(rep.d_theta1_j1_zero, "criterion 5: {name} d(theta1 o J1) = 0");
    }
    // the characterization is an equivalence on every catalog case
    for (name, _) in catalog::list_cases() {
        let case = catalog::get_case(name).unwrap();
        let rep = classify(&case.algebra, &h).unwrap();
        let conjunction = rep.hermitian.is_w4 && rep.norden[0].is_w1 && rep.norden[1].is_w1;
        assert_eq!(
            rep.tita_j, conjunction,
            "criterion 5: equivalence fails on {name}"
        );
    }
    pass(5, "theta compatibility holds for hc3b/hc4b and characterizes W");
}

#[test]
fn criterion_6_property_suites() {
    let h = HNStructure::standard();
    let mut corpus: Vec<(String, LieAlgebra, bool)> = catalog::list_cases()
        .into_iter()
        .map(|(name, _)| (name.to_string(), catalog::get_case(name).unwrap().algebra, true))
        .collect();
    let fuzzed = common::fuzzed_algebras(0x484e_3431, 6);
    assert!(fuzzed.len() >= 100, "criterion 6 needs >= 100 fuzzed algebras");
    corpus.extend(fuzzed);

    for (name, alg, integrable_preserving) in &corpus {
        assert!(alg.validate().is_valid(), "{name}: fuzzed algebra invalid");
        let rep = classify(alg, &h).unwrap_or_else(|e| panic!("{name}: {e}"));

        // torsion-free, metric-compatible connection
        let conn = &rep.connection;
        for i in 0..4 {
            for j in 0..4 {
                let torsion = &(&conn.nabla(i, j) - &conn.nabla(j, i)) - &alg.bracket_basis(i, j);
                assert!(torsion.is_zero(), "{name}: torsion at ({i},{j})");
                for k in 0..4 {
                    let compat = h.metric().eval(&conn.nabla(i, j), &Vector4::basis(k))
                        + h.metric().eval(&Vector4::basis(j), &conn.nabla(i, k));
                    assert!(compat.is_zero(), "{name}: metric compat at ({i},{j},{k})");
                }
            }
        }

        for alpha in 0..3 {
            let f = &rep.structure_tensors[alpha];
            let j_mat = h.j(alpha);
            let minus_eps = Rational::from_integer(-EPSILON[alpha]);
            for i in 0..4 {
                for y in 0..4 {
                    for z in 0..4 {
                        // F1 antisymmetric, F2/F3 symmetric in the last slots
                        if alpha == 0 {
                            assert_eq!(
                                f.f.get(i, y, z),
                                &-f.f.get(i, z, y),
                                "{name}: F1 antisymmetry"
                            );
                        } else {
                            assert_eq!(
                                f.f.get(i, y, z),
                                f.f.get(i, z, y),
                                "{name}: F{} symmetry",
                                alpha + 1
                            );
                        }
                        // F(x, Jy, Jz) = -eps F(x, y, z)
                        let jy = j_mat.apply(&Vector4::basis(y));
                        let jz = j_mat.apply(&Vector4::basis(z));
                        let lhs = f.apply(&Vector4::basis(i), &jy, &jz);
                        assert_eq!(
                            lhs,
                            &minus_eps * f.f.get(i, y, z),
                            "{name}: F{} J-property at ({i},{y},{z})",
                            alpha + 1
                        );
                    }
                }
            }
            // Nijenhuis antisymmetry
            assert!(
                nijenhuis(alg, j_mat).is_antisymmetric(),
                "{name}: N{} antisymmetry",
                alpha + 1
            );
        }

        // Abelian structure implies integrability
        if rep.abelian_structure {
            assert!(rep.integrable, "{name}: abelian but not integrable");
        }
        if *integrable_preserving {
            assert!(rep.integrable, "{name}: commuting conjugate lost integrability");
        }

        // W1+W2 identity is equivalent to the vanishing of the Nijenhuis
        // tensor for the Norden structures
        for (idx, flags) in rep.norden.iter().enumerate() {
            let alpha = idx + 1;
            let n_zero = nijenhuis(alg, h.j(alpha)).is_zero();
            assert_eq!(
                flags.is_w1_plus_w2,
                n_zero,
                "{name}: W1+W2 vs N{} = 0",
                alpha + 1
            );
        }

        // class-hierarchy implications
        if rep.hermitian.is_w0 {
            assert!(rep.hermitian.is_w2 && rep.hermitian.is_w4, "{name}: W0(J1) hierarchy");
        }
        for flags in &rep.norden {
            if flags.is_w0 {
                assert!(
                    flags.is_w1 && flags.is_w2 && flags.is_w3 && flags.is_w1_plus_w2,
                    "{name}: W0(J{}) hierarchy",
                    flags.alpha + 1
                );
            }
            if flags.is_w1 || flags.is_w2 {
                assert!(flags.is_w1_plus_w2, "{name}: W1/W2 subset of W1+W2");
            }
        }
    }
    pass(
        6,
        "property suites over 9 catalog cases and 108 fuzzed valid algebras",
    );
}

#[test]
fn criterion_7_oracle_equivalence() {
    let h = HNStructure::standard();
    for (name, _) in catalog::list_cases() {
        let alg = catalog::get_case(name).unwrap().algebra;
        let report = oracle::run_all(&alg, &h);
        assert!(
            report.ok,
            "criterion 7: {name} oracle mismatch: {:?}",
            report
                .checks
                .iter()
                .filter(|c| !c.pass)
                .collect::<Vec<_>>()
        );
        // one Koszul re-verification, plus expansion and norm checks per J
        assert_eq!(report.checks.len(), 7, "criterion 7: check count");
    }
    pass(7, "brute-force oracle equals the engine on all catalog cases");
}

#[test]
fn criterion_8_flatness() {
    let h = HNStructure::standard();
    let hc1 = catalog::get_case("hc1").unwrap().algebra;
    let conn = levi_civita(&hc1, h.metric());
    assert!(
        curvature(&conn, &hc1).is_zero(),
        "criterion 8: hc1 must be flat"
    );

    let hc4a = catalog::get_case("hc4a").unwrap().algebra;
    let conn = levi_civita(&hc4a, h.metric());
    let curv = curvature(&conn, &hc4a);
    assert!(!curv.is_zero(), "criterion 8: hc4a must not be flat");
    assert_eq!(
        curv.apply(0, 1, 0),
        Vector4::basis(1),
        "criterion 8: R(e1,e2)e1 = e2"
    );
    pass(8, "flatness of hc1 and curvature of hc4a");
}

fn run_cli(args: &[&str]) -> (i32, String, String) {
    let output = std::process::Command::new(env!("CARGO_BIN_EXE_hn4"))
        .args(args)
        .output()
        .expect("binary executes");
    (
        output.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&output.stdout).into_owned(),
        String::from_utf8_lossy(&output.stderr).into_owned(),
    )
}

#[test]
fn criterion_9_cli_round_trip() {
    let dir = tempfile::tempdir().expect("temp dir");
    for (name, _) in catalog::list_cases() {
        let (code, exported, _) = run_cli(&["catalog", name, "--export"]);
        assert_eq!(code, 0, "criterion 9: export {name}");
        let path = dir.path().join(format!("{name}.alg"));
        std::fs::write(&path, &exported).unwrap();

        let (code, from_file, _) = run_cli(&["analyze", path.to_str().unwrap(), "--format", "json"]);
        assert_eq!(code, 0, "criterion 9: analyze {name}");
        let (code, from_catalog, _) = run_cli(&["catalog", name, "--format", "json"]);
        assert_eq!(code, 0, "criterion 9: catalog {name}");
        assert_eq!(
            from_file, from_catalog,
            "criterion 9: {name} export->parse->classify must be idempotent"
        );
        // schema check: the JSON deserializes into the typed report
        let report: Report = serde_json::from_str(&from_file).expect("schema");
        assert_eq!(report.name.as_deref(), Some(name));
    }

    // malformed file: parse error, exit 2
    let bad = dir.path().join("malformed.alg");
    std::fs::write(&bad, "dim = 4\nbracket 2 1 = 1 e_3\n").unwrap();
    let (code, _, err) = run_cli(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(code, 2, "criterion 9: malformed file exit code");
    assert!(err.contains("line 2"), "criterion 9: diagnostics on stderr");

    // Jacobi-violating file: validation failure, exit 1
    let invalid = dir.path().join("jacobi.alg");
    std::fs::write(&invalid, "dim = 4\nbracket 1 2 = 1 e_3\nbracket 1 3 = 1 e_1\n").unwrap();
    let (code, _, err) = run_cli(&["analyze", invalid.to_str().unwrap()]);
    assert_eq!(code, 1, "criterion 9: Jacobi violation exit code");
    assert!(err.contains("Jacobi"), "criterion 9: Jacobi diagnostics");

    pass(9, "CLI round-trip, JSON schema, exit codes");
}
