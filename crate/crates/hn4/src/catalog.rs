//! Built-in catalog of the 4-dimensional Lie algebras that admit an
//! integrable hypercomplex structure, together with golden expected values
//! for every derived quantity the engine computes.
//!
//! Table indices are written 1-based, matching the basis naming e_1..e_4
//! used in reports; they are converted on access.

use crate::classify::CombinedClass;
use crate::exact::{Covector, Rational, Tensor3, Vector4};
use crate::liealg::{BracketSpec, LieAlgebra};

/// One named case: the algebra plus its expected classification data.
#[derive(Clone, Debug)]
pub struct CatalogCase {
    pub name: &'static str,
    pub description: &'static str,
    pub algebra: LieAlgebra,
    pub expected: Expected,
}

/// Sparse connection table: 1-based `(i, j)` rows with component quadruples
/// as `(numerator, denominator)` pairs.
pub type GammaTable = &'static [((usize, usize), [(i64, i64); 4])];
/// Sparse scalar tensor table: 1-based `(i, j, k)` entries.
pub type ScalarTable = &'static [((usize, usize, usize), (i64, i64))];
/// Sparse covector table: 1-based `(i, value)` components.
pub type LeeTable = &'static [(usize, (i64, i64))];

/// Golden values. `gamma` and `f` are sparse tables of the nonzero entries;
/// unlisted entries are zero. They are `None` for the two relabeled variants
/// (hc2b, hc5b) whose tables are covered by property tests instead.
#[derive(Clone, Debug)]
pub struct Expected {
    pub label: CombinedClass,
    /// The case is claimed to lie in neither W1 nor W2 for J_2 and J_3.
    pub not_w1_not_w2: bool,
    pub abelian_structure: bool,
    pub derived_dim: usize,
    pub derived_abelian: bool,
    pub center_dim: usize,
    /// Nonzero Lee-form components `(theta_alpha)_i`, 1-based `i`.
    pub lee: [LeeTable; 3],
    /// Nonzero `nabla_{e_i} e_j` rows as component quadruples, 1-based `(i, j)`.
    pub gamma: Option<GammaTable>,
    /// Nonzero `(F_alpha)_{ijk}` entries, 1-based `(i, j, k)`.
    pub f: Option<[ScalarTable; 3]>,
    /// Square norms of nabla J_alpha.
    pub norms: [(i64, i64); 3],
    pub tita_j: bool,
    pub d_theta1_j1_zero: bool,
}

impl Expected {
    pub fn lee_covector(&self, alpha: usize) -> Covector {
        let mut out = Covector::zero();
        for &(i, (n, d)) in self.lee[alpha] {
            out[i - 1] = rat(n, d);
        }
        out
    }

    pub fn gamma_tensor(&self) -> Option<Tensor3> {
        self.gamma.map(|entries| {
            let mut t = Tensor3::zero();
            for &((i, j), ref comps) in entries {
                for (k, &(n, d)) in comps.iter().enumerate() {
                    t.set(i - 1, j - 1, k, rat(n, d));
                }
            }
            t
        })
    }

    pub fn f_tensor(&self, alpha: usize) -> Option<Tensor3> {
        self.f.map(|tables| {
            let mut t = Tensor3::zero();
            for &((i, j, k), (n, d)) in tables[alpha] {
                t.set(i - 1, j - 1, k - 1, rat(n, d));
            }
            t
        })
    }

    pub fn norm(&self, alpha: usize) -> Rational {
        let (n, d) = self.norms[alpha];
        rat(n, d)
    }
}

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n, d).expect("nonzero denominator in table")
}

fn term(n: i64, d: i64, k: usize) -> (Rational, usize) {
    (rat(n, d), k - 1)
}

const NAMES: [&str; 9] = [
    "hc1", "hc2a", "hc2b", "hc3a", "hc3b", "hc4a", "hc4b", "hc5a", "hc5b",
];

/// Stable list of case names with one-line descriptions.
pub fn list_cases() -> Vec<(&'static str, &'static str)> {
    NAMES
        .iter()
        .map(|&name| (name, get_case(name).expect("listed case exists").description))
        .collect()
}

/// Looks up a case by name; `None` for unknown names.
pub fn get_case(name: &str) -> Option<CatalogCase> {
    let case = match name {
        "hc1" => CatalogCase {
            name: "hc1",
            description: "Abelian algebra; hyper-Kaehler type",
            algebra: LieAlgebra::abelian(),
            expected: Expected {
                label: CombinedClass::K,
                not_w1_not_w2: false,
                abelian_structure: true,
                derived_dim: 0,
                derived_abelian: true,
                center_dim: 4,
                lee: [&[], &[], &[]],
                gamma: Some(&[]),
                f: Some([&[], &[], &[]]),
                norms: [(0, 1), (0, 1), (0, 1)],
                tita_j: true,
                d_theta1_j1_zero: true,
            },
        },
        "hc2a" => CatalogCase {
            name: "hc2a",
            description: "R + so(3); R-factor unit e1 with g(e1,e1)=+1 orthogonal to g'",
            // [e2,e4]=e3, [e4,e3]=e2, [e3,e2]=e4
            algebra: LieAlgebra::from_brackets(&[
                ((1, 3), vec![term(1, 1, 3)]),
                ((2, 3), vec![term(-1, 1, 2)]),
                ((1, 2), vec![term(-1, 1, 4)]),
            ]),
            expected: Expected {
                label: CombinedClass::HProper,
                not_w1_not_w2: true,
                abelian_structure: false,
                derived_dim: 3,
                derived_abelian: false,
                center_dim: 1,
                lee: [&[(2, (-1, 1))], &[(3, (-2, 1))], &[(4, (2, 1))]],
                gamma: Some(GAMMA_HC2A),
                f: Some([F1_HC2A, F2_HC2A, F3_HC2A]),
                norms: [(2, 1), (-12, 1), (-12, 1)],
                tita_j: false,
                d_theta1_j1_zero: true,
            },
        },
        "hc2b" => CatalogCase {
            name: "hc2b",
            description: "R + so(3); R-factor moved to e3 where g(e3,e3)=-1, via the \
                          relabeling e1->e3, e2->-e4, e3->-e1, e4->e2 that commutes with \
                          the standard triple",
            // [e1,e2]=e4, [e1,e4]=-e2, [e2,e4]=e1
            algebra: LieAlgebra::from_brackets(&[
                ((0, 1), vec![term(1, 1, 4)]),
                ((0, 3), vec![term(-1, 1, 2)]),
                ((1, 3), vec![term(1, 1, 1)]),
            ]),
            expected: Expected {
                label: CombinedClass::HProper,
                not_w1_not_w2: true,
                abelian_structure: false,
                derived_dim: 3,
                derived_abelian: false,
                center_dim: 1,
                // derived by the engine's own brute-force oracle
                lee: [&[(4, (-1, 1))], &[(1, (-2, 1))], &[(2, (-2, 1))]],
                gamma: None,
                f: None,
                norms: [(-2, 1), (12, 1), (12, 1)],
                tita_j: false,
                d_theta1_j1_zero: true,
            },
        },
        "hc3a" => CatalogCase {
            name: "hc3a",
            description: "aff(C); metric of signature (1,1) on the derived algebra",
            // [e2,e3]=[e1,e4]=e2, [e2,e1]=[e4,e3]=e4
            algebra: LieAlgebra::from_brackets(&[
                ((1, 2), vec![term(1, 1, 2)]),
                ((0, 3), vec![term(1, 1, 2)]),
                ((0, 1), vec![term(-1, 1, 4)]),
                ((2, 3), vec![term(-1, 1, 4)]),
            ]),
            expected: Expected {
                label: CombinedClass::KaehlerJ1,
                not_w1_not_w2: true,
                abelian_structure: true,
                derived_dim: 2,
                derived_abelian: true,
                center_dim: 0,
                lee: [&[], &[(1, (4, 1))], &[(2, (4, 1))]],
                gamma: Some(GAMMA_HC3A),
                f: Some([F1_HC3A, F2_HC3A, F3_HC3A]),
                norms: [(0, 1), (32, 1), (32, 1)],
                tita_j: false,
                d_theta1_j1_zero: true,
            },
        },
        "hc3b" => CatalogCase {
            name: "hc3b",
            description: "aff(C); metric of signature (2,0) on the derived algebra",
            // [e1,e3]=[e4,e2]=e1, [e1,e4]=[e2,e3]=e2
            algebra: LieAlgebra::from_brackets(&[
                ((0, 2), vec![term(1, 1, 1)]),
                ((1, 3), vec![term(-1, 1, 1)]),
                ((0, 3), vec![term(1, 1, 2)]),
                ((1, 2), vec![term(1, 1, 2)]),
            ]),
            expected: Expected {
                label: CombinedClass::WZero,
                not_w1_not_w2: false,
                abelian_structure: true,
                derived_dim: 2,
                derived_abelian: true,
                center_dim: 0,
                lee: [&[(4, (-2, 1))], &[(1, (4, 1))], &[(2, (4, 1))]],
                gamma: Some(GAMMA_HC3B),
                f: Some([F1_HC3B, F2_HC3B, F3_HC3B]),
                norms: [(-8, 1), (16, 1), (16, 1)],
                tita_j: true,
                d_theta1_j1_zero: true,
            },
        },
        "hc4a" => CatalogCase {
            name: "hc4a",
            description: "solvable algebra of RH^4; orthogonal unit e1 with g(e1,e1)=+1",
            // [e1,e2]=e2, [e1,e3]=e3, [e1,e4]=e4
            algebra: LieAlgebra::from_brackets(&[
                ((0, 1), vec![term(1, 1, 2)]),
                ((0, 2), vec![term(1, 1, 3)]),
                ((0, 3), vec![term(1, 1, 4)]),
            ]),
            expected: Expected {
                // The Lee forms below are the exact contraction of the F-table
                // with the inverse metric; with them the W1 identities for J2
                // and J3 and the theta compatibility equalities hold, so the
                // case lands in W^0 exactly like hc4b.
                label: CombinedClass::WZero,
                not_w1_not_w2: false,
                abelian_structure: false,
                derived_dim: 3,
                derived_abelian: true,
                center_dim: 0,
                lee: [&[(2, (-2, 1))], &[(3, (4, 1))], &[(4, (-4, 1))]],
                gamma: Some(GAMMA_HC4A),
                f: Some([F1_HC4A, F2_HC4A, F3_HC4A]),
                norms: [(8, 1), (-16, 1), (-16, 1)],
                tita_j: true,
                d_theta1_j1_zero: true,
            },
        },
        "hc4b" => CatalogCase {
            name: "hc4b",
            description: "solvable algebra of RH^4; orthogonal unit e4 with g(e4,e4)=-1",
            // [e4,e1]=e1, [e4,e2]=e2, [e4,e3]=e3
            algebra: LieAlgebra::from_brackets(&[
                ((0, 3), vec![term(-1, 1, 1)]),
                ((1, 3), vec![term(-1, 1, 2)]),
                ((2, 3), vec![term(-1, 1, 3)]),
            ]),
            expected: Expected {
                label: CombinedClass::WZero,
                not_w1_not_w2: false,
                abelian_structure: false,
                derived_dim: 3,
                derived_abelian: true,
                center_dim: 0,
                lee: [&[(3, (-2, 1))], &[(2, (-4, 1))], &[(1, (4, 1))]],
                gamma: Some(GAMMA_HC4B),
                f: Some([F1_HC4B, F2_HC4B, F3_HC4B]),
                norms: [(-8, 1), (16, 1), (16, 1)],
                tita_j: true,
                d_theta1_j1_zero: true,
            },
        },
        "hc5a" => CatalogCase {
            name: "hc5a",
            description: "solvable algebra of CH^2 (Heisenberg derived algebra); \
                          orthogonal unit e1 with g(e1,e1)=+1",
            // [e1,e2]=e2, [e1,e3]=e3/2, [e1,e4]=e4/2, [e3,e4]=e2/2
            algebra: LieAlgebra::from_brackets(&[
                ((0, 1), vec![term(1, 1, 2)]),
                ((0, 2), vec![term(1, 2, 3)]),
                ((0, 3), vec![term(1, 2, 4)]),
                ((2, 3), vec![term(1, 2, 2)]),
            ]),
            expected: Expected {
                label: CombinedClass::HProper,
                not_w1_not_w2: true,
                abelian_structure: false,
                derived_dim: 3,
                derived_abelian: false,
                center_dim: 0,
                lee: [&[(2, (-1, 2))], &[(3, (3, 1))], &[(4, (-3, 1))]],
                gamma: Some(GAMMA_HC5A),
                f: Some([F1_HC5A, F2_HC5A, F3_HC5A]),
                norms: [(1, 2), (-11, 1), (-11, 1)],
                tita_j: false,
                d_theta1_j1_zero: true,
            },
        },
        "hc5b" => CatalogCase {
            name: "hc5b",
            description: "solvable algebra of CH^2 with rearranged basis; orthogonal \
                          unit e4 with g(e4,e4)=-1",
            // [e1,e2]=-e3/2, [e1,e4]=-e1/2, [e2,e4]=-e2/2, [e3,e4]=-e3
            algebra: LieAlgebra::from_brackets(&[
                ((0, 1), vec![term(-1, 2, 3)]),
                ((0, 3), vec![term(-1, 2, 1)]),
                ((1, 3), vec![term(-1, 2, 2)]),
                ((2, 3), vec![term(-1, 1, 3)]),
            ]),
            expected: Expected {
                label: CombinedClass::HProper,
                not_w1_not_w2: true,
                abelian_structure: false,
                derived_dim: 3,
                derived_abelian: false,
                center_dim: 0,
                // derived by the engine's own brute-force oracle
                lee: [&[(3, (-1, 2))], &[(2, (-3, 1))], &[(1, (3, 1))]],
                gamma: None,
                f: None,
                norms: [(-1, 2), (11, 1), (11, 1)],
                tita_j: false,
                d_theta1_j1_zero: true,
            },
        },
        _ => return None,
    };
    Some(case)
}

/// Bracket list of a case in canonical `i < j` order, for export.
pub fn bracket_lines(alg: &LieAlgebra) -> Vec<BracketSpec> {
    let mut out = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            let v = alg.bracket_basis(i, j);
            if v.is_zero() {
                continue;
            }
            let terms: Vec<(Rational, usize)> = (0..4)
                .filter(|&k| !v[k].is_zero())
                .map(|k| (v[k].clone(), k))
                .collect();
            out.push(((i, j), terms));
        }
    }
    out
}

/// e_{k+1} scaled: convenience for tests.
pub fn scaled_basis(k: usize, n: i64, d: i64) -> Vector4 {
    Vector4::basis(k).scale(&rat(n, d))
}

const GAMMA_HC2A: GammaTable = &[
    ((2, 3), [(0, 1), (0, 1), (0, 1), (-3, 2)]),
    ((2, 4), [(0, 1), (0, 1), (3, 2), (0, 1)]),
    ((3, 2), [(0, 1), (0, 1), (0, 1), (-1, 2)]),
    ((3, 4), [(0, 1), (-1, 2), (0, 1), (0, 1)]),
    ((4, 2), [(0, 1), (0, 1), (1, 2), (0, 1)]),
    ((4, 3), [(0, 1), (1, 2), (0, 1), (0, 1)]),
];
const F1_HC2A: ScalarTable = &[
    ((3, 1, 4), (1, 2)), ((3, 2, 3), (-1, 2)), ((3, 3, 2), (1, 2)), ((3, 4, 1), (-1, 2)),
    ((4, 1, 3), (-1, 2)), ((4, 2, 4), (-1, 2)), ((4, 3, 1), (1, 2)), ((4, 4, 2), (1, 2)),
];
const F2_HC2A: ScalarTable = &[
    ((2, 1, 4), (3, 2)), ((2, 2, 3), (-3, 2)), ((2, 3, 2), (-3, 2)), ((2, 4, 1), (3, 2)),
    ((3, 2, 2), (-1, 1)), ((3, 4, 4), (-1, 1)), ((4, 1, 2), (1, 2)), ((4, 2, 1), (1, 2)),
    ((4, 3, 4), (1, 2)), ((4, 4, 3), (1, 2)),
];
const F3_HC2A: ScalarTable = &[
    ((2, 1, 3), (3, 2)), ((2, 2, 4), (3, 2)), ((2, 3, 1), (3, 2)), ((2, 4, 2), (3, 2)),
    ((3, 1, 2), (1, 2)), ((3, 2, 1), (1, 2)), ((3, 3, 4), (-1, 2)), ((3, 4, 3), (-1, 2)),
    ((4, 2, 2), (1, 1)), ((4, 3, 3), (1, 1)),
];

const GAMMA_HC3A: GammaTable = &[
    ((2, 1), [(0, 1), (0, 1), (0, 1), (1, 1)]),
    ((2, 2), [(0, 1), (0, 1), (1, 1), (0, 1)]),
    ((2, 3), [(0, 1), (1, 1), (0, 1), (0, 1)]),
    ((2, 4), [(1, 1), (0, 1), (0, 1), (0, 1)]),
    ((4, 1), [(0, 1), (-1, 1), (0, 1), (0, 1)]),
    ((4, 2), [(1, 1), (0, 1), (0, 1), (0, 1)]),
    ((4, 3), [(0, 1), (0, 1), (0, 1), (1, 1)]),
    ((4, 4), [(0, 1), (0, 1), (-1, 1), (0, 1)]),
];
const F1_HC3A: ScalarTable = &[];
const F2_HC3A: ScalarTable = &[
    ((2, 1, 2), (2, 1)), ((2, 2, 1), (2, 1)), ((2, 3, 4), (2, 1)), ((2, 4, 3), (2, 1)),
    ((4, 1, 4), (-2, 1)), ((4, 2, 3), (2, 1)), ((4, 3, 2), (2, 1)), ((4, 4, 1), (-2, 1)),
];
const F3_HC3A: ScalarTable = &[
    ((2, 1, 1), (-2, 1)), ((2, 2, 2), (2, 1)), ((2, 3, 3), (2, 1)), ((2, 4, 4), (-2, 1)),
    ((4, 1, 3), (-2, 1)), ((4, 2, 4), (-2, 1)), ((4, 3, 1), (-2, 1)), ((4, 4, 2), (-2, 1)),
];

const GAMMA_HC3B: GammaTable = &[
    ((1, 1), [(0, 1), (0, 1), (1, 1), (0, 1)]),
    ((1, 3), [(1, 1), (0, 1), (0, 1), (0, 1)]),
    ((2, 2), [(0, 1), (0, 1), (1, 1), (0, 1)]),
    ((2, 3), [(0, 1), (1, 1), (0, 1), (0, 1)]),
    ((4, 1), [(0, 1), (-1, 1), (0, 1), (0, 1)]),
    ((4, 2), [(1, 1), (0, 1), (0, 1), (0, 1)]),
];
const F1_HC3B: ScalarTable = &[
    ((1, 1, 4), (-1, 1)), ((1, 2, 3), (1, 1)), ((1, 3, 2), (-1, 1)), ((1, 4, 1), (1, 1)),
    ((2, 1, 3), (-1, 1)), ((2, 2, 4), (-1, 1)), ((2, 3, 1), (1, 1)), ((2, 4, 2), (1, 1)),
];
const F2_HC3B: ScalarTable = &[
    ((1, 1, 1), (2, 1)), ((1, 3, 3), (2, 1)), ((2, 1, 2), (1, 1)), ((2, 2, 1), (1, 1)),
    ((2, 3, 4), (1, 1)), ((2, 4, 3), (1, 1)), ((4, 1, 4), (-1, 1)), ((4, 2, 3), (1, 1)),
    ((4, 3, 2), (1, 1)), ((4, 4, 1), (-1, 1)),
];
const F3_HC3B: ScalarTable = &[
    ((1, 1, 2), (1, 1)), ((1, 2, 1), (1, 1)), ((1, 3, 4), (-1, 1)), ((1, 4, 3), (-1, 1)),
    ((2, 2, 2), (2, 1)), ((2, 3, 3), (2, 1)), ((4, 1, 3), (-1, 1)), ((4, 2, 4), (-1, 1)),
    ((4, 3, 1), (-1, 1)), ((4, 4, 2), (-1, 1)),
];

const GAMMA_HC4A: GammaTable = &[
    ((2, 1), [(0, 1), (-1, 1), (0, 1), (0, 1)]),
    ((2, 2), [(1, 1), (0, 1), (0, 1), (0, 1)]),
    ((3, 1), [(0, 1), (0, 1), (-1, 1), (0, 1)]),
    ((3, 3), [(-1, 1), (0, 1), (0, 1), (0, 1)]),
    ((4, 1), [(0, 1), (0, 1), (0, 1), (-1, 1)]),
    ((4, 4), [(-1, 1), (0, 1), (0, 1), (0, 1)]),
];
const F1_HC4A: ScalarTable = &[
    ((3, 1, 4), (1, 1)), ((3, 2, 3), (-1, 1)), ((3, 3, 2), (1, 1)), ((3, 4, 1), (-1, 1)),
    ((4, 1, 3), (-1, 1)), ((4, 2, 4), (-1, 1)), ((4, 3, 1), (1, 1)), ((4, 4, 2), (1, 1)),
];
const F2_HC4A: ScalarTable = &[
    ((2, 1, 4), (-1, 1)), ((2, 2, 3), (1, 1)), ((2, 3, 2), (1, 1)), ((2, 4, 1), (-1, 1)),
    ((3, 1, 1), (-2, 1)), ((3, 3, 3), (-2, 1)), ((4, 1, 2), (-1, 1)), ((4, 2, 1), (-1, 1)),
    ((4, 3, 4), (-1, 1)), ((4, 4, 3), (-1, 1)),
];
const F3_HC4A: ScalarTable = &[
    ((2, 1, 3), (-1, 1)), ((2, 2, 4), (-1, 1)), ((2, 3, 1), (-1, 1)), ((2, 4, 2), (-1, 1)),
    ((3, 1, 2), (-1, 1)), ((3, 2, 1), (-1, 1)), ((3, 3, 4), (1, 1)), ((3, 4, 3), (1, 1)),
    ((4, 1, 1), (2, 1)), ((4, 4, 4), (2, 1)),
];

const GAMMA_HC4B: GammaTable = &[
    ((1, 1), [(0, 1), (0, 1), (0, 1), (-1, 1)]),
    ((1, 4), [(-1, 1), (0, 1), (0, 1), (0, 1)]),
    ((2, 2), [(0, 1), (0, 1), (0, 1), (-1, 1)]),
    ((2, 4), [(0, 1), (-1, 1), (0, 1), (0, 1)]),
    ((3, 3), [(0, 1), (0, 1), (0, 1), (1, 1)]),
    ((3, 4), [(0, 1), (0, 1), (-1, 1), (0, 1)]),
];
const F1_HC4B: ScalarTable = &[
    ((1, 1, 3), (-1, 1)), ((1, 2, 4), (-1, 1)), ((1, 3, 1), (1, 1)), ((1, 4, 2), (1, 1)),
    ((2, 1, 4), (1, 1)), ((2, 2, 3), (-1, 1)), ((2, 3, 2), (1, 1)), ((2, 4, 1), (-1, 1)),
];
const F2_HC4B: ScalarTable = &[
    ((1, 1, 2), (-1, 1)), ((1, 2, 1), (-1, 1)), ((1, 3, 4), (-1, 1)), ((1, 4, 3), (-1, 1)),
    ((2, 2, 2), (-2, 1)), ((2, 4, 4), (-2, 1)), ((3, 1, 4), (-1, 1)), ((3, 2, 3), (1, 1)),
    ((3, 3, 2), (1, 1)), ((3, 4, 1), (-1, 1)),
];
const F3_HC4B: ScalarTable = &[
    ((1, 1, 1), (2, 1)), ((1, 4, 4), (2, 1)), ((2, 1, 2), (1, 1)), ((2, 2, 1), (1, 1)),
    ((2, 3, 4), (-1, 1)), ((2, 4, 3), (-1, 1)), ((3, 1, 3), (-1, 1)), ((3, 2, 4), (-1, 1)),
    ((3, 3, 1), (-1, 1)), ((3, 4, 2), (-1, 1)),
];

const GAMMA_HC5A: GammaTable = &[
    ((2, 1), [(0, 1), (-1, 1), (0, 1), (0, 1)]),
    ((2, 2), [(1, 1), (0, 1), (0, 1), (0, 1)]),
    ((2, 3), [(0, 1), (0, 1), (0, 1), (1, 4)]),
    ((2, 4), [(0, 1), (0, 1), (-1, 4), (0, 1)]),
    ((3, 1), [(0, 1), (0, 1), (-1, 2), (0, 1)]),
    ((3, 2), [(0, 1), (0, 1), (0, 1), (1, 4)]),
    ((3, 3), [(-1, 2), (0, 1), (0, 1), (0, 1)]),
    ((3, 4), [(0, 1), (1, 4), (0, 1), (0, 1)]),
    ((4, 1), [(0, 1), (0, 1), (0, 1), (-1, 2)]),
    ((4, 2), [(0, 1), (0, 1), (-1, 4), (0, 1)]),
    ((4, 3), [(0, 1), (-1, 4), (0, 1), (0, 1)]),
    ((4, 4), [(-1, 2), (0, 1), (0, 1), (0, 1)]),
];
const F1_HC5A: ScalarTable = &[
    ((3, 1, 4), (1, 4)), ((3, 2, 3), (-1, 4)), ((3, 3, 2), (1, 4)), ((3, 4, 1), (-1, 4)),
    ((4, 1, 3), (-1, 4)), ((4, 2, 4), (-1, 4)), ((4, 3, 1), (1, 4)), ((4, 4, 2), (1, 4)),
];
const F2_HC5A: ScalarTable = &[
    ((2, 1, 4), (-5, 4)), ((2, 2, 3), (5, 4)), ((2, 3, 2), (5, 4)), ((2, 4, 1), (-5, 4)),
    ((3, 1, 1), (-1, 1)), ((3, 2, 2), (1, 2)), ((3, 3, 3), (-1, 1)), ((3, 4, 4), (1, 2)),
    ((4, 1, 2), (-3, 4)), ((4, 2, 1), (-3, 4)), ((4, 3, 4), (-3, 4)), ((4, 4, 3), (-3, 4)),
];
const F3_HC5A: ScalarTable = &[
    ((2, 1, 3), (-5, 4)), ((2, 2, 4), (-5, 4)), ((2, 3, 1), (-5, 4)), ((2, 4, 2), (-5, 4)),
    ((3, 1, 2), (-3, 4)), ((3, 2, 1), (-3, 4)), ((3, 3, 4), (3, 4)), ((3, 4, 3), (3, 4)),
    ((4, 1, 1), (1, 1)), ((4, 2, 2), (-1, 2)), ((4, 3, 3), (-1, 2)), ((4, 4, 4), (1, 1)),
];
