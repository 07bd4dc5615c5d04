//! The almost hypercomplex structure with Hermitian-Norden metric: the
//! neutral metric, the triple (J_1, J_2, J_3), compatibility and quaternionic
//! checks, associated tensors, Nijenhuis tensors, and the Abelian criterion.

use std::fmt;

use crate::exact::{
    signature_of_symmetric, BilinearMap, Covector, ExactError, Matrix4, Rational, Vector4,
};
use crate::liealg::LieAlgebra;

const DIM: usize = 4;

/// Metric signs: the metric is Hermitian for J_1 and Norden (anti-Hermitian)
/// for J_2 and J_3.
pub const EPSILON: [i64; 3] = [1, -1, -1];

/// A symmetric nondegenerate bilinear form with its exact inverse cached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Metric {
    matrix: Matrix4,
    inverse: Matrix4,
}

/// Why a matrix cannot serve as a metric.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MetricError {
    #[error("metric matrix is not symmetric")]
    NotSymmetric,
    #[error("metric matrix is degenerate")]
    Degenerate,
}

impl Metric {
    pub fn new(matrix: Matrix4) -> Result<Self, MetricError> {
        if !matrix.is_symmetric() {
            return Err(MetricError::NotSymmetric);
        }
        let inverse = matrix.inverse().map_err(|_: ExactError| MetricError::Degenerate)?;
        Ok(Metric { matrix, inverse })
    }

    /// The neutral metric diag(1, 1, -1, -1) of signature (2,2).
    pub fn standard() -> Self {
        Metric::diagonal(&[
            Rational::one(),
            Rational::one(),
            Rational::from_integer(-1),
            Rational::from_integer(-1),
        ])
        .expect("standard metric is nondegenerate")
    }

    pub fn diagonal(entries: &[Rational; 4]) -> Result<Self, MetricError> {
        Metric::new(Matrix4::diagonal(entries))
    }

    /// g(x, y).
    pub fn eval(&self, x: &Vector4, y: &Vector4) -> Rational {
        let mut out = Rational::zero();
        for i in 0..DIM {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..DIM {
                let entry = self.matrix.get(i, j);
                if !entry.is_zero() {
                    let term = &(&x[i] * &y[j]) * entry;
                    out += &term;
                }
            }
        }
        out
    }

    pub fn matrix(&self) -> &Matrix4 {
        &self.matrix
    }

    /// The cached exact inverse g^{ij}.
    pub fn inverse(&self) -> &Matrix4 {
        &self.inverse
    }

    /// Index lowering: x maps to g(x, .).
    pub fn lower(&self, x: &Vector4) -> Covector {
        let mut out = Covector::zero();
        for k in 0..DIM {
            out[k] = self.eval(x, &Vector4::basis(k));
        }
        out
    }

    /// Index raising with the exact inverse.
    pub fn raise(&self, eta: &Covector) -> Vector4 {
        self.inverse.apply(&Vector4::new(eta.components().clone()))
    }

    /// Signature (positive, negative).
    pub fn signature(&self) -> (usize, usize) {
        signature_of_symmetric(&self.matrix)
    }
}

/// The metric together with the triple of almost complex structures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HNStructure {
    j: [Matrix4; 3],
    metric: Metric,
}

impl HNStructure {
    /// The standard triple: in the fixed basis,
    /// `J1: e1->e2, e2->-e1, e3->-e4, e4->e3`;
    /// `J2: e1->e3, e2->e4, e3->-e1, e4->-e2`;
    /// `J3: e1->-e4, e2->e3, e3->-e2, e4->e1`;
    /// with the neutral metric diag(1, 1, -1, -1).
    pub fn standard() -> Self {
        HNStructure {
            j: standard_triple(),
            metric: Metric::standard(),
        }
    }

    /// Standard triple over a caller-supplied metric.
    pub fn with_metric(metric: Metric) -> Self {
        HNStructure {
            j: standard_triple(),
            metric,
        }
    }

    /// Fully custom structure; callers should run the quaternionic and
    /// compatibility checks afterwards.
    pub fn new(j: [Matrix4; 3], metric: Metric) -> Self {
        HNStructure { j, metric }
    }

    /// J_{alpha+1} for `alpha` in 0..3.
    pub fn j(&self, alpha: usize) -> &Matrix4 {
        &self.j[alpha]
    }

    pub fn triple(&self) -> &[Matrix4; 3] {
        &self.j
    }

    pub fn metric(&self) -> &Metric {
        &self.metric
    }

    pub fn epsilon(&self, alpha: usize) -> Rational {
        Rational::from_integer(EPSILON[alpha])
    }
}

fn standard_triple() -> [Matrix4; 3] {
    [
        Matrix4::from_columns([
            Vector4::from_integers([0, 1, 0, 0]),
            Vector4::from_integers([-1, 0, 0, 0]),
            Vector4::from_integers([0, 0, 0, -1]),
            Vector4::from_integers([0, 0, 1, 0]),
        ]),
        Matrix4::from_columns([
            Vector4::from_integers([0, 0, 1, 0]),
            Vector4::from_integers([0, 0, 0, 1]),
            Vector4::from_integers([-1, 0, 0, 0]),
            Vector4::from_integers([0, -1, 0, 0]),
        ]),
        Matrix4::from_columns([
            Vector4::from_integers([0, 0, 0, -1]),
            Vector4::from_integers([0, 0, 1, 0]),
            Vector4::from_integers([0, -1, 0, 0]),
            Vector4::from_integers([1, 0, 0, 0]),
        ]),
    ]
}

/// One failed structure identity; `alpha` is 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StructureFailure {
    /// J_alpha^2 != -I
    Square { alpha: usize },
    /// J_alpha != J_beta o J_gamma for the cyclic (alpha, beta, gamma)
    Composition { alpha: usize },
    /// J_alpha != -J_gamma o J_beta
    AntiComposition { alpha: usize },
    /// g(J_alpha e_i, J_alpha e_j) != eps_alpha g(e_i, e_j)
    Compatibility { alpha: usize, i: usize, j: usize },
}

impl fmt::Display for StructureFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructureFailure::Square { alpha } => {
                write!(f, "J{}^2 != -I", alpha + 1)
            }
            StructureFailure::Composition { alpha } => {
                let (b, c) = cyclic_partners(*alpha);
                write!(f, "J{} != J{} o J{}", alpha + 1, b + 1, c + 1)
            }
            StructureFailure::AntiComposition { alpha } => {
                let (b, c) = cyclic_partners(*alpha);
                write!(f, "J{} != -J{} o J{}", alpha + 1, c + 1, b + 1)
            }
            StructureFailure::Compatibility { alpha, i, j } => write!(
                f,
                "g(J{a} e{i}, J{a} e{j}) != eps_{a} g(e{i}, e{j})",
                a = alpha + 1,
                i = i + 1,
                j = j + 1
            ),
        }
    }
}

/// Result of a structure check; empty failures means the check passed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckResult {
    pub failures: Vec<StructureFailure>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn cyclic_partners(alpha: usize) -> (usize, usize) {
    ((alpha + 1) % 3, (alpha + 2) % 3)
}

/// Verifies `J_alpha^2 = -I` and `J_alpha = J_beta o J_gamma = -J_gamma o J_beta`
/// for all cyclic permutations, listing each failing identity.
pub fn check_quaternionic(triple: &[Matrix4; 3]) -> CheckResult {
    let minus_identity = -&Matrix4::identity();
    let mut failures = Vec::new();
    for alpha in 0..3 {
        let (beta, gamma) = cyclic_partners(alpha);
        if triple[alpha].compose(&triple[alpha]) != minus_identity {
            failures.push(StructureFailure::Square { alpha });
        }
        if triple[alpha] != triple[beta].compose(&triple[gamma]) {
            failures.push(StructureFailure::Composition { alpha });
        }
        if triple[alpha] != -&triple[gamma].compose(&triple[beta]) {
            failures.push(StructureFailure::AntiComposition { alpha });
        }
    }
    CheckResult { failures }
}

/// Verifies `g(J_alpha x, J_alpha y) = eps_alpha g(x, y)` on all basis pairs:
/// Hermitian for J_1, Norden for J_2 and J_3.
pub fn check_compatibility(h: &HNStructure) -> CheckResult {
    let mut failures = Vec::new();
    for alpha in 0..3 {
        let eps = h.epsilon(alpha);
        for i in 0..DIM {
            for j in 0..DIM {
                let (ei, ej) = (Vector4::basis(i), Vector4::basis(j));
                let lhs = h.metric().eval(&h.j(alpha).apply(&ei), &h.j(alpha).apply(&ej));
                let rhs = &eps * &h.metric().eval(&ei, &ej);
                if lhs != rhs {
                    failures.push(StructureFailure::Compatibility { alpha, i, j });
                }
            }
        }
    }
    CheckResult { failures }
}

/// The Kaehler 2-form g_1 and the associated neutral metrics g_2, g_3,
/// `g_alpha(x, y) = g(J_alpha x, y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssociatedTensor {
    /// 0-based structure index.
    pub alpha: usize,
    pub matrix: Matrix4,
}

pub fn associated_tensors(h: &HNStructure) -> [AssociatedTensor; 3] {
    std::array::from_fn(|alpha| {
        let mut matrix = Matrix4::zero();
        for i in 0..DIM {
            for j in 0..DIM {
                let value = h
                    .metric()
                    .eval(&h.j(alpha).apply(&Vector4::basis(i)), &Vector4::basis(j));
                matrix.set(i, j, value);
            }
        }
        AssociatedTensor { alpha, matrix }
    })
}

/// Nijenhuis tensor of `j` over the algebra bracket, on all basis pairs:
/// `N(x, y) = [Jx, Jy] - J[Jx, y] - J[x, Jy] - [x, y]`.
///
/// All objects are left-invariant, so vector-field brackets reduce to the
/// algebra bracket.
pub fn nijenhuis(alg: &LieAlgebra, j: &Matrix4) -> BilinearMap {
    BilinearMap::from_fn(|a, b| {
        let (x, y) = (Vector4::basis(a), Vector4::basis(b));
        let (jx, jy) = (j.apply(&x), j.apply(&y));
        let mut out = alg.bracket(&jx, &jy);
        out = &out - &j.apply(&alg.bracket(&jx, &y));
        out = &out - &j.apply(&alg.bracket(&x, &jy));
        &out - &alg.bracket(&x, &y)
    })
}

/// Outcome of the integrability test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypercomplexCheck {
    pub integrable: bool,
    /// First nonzero Nijenhuis component `(alpha, i, j, N_alpha(e_i, e_j))`.
    pub witness: Option<(usize, usize, usize, Vector4)>,
}

/// True iff the Nijenhuis tensor vanishes for all three structures.
pub fn is_hypercomplex(alg: &LieAlgebra, h: &HNStructure) -> HypercomplexCheck {
    for alpha in 0..3 {
        let n = nijenhuis(alg, h.j(alpha));
        if let Some((i, j, value)) = n.first_nonzero() {
            return HypercomplexCheck {
                integrable: false,
                witness: Some((alpha, i, j, value.clone())),
            };
        }
    }
    HypercomplexCheck {
        integrable: true,
        witness: None,
    }
}

/// True iff `[J_alpha x, J_alpha y] = [x, y]` on all basis pairs for all three
/// structures. Such structures are always integrable.
pub fn is_abelian_structure(alg: &LieAlgebra, h: &HNStructure) -> bool {
    for alpha in 0..3 {
        for a in 0..DIM {
            for b in 0..DIM {
                let (x, y) = (Vector4::basis(a), Vector4::basis(b));
                let lhs = alg.bracket(&h.j(alpha).apply(&x), &h.j(alpha).apply(&y));
                if lhs != alg.bracket(&x, &y) {
                    return false;
                }
            }
        }
    }
    true
}
