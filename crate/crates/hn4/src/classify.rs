//! Class membership for the Hermitian structure J_1 and the Norden
//! structures J_2, J_3, and the combined class label of the whole structure.
//!
//! All defining identities are multilinear, so testing them on every basis
//! triple decides them exactly.

use serde::{Deserialize, Serialize};

use crate::connection::{
    compose_form_with_j, exterior_derivative_1form, lee_form, levi_civita, nabla_j,
    square_norm_nabla_j, structure_tensor, Connection, LeeForm, StructureTensor,
};
use crate::exact::{Matrix4, Rational, Vector4};
use crate::hnstruct::{
    check_compatibility, check_quaternionic, is_abelian_structure, is_hypercomplex, CheckResult,
    HNStructure, Metric,
};
use crate::liealg::{center, derived_algebra, LieAlgebra, ValidationResult};

const DIM: usize = 4;

/// Basic-class membership of the almost Hermitian structure J_1. In
/// dimension four only two basic classes survive: W2 (almost Kaehler) and
/// W4 (Hermitian); W0 is the Kaehler type F_1 = 0 and lies in both.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HermitianClassFlags {
    #[serde(rename = "W0")]
    pub is_w0: bool,
    #[serde(rename = "W2")]
    pub is_w2: bool,
    #[serde(rename = "W4")]
    pub is_w4: bool,
}

/// Basic-class membership of an almost Norden structure (J_2 or J_3).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NordenClassFlags {
    #[serde(skip)]
    pub alpha: usize,
    #[serde(rename = "W0")]
    pub is_w0: bool,
    #[serde(rename = "W1")]
    pub is_w1: bool,
    #[serde(rename = "W2")]
    pub is_w2: bool,
    #[serde(rename = "W3")]
    pub is_w3: bool,
    #[serde(rename = "W1_plus_W2")]
    pub is_w1_plus_w2: bool,
}

/// Cyclic sum of `F` over the basis triple `(i, j, k)`.
fn cyclic_sum(f: &StructureTensor, i: usize, j: usize, k: usize) -> Rational {
    f.f.get(i, j, k) + f.f.get(j, k, i) + f.f.get(k, i, j)
}

/// Cyclic sum of `F(x, y, J z)` over the basis triple.
fn cyclic_sum_with_j(f: &StructureTensor, j_mat: &Matrix4, i: usize, j: usize, k: usize) -> Rational {
    let e = [Vector4::basis(i), Vector4::basis(j), Vector4::basis(k)];
    let je = [j_mat.apply(&e[0]), j_mat.apply(&e[1]), j_mat.apply(&e[2])];
    &(&f.apply(&e[0], &e[1], &je[2]) + &f.apply(&e[1], &e[2], &je[0])) + &f.apply(&e[2], &e[0], &je[1])
}

/// Decides the Hermitian classes of J_1: W2 by the vanishing cyclic sum, W4
/// by its defining identity with the computed Lee form, W0 by `F_1 = 0`.
pub fn classify_hermitian(
    f1: &StructureTensor,
    theta1: &LeeForm,
    g: &Metric,
    j1: &Matrix4,
) -> HermitianClassFlags {
    let is_w0 = f1.f.is_zero();
    let mut is_w2 = true;
    let mut is_w4 = true;
    let half = Rational::new(1, 2).expect("2 != 0");
    for i in 0..DIM {
        for j in 0..DIM {
            for k in 0..DIM {
                if is_w2 && !cyclic_sum(f1, i, j, k).is_zero() {
                    is_w2 = false;
                }
                if is_w4 {
                    let (x, y, z) = (Vector4::basis(i), Vector4::basis(j), Vector4::basis(k));
                    let (jy, jz) = (j1.apply(&y), j1.apply(&z));
                    let rhs = &half
                        * &(&(&(&g.eval(&x, &y) * &theta1.theta[k])
                            - &(&g.eval(&x, &z) * &theta1.theta[j]))
                            - &(&g.eval(&x, &jy) * &theta1.theta.apply(&jz))
                            + &(&g.eval(&x, &jz) * &theta1.theta.apply(&jy)));
                    if f1.f.get(i, j, k) != &rhs {
                        is_w4 = false;
                    }
                }
                if !is_w2 && !is_w4 {
                    break;
                }
            }
        }
    }
    HermitianClassFlags { is_w0, is_w2, is_w4 }
}

/// Decides the Norden classes of J_alpha by testing each defining identity
/// on all basis triples. `W1 + W2` is the W2 cyclic identity without the
/// `theta = 0` requirement and characterizes integrability of J_alpha.
pub fn classify_norden(
    fa: &StructureTensor,
    thetaa: &LeeForm,
    g: &Metric,
    ja: &Matrix4,
) -> NordenClassFlags {
    let is_w0 = fa.f.is_zero();
    let quarter = Rational::new(1, 4).expect("4 != 0");
    let mut is_w1 = true;
    let mut is_w1_plus_w2 = true;
    let mut is_w3 = true;
    for i in 0..DIM {
        for j in 0..DIM {
            for k in 0..DIM {
                if is_w1 {
                    let (x, y, z) = (Vector4::basis(i), Vector4::basis(j), Vector4::basis(k));
                    let (jy, jz) = (ja.apply(&y), ja.apply(&z));
                    let rhs = &quarter
                        * &(&(&(&g.eval(&x, &y) * &thetaa.theta[k])
                            + &(&g.eval(&x, &z) * &thetaa.theta[j]))
                            + &(&g.eval(&x, &jy) * &thetaa.theta.apply(&jz))
                            + &(&g.eval(&x, &jz) * &thetaa.theta.apply(&jy)));
                    if fa.f.get(i, j, k) != &rhs {
                        is_w1 = false;
                    }
                }
                if is_w1_plus_w2 && !cyclic_sum_with_j(fa, ja, i, j, k).is_zero() {
                    is_w1_plus_w2 = false;
                }
                if is_w3 && !cyclic_sum(fa, i, j, k).is_zero() {
                    is_w3 = false;
                }
            }
        }
    }
    let is_w2 = is_w1_plus_w2 && thetaa.theta.is_zero();
    NordenClassFlags {
        alpha: fa.alpha,
        is_w0,
        is_w1,
        is_w2,
        is_w3,
        is_w1_plus_w2,
    }
}

/// The characterization of the class `W = W4(J1) ∩ W1(J2) ∩ W1(J3)`:
/// `theta_2 o J_2 = theta_3 o J_3 = -2 (theta_1 o J_1)`, both equalities
/// checked componentwise.
pub fn check_tita_j(thetas: &[LeeForm; 3], h: &HNStructure) -> bool {
    let t1 = compose_form_with_j(&thetas[0].theta, h.j(0));
    let t2 = compose_form_with_j(&thetas[1].theta, h.j(1));
    let t3 = compose_form_with_j(&thetas[2].theta, h.j(2));
    let minus_two = Rational::from_integer(-2);
    let target = t1.scale(&minus_two);
    t2 == target && t3 == target
}

/// Combined class label, most specific first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CombinedClass {
    /// All three structures parallel: hyper-Kaehler type, F_alpha = 0.
    #[serde(rename = "K")]
    K,
    /// W with closed `theta_1 o J_1`: locally conformally hyper-Kaehler.
    #[serde(rename = "W^0")]
    WZero,
    /// W4(J1) ∩ W1(J2) ∩ W1(J3).
    #[serde(rename = "W")]
    W,
    /// Kaehler for J_1 while J_2, J_3 are merely integrable-compatible.
    #[serde(rename = "W0(J1)cap(W1+W2)(J2,J3)")]
    KaehlerJ1,
    /// The largest hypercomplex class H = W4(J1) ∩ (W1+W2)(J2) ∩ (W1+W2)(J3),
    /// with none of its named subclasses applying.
    #[serde(rename = "H-proper")]
    HProper,
    /// Outside H.
    #[serde(rename = "outside-H")]
    OutsideH,
}

impl CombinedClass {
    pub fn label(&self) -> &'static str {
        match self {
            CombinedClass::K => "K",
            CombinedClass::WZero => "W^0",
            CombinedClass::W => "W",
            CombinedClass::KaehlerJ1 => "W0(J1)cap(W1+W2)(J2,J3)",
            CombinedClass::HProper => "H-proper",
            CombinedClass::OutsideH => "outside-H",
        }
    }
}

impl std::fmt::Display for CombinedClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

/// Parallelism flags: hyper-Kaehler means all `nabla J_alpha = 0`; the
/// isotropic variant only needs the square norms to vanish, which the
/// indefinite metric permits without parallelism.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HyperKaehlerChecks {
    pub is_hyperkaehler: bool,
    pub is_isotropic: bool,
}

pub fn hyperkaehler_checks(conn: &Connection, h: &HNStructure) -> HyperKaehlerChecks {
    let is_hyperkaehler = (0..3).all(|alpha| nabla_j(conn, h.j(alpha)).is_zero());
    let is_isotropic =
        (0..3).all(|alpha| square_norm_nabla_j(conn, h.j(alpha), h.metric()).is_zero());
    HyperKaehlerChecks {
        is_hyperkaehler,
        is_isotropic,
    }
}

/// Everything the pipeline computes for one algebra and structure.
#[derive(Clone, Debug)]
pub struct ClassificationReport {
    pub connection: Connection,
    pub structure_tensors: [StructureTensor; 3],
    pub lee_forms: [LeeForm; 3],
    pub norms: [Rational; 3],
    pub hermitian: HermitianClassFlags,
    /// Norden flags for J_2 and J_3, in that order.
    pub norden: [NordenClassFlags; 2],
    pub combined: CombinedClass,
    pub tita_j: bool,
    pub d_theta1_j1_zero: bool,
    pub is_hyperkaehler: bool,
    pub is_isotropic_hyperkaehler: bool,
    pub abelian_structure: bool,
    pub integrable: bool,
    pub nijenhuis_witness: Option<(usize, usize, usize, Vector4)>,
    pub derived_dim: usize,
    pub derived_abelian: bool,
    pub center_dim: usize,
}

/// A structure that fails its preconditions cannot be classified.
#[derive(Debug, Clone, thiserror::Error)]
pub enum ClassifyError {
    #[error("algebra is not a Lie algebra: {0:?}")]
    InvalidAlgebra(ValidationResult),
    #[error("structure triple fails the quaternionic identities: {0:?}")]
    NotQuaternionic(CheckResult),
    #[error("metric is not compatible with the structure triple: {0:?}")]
    Incompatible(CheckResult),
}

/// Runs the full pipeline: validation, compatibility, connection, structure
/// tensors, Lee forms, flags, and the combined label.
pub fn classify(alg: &LieAlgebra, h: &HNStructure) -> Result<ClassificationReport, ClassifyError> {
    let validation = alg.validate();
    if !validation.is_valid() {
        return Err(ClassifyError::InvalidAlgebra(validation));
    }
    let quaternionic = check_quaternionic(h.triple());
    if !quaternionic.passed() {
        return Err(ClassifyError::NotQuaternionic(quaternionic));
    }
    let compatibility = check_compatibility(h);
    if !compatibility.passed() {
        return Err(ClassifyError::Incompatible(compatibility));
    }

    let g = h.metric();
    let connection = levi_civita(alg, g);
    let structure_tensors: [StructureTensor; 3] =
        std::array::from_fn(|alpha| structure_tensor(&connection, h.j(alpha), g, alpha));
    let lee_forms: [LeeForm; 3] = std::array::from_fn(|alpha| lee_form(&structure_tensors[alpha], g));
    let norms: [Rational; 3] =
        std::array::from_fn(|alpha| square_norm_nabla_j(&connection, h.j(alpha), g));

    let hermitian = classify_hermitian(&structure_tensors[0], &lee_forms[0], g, h.j(0));
    let norden: [NordenClassFlags; 2] = std::array::from_fn(|idx| {
        let alpha = idx + 1;
        classify_norden(&structure_tensors[alpha], &lee_forms[alpha], g, h.j(alpha))
    });

    let tita_j = check_tita_j(&lee_forms, h);
    let theta1_j1 = compose_form_with_j(&lee_forms[0].theta, h.j(0));
    let d_theta1_j1_zero = exterior_derivative_1form(&theta1_j1, alg).is_zero();

    let combined = combined_label(
        &hermitian,
        &norden,
        tita_j,
        d_theta1_j1_zero,
        structure_tensors.iter().all(|f| f.f.is_zero()),
    );

    let hk = hyperkaehler_checks(&connection, h);
    let integrability = is_hypercomplex(alg, h);
    let derived = derived_algebra(alg);

    Ok(ClassificationReport {
        connection,
        structure_tensors,
        lee_forms,
        norms,
        hermitian,
        norden,
        combined,
        tita_j,
        d_theta1_j1_zero,
        is_hyperkaehler: hk.is_hyperkaehler,
        is_isotropic_hyperkaehler: hk.is_isotropic,
        abelian_structure: is_abelian_structure(alg, h),
        integrable: integrability.integrable,
        nijenhuis_witness: integrability.witness,
        derived_dim: derived.subalgebra.dimension(),
        derived_abelian: derived.is_abelian,
        center_dim: center(alg).dimension(),
    })
}

/// Most-specific-first label resolution.
fn combined_label(
    hermitian: &HermitianClassFlags,
    norden: &[NordenClassFlags; 2],
    tita_j: bool,
    d_theta1_j1_zero: bool,
    all_f_zero: bool,
) -> CombinedClass {
    let both_w1 = norden[0].is_w1 && norden[1].is_w1;
    let both_w1_plus_w2 = norden[0].is_w1_plus_w2 && norden[1].is_w1_plus_w2;
    if all_f_zero {
        CombinedClass::K
    } else if tita_j && hermitian.is_w4 && both_w1 && d_theta1_j1_zero {
        CombinedClass::WZero
    } else if tita_j && hermitian.is_w4 && both_w1 {
        CombinedClass::W
    } else if hermitian.is_w0 && both_w1_plus_w2 {
        CombinedClass::KaehlerJ1
    } else if hermitian.is_w4 && both_w1_plus_w2 {
        CombinedClass::HProper
    } else {
        CombinedClass::OutsideH
    }
}
