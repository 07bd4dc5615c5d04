//! Levi-Civita connection of a left-invariant metric and the derived
//! differential objects: nabla J, the structure tensors F_alpha, Lee forms,
//! square norms, curvature, and exterior derivatives of invariant 1-forms.

use std::array;

use crate::exact::{BilinearMap, Covector, Matrix4, Rational, Tensor3, Vector4};
use crate::hnstruct::Metric;
use crate::liealg::LieAlgebra;

const DIM: usize = 4;

/// Levi-Civita connection coefficients in the fixed basis: entry `(i, j, k)`
/// is the k-component of `nabla_{e_i} e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Connection {
    gamma: Tensor3,
}

impl Connection {
    pub fn coefficients(&self) -> &Tensor3 {
        &self.gamma
    }

    /// `nabla_{e_i} e_j`.
    pub fn nabla(&self, i: usize, j: usize) -> Vector4 {
        let mut v = Vector4::zero();
        for k in 0..DIM {
            v[k] = self.gamma.get(i, j, k).clone();
        }
        v
    }

    /// `nabla_{e_i} v` for a constant-coefficient vector `v`.
    pub fn nabla_vector(&self, i: usize, v: &Vector4) -> Vector4 {
        let mut out = Vector4::zero();
        for j in 0..DIM {
            if !v[j].is_zero() {
                out = &out + &self.nabla(i, j).scale(&v[j]);
            }
        }
        out
    }

    /// `nabla_x v`, bilinear in both arguments.
    pub fn nabla_direction(&self, x: &Vector4, v: &Vector4) -> Vector4 {
        let mut out = Vector4::zero();
        for i in 0..DIM {
            if !x[i].is_zero() {
                out = &out + &self.nabla_vector(i, v).scale(&x[i]);
            }
        }
        out
    }
}

/// Levi-Civita connection of a left-invariant metric.
///
/// For left-invariant fields the metric coefficients are constant, so the
/// Koszul formula loses all derivative terms and reduces to
/// `2 g(nabla_x y, z) = g([x,y], z) - g([y,z], x) + g([z,x], y)`,
/// solved exactly with the inverse metric. The result is torsion-free and
/// metric-compatible by construction; nondegeneracy is guaranteed by
/// [`Metric`] itself.
pub fn levi_civita(alg: &LieAlgebra, g: &Metric) -> Connection {
    let mut gamma = Tensor3::zero();
    let half = Rational::new(1, 2).expect("2 != 0");
    for i in 0..DIM {
        let ei = Vector4::basis(i);
        for j in 0..DIM {
            let ej = Vector4::basis(j);
            let mut rhs = Covector::zero();
            for k in 0..DIM {
                let ek = Vector4::basis(k);
                let value = &(&g.eval(&alg.bracket(&ei, &ej), &ek)
                    - &g.eval(&alg.bracket(&ej, &ek), &ei))
                    + &g.eval(&alg.bracket(&ek, &ei), &ej);
                rhs[k] = &half * &value;
            }
            let nabla_ij = g.raise(&rhs);
            for k in 0..DIM {
                gamma.set(i, j, k, nabla_ij[k].clone());
            }
        }
    }
    Connection { gamma }
}

/// `(nabla_{e_i} J) e_j = nabla_{e_i}(J e_j) - J nabla_{e_i} e_j` on all
/// basis pairs, for a left-invariant endomorphism `J`.
pub fn nabla_j(conn: &Connection, j: &Matrix4) -> BilinearMap {
    BilinearMap::from_fn(|a, b| {
        let jb = j.apply(&Vector4::basis(b));
        &conn.nabla_vector(a, &jb) - &j.apply(&conn.nabla(a, b))
    })
}

/// The (0,3)-tensor `F(x, y, z) = g((nabla_x J) y, z)` for one structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureTensor {
    /// 0-based structure index.
    pub alpha: usize,
    pub f: Tensor3,
}

impl StructureTensor {
    /// Evaluation on arbitrary vectors by trilinear extension.
    pub fn apply(&self, x: &Vector4, y: &Vector4, z: &Vector4) -> Rational {
        let mut out = Rational::zero();
        for i in 0..DIM {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..DIM {
                if y[j].is_zero() {
                    continue;
                }
                let xy = &x[i] * &y[j];
                for k in 0..DIM {
                    if !z[k].is_zero() {
                        let term = &(&xy * &z[k]) * self.f.get(i, j, k);
                        out += &term;
                    }
                }
            }
        }
        out
    }
}

/// All 64 components of `F_alpha` from the connection, the endomorphism and
/// the metric.
pub fn structure_tensor(conn: &Connection, j: &Matrix4, g: &Metric, alpha: usize) -> StructureTensor {
    let nj = nabla_j(conn, j);
    let mut f = Tensor3::zero();
    for a in 0..DIM {
        for b in 0..DIM {
            let v = nj.get(a, b);
            for c in 0..DIM {
                f.set(a, b, c, g.eval(v, &Vector4::basis(c)));
            }
        }
    }
    StructureTensor { alpha, f }
}

/// The Lee form `theta(z) = g^{ij} F(e_i, e_j, z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeeForm {
    /// 0-based structure index.
    pub alpha: usize,
    pub theta: Covector,
}

pub fn lee_form(f: &StructureTensor, g: &Metric) -> LeeForm {
    let mut theta = Covector::zero();
    for k in 0..DIM {
        let mut sum = Rational::zero();
        for i in 0..DIM {
            for j in 0..DIM {
                let ginv = g.inverse().get(i, j);
                if !ginv.is_zero() {
                    let term = ginv * f.f.get(i, j, k);
                    sum += &term;
                }
            }
        }
        theta[k] = sum;
    }
    LeeForm { alpha: f.alpha, theta }
}

/// The invariant square norm
/// `||nabla J||^2 = g^{ij} g^{kl} g((nabla_i J) e_k, (nabla_j J) e_l)`,
/// computed by contracting the lowered tensor F with three inverse metrics.
/// It can be negative or zero for nonparallel J since the metric is
/// indefinite.
pub fn square_norm_nabla_j(conn: &Connection, j: &Matrix4, g: &Metric) -> Rational {
    let f = structure_tensor(conn, j, g, 0).f;
    let ginv = g.inverse();
    let mut total = Rational::zero();
    for i in 0..DIM {
        for jj in 0..DIM {
            let gij = ginv.get(i, jj);
            if gij.is_zero() {
                continue;
            }
            for k in 0..DIM {
                for l in 0..DIM {
                    let gkl = ginv.get(k, l);
                    if gkl.is_zero() {
                        continue;
                    }
                    for m in 0..DIM {
                        for n in 0..DIM {
                            let gmn = ginv.get(m, n);
                            if gmn.is_zero() {
                                continue;
                            }
                            let term = &(&(gij * gkl) * gmn) * &(f.get(i, k, m) * f.get(jj, l, n));
                            total += &term;
                        }
                    }
                }
            }
        }
    }
    total
}

/// The curvature operators `R(e_i, e_j)` as matrices whose k-th column is
/// `R(e_i, e_j) e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurvatureTensor {
    operators: [[Matrix4; 4]; 4],
}

impl CurvatureTensor {
    /// The operator `R(e_i, e_j)`.
    pub fn operator(&self, i: usize, j: usize) -> &Matrix4 {
        &self.operators[i][j]
    }

    /// `R(e_i, e_j) e_k`.
    pub fn apply(&self, i: usize, j: usize, k: usize) -> Vector4 {
        self.operators[i][j].column(k)
    }

    /// Flat iff every operator vanishes.
    pub fn is_zero(&self) -> bool {
        self.operators.iter().flatten().all(Matrix4::is_zero)
    }
}

/// Curvature with the convention
/// `R(x, y) z = nabla_x nabla_y z - nabla_y nabla_x z - nabla_{[x,y]} z`.
pub fn curvature(conn: &Connection, alg: &LieAlgebra) -> CurvatureTensor {
    let operators = array::from_fn(|i| {
        array::from_fn(|j| {
            let bracket = alg.bracket_basis(i, j);
            let columns = array::from_fn(|k| {
                let a = conn.nabla_vector(i, &conn.nabla(j, k));
                let b = conn.nabla_vector(j, &conn.nabla(i, k));
                let c = conn.nabla_direction(&bracket, &Vector4::basis(k));
                &(&a - &b) - &c
            });
            Matrix4::from_columns(columns)
        })
    });
    CurvatureTensor { operators }
}

/// An alternating 2-form stored by its values on basis pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoForm {
    pub matrix: Matrix4,
}

impl TwoForm {
    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }
}

/// Exterior derivative of a left-invariant 1-form:
/// `d eta (x, y) = -eta([x, y])`, the only term that survives invariance.
pub fn exterior_derivative_1form(eta: &Covector, alg: &LieAlgebra) -> TwoForm {
    let mut matrix = Matrix4::zero();
    for i in 0..DIM {
        for j in 0..DIM {
            matrix.set(i, j, -eta.apply(&alg.bracket_basis(i, j)));
        }
    }
    TwoForm { matrix }
}

/// `(eta o J)(x) = eta(J x)`.
pub fn compose_form_with_j(eta: &Covector, j: &Matrix4) -> Covector {
    let mut out = Covector::zero();
    for i in 0..DIM {
        out[i] = eta.apply(&j.apply(&Vector4::basis(i)));
    }
    out
}
