//! Brute-force cross-checks behind the CLI's `--oracle` flag.
//!
//! Each check recomputes a quantity along an independent route -- index-level
//! expansions over the raw structure constants, or term-by-term summations --
//! and compares it with the engine's result by exact equality.

use serde::{Deserialize, Serialize};

use crate::connection::{levi_civita, nabla_j, square_norm_nabla_j, Connection};
use crate::exact::{Rational, Vector4};
use crate::hnstruct::{nijenhuis, HNStructure};
use crate::liealg::LieAlgebra;

const DIM: usize = 4;

/// One cross-check outcome.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OracleCheck {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// All cross-check outcomes for one analysis.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OracleReport {
    pub ok: bool,
    pub checks: Vec<OracleCheck>,
}

/// Runs every cross-check for the given algebra and structure.
pub fn run_all(alg: &LieAlgebra, h: &HNStructure) -> OracleReport {
    let conn = levi_civita(alg, h.metric());
    let mut checks = vec![verify_koszul(alg, h, &conn)];
    for alpha in 0..3 {
        checks.push(verify_nijenhuis_expansion(alg, h, alpha));
        checks.push(verify_square_norm(h, &conn, alpha));
    }
    OracleReport {
        ok: checks.iter().all(|c| c.pass),
        checks,
    }
}

/// Substitutes the solved connection back into the defining relation
/// `2 g(nabla_{e_i} e_j, e_k) = g([e_i,e_j],e_k) - g([e_j,e_k],e_i) + g([e_k,e_i],e_j)`
/// on all 64 triples.
pub fn verify_koszul(alg: &LieAlgebra, h: &HNStructure, conn: &Connection) -> OracleCheck {
    let g = h.metric();
    let two = Rational::from_integer(2);
    let mut detail = None;
    'outer: for i in 0..DIM {
        for j in 0..DIM {
            for k in 0..DIM {
                let (ei, ej, ek) = (Vector4::basis(i), Vector4::basis(j), Vector4::basis(k));
                let lhs = &two * &g.eval(&conn.nabla(i, j), &ek);
                let rhs = &(&g.eval(&alg.bracket(&ei, &ej), &ek)
                    - &g.eval(&alg.bracket(&ej, &ek), &ei))
                    + &g.eval(&alg.bracket(&ek, &ei), &ej);
                if lhs != rhs {
                    detail = Some(format!(
                        "triple ({},{},{}): 2g(nabla,e) = {} but bracket side = {}",
                        i + 1,
                        j + 1,
                        k + 1,
                        lhs,
                        rhs
                    ));
                    break 'outer;
                }
            }
        }
    }
    OracleCheck {
        name: "koszul-defining-relation".into(),
        pass: detail.is_none(),
        detail,
    }
}

/// Re-expands the Nijenhuis tensor in index notation over the raw structure
/// constants,
/// `N^m_{ab} = J^i_a J^j_b c^m_{ij} - J^m_k J^i_a c^k_{ib} - J^m_k J^j_b c^k_{aj} - c^m_{ab}`,
/// and compares with the vector-level evaluation.
pub fn verify_nijenhuis_expansion(alg: &LieAlgebra, h: &HNStructure, alpha: usize) -> OracleCheck {
    let j = h.j(alpha);
    let c = alg.structure_constants();
    let reference = nijenhuis(alg, j);
    let mut detail = None;
    'outer: for a in 0..DIM {
        for b in 0..DIM {
            for m in 0..DIM {
                let mut value = -c.get(a, b, m).clone();
                for i in 0..DIM {
                    for jj in 0..DIM {
                        let term = &(j.get(i, a) * j.get(jj, b)) * c.get(i, jj, m);
                        value += &term;
                    }
                }
                for k in 0..DIM {
                    for i in 0..DIM {
                        let t1 = &(j.get(m, k) * j.get(i, a)) * c.get(i, b, k);
                        value -= &t1;
                        let t2 = &(j.get(m, k) * j.get(i, b)) * c.get(a, i, k);
                        value -= &t2;
                    }
                }
                if value != reference.get(a, b)[m] {
                    detail = Some(format!(
                        "N{}(e{},e{}) component {}: expansion {} vs evaluation {}",
                        alpha + 1,
                        a + 1,
                        b + 1,
                        m + 1,
                        value,
                        reference.get(a, b)[m]
                    ));
                    break 'outer;
                }
            }
        }
    }
    OracleCheck {
        name: format!("nijenhuis-index-expansion-J{}", alpha + 1),
        pass: detail.is_none(),
        detail,
    }
}

/// Recomputes `||nabla J||^2` as the plain 256-term quadruple sum
/// `g^{ij} g^{kl} g((nabla_i J) e_k, (nabla_j J) e_l)` over the nabla-J
/// vectors and compares with the tensor-contraction route.
pub fn verify_square_norm(h: &HNStructure, conn: &Connection, alpha: usize) -> OracleCheck {
    let g = h.metric();
    let nj = nabla_j(conn, h.j(alpha));
    let ginv = g.inverse();
    let mut total = Rational::zero();
    for i in 0..DIM {
        for j in 0..DIM {
            for k in 0..DIM {
                for l in 0..DIM {
                    let weight = ginv.get(i, j) * ginv.get(k, l);
                    if weight.is_zero() {
                        continue;
                    }
                    let term = &weight * &g.eval(nj.get(i, k), nj.get(j, l));
                    total += &term;
                }
            }
        }
    }
    let engine = square_norm_nabla_j(conn, h.j(alpha), g);
    let pass = total == engine;
    OracleCheck {
        name: format!("square-norm-brute-force-J{}", alpha + 1),
        pass,
        detail: (!pass).then(|| format!("quadruple sum {total} vs contraction {engine}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn all_checks_pass_on_catalog_cases() {
        let h = HNStructure::standard();
        for (name, _) in catalog::list_cases() {
            let alg = catalog::get_case(name).unwrap().algebra;
            let report = run_all(&alg, &h);
            assert!(report.ok, "{name}: {:?}", report.checks);
            assert_eq!(report.checks.len(), 7);
        }
    }

    #[test]
    fn checks_pass_on_a_non_integrable_algebra() {
        // oracle routes must agree even when tensors do not vanish
        let alg = LieAlgebra::from_brackets(&[((0, 1), vec![(Rational::one(), 2)])]);
        let h = HNStructure::standard();
        assert!(run_all(&alg, &h).ok);
    }
}
