//! Machine- and human-readable report forms built from one classification.
//!
//! The JSON form has a fixed key order and serializes every rational as an
//! exact `p/q` string; no value in a report is ever a float.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::classify::{ClassificationReport, CombinedClass, HermitianClassFlags, NordenClassFlags};
use crate::exact::{Rational, Tensor3, Vector4};
use crate::liealg::{JacobiViolation, ValidationResult};
use crate::oracle::OracleReport;

const DIM: usize = 4;

/// Validation block of a report; all-empty lists on an accepted input.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ValidationBlock {
    pub ok: bool,
    /// 1-based `[i, j, k]` with `c^k_{ij} != -c^k_{ji}`.
    pub antisymmetry_violations: Vec<[usize; 3]>,
    pub jacobi_violations: Vec<JacobiBlock>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct JacobiBlock {
    /// 1-based triple.
    pub triple: [usize; 3],
    pub residual: [Rational; 4],
}

impl ValidationBlock {
    pub fn from_result(result: &ValidationResult) -> Self {
        ValidationBlock {
            ok: result.is_valid(),
            antisymmetry_violations: result
                .antisymmetry_violations
                .iter()
                .map(|&(i, j, k)| [i + 1, j + 1, k + 1])
                .collect(),
            jacobi_violations: result
                .jacobi_violations
                .iter()
                .map(|JacobiViolation { triple, residual }| JacobiBlock {
                    triple: [triple.0 + 1, triple.1 + 1, triple.2 + 1],
                    residual: residual.components().clone(),
                })
                .collect(),
        }
    }
}

/// Quaternionic/compatibility check block.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckBlock {
    pub ok: bool,
    pub failures: Vec<String>,
}

/// One nonzero connection row `nabla_{e_i} e_j`, 1-based.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GammaEntry {
    pub i: usize,
    pub j: usize,
    pub value: [Rational; 4],
}

/// One nonzero `(F_alpha)_{ijk}`, 1-based.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub value: Rational,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FTables {
    #[serde(rename = "F1")]
    pub f1: Vec<FEntry>,
    #[serde(rename = "F2")]
    pub f2: Vec<FEntry>,
    #[serde(rename = "F3")]
    pub f3: Vec<FEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LeeBlock {
    pub theta1: [Rational; 4],
    pub theta2: [Rational; 4],
    pub theta3: [Rational; 4],
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct NormsBlock {
    pub nabla_j1_sq: Rational,
    pub nabla_j2_sq: Rational,
    pub nabla_j3_sq: Rational,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ClassFlags {
    #[serde(rename = "J1")]
    pub j1: HermitianClassFlags,
    #[serde(rename = "J2")]
    pub j2: NordenClassFlags,
    #[serde(rename = "J3")]
    pub j3: NordenClassFlags,
}

/// The full report. Field order is the serialization order.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub validation: ValidationBlock,
    pub quaternionic: CheckBlock,
    pub compatibility: CheckBlock,
    pub integrable: bool,
    pub abelian: bool,
    pub gamma_table: Vec<GammaEntry>,
    #[serde(rename = "F_tables")]
    pub f_tables: FTables,
    pub lee_forms: LeeBlock,
    pub norms: NormsBlock,
    pub class_flags: ClassFlags,
    pub combined_label: CombinedClass,
    #[serde(rename = "titaJ")]
    pub tita_j: bool,
    #[serde(rename = "d_theta1J1_zero")]
    pub d_theta1_j1_zero: bool,
    pub is_hyperkaehler: bool,
    pub is_isotropic_hyperkaehler: bool,
    pub derived_algebra_dim: usize,
    pub derived_abelian: bool,
    pub center_dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleReport>,
}

fn gamma_entries(gamma: &Tensor3) -> Vec<GammaEntry> {
    let mut out = Vec::new();
    for i in 0..DIM {
        for j in 0..DIM {
            let mut value: [Rational; 4] = std::array::from_fn(|_| Rational::zero());
            let mut nonzero = false;
            for (k, slot) in value.iter_mut().enumerate() {
                *slot = gamma.get(i, j, k).clone();
                nonzero |= !slot.is_zero();
            }
            if nonzero {
                out.push(GammaEntry { i: i + 1, j: j + 1, value });
            }
        }
    }
    out
}

fn f_entries(f: &Tensor3) -> Vec<FEntry> {
    f.nonzero_entries()
        .into_iter()
        .map(|((i, j, k), value)| FEntry {
            i: i + 1,
            j: j + 1,
            k: k + 1,
            value,
        })
        .collect()
}

impl Report {
    /// Builds the report of a successful classification.
    pub fn from_classification(
        name: Option<&str>,
        rep: &ClassificationReport,
        oracle: Option<OracleReport>,
    ) -> Self {
        let theta = |alpha: usize| rep.lee_forms[alpha].theta.components().clone();
        Report {
            name: name.map(str::to_owned),
            validation: ValidationBlock {
                ok: true,
                antisymmetry_violations: Vec::new(),
                jacobi_violations: Vec::new(),
            },
            quaternionic: CheckBlock { ok: true, failures: Vec::new() },
            compatibility: CheckBlock { ok: true, failures: Vec::new() },
            integrable: rep.integrable,
            abelian: rep.abelian_structure,
            gamma_table: gamma_entries(rep.connection.coefficients()),
            f_tables: FTables {
                f1: f_entries(&rep.structure_tensors[0].f),
                f2: f_entries(&rep.structure_tensors[1].f),
                f3: f_entries(&rep.structure_tensors[2].f),
            },
            lee_forms: LeeBlock {
                theta1: theta(0),
                theta2: theta(1),
                theta3: theta(2),
            },
            norms: NormsBlock {
                nabla_j1_sq: rep.norms[0].clone(),
                nabla_j2_sq: rep.norms[1].clone(),
                nabla_j3_sq: rep.norms[2].clone(),
            },
            class_flags: ClassFlags {
                j1: rep.hermitian,
                j2: rep.norden[0],
                j3: rep.norden[1],
            },
            combined_label: rep.combined,
            tita_j: rep.tita_j,
            d_theta1_j1_zero: rep.d_theta1_j1_zero,
            is_hyperkaehler: rep.is_hyperkaehler,
            is_isotropic_hyperkaehler: rep.is_isotropic_hyperkaehler,
            derived_algebra_dim: rep.derived_dim,
            derived_abelian: rep.derived_abelian,
            center_dim: rep.center_dim,
            oracle,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    /// Human-readable form of the same data.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        if let Some(name) = &self.name {
            let _ = writeln!(out, "case: {name}");
        }
        let yesno = |b: bool| if b { "yes" } else { "no" };
        let _ = writeln!(out, "validation: ok");
        let _ = writeln!(out, "quaternionic identities: ok");
        let _ = writeln!(out, "metric compatibility: ok");
        let _ = writeln!(out, "integrable (all Nijenhuis tensors vanish): {}", yesno(self.integrable));
        let _ = writeln!(out, "abelian structure: {}", yesno(self.abelian));
        let _ = writeln!(
            out,
            "derived algebra: dim {}{}; center: dim {}",
            self.derived_algebra_dim,
            if self.derived_abelian { " (abelian)" } else { "" },
            self.center_dim
        );
        if self.gamma_table.is_empty() {
            let _ = writeln!(out, "connection: all nabla_(e_i) e_j = 0");
        } else {
            let _ = writeln!(out, "connection (nonzero rows):");
            for entry in &self.gamma_table {
                let _ = writeln!(
                    out,
                    "  nabla_(e_{}) e_{} = {}",
                    entry.i,
                    entry.j,
                    combination(&entry.value)
                );
            }
        }
        for (label, table) in [
            ("F_1", &self.f_tables.f1),
            ("F_2", &self.f_tables.f2),
            ("F_3", &self.f_tables.f3),
        ] {
            if table.is_empty() {
                let _ = writeln!(out, "{label}: 0");
            } else {
                let parts: Vec<String> = table
                    .iter()
                    .map(|e| format!("({label})_{}{}{} = {}", e.i, e.j, e.k, e.value))
                    .collect();
                let _ = writeln!(out, "{label} nonzero components:");
                for chunk in parts.chunks(4) {
                    let _ = writeln!(out, "  {}", chunk.join(", "));
                }
            }
        }
        for (label, theta) in [
            ("theta_1", &self.lee_forms.theta1),
            ("theta_2", &self.lee_forms.theta2),
            ("theta_3", &self.lee_forms.theta3),
        ] {
            let _ = writeln!(
                out,
                "{label} = ({}, {}, {}, {})",
                theta[0], theta[1], theta[2], theta[3]
            );
        }
        let _ = writeln!(
            out,
            "square norms: ||nabla J_1||^2 = {}, ||nabla J_2||^2 = {}, ||nabla J_3||^2 = {}",
            self.norms.nabla_j1_sq, self.norms.nabla_j2_sq, self.norms.nabla_j3_sq
        );
        let _ = writeln!(
            out,
            "J_1 flags: W0={} W2={} W4={}",
            yesno(self.class_flags.j1.is_w0),
            yesno(self.class_flags.j1.is_w2),
            yesno(self.class_flags.j1.is_w4)
        );
        for (label, flags) in [("J_2", &self.class_flags.j2), ("J_3", &self.class_flags.j3)] {
            let _ = writeln!(
                out,
                "{label} flags: W0={} W1={} W2={} W3={} W1+W2={}",
                yesno(flags.is_w0),
                yesno(flags.is_w1),
                yesno(flags.is_w2),
                yesno(flags.is_w3),
                yesno(flags.is_w1_plus_w2)
            );
        }
        let _ = writeln!(out, "combined class: {}", self.combined_label);
        let _ = writeln!(
            out,
            "theta compatibility (theta_2 o J_2 = theta_3 o J_3 = -2 theta_1 o J_1): {}",
            yesno(self.tita_j)
        );
        let _ = writeln!(out, "d(theta_1 o J_1) = 0: {}", yesno(self.d_theta1_j1_zero));
        let _ = writeln!(
            out,
            "hyperkaehler: {}; isotropic hyperkaehler: {}",
            yesno(self.is_hyperkaehler),
            yesno(self.is_isotropic_hyperkaehler)
        );
        if let Some(oracle) = &self.oracle {
            let passed = oracle.checks.iter().filter(|c| c.pass).count();
            let _ = writeln!(
                out,
                "oracle cross-checks: {}/{} pass",
                passed,
                oracle.checks.len()
            );
            for check in &oracle.checks {
                if !check.pass {
                    let _ = writeln!(
                        out,
                        "  FAILED {}: {}",
                        check.name,
                        check.detail.as_deref().unwrap_or("mismatch")
                    );
                }
            }
        }
        out
    }
}

/// Renders a component quadruple as a basis combination, e.g. `-3/2 e_4`.
fn combination(components: &[Rational; 4]) -> String {
    let v = Vector4::new(components.clone());
    if v.is_zero() {
        return "0".to_string();
    }
    let parts: Vec<String> = (0..DIM)
        .filter(|&k| !components[k].is_zero())
        .map(|k| {
            if components[k] == Rational::one() {
                format!("e_{}", k + 1)
            } else if components[k] == Rational::from_integer(-1) {
                format!("-e_{}", k + 1)
            } else {
                format!("{} e_{}", components[k], k + 1)
            }
        })
        .collect();
    parts.join(" + ")
}
