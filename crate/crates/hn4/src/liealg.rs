//! Lie algebra data model: structure constants, bracket evaluation, and the
//! structural invariants (validation, derived algebra, center).

use std::fmt;

use crate::exact::{Rational, Tensor3, Vector4};

const DIM: usize = 4;

/// A 4-dimensional real Lie algebra given by structure constants
/// `c^k_{ij}` with `[e_i, e_j] = sum_k c^k_{ij} e_k`.
///
/// Construction is permissive; [`LieAlgebra::validate`] reports antisymmetry
/// and Jacobi violations instead of failing fast, so user-authored input gets
/// complete diagnostics.
#[derive(Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    constants: Tensor3,
}

/// One bracket `[e_i, e_j]` given as a list of `(coefficient, k)` terms,
/// all indices 0-based with `i < j`.
pub type BracketSpec = ((usize, usize), Vec<(Rational, usize)>);

impl LieAlgebra {
    pub fn from_structure_constants(constants: Tensor3) -> Self {
        LieAlgebra { constants }
    }

    /// Builds an algebra from `i < j` brackets, filling in the antisymmetric
    /// counterparts.
    pub fn from_brackets(brackets: &[BracketSpec]) -> Self {
        let mut constants = Tensor3::zero();
        for ((i, j), terms) in brackets {
            assert!(i < j && *j < DIM, "bracket indices must satisfy i < j < 4");
            for (coeff, k) in terms {
                let prev = constants.get(*i, *j, *k) + coeff;
                constants.set(*j, *i, *k, -&prev);
                constants.set(*i, *j, *k, prev);
            }
        }
        LieAlgebra { constants }
    }

    /// The algebra with all brackets zero.
    pub fn abelian() -> Self {
        LieAlgebra { constants: Tensor3::zero() }
    }

    pub fn structure_constants(&self) -> &Tensor3 {
        &self.constants
    }

    /// `[e_i, e_j]` for basis indices.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vector4 {
        let mut v = Vector4::zero();
        for k in 0..DIM {
            v[k] = self.constants.get(i, j, k).clone();
        }
        v
    }

    /// `[x, y]` by bilinear extension of the structure constants.
    pub fn bracket(&self, x: &Vector4, y: &Vector4) -> Vector4 {
        let mut out = Vector4::zero();
        for i in 0..DIM {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..DIM {
                if y[j].is_zero() {
                    continue;
                }
                let scale = &x[i] * &y[j];
                for k in 0..DIM {
                    let c = self.constants.get(i, j, k);
                    if !c.is_zero() {
                        let d = &scale * c;
                        out[k] += &d;
                    }
                }
            }
        }
        out
    }

    /// Checks antisymmetry of the structure constants and the Jacobi identity
    /// on all basis triples, reporting every violation.
    pub fn validate(&self) -> ValidationResult {
        let mut antisymmetry_violations = Vec::new();
        for i in 0..DIM {
            for j in i..DIM {
                for k in 0..DIM {
                    if !(self.constants.get(i, j, k) + self.constants.get(j, i, k)).is_zero() {
                        antisymmetry_violations.push((i, j, k));
                    }
                }
            }
        }
        let mut jacobi_violations = Vec::new();
        for i in 0..DIM {
            for j in i + 1..DIM {
                for k in j + 1..DIM {
                    let (x, y, z) = (Vector4::basis(i), Vector4::basis(j), Vector4::basis(k));
                    let cyclic = &(&self.bracket(&self.bracket(&x, &y), &z)
                        + &self.bracket(&self.bracket(&y, &z), &x))
                        + &self.bracket(&self.bracket(&z, &x), &y);
                    if !cyclic.is_zero() {
                        jacobi_violations.push(JacobiViolation {
                            triple: (i, j, k),
                            residual: cyclic,
                        });
                    }
                }
            }
        }
        ValidationResult {
            antisymmetry_violations,
            jacobi_violations,
        }
    }
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut brackets = Vec::new();
        for i in 0..DIM {
            for j in i + 1..DIM {
                let v = self.bracket_basis(i, j);
                if !v.is_zero() {
                    brackets.push(format!("[e{},e{}] = {:?}", i + 1, j + 1, v));
                }
            }
        }
        write!(f, "LieAlgebra{{{}}}", brackets.join(", "))
    }
}

/// Outcome of [`LieAlgebra::validate`]; empty lists mean a valid algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationResult {
    /// Triples `(i, j, k)` with `c^k_{ij} != -c^k_{ji}`, 0-based.
    pub antisymmetry_violations: Vec<(usize, usize, usize)>,
    pub jacobi_violations: Vec<JacobiViolation>,
}

impl ValidationResult {
    pub fn is_valid(&self) -> bool {
        self.antisymmetry_violations.is_empty() && self.jacobi_violations.is_empty()
    }
}

/// A basis triple on which the cyclic Jacobi sum does not vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiViolation {
    /// 0-based triple `(i, j, k)` with `i < j < k`.
    pub triple: (usize, usize, usize),
    /// The nonzero cyclic sum `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]`.
    pub residual: Vector4,
}

/// A linear subspace given by an echelonized basis.
///
/// The basis is the reduced row echelon form of the generating set, so two
/// generating sets spanning the same subspace produce identical bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subalgebra {
    basis: Vec<Vector4>,
}

impl Subalgebra {
    /// Echelonizes a spanning set by exact elimination with fixed pivot order.
    pub fn span(generators: &[Vector4]) -> Self {
        let mut rows: Vec<Vector4> = generators.to_vec();
        let rank = reduced_row_echelon(&mut rows);
        rows.truncate(rank);
        Subalgebra { basis: rows }
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector4] {
        &self.basis
    }

    /// Membership test by reducing `v` against the echelonized basis.
    pub fn contains(&self, v: &Vector4) -> bool {
        let mut rows = self.basis.clone();
        rows.push(v.clone());
        let rank = reduced_row_echelon(&mut rows);
        rank == self.basis.len()
    }
}

/// In-place reduced row echelon form; returns the rank. Pivot order is
/// deterministic: columns left to right, first nonzero row.
fn reduced_row_echelon(rows: &mut [Vector4]) -> usize {
    let mut rank = 0;
    for col in 0..DIM {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].inverse().expect("pivot is nonzero");
        rows[rank] = rows[rank].scale(&inv);
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                rows[r] = &rows[r] - &rows[rank].scale(&factor);
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// The derived algebra `[g, g]` together with whether it is Abelian.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedAlgebra {
    pub subalgebra: Subalgebra,
    pub is_abelian: bool,
}

/// Span of all basis brackets, echelonized.
pub fn derived_algebra(alg: &LieAlgebra) -> DerivedAlgebra {
    let mut generators = Vec::new();
    for i in 0..DIM {
        for j in i + 1..DIM {
            generators.push(alg.bracket_basis(i, j));
        }
    }
    let subalgebra = Subalgebra::span(&generators);
    let is_abelian = is_abelian_subspace(alg, &subalgebra);
    DerivedAlgebra { subalgebra, is_abelian }
}

/// Whether all brackets between members of the subspace vanish.
pub fn is_abelian_subspace(alg: &LieAlgebra, sub: &Subalgebra) -> bool {
    sub.basis()
        .iter()
        .all(|x| sub.basis().iter().all(|y| alg.bracket(x, y).is_zero()))
}

/// The center: all `x` with `[x, e_i] = 0` for every basis vector, computed
/// as an exact kernel.
pub fn center(alg: &LieAlgebra) -> Subalgebra {
    // rows of the constraint matrix A x = 0: entry over unknowns x^i is
    // the k-component of [e_i, e_j], for each (j, k)
    let mut rows = Vec::with_capacity(DIM * DIM);
    for j in 0..DIM {
        for k in 0..DIM {
            let mut row = Vector4::zero();
            for i in 0..DIM {
                row[i] = alg.structure_constants().get(i, j, k).clone();
            }
            rows.push(row);
        }
    }
    let rank = reduced_row_echelon(&mut rows);
    rows.truncate(rank);
    // pivot columns of the echelonized constraints
    let mut pivots = Vec::new();
    for row in &rows {
        let col = (0..DIM).find(|&c| !row[c].is_zero()).expect("nonzero row");
        pivots.push(col);
    }
    // one kernel basis vector per free column
    let mut kernel = Vec::new();
    for free in (0..DIM).filter(|c| !pivots.contains(c)) {
        let mut v = Vector4::zero();
        v[free] = Rational::one();
        for (row, &pivot_col) in rows.iter().zip(&pivots) {
            v[pivot_col] = -&row[free];
        }
        kernel.push(v);
    }
    Subalgebra::span(&kernel)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn hc4a() -> LieAlgebra {
        catalog::get_case("hc4a").unwrap().algebra
    }

    #[test]
    fn bracket_of_basis_vectors() {
        let alg = hc4a();
        assert_eq!(alg.bracket_basis(0, 1), Vector4::basis(1));
        assert_eq!(
            alg.bracket(&Vector4::basis(1), &Vector4::basis(0)),
            -&Vector4::basis(1)
        );
    }

    #[test]
    fn bracket_of_vector_with_itself_vanishes() {
        let alg = hc4a();
        let x = Vector4::new([r(1, 2), r(-3, 1), r(0, 1), r(5, 4)]);
        assert!(alg.bracket(&x, &x).is_zero());
    }

    #[test]
    fn bracket_is_bilinear() {
        let alg = catalog::get_case("hc5a").unwrap().algebra;
        let x = Vector4::from_integers([1, -2, 0, 3]);
        let y = Vector4::from_integers([0, 1, 4, -1]);
        let z = Vector4::from_integers([2, 0, -1, 1]);
        let a = r(3, 2);
        let lhs = alg.bracket(&(&x.scale(&a) + &y), &z);
        let rhs = &alg.bracket(&x, &z).scale(&a) + &alg.bracket(&y, &z);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn catalog_cases_validate() {
        for (name, _) in catalog::list_cases() {
            let alg = catalog::get_case(name).unwrap().algebra;
            let result = alg.validate();
            assert!(result.is_valid(), "{name}: {result:?}");
        }
        assert!(LieAlgebra::abelian().validate().is_valid());
    }

    #[test]
    fn jacobi_violation_is_reported_with_residual() {
        // [e1,e2]=e3, [e1,e3]=e1: cyclic sum on (e1,e2,e3) equals -e3
        let alg = LieAlgebra::from_brackets(&[
            ((0, 1), vec![(Rational::one(), 2)]),
            ((0, 2), vec![(Rational::one(), 0)]),
        ]);
        let result = alg.validate();
        assert!(result.antisymmetry_violations.is_empty());
        assert_eq!(result.jacobi_violations.len(), 1);
        let violation = &result.jacobi_violations[0];
        assert_eq!(violation.triple, (0, 1, 2));
        assert_eq!(violation.residual, -&Vector4::basis(2));
    }

    #[test]
    fn antisymmetry_violation_is_reported() {
        let mut constants = Tensor3::zero();
        constants.set(0, 1, 2, Rational::one());
        // missing the (1,0,2) = -1 counterpart
        let alg = LieAlgebra::from_structure_constants(constants);
        let result = alg.validate();
        assert_eq!(result.antisymmetry_violations, vec![(0, 1, 2)]);
    }

    #[test]
    fn derived_algebra_dimensions() {
        let cases = [
            ("hc1", 0, true),
            ("hc2a", 3, false),
            ("hc3a", 2, true),
            ("hc3b", 2, true),
            ("hc4a", 3, true),
            ("hc4b", 3, true),
            ("hc5a", 3, false),
            ("hc5b", 3, false),
        ];
        for (name, dim, abelian) in cases {
            let alg = catalog::get_case(name).unwrap().algebra;
            let derived = derived_algebra(&alg);
            assert_eq!(derived.subalgebra.dimension(), dim, "{name}");
            assert_eq!(derived.is_abelian, abelian, "{name}");
        }
    }

    #[test]
    fn hc5a_derived_algebra_is_heisenberg() {
        // second derived algebra is 1-dimensional and central in g'
        let alg = catalog::get_case("hc5a").unwrap().algebra;
        let derived = derived_algebra(&alg).subalgebra;
        let mut inner = Vec::new();
        for x in derived.basis() {
            for y in derived.basis() {
                inner.push(alg.bracket(x, y));
            }
        }
        let second = Subalgebra::span(&inner);
        assert_eq!(second.dimension(), 1);
        for x in second.basis() {
            for y in derived.basis() {
                assert!(alg.bracket(x, y).is_zero());
            }
        }
    }

    #[test]
    fn center_dimensions() {
        assert_eq!(center(&LieAlgebra::abelian()).dimension(), 4);
        let hc2a = catalog::get_case("hc2a").unwrap().algebra;
        let z = center(&hc2a);
        assert_eq!(z.dimension(), 1);
        assert!(z.contains(&Vector4::basis(0)));
        assert_eq!(center(&hc4a()).dimension(), 0);
    }

    #[test]
    fn span_is_scale_invariant() {
        let v = Vector4::from_integers([2, 4, 0, -6]);
        let w = Vector4::from_integers([0, 1, 1, 1]);
        let a = Subalgebra::span(&[v.clone(), w.clone()]);
        let b = Subalgebra::span(&[v.scale(&r(-7, 3)), w.scale(&r(1, 5))]);
        assert_eq!(a, b);
    }
}
