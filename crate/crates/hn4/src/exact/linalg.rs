use std::array;
use std::fmt;
use std::ops::{Add, Index, IndexMut, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::{ExactError, Rational};

pub(crate) const DIM: usize = 4;

/// A vector in the fixed basis {e_1, ..., e_4}, 0-indexed in code.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vector4([Rational; 4]);

impl Vector4 {
    pub fn new(components: [Rational; 4]) -> Self {
        Vector4(components)
    }

    pub fn zero() -> Self {
        Vector4(array::from_fn(|_| Rational::zero()))
    }

    /// The basis vector e_{i+1}.
    pub fn basis(i: usize) -> Self {
        let mut v = Self::zero();
        v.0[i] = Rational::one();
        v
    }

    pub fn from_integers(components: [i64; 4]) -> Self {
        Vector4(components.map(Rational::from_integer))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Vector4(array::from_fn(|i| s * &self.0[i]))
    }

    pub fn components(&self) -> &[Rational; 4] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.0.iter()
    }
}

impl Index<usize> for Vector4 {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl IndexMut<usize> for Vector4 {
    fn index_mut(&mut self, i: usize) -> &mut Rational {
        &mut self.0[i]
    }
}

impl Add<&Vector4> for &Vector4 {
    type Output = Vector4;
    fn add(self, rhs: &Vector4) -> Vector4 {
        Vector4(array::from_fn(|i| &self.0[i] + &rhs.0[i]))
    }
}

impl Sub<&Vector4> for &Vector4 {
    type Output = Vector4;
    fn sub(self, rhs: &Vector4) -> Vector4 {
        Vector4(array::from_fn(|i| &self.0[i] - &rhs.0[i]))
    }
}

impl Neg for &Vector4 {
    type Output = Vector4;
    fn neg(self) -> Vector4 {
        Vector4(array::from_fn(|i| -&self.0[i]))
    }
}

impl fmt::Debug for Vector4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.0[0], self.0[1], self.0[2], self.0[3])
    }
}

impl fmt::Display for Vector4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A 1-form, stored by its components against the dual basis {e^1, ..., e^4}.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Covector([Rational; 4]);

impl Covector {
    pub fn new(components: [Rational; 4]) -> Self {
        Covector(components)
    }

    pub fn zero() -> Self {
        Covector(array::from_fn(|_| Rational::zero()))
    }

    pub fn from_integers(components: [i64; 4]) -> Self {
        Covector(components.map(Rational::from_integer))
    }

    /// Evaluates the form on a vector.
    pub fn apply(&self, v: &Vector4) -> Rational {
        (0..DIM).map(|i| &self.0[i] * &v[i]).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Covector(array::from_fn(|i| s * &self.0[i]))
    }

    pub fn components(&self) -> &[Rational; 4] {
        &self.0
    }
}

impl Index<usize> for Covector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl IndexMut<usize> for Covector {
    fn index_mut(&mut self, i: usize) -> &mut Rational {
        &mut self.0[i]
    }
}

impl fmt::Debug for Covector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}, {}]", self.0[0], self.0[1], self.0[2], self.0[3])
    }
}

/// A 4x4 matrix acting on [`Vector4`] by the usual matrix-vector product.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matrix4([[Rational; 4]; 4]);

impl Matrix4 {
    pub fn new(entries: [[Rational; 4]; 4]) -> Self {
        Matrix4(entries)
    }

    pub fn zero() -> Self {
        Matrix4(array::from_fn(|_| array::from_fn(|_| Rational::zero())))
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for i in 0..DIM {
            m.0[i][i] = Rational::one();
        }
        m
    }

    pub fn diagonal(entries: &[Rational; 4]) -> Self {
        let mut m = Self::zero();
        for i in 0..DIM {
            m.0[i][i] = entries[i].clone();
        }
        m
    }

    pub fn from_integers(entries: [[i64; 4]; 4]) -> Self {
        Matrix4(entries.map(|row| row.map(Rational::from_integer)))
    }

    /// Builds the matrix whose j-th column is the image of e_{j+1}.
    pub fn from_columns(columns: [Vector4; 4]) -> Self {
        Matrix4(array::from_fn(|i| array::from_fn(|j| columns[j][i].clone())))
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.0[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.0[i][j] = value;
    }

    pub fn column(&self, j: usize) -> Vector4 {
        Vector4(array::from_fn(|i| self.0[i][j].clone()))
    }

    pub fn apply(&self, v: &Vector4) -> Vector4 {
        Vector4(array::from_fn(|i| {
            (0..DIM).map(|j| &self.0[i][j] * &v[j]).sum()
        }))
    }

    /// Matrix product `self * other` (apply `other` first).
    pub fn compose(&self, other: &Matrix4) -> Matrix4 {
        Matrix4(array::from_fn(|i| {
            array::from_fn(|j| (0..DIM).map(|k| &self.0[i][k] * &other.0[k][j]).sum())
        }))
    }

    pub fn transpose(&self) -> Matrix4 {
        Matrix4(array::from_fn(|i| array::from_fn(|j| self.0[j][i].clone())))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().flatten().all(Rational::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..DIM).all(|i| (0..DIM).all(|j| self.0[i][j] == self.0[j][i]))
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..DIM).all(|i| (0..DIM).all(|j| self.0[i][j] == -&self.0[j][i]))
    }

    pub fn determinant(&self) -> Rational {
        // elimination without normalizing pivots
        let mut m = self.0.clone();
        let mut det = Rational::one();
        for col in 0..DIM {
            let Some(pivot) = (col..DIM).find(|&r| !m[r][col].is_zero()) else {
                return Rational::zero();
            };
            if pivot != col {
                m.swap(pivot, col);
                det = -det;
            }
            det *= &m[col][col];
            let inv = m[col][col].inverse().expect("pivot is nonzero");
            for r in col + 1..DIM {
                if m[r][col].is_zero() {
                    continue;
                }
                let factor = &m[r][col] * &inv;
                for c in col..DIM {
                    let delta = &factor * &m[col][c];
                    m[r][c] -= &delta;
                }
            }
        }
        det
    }

    /// Exact inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Matrix4, ExactError> {
        let mut m = self.0.clone();
        let mut inv = Matrix4::identity().0;
        for col in 0..DIM {
            let pivot = (col..DIM)
                .find(|&r| !m[r][col].is_zero())
                .ok_or(ExactError::SingularMatrix)?;
            m.swap(pivot, col);
            inv.swap(pivot, col);
            let scale = m[col][col].inverse().expect("pivot is nonzero");
            for c in 0..DIM {
                m[col][c] *= &scale;
                inv[col][c] *= &scale;
            }
            for r in 0..DIM {
                if r == col || m[r][col].is_zero() {
                    continue;
                }
                let factor = m[r][col].clone();
                for c in 0..DIM {
                    let dm = &factor * &m[col][c];
                    let di = &factor * &inv[col][c];
                    m[r][c] -= &dm;
                    inv[r][c] -= &di;
                }
            }
        }
        Ok(Matrix4(inv))
    }
}

impl Index<(usize, usize)> for Matrix4 {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.0[i][j]
    }
}

impl Add<&Matrix4> for &Matrix4 {
    type Output = Matrix4;
    fn add(self, rhs: &Matrix4) -> Matrix4 {
        Matrix4(array::from_fn(|i| array::from_fn(|j| &self.0[i][j] + &rhs.0[i][j])))
    }
}

impl Sub<&Matrix4> for &Matrix4 {
    type Output = Matrix4;
    fn sub(self, rhs: &Matrix4) -> Matrix4 {
        Matrix4(array::from_fn(|i| array::from_fn(|j| &self.0[i][j] - &rhs.0[i][j])))
    }
}

impl Neg for &Matrix4 {
    type Output = Matrix4;
    fn neg(self) -> Matrix4 {
        Matrix4(array::from_fn(|i| array::from_fn(|j| -&self.0[i][j])))
    }
}

impl fmt::Debug for Matrix4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for row in &self.0 {
            writeln!(f, "  [{}, {}, {}, {}]", row[0], row[1], row[2], row[3])?;
        }
        write!(f, "]")
    }
}

/// Solves `A x = b` exactly. Fails when `A` is singular.
pub fn solve_linear(a: &Matrix4, b: &Vector4) -> Result<Vector4, ExactError> {
    let mut m = a.0.clone();
    let mut rhs = b.clone();
    for col in 0..DIM {
        let pivot = (col..DIM)
            .find(|&r| !m[r][col].is_zero())
            .ok_or(ExactError::SingularMatrix)?;
        m.swap(pivot, col);
        let tmp = rhs[pivot].clone();
        rhs[pivot] = rhs[col].clone();
        rhs[col] = tmp;
        let scale = m[col][col].inverse().expect("pivot is nonzero");
        for c in 0..DIM {
            m[col][c] *= &scale;
        }
        rhs[col] *= &scale;
        for r in 0..DIM {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            for c in 0..DIM {
                let dm = &factor * &m[col][c];
                m[r][c] -= &dm;
            }
            let db = &factor * &rhs[col];
            rhs[r] -= &db;
        }
    }
    Ok(rhs)
}

/// Signature `(positive, negative)` of a symmetric matrix, by exact
/// congruence diagonalization. The rank deficiency is `4 - p - q`.
pub fn signature_of_symmetric(m: &Matrix4) -> (usize, usize) {
    debug_assert!(m.is_symmetric());
    let mut a = m.0.clone();
    let mut p = 0usize;
    let mut q = 0usize;
    let mut row = 0usize;
    while row < DIM {
        if a[row][row].is_zero() {
            // bring a nonzero diagonal entry into position by congruence
            if let Some(r) = (row + 1..DIM).find(|&r| !a[r][r].is_zero()) {
                swap_symmetric(&mut a, row, r);
            } else if let Some((r, c)) = off_diagonal_nonzero(&a, row) {
                // a[r][r] = a[c][c] = 0, a[r][c] != 0: add row/col c onto r
                add_symmetric(&mut a, r, c);
                swap_symmetric(&mut a, row, r);
            } else {
                break; // remaining block is zero
            }
        }
        let inv = a[row][row].inverse().expect("diagonal pivot is nonzero");
        for r in row + 1..DIM {
            if a[r][row].is_zero() {
                continue;
            }
            let factor = &a[r][row] * &inv;
            for c in 0..DIM {
                let d = &factor * &a[row][c];
                a[r][c] -= &d;
            }
            for c in 0..DIM {
                let d = &factor * &a[c][row];
                a[c][r] -= &d;
            }
        }
        if a[row][row].is_negative() {
            q += 1;
        } else {
            p += 1;
        }
        row += 1;
    }
    (p, q)
}

fn swap_symmetric(a: &mut [[Rational; 4]; 4], i: usize, j: usize) {
    a.swap(i, j);
    for row in a.iter_mut() {
        row.swap(i, j);
    }
}

fn add_symmetric(a: &mut [[Rational; 4]; 4], i: usize, j: usize) {
    for c in 0..DIM {
        let d = a[j][c].clone();
        a[i][c] += &d;
    }
    for r in 0..DIM {
        let d = a[r][j].clone();
        a[r][i] += &d;
    }
}

fn off_diagonal_nonzero(a: &[[Rational; 4]; 4], from: usize) -> Option<(usize, usize)> {
    for r in from..DIM {
        for c in from..DIM {
            if r != c && !a[r][c].is_zero() {
                return Some((r, c));
            }
        }
    }
    None
}

/// A rank-3 array of scalars indexed by three basis slots.
#[derive(Clone, PartialEq, Eq)]
pub struct Tensor3([[[Rational; 4]; 4]; 4]);

impl Tensor3 {
    pub fn zero() -> Self {
        Tensor3(array::from_fn(|_| {
            array::from_fn(|_| array::from_fn(|_| Rational::zero()))
        }))
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.0[i][j][k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, value: Rational) {
        self.0[i][j][k] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().flatten().flatten().all(Rational::is_zero)
    }

    /// Nonzero entries in row-major (i, j, k) order.
    pub fn nonzero_entries(&self) -> Vec<((usize, usize, usize), Rational)> {
        let mut out = Vec::new();
        for i in 0..DIM {
            for j in 0..DIM {
                for k in 0..DIM {
                    if !self.0[i][j][k].is_zero() {
                        out.push(((i, j, k), self.0[i][j][k].clone()));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for Tensor3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tensor3{:?}", self.nonzero_entries())
    }
}

/// Values of a vector-valued bilinear map on all basis pairs.
#[derive(Clone, PartialEq, Eq)]
pub struct BilinearMap([[Vector4; 4]; 4]);

impl BilinearMap {
    pub fn from_fn(mut f: impl FnMut(usize, usize) -> Vector4) -> Self {
        BilinearMap(array::from_fn(|i| array::from_fn(|j| f(i, j))))
    }

    pub fn get(&self, i: usize, j: usize) -> &Vector4 {
        &self.0[i][j]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().flatten().all(Vector4::is_zero)
    }

    pub fn first_nonzero(&self) -> Option<(usize, usize, &Vector4)> {
        for i in 0..DIM {
            for j in 0..DIM {
                if !self.0[i][j].is_zero() {
                    return Some((i, j, &self.0[i][j]));
                }
            }
        }
        None
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..DIM).all(|i| (0..DIM).all(|j| self.0[i][j] == -&self.0[j][i]))
    }
}

impl fmt::Debug for BilinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let entries: Vec<_> = (0..DIM)
            .flat_map(|i| (0..DIM).map(move |j| (i, j)))
            .filter(|&(i, j)| !self.0[i][j].is_zero())
            .map(|(i, j)| format!("({},{}) -> {:?}", i + 1, j + 1, self.0[i][j]))
            .collect();
        write!(f, "BilinearMap[{}]", entries.join(", "))
    }
}
