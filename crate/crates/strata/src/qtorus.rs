//! Quantum tori for a non-root-of-unity parameter q.
//!
//! A torus is presented by a skew-symmetric integer matrix M with
//! `x_i x_j = q^{M_ij} x_j x_i`. The only fact about q used anywhere is
//! `q^m = 1 ⟺ m = 0`, so a monomial `x^v` is central exactly when
//! `M v = 0`, and the center is the group algebra of the kernel lattice
//! `ker M ∩ ℤⁿ`. The kernel is computed by unimodular column reduction and
//! canonicalized by row Hermite normal form, so two presentations of the
//! same center compare equal basis-by-basis.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum QTorusError {
    #[error("matrix is not square: {rows} rows, row {bad} has {len} entries")]
    NotSquare { rows: usize, bad: usize, len: usize },
    #[error("matrix is not skew-symmetric with zero diagonal")]
    NotSkew,
    #[error("expected {expected} generator names, got {got}")]
    NameCount { expected: usize, got: usize },
    #[error("exponent vector has length {got}, torus has rank {expected}")]
    LengthMismatch { expected: usize, got: usize },
}

/// Is the matrix skew-symmetric with zero diagonal?
pub fn check_skew(m: &[Vec<i64>]) -> Result<bool, QTorusError> {
    let n = m.len();
    for (i, row) in m.iter().enumerate() {
        if row.len() != n {
            return Err(QTorusError::NotSquare { rows: n, bad: i, len: row.len() });
        }
    }
    for i in 0..n {
        if m[i][i] != 0 {
            return Ok(false);
        }
        for j in 0..n {
            if m[i][j] != -m[j][i] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A quantum torus presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QTorus {
    names: Vec<String>,
    matrix: Vec<Vec<i64>>,
}

impl QTorus {
    pub fn new<S: Into<String>>(names: Vec<S>, matrix: Vec<Vec<i64>>) -> Result<Self, QTorusError> {
        if !check_skew(&matrix)? {
            return Err(QTorusError::NotSkew);
        }
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() != matrix.len() {
            return Err(QTorusError::NameCount { expected: matrix.len(), got: names.len() });
        }
        Ok(QTorus { names, matrix })
    }

    /// Default generator names `x1 … xn`.
    pub fn anonymous(matrix: Vec<Vec<i64>>) -> Result<Self, QTorusError> {
        let names = (1..=matrix.len()).map(|i| format!("x{i}")).collect();
        QTorus::new::<String>(names, matrix)
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    /// `x^v` is central ⟺ `M v = 0` (q is never a root of unity).
    pub fn is_central_monomial(&self, v: &[i64]) -> Result<bool, QTorusError> {
        if v.len() != self.rank() {
            return Err(QTorusError::LengthMismatch { expected: self.rank(), got: v.len() });
        }
        Ok(self
            .matrix
            .iter()
            .all(|row| row.iter().zip(v).map(|(a, b)| a * b).sum::<i64>() == 0))
    }

    /// The center as a saturated kernel lattice with an HNF-canonical basis.
    pub fn center_lattice(&self) -> CenterLattice {
        let kernel = kernel_basis(&self.matrix);
        let basis = row_hnf(kernel);
        CenterLattice { names: self.names.clone(), basis }
    }
}

/// A saturated sublattice of ℤⁿ, stored as a row Hermite normal form basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenterLattice {
    names: Vec<String>,
    basis: Vec<Vec<i64>>,
}

impl CenterLattice {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<i64>] {
        &self.basis
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Build directly from spanning vectors (canonicalized by HNF).
    pub fn from_vectors(names: Vec<String>, vectors: Vec<Vec<i64>>) -> Self {
        CenterLattice { names, basis: row_hnf(vectors) }
    }

    /// Integer membership: `v` is a ℤ-combination of the basis.
    pub fn contains(&self, v: &[i64]) -> bool {
        let mut v = v.to_vec();
        for row in &self.basis {
            let pivot_col = match row.iter().position(|&x| x != 0) {
                Some(c) => c,
                None => continue,
            };
            let pivot = row[pivot_col];
            if v[pivot_col] % pivot == 0 {
                let q = v[pivot_col] / pivot;
                for (x, r) in v.iter_mut().zip(row) {
                    *x -= q * r;
                }
            }
        }
        v.iter().all(|&x| x == 0)
    }

    /// Same sublattice of ℤⁿ? HNF bases are canonical, so this is plain
    /// equality of the reduced bases.
    pub fn same_lattice(&self, other: &CenterLattice) -> bool {
        self.basis == other.basis
    }

    /// Human-readable monomial for one basis vector, e.g. `b*c^-1`.
    pub fn monomial_string(&self, v: &[i64]) -> String {
        let mut parts = Vec::new();
        for (name, &e) in self.names.iter().zip(v) {
            if e == 0 {
                continue;
            }
            if e == 1 {
                parts.push(name.clone());
            } else {
                parts.push(format!("{name}^{e}"));
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    /// All basis monomials, in basis order.
    pub fn monomial_strings(&self) -> Vec<String> {
        self.basis.iter().map(|v| self.monomial_string(v)).collect()
    }
}

impl fmt::Display for CenterLattice {
    /// `k` for a trivial center, else `k[m1, m2, …]` with the basis
    /// monomials (all invertible).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.basis.is_empty() {
            return write!(f, "k");
        }
        write!(f, "k[{}]", self.monomial_strings().join(", "))
    }
}

/// Saturated integer kernel of a square matrix, by unimodular column
/// reduction: bring `A·V` to column echelon form; the columns of `V`
/// matching zero columns of `A·V` span `ker A ∩ ℤⁿ`.
fn kernel_basis(matrix: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = matrix.len();
    let mut a: Vec<Vec<i64>> = matrix.to_vec();
    let mut v: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    let col_swap = |a: &mut Vec<Vec<i64>>, v: &mut Vec<Vec<i64>>, x: usize, y: usize| {
        for row in a.iter_mut() {
            row.swap(x, y);
        }
        for row in v.iter_mut() {
            row.swap(x, y);
        }
    };
    let col_axpy = |a: &mut Vec<Vec<i64>>, v: &mut Vec<Vec<i64>>, dst: usize, src: usize, q: i64| {
        for row in a.iter_mut() {
            row[dst] -= q * row[src];
        }
        for row in v.iter_mut() {
            row[dst] -= q * row[src];
        }
    };
    let mut lead = 0usize;
    for r in 0..n {
        if lead >= n {
            break;
        }
        loop {
            // smallest nonzero |entry| in row r among columns lead..
            let pick = (lead..n)
                .filter(|&j| a[r][j] != 0)
                .min_by_key(|&j| (a[r][j].unsigned_abs(), j));
            let Some(p) = pick else { break };
            col_swap(&mut a, &mut v, lead, p);
            let mut done = true;
            for j in (lead + 1)..n {
                if a[r][j] != 0 {
                    let q = a[r][j].div_euclid(a[r][lead]);
                    col_axpy(&mut a, &mut v, j, lead, q);
                    if a[r][j] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if a[r][lead] != 0 {
            lead += 1;
        }
    }
    (lead..n)
        .map(|j| (0..n).map(|i| v[i][j]).collect())
        .filter(|col: &Vec<i64>| col.iter().any(|&x| x != 0))
        .collect()
}

/// Row Hermite normal form of the span: echelon rows, positive pivots,
/// entries above each pivot reduced into `[0, pivot)`, zero rows dropped.
fn row_hnf(mut rows: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    rows.retain(|r| r.iter().any(|&x| x != 0));
    if rows.is_empty() {
        return rows;
    }
    let width = rows[0].len();
    let mut r = 0usize;
    for c in 0..width {
        // gcd into position r at column c
        loop {
            let pick = (r..rows.len())
                .filter(|&i| rows[i][c] != 0)
                .min_by_key(|&i| (rows[i][c].unsigned_abs(), i));
            let Some(p) = pick else { break };
            rows.swap(r, p);
            let mut done = true;
            for i in (r + 1)..rows.len() {
                if rows[i][c] != 0 {
                    let q = rows[i][c].div_euclid(rows[r][c]);
                    for j in 0..width {
                        rows[i][j] -= q * rows[r][j];
                    }
                    if rows[i][c] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if r < rows.len() && rows[r][c] != 0 {
            if rows[r][c] < 0 {
                for x in rows[r].iter_mut() {
                    *x = -*x;
                }
            }
            // reduce entries above the pivot
            let pivot = rows[r][c];
            for i in 0..r {
                let q = rows[i][c].div_euclid(pivot);
                if q != 0 {
                    for j in 0..width {
                        rows[i][j] -= q * rows[r][j];
                    }
                }
            }
            r += 1;
        }
    }
    rows.truncate(r);
    rows
}

/// Rational rank of an integer matrix (for the rank-nullity check).
pub fn rational_rank(matrix: &[Vec<i64>]) -> usize {
    if matrix.is_empty() {
        return 0;
    }
    let mut m: Vec<Vec<num::BigRational>> = matrix
        .iter()
        .map(|row| row.iter().map(|&x| num::BigRational::from_integer(x.into())).collect())
        .collect();
    let (rows, cols) = (m.len(), m[0].len());
    let mut rank = 0;
    for c in 0..cols {
        let pivot = (rank..rows).find(|&i| !num::Zero::is_zero(&m[i][c]));
        let Some(p) = pivot else { continue };
        m.swap(rank, p);
        let inv = num::BigRational::from_integer(1.into()) / m[rank][c].clone();
        for j in 0..cols {
            m[rank][j] = &m[rank][j] * &inv;
        }
        for i in 0..rows {
            if i != rank && !num::Zero::is_zero(&m[i][c]) {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let s = &m[rank][j] * &f;
                    m[i][j] = &m[i][j] - &s;
                }
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    /// relations a·c = q c·a, c·d = q d·c, a·d = d·a
    fn mod_b_matrix() -> Vec<Vec<i64>> {
        vec![vec![0, 1, 0], vec![-1, 0, 1], vec![0, -1, 0]]
    }

    #[test]
    fn skew_checks() {
        assert!(check_skew(&[vec![0, 1], vec![-1, 0]]).unwrap());
        assert!(!check_skew(&[vec![0, 1], vec![1, 0]]).unwrap());
        assert!(check_skew(&mod_b_matrix()).unwrap());
        assert!(check_skew(&[vec![0, 1]]).is_err());
        assert!(!check_skew(&[vec![1]]).unwrap());
    }

    #[test]
    fn central_monomials_mod_b() {
        let t = QTorus::new(vec!["a", "c", "d"], mod_b_matrix()).unwrap();
        // a·d is central, c is not, 1 always is
        assert!(t.is_central_monomial(&[1, 0, 1]).unwrap());
        assert!(!t.is_central_monomial(&[0, 1, 0]).unwrap());
        assert!(t.is_central_monomial(&[0, 0, 0]).unwrap());
        assert!(t.is_central_monomial(&[1, 0]).is_err());
    }

    #[test]
    fn center_of_mod_b_torus() {
        let t = QTorus::new(vec!["a", "c", "d"], mod_b_matrix()).unwrap();
        let z = t.center_lattice();
        assert_eq!(z.basis(), &[vec![1, 0, 1]]);
        assert_eq!(z.monomial_strings(), vec!["a*d"]);
    }

    #[test]
    fn center_of_commutative_torus_is_everything() {
        let t = QTorus::anonymous(vec![vec![0, 0], vec![0, 0]]).unwrap();
        let z = t.center_lattice();
        assert_eq!(z.basis(), &[vec![1, 0], vec![0, 1]]);
        assert_eq!(z.monomial_strings(), vec!["x1", "x2"]);
    }

    #[test]
    fn lattice_membership_and_purity() {
        let t = QTorus::new(vec!["a", "c", "d"], mod_b_matrix()).unwrap();
        let z = t.center_lattice();
        assert!(z.contains(&[2, 0, 2]));
        assert!(!z.contains(&[1, 1, 1]));
        // purity at the matrix level: every kernel vector of M over ℚ that
        // is integral lies in the lattice
        assert!(z.contains(&[5, 0, 5]));
        assert_eq!(rational_rank(&mod_b_matrix()) + z.rank(), 3);
    }

    #[test]
    fn hnf_is_canonical() {
        let a = CenterLattice::from_vectors(
            vec!["x".into(), "y".into()],
            vec![vec![2, 1], vec![1, 1]],
        );
        let b = CenterLattice::from_vectors(
            vec!["x".into(), "y".into()],
            vec![vec![1, 0], vec![0, 1]],
        );
        assert!(a.same_lattice(&b));
        let c = CenterLattice::from_vectors(
            vec!["x".into(), "y".into()],
            vec![vec![2, 0], vec![0, 1]],
        );
        assert!(!a.same_lattice(&c));
    }
}
