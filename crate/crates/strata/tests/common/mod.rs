//! Test-side oracles, independent of the library's algebra engine.
//!
//! The vanishing-ideal oracle here uses plain exact Gaussian elimination
//! over ℚ on monomial-evaluation matrices — no Gröbner machinery — so the
//! ideal-level transfer computations can be checked against it honestly.

use num::{BigRational, One, Zero};
use strata::commalg::{Coeff, Point, PolyRing};

/// All Laurent exponent vectors `v` with Σ|v_i| ≤ window, where
/// non-inverted variables only take v_i ≥ 0.
pub fn monomial_window(ring: &PolyRing, window: i64) -> Vec<Vec<i64>> {
    let n = ring.n_vars();
    let mut out = vec![vec![]];
    for i in 0..n {
        let lo = if ring.is_inverted(i) { -window } else { 0 };
        let mut next = Vec::new();
        for prefix in &out {
            let used: i64 = prefix.iter().map(|e: &i64| e.abs()).sum();
            for e in lo..=window {
                if used + e.abs() <= window {
                    let mut v = prefix.clone();
                    v.push(e);
                    next.push(v);
                }
            }
        }
        out = next;
    }
    out
}

/// Value of a Laurent monomial at a point (coordinates of inverted
/// variables are nonzero by construction of the samplers).
pub fn eval_monomial(exps: &[i64], p: &[Coeff]) -> Coeff {
    let mut acc = Coeff::one();
    for (e, c) in exps.iter().zip(p) {
        if *e == 0 {
            continue;
        }
        let base = if *e > 0 { c.clone() } else { Coeff::one() / c.clone() };
        for _ in 0..e.unsigned_abs() {
            acc *= base.clone();
        }
    }
    acc
}

/// Basis of the right null space of the matrix (rows of equal length).
pub fn null_space(matrix: &[Vec<Coeff>]) -> Vec<Vec<Coeff>> {
    if matrix.is_empty() {
        return Vec::new();
    }
    let cols = matrix[0].len();
    let mut m: Vec<Vec<Coeff>> = matrix.to_vec();
    let rows = m.len();
    let mut pivot_col_of_row = Vec::new();
    let mut r = 0usize;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = Coeff::one() / m[r][c].clone();
        for j in 0..cols {
            m[r][j] = &m[r][j] * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let s = &m[r][j] * &f;
                    m[i][j] = &m[i][j] - &s;
                }
            }
        }
        pivot_col_of_row.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    let pivot_cols: Vec<usize> = pivot_col_of_row;
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![Coeff::zero(); cols];
        v[free] = Coeff::one();
        for (row, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -m[row][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// The degree-windowed vanishing space of a finite point set: coefficient
/// vectors (over `monomial_window(ring, window)`) of every windowed
/// Laurent polynomial vanishing on all the points.
pub struct VanishingOracle {
    pub monomials: Vec<Vec<i64>>,
    pub coeffs: Vec<Vec<Coeff>>,
}

impl VanishingOracle {
    pub fn build(ring: &PolyRing, points: &[Point], window: i64) -> Self {
        let monomials = monomial_window(ring, window);
        let matrix: Vec<Vec<Coeff>> = points
            .iter()
            .map(|p| monomials.iter().map(|m| eval_monomial(m, p)).collect())
            .collect();
        let coeffs = null_space(&matrix);
        VanishingOracle { monomials, coeffs }
    }

    /// Does every vanishing polynomial of the window also vanish here?
    /// That is the brute-force "lies in the closure" test.
    pub fn in_closure(&self, p: &Point) -> bool {
        self.coeffs.iter().all(|cv| {
            let mut acc = Coeff::zero();
            for (c, m) in cv.iter().zip(&self.monomials) {
                if !c.is_zero() {
                    acc += c * &eval_monomial(m, p);
                }
            }
            acc.is_zero()
        })
    }
}

/// All labeled partial orders on `n` elements, as strict-pair lists over
/// labels "p0".."p{n-1}" — equivalently all labeled T₀ topologies via
/// closed sets = up-sets.
pub fn all_labeled_posets(n: usize) -> Vec<Vec<(usize, usize)>> {
    assert!(n <= 4, "exhaustive enumeration is desk-scale only");
    let off_diag: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << off_diag.len()) {
        let mut rel = vec![vec![false; n]; n];
        for (k, &(i, j)) in off_diag.iter().enumerate() {
            if mask & (1 << k) != 0 {
                rel[i][j] = true;
            }
        }
        let antisym = (0..n).all(|i| (0..n).all(|j| i == j || !(rel[i][j] && rel[j][i])));
        if !antisym {
            continue;
        }
        let transitive = (0..n).all(|i| {
            (0..n).all(|j| {
                (0..n).all(|k| !(rel[i][j] && rel[j][k]) || rel[i][k] || i == k)
            })
        });
        // a strict relation must also avoid i<j<i loops via transitivity;
        // antisymmetry above plus transitivity already excludes cycles
        if !transitive {
            continue;
        }
        out.push(
            off_diag
                .iter()
                .enumerate()
                .filter(|(k, _)| mask & (1 << *k) != 0)
                .map(|(_, &p)| p)
                .collect(),
        );
    }
    out
}

/// Nonzero rational shortcut for expected values.
pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}
