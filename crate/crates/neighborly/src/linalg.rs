//! Exact rational linear algebra: determinants, rank and nullspace bases.
//!
//! Everything here is exact. Determinants and ranks run fraction-free
//! (Bareiss) elimination over the integers after clearing denominators, which
//! keeps intermediate coefficients polynomially bounded; nullspace bases come
//! from a rational Gauss-Jordan pass in a fixed echelon-derived order so Gale
//! duals are reproducible bit for bit.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar. Always stored in lowest terms with a positive
/// denominator; `1/2 == 2/4` and comparisons, hashing and printing are
/// canonical.
pub type Scalar = num_rational::BigRational;

/// Scalar from an integer.
pub fn integer(p: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(p))
}

/// Scalar `p/q`. Panics if `q == 0`.
pub fn rational(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

/// Parses the rational literal syntax `p/q` (or a bare integer `p`).
pub fn parse_scalar(token: &str) -> std::result::Result<Scalar, String> {
    let token = token.trim();
    let (num, den) = match token.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (token, None),
    };
    let numer: BigInt = num
        .parse()
        .map_err(|_| format!("invalid rational literal '{token}'"))?;
    let denom: BigInt = match den {
        Some(d) => d
            .parse()
            .map_err(|_| format!("invalid rational literal '{token}'"))?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(format!("zero denominator in '{token}'"));
    }
    Ok(Scalar::new(numer, denom))
}

/// Dense matrix of [`Scalar`]s with row-major storage. Dimensions are fixed
/// at construction; all operations are pure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    /// Builds a matrix from row-major entries; `entries.len()` must equal
    /// `rows * cols`.
    pub fn new(rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(Matrix {
            rows,
            cols,
            entries,
        })
    }

    /// Builds a matrix from a list of equal-length rows.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Dimension("rows of unequal length".into()));
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![Scalar::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = Scalar::one();
        }
        Matrix {
            rows: n,
            cols: n,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Matrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.at(i, j).clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    /// Matrix-vector product `self * v`.
    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<Scalar> {
        if self.rows != self.cols {
            return Err(Error::Dimension(format!(
                "determinant of non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let (int_rows, row_factors) = self.cleared_rows();
        let int_det = bareiss_det(int_rows);
        let mut det = Scalar::from_integer(int_det);
        for f in row_factors {
            det /= Scalar::from_integer(f);
        }
        Ok(det)
    }

    /// Exact row rank over the rationals, via fraction-free elimination.
    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        let (int_rows, _) = self.cleared_rows();
        fraction_free_rank(int_rows)
    }

    /// Basis of the right nullspace `{x : self * x = 0}`, one basis vector
    /// per row, in the deterministic order induced by the reduced echelon
    /// form (ascending free column). Row count is `cols - rank`.
    pub fn nullspace_basis(&self) -> Matrix {
        let (rref, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        if free.is_empty() {
            return Matrix {
                rows: 0,
                cols: self.cols,
                entries: Vec::new(),
            };
        }
        let mut basis_rows = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![Scalar::zero(); self.cols];
            v[f] = Scalar::one();
            for (prow, &pcol) in pivots.iter().enumerate() {
                v[pcol] = -rref[prow][f].clone();
            }
            basis_rows.push(v);
        }
        Matrix::from_rows(basis_rows).expect("basis rows share a length")
    }

    /// Reduced row echelon form plus pivot column indices.
    fn rref(&self) -> (Vec<Vec<Scalar>>, Vec<usize>) {
        let mut m: Vec<Vec<Scalar>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            let Some(p) = (row..self.rows).find(|&i| !m[i][col].is_zero()) else {
                continue;
            };
            m.swap(row, p);
            let inv = m[row][col].clone();
            for x in &mut m[row] {
                *x /= inv.clone();
            }
            let pivot_row = m[row].clone();
            for (i, target) in m.iter_mut().enumerate() {
                if i != row && !target[col].is_zero() {
                    let factor = target[col].clone();
                    for (x, p) in target.iter_mut().zip(&pivot_row) {
                        *x -= &factor * p;
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == self.rows {
                break;
            }
        }
        (m, pivots)
    }

    /// Clears denominators row by row; returns integer rows plus the factor
    /// each row was scaled by.
    fn cleared_rows(&self) -> (Vec<Vec<BigInt>>, Vec<BigInt>) {
        let mut int_rows = Vec::with_capacity(self.rows);
        let mut factors = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let lcm = self
                .row(i)
                .iter()
                .fold(BigInt::one(), |acc, s| acc.lcm(s.denom()));
            let row: Vec<BigInt> = self
                .row(i)
                .iter()
                .map(|s| s.numer() * (&lcm / s.denom()))
                .collect();
            int_rows.push(row);
            factors.push(lcm);
        }
        (int_rows, factors)
    }
}

impl std::fmt::Display for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(|s| s.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Exact integer division; the Bareiss recurrences guarantee divisibility,
/// so a nonzero remainder means a bug.
fn exact_div(num: BigInt, den: &BigInt) -> BigInt {
    let (q, r) = num.div_rem(den);
    debug_assert!(r.is_zero(), "fraction-free elimination lost exactness");
    q
}

fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negated = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            negated = !negated;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = exact_div(t, &prev);
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = std::mem::take(&mut a[n - 1][n - 1]);
    if negated {
        -det
    } else {
        det
    }
}

fn fraction_free_rank(mut a: Vec<Vec<BigInt>>) -> usize {
    let rows = a.len();
    let cols = a[0].len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for i in rank + 1..rows {
            for j in col + 1..cols {
                let t = &a[i][j] * &a[rank][col] - &a[i][col] * &a[rank][j];
                a[i][j] = exact_div(t, &prev);
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Sign of a scalar as -1, 0 or +1.
pub fn scalar_sign(s: &Scalar) -> i8 {
    if s.is_zero() {
        0
    } else if s.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| integer(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    /// Independent determinant oracle: cofactor expansion along the first row.
    fn cofactor_det(rows: &[Vec<Scalar>]) -> Scalar {
        let n = rows.len();
        if n == 0 {
            return Scalar::one();
        }
        if n == 1 {
            return rows[0][0].clone();
        }
        let mut acc = Scalar::zero();
        for j in 0..n {
            if rows[0][j].is_zero() {
                continue;
            }
            let minor: Vec<Vec<Scalar>> = rows[1..]
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, x)| x.clone())
                        .collect()
                })
                .collect();
            let term = &rows[0][j] * cofactor_det(&minor);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    /// Deterministic LCG for reproducible random matrices.
    struct Lcg(u64);
    impl Lcg {
        fn next_u64(&mut self) -> u64 {
            self.0 = self
                .0
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            self.0 >> 11
        }
        fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
            lo + (self.next_u64() % (hi - lo + 1) as u64) as i64
        }
    }

    #[test]
    fn det_identity() {
        assert_eq!(Matrix::identity(3).det().unwrap(), integer(1));
    }

    #[test]
    fn det_two_by_two_hand_oracle() {
        // Cofactor expansion by hand: |1 0; 1 1| = 1, |0 1; 1 1| = -1.
        assert_eq!(m(&[&[1, 0], &[1, 1]]).det().unwrap(), integer(1));
        assert_eq!(m(&[&[0, 1], &[1, 1]]).det().unwrap(), integer(-1));
    }

    #[test]
    fn det_vandermonde() {
        // Rows (1, t, t^2) for t = 0, 1, 2; product formula gives
        // (1-0)(2-0)(2-1) = 2.
        let v = m(&[&[1, 0, 0], &[1, 1, 1], &[1, 2, 4]]);
        assert_eq!(v.det().unwrap(), integer(2));
    }

    #[test]
    fn det_non_square_rejected() {
        assert!(matches!(
            m(&[&[1, 2, 3], &[4, 5, 6]]).det(),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn det_matches_cofactor_oracle_on_random_matrices() {
        let mut rng = Lcg(0xfeed5eed);
        for n in 1..=5 {
            for _ in 0..20 {
                let rows: Vec<Vec<Scalar>> = (0..n)
                    .map(|_| {
                        (0..n)
                            .map(|_| rational(rng.int_in(-6, 6), rng.int_in(1, 4)))
                            .collect()
                    })
                    .collect();
                let expected = cofactor_det(&rows);
                let got = Matrix::from_rows(rows).unwrap().det().unwrap();
                assert_eq!(got, expected);
            }
        }
    }

    #[test]
    fn det_nonzero_iff_full_rank() {
        let mut rng = Lcg(0xabcdef12345);
        for n in 1..=4 {
            for _ in 0..30 {
                let mat = Matrix::from_rows(
                    (0..n)
                        .map(|_| (0..n).map(|_| integer(rng.int_in(-2, 2))).collect())
                        .collect(),
                )
                .unwrap();
                assert_eq!(mat.det().unwrap().is_zero(), mat.rank() < n);
            }
        }
    }

    #[test]
    fn rank_cases() {
        assert_eq!(m(&[&[0, 0, 0], &[0, 0, 0], &[0, 0, 0]]).rank(), 0);
        assert_eq!(Matrix::identity(4).rank(), 4);
        // Proportional rows collapse to rank 1.
        assert_eq!(m(&[&[1, 2], &[2, 4]]).rank(), 1);
    }

    #[test]
    fn nullspace_full_rank_is_empty() {
        let ns = Matrix::identity(3).nullspace_basis();
        assert_eq!(ns.rows(), 0);
        assert_eq!(ns.cols(), 3);
    }

    #[test]
    fn nullspace_single_constraint() {
        let ns = m(&[&[1, 1]]).nullspace_basis();
        assert_eq!(ns.rows(), 1);
        // (1, -1) up to scaling.
        let r = ns.row(0);
        assert!(!r[0].is_zero());
        assert_eq!(r[0].clone() + r[1].clone(), Scalar::zero());
    }

    #[test]
    fn nullspace_homogenized_square() {
        // Square corners (0,0), (1,0), (0,1), (1,1) homogenized; solving the
        // 3x4 system by hand gives the affine dependency
        // p1 - p2 - p3 + p4 = 0, i.e. sign pattern (+,-,-,+).
        let x = m(&[&[1, 0, 0], &[1, 1, 0], &[1, 0, 1], &[1, 1, 1]]);
        let ns = x.transpose().nullspace_basis();
        assert_eq!(ns.rows(), 1);
        let r = ns.row(0);
        let s0 = scalar_sign(&r[0]);
        assert_ne!(s0, 0);
        let signs: Vec<i8> = r.iter().map(|x| scalar_sign(x) * s0).collect();
        assert_eq!(signs, vec![1, -1, -1, 1]);
    }

    #[test]
    fn nullspace_rows_annihilated_and_complementary_rank() {
        let mut rng = Lcg(0x5ca1ab1e);
        for _ in 0..40 {
            let rows = rng.int_in(1, 4) as usize;
            let cols = rng.int_in(1, 5) as usize;
            let mat = Matrix::from_rows(
                (0..rows)
                    .map(|_| {
                        (0..cols)
                            .map(|_| rational(rng.int_in(-3, 3), rng.int_in(1, 3)))
                            .collect()
                    })
                    .collect(),
            )
            .unwrap();
            let ns = mat.nullspace_basis();
            assert_eq!(ns.rows(), cols - mat.rank());
            assert_eq!(ns.rank(), ns.rows());
            for i in 0..ns.rows() {
                let image = mat.mul_vec(ns.row(i)).unwrap();
                assert!(image.iter().all(Scalar::is_zero));
            }
        }
    }

    #[test]
    fn scalar_parsing() {
        assert_eq!(parse_scalar("3/4").unwrap(), rational(3, 4));
        assert_eq!(parse_scalar("-3/4").unwrap(), rational(-3, 4));
        assert_eq!(parse_scalar("7").unwrap(), integer(7));
        assert_eq!(parse_scalar("6/4").unwrap(), rational(3, 2));
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("x").is_err());
        assert!(parse_scalar("1/2/3").is_err());
    }

    #[test]
    fn scalar_canonical_form() {
        let s = rational(-4, -6);
        assert_eq!(s, rational(2, 3));
        assert_eq!(s.to_string(), "2/3");
        assert_eq!(rational(-1, 2).to_string(), "-1/2");
        assert_eq!(integer(5).to_string(), "5");
    }
}
