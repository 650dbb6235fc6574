//! Dense matrices and exact rank.
//!
//! The production path over characteristic 0 is fraction-free (Bareiss)
//! elimination on arbitrary-precision integers. Gaussian elimination over a
//! generic [`Field`] is kept as an independent second route.

use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::scalar::{Characteristic, Field};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone + Zero> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: T) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn map<U: Clone + Zero>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }
}

impl<T> Matrix<T>
where
    T: Clone + Zero + Add<Output = T> + Mul<Output = T>,
{
    /// `self * rhs`; panics on a shape mismatch.
    pub fn mul(&self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in matrix product");
        let mut out: Matrix<T> = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j).clone() + a.clone() * b.clone();
                    out.set(i, j, v);
                }
            }
        }
        out
    }
}

/// Rank by fraction-free row reduction over an integral domain. Every
/// division performed is exact.
pub fn rank_fraction_free<T>(m: &Matrix<T>) -> usize
where
    T: Clone + Integer,
{
    let mut a = m.to_rows();
    let (rows, cols) = (m.rows(), m.cols());
    let mut prev = T::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        let p = a[rank][col].clone();
        for r in rank + 1..rows {
            let f = a[r][col].clone();
            for c in col + 1..cols {
                let v = p.clone() * a[r][c].clone() - f.clone() * a[rank][c].clone();
                a[r][c] = v.div_floor(&prev);
            }
            a[r][col] = T::zero();
        }
        prev = p;
        rank += 1;
    }
    rank
}

/// Rank by Gaussian elimination over a field.
pub fn rank_over_field<F: Field>(m: &Matrix<F>) -> usize {
    let mut a = m.to_rows();
    let (rows, cols) = (m.rows(), m.cols());
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        let inv = F::one() / a[rank][col].clone();
        for r in rank + 1..rows {
            if a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone() * inv.clone();
            for c in col..cols {
                let v = a[r][c].clone() - f.clone() * a[rank][c].clone();
                a[r][c] = v;
            }
        }
        rank += 1;
    }
    rank
}

/// Rank over the prime field `F_p`.
pub fn rank_mod_p(m: &Matrix<i64>, p: u64) -> usize {
    let p = p as i64;
    let mut a: Vec<Vec<i64>> =
        m.to_rows().into_iter().map(|row| row.into_iter().map(|x| x.rem_euclid(p)).collect()).collect();
    let (rows, cols) = (m.rows(), m.cols());
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, pivot);
        let inv = mod_inverse(a[rank][col], p);
        for r in rank + 1..rows {
            if a[r][col] == 0 {
                continue;
            }
            let f = a[r][col] * inv % p;
            for c in col..cols {
                a[r][c] = (a[r][c] - f * a[rank][c]).rem_euclid(p);
            }
        }
        rank += 1;
    }
    rank
}

fn mod_inverse(x: i64, p: i64) -> i64 {
    let g = num_integer::Integer::extended_gcd(&x, &p);
    g.x.rem_euclid(p)
}

/// Exact rank of an integer matrix over the field of the given characteristic.
pub fn rank(m: &Matrix<i64>, characteristic: Characteristic) -> usize {
    if m.rows() == 0 || m.cols() == 0 {
        return 0;
    }
    match characteristic {
        Characteristic::Zero => rank_fraction_free(&m.map(|&x| BigInt::from(x))),
        Characteristic::Prime(p) => rank_mod_p(m, p),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use proptest::prelude::*;

    #[test]
    fn small_ranks() {
        let m = Matrix::from_rows(vec![vec![1i64, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(rank(&m, Characteristic::Zero), 2);
        let id = Matrix::from_rows(vec![vec![1i64, 0], vec![0, 1]]);
        assert_eq!(rank(&id, Characteristic::Zero), 2);
        assert_eq!(rank(&Matrix::<i64>::zeros(3, 0), Characteristic::Zero), 0);
        assert_eq!(rank(&Matrix::<i64>::zeros(2, 2), Characteristic::Zero), 0);
    }

    #[test]
    fn characteristic_dependence() {
        // [[1,1],[1,-1]] has determinant -2
        let m = Matrix::from_rows(vec![vec![1i64, 1], vec![1, -1]]);
        assert_eq!(rank(&m, Characteristic::Zero), 2);
        assert_eq!(rank(&m, Characteristic::Prime(2)), 1);
        assert_eq!(rank(&m, Characteristic::Prime(3)), 2);
    }

    #[test]
    fn product() {
        let a = Matrix::from_rows(vec![vec![1i64, -1]]);
        let b = Matrix::from_rows(vec![vec![1i64], vec![1]]);
        assert!(a.mul(&b).is_zero());
    }

    proptest! {
        #[test]
        fn bareiss_agrees_with_rational_elimination(
            rows in 1usize..6,
            cols in 1usize..6,
            seed in prop::collection::vec(-2i64..=2, 36),
        ) {
            let m = Matrix::from_rows(
                (0..rows).map(|r| (0..cols).map(|c| seed[r * 6 + c]).collect()).collect(),
            );
            let q = m.map(|&x| BigRational::from_integer(BigInt::from(x)));
            prop_assert_eq!(rank(&m, Characteristic::Zero), rank_over_field(&q));
        }
    }
}
