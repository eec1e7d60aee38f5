//! The matrix route: a lower-triangular matrix of convolved Fibonacci
//! numbers with zero main and sub-diagonal, the vector `(1, F_0, F_1, ..)`,
//! and the forward-substitution solve recovering the invertibility counts.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::counts::{convolved_fibonacci_columns, fibonacci_sequence};

/// A square lower-triangular matrix of nonnegative integers; row `i` stores
/// columns `0..=i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowerTriangular {
    rows: Vec<Vec<BigUint>>,
}

impl LowerTriangular {
    pub fn zero(size: usize) -> Self {
        LowerTriangular {
            rows: (0..size).map(|i| vec![BigUint::zero(); i + 1]).collect(),
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zero(size);
        for i in 0..size {
            m.rows[i][i] = BigUint::one();
        }
        m
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// Entry `(i, j)`; zero above the diagonal.
    pub fn entry(&self, i: usize, j: usize) -> BigUint {
        if j <= i {
            self.rows[i][j].clone()
        } else {
            BigUint::zero()
        }
    }

    pub fn row(&self, i: usize) -> &[BigUint] {
        &self.rows[i]
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.size(), other.size());
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
            .collect();
        LowerTriangular { rows }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.size(), other.size());
        let size = self.size();
        let mut out = Self::zero(size);
        for i in 0..size {
            for j in 0..=i {
                let mut acc = BigUint::zero();
                for k in j..=i {
                    acc += &self.rows[i][k] * &other.rows[k][j];
                }
                out.rows[i][j] = acc;
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.iter().all(Zero::is_zero))
    }

    /// Smallest `i - j` over nonzero entries, if any.
    fn lowest_nonzero_offset(&self) -> Option<usize> {
        let mut best = None;
        for (i, row) in self.rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    let off = i - j;
                    best = Some(best.map_or(off, |b: usize| b.min(off)));
                }
            }
        }
        best
    }
}

/// The coefficient matrix: entry `(n, k)` is the convolved Fibonacci number
/// `a(n, k)`, nonzero only for `n >= k + 2`, so the main diagonal and the
/// sub-diagonal vanish.
pub fn convolution_matrix(size: usize) -> LowerTriangular {
    let cols = convolved_fibonacci_columns(size);
    let mut m = LowerTriangular::zero(size);
    for i in 0..size {
        for j in 0..=i {
            m.rows[i][j] = cols[j][i].clone();
        }
    }
    m
}

/// The right-hand side `(1, F_0, F_1, F_2, ..)`.
pub fn rhs_vector(size: usize) -> Vec<BigUint> {
    let mut out = Vec::with_capacity(size);
    out.push(BigUint::one());
    if size > 1 {
        out.extend(fibonacci_sequence(size - 2));
    }
    out
}

/// Solves `(I - A) X = F` by forward substitution, i.e. `x_i = F_i +
/// sum_{k < i} a(i, k) x_k`; the result is the invertibility count vector
/// `(f(0), .., f(size - 1))`.
pub fn solve_counts(size: usize) -> Vec<BigUint> {
    let a = convolution_matrix(size);
    let f = rhs_vector(size);
    let mut x: Vec<BigUint> = Vec::with_capacity(size);
    for i in 0..size {
        let mut acc = f[i].clone();
        for k in 0..i {
            acc += &a.rows[i][k] * &x[k];
        }
        x.push(acc);
    }
    x
}

/// `(I - A)^{-1}` by forward substitution on each row:
/// `y_{ij} = [i = j] + sum_{k < i} a(i, k) y_{kj}`. Only additions occur,
/// so every entry is a nonnegative integer by construction.
pub fn inverse_matrix(size: usize) -> LowerTriangular {
    let a = convolution_matrix(size);
    let mut y = LowerTriangular::zero(size);
    for i in 0..size {
        for j in 0..=i {
            let mut acc = if i == j { BigUint::one() } else { BigUint::zero() };
            for k in j..i {
                acc += &a.rows[i][k] * &y.rows[k][j];
            }
            y.rows[i][j] = acc;
        }
    }
    y
}

/// Confirms the Neumann expansion on the `size`-square truncation:
/// `(I - A)^{-1} = I + A + A^2 + .. + A^terms`, that multiplying by `A`
/// pushes the lowest nonzero diagonal two rows further down (so the series
/// terminates once `2 * terms >= size`), and that the main and sub-diagonal
/// of `A` are zero.
pub fn neumann_check(size: usize, terms: usize) -> bool {
    assert!(
        2 * terms >= size,
        "need terms >= size / 2 for the truncated series to close"
    );
    let a = convolution_matrix(size);
    for i in 0..size {
        if !a.entry(i, i).is_zero() {
            return false;
        }
        if i > 0 && !a.entry(i, i - 1).is_zero() {
            return false;
        }
    }
    let mut sum = LowerTriangular::identity(size);
    let mut power = LowerTriangular::identity(size);
    let mut expected_offset = 0usize;
    for _ in 1..=terms {
        let next = power.mul(&a);
        match (power.lowest_nonzero_offset(), next.lowest_nonzero_offset()) {
            (Some(_), Some(off)) => {
                expected_offset += 2;
                if off < expected_offset {
                    return false;
                }
            }
            _ => {}
        }
        power = next;
        sum = sum.add(&power);
    }
    if !power.mul(&a).is_zero() {
        // the series was cut off too early
        return false;
    }
    sum == inverse_matrix(size)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nums(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn coefficient_matrix_eight_square() {
        let a = convolution_matrix(8);
        let expected: Vec<Vec<u64>> = vec![
            vec![0],
            vec![0, 0],
            vec![1, 0, 0],
            vec![1, 1, 0, 0],
            vec![2, 2, 1, 0, 0],
            vec![3, 5, 3, 1, 0, 0],
            vec![5, 10, 9, 4, 1, 0, 0],
            vec![8, 20, 22, 14, 5, 1, 0, 0],
        ];
        for (i, row) in expected.iter().enumerate() {
            assert_eq!(a.row(i), &nums(row)[..], "row {i}");
        }
    }

    #[test]
    fn inverse_eight_square() {
        let inv = inverse_matrix(8);
        let expected: Vec<Vec<u64>> = vec![
            vec![1],
            vec![0, 1],
            vec![1, 0, 1],
            vec![1, 1, 0, 1],
            vec![3, 2, 1, 0, 1],
            vec![7, 6, 3, 1, 0, 1],
            vec![21, 16, 10, 4, 1, 0, 1],
            vec![66, 50, 30, 15, 5, 1, 0, 1],
        ];
        for (i, row) in expected.iter().enumerate() {
            assert_eq!(inv.row(i), &nums(row)[..], "row {i}");
        }
    }

    #[test]
    fn solve_recovers_the_count_sequence() {
        assert_eq!(
            solve_counts(11),
            nums(&[1, 1, 2, 4, 9, 23, 66, 209, 718, 2645, 10373])
        );
        assert_eq!(rhs_vector(5), nums(&[1, 1, 1, 2, 3]));
    }

    #[test]
    fn neumann_series_closes() {
        assert!(neumann_check(8, 4));
        assert!(neumann_check(8, 7));
        assert!(neumann_check(12, 6));
        assert!(neumann_check(1, 1));
    }

    #[test]
    fn inverse_undoes_i_minus_a() {
        let size = 12;
        let a = convolution_matrix(size);
        let inv = inverse_matrix(size);
        // (I - A) * inv = I, checked additively: inv = I + A * inv
        let should_be_inv = LowerTriangular::identity(size).add(&a.mul(&inv));
        assert_eq!(should_be_inv, inv);
    }
}
