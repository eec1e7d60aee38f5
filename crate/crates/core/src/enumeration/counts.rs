//! Integer sequences and the invertibility triangle.
//!
//! `f(n)` counts the pile configurations on `n` cards with a unique
//! preimage, refined by the triangle `f(n, k)` (first letter `k`). Two
//! independent recurrences compute it here; a third route lives in
//! `matrix`. They must agree everywhere, and they are checked against
//! exhaustive sweeps at desk scale.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Bell numbers `B_0, .., B_n` by the Bell triangle.
pub fn bell_sequence(n_max: usize) -> Vec<BigUint> {
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(BigUint::one());
    if n_max == 0 {
        return out;
    }
    let mut row = vec![BigUint::one()];
    out.push(BigUint::one());
    for _ in 2..=n_max {
        let mut next: Vec<BigUint> = Vec::with_capacity(row.len() + 1);
        next.push(row.last().unwrap().clone());
        for v in &row {
            let s = next.last().unwrap() + v;
            next.push(s);
        }
        out.push(next.last().unwrap().clone());
        row = next;
    }
    out
}

pub fn bell(n: usize) -> BigUint {
    bell_sequence(n).pop().unwrap()
}

/// Fibonacci numbers with `F_0 = F_1 = 1`.
pub fn fibonacci_sequence(n_max: usize) -> Vec<BigUint> {
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(BigUint::one());
    if n_max == 0 {
        return out;
    }
    out.push(BigUint::one());
    for n in 2..=n_max {
        let s = &out[n - 1] + &out[n - 2];
        out.push(s);
    }
    out
}

pub fn fibonacci(n: usize) -> BigUint {
    fibonacci_sequence(n).pop().unwrap()
}

/// The triangle `f(n, k)` for `0 <= k <= n <= n_max` and its row sums
/// `f(n)`, filled by the boundary recurrence:
///
/// * `f(0, 0) = 1`, `f(n, 0) = 0` for `n >= 1`
/// * `f(n, 1) = f(n - 1)` for `n >= 1`, and `f(2, 2) = f(1)`
/// * `f(n, 2) = 0` for `n >= 3`
/// * `f(n, k) = f(n, k-1) + f(n-1, k-1) + f(n-2, k-2)` for `3 <= k <= n`,
///   reading already-fixed boundary values for the earlier columns.
///
/// The boundary equations take precedence at `k <= 2`; the recurrence then
/// reproduces `f(n, n) = f(n - 1)` on its own, which the tests assert.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    rows: Vec<Vec<BigUint>>,
    totals: Vec<BigUint>,
}

impl CountTable {
    pub fn build(n_max: usize) -> Self {
        let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(n_max + 1);
        let mut totals: Vec<BigUint> = Vec::with_capacity(n_max + 1);
        rows.push(vec![BigUint::one()]);
        totals.push(BigUint::one());
        for n in 1..=n_max {
            let mut row = vec![BigUint::zero(); n + 1];
            row[1] = totals[n - 1].clone();
            if n == 2 {
                row[2] = totals[1].clone();
            }
            for k in 3..=n {
                let mut v = row[k - 1].clone();
                v += &rows[n - 1][k - 1];
                v += &rows[n - 2][k - 2];
                row[k] = v;
            }
            let total = row.iter().fold(BigUint::zero(), |acc, v| acc + v);
            rows.push(row);
            totals.push(total);
        }
        CountTable { rows, totals }
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// `f(n, k)`.
    pub fn value(&self, n: usize, k: usize) -> &BigUint {
        &self.rows[n][k]
    }

    pub fn row(&self, n: usize) -> &[BigUint] {
        &self.rows[n]
    }

    /// `f(0), .., f(n_max)`.
    pub fn totals(&self) -> &[BigUint] {
        &self.totals
    }
}

/// The triangle `c(k, m)` of the convolution recurrence
/// `c(k, m) = c(k-1, m-1) + c(k-1, m) + c(k-2, m)` with `c(2, 0) = 1` and
/// `c(k, m) = 0` outside `k >= 2, 0 <= m <= k - 2`. Row `k` holds the
/// entries `m = 0, .., k - 2`; it equals the convolved Fibonacci triangle
/// entry for entry, which the tests assert against the series route.
pub fn convolution_triangle(k_max: usize) -> Vec<Vec<BigUint>> {
    let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(k_max + 1);
    for k in 0..=k_max {
        let width = k.saturating_sub(1);
        let mut row = Vec::with_capacity(width);
        for m in 0..width {
            let v = if k == 2 {
                BigUint::one()
            } else {
                let fetch = |kk: usize, mm: isize| -> BigUint {
                    if mm < 0 {
                        return BigUint::zero();
                    }
                    rows[kk].get(mm as usize).cloned().unwrap_or_default()
                };
                fetch(k - 1, m as isize - 1) + fetch(k - 1, m as isize) + fetch(k - 2, m as isize)
            };
            row.push(v);
        }
        rows.push(row);
    }
    rows
}

fn convolve_truncated(a: &[BigUint], b: &[BigUint], deg: usize) -> Vec<BigUint> {
    let mut out = vec![BigUint::zero(); deg + 1];
    for (i, ai) in a.iter().enumerate().take(deg + 1) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(deg + 1 - i) {
            out[i + j] += ai * bj;
        }
    }
    out
}

/// The convolved Fibonacci number `a(n, k)`: the coefficient of `x^n` in
/// `x^(k+2) / (1 - x - x^2)^(k+1)`, computed by truncated series powers;
/// zero whenever `n < k + 2`.
pub fn convolved_fibonacci(n: usize, k: usize) -> BigUint {
    if n < k + 2 {
        return BigUint::zero();
    }
    let deg = n - k - 2;
    let fib = fibonacci_sequence(deg);
    let mut pow = vec![BigUint::one()];
    for _ in 0..=k {
        pow = convolve_truncated(&pow, &fib, deg);
    }
    pow[deg].clone()
}

/// Columns of the convolved Fibonacci triangle: `columns[m][n] = a(n, m)`
/// for `n < size`, derived column from column by one more convolution with
/// the Fibonacci series and a shift.
pub fn convolved_fibonacci_columns(size: usize) -> Vec<Vec<BigUint>> {
    let fib = fibonacci_sequence(size);
    let mut cols = Vec::new();
    if size == 0 {
        return cols;
    }
    // column 0: a(n, 0) = F_{n-2}
    let mut cur = vec![BigUint::zero(); size];
    for n in 2..size {
        cur[n] = fib[n - 2].clone();
    }
    for m in 0..size {
        cols.push(cur.clone());
        // column m+1 = x * fib * column m
        let mut next = vec![BigUint::zero(); size];
        for n in 1..size {
            let mut acc = BigUint::zero();
            for (j, fj) in fib.iter().enumerate().take(n) {
                acc += fj * &cur[n - 1 - j];
            }
            next[n] = acc;
        }
        if m + 1 < size {
            cur = next;
        }
    }
    cols
}

/// `f(0), .., f(n_max)` by the convolution route: for `n >= k >= 2`,
///
/// `f(n, k) = sum_{m} c(k - 1, m) f(n - k + m) + [n = k] F_{k-2}`,
///
/// where row `k - 1` of the convolution triangle supplies exactly the
/// coefficients `m = 0, .., k - 3`, together with the `k <= 1` boundary
/// equations. Must agree with `CountTable::build`.
pub fn totals_by_convolution(n_max: usize) -> Vec<BigUint> {
    let fib = fibonacci_sequence(n_max.max(2));
    let c = convolution_triangle(n_max.max(2));
    let mut totals: Vec<BigUint> = vec![BigUint::one()];
    for n in 1..=n_max {
        let mut sum = totals[n - 1].clone();
        for k in 2..=n {
            let mut v = BigUint::zero();
            for (m, cm) in c[k - 1].iter().enumerate() {
                v += cm * &totals[n - k + m];
            }
            if n == k {
                v += &fib[k - 2];
            }
            sum += v;
        }
        totals.push(sum);
    }
    totals
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nums(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn bell_values() {
        assert_eq!(
            bell_sequence(10),
            nums(&[1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975])
        );
        assert_eq!(bell(0), BigUint::one());
        assert_eq!(bell(5), BigUint::from(52u32));
    }

    #[test]
    fn fibonacci_values() {
        assert_eq!(fibonacci_sequence(7), nums(&[1, 1, 2, 3, 5, 8, 13, 21]));
        assert_eq!(fibonacci(0), BigUint::one());
        assert_eq!(fibonacci(5), BigUint::from(8u32));
    }

    #[test]
    fn table_totals_match_the_known_sequence() {
        let t = CountTable::build(10);
        assert_eq!(
            t.totals(),
            &nums(&[1, 1, 2, 4, 9, 23, 66, 209, 718, 2645, 10373])[..]
        );
        assert_eq!(t.value(1, 1), &BigUint::one());
        assert_eq!(t.value(2, 2), &BigUint::one());
        assert_eq!(t.value(5, 4), &BigUint::from(3u32));
        assert!(t.value(7, 2).is_zero());
    }

    #[test]
    fn recurrence_reproduces_the_diagonal_boundary() {
        // f(n, n) = f(n - 1) comes out of the general recurrence
        let t = CountTable::build(20);
        for n in 1..=20 {
            assert_eq!(t.value(n, n), &t.totals()[n - 1], "n = {n}");
        }
    }

    #[test]
    fn convolution_triangle_small_rows() {
        let c = convolution_triangle(7);
        assert!(c[0].is_empty() && c[1].is_empty());
        assert_eq!(c[2], nums(&[1]));
        assert_eq!(c[3], nums(&[1, 1]));
        assert_eq!(c[4], nums(&[2, 2, 1]));
        assert_eq!(c[5], nums(&[3, 5, 3, 1]));
        assert_eq!(c[6], nums(&[5, 10, 9, 4, 1]));
        assert_eq!(c[7], nums(&[8, 20, 22, 14, 5, 1]));
    }

    #[test]
    fn convolved_fibonacci_examples() {
        assert_eq!(convolved_fibonacci(2, 0), BigUint::one());
        assert_eq!(convolved_fibonacci(4, 1), BigUint::from(2u32));
        assert_eq!(convolved_fibonacci(6, 2), BigUint::from(9u32));
        assert!(convolved_fibonacci(3, 2).is_zero());
        assert!(convolved_fibonacci(0, 0).is_zero());
        for n in 2..=12 {
            assert_eq!(convolved_fibonacci(n, 0), fibonacci(n - 2), "n = {n}");
        }
    }

    #[test]
    fn convolution_recurrence_equals_the_series_route() {
        let c = convolution_triangle(14);
        for k in 0..=14usize {
            for m in 0..k.saturating_sub(1) {
                assert_eq!(c[k][m], convolved_fibonacci(k, m), "k = {k}, m = {m}");
            }
        }
    }

    #[test]
    fn column_builder_matches_pointwise() {
        let cols = convolved_fibonacci_columns(12);
        for (m, col) in cols.iter().enumerate() {
            for (n, v) in col.iter().enumerate() {
                assert_eq!(v, &convolved_fibonacci(n, m), "n = {n}, m = {m}");
            }
        }
    }

    #[test]
    fn both_total_routes_agree() {
        let a = CountTable::build(30);
        let b = totals_by_convolution(30);
        assert_eq!(a.totals(), &b[..]);
    }

    #[test]
    fn bell_growth_sanity() {
        // B_{2n} > B_n^2 at desk scale
        let b = bell_sequence(16);
        for n in 2..=8 {
            assert!(b[2 * n] > &b[n] * &b[n], "n = {n}");
        }
    }
}
