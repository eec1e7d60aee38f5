//! Exact truncated power series over the rationals, and the two
//! generating-function identities for the invertibility counts: the
//! bivariate functional equation and the kernel-method identity.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::counts::CountTable;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeriesError {
    /// Composing `f(g)` with `g(0) != 0` would need infinitely many terms
    /// of a truncation; reported instead of silently truncating.
    CompositionNotWellDefined,
    /// Square roots need a constant term that is a positive rational
    /// square.
    NotASquare,
    /// Division needs a unit constant term.
    DivisionByNonUnit,
}

impl core::fmt::Display for SeriesError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            SeriesError::CompositionNotWellDefined => {
                write!(f, "composition inner series has a nonzero constant term")
            }
            SeriesError::NotASquare => {
                write!(f, "constant term is not a positive rational square")
            }
            SeriesError::DivisionByNonUnit => write!(f, "division by a series with zero constant"),
        }
    }
}

impl core::error::Error for SeriesError {}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn rational_sqrt(v: &BigRational) -> Option<BigRational> {
    if v.is_negative() || v.is_zero() {
        return None;
    }
    let num = v.numer().magnitude();
    let den = v.denom().magnitude();
    let rn = num.sqrt();
    let rd = den.sqrt();
    if &(&rn * &rn) == num && &(&rd * &rd) == den {
        Some(BigRational::new(BigInt::from(rn), BigInt::from(rd)))
    } else {
        None
    }
}

/// A univariate power series truncated at `order`: coefficients of
/// `x^0, .., x^order`, all exact rationals. Binary operations truncate to
/// the smaller order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<BigRational>,
}

impl Series {
    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn constant(c: BigRational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn monomial(c: BigRational, exp: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exp <= order {
            s.coeffs[exp] = c;
        }
        s
    }

    pub fn from_integers(coeffs: &[i64], order: usize) -> Self {
        let mut s = Self::zero(order);
        for (i, &c) in coeffs.iter().enumerate().take(order + 1) {
            s.coeffs[i] = rat(c);
        }
        s
    }

    pub fn from_biguints(coeffs: &[BigUint], order: usize) -> Self {
        let mut s = Self::zero(order);
        for (i, c) in coeffs.iter().enumerate().take(order + 1) {
            s.coeffs[i] = BigRational::from_integer(BigInt::from(c.clone()));
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, exp: usize) -> &BigRational {
        &self.coeffs[exp]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn truncated(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.truncate(order + 1);
        coeffs.resize(order + 1, BigRational::zero());
        Series { coeffs }
    }

    pub fn add(&self, other: &Self) -> Self {
        let ord = self.order().min(other.order());
        let coeffs = (0..=ord)
            .map(|i| &self.coeffs[i] + &other.coeffs[i])
            .collect();
        Series { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let ord = self.order().min(other.order());
        let coeffs = (0..=ord)
            .map(|i| &self.coeffs[i] - &other.coeffs[i])
            .collect();
        Series { coeffs }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|v| v * c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let ord = self.order().min(other.order());
        let mut coeffs = vec![BigRational::zero(); ord + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(ord + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(ord + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Series { coeffs }
    }

    /// `self / other`, requiring a nonzero constant term in the divisor.
    pub fn div(&self, other: &Self) -> Result<Self, SeriesError> {
        if other.coeffs[0].is_zero() {
            return Err(SeriesError::DivisionByNonUnit);
        }
        let ord = self.order().min(other.order());
        let mut coeffs = vec![BigRational::zero(); ord + 1];
        for n in 0..=ord {
            let mut acc = self.coeffs[n].clone();
            for i in 0..n {
                acc -= &coeffs[i] * &other.coeffs[n - i];
            }
            coeffs[n] = acc / &other.coeffs[0];
        }
        Ok(Series { coeffs })
    }

    /// Divides by `x`; the constant term must vanish. Loses one order of
    /// precision.
    pub fn div_x(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::CompositionNotWellDefined);
        }
        Ok(Series {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    /// `self(inner)`; the inner series must have zero constant term so the
    /// truncated composition is finite.
    pub fn compose(&self, inner: &Self) -> Result<Self, SeriesError> {
        if !inner.coeffs[0].is_zero() {
            return Err(SeriesError::CompositionNotWellDefined);
        }
        let ord = self.order().min(inner.order());
        let inner_t = inner.truncated(ord);
        // Horner from the top: terms of self beyond ord contribute nothing
        // at or below x^ord because inner has valuation >= 1.
        let mut acc = Series::constant(self.coeffs[ord].clone(), ord);
        for k in (0..ord).rev() {
            acc = acc
                .mul(&inner_t)
                .add(&Series::constant(self.coeffs[k].clone(), ord));
        }
        Ok(acc)
    }

    /// Square root by Newton iteration, doubling the correct order each
    /// step; the constant term must be a positive rational square.
    pub fn sqrt(&self) -> Result<Self, SeriesError> {
        let root0 = rational_sqrt(&self.coeffs[0]).ok_or(SeriesError::NotASquare)?;
        let ord = self.order();
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let mut g = Series::constant(root0, 0);
        let mut prec = 0usize;
        while prec < ord {
            prec = (2 * prec + 1).min(ord);
            let f_t = self.truncated(prec);
            let g_t = g.truncated(prec);
            g = f_t.div(&g_t)?.add(&g_t).scale(&half);
        }
        Ok(g)
    }
}

/// A bivariate series truncated by total degree: `coeffs[i][j]` is the
/// coefficient of `x^i y^j`, kept for `i + j <= order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariateSeries {
    order: usize,
    coeffs: Vec<Vec<BigRational>>,
}

impl BivariateSeries {
    pub fn zero(order: usize) -> Self {
        BivariateSeries {
            order,
            coeffs: (0..=order)
                .map(|i| vec![BigRational::zero(); order - i + 1])
                .collect(),
        }
    }

    pub fn monomial(c: BigRational, i: usize, j: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if i + j <= order {
            s.coeffs[i][j] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, i: usize, j: usize) -> &BigRational {
        &self.coeffs[i][j]
    }

    /// Lifts a univariate series to `y`-degree zero.
    pub fn from_x_series(s: &Series, order: usize) -> Self {
        let mut out = Self::zero(order);
        for i in 0..=order.min(s.order()) {
            out.coeffs[i][0] = s.coeff(i).clone();
        }
        out
    }

    /// Substitutes `x -> x y` into a univariate series: `x^n` becomes
    /// `x^n y^n`.
    pub fn from_diagonal_series(s: &Series, order: usize) -> Self {
        let mut out = Self::zero(order);
        let mut n = 0;
        while 2 * n <= order && n <= s.order() {
            out.coeffs[n][n] = s.coeff(n).clone();
            n += 1;
        }
        out
    }

    fn truncated(&self, order: usize) -> Self {
        let mut out = Self::zero(order);
        for i in 0..=order.min(self.order) {
            for j in 0..=(order - i).min(self.order - i) {
                out.coeffs[i][j] = self.coeffs[i][j].clone();
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let ord = self.order.min(other.order);
        let mut out = self.truncated(ord);
        for i in 0..=ord {
            for j in 0..=(ord - i) {
                out.coeffs[i][j] += &other.coeffs[i][j];
            }
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let ord = self.order.min(other.order);
        let mut out = self.truncated(ord);
        for i in 0..=ord {
            for j in 0..=(ord - i) {
                out.coeffs[i][j] -= &other.coeffs[i][j];
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let ord = self.order.min(other.order);
        let mut out = Self::zero(ord);
        for i1 in 0..=self.order.min(ord) {
            for j1 in 0..=(self.order - i1).min(ord - i1) {
                let a = &self.coeffs[i1][j1];
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..=(ord - i1 - j1).min(other.order) {
                    for j2 in 0..=(ord - i1 - j1 - i2).min(other.order - i2) {
                        let b = &other.coeffs[i2][j2];
                        if !b.is_zero() {
                            out.coeffs[i1 + i2][j1 + j2] += a * b;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|r| r.iter().all(Zero::is_zero))
    }
}

/// The refined generating function `sum f(n, k) x^n y^k` truncated by
/// total degree.
pub fn refined_generating_function(order: usize) -> BivariateSeries {
    let table = CountTable::build(order);
    let mut phi = BivariateSeries::zero(order);
    for n in 0..=order {
        for k in 0..=n.min(order - n) {
            phi.coeffs[n][k] = BigRational::from_integer(BigInt::from(table.value(n, k).clone()));
        }
    }
    phi
}

/// The count generating function `F(x) = sum f(n) x^n` truncated at
/// `order`.
pub fn count_generating_function(order: usize) -> Series {
    let table = CountTable::build(order);
    Series::from_biguints(table.totals(), order)
}

/// Verifies, coefficient by coefficient up to total degree `order`, that
/// the refined generating function `P(x, y)` satisfies
///
/// `(1 - y - xy - x^2 y^2) P(x,y)
///   = 1 - y - xy + xy^2 - xy^2 P(xy, 1) + xy (1 - y - xy) P(x, 1)`.
pub fn functional_equation_check(order: usize) -> bool {
    let one = BivariateSeries::monomial(rat(1), 0, 0, order);
    let y = BivariateSeries::monomial(rat(1), 0, 1, order);
    let xy = BivariateSeries::monomial(rat(1), 1, 1, order);
    let xy2 = BivariateSeries::monomial(rat(1), 1, 2, order);
    let x2y2 = BivariateSeries::monomial(rat(1), 2, 2, order);

    let phi = refined_generating_function(order);
    let f = count_generating_function(order);
    let f_x = BivariateSeries::from_x_series(&f, order);
    let f_xy = BivariateSeries::from_diagonal_series(&f, order);

    let lhs = one.sub(&y).sub(&xy).sub(&x2y2).mul(&phi);
    let rhs = one
        .sub(&y)
        .sub(&xy)
        .add(&xy2)
        .sub(&xy2.mul(&f_xy))
        .add(&xy.mul(&one.sub(&y).sub(&xy)).mul(&f_x));
    lhs.sub(&rhs).is_zero()
}

/// The root series `s(x) = (sqrt(1 + 2x + 5x^2) - x - 1) / 2` at the given
/// truncation order.
pub fn kernel_root_series(order: usize) -> Result<Series, SeriesError> {
    let radicand = Series::from_integers(&[1, 2, 5], order);
    let root = radicand.sqrt()?;
    let x = Series::monomial(rat(1), 1, order);
    let one = Series::constant(rat(1), order);
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    Ok(root.sub(&x).sub(&one).scale(&half))
}

/// Verifies the kernel-method identity
///
/// `x + 1 + s(x) F(x) - F(s(x) / x) = 0`
///
/// up to degree `order`, where `s` is the root series above. `s` has a
/// double zero at the origin, so `s(x)/x` has zero constant term and the
/// composition is well defined; if that ever failed the error is reported
/// rather than truncated away.
pub fn kernel_equation_check(order: usize) -> Result<bool, SeriesError> {
    let work = order + 2;
    let s = kernel_root_series(work)?;
    let t = s.div_x()?;
    if !t.coeff(0).is_zero() {
        return Err(SeriesError::CompositionNotWellDefined);
    }
    let f = count_generating_function(work);
    let x = Series::monomial(rat(1), 1, work);
    let one = Series::constant(rat(1), work);
    let expr = x.add(&one).add(&s.mul(&f)).sub(&f.compose(&t)?);
    Ok((0..=order).all(|i| expr.coeff(i).is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_contract() {
        let radicand = Series::from_integers(&[1, 2, 5], 12);
        let root = radicand.sqrt().unwrap();
        assert_eq!(root.mul(&root), radicand);
        assert_eq!(root.coeff(0), &rat(1));
        assert_eq!(root.coeff(1), &rat(1));
        assert_eq!(root.coeff(2), &rat(2));
        assert_eq!(root.coeff(3), &rat(-2));
    }

    #[test]
    fn sqrt_rejects_non_squares() {
        let s = Series::from_integers(&[2, 1], 4);
        assert_eq!(s.sqrt().unwrap_err(), SeriesError::NotASquare);
        let z = Series::from_integers(&[0, 1], 4);
        assert_eq!(z.sqrt().unwrap_err(), SeriesError::NotASquare);
    }

    #[test]
    fn root_series_vanishes_doubly_at_zero() {
        let s = kernel_root_series(8).unwrap();
        assert!(s.coeff(0).is_zero());
        assert!(s.coeff(1).is_zero());
        assert_eq!(s.coeff(2), &rat(1));
        assert_eq!(s.coeff(3), &rat(-1));
        let t = s.div_x().unwrap();
        assert!(t.coeff(0).is_zero());
    }

    #[test]
    fn compose_requires_zero_constant() {
        let f = Series::from_integers(&[1, 1, 1], 4);
        let bad = Series::from_integers(&[1, 1], 4);
        assert_eq!(
            f.compose(&bad).unwrap_err(),
            SeriesError::CompositionNotWellDefined
        );
        let good = Series::from_integers(&[0, 1, 1], 4);
        // f(g) with f = 1 + x + x^2, g = x + x^2:
        // 1 + (x + x^2) + (x + x^2)^2 = 1 + x + 2x^2 + 2x^3 + x^4
        let got = f.compose(&good).unwrap();
        assert_eq!(got, Series::from_integers(&[1, 1, 2, 2, 1], 4));
    }

    #[test]
    fn division_roundtrip() {
        let a = Series::from_integers(&[1, 4, 2, 7, 1], 4);
        let b = Series::from_integers(&[2, 1, 3, 1, 5], 4);
        let q = a.div(&b).unwrap();
        assert_eq!(q.mul(&b), a);
        let zero_const = Series::from_integers(&[0, 1], 4);
        assert_eq!(
            a.div(&zero_const).unwrap_err(),
            SeriesError::DivisionByNonUnit
        );
    }

    #[test]
    fn functional_equation_holds_at_low_order() {
        assert!(functional_equation_check(8));
    }

    #[test]
    fn functional_equation_constant_and_xy_terms() {
        // spot checks of both sides at the smallest degrees
        let phi = refined_generating_function(4);
        assert_eq!(phi.coeff(0, 0), &rat(1));
        assert_eq!(phi.coeff(1, 1), &rat(1));
        assert!(functional_equation_check(2));
    }

    #[test]
    fn kernel_equation_holds_at_low_order() {
        assert_eq!(kernel_equation_check(6), Ok(true));
    }

    #[test]
    fn bivariate_multiplication_truncates_by_total_degree() {
        let xy = BivariateSeries::monomial(rat(1), 1, 1, 3);
        let sq = xy.mul(&xy);
        assert_eq!(sq.coeff(2, 1), &rat(0));
        // x^2 y^2 has total degree 4 > 3: truncated away entirely
        assert!(sq.is_zero());
    }
}
