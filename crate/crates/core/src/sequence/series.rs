use std::ops::{Add, Mul, Sub};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;

/// A power series kept through `z^degree`, exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>,
}

impl TruncatedSeries {
    pub fn zero(degree: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigRational::zero(); degree + 1],
        }
    }

    /// Coefficients beyond `degree` are dropped, missing ones are zero.
    pub fn from_coeffs(degree: usize, coeffs: impl IntoIterator<Item = BigRational>) -> Self {
        let mut s = Self::zero(degree);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c;
        }
        s
    }

    /// `Σ_{k≥1} c_k z^k` from counts `c_1, c_2, …`.
    pub fn from_counts<'a>(degree: usize, counts: impl IntoIterator<Item = &'a BigUint>) -> Self {
        let body = counts
            .into_iter()
            .map(|c| BigRational::from_integer(BigInt::from(c.clone())));
        Self::from_coeffs(degree, std::iter::once(BigRational::zero()).chain(body))
    }

    /// `c · z^power`.
    pub fn monomial(degree: usize, power: usize, c: BigRational) -> Self {
        let mut s = Self::zero(degree);
        if power <= degree {
            s.coeffs[power] = c;
        }
        s
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &BigRational {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// `s(c · z^power)`.
    pub fn substitute(&self, c: &BigRational, power: usize) -> Self {
        let mut out = Self::zero(self.degree());
        let mut scale = BigRational::from_integer(1.into());
        for (i, a) in self.coeffs.iter().enumerate() {
            if i * power > self.degree() {
                break;
            }
            out.coeffs[i * power] = a * &scale;
            scale *= c;
        }
        out
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.degree(), rhs.degree());
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.degree(), rhs.degree());
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.degree(), rhs.degree());
        let n = self.degree();
        let mut out = TruncatedSeries::zero(n);
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in rhs.coeffs[..=n - i].iter().enumerate() {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn geometric_inverse() {
        // (1 − z) · Σ z^k = 1 through the truncation degree.
        let one_minus_z = TruncatedSeries::from_coeffs(6, [q(1), q(-1)]);
        let geo = TruncatedSeries::from_coeffs(6, std::iter::repeat(q(1)));
        assert_eq!(&one_minus_z * &geo, TruncatedSeries::monomial(6, 0, q(1)));
    }

    #[test]
    fn substitution() {
        let s = TruncatedSeries::from_coeffs(5, [q(1), q(2), q(3)]);
        let t = s.substitute(&q(-1), 2);
        assert_eq!(t.coeffs(), &[q(1), q(0), q(-2), q(0), q(3), q(0)]);
    }
}
