use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::fmt_rational;
use super::poly::Polynomial;
use crate::error::{Error, Result};

/// Power series known up to and including `x^order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>,
}

impl TruncatedSeries {
    /// Order is `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series has order >= 0");
        TruncatedSeries { coeffs }
    }

    pub fn from_ints<I: IntoIterator<Item = i64>>(coeffs: I) -> Self {
        Self::from_coeffs(coeffs.into_iter().map(super::q).collect())
    }

    pub fn from_polynomial(p: &Polynomial, order: usize) -> Self {
        Self::from_coeffs((0..=order).map(|k| p.coeff(k)).collect())
    }

    pub fn constant(c: BigRational, order: usize) -> Self {
        let mut v = vec![BigRational::zero(); order + 1];
        v[0] = c;
        Self::from_coeffs(v)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(BigRational::one(), order)
    }

    /// The series `x` truncated at `order`.
    pub fn x(order: usize) -> Self {
        let mut v = vec![BigRational::zero(); order + 1];
        if order >= 1 {
            v[1] = BigRational::one();
        }
        Self::from_coeffs(v)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order());
        Self::from_coeffs(self.coeffs[..=order].to_vec())
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.order() != o.order() {
            return Err(Error::OrderMismatch(self.order(), o.order()));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(Self::from_coeffs(
            self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect(),
        ))
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(Self::from_coeffs(
            self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect(),
        ))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let n = self.coeffs.len();
        let mut v = vec![BigRational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs[..n - i].iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Ok(Self::from_coeffs(v))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one(self.order());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                out = out.mul(&base).expect("same order");
            }
            base = base.mul(&base).expect("same order");
            e >>= 1;
        }
        out
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::PoleAtOrigin);
        }
        let inv0 = BigRational::one() / c0;
        let mut out: Vec<BigRational> = vec![inv0.clone()];
        for n in 1..self.coeffs.len() {
            let mut s = BigRational::zero();
            for k in 1..=n {
                s += &self.coeffs[k] * &out[n - k];
            }
            out.push(-s * &inv0);
        }
        Ok(Self::from_coeffs(out))
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        self.mul(&o.inverse()?)
    }

    /// Square root with constant term 1, by Newton iteration
    /// `r <- (r + s/r) / 2`, doubling the known precision each round.
    pub fn sqrt(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::NonUnitConstantTerm);
        }
        let half = BigRational::new(1.into(), 2.into());
        let full = self.order();
        let mut r = Self::one(0);
        let mut prec = 0;
        while prec < full {
            prec = (2 * prec + 1).min(full);
            let r_ext = r.extend(prec);
            let s = self.truncate(prec);
            r = r_ext.add(&s.div(&r_ext)?)?.scale(&half);
        }
        Ok(r)
    }

    /// Zero-pads to a higher order.
    pub fn extend(&self, order: usize) -> Self {
        let mut v = self.coeffs.clone();
        v.resize(order + 1, BigRational::zero());
        v.truncate(order + 1);
        Self::from_coeffs(v)
    }

    /// `self(inner(x))`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        self.check(inner)?;
        if !inner.coeffs[0].is_zero() {
            return Err(Error::CompositionConstantTerm);
        }
        let order = self.order();
        let mut out = Self::constant(self.coeffs[order].clone(), order);
        for c in self.coeffs[..order].iter().rev() {
            out = out.mul(inner)?;
            out.coeffs[0] += c;
        }
        Ok(out)
    }

    /// `f(x) -> f(x^d)`, keeping the same order.
    pub fn dilate(&self, d: usize) -> Self {
        let order = self.order();
        let mut v = vec![BigRational::zero(); order + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            if k * d > order {
                break;
            }
            v[k * d] = c.clone();
        }
        Self::from_coeffs(v)
    }

    /// Multiplication by `x^k`, keeping the same order.
    pub fn shift(&self, k: usize) -> Self {
        let order = self.order();
        let mut v = vec![BigRational::zero(); order + 1];
        if k <= order {
            v[k..].clone_from_slice(&self.coeffs[..=order - k]);
        }
        Self::from_coeffs(v)
    }

    /// Division by `x^k`; the low `k` coefficients are discarded and the
    /// order drops by `k`.
    pub fn unshift(&self, k: usize) -> Self {
        Self::from_coeffs(self.coeffs[k..].to_vec())
    }

    pub fn parse(s: &str) -> Result<Self> {
        let coeffs = s
            .split(',')
            .map(|c| {
                c.trim().parse::<BigRational>().map_err(|e| Error::Parse {
                    what: "series",
                    detail: e.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_coeffs(coeffs))
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(fmt_rational).collect();
        f.write_str(&parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::q;

    #[test]
    fn product_and_inverse() {
        let a = TruncatedSeries::from_ints([1, 1, 0, 0]);
        let b = TruncatedSeries::from_ints([1, -1, 0, 0]);
        assert_eq!(a.mul(&b).unwrap(), TruncatedSeries::from_ints([1, 0, -1, 0]));
        assert_eq!(b.inverse().unwrap(), TruncatedSeries::from_ints([1, 1, 1, 1]));
    }

    #[test]
    fn sqrt_of_square() {
        let a = TruncatedSeries::from_ints([1, 2, 1, 0, 0, 0]);
        assert_eq!(a.sqrt().unwrap(), TruncatedSeries::from_ints([1, 1, 0, 0, 0, 0]));
        assert_eq!(
            TruncatedSeries::from_ints([2, 1]).sqrt(),
            Err(Error::NonUnitConstantTerm)
        );
    }

    #[test]
    fn central_binomials_from_sqrt() {
        // 1/sqrt(1-4x) = sum C(2n,n) x^n
        let s = TruncatedSeries::from_ints([1, -4, 0, 0, 0, 0]);
        let r = s.sqrt().unwrap().inverse().unwrap();
        assert_eq!(r, TruncatedSeries::from_ints([1, 2, 6, 20, 70, 252]));
    }

    #[test]
    fn composition() {
        let geo = TruncatedSeries::from_ints([1, 1, 1, 1, 1]);
        let two_x = TruncatedSeries::from_ints([0, 2, 0, 0, 0]);
        assert_eq!(geo.compose(&two_x).unwrap(), TruncatedSeries::from_ints([1, 2, 4, 8, 16]));
        assert_eq!(
            geo.compose(&TruncatedSeries::from_ints([1, 1, 0, 0, 0])),
            Err(Error::CompositionConstantTerm)
        );
        assert_eq!(geo.dilate(2), TruncatedSeries::from_ints([1, 0, 1, 0, 1]));
        assert_eq!(geo.scale(&q(3)).coeff(4), &q(3));
    }

    #[test]
    fn parse_round_trip() {
        let s = TruncatedSeries::from_coeffs(vec![q(1), BigRational::new(1.into(), 3.into()), q(-2)]);
        assert_eq!(TruncatedSeries::parse(&s.to_string()).unwrap(), s);
    }
}
