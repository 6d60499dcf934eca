use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::Polynomial;
use super::truncated::TruncatedSeries;
use super::fmt_rational;
use crate::error::{Error, Result};

/// A reduced fraction of polynomials in `z`.
///
/// Canonical form: `gcd(num, den) = 1` and the lowest nonzero coefficient
/// of the denominator is 1 (its constant term whenever that is nonzero), so
/// structural equality is equality of functions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RationalFunction {
                num,
                den: Polynomial::one(),
            };
        }
        let g = num.gcd(&den);
        let num = num.div_exact(&g).expect("gcd divides");
        let den = den.div_exact(&g).expect("gcd divides");
        let lead = den.coeff(den.valuation().expect("nonzero"));
        let inv = BigRational::one() / lead;
        RationalFunction {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_polynomial(Polynomial::zero())
    }

    pub fn one() -> Self {
        Self::from_polynomial(Polynomial::one())
    }

    /// `num / prod (1 - j z)^e`.
    pub fn from_factored(num: Polynomial, factors: &[(i64, u32)]) -> Self {
        let den = factors
            .iter()
            .fold(Polynomial::one(), |acc, &(j, e)| &acc * &Polynomial::one_minus(j).pow(e));
        Self::new(num, den)
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den)
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(&(&self.num * &o.den) - &(&o.num * &self.den), &self.den * &o.den)
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(&self.num * &o.num, &self.den * &o.den)
    }

    pub fn div(&self, o: &Self) -> Self {
        assert!(!o.num.is_zero(), "division by zero rational function");
        Self::new(&self.num * &o.den, &self.den * &o.num)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.num.scale(c), self.den.clone())
    }

    /// Maclaurin coefficients up to `z^order` inclusive.
    pub fn series(&self, order: usize) -> Result<TruncatedSeries> {
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            return Err(Error::PoleAtOrigin);
        }
        let mut out: Vec<BigRational> = Vec::with_capacity(order + 1);
        let dc = self.den.coeffs();
        for n in 0..=order {
            let mut c = self.num.coeff(n);
            for (k, dk) in dc.iter().enumerate().skip(1).take(n) {
                c -= dk * &out[n - k];
            }
            out.push(c / &d0);
        }
        Ok(TruncatedSeries::from_coeffs(out))
    }

    /// Factors the denominator as `prod (1 - j z)^e` by trial division over
    /// integer `j` with `1 <= |j| <= deg`; fails if anything is left over.
    pub fn denominator_factors(&self) -> Result<Vec<(i64, u32)>> {
        let mut rest = self.den.clone();
        let deg = rest.degree().unwrap_or(0) as i64;
        let mut factors = Vec::new();
        for j in (1..=deg).flat_map(|j| [j, -j]) {
            let f = Polynomial::one_minus(j);
            let mut e = 0;
            while let Some(qt) = rest.div_exact(&f) {
                rest = qt;
                e += 1;
            }
            if e > 0 {
                factors.push((j, e));
            }
        }
        if rest != Polynomial::one() {
            return Err(Error::NonSplittingDenominator);
        }
        factors.sort_by_key(|&(j, _)| (j.abs(), j < 0));
        Ok(factors)
    }

    /// Numerator scaled to primitive integer coefficients with the matching
    /// integral denominator: `(content, N)` with `self = content * N / den`.
    pub fn integral_numerator(&self) -> (BigRational, Vec<BigInt>) {
        use num_integer::Integer;
        let (m, ints) = self.num.integer_multiple();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let g = if g.is_zero() { BigInt::one() } else { g };
        let prim = ints.iter().map(|c| c / &g).collect();
        (BigRational::new(g, m), prim)
    }

    /// Dense export: numerator and denominator coefficient lists.
    pub fn to_dense_string(&self) -> String {
        let list = |p: &Polynomial| {
            let v: Vec<String> = if p.is_zero() {
                vec!["0".into()]
            } else {
                p.coeffs().iter().map(fmt_rational).collect()
            };
            format!("[{}]", v.join(", "))
        };
        format!("{} / {}", list(&self.num), list(&self.den))
    }

    /// Parses the output of [`Self::to_dense_string`].
    pub fn from_dense_string(s: &str) -> Result<Self> {
        let err = |d: &str| Error::Parse {
            what: "rational function",
            detail: d.to_string(),
        };
        let cut = s.find("] /").ok_or_else(|| err("expected `[..] / [..]`"))?;
        let (a, b) = (&s[..=cut], &s[cut + 3..]);
        let parse_list = |t: &str| -> Result<Polynomial> {
            let t = t.trim();
            let inner = t
                .strip_prefix('[')
                .and_then(|t| t.strip_suffix(']'))
                .ok_or_else(|| err("missing brackets"))?;
            let coeffs = inner
                .split(',')
                .map(|c| c.trim().parse::<BigRational>().map_err(|e| err(&e.to_string())))
                .collect::<Result<Vec<_>>>()?;
            Ok(Polynomial::new(coeffs))
        };
        let den = parse_list(b)?;
        if den.is_zero() {
            return Err(err("zero denominator"));
        }
        Ok(Self::new(parse_list(a)?, den))
    }
}

impl fmt::Display for RationalFunction {
    /// Integer numerator over a factored denominator when it splits into
    /// `(1 - jz)^e`, otherwise the dense quotient.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Ok(factors) = self.denominator_factors() else {
            return write!(f, "({}) / ({})", self.num, self.den);
        };
        let (content, prim) = self.integral_numerator();
        let numer = Polynomial::from_bigints(prim);
        if !content.is_one() {
            let c = if content.is_negative() && content.abs().is_one() {
                "-".to_string()
            } else {
                format!("{}*", fmt_rational(&content))
            };
            f.write_str(&c)?;
        }
        write!(f, "({numer})")?;
        if factors.is_empty() {
            return Ok(());
        }
        f.write_str(" / (")?;
        for (i, (j, e)) in factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            match j {
                1 => f.write_str("(1 - z)")?,
                -1 => f.write_str("(1 + z)")?,
                j if *j < 0 => write!(f, "(1 + {}z)", -j)?,
                j => write!(f, "(1 - {j}z)")?,
            }
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_cancels_common_factors() {
        let a = RationalFunction::new(
            Polynomial::from_ints([1, 0, -1]),
            Polynomial::from_ints([1, -2, 1]),
        );
        let b = RationalFunction::new(Polynomial::from_ints([1, 1]), Polynomial::from_ints([1, -1]));
        assert_eq!(a, b);
        let c = RationalFunction::new(Polynomial::from_ints([2, 2]), Polynomial::from_ints([2, -2]));
        assert_eq!(b, c);
    }

    #[test]
    fn geometric_series() {
        let f = RationalFunction::new(Polynomial::from_ints([0, 1]), Polynomial::from_ints([1, -1]));
        let s = f.series(4).unwrap();
        assert_eq!(s.coeffs(), Polynomial::from_ints([0, 1, 1, 1, 1]).coeffs());
        let pole = RationalFunction::new(Polynomial::one(), Polynomial::from_ints([0, 1]));
        assert_eq!(pole.series(3), Err(Error::PoleAtOrigin));
    }

    #[test]
    fn factoring_and_display() {
        let p2 = RationalFunction::from_factored(Polynomial::from_ints([0, 0, 0, 2]), &[(1, 2), (2, 1)]);
        assert_eq!(p2.denominator_factors().unwrap(), vec![(1, 2), (2, 1)]);
        assert_eq!(p2.to_string(), "2*(z^3) / ((1 - z)^2 (1 - 2z))");
        let rt = RationalFunction::from_dense_string(&p2.to_dense_string()).unwrap();
        assert_eq!(rt, p2);
        let irreducible = RationalFunction::new(Polynomial::one(), Polynomial::from_ints([1, -1, -1]));
        assert_eq!(irreducible.denominator_factors(), Err(Error::NonSplittingDenominator));
    }
}
