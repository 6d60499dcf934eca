use num_rational::BigRational;
use num_traits::Zero;

use super::poly::Polynomial;
use super::rational::RationalFunction;
use crate::error::{Error, Result};

/// `numerator / (1 - j z)^e` with `deg numerator < e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PfTerm {
    pub j: i64,
    pub e: u32,
    pub numerator: Polynomial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialFractions {
    pub polynomial_part: Polynomial,
    pub terms: Vec<PfTerm>,
}

impl PartialFractions {
    pub fn term(&self, j: i64) -> Option<&PfTerm> {
        self.terms.iter().find(|t| t.j == j)
    }

    pub fn recombine(&self) -> RationalFunction {
        self.terms.iter().fold(
            RationalFunction::from_polynomial(self.polynomial_part.clone()),
            |acc, t| {
                acc.add(&RationalFunction::new(
                    t.numerator.clone(),
                    Polynomial::one_minus(t.j).pow(t.e),
                ))
            },
        )
    }
}

/// Decomposes `f` over the factors `(1 - j z)^e` of its denominator.
pub fn partial_fractions(f: &RationalFunction) -> Result<PartialFractions> {
    let factors = f.denominator_factors()?;
    let num = f.numerator();
    let den = f.denominator();
    let deg_d = den.degree().unwrap_or(0);
    let deg_n = num.degree().unwrap_or(0);
    let poly_len = if num.is_zero() || deg_n < deg_d {
        0
    } else {
        deg_n - deg_d + 1
    };

    // One column per unknown: each is a polynomial whose coefficients are
    // matched against the numerator.
    let mut columns: Vec<Polynomial> = Vec::new();
    for i in 0..poly_len {
        columns.push(den.shift(i));
    }
    for &(j, e) in &factors {
        let cofactor = den
            .div_exact(&Polynomial::one_minus(j).pow(e))
            .expect("factor divides denominator");
        for c in 0..e as usize {
            columns.push(cofactor.shift(c));
        }
    }
    let unknowns = columns.len();
    let rows = unknowns.max(deg_n + 1);
    let mut m: Vec<Vec<BigRational>> = (0..rows)
        .map(|r| {
            let mut row: Vec<BigRational> = columns.iter().map(|c| c.coeff(r)).collect();
            row.push(num.coeff(r));
            row
        })
        .collect();
    let x = solve(&mut m, unknowns).ok_or(Error::SingularSystem)?;

    let polynomial_part = Polynomial::new(x[..poly_len].to_vec());
    let mut terms = Vec::new();
    let mut at = poly_len;
    for &(j, e) in &factors {
        let numerator = Polynomial::new(x[at..at + e as usize].to_vec());
        at += e as usize;
        terms.push(PfTerm { j, e, numerator });
    }
    Ok(PartialFractions {
        polynomial_part,
        terms,
    })
}

/// Gauss-Jordan on an augmented matrix; `None` if singular or inconsistent.
pub(crate) fn solve(m: &mut [Vec<BigRational>], unknowns: usize) -> Option<Vec<BigRational>> {
    let rows = m.len();
    let mut pivot_row = 0;
    for col in 0..unknowns {
        let p = (pivot_row..rows).find(|&r| !m[r][col].is_zero())?;
        m.swap(pivot_row, p);
        let inv = BigRational::from_integer(1.into()) / &m[pivot_row][col];
        for v in m[pivot_row].iter_mut() {
            *v *= &inv;
        }
        let pr = m[pivot_row].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != pivot_row && !row[col].is_zero() {
                let factor = row[col].clone();
                for (v, pv) in row.iter_mut().zip(&pr) {
                    *v -= &factor * pv;
                }
            }
        }
        pivot_row += 1;
    }
    if m[pivot_row..].iter().any(|row| !row[unknowns].is_zero()) {
        return None;
    }
    Some((0..unknowns).map(|i| m[i][unknowns].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p2_decomposition() {
        let p2 = RationalFunction::from_factored(Polynomial::from_ints([0, 0, 0, 2]), &[(1, 2), (2, 1)]);
        let pf = partial_fractions(&p2).unwrap();
        assert_eq!(pf.polynomial_part, Polynomial::from_ints([-1]));
        assert_eq!(pf.term(2).unwrap().numerator, Polynomial::from_ints([1]));
        assert_eq!(pf.term(1).unwrap().numerator, Polynomial::from_ints([0, -2]));
        assert_eq!(pf.recombine(), p2);
    }

    #[test]
    fn single_geometric_term() {
        let f = RationalFunction::new(Polynomial::one(), Polynomial::one_minus(1));
        let pf = partial_fractions(&f).unwrap();
        assert!(pf.polynomial_part.is_zero());
        assert_eq!(pf.terms.len(), 1);
        assert_eq!(pf.recombine(), f);
    }
}
