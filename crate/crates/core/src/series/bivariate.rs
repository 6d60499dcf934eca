use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Bivariate rational function `N(x, y) / D(x, y)` with integer
/// coefficients, `coeffs[i][j]` being the coefficient of `x^i y^j`, and
/// `D(0, 0) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bivariate {
    pub num: Vec<Vec<BigInt>>,
    pub den: Vec<Vec<BigInt>>,
}

impl Bivariate {
    pub fn from_terms(num: &[(usize, usize, i64)], den: &[(usize, usize, i64)]) -> Self {
        let dense = |terms: &[(usize, usize, i64)]| {
            let xi = terms.iter().map(|t| t.0).max().unwrap_or(0);
            let yj = terms.iter().map(|t| t.1).max().unwrap_or(0);
            let mut m = vec![vec![BigInt::zero(); yj + 1]; xi + 1];
            for &(i, j, c) in terms {
                m[i][j] += BigInt::from(c);
            }
            m
        };
        let out = Bivariate {
            num: dense(num),
            den: dense(den),
        };
        assert!(out.den[0][0].is_one(), "denominator must have constant term 1");
        out
    }

    /// `a[n][k] = [x^n y^k]` for `n <= order`, `k <= order`.
    pub fn coefficients(&self, order: usize) -> Vec<Vec<BigInt>> {
        let mut a = vec![vec![BigInt::zero(); order + 1]; order + 1];
        for n in 0..=order {
            for k in 0..=order {
                let mut c = self
                    .num
                    .get(n)
                    .and_then(|r| r.get(k))
                    .cloned()
                    .unwrap_or_else(BigInt::zero);
                for (i, row) in self.den.iter().enumerate().take(n + 1) {
                    for (j, d) in row.iter().enumerate().take(k + 1) {
                        if (i, j) != (0, 0) && !d.is_zero() {
                            c -= d * &a[n - i][k - j];
                        }
                    }
                }
                a[n][k] = c;
            }
        }
        a
    }

    /// Specialization `y = 1`, as coefficient lists in `x`.
    pub fn at_y_one(&self) -> (Vec<BigInt>, Vec<BigInt>) {
        let collapse = |m: &Vec<Vec<BigInt>>| m.iter().map(|r| r.iter().sum()).collect();
        (collapse(&self.num), collapse(&self.den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_in_two_variables() {
        // 1 / (1 - x - y): binomial coefficients.
        let f = Bivariate::from_terms(&[(0, 0, 1)], &[(0, 0, 1), (1, 0, -1), (0, 1, -1)]);
        let a = f.coefficients(4);
        assert_eq!(a[2][2], BigInt::from(6));
        assert_eq!(a[3][1], BigInt::from(4));
    }
}
