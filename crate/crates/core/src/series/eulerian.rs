use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::poly::Polynomial;
use super::rational::RationalFunction;
use super::q;

/// `row[k-1] = <n, k>` for `k = 1..=n`, by the insertion recurrence
/// `<n+1, k> = (n+2-k) <n, k-1> + k <n, k>`: placing `n+1` at the end of
/// one of the `k` runs keeps the run count, and each of the other
/// `n+2-k` slots of a `(k-1)`-run permutation opens a new run.
pub fn eulerian_row(n: usize) -> Vec<BigUint> {
    let mut row = vec![BigUint::one()];
    for m in 1..n {
        // row holds <m, 1..=m>; build <m+1, 1..=m+1>.
        let next = (1..=m + 1)
            .map(|k| {
                let left = if k >= 2 {
                    &row[k - 2] * BigUint::from(m + 2 - k)
                } else {
                    BigUint::zero()
                };
                let stay = row.get(k - 1).map_or_else(BigUint::zero, |v| v * BigUint::from(k));
                left + stay
            })
            .collect();
        row = next;
    }
    row
}

/// Number of permutations of size `n` with exactly `k` runs.
pub fn eulerian(n: usize, k: usize) -> BigUint {
    if k == 0 || k > n {
        return BigUint::zero();
    }
    eulerian_row(n).swap_remove(k - 1)
}

/// `sum_{j=0}^{k} (-1)^j (k-j)^n C(n+1, j)`.
pub fn eulerian_closed_form(n: usize, k: usize) -> BigInt {
    let mut binom = BigInt::one();
    let mut total = BigInt::zero();
    for j in 0..=k {
        let term = &binom * BigInt::from(k - j).pow(n as u32);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
        binom = binom * BigInt::from(n + 1 - j) / BigInt::from(j + 1);
    }
    total
}

/// Column generating function `sum_n <n, k> z^n`.
pub fn eulerian_column_gf(k: usize) -> RationalFunction {
    let k = k as i64;
    let mut acc = RationalFunction::new(Polynomial::one(), Polynomial::one_minus(k));
    for j in 1..k {
        let c = k - j;
        let sign = if j % 2 == 0 { 1 } else { -1 };
        let num = Polynomial::monomial(q(sign) * q(c).pow(j as i32 - 1), (j - 1) as usize);
        acc = acc.add(&RationalFunction::new(num, Polynomial::one_minus(c).pow(j as u32 + 1)));
    }
    acc
}
