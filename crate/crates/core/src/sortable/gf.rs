//! Generating functions for 2-pop-stack-sortable permutations and the
//! coloured walk model.

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::series::{Bivariate, TruncatedSeries};

/// `A(x, y) = x (1 + x^2 y) / (1 - x - x y - x^2 y - 2 x^3 y^2)`, where
/// `[x^n y^k]` counts size-`n` 2-pop-stack-sortable permutations with `k`
/// ascents.
pub fn bivariate_gf() -> Bivariate {
    Bivariate::from_terms(
        &[(1, 0, 1), (3, 1, 1)],
        &[(0, 0, 1), (1, 0, -1), (1, 1, -1), (2, 1, -1), (3, 2, -2)],
    )
}

/// `a[n][k]` for `n, k <= max_n`.
pub fn a_table(max_n: usize) -> Vec<Vec<BigInt>> {
    bivariate_gf().coefficients(max_n)
}

/// `sqrt((1 + s)(1 - 7s))` to the given order.
fn root_disc(order: usize) -> TruncatedSeries {
    TruncatedSeries::from_ints([1, -6, -7])
        .extend(order)
        .sqrt()
        .expect("constant term 1")
}

/// `sqrt((1 + s)/(1 - 7s))`.
fn bridge_in(order: usize) -> TruncatedSeries {
    let one_plus = TruncatedSeries::from_ints([1, 1]).extend(order);
    one_plus.div(&root_disc(order)).expect("unit constant term")
}

/// `(1 - s - sqrt((1+s)(1-7s))) / (2s)`, optionally over `(1 + 2s)`.
fn step_in(order: usize, negative: bool) -> TruncatedSeries {
    let lin = TruncatedSeries::from_ints([1, -1]).extend(order + 1);
    let g = lin
        .sub(&root_disc(order + 1))
        .expect("same order")
        .unshift(1)
        .scale(&BigRational::new(1.into(), 2.into()));
    if negative {
        g.div(&TruncatedSeries::from_ints([1, 2]).extend(order)).expect("unit")
    } else {
        g
    }
}

/// `D_k(x) = sum_n a_{2n+k+1, n+k} x^n` for `k >= 0` and
/// `D_k(x) = sum_n a_{2n+|k|+1, n} x^n` for `k < 0`.
pub fn diagonal_gf(k: i64, order: usize) -> TruncatedSeries {
    let g = step_in(order, k < 0);
    bridge_in(order)
        .mul(&g.pow(k.unsigned_abs() as u32))
        .expect("same order")
}

/// The two closed forms for `a_{2n+1, n}`:
/// `sum_i (-1)^i 2^(n-i) C(2(n-i), n-i) C(n-1, i)` and
/// `sum_k C(n, 2k) C(2k, k) 2^(2k+1) 3^(n-2k-1) (2 - k/n)`.
pub fn diagonal_closed_forms(n: u64) -> (BigInt, BigInt) {
    assert!(n >= 1, "closed forms need n >= 1");
    let big = BigInt::from;
    let mut first = BigInt::zero();
    for i in 0..n {
        let m = n - i;
        let term = (big(2).pow(m as u32) * binomial(big(2 * m), big(m))) * binomial(big(n - 1), big(i));
        if i % 2 == 0 {
            first += term;
        } else {
            first -= term;
        }
    }
    // Scaled by 3n to stay integral: 3^(n-2k) (2n - k) replaces
    // 3^(n-2k-1) (2 - k/n).
    let mut scaled = BigInt::zero();
    for k in 0..=n / 2 {
        scaled += binomial(big(n), big(2 * k))
            * binomial(big(2 * k), big(k))
            * big(2).pow(2 * k as u32 + 1)
            * big(3).pow((n - 2 * k) as u32)
            * big(2 * n - k);
    }
    let second = BigRational::new(scaled, big(3 * n));
    assert!(second.is_integer(), "second closed form is integral");
    (first, second.to_integer())
}

/// Coefficients of `W(t, u, 2) = u(1 + t^2) / (u - t - t u^2 - t^2 u - 2 t^3 u^2)`:
/// `w[n][alt + n]` counts coloured walks of length `n` ending at `alt`.
///
/// Dividing through by `u` gives
/// `(1 - t/u - t u - t^2 - 2 t^3 u) W = 1 + t^2`, a recurrence in `n`.
pub fn walk_gf_coefficients(order: usize) -> Vec<Vec<BigInt>> {
    let mut w: Vec<Vec<BigInt>> = Vec::with_capacity(order + 1);
    let get = |w: &Vec<Vec<BigInt>>, n: isize, alt: i64| -> BigInt {
        if n < 0 {
            return BigInt::zero();
        }
        let n = n as usize;
        let idx = alt + n as i64;
        if idx < 0 || idx as usize >= w[n].len() {
            BigInt::zero()
        } else {
            w[n][idx as usize].clone()
        }
    };
    for n in 0..=order {
        let ni = n as isize;
        let mut row = vec![BigInt::zero(); 2 * n + 1];
        for (idx, slot) in row.iter_mut().enumerate() {
            let alt = idx as i64 - n as i64;
            let mut c = get(&w, ni - 1, alt + 1) + get(&w, ni - 1, alt - 1) + get(&w, ni - 2, alt);
            c += get(&w, ni - 3, alt - 1) * 2;
            if alt == 0 && (n == 0 || n == 2) {
                c += 1;
            }
            *slot = c;
        }
        w.push(row);
    }
    w
}

/// `E(t, 2) = (1 + t^2 - sqrt((1 + t^2)(1 - 7 t^2))) / (4 t^2)`: coloured
/// excursions by length.
pub fn excursion_gf(order: usize) -> TruncatedSeries {
    let half = order / 2;
    let e = TruncatedSeries::from_ints([1, 1])
        .extend(half + 1)
        .sub(&root_disc(half + 1))
        .expect("same order")
        .unshift(1)
        .scale(&BigRational::new(1.into(), 4.into()));
    e.extend(order).dilate(2)
}

/// `B(t, 2) = sqrt((1 + t^2) / (1 - 7 t^2))`: coloured bridges by length.
pub fn bridge_gf(order: usize) -> TruncatedSeries {
    bridge_in(order / 2).extend(order).dilate(2)
}

/// `W_{+k}(t, 2)` for `k >= 0` and `W_{-|k|}(t, 2)` for `k < 0`: coloured
/// walks ending at altitude `k`.
pub fn altitude_gf(k: i64, order: usize) -> TruncatedSeries {
    let d = diagonal_gf(k, order / 2 + 1).extend(order).dilate(2);
    d.extend(order + k.unsigned_abs() as usize)
        .shift(k.unsigned_abs() as usize)
        .truncate(order)
}

/// `E(t, 2)` again, through Motzkin numbers:
/// `E(t, y) = 1 + x M(x)` with `x = t^2 y / (1 - t^2)`.
pub fn excursion_gf_via_motzkin(order: usize) -> TruncatedSeries {
    let half = order / 2;
    // M(x) = (1 - x - sqrt(1 - 2x - 3x^2)) / (2 x^2)
    let m = TruncatedSeries::from_ints([1, -1])
        .extend(half + 2)
        .sub(&TruncatedSeries::from_ints([1, -2, -3]).extend(half + 2).sqrt().expect("unit"))
        .expect("same order")
        .unshift(2)
        .scale(&BigRational::new(1.into(), 2.into()));
    let x = TruncatedSeries::from_ints([0, 2])
        .extend(half)
        .div(&TruncatedSeries::from_ints([1, -1]).extend(half))
        .expect("unit");
    let inner = m.compose(&x).expect("zero constant term");
    let e = TruncatedSeries::one(half).add(&x.mul(&inner).expect("same")).expect("same");
    e.extend(order).dilate(2)
}

/// Paths from `(0,0)` or `(2,0)` with steps `(1,-1)`, `(1,1)`, `(2,0)` and a
/// bicoloured `(3,1)`: `paths[n][alt + n]` by end point `(n, alt)`.
pub fn alternate_model_counts(order: usize) -> Vec<Vec<BigInt>> {
    const STEPS: [(usize, i64, u32); 4] = [(1, -1, 1), (1, 1, 1), (2, 0, 1), (3, 1, 2)];
    let mut paths: Vec<Vec<BigInt>> = (0..=order).map(|n| vec![BigInt::zero(); 2 * n + 1]).collect();
    for start in [0usize, 2] {
        if start <= order {
            paths[start][start] += 1;
        }
    }
    for n in 0..=order {
        for idx in 0..paths[n].len() {
            let c = paths[n][idx].clone();
            if c.is_zero() {
                continue;
            }
            let alt = idx as i64 - n as i64;
            for (dx, dy, mult) in STEPS {
                let m = n + dx;
                if m > order {
                    continue;
                }
                let j = (alt + dy + m as i64) as usize;
                paths[m][j] += &c * mult;
            }
        }
    }
    paths
}

/// Excursions of the alternate model (start at the origin, stay weakly
/// above the axis, end on it), by length.
pub fn alternate_excursion_counts(order: usize) -> Vec<BigInt> {
    let mut f: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); order + 1]; order + 1];
    f[0][0] = BigInt::one();
    for n in 0..order {
        for h in 0..=n.min(order) {
            let c = f[n][h].clone();
            if c.is_zero() {
                continue;
            }
            if h > 0 {
                f[n + 1][h - 1] += &c;
            }
            if h < order {
                f[n + 1][h + 1] += &c;
            }
            if n + 2 <= order {
                f[n + 2][h] += &c;
            }
            if n + 3 <= order && h < order {
                f[n + 3][h + 1] += &c * 2;
            }
        }
    }
    f.iter().map(|row| row[0].clone()).collect()
}

/// `(1 - t^2 - sqrt((1 + t^2)(1 - 7 t^2))) / (2 t^2 (1 + 2 t^2))`.
pub fn alternate_excursion_gf(order: usize) -> TruncatedSeries {
    let half = order / 2;
    step_in(half, true).extend(order).dilate(2)
}

/// `[t^a u^b] W(t, u, 2) = [x^(a+1) y^((a+b)/2)] A(x, y)` for `a <= order`.
pub fn walk_substitution_holds(order: usize) -> bool {
    let w = walk_gf_coefficients(order);
    let a = a_table(order + 1);
    for (len, row) in w.iter().enumerate() {
        for (idx, c) in row.iter().enumerate() {
            let b = idx as i64 - len as i64;
            if (len as i64 + b) % 2 != 0 {
                if !c.is_zero() {
                    return false;
                }
                continue;
            }
            let k = ((len as i64 + b) / 2) as usize;
            if a[len + 1][k] != *c {
                return false;
            }
        }
    }
    // Nothing in A is left unmatched.
    (1..=order + 1).all(|n| {
        let row_total: BigInt = a[n].iter().sum();
        let walk_total: BigInt = w[n - 1].iter().sum();
        row_total == walk_total
    })
}
