//! Checks the functional equation for
//! `P(z, u, v1, v2, v3) = sum p_{n,k;a,b,c} z^n u^k v1^a v2^b v3^c`
//! on the truncation `n <= N`.
//!
//! With `w = v1 v2 v3`, `x = v1 v2`, `y = v3` the equation reads
//!
//! ```text
//! P = 1 + z u w + z^2 u w y
//!   + z u w / (1 - w) * (1 - z w / (1 - x)) * (P(z,u,w,1,1) - P(z,u,1,1,w))
//!   + z^2 u x y^2 / ((1 - x)(1 - y)) * (P(z,u,y,1,1) - P(z,u,1,1,w))
//!   + z^2 u x y^3 / ((1 - x)(1 - y)) * (P(zy,u,1,1,x) - P(zy,u,1,1,1))
//!   + z v2 y / (1 - v2) * (P - P(z,u,v1,1,v2 y))
//! ```
//!
//! Both sides are multiplied by `(1 - w)(1 - x)(1 - y)(1 - v2)`, which has
//! constant term 1, so the check stays polynomial and exact.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::recurrence::count_table;
use crate::error::{Error, Result};

pub const MAX_ORDER: usize = 10;

/// Exponents of `(z, u, v1, v2, v3)`.
type Mono = [u32; 5];

#[derive(Debug, Clone, Default, PartialEq, Eq)]
struct MPoly {
    terms: BTreeMap<Mono, BigInt>,
}

impl MPoly {
    fn from_terms(terms: &[(Mono, i64)]) -> MPoly {
        let mut p = MPoly::default();
        for &(m, c) in terms {
            p.add_term(m, BigInt::from(c));
        }
        p
    }

    fn add_term(&mut self, m: Mono, c: BigInt) {
        let e = self.terms.entry(m).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    fn add(&self, o: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    fn sub(&self, o: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, -c);
        }
        out
    }

    /// Product truncated to `z`-degree at most `order`.
    fn mul(&self, o: &MPoly, order: u32) -> MPoly {
        let mut out = MPoly::default();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                if m1[0] + m2[0] > order {
                    continue;
                }
                let m = std::array::from_fn(|i| m1[i] + m2[i]);
                out.add_term(m, c1 * c2);
            }
        }
        out
    }

    /// Substitutes each monomial through `f`.
    fn map(&self, f: impl Fn(Mono) -> Mono) -> MPoly {
        let mut out = MPoly::default();
        for (m, c) in &self.terms {
            out.add_term(f(*m), c.clone());
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctionalEquationReport {
    pub order: usize,
    /// Monomials appearing on either side.
    pub monomials: usize,
    /// Monomials whose coefficients differ.
    pub mismatches: usize,
}

impl FunctionalEquationReport {
    pub fn holds(&self) -> bool {
        self.mismatches == 0
    }
}

pub fn check_functional_equation(order: usize) -> Result<FunctionalEquationReport> {
    if order > MAX_ORDER {
        return Err(Error::TruncationTooLarge(order));
    }
    let (_, table) = count_table(order, true);
    let mut p = MPoly::from_terms(&[([0; 5], 1)]);
    for n in 1..=order {
        for (key, v) in table.entries(n) {
            let m = [key.n, key.k, key.a, key.b, key.c].map(|e| e as u32);
            p.add_term(m, BigInt::from(v));
        }
    }
    let z = order as u32;
    let mono = |e: Mono, c: i64| (e, c);
    let one = MPoly::from_terms(&[mono([0; 5], 1)]);
    let w = MPoly::from_terms(&[mono([0, 0, 1, 1, 1], 1)]);
    let x = MPoly::from_terms(&[mono([0, 0, 1, 1, 0], 1)]);
    let y = MPoly::from_terms(&[mono([0, 0, 0, 0, 1], 1)]);
    let v2 = MPoly::from_terms(&[mono([0, 0, 0, 1, 0], 1)]);
    let one_w = one.sub(&w);
    let one_x = one.sub(&x);
    let one_y = one.sub(&y);
    let one_v2 = one.sub(&v2);
    let prod = |fs: &[&MPoly]| fs.iter().fold(one.clone(), |acc, f| acc.mul(f, z));

    // Specializations of P.
    let p_w_1_1 = p.map(|[n, k, a, _, _]| [n, k, a, a, a]);
    let p_1_1_w = p.map(|[n, k, _, _, c]| [n, k, c, c, c]);
    let p_y_1_1 = p.map(|[n, k, a, _, _]| [n, k, 0, 0, a]);
    let p_zy_1_1_x = p.map(|[n, k, _, _, c]| [n, k, c, c, n]);
    let p_zy_1_1_1 = p.map(|[n, k, _, _, _]| [n, k, 0, 0, n]);
    let p_v1_1_v2y = p.map(|[n, k, a, _, c]| [n, k, a, c, c]);

    let d = prod(&[&one_w, &one_x, &one_y, &one_v2]);
    let lhs = d.mul(&p, z);

    let roots = MPoly::from_terms(&[
        mono([0; 5], 1),
        mono([1, 1, 1, 1, 1], 1),
        mono([2, 1, 1, 1, 2], 1),
    ]);
    let zuw = MPoly::from_terms(&[mono([1, 1, 1, 1, 1], 1)]);
    let zw = MPoly::from_terms(&[mono([1, 0, 1, 1, 1], 1)]);
    let z2uxy2 = MPoly::from_terms(&[mono([2, 1, 1, 1, 2], 1)]);
    let z2uxy3 = MPoly::from_terms(&[mono([2, 1, 1, 1, 3], 1)]);
    let zv2y = MPoly::from_terms(&[mono([1, 0, 0, 1, 1], 1)]);

    let single_run = prod(&[&zuw, &one_x.sub(&zw), &one_y, &one_v2]).mul(&p_w_1_1.sub(&p_1_1_w), z);
    let pair_low = prod(&[&z2uxy2, &one_w, &one_v2]).mul(&p_y_1_1.sub(&p_1_1_w), z);
    let pair_high = prod(&[&z2uxy3, &one_w, &one_v2]).mul(&p_zy_1_1_x.sub(&p_zy_1_1_1), z);
    let grow = prod(&[&zv2y, &one_w, &one_x, &one_y]).mul(&p.sub(&p_v1_1_v2y), z);
    let rhs = d
        .mul(&roots, z)
        .add(&single_run)
        .add(&pair_low)
        .add(&pair_high)
        .add(&grow);

    let diff = lhs.sub(&rhs);
    let mut support: std::collections::BTreeSet<Mono> = lhs.terms.keys().copied().collect();
    support.extend(rhs.terms.keys().copied());
    Ok(FunctionalEquationReport {
        order,
        monomials: support.len(),
        mismatches: diff.terms.len(),
    })
}
