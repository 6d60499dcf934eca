//! Exact polynomial, rational-function and truncated power-series arithmetic
//! over arbitrary-precision rationals.

mod bivariate;
mod eulerian;
mod partial;
mod poly;
mod rational;
mod truncated;

pub use bivariate::Bivariate;
pub use eulerian::{eulerian, eulerian_closed_form, eulerian_column_gf, eulerian_row};
pub use partial::{partial_fractions, PartialFractions, PfTerm};
pub use poly::Polynomial;
pub use rational::RationalFunction;
pub use truncated::TruncatedSeries;

use num_bigint::BigInt;
use num_rational::BigRational;

pub(crate) fn q(i: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(i))
}

pub(crate) fn fmt_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.to_integer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}
