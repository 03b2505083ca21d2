//! Exact scalars: arbitrary-precision rationals and the field Q(d) of
//! rational functions in the Jack parameter `d`.

mod dpoly;
mod drat;

pub use dpoly::DPoly;
pub use drat::{drat_arith, ArithOp, DRat, DRatRepr};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type BigRat = num_rational::BigRational;

/// Parses `"p"` or `"p/q"`.
pub fn parse_bigrat(s: &str) -> Result<BigRat> {
    let s = s.trim();
    let bad = || Error::InvalidInput(format!("not a rational literal: {s:?}"));
    match s.split_once('/') {
        None => s
            .parse::<BigInt>()
            .map(BigRat::from_integer)
            .map_err(|_| bad()),
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(BigRat::new(p, q))
        }
    }
}

pub fn fmt_bigrat(q: &BigRat) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn int(n: i64) -> BigRat {
    BigRat::from_integer(n.into())
}

pub fn rat(p: i64, q: i64) -> BigRat {
    BigRat::new(p.into(), q.into())
}
