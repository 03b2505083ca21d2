use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::dpoly::{count_terms, fmt_int_poly};
use super::{fmt_bigrat, parse_bigrat, BigRat, DPoly};
use crate::error::{Error, Result};

/// Element of Q(d): a reduced ratio of polynomials in the Jack parameter.
///
/// Canonical form: `gcd(num, den) = 1` and `den` is a primitive integer
/// polynomial with positive leading coefficient, so equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "DRatRepr", try_from = "DRatRepr")]
pub struct DRat {
    num: DPoly,
    den: DPoly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn drat_arith(a: &DRat, b: &DRat, op: ArithOp) -> Result<DRat> {
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => a.checked_div(b)?,
    })
}

impl DRat {
    pub fn zero() -> Self {
        DRat {
            num: DPoly::zero(),
            den: DPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_bigrat(BigRat::from_integer(n.into()))
    }

    pub fn from_frac(p: i64, q: i64) -> Self {
        Self::from_bigrat(BigRat::new(p.into(), q.into()))
    }

    pub fn from_bigrat(c: BigRat) -> Self {
        DRat {
            num: DPoly::constant(c),
            den: DPoly::one(),
        }
    }

    /// The symbolic parameter `d`.
    pub fn d() -> Self {
        Self::from_dpoly(DPoly::var())
    }

    pub fn from_dpoly(p: DPoly) -> Self {
        DRat {
            num: p,
            den: DPoly::one(),
        }
    }

    pub fn new(num: DPoly, den: DPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: DPoly, den: DPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_constant() {
            let c = den.constant_value().unwrap();
            return DRat {
                num: num.scale(&c.recip()),
                den: DPoly::one(),
            };
        }
        let g = num.gcd(&den);
        if g.is_one() {
            Self::normalize(num, den)
        } else {
            Self::normalize(num.exact_div(&g), den.exact_div(&g))
        }
    }

    /// Rescales an already coprime pair so that `den` is primitive.
    fn normalize(num: DPoly, den: DPoly) -> Self {
        let (content, prim) = den.primitive_part();
        let den = DPoly::from_coeffs(prim.into_iter().map(BigRat::from_integer).collect());
        let num = if content.is_one() {
            num
        } else {
            num.scale(&content.recip())
        };
        DRat { num, den }
    }

    pub fn num(&self) -> &DPoly {
        &self.num
    }

    pub fn den(&self) -> &DPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The rational value when this element does not depend on `d`.
    pub fn as_constant(&self) -> Option<BigRat> {
        if self.den.is_one() {
            self.num.constant_value()
        } else {
            None
        }
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn checked_div(&self, rhs: &DRat) -> Result<DRat> {
        Ok(self * &rhs.inv()?)
    }

    pub fn inv(&self) -> Result<DRat> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn scale(&self, c: &BigRat) -> DRat {
        if c.is_zero() {
            return DRat::zero();
        }
        DRat {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, n: u32) -> DRat {
        DRat {
            num: self.num.pow(n),
            den: self.den.pow(n),
        }
    }

    /// Leading numerator coefficient is negative (the denominator's is positive).
    pub fn is_negative(&self) -> bool {
        self.num.leading().is_some_and(|c| c.is_negative())
    }

    /// Exact value at `d = d0`.
    pub fn eval(&self, d0: &BigRat) -> Result<BigRat> {
        if d0.is_zero() {
            return Err(Error::SpecializationZeroD);
        }
        let den = self.den.eval(d0);
        if den.is_zero() {
            return Err(Error::PoleAtSpecialization(format!(
                "denominator {} vanishes at d = {}",
                self.den,
                fmt_bigrat(d0)
            )));
        }
        Ok(self.num.eval(d0) / den)
    }

    pub fn specialize(&self, d0: &BigRat) -> Result<DRat> {
        self.eval(d0).map(DRat::from_bigrat)
    }

    /// Integer numerator and denominator coefficient lists with no common content.
    pub fn integer_parts(&self) -> (Vec<BigInt>, Vec<BigInt>) {
        let lcm = self
            .num
            .coeffs()
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut num: Vec<BigInt> = self
            .num
            .coeffs()
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let mut den: Vec<BigInt> = self.den.coeffs().iter().map(|c| c.numer() * &lcm).collect();
        let g = num
            .iter()
            .chain(den.iter())
            .fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if !g.is_zero() && !g.is_one() {
            num.iter_mut().for_each(|c| *c = &*c / &g);
            den.iter_mut().for_each(|c| *c = &*c / &g);
        }
        if num.is_empty() {
            num.push(BigInt::zero());
        }
        (num, den)
    }

    /// True when the textual form needs parentheses as a factor.
    pub fn is_compound(&self) -> bool {
        let (num, den) = self.integer_parts();
        count_terms(&num) > 1 || count_terms(&den) > 1 || !den_is_one(&den)
    }

    pub fn to_latex(&self) -> String {
        let (num, den) = self.integer_parts();
        if den_is_one(&den) {
            fmt_int_poly(&num)
        } else {
            format!("\\frac{{{}}}{{{}}}", fmt_int_poly(&num), fmt_int_poly(&den))
        }
    }
}

fn den_is_one(den: &[BigInt]) -> bool {
    den.len() == 1 && den[0].is_one()
}

impl fmt::Display for DRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (num, den) = self.integer_parts();
        let n = fmt_int_poly(&num);
        if den_is_one(&den) {
            return f.write_str(&n);
        }
        let d = fmt_int_poly(&den);
        let n = if count_terms(&num) > 1 {
            format!("({n})")
        } else {
            n
        };
        let bare =
            den.len() == 1 || (count_terms(&den) == 1 && den.last().is_some_and(|c| c.is_one()));
        let d = if bare { d } else { format!("({d})") };
        write!(f, "{n}/{d}")
    }
}

impl Add for &DRat {
    type Output = DRat;

    fn add(self, rhs: &DRat) -> DRat {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_one() {
                return DRat::from_dpoly(num);
            }
            return DRat::reduce(num, self.den.clone());
        }
        let g = self.den.gcd(&rhs.den);
        if g.is_one() {
            // coprime reduced denominators: the cross sum is already reduced
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            if num.is_zero() {
                return DRat::zero();
            }
            return DRat::normalize(num, &self.den * &rhs.den);
        }
        let a_rest = self.den.exact_div(&g);
        let b_rest = rhs.den.exact_div(&g);
        let num = &(&self.num * &b_rest) + &(&rhs.num * &a_rest);
        DRat::reduce(num, &self.den * &b_rest)
    }
}

impl Sub for &DRat {
    type Output = DRat;

    fn sub(self, rhs: &DRat) -> DRat {
        self + &(-rhs)
    }
}

impl Mul for &DRat {
    type Output = DRat;

    fn mul(self, rhs: &DRat) -> DRat {
        if self.is_zero() || rhs.is_zero() {
            return DRat::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return DRat::from_dpoly(&self.num * &rhs.num);
        }
        if let Some(c) = self.as_constant() {
            return rhs.scale(&c);
        }
        if let Some(c) = rhs.as_constant() {
            return self.scale(&c);
        }
        // cross-cancel before multiplying
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let (n1, d2) = if g1.is_one() {
            (self.num.clone(), rhs.den.clone())
        } else {
            (self.num.exact_div(&g1), rhs.den.exact_div(&g1))
        };
        let (n2, d1) = if g2.is_one() {
            (rhs.num.clone(), self.den.clone())
        } else {
            (rhs.num.exact_div(&g2), self.den.exact_div(&g2))
        };
        DRat::normalize(&n1 * &n2, &d1 * &d2)
    }
}

impl Neg for &DRat {
    type Output = DRat;

    fn neg(self) -> DRat {
        DRat {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for DRat {
    type Output = DRat;

    fn neg(self) -> DRat {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for DRat {
            type Output = DRat;
            fn $m(self, rhs: DRat) -> DRat {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&DRat> for DRat {
            type Output = DRat;
            fn $m(self, rhs: &DRat) -> DRat {
                (&self).$m(rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl std::ops::AddAssign<&DRat> for DRat {
    fn add_assign(&mut self, rhs: &DRat) {
        *self = &*self + rhs;
    }
}

impl std::ops::SubAssign<&DRat> for DRat {
    fn sub_assign(&mut self, rhs: &DRat) {
        *self = &*self - rhs;
    }
}

impl std::iter::Sum for DRat {
    fn sum<I: Iterator<Item = DRat>>(iter: I) -> DRat {
        iter.fold(DRat::zero(), |acc, x| &acc + &x)
    }
}

impl std::iter::Product for DRat {
    fn product<I: Iterator<Item = DRat>>(iter: I) -> DRat {
        iter.fold(DRat::one(), |acc, x| &acc * &x)
    }
}

impl From<i64> for DRat {
    fn from(n: i64) -> Self {
        DRat::from_int(n)
    }
}

/// Wire form: ascending coefficient lists as `"p/q"` strings.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DRatRepr {
    pub num: Vec<String>,
    pub den: Vec<String>,
}

impl From<DRat> for DRatRepr {
    fn from(x: DRat) -> Self {
        let side = |p: &DPoly| -> Vec<String> {
            if p.is_zero() {
                vec!["0".to_string()]
            } else {
                p.coeffs().iter().map(fmt_bigrat).collect()
            }
        };
        DRatRepr {
            num: side(&x.num),
            den: side(&x.den),
        }
    }
}

impl TryFrom<DRatRepr> for DRat {
    type Error = Error;

    fn try_from(r: DRatRepr) -> Result<Self> {
        let side = |v: &[String]| -> Result<DPoly> {
            Ok(DPoly::from_coeffs(
                v.iter().map(|s| parse_bigrat(s)).collect::<Result<_>>()?,
            ))
        };
        DRat::new(side(&r.num)?, side(&r.den)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> DPoly {
        DPoly::from_ints(c)
    }

    fn q(p: i64, d: i64) -> BigRat {
        BigRat::new(p.into(), d.into())
    }

    #[test]
    fn common_factor_cancels_on_construction() {
        // (2d^2+4d)/(d^2+2d) = 2
        let x = DRat::new(poly(&[0, 4, 2]), poly(&[0, 2, 1])).unwrap();
        assert_eq!(x, DRat::from_int(2));
    }

    #[test]
    fn multiplicative_identity() {
        let a = DRat::new(poly(&[1, 1]), poly(&[0, 1])).unwrap();
        assert_eq!(&a * &DRat::one(), a);
    }

    #[test]
    fn hand_addition_over_common_denominator() {
        // 2d/(d+2) + (2-d)/(d+2) = 1
        let a = DRat::new(poly(&[0, 2]), poly(&[2, 1])).unwrap();
        let b = DRat::new(poly(&[2, -1]), poly(&[2, 1])).unwrap();
        assert_eq!(&a + &b, DRat::one());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let a = DRat::d();
        assert_eq!(
            drat_arith(&a, &DRat::zero(), ArithOp::Div),
            Err(Error::DivisionByZero)
        );
        assert_eq!(
            DRat::new(poly(&[1]), DPoly::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn evaluation_examples() {
        let a = DRat::new(poly(&[0, 2]), poly(&[2, 1])).unwrap();
        assert_eq!(a.eval(&q(2, 1)).unwrap(), q(1, 1));

        let pole = DRat::new(poly(&[1]), poly(&[-1, 1])).unwrap();
        assert!(matches!(
            pole.eval(&q(1, 1)),
            Err(Error::PoleAtSpecialization(_))
        ));

        let b = DRat::new(poly(&[1, 0, 1]), poly(&[0, 1])).unwrap();
        assert_eq!(b.eval(&q(1, 2)).unwrap(), q(5, 2));

        assert_eq!(a.eval(&q(0, 1)), Err(Error::SpecializationZeroD));
    }

    #[test]
    fn denominator_is_primitive_with_positive_leading_coefficient() {
        let x = DRat::new(poly(&[3]), poly(&[-4, -6])).unwrap();
        assert_eq!(x.den(), &poly(&[2, 3]));
        assert_eq!(x.num(), &DPoly::constant(q(-3, 2)));
    }

    #[test]
    fn wire_form_matches_example() {
        let x = DRat::new(poly(&[0, 2]), poly(&[2, 1])).unwrap();
        let repr = DRatRepr::from(x.clone());
        assert_eq!(repr.num, vec!["0", "2"]);
        assert_eq!(repr.den, vec!["2", "1"]);
        assert_eq!(DRat::try_from(repr).unwrap(), x);
    }

    #[test]
    fn text_and_latex() {
        let x = DRat::new(poly(&[0, 2]), poly(&[2, 1])).unwrap();
        assert_eq!(x.to_string(), "2d/(d+2)");
        assert_eq!(x.to_latex(), "\\frac{2d}{d+2}");
        assert_eq!(DRat::d().scale(&q(1, 2)).to_string(), "d/2");
        assert_eq!(DRat::from_frac(-3, 4).to_string(), "-3/4");
    }
}
