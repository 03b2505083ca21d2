use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::BigRat;

/// Univariate polynomial in the parameter `d` with rational coefficients,
/// stored in ascending powers with trailing zeros stripped.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct DPoly {
    coeffs: Vec<BigRat>,
}

impl DPoly {
    pub fn zero() -> Self {
        DPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRat::one())
    }

    /// The monomial `d`.
    pub fn var() -> Self {
        DPoly {
            coeffs: vec![BigRat::zero(), BigRat::one()],
        }
    }

    pub fn constant(c: BigRat) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        DPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|&c| BigRat::from_integer(c.into()))
                .collect(),
        )
    }

    fn from_int_coeffs(coeffs: Vec<BigInt>) -> Self {
        Self::from_coeffs(coeffs.into_iter().map(BigRat::from_integer).collect())
    }

    /// `a + b*d`.
    pub fn linear(a: BigRat, b: BigRat) -> Self {
        Self::from_coeffs(vec![a, b])
    }

    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn constant_value(&self) -> Option<BigRat> {
        match self.coeffs.len() {
            0 => Some(BigRat::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<&BigRat> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &BigRat) -> DPoly {
        if c.is_zero() {
            return DPoly::zero();
        }
        DPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> DPoly {
        let mut acc = DPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, x: &BigRat) -> BigRat {
        let mut acc = BigRat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn monic(&self) -> DPoly {
        match self.leading() {
            None => DPoly::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// Quotient and remainder of Euclidean division; `divisor` must be nonzero.
    pub fn div_rem(&self, divisor: &DPoly) -> (DPoly, DPoly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (DPoly::zero(), self.clone());
        }
        let lc_inv = divisor.coeffs[dd].recip();
        let mut quot = vec![BigRat::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let q = &rem[k + dd] * &lc_inv;
            if !q.is_zero() {
                for (i, c) in divisor.coeffs.iter().enumerate() {
                    rem[k + i] -= &q * c;
                }
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        (DPoly::from_coeffs(quot), DPoly::from_coeffs(rem))
    }

    /// Division known to be exact.
    pub fn exact_div(&self, divisor: &DPoly) -> DPoly {
        let (q, r) = self.div_rem(divisor);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Splits `self = content * primitive` where `primitive` has coprime
    /// integer coefficients and a positive leading coefficient.
    pub fn primitive_part(&self) -> (BigRat, Vec<BigInt>) {
        if self.is_zero() {
            return (BigRat::zero(), Vec::new());
        }
        let lcm_den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm_den / c.denom()))
            .collect();
        let mut content = int_content(&ints);
        if ints.last().unwrap().is_negative() {
            content = -content;
        }
        let prim = ints.iter().map(|c| c / &content).collect();
        (BigRat::new(content, lcm_den), prim)
    }

    /// Monic greatest common divisor (zero only when both inputs are zero).
    pub fn gcd(&self, other: &DPoly) -> DPoly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        if self.is_constant() || other.is_constant() {
            return DPoly::one();
        }
        let (_, mut a) = self.primitive_part();
        let (_, mut b) = other.primitive_part();
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        // primitive polynomial remainder sequence over Z
        loop {
            let r = int_prem(&a, &b);
            if r.is_empty() {
                break;
            }
            if r.len() == 1 {
                return DPoly::one();
            }
            a = b;
            b = int_primitive(r);
        }
        DPoly::from_int_coeffs(b).monic()
    }
}

fn int_content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

fn int_primitive(p: Vec<BigInt>) -> Vec<BigInt> {
    let mut content = int_content(&p);
    if p.last().is_some_and(|c| c.is_negative()) {
        content = -content;
    }
    if content.is_one() {
        return p;
    }
    p.into_iter().map(|c| c / &content).collect()
}

fn trim_int(p: &mut Vec<BigInt>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

/// Pseudo-remainder of `a` by `b` (`b` nonzero, both ascending).
fn int_prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    trim_int(&mut r);
    while !r.is_empty() && r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + dr - db] -= &lr * bc;
        }
        trim_int(&mut r);
    }
    r
}

impl Add for &DPoly {
    type Output = DPoly;

    fn add(self, rhs: &DPoly) -> DPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        DPoly::from_coeffs(coeffs)
    }
}

impl Sub for &DPoly {
    type Output = DPoly;

    fn sub(self, rhs: &DPoly) -> DPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(n, BigRat::zero());
        for (c, s) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *c -= s;
        }
        DPoly::from_coeffs(coeffs)
    }
}

impl Mul for &DPoly {
    type Output = DPoly;

    fn mul(self, rhs: &DPoly) -> DPoly {
        if self.is_zero() || rhs.is_zero() {
            return DPoly::zero();
        }
        let mut coeffs = vec![BigRat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        DPoly::from_coeffs(coeffs)
    }
}

impl Neg for &DPoly {
    type Output = DPoly;

    fn neg(self) -> DPoly {
        DPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Integer-coefficient rendering, highest power first: `d^2+2d+1`.
pub(crate) fn fmt_int_poly(coeffs: &[BigInt]) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push(if neg { '-' } else { '+' });
        }
        let a = c.abs();
        if k == 0 || !a.is_one() {
            out.push_str(&a.to_string());
        }
        match k {
            0 => {}
            1 => out.push('d'),
            _ => {
                out.push_str("d^");
                out.push_str(&k.to_string());
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub(crate) fn count_terms(coeffs: &[BigInt]) -> usize {
    coeffs.iter().filter(|c| !c.is_zero()).count()
}

impl fmt::Display for DPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        if self.coeffs.iter().all(|c| c.is_integer()) {
            let ints: Vec<BigInt> = self.coeffs.iter().map(|c| c.to_integer()).collect();
            return f.write_str(&fmt_int_poly(&ints));
        }
        let (content, prim) = self.primitive_part();
        let body = fmt_int_poly(&prim);
        if content.is_one() {
            f.write_str(&body)
        } else {
            write!(f, "({content})*({body})")
        }
    }
}
