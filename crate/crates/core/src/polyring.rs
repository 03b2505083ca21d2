//! Sparse multivariate polynomials in `z_1..z_r` over Q(d).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalars::{int, DRat};

pub const DEFAULT_DEGREE_CAP: u32 = 64;

/// Exponent vector of length `r`, ordered graded-lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(r: usize) -> Self {
        Monomial(vec![0; r])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly {
    r: usize,
    terms: BTreeMap<Monomial, DRat>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

pub fn mp_arith(f: &MPoly, g: &MPoly, op: PolyOp) -> Result<MPoly> {
    match op {
        PolyOp::Add => f.add(g),
        PolyOp::Sub => f.sub(g),
        PolyOp::Mul => f.mul(g),
    }
}

impl MPoly {
    pub fn zero(r: usize) -> Self {
        MPoly {
            r,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(r: usize, c: DRat) -> Self {
        Self::term(Monomial::one(r), c)
    }

    pub fn one(r: usize) -> Self {
        Self::constant(r, DRat::one())
    }

    pub fn term(m: Monomial, c: DRat) -> Self {
        let mut p = Self::zero(m.0.len());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// The variable `z_j` (0-based).
    pub fn var(r: usize, j: usize) -> Result<Self> {
        if j >= r {
            return Err(Error::IndexOutOfRange {
                index: j,
                max: r - 1,
            });
        }
        let mut e = vec![0; r];
        e[j] = 1;
        Ok(Self::term(Monomial(e), DRat::one()))
    }

    pub fn from_terms(r: usize, terms: impl IntoIterator<Item = (Vec<u32>, DRat)>) -> Self {
        let mut p = Self::zero(r);
        for (e, c) in terms {
            assert_eq!(e.len(), r, "monomial arity");
            p.add_term(Monomial(e), &c);
        }
        p
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &DRat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exponents: &[u32]) -> DRat {
        self.terms
            .get(&Monomial(exponents.to_vec()))
            .cloned()
            .unwrap_or_else(DRat::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: &DRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    fn check_arity(&self, other: &MPoly) -> Result<()> {
        if self.r != other.r {
            return Err(Error::ArityMismatch {
                left: self.r,
                right: other.r,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &MPoly) -> Result<MPoly> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &MPoly) -> Result<MPoly> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MPoly {
        self.map_coeffs(|c| -c)
    }

    pub fn scale(&self, s: &DRat) -> MPoly {
        if s.is_zero() {
            return MPoly::zero(self.r);
        }
        self.map_coeffs(|c| c * s)
    }

    fn map_coeffs(&self, f: impl Fn(&DRat) -> DRat) -> MPoly {
        MPoly {
            r: self.r,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), f(c)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    pub fn mul(&self, other: &MPoly) -> Result<MPoly> {
        self.mul_with_cap(other, DEFAULT_DEGREE_CAP)
    }

    pub fn mul_with_cap(&self, other: &MPoly, cap: u32) -> Result<MPoly> {
        self.check_arity(other)?;
        let degree = self.total_degree().unwrap_or(0) + other.total_degree().unwrap_or(0);
        if degree > cap && !self.is_zero() && !other.is_zero() {
            return Err(Error::DegreeCapExceeded { degree, cap });
        }
        let mut out = MPoly::zero(self.r);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        Ok(out)
    }

    /// Partial derivative in `z_j` (0-based).
    pub fn diff(&self, j: usize) -> Result<MPoly> {
        if j >= self.r {
            return Err(Error::IndexOutOfRange {
                index: j,
                max: self.r.saturating_sub(1),
            });
        }
        let mut out = MPoly::zero(self.r);
        for (m, c) in &self.terms {
            let e = m.0[j];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[j] -= 1;
            out.terms.insert(m2, c.scale(&int(e as i64)));
        }
        Ok(out)
    }

    /// `z_j ∂_j` as a diagonal action.
    pub fn euler_component(&self, j: usize) -> MPoly {
        self.weighted(|e| e[j] as i64)
    }

    /// Multiplies each term by an integer weight computed from its exponents.
    pub(crate) fn weighted(&self, w: impl Fn(&[u32]) -> i64) -> MPoly {
        MPoly {
            r: self.r,
            terms: self
                .terms
                .iter()
                .filter_map(|(m, c)| {
                    let k = w(&m.0);
                    (k != 0).then(|| (m.clone(), c.scale(&int(k))))
                })
                .collect(),
        }
    }

    pub fn eval(&self, point: &[DRat]) -> Result<DRat> {
        if point.len() != self.r {
            return Err(Error::ArityMismatch {
                left: self.r,
                right: point.len(),
            });
        }
        let mut powers: Vec<Vec<DRat>> =
            point.iter().map(|x| vec![DRat::one(), x.clone()]).collect();
        let mut acc = DRat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (j, &e) in m.0.iter().enumerate() {
                let e = e as usize;
                while powers[j].len() <= e {
                    let next = powers[j].last().unwrap() * &point[j];
                    powers[j].push(next);
                }
                t = &t * &powers[j][e];
            }
            acc += &t;
        }
        Ok(acc)
    }

    /// Exact quotient `self / g`; any remainder is an error.
    pub fn exact_div(&self, g: &MPoly) -> Result<MPoly> {
        self.check_arity(g)?;
        let (lm_g, lc_g) = g.terms.last_key_value().ok_or(Error::DivisionByZero)?;
        let lc_inv = lc_g.inv()?;
        let mut rem = self.clone();
        let mut quot = MPoly::zero(self.r);
        while let Some((lm, lc)) = rem.terms.last_key_value() {
            let m = lm.div(lm_g).ok_or(Error::NotDivisible)?;
            let c = lc * &lc_inv;
            for (gm, gc) in &g.terms {
                rem.add_term(gm.mul(&m), &(-(gc * &c)));
            }
            quot.terms.insert(m, c);
        }
        Ok(quot)
    }

    /// `f(z_1 + c, …, z_r + c)`.
    pub fn shift_all(&self, c: &DRat) -> MPoly {
        let shifted_vars: Vec<MPoly> = (0..self.r)
            .map(|j| {
                let mut p = MPoly::var(self.r, j).expect("index in range");
                p.add_term(Monomial::one(self.r), c);
                p
            })
            .collect();
        let mut out = MPoly::zero(self.r);
        for (m, coeff) in &self.terms {
            let mut acc = MPoly::constant(self.r, coeff.clone());
            for (j, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    acc = acc
                        .mul_with_cap(&shifted_vars[j], u32::MAX)
                        .expect("same arity");
                }
            }
            for (mm, cc) in acc.terms {
                out.add_term(mm, &cc);
            }
        }
        out
    }

    /// Keeps only the terms of total degree at most `max`.
    pub fn truncate(&self, max: u32) -> MPoly {
        MPoly {
            r: self.r,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() <= max)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }
}

/// `prod_{i<j} (z_i - z_j)`.
pub fn vandermonde(r: usize) -> MPoly {
    let mut acc = MPoly::one(r);
    for i in 0..r {
        for j in i + 1..r {
            let lin = MPoly::var(r, i)
                .and_then(|zi| zi.sub(&MPoly::var(r, j)?))
                .expect("indices in range");
            acc = acc.mul_with_cap(&lin, u32::MAX).expect("same arity");
        }
    }
    acc
}

pub(crate) fn fmt_term_coeff(c: &DRat, first: bool, has_monomial: bool, out: &mut String) {
    let neg = c.is_negative();
    let abs = if neg { -c } else { c.clone() };
    if first {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    if !has_monomial {
        out.push_str(&abs.to_string());
    } else if !abs.is_one() {
        if abs.is_compound() {
            out.push_str(&format!("({abs})*"));
        } else {
            out.push_str(&format!("{abs}*"));
        }
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let vars: Vec<String> =
                m.0.iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(j, &e)| {
                        if e == 1 {
                            format!("z{}", j + 1)
                        } else {
                            format!("z{}^{}", j + 1, e)
                        }
                    })
                    .collect();
            fmt_term_coeff(c, i == 0, !vars.is_empty(), &mut out);
            out.push_str(&vars.join("*"));
        }
        f.write_str(&out)
    }
}
