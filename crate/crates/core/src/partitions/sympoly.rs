use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::Partition;
use crate::error::{Error, Result};
use crate::polyring::{fmt_term_coeff, MPoly};
use crate::scalars::{BigRat, DRat};

/// Symmetric polynomial in the monomial-symmetric basis `m_λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymPoly {
    r: usize,
    coeffs: BTreeMap<Partition, DRat>,
}

impl SymPoly {
    pub fn zero(r: usize) -> Self {
        SymPoly {
            r,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn constant(r: usize, c: DRat) -> Self {
        let mut p = Self::zero(r);
        p.add_term(Partition::zero(r), &c);
        p
    }

    pub fn one(r: usize) -> Self {
        Self::constant(r, DRat::one())
    }

    /// The basis element `m_λ`.
    pub fn monomial(lambda: &Partition) -> Self {
        let mut p = Self::zero(lambda.r());
        p.coeffs.insert(lambda.clone(), DRat::one());
        p
    }

    pub fn from_terms(r: usize, terms: impl IntoIterator<Item = (Partition, DRat)>) -> Self {
        let mut p = Self::zero(r);
        for (k, c) in terms {
            assert_eq!(k.r(), r, "partition arity");
            p.add_term(k, &c);
        }
        p
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Partition, &DRat)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, lambda: &Partition) -> DRat {
        self.coeffs.get(lambda).cloned().unwrap_or_else(DRat::zero)
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().map(Partition::weight).max()
    }

    pub fn add_term(&mut self, k: Partition, c: &DRat) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(k) {
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

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &SymPoly, c: &DRat) {
        assert_eq!(self.r, other.r, "arity");
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.coeffs {
            self.add_term(k.clone(), &(v * c));
        }
    }

    pub fn add(&self, other: &SymPoly) -> SymPoly {
        let mut out = self.clone();
        out.add_scaled(other, &DRat::one());
        out
    }

    pub fn sub(&self, other: &SymPoly) -> SymPoly {
        let mut out = self.clone();
        out.add_scaled(other, &DRat::from_int(-1));
        out
    }

    pub fn neg(&self) -> SymPoly {
        self.scale(&DRat::from_int(-1))
    }

    pub fn scale(&self, c: &DRat) -> SymPoly {
        if c.is_zero() {
            return SymPoly::zero(self.r);
        }
        SymPoly {
            r: self.r,
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, v)| (k.clone(), v * c))
                .collect(),
        }
    }

    pub fn try_scale_inv(&self, c: &DRat) -> Result<SymPoly> {
        Ok(self.scale(&c.inv()?))
    }

    /// Sum of `z^n` over every orbit, weighted by the coefficients.
    pub fn expand(&self) -> MPoly {
        let mut terms = Vec::new();
        for (k, c) in &self.coeffs {
            for e in k.orbit() {
                terms.push((e, c.clone()));
            }
        }
        MPoly::from_terms(self.r, terms)
    }

    /// Inverse of [`SymPoly::expand`]; fails when `g` is not symmetric.
    ///
    /// Symmetry is checked by orbit constancy: every monomial in the orbit of
    /// a sorted exponent vector must be present with the same coefficient.
    pub fn collect(g: &MPoly) -> Result<SymPoly> {
        let r = g.r();
        let mut groups: HashMap<Vec<u32>, (DRat, u64)> = HashMap::new();
        for (m, c) in g.terms() {
            let mut key = m.exponents().to_vec();
            key.sort_unstable_by(|a, b| b.cmp(a));
            match groups.get_mut(&key) {
                None => {
                    groups.insert(key, (c.clone(), 1));
                }
                Some((c0, n)) => {
                    if c0 != c {
                        return Err(Error::NotSymmetric);
                    }
                    *n += 1;
                }
            }
        }
        let mut out = SymPoly::zero(r);
        for (key, (c, n)) in groups {
            let k = Partition::new(key).expect("sorted exponents form a partition");
            if n != k.orbit_size() {
                return Err(Error::NotSymmetric);
            }
            out.coeffs.insert(k, c);
        }
        Ok(out)
    }

    pub fn mul(&self, other: &SymPoly) -> Result<SymPoly> {
        if self.r != other.r {
            return Err(Error::ArityMismatch {
                left: self.r,
                right: other.r,
            });
        }
        if self.is_zero() || other.is_zero() {
            return Ok(SymPoly::zero(self.r));
        }
        // multiply the expansion of one factor by basis elements of the other,
        // keeping only sorted result exponents
        let f = self.expand();
        let mut out = SymPoly::zero(self.r);
        for (k, c) in &other.coeffs {
            let g = SymPoly::monomial(k).expand();
            let prod = f.mul(&g)?;
            let mut sorted = MPoly::zero(self.r);
            for (m, v) in prod.terms() {
                if m.exponents().windows(2).all(|w| w[0] >= w[1]) {
                    sorted.add_term(m.clone(), v);
                }
            }
            for (m, v) in sorted.terms() {
                let key = Partition::new(m.exponents().to_vec()).expect("sorted");
                out.add_term(key, &(v * c));
            }
        }
        Ok(out)
    }

    pub fn eval(&self, point: &[DRat]) -> Result<DRat> {
        if point.len() != self.r {
            return Err(Error::ArityMismatch {
                left: self.r,
                right: point.len(),
            });
        }
        let max_deg = self.coeffs.keys().map(|k| k.parts()[0]).max().unwrap_or(0) as usize;
        let powers: Vec<Vec<DRat>> = point
            .iter()
            .map(|x| {
                let mut v = Vec::with_capacity(max_deg + 1);
                v.push(DRat::one());
                for i in 0..max_deg {
                    let next = &v[i] * x;
                    v.push(next);
                }
                v
            })
            .collect();
        let mut acc = DRat::zero();
        for (k, c) in &self.coeffs {
            let mut m_val = DRat::zero();
            for e in k.orbit() {
                let mut t = DRat::one();
                for (j, &ej) in e.iter().enumerate() {
                    if ej > 0 {
                        t = &t * &powers[j][ej as usize];
                    }
                }
                m_val += &t;
            }
            acc += &(c * &m_val);
        }
        Ok(acc)
    }

    pub fn homogeneous_part(&self, w: u32) -> SymPoly {
        SymPoly {
            r: self.r,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(k, _)| k.weight() == w)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn truncate(&self, max: u32) -> SymPoly {
        SymPoly {
            r: self.r,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(k, _)| k.weight() <= max)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Evaluates every coefficient at `d = d0`.
    pub fn specialize(&self, d0: &BigRat) -> Result<SymPoly> {
        let mut out = SymPoly::zero(self.r);
        for (k, c) in &self.coeffs {
            out.add_term(k.clone(), &c.specialize(d0)?);
        }
        Ok(out)
    }

    /// `f(1 + z_1, …, 1 + z_r)`.
    pub fn shift_by_ones(&self) -> Result<SymPoly> {
        SymPoly::collect(&self.expand().shift_all(&DRat::one()))
    }

    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (k, c)) in self.coeffs.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let basis = if k.is_zero() {
                None
            } else {
                let parts: Vec<String> = k.parts().iter().map(u32::to_string).collect();
                Some(format!("m_{{({})}}", parts.join(",")))
            };
            match basis {
                None => out.push_str(&abs.to_latex()),
                Some(b) => {
                    if !abs.is_one() {
                        let (num, _) = abs.integer_parts();
                        let multi = abs.is_polynomial()
                            && num
                                .iter()
                                .filter(|c| !num_traits::Zero::is_zero(*c))
                                .count()
                                > 1;
                        if multi {
                            out.push_str(&format!("({}) ", abs.to_latex()));
                        } else {
                            out.push_str(&abs.to_latex());
                            out.push(' ');
                        }
                    }
                    out.push_str(&b);
                }
            }
        }
        out
    }

    pub fn to_repr(&self) -> SymPolyRepr {
        SymPolyRepr {
            r: self.r,
            basis: "m".into(),
            terms: terms_repr(self.coeffs.iter().rev()),
            jack_basis: None,
        }
    }

    pub fn from_repr(repr: &SymPolyRepr) -> Result<SymPoly> {
        if repr.basis != "m" {
            return Err(Error::InvalidInput(format!(
                "unsupported basis {:?}",
                repr.basis
            )));
        }
        let mut out = SymPoly::zero(repr.r);
        for t in &repr.terms {
            let k = Partition::padded(&t.partition, repr.r)?;
            out.add_term(k, &t.coeff);
        }
        Ok(out)
    }
}

pub(crate) fn terms_repr<'a>(
    it: impl Iterator<Item = (&'a Partition, &'a DRat)>,
) -> Vec<SymTermRepr> {
    it.map(|(k, c)| SymTermRepr {
        partition: k.parts().to_vec(),
        coeff: c.clone(),
    })
    .collect()
}

/// Wire form of a symmetric polynomial.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct SymPolyRepr {
    pub r: usize,
    pub basis: String,
    pub terms: Vec<SymTermRepr>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub jack_basis: Option<Vec<SymTermRepr>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct SymTermRepr {
    pub partition: Vec<u32>,
    pub coeff: DRat,
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (i, (k, c)) in self.coeffs.iter().rev().enumerate() {
            fmt_term_coeff(c, i == 0, !k.is_zero(), &mut out);
            if !k.is_zero() {
                out.push_str(&format!("m_{k}"));
            }
        }
        f.write_str(&out)
    }
}

/// `e_{r,k}` as `m_{(1^k, 0^{r-k})}`.
pub fn elementary_e(r: usize, k: usize) -> Result<SymPoly> {
    if k > r {
        return Err(Error::IndexOutOfRange { index: k, max: r });
    }
    let parts: Vec<u32> = (0..r).map(|i| u32::from(i < k)).collect();
    Ok(SymPoly::monomial(&Partition::new(parts)?))
}

/// `|z| = z_1 + … + z_r`.
pub fn power_sum_p1(r: usize) -> SymPoly {
    elementary_e(r, 1.min(r)).expect("k <= r")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn expand_examples() {
        let z1z2 = MPoly::from_terms(2, [(vec![1, 1], DRat::one())]);
        assert_eq!(SymPoly::monomial(&p(&[1, 1])).expand(), z1z2);
        let sq = MPoly::from_terms(2, [(vec![2, 0], DRat::one()), (vec![0, 2], DRat::one())]);
        assert_eq!(SymPoly::monomial(&p(&[2, 0])).expand(), sq);
    }

    #[test]
    fn collect_rejects_asymmetric() {
        let z1 = MPoly::var(2, 0).unwrap();
        assert_eq!(SymPoly::collect(&z1), Err(Error::NotSymmetric));
        let lopsided = MPoly::from_terms(
            2,
            [(vec![2, 0], DRat::one()), (vec![0, 2], DRat::from_int(2))],
        );
        assert_eq!(SymPoly::collect(&lopsided), Err(Error::NotSymmetric));
    }

    #[test]
    fn elementary_examples() {
        assert_eq!(elementary_e(2, 1).unwrap(), SymPoly::monomial(&p(&[1, 0])));
        assert_eq!(
            elementary_e(3, 3).unwrap(),
            SymPoly::monomial(&p(&[1, 1, 1]))
        );
        assert_eq!(elementary_e(3, 0).unwrap(), SymPoly::one(3));
        assert!(matches!(
            elementary_e(2, 3),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn products_in_m_basis() {
        // m_1 * m_1 = m_2 + 2 m_11
        let m1 = SymPoly::monomial(&p(&[1, 0]));
        let expected = SymPoly::from_terms(
            2,
            [(p(&[2, 0]), DRat::one()), (p(&[1, 1]), DRat::from_int(2))],
        );
        assert_eq!(m1.mul(&m1).unwrap(), expected);
    }

    #[test]
    fn text_and_latex() {
        let c = DRat::new(
            crate::scalars::DPoly::from_ints(&[0, 2]),
            crate::scalars::DPoly::from_ints(&[2, 1]),
        )
        .unwrap();
        let f = SymPoly::from_terms(2, [(p(&[2, 0]), DRat::one()), (p(&[1, 1]), c)]);
        assert_eq!(f.to_latex(), "m_{(2,0)} + \\frac{2d}{d+2} m_{(1,1)}");
        assert_eq!(f.to_string(), "m_(2,0) + (2d/(d+2))*m_(1,1)");
    }
}
